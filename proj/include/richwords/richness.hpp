#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "richwords/walk.hpp"
#include "richwords/word.hpp"

namespace richwords {

/// u != v, both rich, lpp(u) = lpp(v) and lps(u) = lps(v). No rich word
/// contains two such factors.
bool check_e1(const Word& u, const Word& v);

/// u != reverse(v), both rich, lps(u) = lpp(v) and lps(v) = lpp(u). No rich
/// word contains two such factors either.
bool check_e2(const Word& u, const Word& v);

/// Certificate that a word is not rich: factors u, v satisfying check_e2,
/// together with the intermediate objects of the construction that found
/// them.
struct E2Witness {
  Word u;
  Word v;
  Word r;  // shortest non-palindromic complete return word to a palindrome
  Word p;  // the palindrome r returns to
  Word q;  // longest q with t q a prefix and reverse(q) t a suffix of r
  char z = 0;
};

/// Extracts an E2 pair from a non-rich word.
///
/// 1. r := shortest non-palindromic complete return word (in w) to a
///    palindromic factor p; ties go to the leftmost occurrence, then the
///    lexicographically least word. t := first letter of r.
/// 2. q := longest word with t q a prefix of r and q~ t a suffix of r;
///    x, y are the letters with t q x a prefix and y q~ t a suffix of r.
/// 3. q empty: z := x if x != t, else y. u is the shortest prefix of r
///    ending with z, v the shortest suffix of r starting with z.
/// 4. q non-empty: in f = r without its first and last letter, take the
///    leftmost palindromic factor w'' with prefix q~, suffix q and
///    |w''| > |q|; z is the letter after that prefix q~. u is the shortest
///    prefix of r ending with q~ z, v the shortest suffix of r starting
///    with z q.
///
/// Throws PreconditionError for rich input, VerificationFailure if the
/// result does not satisfy check_e2.
E2Witness extract_e2_witness(const Word& w);

/// For a word over exactly two letters a < b: the shortest (then least)
/// non-palindromic q with a q a, b q b, a q~ b and b q~ a all factors of w,
/// or nullopt. Such q exists exactly when w is not rich.
///
/// The one-argument form infers the alphabet from w: a word over a single
/// letter yields nullopt, more than two letters throw InvalidInput. A
/// declared alphabet must have exactly two letters (PreconditionError).
std::optional<Word> binary_nonrich_witness(const Word& w);
std::optional<Word> binary_nonrich_witness(const Word& w, const Alphabet& alphabet);

enum class CompatStatus { WitnessFound, IncompatibleE1, IncompatibleE2, BoundExhausted };

std::string_view to_string(CompatStatus status) noexcept;

struct CompatVerdict {
  CompatStatus status = CompatStatus::BoundExhausted;
  std::optional<Word> witness;  // set iff WitnessFound
  // The factor pair (of u and of v respectively) satisfying E1/E2, set iff
  // the status is IncompatibleE1/E2.
  std::optional<Word> conflict_u;
  std::optional<Word> conflict_v;
  std::size_t bound = 0;
};

/// Semi-decision of whether rich words u and v are factors of a common rich
/// word.
///
/// First looks for a factor u' of u and v' of v satisfying E1 or E2 (the
/// pair (u, v) itself is tried first; a hit proves incompatibility). Then
/// searches rich words of length max(|u|, |v|)..max_len over `alphabet`
/// (default: the letters of u and v) for the shortest, then
/// lexicographically least, superword containing both.
///
/// Throws PreconditionError if u or v is not rich or max_len < max(|u|, |v|).
CompatVerdict compat_search(const Word& u, const Word& v, std::size_t max_len,
                            const std::optional<Alphabet>& alphabet = std::nullopt);

/// For every palindromic factor p of w, every complete return word of p in
/// w is a palindrome.
bool return_words_palindromic(const Word& w);

/// C(n+1) - C(n) + 2 - P(n+1) - P(n) over the factors of the finite word w.
/// Requires n < |w|.
std::int64_t complexity_identity_gap(const Word& w, std::size_t n);

/// Summands of the defect series for the periodic word period^omega.
struct BrlekReutenauerSum {
  std::vector<std::int64_t> summands;      // index n = 0..k_max
  std::vector<std::int64_t> partial_sums;  // running totals of summands
  std::int64_t total = 0;
  std::optional<std::size_t> defect_estimate;  // total / 2 when saturated
  bool saturated = false;
  std::size_t k_max = 0;
};

/// Default series length for a period: 3 |period|.
std::size_t default_k_max(const Word& period);

/// Whether the language of period^omega is closed under reversal.
bool periodic_reversal_closed(const Word& period);

/// Accumulates C(n+1) - C(n) + 2 - P(n+1) - P(n) of period^omega for
/// n = 0..k_max. Factors of length <= n of the periodic word are read from
/// period^(ceil(n / |period|) + 2).
///
/// `saturated` holds when k_max >= 2 |period| and every summand with
/// n >= |period| is zero; only then is defect_estimate set.
///
/// Throws InvalidInput on an empty period, PreconditionError when the
/// periodic language is not closed under reversal, VerificationFailure on an
/// odd saturated total.
BrlekReutenauerSum brlek_reutenauer_sum(const Word& period, std::size_t k_max);

/// Non-rich words of length <= max_n over the standard d-letter alphabet
/// whose two maximal proper factors are rich, as canonical orbit
/// representatives (letter permutations and reversal), sorted by length then
/// lexicographically.
std::vector<Word> minimal_nonrich(int d, std::size_t max_n, unsigned threads = default_threads());

/// One row per distinct non-empty rich factor u of w: (u, lpp(u), lps(u)).
struct RichFactorRow {
  Word u;
  Word lpp;
  Word lps;
};

/// Rows ordered by the start of the first occurrence of u, then by length.
std::vector<RichFactorRow> rich_factor_table(const Word& w);

/// Formats a row as "u (lpp, lps)".
std::string format_row(const RichFactorRow& row);

}  // namespace richwords
