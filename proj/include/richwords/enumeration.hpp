#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "richwords/walk.hpp"
#include "richwords/word.hpp"

namespace richwords {

struct CountRow {
  std::size_t n = 0;
  std::uint64_t count = 0;
  std::int64_t millis = 0;
};

/// Number of rich words of each length over a d-letter alphabet.
struct CountTable {
  int d = 0;
  std::vector<CountRow> rows;
  bool symmetry_reduced = false;
};

/// Exact R_d(n) for n = 0..n_max by a pruned depth-first walk (every prefix
/// of a rich word is rich). Each row is an independent walk to depth n, so
/// its `millis` is the cost of that count alone. With `symmetry_reduced`,
/// counts orbit representatives under letter permutations and reversal.
CountTable count_rich(int d, std::size_t n_max, bool symmetry_reduced = false,
                      unsigned threads = default_threads());

/// Rich words of length exactly n over the standard d-letter alphabet, in
/// lexicographic order; only canonical orbit representatives when
/// `symmetry_reduced`.
std::vector<Word> enumerate_rich(int d, std::size_t n, bool symmetry_reduced = false,
                                 unsigned threads = default_threads());

/// Exponent sequences of a binary word a^{n_1} b^{m_1} ... a^{n_k} b^{m_k}.
struct GssSpec {
  std::vector<std::size_t> n_seq;
  std::vector<std::size_t> m_seq;
};

/// Builds a^{n_1} b^{m_1} a^{n_2} b^{m_2} ... a^{n_k} b^{m_k} over {a, b}.
/// Throws InvalidInput if the sequences differ in length, either one
/// decreases, or an exponent other than n_1 and m_k is zero.
Word gss_word(const GssSpec& spec);

/// Distinct words of length n produced by the construction, deduplicated by
/// the materialized word.
std::set<Word> gss_words(std::size_t n);
std::uint64_t gss_count(std::size_t n);

}  // namespace richwords
