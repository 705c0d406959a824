#include "richwords/richness.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <unordered_set>

#include "richwords/error.hpp"
#include "richwords/pal_index.hpp"

namespace richwords {
namespace {

struct PalEnds {
  bool rich = false;
  Word lpp;
  Word lps;
};

PalEnds pal_ends(const Word& w) {
  if (w.empty()) return {};
  return {is_rich(w), lpp(w), lps(w)};
}

bool e1_holds(const Word& u, const PalEnds& eu, const Word& v, const PalEnds& ev) {
  return !u.empty() && !v.empty() && u != v && eu.rich && ev.rich && eu.lpp == ev.lpp && eu.lps == ev.lps;
}

bool e2_holds(const Word& u, const PalEnds& eu, const Word& v, const PalEnds& ev) {
  return !u.empty() && !v.empty() && u != reverse(v) && eu.rich && ev.rich && eu.lps == ev.lpp &&
         ev.lps == eu.lpp;
}

std::size_t common_prefix_length(std::string_view a, std::string_view b) {
  return static_cast<std::size_t>(std::ranges::mismatch(a, b).in1 - a.begin());
}

Word repeat(const Word& w, std::size_t times) {
  std::string s;
  s.reserve(w.size() * times);
  for (std::size_t i = 0; i < times; ++i) s += w.str();
  return Word(std::move(s));
}

}  // namespace

bool check_e1(const Word& u, const Word& v) { return e1_holds(u, pal_ends(u), v, pal_ends(v)); }

bool check_e2(const Word& u, const Word& v) { return e2_holds(u, pal_ends(u), v, pal_ends(v)); }

E2Witness extract_e2_witness(const Word& w) {
  const PalIndex index(w);
  if (index.is_rich()) throw PreconditionError("'" + w.str() + "' is rich; no E2 witness exists");

  // Step 1: shortest non-palindromic complete return word to a palindrome.
  std::optional<std::tuple<std::size_t, std::size_t, Word>> best;  // (|r|, start, r)
  Word best_p;
  for (const Word& p : index.palindromes()) {
    const auto occ = occurrences(w, p);
    for (std::size_t k = 1; k < occ.size(); ++k) {
      const std::size_t start = occ[k - 1];
      Word r = w.substr(start, occ[k] - start + p.size());
      if (is_palindrome(r)) continue;
      auto key = std::make_tuple(r.size(), start, std::move(r));
      if (!best || key < *best) {
        best = std::move(key);
        best_p = p;
      } else if (key == *best && p.size() > best_p.size()) {
        best_p = p;
      }
    }
  }
  if (!best) throw VerificationFailure("non-rich word '" + w.str() + "' has no non-palindromic complete return word");
  const Word& r = std::get<2>(*best);
  const char t = r.front();

  // Step 2: t q is a prefix of r and reverse(q) t a suffix of r, i.e. t q is
  // a common prefix of r and reverse(r). Both suffix conditions (q~ t and
  // y q~ t) are taken on r; the construction read literally says "of v",
  // which cannot be meant since v is not built yet.
  const Word rr = reverse(r);
  const std::size_t q_len = common_prefix_length(r.view(), rr.view()) - 1;
  const Word q = r.substr(1, q_len);
  const char x = r[1 + q_len];
  const char y = rr[1 + q_len];

  E2Witness out{{}, {}, r, best_p, q, 0};
  if (q.empty()) {
    out.z = x != t ? x : y;
    out.u = r.substr(0, r.view().find(out.z) + 1);
    out.v = r.substr(r.view().rfind(out.z));
  } else {
    // Leftmost palindromic factor of f with prefix reverse(q), suffix q, longer than q.
    const Word f = r.substr(1, r.size() - 2);
    const Word qt = reverse(q);
    std::optional<Word> inner;
    for (std::size_t s = 0; !inner && s + q.size() < f.size(); ++s) {
      if (!f.view().substr(s).starts_with(qt.view())) continue;
      for (std::size_t len = q.size() + 1; s + len <= f.size(); ++len) {
        const std::string_view cand = f.view().substr(s, len);
        if (cand.ends_with(q.view()) && is_palindrome(cand)) {
          inner = f.substr(s, len);
          break;
        }
      }
    }
    if (!inner)
      throw VerificationFailure("no palindrome framed by reverse(q) and q inside return word '" + r.str() + "'");
    out.z = (*inner)[q.size()];
    const Word head = qt + Word(std::string(1, out.z));
    const Word tail = Word(std::string(1, out.z)) + q;
    const auto head_at = r.view().find(head.view());
    const auto tail_at = r.view().rfind(tail.view());
    if (head_at == std::string_view::npos || tail_at == std::string_view::npos)
      throw VerificationFailure("return word '" + r.str() + "' lacks the framing factors for z = " + out.z);
    out.u = r.substr(0, head_at + head.size());
    out.v = r.substr(tail_at);
  }

  if (!check_e2(out.u, out.v) || !w.contains(out.u) || !w.contains(out.v))
    throw VerificationFailure("extracted pair (" + out.u.str() + ", " + out.v.str() + ") from '" + w.str() +
                              "' does not satisfy E2");
  return out;
}

std::optional<Word> binary_nonrich_witness(const Word& w, const Alphabet& alphabet) {
  if (alphabet.size() != 2)
    throw PreconditionError("binary witness needs a two-letter alphabet, got '" + alphabet.letters() + "'");
  if (!alphabet.contains(w))
    throw InvalidInput("word '" + w.str() + "' is not over alphabet '" + alphabet.letters() + "'");
  const char a = alphabet.letter(0);
  const char b = alphabet.letter(1);

  std::unordered_set<std::string_view> factor_set;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t len = 1; i + len <= w.size(); ++len) factor_set.insert(w.view().substr(i, len));
  auto has = [&](char first, const std::string& middle, char last) {
    return factor_set.contains(std::string(1, first) + middle + last);
  };

  std::vector<Word> candidates;
  for (std::string_view f : factor_set)
    if (!is_palindrome(f)) candidates.emplace_back(std::string(f));
  std::ranges::sort(candidates, [](const Word& l, const Word& r) {
    return l.size() != r.size() ? l.size() < r.size() : l < r;
  });
  for (const Word& q : candidates) {
    const std::string& fwd = q.str();
    const std::string bwd = reverse(q).str();
    if (has(a, fwd, a) && has(b, fwd, b) && has(a, bwd, b) && has(b, bwd, a)) return q;
  }
  return std::nullopt;
}

std::optional<Word> binary_nonrich_witness(const Word& w) {
  const Alphabet letters = Alphabet::of(w);
  if (letters.size() > 2)
    throw InvalidInput("binary witness needs a word over at most two letters, '" + w.str() + "' has " +
                       std::to_string(letters.size()));
  // Fewer than two letters: a q a and b q b cannot both occur.
  if (letters.size() < 2) return std::nullopt;
  return binary_nonrich_witness(w, letters);
}

std::string_view to_string(CompatStatus status) noexcept {
  switch (status) {
    case CompatStatus::WitnessFound: return "witness-found";
    case CompatStatus::IncompatibleE1: return "incompatible-e1";
    case CompatStatus::IncompatibleE2: return "incompatible-e2";
    case CompatStatus::BoundExhausted: return "bound-exhausted";
  }
  return "unknown";
}

CompatVerdict compat_search(const Word& u, const Word& v, std::size_t max_len, const std::optional<Alphabet>& alphabet) {
  if (!is_rich(u)) throw PreconditionError("'" + u.str() + "' is not rich");
  if (!is_rich(v)) throw PreconditionError("'" + v.str() + "' is not rich");
  const std::size_t min_len = std::max(u.size(), v.size());
  if (max_len < min_len)
    throw PreconditionError("max length " + std::to_string(max_len) + " is shorter than the inputs");
  const Alphabet letters = alphabet ? *alphabet : Alphabet::of({&u, &v});
  if (!letters.contains(u) || !letters.contains(v))
    throw InvalidInput("inputs are not over alphabet '" + letters.letters() + "'");

  CompatVerdict verdict;
  verdict.bound = max_len;

  // Factors of u and v, longest first so the pair (u, v) itself is tried first.
  auto ordered_factors = [](const Word& w) {
    std::vector<Word> out;
    for (const Word& f : all_factors(w)) out.push_back(f);
    std::ranges::sort(out, [](const Word& l, const Word& r) {
      return l.size() != r.size() ? l.size() > r.size() : l < r;
    });
    return out;
  };
  const auto fu = ordered_factors(u);
  const auto fv = ordered_factors(v);
  std::vector<PalEnds> eu, ev;
  for (const Word& f : fu) eu.push_back(pal_ends(f));
  for (const Word& f : fv) ev.push_back(pal_ends(f));
  for (std::size_t i = 0; i < fu.size(); ++i) {
    for (std::size_t j = 0; j < fv.size(); ++j) {
      std::optional<CompatStatus> hit;
      if (e1_holds(fu[i], eu[i], fv[j], ev[j])) hit = CompatStatus::IncompatibleE1;
      else if (e2_holds(fu[i], eu[i], fv[j], ev[j])) hit = CompatStatus::IncompatibleE2;
      if (hit) {
        verdict.status = *hit;
        verdict.conflict_u = fu[i];
        verdict.conflict_v = fv[j];
        return verdict;
      }
    }
  }

  if (min_len == 0) {
    verdict.status = CompatStatus::WitnessFound;
    verdict.witness = Word();
    return verdict;
  }

  // Iterative deepening keeps the first hit both shortest and lexicographically least.
  for (std::size_t target = min_len; target <= max_len; ++target) {
    std::optional<Word> found;
    auto visit = [&](const PalIndex& index, std::string_view word) {
      if (found || !index.is_rich()) return false;
      if (word.size() < target) return true;
      if (word.find(u.view()) != std::string_view::npos && word.find(v.view()) != std::string_view::npos)
        found = Word(std::string(word));
      return false;
    };
    walk_words(letters, target, visit);
    if (found) {
      verdict.status = CompatStatus::WitnessFound;
      verdict.witness = std::move(found);
      return verdict;
    }
  }
  verdict.status = CompatStatus::BoundExhausted;
  return verdict;
}

bool return_words_palindromic(const Word& w) {
  for (const Word& p : PalIndex(w).palindromes()) {
    const auto occ = occurrences(w, p);
    for (std::size_t k = 1; k < occ.size(); ++k)
      if (!is_palindrome(w.view().substr(occ[k - 1], occ[k] - occ[k - 1] + p.size()))) return false;
  }
  return true;
}

std::int64_t complexity_identity_gap(const Word& w, std::size_t n) {
  if (n >= w.size())
    throw PreconditionError("gap index " + std::to_string(n) + " must be below the word length " +
                            std::to_string(w.size()));
  const PalIndex index(w);
  const auto c = [&](std::size_t k) { return static_cast<std::int64_t>(factors(w, k).size()); };
  const auto p = [&](std::size_t k) { return static_cast<std::int64_t>(index.count_of_length(k)); };
  return c(n + 1) - c(n) + 2 - p(n + 1) - p(n);
}

std::size_t default_k_max(const Word& period) { return 3 * period.size(); }

bool periodic_reversal_closed(const Word& period) {
  if (period.empty()) throw InvalidInput("period must be non-empty");
  // Closure at lengths >= |period| already forces it at every length; 2|period| is a margin.
  const Word window = repeat(period, 4);
  for (std::size_t n = 1; n <= 2 * period.size(); ++n) {
    const auto f = factors(window, n);
    for (const Word& x : f)
      if (!f.contains(reverse(x))) return false;
  }
  return true;
}

BrlekReutenauerSum brlek_reutenauer_sum(const Word& period, std::size_t k_max) {
  if (period.empty()) throw InvalidInput("period must be non-empty");
  if (!periodic_reversal_closed(period))
    throw PreconditionError("the language of (" + period.str() + ")^omega is not closed under reversal");
  const std::size_t len = period.size();

  auto window = [&](std::size_t n, std::size_t extra) { return repeat(period, (n + len - 1) / len + 2 + extra); };
  std::vector<std::int64_t> c, p;
  for (std::size_t n = 0; n <= k_max + 1; ++n) {
    const auto f = factors(window(n, 0), n);
    c.push_back(static_cast<std::int64_t>(f.size()));
    p.push_back(std::ranges::count_if(f, [](const Word& x) { return is_palindrome(x); }));
  }
  if (factors(window(k_max + 1, 1), k_max + 1).size() != static_cast<std::size_t>(c.back()))
    throw VerificationFailure("factor set of (" + period.str() + ")^omega did not stabilize");

  BrlekReutenauerSum out;
  out.k_max = k_max;
  for (std::size_t n = 0; n <= k_max; ++n) {
    const std::int64_t s = c[n + 1] - c[n] + 2 - p[n + 1] - p[n];
    out.summands.push_back(s);
    out.total += s;
    out.partial_sums.push_back(out.total);
  }
  out.saturated = k_max >= 2 * len &&
                  std::all_of(out.summands.begin() + static_cast<std::ptrdiff_t>(len), out.summands.end(),
                              [](std::int64_t s) { return s == 0; });
  if (out.saturated) {
    if (out.total % 2 != 0 || out.total < 0)
      throw VerificationFailure("defect series of (" + period.str() + ")^omega sums to " + std::to_string(out.total));
    out.defect_estimate = static_cast<std::size_t>(out.total / 2);
  }
  return out;
}

namespace {

struct MinimalNonrichCollector {
  const Alphabet* alphabet;
  std::vector<Word> found;

  // Only rich words are expanded, so a non-rich word here has a rich prefix
  // of length |w| - 1 and only the suffix of that length remains to check.
  bool operator()(const PalIndex& index, std::string_view word) {
    if (index.is_rich()) return true;
    const Word w{std::string(word)};
    if (is_rich(w.substr(1))) found.push_back(canonical_form(w, *alphabet));
    return false;
  }
};

}  // namespace

std::vector<Word> minimal_nonrich(int d, std::size_t max_n, unsigned threads) {
  if (d < 2) throw PreconditionError("minimal non-rich words need at least two letters");
  if (max_n < 1) throw PreconditionError("maximal length must be at least 1");
  const Alphabet alphabet = Alphabet::standard(d);
  std::vector<Word> result;
  for (auto& shard : walk_words_sharded(alphabet, max_n, MinimalNonrichCollector{&alphabet, {}}, threads))
    std::ranges::move(shard.found, std::back_inserter(result));
  std::ranges::sort(result, [](const Word& l, const Word& r) {
    return l.size() != r.size() ? l.size() < r.size() : l < r;
  });
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::vector<RichFactorRow> rich_factor_table(const Word& w) {
  std::vector<RichFactorRow> rows;
  std::unordered_set<std::string> seen;
  for (std::size_t start = 0; start < w.size(); ++start) {
    for (std::size_t len = 1; start + len <= w.size(); ++len) {
      Word u = w.substr(start, len);
      if (!is_rich(u)) break;  // every extension of a non-rich word is non-rich
      if (!seen.insert(u.str()).second) continue;
      rows.push_back({u, lpp(u), lps(u)});
    }
  }
  return rows;
}

std::string format_row(const RichFactorRow& row) {
  return row.u.str() + " (" + row.lpp.str() + ", " + row.lps.str() + ")";
}

}  // namespace richwords
