#include "richwords/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <string>

#include "richwords/error.hpp"

namespace richwords {

unsigned default_threads() {
  if (const char* env = std::getenv("RICHWORDS_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

void require_alphabet_size(int d) {
  if (d < 1) throw InvalidInput("alphabet size must be at least 1, got " + std::to_string(d));
}

// Counts rich words of length exactly `target`.
struct LevelCounter {
  std::size_t target;
  bool reduced;
  const Alphabet* alphabet;
  std::uint64_t count = 0;

  bool operator()(const PalIndex& index, std::string_view word) {
    if (!index.is_rich()) return false;
    if (word.size() == target) {
      if (!reduced || canonical_form(Word(std::string(word)), *alphabet).view() == word) ++count;
      return false;
    }
    return true;
  }
};

struct LevelCollector {
  std::size_t target;
  bool reduced;
  const Alphabet* alphabet;
  std::vector<Word> words;

  bool operator()(const PalIndex& index, std::string_view word) {
    if (!index.is_rich()) return false;
    if (word.size() == target) {
      Word w{std::string(word)};
      if (!reduced || canonical_form(w, *alphabet) == w) words.push_back(std::move(w));
      return false;
    }
    return true;
  }
};

}  // namespace

CountTable count_rich(int d, std::size_t n_max, bool symmetry_reduced, unsigned threads) {
  require_alphabet_size(d);
  const Alphabet alphabet = Alphabet::standard(d);
  CountTable table{d, {}, symmetry_reduced};
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t count = 0;
    if (n == 0) {
      count = 1;
    } else {
      for (const auto& shard :
           walk_words_sharded(alphabet, n, LevelCounter{n, symmetry_reduced, &alphabet}, threads))
        count += shard.count;
    }
    const auto millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    table.rows.push_back({n, count, static_cast<std::int64_t>(millis)});
  }
  return table;
}

std::vector<Word> enumerate_rich(int d, std::size_t n, bool symmetry_reduced, unsigned threads) {
  require_alphabet_size(d);
  if (n == 0) return {Word()};
  const Alphabet alphabet = Alphabet::standard(d);
  std::vector<Word> result;
  for (auto& shard : walk_words_sharded(alphabet, n, LevelCollector{n, symmetry_reduced, &alphabet, {}}, threads))
    std::ranges::move(shard.words, std::back_inserter(result));
  return result;
}

Word gss_word(const GssSpec& spec) {
  if (spec.n_seq.size() != spec.m_seq.size())
    throw InvalidInput("GSS exponent sequences must have equal length");
  if (!std::ranges::is_sorted(spec.n_seq) || !std::ranges::is_sorted(spec.m_seq))
    throw InvalidInput("GSS exponent sequences must be non-decreasing");
  // A zero inside the word would merge neighbouring blocks and break the
  // monotone shape; only n_1 and m_k may vanish.
  const std::size_t k = spec.n_seq.size();
  for (std::size_t i = 0; i < k; ++i)
    if ((i > 0 && spec.n_seq[i] == 0) || (i + 1 < k && spec.m_seq[i] == 0))
      throw InvalidInput("GSS exponents other than n_1 and m_k must be positive");
  std::string s;
  for (std::size_t i = 0; i < spec.n_seq.size(); ++i) {
    s.append(spec.n_seq[i], 'a');
    s.append(spec.m_seq[i], 'b');
  }
  return Word(std::move(s));
}

std::set<Word> gss_words(std::size_t n) {
  // Blocks are (a, b) with a > 0 except in the first block and b > 0 except
  // in the last one, matching gss_word's validation.
  std::set<Word> words;
  std::string current;
  std::function<void(std::size_t, std::size_t, std::size_t)> extend = [&](std::size_t remaining, std::size_t min_a,
                                                                           std::size_t min_b) {
    if (remaining == 0) {
      words.insert(Word(current));
      return;
    }
    for (std::size_t a = std::max<std::size_t>(min_a, current.empty() ? 0 : 1); a <= remaining; ++a) {
      for (std::size_t b = min_b; a + b <= remaining; ++b) {
        if (a + b == 0 || (b == 0 && a < remaining)) continue;
        const std::size_t mark = current.size();
        current.append(a, 'a');
        current.append(b, 'b');
        extend(remaining - a - b, a, b);
        current.resize(mark);
      }
    }
  };
  extend(n, 0, 0);
  return words;
}

std::uint64_t gss_count(std::size_t n) { return gss_words(n).size(); }

}  // namespace richwords
