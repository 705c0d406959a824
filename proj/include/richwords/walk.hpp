#pragma once

// Depth-first walks over the tree of words with a shared, undoable
// palindromic tree, optionally sharded across threads by fixed-length prefix.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "richwords/pal_index.hpp"

namespace richwords {

/// Thread cap: RICHWORDS_THREADS if set to a positive integer, otherwise the
/// machine's hardware concurrency (at least 1).
unsigned default_threads();

// Visitor contract: `bool visit(const PalIndex& index, std::string_view word)`
// is called for every word of length 1..max_len reached by the walk, in
// lexicographic order of the alphabet. Returning false prunes the subtree.
template <class Visitor>
void walk_words(PalIndex& index, std::string& word, std::size_t max_len, Visitor& visit) {
  if (word.size() >= max_len) return;
  const Alphabet& alphabet = index.alphabet();
  for (int letter = 0; letter < alphabet.size(); ++letter) {
    index.push_index(letter);
    word.push_back(alphabet.letter(letter));
    if (visit(static_cast<const PalIndex&>(index), std::string_view(word))) walk_words(index, word, max_len, visit);
    word.pop_back();
    index.pop();
  }
}

template <class Visitor>
void walk_words(const Alphabet& alphabet, std::size_t max_len, Visitor& visit) {
  PalIndex index(alphabet);
  std::string word;
  walk_words(index, word, max_len, visit);
}

/// Runs the same walk as walk_words, split into independent shards.
///
/// Words up to a small split depth are visited by the first returned visitor;
/// each surviving word at the split depth roots one shard with its own copy
/// of `prototype` and its own index. Shards are returned in lexicographic
/// order of their roots regardless of scheduling, so merging the returned
/// visitors in order is deterministic.
template <class Visitor>
std::vector<Visitor> walk_words_sharded(const Alphabet& alphabet, std::size_t max_len, const Visitor& prototype,
                                        unsigned threads = default_threads()) {
  threads = std::max(1u, threads);
  std::size_t split = 0;
  for (std::size_t roots = 1; split < max_len && roots < 8u * threads; ++split)
    roots *= static_cast<std::size_t>(std::max(1, alphabet.size()));
  if (threads == 1) split = 0;

  std::vector<Visitor> result{prototype};
  std::vector<std::string> roots;
  if (split == 0) {
    roots.emplace_back();
  } else {
    auto collect = [&](const PalIndex& index, std::string_view word) {
      const bool descend = result.front()(index, word);
      if (descend && word.size() == split && split < max_len) roots.emplace_back(word);
      return descend;
    };
    walk_words(alphabet, split, collect);
  }

  result.resize(1 + roots.size(), prototype);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t job = next++; job < roots.size(); job = next++) {
      PalIndex index(alphabet);
      std::string word;
      for (char c : roots[job]) {
        index.push(c);
        word.push_back(c);
      }
      walk_words(index, word, max_len, result[job + 1]);
    }
  };
  {
    std::vector<std::jthread> pool;
    const auto n = std::min<std::size_t>(threads, roots.size());
    for (std::size_t i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
  }
  return result;
}

}  // namespace richwords
