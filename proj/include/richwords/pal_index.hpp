#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "richwords/word.hpp"

namespace richwords {

/// Palindromic tree (eertree) over a growing word.
///
/// Every distinct non-empty palindromic factor of the processed prefix owns
/// exactly one node. Appending a letter creates at most one node; pop()
/// reverts the most recent append exactly, so a single index can follow a
/// depth-first walk over a tree of words.
///
/// Nodes are stored as (length, end position of first occurrence) handles;
/// palindromes are only materialized on request.
class PalIndex {
 public:
  struct Node {
    std::int32_t length;
    std::int32_t suffix_link;  // node of the longest proper palindromic suffix
    std::int32_t first_end;    // end position (inclusive) where it first occurred
  };

  static constexpr std::int32_t kImaginaryRoot = 0;  // length -1
  static constexpr std::int32_t kEmptyRoot = 1;      // length 0, the empty word

  explicit PalIndex(Alphabet alphabet);
  /// Index over `w` with the alphabet inferred from `w`.
  explicit PalIndex(const Word& w);
  PalIndex(const Word& w, Alphabet alphabet);

  /// Appends a letter given by its alphabet index. Returns true iff a new
  /// palindrome node was created.
  bool push_index(int letter);
  /// Appends `c`; throws InvalidInput if `c` is not in the alphabet.
  bool push(char c);
  /// Reverts the last push. Undefined if nothing was pushed.
  void pop();

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t length() const noexcept { return text_.size(); }
  Word host() const;

  /// Distinct non-empty palindromic factors of the processed prefix.
  std::size_t node_count() const noexcept { return nodes_.size() - 2; }
  /// Distinct palindromic factors including the empty word.
  std::size_t palindrome_count() const noexcept { return nodes_.size() - 1; }
  /// |prefix| + 1 - palindrome_count().
  std::size_t defect() const noexcept { return text_.size() - node_count(); }
  bool is_rich() const noexcept { return defect() == 0; }

  /// Length of the longest palindromic suffix of the processed prefix.
  std::size_t lps_length() const noexcept { return static_cast<std::size_t>(nodes_[last_].length); }
  /// Length of the longest palindromic suffix of the prefix of length k, 1 <= k <= length().
  std::size_t lps_length_at(std::size_t k) const {
    return static_cast<std::size_t>(nodes_[history_.at(k - 1).lps_node].length);
  }
  /// Whether the append at position i (0-based) created a node.
  bool created_at(std::size_t i) const { return history_.at(i).created; }
  std::vector<bool> new_node_flags() const;
  /// Defect of every prefix of length 1..length().
  std::vector<std::size_t> per_prefix_defect() const;

  /// Number of distinct palindromic factors of length exactly n (n = 0 counts the empty word).
  std::size_t count_of_length(std::size_t n) const noexcept;

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  /// Materializes the palindrome of a node (index >= 2).
  Word palindrome(std::int32_t node) const;
  /// All distinct non-empty palindromic factors in creation order.
  std::vector<Word> palindromes() const;

 private:
  struct Append {
    std::int32_t prev_last;
    std::int32_t parent;  // node the extension arc was read from
    std::int32_t lps_node;
    bool created;
  };

  std::int32_t& arc(std::int32_t node, int letter) {
    return arcs_[static_cast<std::size_t>(node) * static_cast<std::size_t>(alphabet_.size()) +
                 static_cast<std::size_t>(letter)];
  }
  std::int32_t find_extendable(std::int32_t node, std::size_t pos, int letter) const;

  Alphabet alphabet_;
  std::vector<std::uint8_t> text_;  // alphabet indices
  std::vector<Node> nodes_;
  std::vector<std::int32_t> arcs_;  // nodes_.size() x alphabet size, 0 = no arc
  std::vector<Append> history_;
  std::int32_t last_ = kEmptyRoot;
};

/// Palindromic defect of a word together with the defect of each prefix.
struct DefectReport {
  Word word;
  std::size_t palindrome_count = 0;  // includes the empty word
  std::size_t defect = 0;
  std::vector<std::size_t> per_prefix_defect;
};

DefectReport defect(const Word& w);
bool is_rich(const Word& w);

/// Longest palindromic suffix / prefix. Throw InvalidInput on the empty word.
Word lps(const Word& w);
Word lpp(const Word& w);

/// Factorization of a rich word into distinct palindromes by repeatedly
/// stripping the longest palindromic suffix. Throws PreconditionError if `w`
/// is not rich.
std::vector<Word> ups_factorization(const Word& w);

/// Distinct palindromic factors of `w` of length exactly `n`.
std::size_t palindromic_complexity(const Word& w, std::size_t n);

/// Distinct non-empty palindromic factors of `w`, shortest first, then lexicographic.
std::vector<Word> palindromic_factors(const Word& w);

}  // namespace richwords
