#pragma once

#include <array>
#include <compare>
#include <initializer_list>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace richwords {

class Word;

/// Ordered set of distinct single-character letters.
///
/// The order is fixed at construction and drives every deterministic
/// tie-break downstream (enumeration order, canonical forms).
class Alphabet {
 public:
  static constexpr int kNoLetter = -1;

  /// Letters in the given order. Throws InvalidInput on duplicates,
  /// non-printable characters, or an empty letter list.
  explicit Alphabet(std::string_view letters);

  /// Letters occurring in `w`, in character order. The empty word yields
  /// an empty alphabet, the only way to get one.
  static Alphabet of(const Word& w);
  /// Letters occurring in any of `words`, in character order.
  static Alphabet of(std::initializer_list<const Word*> words);
  /// The first `d` letters of "0123456789abcdefghijklmnopqrstuvwxyz".
  static Alphabet standard(int d);

  int size() const noexcept { return static_cast<int>(letters_.size()); }
  bool empty() const noexcept { return letters_.empty(); }
  char letter(int index) const { return letters_.at(static_cast<std::size_t>(index)); }
  const std::string& letters() const noexcept { return letters_; }

  /// Position of `c` in the alphabet order, or kNoLetter.
  int index(char c) const noexcept { return index_[static_cast<unsigned char>(c)]; }
  bool contains(char c) const noexcept { return index(c) != kNoLetter; }
  bool contains(const Word& w) const noexcept;

  bool operator==(const Alphabet& other) const noexcept { return letters_ == other.letters_; }

 private:
  Alphabet() { index_.fill(kNoLetter); }

  std::string letters_;
  std::array<std::int16_t, 256> index_{};
};

/// Immutable finite word over printable, non-whitespace ASCII letters.
class Word {
 public:
  Word() = default;
  /// Throws InvalidInput if any character is not a printable letter.
  explicit Word(std::string letters);
  Word(const char* letters) : Word(std::string(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  char operator[](std::size_t i) const noexcept { return letters_[i]; }
  char front() const noexcept { return letters_.front(); }
  char back() const noexcept { return letters_.back(); }

  const std::string& str() const noexcept { return letters_; }
  std::string_view view() const noexcept { return letters_; }

  /// Factor starting at `pos` of length `len` (clamped like std::string).
  Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
  Word operator+(const Word& other) const;

  bool starts_with(const Word& w) const noexcept { return view().starts_with(w.view()); }
  bool ends_with(const Word& w) const noexcept { return view().ends_with(w.view()); }
  bool contains(const Word& w) const noexcept { return view().find(w.view()) != std::string_view::npos; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    return a.letters_ <=> b.letters_;
  }

 private:
  struct Unchecked {};
  Word(std::string letters, Unchecked) : letters_(std::move(letters)) {}
  friend Word reverse(const Word& w);

  std::string letters_;
};

using Occurrence = std::size_t;

/// True for characters allowed as letters: printable ASCII other than space.
bool is_letter_char(char c) noexcept;

Word reverse(const Word& w);
bool is_palindrome(std::string_view s) noexcept;
inline bool is_palindrome(const Word& w) noexcept { return is_palindrome(w.view()); }

/// Sorted start positions of `w` in `host`. Throws InvalidInput if `w` is empty.
std::vector<Occurrence> occurrences(const Word& host, const Word& w);

/// Distinct factors of length `n`; empty when n > |w|.
std::set<Word> factors(const Word& w, std::size_t n);

/// All distinct non-empty factors of `w`.
std::set<Word> all_factors(const Word& w);

/// Complete return words of `w` in `host`: for each pair of consecutive
/// occurrences i < j, the factor host[i, j + |w|). Empty if `w` occurs fewer
/// than twice.
std::set<Word> complete_return_words(const Word& host, const Word& w);

/// Least member, in alphabet order, of the orbit of `w` under permutations
/// of the alphabet's letters and reversal. Letters of `w` must belong to
/// `alphabet`.
Word canonical_form(const Word& w, const Alphabet& alphabet);

/// Longest common prefix / suffix of a non-empty list of words.
Word longest_common_prefix(const std::vector<Word>& words);
Word longest_common_suffix(const std::vector<Word>& words);

}  // namespace richwords
