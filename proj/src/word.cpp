#include "richwords/word.hpp"

#include <algorithm>

#include "richwords/error.hpp"

namespace richwords {

bool is_letter_char(char c) noexcept {
  const auto u = static_cast<unsigned char>(c);
  return u > 0x20 && u < 0x7f;
}

Alphabet::Alphabet(std::string_view letters) : Alphabet() {
  if (letters.empty()) throw InvalidInput("alphabet must contain at least one letter");
  for (char c : letters) {
    if (!is_letter_char(c)) throw InvalidInput(std::string("invalid letter in alphabet: code ") +
                                               std::to_string(static_cast<unsigned char>(c)));
    if (contains(c)) throw InvalidInput(std::string("duplicate letter in alphabet: ") + c);
    index_[static_cast<unsigned char>(c)] = static_cast<std::int16_t>(letters_.size());
    letters_.push_back(c);
  }
}

Alphabet Alphabet::of(std::initializer_list<const Word*> words) {
  std::array<bool, 256> seen{};
  for (const Word* w : words)
    for (char c : w->view()) seen[static_cast<unsigned char>(c)] = true;
  Alphabet result;
  for (int c = 0; c < 256; ++c) {
    if (!seen[c]) continue;
    result.index_[c] = static_cast<std::int16_t>(result.letters_.size());
    result.letters_.push_back(static_cast<char>(c));
  }
  return result;
}

Alphabet Alphabet::of(const Word& w) { return of({&w}); }

Alphabet Alphabet::standard(int d) {
  static constexpr std::string_view kLetters = "0123456789abcdefghijklmnopqrstuvwxyz";
  if (d < 1 || d > static_cast<int>(kLetters.size()))
    throw InvalidInput("alphabet size must be in [1, 36], got " + std::to_string(d));
  return Alphabet(kLetters.substr(0, static_cast<std::size_t>(d)));
}

bool Alphabet::contains(const Word& w) const noexcept {
  return std::ranges::all_of(w.view(), [this](char c) { return contains(c); });
}

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_)
    if (!is_letter_char(c))
      throw InvalidInput("invalid letter (code " + std::to_string(static_cast<unsigned char>(c)) +
                         "); letters are printable non-space ASCII characters");
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  return Word(letters_.substr(pos, len), Unchecked{});
}

Word Word::operator+(const Word& other) const { return Word(letters_ + other.letters_, Unchecked{}); }

Word reverse(const Word& w) { return Word(std::string(w.letters_.rbegin(), w.letters_.rend()), Word::Unchecked{}); }

bool is_palindrome(std::string_view s) noexcept {
  return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

std::vector<Occurrence> occurrences(const Word& host, const Word& w) {
  if (w.empty()) throw InvalidInput("occurrences of the empty word are not defined");
  std::vector<Occurrence> result;
  const std::string_view h = host.view();
  for (auto pos = h.find(w.view()); pos != std::string_view::npos; pos = h.find(w.view(), pos + 1))
    result.push_back(pos);
  return result;
}

std::set<Word> factors(const Word& w, std::size_t n) {
  std::set<Word> result;
  if (n > w.size()) return result;
  for (std::size_t i = 0; i + n <= w.size(); ++i) result.insert(w.substr(i, n));
  return result;
}

std::set<Word> all_factors(const Word& w) {
  std::set<Word> result;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t len = 1; i + len <= w.size(); ++len) result.insert(w.substr(i, len));
  return result;
}

std::set<Word> complete_return_words(const Word& host, const Word& w) {
  std::set<Word> result;
  const auto occ = occurrences(host, w);
  for (std::size_t k = 1; k < occ.size(); ++k)
    result.insert(host.substr(occ[k - 1], occ[k] - occ[k - 1] + w.size()));
  return result;
}

Word longest_common_prefix(const std::vector<Word>& words) {
  if (words.empty()) return {};
  std::size_t len = words.front().size();
  for (const Word& w : words) {
    const auto mismatch = std::ranges::mismatch(words.front().view(), w.view());
    len = std::min(len, static_cast<std::size_t>(mismatch.in1 - words.front().view().begin()));
  }
  return words.front().substr(0, len);
}

Word longest_common_suffix(const std::vector<Word>& words) {
  std::vector<Word> reversed;
  reversed.reserve(words.size());
  for (const Word& w : words) reversed.push_back(reverse(w));
  return reverse(longest_common_prefix(reversed));
}

}  // namespace richwords

namespace richwords {
namespace {

// Renames letters by first appearance: the first distinct letter becomes
// alphabet index 0, the next new one index 1, and so on. This is the least
// relabeling of `s` under letter permutations.
std::vector<int> first_appearance_labels(std::string_view s) {
  std::array<int, 256> label;
  label.fill(-1);
  int next = 0;
  std::vector<int> out;
  out.reserve(s.size());
  for (char c : s) {
    int& l = label[static_cast<unsigned char>(c)];
    if (l < 0) l = next++;
    out.push_back(l);
  }
  return out;
}

}  // namespace

Word canonical_form(const Word& w, const Alphabet& alphabet) {
  if (!alphabet.contains(w)) throw InvalidInput("word '" + w.str() + "' is not over alphabet '" + alphabet.letters() + "'");
  const auto forward = first_appearance_labels(w.view());
  const Word r = reverse(w);
  const auto backward = first_appearance_labels(r.view());
  const auto& best = std::min(forward, backward);
  std::string s;
  s.reserve(best.size());
  for (int l : best) s.push_back(alphabet.letter(l));
  return Word(std::move(s));
}

}  // namespace richwords
