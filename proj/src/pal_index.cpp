#include "richwords/pal_index.hpp"

#include <algorithm>

#include "richwords/error.hpp"

namespace richwords {

PalIndex::PalIndex(Alphabet alphabet) : alphabet_(std::move(alphabet)) {
  nodes_.push_back({-1, kImaginaryRoot, -1});
  nodes_.push_back({0, kImaginaryRoot, -1});
  arcs_.assign(2 * static_cast<std::size_t>(alphabet_.size()), 0);
}

PalIndex::PalIndex(const Word& w) : PalIndex(w, Alphabet::of(w)) {}

PalIndex::PalIndex(const Word& w, Alphabet alphabet) : PalIndex(std::move(alphabet)) {
  text_.reserve(w.size());
  history_.reserve(w.size());
  nodes_.reserve(w.size() + 2);
  arcs_.reserve((w.size() + 2) * static_cast<std::size_t>(alphabet_.size()));
  for (char c : w.view()) push(c);
}

std::int32_t PalIndex::find_extendable(std::int32_t node, std::size_t pos, int letter) const {
  // Walk suffix links until letter + palindrome(node) + letter ends at pos.
  for (;;) {
    const auto len = static_cast<std::ptrdiff_t>(nodes_[node].length);
    const auto before = static_cast<std::ptrdiff_t>(pos) - len - 1;
    if (before >= 0 && text_[static_cast<std::size_t>(before)] == letter) return node;
    node = nodes_[node].suffix_link;
  }
}

bool PalIndex::push_index(int letter) {
  const std::size_t pos = text_.size();
  text_.push_back(static_cast<std::uint8_t>(letter));

  const std::int32_t parent = find_extendable(last_, pos, letter);
  if (std::int32_t existing = arc(parent, letter); existing != 0) {
    history_.push_back({last_, parent, existing, false});
    last_ = existing;
    return false;
  }

  const std::int32_t length = nodes_[parent].length + 2;
  std::int32_t link = kEmptyRoot;
  if (length > 1) link = arc(find_extendable(nodes_[parent].suffix_link, pos, letter), letter);

  const auto created = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back({length, link, static_cast<std::int32_t>(pos)});
  arcs_.resize(arcs_.size() + static_cast<std::size_t>(alphabet_.size()), 0);
  arc(parent, letter) = created;
  history_.push_back({last_, parent, created, true});
  last_ = created;
  return true;
}

bool PalIndex::push(char c) {
  const int letter = alphabet_.index(c);
  if (letter == Alphabet::kNoLetter) throw InvalidInput(std::string("letter not in alphabet: ") + c);
  return push_index(letter);
}

void PalIndex::pop() {
  const Append undo = history_.back();
  history_.pop_back();
  if (undo.created) {
    arc(undo.parent, text_.back()) = 0;
    nodes_.pop_back();
    arcs_.resize(arcs_.size() - static_cast<std::size_t>(alphabet_.size()));
  }
  last_ = undo.prev_last;
  text_.pop_back();
}

Word PalIndex::host() const {
  std::string s;
  s.reserve(text_.size());
  for (auto letter : text_) s.push_back(alphabet_.letter(letter));
  return Word(std::move(s));
}

std::vector<bool> PalIndex::new_node_flags() const {
  std::vector<bool> flags;
  flags.reserve(history_.size());
  for (const Append& a : history_) flags.push_back(a.created);
  return flags;
}

std::vector<std::size_t> PalIndex::per_prefix_defect() const {
  std::vector<std::size_t> result;
  result.reserve(history_.size());
  std::size_t missing = 0;
  for (const Append& a : history_) {
    if (!a.created) ++missing;
    result.push_back(missing);
  }
  return result;
}

std::size_t PalIndex::count_of_length(std::size_t n) const noexcept {
  if (n == 0) return 1;
  return static_cast<std::size_t>(std::ranges::count_if(
      nodes_.begin() + 2, nodes_.end(), [n](const Node& node) { return static_cast<std::size_t>(node.length) == n; }));
}

Word PalIndex::palindrome(std::int32_t node) const {
  const Node& n = nodes_.at(static_cast<std::size_t>(node));
  std::string s;
  s.reserve(static_cast<std::size_t>(n.length));
  for (std::int32_t i = n.first_end - n.length + 1; i <= n.first_end; ++i)
    s.push_back(alphabet_.letter(text_[static_cast<std::size_t>(i)]));
  return Word(std::move(s));
}

std::vector<Word> PalIndex::palindromes() const {
  std::vector<Word> result;
  result.reserve(node_count());
  for (std::size_t i = 2; i < nodes_.size(); ++i) result.push_back(palindrome(static_cast<std::int32_t>(i)));
  return result;
}

DefectReport defect(const Word& w) {
  const PalIndex index(w);
  return {w, index.palindrome_count(), index.defect(), index.per_prefix_defect()};
}

bool is_rich(const Word& w) { return PalIndex(w).is_rich(); }

Word lps(const Word& w) {
  if (w.empty()) throw InvalidInput("lps of the empty word is not defined");
  const PalIndex index(w);
  return w.substr(w.size() - index.lps_length());
}

Word lpp(const Word& w) {
  if (w.empty()) throw InvalidInput("lpp of the empty word is not defined");
  return reverse(lps(reverse(w)));
}

std::vector<Word> ups_factorization(const Word& w) {
  const PalIndex index(w);
  if (!index.is_rich())
    throw PreconditionError("UPS-factorization requires a rich word; '" + w.str() + "' has defect " +
                            std::to_string(index.defect()));
  std::vector<Word> parts;
  for (std::size_t end = w.size(); end > 0;) {
    const std::size_t len = index.lps_length_at(end);
    parts.push_back(w.substr(end - len, len));
    end -= len;
  }
  std::ranges::reverse(parts);
  return parts;
}

std::size_t palindromic_complexity(const Word& w, std::size_t n) {
  if (n > w.size()) return 0;
  return PalIndex(w).count_of_length(n);
}

std::vector<Word> palindromic_factors(const Word& w) {
  auto result = PalIndex(w).palindromes();
  std::ranges::sort(result, [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return result;
}

}  // namespace richwords
