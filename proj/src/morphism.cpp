#include "richwords/morphism.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_set>

#include "richwords/error.hpp"
#include "richwords/pal_index.hpp"

namespace richwords {

Morphism::Morphism(std::map<char, Word> images) : images_(std::move(images)) {
  if (images_.empty()) throw InvalidInput("morphism must map at least one letter");
  for (const auto& [letter, image] : images_) {
    if (!is_letter_char(letter)) throw InvalidInput("invalid source letter in morphism");
    if (image.empty()) throw InvalidInput(std::string("image of '") + letter + "' is empty; morphisms are non-erasing");
  }
}

Morphism Morphism::parse(std::string_view spec) {
  std::string compact;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);

  std::map<char, Word> images;
  std::string_view rest = compact;
  while (!rest.empty()) {
    const auto semi = rest.find(';');
    const std::string_view rule = rest.substr(0, semi);
    rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
    if (rule.empty()) continue;
    const auto arrow = rule.find("->");
    if (arrow != 1) throw InvalidInput("malformed morphism rule '" + std::string(rule) + "', expected like a->ab");
    const char letter = rule.front();
    if (images.contains(letter)) throw InvalidInput(std::string("letter '") + letter + "' mapped twice");
    images.emplace(letter, Word(std::string(rule.substr(3))));
  }
  return Morphism(std::move(images));
}

const Word& Morphism::image(char letter) const {
  const auto it = images_.find(letter);
  if (it == images_.end()) throw InvalidInput(std::string("letter '") + letter + "' has no image");
  return it->second;
}

Alphabet Morphism::source() const {
  std::string letters;
  for (const auto& [letter, image] : images_) letters.push_back(letter);
  return Alphabet(letters);
}

Alphabet Morphism::target() const {
  std::string all;
  for (const auto& [letter, image] : images_) all += image.str();
  return Alphabet::of(Word(all));
}

bool Morphism::is_endomorphism() const {
  const Alphabet src = source();
  return std::ranges::all_of(images_, [&](const auto& kv) { return src.contains(kv.second); });
}

Word Morphism::apply(const Word& w) const {
  std::string out;
  for (char c : w.view()) out += image(c).str();
  return Word(std::move(out));
}

std::string Morphism::to_string() const {
  std::string out;
  for (const auto& [letter, image] : images_) {
    if (!out.empty()) out.push_back(';');
    out.push_back(letter);
    out += "->";
    out += image.str();
  }
  return out;
}

namespace {

void require_endomorphism(const Morphism& phi) {
  if (!phi.is_endomorphism())
    throw PreconditionError("morphism " + phi.to_string() + " maps outside its source alphabet");
}

std::vector<Word> image_list(const Morphism& phi) {
  std::vector<Word> out;
  for (const auto& [letter, image] : phi.images()) out.push_back(image);
  return out;
}

template <class Transform>
Morphism map_images(const Morphism& phi, Transform transform) {
  std::map<char, Word> images;
  for (const auto& [letter, image] : phi.images()) images.emplace(letter, transform(image));
  return Morphism(std::move(images));
}

std::set<char> first_letters(const Morphism& phi) {
  std::set<char> out;
  for (const auto& [letter, image] : phi.images()) out.insert(image.front());
  return out;
}

std::set<char> last_letters(const Morphism& phi) {
  std::set<char> out;
  for (const auto& [letter, image] : phi.images()) out.insert(image.back());
  return out;
}

std::set<char> source_set(const Morphism& phi) {
  std::set<char> out;
  for (const auto& [letter, image] : phi.images()) out.insert(letter);
  return out;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> incidence_matrix(const Morphism& phi) {
  require_endomorphism(phi);
  const Alphabet src = phi.source();
  const auto d = static_cast<std::size_t>(src.size());
  std::vector<std::vector<std::uint64_t>> m(d, std::vector<std::uint64_t>(d, 0));
  for (const auto& [letter, image] : phi.images())
    for (char c : image.view()) ++m[static_cast<std::size_t>(src.index(letter))][static_cast<std::size_t>(src.index(c))];
  return m;
}

Word fixed_point_prefix(const Morphism& phi, char seed, std::size_t min_len) {
  require_endomorphism(phi);
  const Word& start = phi.image(seed);
  if (start.front() != seed)
    throw PreconditionError(std::string("not prolongable on '") + seed + "': its image " + start.str() +
                            " does not start with it");
  if (start.size() < 2)
    throw PreconditionError(std::string("not prolongable on '") + seed + "': its image has length 1");
  // u = phi(u): the letter at position i expands to the block appended here.
  std::string u = start.str();
  for (std::size_t i = 1; u.size() < min_len; ++i) u += phi.image(u[i]).str();
  u.resize(min_len);
  return Word(std::move(u));
}

bool is_primitive(const Morphism& phi) {
  const auto m = incidence_matrix(phi);
  const std::size_t d = m.size();
  using BoolMatrix = std::vector<std::vector<bool>>;
  BoolMatrix base(d, std::vector<bool>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) base[i][j] = m[i][j] > 0;

  BoolMatrix power = base;
  const std::size_t bound = (d - 1) * (d - 1) + 1;
  for (std::size_t k = 1; k <= bound; ++k) {
    const bool positive = std::ranges::all_of(power, [](const auto& row) { return std::ranges::all_of(row, std::identity{}); });
    if (positive) return true;
    BoolMatrix next(d, std::vector<bool>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t l = 0; l < d; ++l)
        if (power[i][l])
          for (std::size_t j = 0; j < d; ++j) next[i][j] = next[i][j] || base[l][j];
    power = std::move(next);
  }
  return false;
}

std::string_view to_string(ConjugacyDirection d) noexcept {
  return d == ConjugacyDirection::Right ? "right" : "left";
}

bool verify_conjugacy(const Morphism& phi, const Morphism& psi, const ConjugacyCertificate& cert) {
  if (source_set(phi) != source_set(psi)) return false;
  for (const auto& [letter, image] : phi.images()) {
    const Word& other = psi.image(letter);
    const bool ok = cert.direction == ConjugacyDirection::Right ? image + cert.w == cert.w + other
                                                                : cert.w + image == other + cert.w;
    if (!ok) return false;
  }
  return true;
}

std::vector<Conjugate> conjugates(const Morphism& phi) {
  std::vector<Conjugate> out{{phi, {Word(), ConjugacyDirection::Right}}};
  auto listed = [&](const Morphism& m) {
    return std::ranges::any_of(out, [&](const Conjugate& c) { return c.morphism == m; });
  };

  std::string w;
  for (Morphism cur = phi;;) {
    const auto firsts = first_letters(cur);
    if (firsts.size() != 1) break;
    const char c = *firsts.begin();
    Morphism next = map_images(cur, [c](const Word& img) { return img.substr(1) + Word(std::string(1, c)); });
    if (listed(next)) break;
    w.push_back(c);
    out.push_back({next, {Word(w), ConjugacyDirection::Right}});
    cur = std::move(next);
  }

  w.clear();
  for (Morphism cur = phi;;) {
    const auto lasts = last_letters(cur);
    if (lasts.size() != 1) break;
    const char c = *lasts.begin();
    Morphism next =
        map_images(cur, [c](const Word& img) { return Word(std::string(1, c)) + img.substr(0, img.size() - 1); });
    if (listed(next)) break;
    w.insert(w.begin(), c);
    out.push_back({next, {Word(w), ConjugacyDirection::Left}});
    cur = std::move(next);
  }
  return out;
}

std::optional<ClassPCertificate> is_class_p(const Morphism& phi) {
  const Word common = longest_common_prefix(image_list(phi));
  for (std::size_t len = common.size() + 1; len-- > 0;) {
    const Word p = common.substr(0, len);
    if (!is_palindrome(p)) continue;
    ClassPCertificate cert{p, {}};
    bool ok = true;
    for (const auto& [letter, image] : phi.images()) {
      Word rest = image.substr(len);
      if (!is_palindrome(rest)) {
        ok = false;
        break;
      }
      cert.p_map.emplace(letter, std::move(rest));
    }
    if (ok) return cert;
  }
  return std::nullopt;
}

bool verify_class_p(const Morphism& phi, const ClassPCertificate& cert) {
  if (!is_palindrome(cert.p)) return false;
  for (const auto& [letter, image] : phi.images()) {
    const auto it = cert.p_map.find(letter);
    if (it == cert.p_map.end() || !is_palindrome(it->second) || cert.p + it->second != image) return false;
  }
  return cert.p_map.size() == phi.images().size();
}

std::optional<ClassPPrimeWitness> is_class_p_prime(const Morphism& phi) {
  for (Conjugate& c : conjugates(phi))
    if (auto cert = is_class_p(c.morphism)) return ClassPPrimeWitness{std::move(c), std::move(*cert)};
  return std::nullopt;
}

std::optional<MarkedWitness> is_marked(const Morphism& phi) {
  require_endomorphism(phi);
  const auto all = source_set(phi);
  const auto conj = conjugates(phi);
  const auto by_last = std::ranges::find_if(conj, [&](const Conjugate& c) { return last_letters(c.morphism) == all; });
  const auto by_first = std::ranges::find_if(conj, [&](const Conjugate& c) { return first_letters(c.morphism) == all; });
  if (by_last == conj.end() || by_first == conj.end()) return std::nullopt;

  // Chain ends: the last Left entry (or phi) and the last Right entry (or phi).
  const Morphism* leftmost = &phi;
  const Morphism* rightmost = &phi;
  for (const Conjugate& c : conj)
    (c.certificate.direction == ConjugacyDirection::Left ? leftmost : rightmost) = &c.morphism;
  const bool extremal = last_letters(*leftmost) == all && first_letters(*rightmost) == all;
  return MarkedWitness{*by_last, *by_first, extremal};
}

bool is_stationary(const Morphism& phi) {
  if (phi.images().size() < 2) throw PreconditionError("stationarity needs at least two source letters");
  const auto images = image_list(phi);
  return longest_common_prefix(images).empty() && longest_common_suffix(images).empty();
}

std::string_view to_string(ProfileVerdict v) noexcept {
  switch (v) {
    case ProfileVerdict::StablyZero: return "stably-zero";
    case ProfileVerdict::Growing: return "growing";
    case ProfileVerdict::PlateauPositive: return "plateau-positive";
  }
  return "unknown";
}

DefectProfile defect_profile(const Morphism& phi, char seed, std::size_t max_len, std::size_t checkpoints) {
  if (max_len == 0 || checkpoints == 0) throw PreconditionError("profile needs a positive length and checkpoint count");
  const Word prefix = fixed_point_prefix(phi, seed, max_len);
  const PalIndex index(prefix);
  const auto defects = index.per_prefix_defect();

  DefectProfile profile{phi, seed, {}, ProfileVerdict::StablyZero, is_primitive(phi)};
  for (std::size_t i = checkpoints; i-- > 0;) {
    const std::size_t shift = std::min<std::size_t>(i, 63);
    const std::size_t divisor = std::size_t{1} << shift;
    const std::size_t len = std::max<std::size_t>(1, (max_len + divisor - 1) / divisor);
    if (!profile.checkpoints.empty() && profile.checkpoints.back().length == len) continue;
    profile.checkpoints.push_back({len, defects[len - 1]});
  }

  const auto& cp = profile.checkpoints;
  const bool all_zero = std::ranges::all_of(cp, [](const DefectCheckpoint& c) { return c.defect == 0; });
  if (all_zero) {
    profile.verdict = ProfileVerdict::StablyZero;
  } else if (cp.size() >= 3 && cp[cp.size() - 3].defect < cp[cp.size() - 2].defect &&
             cp[cp.size() - 2].defect < cp.back().defect) {
    profile.verdict = ProfileVerdict::Growing;
  } else {
    profile.verdict = ProfileVerdict::PlateauPositive;
  }
  return profile;
}

ReversalProbe reversal_closure_probe(const Morphism& phi, char seed, std::size_t factor_len, std::size_t prefix_len) {
  const Word prefix = fixed_point_prefix(phi, seed, prefix_len);
  ReversalProbe probe;
  probe.factor_len = factor_len;
  probe.prefix_len = prefix_len;
  probe.short_prefix = prefix_len < 4 * factor_len;
  probe.palindrome_count = PalIndex(prefix).palindrome_count();

  const std::string_view text = prefix.view();
  for (std::size_t n = 1; n <= factor_len && n <= text.size() && probe.closed; ++n) {
    std::unordered_set<std::string_view> seen;
    std::vector<std::string_view> ordered;
    for (std::size_t i = 0; i + n <= text.size(); ++i)
      if (seen.insert(text.substr(i, n)).second) ordered.push_back(text.substr(i, n));
    for (std::string_view f : ordered) {
      const std::string r(f.rbegin(), f.rend());
      if (!seen.contains(r)) {
        probe.closed = false;
        probe.missing_reversal = Word(std::string(f));
        break;
      }
    }
  }
  return probe;
}

}  // namespace richwords
