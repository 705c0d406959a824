#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "richwords/word.hpp"

namespace richwords {

/// Non-erasing morphism given by the images of its source letters.
class Morphism {
 public:
  /// Throws InvalidInput on an empty letter map or an empty image.
  explicit Morphism(std::map<char, Word> images);

  /// Parses `a->abab;b->aab`. Whitespace is ignored and a trailing `;` is
  /// allowed. Throws InvalidInput on malformed specs or repeated letters.
  static Morphism parse(std::string_view spec);

  const std::map<char, Word>& images() const noexcept { return images_; }
  const Word& image(char letter) const;

  /// Source letters in character order.
  Alphabet source() const;
  /// Letters occurring in the images.
  Alphabet target() const;
  /// Every image letter is also a source letter.
  bool is_endomorphism() const;

  Word apply(const Word& w) const;
  Word operator()(const Word& w) const { return apply(w); }

  /// Canonical text form, letters in character order: `a->abab;b->aab`.
  std::string to_string() const;

  friend bool operator==(const Morphism&, const Morphism&) = default;
  friend auto operator<=>(const Morphism&, const Morphism&) = default;

 private:
  std::map<char, Word> images_;
};

/// M[a][b] = number of occurrences of b in phi(a), indices in source order.
/// Requires an endomorphism.
std::vector<std::vector<std::uint64_t>> incidence_matrix(const Morphism& phi);

/// Prefix of length exactly `min_len` of the fixed point of phi starting
/// with `seed`. Throws PreconditionError unless phi(seed) starts with seed
/// and has length >= 2.
Word fixed_point_prefix(const Morphism& phi, char seed, std::size_t min_len);

/// Some power of the incidence matrix, with exponent at most
/// (|A| - 1)^2 + 1, is strictly positive.
bool is_primitive(const Morphism& phi);

enum class ConjugacyDirection {
  Right,  // phi(a) w = w psi(a) for every letter a
  Left,   // w phi(a) = psi(a) w for every letter a
};

std::string_view to_string(ConjugacyDirection d) noexcept;

struct ConjugacyCertificate {
  Word w;
  ConjugacyDirection direction = ConjugacyDirection::Right;
};

/// Checks the certificate's equation for every source letter.
bool verify_conjugacy(const Morphism& phi, const Morphism& psi, const ConjugacyCertificate& cert);

struct Conjugate {
  Morphism morphism;
  ConjugacyCertificate certificate;
};

/// The conjugacy class of phi, each member with a certificate.
///
/// Starts with phi itself (w empty), then the conjugates reached by
/// repeatedly moving the common first letter of all images to their back
/// (Right certificates, growing w), then those reached by moving the common
/// last letter to the front (Left certificates). Each chain stops at a
/// morphism already listed.
std::vector<Conjugate> conjugates(const Morphism& phi);

/// psi(a) = p p_a for all a, with p and every p_a palindromes.
struct ClassPCertificate {
  Word p;
  std::map<char, Word> p_map;
};

/// Certificate with the longest valid p, if any. p ranges over the
/// palindromic prefixes of the longest common prefix of the images.
std::optional<ClassPCertificate> is_class_p(const Morphism& phi);

bool verify_class_p(const Morphism& phi, const ClassPCertificate& cert);

struct ClassPPrimeWitness {
  Conjugate conjugate;  // the class P member of phi's conjugacy class
  ClassPCertificate certificate;
};

/// First conjugate (in conjugates() order) of class P.
std::optional<ClassPPrimeWitness> is_class_p_prime(const Morphism& phi);

struct MarkedWitness {
  Conjugate last_letters;   // images' last letters exhaust the alphabet
  Conjugate first_letters;  // images' first letters exhaust the alphabet
  /// Whether the extremal conjugates already witness markedness: the end of
  /// the Left chain for last letters and the end of the Right chain for
  /// first letters.
  bool extremal_witness = false;
};

/// Requires an endomorphism (PreconditionError otherwise).
std::optional<MarkedWitness> is_marked(const Morphism& phi);

/// Longest common prefix and longest common suffix of the images are both
/// empty. Throws PreconditionError on a single-letter source alphabet.
bool is_stationary(const Morphism& phi);

enum class ProfileVerdict { StablyZero, Growing, PlateauPositive };

std::string_view to_string(ProfileVerdict v) noexcept;

struct DefectCheckpoint {
  std::size_t length = 0;
  std::size_t defect = 0;
};

/// Defects of prefixes of a fixed point at increasing lengths.
struct DefectProfile {
  Morphism generator;
  char seed = 0;
  std::vector<DefectCheckpoint> checkpoints;
  ProfileVerdict verdict = ProfileVerdict::StablyZero;
  bool primitive = false;
};

/// Checkpoint lengths max_len / 2^(k-1), ..., max_len / 2, max_len
/// (rounded up, duplicates dropped). Verdict: StablyZero if every defect is
/// 0, Growing if the last three defects strictly increase, otherwise
/// PlateauPositive. The verdict is a label on finite data only.
DefectProfile defect_profile(const Morphism& phi, char seed, std::size_t max_len, std::size_t checkpoints = 12);

struct ReversalProbe {
  bool closed = true;
  std::optional<Word> missing_reversal;  // first factor whose reversal is absent
  std::size_t palindrome_count = 0;      // distinct palindromic factors of the prefix, incl. the empty word
  std::size_t factor_len = 0;
  std::size_t prefix_len = 0;
  bool short_prefix = false;  // prefix_len < 4 * factor_len
};

/// Whether every factor of length <= factor_len of the fixed point's prefix
/// of length prefix_len has its reversal among the prefix's factors.
ReversalProbe reversal_closure_probe(const Morphism& phi, char seed, std::size_t factor_len, std::size_t prefix_len);

}  // namespace richwords
