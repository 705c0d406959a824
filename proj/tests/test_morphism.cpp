#include "doctest.h"
#include "oracles.hpp"
#include "richwords/error.hpp"
#include "richwords/morphism.hpp"
#include "richwords/pal_index.hpp"

using namespace richwords;

namespace {
const Morphism kTM = Morphism::parse("0->01;1->10");
const Morphism kFib = Morphism::parse("0->01;1->0");
const Morphism kPhi = Morphism::parse("a->abab;b->aab");
const Morphism kPsi = Morphism::parse("a->abab;b->aba");

bool listed(const std::vector<Conjugate>& cs, const Morphism& m) {
  return std::any_of(cs.begin(), cs.end(), [&](const Conjugate& c) { return c.morphism == m; });
}

std::set<std::string> short_factors(const std::string& s, std::size_t max_len) {
  std::set<std::string> out;
  for (std::size_t n = 1; n <= max_len; ++n) {
    auto f = oracle::factors(s, n);
    out.insert(f.begin(), f.end());
  }
  return out;
}
}  // namespace

TEST_CASE("parse and print") {
  CHECK(kPhi.to_string() == "a->abab;b->aab");
  CHECK(Morphism::parse(" b -> aab ; a->abab; ") == kPhi);
  CHECK_THROWS_AS(Morphism::parse("a->"), InvalidInput);
  CHECK_THROWS_AS(Morphism::parse("a->b;a->c"), InvalidInput);
  CHECK_THROWS_AS(Morphism::parse("ab->b"), InvalidInput);
  CHECK_THROWS_AS(Morphism::parse(""), InvalidInput);
}

TEST_CASE("apply") {
  CHECK(kTM("01") == Word("0110"));
  CHECK(kFib("0") == Word("01"));
  CHECK(kPhi("") == Word(""));
  CHECK_THROWS_AS(kTM("2"), InvalidInput);
  CHECK(kPhi(Word("ab") + Word("ba")) == kPhi("ab") + kPhi("ba"));
}

TEST_CASE("fixed point prefixes") {
  CHECK(fixed_point_prefix(kPhi, 'a', 11) == Word("ababaababab"));
  CHECK(fixed_point_prefix(kFib, '0', 13) == Word("0100101001001"));
  CHECK(fixed_point_prefix(kTM, '0', 8) == Word("01101001"));
  CHECK(fixed_point_prefix(kFib, '0', 500).str() == oracle::fibonacci(500));
  CHECK(fixed_point_prefix(kTM, '0', 1000).str() == oracle::thue_morse(1000));
  CHECK_THROWS_AS(fixed_point_prefix(kFib, '1', 5), PreconditionError);
  CHECK_THROWS_AS(fixed_point_prefix(Morphism::parse("a->a;b->ab"), 'a', 5), PreconditionError);
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(kTM));
  CHECK(is_primitive(kFib));
  CHECK_FALSE(is_primitive(Morphism::parse("a->ab;b->b")));
  CHECK(incidence_matrix(kFib) == std::vector<std::vector<std::uint64_t>>{{1, 1}, {1, 0}});
  CHECK_THROWS_AS(is_primitive(Morphism::parse("a->ab")), PreconditionError);
}

TEST_CASE("conjugates of the running example") {
  const auto cs = conjugates(kPhi);
  REQUIRE_FALSE(cs.empty());
  CHECK(cs.front().morphism == kPhi);
  CHECK(cs.front().certificate.w.empty());
  const auto it = std::find_if(cs.begin(), cs.end(), [](const Conjugate& c) { return c.morphism == kPsi; });
  REQUIRE(it != cs.end());
  CHECK(it->certificate.w == Word("ab"));
  CHECK(it->certificate.direction == ConjugacyDirection::Left);
  for (const Conjugate& c : cs) CHECK(verify_conjugacy(kPhi, c.morphism, c.certificate));
}

TEST_CASE("conjugates of Fibonacci and Thue-Morse") {
  CHECK(listed(conjugates(kFib), Morphism::parse("0->10;1->0")));
  const auto tm = conjugates(kTM);
  CHECK(tm.size() == 1);
  CHECK(tm.front().morphism == kTM);
}

TEST_CASE("conjugates preserve incidence, image lengths and language") {
  for (const Morphism& phi : {kPhi, kFib, kTM, Morphism::parse("a->aab;b->ab"), Morphism::parse("a->abcab;b->ab;c->acab")}) {
    const auto cs = conjugates(phi);
    for (const Conjugate& c : cs) {
      REQUIRE(verify_conjugacy(phi, c.morphism, c.certificate));
      CHECK(incidence_matrix(c.morphism) == incidence_matrix(phi));
      for (const auto& [a, img] : phi.images()) CHECK(c.morphism.image(a).size() == img.size());
    }
    if (!is_primitive(phi)) continue;
    const char seed = phi.images().begin()->first;
    if (phi.image(seed).front() != seed) continue;
    const auto base = short_factors(fixed_point_prefix(phi, seed, 1000).str(), 10);
    for (const Conjugate& c : cs) {
      for (const auto& [a, img] : c.morphism.images()) {
        if (img.front() != a || img.size() < 2) continue;
        CHECK(short_factors(fixed_point_prefix(c.morphism, a, 1000).str(), 10) == base);
      }
    }
  }
}

TEST_CASE("verify_conjugacy rejects wrong certificates") {
  CHECK_FALSE(verify_conjugacy(kPhi, kPsi, {Word("ab"), ConjugacyDirection::Right}));
  CHECK_FALSE(verify_conjugacy(kPhi, kPsi, {Word("a"), ConjugacyDirection::Left}));
}

TEST_CASE("class P") {
  const auto cert = is_class_p(kPsi);
  REQUIRE(cert);
  CHECK(cert->p == Word("aba"));
  CHECK(cert->p_map.at('a') == Word("b"));
  CHECK(cert->p_map.at('b') == Word(""));
  CHECK(verify_class_p(kPsi, *cert));
  CHECK_FALSE(is_class_p(kPhi));
  const auto id = is_class_p(Morphism::parse("a->a;b->b"));
  REQUIRE(id);
  CHECK(id->p.empty());
  CHECK(id->p_map.at('a') == Word("a"));
  CHECK_FALSE(verify_class_p(kPsi, {Word("ab"), {{'a', Word("ab")}, {'b', Word("a")}}}));
}

TEST_CASE("class P prime") {
  const auto w = is_class_p_prime(kPhi);
  REQUIRE(w);
  CHECK(verify_conjugacy(kPhi, w->conjugate.morphism, w->conjugate.certificate));
  CHECK(verify_class_p(w->conjugate.morphism, w->certificate));
  const auto fib = is_class_p_prime(kFib);
  REQUIRE(fib);
  CHECK(verify_class_p(fib->conjugate.morphism, fib->certificate));
  CHECK_FALSE(is_class_p_prime(kTM));  // regression fixture: stationary, images 01 and 10
}

TEST_CASE("marked") {
  const auto tm = is_marked(kTM);
  REQUIRE(tm);
  CHECK(tm->last_letters.morphism == kTM);
  CHECK(tm->first_letters.morphism == kTM);
  const auto fib = is_marked(kFib);
  REQUIRE(fib);
  const Morphism phi2 = Morphism::parse("0->10;1->0");
  CHECK((fib->last_letters.morphism == phi2 || fib->first_letters.morphism == phi2));
  CHECK(verify_conjugacy(kFib, fib->last_letters.morphism, fib->last_letters.certificate));
  CHECK(verify_conjugacy(kFib, fib->first_letters.morphism, fib->first_letters.certificate));
  CHECK_FALSE(is_marked(Morphism::parse("a->ab;b->ab")));
  for (const Morphism& phi : {kTM, kFib, kPhi}) {
    const auto m = is_marked(phi);
    if (!m) continue;
    std::set<char> last, first;
    for (const auto& [a, img] : m->last_letters.morphism.images()) last.insert(img.back());
    for (const auto& [a, img] : m->first_letters.morphism.images()) first.insert(img.front());
    CHECK(last.size() == phi.images().size());
    CHECK(first.size() == phi.images().size());
  }
}

TEST_CASE("stationary") {
  CHECK(is_stationary(kTM));
  CHECK_FALSE(is_stationary(kFib));
  CHECK_FALSE(is_stationary(kPhi));
  CHECK_THROWS_AS(is_stationary(Morphism::parse("a->aa")), PreconditionError);
}

TEST_CASE("defect profiles") {
  const auto fib = defect_profile(kFib, '0', 10000);
  CHECK(fib.verdict == ProfileVerdict::StablyZero);
  for (const auto& c : fib.checkpoints) CHECK(c.defect == 0);
  const auto tm = defect_profile(kTM, '0', 10000);
  CHECK(tm.verdict == ProfileVerdict::Growing);
  CHECK(tm.checkpoints.back().length == 10000);
  for (std::size_t i = 1; i < tm.checkpoints.size(); ++i) CHECK(tm.checkpoints[i - 1].defect <= tm.checkpoints[i].defect);
  for (const auto& c : tm.checkpoints)
    if (c.length <= 400) CHECK(c.defect == oracle::defect(oracle::thue_morse(c.length)));
  const auto periodic = defect_profile(Morphism::parse("a->aa"), 'a', 1000);
  CHECK(periodic.verdict == ProfileVerdict::StablyZero);
  CHECK(to_string(ProfileVerdict::PlateauPositive) == "plateau-positive");
}

TEST_CASE("reversal closure probe") {
  const auto tm = reversal_closure_probe(kTM, '0', 8, 256);
  CHECK(tm.closed);
  CHECK_FALSE(tm.short_prefix);
  CHECK(tm.palindrome_count == oracle::palindromes(oracle::thue_morse(256)).size() + 1);
  CHECK(reversal_closure_probe(kFib, '0', 8, 256).closed);
  // fixture: a->aab, b->ab
  const auto aab = reversal_closure_probe(Morphism::parse("a->aab;b->ab"), 'a', 8, 256);
  const std::string prefix = fixed_point_prefix(Morphism::parse("a->aab;b->ab"), 'a', 256).str();
  bool closed = true;
  for (const auto& f : short_factors(prefix, 8)) closed = closed && oracle::has_factor(prefix, oracle::rev(f));
  CHECK(aab.closed == closed);
  const auto abc = reversal_closure_probe(Morphism::parse("a->abc;b->bca;c->cab"), 'a', 4, 200);
  CHECK_FALSE(abc.closed);
  REQUIRE(abc.missing_reversal);
  CHECK(reversal_closure_probe(kTM, '0', 8, 20).short_prefix);
}
