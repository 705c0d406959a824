// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Heavy checks run against the brute-force oracles.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "richwords/cli.hpp"
#include "richwords/enumeration.hpp"
#include "richwords/morphism.hpp"
#include "richwords/pal_index.hpp"
#include "richwords/richness.hpp"

using namespace richwords;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = richwords::cli::run(args, out, err);
  return {code, out.str()};
}

int failures = 0;

void criterion(int id, const std::string& title, double limit_secs, const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail, verdict = "PASS";
  try {
    detail = body();
  } catch (const Failure& f) {
    verdict = "FAIL";
    detail = f.what;
  } catch (const std::exception& e) {
    verdict = "FAIL";
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (verdict == "PASS" && secs >= limit_secs) {
    verdict = "FAIL";
    detail = "took longer than " + std::to_string(limit_secs) + " s";
  }
  failures += verdict == "FAIL";
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.3fs", secs);
  std::cout << verdict << "  AC" << id << (id < 10 ? "  " : " ") << title << " [" << timing << "]"
            << (detail.empty() ? "" : " - " + detail) << std::endl;
}

std::string repeat(const std::string& s, std::size_t k) {
  std::string out;
  for (std::size_t i = 0; i < k; ++i) out += s;
  return out;
}

bool is_primitive_word(const std::string& s) {
  for (std::size_t d = 1; d < s.size(); ++d)
    if (s.size() % d == 0 && repeat(s.substr(0, d), s.size() / d) == s) return false;
  return true;
}

}  // namespace

int main() {
  criterion(1, "table1 11010011 matches the golden rich-factor listing", 0.1, [] {
    std::ifstream in(GOLDEN_DIR "/table1_11010011.txt");
    expect(static_cast<bool>(in), "golden file missing");
    std::stringstream golden;
    golden << in.rdbuf();
    const CliRun r = run_cli({"table1", "11010011"});
    expect(r.code == 0, "exit code " + std::to_string(r.code));
    expect(r.out == golden.str(), "output differs from golden file");
    const auto rows = std::count(r.out.begin(), r.out.end(), '\n');
    return std::to_string(rows) + " distinct rows";
  });

  criterion(2, "shortest non-rich binary word has length 8", 1.0, [] {
    std::size_t rich7 = 0;
    oracle::for_each_word("01", 7, [&](const std::string& w) { rich7 += oracle::is_rich(w); });
    expect(rich7 == 128, "only " + std::to_string(rich7) + " of 128 length-7 words are rich");
    expect(!oracle::is_rich("11010011"), "11010011 reported rich");
    expect(run_cli({"minimal-nonrich", "2", "7"}).out.empty(), "minimal-nonrich 2 7 is not empty");
    const CliRun r = run_cli({"minimal-nonrich", "2", "8"});
    expect(r.code == 0 && !r.out.empty(), "minimal-nonrich 2 8 is empty");
    std::istringstream lines(r.out);
    std::size_t count = 0;
    for (std::string w; std::getline(lines, w); ++count)
      expect(oracle::defect(w) == 1, w + " has defect " + std::to_string(oracle::defect(w)));
    return std::to_string(count) + " minimal non-rich orbits of length 8, all defect 1";
  });

  criterion(3, "E2 pairs of the worked example have no common rich superword up to 18", 120.0, [] {
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"11010", "010011"}, {"1101001", "10011"}, {"110100", "0011"}};
    for (const auto& [u, v] : pairs) {
      expect(check_e2(Word(u), Word(v)), "check_e2(" + u + ", " + v + ") is false");
      expect(oracle::e2(u, v), "oracle rejects (" + u + ", " + v + ")");
    }
    // exhaustive walk over rich binary words, richness decided by the oracle
    std::size_t visited = 0;
    std::string hit;
    std::function<void(std::string&)> walk = [&](std::string& w) {
      for (char c : {'0', '1'}) {
        w.push_back(c);
        if (oracle::is_rich(w)) {
          ++visited;
          for (const auto& [u, v] : pairs)
            if (hit.empty() && oracle::has_factor(w, u) && oracle::has_factor(w, v)) hit = w;
          if (w.size() < 18) walk(w);
        }
        w.pop_back();
      }
    };
    std::string root;
    walk(root);
    expect(hit.empty(), "rich word " + hit + " contains a pair");
    return std::to_string(visited) + " rich words of length 1..18 searched";
  });

  criterion(4, "E2 witness extraction succeeds on every small non-rich word", 300.0, [] {
    std::size_t checked = 0;
    auto check = [&](const std::string& s) {
      if (oracle::is_rich(s)) return;
      const E2Witness w = extract_e2_witness(Word(s));
      expect(oracle::e2(w.u.str(), w.v.str()), "pair for " + s + " fails E2");
      expect(oracle::has_factor(s, w.u.str()) && oracle::has_factor(s, w.v.str()), "pair for " + s + " not factors");
      ++checked;
    };
    for (std::size_t n = 1; n <= 12; ++n) oracle::for_each_word("01", n, check);
    for (std::size_t n = 1; n <= 9; ++n) oracle::for_each_word("012", n, check);
    return std::to_string(checked) + " non-rich words";
  });

  criterion(5, "binary witness exists exactly for non-rich binary words", 600.0, [] {
    expect(binary_nonrich_witness("11010011") == Word("10"), "witness for 11010011 is not q=10");
    std::size_t nonrich = 0;
    for (std::size_t n = 1; n <= 14; ++n)
      oracle::for_each_word("01", n, [&](const std::string& s) {
        const auto q = binary_nonrich_witness(Word(s), Alphabet("01"));
        const bool rich = oracle::is_rich(s);
        expect(q.has_value() == !rich, s + (rich ? " is rich but has a witness" : " is non-rich without a witness"));
        if (!q) return;
        const std::string qs = q->str(), qr = oracle::rev(qs);
        expect(!oracle::is_pal(qs), "witness " + qs + " is a palindrome");
        for (const std::string& f : {"0" + qs + "0", "1" + qs + "1", "0" + qr + "1", "1" + qr + "0"})
          expect(oracle::has_factor(s, f), f + " is not a factor of " + s);
        ++nonrich;
      });
    return std::to_string(nonrich) + " non-rich words, every witness validated";
  });

  criterion(6, "palindromic tree counts equal brute force", 60.0, [] {
    std::size_t words = 0;
    for (std::size_t n = 0; n <= 14; ++n)
      oracle::for_each_word("01", n, [&](const std::string& s) {
        expect(PalIndex(Word(s)).node_count() == oracle::palindromes_cubic(s).size(), "mismatch on " + s);
        ++words;
      });
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 1000; ++trial) {
      const unsigned d = 2 + static_cast<unsigned>(trial % 3);
      std::string s(200, 'a');
      for (char& c : s) c = static_cast<char>('a' + rng() % d);
      expect(PalIndex(Word(s)).node_count() == oracle::palindromes(s).size(), "mismatch on random word " + s);
      ++words;
    }
    return std::to_string(words) + " words";
  });

  criterion(7, "defect series of periodic words halves to the saturated defect", 60.0, [] {
    std::size_t periods = 0, nonzero = 0;
    auto check = [&](const std::string& period) {
      const std::string long_power = repeat(period, 64 / period.size() + 4);
      bool closed = true;
      for (std::size_t n = 1; n <= 2 * period.size() && closed; ++n)
        for (const auto& f : oracle::factors(long_power, n)) closed = closed && oracle::has_factor(long_power, oracle::rev(f));
      if (!closed) return;
      const auto sum = brlek_reutenauer_sum(Word(period), default_k_max(Word(period)));
      expect(sum.saturated && sum.defect_estimate.has_value(), period + ": series not saturated");
      const std::size_t d1 = oracle::defect(repeat(period, 10)), d2 = oracle::defect(repeat(period, 14));
      expect(d1 == d2, period + ": brute-force defect not saturated");
      expect(*sum.defect_estimate == d1, period + ": estimate " + std::to_string(*sum.defect_estimate) +
                                             " vs defect " + std::to_string(d1));
      ++periods;
      nonzero += d1 > 0;
    };
    for (std::size_t n = 1; n <= 5; ++n)
      oracle::for_each_word("01", n, [&](const std::string& p) {
        if (is_primitive_word(p)) check(p);
      });
    const std::size_t binary = periods;
    check("abacbc");  // ternary period with defect 1
    expect(nonzero == 1, "ternary control period did not show a positive defect");
    return std::to_string(binary) + " binary periods; ternary control abacbc has defect 1";
  });

  criterion(8, "complexity identity on Fibonacci and Thue-Morse prefixes", 10.0, [] {
    const Word fib = fixed_point_prefix(Morphism::parse("0->01;1->0"), '0', 500);
    expect(fib.str() == oracle::fibonacci(500), "Fibonacci prefix mismatch");
    for (std::size_t n = 0; n <= 20; ++n) {
      const auto gap = complexity_identity_gap(fib, n);
      expect(gap == 0 && oracle::gap(fib.str(), n) == 0, "Fibonacci gap at n=" + std::to_string(n));
    }
    const Word tm = fixed_point_prefix(Morphism::parse("0->01;1->10"), '0', 256);
    expect(tm.str() == oracle::thue_morse(256), "Thue-Morse prefix mismatch");
    std::size_t first_positive = 0;
    for (std::size_t n = 0; n < tm.size() && !first_positive; ++n) {
      const auto gap = complexity_identity_gap(tm, n);
      expect(gap == oracle::gap(tm.str(), n), "Thue-Morse gap disagrees with oracle at n=" + std::to_string(n));
      if (gap > 0) first_positive = n;
    }
    expect(first_positive > 0, "no positive Thue-Morse gap");
    return "Thue-Morse gap first positive at n=" + std::to_string(first_positive);
  });

  criterion(9, "defect profiles of Fibonacci and Thue-Morse to 10^5", 30.0, [] {
    const auto fib = defect_profile(Morphism::parse("0->01;1->0"), '0', 100000);
    for (const auto& c : fib.checkpoints) expect(c.defect == 0, "Fibonacci defect at " + std::to_string(c.length));
    expect(fib.verdict == ProfileVerdict::StablyZero, "Fibonacci verdict");
    const auto tm = defect_profile(Morphism::parse("0->01;1->10"), '0', 100000);
    const auto& cp = tm.checkpoints;
    expect(cp.size() >= 3 && cp.back().length == 100000, "Thue-Morse checkpoints");
    const auto n = cp.size();
    expect(cp[n - 3].defect < cp[n - 2].defect && cp[n - 2].defect < cp[n - 1].defect, "Thue-Morse not increasing");
    expect(tm.verdict == ProfileVerdict::Growing, "Thue-Morse verdict");
    return "Thue-Morse defects " + std::to_string(cp[n - 3].defect) + ", " + std::to_string(cp[n - 2].defect) + ", " +
           std::to_string(cp[n - 1].defect);
  });

  criterion(10, "running morphism example: conjugate, class P and P' certificates", 1.0, [] {
    const Morphism phi = Morphism::parse("a->abab;b->aab");
    const Morphism psi = Morphism::parse("a->abab;b->aba");
    const auto cs = conjugates(phi);
    const auto it = std::find_if(cs.begin(), cs.end(), [&](const Conjugate& c) { return c.morphism == psi; });
    expect(it != cs.end(), "psi not among the conjugates");
    expect(it->certificate.w == Word("ab"), "certificate word is " + it->certificate.w.str());
    expect(verify_conjugacy(phi, psi, it->certificate), "certificate does not verify");
    const Word ab("ab");
    for (char a : {'a', 'b'}) expect(ab + phi.image(a) == psi.image(a) + ab, "ab phi(a) != psi(a) ab");
    const auto cert = is_class_p(psi);
    expect(cert && cert->p == Word("aba") && cert->p_map.at('a') == Word("b") && cert->p_map.at('b').empty(),
           "class P certificate of psi");
    const auto prime = is_class_p_prime(phi);
    expect(prime.has_value(), "phi not of class P'");
    expect(verify_conjugacy(phi, prime->conjugate.morphism, prime->conjugate.certificate) &&
               verify_class_p(prime->conjugate.morphism, prime->certificate),
           "class P' witness does not verify");
    return "p=aba, p_a=b, p_b=empty; P' via " + prime->conjugate.morphism.to_string();
  });

  criterion(11, "marked morphisms: Thue-Morse and Fibonacci", 1.0, [] {
    const Morphism tm = Morphism::parse("0->01;1->10");
    const auto m = is_marked(tm);
    expect(m && m->last_letters.morphism == tm && m->first_letters.morphism == tm, "Thue-Morse pair");
    const Morphism fib = Morphism::parse("0->01;1->0");
    const Morphism phi2 = Morphism::parse("0->10;1->0");
    const auto f = is_marked(fib);
    expect(f.has_value(), "Fibonacci not marked");
    expect(f->last_letters.morphism == phi2 || f->first_letters.morphism == phi2, "pair misses 0->10;1->0");
    return "Fibonacci pair (" + f->last_letters.morphism.to_string() + ", " + f->first_letters.morphism.to_string() + ")";
  });

  criterion(12, "GSS words are rich and never outnumber rich words", 120.0, [] {
    std::size_t words = 0;
    for (std::size_t n = 0; n <= 24; ++n)
      for (const Word& w : gss_words(n)) {
        expect(oracle::is_rich(w.str()), w.str() + " is not rich");
        ++words;
      }
    const CountTable table = count_rich(2, 16);
    for (std::size_t n = 0; n <= 16; ++n)
      expect(gss_count(n) <= table.rows[n].count, "gss_count(" + std::to_string(n) + ") exceeds R_2");
    return std::to_string(words) + " distinct constructed words; gss_count(16)=" + std::to_string(gss_count(16)) +
           " <= R_2(16)=" + std::to_string(table.rows[16].count);
  });

  criterion(13, "pruned count equals generate-and-filter", 60.0, [] {
    for (int d = 1; d <= 3; ++d) {
      const std::string letters = std::string("012").substr(0, static_cast<std::size_t>(d));
      const CountTable table = count_rich(d, 10);
      for (std::size_t n = 0; n <= 10; ++n) {
        std::uint64_t naive = 0;
        oracle::for_each_word(letters, n, [&](const std::string& w) { naive += oracle::is_rich(w); });
        expect(table.rows[n].count == naive,
               "d=" + std::to_string(d) + " n=" + std::to_string(n) + ": " + std::to_string(table.rows[n].count) +
                   " vs " + std::to_string(naive));
        if (d == 2 && n <= 7) expect(naive == (1u << n), "R_2(" + std::to_string(n) + ") != 2^n");
      }
    }
    return "R_3(10)=" + std::to_string(count_rich(3, 10).rows[10].count);
  });

  std::cout << (failures == 0 ? "all 13 criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
