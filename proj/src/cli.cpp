#include "richwords/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "richwords/enumeration.hpp"
#include "richwords/error.hpp"
#include "richwords/morphism.hpp"
#include "richwords/pal_index.hpp"
#include "richwords/richness.hpp"
#include "richwords/serialize.hpp"

namespace richwords::cli {
namespace {

struct Outcome {
  Json input = Json::object();
  Json result;
  std::string text;  // plain-mode output, newline-terminated lines
  int code = kSuccess;
};

std::string join(const std::vector<Word>& words, std::string_view sep) {
  std::string out;
  for (const Word& w : words) {
    if (!out.empty()) out += sep;
    out += w.str();
  }
  return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& xs) {
  std::string out;
  for (const T& x : xs) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

std::string line(const std::string& s) { return s + "\n"; }

std::string bool_text(bool b) { return b ? "true" : "false"; }

// ---- word commands (also usable in --file batch mode) ----

Outcome defect_cmd(const Word& w) {
  const DefectReport report = defect(w);
  Outcome o;
  o.input = {{"word", w.str()}};
  o.result = to_json(report);
  o.text = line("length=" + std::to_string(w.size()) + " palindromes=" + std::to_string(report.palindrome_count) +
                " defect=" + std::to_string(report.defect));
  return o;
}

Outcome rich_cmd(const Word& w) {
  const DefectReport report = defect(w);
  const bool rich = report.defect == 0;
  Outcome o;
  o.input = {{"word", w.str()}};
  o.result = {{"word", w.str()}, {"defect", report.defect}, {"rich", rich}};
  o.text = line("defect=" + std::to_string(report.defect) + " rich=" + bool_text(rich));
  o.code = rich ? kSuccess : kPredicateFalse;
  return o;
}

Outcome lps_cmd(const Word& w) {
  const Word r = lps(w);
  Outcome o;
  o.input = {{"word", w.str()}};
  o.result = {{"word", w.str()}, {"lps", r.str()}};
  o.text = line(r.str());
  return o;
}

Outcome lpp_cmd(const Word& w) {
  const Word r = lpp(w);
  Outcome o;
  o.input = {{"word", w.str()}};
  o.result = {{"word", w.str()}, {"lpp", r.str()}};
  o.text = line(r.str());
  return o;
}

Outcome ups_cmd(const Word& w) {
  const auto parts = ups_factorization(w);
  Json arr = Json::array();
  for (const Word& p : parts) arr.push_back(p.str());
  Outcome o;
  o.input = {{"word", w.str()}};
  o.result = {{"word", w.str()}, {"parts", std::move(arr)}};
  o.text = line(join(parts, " "));
  return o;
}

Outcome witness_cmd(const Word& w) {
  const E2Witness wit = extract_e2_witness(w);
  Outcome o;
  o.input = {{"word", w.str()}};
  o.result = to_json(wit);
  o.text = line("u=" + wit.u.str() + " v=" + wit.v.str() + " r=" + wit.r.str() + " p=" + wit.p.str() +
                " q=" + wit.q.str() + " z=" + std::string(1, wit.z));
  return o;
}

Outcome binary_witness_cmd(const Word& w) {
  const auto q = binary_nonrich_witness(w);
  Outcome o;
  o.input = {{"word", w.str()}};
  o.result = {{"word", w.str()}, {"q", q ? Json(q->str()) : Json(nullptr)}};
  o.text = line("q=" + (q ? q->str() : std::string("none")));
  o.code = q ? kSuccess : kPredicateFalse;
  return o;
}

Outcome table1_cmd(const Word& w) {
  const auto rows = rich_factor_table(w);
  Json arr = Json::array();
  Outcome o;
  for (const RichFactorRow& r : rows) {
    arr.push_back(to_json(r));
    o.text += line(format_row(r));
  }
  o.input = {{"word", w.str()}};
  o.result = {{"word", w.str()}, {"rows", std::move(arr)}};
  return o;
}

using WordCommand = std::function<Outcome(const Word&)>;

Outcome run_word_command(const WordCommand& cmd, const std::string& word_arg, const std::string& file) {
  if (file.empty()) {
    return cmd(Word(word_arg));
  }
  std::ifstream in(file);
  if (!in) throw InvalidInput("cannot read word file '" + file + "'");
  Outcome batch;
  batch.input = {{"file", file}};
  batch.result = Json::array();
  std::string text;
  for (std::string raw; std::getline(in, raw);) {
    while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ' || raw.back() == '\t')) raw.pop_back();
    if (raw.empty()) continue;
    Outcome one = cmd(Word(raw));
    batch.result.push_back(std::move(one.result));
    batch.text += one.text;
    batch.code = std::max(batch.code, one.code);
  }
  return batch;
}

// ---- other commands ----

Outcome returns_cmd(const Word& host, const Word& factor) {
  const auto words = complete_return_words(host, factor);
  const std::vector<Word> list(words.begin(), words.end());
  Json arr = Json::array();
  Outcome o;
  for (const Word& w : list) {
    arr.push_back(w.str());
    o.text += line(w.str());
  }
  o.input = {{"word", host.str()}, {"factor", factor.str()}};
  o.result = {{"return_words", std::move(arr)}, {"all_palindromic_return_words", return_words_palindromic(host)}};
  return o;
}

Outcome compat_cmd(const Word& u, const Word& v, std::optional<std::size_t> max_len, const std::string& alphabet) {
  const std::size_t bound = max_len.value_or(std::max(u.size(), v.size()) + 8);
  const std::optional<Alphabet> letters = alphabet.empty() ? std::nullopt : std::optional<Alphabet>(Alphabet(alphabet));
  const CompatVerdict verdict = compat_search(u, v, bound, letters);
  Outcome o;
  o.input = {{"u", u.str()}, {"v", v.str()}, {"max_len", bound}};
  if (letters) o.input["alphabet"] = letters->letters();
  o.result = to_json(verdict);
  std::string text = "status=" + std::string(to_string(verdict.status));
  if (verdict.witness) text += " witness=" + verdict.witness->str();
  if (verdict.conflict_u) text += " u=" + verdict.conflict_u->str() + " v=" + verdict.conflict_v->str();
  o.text = line(text);
  return o;
}

Outcome count_rich_cmd(int d, std::size_t n, bool reduced, bool list) {
  Outcome o;
  o.input = {{"d", d}, {"n", n}, {"reduced", reduced}, {"list", list}};
  if (list) {
    const auto words = enumerate_rich(d, n, reduced);
    Json arr = Json::array();
    for (const Word& w : words) {
      arr.push_back(w.str());
      o.text += line(w.str());
    }
    o.result = {{"d", d}, {"n", n}, {"symmetry_reduced", reduced}, {"count", words.size()}, {"words", std::move(arr)}};
    return o;
  }
  const CountTable table = count_rich(d, n, reduced);
  o.result = to_json(table);
  o.text = line("n\tcount\tmillis");
  for (const CountRow& r : table.rows)
    o.text += line(std::to_string(r.n) + "\t" + std::to_string(r.count) + "\t" + std::to_string(r.millis));
  return o;
}

Outcome gss_cmd(const std::vector<std::size_t>& n_seq, const std::vector<std::size_t>& m_seq,
                std::optional<std::size_t> count_n) {
  Outcome o;
  if (count_n) {
    const auto c = gss_count(*count_n);
    o.input = {{"count", *count_n}};
    o.result = {{"n", *count_n}, {"gss_count", c}};
    o.text = line(std::to_string(c));
    return o;
  }
  const Word w = gss_word({n_seq, m_seq});
  const bool rich = is_rich(w);
  o.input = {{"n_seq", n_seq}, {"m_seq", m_seq}};
  o.result = {{"word", w.str()}, {"length", w.size()}, {"rich", rich}};
  o.text = line(w.str() + " rich=" + bool_text(rich));
  if (!rich) throw VerificationFailure("construction produced the non-rich word " + w.str());
  return o;
}

Outcome minimal_nonrich_cmd(int d, std::size_t n) {
  const auto words = minimal_nonrich(d, n);
  Json arr = Json::array();
  Outcome o;
  for (const Word& w : words) {
    arr.push_back(w.str());
    o.text += line(w.str());
  }
  o.input = {{"d", d}, {"max_n", n}};
  o.result = {{"d", d}, {"max_n", n}, {"count", words.size()}, {"words", std::move(arr)}};
  return o;
}

Outcome br_sum_cmd(const Word& period, std::optional<std::size_t> k_max) {
  const std::size_t k = k_max.value_or(default_k_max(period));
  const BrlekReutenauerSum sum = brlek_reutenauer_sum(period, k);
  Outcome o;
  o.input = {{"period", period.str()}, {"k_max", k}};
  o.result = to_json(sum, period);
  o.text = line("total=" + std::to_string(sum.total) + " saturated=" + bool_text(sum.saturated) +
                " defect_estimate=" + (sum.defect_estimate ? std::to_string(*sum.defect_estimate) : "none"));
  o.text += line("summands=" + join_numbers(sum.summands));
  return o;
}

Outcome gap_cmd(const Word& w, std::size_t n) {
  const auto gap = complexity_identity_gap(w, n);
  Outcome o;
  o.input = {{"word", w.str()}, {"n", n}};
  o.result = {{"word", w.str()}, {"n", n}, {"gap", gap}};
  o.text = line(std::to_string(gap));
  return o;
}

struct MorphOptions {
  std::string spec;
  std::string action = "analyze";
  std::string seed;
  std::optional<std::size_t> length;
  std::size_t checkpoints = 12;
  std::size_t factor_len = 8;
  std::optional<std::size_t> prefix_len;
};

char pick_seed(const Morphism& phi, const std::string& requested) {
  if (!requested.empty()) {
    if (requested.size() != 1) throw InvalidInput("seed must be a single letter, got '" + requested + "'");
    return requested.front();
  }
  for (const auto& [letter, image] : phi.images())
    if (image.front() == letter && image.size() >= 2) return letter;
  throw PreconditionError("morphism " + phi.to_string() + " is not prolongable on any letter");
}

Outcome analyze(const Morphism& phi) {
  Outcome o;
  const bool endo = phi.is_endomorphism();
  const auto conj = conjugates(phi);
  Json conj_json = Json::array();
  for (const Conjugate& c : conj) conj_json.push_back(to_json(c));
  const auto class_p = is_class_p(phi);
  const auto class_p_prime = is_class_p_prime(phi);
  // -1: not applicable to this morphism
  const int primitive = endo ? int{is_primitive(phi)} : -1;
  const int stationary = phi.images().size() >= 2 ? int{is_stationary(phi)} : -1;
  const auto marked = endo ? is_marked(phi) : std::nullopt;

  auto opt_bool = [](int b) { return b < 0 ? Json(nullptr) : Json(b == 1); };
  o.result = {{"morphism", phi.to_string()},
              {"endomorphism", endo},
              {"primitive", opt_bool(primitive)},
              {"stationary", opt_bool(stationary)},
              {"conjugates", std::move(conj_json)},
              {"class_p", class_p ? to_json(*class_p) : Json(nullptr)},
              {"class_p_prime", class_p_prime ? to_json(*class_p_prime) : Json(nullptr)},
              {"marked", marked ? to_json(*marked) : Json(nullptr)}};

  auto opt_text = [](int b) { return b < 0 ? std::string("n/a") : bool_text(b == 1); };
  auto cert_text = [](const ClassPCertificate& c) {
    std::string s = "p=" + c.p.str();
    for (const auto& [letter, pa] : c.p_map) s += std::string(" p_") + letter + "=" + pa.str();
    return s;
  };
  auto conj_text = [](const Conjugate& c) {
    return c.morphism.to_string() + " (w=" + c.certificate.w.str() + ", " +
           std::string(to_string(c.certificate.direction)) + ")";
  };
  o.text += line("morphism: " + phi.to_string());
  o.text += line("endomorphism: " + bool_text(endo));
  o.text += line("primitive: " + opt_text(primitive));
  o.text += line("stationary: " + opt_text(stationary));
  o.text += line("conjugates: " + std::to_string(conj.size()));
  for (const Conjugate& c : conj) o.text += line("  " + conj_text(c));
  o.text += line("class P: " + (class_p ? cert_text(*class_p) : std::string("absent")));
  o.text += line("class P': " + (class_p_prime ? "via " + conj_text(class_p_prime->conjugate) + " " +
                                                     cert_text(class_p_prime->certificate)
                                               : std::string("absent")));
  o.text += line("marked: " + (marked ? "phi1=" + conj_text(marked->last_letters) +
                                           " phi2=" + conj_text(marked->first_letters) +
                                           " extremal=" + bool_text(marked->extremal_witness)
                                     : std::string("absent")));
  return o;
}

Outcome morph_cmd(const MorphOptions& opt, std::ostream& err) {
  const Morphism phi = Morphism::parse(opt.spec);
  Outcome o;
  if (opt.action == "analyze") {
    o = analyze(phi);
  } else if (opt.action == "fixpoint") {
    const char seed = pick_seed(phi, opt.seed);
    const Word prefix = fixed_point_prefix(phi, seed, opt.length.value_or(100));
    o.result = {{"morphism", phi.to_string()}, {"seed", std::string(1, seed)}, {"prefix", prefix.str()}};
    o.text = line(prefix.str());
  } else if (opt.action == "defect-profile") {
    const char seed = pick_seed(phi, opt.seed);
    const DefectProfile profile = defect_profile(phi, seed, opt.length.value_or(10000), opt.checkpoints);
    if (!profile.primitive) err << "warning: " << phi.to_string() << " is not primitive\n";
    o.result = to_json(profile);
    for (const DefectCheckpoint& c : profile.checkpoints)
      o.text += line(std::to_string(c.length) + "\t" + std::to_string(c.defect));
    o.text += line("verdict=" + std::string(to_string(profile.verdict)));
  } else {
    const char seed = pick_seed(phi, opt.seed);
    const std::size_t prefix_len = opt.prefix_len.value_or(opt.length.value_or(32 * opt.factor_len));
    const ReversalProbe probe = reversal_closure_probe(phi, seed, opt.factor_len, prefix_len);
    if (probe.short_prefix) err << "warning: prefix length " << prefix_len << " is below 4 x factor length\n";
    o.result = to_json(probe);
    o.text = line("closed=" + bool_text(probe.closed) + " palindromes=" + std::to_string(probe.palindrome_count) +
                  (probe.missing_reversal ? " missing=" + probe.missing_reversal->str() : std::string()));
  }
  o.input = {{"spec", opt.spec}, {"action", opt.action}};
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Palindromic defect, rich words and morphism analysis"};
  app.name("richwords");
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit one JSON envelope on standard output");

  std::string word, word2, file, alphabet;
  std::size_t n = 0;
  int d = 0;
  std::optional<std::size_t> max_len, k_max, gss_count_n;
  bool reduced = false, list = false;
  std::vector<std::size_t> n_seq, m_seq;
  MorphOptions morph;

  std::function<Outcome()> action;
  std::string command;


  auto add_word_sub = [&](const std::string& name, const std::string& help, WordCommand cmd) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("word", word, "Word to analyze");
    sub->add_option("--file", file, "Read one word per line from this file");
    sub->callback([&, name, cmd] {
      command = name;
      if (file.empty() && word.empty())
        throw CLI::ValidationError("word", "a word argument or --file is required");
      action = [&, cmd] { return run_word_command(cmd, word, file); };
    });
  };
  add_word_sub("defect", "Palindromic defect and per-prefix defects", defect_cmd);
  add_word_sub("rich", "Test richness (exit 1 if not rich)", rich_cmd);
  add_word_sub("lps", "Longest palindromic suffix", lps_cmd);
  add_word_sub("lpp", "Longest palindromic prefix", lpp_cmd);
  add_word_sub("ups", "UPS-factorization of a rich word", ups_cmd);
  add_word_sub("witness", "Extract an E2 pair from a non-rich word", witness_cmd);
  add_word_sub("binary-witness", "Non-palindromic q certifying non-richness of a binary word (exit 1 if none)",
               binary_witness_cmd);
  add_word_sub("table1", "Rich factors with their (lpp, lps) pairs", table1_cmd);

  auto* returns = app.add_subcommand("returns", "Complete return words of a factor");
  returns->add_option("word", word)->required();
  returns->add_option("factor", word2)->required();
  returns->callback([&] {
    command = "returns";
    action = [&] { return returns_cmd(Word(word), Word(word2)); };
  });

  auto* compat = app.add_subcommand("compat", "Search for a rich word containing both u and v");
  compat->add_option("u", word)->required();
  compat->add_option("v", word2)->required();
  compat->add_option("--max-len", max_len, "Longest superword to search (default max(|u|,|v|) + 8)");
  compat->add_option("--alphabet", alphabet, "Search alphabet (default: letters of u and v)");
  compat->callback([&] {
    command = "compat";
    action = [&] { return compat_cmd(Word(word), Word(word2), max_len, alphabet); };
  });

  auto* count = app.add_subcommand("count-rich", "Count rich words R_d(n) for lengths 0..n");
  count->add_option("d", d)->required();
  count->add_option("n", n)->required();
  count->add_flag("--reduced", reduced, "Count orbit representatives under letter permutation and reversal");
  count->add_flag("--list", list, "List the rich words of length n instead of counting");
  count->callback([&] {
    command = "count-rich";
    action = [&] { return count_rich_cmd(d, n, reduced, list); };
  });

  auto* gss = app.add_subcommand("gss", "Binary rich words a^n1 b^m1 ... a^nk b^mk");
  gss->add_option("--n-seq", n_seq, "Non-decreasing exponents of a")->delimiter(',');
  gss->add_option("--m-seq", m_seq, "Non-decreasing exponents of b")->delimiter(',');
  gss->add_option("--count", gss_count_n, "Count distinct constructed words of this length instead");
  gss->callback([&] {
    command = "gss";
    if (!gss_count_n && n_seq.empty() && m_seq.empty())
      throw CLI::ValidationError("gss", "give --n-seq and --m-seq, or --count");
    action = [&] { return gss_cmd(n_seq, m_seq, gss_count_n); };
  });

  auto* minimal = app.add_subcommand("minimal-nonrich", "Minimal non-rich words up to length n (orbit representatives)");
  minimal->add_option("d", d)->required();
  minimal->add_option("n", n)->required();
  minimal->callback([&] {
    command = "minimal-nonrich";
    action = [&] { return minimal_nonrich_cmd(d, n); };
  });

  auto* br = app.add_subcommand("br-sum", "Defect series of a periodic word period^omega");
  br->add_option("period", word)->required();
  br->add_option("--k-max", k_max, "Last series index (default 3 |period|)");
  br->callback([&] {
    command = "br-sum";
    action = [&] { return br_sum_cmd(Word(word), k_max); };
  });

  auto* gap = app.add_subcommand("gap", "C(n+1) - C(n) + 2 - P(n+1) - P(n) of a finite word");
  gap->add_option("word", word)->required();
  gap->add_option("n", n)->required();
  gap->callback([&] {
    command = "gap";
    action = [&] { return gap_cmd(Word(word), n); };
  });

  auto* morph_sub = app.add_subcommand("morph", "Morphism analysis, e.g. morph 'a->abab;b->aab' analyze");
  morph_sub->add_option("spec", morph.spec, "Morphism like a->abab;b->aab")->required();
  morph_sub->add_option("action", morph.action, "analyze | fixpoint | defect-profile | reversal-probe")
      ->check(CLI::IsMember({"analyze", "fixpoint", "defect-profile", "reversal-probe"}));
  morph_sub->add_option("--seed", morph.seed, "Letter to iterate from (default: first prolongable letter)");
  morph_sub->add_option("--len", morph.length, "Prefix length (fixpoint: 100, defect-profile: 10000)");
  morph_sub->add_option("--checkpoints", morph.checkpoints, "Number of defect-profile checkpoints");
  morph_sub->add_option("--factor-len", morph.factor_len, "Longest factor checked by reversal-probe");
  morph_sub->add_option("--prefix-len", morph.prefix_len, "Prefix length for reversal-probe (default 32 x factor-len)");
  morph_sub->callback([&] {
    command = "morph";
    action = [&] { return morph_cmd(morph, err); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = action();
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (json) {
      const Json envelope{{"command", command},
                          {"input", std::move(outcome.input)},
                          {"result", std::move(outcome.result)},
                          {"elapsed_ms", static_cast<std::int64_t>(elapsed)}};
      out << envelope.dump() << '\n';
    } else {
      out << outcome.text;
    }
    return outcome.code;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPreconditionError;
  } catch (const VerificationFailure& e) {
    err << "internal verification failed: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailure;
  }
}

}  // namespace richwords::cli
