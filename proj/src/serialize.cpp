#include "richwords/serialize.hpp"

namespace richwords {
namespace {

Json optional_word(const std::optional<Word>& w) { return w ? Json(w->str()) : Json(nullptr); }

Json word_map(const std::map<char, Word>& m) {
  Json out = Json::object();
  for (const auto& [letter, w] : m) out[std::string(1, letter)] = w.str();
  return out;
}

}  // namespace

Json to_json(const DefectReport& report) {
  return Json{{"word", report.word.str()},
              {"length", report.word.size()},
              {"palindromes", report.palindrome_count},
              {"defect", report.defect},
              {"per_prefix_defect", report.per_prefix_defect}};
}

Json to_json(const CompatVerdict& verdict) {
  return Json{{"status", to_string(verdict.status)},
              {"witness", optional_word(verdict.witness)},
              {"u", optional_word(verdict.conflict_u)},
              {"v", optional_word(verdict.conflict_v)},
              {"bound", verdict.bound}};
}

Json to_json(const E2Witness& witness) {
  return Json{{"u", witness.u.str()},         {"v", witness.v.str()}, {"r", witness.r.str()},
              {"p", witness.p.str()},         {"q", witness.q.str()}, {"z", std::string(1, witness.z)}};
}

Json to_json(const BrlekReutenauerSum& sum, const Word& period) {
  return Json{{"period", period.str()},
              {"k_max", sum.k_max},
              {"summands", sum.summands},
              {"partial_sums", sum.partial_sums},
              {"total", sum.total},
              {"saturated", sum.saturated},
              {"defect_estimate", sum.defect_estimate ? Json(*sum.defect_estimate) : Json(nullptr)}};
}

Json to_json(const CountTable& table) {
  Json rows = Json::array();
  for (const CountRow& r : table.rows) rows.push_back(Json{{"n", r.n}, {"count", r.count}, {"millis", r.millis}});
  return Json{{"d", table.d}, {"symmetry_reduced", table.symmetry_reduced}, {"rows", std::move(rows)}};
}

Json to_json(const RichFactorRow& row) {
  return Json{{"u", row.u.str()}, {"lpp", row.lpp.str()}, {"lps", row.lps.str()}};
}

Json to_json(const Morphism& phi) { return Json(phi.to_string()); }

Json to_json(const ConjugacyCertificate& cert) {
  return Json{{"w", cert.w.str()}, {"direction", to_string(cert.direction)}};
}

Json to_json(const Conjugate& conjugate) {
  return Json{{"morphism", conjugate.morphism.to_string()}, {"certificate", to_json(conjugate.certificate)}};
}

Json to_json(const ClassPCertificate& cert) { return Json{{"p", cert.p.str()}, {"p_map", word_map(cert.p_map)}}; }

Json to_json(const ClassPPrimeWitness& witness) {
  return Json{{"conjugate", to_json(witness.conjugate)}, {"certificate", to_json(witness.certificate)}};
}

Json to_json(const MarkedWitness& witness) {
  return Json{{"phi1", to_json(witness.last_letters)},
              {"phi2", to_json(witness.first_letters)},
              {"extremal_witness", witness.extremal_witness}};
}

Json to_json(const DefectProfile& profile) {
  Json cps = Json::array();
  for (const DefectCheckpoint& c : profile.checkpoints) cps.push_back(Json{{"length", c.length}, {"defect", c.defect}});
  return Json{{"generator", profile.generator.to_string()},
              {"seed", std::string(1, profile.seed)},
              {"primitive", profile.primitive},
              {"checkpoints", std::move(cps)},
              {"verdict", to_string(profile.verdict)}};
}

Json to_json(const ReversalProbe& probe) {
  return Json{{"closed", probe.closed},
              {"missing_reversal", optional_word(probe.missing_reversal)},
              {"palindromes", probe.palindrome_count},
              {"factor_len", probe.factor_len},
              {"prefix_len", probe.prefix_len},
              {"short_prefix", probe.short_prefix}};
}

}  // namespace richwords
