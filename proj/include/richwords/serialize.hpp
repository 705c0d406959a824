#pragma once

// JSON forms of the analysis results. Field order is fixed (ordered_json) so
// serialized output is canonical and round-trips byte for byte.

#include "json.hpp"

#include "richwords/enumeration.hpp"
#include "richwords/morphism.hpp"
#include "richwords/pal_index.hpp"
#include "richwords/richness.hpp"

namespace richwords {

using Json = nlohmann::ordered_json;

Json to_json(const DefectReport& report);
Json to_json(const CompatVerdict& verdict);
Json to_json(const E2Witness& witness);
Json to_json(const BrlekReutenauerSum& sum, const Word& period);
Json to_json(const CountTable& table);
Json to_json(const RichFactorRow& row);

Json to_json(const Morphism& phi);
Json to_json(const ConjugacyCertificate& cert);
Json to_json(const Conjugate& conjugate);
Json to_json(const ClassPCertificate& cert);
Json to_json(const ClassPPrimeWitness& witness);
Json to_json(const MarkedWitness& witness);
Json to_json(const DefectProfile& profile);
Json to_json(const ReversalProbe& probe);

}  // namespace richwords
