#pragma once

#include "frobknot/complex.hpp"
#include "frobknot/frobenius.hpp"
#include "frobknot/rank2.hpp"
#include "frobknot/verifier.hpp"

#include <json.hpp>

namespace frobknot {

using Json = nlohmann::ordered_json;

/// {"kind": "Z"} / {"kind": "Q"} / {"kind": "Fp", "p": 5}. A bare string "Z", "Q", "Fp:5" is also read.
Json ring_to_json(const RingSpec& ring);
RingSpec ring_from_json(const Json& j);

/// Scalars are written as strings: decimal (Z), "n/d" (Q), residues (F_p). Numbers are accepted on input.
Json scalar_to_json(const RingSpec& ring, const Scalar& x);
Scalar scalar_from_json(const RingSpec& ring, const Json& j);

/// {"ring", "commutative", "products": {"e1e1": [a, b], "e1e2": [a, b], "e2e1"?: [a, b], "e2e2": [a, b]}}
Json mult_table_to_json(const MultTable& t);
MultTable mult_table_from_json(const Json& j);

/// {"ring", "rank", "mult": [c(i,j,k)...], "comult": [d(k,i,j)...], "unit"?: [...], "counit"?: [...]},
/// flat arrays in the FrobeniusData index layout. The result is validated.
Json frobenius_to_json(const FrobeniusData& f);
FrobeniusData frobenius_from_json(const Json& j);

Json axiom_report_to_json(const AxiomReport& r);
Json relation_report_to_json(const RelationReport& r);
/// {"normalized", "ring", "groups": [{"i", "q"?, "free_rank", "torsion"}]}
Json homology_to_json(const HomologyTable& t, bool normalized, const RingSpec& ring);
Json report_to_json(const VerificationReport& r);

/// Parse text as JSON, turning parse failures into Error.
Json parse_json(const std::string& text);

}  // namespace frobknot
