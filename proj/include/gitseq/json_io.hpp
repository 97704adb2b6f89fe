#pragma once

#include "gitseq/normal_forms.hpp"
#include "gitseq/path_analysis.hpp"
#include "gitseq/strata.hpp"

#include <json.hpp>

namespace gitseq::io {

using json = nlohmann::ordered_json;

// Matrix schema: {"rows": r, "cols": c, "data": [row-major reals]}
json matrix_to_json(const Mat& m);
Mat matrix_from_json(const json& j);

// Triple schema: {"n": n, "A": M, "B": M, "C": M}
json triple_to_json(const WonenburgerTriple& t);
WonenburgerTriple triple_from_json(const json& j);

json signature_to_json(const Signature& s);
json sign_pair_to_json(const SignPair& p);

json point_to_json(const StabilityPoint& p);
StabilityPoint point_from_json(const json& j);

json region_to_json(const RegionLabel& r);

json config_to_json(const SpectralConfig& c);
SpectralConfig config_from_json(const json& j);

// Path schema: {"kind": "wonenburger"|"symplectic",
//               "samples": [{"t": param, "payload": triple-or-matrix}]}
json path_to_json(const MatrixPath& p);
MatrixPath path_from_json(const json& j);

json event_to_json(const Event& e);
json trace_to_json(const std::vector<TracePoint>& pts);

json poset_to_json(const StratumPoset& p);
json quotient_to_json(const QuotientResult& q);
json degrees_to_json(const Degrees& d);

// "(2,0)" or "(2,0),(1,1)" into signature pairs
SignatureAssignment parse_signature_pairs(const std::string& text);

}  // namespace gitseq::io
