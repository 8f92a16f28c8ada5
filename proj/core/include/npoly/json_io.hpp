#pragma once

#include "npoly/bounds.hpp"
#include "npoly/heights.hpp"
#include "npoly/polygon.hpp"
#include "npoly/sequences.hpp"

#include <nlohmann/json.hpp>

#include <string_view>

// Rationals travel as canonical strings ("26/9", "-3"); integers are also
// accepted on input.
namespace nlohmann {
template <>
struct adl_serializer<mpq_class> {
    static void to_json(json& j, const mpq_class& q);
    static void from_json(const json& j, mpq_class& q);
};
} // namespace nlohmann

namespace npoly {

using Json = nlohmann::json;

/// Parses text as JSON; Error(Parse) on malformed input.
Json parse_json(std::string_view text);

// Instance file: {"e": [int...], "r": ["p/q"...], "s": int, "t": int}.
// Structural problems raise Error(Parse) naming the offending field;
// semantic validation is left to validate_instance.
Json to_json(const Instance& instance);
Instance instance_from_json(const Json& j);

// Height-evaluation file: {"d", "g", "s", "t", "h_norm", "c_d", "mu"}.
Json to_json(const HeightInput& input);
HeightInput height_input_from_json(const Json& j);

// Norm-certification file:
// {"N", "s", "t", "n": [int...], "n_cap": int, "norms": ["p/q"...], "inflation": "p/q"}.
struct NormInput {
    int size = 0;
    GapWindow window;
    std::vector<std::int64_t> n;
    std::int64_t n_cap = 0;
    std::vector<Rational> norms;
    Rational inflation;
};
Json to_json(const NormInput& input);
NormInput norm_input_from_json(const Json& j);

Json to_json(const Chain& chain);
Json to_json(const ChainMinimum& minimum);
ChainMinimum chain_minimum_from_json(const Json& j);

Json to_json(const BoundCoefficient& coefficient);
Json to_json(const VertexInstance& vertex);
VertexInstance vertex_instance_from_json(const Json& j);

Json to_json(const Prop1Report& report);
Prop1Report prop1_report_from_json(const Json& j);

Json to_json(const TightnessCertificate& certificate);
TightnessCertificate tightness_certificate_from_json(const Json& j);

Json to_json(const MuCoefficientAudit& audit);
MuCoefficientAudit mu_coefficient_audit_from_json(const Json& j);

Json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);

Json to_json(const DualData& dual);
DualData dual_data_from_json(const Json& j);

Json to_json(const NormCertificate& certificate);
NormCertificate norm_certificate_from_json(const Json& j);

} // namespace npoly
