#include "npoly/json_io.hpp"

#include "npoly/error.hpp"

#include <string>
#include <type_traits>

namespace nlohmann {

void adl_serializer<mpq_class>::to_json(json& j, const mpq_class& q)
{
    j = npoly::to_string(q);
}

void adl_serializer<mpq_class>::from_json(const json& j, mpq_class& q)
{
    if (j.is_string()) {
        q = npoly::parse_rational(j.get_ref<const std::string&>());
    } else if (j.is_number_integer()) {
        q = npoly::parse_rational(j.dump());
    } else {
        throw npoly::Error(npoly::ErrorKind::Parse,
                           "expected a rational string \"p/q\", got " + j.dump());
    }
}

} // namespace nlohmann

namespace npoly {

namespace {

template <class T>
constexpr bool is_integer_v = std::is_integral_v<T> && !std::is_same_v<T, bool>;

const Json& field(const Json& j, const char* name)
{
    if (!j.is_object()) throw Error(ErrorKind::Parse, "expected a JSON object");
    const auto it = j.find(name);
    if (it == j.end()) throw Error(ErrorKind::Parse, std::string("missing field '") + name + "'");
    return *it;
}

// Reads field `name` as T, re-raising any failure as a parse error that
// names the field.
template <class T>
T get(const Json& j, const char* name)
{
    const Json& value = field(j, name);
    try {
        if constexpr (is_integer_v<T>) {
            if (!value.is_number_integer()) throw Error(ErrorKind::Parse, "expected an integer");
        }
        return value.get<T>();
    } catch (const Error& err) {
        throw Error(ErrorKind::Parse, std::string("field '") + name + "': " + err.what());
    } catch (const Json::exception& err) {
        throw Error(ErrorKind::Parse, std::string("field '") + name + "': " + err.what());
    }
}

template <class T>
std::vector<T> get_list(const Json& j, const char* name)
{
    const Json& value = field(j, name);
    if (!value.is_array()) {
        throw Error(ErrorKind::Parse, std::string("field '") + name + "': expected an array");
    }
    std::vector<T> out;
    out.reserve(value.size());
    for (std::size_t k = 0; k < value.size(); ++k) {
        try {
            if constexpr (is_integer_v<T>) {
                if (!value[k].is_number_integer()) {
                    throw Error(ErrorKind::Parse, "expected an integer, got " + value[k].dump());
                }
            }
            out.push_back(value[k].get<T>());
        } catch (const Error& err) {
            throw Error(ErrorKind::Parse,
                        std::string("field '") + name + "[" + std::to_string(k) + "]': " + err.what());
        } catch (const Json::exception& err) {
            throw Error(ErrorKind::Parse,
                        std::string("field '") + name + "[" + std::to_string(k) + "]': " + err.what());
        }
    }
    return out;
}

GapWindow window_from_json(const Json& j)
{
    return {get<int>(j, "s"), get<int>(j, "t")};
}

Chain chain_from(const Json& j, const char* name)
{
    return Chain{get_list<int>(j, name)};
}

BoundConstant constant_from(const Json& j)
{
    return {get<Rational>(j, "B"), get<int>(j, "B_argmax")};
}

} // namespace

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& err) {
        throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + err.what());
    }
}

Json to_json(const Instance& instance)
{
    return {{"e", std::vector<std::int64_t>(instance.e.values().begin(), instance.e.values().end())},
            {"r", std::vector<Rational>(instance.r.values().begin(), instance.r.values().end())},
            {"s", instance.window.s},
            {"t", instance.window.t}};
}

Instance instance_from_json(const Json& j)
{
    return {ESequence(get_list<std::int64_t>(j, "e")), RSequence(get_list<Rational>(j, "r")),
            window_from_json(j)};
}

Json to_json(const HeightInput& input)
{
    return {{"d", input.profile.degree()},
            {"g", input.profile.genus()},
            {"s", input.window.s},
            {"t", input.window.t},
            {"h_norm", input.h_norm},
            {"c_d", input.c_d},
            {"mu", input.minima.mu}};
}

HeightInput height_input_from_json(const Json& j)
{
    const int d = get<int>(j, "d");
    const int g = get<int>(j, "g");
    const GapWindow window = window_from_json(j);
    Rational h_norm = get<Rational>(j, "h_norm");
    Rational c_d = get<Rational>(j, "c_d");
    MinimaProfile minima{get_list<Rational>(j, "mu")};
    return {std::move(h_norm), std::move(c_d), CurveProfile(d, g), window, std::move(minima)};
}

Json to_json(const NormInput& input)
{
    return {{"N", input.size},          {"s", input.window.s},        {"t", input.window.t},
            {"n", input.n},             {"n_cap", input.n_cap},       {"norms", input.norms},
            {"inflation", input.inflation}};
}

NormInput norm_input_from_json(const Json& j)
{
    NormInput input;
    input.size = get<int>(j, "N");
    input.window = window_from_json(j);
    input.n = get_list<std::int64_t>(j, "n");
    input.n_cap = get<std::int64_t>(j, "n_cap");
    input.norms = get_list<Rational>(j, "norms");
    input.inflation = get<Rational>(j, "inflation");
    return input;
}

Json to_json(const Chain& chain)
{
    return chain.indices;
}

Json to_json(const ChainMinimum& minimum)
{
    return {{"S", minimum.value}, {"witness", to_json(minimum.witness)}};
}

ChainMinimum chain_minimum_from_json(const Json& j)
{
    return {get<Rational>(j, "S"), chain_from(j, "witness")};
}

Json to_json(const BoundCoefficient& coefficient)
{
    return {{"i", coefficient.index},
            {"branch", to_string(coefficient.branch)},
            {"value", coefficient.value}};
}

Json to_json(const VertexInstance& vertex)
{
    return {{"i", vertex.index},
            {"alpha", vertex.alpha},
            {"sigma", vertex.sigma},
            {"r", std::vector<Rational>(vertex.r.values().begin(), vertex.r.values().end())}};
}

VertexInstance vertex_instance_from_json(const Json& j)
{
    VertexInstance vertex;
    vertex.index = get<int>(j, "i");
    vertex.alpha = get<Rational>(j, "alpha");
    vertex.sigma = get_list<Rational>(j, "sigma");
    vertex.r = RSequence(get_list<Rational>(j, "r"));
    return vertex;
}

Json to_json(const Prop1Report& report)
{
    return {{"instance", to_json(report.instance)},
            {"S", report.chain_minimum},
            {"witness", to_json(report.witness)},
            {"B", report.constant.value},
            {"B_argmax", report.constant.argmax},
            {"rhs_sum", report.rhs_sum},
            {"bound", report.bound},
            {"slack", report.slack},
            {"cross_checked", report.cross_checked},
            {"verdict", report.holds() ? "holds" : "violated"}};
}

Prop1Report prop1_report_from_json(const Json& j)
{
    Prop1Report report;
    report.instance = instance_from_json(field(j, "instance"));
    report.chain_minimum = get<Rational>(j, "S");
    report.witness = chain_from(j, "witness");
    report.constant = constant_from(j);
    report.rhs_sum = get<Rational>(j, "rhs_sum");
    report.bound = get<Rational>(j, "bound");
    report.slack = get<Rational>(j, "slack");
    report.cross_checked = get<bool>(j, "cross_checked");
    return report;
}

Json to_json(const TightnessCertificate& certificate)
{
    return {{"e", std::vector<std::int64_t>(certificate.e.values().begin(),
                                            certificate.e.values().end())},
            {"s", certificate.window.s},
            {"t", certificate.window.t},
            {"vertex", to_json(certificate.vertex)},
            {"B", certificate.constant},
            {"S", certificate.chain_minimum},
            {"witness", to_json(certificate.witness)},
            {"rhs_sum", certificate.rhs_sum},
            {"exact", certificate.exact()}};
}

TightnessCertificate tightness_certificate_from_json(const Json& j)
{
    TightnessCertificate cert;
    cert.e = ESequence(get_list<std::int64_t>(j, "e"));
    cert.window = window_from_json(j);
    cert.vertex = vertex_instance_from_json(field(j, "vertex"));
    cert.constant = get<Rational>(j, "B");
    cert.chain_minimum = get<Rational>(j, "S");
    cert.witness = chain_from(j, "witness");
    cert.rhs_sum = get<Rational>(j, "rhs_sum");
    return cert;
}

Json to_json(const MuCoefficientAudit& audit)
{
    return {{"A", audit.a_st.value},
            {"A_argmax", audit.a_st.argmax},
            {"coefficients", audit.coefficients},
            {"total", audit.total}};
}

MuCoefficientAudit mu_coefficient_audit_from_json(const Json& j)
{
    MuCoefficientAudit audit;
    audit.a_st = {get<Rational>(j, "A"), get<int>(j, "A_argmax")};
    audit.coefficients = get_list<Rational>(j, "coefficients");
    audit.total = get<Rational>(j, "total");
    return audit;
}

Json to_json(const IntMatrix& m)
{
    Json rows = Json::array();
    for (int i = 1; i <= m.size(); ++i) {
        Json row = Json::array();
        for (int k = 1; k <= m.size(); ++k) row.push_back(to_string(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix int_matrix_from_json(const Json& j)
{
    if (!j.is_array()) throw Error(ErrorKind::Parse, "matrix: expected an array of rows");
    const int n = static_cast<int>(j.size());
    IntMatrix m(n);
    for (int i = 1; i <= n; ++i) {
        const Json& row = j[static_cast<std::size_t>(i - 1)];
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw Error(ErrorKind::Parse, "matrix row " + std::to_string(i) + " is not of length " +
                                              std::to_string(n));
        }
        for (int k = 1; k <= n; ++k) {
            const Rational entry = row[static_cast<std::size_t>(k - 1)].get<Rational>();
            if (entry.get_den() != 1) {
                throw Error(ErrorKind::Parse, "matrix entry (" + std::to_string(i) + ", " +
                                                  std::to_string(k) + ") is not an integer");
            }
            m(i, k) = entry.get_num();
        }
    }
    return m;
}

Json to_json(const DualData& dual)
{
    return {{"n", dual.n},
            {"s", dual.window.s},
            {"t", dual.window.t},
            {"n_cap", dual.n_cap},
            {"W", to_json(dual.w)},
            {"V", to_json(dual.v)}};
}

DualData dual_data_from_json(const Json& j)
{
    DualData dual;
    dual.n = get_list<std::int64_t>(j, "n");
    dual.window = window_from_json(j);
    dual.n_cap = get<std::int64_t>(j, "n_cap");
    try {
        dual.w = int_matrix_from_json(field(j, "W"));
        dual.v = int_matrix_from_json(field(j, "V"));
    } catch (const Json::exception& err) {
        throw Error(ErrorKind::Parse, std::string("matrix: ") + err.what());
    }
    return dual;
}

Json to_json(const NormCertificate& certificate)
{
    Json pass = Json::array();
    for (bool p : certificate.pass) pass.push_back(p);
    return {{"bounds", certificate.bounds},
            {"targets", certificate.targets},
            {"pass", pass},
            {"inflation", certificate.inflation},
            {"minimal_inflation", certificate.minimal_inflation},
            {"all_pass", certificate.all_pass()}};
}

NormCertificate norm_certificate_from_json(const Json& j)
{
    NormCertificate cert;
    cert.bounds = get_list<Rational>(j, "bounds");
    cert.targets = get_list<Rational>(j, "targets");
    for (bool p : get_list<bool>(j, "pass")) cert.pass.push_back(p);
    cert.inflation = get<Rational>(j, "inflation");
    cert.minimal_inflation = get<Rational>(j, "minimal_inflation");
    return cert;
}

} // namespace npoly
