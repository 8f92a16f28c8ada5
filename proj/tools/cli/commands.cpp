#include "cli/commands.hpp"

#include "cli/fuzz.hpp"

#include <npoly/npoly.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

namespace npoly::cli {

namespace {

enum class Format { Text, Json, Csv };

// Ordered key/value rows rendered as "key = value" (text) or "key,value"
// (csv); json output uses the structured document instead.
using Rows = std::vector<std::pair<std::string, std::string>>;

struct Settings {
    Format format = Format::Text;
    int brute_force_cap = kDefaultBruteForceCap;
};

void emit(std::ostream& out, Format format, const Rows& rows, const Json& doc)
{
    switch (format) {
    case Format::Json:
        out << doc.dump(2) << '\n';
        break;
    case Format::Csv:
        out << "key,value\n";
        for (const auto& [k, v] : rows) out << k << ',' << v << '\n';
        break;
    case Format::Text:
        for (const auto& [k, v] : rows) out << k << " = " << v << '\n';
        break;
    }
}

std::string join(const auto& items)
{
    std::string s;
    for (const auto& x : items) {
        if (!s.empty()) s += ' ';
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>) {
            s += to_string(x);
        } else {
            s += std::to_string(x);
        }
    }
    return s;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write file '" + path.string() + "'");
    out << content;
}

Instance load_instance(const std::string& path)
{
    return instance_from_json(parse_json(read_file(path)));
}

void require_sequences(const Instance& instance)
{
    if (instance.e.size() != instance.r.size()) {
        require(validate_instance(instance.e, instance.r, instance.window),
                ErrorKind::InvalidInstance);
    }
    require(check_e_sequence(instance.e), ErrorKind::InvalidInstance);
    require(check_r_sequence(instance.r), ErrorKind::InvalidInstance);
}

int cmd_fseq(const Settings& settings, int d, int g, std::ostream& out)
{
    const CurveProfile profile(d, g);
    const ESequence f = f_sequence(profile);
    const std::vector<std::int64_t> values(f.values().begin(), f.values().end());
    switch (settings.format) {
    case Format::Text:
        out << join(values) << '\n';
        break;
    case Format::Csv:
        out << "i,f\n";
        for (int i = 1; i <= f.size(); ++i) out << i << ',' << f(i) << '\n';
        break;
    case Format::Json:
        out << Json{{"d", d}, {"g", g}, {"N", profile.rank()}, {"f", values}}.dump(2) << '\n';
        break;
    }
    return kExitOk;
}

int cmd_bound(const Settings& settings, const std::optional<std::string>& instance_path,
              std::optional<int> d, std::optional<int> g, std::optional<int> s,
              std::optional<int> t, std::ostream& out)
{
    ESequence e;
    GapWindow window;
    std::string label;
    if (instance_path) {
        const Instance instance = load_instance(*instance_path);
        e = instance.e;
        window = instance.window;
        require(check_e_sequence(e), ErrorKind::InvalidInstance);
        label = "B";
    } else {
        if (!d || !g || !s || !t) {
            throw Error(ErrorKind::InvalidArgument,
                        "bound needs either --instance or all of --d --g --s --t");
        }
        const CurveProfile profile(*d, *g);
        window = {*s, *t};
        require(validate_window(profile.rank(), window, WindowRegime::Strict),
                ErrorKind::InvalidWindow);
        e = f_sequence(profile);
        label = "A";
    }

    const BoundConstant constant = bound_constant(e, window);
    const auto table = coefficient_table(e, window);
    const std::string name = label + "(" + std::to_string(window.s) + "," + std::to_string(window.t) + ")";

    if (settings.format == Format::Csv) {
        out << "i,branch,value,is_max\n";
        for (const auto& c : table) {
            out << c.index << ',' << to_string(c.branch) << ',' << to_string(c.value) << ','
                << (c.index == constant.argmax ? 1 : 0) << '\n';
        }
        return kExitOk;
    }

    Json coefficients = Json::array();
    Rows rows{{name, to_string(constant.value)}, {"argmax", std::to_string(constant.argmax)}};
    for (const auto& c : table) {
        coefficients.push_back(to_json(c));
        rows.emplace_back(label + "_" + std::to_string(c.index) + " (" + to_string(c.branch) + ")",
                          to_string(c.value));
    }
    const Json doc{{"label", label},
                   {"e", std::vector<std::int64_t>(e.values().begin(), e.values().end())},
                   {"s", window.s},
                   {"t", window.t},
                   {"value", constant.value},
                   {"argmax", constant.argmax},
                   {"coefficients", coefficients}};
    emit(out, settings.format, rows, doc);
    return kExitOk;
}

int cmd_minpoly(const Settings& settings, const std::string& path, const std::string& method,
                std::ostream& out)
{
    const Instance instance = load_instance(path);
    require_sequences(instance);

    ChainMinimum minimum;
    bool cross_checked = false;
    if (method == "brute") {
        minimum = min_chain_bruteforce(instance.e, instance.r, settings.brute_force_cap);
    } else {
        minimum = min_chain_hull(instance.e, instance.r);
        if (method == "both") {
            const ChainMinimum oracle =
                min_chain_bruteforce(instance.e, instance.r, settings.brute_force_cap);
            if (oracle.value != minimum.value) {
                throw Error(ErrorKind::Internal, "hull and brute-force minima differ");
            }
            cross_checked = true;
        }
    }

    Json doc = to_json(minimum);
    doc["method"] = method;
    doc["cross_checked"] = cross_checked;
    emit(out, settings.format,
         {{"S", to_string(minimum.value)}, {"witness", join(minimum.witness.indices)}}, doc);
    return kExitOk;
}

Rows report_rows(const Prop1Report& report)
{
    return {{"S", to_string(report.chain_minimum)},
            {"witness", join(report.witness.indices)},
            {"B", to_string(report.constant.value)},
            {"B_argmax", std::to_string(report.constant.argmax)},
            {"rhs_sum", to_string(report.rhs_sum)},
            {"bound", to_string(report.bound)},
            {"slack", to_string(report.slack)},
            {"verdict", report.holds() ? "holds" : "violated"}};
}

int cmd_verify(const Settings& settings, const std::string& path,
               const std::string& counterexample_path, std::ostream& out, std::ostream& err)
{
    const Instance instance = load_instance(path);
    const Prop1Report report = prop1_verify(instance.e, instance.r, instance.window,
                                            {.brute_force_cap = settings.brute_force_cap});
    emit(out, settings.format, report_rows(report), to_json(report));
    if (!report.holds()) {
        write_file(counterexample_path, to_json(instance).dump(2) + "\n");
        err << "counterexample written to " << counterexample_path << '\n';
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_tightness(const Settings& settings, const std::string& path, std::ostream& out)
{
    const Instance instance = load_instance(path);
    const TightnessCertificate cert =
        tightness_certificate(instance.e, instance.window, settings.brute_force_cap);
    emit(out, settings.format,
         {{"B", to_string(cert.constant)},
          {"vertex", std::to_string(cert.vertex.index)},
          {"alpha", to_string(cert.vertex.alpha)},
          {"r", join(cert.vertex.r.values())},
          {"S", to_string(cert.chain_minimum)},
          {"witness", join(cert.witness.indices)},
          {"rhs_sum", to_string(cert.rhs_sum)},
          {"exact", cert.exact() ? "true" : "false"}},
         to_json(cert));
    return cert.exact() ? kExitOk : kExitInternal;
}

int cmd_eval_height(const Settings& settings, const std::string& path, std::ostream& out)
{
    const HeightInput input = height_input_from_json(parse_json(read_file(path)));
    const Rational lhs = theorem1_lhs(input);
    const MuCoefficientAudit audit = mu_coefficient_audit(input.profile, input.window);

    Rows rows{{"lhs", to_string(lhs)},
              {"A", to_string(audit.a_st.value)},
              {"A_argmax", std::to_string(audit.a_st.argmax)},
              {"coefficient_total", to_string(audit.total)},
              {"two_d", std::to_string(2 * input.profile.degree())}};
    for (std::size_t k = 0; k < audit.coefficients.size(); ++k) {
        rows.emplace_back("mu_coefficient_" + std::to_string(k + 1), to_string(audit.coefficients[k]));
    }
    const Json doc{{"input", to_json(input)}, {"lhs", lhs}, {"audit", to_json(audit)}};
    emit(out, settings.format, rows, doc);
    return kExitOk;
}

int cmd_certify_norms(const Settings& settings, const std::string& path, std::ostream& out)
{
    const NormInput input = norm_input_from_json(parse_json(read_file(path)));
    const DualData dual = dual_matrices(input.n, input.window, input.size, input.n_cap);
    const NormCertificate cert = v_norm_certify(dual, input.norms, input.inflation);

    if (settings.format == Format::Csv) {
        out << "i,bound,target,pass\n";
        for (std::size_t k = 0; k < cert.bounds.size(); ++k) {
            out << k + 1 << ',' << to_string(cert.bounds[k]) << ',' << to_string(cert.targets[k])
                << ',' << (cert.pass[k] ? 1 : 0) << '\n';
        }
        return kExitOk;
    }
    Rows rows{{"minimal_inflation", to_string(cert.minimal_inflation)},
              {"inflation", to_string(cert.inflation)},
              {"all_pass", cert.all_pass() ? "true" : "false"}};
    for (std::size_t k = 0; k < cert.bounds.size(); ++k) {
        rows.emplace_back("v_" + std::to_string(k + 1),
                          to_string(cert.bounds[k]) + " <= " + to_string(cert.inflation) + " * " +
                              to_string(cert.targets[k]) + (cert.pass[k] ? " pass" : " fail"));
    }
    emit(out, settings.format, rows, Json{{"dual", to_json(dual)}, {"certificate", to_json(cert)}});
    return kExitOk;
}

int cmd_fuzz(const Settings& settings, FuzzConfig config, const std::string& out_dir, bool timing,
             std::ostream& out, std::ostream& err)
{
    config.brute_force_cap = settings.brute_force_cap;
    const CampaignReport report = fuzz_campaign(config);

    Rows rows{{"seed", std::to_string(config.seed)},
              {"instances", std::to_string(report.instances)},
              {"violations", std::to_string(report.violations)},
              {"hull_brute_mismatches", std::to_string(report.hull_brute_mismatches)},
              {"min_slack", to_string(report.min_slack)},
              {"tightness_checks_run", std::to_string(report.tightness_checks_run)},
              {"tightness_checks_passed", std::to_string(report.tightness_checks_passed)}};
    if (timing) rows.emplace_back("wall_seconds", std::to_string(report.wall_seconds));
    emit(out, settings.format, rows, to_json(report, timing));

    for (const auto& ce : report.counterexamples) {
        const auto path = std::filesystem::path(out_dir) /
                          ("counterexample_seed" + std::to_string(config.seed) + "_" +
                           std::to_string(ce.index) + ".json");
        write_file(path, to_json(ce.instance).dump(2) + "\n");
        err << "counterexample written to " << path.string() << '\n';
    }
    if (report.violations > 0) return kExitViolation;
    if (report.hull_brute_mismatches > 0) return kExitInternal;
    return kExitOk;
}

int brute_force_cap_from_env()
{
    const char* raw = std::getenv(kBruteForceCapEnv);
    if (raw == nullptr) return kDefaultBruteForceCap;
    const std::string text(raw);
    std::size_t used = 0;
    int cap = 0;
    try {
        cap = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || cap < 2) {
        throw Error(ErrorKind::InvalidArgument,
                    std::string(kBruteForceCapEnv) + " must be an integer >= 2 (got '" + text + "')");
    }
    return cap;
}

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::CapExceeded: return kExitCapExceeded;
    case ErrorKind::Internal: return kExitInternal;
    default: return kExitInvalidInput;
    }
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Newton-polygon chain bounds: sequences, certificates, fuzzing", "npoly"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    int d = 0;
    int g = 0;
    auto* fseq = app.add_subcommand("fseq", "Print the f-sequence of a (d, g) profile");
    fseq->add_option("--d", d, "Degree")->required();
    fseq->add_option("--g", g, "Genus")->required();

    std::optional<int> bd, bg, bs, bt;
    std::optional<std::string> bound_instance;
    auto* bound = app.add_subcommand("bound", "A(s,t) for a profile or B(s,t) for an instance e");
    bound->add_option("--d", bd, "Degree");
    bound->add_option("--g", bg, "Genus");
    bound->add_option("--s", bs, "Window start s");
    bound->add_option("--t", bt, "Window end t");
    bound->add_option("--instance", bound_instance, "Instance file");

    std::string instance_path;
    std::string method = "hull";
    auto* minpoly = app.add_subcommand("minpoly", "Chain minimum S with a witness chain");
    minpoly->add_option("--instance", instance_path, "Instance file")->required();
    minpoly->add_option("--method", method, "Algorithm")
        ->check(CLI::IsMember({"hull", "brute", "both"}));

    std::string counterexample_path = "counterexample.json";
    auto* verify = app.add_subcommand("verify", "Check the chain-minimum inequality on an instance");
    verify->add_option("--instance", instance_path, "Instance file")->required();
    verify->add_option("--counterexample", counterexample_path,
                       "Where to write the instance if the inequality fails");

    auto* tightness = app.add_subcommand("tightness", "Equality certificate at the extremal vertex");
    tightness->add_option("--instance", instance_path, "Instance file (r is ignored)")->required();

    std::string input_path;
    auto* eval_height = app.add_subcommand("eval-height", "Evaluate the height-inequality left side");
    eval_height->add_option("--input", input_path, "Height input file")->required();

    auto* certify = app.add_subcommand("certify-norms", "Dual-basis matrices and norm certificate");
    certify->add_option("--input", input_path, "Norm input file")->required();

    FuzzConfig config;
    std::string out_dir = ".";
    bool timing = false;
    auto* fuzz = app.add_subcommand("fuzz", "Seeded random campaign over instances");
    fuzz->add_option("--seed", config.seed, "Campaign seed")->required();
    fuzz->add_option("--count", config.count, "Number of instances")->required();
    fuzz->add_option("--n-min", config.n_min, "Smallest N")->capture_default_str();
    fuzz->add_option("--n-max", config.n_max, "Largest N")->capture_default_str();
    fuzz->add_option("--e-max", config.e_max, "Largest e value")->capture_default_str();
    fuzz->add_option("--r-den-cap", config.r_denominator_cap, "Largest r denominator")
        ->capture_default_str();
    fuzz->add_option("--tightness-every", config.tightness_every,
                     "Run a tightness certificate every k-th instance")
        ->capture_default_str();
    fuzz->add_option("--jobs", config.jobs, "Worker threads")->capture_default_str();
    fuzz->add_option("--out-dir", out_dir, "Directory for counterexample files");
    fuzz->add_flag("--timing", timing, "Include wall time in the report");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        Settings settings;
        settings.format = format_name == "json"  ? Format::Json
                          : format_name == "csv" ? Format::Csv
                                                 : Format::Text;
        settings.brute_force_cap = brute_force_cap_from_env();

        if (*fseq) return cmd_fseq(settings, d, g, out);
        if (*bound) return cmd_bound(settings, bound_instance, bd, bg, bs, bt, out);
        if (*minpoly) return cmd_minpoly(settings, instance_path, method, out);
        if (*verify) return cmd_verify(settings, instance_path, counterexample_path, out, err);
        if (*tightness) return cmd_tightness(settings, instance_path, out);
        if (*eval_height) return cmd_eval_height(settings, input_path, out);
        if (*certify) return cmd_certify_norms(settings, input_path, out);
        if (*fuzz) return cmd_fuzz(settings, config, out_dir, timing, out, err);
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return kExitInvalidInput;
}

} // namespace npoly::cli
