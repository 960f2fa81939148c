// Command-line front end over the C interface.

#include "jinv/jinv.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

using nlohmann::ordered_json;

namespace {

enum Exit {
    kOk = 0,
    kFailure = 1,
    kParse = 2,
    kDomain = 3,
    kPrecision = 4,
    kInadmissible = 5,
    kShortfall = 6,
};

int exit_code(jinv_status status)
{
    switch (status) {
    case JINV_OK:
        return kOk;
    case JINV_E_PARSE:
    case JINV_E_INVALID_ARGUMENT:
        return kParse;
    case JINV_E_DOMAIN:
    case JINV_E_POLE:
        return kDomain;
    case JINV_E_PRECISION:
        return kPrecision;
    case JINV_E_INADMISSIBLE:
        return kInadmissible;
    case JINV_SHORTFALL:
        return kShortfall;
    default:
        return kFailure;
    }
}

int fail(jinv_status status)
{
    std::cerr << "jinv: " << jinv_status_name(status) << ": " << jinv_last_error() << "\n";
    return exit_code(status);
}

struct Options {
    std::optional<unsigned> digits;
    bool json = false;
};

// --digits, else JINV_DIGITS, else 50.
std::optional<unsigned> resolve_digits(const Options &opts)
{
    if (opts.digits) {
        return opts.digits;
    }
    const char *env = std::getenv("JINV_DIGITS");
    if (env == nullptr || *env == '\0') {
        return 50U;
    }
    try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(env, &used);
        if (used == std::string(env).size() && v > 0 && v < 1000000) {
            return static_cast<unsigned>(v);
        }
    } catch (const std::exception &) {
    }
    std::cerr << "jinv: parse: JINV_DIGITS must be a positive integer\n";
    return std::nullopt;
}

// Owns a context for the duration of one command.
class Context {
public:
    jinv_status open(unsigned digits) { return jinv_context_create(digits, 0, 0, &m_ctx); }
    ~Context() { jinv_context_destroy(m_ctx); }
    const jinv_context *get() const { return m_ctx; }

private:
    jinv_context *m_ctx = nullptr;
};

void print_rows(const ordered_json &doc)
{
    for (const auto &[key, value] : doc.items()) {
        if (value.is_array()) {
            for (const auto &v : value) {
                std::cout << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
            continue;
        }
        std::cout << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
}

void emit(const ordered_json &doc, bool json)
{
    if (json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        print_rows(doc);
    }
}

int cmd_eval(const std::string &tau, const Options &opts)
{
    const auto digits = resolve_digits(opts);
    if (!digits) {
        return kParse;
    }
    Context ctx;
    if (const jinv_status s = ctx.open(*digits); s != JINV_OK) {
        return fail(s);
    }
    jinv_eval *eval = nullptr;
    if (const jinv_status s = jinv_eval_create(ctx.get(), tau.c_str(), &eval); s != JINV_OK) {
        return fail(s);
    }
    ordered_json doc;
    doc["tau"] = jinv_eval_tau(eval);
    doc["tau_reduced"] = jinv_eval_tau_reduced(eval);
    doc["j"] = jinv_eval_j(eval);
    doc["digits"] = *digits;
    jinv_eval_destroy(eval);
    emit(doc, opts.json);
    return kOk;
}

int cmd_invert(const std::string &alpha, jinv_point point, std::size_t terms, const Options &opts)
{
    const auto digits = resolve_digits(opts);
    if (!digits) {
        return kParse;
    }
    Context ctx;
    if (const jinv_status s = ctx.open(*digits); s != JINV_OK) {
        return fail(s);
    }
    jinv_inversion *inv = nullptr;
    const jinv_status s = jinv_invert_create(ctx.get(), alpha.c_str(), point, terms, &inv);
    if (inv == nullptr) {
        return fail(s);
    }
    ordered_json doc;
    doc["alpha"] = jinv_invert_alpha(inv);
    doc["point"] = jinv_invert_point(inv) == JINV_POINT_I ? "i" : "rho";
    doc["t0"] = jinv_invert_t0(inv);
    doc["c_value"] = jinv_invert_c_value(inv);
    doc["tau_raw"] = jinv_invert_tau_raw(inv);
    doc["tau_reduced"] = jinv_invert_tau_reduced(inv);
    doc["reduction_map"] = jinv_invert_reduction_map(inv);
    doc["j"] = jinv_invert_j(inv);
    doc["residual"] = jinv_invert_residual(inv);
    doc["terms_used"] = jinv_invert_terms_used(inv);
    doc["success"] = jinv_invert_succeeded(inv) != 0;
    doc["digits"] = *digits;
    ordered_json warnings = ordered_json::array();
    for (std::size_t k = 0; k < jinv_invert_warning_count(inv); ++k) {
        warnings.push_back(jinv_invert_warning(inv, k));
    }
    doc["warning"] = warnings;
    jinv_invert_destroy(inv);
    emit(doc, opts.json);
    if (s != JINV_OK) {
        return fail(s);
    }
    return kOk;
}

int cmd_series(jinv_series_kind kind, const std::string &which, std::size_t n, const Options &opts)
{
    const auto digits = resolve_digits(opts);
    if (!digits) {
        return kParse;
    }
    Context ctx;
    if (const jinv_status s = ctx.open(*digits); s != JINV_OK) {
        return fail(s);
    }
    jinv_series *series = nullptr;
    if (const jinv_status s = jinv_series_create(ctx.get(), kind, n, &series); s != JINV_OK) {
        return fail(s);
    }
    // The q-expansion starts at q^-1.
    const long first = kind == JINV_SERIES_J_Q ? -1 : 0;
    ordered_json coeffs = ordered_json::array();
    for (std::size_t k = 0; k < jinv_series_count(series); ++k) {
        coeffs.push_back(jinv_series_coefficient(series, k));
    }
    jinv_series_destroy(series);
    if (opts.json) {
        ordered_json doc;
        doc["series"] = which;
        doc["first_power"] = first;
        doc["digits"] = *digits;
        doc["coefficients"] = coeffs;
        std::cout << doc.dump(2) << "\n";
    } else {
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            std::cout << static_cast<long>(k) + first << "  " << coeffs[k].get<std::string>() << "\n";
        }
    }
    return kOk;
}

int cmd_repro(const Options &opts)
{
    // Each example carries its own precision unless --digits is given.
    jinv_repro *repro = nullptr;
    const jinv_status s = jinv_repro_run(opts.digits.value_or(0), &repro);
    if (repro == nullptr) {
        return fail(s);
    }
    ordered_json examples = ordered_json::array();
    for (std::size_t k = 0; k < jinv_repro_count(repro); ++k) {
        ordered_json e;
        e["example"] = jinv_repro_name(repro, k);
        e["target_decimals"] = jinv_repro_claimed(repro, k);
        e["achieved_decimals"] = jinv_repro_achieved(repro, k);
        e["required_decimals"] = jinv_repro_required(repro, k);
        if (jinv_repro_below(repro, k) >= 0) {
            e["below_decimals"] = jinv_repro_below(repro, k);
        }
        e["passed"] = jinv_repro_passed(repro, k) != 0;
        e["description"] = jinv_repro_description(repro, k);
        e["digits"] = jinv_repro_digits(repro, k);
        e["terms"] = jinv_repro_terms(repro, k);
        e["value"] = jinv_repro_value(repro, k);
        e["target"] = jinv_repro_target(repro, k);
        ordered_json warnings = ordered_json::array();
        for (std::size_t w = 0; w < jinv_repro_warning_count(repro, k); ++w) {
            warnings.push_back(jinv_repro_warning(repro, k, w));
        }
        e["warnings"] = warnings;
        examples.push_back(e);
    }
    const bool all = jinv_repro_all_passed(repro) != 0;
    jinv_repro_destroy(repro);

    if (opts.json) {
        ordered_json doc;
        doc["examples"] = examples;
        doc["all_passed"] = all;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::string summary;
        for (const auto &e : examples) {
            const long achieved = e["achieved_decimals"].get<long>();
            const long required = e["required_decimals"].get<long>();
            std::cout << e["example"].get<std::string>() << ": " << e["description"].get<std::string>() << "\n"
                      << "  digits " << e["digits"].get<unsigned>() << ", terms " << e["terms"].get<std::size_t>()
                      << "\n"
                      << "  value  " << e["value"].get<std::string>() << "\n"
                      << "  target " << e["target"].get<std::string>() << "\n"
                      << "  matching decimals " << achieved << " (reference " << e["target_decimals"].get<long>()
                      << ", required " << required;
            if (e.contains("below_decimals")) {
                std::cout << ", must stay below " << e["below_decimals"].get<long>();
            }
            std::cout << ", delta " << (achieved - required >= 0 ? "+" : "") << achieved - required << ")"
                      << (e["passed"].get<bool>() ? " PASS" : " FAIL") << "\n";
            for (const auto &w : e["warnings"]) {
                std::cout << "  warning: " << w.get<std::string>() << "\n";
            }
            if (!summary.empty()) {
                summary += ", ";
            }
            summary += e["example"].get<std::string>() + ": " + std::to_string(achieved) +
                       (e["passed"].get<bool>() ? " ok" : " short");
        }
        std::cout << summary << "\n";
    }
    if (s != JINV_OK) {
        return fail(s);
    }
    return kOk;
}

// CLI11 would read "-i" and "-.5" as options; spell them as numbers.
std::vector<std::string> normalize_args(int argc, char **argv)
{
    std::vector<std::string> args;
    for (int k = argc - 1; k >= 1; --k) {
        std::string a = argv[k];
        if (a == "-i") {
            a = "-1i";
        } else if (a.rfind("-.", 0) == 0) {
            a.insert(1, "0");
        }
        args.push_back(a);
    }
    return args;
}

void add_common(CLI::App *cmd, Options &opts)
{
    cmd->add_option("--digits", opts.digits, "Working precision in decimal digits (default JINV_DIGITS or 50)")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--json", opts.json, "Emit JSON");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Evaluate and invert the modular j-invariant"};
    app.set_version_flag("--version", std::string(jinv_version()));
    app.require_subcommand(1);

    Options opts;
    std::string tau;
    std::string alpha;
    std::string which;
    std::size_t n = 0;
    std::size_t terms = 0;
    std::string point = "auto";

    auto *eval = app.add_subcommand("eval", "Evaluate j(tau)");
    eval->add_option("tau", tau, "Point of the upper half-plane: a+bi, bi, i or rho")->required();
    add_common(eval, opts);

    auto *invert = app.add_subcommand("invert", "Solve j(tau) = alpha");
    invert->add_option("alpha", alpha, "Target value a+bi")->required();
    invert->add_option("--point", point, "Expansion point")
        ->check(CLI::IsMember({"i", "rho", "auto"}))
        ->capture_default_str();
    invert->add_option("--terms", terms, "Sum exactly this many terms of each series")->check(CLI::PositiveNumber);
    add_common(invert, opts);

    const std::map<std::string, jinv_series_kind> kinds{{"c-i", JINV_SERIES_C_I},
                                                        {"c-rho", JINV_SERIES_C_RHO},
                                                        {"j-at-i", JINV_SERIES_J_AT_I},
                                                        {"j-at-rho", JINV_SERIES_J_AT_RHO},
                                                        {"j-q", JINV_SERIES_J_Q}};
    auto *series = app.add_subcommand("series", "Leading series coefficients");
    series->add_option("which", which, "c-i, c-rho, j-at-i, j-at-rho or j-q")
        ->required()
        ->check(CLI::IsMember({"c-i", "c-rho", "j-at-i", "j-at-rho", "j-q"}));
    series->add_option("n", n, "Number of coefficients")->required()->check(CLI::PositiveNumber);
    add_common(series, opts);

    auto *repro = app.add_subcommand("repro", "Rerun the three worked inversions");
    add_common(repro, opts);

    try {
        app.parse(normalize_args(argc, argv));
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    if (eval->parsed()) {
        return cmd_eval(tau, opts);
    }
    if (invert->parsed()) {
        const jinv_point p = point == "i" ? JINV_POINT_I : point == "rho" ? JINV_POINT_RHO : JINV_POINT_AUTO;
        return cmd_invert(alpha, p, terms, opts);
    }
    if (series->parsed()) {
        return cmd_series(kinds.at(which), which, n, opts);
    }
    return cmd_repro(opts);
}
