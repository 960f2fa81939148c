#include "jinv/jinv.h"

#include "inversion.hpp"
#include "jfunction.hpp"
#include "moduli.hpp"
#include "mpcore.hpp"
#include "repro.hpp"

#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

using jinv::Error;
using jinv::ErrorKind;
using jinv::PrecisionContext;
namespace mp = jinv::mp;

struct jinv_context {
    PrecisionContext ctx;
};

struct jinv_eval {
    std::string tau;
    std::string tau_reduced;
    std::string j;
};

struct jinv_inversion {
    jinv_point point;
    std::string alpha;
    std::string t0;
    std::string c_value;
    std::string tau_raw;
    std::string tau_normalized;
    std::string tau_reduced;
    std::string reduction_map;
    std::string j;
    std::string residual;
    std::size_t terms_used;
    bool succeeded;
    std::vector<std::string> warnings;
};

struct jinv_series {
    std::vector<std::string> coefficients;
};

struct jinv_repro {
    jinv::ReproReport report;
};

namespace {

thread_local std::string g_last_error;

std::string show(const mp::Real &x, unsigned digits) { return mp::to_string(x, digits); }

// Prints z to `digits` significant digits, showing a component that lies
// below the last printed digit of the other as zero.
std::string show(const mp::Complex &z, unsigned digits)
{
    mp::Complex v = z;
    const mp::Real floor = mp::abs(z) * mp::pow10(-static_cast<long>(digits), z.prec());
    if (mp::abs(v.re()) < floor) {
        v.re() = mp::Real(v.re().prec());
    }
    if (mp::abs(v.im()) < floor) {
        v.im() = mp::Real(v.im().prec());
    }
    return mp::to_string(v, digits);
}

jinv_status status_of(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Domain:
        return JINV_E_DOMAIN;
    case ErrorKind::Pole:
        return JINV_E_POLE;
    case ErrorKind::Convergence:
        return JINV_E_CONVERGENCE;
    case ErrorKind::NonGeneric:
        return JINV_E_NONGENERIC;
    case ErrorKind::UncoveredRegion:
        return JINV_E_UNCOVERED;
    case ErrorKind::Inadmissible:
        return JINV_E_INADMISSIBLE;
    case ErrorKind::Residual:
        return JINV_RESIDUAL;
    case ErrorKind::PrecisionOverflow:
        return JINV_E_PRECISION;
    case ErrorKind::Parse:
        return JINV_E_PARSE;
    case ErrorKind::InvalidArgument:
        return JINV_E_INVALID_ARGUMENT;
    }
    return JINV_E_INTERNAL;
}

// Runs body, translating exceptions into a status and the thread's last error.
template <class F>
jinv_status guarded(F &&body) noexcept
{
    try {
        g_last_error.clear();
        return body();
    } catch (const Error &e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc &) {
        g_last_error = "out of memory";
        return JINV_E_INTERNAL;
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return JINV_E_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return JINV_E_INTERNAL;
    }
}

void require(bool condition, const char *message)
{
    if (!condition) {
        throw Error(ErrorKind::InvalidArgument, message);
    }
}

mp::Complex parse_tau(const std::string &text, mp::Bits bits)
{
    if (text == "rho") {
        return {mp::Real::ratio(1, 2, bits), mp::sqrt(mp::Real(3, bits)) / 2};
    }
    return mp::parse_complex(text, bits);
}

jinv_inversion *make_inversion(const jinv::InversionResult &r, jinv_point point, unsigned digits)
{
    auto *out = new jinv_inversion;
    out->point = point;
    out->alpha = show(r.alpha, digits);
    out->t0 = show(r.t0, digits);
    out->c_value = show(r.c_value, digits);
    out->tau_raw = show(r.tau_raw.tau(), digits);
    out->tau_normalized = show(r.tau_normalized.tau(), digits);
    out->tau_reduced = show(r.tau_reduced.tau(), digits);
    out->reduction_map = r.reduction_map.to_string();
    out->j = show(r.j_check, digits);
    out->residual = mp::to_string(r.residual, 6);
    out->terms_used = r.terms_used;
    out->succeeded = r.success;
    out->warnings = r.warnings;
    return out;
}

const jinv::ReproExample *example(const jinv_repro *repro, std::size_t index)
{
    return index < repro->report.examples.size() ? &repro->report.examples[index] : nullptr;
}

const char *item(const std::vector<std::string> &v, std::size_t index)
{
    return index < v.size() ? v[index].c_str() : nullptr;
}

} // namespace

extern "C" {

const char *jinv_version(void) { return "1.0.0"; }

const char *jinv_status_name(jinv_status status)
{
    switch (status) {
    case JINV_OK:
        return "ok";
    case JINV_RESIDUAL:
        return "residual";
    case JINV_E_PARSE:
        return "parse";
    case JINV_E_DOMAIN:
        return "domain";
    case JINV_E_PRECISION:
        return "precision-overflow";
    case JINV_E_INADMISSIBLE:
        return "inadmissible";
    case JINV_SHORTFALL:
        return "shortfall";
    case JINV_E_POLE:
        return "pole";
    case JINV_E_CONVERGENCE:
        return "convergence";
    case JINV_E_NONGENERIC:
        return "non-generic";
    case JINV_E_INVALID_ARGUMENT:
        return "invalid-argument";
    case JINV_E_INTERNAL:
        return "internal";
    case JINV_E_UNCOVERED:
        return "uncovered-region";
    }
    return "unknown";
}

const char *jinv_last_error(void) { return g_last_error.c_str(); }

jinv_status jinv_context_create(unsigned digits, unsigned guard_digits, size_t max_terms, jinv_context **out)
{
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = nullptr;
        const PrecisionContext ctx =
            PrecisionContext::make(digits == 0 ? 50 : digits, guard_digits == 0 ? 10 : guard_digits, max_terms == 0 ? 20000 : max_terms);
        *out = new jinv_context{ctx};
        return JINV_OK;
    });
}

void jinv_context_destroy(jinv_context *ctx) { delete ctx; }

unsigned jinv_context_digits(const jinv_context *ctx) { return ctx ? ctx->ctx.digits : 0; }

jinv_status jinv_eval_create(const jinv_context *ctx, const char *tau, jinv_eval **out)
{
    return guarded([&] {
        require(ctx != nullptr && tau != nullptr && out != nullptr, "null argument");
        *out = nullptr;
        const PrecisionContext &pc = ctx->ctx;
        const jinv::HalfPlanePoint point(parse_tau(tau, pc.bits()));
        const jinv::Reduction red = jinv::reduce_to_fundamental_domain(point);
        const mp::Complex j = jinv::j_from_tau(point, pc);
        *out = new jinv_eval{show(point.tau(), pc.digits), show(red.point.tau(), pc.digits),
                             show(j, pc.digits)};
        return JINV_OK;
    });
}

void jinv_eval_destroy(jinv_eval *eval) { delete eval; }
const char *jinv_eval_tau(const jinv_eval *eval) { return eval->tau.c_str(); }
const char *jinv_eval_tau_reduced(const jinv_eval *eval) { return eval->tau_reduced.c_str(); }
const char *jinv_eval_j(const jinv_eval *eval) { return eval->j.c_str(); }

jinv_status jinv_invert_create(const jinv_context *ctx, const char *alpha, jinv_point point, size_t terms,
                               jinv_inversion **out)
{
    return guarded([&] {
        require(ctx != nullptr && alpha != nullptr && out != nullptr, "null argument");
        require(point == JINV_POINT_I || point == JINV_POINT_RHO || point == JINV_POINT_AUTO, "unknown point");
        *out = nullptr;
        const PrecisionContext &pc = ctx->ctx;
        const mp::Complex a = mp::parse_complex(alpha, pc.bits());
        jinv::InversionOptions opts;
        if (terms > 0) {
            opts.truncate_terms = terms;
        }
        jinv_point used = point == JINV_POINT_I ? JINV_POINT_I : JINV_POINT_RHO;
        auto run = [&](jinv_point p) {
            return jinv::compute_inversion(a, p == JINV_POINT_I ? jinv::PointKind::I : jinv::PointKind::Rho, pc, opts);
        };
        jinv::InversionResult r = [&] {
            if (point != JINV_POINT_AUTO) {
                return run(used);
            }
            try {
                return run(JINV_POINT_RHO);
            } catch (const jinv::InadmissibleTarget &at_rho) {
                used = JINV_POINT_I;
                try {
                    return run(JINV_POINT_I);
                } catch (const jinv::InadmissibleTarget &at_i) {
                    throw Error(ErrorKind::Inadmissible, std::string(at_rho.what()) + "; " + at_i.what());
                }
            }
        }();
        *out = make_inversion(r, used, pc.digits);
        if (!r.success) {
            g_last_error = "residual " + (*out)->residual + " is not below tolerance";
            return JINV_RESIDUAL;
        }
        return JINV_OK;
    });
}

void jinv_invert_destroy(jinv_inversion *inv) { delete inv; }
jinv_point jinv_invert_point(const jinv_inversion *inv) { return inv->point; }
const char *jinv_invert_alpha(const jinv_inversion *inv) { return inv->alpha.c_str(); }
const char *jinv_invert_t0(const jinv_inversion *inv) { return inv->t0.c_str(); }
const char *jinv_invert_c_value(const jinv_inversion *inv) { return inv->c_value.c_str(); }
const char *jinv_invert_tau_raw(const jinv_inversion *inv) { return inv->tau_raw.c_str(); }
const char *jinv_invert_tau_normalized(const jinv_inversion *inv) { return inv->tau_normalized.c_str(); }
const char *jinv_invert_tau_reduced(const jinv_inversion *inv) { return inv->tau_reduced.c_str(); }
const char *jinv_invert_reduction_map(const jinv_inversion *inv) { return inv->reduction_map.c_str(); }
const char *jinv_invert_j(const jinv_inversion *inv) { return inv->j.c_str(); }
const char *jinv_invert_residual(const jinv_inversion *inv) { return inv->residual.c_str(); }
size_t jinv_invert_terms_used(const jinv_inversion *inv) { return inv->terms_used; }
int jinv_invert_succeeded(const jinv_inversion *inv) { return inv->succeeded ? 1 : 0; }
size_t jinv_invert_warning_count(const jinv_inversion *inv) { return inv->warnings.size(); }
const char *jinv_invert_warning(const jinv_inversion *inv, size_t index) { return item(inv->warnings, index); }

jinv_status jinv_series_create(const jinv_context *ctx, jinv_series_kind kind, size_t n, jinv_series **out)
{
    return guarded([&] {
        require(ctx != nullptr && out != nullptr, "null argument");
        require(n > 0, "series length must be positive");
        *out = nullptr;
        const PrecisionContext &pc = ctx->ctx;
        auto series = std::make_unique<jinv_series>();
        // Coefficients below tolerance relative to the largest are zero.
        auto push_all = [&](const auto &values) {
            mp::Real largest(pc.bits());
            for (const auto &v : values) {
                largest = mp::max(largest, mp::abs(v));
            }
            const mp::Real floor = largest * pc.tol();
            for (const auto &v : values) {
                series->coefficients.push_back(mp::abs(v) < floor ? std::string("0") : show(v, pc.digits));
            }
        };
        switch (kind) {
        case JINV_SERIES_C_I:
            push_all(jinv::c_series_coefficients(jinv::PointKind::I, n, pc));
            break;
        case JINV_SERIES_C_RHO:
            push_all(jinv::c_series_coefficients(jinv::PointKind::Rho, n, pc));
            break;
        case JINV_SERIES_J_AT_I:
            push_all(jinv::taylor_j_at(jinv::make_point(jinv::PointKind::I, pc), n, pc));
            break;
        case JINV_SERIES_J_AT_RHO:
            push_all(jinv::taylor_j_at(jinv::make_point(jinv::PointKind::Rho, pc), n, pc));
            break;
        case JINV_SERIES_J_Q:
            push_all(jinv::q_expansion_coefficients(n, pc));
            break;
        default:
            throw Error(ErrorKind::InvalidArgument, "unknown series");
        }
        *out = series.release();
        return JINV_OK;
    });
}

void jinv_series_destroy(jinv_series *series) { delete series; }
size_t jinv_series_count(const jinv_series *series) { return series->coefficients.size(); }
const char *jinv_series_coefficient(const jinv_series *series, size_t index)
{
    return item(series->coefficients, index);
}

jinv_status jinv_repro_run(unsigned digits, jinv_repro **out)
{
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = nullptr;
        std::optional<unsigned> override;
        if (digits > 0) {
            PrecisionContext::make(digits).validate();
            override = digits;
        }
        *out = new jinv_repro{jinv::run_reproduction(override)};
        if (!(*out)->report.all_passed) {
            g_last_error = "an example fell short of its required decimals";
            return JINV_SHORTFALL;
        }
        return JINV_OK;
    });
}

void jinv_repro_destroy(jinv_repro *repro) { delete repro; }
size_t jinv_repro_count(const jinv_repro *repro) { return repro->report.examples.size(); }
int jinv_repro_all_passed(const jinv_repro *repro) { return repro->report.all_passed ? 1 : 0; }
const char *jinv_repro_name(const jinv_repro *repro, size_t index)
{
    const auto *e = example(repro, index);
    return e ? e->name.c_str() : nullptr;
}
const char *jinv_repro_description(const jinv_repro *repro, size_t index)
{
    const auto *e = example(repro, index);
    return e ? e->description.c_str() : nullptr;
}
unsigned jinv_repro_digits(const jinv_repro *repro, size_t index)
{
    const auto *e = example(repro, index);
    return e ? e->digits : 0;
}
size_t jinv_repro_terms(const jinv_repro *repro, size_t index)
{
    const auto *e = example(repro, index);
    return e ? e->terms : 0;
}
long jinv_repro_claimed(const jinv_repro *repro, size_t index)
{
    const auto *e = example(repro, index);
    return e ? e->claimed_decimals : 0;
}
long jinv_repro_required(const jinv_repro *repro, size_t index)
{
    const auto *e = example(repro, index);
    return e ? e->required_decimals : 0;
}
long jinv_repro_below(const jinv_repro *repro, size_t index)
{
    const auto *e = example(repro, index);
    return e ? e->below_decimals.value_or(-1) : -1;
}
long jinv_repro_achieved(const jinv_repro *repro, size_t index)
{
    const auto *e = example(repro, index);
    return e ? e->achieved_decimals : 0;
}
int jinv_repro_passed(const jinv_repro *repro, size_t index)
{
    const auto *e = example(repro, index);
    return e && e->passed ? 1 : 0;
}
const char *jinv_repro_value(const jinv_repro *repro, size_t index)
{
    const auto *e = example(repro, index);
    return e ? e->value.c_str() : nullptr;
}
const char *jinv_repro_target(const jinv_repro *repro, size_t index)
{
    const auto *e = example(repro, index);
    return e ? e->target.c_str() : nullptr;
}
size_t jinv_repro_warning_count(const jinv_repro *repro, size_t index)
{
    const auto *e = example(repro, index);
    return e ? e->warnings.size() : 0;
}
const char *jinv_repro_warning(const jinv_repro *repro, size_t index, size_t warning)
{
    const auto *e = example(repro, index);
    return e ? item(e->warnings, warning) : nullptr;
}

} // extern "C"
