#include "repro.hpp"

#include "inversion.hpp"

#include <cmath>

namespace jinv {

using mp::Complex;
using mp::Real;

long matching_decimals(const Complex &x, const Complex &target, long cap)
{
    const mp::Bits bits = std::max(x.prec(), target.prec());
    const Real diff = abs(x.with_prec(bits) - target.with_prec(bits));
    if (diff.is_zero()) {
        return cap;
    }
    const long d = -ceil(log10(diff)).to_long();
    return std::clamp(d, 0L, cap);
}

namespace {

struct ExampleSetup {
    const char *name;
    const char *description;
    const char *alpha;
    PointKind point;
    unsigned digits;
    std::size_t terms;
    long claimed;
    long required;
    std::optional<long> below;
};

enum class Compare { NegInversePlusOne, Tau, JValue };

ReproExample run_one(const ExampleSetup &spec, Compare what, std::optional<unsigned> digits_override)
{
    const unsigned digits = digits_override.value_or(spec.digits);
    const PrecisionContext ctx = PrecisionContext::make(digits);
    const PrecisionContext fine = ctx.with_extra_digits(20);
    const mp::Bits tb = fine.bits();

    InversionOptions opts;
    opts.truncate_terms = spec.terms;
    const InversionResult r = compute_inversion(mp::parse_complex(spec.alpha, ctx.bits()), spec.point, ctx, opts);

    Complex value(ctx.bits());
    Complex target(tb);
    switch (what) {
    case Compare::NegInversePlusOne:
        // sqrt(-2) = i sqrt 2
        value = 1 - 1 / r.tau_raw.tau();
        target = Complex(Real(tb), mp::sqrt(Real(2, tb)));
        break;
    case Compare::Tau:
        // (1 + sqrt(-7)) / 2
        value = r.tau_raw.tau();
        target = Complex(Real::ratio(1, 2, tb), mp::sqrt(Real(7, tb)) / 2);
        break;
    case Compare::JValue:
        value = r.j_check;
        target = Complex(-50000, 0, tb);
        break;
    }
    const long achieved = matching_decimals(value, target, static_cast<long>(digits));
    bool passed = achieved >= spec.required;
    if (spec.below && achieved >= *spec.below) {
        passed = false;
    }
    return ReproExample{spec.name,
                        spec.description,
                        digits,
                        spec.terms,
                        spec.claimed,
                        spec.required,
                        spec.below,
                        achieved,
                        passed,
                        mp::to_string(value, digits),
                        mp::to_string(target, digits),
                        r.warnings};
}

} // namespace

ReproReport run_reproduction(std::optional<unsigned> digits)
{
    static const ExampleSetup kEx1{"Ex1", "j = 8000 at i, 1 - 1/tau0 against sqrt(-2)", "8000", PointKind::I, 400, 3000,
                           364, 360, std::nullopt};
    static const ExampleSetup kEx2{"Ex2", "j = -3375 at rho, tau0 against (1+sqrt(-7))/2", "-3375", PointKind::Rho, 170, 3000,
                           145, 140, std::nullopt};
    static const ExampleSetup kEx3{"Ex3", "j = -50000 at rho near the disk edge, j(tau0) against -50000", "-50000",
                           PointKind::Rho, 60, 5000, 16, 16, 30};
    ReproReport report;
    report.examples.push_back(run_one(kEx1, Compare::NegInversePlusOne, digits));
    report.examples.push_back(run_one(kEx2, Compare::Tau, digits));
    report.examples.push_back(run_one(kEx3, Compare::JValue, digits));
    report.all_passed = true;
    for (const auto &e : report.examples) {
        report.all_passed = report.all_passed && e.passed;
    }
    return report;
}

} // namespace jinv
