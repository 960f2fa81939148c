#include "inversion.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace jinv {

using mp::Complex;
using mp::Real;

namespace {

std::string decimal(const Real &x) { return mp::to_string(x, 17); }

} // namespace

InadmissibleTarget::InadmissibleTarget(PointKind point, const Real &nearest_modulus, const Real &radius)
    : Error(ErrorKind::Inadmissible, std::string("no admissible root at point ") + to_string(point) +
                                         ": nearest root has |t| = " + decimal(nearest_modulus) +
                                         ", disk radius " + decimal(radius)),
      m_nearest(nearest_modulus)
{
}

ResidualFailure::ResidualFailure(InversionResult record)
    : Error(ErrorKind::Residual, "residual " + mp::to_string(record.residual, 6) + " is not below tolerance"),
      m_record(std::move(record))
{
}

namespace {

using cd = std::complex<double>;

std::complex<double> to_cd(const Complex &z) { return {z.re().to_double(), z.im().to_double()}; }

Complex from_cd(cd z, mp::Bits bits) { return {Real::from_double(z.real(), bits), Real::from_double(z.imag(), bits)}; }

// Roots of x^3 + b x^2 + c x + d in double precision.
std::vector<cd> cardano(cd b, cd c, cd d)
{
    const cd p = c - b * b / 3.0;
    const cd q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    const cd disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    cd s = -q / 2.0 + disc;
    if (std::abs(-q / 2.0 - disc) > std::abs(s)) {
        s = -q / 2.0 - disc;
    }
    const cd w(-0.5, std::sqrt(3.0) / 2.0);
    std::vector<cd> roots;
    if (std::abs(s) == 0.0) {
        roots.assign(3, -b / 3.0);
        return roots;
    }
    cd u = std::pow(s, 1.0 / 3.0);
    for (int k = 0; k < 3; ++k) {
        roots.push_back(u - p / (3.0 * u) - b / 3.0);
        u *= w;
    }
    return roots;
}

// Clears a component that is rounding noise relative to |z|.
void snap_to_axes(Complex &z)
{
    Real noise = abs(z);
    mpfr_mul_2si(noise.get(), noise.get(), -static_cast<long>(z.prec()) + 8, MPFR_RNDN);
    if (abs(z.im()) < noise) {
        z.im() = Real(z.prec());
    }
    if (abs(z.re()) < noise) {
        z.re() = Real(z.prec());
    }
}

void sort_by_modulus(std::vector<Complex> &roots)
{
    std::stable_sort(roots.begin(), roots.end(), [](const Complex &x, const Complex &y) {
        const int c = compare(abs(x), abs(y));
        if (c != 0) {
            return c < 0;
        }
        if (compare(x.im(), y.im()) != 0) {
            return x.im() > y.im();
        }
        return x.re() > y.re();
    });
}

} // namespace

std::vector<Complex> solve_t_i(const Complex &alpha_in, const PrecisionContext &ctx)
{
    const mp::Bits bits = ctx.bits();
    const Complex alpha = alpha_in.with_prec(bits);
    // 64(16u-3)^3 - alpha(4u-1) = 262144u^3 - 147456u^2 + (27648 - 4 alpha)u + (alpha - 1728)
    const Complex c3(262144, 0, bits);
    const Complex c2(-147456, 0, bits);
    const Complex c1 = 27648 - alpha * 4;
    const Complex c0 = alpha - 1728;

    const cd a = to_cd(alpha);
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
        throw Error(ErrorKind::Domain, "target value is too large to seed the root finder");
    }
    const auto seeds = cardano(-147456.0 / 262144.0, (27648.0 - 4.0 * a) / 262144.0, (a - 1728.0) / 262144.0);

    Real step_floor(1, bits);
    mpfr_mul_2si(step_floor.get(), step_floor.get(), -static_cast<long>(bits) + 4, MPFR_RNDN);
    std::vector<Complex> roots;
    for (const cd &seed : seeds) {
        Complex u = from_cd(seed, bits);
        // Newton; linear near the multiple roots at alpha = 0 and 1728,
        // where the iteration cap is the limit.
        for (int iter = 0; iter < 400; ++iter) {
            const Complex p = ((c3 * u + c2) * u + c1) * u + c0;
            const Complex dp = (c3 * 3 * u + c2 * 2) * u + c1;
            if (dp.is_zero() || p.is_zero()) {
                break;
            }
            const Complex du = p / dp;
            u -= du;
            if (abs(du) <= step_floor * max(Real(1, bits), abs(u))) {
                break;
            }
        }
        // A multiple root of p is a simple root of p' or p''; solving there
        // recovers the precision Newton on p cannot reach.
        // The candidate replaces u only when it leaves a smaller residual.
        auto residual = [&](const Complex &x) { return abs(((c3 * x + c2) * x + c1) * x + c0); };
        const Real near = mp::pow10(-static_cast<long>(ctx.digits / 4), bits);
        const Complex triple = -c2 / (c3 * 3);
        if (abs(u - triple) < near && residual(triple) <= residual(u)) {
            u = triple;
        } else if (abs((c3 * 3 * u + c2 * 2) * u + c1) < near * 262144) {
            Complex v = u;
            for (int iter = 0; iter < 60; ++iter) {
                const Complex d1 = (c3 * 3 * v + c2 * 2) * v + c1;
                const Complex d2 = c3 * 6 * v + c2 * 2;
                if (d1.is_zero() || d2.is_zero()) {
                    break;
                }
                const Complex dv = d1 / d2;
                v -= dv;
                if (abs(dv) <= step_floor * max(Real(1, bits), abs(v))) {
                    break;
                }
            }
            if (residual(v) <= residual(u)) {
                u = v;
            }
        }
        if (alpha.is_real()) {
            snap_to_axes(u);
        }
        const Complex t = sqrt(u);
        roots.push_back(t);
        roots.push_back(-t);
    }
    sort_by_modulus(roots);
    return roots;
}

std::vector<Complex> solve_t_rho(const Complex &alpha_in, const PrecisionContext &ctx)
{
    const mp::Bits bits = ctx.bits();
    const Complex alpha = alpha_in.with_prec(bits);
    if (alpha.is_zero()) {
        return std::vector<Complex>(6, Complex(bits));
    }
    // 1728 v^2 + 2 alpha v + alpha = 0 with v = t^3
    const Complex root_disc = sqrt(alpha * (alpha - 1728));
    Complex big = alpha + root_disc;
    const Complex other = alpha - root_disc;
    if (abs(other) > abs(big)) {
        big = other;
    }
    const Complex v1 = -big / 1728;
    const Complex v2 = alpha / (v1 * 1728);

    std::vector<Complex> roots;
    const Real third = mp::pi(bits) * 2 / 3;
    const Complex omega = Complex::polar(Real(1, bits), third);
    for (Complex v : {v1, v2}) {
        if (alpha.is_real()) {
            snap_to_axes(v);
        }
        Complex t(bits);
        if (v.is_real()) {
            t = Complex(mp::cbrt(v.re()));
        } else {
            t = Complex::polar(mp::cbrt(abs(v)), arg(v) / 3);
        }
        roots.push_back(t);
        roots.push_back(t * omega);
        roots.push_back(t * conj(omega));
    }
    sort_by_modulus(roots);
    return roots;
}

std::vector<Complex> solve_t(PointKind point, const Complex &alpha, const PrecisionContext &ctx)
{
    return point == PointKind::I ? solve_t_i(alpha, ctx) : solve_t_rho(alpha, ctx);
}

Complex select_root(PointKind point, const std::vector<Complex> &roots, const Complex &alpha,
                    const PrecisionContext &ctx)
{
    const mp::Bits bits = ctx.bits();
    const Real radius = point == PointKind::I ? Real::ratio(1, 2, bits) : 1 / mp::cbrt(Real(2, bits));
    if (roots.empty()) {
        throw Error(ErrorKind::InvalidArgument, "no roots to select from");
    }
    Real nearest = abs(roots.front());
    for (const Complex &t : roots) {
        nearest = min(nearest, abs(t));
    }
    if (!(nearest < radius)) {
        throw InadmissibleTarget(point, nearest, radius);
    }
    // Roots whose moduli agree to half the working precision are ties.
    const Real slack = mp::pow10(-static_cast<long>(ctx.digits / 2), bits);
    const Real tiny = slack * max(Real(1, bits), nearest);
    const Complex *best = nullptr;
    auto rank = [&](const Complex &t) {
        const bool real = abs(t.im()) <= tiny;
        int r = 0;
        if (alpha.is_real() && !real) {
            r += 4;
        }
        if (!real && t.im().sign() < 0) {
            r += 2;
        }
        if (abs(t.re()) > tiny && t.re().sign() < 0) {
            r += 1;
        }
        return r;
    };
    for (const Complex &t : roots) {
        if (abs(t) - nearest > tiny) {
            continue;
        }
        if (best == nullptr || rank(t) < rank(*best)) {
            best = &t;
        }
    }
    return *best;
}

std::size_t required_terms(PointKind point, const Complex &t, const PrecisionContext &ctx)
{
    const double tm = abs(t).to_double();
    const double zm = point == PointKind::I ? 4.0 * tm * tm : 2.0 * tm * tm * tm;
    if (zm >= 1.0) {
        throw Error(ErrorKind::Domain, "t lies outside the disk of convergence");
    }
    if (zm == 0.0) {
        return 1;
    }
    const double log_tol = (static_cast<double>(ctx.guard_digits) - static_cast<double>(ctx.digits)) * std::log(10.0);
    const double n = (log_tol + std::log1p(-zm)) / std::log(zm);
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(n)));
}

InversionResult compute_inversion(const Complex &alpha_in, PointKind point, const PrecisionContext &ctx,
                                  const InversionOptions &options)
{
    ctx.validate();
    const mp::Bits bits = ctx.bits();
    const Complex alpha = alpha_in.with_prec(bits);
    if (!alpha.is_finite()) {
        throw Error(ErrorKind::Domain, "target value must be finite");
    }
    const EllipticPoint ep = make_point(point, ctx);
    const Complex t0 = select_root(point, solve_t(point, alpha, ctx), alpha, ctx);

    std::vector<std::string> warnings;
    PrecisionContext work = ctx;
    const double edge = abs(t0).to_double() / ep.radius.to_double();
    if (edge > 0.98) {
        const std::size_t need = required_terms(point, t0, ctx);
        const std::string where = "|t0| is " + mp::to_string(Real::from_double(edge, 64), 4) + " of the disk radius";
        if (options.truncate_terms) {
            if (*options.truncate_terms < need) {
                warnings.push_back(where + "; " + std::to_string(*options.truncate_terms) +
                                   " terms leave the series tail above tolerance (about " + std::to_string(need) +
                                   " needed)");
            }
        } else if (need > work.max_terms) {
            work.max_terms = need + need / 4;
            warnings.push_back(where + "; series budget raised to " + std::to_string(work.max_terms) + " terms");
        }
    }

    SeriesMode mode;
    mode.truncate_terms = options.truncate_terms;
    const CValue cv = c_value(point, t0, work, mode);
    Complex raw = from_scaled_disk(ep, cv.value).tau();
    if (point == PointKind::I) {
        raw = (raw + 1) / 2;
    }
    const HalfPlanePoint tau_raw(raw);
    const MobiusMap pull_back = t0.is_zero() ? MobiusMap::identity() : arg_table_map(point, t0).inverse();
    const HalfPlanePoint tau_normalized = pull_back.apply(tau_raw);
    Reduction red = reduce_to_fundamental_domain(tau_normalized);
    const Complex j = j_from_tau(red.point, ctx);
    Real residual = abs(j - alpha) / (1 + abs(alpha));
    const bool success = residual < ctx.tol();

    return InversionResult{alpha,
                           point,
                           t0,
                           cv.value,
                           tau_raw,
                           tau_normalized,
                           red.point,
                           red.map * pull_back,
                           j,
                           std::move(residual),
                           cv.terms_used,
                           success,
                           std::move(warnings)};
}

InversionResult invert_j(const Complex &alpha, PointKind point, const PrecisionContext &ctx,
                         const InversionOptions &options)
{
    InversionResult r = compute_inversion(alpha, point, ctx, options);
    if (!r.success) {
        throw ResidualFailure(std::move(r));
    }
    return r;
}

} // namespace jinv
