#include "moduli.hpp"

namespace jinv {

using mp::Complex;
using mp::Real;

DiskPoint::DiskPoint(Complex w) : m_w(std::move(w))
{
    if (!(abs(m_w) < 1)) {
        throw Error(ErrorKind::Domain, "disk coordinate must satisfy |w| < 1");
    }
}

DiskPoint to_disk(const EllipticPoint &point, const HalfPlanePoint &tau)
{
    const Complex &t = tau.tau();
    return DiskPoint((t - point.tau_star) / (t - conj(point.tau_star)));
}

HalfPlanePoint from_disk(const EllipticPoint &point, const DiskPoint &w)
{
    const Complex &x = w.w();
    return HalfPlanePoint((point.tau_star - conj(point.tau_star) * x) / (1 - x));
}

HalfPlanePoint from_scaled_disk(const EllipticPoint &point, const Complex &w)
{
    const mp::Bits bits = std::max(point.omega.prec(), w.prec());
    const Real scale = mp::pi(bits) * 2 * point.omega * point.omega;
    if (!(abs(w) < scale)) {
        throw Error(ErrorKind::Domain, "|w| must stay below 2 pi Omega^2 for the image to lie in the half-plane");
    }
    return from_disk(point, DiskPoint(w.with_prec(bits) / scale));
}

// ---------------------------------------------------------------------------
// C_i, C_rho

namespace {

struct Quotient {
    Complex value;
    std::size_t terms;
};

// N(z) / D(z) for the numerator and denominator parameter sets.
Quotient hyp_quotient(const HypParams &num, const HypParams &den, const Complex &z, const PrecisionContext &ctx,
                      const SeriesMode &mode)
{
    F21Result n = mode.truncate_terms ? f21_series_truncated(num, z, *mode.truncate_terms, ctx) : f21(num, z, ctx);
    F21Result d = mode.truncate_terms ? f21_series_truncated(den, z, *mode.truncate_terms, ctx) : f21(den, z, ctx);
    if (abs(d.value) < ctx.tol()) {
        throw Error(ErrorKind::Pole, "denominator hypergeometric function vanishes");
    }
    return {n.value / d.value, std::max(n.terms_used, d.terms_used)};
}

} // namespace

CValue c_i(const Complex &t_in, const PrecisionContext &ctx, const SeriesMode &mode)
{
    const mp::Bits bits = ctx.bits();
    const Complex t = t_in.with_prec(bits);
    const Complex z = t * t * 4;
    if (abs(z - 1) < ctx.tol()) {
        throw Error(ErrorKind::Pole, "C_i has poles at t = +-1/2");
    }
    if (mode.enforce_disk && !(abs(t) < Real::ratio(1, 2, bits))) {
        throw Error(ErrorKind::Domain, "C_i series requires |t| < 1/2");
    }
    if (t.is_zero()) {
        return {t, Complex(bits), PointKind::I, 1};
    }
    const Quotient q = hyp_quotient(HypParams::ratios(3, 4, 3, 4, 3, 2, bits),
                                    HypParams::ratios(1, 4, 1, 4, 1, 2, bits), z, ctx, mode);
    return {t, t * q.value, PointKind::I, q.terms};
}

CValue c_rho(const Complex &t_in, const PrecisionContext &ctx, const SeriesMode &mode)
{
    const mp::Bits bits = ctx.bits();
    const Complex t = t_in.with_prec(bits);
    const Complex t2 = t * t;
    const Complex z = t2 * t * (-2);
    if (abs(z - 1) < ctx.tol()) {
        throw Error(ErrorKind::Pole, "C_rho has poles where 2t^3 = -1");
    }
    if (mode.enforce_disk && !(abs(t) < 1 / mp::cbrt(Real(2, bits)))) {
        throw Error(ErrorKind::Domain, "C_rho series requires |t| < 2^(-1/3)");
    }
    if (t.is_zero()) {
        return {t, Complex(bits), PointKind::Rho, 1};
    }
    const Quotient q = hyp_quotient(HypParams::ratios(5, 6, 5, 6, 5, 3, bits),
                                    HypParams::ratios(1, 6, 1, 6, 1, 3, bits), z, ctx, mode);
    return {t, t2 * q.value / 2, PointKind::Rho, q.terms};
}

CValue c_value(PointKind point, const Complex &t, const PrecisionContext &ctx, const SeriesMode &mode)
{
    return point == PointKind::I ? c_i(t, ctx, mode) : c_rho(t, ctx, mode);
}

namespace {

std::vector<Real> hyp_coefficients(const HypParams &p, std::size_t n, mp::Bits bits)
{
    std::vector<Real> out;
    out.reserve(n);
    Real term(1, bits);
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(term);
        const long kl = static_cast<long>(k);
        term *= (p.a + kl) * (p.b + kl) / ((p.c + kl) * (kl + 1));
    }
    return out;
}

} // namespace

std::vector<Real> c_series_coefficients(PointKind point, std::size_t n, const PrecisionContext &ctx)
{
    const mp::Bits bits = ctx.bits();
    const bool at_i = point == PointKind::I;
    const std::size_t k_max = n / (at_i ? 2 : 3) + 1;
    const auto num = at_i ? hyp_coefficients(HypParams::ratios(3, 4, 3, 4, 3, 2, bits), k_max, bits)
                          : hyp_coefficients(HypParams::ratios(5, 6, 5, 6, 5, 3, bits), k_max, bits);
    const auto den = at_i ? hyp_coefficients(HypParams::ratios(1, 4, 1, 4, 1, 2, bits), k_max, bits)
                          : hyp_coefficients(HypParams::ratios(1, 6, 1, 6, 1, 3, bits), k_max, bits);
    std::vector<Real> quot;
    for (std::size_t k = 0; k < k_max; ++k) {
        Real acc = num[k];
        for (std::size_t j = 1; j <= k; ++j) {
            acc -= den[j] * quot[k - j];
        }
        quot.push_back(acc / den[0]);
    }

    // C_i = t Q(4t^2), C_rho = (t^2/2) Q(-2t^3)
    std::vector<Real> out(n, Real(bits));
    Real scale = at_i ? Real(1, bits) : Real::ratio(1, 2, bits);
    for (std::size_t k = 0; k < k_max; ++k) {
        const std::size_t power = at_i ? 2 * k + 1 : 3 * k + 2;
        if (power < n) {
            out[power] = quot[k] * scale;
        }
        scale *= at_i ? 4 : -2;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rational forms

namespace {

void require_nonzero_denominator(const Complex &den, const char *what)
{
    Real threshold(1, den.prec());
    mpfr_mul_2si(threshold.get(), threshold.get(), -static_cast<long>(den.prec()) + 16, MPFR_RNDN);
    if (abs(den) < threshold) {
        throw Error(ErrorKind::Pole, what);
    }
}

} // namespace

Complex rational_j_i(const Complex &t)
{
    const Complex t2 = t * t;
    const Complex den = t2 * 4 - 1;
    require_nonzero_denominator(den, "64(16t^2-3)^3/(4t^2-1) has poles at t = +-1/2");
    return pow(t2 * 16 - 3, 3) * 64 / den;
}

Complex rational_j_rho(const Complex &t)
{
    const Complex t3 = t * t * t;
    const Complex den = t3 * 2 + 1;
    require_nonzero_denominator(den, "-1728t^6/(2t^3+1) has poles where 2t^3 = -1");
    return t3 * t3 * (-1728) / den;
}

Complex rational_j(PointKind point, const Complex &t)
{
    return point == PointKind::I ? rational_j_i(t) : rational_j_rho(t);
}

// ---------------------------------------------------------------------------
// Signature 4 and 6

namespace {

HalfPlanePoint checked_half_plane(Complex tau)
{
    if (!(tau.im().sign() > 0)) {
        throw Error(ErrorKind::Domain, "hypergeometric quotient lies outside the upper half-plane");
    }
    return HalfPlanePoint(std::move(tau));
}

} // namespace

HalfPlanePoint berndt_tau_sig4(const Complex &g_in, const PrecisionContext &ctx)
{
    const mp::Bits bits = ctx.bits();
    const Complex g = g_in.with_prec(bits);
    if (abs(g) < ctx.tol() || abs(1 - g) < ctx.tol()) {
        throw Error(ErrorKind::Pole, "signature-4 parameter must avoid 0 and 1");
    }
    const Complex ratio = lambda_r(4, 1 - g, ctx) / lambda_r(4, g, ctx);
    const Real inv_sqrt2 = 1 / mp::sqrt(Real(2, bits));
    return checked_half_plane(Complex(-ratio.im() * inv_sqrt2, ratio.re() * inv_sqrt2));
}

Complex berndt_j_sig4(const Complex &g)
{
    const Complex den = g * pow(g - 1, 2);
    require_nonzero_denominator(den, "64(1+3g)^3/(g(g-1)^2) has poles at g = 0, 1");
    return pow(g * 3 + 1, 3) * 64 / den;
}

HalfPlanePoint berndt_tau_sig6(const Complex &g_in, const PrecisionContext &ctx)
{
    const mp::Bits bits = ctx.bits();
    const Complex g = g_in.with_prec(bits);
    const Complex beta = -(g * g * g) / 2;
    if (abs(beta) < ctx.tol() || abs(1 - beta) < ctx.tol()) {
        throw Error(ErrorKind::Pole, "signature-6 parameter -g^3/2 must avoid 0 and 1");
    }
    const Complex ratio = lambda_r(6, 1 - beta, ctx) / lambda_r(6, beta, ctx);
    return checked_half_plane(Complex(-ratio.im(), ratio.re()));
}

Complex berndt_j_sig6(const Complex &g)
{
    const Complex g3 = g * g * g;
    const Complex den = g3 * (g3 + 2);
    require_nonzero_denominator(den, "-1728/(g^3(2+g^3)) has poles at g^3 = 0, -2");
    return -1728 / den;
}

// ---------------------------------------------------------------------------
// Sector maps

MobiusMap arg_table_map(PointKind point, const Complex &t)
{
    if (t.is_zero()) {
        throw Error(ErrorKind::InvalidArgument, "sector map needs t != 0");
    }
    const int re = t.re().sign();
    const int im = t.im().sign();
    if (point == PointKind::I) {
        if (im > 0 && re >= 0) {
            return MobiusMap::identity(); // (0, pi/2]
        }
        if (re < 0 && im >= 0) {
            return {1, 0, 2, 1}; // (pi/2, pi]: tau/(2tau+1)
        }
        if (re > 0) {
            return {1, 1, 0, 1}; // (-pi/2, 0]: tau+1
        }
        return {1, -1, 2, -1}; // (-pi, -pi/2]: (tau-1)/(2tau-1)
    }
    const Real theta = arg(t);
    const Real third = mp::pi(t.prec()) / 3;
    if (theta.sign() > 0) {
        if (theta <= third) {
            return MobiusMap::identity();
        }
        if (theta <= third * 2) {
            return {1, 0, 1, 1}; // tau/(tau+1)
        }
        return {1, -1, 1, 0}; // (tau-1)/tau
    }
    if (theta >= -third) {
        return {1, 1, 0, 1}; // tau+1
    }
    if (theta >= -(third * 2)) {
        return {0, -1, 1, -1}; // -1/(tau-1)
    }
    return MobiusMap::inversion();
}

} // namespace jinv
