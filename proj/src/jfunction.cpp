#include "jfunction.hpp"

#include "moduli.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>

namespace jinv {

using mp::Complex;
using mp::Real;

namespace {

Real real_from_mpz(const mpz_class &z, mp::Bits prec)
{
    Real r(prec);
    mpfr_set_z(r.get(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

mpz_class mpz_from_integral_real(const Real &x)
{
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), x.get(), MPFR_RNDN);
    return z;
}

} // namespace

HalfPlanePoint::HalfPlanePoint(Complex tau) : m_tau(std::move(tau))
{
    if (!m_tau.is_finite() || m_tau.im().sign() <= 0) {
        throw Error(ErrorKind::Domain, "tau must lie in the upper half-plane (Im tau > 0)");
    }
}

MobiusMap::MobiusMap(mpz_class a, mpz_class b, mpz_class c, mpz_class d)
    : m_a(std::move(a)), m_b(std::move(b)), m_c(std::move(c)), m_d(std::move(d))
{
    if (m_a * m_d - m_b * m_c != 1) {
        throw Error(ErrorKind::InvalidArgument, "Mobius map must have determinant 1");
    }
}

bool MobiusMap::is_identity() const
{
    // -I acts as the identity as well.
    return m_b == 0 && m_c == 0 && m_a == m_d;
}

MobiusMap MobiusMap::inverse() const { return {m_d, -m_b, -m_c, m_a}; }

Complex MobiusMap::apply(const Complex &tau) const
{
    const mp::Bits prec = tau.prec();
    const Complex num = tau * real_from_mpz(m_a, prec) + real_from_mpz(m_b, prec);
    const Complex den = tau * real_from_mpz(m_c, prec) + real_from_mpz(m_d, prec);
    return num / den;
}

HalfPlanePoint MobiusMap::apply(const HalfPlanePoint &tau) const { return HalfPlanePoint(apply(tau.tau())); }

std::string MobiusMap::to_string() const
{
    std::ostringstream out;
    out << "[[" << m_a << ", " << m_b << "], [" << m_c << ", " << m_d << "]]";
    return out.str();
}

bool operator==(const MobiusMap &x, const MobiusMap &y)
{
    return x.a() == y.a() && x.b() == y.b() && x.c() == y.c() && x.d() == y.d();
}

MobiusMap operator*(const MobiusMap &f, const MobiusMap &g)
{
    return {f.a() * g.a() + f.b() * g.c(), f.a() * g.b() + f.b() * g.d(), f.c() * g.a() + f.d() * g.c(),
            f.c() * g.b() + f.d() * g.d()};
}

// ---------------------------------------------------------------------------
// Eisenstein series

namespace {

constexpr std::size_t kMaxEisensteinTerms = 6000; // sigma_5 stays below 2^64

std::vector<std::uint64_t> divisor_power_sums(std::size_t n, unsigned k)
{
    std::vector<std::uint64_t> sigma(n + 1, 0);
    for (std::size_t d = 1; d <= n; ++d) {
        std::uint64_t dk = 1;
        for (unsigned e = 0; e < k; ++e) {
            dk *= d;
        }
        for (std::size_t m = d; m <= n; m += d) {
            sigma[m] += dk;
        }
    }
    return sigma;
}

// 1 + scale * sum_{n=1}^{N} sigma_k(n) q^n
Complex eisenstein(const Complex &q, std::size_t n_terms, unsigned k, long scale)
{
    if (abs(q) >= 1) {
        throw Error(ErrorKind::Domain, "Eisenstein series requires |q| < 1");
    }
    if (n_terms > kMaxEisensteinTerms) {
        throw Error(ErrorKind::InvalidArgument, "too many Eisenstein terms requested");
    }
    const mp::Bits prec = q.prec();
    if (n_terms == 0 || q.is_zero()) {
        return Complex(1, 0, prec);
    }
    const auto sigma = divisor_power_sums(n_terms, k);
    auto as_real = [prec](std::uint64_t v) {
        Real r(prec);
        mpfr_set_ui(r.get(), static_cast<unsigned long>(v), MPFR_RNDN);
        return r;
    };
    Complex acc(as_real(sigma[n_terms]));
    for (std::size_t n = n_terms - 1; n >= 1; --n) {
        acc = acc * q + as_real(sigma[n]);
    }
    return 1 + acc * q * scale;
}

} // namespace

Complex eisenstein_e4(const Complex &q, std::size_t n_terms) { return eisenstein(q, n_terms, 3, 240); }
Complex eisenstein_e6(const Complex &q, std::size_t n_terms) { return eisenstein(q, n_terms, 5, -504); }

// ---------------------------------------------------------------------------
// Reduction

Reduction reduce_to_fundamental_domain(const HalfPlanePoint &point)
{
    Complex tau = point.tau();
    const mp::Bits prec = tau.prec();
    // Points within eps of the boundary count as on it; half the working
    // precision leaves room for values carried in from truncated series.
    Real eps(1, prec);
    mpfr_mul_2si(eps.get(), eps.get(), -static_cast<long>(prec / 2), MPFR_RNDN);
    const Real half = Real::ratio(1, 2, prec);
    MobiusMap map;
    for (int iter = 0;; ++iter) {
        if (iter > 100000) {
            throw Error(ErrorKind::PrecisionOverflow, "fundamental-domain reduction did not terminate");
        }
        const Real shift = ceil(tau.re() - half - eps);
        if (!shift.is_zero()) {
            tau.re() -= shift;
            const mpz_class n = mpz_from_integral_real(shift);
            map = MobiusMap(1, -n, 0, 1) * map;
        }
        const Real n2 = norm(tau);
        if (n2 < 1 - eps || (n2 <= 1 + eps && tau.re() < -eps)) {
            tau = -(1 / tau);
            map = MobiusMap::inversion() * map;
            continue;
        }
        break;
    }
    return {HalfPlanePoint(std::move(tau)), std::move(map)};
}

// ---------------------------------------------------------------------------
// j

namespace {

// E4^3 - E6^2 = 1728 q + ..., so about log2(1/|q|) bits cancel.
constexpr double kMaxCancellationBits = 1 << 20;

std::size_t eisenstein_terms(double log10_q, double digits)
{
    // Terms of the E6 sum are below 504 * 1.04 * n^5 |q|^n and shrink by a
    // factor < 1/2 per step once |q| <= 0.005, so the tail is at most twice
    // the first omitted term.
    const double base = std::log10(2.0 * 504.0 * 1.04);
    std::size_t n = 1;
    while (base + 5.0 * std::log10(static_cast<double>(n + 1)) + static_cast<double>(n + 1) * log10_q > -digits) {
        if (++n > kMaxEisensteinTerms) {
            throw Error(ErrorKind::PrecisionOverflow, "requested precision needs too many q-series terms");
        }
    }
    return n;
}

} // namespace

Complex j_from_tau(const HalfPlanePoint &tau, const PrecisionContext &ctx)
{
    const Reduction red = reduce_to_fundamental_domain(HalfPlanePoint(tau.tau().with_prec(ctx.bits())));
    const Complex &t = red.point.tau();
    const double y = t.im().to_double();
    const double cancel_bits = 2.0 * M_PI * y / std::log(2.0);
    if (!(cancel_bits < kMaxCancellationBits)) {
        throw Error(ErrorKind::PrecisionOverflow,
                    "Im tau too large after reduction: j exceeds the representable precision");
    }
    const mp::Bits work = ctx.bits() + static_cast<mp::Bits>(std::ceil(cancel_bits)) + 16;
    const Complex tw = t.with_prec(work);
    const Real two_pi = mp::pi(work) * 2;
    const Complex q = Complex::polar(mp::exp(-(two_pi * tw.im())), two_pi * tw.re());
    if (q.is_zero() || !q.is_finite()) {
        throw Error(ErrorKind::PrecisionOverflow, "q underflows the exponent range");
    }
    const double log10_q = -2.0 * M_PI * y / std::log(10.0);
    const std::size_t n = eisenstein_terms(log10_q, static_cast<double>(work) * std::log10(2.0));
    const Complex e4 = eisenstein_e4(q, n);
    const Complex e6 = eisenstein_e6(q, n);
    const Complex e4_cubed = e4 * e4 * e4;
    const Complex j = e4_cubed * 1728 / (e4_cubed - e6 * e6);
    if (!j.is_finite()) {
        throw Error(ErrorKind::PrecisionOverflow, "j value exceeds the exponent range");
    }
    return j.with_prec(ctx.bits());
}

std::vector<Complex> taylor_j_at(const EllipticPoint &point, std::size_t n_coeffs, const PrecisionContext &ctx)
{
    if (n_coeffs == 0 || n_coeffs > 16) {
        throw Error(ErrorKind::InvalidArgument, "Taylor extraction supports 1 to 16 coefficients");
    }
    const auto extra =
        static_cast<unsigned>(std::ceil(static_cast<double>(n_coeffs) * std::log10(4.0))) + ctx.guard_digits;
    const PrecisionContext work = ctx.with_extra_digits(extra);
    // Aliasing from c_{k+N} decays like (r/R)^N with R = 2 pi Omega^2 > 2.1,
    // but the coefficients also grow like exp(C sqrt(k)) (the cusp sits on
    // the boundary circle), so N = 4n alone is not enough at i.
    const std::size_t samples =
        std::max<std::size_t>(4 * n_coeffs, static_cast<std::size_t>(1.25 * work.digits) + 32);
    const EllipticPoint wp = make_point(point.kind, work);
    const mp::Bits bits = work.bits();
    const Real radius = Real::ratio(1, 4, bits);
    const Real two_pi = mp::pi(bits) * 2;

    std::vector<Complex> values;
    values.reserve(samples);
    for (std::size_t m = 0; m < samples; ++m) {
        const Real theta = two_pi * static_cast<long>(m) / static_cast<long>(samples);
        values.push_back(j_from_tau(from_scaled_disk(wp, Complex::polar(radius, theta)), work));
    }

    std::vector<Complex> coeffs;
    coeffs.reserve(n_coeffs);
    Real r_pow(1, bits);
    for (std::size_t k = 0; k < n_coeffs; ++k) {
        Complex acc(bits);
        for (std::size_t m = 0; m < samples; ++m) {
            const auto idx = static_cast<long>((m * k) % samples);
            const Real theta = -(two_pi * idx / static_cast<long>(samples));
            acc += values[m] * Complex::polar(Real(1, bits), theta);
        }
        acc /= r_pow * static_cast<long>(samples);
        coeffs.push_back(acc.with_prec(ctx.bits()));
        r_pow /= 4;
    }
    return coeffs;
}

std::vector<Complex> q_expansion_coefficients(std::size_t n_coeffs, const PrecisionContext &ctx)
{
    if (n_coeffs == 0 || n_coeffs > 16) {
        throw Error(ErrorKind::InvalidArgument, "q-expansion extraction supports 1 to 16 coefficients");
    }
    // Coefficient k is scaled by e^{2 pi k}, so carry that many extra digits.
    const auto extra = static_cast<unsigned>(std::ceil(2.0 * M_PI * static_cast<double>(n_coeffs) / std::log(10.0))) +
                       ctx.guard_digits;
    const PrecisionContext work = ctx.with_extra_digits(extra);
    const mp::Bits bits = work.bits();
    // Aliasing from c_{k+N} is damped by e^{-2 pi N}.
    const std::size_t samples = std::max<std::size_t>(4 * n_coeffs, static_cast<std::size_t>(0.4 * work.digits) + 16);
    const Real two_pi = mp::pi(bits) * 2;

    std::vector<Complex> values;
    values.reserve(samples);
    for (std::size_t m = 0; m < samples; ++m) {
        const Real x = Real(static_cast<long>(m), bits) / static_cast<long>(samples);
        values.push_back(j_from_tau(HalfPlanePoint(Complex(x, Real(1, bits))), work));
    }

    std::vector<Complex> coeffs;
    coeffs.reserve(n_coeffs);
    for (std::size_t idx = 0; idx < n_coeffs; ++idx) {
        const long k = static_cast<long>(idx) - 1;
        Complex acc(bits);
        for (std::size_t m = 0; m < samples; ++m) {
            const long phase = (k * static_cast<long>(m)) % static_cast<long>(samples);
            const Real theta = -(two_pi * phase / static_cast<long>(samples));
            acc += values[m] * Complex::polar(Real(1, bits), theta);
        }
        // q^k on Im tau = 1 carries the factor e^{-2 pi k}.
        acc *= mp::exp(two_pi * k);
        acc /= Real(static_cast<long>(samples), bits);
        coeffs.push_back(acc.with_prec(ctx.bits()));
    }
    return coeffs;
}

} // namespace jinv
