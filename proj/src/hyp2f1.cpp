#include "hyp2f1.hpp"

#include <cmath>
#include <utility>
#include <string>

namespace jinv {

using mp::Complex;
using mp::Real;

namespace {

bool is_nonpositive_integer(const Real &x) { return x.sign() <= 0 && x.is_integer(); }

// Parameters derived as sums like a - c + 1 carry rounding error, so
// integer tests on them allow a few ulps.
bool near_integer(const Real &x, long *nearest = nullptr)
{
    Real r(x.prec());
    mpfr_rint(r.get(), x.get(), MPFR_RNDN);
    Real slack(1, x.prec());
    mpfr_mul_2si(slack.get(), slack.get(), -static_cast<long>(x.prec()) + 16, MPFR_RNDN);
    if (abs(x - r) > slack * max(Real(1, x.prec()), abs(x))) {
        return false;
    }
    if (nearest != nullptr) {
        *nearest = r.to_long();
    }
    return true;
}

bool near_nonpositive_integer(const Real &x)
{
    long n = 0;
    return near_integer(x, &n) && n <= 0;
}

// Nested continuations stop here; every candidate series is inside the
// unit disk long before this depth in practice.
constexpr int kMaxDepth = 8;

} // namespace

HypParams::HypParams(Real a_, Real b_, Real c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_))
{
    if (is_nonpositive_integer(c)) {
        throw Error(ErrorKind::NonGeneric, "2F1 lower parameter c is a non-positive integer");
    }
    // One canonical order makes every evaluation exactly symmetric in a and b.
    if (a < b) {
        std::swap(a, b);
    }
}

HypParams HypParams::ratios(long an, long ad, long bn, long bd, long cn, long cd, mp::Bits prec)
{
    return {Real::ratio(an, ad, prec), Real::ratio(bn, bd, prec), Real::ratio(cn, cd, prec)};
}

const char *to_string(F21Region region) noexcept
{
    switch (region) {
    case F21Region::UnitDiskSeries: return "unit-disk-series";
    case F21Region::LinearTransform: return "linear-transform";
    case F21Region::CutLimit: return "cut-limit";
    }
    return "unknown";
}

namespace {

struct Series {
    Complex sum;
    Complex term;
    Real a, b, c;
    Complex z;
    std::size_t count = 1; // terms summed so far

    Series(const HypParams &p, const Complex &z_, mp::Bits bits)
        : sum(1, 0, bits), term(1, 0, bits), a(p.a.with_prec(bits)), b(p.b.with_prec(bits)),
          c(p.c.with_prec(bits)), z(z_.with_prec(bits))
    {
    }

    // Adds t_count = t_{count-1} (a+n)(b+n) / ((c+n)(n+1)) z with n = count-1.
    void step()
    {
        const long n = static_cast<long>(count) - 1;
        const Real factor = (a + n) * (b + n) / ((c + n) * (n + 1));
        term = term * z;
        term *= factor;
        sum += term;
        ++count;
    }
};

void require_unit_disk(const Complex &z)
{
    if (abs(z) >= 1) {
        throw Error(ErrorKind::Domain, "2F1 power series requires |z| < 1");
    }
}

} // namespace

F21Result f21_series(const HypParams &p, const Complex &z, const PrecisionContext &ctx)
{
    require_unit_disk(z);
    const mp::Bits bits = ctx.bits();
    Series s(p, z, bits);
    if (z.is_zero()) {
        return {s.sum, 1, F21Region::UnitDiskSeries};
    }
    const double zabs = abs(s.z).to_double();
    const double am1 = abs(s.a - 1).to_double();
    const double bmc = abs(s.b - s.c).to_double();
    const double c = s.c.to_double();
    const Real eps = ctx.epsilon();

    for (;;) {
        if (s.count >= ctx.max_terms) {
            throw Error(ErrorKind::Convergence,
                        "2F1 series did not converge within " + std::to_string(ctx.max_terms) + " terms");
        }
        s.step();
        if (s.term.is_zero()) {
            break;
        }
        // Every later ratio |t_{k+1}/t_k| with k >= count-1 is at most R.
        const double m = static_cast<double>(s.count);
        if (c + m - 1.0 > 0.0) {
            const double r = zabs * (1.0 + am1 / (m + 1.0)) * (1.0 + bmc / (c + m - 1.0));
            if (r < 1.0) {
                const Real tail = abs(s.term) * Real::from_double(r / (1.0 - r), 64);
                if (tail < eps * abs(s.sum)) {
                    break;
                }
            }
        }
    }
    return {s.sum, s.count, F21Region::UnitDiskSeries};
}

F21Result f21_series_truncated(const HypParams &p, const Complex &z, std::size_t n_terms,
                               const PrecisionContext &ctx)
{
    if (n_terms == 0) {
        throw Error(ErrorKind::InvalidArgument, "truncated series needs at least one term");
    }
    require_unit_disk(z);
    Series s(p, z, ctx.bits());
    while (s.count < n_terms) {
        s.step();
    }
    return {s.sum, n_terms, F21Region::UnitDiskSeries};
}

namespace {

F21Result evaluate(const HypParams &p, const Complex &z, const PrecisionContext &ctx, int depth);

// 1/z, 1 - 1/z connection formula. Caller guarantees z is off (-inf, 1].
F21Result connection(const HypParams &p, const Complex &z, const PrecisionContext &ctx, int depth)
{
    if (depth > kMaxDepth) {
        throw Error(ErrorKind::Convergence, "2F1 continuation nested too deeply");
    }
    const mp::Bits bits = ctx.bits();
    const Real &a = p.a;
    const Real &b = p.b;
    const Real &c = p.c;
    const Real amb1 = a - b + 1;
    const Real cab1 = c - a - b + 1;
    if (near_nonpositive_integer(amb1) || near_nonpositive_integer(cab1)) {
        throw Error(ErrorKind::NonGeneric,
                    "connection formula degenerates: a-b+1 or c-a-b+1 is a non-positive integer");
    }
    const Real g = gamma_signed(1 - b, ctx) * gamma_signed(c, ctx);
    const Real coef1 = g * rgamma(amb1, ctx) * rgamma(c - a, ctx);
    const Real coef2 = g * rgamma(a, ctx) * rgamma(cab1, ctx);

    const Complex w = z.with_prec(bits);
    const Complex inv = 1 / w;
    const Complex one_minus = 1 - inv;

    Complex total(bits);
    std::size_t terms = 0;
    if (!coef1.is_zero()) {
        const F21Result f = evaluate(HypParams(a - c + 1, a, amb1), inv, ctx, depth + 1);
        total += coef1 * pow(inv, a) * f.value;
        terms = std::max(terms, f.terms_used);
    }
    if (!coef2.is_zero()) {
        const F21Result f = evaluate(HypParams(c - a, 1 - a, cab1), one_minus, ctx, depth + 1);
        total += coef2 * pow(one_minus, c - a - b) * pow(-inv, b) * f.value;
        terms = std::max(terms, f.terms_used);
    }
    return {total, terms, F21Region::LinearTransform};
}

// Expansion in powers of w = 1 - z: the Gamma-weighted pair of series when
// c-a-b is not an integer, the logarithmic series when it is.
F21Result near_one(const HypParams &p, const Complex &z, const PrecisionContext &ctx, int depth)
{
    if (depth > kMaxDepth) {
        throw Error(ErrorKind::Convergence, "2F1 continuation nested too deeply");
    }
    const mp::Bits bits = ctx.bits();
    const Real &a = p.a;
    const Real &b = p.b;
    const Real &c = p.c;
    const Real s = c - a - b;
    const Complex w = 1 - z.with_prec(bits);
    if (!near_integer(s)) {
        const Real coef1 = gamma_signed(c, ctx) * gamma_signed(s, ctx) * rgamma(c - a, ctx) * rgamma(c - b, ctx);
        const Real coef2 = gamma_signed(c, ctx) * gamma_signed(-s, ctx) * rgamma(a, ctx) * rgamma(b, ctx);
        Complex total(bits);
        std::size_t terms = 0;
        if (!coef1.is_zero()) {
            const F21Result f = evaluate(HypParams(a, b, 1 - s), w, ctx, depth + 1);
            total += coef1 * f.value;
            terms = std::max(terms, f.terms_used);
        }
        if (!coef2.is_zero()) {
            const F21Result f = evaluate(HypParams(c - a, c - b, s + 1), w, ctx, depth + 1);
            total += coef2 * pow(w, s) * f.value;
            terms = std::max(terms, f.terms_used);
        }
        return {total, terms, F21Region::LinearTransform};
    }
    long m = 0;
    near_integer(s, &m);
    if (m < 0) {
        // Euler: F(a,b;c;z) = w^{c-a-b} F(c-a, c-b; c; z), where the new
        // c-a-b is -m > 0 and the integer power has no branch.
        const F21Result f = evaluate(HypParams(c - a, c - b, c), z, ctx, depth + 1);
        return {pow(w, m) * f.value, f.terms_used, F21Region::LinearTransform};
    }
    // c = a + b + m, m >= 0:
    // F = Gamma(c) Gamma(m)/(Gamma(a+m)Gamma(b+m)) sum_{k<m} (a)_k (b)_k/(k! (1-m)_k) w^k
    //   + Gamma(c)/(Gamma(a)Gamma(b)) (-w)^m sum_k (a+m)_k (b+m)_k/(k! (k+m)!) [h_k - log w] w^k,
    // h_k = psi(k+1) + psi(k+m+1) - psi(a+k+m) - psi(b+k+m).
    Complex finite(bits);
    if (m > 0) {
        Real coef(1, bits); // (a)_k (b)_k / (k! (1-m)_k)
        Complex wk(1, 0, bits);
        for (long k = 0; k < m; ++k) {
            finite += wk * coef;
            coef *= (a + k) * (b + k) / ((k + 1) * (1 - m + k));
            wk *= w;
        }
        finite *= gamma_signed(c, ctx) * gamma_signed(Real(m, bits), ctx) * rgamma(a + m, ctx) * rgamma(b + m, ctx);
    }
    auto digamma = [bits](const Real &x) {
        Real r(bits);
        mpfr_digamma(r.get(), x.with_prec(bits).get(), MPFR_RNDN);
        return r;
    };
    const Real am = a + m;
    const Real bm = b + m;
    Real h = digamma(Real(1, bits)) + digamma(Real(m + 1, bits)) - digamma(am) - digamma(bm);
    const Complex log_w = log(w);
    Real coef = 1 / gamma_signed(Real(m + 1, bits), ctx); // (a+m)_k (b+m)_k / (k! (k+m)!)
    Complex wk(1, 0, bits);
    Complex sum = (Complex(h) - log_w) * coef;
    const double wabs = abs(w).to_double();
    const double am1 = abs(am - 1).to_double();
    const double bm1 = abs(b - 1).to_double();
    const Real eps = ctx.epsilon();
    std::size_t k = 0;
    for (;;) {
        if (k + 1 >= ctx.max_terms) {
            throw Error(ErrorKind::Convergence, "logarithmic 2F1 expansion did not converge");
        }
        const long kl = static_cast<long>(k);
        coef *= (am + kl) * (bm + kl) / ((kl + 1) * (kl + m + 1));
        h += Real::ratio(1, kl + 1, bits) + Real::ratio(1, kl + m + 1, bits) - 1 / (am + kl) - 1 / (bm + kl);
        wk *= w;
        ++k;
        const Complex term = wk * coef * (Complex(h) - log_w);
        sum += term;
        if (term.is_zero()) {
            break;
        }
        // Coefficient ratios are below R from here on; the bracket grows
        // at most logarithmically, covered by the factor 2.
        const double kd = static_cast<double>(k);
        const double r = wabs * (1.0 + am1 / (kd + 1.0)) * (1.0 + bm1 / (kd + static_cast<double>(m) + 1.0));
        if (r < 1.0) {
            const Real tail = abs(term) * Real::from_double(2.0 * r / (1.0 - r), 64);
            if (tail < eps * abs(sum)) {
                break;
            }
        }
    }
    const Real g = gamma_signed(c, ctx) * rgamma(a, ctx) * rgamma(b, ctx);
    return {finite + pow(-w, m) * sum * g, k + 1, F21Region::LinearTransform};
}

// Taylor re-expansion of the ODE solution about z0 = 0.7 z/|z|, for the
// points near |z| = 1 (around exp(+-i pi/3)) where every closed-form
// transformation has ratio close to 1. The disk about z0 avoids 0, 1 and
// the cut, so the principal branch is preserved.
F21Result reexpand(const HypParams &p, const Complex &z, const Complex &z0, const PrecisionContext &ctx,
                   int depth)
{
    if (depth > kMaxDepth) {
        throw Error(ErrorKind::Convergence, "2F1 continuation nested too deeply");
    }
    const mp::Bits bits = ctx.bits();
    const Real a = p.a.with_prec(bits);
    const Real b = p.b.with_prec(bits);
    const Real c = p.c.with_prec(bits);
    const F21Result f0 = evaluate(p, z0, ctx, depth + 1);
    const F21Result d0 = evaluate(HypParams(a + 1, b + 1, c + 1), z0, ctx, depth + 1);

    // z(1-z)F'' + [c - (a+b+1)z]F' - ab F = 0 in powers of h = z - z0:
    // u_{n+2} = ([(1-2 z0) n + c - (a+b+1) z0](n+1) u_{n+1} - (n+a)(n+b) u_n)
    //           / (-z0 (1-z0) (n+1)(n+2))
    const Complex h = z.with_prec(bits) - z0;
    const Complex lead = z0 * (1 - z0);
    const Complex lin = 1 - z0 * 2;
    const Complex shift = Complex(c) - z0 * (a + b + 1);
    Complex u_prev = f0.value;
    Complex u_cur = d0.value * (a * b / c);
    Complex hn = h; // h^{n+1}
    Complex sum = u_prev + u_cur * h;
    const Real eps = ctx.epsilon();
    int small_run = 0;
    std::size_t n = 0;
    for (;; ++n) {
        if (n + 2 >= ctx.max_terms) {
            throw Error(ErrorKind::Convergence, "2F1 re-expansion did not converge");
        }
        const long nl = static_cast<long>(n);
        const Complex num = (lin * nl + shift) * (nl + 1) * u_cur - u_prev * ((a + nl) * (b + nl));
        const Complex u_next = -(num / (lead * ((nl + 1) * (nl + 2))));
        hn *= h;
        const Complex term = u_next * hn;
        sum += term;
        u_prev = std::move(u_cur);
        u_cur = u_next;
        // The ratio of successive terms settles near |h|/dist(z0, {0,1}) < 0.6.
        small_run = abs(term) < eps * abs(sum) ? small_run + 1 : 0;
        if (small_run >= 3) {
            break;
        }
    }
    return {sum, std::max(f0.terms_used, d0.terms_used) + n + 3, F21Region::LinearTransform};
}

// Gauss summation at z = 1.
F21Result at_one(const HypParams &p, const PrecisionContext &ctx)
{
    const Real s = p.c - p.a - p.b;
    if (s.sign() <= 0) {
        throw Error(ErrorKind::Pole, "2F1 diverges at z = 1 when c - a - b <= 0");
    }
    const Real v = gamma_signed(p.c, ctx) * gamma_signed(s, ctx) * rgamma(p.c - p.a, ctx) *
                   rgamma(p.c - p.b, ctx);
    return {Complex(v.with_prec(ctx.bits())), 0, F21Region::CutLimit};
}

F21Result evaluate(const HypParams &p, const Complex &z_in, const PrecisionContext &ctx, int depth)
{
    const Complex z = z_in.with_prec(ctx.bits());
    if (z.is_real() && z.re() >= 1) {
        if (z.re() == 1) {
            return at_one(p, ctx);
        }
        F21Result r = connection(p, z, ctx, depth);
        r.region = F21Region::CutLimit;
        return r;
    }
    const double r = abs(z).to_double();
    if (r <= kDirectSeriesRadius) {
        return f21_series(p, z, ctx);
    }

    enum class Route { Direct, Pfaff, Connection, NearOne };
    Route best = Route::Direct;
    double best_rho = r < 1.0 ? r : INFINITY;
    const Complex pz = z / (z - 1);
    const double rho_pfaff = abs(pz).to_double();
    if (rho_pfaff < best_rho) {
        best = Route::Pfaff;
        best_rho = rho_pfaff;
    }
    if (!z.is_real()) {
        const Complex inv = 1 / z;
        const double rho_inv = abs(inv).to_double();
        double rho_second = abs(1 - inv).to_double();
        // The second series sits near 1 for large |z|; its own expansion
        // about 1 runs in powers of 1/z when that route is open to it.
        if (!near_nonpositive_integer(p.c - p.a) && !near_nonpositive_integer(1 - p.a)) {
            rho_second = std::min(rho_second, rho_inv);
        }
        const double rho_conn = std::max(rho_inv, rho_second);
        if (rho_conn < best_rho) {
            best = Route::Connection;
            best_rho = rho_conn;
        }
    }
    const bool a_or_b_polynomial = near_nonpositive_integer(p.a) || near_nonpositive_integer(p.b);
    if (!a_or_b_polynomial) {
        const double rho_one = abs(1 - z).to_double();
        if (rho_one < best_rho) {
            best = Route::NearOne;
            best_rho = rho_one;
        }
    }
    // Anything left with ratio above this is re-expanded from a nearer point.
    constexpr double kReexpandAbove = 0.9;
    if (best_rho > kReexpandAbove && r < 1.3 && !z.is_real()) {
        const Complex z0 = z * Real::from_double(0.7 / r, 64);
        const double reach = abs(z - z0).to_double() / std::min(0.7, abs(1 - z0).to_double());
        if (reach < best_rho) {
            return reexpand(p, z, z0, ctx, depth);
        }
    }
    if (best_rho >= 1.0) {
        // Only the neighbourhood of z = 1 is left; the connection formula
        // still applies for |z| > 1 and recurses on arguments closer to 0.
        if (r > 1.0 && !z.is_real()) {
            return connection(p, z, ctx, depth);
        }
        throw Error(ErrorKind::Convergence, "no convergent 2F1 expansion at this z");
    }
    switch (best) {
    case Route::Direct:
        return f21_series(p, z, ctx);
    case Route::Pfaff: {
        // F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1))
        const F21Result f = f21_series(HypParams(p.a, p.c - p.b, p.c), pz, ctx);
        return {pow(1 - z, -p.a) * f.value, f.terms_used, F21Region::LinearTransform};
    }
    case Route::Connection:
        return connection(p, z, ctx, depth);
    case Route::NearOne:
        return near_one(p, z, ctx, depth);
    }
    return connection(p, z, ctx, depth);
}

} // namespace

F21Result f21(const HypParams &p, const Complex &z, const PrecisionContext &ctx)
{
    return evaluate(p, z, ctx, 0);
}

F21Result linear_transform(const HypParams &p, const Complex &z_in, const PrecisionContext &ctx)
{
    const Complex z = z_in.with_prec(ctx.bits());
    if (z.is_real() && z.re() <= 1) {
        throw Error(ErrorKind::Domain, "connection formula needs 0 < |arg(1-z)| < pi or real z > 1");
    }
    const Complex inv = 1 / z;
    if (abs(inv) >= 1 && abs(1 - inv) >= 1) {
        throw Error(ErrorKind::UncoveredRegion, "neither 1/z nor 1-1/z lies in the unit disk");
    }
    F21Result r = connection(p, z, ctx, 0);
    if (z.is_real()) {
        r.region = F21Region::CutLimit;
    }
    return r;
}

Complex lambda_r(unsigned r, const Complex &z, const PrecisionContext &ctx)
{
    if (r < 2) {
        throw Error(ErrorKind::InvalidArgument, "lambda_r needs r >= 2");
    }
    const mp::Bits bits = ctx.bits();
    const long rr = static_cast<long>(r);
    return f21(HypParams(Real::ratio(1, rr, bits), Real::ratio(rr - 1, rr, bits), Real(1, bits)), z, ctx)
        .value;
}

Complex branch_jump(const HypParams &p, const Real &x_in, const PrecisionContext &ctx)
{
    const mp::Bits bits = ctx.bits();
    const Real x = x_in.with_prec(bits);
    if (x <= 1) {
        throw Error(ErrorKind::Domain, "branch jump is defined on the cut x > 1");
    }
    const Real &a = p.a;
    const Real &b = p.b;
    const Real &c = p.c;
    const Real cab1 = c - a - b + 1;
    if (near_nonpositive_integer(cab1)) {
        throw Error(ErrorKind::NonGeneric, "branch jump degenerates: c-a-b+1 is a non-positive integer");
    }
    // 2 pi i Gamma(c) / (Gamma(a) Gamma(b) Gamma(c-a-b+1)) (1-x)^{c-a-b} F(c-a, c-b; c-a-b+1; 1-x)
    const Real k = mp::pi(bits) * 2 * gamma_signed(c, ctx) * rgamma(a, ctx) * rgamma(b, ctx) * rgamma(cab1, ctx);
    const Complex one_minus(1 - x);
    const Complex f = f21(HypParams(c - a, c - b, cab1), one_minus, ctx).value;
    const Complex v = pow(one_minus, c - a - b) * f * k;
    return {-v.im(), v.re()};
}

} // namespace jinv
