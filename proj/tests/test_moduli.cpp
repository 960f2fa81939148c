#include "support.hpp"

#include "moduli.hpp"

#include <cmath>

using namespace jinv;
using namespace support;
using mp::Complex;
using mp::Real;

namespace {

Complex polar(double r, double theta, const PrecisionContext &ctx)
{
    return Complex::polar(Real::from_double(r, ctx.bits()), Real::from_double(theta, ctx.bits()));
}

// (from_scaled_disk(C_i(t)) + 1)/2 or from_scaled_disk(C_rho(t)).
HalfPlanePoint raw_tau(PointKind kind, const Complex &t, const PrecisionContext &ctx)
{
    const EllipticPoint ep = make_point(kind, ctx);
    const CValue cv = c_value(kind, t, ctx);
    Complex tau = from_scaled_disk(ep, cv.value).tau();
    if (kind == PointKind::I) {
        tau = (tau + 1) / 2;
    }
    return HalfPlanePoint(tau);
}

HalfPlanePoint berndt_tau(PointKind kind, const Complex &t, const PrecisionContext &ctx)
{
    if (kind == PointKind::I) {
        return berndt_tau_sig4(1 - 1 / (t * t * 4), ctx);
    }
    return berndt_tau_sig6(1 / t, ctx);
}

Real two_pi_omega_sq(PointKind kind, const PrecisionContext &ctx)
{
    const Real omega = omega_period(kind, ctx);
    return mp::pi(ctx.bits()) * 2 * omega * omega;
}

} // namespace

TEST_CASE("disk maps at the elliptic points")
{
    const PrecisionContext ctx = digits(40);
    const EllipticPoint i = make_point(PointKind::I, ctx);
    const EllipticPoint rho = make_point(PointKind::Rho, ctx);
    CHECK(abs(to_disk(i, HalfPlanePoint(i.tau_star)).w()) < ctx.tol());
    CHECK(abs(to_disk(rho, HalfPlanePoint(rho.tau_star)).w()) < ctx.tol());
    CHECK(rel(to_disk(i, HalfPlanePoint(cx("2i", ctx))).w(), Complex(Real::ratio(1, 3, ctx.bits()))) < ctx.tol());
    CHECK(rel(from_disk(i, DiskPoint(Complex(Real::ratio(1, 3, ctx.bits())))).tau(), cx("2i", ctx)) < ctx.tol());
    CHECK(rel(from_disk(i, DiskPoint(Complex(ctx.bits()))).tau(), i.tau_star) < ctx.tol());
    CHECK(rel(from_disk(rho, DiskPoint(Complex(ctx.bits()))).tau(), rho.tau_star) < ctx.tol());
    CHECK(rel(from_scaled_disk(i, Complex(ctx.bits())).tau(), i.tau_star) < ctx.tol());
    CHECK_THROWS_AS(DiskPoint(cx("0.6+0.8i", ctx)), Error);
    CHECK_THROWS_AS(from_scaled_disk(i, Complex(two_pi_omega_sq(PointKind::I, ctx))), Error);

    for (int k = 0; k < 50; ++k) {
        const Complex tau(Real::from_double(uniform(-3, 3), ctx.bits()), Real::from_double(uniform(0.05, 4), ctx.bits()));
        for (const EllipticPoint *p : {&i, &rho}) {
            const DiskPoint w = to_disk(*p, HalfPlanePoint(tau));
            CHECK(abs(w.w()) < 1);
            CHECK(rel(from_disk(*p, w).tau(), tau) < ctx.tol());
        }
    }
}

TEST_CASE("C values against frozen oracle values")
{
    const PrecisionContext ctx = digits(50);
    const Real tol = tenth(38, ctx);
    // t0 = i sqrt(5 sqrt 2 - 1) / (4 sqrt 2)
    const Complex t1 = cx("0.4355695915933481476938111581647220468671i", ctx);
    CHECK(rel(c_i(t1, ctx).value, cx("0.3754768771037480181870955221198945373757i", ctx)) < tol);
    const Complex t2 = cx("-0.7654593540465990319930593651191948853443", ctx);
    CHECK(rel(c_rho(t2, ctx).value, cx("0.5386978662112950643369302121751469280839", ctx)) < tol);
    const Complex t3 = cx("-0.7914469423867109286936365163999736166961", ctx);
    CHECK(rel(c_rho(t3, ctx).value, cx("0.8552433274805625318004285450376384546181", ctx)) < tol);

    struct Row {
        PointKind kind;
        const char *t;
        const char *value;
    };
    const Row rows[] = {
        {PointKind::I, "0.3+0.3i", "0.2369534411340423416710111501895618096736+0.3295452842992625302859974945432789125123i"},
        {PointKind::I, "-0.2+0.35i", "-0.147633884113984916286588706096652416125+0.3370790032680269690804340339665567964761i"},
        {PointKind::I, "0.44-0.05i", "0.5698656597546788658186589775147320457203-0.138373584487053197559258502608871238389i"},
        {PointKind::Rho, "0.5+0.4i", "0.08356068728753359026686067341150612178665+0.1969541704719254019771184050985069324265i"},
        {PointKind::Rho, "-0.6-0.3i", "0.09566051955306025359425984315789760941155+0.2004718617322942259421176856982305960806i"},
        {PointKind::Rho, "0.7", "0.2041766321521749005119003224434051216512"},
    };
    for (const Row &row : rows) {
        CAPTURE(row.t);
        CHECK(rel(c_value(row.kind, cx(row.t, ctx), ctx).value, cx(row.value, ctx)) < tol);
    }
    CHECK(c_i(Complex(ctx.bits()), ctx).value.is_zero());
    CHECK(c_rho(Complex(ctx.bits()), ctx).value.is_zero());
}

TEST_CASE("C series coefficients by series division")
{
    const PrecisionContext ctx = digits(40);
    const auto ci = c_series_coefficients(PointKind::I, 8, ctx);
    const char *expected_i[] = {"0", "1", "0", "1", "0", "2.1333333333333333333333333333333333333333", "0",
                                "5.6666666666666666666666666666666666666667"};
    for (std::size_t k = 0; k < 8; ++k) {
        CAPTURE(k);
        CHECK(rel(Complex(ci[k]), cx(expected_i[k], ctx)) < tenth(38, ctx));
    }
    CHECK(rel(Complex(ci[5]), Complex(Real(32, ctx.bits()) / 15)) < ctx.tol());
    const auto cr = c_series_coefficients(PointKind::Rho, 9, ctx);
    CHECK(cr[2] == Real::ratio(1, 2, ctx.bits()));
    CHECK(rel(Complex(cr[5]), Complex(Real(-1, ctx.bits()) / 3)) < ctx.tol());
    for (std::size_t k : {0U, 1U, 3U, 4U, 6U, 7U}) {
        CAPTURE(k);
        CHECK(cr[k].is_zero());
    }

    // The truncated series approaches C near the origin.
    const Complex t = cx("0.01+0.02i", ctx);
    Complex sum(ctx.bits());
    Complex power(Real(1, ctx.bits()));
    const auto many = c_series_coefficients(PointKind::I, 30, ctx);
    for (const Real &c : many) {
        sum += power * c;
        power *= t;
    }
    CHECK(rel(sum, c_i(t, ctx).value) < tenth(35, ctx));
}

TEST_CASE("parity of the C functions")
{
    const PrecisionContext ctx = digits(40);
    const Complex omega = Complex::polar(Real(1, ctx.bits()), mp::pi(ctx.bits()) * 2 / 3);
    for (int k = 0; k < 20; ++k) {
        const Complex t = polar(uniform(0.01, 0.45), uniform(-M_PI, M_PI), ctx);
        CHECK(rel(c_i(-t, ctx).value, -c_i(t, ctx).value) < ctx.tol());
        // C_rho(t)/t^2 depends on t^3 only.
        const Complex s = polar(uniform(0.01, 0.75), uniform(-M_PI, M_PI), ctx);
        const Complex lhs = c_rho(s * omega, ctx).value / (s * s * omega * omega);
        CHECK(rel(lhs, c_rho(s, ctx).value / (s * s)) < ctx.tol());
    }
}

TEST_CASE("poles and the series domain")
{
    const PrecisionContext ctx = digits(40);
    for (const char *t : {"0.5", "-0.5"}) {
        CAPTURE(t);
        try {
            c_i(cx(t, ctx), ctx);
            FAIL("expected a pole");
        } catch (const Error &e) {
            CHECK(e.kind() == ErrorKind::Pole);
        }
        CHECK_THROWS_AS(rational_j_i(cx(t, ctx)), Error);
    }
    const Real r = make_point(PointKind::Rho, ctx).radius;
    for (int a : {1, 3, 5}) {
        CAPTURE(a);
        const Complex t = Complex::polar(r, mp::pi(ctx.bits()) * a / 3);
        try {
            c_rho(t, ctx);
            FAIL("expected a pole");
        } catch (const Error &e) {
            CHECK(e.kind() == ErrorKind::Pole);
        }
        CHECK_THROWS_AS(rational_j_rho(t), Error);
    }
    try {
        c_i(cx("0.3+0.45i", ctx), ctx);
        FAIL("expected a domain error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::Domain);
    }
    CHECK_THROWS_AS(c_rho(cx("0.8", ctx), ctx), Error);
}

TEST_CASE("rational j-values")
{
    const PrecisionContext ctx = digits(50);
    const mp::Bits b = ctx.bits();
    CHECK(rel(rational_j_i(Complex(b)), cx("1728", ctx)) < ctx.tol());
    CHECK(rational_j_rho(Complex(b)).is_zero());
    // t^2 = -(5 sqrt 2 - 1)/32 gives exactly 8000.
    const Real u = -(mp::sqrt(Real(2, b)) * 5 - 1) / 32;
    const Complex t(Real(b), mp::sqrt(-u));
    CHECK(rel(rational_j_i(t), cx("8000", ctx)) < ctx.tol());
    CHECK(rel(rational_j_rho(cx("-0.7654593540465990319930593651191948853443", ctx)), cx("-3375", ctx)) <
          tenth(36, ctx));
    CHECK(rel(rational_j_rho(cx("-0.7914469423867109286936365163999736166961", ctx)), cx("-50000", ctx)) <
          tenth(35, ctx));
}

TEST_CASE("signature 4 and 6 parameterizations")
{
    const PrecisionContext ctx = digits(50);
    const mp::Bits b = ctx.bits();
    const HalfPlanePoint half = berndt_tau_sig4(Complex(Real::ratio(1, 2, b)), ctx);
    CHECK(rel(half.tau(), Complex(Real(b), 1 / mp::sqrt(Real(2, b)))) < ctx.tol());
    CHECK(rel(berndt_j_sig4(Complex(Real::ratio(1, 2, b))), cx("8000", ctx)) < ctx.tol());
    const HalfPlanePoint at_i = berndt_tau_sig6(cx("-1", ctx), ctx);
    CHECK(rel(at_i.tau(), cx("i", ctx)) < ctx.tol());
    CHECK(rel(berndt_j_sig6(cx("-1", ctx)), cx("1728", ctx)) < ctx.tol());
    CHECK_THROWS_AS(berndt_tau_sig4(cx("0", ctx), ctx), Error);
    CHECK_THROWS_AS(berndt_tau_sig4(cx("1", ctx), ctx), Error);
    CHECK_THROWS_AS(berndt_tau_sig6(cx("0", ctx), ctx), Error);

    for (int k = 0; k < 10; ++k) {
        const Complex g(Real::from_double(uniform(0.02, 0.98), b));
        CAPTURE(g);
        const Complex j = berndt_j_sig4(g);
        CHECK(rel(j_from_tau(berndt_tau_sig4(g, ctx), ctx), j) < ctx.tol() * 10);
    }
    for (int k = 0; k < 10; ++k) {
        // beta = -g^3/2 in (0, 1)
        const Complex g(Real::from_double(-uniform(0.3, 1.2), b));
        CAPTURE(g);
        const Complex j = berndt_j_sig6(g);
        CHECK(rel(j_from_tau(berndt_tau_sig6(g, ctx), ctx), j) < ctx.tol() * 10);
    }
}

TEST_CASE("sector maps relate the C route to the parameterizations")
{
    const PrecisionContext ctx = digits(50);
    const double pi = M_PI;
    // Interior angles of every sector of both tables.
    const double angles_i[] = {pi / 4, 3 * pi / 4, -pi / 4, -3 * pi / 4};
    const double angles_rho[] = {pi / 6, pi / 2, 5 * pi / 6, -pi / 6, -pi / 2, -5 * pi / 6};
    for (double a : angles_i) {
        for (double r : {0.2, 0.4}) {
            CAPTURE(a);
            const Complex t = polar(r, a, ctx);
            const Complex lhs = raw_tau(PointKind::I, t, ctx).tau();
            const Complex rhs = arg_table_map(PointKind::I, t).apply(berndt_tau(PointKind::I, t, ctx).tau());
            CHECK(rel(lhs, rhs) < ctx.tol());
        }
    }
    for (double a : angles_rho) {
        for (double r : {0.3, 0.7}) {
            CAPTURE(a);
            const Complex t = polar(r, a, ctx);
            const Complex lhs = raw_tau(PointKind::Rho, t, ctx).tau();
            const Complex rhs = arg_table_map(PointKind::Rho, t).apply(berndt_tau(PointKind::Rho, t, ctx).tau());
            CHECK(rel(lhs, rhs) < ctx.tol());
        }
    }
    CHECK_THROWS_AS(arg_table_map(PointKind::I, Complex(ctx.bits())), Error);

    // Both sides reduce to the same point of the fundamental domain.
    const Complex t = polar(0.35, 2.5, ctx);
    const Complex a = reduce_to_fundamental_domain(raw_tau(PointKind::I, t, ctx)).point.tau();
    const Complex b = reduce_to_fundamental_domain(berndt_tau(PointKind::I, t, ctx)).point.tau();
    CHECK(rel(a, b) < ctx.tol());
}

TEST_CASE("j of the C route equals the rational forms")
{
    const PrecisionContext ctx = digits(50);
    for (int k = 0; k < 20; ++k) {
        // Five samples per quadrant.
        const double a = -M_PI + (k % 4 + uniform(0.02, 0.98)) * M_PI / 2;
        const Complex t = polar(uniform(0.02, 0.45), a, ctx);
        CAPTURE(t);
        const Complex expected = rational_j_i(t);
        CHECK(abs(j_from_tau(raw_tau(PointKind::I, t, ctx), ctx) - expected) < ctx.tol() * (1 + abs(expected)));
    }
    for (int k = 0; k < 20; ++k) {
        const double a = -M_PI + (k % 6 + uniform(0.02, 0.98)) * M_PI / 3;
        const Complex t = polar(uniform(0.02, 0.75), a, ctx);
        CAPTURE(t);
        const Complex expected = rational_j_rho(t);
        CHECK(abs(j_from_tau(raw_tau(PointKind::Rho, t, ctx), ctx) - expected) < ctx.tol() * (1 + abs(expected)));
    }
}

TEST_CASE("C values stay inside the scaled disk")
{
    const PrecisionContext ctx = digits(30);
    for (PointKind kind : {PointKind::I, PointKind::Rho}) {
        const Real bound = two_pi_omega_sq(kind, ctx);
        const double radius = make_point(kind, ctx).radius.to_double();
        for (int k = 0; k < 40; ++k) {
            const Complex t = polar(uniform(0.0, 0.995) * radius, uniform(-M_PI, M_PI), ctx);
            CHECK(abs(c_value(kind, t, ctx).value) < bound);
        }
    }
}

TEST_CASE("truncated series mode sums a fixed number of terms")
{
    const PrecisionContext ctx = digits(40);
    SeriesMode mode;
    mode.truncate_terms = 3;
    const Complex t = cx("0.1", ctx);
    const CValue cv = c_i(t, ctx, mode);
    CHECK(cv.terms_used == 3);
    CHECK(rel(cv.value, c_i(t, ctx).value) < tenth(4, ctx));
    CHECK(rel(cv.value, c_i(t, ctx).value) > tenth(20, ctx));
}
