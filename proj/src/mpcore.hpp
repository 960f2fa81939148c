#pragma once

// Arbitrary-precision scalars on top of MPFR, the positive-real Gamma
// function and the period constants of the two elliptic points.

#include <mpfr.h>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace jinv {

enum class ErrorKind {
    Domain,
    Pole,
    Convergence,
    NonGeneric,
    UncoveredRegion,
    Inadmissible,
    Residual,
    PrecisionOverflow,
    Parse,
    InvalidArgument,
};

const char *to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), m_kind(kind) {}
    ErrorKind kind() const noexcept { return m_kind; }

private:
    ErrorKind m_kind;
};

namespace mp {

using Bits = mpfr_prec_t;

/// Owning MPFR value. Binary operations produce a result at the larger of
/// the two operand precisions; every function that allocates takes an
/// explicit precision, there is no ambient default.
class Real {
public:
    explicit Real(Bits prec = 64);
    Real(long value, Bits prec);
    static Real from_double(double value, Bits prec);
    static Real ratio(long num, long den, Bits prec);
    /// Decimal (optionally scientific) literal. Throws Error(Parse).
    static Real parse(std::string_view text, Bits prec);

    Real(const Real &other);
    Real(Real &&other) noexcept;
    Real &operator=(const Real &other);
    Real &operator=(Real &&other) noexcept;
    ~Real();

    Bits prec() const { return mpfr_get_prec(m_value); }
    mpfr_srcptr get() const { return m_value; }
    mpfr_ptr get() { return m_value; }

    bool is_zero() const { return mpfr_zero_p(m_value) != 0; }
    bool is_finite() const { return mpfr_number_p(m_value) != 0; }
    bool is_integer() const { return mpfr_integer_p(m_value) != 0; }
    int sign() const { return mpfr_sgn(m_value); }
    double to_double() const { return mpfr_get_d(m_value, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(m_value, MPFR_RNDN); }

    /// Copy rounded to another precision.
    Real with_prec(Bits prec) const;

    Real operator-() const;
    Real &operator+=(const Real &rhs);
    Real &operator-=(const Real &rhs);
    Real &operator*=(const Real &rhs);
    Real &operator/=(const Real &rhs);
    Real &operator*=(long rhs);
    Real &operator/=(long rhs);

private:
    mpfr_t m_value;
};

Real operator+(const Real &a, const Real &b);
Real operator-(const Real &a, const Real &b);
Real operator*(const Real &a, const Real &b);
Real operator/(const Real &a, const Real &b);
Real operator+(const Real &a, long b);
Real operator-(const Real &a, long b);
Real operator*(const Real &a, long b);
Real operator/(const Real &a, long b);
Real operator+(long a, const Real &b);
Real operator-(long a, const Real &b);
Real operator*(long a, const Real &b);
Real operator/(long a, const Real &b);

int compare(const Real &a, const Real &b);
int compare(const Real &a, long b);
inline bool operator<(const Real &a, const Real &b) { return compare(a, b) < 0; }
inline bool operator>(const Real &a, const Real &b) { return compare(a, b) > 0; }
inline bool operator<=(const Real &a, const Real &b) { return compare(a, b) <= 0; }
inline bool operator>=(const Real &a, const Real &b) { return compare(a, b) >= 0; }
inline bool operator==(const Real &a, const Real &b) { return compare(a, b) == 0; }
inline bool operator<(const Real &a, long b) { return compare(a, b) < 0; }
inline bool operator>(const Real &a, long b) { return compare(a, b) > 0; }
inline bool operator<=(const Real &a, long b) { return compare(a, b) <= 0; }
inline bool operator>=(const Real &a, long b) { return compare(a, b) >= 0; }
inline bool operator==(const Real &a, long b) { return compare(a, b) == 0; }

Real abs(const Real &x);
Real sqrt(const Real &x);
Real cbrt(const Real &x);
Real exp(const Real &x);
Real log(const Real &x);
Real log10(const Real &x);
Real sin(const Real &x);
Real cos(const Real &x);
Real atan2(const Real &y, const Real &x);
Real pow(const Real &base, const Real &exponent);
Real pow(const Real &base, long exponent);
Real floor(const Real &x);
Real ceil(const Real &x);
Real pi(Bits prec);
/// 10^k at the given precision.
Real pow10(long k, Bits prec);
const Real &min(const Real &a, const Real &b);
const Real &max(const Real &a, const Real &b);

class Complex {
public:
    explicit Complex(Bits prec = 64) : m_re(prec), m_im(prec) {}
    Complex(Real re, Real im) : m_re(std::move(re)), m_im(std::move(im)) {}
    explicit Complex(Real re);
    Complex(long re, long im, Bits prec) : m_re(re, prec), m_im(im, prec) {}

    static Complex i(Bits prec) { return Complex(0, 1, prec); }
    /// Polar form r e^{i theta}.
    static Complex polar(const Real &r, const Real &theta);

    const Real &re() const { return m_re; }
    const Real &im() const { return m_im; }
    Real &re() { return m_re; }
    Real &im() { return m_im; }
    Bits prec() const { return std::max(m_re.prec(), m_im.prec()); }

    bool is_zero() const { return m_re.is_zero() && m_im.is_zero(); }
    bool is_real() const { return m_im.is_zero(); }
    bool is_finite() const { return m_re.is_finite() && m_im.is_finite(); }
    Complex with_prec(Bits prec) const { return {m_re.with_prec(prec), m_im.with_prec(prec)}; }

    Complex operator-() const { return {-m_re, -m_im}; }
    Complex &operator+=(const Complex &rhs);
    Complex &operator-=(const Complex &rhs);
    Complex &operator*=(const Complex &rhs);
    Complex &operator/=(const Complex &rhs);
    Complex &operator*=(const Real &rhs);
    Complex &operator/=(const Real &rhs);

private:
    Real m_re;
    Real m_im;
};

Complex operator+(const Complex &a, const Complex &b);
Complex operator-(const Complex &a, const Complex &b);
Complex operator*(const Complex &a, const Complex &b);
Complex operator/(const Complex &a, const Complex &b);
Complex operator+(const Complex &a, const Real &b);
Complex operator-(const Complex &a, const Real &b);
Complex operator*(const Complex &a, const Real &b);
Complex operator/(const Complex &a, const Real &b);
Complex operator*(const Real &a, const Complex &b);
Complex operator+(const Complex &a, long b);
Complex operator-(const Complex &a, long b);
Complex operator*(const Complex &a, long b);
Complex operator/(const Complex &a, long b);
Complex operator-(long a, const Complex &b);
Complex operator+(long a, const Complex &b);
Complex operator*(long a, const Complex &b);
Complex operator/(long a, const Complex &b);
Complex operator/(const Real &a, const Complex &b);

Real abs(const Complex &z);
Real norm(const Complex &z);
/// Principal argument in (-pi, pi]. A negative real with a zero imaginary
/// part of either sign has argument +pi.
Real arg(const Complex &z);
Complex conj(const Complex &z);
Complex exp(const Complex &z);
/// Principal logarithm. Throws Error(Domain) at zero.
Complex log(const Complex &z);
/// Principal power exp(w Log z); 0^w = 0 for Re w > 0.
Complex pow(const Complex &z, const Complex &w);
Complex pow(const Complex &z, const Real &w);
Complex pow(const Complex &z, long n);
Complex sqrt(const Complex &z);

/// Round-half-even decimal with `digits` significant digits.
std::string to_string(const Real &x, unsigned digits);
/// "a+bi" / "a-bi"; the imaginary part is omitted when it is exactly zero.
std::string to_string(const Complex &z, unsigned digits);
/// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i" with optional exponents.
Complex parse_complex(std::string_view text, Bits prec);

} // namespace mp

/// Working precision and series budget shared by every numeric operation.
struct PrecisionContext {
    unsigned digits = 50;
    unsigned guard_digits = 10;
    std::size_t max_terms = 20000;

    /// Validated constructor. Throws Error(InvalidArgument).
    static PrecisionContext make(unsigned digits, unsigned guard_digits = 10,
                                 std::size_t max_terms = 20000);
    void validate() const;

    /// Binary precision used for intermediate values.
    mp::Bits bits() const;
    /// 10^(guard_digits - digits)
    mp::Real tol() const;
    /// 10^(-digits); series are summed until their tail is below this.
    mp::Real epsilon() const;
    PrecisionContext with_extra_digits(unsigned extra) const;
};

/// Gamma on the positive reals (Spouge), relative error below tol.
mp::Real gamma_real(const mp::Real &x, const PrecisionContext &ctx);
/// Gamma on the real line minus the non-positive integers (reflection for
/// negative arguments). Throws Error(NonGeneric) at a pole.
mp::Real gamma_signed(const mp::Real &x, const PrecisionContext &ctx);
/// 1/Gamma(x), zero at the non-positive integers.
mp::Real rgamma(const mp::Real &x, const PrecisionContext &ctx);

enum class PointKind { I, Rho };

const char *to_string(PointKind kind) noexcept;

struct EllipticPoint {
    PointKind kind;
    mp::Complex tau_star;
    mp::Real omega;
    mp::Real radius;
};

/// Chowla-Selberg period of the elliptic point.
mp::Real omega_period(PointKind kind, const PrecisionContext &ctx);
EllipticPoint make_point(PointKind kind, const PrecisionContext &ctx);

} // namespace jinv
