#include "mpcore.hpp"

#include <cctype>
#include <cmath>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace jinv {

const char *to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::Convergence: return "convergence";
    case ErrorKind::NonGeneric: return "non-generic-parameters";
    case ErrorKind::UncoveredRegion: return "uncovered-region";
    case ErrorKind::Inadmissible: return "inadmissible-target";
    case ErrorKind::Residual: return "residual";
    case ErrorKind::PrecisionOverflow: return "precision-overflow";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    }
    return "unknown";
}

const char *to_string(PointKind kind) noexcept
{
    return kind == PointKind::I ? "i" : "rho";
}

namespace mp {

// ---------------------------------------------------------------------------
// Real

Real::Real(Bits prec)
{
    mpfr_init2(m_value, prec);
    mpfr_set_zero(m_value, 1);
}

Real::Real(long value, Bits prec)
{
    mpfr_init2(m_value, prec);
    mpfr_set_si(m_value, value, MPFR_RNDN);
}

Real Real::from_double(double value, Bits prec)
{
    Real r(prec);
    mpfr_set_d(r.m_value, value, MPFR_RNDN);
    return r;
}

Real Real::ratio(long num, long den, Bits prec)
{
    Real r(num, prec);
    mpfr_div_si(r.m_value, r.m_value, den, MPFR_RNDN);
    return r;
}

namespace {

// sign? digits [. digits] [(e|E) sign? digits], at least one mantissa digit
bool is_decimal_literal(std::string_view s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        ++i;
    }
    std::size_t mantissa_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        ++i;
        ++mantissa_digits;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
            ++mantissa_digits;
        }
    }
    if (mantissa_digits == 0) {
        return false;
    }
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            ++i;
        }
        std::size_t exp_digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
            ++exp_digits;
        }
        if (exp_digits == 0) {
            return false;
        }
    }
    return i == s.size();
}

} // namespace

Real Real::parse(std::string_view text, Bits prec)
{
    if (!is_decimal_literal(text)) {
        throw Error(ErrorKind::Parse, "not a decimal number: '" + std::string(text) + "'");
    }
    Real r(prec);
    const std::string owned(text);
    if (mpfr_set_str(r.m_value, owned.c_str(), 10, MPFR_RNDN) != 0 || !r.is_finite()) {
        throw Error(ErrorKind::Parse, "not a decimal number: '" + owned + "'");
    }
    return r;
}

Real::Real(const Real &other)
{
    mpfr_init2(m_value, other.prec());
    mpfr_set(m_value, other.m_value, MPFR_RNDN);
}

Real::Real(Real &&other) noexcept
{
    std::memcpy(m_value, other.m_value, sizeof(mpfr_t));
    other.m_value->_mpfr_d = nullptr;
}

Real &Real::operator=(const Real &other)
{
    if (this != &other) {
        if (m_value->_mpfr_d == nullptr) {
            mpfr_init2(m_value, other.prec());
        } else {
            mpfr_set_prec(m_value, other.prec());
        }
        mpfr_set(m_value, other.m_value, MPFR_RNDN);
    }
    return *this;
}

Real &Real::operator=(Real &&other) noexcept
{
    if (this != &other) {
        mpfr_t tmp;
        std::memcpy(tmp, m_value, sizeof(mpfr_t));
        std::memcpy(m_value, other.m_value, sizeof(mpfr_t));
        std::memcpy(other.m_value, tmp, sizeof(mpfr_t));
    }
    return *this;
}

Real::~Real()
{
    if (m_value->_mpfr_d != nullptr) {
        mpfr_clear(m_value);
    }
}

Real Real::with_prec(Bits prec) const
{
    Real r(prec);
    mpfr_set(r.m_value, m_value, MPFR_RNDN);
    return r;
}

Real Real::operator-() const
{
    Real r(prec());
    mpfr_neg(r.m_value, m_value, MPFR_RNDN);
    return r;
}

namespace {

void widen(Real &target, const Real &other)
{
    if (other.prec() > target.prec()) {
        mpfr_prec_round(target.get(), other.prec(), MPFR_RNDN);
    }
}

} // namespace

Real &Real::operator+=(const Real &rhs)
{
    widen(*this, rhs);
    mpfr_add(m_value, m_value, rhs.m_value, MPFR_RNDN);
    return *this;
}

Real &Real::operator-=(const Real &rhs)
{
    widen(*this, rhs);
    mpfr_sub(m_value, m_value, rhs.m_value, MPFR_RNDN);
    return *this;
}

Real &Real::operator*=(const Real &rhs)
{
    widen(*this, rhs);
    mpfr_mul(m_value, m_value, rhs.m_value, MPFR_RNDN);
    return *this;
}

Real &Real::operator/=(const Real &rhs)
{
    widen(*this, rhs);
    mpfr_div(m_value, m_value, rhs.m_value, MPFR_RNDN);
    return *this;
}

Real &Real::operator*=(long rhs)
{
    mpfr_mul_si(m_value, m_value, rhs, MPFR_RNDN);
    return *this;
}

Real &Real::operator/=(long rhs)
{
    mpfr_div_si(m_value, m_value, rhs, MPFR_RNDN);
    return *this;
}

namespace {

Bits joint(const Real &a, const Real &b)
{
    return std::max(a.prec(), b.prec());
}

} // namespace

Real operator+(const Real &a, const Real &b)
{
    Real r(joint(a, b));
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator-(const Real &a, const Real &b)
{
    Real r(joint(a, b));
    mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator*(const Real &a, const Real &b)
{
    Real r(joint(a, b));
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator/(const Real &a, const Real &b)
{
    Real r(joint(a, b));
    mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator+(const Real &a, long b)
{
    Real r(a.prec());
    mpfr_add_si(r.get(), a.get(), b, MPFR_RNDN);
    return r;
}

Real operator-(const Real &a, long b)
{
    Real r(a.prec());
    mpfr_sub_si(r.get(), a.get(), b, MPFR_RNDN);
    return r;
}

Real operator*(const Real &a, long b)
{
    Real r(a.prec());
    mpfr_mul_si(r.get(), a.get(), b, MPFR_RNDN);
    return r;
}

Real operator/(const Real &a, long b)
{
    Real r(a.prec());
    mpfr_div_si(r.get(), a.get(), b, MPFR_RNDN);
    return r;
}

Real operator+(long a, const Real &b) { return b + a; }

Real operator-(long a, const Real &b)
{
    Real r(b.prec());
    mpfr_si_sub(r.get(), a, b.get(), MPFR_RNDN);
    return r;
}

Real operator*(long a, const Real &b) { return b * a; }

Real operator/(long a, const Real &b)
{
    Real r(b.prec());
    mpfr_si_div(r.get(), a, b.get(), MPFR_RNDN);
    return r;
}

int compare(const Real &a, const Real &b) { return mpfr_cmp(a.get(), b.get()); }
int compare(const Real &a, long b) { return mpfr_cmp_si(a.get(), b); }

#define JINV_UNARY(name, fn)                                                                       \
    Real name(const Real &x)                                                                       \
    {                                                                                              \
        Real r(x.prec());                                                                          \
        fn(r.get(), x.get(), MPFR_RNDN);                                                           \
        return r;                                                                                  \
    }

JINV_UNARY(abs, mpfr_abs)
JINV_UNARY(sqrt, mpfr_sqrt)
JINV_UNARY(cbrt, mpfr_cbrt)
JINV_UNARY(exp, mpfr_exp)
JINV_UNARY(log, mpfr_log)
JINV_UNARY(log10, mpfr_log10)
JINV_UNARY(sin, mpfr_sin)
JINV_UNARY(cos, mpfr_cos)

#undef JINV_UNARY

Real atan2(const Real &y, const Real &x)
{
    Real r(joint(y, x));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

Real pow(const Real &base, const Real &exponent)
{
    Real r(joint(base, exponent));
    mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
    return r;
}

Real pow(const Real &base, long exponent)
{
    Real r(base.prec());
    mpfr_pow_si(r.get(), base.get(), exponent, MPFR_RNDN);
    return r;
}

Real floor(const Real &x)
{
    Real r(x.prec());
    mpfr_floor(r.get(), x.get());
    return r;
}

Real ceil(const Real &x)
{
    Real r(x.prec());
    mpfr_ceil(r.get(), x.get());
    return r;
}

Real pi(Bits prec)
{
    Real r(prec);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

Real pow10(long k, Bits prec)
{
    Real r(10, prec);
    mpfr_pow_si(r.get(), r.get(), k, MPFR_RNDN);
    return r;
}

const Real &min(const Real &a, const Real &b) { return b < a ? b : a; }
const Real &max(const Real &a, const Real &b) { return a < b ? b : a; }

// ---------------------------------------------------------------------------
// Complex

Complex::Complex(Real re) : m_re(std::move(re)), m_im(0, m_re.prec()) {}

Complex Complex::polar(const Real &r, const Real &theta)
{
    Real s(theta.prec());
    Real c(theta.prec());
    mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
    return {r * c, r * s};
}

Complex &Complex::operator+=(const Complex &rhs)
{
    m_re += rhs.m_re;
    m_im += rhs.m_im;
    return *this;
}

Complex &Complex::operator-=(const Complex &rhs)
{
    m_re -= rhs.m_re;
    m_im -= rhs.m_im;
    return *this;
}

Complex &Complex::operator*=(const Complex &rhs)
{
    *this = *this * rhs;
    return *this;
}

Complex &Complex::operator/=(const Complex &rhs)
{
    *this = *this / rhs;
    return *this;
}

Complex &Complex::operator*=(const Real &rhs)
{
    m_re *= rhs;
    m_im *= rhs;
    return *this;
}

Complex &Complex::operator/=(const Real &rhs)
{
    m_re /= rhs;
    m_im /= rhs;
    return *this;
}

Complex operator+(const Complex &a, const Complex &b) { return {a.re() + b.re(), a.im() + b.im()}; }
Complex operator-(const Complex &a, const Complex &b) { return {a.re() - b.re(), a.im() - b.im()}; }

Complex operator*(const Complex &a, const Complex &b)
{
    return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}

Complex operator/(const Complex &a, const Complex &b)
{
    if (b.is_zero()) {
        throw Error(ErrorKind::Domain, "complex division by zero");
    }
    const Real den = b.re() * b.re() + b.im() * b.im();
    return {(a.re() * b.re() + a.im() * b.im()) / den, (a.im() * b.re() - a.re() * b.im()) / den};
}

Complex operator+(const Complex &a, const Real &b) { return {a.re() + b, a.im().with_prec(joint(a.im(), b))}; }
Complex operator-(const Complex &a, const Real &b) { return {a.re() - b, a.im().with_prec(joint(a.im(), b))}; }
Complex operator*(const Complex &a, const Real &b) { return {a.re() * b, a.im() * b}; }
Complex operator/(const Complex &a, const Real &b) { return {a.re() / b, a.im() / b}; }
Complex operator*(const Real &a, const Complex &b) { return b * a; }
Complex operator+(const Complex &a, long b) { return {a.re() + b, a.im()}; }
Complex operator-(const Complex &a, long b) { return {a.re() - b, a.im()}; }
Complex operator*(const Complex &a, long b) { return {a.re() * b, a.im() * b}; }
Complex operator/(const Complex &a, long b) { return {a.re() / b, a.im() / b}; }
Complex operator-(long a, const Complex &b) { return {a - b.re(), -b.im()}; }
Complex operator+(long a, const Complex &b) { return b + a; }
Complex operator*(long a, const Complex &b) { return b * a; }
Complex operator/(long a, const Complex &b) { return Complex(a, 0, b.prec()) / b; }
Complex operator/(const Real &a, const Complex &b) { return Complex(a) / b; }

Real abs(const Complex &z)
{
    Real r(z.prec());
    mpfr_hypot(r.get(), z.re().get(), z.im().get(), MPFR_RNDN);
    return r;
}

Real norm(const Complex &z) { return z.re() * z.re() + z.im() * z.im(); }

Real arg(const Complex &z)
{
    if (z.im().is_zero()) {
        return z.re().sign() < 0 ? pi(z.prec()) : Real(z.prec());
    }
    return atan2(z.im(), z.re());
}

Complex conj(const Complex &z) { return {z.re(), -z.im()}; }

Complex exp(const Complex &z)
{
    return Complex::polar(exp(z.re()), z.im());
}

Complex log(const Complex &z)
{
    if (z.is_zero()) {
        throw Error(ErrorKind::Domain, "logarithm of zero");
    }
    return {log(abs(z)), arg(z)};
}

Complex pow(const Complex &z, const Complex &w)
{
    if (z.is_zero()) {
        if (w.re().sign() > 0) {
            return Complex(z.prec());
        }
        throw Error(ErrorKind::Domain, "zero raised to a power with non-positive real part");
    }
    return exp(w * log(z));
}

Complex pow(const Complex &z, const Real &w)
{
    if (z.is_zero()) {
        if (w.sign() > 0) {
            return Complex(std::max(z.prec(), w.prec()));
        }
        throw Error(ErrorKind::Domain, "zero raised to a non-positive power");
    }
    return Complex::polar(pow(abs(z), w), w * arg(z));
}

Complex pow(const Complex &z, long n)
{
    if (n < 0) {
        return 1 / pow(z, -n);
    }
    Complex result(1, 0, z.prec());
    Complex base = z;
    auto e = static_cast<unsigned long>(n);
    while (e != 0) {
        if ((e & 1UL) != 0) {
            result *= base;
        }
        e >>= 1U;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

Complex sqrt(const Complex &z)
{
    if (z.is_zero()) {
        return Complex(z.prec());
    }
    // Stable half-angle form; the branch follows the principal argument.
    const Real r = abs(z);
    Real t = sqrt((r + abs(z.re())) / 2);
    if (z.re().sign() >= 0) {
        return {t, z.im() / (t * 2)};
    }
    const Real u = abs(z.im()) / (t * 2);
    // arg(z) in (pi/2, pi] (upper or on the negative axis) or (-pi, -pi/2).
    if (z.im().sign() < 0) {
        return {u, -t};
    }
    return {u, t};
}

// ---------------------------------------------------------------------------
// Decimal I/O

std::string to_string(const Real &x, unsigned digits)
{
    if (!x.is_finite()) {
        throw Error(ErrorKind::PrecisionOverflow, "value is not finite");
    }
    if (x.is_zero()) {
        return "0";
    }
    mpfr_exp_t e = 0;
    char *raw = mpfr_get_str(nullptr, &e, 10, digits, x.get(), MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    // value = 0.mant * 10^e
    const long sci = static_cast<long>(e) - 1;
    std::string out;
    if (sci >= -5 && sci < static_cast<long>(digits)) {
        if (e <= 0) {
            out = "0." + std::string(static_cast<std::size_t>(-e), '0') + mant;
        } else if (static_cast<std::size_t>(e) >= mant.size()) {
            out = mant + std::string(static_cast<std::size_t>(e) - mant.size(), '0');
        } else {
            out = mant.substr(0, static_cast<std::size_t>(e)) + "." + mant.substr(static_cast<std::size_t>(e));
        }
    } else {
        out = mant.substr(0, 1);
        if (mant.size() > 1) {
            out += "." + mant.substr(1);
        }
        out += "e" + std::to_string(sci);
    }
    return sign + out;
}

std::string to_string(const Complex &z, unsigned digits)
{
    if (z.im().is_zero()) {
        return to_string(z.re(), digits);
    }
    std::string im = to_string(abs(z.im()), digits);
    return to_string(z.re(), digits) + (z.im().sign() < 0 ? "-" : "+") + im + "i";
}

Complex parse_complex(std::string_view text, Bits prec)
{
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s.push_back(ch);
        }
    }
    if (s.empty()) {
        throw Error(ErrorKind::Parse, "empty complex literal");
    }
    if (s.back() != 'i') {
        return Complex(Real::parse(s, prec));
    }
    const std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    const std::string re_text = split == std::string::npos ? std::string("0") : body.substr(0, split);
    const std::string im_text = split == std::string::npos ? body : body.substr(split);
    Real im(prec);
    if (im_text.empty() || im_text == "+") {
        im = Real(1, prec);
    } else if (im_text == "-") {
        im = Real(-1, prec);
    } else {
        im = Real::parse(im_text, prec);
    }
    return {Real::parse(re_text, prec), std::move(im)};
}

} // namespace mp

// ---------------------------------------------------------------------------
// PrecisionContext

PrecisionContext PrecisionContext::make(unsigned digits, unsigned guard_digits, std::size_t max_terms)
{
    PrecisionContext ctx;
    ctx.digits = digits;
    ctx.guard_digits = guard_digits;
    ctx.max_terms = max_terms;
    ctx.validate();
    return ctx;
}

void PrecisionContext::validate() const
{
    if (digits < 15) {
        throw Error(ErrorKind::InvalidArgument, "precision must be at least 15 digits");
    }
    if (guard_digits == 0 || guard_digits >= digits) {
        throw Error(ErrorKind::InvalidArgument, "guard digits must be positive and below the precision");
    }
    if (max_terms == 0) {
        throw Error(ErrorKind::InvalidArgument, "max_terms must be positive");
    }
}

mp::Bits PrecisionContext::bits() const
{
    return static_cast<mp::Bits>(std::ceil(digits * 3.321928094887362)) + 32;
}

mp::Real PrecisionContext::tol() const
{
    return mp::pow10(static_cast<long>(guard_digits) - static_cast<long>(digits), bits());
}

mp::Real PrecisionContext::epsilon() const
{
    return mp::pow10(-static_cast<long>(digits), bits());
}

PrecisionContext PrecisionContext::with_extra_digits(unsigned extra) const
{
    PrecisionContext ctx = *this;
    ctx.digits += extra;
    return ctx;
}

// ---------------------------------------------------------------------------
// Gamma

namespace {

using mp::Real;

// Spouge: Gamma(z+1) = (z+a)^{z+1/2} e^{-(z+a)} [sqrt(2 pi) + sum_k c_k/(z+k)]
// with relative error below a^{-1/2} (2 pi)^{-(a+1/2)} for Re z > 0.
struct SpougeTable {
    long a = 0;
    mp::Bits work = 0;
    Real sqrt_two_pi;
    std::vector<Real> coeffs; // c_1 .. c_{a-1}
};

std::shared_ptr<const SpougeTable> build_spouge(mp::Bits target)
{
    auto table = std::make_shared<SpougeTable>();
    const double log2_two_pi = std::log2(2.0 * M_PI);
    table->a = static_cast<long>(std::ceil(static_cast<double>(target) / log2_two_pi)) + 2;
    const long a = table->a;

    // The c_k alternate in sign and peak far above the sum; carry that many
    // extra bits so the cancellation leaves `target` bits intact.
    double peak = 0.0;
    for (long k = 1; k < a; ++k) {
        const double lg = (static_cast<double>(k) - 0.5) * std::log(static_cast<double>(a - k)) +
                          static_cast<double>(a - k) - std::lgamma(static_cast<double>(k));
        peak = std::max(peak, lg / std::log(2.0));
    }
    table->work = target + static_cast<mp::Bits>(std::ceil(peak)) + 32;
    const mp::Bits w = table->work;

    table->sqrt_two_pi = mp::sqrt(mp::pi(w) * 2);
    table->coeffs.reserve(static_cast<std::size_t>(a - 1));
    Real factorial(1, w); // (k-1)!
    const Real half = Real::ratio(1, 2, w);
    for (long k = 1; k < a; ++k) {
        if (k > 1) {
            factorial *= (k - 1);
        }
        Real base(a - k, w);
        Real c = mp::pow(base, Real(k, w) - half) * mp::exp(base) / factorial;
        if (k % 2 == 0) {
            c = -c;
        }
        table->coeffs.push_back(std::move(c));
    }
    return table;
}

std::shared_ptr<const SpougeTable> spouge_table(mp::Bits target)
{
    static std::mutex mutex;
    static std::map<mp::Bits, std::shared_ptr<const SpougeTable>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto &slot = cache[target];
    if (!slot) {
        slot = build_spouge(target);
    }
    return slot;
}

// Gamma(z+1) for z >= 0 at the table's working precision.
Real spouge_gamma_shifted(const SpougeTable &table, const Real &z_in)
{
    const Real z = z_in.with_prec(table.work);
    Real sum = table.sqrt_two_pi;
    for (std::size_t k = 0; k < table.coeffs.size(); ++k) {
        sum += table.coeffs[k] / (z + static_cast<long>(k + 1));
    }
    const Real za = z + table.a;
    return mp::pow(za, z + Real::ratio(1, 2, table.work)) * mp::exp(-za) * sum;
}

} // namespace

mp::Real gamma_real(const mp::Real &x, const PrecisionContext &ctx)
{
    if (x.sign() <= 0) {
        throw Error(ErrorKind::Domain, "gamma_real requires a positive argument");
    }
    const mp::Bits out = ctx.bits();
    const auto table = spouge_table(out + 16);
    if (x < 1) {
        const Real shifted = spouge_gamma_shifted(*table, x);
        return (shifted / x.with_prec(table->work)).with_prec(out);
    }
    return spouge_gamma_shifted(*table, x.with_prec(table->work) - 1).with_prec(out);
}

mp::Real gamma_signed(const mp::Real &x, const PrecisionContext &ctx)
{
    if (x.sign() > 0) {
        return gamma_real(x, ctx);
    }
    if (x.is_integer()) {
        throw Error(ErrorKind::NonGeneric, "gamma evaluated at a non-positive integer");
    }
    // Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
    const mp::Bits b = ctx.bits() + 16;
    const Real px = mp::pi(b) * x.with_prec(b);
    const Real g = gamma_real(1 - x.with_prec(b), ctx.with_extra_digits(5));
    return (mp::pi(b) / (mp::sin(px) * g)).with_prec(ctx.bits());
}

mp::Real rgamma(const mp::Real &x, const PrecisionContext &ctx)
{
    if (x.sign() <= 0 && x.is_integer()) {
        return Real(ctx.bits());
    }
    return 1 / gamma_signed(x, ctx);
}

mp::Real omega_period(PointKind kind, const PrecisionContext &ctx)
{
    const mp::Bits b = ctx.bits();
    const Real pi = mp::pi(b);
    if (kind == PointKind::I) {
        const Real g14 = gamma_real(Real::ratio(1, 4, b), ctx);
        const Real g34 = gamma_real(Real::ratio(3, 4, b), ctx);
        return g14 / (mp::sqrt(pi * 8) * g34);
    }
    const Real g13 = gamma_real(Real::ratio(1, 3, b), ctx);
    const Real g23 = gamma_real(Real::ratio(2, 3, b), ctx);
    return mp::pow(g13 / g23, Real::ratio(3, 2, b)) / mp::sqrt(pi * 6);
}

EllipticPoint make_point(PointKind kind, const PrecisionContext &ctx)
{
    const mp::Bits b = ctx.bits();
    if (kind == PointKind::I) {
        return {kind, mp::Complex::i(b), omega_period(kind, ctx), Real::ratio(1, 2, b)};
    }
    mp::Complex rho(Real::ratio(1, 2, b), mp::sqrt(Real(3, b)) / 2);
    return {kind, std::move(rho), omega_period(kind, ctx), 1 / mp::cbrt(Real(2, b))};
}

} // namespace jinv
