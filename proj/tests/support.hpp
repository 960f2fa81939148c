#pragma once

// Shared helpers for the unit tests: literal parsing, relative errors and
// printable multiprecision values in doctest messages.

#include "mpcore.hpp"

#include <doctest.h>

#include <ostream>
#include <random>

namespace jinv::mp {

inline std::ostream &operator<<(std::ostream &out, const Real &x) { return out << to_string(x, 20); }
inline std::ostream &operator<<(std::ostream &out, const Complex &z) { return out << to_string(z, 20); }

/// Exact equality of both components.
inline bool operator==(const Complex &x, const Complex &y) { return x.re() == y.re() && x.im() == y.im(); }

} // namespace jinv::mp

namespace support {

using jinv::PrecisionContext;
using jinv::mp::Complex;
using jinv::mp::Real;

inline PrecisionContext digits(unsigned d) { return PrecisionContext::make(d); }

inline Complex cx(const char *text, const PrecisionContext &ctx) { return jinv::mp::parse_complex(text, ctx.bits()); }
inline Real re(const char *text, const PrecisionContext &ctx) { return Real::parse(text, ctx.bits()); }

/// |x - y| / max(1, |y|)
inline Real rel(const Complex &x, const Complex &y)
{
    return abs(x - y) / max(Real(1, y.prec()), abs(y));
}
inline Real rel(const Real &x, const Real &y) { return rel(Complex(x), Complex(y)); }

/// 10^-k at the context precision.
inline Real tenth(long k, const PrecisionContext &ctx) { return jinv::mp::pow10(-k, ctx.bits()); }

/// Fixed-seed generator so failures reproduce.
inline std::mt19937_64 &rng()
{
    static std::mt19937_64 gen(20240601);
    return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

} // namespace support
