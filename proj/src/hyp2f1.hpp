#pragma once

// Gauss hypergeometric 2F1: power series, analytic continuation to the whole
// plane (principal branch, limit from above on the cut [1, inf)), and the
// jump across the cut.

#include "mpcore.hpp"

#include <cstddef>

namespace jinv {

struct HypParams {
    mp::Real a;
    mp::Real b;
    mp::Real c;

    /// Stored with a >= b. Throws Error(NonGeneric) when c is a non-positive integer.
    HypParams(mp::Real a, mp::Real b, mp::Real c);
    /// Parameters given as exact ratios, e.g. (3,4, 3,4, 3,2) for (3/4, 3/4; 3/2).
    static HypParams ratios(long an, long ad, long bn, long bd, long cn, long cd, mp::Bits prec);
};

enum class F21Region { UnitDiskSeries, LinearTransform, CutLimit };

const char *to_string(F21Region region) noexcept;

struct F21Result {
    mp::Complex value;
    std::size_t terms_used;
    F21Region region;
};

/// Modulus below which the plain power series is used.
inline constexpr double kDirectSeriesRadius = 0.8;

/// Power series for |z| < 1, summed until the geometric tail majorant drops
/// below 10^-digits relative to the partial sum.
F21Result f21_series(const HypParams &p, const mp::Complex &z, const PrecisionContext &ctx);

/// The first `n_terms` terms of the power series, no tail control. Requires |z| < 1.
F21Result f21_series_truncated(const HypParams &p, const mp::Complex &z, std::size_t n_terms,
                               const PrecisionContext &ctx);

/// Principal branch on the whole plane; for real z > 1 the limit from above.
F21Result f21(const HypParams &p, const mp::Complex &z, const PrecisionContext &ctx);

/// Connection formula in the variables 1/z and 1 - 1/z. Valid for
/// 0 < |arg(1 - z)| < pi and, with the +i0 side, for real z > 1.
F21Result linear_transform(const HypParams &p, const mp::Complex &z, const PrecisionContext &ctx);

/// 2F1(1/r, 1 - 1/r; 1; z)
mp::Complex lambda_r(unsigned r, const mp::Complex &z, const PrecisionContext &ctx);

/// F(x + i0) - F(x - i0) for real x > 1, in closed form.
mp::Complex branch_jump(const HypParams &p, const mp::Real &x, const PrecisionContext &ctx);

} // namespace jinv
