#pragma once

// Disk coordinates at the elliptic points, the hypergeometric quotients
// C_i and C_rho, their rational j-values, the signature 4 and 6
// parameterizations and the sector maps tying the two together.

#include "hyp2f1.hpp"
#include "jfunction.hpp"
#include "mpcore.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace jinv {

/// A point of the open unit disk. Throws Error(Domain) when |w| >= 1.
class DiskPoint {
public:
    explicit DiskPoint(mp::Complex w);
    const mp::Complex &w() const { return m_w; }

private:
    mp::Complex m_w;
};

/// (tau - tau*) / (tau - conj(tau*))
DiskPoint to_disk(const EllipticPoint &point, const HalfPlanePoint &tau);
/// (tau* - conj(tau*) w) / (1 - w)
HalfPlanePoint from_disk(const EllipticPoint &point, const DiskPoint &w);
/// from_disk(w / (2 pi Omega^2)). Throws Error(Domain) when |w| >= 2 pi Omega^2.
HalfPlanePoint from_scaled_disk(const EllipticPoint &point, const mp::Complex &w);

struct SeriesMode {
    /// Sum exactly this many terms of each power series instead of
    /// evaluating to full precision.
    std::optional<std::size_t> truncate_terms;
    /// Reject t outside the disk of convergence of the defining series.
    bool enforce_disk = true;
};

struct CValue {
    mp::Complex t;
    mp::Complex value;
    PointKind point;
    std::size_t terms_used;
};

/// t F(3/4,3/4;3/2;4t^2) / F(1/4,1/4;1/2;4t^2)
CValue c_i(const mp::Complex &t, const PrecisionContext &ctx, const SeriesMode &mode = {});
/// (t^2/2) F(5/6,5/6;5/3;-2t^3) / F(1/6,1/6;1/3;-2t^3)
CValue c_rho(const mp::Complex &t, const PrecisionContext &ctx, const SeriesMode &mode = {});
CValue c_value(PointKind point, const mp::Complex &t, const PrecisionContext &ctx, const SeriesMode &mode = {});

/// Coefficients of t^0 .. t^{n-1} by division of the hypergeometric series.
std::vector<mp::Real> c_series_coefficients(PointKind point, std::size_t n, const PrecisionContext &ctx);

/// 64 (16t^2 - 3)^3 / (4t^2 - 1)
mp::Complex rational_j_i(const mp::Complex &t);
/// -1728 t^6 / (2t^3 + 1)
mp::Complex rational_j_rho(const mp::Complex &t);
mp::Complex rational_j(PointKind point, const mp::Complex &t);

/// (i/sqrt 2) F(1/4,3/4;1;1-g) / F(1/4,3/4;1;g)
HalfPlanePoint berndt_tau_sig4(const mp::Complex &g, const PrecisionContext &ctx);
/// 64 (1+3g)^3 / (g (g-1)^2)
mp::Complex berndt_j_sig4(const mp::Complex &g);
/// i F(1/6,5/6;1;1-b) / F(1/6,5/6;1;b) with b = -g^3/2
HalfPlanePoint berndt_tau_sig6(const mp::Complex &g, const PrecisionContext &ctx);
/// -1728 / (g^3 (2 + g^3))
mp::Complex berndt_j_sig6(const mp::Complex &g);

/// The map M with raw(t) = M(berndt tau), where raw(t) is
/// (from_scaled_disk(C_i(t)) + 1)/2 at i (Berndt parameter 1 - 1/(4t^2)) and
/// from_scaled_disk(C_rho(t)) at rho (Berndt parameter 1/t). Selected by the
/// sector of arg t. Throws Error(InvalidArgument) at t = 0.
MobiusMap arg_table_map(PointKind point, const mp::Complex &t);

} // namespace jinv
