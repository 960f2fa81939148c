#pragma once

// Solving j(tau) = alpha through the rational forms of j in the disk
// parameter t, followed by a forward check of the result.

#include "jfunction.hpp"
#include "moduli.hpp"
#include "mpcore.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace jinv {

struct InversionOptions {
    /// Sum exactly this many terms of each hypergeometric series.
    std::optional<std::size_t> truncate_terms;
};

struct InversionResult {
    mp::Complex alpha;
    PointKind point;
    mp::Complex t0;
    mp::Complex c_value;
    /// (from_scaled_disk(C_i(t0)) + 1)/2 at i, from_scaled_disk(C_rho(t0)) at rho.
    HalfPlanePoint tau_raw;
    /// tau_raw pulled back through the sector map of t0.
    HalfPlanePoint tau_normalized;
    HalfPlanePoint tau_reduced;
    /// tau_reduced = reduction_map(tau_raw)
    MobiusMap reduction_map;
    mp::Complex j_check;
    /// |j_check - alpha| / (1 + |alpha|)
    mp::Real residual;
    std::size_t terms_used;
    bool success;
    std::vector<std::string> warnings;
};

class InadmissibleTarget : public Error {
public:
    InadmissibleTarget(PointKind point, const mp::Real &nearest_modulus, const mp::Real &radius);
    const mp::Real &nearest_modulus() const { return m_nearest; }

private:
    mp::Real m_nearest;
};

class ResidualFailure : public Error {
public:
    explicit ResidualFailure(InversionResult record);
    const InversionResult &record() const { return m_record; }

private:
    InversionResult m_record;
};

/// All six roots of 64(16t^2-3)^3/(4t^2-1) = alpha, sorted by |t|.
std::vector<mp::Complex> solve_t_i(const mp::Complex &alpha, const PrecisionContext &ctx);
/// All six roots of -1728t^6/(2t^3+1) = alpha, sorted by |t|.
std::vector<mp::Complex> solve_t_rho(const mp::Complex &alpha, const PrecisionContext &ctx);
std::vector<mp::Complex> solve_t(PointKind point, const mp::Complex &alpha, const PrecisionContext &ctx);

/// Smallest admissible |t|; ties prefer a real t (for real alpha), then
/// Im t >= 0, then Re t >= 0. Throws InadmissibleTarget when no root lies
/// inside the disk.
mp::Complex select_root(PointKind point, const std::vector<mp::Complex> &roots, const mp::Complex &alpha,
                        const PrecisionContext &ctx);

/// Estimated number of series terms n with |z|^n / (1 - |z|) < tol.
std::size_t required_terms(PointKind point, const mp::Complex &t, const PrecisionContext &ctx);

/// The full pipeline; `success` reports whether the residual is below tol.
InversionResult compute_inversion(const mp::Complex &alpha, PointKind point, const PrecisionContext &ctx,
                                  const InversionOptions &options = {});

/// compute_inversion, throwing ResidualFailure unless it succeeded.
InversionResult invert_j(const mp::Complex &alpha, PointKind point, const PrecisionContext &ctx,
                         const InversionOptions &options = {});

} // namespace jinv
