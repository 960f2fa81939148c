#pragma once

// Klein's j-invariant from Eisenstein q-series, reduction to the standard
// fundamental domain, and Taylor coefficients of j at the elliptic points.

#include "mpcore.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace jinv {

/// A point of the upper half-plane. Throws Error(Domain) when Im tau <= 0.
class HalfPlanePoint {
public:
    explicit HalfPlanePoint(mp::Complex tau);
    const mp::Complex &tau() const { return m_tau; }

private:
    mp::Complex m_tau;
};

/// tau -> (a tau + b) / (c tau + d) with ad - bc = 1.
class MobiusMap {
public:
    MobiusMap() : MobiusMap(1, 0, 0, 1) {}
    /// Throws Error(InvalidArgument) unless ad - bc = 1.
    MobiusMap(mpz_class a, mpz_class b, mpz_class c, mpz_class d);

    static MobiusMap identity() { return {}; }
    static MobiusMap translation(long n) { return {1, n, 0, 1}; }
    static MobiusMap inversion() { return {0, -1, 1, 0}; }

    const mpz_class &a() const { return m_a; }
    const mpz_class &b() const { return m_b; }
    const mpz_class &c() const { return m_c; }
    const mpz_class &d() const { return m_d; }

    bool is_identity() const;
    MobiusMap inverse() const;
    mp::Complex apply(const mp::Complex &tau) const;
    HalfPlanePoint apply(const HalfPlanePoint &tau) const;
    /// "[[a, b], [c, d]]"
    std::string to_string() const;

    friend bool operator==(const MobiusMap &x, const MobiusMap &y);

private:
    mpz_class m_a, m_b, m_c, m_d;
};

/// Composition: (f * g)(tau) = f(g(tau)).
MobiusMap operator*(const MobiusMap &f, const MobiusMap &g);

/// 1 + 240 sum_{n=1}^{n_terms} sigma_3(n) q^n. Requires |q| < 1, n_terms <= 6000.
mp::Complex eisenstein_e4(const mp::Complex &q, std::size_t n_terms);
/// 1 - 504 sum_{n=1}^{n_terms} sigma_5(n) q^n.
mp::Complex eisenstein_e6(const mp::Complex &q, std::size_t n_terms);

struct Reduction {
    HalfPlanePoint point;
    MobiusMap map; // map.apply(input) == point
};

/// |Re tau'| <= 1/2 and |tau'| >= 1; ties go to Re >= 0.
Reduction reduce_to_fundamental_domain(const HalfPlanePoint &tau);

/// j(tau) via E4^3 / ((E4^3 - E6^2) / 1728) at the reduced point.
/// Throws Error(PrecisionOverflow) when the cancellation in E4^3 - E6^2 or
/// the size of j is beyond reach.
mp::Complex j_from_tau(const HalfPlanePoint &tau, const PrecisionContext &ctx);

/// Coefficients of w^0 .. w^{n-1} in j(s^{-1}(w)) by discrete Fourier
/// analysis on |w| = 1/4. n <= 16.
std::vector<mp::Complex> taylor_j_at(const EllipticPoint &point, std::size_t n_coeffs,
                                     const PrecisionContext &ctx);

/// Coefficients of q^{-1}, q^0, ..., q^{n-2} in j, by discrete Fourier
/// analysis along Im tau = 1. n <= 16.
std::vector<mp::Complex> q_expansion_coefficients(std::size_t n_coeffs, const PrecisionContext &ctx);

} // namespace jinv
