#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "condyn/complex_util.hpp"
#include "condyn/poly_roots.hpp"

namespace condyn {

/// Polynomial with ascending complex coefficients. The leading coefficient is
/// nonzero after construction (exact trailing zeros are trimmed). Degree 0 is
/// permitted so rational maps can carry constant denominators; the dynamical
/// operations below require degree >= 1.
class PolynomialMap {
public:
    explicit PolynomialMap(std::vector<Complex> coefficients);

    /// z^2 + c
    static PolynomialMap quadratic(const Complex& c);
    /// z^3 + a z
    static PolynomialMap cubic_odd(const Complex& a);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coefficients() const { return coeffs_; }
    const Complex& leading() const { return coeffs_.back(); }

    bool is_monic(double tol = 0.0) const;

private:
    std::vector<Complex> coeffs_;
};

/// Quotient of two polynomials sharing no common root (checked numerically at
/// construction through the normalized resultant). Values at poles and at
/// infinity follow the degree convention of eval_map.
class RationalMap {
public:
    RationalMap(PolynomialMap numerator, PolynomialMap denominator);

    /// Skips the common-root check; for internally derived quotients (e.g.
    /// derivatives) that may carry removable factors.
    static RationalMap unchecked(PolynomialMap numerator, PolynomialMap denominator);

    const PolynomialMap& numerator() const { return num_; }
    const PolynomialMap& denominator() const { return den_; }
    int degree() const;

private:
    RationalMap(PolynomialMap n, PolynomialMap d, bool check);
    PolynomialMap num_;
    PolynomialMap den_;
};

struct Orbit {
    std::vector<Complex> points;
    bool escaped = false;
    std::optional<int> escape_index;
    /// (preperiod, period) when a cycle was detected.
    std::optional<std::pair<int, int>> cycle;
};

struct PointSet {
    std::vector<Complex> points;
    std::string label;
};

Complex eval_map(const PolynomialMap& map, const Complex& z);
Complex eval_map(const RationalMap& map, const Complex& z);

PolynomialMap derivative_map(const PolynomialMap& map);
/// Quotient-rule derivative: numerator N'D - ND' over D^2.
RationalMap derivative_map(const RationalMap& map);

/// f'(z) as a value.
Complex derivative_value(const PolynomialMap& map, const Complex& z);
Complex derivative_value(const RationalMap& map, const Complex& z);

/// All critical points of the map. Finite ones are roots of the derivative
/// (derivative numerator for rational maps); for rational maps infinity is
/// appended when it carries critical multiplicity (2d-2 exceeds the finite
/// count). Roots are polished below residual 1e-10 or an error is thrown.
PointSet critical_points(const PolynomialMap& map);
PointSet critical_points(const RationalMap& map);

/// Forward orbit of z0: up to n iterations, stopping at escape
/// (|z| >= escape_radius, overflow included) or at a detected cycle
/// (pairwise test, tolerance 1e-9, periods up to 32 within the last 64
/// points).
Orbit orbit(const PolynomialMap& map, const Complex& z0, int n, double escape_radius);
Orbit orbit(const RationalMap& map, const Complex& z0, int n, double escape_radius);

/// Truncated post-critical set: the union of the first `depth` forward images
/// of every finite critical point, deduplicated to 1e-9. The critical points
/// themselves enter only if the orbit revisits them.
PointSet postcritical_set(const PolynomialMap& map, int depth);
PointSet postcritical_set(const RationalMap& map, int depth);

/// Radius R with the certificate |p(z)| >= 2|z| whenever |z| >= R, so any
/// orbit point beyond it escapes geometrically.
double escape_bound(const PolynomialMap& map);

}  // namespace condyn
