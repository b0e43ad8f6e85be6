#include "condyn/maps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace condyn {
namespace {

constexpr double kChartRadius = 1e8;    // switch to w = 1/z beyond this
constexpr double kCycleTol = 1e-9;
constexpr int kCycleWindow = 64;
constexpr int kCycleMaxPeriod = 32;
constexpr double kCriticalResidualTol = 1e-10;
constexpr double kResultantTol = 1e-10;

std::vector<Complex> reversed(const std::vector<Complex>& c) {
    return {c.rbegin(), c.rend()};
}

std::vector<Complex> poly_mul(const std::vector<Complex>& a,
                              const std::vector<Complex>& b) {
    std::vector<Complex> out(a.size() + b.size() - 1, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

std::vector<Complex> poly_sub(std::vector<Complex> a,
                              const std::vector<Complex>& b) {
    if (a.size() < b.size()) a.resize(b.size(), Complex{0.0, 0.0});
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

// N'D - ND', the numerator of the quotient-rule derivative.
std::vector<Complex> wronskian(const PolynomialMap& num, const PolynomialMap& den) {
    const auto nd = poly_mul(poly_derivative(num.coefficients()), den.coefficients());
    const auto dn = poly_mul(num.coefficients(), poly_derivative(den.coefficients()));
    return poly_trim(poly_sub(nd, dn));
}

void dedupe_points(std::vector<Complex>& pts, double tol) {
    std::vector<Complex> out;
    for (const auto& p : pts) {
        bool seen = false;
        for (const auto& q : out) {
            if (is_infinite(p) && is_infinite(q)) { seen = true; break; }
            if (is_finite(p) && is_finite(q) && std::abs(p - q) < tol) { seen = true; break; }
        }
        if (!seen) out.push_back(p);
    }
    pts = std::move(out);
}

template <typename Map>
Orbit orbit_impl(const Map& map, const Complex& z0, int n, double escape_radius) {
    if (n < 1) throw std::invalid_argument("orbit: n must be >= 1");
    if (!(escape_radius > 0.0)) throw std::invalid_argument("orbit: escape_radius must be > 0");

    Orbit result;
    result.points.reserve(static_cast<std::size_t>(n) + 1);
    result.points.push_back(z0);
    if (std::abs(z0) >= escape_radius || is_infinite(z0)) {
        result.escaped = true;
        result.escape_index = 0;
        return result;
    }
    for (int k = 1; k <= n; ++k) {
        Complex z = eval_map(map, result.points.back());
        result.points.push_back(z);
        if (is_infinite(z) || std::abs(z) >= escape_radius) {
            result.escaped = true;
            result.escape_index = k;
            return result;
        }
        // Cycle scan: current point against up to 32 predecessors, but only
        // once both lie inside the trailing 64-point window.
        const int lo = std::max(0, k - kCycleWindow + 1);
        for (int p = 1; p <= kCycleMaxPeriod && k - p >= lo; ++p) {
            if (std::abs(z - result.points[k - p]) < kCycleTol) {
                int pre = 0;
                while (pre + p <= k &&
                       !(std::abs(result.points[pre + p] - result.points[pre]) < kCycleTol)) {
                    ++pre;
                }
                result.cycle = std::make_pair(pre, p);
                return result;
            }
        }
    }
    return result;
}

template <typename Map>
PointSet postcritical_impl(const Map& map, int depth) {
    if (depth < 1) throw std::invalid_argument("postcritical_set: depth must be >= 1");
    const PointSet crit = critical_points(map);
    PointSet out;
    out.label = "postcritical set";
    for (const auto& c : crit.points) {
        if (is_infinite(c)) continue;
        const Orbit o = orbit(map, c, depth, 1e12);
        const int last = static_cast<int>(o.points.size()) - 1;
        for (int k = 1; k <= last; ++k) {
            if (is_finite(o.points[k])) out.points.push_back(o.points[k]);
        }
    }
    dedupe_points(out.points, kCycleTol);
    return out;
}

}  // namespace

PolynomialMap::PolynomialMap(std::vector<Complex> coefficients)
    : coeffs_(poly_trim(std::move(coefficients))) {
    if (coeffs_.empty()) throw std::invalid_argument("PolynomialMap: empty coefficient list");
    for (const auto& c : coeffs_) {
        if (!is_finite(c)) throw std::invalid_argument("PolynomialMap: non-finite coefficient");
    }
    if (coeffs_.size() > 1 && std::abs(coeffs_.back()) == 0.0) {
        throw std::invalid_argument("PolynomialMap: zero leading coefficient");
    }
}

PolynomialMap PolynomialMap::quadratic(const Complex& c) {
    return PolynomialMap({c, {0.0, 0.0}, {1.0, 0.0}});
}

PolynomialMap PolynomialMap::cubic_odd(const Complex& a) {
    return PolynomialMap({{0.0, 0.0}, a, {0.0, 0.0}, {1.0, 0.0}});
}

bool PolynomialMap::is_monic(double tol) const {
    return std::abs(coeffs_.back() - Complex{1.0, 0.0}) <= tol;
}

RationalMap::RationalMap(PolynomialMap n, PolynomialMap d, bool check)
    : num_(std::move(n)), den_(std::move(d)) {
    if (den_.degree() == 0 && std::abs(den_.coefficients()[0]) == 0.0) {
        throw std::invalid_argument("RationalMap: zero denominator");
    }
    if (!check || num_.degree() < 1 || den_.degree() < 1) return;

    const RootResult rn = durand_kerner(num_.coefficients());
    const RootResult rd = durand_kerner(den_.coefficients());
    if (!rn.converged || !rd.converged) return;  // inconclusive, accept
    // Normalized resultant: product of all root differences. Scale-free, so
    // the 1e-10 threshold reads directly against coefficient noise.
    double log_res = 0.0;
    for (const auto& a : rn.roots) {
        for (const auto& b : rd.roots) {
            log_res += std::log(std::abs(a - b));
        }
    }
    if (!(log_res > std::log(kResultantTol))) {
        throw std::invalid_argument(
            "RationalMap: numerator and denominator share a root "
            "(normalized resultant below 1e-10)");
    }
}

RationalMap::RationalMap(PolynomialMap n, PolynomialMap d)
    : RationalMap(std::move(n), std::move(d), true) {}

RationalMap RationalMap::unchecked(PolynomialMap n, PolynomialMap d) {
    return RationalMap(std::move(n), std::move(d), false);
}

int RationalMap::degree() const {
    return std::max(num_.degree(), den_.degree());
}

Complex eval_map(const PolynomialMap& map, const Complex& z) {
    if (is_infinite(z)) {
        return map.degree() >= 1 ? infinity() : map.coefficients()[0];
    }
    return poly_eval(map.coefficients(), z);
}

Complex eval_map(const RationalMap& map, const Complex& z) {
    const int n = map.numerator().degree();
    const int m = map.denominator().degree();
    const Complex an = map.numerator().leading();
    const Complex bm = map.denominator().leading();

    if (is_infinite(z)) {
        if (n > m) return infinity();
        if (n < m) return {0.0, 0.0};
        return an / bm;
    }
    if (std::abs(z) > kChartRadius) {
        // Chart w = 1/z: F(1/w) = w^(m-n) * rev(N)(w) / rev(D)(w).
        const Complex w = Complex{1.0, 0.0} / z;
        Complex value = poly_eval(reversed(map.numerator().coefficients()), w) /
                        poly_eval(reversed(map.denominator().coefficients()), w);
        for (int k = 0; k < m - n; ++k) value *= w;
        for (int k = 0; k < n - m; ++k) value /= w;
        return is_finite(value) ? value : infinity();
    }
    const Complex den = poly_eval(map.denominator().coefficients(), z);
    const Complex num = poly_eval(map.numerator().coefficients(), z);
    if (std::abs(den) == 0.0) {
        if (std::abs(num) == 0.0) {
            throw std::domain_error(
                "eval_map: 0/0 indeterminate point, numerator and denominator "
                "share a root");
        }
        return infinity();
    }
    const Complex value = num / den;
    return is_finite(value) ? value : infinity();
}

PolynomialMap derivative_map(const PolynomialMap& map) {
    return PolynomialMap(poly_derivative(map.coefficients()));
}

RationalMap derivative_map(const RationalMap& map) {
    auto w = wronskian(map.numerator(), map.denominator());
    auto d2 = poly_mul(map.denominator().coefficients(), map.denominator().coefficients());
    return RationalMap::unchecked(PolynomialMap(std::move(w)), PolynomialMap(std::move(d2)));
}

Complex derivative_value(const PolynomialMap& map, const Complex& z) {
    return poly_eval(poly_derivative(map.coefficients()), z);
}

Complex derivative_value(const RationalMap& map, const Complex& z) {
    const Complex w = poly_eval(wronskian(map.numerator(), map.denominator()), z);
    const Complex d = poly_eval(map.denominator().coefficients(), z);
    return w / (d * d);
}

namespace {

std::vector<Complex> polished_roots(const std::vector<Complex>& poly_coeffs,
                                    const char* who) {
    const RootResult rr = durand_kerner(poly_coeffs);
    // Re-check residuals against the unnormalized polynomial.
    double worst = 0.0;
    for (const auto& r : rr.roots) {
        worst = std::max(worst, std::abs(poly_eval(poly_coeffs, r)));
    }
    double scale = 0.0;
    for (const auto& c : poly_coeffs) scale = std::max(scale, std::abs(c));
    if (!rr.converged || worst > kCriticalResidualTol * std::max(1.0, scale)) {
        std::ostringstream msg;
        msg << who << ": root finder did not converge (max residual " << worst << ")";
        throw std::runtime_error(msg.str());
    }
    return rr.roots;
}

}  // namespace

PointSet critical_points(const PolynomialMap& map) {
    if (map.degree() < 2) {
        throw std::invalid_argument("critical_points: degree must be >= 2");
    }
    PointSet out;
    out.label = "critical points";
    out.points = polished_roots(poly_derivative(map.coefficients()), "critical_points");
    dedupe_points(out.points, kCycleTol);
    return out;
}

PointSet critical_points(const RationalMap& map) {
    const int d = map.degree();
    if (d < 2) throw std::invalid_argument("critical_points: degree must be >= 2");
    PointSet out;
    out.label = "critical points";
    const auto w = wronskian(map.numerator(), map.denominator());
    const int finite_count = static_cast<int>(w.size()) - 1;
    if (finite_count >= 1) {
        out.points = polished_roots(w, "critical_points");
    }
    dedupe_points(out.points, kCycleTol);
    // A degree-d rational map has 2d-2 critical points with multiplicity;
    // whatever the wronskian does not account for sits at infinity.
    if (2 * d - 2 > finite_count) out.points.push_back(infinity());
    return out;
}

Orbit orbit(const PolynomialMap& map, const Complex& z0, int n, double escape_radius) {
    return orbit_impl(map, z0, n, escape_radius);
}

Orbit orbit(const RationalMap& map, const Complex& z0, int n, double escape_radius) {
    return orbit_impl(map, z0, n, escape_radius);
}

PointSet postcritical_set(const PolynomialMap& map, int depth) {
    return postcritical_impl(map, depth);
}

PointSet postcritical_set(const RationalMap& map, int depth) {
    return postcritical_impl(map, depth);
}

double escape_bound(const PolynomialMap& map) {
    const int d = map.degree();
    if (d < 1) throw std::invalid_argument("escape_bound: degree must be >= 1");
    double sum = 0.0;
    for (int i = 0; i < d; ++i) sum += std::abs(map.coefficients()[i]);
    // |z| >= R gives |p(z)| >= |a_d| |z|^(d-1) (|z| - sum/|a_d|) >= 2|z|.
    return std::max(2.0, (2.0 + sum) / std::abs(map.leading()));
}

}  // namespace condyn
