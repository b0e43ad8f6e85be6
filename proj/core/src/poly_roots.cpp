#include "condyn/poly_roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace condyn {

Complex poly_eval(const std::vector<Complex>& coeffs, const Complex& z) {
    Complex acc{0.0, 0.0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

std::vector<Complex> poly_derivative(const std::vector<Complex>& coeffs) {
    if (coeffs.size() <= 1) return {Complex{0.0, 0.0}};
    std::vector<Complex> out(coeffs.size() - 1);
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
        out[k - 1] = static_cast<double>(k) * coeffs[k];
    }
    return out;
}

std::vector<Complex> poly_trim(std::vector<Complex> coeffs) {
    while (coeffs.size() > 1 && coeffs.back() == Complex{0.0, 0.0}) {
        coeffs.pop_back();
    }
    return coeffs;
}

RootResult durand_kerner(const std::vector<Complex>& coeffs,
                         int max_iterations, double tolerance) {
    std::vector<Complex> p = poly_trim(coeffs);
    RootResult result;
    const int degree = static_cast<int>(p.size()) - 1;
    if (degree <= 0) {
        result.converged = true;
        return result;
    }
    if (std::abs(p.back()) == 0.0) {
        throw std::invalid_argument("durand_kerner: zero leading coefficient");
    }
    // Monic normalization conditions the residual test.
    const Complex lead = p.back();
    for (auto& c : p) c /= lead;

    if (degree == 1) {
        result.roots = {-p[0]};
        result.converged = true;
        result.iterations = 0;
        return result;
    }

    // Classic initial guesses: powers of a point off the unit circle, scaled
    // by a Cauchy-style root bound so large roots are reachable.
    double bound = 0.0;
    for (int k = 0; k < degree; ++k) bound = std::max(bound, std::abs(p[k]));
    const double scale = std::max(1.0, std::cbrt(1.0 + bound));
    const Complex base{0.4, 0.9};
    std::vector<Complex> x(degree);
    Complex pw{1.0, 0.0};
    for (int i = 0; i < degree; ++i) {
        pw *= base;
        x[i] = scale * pw;
    }

    auto residual_scale = [&](const Complex& root) {
        return std::max(1.0, std::pow(std::abs(root), degree));
    };

    for (int iter = 1; iter <= max_iterations; ++iter) {
        double max_step = 0.0;
        for (int i = 0; i < degree; ++i) {
            Complex denom{1.0, 0.0};
            for (int j = 0; j < degree; ++j) {
                if (j != i) denom *= x[i] - x[j];
            }
            if (denom == Complex{0.0, 0.0}) {
                // Collided guesses; nudge deterministically.
                x[i] += Complex{1e-6 * (i + 1), 1e-6};
                continue;
            }
            const Complex delta = poly_eval(p, x[i]) / denom;
            x[i] -= delta;
            max_step = std::max(max_step, std::abs(delta));
        }
        result.iterations = iter;
        if (max_step < tolerance) break;
    }

    result.max_residual = 0.0;
    bool ok = true;
    for (const auto& r : x) {
        const double res = std::abs(poly_eval(p, r)) / residual_scale(r);
        result.max_residual = std::max(result.max_residual, res);
        if (!(res < tolerance) || !is_finite(r)) ok = false;
    }
    result.converged = ok;
    std::sort(x.begin(), x.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    result.roots = std::move(x);
    return result;
}

}  // namespace condyn
