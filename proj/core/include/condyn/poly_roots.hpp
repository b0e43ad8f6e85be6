#pragma once

#include <vector>

#include "condyn/complex_util.hpp"

namespace condyn {

struct RootResult {
    std::vector<Complex> roots;
    bool converged = false;
    double max_residual = 0.0;  // |p(root)| on the monic-normalized polynomial
    int iterations = 0;
};

/// Simultaneous (Durand-Kerner) iteration for all roots of a polynomial given
/// by ascending coefficients. No root-separation assumptions; the polynomial
/// is normalized to monic internally. Degree 0 yields an empty root set.
RootResult durand_kerner(const std::vector<Complex>& coeffs,
                         int max_iterations = 500,
                         double tolerance = 1e-12);

/// Horner evaluation of an ascending-coefficient polynomial.
Complex poly_eval(const std::vector<Complex>& coeffs, const Complex& z);

/// Ascending coefficients of the derivative.
std::vector<Complex> poly_derivative(const std::vector<Complex>& coeffs);

/// Drops trailing (leading-degree) coefficients that are exactly zero.
std::vector<Complex> poly_trim(std::vector<Complex> coeffs);

}  // namespace condyn
