#pragma once

#include <vector>

#include "qflow/core_geometry.hpp"

namespace qflow::univariate {

// Polynomials are coefficient vectors in ascending order: c[0] + c[1] x + ...

Complex eval(const std::vector<Complex>& c, Complex x);
/// Horner with error-free transformations (twice the working precision, rounded once).
Complex eval_compensated(const std::vector<Complex>& c, Complex x);
/// Value and first derivative.
std::pair<Complex, Complex> eval_with_derivative(const std::vector<Complex>& c, Complex x);

std::vector<Complex> multiply(const std::vector<Complex>& a, const std::vector<Complex>& b);
std::vector<Complex> from_roots(const std::vector<Complex>& roots);

/// Quotient of c by (x - r); the remainder is discarded.
std::vector<Complex> deflate(const std::vector<Complex>& c, Complex r);

/// Newton steps on c from x; stops when a step no longer shrinks or after max_steps.
Complex newton_polish(const std::vector<Complex>& c, Complex x, int max_steps = 10);

/// Closed-form roots for degree 1..4.
std::vector<Complex> solve_quadratic(Complex a, Complex b, Complex c);
std::vector<Complex> solve_cubic(Complex a, Complex b, Complex c, Complex d);
std::vector<Complex> solve_quartic(Complex a, Complex b, Complex c, Complex d, Complex e);
/// Dispatch on the trimmed degree (1..4).
std::vector<Complex> closed_form_roots(const std::vector<Complex>& c);

/// All roots via eigenvalues of the companion matrix (reference oracle).
std::vector<Complex> companion_roots(const std::vector<Complex>& c);

/// Max over a of min over b of |a - b|, after greedy one-to-one matching.
double match_roots(const std::vector<Complex>& a, const std::vector<Complex>& b);

}  // namespace qflow::univariate
