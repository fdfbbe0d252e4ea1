/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef BELYI_ROOTS_HPP
#define BELYI_ROOTS_HPP

#include <vector>

#include "belyi/bigfloat.hpp"
#include "belyi/polynomial.hpp"

namespace belyi {

struct RootSet {
  std::vector<BigComplex> roots;  // one per degree
  double residual_bound = 0.0;    // max |f(root)| over the reported roots
  long working_precision_bits = 0;
};

struct RootFindingError : std::runtime_error {
  RootFindingError(const std::string& msg, double residual)
      : std::runtime_error(msg), best_residual(residual) {}
  double best_residual;
};

// All complex roots by Durand-Kerner simultaneous iteration at the given
// precision. Deterministic: the initial configuration is a fixed phase
// pattern on the circle of Cauchy-bound radius. Requires f(0) != 0 and
// degree >= 1; throws RootFindingError when the residual certificate
// |f(root)| <= max|coeff| * 10^(-0.15 * precision_bits) cannot be met.
RootSet find_roots(const Polynomial& f, long precision_bits);

// Root-modulus annulus from coefficient sums: every complex root of f lies
// in [lower, upper], where upper = max(1, sum |a_i/a_n|) and lower is the
// same bound applied to the reciprocal polynomial. lower = 0 when f(0) = 0.
std::pair<double, double> cauchy_bounds(const Polynomial& f);

}  // namespace belyi

#endif  // BELYI_ROOTS_HPP
