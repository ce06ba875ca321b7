// Copyright 2026 The pcml Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PCML_QUADRATURE_HPP
#define PCML_QUADRATURE_HPP

#include <functional>
#include <span>

namespace pcml {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int function_evals = 0;
  int panels = 0;
};

// Adaptive Gauss-Kronrod 15(7) integration of f over [lo, hi].
//
// The initial panel set is seeded at every split point inside (lo, hi), so
// integrands that are only piecewise smooth (Laplace density and CDF have a
// kink where their argument crosses zero) never straddle a kink with a single
// rule application. Panels are then bisected worst-error-first until the
// summed error estimate drops below abs_tol.
//
// Throws AccuracyError (carrying the achieved estimate) if the tolerance is
// not reached within max_panels panels or is below the roundoff floor of the
// integrand.
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double lo, double hi,
                              std::span<const double> split_points,
                              double abs_tol, int max_panels = 4096);

}  // namespace pcml

#endif  // PCML_QUADRATURE_HPP
