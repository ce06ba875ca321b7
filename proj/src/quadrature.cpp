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

#include "pcml/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <limits>
#include <queue>
#include <vector>

#include "pcml/errors.hpp"

namespace pcml {
namespace {

// 15-point Kronrod abscissae (positive half, descending) with the embedded
// 7-point Gauss rule at the odd indices. QUADPACK dqk15 constants.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double lo, hi;
  double value;
  double error;
  double resabs;

  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod_15(const std::function<double(double)>& f, double lo,
                       double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  double fv[15];
  fv[7] = f(center);
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    fv[i] = f(center - dx);
    fv[14 - i] = f(center + dx);
  }

  double resg = kWg[3] * fv[7];
  double resk = kWgk[7] * fv[7];
  double resabs = kWgk[7] * std::abs(fv[7]);
  for (int i = 0; i < 7; ++i) {
    const double pair = fv[i] + fv[14 - i];
    resk += kWgk[i] * pair;
    resabs += kWgk[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
    if (i % 2 == 1) resg += kWg[i / 2] * pair;
  }

  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fv[7] - reskh);
  for (int i = 0; i < 7; ++i) {
    resasc += kWgk[i] *
              (std::abs(fv[i] - reskh) + std::abs(fv[14 - i] - reskh));
  }

  double err = std::abs(resk - resg) * half;
  resasc *= half;
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  return {lo, hi, resk * half, err, resabs * half};
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double lo, double hi,
                              std::span<const double> split_points,
                              double abs_tol, int max_panels) {
  if (!(abs_tol > 0.0)) throw InvalidInputError("abs_tol must be positive");
  if (!(lo < hi)) throw InvalidInputError("empty integration interval");

  std::vector<double> knots{lo, hi};
  for (double s : split_points) {
    if (s > lo && s < hi) knots.push_back(s);
  }
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  auto checked_panel = [&f](double a, double b) {
    Panel p = gauss_kronrod_15(f, a, b);
    if (!std::isfinite(p.value) || !std::isfinite(p.error)) {
      throw InvalidInputError("integrand produced a non-finite value in [" +
                              std::to_string(a) + ", " + std::to_string(b) +
                              "]");
    }
    return p;
  };

  std::priority_queue<Panel> queue;
  int evals = 0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    queue.push(checked_panel(knots[i], knots[i + 1]));
    evals += 15;
  }

  double total_value = 0.0, total_error = 0.0, total_resabs = 0.0;
  {
    std::priority_queue<Panel> copy = queue;
    while (!copy.empty()) {
      total_value += copy.top().value;
      total_error += copy.top().error;
      total_resabs += copy.top().resabs;
      copy.pop();
    }
  }

  const double eps = std::numeric_limits<double>::epsilon();
  int panels = static_cast<int>(queue.size());
  while (total_error > abs_tol) {
    const double roundoff_floor = 50.0 * eps * total_resabs;
    if (abs_tol < roundoff_floor && total_error <= 2.0 * roundoff_floor) {
      throw AccuracyError(
          "requested tolerance is below the roundoff floor of the integrand",
          total_error);
    }
    if (panels >= max_panels) {
      throw AccuracyError("quadrature subdivision budget exhausted",
                          total_error);
    }
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(worst.lo < mid && mid < worst.hi)) {
      throw AccuracyError("interval too narrow to subdivide further",
                          total_error);
    }
    Panel left = checked_panel(worst.lo, mid);
    Panel right = checked_panel(mid, worst.hi);
    evals += 30;
    ++panels;
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    total_resabs += left.resabs + right.resabs - worst.resabs;
    queue.push(left);
    queue.push(right);
  }

  // Recompute the sum left to right for a deterministic, compensated total.
  std::vector<Panel> all;
  all.reserve(queue.size());
  while (!queue.empty()) {
    all.push_back(queue.top());
    queue.pop();
  }
  std::sort(all.begin(), all.end(),
            [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  double value = 0.0, comp = 0.0, error = 0.0;
  for (const Panel& p : all) {
    const double y = p.value - comp;
    const double t = value + y;
    comp = (t - value) - y;
    value = t;
    error += p.error;
  }
  return {value, error, evals, panels};
}

}  // namespace pcml
