#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "abelcenter/abel_equation.hpp"

namespace abelcenter {

/// Endpoint value of one numeric trajectory.
struct FlowResult {
  double y_end = 0.0;
  long steps = 0;
  double est_error = 0.0;  // accumulated local-error bound, >= 0
};

struct FlowOptions {
  double escape_bound = 1e6;  // |y| beyond this aborts as blow-up
};

/// Trajectory left [a, b] through the escape bound, or the step size
/// underflowed.
class FlowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

/// Dormand-Prince 5(4) step over [a, b] for dy/dx = p(x) y^2 + q(x) y^3,
/// coefficients evaluated by Horner straight from the exact rationals.
/// Local error per accepted step is kept <= tol (absolute).
template <class Real>
struct FlowOutcome {
  Real y_end;
  long steps;
  Real est_error;
};

template <class Real>
FlowOutcome<Real> integrate_abel(const AbelEquation& eq, Real y0, Real tol, Real escape) {
  static constexpr double kA21 = 1.0 / 5;
  static constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
  static constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
  static constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187,
                          kA53 = 64448.0 / 6561, kA54 = -212.0 / 729;
  static constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247,
                          kA64 = 49.0 / 176, kA65 = -5103.0 / 18656;
  static constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192,
                          kB5 = -2187.0 / 6784, kB6 = 11.0 / 84;
  static constexpr double kE1 = 35.0 / 384 - 5179.0 / 57600, kE3 = 500.0 / 1113 - 7571.0 / 16695,
                          kE4 = 125.0 / 192 - 393.0 / 640,
                          kE5 = -2187.0 / 6784 + 92097.0 / 339200, kE6 = 11.0 / 84 - 187.0 / 2100,
                          kE7 = -1.0 / 40;
  static constexpr double kC2 = 1.0 / 5, kC3 = 3.0 / 10, kC4 = 4.0 / 5, kC5 = 8.0 / 9;

  const Real xa = to_long_double(eq.a());
  const Real xb = to_long_double(eq.b());
  auto rhs = [&](Real x, Real y) {
    return eq.p().eval_fp(x) * y * y + eq.q().eval_fp(x) * y * y * y;
  };

  Real x = xa, y = y0;
  Real h = (xb - xa) / 16;
  Real accumulated = 0;
  long steps = 0;
  const Real h_floor = (xb - xa) * std::numeric_limits<Real>::epsilon() * 8;

  while (x < xb) {
    if (std::abs(y) > escape) throw FlowError("blow-up before b");
    if (h < h_floor) throw FlowError("step size underflow");
    const Real remaining = xb - x;
    const bool last = h >= remaining;
    if (last) h = remaining;

    Real k1 = rhs(x, y);
    Real k2 = rhs(x + kC2 * h, y + h * (kA21 * k1));
    Real k3 = rhs(x + kC3 * h, y + h * (kA31 * k1 + kA32 * k2));
    Real k4 = rhs(x + kC4 * h, y + h * (kA41 * k1 + kA42 * k2 + kA43 * k3));
    Real k5 = rhs(x + kC5 * h, y + h * (kA51 * k1 + kA52 * k2 + kA53 * k3 + kA54 * k4));
    Real k6 = rhs(x + h, y + h * (kA61 * k1 + kA62 * k2 + kA63 * k3 + kA64 * k4 + kA65 * k5));
    Real y5 = y + h * (kB1 * k1 + kB3 * k3 + kB4 * k4 + kB5 * k5 + kB6 * k6);
    Real k7 = rhs(x + h, y5);
    Real err = std::abs(h * (kE1 * k1 + kE3 * k3 + kE4 * k4 + kE5 * k5 + kE6 * k6 + kE7 * k7));

    if (err <= tol) {
      y = y5;
      accumulated += err;
      ++steps;
      if (!std::isfinite(static_cast<double>(y)) || std::abs(y) > escape)
        throw FlowError("blow-up before b");
      if (last) break;
      x += h;
    }
    Real scale = err > 0 ? Real(0.9) * std::pow(tol / err, Real(0.2)) : Real(5);
    h *= std::clamp(scale, Real(0.2), Real(5));
  }
  return {y, steps, accumulated};
}

}  // namespace detail

/// Numeric endpoint value y(b) of the trajectory with y(a) = y0, by an
/// adaptive Dormand-Prince 5(4) pair with local error per step <= tol.
inline FlowResult integrate_flow(const AbelEquation& eq, double y0, double tol,
                                 FlowOptions options = {}) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  if (std::abs(y0) > options.escape_bound)
    throw std::invalid_argument("initial value beyond the escape bound");
  auto out = detail::integrate_abel<double>(eq, y0, tol, options.escape_bound);
  return {out.y_end, out.steps, out.est_error};
}

/// max |P(y0) - y0| over the grid, where P is the numeric first return map.
inline double poincare_residuals(const AbelEquation& eq, const std::vector<double>& grid,
                                 double tol, FlowOptions options = {}) {
  double worst = 0.0;
  for (double y0 : grid) {
    FlowResult r = integrate_flow(eq, y0, tol, options);
    worst = std::max(worst, std::abs(r.y_end - y0));
  }
  return worst;
}

/// Sampling ladder for the return-map series fit.
struct FitOptions {
  double base = 0.1;  // largest |y0|
  int rungs = 7;      // samples at +/- base*2^{-k}, k = 0..rungs-1
};

/// Least-squares estimates of c_1..c_N from numeric return-map samples
/// P(y0) - y0 on the geometric ladder {±base*2^{-k}}. The samples split into
/// even/odd parts in y0, which decouple the odd- and even-indexed
/// coefficients; each part is fit with enough trailing series columns to
/// push the truncation bias below the noise floor. Samples are integrated in
/// extended precision at min(tol, 1e-15). N <= 4: beyond that the design is
/// too ill-conditioned at machine precision, so higher orders are for the
/// exact path.
inline std::vector<double> fit_coefficients(const AbelEquation& eq, int N, double tol,
                                            FitOptions options = {}) {
  if (N < 1 || N > 4) throw std::invalid_argument("fit order must be in 1..4");
  if (options.rungs < 6) throw std::invalid_argument("fit needs at least 6 ladder rungs");
  if (!(options.base > 0)) throw std::invalid_argument("ladder base must be positive");

  using Real = long double;
  const Real sample_tol = static_cast<Real>(std::min(tol, 1e-15));
  const int m = options.rungs;

  Eigen::Matrix<Real, Eigen::Dynamic, 1> even(m), odd(m), ts(m);
  for (int k = 0; k < m; ++k) {
    Real t = static_cast<Real>(options.base) * std::pow(Real(2), Real(-k));
    auto plus = detail::integrate_abel<Real>(eq, t, sample_tol, Real(1e6));
    auto minus = detail::integrate_abel<Real>(eq, -t, sample_tol, Real(1e6));
    Real rp = plus.y_end - t;
    Real rm = minus.y_end + t;
    ts(k) = t;
    even(k) = (rp + rm) / 2;  // c1 t^2 + c3 t^4 + ...
    odd(k) = (rp - rm) / 2;   // c2 t^3 + c4 t^5 + ...
  }

  // Column counts: 5 even powers (t^2..t^10) and 4 odd (t^3..t^9) keep the
  // series-truncation bias of c1..c4 far below the sample noise.
  auto solve = [&](const Eigen::Matrix<Real, Eigen::Dynamic, 1>& rhsv, int cols,
                   int first_power) {
    Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> A(m, cols);
    for (int k = 0; k < m; ++k)
      for (int c = 0; c < cols; ++c) A(k, c) = std::pow(ts(k), Real(first_power + 2 * c));
    Eigen::Matrix<Real, Eigen::Dynamic, 1> norms = A.colwise().norm();
    for (int c = 0; c < cols; ++c) A.col(c) /= norms(c);
    Eigen::JacobiSVD<Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>> svd(
        A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Real cond = svd.singularValues()(0) / svd.singularValues()(cols - 1);
    if (!(cond < Real(1e13)))
      throw std::runtime_error("ill-conditioned fit: condition number " +
                               std::to_string(static_cast<double>(cond)));
    Eigen::Matrix<Real, Eigen::Dynamic, 1> sol = svd.solve(rhsv);
    for (int c = 0; c < cols; ++c) sol(c) /= norms(c);
    return sol;
  };

  auto even_coeffs = solve(even, 5, 2);  // c1, c3, c5, c7, c9
  auto odd_coeffs = solve(odd, 4, 3);    // c2, c4, c6, c8

  std::vector<double> c(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n)
    c[static_cast<std::size_t>(n - 1)] = static_cast<double>(
        n % 2 == 1 ? even_coeffs((n - 1) / 2) : odd_coeffs(n / 2 - 1));
  return c;
}

}  // namespace abelcenter
