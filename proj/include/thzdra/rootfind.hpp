// Scalar root finding: complex Newton (finite-difference derivative) with a
// Muller fallback, plus real-axis bracketing helpers.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "thzdra/constants.hpp"
#include "thzdra/errors.hpp"

namespace thzdra::rootfind {

using ComplexFn = std::function<Complex(Complex)>;
using RealFn = std::function<double(double)>;

struct NewtonOptions {
  double derivative_step = 1e-7;   // relative central-difference step
  double step_tolerance = 1e-10;   // |dz| convergence threshold (absolute)
  double residual_tolerance = 1e-8;
  int max_iterations = 100;
};

struct RootResult {
  Complex root{};
  Complex residual{};
  int iterations = 0;
  bool converged = false;
  std::vector<Complex> trace;  // iterates, seed first
};

inline std::string format_trace(const std::vector<Complex>& trace) {
  std::ostringstream oss;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i) oss << " -> ";
    oss << "(" << trace[i].real() << "," << trace[i].imag() << ")";
  }
  return oss.str();
}

// Muller iteration from three estimates.  Used when Newton stagnates.
inline RootResult muller(const ComplexFn& f, Complex z0, Complex z1, Complex z2,
                         const NewtonOptions& opts = {}) {
  RootResult result;
  result.trace = {z0, z1, z2};
  Complex f0 = f(z0), f1 = f(z1), f2 = f(z2);
  for (int it = 0; it < opts.max_iterations; ++it) {
    const Complex d01 = (f1 - f0) / (z1 - z0);
    const Complex d12 = (f2 - f1) / (z2 - z1);
    const Complex d012 = (d12 - d01) / (z2 - z0);
    const Complex w = d12 + (z2 - z1) * d012;
    Complex disc = std::sqrt(w * w - 4.0 * f2 * d012);
    if (std::abs(w - disc) > std::abs(w + disc)) disc = -disc;
    const Complex denom = w + disc;
    if (denom == 0.0) break;
    const Complex step = 2.0 * f2 / denom;
    z0 = z1; f0 = f1;
    z1 = z2; f1 = f2;
    z2 = z2 - step;
    f2 = f(z2);
    result.trace.push_back(z2);
    result.iterations = it + 1;
    if (std::abs(step) < opts.step_tolerance &&
        std::abs(f2) < opts.residual_tolerance) {
      result.converged = true;
      break;
    }
  }
  result.root = z2;
  result.residual = f2;
  return result;
}

// Complex Newton with the derivative approximated by a central difference of
// relative step opts.derivative_step.  Falls back to Muller on stagnation
// (residual not shrinking or vanishing derivative).
inline RootResult newton(const ComplexFn& f, Complex seed,
                         const NewtonOptions& opts = {}) {
  RootResult result;
  result.trace = {seed};
  Complex z = seed;
  Complex fz = f(z);
  double best = std::abs(fz);
  int stagnant = 0;
  for (int it = 0; it < opts.max_iterations; ++it) {
    const double h = opts.derivative_step * std::max(std::abs(z), 1e-30);
    const Complex df = (f(z + h) - f(z - h)) / (2.0 * h);
    if (df == 0.0 || !std::isfinite(std::abs(df))) {
      return muller(f, z + h, z + Complex(0.0, h), z, opts);
    }
    const Complex step = fz / df;
    z -= step;
    fz = f(z);
    result.trace.push_back(z);
    result.iterations = it + 1;
    if (std::abs(step) < opts.step_tolerance &&
        std::abs(fz) < opts.residual_tolerance) {
      result.converged = true;
      break;
    }
    if (std::abs(fz) < 0.5 * best) {
      best = std::abs(fz);
      stagnant = 0;
    } else if (++stagnant >= 5) {
      const std::size_t n = result.trace.size();
      RootResult fb = muller(f, result.trace[n - 3], result.trace[n - 2],
                             result.trace[n - 1], opts);
      fb.trace.insert(fb.trace.begin(), result.trace.begin(),
                      result.trace.end() - 3);
      fb.iterations += result.iterations;
      return fb;
    }
  }
  result.root = z;
  result.residual = fz;
  return result;
}

// Bisection on [a,b] with f(a), f(b) of opposite sign.
inline double bisect(const RealFn& f, double a, double b,
                     double rel_tolerance = 1e-14, int max_iterations = 200) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0))
    throw DomainError("bisect: endpoints do not bracket a sign change");
  for (int it = 0; it < max_iterations; ++it) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
      fb = fm;
    }
    if (b - a < rel_tolerance * std::max(std::abs(a), std::abs(b))) break;
  }
  return 0.5 * (a + b);
}

// Bisection until the bracket is narrow, then secant polish.  The secant
// iterate is rejected (and bisection resumed) whenever it leaves the bracket.
inline double bisect_then_secant(const RealFn& f, double a, double b,
                                 double rel_tolerance = 1e-9,
                                 double coarse_rel = 1e-4,
                                 int max_iterations = 200) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0))
    throw DomainError("bisect_then_secant: endpoints do not bracket a root");
  // coarse bisection
  while (b - a > coarse_rel * std::max(std::abs(a), std::abs(b))) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
      fb = fm;
    }
  }
  // secant with bracket guard
  double x0 = a, x1 = b, f0 = fa, f1 = fb;
  for (int it = 0; it < max_iterations; ++it) {
    if (f1 == f0) break;
    double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
    if (!(x2 > a && x2 < b)) x2 = 0.5 * (a + b);
    const double f2 = f(x2);
    if (f2 == 0.0) return x2;
    if ((f2 > 0.0) == (fa > 0.0)) {
      a = x2;
      fa = f2;
    } else {
      b = x2;
      fb = f2;
    }
    x0 = x1; f0 = f1;
    x1 = x2; f1 = f2;
    if (std::abs(x1 - x0) < rel_tolerance * std::abs(x1) ||
        b - a < rel_tolerance * std::abs(x1))
      return x1;
  }
  return 0.5 * (a + b);
}

}  // namespace thzdra::rootfind
