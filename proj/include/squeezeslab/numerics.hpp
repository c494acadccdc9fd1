#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace squeezeslab::numerics {

using RealFunction = std::function<double(double)>;
using ComplexFunction = std::function<std::complex<double>(double)>;

/// Interval with a sign change: f_lo * f_hi < 0.
struct Bracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;
};

/// Evaluates f at both ends; throws DomainError unless the values bracket a root.
Bracket make_bracket(const RealFunction& f, double lo, double hi);

struct RootResult {
  double x;
  int iterations;
};

/// Bisection until the bracket width is <= tol. Iterations never exceed
/// ceil(log2((hi - lo) / tol)).
RootResult bisect(const RealFunction& f, Bracket bracket, double tol);

double find_root(const RealFunction& f, const Bracket& bracket, double tol);

enum class ExtremumKind { minimum, maximum };

struct GridExtremum {
  double x;
  ExtremumKind kind;
};

/// Golden-section search for a minimum (or maximum) of f on [lo, hi],
/// stopping when the interval is shorter than tol.
double golden_section(const RealFunction& f, double lo, double hi, double tol,
                      ExtremumKind kind);

/// Dense-scan extremum oracle: samples f at lo + i*step, flags interior local
/// extrema by three-point comparison and refines each by golden section to step/100.
std::vector<GridExtremum> grid_scan_extrema(const RealFunction& f, double lo, double hi,
                                            double step);

/// Plain central difference (order 1: two-point, order 2: five-point), no extrapolation.
std::complex<double> central_difference(const ComplexFunction& f, double x0, double h,
                                        int order);

/// Central difference combined with one Richardson step (h and h/2).
std::complex<double> finite_diff(const ComplexFunction& f, double x0, double h, int order);

}  // namespace squeezeslab::numerics
