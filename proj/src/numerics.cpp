#include "squeezeslab/numerics.hpp"

#include <cmath>
#include <sstream>

#include "squeezeslab/errors.hpp"

namespace squeezeslab::numerics {

Bracket make_bracket(const RealFunction& f, double lo, double hi) {
  if (!(lo < hi)) throw DomainError("bracket requires lo < hi");
  Bracket b{lo, hi, f(lo), f(hi)};
  if (!(b.f_lo * b.f_hi <= 0.0)) {
    std::ostringstream msg;
    msg << "no sign change on [" << lo << ", " << hi << "]: f(lo)=" << b.f_lo
        << " f(hi)=" << b.f_hi;
    throw DomainError(msg.str());
  }
  return b;
}

RootResult bisect(const RealFunction& f, Bracket bracket, double tol) {
  if (!(tol > 0.0)) throw DomainError("bisection tolerance must be positive");
  if (!(bracket.lo < bracket.hi)) throw DomainError("bracket requires lo < hi");
  if (bracket.f_lo == 0.0) return {bracket.lo, 0};
  if (bracket.f_hi == 0.0) return {bracket.hi, 0};
  if (!(bracket.f_lo * bracket.f_hi < 0.0)) throw DomainError("invalid bracket: no sign change");

  int iterations = 0;
  while (bracket.hi - bracket.lo > tol) {
    const double mid = 0.5 * (bracket.lo + bracket.hi);
    if (mid <= bracket.lo || mid >= bracket.hi) break;  // interval at machine resolution
    const double f_mid = f(mid);
    ++iterations;
    if (f_mid == 0.0) return {mid, iterations};
    if ((f_mid < 0.0) == (bracket.f_lo < 0.0)) {
      bracket.lo = mid;
      bracket.f_lo = f_mid;
    } else {
      bracket.hi = mid;
      bracket.f_hi = f_mid;
    }
  }
  return {0.5 * (bracket.lo + bracket.hi), iterations};
}

double find_root(const RealFunction& f, const Bracket& bracket, double tol) {
  return bisect(f, bracket, tol).x;
}

double golden_section(const RealFunction& f, double lo, double hi, double tol,
                      ExtremumKind kind) {
  const double sign = kind == ExtremumKind::minimum ? 1.0 : -1.0;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = sign * f(x1);
  double f2 = sign * f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = sign * f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = sign * f(x2);
    }
  }
  return 0.5 * (a + b);
}

std::vector<GridExtremum> grid_scan_extrema(const RealFunction& f, double lo, double hi,
                                            double step) {
  if (!(step > 0.0) || !(lo < hi)) throw DomainError("grid scan needs lo < hi and step > 0");
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step)) + 1;
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) values[i] = f(lo + static_cast<double>(i) * step);

  std::vector<GridExtremum> out;
  for (std::size_t i = 1; i + 1 < count; ++i) {
    const double prev = values[i - 1], here = values[i], next = values[i + 1];
    ExtremumKind kind;
    if (here > prev && here >= next) {
      kind = ExtremumKind::maximum;
    } else if (here < prev && here <= next) {
      kind = ExtremumKind::minimum;
    } else {
      continue;
    }
    const double x = lo + static_cast<double>(i) * step;
    out.push_back({golden_section(f, x - step, x + step, step / 100.0, kind), kind});
  }
  return out;
}

std::complex<double> central_difference(const ComplexFunction& f, double x0, double h,
                                        int order) {
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  switch (order) {
    case 1:
      return (f(x0 + h) - f(x0 - h)) / (2.0 * h);
    case 2:
      return (-f(x0 + 2.0 * h) + 16.0 * f(x0 + h) - 30.0 * f(x0) + 16.0 * f(x0 - h) -
              f(x0 - 2.0 * h)) /
             (12.0 * h * h);
    default:
      throw DomainError("finite-difference order must be 1 or 2");
  }
}

std::complex<double> finite_diff(const ComplexFunction& f, double x0, double h, int order) {
  const auto coarse = central_difference(f, x0, h, order);
  const auto fine = central_difference(f, x0, 0.5 * h, order);
  // Leading error terms: h^2 for the two-point stencil, h^4 for the five-point one.
  const double factor = order == 1 ? 4.0 : 16.0;
  return (factor * fine - coarse) / (factor - 1.0);
}

}  // namespace squeezeslab::numerics
