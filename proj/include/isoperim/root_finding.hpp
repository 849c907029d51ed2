#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <string>

#include "isoperim/errors.hpp"

namespace isoperim {

/// A root located inside a sign-changing bracket.
template <std::floating_point Real>
struct BasicRootResult {
  Real value = 0;
  Real bracket_lo = 0;
  Real bracket_hi = 0;
  Real residual = 0;     // f(value)
  Real slope_scale = 0;  // |f(hi) - f(lo)| / (hi - lo) over the final bracket
  int iterations = 0;
  bool converged = false;

  /// |f(value)| <= 10 tol max(1, |f'|), the acceptance contract for a bracketed root.
  bool residual_within(Real tol) const {
    return std::abs(residual) <= Real(10) * tol * std::max(Real(1), slope_scale);
  }
};

using RootResult = BasicRootResult<double>;

/// Bisection on [lo, hi] where f(lo) and f(hi) differ in sign. Stops once the
/// bracket is narrower than tol or cannot be split further at this precision.
template <std::floating_point Real, class F>
BasicRootResult<Real> bisect(F&& f, Real lo, Real hi, Real tol, int max_iter,
                             const std::string& label = "bisection") {
  if (!(lo < hi)) throw DomainError(label + ": empty bracket");
  Real f_lo = f(lo);
  Real f_hi = f(hi);
  if (std::isnan(f_lo) || std::isnan(f_hi))
    throw RootNotBracketed(label + ": NaN at bracket", double(lo), double(hi), double(f_lo), double(f_hi));
  if (f_lo == 0) return {lo, lo, lo, 0, 0, 0, true};
  if (f_hi == 0) return {hi, hi, hi, 0, 0, 0, true};
  if ((f_lo < 0) == (f_hi < 0))
    throw RootNotBracketed(label + ": no sign change", double(lo), double(hi), double(f_lo), double(f_hi));

  BasicRootResult<Real> r;
  bool split_exhausted = false;
  int it = 0;
  while (it < max_iter && hi - lo > tol) {
    const Real mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) {
      split_exhausted = true;
      break;
    }
    const Real f_mid = f(mid);
    ++it;
    if (f_mid == 0) {
      lo = hi = mid;
      f_lo = f_hi = 0;
      break;
    }
    if ((f_mid < 0) == (f_lo < 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  r.bracket_lo = lo;
  r.bracket_hi = hi;
  r.value = lo + (hi - lo) / 2;
  r.residual = (lo == hi) ? Real(0) : f(r.value);
  r.slope_scale = (hi > lo) ? std::abs(f_hi - f_lo) / (hi - lo) : Real(0);
  r.iterations = it;
  r.converged = lo == hi || hi - lo <= tol || split_exhausted;
  return r;
}

}  // namespace isoperim
