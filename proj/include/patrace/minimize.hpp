#pragma once

#include <functional>

namespace patrace {

// Golden-section search for the minimizer of f on [lo, hi]; shrinks the
// bracket to width `tol` and returns its midpoint. f is evaluated on
// decimal values; exact minimization in p is out of scope.
double golden_section_min(const std::function<double(double)>& f, double lo,
                          double hi, double tol = 1e-6);

}  // namespace patrace
