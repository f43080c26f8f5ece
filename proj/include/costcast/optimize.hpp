#pragma once

#include <functional>
#include <vector>

namespace costcast {

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0;
    bool converged = false;
    int iterations = 0;
};

// Derivative-free simplex minimizer. Deterministic: fixed initial simplex,
// no randomized restarts. Stops when the function spread over the simplex
// drops below ftol or the iteration budget is exhausted.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, double step = 0.25, double ftol = 1e-10,
                             int max_iter = 2000);

}  // namespace costcast
