#include "costcast/optimize.hpp"

#include <algorithm>
#include <cmath>

namespace costcast {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, double step, double ftol, int max_iter) {
    const size_t n = x0.size();
    std::vector<std::vector<double>> pts(n + 1, x0);
    std::vector<double> fv(n + 1);
    for (size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
    for (size_t i = 0; i <= n; ++i) fv[i] = f(pts[i]);

    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
    NelderMeadResult res;
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        std::vector<size_t> order(n + 1);
        for (size_t i = 0; i <= n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return fv[a] < fv[b]; });
        {
            std::vector<std::vector<double>> p2;
            std::vector<double> f2;
            for (size_t i : order) {
                p2.push_back(pts[i]);
                f2.push_back(fv[i]);
            }
            pts = std::move(p2);
            fv = std::move(f2);
        }
        if (std::fabs(fv[n] - fv[0]) <= ftol * (std::fabs(fv[0]) + ftol)) {
            res.converged = true;
            break;
        }
        std::vector<double> centroid(n, 0.0);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) centroid[j] += pts[i][j] / n;

        auto blend = [&](const std::vector<double>& from, double coef) {
            std::vector<double> p(n);
            for (size_t j = 0; j < n; ++j) p[j] = centroid[j] + coef * (centroid[j] - from[j]);
            return p;
        };
        std::vector<double> xr = blend(pts[n], alpha);
        double fr = f(xr);
        if (fr < fv[0]) {
            std::vector<double> xe = blend(pts[n], gamma);
            double fe = f(xe);
            if (fe < fr) {
                pts[n] = std::move(xe);
                fv[n] = fe;
            } else {
                pts[n] = std::move(xr);
                fv[n] = fr;
            }
        } else if (fr < fv[n - 1]) {
            pts[n] = std::move(xr);
            fv[n] = fr;
        } else {
            std::vector<double> xc = blend(pts[n], -rho);
            double fc = f(xc);
            if (fc < fv[n]) {
                pts[n] = std::move(xc);
                fv[n] = fc;
            } else {
                for (size_t i = 1; i <= n; ++i) {
                    for (size_t j = 0; j < n; ++j)
                        pts[i][j] = pts[0][j] + sigma * (pts[i][j] - pts[0][j]);
                    fv[i] = f(pts[i]);
                }
            }
        }
    }
    size_t best = 0;
    for (size_t i = 1; i <= n; ++i)
        if (fv[i] < fv[best]) best = i;
    res.x = pts[best];
    res.value = fv[best];
    res.iterations = iter;
    return res;
}

}  // namespace costcast
