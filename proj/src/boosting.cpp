#include "costcast/boosting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "costcast/errors.hpp"

namespace costcast {

double RegressionTree::predict(std::span<const double> row) const {
    int idx = 0;
    while (nodes[idx].feature >= 0) {
        const TreeNode& n = nodes[idx];
        idx = row[n.feature] <= n.threshold ? n.left : n.right;
    }
    return nodes[idx].value;
}

double BoostedEnsemble::predict(std::span<const double> row) const {
    double out = base;
    for (const auto& tree : trees) out += learning_rate * tree.predict(row);
    return out;
}

namespace {

struct Builder {
    std::span<const double> x;
    size_t n_cols;
    const std::vector<double>& residual;
    const GbrHyper& hyper;
    std::vector<TreeNode> nodes;
    std::vector<std::pair<double, double>> scratch;  // (feature value, residual)

    double row_value(size_t row, size_t col) const { return x[row * n_cols + col]; }

    int build(std::vector<size_t>& rows, int depth) {
        double sum = 0;
        for (size_t r : rows) sum += residual[r];
        const double mean = sum / static_cast<double>(rows.size());

        int best_feature = -1;
        double best_threshold = 0, best_gain = 1e-12;
        size_t best_left_count = 0;
        if (depth < hyper.max_depth && rows.size() >= 2 * static_cast<size_t>(hyper.min_leaf)) {
            double sse_parent = 0;
            for (size_t r : rows) {
                const double d = residual[r] - mean;
                sse_parent += d * d;
            }
            for (size_t f = 0; f < n_cols; ++f) {
                scratch.clear();
                for (size_t r : rows) scratch.emplace_back(row_value(r, f), residual[r]);
                std::sort(scratch.begin(), scratch.end());
                double left_sum = 0, left_sq = 0;
                double total_sq = 0;
                for (auto& [v, t] : scratch) total_sq += t * t;
                const size_t n = scratch.size();
                for (size_t k = 0; k + 1 < n; ++k) {
                    left_sum += scratch[k].second;
                    left_sq += scratch[k].second * scratch[k].second;
                    if (scratch[k].first == scratch[k + 1].first) continue;  // no split between ties
                    const size_t nl = k + 1, nr = n - nl;
                    if (nl < static_cast<size_t>(hyper.min_leaf) ||
                        nr < static_cast<size_t>(hyper.min_leaf))
                        continue;
                    const double right_sum = sum - left_sum;
                    const double sse_l = left_sq - left_sum * left_sum / nl;
                    const double sse_r = (total_sq - left_sq) - right_sum * right_sum / nr;
                    const double gain = sse_parent - sse_l - sse_r;
                    if (gain > best_gain) {
                        best_gain = gain;
                        best_feature = static_cast<int>(f);
                        best_threshold = 0.5 * (scratch[k].first + scratch[k + 1].first);
                        best_left_count = nl;
                    }
                }
            }
        }

        const int idx = static_cast<int>(nodes.size());
        nodes.emplace_back();
        if (best_feature < 0) {
            nodes[idx].value = mean;
            return idx;
        }
        std::vector<size_t> left, right;
        left.reserve(best_left_count);
        right.reserve(rows.size() - best_left_count);
        for (size_t r : rows) {
            (row_value(r, best_feature) <= best_threshold ? left : right).push_back(r);
        }
        rows.clear();
        rows.shrink_to_fit();
        nodes[idx].feature = best_feature;
        nodes[idx].threshold = best_threshold;
        nodes[idx].left = build(left, depth + 1);
        nodes[idx].right = build(right, depth + 1);
        return idx;
    }
};

}  // namespace

BoostedEnsemble gbr_fit(std::span<const double> x, size_t n_rows, size_t n_cols,
                        std::span<const double> y, const GbrHyper& hyper) {
    if (n_rows < 2 * static_cast<size_t>(hyper.min_leaf))
        throw InsufficientHistoryError("boosting needs at least 2*min_leaf training rows");
    if (y.size() != n_rows || x.size() != n_rows * n_cols)
        throw ConfigError("boosting: design matrix and targets misaligned");

    BoostedEnsemble ens;
    ens.learning_rate = hyper.learning_rate;
    ens.base = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n_rows);

    std::vector<double> residual(n_rows);
    auto sse_of = [&] {
        double s = 0;
        for (double r : residual) s += r * r;
        return s;
    };
    for (size_t r = 0; r < n_rows; ++r) residual[r] = y[r] - ens.base;
    ens.stage_sse.push_back(sse_of());

    for (int m = 0; m < hyper.trees; ++m) {
        Builder b{x, n_cols, residual, hyper, {}, {}};
        std::vector<size_t> all(n_rows);
        std::iota(all.begin(), all.end(), size_t{0});
        b.build(all, 0);
        RegressionTree tree{std::move(b.nodes)};
        // Degenerate residuals collapse to a single zero-mean leaf; keep the
        // tree so M is as requested, its contribution is ~0.
        for (size_t r = 0; r < n_rows; ++r) {
            residual[r] -= hyper.learning_rate * tree.predict({&x[r * n_cols], n_cols});
        }
        ens.trees.push_back(std::move(tree));
        ens.stage_sse.push_back(sse_of());
    }
    return ens;
}

void GbrForecaster::fit(const SeriesPanel& panel, const FeatureMatrix& features, int fit_end_d) {
    fit_end_d_ = fit_end_d;
    const size_t end_off = panel.day_offset(fit_end_d);
    std::vector<double> x, y;
    const size_t n_cols = features.n_cols();
    for (size_t i = 0; i < panel.n_series(); ++i) {
        for (size_t t = 0; t <= end_off; ++t) {
            if (!features.is_valid(i, t)) continue;
            auto row = features.row_values(i, t);
            x.insert(x.end(), row.begin(), row.end());
            y.push_back(static_cast<double>(panel.demand(i, t)));
        }
    }
    ensemble_ = gbr_fit(x, y.size(), n_cols, y, hyper_);
}

ForecastSet GbrForecaster::predict(const SeriesPanel& panel, const FeatureMatrix& features,
                                   DayRange window, Split split) const {
    check_window(window);
    if (ensemble_.trees.empty() && ensemble_.stage_sse.empty())
        throw ReferenceError("GBR model not fitted");
    if (window.end_d > panel.last_d()) throw CoverageError("window extends past the panel horizon");
    ForecastSet fs;
    fs.model_name = "gbr";
    fs.split = split;
    fs.window = window;
    fs.n_series = panel.n_series();
    fs.values.resize(fs.n_series * window.size());
    for (size_t i = 0; i < panel.n_series(); ++i) {
        for (int d = window.start_d; d <= window.end_d; ++d) {
            fs.at(i, d) = ensemble_.predict(features.row_values(i, panel.day_offset(d)));
        }
    }
    fs.validate();
    return fs;
}

}  // namespace costcast
