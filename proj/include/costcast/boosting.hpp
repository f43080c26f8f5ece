#pragma once

#include <span>
#include <string>
#include <vector>

#include "costcast/forecast.hpp"

namespace costcast {

struct GbrHyper {
    int trees = 300;
    double learning_rate = 0.05;
    int max_depth = 6;
    int min_leaf = 20;
};

struct TreeNode {
    int feature = -1;  // -1: leaf
    double threshold = 0;
    int left = -1;
    int right = -1;
    double value = 0;  // leaf value (mean residual)
};

struct RegressionTree {
    std::vector<TreeNode> nodes;
    double predict(std::span<const double> row) const;
};

// Stagewise least-squares boosting: each tree fits the residuals of the
// current ensemble with greedy axis-aligned SSE splits, leaf = mean residual.
// prediction = base + learning_rate * sum of tree outputs.
struct BoostedEnsemble {
    double base = 0;
    double learning_rate = 0.05;
    std::vector<RegressionTree> trees;
    double predict(std::span<const double> row) const;
    // Training SSE after each stage (stage 0 = base only); non-increasing.
    std::vector<double> stage_sse;
};

// Core fitter over a dense row-major design matrix.
BoostedEnsemble gbr_fit(std::span<const double> x, size_t n_rows, size_t n_cols,
                        std::span<const double> y, const GbrHyper& hyper);

// Pooled global model over all series; trains on valid feature rows with
// d <= fit_end_d, target = realized demand of the row's day.
class GbrForecaster final : public Forecaster {
public:
    explicit GbrForecaster(GbrHyper hyper = {}) : hyper_(hyper) {}
    std::string name() const override { return "gbr"; }
    void fit(const SeriesPanel& panel, const FeatureMatrix& features, int fit_end_d) override;
    ForecastSet predict(const SeriesPanel& panel, const FeatureMatrix& features, DayRange window,
                        Split split) const override;
    const BoostedEnsemble& ensemble() const { return ensemble_; }
    const GbrHyper& hyper() const { return hyper_; }

private:
    GbrHyper hyper_;
    BoostedEnsemble ensemble_;
};

}  // namespace costcast
