#include <doctest.h>

#include <random>

#include "costcast/errors.hpp"
#include "costcast/newsvendor.hpp"
#include "test_util.hpp"

using namespace costcast;

TEST_CASE("order mapping clamps negatives only") {
    CHECK(order_from_forecast(-1.4) == doctest::Approx(0.0));
    CHECK(order_from_forecast(0.0) == doctest::Approx(0.0));
    CHECK(order_from_forecast(3.2) == doctest::Approx(3.2));
}

TEST_CASE("period cost arithmetic") {
    CostParams params(1.0, 5.0);
    CHECK(period_cost(4.0, 4.0, params) == doctest::Approx(0.0));
    CHECK(period_cost(5.0, 3.0, params) == doctest::Approx(2.0));
    CHECK(period_cost(3.0, 5.0, params) == doctest::Approx(10.0));
}

TEST_CASE("cost params must be positive") {
    CHECK_THROWS_AS(CostParams(0.0, 5.0), ConfigError);
    CHECK_THROWS_AS(CostParams(1.0, -2.0), ConfigError);
}

TEST_CASE("3-day hand trace") {
    auto panel = test::make_panel({{9, 2, 4, 1}});
    auto fc = test::make_fs("m", {2, 4}, {{3, 3, 3}});
    auto out = simulate(fc, panel, CostParams(1.0, 2.0));
    CHECK(out.per_day_costs[0] == doctest::Approx(1.0));
    CHECK(out.per_day_costs[1] == doctest::Approx(2.0));
    CHECK(out.per_day_costs[2] == doctest::Approx(2.0));
    CHECK(out.avg_cost == doctest::Approx(5.0 / 3.0).epsilon(1e-12));
    CHECK(out.fill_rate == doctest::Approx(1.0 - 1.0 / 7.0).epsilon(1e-6));
}

TEST_CASE("perfect forecasts: zero cost, full fill") {
    auto panel = test::make_panel({{5, 3, 8, 2}});
    auto fc = test::make_fs("m", {2, 4}, {{3, 8, 2}});
    auto out = simulate(fc, panel, CostParams(1.0, 5.0));
    CHECK(out.avg_cost == doctest::Approx(0.0));
    CHECK(out.fill_rate == doctest::Approx(1.0).epsilon(1e-8));
}

namespace {

// Brute-force oracle: day-by-day recomputation straight from the definitions,
// independent of SimOutcome's aggregation.
struct Oracle {
    double avg_cost, fill_rate;
};

Oracle brute_force(const ForecastSet& fc, const SeriesPanel& panel, double h, double b) {
    double total_cost = 0, shortage = 0, demand_total = 0;
    size_t cells = 0;
    for (size_t i = 0; i < fc.n_series; ++i) {
        for (int d = fc.window.start_d; d <= fc.window.end_d; ++d) {
            const double q = fc.at(i, d) > 0 ? fc.at(i, d) : 0.0;
            const double dem = static_cast<double>(panel.demand_at(i, d));
            total_cost += h * std::max(q - dem, 0.0) + b * std::max(dem - q, 0.0);
            shortage += std::max(dem - q, 0.0);
            demand_total += dem;
            ++cells;
        }
    }
    return {total_cost / cells, 1.0 - shortage / (demand_total + 1e-8)};
}

}  // namespace

TEST_CASE("oracle equivalence on randomized small instances") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> n_series_dist(1, 3), n_days_dist(1, 10), demand(0, 15);
    std::uniform_real_distribution<double> fval(-3.0, 18.0), cost(0.1, 10.0);
    for (int rep = 0; rep < 200; ++rep) {
        const int ns = n_series_dist(rng), nd = n_days_dist(rng);
        std::vector<std::vector<std::int64_t>> d(ns, std::vector<std::int64_t>(nd + 1));
        std::vector<std::vector<double>> f(ns, std::vector<double>(nd));
        for (auto& row : d)
            for (auto& v : row) v = demand(rng);
        for (auto& row : f)
            for (auto& v : row) v = fval(rng);
        auto panel = test::make_panel(d);
        auto fc = test::make_fs("m", {2, nd + 1}, f);
        const double h = cost(rng), b = cost(rng);
        auto out = simulate(fc, panel, CostParams(h, b));
        auto oracle = brute_force(fc, panel, h, b);
        CHECK(out.avg_cost == doctest::Approx(oracle.avg_cost).epsilon(1e-12));
        CHECK(out.fill_rate == doctest::Approx(oracle.fill_rate).epsilon(1e-12));
    }
}

TEST_CASE("avg_cost identity against unit totals") {
    auto panel = test::make_panel({{3, 1, 9, 4}, {2, 8, 0, 5}});
    auto fc = test::make_fs("m", {2, 4}, {{2.5, 4.0, 7.0}, {6.0, 1.0, 5.0}});
    CostParams params(1.5, 4.0);
    auto out = simulate(fc, panel, params);
    const double expect = (params.holding * out.total_overage_units +
                           params.shortage * out.total_shortage_units) /
                          (2.0 * 3.0);
    CHECK(out.avg_cost == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("affinity in b for fixed forecasts") {
    auto panel = test::make_panel({{3, 1, 9, 4, 2, 7}});
    auto fc = test::make_fs("m", {2, 6}, {{2.5, 4.0, 7.0, 1.0, 3.0}});
    const double h = 1.0;
    auto c2 = simulate(fc, panel, CostParams(h, 2)).avg_cost;
    auto c5 = simulate(fc, panel, CostParams(h, 5)).avg_cost;
    auto c10 = simulate(fc, panel, CostParams(h, 10)).avg_cost;
    // Three-point collinearity.
    CHECK((c5 - c2) / 3.0 == doctest::Approx((c10 - c5) / 5.0).epsilon(1e-12));
    // Fill rate is invariant in b.
    CHECK(simulate(fc, panel, CostParams(h, 2)).fill_rate ==
          simulate(fc, panel, CostParams(h, 10)).fill_rate);
}

TEST_CASE("clamping a negative forecast never increases cost") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> demand(0, 10);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<std::int64_t> d{0, demand(rng), demand(rng), demand(rng)};
        auto panel = test::make_series_panel(d);
        std::uniform_real_distribution<double> fval(-6.0, 2.0);
        std::vector<double> f{fval(rng), fval(rng), fval(rng)};
        auto fc = test::make_fs("m", {2, 4}, {f});
        auto clamped = f;
        for (auto& v : clamped)
            if (v < 0) v = 0;
        auto fc2 = test::make_fs("m", {2, 4}, {clamped});
        CostParams params(1.0, 5.0);
        CHECK(simulate(fc2, panel, params).avg_cost <=
              simulate(fc, panel, params).avg_cost + 1e-12);
    }
}

TEST_CASE("round_orders flag rounds to nearest") {
    auto panel = test::make_panel({{5, 3}});
    auto fc = test::make_fs("m", {2, 2}, {{2.6}});
    auto out = simulate(fc, panel, CostParams(1.0, 1.0), /*round_orders=*/true);
    CHECK(out.avg_cost == doctest::Approx(0.0));  // round(2.6)=3 == demand
}
