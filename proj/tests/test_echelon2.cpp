#include <doctest.h>

#include <random>

#include "costcast/echelon2.hpp"
#include "costcast/errors.hpp"
#include "test_util.hpp"

using namespace costcast;

TEST_CASE("aggregate_dc_demand sums stores and clamps the DC order") {
    auto panel = test::make_panel({{9, 1, 2}, {9, 3, 4}});
    SUBCASE("sums") {
        auto fc = test::make_fs("m", {2, 3}, {{1.5, 1.0}, {2.5, 2.0}});
        auto dc = aggregate_dc_demand(fc, panel, {0, 1});
        CHECK(dc.realized[0] == doctest::Approx(4.0));
        CHECK(dc.realized[1] == doctest::Approx(6.0));
        CHECK(dc.forecast[0] == doctest::Approx(4.0));
        CHECK(dc.dc_order[0] == doctest::Approx(4.0));
    }
    SUBCASE("all-negative forecasts give a zero order") {
        auto fc = test::make_fs("m", {2, 3}, {{-1.0, -2.0}, {-0.5, -3.0}});
        auto dc = aggregate_dc_demand(fc, panel, {0, 1});
        CHECK(dc.dc_order[0] == doctest::Approx(0.0));
        CHECK(dc.dc_order[1] == doctest::Approx(0.0));
    }
    SUBCASE("empty store set is a config error") {
        auto fc = test::make_fs("m", {2, 3}, {{1, 1}, {1, 1}});
        CHECK_THROWS_AS(aggregate_dc_demand(fc, panel, {}), ConfigError);
    }
}

TEST_CASE("allocate: abundant, scarce, and zero-request cases") {
    auto f1 = allocate({2, 2}, 10);
    CHECK(f1[0] == doctest::Approx(2.0));
    CHECK(f1[1] == doctest::Approx(2.0));
    auto f2 = allocate({6, 2}, 4);
    CHECK(f2[0] == doctest::Approx(3.0).epsilon(1e-7));
    CHECK(f2[1] == doctest::Approx(1.0).epsilon(1e-7));
    auto f3 = allocate({0, 0}, 4);
    CHECK(f3[0] == doctest::Approx(0.0));
    CHECK(f3[1] == doctest::Approx(0.0));
}

TEST_CASE("worked 1-day example: network cost 40, fill rate 0.5") {
    auto panel = test::make_panel({{9, 3}, {9, 5}});
    auto fc = test::make_fs("m", {2, 2}, {{2.0}, {2.0}});
    EchelonConfig cfg;
    cfg.store_set = {0, 1};
    cfg.dc_cost = CostParams(1.0, 5.0);
    cfg.store_shortage = 5.0;
    cfg.initial_dc_inventory = 0.0;
    auto out = simulate_network(fc, panel, cfg);
    CHECK(out.avg_network_cost == doctest::Approx(40.0).epsilon(1e-9));
    CHECK(out.network_fill_rate == doctest::Approx(0.5).epsilon(1e-7));
}

TEST_CASE("perfect store forecasts give fill rate 1 and no store penalty") {
    auto panel = test::make_panel({{9, 3, 7, 2}, {9, 5, 1, 6}});
    auto fc = test::make_fs("m", {2, 4}, {{3, 7, 2}, {5, 1, 6}});
    EchelonConfig cfg;
    cfg.store_set = {0, 1};
    cfg.dc_cost = CostParams(1.0, 5.0);
    cfg.store_shortage = 5.0;
    auto out = simulate_network(fc, panel, cfg);
    CHECK(out.network_fill_rate == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(out.per_store_shortfall[0] == doctest::Approx(0.0));
    CHECK(out.per_store_shortfall[1] == doctest::Approx(0.0));
    CHECK(out.avg_network_cost == doctest::Approx(0.0));
}

TEST_CASE("zero forecasts: everything is a shortage") {
    auto panel = test::make_panel({{9, 3, 7}, {9, 5, 1}});
    auto fc = test::make_fs("m", {2, 3}, {{0, 0}, {0, 0}});
    EchelonConfig cfg;
    cfg.store_set = {0, 1};
    cfg.dc_cost = CostParams(1.0, 5.0);
    cfg.store_shortage = 2.0;
    auto out = simulate_network(fc, panel, cfg);
    CHECK(out.network_fill_rate == doctest::Approx(0.0));
    // per day: b_DC * D_DC + b_S * sum store demand
    const double expect = ((5.0 * 8 + 2.0 * 8) + (5.0 * 8 + 2.0 * 8)) / 2.0;
    CHECK(out.avg_network_cost == doctest::Approx(expect).epsilon(1e-9));
}

namespace {

EchelonConfig random_cfg(std::mt19937& rng, size_t n_stores) {
    std::uniform_real_distribution<double> cost(0.5, 8.0), inv(0.0, 20.0);
    EchelonConfig cfg;
    for (size_t i = 0; i < n_stores; ++i) cfg.store_set.push_back(i);
    cfg.dc_cost = CostParams(cost(rng), cost(rng));
    cfg.store_shortage = cost(rng);
    cfg.initial_dc_inventory = inv(rng);
    return cfg;
}

}  // namespace

TEST_CASE("properties: conservation, proportionality, bounded fill rate") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> demand(0, 12);
    std::uniform_real_distribution<double> fval(-4.0, 15.0);
    for (int rep = 0; rep < 60; ++rep) {
        const size_t ns = 1 + rep % 4;
        const int nd = 2 + rep % 8;
        std::vector<std::vector<std::int64_t>> d(ns, std::vector<std::int64_t>(nd + 1));
        std::vector<std::vector<double>> f(ns, std::vector<double>(nd));
        for (auto& row : d)
            for (auto& v : row) v = demand(rng);
        for (auto& row : f)
            for (auto& v : row) v = fval(rng);
        auto panel = test::make_panel(d);
        auto fc = test::make_fs("m", {2, nd + 1}, f);
        auto cfg = random_cfg(rng, ns);
        auto out = simulate_network(fc, panel, cfg);

        CHECK(out.network_fill_rate >= 0.0);
        CHECK(out.network_fill_rate <= 1.0 + 1e-12);
        for (double inv : out.dc_inventory_trace) CHECK(inv >= 0.0);

        // Conservation + proportionality re-derived day by day.
        double inventory = cfg.initial_dc_inventory;
        for (int k = 0; k < nd; ++k) {
            const int day = 2 + k;
            std::vector<double> requests(ns);
            double forecast_sum = 0;
            for (size_t s = 0; s < ns; ++s) {
                requests[s] = std::max(0.0, fc.at(s, day));
                forecast_sum += fc.at(s, day);
            }
            const double available = inventory + std::max(0.0, forecast_sum);
            auto fulfil = allocate(requests, available);
            double shipped = 0;
            for (double x : fulfil) shipped += x;
            CHECK(shipped <= available + 1e-9);
            for (size_t a = 0; a < ns; ++a) {
                for (size_t b = 0; b < ns; ++b) {
                    if (requests[a] > 0 && requests[b] > 0) {
                        CHECK(fulfil[a] * requests[b] ==
                              doctest::Approx(fulfil[b] * requests[a]).epsilon(1e-9));
                    }
                }
            }
            inventory = std::max(0.0, available - shipped);
        }
    }
}

TEST_CASE("fill rate is non-decreasing in initial DC inventory") {
    auto panel = test::make_panel({{9, 6, 7, 3}, {9, 4, 2, 8}});
    auto fc = test::make_fs("m", {2, 4}, {{2, 3, 1}, {3, 1, 4}});
    EchelonConfig cfg;
    cfg.store_set = {0, 1};
    cfg.dc_cost = CostParams(1.0, 5.0);
    cfg.store_shortage = 5.0;
    double prev = -1;
    for (double inv : {0.0, 2.0, 5.0, 10.0, 50.0}) {
        cfg.initial_dc_inventory = inv;
        auto out = simulate_network(fc, panel, cfg);
        CHECK(out.network_fill_rate >= prev - 1e-12);
        prev = out.network_fill_rate;
    }
}

TEST_CASE("single store with abundant supply reduces to single-echelon shortages") {
    auto panel = test::make_panel({{9, 6, 7, 3, 5, 8}});
    auto fc = test::make_fs("m", {2, 6}, {{2.0, 8.5, 1.0, 6.0, 4.0}});
    EchelonConfig cfg;
    cfg.store_set = {0};
    cfg.dc_cost = CostParams(1.0, 5.0);
    cfg.store_shortage = 5.0;
    cfg.initial_dc_inventory = 1e6;
    auto out = simulate_network(fc, panel, cfg);
    auto single = simulate(fc, panel, CostParams(1.0, 5.0));
    CHECK(out.per_store_shortfall[0] ==
          doctest::Approx(single.total_shortage_units).epsilon(1e-9));
}
