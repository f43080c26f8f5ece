#include <doctest.h>

#include <numeric>

#include "costcast/features.hpp"
#include "test_util.hpp"

using namespace costcast;

TEST_CASE("rolling_mean basics") {
    std::vector<std::int64_t> ones{1, 1, 1, 1};
    CHECK(rolling_mean(std::span<const std::int64_t>(ones), 2, 3).value() == doctest::Approx(1.0));

    std::vector<std::int64_t> ramp{1, 2, 3, 4, 5, 6, 7, 8};
    CHECK(rolling_mean(std::span<const std::int64_t>(ramp), 7, 8).value() == doctest::Approx(4.0));

    std::vector<std::int64_t> short_series{1, 2, 3, 4, 5};
    CHECK(!rolling_mean(std::span<const std::int64_t>(short_series), 7, 5).has_value());
}

TEST_CASE("constant series gives constant lags and rolling means") {
    auto panel = test::make_series_panel(std::vector<std::int64_t>(60, 5));
    auto fm = build_features(panel);
    for (size_t t = 28; t < 60; ++t) {
        REQUIRE(fm.is_valid(0, t));
        for (const char* col : {"lag_1", "lag_7", "lag_14", "lag_28", "rollmean_7", "rollmean_14",
                                "rollmean_28"}) {
            CHECK(fm.at(0, t, fm.column(col)) == doctest::Approx(5.0));
        }
    }
}

TEST_CASE("ramp series 1..40: values at t=29 (1-based)") {
    std::vector<std::int64_t> ramp(40);
    std::iota(ramp.begin(), ramp.end(), 1);
    auto panel = test::make_series_panel(ramp);
    auto fm = build_features(panel);
    const size_t t = 28;  // 0-based offset of day 29
    REQUIRE(fm.is_valid(0, t));
    CHECK(fm.at(0, t, fm.column("lag_1")) == doctest::Approx(28.0));
    CHECK(fm.at(0, t, fm.column("lag_7")) == doctest::Approx(22.0));
    CHECK(fm.at(0, t, fm.column("lag_28")) == doctest::Approx(1.0));
    CHECK(fm.at(0, t, fm.column("rollmean_7")) == doctest::Approx(25.0));
}

TEST_CASE("warm-up rows are invalid, day axis is not truncated") {
    auto panel = test::make_series_panel(std::vector<std::int64_t>(50, 3));
    auto fm = build_features(panel);
    CHECK(fm.n_days == 50);
    for (size_t t = 0; t < 28; ++t) CHECK(!fm.is_valid(0, t));
    for (size_t t = 28; t < 50; ++t) CHECK(fm.is_valid(0, t));
}

TEST_CASE("leakage: perturbing day t leaves rows <= t unchanged") {
    std::vector<std::int64_t> base(70);
    for (size_t i = 0; i < base.size(); ++i) base[i] = static_cast<std::int64_t>(i % 9);
    auto fm_a = build_features(test::make_series_panel(base));
    const size_t t_perturb = 40;
    auto perturbed = base;
    perturbed[t_perturb] += 100;
    auto fm_b = build_features(test::make_series_panel(perturbed));
    for (size_t t = 0; t <= t_perturb; ++t) {
        auto ra = fm_a.row_values(0, t);
        auto rb = fm_b.row_values(0, t);
        for (size_t c = 0; c < ra.size(); ++c) CHECK(ra[c] == rb[c]);
    }
    // and the very next day's lag_1 does change
    CHECK(fm_a.at(0, t_perturb + 1, fm_a.column("lag_1")) !=
          fm_b.at(0, t_perturb + 1, fm_b.column("lag_1")));
}

TEST_CASE("shifting demand by c shifts lag/rollmean columns by c, calendar unchanged") {
    std::vector<std::int64_t> base(60);
    for (size_t i = 0; i < base.size(); ++i) base[i] = static_cast<std::int64_t>((i * 7) % 11);
    auto shifted = base;
    for (auto& v : shifted) v += 4;
    auto fm_a = build_features(test::make_series_panel(base));
    auto fm_b = build_features(test::make_series_panel(shifted));
    const std::vector<std::string> shift_cols{"lag_1",      "lag_7",      "lag_14",    "lag_28",
                                             "rollmean_7", "rollmean_14", "rollmean_28"};
    for (size_t t = 28; t < 60; ++t) {
        for (const auto& col : shift_cols) {
            const int c = fm_a.column(col);
            CHECK(fm_b.at(0, t, c) - fm_a.at(0, t, c) == doctest::Approx(4.0));
        }
        for (size_t c = 0; c < fm_a.n_cols(); ++c) {
            const std::string& name = fm_a.column_names[c];
            if (std::find(shift_cols.begin(), shift_cols.end(), name) != shift_cols.end()) continue;
            CHECK(fm_a.at(0, t, c) == fm_b.at(0, t, c));
        }
    }
}

TEST_CASE("calendar one-hots and raw columns") {
    auto panel = test::make_series_panel(std::vector<std::int64_t>(35, 1));
    auto fm = build_features(panel);
    const size_t t = 30;
    const int wd = panel.days()[t].weekday;
    CHECK(fm.at(0, t, fm.column("weekday")) == doctest::Approx(wd));
    CHECK(fm.at(0, t, fm.column("wd_" + std::to_string(wd))) == doctest::Approx(1.0));
    CHECK(fm.at(0, t, fm.column("mo_1")) == doctest::Approx(1.0));
    CHECK(fm.at(0, t, fm.column("mo_2")) == doctest::Approx(0.0));
}
