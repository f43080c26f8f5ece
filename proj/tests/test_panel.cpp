#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "costcast/errors.hpp"
#include "costcast/panel.hpp"
#include "test_util.hpp"

using namespace costcast;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    auto p = fs::temp_directory_path() / "costcast_panel_tests";
    fs::create_directories(p);
    return p;
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p);
    out << content;
}

std::string tiny_calendar(int days) {
    std::ostringstream os;
    os << "date,wm_yr_wk,weekday,wday,month,year,d,event_name_1,event_type_1,"
          "event_name_2,event_type_2,snap_CA,snap_TX,snap_WI\n";
    for (int d = 1; d <= days; ++d) {
        os << "2011-01-" << d << ",11101,Saturday," << ((d - 1) % 7 + 1) << ",1,2011,d_" << d
           << ",,,,,0,0,0\n";
    }
    return os.str();
}

const std::string kTinyHeader = "id,item_id,dept_id,cat_id,store_id,state_id";

std::string file_bytes(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool panels_equal(const SeriesPanel& a, const SeriesPanel& b) {
    if (a.n_series() != b.n_series() || a.n_days() != b.n_days()) return false;
    for (size_t i = 0; i < a.n_series(); ++i) {
        if (!(a.keys()[i] == b.keys()[i])) return false;
        for (size_t t = 0; t < a.n_days(); ++t) {
            if (a.demand(i, t) != b.demand(i, t)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("load_panel: 1-series 5-day fixture round-trips values") {
    auto dir = temp_dir();
    write_file(dir / "cal.csv", tiny_calendar(5));
    write_file(dir / "sales.csv",
               kTinyHeader + ",d_1,d_2,d_3,d_4,d_5\n"
               "X_CA_1_validation,X,FOODS_1,FOODS,CA_1,CA,3,0,7,2,9\n");
    auto panel = load_panel((dir / "sales.csv").string(), (dir / "cal.csv").string(), {});
    REQUIRE(panel.n_series() == 1);
    REQUIRE(panel.n_days() == 5);
    CHECK(panel.demand(0, 0) == 3);
    CHECK(panel.demand(0, 2) == 7);
    CHECK(panel.demand(0, 4) == 9);
    CHECK(panel.keys()[0].state_id == "CA");
}

TEST_CASE("load_panel: missing d column is rejected") {
    auto dir = temp_dir();
    write_file(dir / "cal.csv", tiny_calendar(4));
    write_file(dir / "sales.csv",
               kTinyHeader + ",d_1,d_2,d_4\n"
               "X_CA_1_validation,X,FOODS_1,FOODS,CA_1,CA,1,2,4\n");
    CHECK_THROWS_AS(load_panel((dir / "sales.csv").string(), (dir / "cal.csv").string(), {}),
                    FormatError);
}

TEST_CASE("load_panel: duplicate d column is rejected") {
    auto dir = temp_dir();
    write_file(dir / "cal.csv", tiny_calendar(2));
    write_file(dir / "sales.csv",
               kTinyHeader + ",d_1,d_2,d_2\n"
               "X_CA_1_validation,X,FOODS_1,FOODS,CA_1,CA,1,2,2\n");
    CHECK_THROWS_AS(load_panel((dir / "sales.csv").string(), (dir / "cal.csv").string(), {}),
                    FormatError);
}

TEST_CASE("load_panel: calendar shorter than sales horizon") {
    auto dir = temp_dir();
    write_file(dir / "cal.csv", tiny_calendar(3));
    write_file(dir / "sales.csv",
               kTinyHeader + ",d_1,d_2,d_3,d_4\n"
               "X_CA_1_validation,X,FOODS_1,FOODS,CA_1,CA,1,2,3,4\n");
    CHECK_THROWS_AS(load_panel((dir / "sales.csv").string(), (dir / "cal.csv").string(), {}),
                    CoverageError);
}

TEST_CASE("load_panel: non-numeric demand names the cell") {
    auto dir = temp_dir();
    write_file(dir / "cal.csv", tiny_calendar(3));
    write_file(dir / "sales.csv",
               kTinyHeader + ",d_1,d_2,d_3\n"
               "X_CA_1_validation,X,FOODS_1,FOODS,CA_1,CA,1,oops,3\n");
    try {
        load_panel((dir / "sales.csv").string(), (dir / "cal.csv").string(), {});
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("d_2") != std::string::npos);
        CHECK(msg.find("X") != std::string::npos);
    }
}

TEST_CASE("load_panel: filter selects matching series only") {
    auto dir = temp_dir();
    write_file(dir / "cal.csv", tiny_calendar(3));
    write_file(dir / "sales.csv",
               kTinyHeader + ",d_1,d_2,d_3\n"
               "A_CA_1_validation,A,FOODS_1,FOODS,CA_1,CA,1,2,3\n"
               "B_TX_1_validation,B,FOODS_1,FOODS,TX_1,TX,4,5,6\n");
    auto panel = load_panel((dir / "sales.csv").string(), (dir / "cal.csv").string(),
                            {{"state_id", "CA"}});
    CHECK(panel.n_series() == 1);
    CHECK(panel.keys()[0].item_id == "A");
    CHECK_THROWS_AS(load_panel((dir / "sales.csv").string(), (dir / "cal.csv").string(),
                               {{"state_id", "WI"}}),
                    CoverageError);
}

TEST_CASE("fixture loads with calendar join and event flags") {
    std::string dir = FIXTURE_DIR;
    auto panel = load_panel(dir + "/sales.csv", dir + "/calendar.csv",
                            {{"state_id", "CA"}, {"dept_id", "FOODS_1"}});
    CHECK(panel.n_series() == 5);
    CHECK(panel.n_days() == 200);
    CHECK(panel.first_d() == 1);
    CHECK(panel.event_names().size() == 3);
    // d_30 carries an event in the fixture calendar
    CHECK(panel.days()[29].event_ids.size() == 1);
    CHECK(panel.days()[0].weekday == 1);
}

TEST_CASE("panel round-trip through wide CSV is byte-stable") {
    std::string dir = FIXTURE_DIR;
    auto panel = load_panel(dir + "/sales.csv", dir + "/calendar.csv", {{"state_id", "CA"}});
    auto out1 = temp_dir() / "rt1.csv";
    auto out2 = temp_dir() / "rt2.csv";
    write_sales_csv(panel, out1.string());
    auto reloaded = load_panel(out1.string(), dir + "/calendar.csv", {});
    CHECK(panels_equal(panel, reloaded));
    write_sales_csv(reloaded, out2.string());
    CHECK(file_bytes(out1) == file_bytes(out2));
}

TEST_CASE("filtering is idempotent") {
    std::string dir = FIXTURE_DIR;
    auto panel = load_panel(dir + "/sales.csv", dir + "/calendar.csv", {});
    Filter f{{"store_id", "CA_1"}};
    auto once = filter_panel(panel, f);
    auto twice = filter_panel(once, f);
    CHECK(panels_equal(once, twice));
    CHECK(once.n_series() == 2);
}

TEST_CASE("make_splits arithmetic") {
    SUBCASE("T=1913 defaults") {
        auto panel = test::make_series_panel(std::vector<std::int64_t>(1913, 1));
        auto s = make_splits(panel);
        CHECK(s.train_end == 1857);
        CHECK(s.valid_end == 1885);
        CHECK(s.test_end == 1913);
    }
    SUBCASE("T=100") {
        auto panel = test::make_series_panel(std::vector<std::int64_t>(100, 1));
        auto s = make_splits(panel, 28, 28);
        CHECK(s.train_end == 44);
        CHECK(s.valid_end == 72);
        CHECK(s.test_end == 100);
    }
    SUBCASE("T=56 is too short") {
        auto panel = test::make_series_panel(std::vector<std::int64_t>(56, 1));
        CHECK_THROWS_AS(make_splits(panel), InsufficientHistoryError);
    }
}

TEST_CASE("split windows partition the day axis") {
    auto panel = test::make_series_panel(std::vector<std::int64_t>(120, 2));
    auto s = make_splits(panel, 20, 15);
    CHECK(s.train_end + 20 == s.valid_end);
    CHECK(s.valid_end + 15 == s.test_end);
    CHECK(s.test_end == panel.last_d());
    CHECK(s.train_end >= panel.first_d());
}
