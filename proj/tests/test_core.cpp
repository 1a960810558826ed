#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>

#include "stitchcast/core.hpp"
#include "stitchcast/io.hpp"
#include "stitchcast/util.hpp"

using namespace stitchcast;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("stitchcast_core_" + std::to_string(::getpid()) + "_" +
                std::to_string(reinterpret_cast<uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

SeasonCalendar test_calendar() {
    SeasonCalendar cal = SeasonCalendar::spring_summer(2018);
    cal.holidays = {Date(2018, 4, 1)};                            // Easter 2018, week 13
    cal.special_events = {Date(2018, 2, 14), Date(2018, 5, 13)};  // Valentine's, Mother's day
    cal.validate();
    return cal;
}

}  // namespace

TEST_CASE("date parse and format round-trip") {
    Date d = Date::parse("2018-01-01");
    CHECK(d.to_string() == "2018-01-01");
    CHECK(Date::parse("2020-02-29").to_string() == "2020-02-29");
    CHECK_THROWS(Date::parse("2019-02-29"));
    CHECK_THROWS(Date::parse("2018-13-01"));
    CHECK_THROWS(Date::parse("2018/01/01"));
    CHECK(Date(2018, 1, 1).plus_days(31).to_string() == "2018-02-01");
}

TEST_CASE("week_of maps dates to 1-based season weeks") {
    auto cal = test_calendar();
    CHECK(week_of(cal.season_start, cal) == 1);
    CHECK(week_of(cal.season_start.plus_days(6), cal) == 1);
    CHECK(week_of(cal.season_start.plus_days(7), cal) == 2);
    CHECK(week_of(cal.season_start.plus_days(7 * 26 - 1), cal) == 26);
    CHECK_THROWS_AS(week_of(cal.season_start.plus_days(-1), cal), std::out_of_range);
    CHECK_THROWS_AS(week_of(cal.season_start.plus_days(7 * 26), cal), std::out_of_range);
}

TEST_CASE("phase_of uses the configured bounds") {
    auto cal = test_calendar();
    CHECK(phase_of(1, cal) == 1);
    CHECK(phase_of(7, cal) == 1);
    CHECK(phase_of(8, cal) == 2);
    CHECK(phase_of(13, cal) == 2);
    CHECK(phase_of(14, cal) == 3);
    CHECK(phase_of(26, cal) == 4);
    CHECK_THROWS_AS(phase_of(0, cal), std::out_of_range);
    CHECK_THROWS_AS(phase_of(27, cal), std::out_of_range);
}

TEST_CASE("phase_of is monotone and covers every week exactly once") {
    auto cal = test_calendar();
    int prev = 1;
    std::map<int, int> weeks_per_phase;
    for (int w = 1; w <= cal.n_weeks; ++w) {
        int p = phase_of(w, cal);
        CHECK(p >= prev);
        prev = p;
        weeks_per_phase[p]++;
    }
    int total = 0;
    for (auto& [p, n] : weeks_per_phase) total += n;
    CHECK(total == cal.n_weeks);
}

TEST_CASE("holidays_in_week counts holidays plus special events") {
    auto cal = test_calendar();
    CHECK(holidays_in_week(2, cal) == 0);
    // Easter 2018-04-01 is day 90 of the season -> week 13.
    CHECK(holidays_in_week(13, cal) == 1);

    SeasonCalendar two = test_calendar();
    two.holidays = {Date(2018, 1, 2)};
    two.special_events = {Date(2018, 1, 3)};
    CHECK(holidays_in_week(1, two) == 2);
}

TEST_CASE("week holiday counts sum to the number of listed dates") {
    auto cal = test_calendar();
    int total = 0;
    for (int w = 1; w <= cal.n_weeks; ++w) total += holidays_in_week(w, cal);
    CHECK(total == static_cast<int>(cal.holidays.size() + cal.special_events.size()));
}

TEST_CASE("calendar validation rejects broken phase structure") {
    auto cal = test_calendar();
    cal.phase_bounds = {{1, 7}, {8, 13}, {14, 20}, {21, 25}};  // does not reach 26
    CHECK_THROWS(cal.validate());
    cal = test_calendar();
    cal.phase_bounds = {{1, 13}, {14, 26}};  // full season needs 4 phases
    CHECK_THROWS(cal.validate());
    cal = test_calendar();
    cal.holidays = {Date(2019, 1, 1)};
    CHECK_THROWS(cal.validate());
}

TEST_CASE("catalog loads a valid row") {
    TempDir tmp;
    auto path = tmp.file("catalog.csv");
    write_file(path,
               "article_id,category,class,sub_class,color,sleeve_length,pattern,material,"
               "neck_shape,item_length,fastening_type,fit,description,cost_price\n"
               "206021,womenswear,dresses,bodycon,black,short,solid,cotton,round,knee,zip,slim,"
               "\"floral summer dress, lined\",12.50\n");
    auto catalog = io::load_catalog(path);
    REQUIRE(catalog.size() == 1);
    CHECK(catalog[0].article_id == "206021");
    CHECK(catalog[0].sub_class == "bodycon");
    CHECK(catalog[0].attributes.at("color") == "black");
    CHECK(catalog[0].description == "floral summer dress, lined");
    CHECK(catalog[0].cost_price == 12.50);
}

TEST_CASE("catalog rejects duplicate article ids") {
    TempDir tmp;
    auto path = tmp.file("catalog.csv");
    write_file(path,
               "article_id,category,class,sub_class,color,sleeve_length,pattern,material,"
               "neck_shape,item_length,fastening_type,fit,description,cost_price\n"
               "206021,w,dresses,bodycon,black,,,,,,,,d1,10.00\n"
               "206021,w,dresses,swing,red,,,,,,,,d2,11.00\n");
    CHECK_THROWS_WITH(io::load_catalog(path), Catch::Matchers::ContainsSubstring("206021"));
}

TEST_CASE("catalog errors name the line and column") {
    TempDir tmp;
    auto path = tmp.file("catalog.csv");
    write_file(path,
               "article_id,category,class,sub_class,color,sleeve_length,pattern,material,"
               "neck_shape,item_length,fastening_type,fit,description,cost_price\n"
               "206021,w,dresses,bodycon,black,,,,,,,,d1,not_a_price\n");
    CHECK_THROWS_WITH(io::load_catalog(path),
                      Catch::Matchers::ContainsSubstring(":2") &&
                          Catch::Matchers::ContainsSubstring("cost_price"));

    write_file(path,
               "article_id,category,class,sub_class,color,sleeve_length,pattern,material,"
               "neck_shape,item_length,fastening_type,fit,description,cost_price\n"
               "206021,w,dresses,bodycon,black,10.00\n");
    CHECK_THROWS_WITH(io::load_catalog(path), Catch::Matchers::ContainsSubstring(":2"));
}

TEST_CASE("catalog preserves unknown attribute columns") {
    TempDir tmp;
    auto path = tmp.file("catalog.csv");
    write_file(path,
               "article_id,category,class,sub_class,color,sleeve_length,pattern,material,"
               "neck_shape,item_length,fastening_type,fit,hem_style,description,cost_price\n"
               "1,w,dresses,swing,red,,,,,,,,scalloped,plain dress,9.99\n");
    auto catalog = io::load_catalog(path);
    REQUIRE(catalog.size() == 1);
    CHECK(catalog[0].attributes.at("hem_style") == "scalloped");

    auto out = tmp.file("roundtrip.csv");
    io::save_catalog(out, catalog);
    CHECK(io::load_catalog(out) == catalog);
}

TEST_CASE("catalog file round-trips byte-identically") {
    TempDir tmp;
    std::vector<Article> catalog;
    for (int i = 0; i < 50; ++i) {
        Article a;
        a.article_id = std::to_string(200000 + i);
        a.category = "womenswear";
        a.article_class = "dresses";
        a.sub_class = (i % 2) ? "bodycon" : "swing";
        a.attributes["color"] = (i % 3) ? "black" : "navy";
        if (i % 4) a.attributes["sleeve_length"] = "short";
        a.description = "dress, style " + std::to_string(i);
        a.cost_price = 8.0 + i * 0.25;
        catalog.push_back(std::move(a));
    }
    auto first = tmp.file("a.csv"), second = tmp.file("b.csv");
    io::save_catalog(first, catalog);
    io::save_catalog(second, io::load_catalog(first));
    CHECK(read_file(first) == read_file(second));
}

TEST_CASE("sales, stores, launches and truth files round-trip in memory") {
    TempDir tmp;
    std::vector<SalesRecord> sales = {{"1", "s1", 3, 4, 19.99}, {"1", "s2", 4, 0, 19.99}};
    io::save_sales(tmp.file("sales.csv"), sales);
    CHECK(io::load_sales(tmp.file("sales.csv")) == sales);

    std::vector<Store> stores = {{"s1", 450.5}, {"s2", 1200.0}};
    io::save_stores(tmp.file("stores.csv"), stores);
    CHECK(io::load_stores(tmp.file("stores.csv")) == stores);

    LaunchTable launches;
    launches.set("1", "s1", 3);
    launches.set("1", "s2", 4);
    io::save_launches(tmp.file("launches.csv"), launches);
    CHECK(io::load_launches(tmp.file("launches.csv")) == launches);

    std::vector<TruthRecord> truth = {{"1", "s1", 3, 4.8125}, {"1", "s2", 4, 0.03125}};
    io::save_truth(tmp.file("truth.csv"), truth);
    CHECK(io::load_truth(tmp.file("truth.csv")) == truth);

    std::vector<VariantSalesRecord> variants = {{"1", "M", "s1", 3, 2}, {"1", "L", "s1", 3, 2}};
    io::save_variant_sales(tmp.file("variants.csv"), variants);
    CHECK(io::load_variant_sales(tmp.file("variants.csv")) == variants);
}

TEST_CASE("calendar json round-trips") {
    TempDir tmp;
    auto cal = test_calendar();
    io::save_calendar(tmp.file("calendar.json"), cal);
    CHECK(io::load_calendar(tmp.file("calendar.json")) == cal);
}

TEST_CASE("sales file rejects bad values") {
    TempDir tmp;
    auto path = tmp.file("sales.csv");
    write_file(path, "article_id,store_id,week,units,selling_price\n1,s1,3,-2,19.99\n");
    CHECK_THROWS(io::load_sales(path));
    write_file(path, "article_id,store_id,week,units,selling_price\n1,s1,3,2,0.00\n");
    CHECK_THROWS(io::load_sales(path));
}

TEST_CASE("launch table validates against sales") {
    auto cal = test_calendar();
    std::vector<SalesRecord> sales = {{"1", "s1", 5, 2, 10.0}};
    LaunchTable ok;
    ok.set("1", "s1", 3);
    CHECK_NOTHROW(ok.validate_against(sales, cal));

    LaunchTable late;
    late.set("1", "s1", 6);
    CHECK_THROWS(late.validate_against(sales, cal));

    LaunchTable missing;
    CHECK_THROWS(missing.validate_against(sales, cal));

    LaunchTable outside;
    outside.set("1", "s1", 30);
    CHECK_THROWS(outside.validate_against(sales, cal));
}

TEST_CASE("csv quoting survives commas, quotes and newlines") {
    TempDir tmp;
    auto path = tmp.file("q.csv");
    CsvWriter w(path);
    w.row({"a", "with,comma", "with\"quote", "with\nnewline", ""});
    w.close();
    CsvReader r(path);
    std::vector<std::string> f;
    REQUIRE(r.next(f));
    REQUIRE(f.size() == 5);
    CHECK(f[1] == "with,comma");
    CHECK(f[2] == "with\"quote");
    CHECK(f[3] == "with\nnewline");
    CHECK(f[4] == "");
    CHECK_FALSE(r.next(f));
}
