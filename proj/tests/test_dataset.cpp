#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ardlkit/csv.hpp"
#include "ardlkit/dataset.hpp"
#include "ardlkit/errors.hpp"
#include "ardlkit/rng.hpp"

using namespace ardlkit;
namespace fs = std::filesystem;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream out(p);
    out << content;
    return p.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

const char* kFixture = ARDLKIT_FIXTURE_CSV;

}  // namespace

TEST_CASE("fixture loads with full span and five series") {
    const Dataset d = load_csv(kFixture);
    CHECK(d.size() == 5);
    const auto [start, end] = d.span();
    CHECK(start == 1990);
    CHECK(end == 2017);
    CHECK(d.get("CE").size() == 28);
    CHECK(d.get("CE").complete());
}

TEST_CASE("year-only file has no data series") {
    const auto p = write_temp("year_only.csv", "year\n1990\n1991\n");
    CHECK_THROWS_WITH_AS(load_csv(p), doctest::Contains("no data series"), DataError);
}

TEST_CASE("gap in years is an integrity error") {
    const auto p = write_temp("gap.csv", "year,a\n1990,1\n1992,2\n");
    CHECK_THROWS_WITH_AS(load_csv(p), doctest::Contains("gap at 1991"), DataError);
}

TEST_CASE("duplicate year is an integrity error") {
    const auto p = write_temp("dup.csv", "year,a\n1990,1\n1990,2\n");
    CHECK_THROWS_WITH_AS(load_csv(p), doctest::Contains("duplicate year"), DataError);
}

TEST_CASE("rows may arrive unordered") {
    const auto p = write_temp("unordered.csv", "year,a\n1992,3\n1990,1\n1991,2\n");
    const Dataset d = load_csv(p);
    CHECK(d.get("a").dense() == std::vector<double>{1, 2, 3});
}

TEST_CASE("non-numeric cells become missing markers") {
    const auto p = write_temp("nonnum.csv", "year,a,b\n1990,n/a,1\n1991,2.5,2\n");
    const Dataset d = load_csv(p);
    CHECK_FALSE(d.get("a").values[0].has_value());
    CHECK(d.get("a").values[1] == 2.5);
}

TEST_CASE("locale decimal separators are not numbers") {
    double out = 0;
    CHECK_FALSE(parse_double("1,5", out));
    CHECK_FALSE(parse_double("1.234,5", out));
    CHECK_FALSE(parse_double("inf", out));
    CHECK_FALSE(parse_double("nan", out));
    CHECK(parse_double("1.25e2", out));
    CHECK(out == 125.0);
}

TEST_CASE("log transform") {
    SUBCASE("constant ones map to zeros") {
        const TimeSeries s("a", 1990, {1.0, 1.0, 1.0});
        const TimeSeries l = log_transform(s);
        CHECK(l.name == "loga");
        for (const auto& v : l.values) CHECK(*v == 0.0);
    }
    SUBCASE("e and e^2 map to 1 and 2") {
        const TimeSeries s("a", 1990, {std::exp(1.0), std::exp(2.0)});
        const TimeSeries l = log_transform(s);
        CHECK(*l.values[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(*l.values[1] == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("zero value names the offending year") {
        const TimeSeries s("a", 1990, {0.0, 1.0});
        CHECK_THROWS_WITH_AS(log_transform(s), doctest::Contains("1990"), DataError);
    }
}

TEST_CASE("difference and lag bookkeeping") {
    SUBCASE("diff of 1,3,6 is 2,3 starting one year later") {
        const TimeSeries s("a", 1990, {1, 3, 6});
        const TimeSeries d = difference(s);
        CHECK(d.dense() == std::vector<double>{2, 3});
        CHECK(d.start_year() == 1991);
    }
    SUBCASE("lag(1) then diff on a 28-year series leaves 26 usable values") {
        std::vector<double> v(28);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i * i);
        const TimeSeries s("a", 1990, v);
        const TimeSeries out = difference(lag(s, 1));
        CHECK(out.size() == 26);
        CHECK(out.start_year() == 1992);
    }
    SUBCASE("lag(30) on a 28-year series is an insufficient sample") {
        std::vector<double> v(28, 1.0);
        const TimeSeries s("a", 1990, v);
        CHECK_THROWS_WITH_AS(lag(s, 30), doctest::Contains("insufficient sample"), DataError);
    }
}

TEST_CASE("align") {
    const TimeSeries a("a", 1990, std::vector<double>(28, 1.0));
    SUBCASE("trims to the common span") {
        const TimeSeries b("b", 1994, std::vector<double>(24, 2.0));
        const Dataset d = align(Dataset({a, b}));
        const auto [start, end] = d.span();
        CHECK(start == 1994);
        CHECK(end == 2017);
        CHECK(d.get("a").size() == 24);
    }
    SUBCASE("identical spans are unchanged") {
        const TimeSeries b("b", 1990, std::vector<double>(28, 2.0));
        const Dataset d = align(Dataset({a, b}));
        CHECK(d.get("a").size() == 28);
        CHECK(d.span() == std::pair<int, int>(1990, 2017));
    }
    SUBCASE("disjoint series have no common sample") {
        const TimeSeries b("b", 2020, std::vector<double>(5, 2.0));
        CHECK_THROWS_WITH_AS(align(Dataset({a, b})), doctest::Contains("no common sample"),
                             DataError);
    }
    SUBCASE("missing interior values fail loudly") {
        TimeSeries b("b", 1990, std::vector<double>(28, 2.0));
        b.values[10] = std::nullopt;
        CHECK_THROWS_WITH_AS(align(Dataset({a, b})), doctest::Contains("missing interior"),
                             DataError);
    }
    SUBCASE("align is idempotent") {
        const TimeSeries b("b", 1994, std::vector<double>(30, 2.0));
        const Dataset once = align(Dataset({a, b}));
        const Dataset twice = align(once);
        REQUIRE(once.size() == twice.size());
        for (std::size_t i = 0; i < once.size(); ++i) {
            CHECK(once.series()[i].years == twice.series()[i].years);
            CHECK(once.series()[i].dense() == twice.series()[i].dense());
        }
    }
}

TEST_CASE("csv round-trip reproduces file content bit-for-bit") {
    const std::string out1 = (fs::temp_directory_path() / "roundtrip1.csv").string();
    const std::string out2 = (fs::temp_directory_path() / "roundtrip2.csv").string();
    write_csv(load_csv(kFixture), out1);
    write_csv(load_csv(out1), out2);
    CHECK(slurp(out1) == slurp(out2));
    // and numerically identical to the source
    const Dataset a = load_csv(kFixture);
    const Dataset b = load_csv(out1);
    for (const auto& s : a.series()) CHECK(s.dense() == b.get(s.name).dense());
}

TEST_CASE("diff then cumulative sum reconstructs the series") {
    RngStream rng(991);
    std::vector<double> v(40);
    v[0] = 3.7;
    for (std::size_t i = 1; i < v.size(); ++i) v[i] = v[i - 1] + rng.normal();
    const TimeSeries s("a", 1980, v);
    const TimeSeries d = difference(s);
    std::vector<double> rebuilt{v[0]};
    for (double dv : d.dense()) rebuilt.push_back(rebuilt.back() + dv);
    REQUIRE(rebuilt.size() == v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        CHECK(rebuilt[i] == doctest::Approx(v[i]).epsilon(1e-12));
}

TEST_CASE("non-positive values and the truncation policy") {
    const auto p = write_temp("zeros.csv", "year,NE\n1990,0\n1991,0\n1992,1.5\n1993,2.5\n");
    SUBCASE("rejected by default") {
        CHECK_THROWS_WITH_AS(load_csv(p, {}, {"NE"}, false), doctest::Contains("non-positive"),
                             DataError);
    }
    SUBCASE("explicitly truncated to the positive tail") {
        const Dataset d = load_csv(p, {}, {"NE"}, true);
        CHECK(d.get("NE").start_year() == 1992);
        CHECK(d.get("NE").dense() == std::vector<double>{1.5, 2.5});
    }
}

TEST_CASE("schema selects and renames columns") {
    const auto p = write_temp("schema.csv", "year,a,b\n1990,1,10\n1991,2,20\n");
    CsvSchema schema;
    schema.columns = {{"b", "renamed"}};
    const Dataset d = load_csv(p, schema);
    CHECK(d.size() == 1);
    CHECK(d.get("renamed").dense() == std::vector<double>{10, 20});
    CsvSchema bad;
    bad.columns = {{"zzz", "x"}};
    CHECK_THROWS_AS(load_csv(p, bad), DataError);
}
