#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>

#include <json.hpp>

#include "biharm/verify/config.hpp"
#include "biharm/verify/geometry_tables.hpp"
#include "biharm/verify/report.hpp"
#include "biharm/verify/sampling.hpp"
#include "biharm/verify/suites.hpp"
#include "biharm/verify/surfaces.hpp"
#include "biharm/verify/sweep.hpp"

using namespace biharm;
using namespace biharm::verify;

TEST_SUITE("verification") {
  TEST_CASE("embedded tables load and match the derived geometry") {
    const GeometryTables& t = embedded_geometry_tables();
    CHECK(t.version == 1);
    CHECK_FALSE(t.bcv.riemann.empty());
    CHECK_FALSE(t.sol.connection.empty());
    TableComparison c = compare_with_tables(MetricModel::bcv(1.0, 0.5), t.bcv, {0.2, -0.1, 0.4});
    CHECK(c.max_any() <= 1e-12);
    CHECK(c.entries > 0);
    CHECK(compare_with_tables(MetricModel::sol(), t.sol, {0.1, 0.2, -0.3}).max_any() <= 1e-12);
    CHECK_THROWS_AS(compare_with_tables(MetricModel::space_form(1.0), t.bcv, {}), InvalidArgument);
  }

  TEST_CASE("table formulas evaluate monomials") {
    TableFormula f{{2.0, 1, 0, 0, 1, 0}, {-0.75, 0, 2, 0, 0, 0}};
    CHECK(evaluate(f, 3.0, 2.0, {0.0, 0.5, 0.0}) == doctest::Approx(2.0 * 3.0 * 0.5 - 0.75 * 4.0));
    CHECK(evaluate({}, 1.0, 1.0, {}) == 0.0);
    Mat3 ric = embedded_geometry_tables().bcv.ricci_at(1.0, 2.0, {});
    CHECK(ric[0][0] == doctest::Approx(2.0));
    CHECK(ric[2][2] == doctest::Approx(2.0));
    CHECK(embedded_geometry_tables().sol.ricci_at(0, 0, {})[2][2] == doctest::Approx(-2.0));
  }

  TEST_CASE("table parser rejects malformed input") {
    CHECK_THROWS_AS(parse_geometry_tables("{"), InvalidArgument);
    CHECK_THROWS_AS(parse_geometry_tables(R"({"version": 2})"), InvalidArgument);
    CHECK_THROWS_AS(parse_geometry_tables(R"({"version": 1})"), InvalidArgument);
    auto j = nlohmann::json::parse(std::string(
        R"({"version":1,"bcv":{"lie_brackets":[],"connection":[],"curvature_operator":[],"riemann":[{"ijkl":[1,2,1,4],"value":[]}],"ricci":[]},
            "sol":{"lie_brackets":[],"connection":[],"curvature_operator":[],"riemann":[],"ricci":[]}})"));
    CHECK_THROWS_AS(parse_geometry_tables(j.dump()), InvalidArgument);
  }

  TEST_CASE("radical inverse and quasi-random sampler") {
    CHECK(radical_inverse(1, 2) == 0.5);
    CHECK(radical_inverse(3, 2) == 0.75);
    CHECK(radical_inverse(1, 3) == doctest::Approx(1.0 / 3.0));
    CHECK(radical_inverse(5, 3) == doctest::Approx(2.0 / 3.0 + 1.0 / 9.0));

    QuasiRandomSampler plain(0);
    auto first = plain.next_unit();
    CHECK(first[0] == 0.5);
    CHECK(first[1] == doctest::Approx(1.0 / 3.0));
    CHECK(first[2] == doctest::Approx(0.2));

    QuasiRandomSampler a(42), b(42), c(43);
    for (int i = 0; i < 20; ++i) {
      auto x = a.next_unit();
      CHECK(x == b.next_unit());
      for (double v : x) CHECK((v >= 0.0 && v < 1.0));
    }
    CHECK(a.next_unit() != c.next_unit());

    QuasiRandomSampler s(7);
    const MetricModel model = MetricModel::bcv(-1.0, 0.0);
    for (int i = 0; i < 50; ++i) {
      ChartPoint p = s.next_in(model, {-2, -2, -1}, {2, 2, 1});
      CHECK(model.contains(p));
      CHECK(std::abs(p.z) <= 1.0);
    }
  }

  TEST_CASE("config precedence and validation") {
    SuiteConfig c;
    apply_config_text(c, "# comment\n grid = 3x4\ntol=1e-8\n\nm=0.5\nformat=csv\n");
    CHECK(c.grid.nu == 3);
    CHECK(c.grid.nv == 4);
    CHECK(c.tol == 1e-8);
    REQUIRE(c.m);
    CHECK(*c.m == 0.5);
    CHECK(c.format == "csv");
    apply_setting(c, "tol", "1e-7");
    CHECK(c.tol == 1e-7);
    apply_setting(c, "fd_step", "2e-3");
    CHECK(c.fd_step == 2e-3);

    CHECK_THROWS_AS(apply_setting(c, "tol", "-1"), InvalidArgument);
    CHECK_THROWS_AS(apply_setting(c, "tol", "abc"), InvalidArgument);
    CHECK_THROWS_AS(apply_setting(c, "seed", "-3"), InvalidArgument);
    CHECK_THROWS_AS(apply_setting(c, "format", "xml"), InvalidArgument);
    CHECK_THROWS_AS(apply_setting(c, "colour", "red"), InvalidArgument);
    CHECK_THROWS_AS(apply_config_text(c, "grid 5x5"), InvalidArgument);
    CHECK_THROWS_AS(apply_config_file(c, "/nonexistent/biharm.cfg"), InvalidArgument);

    CHECK(parse_grid("7x2").nu == 7);
    CHECK(parse_grid("7X2").nv == 2);
    for (const char* bad : {"", "5", "0x3", "3x", "ax3", "3x3x3", "-1x2"}) CHECK_THROWS_AS(parse_grid(bad), InvalidArgument);

    nlohmann::json j = to_json(c);
    CHECK(j["grid"] == "3x4");
    CHECK(j["l"].is_null());
    CHECK(verdict_options(c).tol == 1e-7);
    CHECK(verdict_options(c).residual.differences.step == 2e-3);
  }

  TEST_CASE("config file round trip") {
    const auto path = std::filesystem::temp_directory_path() / "biharm_test_config.cfg";
    std::ofstream(path) << "seed=9\nl=1.5\n";
    SuiteConfig c;
    apply_config_file(c, path.string());
    CHECK(c.seed == 9u);
    CHECK(*c.l == 1.5);
    std::filesystem::remove(path);
  }

  TEST_CASE("report records and serialization") {
    CheckRecord ok = check_at_most("a.b", "small", 1e-9, 1e-6);
    CHECK(ok.pass);
    CHECK(ok.margin > 0.0);
    CHECK_FALSE(check_at_most("a.c", "nan", std::nan(""), 1e-6).pass);
    CHECK_FALSE(check_at_least("a.d", "nan", std::nan(""), 1e-2).pass);
    CHECK(check_at_least("a.e", "big", 0.5, 1e-2).pass);
    CHECK_FALSE(check_at_least("a.f", "small", 1e-3, 1e-2).pass);

    SuiteReport r{"demo", {{"grid", "5x5"}}, {ok, check_at_most("a.g", "inf", INFINITY, 1.0)}, 12.5};
    CHECK_FALSE(r.passed());
    CHECK(r.failures() == 1);
    nlohmann::json j = to_json(r);
    for (const char* key : {"suite", "config", "checks", "pass", "duration_ms"}) CHECK(j.contains(key));
    CHECK(j["checks"][1]["residual"].is_null());
    CHECK(j["pass"] == false);
    CHECK_FALSE(to_json(r, false).contains("duration_ms"));
    for (const char* key : {"id", "desc", "residual", "tol", "pass", "margin"}) CHECK(j["checks"][0].contains(key));

    std::string csv = to_csv(r);
    CHECK(csv.rfind("id,desc,residual,tol,pass,margin\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    CHECK(format_number(0.5) == "0.5");
    CHECK_THROWS_AS(write_text_file("/nonexistent/dir/out.json", "x"), std::runtime_error);
  }

  TEST_CASE("sweep rows follow the properness window") {
    SuiteConfig cfg;
    cfg.grid = {3, 3};
    auto rows = sweep({1.0, 1.0, 0.0, 2.0, 3}, cfg);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].kappa_g == doctest::Approx(2.0));
    CHECK(rows[0].mean_curvature == doctest::Approx(1.0));
    CHECK(rows[0].norm_a_sq == doctest::Approx(4.0));
    CHECK(*rows[0].radius == doctest::Approx(1.0 / std::sqrt(8.0)));
    CHECK(rows[0].verdict == "proper_biharmonic");
    CHECK(rows[1].kappa_g == doctest::Approx(std::sqrt(3.0)));
    CHECK(*rows[1].radius == doctest::Approx(1.0 / std::sqrt(7.0)));
    CHECK(rows[1].verdict == "proper_biharmonic");
    CHECK(rows[2].surface == "line");
    CHECK(rows[2].verdict == "minimal");
    for (const SweepRow& r : rows) CHECK(r.max_residual <= 1e-6);

    auto neg = sweep({-1.0, -1.0, 0.0, 0.0, 1}, cfg);
    CHECK_FALSE(neg[0].radius.has_value());
    CHECK(neg[0].verdict == "minimal");

    auto quarter = sweep({0.25, 0.25, 0.0, 0.0, 4}, cfg);
    REQUIRE(quarter.size() == 1);
    CHECK(quarter[0].kappa_g == doctest::Approx(1.0));
    CHECK(quarter[0].mean_curvature == doctest::Approx(0.5));

    CHECK(sweep({0.0, 1.0, 0.0, 1.0, 4}, cfg).size() == 16);
    CHECK_THROWS_AS(sweep({0.0, 1.0, 0.0, 1.0, 0}, cfg), InvalidArgument);
    CHECK_THROWS_AS(sweep({0.0, INFINITY, 0.0, 1.0, 2}, cfg), InvalidArgument);

    nlohmann::json j = sweep_to_json(rows, {1.0, 1.0, 0.0, 2.0, 3}, cfg);
    CHECK(j["rows"].size() == 3);
    CHECK(j["rows"][0].contains("normA2"));
    CHECK(sweep_to_csv(rows).find("m,l,") == 0);
  }

  TEST_CASE("named surfaces") {
    std::set<std::string> names;
    for (const std::string& n : surface_names()) names.insert(n);
    CHECK(names.count("hopf-circle") == 1);
    CHECK(names.count("sphere") == 1);
    CHECK_THROWS_AS(named_surface({"torus"}), InvalidArgument);
    SurfaceRequest req{"sphere"};
    req.radius = 0.25 * std::numbers::pi;
    CHECK(verdict(named_surface(req), {3, 3}).classification == Classification::proper_biharmonic);
  }

  TEST_CASE("suites are deterministic and reject unknown names") {
    CHECK_THROWS_AS(run_suite("nope"), InvalidArgument);
    SuiteConfig cfg;
    cfg.seed = 5;
    SuiteReport a = run_suite("sol-cmc", cfg);
    SuiteReport b = run_suite("sol-cmc", cfg);
    CHECK(to_json(a, false).dump() == to_json(b, false).dump());
    CHECK(a.passed());
    std::set<std::string> ids;
    for (const CheckRecord& c : run_suite("full", cfg).checks) {
      CHECK_MESSAGE(ids.insert(c.id).second, "duplicate id " << c.id);
      CHECK_MESSAGE(c.pass, c.id << " residual " << c.residual);
    }
  }
}
