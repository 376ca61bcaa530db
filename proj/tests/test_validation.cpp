#include <doctest.h>

#include <random>

#include "trinet/report_io.hpp"
#include "trinet/validation.hpp"

using namespace trinet;
using namespace trinet::validation;

namespace {

const Record& row(const VerificationReport& r, std::int64_t n, PolygonClass c) {
  for (const auto& rec : r.records)
    if (rec.n == n && rec.cls == c) return rec;
  FAIL("missing row");
  return r.records.front();
}

}  // namespace

TEST_CASE("cross_validate small ranges") {
  SUBCASE("n_max=1") {
    const auto r = cross_validate(NetSize(1));
    CHECK(r.verdict);
    REQUIRE(r.records.size() == 2);
    for (const auto& rec : r.records) {
      CHECK(rec.oracle == ExactCount(0));
      CHECK(rec.closed == ExactCount(0));
      CHECK(rec.recurrence == ExactCount(0));
    }
  }
  SUBCASE("n_max=3") {
    const auto r = cross_validate(NetSize(3));
    CHECK(r.verdict);
    const auto& p3 = row(r, 3, PolygonClass::Pentagon);
    CHECK(p3.oracle == ExactCount(3));
    CHECK(p3.closed == ExactCount(3));
    CHECK(p3.recurrence == ExactCount(3));
    CHECK(p3.forcing_oracle == ExactCount(3));
    CHECK(row(r, 3, PolygonClass::Hexagon).closed == ExactCount(1));
    CHECK(r.mismatches.empty());
  }
  SUBCASE("n_max=12") {
    const auto r = cross_validate(NetSize(12));
    CHECK(r.verdict);
    CHECK(r.records.size() == 24);
    for (std::size_t i = 1; i < r.records.size(); ++i) {
      const auto& a = r.records[i - 1];
      const auto& b = r.records[i];
      CHECK((a.n < b.n || (a.n == b.n && a.cls < b.cls)));
    }
  }
  SUBCASE("single class") {
    const auto r = cross_validate(NetSize(4), {PolygonClass::Hexagon});
    CHECK(r.records.size() == 4);
    CHECK(r.verdict);
  }
  CHECK_THROWS_AS(cross_validate(NetSize(3), {PolygonClass::Triangle}), std::invalid_argument);
  CHECK_THROWS_AS(cross_validate(NetSize(3), {}), std::invalid_argument);
}

TEST_CASE("formula_only_validate") {
  SUBCASE("n_max=2") { CHECK(formula_only_validate(NetSize(2)).verdict); }
  SUBCASE("n_max=5 table") {
    const auto r = formula_only_validate(NetSize(5));
    CHECK(r.verdict);
    CHECK(r.formula_only);
    const std::uint64_t p[] = {0, 0, 3, 21, 78}, h[] = {0, 0, 1, 7, 29};
    for (int n = 1; n <= 5; ++n) {
      CHECK(row(r, n, PolygonClass::Pentagon).closed == ExactCount(p[n - 1]));
      CHECK(row(r, n, PolygonClass::Hexagon).recurrence == ExactCount(h[n - 1]));
      CHECK_FALSE(row(r, n, PolygonClass::Pentagon).oracle.has_value());
    }
  }
  SUBCASE("n_max=10^4") {
    const auto r = formula_only_validate(NetSize(10000));
    CHECK(r.verdict);
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CHECK(c.passed());
      CHECK(c.cases > 0);
    }
  }
}

TEST_CASE("mismatches are reported, not thrown") {
  auto r = cross_validate(NetSize(4));
  REQUIRE(r.verdict);
  r.records[5].closed = ExactCount(999);
  finalize(r);
  CHECK_FALSE(r.verdict);
  CHECK_FALSE(r.records[5].agree);
  REQUIRE(r.mismatches.size() == 1);
  CHECK(r.mismatches[0].find("closed=999") != std::string::npos);

  auto s = formula_only_validate(NetSize(4));
  s.checks.push_back({"synthetic", 4, 1, "k=1"});
  finalize(s);
  CHECK_FALSE(s.verdict);
  CHECK(s.mismatches.back().find("synthetic") != std::string::npos);

  auto t = cross_validate(NetSize(3));
  t.records[0].angle_law = false;
  finalize(t);
  CHECK_FALSE(t.verdict);
}

TEST_CASE("report is reproducible apart from timing") {
  auto a = cross_validate(NetSize(6));
  auto b = cross_validate(NetSize(6));
  a.timing.reset();
  b.timing.reset();
  CHECK(a == b);
  CHECK(to_json(a) == to_json(b));
  CHECK(to_csv(a) == to_csv(b));
}

TEST_CASE("json round trip") {
  SUBCASE("real reports") {
    for (const auto& r : {cross_validate(NetSize(5)), formula_only_validate(NetSize(50))}) {
      CHECK(from_json(to_json(r)) == r);
      auto untimed = r;
      untimed.timing.reset();
      CHECK(from_json(to_json(untimed)) == untimed);
    }
  }
  SUBCASE("random reports") {
    std::mt19937_64 rng(11);
    auto big = [&] { return ExactCount((static_cast<UInt128>(rng()) << 64) | rng()); };
    for (int i = 0; i < 50; ++i) {
      VerificationReport r;
      r.n_max = static_cast<std::int64_t>(rng() % 100 + 1);
      r.formula_only = rng() % 2;
      r.classes = {PolygonClass::Pentagon, PolygonClass::Hexagon};
      for (int j = 0; j < 5; ++j) {
        Record rec;
        rec.n = j + 1;
        rec.cls = j % 2 ? PolygonClass::Hexagon : PolygonClass::Pentagon;
        if (rng() % 2) rec.oracle = big();
        rec.closed = big();
        rec.recurrence = big();
        if (rng() % 2) rec.forcing_oracle = big();
        rec.forcing_closed = big();
        if (rng() % 2) rec.angle_law = rng() % 2;
        rec.agree = rng() % 2;
        r.records.push_back(rec);
      }
      r.checks.push_back({"x", rng() % 1000, rng() % 3, "k=\"quoted\""});
      r.mismatches = {"a", "b,c"};
      r.verdict = rng() % 2;
      if (rng() % 2) r.timing = Timing{1, 2, 3, static_cast<std::int64_t>(rng() >> 1)};
      CHECK(from_json(to_json(r)) == r);
    }
  }
  CHECK_THROWS_AS(from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(from_json("not json"), std::invalid_argument);
}

TEST_CASE("csv layout") {
  const auto csv = to_csv(formula_only_validate(NetSize(3)));
  CHECK(csv ==
        "n,class,oracle,closed,recurrence,f_or_g_oracle,f_or_g_closed,agree\n"
        "1,pentagon,,0,0,,0,true\n"
        "1,hexagon,,0,0,,0,true\n"
        "2,pentagon,,0,0,,0,true\n"
        "2,hexagon,,0,0,,0,true\n"
        "3,pentagon,,3,3,,3,true\n"
        "3,hexagon,,1,1,,1,true\n");
  const auto full = to_csv(cross_validate(NetSize(3)));
  CHECK(full.find("3,pentagon,3,3,3,3,3,true\n") != std::string::npos);
}
