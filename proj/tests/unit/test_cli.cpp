#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "dyonosc/record.hpp"

using dyonosc::OutputRecord;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dyonosc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

double number(const dyonosc::Scalar& s) {
  if (const auto* d = std::get_if<double>(&s)) return *d;
  return static_cast<double>(std::get<std::int64_t>(s));
}
}  // namespace

TEST_CASE("spectrum osc4") {
  const auto r = run({"spectrum", "--system", "osc4", "--omega", "1", "--levels", "3"});
  REQUIRE(r.code == 0);
  const auto rec = OutputRecord::from_json(r.out);
  REQUIRE(rec.rows.size() == 3);
  const double energies[] = {2, 3, 4};
  const std::int64_t degeneracy[] = {1, 4, 10};
  for (int i = 0; i < 3; ++i) {
    CHECK(number(rec.rows[i][2]) == doctest::Approx(energies[i]));
    CHECK(std::get<std::int64_t>(rec.rows[i][3]) == degeneracy[i]);
  }
}

TEST_CASE("spectrum ycm5") {
  const auto r = run({"spectrum", "--system", "ycm5", "--e2", "1", "--levels", "2"});
  REQUIRE(r.code == 0);
  const auto rec = OutputRecord::from_json(r.out);
  CHECK(number(rec.rows[0][2]) == doctest::Approx(-0.125));
  CHECK(number(rec.rows[1][2]) == doctest::Approx(-0.08));
}

TEST_CASE("domain errors exit 1, usage errors exit 2") {
  CHECK(run({"spectrum", "--system", "osc4", "--omega", "-1", "--levels", "3"}).code == 1);
  const auto nb = run({"map", "--direction", "dyon2osc", "--eps", "0.5"});
  CHECK(nb.code == 1);
  CHECK(nb.err.find("no-bound-state") != std::string::npos);
  CHECK(run({"spectrum", "--system", "osc3", "--omega", "1"}).code == 2);
  CHECK(run({"spectrum", "--system", "osc4"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("parameter maps") {
  auto value = [](const Run& r, const std::string& key) {
    for (const auto& row : OutputRecord::from_json(r.out).rows) {
      if (std::get<std::string>(row[0]) == key) return number(row[1]);
    }
    FAIL("missing " << key);
    return 0.0;
  };
  const auto a = run({"map", "--direction", "osc2dyon", "--E", "4"});
  REQUIRE(a.code == 0);
  CHECK(value(a, "e2") == doctest::Approx(1.0));
  const auto b = run({"map", "--direction", "osc2dyon", "--C0", "1", "--C2", "8", "--E", "5"});
  REQUIRE(b.code == 0);
  CHECK(value(b, "eps") == doctest::Approx(-2.0));
  CHECK(value(b, "e2") == doctest::Approx(1.0));
  const auto t = run({"map", "--direction", "osc2dyon", "--E", "8", "--levels", "4", "--system", "dyon3"});
  REQUIRE(t.code == 0);
  for (const auto& row : OutputRecord::from_json(t.out).rows) {
    CHECK(number(row[3]) == doctest::Approx(number(row[4])).epsilon(1e-12));
  }
}

TEST_CASE("wavefn, field, solve-radial") {
  const auto w = run({"wavefn", "--system", "anyon1", "--nu", "0.25", "--n", "0", "--grid", "-5:5:101"});
  REQUIRE(w.code == 0);
  CHECK(OutputRecord::from_json(w.out).rows.size() == 101);

  const auto f = run({"field", "--kind", "yang", "--at", "0,1,0,0,0"});
  REQUIRE(f.code == 0);
  const auto rec = OutputRecord::from_json(f.out);
  REQUIRE(rec.rows.size() == 3);
  const double expect[] = {0, 0, 0, 0, 1};
  for (int k = 0; k < 5; ++k) CHECK(number(rec.rows[0][k + 1]) == doctest::Approx(expect[k]));

  const auto s = run({"solve-radial", "--system", "osc2", "--k", "3"});
  REQUIRE(s.code == 0);
  const auto sr = OutputRecord::from_json(s.out);
  for (int n = 0; n < 3; ++n) CHECK(std::abs(number(sr.rows[n][1]) - (2 * n + 1)) < 1e-3);
}

TEST_CASE("verify and CSV output are deterministic") {
  const auto a = run({"verify", "--suite", "degeneracy", "--format", "csv"});
  const auto b = run({"verify", "--suite", "degeneracy", "--format", "csv"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("36=36") != std::string::npos);
  CHECK(run({"verify", "--suite", "euler", "--seed", "7"}).code == 0);
}
