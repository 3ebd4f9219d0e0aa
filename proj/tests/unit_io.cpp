#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "qsg/jobs.hpp"
#include "qsg/json_io.hpp"

using namespace qsg;

namespace {

const std::string kRoot = QSG_SOURCE_DIR;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

JobConfig command(std::vector<std::string> words) {
  JobConfig c;
  c.command = std::move(words);
  return c;
}

}  // namespace

TEST_CASE("scalar json round trip") {
  const Cyclo z = Cyclo::root_of_unity(12, 7) * Cyclo(Rational(3, 7)) + Cyclo(Rational(-2, 5));
  CHECK(scalar_from_json(scalar_to_json(z)) == z);
  CHECK(scalar_from_json(scalar_to_json(Cyclo(Rational(4)))) == Cyclo(Rational(4)));
  CHECK(scalar_from_json(Json("3/4")) == Cyclo(Rational(3, 4)));
  CHECK(scalar_from_json(Json(-7)) == Cyclo(Rational(-7)));
  CHECK_THROWS_AS(scalar_from_json(Json("x")), std::invalid_argument);
}

TEST_CASE("algebra and filtration json") {
  // round-trip a structure-constant algebra through its json form
  const auto m2 = matrix_algebra(2, {Rational(1, 2), Rational(1, 2)});
  const auto loaded = algebra_from_json(algebra_to_json(m2));
  CHECK(loaded->dim == 4);
  loaded->validate();
  CHECK(loaded->gram() == m2.gram());

  const Json bad = {{"pointwise", Json::array({"1/2", "x"})}};
  CHECK_THROWS_AS(algebra_from_json(bad), std::invalid_argument);

  const auto f = filtration_from_json(Json::parse(slurp(kRoot + "/data/example34.json")));
  CHECK(f.filtration.parts.size() == 3);
  CHECK(validate(f.filtration).valid);
}

TEST_CASE("operator matrix json round trip") {
  const auto u = dinfty_unitary(0.7);
  const auto v = operator_matrix_from_json(operator_matrix_to_json(u));
  CHECK(v.dim == u.dim);
  CHECK(v.op_dim == u.op_dim);
  for (int r = 0; r < u.dim; ++r)
    for (int c = 0; c < u.dim; ++c) CHECK((u.at(r, c) - v.at(r, c)).norm() == 0);
  CHECK_THROWS_AS(operator_matrix_from_json(Json{{"n", 2}, {"m", 1}}), Json::exception);
}

TEST_CASE("filtration analyze matches the golden text output") {
  std::ostringstream out;
  const int code = run_job(command({"filtration", "analyze", kRoot + "/data/example34.json"}), out);
  CHECK(code == 0);
  CHECK(out.str() == slurp(kRoot + "/tests/golden/example34_analyze.txt"));

  // determinism: a second run is byte-identical
  std::ostringstream again;
  run_job(command({"filtration", "analyze", kRoot + "/data/example34.json"}), again);
  CHECK(again.str() == out.str());
}

TEST_CASE("exit code contract") {
  std::ostringstream out;
  // input errors: missing file, malformed json, empty parts
  CHECK(run_job(command({"filtration", "analyze", "/nonexistent.json"}), out) == 1);
  CHECK(run_job(command({"nonsense"}), out) == 1);
  {
    std::ofstream bad("/tmp/qsg_bad.json");
    bad << "{ not json";
  }
  CHECK(run_job(command({"filtration", "analyze", "/tmp/qsg_bad.json"}), out) == 1);
  {
    std::ofstream empty("/tmp/qsg_empty_parts.json");
    empty << R"({"algebra": {"pointwise": ["1/2","1/2"]}, "parts": []})";
  }
  CHECK(run_job(command({"filtration", "analyze", "/tmp/qsg_empty_parts.json"}), out) == 1);

  // check failure: an invalid filtration reports exit 2
  {
    std::ofstream invalid("/tmp/qsg_invalid_filtration.json");
    invalid << R"({"algebra": {"pointwise": ["1/2","1/2"]}, "parts": [[[1, 0]], [[0, 1]]]})";
  }
  CHECK(run_job(command({"filtration", "analyze", "/tmp/qsg_invalid_filtration.json"}), out) == 2);

  // pass: dual qiso on Z2^2
  JobConfig dual = command({"dual", "qiso"});
  dual.options["factors"] = "2,2";
  CHECK(run_job(dual, out) == 0);

  // json format emits parseable json
  JobConfig jdual = dual;
  jdual.format = "json";
  std::ostringstream jout;
  CHECK(run_job(jdual, jout) == 0);
  const Json parsed = Json::parse(jout.str());
  CHECK(parsed.at("partitions_coincide").get<bool>());
  CHECK(parsed.at("joint_coloring_group_order").get<std::string>() == "8");
}

TEST_CASE("verify job on the shipped instance files") {
  std::ostringstream out;
  JobConfig v = command({"verify", kRoot + "/data/dinfty_theta_pi5.json"});
  v.tol = 1e-10;
  v.options["expect"] = "magic";
  CHECK(run_job(v, out) == 0);

  JobConfig fleet = command({"verify"});
  fleet.options["fleet"] = "3";
  CHECK(run_job(fleet, out) == 0);
}

TEST_CASE("words and partitions jobs") {
  std::ostringstream out;
  JobConfig w = command({"words", "partition"});
  w.options["factors"] = "z,z";
  w.options["radius"] = "2";
  w.format = "json";
  CHECK(run_job(w, out) == 0);
  const Json j = Json::parse(out.str());
  CHECK(j.at("ball_size").get<int>() == 17);

  std::ostringstream pout;
  JobConfig p = command({"partitions"});
  p.options["upper"] = "2";
  p.options["lower"] = "2";
  p.options["pairs"] = "1";
  p.format = "json";
  CHECK(run_job(p, pout) == 0);
  const Json pj = Json::parse(pout.str());
  CHECK(pj.at("count").get<int>() > 0);

  std::ostringstream eout;
  JobConfig e = command({"ergodic", "spectral"});
  e.options["group"] = "s3";
  e.format = "json";
  CHECK(run_job(e, eout) == 0);
  const Json ej = Json::parse(eout.str());
  CHECK(ej.at("subspaces").size() == 3);
}
