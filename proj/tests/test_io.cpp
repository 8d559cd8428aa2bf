#include <cstdio>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "gme/criteria.hpp"
#include "gme/io.hpp"
#include "gme/states.hpp"
#include "oracles.hpp"

using namespace gme;

TEST_SUITE("io") {

TEST_CASE("format_double emits shortest round-trip decimals") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-0.25) == "-0.25");
  CHECK(format_double(2.0 / 3.0) == "0.6666666666666666");
  CHECK(format_double(0.1 + 0.2) == "0.30000000000000004");
}

TEST_CASE("state text round-trips bit-exactly") {
  Rng rng(71);
  const TripartiteState rho{{3, 3, 3}, oracles::random_density(27, 27, rng)};
  const TripartiteState back = state_from_text(state_to_text(rho));
  CHECK(back.dims == rho.dims);
  CHECK((back.mat - rho.mat).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("state files round-trip through the filesystem") {
  Rng rng(72);
  const TripartiteState rho{{2, 2, 2}, oracles::random_density(8, 4, rng)};
  const std::string path = "io_roundtrip_tmp.json";
  write_state_file(path, rho);
  const TripartiteState back = read_state_file(path);
  CHECK(back.dims == rho.dims);
  CHECK((back.mat - rho.mat).cwiseAbs().maxCoeff() == 0.0);
  std::remove(path.c_str());
}

TEST_CASE("read_state_file reports a missing file") {
  CHECK_THROWS_WITH_AS(read_state_file("definitely_not_here.json"),
                       doctest::Contains("cannot open"), std::runtime_error);
}

TEST_CASE("malformed state text is rejected with a state-file message") {
  CHECK_THROWS_WITH_AS(state_from_text("not json at all"), doctest::Contains("state file"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(state_from_text("{\"dims\": [2, 2, 2]}"),
                       doctest::Contains("\"dims\" and \"matrix\""), std::invalid_argument);
  CHECK_THROWS_WITH_AS(state_from_text("{\"dims\": [2, 2], \"matrix\": []}"),
                       doctest::Contains("three integers"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(state_from_text("{\"dims\": [2, 2, 2], \"matrix\": [[1]]}"),
                       doctest::Contains("rows"), std::invalid_argument);
}

TEST_CASE("matrix entries must be [re, im] pairs") {
  TripartiteState rho = maximally_mixed_state(2);
  std::string text = state_to_text(rho);
  // Replace the first entry pair with a bare number.
  const auto pos = text.find("[0.125, 0]");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 10, "0.125     ");
  CHECK_THROWS_WITH_AS(state_from_text(text), doctest::Contains("[re, im] pair"),
                       std::invalid_argument);
}

TEST_CASE("state files carrying invalid states name the violated invariant") {
  TripartiteState rho = maximally_mixed_state(2);
  rho.mat *= 0.9;
  CHECK_THROWS_WITH_AS(state_from_text(state_to_text(rho)),
                       doctest::Contains("trace invariant violated"), std::invalid_argument);
  rho = maximally_mixed_state(2);
  rho.mat(0, 1) = Complex(0.1, 0.0);
  CHECK_THROWS_WITH_AS(state_from_text(state_to_text(rho)),
                       doctest::Contains("hermiticity invariant violated"), std::invalid_argument);
}

TEST_CASE("report text carries the verdict and all six norms") {
  const DetectionReport detected = detect_gme(pure_to_state({{3, 3, 3}, ghz_vector(3)}));
  const std::string text = render_report_text(detected);
  CHECK(text.find("GME detected") != std::string::npos);
  CHECK(text.find("||rho^T1||") != std::string::npos);
  CHECK(text.find("||R_3|12||") != std::string::npos);
  CHECK(text.find("score") != std::string::npos);
  CHECK(text.find("threshold") != std::string::npos);

  const DetectionReport mixed = detect_gme(maximally_mixed_state(2));
  CHECK(render_report_text(mixed).find("not detected (inconclusive)") != std::string::npos);
}

TEST_CASE("report JSON round-trips every field") {
  const DetectionReport rep = detect_gme(make_example1(0.8));
  const nlohmann::json j = nlohmann::json::parse(render_report_json(rep));
  CHECK(j["M"].get<double>() == rep.M);
  CHECK(j["N"].get<double>() == rep.N);
  CHECK(j["score"].get<double>() == rep.score);
  CHECK(j["threshold"].get<double>() == rep.threshold);
  CHECK(j["is_gme"].get<bool>() == rep.is_gme);
  CHECK(j["concurrence_lower_bound"].get<double>() == rep.concurrence_lower_bound);
  CHECK(j["concurrence_lower_bound_clamped"].get<double>() ==
        rep.concurrence_lower_bound_clamped);
  CHECK(j["verdict"].get<std::string>() == "GME detected");
  REQUIRE(j["ppt_norms"].size() == 3);
  REQUIRE(j["ccnr_norms"].size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    CHECK(j["ppt_norms"][i].get<double>() == rep.ppt_norms[i]);
    CHECK(j["ccnr_norms"][i].get<double>() == rep.ccnr_norms[i]);
  }
}

}  // TEST_SUITE
