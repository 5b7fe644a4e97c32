#include <doctest.h>

#include <fstream>
#include <sstream>

#include "tmlab/lab.hpp"
#include "tmlab/rna_codec.hpp"

using namespace tmlab;

namespace {

std::string read_file(const std::string &path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::size_t count_lines(const std::string &s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("E1 is the addition of 3 and 2") {
  auto r = run_experiment("E1");
  CHECK(r.result.steps == 106);
  CHECK(r.result.reason == HaltReason::Explicit);
  CHECK(r.region == "*|||*||*|||||*");
  CHECK(r.steps_ok());
  CHECK(r.region_ok());
}

TEST_CASE("E1 trace matches the frozen file") {
  auto want = read_file(TMLAB_GOLDEN_DIR "/e1.trace");
  REQUIRE(count_lines(want) == 107);
  std::ostringstream got;
  CHECK(export_trace(experiment_spec("E1"), got, 1) == 107);
  CHECK(got.str() == want);
}

TEST_CASE("trace stride") {
  std::ostringstream o;
  CHECK(export_trace(experiment_spec("E1"), o, 1000) == 2);
  CHECK(o.str() ==
        "step=0 state=1 head=0 win=0 tape=*|||*||*\n"
        "step=106 state=0 head=0 win=0 tape=*|||*||*|||||*\n");
  std::ostringstream n;
  CHECK_THROWS(export_trace(experiment_spec("E1"), n, 0));
}

TEST_CASE("E2 sampled every 10000 steps") {
  std::ostringstream o;
  CHECK(export_trace(experiment_spec("E2"), o, 10'000) == 116);
}

TEST_CASE("refinement of a machine by itself") {
  const auto &add = bundled_machine("addition");
  auto c = make_configuration(add, golden::addition_input);
  auto rep = check_refinement(add, c, add, c, [](const Configuration &x) { return std::optional(x); }, 10'000, 10'000);
  CHECK(rep.passed);
  CHECK(rep.matched == 107);
}

TEST_CASE("U refines addition") {
  const auto &add = bundled_machine("addition");
  const auto &u = bundled_machine("pedagogical-utm");
  auto mc = make_configuration(add, golden::addition_input);
  auto e = encode_initial_configuration(add, mc);
  auto rep = check_refinement(add, mc, u, u_configuration(u, e), u_to_m_projector(add), 10'000, 10'000'000);
  CHECK(rep.passed);
  CHECK(rep.matched == 107);
}

TEST_CASE("refinement reports a mismatch") {
  const auto &add = bundled_machine("addition");
  auto mc = make_configuration(add, golden::addition_input);
  auto other = make_configuration(add, "*||*|*");
  auto rep = check_refinement(add, mc, add, other, [](const Configuration &x) { return std::optional(x); }, 10'000, 10'000);
  CHECK(!rep.passed);
  REQUIRE(rep.first_mismatch);
  CHECK(rep.first_mismatch->high_step == 0);
}

TEST_CASE("rnaU refines the first 2000 steps of U") {
  const auto &add = bundled_machine("addition");
  const auto &u = bundled_machine("pedagogical-utm");
  const auto &rna = bundled_machine("rna-utm");
  auto e = encode_initial_configuration(add, make_configuration(add, golden::addition_input));
  auto rep = check_refinement(u, u_configuration(u, e), rna, rna_initial_configuration(rna, e),
                              rna_to_u_projector(rna, u), 2'000, 1'000'000);
  CHECK(rep.passed);
  CHECK(rep.matched == 2'001);
}

TEST_CASE("snapshots") {
  auto spec = experiment_spec("E2");
  auto f = scan_for_snapshots(spec, {""});
  REQUIRE(f[0]);
  CHECK(*f[0] == 0);
  f = scan_for_snapshots(spec, {"F000000000S", golden::scale_a});
  REQUIRE(f[0]);
  REQUIRE(f[1]);
  CHECK(*f[0] <= *f[1]);
  CHECK(*f[1] == 4498);
  f = scan_for_snapshots(spec, {"never-there"});
  CHECK(!f[0]);
}

TEST_CASE("random machines are reproducible") {
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 20; ++i) {
    auto x = random_machine(a), y = random_machine(b);
    CHECK(x.same_program(y));
    CHECK(x.states <= 4);
    CHECK(x.letters() <= 4);
    CHECK(random_input(a, x, 6) == random_input(b, y, 6));
  }
}

TEST_CASE("unknown ids") {
  CHECK_THROWS_AS(experiment_spec("E9"), std::invalid_argument);
  CHECK_THROWS_AS(verify_criterion("A11"), std::invalid_argument);
  CHECK(criterion_ids().size() == 10);
}
