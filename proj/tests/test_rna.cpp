#include <doctest.h>

#include <set>

#include "tmlab/lab.hpp"
#include "tmlab/rna_codec.hpp"

using namespace tmlab;

TEST_CASE("the sixteen pairs") {
  CHECK(rna_encode("S") == "UU");
  CHECK(rna_encode("X") == "AA");
  CHECK(rna_encode("Y") == "CC");
  CHECK(rna_encode("U") == "GG");
  CHECK(rna_encode("T") == "UA");
  CHECK(rna_encode("F") == "UC");
  CHECK(rna_encode("W") == "UG");
  CHECK(rna_encode("_") == "CG");
  CHECK(rna_encode("L") == "AC");
  CHECK(rna_encode("R") == "AG");
  CHECK(rna_encode("0") == "CA");
  CHECK(rna_encode("1") == "CU");
  CHECK(rna_encode("h") == "GA");
  CHECK(rna_encode("d") == "GC");
  CHECK(rna_encode("e") == "GU");
  CHECK(rna_encode("Z") == "AU");

  std::set<std::string> pairs;
  for (auto &p : rna_map()) pairs.insert(p.pair);
  CHECK(pairs.size() == 16);
}

TEST_CASE("words") {
  CHECK(rna_encode("") == "");
  CHECK(rna_encode("SW01hh") == "UUUGCACUGAGA");
  CHECK(rna_decode("UUUGCACUGAGA") == "SW01hh");
  CHECK(rna_encode(golden::e2_initial_region) + "CG" == golden::e3_initial_region);
  CHECK(rna_encode(golden::u_state42) == golden::u_state42_rna);
}

TEST_CASE("codec errors") {
  CHECK_THROWS_AS(rna_encode("Q"), CodecError);
  CHECK_THROWS_AS(rna_decode("ACG"), CodecError);
  CHECK_THROWS_AS(rna_decode("AT"), CodecError);
}

TEST_CASE("rnaU start configuration") {
  const auto &add = bundled_machine("addition");
  const auto &rna = bundled_machine("rna-utm");
  auto e = encode_initial_configuration(add, make_configuration(add, golden::addition_input));
  auto c = rna_initial_configuration(rna, e);
  CHECK(c.state == 1);
  CHECK(c.head == 2 * e.u_head + 1);
  CHECK(rna.glyphs(c.tape.slice(-4, 0)) == "CGCG");
  CHECK(rna_tape_as_u(rna, c) == e.full.substr(0, e.full.size() - 1));
}
