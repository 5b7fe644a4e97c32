#include <doctest.h>

#include "tmlab/table_io.hpp"

using namespace tmlab;

namespace {

MachineTable one_state(const std::string &entries) {
  return parse_table("name: t\nalphabet: _ a b\nstates: 3\nstate 1:\n" + entries);
}

}  // namespace

TEST_CASE("right-hand sides with omitted parts") {
  // write move next / write move / move next / move / next / write
  auto t = one_state("  _ -> b L 2\n  a -> b R\n  b -> L 3\n");
  CHECK(t.at(1, 0) == Action::step(2, Move::Left, 2));
  CHECK(t.at(1, 1) == Action::step(2, Move::Right, 1));
  CHECK(t.at(1, 2) == Action::step(2, Move::Left, 3));

  t = one_state("  _ -> R\n  a -> 2\n  b -> a\n");
  CHECK(t.at(1, 0) == Action::step(0, Move::Right, 1));
  CHECK(t.at(1, 1) == Action::step(1, Move::Stay, 2));
  CHECK(t.at(1, 2) == Action::step(1, Move::Stay, 1));

  t = one_state("  _ -> !\n  a -> b !\n");
  CHECK(t.at(1, 0) == Action::halt(0));
  CHECK(t.at(1, 1) == Action::halt(2));
  CHECK(t.at(1, 2).kind == ActionKind::Empty);
}

TEST_CASE("parse errors carry the line") {
  auto line_of = [](const std::string &src) {
    try {
      parse_table(src);
    } catch (const ParseError &e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("name: t\nalphabet: _ a\nstates: 1\nstate 1:\n  c -> R\n") == 5);
  CHECK(line_of("name: t\nalphabet: _ a\nstates: 1\nstate 2:\n") == 4);
  CHECK(line_of("name: t\nalphabet: _ a\nstates: 1\nstate 1:\n  a -> R 4\n") == 5);
  CHECK(line_of("name: t\nalphabet: _ a\nstates: 1\nstate 1:\n  a -> R\n  a -> L\n") == 6);
  CHECK(line_of("name: t\nalphabet: _ _\n") == 2);
  CHECK(line_of("name: t\nalphabet: _ a\nstates: 1\nstate 1:\n  a -> x y z w\n") == 5);
}

TEST_CASE("serialize is canonical and round-trips") {
  auto t = one_state("  _ -> b L 2\n  a -> R\n  b -> Z\n");
  auto text = serialize_table(t);
  CHECK(text ==
        "name: t\n"
        "alphabet: _ a b\n"
        "states: 3\n"
        "\n"
        "state 1:\n"
        "  _ -> b L 2\n"
        "  a -> R\n"
        "  b -> Z\n"
        "\n"
        "state 2:\n"
        "\n"
        "state 3:\n");
  auto back = parse_table(text);
  CHECK(back.same_program(t));
  CHECK(serialize_table(back) == text);
}

TEST_CASE("bundled machines are stored in canonical form") {
  for (auto &id : bundled_ids()) {
    CAPTURE(id);
    CHECK(serialize_table(bundled_machine(id)) == bundled_source(id));
  }
  CHECK_THROWS(bundled_machine("nope"));
}

TEST_CASE("census of the bundled machines") {
  auto a = table_stats(bundled_machine("addition"));
  CHECK(a.pure_glides == 13);
  CHECK(a.empty_entries == 21);
  CHECK(a.entries == 45);

  auto u = table_stats(bundled_machine("pedagogical-utm"));
  CHECK(u.entries == 1392);

  auto n = table_stats(bundled_machine("neary4x6"));
  CHECK(n.entries == 24);
  CHECK(n.entries - n.halting == 23);

  for (auto &id : bundled_ids()) {
    auto s = table_stats(bundled_machine(id));
    CAPTURE(id);
    CHECK(s.halting + s.no_overwrite_nonhalt + s.overwrite_nonhalt == s.entries);
    CHECK(s.pure_glides <= s.no_overwrite_nonhalt);
    CHECK(s.same_state_overwrite <= s.same_state_nonhalt);
    CHECK(s.empty_entries <= s.halting);
  }
}

TEST_CASE("validate_for_encoding") {
  auto ok = one_state("  _ -> R 2\n  a -> !\n");
  auto v = validate_for_encoding(ok);
  REQUIRE(v.size() == 2);  // states 2 and 3 have no entries
  auto bad = parse_table("name: t\nalphabet: _ a\nstates: 1\nstate 1:\n  _ -> a Z\n");
  v = validate_for_encoding(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0].find("stays") != std::string::npos);
  CHECK(validate_for_encoding(bundled_machine("addition")).empty());
  CHECK(validate_for_encoding(bundled_machine("pedagogical-utm")).empty());
  // rnaU carries a few states that hold no entry at all
  v = validate_for_encoding(bundled_machine("rna-utm"));
  CHECK(v == std::vector<std::string>{"state 167 has no entries", "state 190 has no entries",
                                      "state 219 has no entries", "state 252 has no entries",
                                      "state 319 has no entries"});
  // neary4x6 stays put in state 6 on A, which is a halt and so encodable
  CHECK(validate_for_encoding(bundled_machine("neary4x6")).empty());
}
