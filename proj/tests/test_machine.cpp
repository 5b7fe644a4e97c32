#include <doctest.h>

#include "tmlab/machine.hpp"
#include "tmlab/table_io.hpp"

using namespace tmlab;

namespace {

// Two letters, two states: walk right over 1s, write 1 on the first blank.
MachineTable walker() {
  return parse_table(
      "name: walker\n"
      "alphabet: _ 1\n"
      "states: 2\n"
      "state 1:\n"
      "  1 -> R\n"
      "  _ -> 1 L 2\n"
      "state 2:\n"
      "  1 -> L\n");
}

}  // namespace

TEST_CASE("lookup and classification follow the defaults") {
  auto t = walker();
  CHECK(lookup(t, 1, 1) == Action::step(1, Move::Right, 1));
  CHECK(lookup(t, 1, 0) == Action::step(1, Move::Left, 2));
  CHECK(lookup(t, 2, 0).kind == ActionKind::Empty);
  CHECK(classify_entry(t, 1, 1) == EntryClass::PureGlide);
  CHECK(classify_entry(t, 1, 0) == EntryClass::OverwriteStep);
  CHECK(classify_entry(t, 2, 0) == EntryClass::Halt);
  CHECK_THROWS_AS(lookup(t, 3, 0), ContractError);
  CHECK_THROWS_AS(lookup(t, 0, 0), ContractError);
  CHECK_THROWS_AS(lookup(t, 1, 2), ContractError);
}

TEST_CASE("apply_step moves, writes and changes state") {
  auto t = walker();
  auto c = make_configuration(t, "11");
  auto o = apply_step(t, c);
  REQUIRE(o.applied);
  CHECK(o.next.head == 1);
  CHECK(o.next.state == 1);
  CHECK(format_window(t, o.next) == "11");

  c.head = 2;
  o = apply_step(t, c);
  REQUIRE(o.applied);
  CHECK(o.next.head == 1);
  CHECK(o.next.state == 2);
  CHECK(format_window(t, o.next) == "111");
}

TEST_CASE("run halts on an empty entry without spending a step") {
  auto t = walker();
  auto r = run(t, make_configuration(t, "111"));
  // three glides, one write, three moves left, then state 2 reads the blank at -1
  CHECK(r.steps == 7);
  CHECK(r.reason == HaltReason::EmptyEntry);
  CHECK(r.final.head == -1);
  CHECK(r.final.state == 2);
  CHECK(format_window(t, r.final) == "_1111");
  CHECK(window_bounds(r.final) == std::pair<Cell, Cell>{-1, 4});
}

TEST_CASE("explicit halts write, then absorb") {
  auto t = parse_table("name: h\nalphabet: _ a\nstates: 1\nstate 1:\n  _ -> a !\n  a -> R\n");
  auto r = run(t, make_configuration(t, "a"));
  CHECK(r.steps == 1);
  CHECK(r.reason == HaltReason::Explicit);
  CHECK(r.final.state == kHaltState);
  CHECK(format_window(t, r.final) == "aa");
  auto again = run(t, r.final);
  CHECK(again.steps == 0);
  CHECK(again.reason == HaltReason::Explicit);
  CHECK(again.final == r.final);
}

TEST_CASE("a stationary identity is a halt") {
  auto t = parse_table("name: s\nalphabet: _ a\nstates: 1\nstate 1:\n  _ -> Z\n  a -> R\n");
  CHECK(classify_entry(t, 1, 0) == EntryClass::Halt);
  auto r = run(t, make_configuration(t, "aa"));
  CHECK(r.steps == 2);
  CHECK(r.reason == HaltReason::StationaryIdentity);
}

TEST_CASE("budget and left fence") {
  auto t = parse_table("name: l\nalphabet: _ a\nstates: 1\nstate 1:\n  _ -> L\n  a -> L\n");
  auto r = run(t, make_configuration(t, "aa", 1), {5, std::nullopt, nullptr});
  CHECK(r.steps == 5);
  CHECK(r.reason == HaltReason::BudgetExceeded);

  r = run(t, make_configuration(t, "aa", 1), {100, Cell{0}, nullptr});
  CHECK(r.steps == 1);
  CHECK(r.reason == HaltReason::LeftFenceViolation);
  CHECK(r.final.head == 0);
}

TEST_CASE("observer sees every step") {
  auto t = walker();
  std::vector<std::uint64_t> seen;
  run(t, make_configuration(t, "1"), {100, std::nullopt, [&](std::uint64_t s, const Configuration &) { seen.push_back(s); }});
  CHECK(seen == std::vector<std::uint64_t>{1, 2, 3});
}

TEST_CASE("tape with a periodic blank") {
  Tape tp({0, 1});
  CHECK(tp.read(-3) == 1);
  CHECK(tp.read(4) == 0);
  CHECK(!tp.support());
  tp.write(10, 0);  // blank for that cell: nothing stored
  CHECK(!tp.support());
  tp.write(7, 0);
  REQUIRE(tp.support());
  CHECK(*tp.support() == std::pair<Cell, Cell>{7, 8});
  CHECK(tp.slice(6, 9) == std::vector<Sym>{0, 0, 0});
  Tape other(std::vector<Sym>{0, 0, 0}, 6, {0, 1});
  CHECK(!(tp == Tape(std::vector<Sym>{0, 0}, 8, {0, 1})));
  CHECK(tp == other);
}

TEST_CASE("format_window of a blank tape is empty") {
  auto t = walker();
  auto c = make_configuration(t, "", 5);
  CHECK(format_window(t, c).empty());
  CHECK(window_bounds(c) == std::pair<Cell, Cell>{5, 6});
}
