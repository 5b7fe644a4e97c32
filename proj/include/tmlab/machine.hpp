#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tmlab {

// Letters are stored 0-based; the rank used by encodings is sym + 1.
using Sym = std::uint8_t;
using StateId = int;
using Cell = std::int64_t;

// The state a machine enters through an explicit '!' halt.
inline constexpr StateId kHaltState = 0;

enum class Move : std::uint8_t { Left, Right, Stay };

enum class ActionKind : std::uint8_t { Empty, Halt, Do };

struct Action {
  ActionKind kind = ActionKind::Empty;
  Sym write = 0;  // for Halt: the letter written before stopping
  Move move = Move::Stay;
  StateId next = 0;

  static Action empty() { return {}; }
  static Action halt(Sym w) { return {ActionKind::Halt, w, Move::Stay, 0}; }
  static Action step(Sym w, Move m, StateId n) { return {ActionKind::Do, w, m, n}; }

  bool operator==(const Action &) const = default;
};

enum class EntryClass { Halt, PureGlide, NoOverwriteStep, OverwriteStep };

enum class HaltReason { Explicit, EmptyEntry, StationaryIdentity, BudgetExceeded, LeftFenceViolation };

const char *to_string(HaltReason r);
const char *to_string(EntryClass c);
char move_glyph(Move m);

struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

struct MachineTable {
  std::string name;
  std::string alphabet;  // one glyph per letter, in rank order
  Sym blank = 0;
  int states = 0;
  std::vector<Action> grid;  // states * letters, row-major by state

  // comment lines carried through parse/serialize
  std::vector<std::string> preamble;
  std::map<StateId, std::vector<std::string>> notes;

  MachineTable() = default;
  MachineTable(std::string name, std::string alphabet, int states);

  std::size_t letters() const { return alphabet.size(); }
  const Action &at(StateId s, Sym a) const { return grid[index(s, a)]; }
  Action &at(StateId s, Sym a) { return grid[index(s, a)]; }
  std::optional<Sym> sym(char glyph) const;
  Sym sym_or_throw(char glyph) const;
  std::string glyphs(const std::vector<Sym> &v) const;
  std::vector<Sym> syms(std::string_view text) const;

  bool same_program(const MachineTable &o) const {
    return name == o.name && alphabet == o.alphabet && blank == o.blank && states == o.states &&
           grid == o.grid;
  }

 private:
  std::size_t index(StateId s, Sym a) const {
    return static_cast<std::size_t>(s - 1) * alphabet.size() + a;
  }
};

// A growable window over a bi-infinite tape. Cells outside the stored buffer
// read as blank. The blank may be periodic (cell i reads blank[i mod k]),
// which lets a pair-encoded machine see an encoded blank square everywhere.
class Tape {
 public:
  explicit Tape(std::vector<Sym> blank = {0});
  Tape(const std::vector<Sym> &cells, Cell start, std::vector<Sym> blank = {0});

  Sym read(Cell i) const {
    Cell k = i - origin_;
    if (k >= 0 && k < static_cast<Cell>(buf_.size())) return buf_[static_cast<std::size_t>(k)];
    return blank_at(i);
  }
  void write(Cell i, Sym s) {
    Cell k = i - origin_;
    if (k < 0 || k >= static_cast<Cell>(buf_.size())) {
      if (s == blank_at(i)) return;
      grow(i);
      k = i - origin_;
    }
    buf_[static_cast<std::size_t>(k)] = s;
  }
  Sym blank_at(Cell i) const {
    if (blank_.size() == 1) return blank_[0];
    Cell p = static_cast<Cell>(blank_.size());
    return blank_[static_cast<std::size_t>(((i % p) + p) % p)];
  }
  bool is_blank(Cell i) const { return read(i) == blank_at(i); }
  const std::vector<Sym> &blank() const { return blank_; }

  // [lo, hi) of non-blank cells; nullopt on an all-blank tape
  std::optional<std::pair<Cell, Cell>> support() const;
  std::vector<Sym> slice(Cell lo, Cell hi) const;

  bool operator==(const Tape &o) const;

 private:
  void grow(Cell i);
  std::vector<Sym> buf_;
  Cell origin_ = 0;
  std::vector<Sym> blank_;
};

struct Configuration {
  Tape tape;
  Cell head = 0;
  StateId state = 1;

  bool operator==(const Configuration &o) const {
    return head == o.head && state == o.state && tape == o.tape;
  }
};

// Minimal window containing every non-blank cell and the head.
std::pair<Cell, Cell> window_bounds(const Configuration &c);
std::string format_window(const MachineTable &t, const Configuration &c);

Configuration make_configuration(const MachineTable &t, std::string_view glyphs, Cell head = 0,
                                 StateId state = 1);

const Action &lookup(const MachineTable &t, StateId s, Sym a);
EntryClass classify_entry(const MachineTable &t, StateId s, Sym a);

struct StepOutcome {
  bool applied = false;
  HaltReason reason = HaltReason::EmptyEntry;  // meaningful when !applied
  Configuration next;
};

StepOutcome apply_step(const MachineTable &t, const Configuration &c);

// In-place single step; returns the halt reason when the machine stops.
std::optional<HaltReason> step_in_place(const MachineTable &t, Configuration &c);

using Observer = std::function<void(std::uint64_t step, const Configuration &)>;

struct RunOptions {
  std::uint64_t budget = 10'000'000;
  std::optional<Cell> fence_left;
  Observer observer;
};

struct RunResult {
  std::uint64_t steps = 0;
  HaltReason reason = HaltReason::BudgetExceeded;
  Configuration final;
};

RunResult run(const MachineTable &t, Configuration initial, const RunOptions &opt = {});

}  // namespace tmlab
