#include "tmlab/machine.hpp"

#include <algorithm>

namespace tmlab {

const char *to_string(HaltReason r) {
  switch (r) {
    case HaltReason::Explicit: return "EXPLICIT";
    case HaltReason::EmptyEntry: return "EMPTY_ENTRY";
    case HaltReason::StationaryIdentity: return "STATIONARY_IDENTITY";
    case HaltReason::BudgetExceeded: return "BUDGET_EXCEEDED";
    case HaltReason::LeftFenceViolation: return "LEFT_FENCE_VIOLATION";
  }
  return "?";
}

const char *to_string(EntryClass c) {
  switch (c) {
    case EntryClass::Halt: return "HALT";
    case EntryClass::PureGlide: return "PURE_GLIDE";
    case EntryClass::NoOverwriteStep: return "NO_OVERWRITE_STEP";
    case EntryClass::OverwriteStep: return "OVERWRITE_STEP";
  }
  return "?";
}

char move_glyph(Move m) {
  switch (m) {
    case Move::Left: return 'L';
    case Move::Right: return 'R';
    case Move::Stay: return 'Z';
  }
  return '?';
}

MachineTable::MachineTable(std::string n, std::string a, int s)
    : name(std::move(n)), alphabet(std::move(a)), states(s),
      grid(static_cast<std::size_t>(s) * alphabet.size()) {}

std::optional<Sym> MachineTable::sym(char glyph) const {
  auto p = alphabet.find(glyph);
  if (p == std::string::npos) return std::nullopt;
  return static_cast<Sym>(p);
}

Sym MachineTable::sym_or_throw(char glyph) const {
  auto s = sym(glyph);
  if (!s) throw std::invalid_argument(std::string("glyph '") + glyph + "' not in alphabet of " + name);
  return *s;
}

std::string MachineTable::glyphs(const std::vector<Sym> &v) const {
  std::string out;
  out.reserve(v.size());
  for (Sym s : v) out.push_back(alphabet[s]);
  return out;
}

std::vector<Sym> MachineTable::syms(std::string_view text) const {
  std::vector<Sym> out;
  out.reserve(text.size());
  for (char c : text) out.push_back(sym_or_throw(c));
  return out;
}

// ---- Tape

Tape::Tape(std::vector<Sym> blank) : blank_(std::move(blank)) {
  if (blank_.empty()) throw ContractError("tape blank pattern must be non-empty");
}

Tape::Tape(const std::vector<Sym> &cells, Cell start, std::vector<Sym> blank)
    : buf_(cells), origin_(start), blank_(std::move(blank)) {
  if (blank_.empty()) throw ContractError("tape blank pattern must be non-empty");
}

void Tape::grow(Cell i) {
  if (buf_.empty()) {
    origin_ = i;
    buf_.push_back(blank_at(i));
    return;
  }
  Cell lo = origin_, hi = origin_ + static_cast<Cell>(buf_.size());
  Cell slack = std::max<Cell>(64, static_cast<Cell>(buf_.size()));
  if (i < lo) {
    Cell nlo = std::min(i, lo - slack);
    std::vector<Sym> nb(static_cast<std::size_t>(hi - nlo));
    for (Cell k = nlo; k < lo; ++k) nb[static_cast<std::size_t>(k - nlo)] = blank_at(k);
    std::copy(buf_.begin(), buf_.end(), nb.begin() + (lo - nlo));
    buf_.swap(nb);
    origin_ = nlo;
  } else {
    Cell nhi = std::max(i + 1, hi + slack);
    buf_.reserve(static_cast<std::size_t>(nhi - lo));
    for (Cell k = hi; k < nhi; ++k) buf_.push_back(blank_at(k));
  }
}

std::optional<std::pair<Cell, Cell>> Tape::support() const {
  Cell n = static_cast<Cell>(buf_.size());
  Cell a = 0;
  while (a < n && buf_[static_cast<std::size_t>(a)] == blank_at(origin_ + a)) ++a;
  if (a == n) return std::nullopt;
  Cell b = n;
  while (buf_[static_cast<std::size_t>(b - 1)] == blank_at(origin_ + b - 1)) --b;
  return std::make_pair(origin_ + a, origin_ + b);
}

std::vector<Sym> Tape::slice(Cell lo, Cell hi) const {
  std::vector<Sym> out;
  if (hi > lo) out.reserve(static_cast<std::size_t>(hi - lo));
  for (Cell i = lo; i < hi; ++i) out.push_back(read(i));
  return out;
}

bool Tape::operator==(const Tape &o) const {
  if (blank_ != o.blank_) return false;
  auto a = support(), b = o.support();
  if (a != b) return false;
  if (!a) return true;
  return slice(a->first, a->second) == o.slice(b->first, b->second);
}

// ---- configurations

std::pair<Cell, Cell> window_bounds(const Configuration &c) {
  auto s = c.tape.support();
  if (!s) return {c.head, c.head + 1};
  return {std::min(s->first, c.head), std::max(s->second, c.head + 1)};
}

std::string format_window(const MachineTable &t, const Configuration &c) {
  auto s = c.tape.support();
  if (!s) return {};
  auto [lo, hi] = window_bounds(c);
  return t.glyphs(c.tape.slice(lo, hi));
}

Configuration make_configuration(const MachineTable &t, std::string_view glyphs, Cell head,
                                 StateId state) {
  Configuration c{Tape(t.syms(glyphs), 0, {t.blank}), head, state};
  return c;
}

// ---- stepping

const Action &lookup(const MachineTable &t, StateId s, Sym a) {
  if (s < 1 || s > t.states) throw ContractError("state out of range: " + std::to_string(s));
  if (a >= t.letters()) throw ContractError("letter out of range: " + std::to_string(a + 1));
  return t.at(s, a);
}

static bool stationary_identity(const Action &e, StateId s, Sym a) {
  return e.kind == ActionKind::Do && e.write == a && e.move == Move::Stay && e.next == s;
}

EntryClass classify_entry(const MachineTable &t, StateId s, Sym a) {
  const Action &e = lookup(t, s, a);
  if (e.kind != ActionKind::Do || stationary_identity(e, s, a)) return EntryClass::Halt;
  if (e.write != a) return EntryClass::OverwriteStep;
  if (e.next == s && e.move != Move::Stay) return EntryClass::PureGlide;
  return EntryClass::NoOverwriteStep;
}

std::optional<HaltReason> step_in_place(const MachineTable &t, Configuration &c) {
  if (c.state == kHaltState) return HaltReason::Explicit;
  Sym a = c.tape.read(c.head);
  const Action &e = lookup(t, c.state, a);
  switch (e.kind) {
    case ActionKind::Empty: return HaltReason::EmptyEntry;
    case ActionKind::Halt:
      c.tape.write(c.head, e.write);
      c.state = kHaltState;
      return HaltReason::Explicit;
    case ActionKind::Do: break;
  }
  if (stationary_identity(e, c.state, a)) return HaltReason::StationaryIdentity;
  c.tape.write(c.head, e.write);
  if (e.move == Move::Left) --c.head;
  else if (e.move == Move::Right) ++c.head;
  c.state = e.next;
  return std::nullopt;
}

StepOutcome apply_step(const MachineTable &t, const Configuration &c) {
  StepOutcome out{false, HaltReason::EmptyEntry, c};
  auto r = step_in_place(t, out.next);
  if (r) out.reason = *r;
  else out.applied = true;
  return out;
}

RunResult run(const MachineTable &t, Configuration initial, const RunOptions &opt) {
  RunResult res{0, HaltReason::BudgetExceeded, std::move(initial)};
  Configuration &c = res.final;
  while (res.steps < opt.budget) {
    if (opt.fence_left && c.state != kHaltState) {
      const Action &e = lookup(t, c.state, c.tape.read(c.head));
      if (e.kind == ActionKind::Do && e.move == Move::Left && c.head - 1 < *opt.fence_left) {
        res.reason = HaltReason::LeftFenceViolation;
        return res;
      }
    }
    if (auto r = step_in_place(t, c)) {
      res.reason = *r;
      return res;
    }
    ++res.steps;
    if (opt.observer) opt.observer(res.steps, c);
  }
  return res;
}

}  // namespace tmlab
