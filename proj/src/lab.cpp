#include "tmlab/lab.hpp"

#include <algorithm>
#include <ostream>
#include <regex>
#include <sstream>

#include "tmlab/rna_codec.hpp"

namespace tmlab {

// ---- experiments

RunSpec experiment_spec(const std::string &id) {
  const auto &add = bundled_machine("addition");
  auto m0 = make_configuration(add, golden::addition_input);
  if (id == "E1") return {&add, m0, 10'000};
  auto enc = encode_initial_configuration(add, m0);
  if (id == "E2") {
    const auto &u = bundled_machine("pedagogical-utm");
    return {&u, u_configuration(u, enc), 10'000'000};
  }
  if (id == "E3") {
    const auto &rna = bundled_machine("rna-utm");
    return {&rna, rna_initial_configuration(rna, enc), 10'000'000};
  }
  throw std::invalid_argument("unknown experiment '" + id + "' (expected E1, E2 or E3)");
}

std::string rna_tape_as_u(const MachineTable &rna, const Configuration &c) {
  auto [lo, hi] = window_bounds(c);
  if (lo & 1) --lo;
  if (hi & 1) ++hi;
  return rna_decode(rna.glyphs(c.tape.slice(lo, hi)));
}

std::string experiment_region(const std::string &id, const Configuration &final) {
  if (id == "E1") return format_window(bundled_machine("addition"), final);
  if (id == "E2") return tape_region(format_window(bundled_machine("pedagogical-utm"), final));
  if (id == "E3") {
    // shown with the one blank square that closes M's tape
    return rna_encode(tape_region(rna_tape_as_u(bundled_machine("rna-utm"), final)) + "_");
  }
  throw std::invalid_argument("unknown experiment '" + id + "'");
}

ExperimentReport run_experiment(const std::string &id) {
  auto spec = experiment_spec(id);
  ExperimentReport r;
  r.id = id;
  r.result = run(*spec.table, spec.initial, {spec.budget, std::nullopt, nullptr});
  r.region = experiment_region(id, r.result.final);
  if (id == "E1") r.expected_steps = golden::e1_steps, r.expected_region = golden::e1_final;
  if (id == "E2") r.expected_steps = golden::e2_steps, r.expected_region = golden::e2_final_region;
  if (id == "E3") r.expected_steps = golden::e3_steps, r.expected_region = golden::e3_final_region;
  return r;
}

// ---- refinement

static std::string describe(const MachineTable &t, const Configuration &c) {
  auto [lo, hi] = window_bounds(c);
  std::ostringstream o;
  o << "state=" << c.state << " head=" << c.head << " win=" << lo << " tape=" << t.glyphs(c.tape.slice(lo, hi));
  return o.str();
}

RefinementReport check_refinement(const MachineTable &high, const Configuration &high_init,
                                  const MachineTable &low, const Configuration &low_init,
                                  const Projector &project, std::uint64_t high_budget,
                                  std::uint64_t low_budget) {
  RefinementReport rep;
  rep.total_high = run(high, high_init, {high_budget, std::nullopt, nullptr}).steps + 1;

  Configuration expected = high_init;
  std::optional<Configuration> last_seen;
  auto offer = [&](const Configuration &lc) {
    auto p = project(lc);
    if (!p) return;
    if (*p == expected) {
      ++rep.matched;
      last_seen.reset();
      if (rep.matched < rep.total_high) step_in_place(high, expected);
    } else {
      last_seen = std::move(*p);
    }
  };

  Configuration lc = low_init;
  std::uint64_t ls = 0;
  offer(lc);
  while (rep.matched < rep.total_high && ls < low_budget) {
    if (step_in_place(low, lc)) break;
    ++ls;
    offer(lc);
  }
  rep.passed = rep.matched == rep.total_high;
  if (!rep.passed) {
    RefinementReport::Mismatch m;
    m.high_step = rep.matched;
    m.low_step = ls;
    m.diff = "expected " + describe(high, expected) + "; last projection " +
             (last_seen ? describe(high, *last_seen) : std::string("none"));
    rep.first_mismatch = std::move(m);
  }
  return rep;
}

// U starts each simulated step of M in state 29, after the program-side W
// has been moved to the new state; only those moments are decoded.
Projector u_to_m_projector(const MachineTable &m) {
  constexpr StateId cycle_start = 29;
  const MachineTable *mp = &m;
  const MachineTable *u = &bundled_machine("pedagogical-utm");
  return [mp, u](const Configuration &uc) -> std::optional<Configuration> {
    if (uc.state != cycle_start) return std::nullopt;
    auto d = decode_m_configuration(*u, uc);
    if (!d || !d->clean || d->state > mp->states) return std::nullopt;
    for (Sym s : d->tape)
      if (s >= mp->letters()) return std::nullopt;
    return Configuration{Tape(d->tape, 0, {mp->blank}), static_cast<Cell>(d->scanned), d->state};
  };
}

// Each "# group n" note in the RNA table marks the state that begins the
// simulation of U's state n. That state reads one nucleotide of a pair and
// moves toward the other, so its move tells which half it expects to see.
Projector rna_to_u_projector(const MachineTable &rna, const MachineTable &u) {
  struct Entry {
    StateId u_state = 0;
    int parity = 0;
  };
  std::vector<Entry> entry(static_cast<std::size_t>(rna.states) + 1);
  static const std::regex group_re(R"(#\s*group\s+(\d+))");
  for (auto &[s, lines] : rna.notes) {
    for (auto &ln : lines) {
      std::smatch m;
      if (!std::regex_search(ln, m, group_re)) continue;
      int right = 0, left = 0;
      for (Sym a = 0; a < rna.letters(); ++a) {
        const Action &e = rna.at(s, a);
        if (e.kind != ActionKind::Do) continue;
        (e.move == Move::Right ? right : left)++;
      }
      entry[static_cast<std::size_t>(s)] = {std::stoi(m[1]), right >= left ? 0 : 1};
    }
  }
  const MachineTable *rp = &rna, *up = &u;
  return [entry, rp, up](const Configuration &rc) -> std::optional<Configuration> {
    if (rc.state <= 0 || rc.state >= static_cast<StateId>(entry.size())) return std::nullopt;
    const Entry &e = entry[static_cast<std::size_t>(rc.state)];
    if (!e.u_state || ((rc.head % 2) + 2) % 2 != e.parity) return std::nullopt;
    auto [lo, hi] = window_bounds(rc);
    if (lo & 1) --lo;
    if (hi & 1) ++hi;
    auto text = rna_decode(rp->glyphs(rc.tape.slice(lo, hi)));
    Cell head = rc.head >= 0 ? rc.head / 2 : -((-rc.head + 1) / 2);
    Cell start = lo >= 0 ? lo / 2 : -((-lo + 1) / 2);
    return Configuration{Tape(up->syms(text), start, {up->blank}), head, e.u_state};
  };
}

// ---- streaming probes

std::vector<std::optional<std::uint64_t>> scan_for_snapshots(const RunSpec &spec,
                                                             const std::vector<std::string> &patterns) {
  std::vector<std::optional<std::uint64_t>> found(patterns.size());
  if (patterns.empty()) return found;
  const MachineTable &t = *spec.table;
  std::size_t next = 0;
  auto look = [&](std::uint64_t step, const Configuration &c) {
    auto w = format_window(t, c);
    while (next < patterns.size() && w.find(patterns[next]) != std::string::npos) found[next++] = step;
  };

  // A pattern free of blanks can only appear where a letter just changed, so
  // between matches it is enough to look around the written cell.
  bool local = spec.initial.tape.blank().size() == 1;
  for (auto &p : patterns) local = local && p.find(t.alphabet[spec.initial.tape.blank()[0]]) == std::string::npos;

  Configuration c = spec.initial;
  look(0, c);
  for (std::uint64_t s = 0; s < spec.budget && next < patterns.size();) {
    Cell cell = c.head;
    Sym before = c.tape.read(cell);
    if (step_in_place(t, c)) break;
    ++s;
    if (!local) {
      look(s, c);
      continue;
    }
    if (c.tape.read(cell) == before) continue;
    Cell n = static_cast<Cell>(patterns[next].size());
    auto near = t.glyphs(c.tape.slice(cell - n + 1, cell + n));
    if (near.find(patterns[next]) == std::string::npos) continue;
    found[next++] = s;
    look(s, c);
  }
  return found;
}

std::string trace_record(const MachineTable &t, std::uint64_t step, const Configuration &c) {
  std::ostringstream o;
  o << "step=" << step << " state=" << c.state << " head=" << c.head << " win=" << window_bounds(c).first
    << " tape=" << format_window(t, c);
  return o.str();
}

std::uint64_t export_trace(const RunSpec &spec, std::ostream &sink, std::uint64_t every) {
  if (every == 0) throw std::invalid_argument("trace stride must be >= 1");
  std::uint64_t lines = 0;
  auto emit = [&](std::uint64_t step, const Configuration &c) {
    sink << trace_record(*spec.table, step, c) << '\n';
    if (!sink) throw std::runtime_error("trace sink write failed");
    ++lines;
  };
  // a halting write costs no step, so it belongs to the record of the step
  // that reached it (within budget, as run() sees it)
  auto settle = [&](Configuration &c, std::uint64_t at) {
    if (at < spec.budget && c.state != kHaltState && lookup(*spec.table, c.state, c.tape.read(c.head)).kind == ActionKind::Halt)
      step_in_place(*spec.table, c);
  };
  Configuration c = spec.initial;
  settle(c, 0);
  emit(0, c);
  std::uint64_t s = 0, last = 0;
  while (s < spec.budget) {
    if (step_in_place(*spec.table, c)) break;
    ++s;
    settle(c, s);
    if (s % every == 0) emit(s, c), last = s;
  }
  if (last != s) emit(s, c);
  return lines;
}

// ---- random machines

MachineTable random_machine(std::mt19937_64 &rng, const RandomMachineOptions &o) {
  std::uniform_int_distribution<int> ns(1, o.max_states), nl(2, std::max(2, o.max_letters));
  int n = ns(rng), l = nl(rng);
  static const std::string pool = "_abcdefghijklmnopqrstuvwxyz";
  MachineTable t("random", pool.substr(0, static_cast<std::size_t>(l)), n);
  std::uniform_real_distribution<double> u01(0, 1);
  std::uniform_int_distribution<int> letter(0, l - 1), state(1, n), mv(0, o.allow_stay ? 2 : 1);
  for (StateId s = 1; s <= n; ++s) {
    for (Sym a = 0; a < t.letters(); ++a) {
      double r = u01(rng);
      if (r < o.empty_rate) continue;
      if (r < o.empty_rate + o.explicit_rate) {
        t.at(s, a) = Action::halt(static_cast<Sym>(letter(rng)));
        continue;
      }
      t.at(s, a) = Action::step(static_cast<Sym>(letter(rng)), static_cast<Move>(mv(rng)), state(rng));
    }
  }
  return t;
}

std::string random_input(std::mt19937_64 &rng, const MachineTable &t, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(0, static_cast<int>(t.letters()) - 1);
  std::string s;
  for (int i = len(rng); i > 0; --i) s.push_back(t.alphabet[static_cast<std::size_t>(letter(rng))]);
  return s;
}

}  // namespace tmlab
