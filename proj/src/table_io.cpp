#include "tmlab/table_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

#include "bundled_data.hpp"

namespace tmlab {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

bool is_number(const std::string &s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool is_move(const std::string &s) { return s == "L" || s == "R" || s == "Z"; }

Move to_move(const std::string &s) {
  return s == "L" ? Move::Left : s == "R" ? Move::Right : Move::Stay;
}

int to_int(int line, const std::string &s) {
  try {
    return std::stoi(s);
  } catch (const std::exception &) {
    throw ParseError(line, "bad number '" + s + "'");
  }
}

}  // namespace

// Right-hand sides follow Minsky's elisions: [write] [move] [next].
// Glyphs may themselves be L/R/Z or digits, so the shape decides:
//   w m n | m n, w m | m, n, w | (nothing) | [w] !
// A two-token form is (write, move) when the second token is a move,
// otherwise (move, next). A lone number is always a next state.
MachineTable parse_table(std::string_view source) {
  MachineTable t;
  bool have_alpha = false, have_states = false;
  std::optional<char> blank_glyph;
  int blank_line = 0;
  StateId cur = 0;
  std::set<StateId> seen_states;
  std::set<Sym> seen_letters;
  std::vector<std::string> pending;
  struct Raw {
    int line;
    StateId state;
    Sym read;
    std::vector<std::string> rhs;
  };
  std::vector<Raw> raws;

  std::istringstream in{std::string(source)};
  std::string raw;
  int ln = 0;
  while (std::getline(in, raw)) {
    ++ln;
    std::string_view s = trim(raw);
    if (s.empty()) continue;
    if (s.front() == '#') {
      if (!have_states) t.preamble.emplace_back(s);
      else pending.emplace_back(s);
      continue;
    }
    if (s.starts_with("name:")) {
      t.name = std::string(trim(s.substr(5)));
      continue;
    }
    if (s.starts_with("alphabet:")) {
      auto toks = split_ws(s.substr(9));
      if (toks.empty()) throw ParseError(ln, "empty alphabet");
      for (auto &g : toks) {
        if (g.size() != 1) throw ParseError(ln, "glyph '" + g + "' is not a single character");
        if (t.alphabet.find(g[0]) != std::string::npos) throw ParseError(ln, "duplicate glyph '" + g + "'");
        t.alphabet.push_back(g[0]);
      }
      if (t.alphabet.size() > 255) throw ParseError(ln, "alphabet too large");
      have_alpha = true;
      continue;
    }
    if (s.starts_with("blank:")) {
      auto g = trim(s.substr(6));
      if (g.size() != 1) throw ParseError(ln, "blank must be one glyph");
      blank_glyph = g[0];
      blank_line = ln;
      continue;
    }
    if (s.starts_with("states:")) {
      if (!have_alpha) throw ParseError(ln, "states: before alphabet:");
      t.states = to_int(ln, std::string(trim(s.substr(7))));
      if (t.states < 1) throw ParseError(ln, "states must be >= 1");
      t.grid.assign(static_cast<std::size_t>(t.states) * t.letters(), Action::empty());
      have_states = true;
      continue;
    }
    if (s.starts_with("state ")) {
      if (!have_states) throw ParseError(ln, "state block before states:");
      auto colon = s.find(':');
      if (colon == std::string_view::npos || trim(s.substr(colon + 1)).size())
        throw ParseError(ln, "expected 'state <n>:'");
      cur = to_int(ln, std::string(trim(s.substr(6, colon - 6))));
      if (cur < 1 || cur > t.states) throw ParseError(ln, "state " + std::to_string(cur) + " out of range");
      if (!seen_states.insert(cur).second) throw ParseError(ln, "duplicate state " + std::to_string(cur));
      seen_letters.clear();
      if (!pending.empty()) t.notes[cur] = std::move(pending), pending.clear();
      continue;
    }
    auto arrow = s.find("->");
    if (arrow == std::string_view::npos) throw ParseError(ln, "unrecognised line");
    if (cur == 0) throw ParseError(ln, "entry outside a state block");
    auto lhs = trim(s.substr(0, arrow));
    if (lhs.size() != 1) throw ParseError(ln, "entry must start with one glyph");
    auto a = t.sym(lhs[0]);
    if (!a) throw ParseError(ln, std::string("unknown glyph '") + lhs[0] + "'");
    if (!seen_letters.insert(*a).second) throw ParseError(ln, std::string("duplicate entry for '") + lhs[0] + "'");
    raws.push_back({ln, cur, *a, split_ws(s.substr(arrow + 2))});
  }
  if (!have_states) throw ParseError(ln, "missing states:");
  if (blank_glyph) {
    auto b = t.sym(*blank_glyph);
    if (!b) throw ParseError(blank_line, "blank glyph not in alphabet");
    t.blank = *b;
  }

  auto glyph = [&](int line, const std::string &g) -> Sym {
    if (g.size() != 1) throw ParseError(line, "bad write glyph '" + g + "'");
    auto s = t.sym(g[0]);
    if (!s) throw ParseError(line, "unknown glyph '" + g + "'");
    return *s;
  };

  for (auto &r : raws) {
    auto p = r.rhs;
    Action act;
    if (!p.empty() && p.back() == "!") {
      p.pop_back();
      if (p.size() > 1) throw ParseError(r.line, "too many tokens before '!'");
      act = Action::halt(p.empty() ? r.read : glyph(r.line, p[0]));
    } else {
      Sym w = r.read;
      Move m = Move::Stay;
      StateId n = r.state;
      switch (p.size()) {
        case 0: break;
        case 1:
          if (is_move(p[0])) m = to_move(p[0]);
          else if (is_number(p[0])) n = to_int(r.line, p[0]);
          else w = glyph(r.line, p[0]);
          break;
        case 2:
          if (is_move(p[1])) w = glyph(r.line, p[0]), m = to_move(p[1]);
          else if (is_move(p[0]) && is_number(p[1])) m = to_move(p[0]), n = to_int(r.line, p[1]);
          else throw ParseError(r.line, "cannot read '" + p[0] + " " + p[1] + "'");
          break;
        case 3:
          if (!is_move(p[1]) || !is_number(p[2])) throw ParseError(r.line, "expected <write> <move> <next>");
          w = glyph(r.line, p[0]), m = to_move(p[1]), n = to_int(r.line, p[2]);
          break;
        default: throw ParseError(r.line, "too many tokens");
      }
      if (n < 1 || n > t.states) throw ParseError(r.line, "next state " + std::to_string(n) + " out of range");
      act = Action::step(w, m, n);
    }
    t.at(r.state, r.read) = act;
  }
  return t;
}

std::string serialize_table(const MachineTable &t) {
  std::ostringstream out;
  for (auto &c : t.preamble) out << c << '\n';
  out << "name: " << t.name << '\n';
  out << "alphabet:";
  for (char g : t.alphabet) out << ' ' << g;
  out << '\n';
  if (t.blank != 0) out << "blank: " << t.alphabet[t.blank] << '\n';
  out << "states: " << t.states << '\n';
  for (StateId s = 1; s <= t.states; ++s) {
    out << '\n';
    if (auto it = t.notes.find(s); it != t.notes.end()) {
      for (auto &c : it->second) out << c << '\n';
    }
    out << "state " << s << ":\n";
    for (Sym a = 0; a < t.letters(); ++a) {
      const Action &e = t.at(s, a);
      if (e.kind == ActionKind::Empty) continue;
      out << "  " << t.alphabet[a] << " ->";
      if (e.kind == ActionKind::Halt) {
        if (e.write != a) out << ' ' << t.alphabet[e.write];
        out << " !\n";
        continue;
      }
      bool w = e.write != a;
      if (w) out << ' ' << t.alphabet[e.write];
      if (w || e.move != Move::Stay || e.next == s) out << ' ' << move_glyph(e.move);
      if (e.next != s) out << ' ' << e.next;
      out << '\n';
    }
  }
  return out.str();
}

const std::vector<std::string> &bundled_ids() {
  static const std::vector<std::string> ids{"addition", "neary4x6", "pedagogical-utm", "rna-utm"};
  return ids;
}

const std::string &bundled_source(const std::string &id) {
  static const std::map<std::string, std::string> src{
      {"addition", std::string(data::addition)},
      {"neary4x6", std::string(data::neary4x6)},
      {"pedagogical-utm", std::string(data::pedagogical_utm)},
      {"rna-utm", std::string(data::rna_utm)},
  };
  auto it = src.find(id);
  if (it == src.end()) throw std::invalid_argument("unknown bundled machine: " + id);
  return it->second;
}

const MachineTable &bundled_machine(const std::string &id) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<MachineTable>> cache;
  std::lock_guard lock(mu);
  auto &slot = cache[id];
  if (!slot) slot = std::make_unique<MachineTable>(parse_table(bundled_source(id)));
  return *slot;
}

MachineTable load_machine(const std::string &id_or_path) {
  auto &ids = bundled_ids();
  if (std::find(ids.begin(), ids.end(), id_or_path) != ids.end()) return bundled_machine(id_or_path);
  std::ifstream f(id_or_path);
  if (!f) throw std::invalid_argument("no bundled machine or readable file named '" + id_or_path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_table(ss.str());
}

TableStats table_stats(const MachineTable &t) {
  TableStats st;
  for (StateId s = 1; s <= t.states; ++s) {
    for (Sym a = 0; a < t.letters(); ++a) {
      ++st.entries;
      const Action &e = t.at(s, a);
      if (e.kind == ActionKind::Empty) ++st.empty_entries;
      auto c = classify_entry(t, s, a);
      if (c == EntryClass::Halt) {
        ++st.halting;
        continue;
      }
      if (c == EntryClass::OverwriteStep) ++st.overwrite_nonhalt;
      else ++st.no_overwrite_nonhalt;
      if (c == EntryClass::PureGlide) ++st.pure_glides;
      if (e.next == s) {
        ++st.same_state_nonhalt;
        if (e.write != a) ++st.same_state_overwrite;
      }
    }
  }
  return st;
}

std::vector<std::string> validate_for_encoding(const MachineTable &t) {
  std::vector<std::string> v;
  for (StateId s = 1; s <= t.states; ++s) {
    bool any = false;
    for (Sym a = 0; a < t.letters(); ++a) {
      const Action &e = t.at(s, a);
      if (e.kind != ActionKind::Empty) any = true;
      if (e.kind == ActionKind::Do && e.move == Move::Stay && classify_entry(t, s, a) != EntryClass::Halt)
        v.push_back("state " + std::to_string(s) + " on '" + t.alphabet[a] + "': stays without halting");
    }
    if (!any) v.push_back("state " + std::to_string(s) + " has no entries");
  }
  return v;
}

}  // namespace tmlab
