#include "tmlab/utm_encoding.hpp"

#include <algorithm>

#include "tmlab/table_io.hpp"

namespace tmlab {

int bitlen(long n) {
  int b = 0;
  for (; n > 0; n >>= 1) ++b;
  return b;
}

int field_width(int alphabet_size) {
  if (alphabet_size < 1) throw EncodingError("alphabet must not be empty");
  return bitlen(alphabet_size) + 1;
}

EncodingScheme EncodingScheme::for_table(const MachineTable &t) {
  int L = static_cast<int>(t.letters());
  return {field_width(L), L, t.states, std::max(L, t.states)};
}

static std::string lsb_binary(long n) {
  std::string s;
  for (; n > 0; n >>= 1) s.push_back((n & 1) ? '1' : '0');
  return s;
}

std::string encode_letter_field(int rank, int width) {
  if (rank < 1) throw EncodingError("letter rank must be >= 1");
  if (bitlen(rank) >= width)
    throw EncodingError("rank " + std::to_string(rank) + " does not fit width " + std::to_string(width));
  auto s = lsb_binary(rank);
  s.append(static_cast<std::size_t>(width) - s.size(), 'h');
  return s;
}

std::string encode_state_field(int state) {
  if (state < 1) throw EncodingError("state must be >= 1");
  return lsb_binary(state);
}

std::string encode_instruction(const MachineTable &t, StateId s, Sym read, const EncodingScheme &sc) {
  const Action &e = lookup(t, s, read);
  Sym w = read;
  Move m = Move::Stay;
  StateId n = s;
  if (e.kind == ActionKind::Halt) {
    w = e.write;
  } else if (e.kind == ActionKind::Do && classify_entry(t, s, read) != EntryClass::Halt) {
    if (e.move == Move::Stay)
      throw EncodingError("state " + std::to_string(s) + " on '" + t.alphabet[read] +
                          "' stays without halting; U cannot run it");
    w = e.write, m = e.move, n = e.next;
  }
  std::string out = "Y";
  out += encode_letter_field(w + 1, sc.letter_field_width);
  out += move_glyph(m);
  out += encode_state_field(n);
  return out;
}

std::string encode_program(const MachineTable &t, const EncodingScheme &sc) {
  std::string out;
  for (StateId s = 1; s <= t.states; ++s) {
    out += 'X';
    for (Sym a = 0; a < t.letters(); ++a) out += encode_instruction(t, s, a, sc);
  }
  return out;
}

std::string encode_program(const MachineTable &t) { return encode_program(t, EncodingScheme::for_table(t)); }

std::string encode_tape(const std::vector<Sym> &m_tape, std::size_t scanned, const EncodingScheme &sc) {
  if (scanned >= std::max<std::size_t>(m_tape.size(), 1))
    throw EncodingError("scanned square outside the encoded segment");
  std::string out;
  auto square = [&](std::size_t i, Sym a) {
    out += (i == scanned) ? 'W' : 'U';
    out += encode_letter_field(a + 1, sc.letter_field_width);
  };
  if (m_tape.empty()) square(0, 0);
  for (std::size_t i = 0; i < m_tape.size(); ++i) square(i, m_tape[i]);
  return out;
}

EncodedConfiguration encode_initial_configuration(const MachineTable &m, const Configuration &mc) {
  if (mc.state != 1) throw EncodingError("U can only start M in state 1");
  if (mc.tape.blank() != std::vector<Sym>{m.blank})
    throw EncodingError("M's tape must use M's own blank");
  if (m.blank != 0) throw EncodingError("M's blank must be its first letter");
  auto sup = mc.tape.support();
  if (mc.head < 0 || (sup && sup->first < 0)) throw EncodingError("M's tape must start at cell 0");
  Cell hi = std::max<Cell>(sup ? sup->second : 0, mc.head + 1);
  auto sc = EncodingScheme::for_table(m);
  EncodedConfiguration e;
  e.full = "S" + encode_program(m, sc) + "S";
  e.m_tape_start = e.full.size();
  e.full += encode_tape(mc.tape.slice(0, hi), static_cast<std::size_t>(mc.head), sc);
  e.full += '_';
  e.u_head = 0;
  e.u_state = 1;
  return e;
}

Configuration u_configuration(const MachineTable &u, const EncodedConfiguration &e) {
  return Configuration{Tape(u.syms(e.full), 0, {u.blank}), e.u_head, e.u_state};
}

MachineTable pad_for_universal(const MachineTable &m) {
  const Action &last = m.at(m.states, static_cast<Sym>(m.letters() - 1));
  int want = std::max({kMinUniversalStates, static_cast<int>(m.letters()), m.states});
  if (m.states == want && last.kind == ActionKind::Do) ++want;
  if (want == m.states) return m;
  MachineTable p(m.name, m.alphabet, want);
  p.blank = m.blank;
  p.preamble = m.preamble;
  p.notes = m.notes;
  for (StateId s = 1; s <= m.states; ++s)
    for (Sym a = 0; a < m.letters(); ++a) p.at(s, a) = m.at(s, a);
  for (StateId s = m.states + 1; s <= want; ++s) p.at(s, m.blank) = Action::halt(m.blank);
  return p;
}

long encoded_length(const MachineTable &t) { return static_cast<long>(encode_program(t).size()); }

std::string tape_region(std::string_view u_text) {
  auto p = u_text.rfind('S');
  std::string_view r = p == std::string_view::npos ? u_text : u_text.substr(p);
  while (!r.empty() && r.back() == '_') r.remove_suffix(1);
  return std::string(r);
}

std::optional<DecodedM> decode_m_configuration(std::string_view text) {
  auto right = text.rfind('S');
  if (right == std::string_view::npos) return std::nullopt;
  std::string_view region = text.substr(right + 1);
  while (!region.empty() && region.back() == '_') region.remove_suffix(1);
  if (region.empty() || (region[0] != 'U' && region[0] != 'W')) return std::nullopt;

  DecodedM d;
  d.clean = true;
  int ws = 0;
  std::size_t i = 0;
  while (i < region.size()) {
    char delim = region[i];
    if (delim != 'U' && delim != 'W') {
      d.clean = false;
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < region.size() && region[j] != 'U' && region[j] != 'W') ++j;
    std::string_view f = region.substr(i + 1, j - i - 1);
    if (d.width == 0) d.width = static_cast<int>(f.size());
    if (static_cast<int>(f.size()) != d.width) d.clean = false;
    // binary digits LSB first, then at least one h
    long v = 0, bit = 1;
    std::size_t k = 0;
    for (; k < f.size() && (f[k] == '0' || f[k] == '1'); ++k, bit <<= 1)
      if (f[k] == '1') v += bit;
    bool ok = k > 0 && f[k - 1] == '1' && k < f.size();
    for (; k < f.size(); ++k) ok = ok && f[k] == 'h';
    if (!ok || v < 1 || v > 256) {
      d.clean = false;
      v = 1;
    }
    if (delim == 'W') {
      ++ws;
      d.scanned = d.tape.size();
    }
    d.tape.push_back(static_cast<Sym>(v - 1));
    i = j;
  }
  if (ws != 1) d.clean = false;

  // M's state: the program-side W marks either the X of the current state
  // or the Y of the instruction being carried out.
  std::string_view prog = text.substr(0, right);
  auto left = prog.rfind('S');
  if (left != std::string_view::npos) prog = prog.substr(left + 1);
  auto w = prog.find('W');
  if (w != std::string_view::npos) {
    int xs = static_cast<int>(std::count(prog.begin(), prog.begin() + static_cast<long>(w), 'X'));
    bool at_state = w + 1 < prog.size() && prog[w + 1] == 'Y';
    d.state = std::max(1, at_state ? xs + 1 : xs);
  }
  return d;
}

std::optional<DecodedM> decode_m_configuration(const MachineTable &u, const Configuration &uc) {
  return decode_m_configuration(format_window(u, uc));
}

}  // namespace tmlab
