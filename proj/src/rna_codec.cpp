#include "tmlab/rna_codec.hpp"

namespace tmlab {

const std::array<RnaPair, 16> &rna_map() {
  static const std::array<RnaPair, 16> m{{
      {'S', "UU"}, {'X', "AA"}, {'Y', "CC"}, {'U', "GG"},
      {'T', "UA"}, {'F', "UC"}, {'W', "UG"}, {'_', "CG"},
      {'L', "AC"}, {'R', "AG"}, {'0', "CA"}, {'1', "CU"},
      {'h', "GA"}, {'d', "GC"}, {'e', "GU"}, {'Z', "AU"},
  }};
  return m;
}

namespace {

int nuc(char c) {
  switch (c) {
    case 'A': return 0;
    case 'C': return 1;
    case 'G': return 2;
    case 'U': return 3;
  }
  return -1;
}

struct Tables {
  std::array<const char *, 256> fwd{};
  std::array<char, 16> back{};
  Tables() {
    for (auto &p : rna_map()) {
      fwd[static_cast<unsigned char>(p.glyph)] = p.pair;
      back[static_cast<std::size_t>(nuc(p.pair[0]) * 4 + nuc(p.pair[1]))] = p.glyph;
    }
    for (char g : back)
      if (!g) throw std::logic_error("rna map is not total");
  }
};

const Tables &tables() {
  static const Tables t;
  return t;
}

}  // namespace

std::string rna_encode(std::string_view u_text) {
  auto &t = tables();
  std::string out;
  out.reserve(2 * u_text.size());
  for (char c : u_text) {
    const char *p = t.fwd[static_cast<unsigned char>(c)];
    if (!p) throw CodecError(std::string("not a letter of U: '") + c + "'");
    out.append(p, 2);
  }
  return out;
}

std::string rna_decode(std::string_view rna) {
  if (rna.size() % 2) throw CodecError("odd-length RNA text");
  auto &t = tables();
  std::string out;
  out.reserve(rna.size() / 2);
  for (std::size_t i = 0; i < rna.size(); i += 2) {
    int a = nuc(rna[i]), b = nuc(rna[i + 1]);
    if (a < 0 || b < 0) throw CodecError("not a nucleotide at offset " + std::to_string(a < 0 ? i : i + 1));
    out.push_back(t.back[static_cast<std::size_t>(a * 4 + b)]);
  }
  return out;
}

Configuration rna_initial_configuration(const MachineTable &rna, const EncodedConfiguration &e) {
  auto blank = rna.syms(rna_encode("_"));
  Configuration c{Tape(rna.syms(rna_encode(e.full)), 0, blank), 2 * e.u_head + 1, 1};
  return c;
}

}  // namespace tmlab
