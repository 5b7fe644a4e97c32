#pragma once

#include <array>
#include <string>
#include <string_view>

#include "tmlab/machine.hpp"
#include "tmlab/utm_encoding.hpp"

namespace tmlab {

struct CodecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two nucleotides per letter of U.
struct RnaPair {
  char glyph;
  const char *pair;
};
const std::array<RnaPair, 16> &rna_map();

std::string rna_encode(std::string_view u_text);
std::string rna_decode(std::string_view rna);

// rnaU's start: the RNA image of U's start tape, head on the second
// nucleotide of U's start cell, state 1. Unwritten cells read as the image
// of U's blank, pair-aligned from cell 0.
Configuration rna_initial_configuration(const MachineTable &rna, const EncodedConfiguration &e);

}  // namespace tmlab
