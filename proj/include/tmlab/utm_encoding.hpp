#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tmlab/machine.hpp"

namespace tmlab {

struct EncodingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Field layout for a machine M with L letters and N states. Letter fields are
// LSB-first binary padded with h to a fixed width; state fields are unpadded.
struct EncodingScheme {
  int letter_field_width = 0;
  int L = 0;
  int N = 0;
  int P = 0;  // max(L, N): size of the unary work zone U builds on its left

  static EncodingScheme for_table(const MachineTable &t);
};

int bitlen(long n);
int field_width(int alphabet_size);
std::string encode_letter_field(int rank, int width);
std::string encode_state_field(int state);
std::string encode_instruction(const MachineTable &t, StateId s, Sym read, const EncodingScheme &sc);
std::string encode_program(const MachineTable &t, const EncodingScheme &sc);
std::string encode_program(const MachineTable &t);
std::string encode_tape(const std::vector<Sym> &m_tape, std::size_t scanned, const EncodingScheme &sc);

struct EncodedConfiguration {
  std::string full;  // over U's glyphs, starting at U cell 0
  Cell u_head = 0;
  StateId u_state = 1;
  std::size_t m_tape_start = 0;  // first cell after the rightmost S
};

// M's configuration must sit on a half tape starting at cell 0 with the head
// inside it and state 1.
EncodedConfiguration encode_initial_configuration(const MachineTable &m, const Configuration &mc);

// U-side configuration for an encoded start (blank = U's first letter).
Configuration u_configuration(const MachineTable &u, const EncodedConfiguration &e);

// U builds its scale of powers of two correctly only for N >= max(7, L), and
// cannot fetch the next state of the very last instruction (an S follows it).
// Appends unreachable states, each holding a single halt, until both hold;
// the padded machine behaves exactly like the original.
MachineTable pad_for_universal(const MachineTable &m);
inline constexpr int kMinUniversalStates = 7;

// Program length in U letters: the per-state X delimiters and instruction
// codes, without the two S markers or any tape.
long encoded_length(const MachineTable &t);

struct DecodedM {
  std::vector<Sym> tape;  // 0-based letters of M, one per square
  std::size_t scanned = 0;
  StateId state = 1;
  int width = 0;
  bool clean = false;
};

// Reads M's configuration back out of a U tape given as text. Returns
// nullopt when the tape region cannot be split into squares at all.
std::optional<DecodedM> decode_m_configuration(std::string_view u_text);
std::optional<DecodedM> decode_m_configuration(const MachineTable &u, const Configuration &uc);

// The text right of the rightmost S, trailing U-blanks dropped.
std::string tape_region(std::string_view u_text);

}  // namespace tmlab
