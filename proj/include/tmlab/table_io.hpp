#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tmlab/machine.hpp"

namespace tmlab {

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

MachineTable parse_table(std::string_view source);
std::string serialize_table(const MachineTable &t);

// Bundled ids: addition, neary4x6, pedagogical-utm, rna-utm.
const std::vector<std::string> &bundled_ids();
const std::string &bundled_source(const std::string &id);
const MachineTable &bundled_machine(const std::string &id);

// A bundled id, or else a path to a machine file.
MachineTable load_machine(const std::string &id_or_path);

struct TableStats {
  long entries = 0;
  long halting = 0;
  long no_overwrite_nonhalt = 0;
  long overwrite_nonhalt = 0;
  long pure_glides = 0;
  long same_state_nonhalt = 0;
  long same_state_overwrite = 0;
  long empty_entries = 0;

  bool operator==(const TableStats &) const = default;
};

TableStats table_stats(const MachineTable &t);
std::vector<std::string> validate_for_encoding(const MachineTable &t);

}  // namespace tmlab
