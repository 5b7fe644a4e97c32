#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tmlab/machine.hpp"
#include "tmlab/table_io.hpp"
#include "tmlab/utm_encoding.hpp"

namespace tmlab {

// ---- golden values the harness checks against
namespace golden {
inline constexpr const char *addition_input = "*|||*||*";
inline constexpr const char *e1_final = "*|||*||*|||||*";
inline constexpr std::uint64_t e1_steps = 106;
inline constexpr const char *e2_initial_region = "SW01hhU11hhU11hhU11hhU01hhU11hhU11hhU01hh";
inline constexpr const char *e2_final_region =
    "SW01hhU11hhU11hhU11hhU01hhU11hhU11hhU01hhU11hhU11hhU11hhU11hhU11hhU01hh";
inline constexpr std::uint64_t e2_steps = 1'143'717;
inline constexpr const char *e3_initial_region =
    "UUUGCACUGAGAGGCUCUGAGAGGCUCUGAGAGGCUCUGAGA"
    "GGCACUGAGAGGCUCUGAGAGGCUCUGAGAGGCACUGAGACG";
inline constexpr const char *e3_final_region =
    "UUUGCACUGAGAGGCUCUGAGAGGCUCUGAGAGGCUCUGAGA"
    "GGCACUGAGAGGCUCUGAGAGGCUCUGAGAGGCACUGAGAGG"
    "CUCUGAGAGGCUCUGAGAGGCUCUGAGAGGCUCUGAGA"
    "GGCUCUGAGAGGCACUGAGACG";
inline constexpr std::uint64_t e3_steps = 2'303'033;

// state 42 of U, encoded, and its RNA image
inline constexpr const char *u_state42 =
    "XY1hhhhhZ010101Y01hhhhL010101Y11hhhhL010101Y001hhhR110101"
    "Y101hhhL010101Y011hhhZ010101Y111hhhL010101Y0001hhL010101"
    "Y1001hhZ010101Y0101hhZ010101Y1101hhL010101Y0011hhL010101"
    "Y1011hhL010101Y0111hhL010101Y1111hhZ010101Y00001hZ010101";
inline constexpr const char *u_state42_rna =
    "AACCCUGAGAGAGAGAAUCACUCACUCACUCCCACUGAGAGAGAACCACUCACUCACU"
    "CCCUCUGAGAGAGAACCACUCACUCACUCCCACACUGAGAGAAGCUCUCACUCACU"
    "CCCUCACUGAGAGAACCACUCACUCACUCCCACUCUGAGAGAAUCACUCACUCACU"
    "CCCUCUCUGAGAGAACCACUCACUCACUCCCACACACUGAGAACCACUCACUCACU"
    "CCCUCACACUGAGAAUCACUCACUCACUCCCACUCACUGAGAAUCACUCACUCACU"
    "CCCUCUCACUGAGAACCACUCACUCACUCCCACACUCUGAGAACCACUCACUCACU"
    "CCCUCACUCUGAGAACCACUCACUCACUCCCACUCUCUGAGAACCACUCACUCACU"
    "CCCUCUCUCUGAGAAUCACUCACUCACUCCCACACACACUGAAUCACUCACUCACU";
inline constexpr const char *neary_rna =
    "AACCCACACUGAACCUCCCUCUGAGAACCU"
    "CCCACUGAGAACCUCCCUGAGAGAAGCACU"
    "AACCCUCUGAGAAGCUCACUCCCUCUGAGAAGCACU"
    "CCCUCUGAGAAGCUCCCUGAGAGAAGCACU"
    "AACCCACACUGAACCUCUCCCACUGAGAAGCUCACU"
    "CCCACUGAGAACCUCUCCCACACUGAACCUCACU"
    "AACCCUGAGAGAAGCUCACUCCCUCUGAGAAGCACACU"
    "CCCACUGAGAAGCACUCCCAGAGAGAAGCACACU"
    "AACCCACUGAGAACCUCUCCCUCUGAGAAGCACUCU"
    "CCCACUGAGAACCACUCUCCCACACUGAAGCUCACU"
    "AACCCUGAGAGAAUCACUCUCCCUCUGAGAAGCUCACU"
    "CCCACUGAGAACCACACUCCCUCUGAGAAGCU";
inline constexpr long u_code_length = 10'351;
inline constexpr long u_code_rna_length = 20'702;
inline constexpr long neary_code_length_prose = 206;
inline constexpr long neary_rna_length = 410;

// the binary -> unary conversion zone while U converts 011
inline constexpr const char *scale_a = "d000d0ddF000000000S";
inline constexpr const char *scale_b = "d000e0ehF000000000S";
inline constexpr const char *scale_c = "d000L0ehF000000000S";
inline constexpr const char *scale_d = "d000d0LhFhhhh00000S";
inline constexpr const char *scale_e = "d000d0ddFhhhhhh000S";
}  // namespace golden

// ---- experiments

struct RunSpec {
  const MachineTable *table = nullptr;
  Configuration initial;
  std::uint64_t budget = 0;
};

RunSpec experiment_spec(const std::string &id);  // E1, E2, E3

struct ExperimentReport {
  std::string id;
  RunResult result;
  std::uint64_t expected_steps = 0;
  std::string region;
  std::string expected_region;
  bool steps_ok() const { return result.steps == expected_steps; }
  bool region_ok() const { return region == expected_region; }
};

ExperimentReport run_experiment(const std::string &id);

// rnaU's tape read back as U letters (pairs aligned on even cells).
std::string rna_tape_as_u(const MachineTable &rna, const Configuration &c);
// Region of a run's final tape that each experiment compares.
std::string experiment_region(const std::string &id, const Configuration &final);

// ---- refinement

using Projector = std::function<std::optional<Configuration>(const Configuration &)>;

struct RefinementReport {
  std::uint64_t matched = 0;
  std::uint64_t total_high = 0;
  struct Mismatch {
    std::uint64_t high_step = 0;
    std::uint64_t low_step = 0;
    std::string diff;
  };
  std::optional<Mismatch> first_mismatch;
  bool passed = false;
};

RefinementReport check_refinement(const MachineTable &high, const Configuration &high_init,
                                  const MachineTable &low, const Configuration &low_init,
                                  const Projector &project, std::uint64_t high_budget,
                                  std::uint64_t low_budget);

Projector u_to_m_projector(const MachineTable &m);
Projector rna_to_u_projector(const MachineTable &rna, const MachineTable &u);

// ---- streaming probes

std::vector<std::optional<std::uint64_t>> scan_for_snapshots(const RunSpec &spec,
                                                             const std::vector<std::string> &patterns);

std::string trace_record(const MachineTable &t, std::uint64_t step, const Configuration &c);
std::uint64_t export_trace(const RunSpec &spec, std::ostream &sink, std::uint64_t every);

// ---- random machines for property checks

struct RandomMachineOptions {
  int max_states = 4;
  int max_letters = 4;
  double empty_rate = 0.15;
  double explicit_rate = 0.05;
  bool allow_stay = false;
};
MachineTable random_machine(std::mt19937_64 &rng, const RandomMachineOptions &o = {});
std::string random_input(std::mt19937_64 &rng, const MachineTable &t, int max_len);

// ---- acceptance

struct CriterionResult {
  std::string id;
  bool passed = false;
  std::string expected;
  std::string actual;
  std::vector<std::string> notes;
};

const std::vector<std::string> &criterion_ids();
CriterionResult verify_criterion(const std::string &id);
std::vector<CriterionResult> verify_all(const std::optional<std::string> &only = std::nullopt);

}  // namespace tmlab
