// tmlab: run, encode and check the universal machines from the command line.
#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "tmlab/lab.hpp"
#include "tmlab/rna_codec.hpp"

using namespace tmlab;

namespace {

// "@path" reads the text from a file; whitespace is dropped either way.
std::string text_arg(const std::string &arg) {
  std::string raw = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream f(arg.substr(1));
    if (!f) throw std::runtime_error("cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << f.rdbuf();
    raw = ss.str();
  }
  std::string out;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

void print_stats(const MachineTable &t, const std::string &format) {
  auto s = table_stats(t);
  if (format == "records") {
    std::cout << "machine=" << t.name << " entries=" << s.entries << " halting=" << s.halting
              << " no_overwrite_nonhalt=" << s.no_overwrite_nonhalt << " overwrite_nonhalt=" << s.overwrite_nonhalt
              << " pure_glides=" << s.pure_glides << " same_state_nonhalt=" << s.same_state_nonhalt
              << " same_state_overwrite=" << s.same_state_overwrite << " empty_entries=" << s.empty_entries << "\n";
    return;
  }
  auto row = [](const char *k, long v) { std::cout << "  " << std::left << std::setw(22) << k << std::right << std::setw(6) << v << "\n"; };
  std::cout << t.name << " (" << t.states << " states, " << t.letters() << " letters)\n";
  row("entries", s.entries);
  row("halting", s.halting);
  row("no_overwrite_nonhalt", s.no_overwrite_nonhalt);
  row("overwrite_nonhalt", s.overwrite_nonhalt);
  row("pure_glides", s.pure_glides);
  row("same_state_nonhalt", s.same_state_nonhalt);
  row("same_state_overwrite", s.same_state_overwrite);
  row("empty_entries", s.empty_entries);
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Turing machine lab: the pedagogical universal machine, its RNA twin, and their checks"};
  app.require_subcommand(1);

  // run
  auto *run_cmd = app.add_subcommand("run", "Run a machine on an input tape");
  std::string machine, input, trace_path;
  long long head = 0;
  int state = 1;
  std::uint64_t max_steps = 10'000'000, every = 1;
  bool fence = false;
  run_cmd->add_option("machine", machine, "Bundled id or machine file")->required();
  run_cmd->add_option("--input", input, "Tape glyphs, starting at cell 0")->required();
  run_cmd->add_option("--head", head, "Start cell of the head");
  run_cmd->add_option("--state", state, "Start state");
  run_cmd->add_option("--max-steps", max_steps, "Step budget");
  run_cmd->add_flag("--fence-left", fence, "Stop if the head moves left of its start cell");
  run_cmd->add_option("--trace", trace_path, "Write a trace file");
  run_cmd->add_option("--trace-every", every, "Trace stride")->check(CLI::PositiveNumber);

  // encode
  auto *enc_cmd = app.add_subcommand("encode", "Print U's start tape for a machine and input");
  std::string enc_machine, enc_input;
  long long enc_head = 0;
  enc_cmd->add_option("machine", enc_machine)->required();
  enc_cmd->add_option("--input", enc_input)->required();
  enc_cmd->add_option("--head", enc_head, "Scanned cell of M");

  // decode-config
  auto *dec_cmd = app.add_subcommand("decode-config", "Read M's configuration out of a U tape");
  std::string dec_text, dec_machine;
  dec_cmd->add_option("tape", dec_text, "U tape text or @file")->required();
  dec_cmd->add_option("--machine", dec_machine, "Show letters with this machine's glyphs");

  // rna
  auto *rna_cmd = app.add_subcommand("rna", "Translate between U letters and RNA");
  std::string rna_dir, rna_text;
  rna_cmd->add_option("direction", rna_dir)->required()->check(CLI::IsMember({"encode", "decode"}));
  rna_cmd->add_option("text", rna_text, "Text or @file")->required();

  // stats
  auto *stats_cmd = app.add_subcommand("stats", "Instruction census of a machine");
  std::string stats_machine, stats_format = "text";
  stats_cmd->add_option("machine", stats_machine)->required();
  stats_cmd->add_option("--format", stats_format)->check(CLI::IsMember({"text", "records"}));

  // experiment
  auto *exp_cmd = app.add_subcommand("experiment", "Run E1, E2 or E3 and compare with the reference");
  std::string exp_id;
  exp_cmd->add_option("id", exp_id)->required()->check(CLI::IsMember({"E1", "E2", "E3"}));

  // verify
  auto *ver_cmd = app.add_subcommand("verify", "Run the acceptance checks");
  std::string only;
  ver_cmd->add_option("--only", only, "A single criterion, e.g. A1");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      auto t = load_machine(machine);
      auto c = make_configuration(t, input, head, state);
      if (!trace_path.empty()) {
        std::ofstream f(trace_path);
        if (!f) throw std::runtime_error("cannot write " + trace_path);
        export_trace({&t, c, max_steps}, f, every);
      }
      RunOptions opt{max_steps, std::nullopt, nullptr};
      if (fence) opt.fence_left = head;
      auto r = run(t, c, opt);
      std::cout << "steps=" << r.steps << " reason=" << to_string(r.reason) << " state=" << r.final.state
                << " head=" << r.final.head << " win=" << window_bounds(r.final).first << "\n"
                << format_window(t, r.final) << "\n";
      return 0;
    }
    if (*enc_cmd) {
      auto t = load_machine(enc_machine);
      auto e = encode_initial_configuration(t, make_configuration(t, enc_input, enc_head));
      std::cout << e.full << "\n";
      return 0;
    }
    if (*dec_cmd) {
      auto d = decode_m_configuration(text_arg(dec_text));
      if (!d) {
        std::cerr << "no tape region found\n";
        return 1;
      }
      std::string tape;
      if (!dec_machine.empty()) {
        auto t = load_machine(dec_machine);
        for (Sym s : d->tape) tape.push_back(s < t.letters() ? t.alphabet[s] : '?');
      } else {
        for (std::size_t i = 0; i < d->tape.size(); ++i) tape += (i ? "," : "") + std::to_string(d->tape[i] + 1);
      }
      std::cout << "tape=" << tape << " scanned=" << d->scanned << " state=" << d->state
                << " width=" << d->width << " clean=" << (d->clean ? "yes" : "no") << "\n";
      return 0;
    }
    if (*rna_cmd) {
      auto s = text_arg(rna_text);
      std::cout << (rna_dir == "encode" ? rna_encode(s) : rna_decode(s)) << "\n";
      return 0;
    }
    if (*stats_cmd) {
      print_stats(load_machine(stats_machine), stats_format);
      return 0;
    }
    if (*exp_cmd) {
      auto r = run_experiment(exp_id);
      std::cout << r.id << ": steps=" << r.result.steps << " (reference " << r.expected_steps << ", "
                << (r.steps_ok() ? "equal" : "differs") << ") reason=" << to_string(r.result.reason) << "\n"
                << "region:    " << r.region << "\n"
                << "reference: " << r.expected_region << "\n"
                << "region " << (r.region_ok() ? "matches" : "differs") << "\n";
      return r.steps_ok() && r.region_ok() ? 0 : 1;
    }
    if (*ver_cmd) {
      auto res = verify_all(only.empty() ? std::nullopt : std::optional<std::string>(only));
      bool all = true;
      for (auto &c : res) {
        all = all && c.passed;
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.id << ": " << c.actual << "\n";
        if (!c.passed) std::cout << "     expected: " << c.expected << "\n";
        for (auto &n : c.notes) std::cout << "     " << n << "\n";
      }
      return all ? 0 : 1;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
