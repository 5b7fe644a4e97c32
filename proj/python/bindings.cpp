#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tmlab/lab.hpp"
#include "tmlab/rna_codec.hpp"

namespace py = pybind11;
using namespace tmlab;

namespace {

py::dict run_result(const MachineTable &t, const RunResult &r) {
  py::dict d;
  d["steps"] = r.steps;
  d["reason"] = to_string(r.reason);
  d["state"] = r.final.state;
  d["head"] = r.final.head;
  d["win"] = window_bounds(r.final).first;
  d["tape"] = format_window(t, r.final);
  return d;
}

Configuration start(const MachineTable &t, const std::string &input, Cell head, StateId state) {
  return make_configuration(t, input, head, state);
}

}  // namespace

PYBIND11_MODULE(_tmlab, m) {
  m.doc() = "Turing machine lab: the pedagogical universal machine and its RNA twin";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<EncodingError>(m, "EncodingError", PyExc_ValueError);
  py::register_exception<CodecError>(m, "CodecError", PyExc_ValueError);
  py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);

  py::class_<MachineTable>(m, "Machine")
      .def_readonly("name", &MachineTable::name)
      .def_readonly("alphabet", &MachineTable::alphabet)
      .def_readonly("states", &MachineTable::states)
      .def_property_readonly("letters", &MachineTable::letters)
      .def("to_text", &serialize_table)
      .def("__repr__", [](const MachineTable &t) {
        return "<Machine " + t.name + ": " + std::to_string(t.states) + " states, " +
               std::to_string(t.letters()) + " letters>";
      });

  m.def("parse_table", &parse_table, py::arg("source"));
  m.def("load_machine", &load_machine, py::arg("id_or_path"), "A bundled id or a path to a machine file");
  m.def("bundled_ids", &bundled_ids);

  m.def(
      "run",
      [](const MachineTable &t, const std::string &input, Cell head, StateId state, std::uint64_t max_steps,
         bool fence_left) {
        RunOptions o{max_steps, std::nullopt, nullptr};
        if (fence_left) o.fence_left = head;
        RunResult r;
        {
          py::gil_scoped_release nogil;
          r = run(t, start(t, input, head, state), o);
        }
        return run_result(t, r);
      },
      py::arg("machine"), py::arg("input"), py::arg("head") = 0, py::arg("state") = 1,
      py::arg("max_steps") = 10'000'000, py::arg("fence_left") = false);

  m.def(
      "trace",
      [](const MachineTable &t, const std::string &input, std::uint64_t every, std::uint64_t max_steps) {
        std::ostringstream o;
        export_trace({&t, start(t, input, 0, 1), max_steps}, o, every);
        std::vector<std::string> lines;
        std::istringstream in(o.str());
        for (std::string ln; std::getline(in, ln);) lines.push_back(ln);
        return lines;
      },
      py::arg("machine"), py::arg("input"), py::arg("every") = 1, py::arg("max_steps") = 10'000'000);

  m.def(
      "stats",
      [](const MachineTable &t) {
        auto s = table_stats(t);
        py::dict d;
        d["entries"] = s.entries;
        d["halting"] = s.halting;
        d["no_overwrite_nonhalt"] = s.no_overwrite_nonhalt;
        d["overwrite_nonhalt"] = s.overwrite_nonhalt;
        d["pure_glides"] = s.pure_glides;
        d["same_state_nonhalt"] = s.same_state_nonhalt;
        d["same_state_overwrite"] = s.same_state_overwrite;
        d["empty_entries"] = s.empty_entries;
        return d;
      },
      py::arg("machine"));

  m.def(
      "encode",
      [](const MachineTable &t, const std::string &input, Cell head) {
        return encode_initial_configuration(t, start(t, input, head, 1)).full;
      },
      py::arg("machine"), py::arg("input"), py::arg("head") = 0, "U's start tape for M on this input");
  m.def("encode_program", py::overload_cast<const MachineTable &>(&encode_program), py::arg("machine"));
  m.def("encoded_length", &encoded_length, py::arg("machine"));

  m.def(
      "decode_config",
      [](const std::string &text) -> py::object {
        auto d = decode_m_configuration(text);
        if (!d) return py::none();
        py::dict r;
        std::vector<int> ranks;
        for (Sym s : d->tape) ranks.push_back(s + 1);
        r["ranks"] = ranks;
        r["scanned"] = d->scanned;
        r["state"] = d->state;
        r["width"] = d->width;
        r["clean"] = d->clean;
        return r;
      },
      py::arg("text"), "M's tape (letter ranks), scanned square and state, or None");

  m.def("rna_encode", &rna_encode, py::arg("text"));
  m.def("rna_decode", &rna_decode, py::arg("rna"));

  m.def(
      "experiment",
      [](const std::string &id) {
        ExperimentReport r;
        {
          py::gil_scoped_release nogil;
          r = run_experiment(id);
        }
        py::dict d;
        d["id"] = r.id;
        d["steps"] = r.result.steps;
        d["reason"] = to_string(r.result.reason);
        d["expected_steps"] = r.expected_steps;
        d["region"] = r.region;
        d["expected_region"] = r.expected_region;
        return d;
      },
      py::arg("id"));

  m.def(
      "verify",
      [](std::optional<std::string> only) {
        std::vector<CriterionResult> res;
        {
          py::gil_scoped_release nogil;
          res = verify_all(only);
        }
        py::list out;
        for (auto &c : res) {
          py::dict d;
          d["id"] = c.id;
          d["passed"] = c.passed;
          d["expected"] = c.expected;
          d["actual"] = c.actual;
          d["notes"] = c.notes;
          out.append(d);
        }
        return out;
      },
      py::arg("only") = py::none());
}
