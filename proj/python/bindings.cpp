#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>

#include "lcsk/match_gen.hpp"
#include "lcsk/oracle.hpp"
#include "lcsk/report.hpp"
#include "lcsk/solver.hpp"
#include "lcsk/suffix_array.hpp"

namespace py = pybind11;
using namespace lcsk;

namespace {

void bind_enums(py::module_& m) {
  py::enum_<Mode>(m, "Mode")
      .value("LCSK", Mode::Lcsk)
      .value("LCSKPLUS", Mode::LcskPlus);
  py::enum_<RowStrategy>(m, "RowStrategy")
      .value("AUTO", RowStrategy::Auto)
      .value("FORCE_SPARSE", RowStrategy::ForceSparse)
      .value("FORCE_DENSE", RowStrategy::ForceDense);
  py::enum_<UpdateRule>(m, "UpdateRule")
      .value("KSTEP", UpdateRule::KStep)
      .value("TREE", UpdateRule::Tree);
  py::enum_<GeneratorChoice>(m, "GeneratorChoice")
      .value("AUTO", GeneratorChoice::Auto)
      .value("HASHING", GeneratorChoice::Hashing)
      .value("SUFFIX_ARRAY", GeneratorChoice::SuffixArray);
  py::enum_<GeneratorKind>(m, "GeneratorKind")
      .value("HASHING", GeneratorKind::Hashing)
      .value("SUFFIX_ARRAY", GeneratorKind::SuffixArray);
  py::enum_<AlphabetChoice>(m, "AlphabetChoice")
      .value("AUTO", AlphabetChoice::Auto)
      .value("DNA", AlphabetChoice::Dna)
      .value("BYTE", AlphabetChoice::Byte);
}

void bind_types(py::module_& m) {
  py::class_<MatchPair>(m, "MatchPair")
      .def(py::init<int64_t, int64_t>(), py::arg("i"), py::arg("j"))
      .def_readonly("i", &MatchPair::i)
      .def_readonly("j", &MatchPair::j)
      .def(py::self == py::self)
      .def("__repr__", [](const MatchPair& p) {
        return "MatchPair(i=" + std::to_string(p.i) + ", j=" + std::to_string(p.j) + ")";
      });

  py::class_<ChainSegment>(m, "ChainSegment")
      .def(py::init<int64_t, int64_t, int64_t>(), py::arg("i"), py::arg("j"), py::arg("len"))
      .def_readonly("i", &ChainSegment::i)
      .def_readonly("j", &ChainSegment::j)
      .def_readonly("len", &ChainSegment::len)
      .def(py::self == py::self)
      .def("__repr__", [](const ChainSegment& s) {
        return "ChainSegment(i=" + std::to_string(s.i) + ", j=" + std::to_string(s.j) +
               ", len=" + std::to_string(s.len) + ")";
      });

  py::class_<MemoryStats>(m, "MemoryStats")
      .def_readonly("match_pairs_total", &MemoryStats::match_pairs_total)
      .def_readonly("max_nodes_in_memory", &MemoryStats::max_nodes_in_memory)
      .def_readonly("compression_factor", &MemoryStats::compression_factor);

  py::class_<SolveResult>(m, "SolveResult")
      .def_readonly("length", &SolveResult::length)
      .def_readonly("chain", &SolveResult::chain)
      .def_readonly("stats", &SolveResult::stats)
      .def_readonly("sparse_rows", &SolveResult::sparse_rows)
      .def_readonly("dense_rows", &SolveResult::dense_rows)
      .def_readonly("generator_used", &SolveResult::generator_used);

  py::class_<SolverConfig>(m, "SolverConfig")
      .def(py::init<>())
      .def_readwrite("mode", &SolverConfig::mode)
      .def_readwrite("k", &SolverConfig::k)
      .def_readwrite("row_strategy", &SolverConfig::row_strategy)
      .def_readwrite("lcskplus_update", &SolverConfig::lcskplus_update)
      .def_readwrite("generator", &SolverConfig::generator)
      .def_readwrite("alphabet", &SolverConfig::alphabet)
      .def_readwrite("reconstruct", &SolverConfig::reconstruct);

  py::class_<oracle::ChainCheck>(m, "ChainCheck")
      .def_readonly("ok", &oracle::ChainCheck::ok)
      .def_readonly("score", &oracle::ChainCheck::score)
      .def_readonly("reason", &oracle::ChainCheck::reason);
}

void bind_operations(py::module_& m) {
  m.def("solve", &solve, py::arg("a"), py::arg("b"), py::arg("config"),
        "Length (and optionally one optimal chain) for the configured variant.");

  m.def(
      "match_pairs",
      [](const Sequence& a, const Sequence& b, int64_t k, GeneratorChoice generator) {
        Alphabet alpha = Alphabet::discover(a, b);
        auto stream = make_stream(a, b, k, alpha, generator);
        return collect_match_pairs(*stream, seq_length(a), k);
      },
      py::arg("a"), py::arg("b"), py::arg("k"), py::arg("generator") = GeneratorChoice::Auto,
      "All k-length match pairs in row-major order.");

  m.def("merge_chain_segments",
        [](const std::vector<MatchPair>& chain, int64_t k, Mode mode) {
          return merge_chain_segments(chain, k, mode);
        },
        py::arg("chain"), py::arg("k"), py::arg("mode"));

  m.def("suffix_array",
        [](const Sequence& text) { return build_suffix_array(text); },
        py::arg("text"));
  m.def("lcp_array",
        [](const Sequence& text, const std::vector<int64_t>& sa) {
          return build_lcp(text, sa);
        },
        py::arg("text"), py::arg("sa"));
}

void bind_oracle(py::module_& m) {
  py::module_ o = m.def_submodule("oracle", "Quadratic reference implementations");
  o.def(
      "dp_length",
      [](const Sequence& a, const Sequence& b, int64_t k, Mode mode) {
        return oracle::dp_table(a, b, k, mode).result();
      },
      py::arg("a"), py::arg("b"), py::arg("k"), py::arg("mode"));
  o.def(
      "validate_chain",
      [](const Sequence& a, const Sequence& b, int64_t k, Mode mode,
         const std::vector<std::tuple<int64_t, int64_t, int64_t>>& segments) {
        std::vector<ChainSegment> segs;
        segs.reserve(segments.size());
        for (const auto& [i, j, len] : segments) segs.push_back({i, j, len});
        return oracle::validate_chain(a, b, k, mode, segs);
      },
      py::arg("a"), py::arg("b"), py::arg("k"), py::arg("mode"), py::arg("segments"));
  o.def(
      "dominant_points",
      [](const Sequence& a, const Sequence& b, int64_t k, Mode mode) {
        std::vector<std::tuple<int64_t, int64_t, int64_t>> out;
        for (const auto& p : oracle::dominant_points(oracle::dp_table(a, b, k, mode))) {
          out.emplace_back(p.i, p.j, p.q);
        }
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("k"), py::arg("mode"));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sparse solver for longest common subsequence in k-length blocks";
  m.attr("__version__") = "0.1.0";

  bind_enums(m);
  bind_types(m);
  bind_operations(m);
  bind_oracle(m);

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<AlphabetTooLargeError>(m, "AlphabetTooLargeError", PyExc_ValueError);
}
