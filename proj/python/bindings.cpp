#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "trimoments/identities.hpp"
#include "trimoments/kappa.hpp"
#include "trimoments/moments.hpp"
#include "trimoments/partition.hpp"
#include "trimoments/polytope.hpp"
#include "trimoments/randmat.hpp"

namespace py = pybind11;
using namespace trimoments;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.str());
}

py::object integer(const BigInt& v) { return py::int_(py::str(to_string(v))); }

py::list coefficients(const Poly& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(fraction(c));
  return out;
}

py::list pairs(const PairPartition& p) {
  py::list out;
  for (const auto& [a, b] : p.pairs()) out.append(py::make_tuple(a, b));
  return out;
}

Poly expectation(const std::string& word, const std::string& method, unsigned threads) {
  const Word w = Word::parse(word);
  py::gil_scoped_release release;
  if (method == "direct") return expectation_direct(w, threads);
  if (method == "recursive") return expectation_recursive(w);
  throw std::invalid_argument("method must be 'direct' or 'recursive'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact moments of the triangular operator T.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<BoundError>(m, "BoundError", PyExc_ValueError);

  m.def("parse_word", [](const std::string& text) { return Word::parse(text).str(); },
        py::arg("text"), "Canonical rendering of a word over T and T*.");
  m.def("power_word", [](int k, int n) { return power_word(k, n).str(); }, py::arg("k"),
        py::arg("n"));
  m.def("mixed_moment_word", [](int form, int n) { return mixed_moment_word(form, n).str(); },
        py::arg("form"), py::arg("n"));

  m.def(
      "expectation",
      [](const std::string& word, const std::string& method, unsigned threads) {
        return coefficients(expectation(word, method, threads));
      },
      py::arg("word"), py::arg("method") = "direct", py::arg("threads") = 1,
      "Ascending coefficients of E(word) as Fractions.");
  m.def(
      "phi",
      [](const std::string& word, unsigned threads) {
        const Word w = Word::parse(word);
        Rational r;
        {
          py::gil_scoped_release release;
          r = phi_word(w, threads);
        }
        return fraction(r);
      },
      py::arg("word"), py::arg("threads") = 1);
  m.def(
      "expectation_via_integration",
      [](int k, int n) { return coefficients(expectation_via_integration(k, n)); }, py::arg("k"),
      py::arg("n"));
  m.def("main_formula", [](int k, int n) { return fraction(main_formula(k, n)); }, py::arg("k"),
        py::arg("n"));
  m.def("abel_expectation", [](int n) { return coefficients(abel_expectation(n)); },
        py::arg("n"));
  m.def(
      "abel_polynomial",
      [](int n, const py::object& a) {
        return coefficients(abel_polynomial(n, Rational::parse(py::str(a).cast<std::string>())));
      },
      py::arg("n"), py::arg("a") = 1);
  m.def("mixed_moment_closed", [](int form, int n) { return fraction(mixed_moment_closed(form, n)); },
        py::arg("form"), py::arg("n"));
  m.def(
      "signed_word_top_derivative",
      [](const std::string& word) {
        return fraction(signed_word_top_derivative(Word::parse(word)));
      },
      py::arg("word"));

  m.def(
      "admissible_partitions",
      [](const std::string& word) {
        py::list out;
        for (const auto& p : admissible_partitions(Word::parse(word))) out.append(pairs(p));
        return out;
      },
      py::arg("word"), "Admissible noncrossing pair partitions as lists of 1-based pairs.");
  m.def(
      "noncrossing_pair_partitions",
      [](int m) {
        py::list out;
        for (const auto& p : enumerate_nc2(m)) out.append(pairs(p));
        return out;
      },
      py::arg("m"));

  m.def(
      "multinomial",
      [](unsigned top, const std::vector<unsigned>& parts) {
        return integer(multinomial(top, std::span<const unsigned>(parts)));
      },
      py::arg("top"), py::arg("parts"));
  m.def("identity_lhs", [](int n, int k) { return integer(identity_lhs(n, k)); }, py::arg("n"),
        py::arg("k"));
  m.def("identity_rhs", [](int n, int k) { return integer(identity_rhs(n, k)); }, py::arg("n"),
        py::arg("k"));
  m.def(
      "identity_from_moments",
      [](int n, int k, int max_nk) {
        const auto [lhs, rhs] = identity_from_moments(n, k, max_nk);
        return py::make_tuple(integer(lhs), fraction(rhs));
      },
      py::arg("n"), py::arg("k"), py::arg("max_nk") = kDefaultMaxNk);

  m.def("volume_exact", [](int k, int n) { return fraction(volume_exact(k, n)); }, py::arg("k"),
        py::arg("n"));
  m.def("volume_polynomial", [](int k, int n) { return coefficients(volume_polynomial(k, n)); },
        py::arg("k"), py::arg("n"));
  m.def(
      "volume_montecarlo",
      [](int k, int n, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
        MonteCarloEstimate e;
        {
          py::gil_scoped_release release;
          e = volume_montecarlo(k, n, samples, seed, threads);
        }
        py::dict d;
        d["estimate"] = e.estimate;
        d["stderr"] = e.std_error;
        d["samples"] = e.samples;
        d["seed"] = e.seed;
        d["hits"] = e.hits;
        d["generator"] = e.generator;
        return d;
      },
      py::arg("k"), py::arg("n"), py::arg("samples"), py::arg("seed") = 1,
      py::arg("threads") = 1);

  m.def(
      "sample_moment",
      [](const std::string& word, int dim, int samples, std::uint64_t seed, unsigned threads) {
        const Word w = Word::parse(word);
        MatrixEnsembleConfig cfg;
        cfg.dim = dim;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.threads = threads;
        MomentEstimate e;
        {
          py::gil_scoped_release release;
          e = sample_moment(w, cfg);
        }
        py::dict d;
        d["mean"] = e.mean;
        d["stderr"] = e.std_error;
        d["imag_mean"] = e.imag_mean;
        d["samples"] = e.samples;
        return d;
      },
      py::arg("word"), py::arg("dim") = 300, py::arg("samples") = 200, py::arg("seed") = 1,
      py::arg("threads") = 1);
}
