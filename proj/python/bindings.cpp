// Python bindings over the word-level operations.  Words cross the boundary
// as strings in the same compact syntax the CLI accepts; counts come back as
// Python ints regardless of magnitude.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "plactic/characterize.hpp"
#include "plactic/counting.hpp"
#include "plactic/knuth.hpp"
#include "plactic/report.hpp"
#include "plactic/stability.hpp"
#include "plactic/tableau.hpp"
#include "plactic/word.hpp"

namespace py = pybind11;
using namespace plactic;

namespace {

py::object big(const BigInt& v) {
  PyObject* p = PyLong_FromString(v.str().c_str(), nullptr, 10);
  if (p == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(p);
}

std::vector<std::string> word_strings(const std::vector<Word>& words) {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const Word& w : words) out.push_back(w.str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_plactic, m) {
  m.doc() = "plactic monoid centralizers: tableau algorithms, membership "
            "characterizations, stability probes, and coefficient counting";

  m.def(
      "p_tableau",
      [](const std::string& w) { return p_tableau(Word::parse(w)).rows(); },
      py::arg("word"), "row-insertion tableau of a word, as a list of rows");

  m.def(
      "rsk",
      [](const std::string& w) {
        auto [p, q] = rsk(Word::parse(w));
        return py::make_tuple(p.rows(), q.rows());
      },
      py::arg("word"), "pair (P rows, Q rows) of the RSK correspondence");

  m.def(
      "reading_word",
      [](const std::vector<std::vector<Letter>>& rows) {
        return Tableau(rows).reading_word().str();
      },
      py::arg("rows"), "bottom-to-top reading word of a tableau");

  m.def(
      "jdt_product",
      [](const std::string& u, const std::string& v) {
        Tableau pu = p_tableau(Word::parse(u));
        Tableau pv = p_tableau(Word::parse(v));
        return jdt_rectify(SkewConfiguration::product(pu, pv)).rows();
      },
      py::arg("first"), py::arg("second"),
      "plactic product of two words via jeu de taquin rectification");

  m.def(
      "greene_invariant",
      [](const std::string& w, std::size_t i) {
        return greene_invariant(Word::parse(w), i);
      },
      py::arg("word"), py::arg("i"),
      "longest union of i weakly increasing subsequences");

  m.def(
      "knuth_class",
      [](const std::string& w, std::size_t max_len) {
        return word_strings(knuth_class(Word::parse(w), max_len));
      },
      py::arg("word"), py::arg("max_len") = 9,
      "all words plactically equivalent to the input, sorted");

  m.def(
      "knuth_equivalent",
      [](const std::string& v, const std::string& w) {
        return knuth_equivalent(Word::parse(v), Word::parse(w));
      },
      py::arg("first"), py::arg("second"));

  m.def(
      "in_centralizer",
      [](const std::string& u, const std::string& w) {
        return in_centralizer(Word::parse(u),
                              w.empty() ? Word{} : Word::parse(w));
      },
      py::arg("u"), py::arg("w"), "P(uw) == P(wu)");

  m.def(
      "two_letter_membership",
      [](const std::string& u, const std::string& w) {
        return two_letter_membership(Word::parse(u),
                                     w.empty() ? Word{} : Word::parse(w));
      },
      py::arg("u"), py::arg("w"),
      "closed-form membership test for two-letter base words");

  m.def(
      "staircase_membership",
      [](const std::string& w, Letter m) {
        return staircase_membership(w.empty() ? Word{} : Word::parse(w), m);
      },
      py::arg("w"), py::arg("m"),
      "closed-form membership test for the staircase word m(m-1)...1");

  m.def(
      "centralizer_words",
      [](const std::string& u, std::uint64_t n, Letter m) {
        return word_strings(centralizer_words(Word::parse(u), n, m));
      },
      py::arg("u"), py::arg("n"), py::arg("m"),
      "members of C(u) of length n over [m], sorted");

  m.def(
      "count_c",
      [](std::uint64_t n, Letter m, const std::string& u) {
        return big(count_c(n, m, Word::parse(u)));
      },
      py::arg("n"), py::arg("m"), py::arg("u") = std::string("1"),
      "number of length-n words over [m] in C(u)");

  m.def(
      "count_c_refined",
      [](std::uint64_t n, Letter m, std::size_t k, const std::string& u) {
        return big(count_c_refined(n, m, k, Word::parse(u)));
      },
      py::arg("n"), py::arg("m"), py::arg("k"),
      py::arg("u") = std::string("1"),
      "members with exactly k distinct letters");

  m.def(
      "b_count",
      [](std::uint64_t n, std::size_t k) { return big(b_count(n, k)); },
      py::arg("n"), py::arg("k"),
      "packed members of C(1): length n, exactly k distinct letters");

  m.def(
      "c_via_schur",
      [](std::uint64_t n, std::uint64_t m) {
        return big(c_via_schur_formula(n, m));
      },
      py::arg("n"), py::arg("m"),
      "c_{n,m}(1) through the symmetric-function identity");

  m.def(
      "slice_json",
      [](const std::string& u, std::uint64_t n, Letter m) {
        return slice_json(centralizer_slice(Word::parse(u), n, m)).dump();
      },
      py::arg("u"), py::arg("n"), py::arg("m"),
      "JSON report of the (n, m) slice of C(u), classes and weights");

  m.def(
      "coefficient_report_json",
      [](std::uint64_t n) { return coefficient_json(coefficient_report(n)).dump(); },
      py::arg("n"),
      "JSON report of the binomial-basis coefficients of m -> c_{n,m}(1)");

  m.def(
      "stability_report_json",
      [](const std::string& u, std::size_t max_power, std::size_t max_len,
         Letter max_letter, bool witnesses) {
        Word base = Word::parse(u);
        if (max_letter == 0) max_letter = base.max_letter() + 1;
        StabilityOptions opts;
        opts.with_members = witnesses;
        return stability_json(
                   stability_probe(base, max_power, max_len, max_letter, {},
                                   opts))
            .dump();
      },
      py::arg("u"), py::arg("max_power") = 4, py::arg("max_len") = 5,
      py::arg("max_letter") = 0, py::arg("witnesses") = false,
      "JSON report probing C'(u^k) for k = 1..max_power");

  m.def(
      "truncated_centralizer",
      [](const std::string& u, std::size_t max_len, Letter max_letter) {
        TruncatedCentralizer t =
            truncated_centralizer(Word::parse(u), max_len, max_letter);
        py::dict d;
        d["base"] = t.base.str();
        d["fingerprint"] = t.fingerprint;
        d["word_count"] = big(t.word_count);
        d["class_count"] = t.class_count;
        return d;
      },
      py::arg("u"), py::arg("max_len"), py::arg("max_letter"),
      "summary of C'(u) at a truncation: fingerprint and counts");
}
