// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "bwords/bwords.hpp"

namespace py = pybind11;

namespace {

using Symbols = std::vector<bwords::Symbol>;

py::int_ to_python(const bwords::BigCount& value) {
  const std::string digits = value.get_str(10);
  return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

bwords::BigCount from_python(const py::int_& value) {
  if (PyObject_RichCompareBool(value.ptr(), py::int_(0).ptr(), Py_LT) == 1) {
    throw py::value_error("expected a non-negative integer");
  }
  return bwords::BigCount(py::str(value).cast<std::string>(), 10);
}

Symbols symbols_of(const bwords::Word& w) { return {w.symbols().begin(), w.symbols().end()}; }

}  // namespace

PYBIND11_MODULE(_bwords, m) {
  m.doc() = "Ranking, unranking, counting and sampling of bordered and unbordered words";

  py::enum_<bwords::WordClass>(m, "WordClass")
      .value("BORDERED", bwords::WordClass::Bordered)
      .value("UNBORDERED", bwords::WordClass::Unbordered);

  // ParseError derives from std::invalid_argument and already maps to ValueError.
  py::register_exception<bwords::DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("compute_lps", [](Symbols w, unsigned k) {
    return bwords::compute_lps(bwords::Word(std::move(w), k)).lengths;
  }, py::arg("word"), py::arg("k"));
  m.def("unbordered_prefix_indicator", [](Symbols w, unsigned k) {
    return bwords::unbordered_prefix_indicator(bwords::Word(std::move(w), k)).bits;
  }, py::arg("word"), py::arg("k"));
  m.def("border_indicator", [](Symbols w, unsigned k) {
    return bwords::border_indicator(bwords::Word(std::move(w), k)).bits;
  }, py::arg("word"), py::arg("k"));
  m.def("is_bordered", [](Symbols w, unsigned k) {
    return bwords::is_bordered(bwords::Word(std::move(w), k));
  }, py::arg("word"), py::arg("k"));

  m.def("count_bordered_with_prefix", [](Symbols u, std::size_t n, unsigned k) {
    return to_python(bwords::count_bordered_with_prefix(bwords::Word(std::move(u), k), n));
  }, py::arg("prefix"), py::arg("n"), py::arg("k"));
  m.def("count_bordered", [](std::size_t n, unsigned k) {
    return to_python(bwords::count_bordered(n, k));
  }, py::arg("n"), py::arg("k"));
  m.def("count_unbordered", [](std::size_t n, unsigned k) {
    return to_python(bwords::count_unbordered(n, k));
  }, py::arg("n"), py::arg("k"));

  m.def("rank", [](Symbols w, unsigned k, bwords::WordClass kind) {
    return to_python(bwords::rank(bwords::Word(std::move(w), k), kind).value);
  }, py::arg("word"), py::arg("k"), py::arg("kind"));
  m.def("rank_bordered", [](Symbols w, unsigned k) {
    return to_python(bwords::rank_bordered(bwords::Word(std::move(w), k)).value);
  }, py::arg("word"), py::arg("k"));
  m.def("rank_unbordered", [](Symbols w, unsigned k) {
    return to_python(bwords::rank_unbordered(bwords::Word(std::move(w), k)).value);
  }, py::arg("word"), py::arg("k"));

  m.def("unrank", [](const py::int_& r, std::size_t n, unsigned k, bwords::WordClass kind) {
    return symbols_of(bwords::unrank(from_python(r), n, k, kind));
  }, py::arg("rank"), py::arg("n"), py::arg("k"), py::arg("kind"));
  m.def("sample", [](std::size_t n, unsigned k, bwords::WordClass kind, std::uint64_t seed,
                     std::size_t count) {
    bwords::UniformSampler sampler(n, k, kind, seed);
    std::vector<Symbols> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(symbols_of(sampler.next()));
    return out;
  }, py::arg("n"), py::arg("k"), py::arg("kind"), py::arg("seed") = 0, py::arg("count") = 1);

  m.def("parse_word", [](const std::string& text, unsigned k) {
    return symbols_of(bwords::parse_word(text, k));
  }, py::arg("text"), py::arg("k"));
  m.def("render_word", [](Symbols w, unsigned k) {
    return bwords::render_word(bwords::Word(std::move(w), k));
  }, py::arg("word"), py::arg("k"));

  auto oracle = m.def_submodule("oracle", "Brute-force reference implementations");
  oracle.def("is_bordered_naive", [](Symbols w, unsigned k) {
    return bwords::oracle::is_bordered_naive(bwords::Word(std::move(w), k));
  }, py::arg("word"), py::arg("k"));
  oracle.def("enumerate_class", [](std::size_t n, unsigned k, bwords::WordClass kind) {
    const auto listing = bwords::oracle::enumerate_class(n, k, kind);
    std::vector<Symbols> out;
    out.reserve(listing.words.size());
    for (const auto& w : listing.words) out.push_back(symbols_of(w));
    return out;
  }, py::arg("n"), py::arg("k"), py::arg("kind"));
  oracle.def("rank_naive", [](Symbols w, unsigned k, bwords::WordClass kind) {
    return to_python(bwords::oracle::rank_naive(bwords::Word(std::move(w), k), kind).value);
  }, py::arg("word"), py::arg("k"), py::arg("kind"));
}
