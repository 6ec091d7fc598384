#include "algradix/api.hpp"
#include "algradix/error.hpp"

#include <pybind11/pybind11.h>

namespace py = pybind11;
using namespace algradix;

namespace {

api::Options options(const std::string& poly, const std::string& base, int precision_bits, int threads) {
  api::Options o;
  o.poly = poly;
  o.base = base;
  o.base_options.precision_bits = precision_bits;
  o.threads = threads;
  return o;
}

}  // namespace

PYBIND11_MODULE(_algradix, m) {
  m.doc() = "Digit systems over algebraic bases; every function returns a JSON string.";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object cls = py::reinterpret_borrow<py::object>(error.ptr());
      py::object exc = cls(std::string(to_string(e.kind())) + ": " + e.what());
      exc.attr("kind") = to_string(e.kind());
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.attr("version") = "0.1.0";

  m.def(
      "analyze",
      [](const std::string& poly, const std::string& base, int bits) {
        return api::analyze(options(poly, base, bits, 1)).dump();
      },
      py::arg("poly") = "", py::arg("base") = "", py::arg("precision_bits") = 40);
  m.def(
      "expand",
      [](const std::string& poly, const std::string& base, const std::string& digits, const std::string& value) {
        return api::expand(options(poly, base, 40, 1), digits, value).dump();
      },
      py::arg("poly") = "", py::arg("base") = "", py::arg("digits") = "", py::arg("value") = "0");
  m.def(
      "periodic",
      [](const std::string& poly, const std::string& base, const std::string& digits, int threads) {
        return api::periodic(options(poly, base, 40, threads), digits).dump();
      },
      py::arg("poly") = "", py::arg("base") = "", py::arg("digits") = "", py::arg("threads") = 1);
  m.def(
      "is_ns",
      [](const std::string& poly, const std::string& base, const std::string& digits) {
        return api::is_ns(options(poly, base, 40, 1), digits).dump();
      },
      py::arg("poly") = "", py::arg("base") = "", py::arg("digits") = "");
  m.def(
      "rational_digits", [](const std::string& base) { return api::rational_digits(base).dump(); }, py::arg("base"));
  m.def(
      "rational_verify",
      [](const std::string& base, const std::string& digits) { return api::rational_verify(base, digits).dump(); },
      py::arg("base"), py::arg("digits") = "");
  m.def(
      "rational_transduce",
      [](const std::string& base, const std::string& start, const std::string& word, const std::string& digits) {
        return api::rational_transduce(base, digits, start, word).dump();
      },
      py::arg("base"), py::arg("start"), py::arg("word"), py::arg("digits") = "");
  m.def(
      "zero_automaton",
      [](const std::string& poly, const std::string& base, long h, bool trimmed, int threads) {
        return api::zero_automaton(options(poly, base, 40, threads), h, trimmed).dump();
      },
      py::arg("poly") = "", py::arg("base") = "", py::arg("height") = 1, py::arg("trim") = false,
      py::arg("threads") = 1);
  m.def(
      "min_height",
      [](const std::string& poly, const std::string& base, long h_max) {
        return api::min_height(options(poly, base, 40, 1), h_max).dump();
      },
      py::arg("poly") = "", py::arg("base") = "", py::arg("max_h") = 0);
  m.def(
      "count",
      [](const std::string& poly, long h, std::size_t length, bool growth) {
        return api::count(options(poly, "", 40, 1), h, length, growth).dump();
      },
      py::arg("poly"), py::arg("height"), py::arg("length"), py::arg("growth") = false);
  m.def(
      "sweep_quadratic", [](long a2_max, int threads) { return api::sweep_quadratic(a2_max, threads).dump(); },
      py::arg("a2_max") = 8, py::arg("threads") = 1);
}
