#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "ecumen/base.hpp"
#include "ecumen/formula.hpp"
#include "ecumen/prover.hpp"
#include "ecumen/semantics.hpp"
#include "ecumen/simulation.hpp"
#include "ecumen/suite.hpp"
#include "ecumen/universe.hpp"

namespace py = pybind11;
using namespace ecumen;

namespace {

std::vector<Formula> parse_all(const std::vector<std::string>& texts) {
  std::vector<Formula> out;
  for (const auto& t : texts) out.push_back(parse(t));
  return out;
}

}  // namespace

PYBIND11_MODULE(_ecumen, m) {
  m.doc() = "Ecumenical base-extension semantics";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NDError>(m, "NDError", PyExc_ValueError);

  py::class_<Formula>(m, "Formula")
      .def(py::init([](const std::string& s) { return parse(s); }))
      .def("__str__", [](const Formula& f) { return render(f); })
      .def("__repr__", [](const Formula& f) { return "Formula('" + render(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__hash__", [](const Formula& f) { return f.hash(); })
      .def("complexity", [](const Formula& f) { return complexity(f); })
      .def("is_intuitionistic", [](const Formula& f) { return is_intuitionistic(f); })
      .def("translate", [](const Formula& f) { return dn_translate(f); });

  m.def("parse", [](const std::string& s) { return parse(s); });
  m.def("render", [](const Formula& f) { return render(f); });

  py::class_<Base>(m, "Base")
      .def(py::init([](const std::string& text) { return parse_base(text); }), py::arg("text") = "")
      .def("__str__", [](const Base& b) { return render_base(b); })
      .def("derives", [](const Base& b, const std::string& goal, const std::set<std::string>& ctx) {
        return derives(b, ctx, goal);
      }, py::arg("goal"), py::arg("context") = std::set<std::string>{})
      .def("is_consistent", [](const Base& b) { return is_consistent(b); })
      .def("bot_complete", [](const Base& b, const std::vector<std::string>& vocab) { return bot_complete(b, vocab); })
      .def("is_bot_complete", [](const Base& b, const std::vector<std::string>& vocab) {
        return is_bot_complete(b, vocab);
      });

  py::class_<Universe, std::unique_ptr<Universe>>(m, "Universe")
      .def(py::init([](const std::string& cfg) { return std::make_unique<Universe>(parse_universe_config(cfg)); }))
      .def_static("default", [] { return std::make_unique<Universe>(default_config()); })
      .def("__len__", &Universe::size)
      .def_property_readonly("config", [](const Universe& u) { return render_config(u.config()); })
      .def_property_readonly("fingerprint", &Universe::fingerprint)
      .def("pool", [](const Universe& u) {
        std::vector<std::string> out;
        for (const auto& r : u.pool()) out.push_back(render_rule(r));
        return out;
      })
      .def("describe", &Universe::describe)
      .def("find", [](const Universe& u, const std::string& text) { return u.find(parse_base(text)); });

  m.def("weak_valid", [](const Universe& u, const std::vector<std::string>& ctx, const std::string& a) {
    return weak_valid(u, parse_all(ctx), parse(a));
  }, py::arg("universe"), py::arg("context"), py::arg("goal"));
  m.def("weak_local", [](const Universe& u, BaseId s, const std::vector<std::string>& ctx, const std::string& a) {
    return weak_local(u, s, parse_all(ctx), parse(a));
  });
  m.def("weak_global", [](const Universe& u, BaseId s, const std::vector<std::string>& ctx, const std::string& a) {
    return weak_global(u, s, parse_all(ctx), parse(a));
  });
  m.def("counterexample", [](const Universe& u, const std::vector<std::string>& ctx, const std::string& a,
                             const std::string& kind) -> std::optional<std::string> {
    auto cx = find_weak_counterexample(u, parse_all(ctx), parse(a), parse_kind(kind));
    if (!cx) return std::nullopt;
    return u.describe(cx->base);
  }, py::arg("universe"), py::arg("context"), py::arg("goal"), py::arg("kind") = "local");

  m.def("decide_strong", [](const std::vector<std::string>& ctx, const std::string& a) {
    return decide_strong(parse_all(ctx), parse(a));
  });
  m.def("check_proof", [](const std::string& text) {
    NDSequent s = check_nd(parse_proof(text));
    std::vector<std::string> open;
    for (const auto& f : s.open) open.push_back(render(f));
    return py::make_tuple(open, render(s.conclusion));
  });
  m.def("roundtrip", [](const std::vector<std::string>& ctx, const std::string& a, const std::string& strategy) {
    return render_proof(completeness_roundtrip(parse_all(ctx), parse(a), parse_strategy(strategy)).proof);
  }, py::arg("context"), py::arg("goal"), py::arg("strategy") = "degree");

  m.def("weak_suite", [](const Universe& u) {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& l : weak_suite(u)) out.emplace_back(l.name, l.pass, l.detail);
    return out;
  });
}
