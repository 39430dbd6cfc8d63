// Thin binding layer: diagrams travel as text, structured results as JSON strings that the Python
// package decodes.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "canonlift/cli.hpp"
#include "canonlift/errors.hpp"
#include "canonlift/hnn.hpp"
#include "canonlift/json_io.hpp"
#include "canonlift/surface_group.hpp"

namespace py = pybind11;
using namespace canonlift;

namespace {

DiagramDocument doc_of(const std::string& text) { return parse_document(text); }

CircleBundle bundle_named(const Surface& s, const std::string& kind, std::optional<std::int64_t> euler) {
  if (kind == "UT") return CircleBundle(s, BundleKind::UnitTangent);
  if (kind == "PT") return CircleBundle(s, BundleKind::ProjectiveTangent);
  if (kind == "TRIVIAL") return CircleBundle(s, BundleKind::Trivial);
  if (kind == "CUSTOM") {
    if (!euler) throw Error("CUSTOM bundles need an Euler number");
    return CircleBundle::custom(s, *euler);
  }
  throw Error("unknown bundle kind " + kind);
}

std::string validate_json(const std::string& text) {
  Json out = Json::array();
  for (const auto& v : validate(doc_of(text).diagram)) {
    Json e{{"rule", to_string(v.rule)}, {"message", v.message}};
    if (v.component >= 0) e["component"] = v.component;
    if (v.index >= 0) e["index"] = v.index;
    if (v.crossing >= 0) e["crossing"] = v.crossing;
    out.push_back(e);
  }
  return out.dump();
}

Diagram valid_diagram(const DiagramDocument& doc) {
  auto vs = validate(doc.diagram);
  if (!vs.empty()) throw Error("invalid diagram: " + vs.front().message);
  return doc.diagram;
}

std::string invariants(const std::string& text) {
  auto doc = doc_of(text);
  Diagram d = valid_diagram(doc);
  return invariants_json(d, CircleBundle(d.surface, doc.bundle)).dump();
}

std::string canonicalize_json(const std::string& text) {
  auto doc = doc_of(text);
  auto res = canonicalize({doc.diagram, doc.annotations}, CircleBundle(doc.diagram.surface, doc.bundle));
  return Json{{"diagram", serialize(res.diagram, doc.bundle)}, {"turning_delta", res.turning_delta}}.dump();
}

std::string canonical_form_text(const std::string& text) {
  auto doc = doc_of(text);
  return serialize(canonical_form(doc.diagram), doc.bundle);
}

std::string equivalent(const std::string& a, const std::string& b, std::size_t max_moves, std::size_t max_states,
                       unsigned threads, const std::string& transvections) {
  auto d1 = doc_of(a), d2 = doc_of(b);
  Diagram x = valid_diagram(d1), y = valid_diagram(d2);
  if (d1.bundle != d2.bundle) throw ModeMismatch("the two diagrams declare different bundles");
  Budget budget;
  budget.max_moves = max_moves;
  budget.max_states = max_states;
  budget.threads = std::max(1u, threads);
  if (!transvections.empty()) budget.transvections = transvections_from_json(Json::parse(transvections), x.surface);
  return verdict_to_json(equivalent_bounded(x, y, CircleBundle(x.surface, d1.bundle), budget), x.surface).dump();
}

std::string replay_text(const std::string& text, const std::string& certificate) {
  auto doc = doc_of(text);
  Diagram d = valid_diagram(doc);
  return serialize(replay(d, certificate_from_json(Json::parse(certificate), d.surface)), doc.bundle);
}

bool isomorphic_text(const std::string& a, const std::string& b) {
  return isomorphic(doc_of(a).diagram, doc_of(b).diagram);
}

std::string h1(int genus, int boundary, const std::string& kind, std::optional<std::int64_t> euler,
               std::optional<std::vector<std::int64_t>> sigma) {
  CircleBundle b = bundle_named(Surface(genus, boundary), kind, euler);
  AbelianGroup g;
  if (sigma) {
    std::vector<BigInt> s(sigma->begin(), sigma->end());
    g = filling_quotient(relation_matrix(bundle_pi1_presentation(b)), s);
  } else {
    g = bundle_h1(b);
  }
  return g.to_string();
}

// Entries as decimal strings so arbitrary precision survives the trip.
using StrMatrix = std::vector<std::vector<std::string>>;

StrMatrix to_strings(const IntMatrix& m) {
  StrMatrix out(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).str();
  return out;
}

std::tuple<StrMatrix, StrMatrix, StrMatrix> snf(const std::vector<std::vector<std::string>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = BigInt(rows[i][j]);
  }
  auto r = smith_normal_form(m);
  return {to_strings(r.d), to_strings(r.u), to_strings(r.v)};
}

std::string dehn(const std::string& word, int genus, int boundary) {
  Surface s(genus, boundary);
  return s.alphabet().format(dehn_reduce(s.alphabet().parse(word), s));
}

bool trivial(const std::string& word, int genus, int boundary) {
  Surface s(genus, boundary);
  return is_trivial(s.alphabet().parse(word), s);
}

std::string britton(const std::string& word, const std::vector<std::string>& base,
                    const std::vector<std::pair<std::string, std::string>>& phi) {
  HnnExtension g(base, phi);
  return g.alphabet().format(britton_reduce(g, g.alphabet().parse(word)));
}

std::tuple<int, std::string, std::string> cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = run_cli(args, out, err);
  }
  return {code, out.str(), err.str()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "canonical lifts of curves on surfaces";

  auto base = py::register_exception<Error>(m, "CanonliftError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<ModeMismatch>(m, "ModeMismatch", base);
  py::register_exception<UnsupportedSurface>(m, "UnsupportedSurface", base);
  py::register_exception<InapplicableMove>(m, "InapplicableMove", base);
  py::register_exception<NonIntegralTurning>(m, "NonIntegralTurning", base);
  py::register_exception<MalformedAssociatedSubgroup>(m, "MalformedAssociatedSubgroup", base);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base);
  py::register_exception<MissingReference>(m, "MissingReference", base);
  // nlohmann parse errors from certificate or transvection text.
  py::register_exception<nlohmann::json::exception>(m, "JsonError", PyExc_ValueError);

  m.def("validate", &validate_json, py::arg("text"));
  m.def("invariants", &invariants, py::arg("text"));
  m.def("canonicalize", &canonicalize_json, py::arg("text"));
  m.def("canonical_form", &canonical_form_text, py::arg("text"));
  m.def("equivalent", &equivalent, py::arg("first"), py::arg("second"), py::arg("max_moves"), py::arg("max_states"),
        py::arg("threads"), py::arg("transvections"));
  m.def("replay", &replay_text, py::arg("text"), py::arg("certificate"));
  m.def("isomorphic", &isomorphic_text, py::arg("first"), py::arg("second"));
  m.def("h1", &h1, py::arg("genus"), py::arg("boundary"), py::arg("bundle"), py::arg("euler"), py::arg("sigma"));
  m.def("smith_normal_form", &snf, py::arg("rows"));
  m.def("dehn_reduce", &dehn, py::arg("word"), py::arg("genus"), py::arg("boundary"));
  m.def("is_trivial", &trivial, py::arg("word"), py::arg("genus"), py::arg("boundary"));
  m.def("britton_reduce", &britton, py::arg("word"), py::arg("base"), py::arg("phi"));
  m.def("run_cli", &cli, py::arg("args"));
}
