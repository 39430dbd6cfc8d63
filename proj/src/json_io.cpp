#include "canonlift/json_io.hpp"

#include "canonlift/errors.hpp"

namespace canonlift {

namespace {

Json big(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(std::string(what) + " must be an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Json to_json(const AbelianGroup& g) {
  Json t = Json::array();
  for (const auto& x : g.torsion) t.push_back(big(x));
  return {{"rank", g.rank}, {"torsion", t}};
}

Json multicurve_to_json(const WeightedMulticurve& c, const Surface& s) {
  Json out = Json::array();
  for (const auto& tc : c) {
    Json sites = Json::array();
    for (const auto& st : tc.sites) sites.push_back({st.component, st.gap, st.sign});
    out.push_back({{"word", s.alphabet().format(tc.word)}, {"weight", tc.weight}, {"sites", sites}});
  }
  return out;
}

WeightedMulticurve multicurve_from_json(const Json& j, const Surface& s) {
  if (!j.is_array()) throw Error("a multicurve is an array of curves");
  WeightedMulticurve out;
  for (const auto& c : j) {
    if (!c.is_object() || !c.contains("word") || !c.contains("weight") || !c.contains("sites"))
      throw Error("a curve needs word, weight and sites");
    TwistCurve tc;
    if (!c["word"].is_string()) throw Error("curve word must be a string");
    tc.word = s.alphabet().parse(c["word"].get<std::string>());
    if (!c["weight"].is_number_integer()) throw Error("curve weight must be an integer");
    tc.weight = c["weight"].get<std::int64_t>();
    if (!c["sites"].is_array()) throw Error("curve sites must be an array");
    for (const auto& st : c["sites"]) {
      auto v = int_list(st, "a site");
      if (v.size() != 3) throw Error("a site is [component, gap, sign]");
      tc.sites.push_back({v[0], v[1], v[2]});
    }
    out.push_back(std::move(tc));
  }
  return out;
}

Json certificate_to_json(const std::vector<MoveInstance>& cert, const Surface& s) {
  Json out = Json::array();
  for (const auto& m : cert) {
    Json params = Json::object();
    if (m.kind == MoveKind::R2_insert) params["parallel"] = m.parallel;
    if (m.kind == MoveKind::Stab) params["sign"] = m.sign;
    if (m.kind == MoveKind::Transvection) params["curves"] = multicurve_to_json(m.curve, s);
    out.push_back({{"kind", to_string(m.kind)}, {"site", m.site}, {"parameters", params}});
  }
  return out;
}

std::vector<MoveInstance> certificate_from_json(const Json& j, const Surface& s) {
  if (!j.is_array()) throw Error("a certificate is an array of moves");
  std::vector<MoveInstance> out;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("kind") || !e["kind"].is_string()) throw Error("each move needs a kind");
    MoveInstance m;
    m.kind = move_kind_from_string(e["kind"].get<std::string>());
    if (e.contains("site")) m.site = int_list(e["site"], "site");
    Json p = e.value("parameters", Json::object());
    if (!p.is_object()) throw Error("parameters must be an object");
    if (m.kind == MoveKind::R2_insert) m.parallel = p.value("parallel", false);
    if (m.kind == MoveKind::Stab) m.sign = p.value("sign", 1);
    if (m.kind == MoveKind::Transvection) {
      if (!p.contains("curves")) throw Error("a transvection needs curves");
      m.curve = multicurve_from_json(p["curves"], s);
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<WeightedMulticurve> transvections_from_json(const Json& j, const Surface& s) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
    throw Error("transvection file needs a \"generators\" array");
  std::vector<WeightedMulticurve> out;
  for (const auto& g : j["generators"]) out.push_back(multicurve_from_json(g, s));
  return out;
}

Relabeling relabeling_from_json(const Json& j, const Surface& s) {
  if (!j.is_object()) throw Error("relabeling must be an object generator -> word");
  Relabeling out;
  for (const auto& [name, w] : j.items()) {
    int g = s.alphabet().find(name);
    if (g < 0) throw Error("relabeling names an unknown generator '" + name + "'");
    if (!w.is_string()) throw Error("relabeling images must be strings");
    out[g] = s.alphabet().parse(w.get<std::string>());
  }
  return out;
}

Json invariants_json(const Diagram& d, const CircleBundle& bundle) {
  require_compatible(d, bundle);
  Json comps = Json::array();
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const int ci = static_cast<int>(c);
    TurningNumber t = turning_number(d, ci);
    LiftClass lc = lift_class(d, bundle, ci);
    Json turning = t.integral() ? Json(t.value()) : Json(t.as_double());
    comps.push_back({{"shadow", d.surface.alphabet().format(shadow_word(d, ci))},
                     {"turning", turning},
                     {"fiber_degree", fiber_degree(d, bundle, ci)},
                     {"fiber_mod_e", lc.fiber},
                     {"base", lc.base}});
  }
  return {{"bundle", to_string(bundle.kind())},
          {"euler", bundle.euler_number()},
          {"H1", bundle_h1(bundle).to_string()},
          {"components", comps}};
}

Json verdict_to_json(const EquivalenceVerdict& v, const Surface& s) {
  Json out{{"verdict", to_string(v.kind)}, {"states", v.states}};
  if (v.kind == EquivalenceVerdict::Kind::Equivalent) out["certificate"] = certificate_to_json(v.certificate, s);
  if (v.kind == EquivalenceVerdict::Kind::Distinguished) {
    out["invariant"] = v.invariant;
    out["values"] = {v.values1, v.values2};
  }
  return out;
}

}  // namespace canonlift
