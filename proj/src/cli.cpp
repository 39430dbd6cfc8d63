#include "canonlift/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "canonlift/equivalence.hpp"
#include "canonlift/errors.hpp"
#include "canonlift/hnn.hpp"
#include "canonlift/json_io.hpp"
#include "canonlift/surface_group.hpp"

namespace canonlift {

namespace {

enum Exit { kOk = 0, kInvalid = 1, kIo = 2, kDistinguished = 3, kUnknown = 4 };

struct IoError : Error {
  using Error::Error;
};

struct Options {
  std::string format = "json";
  std::size_t budget_moves = 6;
  std::size_t budget_states = 100000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string transvections;
  std::string relabel;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(slurp(path));
  } catch (const Json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
}

DiagramDocument read_document(const std::string& path) {
  try {
    return parse_document(slurp(path));
  } catch (const ParseError& e) {
    throw IoError(path + ": " + e.what());
  }
}

std::ostream* g_out = &std::cout;

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.format == "text")
    *g_out << text << (text.empty() || text.back() == '\n' ? "" : "\n");
  else
    *g_out << j.dump() << "\n";
}

int cmd_validate(const Options& o, const std::string& path) {
  auto doc = read_document(path);
  auto vs = validate(doc.diagram);
  Json list = Json::array();
  std::string text;
  for (const auto& v : vs) {
    Json e{{"rule", to_string(v.rule)}, {"message", v.message}};
    if (v.component >= 0) e["component"] = v.component;
    if (v.index >= 0) e["index"] = v.index;
    if (v.crossing >= 0) e["crossing"] = v.crossing;
    list.push_back(e);
    text += to_string(v.rule) + ": " + v.message + "\n";
  }
  emit(o, {{"valid", vs.empty()}, {"violations", list}}, vs.empty() ? "valid" : text);
  return vs.empty() ? kOk : kInvalid;
}

Diagram require_valid(const DiagramDocument& doc) {
  auto vs = validate(doc.diagram);
  if (!vs.empty()) throw Error("invalid diagram: " + vs.front().message);
  return doc.diagram;
}

int cmd_invariants(const Options& o, const std::string& path) {
  auto doc = read_document(path);
  Diagram d = require_valid(doc);
  CircleBundle bundle(d.surface, doc.bundle);
  Json j = invariants_json(d, bundle);
  std::ostringstream text;
  text << "H1 " << j["H1"].get<std::string>() << "\n";
  for (std::size_t i = 0; i < j["components"].size(); ++i) {
    const auto& c = j["components"][i];
    text << "component " << i << ": shadow " << c["shadow"].get<std::string>() << ", turning " << c["turning"].dump()
         << ", fiber " << c["fiber_degree"].dump() << " (" << c["fiber_mod_e"].dump() << " mod " << bundle.euler_abs()
         << "), base " << c["base"].dump() << "\n";
  }
  emit(o, j, text.str());
  return kOk;
}

int cmd_canonicalize(const Options& o, const std::string& path, const std::string& out_path) {
  auto doc = read_document(path);
  CircleBundle bundle(doc.diagram.surface, doc.bundle);
  auto res = canonicalize({doc.diagram, doc.annotations}, bundle);
  std::string text = serialize(res.diagram, doc.bundle);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw IoError("cannot write " + out_path);
    out << text;
  }
  Json j{{"diagram", text}, {"turning_delta", res.turning_delta}};
  std::ostringstream t;
  if (out_path.empty()) t << text;
  for (std::size_t i = 0; i < res.turning_delta.size(); ++i)
    t << "# component " << i << " turning change " << res.turning_delta[i] << "\n";
  emit(o, j, t.str());
  return kOk;
}

Budget make_budget(const Options& o, const Surface& s) {
  if (o.budget_moves == 0 || o.budget_states == 0) throw Error("budgets must be positive");
  Budget b;
  b.max_moves = o.budget_moves;
  b.max_states = o.budget_states;
  b.seed = o.seed;
  b.threads = std::max(1u, o.threads);
  if (!o.transvections.empty()) {
    Json j = read_json(o.transvections);
    b.transvections = transvections_from_json(j, s);
  }
  return b;
}

int cmd_equiv(const Options& o, const std::string& p1, const std::string& p2) {
  auto doc1 = read_document(p1), doc2 = read_document(p2);
  Diagram d1 = require_valid(doc1), d2 = require_valid(doc2);
  if (doc1.bundle != doc2.bundle) throw ModeMismatch("the two diagrams declare different bundles");
  if (!o.relabel.empty()) d2 = relabel_generators(d2, relabeling_from_json(read_json(o.relabel), d2.surface));
  CircleBundle bundle(d1.surface, doc1.bundle);
  Budget b = make_budget(o, d1.surface);
  EquivalenceVerdict v = equivalent_bounded(d1, d2, bundle, b);
  Json j = verdict_to_json(v, d1.surface);
  std::ostringstream t;
  t << to_string(v.kind);
  if (v.kind == EquivalenceVerdict::Kind::Distinguished) t << " by " << v.invariant << ": " << v.values1 << " vs " << v.values2;
  t << " (" << v.states << " states)\n";
  for (const auto& m : v.certificate) t << "  " << describe(m) << "\n";
  emit(o, j, t.str());
  switch (v.kind) {
    case EquivalenceVerdict::Kind::Equivalent: return kOk;
    case EquivalenceVerdict::Kind::Distinguished: return kDistinguished;
    case EquivalenceVerdict::Kind::Unknown: return kUnknown;
  }
  return kUnknown;
}

int cmd_replay(const Options& o, const std::string& path, const std::string& cert_path, const std::string& target) {
  auto doc = read_document(path);
  Diagram d = require_valid(doc);
  auto cert = certificate_from_json(read_json(cert_path), d.surface);
  Diagram out = replay(d, cert);
  std::string text = serialize(out, doc.bundle);
  Json j{{"diagram", text}};
  int code = kOk;
  if (!target.empty()) {
    Diagram t = require_valid(read_document(target));
    bool ok = isomorphic(out, t);
    j["matches_target"] = ok;
    text += ok ? "# matches target\n" : "# does not match target\n";
    code = ok ? kOk : kInvalid;
  }
  emit(o, j, text);
  return code;
}

IntMatrix bundle_relations(const CircleBundle& b) { return relation_matrix(bundle_pi1_presentation(b)); }

CircleBundle make_bundle(int genus, int boundary, const std::string& kind, std::optional<std::int64_t> euler) {
  Surface s(genus, boundary);
  if (kind == "UT") return CircleBundle(s, BundleKind::UnitTangent);
  if (kind == "PT") return CircleBundle(s, BundleKind::ProjectiveTangent);
  if (kind == "TRIVIAL") return CircleBundle(s, BundleKind::Trivial);
  if (kind == "CUSTOM") {
    if (!euler) throw IoError("CUSTOM bundles need --euler");
    return CircleBundle::custom(s, *euler);
  }
  throw IoError("unknown bundle kind " + kind);
}

int cmd_h1(const Options& o, int genus, int boundary, const std::string& kind, std::optional<std::int64_t> euler,
           const std::string& sigma_text) {
  CircleBundle b = make_bundle(genus, boundary, kind, euler);
  AbelianGroup g;
  Json j;
  if (sigma_text.empty()) {
    g = bundle_h1(b);
  } else {
    std::vector<BigInt> sigma;
    std::stringstream ss(sigma_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        sigma.push_back(v);
      } catch (const std::exception&) {
        throw IoError("malformed sigma entry '" + tok + "'");
      }
    }
    try {
      g = filling_quotient(bundle_relations(b), sigma);
    } catch (const DimensionMismatch& e) {
      throw IoError(e.what());
    }
  }
  j = to_json(g);
  j["group"] = g.to_string();
  j["generators"] = bundle_pi1_presentation(b).alphabet.names();
  emit(o, j, g.to_string());
  return kOk;
}

// -- group -------------------------------------------------------------------

Word parse_word(const Alphabet& a, const std::string& text) {
  try {
    return a.parse(text);
  } catch (const Error& e) {
    throw IoError(e.what());
  }
}

int cmd_reduce(const Options& o, const Surface& s, const std::string& word) {
  Word w = parse_word(s.alphabet(), word);
  Word r = dehn_reduce(w, s);
  bool trivial = r.empty();
  emit(o, {{"input", s.alphabet().format(w)}, {"reduced", s.alphabet().format(r)}, {"trivial", trivial}},
       r.empty() ? "1" : s.alphabet().format(r));
  return kOk;
}

int cmd_trivial(const Options& o, const Surface& s, const std::string& word) {
  bool t = is_trivial(parse_word(s.alphabet(), word), s);
  emit(o, {{"trivial", t}}, t ? "true" : "false");
  return t ? kOk : kInvalid;
}

int cmd_conj(const Options& o, const Surface& s, const std::string& w1, const std::string& w2) {
  bool c = conjugate_classes_equal(parse_word(s.alphabet(), w1), parse_word(s.alphabet(), w2), s);
  emit(o, {{"conjugate", c}}, c ? "true" : "false");
  return c ? kOk : kInvalid;
}

int cmd_powersum(const Options& o, const Surface& s, const std::string& w, const std::vector<std::string>& factors) {
  GroupElementExpr e;
  e.w = parse_word(s.alphabet(), w);
  for (const auto& f : factors) {
    auto colon = f.rfind(':');
    if (colon == std::string::npos) throw IoError("factor must be WORD:EPS, got '" + f + "'");
    std::string eps = f.substr(colon + 1);
    if (eps != "1" && eps != "+1" && eps != "-1") throw IoError("factor exponent must be +1 or -1");
    e.factors.push_back({parse_word(s.alphabet(), f.substr(0, colon)), eps == "-1" ? -1 : 1});
  }
  Word p = evaluate(e);
  auto verdict = powersum_check(e, s);
  bool ok = verdict == PowersumVerdict::ConsistentWithLemma;
  Json j{{"product", s.alphabet().format(p)},
         {"exponent_sum", exponent_sum(e)},
         {"product_trivial", is_trivial(p, s)},
         {"verdict", ok ? "ConsistentWithLemma" : "ViolatesLemma"}};
  emit(o, j, ok ? "ConsistentWithLemma" : "ViolatesLemma");
  return ok ? kOk : kInvalid;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

int cmd_britton(const Options& o, const std::string& base, const std::vector<std::string>& phi, const std::string& word) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& p : phi) {
    auto colon = p.find(':');
    if (colon == std::string::npos) throw IoError("phi pair must be a:b, got '" + p + "'");
    pairs.push_back({p.substr(0, colon), p.substr(colon + 1)});
  }
  HnnExtension g(split_list(base), pairs);
  Word w = parse_word(g.alphabet(), word);
  Word r = britton_reduce(g, w);
  Json j{{"reduced", g.alphabet().format(r)},
         {"t_length", t_length(g, r)},
         {"pinch_free", !has_pinch(g, r)},
         {"trivial", r.empty()}};
  emit(o, j, r.empty() ? "1" : g.alphabet().format(r));
  return r.empty() ? kOk : kInvalid;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  g_out = &out;
  CLI::App app{"canonlift: canonical lifts of curves on surfaces", "canonlift"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  auto search_flags = [&](CLI::App* c) {
    c->add_option("--budget-moves", o.budget_moves, "longest certificate searched");
    c->add_option("--budget-states", o.budget_states, "diagrams visited before giving up");
    c->add_option("--seed", o.seed, "random seed (default 0)");
    c->add_option("--threads", o.threads, "frontier expansion threads");
    c->add_option("--transvections", o.transvections, "JSON file of transvection generators");
    c->add_option("--relabel", o.relabel, "JSON generator substitution for the second diagram");
  };

  std::string path, path2, out_path, cert_path, target;
  auto* validate_cmd = app.add_subcommand("validate", "check a diagram file");
  validate_cmd->add_option("file", path)->required();
  common(validate_cmd);

  auto* inv = app.add_subcommand("invariants", "turning numbers, lift classes and H1");
  inv->add_option("file", path)->required();
  common(inv);

  auto* canon = app.add_subcommand("canonicalize", "diagram realizing a twisted shadow");
  canon->add_option("file", path)->required();
  canon->add_option("-o,--output", out_path, "write the diagram here");
  common(canon);

  auto* equiv = app.add_subcommand("equiv", "bounded equivalence search");
  equiv->add_option("first", path)->required();
  equiv->add_option("second", path2)->required();
  common(equiv);
  search_flags(equiv);

  auto* rep = app.add_subcommand("replay", "apply a certificate to a diagram");
  rep->add_option("file", path)->required();
  rep->add_option("certificate", cert_path)->required();
  rep->add_option("--target", target, "diagram the result should match");
  common(rep);

  int genus = 2, boundary = 0;
  std::string kind = "UT", sigma;
  std::optional<std::int64_t> euler;
  auto* h1 = app.add_subcommand("h1", "homology of a circle bundle or of a filling quotient");
  h1->add_option("--genus", genus)->check(CLI::NonNegativeNumber);
  h1->add_option("--boundary", boundary)->check(CLI::NonNegativeNumber);
  h1->add_option("--bundle", kind, "UT, PT, TRIVIAL or CUSTOM");
  h1->add_option("--euler", euler, "Euler number of a CUSTOM bundle");
  h1->add_option("--sigma", sigma, "comma separated class over the presentation generators");
  common(h1);

  auto* group = app.add_subcommand("group", "surface group and HNN word problems");
  group->require_subcommand(1);
  std::string word, word2, base;
  std::vector<std::string> factors, phi;
  auto surface_flags = [&](CLI::App* c) {
    c->add_option("--genus", genus)->check(CLI::NonNegativeNumber);
    c->add_option("--boundary", boundary)->check(CLI::NonNegativeNumber);
    common(c);
  };
  auto* g_reduce = group->add_subcommand("reduce", "Dehn reduction");
  g_reduce->add_option("word", word)->required();
  surface_flags(g_reduce);
  auto* g_trivial = group->add_subcommand("trivial", "word problem");
  g_trivial->add_option("word", word)->required();
  surface_flags(g_trivial);
  auto* g_conj = group->add_subcommand("conj", "free homotopy of unoriented loops");
  g_conj->add_option("first", word)->required();
  g_conj->add_option("second", word2)->required();
  surface_flags(g_conj);
  auto* g_pow = group->add_subcommand("powersum", "exponent-sum check of prod g^-1 w^eps g");
  g_pow->add_option("word", word)->required();
  g_pow->add_option("--factor", factors, "conjugator and sign, WORD:+1 or WORD:-1");
  surface_flags(g_pow);
  auto* g_britton = group->add_subcommand("britton", "Britton reduction in an HNN extension");
  g_britton->add_option("word", word)->required();
  g_britton->add_option("--base", base, "comma separated base generators")->required();
  g_britton->add_option("--phi", phi, "associated pairs a:b");
  common(g_britton);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : kIo;
  }

  try {
    if (*validate_cmd) return cmd_validate(o, path);
    if (*inv) return cmd_invariants(o, path);
    if (*canon) return cmd_canonicalize(o, path, out_path);
    if (*equiv) return cmd_equiv(o, path, path2);
    if (*rep) return cmd_replay(o, path, cert_path, target);
    if (*h1) return cmd_h1(o, genus, boundary, kind, euler, sigma);
    if (*g_britton) return cmd_britton(o, base, phi, word);
    Surface s(genus, boundary);
    if (*g_reduce) return cmd_reduce(o, s, word);
    if (*g_trivial) return cmd_trivial(o, s, word);
    if (*g_conj) return cmd_conj(o, s, word, word2);
    if (*g_pow) return cmd_powersum(o, s, word, factors);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  }
  return kInvalid;
}

}  // namespace canonlift
