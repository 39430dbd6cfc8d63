#include "canonlift/diagram.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "canonlift/errors.hpp"

namespace canonlift {

Mode mode_for(BundleKind kind) { return kind == BundleKind::ProjectiveTangent ? Mode::CuspSmooth : Mode::Smooth; }

std::string to_string(Violation::Rule r) {
  switch (r) {
    case Violation::Rule::UnpairedCrossing: return "UnpairedCrossing";
    case Violation::Rule::DuplicateCrossingSlot: return "DuplicateCrossingSlot";
    case Violation::Rule::InvalidCrossingSlot: return "InvalidCrossingSlot";
    case Violation::Rule::CuspInSmoothMode: return "CuspInSmoothMode";
    case Violation::Rule::OddCuspCount: return "OddCuspCount";
    case Violation::Rule::NonIntegralTurning: return "NonIntegralTurning";
    case Violation::Rule::UnknownGenerator: return "UnknownGenerator";
    case Violation::Rule::InvalidQuarterTurn: return "InvalidQuarterTurn";
  }
  return "?";
}

std::vector<Violation> validate(const Diagram& d) {
  std::vector<Violation> out;
  using R = Violation::Rule;
  std::map<int, std::array<int, 2>> slots;

  for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
    const int c = static_cast<int>(ci);
    const auto& comp = d.components[ci];
    std::int64_t quarters = 0;
    int cusps = 0;
    for (std::size_t ii = 0; ii < comp.size(); ++ii) {
      const int i = static_cast<int>(ii);
      const Event& e = comp[ii];
      switch (e.kind) {
        case EventKind::Edge:
          if (e.value == 0 || generator_of(e.value) >= d.surface.generator_count())
            out.push_back({R::UnknownGenerator, c, i, -1, "edge letter is not a generator of the surface"});
          break;
        case EventKind::Cross:
          if (e.slot != 1 && e.slot != 2) {
            out.push_back({R::InvalidCrossingSlot, c, i, e.value, "crossing slot must be 1 or 2"});
            break;
          }
          slots[e.value][static_cast<std::size_t>(e.slot - 1)] += 1;
          break;
        case EventKind::CuspU:
        case EventKind::CuspD:
          ++cusps;
          quarters += e.kind == EventKind::CuspU ? 2 : -2;
          if (d.mode == Mode::Smooth) out.push_back({R::CuspInSmoothMode, c, i, -1, "cusp in a smooth diagram"});
          break;
        case EventKind::QTurn:
          if (e.value != 1 && e.value != -1)
            out.push_back({R::InvalidQuarterTurn, c, i, -1, "quarter turn sign must be +1 or -1"});
          quarters += e.value;
          break;
        case EventKind::KinkL:
        case EventKind::KinkR:
          break;
      }
    }
    if (d.mode == Mode::CuspSmooth && cusps % 2 != 0)
      out.push_back({R::OddCuspCount, c, -1, -1, "odd number of cusps on a component"});
    if (((quarters % 4) + 4) % 4 != 0)
      out.push_back({R::NonIntegralTurning, c, -1, -1, "tangent direction does not close up (quarter turns not 0 mod 4)"});
  }
  for (const auto& [id, count] : slots) {
    if (count[0] > 1 || count[1] > 1)
      out.push_back({R::DuplicateCrossingSlot, -1, -1, id, "crossing X" + std::to_string(id) + " has a repeated slot"});
    if (count[0] == 0 || count[1] == 0)
      out.push_back({R::UnpairedCrossing, -1, -1, id, "crossing X" + std::to_string(id) + " is missing a visit"});
  }
  return out;
}

Word shadow_word(const Diagram& d, int component) {
  if (component < 0 || static_cast<std::size_t>(component) >= d.components.size())
    throw MissingReference("no component " + std::to_string(component));
  Word w;
  for (const Event& e : d.components[static_cast<std::size_t>(component)])
    if (e.kind == EventKind::Edge) w.push_back(e.value);
  return cyclic_reduce(w);
}

std::size_t self_intersection_count(const Diagram& d) {
  std::set<int> ids;
  std::size_t kinks = 0;
  for (const auto& comp : d.components)
    for (const Event& e : comp) {
      if (e.kind == EventKind::Cross) ids.insert(e.value);
      if (e.is_kink()) ++kinks;
    }
  return ids.size() + kinks;
}

int next_crossing_id(const Diagram& d) {
  int m = 0;
  for (const auto& comp : d.components)
    for (const Event& e : comp)
      if (e.kind == EventKind::Cross) m = std::max(m, e.value);
  return m + 1;
}

// ---------------------------------------------------------------------------
// Text format

std::string format_event(const Event& e, const Surface& s) {
  switch (e.kind) {
    case EventKind::Edge: return s.alphabet().format(e.value);
    case EventKind::Cross: return "X" + std::to_string(e.value) + "." + std::to_string(e.slot);
    case EventKind::KinkL: return "L+";
    case EventKind::KinkR: return "L-";
    case EventKind::CuspU: return "C^";
    case EventKind::CuspD: return "Cv";
    case EventKind::QTurn: return e.value > 0 ? "Q+" : "Q-";
  }
  return "?";
}

std::string format_component(const Component& c, const Surface& s) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ' ';
    out += format_event(c[i], s);
  }
  return out;
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split(std::string_view line, std::size_t offset = 0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), offset + start + 1});
  }
  return out;
}

bool parse_int(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return false;
  std::int64_t v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + (s[i] - '0');
    if (v > (std::int64_t{1} << 40)) return false;
  }
  out = neg ? -v : v;
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  DiagramDocument run() {
    DiagramDocument doc;
    bool have_surface = false, have_bundle = false;
    std::set<std::pair<int, int>> seen_slots;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t nl = text_.find('\n', pos);
      std::string_view line = text_.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      pos = nl == std::string_view::npos ? text_.size() + 1 : nl + 1;
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      auto tokens = split(line);
      if (tokens.empty()) continue;
      const auto head = tokens[0].text;

      if (!have_surface) {
        if (head != "surface") fail(line_no, tokens[0].column, "expected 'surface genus=<g> boundary=<k>'");
        std::int64_t g = -1, k = -1;
        for (std::size_t t = 1; t < tokens.size(); ++t) {
          auto kv = tokens[t].text;
          auto eq = kv.find('=');
          std::int64_t v;
          if (eq == std::string_view::npos || !parse_int(kv.substr(eq + 1), v) || v < 0)
            fail(line_no, tokens[t].column, "expected key=<non-negative integer>");
          auto key = kv.substr(0, eq);
          if (key == "genus")
            g = v;
          else if (key == "boundary")
            k = v;
          else
            fail(line_no, tokens[t].column, "unknown surface field '" + std::string(key) + "'");
        }
        if (g < 0 || k < 0) fail(line_no, tokens[0].column, "surface line needs genus= and boundary=");
        doc.diagram.surface = Surface(static_cast<int>(g), static_cast<int>(k));
        have_surface = true;
        continue;
      }
      if (!have_bundle) {
        if (head != "bundle" || tokens.size() != 2) fail(line_no, tokens[0].column, "expected 'bundle <UT|PT|TRIVIAL>'");
        auto kind = tokens[1].text;
        if (kind == "UT")
          doc.bundle = BundleKind::UnitTangent;
        else if (kind == "PT")
          doc.bundle = BundleKind::ProjectiveTangent;
        else if (kind == "TRIVIAL")
          doc.bundle = BundleKind::Trivial;
        else
          fail(line_no, tokens[1].column, "unknown bundle kind '" + std::string(kind) + "'");
        doc.diagram.mode = mode_for(doc.bundle);
        have_bundle = true;
        continue;
      }

      if (head == "comp:" || head.starts_with("comp:")) {
        Component comp;
        std::vector<Token> events(tokens.begin() + 1, tokens.end());
        if (head.size() > 5) events.insert(events.begin(), Token{head.substr(5), tokens[0].column + 5});
        for (const auto& tok : events) {
          Event e = parse_event(tok, line_no, doc.diagram.surface);
          if (e.kind == EventKind::Cross && !seen_slots.insert({e.value, e.slot}).second)
            fail(line_no, tok.column, "duplicate crossing slot X" + std::to_string(e.value) + "." + std::to_string(e.slot));
          comp.push_back(e);
        }
        doc.diagram.components.push_back(std::move(comp));
      } else if (head == "twist:") {
        if (tokens.size() != 3) fail(line_no, tokens[0].column, "expected 'twist: <comp>.<segment> <m>'");
        auto ref = parse_ref(tokens[1], line_no);
        std::int64_t m;
        if (!parse_int(tokens[2].text, m)) fail(line_no, tokens[2].column, "twist must be an integer");
        doc.annotations.twist[ref] = m;
      } else if (head == "fix:") {
        if (tokens.size() != 3 || !tokens[1].text.starts_with("X"))
          fail(line_no, tokens[0].column, "expected 'fix: X<id> left|right'");
        std::int64_t id;
        if (!parse_int(tokens[1].text.substr(1), id) || id < 0) fail(line_no, tokens[1].column, "bad crossing id");
        auto side = tokens[2].text;
        CrossingFix f = side == "left" ? CrossingFix::Left : side == "right" ? CrossingFix::Right
                      : side == "none" ? CrossingFix::None : (fail(line_no, tokens[2].column, "fix must be left, right or none"), CrossingFix::None);
        doc.annotations.crossing_fix[static_cast<int>(id)] = f;
      } else if (head == "corner:") {
        if (tokens.size() != 3) fail(line_no, tokens[0].column, "expected 'corner: <comp>.<turn> loop|smooth'");
        auto ref = parse_ref(tokens[1], line_no);
        auto mode = tokens[2].text;
        CornerMode m = mode == "loop" ? CornerMode::ThroughLoop : mode == "smooth" ? CornerMode::Smooth
                     : (fail(line_no, tokens[2].column, "corner mode must be loop or smooth"), CornerMode::Smooth);
        doc.annotations.corner_mode[ref] = m;
      } else {
        fail(line_no, tokens[0].column, "unexpected line start '" + std::string(head) + "'");
      }
    }
    if (!have_surface) fail(line_no, 1, "missing surface line");
    if (!have_bundle) fail(line_no, 1, "missing bundle line");
    return doc;
  }

 private:
  [[noreturn]] static void fail(std::size_t line, std::size_t col, const std::string& msg) {
    throw ParseError(line, col, msg);
  }

  static std::pair<int, int> parse_ref(const Token& tok, std::size_t line_no) {
    auto dot = tok.text.find('.');
    std::int64_t a, b;
    if (dot == std::string_view::npos || !parse_int(tok.text.substr(0, dot), a) ||
        !parse_int(tok.text.substr(dot + 1), b) || a < 0 || b < 0)
      fail(line_no, tok.column, "expected <component>.<index>");
    return {static_cast<int>(a), static_cast<int>(b)};
  }

  static Event parse_event(const Token& tok, std::size_t line_no, const Surface& s) {
    auto t = tok.text;
    if (t == "Q+") return Event::qturn(1);
    if (t == "Q-") return Event::qturn(-1);
    if (t == "L+") return Event::kink_left();
    if (t == "L-") return Event::kink_right();
    if (t == "C^") return Event::cusp_up();
    if (t == "Cv") return Event::cusp_down();
    if (t.size() > 1 && t[0] == 'X' && std::isdigit(static_cast<unsigned char>(t[1]))) {
      auto dot = t.find('.');
      std::int64_t id, slot;
      if (dot == std::string_view::npos || !parse_int(t.substr(1, dot - 1), id) || !parse_int(t.substr(dot + 1), slot))
        fail(line_no, tok.column, "malformed crossing '" + std::string(t) + "', expected X<id>.<slot>");
      if (slot != 1 && slot != 2) fail(line_no, tok.column + dot + 1, "crossing slot must be 1 or 2");
      if (id < 0) fail(line_no, tok.column + 1, "crossing id must be non-negative");
      return Event::cross(static_cast<int>(id), static_cast<int>(slot));
    }
    bool inv = !t.empty() && t.back() == '\'';
    auto name = inv ? t.substr(0, t.size() - 1) : t;
    bool letter_shaped = !name.empty() && (name[0] == 'a' || name[0] == 'b' || name[0] == 'd') && name.size() > 1 &&
                         std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    if (!letter_shaped) fail(line_no, tok.column, "unrecognized event '" + std::string(t) + "'");
    int g = s.alphabet().find(name);
    if (g < 0) fail(line_no, tok.column, "unknown generator '" + std::string(name) + "' for this surface");
    return Event::edge(make_letter(g, inv));
  }

  std::string_view text_;
};

const char* bundle_token(BundleKind k) {
  switch (k) {
    case BundleKind::ProjectiveTangent: return "PT";
    case BundleKind::Trivial: return "TRIVIAL";
    default: return "UT";
  }
}

}  // namespace

DiagramDocument parse_document(std::string_view text) { return Parser(text).run(); }

Diagram parse(std::string_view text) {
  auto doc = parse_document(text);
  if (!doc.annotations.empty()) throw ParseError(1, 1, "annotation lines are only allowed in twisted shadows");
  return std::move(doc.diagram);
}

std::string serialize_document(const DiagramDocument& doc) {
  const auto& d = doc.diagram;
  std::ostringstream os;
  os << "surface genus=" << d.surface.genus() << " boundary=" << d.surface.boundary_count() << '\n';
  os << "bundle " << bundle_token(doc.bundle) << '\n';
  for (const auto& comp : d.components) {
    os << "comp:";
    if (!comp.empty()) os << ' ' << format_component(comp, d.surface);
    os << '\n';
  }
  for (const auto& [ref, m] : doc.annotations.twist) os << "twist: " << ref.first << '.' << ref.second << ' ' << m << '\n';
  for (const auto& [id, f] : doc.annotations.crossing_fix)
    os << "fix: X" << id << ' ' << (f == CrossingFix::Left ? "left" : f == CrossingFix::Right ? "right" : "none") << '\n';
  for (const auto& [ref, m] : doc.annotations.corner_mode)
    os << "corner: " << ref.first << '.' << ref.second << ' ' << (m == CornerMode::ThroughLoop ? "loop" : "smooth") << '\n';
  return os.str();
}

std::string serialize(const Diagram& d, BundleKind bundle) { return serialize_document({d, bundle, {}}); }

std::string serialize(const Diagram& d) {
  return serialize(d, d.mode == Mode::CuspSmooth ? BundleKind::ProjectiveTangent : BundleKind::UnitTangent);
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

constexpr std::size_t kCanonicalChoiceCap = 50000;

std::int64_t shape_code(const Event& e) {
  // Crossings lose their id and slot; everything else keeps its value.
  std::int64_t v = e.kind == EventKind::Cross ? 0 : e.value;
  return (static_cast<std::int64_t>(e.kind) << 32) + v;
}

std::vector<std::int64_t> shape(const Component& c, std::size_t rot) {
  std::vector<std::int64_t> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = shape_code(c[(i + rot) % c.size()]);
  return out;
}

std::vector<std::size_t> minimal_rotations(const Component& c, std::vector<std::int64_t>& best) {
  std::vector<std::size_t> rots{0};
  best = shape(c, 0);
  for (std::size_t r = 1; r < c.size(); ++r) {
    auto s = shape(c, r);
    if (s < best) {
      best = std::move(s);
      rots = {r};
    } else if (s == best) {
      rots.push_back(r);
    }
  }
  return rots;
}

struct Labelled {
  std::vector<std::vector<Event>> comps;
};

Labelled relabel(const Diagram& d, const std::vector<std::size_t>& order, const std::vector<std::size_t>& rot) {
  Labelled out;
  std::map<int, int> ids;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& c = d.components[order[k]];
    std::vector<Event> comp(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      Event e = c[(i + rot[k]) % c.size()];
      if (e.kind == EventKind::Cross) {
        auto [it, fresh] = ids.emplace(e.value, static_cast<int>(ids.size()) + 1);
        e = Event::cross(it->second, fresh ? 1 : 2);
      }
      comp[i] = e;
    }
    out.comps.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

Diagram canonical_form(const Diagram& d) {
  const std::size_t n = d.components.size();
  std::vector<std::vector<std::int64_t>> keys(n);
  std::vector<std::vector<std::size_t>> rots(n);
  for (std::size_t i = 0; i < n; ++i) rots[i] = minimal_rotations(d.components[i], keys[i]);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

  // Tied groups of components can be permuted freely; each component picks among its minimal rotations.
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && keys[order[j]] == keys[order[i]]) ++j;
    groups.push_back({i, j});
    i = j;
  }

  Diagram best_d{d.surface, d.mode, {}};
  bool have = false;
  std::size_t budget = kCanonicalChoiceCap;
  std::vector<std::size_t> perm = order;
  for (auto& [lo, hi] : groups) std::sort(perm.begin() + static_cast<std::ptrdiff_t>(lo), perm.begin() + static_cast<std::ptrdiff_t>(hi));

  auto consider_rotations = [&](const std::vector<std::size_t>& ord) {
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
      if (budget == 0) return;
      --budget;
      std::vector<std::size_t> r(n);
      for (std::size_t k = 0; k < n; ++k) r[k] = rots[ord[k]][idx[k]];
      Labelled cand = relabel(d, ord, r);
      if (!have || cand.comps < best_d.components) {
        best_d.components = std::move(cand.comps);
        have = true;
      }
      std::size_t k = 0;
      while (k < n && ++idx[k] == rots[ord[k]].size()) idx[k++] = 0;
      if (k == n) return;
    }
  };

  // Iterate the product of permutations of every tied group.
  for (;;) {
    consider_rotations(perm);
    if (budget == 0) break;
    std::size_t g = 0;
    for (; g < groups.size(); ++g) {
      auto [lo, hi] = groups[g];
      if (std::next_permutation(perm.begin() + static_cast<std::ptrdiff_t>(lo), perm.begin() + static_cast<std::ptrdiff_t>(hi))) break;
    }
    if (g == groups.size()) break;
  }
  if (n == 0) best_d.components.clear();
  return best_d;
}

std::string canonical_key(const Diagram& d) { return encode(canonical_form(d)); }

std::string encode(const Diagram& c) {
  std::string key;
  key.reserve(64);
  for (const auto& comp : c.components) {
    key += '|';
    for (const Event& e : comp) {
      key += static_cast<char>('A' + static_cast<int>(e.kind));
      key += std::to_string(e.value);
      if (e.kind == EventKind::Cross) {
        key += '.';
        key += static_cast<char>('0' + e.slot);
      }
      key += ' ';
    }
  }
  return key;
}

bool isomorphic(const Diagram& a, const Diagram& b) {
  return a.surface == b.surface && a.mode == b.mode && a.components.size() == b.components.size() &&
         canonical_form(a) == canonical_form(b);
}

}  // namespace canonlift
