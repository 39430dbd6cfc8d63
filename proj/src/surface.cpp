#include "canonlift/surface.hpp"

#include "canonlift/errors.hpp"

namespace canonlift {

namespace {

Alphabet surface_alphabet(int genus, int boundary_count) {
  std::vector<std::string> names;
  for (int i = 1; i <= genus; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  for (int j = 1; j <= boundary_count; ++j) names.push_back("d" + std::to_string(j));
  return Alphabet(std::move(names));
}

Word commutator(Letter x, Letter y) { return {x, y, -x, -y}; }

}  // namespace

Surface::Surface(int genus, int boundary_count)
    : genus_(genus), boundary_count_(boundary_count), alphabet_(surface_alphabet(genus, boundary_count)) {
  if (genus < 0 || boundary_count < 0) throw Error("genus and boundary count must be non-negative");
}

Word Surface::boundary_word() const {
  Word w;
  for (int i = 1; i <= genus_; ++i) {
    Word c = commutator(make_letter(a(i)), make_letter(b(i)));
    w.insert(w.end(), c.begin(), c.end());
  }
  for (int j = 1; j <= boundary_count_; ++j) w.push_back(make_letter(d(j)));
  return w;
}

Word Surface::to_presentation_basis(std::span<const Letter> w) const {
  if (closed()) return Word(w.begin(), w.end());
  // d_k = (prod [a_i,b_i] d_1 ... d_{k-1})^{-1}
  Word prefix = boundary_word();
  prefix.pop_back();
  const Word dk = inverse(prefix);
  const int last = d(boundary_count_);
  Word out;
  for (Letter l : w) {
    if (generator_of(l) != last) {
      out.push_back(l);
      continue;
    }
    const Word& piece = is_inverse(l) ? prefix : dk;
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return free_reduce(out);
}

std::vector<std::int64_t> Surface::homology_class(std::span<const Letter> w) const {
  auto sums = exponent_sums(to_presentation_basis(w), generator_count());
  sums.resize(static_cast<std::size_t>(h1_rank()));
  return sums;
}

int euler_char(const Surface& s) { return 2 - 2 * s.genus() - s.boundary_count(); }

void require_euler_char_below(const Surface& s, int bound, const std::string& operation) {
  if (euler_char(s) >= bound)
    throw UnsupportedSurface(operation + " requires euler characteristic < " + std::to_string(bound) +
                             " (genus " + std::to_string(s.genus()) + ", boundary " +
                             std::to_string(s.boundary_count()) + ")");
}

GroupPresentation surface_pi1_presentation(const Surface& s) {
  GroupPresentation p;
  if (s.closed()) {
    p.alphabet = s.alphabet();
    if (s.genus() > 0) p.relators.push_back(s.boundary_word());
    return p;
  }
  auto names = s.alphabet().names();
  names.pop_back();
  p.alphabet = Alphabet(std::move(names));
  return p;
}

std::string to_string(BundleKind k) {
  switch (k) {
    case BundleKind::UnitTangent: return "UT";
    case BundleKind::ProjectiveTangent: return "PT";
    case BundleKind::Trivial: return "TRIVIAL";
    case BundleKind::Custom: return "CUSTOM";
  }
  return "?";
}

CircleBundle::CircleBundle(Surface base, BundleKind kind) : base_(std::move(base)), kind_(kind), euler_(0) {
  if (kind == BundleKind::Custom) throw Error("custom bundles need an explicit Euler number");
  if (!base_.closed()) return;
  if (kind == BundleKind::UnitTangent) euler_ = euler_char(base_);
  if (kind == BundleKind::ProjectiveTangent) euler_ = 2 * euler_char(base_);
}

CircleBundle CircleBundle::custom(Surface base, std::int64_t euler_number) {
  if (!base.closed() && euler_number != 0) throw Error("circle bundles over bounded surfaces are trivial (e = 0)");
  return CircleBundle(std::move(base), BundleKind::Custom, euler_number);
}

GroupPresentation bundle_pi1_presentation(const CircleBundle& bundle) {
  GroupPresentation p = surface_pi1_presentation(bundle.base());
  auto names = p.alphabet.names();
  const int n = static_cast<int>(names.size());
  names.push_back("t");
  p.alphabet = Alphabet(std::move(names));
  const Letter t = make_letter(n);

  std::vector<Word> relators;
  for (int g = 0; g < n; ++g) relators.push_back(commutator(make_letter(g), t));
  if (bundle.base().closed()) {
    Word euler = bundle.base().boundary_word();
    const std::int64_t e = bundle.euler_number();
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) euler.push_back(e > 0 ? -t : t);
    relators.push_back(free_reduce(euler));
  }
  p.relators = std::move(relators);
  return p;
}

AbelianGroup bundle_h1(const CircleBundle& bundle) { return abelianization(bundle_pi1_presentation(bundle)); }

}  // namespace canonlift
