#include "canonlift/hnn.hpp"

#include <algorithm>
#include <optional>

#include "canonlift/errors.hpp"

namespace canonlift {

HnnExtension::HnnExtension(std::vector<std::string> base_generators,
                           std::vector<std::pair<std::string, std::string>> phi_pairs) {
  for (const auto& g : base_generators)
    if (g == "t") throw MalformedAssociatedSubgroup("'t' is reserved for the stable letter");
  {
    auto sorted = base_generators;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw MalformedAssociatedSubgroup("repeated base generator");
  }
  const auto n = base_generators.size();
  base_generators.push_back("t");
  alphabet_ = Alphabet(std::move(base_generators));
  forward_.assign(n, -1);
  backward_.assign(n, -1);
  for (const auto& [a, b] : phi_pairs) {
    int ia = alphabet_.find(a);
    int ib = alphabet_.find(b);
    if (ia < 0 || ib < 0 || ia == base_rank() || ib == base_rank())
      throw MalformedAssociatedSubgroup("associated subgroup uses undeclared generator: " + a + " -> " + b);
    if (forward_[static_cast<std::size_t>(ia)] >= 0)
      throw MalformedAssociatedSubgroup("generator " + a + " mapped twice");
    if (backward_[static_cast<std::size_t>(ib)] >= 0)
      throw MalformedAssociatedSubgroup("generator " + b + " is the image of two generators");
    forward_[static_cast<std::size_t>(ia)] = ib;
    backward_[static_cast<std::size_t>(ib)] = ia;
  }
}

bool HnnExtension::in_domain(std::span<const Letter> h) const {
  return std::all_of(h.begin(), h.end(), [&](Letter l) {
    int g = generator_of(l);
    return g < base_rank() && forward_[static_cast<std::size_t>(g)] >= 0;
  });
}

bool HnnExtension::in_range(std::span<const Letter> h) const {
  return std::all_of(h.begin(), h.end(), [&](Letter l) {
    int g = generator_of(l);
    return g < base_rank() && backward_[static_cast<std::size_t>(g)] >= 0;
  });
}

Word HnnExtension::phi(std::span<const Letter> h) const {
  Word out;
  for (Letter l : h) out.push_back(make_letter(forward_.at(static_cast<std::size_t>(generator_of(l))), is_inverse(l)));
  return out;
}

Word HnnExtension::phi_inverse(std::span<const Letter> h) const {
  Word out;
  for (Letter l : h) out.push_back(make_letter(backward_.at(static_cast<std::size_t>(generator_of(l))), is_inverse(l)));
  return out;
}

std::size_t t_length(const HnnExtension& g, std::span<const Letter> w) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [&](Letter l) { return g.is_stable(l); }));
}

namespace {

struct Pinch {
  std::size_t open, close;  // indices of the two stable letters
  bool positive;            // t h t^-1
};

std::optional<Pinch> find_pinch(const HnnExtension& g, std::span<const Letter> w) {
  std::optional<std::size_t> prev;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!g.is_stable(w[i])) continue;
    if (prev && w[*prev] == -w[i]) {
      auto h = w.subspan(*prev + 1, i - *prev - 1);
      bool positive = !is_inverse(w[*prev]);
      if (positive ? g.in_domain(h) : g.in_range(h)) return Pinch{*prev, i, positive};
    }
    prev = i;
  }
  return std::nullopt;
}

}  // namespace

bool has_pinch(const HnnExtension& g, std::span<const Letter> w) {
  Word r = free_reduce(w);
  return find_pinch(g, r).has_value();
}

Word britton_reduce(const HnnExtension& g, std::span<const Letter> w) {
  Word cur = free_reduce(w);
  while (auto p = find_pinch(g, cur)) {
    auto h = std::span<const Letter>(cur).subspan(p->open + 1, p->close - p->open - 1);
    Word image = p->positive ? g.phi(h) : g.phi_inverse(h);
    Word next(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(p->open));
    next.insert(next.end(), image.begin(), image.end());
    next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(p->close + 1), cur.end());
    cur = free_reduce(next);
  }
  return cur;
}

bool is_trivial_hnn(const HnnExtension& g, std::span<const Letter> w) { return britton_reduce(g, w).empty(); }

}  // namespace canonlift
