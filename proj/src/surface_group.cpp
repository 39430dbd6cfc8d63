#include "canonlift/surface_group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "canonlift/errors.hpp"

namespace canonlift {

namespace {

constexpr std::size_t kConjugacyClosureCap = 20000;

void require_supported(const Surface& s) {
  if (s.closed() && s.genus() <= 1)
    throw UnsupportedSurface("word problem solver needs a closed surface of genus >= 2 or a bounded surface (genus " +
                             std::to_string(s.genus()) + ")");
}

// All cyclic rotations of the relator and of its inverse.
std::vector<Word> symmetrized_relator(const Surface& s) {
  const Word r = s.boundary_word();
  const Word ri = inverse(r);
  std::vector<Word> out;
  for (std::size_t k = 0; k < r.size(); ++k) {
    out.push_back(rotate(r, k));
    out.push_back(rotate(ri, k));
  }
  return out;
}

std::size_t common_prefix(std::span<const Letter> w, std::size_t start, const Word& rel, bool wrap,
                          std::size_t limit) {
  std::size_t m = 0;
  const std::size_t n = w.size();
  while (m < rel.size() && m < limit) {
    std::size_t idx = start + m;
    if (idx >= n) {
      if (!wrap) break;
      idx -= n;
    }
    if (w[idx] != rel[m]) break;
    ++m;
  }
  return m;
}

// One linear Dehn step; false if no subword longer than half a relator exists.
bool dehn_step(Word& w, const std::vector<Word>& rels) {
  const std::size_t half = rels.front().size() / 2;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (const Word& rel : rels) {
      std::size_t m = common_prefix(w, i, rel, false, w.size());
      if (m <= half) continue;
      Word replacement = inverse(std::span<const Letter>(rel).subspan(m));
      Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      next.insert(next.end(), replacement.begin(), replacement.end());
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(i + m), w.end());
      w = free_reduce(next);
      return true;
    }
  return false;
}

// Cyclic Dehn step with subwords allowed to wrap. `exact_half` selects length-preserving swaps.
std::vector<Word> cyclic_replacements(const Word& w, const std::vector<Word>& rels, bool exact_half) {
  std::vector<Word> out;
  const std::size_t half = rels.front().size() / 2;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i)
    for (const Word& rel : rels) {
      std::size_t m = common_prefix(w, i, rel, true, n);
      bool take = exact_half ? m == half : m > half;
      if (!take) continue;
      Word rotated = rotate(w, i);
      Word replacement = inverse(std::span<const Letter>(rel).subspan(exact_half ? half : m));
      Word next = replacement;
      next.insert(next.end(), rotated.begin() + static_cast<std::ptrdiff_t>(exact_half ? half : m), rotated.end());
      out.push_back(cyclic_reduce(next));
      if (!exact_half) return out;
    }
  return out;
}

Word min_rotation(const Word& w) {
  Word best = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    Word r = rotate(w, k);
    if (r < best) best = std::move(r);
  }
  return best;
}

std::set<Word> half_swap_closure(const Word& start, const Surface& s, const std::vector<Word>& rels) {
  std::set<Word> seen{min_rotation(start)};
  std::deque<Word> queue{start};
  while (!queue.empty() && seen.size() < kConjugacyClosureCap) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (Word& next : cyclic_replacements(cur, rels, true)) {
      // A swap can expose a cancellation, after which a longer-than-half match may appear.
      Word reduced = cyclic_dehn_reduce(next, s);
      if (seen.insert(min_rotation(reduced)).second) queue.push_back(std::move(reduced));
    }
  }
  return seen;
}

}  // namespace

Word dehn_reduce(std::span<const Letter> w, const Surface& s) {
  require_supported(s);
  Word cur = free_reduce(s.to_presentation_basis(w));
  if (!s.closed()) return cur;
  const auto rels = symmetrized_relator(s);
  while (dehn_step(cur, rels)) {
  }
  return cur;
}

bool is_trivial(std::span<const Letter> w, const Surface& s) { return dehn_reduce(w, s).empty(); }

Word cyclic_dehn_reduce(std::span<const Letter> w, const Surface& s) {
  require_supported(s);
  Word cur = cyclic_reduce(s.to_presentation_basis(w));
  if (!s.closed()) return cur;
  const auto rels = symmetrized_relator(s);
  for (;;) {
    auto next = cyclic_replacements(cur, rels, false);
    if (next.empty()) return cur;
    cur = std::move(next.front());
  }
}

bool conjugate_classes_equal(std::span<const Letter> w1, std::span<const Letter> w2, const Surface& s) {
  require_supported(s);
  Word u = cyclic_dehn_reduce(w1, s);
  Word v = cyclic_dehn_reduce(w2, s);
  Word vi = cyclic_reduce(inverse(v));
  if (is_cyclic_rotation(u, v) || is_cyclic_rotation(u, vi)) return true;
  if (u.size() != v.size()) return false;

  auto hu = s.homology_class(u);
  auto hv = s.homology_class(v);
  auto neg = hv;
  for (auto& x : neg) x = -x;
  if (hu != hv && hu != neg) return false;
  if (!s.closed()) return false;

  const auto rels = symmetrized_relator(s);
  auto closure = half_swap_closure(u, s, rels);
  return closure.count(min_rotation(v)) > 0 || closure.count(min_rotation(vi)) > 0;
}

Word evaluate(const GroupElementExpr& expr) {
  Word out;
  const Word wi = inverse(expr.w);
  for (const auto& f : expr.factors) {
    Word gi = inverse(f.g);
    out.insert(out.end(), gi.begin(), gi.end());
    const Word& p = f.epsilon > 0 ? expr.w : wi;
    out.insert(out.end(), p.begin(), p.end());
    out.insert(out.end(), f.g.begin(), f.g.end());
  }
  return free_reduce(out);
}

std::int64_t exponent_sum(const GroupElementExpr& expr) {
  std::int64_t sum = 0;
  for (const auto& f : expr.factors) {
    if (f.epsilon != 1 && f.epsilon != -1) throw Error("exponent must be +1 or -1");
    sum += f.epsilon;
  }
  return sum;
}

PowersumVerdict powersum_check(const GroupElementExpr& expr, const Surface& s) {
  const std::int64_t sum = exponent_sum(expr);
  if (sum == 0) return PowersumVerdict::ConsistentWithLemma;
  if (is_trivial(expr.w, s)) return PowersumVerdict::ConsistentWithLemma;
  if (!is_trivial(evaluate(expr), s)) return PowersumVerdict::ConsistentWithLemma;
  return PowersumVerdict::ViolatesLemma;
}

}  // namespace canonlift
