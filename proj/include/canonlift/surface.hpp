#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "canonlift/algebra.hpp"
#include "canonlift/word.hpp"

namespace canonlift {

// Closed or bounded orientable surface of genus g with k boundary circles.
// Generators are ordered a1, b1, ..., ag, bg, d1, ..., dk.
class Surface {
 public:
  Surface() = default;
  Surface(int genus, int boundary_count);

  int genus() const { return genus_; }
  int boundary_count() const { return boundary_count_; }
  bool closed() const { return boundary_count_ == 0; }

  int generator_count() const { return 2 * genus_ + boundary_count_; }
  int a(int i) const { return 2 * (i - 1); }  // 1-based
  int b(int i) const { return 2 * (i - 1) + 1; }
  int d(int j) const { return 2 * genus_ + (j - 1); }

  const Alphabet& alphabet() const { return alphabet_; }

  // Product of commutators times the boundary letters: [a1,b1]...[ag,bg] d1...dk.
  Word boundary_word() const;

  // Rank of H1(S): 2g for closed surfaces, 2g + k - 1 otherwise.
  int h1_rank() const { return closed() ? 2 * genus_ : 2 * genus_ + boundary_count_ - 1; }

  // Rewrites a word on all generators into the basis used by the pi1 presentation:
  // for bounded surfaces the last boundary letter is replaced by its expression in the others.
  Word to_presentation_basis(std::span<const Letter> w) const;

  // Exponent-sum coordinates of a word in H1(S) (length h1_rank()).
  std::vector<std::int64_t> homology_class(std::span<const Letter> w) const;

  friend bool operator==(const Surface& a, const Surface& b) {
    return a.genus_ == b.genus_ && a.boundary_count_ == b.boundary_count_;
  }

 private:
  int genus_ = 0;
  int boundary_count_ = 0;
  Alphabet alphabet_;
};

int euler_char(const Surface& s);

// Throws UnsupportedSurface unless euler_char(s) < bound.
void require_euler_char_below(const Surface& s, int bound, const std::string& operation);

struct GroupPresentation {
  Alphabet alphabet;
  std::vector<Word> relators;
};

// Closed: <a_i, b_i | prod [a_i, b_i]>. Bounded: free on everything but the last boundary letter.
GroupPresentation surface_pi1_presentation(const Surface& s);

enum class BundleKind { UnitTangent, ProjectiveTangent, Trivial, Custom };

std::string to_string(BundleKind k);

class CircleBundle {
 public:
  // Euler number of UT is chi(S), of PT is 2 chi(S), of the trivial bundle 0.
  // Bundles over bounded surfaces are trivial whatever the kind, so e = 0 there.
  CircleBundle(Surface base, BundleKind kind);
  static CircleBundle custom(Surface base, std::int64_t euler_number);

  const Surface& base() const { return base_; }
  BundleKind kind() const { return kind_; }
  std::int64_t euler_number() const { return euler_; }
  std::int64_t euler_abs() const { return euler_ < 0 ? -euler_ : euler_; }

  // Projective tangent bundles carry cusp-smooth diagrams; everything else smooth ones.
  bool cusped() const { return kind_ == BundleKind::ProjectiveTangent; }

 private:
  CircleBundle(Surface base, BundleKind kind, std::int64_t e) : base_(std::move(base)), kind_(kind), euler_(e) {}

  Surface base_;
  BundleKind kind_;
  std::int64_t euler_;
};

// Surface generators plus a central fibre t: [x, t] for every x, and in the closed case the
// Euler relator prod [a_i, b_i] t^{-e}.
GroupPresentation bundle_pi1_presentation(const CircleBundle& bundle);

// H1 of the total space, via the abelianized presentation and Smith normal form.
AbelianGroup bundle_h1(const CircleBundle& bundle);

}  // namespace canonlift
