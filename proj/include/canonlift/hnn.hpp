#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "canonlift/word.hpp"

namespace canonlift {

// HNN extension of a free group F(X) with stable letter t and t h t^-1 = phi(h), where phi maps
// the free factor on the generator subset A bijectively onto the free factor on B.
class HnnExtension {
 public:
  // phi_pairs[i] = (a, b) means phi(a) = b. Throws MalformedAssociatedSubgroup when a generator is
  // undeclared, repeated on either side, or "t" is used as a base generator.
  HnnExtension(std::vector<std::string> base_generators, std::vector<std::pair<std::string, std::string>> phi_pairs);

  // Base generators followed by "t" (the stable letter is generator index base_rank()).
  const Alphabet& alphabet() const { return alphabet_; }
  int base_rank() const { return alphabet_.size() - 1; }
  Letter stable_letter() const { return make_letter(base_rank()); }
  bool is_stable(Letter l) const { return generator_of(l) == base_rank(); }

  bool in_domain(std::span<const Letter> h) const;  // h in <A>
  bool in_range(std::span<const Letter> h) const;   // h in <B>
  Word phi(std::span<const Letter> h) const;
  Word phi_inverse(std::span<const Letter> h) const;

 private:
  Alphabet alphabet_;
  std::vector<int> forward_;   // generator -> image, -1 outside A
  std::vector<int> backward_;  // generator -> preimage, -1 outside B
};

// Number of stable letters.
std::size_t t_length(const HnnExtension& g, std::span<const Letter> w);

// True if some t h t^-1 with h in <A> or t^-1 h t with h in <B> occurs (h freely reduced).
bool has_pinch(const HnnExtension& g, std::span<const Letter> w);

// Removes pinches until none remain, freely reducing in between.
Word britton_reduce(const HnnExtension& g, std::span<const Letter> w);

// By Britton's Lemma a pinch-free word with a stable letter is nontrivial.
bool is_trivial_hnn(const HnnExtension& g, std::span<const Letter> w);

}  // namespace canonlift
