#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace canonlift {

// A letter is a signed generator reference: +(i+1) is generator i, -(i+1) its inverse.
using Letter = std::int32_t;
using Word = std::vector<Letter>;

constexpr Letter make_letter(int generator, bool inverse = false) {
  return inverse ? -(generator + 1) : (generator + 1);
}
constexpr int generator_of(Letter l) { return (l > 0 ? l : -l) - 1; }
constexpr bool is_inverse(Letter l) { return l < 0; }

Word inverse(std::span<const Letter> w);
Word concat(std::span<const Letter> a, std::span<const Letter> b);

// Cancels adjacent x x^-1 pairs.
Word free_reduce(std::span<const Letter> w);
bool is_freely_reduced(std::span<const Letter> w);

// Free reduction followed by removal of cancelling first/last letters.
Word cyclic_reduce(std::span<const Letter> w);

Word rotate(std::span<const Letter> w, std::size_t k);
bool is_cyclic_rotation(std::span<const Letter> a, std::span<const Letter> b);

// Letter sums per generator, length `generator_count`.
std::vector<std::int64_t> exponent_sums(std::span<const Letter> w, int generator_count);

// Names a generator space: "a1".."ag","b1".."bg","d1".."dk" for surfaces, or arbitrary names.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int generator) const { return names_.at(generator); }

  // -1 when unknown.
  int find(std::string_view name) const;

  // Letters are written as the generator name, with a trailing ' for the inverse.
  std::string format(Letter l) const;
  std::string format(std::span<const Letter> w, std::string_view sep = " ") const;

  // Accepts space separated tokens ("a1 b1'") or concatenated ones ("a1b1'").
  // Throws Error on unknown tokens. The empty string and "1" / "e" denote the identity.
  Word parse(std::string_view text) const;

 private:
  std::vector<std::string> names_;
};

}  // namespace canonlift
