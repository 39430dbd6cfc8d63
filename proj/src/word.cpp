#include "canonlift/word.hpp"

#include <algorithm>
#include <cctype>

#include "canonlift/errors.hpp"

namespace canonlift {

Word inverse(std::span<const Letter> w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

Word concat(std::span<const Letter> a, std::span<const Letter> b) {
  Word out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word free_reduce(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

bool is_freely_reduced(std::span<const Letter> w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == -w[i - 1]) return false;
  return true;
}

Word cyclic_reduce(std::span<const Letter> w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word rotate(std::span<const Letter> w, std::size_t k) {
  Word out(w.begin(), w.end());
  if (!out.empty()) std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % out.size()), out.end());
  return out;
}

bool is_cyclic_rotation(std::span<const Letter> a, std::span<const Letter> b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  Word doubled = concat(a, a);
  return std::search(doubled.begin(), doubled.end(), b.begin(), b.end()) != doubled.end();
}

std::vector<std::int64_t> exponent_sums(std::span<const Letter> w, int generator_count) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(generator_count), 0);
  for (Letter l : w) {
    int g = generator_of(l);
    if (g < generator_count) v[static_cast<std::size_t>(g)] += is_inverse(l) ? -1 : 1;
  }
  return v;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {}

int Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

std::string Alphabet::format(Letter l) const {
  std::string s = name(generator_of(l));
  if (is_inverse(l)) s += '\'';
  return s;
}

std::string Alphabet::format(std::span<const Letter> w, std::string_view sep) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += sep;
    out += format(w[i]);
  }
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  Word out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*' || text[i] == '.'))
      ++i;
  };
  skip();
  if (text.substr(i) == "1" || text.substr(i) == "e") return out;
  while (i < text.size()) {
    // Longest matching generator name wins, so "a12" is not read as "a1" "2".
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t g = 0; g < names_.size(); ++g) {
      const auto& n = names_[g];
      if (n.size() > best_len && text.compare(i, n.size(), n) == 0) {
        std::size_t end = i + n.size();
        bool boundary = end >= text.size() || !std::isdigit(static_cast<unsigned char>(text[end]));
        if (boundary) {
          best = static_cast<int>(g);
          best_len = n.size();
        }
      }
    }
    if (best < 0) {
      std::size_t end = i;
      while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
      throw Error("unknown generator in word: '" + std::string(text.substr(i, end - i)) + "'");
    }
    i += best_len;
    bool inv = false;
    if (i < text.size() && text[i] == '\'') {
      inv = true;
      ++i;
    } else if (text.compare(i, 2, "^-") == 0 && i + 2 < text.size() && text[i + 2] == '1') {
      inv = true;
      i += 3;
    }
    out.push_back(make_letter(best, inv));
    skip();
  }
  return out;
}

}  // namespace canonlift
