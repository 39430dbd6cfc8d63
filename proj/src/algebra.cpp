#include "canonlift/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "canonlift/errors.hpp"
#include "canonlift/surface.hpp"

namespace canonlift {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

void IntMatrix::append_row(const std::vector<BigInt>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw DimensionMismatch("appended row has " + std::to_string(row.size()) +
                                                   " entries, expected " + std::to_string(cols_));
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

struct Reducer {
  IntMatrix a, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
  }
  // row_i -= q * row_j
  void sub_row(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) -= q * a(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) -= q * u(j, c);
  }
  // col_i -= q * col_j
  void sub_col(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) -= q * a(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, i) -= q * v(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }

  // Moves the smallest nonzero |entry| of the trailing block to (t, t). False if the block is zero.
  bool place_pivot(std::size_t t) {
    bool found = false;
    BigInt best;
    std::size_t br = t, bc = t;
    for (std::size_t r = t; r < a.rows(); ++r)
      for (std::size_t c = t; c < a.cols(); ++c) {
        if (a(r, c) == 0) continue;
        BigInt x = abs(a(r, c));
        if (!found || x < best) {
          best = x;
          br = r;
          bc = c;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  void diagonalize_at(std::size_t t) {
    for (;;) {
      bool dirty = false;
      for (std::size_t r = t + 1; r < a.rows(); ++r) {
        if (a(r, t) == 0) continue;
        sub_row(r, t, a(r, t) / a(t, t));
        if (a(r, t) != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < a.cols(); ++c) {
        if (a(t, c) == 0) continue;
        sub_col(c, t, a(t, c) / a(t, t));
        if (a(t, c) != 0) dirty = true;
      }
      if (dirty) {
        place_pivot(t);
        continue;
      }
      // Divisibility: fold any offending row into the pivot row and start over.
      bool folded = false;
      for (std::size_t r = t + 1; r < a.rows() && !folded; ++r)
        for (std::size_t c = t + 1; c < a.cols(); ++c)
          if (a(r, c) % a(t, t) != 0) {
            sub_row(t, r, -1);
            folded = true;
            break;
          }
      if (!folded) break;
    }
    if (a(t, t) < 0) negate_row(t);
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  Reducer red{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    if (!red.place_pivot(t)) break;
    red.diagonalize_at(t);
  }
  return {std::move(red.a), std::move(red.u), std::move(red.v)};
}

AbelianGroup AbelianGroup::from_cyclic_orders(const std::vector<BigInt>& orders) {
  IntMatrix m(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) m(i, i) = orders[i];
  return cokernel(m);
}

std::string AbelianGroup::to_string() const {
  std::string out;
  if (rank > 0) out = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  for (const auto& t : torsion) {
    if (!out.empty()) out += '+';
    out += "Z/" + t.str();
  }
  return out.empty() ? "0" : out;
}

AbelianGroup cokernel(const IntMatrix& relations) {
  AbelianGroup g;
  if (relations.rows() == 0) {
    g.rank = static_cast<std::int64_t>(relations.cols());
    return g;
  }
  SmithResult s = smith_normal_form(relations);
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i) {
    const BigInt& x = s.d(i, i);
    if (x == 0) break;
    ++nonzero;
    if (x > 1) g.torsion.push_back(x);
  }
  g.rank = static_cast<std::int64_t>(relations.cols() - nonzero);
  return g;
}

IntMatrix relation_matrix(const GroupPresentation& p) {
  const int n = p.alphabet.size();
  IntMatrix m(p.relators.size(), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    auto sums = exponent_sums(p.relators[r], n);
    for (int c = 0; c < n; ++c) m(r, static_cast<std::size_t>(c)) = sums[static_cast<std::size_t>(c)];
  }
  return m;
}

AbelianGroup abelianization(const GroupPresentation& p) { return cokernel(relation_matrix(p)); }

AbelianGroup filling_quotient(const IntMatrix& relations, const std::vector<BigInt>& sigma) {
  if (sigma.size() != relations.cols())
    throw DimensionMismatch("slope vector has " + std::to_string(sigma.size()) + " coordinates, group has " +
                            std::to_string(relations.cols()) + " generators");
  IntMatrix m = relations;
  m.append_row(sigma);
  return cokernel(m);
}

IntMatrix presentation_matrix(const AbelianGroup& g) {
  const std::size_t n = static_cast<std::size_t>(g.rank) + g.torsion.size();
  IntMatrix m(g.torsion.size(), n);
  for (std::size_t i = 0; i < g.torsion.size(); ++i) m(i, static_cast<std::size_t>(g.rank) + i) = g.torsion[i];
  return m;
}

AbelianGroup filling_quotient(const AbelianGroup& g, const std::vector<BigInt>& sigma) {
  return filling_quotient(presentation_matrix(g), sigma);
}

GenusRecovery genus_from_filling_h1(const AbelianGroup& h, std::int64_t boundary_count) {
  GenusRecovery out;
  if (boundary_count > 0) {
    if (!h.torsion.empty()) return out;
    std::int64_t twice_genus = h.rank - boundary_count;
    if (twice_genus < 0 || twice_genus % 2 != 0) return out;
    out.consistent = true;
    out.genus = twice_genus / 2;
    return out;
  }
  if (h.torsion.size() > 1) return out;
  if (h.torsion.size() == 1) {
    if (h.rank % 2 != 0) return out;
    out.consistent = true;
    out.genus = h.rank / 2;
    out.euler_abs = h.torsion.front();
    return out;
  }
  out.consistent = true;
  if (h.rank % 2 == 1) {
    out.genus = (h.rank - 1) / 2;
    out.euler_abs = BigInt(0);
  } else {
    out.genus = h.rank / 2;
    out.euler_abs = BigInt(1);
    out.euler_ambiguous = true;
  }
  return out;
}

std::pair<AbelianGroup, AbelianGroup> torsion_extension_options(std::int64_t genus, std::int64_t e, std::int64_t k) {
  AbelianGroup split = AbelianGroup::from_cyclic_orders({BigInt(e), BigInt(k)});
  AbelianGroup cyclic = AbelianGroup::from_cyclic_orders({BigInt(e) * k});
  split.rank += 2 * genus;
  cyclic.rank += 2 * genus;
  return {split, cyclic};
}

}  // namespace canonlift
