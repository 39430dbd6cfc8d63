#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace canonlift {

struct GroupPresentation;

using BigInt = boost::multiprecision::cpp_int;

// Dense integer matrix, row-major, arbitrary precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const std::vector<BigInt>& row);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  bool is_zero() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

// Exact determinant (fraction-free Bareiss elimination). Square matrices only.
BigInt determinant(const IntMatrix& m);

struct SmithResult {
  IntMatrix d;
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix v;  // cols x cols, unimodular
};

// U * m * V = D with D diagonal, nonnegative, d_1 | d_2 | ... ; zeros trail.
SmithResult smith_normal_form(const IntMatrix& m);

// Finitely generated abelian group in invariant-factor form Z^rank + Z/t_1 + ... with t_i | t_{i+1}, t_i >= 2.
struct AbelianGroup {
  std::int64_t rank = 0;
  std::vector<BigInt> torsion;

  static AbelianGroup free(std::int64_t rank) { return {rank, {}}; }
  // Normalizes an arbitrary list of cyclic orders (0 = Z, 1 dropped) into invariant factors.
  static AbelianGroup from_cyclic_orders(const std::vector<BigInt>& orders);

  // "Z^4+Z/2", "0" for the trivial group.
  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// Cokernel of the relation matrix: generators are columns, each row a relation.
AbelianGroup cokernel(const IntMatrix& relations);

// Relator exponent-sum matrix of a presentation (rows = relators, cols = generators).
IntMatrix relation_matrix(const GroupPresentation& p);
AbelianGroup abelianization(const GroupPresentation& p);

// Quotient of the group presented by `relations` by the cyclic subgroup generated by `sigma`.
// Throws DimensionMismatch when sigma has the wrong length.
AbelianGroup filling_quotient(const IntMatrix& relations, const std::vector<BigInt>& sigma);

// Relation matrix presenting `g` on rank + torsion.size() generators: free coordinates first.
IntMatrix presentation_matrix(const AbelianGroup& g);
AbelianGroup filling_quotient(const AbelianGroup& g, const std::vector<BigInt>& sigma);

// Result of inverting the circle-bundle homology formulas.
struct GenusRecovery {
  bool consistent = false;
  std::int64_t genus = 0;
  // |e| for closed bases; 0 means the trivial bundle. Unset for bounded bases (always trivial).
  std::optional<BigInt> euler_abs;
  // Closed base with no torsion and even rank also fits |e| = 1.
  bool euler_ambiguous = false;
};

// Closed base: H1 = Z^{2g} + Z/|e| (Z^{2g+1} if e = 0). Bounded base with k boundary circles: Z^{2g+k}.
GenusRecovery genus_from_filling_h1(const AbelianGroup& h, std::int64_t boundary_count);

// The two extension shapes allowed when a class of order k is killed to leave Z^{2g} + Z/e:
// the split Z^{2g} + Z/e + Z/k and the cyclic Z^{2g} + Z/ek.
std::pair<AbelianGroup, AbelianGroup> torsion_extension_options(std::int64_t genus, std::int64_t e,
                                                                  std::int64_t k);

}  // namespace canonlift
