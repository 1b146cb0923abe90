#ifndef HARRCO_EXACTLA_HPP
#define HARRCO_EXACTLA_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "harrco/rational.hpp"

namespace harrco {

using Vector = std::vector<Rational>;

// Dense matrix of exact rationals, row major.
class ExactMatrix {
public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;

  ExactMatrix transpose() const;

  bool operator==(const ExactMatrix& other) const = default;

  ExactMatrix& operator+=(const ExactMatrix& other);
  ExactMatrix& operator-=(const ExactMatrix& other);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend Vector operator*(const ExactMatrix& a, const Vector& v);

  bool is_zero() const;

private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

struct RrefResult {
  ExactMatrix mat;
  std::vector<std::size_t> pivots; // strictly increasing pivot columns
};

// Reduced row echelon form; preserves the row space.
RrefResult rref(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

// Basis of { v : m v = 0 }; count = cols - rank.
std::vector<Vector> kernel_basis(const ExactMatrix& m);

// One exact solution of m x = b, or nullopt when the system is
// inconsistent. Free variables are set to zero, which makes the result
// deterministic. Throws std::invalid_argument on dimension mismatch.
std::optional<Vector> solve(const ExactMatrix& m, const Vector& b);

struct SubspaceDims {
  std::size_t dim_u, dim_v, dim_intersection, dim_sum;
};

// Dimensions of two spanned subspaces, their intersection and sum.
// Satisfies dim_u + dim_v = dim_intersection + dim_sum.
SubspaceDims subspace_dims(const std::vector<Vector>& u_gens,
                           const std::vector<Vector>& v_gens);

// Incrementally built subspace kept in reduced echelon form.
class RowSpace {
public:
  explicit RowSpace(std::size_t ambient) : ambient_(ambient) {}

  // Returns true when v was independent of the current span.
  bool insert(Vector v);
  bool contains(Vector v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<Vector>& basis() const { return rows_; }

private:
  // Reduces v against the stored rows; returns the first nonzero index
  // of the remainder, or ambient_ when v lies in the span.
  std::size_t reduce(Vector& v) const;

  std::size_t ambient_;
  std::vector<Vector> rows_;           // reduced echelon rows
  std::vector<std::size_t> pivots_;    // pivot index per row, increasing
};

} // namespace harrco

#endif
