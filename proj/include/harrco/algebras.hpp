#ifndef HARRCO_ALGEBRAS_HPP
#define HARRCO_ALGEBRAS_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "harrco/exactla.hpp"
#include "harrco/rational.hpp"

namespace harrco {

// Finite-dimensional unital commutative associative algebra over QQ,
// given by basis and structure constants e_i e_j = sum_k c(i,j,k) e_k.
struct StructureAlgebra {
  std::size_t dim = 0;
  std::vector<std::string> basis_names;
  std::size_t unit_index = 0;
  std::vector<Rational> structure; // dim^3, row-major (i,j,k)

  StructureAlgebra() = default;
  StructureAlgebra(std::size_t d, std::vector<std::string> names, std::size_t unit);

  Rational& c(std::size_t i, std::size_t j, std::size_t k)
  {
    return structure[(i * dim + j) * dim + k];
  }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const
  {
    return structure[(i * dim + j) * dim + k];
  }

  // bilinear product of coefficient vectors
  Vector multiply(const Vector& u, const Vector& v) const;

  // matrix of multiplication by e_i
  ExactMatrix mult_matrix(std::size_t i) const;

  std::size_t basis_index(const std::string& name) const; // throws if unknown
};

struct ValidationIssue {
  std::string kind; // "commutativity" | "associativity" | "unit"
  std::array<std::size_t, 4> indices;
  std::string message;
};

// Empty result means every invariant (commutativity, associativity,
// unit law) holds.
std::vector<ValidationIssue> validate(const StructureAlgebra& a);

// Builtin test algebras:
//   dual_numbers        QQ[x]/(x^2)
//   truncated_poly(m)   QQ[x]/(x^m), m >= 2
//   cross(m)            QQ[x,y]/(xy, x^m, y^m), m >= 2
// `name` accepts e.g. "dual_numbers", "truncated_poly(3)", "cross(2)".
StructureAlgebra builtin_algebra(const std::string& name);

// Symmetric module over a commutative algebra: left and right actions
// coincide; given by one action matrix per algebra basis element.
struct SymmetricModule {
  std::size_t dim = 0;
  std::vector<ExactMatrix> action; // action[i] is dim x dim

  static SymmetricModule regular(const StructureAlgebra& a);

  // action of the algebra element with coefficients `a` on m
  Vector act(const Vector& algebra_coeffs, const Vector& m) const;

  bool operator==(const SymmetricModule&) const = default;
};

// Checks the representation law and the unit law.
std::vector<ValidationIssue> validate_module(const StructureAlgebra& a,
                                             const SymmetricModule& m);

} // namespace harrco

#endif
