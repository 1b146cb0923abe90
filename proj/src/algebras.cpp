#include "harrco/algebras.hpp"

#include <stdexcept>

namespace harrco {

StructureAlgebra::StructureAlgebra(std::size_t d, std::vector<std::string> names,
                                   std::size_t unit)
    : dim(d), basis_names(std::move(names)), unit_index(unit),
      structure(d * d * d)
{
  if (dim == 0)
    throw std::invalid_argument("algebra dimension must be positive");
  if (basis_names.size() != dim)
    throw std::invalid_argument("basis name count must equal dim");
  if (unit_index >= dim)
    throw std::invalid_argument("unit index out of range");
}

Vector StructureAlgebra::multiply(const Vector& u, const Vector& v) const
{
  if (u.size() != dim || v.size() != dim)
    throw std::invalid_argument("multiply: coefficient vector length mismatch");
  Vector w(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (sgn(u[i]) == 0)
      continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (sgn(v[j]) == 0)
        continue;
      Rational uv = u[i] * v[j];
      for (std::size_t k = 0; k < dim; ++k)
        if (sgn(c(i, j, k)) != 0)
          w[k] += uv * c(i, j, k);
    }
  }
  return w;
}

ExactMatrix StructureAlgebra::mult_matrix(std::size_t i) const
{
  ExactMatrix m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k)
      m.at(k, j) = c(i, j, k);
  return m;
}

std::size_t StructureAlgebra::basis_index(const std::string& name) const
{
  for (std::size_t i = 0; i < dim; ++i)
    if (basis_names[i] == name)
      return i;
  throw std::invalid_argument("unknown basis element: " + name);
}

std::vector<ValidationIssue> validate(const StructureAlgebra& a)
{
  std::vector<ValidationIssue> issues;
  const std::size_t d = a.dim;

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (a.c(i, j, k) != a.c(j, i, k))
          issues.push_back({"commutativity",
                            {i, j, k, 0},
                            "c[" + std::to_string(i) + "][" + std::to_string(j) +
                                "] differs from c[" + std::to_string(j) + "][" +
                                std::to_string(i) + "] at " + std::to_string(k)});

  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      Rational expected = (j == k) ? 1 : 0;
      if (a.c(a.unit_index, j, k) != expected)
        issues.push_back({"unit",
                          {a.unit_index, j, k, 0},
                          "unit law fails: 1 * e_" + std::to_string(j)});
    }

  // sum_m c(i,j,m) c(m,k,l) = sum_m c(j,k,m) c(i,m,l)
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          Rational lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < d; ++m) {
            lhs += a.c(i, j, m) * a.c(m, k, l);
            rhs += a.c(j, k, m) * a.c(i, m, l);
          }
          if (lhs != rhs)
            issues.push_back({"associativity",
                              {i, j, k, l},
                              "(e_" + std::to_string(i) + " e_" + std::to_string(j) +
                                  ") e_" + std::to_string(k) + " != e_" +
                                  std::to_string(i) + " (e_" + std::to_string(j) +
                                  " e_" + std::to_string(k) + ")"});
        }
  return issues;
}

namespace {

StructureAlgebra truncated_poly(std::size_t m)
{
  if (m < 2)
    throw std::invalid_argument("truncated_poly: m must be >= 2");
  std::vector<std::string> names(m);
  names[0] = "1";
  names[1] = "x";
  for (std::size_t i = 2; i < m; ++i)
    names[i] = "x^" + std::to_string(i);
  StructureAlgebra a(m, std::move(names), 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i + j < m)
        a.c(i, j, i + j) = 1;
  return a;
}

StructureAlgebra cross(std::size_t m)
{
  if (m < 2)
    throw std::invalid_argument("cross: m must be >= 2");
  // basis: 1, x, ..., x^{m-1}, y, ..., y^{m-1}
  const std::size_t d = 2 * m - 1;
  std::vector<std::string> names(d);
  names[0] = "1";
  names[1] = "x";
  names[m] = "y";
  for (std::size_t i = 2; i < m; ++i) {
    names[i] = "x^" + std::to_string(i);
    names[m + i - 1] = "y^" + std::to_string(i);
  }
  StructureAlgebra a(d, std::move(names), 0);
  auto xi = [&](std::size_t p) { return p; };         // x^p, p in 1..m-1
  auto yi = [&](std::size_t p) { return m + p - 1; }; // y^p, p in 1..m-1
  for (std::size_t k = 0; k < d; ++k) {
    a.c(0, k, k) = 1;
    a.c(k, 0, k) = 1;
  }
  a.c(0, 0, 0) = 1;
  for (std::size_t p = 1; p < m; ++p)
    for (std::size_t q = 1; q < m; ++q) {
      if (p + q < m) {
        a.c(xi(p), xi(q), xi(p + q)) = 1;
        a.c(yi(p), yi(q), yi(p + q)) = 1;
      }
      // x^p y^q = 0
    }
  return a;
}

} // namespace

StructureAlgebra builtin_algebra(const std::string& name)
{
  auto parse_param = [&](const std::string& prefix) -> std::size_t {
    std::string inner = name.substr(prefix.size());
    if (inner.size() < 3 || inner.front() != '(' || inner.back() != ')')
      throw std::invalid_argument("malformed builtin name: " + name);
    inner = inner.substr(1, inner.size() - 2);
    for (char ch : inner)
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("malformed builtin parameter: " + name);
    return static_cast<std::size_t>(std::stoul(inner));
  };

  if (name == "dual_numbers")
    return truncated_poly(2);
  if (name.rfind("truncated_poly", 0) == 0)
    return truncated_poly(parse_param("truncated_poly"));
  if (name.rfind("cross", 0) == 0)
    return cross(parse_param("cross"));
  throw std::invalid_argument("unknown builtin algebra: " + name);
}

SymmetricModule SymmetricModule::regular(const StructureAlgebra& a)
{
  SymmetricModule m;
  m.dim = a.dim;
  m.action.reserve(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    m.action.push_back(a.mult_matrix(i));
  return m;
}

Vector SymmetricModule::act(const Vector& algebra_coeffs, const Vector& m) const
{
  Vector out(dim);
  for (std::size_t i = 0; i < algebra_coeffs.size(); ++i) {
    if (sgn(algebra_coeffs[i]) == 0)
      continue;
    Vector part = action[i] * m;
    for (std::size_t k = 0; k < dim; ++k)
      out[k] += algebra_coeffs[i] * part[k];
  }
  return out;
}

std::vector<ValidationIssue> validate_module(const StructureAlgebra& a,
                                             const SymmetricModule& m)
{
  std::vector<ValidationIssue> issues;
  if (m.action.size() != a.dim) {
    issues.push_back({"module", {0, 0, 0, 0}, "action count differs from algebra dim"});
    return issues;
  }
  if (!(m.action[a.unit_index] == ExactMatrix::identity(m.dim)))
    issues.push_back({"module", {a.unit_index, 0, 0, 0}, "unit does not act as identity"});
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      ExactMatrix lhs = m.action[i] * m.action[j];
      ExactMatrix rhs(m.dim, m.dim);
      for (std::size_t k = 0; k < a.dim; ++k) {
        if (sgn(a.c(i, j, k)) == 0)
          continue;
        for (std::size_t r = 0; r < m.dim; ++r)
          for (std::size_t s = 0; s < m.dim; ++s)
            rhs.at(r, s) += a.c(i, j, k) * m.action[k].at(r, s);
      }
      if (!(lhs == rhs))
        issues.push_back({"module", {i, j, 0, 0}, "representation law fails"});
    }
  return issues;
}

} // namespace harrco
