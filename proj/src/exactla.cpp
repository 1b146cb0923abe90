#include "harrco/exactla.hpp"

#include <algorithm>
#include <stdexcept>

namespace harrco {

ExactMatrix ExactMatrix::identity(std::size_t n)
{
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

Vector ExactMatrix::row(std::size_t i) const
{
  return Vector(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
}

Vector ExactMatrix::col(std::size_t j) const
{
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    v[i] = at(i, j);
  return v;
}

ExactMatrix ExactMatrix::transpose() const
{
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t.at(j, i) = at(i, j);
  return t;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& other)
{
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix shape mismatch in +");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] += other.entries_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& other)
{
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix shape mismatch in -");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] -= other.entries_[i];
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b)
{
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("matrix shape mismatch in *");
  ExactMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (sgn(aik) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b.at(k, j);
        if (sgn(bkj) != 0)
          c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

Vector operator*(const ExactMatrix& a, const Vector& v)
{
  if (a.cols_ != v.size())
    throw std::invalid_argument("matrix/vector shape mismatch in *");
  Vector w(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const Rational& aij = a.at(i, j);
      if (sgn(aij) != 0 && sgn(v[j]) != 0)
        w[i] += aij * v[j];
    }
  return w;
}

bool ExactMatrix::is_zero() const
{
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

RrefResult rref(const ExactMatrix& m)
{
  RrefResult res{m, {}};
  ExactMatrix& a = res.mat;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && sgn(a.at(piv, c)) == 0)
      ++piv;
    if (piv == a.rows())
      continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a.at(piv, j), a.at(r, j));
    Rational inv = 1 / a.at(r, c);
    for (std::size_t j = c; j < a.cols(); ++j)
      a.at(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a.at(i, c)) == 0)
        continue;
      Rational f = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        a.at(i, j) -= f * a.at(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  return res;
}

std::size_t rank(const ExactMatrix& m)
{
  return rref(m).pivots.size();
}

std::vector<Vector> kernel_basis(const ExactMatrix& m)
{
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivots)
    is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      v[r.pivots[i]] = -r.mat.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const ExactMatrix& m, const Vector& b)
{
  if (b.size() != m.rows())
    throw std::invalid_argument("solve: right-hand side length mismatch");
  ExactMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols())
    return std::nullopt; // inconsistent
  Vector x(m.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    x[r.pivots[i]] = r.mat.at(i, m.cols());
  return x;
}

SubspaceDims subspace_dims(const std::vector<Vector>& u_gens,
                           const std::vector<Vector>& v_gens)
{
  std::size_t ambient = 0;
  if (!u_gens.empty())
    ambient = u_gens.front().size();
  else if (!v_gens.empty())
    ambient = v_gens.front().size();
  for (const auto& g : u_gens)
    if (g.size() != ambient)
      throw std::invalid_argument("subspace_dims: vector length mismatch");
  for (const auto& g : v_gens)
    if (g.size() != ambient)
      throw std::invalid_argument("subspace_dims: vector length mismatch");

  RowSpace u(ambient), v(ambient), s(ambient);
  for (const auto& g : u_gens) {
    u.insert(g);
    s.insert(g);
  }
  for (const auto& g : v_gens) {
    v.insert(g);
    s.insert(g);
  }
  SubspaceDims d;
  d.dim_u = u.dim();
  d.dim_v = v.dim();
  d.dim_sum = s.dim();
  d.dim_intersection = d.dim_u + d.dim_v - d.dim_sum;
  return d;
}

std::size_t RowSpace::reduce(Vector& v) const
{
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational& c = v[pivots_[i]];
    if (sgn(c) == 0)
      continue;
    Rational f = c; // rows are normalized, pivot entry is 1
    for (std::size_t j = pivots_[i]; j < ambient_; ++j)
      if (sgn(rows_[i][j]) != 0)
        v[j] -= f * rows_[i][j];
  }
  for (std::size_t j = 0; j < ambient_; ++j)
    if (sgn(v[j]) != 0)
      return j;
  return ambient_;
}

bool RowSpace::insert(Vector v)
{
  if (v.size() != ambient_)
    throw std::invalid_argument("RowSpace: vector length mismatch");
  std::size_t p = reduce(v);
  if (p == ambient_)
    return false;
  Rational inv = 1 / v[p];
  for (std::size_t j = p; j < ambient_; ++j)
    v[j] *= inv;
  // back-substitute into existing rows to stay fully reduced
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational f = rows_[i][p];
    if (sgn(f) == 0)
      continue;
    for (std::size_t j = p; j < ambient_; ++j)
      if (sgn(v[j]) != 0)
        rows_[i][j] -= f * v[j];
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p)
    ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

bool RowSpace::contains(Vector v) const
{
  if (v.size() != ambient_)
    throw std::invalid_argument("RowSpace: vector length mismatch");
  return reduce(v) == ambient_;
}

} // namespace harrco
