#include "harrco/complexes.hpp"

#include <algorithm>
#include <limits>

namespace harrco {

std::size_t tuple_index(const std::vector<std::size_t>& t, std::size_t d)
{
  std::size_t idx = 0;
  for (std::size_t v : t)
    idx = idx * d + v;
  return idx;
}

std::vector<std::size_t> index_tuple(std::size_t idx, std::size_t len, std::size_t d)
{
  std::vector<std::size_t> t(len);
  for (std::size_t i = len; i-- > 0;) {
    t[i] = idx % d;
    idx /= d;
  }
  return t;
}

std::size_t power_dim(std::size_t d, std::size_t n, std::size_t cap)
{
  std::size_t p = 1;
  for (std::size_t i = 0; i < n; ++i) {
    p *= d;
    if (p > cap)
      throw ResourceCapError("chain space dimension " + std::to_string(d) + "^" +
                             std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  return p;
}

std::size_t power_dim(std::size_t d, std::size_t n)
{
  return power_dim(d, n, kDefaultCap);
}

void Chain::add(const std::vector<std::size_t>& tuple, const Rational& c)
{
  if (tuple.size() != degree + 1)
    throw std::invalid_argument("chain tuple length mismatch");
  if (sgn(c) == 0)
    return;
  auto [it, inserted] = coeffs.emplace(tuple, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      coeffs.erase(it);
  }
}

bool Chain::operator==(const Chain& other) const
{
  return degree == other.degree && coeffs == other.coeffs;
}

Cochain::Cochain(const StructureAlgebra& a, std::size_t arity_)
    : Cochain(a, SymmetricModule::regular(a), arity_)
{
}

Cochain::Cochain(const StructureAlgebra& a, SymmetricModule m, std::size_t arity_)
    : alg(&a), module(std::move(m)), arity(arity_),
      values(power_dim(a.dim, arity_, std::numeric_limits<std::size_t>::max()),
             module.dim)
{
}

Cochain Cochain::multiplication(const StructureAlgebra& a)
{
  Cochain f(a, 2);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        f.values.at(i * a.dim + j, k) = a.c(i, j, k);
  return f;
}

Vector Cochain::eval(const std::vector<std::size_t>& tuple) const
{
  if (tuple.size() != arity)
    throw std::invalid_argument("cochain arity mismatch");
  return values.row(tuple_index(tuple, alg->dim));
}

Vector Cochain::eval_with_slot(const std::vector<std::size_t>& tuple, std::size_t slot,
                               const Vector& element) const
{
  std::vector<std::size_t> t = tuple;
  Vector out(module.dim);
  for (std::size_t k = 0; k < alg->dim; ++k) {
    if (sgn(element[k]) == 0)
      continue;
    t[slot] = k;
    std::size_t row = tuple_index(t, alg->dim);
    for (std::size_t c = 0; c < module.dim; ++c)
      if (sgn(values.at(row, c)) != 0)
        out[c] += element[k] * values.at(row, c);
  }
  return out;
}

Vector Cochain::vec() const
{
  Vector v;
  v.reserve(values.rows() * values.cols());
  for (std::size_t i = 0; i < values.rows(); ++i)
    for (std::size_t j = 0; j < values.cols(); ++j)
      v.push_back(values.at(i, j));
  return v;
}

Cochain Cochain::from_vec(const StructureAlgebra& a, const SymmetricModule& m,
                          std::size_t arity, const Vector& v)
{
  Cochain f(a, m, arity);
  if (v.size() != f.values.rows() * f.values.cols())
    throw std::invalid_argument("cochain vector length mismatch");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < f.values.rows(); ++i)
    for (std::size_t j = 0; j < f.values.cols(); ++j)
      f.values.at(i, j) = v[idx++];
  return f;
}

bool Cochain::is_symmetric() const
{
  if (arity != 2)
    throw std::invalid_argument("is_symmetric applies to arity-2 cochains");
  const std::size_t d = alg->dim;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t c = 0; c < module.dim; ++c)
        if (values.at(i * d + j, c) != values.at(j * d + i, c))
          return false;
  return true;
}

bool Cochain::operator==(const Cochain& other) const
{
  return alg == other.alg && arity == other.arity && module.dim == other.module.dim &&
         values == other.values;
}

Chain chain_boundary(const Chain& c)
{
  if (c.degree < 1)
    throw std::invalid_argument("chain_boundary: degree must be >= 1");
  const StructureAlgebra& a = *c.alg;
  Chain out;
  out.alg = c.alg;
  out.degree = c.degree - 1;
  const std::size_t n = c.degree;
  for (const auto& [t, coeff] : c.coeffs) {
    for (std::size_t i = 0; i + 1 <= n; ++i) {
      // merge slots i and i+1
      Rational s = (i % 2 == 0) ? coeff : -coeff;
      for (std::size_t k = 0; k < a.dim; ++k) {
        const Rational& ck = a.c(t[i], t[i + 1], k);
        if (sgn(ck) == 0)
          continue;
        std::vector<std::size_t> u;
        u.reserve(n);
        u.insert(u.end(), t.begin(), t.begin() + i);
        u.push_back(k);
        u.insert(u.end(), t.begin() + i + 2, t.end());
        out.add(u, s * ck);
      }
    }
    // cyclic term: (a_n a_0, a_1, ..., a_{n-1})
    Rational s = (n % 2 == 0) ? coeff : -coeff;
    for (std::size_t k = 0; k < a.dim; ++k) {
      const Rational& ck = a.c(t[n], t[0], k);
      if (sgn(ck) == 0)
        continue;
      std::vector<std::size_t> u;
      u.reserve(n);
      u.push_back(k);
      u.insert(u.end(), t.begin() + 1, t.begin() + n);
      out.add(u, s * ck);
    }
  }
  return out;
}

ExactMatrix boundary_matrix(const StructureAlgebra& a, std::size_t n)
{
  const std::size_t src = power_dim(a.dim, n + 1, std::numeric_limits<std::size_t>::max());
  const std::size_t dst = power_dim(a.dim, n, std::numeric_limits<std::size_t>::max());
  ExactMatrix m(dst, src);
  for (std::size_t col = 0; col < src; ++col) {
    Chain c;
    c.alg = &a;
    c.degree = n;
    c.add(index_tuple(col, n + 1, a.dim), 1);
    Chain b = chain_boundary(c);
    for (const auto& [t, v] : b.coeffs)
      m.at(tuple_index(t, a.dim), col) += v;
  }
  return m;
}

Chain shuffle_product_chains(const Chain& c1, const Chain& c2)
{
  if (c1.alg != c2.alg)
    throw std::invalid_argument("shuffle_product_chains: algebra mismatch");
  const StructureAlgebra& a = *c1.alg;
  const std::size_t p = c1.degree, q = c2.degree;
  Chain out;
  out.alg = c1.alg;
  out.degree = p + q;

  std::vector<Permutation> shuffles;
  if (p >= 1 && q >= 1)
    shuffles = multi_shuffles({p, q});
  else
    shuffles = {Permutation::identity(p + q)};

  for (const auto& [s, cs] : c1.coeffs)
    for (const auto& [t, ct] : c2.coeffs) {
      std::vector<std::size_t> body;
      body.reserve(p + q);
      body.insert(body.end(), s.begin() + 1, s.end());
      body.insert(body.end(), t.begin() + 1, t.end());
      for (std::size_t k = 0; k < a.dim; ++k) {
        const Rational& ck = a.c(s[0], t[0], k);
        if (sgn(ck) == 0)
          continue;
        const Rational base = cs * ct * ck;
        for (const Permutation& sigma : shuffles) {
          std::vector<std::size_t> u(p + q + 1);
          u[0] = k;
          for (std::size_t j = 0; j < p + q; ++j)
            u[1 + sigma.image(j)] = body[j];
          out.add(u, sigma.sign() > 0 ? base : -base);
        }
      }
    }
  return out;
}

Cochain coboundary(const Cochain& f)
{
  const StructureAlgebra& a = *f.alg;
  const std::size_t n = f.arity;
  Cochain out(a, f.module, n + 1);
  const std::size_t rows = out.values.rows();
  for (std::size_t row = 0; row < rows; ++row) {
    std::vector<std::size_t> t = index_tuple(row, n + 1, a.dim);
    Vector v(f.module.dim);

    // a_1 . f(a_2..a_{n+1})
    {
      std::vector<std::size_t> rest(t.begin() + 1, t.end());
      Vector w = f.module.action[t[0]] * f.eval(rest);
      for (std::size_t c = 0; c < v.size(); ++c)
        v[c] += w[c];
    }
    // middle merges
    for (std::size_t i = 1; i <= n; ++i) {
      Vector prod(a.dim);
      for (std::size_t k = 0; k < a.dim; ++k)
        prod[k] = a.c(t[i - 1], t[i], k);
      std::vector<std::size_t> args;
      args.reserve(n);
      args.insert(args.end(), t.begin(), t.begin() + i - 1);
      args.push_back(0); // placeholder slot
      args.insert(args.end(), t.begin() + i + 1, t.end());
      Vector w = f.eval_with_slot(args, i - 1, prod);
      if (i % 2 == 0)
        for (std::size_t c = 0; c < v.size(); ++c)
          v[c] += w[c];
      else
        for (std::size_t c = 0; c < v.size(); ++c)
          v[c] -= w[c];
    }
    // (-1)^{n+1} f(a_1..a_n) . a_{n+1}  (symmetric module: same action)
    {
      std::vector<std::size_t> front(t.begin(), t.end() - 1);
      Vector w = f.module.action[t[n]] * f.eval(front);
      if ((n + 1) % 2 == 0)
        for (std::size_t c = 0; c < v.size(); ++c)
          v[c] += w[c];
      else
        for (std::size_t c = 0; c < v.size(); ++c)
          v[c] -= w[c];
    }
    for (std::size_t c = 0; c < v.size(); ++c)
      out.values.at(row, c) = v[c];
  }
  return out;
}

ExactMatrix coboundary_matrix(const StructureAlgebra& a, const SymmetricModule& m,
                              std::size_t n)
{
  const std::size_t src_tuples = power_dim(a.dim, n, std::numeric_limits<std::size_t>::max());
  const std::size_t dst_tuples = power_dim(a.dim, n + 1, std::numeric_limits<std::size_t>::max());
  const std::size_t md = m.dim;
  ExactMatrix out(dst_tuples * md, src_tuples * md);

  for (std::size_t row_t = 0; row_t < dst_tuples; ++row_t) {
    std::vector<std::size_t> t = index_tuple(row_t, n + 1, a.dim);

    auto add_action = [&](std::size_t src_tuple, std::size_t act_idx, int sign) {
      const ExactMatrix& act = m.action[act_idx];
      for (std::size_t mp = 0; mp < md; ++mp)
        for (std::size_t mq = 0; mq < md; ++mq) {
          const Rational& av = act.at(mp, mq);
          if (sgn(av) == 0)
            continue;
          if (sign > 0)
            out.at(row_t * md + mp, src_tuple * md + mq) += av;
          else
            out.at(row_t * md + mp, src_tuple * md + mq) -= av;
        }
    };

    // a_1 . f(a_2..)
    {
      std::vector<std::size_t> rest(t.begin() + 1, t.end());
      add_action(tuple_index(rest, a.dim), t[0], +1);
    }
    // middle merges
    for (std::size_t i = 1; i <= n; ++i) {
      const int sign = (i % 2 == 0) ? 1 : -1;
      for (std::size_t k = 0; k < a.dim; ++k) {
        const Rational& ck = a.c(t[i - 1], t[i], k);
        if (sgn(ck) == 0)
          continue;
        std::vector<std::size_t> args;
        args.reserve(n);
        args.insert(args.end(), t.begin(), t.begin() + i - 1);
        args.push_back(k);
        args.insert(args.end(), t.begin() + i + 1, t.end());
        const std::size_t src = tuple_index(args, a.dim);
        for (std::size_t mp = 0; mp < md; ++mp)
          if (sign > 0)
            out.at(row_t * md + mp, src * md + mp) += ck;
          else
            out.at(row_t * md + mp, src * md + mp) -= ck;
      }
    }
    // (-1)^{n+1} f(a_1..a_n) . a_{n+1}
    {
      std::vector<std::size_t> front(t.begin(), t.end() - 1);
      add_action(tuple_index(front, a.dim), t[n], (n + 1) % 2 == 0 ? +1 : -1);
    }
  }
  return out;
}

Cochain harrison_project(const Cochain& f)
{
  if (f.arity < 1)
    throw std::invalid_argument("harrison_project: arity must be >= 1");
  const std::size_t d = f.alg->dim;
  const GroupAlgebraElement e = eulerian_idempotent(f.arity, 1);
  Cochain out(*f.alg, f.module, f.arity);
  const std::size_t rows = out.values.rows();
  for (const auto& [sigma, c] : e.terms()) {
    for (std::size_t row = 0; row < rows; ++row) {
      std::vector<std::size_t> t = index_tuple(row, f.arity, d);
      std::size_t src = tuple_index(sigma.act(t), d);
      for (std::size_t mc = 0; mc < f.module.dim; ++mc)
        if (sgn(f.values.at(src, mc)) != 0)
          out.values.at(row, mc) += c * f.values.at(src, mc);
    }
  }
  return out;
}

ExactMatrix idempotent_tuple_matrix(const GroupAlgebraElement& e, std::size_t d,
                                    bool chain_slot0)
{
  const std::size_t n = e.degree();
  const std::size_t len = chain_slot0 ? n + 1 : n;
  const std::size_t size = power_dim(d, len, std::numeric_limits<std::size_t>::max());
  ExactMatrix m(size, size);
  for (std::size_t col = 0; col < size; ++col) {
    std::vector<std::size_t> t = index_tuple(col, len, d);
    for (const auto& [sigma, c] : e.terms()) {
      std::vector<std::size_t> u;
      if (chain_slot0) {
        std::vector<std::size_t> body(t.begin() + 1, t.end());
        body = sigma.act(body);
        u.reserve(len);
        u.push_back(t[0]);
        u.insert(u.end(), body.begin(), body.end());
      } else {
        u = sigma.act(t);
      }
      m.at(tuple_index(u, d), col) += c;
    }
  }
  return m;
}

HarrisonWitness is_harrison(const Cochain& f)
{
  if (f.arity < 1)
    throw std::invalid_argument("is_harrison: arity must be >= 1");
  const std::size_t n = f.arity;
  const std::size_t d = f.alg->dim;
  const std::size_t tuples = f.values.rows();
  for (std::size_t p = 1; p < n; ++p) {
    const GroupAlgebraElement sh = shuffle_element({p, n - p});
    for (std::size_t idx = 0; idx < tuples; ++idx) {
      std::vector<std::size_t> t = index_tuple(idx, n, d);
      Vector v(f.module.dim);
      for (const auto& [sigma, c] : sh.terms()) {
        std::size_t src = tuple_index(sigma.act(t), d);
        for (std::size_t mc = 0; mc < f.module.dim; ++mc)
          if (sgn(f.values.at(src, mc)) != 0)
            v[mc] += c * f.values.at(src, mc);
      }
      for (std::size_t mc = 0; mc < f.module.dim; ++mc)
        if (sgn(v[mc]) != 0)
          return {false, p, t};
    }
  }
  return {};
}

namespace {

// Basis of the harrison-fixed subspace of the arity-n tuple space, i.e.
// the fixed space of precomposition with e_n^(1).
std::vector<Vector> harrison_fixed_tuple_basis(const StructureAlgebra& a, std::size_t n)
{
  const std::size_t size = power_dim(a.dim, n, std::numeric_limits<std::size_t>::max());
  if (n == 1) {
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < size; ++i) {
      Vector v(size);
      v[i] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  // precomposition acts on tuple coordinates by the transpose
  ExactMatrix p = idempotent_tuple_matrix(eulerian_idempotent(n, 1), a.dim, false).transpose();
  for (std::size_t i = 0; i < size; ++i)
    p.at(i, i) -= 1;
  return kernel_basis(p);
}

// columns (i, m) = fixed_basis[i] tensor module-basis m, flattened like
// Cochain::vec
ExactMatrix restriction_matrix(const std::vector<Vector>& fixed_basis,
                               std::size_t tuples, std::size_t mdim)
{
  ExactMatrix b(tuples * mdim, fixed_basis.size() * mdim);
  for (std::size_t i = 0; i < fixed_basis.size(); ++i)
    for (std::size_t t = 0; t < tuples; ++t) {
      const Rational& v = fixed_basis[i][t];
      if (sgn(v) == 0)
        continue;
      for (std::size_t m = 0; m < mdim; ++m)
        b.at(t * mdim + m, i * mdim + m) = v;
    }
  return b;
}

} // namespace

CohomologyReport cohomology(const StructureAlgebra& a, const SymmetricModule& m,
                            std::size_t n, Variant variant, std::size_t cap)
{
  if (variant == Variant::harrison && n < 1)
    throw std::invalid_argument("harrison cohomology is defined for degree >= 1");
  power_dim(a.dim, n + 1, cap);

  CohomologyReport rep;
  rep.degree = n;
  rep.variant = variant;

  const std::size_t tuples = power_dim(a.dim, n, cap);
  const std::size_t md = m.dim;
  const ExactMatrix delta_out = coboundary_matrix(a, m, n);

  ExactMatrix outgoing;          // delta restricted to the complex in degree n
  ExactMatrix restrict_basis;    // coordinates of the restricted space
  bool restricted = false;
  if (variant == Variant::harrison) {
    std::vector<Vector> fixed = harrison_fixed_tuple_basis(a, n);
    restrict_basis = restriction_matrix(fixed, tuples, md);
    outgoing = delta_out * restrict_basis;
    restricted = true;
    rep.dim_cochains = restrict_basis.cols();
  } else {
    outgoing = delta_out;
    rep.dim_cochains = tuples * md;
  }

  const std::vector<Vector> cocycle_coords = kernel_basis(outgoing);
  rep.dim_cocycles = cocycle_coords.size();

  // coboundaries landing in this degree
  std::vector<Vector> coboundary_gens;
  const bool has_incoming =
      variant == Variant::hochschild ? n >= 1 : n >= 2;
  if (has_incoming) {
    const ExactMatrix delta_in = coboundary_matrix(a, m, n - 1);
    ExactMatrix incoming;
    if (variant == Variant::harrison) {
      std::vector<Vector> fixed_prev = harrison_fixed_tuple_basis(a, n - 1);
      std::size_t tuples_prev = power_dim(a.dim, n - 1, cap);
      incoming = delta_in * restriction_matrix(fixed_prev, tuples_prev, md);
    } else {
      incoming = delta_in;
    }
    for (std::size_t j = 0; j < incoming.cols(); ++j)
      coboundary_gens.push_back(incoming.col(j));
  }

  RowSpace modded(tuples * md);
  for (const auto& g : coboundary_gens)
    modded.insert(g);
  rep.dim_coboundaries = modded.dim();
  rep.betti = rep.dim_cocycles - rep.dim_coboundaries;

  for (const auto& y : cocycle_coords) {
    Vector z = restricted ? restrict_basis * y : y;
    if (modded.insert(z))
      rep.representatives.push_back(Cochain::from_vec(a, m, n, z));
  }
  return rep;
}

std::vector<Vector> shuffle_span_generators(const StructureAlgebra& a, std::size_t n,
                                            std::size_t cap)
{
  const std::size_t size = power_dim(a.dim, n + 1, cap);
  std::vector<Vector> gens;
  for (std::size_t p = 1; p < n; ++p) {
    const std::size_t q = n - p;
    const std::size_t left = power_dim(a.dim, p + 1, cap);
    const std::size_t right = power_dim(a.dim, q + 1, cap);
    for (std::size_t i = 0; i < left; ++i)
      for (std::size_t j = 0; j < right; ++j) {
        Chain c1;
        c1.alg = &a;
        c1.degree = p;
        c1.add(index_tuple(i, p + 1, a.dim), 1);
        Chain c2;
        c2.alg = &a;
        c2.degree = q;
        c2.add(index_tuple(j, q + 1, a.dim), 1);
        Chain prod = shuffle_product_chains(c1, c2);
        Vector v(size);
        for (const auto& [t, cv] : prod.coeffs)
          v[tuple_index(t, a.dim)] = cv;
        gens.push_back(std::move(v));
      }
  }
  return gens;
}

namespace {

// image of a matrix, as an echelonized RowSpace of its columns
RowSpace column_space(const ExactMatrix& m)
{
  RowSpace s(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j)
    s.insert(m.col(j));
  return s;
}

} // namespace

HomologyReport homology(const StructureAlgebra& a, std::size_t n, Variant variant,
                        HarrisonPresentation presentation, std::size_t cap)
{
  power_dim(a.dim, n + 2, cap);
  HomologyReport rep;
  rep.degree = n;
  rep.variant = variant;
  rep.presentation = presentation;

  const std::size_t dim_cn = power_dim(a.dim, n + 1, cap);
  const ExactMatrix b_in = boundary_matrix(a, n + 1); // C_{n+1} -> C_n

  if (variant == Variant::hochschild) {
    rep.dim_chain_space = dim_cn;
    const std::size_t ker = n == 0 ? dim_cn : dim_cn - rank(boundary_matrix(a, n));
    rep.betti = ker - rank(b_in);
    return rep;
  }

  if (presentation == HarrisonPresentation::quotient) {
    RowSpace lower(n >= 1 ? power_dim(a.dim, n, cap) : 1);
    std::size_t dim_s_prev = 0;
    std::size_t dim_b_plus_s_prev = 0;
    if (n >= 1) {
      if (n >= 3)
        for (auto& g : shuffle_span_generators(a, n - 1, cap))
          lower.insert(std::move(g));
      dim_s_prev = lower.dim();
      const ExactMatrix b_out = boundary_matrix(a, n);
      for (std::size_t j = 0; j < b_out.cols(); ++j)
        lower.insert(b_out.col(j));
      dim_b_plus_s_prev = lower.dim();
    }
    RowSpace upper(dim_cn);
    if (n >= 2)
      for (auto& g : shuffle_span_generators(a, n, cap))
        upper.insert(std::move(g));
    const std::size_t dim_s = upper.dim();
    for (std::size_t j = 0; j < b_in.cols(); ++j)
      upper.insert(b_in.col(j));
    const std::size_t dim_b_plus_s = upper.dim();

    rep.dim_chain_space = dim_cn - dim_s;
    rep.betti = dim_cn + dim_s_prev - dim_b_plus_s_prev - dim_b_plus_s;
    return rep;
  }

  // idempotent-image presentation; degrees 0 and 1 are the full chain
  // space (no quotient effect below weight 2)
  auto image_basis = [&](std::size_t deg) -> std::vector<Vector> {
    const std::size_t size = power_dim(a.dim, deg + 1, cap);
    if (deg <= 1) {
      std::vector<Vector> basis;
      for (std::size_t i = 0; i < size; ++i) {
        Vector v(size);
        v[i] = 1;
        basis.push_back(std::move(v));
      }
      return basis;
    }
    ExactMatrix e = idempotent_tuple_matrix(eulerian_idempotent(deg, 1), a.dim, true);
    RowSpace img = column_space(e);
    return img.basis();
  };

  const std::vector<Vector> e_n = image_basis(n);
  rep.dim_chain_space = e_n.size();

  std::size_t ker;
  if (n == 0) {
    ker = e_n.size();
  } else {
    const ExactMatrix b_out = boundary_matrix(a, n);
    RowSpace img(power_dim(a.dim, n, cap));
    std::size_t r = 0;
    for (const auto& v : e_n)
      if (img.insert(b_out * v))
        ++r;
    ker = e_n.size() - img.dim();
    (void)r;
  }
  RowSpace img_in(dim_cn);
  for (const auto& v : image_basis(n + 1))
    img_in.insert(b_in * v);
  rep.betti = ker - img_in.dim();
  return rep;
}

BarrReport barr_decomposition_check(const StructureAlgebra& a, std::size_t n,
                                    std::size_t cap)
{
  if (n < 2)
    throw std::invalid_argument("barr_decomposition_check: degree must be >= 2");
  BarrReport rep;
  rep.degree = n;
  const std::size_t size = power_dim(a.dim, n + 1, cap);
  rep.dim_chain_space = size;

  RowSpace shuffles(size);
  for (auto& g : shuffle_span_generators(a, n, cap))
    shuffles.insert(std::move(g));
  rep.dim_shuffle_span = shuffles.dim();

  const ExactMatrix e = idempotent_tuple_matrix(eulerian_idempotent(n, 1), a.dim, true);
  RowSpace image = column_space(e);
  rep.dim_idempotent_image = image.dim();

  RowSpace sum(size);
  for (const auto& v : shuffles.basis())
    sum.insert(v);
  for (const auto& v : image.basis())
    sum.insert(v);
  rep.dim_sum = sum.dim();
  rep.dim_intersection = rep.dim_shuffle_span + rep.dim_idempotent_image - rep.dim_sum;
  rep.direct_sum = rep.dim_intersection == 0 && rep.dim_sum == size;

  // span(shuffles) = image(id - e^(1))
  ExactMatrix complement = ExactMatrix::identity(size) - e;
  RowSpace comp = column_space(complement);
  bool equal = comp.dim() == rep.dim_shuffle_span;
  if (equal)
    for (const auto& v : comp.basis())
      if (!shuffles.contains(v)) {
        equal = false;
        break;
      }
  rep.shuffle_equals_complement = equal;
  return rep;
}

} // namespace harrco
