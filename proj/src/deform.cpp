#include "harrco/deform.hpp"

#include <limits>

namespace harrco {

namespace {

void require_algebra_valued(const Cochain& f, const char* who)
{
  if (f.module.dim != f.alg->dim)
    throw std::invalid_argument(std::string(who) + ": cochain must take values in A");
}

std::size_t full_dim(std::size_t d, std::size_t n)
{
  return power_dim(d, n, std::numeric_limits<std::size_t>::max());
}

} // namespace

StarTruncation StarTruncation::undeformed(const StructureAlgebra& a)
{
  StarTruncation s;
  s.alg = &a;
  s.terms.push_back(Cochain::multiplication(a));
  return s;
}

Cochain gerstenhaber_circ(const Cochain& f, const Cochain& g)
{
  if (f.arity < 1 || g.arity < 1)
    throw std::invalid_argument("gerstenhaber_circ: arity must be >= 1");
  require_algebra_valued(f, "gerstenhaber_circ");
  require_algebra_valued(g, "gerstenhaber_circ");
  const StructureAlgebra& a = *f.alg;
  const std::size_t p = f.arity, q = g.arity;
  Cochain out(a, p + q - 1);
  const std::size_t rows = out.values.rows();
  for (std::size_t row = 0; row < rows; ++row) {
    std::vector<std::size_t> t = index_tuple(row, p + q - 1, a.dim);
    Vector acc(a.dim);
    for (std::size_t i = 0; i < p; ++i) {
      std::vector<std::size_t> inner(t.begin() + i, t.begin() + i + q);
      Vector g_val = g.eval(inner);
      std::vector<std::size_t> args;
      args.reserve(p);
      args.insert(args.end(), t.begin(), t.begin() + i);
      args.push_back(0); // placeholder slot
      args.insert(args.end(), t.begin() + i + q, t.end());
      Vector w = f.eval_with_slot(args, i, g_val);
      const bool neg = (i * (q - 1)) % 2 == 1;
      for (std::size_t c = 0; c < a.dim; ++c)
        if (neg)
          acc[c] -= w[c];
        else
          acc[c] += w[c];
    }
    for (std::size_t c = 0; c < a.dim; ++c)
      out.values.at(row, c) = acc[c];
  }
  return out;
}

Cochain gerstenhaber_bracket(const Cochain& f, const Cochain& g)
{
  Cochain fg = gerstenhaber_circ(f, g);
  Cochain gf = gerstenhaber_circ(g, f);
  const bool neg = ((f.arity - 1) * (g.arity - 1)) % 2 == 1;
  if (neg)
    fg.values += gf.values;
  else
    fg.values -= gf.values;
  return fg;
}

const ExactMatrix& CoderivationLift::at_weight(std::size_t w) const
{
  if (w < arity || w > max_weight)
    throw std::invalid_argument("coderivation lift: weight out of range");
  return by_weight[w - arity];
}

CoderivationLift lift_coderivation(const Cochain& f, std::size_t max_weight)
{
  require_algebra_valued(f, "lift_coderivation");
  const std::size_t k = f.arity;
  if (k < 1)
    throw std::invalid_argument("lift_coderivation: arity must be >= 1");
  if (max_weight < k)
    throw std::invalid_argument("lift_coderivation: max_weight below arity");
  const StructureAlgebra& a = *f.alg;
  CoderivationLift lift;
  lift.arity = k;
  lift.max_weight = max_weight;
  for (std::size_t w = k; w <= max_weight; ++w) {
    const std::size_t src = full_dim(a.dim, w);
    const std::size_t dst = full_dim(a.dim, w - k + 1);
    ExactMatrix m(dst, src);
    for (std::size_t col = 0; col < src; ++col) {
      std::vector<std::size_t> t = index_tuple(col, w, a.dim);
      for (std::size_t i = 0; i + k <= w; ++i) {
        const bool neg = ((k - 1) * i) % 2 == 1;
        std::vector<std::size_t> inner(t.begin() + i, t.begin() + i + k);
        Vector val = f.eval(inner);
        for (std::size_t c = 0; c < a.dim; ++c) {
          if (sgn(val[c]) == 0)
            continue;
          std::vector<std::size_t> u;
          u.reserve(w - k + 1);
          u.insert(u.end(), t.begin(), t.begin() + i);
          u.push_back(c);
          u.insert(u.end(), t.begin() + i + k, t.end());
          if (neg)
            m.at(tuple_index(u, a.dim), col) -= val[c];
          else
            m.at(tuple_index(u, a.dim), col) += val[c];
        }
      }
    }
    lift.by_weight.push_back(std::move(m));
  }
  return lift;
}

Vector tensor_shuffle(const StructureAlgebra& a, std::size_t p, const Vector& u,
                      std::size_t q, const Vector& v)
{
  const std::size_t d = a.dim;
  Vector out(full_dim(d, p + q));
  if (p == 0 || q == 0) {
    // one factor is a scalar
    const Vector& body = p == 0 ? v : u;
    const Vector& scalar = p == 0 ? u : v;
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = scalar[0] * body[i];
    return out;
  }
  const std::vector<Permutation> shuffles = multi_shuffles({p, q});
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (sgn(u[i]) == 0)
      continue;
    std::vector<std::size_t> s = index_tuple(i, p, d);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (sgn(v[j]) == 0)
        continue;
      std::vector<std::size_t> t = index_tuple(j, q, d);
      std::vector<std::size_t> body;
      body.reserve(p + q);
      body.insert(body.end(), s.begin(), s.end());
      body.insert(body.end(), t.begin(), t.end());
      const Rational base = u[i] * v[j];
      for (const Permutation& sigma : shuffles) {
        std::vector<std::size_t> w(p + q);
        for (std::size_t b = 0; b < p + q; ++b)
          w[sigma.image(b)] = body[b];
        if (sigma.sign() > 0)
          out[tuple_index(w, d)] += base;
        else
          out[tuple_index(w, d)] -= base;
      }
    }
  }
  return out;
}

ClosureReport harrison_bracket_closure_check(const Cochain& f, const Cochain& g,
                                             std::size_t weight_bound)
{
  HarrisonWitness wf = is_harrison(f);
  HarrisonWitness wg = is_harrison(g);
  if (!wf.harrison || !wg.harrison)
    throw std::invalid_argument("harrison_bracket_closure_check: inputs must be Harrison");

  ClosureReport rep;
  Cochain bracket = gerstenhaber_bracket(f, g);
  rep.witness = is_harrison(bracket);
  rep.bracket_harrison = rep.witness.harrison;

  const StructureAlgebra& a = *f.alg;
  const std::size_t k = f.arity;
  rep.derivation_law = true;
  if (weight_bound < k) {
    return rep;
  }
  const CoderivationLift lift = lift_coderivation(f, weight_bound);
  auto apply = [&](std::size_t w, const Vector& x) -> Vector {
    if (w < k)
      return Vector(full_dim(a.dim, w >= k ? w - k + 1 : 0)); // zero scalar-ish
    return lift.at_weight(w) * x;
  };
  for (std::size_t p = 1; p < weight_bound && rep.derivation_law; ++p)
    for (std::size_t q = 1; p + q <= weight_bound && rep.derivation_law; ++q) {
      const std::size_t dp = full_dim(a.dim, p), dq = full_dim(a.dim, q);
      for (std::size_t i = 0; i < dp && rep.derivation_law; ++i)
        for (std::size_t j = 0; j < dq && rep.derivation_law; ++j) {
          Vector u(dp), v(dq);
          u[i] = 1;
          v[j] = 1;
          Vector prod = tensor_shuffle(a, p, u, q, v);
          Vector lhs = apply(p + q, prod);
          Vector rhs(lhs.size());
          if (p >= k) {
            Vector du = apply(p, u);
            Vector term = tensor_shuffle(a, p - k + 1, du, q, v);
            for (std::size_t c = 0; c < rhs.size(); ++c)
              rhs[c] += term[c];
          }
          if (q >= k) {
            Vector dv = apply(q, v);
            Vector term = tensor_shuffle(a, p, u, q - k + 1, dv);
            const bool neg = ((k - 1) * p) % 2 == 1; // Koszul sign past u
            for (std::size_t c = 0; c < rhs.size(); ++c)
              if (neg)
                rhs[c] -= term[c];
              else
                rhs[c] += term[c];
          }
          if (lhs != rhs)
            rep.derivation_law = false;
        }
    }
  return rep;
}

Cochain order_associator(const StarTruncation& s, std::size_t n)
{
  if (n > s.order())
    throw std::invalid_argument("order_associator: order beyond truncation");
  const StructureAlgebra& a = *s.alg;
  Cochain out(a, 3);
  for (std::size_t k = 0; k <= n; ++k)
    out.values += gerstenhaber_circ(s.terms[k], s.terms[n - k]).values;
  return out;
}

NotAssociativeError::NotAssociativeError(std::size_t order,
                                         std::vector<std::size_t> triple)
    : std::runtime_error("star truncation not associative at order " +
                         std::to_string(order)),
      failing_order(order), witness_triple(std::move(triple))
{
}

namespace {

// first basis triple where an arity-3 cochain is nonzero
std::vector<std::size_t> first_nonzero_triple(const Cochain& f)
{
  for (std::size_t row = 0; row < f.values.rows(); ++row)
    for (std::size_t c = 0; c < f.values.cols(); ++c)
      if (sgn(f.values.at(row, c)) != 0)
        return index_tuple(row, 3, f.alg->dim);
  return {};
}

// columns spanning the symmetric arity-2 cochains, flattened like
// Cochain::vec
ExactMatrix symmetric_pair_basis(const StructureAlgebra& a)
{
  const std::size_t d = a.dim;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      pairs.emplace_back(i, j);
  ExactMatrix b(d * d * d, pairs.size() * d);
  for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
    auto [i, j] = pairs[pi];
    for (std::size_t m = 0; m < d; ++m) {
      b.at((i * d + j) * d + m, pi * d + m) = 1;
      if (i != j)
        b.at((j * d + i) * d + m, pi * d + m) = 1;
    }
  }
  return b;
}

} // namespace

ObstructionReport obstruction(const StarTruncation& s, std::size_t r, DeformMode mode)
{
  if (r > s.order())
    throw std::invalid_argument("obstruction: order beyond truncation");
  const StructureAlgebra& a = *s.alg;
  for (std::size_t k = 0; k <= r; ++k) {
    Cochain an = order_associator(s, k);
    if (!an.is_zero())
      throw NotAssociativeError(k, first_nonzero_triple(an));
  }

  ObstructionReport rep;
  rep.order = r + 1;
  Cochain aprime(a, 3);
  for (std::size_t k = 1; k <= r; ++k)
    aprime.values += gerstenhaber_circ(s.terms[k], s.terms[r + 1 - k]).values;
  rep.is_cocycle = coboundary(aprime).is_zero();
  rep.harrison = is_harrison(aprime).harrison;
  rep.obstruction = aprime;

  const ExactMatrix delta = coboundary_matrix(a, SymmetricModule::regular(a), 2);
  const Vector target = aprime.vec();
  if (mode == DeformMode::commutative) {
    const ExactMatrix basis = symmetric_pair_basis(a);
    if (auto y = solve(delta * basis, target)) {
      rep.extension = Cochain::from_vec(a, SymmetricModule::regular(a), 2, basis * *y);
    }
  } else {
    if (auto x = solve(delta, target))
      rep.extension = Cochain::from_vec(a, SymmetricModule::regular(a), 2, *x);
  }
  rep.cohomology_class_nonzero = !rep.extension.has_value();
  return rep;
}

bool MaurerCartanReport::all_vanish() const
{
  for (bool v : order_vanishes)
    if (!v)
      return false;
  return true;
}

MaurerCartanReport maurer_cartan_check(const StarTruncation& s)
{
  MaurerCartanReport rep;
  rep.consistent_with_associators = true;
  const Rational half(1, 2);
  for (std::size_t n = 0; n <= s.order(); ++n) {
    Cochain g(*s.alg, 3);
    for (std::size_t k = 0; k <= n; ++k)
      g.values += gerstenhaber_bracket(s.terms[k], s.terms[n - k]).values;
    for (std::size_t i = 0; i < g.values.rows(); ++i)
      for (std::size_t j = 0; j < g.values.cols(); ++j)
        g.values.at(i, j) *= half;
    rep.order_vanishes.push_back(g.is_zero());
    if (!(g == order_associator(s, n)))
      rep.consistent_with_associators = false;
  }
  return rep;
}

std::variant<StarTruncation, ObstructionReport>
extend_deformation(const StructureAlgebra& a, const Cochain& seed,
                   std::size_t target_order, DeformMode mode)
{
  if (seed.arity != 2)
    throw std::invalid_argument("extend_deformation: seed must have arity 2");
  require_algebra_valued(seed, "extend_deformation");
  if (!coboundary(seed).is_zero())
    throw std::invalid_argument("extend_deformation: seed is not a 2-cocycle");
  if (mode == DeformMode::commutative && !is_harrison(seed).harrison)
    throw std::invalid_argument("extend_deformation: seed is not symmetric");
  if (target_order < 1)
    throw std::invalid_argument("extend_deformation: target order must be >= 1");

  StarTruncation s = StarTruncation::undeformed(a);
  s.terms.push_back(seed);
  for (std::size_t r = 1; r < target_order; ++r) {
    ObstructionReport rep = obstruction(s, r, mode);
    if (!rep.extension)
      return rep;
    s.terms.push_back(*rep.extension);
  }
  return s;
}

} // namespace harrco
