#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "harrco/deform.hpp"
#include "oracles.hpp"

using namespace harrco;

namespace {

Vector unit_vec(std::size_t dim, std::size_t i)
{
  Vector v(dim);
  v[i] = 1;
  return v;
}

Vector eval2(const Cochain& f, const Vector& u, const Vector& v)
{
  const std::size_t d = f.alg->dim;
  Vector out(d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      if (sgn(u[p]) == 0 || sgn(v[q]) == 0)
        continue;
      for (std::size_t l = 0; l < d; ++l)
        out[l] += u[p] * v[q] * f.values.at(p * d + q, l);
    }
  return out;
}

Vector eval3(const Cochain& f, const Vector& u, const Vector& v, const Vector& w)
{
  const std::size_t d = f.alg->dim;
  Vector out(d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q)
      for (std::size_t r = 0; r < d; ++r) {
        if (sgn(u[p]) == 0 || sgn(v[q]) == 0 || sgn(w[r]) == 0)
          continue;
        for (std::size_t l = 0; l < d; ++l)
          out[l] += u[p] * v[q] * w[r] * f.values.at((p * d + q) * d + r, l);
      }
  return out;
}

Cochain dual_seed(const StructureAlgebra& a)
{
  Cochain f(a, 2);
  f.values.at(1 * a.dim + 1, 0) = 1; // f(x,x) = 1
  return f;
}

} // namespace

TEST_CASE("gerstenhaber_circ")
{
  StructureAlgebra a = builtin_algebra("dual_numbers");
  std::mt19937 rng(31);
  SUBCASE("arity (1,1) is composition of linear maps")
  {
    Cochain f = oracles::random_cochain(a, 1, rng);
    Cochain g = oracles::random_cochain(a, 1, rng);
    Cochain fg = gerstenhaber_circ(f, g);
    for (std::size_t i = 0; i < a.dim; ++i) {
      Vector expected(a.dim);
      Vector gi = g.eval({i});
      for (std::size_t k = 0; k < a.dim; ++k) {
        if (sgn(gi[k]) == 0)
          continue;
        Vector fk = f.eval({k});
        for (std::size_t l = 0; l < a.dim; ++l)
          expected[l] += gi[k] * fk[l];
      }
      CHECK(fg.eval({i}) == expected);
    }
  }
  SUBCASE("mu0 o mu0 is the associator and vanishes")
  {
    for (const char* name : {"dual_numbers", "truncated_poly(3)", "cross(2)"}) {
      StructureAlgebra alg = builtin_algebra(name);
      Cochain mu0 = Cochain::multiplication(alg);
      CHECK(gerstenhaber_circ(mu0, mu0).is_zero());
    }
  }
  SUBCASE("arity (2,2) signs against direct insertion evaluation")
  {
    for (int t = 0; t < 5; ++t) {
      Cochain f = oracles::random_cochain(a, 2, rng);
      Cochain g = oracles::random_cochain(a, 2, rng);
      Cochain fg = gerstenhaber_circ(f, g);
      for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
          for (std::size_t k = 0; k < a.dim; ++k) {
            Vector ei = unit_vec(a.dim, i), ej = unit_vec(a.dim, j),
                   ek = unit_vec(a.dim, k);
            Vector expected = eval2(f, eval2(g, ei, ej), ek);
            Vector second = eval2(f, ei, eval2(g, ej, ek));
            for (std::size_t l = 0; l < a.dim; ++l)
              expected[l] -= second[l];
            CHECK(fg.eval({i, j, k}) == expected);
          }
    }
  }
  SUBCASE("arity 0 refused")
  {
    CHECK_THROWS_AS(gerstenhaber_circ(Cochain(a, 0), Cochain(a, 1)),
                    std::invalid_argument);
  }
}

TEST_CASE("gerstenhaber bracket identities")
{
  std::mt19937 rng(37);
  for (const char* name : {"dual_numbers", "cross(2)"}) {
    StructureAlgebra a = builtin_algebra(name);
    CAPTURE(name);
    SUBCASE("graded antisymmetry")
    {
      for (std::size_t p : {1u, 2u, 3u})
        for (std::size_t q : {1u, 2u, 3u}) {
          Cochain f = oracles::random_cochain(a, p, rng);
          Cochain g = oracles::random_cochain(a, q, rng);
          Cochain lhs = gerstenhaber_bracket(f, g);
          Cochain rhs = gerstenhaber_bracket(g, f);
          const bool neg = ((p - 1) * (q - 1)) % 2 == 0;
          if (neg)
            lhs.values += rhs.values;
          else
            lhs.values -= rhs.values;
          CHECK(lhs.is_zero());
        }
    }
    SUBCASE("graded Jacobi identity")
    {
      auto shifted = [](const Cochain& f) { return f.arity - 1; };
      for (int t = 0; t < 3; ++t)
        for (std::size_t p : {1u, 2u})
          for (std::size_t q : {1u, 2u})
            for (std::size_t r : {1u, 2u}) {
              Cochain f = oracles::random_cochain(a, p, rng);
              Cochain g = oracles::random_cochain(a, q, rng);
              Cochain h = oracles::random_cochain(a, r, rng);
              Cochain t1 = gerstenhaber_bracket(f, gerstenhaber_bracket(g, h));
              Cochain t2 = gerstenhaber_bracket(g, gerstenhaber_bracket(h, f));
              Cochain t3 = gerstenhaber_bracket(h, gerstenhaber_bracket(f, g));
              ExactMatrix sum(t1.values.rows(), t1.values.cols());
              auto add = [&](const Cochain& c, std::size_t s1, std::size_t s2) {
                if ((s1 * s2) % 2 == 0)
                  sum += c.values;
                else
                  sum -= c.values;
              };
              add(t1, shifted(f), shifted(h));
              add(t2, shifted(g), shifted(f));
              add(t3, shifted(h), shifted(g));
              CHECK(sum.is_zero());
            }
    }
    SUBCASE("[mu0, mu0] = 0")
    {
      CHECK(gerstenhaber_bracket(Cochain::multiplication(a),
                                 Cochain::multiplication(a))
                .is_zero());
    }
    SUBCASE("[f, mu0] = -delta(f): one global sign for all arities")
    {
      Cochain mu0 = Cochain::multiplication(a);
      for (std::size_t p : {1u, 2u, 3u})
        for (int t = 0; t < 3; ++t) {
          Cochain f = oracles::random_cochain(a, p, rng);
          Cochain br = gerstenhaber_bracket(f, mu0);
          br.values += coboundary(f).values;
          CHECK(br.is_zero());
        }
    }
  }
}

TEST_CASE("associator identity Eq-style five-term check")
{
  StructureAlgebra a = builtin_algebra("dual_numbers");
  std::mt19937 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    Cochain mu = oracles::random_cochain(a, 2, rng); // not associative in general
    Cochain assoc = gerstenhaber_circ(mu, mu);       // A(a,b,c)
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j)
        for (std::size_t k = 0; k < a.dim; ++k)
          for (std::size_t l = 0; l < a.dim; ++l) {
            Vector ea = unit_vec(a.dim, i), eb = unit_vec(a.dim, j),
                   ec = unit_vec(a.dim, k), ed = unit_vec(a.dim, l);
            Vector total(a.dim);
            auto add = [&](const Vector& v, int sign) {
              for (std::size_t c = 0; c < a.dim; ++c)
                if (sign > 0)
                  total[c] += v[c];
                else
                  total[c] -= v[c];
            };
            add(eval2(mu, eval3(assoc, ea, eb, ec), ed), +1);
            add(eval2(mu, ea, eval3(assoc, eb, ec, ed)), +1);
            add(eval3(assoc, eval2(mu, ea, eb), ec, ed), -1);
            add(eval3(assoc, ea, eval2(mu, eb, ec), ed), +1);
            add(eval3(assoc, ea, eb, eval2(mu, ec, ed)), -1);
            for (const Rational& x : total)
              CHECK(sgn(x) == 0);
          }
  }
}

TEST_CASE("lift_coderivation")
{
  StructureAlgebra a = builtin_algebra("dual_numbers");
  std::mt19937 rng(43);
  const std::size_t d = a.dim;
  SUBCASE("arity-1 f at weight 2 is f(x)id + id(x)f")
  {
    Cochain f = oracles::random_cochain(a, 1, rng);
    CoderivationLift lift = lift_coderivation(f, 2);
    const ExactMatrix& m = lift.at_weight(2);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Vector in(d * d);
        in[i * d + j] = 1;
        Vector out = m * in;
        Vector expected(d * d);
        Vector fi = f.eval({i}), fj = f.eval({j});
        for (std::size_t k = 0; k < d; ++k) {
          expected[k * d + j] += fi[k];
          expected[i * d + k] += fj[k];
        }
        CHECK(out == expected);
      }
  }
  SUBCASE("arity-2 f at weight 3 inserts with alternating Koszul signs")
  {
    Cochain f = oracles::random_cochain(a, 2, rng);
    CoderivationLift lift = lift_coderivation(f, 3);
    const ExactMatrix& m = lift.at_weight(3);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          Vector in(d * d * d);
          in[(i * d + j) * d + k] = 1;
          Vector out = m * in;
          Vector expected(d * d);
          Vector fij = f.eval({i, j}), fjk = f.eval({j, k});
          for (std::size_t c = 0; c < d; ++c) {
            expected[c * d + k] += fij[c];
            expected[i * d + c] -= fjk[c]; // (-1)^{(k-1)(i-1)} at position 2
          }
          CHECK(out == expected);
        }
  }
  SUBCASE("zero cochain lifts to zero at every weight")
  {
    CoderivationLift lift = lift_coderivation(Cochain(a, 2), 4);
    for (std::size_t w = 2; w <= 4; ++w)
      CHECK(lift.at_weight(w).is_zero());
  }
  SUBCASE("max_weight below arity is refused")
  {
    CHECK_THROWS_AS(lift_coderivation(Cochain(a, 2), 1), std::invalid_argument);
  }
}

TEST_CASE("harrison bracket closure and derivation law")
{
  StructureAlgebra a = builtin_algebra("dual_numbers");
  std::mt19937 rng(47);
  SUBCASE("random symmetric pairs")
  {
    for (int t = 0; t < 10; ++t) {
      Cochain f = oracles::random_symmetric_cochain(a, rng);
      Cochain g = oracles::random_symmetric_cochain(a, rng);
      ClosureReport rep = harrison_bracket_closure_check(f, g, 4);
      CHECK(rep.bracket_harrison);
      CHECK(rep.derivation_law);
    }
  }
  SUBCASE("arity-1 with arity-2 pairs")
  {
    for (int t = 0; t < 5; ++t) {
      Cochain f = oracles::random_cochain(a, 1, rng); // arity 1 is always Harrison
      Cochain g = oracles::random_symmetric_cochain(a, rng);
      ClosureReport rep = harrison_bracket_closure_check(f, g, 4);
      CHECK(rep.bracket_harrison);
      CHECK(rep.derivation_law);
    }
  }
  SUBCASE("f = g = mu0")
  {
    Cochain mu0 = Cochain::multiplication(a);
    ClosureReport rep = harrison_bracket_closure_check(mu0, mu0, 3);
    CHECK(rep.bracket_harrison);
    CHECK(rep.derivation_law);
  }
  SUBCASE("precondition enforced")
  {
    Cochain f(a, 2);
    f.values.at(0 * 2 + 1, 0) = 1;
    f.values.at(1 * 2 + 0, 0) = -1; // antisymmetric, not Harrison
    CHECK_THROWS_AS(
        harrison_bracket_closure_check(f, oracles::random_symmetric_cochain(a, rng), 3),
        std::invalid_argument);
  }
}

TEST_CASE("order associator")
{
  StructureAlgebra a = builtin_algebra("dual_numbers");
  std::mt19937 rng(53);
  SUBCASE("A_0 vanishes for valid algebras")
  {
    for (const char* name : {"dual_numbers", "cross(2)"}) {
      StructureAlgebra alg = builtin_algebra(name);
      CHECK(order_associator(StarTruncation::undeformed(alg), 0).is_zero());
    }
  }
  SUBCASE("A_1 = -delta(mu_1)")
  {
    for (int t = 0; t < 5; ++t) {
      StarTruncation s = StarTruncation::undeformed(a);
      s.terms.push_back(oracles::random_cochain(a, 2, rng));
      Cochain a1 = order_associator(s, 1);
      a1.values += coboundary(s.terms[1]).values;
      CHECK(a1.is_zero());
    }
  }
  SUBCASE("zero higher terms give zero associators")
  {
    StarTruncation s = StarTruncation::undeformed(a);
    s.terms.push_back(Cochain(a, 2));
    s.terms.push_back(Cochain(a, 2));
    for (std::size_t n = 1; n <= 2; ++n)
      CHECK(order_associator(s, n).is_zero());
    CHECK_THROWS_AS(order_associator(s, 3), std::invalid_argument);
  }
}

TEST_CASE("obstruction reports")
{
  StructureAlgebra a = builtin_algebra("dual_numbers");
  SUBCASE("r = 0: empty middle sum, extension exists")
  {
    ObstructionReport rep = obstruction(StarTruncation::undeformed(a), 0);
    CHECK(rep.order == 1);
    CHECK(rep.obstruction.is_zero());
    CHECK(rep.is_cocycle);
    CHECK(rep.harrison);
    REQUIRE(rep.extension.has_value());
    CHECK_FALSE(rep.cohomology_class_nonzero);
  }
  SUBCASE("dual-numbers seed: A'_2 is a Harrison cocycle and extension proceeds")
  {
    StarTruncation s = StarTruncation::undeformed(a);
    s.terms.push_back(dual_seed(a));
    ObstructionReport rep = obstruction(s, 1);
    CHECK(rep.order == 2);
    CHECK(rep.is_cocycle);
    CHECK(rep.harrison);
    REQUIRE(rep.extension.has_value());
    CHECK(coboundary(*rep.extension) == rep.obstruction);
    CHECK(rep.extension->is_symmetric());
  }
  SUBCASE("non-associative truncation is rejected with a witness")
  {
    StarTruncation s = StarTruncation::undeformed(a);
    Cochain bad(a, 2);
    bad.values.at(0 * 2 + 1, 0) = 1; // mu_1(1,x) = 1 is not a cocycle
    s.terms.push_back(bad);
    CHECK(!coboundary(bad).is_zero());
    try {
      obstruction(s, 1);
      FAIL("expected NotAssociativeError");
    } catch (const NotAssociativeError& e) {
      CHECK(e.failing_order == 1);
      CHECK(e.witness_triple.size() == 3);
    }
  }
  SUBCASE("harrison flag mirrors is_harrison of the obstruction cochain")
  {
    std::mt19937 rng(59);
    StarTruncation s = StarTruncation::undeformed(a);
    s.terms.push_back(dual_seed(a));
    ObstructionReport rep = obstruction(s, 1, DeformMode::associative);
    CHECK(rep.harrison == is_harrison(rep.obstruction).harrison);
    (void)rng;
  }
}

TEST_CASE("maurer-cartan check")
{
  StructureAlgebra a = builtin_algebra("dual_numbers");
  SUBCASE("undeformed product vanishes at every order")
  {
    MaurerCartanReport rep = maurer_cartan_check(StarTruncation::undeformed(a));
    CHECK(rep.all_vanish());
    CHECK(rep.consistent_with_associators);
  }
  SUBCASE("first failure order matches the associator")
  {
    StarTruncation s = StarTruncation::undeformed(a);
    Cochain bad(a, 2);
    bad.values.at(0 * 2 + 1, 0) = 1; // mu_1(1,x) = 1
    s.terms.push_back(bad);
    MaurerCartanReport rep = maurer_cartan_check(s);
    CHECK(rep.order_vanishes[0]);
    CHECK_FALSE(rep.order_vanishes[1]);
    CHECK(rep.consistent_with_associators);
  }
}

TEST_CASE("extend_deformation")
{
  StructureAlgebra a = builtin_algebra("dual_numbers");
  std::mt19937 rng(61);
  SUBCASE("zero seed gives the trivial deformation")
  {
    auto result = extend_deformation(a, Cochain(a, 2), 3);
    REQUIRE(std::holds_alternative<StarTruncation>(result));
    const StarTruncation& s = std::get<StarTruncation>(result);
    CHECK(s.order() == 3);
    for (std::size_t n = 1; n <= 3; ++n)
      CHECK(s.terms[n].is_zero());
  }
  SUBCASE("dual-numbers seed to order 4, cross-checked by the associativity oracle")
  {
    auto result = extend_deformation(a, dual_seed(a), 4);
    REQUIRE(std::holds_alternative<StarTruncation>(result));
    const StarTruncation& s = std::get<StarTruncation>(result);
    CHECK(s.order() == 4);
    for (std::size_t n = 0; n <= 4; ++n) {
      CHECK(s.terms[n].is_symmetric());
      CHECK(order_associator(s, n).is_zero());
      for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
          for (std::size_t k = 0; k < a.dim; ++k)
            for (const Rational& x : oracles::star_associator_oracle(s, n, i, j, k))
              CHECK(sgn(x) == 0);
    }
    MaurerCartanReport mc = maurer_cartan_check(s);
    CHECK(mc.all_vanish());
    CHECK(mc.consistent_with_associators);
  }
  SUBCASE("exact seed delta(g) still extends")
  {
    Cochain g = oracles::random_cochain(a, 1, rng);
    Cochain seed = coboundary(g);
    REQUIRE(coboundary(seed).is_zero());
    REQUIRE(is_harrison(seed).harrison);
    auto result = extend_deformation(a, seed, 2);
    REQUIRE(std::holds_alternative<StarTruncation>(result));
    MaurerCartanReport mc = maurer_cartan_check(std::get<StarTruncation>(result));
    CHECK(mc.all_vanish());
  }
  SUBCASE("preconditions")
  {
    Cochain bad(a, 2);
    bad.values.at(0 * 2 + 1, 0) = 1; // f(1,x) = 1 is not a cocycle
    CHECK_THROWS_AS(extend_deformation(a, bad, 2), std::invalid_argument);
    CHECK_THROWS_AS(extend_deformation(a, Cochain(a, 3), 2), std::invalid_argument);
  }
}
