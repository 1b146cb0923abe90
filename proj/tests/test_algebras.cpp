#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "harrco/algebras.hpp"

using namespace harrco;

namespace {

Vector unit_vec(std::size_t dim, std::size_t i)
{
  Vector v(dim);
  v[i] = 1;
  return v;
}

bool all_valid(const StructureAlgebra& a) { return validate(a).empty(); }

} // namespace

TEST_CASE("dual numbers validate")
{
  StructureAlgebra a = builtin_algebra("dual_numbers");
  CHECK(a.dim == 2);
  CHECK(a.basis_names == std::vector<std::string>{"1", "x"});
  CHECK(all_valid(a));
  // defining relation x * x = 0
  Vector xx = a.multiply(unit_vec(2, 1), unit_vec(2, 1));
  CHECK(sgn(xx[0]) == 0);
  CHECK(sgn(xx[1]) == 0);
}

TEST_CASE("idempotent generator x^2 = x is a valid algebra")
{
  StructureAlgebra a(2, {"1", "x"}, 0);
  a.c(0, 0, 0) = 1;
  a.c(0, 1, 1) = 1;
  a.c(1, 0, 1) = 1;
  a.c(1, 1, 1) = 1; // x^2 = x, i.e. QQ x QQ in disguise
  CHECK(all_valid(a));
}

TEST_CASE("group algebra of Z/2 (x^2 = 1) is a valid algebra")
{
  StructureAlgebra a(2, {"1", "x"}, 0);
  a.c(0, 0, 0) = 1;
  a.c(0, 1, 1) = 1;
  a.c(1, 0, 1) = 1;
  a.c(1, 1, 0) = 1; // x^2 = 1
  CHECK(all_valid(a));
}

TEST_CASE("validate pinpoints broken invariants")
{
  SUBCASE("broken commutativity")
  {
    StructureAlgebra a = builtin_algebra("dual_numbers");
    a.c(0, 1, 1) = 2; // 1 * x = 2x but x * 1 = x
    auto issues = validate(a);
    REQUIRE_FALSE(issues.empty());
    bool found = false;
    for (const auto& issue : issues)
      found = found || issue.kind == "commutativity" || issue.kind == "unit";
    CHECK(found);
  }
  SUBCASE("broken associativity")
  {
    StructureAlgebra a = builtin_algebra("truncated_poly(3)");
    a.c(1, 2, 0) = 1; // x * x^2 = 1 while x * x = x^2 still
    a.c(2, 1, 0) = 1;
    auto issues = validate(a);
    bool found = false;
    for (const auto& issue : issues)
      found = found || issue.kind == "associativity";
    CHECK(found);
  }
  SUBCASE("broken unit law")
  {
    StructureAlgebra a = builtin_algebra("dual_numbers");
    a.c(0, 0, 0) = 0;
    auto issues = validate(a);
    bool found = false;
    for (const auto& issue : issues)
      found = found || issue.kind == "unit";
    CHECK(found);
  }
}

TEST_CASE("multiply follows the structure constants")
{
  StructureAlgebra a = builtin_algebra("truncated_poly(3)");
  CHECK(a.multiply(unit_vec(3, 0), unit_vec(3, 2)) == unit_vec(3, 2));
  CHECK(a.multiply(unit_vec(3, 1), unit_vec(3, 1)) == unit_vec(3, 2)); // x*x = x^2
  Vector zero(3);
  CHECK(a.multiply(unit_vec(3, 1), unit_vec(3, 2)) == zero); // x*x^2 = 0
  CHECK_THROWS_AS(a.multiply(Vector(2), Vector(3)), std::invalid_argument);
}

TEST_CASE("builtins")
{
  CHECK(builtin_algebra("truncated_poly(3)").dim == 3);
  StructureAlgebra c2 = builtin_algebra("cross(2)");
  CHECK(c2.dim == 3);
  CHECK(c2.basis_names == std::vector<std::string>{"1", "x", "y"});
  Vector zero(3);
  CHECK(c2.multiply(unit_vec(3, 1), unit_vec(3, 1)) == zero);
  CHECK(c2.multiply(unit_vec(3, 1), unit_vec(3, 2)) == zero);
  CHECK(c2.multiply(unit_vec(3, 2), unit_vec(3, 2)) == zero);
  CHECK(builtin_algebra("cross(3)").dim == 5);

  CHECK_THROWS_AS(builtin_algebra("nope"), std::invalid_argument);
  CHECK_THROWS_AS(builtin_algebra("truncated_poly(1)"), std::invalid_argument);
  CHECK_THROWS_AS(builtin_algebra("cross(1)"), std::invalid_argument);
}

TEST_CASE("all builtins validate and multiply associatively/commutatively")
{
  for (const char* name : {"dual_numbers", "truncated_poly(2)", "truncated_poly(4)",
                           "cross(2)", "cross(3)"}) {
    StructureAlgebra a = builtin_algebra(name);
    CAPTURE(name);
    CHECK(all_valid(a));
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j) {
        CHECK(a.multiply(unit_vec(a.dim, i), unit_vec(a.dim, j)) ==
              a.multiply(unit_vec(a.dim, j), unit_vec(a.dim, i)));
        for (std::size_t k = 0; k < a.dim; ++k) {
          Vector lhs = a.multiply(a.multiply(unit_vec(a.dim, i), unit_vec(a.dim, j)),
                                  unit_vec(a.dim, k));
          Vector rhs = a.multiply(unit_vec(a.dim, i),
                                  a.multiply(unit_vec(a.dim, j), unit_vec(a.dim, k)));
          CHECK(lhs == rhs);
        }
      }
  }
}

TEST_CASE("regular module is a valid symmetric module")
{
  for (const char* name : {"dual_numbers", "cross(2)"}) {
    StructureAlgebra a = builtin_algebra(name);
    SymmetricModule m = SymmetricModule::regular(a);
    CHECK(m.dim == a.dim);
    CHECK(validate_module(a, m).empty());
    // action agrees with multiplication
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j)
        CHECK(m.act(unit_vec(a.dim, i), unit_vec(a.dim, j)) ==
              a.multiply(unit_vec(a.dim, i), unit_vec(a.dim, j)));
  }
  SUBCASE("broken representation law is reported")
  {
    StructureAlgebra a = builtin_algebra("dual_numbers");
    SymmetricModule m = SymmetricModule::regular(a);
    m.action[1].at(0, 0) = 1;
    CHECK_FALSE(validate_module(a, m).empty());
  }
}

TEST_CASE("basis_index")
{
  StructureAlgebra a = builtin_algebra("cross(2)");
  CHECK(a.basis_index("y") == 2);
  CHECK_THROWS_AS(a.basis_index("z"), std::invalid_argument);
}
