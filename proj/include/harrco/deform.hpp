#ifndef HARRCO_DEFORM_HPP
#define HARRCO_DEFORM_HPP

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "harrco/complexes.hpp"

namespace harrco {

enum class DeformMode { commutative, associative };

// Formal product mu_0 + lambda mu_1 + ... + lambda^N mu_N, truncated.
struct StarTruncation {
  const StructureAlgebra* alg = nullptr;
  std::vector<Cochain> terms; // terms[0] = algebra multiplication

  std::size_t order() const { return terms.size() - 1; }

  static StarTruncation undeformed(const StructureAlgebra& a);
};

// Insertion composition:
// (f o g)(a_1..a_{p+q-1}) =
//   sum_{i=1..p} (-1)^{(i-1)(q-1)} f(a_1,..,g(a_i..a_{i+q-1}),..)
// Both cochains must take values in the algebra itself.
Cochain gerstenhaber_circ(const Cochain& f, const Cochain& g);

// [f,g] = f o g - (-1)^{(p-1)(q-1)} g o f
Cochain gerstenhaber_bracket(const Cochain& f, const Cochain& g);

// Weight-graded coderivation lift of an arity-k cochain f : A^k -> A to
// tensor powers of A, with Koszul signs:
//   dbar|_{A^n} = sum_i (-1)^{(k-1)(i-1)} id^{i-1} (x) f (x) id^{n-k-i+1}
// Weights below k map to zero.
struct CoderivationLift {
  std::size_t arity = 0;
  std::size_t max_weight = 0;
  std::vector<ExactMatrix> by_weight; // index w-k maps d^w -> d^{w-k+1}

  const ExactMatrix& at_weight(std::size_t w) const;
};

CoderivationLift lift_coderivation(const Cochain& f, std::size_t max_weight);

// Signed shuffle product on pure tensor coordinates (no a_0 slot):
// vector over d^p tensor vector over d^q -> vector over d^{p+q}.
Vector tensor_shuffle(const StructureAlgebra& a, std::size_t p, const Vector& u,
                      std::size_t q, const Vector& v);

struct ClosureReport {
  bool bracket_harrison = false;
  HarrisonWitness witness;       // when the bracket fails to be Harrison
  bool derivation_law = false;   // lift of f acts as a graded derivation of the
                                 // shuffle product up to the checked weight
};

// Requires is_harrison(f) and is_harrison(g). Checks that [f,g] is
// Harrison and that the coderivation lift of f satisfies the graded
// Leibniz rule for the shuffle product at weights <= weight_bound.
ClosureReport harrison_bracket_closure_check(const Cochain& f, const Cochain& g,
                                             std::size_t weight_bound);

// A_n = sum_{k=0..n} (mu_k(mu_{n-k}(.,.),.) - mu_k(., mu_{n-k}(.,.)))
Cochain order_associator(const StarTruncation& s, std::size_t n);

struct ObstructionReport {
  std::size_t order = 0; // r+1
  Cochain obstruction;   // A'_{r+1}
  bool is_cocycle = false;
  bool harrison = false;
  std::optional<Cochain> extension; // mu_{r+1} with delta(mu_{r+1}) = A'_{r+1}
  bool cohomology_class_nonzero = false;
};

struct NotAssociativeError : std::runtime_error {
  std::size_t failing_order;
  std::vector<std::size_t> witness_triple;
  NotAssociativeError(std::size_t order, std::vector<std::size_t> triple);
};

// Obstruction to promoting associativity from order r to r+1. Throws
// NotAssociativeError when the truncation is not associative to order r.
// In commutative mode the extension is searched among symmetric
// 2-cochains (obstruction class read in Harr^3), otherwise among all
// 2-cochains (HH^3).
ObstructionReport obstruction(const StarTruncation& s, std::size_t r,
                              DeformMode mode = DeformMode::commutative);

struct MaurerCartanReport {
  std::vector<bool> order_vanishes;       // index n <= N
  bool consistent_with_associators = false; // each order equals A_n
  bool all_vanish() const;
};

// Expands (1/2)[mu_0 + mu_*, mu_0 + mu_*]_G order by order through
// lambda^N and checks vanishing; cross-checked against order_associator.
MaurerCartanReport maurer_cartan_check(const StarTruncation& s);

// Order-by-order extension of a symmetric 2-cocycle seed to a star
// truncation of the target order, solving delta(mu_{r+1}) = A'_{r+1} at
// each step. Returns the blocking ObstructionReport when a class does
// not vanish. Preconditions (cocycle seed; symmetric in commutative
// mode) are enforced with std::invalid_argument.
std::variant<StarTruncation, ObstructionReport>
extend_deformation(const StructureAlgebra& a, const Cochain& seed,
                   std::size_t target_order, DeformMode mode = DeformMode::commutative);

} // namespace harrco

#endif
