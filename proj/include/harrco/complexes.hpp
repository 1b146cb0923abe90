#ifndef HARRCO_COMPLEXES_HPP
#define HARRCO_COMPLEXES_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "harrco/algebras.hpp"
#include "harrco/exactla.hpp"
#include "harrco/symgrp.hpp"

namespace harrco {

// Chain spaces grow as dim^(n+1); computations beyond the cap are
// refused with this error.
struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultCap = 4096;

// Lexicographic index of a basis tuple, first slot most significant.
std::size_t tuple_index(const std::vector<std::size_t>& t, std::size_t d);
std::vector<std::size_t> index_tuple(std::size_t idx, std::size_t len, std::size_t d);
std::size_t power_dim(std::size_t d, std::size_t n); // d^n, throws ResourceCapError past cap
std::size_t power_dim(std::size_t d, std::size_t n, std::size_t cap);

enum class Variant { hochschild, harrison };
enum class HarrisonPresentation { quotient, idempotent_image };

// Element of C_n(A) = A (x) A^{(x)n}, stored sparsely over basis
// (n+1)-tuples.
struct Chain {
  const StructureAlgebra* alg = nullptr;
  std::size_t degree = 0;
  std::map<std::vector<std::size_t>, Rational> coeffs;

  void add(const std::vector<std::size_t>& tuple, const Rational& c);
  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const Chain&) const;
};

// n-multilinear map A^n -> M as an exact matrix: row = basis tuple
// (lexicographic), column = module basis index.
struct Cochain {
  const StructureAlgebra* alg = nullptr;
  SymmetricModule module;
  std::size_t arity = 0;
  ExactMatrix values; // dim^arity rows, module.dim cols

  Cochain() = default;
  Cochain(const StructureAlgebra& a, std::size_t arity_);               // regular module
  Cochain(const StructureAlgebra& a, SymmetricModule m, std::size_t arity_);

  // the multiplication 2-cochain of the algebra itself
  static Cochain multiplication(const StructureAlgebra& a);

  Vector eval(const std::vector<std::size_t>& tuple) const;
  // value with one argument slot replaced by a general algebra element
  Vector eval_with_slot(const std::vector<std::size_t>& tuple, std::size_t slot,
                        const Vector& element) const;

  Vector vec() const; // (tuple, module) flattened, tuple major
  static Cochain from_vec(const StructureAlgebra& a, const SymmetricModule& m,
                          std::size_t arity, const Vector& v);

  bool is_zero() const { return values.is_zero(); }
  bool is_symmetric() const; // arity-2 only
  bool operator==(const Cochain& other) const;
};

// b(a0,...,an) = sum_{i<n} (-1)^i (a0,...,a_i a_{i+1},...,a_n)
//              + (-1)^n (a_n a_0, a_1, ..., a_{n-1})
Chain chain_boundary(const Chain& c);

// matrix of the boundary C_n -> C_{n-1} over basis chains
ExactMatrix boundary_matrix(const StructureAlgebra& a, std::size_t n);

// signed shuffle product of chains
Chain shuffle_product_chains(const Chain& c1, const Chain& c2);

// (delta f)(a_1..a_{n+1}) = a_1 f(a_2..a_{n+1})
//   + sum_i (-1)^i f(a_1,..,a_i a_{i+1},..,a_{n+1})
//   + (-1)^{n+1} f(a_1..a_n) a_{n+1}
Cochain coboundary(const Cochain& f);

// matrix of delta from arity-n to arity-(n+1) cochains on flattened
// coordinates
ExactMatrix coboundary_matrix(const StructureAlgebra& a, const SymmetricModule& m,
                              std::size_t n);

// f |-> f o e_n^(1): precompose the arguments with the first eulerian
// idempotent. Idempotent; fixed points are exactly Harrison cochains.
Cochain harrison_project(const Cochain& f);

// matrix of the eulerian-idempotent action on the tuple space (A^n)
ExactMatrix idempotent_tuple_matrix(const GroupAlgebraElement& e, std::size_t d,
                                    bool chain_slot0); // chain_slot0: extra fixed slot

struct HarrisonWitness {
  bool harrison = true;
  std::size_t split_p = 0;                 // witness block split (p, n-p)
  std::vector<std::size_t> tuple;          // witness basis tuple
};

// True iff f vanishes on the span of all sh_{p,q} images with
// p + q = arity, p,q >= 1.
HarrisonWitness is_harrison(const Cochain& f);

struct CohomologyReport {
  std::size_t degree = 0;
  Variant variant = Variant::hochschild;
  std::size_t dim_cochains = 0;     // dimension of the (restricted) cochain space
  std::size_t dim_cocycles = 0;
  std::size_t dim_coboundaries = 0;
  std::size_t betti = 0;
  std::vector<Cochain> representatives;
};

CohomologyReport cohomology(const StructureAlgebra& a, const SymmetricModule& m,
                            std::size_t n, Variant variant,
                            std::size_t cap = kDefaultCap);

struct HomologyReport {
  std::size_t degree = 0;
  Variant variant = Variant::hochschild;
  HarrisonPresentation presentation = HarrisonPresentation::quotient;
  std::size_t dim_chain_space = 0; // of the (restricted/quotient) complex in this degree
  std::size_t betti = 0;
};

// Homology with coefficients in A. The harrison variant supports both
// presentations (quotient by shuffle products, image of e^(1)); their
// betti numbers agree.
HomologyReport homology(const StructureAlgebra& a, std::size_t n, Variant variant,
                        HarrisonPresentation presentation = HarrisonPresentation::quotient,
                        std::size_t cap = kDefaultCap);

struct BarrReport {
  std::size_t degree = 0;
  std::size_t dim_chain_space = 0;
  std::size_t dim_shuffle_span = 0;
  std::size_t dim_idempotent_image = 0;
  std::size_t dim_intersection = 0;
  std::size_t dim_sum = 0;
  bool direct_sum = false;                // intersection 0 and sum = full space
  bool shuffle_equals_complement = false; // span(shuffles) = image(id - e^(1))
  bool ok() const { return direct_sum && shuffle_equals_complement; }
};

// Checks C_n = I^{bullet 2} (+) e^(1)(C_n) by explicit span construction.
BarrReport barr_decomposition_check(const StructureAlgebra& a, std::size_t n,
                                    std::size_t cap = kDefaultCap);

// Generators of the degree-n span of shuffle products of two
// positive-degree basis chains.
std::vector<Vector> shuffle_span_generators(const StructureAlgebra& a, std::size_t n,
                                            std::size_t cap = kDefaultCap);

} // namespace harrco

#endif
