#ifndef HARRCO_SYMGRP_HPP
#define HARRCO_SYMGRP_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "harrco/rational.hpp"

namespace harrco {

// Permutation of {1..n} in one-line notation, stored 0-based.
class Permutation {
public:
  Permutation() = default;
  static Permutation identity(std::size_t n);
  // one-line notation, 1-based images; throws if not a bijection
  static Permutation from_one_line(const std::vector<int>& images);
  // 0-based images
  static Permutation from_images(std::vector<std::size_t> images);

  std::size_t degree() const { return images_.size(); }
  std::size_t image(std::size_t i) const { return images_[i]; } // 0-based
  Permutation inverse() const;
  int sign() const; // (-1)^inversions
  bool is_identity() const;

  std::vector<int> one_line() const; // 1-based

  // result[p(i)] = t[i], i.e. position i of the output holds entry
  // sigma^{-1}(i) of the input
  template <typename T>
  std::vector<T> act(const std::vector<T>& t) const
  {
    std::vector<T> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
      out[images_[i]] = t[i];
    return out;
  }

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<std::size_t> images_;
};

// result maps i -> p(q(i)); act(compose(p,q), t) = act(p, act(q, t))
Permutation compose(const Permutation& p, const Permutation& q);

// Finite formal rational combination of permutations of fixed degree.
class GroupAlgebraElement {
public:
  explicit GroupAlgebraElement(std::size_t degree) : degree_(degree) {}
  static GroupAlgebraElement unit(std::size_t degree); // the identity permutation

  std::size_t degree() const { return degree_; }
  const std::map<Permutation, Rational>& terms() const { return terms_; }
  Rational coeff(const Permutation& p) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Permutation& p, const Rational& c);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator*=(const Rational& c);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(const Rational& c, GroupAlgebraElement a) { return a *= c; }

  bool operator==(const GroupAlgebraElement&) const = default;

  // Terms sorted lexicographically by one-line notation, coefficients in
  // lowest terms, e.g. "1/2 * [1,2] + 1/2 * [2,1]".
  std::string to_string() const;

private:
  std::size_t degree_;
  std::map<Permutation, Rational> terms_; // no zero coefficients stored
};

// Bilinear extension of compose; acting by ga_product(a,b) on a tuple
// equals acting by a after b.
GroupAlgebraElement ga_product(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

// All sigma in S_{sum blocks} strictly increasing on each consecutive
// block of positions; count = multinomial(sum; blocks).
// Throws on an empty block list or a zero block.
std::vector<Permutation> multi_shuffles(const std::vector<std::size_t>& blocks);

// sum of sign(sigma) * sigma over multi_shuffles(blocks)
GroupAlgebraElement shuffle_element(const std::vector<std::size_t>& blocks);

// Compositions of n into exactly k positive parts, lexicographic.
std::vector<std::vector<std::size_t>> compositions(std::size_t n, std::size_t k);

// Weight-n component of the i-th eulerian idempotent of QQ[S_n], via the
// finite expansion of the convolution logarithm of the identity:
//   e_n^(1) = sum_{k=1..n} ((-1)^{k+1}/k) sum_{comps of n into k parts} sh(parts)
//   e^(i)   = (e^(1))^{*i} / i!
// Returns the zero element when i > n.
GroupAlgebraElement eulerian_idempotent(std::size_t n, std::size_t i);

// Convolution of weight-homogeneous group-algebra components: the weight
// p+q part of the convolution product of maps acting by a and b.
GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

} // namespace harrco

#endif
