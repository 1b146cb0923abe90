#include "harrco/symgrp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace harrco {

Permutation Permutation::identity(std::size_t n)
{
  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), std::size_t{0});
  return from_images(std::move(img));
}

Permutation Permutation::from_one_line(const std::vector<int>& images)
{
  std::vector<std::size_t> img(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] < 1 || static_cast<std::size_t>(images[i]) > images.size())
      throw std::invalid_argument("permutation image out of range");
    img[i] = static_cast<std::size_t>(images[i]) - 1;
  }
  return from_images(std::move(img));
}

Permutation Permutation::from_images(std::vector<std::size_t> images)
{
  std::vector<bool> seen(images.size(), false);
  for (std::size_t v : images) {
    if (v >= images.size() || seen[v])
      throw std::invalid_argument("not a bijection");
    seen[v] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::inverse() const
{
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = i;
  return from_images(std::move(inv));
}

int Permutation::sign() const
{
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j])
        ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

std::vector<int> Permutation::one_line() const
{
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[i] = static_cast<int>(images_[i]) + 1;
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q)
{
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<std::size_t> img(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i)
    img[i] = p.image(q.image(i));
  return Permutation::from_images(std::move(img));
}

GroupAlgebraElement GroupAlgebraElement::unit(std::size_t degree)
{
  GroupAlgebraElement e(degree);
  e.add_term(Permutation::identity(degree), 1);
  return e;
}

Rational GroupAlgebraElement::coeff(const Permutation& p) const
{
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& p, const Rational& c)
{
  if (p.degree() != degree_)
    throw std::invalid_argument("group algebra: degree mismatch");
  if (sgn(c) == 0)
    return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      terms_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other)
{
  if (degree_ != other.degree_)
    throw std::invalid_argument("group algebra: degree mismatch");
  for (const auto& [p, c] : other.terms_)
    add_term(p, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other)
{
  if (degree_ != other.degree_)
    throw std::invalid_argument("group algebra: degree mismatch");
  for (const auto& [p, c] : other.terms_)
    add_term(p, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& c)
{
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_)
    v *= c;
  return *this;
}

std::string GroupAlgebraElement::to_string() const
{
  if (terms_.empty())
    return "0";
  std::string out;
  for (const auto& [p, c] : terms_) {
    if (!out.empty())
      out += " + ";
    out += harrco::to_string(c);
    out += " * [";
    const std::vector<int> ol = p.one_line();
    for (std::size_t i = 0; i < ol.size(); ++i) {
      if (i)
        out += ",";
      out += std::to_string(ol[i]);
    }
    out += "]";
  }
  return out;
}

GroupAlgebraElement ga_product(const GroupAlgebraElement& a, const GroupAlgebraElement& b)
{
  if (a.degree() != b.degree())
    throw std::invalid_argument("ga_product: degree mismatch");
  GroupAlgebraElement out(a.degree());
  for (const auto& [p, cp] : a.terms())
    for (const auto& [q, cq] : b.terms())
      out.add_term(compose(p, q), cp * cq);
  return out;
}

std::vector<Permutation> multi_shuffles(const std::vector<std::size_t>& blocks)
{
  if (blocks.empty())
    throw std::invalid_argument("multi_shuffles: empty block list");
  std::size_t total = 0;
  for (std::size_t b : blocks) {
    if (b == 0)
      throw std::invalid_argument("multi_shuffles: zero block");
    total += b;
  }
  // Enumerate multiset permutations of block labels over output
  // positions; within each block the images stay increasing.
  std::vector<std::size_t> labels;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    labels.insert(labels.end(), blocks[b], b);

  std::vector<Permutation> out;
  std::sort(labels.begin(), labels.end());
  do {
    std::vector<std::size_t> img(total);
    std::vector<std::size_t> next(blocks.size(), 0);
    std::vector<std::size_t> offset(blocks.size(), 0);
    for (std::size_t b = 1; b < blocks.size(); ++b)
      offset[b] = offset[b - 1] + blocks[b - 1];
    for (std::size_t pos = 0; pos < total; ++pos) {
      std::size_t b = labels[pos];
      img[offset[b] + next[b]] = pos;
      ++next[b];
    }
    out.push_back(Permutation::from_images(std::move(img)));
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

GroupAlgebraElement shuffle_element(const std::vector<std::size_t>& blocks)
{
  std::size_t total = 0;
  for (std::size_t b : blocks)
    total += b;
  GroupAlgebraElement out(total);
  for (const Permutation& p : multi_shuffles(blocks))
    out.add_term(p, p.sign());
  return out;
}

std::vector<std::vector<std::size_t>> compositions(std::size_t n, std::size_t k)
{
  std::vector<std::vector<std::size_t>> out;
  if (k == 0 || k > n)
    return out;
  std::vector<std::size_t> cur(k, 1);
  // distribute the remaining n-k among k parts, lexicographic
  auto rec = [&](auto&& self, std::size_t idx, std::size_t remaining) -> void {
    if (idx + 1 == k) {
      cur[idx] = 1 + remaining;
      out.push_back(cur);
      return;
    }
    for (std::size_t extra = 0; extra <= remaining; ++extra) {
      cur[idx] = 1 + extra;
      self(self, idx + 1, remaining - extra);
    }
  };
  rec(rec, 0, n - k);
  return out;
}

GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b)
{
  const std::size_t p = a.degree(), q = b.degree();
  GroupAlgebraElement out(p + q);
  if (a.is_zero() || b.is_zero())
    return out;
  if (p == 0)
    return b;
  if (q == 0)
    return a;
  const GroupAlgebraElement sh = shuffle_element({p, q});
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pb, cb] : b.terms()) {
      // block-diagonal embedding S_p x S_q -> S_{p+q}
      std::vector<std::size_t> img(p + q);
      for (std::size_t i = 0; i < p; ++i)
        img[i] = pa.image(i);
      for (std::size_t j = 0; j < q; ++j)
        img[p + j] = p + pb.image(j);
      const Permutation embedded = Permutation::from_images(std::move(img));
      for (const auto& [tau, cs] : sh.terms())
        out.add_term(compose(tau, embedded), cs * ca * cb);
    }
  return out;
}

namespace {

GroupAlgebraElement first_idempotent(std::size_t n)
{
  GroupAlgebraElement out(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Rational c = Rational(k % 2 == 1 ? 1 : -1, k);
    for (const auto& parts : compositions(n, k))
      out += c * shuffle_element(parts);
  }
  return out;
}

} // namespace

GroupAlgebraElement eulerian_idempotent(std::size_t n, std::size_t i)
{
  if (n < 1 || i < 1)
    throw std::invalid_argument("eulerian_idempotent: n and i must be positive");
  if (i > n)
    return GroupAlgebraElement(n); // i-th convolution power vanishes below weight i
  // weight-graded components of e^(1) up to weight n
  std::vector<GroupAlgebraElement> e1;
  e1.reserve(n);
  for (std::size_t m = 1; m <= n; ++m)
    e1.push_back(first_idempotent(m));
  if (i == 1)
    return e1[n - 1];

  // power[m-1] holds the weight-m component of (e^(1))^{* j}
  std::vector<GroupAlgebraElement> power = e1;
  Rational factorial = 1;
  for (std::size_t j = 2; j <= i; ++j) {
    std::vector<GroupAlgebraElement> next;
    next.reserve(n);
    for (std::size_t m = 1; m <= n; ++m) {
      GroupAlgebraElement acc(m);
      for (std::size_t m1 = 1; m1 + 1 <= m; ++m1)
        if (m - m1 >= j - 1) // lower powers vanish below weight j-1
          acc += convolve(e1[m1 - 1], power[m - m1 - 1]);
      next.push_back(std::move(acc));
    }
    power = std::move(next);
    factorial *= static_cast<long>(j);
  }
  const Rational inv_factorial = Rational(1) / factorial;
  return inv_factorial * power[n - 1];
}

} // namespace harrco
