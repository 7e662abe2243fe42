#pragma once

// h-vectors: numerator coefficients of a Hilbert series written over (1-t)^d.
// Trailing zeros are trimmed on construction (top coefficient nonzero), the
// zero vector is rejected, and the coefficient sum must be positive (it equals
// the multiplicity e0 whenever the source ring is Cohen-Macaulay).

#include "normcone/integers.hpp"

#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace normcone {

class HVector {
 public:
  // Trims trailing zeros. Rejects the zero vector, negative dimension,
  // and coefficient sum < 1.
  HVector(std::vector<Int> coeffs, i64 dim) : h_(std::move(coeffs)), dim_(dim) {
    require(dim_ >= 0, errc::domain, "h-vector dimension must be >= 0");
    while (!h_.empty() && h_.back() == 0) h_.pop_back();
    require(!h_.empty(), errc::domain, "zero h-vector rejected");
    Int sum = 0;
    for (const Int& v : h_) sum += v;
    require(sum >= 1, errc::domain, "h-vector coefficient sum must be >= 1");
  }

  const std::vector<Int>& coeffs() const { return h_; }
  i64 dim() const { return dim_; }
  i64 degree() const { return static_cast<i64>(h_.size()) - 1; }  // s with h_s != 0
  const Int& operator[](std::size_t j) const { return h_[j]; }

  Int sum() const {
    Int s = 0;
    for (const Int& v : h_) s += v;
    return s;
  }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t j = 0; j < h_.size(); ++j) os << (j ? "," : "") << h_[j];
    os << ')';
    return os.str();
  }

  friend bool operator==(const HVector& x, const HVector& y) {
    return x.dim_ == y.dim_ && x.h_ == y.h_;
  }

 private:
  std::vector<Int> h_;
  i64 dim_;
};

// Palindrome test: h_i == h_{s-i} for all i (on the trimmed vector).
inline bool is_symmetric(const HVector& h) {
  const auto& v = h.coeffs();
  for (std::size_t i = 0, j = v.size() - 1; i < j; ++i, --j)
    if (v[i] != v[j]) return false;
  return true;
}

// h_j = sum_{i=0}^{d} (-1)^i C(d,i) c_{j-i}  (c_n := 0 for n < 0): the
// d-fold backward difference of the length increments c_n = H(n+1) - H(n).
// The transform must vanish beyond the returned support; `witness` is the
// minimum number of trailing zero terms demanded as evidence that the
// supplied range reached stabilization (>= 2: one point beyond the d+1
// determining the polynomial tail).
inline HVector h_vector_from_increments(std::span<const Int> c, i64 dim, i64 witness = 2) {
  require(dim >= 0, errc::domain, "dimension must be >= 0");
  require(witness >= 2, errc::domain, "stabilization witness must be >= 2");
  const i64 n_terms = static_cast<i64>(c.size());
  require(n_terms >= dim + witness, errc::non_stabilized,
          "too few increment terms for the requested dimension");
  std::vector<Int> h(static_cast<std::size_t>(n_terms));
  for (i64 j = 0; j < n_terms; ++j) {
    Int acc = 0;
    for (i64 i = 0; i <= dim && i <= j; ++i) {
      Int term = binomial(dim, i) * c[static_cast<std::size_t>(j - i)];
      if (i % 2 == 0) acc += term; else acc -= term;
    }
    h[static_cast<std::size_t>(j)] = acc;
  }
  i64 trailing = 0;
  for (i64 j = n_terms - 1; j >= 0 && h[static_cast<std::size_t>(j)] == 0; --j) ++trailing;
  require(trailing >= witness, errc::non_stabilized,
          "difference transform does not vanish at the end of the supplied range");
  return HVector(std::move(h), dim);
}

// Hilbert series numerator when the reduction number is 1: (lambda, e0-lambda).
inline HVector hs_reduction_one(const Int& lambda, const Int& e0, i64 dim) {
  require(lambda >= 1 && lambda <= e0, errc::domain, "need 1 <= lambda <= e0");
  return HVector({lambda, e0 - lambda}, dim);
}

// Hilbert series numerator when the reduction number is 2:
// (lambda, 2*e0 - e1 - 2*lambda, lambda - e0 + e1). Negative entries signal
// inputs not realizable under the formula's hypotheses.
inline HVector hs_reduction_two(const Int& lambda, const Int& e0, const Int& e1, i64 dim) {
  require(lambda >= 1, errc::domain, "need lambda >= 1");
  Int h1 = 2 * e0 - e1 - 2 * lambda;
  Int h2 = lambda - e0 + e1;
  require(h1 >= 0 && h2 >= 0, errc::negative_entry,
          "reduction-two numerator has a negative entry");
  return HVector({lambda, h1, h2}, dim);
}

// Hilbert series numerator when the relative reduction number r >= 2 is
// maximal: (lambda, e0-lambda-1, 0, ..., 0, 1) of length r+1.
inline HVector hs_maximal(const Int& lambda, const Int& e0, i64 r, i64 dim) {
  require(r >= 2, errc::domain, "maximal-series numerator needs r >= 2");
  require(lambda >= 1 && e0 >= lambda + 1, errc::domain, "need e0 >= lambda + 1");
  std::vector<Int> h(static_cast<std::size_t>(r + 1), 0);
  h[0] = lambda;
  h[1] = e0 - lambda - 1;
  h[static_cast<std::size_t>(r)] = 1;
  return HVector(std::move(h), dim);
}

}  // namespace normcone
