#pragma once

// Brute-force twins of the closed forms, built on different machinery so a
// bug in one path cannot hide in the other: reachability search instead of
// sieve-with-run, monomial enumeration instead of threshold formulas, exact
// linear algebra instead of difference peeling, and polynomial products
// instead of binomial transforms.

#include "normcone/hilbert.hpp"
#include "normcone/hvector.hpp"
#include "normcone/integers.hpp"
#include "normcone/zariski.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace normcone {

// Frobenius number by reachability: breadth-first closure of {0} under the
// generators out to m1 * mk (past every non-member), then the largest hole.
inline i64 brute_frobenius(std::vector<i64> gens) {
  require(!gens.empty(), errc::empty_generators, "at least one generator required");
  for (i64 g : gens)
    require(g >= 1, errc::domain, "generators must be positive");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  i64 g = 0;
  for (i64 x : gens) g = std::gcd(g, x);
  require(g == 1, errc::gcd_not_one, "generators must have gcd 1");

  const i64 m1 = gens.front(), mk = gens.back();
  if (m1 == 1) return -1;
  const i64 cap = m1 * mk + m1;
  require(cap <= 50'000'000, errc::domain, "generator magnitude out of supported range");
  std::vector<char> reach(static_cast<std::size_t>(cap) + 1, 0);
  std::vector<i64> stack{0};
  reach[0] = 1;
  while (!stack.empty()) {
    const i64 s = stack.back();
    stack.pop_back();
    for (i64 gen : gens) {
      const i64 t = s + gen;
      if (t <= cap && !reach[static_cast<std::size_t>(t)]) {
        reach[static_cast<std::size_t>(t)] = 1;
        stack.push_back(t);
      }
    }
  }
  for (i64 s = cap; s > cap - m1; --s)
    require(reach[static_cast<std::size_t>(s)], errc::verification,
            "reachability horizon ended inside a gap");
  for (i64 s = cap; s >= 0; --s)
    if (!reach[static_cast<std::size_t>(s)]) return s;
  return -1;
}

// Checks that the valuation ideal J_n and the integral closure of Q^n agree
// as monomial sets: a monomial x^k * (block of total degree w) lies in the
// closure iff w >= t_k(n), and in J_n iff k*b' + w*a' >= n*a'. Both sides
// depend only on (k, w), so the block monomials are enumerated through their
// total degree w = 0..B. B = 0 picks the instance bound n*max(a',b') + m;
// any B >= n already covers every threshold.
inline bool jn_equals_in(const ZariskiParams& p, i64 n, i64 B = 0) {
  require(n >= 1, errc::domain, "power index must be >= 1");
  if (B == 0) B = n * std::max(p.a_prime(), p.b_prime()) + p.m;
  require(B >= n, errc::bound_too_small, "degree bound must be at least n");
  const std::vector<i64> t = presentation(p, n);
  const i64 ap = p.a_prime(), bp = p.b_prime();
  for (i64 k = 0; k < p.a; ++k)
    for (i64 w = 0; w <= B; ++w) {
      const bool in_closure = w >= t[static_cast<std::size_t>(k)];
      const bool in_valuation = k * bp + w * ap >= n * ap;
      if (in_closure != in_valuation) return false;
    }
  return true;
}

// len(A / Q * closure(Q^{n-1})): the presentation of level n-1 with every
// exponent raised by one. Feeds the fiber identity
// fiber_length(n) = shifted_power_length(n) - normal_power_length(n).
inline Int shifted_power_length(const ZariskiParams& p, i64 n) {
  require(n >= 1, errc::domain, "power index must be >= 1");
  Int total = 0;
  for (i64 t : presentation(p, n - 1)) total += binomial(t + p.m, p.m);
  return total;
}

// h-vector by explicit polynomial multiplication: d truncated products of
// the increment series with (1 - t), then the same trailing-zero witness the
// transform demands.
inline HVector brute_hvector(std::vector<Int> c, i64 dim, i64 witness = 2) {
  require(dim >= 0, errc::domain, "dimension must be >= 0");
  require(witness >= 2, errc::domain, "stabilization witness must be >= 2");
  require(static_cast<i64>(c.size()) >= dim + witness, errc::non_stabilized,
          "too few increment terms for the requested dimension");
  for (i64 pass = 0; pass < dim; ++pass)
    for (std::size_t j = c.size() - 1; j >= 1; --j) c[j] -= c[j - 1];
  i64 trailing = 0;
  for (i64 j = static_cast<i64>(c.size()) - 1;
       j >= 0 && c[static_cast<std::size_t>(j)] == 0; --j)
    ++trailing;
  require(trailing >= witness, errc::non_stabilized,
          "product does not vanish at the end of the supplied range");
  return HVector(std::move(c), dim);
}

// Exact determinant by fraction-free Gaussian elimination.
inline Int determinant(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] /= prev;  // exact at every step
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Coefficient extraction by exact linear algebra: solve the (d+1)x(d+1)
// system pinned to the top d+1 table points by Cramer's rule, demand integer
// solutions, then verify the polynomial on the trailing `window` points.
inline HilbertCoefficients brute_fit(const std::vector<Int>& H, i64 dim, i64 window = 0) {
  require(dim >= 1, errc::domain, "dimension must be >= 1");
  if (window == 0) window = dim + 2;
  require(window >= dim + 2, errc::domain, "stabilization window must be >= dim + 2");
  const i64 N = static_cast<i64>(H.size()) - 1;
  require(N >= dim + 1, errc::non_stabilized, "table too short to determine coefficients");

  const std::size_t k = static_cast<std::size_t>(dim) + 1;
  std::vector<std::vector<Int>> M(k, std::vector<Int>(k));
  std::vector<Int> rhs(k);
  for (std::size_t r = 0; r < k; ++r) {
    const i64 n = N - dim + static_cast<i64>(r);
    for (std::size_t i = 0; i < k; ++i) {
      Int cell = binomial_poly(Int(n + dim - 1 - static_cast<i64>(i)),
                               dim - static_cast<i64>(i));
      if (i % 2 == 1) cell = -cell;
      M[r][i] = cell;
    }
    rhs[r] = H[static_cast<std::size_t>(n)];
  }
  const Int det = determinant(M);
  require(det != 0, errc::non_stabilized, "degenerate fit system");
  std::vector<Int> e(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto Mi = M;
    for (std::size_t r = 0; r < k; ++r) Mi[r][i] = rhs[r];
    const Int num = determinant(std::move(Mi));
    require(num % det == 0, errc::non_integer_fit,
            "linear solve has no integer solution");
    e[i] = num / det;
  }
  HilbertCoefficients coeffs(std::move(e));

  i64 fit_points = 0;
  for (i64 n = N; n >= 0; --n) {
    if (H[static_cast<std::size_t>(n)] != evaluate_hilbert_polynomial(coeffs, n)) break;
    ++fit_points;
  }
  require(fit_points >= window, errc::non_stabilized,
          "tail does not fit a Hilbert polynomial on enough consecutive points");
  return coeffs;
}

}  // namespace normcone
