#pragma once

// Hypersurfaces x^a = y^b u over a power series ring in y and m further
// variables (u a unit). Every invariant of the normal filtration of the
// maximal ideal has a closed form in (a, b, m) through the integer ladder
// n_k = floor(k*b/a); lengths reduce to counting monomials under the ladder.

#include "normcone/hilbert.hpp"
#include "normcone/hvector.hpp"
#include "normcone/integers.hpp"
#include "normcone/report.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

namespace normcone {

struct ZariskiParams {
  i64 a = 0;  // x-degree, equals the multiplicity e0
  i64 b = 0;  // y-degree, a <= b
  i64 m = 1;  // number of free variables, equals dim

  static ZariskiParams build(i64 a, i64 b, i64 m) {
    require(a >= 2, errc::domain, "a must be >= 2");
    require(b >= a, errc::domain, "b must be >= a");
    require(m >= 1, errc::domain, "m must be >= 1");
    return ZariskiParams{a, b, m};
  }

  i64 gcd() const { return std::gcd(a, b); }
  i64 a_prime() const { return a / gcd(); }
  i64 b_prime() const { return b / gcd(); }
  i64 dim() const { return m; }
};

// n_k = floor(k*b/a) for k = 1..a-1: the valuation ladder of the powers of x.
inline std::vector<i64> ladder(const ZariskiParams& p) {
  std::vector<i64> n;
  n.reserve(static_cast<std::size_t>(p.a - 1));
  for (i64 k = 1; k < p.a; ++k) n.push_back(k * p.b / p.a);
  return n;
}

inline i64 normal_reduction_number(const ZariskiParams& p) {
  return (p.a - 1) * p.b / p.a;  // top rung of the ladder
}

// x^k lies in the integral closure of Q^n exactly when k*b >= n*a.
inline bool xk_membership(const ZariskiParams& p, i64 k, i64 n) {
  require(k >= 0 && k < p.a, errc::domain, "exponent k must lie in [0, a)");
  require(n >= 1, errc::domain, "power index must be >= 1");
  return k * p.b >= n * p.a;
}

// Least k in [1, a-1] whose ladder rung reaches n; a when none does.
inline i64 ell(const ZariskiParams& p, i64 n) {
  require(n >= 1, errc::domain, "index must be >= 1");
  for (i64 k = 1; k < p.a; ++k)
    if (n <= k * p.b / p.a) return k;
  return p.a;
}

// Exponent vector (t_0..t_{a-1}) with t_k = max(n - n_k, 0), n_0 = 0: the
// n-th normal power is generated by x^k * (y-block)^{t_k}.
inline std::vector<i64> presentation(const ZariskiParams& p, i64 n) {
  require(n >= 0, errc::domain, "power index must be >= 0");
  std::vector<i64> t;
  t.reserve(static_cast<std::size_t>(p.a));
  t.push_back(n);
  for (i64 k = 1; k < p.a; ++k) t.push_back(std::max<i64>(n - k * p.b / p.a, 0));
  return t;
}

// H(n) = sum_k binom(t_k + m - 1, m): monomials below each generator stratum.
inline Int normal_power_length(const ZariskiParams& p, i64 n) {
  if (n <= 0) return 0;
  Int total = 0;
  for (i64 t : presentation(p, n)) total += binomial(t + p.m - 1, p.m);
  return total;
}

// Minimal generator count of the n-th normal power fiber: a - ceil(a*n/b),
// floored at 0; independent of m.
inline i64 fiber_length(const ZariskiParams& p, i64 n) {
  require(n >= 1, errc::domain, "fiber index must be >= 1");
  return std::max<i64>(p.a - ceil_div(p.a * n, p.b), 0);
}

// e1 of the normal filtration: (a - 1) + sum of fiber lengths from 2 to rbar.
inline Int normal_e1(const ZariskiParams& p) {
  Int e1 = p.a - 1;
  const i64 rbar = normal_reduction_number(p);
  for (i64 n = 2; n <= rbar; ++n) e1 += fiber_length(p, n);
  return e1;
}

// h-vector of the normal tangent cone: the histogram of the ladder rungs
// (with n_0 = 0), independent of m.
inline HVector hvector(const ZariskiParams& p) {
  const i64 rbar = normal_reduction_number(p);
  std::vector<Int> h(static_cast<std::size_t>(rbar) + 1, 0);
  h[0] = 1;
  for (i64 k = 1; k < p.a; ++k) h[static_cast<std::size_t>(k * p.b / p.a)] += 1;
  return HVector(std::move(h), p.m);
}

// Gorenstein by residue: b mod a must land in {0, gcd(a,b)}.
inline bool gorenstein_congruence(const ZariskiParams& p) {
  const i64 rem = p.b % p.a;
  return rem == 0 || rem == p.gcd();
}

// Gorenstein by duality of the ell-sequence: ell(n) + ell(rbar+1-n) = a.
inline bool gorenstein_duality(const ZariskiParams& p) {
  const i64 rbar = normal_reduction_number(p);
  for (i64 n = 1; n <= rbar; ++n)
    if (ell(p, n) + ell(p, rbar + 1 - n) != p.a) return false;
  return true;
}

inline RingClass ring_class(const ZariskiParams& p) {
  if (!gorenstein_congruence(p)) return RingClass::not_gorenstein;
  if (p.b % p.a == 0) return RingClass::reduced_hypersurface;
  return p.gcd() == 1 ? RingClass::nonreduced_hypersurface
                      : RingClass::complete_intersection;
}

// The tangent cone reaches the largest possible embedding dimension exactly
// when a = 2 or b = a - 1 (mod a).
inline bool max_embedding_dimension(const ZariskiParams& p) {
  return p.a == 2 || p.b % p.a == p.a - 1;
}

// The relative reduction number attains its upper bound e1 - e0 + lambda + 1
// only for a = 2 or (a, b) in {(3,3), (3,4), (3,5)}.
inline bool is_nr_maximal(const ZariskiParams& p) {
  if (p.a == 2) return true;
  return p.a == 3 && p.b <= 5;
}

// Length table of the normal filtration. The ambient ring is a hypersurface,
// so Gorenstein, and its normal tangent cone is Cohen-Macaulay.
inline FiltrationProfile normal_profile(const ZariskiParams& p, i64 points) {
  const i64 rbar = normal_reduction_number(p);
  require(points >= rbar + p.m + 2, errc::range_too_small,
          "need at least rbar + dim + 2 profile points");
  std::vector<Int> table;
  table.reserve(static_cast<std::size_t>(points) + 1);
  for (i64 n = 0; n <= points; ++n) table.push_back(normal_power_length(p, n));
  ProfileAssumptions flags;
  flags.ambient_gorenstein = true;
  flags.assoc_graded_cm = true;
  flags.depth_at_least_dim_minus_1 = true;
  return FiltrationProfile(p.m, std::move(table), flags);
}

// Full analysis; points = 0 picks the default window rbar + m + 2.
inline Report analyze_zariski(const ZariskiParams& p, i64 points = 0) {
  Report rep;
  rep.family = "hypersurface";
  rep.a = p.a;
  rep.b = p.b;
  rep.m = p.m;
  rep.gcd_ab = p.gcd();
  rep.a_prime = p.a_prime();
  rep.b_prime = p.b_prime();
  rep.char_condition = "a must be a unit in the residue field";
  rep.dim = p.m;

  const i64 rbar = normal_reduction_number(p);
  const Int e0 = p.a;
  const Int e1 = normal_e1(p);
  rep.e0 = e0;
  rep.e1 = e1;
  rep.lambda = 1;
  rep.rbar = rbar;
  rep.nr = rbar;  // tangent cone CM, so the relative number equals rbar
  rep.bound = relative_reduction_bound(e0, e1, 1);
  const bool maximal = is_nr_maximal(p);
  require(maximal == is_maximal_nr(rbar, e0, e1, 1), errc::verification,
          "maximality classification disagrees with the bound");
  rep.nr_maximal = maximal;
  rep.ladder = ladder(p);
  rep.presentation_rbar = presentation(p, rbar);

  if (points == 0) points = rbar + p.m + 2;
  FiltrationProfile profile = normal_profile(p, points);
  rep.profile = profile.table();
  rep.flags = profile.flags();

  const ProfileFit fit = fit_profile(profile);
  require(fit.coeffs.e[0] == e0 && fit.coeffs.e[1] == e1, errc::verification,
          "profile fit disagrees with closed-form coefficients");
  rep.coefficients = fit.coeffs;
  rep.postulation_known = true;
  rep.postulation = fit.postulation;
  if (fit.postulation) {
    require(*fit.postulation == rbar - p.m && rbar >= p.m, errc::verification,
            "postulation number disagrees with rbar - dim");
  } else {
    require(rbar < p.m, errc::verification,
            "postulation disengaged although rbar >= dim");
  }

  HVector h = hvector(p);
  require(h == h_vector_from_increments(profile.increments(), p.m),
          errc::verification, "ladder histogram disagrees with the h-transform");
  rep.h = h;

  const bool congruence = gorenstein_congruence(p);
  require(congruence == gorenstein_duality(p), errc::verification,
          "congruence and duality criteria disagree");

  Verdict verdict;
  verdict.status = congruence ? Status::holds : Status::fails;
  {
    std::ostringstream d;
    d << "b mod a = " << p.b % p.a << ", gcd = " << p.gcd() << ": "
      << (congruence ? "lands in" : "misses") << " {0, gcd}";
    verdict.reasons.push_back({criteria::congruence_class, d.str()});
  }
  {
    std::ostringstream d;
    if (congruence) {
      d << "ell(n) + ell(" << rbar + 1 << " - n) = " << p.a << " for all n";
    } else {
      i64 bad = 1;
      while (ell(p, bad) + ell(p, rbar + 1 - bad) == p.a) ++bad;
      d << "ell(" << bad << ") + ell(" << rbar + 1 - bad << ") = "
        << ell(p, bad) + ell(p, rbar + 1 - bad) << " != " << p.a;
    }
    verdict.reasons.push_back({criteria::ell_duality, d.str()});
  }
  {
    Verdict sym = gorenstein_by_symmetry(h, profile.flags());
    require(sym.status == verdict.status, errc::verification,
            "h-vector symmetry disagrees with the congruence criterion");
    for (const Reason& reason : sym.reasons) verdict.reasons.push_back(reason);
  }
  if (maximal && rbar >= 2) {
    Verdict vm = gorenstein_maximal(1, e0, rbar, true, true, true);
    require(vm.status == verdict.status, errc::verification,
            "maximal-nr criterion disagrees with the congruence criterion");
    for (const Reason& reason : vm.reasons) verdict.reasons.push_back(reason);
  }
  rep.gorenstein = verdict;
  rep.ring_class = ring_class(p);

  const bool embdim = max_embedding_dimension(p);
  rep.max_embedding_dimension = embdim;
  if (embdim)
    require(congruence == (p.a == 2), errc::verification,
            "max embedding dimension must force gorenstein exactly at a = 2");

  for (const Reason& reason : verdict.reasons)
    rep.criteria_applied.push_back(reason.criterion);
  return rep;
}

}  // namespace normcone
