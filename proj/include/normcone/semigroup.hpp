#pragma once

// Numerical semigroups S = <g1..gk> with gcd 1, and the normal filtration of
// the associated semigroup ring: integral closures of powers of the maximal
// ideal correspond to walking S in blocks of the multiplicity, so every
// length here is a lattice count in S.

#include "normcone/hilbert.hpp"
#include "normcone/hvector.hpp"
#include "normcone/integers.hpp"
#include "normcone/report.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

namespace normcone {

class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<i64> gens) {
    require(!gens.empty(), errc::empty_generators, "at least one generator required");
    for (i64 g : gens)
      require(g >= 1, errc::domain, "generators must be positive");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    i64 g = 0;
    for (i64 x : gens) g = std::gcd(g, x);
    require(g == 1, errc::gcd_not_one, "generators must have gcd 1");
    gens_ = std::move(gens);
    build();
  }

  const std::vector<i64>& generators() const { return gens_; }
  i64 multiplicity() const { return gens_.front(); }
  i64 frobenius() const { return frobenius_; }
  i64 gaps() const { return gaps_; }

  bool contains(i64 s) const {
    if (s < 0) return false;
    if (s >= static_cast<i64>(table_.size())) return true;  // beyond frobenius + m1
    return table_[static_cast<std::size_t>(s)] != 0;
  }

  // Gap complementation: s in S iff F - s not in S, for every 0 <= s <= F.
  bool symmetric() const {
    if (frobenius_ == -1) return true;
    if (frobenius_ % 2 == 0) return false;  // F/2 would pair with itself
    for (i64 s = 0; s <= frobenius_; ++s)
      if (contains(s) == contains(frobenius_ - s)) return false;
    return true;
  }

  // Least n with every element of S at height >= n reachable from height
  // n - 1 by one multiplicity step: ceil(F / m1), floored at 1.
  i64 normal_reduction_number() const {
    if (frobenius_ <= 0) return 1;
    return ceil_div(frobenius_, multiplicity());
  }

  // #\{s in S : 0 <= s < m1 * n\}, the length of A over the n-th normal power.
  Int normal_power_length(i64 n) const {
    if (n <= 0) return 0;
    const i64 x = multiplicity() * n;  // count members strictly below x
    if (x > static_cast<i64>(table_.size())) return Int(x - gaps_);
    return Int(prefix_[static_cast<std::size_t>(x)]);
  }

  // #\{s in S : s >= m1 * n, s - m1 not in S\}: minimal generators of the
  // n-th normal power over the (n+1)-st times nothing, i.e. the fiber count.
  i64 fiber_length(i64 n) const {
    require(n >= 1, errc::domain, "fiber index must be >= 1");
    const i64 lo = multiplicity() * n;
    const i64 hi = frobenius_ + multiplicity();  // past hi, s - m1 is always in S
    i64 count = 0;
    for (i64 s = lo; s <= hi; ++s)
      if (contains(s) && !contains(s - multiplicity())) ++count;
    return count;
  }

 private:
  void build() {
    const i64 m1 = gens_.front();
    if (m1 == 1) {
      frobenius_ = -1;
      gaps_ = 0;
      table_.assign(1, 1);
      prefix_.assign(2, 0);
      prefix_[1] = 1;
      return;
    }
    // Sieve upward until a full run of m1 consecutive members appears; the
    // largest non-member seen before that run is the frobenius number.
    const i64 cap = 2 * gens_.front() * gens_.back();  // conservative; F < m1 * mk
    require(cap <= 50'000'000, errc::domain, "generator magnitude out of supported range");
    std::vector<char> mem;
    mem.reserve(1024);
    mem.push_back(1);
    i64 run = 1, s = 0;
    while (run < m1) {
      ++s;
      require(s <= cap, errc::verification, "membership sieve failed to stabilize");
      char in = 0;
      for (i64 g : gens_) {
        if (g > s) break;
        if (mem[static_cast<std::size_t>(s - g)]) { in = 1; break; }
      }
      mem.push_back(in);
      run = in ? run + 1 : 0;
    }
    frobenius_ = s - m1;  // last non-member before the closing run
    table_.assign(mem.begin(), mem.begin() + frobenius_ + m1 + 1);
    gaps_ = 0;
    prefix_.assign(table_.size() + 1, 0);
    for (std::size_t i = 0; i < table_.size(); ++i) {
      prefix_[i + 1] = prefix_[i] + (table_[i] ? 1 : 0);
      if (!table_[i]) ++gaps_;
    }
  }

  std::vector<i64> gens_;
  std::vector<char> table_;   // membership on [0, frobenius + m1]
  std::vector<i64> prefix_;   // prefix_[x] = #members < x
  i64 frobenius_ = -1;
  i64 gaps_ = 0;
};

// Length table H(0..N) of the normal filtration, with the hypothesis flags a
// one-dimensional semigroup ring earns: the tangent cone of the normal
// filtration is Cohen-Macaulay in dimension one, and the ambient ring is
// Gorenstein exactly when S is symmetric.
inline FiltrationProfile normal_profile(const NumericalSemigroup& s, i64 points) {
  const i64 rbar = s.normal_reduction_number();
  require(points >= rbar + 2, errc::range_too_small,
          "need at least rbar + 2 profile points");
  std::vector<Int> table;
  table.reserve(static_cast<std::size_t>(points) + 1);
  for (i64 n = 0; n <= points; ++n) table.push_back(s.normal_power_length(n));
  ProfileAssumptions flags;
  flags.ambient_gorenstein = s.symmetric();
  flags.assoc_graded_cm = true;
  flags.depth_at_least_dim_minus_1 = true;
  return FiltrationProfile(1, std::move(table), flags);
}

// Full analysis of the normal filtration of a semigroup ring k[[S]];
// points = 0 picks the default window rbar + 4.
inline Report analyze_semigroup(const NumericalSemigroup& s, i64 points = 0) {
  Report rep;
  rep.family = "semigroup";
  rep.generators = s.generators();
  rep.dim = 1;
  rep.frobenius = s.frobenius();
  rep.symmetric = s.symmetric();

  const i64 rbar = s.normal_reduction_number();
  const Int e0 = s.multiplicity();
  const Int e1 = e0 * rbar - s.normal_power_length(rbar);
  {
    const Int guard = e0 * (rbar + 1) - s.normal_power_length(rbar + 1);
    require(guard == e1, errc::verification, "e1 did not stabilize at rbar");
  }
  rep.e0 = e0;
  rep.e1 = e1;
  rep.lambda = 1;  // principal reduction: the fiber of Q is one-dimensional
  rep.rbar = rbar;
  rep.nr = rbar;   // tangent cone CM in dimension one, so nr equals rbar
  rep.bound = relative_reduction_bound(e0, e1, 1);
  const bool maximal = is_maximal_nr(rbar, e0, e1, 1);
  rep.nr_maximal = maximal;

  if (points == 0) points = rbar + 4;
  require(points >= rbar + 3, errc::range_too_small,
          "analysis needs at least rbar + 3 profile points");
  FiltrationProfile profile = normal_profile(s, points);
  rep.profile = profile.table();
  rep.flags = profile.flags();

  const ProfileFit fit = fit_profile(profile);
  require(fit.coeffs.e.size() == 2 && fit.coeffs.e[0] == e0 && fit.coeffs.e[1] == e1,
          errc::verification, "profile fit disagrees with closed-form coefficients");
  rep.coefficients = fit.coeffs;
  rep.postulation_known = true;
  rep.postulation = fit.postulation;
  if (fit.postulation) {
    require(*fit.postulation == rbar - 1, errc::verification,
            "postulation number disagrees with reduction number");
  } else {
    require(s.frobenius() <= 0, errc::verification,
            "postulation disengaged on a non-trivial semigroup");
  }

  rep.h = h_vector_from_increments(profile.increments(), 1);

  // Verdict: all applicable criteria must agree, and each one is recorded.
  Verdict verdict;
  if (!s.symmetric()) {
    verdict.status = Status::inapplicable;
    verdict.reasons.push_back(
        {criteria::hypothesis_gate,
         "semigroup is not symmetric, so the ambient ring is not Gorenstein"});
  } else {
    std::vector<Verdict> parts;
    // frobenius <= 0 means S = N: rbar = 1 is a convention there, not a
    // computed reduction number, so the coefficient criteria do not apply.
    if (rbar == 1 && s.frobenius() >= 1) {
      const bool ok = gorenstein_r1(e0, e1);
      std::ostringstream d;
      d << "e0 = " << e0 << " and 2*e1 = " << 2 * e1 << (ok ? ": equal" : ": not equal");
      parts.push_back(Verdict{ok ? Status::holds : Status::fails,
                              {Reason{criteria::reduction_one_coefficients, d.str()}}});
    }
    if (rbar == 2) {
      const bool ok = gorenstein_r2(e0, e1);
      std::ostringstream d;
      d << "e0 = " << e0 << " and e1 = " << e1 << (ok ? ": equal" : ": not equal");
      parts.push_back(Verdict{ok ? Status::holds : Status::fails,
                              {Reason{criteria::reduction_two_coefficients, d.str()}}});
    }
    if (maximal && rbar >= 2)
      parts.push_back(gorenstein_maximal(1, e0, rbar, true, true, true));
    parts.push_back(gorenstein_by_symmetry(*rep.h, profile.flags()));
    verdict.status = parts.front().status;
    for (const Verdict& p : parts) {
      require(p.status == verdict.status, errc::verification,
              "gorenstein criteria disagree");
      for (const Reason& reason : p.reasons) verdict.reasons.push_back(reason);
    }
  }
  rep.gorenstein = verdict;
  for (const Reason& reason : verdict.reasons)
    rep.criteria_applied.push_back(reason.criterion);
  return rep;
}

inline Report analyze_semigroup(const std::vector<i64>& gens, i64 points = 0) {
  return analyze_semigroup(NumericalSemigroup(gens), points);
}

}  // namespace normcone
