#pragma once

// Exhaustive checking over whole families. Every instance is analyzed (the
// analyzers already cross-check their own closed forms), then the structural
// invariants that tie the modules together are tested; disagreements are
// collected as counterexamples instead of aborting the sweep.

#include "normcone/hilbert.hpp"
#include "normcone/hvector.hpp"
#include "normcone/integers.hpp"
#include "normcone/oracle.hpp"
#include "normcone/report.hpp"
#include "normcone/semigroup.hpp"
#include "normcone/zariski.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace normcone {

struct SweepIssue {
  std::string instance;
  std::string what;
};

struct SweepStats {
  i64 instances = 0;
  i64 gorenstein = 0;
  i64 maximal = 0;
  i64 symmetric = 0;  // semigroup family only
  i64 issue_count = 0;
  std::vector<SweepIssue> issues;  // first 20 kept verbatim

  void flag(const std::string& instance, const std::string& what) {
    ++issue_count;
    if (issues.size() < 20) issues.push_back({instance, what});
  }
};

// Lifts a maximal numerator (1, e0-2, 0..0, 1) of degree r to dimension 2 by
// summing it against C(n-j+1, 2), fits the resulting table, and checks the
// coefficient formula from the numerator, e_i = C(r, i), the bound being
// attained, and the postulation number r - 2.
inline bool check_dim2_analog(const Int& e0, i64 r, std::string* why = nullptr) {
  auto reject = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  const HVector h = hs_maximal(1, e0, r, 2);
  const i64 N = r + 4;
  std::vector<Int> H(static_cast<std::size_t>(N) + 1);
  for (i64 n = 0; n <= N; ++n) {
    Int acc = 0;
    for (i64 j = 0; j <= h.degree(); ++j)
      acc += h[static_cast<std::size_t>(j)] * binomial(n - j + 1, 2);
    H[static_cast<std::size_t>(n)] = acc;
  }
  ProfileAssumptions flags{true, true, true};
  const FiltrationProfile p(2, std::move(H), flags);
  const ProfileFit fit = fit_profile(p);
  if (!(fit.coeffs == coefficients_from_hvector(h)))
    return reject("fit disagrees with the numerator coefficients");
  if (!ei_binomial_check(r, fit.coeffs))
    return reject("e_i != C(r, i) on the lifted profile");
  if (Int(r) != relative_reduction_bound(fit.coeffs.e[0], fit.coeffs.e[1], 1))
    return reject("bound not attained on the lifted profile");
  if (!fit.postulation || *fit.postulation != r - 2)
    return reject("postulation of the lifted profile is not r - 2");
  return true;
}

struct ZariskiSweepOptions {
  i64 a_lo = 2, a_hi = 12;
  i64 b_lo = 0, b_hi = 60;  // b runs over [max(a, b_lo), b_hi]
  i64 m_lo = 1, m_hi = 3;
  bool verify = false;  // run the brute-force oracle twins too
};

namespace detail {

inline void check_zariski_instance(const ZariskiParams& p, bool verify,
                                   const std::string& inst, SweepStats& st,
                                   std::set<std::pair<Int, i64>>& dim2) {
  const Report rep = analyze_zariski(p);
  if (rep.gorenstein.holds()) ++st.gorenstein;
  if (*rep.nr_maximal) ++st.maximal;
  const i64 rbar = *rep.rbar;

  if (Int(rbar) > rep.bound) st.flag(inst, "nr exceeds the bound");
  bool unit_fibers = true;
  for (i64 n = 2; n <= rbar; ++n)
    if (fiber_length(p, n) != 1) { unit_fibers = false; break; }
  if (*rep.nr_maximal != (rbar == 1 || unit_fibers))
    st.flag(inst, "bound attained does not match unit fibers");
  if (*rep.nr_maximal && !ei_binomial_check(rbar, *rep.coefficients))
    st.flag(inst, "e_i != C(nr, i) at maximal nr");

  if (fiber_length(p, rbar) == 0) st.flag(inst, "fiber vanishes already at rbar");
  for (i64 n = rbar + 1; n <= rbar + 3; ++n)
    if (fiber_length(p, n) != 0) st.flag(inst, "fiber persists past rbar");

  for (i64 n = 1; n <= rbar + 2; ++n)
    if (Int(fiber_length(p, n)) != shifted_power_length(p, n) - normal_power_length(p, n))
      st.flag(inst, "fiber does not match the shifted presentation");

  if (!(coefficients_from_hvector(*rep.h) == *rep.coefficients))
    st.flag(inst, "numerator coefficients disagree with the fit");

  if (p.m == 1 && std::gcd(p.a, p.b) == 1 && p.a < p.b) {
    const Report srep = analyze_semigroup(std::vector<i64>{p.a, p.b});
    if (srep.e0 != rep.e0 || srep.e1 != rep.e1 || srep.rbar != rep.rbar ||
        srep.gorenstein.status != rep.gorenstein.status)
      st.flag(inst, "semigroup model disagrees on e0/e1/rbar/gorenstein");
  }

  if (verify) {
    for (i64 n = 1; n <= rbar + 2; ++n)
      if (!jn_equals_in(p, n))
        st.flag(inst, "valuation ideal differs from the closure");
    const std::vector<i64> rungs = ladder(p);
    for (i64 k = 0; k < p.a; ++k)
      for (i64 n = 1; n <= rbar + 2; ++n) {
        const bool by_ladder = k >= 1 && n <= rungs[static_cast<std::size_t>(k - 1)];
        if (xk_membership(p, k, n) != by_ladder)
          st.flag(inst, "x^k membership disagrees with the ladder");
      }
    if (!(brute_fit(rep.profile, p.m) == *rep.coefficients))
      st.flag(inst, "linear-algebra fit disagrees");
    const FiltrationProfile prof(p.m, rep.profile, rep.flags);
    if (!(brute_hvector(prof.increments(), p.m) == *rep.h))
      st.flag(inst, "product h-vector disagrees");
  }

  if (*rep.nr_maximal && rbar >= 2) dim2.emplace(rep.e0, rbar);
}

}  // namespace detail

inline SweepStats sweep_zariski(const ZariskiSweepOptions& o) {
  require(o.a_lo >= 2 && o.a_hi >= o.a_lo, errc::domain, "need 2 <= a_lo <= a_hi");
  require(o.m_lo >= 1 && o.m_hi >= o.m_lo, errc::domain, "need 1 <= m_lo <= m_hi");
  SweepStats st;
  std::set<std::pair<Int, i64>> dim2;
  for (i64 a = o.a_lo; a <= o.a_hi; ++a)
    for (i64 b = std::max(a, o.b_lo); b <= o.b_hi; ++b)
      for (i64 m = o.m_lo; m <= o.m_hi; ++m) {
        const ZariskiParams p{a, b, m};
        std::ostringstream inst;
        inst << "hypersurface(a=" << a << ",b=" << b << ",m=" << m << ")";
        ++st.instances;
        try {
          detail::check_zariski_instance(p, o.verify, inst.str(), st, dim2);
        } catch (const error& e) {
          st.flag(inst.str(), e.what());
        }
      }
  for (const auto& [e0, r] : dim2) {
    std::string why;
    if (!check_dim2_analog(e0, r, &why)) {
      std::ostringstream inst;
      inst << "dim2(e0=" << e0 << ",r=" << r << ")";
      st.flag(inst.str(), why);
    }
  }
  return st;
}

struct SemigroupSweepOptions {
  i64 max_multiplicity = 12;  // cap on the least generator
  i64 bound = 40;             // cap on every generator
  bool verify = false;
};

// Depth-first enumeration of minimal generating sets: start at {m1}, append
// generators above the current maximum that are outside the current span.
// Every semigroup with multiplicity and generators within the caps is
// visited exactly once; gcd-1 nodes are reported.
template <typename Fn>
void enumerate_semigroups(i64 max_multiplicity, i64 bound, Fn&& fn) {
  require(max_multiplicity >= 2, errc::domain, "multiplicity cap must be >= 2");
  require(bound >= max_multiplicity, errc::domain, "entry cap must cover the multiplicity cap");
  std::vector<i64> gens;
  auto rec = [&](auto&& self, i64 g) -> void {
    if (g == 1) fn(static_cast<const std::vector<i64>&>(gens));
    std::vector<char> mem(static_cast<std::size_t>(bound) + 1, 0);
    mem[0] = 1;
    for (i64 s = 1; s <= bound; ++s)
      for (i64 gen : gens) {
        if (gen > s) break;  // gens ascend by construction
        if (mem[static_cast<std::size_t>(s - gen)]) {
          mem[static_cast<std::size_t>(s)] = 1;
          break;
        }
      }
    for (i64 nxt = gens.back() + 1; nxt <= bound; ++nxt)
      if (!mem[static_cast<std::size_t>(nxt)]) {
        gens.push_back(nxt);
        self(self, std::gcd(g, nxt));
        gens.pop_back();
      }
  };
  for (i64 m1 = 2; m1 <= max_multiplicity; ++m1) {
    gens.assign(1, m1);
    rec(rec, m1);
  }
}

namespace detail {

inline void check_semigroup_instance(const NumericalSemigroup& s, bool verify,
                                     const std::string& inst, SweepStats& st,
                                     std::set<std::pair<Int, i64>>& dim2) {
  const Report rep = analyze_semigroup(s);
  if (*rep.symmetric) ++st.symmetric;
  if (rep.gorenstein.holds()) ++st.gorenstein;
  if (*rep.nr_maximal) ++st.maximal;
  const i64 rbar = *rep.rbar;
  const Int& e0 = rep.e0;
  const Int& e1 = rep.e1;

  const FiltrationProfile prof(1, rep.profile, rep.flags);
  const std::vector<Int> c = prof.increments();
  for (i64 n = rbar; n < static_cast<i64>(c.size()); ++n)
    if (c[static_cast<std::size_t>(n)] != e0)
      st.flag(inst, "increments not stabilized past rbar");
  if (c[static_cast<std::size_t>(rbar - 1)] == e0)
    st.flag(inst, "rbar is not minimal for the increments");

  if (rbar == 1 && !(*rep.h == hs_reduction_one(1, e0, 1)))
    st.flag(inst, "reduction-one numerator mismatch");
  if (rbar == 2 && !(*rep.h == hs_reduction_two(1, e0, e1, 1)))
    st.flag(inst, "reduction-two numerator mismatch");
  if (*rep.nr_maximal && rbar >= 2 && !(*rep.h == hs_maximal(1, e0, rbar, 1)))
    st.flag(inst, "maximal numerator mismatch");
  if (!(coefficients_from_hvector(*rep.h) == *rep.coefficients))
    st.flag(inst, "numerator coefficients disagree with the fit");

  if (Int(rbar) > rep.bound) st.flag(inst, "rbar exceeds the bound");
  bool unit_fibers = true;
  for (i64 n = 2; n <= rbar; ++n)
    if (s.fiber_length(n) != 1) { unit_fibers = false; break; }
  if (*rep.nr_maximal != (rbar == 1 || unit_fibers))
    st.flag(inst, "bound attained does not match unit fibers");
  for (i64 n = 1; n <= rbar + 2; ++n)
    if (Int(s.fiber_length(n)) != e0 - c[static_cast<std::size_t>(n - 1)])
      st.flag(inst, "fiber does not match the increment complement");

  if (verify) {
    if (brute_frobenius(s.generators()) != s.frobenius())
      st.flag(inst, "reachability frobenius disagrees");
    if (!(brute_fit(rep.profile, 1) == *rep.coefficients))
      st.flag(inst, "linear-algebra fit disagrees");
    if (!(brute_hvector(c, 1) == *rep.h))
      st.flag(inst, "product h-vector disagrees");
  }

  if (*rep.nr_maximal && rbar >= 2) dim2.emplace(e0, rbar);
}

}  // namespace detail

inline SweepStats sweep_semigroups(const SemigroupSweepOptions& o) {
  SweepStats st;
  std::set<std::pair<Int, i64>> dim2;
  enumerate_semigroups(o.max_multiplicity, o.bound, [&](const std::vector<i64>& gens) {
    ++st.instances;
    std::ostringstream inst;
    inst << "semigroup<";
    for (std::size_t i = 0; i < gens.size(); ++i) inst << (i ? "," : "") << gens[i];
    inst << ">";
    try {
      const NumericalSemigroup s(gens);
      detail::check_semigroup_instance(s, o.verify, inst.str(), st, dim2);
    } catch (const error& e) {
      st.flag(inst.str(), e.what());
    }
  });
  for (const auto& [e0, r] : dim2) {
    std::string why;
    if (!check_dim2_analog(e0, r, &why)) {
      std::ostringstream inst;
      inst << "dim2(e0=" << e0 << ",r=" << r << ")";
      st.flag(inst.str(), why);
    }
  }
  return st;
}

}  // namespace normcone
