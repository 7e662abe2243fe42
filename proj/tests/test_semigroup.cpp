#include <catch2/catch_amalgamated.hpp>

#include <normcone/semigroup.hpp>

#include <algorithm>
#include <vector>

using namespace normcone;

namespace {

std::vector<Int> iv(std::initializer_list<long long> xs) {
  return std::vector<Int>(xs.begin(), xs.end());
}

bool applied(const Report& rep, const char* criterion) {
  return std::find(rep.criteria_applied.begin(), rep.criteria_applied.end(),
                   std::string(criterion)) != rep.criteria_applied.end();
}

}  // namespace

TEST_CASE("construction validates the generating set") {
  try {
    NumericalSemigroup({});
    FAIL("expected EmptyGenerators");
  } catch (const error& e) {
    CHECK(e.code() == errc::empty_generators);
  }
  try {
    NumericalSemigroup({2, 4});
    FAIL("expected GcdNotOne");
  } catch (const error& e) {
    CHECK(e.code() == errc::gcd_not_one);
  }
  CHECK_THROWS_AS(NumericalSemigroup({0, 3}), error);
  CHECK_THROWS_AS(NumericalSemigroup({-2, 3}), error);

  // generators are stored sorted and deduplicated
  const NumericalSemigroup s({7, 4, 6, 4});
  CHECK(s.generators() == std::vector<i64>({4, 6, 7}));
  CHECK(s.multiplicity() == 4);
}

TEST_CASE("membership, frobenius number, and symmetry") {
  const NumericalSemigroup s({3, 4});
  CHECK(s.frobenius() == 5);
  CHECK(s.gaps() == 3);  // 1, 2, 5
  for (i64 x : {0, 3, 4, 6, 7, 8, 100}) CHECK(s.contains(x));
  for (i64 x : {1, 2, 5}) CHECK_FALSE(s.contains(x));
  CHECK_FALSE(s.contains(-1));
  CHECK(s.symmetric());

  CHECK(NumericalSemigroup({2, 7}).frobenius() == 5);
  CHECK(NumericalSemigroup({4, 5, 6}).frobenius() == 7);
  CHECK(NumericalSemigroup({4, 6, 7}).frobenius() == 9);
  CHECK(NumericalSemigroup({4, 6, 7}).symmetric());

  // even frobenius number: F/2 would have to pair with itself
  const NumericalSemigroup t({3, 5, 7});
  CHECK(t.frobenius() == 4);
  CHECK_FALSE(t.symmetric());
  const NumericalSemigroup u({5, 6, 7, 8, 9});
  CHECK(u.frobenius() == 4);
  CHECK_FALSE(u.symmetric());

  // the whole of N
  const NumericalSemigroup n({1});
  CHECK(n.frobenius() == -1);
  CHECK(n.gaps() == 0);
  CHECK(n.contains(0));
  CHECK(n.contains(1));
  CHECK(n.symmetric());

  const NumericalSemigroup mc({6, 9, 20});
  CHECK(mc.frobenius() == 43);
  CHECK(mc.gaps() == 22);
  CHECK(mc.symmetric());
}

TEST_CASE("normal power lengths count members below multiples of m1") {
  const NumericalSemigroup s({3, 4});
  const std::vector<Int> expected = {0, 1, 3, 6, 9, 12, 15};
  for (i64 n = 0; n < static_cast<i64>(expected.size()); ++n)
    CHECK(s.normal_power_length(n) == expected[static_cast<std::size_t>(n)]);
  // far beyond the membership table: m1*n minus the gap count
  CHECK(s.normal_power_length(10) == 27);
  CHECK(s.normal_power_length(0) == 0);

  const NumericalSemigroup t({2, 7});
  const std::vector<Int> expected_t = {0, 1, 2, 3, 5, 7, 9, 11};
  for (i64 n = 0; n < static_cast<i64>(expected_t.size()); ++n)
    CHECK(t.normal_power_length(n) == expected_t[static_cast<std::size_t>(n)]);
}

TEST_CASE("normal reduction numbers") {
  CHECK(NumericalSemigroup({3, 4}).normal_reduction_number() == 2);
  CHECK(NumericalSemigroup({2, 7}).normal_reduction_number() == 3);
  CHECK(NumericalSemigroup({4, 5, 6}).normal_reduction_number() == 2);
  CHECK(NumericalSemigroup({4, 6, 7}).normal_reduction_number() == 3);
  CHECK(NumericalSemigroup({2, 3}).normal_reduction_number() == 1);
  CHECK(NumericalSemigroup({6, 9, 20}).normal_reduction_number() == 8);
  CHECK(NumericalSemigroup({5, 6, 7, 8, 9}).normal_reduction_number() == 1);
  CHECK(NumericalSemigroup({1}).normal_reduction_number() == 1);
}

TEST_CASE("fiber lengths") {
  const NumericalSemigroup s({3, 4});
  CHECK(s.fiber_length(1) == 2);
  CHECK(s.fiber_length(2) == 1);
  CHECK(s.fiber_length(3) == 0);
  CHECK_THROWS_AS(s.fiber_length(0), error);

  const NumericalSemigroup t({4, 6, 7});
  CHECK(t.fiber_length(1) == 3);
  CHECK(t.fiber_length(2) == 1);
  CHECK(t.fiber_length(3) == 1);
  CHECK(t.fiber_length(4) == 0);

  const NumericalSemigroup u({2, 7});
  CHECK(u.fiber_length(1) == 1);
  CHECK(u.fiber_length(2) == 1);
  CHECK(u.fiber_length(3) == 1);
  CHECK(u.fiber_length(4) == 0);

  // fiber length always equals e0 minus the profile increment
  for (i64 n = 1; n <= 5; ++n)
    CHECK(Int(t.fiber_length(n)) ==
          Int(t.multiplicity()) - (t.normal_power_length(n) - t.normal_power_length(n - 1)));
}

TEST_CASE("normal_profile carries the table and the hypothesis flags") {
  const NumericalSemigroup s({3, 4});
  try {
    normal_profile(s, 3);  // needs rbar + 2 = 4
    FAIL("expected RangeTooSmall");
  } catch (const error& e) {
    CHECK(e.code() == errc::range_too_small);
  }
  const FiltrationProfile p = normal_profile(s, 6);
  CHECK(p.dim() == 1);
  CHECK(p.table() == iv({0, 1, 3, 6, 9, 12, 15}));
  CHECK(p.flags().ambient_gorenstein);
  CHECK(p.flags().assoc_graded_cm);
  CHECK(p.flags().depth_at_least_dim_minus_1);

  // ambient flag tracks symmetry
  CHECK_FALSE(normal_profile(NumericalSemigroup({3, 5, 7}), 6).flags().ambient_gorenstein);
}

TEST_CASE("analysis of <3,4>") {
  const Report rep = analyze_semigroup({3, 4});
  CHECK(rep.family == "semigroup");
  CHECK(rep.generators == std::vector<i64>({3, 4}));
  CHECK(rep.dim == 1);
  CHECK(rep.frobenius == 5);
  CHECK(rep.symmetric == true);
  CHECK(rep.e0 == 3);
  CHECK(rep.e1 == 3);
  CHECK(rep.lambda == 1);
  CHECK(rep.rbar == 2);
  CHECK(rep.nr == 2);
  CHECK(rep.bound == 2);
  CHECK(rep.nr_maximal == true);
  REQUIRE(rep.h.has_value());
  CHECK(rep.h->coeffs() == iv({1, 1, 1}));
  REQUIRE(rep.coefficients.has_value());
  CHECK(rep.coefficients->e == iv({3, 3}));
  CHECK(rep.postulation_known);
  REQUIRE(rep.postulation.has_value());
  CHECK(*rep.postulation == 1);
  CHECK(rep.profile == iv({0, 1, 3, 6, 9, 12, 15}));  // default window rbar + 4
  CHECK(rep.gorenstein.holds());
  CHECK(applied(rep, criteria::reduction_two_coefficients));
  CHECK(applied(rep, criteria::maximal_nr_hilbert_series));
  CHECK(applied(rep, criteria::h_vector_symmetry));
  CHECK_FALSE(applied(rep, criteria::reduction_one_coefficients));
}

TEST_CASE("analysis of <2,7>") {
  const Report rep = analyze_semigroup({2, 7});
  CHECK(rep.e0 == 2);
  CHECK(rep.e1 == 3);
  CHECK(rep.rbar == 3);
  CHECK(rep.bound == 3);
  CHECK(rep.nr_maximal == true);
  REQUIRE(rep.h.has_value());
  CHECK(rep.h->coeffs() == iv({1, 0, 0, 1}));
  REQUIRE(rep.postulation.has_value());
  CHECK(*rep.postulation == 2);
  CHECK(rep.gorenstein.holds());
  CHECK(applied(rep, criteria::maximal_nr_hilbert_series));
  CHECK(applied(rep, criteria::h_vector_symmetry));
}

TEST_CASE("analysis of <4,6,7>: maximal but not Gorenstein") {
  const Report rep = analyze_semigroup({4, 6, 7});
  CHECK(rep.e0 == 4);
  CHECK(rep.e1 == 5);
  CHECK(rep.rbar == 3);
  CHECK(rep.bound == 3);
  CHECK(rep.nr_maximal == true);
  REQUIRE(rep.h.has_value());
  CHECK(rep.h->coeffs() == iv({1, 2, 0, 1}));
  REQUIRE(rep.postulation.has_value());
  CHECK(*rep.postulation == 2);
  CHECK(rep.gorenstein.status == Status::fails);
  CHECK(applied(rep, criteria::maximal_nr_hilbert_series));
  CHECK(applied(rep, criteria::h_vector_symmetry));
}

TEST_CASE("coefficient criteria at small reduction numbers") {
  const Report r1 = analyze_semigroup({2, 3});
  CHECK(r1.e0 == 2);
  CHECK(r1.e1 == 1);
  CHECK(r1.rbar == 1);
  REQUIRE(r1.h.has_value());
  CHECK(r1.h->coeffs() == iv({1, 1}));
  CHECK(r1.gorenstein.holds());
  CHECK(applied(r1, criteria::reduction_one_coefficients));

  const Report r2 = analyze_semigroup({2, 5});
  CHECK(r2.e0 == 2);
  CHECK(r2.e1 == 2);
  CHECK(r2.rbar == 2);
  REQUIRE(r2.h.has_value());
  CHECK(r2.h->coeffs() == iv({1, 0, 1}));
  CHECK(r2.gorenstein.holds());
  CHECK(applied(r2, criteria::reduction_two_coefficients));

  const Report r3 = analyze_semigroup({4, 5, 6});
  CHECK(r3.e0 == 4);
  CHECK(r3.e1 == 4);
  CHECK(r3.rbar == 2);
  REQUIRE(r3.h.has_value());
  CHECK(r3.h->coeffs() == iv({1, 2, 1}));
  CHECK(r3.gorenstein.holds());
}

TEST_CASE("non-symmetric semigroups leave the verdict inapplicable") {
  const Report rep = analyze_semigroup({3, 5, 7});
  CHECK(rep.symmetric == false);
  CHECK(rep.e0 == 3);
  CHECK(rep.e1 == 3);
  CHECK(rep.rbar == 2);
  CHECK(rep.nr_maximal == true);
  CHECK(rep.gorenstein.status == Status::inapplicable);
  REQUIRE_FALSE(rep.gorenstein.reasons.empty());
  CHECK(rep.gorenstein.reasons.front().criterion == criteria::hypothesis_gate);

  const Report deep = analyze_semigroup({5, 6, 7, 8, 9});
  CHECK(deep.symmetric == false);
  CHECK(deep.e0 == 5);
  CHECK(deep.e1 == 4);
  CHECK(deep.rbar == 1);
  CHECK(deep.nr_maximal == true);
  REQUIRE(deep.h.has_value());
  CHECK(deep.h->coeffs() == iv({1, 4}));
  CHECK(deep.gorenstein.status == Status::inapplicable);
}

TEST_CASE("analysis of the trivial semigroup <1>") {
  const Report rep = analyze_semigroup({1});
  CHECK(rep.frobenius == -1);
  CHECK(rep.e0 == 1);
  CHECK(rep.e1 == 0);
  CHECK(rep.rbar == 1);
  REQUIRE(rep.h.has_value());
  CHECK(rep.h->coeffs() == iv({1}));
  // H(n) = n agrees with its polynomial everywhere, even at n = 0
  CHECK(rep.postulation_known);
  CHECK_FALSE(rep.postulation.has_value());
  // the reduction-number-one coefficient test is a convention mismatch here
  // (the true reduction number is 0); symmetry alone decides
  CHECK(rep.gorenstein.holds());
  CHECK(rep.criteria_applied == std::vector<std::string>({criteria::h_vector_symmetry}));
}

TEST_CASE("analysis of <6,9,20>") {
  const Report rep = analyze_semigroup({6, 9, 20});
  CHECK(rep.symmetric == true);
  CHECK(rep.e0 == 6);
  CHECK(rep.e1 == 22);
  CHECK(rep.rbar == 8);
  CHECK(rep.bound == 18);
  CHECK(rep.nr_maximal == false);
  REQUIRE(rep.h.has_value());
  CHECK(rep.h->coeffs() == iv({1, 1, 0, 1, 1, 0, 1, 0, 1}));
  REQUIRE(rep.postulation.has_value());
  CHECK(*rep.postulation == 7);
  CHECK(rep.gorenstein.status == Status::fails);
  // symmetric semigroup ring whose tangent cone still is not Gorenstein
  CHECK(applied(rep, criteria::h_vector_symmetry));
}

TEST_CASE("analysis validates the requested window") {
  try {
    analyze_semigroup({3, 4}, 4);  // needs rbar + 3 = 5
    FAIL("expected RangeTooSmall");
  } catch (const error& e) {
    CHECK(e.code() == errc::range_too_small);
  }
  const Report rep = analyze_semigroup({3, 4}, 5);
  CHECK(rep.profile == iv({0, 1, 3, 6, 9, 12}));
  CHECK(rep.e1 == 3);
  CHECK(rep.gorenstein.holds());
}
