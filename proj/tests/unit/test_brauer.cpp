#include <gtest/gtest.h>

#include <numeric>

#include "arithcert/brauer.hpp"
#include "arithcert/error.hpp"

using namespace arithcert;

namespace {

BrauerClass cls(std::initializer_list<std::pair<const long, Rational>> xs) {
  std::map<Place, Rational> inv;
  for (const auto& [p, r] : xs) inv[p == 0 ? Place::real() : Place::finite(static_cast<std::uint64_t>(p))] = r;
  return validate_class(inv);
}

const Rational third(1, 3), two_thirds(2, 3), half(1, 2);

}  // namespace

TEST(BrauerClass, Validation) {
  EXPECT_TRUE(validate_class({}).is_trivial());
  const BrauerClass h = cls({{2, half}, {0, half}});
  EXPECT_EQ(h.at(Place::real()), half);
  EXPECT_EQ(index(h), 2);
  EXPECT_THROW(cls({{5, third}}), InvalidInput);
  EXPECT_THROW(cls({{0, third}, {5, two_thirds}}), InvalidInput);
  EXPECT_THROW(cls({{5, Rational(4, 3)}, {7, two_thirds}}), InvalidInput);
  EXPECT_THROW(validate_class({{Place::real(), half}, {Place::finite(2), half}}, BaseField::ImaginaryQuadratic),
               InvalidInput);
}

TEST(BrauerClass, HamiltonQuaternionsMatchHilbertSymbol) {
  std::map<Place, Rational> inv;
  for (const Place& v : hilbert_support(-1, -1)) inv[v] = half;
  EXPECT_EQ(validate_class(inv), cls({{2, half}, {0, half}}));
}

TEST(BrauerClass, Calculus) {
  const BrauerClass x = cls({{5, third}, {7, two_thirds}});
  const BrauerClass y = cls({{11, third}, {13, two_thirds}});
  EXPECT_TRUE(tensor(x, opposite(x)).is_trivial());
  EXPECT_EQ(index(x), 3);
  EXPECT_EQ(index(tensor(x, y)), 3);
  EXPECT_EQ(tensor(x, y), tensor(y, x));
  EXPECT_EQ(opposite(opposite(x)), x);
  EXPECT_EQ(local_index(x, Place::finite(5)), 3);
  EXPECT_EQ(local_index(x, Place::finite(11)), 1);
}

TEST(BrauerClass, IndexIsLcmOfDenominators) {
  for (long a = 1; a < 6; ++a) {
    for (long b = 1; b < 4; ++b) {
      const Rational ra(a, 6), rb(b, 4);
      Rational rest = Rational(2) - ra - rb;
      while (rest >= 1) rest -= 1;
      const BrauerClass c = rest == 0 ? cls({{3, ra}, {5, rb}}) : cls({{3, ra}, {5, rb}, {7, rest}});
      Integer expected = 1;
      for (const auto& [v, r] : c.invariants()) {
        Integer den = r.get_den();
        mpz_lcm(expected.get_mpz_t(), expected.get_mpz_t(), den.get_mpz_t());
      }
      EXPECT_EQ(index(c), expected);
    }
  }
}

TEST(Csa, Isomorphism) {
  const CSA a{cls({{5, third}, {7, two_thirds}, {11, third}, {13, two_thirds}}), 2};
  const CSA b{cls({{5, third}, {7, two_thirds}, {11, two_thirds}, {13, third}}), 2};
  EXPECT_TRUE(csa_isomorphic(a, a));
  EXPECT_FALSE(csa_isomorphic(a, b));
  EXPECT_FALSE(csa_isomorphic(a, opposite(b)));
  EXPECT_TRUE(csa_locally_isomorphic(a, b, Place::finite(5)));
  EXPECT_FALSE(csa_locally_isomorphic(a, b, Place::finite(11)));
  EXPECT_EQ(a.degree(), 6);
  EXPECT_FALSE(csa_isomorphic(a, CSA{a.cls, 3}));
}

TEST(DivisionPair, DegreeThree) {
  const PairReport r = find_division_pair(3, 2);
  EXPECT_EQ(r.c, cls({{5, third}, {7, two_thirds}}));
  EXPECT_EQ(r.dcls, cls({{11, third}, {13, two_thirds}}));
  EXPECT_EQ(r.matrix_degree(), 6u);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(index(r.e1), 3);
  EXPECT_EQ(index(r.e2), 3);
  EXPECT_FALSE(csa_isomorphic(r.a, r.b));
  EXPECT_FALSE(csa_isomorphic(r.a, opposite(r.b)));
}

TEST(DivisionPair, LocallyPlusMinusEverywhere) {
  for (unsigned long d : {3ul, 4ul, 5ul, 6ul}) {
    const PairReport r = find_division_pair(d, 2);
    ASSERT_TRUE(r.all_pass()) << d;
    std::set<Place> support;
    for (const auto& [v, x] : r.e1.invariants()) support.insert(v);
    for (const auto& [v, x] : r.e2.invariants()) support.insert(v);
    for (const Place& v : support) {
      const Rational a = r.e1.at(v), b = r.e2.at(v);
      Rational sum = a + b;
      while (sum >= 1) sum -= 1;
      EXPECT_TRUE(a == b || sum == 0) << v.to_string();
    }
    const PairReport again = check_pair(r.c, r.dcls, d, 2, false);
    EXPECT_TRUE(again.all_pass());
  }
}

TEST(DivisionPair, RamifiedAtReal) {
  const PairReport r = find_division_pair(4, 2, true);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.c.at(Place::real()), half);
  EXPECT_EQ(index(r.c), 4);
  EXPECT_THROW(find_division_pair(3, 2, true), InvalidInput);
}

TEST(DivisionPair, Preconditions) {
  EXPECT_THROW(find_division_pair(2, 2), InvalidInput);
  EXPECT_THROW(find_division_pair(3, 1), InvalidInput);
}

TEST(DivisionPair, CheckPairDetectsBadInput) {
  const BrauerClass c = cls({{5, third}, {7, two_thirds}});
  const PairReport r = check_pair(c, c, 3, 2, false);
  EXPECT_FALSE(r.disjoint_support);
  EXPECT_FALSE(r.all_pass());
}
