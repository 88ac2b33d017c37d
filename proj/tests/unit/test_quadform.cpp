#include <gtest/gtest.h>

#include "arithcert/error.hpp"
#include "arithcert/quadform.hpp"
#include "oracles.hpp"

using namespace arithcert;

namespace {

QuadForm form(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return QuadForm(v);
}

QFProfile profile(unsigned dim, long det, Signature sig, std::set<std::uint64_t> negative) {
  QFProfile p;
  p.dim = dim;
  p.det = det;
  p.signature = sig;
  for (auto q : negative) p.hasse_negative.insert(Place::finite(q));
  return p;
}

}  // namespace

TEST(QuadForm, Construction) {
  EXPECT_THROW(QuadForm(std::vector<Rational>{}), InvalidInput);
  EXPECT_THROW(form({1, 0}), InvalidInput);
  EXPECT_EQ(form({2, -3}).determinant(), -6);
}

TEST(Hasse, Examples) {
  for (auto p : {2, 3, 5, 7}) EXPECT_EQ(hasse_invariant(form({1, 1, 1, 1}), Place::finite(p)), 1);
  EXPECT_EQ(hasse_invariant(form({1, -1, 1, -1}), Place::finite(3)), 1);
  EXPECT_EQ(hasse_invariant(form({1, -1, 1, -1}), Place::finite(2)), -1);
}

TEST(Invariants, Examples) {
  const QFProfile h = invariants(form({1, -1}));
  EXPECT_EQ(h.dim, 2u);
  EXPECT_EQ(h.det, -1);
  EXPECT_EQ(h.signature, (Signature{1, 1}));
  EXPECT_TRUE(h.hasse_negative.empty());
  const QFProfile four = invariants(form({1, 1, 1, 1}));
  EXPECT_EQ(four.det, 1);
  EXPECT_EQ(four.signature, (Signature{4, 0}));
  EXPECT_TRUE(four.hasse_negative.empty());
  const QFProfile p25 = invariants(form({2, 5}));
  EXPECT_EQ(p25.det, 10);
  EXPECT_EQ(p25.hasse_negative, (std::set<Place>{Place::finite(2), Place::finite(5)}));
}

TEST(WittIndex, Examples) {
  for (auto v : {Place::real(), Place::finite(2), Place::finite(3), Place::finite(7)}) {
    EXPECT_EQ(witt_index(form({1, -1}), v), 1u);
  }
  EXPECT_EQ(witt_index(form({1, 1, 1, 1}), Place::finite(2)), 0u);
  EXPECT_EQ(witt_index(form({1, 1, 1, 1}), Place::finite(3)), 2u);
  EXPECT_EQ(witt_index(form({1, 2, -3, -5, 7}), Place::real()), 2u);
}

TEST(WittIndex, OracleSmallDimensions) {
  const std::vector<long> entries{1, -1, 2, -2, 3, -3, 5, -5};
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (long a : entries) {
      for (long b : entries) {
        EXPECT_EQ(witt_index(form({a, b}), Place::finite(p)) > 0, oracle::isotropic_mod({a, b}, p))
            << a << "," << b << " at " << p;
        for (long c : entries) {
          EXPECT_EQ(witt_index(form({a, b, c}), Place::finite(p)) > 0, oracle::isotropic_mod({a, b, c}, p))
              << a << "," << b << "," << c << " at " << p;
        }
      }
    }
  }
}

TEST(WittIndex, Bounds) {
  const std::vector<long> entries{1, -1, 2, 3, -5, 7, -11, 6};
  for (std::size_t n = 1; n <= entries.size(); ++n) {
    std::vector<Rational> v(entries.begin(), entries.begin() + static_cast<long>(n));
    const QuadForm f(v);
    for (auto p : {2, 3, 5, 7, 11}) {
      const unsigned w = witt_index(f, Place::finite(p));
      EXPECT_LE(2 * w, n);
      EXPECT_LE(n - 2 * w, 4u);
    }
  }
}

TEST(WittIndex, SumOfFourSquaresHyperbolicAtOddPrimes) {
  for (std::uint64_t p = 3; p <= 97; p += 2) {
    if (!is_prime(p)) continue;
    EXPECT_EQ(witt_index(form({1, 1, 1, 1}), Place::finite(p)), 2u) << p;
  }
}

TEST(Isometric, Examples) {
  EXPECT_TRUE(isometric(form({1, -1}), form({2, -2})));
  EXPECT_FALSE(isometric(form({1, 1, 1, 1}), form({1, -1, 1, -1})));
  EXPECT_TRUE(isometric(form({3, 5, 7}), form({3, 5, 7})));
}

TEST(Isometric, PermutationAndSquareScaling) {
  const QuadForm f = form({3, -2, 7, 5});
  EXPECT_TRUE(isometric(f, form({5, 7, -2, 3})));
  EXPECT_TRUE(isometric(f, QuadForm({Rational(3 * 4), Rational(-2, 9), 7, Rational(5 * 25)})));
  EXPECT_FALSE(isometric(f, form({3, -2, 7, 10})));
}

TEST(Admissible, Examples) {
  EXPECT_TRUE(admissible(invariants(form({1, -1}))));
  // signature (2,2) has real Hasse invariant -1
  EXPECT_TRUE(admissible(profile(4, 1, {2, 2}, {3})));
  EXPECT_FALSE(admissible(profile(4, 1, {2, 2}, {3, 5})));
  EXPECT_EQ(check_admissible(profile(4, 1, {2, 2}, {3, 5})).violated, "product-formula");
  EXPECT_EQ(check_admissible(profile(3, 1, {2, 1}, {})).violated, "det-sign");
  EXPECT_FALSE(admissible(profile(1, 1, {1, 0}, {3, 5})));
  EXPECT_THROW(admissible(profile(4, 1, {2, 1}, {})), InvalidInput);
}

TEST(Realize, Examples) {
  const QFProfile hyp = profile(2, -1, {1, 1}, {});
  EXPECT_EQ(invariants(realize(hyp)), hyp);
  const QFProfile four = profile(4, 1, {4, 0}, {});
  EXPECT_TRUE(isometric(realize(four), form({1, 1, 1, 1})));
  const QFProfile p3 = profile(4, 1, {2, 2}, {3});
  EXPECT_EQ(invariants(realize(p3)), p3);
  EXPECT_THROW(realize(profile(4, 1, {2, 2}, {3, 5})), Inadmissible);
}

TEST(Realize, Deterministic) {
  const QFProfile p = profile(3, -6, {2, 1}, {2, 3});
  ASSERT_TRUE(admissible(p));
  EXPECT_EQ(realize(p), realize(p));
}
