#include <gtest/gtest.h>

#include "arithcert/error.hpp"
#include "arithcert/localsym.hpp"
#include "oracles.hpp"

using namespace arithcert;

namespace {

const std::vector<std::uint64_t> kPrimes{2, 3, 5, 7, 11, 13};

std::vector<Place> small_places() {
  std::vector<Place> out{Place::real()};
  for (auto p : kPrimes) out.push_back(Place::finite(p));
  return out;
}

std::vector<Rational> sample_values() {
  std::vector<Rational> out;
  for (long n = -12; n <= 12; ++n) {
    if (n == 0) continue;
    for (long d : {1, 2, 3, 5, 9}) {
      Rational q(n, d);
      q.canonicalize();
      out.push_back(q);
    }
  }
  return out;
}

}  // namespace

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre(1, 7), 1);
  EXPECT_EQ(legendre(2, 5), -1);
  EXPECT_EQ(legendre(10, 5), 0);
  EXPECT_EQ(legendre(-1, 13), 1);
  EXPECT_EQ(legendre(-1, 11), -1);
}

TEST(Legendre, MatchesSquaresModP) {
  for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
    std::vector<bool> sq(p, false);
    for (std::uint64_t z = 1; z < p; ++z) sq[z * z % p] = true;
    for (long a = -40; a <= 40; ++a) {
      const long r = ((a % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p);
      const int expected = r == 0 ? 0 : (sq[r] ? 1 : -1);
      EXPECT_EQ(legendre(a, p), expected) << a << " mod " << p;
    }
  }
}

TEST(Legendre, Errors) {
  EXPECT_THROW(legendre(3, 2), InvalidInput);
  EXPECT_THROW(legendre(3, 9), NotPrime);
}

TEST(Hilbert, Examples) {
  EXPECT_EQ(hilbert(-1, -1, Place::real()), -1);
  EXPECT_EQ(hilbert(2, 5, Place::finite(5)), -1);
  EXPECT_EQ(hilbert(-1, -1, Place::finite(2)), -1);
  EXPECT_EQ(hilbert(-1, -1, Place::finite(3)), 1);
  for (const Place& v : small_places()) EXPECT_EQ(hilbert(1, 7, v), 1);
}

TEST(Hilbert, ZeroRejected) {
  EXPECT_THROW(hilbert(0, 3, Place::finite(3)), ZeroInput);
  EXPECT_THROW(hilbert(3, 0, Place::real()), InvalidInput);
}

TEST(Hilbert, BruteForceSmall) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    oracle::HilbertTable table(p);
    for (const Rational& a : sample_values()) {
      for (const Rational& b : sample_values()) {
        ASSERT_EQ(hilbert(a, b, Place::finite(p)), table(a, b)) << a << " " << b << " at " << p;
      }
    }
  }
}

TEST(Hilbert, DirectOracleSpotChecks) {
  EXPECT_EQ(oracle::hilbert(2, 5, 5), -1);
  EXPECT_EQ(oracle::hilbert(-1, -1, 2), -1);
  EXPECT_EQ(oracle::hilbert(-1, -1, 3), 1);
  EXPECT_EQ(oracle::hilbert(Rational(3, 4), 7, 7), hilbert(Rational(3, 4), 7, Place::finite(7)));
}

TEST(Hilbert, SymmetryBimultiplicativitySquares) {
  const auto vals = sample_values();
  for (const Place& v : small_places()) {
    for (std::size_t i = 0; i < vals.size(); i += 3) {
      for (std::size_t j = 0; j < vals.size(); j += 5) {
        const Rational& a = vals[i];
        const Rational& b = vals[j];
        EXPECT_EQ(hilbert(a, b, v), hilbert(b, a, v));
        const Rational& a2 = vals[(i * 7 + 3) % vals.size()];
        EXPECT_EQ(hilbert(a * a2, b, v), hilbert(a, b, v) * hilbert(a2, b, v));
        EXPECT_EQ(hilbert(a * Rational(9, 4), b, v), hilbert(a, b, v));
      }
    }
  }
}

TEST(SquareClass, Examples) {
  EXPECT_EQ(square_class(9, Place::real()).representative, 1);
  EXPECT_EQ(square_class(-3, Place::real()).representative, -1);
  EXPECT_EQ(square_class(18, Place::finite(3)).representative, 2);
  EXPECT_EQ(square_class(4, Place::finite(2)).representative, 1);
  EXPECT_THROW(square_class(0, Place::finite(2)), InvalidInput);
}

TEST(SquareClass, RepresentativesAreCanonical) {
  for (const Place& v : small_places()) {
    std::set<Rational> reps;
    for (const Rational& a : sample_values()) reps.insert(square_class(a, v).representative);
    if (v.is_real()) {
      EXPECT_EQ(reps, (std::set<Rational>{-1, 1}));
    } else if (v.is_dyadic()) {
      EXPECT_EQ(reps, (std::set<Rational>{-10, -5, -2, -1, 1, 2, 5, 10}));
    } else if (v.prime() <= 11) {
      EXPECT_EQ(reps.size(), 4u);
    } else {
      EXPECT_EQ(reps.size(), 2u);  // no sample value is divisible by 13
    }
  }
}

TEST(SquareClass, EqualClassIffQuotientIsSquare) {
  // a/b is a local square iff (a/b, c) = 1 for every c: use the Hilbert
  // pairing against all class representatives as the reference.
  const auto vals = sample_values();
  for (const Place& v : small_places()) {
    for (std::size_t i = 0; i < vals.size(); i += 4) {
      for (std::size_t j = 0; j < vals.size(); j += 7) {
        bool pairing_trivial = true;
        for (long c : {-10, -5, -3, -2, -1, 2, 3, 5, 7, 10, 11, 13, 26, 39}) {
          pairing_trivial = pairing_trivial && hilbert(vals[i] / vals[j], c, v) == 1;
        }
        EXPECT_EQ(same_square_class(vals[i], vals[j], v), pairing_trivial);
      }
    }
  }
}

TEST(ProductFormula, Examples) {
  EXPECT_TRUE(product_formula_check(2, 5));
  EXPECT_EQ(hilbert_support(2, 5), (std::vector<Place>{Place::finite(2), Place::finite(5)}));
  EXPECT_TRUE(product_formula_check(1, 1));
  EXPECT_TRUE(hilbert_support(1, 1).empty());
  EXPECT_TRUE(product_formula_check(-1, -1));
  EXPECT_EQ(hilbert_support(-1, -1), (std::vector<Place>{Place::real(), Place::finite(2)}));
}

TEST(Place, ParseAndPrint) {
  EXPECT_EQ(Place::parse("real"), Place::real());
  EXPECT_EQ(Place::parse("7").prime(), 7u);
  EXPECT_EQ(Place::finite(13).to_string(), "13");
  EXPECT_THROW(Place::parse("8"), NotPrime);
  EXPECT_THROW(Place::parse("x"), InvalidInput);
}
