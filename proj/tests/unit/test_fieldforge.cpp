#include <gtest/gtest.h>

#include "arithcert/error.hpp"
#include "arithcert/fieldforge.hpp"
#include "arithcert/intpoly.hpp"
#include "oracles.hpp"

using namespace arithcert;

namespace {

std::vector<long> longs(const IntPoly& f) {
  std::vector<long> out;
  for (const auto& c : f.coefficients()) out.push_back(c.get_si());
  return out;
}

}  // namespace

TEST(IntPoly, ParseAndPrint) {
  const IntPoly f = IntPoly::parse("[2, -4, 0, 0, 0, 1]");
  EXPECT_EQ(f, (IntPoly{2, -4, 0, 0, 0, 1}));
  EXPECT_EQ(f.to_string(), "x^5 - 4*x + 2");
  EXPECT_EQ(IntPoly::parse("1 0 1").degree(), 2u);
  EXPECT_THROW(IntPoly::parse("5"), InvalidInput);
  EXPECT_THROW(IntPoly::parse("1, x"), InvalidInput);
}

TEST(Sturm, Examples) {
  EXPECT_EQ(sturm_count(IntPoly{1, 0, 1}), 0u);
  EXPECT_EQ(sturm_count(IntPoly{-1, 0, 1}), 2u);
  EXPECT_EQ(sturm_count(IntPoly{2, -4, 0, 0, 0, 1}), 3u);
  EXPECT_THROW(sturm_count(IntPoly{1, 2, 1}), InvalidInput);
}

TEST(Sturm, MatchesGridSignChanges) {
  // Roots of these are separated by far more than the grid step.
  const std::vector<IntPoly> polys{
      {2, -4, 0, 0, 0, 1}, {-2, 0, 0, 1}, {-1, -4, 0, 1}, {1, -3, 0, 0, 0, 1}, {0, -1, 0, 1},
      {-6, 11, -6, 1},     {1, 0, 0, 0, 1}, {-1, -1, 0, 0, 0, 0, 1}, {24, -50, 35, -10, 1}};
  for (const IntPoly& f : polys) EXPECT_EQ(sturm_count(f), oracle::grid_sign_changes(longs(f))) << f.to_string();
}

TEST(FactorModP, Examples) {
  EXPECT_EQ(factor_degrees_mod_p(IntPoly{1, 0, 1}, 5), (std::vector<unsigned>{1, 1}));
  EXPECT_EQ(factor_degrees_mod_p(IntPoly{1, 0, 1}, 3), (std::vector<unsigned>{2}));
  EXPECT_EQ(factor_degrees_mod_p(IntPoly{0, -1, 0, 1}, 5), (std::vector<unsigned>{1, 1, 1}));
  EXPECT_THROW(factor_degrees_mod_p(IntPoly{1, 0, 1}, 2), BadPrime);
  EXPECT_THROW(factor_degrees_mod_p(IntPoly{1, 0, 1}, 9), NotPrime);
  EXPECT_FALSE(try_factor_degrees_mod_p(IntPoly{1, 0, 3}, 3).has_value());
}

TEST(FactorModP, MatchesTrialDivision) {
  const std::vector<IntPoly> polys{{2, -4, 0, 0, 0, 1}, {-2, 0, 0, 1}, {1, 0, 0, 0, 1},
                                   {1, 1, 1, 1, 1},     {-1, -4, 0, 1}, {3, 1, 0, 2, 0, 0, 1}};
  for (const IntPoly& f : polys) {
    for (std::uint64_t p : {3, 5, 7, 11, 13}) {
      const auto ours = try_factor_degrees_mod_p(f, p);
      const auto brute = oracle::factor_degrees_by_trial(longs(f), p);
      if (!ours) {
        EXPECT_TRUE(brute.empty()) << f.to_string() << " mod " << p;
        continue;
      }
      EXPECT_EQ(*ours, brute) << f.to_string() << " mod " << p;
    }
  }
}

TEST(Irreducible, Examples) {
  EXPECT_TRUE(is_irreducible(IntPoly{2, -4, 0, 0, 0, 1}));
  EXPECT_FALSE(is_irreducible(IntPoly{-1, 0, 1}));
  EXPECT_TRUE(is_irreducible(IntPoly{-2, 0, 0, 1}));
  EXPECT_TRUE(is_irreducible(IntPoly{1, 0, 0, 0, 1}));
  EXPECT_FALSE(is_irreducible(IntPoly{4, 0, 0, 0, 1}));  // (x^2+2x+2)(x^2-2x+2)
  EXPECT_EQ(eisenstein_prime(IntPoly{2, -4, 0, 0, 0, 1}), 2u);
}

TEST(CertifySn, Examples) {
  const SnCertificate q = certify_sn(IntPoly{2, -4, 0, 0, 0, 1});
  EXPECT_EQ(q.conclusion, GaloisConclusion::Sn);
  EXPECT_EQ(q.route, "two-nonreal-roots");
  EXPECT_EQ(q.real_roots, 3u);
  EXPECT_EQ(check_sn_certificate(q), "");
  EXPECT_EQ(certify_sn(IntPoly{-2, 0, 0, 1}).conclusion, GaloisConclusion::Sn);
  EXPECT_THROW(certify_sn(IntPoly{-1, 0, 1}), InvalidInput);
}

TEST(CertifySn, NeverCertifiesSmallGaloisGroups) {
  // x^4+1 (Klein four), 5th cyclotomic (C4), x^3-3x-1 (C3), x^4-2 (D4).
  for (const IntPoly& f : {IntPoly{1, 0, 0, 0, 1}, IntPoly{1, 1, 1, 1, 1}, IntPoly{-1, -3, 0, 1},
                           IntPoly{-2, 0, 0, 0, 1}}) {
    EXPECT_EQ(certify_sn(f, 5000).conclusion, GaloisConclusion::Inconclusive) << f.to_string();
  }
}

TEST(CertifySn, WitnessesRefactor) {
  const SnCertificate c = certify_sn(IntPoly{-1, -4, 0, 1});
  ASSERT_EQ(c.conclusion, GaloisConclusion::Sn);
  for (const auto& w : c.witnesses) {
    EXPECT_EQ(w.degrees, oracle::factor_degrees_by_trial({-1, -4, 0, 1}, w.prime));
  }
  SnCertificate forged = c;
  forged.poly = IntPoly{1, 0, 0, 0, 1};
  EXPECT_NE(check_sn_certificate(forged), "");
}

TEST(TypeII, Quintic) {
  const FieldResult r = find_type_II_poly(5);
  EXPECT_TRUE(is_irreducible(r.poly));
  EXPECT_EQ(sturm_count(r.poly), 3u);
  EXPECT_EQ(r.certificate.conclusion, GaloisConclusion::Sn);
  EXPECT_EQ(check_sn_certificate(r.certificate), "");
  EXPECT_TRUE(r.profile.is_type_II());
  EXPECT_EQ(r.profile.structural_violation(), "");
}

TEST(TypeII, CubicAndErrors) {
  const FieldResult r = find_type_II_poly(3);
  EXPECT_EQ(sturm_count(r.poly), 1u);
  EXPECT_THROW(find_type_II_poly(2), InvalidInput);
  EXPECT_THROW(find_type_II_poly(9), InvalidInput);
}

TEST(TypeII, ThreadCountDoesNotChangeResult) {
  SearchOptions one, four;
  four.threads = 4;
  EXPECT_EQ(find_type_II_poly(7, one).poly, find_type_II_poly(7, four).poly);
}

TEST(TypeI, TotallyReal) {
  for (unsigned n : {3u, 4u, 5u}) {
    const FieldResult r = find_type_I_poly(n);
    EXPECT_EQ(r.poly.degree(), n);
    EXPECT_EQ(sturm_count(r.poly), n);
    EXPECT_EQ(r.certificate.conclusion, GaloisConclusion::Sn);
    EXPECT_EQ(check_sn_certificate(r.certificate), "");
    EXPECT_TRUE(r.profile.is_type_I());
  }
  EXPECT_NE(find_type_I_poly(3).poly, (IntPoly{-1, -3, 0, 1}));
  EXPECT_THROW(find_type_I_poly(2), InvalidInput);
}

TEST(TypeI, ExhaustedIsReported) {
  SearchOptions tiny;
  tiny.max_height = 1;
  tiny.prime_bound = 5;
  EXPECT_THROW(find_type_I_poly(4, tiny), SearchExhausted);
}

TEST(PlaceProfile, SplitPrimeData) {
  const FieldResult r = find_type_I_poly(3);
  const PlaceProfile p = profile_from_poly(r.poly, r.certificate, 3);
  ASSERT_EQ(p.finite_places.size(), 4u);
  std::uint64_t split = 0;
  for (const auto& w : p.finite_places) {
    if (w.id == "w0") {
      EXPECT_FALSE(w.over_split_prime);
      continue;
    }
    EXPECT_TRUE(w.over_split_prime);
    split = w.residue_char;
  }
  EXPECT_EQ(factor_degrees_mod_p(r.poly, split), (std::vector<unsigned>{1, 1, 1}));
  EXPECT_NE(p.finite("w0")->residue_char, split);
}

TEST(WeakApprox, Examples) {
  using R = Requirement;
  EXPECT_EQ(weak_approx({{Place::real(), R::Negative, 1}, {Place::finite(5), R::SquareClass, 2}}), -2);
  EXPECT_EQ(weak_approx({{Place::real(), R::Positive, 1}}), 1);
  EXPECT_THROW(weak_approx({{Place::real(), R::Negative, 1}, {Place::real(), R::Positive, 1}}), InvalidInput);
  EXPECT_THROW(weak_approx({{Place::finite(3), R::Positive, 1}}), InvalidInput);
}

TEST(WeakApprox, ResultMeetsConstraints) {
  using R = Requirement;
  for (long c3 : {1, 2, 3, 6}) {
    for (long c5 : {1, 2, 5, 10}) {
      const std::vector<ApproxConstraint> cs{{Place::real(), R::Negative, 1},
                                             {Place::finite(3), R::SquareClass, c3},
                                             {Place::finite(5), R::SquareClass, c5}};
      const Rational x = weak_approx(cs);
      EXPECT_LT(x, 0);
      EXPECT_TRUE(same_square_class(x, c3, Place::finite(3)));
      EXPECT_TRUE(same_square_class(x, c5, Place::finite(5)));
    }
  }
}

TEST(ArithEquiv, Examples) {
  const IntPoly f{2, -4, 0, 0, 0, 1};
  EXPECT_TRUE(arith_equiv_upto(f, f, 100).consistent);
  const ArithEquivResult r = arith_equiv_upto(IntPoly{-2, 0, 1}, IntPoly{-3, 0, 1}, 100);
  EXPECT_FALSE(r.consistent);
  ASSERT_TRUE(r.witness_prime.has_value());
  EXPECT_LE(*r.witness_prime, 100u);
  EXPECT_NE(try_factor_degrees_mod_p(IntPoly{-2, 0, 1}, *r.witness_prime),
            try_factor_degrees_mod_p(IntPoly{-3, 0, 1}, *r.witness_prime));
  EXPECT_FALSE(arith_equiv_upto(IntPoly{-2, 0, 0, 1}, IntPoly{-2, 0, 1}, 7).consistent);
}
