#include <gtest/gtest.h>

#include "arithcert/error.hpp"
#include "arithcert/hermform.hpp"
#include "arithcert/quadform.hpp"
#include "oracles.hpp"

using namespace arithcert;

namespace {

HermProfile su_profile(unsigned r, unsigned s, unsigned n) {
  HermConstraints c;
  c.dim = r + s;
  for (unsigned i = 1; i <= n; ++i) {
    c.signatures["v" + std::to_string(i)] = i == 1 ? Signature{r, s} : Signature{r + s, 0};
  }
  c.local_ext["w0"] = {3, 1};
  c.balance_place = "w0";
  return herm_construct(c);
}

}  // namespace

TEST(Landherr, Examples) {
  HermProfile h;
  h.dim = 3;
  h.nonsplit_real = {{"v1", {3, 0}}, {"v2", {3, 0}}};
  EXPECT_TRUE(landherr_admissible(h));

  const HermProfile su = su_profile(2, 3, 3);
  EXPECT_TRUE(landherr_admissible(su));
  EXPECT_EQ(su.disc_at("w0"), -1);

  HermProfile bad;
  bad.dim = 4;
  bad.nonsplit_real = {{"v1", {4, 0}}};
  bad.finite_disc = {{"w1", -1}};
  EXPECT_FALSE(landherr_admissible(bad));
  EXPECT_EQ(landherr_violation(bad), "product");
}

TEST(Landherr, MalformedSignature) {
  HermProfile h;
  h.dim = 4;
  h.nonsplit_real = {{"v1", {2, 1}}};
  EXPECT_THROW(landherr_admissible(h), InvalidInput);
}

TEST(HermConstruct, BalancePlace) {
  EXPECT_EQ(su_profile(2, 2, 3).disc_at("w0"), 1);
  EXPECT_EQ(su_profile(2, 3, 3).disc_at("w0"), -1);

  HermConstraints c;
  c.dim = 4;
  c.signatures = {{"v2", {4, 0}}, {"v3", {4, 0}}};
  c.disc = {{"w2", -1}};
  c.local_ext = {{"w1", {7, 1}}, {"w2", {7, 1}}, {"w0", {11, 1}}};
  c.balance_place = "w0";
  const HermProfile h = herm_construct(c);
  EXPECT_EQ(h.disc_at("w0"), -1);
  EXPECT_EQ(h.disc_at("w1"), 1);
  EXPECT_TRUE(landherr_admissible(h));
}

TEST(HermConstruct, SplitPlaceRejected) {
  HermConstraints c;
  c.dim = 2;
  c.split_places = {"w1"};
  c.disc = {{"w1", -1}};
  c.balance_place = "w0";
  EXPECT_THROW(herm_construct(c), Inadmissible);
}

TEST(HermConstruct, Idempotent) {
  const HermProfile h = su_profile(3, 2, 4);
  HermConstraints c;
  c.dim = h.dim;
  c.signatures = h.nonsplit_real;
  c.disc = h.finite_disc;
  c.local_ext = h.local_ext;
  EXPECT_EQ(herm_construct(c), h);
}

TEST(SuLocalRank, Examples) {
  HermProfile h;
  h.dim = 4;
  h.split_places = {"s"};
  h.nonsplit_real = {{"v1", {4, 0}}};
  h.finite_disc = {{"a", -1}, {"b", 1}};
  h.local_ext = {{"a", {5, 1}}, {"b", {5, 1}}};
  EXPECT_EQ(su_local_rank(h, "s").rank, 3u);
  EXPECT_EQ(su_local_rank(h, "v1").rank, 0u);
  EXPECT_EQ(su_local_rank(h, "a").rank, 1u);
  EXPECT_EQ(su_local_rank(h, "b").rank, 2u);
  EXPECT_THROW(su_local_rank(h, "zz"), InvalidInput);
}

TEST(SuLocalRank, DyadicFlagged) {
  HermProfile h;
  h.dim = 2;
  h.local_ext = {{"w", {2, 1}}};
  EXPECT_EQ(su_local_rank(h, "w").method, "dyadic-lookup");
}

// Witt index of the trace form is twice the hermitian Witt index. Unramified
// K = Q_p(sqrt(u)) with u a non-residue has -1 as a norm and p as a
// non-norm; ramified K = Q_p(sqrt(p)) with p = 3 mod 4 has -1 and u as
// non-norms.
TEST(SuLocalRank, TraceFormOracle) {
  for (std::uint64_t p : {3, 7, 11, 19}) {
    const Rational u = least_nonresidue(p);
    for (bool ramified : {false, true}) {
      const Rational delta = ramified ? Rational(p) : u;
      const Rational non_norm = ramified ? u : Rational(p);
      for (unsigned m = 2; m <= 4; ++m) {
        for (int d : {1, -1}) {
          HermProfile h;
          h.dim = m;
          h.finite_disc = {{"w", d}};
          h.local_ext = {{"w", {p, ramified ? -1 : 1}}};
          const QuadForm trace(oracle::trace_form(m, d == 1 ? Rational(1) : non_norm, delta));
          const unsigned expected = witt_index(trace, Place::finite(p)) / 2;
          EXPECT_EQ(su_local_rank(h, "w").rank, expected)
              << "p=" << p << " m=" << m << " d=" << d << " ramified=" << ramified;
        }
      }
    }
  }
}

TEST(SuLocalRank, RangeProperty) {
  for (unsigned m = 2; m <= 9; ++m) {
    for (int d : {1, -1}) {
      for (int chi : {1, -1}) {
        HermProfile h;
        h.dim = m;
        h.finite_disc = {{"w", d}};
        h.local_ext = {{"w", {5, chi}}};
        const unsigned r = su_local_rank(h, "w").rank;
        if (m % 2 == 0) {
          EXPECT_TRUE(r == m / 2 || r == m / 2 - 1);
        } else {
          EXPECT_EQ(r, (m - 1) / 2);
        }
      }
    }
  }
}

TEST(HermLocallyIsomorphic, Examples) {
  const HermProfile h = su_profile(2, 2, 3);
  EXPECT_TRUE(herm_locally_isomorphic(h, h, "w0"));
  HermProfile a, b;
  a.dim = b.dim = 4;
  a.finite_disc = {{"w", 1}};
  b.finite_disc = {{"w", -1}};
  EXPECT_FALSE(herm_locally_isomorphic(a, b, "w"));
  a.split_places = b.split_places = {"s"};
  EXPECT_TRUE(herm_locally_isomorphic(a, b, "s"));
  HermProfile c;
  c.dim = 3;
  EXPECT_THROW(herm_locally_isomorphic(a, c, "w"), InvalidInput);
}
