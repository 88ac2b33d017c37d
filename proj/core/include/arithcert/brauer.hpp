#pragma once

// Brauer classes over Q (or, with a base-field tag, over an imaginary
// quadratic field) given by their local invariants in Q/Z.

#include <cstdint>
#include <map>
#include <string>

#include "arithcert/localsym.hpp"
#include "arithcert/numeric.hpp"

namespace arithcert {

enum class BaseField { Rationals, ImaginaryQuadratic };

std::string to_string(BaseField b);
BaseField parse_base_field(const std::string& text);

/// A class in Br(Q): invariants in [0, 1) at finitely many places, summing to
/// 0 modulo 1, with the real invariant in {0, 1/2}. Zero invariants are not
/// stored.
class BrauerClass {
 public:
  BrauerClass() = default;

  /// Validates and normalizes. Throws InvalidInput on values outside [0, 1),
  /// a bad real invariant, a real place over an imaginary quadratic base, or
  /// a nonzero sum.
  static BrauerClass from_invariants(const std::map<Place, Rational>& inv,
                                     BaseField base = BaseField::Rationals);

  const std::map<Place, Rational>& invariants() const noexcept { return inv_; }
  BaseField base() const noexcept { return base_; }
  Rational at(const Place& v) const;
  bool is_trivial() const noexcept { return inv_.empty(); }
  std::string to_string() const;

  friend bool operator==(const BrauerClass&, const BrauerClass&) = default;

 private:
  std::map<Place, Rational> inv_;
  BaseField base_ = BaseField::Rationals;
};

/// Alias of BrauerClass::from_invariants.
BrauerClass validate_class(const std::map<Place, Rational>& inv,
                           BaseField base = BaseField::Rationals);

BrauerClass tensor(const BrauerClass& a, const BrauerClass& b);
BrauerClass opposite(const BrauerClass& a);
/// lcm of the invariant denominators (the period, equal to the index over Q).
Integer index(const BrauerClass& a);
/// Local index at v: the denominator of the invariant there.
Integer local_index(const BrauerClass& a, const Place& v);

/// M_k(E) for the division algebra E of class `cls`.
struct CSA {
  BrauerClass cls;
  unsigned long matrix_size = 1;

  Integer degree() const { return index(cls) * matrix_size; }
  friend bool operator==(const CSA&, const CSA&) = default;
};

CSA opposite(const CSA& a);
bool csa_isomorphic(const CSA& a, const CSA& b);
bool csa_locally_isomorphic(const CSA& a, const CSA& b, const Place& v);

struct PairReport {
  unsigned long d = 0;
  unsigned long k = 0;
  bool c_ramified_at_real = false;
  BrauerClass c, dcls;  // the division classes C and D
  BrauerClass e1, e2;   // [C][D] and [C][D]^-1
  CSA a, b;             // M_k(E1), M_k(E2)
  bool c_order_is_d = false;
  bool d_order_is_d = false;
  bool disjoint_support = false;
  bool real_invariants_ok = false;
  bool e1_index_is_d = false;
  bool e2_index_is_d = false;
  bool a_not_isomorphic_b = false;
  bool a_not_isomorphic_b_op = false;
  bool locally_pm_everywhere = false;
  bool c_not_self_opposite = false;
  bool d_not_self_opposite = false;

  unsigned long matrix_degree() const { return d * k; }
  bool all_pass() const;
};

/// Re-derives every boolean of a report from C, D and k alone.
PairReport check_pair(const BrauerClass& c, const BrauerClass& dcls, unsigned long d,
                      unsigned long k, bool c_ramified_at_real);

/// The smallest-prime construction of two degree-d division classes with
/// disjoint finite support. Primes are taken in increasing order from 5.
/// With `c_ramified_at_real` (d even), C carries the real invariant 1/2.
/// Throws InvalidInput unless d >= 3, k >= 2 (and d even when ramified).
PairReport find_division_pair(unsigned long d, unsigned long k, bool c_ramified_at_real = false,
                     BaseField base = BaseField::Rationals);

}  // namespace arithcert
