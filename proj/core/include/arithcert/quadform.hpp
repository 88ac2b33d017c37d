#pragma once

// Diagonal quadratic forms over Q and their complete local invariants.
//
// Hasse invariant convention: c_v(<a_1,...,a_n>) = prod_{i<j} (a_i, a_j)_v.
// With this convention the real Hasse value of a form of signature (r, s) is
// (-1)^(s(s-1)/2), so profiles only store the finite places where c_v = -1.

#include <set>
#include <string>
#include <vector>

#include "arithcert/localsym.hpp"
#include "arithcert/numeric.hpp"

namespace arithcert {

/// A nondegenerate diagonal form <a_1, ..., a_n> over Q.
class QuadForm {
 public:
  /// Throws InvalidInput on an empty list, ZeroInput on a zero entry.
  explicit QuadForm(std::vector<Rational> entries);

  std::size_t dim() const noexcept { return entries_.size(); }
  const std::vector<Rational>& entries() const noexcept { return entries_; }
  Rational determinant() const;
  std::string to_string() const;

  friend bool operator==(const QuadForm&, const QuadForm&) = default;

 private:
  std::vector<Rational> entries_;
};

struct Signature {
  unsigned positive = 0;
  unsigned negative = 0;

  unsigned dim() const noexcept { return positive + negative; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Real Hasse value implied by a signature.
int real_hasse(const Signature& sig);

/// Local-global invariant data of a nondegenerate form over Q.
struct QFProfile {
  unsigned dim = 0;
  Integer det = 1;  ///< squarefree representative of the determinant class
  Signature signature;
  std::set<Place> hasse_negative;  ///< finite places with Hasse invariant -1

  int hasse_at(const Place& v) const;
  SquareClass det_class(const Place& v) const;

  friend bool operator==(const QFProfile&, const QFProfile&) = default;
};

int hasse_invariant(const QuadForm& f, const Place& v);

QFProfile invariants(const QuadForm& f);

/// Witt index over Q_p of any form with the given dimension, determinant and
/// Hasse invariant. Throws InvalidInput when no such local form exists.
unsigned local_witt_index(unsigned dim, const Rational& det, int hasse, const Place& v);

/// Whether some form over Q_p has these invariants.
bool locally_realizable(unsigned dim, const Rational& det, int hasse, const Place& v);

unsigned witt_index(const QuadForm& f, const Place& v);

bool isometric(const QuadForm& f, const QuadForm& g);

/// Result of the realizability test; `violated` names the first failed
/// constraint when `ok` is false.
struct Admissibility {
  bool ok = true;
  std::string violated;
};

/// Throws InvalidInput for structurally malformed profiles (r + s != dim,
/// dim 0, zero or non-squarefree det, a non-finite place in the Hasse set).
Admissibility check_admissible(const QFProfile& p);
bool admissible(const QFProfile& p);

/// A diagonal form whose invariants are exactly `p`. Deterministic: entries
/// are chosen greedily from 1, -1, 2, -2, ... and the final binary block
/// <x, x*d> uses the least such x in the same order.
/// Throws Inadmissible when `p` is not realizable.
QuadForm realize(const QFProfile& p);

/// Profile obtained by splitting off the entry `a`: the invariants of g where
/// <a> + g has invariants `p`. Used by realize(); exposed for testing.
QFProfile split_off(const QFProfile& p, const Rational& a);

}  // namespace arithcert
