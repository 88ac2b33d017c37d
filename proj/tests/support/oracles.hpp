#pragma once

// Brute-force reference computations for the tests. None of these call the
// library routine they are used to check.

#include <cstdint>
#include <vector>

#include "arithcert/numeric.hpp"

namespace oracle {

using arithcert::Integer;
using arithcert::Rational;

/// (a,b)_p by searching for a primitive solution of z^2 = a x^2 + b y^2
/// modulo p^5 (odd p) or 2^8. p = 0 means the real place.
int hilbert(const Rational& a, const Rational& b, std::uint64_t p);

/// Memoizing variant for large sweeps: values are grouped into square
/// classes by a brute square test, and the solvability search runs once per
/// pair of classes.
class HilbertTable {
 public:
  explicit HilbertTable(std::uint64_t p);
  int operator()(const Rational& a, const Rational& b);

 private:
  std::size_t class_of(const Integer& a);

  std::uint64_t p_;
  std::uint64_t modulus_;
  std::vector<bool> unit_square_;
  std::vector<Integer> reps_;
  std::vector<std::vector<int>> memo_;
};

/// Whether the diagonal form with integer entries has a primitive zero
/// modulo p^5 (odd p) or 2^8.
bool isotropic_mod(const std::vector<long>& entries, std::uint64_t p);

/// Smallest possible size of the largest class over all colorings of n
/// items with c colors (enumerated through their class-size vectors).
unsigned min_max_class(unsigned n, unsigned c);

/// Degrees of the irreducible factors of f mod p found by trial division by
/// every monic polynomial of increasing degree. Empty if p | leading
/// coefficient or a repeated factor shows up.
std::vector<unsigned> factor_degrees_by_trial(const std::vector<long>& f, std::uint64_t p);

/// Number of sign changes of f on a rational grid of step 1/2^k inside the
/// Cauchy root bound; a lower bound for the real root count that is exact
/// once roots are separated by more than the step.
unsigned grid_sign_changes(const std::vector<long>& f, unsigned k = 10);

/// Diagonal entries of the trace form of <1, ..., 1, c> over Q_p(sqrt(delta)):
/// each entry x contributes x and -delta*x.
std::vector<Rational> trace_form(unsigned m, const Rational& c, const Rational& delta);

}  // namespace oracle
