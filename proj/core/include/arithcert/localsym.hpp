#pragma once

// Local symbols over the completions of Q: square classes, Legendre and
// Hilbert symbols at the real place and at every prime, including 2.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arithcert/numeric.hpp"

namespace arithcert {

/// A place of Q: the real place or a prime p. Ordered with the real place
/// first, then primes ascending.
class Place {
 public:
  static Place real() { return Place(0); }
  /// Throws NotPrime unless `p` is prime.
  static Place finite(std::uint64_t p);
  /// Accepts "real", "inf" or a decimal prime.
  static Place parse(std::string_view text);

  bool is_real() const noexcept { return prime_ == 0; }
  bool is_finite() const noexcept { return prime_ != 0; }
  bool is_dyadic() const noexcept { return prime_ == 2; }
  /// The residue characteristic; 0 for the real place.
  std::uint64_t prime() const noexcept { return prime_; }

  std::string to_string() const;

  friend auto operator<=>(const Place&, const Place&) = default;

 private:
  explicit Place(std::uint64_t p) : prime_(p) {}
  std::uint64_t prime_;
};

/// Canonical representative of a class in K_v^x / (K_v^x)^2.
/// Real: +-1. Odd p: one of {1, u, p, up}, u the least positive non-residue.
/// p = 2: one of {+-1, +-2, +-5, +-10}.
struct SquareClass {
  Place place;
  Rational representative;

  friend bool operator==(const SquareClass&, const SquareClass&) = default;
};

/// Legendre symbol (a/p) for an odd prime p.
int legendre(const Integer& a, std::uint64_t p);

/// Least positive quadratic non-residue modulo the odd prime p.
std::uint64_t least_nonresidue(std::uint64_t p);

/// Hilbert symbol (a, b)_v in {-1, +1}.
int hilbert(const Rational& a, const Rational& b, const Place& v);

SquareClass square_class(const Rational& a, const Place& v);

/// True iff a / b is a square in the completion at v.
bool same_square_class(const Rational& a, const Rational& b, const Place& v);

/// The real place, 2, and every prime dividing a numerator or denominator of
/// `values`: outside this set every Hilbert symbol among them is +1.
std::vector<Place> relevant_places(std::span<const Rational> values);

/// Places where (a, b)_v = -1.
std::vector<Place> hilbert_support(const Rational& a, const Rational& b);

/// Whether the product of (a, b)_v over all places is +1.
bool product_formula_check(const Rational& a, const Rational& b);

}  // namespace arithcert
