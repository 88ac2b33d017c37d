#pragma once

// Integer polynomials and the exact machinery the field engines need:
// Sturm chains over Q and distinct-degree factorization over F_p.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arithcert/error.hpp"
#include "arithcert/numeric.hpp"

namespace arithcert {

/// A polynomial with integer coefficients, constant term first, degree >= 1.
class IntPoly {
 public:
  /// Strips leading zeros. Throws InvalidInput if the degree is < 1.
  explicit IntPoly(std::vector<Integer> coefficients);
  IntPoly(std::initializer_list<long> coefficients);

  /// Reads an integer coefficient list, constant term first, separated by
  /// commas and/or whitespace, optionally wrapped in brackets.
  static IntPoly parse(std::string_view text);

  unsigned degree() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  const Integer& leading() const noexcept { return coeffs_.back(); }
  const Integer& operator[](std::size_t i) const { return coeffs_.at(i); }

  Integer operator()(const Integer& x) const;
  Integer content() const;

  /// Human-readable form, e.g. "x^5 - 4*x + 2".
  std::string to_string() const;
  /// Canonical list form, e.g. "[2, -4, 0, 0, 0, 1]".
  std::string to_list_string() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  std::vector<Integer> coeffs_;
};

/// The reduction mod p is not squarefree or loses degree.
class BadPrime : public InvalidInput {
 public:
  explicit BadPrime(const std::string& what) : InvalidInput(what) {}
};

bool is_squarefree(const IntPoly& f);

/// Number of distinct real roots. Throws InvalidInput if f is not squarefree.
unsigned sturm_count(const IntPoly& f);

/// Degrees of the irreducible factors of f over F_p, ascending.
/// Throws NotPrime, or BadPrime when p divides the leading coefficient or the
/// reduction is not squarefree. Requires p < 2^32.
std::vector<unsigned> factor_degrees_mod_p(const IntPoly& f, std::uint64_t p);

/// As above but returns nullopt for a bad prime.
std::optional<std::vector<unsigned>> try_factor_degrees_mod_p(const IntPoly& f, std::uint64_t p);

/// Whether some prime p satisfies Eisenstein's criterion for f.
std::optional<std::uint64_t> eisenstein_prime(const IntPoly& f);

/// Irreducibility over Q. Throws SearchExhausted if the exhaustive factor
/// search exceeds its work limit (not reached for degree <= 8 with
/// moderate coefficients).
bool is_irreducible(const IntPoly& f);

/// A nontrivial factor over Z if one exists, found by exhaustive search.
std::optional<IntPoly> find_factor(const IntPoly& f);

}  // namespace arithcert
