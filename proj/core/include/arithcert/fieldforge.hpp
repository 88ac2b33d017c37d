#pragma once

// Number fields given by certified defining polynomials: Galois S_n
// certification from Frobenius cycle types, the two field searches (totally
// real, and exactly one complex place), weak approximation over Q and a
// decomposition-type comparison.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arithcert/intpoly.hpp"
#include "arithcert/localsym.hpp"

namespace arithcert {

/// Cycle type of a Frobenius element at a good prime (Dedekind).
struct CycleWitness {
  std::uint64_t prime = 0;
  std::vector<unsigned> degrees;
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

enum class GaloisConclusion { Sn, Inconclusive };

std::string to_string(GaloisConclusion c);

struct SnCertificate {
  IntPoly poly{0, 1};
  std::vector<CycleWitness> witnesses;
  GaloisConclusion conclusion = GaloisConclusion::Inconclusive;
  /// "small-degree", "two-nonreal-roots", "transposition-and-long-prime-cycle"
  /// or "none".
  std::string route = "none";
  unsigned real_roots = 0;
  std::uint64_t prime_bound = 0;
};

/// Scans good primes up to `prime_bound`. Sound but one-sided: Sn is claimed
/// only when the collected data forces the Galois group to be S_n.
/// Throws InvalidInput for a reducible or non-squarefree polynomial.
SnCertificate certify_sn(const IntPoly& f, std::uint64_t prime_bound = 2000);

/// Independent re-check of a certificate: re-factors every witness and
/// re-derives the conclusion. Returns an empty string when it holds, else
/// the first failure.
std::string check_sn_certificate(const SnCertificate& cert);

enum class ArchKind { Real, Complex };

struct ArchPlace {
  std::string id;
  ArchKind kind = ArchKind::Real;
  friend bool operator==(const ArchPlace&, const ArchPlace&) = default;
};

struct FinitePlace {
  std::string id;
  std::uint64_t residue_char = 0;
  bool over_split_prime = false;
  friend bool operator==(const FinitePlace&, const FinitePlace&) = default;
};

/// Abstract place data of a number field k. Archimedean places are v1, v2,
/// ...; the marked finite places are w1..wn over one completely split prime
/// plus an extra place w0 over a different prime.
struct PlaceProfile {
  unsigned degree = 1;
  std::vector<ArchPlace> archimedean;
  std::vector<FinitePlace> finite_places;
  bool trivial_aut = true;
  std::optional<IntPoly> source;
  std::optional<std::string> certificate_id;

  unsigned real_count() const;
  unsigned complex_count() const;
  bool is_type_I() const { return complex_count() == 0 && trivial_aut; }
  bool is_type_II() const { return complex_count() == 1 && trivial_aut; }
  bool totally_imaginary() const { return real_count() == 0; }
  const ArchPlace* arch(const std::string& id) const;
  const FinitePlace* finite(const std::string& id) const;
  /// Names the first violated structural invariant, or empty.
  std::string structural_violation() const;

  friend bool operator==(const PlaceProfile&, const PlaceProfile&) = default;
};

/// Q itself: one real place, no marked finite places.
PlaceProfile rationals_profile();
/// An imaginary quadratic field: one complex place. Its automorphism group is
/// not trivial.
PlaceProfile imaginary_quadratic_profile();

/// The profile of Q[x]/(f) for an Sn-certified f, with `marked` places over
/// the smallest odd prime at which f splits into linear factors and w0 over
/// the next odd good prime. Throws SearchExhausted if no split prime is found
/// below `prime_bound`.
PlaceProfile profile_from_poly(const IntPoly& f, const SnCertificate& cert, unsigned marked,
                               std::uint64_t prime_bound = 10'000'000);

struct SearchOptions {
  /// Candidates are enumerated by increasing height up to this bound.
  unsigned max_height = 400;
  /// Primes scanned for cycle types.
  std::uint64_t prime_bound = 2000;
  /// Worker threads per batch. Results do not depend on this.
  unsigned threads = 1;
};

struct FieldResult {
  IntPoly poly{0, 1};
  SnCertificate certificate;
  PlaceProfile profile;
  /// Candidates examined before the hit, in the fixed order.
  std::uint64_t examined = 0;
};

/// First polynomial x^p + a*x + b in order of height |a| + |b| (a ascending,
/// then b positive before negative) that is irreducible with exactly p - 2
/// real roots and certified S_p. Throws InvalidInput unless p is an odd prime,
/// SearchExhausted past the height bound.
FieldResult find_type_II_poly(std::uint64_t p, const SearchOptions& opts = {});

/// Any degree n >= 3. For n <= 5 the same trinomial family and order. A
/// trinomial has at most three real roots, so for n >= 6 the family is
/// (x^2 + s^2) * prod_{i<n-2} (x - i(i+1)/2 * s) + t ordered as in
/// find_type_I_poly. Composite degrees need the cycle-type route.
FieldResult find_type_II_field(unsigned n, const SearchOptions& opts = {});

/// Totally real fields: prod_{i<n} (x - i(i+1)/2 * s) + t for spacing
/// s = 1, 2, ... and t = 1, -1, 2, -2, ... with |t| + s bounded by the height.
/// Throws InvalidInput for n < 3 and SearchExhausted when inconclusive.
FieldResult find_type_I_poly(unsigned n, const SearchOptions& opts = {});

enum class Requirement { Positive, Negative, SquareClass };

struct ApproxConstraint {
  Place place;
  Requirement requirement = Requirement::Positive;
  Rational square_class = 1;  ///< used for Requirement::SquareClass
};

/// The integer of least height (order 1, -1, 2, -2, ...) meeting every
/// constraint. Throws InvalidInput on two constraints at one place or a sign
/// requirement at a finite place, SearchExhausted past `limit`.
Rational weak_approx(const std::vector<ApproxConstraint>& constraints,
                     std::uint64_t limit = 10'000'000);

struct ArithEquivResult {
  bool consistent = true;
  std::optional<std::uint64_t> witness_prime;
  std::string reason;
  unsigned primes_compared = 0;
};

/// Compares factorization degree multisets at every prime <= bound that is
/// good for both polynomials. A necessary test only.
ArithEquivResult arith_equiv_upto(const IntPoly& f, const IntPoly& g, std::uint64_t bound);

}  // namespace arithcert
