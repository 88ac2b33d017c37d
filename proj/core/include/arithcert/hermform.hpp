#pragma once

// Hermitian forms over a quadratic extension K/k, described by their local
// invariants over symbolically named places of k. Nothing here depends on a
// concrete number field: a place is just an identifier.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "arithcert/quadform.hpp"

namespace arithcert {

/// Local data of K_v / k_v at a non-split finite place that the rank rule
/// depends on.
struct LocalExtension {
  std::uint64_t residue_char = 0;  ///< 0 when unspecified
  int minus_one_is_norm = 1;       ///< +1 iff -1 is a norm from K_v
  friend bool operator==(const LocalExtension&, const LocalExtension&) = default;
};

struct HermProfile {
  unsigned dim = 0;
  /// Signatures at the real places of k that do not split in K.
  std::map<std::string, Signature> nonsplit_real;
  /// Discriminants d_v at listed finite places; +1 elsewhere.
  std::map<std::string, int> finite_disc;
  /// Finite places of k that split in K.
  std::set<std::string> split_places;
  std::map<std::string, LocalExtension> local_ext;

  int disc_at(const std::string& place) const;
  friend bool operator==(const HermProfile&, const HermProfile&) = default;
};

/// Landherr's existence conditions. Throws InvalidInput when a signature does
/// not sum to the dimension or a discriminant is not +-1.
bool landherr_admissible(const HermProfile& h);

/// Names the first failed Landherr condition, or empty when admissible.
std::string landherr_violation(const HermProfile& h);

struct HermConstraints {
  unsigned dim = 0;
  std::map<std::string, Signature> signatures;
  std::map<std::string, int> disc;
  std::set<std::string> split_places;
  std::map<std::string, LocalExtension> local_ext;
  /// The one unconstrained place whose discriminant absorbs the product
  /// condition.
  std::optional<std::string> balance_place;
};

/// The unique profile meeting the constraints. Throws Inadmissible when the
/// forced completion violates a Landherr condition.
HermProfile herm_construct(const HermConstraints& c);

struct LocalRank {
  unsigned rank = 0;
  /// "split", "signature", "discriminant-rule" or "dyadic-lookup".
  std::string method;
};

/// Local rank of SU(h) at a listed place. Throws InvalidInput for a place id
/// the profile does not mention.
LocalRank su_local_rank(const HermProfile& h, const std::string& place);

/// Whether h1 and h2 become isometric over the completion at `place`.
/// Throws InvalidInput on a dimension mismatch.
bool herm_locally_isomorphic(const HermProfile& h1, const HermProfile& h2,
                             const std::string& place);

}  // namespace arithcert
