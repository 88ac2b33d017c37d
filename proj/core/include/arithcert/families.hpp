#pragma once

// Families of group descriptors over a common base field: the adelic and
// commensurability checks, the CSP lookup, the family builders and the
// verifier that re-derives a certificate from raw descriptor data.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arithcert/descriptor.hpp"

namespace arithcert {

struct CspResult {
  CspStatus status = CspStatus::Unknown;
  std::string reason;
};

CspResult csp_status(const GroupDescriptor& g);

/// ceil(n / c): a subfamily of this size shares one of c local classes.
/// Throws InvalidInput unless n, c >= 1.
std::uint64_t pigeonhole_bound(std::uint64_t n, std::uint64_t c);

/// Number of inner twists of a non-type-A group over a p-adic field is at
/// most this.
inline constexpr std::uint64_t kInnerTwistClassBound = 4;

struct AdelicResult {
  bool isomorphic = false;
  /// w_i -> w_sigma(i); identity entries included.
  std::vector<std::pair<std::string, std::string>> permutation;
  std::string reason;

  bool permutation_is_identity() const;
};

/// Finite-adelic isomorphism: local data agree at every finite place up to a
/// permutation of the marked places w1..wn. Throws InvalidInput for
/// different family tags or base profiles.
AdelicResult adelically_isomorphic(const GroupDescriptor& g1, const GroupDescriptor& g2);

struct CommensurabilityResult {
  bool commensurable = false;
  std::string witness_place;
  std::string left, right;  ///< local types at the witness place
  std::optional<unsigned> left_rank, right_rank;
  std::string reason;
};

/// Descriptor-level criterion for commensurability of arithmetic subgroups.
/// Needs a base field with trivial automorphism group and rank sum >= 2 on
/// both sides (throws InvalidInput otherwise).
CommensurabilityResult commensurable(const GroupDescriptor& g1, const GroupDescriptor& g2);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  std::string anchor;  ///< the statement the check stands for
};

struct FamilyCertificate {
  std::string builder;  ///< "su", "sl-even", "so", "so8c", "generic", "sl-noncocompact", or "" when verified raw
  std::string target;
  std::map<std::string, std::string> parameters;
  std::vector<GroupDescriptor> descriptors;
  std::vector<std::vector<AdelicResult>> adelic;
  std::vector<std::vector<CommensurabilityResult>> commensurability;
  std::vector<CspResult> csp;
  std::vector<unsigned> rank_sums;
  std::vector<bool> cocompact;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  bool pass = false;
  std::string reason;  ///< empty on pass

  std::string conclusion() const { return pass ? "pass" : "fail(" + reason + ")"; }
};

/// Re-derives every matrix, status and check from the descriptors alone.
FamilyCertificate verify_family(const std::vector<GroupDescriptor>& descriptors);

enum class BaseKind { Real, Complex };

/// SU(r,s) over a type I field of degree n. Throws InvalidInput for r or
/// s < 2, Rejected for n <= 2.
FamilyCertificate build_su_family(unsigned r, unsigned s, unsigned n);

/// SL_{2m}(R) or SL_{2m}(C) through hermitian forms of dimension 2m.
FamilyCertificate build_sl_even_family(unsigned m, BaseKind base, unsigned n);

/// Same, addressed by the matrix size; odd sizes are rejected.
FamilyCertificate build_sl_family(unsigned dim, BaseKind base, unsigned n);

/// Spin groups of forms of signature (r, s) at one real place.
FamilyCertificate build_so_family(unsigned r, unsigned s, unsigned n);

/// Spin_8(C) through eight-dimensional forms over a type II field.
FamilyCertificate build_so8c_family(unsigned n);

/// Inner twists for a real form tag (or "split") or, with form "complex",
/// for the complex group of the given type. Reduced by the pigeonhole bound
/// at the exceptional place.
FamilyCertificate build_generic_family(const std::string& cartan_type, const std::string& form,
                                       unsigned n);

enum class SlTarget { Real, Complex, Quaternionic };

/// Two SL_1 groups of matrix algebras over division algebras of equal index.
FamilyCertificate build_sl_noncocompact(unsigned m, SlTarget target);

enum class RigidityVerdict { Commensurable, NotApplicable };

struct RigidityResult {
  RigidityVerdict verdict = RigidityVerdict::NotApplicable;
  std::string reason;
};

std::string to_string(RigidityVerdict v);

/// For lattices in a complex group of type E8, F4 or G2 (tags "E8C", "F4C",
/// "G2C"). Throws InvalidInput unless both profiles are type II.
RigidityResult decide_rigidity_exceptional(const std::string& type_tag, const PlaceProfile& p1,
                                           const PlaceProfile& p2, const ArithEquivResult& evidence);

/// index > center_order. Throws InvalidInput for index < 2 or center < 1.
bool congruence_level_check(const Integer& index, const Integer& center_order);

}  // namespace arithcert
