#pragma once

// Place-indexed local data for one arithmetic group over an abstract place
// profile, plus the closed census of real and complex forms.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "arithcert/brauer.hpp"
#include "arithcert/fieldforge.hpp"
#include "arithcert/hermform.hpp"
#include "arithcert/quadform.hpp"

namespace arithcert {

struct CartanType {
  char series = 'A';
  unsigned rank = 1;

  /// "A3", "B2", "E8", ... Throws InvalidInput.
  static CartanType parse(const std::string& text);
  std::string to_string() const;
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// One entry of the census of simple Lie groups handled by the builders.
struct RealForm {
  std::string tag;  ///< canonical spelling, e.g. "SO0(6,2)", "E8(8)", "E7(C)"
  CartanType cartan;
  unsigned real_rank = 0;
  bool inner_to_compact = false;
  bool complex = false;  ///< a complex simple group viewed as a real Lie group
};

/// Accepts SU(r,s), SL(n,R), SL(n,H), SL(n,C), SO*(2m), SO0(r,s), SO(n,C),
/// Sp(2n,R), Sp(p,q), Sp(2n,C), the named real forms of E6, E7, E8, F4, G2
/// ("E8(8)", "E8(-24)", ...) and their complex groups "E8(C)" etc.
/// Throws InvalidInput for anything else.
RealForm parse_real_form(const std::string& tag);

/// The split real form of a type, e.g. E8 -> E8(8).
RealForm split_real_form(const CartanType& type);

/// Whether the real form is an inner form of the compact form.
bool inner_of_compact(const std::string& tag);

enum class FamilyTag { SU_herm, SL_even_herm, Spin_quad, InnerTwist, SL1_CSA };

std::string to_string(FamilyTag t);
FamilyTag parse_family_tag(const std::string& text);

enum class CspStatus { Trivial, OrderLe2, Unknown };

std::string to_string(CspStatus s);
CspStatus parse_csp_status(const std::string& text);

struct QuadLocal {
  /// Determinant representative in Q_p; nullopt means the global default
  /// label applies.
  std::optional<Rational> det;
  int hasse = 1;
  friend bool operator==(const QuadLocal&, const QuadLocal&) = default;
};

struct QuadPayload {
  unsigned dim = 0;
  std::map<std::string, Signature> real_signatures;
  std::map<std::string, QuadLocal> finite;
  /// Name of the global determinant class at places where no representative
  /// is recorded.
  std::string default_det = "a";
  friend bool operator==(const QuadPayload&, const QuadPayload&) = default;
};

/// Symbolic local types of an inner twist: "G", "G^u", "G_qs", "G^p", "G^0",
/// "G0_qs", or a class label at the exceptional place.
struct TwistPayload {
  std::map<std::string, std::string> archimedean;
  std::map<std::string, std::string> finite;
  std::string default_finite = "G0_qs";
  friend bool operator==(const TwistPayload&, const TwistPayload&) = default;
};

struct AlgebraPayload {
  CSA algebra;
  friend bool operator==(const AlgebraPayload&, const AlgebraPayload&) = default;
};

using Payload = std::variant<HermProfile, QuadPayload, TwistPayload, AlgebraPayload>;

struct GroupDescriptor {
  std::string name;
  PlaceProfile base;
  FamilyTag family = FamilyTag::SU_herm;
  CartanType cartan;
  /// Target Lie group at the noncompact archimedean place.
  std::string target_form;
  std::vector<std::string> permutable;  ///< w1..wn
  std::optional<std::string> exceptional;  ///< w0
  /// Real places where the real form is not topologically simply connected.
  std::set<std::string> non_simply_connected_real;
  Payload payload;
  /// As recorded by the builder; the verifier recomputes both.
  CspStatus csp = CspStatus::Unknown;
  bool cocompact = false;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

struct LocalType {
  std::string description;
  std::optional<unsigned> rank;  ///< k_v-rank when determined by the data
};

/// The local type at an archimedean or finite place id, or at "*" for the
/// default shared by all unlisted finite places.
LocalType local_type(const GroupDescriptor& g, const std::string& place);

/// Finite place ids the descriptor's payload mentions, plus the marked ones.
std::set<std::string> finite_place_ids(const GroupDescriptor& g);

/// Sum of the archimedean ranks.
unsigned rank_sum(const GroupDescriptor& g);

/// Compact at some archimedean place.
bool is_cocompact(const GroupDescriptor& g);

/// Number of archimedean places with a noncompact form.
unsigned noncompact_places(const GroupDescriptor& g);

/// k-isotropy when it can be read off the data (matrix algebras M_k with
/// k >= 2); false otherwise.
bool known_isotropic(const GroupDescriptor& g);

/// Witt index at p of a dimension `dim` form with the given local
/// determinant and Hasse invariant, computed on a realized form over Q.
unsigned spin_local_rank(unsigned dim, const Rational& det, int hasse, std::uint64_t p);

}  // namespace arithcert
