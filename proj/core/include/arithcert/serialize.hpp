#pragma once

// JSON forms of the values the command-line tool reads and writes. Integers
// and rationals travel as strings ("-3", "2/5"), places as "real" or the
// prime, polynomials as coefficient lists with the constant term first.
// Every reader throws InvalidInput on malformed input.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arithcert/brauer.hpp"
#include "arithcert/descriptor.hpp"
#include "arithcert/families.hpp"
#include "arithcert/fieldforge.hpp"
#include "arithcert/hermform.hpp"
#include "arithcert/quadform.hpp"

namespace arithcert {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Signature& s);
Signature signature_from_json(const Json& j);

Json to_json(const QuadForm& f);
/// {"dim", "det", "signature": [r, s], "hasse": {"3": -1, ...}}. A "real"
/// entry in the Hasse map is accepted when it matches the signature.
Json to_json(const QFProfile& p);
QFProfile qf_profile_from_json(const Json& j);

Json to_json(const HermProfile& h);
HermProfile herm_profile_from_json(const Json& j);
HermConstraints herm_constraints_from_json(const Json& j);

Json to_json(const BrauerClass& c);
BrauerClass brauer_class_from_json(const Json& j);
Json to_json(const CSA& a);
CSA csa_from_json(const Json& j);
Json to_json(const PairReport& r);

Json to_json(const IntPoly& f);
IntPoly int_poly_from_json(const Json& j);
Json to_json(const SnCertificate& c);
Json to_json(const PlaceProfile& p);
PlaceProfile place_profile_from_json(const Json& j);
Json to_json(const ArithEquivResult& r);

Json to_json(const GroupDescriptor& g);
GroupDescriptor group_descriptor_from_json(const Json& j);

Json to_json(const FamilyCertificate& c);
/// The descriptor list of a certificate (or a bare descriptor array); all
/// derived fields are ignored.
std::vector<GroupDescriptor> descriptors_from_json(const Json& j);

/// {"schema_version", "command", "inputs", "result", "checks"}.
Json envelope(const std::vector<std::string>& command, Json inputs, Json result, Json checks);

/// Parses text; malformed JSON becomes InvalidInput.
Json parse_json(const std::string& text);

}  // namespace arithcert
