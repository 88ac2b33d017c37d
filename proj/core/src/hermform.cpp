#include "arithcert/hermform.hpp"

#include <algorithm>

#include "arithcert/error.hpp"

namespace arithcert {

namespace {

void validate_structure(const HermProfile& h) {
  if (h.dim == 0) throw InvalidInput("hermitian dimension must be >= 1");
  for (const auto& [place, sig] : h.nonsplit_real) {
    if (sig.dim() != h.dim) {
      throw InvalidInput("signature at " + place + " does not sum to " + std::to_string(h.dim));
    }
  }
  for (const auto& [place, d] : h.finite_disc) {
    if (d != 1 && d != -1) throw InvalidInput("discriminant at " + place + " must be +1 or -1");
  }
  for (const auto& [place, ext] : h.local_ext) {
    if (ext.minus_one_is_norm != 1 && ext.minus_one_is_norm != -1) {
      throw InvalidInput("norm character at " + place + " must be +1 or -1");
    }
  }
}

int landherr_product(const HermProfile& h) {
  int product = 1;
  for (const auto& [place, sig] : h.nonsplit_real) {
    if (sig.negative % 2 != 0) product = -product;
  }
  for (const auto& [place, d] : h.finite_disc) product *= d;
  return product;
}

enum class Kind { Split, NonsplitReal, NonsplitFinite, Unlisted };

Kind kind_of(const HermProfile& h, const std::string& place) {
  if (h.split_places.contains(place)) return Kind::Split;
  if (h.nonsplit_real.contains(place)) return Kind::NonsplitReal;
  if (h.finite_disc.contains(place) || h.local_ext.contains(place)) return Kind::NonsplitFinite;
  return Kind::Unlisted;
}

}  // namespace

int HermProfile::disc_at(const std::string& place) const {
  const auto it = finite_disc.find(place);
  return it == finite_disc.end() ? 1 : it->second;
}

std::string landherr_violation(const HermProfile& h) {
  validate_structure(h);
  for (const std::string& place : h.split_places) {
    if (h.nonsplit_real.contains(place)) {
      throw InvalidInput("place " + place + " is listed both as split and as a real non-split place");
    }
    if (h.disc_at(place) != 1) return "split-place-disc";
  }
  // Finite support holds by construction: finite_disc is a finite map.
  if (landherr_product(h) != 1) return "product";
  return {};
}

bool landherr_admissible(const HermProfile& h) { return landherr_violation(h).empty(); }

HermProfile herm_construct(const HermConstraints& c) {
  HermProfile h;
  h.dim = c.dim;
  h.nonsplit_real = c.signatures;
  h.finite_disc = c.disc;
  h.split_places = c.split_places;
  h.local_ext = c.local_ext;
  validate_structure(h);

  for (const std::string& place : c.split_places) {
    if (h.disc_at(place) != 1) {
      throw Inadmissible("split-place-disc", "discriminant -1 requested at split place " + place);
    }
  }

  const int product = landherr_product(h);
  if (c.balance_place) {
    const std::string& w0 = *c.balance_place;
    if (c.disc.contains(w0)) {
      throw InvalidInput("balance place " + w0 + " must not carry a prescribed discriminant");
    }
    if (c.split_places.contains(w0) && product != 1) {
      throw Inadmissible("split-place-disc",
                         "product condition forces d = -1 at split balance place " + w0);
    }
    h.finite_disc[w0] = product;
  } else if (product != 1) {
    throw Inadmissible("product", "Landherr product condition fails and no balance place given");
  }

  const std::string violation = landherr_violation(h);
  if (!violation.empty()) throw Inadmissible(violation, "constructed profile violates " + violation);
  return h;
}

LocalRank su_local_rank(const HermProfile& h, const std::string& place) {
  validate_structure(h);
  const unsigned m = h.dim;
  switch (kind_of(h, place)) {
    case Kind::Split:
      return {m - 1, "split"};
    case Kind::NonsplitReal: {
      const Signature& sig = h.nonsplit_real.at(place);
      return {std::min(sig.positive, sig.negative), "signature"};
    }
    case Kind::NonsplitFinite: {
      const auto ext_it = h.local_ext.find(place);
      const LocalExtension ext = ext_it == h.local_ext.end() ? LocalExtension{} : ext_it->second;
      const std::string method = ext.residue_char == 2 ? "dyadic-lookup" : "discriminant-rule";
      if (m % 2 != 0) return {(m - 1) / 2, method};
      // Hyperbolic iff det lies in (-1)^(m/2) * N(K_v^x).
      const int hyperbolic_disc = ((m / 2) % 2 == 0) ? 1 : ext.minus_one_is_norm;
      const unsigned rank = h.disc_at(place) == hyperbolic_disc ? m / 2 : m / 2 - 1;
      return {rank, method};
    }
    case Kind::Unlisted:
      break;
  }
  throw InvalidInput("place " + place + " is not described by the hermitian profile");
}

bool herm_locally_isomorphic(const HermProfile& h1, const HermProfile& h2,
                             const std::string& place) {
  if (h1.dim != h2.dim) throw InvalidInput("hermitian profiles of different dimension");
  const Kind k1 = kind_of(h1, place);
  const Kind k2 = kind_of(h2, place);
  if (k1 != k2) return false;
  switch (k1) {
    case Kind::Split:
      return true;
    case Kind::NonsplitReal: {
      const Signature& a = h1.nonsplit_real.at(place);
      const Signature& b = h2.nonsplit_real.at(place);
      return std::minmax(a.positive, a.negative) == std::minmax(b.positive, b.negative);
    }
    case Kind::NonsplitFinite:
    case Kind::Unlisted:
      return h1.disc_at(place) == h2.disc_at(place);
  }
  return false;
}

}  // namespace arithcert
