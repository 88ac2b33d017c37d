#include "arithcert/localsym.hpp"

#include <set>

#include "arithcert/error.hpp"

namespace arithcert {

namespace {

struct UnitSplit {
  long exponent;  // v_p(q)
  Rational unit;  // q / p^exponent
};

UnitSplit split_unit(const Rational& q, std::uint64_t p) {
  const long e = valuation(q, p);
  Integer pe;
  mpz_ui_pow_ui(pe.get_mpz_t(), p, static_cast<unsigned long>(e < 0 ? -e : e));
  Rational unit = e >= 0 ? Rational(q / pe) : Rational(q * pe);
  unit.canonicalize();
  return {e, unit};
}

// Residue of a 2-adic unit modulo 8. den^-1 == den (mod 8) for odd den.
unsigned unit_mod8(const Rational& u) {
  Integer t = u.get_num() * u.get_den();
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), t.get_mpz_t(), 8);
  return static_cast<unsigned>(r.get_ui());
}

int legendre_unit(const Rational& u, std::uint64_t p) {
  return legendre(u.get_num(), p) * legendre(u.get_den(), p);
}

void require_nonzero(const Rational& a, const char* what) {
  if (a == 0) throw ZeroInput(std::string(what) + ": zero argument");
}

}  // namespace

Place Place::finite(std::uint64_t p) {
  if (!is_prime(p)) throw NotPrime("not a prime: " + std::to_string(p));
  return Place(p);
}

Place Place::parse(std::string_view text) {
  if (text == "real" || text == "inf" || text == "infinity") return real();
  if (text.empty()) throw InvalidInput("empty place");
  std::uint64_t p = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw InvalidInput("unrecognized place '" + std::string(text) + "'");
    if (p > (UINT64_MAX - 9) / 10) throw InvalidInput("place out of range");
    p = p * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return finite(p);
}

std::string Place::to_string() const {
  return is_real() ? std::string("real") : std::to_string(prime_);
}

int legendre(const Integer& a, std::uint64_t p) {
  if (p == 2) throw InvalidInput("legendre: p must be odd");
  if (!is_prime(p)) throw NotPrime("legendre: not a prime: " + std::to_string(p));
  Integer pz(static_cast<unsigned long>(p));
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), pz.get_mpz_t());
  return mpz_legendre(r.get_mpz_t(), pz.get_mpz_t());
}

std::uint64_t least_nonresidue(std::uint64_t p) {
  for (std::uint64_t u = 2;; ++u) {
    if (legendre(Integer(static_cast<unsigned long>(u)), p) == -1) return u;
  }
}

int hilbert(const Rational& a, const Rational& b, const Place& v) {
  require_nonzero(a, "hilbert");
  require_nonzero(b, "hilbert");
  if (v.is_real()) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;

  const std::uint64_t p = v.prime();
  const UnitSplit sa = split_unit(a, p);
  const UnitSplit sb = split_unit(b, p);
  const long alpha = sa.exponent;
  const long beta = sb.exponent;

  if (p != 2) {
    int result = 1;
    const bool minus_one_nonsquare = (p % 4) == 3;
    if (minus_one_nonsquare && (alpha & 1) && (beta & 1)) result = -result;
    if (beta & 1) result *= legendre_unit(sa.unit, p);
    if (alpha & 1) result *= legendre_unit(sb.unit, p);
    return result;
  }

  const unsigned u = unit_mod8(sa.unit);
  const unsigned w = unit_mod8(sb.unit);
  auto eps = [](unsigned x) { return ((x - 1) / 2) & 1U; };
  auto omega = [](unsigned x) { return ((x * x - 1) / 8) & 1U; };
  unsigned e = eps(u) * eps(w);
  if (alpha & 1) e += omega(w);
  if (beta & 1) e += omega(u);
  return (e & 1U) ? -1 : 1;
}

SquareClass square_class(const Rational& a, const Place& v) {
  require_nonzero(a, "square_class");
  if (v.is_real()) return {v, Rational(sgn(a) < 0 ? -1 : 1)};

  const std::uint64_t p = v.prime();
  const UnitSplit s = split_unit(a, p);
  const bool odd_exponent = (s.exponent & 1) != 0;
  Integer rep;
  if (p != 2) {
    rep = legendre_unit(s.unit, p) == 1 ? Integer(1)
                                        : Integer(static_cast<unsigned long>(least_nonresidue(p)));
  } else {
    switch (unit_mod8(s.unit)) {
      case 1: rep = 1; break;
      case 3: rep = -5; break;
      case 5: rep = 5; break;
      default: rep = -1; break;
    }
  }
  if (odd_exponent) rep *= static_cast<unsigned long>(p);
  return {v, Rational(rep)};
}

bool same_square_class(const Rational& a, const Rational& b, const Place& v) {
  return square_class(a, v) == square_class(b, v);
}

std::vector<Place> relevant_places(std::span<const Rational> values) {
  std::set<Place> places{Place::real(), Place::finite(2)};
  for (const Rational& q : values) {
    for (std::uint64_t p : prime_support(q)) places.insert(Place::finite(p));
  }
  return {places.begin(), places.end()};
}

std::vector<Place> hilbert_support(const Rational& a, const Rational& b) {
  require_nonzero(a, "hilbert_support");
  require_nonzero(b, "hilbert_support");
  const Rational both[] = {a, b};
  std::vector<Place> out;
  for (const Place& v : relevant_places(both)) {
    if (hilbert(a, b, v) == -1) out.push_back(v);
  }
  return out;
}

bool product_formula_check(const Rational& a, const Rational& b) {
  return hilbert_support(a, b).size() % 2 == 0;
}

}  // namespace arithcert
