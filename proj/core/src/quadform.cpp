#include "arithcert/quadform.hpp"

#include <algorithm>
#include <sstream>

#include "arithcert/error.hpp"

namespace arithcert {

namespace {

constexpr long kCandidateLimit = 1'000'000;

// 1, -1, 2, -2, 3, ...
Integer candidate(long index) {
  const long magnitude = index / 2 + 1;
  return (index % 2 == 0) ? Integer(magnitude) : Integer(-magnitude);
}

bool sign_allowed(const Integer& a, const Signature& sig) {
  return sgn(a) > 0 ? sig.positive > 0 : sig.negative > 0;
}

std::set<Place> finite_places_of(std::initializer_list<Rational> values) {
  std::set<Place> out;
  for (const Rational& q : values) {
    for (std::uint64_t p : prime_support(q)) out.insert(Place::finite(p));
  }
  out.insert(Place::finite(2));
  return out;
}

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  return squarefree_class(Rational(n)) == n;
}

}  // namespace

QuadForm::QuadForm(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidInput("quadratic form must have dimension >= 1");
  for (Rational& a : entries_) {
    if (a == 0) throw ZeroInput("quadratic form entries must be nonzero");
    a.canonicalize();
  }
}

Rational QuadForm::determinant() const {
  Rational d = 1;
  for (const Rational& a : entries_) d *= a;
  return d;
}

std::string QuadForm::to_string() const {
  std::ostringstream out;
  out << '<';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ',';
    out << arithcert::to_string(entries_[i]);
  }
  out << '>';
  return out.str();
}

int real_hasse(const Signature& sig) {
  const unsigned s = sig.negative;
  const unsigned pairs = s < 2 ? 0 : s * (s - 1) / 2;
  return pairs % 2 == 0 ? 1 : -1;
}

int QFProfile::hasse_at(const Place& v) const {
  if (v.is_real()) return real_hasse(signature);
  return hasse_negative.contains(v) ? -1 : 1;
}

SquareClass QFProfile::det_class(const Place& v) const { return square_class(Rational(det), v); }

int hasse_invariant(const QuadForm& f, const Place& v) {
  const auto& a = f.entries();
  int c = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) c *= hilbert(a[i], a[j], v);
  }
  return c;
}

QFProfile invariants(const QuadForm& f) {
  QFProfile p;
  p.dim = static_cast<unsigned>(f.dim());
  p.det = squarefree_class(f.determinant());
  for (const Rational& a : f.entries()) {
    if (sgn(a) > 0) {
      ++p.signature.positive;
    } else {
      ++p.signature.negative;
    }
  }
  for (const Place& v : relevant_places(f.entries())) {
    if (v.is_finite() && hasse_invariant(f, v) == -1) p.hasse_negative.insert(v);
  }
  return p;
}

bool locally_realizable(unsigned dim, const Rational& det, int hasse, const Place& v) {
  if (dim == 0 || det == 0) return false;
  if (v.is_real()) return true;
  if (dim == 1) return hasse == 1;
  if (dim == 2 && same_square_class(-det, 1, v)) return hasse == 1;
  return true;
}

namespace {

// Isotropy of a local form from (dim, det, Hasse).
bool locally_isotropic(unsigned n, const Rational& d, int c, const Place& v) {
  switch (n) {
    case 1: return false;
    case 2: return same_square_class(-d, 1, v);
    case 3: return hilbert(-1, -d, v) == c;
    case 4: return !same_square_class(d, 1, v) || c == hilbert(-1, -1, v);
    default: return true;
  }
}

}  // namespace

unsigned local_witt_index(unsigned dim, const Rational& det, int hasse, const Place& v) {
  if (v.is_real()) throw InvalidInput("local_witt_index: finite place required");
  if (!locally_realizable(dim, det, hasse, v)) {
    throw InvalidInput("no form over Q_" + v.to_string() + " has these invariants");
  }
  unsigned index = 0;
  unsigned n = dim;
  Rational d = det;
  int c = hasse;
  // Split off hyperbolic planes: f = H + g gives d(g) = -d(f) and
  // c(g) = c(f) * (-1, -d(f)).
  while (n >= 2 && locally_isotropic(n, d, c, v)) {
    c *= hilbert(-1, -d, v);
    d = -d;
    n -= 2;
    ++index;
  }
  return index;
}

unsigned witt_index(const QuadForm& f, const Place& v) {
  if (v.is_real()) {
    unsigned pos = 0;
    for (const Rational& a : f.entries()) pos += sgn(a) > 0 ? 1 : 0;
    return std::min<unsigned>(pos, static_cast<unsigned>(f.dim()) - pos);
  }
  return local_witt_index(static_cast<unsigned>(f.dim()), f.determinant(),
                          hasse_invariant(f, v), v);
}

bool isometric(const QuadForm& f, const QuadForm& g) { return invariants(f) == invariants(g); }

Admissibility check_admissible(const QFProfile& p) {
  if (p.dim == 0) throw InvalidInput("profile dimension must be >= 1");
  if (p.signature.dim() != p.dim) {
    throw InvalidInput("signature (" + std::to_string(p.signature.positive) + "," +
                       std::to_string(p.signature.negative) + ") does not sum to dim " +
                       std::to_string(p.dim));
  }
  if (!is_squarefree(p.det)) {
    throw InvalidInput("profile det must be a nonzero squarefree integer, got " + p.det.get_str());
  }
  for (const Place& v : p.hasse_negative) {
    if (v.is_real()) throw InvalidInput("real Hasse value is implied by the signature");
  }

  const int det_sign = sgn(p.det) < 0 ? -1 : 1;
  const int sig_sign = (p.signature.negative % 2 == 0) ? 1 : -1;
  if (det_sign != sig_sign) return {false, "det-sign"};

  const int finite_product = (p.hasse_negative.size() % 2 == 0) ? 1 : -1;
  if (finite_product * real_hasse(p.signature) != 1) return {false, "product-formula"};

  if (p.dim == 1 && !p.hasse_negative.empty()) return {false, "dim1-hasse"};
  if (p.dim == 2) {
    for (const Place& v : p.hasse_negative) {
      if (same_square_class(-Rational(p.det), 1, v)) return {false, "dim2-hyperbolic-hasse"};
    }
  }
  return {};
}

bool admissible(const QFProfile& p) { return check_admissible(p).ok; }

QFProfile split_off(const QFProfile& p, const Rational& a) {
  if (p.dim < 2) throw InvalidInput("split_off: dimension must be >= 2");
  QFProfile rest;
  rest.dim = p.dim - 1;
  rest.det = squarefree_class(Rational(p.det) / a);
  rest.signature = p.signature;
  if (sgn(a) > 0) {
    if (rest.signature.positive == 0) throw InvalidInput("split_off: no positive slot");
    --rest.signature.positive;
  } else {
    if (rest.signature.negative == 0) throw InvalidInput("split_off: no negative slot");
    --rest.signature.negative;
  }
  // c(<a> + g) = c(g) * (a, d(g)).
  std::set<Place> places = finite_places_of({a, Rational(rest.det)});
  places.insert(p.hasse_negative.begin(), p.hasse_negative.end());
  for (const Place& v : places) {
    if (p.hasse_at(v) * hilbert(a, Rational(rest.det), v) == -1) rest.hasse_negative.insert(v);
  }
  return rest;
}

namespace {

// Least x (in candidate order) with <x, x*d> realizing the binary profile.
Integer realize_binary(const QFProfile& p) {
  const Rational c = -Rational(p.det);
  for (long i = 0; i < kCandidateLimit; ++i) {
    const Integer x = candidate(i);
    const Integer y = x * p.det;
    const bool x_pos = sgn(x) > 0;
    const bool y_pos = sgn(y) > 0;
    const unsigned pos = (x_pos ? 1U : 0U) + (y_pos ? 1U : 0U);
    if (pos != p.signature.positive) continue;

    std::set<Place> places = finite_places_of({Rational(x), c});
    places.insert(p.hasse_negative.begin(), p.hasse_negative.end());
    const bool fits = std::all_of(places.begin(), places.end(), [&](const Place& v) {
      return hilbert(Rational(x), c, v) == p.hasse_at(v);
    });
    if (fits) return x;
  }
  throw SearchExhausted("realize: no binary block found within the candidate limit");
}

}  // namespace

QuadForm realize(const QFProfile& target) {
  const Admissibility adm = check_admissible(target);
  if (!adm.ok) {
    throw Inadmissible(adm.violated, "profile is not realizable: " + adm.violated);
  }

  std::vector<Rational> entries;
  QFProfile rest = target;
  while (rest.dim > 2) {
    bool placed = false;
    for (long i = 0; i < kCandidateLimit && !placed; ++i) {
      const Integer a = candidate(i);
      if (!sign_allowed(a, rest.signature)) continue;
      QFProfile next = split_off(rest, Rational(a));
      if (!admissible(next)) continue;
      entries.emplace_back(a);
      rest = std::move(next);
      placed = true;
    }
    if (!placed) throw SearchExhausted("realize: no admissible diagonal entry found");
  }
  if (rest.dim == 2) {
    const Integer x = realize_binary(rest);
    entries.emplace_back(x);
    entries.emplace_back(x * rest.det);
  } else {
    entries.emplace_back(rest.det);
  }
  return QuadForm(std::move(entries));
}

}  // namespace arithcert
