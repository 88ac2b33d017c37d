#include "arithcert/brauer.hpp"

#include <set>
#include <sstream>

#include "arithcert/error.hpp"

namespace arithcert {

namespace {

// Representative of q mod 1 in [0, 1).
Rational frac(const Rational& q) {
  Integer floor_q;
  mpz_fdiv_q(floor_q.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - floor_q;
  r.canonicalize();
  return r;
}

std::set<Place> support_union(const BrauerClass& a, const BrauerClass& b) {
  std::set<Place> out;
  for (const auto& [v, x] : a.invariants()) out.insert(v);
  for (const auto& [v, x] : b.invariants()) out.insert(v);
  return out;
}

}  // namespace

std::string to_string(BaseField b) {
  return b == BaseField::Rationals ? "Q" : "imaginary-quadratic";
}

BaseField parse_base_field(const std::string& text) {
  if (text == "Q") return BaseField::Rationals;
  if (text == "imaginary-quadratic") return BaseField::ImaginaryQuadratic;
  throw InvalidInput("unknown base field '" + text + "'");
}

BrauerClass BrauerClass::from_invariants(const std::map<Place, Rational>& inv, BaseField base) {
  BrauerClass out;
  out.base_ = base;
  Rational sum = 0;
  for (const auto& [v, raw] : inv) {
    Rational x = raw;
    x.canonicalize();
    if (x < 0 || x >= 1) {
      throw InvalidInput("invariant at " + v.to_string() + " must lie in [0, 1), got " +
                         arithcert::to_string(x));
    }
    if (v.is_real()) {
      if (base == BaseField::ImaginaryQuadratic && x != 0) {
        throw InvalidInput("an imaginary quadratic base has no real place");
      }
      if (x != 0 && x != Rational(1, 2)) {
        throw InvalidInput("real invariant must be 0 or 1/2, got " + arithcert::to_string(x));
      }
    }
    sum += x;
    if (x != 0) out.inv_.emplace(v, x);
  }
  if (sum.get_den() != 1) {
    throw InvalidInput("invariants sum to " + arithcert::to_string(frac(sum)) + ", not 0 mod 1");
  }
  return out;
}

BrauerClass validate_class(const std::map<Place, Rational>& inv, BaseField base) {
  return BrauerClass::from_invariants(inv, base);
}

Rational BrauerClass::at(const Place& v) const {
  const auto it = inv_.find(v);
  return it == inv_.end() ? Rational(0) : it->second;
}

std::string BrauerClass::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [v, x] : inv_) {
    if (!first) out << ", ";
    first = false;
    out << v.to_string() << ": " << arithcert::to_string(x);
  }
  out << '}';
  return out.str();
}

BrauerClass tensor(const BrauerClass& a, const BrauerClass& b) {
  if (a.base() != b.base()) throw InvalidInput("tensor of classes over different base fields");
  std::map<Place, Rational> sum;
  for (const Place& v : support_union(a, b)) sum[v] = frac(a.at(v) + b.at(v));
  return BrauerClass::from_invariants(sum, a.base());
}

BrauerClass opposite(const BrauerClass& a) {
  std::map<Place, Rational> neg;
  for (const auto& [v, x] : a.invariants()) neg[v] = frac(-x);
  return BrauerClass::from_invariants(neg, a.base());
}

Integer index(const BrauerClass& a) {
  Integer result = 1;
  for (const auto& [v, x] : a.invariants()) result = lcm(result, x.get_den());
  return result;
}

Integer local_index(const BrauerClass& a, const Place& v) { return a.at(v).get_den(); }

CSA opposite(const CSA& a) { return {opposite(a.cls), a.matrix_size}; }

bool csa_isomorphic(const CSA& a, const CSA& b) {
  return a.cls == b.cls && a.degree() == b.degree();
}

bool csa_locally_isomorphic(const CSA& a, const CSA& b, const Place& v) {
  return a.degree() == b.degree() && a.cls.at(v) == b.cls.at(v);
}

bool PairReport::all_pass() const {
  return c_order_is_d && d_order_is_d && disjoint_support && real_invariants_ok &&
         e1_index_is_d && e2_index_is_d && a_not_isomorphic_b && a_not_isomorphic_b_op &&
         locally_pm_everywhere && c_not_self_opposite && d_not_self_opposite;
}

PairReport check_pair(const BrauerClass& c, const BrauerClass& dcls, unsigned long d,
                      unsigned long k, bool c_ramified_at_real) {
  PairReport r;
  r.d = d;
  r.k = k;
  r.c_ramified_at_real = c_ramified_at_real;
  r.c = c;
  r.dcls = dcls;
  r.e1 = tensor(c, dcls);
  r.e2 = tensor(c, opposite(dcls));

  // A = M_k(E1), B = M_k(E2). Degrees agree when both E have index d.
  r.a = CSA{r.e1, k};
  r.b = CSA{r.e2, k};

  const Integer dz(d);
  r.c_order_is_d = index(c) == dz;
  r.d_order_is_d = index(dcls) == dz;
  r.e1_index_is_d = index(r.e1) == dz;
  r.e2_index_is_d = index(r.e2) == dz;

  r.disjoint_support = true;
  for (const auto& [v, x] : c.invariants()) {
    if (v.is_finite() && dcls.at(v) != 0) r.disjoint_support = false;
  }
  const Rational half(1, 2);
  r.real_invariants_ok = dcls.at(Place::real()) == 0 &&
                         c.at(Place::real()) == (c_ramified_at_real ? half : Rational(0));

  r.a_not_isomorphic_b = !csa_isomorphic(r.a, r.b);
  r.a_not_isomorphic_b_op = !csa_isomorphic(r.a, opposite(r.b));

  r.locally_pm_everywhere = r.a.degree() == r.b.degree();
  for (const Place& v : support_union(r.a.cls, r.b.cls)) {
    const Rational x = r.a.cls.at(v);
    const Rational y = r.b.cls.at(v);
    if (x != y && x != frac(-y)) r.locally_pm_everywhere = false;
  }

  r.c_not_self_opposite = opposite(c) != c;
  r.d_not_self_opposite = opposite(dcls) != dcls;
  return r;
}

PairReport find_division_pair(unsigned long d, unsigned long k, bool c_ramified_at_real,
                              BaseField base) {
  if (d < 3) throw InvalidInput("division degree d must be >= 3");
  if (k < 2) throw InvalidInput("matrix size k must be >= 2");
  if (c_ramified_at_real) {
    if (d % 2 != 0) throw InvalidInput("a class ramified at the real place needs even d");
    if (base != BaseField::Rationals) {
      throw InvalidInput("a class ramified at the real place needs the base field Q");
    }
  }

  std::uint64_t p = 3;
  auto take = [&p] {
    p = next_prime(p);
    return Place::finite(p);
  };
  const Rational first(1, static_cast<long>(d));
  const Rational last(static_cast<long>(d) - 1, static_cast<long>(d));

  std::map<Place, Rational> c_inv;
  if (c_ramified_at_real) {
    c_inv[Place::real()] = Rational(1, 2);
    c_inv[take()] = first;
    c_inv[take()] = frac(-Rational(1, 2) - first);
  } else {
    c_inv[take()] = first;
    c_inv[take()] = last;
  }
  std::map<Place, Rational> d_inv;
  d_inv[take()] = first;
  d_inv[take()] = last;

  return check_pair(BrauerClass::from_invariants(c_inv, base),
                    BrauerClass::from_invariants(d_inv, base), d, k, c_ramified_at_real);
}

}  // namespace arithcert
