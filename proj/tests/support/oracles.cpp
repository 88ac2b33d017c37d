#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t modulus_for(std::uint64_t p) { return p == 2 ? ipow(2, 8) : ipow(p, 5); }

// Clears denominators with a square factor and strips p^2 factors.
Integer integral_part(const Rational& a, std::uint64_t p) {
  Integer n = a.get_num() * a.get_den();
  const Integer pp = Integer(static_cast<unsigned long>(p * p));
  while (n % pp == 0) n /= pp;
  return n;
}

std::uint64_t reduce(const Integer& n, std::uint64_t m) {
  Integer r = n % Integer(static_cast<unsigned long>(m));
  if (r < 0) r += static_cast<unsigned long>(m);
  return r.get_ui();
}

std::vector<bool> squares_mod(std::uint64_t m) {
  std::vector<bool> sq(m, false);
  for (std::uint64_t z = 0; z < m; ++z) sq[(z * z) % m] = true;
  return sq;
}

// Primitive solution: x or y is a unit (if both were divisible by p the
// right side would be divisible by p^2 while z stays a unit, given that a
// and b have no p^2 factor). Scale that coordinate to 1.
bool solvable(std::uint64_t a, std::uint64_t b, std::uint64_t m, const std::vector<bool>& sq) {
  for (std::uint64_t t = 0; t < m; ++t) {
    const std::uint64_t t2 = (t * t) % m;
    if (sq[(a + b * t2) % m]) return true;
    if (sq[(a * t2 + b) % m]) return true;
  }
  return false;
}

}  // namespace

int hilbert(const Rational& a, const Rational& b, std::uint64_t p) {
  if (a == 0 || b == 0) throw std::invalid_argument("zero");
  if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
  const std::uint64_t m = modulus_for(p);
  const auto sq = squares_mod(m);
  return solvable(reduce(integral_part(a, p), m), reduce(integral_part(b, p), m), m, sq) ? 1 : -1;
}

HilbertTable::HilbertTable(std::uint64_t p) : p_(p), modulus_(p ? modulus_for(p) : 1) {
  if (p_ == 0) return;
  unit_square_.assign(modulus_, false);
  for (std::uint64_t z = 0; z < modulus_; ++z) {
    if (z % p_ != 0) unit_square_[(z * z) % modulus_] = true;
  }
}

std::size_t HilbertTable::class_of(const Integer& a) {
  // a ~ r iff a*r is a square: even valuation and a unit square residue.
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    Integer prod = a * reps_[i];
    const Integer pp = Integer(static_cast<unsigned long>(p_ * p_));
    while (prod % pp == 0) prod /= pp;
    if (prod % Integer(static_cast<unsigned long>(p_)) == 0) continue;
    if (unit_square_[reduce(prod, modulus_)]) return i;
  }
  reps_.push_back(a);
  for (auto& row : memo_) row.push_back(0);
  memo_.emplace_back(reps_.size(), 0);
  return reps_.size() - 1;
}

int HilbertTable::operator()(const Rational& a, const Rational& b) {
  if (p_ == 0) return (a < 0 && b < 0) ? -1 : 1;
  const std::size_t i = class_of(integral_part(a, p_));
  const std::size_t j = class_of(integral_part(b, p_));
  int& slot = memo_[i][j];
  if (slot == 0) {
    static thread_local std::vector<bool> sq;
    static thread_local std::uint64_t sq_mod = 0;
    if (sq_mod != modulus_) {
      sq = squares_mod(modulus_);
      sq_mod = modulus_;
    }
    slot = solvable(reduce(reps_[i], modulus_), reduce(reps_[j], modulus_), modulus_, sq) ? 1 : -1;
  }
  return slot;
}

bool isotropic_mod(const std::vector<long>& entries, std::uint64_t p) {
  const std::uint64_t m = modulus_for(p);
  const std::size_t n = entries.size();
  std::vector<std::uint64_t> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = reduce(Integer(entries[i]), m);
  if (n == 1) return false;
  // Values a_k * w^2 per coordinate.
  std::vector<std::vector<bool>> values(n, std::vector<bool>(m, false));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::uint64_t w = 0; w < m; ++w) values[k][(a[k] * ((w * w) % m)) % m] = true;
  }
  // Some coordinate i is a unit; scale it to 1. Enumerate all but one of the
  // remaining coordinates explicitly (n <= 3 keeps this to one loop).
  if (n > 3) throw std::invalid_argument("isotropic_mod handles dimension <= 3");
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != i) rest.push_back(k);
    }
    if (rest.size() == 1) {
      if (values[rest[0]][(m - a[i]) % m]) return true;
      continue;
    }
    for (std::uint64_t y = 0; y < m; ++y) {
      const std::uint64_t partial = (a[i] + a[rest[0]] * ((y * y) % m)) % m;
      if (values[rest[1]][(m - partial) % m]) return true;
    }
  }
  return false;
}

unsigned min_max_class(unsigned n, unsigned c) {
  unsigned best = n;
  std::vector<unsigned> sizes(c, 0);
  // Every coloring has a size vector summing to n; enumerate all of them.
  const auto rec = [&](auto&& self, unsigned i, unsigned left) -> void {
    if (i + 1 == c) {
      sizes[i] = left;
      best = std::min(best, *std::max_element(sizes.begin(), sizes.end()));
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      sizes[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, n);
  return best;
}

namespace {

using Poly = std::vector<long>;  // constant term first, mod p

void trim(Poly& f) {
  while (f.size() > 1 && f.back() == 0) f.pop_back();
}

long inv_mod(long a, long p) {
  long r = 1, e = p - 2, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Returns quotient if g divides f exactly.
bool divides(const Poly& f, const Poly& g, long p, Poly& q) {
  Poly r = f;
  const std::size_t df = r.size() - 1, dg = g.size() - 1;
  if (df < dg) return false;
  q.assign(df - dg + 1, 0);
  const long li = inv_mod(g.back(), p);
  for (std::size_t i = df + 1; i-- > dg;) {
    const long c = r[i] * li % p;
    q[i - dg] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) r[i - dg + j] = ((r[i - dg + j] - c * g[j]) % p + p) % p;
  }
  for (std::size_t i = 0; i < dg; ++i) {
    if (r[i] != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<unsigned> factor_degrees_by_trial(const std::vector<long>& f0, std::uint64_t pu) {
  const long p = static_cast<long>(pu);
  Poly f;
  for (long c : f0) f.push_back(((c % p) + p) % p);
  if (f.back() == 0) return {};
  trim(f);
  std::vector<unsigned> out;
  while (f.size() > 1) {
    const unsigned n = static_cast<unsigned>(f.size() - 1);
    bool found = false;
    for (unsigned d = 1; d <= n / 2 && !found; ++d) {
      // All monic polynomials of degree d, coefficients as base-p digits.
      const std::uint64_t count = ipow(pu, d);
      for (std::uint64_t code = 0; code < count && !found; ++code) {
        Poly g(d + 1, 0);
        std::uint64_t x = code;
        for (unsigned i = 0; i < d; ++i) {
          g[i] = static_cast<long>(x % pu);
          x /= pu;
        }
        g[d] = 1;
        Poly q;
        if (divides(f, g, p, q)) {
          Poly q2;
          if (divides(q, g, p, q2)) return {};  // repeated factor
          out.push_back(d);
          f = q;
          found = true;
        }
      }
    }
    if (!found) {
      out.push_back(n);
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned grid_sign_changes(const std::vector<long>& f, unsigned k) {
  long bound = 0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) bound = std::max(bound, std::labs(f[i]));
  bound = bound / std::labs(f.back()) + 2;
  const auto eval = [&](const Rational& x) {
    Rational r = 0;
    for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
  };
  const long steps = bound * 2 * (1L << k);
  unsigned changes = 0;
  int prev = 0;
  for (long i = 0; i <= steps; ++i) {
    const Rational x = Rational(-bound) + Rational(i) / Rational(1L << k);
    const int s = sgn(eval(x));
    if (s == 0) {
      ++changes;  // exact rational root on the grid
      prev = 0;
      continue;
    }
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

std::vector<Rational> trace_form(unsigned m, const Rational& c, const Rational& delta) {
  std::vector<Rational> out;
  for (unsigned i = 0; i < m; ++i) {
    const Rational x = i + 1 == m ? c : Rational(1);
    out.push_back(x);
    out.push_back(-delta * x);
  }
  return out;
}

}  // namespace oracle
