#include "arithcert/intpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace arithcert {

namespace {

// ---- polynomials over Q -------------------------------------------------

using QPoly = std::vector<Rational>;

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const QPoly& a) { return static_cast<int>(a.size()) - 1; }

QPoly to_q(const std::vector<Integer>& c) { return {c.begin(), c.end()}; }

QPoly derivative(const QPoly& a) {
  QPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

// a = q*b + r
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (deg(a) >= deg(b)) {
    const std::size_t shift = a.size() - b.size();
    const Rational factor = a.back() / lead;
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

QPoly monic(QPoly a) {
  if (a.empty()) return a;
  const Rational lead = a.back();
  for (Rational& c : a) c /= lead;
  return a;
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(std::move(a));
}

int sign_at_pos_inf(const QPoly& a) { return sgn(a.back()); }
int sign_at_neg_inf(const QPoly& a) { return deg(a) % 2 == 0 ? sgn(a.back()) : -sgn(a.back()); }

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

// ---- polynomials over F_p, p < 2^32 --------------------------------------

using FpPoly = std::vector<std::uint64_t>;

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

FpPoly reduce(const IntPoly& f, std::uint64_t p) {
  FpPoly out;
  for (const Integer& c : f.coefficients()) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
    out.push_back(r.get_ui());
  }
  trim(out);
  return out;
}

FpPoly fp_rem(FpPoly a, const FpPoly& b, std::uint64_t p) {
  const std::uint64_t inv = inv_mod(b.back(), p);
  while (deg(a) >= deg(b)) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor = a.back() * inv % p;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - factor * b[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

FpPoly fp_quo(FpPoly a, const FpPoly& b, std::uint64_t p) {
  FpPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const std::uint64_t inv = inv_mod(b.back(), p);
  while (deg(a) >= deg(b)) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor = a.back() * inv % p;
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - factor * b[i] % p) % p;
    }
    trim(a);
  }
  trim(q);
  return q;
}

FpPoly fp_monic(FpPoly a, std::uint64_t p) {
  if (a.empty()) return a;
  const std::uint64_t inv = inv_mod(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  while (!b.empty()) {
    FpPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(std::move(a), p);
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  trim(prod);
  return fp_rem(std::move(prod), f, p);
}

FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly& f, std::uint64_t p) {
  FpPoly result{1};
  base = fp_rem(std::move(base), f, p);
  while (e) {
    if (e & 1U) result = fp_mulmod(result, base, f, p);
    base = fp_mulmod(base, base, f, p);
    e >>= 1U;
  }
  return result;
}

FpPoly fp_derivative(const FpPoly& a, std::uint64_t p) {
  FpPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * (i % p) % p);
  trim(d);
  return d;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

// ---- exhaustive factor search -------------------------------------------

constexpr std::uint64_t kKroneckerLimit = 20'000'000;

Integer primitive_content(const std::vector<Integer>& c) {
  Integer g = 0;
  for (const Integer& x : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{1};
  Integer m = abs(n);
  for (const Integer& p : prime_factors(m)) {
    long e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()) != 0) {
      m /= p;
      ++e;
    }
    const std::size_t base = out.size();
    Integer pk = 1;
    for (long i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Lagrange interpolation through (xs[i], ys[i]).
QPoly interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  const std::size_t n = xs.size();
  QPoly result(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    QPoly basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      QPoly next(basis.size() + 1, Rational(0));
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * xs[j];
      }
      basis = std::move(next);
      denom *= Rational(xs[i] - xs[j]);
    }
    const Rational scale = Rational(ys[i]) / denom;
    for (std::size_t t = 0; t < basis.size(); ++t) result[t] += basis[t] * scale;
  }
  trim(result);
  return result;
}

std::optional<IntPoly> kronecker_factor(const IntPoly& f, const std::vector<unsigned>& degrees) {
  const QPoly fq = to_q(f.coefficients());
  for (unsigned k : degrees) {
    // Points with small |f(x)| have few divisors.
    std::vector<std::pair<Integer, Integer>> pts;
    for (long i = 0; pts.size() < 3 * (k + 1) + 4; ++i) {
      const long x = (i % 2 == 0) ? i / 2 : -(i / 2 + 1);
      const Integer value = f(Integer(x));
      if (value == 0) return IntPoly(std::vector<Integer>{Integer(-x), Integer(1)});
      pts.emplace_back(Integer(x), value);
    }
    std::vector<std::pair<std::size_t, Integer>> by_count;
    for (const auto& [x, v] : pts) by_count.emplace_back(divisors(v).size(), x);
    std::stable_sort(by_count.begin(), by_count.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<Integer> xs;
    std::vector<std::vector<Integer>> options;
    for (std::size_t i = 0; i <= k; ++i) {
      const Integer x = by_count[i].second;
      xs.push_back(x);
      std::vector<Integer> ds = divisors(f(x));
      std::vector<Integer> signed_ds;
      for (const Integer& d : ds) {
        signed_ds.push_back(d);
        // Normalize the sign of the factor at the first point.
        if (i > 0) signed_ds.push_back(-d);
      }
      options.push_back(std::move(signed_ds));
    }

    std::uint64_t work = 1;
    for (const auto& o : options) {
      work *= o.size();
      if (work > kKroneckerLimit) throw SearchExhausted("factor search exceeds work limit");
    }

    std::vector<std::size_t> pos(k + 1, 0);
    std::vector<Integer> ys(k + 1);
    for (;;) {
      for (std::size_t i = 0; i <= k; ++i) ys[i] = options[i][pos[i]];
      QPoly g = interpolate(xs, ys);
      if (deg(g) == static_cast<int>(k) &&
          std::all_of(g.begin(), g.end(), [](const Rational& c) { return c.get_den() == 1; }) &&
          divmod(fq, g).second.empty()) {
        std::vector<Integer> gi;
        for (const Rational& c : g) gi.push_back(c.get_num());
        return IntPoly(std::move(gi));
      }
      std::size_t i = 0;
      while (i <= k && ++pos[i] == options[i].size()) pos[i++] = 0;
      if (i > k) break;
    }
  }
  return std::nullopt;
}

// Subset sums of a degree multiset, as a mask over 0..n.
std::vector<bool> subset_sums(const std::vector<unsigned>& parts, unsigned n) {
  std::vector<bool> reach(n + 1, false);
  reach[0] = true;
  for (unsigned d : parts) {
    for (unsigned s = n; s >= d; --s) {
      if (reach[s - d]) reach[s] = true;
      if (s == d) break;
    }
  }
  return reach;
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.size() < 2) throw InvalidInput("polynomial must have degree >= 1");
}

IntPoly::IntPoly(std::initializer_list<long> coefficients)
    : IntPoly(std::vector<Integer>(coefficients.begin(), coefficients.end())) {}

IntPoly IntPoly::parse(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (c == '[' || c == ']' || c == ',' || c == '\n' || c == '\r' || c == '\t') {
      cleaned.push_back(' ');
    } else {
      cleaned.push_back(c);
    }
  }
  std::istringstream in(cleaned);
  std::vector<Integer> coeffs;
  std::string token;
  while (in >> token) {
    const Rational q = parse_rational(token);
    if (q.get_den() != 1) throw InvalidInput("polynomial coefficients must be integers");
    coeffs.push_back(q.get_num());
  }
  return IntPoly(std::move(coeffs));
}

Integer IntPoly::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer IntPoly::content() const { return primitive_content(coeffs_); }

std::string IntPoly::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (!unit) out << mag.get_str() << '*';
    out << 'x';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

std::string IntPoly::to_list_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out << ", ";
    out << coeffs_[i].get_str();
  }
  out << ']';
  return out.str();
}

bool is_squarefree(const IntPoly& f) {
  const QPoly fq = to_q(f.coefficients());
  return deg(gcd(fq, derivative(fq))) == 0;
}

unsigned sturm_count(const IntPoly& f) {
  const QPoly fq = to_q(f.coefficients());
  if (deg(gcd(fq, derivative(fq))) != 0) throw InvalidInput("sturm_count: polynomial is not squarefree");
  std::vector<QPoly> chain{fq, derivative(fq)};
  while (true) {
    QPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    // -r, scaled by a positive constant to keep coefficients small.
    const Rational scale = -1 / abs(r.back());
    for (Rational& c : r) c *= scale;
    chain.push_back(std::move(r));
  }
  std::vector<int> at_neg, at_pos;
  for (const QPoly& p : chain) {
    at_neg.push_back(sign_at_neg_inf(p));
    at_pos.push_back(sign_at_pos_inf(p));
  }
  return static_cast<unsigned>(sign_changes(at_neg) - sign_changes(at_pos));
}

std::optional<std::vector<unsigned>> try_factor_degrees_mod_p(const IntPoly& f, std::uint64_t p) {
  if (!is_prime(p)) throw NotPrime("not a prime: " + std::to_string(p));
  if (p >= (std::uint64_t{1} << 32)) throw InvalidInput("factor_degrees_mod_p: p must be < 2^32");
  FpPoly g = reduce(f, p);
  if (deg(g) != static_cast<int>(f.degree())) return std::nullopt;
  if (deg(fp_gcd(g, fp_derivative(g, p), p)) != 0) return std::nullopt;

  g = fp_monic(std::move(g), p);
  std::vector<unsigned> degrees;
  const FpPoly x{0, 1};
  FpPoly h = fp_rem(x, g, p);
  for (unsigned i = 1; deg(g) >= static_cast<int>(2 * i); ++i) {
    h = fp_powmod(h, p, g, p);
    const FpPoly common = fp_gcd(fp_sub(h, x, p), g, p);
    if (deg(common) > 0) {
      for (int c = 0; c < deg(common) / static_cast<int>(i); ++c) degrees.push_back(i);
      g = fp_quo(g, common, p);
      h = fp_rem(h, g, p);
    }
  }
  if (deg(g) > 0) degrees.push_back(static_cast<unsigned>(deg(g)));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

std::vector<unsigned> factor_degrees_mod_p(const IntPoly& f, std::uint64_t p) {
  auto result = try_factor_degrees_mod_p(f, p);
  if (!result) {
    throw BadPrime("bad prime " + std::to_string(p) + " for " + f.to_string() +
                   ": leading coefficient vanishes or reduction is not squarefree");
  }
  return *result;
}

std::optional<std::uint64_t> eisenstein_prime(const IntPoly& f) {
  const auto& c = f.coefficients();
  Integer g = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c[i].get_mpz_t());
  if (g == 0) return std::nullopt;
  for (const Integer& p : prime_factors(g)) {
    if (mpz_divisible_p(f.leading().get_mpz_t(), p.get_mpz_t()) != 0) continue;
    const Integer p2 = p * p;
    if (mpz_divisible_p(c[0].get_mpz_t(), p2.get_mpz_t()) != 0) continue;
    if (p.fits_ulong_p()) return p.get_ui();
  }
  return std::nullopt;
}

std::optional<IntPoly> find_factor(const IntPoly& f) {
  std::vector<unsigned> degrees;
  for (unsigned k = 1; k <= f.degree() / 2; ++k) degrees.push_back(k);
  return kronecker_factor(f, degrees);
}

bool is_irreducible(const IntPoly& f) {
  const unsigned n = f.degree();
  if (n == 1) return true;
  if (eisenstein_prime(f)) return true;
  if (!is_squarefree(f)) return false;

  // A factor of degree k over Q reduces to a product of factors whose degrees
  // sum to k at every good prime.
  std::vector<bool> possible(n + 1, true);
  unsigned good = 0;
  for (std::uint64_t p = 2; good < 40 && p < 5000; p = next_prime(p)) {
    auto degrees = try_factor_degrees_mod_p(f, p);
    if (!degrees) continue;
    ++good;
    const auto sums = subset_sums(*degrees, n);
    for (unsigned k = 1; k < n; ++k) possible[k] = possible[k] && sums[k];
    bool any = false;
    for (unsigned k = 1; k < n; ++k) any = any || possible[k];
    if (!any) return true;
  }

  std::vector<unsigned> candidates;
  for (unsigned k = 1; k <= n / 2; ++k) {
    if (possible[k] || possible[n - k]) candidates.push_back(k);
  }
  return !kronecker_factor(f, candidates).has_value();
}

}  // namespace arithcert
