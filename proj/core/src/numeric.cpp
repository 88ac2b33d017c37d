#include "arithcert/numeric.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>

#include "arithcert/error.hpp"

namespace arithcert {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// Strong probable-prime test. With the first twelve prime bases this is
// exact for all 64-bit inputs.
bool miller_rabin(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool probably_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, ys, q = 1, g = 1;
    const unsigned long m = 64;
    unsigned long r = 1;
    auto step = [&](const Integer& v) {
      Integer t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          Integer diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(const Integer& n, std::set<Integer>& out) {
  if (n == 1) return;
  if (probably_prime(n)) {
    out.insert(n);
    return;
  }
  Integer d = pollard_brent(n);
  split_into(d, out);
  split_into(n / d, out);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {2,  3,  5,  7,  11, 13,
                                                           17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  return std::all_of(kBases.begin(), kBases.end(),
                     [n](std::uint64_t a) { return miller_rabin(n, a); });
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::vector<Integer> prime_factors(const Integer& n) {
  Integer m = abs(n);
  std::set<Integer> found;
  for (unsigned long p = 2; p < 10000 && m > 1; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      found.insert(Integer(p));
      while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) m /= p;
    }
  }
  if (m > 1) split_into(m, found);
  return {found.begin(), found.end()};
}

std::vector<std::uint64_t> prime_support(const Rational& q) {
  if (q == 0) throw ZeroInput("prime_support: zero argument");
  std::set<std::uint64_t> primes;
  for (const Integer* part : {&q.get_num(), &q.get_den()}) {
    for (const Integer& p : prime_factors(*part)) {
      if (!p.fits_ulong_p()) throw InvalidInput("prime factor exceeds 64 bits: " + p.get_str());
      primes.insert(p.get_ui());
    }
  }
  return {primes.begin(), primes.end()};
}

long valuation(const Integer& n, std::uint64_t p) {
  if (n == 0) throw ZeroInput("valuation of zero");
  if (p < 2) throw NotPrime("valuation: invalid prime " + std::to_string(p));
  Integer m = n;
  long v = 0;
  Integer pz(static_cast<unsigned long>(p));
  while (mpz_divisible_p(m.get_mpz_t(), pz.get_mpz_t()) != 0) {
    m /= pz;
    ++v;
  }
  return v;
}

long valuation(const Rational& q, std::uint64_t p) {
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

Integer squarefree_class(const Rational& q) {
  if (q == 0) throw ZeroInput("square class of zero");
  // q ~ num * den modulo squares.
  Integer m = q.get_num() * q.get_den();
  Integer result = sgn(m) < 0 ? -1 : 1;
  for (const Integer& p : prime_factors(m)) {
    long v = 0;
    Integer t = abs(m);
    while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t()) != 0) {
      t /= p;
      ++v;
    }
    if (v % 2 != 0) result *= p;
  }
  return result;
}

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) throw InvalidInput("empty integer in '" + std::string(text) + "'");
    std::size_t start = s.front() == '-' ? 1 : 0;
    if (start == s.size()) throw InvalidInput("malformed integer '" + std::string(s) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw InvalidInput("malformed number '" + std::string(text) + "'");
      }
    }
    return Integer(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_rational(text.substr(pos, end - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace arithcert
