#include "arithcert/fieldforge.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "arithcert/error.hpp"

namespace arithcert {

namespace {

// Exactly one part equal to 2 and all other parts odd: an odd power of such
// an element is a transposition.
bool transposition_type(const std::vector<unsigned>& degrees) {
  unsigned twos = 0;
  for (unsigned d : degrees) {
    if (d == 2) {
      ++twos;
    } else if (d % 2 == 0) {
      return false;
    }
  }
  return twos == 1;
}

// A part q prime with q > n/2: some power of the element is a q-cycle, and a
// transitive group containing one is primitive.
bool long_prime_cycle(const std::vector<unsigned>& degrees, unsigned n) {
  return std::any_of(degrees.begin(), degrees.end(),
                     [n](unsigned d) { return 2 * d > n && is_prime(d); });
}

struct Derivation {
  GaloisConclusion conclusion = GaloisConclusion::Inconclusive;
  std::string route = "none";
};

// The conclusion forced by the data, for an irreducible squarefree f.
Derivation derive(unsigned n, unsigned real_roots, const std::vector<CycleWitness>& witnesses) {
  if (n <= 2) return {GaloisConclusion::Sn, "small-degree"};
  const bool conjugation_is_transposition = real_roots + 2 == n;
  if (conjugation_is_transposition && is_prime(n)) {
    // Transitive of prime degree gives an n-cycle.
    return {GaloisConclusion::Sn, "two-nonreal-roots"};
  }
  bool transposition = conjugation_is_transposition;
  bool primitive = false;
  for (const auto& w : witnesses) {
    transposition = transposition || transposition_type(w.degrees);
    primitive = primitive || long_prime_cycle(w.degrees, n);
  }
  if (transposition && primitive) {
    return {GaloisConclusion::Sn, conjugation_is_transposition ? "two-nonreal-roots-and-long-prime-cycle"
                                                               : "transposition-and-long-prime-cycle"};
  }
  return {};
}

// Roots at triangular multiples 0, s, 3s, 6s, ... An arithmetic progression
// would be symmetric about its midpoint and, for even n, force an imprimitive
// Galois group.
std::vector<Integer> linear_product(unsigned n, long spacing) {
  std::vector<Integer> coeffs{1};
  for (unsigned i = 0; i < n; ++i) {
    const Integer root = Integer(static_cast<long>(i * (i + 1) / 2) * spacing);
    std::vector<Integer> next(coeffs.size() + 1, Integer(0));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= coeffs[j] * root;
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

// Evaluates candidates, possibly in parallel, and returns the first hit in
// list order.
std::optional<std::pair<std::size_t, SnCertificate>> first_hit(
    const std::vector<IntPoly>& candidates,
    const std::function<std::optional<SnCertificate>(const IntPoly&)>& eval, unsigned threads) {
  if (threads <= 1 || candidates.size() < 2) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (auto cert = eval(candidates[i])) return std::make_pair(i, std::move(*cert));
    }
    return std::nullopt;
  }
  std::vector<std::optional<SnCertificate>> results(candidates.size());
  std::atomic<std::size_t> best{candidates.size()};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < candidates.size(); i += threads) {
        if (i > best.load()) return;
        results[i] = eval(candidates[i]);
        if (results[i]) {
          std::size_t current = best.load();
          while (i < current && !best.compare_exchange_weak(current, i)) {
          }
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  const std::size_t i = best.load();
  if (i == candidates.size()) return std::nullopt;
  return std::make_pair(i, std::move(*results[i]));
}

std::optional<SnCertificate> qualify(const IntPoly& f, unsigned real_roots,
                                     std::uint64_t prime_bound) {
  try {
    if (!is_squarefree(f)) return std::nullopt;
    if (sturm_count(f) != real_roots) return std::nullopt;
    if (!is_irreducible(f)) return std::nullopt;
    SnCertificate cert = certify_sn(f, prime_bound);
    if (cert.conclusion != GaloisConclusion::Sn) return std::nullopt;
    return cert;
  } catch (const SearchExhausted&) {
    return std::nullopt;
  }
}

FieldResult finish(std::pair<std::size_t, SnCertificate> hit, std::uint64_t examined_before,
                   unsigned n) {
  FieldResult out;
  out.poly = hit.second.poly;
  out.certificate = std::move(hit.second);
  out.profile = profile_from_poly(out.poly, out.certificate, n);
  out.examined = examined_before + hit.first + 1;
  return out;
}

}  // namespace

std::string to_string(GaloisConclusion c) {
  return c == GaloisConclusion::Sn ? "Sn" : "inconclusive";
}

SnCertificate certify_sn(const IntPoly& f, std::uint64_t prime_bound) {
  if (!is_squarefree(f)) throw InvalidInput("certify_sn: polynomial is not squarefree");
  if (!is_irreducible(f)) throw InvalidInput("certify_sn: polynomial is reducible");
  SnCertificate cert;
  cert.poly = f;
  cert.prime_bound = prime_bound;
  cert.real_roots = sturm_count(f);
  const unsigned n = f.degree();

  Derivation d = derive(n, cert.real_roots, {});
  bool have_transposition = cert.real_roots + 2 == n;
  bool have_long_cycle = false;
  for (std::uint64_t p = 2; d.conclusion != GaloisConclusion::Sn && p <= prime_bound;
       p = next_prime(p)) {
    const auto degrees = try_factor_degrees_mod_p(f, p);
    if (!degrees) continue;
    const bool t = !have_transposition && transposition_type(*degrees);
    const bool l = !have_long_cycle && long_prime_cycle(*degrees, n);
    if (!t && !l) continue;
    have_transposition = have_transposition || t;
    have_long_cycle = have_long_cycle || l;
    cert.witnesses.push_back({p, *degrees});
    d = derive(n, cert.real_roots, cert.witnesses);
  }
  cert.conclusion = d.conclusion;
  cert.route = d.route;
  return cert;
}

std::string check_sn_certificate(const SnCertificate& cert) {
  const IntPoly& f = cert.poly;
  if (!is_squarefree(f)) return "polynomial is not squarefree";
  if (!is_irreducible(f)) return "polynomial is reducible";
  if (sturm_count(f) != cert.real_roots) return "real root count does not match";
  for (const auto& w : cert.witnesses) {
    if (!is_prime(w.prime)) return "witness " + std::to_string(w.prime) + " is not prime";
    const auto degrees = try_factor_degrees_mod_p(f, w.prime);
    if (!degrees) return "witness prime " + std::to_string(w.prime) + " is bad";
    if (*degrees != w.degrees) return "cycle type at " + std::to_string(w.prime) + " does not match";
  }
  const Derivation d = derive(f.degree(), cert.real_roots, cert.witnesses);
  if (d.conclusion != cert.conclusion) return "conclusion does not follow from the witnesses";
  if (d.conclusion == GaloisConclusion::Sn && d.route != cert.route) return "route does not match";
  return {};
}

unsigned PlaceProfile::real_count() const {
  return static_cast<unsigned>(std::count_if(archimedean.begin(), archimedean.end(),
                                             [](const ArchPlace& a) { return a.kind == ArchKind::Real; }));
}

unsigned PlaceProfile::complex_count() const {
  return static_cast<unsigned>(archimedean.size()) - real_count();
}

const ArchPlace* PlaceProfile::arch(const std::string& id) const {
  for (const auto& a : archimedean) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

const FinitePlace* PlaceProfile::finite(const std::string& id) const {
  for (const auto& w : finite_places) {
    if (w.id == id) return &w;
  }
  return nullptr;
}

std::string PlaceProfile::structural_violation() const {
  if (degree == 0) return "degree must be positive";
  if (real_count() + 2 * complex_count() != degree) return "real + 2*complex places must equal the degree";
  std::set<std::string> ids;
  for (const auto& a : archimedean) {
    if (!ids.insert(a.id).second) return "duplicate place id " + a.id;
  }
  for (const auto& w : finite_places) {
    if (!ids.insert(w.id).second) return "duplicate place id " + w.id;
    if (!is_prime(w.residue_char)) return "place " + w.id + " has a non-prime residue characteristic";
  }
  if (source && source->degree() != degree) return "source polynomial degree differs from the field degree";
  return {};
}

PlaceProfile rationals_profile() {
  PlaceProfile p;
  p.degree = 1;
  p.archimedean = {{"real", ArchKind::Real}};
  p.trivial_aut = true;
  return p;
}

PlaceProfile imaginary_quadratic_profile() {
  PlaceProfile p;
  p.degree = 2;
  p.archimedean = {{"complex", ArchKind::Complex}};
  p.trivial_aut = false;
  return p;
}

PlaceProfile profile_from_poly(const IntPoly& f, const SnCertificate& cert, unsigned marked,
                               std::uint64_t prime_bound) {
  const unsigned n = f.degree();
  if (marked > n) throw InvalidInput("cannot mark more places over a split prime than the degree");
  const unsigned real = sturm_count(f);
  const unsigned complex = (n - real) / 2;

  PlaceProfile prof;
  prof.degree = n;
  unsigned next_id = 1;
  for (unsigned i = 0; i < complex; ++i) prof.archimedean.push_back({"v" + std::to_string(next_id++), ArchKind::Complex});
  for (unsigned i = 0; i < real; ++i) prof.archimedean.push_back({"v" + std::to_string(next_id++), ArchKind::Real});
  prof.trivial_aut = cert.conclusion == GaloisConclusion::Sn && cert.poly == f && n >= 3;
  prof.source = f;
  prof.certificate_id = "Sn:" + cert.route + ":" + f.to_list_string();

  std::uint64_t split_prime = 0;
  for (std::uint64_t p = 3; p <= prime_bound; p = next_prime(p)) {
    const auto degrees = try_factor_degrees_mod_p(f, p);
    if (degrees && std::all_of(degrees->begin(), degrees->end(), [](unsigned d) { return d == 1; })) {
      split_prime = p;
      break;
    }
  }
  if (split_prime == 0) throw SearchExhausted("no completely split odd prime below the bound");
  for (unsigned i = 1; i <= marked; ++i) {
    prof.finite_places.push_back({"w" + std::to_string(i), split_prime, true});
  }
  for (std::uint64_t q = 3; q <= prime_bound; q = next_prime(q)) {
    if (q == split_prime) continue;
    const auto degrees = try_factor_degrees_mod_p(f, q);
    if (!degrees) continue;
    const bool split = std::all_of(degrees->begin(), degrees->end(), [](unsigned d) { return d == 1; });
    prof.finite_places.push_back({"w0", q, split});
    break;
  }
  return prof;
}

FieldResult find_type_II_poly(std::uint64_t p, const SearchOptions& opts) {
  if (!is_prime(p) || p == 2) throw InvalidInput("find_type_II_poly: p must be an odd prime");
  return find_type_II_field(static_cast<unsigned>(p), opts);
}

FieldResult find_type_II_field(unsigned n, const SearchOptions& opts) {
  if (n < 3) throw InvalidInput("a type II field needs degree >= 3");
  const auto eval = [&](const IntPoly& f) { return qualify(f, n - 2, opts.prime_bound); };
  std::uint64_t examined = 0;
  for (long h = 1; h <= static_cast<long>(opts.max_height); ++h) {
    std::vector<IntPoly> batch;
    if (n <= 5) {
      for (long a = -(h - 1); a <= h - 1; ++a) {
        const long b = h - std::labs(a);
        for (long sb : {b, -b}) {
          std::vector<Integer> c(n + 1, Integer(0));
          c[0] = sb;
          c[1] = a;
          c[n] = 1;
          batch.emplace_back(std::move(c));
        }
      }
    } else {
      for (long s = 1; s < h; ++s) {
        std::vector<Integer> base = linear_product(n - 2, s);
        // times x^2 + s^2
        std::vector<Integer> c(n + 1, Integer(0));
        for (std::size_t j = 0; j < base.size(); ++j) {
          c[j + 2] += base[j];
          c[j] += base[j] * (s * s);
        }
        const long t = h - s;
        for (long st : {t, -t}) {
          std::vector<Integer> d = c;
          d[0] += st;
          batch.emplace_back(std::move(d));
        }
      }
    }
    if (auto hit = first_hit(batch, eval, opts.threads)) return finish(std::move(*hit), examined, n);
    examined += batch.size();
  }
  throw SearchExhausted("no type II polynomial of degree " + std::to_string(n) + " up to height " +
                        std::to_string(opts.max_height));
}

FieldResult find_type_I_poly(unsigned n, const SearchOptions& opts) {
  if (n < 3) throw InvalidInput("a type I field with Galois group S_n needs n >= 3");
  const auto eval = [&](const IntPoly& f) { return qualify(f, n, opts.prime_bound); };
  std::uint64_t examined = 0;
  for (long h = 2; h <= static_cast<long>(opts.max_height); ++h) {
    std::vector<IntPoly> batch;
    for (long s = 1; s < h; ++s) {
      const std::vector<Integer> base = linear_product(n, s);
      const long t = h - s;
      for (long st : {t, -t}) {
        std::vector<Integer> c = base;
        c[0] += st;
        batch.emplace_back(std::move(c));
      }
    }
    if (auto hit = first_hit(batch, eval, opts.threads)) return finish(std::move(*hit), examined, n);
    examined += batch.size();
  }
  throw SearchExhausted("inconclusive: no certified totally real polynomial of degree " +
                        std::to_string(n) + " up to height " + std::to_string(opts.max_height));
}

Rational weak_approx(const std::vector<ApproxConstraint>& constraints, std::uint64_t limit) {
  std::set<Place> seen;
  for (const auto& c : constraints) {
    if (!seen.insert(c.place).second) {
      throw InvalidInput("weak_approx: more than one constraint at place " + c.place.to_string());
    }
    if (c.place.is_finite() && c.requirement != Requirement::SquareClass) {
      throw InvalidInput("weak_approx: sign requirement at the finite place " + c.place.to_string());
    }
    if (c.requirement == Requirement::SquareClass && c.square_class == 0) {
      throw ZeroInput("weak_approx: square class of zero");
    }
  }
  const auto meets = [&](const Rational& x) {
    for (const auto& c : constraints) {
      switch (c.requirement) {
        case Requirement::Positive:
          if (sgn(x) <= 0) return false;
          break;
        case Requirement::Negative:
          if (sgn(x) >= 0) return false;
          break;
        case Requirement::SquareClass:
          if (!same_square_class(x, c.square_class, c.place)) return false;
          break;
      }
    }
    return true;
  };
  for (std::uint64_t k = 1; k <= limit; ++k) {
    for (const Rational& x : {Rational(Integer(k)), Rational(-Integer(k))}) {
      if (meets(x)) return x;
    }
  }
  throw SearchExhausted("weak_approx: no integer of height <= " + std::to_string(limit));
}

ArithEquivResult arith_equiv_upto(const IntPoly& f, const IntPoly& g, std::uint64_t bound) {
  ArithEquivResult out;
  if (f.degree() != g.degree()) {
    out.consistent = false;
    out.reason = "degree mismatch";
    return out;
  }
  for (std::uint64_t p = 2; p <= bound; p = next_prime(p)) {
    const auto a = try_factor_degrees_mod_p(f, p);
    const auto b = try_factor_degrees_mod_p(g, p);
    if (!a || !b) continue;
    ++out.primes_compared;
    if (*a != *b) {
      out.consistent = false;
      out.witness_prime = p;
      out.reason = "decomposition types differ at " + std::to_string(p);
      return out;
    }
  }
  out.reason = "decomposition types agree at every good prime <= " + std::to_string(bound);
  return out;
}

}  // namespace arithcert
