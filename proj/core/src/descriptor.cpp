#include "arithcert/descriptor.hpp"

#include <algorithm>
#include <mutex>
#include <regex>
#include <tuple>

#include "arithcert/error.hpp"

namespace arithcert {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

struct NamedForm {
  const char* tag;
  char series;
  unsigned rank;
  unsigned real_rank;
  bool inner;
};

// Non-classical real forms, by the usual (dim - 2 dim K) index.
constexpr NamedForm kExceptional[] = {
    {"E6(6)", 'E', 6, 6, false},   {"E6(2)", 'E', 6, 4, true},   {"E6(-14)", 'E', 6, 2, true},
    {"E6(-26)", 'E', 6, 2, false}, {"E7(7)", 'E', 7, 7, true},   {"E7(-5)", 'E', 7, 4, true},
    {"E7(-25)", 'E', 7, 3, true},  {"E8(8)", 'E', 8, 8, true},   {"E8(-24)", 'E', 8, 4, true},
    {"F4(4)", 'F', 4, 4, true},    {"F4(-20)", 'F', 4, 1, true}, {"G2(2)", 'G', 2, 2, true},
};

unsigned to_unsigned(const std::string& s) { return static_cast<unsigned>(std::stoul(s)); }

RealForm make(std::string tag, char series, unsigned rank, unsigned real_rank, bool inner,
              bool complex = false) {
  return {std::move(tag), {series, rank}, real_rank, inner, complex};
}

void require(bool ok, const std::string& tag, const char* why) {
  if (!ok) throw InvalidInput("real form " + tag + ": " + why);
}

std::string unordered_signature(const Signature& s) {
  return std::to_string(std::max(s.positive, s.negative)) + "," +
         std::to_string(std::min(s.positive, s.negative));
}

Integer degree_of(const CSA& a) { return a.degree(); }

Place place_of_id(const std::string& id) { return Place::parse(id); }

LocalType herm_type(const GroupDescriptor& g, const HermProfile& h, const std::string& place) {
  const unsigned m = h.dim;
  const std::string sl = "SL_" + std::to_string(m);
  if (const ArchPlace* a = g.base.arch(place)) {
    if (a->kind == ArchKind::Complex) return {sl + "(C)", m - 1};
    const auto it = h.nonsplit_real.find(place);
    if (it == h.nonsplit_real.end()) return {sl + "(R)", m - 1};
    return {"SU(" + unordered_signature(it->second) + ")",
            std::min(it->second.positive, it->second.negative)};
  }
  if (place == "*") return {"SU_" + std::to_string(m) + " d=+1", std::nullopt};
  if (h.split_places.contains(place)) return {sl + " split", m - 1};
  if (h.finite_disc.contains(place) || h.local_ext.contains(place)) {
    const auto ext_it = h.local_ext.find(place);
    const LocalExtension ext = ext_it == h.local_ext.end() ? LocalExtension{} : ext_it->second;
    const LocalRank r = su_local_rank(h, place);
    return {"SU_" + std::to_string(m) + " d=" + (h.disc_at(place) == 1 ? "+1" : "-1") +
                " chi(-1)=" + (ext.minus_one_is_norm == 1 ? "+1" : "-1"),
            r.rank};
  }
  return {"SU_" + std::to_string(m) + " d=+1", std::nullopt};
}

LocalType quad_type(const GroupDescriptor& g, const QuadPayload& q, const std::string& place) {
  const std::string spin = "Spin_" + std::to_string(q.dim);
  if (const ArchPlace* a = g.base.arch(place)) {
    if (a->kind == ArchKind::Complex) return {spin + "(C)", q.dim / 2};
    const auto it = q.real_signatures.find(place);
    if (it == q.real_signatures.end()) throw InvalidInput("no signature recorded at real place " + place);
    return {"Spin(" + unordered_signature(it->second) + ")",
            std::min(it->second.positive, it->second.negative)};
  }
  const auto it = q.finite.find(place);
  if (place == "*" || it == q.finite.end()) {
    return {spin + " det=" + q.default_det + " hasse=+1", std::nullopt};
  }
  const QuadLocal& loc = it->second;
  const std::string hasse = loc.hasse == 1 ? "+1" : "-1";
  if (!loc.det) return {spin + " det=" + q.default_det + " hasse=" + hasse, std::nullopt};
  const FinitePlace* fp = g.base.finite(place);
  if (fp == nullptr) throw InvalidInput("finite place " + place + " is not in the base profile");
  const Place v = Place::finite(fp->residue_char);
  const SquareClass cls = square_class(*loc.det, v);
  return {spin + " det=" + to_string(cls.representative) + " hasse=" + hasse,
          spin_local_rank(q.dim, *loc.det, loc.hasse, fp->residue_char)};
}

LocalType twist_type(const GroupDescriptor& g, const TwistPayload& t, const std::string& place) {
  if (const ArchPlace* a = g.base.arch(place)) {
    const auto it = t.archimedean.find(place);
    if (it == t.archimedean.end()) throw InvalidInput("no archimedean type recorded at " + place);
    const std::string& tag = it->second;
    if (tag == "G^u") return {tag, 0U};
    if (tag == "G") {
      if (a->kind == ArchKind::Complex) return {tag, g.cartan.rank};
      return {tag, parse_real_form(g.target_form).real_rank};
    }
    return {tag, std::nullopt};
  }
  const auto it = t.finite.find(place);
  const std::string tag = (place == "*" || it == t.finite.end()) ? t.default_finite : it->second;
  if (tag == "G^0") return {tag, g.cartan.rank};
  return {tag, std::nullopt};
}

LocalType algebra_type(const GroupDescriptor& g, const AlgebraPayload& a, const std::string& place) {
  const Integer m = degree_of(a.algebra);
  const auto rank_with_index = [&](const Integer& index) {
    const Integer r = m / index - 1;
    return static_cast<unsigned>(r.get_ui());
  };
  if (const ArchPlace* arch = g.base.arch(place)) {
    if (arch->kind == ArchKind::Complex) return {"SL_" + m.get_str() + "(C)", rank_with_index(1)};
    const Integer idx = local_index(a.algebra.cls, Place::real());
    if (idx == 1) return {"SL_" + m.get_str() + "(R)", rank_with_index(1)};
    return {"SL_" + Integer(m / 2).get_str() + "(H)", rank_with_index(2)};
  }
  if (place == "*") return {"SL_" + m.get_str() + " split", rank_with_index(1)};
  const Place v = place_of_id(place);
  const Rational inv = a.algebra.cls.at(v);
  return {"SL_1(M_" + std::to_string(a.algebra.matrix_size) + "(E)) inv=" + to_string(inv),
          rank_with_index(local_index(a.algebra.cls, v))};
}

}  // namespace

CartanType CartanType::parse(const std::string& text) {
  static const std::regex re(R"(\s*([ABCDEFG])_?\{?(\d+)\}?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw InvalidInput("unrecognized Cartan type: " + text);
  CartanType t{m[1].str()[0], to_unsigned(m[2].str())};
  const bool ok = [&] {
    switch (t.series) {
      case 'A': return t.rank >= 1;
      case 'B': return t.rank >= 2;
      case 'C': return t.rank >= 2;
      case 'D': return t.rank >= 4;
      case 'E': return t.rank >= 6 && t.rank <= 8;
      case 'F': return t.rank == 4;
      case 'G': return t.rank == 2;
      default: return false;
    }
  }();
  if (!ok) throw InvalidInput("no simple Lie algebra of type " + text);
  return t;
}

std::string CartanType::to_string() const { return std::string(1, series) + std::to_string(rank); }

RealForm parse_real_form(const std::string& raw) {
  std::string tag;
  for (char c : raw) {
    if (c != ' ') tag.push_back(c);
  }
  std::smatch m;
  static const std::regex su(R"(SU\((\d+),(\d+)\))");
  static const std::regex sl(R"(SL\((\d+),([RHC])\))");
  static const std::regex sostar(R"(SO\*\((\d+)\))");
  static const std::regex so0(R"(SO0\((\d+),(\d+)\))");
  static const std::regex soc(R"(SO\((\d+),C\))");
  static const std::regex spr(R"(Sp\((\d+),R\))");
  static const std::regex spc(R"(Sp\((\d+),C\))");
  static const std::regex sppq(R"(Sp\((\d+),(\d+)\))");
  static const std::regex exc(R"(([EFG]\d)\(C\))");

  if (std::regex_match(tag, m, su)) {
    const unsigned r = to_unsigned(m[1]), s = to_unsigned(m[2]);
    require(r + s >= 2, tag, "needs r + s >= 2");
    return make(tag, 'A', r + s - 1, std::min(r, s), true);
  }
  if (std::regex_match(tag, m, sl)) {
    const unsigned n = to_unsigned(m[1]);
    const char field = m[2].str()[0];
    if (field == 'C') {
      require(n >= 2, tag, "needs n >= 2");
      return make(tag, 'A', n - 1, n - 1, true, true);
    }
    if (field == 'H') {
      require(n >= 2, tag, "needs n >= 2");
      return make(tag, 'A', 2 * n - 1, n - 1, false);
    }
    require(n >= 2, tag, "needs n >= 2");
    // SL_2(R) = SU(1,1); A_1 has no diagram symmetry.
    return make(tag, 'A', n - 1, n - 1, n == 2);
  }
  if (std::regex_match(tag, m, sostar)) {
    const unsigned d = to_unsigned(m[1]);
    require(d % 2 == 0 && d >= 8, tag, "needs 2m with m >= 4");
    return make(tag, 'D', d / 2, d / 4, true);
  }
  if (std::regex_match(tag, m, so0)) {
    const unsigned r = to_unsigned(m[1]), s = to_unsigned(m[2]);
    const unsigned n = r + s;
    if (n % 2 == 1) {
      require(n >= 5, tag, "type B needs r + s >= 5");
      return make(tag, 'B', (n - 1) / 2, std::min(r, s), true);
    }
    require(n >= 8, tag, "type D needs r + s >= 8");
    return make(tag, 'D', n / 2, std::min(r, s), r % 2 == 0 && s % 2 == 0);
  }
  if (std::regex_match(tag, m, soc)) {
    const unsigned n = to_unsigned(m[1]);
    require(n >= 5 && n != 6, tag, "needs n = 5 or n >= 7");
    return make(tag, n % 2 ? 'B' : 'D', n / 2, n / 2, true, true);
  }
  if (std::regex_match(tag, m, spr)) {
    const unsigned d = to_unsigned(m[1]);
    require(d % 2 == 0 && d >= 4, tag, "needs 2n with n >= 2");
    return make(tag, 'C', d / 2, d / 2, true);
  }
  if (std::regex_match(tag, m, spc)) {
    const unsigned d = to_unsigned(m[1]);
    require(d % 2 == 0 && d >= 4, tag, "needs 2n with n >= 2");
    return make(tag, 'C', d / 2, d / 2, true, true);
  }
  if (std::regex_match(tag, m, sppq)) {
    const unsigned p = to_unsigned(m[1]), q = to_unsigned(m[2]);
    require(p + q >= 2, tag, "needs p + q >= 2");
    return make(tag, 'C', p + q, std::min(p, q), true);
  }
  if (std::regex_match(tag, m, exc)) {
    const CartanType t = CartanType::parse(m[1]);
    return make(tag, t.series, t.rank, t.rank, true, true);
  }
  for (const auto& f : kExceptional) {
    if (tag == f.tag) return make(tag, f.series, f.rank, f.real_rank, f.inner);
  }
  throw InvalidInput("unknown real form tag: " + raw);
}

RealForm split_real_form(const CartanType& t) {
  switch (t.series) {
    case 'A': return parse_real_form("SL(" + std::to_string(t.rank + 1) + ",R)");
    case 'B': return parse_real_form("SO0(" + std::to_string(t.rank + 1) + "," + std::to_string(t.rank) + ")");
    case 'C': return parse_real_form("Sp(" + std::to_string(2 * t.rank) + ",R)");
    case 'D': return parse_real_form("SO0(" + std::to_string(t.rank) + "," + std::to_string(t.rank) + ")");
    default: return parse_real_form(t.to_string() + "(" + std::to_string(t.rank) + ")");
  }
}

bool inner_of_compact(const std::string& tag) { return parse_real_form(tag).inner_to_compact; }

std::string to_string(FamilyTag t) {
  switch (t) {
    case FamilyTag::SU_herm: return "SU_herm";
    case FamilyTag::SL_even_herm: return "SL_even_herm";
    case FamilyTag::Spin_quad: return "Spin_quad";
    case FamilyTag::InnerTwist: return "InnerTwist";
    case FamilyTag::SL1_CSA: return "SL1_CSA";
  }
  return {};
}

FamilyTag parse_family_tag(const std::string& text) {
  for (FamilyTag t : {FamilyTag::SU_herm, FamilyTag::SL_even_herm, FamilyTag::Spin_quad,
                      FamilyTag::InnerTwist, FamilyTag::SL1_CSA}) {
    if (to_string(t) == text) return t;
  }
  throw InvalidInput("unknown family tag: " + text);
}

std::string to_string(CspStatus s) {
  switch (s) {
    case CspStatus::Trivial: return "trivial";
    case CspStatus::OrderLe2: return "order_le_2";
    case CspStatus::Unknown: return "unknown";
  }
  return {};
}

CspStatus parse_csp_status(const std::string& text) {
  for (CspStatus s : {CspStatus::Trivial, CspStatus::OrderLe2, CspStatus::Unknown}) {
    if (to_string(s) == text) return s;
  }
  throw InvalidInput("unknown CSP status: " + text);
}

LocalType local_type(const GroupDescriptor& g, const std::string& place) {
  return std::visit(
      overloaded{
          [&](const HermProfile& h) { return herm_type(g, h, place); },
          [&](const QuadPayload& q) { return quad_type(g, q, place); },
          [&](const TwistPayload& t) { return twist_type(g, t, place); },
          [&](const AlgebraPayload& a) { return algebra_type(g, a, place); },
      },
      g.payload);
}

std::set<std::string> finite_place_ids(const GroupDescriptor& g) {
  std::set<std::string> ids(g.permutable.begin(), g.permutable.end());
  if (g.exceptional) ids.insert(*g.exceptional);
  std::visit(overloaded{
                 [&](const HermProfile& h) {
                   for (const auto& [id, d] : h.finite_disc) ids.insert(id);
                   for (const auto& id : h.split_places) ids.insert(id);
                   for (const auto& [id, e] : h.local_ext) ids.insert(id);
                 },
                 [&](const QuadPayload& q) {
                   for (const auto& [id, l] : q.finite) ids.insert(id);
                 },
                 [&](const TwistPayload& t) {
                   for (const auto& [id, tag] : t.finite) ids.insert(id);
                 },
                 [&](const AlgebraPayload& a) {
                   for (const auto& [v, inv] : a.algebra.cls.invariants()) {
                     if (v.is_finite()) ids.insert(v.to_string());
                   }
                 },
             },
             g.payload);
  return ids;
}

unsigned rank_sum(const GroupDescriptor& g) {
  unsigned total = 0;
  for (const auto& a : g.base.archimedean) {
    const LocalType t = local_type(g, a.id);
    if (!t.rank) throw InvalidInput("archimedean rank at " + a.id + " is not determined");
    total += *t.rank;
  }
  return total;
}

unsigned noncompact_places(const GroupDescriptor& g) {
  unsigned count = 0;
  for (const auto& a : g.base.archimedean) {
    const LocalType t = local_type(g, a.id);
    if (!t.rank || *t.rank > 0) ++count;
  }
  return count;
}

bool is_cocompact(const GroupDescriptor& g) {
  return noncompact_places(g) < g.base.archimedean.size();
}

bool known_isotropic(const GroupDescriptor& g) {
  if (const auto* a = std::get_if<AlgebraPayload>(&g.payload)) return a->algebra.matrix_size >= 2;
  return false;
}

unsigned spin_local_rank(unsigned dim, const Rational& det, int hasse, std::uint64_t p) {
  if (dim < 3) throw InvalidInput("spin_local_rank needs dimension >= 3");
  if (det == 0) throw ZeroInput("spin_local_rank: zero determinant");
  using Key = std::tuple<unsigned, Integer, int, std::uint64_t>;
  static std::mutex mu;
  static std::map<Key, unsigned> cache;
  const Key key{dim, squarefree_class(det), hasse, p};
  {
    std::lock_guard lock(mu);
    if (const auto it = cache.find(key); it != cache.end()) return it->second;
  }
  // A global model: definite or of signature (dim-1, 1) to match the sign,
  // with an auxiliary prime absorbing the product formula.
  QFProfile prof;
  prof.dim = dim;
  prof.det = squarefree_class(det);
  prof.signature = sgn(det) > 0 ? Signature{dim, 0} : Signature{dim - 1, 1};
  if (hasse == -1) {
    prof.hasse_negative.insert(Place::finite(p));
    const std::uint64_t aux = p == 2 ? 3 : 2;
    prof.hasse_negative.insert(Place::finite(aux));
  }
  const unsigned r = witt_index(realize(prof), Place::finite(p));
  std::lock_guard lock(mu);
  cache.emplace(key, r);
  return r;
}

}  // namespace arithcert
