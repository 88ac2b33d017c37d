#include <map>
#include <mutex>

#include "arithcert/error.hpp"
#include "arithcert/families.hpp"

namespace arithcert {

namespace {

// Field searches dominate the builders; cache by (type, degree).
const PlaceProfile& base_profile(bool type_II, unsigned n) {
  static std::mutex mu;
  static std::map<std::pair<bool, unsigned>, PlaceProfile> cache;
  std::lock_guard lock(mu);
  const auto key = std::make_pair(type_II, n);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const FieldResult r = type_II ? find_type_II_field(n) : find_type_I_poly(n);
  PlaceProfile p = profile_from_poly(r.poly, r.certificate, n);
  return cache.emplace(key, std::move(p)).first->second;
}

void require_degree(unsigned n) {
  if (n <= 2) throw Rejected("base degree must be at least 3 for a field without automorphisms");
}

std::string w(unsigned i) { return "w" + std::to_string(i); }
std::string v(unsigned i) { return "v" + std::to_string(i); }

std::vector<std::string> marked(unsigned n) {
  std::vector<std::string> out;
  for (unsigned i = 1; i <= n; ++i) out.push_back(w(i));
  return out;
}

// Records the recomputed CSP status and compactness on each descriptor, then
// runs the verifier.
FamilyCertificate finish(std::vector<GroupDescriptor> ds, std::string builder, std::string target,
                         std::map<std::string, std::string> parameters,
                         std::vector<std::string> notes = {}) {
  for (auto& g : ds) {
    g.csp = csp_status(g).status;
    g.cocompact = is_cocompact(g);
  }
  FamilyCertificate cert = verify_family(ds);
  cert.builder = std::move(builder);
  cert.target = std::move(target);
  cert.parameters = std::move(parameters);
  cert.notes.insert(cert.notes.begin(), notes.begin(), notes.end());
  return cert;
}

std::map<std::string, std::string> params(std::initializer_list<std::pair<const std::string, unsigned>> in) {
  std::map<std::string, std::string> out;
  for (const auto& [k, x] : in) out[k] = std::to_string(x);
  return out;
}

GroupDescriptor skeleton(const std::string& name, const PlaceProfile& base, FamilyTag tag,
                         CartanType cartan, std::string target) {
  GroupDescriptor g;
  g.name = name;
  g.base = base;
  g.family = tag;
  g.cartan = cartan;
  g.target_form = std::move(target);
  return g;
}

}  // namespace

FamilyCertificate build_su_family(unsigned r, unsigned s, unsigned n) {
  if (r < 2 || s < 2) throw InvalidInput("SU(r,s) family needs r, s >= 2");
  require_degree(n);
  const PlaceProfile& base = base_profile(false, n);
  const unsigned m = r + s;
  const std::string target = "SU(" + std::to_string(r) + "," + std::to_string(s) + ")";
  const std::uint64_t q = base.finite("w0")->residue_char;

  std::vector<GroupDescriptor> ds;
  for (unsigned j = 1; j <= n; ++j) {
    HermConstraints c;
    c.dim = m;
    for (unsigned i = 1; i <= n; ++i) c.signatures[v(i)] = i == j ? Signature{r, s} : Signature{m, 0};
    c.local_ext["w0"] = {q, 1};
    c.balance_place = "w0";
    GroupDescriptor g = skeleton("G" + std::to_string(j), base, FamilyTag::SU_herm,
                                 {'A', m - 1}, target);
    g.exceptional = "w0";
    g.payload = herm_construct(c);
    ds.push_back(std::move(g));
  }
  return finish(std::move(ds), "su", target, params({{"r", r}, {"s", s}, {"n", n}}));
}

FamilyCertificate build_sl_even_family(unsigned m, BaseKind kind, unsigned n) {
  if (m < 2) throw InvalidInput("SL_{2m} family needs m >= 2");
  require_degree(n);
  const bool complex = kind == BaseKind::Complex;
  const PlaceProfile& base = base_profile(complex, n);
  const unsigned dim = 2 * m;
  const std::string target = "SL(" + std::to_string(dim) + (complex ? ",C)" : ",R)");

  std::vector<GroupDescriptor> ds;
  for (unsigned j = 1; j <= n; ++j) {
    HermConstraints c;
    c.dim = dim;
    for (const auto& a : base.archimedean) {
      // The noncompact place splits in K; a complex place always does.
      if (a.kind == ArchKind::Real && !(a.id == "v1" && !complex)) c.signatures[a.id] = {dim, 0};
    }
    for (const auto& fp : base.finite_places) c.local_ext[fp.id] = {fp.residue_char, 1};
    c.disc[w(j)] = -1;
    c.balance_place = "w0";
    GroupDescriptor g = skeleton("G" + std::to_string(j), base, FamilyTag::SL_even_herm,
                                 {'A', dim - 1}, target);
    g.permutable = marked(n);
    g.exceptional = "w0";
    g.payload = herm_construct(c);
    ds.push_back(std::move(g));
  }
  return finish(std::move(ds), "sl-even", target,
                {{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"base", complex ? "complex" : "real"}});
}

FamilyCertificate build_sl_family(unsigned dim, BaseKind kind, unsigned n) {
  if (dim % 2 == 1) throw Rejected("odd matrix size: SL_n with n odd is outside the hermitian route");
  return build_sl_even_family(dim / 2, kind, n);
}

FamilyCertificate build_so_family(unsigned r, unsigned s, unsigned n) {
  const unsigned dim = r + s;
  const std::string target = "SO0(" + std::to_string(r) + "," + std::to_string(s) + ")";
  if (dim % 2 == 1 || dim < 8) throw InvalidInput("so family needs r + s even and at least 8");
  if (r % 2 == 1 && s % 2 == 1) throw Rejected("inner-of-compact fails: r and s odd");
  if (std::min(r, s) < 2) throw Rejected("rank sum < 2: min(r, s) must be at least 2");
  require_degree(n);
  const PlaceProfile& base = base_profile(false, n);

  const int sign_dim = (dim / 2) % 2 == 0 ? 1 : -1;
  const int hasse_v1 = real_hasse({r, s});
  std::vector<GroupDescriptor> ds;
  for (unsigned j = 1; j <= n; ++j) {
    QuadPayload q;
    q.dim = dim;
    for (const auto& a : base.archimedean) q.real_signatures[a.id] = a.id == "v1" ? Signature{r, s} : Signature{dim, 0};
    for (unsigned i = 1; i <= n; ++i) q.finite[w(i)] = {Rational(sign_dim), i == j ? -1 : 1};
    q.finite["w0"] = {std::nullopt, -hasse_v1};
    GroupDescriptor g = skeleton("G" + std::to_string(j), base, FamilyTag::Spin_quad, {'D', dim / 2}, target);
    g.permutable = marked(n);
    g.exceptional = "w0";
    g.payload = q;
    ds.push_back(std::move(g));
  }
  std::vector<std::string> notes;
  if (r == 6 && s == 2) notes.push_back("also covers SO*(8), isomorphic to SO0(6,2) by triality");
  return finish(std::move(ds), "so", target, params({{"r", r}, {"s", s}, {"n", n}}), notes);
}

FamilyCertificate build_so8c_family(unsigned n) {
  require_degree(n);
  const PlaceProfile& base = base_profile(true, n);
  std::vector<GroupDescriptor> ds;
  for (unsigned j = 1; j <= n; ++j) {
    QuadPayload q;
    q.dim = 8;
    for (const auto& a : base.archimedean) {
      if (a.kind == ArchKind::Real) q.real_signatures[a.id] = {8, 0};
    }
    for (unsigned i = 1; i <= n; ++i) q.finite[w(i)] = {Rational(1), i == j ? -1 : 1};
    q.finite["w0"] = {std::nullopt, -1};
    GroupDescriptor g = skeleton("G" + std::to_string(j), base, FamilyTag::Spin_quad, {'D', 4}, "SO(8,C)");
    g.permutable = marked(n);
    g.exceptional = "w0";
    g.payload = q;
    ds.push_back(std::move(g));
  }
  return finish(std::move(ds), "so8c", "SO(8,C)", params({{"n", n}}));
}

FamilyCertificate build_generic_family(const std::string& cartan_text, const std::string& form,
                                       unsigned n) {
  const CartanType t = CartanType::parse(cartan_text);
  require_degree(n);
  if (t.series == 'A') throw Rejected("type A: use the su or sl builders");
  if (t.series == 'D' && t.rank == 4) throw Rejected("type D4: triality, use the so builders");
  if (t.series == 'E' && t.rank == 6) throw Rejected("type E6: congruence subgroup problem open");
  const unsigned sub = static_cast<unsigned>(pigeonhole_bound(n, kInnerTwistClassBound));
  std::vector<std::string> notes{"subfamily of size ceil(n/4) = " + std::to_string(sub) +
                                 " sharing one local class at w0 (at most 4 classes there)"};

  if (form == "complex") {
    const bool has_inner_forms = t.series == 'B' || t.series == 'C' || t.series == 'D' ||
                                 (t.series == 'E' && t.rank == 7);
    if (!has_inner_forms) {
      throw Rejected("type " + t.to_string() + " has no nontrivial inner forms over p-adic fields");
    }
    const PlaceProfile& base = base_profile(true, n);
    const std::string target = t.series == 'C'   ? "Sp(" + std::to_string(2 * t.rank) + ",C)"
                               : t.series == 'E' ? "E7(C)"
                               : "SO(" + std::to_string(t.series == 'B' ? 2 * t.rank + 1 : 2 * t.rank) + ",C)";
    std::vector<GroupDescriptor> ds;
    for (unsigned j = 1; j <= sub; ++j) {
      TwistPayload p;
      for (const auto& a : base.archimedean) p.archimedean[a.id] = a.kind == ArchKind::Complex ? "G" : "G^u";
      for (unsigned i = 1; i <= n; ++i) p.finite[w(i)] = i == j ? "G^p" : "G^0";
      p.finite["w0"] = "G_w0";
      GroupDescriptor g = skeleton("G" + std::to_string(j), base, FamilyTag::InnerTwist, t, target);
      g.permutable = marked(n);
      g.exceptional = "w0";
      g.payload = p;
      ds.push_back(std::move(g));
    }
    return finish(std::move(ds), "generic", target,
                  {{"type", t.to_string()}, {"form", form}, {"n", std::to_string(n)}}, notes);
  }

  const RealForm rf = form == "split" ? split_real_form(t) : parse_real_form(form);
  if (!(rf.cartan == t)) throw InvalidInput("real form " + rf.tag + " is not of type " + t.to_string());
  if (rf.complex) throw InvalidInput("use form \"complex\" for complex groups");
  if (rf.tag.starts_with("SO0(") && rf.cartan.series == 'D') throw Rejected("SO0(r,s) with r + s even: use the so builder");
  if (!rf.inner_to_compact) throw Rejected("inner-of-compact fails for " + rf.tag);
  if (rf.real_rank < 2) throw Rejected("real rank of " + rf.tag + " is below 2");

  const PlaceProfile& base = base_profile(false, n);
  std::vector<GroupDescriptor> ds;
  for (unsigned j = 1; j <= sub; ++j) {
    TwistPayload p;
    for (const auto& a : base.archimedean) p.archimedean[a.id] = a.id == v(j) ? "G" : "G^u";
    p.finite["w0"] = "G_w0";
    GroupDescriptor g = skeleton("G" + std::to_string(j), base, FamilyTag::InnerTwist, t, rf.tag);
    g.exceptional = "w0";
    g.payload = p;
    ds.push_back(std::move(g));
  }
  return finish(std::move(ds), "generic", rf.tag,
                {{"type", t.to_string()}, {"form", rf.tag}, {"n", std::to_string(n)}}, notes);
}

FamilyCertificate build_sl_noncocompact(unsigned m, SlTarget target) {
  const bool quaternionic = target == SlTarget::Quaternionic;
  const unsigned size = quaternionic ? 2 * m : m;
  bool composite = false;
  for (unsigned a = 2; a * a <= m; ++a) composite = composite || m % a == 0;
  if (m < 6 || !composite) throw InvalidInput("noncocompact SL family needs a composite m >= 6");

  unsigned d = 0;
  for (unsigned c = quaternionic ? 4 : 3; c <= size / 2; ++c) {
    if (quaternionic && c % 2 == 1) continue;
    if (size % c == 0) {
      d = c;
      break;
    }
  }
  if (d == 0) throw Rejected("no factorization m = d*k with d >= 3 and k >= 2");
  const unsigned k = size / d;

  const bool complex = target == SlTarget::Complex;
  const PairReport pair = find_division_pair(d, k, quaternionic,
                                             complex ? BaseField::ImaginaryQuadratic : BaseField::Rationals);
  const PlaceProfile base = complex ? imaginary_quadratic_profile() : rationals_profile();
  const std::string form = "SL(" + std::to_string(m) + (complex ? ",C)" : quaternionic ? ",H)" : ",R)");

  std::vector<GroupDescriptor> ds;
  for (const auto& [name, algebra] : {std::pair{"G1", pair.a}, std::pair{"G2", pair.b}}) {
    GroupDescriptor g = skeleton(name, base, FamilyTag::SL1_CSA, {'A', size - 1}, form);
    g.payload = AlgebraPayload{algebra};
    ds.push_back(std::move(g));
  }
  return finish(std::move(ds), "sl-noncocompact", form,
                {{"m", std::to_string(m)},
                 {"d", std::to_string(d)},
                 {"k", std::to_string(k)},
                 {"target", complex ? "complex" : quaternionic ? "quaternionic" : "real"}},
                {"M_k(E) with k >= 2 is k-isotropic, so the lattices are not cocompact"});
}

}  // namespace arithcert
