#include "arithcert/families.hpp"

#include <algorithm>

#include "arithcert/error.hpp"

namespace arithcert {

namespace {

std::vector<std::string> comparison_places(const GroupDescriptor& g1, const GroupDescriptor& g2,
                                           bool include_archimedean) {
  std::vector<std::string> out;
  if (include_archimedean) {
    for (const auto& a : g1.base.archimedean) out.push_back(a.id);
  }
  std::set<std::string> finite = finite_place_ids(g1);
  finite.merge(finite_place_ids(g2));
  out.insert(out.end(), finite.begin(), finite.end());
  out.push_back("*");
  return out;
}

void require_comparable(const GroupDescriptor& g1, const GroupDescriptor& g2) {
  if (g1.family != g2.family) throw InvalidInput("descriptors belong to different families");
  if (!(g1.base == g2.base)) throw InvalidInput("descriptors live over different base profiles");
}

bool same_sl1_local(const CSA& a, const CSA& b, const Place& v) {
  if (a.degree() != b.degree()) return false;
  const Rational x = a.cls.at(v);
  const Rational y = b.cls.at(v);
  if (x == y) return true;
  Rational minus_y = -y;
  if (minus_y < 0) minus_y += 1;
  return x == minus_y;
}

AdelicResult adelic_sl1(const CSA& a, const CSA& b) {
  AdelicResult out;
  std::set<Place> support;
  for (const auto& [v, inv] : a.cls.invariants()) support.insert(v);
  for (const auto& [v, inv] : b.cls.invariants()) support.insert(v);
  if (a.degree() != b.degree()) {
    out.reason = "degrees differ";
    return out;
  }
  for (const Place& v : support) {
    if (v.is_real()) continue;
    if (!same_sl1_local(a, b, v)) {
      out.reason = "local invariants at " + v.to_string() + " are not equal up to sign";
      return out;
    }
  }
  out.isomorphic = true;
  out.reason = "[A]_p = +-[B]_p at every prime";
  return out;
}

bool permutable_places_interchangeable(const GroupDescriptor& g) {
  std::uint64_t prime = 0;
  for (const auto& id : g.permutable) {
    const FinitePlace* fp = g.base.finite(id);
    if (fp == nullptr || !fp->over_split_prime) return false;
    if (prime == 0) prime = fp->residue_char;
    if (fp->residue_char != prime) return false;
  }
  return true;
}

void add_check(FamilyCertificate& cert, std::string name, bool pass, std::string detail,
               std::string anchor) {
  if (!pass && cert.reason.empty()) cert.reason = name;
  cert.checks.push_back({std::move(name), pass, std::move(detail), std::move(anchor)});
}

std::string base_type_violation(const GroupDescriptor& g) {
  const PlaceProfile& b = g.base;
  switch (g.family) {
    case FamilyTag::SU_herm:
      if (!b.is_type_I()) return "SU family needs a type I base";
      break;
    case FamilyTag::SL_even_herm:
    case FamilyTag::Spin_quad:
    case FamilyTag::InnerTwist:
      if (!b.is_type_I() && !b.is_type_II()) return "base must be of type I or type II";
      break;
    case FamilyTag::SL1_CSA:
      if (b.degree > 2) return "SL_1 families live over Q or an imaginary quadratic field";
      return {};
  }
  if (b.degree <= 2) return "base degree must exceed 2";
  return {};
}

std::string base_source_violation(const PlaceProfile& b) {
  if (!b.source) return {};
  const IntPoly& f = *b.source;
  if (!is_squarefree(f) || !is_irreducible(f)) return "defining polynomial is not irreducible";
  if (sturm_count(f) != b.real_count()) return "real root count differs from the real places";
  const SnCertificate cert = certify_sn(f);
  if (!check_sn_certificate(cert).empty()) return "Galois certificate does not re-check";
  if (b.trivial_aut && cert.conclusion != GaloisConclusion::Sn) {
    return "trivial automorphism group claimed without an S_n certificate";
  }
  std::map<std::uint64_t, unsigned> split_count;
  for (const auto& w : b.finite_places) {
    const auto degrees = try_factor_degrees_mod_p(f, w.residue_char);
    if (!degrees) return "place " + w.id + " lies over a bad prime";
    if (w.over_split_prime) {
      if (!std::all_of(degrees->begin(), degrees->end(), [](unsigned d) { return d == 1; })) {
        return "place " + w.id + " is marked split but " + std::to_string(w.residue_char) +
               " does not split completely";
      }
      if (++split_count[w.residue_char] > f.degree()) return "too many places over one prime";
    }
  }
  return {};
}

std::string payload_violation(const GroupDescriptor& g) {
  if (const auto* h = std::get_if<HermProfile>(&g.payload)) {
    const std::string v = landherr_violation(*h);
    if (!v.empty()) return "Landherr condition " + v;
    for (const auto& [id, sig] : h->nonsplit_real) {
      const ArchPlace* a = g.base.arch(id);
      if (a == nullptr || a->kind != ArchKind::Real) return "signature at a non-real place " + id;
    }
    return {};
  }
  if (const auto* q = std::get_if<QuadPayload>(&g.payload)) {
    int product = 1;
    for (const auto& a : g.base.archimedean) {
      if (a.kind == ArchKind::Complex) continue;
      const auto it = q->real_signatures.find(a.id);
      if (it == q->real_signatures.end()) return "missing signature at " + a.id;
      if (it->second.dim() != q->dim) return "signature at " + a.id + " does not sum to the dimension";
      product *= real_hasse(it->second);
    }
    for (const auto& [id, loc] : q->finite) {
      if (loc.hasse != 1 && loc.hasse != -1) return "Hasse invariant at " + id + " is not +-1";
      product *= loc.hasse;
      const FinitePlace* fp = g.base.finite(id);
      if (fp == nullptr) return "finite place " + id + " is not in the base";
      if (loc.det && !locally_realizable(q->dim, *loc.det, loc.hasse, Place::finite(fp->residue_char))) {
        return "local data at " + id + " is not realizable";
      }
    }
    if (product != 1) return "product formula for Hasse invariants fails";
    return {};
  }
  if (const auto* t = std::get_if<TwistPayload>(&g.payload)) {
    for (const auto& a : g.base.archimedean) {
      if (!t->archimedean.contains(a.id)) return "missing archimedean type at " + a.id;
    }
    return {};
  }
  const auto& a = std::get<AlgebraPayload>(g.payload);
  try {
    (void)BrauerClass::from_invariants(a.algebra.cls.invariants(), a.algebra.cls.base());
  } catch (const InvalidInput& e) {
    return std::string("Brauer class: ") + e.what();
  }
  if (a.algebra.matrix_size < 1) return "matrix size must be positive";
  return {};
}

}  // namespace

bool AdelicResult::permutation_is_identity() const {
  return std::all_of(permutation.begin(), permutation.end(),
                     [](const auto& p) { return p.first == p.second; });
}

CspResult csp_status(const GroupDescriptor& g) {
  unsigned rs = 0;
  try {
    rs = rank_sum(g);
  } catch (const InvalidInput& e) {
    return {CspStatus::Unknown, e.what()};
  }
  if (rs < 2) return {CspStatus::Unknown, "archimedean rank sum " + std::to_string(rs) + " < 2"};
  if (g.base.totally_imaginary()) return {CspStatus::Unknown, "base field is totally imaginary"};

  CspResult out{CspStatus::Unknown, ""};
  const CartanType& t = g.cartan;
  if (g.family == FamilyTag::Spin_quad) {
    out = {CspStatus::OrderLe2, "spinor group of a quadratic form (Kneser)"};
  } else if (known_isotropic(g)) {
    out = {CspStatus::OrderLe2, "k-isotropic"};
  } else if (g.family == FamilyTag::SU_herm || g.family == FamilyTag::SL_even_herm) {
    const unsigned m = std::get<HermProfile>(g.payload).dim;
    if (m >= 3) {
      out = {CspStatus::OrderLe2, "special unitary group of a hermitian form with m >= 3"};
    } else {
      out = {CspStatus::Unknown, "hermitian dimension m < 3"};
    }
  } else {
    const bool listed = (t.series == 'B' && t.rank >= 2) || (t.series == 'C' && t.rank >= 2) ||
                        (t.series == 'D' && t.rank >= 5) || (t.series == 'E' && t.rank >= 7) ||
                        t.series == 'F' || t.series == 'G';
    if (listed) {
      out = {CspStatus::OrderLe2, "type " + t.to_string()};
    } else if (t.series == 'A') {
      out = {CspStatus::Unknown, "type A outside the special unitary route"};
    } else if (t.series == 'D') {
      out = {CspStatus::Unknown, "type D4 outside the spinor route"};
    } else {
      out = {CspStatus::Unknown, "congruence subgroup problem still open in type E6"};
    }
  }
  if (out.status == CspStatus::OrderLe2) {
    for (const auto& a : g.base.archimedean) {
      if (a.kind == ArchKind::Real && g.non_simply_connected_real.contains(a.id)) {
        return {CspStatus::Trivial, out.reason + "; not topologically simply connected at " + a.id};
      }
    }
  }
  return out;
}

std::uint64_t pigeonhole_bound(std::uint64_t n, std::uint64_t c) {
  if (n < 1 || c < 1) throw InvalidInput("pigeonhole_bound needs n >= 1 and c >= 1");
  return (n + c - 1) / c;
}

AdelicResult adelically_isomorphic(const GroupDescriptor& g1, const GroupDescriptor& g2) {
  require_comparable(g1, g2);
  if (g1.family == FamilyTag::SL1_CSA) {
    return adelic_sl1(std::get<AlgebraPayload>(g1.payload).algebra,
                      std::get<AlgebraPayload>(g2.payload).algebra);
  }
  if (g1.permutable != g2.permutable) throw InvalidInput("descriptors mark different places w1..wn");

  AdelicResult out;
  const std::set<std::string> perm(g1.permutable.begin(), g1.permutable.end());
  for (const std::string& id : comparison_places(g1, g2, false)) {
    if (perm.contains(id)) continue;
    const LocalType a = local_type(g1, id);
    const LocalType b = local_type(g2, id);
    if (a.description != b.description) {
      out.reason = "local types differ at " + id + ": " + a.description + " vs " + b.description;
      return out;
    }
  }

  // Match w_i to w_sigma(i), keeping fixed points where possible.
  const auto& ws = g1.permutable;
  std::vector<std::string> left, right;
  for (const auto& w : ws) {
    left.push_back(local_type(g1, w).description);
    right.push_back(local_type(g2, w).description);
  }
  std::vector<int> sigma(ws.size(), -1);
  std::vector<bool> used(ws.size(), false);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (left[i] == right[i]) {
      sigma[i] = static_cast<int>(i);
      used[i] = true;
    }
  }
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (sigma[i] >= 0) continue;
    for (std::size_t j = 0; j < ws.size(); ++j) {
      if (!used[j] && left[i] == right[j]) {
        sigma[i] = static_cast<int>(j);
        used[j] = true;
        break;
      }
    }
    if (sigma[i] < 0) {
      out.reason = "no place of the second group matches " + ws[i] + " (" + left[i] + ")";
      return out;
    }
  }
  for (std::size_t i = 0; i < ws.size(); ++i) out.permutation.emplace_back(ws[i], ws[sigma[i]]);
  if (!out.permutation_is_identity() && !permutable_places_interchangeable(g1)) {
    out.permutation.clear();
    out.reason = "marked places do not lie over one completely split prime";
    return out;
  }
  out.isomorphic = true;
  out.reason = out.permutation_is_identity() ? "local types agree at every finite place"
                                             : "local types agree after permuting the places over the split prime";
  return out;
}

CommensurabilityResult commensurable(const GroupDescriptor& g1, const GroupDescriptor& g2) {
  require_comparable(g1, g2);
  if (!g1.base.trivial_aut) {
    throw InvalidInput("commensurability criterion needs a base field without automorphisms");
  }
  if (rank_sum(g1) < 2 || rank_sum(g2) < 2) {
    throw InvalidInput("commensurability criterion needs archimedean rank sum >= 2");
  }
  CommensurabilityResult out;
  if (g1.family == FamilyTag::SL1_CSA) {
    const CSA& a = std::get<AlgebraPayload>(g1.payload).algebra;
    const CSA& b = std::get<AlgebraPayload>(g2.payload).algebra;
    out.commensurable = csa_isomorphic(a, b) || csa_isomorphic(a, opposite(b));
    out.witness_place = out.commensurable ? "" : "global";
    out.left = a.cls.to_string();
    out.right = b.cls.to_string();
    out.reason = out.commensurable ? "A is isomorphic to B or to B^op"
                                   : "A is isomorphic neither to B nor to B^op";
    return out;
  }
  for (const std::string& id : comparison_places(g1, g2, true)) {
    const LocalType a = local_type(g1, id);
    const LocalType b = local_type(g2, id);
    if (a.description != b.description) {
      out.witness_place = id;
      out.left = a.description;
      out.right = b.description;
      out.left_rank = a.rank;
      out.right_rank = b.rank;
      out.reason = "local types differ at " + id;
      return out;
    }
  }
  out.commensurable = true;
  out.reason = "local data agree at every place";
  return out;
}

FamilyCertificate verify_family(const std::vector<GroupDescriptor>& ds) {
  if (ds.empty()) throw InvalidInput("verify_family needs at least one descriptor");
  FamilyCertificate cert;
  cert.descriptors = ds;
  cert.target = ds.front().target_form;
  const std::size_t n = ds.size();

  bool common = true;
  for (const auto& g : ds) {
    common = common && g.family == ds.front().family && g.base == ds.front().base &&
             g.cartan == ds.front().cartan && g.target_form == ds.front().target_form;
  }
  add_check(cert, "common-base", common, common ? "" : "descriptors differ in base, family or type",
            "one algebraic group per member over a common number field");
  if (!common) {
    cert.pass = false;
    return cert;
  }

  const GroupDescriptor& first = ds.front();
  std::string v = first.base.structural_violation();
  if (v.empty()) v = base_type_violation(first);
  add_check(cert, "base-structure", v.empty(), v, "type I: totally real; type II: one complex place");
  v = base_source_violation(first.base);
  add_check(cert, "base-field-certificate", v.empty(), v,
            "S_n Galois group forces a trivial automorphism group; split prime has n places");

  std::string payload_detail;
  for (const auto& g : ds) {
    const std::string pv = payload_violation(g);
    if (!pv.empty() && payload_detail.empty()) payload_detail = g.name + ": " + pv;
  }
  add_check(cert, "local-global-existence", payload_detail.empty(), payload_detail,
            first.family == FamilyTag::SL1_CSA ? "Albert-Brauer-Hasse-Noether: invariants sum to 0"
            : first.family == FamilyTag::Spin_quad ? "Hasse invariants satisfy the product formula"
            : first.family == FamilyTag::InnerTwist ? "prescribed local types at every archimedean place"
                                                     : "Landherr existence conditions");

  cert.adelic.assign(n, std::vector<AdelicResult>(n));
  cert.commensurability.assign(n, std::vector<CommensurabilityResult>(n));
  bool adelic_ok = true;
  bool comm_ok = true;
  bool preconditions_ok = true;
  std::string comm_detail;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cert.adelic[i][j] = adelically_isomorphic(ds[i], ds[j]);
      if (i != j && !cert.adelic[i][j].isomorphic) adelic_ok = false;
      try {
        cert.commensurability[i][j] = commensurable(ds[i], ds[j]);
      } catch (const InvalidInput& e) {
        preconditions_ok = false;
        cert.commensurability[i][j].reason = e.what();
        if (comm_detail.empty()) comm_detail = e.what();
        continue;
      }
      if (i != j && cert.commensurability[i][j].commensurable) {
        comm_ok = false;
        if (comm_detail.empty()) comm_detail = ds[i].name + " and " + ds[j].name + " are commensurable";
      }
    }
  }
  add_check(cert, "adelic-isomorphism", adelic_ok, "",
            "isomorphic at all finite places, up to a permutation of places over a split prime");
  add_check(cert, "superrigidity-preconditions", preconditions_ok, preconditions_ok ? "" : comm_detail,
            "base without automorphisms and archimedean rank sum at least two");
  add_check(cert, "commensurable pair", comm_ok, comm_ok ? "" : comm_detail,
            "superrigidity: commensurable lattices force a field isomorphism and a k-isomorphism");

  bool csp_ok = true;
  bool csp_recorded = true;
  bool rank_ok = true;
  bool cocompact_recorded = true;
  bool one_noncompact = true;
  for (const auto& g : ds) {
    const CspResult c = csp_status(g);
    cert.csp.push_back(c);
    csp_ok = csp_ok && c.status != CspStatus::Unknown;
    csp_recorded = csp_recorded && c.status == g.csp;
    unsigned rs = 0;
    try {
      rs = rank_sum(g);
    } catch (const InvalidInput&) {
      rank_ok = false;
    }
    cert.rank_sums.push_back(rs);
    rank_ok = rank_ok && rs >= 2;
    const bool cc = is_cocompact(g);
    cert.cocompact.push_back(cc);
    cocompact_recorded = cocompact_recorded && cc == g.cocompact;
    if (cc) one_noncompact = one_noncompact && noncompact_places(g) == 1;
  }
  add_check(cert, "csp", csp_ok, csp_ok ? "" : cert.csp.front().reason,
            "congruence kernel of order at most two");
  add_check(cert, "csp-recorded", csp_recorded, "", "recorded CSP status matches the lookup");
  add_check(cert, "rank-sum", rank_ok, "", "sum of archimedean ranks at least two");
  add_check(cert, "cocompact-recorded", cocompact_recorded && one_noncompact,
            one_noncompact ? "" : "a cocompact member is noncompact at more than one archimedean place",
            "compact at some archimedean place, so the lattices are cocompact");

  if (first.family == FamilyTag::SL1_CSA) {
    bool same_index = true;
    const Integer idx = index(std::get<AlgebraPayload>(first.payload).algebra.cls);
    for (const auto& g : ds) same_index = same_index && index(std::get<AlgebraPayload>(g.payload).algebra.cls) == idx;
    add_check(cert, "equal-index", same_index, "index " + idx.get_str(), "E1 and E2 have index d");
  }

  cert.notes.push_back(
      "finite-adelic isomorphism together with the congruence subgroup property gives profinite "
      "commensurability of arithmetic subgroups");
  cert.pass = cert.reason.empty();
  return cert;
}

std::string to_string(RigidityVerdict v) {
  return v == RigidityVerdict::Commensurable ? "commensurable" : "not_applicable";
}

RigidityResult decide_rigidity_exceptional(const std::string& type_tag, const PlaceProfile& p1,
                                           const PlaceProfile& p2, const ArithEquivResult& evidence) {
  std::string tag;
  for (char c : type_tag) {
    if (c != '(' && c != ')' && c != ' ') tag.push_back(c);
  }
  if (tag != "E8C" && tag != "F4C" && tag != "G2C") {
    return {RigidityVerdict::NotApplicable, "type " + type_tag + " is outside E8, F4, G2 (complex)"};
  }
  if (p1.complex_count() != 1 || p2.complex_count() != 1) {
    throw InvalidInput("rigidity decision needs two fields with exactly one complex place");
  }
  if (!evidence.consistent) {
    return {RigidityVerdict::NotApplicable, "fields not arithmetically equivalent (" + evidence.reason + ")"};
  }
  return {RigidityVerdict::Commensurable,
          "no diagram symmetries and trivial center: a group anisotropic at every real place is "
          "determined by its real places, so the twist is trivial"};
}

bool congruence_level_check(const Integer& index, const Integer& center_order) {
  if (index < 2) throw InvalidInput("congruence_level_check: index must be >= 2");
  if (center_order < 1) throw InvalidInput("congruence_level_check: center order must be >= 1");
  return index > center_order;
}

}  // namespace arithcert
