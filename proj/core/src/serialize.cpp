#include "arithcert/serialize.hpp"

#include "arithcert/error.hpp"

namespace arithcert {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.dump());
  if (!j.is_string()) throw InvalidInput("expected an integer");
  const Rational q = parse_rational(j.get<std::string>());
  if (q.get_den() != 1) throw InvalidInput("expected an integer, got " + j.get<std::string>());
  return q.get_num();
}

Json optional_rank(const std::optional<unsigned>& r) { return r ? Json(*r) : Json(nullptr); }

int sign_from_json(const Json& j, const std::string& where) {
  const int v = j.get<int>();
  if (v != 1 && v != -1) throw InvalidInput(where + " must be +1 or -1");
  return v;
}

std::string arch_kind_name(ArchKind k) { return k == ArchKind::Real ? "real" : "complex"; }

ArchKind arch_kind_from(const std::string& s) {
  if (s == "real") return ArchKind::Real;
  if (s == "complex") return ArchKind::Complex;
  throw InvalidInput("unknown archimedean kind '" + s + "'");
}

Json quad_local_json(const QuadLocal& l) {
  return {{"det", l.det ? Json(to_string(*l.det)) : Json(nullptr)}, {"hasse", l.hasse}};
}

Json payload_json(const Payload& p) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, HermProfile>) {
          return {{"kind", "hermitian"}, {"form", to_json(x)}};
        } else if constexpr (std::is_same_v<T, QuadPayload>) {
          Json sig = Json::object();
          for (const auto& [id, s] : x.real_signatures) sig[id] = to_json(s);
          Json fin = Json::object();
          for (const auto& [id, l] : x.finite) fin[id] = quad_local_json(l);
          return {{"kind", "quadratic"}, {"dim", x.dim}, {"real_signatures", sig},
                  {"finite", fin}, {"default_det", x.default_det}};
        } else if constexpr (std::is_same_v<T, TwistPayload>) {
          return {{"kind", "twist"}, {"archimedean", x.archimedean}, {"finite", x.finite},
                  {"default_finite", x.default_finite}};
        } else {
          return {{"kind", "algebra"}, {"algebra", to_json(x.algebra)}};
        }
      },
      p);
}

Payload payload_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "hermitian") return herm_profile_from_json(j.at("form"));
  if (kind == "quadratic") {
    QuadPayload q;
    q.dim = j.at("dim").get<unsigned>();
    for (const auto& [id, s] : j.at("real_signatures").items()) q.real_signatures[id] = signature_from_json(s);
    for (const auto& [id, l] : j.at("finite").items()) {
      QuadLocal loc;
      if (!l.at("det").is_null()) loc.det = rational_from_json(l.at("det"));
      loc.hasse = sign_from_json(l.at("hasse"), "Hasse invariant at " + id);
      q.finite[id] = loc;
    }
    q.default_det = j.value("default_det", "a");
    return q;
  }
  if (kind == "twist") {
    TwistPayload t;
    t.archimedean = j.at("archimedean").get<std::map<std::string, std::string>>();
    t.finite = j.at("finite").get<std::map<std::string, std::string>>();
    t.default_finite = j.value("default_finite", "G0_qs");
    return t;
  }
  if (kind == "algebra") return AlgebraPayload{csa_from_json(j.at("algebra"))};
  throw InvalidInput("unknown payload kind '" + kind + "'");
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (!j.is_string()) throw InvalidInput("expected a rational as a string");
  return parse_rational(j.get<std::string>());
}

Json to_json(const Signature& s) { return Json::array({s.positive, s.negative}); }

Signature signature_from_json(const Json& j) {
  return guarded("signature", [&] {
    if (!j.is_array() || j.size() != 2) throw InvalidInput("signature must be [r, s]");
    return Signature{j[0].get<unsigned>(), j[1].get<unsigned>()};
  });
}

Json to_json(const QuadForm& f) {
  Json out = Json::array();
  for (const Rational& a : f.entries()) out.push_back(to_json(a));
  return out;
}

Json to_json(const QFProfile& p) {
  Json hasse = Json::object();
  for (const Place& v : p.hasse_negative) hasse[v.to_string()] = -1;
  return {{"dim", p.dim}, {"det", to_string(p.det)}, {"signature", to_json(p.signature)}, {"hasse", hasse}};
}

QFProfile qf_profile_from_json(const Json& j) {
  return guarded("quadratic form profile", [&] {
    QFProfile p;
    p.dim = j.at("dim").get<unsigned>();
    p.det = integer_from_json(j.at("det"));
    p.signature = signature_from_json(j.at("signature"));
    if (p.signature.dim() != p.dim) throw InvalidInput("signature does not sum to the dimension");
    if (j.contains("hasse")) {
      for (const auto& [key, value] : j.at("hasse").items()) {
        const int h = sign_from_json(value, "Hasse invariant at " + key);
        const Place v = Place::parse(key);
        if (v.is_real()) {
          if (h != real_hasse(p.signature)) throw InvalidInput("real Hasse invariant contradicts the signature");
          continue;
        }
        if (h == -1) p.hasse_negative.insert(v);
      }
    }
    return p;
  });
}

Json to_json(const HermProfile& h) {
  Json sig = Json::object();
  for (const auto& [id, s] : h.nonsplit_real) sig[id] = to_json(s);
  Json ext = Json::object();
  for (const auto& [id, e] : h.local_ext) {
    ext[id] = {{"residue_char", e.residue_char}, {"minus_one_is_norm", e.minus_one_is_norm}};
  }
  return {{"dim", h.dim},
          {"nonsplit_real", sig},
          {"finite_disc", h.finite_disc},
          {"split_places", h.split_places},
          {"local_ext", ext}};
}

namespace {

std::map<std::string, LocalExtension> local_ext_from_json(const Json& j) {
  std::map<std::string, LocalExtension> out;
  for (const auto& [id, e] : j.items()) {
    LocalExtension x;
    x.residue_char = e.value("residue_char", std::uint64_t{0});
    x.minus_one_is_norm = sign_from_json(e.value("minus_one_is_norm", Json(1)), "minus_one_is_norm at " + id);
    out[id] = x;
  }
  return out;
}

std::map<std::string, int> disc_from_json(const Json& j) {
  std::map<std::string, int> out;
  for (const auto& [id, d] : j.items()) out[id] = sign_from_json(d, "discriminant at " + id);
  return out;
}

}  // namespace

HermProfile herm_profile_from_json(const Json& j) {
  return guarded("hermitian profile", [&] {
    HermProfile h;
    h.dim = j.at("dim").get<unsigned>();
    const Json sig = j.value("nonsplit_real", Json::object());
    for (const auto& [id, s] : sig.items()) h.nonsplit_real[id] = signature_from_json(s);
    h.finite_disc = disc_from_json(j.value("finite_disc", Json::object()));
    h.split_places = j.value("split_places", Json::array()).get<std::set<std::string>>();
    h.local_ext = local_ext_from_json(j.value("local_ext", Json::object()));
    return h;
  });
}

HermConstraints herm_constraints_from_json(const Json& j) {
  return guarded("hermitian constraints", [&] {
    HermConstraints c;
    c.dim = j.at("dim").get<unsigned>();
    const Json sig = j.value("signatures", Json::object());
    for (const auto& [id, s] : sig.items()) c.signatures[id] = signature_from_json(s);
    c.disc = disc_from_json(j.value("disc", Json::object()));
    c.split_places = j.value("split_places", Json::array()).get<std::set<std::string>>();
    c.local_ext = local_ext_from_json(j.value("local_ext", Json::object()));
    if (j.contains("balance_place") && !j.at("balance_place").is_null()) {
      c.balance_place = j.at("balance_place").get<std::string>();
    }
    return c;
  });
}

Json to_json(const BrauerClass& c) {
  Json inv = Json::object();
  for (const auto& [v, x] : c.invariants()) inv[v.to_string()] = to_json(x);
  return {{"base", to_string(c.base())}, {"invariants", inv}};
}

BrauerClass brauer_class_from_json(const Json& j) {
  return guarded("Brauer class", [&] {
    std::map<Place, Rational> inv;
    for (const auto& [key, x] : j.at("invariants").items()) inv[Place::parse(key)] = rational_from_json(x);
    return validate_class(inv, parse_base_field(j.value("base", std::string("Q"))));
  });
}

Json to_json(const CSA& a) {
  return {{"class", to_json(a.cls)}, {"matrix_size", a.matrix_size}, {"degree", to_string(a.degree())}};
}

CSA csa_from_json(const Json& j) {
  return guarded("central simple algebra", [&] {
    CSA a;
    a.cls = brauer_class_from_json(j.at("class"));
    a.matrix_size = j.at("matrix_size").get<unsigned long>();
    if (a.matrix_size < 1) throw InvalidInput("matrix size must be positive");
    return a;
  });
}

Json to_json(const PairReport& r) {
  return {{"d", r.d},
          {"k", r.k},
          {"m", r.matrix_degree()},
          {"c_ramified_at_real", r.c_ramified_at_real},
          {"C", to_json(r.c)},
          {"D", to_json(r.dcls)},
          {"E1", to_json(r.e1)},
          {"E2", to_json(r.e2)},
          {"A", to_json(r.a)},
          {"B", to_json(r.b)},
          {"checks",
           {{"c_order_is_d", r.c_order_is_d},
            {"d_order_is_d", r.d_order_is_d},
            {"disjoint_support", r.disjoint_support},
            {"real_invariants_ok", r.real_invariants_ok},
            {"e1_index_is_d", r.e1_index_is_d},
            {"e2_index_is_d", r.e2_index_is_d},
            {"a_not_isomorphic_b", r.a_not_isomorphic_b},
            {"a_not_isomorphic_b_op", r.a_not_isomorphic_b_op},
            {"locally_pm_everywhere", r.locally_pm_everywhere},
            {"c_not_self_opposite", r.c_not_self_opposite},
            {"d_not_self_opposite", r.d_not_self_opposite}}},
          {"all_pass", r.all_pass()}};
}

Json to_json(const IntPoly& f) {
  Json out = Json::array();
  for (const Integer& c : f.coefficients()) {
    if (c.fits_slong_p()) {
      out.push_back(c.get_si());
    } else {
      out.push_back(c.get_str());
    }
  }
  return out;
}

IntPoly int_poly_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    if (!j.is_array()) throw InvalidInput("polynomial must be a coefficient list");
    std::vector<Integer> coeffs;
    for (const auto& c : j) coeffs.push_back(integer_from_json(c));
    return IntPoly(std::move(coeffs));
  });
}

Json to_json(const SnCertificate& c) {
  Json w = Json::array();
  for (const auto& x : c.witnesses) w.push_back({{"prime", x.prime}, {"degrees", x.degrees}});
  return {{"poly", to_json(c.poly)},
          {"poly_text", c.poly.to_string()},
          {"witnesses", w},
          {"conclusion", to_string(c.conclusion)},
          {"route", c.route},
          {"real_roots", c.real_roots},
          {"prime_bound", c.prime_bound}};
}

Json to_json(const PlaceProfile& p) {
  Json arch = Json::array();
  for (const auto& a : p.archimedean) arch.push_back({{"id", a.id}, {"kind", arch_kind_name(a.kind)}});
  Json fin = Json::array();
  for (const auto& f : p.finite_places) {
    fin.push_back({{"id", f.id}, {"residue_char", f.residue_char}, {"over_split_prime", f.over_split_prime}});
  }
  return {{"degree", p.degree},
          {"archimedean", arch},
          {"finite_places", fin},
          {"trivial_aut", p.trivial_aut},
          {"source", p.source ? to_json(*p.source) : Json(nullptr)},
          {"certificate_id", p.certificate_id ? Json(*p.certificate_id) : Json(nullptr)}};
}

PlaceProfile place_profile_from_json(const Json& j) {
  return guarded("place profile", [&] {
    PlaceProfile p;
    p.degree = j.at("degree").get<unsigned>();
    for (const auto& a : j.at("archimedean")) {
      p.archimedean.push_back({a.at("id").get<std::string>(), arch_kind_from(a.at("kind").get<std::string>())});
    }
    for (const auto& f : j.value("finite_places", Json::array())) {
      p.finite_places.push_back({f.at("id").get<std::string>(), f.at("residue_char").get<std::uint64_t>(),
                                 f.value("over_split_prime", false)});
    }
    p.trivial_aut = j.at("trivial_aut").get<bool>();
    if (j.contains("source") && !j.at("source").is_null()) p.source = int_poly_from_json(j.at("source"));
    if (j.contains("certificate_id") && !j.at("certificate_id").is_null()) {
      p.certificate_id = j.at("certificate_id").get<std::string>();
    }
    return p;
  });
}

Json to_json(const ArithEquivResult& r) {
  return {{"consistent", r.consistent},
          {"witness_prime", r.witness_prime ? Json(*r.witness_prime) : Json(nullptr)},
          {"reason", r.reason},
          {"primes_compared", r.primes_compared}};
}

Json to_json(const GroupDescriptor& g) {
  return {{"name", g.name},
          {"family", to_string(g.family)},
          {"cartan", g.cartan.to_string()},
          {"target_form", g.target_form},
          {"permutable", g.permutable},
          {"exceptional", g.exceptional ? Json(*g.exceptional) : Json(nullptr)},
          {"non_simply_connected_real", g.non_simply_connected_real},
          {"csp", to_string(g.csp)},
          {"cocompact", g.cocompact},
          {"base", to_json(g.base)},
          {"payload", payload_json(g.payload)}};
}

GroupDescriptor group_descriptor_from_json(const Json& j) {
  return guarded("group descriptor", [&] {
    GroupDescriptor g;
    g.name = j.at("name").get<std::string>();
    g.family = parse_family_tag(j.at("family").get<std::string>());
    g.cartan = CartanType::parse(j.at("cartan").get<std::string>());
    g.target_form = j.at("target_form").get<std::string>();
    g.permutable = j.value("permutable", Json::array()).get<std::vector<std::string>>();
    if (j.contains("exceptional") && !j.at("exceptional").is_null()) {
      g.exceptional = j.at("exceptional").get<std::string>();
    }
    g.non_simply_connected_real =
        j.value("non_simply_connected_real", Json::array()).get<std::set<std::string>>();
    g.csp = parse_csp_status(j.at("csp").get<std::string>());
    g.cocompact = j.at("cocompact").get<bool>();
    g.base = place_profile_from_json(j.at("base"));
    g.payload = payload_from_json(j.at("payload"));
    const bool kind_ok = std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          switch (g.family) {
            case FamilyTag::SU_herm:
            case FamilyTag::SL_even_herm: return std::is_same_v<T, HermProfile>;
            case FamilyTag::Spin_quad: return std::is_same_v<T, QuadPayload>;
            case FamilyTag::InnerTwist: return std::is_same_v<T, TwistPayload>;
            case FamilyTag::SL1_CSA: return std::is_same_v<T, AlgebraPayload>;
          }
          return false;
        },
        g.payload);
    if (!kind_ok) throw InvalidInput("payload kind does not match family " + to_string(g.family));
    return g;
  });
}

Json to_json(const FamilyCertificate& c) {
  Json ds = Json::array();
  for (const auto& g : c.descriptors) ds.push_back(to_json(g));
  Json adelic = Json::array();
  for (const auto& row : c.adelic) {
    Json r = Json::array();
    for (const auto& a : row) {
      Json perm = Json::array();
      for (const auto& [from, to] : a.permutation) perm.push_back({from, to});
      r.push_back({{"isomorphic", a.isomorphic},
                   {"permutation", perm},
                   {"identity", a.permutation_is_identity()},
                   {"reason", a.reason}});
    }
    adelic.push_back(r);
  }
  Json comm = Json::array();
  for (const auto& row : c.commensurability) {
    Json r = Json::array();
    for (const auto& x : row) {
      Json witness = nullptr;
      if (!x.witness_place.empty()) {
        witness = {{"place", x.witness_place},
                   {"left", x.left},
                   {"right", x.right},
                   {"left_rank", optional_rank(x.left_rank)},
                   {"right_rank", optional_rank(x.right_rank)}};
      }
      r.push_back({{"commensurable", x.commensurable}, {"witness", witness}, {"reason", x.reason}});
    }
    comm.push_back(r);
  }
  Json csp = Json::array();
  for (const auto& s : c.csp) csp.push_back({{"status", to_string(s.status)}, {"reason", s.reason}});
  Json checks = Json::array();
  for (const auto& k : c.checks) {
    checks.push_back({{"name", k.name}, {"pass", k.pass}, {"detail", k.detail}, {"anchor", k.anchor}});
  }
  return {{"builder", c.builder},
          {"target", c.target},
          {"parameters", c.parameters},
          {"descriptors", ds},
          {"adelic", adelic},
          {"commensurability", comm},
          {"csp", csp},
          {"rank_sums", c.rank_sums},
          {"cocompact", c.cocompact},
          {"checks", checks},
          {"notes", c.notes},
          {"conclusion", c.conclusion()}};
}

std::vector<GroupDescriptor> descriptors_from_json(const Json& j) {
  return guarded("certificate", [&] {
    const Json* list = &j;
    if (j.is_object()) {
      // Accept a bare certificate or a full envelope around one.
      if (j.contains("result")) list = &j.at("result").at("descriptors");
      else list = &j.at("descriptors");
    }
    if (!list->is_array()) throw InvalidInput("descriptors must be a list");
    std::vector<GroupDescriptor> out;
    for (const auto& d : *list) out.push_back(group_descriptor_from_json(d));
    return out;
  });
}

Json envelope(const std::vector<std::string>& command, Json inputs, Json result, Json checks) {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"inputs", std::move(inputs)},
          {"result", std::move(result)},
          {"checks", std::move(checks)}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace arithcert
