// arithcert: command-line front end.
//
// Exit codes: 0 success or pass, 1 rejection / failed verification / search
// exhausted, 2 invalid input or usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "arithcert/error.hpp"
#include "arithcert/serialize.hpp"

using namespace arithcert;

namespace {

struct Options {
  bool plain = false;
  std::string out;
  std::vector<std::string> argv;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IntPoly read_poly(const std::string& path) { return IntPoly::parse(read_file(path)); }

Json checks_json(const std::vector<std::pair<std::string, bool>>& checks) {
  Json out = Json::array();
  for (const auto& [name, pass] : checks) out.push_back({{"name", name}, {"pass", pass}});
  return out;
}

// Writes the envelope to --out or stdout (JSON), or the plain text.
int emit(const Options& o, Json inputs, Json result, Json checks, const std::string& plain, int code = 0) {
  const Json env = envelope(o.argv, std::move(inputs), std::move(result), std::move(checks));
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw InvalidInput("cannot write " + o.out);
    f << env.dump(2) << '\n';
    std::cout << plain << '\n';
    return code;
  }
  if (o.plain) {
    std::cout << plain << '\n';
  } else {
    std::cout << env.dump(2) << '\n';
  }
  return code;
}

std::string sign(int s) { return s > 0 ? "+1" : "-1"; }

QuadForm parse_form(const std::string& text) { return QuadForm(parse_rational_list(text)); }

std::string profile_plain(const QFProfile& p) {
  std::string hasse;
  for (const Place& v : p.hasse_negative) hasse += (hasse.empty() ? "" : ",") + v.to_string();
  return "dim " + std::to_string(p.dim) + ", det " + to_string(p.det) + ", signature (" +
         std::to_string(p.signature.positive) + "," + std::to_string(p.signature.negative) +
         "), hasse -1 at {" + hasse + "}";
}

// Minimal place data for the rigidity decision: archimedean places from the
// real root count, automorphisms from the Galois certificate.
PlaceProfile rigidity_profile(const IntPoly& f) {
  const SnCertificate cert = certify_sn(f);
  PlaceProfile p;
  p.degree = f.degree();
  const unsigned real = cert.real_roots;
  const unsigned complex = (p.degree - real) / 2;
  unsigned id = 1;
  for (unsigned i = 0; i < complex; ++i) p.archimedean.push_back({"v" + std::to_string(id++), ArchKind::Complex});
  for (unsigned i = 0; i < real; ++i) p.archimedean.push_back({"v" + std::to_string(id++), ArchKind::Real});
  p.trivial_aut = cert.conclusion == GaloisConclusion::Sn && p.degree >= 3;
  p.source = f;
  return p;
}

Json family_checks(const FamilyCertificate& c) {
  Json out = Json::array();
  for (const auto& k : c.checks) out.push_back({{"name", k.name}, {"pass", k.pass}, {"anchor", k.anchor}});
  return out;
}

int emit_family(const Options& o, Json inputs, const FamilyCertificate& c) {
  return emit(o, std::move(inputs), to_json(c), family_checks(c), c.conclusion(), c.pass ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  for (int i = 0; i < argc; ++i) o.argv.emplace_back(i == 0 ? "arithcert" : argv[i]);

  CLI::App app{"Exact local-global invariants and arithmetic-group family certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--plain", o.plain, "Plain text instead of JSON");
  app.add_option("--out", o.out, "Write the JSON envelope to this file");

  std::function<int()> run;
  std::string place = "real";
  std::uint64_t bound = 0;
  std::string profile_path;

  // symbol
  auto* symbol = app.add_subcommand("symbol", "Local symbols over Q");
  symbol->require_subcommand(1);
  std::string sa, sb;
  auto* hil = symbol->add_subcommand("hilbert", "Hilbert symbol (a,b)_v");
  hil->add_option("a", sa)->required();
  hil->add_option("b", sb)->required();
  hil->add_option("--place", place, "real or a prime");
  hil->callback([&] {
    run = [&] {
      const int h = hilbert(parse_rational(sa), parse_rational(sb), Place::parse(place));
      std::cout << sign(h) << '\n';
      return 0;
    };
  });
  auto* sqc = symbol->add_subcommand("square-class", "Canonical square-class representative");
  sqc->add_option("a", sa)->required();
  sqc->add_option("--place", place, "real or a prime");
  sqc->callback([&] {
    run = [&] {
      std::cout << to_string(square_class(parse_rational(sa), Place::parse(place)).representative) << '\n';
      return 0;
    };
  });
  auto* pf = symbol->add_subcommand("product-formula", "Product of (a,b)_v over all places");
  pf->add_option("a", sa)->required();
  pf->add_option("b", sb)->required();
  pf->callback([&] {
    run = [&] {
      const Rational a = parse_rational(sa), b = parse_rational(sb);
      std::string support;
      for (const Place& v : hilbert_support(a, b)) support += (support.empty() ? "" : ",") + v.to_string();
      std::cout << (product_formula_check(a, b) ? "holds" : "fails") << " {" << support << "}\n";
      return 0;
    };
  });

  // form
  auto* form = app.add_subcommand("form", "Diagonal quadratic forms over Q");
  form->require_subcommand(1);
  std::string entries;
  auto* finv = form->add_subcommand("invariants", "Dimension, determinant, signature and Hasse map");
  finv->add_option("entries", entries, "comma-separated diagonal")->required();
  finv->callback([&] {
    run = [&] {
      const QuadForm f = parse_form(entries);
      const QFProfile p = invariants(f);
      return emit(o, {{"form", to_json(f)}}, to_json(p), Json::array(), profile_plain(p));
    };
  });
  auto* fwitt = form->add_subcommand("witt", "Witt index at a place");
  fwitt->add_option("entries", entries)->required();
  fwitt->add_option("--place", place, "real or a prime");
  fwitt->callback([&] {
    run = [&] {
      const QuadForm f = parse_form(entries);
      const Place v = Place::parse(place);
      const unsigned w = witt_index(f, v);
      return emit(o, {{"form", to_json(f)}, {"place", v.to_string()}},
                  {{"witt_index", w}, {"hasse", hasse_invariant(f, v)}}, Json::array(), std::to_string(w));
    };
  });
  auto* freal = form->add_subcommand("realize", "A diagonal form with a prescribed profile");
  freal->add_option("--profile", profile_path, "profile JSON")->required();
  freal->callback([&] {
    run = [&] {
      const Json in = parse_json(read_file(profile_path));
      const QFProfile p = qf_profile_from_json(in);
      const QuadForm f = realize(p);
      const bool round_trip = invariants(f) == p;
      return emit(o, {{"profile", in}}, {{"form", to_json(f)}, {"profile", to_json(invariants(f))}},
                  checks_json({{"round-trip", round_trip}}), f.to_string(), round_trip ? 0 : 1);
    };
  });

  // herm
  auto* herm = app.add_subcommand("herm", "Hermitian profiles over a quadratic extension");
  herm->require_subcommand(1);
  auto* hcheck = herm->add_subcommand("check", "Landherr conditions");
  hcheck->add_option("--profile", profile_path)->required();
  hcheck->callback([&] {
    run = [&] {
      const Json in = parse_json(read_file(profile_path));
      const HermProfile h = herm_profile_from_json(in);
      const std::string v = landherr_violation(h);
      return emit(o, {{"profile", in}}, {{"admissible", v.empty()}, {"violation", v}},
                  checks_json({{"landherr", v.empty()}}), v.empty() ? "admissible" : "violates " + v,
                  v.empty() ? 0 : 1);
    };
  });
  auto* hcons = herm->add_subcommand("construct", "Complete constraints to the unique profile");
  hcons->add_option("--profile", profile_path, "constraints JSON")->required();
  hcons->callback([&] {
    run = [&] {
      const Json in = parse_json(read_file(profile_path));
      const HermProfile h = herm_construct(herm_constraints_from_json(in));
      return emit(o, {{"constraints", in}}, to_json(h), checks_json({{"landherr", landherr_admissible(h)}}),
                  to_json(h).dump());
    };
  });
  auto* hrank = herm->add_subcommand("rank", "Local rank of SU(h) at a place id");
  hrank->add_option("--profile", profile_path)->required();
  hrank->add_option("--place", place)->required();
  hrank->callback([&] {
    run = [&] {
      const Json in = parse_json(read_file(profile_path));
      const LocalRank r = su_local_rank(herm_profile_from_json(in), place);
      return emit(o, {{"profile", in}, {"place", place}}, {{"rank", r.rank}, {"method", r.method}},
                  Json::array(), std::to_string(r.rank) + " (" + r.method + ")");
    };
  });

  // brauer
  auto* brauer = app.add_subcommand("brauer", "Brauer classes over Q");
  brauer->require_subcommand(1);
  unsigned long d = 3, k = 2;
  bool ramified = false;
  std::string base_field = "Q";
  auto* bpair = brauer->add_subcommand("pair", "Two division classes of equal index");
  bpair->add_option("--d", d)->required();
  bpair->add_option("--k", k)->required();
  bpair->add_flag("--ramified-real", ramified, "C carries real invariant 1/2 (d even)");
  bpair->add_option("--base", base_field, "Q or imaginary-quadratic");
  bpair->callback([&] {
    run = [&] {
      const PairReport r = find_division_pair(d, k, ramified, parse_base_field(base_field));
      const Json report = to_json(r);
      std::vector<std::pair<std::string, bool>> checks;
      for (const auto& [name, value] : report.at("checks").items()) checks.emplace_back(name, value.get<bool>());
      return emit(o, {{"d", d}, {"k", k}, {"ramified_real", ramified}, {"base", base_field}}, report,
                  checks_json(checks), "E1 " + r.e1.to_string() + "  E2 " + r.e2.to_string(),
                  r.all_pass() ? 0 : 1);
    };
  });

  // field
  auto* field = app.add_subcommand("field", "Number fields from certified polynomials");
  field->require_subcommand(1);
  std::string type = "II";
  unsigned degree = 0, threads = 1;
  auto* forge = field->add_subcommand("forge", "Search for a type I or type II defining polynomial");
  forge->add_option("--type", type, "I (totally real) or II (one complex place)");
  forge->add_option("--degree", degree)->required();
  forge->add_option("--bound", bound, "maximal search height");
  forge->add_option("--threads", threads);
  forge->callback([&] {
    run = [&] {
      SearchOptions so;
      if (bound) so.max_height = static_cast<unsigned>(bound);
      so.threads = threads;
      if (type != "I" && type != "II") throw InvalidInput("--type must be I or II");
      const FieldResult r = type == "I" ? find_type_I_poly(degree, so) : find_type_II_field(degree, so);
      return emit(o, {{"type", type}, {"degree", degree}, {"max_height", so.max_height}},
                  {{"poly", to_json(r.poly)}, {"certificate", to_json(r.certificate)},
                   {"examined", r.examined}},
                  checks_json({{"certificate-recheck", check_sn_certificate(r.certificate).empty()}}),
                  r.poly.to_string());
    };
  });
  std::string f1, f2;
  auto* csn = field->add_subcommand("certify-sn", "Galois group S_n from Frobenius cycle types");
  csn->add_option("poly", f1, "coefficient list file, constant term first")->required();
  csn->add_option("--bound", bound, "largest prime scanned");
  csn->callback([&] {
    run = [&] {
      const IntPoly f = read_poly(f1);
      const SnCertificate c = certify_sn(f, bound ? bound : 2000);
      const std::string recheck = check_sn_certificate(c);
      return emit(o, {{"poly", to_json(f)}}, to_json(c), checks_json({{"certificate-recheck", recheck.empty()}}),
                  to_string(c.conclusion) + " (" + c.route + ")", c.conclusion == GaloisConclusion::Sn ? 0 : 1);
    };
  });
  auto* aeq = field->add_subcommand("arith-equiv", "Compare decomposition types up to a bound");
  aeq->add_option("f", f1)->required();
  aeq->add_option("g", f2)->required();
  aeq->add_option("--bound", bound);
  aeq->callback([&] {
    run = [&] {
      const IntPoly f = read_poly(f1), g = read_poly(f2);
      const ArithEquivResult r = arith_equiv_upto(f, g, bound ? bound : 500);
      const std::string text = r.consistent ? "consistent"
                                            : "refuted(" + (r.witness_prime ? std::to_string(*r.witness_prime) : std::string("degree")) + ")";
      return emit(o, {{"f", to_json(f)}, {"g", to_json(g)}, {"bound", bound ? bound : 500}}, to_json(r),
                  Json::array(), text, r.consistent ? 0 : 1);
    };
  });

  // family
  auto* family = app.add_subcommand("family", "Build, verify and compare group families");
  family->require_subcommand(1);
  auto* build = family->add_subcommand("build", "Run a family builder");
  build->require_subcommand(1);
  unsigned r = 0, s = 0, n = 3, m = 0, dim = 0;
  std::string base = "real", cartan, real_form = "split", target = "real";
  const auto family_inputs = [&](Json extra) {
    extra["n"] = n;
    return extra;
  };
  auto* bsu = build->add_subcommand("su", "SU(r,s) over a totally real field");
  bsu->add_option("--r", r)->required();
  bsu->add_option("--s", s)->required();
  bsu->add_option("--n", n);
  bsu->callback([&] { run = [&] { return emit_family(o, family_inputs({{"r", r}, {"s", s}}), build_su_family(r, s, n)); }; });
  auto* bsl = build->add_subcommand("sl", "SL_{2m}(R) or SL_{2m}(C) via hermitian forms");
  bsl->add_option("--dim", dim, "matrix size 2m")->required();
  bsl->add_option("--base", base, "real or complex");
  bsl->add_option("--n", n);
  bsl->callback([&] {
    run = [&] {
      if (base != "real" && base != "complex") throw InvalidInput("--base must be real or complex");
      return emit_family(o, family_inputs({{"dim", dim}, {"base", base}}),
                         build_sl_family(dim, base == "real" ? BaseKind::Real : BaseKind::Complex, n));
    };
  });
  auto* bso = build->add_subcommand("so", "Spin groups of signature (r,s)");
  bso->add_option("--r", r)->required();
  bso->add_option("--s", s)->required();
  bso->add_option("--n", n);
  bso->callback([&] { run = [&] { return emit_family(o, family_inputs({{"r", r}, {"s", s}}), build_so_family(r, s, n)); }; });
  auto* bso8 = build->add_subcommand("so8c", "Spin_8(C) over a field with one complex place");
  bso8->add_option("--n", n);
  bso8->callback([&] { run = [&] { return emit_family(o, family_inputs(Json::object()), build_so8c_family(n)); }; });
  auto* bgen = build->add_subcommand("generic", "Inner twists of a real or complex form");
  bgen->add_option("--type", cartan, "Cartan type, e.g. E8")->required();
  bgen->add_option("--form", real_form, "real form tag, \"split\" or \"complex\"");
  bgen->add_option("--n", n);
  bgen->callback([&] {
    run = [&] {
      return emit_family(o, family_inputs({{"type", cartan}, {"form", real_form}}),
                         build_generic_family(cartan, real_form, n));
    };
  });
  auto* bnc = build->add_subcommand("sl-noncocompact", "Two SL_1 groups of equal-index algebras");
  bnc->add_option("--m", m)->required();
  bnc->add_option("--target", target, "real, complex or quaternionic");
  bnc->callback([&] {
    run = [&] {
      const SlTarget t = target == "real"            ? SlTarget::Real
                         : target == "complex"       ? SlTarget::Complex
                         : target == "quaternionic"  ? SlTarget::Quaternionic
                                                     : throw InvalidInput("--target must be real, complex or quaternionic");
      return emit_family(o, {{"m", m}, {"target", target}}, build_sl_noncocompact(m, t));
    };
  });
  std::string cert_path;
  auto* verify = family->add_subcommand("verify", "Re-derive a certificate from its descriptors");
  verify->add_option("certificate", cert_path)->required();
  verify->callback([&] {
    run = [&] {
      const Json in = parse_json(read_file(cert_path));
      FamilyCertificate c = verify_family(descriptors_from_json(in));
      const Json& body = in.contains("result") ? in.at("result") : in;
      if (body.is_object()) {
        c.builder = body.value("builder", std::string());
        if (body.contains("parameters")) c.parameters = body.at("parameters").get<std::map<std::string, std::string>>();
      }
      return emit_family(o, {{"certificate", cert_path}}, c);
    };
  });
  std::string rtype;
  auto* rig = family->add_subcommand("rigidity", "Rigidity decision for complex E8, F4, G2");
  rig->add_option("--type", rtype, "E8C, F4C or G2C")->required();
  rig->add_option("--f1", f1)->required();
  rig->add_option("--f2", f2)->required();
  rig->add_option("--bound", bound, "prime bound for the decomposition comparison");
  rig->callback([&] {
    run = [&] {
      const IntPoly p1 = read_poly(f1), p2 = read_poly(f2);
      const std::uint64_t b = bound ? bound : 500;
      const ArithEquivResult ev = arith_equiv_upto(p1, p2, b);
      const RigidityResult res = decide_rigidity_exceptional(rtype, rigidity_profile(p1), rigidity_profile(p2), ev);
      return emit(o, {{"type", rtype}, {"f1", to_json(p1)}, {"f2", to_json(p2)}, {"bound", b}},
                  {{"verdict", to_string(res.verdict)}, {"reason", res.reason}, {"evidence", to_json(ev)}},
                  checks_json({{"arithmetic-equivalence-evidence", ev.consistent}}), to_string(res.verdict));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }

  try {
    return run();
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const Rejected& e) {
    emit(o, Json::object(), {{"status", "rejected"}, {"reason", e.what()}}, Json::array(),
         std::string("rejected: ") + e.what());
    return 1;
  } catch (const SearchExhausted& e) {
    emit(o, Json::object(), {{"status", "search_exhausted"}, {"reason", e.what()}}, Json::array(),
         std::string("search exhausted: ") + e.what());
    return 1;
  }
}
