// Command-line front end: parse a plane-curve input, run the requested
// stage of the pipeline, print a deterministic text or JSON form.
//
// Exit codes: 0 ok (or --check passed), 1 --check failed, 2 parse error,
// 3 unsupported input, 4 internal invariant breach.
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mm/convolve.hpp"
#include "mm/json_io.hpp"
#include "mm/milnor.hpp"
#include "mm/newton.hpp"
#include "mm/oracle.hpp"
#include "mm/poly.hpp"
#include "mm/rational.hpp"
#include "mm/realize.hpp"
#include "mm/tensor.hpp"
#include "mm/zeta.hpp"

namespace {

using namespace mm;

Field parse_field(const std::string& s) {
  if (s == "C") return Field::C;
  if (s == "R") return Field::R;
  throw ParseError("bad --field value: " + s);
}

int parse_sign(const std::string& s) {
  if (s == "+") return +1;
  if (s == "-") return -1;
  throw ParseError("bad --sign value: " + s);
}

int cmd_newton(const std::string& poly, bool as_json) {
  Poly2 f = poly_parse(poly);
  NewtonPolygon np = newton_polygon(f);
  if (as_json) {
    nlohmann::json j;
    j["kind"] = "newton";
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : np.vertices) vs.push_back({v.a, v.b});
    j["vertices"] = vs;
    nlohmann::json es = nlohmann::json::array();
    for (const auto& e : np.edges)
      es.push_back({{"from", {e.a1, e.b1}},
                    {"to", {e.a2, e.b2}},
                    {"normal", {e.w1, e.w2}},
                    {"level", e.d},
                    {"face", poly_str(e.face)}});
    j["edges"] = es;
    j["convenient"] = np.convenient();
    j["nondegenerate"] = is_nondegenerate(np);
    if (np.convenient()) j["mu"] = kouchnirenko_mu(f).str();
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "vertices =";
  for (const auto& v : np.vertices) std::cout << " (" << v.a << "," << v.b << ")";
  std::cout << "\n";
  for (const auto& e : np.edges)
    std::cout << "edge (" << e.a1 << "," << e.b1 << ")-(" << e.a2 << ","
              << e.b2 << ") normal=(" << e.w1 << "," << e.w2
              << ") level=" << e.d << " face=" << poly_str(e.face) << "\n";
  std::cout << "convenient = " << (np.convenient() ? "yes" : "no") << "\n";
  std::cout << "nondegenerate = " << (is_nondegenerate(np) ? "yes" : "no")
            << "\n";
  if (np.convenient()) std::cout << "mu = " << kouchnirenko_mu(f).str() << "\n";
  return 0;
}

int cmd_milnor(const std::string& poly, const std::string& field_s,
               const std::string& sign_s, const std::string& retraction,
               const std::string& realize, bool as_json) {
  Field field = parse_field(field_s);
  int sign = parse_sign(sign_s);
  Poly2 f = poly_parse(poly);
  GrothElem fiber;
  if (retraction == "b") {
    fiber = motivic_fiber_b(f, field, sign);
  } else if (retraction == "g") {
    fiber = motivic_fiber_g(f, field, sign);
  } else {
    throw ParseError("bad --retraction value: " + retraction);
  }
  std::string rkey, rval;
  if (realize != "none") {
    KnowledgeBase kb = KnowledgeBase::with_env();
    if (realize == "chi") {
      Int chi = field == Field::C ? realize_complex(fiber, kb)
                                  : realize_real(fiber, kb);
      rkey = "chi";
      rval = chi.str();
    } else if (realize == "beta") {
      rkey = "beta";
      rval = beta(forgetful(fiber), kb).str("u");
    } else if (realize == "beta-mu2") {
      rkey = "beta-mu2";
      rval = beta_mu2(fiber, kb).str("u");
    } else {
      throw ParseError("bad --realize value: " + realize);
    }
  }
  if (as_json) {
    nlohmann::json j = groth_to_json(fiber);
    if (!rkey.empty()) j[rkey] = rval;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << fiber.str() << "\n";
    if (!rkey.empty()) std::cout << rkey << " = " << rval << "\n";
  }
  return 0;
}

int cmd_zeta(const std::string& poly, const std::string& field_s, long long coeffs,
             bool limit, bool topological, bool as_json) {
  Field field = parse_field(field_s);
  Poly2 f = poly_parse(poly);
  ZetaFn z = zeta_from_tensor(milnor_integral(f, field));
  if (as_json) {
    nlohmann::json j = zeta_to_json(z);
    if (coeffs > 0) {
      nlohmann::json cs = nlohmann::json::array();
      for (long long m = 1; m <= coeffs; ++m)
        cs.push_back(groth_to_json(zeta_coefficient(z, m)));
      j["coefficients"] = cs;
    }
    if (limit) j["limit"] = groth_to_json(minus_limit_at_infinity(z));
    if (topological) {
      KnowledgeBase kb = KnowledgeBase::with_env();
      j["topological"] = topological_zeta(z, kb);
    }
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "Z = " << z.str() << "\n";
  for (long long m = 1; m <= coeffs; ++m)
    std::cout << "a_" << m << " = " << zeta_coefficient(z, m).str() << "\n";
  if (limit)
    std::cout << "-lim = " << minus_limit_at_infinity(z).str() << "\n";
  if (topological) {
    KnowledgeBase kb = KnowledgeBase::with_env();
    std::cout << "Ztop = " << topological_zeta(z, kb) << "\n";
  }
  return 0;
}

int cmd_ts(const std::string& f, const std::string& g, long long N,
           const std::vector<long long>& m_list, bool check, bool as_json) {
  KnowledgeBase kb = KnowledgeBase::with_env();
  GrothElem direct, assembled;
  if (m_list.empty() && N == 0) {
    TwoVariableSplit r = ts_two(f, g);
    direct = r.direct;
    assembled = r.assembled;
  } else {
    if (m_list.empty() || N == 0)
      throw ParseError("--N and --m must be given together");
    AssembleResult r = ts_assemble(f, g, N, m_list);
    if (!r.diagnostic.empty()) std::cerr << r.diagnostic << "\n";
    direct = r.direct;
    assembled = r.assembled;
  }
  Int chi_direct = realize_complex(theta(direct), kb);
  Int chi_assembled = realize_complex(theta(assembled), kb);
  bool ok = chi_direct == chi_assembled;
  if (as_json) {
    nlohmann::json j;
    j["kind"] = "ts";
    j["direct"] = groth_to_json(direct);
    j["assembled"] = groth_to_json(assembled);
    j["chi_direct"] = chi_direct.str();
    j["chi_assembled"] = chi_assembled.str();
    if (check) j["check"] = ok ? "PASS" : "FAIL";
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "direct    = " << direct.str() << "\n";
    std::cout << "assembled = " << assembled.str() << "\n";
    std::cout << "chi_direct = " << chi_direct.str()
              << " chi_assembled = " << chi_assembled.str() << "\n";
    if (check) std::cout << "check = " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return check && !ok ? 1 : 0;
}

int cmd_tconvex(const std::string& poly, const std::string& sign_s) {
  Poly2 f = poly_parse(poly);
  TConvexResult t = tconvex_chi(f, parse_sign(sign_s));
  std::cout << "chi_closed=" << t.chi_closed.str()
            << " chi_open=" << t.chi_open.str()
            << " relation=" << (t.relation_ok ? "OK" : "FAIL") << "\n";
  return 0;
}

int cmd_oracle(const std::string& which, const std::string& poly) {
  Poly2 f = poly_parse(poly);
  if (which == "mu") {
    std::cout << "mu = " << kouchnirenko_mu(f).str() << "\n";
  } else if (which == "chi") {
    std::cout << "chi = " << affine_curve_chi(f).str() << "\n";
  } else {
    throw ParseError("bad oracle name: " + which);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic calculator for plane-curve singularities"};
  app.require_subcommand(1);

  std::string poly, field = "C", sign = "+", retraction = "b",
              realize = "none", f_in, g_in, which;
  long long coeffs = 0, N = 0;
  std::vector<long long> m_list;
  bool limit = false, topological = false, check = false, as_json = false;

  CLI::App* newton = app.add_subcommand("newton", "staircase hull data");
  newton->add_option("poly", poly)->required();
  newton->add_flag("--json", as_json);

  CLI::App* milnor = app.add_subcommand("milnor", "motivic fiber class");
  milnor->add_option("poly", poly)->required();
  milnor->add_option("--field", field);
  milnor->add_option("--sign", sign);
  milnor->add_option("--retraction", retraction);
  milnor->add_option("--realize", realize);
  milnor->add_flag("--json", as_json);

  CLI::App* zeta = app.add_subcommand("zeta", "zeta series and limit");
  zeta->add_option("poly", poly)->required();
  zeta->add_option("--field", field);
  zeta->add_option("--coeffs", coeffs);
  zeta->add_flag("--limit", limit);
  zeta->add_flag("--topological", topological);
  zeta->add_flag("--json", as_json);

  CLI::App* ts = app.add_subcommand("ts", "additive fiber decomposition");
  ts->add_option("--f", f_in)->required();
  ts->add_option("--g", g_in)->required();
  ts->add_option("--N", N);
  ts->add_option("--m", m_list);
  ts->add_flag("--check", check);
  ts->add_flag("--json", as_json);

  CLI::App* tconvex = app.add_subcommand("tconvex", "monomial Euler pairing");
  tconvex->add_option("poly", poly)->required();
  tconvex->add_option("--sign", sign);

  CLI::App* oracle = app.add_subcommand("oracle", "classical invariants");
  oracle->add_option("which", which)->required();
  oracle->add_option("poly", poly)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (newton->parsed()) return cmd_newton(poly, as_json);
    if (milnor->parsed())
      return cmd_milnor(poly, field, sign, retraction, realize, as_json);
    if (zeta->parsed())
      return cmd_zeta(poly, field, coeffs, limit, topological, as_json);
    if (ts->parsed()) return cmd_ts(f_in, g_in, N, m_list, check, as_json);
    if (tconvex->parsed()) return cmd_tconvex(poly, sign);
    if (oracle->parsed()) return cmd_oracle(which, poly);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
