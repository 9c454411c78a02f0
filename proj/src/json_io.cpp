#include "mm/json_io.hpp"

#include <string>

#include "mm/poly.hpp"
#include "mm/rational.hpp"

namespace mm {

namespace {

using nlohmann::json;

const char* field_tag(Field f) { return f == Field::C ? "C" : "R"; }

Field field_from(const std::string& s) {
  if (s == "C") return Field::C;
  if (s == "R") return Field::R;
  throw ParseError("bad field tag: " + s);
}

json atom_to_json(const Atom& a) {
  json j;
  switch (a.kind) {
    case Atom::Kind::FaceTorsor:
    case Atom::Kind::CurveVariety:
      j["kind"] = a.kind == Atom::Kind::FaceTorsor ? "FaceTorsor"
                                                   : "CurveVariety";
      j["face"] = poly_str(a.face);
      j["par1"] = a.par1;
      j["par2"] = a.par2;
      j["sign"] = a.sign;
      j["field"] = field_tag(a.field);
      break;
    case Atom::Kind::KummerTorsor:
    case Atom::Kind::KummerVariety:
      j["kind"] = a.kind == Atom::Kind::KummerTorsor ? "KummerTorsor"
                                                     : "KummerVariety";
      j["order"] = a.order;
      j["sign"] = a.sign;
      j["field"] = field_tag(a.field);
      break;
    case Atom::Kind::Named:
      j["kind"] = "Named";
      j["name"] = a.name;
      break;
  }
  return j;
}

Atom atom_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "FaceTorsor" || kind == "CurveVariety") {
    Poly2 face = poly_parse(j.at("face").get<std::string>());
    int par1 = j.at("par1").get<int>();
    int par2 = j.at("par2").get<int>();
    Field f = field_from(j.at("field").get<std::string>());
    Atom a = kind == "FaceTorsor" ? face_torsor_atom(face, par1, par2, f)
                                  : curve_variety_atom(face, par1, par2, f);
    a.sign = j.at("sign").get<int>();
    return a;
  }
  if (kind == "KummerTorsor" || kind == "KummerVariety") {
    long long order = j.at("order").get<long long>();
    int sign = j.at("sign").get<int>();
    Field f = field_from(j.at("field").get<std::string>());
    return kind == "KummerTorsor" ? kummer_torsor_atom(order, sign, f)
                                  : kummer_variety_atom(order, sign, f);
  }
  if (kind == "Named") return named_atom(j.at("name").get<std::string>());
  throw ParseError("bad atom kind: " + kind);
}

}  // namespace

nlohmann::json groth_to_json(const GrothElem& e) {
  json terms = json::array();
  for (const auto& [mono, ap] : e.terms) {
    json atoms = json::array();
    for (const Atom& a : mono) atoms.push_back(atom_to_json(a));
    for (const auto& [expo, coeff] : ap.c) {
      json t;
      t["coeff"] = static_cast<std::string>(coeff.str());
      json at = atoms;
      if (expo != 0) at.push_back(json{{"kind", "AffPow"}, {"n", expo}});
      t["atoms"] = at;
      terms.push_back(t);
    }
  }
  return json{{"kind", "class"}, {"terms", terms}};
}

GrothElem groth_from_json(const nlohmann::json& j) {
  try {
    if (j.at("kind").get<std::string>() != "class")
      throw ParseError("expected a class document");
    GrothElem out = GrothElem::zero();
    for (const json& t : j.at("terms")) {
      Int coeff(t.at("coeff").get<std::string>());
      long long apow = 0;
      Monomial mono;
      for (const json& a : t.at("atoms")) {
        if (a.at("kind").get<std::string>() == "AffPow") {
          apow += a.at("n").get<long long>();
        } else {
          mono.push_back(atom_from_json(a));
        }
      }
      GrothElem piece = GrothElem::scalar(1);
      for (const Atom& a : mono) piece = piece * GrothElem::atom(a);
      out = out + piece.times(APoly::apow(apow, coeff));
    }
    return out;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("bad class document: ") + ex.what());
  }
}

nlohmann::json zeta_to_json(const ZetaFn& z) {
  json terms = json::array();
  for (const ZetaTerm& t : z.terms) {
    json poles = json::array();
    for (const auto& [a, b] : t.poles) poles.push_back(json::array({a, b}));
    terms.push_back(json{{"coeff", groth_to_json(t.coeff)},
                         {"a0", t.a0},
                         {"b0", t.b0},
                         {"poles", poles}});
  }
  return json{{"kind", "zeta"}, {"terms", terms}};
}

ZetaFn zeta_from_json(const nlohmann::json& j) {
  try {
    if (j.at("kind").get<std::string>() != "zeta")
      throw ParseError("expected a zeta document");
    ZetaFn out;
    for (const json& t : j.at("terms")) {
      ZetaTerm term;
      term.coeff = groth_from_json(t.at("coeff"));
      term.a0 = t.at("a0").get<long long>();
      term.b0 = t.at("b0").get<long long>();
      for (const json& p : t.at("poles"))
        term.poles.emplace_back(p.at(0).get<long long>(),
                                p.at(1).get<long long>());
      std::sort(term.poles.begin(), term.poles.end());
      out.terms.push_back(term);
    }
    out.normalize();
    return out;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("bad zeta document: ") + ex.what());
  }
}

}  // namespace mm
