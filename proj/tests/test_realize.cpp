#include <cstdlib>
#include <fstream>

#include "doctest.h"
#include "mm/milnor.hpp"
#include "mm/poly.hpp"
#include "mm/realize.hpp"

using namespace mm;

TEST_CASE("complex Euler realization rules") {
  KnowledgeBase kb;
  CHECK(realize_complex(GrothElem::scalar(5), kb) == 5);
  CHECK(realize_complex(GrothElem::from_apoly(APoly::apow(3)), kb) == 1);
  CHECK(realize_complex(GrothElem::from_apoly(APoly::gm()), kb) == 0);
  CHECK(realize_complex(GrothElem::atom(kummer_torsor_atom(7, +1, Field::C)), kb) == 7);
  CHECK(realize_complex(GrothElem::atom(kummer_variety_atom(4, +1, Field::C)), kb) == 4);

  Poly2 cusp = poly_parse("x^3+y^2");
  CHECK(realize_complex(GrothElem::atom(face_torsor_atom(cusp, 0, 1, Field::C)), kb) == -6);
  CHECK(realize_complex(GrothElem::atom(curve_variety_atom(cusp, 0, 1, Field::C)), kb) == -1);

  // Products multiply: torus factors merge to the lcm root set.
  GrothElem prod = GrothElem::atom(kummer_torsor_atom(2, +1, Field::C)) *
                   GrothElem::atom(kummer_torsor_atom(3, +1, Field::C));
  CHECK(realize_complex(prod, kb) == 6);

  CHECK_THROWS_AS(realize_complex(GrothElem::atom(named_atom("mystery")), kb),
                  UnsupportedError);
}

TEST_CASE("real point counts of root sets") {
  KnowledgeBase kb;
  auto count = [&](long long m, int sign) {
    return realize_real(GrothElem::atom(kummer_torsor_atom(m, sign, Field::R)), kb);
  };
  CHECK(count(5, +1) == 1);
  CHECK(count(5, -1) == 1);
  CHECK(count(4, +1) == 2);
  CHECK(count(2, -1) == 0);
  CHECK(realize_real(GrothElem::from_apoly(APoly::gm()), kb) == -2);

  Poly2 circle = poly_parse("x^2+y^2");
  CHECK(realize_real(GrothElem::atom(curve_variety_atom(circle, 0, 0, Field::R)), kb) == 0);

  // Complex-field classes and torsor-stage faces have no real realization.
  CHECK_THROWS_AS(realize_real(GrothElem::atom(kummer_torsor_atom(2, +1, Field::C)), kb),
                  UnsupportedError);
  Poly2 cusp = poly_parse("x^3+y^2");
  CHECK_THROWS_AS(realize_real(GrothElem::atom(face_torsor_atom(cusp, 0, 1, Field::R)), kb),
                  UnsupportedError);
  CHECK_THROWS_AS(beta(GrothElem::atom(kummer_torsor_atom(2, +1, Field::C)), kb),
                  UnsupportedError);
}

TEST_CASE("sextic fiber realizations over the reals") {
  KnowledgeBase kb;
  GrothElem fiber = motivic_fiber_b(poly_parse("x^6 + x^2*y^2 + y^6"), Field::R, +1);

  CHECK(realize_real(fiber, kb) == 0);
  CHECK(beta(forgetful(fiber), kb) == APoly());
  CHECK(beta_mu2(fiber, kb) == APoly::apow(1) + APoly::scalar(1));
  CHECK(beta_mu2(fiber, kb).str("u") == "u+1");
}

TEST_CASE("Poincare variable substitution keeps exponents") {
  KnowledgeBase kb;
  CHECK(beta(GrothElem::from_apoly(APoly::apow(2)), kb) == APoly::apow(2));
  CHECK(beta(GrothElem::from_apoly(APoly::gm()), kb).str("u") == "u-1");
}

TEST_CASE("value parser for realization tables") {
  CHECK(upoly_parse("u-1") == APoly::apow(1) - APoly::scalar(1));
  CHECK(upoly_parse("2*u^2 + 3") == APoly::apow(2, 2) + APoly::scalar(3));
  CHECK(upoly_parse("u") == APoly::apow(1));
  CHECK(upoly_parse("7") == APoly::scalar(7));
  CHECK_THROWS_AS(upoly_parse(""), ParseError);
  CHECK_THROWS_AS(upoly_parse("u+*"), ParseError);
}

TEST_CASE("knowledge base keys are the printed atoms") {
  Poly2 f = poly_parse("x^6+x^2*y^2");
  CHECK(atom_kb_id(curve_variety_atom(f, 1, 0, Field::R)) == "[{x^6+x^2y^2=1}]@R#10");
  CHECK(atom_kb_id(kummer_torsor_atom(3, +1, Field::C)) == "[{x^3=rv(t)}]@C");
}

TEST_CASE("knowledge base file loading and precedence") {
  KnowledgeBase kb;
  CHECK(kb.lookup("[{x^6+x^2y^2=1}]@R#10", "beta") == "u-1");
  CHECK(kb.provenance("[{x^6+x^2y^2=1}]@R#10", "beta") == "builtin");
  CHECK_FALSE(kb.has("[ovals]@C", "chi"));
  CHECK_THROWS_AS(kb.lookup("[ovals]@C", "chi"), UnsupportedError);

  const char* path = "/tmp/mm_kb_test.txt";
  {
    std::ofstream out(path);
    out << "# comment line\n";
    out << "[ovals]@C\tchi\t4\tmanual\n";
    out << "[{x^6+x^2y^2=1}]@R#10\tbeta\tu^5\tfile\n";  // must lose to built-in
  }
  kb.load_file(path);
  CHECK(kb.lookup("[ovals]@C", "chi") == "4");
  CHECK(kb.provenance("[ovals]@C", "chi") == "manual");
  CHECK(kb.lookup("[{x^6+x^2y^2=1}]@R#10", "beta") == "u-1");
  CHECK(realize_complex(GrothElem::atom(named_atom("ovals")), kb) == 4);

  kb.add("[{x^6+x^2y^2=1}]@R#10", "beta", "u^9", "force", true);
  CHECK(kb.lookup("[{x^6+x^2y^2=1}]@R#10", "beta") == "u^9");

  setenv("MM_KB_PATH", path, 1);
  KnowledgeBase env_kb = KnowledgeBase::with_env();
  CHECK(env_kb.lookup("[ovals]@C", "chi") == "4");
  CHECK(env_kb.lookup("[{x^6+x^2y^2=1}]@R#10", "beta") == "u-1");
  unsetenv("MM_KB_PATH");

  CHECK_THROWS_AS(kb.load_file("/nonexistent/kb.txt"), UnsupportedError);
}
