#pragma once

#include <map>
#include <string>

#include "mm/groth.hpp"

namespace mm {

// External facts about classes the calculus cannot evaluate from lattice
// data alone, keyed by (atom id, realization name). Entries loaded from the
// file named by MM_KB_PATH extend the built-in table; built-ins win on
// conflict so golden outputs stay stable.
//
// File format, one entry per line:  atom-id <TAB> realization <TAB> value
// <TAB> provenance.  '#' starts a comment.
class KnowledgeBase {
 public:
  KnowledgeBase();  // built-ins only
  static KnowledgeBase with_env();  // built-ins + MM_KB_PATH if set

  void load_file(const std::string& path);
  void add(const std::string& atom_id, const std::string& realization,
           const std::string& value, const std::string& provenance, bool overwrite);

  // Throws UnsupportedError naming the missing key.
  const std::string& lookup(const std::string& atom_id, const std::string& realization) const;
  bool has(const std::string& atom_id, const std::string& realization) const;
  const std::string& provenance(const std::string& atom_id,
                                const std::string& realization) const;

 private:
  std::map<std::pair<std::string, std::string>, std::pair<std::string, std::string>> entries_;
};

// Stable key used in the knowledge base.
std::string atom_kb_id(const Atom& a);

// Polynomials in the Poincare variable u reuse the Laurent container.
APoly upoly_parse(const std::string& s);

// Euler characteristic of the complex points ([A] -> 1).
Int realize_complex(const GrothElem& e, const KnowledgeBase& kb);

// Compactly supported Euler characteristic of the real points ([A] -> -1).
// Only defined on real-field classes.
Int realize_real(const GrothElem& e, const KnowledgeBase& kb);

// Virtual Poincare polynomial of the real points ([A] -> u).
APoly beta(const GrothElem& e, const KnowledgeBase& kb);

// Equivariant refinement for the two-element deck action: even-order Kummer
// factors are free orbits and count once; curve factors with an active
// coordinate parity resolve through the knowledge base.
APoly beta_mu2(const GrothElem& e, const KnowledgeBase& kb);

// Forget the action bookkeeping (identity on the underlying classes).
GrothElem forgetful(const GrothElem& e);

}  // namespace mm
