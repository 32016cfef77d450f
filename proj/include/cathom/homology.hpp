#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "cathom/sset.hpp"

namespace cathom {

using Matrix = std::vector<std::vector<mpz_class>>; // row-major

Matrix matrix_multiply(const Matrix& a, const Matrix& b);
Matrix identity_matrix(size_t n);

struct SmithResult {
  Matrix d; // diagonal, invariant factors d0 | d1 | ...
  Matrix u; // unimodular row transform
  Matrix v; // unimodular column transform, u * m * v == d
};

SmithResult smith_normal_form(const Matrix& m);

/// A bounded chain complex of free abelian groups with named bases.
/// boundary[n] maps degree n to degree n-1 (rows indexed by basis[n-1],
/// columns by basis[n]); boundary[0] is empty.
struct ChainComplex {
  std::vector<std::vector<std::string>> basis;
  std::vector<Matrix> boundary;

  int top() const { return static_cast<int>(basis.size()) - 1; }
  /// Checks shapes and d∘d = 0.
  void validate() const;
};

/// Degenerate faces are dropped (the normalized complex).
ChainComplex normalized_chain_complex(const SSet& k, int up_to);

struct HomologyGroup {
  int degree = 0;
  long betti = 0;
  std::vector<mpz_class> torsion; // invariant factors > 1, divisibility order
  bool operator==(const HomologyGroup&) const = default;
  bool is_trivial() const { return betti == 0 && torsion.empty(); }
};

std::string to_string(const HomologyGroup& h);

/// H_0 .. H_up_to of the complex (up_to must be < basis size so the incoming
/// boundary is available; degrees above top() are reported as zero).
std::vector<HomologyGroup> homology(const ChainComplex& c, int up_to);
std::vector<HomologyGroup> homology(const SSet& k, int up_to);

/// Chain map on normalized complexes induced by a simplicial map.
std::vector<Matrix> chain_map(const SSetMap& f, int up_to);

/// Mapping cone of the induced chain map: cone_n = K_{n-1} ⊕ L_n.
ChainComplex mapping_cone(const SSetMap& f, int up_to);

/// Path components: vertex id -> component representative (least member).
std::map<std::string, std::string> pi0(const SSet& k);
bool pi0_bijective(const SSetMap& f);

/// True iff f induces isomorphisms H_n for n <= up_to and a bijection on
/// path components.  Decided by comparing abstract group invariants plus
/// vanishing of the mapping cone homology; for finitely generated abelian
/// groups an abstractly-iso surjective image forces an isomorphism.
bool is_homology_equivalence(const SSetMap& f, int up_to);

} // namespace cathom
