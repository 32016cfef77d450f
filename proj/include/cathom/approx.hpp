#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cathom/diagram.hpp"
#include "cathom/homology.hpp"
#include "cathom/tensor.hpp"

namespace cathom {

/// A category C together with a full subcategory D, plus the derived index
/// category D^op × C that the constructions below are built over.
struct RelativePair {
  CatPtr c;
  std::set<std::string> d_objs;
  CatPtr d;     // full subcategory on d_objs, morphism ids shared with c
  CatPtr d_op;
  CatPtr index; // d_op × c
};

RelativePair relative_pair(const CatPtr& c, const std::set<std::string>& d_objs);

/// The D^op×C-diagram (d,c) ↦ discrete simplicial set on mor_C(d,c), acting
/// by pre/post-composition.
Diagram hom_diagram(const RelativePair& p, int dim_cap);

/// The D^op×C-diagram of nerves of the double-comma categories d↘D↘c
/// (nerve of the opposite category when op_variant is set), together with the
/// "compose everything" collapse theta onto hom_diagram.
struct ApproxBundle {
  RelativePair pair;
  bool op_variant = true;
  int dim_cap = 0;
  Diagram e;
  Diagram f;
  DiagramMap theta; // e -> f
  std::map<std::string, CommaCat> comma;   // per index object "(d,c)"
  std::map<std::string, CatPtr> nerve_cat; // comma cat, reversed when op_variant
  std::map<std::string, NerveSSet> nerve;  // nerves underlying the values of e
};

ApproxBundle build_approx(const RelativePair& p, bool op_variant, int dim_cap);

/// Evidence that theta at (d,c) is a weak equivalence: path components of
/// E(d,c) biject with mor_C(d,c) through theta, every fiber is acyclic up to
/// the requested degree, and the composition/pre-insert-identity functor pair
/// gives an exact retraction plus a prism homotopy to the identity.
struct ThetaReport {
  bool pi0_bijective = false;
  bool fibers_acyclic = false;
  bool retraction_identity = false;
  bool prism_ok = false;
  std::string witness; // first failing item, empty when all pass

  bool ok() const {
    return pi0_bijective && fibers_acyclic && retraction_identity && prism_ok;
  }
};

ThetaReport verify_theta_we(const ApproxBundle& b, const std::string& d,
                            const std::string& cobj, int up_to);

/// The canonical isomorphism hom_diagram ⊗_D X → ind X, sending a class
/// [(phi, w)] to the colimit leg at (d, phi) applied to w, with verified
/// inverse.
struct LambdaIso {
  BiTensor bt; // hom_diagram ⊗ X, over C
  InducedDiagram ind;
  DiagramMap forward;  // bt.diagram -> ind.diagram
  DiagramMap backward; // inverse, composites checked to be identities
};

LambdaIso lambda_iso(const RelativePair& p, const Diagram& x, int dim_cap);

/// Bar approximation QbarX = E ⊗_D res X with the comparison map
/// xi = counit ∘ lambda ∘ (theta ⊗ res X) : QbarX -> X.
struct BarApprox {
  ApproxBundle bundle;
  Diagram res_x;           // X restricted to D
  BiTensor qbar;           // E ⊗ res X, over C
  DiagramMap theta_tensor; // qbar.diagram -> lambda.bt.diagram
  LambdaIso lambda;
  CounitResult eps;        // ind(res X) -> X
  DiagramMap xi;           // qbar.diagram -> X
};

BarApprox bar_approx(const Diagram& x, const RelativePair& p, bool op_variant,
                     int dim_cap);

/// Homotopy colimit: the tensor of the C^op-diagram of nerves of the reversed
/// under-categories (a↘C)^op with X, plus the collapse onto colim X.
struct HocolimResult {
  Diagram weights; // over C^op
  std::map<std::string, SliceCat> under;  // a↘C per object a
  std::map<std::string, NerveSSet> nerve; // nerve((a↘C)^op)
  TensorResult tensor;
  SSetPtr sset;
  ColimResult colim; // colim X
  SSetMap to_colim;  // hocolim -> colim X, constant on the nerve factor
};

HocolimResult hocolim(const Diagram& x, int dim_cap);

/// Colimit of the bar approximation taken with D = C.
struct LcolimResult {
  BarApprox bar;
  ColimResult colim; // colim of qbar.diagram
  SSetPtr sset;
  ColimResult colim_x;
  SSetMap xi_colim; // colim of xi : Lcolim -> colim X
};

LcolimResult lcolim(const Diagram& x, bool op_variant, int dim_cap);

/// Canonical comparison Lcolim X -> hocolim X (reversed-nerve variant), built
/// by forgetting the second comma leg, with inversion witness and the
/// commuting triangle over colim X.
struct Thm62Report {
  HocolimResult ho;
  LcolimResult l;
  SSetMap forward;
  std::optional<SSetMap> backward; // set iff forward is an isomorphism
  bool triangle_ok = false;

  bool ok() const { return backward.has_value() && triangle_ok; }
};

Thm62Report thm62_compare(const Diagram& x, int dim_cap);

/// Homology comparison between the plain-nerve L-colimit and the homotopy
/// colimit (the two agree only up to a zig-zag, so no canonical map exists).
struct NatVariantReport {
  std::vector<HomologyGroup> lcolim_nat;
  std::vector<HomologyGroup> hocolim_h;
  bool equal = false;
};

NatVariantReport hocolim_nat_variant_compare(const Diagram& x, int dim_cap,
                                             int up_to);

} // namespace cathom
