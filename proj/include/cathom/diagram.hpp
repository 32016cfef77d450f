#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cathom/fincat.hpp"
#include "cathom/sset.hpp"

namespace cathom {

/// A functor from a finite index category to simplicial sets.
struct Diagram {
  CatPtr index;
  std::map<std::string, SSetPtr> value;  // object -> simplicial set
  std::map<std::string, SSetMap> action; // morphism id -> map

  const SSetPtr& at(const std::string& obj) const;
  const SSetMap& act(const std::string& mor) const;
  /// Functoriality, endpoints and map validity, checked exhaustively.
  void validate() const;
};

struct DiagramMap {
  Diagram source;
  Diagram target; // same index category
  std::map<std::string, SSetMap> components;

  const SSetMap& at(const std::string& obj) const { return components.at(obj); }
  /// Component validity plus every naturality square.
  void validate() const;
  bool operator==(const DiagramMap& o) const;
};

Diagram constant_diagram(const CatPtr& c, const SSetPtr& k);
DiagramMap identity_diagram_map(const Diagram& x);
DiagramMap compose(const DiagramMap& g, const DiagramMap& f);

/// Restriction to the full subcategory on d_objs (morphism ids are shared).
Diagram restrict_diagram(const Diagram& x, const std::set<std::string>& d_objs);
DiagramMap restrict_diagram_map(const DiagramMap& f, const std::set<std::string>& d_objs);

struct ColimResult {
  SSetPtr sset;
  std::map<std::string, SSetMap> legs; // index object -> X(c) -> colim
  CoproductSSet cop;                   // over objects
  Coequalizer coeq;
};

/// Colimit as the coequalizer of ⊔_{f: c -> c'} X(c) ⇉ ⊔_c X(c).
/// empty_cap fixes the dimension cap when the index category is empty.
ColimResult colim_diagram(const Diagram& x, int empty_cap = 0);
/// The map out of the colimit determined by a commuting cocone.  The target
/// is needed explicitly when the index (and hence the cocone) is empty.
SSetMap colim_induced(const ColimResult& cx,
                      const std::map<std::string, SSetMap>& cocone,
                      const SSetPtr& target = nullptr);
/// Functoriality: colim X -> colim Y from a diagram map.
SSetMap colim_map(const ColimResult& cx, const ColimResult& cy, const DiagramMap& f);

/// Left Kan extension along the inclusion of a full subcategory, computed
/// pointwise as colimits over the comma slices D↘c.
struct InducedDiagram {
  Diagram diagram; // over C
  std::set<std::string> d_objs;
  std::map<std::string, SliceCat> slices;    // per object of C
  std::map<std::string, ColimResult> colims; // per object of C

  /// Structure map Y(d') -> (ind Y)(c) at the slice object (d', alpha: d'->c).
  const SSetMap& leg(const std::string& c, const std::string& dprime,
                     const std::string& alpha) const;
};

InducedDiagram induce(const Diagram& y, const CatPtr& c);

/// Adjunction unit Y -> res(ind Y), component at d given by the leg at (d, id).
DiagramMap adjunction_unit(const Diagram& y, const InducedDiagram& ind);

struct CounitResult {
  InducedDiagram induced; // ind(res X)
  DiagramMap eps;         // ind(res X) -> X
};

CounitResult counit(const Diagram& x, const std::set<std::string>& d_objs);

bool is_objectwise_homology_equivalence(const DiagramMap& f,
                                        const std::set<std::string>& d_objs,
                                        int up_to);

/// All natural transformations X -> Y in deterministic order.
std::vector<DiagramMap> enumerate_diagram_maps(const Diagram& x, const Diagram& y,
                                               long budget = 2000000);

/// Transposes of the (ind ⊣ res) adjunction.
DiagramMap transpose_to_res(const DiagramMap& g /* ind Y -> Z */,
                            const Diagram& y, const InducedDiagram& ind);
DiagramMap transpose_to_ind(const DiagramMap& h /* Y -> res Z */,
                            const Diagram& z, const InducedDiagram& ind);

/// Enumerates mor(ind Y, Z) and mor(Y, res Z) and checks that the two
/// transposes are mutually inverse bijections.
bool ind_res_adjunction_check(const Diagram& y, const Diagram& z,
                              const std::set<std::string>& d_objs,
                              long budget = 2000000);

} // namespace cathom
