#pragma once

#include <map>
#include <string>
#include <vector>

#include "cathom/diagram.hpp"
#include "cathom/fincat.hpp"
#include "cathom/sset.hpp"

namespace cathom {

/// X ⊗_A Y for X over A^op and Y over A: the coequalizer of
///   ⊔_{α: b -> b'} X(b')×Y(b)  ⇉  ⊔_a X(a)×Y(a)
/// with the two maps X(α)×Y(b) and X(b')×Y(α).
struct TensorResult {
  SSetPtr result;
  std::vector<std::string> objects;          // index objects, in order
  std::map<std::string, ProductSSet> pairs;  // a -> X(a)×Y(a)
  CoproductSSet middle;                      // ⊔_a X(a)×Y(a)
  Coequalizer coeq;
  SSetMap quotient_map; // middle -> result

  /// X(a)×Y(a) -> result.
  SSetMap summand(const std::string& a) const;
};

TensorResult tensor_over(const Diagram& x, const Diagram& y);

/// Map on tensors induced by maps of both variables.
SSetMap tensor_map(const TensorResult& src, const TensorResult& dst,
                   const DiagramMap& f, const DiagramMap& g);

/// The C-indexed family of tensors over A, for XX over A^op×C and Y over A.
struct BiTensor {
  Diagram diagram;                        // over C
  std::map<std::string, TensorResult> at; // per object of C
};

/// The A^op-diagram XX(-, c).
Diagram bi_tensor_slice(const Diagram& xx, const CatPtr& a_op, const std::string& c);

BiTensor bi_tensor(const Diagram& xx, const Diagram& y, const CatPtr& c);

struct BiTensorMap {
  BiTensor source;
  BiTensor target;
  DiagramMap map; // over C
};

/// Componentwise induced map on coequalizers for f: XX -> XX' over A^op×C.
BiTensorMap bi_tensor_map(const DiagramMap& f, const Diagram& y, const CatPtr& c);

/// Truncated mapping space: Map(K, Z)_q = simplicial maps K×Δ^q -> Z, built
/// up to the shared dimension cap of K and Z.
struct MapSpace {
  SSetPtr domain;   // K
  SSetPtr codomain; // Z
  SSetPtr sset;
  LevelwiseResult level;
  std::map<int, ProductSSet> cylinder;            // q -> K×Δ^q
  std::map<std::pair<int, std::string>, SSetMap> element; // (q, name) -> map

  /// Normal form of a (possibly degenerate) q-simplex given as a map.
  FormalSimplex formal_of(int q, const SSetMap& m) const;
  const SSetMap& map_of(int q, const std::string& name) const {
    return element.at({q, name});
  }
};

MapSpace map_space(const SSetPtr& k, const SSetPtr& z, long budget = 2000000);

/// Serialization of a map's assignment table, used as simplex names in
/// mapping spaces.
std::string encode_map(const SSetMap& m);

/// The A^op×C-diagram (a,c) ↦ Map(Y(a), Z(c)).
Diagram mapping_diagram(const Diagram& y, const Diagram& z, const CatPtr& c,
                        std::map<std::pair<std::string, std::string>, MapSpace>* spaces,
                        long budget = 2000000);

/// Enumerates mor(XX ⊗ Y, Z) and mor(XX, Map(Y,Z)) and checks the canonical
/// transpose is a bijection.  All inputs must share one dimension cap, which
/// plays the role of the truncation degree q_max.
bool tensor_adjunction_check(const Diagram& xx, const Diagram& y, const Diagram& z,
                             const CatPtr& c, long budget = 2000000);

} // namespace cathom
