#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cathom/error.hpp"

namespace cathom {

struct Mor {
  std::string id;
  std::string src;
  std::string tgt;
  bool operator==(const Mor&) const = default;
};

/// A finite category given by a total composition table.  Objects and
/// morphisms keep declaration order; derived categories (opposite, product,
/// comma, ...) use lexicographic order of generated ids so independently
/// computed categories compare equal.
class FinCat {
public:
  std::vector<std::string> objects;
  std::vector<Mor> morphisms;
  std::map<std::string, std::string> identities;                  // obj -> mor id
  std::map<std::pair<std::string, std::string>, std::string> table; // (g,f) -> g∘f

  bool has_object(const std::string& o) const;
  bool has_morphism(const std::string& m) const;
  const Mor& mor(const std::string& m) const;
  const std::string& src(const std::string& m) const { return mor(m).src; }
  const std::string& tgt(const std::string& m) const { return mor(m).tgt; }
  const std::string& identity(const std::string& obj) const;
  bool is_identity(const std::string& m) const;

  /// g∘f; requires tgt(f) == src(g).
  const std::string& compose(const std::string& g, const std::string& f) const;

  /// Morphism ids d -> c in declaration order.
  std::vector<std::string> hom(const std::string& d, const std::string& c) const;

  /// Checks endpoints, units, totality and associativity exhaustively.
  void validate() const;

  bool operator==(const FinCat&) const = default;
};

using CatPtr = std::shared_ptr<const FinCat>;

struct CatSpec {
  std::vector<std::string> objects;
  std::vector<Mor> morphisms;                                      // without identities, or with
  std::map<std::string, std::string> identities;                   // may be empty: auto-generated
  std::map<std::pair<std::string, std::string>, std::string> compose; // identity entries optional
};

/// Builds and validates a FinCat; missing identities are auto-inserted as
/// "id_<obj>" and composites with identities are inferred.
CatPtr make_category(const CatSpec& spec);

CatPtr opposite(const CatPtr& c);

/// Objects "(c,a)", morphisms "(f,g)"; componentwise composition.
CatPtr product(const CatPtr& c, const CatPtr& a);

struct CatFunctor {
  CatPtr source;
  CatPtr target;
  std::map<std::string, std::string> on_objects;
  std::map<std::string, std::string> on_morphisms;

  const std::string& obj(const std::string& o) const { return on_objects.at(o); }
  const std::string& morph(const std::string& m) const { return on_morphisms.at(m); }
  void validate() const;
  bool operator==(const CatFunctor&) const = default;
};

CatFunctor identity_functor(const CatPtr& c);
CatFunctor compose(const CatFunctor& g, const CatFunctor& f);
/// Same tables, between the opposite categories.
CatFunctor opposite_functor(const CatFunctor& f);

struct CatNatTrans {
  CatFunctor source; // F
  CatFunctor target; // G, same source/target cats
  std::map<std::string, std::string> components; // obj -> mor id in target cat
  void validate() const;
};

struct SubcatResult {
  CatPtr cat;
  CatFunctor inclusion;
};

/// Full subcategory on the given objects.
SubcatResult full_subcategory(const CatPtr& c, const std::set<std::string>& objs);

struct CommaObject {
  std::string alpha; // d -> d0 in D
  std::string mid;   // d0
  std::string gamma; // d0 -> c in C
};

struct CommaCat {
  CatPtr cat;
  std::map<std::string, CommaObject> label; // comma object id -> triple
  std::map<std::string, std::string> beta;  // comma mor id -> underlying mor in C
};

/// Double-comma category d↘D↘c for the full subcategory D on D_objs.
CommaCat comma_double(const CatPtr& c, const std::set<std::string>& d_objs,
                      const std::string& d, const std::string& cobj);

struct SliceObject {
  std::string obj;   // d' in D
  std::string arrow; // d' -> c (comma_slice) resp. c -> d' (comma_under)
};

struct SliceCat {
  CatPtr cat;
  std::map<std::string, SliceObject> label;
  std::map<std::string, std::string> beta; // slice mor id -> underlying mor in C
  /// Object id of the pair (obj, arrow); fails if absent.
  const std::string& object_id(const std::string& obj, const std::string& arrow) const;
};

/// D↘c: pairs (d' in D, alpha: d' -> c); morphisms beta: d' -> d'' in D with
/// alpha = alpha'∘beta.
SliceCat comma_slice(const CatPtr& c, const std::set<std::string>& d_objs,
                     const std::string& cobj);

/// c↘D: pairs (alpha: c -> d', d' in D); morphisms beta with beta∘alpha = alpha'.
SliceCat comma_under(const CatPtr& c, const std::set<std::string>& d_objs,
                     const std::string& cobj);

/// True iff the only endomorphisms are identities and nonidentity reachability
/// is acyclic (so nerves are finite-dimensional).
bool is_loop_free(const FinCat& c);

/// Product-category id helpers.
std::string pair_obj_id(const std::string& c, const std::string& a);
std::string pair_mor_id(const std::string& f, const std::string& g);
std::pair<std::string, std::string> split_pair_id(const std::string& id);

} // namespace cathom
