#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cathom/error.hpp"
#include "cathom/fincat.hpp"

namespace cathom {

/// Eilenberg–Zilber normal form: a strictly decreasing degeneracy word
/// applied to a non-degenerate base simplex.  word.front() is the outermost
/// (last applied, largest) index.
struct FormalSimplex {
  std::vector<int> word;
  std::string base;
  int base_dim = 0;

  int dim() const { return base_dim + static_cast<int>(word.size()); }
  bool nondegenerate() const { return word.empty(); }
  auto operator<=>(const FormalSimplex&) const = default;
};

std::string to_string(const FormalSimplex& f);
/// Parses "s3 s1 | base" or plain "base"; base_dim must be supplied by caller
/// context when reading files (see io.hpp).
FormalSimplex parse_formal(const std::string& s, int dim_hint);

/// A finite-type simplicial set: non-degenerate generators per dimension with
/// faces in EZ normal form, tracked up to a dimension cap.  Immutable after
/// construction by convention (held behind SSetPtr).
class SSet {
public:
  explicit SSet(int dim_cap);

  int dim_cap() const { return cap_; }
  void add_simplex(const std::string& id, int dim,
                   std::vector<FormalSimplex> faces = {});

  const std::vector<std::string>& nd(int n) const;
  int nd_count(int n) const { return static_cast<int>(nd(n).size()); }
  /// Largest n with nd(n) nonempty, or -1 for the empty simplicial set.
  int top_dim() const;
  bool has(const std::string& id) const;
  int dim_of(const std::string& id) const;
  const std::vector<FormalSimplex>& faces_of(const std::string& id) const;
  FormalSimplex formal(const std::string& id) const;

  FormalSimplex face(const FormalSimplex& x, int i) const;
  static FormalSimplex degenerate(const FormalSimplex& x, int j);
  /// Applies a degeneracy word (outermost-first, as stored) on top of x.
  static FormalSimplex apply_word(const FormalSimplex& x, const std::vector<int>& word);

  /// All formal simplices of dimension n (degenerate ones included), sorted.
  std::vector<FormalSimplex> all_formal(int n) const;

  /// Simplicial identities d_i d_j = d_{j-1} d_i (i<j) on all generators.
  void validate() const;

  bool operator==(const SSet& other) const;

private:
  int cap_;
  std::vector<std::vector<std::string>> nd_;
  std::map<std::string, int> dim_;
  std::map<std::string, std::vector<FormalSimplex>> faces_;
};

using SSetPtr = std::shared_ptr<const SSet>;

struct SSetMap {
  SSetPtr source;
  SSetPtr target;
  std::map<std::string, FormalSimplex> assignment; // nd id -> formal in target

  FormalSimplex apply(const FormalSimplex& x) const;
  /// Commutation with all face maps, checked exhaustively.
  void validate() const;
  bool operator==(const SSetMap& o) const;
};

SSetMap identity_map(const SSetPtr& k);
SSetMap compose(const SSetMap& g, const SSetMap& f);

/// ---- standard simplicial sets -------------------------------------------

/// Δ^n: non-degenerate k-simplices are the (k+1)-subsets of {0..n},
/// ids "0.2.3".
SSetPtr delta(int n, int dim_cap);
SSetPtr boundary_delta(int n, int dim_cap);
SSetMap boundary_inclusion(int n, int dim_cap);
/// Discrete simplicial set on a vertex set.
SSetPtr constant_sset(const std::vector<std::string>& verts, int dim_cap);
std::vector<std::string> level_zero(const SSet& k);

/// Vertex id of Δ^n simplex formal t at position i (t monotone [m]->[1..]).
std::vector<int> delta_vertex_sequence(const FormalSimplex& t);
/// Formal simplex of Δ^n from a weakly increasing vertex sequence.
FormalSimplex delta_formal_from_vertices(const std::vector<int>& verts);
/// Restriction of an n-simplex x of K along a formal simplex t of Δ^n
/// (the simplicial operator action; t has dimension m, result dimension m).
FormalSimplex restrict_along(const SSet& k, const FormalSimplex& x,
                             const FormalSimplex& t);

/// ---- generic levelwise construction --------------------------------------

/// Builds an SSet in EZ normal form from an explicit levelwise description:
/// element names per dimension plus face/degeneracy callbacks.  Element names
/// become the nd simplex ids.
struct LevelwiseData {
  int cap = 0;
  std::vector<std::vector<std::string>> elems; // per dim, deterministic order
  std::function<std::string(int dim, const std::string&, int i)> face;
  std::function<std::string(int dim, const std::string&, int j)> degeneracy;
};

struct LevelwiseResult {
  SSetPtr sset;
  /// Normal form of every levelwise element.
  std::map<std::pair<int, std::string>, FormalSimplex> normal;
  const FormalSimplex& normal_of(int dim, const std::string& e) const {
    return normal.at({dim, e});
  }
};

LevelwiseResult build_from_levelwise(const LevelwiseData& data);

/// ---- colimit constructions ------------------------------------------------

struct CoproductSSet {
  SSetPtr sset;
  std::vector<SSetMap> injections;
  std::vector<std::string> tags;
};

/// Disjoint union; ids are "tag:id".  Default tags "0","1",...
CoproductSSet coproduct(const std::vector<SSetPtr>& parts,
                        std::vector<std::string> tags = {});
/// Assembles a map out of a coproduct from per-summand maps.
SSetMap coproduct_map(const CoproductSSet& cop, const std::vector<SSetMap>& legs);

struct ProductSSet {
  SSetPtr left, right, sset;
  std::map<std::string, std::pair<FormalSimplex, FormalSimplex>> components;
  LevelwiseResult level;
  /// EZ normal form of a levelwise pair (fx, fy) of equal dimension.
  FormalSimplex pair_formal(const FormalSimplex& fx, const FormalSimplex& fy) const;
};

ProductSSet product(const SSetPtr& k, const SSetPtr& l);
/// Componentwise map between products.
SSetMap product_map(const ProductSSet& src, const ProductSSet& dst,
                    const SSetMap& f, const SSetMap& g);
/// Projections to the factors.
SSetMap product_proj_left(const ProductSSet& p);
SSetMap product_proj_right(const ProductSSet& p);

struct Coequalizer {
  SSetPtr domain; // B
  SSetPtr sset;   // quotient
  SSetMap projection;
  std::map<std::string, FormalSimplex> rep; // nd id of quotient -> formal in B
  std::map<std::pair<int, std::string>, FormalSimplex> down; // class map

  FormalSimplex map_down(const FormalSimplex& x) const;
};

/// Levelwise quotient of the common target by f(x) ~ g(x), renormalized.
Coequalizer coequalizer(const SSetMap& f, const SSetMap& g);
/// Descends h: B -> Z (with h∘f = h∘g) to the quotient.
SSetMap induced_map(const Coequalizer& q, const SSetMap& h);

struct Pushout {
  SSetPtr sset;
  SSetMap leg_left;  // B -> P
  SSetMap leg_right; // C -> P
  Coequalizer coeq;
  CoproductSSet cop;
};

Pushout pushout(const SSetMap& f /*A->B*/, const SSetMap& g /*A->C*/);

/// ---- nerves ----------------------------------------------------------------

struct Chain {
  std::string obj0;              // object at position 0
  std::vector<std::string> mors; // composable morphism ids
};

struct NerveSSet {
  CatPtr cat;
  SSetPtr sset;
  LevelwiseResult level;
  FormalSimplex chain_formal(const Chain& c) const;
  Chain chain_of(const FormalSimplex& f) const; // inverse, with identities
};

/// Nerve with Segal convention: n-simplices are length-n chains, inner faces
/// compose, outer faces drop ends.  cap < 0 means: require loop-free and use
/// default_cap.
NerveSSet nerve(const CatPtr& c, int cap = -1, int default_cap = 6);
SSetMap nerve_of_functor(const CatFunctor& f, const NerveSSet& ns, const NerveSSet& nt);

/// Prism homotopy Δ¹ × B(src F) -> B(tgt F) induced by a natural
/// transformation, with H|_0 = B(F) and H|_1 = B(G).
struct NatTransHomotopy {
  ProductSSet cylinder; // Δ¹ × nerve(A)
  SSetMap h;
  SSetMap end0, end1;   // nerve(A) -> cylinder
};
NatTransHomotopy homotopy_from_nat_trans(const CatNatTrans& nu, const NerveSSet& na,
                                         const NerveSSet& nb);

/// ---- skeleta ----------------------------------------------------------------

struct Skeleton {
  SSetPtr sset;
  SSetMap inclusion;
};
Skeleton skeleton(const SSetPtr& k, int n);
/// Reconstructs sk_n from sk_{n-1} by the attaching pushout and compares.
bool skeleton_pushout_check(const SSetPtr& k, int n, long budget = 2000000);

/// ---- search -----------------------------------------------------------------

struct IsoWitness {
  SSetMap forward;
  SSetMap backward;
};

/// Deterministic backtracking search for an isomorphism; nullopt means
/// "provably not isomorphic"; SearchBudgetExceeded means "unknown".
std::optional<IsoWitness> iso_check(const SSetPtr& k, const SSetPtr& l,
                                    long budget = 2000000);

/// All simplicial maps K -> L in deterministic order.
std::vector<SSetMap> enumerate_maps(const SSetPtr& k, const SSetPtr& l,
                                    long budget = 2000000);

/// Inverts a map that is bijective on non-degenerate simplices in every
/// dimension; returns nullopt if it is not an isomorphism.
std::optional<SSetMap> invert_map(const SSetMap& f);

} // namespace cathom
