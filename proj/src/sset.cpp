#include "cathom/sset.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cathom {

namespace {

FormalSimplex nd_formal(const std::string& id, int dim) {
  return FormalSimplex{{}, id, dim};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

/// All strictly decreasing words of length k with letters in {0..top}.
void decreasing_words(int top, int k, std::vector<int>& acc,
                      std::vector<std::vector<int>>& out) {
  if (k == 0) {
    out.push_back(acc);
    return;
  }
  int hi = acc.empty() ? top : acc.back() - 1;
  for (int j = hi; j >= k - 1; --j) {
    acc.push_back(j);
    decreasing_words(top, k - 1, acc, out);
    acc.pop_back();
  }
}

std::vector<std::vector<int>> all_decreasing_words(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  decreasing_words(n - 1, k, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

std::string to_string(const FormalSimplex& f) {
  if (f.word.empty()) return f.base;
  std::string out;
  for (int j : f.word) out += "s" + std::to_string(j) + " ";
  out += "| " + f.base;
  return out;
}

namespace {

// Base ids may themselves contain '|' (nerve chains, quotient classes), so a
// leading '|' only separates a degeneracy word when the prefix is lexically a
// word, i.e. whitespace-separated "s<k>" tokens.
bool is_degeneracy_word(const std::string& prefix) {
  std::istringstream in(prefix);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || tok[0] != 's') return false;
    for (size_t i = 1; i < tok.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
  }
  return true;
}

} // namespace

FormalSimplex parse_formal(const std::string& s, int dim_hint) {
  auto bar = s.find('|');
  FormalSimplex f;
  if (bar == std::string::npos || !is_degeneracy_word(s.substr(0, bar))) {
    f.base = s;
    // trim
    while (!f.base.empty() && f.base.front() == ' ') f.base.erase(f.base.begin());
    while (!f.base.empty() && f.base.back() == ' ') f.base.pop_back();
    f.base_dim = dim_hint;
    return f;
  }
  std::istringstream word_part(s.substr(0, bar));
  std::string tok;
  int prev = -1;
  while (word_part >> tok) {
    if (tok.size() < 2 || tok[0] != 's')
      fail("ParseError", "bad degeneracy token '" + tok + "' in '" + s + "'");
    int j = 0;
    try {
      j = std::stoi(tok.substr(1));
    } catch (...) {
      fail("ParseError", "bad degeneracy token '" + tok + "' in '" + s + "'");
    }
    if (prev >= 0 && j >= prev)
      fail("ParseError", "degeneracy word not strictly decreasing in '" + s + "'");
    prev = j;
    f.word.push_back(j);
  }
  f.base = s.substr(bar + 1);
  while (!f.base.empty() && f.base.front() == ' ') f.base.erase(f.base.begin());
  while (!f.base.empty() && f.base.back() == ' ') f.base.pop_back();
  if (f.base.empty()) fail("ParseError", "missing base simplex in '" + s + "'");
  f.base_dim = dim_hint - static_cast<int>(f.word.size());
  if (f.base_dim < 0)
    fail("ParseError", "degeneracy word too long for dimension in '" + s + "'");
  return f;
}

SSet::SSet(int dim_cap) : cap_(dim_cap) {
  if (dim_cap < 0) fail("CapExceeded", "dimension cap must be nonnegative");
  nd_.resize(dim_cap + 1);
}

void SSet::add_simplex(const std::string& id, int dim,
                       std::vector<FormalSimplex> faces) {
  if (dim < 0 || dim > cap_)
    fail("CapExceeded", "simplex '" + id + "' of dimension " +
                            std::to_string(dim) + " exceeds cap " +
                            std::to_string(cap_));
  if (dim_.count(id)) fail("ParseError", "duplicate simplex id '" + id + "'");
  if (dim == 0) {
    if (!faces.empty()) fail("IndexMismatch", "vertex '" + id + "' cannot have faces");
  } else {
    if (static_cast<int>(faces.size()) != dim + 1)
      fail("IndexMismatch", "simplex '" + id + "' of dimension " +
                                std::to_string(dim) + " needs " +
                                std::to_string(dim + 1) + " faces");
    for (const auto& f : faces) {
      if (f.dim() != dim - 1)
        fail("IndexMismatch", "face of '" + id + "' has wrong dimension");
      if (!has(f.base) || dim_of(f.base) != f.base_dim)
        fail("UnknownObject", "face of '" + id + "' references unknown simplex '" +
                                  f.base + "'");
    }
  }
  nd_[dim].push_back(id);
  dim_[id] = dim;
  faces_[id] = std::move(faces);
}

const std::vector<std::string>& SSet::nd(int n) const {
  static const std::vector<std::string> empty;
  if (n < 0 || n > cap_) return empty;
  return nd_[n];
}

int SSet::top_dim() const {
  for (int n = cap_; n >= 0; --n)
    if (!nd_[n].empty()) return n;
  return -1;
}

bool SSet::has(const std::string& id) const { return dim_.count(id) != 0; }

int SSet::dim_of(const std::string& id) const {
  auto it = dim_.find(id);
  if (it == dim_.end()) fail("UnknownObject", "unknown simplex '" + id + "'");
  return it->second;
}

const std::vector<FormalSimplex>& SSet::faces_of(const std::string& id) const {
  auto it = faces_.find(id);
  if (it == faces_.end()) fail("UnknownObject", "unknown simplex '" + id + "'");
  return it->second;
}

FormalSimplex SSet::formal(const std::string& id) const {
  return nd_formal(id, dim_of(id));
}

FormalSimplex SSet::degenerate(const FormalSimplex& x, int j) {
  if (j < 0 || j > x.dim())
    fail("IndexMismatch", "degeneracy index " + std::to_string(j) +
                              " out of range for dimension " +
                              std::to_string(x.dim()));
  FormalSimplex y = x;
  size_t idx = 0;
  int jj = j;
  // push s_jj inward past larger-or-equal letters: s_j s_i = s_{i+1} s_j (j<=i)
  while (idx < y.word.size() && jj <= y.word[idx]) {
    ++y.word[idx];
    ++idx;
  }
  y.word.insert(y.word.begin() + static_cast<long>(idx), jj);
  return y;
}

FormalSimplex SSet::apply_word(const FormalSimplex& x, const std::vector<int>& word) {
  FormalSimplex y = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) y = degenerate(y, *it);
  return y;
}

FormalSimplex SSet::face(const FormalSimplex& x, int i) const {
  int n = x.dim();
  if (n == 0) fail("IndexMismatch", "a vertex has no faces");
  if (i < 0 || i > n)
    fail("IndexMismatch", "face index " + std::to_string(i) +
                              " out of range for dimension " + std::to_string(n));
  std::vector<int> outer;
  int ii = i;
  for (size_t idx = 0; idx < x.word.size(); ++idx) {
    int j = x.word[idx];
    if (ii == j || ii == j + 1) {
      // d_i s_j = id
      FormalSimplex y;
      y.word = outer;
      y.word.insert(y.word.end(), x.word.begin() + static_cast<long>(idx) + 1,
                    x.word.end());
      y.base = x.base;
      y.base_dim = x.base_dim;
      return y;
    }
    if (ii < j) {
      outer.push_back(j - 1); // d_i s_j = s_{j-1} d_i
    } else {
      outer.push_back(j); // d_i s_j = s_j d_{i-1}
      --ii;
    }
  }
  if (x.base_dim == 0) fail("IndexMismatch", "a vertex has no faces");
  FormalSimplex y = faces_of(x.base).at(static_cast<size_t>(ii));
  for (auto it = outer.rbegin(); it != outer.rend(); ++it) y = degenerate(y, *it);
  return y;
}

std::vector<FormalSimplex> SSet::all_formal(int n) const {
  if (n < 0 || n > cap_)
    fail("CapExceeded", "dimension " + std::to_string(n) + " beyond cap " +
                            std::to_string(cap_));
  std::vector<FormalSimplex> out;
  for (int m = 0; m <= n; ++m) {
    auto words = all_decreasing_words(n, n - m);
    for (const auto& id : nd(m))
      for (const auto& w : words) out.push_back(FormalSimplex{w, id, m});
  }
  std::sort(out.begin(), out.end());
  return out;
}

void SSet::validate() const {
  for (int n = 1; n <= cap_; ++n) {
    for (const auto& id : nd(n)) {
      FormalSimplex x = nd_formal(id, n);
      if (n < 2) continue;
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (face(face(x, j), i) != face(face(x, i), j - 1))
            fail("IndexMismatch",
                 "simplicial identity d" + std::to_string(i) + " d" +
                     std::to_string(j) + " fails on '" + id + "'");
    }
  }
}

bool SSet::operator==(const SSet& other) const {
  return cap_ == other.cap_ && nd_ == other.nd_ && faces_ == other.faces_;
}

FormalSimplex SSetMap::apply(const FormalSimplex& x) const {
  auto it = assignment.find(x.base);
  if (it == assignment.end())
    fail("UnknownObject", "map not defined on simplex '" + x.base + "'");
  return SSet::apply_word(it->second, x.word);
}

void SSetMap::validate() const {
  if (!source || !target) fail("UnknownObject", "map endpoints missing");
  for (int n = 0; n <= source->dim_cap(); ++n) {
    for (const auto& id : source->nd(n)) {
      auto it = assignment.find(id);
      if (it == assignment.end())
        fail("UnknownObject", "map not defined on simplex '" + id + "'");
      const FormalSimplex& y = it->second;
      if (y.dim() != n)
        fail("IndexMismatch", "map does not preserve dimension at '" + id + "'");
      if (!target->has(y.base) || target->dim_of(y.base) != y.base_dim)
        fail("UnknownObject", "map image of '" + id + "' not in target");
      for (int i = 0; n >= 1 && i <= n; ++i)
        if (apply(source->face(source->formal(id), i)) !=
            target->face(y, i))
          fail("IndexMismatch",
               "map does not commute with d" + std::to_string(i) + " at '" + id + "'");
    }
  }
}

bool SSetMap::operator==(const SSetMap& o) const {
  return *source == *o.source && *target == *o.target && assignment == o.assignment;
}

SSetMap identity_map(const SSetPtr& k) {
  SSetMap f{k, k, {}};
  for (int n = 0; n <= k->dim_cap(); ++n)
    for (const auto& id : k->nd(n)) f.assignment[id] = nd_formal(id, n);
  return f;
}

SSetMap compose(const SSetMap& g, const SSetMap& f) {
  if (!(*f.target == *g.source))
    fail("SourceTargetMismatch", "composition endpoints do not match");
  SSetMap h{f.source, g.target, {}};
  for (const auto& [id, y] : f.assignment) h.assignment[id] = g.apply(y);
  return h;
}

/// ---- standard simplicial sets ---------------------------------------------

namespace {

std::string subset_id(const std::vector<int>& s) {
  std::vector<std::string> parts;
  for (int v : s) parts.push_back(std::to_string(v));
  return join(parts, ".");
}

std::vector<int> subset_of_id(const std::string& id) {
  std::vector<int> out;
  for (const auto& p : split(id, '.')) out.push_back(std::stoi(p));
  return out;
}

void subsets_of_size(int n, int k, std::vector<int>& acc,
                     std::vector<std::vector<int>>& out) {
  if (static_cast<int>(acc.size()) == k) {
    out.push_back(acc);
    return;
  }
  int lo = acc.empty() ? 0 : acc.back() + 1;
  for (int v = lo; v <= n; ++v) {
    acc.push_back(v);
    subsets_of_size(n, k, acc, out);
    acc.pop_back();
  }
}

SSetPtr delta_like(int n, int dim_cap, bool full) {
  auto k = std::make_shared<SSet>(dim_cap);
  int top = full ? n : n - 1;
  for (int m = 0; m <= std::min(top, dim_cap); ++m) {
    std::vector<std::vector<int>> subs;
    std::vector<int> acc;
    subsets_of_size(n, m + 1, acc, subs);
    for (const auto& s : subs) {
      std::vector<FormalSimplex> faces;
      for (int i = 0; i <= m && m > 0; ++i) {
        std::vector<int> t = s;
        t.erase(t.begin() + i);
        faces.push_back(nd_formal(subset_id(t), m - 1));
      }
      k->add_simplex(subset_id(s), m, std::move(faces));
    }
  }
  return k;
}

} // namespace

SSetPtr delta(int n, int dim_cap) { return delta_like(n, dim_cap, true); }

SSetPtr boundary_delta(int n, int dim_cap) { return delta_like(n, dim_cap, false); }

SSetMap boundary_inclusion(int n, int dim_cap) {
  auto b = boundary_delta(n, dim_cap);
  auto d = delta(n, dim_cap);
  SSetMap f{b, d, {}};
  for (int m = 0; m <= b->dim_cap(); ++m)
    for (const auto& id : b->nd(m)) f.assignment[id] = nd_formal(id, m);
  return f;
}

SSetPtr constant_sset(const std::vector<std::string>& verts, int dim_cap) {
  auto k = std::make_shared<SSet>(dim_cap);
  for (const auto& v : verts) k->add_simplex(v, 0);
  return k;
}

std::vector<std::string> level_zero(const SSet& k) { return k.nd(0); }

std::vector<int> delta_vertex_sequence(const FormalSimplex& t) {
  std::vector<int> seq = subset_of_id(t.base);
  for (auto it = t.word.rbegin(); it != t.word.rend(); ++it)
    seq.insert(seq.begin() + *it, seq[static_cast<size_t>(*it)]);
  return seq;
}

FormalSimplex delta_formal_from_vertices(const std::vector<int>& verts) {
  std::vector<int> base;
  std::vector<int> word;
  for (size_t i = 0; i < verts.size(); ++i) {
    if (i + 1 < verts.size() && verts[i + 1] == verts[i])
      word.push_back(static_cast<int>(i));
    if (base.empty() || base.back() != verts[i]) base.push_back(verts[i]);
  }
  std::sort(word.rbegin(), word.rend());
  return FormalSimplex{word, subset_id(base), static_cast<int>(base.size()) - 1};
}

FormalSimplex restrict_along(const SSet& k, const FormalSimplex& x,
                             const FormalSimplex& t) {
  std::vector<int> verts = delta_vertex_sequence(t);
  std::vector<int> image = verts;
  image.erase(std::unique(image.begin(), image.end()), image.end());
  // epi-mono factorization: faces along the complement, then degeneracies
  FormalSimplex y = x;
  std::set<int> hit(image.begin(), image.end());
  for (int c = x.dim(); c >= 0; --c)
    if (!hit.count(c)) y = k.face(y, c);
  std::vector<int> word;
  for (size_t i = 0; i + 1 < verts.size(); ++i)
    if (verts[i] == verts[i + 1]) word.push_back(static_cast<int>(i));
  std::sort(word.rbegin(), word.rend());
  return SSet::apply_word(y, word);
}

/// ---- levelwise construction ------------------------------------------------

LevelwiseResult build_from_levelwise(const LevelwiseData& data) {
  if (static_cast<int>(data.elems.size()) != data.cap + 1)
    fail("IndexMismatch", "levelwise data must list dimensions 0..cap");
  LevelwiseResult r;
  auto k = std::make_shared<SSet>(data.cap);
  for (int n = 0; n <= data.cap; ++n) {
    for (const auto& e : data.elems[static_cast<size_t>(n)]) {
      bool degenerate = false;
      for (int j = 0; j < n && !degenerate; ++j) {
        std::string below = data.face(n, e, j + 1);
        if (data.degeneracy(n - 1, below, j) == e) {
          r.normal[{n, e}] = SSet::degenerate(r.normal_of(n - 1, below), j);
          degenerate = true;
        }
      }
      if (degenerate) continue;
      std::vector<FormalSimplex> faces;
      for (int i = 0; i <= n && n > 0; ++i)
        faces.push_back(r.normal_of(n - 1, data.face(n, e, i)));
      k->add_simplex(e, n, std::move(faces));
      r.normal[{n, e}] = nd_formal(e, n);
    }
  }
  k->validate();
  r.sset = k;
  return r;
}

/// ---- coproduct ---------------------------------------------------------------

namespace {
FormalSimplex retag(const FormalSimplex& f, const std::string& tag) {
  return FormalSimplex{f.word, tag + ":" + f.base, f.base_dim};
}
} // namespace

CoproductSSet coproduct(const std::vector<SSetPtr>& parts,
                        std::vector<std::string> tags) {
  if (tags.empty())
    for (size_t i = 0; i < parts.size(); ++i) tags.push_back(std::to_string(i));
  if (tags.size() != parts.size())
    fail("IndexMismatch", "coproduct needs one tag per summand");
  int cap = parts.empty() ? 0 : parts[0]->dim_cap();
  for (const auto& p : parts)
    if (p->dim_cap() != cap)
      fail("CapExceeded", "coproduct summands must share a dimension cap");
  auto k = std::make_shared<SSet>(cap);
  for (int n = 0; n <= cap; ++n)
    for (size_t i = 0; i < parts.size(); ++i)
      for (const auto& id : parts[i]->nd(n)) {
        std::vector<FormalSimplex> faces;
        for (const auto& f : parts[i]->faces_of(id)) faces.push_back(retag(f, tags[i]));
        k->add_simplex(tags[i] + ":" + id, n, std::move(faces));
      }
  CoproductSSet out{k, {}, tags};
  for (size_t i = 0; i < parts.size(); ++i) {
    SSetMap inj{parts[i], k, {}};
    for (int n = 0; n <= cap; ++n)
      for (const auto& id : parts[i]->nd(n))
        inj.assignment[id] = nd_formal(tags[i] + ":" + id, n);
    out.injections.push_back(std::move(inj));
  }
  return out;
}

SSetMap coproduct_map(const CoproductSSet& cop, const std::vector<SSetMap>& legs) {
  if (legs.size() != cop.injections.size())
    fail("IndexMismatch", "coproduct map needs one leg per summand");
  SSetPtr tgt = legs.empty() ? nullptr : legs[0].target;
  SSetMap f{cop.sset, tgt, {}};
  for (size_t i = 0; i < legs.size(); ++i) {
    if (!(*legs[i].source == *cop.injections[i].source))
      fail("SourceTargetMismatch", "coproduct leg source mismatch");
    for (const auto& [id, y] : legs[i].assignment)
      f.assignment[cop.tags[i] + ":" + id] = y;
  }
  return f;
}

/// ---- product -------------------------------------------------------------------

namespace {
std::string pair_name(const FormalSimplex& a, const FormalSimplex& b) {
  return "(" + to_string(a) + ")x(" + to_string(b) + ")";
}
} // namespace

ProductSSet product(const SSetPtr& k, const SSetPtr& l) {
  if (k->dim_cap() != l->dim_cap())
    fail("CapExceeded", "product factors must share a dimension cap");
  int cap = k->dim_cap();
  ProductSSet p;
  p.left = k;
  p.right = l;
  auto pairs = std::make_shared<std::map<std::pair<int, std::string>,
                                         std::pair<FormalSimplex, FormalSimplex>>>();
  LevelwiseData data;
  data.cap = cap;
  data.elems.resize(static_cast<size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    for (const auto& a : k->all_formal(n))
      for (const auto& b : l->all_formal(n)) {
        std::string name = pair_name(a, b);
        data.elems[static_cast<size_t>(n)].push_back(name);
        (*pairs)[{n, name}] = {a, b};
      }
    std::sort(data.elems[static_cast<size_t>(n)].begin(),
              data.elems[static_cast<size_t>(n)].end());
  }
  data.face = [pairs, k, l](int n, const std::string& e, int i) {
    const auto& [a, b] = pairs->at({n, e});
    return pair_name(k->face(a, i), l->face(b, i));
  };
  data.degeneracy = [pairs](int n, const std::string& e, int j) {
    const auto& [a, b] = pairs->at({n, e});
    return pair_name(SSet::degenerate(a, j), SSet::degenerate(b, j));
  };
  p.level = build_from_levelwise(data);
  p.sset = p.level.sset;
  for (int n = 0; n <= cap; ++n)
    for (const auto& id : p.sset->nd(n)) p.components[id] = pairs->at({n, id});
  return p;
}

FormalSimplex ProductSSet::pair_formal(const FormalSimplex& fx,
                                       const FormalSimplex& fy) const {
  if (fx.dim() != fy.dim())
    fail("IndexMismatch", "product pair components must share a dimension");
  return level.normal_of(fx.dim(), pair_name(fx, fy));
}

SSetMap product_map(const ProductSSet& src, const ProductSSet& dst,
                    const SSetMap& f, const SSetMap& g) {
  SSetMap h{src.sset, dst.sset, {}};
  for (const auto& [id, comp] : src.components)
    h.assignment[id] = dst.pair_formal(f.apply(comp.first), g.apply(comp.second));
  return h;
}

SSetMap product_proj_left(const ProductSSet& p) {
  SSetMap h{p.sset, p.left, {}};
  for (const auto& [id, comp] : p.components) h.assignment[id] = comp.first;
  return h;
}

SSetMap product_proj_right(const ProductSSet& p) {
  SSetMap h{p.sset, p.right, {}};
  for (const auto& [id, comp] : p.components) h.assignment[id] = comp.second;
  return h;
}

/// ---- coequalizer -----------------------------------------------------------------

namespace {

struct UnionFind {
  std::map<std::string, std::string> parent;
  const std::string& find(const std::string& x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      return parent.find(x)->second;
    }
    if (it->second == x) return it->second;
    const std::string root = find(it->second);
    parent[x] = root;
    return parent.find(x)->second;
  }
  void unite(const std::string& a, const std::string& b) {
    std::string ra = find(a), rb = find(b);
    if (ra == rb) return;
    // keep the lexicographically least member as representative
    if (rb < ra) std::swap(ra, rb);
    parent[rb] = ra;
  }
};

} // namespace

FormalSimplex Coequalizer::map_down(const FormalSimplex& x) const {
  return projection.apply(x);
}

Coequalizer coequalizer(const SSetMap& f, const SSetMap& g) {
  if (!(*f.source == *g.source) || !(*f.target == *g.target))
    fail("SourceTargetMismatch", "coequalizer needs a parallel pair");
  const SSetPtr a = f.source;
  const SSetPtr b = f.target;
  int cap = b->dim_cap();

  auto uf = std::make_shared<std::vector<UnionFind>>(static_cast<size_t>(cap) + 1);
  auto decode = std::make_shared<std::vector<std::map<std::string, FormalSimplex>>>(
      static_cast<size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    for (const auto& x : b->all_formal(n)) {
      std::string e = to_string(x);
      (*uf)[static_cast<size_t>(n)].find(e);
      (*decode)[static_cast<size_t>(n)][e] = x;
    }
    for (const auto& x : a->all_formal(n))
      (*uf)[static_cast<size_t>(n)].unite(to_string(f.apply(x)),
                                          to_string(g.apply(x)));
  }

  auto cls = [uf](int n, const std::string& e) {
    return "[" + (*uf)[static_cast<size_t>(n)].find(e) + "]";
  };

  LevelwiseData data;
  data.cap = cap;
  data.elems.resize(static_cast<size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    std::set<std::string> classes;
    for (const auto& [e, x] : (*decode)[static_cast<size_t>(n)]) classes.insert(cls(n, e));
    data.elems[static_cast<size_t>(n)].assign(classes.begin(), classes.end());
  }
  auto rep_formal = [decode](int n, const std::string& name) {
    return (*decode)[static_cast<size_t>(n)].at(name.substr(1, name.size() - 2));
  };
  data.face = [b, cls, rep_formal](int n, const std::string& e, int i) {
    return cls(n - 1, to_string(b->face(rep_formal(n, e), i)));
  };
  data.degeneracy = [cls, rep_formal](int n, const std::string& e, int j) {
    return cls(n + 1, to_string(SSet::degenerate(rep_formal(n, e), j)));
  };

  Coequalizer q;
  q.domain = b;
  LevelwiseResult level = build_from_levelwise(data);
  q.sset = level.sset;
  q.projection = SSetMap{b, q.sset, {}};
  for (int n = 0; n <= cap; ++n)
    for (const auto& id : b->nd(n))
      q.projection.assignment[id] = level.normal_of(n, cls(n, id));
  for (int n = 0; n <= cap; ++n)
    for (const auto& id : q.sset->nd(n)) q.rep[id] = rep_formal(n, id);
  for (int n = 0; n <= cap; ++n)
    for (const auto& [e, x] : (*decode)[static_cast<size_t>(n)])
      q.down[{n, e}] = level.normal_of(n, cls(n, e));
  return q;
}

SSetMap induced_map(const Coequalizer& q, const SSetMap& h) {
  if (!(*h.source == *q.domain))
    fail("SourceTargetMismatch", "induced map needs a map out of the quotient domain");
  SSetMap f{q.sset, h.target, {}};
  for (const auto& [id, rep] : q.rep) f.assignment[id] = h.apply(rep);
  f.validate();
  return f;
}

Pushout pushout(const SSetMap& f, const SSetMap& g) {
  if (!(*f.source == *g.source))
    fail("SourceTargetMismatch", "pushout needs a span");
  Pushout p;
  p.cop = coproduct({f.target, g.target}, {"l", "r"});
  SSetMap lf = compose(p.cop.injections[0], f);
  SSetMap rg = compose(p.cop.injections[1], g);
  p.coeq = coequalizer(lf, rg);
  p.sset = p.coeq.sset;
  p.leg_left = compose(p.coeq.projection, p.cop.injections[0]);
  p.leg_right = compose(p.coeq.projection, p.cop.injections[1]);
  return p;
}

/// ---- nerve -------------------------------------------------------------------------

namespace {

std::string encode_chain(const Chain& c) {
  std::string out = c.obj0;
  for (const auto& m : c.mors) out += "|" + m;
  return out;
}

Chain decode_chain(const std::string& e) {
  auto parts = split(e, '|');
  Chain c;
  c.obj0 = parts[0];
  c.mors.assign(parts.begin() + 1, parts.end());
  return c;
}

std::string chain_object_at(const FinCat& cat, const Chain& c, int j) {
  return j == 0 ? c.obj0 : cat.tgt(c.mors[static_cast<size_t>(j) - 1]);
}

} // namespace

FormalSimplex NerveSSet::chain_formal(const Chain& c) const {
  return level.normal_of(static_cast<int>(c.mors.size()), encode_chain(c));
}

Chain NerveSSet::chain_of(const FormalSimplex& f) const {
  Chain c = decode_chain(f.base);
  for (auto it = f.word.rbegin(); it != f.word.rend(); ++it) {
    std::string obj = chain_object_at(*cat, c, *it);
    c.mors.insert(c.mors.begin() + *it, cat->identity(obj));
  }
  return c;
}

NerveSSet nerve(const CatPtr& c, int cap, int default_cap) {
  if (cap < 0) {
    if (!is_loop_free(*c))
      fail("TruncationRequired",
           "nerve of a category with loops needs an explicit dimension cap");
    cap = default_cap;
  }
  LevelwiseData data;
  data.cap = cap;
  data.elems.resize(static_cast<size_t>(cap) + 1);
  std::vector<Chain> level_chains;
  for (const auto& o : c->objects) level_chains.push_back(Chain{o, {}});
  for (int n = 0; n <= cap; ++n) {
    for (const auto& ch : level_chains)
      data.elems[static_cast<size_t>(n)].push_back(encode_chain(ch));
    std::sort(data.elems[static_cast<size_t>(n)].begin(),
              data.elems[static_cast<size_t>(n)].end());
    if (n == cap) break;
    std::vector<Chain> next;
    for (const auto& ch : level_chains) {
      std::string end = chain_object_at(*c, ch, n);
      for (const auto& m : c->morphisms)
        if (m.src == end) {
          Chain ext = ch;
          ext.mors.push_back(m.id);
          next.push_back(std::move(ext));
        }
    }
    level_chains = std::move(next);
  }
  data.face = [c](int n, const std::string& e, int i) {
    Chain ch = decode_chain(e);
    if (i == 0) {
      ch.obj0 = c->tgt(ch.mors[0]);
      ch.mors.erase(ch.mors.begin());
    } else if (i == n) {
      ch.mors.pop_back();
    } else {
      ch.mors[static_cast<size_t>(i)] =
          c->compose(ch.mors[static_cast<size_t>(i)], ch.mors[static_cast<size_t>(i) - 1]);
      ch.mors.erase(ch.mors.begin() + i - 1);
    }
    return encode_chain(ch);
  };
  data.degeneracy = [c](int n, const std::string& e, int j) {
    Chain ch = decode_chain(e);
    (void)n;
    std::string obj = chain_object_at(*c, ch, j);
    ch.mors.insert(ch.mors.begin() + j, c->identity(obj));
    return encode_chain(ch);
  };
  NerveSSet ns;
  ns.cat = c;
  ns.level = build_from_levelwise(data);
  ns.sset = ns.level.sset;
  return ns;
}

SSetMap nerve_of_functor(const CatFunctor& f, const NerveSSet& ns, const NerveSSet& nt) {
  SSetMap h{ns.sset, nt.sset, {}};
  for (int n = 0; n <= ns.sset->dim_cap(); ++n)
    for (const auto& id : ns.sset->nd(n)) {
      Chain c = decode_chain(id);
      Chain img{f.obj(c.obj0), {}};
      for (const auto& m : c.mors) img.mors.push_back(f.morph(m));
      h.assignment[id] = nt.chain_formal(img);
    }
  return h;
}

NatTransHomotopy homotopy_from_nat_trans(const CatNatTrans& nu, const NerveSSet& na,
                                         const NerveSSet& nb) {
  const CatFunctor& f = nu.source;
  const CatFunctor& g = nu.target;
  const FinCat& bcat = *f.target;
  int cap = na.sset->dim_cap();
  NatTransHomotopy out{product(delta(1, cap), na.sset), {}, {}, {}};
  out.h = SSetMap{out.cylinder.sset, nb.sset, {}};
  for (const auto& [id, comp] : out.cylinder.components) {
    const FormalSimplex& t = comp.first;
    const FormalSimplex& x = comp.second;
    std::vector<int> verts = delta_vertex_sequence(t);
    Chain a = na.chain_of(x);
    Chain img;
    img.obj0 = verts[0] == 0 ? f.obj(a.obj0) : g.obj(a.obj0);
    for (size_t i = 0; i < a.mors.size(); ++i) {
      const std::string& m = a.mors[i];
      if (verts[i + 1] == 0) {
        img.mors.push_back(f.morph(m));
      } else if (verts[i] == 1) {
        img.mors.push_back(g.morph(m));
      } else {
        // the arrow crossing 0 -> 1: F(a_i) -> G(a_{i+1})
        const std::string& src_obj = chain_object_at(*na.cat, a, static_cast<int>(i));
        img.mors.push_back(bcat.compose(g.morph(m), nu.components.at(src_obj)));
      }
    }
    out.h.assignment[id] = nb.chain_formal(img);
  }
  auto end_at = [&](int v) {
    SSetMap e{na.sset, out.cylinder.sset, {}};
    for (int n = 0; n <= cap; ++n)
      for (const auto& id : na.sset->nd(n)) {
        FormalSimplex t = delta_formal_from_vertices(std::vector<int>(n + 1, v));
        e.assignment[id] = out.cylinder.pair_formal(t, na.sset->formal(id));
      }
    return e;
  };
  out.end0 = end_at(0);
  out.end1 = end_at(1);
  return out;
}

/// ---- skeleta --------------------------------------------------------------------------

Skeleton skeleton(const SSetPtr& k, int n) {
  auto s = std::make_shared<SSet>(k->dim_cap());
  for (int m = 0; m <= std::min(n, k->dim_cap()); ++m)
    for (const auto& id : k->nd(m)) s->add_simplex(id, m, k->faces_of(id));
  Skeleton out{s, SSetMap{s, k, {}}};
  for (int m = 0; m <= std::min(n, k->dim_cap()); ++m)
    for (const auto& id : k->nd(m)) out.inclusion.assignment[id] = nd_formal(id, m);
  return out;
}

bool skeleton_pushout_check(const SSetPtr& k, int n, long budget) {
  (void)budget;
  if (n < 0 || n > k->dim_cap())
    fail("CapExceeded", "skeleton level out of range");
  Skeleton lower = skeleton(k, n - 1);
  Skeleton upper = skeleton(k, n);

  const auto& cells = k->nd(n);
  if (cells.empty()) return *lower.sset == *upper.sset;
  std::vector<SSetPtr> boundaries(cells.size());
  std::vector<SSetPtr> disks(cells.size());
  std::vector<std::string> tags;
  for (size_t i = 0; i < cells.size(); ++i) {
    boundaries[i] = boundary_delta(n, k->dim_cap());
    disks[i] = delta(n, k->dim_cap());
    tags.push_back(cells[i]);
  }
  CoproductSSet cop_b = coproduct(boundaries, tags);
  CoproductSSet cop_d = coproduct(disks, tags);

  // characteristic map of cell x restricted to a simplex of Delta^n
  auto characteristic = [&](const std::string& cell, const std::string& subset_simplex,
                            int m) {
    return restrict_along(*k, k->formal(cell),
                          nd_formal(subset_simplex, m));
  };

  std::vector<SSetMap> attach_legs, include_legs, disk_legs;
  for (size_t i = 0; i < cells.size(); ++i) {
    SSetMap attach{boundaries[i], lower.sset, {}};
    for (int m = 0; m < n; ++m)
      for (const auto& id : boundaries[i]->nd(m))
        attach.assignment[id] = characteristic(cells[i], id, m);
    attach_legs.push_back(std::move(attach));
    include_legs.push_back(compose(cop_d.injections[i], boundary_inclusion(n, k->dim_cap())));
    SSetMap disk{disks[i], upper.sset, {}};
    for (int m = 0; m <= std::min(n, k->dim_cap()); ++m)
      for (const auto& id : disks[i]->nd(m))
        disk.assignment[id] = characteristic(cells[i], id, m);
    disk_legs.push_back(std::move(disk));
  }

  SSetMap a = coproduct_map(cop_b, attach_legs);
  a.target = lower.sset;
  SSetMap inc = coproduct_map(cop_b, include_legs);
  inc.target = cop_d.sset;
  // reassemble as a pushout of lower <- boundaries -> disks
  Pushout p = pushout(a, inc);

  // canonical comparison into sk_n, induced by inclusion and characteristic maps
  SSetMap disk_total = coproduct_map(cop_d, disk_legs);
  disk_total.target = upper.sset;
  SSetMap lower_in{lower.sset, upper.sset, {}};
  for (int m = 0; m < n && m <= k->dim_cap(); ++m)
    for (const auto& id : lower.sset->nd(m)) lower_in.assignment[id] = nd_formal(id, m);
  SSetMap h = coproduct_map(p.cop, {lower_in, disk_total});
  h.target = upper.sset;
  SSetMap cmp = induced_map(p.coeq, h);
  return invert_map(cmp).has_value();
}

/// ---- search ---------------------------------------------------------------------------

namespace {

struct Searcher {
  const SSet& k;
  const SSet& l;
  long budget;
  std::vector<std::pair<int, std::string>> order; // (dim, id) ascending
  std::map<std::string, FormalSimplex> partial;

  explicit Searcher(const SSet& k_, const SSet& l_, long b) : k(k_), l(l_), budget(b) {
    for (int n = 0; n <= k.dim_cap(); ++n) {
      std::vector<std::string> ids = k.nd(n);
      std::sort(ids.begin(), ids.end());
      for (const auto& id : ids) order.emplace_back(n, id);
    }
  }

  void spend() {
    if (--budget < 0) fail("SearchBudgetExceeded", "simplicial map search budget exhausted");
  }

  bool faces_ok(int n, const std::string& id, const FormalSimplex& cand) {
    for (int i = 0; i <= n && n >= 1; ++i) {
      FormalSimplex fx = k.face(k.formal(id), i);
      auto it = partial.find(fx.base);
      if (it == partial.end()) return false;
      if (SSet::apply_word(it->second, fx.word) != l.face(cand, i)) return false;
    }
    return true;
  }
};

} // namespace

std::vector<SSetMap> enumerate_maps(const SSetPtr& k, const SSetPtr& l, long budget) {
  Searcher s(*k, *l, budget);
  std::vector<SSetMap> out;
  std::vector<std::vector<FormalSimplex>> cands(static_cast<size_t>(k->dim_cap()) + 1);
  for (int n = 0; n <= k->dim_cap(); ++n)
    if (!k->nd(n).empty()) cands[static_cast<size_t>(n)] = l->all_formal(n);

  std::function<void(size_t)> go = [&](size_t pos) {
    if (pos == s.order.size()) {
      out.push_back(SSetMap{k, l, s.partial});
      return;
    }
    auto [n, id] = s.order[pos];
    for (const auto& cand : cands[static_cast<size_t>(n)]) {
      s.spend();
      if (!s.faces_ok(n, id, cand)) continue;
      s.partial[id] = cand;
      go(pos + 1);
      s.partial.erase(id);
    }
  };
  go(0);
  return out;
}

std::optional<SSetMap> invert_map(const SSetMap& f) {
  SSetMap inv{f.target, f.source, {}};
  for (int n = 0; n <= f.source->dim_cap(); ++n) {
    std::set<std::string> hit;
    for (const auto& id : f.source->nd(n)) {
      const FormalSimplex& y = f.assignment.at(id);
      if (!y.nondegenerate()) return std::nullopt;
      if (!hit.insert(y.base).second) return std::nullopt;
      inv.assignment[y.base] = nd_formal(id, n);
    }
    if (hit.size() != f.target->nd(n).size()) return std::nullopt;
  }
  return inv;
}

std::optional<IsoWitness> iso_check(const SSetPtr& k, const SSetPtr& l, long budget) {
  if (k->dim_cap() != l->dim_cap()) return std::nullopt;
  for (int n = 0; n <= k->dim_cap(); ++n)
    if (k->nd(n).size() != l->nd(n).size()) return std::nullopt;

  Searcher s(*k, *l, budget);
  std::set<std::string> used;

  std::function<bool(size_t)> go = [&](size_t pos) {
    if (pos == s.order.size()) return true;
    auto [n, id] = s.order[pos];
    for (const auto& cand_id : l->nd(n)) {
      if (used.count(cand_id)) continue;
      s.spend();
      FormalSimplex cand = nd_formal(cand_id, n);
      if (!s.faces_ok(n, id, cand)) continue;
      s.partial[id] = cand;
      used.insert(cand_id);
      if (go(pos + 1)) return true;
      s.partial.erase(id);
      used.erase(cand_id);
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  SSetMap fwd{k, l, s.partial};
  auto back = invert_map(fwd);
  if (!back) return std::nullopt;
  return IsoWitness{fwd, *back};
}

} // namespace cathom
