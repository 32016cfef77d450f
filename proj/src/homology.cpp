#include "cathom/homology.hpp"

#include <algorithm>

namespace cathom {

Matrix identity_matrix(size_t n) {
  Matrix m(n, std::vector<mpz_class>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix matrix_multiply(const Matrix& a, const Matrix& b) {
  size_t r = a.size();
  size_t mid = r ? a[0].size() : 0;
  size_t c = b.empty() ? 0 : b[0].size();
  if (mid != b.size()) fail("IndexMismatch", "matrix shapes do not compose");
  Matrix out(r, std::vector<mpz_class>(c, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t k = 0; k < mid; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < c; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

namespace {

void swap_rows(Matrix& m, size_t a, size_t b) {
  if (a != b) std::swap(m[a], m[b]);
}
void swap_cols(Matrix& m, size_t a, size_t b) {
  if (a == b) return;
  for (auto& row : m) std::swap(row[a], row[b]);
}
// row a -= q * row b
void row_sub(Matrix& m, size_t a, const mpz_class& q, size_t b) {
  for (size_t j = 0; j < m[a].size(); ++j) m[a][j] -= q * m[b][j];
}
// col a -= q * col b
void col_sub(Matrix& m, size_t a, const mpz_class& q, size_t b) {
  for (auto& row : m) row[a] -= q * row[b];
}

} // namespace

SmithResult smith_normal_form(const Matrix& m) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  SmithResult r{m, identity_matrix(rows), identity_matrix(cols)};
  if (rows == 0 || cols == 0) return r;
  Matrix& d = r.d;

  size_t t = 0;
  while (t < rows && t < cols) {
    // locate a nonzero entry of minimal absolute value in the submatrix
    size_t pi = t, pj = t;
    mpz_class best = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (d[i][j] != 0 && (best == 0 || abs(d[i][j]) < best)) {
          best = abs(d[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    swap_rows(d, t, pi);
    swap_rows(r.u, t, pi);
    swap_cols(d, t, pj);
    swap_cols(r.v, t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (d[i][t] == 0) continue;
        mpz_class q = d[i][t] / d[t][t];
        row_sub(d, i, q, t);
        row_sub(r.u, i, q, t);
        if (d[i][t] != 0) { // remainder becomes the new, smaller pivot
          swap_rows(d, t, i);
          swap_rows(r.u, t, i);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (d[t][j] == 0) continue;
        mpz_class q = d[t][j] / d[t][t];
        col_sub(d, j, q, t);
        col_sub(r.v, j, q, t);
        if (d[t][j] != 0) {
          swap_cols(d, t, j);
          swap_cols(r.v, t, j);
          clean = false;
        }
      }
      if (clean) {
        // enforce divisibility of the remaining block by the pivot
        for (size_t i = t + 1; i < rows && clean; ++i)
          for (size_t j = t + 1; j < cols && clean; ++j)
            if (d[i][j] % d[t][t] != 0) {
              row_sub(d, t, -1, i); // add row i to row t, then restart
              row_sub(r.u, t, -1, i);
              clean = false;
            }
      }
    }
    if (d[t][t] < 0) {
      for (size_t j = 0; j < cols; ++j) d[t][j] = -d[t][j];
      for (size_t j = 0; j < rows; ++j) r.u[t][j] = -r.u[t][j];
    }
    ++t;
  }
  if (matrix_multiply(matrix_multiply(r.u, m), r.v) != d)
    fail("IndexMismatch", "Smith normal form transform verification failed");
  return r;
}

void ChainComplex::validate() const {
  if (basis.size() != boundary.size())
    fail("IndexMismatch", "chain complex needs one boundary per degree");
  for (size_t n = 0; n < basis.size(); ++n) {
    size_t rows = n == 0 ? 0 : basis[n - 1].size();
    if (boundary[n].size() != rows)
      fail("IndexMismatch", "boundary row count at degree " + std::to_string(n));
    for (const auto& row : boundary[n])
      if (row.size() != basis[n].size())
        fail("IndexMismatch", "boundary column count at degree " + std::to_string(n));
  }
  for (size_t n = 2; n < basis.size(); ++n) {
    Matrix z = matrix_multiply(boundary[n - 1], boundary[n]);
    for (const auto& row : z)
      for (const auto& e : row)
        if (e != 0)
          fail("IndexMismatch", "d∘d nonzero at degree " + std::to_string(n));
  }
}

ChainComplex normalized_chain_complex(const SSet& k, int up_to) {
  if (up_to > k.dim_cap())
    fail("CapExceeded", "chain complex degree beyond the dimension cap");
  ChainComplex c;
  c.basis.resize(static_cast<size_t>(up_to) + 1);
  c.boundary.resize(static_cast<size_t>(up_to) + 1);
  std::vector<std::map<std::string, size_t>> index(static_cast<size_t>(up_to) + 1);
  for (int n = 0; n <= up_to; ++n) {
    c.basis[static_cast<size_t>(n)] = k.nd(n);
    for (size_t i = 0; i < c.basis[static_cast<size_t>(n)].size(); ++i)
      index[static_cast<size_t>(n)][c.basis[static_cast<size_t>(n)][i]] = i;
  }
  for (int n = 1; n <= up_to; ++n) {
    Matrix m(c.basis[static_cast<size_t>(n) - 1].size(),
             std::vector<mpz_class>(c.basis[static_cast<size_t>(n)].size(), 0));
    for (size_t j = 0; j < c.basis[static_cast<size_t>(n)].size(); ++j) {
      const auto& faces = k.faces_of(c.basis[static_cast<size_t>(n)][j]);
      for (int i = 0; i <= n; ++i) {
        const FormalSimplex& f = faces[static_cast<size_t>(i)];
        if (!f.nondegenerate()) continue;
        m[index[static_cast<size_t>(n) - 1].at(f.base)][j] += (i % 2 == 0) ? 1 : -1;
      }
    }
    c.boundary[static_cast<size_t>(n)] = std::move(m);
  }
  c.validate();
  return c;
}

std::string to_string(const HomologyGroup& h) {
  std::string out = "H_" + std::to_string(h.degree) + " = ";
  std::vector<std::string> parts;
  if (h.betti == 1) parts.push_back("Z");
  else if (h.betti > 1) parts.push_back("Z^" + std::to_string(h.betti));
  for (const auto& t : h.torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return out + "0";
  std::string body;
  for (size_t i = 0; i < parts.size(); ++i) body += (i ? " + " : "") + parts[i];
  return out + body;
}

std::vector<HomologyGroup> homology(const ChainComplex& c, int up_to) {
  std::vector<long> rank(c.basis.size() + 1, 0);
  std::vector<std::vector<mpz_class>> factors(c.basis.size() + 1);
  for (size_t n = 1; n < c.basis.size(); ++n) {
    SmithResult s = smith_normal_form(c.boundary[n]);
    for (size_t i = 0; i < s.d.size() && i < (s.d.empty() ? 0 : s.d[0].size()); ++i)
      if (s.d[i][i] != 0) {
        ++rank[n];
        if (s.d[i][i] > 1) factors[n].push_back(s.d[i][i]);
      }
  }
  std::vector<HomologyGroup> out;
  for (int n = 0; n <= up_to; ++n) {
    HomologyGroup h;
    h.degree = n;
    if (n <= c.top()) {
      long dim = static_cast<long>(c.basis[static_cast<size_t>(n)].size());
      h.betti = dim - rank[static_cast<size_t>(n)] - rank[static_cast<size_t>(n) + 1];
      if (static_cast<size_t>(n) + 1 < factors.size())
        h.torsion = factors[static_cast<size_t>(n) + 1];
    }
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<HomologyGroup> homology(const SSet& k, int up_to) {
  if (up_to + 1 > k.dim_cap())
    fail("CapExceeded",
         "homology in degree " + std::to_string(up_to) +
             " needs simplices one dimension higher than the cap provides");
  return homology(normalized_chain_complex(k, up_to + 1), up_to);
}

std::vector<Matrix> chain_map(const SSetMap& f, int up_to) {
  std::vector<Matrix> out(static_cast<size_t>(up_to) + 1);
  for (int n = 0; n <= up_to; ++n) {
    const auto& src = f.source->nd(n);
    const auto& tgt = f.target->nd(n);
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < tgt.size(); ++i) index[tgt[i]] = i;
    Matrix m(tgt.size(), std::vector<mpz_class>(src.size(), 0));
    for (size_t j = 0; j < src.size(); ++j) {
      const FormalSimplex& y = f.assignment.at(src[j]);
      if (y.nondegenerate()) m[index.at(y.base)][j] = 1;
    }
    out[static_cast<size_t>(n)] = std::move(m);
  }
  return out;
}

ChainComplex mapping_cone(const SSetMap& f, int up_to) {
  ChainComplex k = normalized_chain_complex(*f.source, std::max(0, up_to - 1));
  ChainComplex l = normalized_chain_complex(*f.target, up_to);
  std::vector<Matrix> fm = chain_map(f, up_to - 1 >= 0 ? up_to - 1 : 0);

  ChainComplex cone;
  cone.basis.resize(static_cast<size_t>(up_to) + 1);
  cone.boundary.resize(static_cast<size_t>(up_to) + 1);
  auto kdim = [&](int n) {
    return (n >= 0 && n <= k.top()) ? k.basis[static_cast<size_t>(n)].size() : 0;
  };
  auto ldim = [&](int n) {
    return (n >= 0 && n <= l.top()) ? l.basis[static_cast<size_t>(n)].size() : 0;
  };
  for (int n = 0; n <= up_to; ++n) {
    auto& b = cone.basis[static_cast<size_t>(n)];
    for (size_t i = 0; i < kdim(n - 1); ++i)
      b.push_back("K:" + k.basis[static_cast<size_t>(n) - 1][i]);
    for (size_t i = 0; i < ldim(n); ++i)
      b.push_back("L:" + l.basis[static_cast<size_t>(n)][i]);
  }
  for (int n = 1; n <= up_to; ++n) {
    size_t rows = kdim(n - 2) + ldim(n - 1);
    size_t cols = kdim(n - 1) + ldim(n);
    Matrix m(rows, std::vector<mpz_class>(cols, 0));
    // K block: -d_K, shifted one degree down, plus the chain map into L
    for (size_t j = 0; j < kdim(n - 1); ++j) {
      if (n - 1 >= 1)
        for (size_t i = 0; i < kdim(n - 2); ++i)
          m[i][j] = -k.boundary[static_cast<size_t>(n) - 1][i][j];
      for (size_t i = 0; i < ldim(n - 1); ++i)
        m[kdim(n - 2) + i][j] = fm[static_cast<size_t>(n) - 1][i][j];
    }
    // L block: d_L
    for (size_t j = 0; j < ldim(n); ++j)
      for (size_t i = 0; i < ldim(n - 1); ++i)
        m[kdim(n - 2) + i][kdim(n - 1) + j] = l.boundary[static_cast<size_t>(n)][i][j];
    cone.boundary[static_cast<size_t>(n)] = std::move(m);
  }
  cone.validate();
  return cone;
}

std::map<std::string, std::string> pi0(const SSet& k) {
  std::map<std::string, std::string> parent;
  for (const auto& v : k.nd(0)) parent[v] = v;
  std::function<std::string(const std::string&)> find = [&](const std::string& x) {
    if (parent.at(x) == x) return x;
    parent[x] = find(parent.at(x));
    return parent.at(x);
  };
  for (const auto& e : k.nd(1)) {
    std::string a = find(k.faces_of(e)[0].base);
    std::string b = find(k.faces_of(e)[1].base);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
  std::map<std::string, std::string> out;
  for (const auto& v : k.nd(0)) out[v] = find(v);
  return out;
}

bool pi0_bijective(const SSetMap& f) {
  auto src = pi0(*f.source);
  auto tgt = pi0(*f.target);
  std::map<std::string, std::string> induced;
  std::set<std::string> image;
  for (const auto& [v, rep] : src) {
    std::string img = tgt.at(f.assignment.at(v).base);
    auto it = induced.find(rep);
    if (it == induced.end()) {
      induced[rep] = img;
      image.insert(img);
    } else if (it->second != img) {
      return false; // cannot happen for a simplicial map; defensive
    }
  }
  std::set<std::string> src_classes, tgt_classes;
  for (const auto& [v, rep] : src) src_classes.insert(rep);
  for (const auto& [v, rep] : tgt) tgt_classes.insert(rep);
  return image.size() == src_classes.size() && image == tgt_classes;
}

bool is_homology_equivalence(const SSetMap& f, int up_to) {
  if (!pi0_bijective(f)) return false;
  auto hk = homology(*f.source, up_to);
  auto hl = homology(*f.target, up_to);
  for (int n = 0; n <= up_to; ++n)
    if (!(hk[static_cast<size_t>(n)].betti == hl[static_cast<size_t>(n)].betti &&
          hk[static_cast<size_t>(n)].torsion == hl[static_cast<size_t>(n)].torsion))
      return false;
  ChainComplex cone = mapping_cone(f, up_to + 1);
  auto hc = homology(cone, up_to);
  for (const auto& h : hc)
    if (!h.is_trivial()) return false;
  return true;
}

} // namespace cathom
