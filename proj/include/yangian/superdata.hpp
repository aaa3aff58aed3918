#pragma once

#include <stdexcept>
#include <vector>

namespace yangian {

/// Block sizes of gl(m|n). Standing assumption: m, n >= 2 and m != n.
struct SuperSize {
  int m = 2, n = 3;

  SuperSize() = default;
  SuperSize(int m_, int n_) : m(m_), n(n_) {
    if (m < 2 || n < 2) throw std::invalid_argument("SuperSize: need m, n >= 2");
    if (m == n) throw std::invalid_argument("SuperSize: need m != n");
  }
  int mn() const { return m + n; }

  /// Index parity p : {1..m+n} -> {0,1}; p = 0 on the first m indices.
  int p(int i) const {
    if (i < 1 || i > mn()) throw std::out_of_range("parity index out of range");
    return i <= m ? 0 : 1;
  }
  int sgn_p(int i) const { return p(i) == 0 ? 1 : -1; }

  /// Node parity on I = Z/(m+n)Z: pbar(i) = p(i) for 1 <= i <= m+n-1 and
  /// pbar(0) = p(m+n). The wrap at node 0 is a derived convention; the paper
  /// declares x_0^± odd, which this reproduces.
  int pbar(int node) const {
    int i = mod_node(node);
    return i == 0 ? p(mn()) : p(i);
  }
  int sgn_pbar(int node) const { return pbar(node) == 0 ? 1 : -1; }

  int mod_node(int i) const {
    int k = mn();
    int r = i % k;
    return r < 0 ? r + k : r;
  }
};

/// Parity of the Chevalley generators x_i^± at node i: odd iff i in {0, m}.
inline int node_parity(const SuperSize& sz, int node) {
  int i = sz.mod_node(node);
  return (i == 0 || i == sz.m) ? 1 : 0;
}

/// Affine symmetric Cartan matrix a_{i,j} on nodes 0..m+n-1, with the
/// corner entries a_{0,m+n-1} = a_{m+n-1,0} = 1.
inline int cartan_affine(const SuperSize& sz, int i, int j) {
  int k = sz.mn();
  if (i < 0 || i >= k || j < 0 || j >= k) throw std::out_of_range("cartan_affine: node out of range");
  auto pb = [&](int x) { return sz.pbar(x); };
  auto sg = [&](int x) { return pb(x) == 0 ? 1 : -1; };
  if (i == j) return sg(i) + sg(sz.mod_node(i + 1));
  if (j == i + 1) return -sg(sz.mod_node(i + 1));
  if (j == i - 1) return -sg(i);
  if ((i == 0 && j == k - 1) || (i == k - 1 && j == 0)) return 1;
  return 0;
}

/// Finite Cartan matrix of sl(m|n) on nodes 1..m+n-1.
inline int cartan_finite(const SuperSize& sz, int i, int j) {
  int k = sz.mn();
  if (i < 1 || i >= k || j < 1 || j >= k) throw std::out_of_range("cartan_finite: node out of range");
  return cartan_affine(sz, i, j);
}

/// The b-matrix of the Yangian defining relations.
inline int b_coeff(const SuperSize& sz, int i, int j) {
  int k = sz.mn();
  if (i < 0 || i >= k || j < 0 || j >= k) throw std::out_of_range("b_coeff: node out of range");
  auto sg = [&](int x) { return sz.pbar(x) == 0 ? 1 : -1; };
  if (i == j + 1) return -sg(sz.mod_node(i + 1));
  if (i == j - 1) return sg(i);
  if (i == 0 && j == k - 1) return -1;
  if (i == k - 1 && j == 0) return 1;
  return 0;
}

}  // namespace yangian
