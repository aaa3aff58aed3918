#pragma once

#include <stdexcept>
#include <vector>

#include "yangian/loop.hpp"

namespace yangian {

/// Root of the affine superalgebra in matrix-unit coordinates:
/// real eps_a - eps_b + s*delta (a != b) or imaginary s*delta.
struct AffineRoot {
  bool imaginary = false;
  int a = 0, b = 0;  // real roots only
  int s = 0;

  static AffineRoot real(int a, int b, int s) { return AffineRoot{false, a, b, s}; }
  static AffineRoot imag(int s) { return AffineRoot{true, 0, 0, s}; }
  static AffineRoot simple(const SuperSize& sz, int i) {
    int k = sz.mn();
    if (i == 0) return real(k, 1, 1);  // alpha_0 = delta - (eps_1 - eps_k)
    return real(i, i + 1, 0);
  }

  bool positive() const { return imaginary ? s > 0 : (s > 0 || (s == 0 && a < b)); }
  int parity(const SuperSize& sz) const { return imaginary ? 0 : (sz.p(a) + sz.p(b)) % 2; }
  AffineRoot negated() const { return imaginary ? imag(-s) : real(b, a, -s); }

  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;

  std::string str() const {
    std::ostringstream os;
    if (imaginary) {
      os << s << "d";
    } else {
      os << "e" << a << "-e" << b;
      if (s != 0) os << (s > 0 ? "+" : "") << s << "d";
    }
    return os.str();
  }
};

/// Coordinates of a root in the simple-root basis alpha_0..alpha_{m+n-1}.
inline std::vector<int> simple_coordinates(const SuperSize& sz, const AffineRoot& r) {
  int k = sz.mn();
  std::vector<int> c(k, r.s);
  if (!r.imaginary) {
    int lo = std::min(r.a, r.b), hi = std::max(r.a, r.b);
    int sgn = r.a < r.b ? 1 : -1;
    for (int i = lo; i < hi; ++i) c[i] += sgn;
  }
  return c;
}

/// Inner product (root, alpha_j) extended bilinearly from (alpha_i, alpha_j) = a_{i,j}.
/// (s*delta, alpha_j) = 0 for every j by the zero row sums.
inline int inner_with_simple(const SuperSize& sz, const AffineRoot& r, int j) {
  auto c = simple_coordinates(sz, r);
  int acc = 0;
  for (int i = 0; i < sz.mn(); ++i)
    if (c[i] != 0) acc += c[i] * cartan_affine(sz, i, j);
  return acc;
}

inline int inner_simple(const SuperSize& sz, int i, int j) { return cartan_affine(sz, i, j); }

/// All positive roots with mode <= cutoff, in deterministic order
/// (mode, then kind, then (a,b)).
inline std::vector<AffineRoot> positive_roots(const SuperSize& sz, int mode_cutoff) {
  if (mode_cutoff < 0) throw std::invalid_argument("positive_roots: cutoff < 0");
  std::vector<AffineRoot> out;
  int k = sz.mn();
  for (int s = 0; s <= mode_cutoff; ++s) {
    if (s == 0) {
      for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b) out.push_back(AffineRoot::real(a, b, 0));
    } else {
      out.push_back(AffineRoot::imag(s));
      for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k; ++b)
          if (a != b) out.push_back(AffineRoot::real(a, b, s));
    }
  }
  return out;
}

/// Simple reflection s_i, defined for even nodes i not in {0, m}: acts as the
/// transposition (i, i+1) on matrix-unit indices, fixes imaginary roots.
inline AffineRoot reflect(const SuperSize& sz, int i, const AffineRoot& r) {
  if (i == 0 || i == sz.m || i < 0 || i >= sz.mn())
    throw std::invalid_argument("reflect: node must avoid {0, m}");
  if (r.imaginary) return r;
  auto swp = [&](int x) { return x == i ? i + 1 : (x == i + 1 ? i : x); };
  return AffineRoot::real(swp(r.a), swp(r.b), r.s);
}

/// kappa-dual pair of root vectors: x_plus in g_alpha, x_minus in g_{-alpha},
/// kappa(x_plus, x_minus) = 1 and cross pairs vanish.
template <class R>
struct DualPair {
  AffineRoot root;
  int index = 0;
  LoopElement<R> x_plus;
  LoopElement<R> x_minus;
};

/// Exact inverse of a square rational matrix by Gauss-Jordan elimination.
inline std::vector<std::vector<Rat>> invert_rational(std::vector<std::vector<Rat>> a) {
  std::size_t n = a.size();
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("invert_rational: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rat f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

/// Dual basis of a positive root space. Real roots give the single pair
/// (E_{a,b}(s), (-1)^{p(a)} E_{b,a}(-s)). An imaginary root s*delta gives the
/// m+n-1 pairs built from the finite Cartan images h_k (x) t^s with duals
/// through the inverse Gram matrix; `rotation`, when given, replaces the
/// plus-side basis by an invertible integer recombination (duals recomputed,
/// so every choice is kappa-dual).
template <class R>
std::vector<DualPair<R>> dual_basis(const SuperSize& sz, const AffineRoot& root,
                                    const std::vector<std::vector<long>>* rotation = nullptr) {
  if (!root.positive()) throw std::invalid_argument("dual_basis: root must be positive");
  std::vector<DualPair<R>> out;
  if (!root.imaginary) {
    DualPair<R> p;
    p.root = root;
    p.index = 1;
    p.x_plus = LoopElement<R>::term(LoopTerm::E(root.a, root.b, root.s), R(1));
    p.x_minus = LoopElement<R>::term(LoopTerm::E(root.b, root.a, -root.s), R(long(sz.sgn_p(root.a))));
    out.push_back(std::move(p));
    return out;
  }
  int k = sz.mn() - 1;
  // Plus-side basis y_r = sum_l M_{rl} h_l (x) t^s (M = identity by default).
  std::vector<LoopElement<R>> plus(k);
  std::vector<LoopElement<Rat>> plus_rat(k);
  for (int r = 0; r < k; ++r) {
    for (int l = 0; l < k; ++l) {
      long coeff = rotation ? (*rotation)[r][l] : (r == l ? 1 : 0);
      if (coeff == 0) continue;
      LoopElement<Rat> h = chevalley<Rat>(sz, Presentation::Finite, ChevKind::H, l + 1);
      for (const auto& [t, q] : h.terms()) {
        LoopTerm shifted = LoopTerm::E(t.a, t.b, root.s);
        plus[r].add_term(shifted, scalar_from_rat<R>(Rat(coeff) * q));
        plus_rat[r].add_term(shifted, Rat(coeff) * q);
      }
    }
  }
  // B_{rl} = kappa(y_r, h_l (x) t^{-s}); duals are rows of B^{-T} in the h-basis.
  std::vector<std::vector<Rat>> B(k, std::vector<Rat>(k));
  std::vector<LoopElement<Rat>> minus_gens(k);
  for (int l = 0; l < k; ++l) {
    LoopElement<Rat> h = chevalley<Rat>(sz, Presentation::Finite, ChevKind::H, l + 1);
    for (const auto& [t, q] : h.terms()) minus_gens[l].add_term(LoopTerm::E(t.a, t.b, -root.s), q);
  }
  for (int r = 0; r < k; ++r)
    for (int l = 0; l < k; ++l) B[r][l] = kappa(sz, plus_rat[r], minus_gens[l]);
  auto Binv = invert_rational(B);
  for (int r = 0; r < k; ++r) {
    DualPair<R> p;
    p.root = root;
    p.index = r + 1;
    p.x_plus = plus[r];
    for (int l = 0; l < k; ++l) {
      if (Binv[l][r].is_zero()) continue;
      for (const auto& [t, q] : minus_gens[l].terms())
        p.x_minus.add_term(t, scalar_from_rat<R>(Binv[l][r] * q));
    }
    out.push_back(std::move(p));
  }
  return out;
}

/// Triple-exponential automorphism tau_i = exp(ad x_i^+) exp(-+ ad x_i^-) exp(ad x_i^+)
/// at Lie level, for even nodes i not in {0, m}. The middle sign is -a_{i,i}/2:
/// at nodes with a_{i,i} = -2 the triple (x_i^+, x_i^-, h_i) satisfies
/// [h_i, x_i^+] = -2 x_i^+, and the reflection needs the normalized triple
/// (x^+, -x^-, -h); with the literal minus sign those tau_i fail to permute
/// root spaces. Each exponential truncates by nilpotency; more than four terms
/// signals a bug.
template <class R>
LoopElement<R> tau(const SuperSize& sz, int i, const LoopElement<R>& x) {
  if (i == 0 || i == sz.m || i < 0 || i >= sz.mn())
    throw std::invalid_argument("tau: node must avoid {0, m}");
  auto exp_ad = [&](const LoopElement<R>& u, int sign, LoopElement<R> y) {
    LoopElement<R> acc = y;
    LoopElement<R> cur = y;
    Rat fact(1);
    for (int kk = 1; !cur.is_zero(); ++kk) {
      if (kk > 4) throw std::runtime_error("tau: exp(ad) failed to truncate");
      cur = bracket(sz, u, cur);
      fact *= Rat(sign, kk);
      acc += scalar_from_rat<R>(fact) * cur;
    }
    return acc;
  };
  int aii = cartan_affine(sz, i, i);
  if (aii == 0) throw std::invalid_argument("tau: node has isotropic simple root");
  int mid = -aii / 2;
  LoopElement<R> xp = chevalley<R>(sz, Presentation::Affine, ChevKind::XPlus, i);
  LoopElement<R> xm = chevalley<R>(sz, Presentation::Affine, ChevKind::XMinus, i);
  LoopElement<R> y = exp_ad(xp, 1, x);
  y = exp_ad(xm, mid, y);
  y = exp_ad(xp, 1, y);
  return y;
}

}  // namespace yangian
