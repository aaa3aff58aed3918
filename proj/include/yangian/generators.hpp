#pragma once

#include <functional>
#include <map>
#include <memory>
#include <tuple>
#include <unordered_map>

#include "yangian/evmap.hpp"
#include "yangian/roots.hpp"

namespace yangian {

/// A bound generator: a parity-tagged linear operator on a carrier vector.
template <class V>
struct GenOp {
  int parity = 0;
  std::function<V(const V&)> fn;

  V operator()(const V& v) const { return fn(v); }
};

/// Memoizes an operator by the canonical string of its argument. Bindings are
/// queried with the same few hundred vectors thousands of times across
/// relation instances, which makes this the single biggest time saver.
template <class V>
GenOp<V> memoized(GenOp<V> op) {
  auto cache = std::make_shared<std::unordered_map<std::string, V>>();
  auto inner = op.fn;
  op.fn = [cache, inner](const V& v) {
    std::string key = v.str();
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;
    V r = inner(v);
    cache->emplace(std::move(key), r);
    return r;
  };
  return op;
}

template <class V, class R>
GenOp<V> op_scale(const R& c, const GenOp<V>& a) {
  return {a.parity, [c, a](const V& v) { return c * a(v); }};
}

template <class V>
GenOp<V> op_add(const GenOp<V>& a, const GenOp<V>& b) {
  return {a.parity, [a, b](const V& v) { return a(v) + b(v); }};
}

/// Super-commutator of operators: [A,B] = AB - (-1)^{p(A)p(B)} BA.
template <class V, class R>
GenOp<V> op_bracket(const GenOp<V>& a, const GenOp<V>& b) {
  int sgn = (a.parity == 1 && b.parity == 1) ? -1 : 1;
  int par = (a.parity + b.parity) % 2;
  return {par, [a, b, sgn](const V& v) {
            V r = a(b(v));
            V s = b(a(v));
            return (sgn == 1) ? r - s : r + s;
          }};
}

enum class JKind { JH, JXPlus, JXMinus };

/// Generator bindings coming from the evaluation map on one Verma module:
/// r <= 1 by the printed formulas, r >= 2 through the recursion
/// x_{i,r+1} = +-(1/a_{i,i})[h~_{i,1}, x_{i,r}] (or its variant through node
/// i+1 with the b-correction at i in {0,m}), h_{i,r+1} = [x+_{i,r+1}, x-_{i,0}],
/// plus the J-element realizations.
/// Lazily enumerated kappa-dual pairs of all positive roots, grouped by mode.
template <class R>
class DualPairCache {
public:
  DualPairCache(SuperSize sz, std::vector<std::vector<long>> rotation)
      : sz_(sz), rotation_(std::move(rotation)) {}

  const std::vector<DualPair<R>>& at_mode(int s) {
    while (int(by_mode_.size()) <= s) {
      int mode = int(by_mode_.size());
      std::vector<DualPair<R>> ps;
      int k = sz_.mn();
      if (mode == 0) {
        for (int a = 1; a <= k; ++a)
          for (int b = a + 1; b <= k; ++b)
            for (auto& p : dual_basis<R>(sz_, AffineRoot::real(a, b, 0))) ps.push_back(p);
      } else {
        const std::vector<std::vector<long>>* rot = rotation_.empty() ? nullptr : &rotation_;
        for (auto& p : dual_basis<R>(sz_, AffineRoot::imag(mode), rot)) ps.push_back(p);
        for (int a = 1; a <= k; ++a)
          for (int b = 1; b <= k; ++b)
            if (a != b)
              for (auto& p : dual_basis<R>(sz_, AffineRoot::real(a, b, mode))) ps.push_back(p);
      }
      by_mode_.push_back(std::move(ps));
    }
    return by_mode_[std::size_t(s)];
  }

private:
  SuperSize sz_;
  std::vector<std::vector<long>> rotation_;
  std::vector<std::vector<DualPair<R>>> by_mode_;
};

template <class R>
class EvRealization {
public:
  using Vec = ModuleVector<R>;

  EvRealization(std::shared_ptr<const VermaModule<R>> mod, Ring<R> ring, EvOptions opts = {},
                const std::vector<std::vector<long>>* dual_rotation = nullptr)
      : mod_(std::move(mod)), ring_(std::move(ring)), opts_(opts) {
    pairs_ = std::make_shared<DualPairCache<R>>(
        mod_->size(), dual_rotation ? *dual_rotation : std::vector<std::vector<long>>{});
  }

  const VermaModule<R>& module() const { return *mod_; }
  const Ring<R>& ring() const { return ring_; }

  GenOp<Vec> op(YKind kind, int node, int r) {
    auto key = std::make_tuple(int(kind), mod_->size().mod_node(node), r);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    GenOp<Vec> g = memoized(build(kind, mod_->size().mod_node(node), r));
    cache_.emplace(key, g);
    return g;
  }

  /// h~_{i,1} = h_{i,1} - (hbar/2) h_{i,0}^2.
  GenOp<Vec> htilde(int node) {
    GenOp<Vec> h1 = op(YKind::H, node, 1);
    GenOp<Vec> h0 = op(YKind::H, node, 0);
    R half_hbar = scalar_from_rat<R>(Rat(1, 2)) * ring_.hbar();
    return {0, [h1, h0, half_hbar](const Vec& v) { return h1(v) - half_hbar * h0(h0(v)); }};
  }

  GenOp<Vec> j_op(JKind kind, int node) {
    auto key = std::make_tuple(100 + int(kind), mod_->size().mod_node(node), 0);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    GenOp<Vec> g = memoized(build_j(kind, mod_->size().mod_node(node)));
    cache_.emplace(key, g);
    return g;
  }

private:
  GenOp<Vec> wrap_expr(OperatorExpr<R> e) const {
    auto mod = mod_;
    int par = e.parity;
    auto ex = std::make_shared<OperatorExpr<R>>(std::move(e));
    return {par, [mod, ex](const Vec& v) { return apply(*ex, *mod, v); }};
  }

  GenOp<Vec> build(YKind kind, int i, int r) {
    const SuperSize& sz = mod_->size();
    if (r <= 1) return wrap_expr(ev_gen(sz, ring_, kind, i, r, opts_));
    if (kind == YKind::H) {
      GenOp<Vec> xp = op(YKind::XPlus, i, r);
      GenOp<Vec> xm = op(YKind::XMinus, i, 0);
      return op_bracket<Vec, R>(xp, xm);
    }
    int sign = kind == YKind::XPlus ? 1 : -1;
    GenOp<Vec> prev = op(kind, i, r - 1);
    if (i != 0 && i != sz.m) {
      GenOp<Vec> ht = htilde(i);
      long aii = cartan_affine(sz, i, i);
      R c = scalar_from_rat<R>(Rat(sign, aii));
      return op_scale(c, op_bracket<Vec, R>(ht, prev));
    }
    int j = i + 1;
    GenOp<Vec> ht = htilde(j);
    long aji = cartan_affine(sz, j, i);
    if (aji == 0) throw std::logic_error("higher_ev: a_{i+1,i} = 0");
    R c = scalar_from_rat<R>(Rat(sign, aji));
    GenOp<Vec> main = op_scale(c, op_bracket<Vec, R>(ht, prev));
    R corr = scalar_from_rat<R>(Rat(b_coeff(sz, j, i), 2)) * (ring_.e1() - ring_.e2());
    return op_add(main, op_scale(corr, prev));
  }

  // v_i  = (hbar/2) sum_{a in D+} sum_k (a, a_i) x_{-a} x_a - (hbar/2) h_i^2
  // w+_i = -(hbar/2) sum sum [x+_i, x_{-a}] x_a
  // w-_i = +(hbar/2) sum sum x_{-a} [x_a, x-_i]
  // The root sums truncate per vector: only modes <= depth(v) (+1 for w-)
  // act, every discarded term being zero by the annihilation bound.
  GenOp<Vec> build_j(JKind kind, int i) {
    const SuperSize& sz = mod_->size();
    auto mod = mod_;
    auto pairs = pairs_;
    R half_hbar = scalar_from_rat<R>(Rat(1, 2)) * ring_.hbar();
    if (kind == JKind::JH) {
      GenOp<Vec> h1 = op(YKind::H, i, 1);
      LoopElement<R> hi = chevalley<R>(sz, Presentation::Affine, ChevKind::H, i);
      auto fn = [pairs, mod, h1, hi, half_hbar, i, sz](const Vec& v) {
        Vec out = h1(v);
        int d = v.depth();
        for (int s = 0; s <= d; ++s)
          for (const auto& pr : pairs->at_mode(s)) {
            int eig = inner_with_simple(sz, pr.root, i);
            if (eig == 0) continue;
            Vec t = mod->act(pr.x_plus, v);
            if (t.empty()) continue;
            t = mod->act(pr.x_minus, t);
            if (t.empty()) continue;
            out += (R(long(eig)) * half_hbar) * t;
          }
        out -= half_hbar * mod->act(hi, mod->act(hi, v));
        return out;
      };
      return {0, fn};
    }
    bool plus = kind == JKind::JXPlus;
    GenOp<Vec> x1 = op(plus ? YKind::XPlus : YKind::XMinus, i, 1);
    LoopElement<R> xi = chevalley<R>(sz, Presentation::Affine, plus ? ChevKind::XPlus : ChevKind::XMinus, i);
    int par = node_parity(sz, i);
    auto fn = [pairs, mod, x1, xi, half_hbar, plus, sz](const Vec& v) {
      Vec out = x1(v);
      int d = v.depth() + (plus ? 0 : 1);
      for (int s = 0; s <= d; ++s)
        for (const auto& pr : pairs->at_mode(s)) {
          if (plus) {
            LoopElement<R> left = bracket(sz, xi, pr.x_minus);
            if (left.is_zero()) continue;
            Vec t = mod->act(pr.x_plus, v);
            if (t.empty()) continue;
            t = mod->act(left, t);
            if (t.empty()) continue;
            out -= half_hbar * t;
          } else {
            LoopElement<R> right = bracket(sz, pr.x_plus, xi);
            if (right.is_zero()) continue;
            Vec t = mod->act(right, v);
            if (t.empty()) continue;
            t = mod->act(pr.x_minus, t);
            if (t.empty()) continue;
            out += half_hbar * t;
          }
        }
      return out;
    };
    return {par, fn};
  }

  std::shared_ptr<const VermaModule<R>> mod_;
  Ring<R> ring_;
  EvOptions opts_;
  std::shared_ptr<DualPairCache<R>> pairs_;
  std::map<std::tuple<int, int, int>, GenOp<Vec>> cache_;
};

}  // namespace yangian
