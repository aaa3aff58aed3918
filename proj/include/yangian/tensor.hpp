#pragma once

#include "yangian/generators.hpp"

namespace yangian {

/// Exact vector in a tensor product of two Verma modules.
template <class R>
class TensorVector {
public:
  using Key = std::pair<PbwMonomial, PbwMonomial>;
  using Terms = std::map<Key, R>;

  TensorVector() = default;
  static TensorVector unit(PbwMonomial l, PbwMonomial r) {
    TensorVector v;
    v.terms_[{std::move(l), std::move(r)}] = R(1);
    return v;
  }

  bool empty() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  void add_term(const Key& k, const R& q) {
    if (q.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_[k] = q;
    } else {
      it->second += q;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TensorVector& operator+=(const TensorVector& o) {
    for (const auto& [k, q] : o.terms_) add_term(k, q);
    return *this;
  }
  TensorVector& operator-=(const TensorVector& o) {
    for (const auto& [k, q] : o.terms_) add_term(k, -q);
    return *this;
  }
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
  friend TensorVector operator*(const R& q, const TensorVector& v) {
    TensorVector r;
    for (const auto& [k, c] : v.terms_) {
      R t = q * c;
      if (!t.is_zero()) r.terms_[k] = std::move(t);
    }
    return r;
  }
  friend bool operator==(const TensorVector& a, const TensorVector& b) { return a.terms_ == b.terms_; }

  int right_depth() const {
    int d = 0;
    for (const auto& [k, q] : terms_) d = std::max(d, k.second.depth());
    return d;
  }

  template <class Ctx>
  bool is_zero(const Ctx& ring) const {
    for (const auto& [k, q] : terms_)
      if (!ring.is_zero(q)) return false;
    return true;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, q] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << scalar_str(q) << ")*" << k.first.str() << "(x)" << k.second.str();
    }
    return os.str();
  }

private:
  static std::string scalar_str(const Rat& q) { return q.str(); }
  static std::string scalar_str(const ParamPoly& q) { return q.str(); }
  Terms terms_;
};

/// (A (x) 1) v: no Koszul sign since the right slot is the identity.
template <class R>
TensorVector<R> tensor_apply_left(const GenOp<ModuleVector<R>>& a, const TensorVector<R>& v) {
  TensorVector<R> out;
  for (const auto& [k, q] : v.terms()) {
    ModuleVector<R> img = a(ModuleVector<R>::unit(k.first));
    for (const auto& [m, c] : img.terms()) out.add_term({m, k.second}, q * c);
  }
  return out;
}

/// (1 (x) B) v picks up (-1)^{p(B) p(left monomial)}.
template <class R>
TensorVector<R> tensor_apply_right(const SuperSize& sz, const GenOp<ModuleVector<R>>& b,
                                   const TensorVector<R>& v) {
  TensorVector<R> out;
  for (const auto& [k, q] : v.terms()) {
    int sgn = (b.parity == 1 && k.first.parity(sz) == 1) ? -1 : 1;
    ModuleVector<R> img = b(ModuleVector<R>::unit(k.second));
    R qq = (sgn == 1) ? q : R(-1) * q;
    for (const auto& [m, c] : img.terms()) out.add_term({k.first, m}, qq * c);
  }
  return out;
}

/// (x (x) y) v for homogeneous loop elements x, y acting through the two
/// modules, with the Koszul sign (-1)^{p(y) p(left monomial)}.
template <class R>
TensorVector<R> tensor_apply_pair(const SuperSize& sz, const VermaModule<R>& left_mod,
                                  const VermaModule<R>& right_mod, const LoopElement<R>& x, int px,
                                  const LoopElement<R>& y, int py, const TensorVector<R>& v) {
  (void)px;
  TensorVector<R> out;
  for (const auto& [k, q] : v.terms()) {
    int sgn = (py == 1 && k.first.parity(sz) == 1) ? -1 : 1;
    ModuleVector<R> r = right_mod.act(y, ModuleVector<R>::unit(k.second));
    if (r.empty()) continue;
    ModuleVector<R> l = left_mod.act(x, ModuleVector<R>::unit(k.first));
    if (l.empty()) continue;
    R qq = (sgn == 1) ? q : R(-1) * q;
    for (const auto& [ml, cl] : l.terms())
      for (const auto& [mr, cr] : r.terms()) out.add_term({ml, mr}, qq * cl * cr);
  }
  return out;
}

}  // namespace yangian
