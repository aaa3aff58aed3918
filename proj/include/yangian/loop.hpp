#pragma once

#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "yangian/scalar.hpp"
#include "yangian/superdata.hpp"

namespace yangian {

/// One basis element of gl(m|n)-hat: a matrix-unit mode E_{a,b}(s) = E_{a,b} (x) t^s,
/// or one of the two central generators c, z.
struct LoopTerm {
  enum Kind : int { MatrixUnit = 0, CentralC = 1, CentralZ = 2 };
  Kind kind = MatrixUnit;
  int a = 1, b = 1;  // 1-based rows/cols, meaningful for MatrixUnit only
  int s = 0;         // t-mode, meaningful for MatrixUnit only

  static LoopTerm E(int a, int b, int s) { return LoopTerm{MatrixUnit, a, b, s}; }
  static LoopTerm c() { return LoopTerm{CentralC, 0, 0, 0}; }
  static LoopTerm z() { return LoopTerm{CentralZ, 0, 0, 0}; }

  int parity(const SuperSize& sz) const {
    return kind == MatrixUnit ? (sz.p(a) + sz.p(b)) % 2 : 0;
  }
  int mode() const { return kind == MatrixUnit ? s : 0; }

  friend auto operator<=>(const LoopTerm&, const LoopTerm&) = default;

  std::string str() const {
    if (kind == CentralC) return "c";
    if (kind == CentralZ) return "z";
    std::ostringstream os;
    os << "E[" << a << "," << b << "](" << s << ")";
    return os.str();
  }
};

/// Finite linear combination of loop terms with scalar coefficients.
template <class R>
class LoopElement {
public:
  using Terms = std::map<LoopTerm, R>;

  LoopElement() = default;
  static LoopElement term(const LoopTerm& t, R coeff) {
    LoopElement e;
    if (!plain_zero(coeff)) e.terms_[t] = std::move(coeff);
    return e;
  }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  LoopElement operator-() const {
    LoopElement r;
    for (const auto& [t, q] : terms_) r.terms_[t] = -q;
    return r;
  }
  LoopElement& operator+=(const LoopElement& o) {
    for (const auto& [t, q] : o.terms_) add_term(t, q);
    return *this;
  }
  LoopElement& operator-=(const LoopElement& o) {
    for (const auto& [t, q] : o.terms_) add_term(t, -q);
    return *this;
  }
  friend LoopElement operator+(LoopElement a, const LoopElement& b) { return a += b; }
  friend LoopElement operator-(LoopElement a, const LoopElement& b) { return a -= b; }
  friend LoopElement operator*(const R& q, LoopElement e) {
    LoopElement r;
    for (const auto& [t, c] : e.terms_) {
      R v = q * c;
      if (!plain_zero(v)) r.terms_[t] = std::move(v);
    }
    return r;
  }
  friend bool operator==(const LoopElement& a, const LoopElement& b) { return a.terms_ == b.terms_; }

  void add_term(const LoopTerm& t, const R& q) {
    if (plain_zero(q)) return;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
      terms_[t] = q;
    } else {
      it->second += q;
      if (plain_zero(it->second)) terms_.erase(it);
    }
  }

  /// Parity if all terms agree, nullopt for mixed or zero elements.
  std::optional<int> parity(const SuperSize& sz) const {
    std::optional<int> p;
    for (const auto& [t, q] : terms_) {
      int tp = t.parity(sz);
      if (!p) {
        p = tp;
      } else if (*p != tp) {
        return std::nullopt;
      }
    }
    return p;
  }

  /// Splits into (even part, odd part).
  std::pair<LoopElement, LoopElement> parity_split(const SuperSize& sz) const {
    LoopElement ev, od;
    for (const auto& [t, q] : terms_) (t.parity(sz) == 0 ? ev : od).terms_[t] = q;
    return {ev, od};
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, q] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << scalar_str(q) << ")*" << t.str();
    }
    return os.str();
  }

private:
  static bool plain_zero(const R& q) { return q.is_zero(); }
  static std::string scalar_str(const Rat& q) { return q.str(); }
  static std::string scalar_str(const ParamPoly& q) { return q.str(); }

  Terms terms_;
};

/// str(E_{a,b} E_{c,d}) = delta_{b,c} delta_{a,d} (-1)^{p(a)}.
inline int supertrace_pair(const SuperSize& sz, int a, int b, int c, int d) {
  return (b == c && a == d) ? sz.sgn_p(a) : 0;
}

/// Super-bracket of basis terms, with both central extension terms:
///   [E_{a,b}(s), E_{c,d}(u)] = (d_{b,c} E_{a,d} - koszul * d_{d,a} E_{c,b})(s+u)
///                              + s d_{s+u,0} str(E_{a,b}E_{c,d}) c
///                              + s d_{s+u,0} d_{a,b} d_{c,d} (-1)^{p(a)+p(c)} z.
/// Centrals bracket to zero with everything.
template <class R>
LoopElement<R> bracket_terms(const SuperSize& sz, const LoopTerm& x, const LoopTerm& y) {
  LoopElement<R> out;
  if (x.kind != LoopTerm::MatrixUnit || y.kind != LoopTerm::MatrixUnit) return out;
  int koszul = (x.parity(sz) == 1 && y.parity(sz) == 1) ? -1 : 1;
  if (x.b == y.a) out.add_term(LoopTerm::E(x.a, y.b, x.s + y.s), R(1));
  if (y.b == x.a) out.add_term(LoopTerm::E(y.a, x.b, x.s + y.s), R(-koszul));
  if (x.s + y.s == 0 && x.s != 0) {
    int str = supertrace_pair(sz, x.a, x.b, y.a, y.b);
    if (str != 0) out.add_term(LoopTerm::c(), R(long(x.s) * str));
    if (x.a == x.b && y.a == y.b) {
      int sgn = ((sz.p(x.a) + sz.p(y.a)) % 2 == 0) ? 1 : -1;
      out.add_term(LoopTerm::z(), R(long(x.s) * sgn));
    }
  }
  return out;
}

template <class R>
LoopElement<R> bracket(const SuperSize& sz, const LoopElement<R>& x, const LoopElement<R>& y) {
  LoopElement<R> out;
  for (const auto& [tx, qx] : x.terms())
    for (const auto& [ty, qy] : y.terms()) {
      LoopElement<R> b = bracket_terms<R>(sz, tx, ty);
      if (!b.is_zero()) out += (qx * qy) * b;
    }
  return out;
}

/// Supertrace pairing kappa(E_{a,b}(s), E_{c,d}(u)) = d_{s+u,0} d_{a,d} d_{b,c} (-1)^{p(a)};
/// centrals pair to zero.
template <class R>
R kappa(const SuperSize& sz, const LoopElement<R>& x, const LoopElement<R>& y) {
  R acc(0);
  for (const auto& [tx, qx] : x.terms()) {
    if (tx.kind != LoopTerm::MatrixUnit) continue;
    for (const auto& [ty, qy] : y.terms()) {
      if (ty.kind != LoopTerm::MatrixUnit) continue;
      if (tx.s + ty.s != 0) continue;
      if (tx.a != ty.b || tx.b != ty.a) continue;
      acc += qx * qy * R(long(sz.sgn_p(tx.a)));
    }
  }
  return acc;
}

/// ad(x)^k (y). x must be parity-homogeneous.
template <class R>
LoopElement<R> ad_power(const SuperSize& sz, const LoopElement<R>& x, unsigned k, LoopElement<R> y) {
  for (unsigned i = 0; i < k; ++i) y = bracket(sz, x, y);
  return y;
}

enum class ChevKind { H, XPlus, XMinus };
enum class Presentation { Finite, Affine };

/// Chevalley generator images: Psi for the finite presentation (mode 0),
/// Xi for the affine one (node 0 picks up the t^{+-1} corner modes and c).
template <class R>
LoopElement<R> chevalley(const SuperSize& sz, Presentation pres, ChevKind kind, int node) {
  int k = sz.mn();
  int lo = (pres == Presentation::Finite) ? 1 : 0;
  if (node < lo || node > k - 1)
    throw std::out_of_range("chevalley: node out of range for presentation");
  LoopElement<R> e;
  if (node == 0) {
    switch (kind) {
      case ChevKind::H:
        e.add_term(LoopTerm::E(1, 1, 0), R(-1));
        e.add_term(LoopTerm::E(k, k, 0), R(-1));
        e.add_term(LoopTerm::c(), R(1));
        break;
      case ChevKind::XPlus:
        e.add_term(LoopTerm::E(k, 1, 1), R(1));
        break;
      case ChevKind::XMinus:
        e.add_term(LoopTerm::E(1, k, -1), R(-1));
        break;
    }
    return e;
  }
  int i = node;
  switch (kind) {
    case ChevKind::H:
      e.add_term(LoopTerm::E(i, i, 0), R(long(sz.sgn_p(i))));
      e.add_term(LoopTerm::E(i + 1, i + 1, 0), R(long(-sz.sgn_p(i + 1))));
      break;
    case ChevKind::XPlus:
      e.add_term(LoopTerm::E(i, i + 1, 0), R(1));
      break;
    case ChevKind::XMinus:
      e.add_term(LoopTerm::E(i + 1, i, 0), R(long(sz.sgn_p(i))));
      break;
  }
  return e;
}

/// The anti-automorphism omega on basis terms: E_{a,b}(s) -> (-1)^s E_{b,a}(-s),
/// centrals fixed. (Applied to words in reversed factor order by the caller.)
template <class R>
LoopElement<R> omega_term(const LoopTerm& t) {
  if (t.kind != LoopTerm::MatrixUnit) return LoopElement<R>::term(t, R(1));
  int sgn = (t.s % 2 == 0) ? 1 : -1;
  return LoopElement<R>::term(LoopTerm::E(t.b, t.a, -t.s), R(long(sgn)));
}

template <class R>
LoopElement<R> omega_element(const LoopElement<R>& e) {
  LoopElement<R> out;
  for (const auto& [t, q] : e.terms()) out += q * omega_term<R>(t);
  return out;
}

}  // namespace yangian
