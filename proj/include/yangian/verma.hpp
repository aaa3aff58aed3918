#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "yangian/loop.hpp"

namespace yangian {

/// One lowering generator in PBW position: E_{a,b}(mode) with mode < 0, or a
/// strictly lower-triangular mode-0 unit (a > b). The member order makes the
/// default comparison the PBW order: descending lowering depth, then row, then
/// column.
struct PbwGen {
  int mode = 0;  // <= 0
  int a = 1, b = 1;

  friend auto operator<=>(const PbwGen&, const PbwGen&) = default;

  int parity(const SuperSize& sz) const { return (sz.p(a) + sz.p(b)) % 2; }
  LoopTerm term() const { return LoopTerm::E(a, b, mode); }

  static bool is_lowering(const SuperSize& sz, const LoopTerm& t) {
    (void)sz;
    return t.kind == LoopTerm::MatrixUnit && (t.s < 0 || (t.s == 0 && t.a > t.b));
  }
};

/// Normal-form word of lowering generators applied to the highest-weight
/// vector; the empty word is v_hw itself.
struct PbwMonomial {
  std::vector<PbwGen> gens;

  friend auto operator<=>(const PbwMonomial&, const PbwMonomial&) = default;

  int depth() const {
    int d = 0;
    for (const auto& g : gens) d -= g.mode;
    return d;
  }
  int t_degree() const {
    int d = 0;
    for (const auto& g : gens) d += g.mode;
    return d;
  }
  int zero_mode_count() const {
    int c = 0;
    for (const auto& g : gens) c += g.mode == 0;
    return c;
  }
  int parity(const SuperSize& sz) const {
    int p = 0;
    for (const auto& g : gens) p += g.parity(sz);
    return p % 2;
  }
  bool canonical(const SuperSize& sz) const {
    for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
      if (gens[i + 1] < gens[i]) return false;
      if (gens[i] == gens[i + 1] && gens[i].parity(sz) == 1) return false;
    }
    return true;
  }

  std::string str() const {
    if (gens.empty()) return "v";
    std::ostringstream os;
    for (const auto& g : gens) os << "E[" << g.a << "," << g.b << "](" << g.mode << ")";
    os << "v";
    return os.str();
  }
};

/// Finite exact vector in the module: map monomial -> coefficient.
template <class R>
class ModuleVector {
public:
  using Terms = std::map<PbwMonomial, R>;

  ModuleVector() = default;
  static ModuleVector unit(PbwMonomial m) {
    ModuleVector v;
    v.terms_[std::move(m)] = R(1);
    return v;
  }
  static ModuleVector highest_weight() { return unit(PbwMonomial{}); }

  bool empty() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  int depth() const {
    int d = 0;
    for (const auto& [m, q] : terms_) d = std::max(d, m.depth());
    return d;
  }

  void add_term(const PbwMonomial& m, const R& q) {
    if (q.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = q;
    } else {
      it->second += q;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ModuleVector& operator+=(const ModuleVector& o) {
    for (const auto& [m, q] : o.terms_) add_term(m, q);
    return *this;
  }
  ModuleVector& operator-=(const ModuleVector& o) {
    for (const auto& [m, q] : o.terms_) add_term(m, -q);
    return *this;
  }
  friend ModuleVector operator+(ModuleVector x, const ModuleVector& y) { return x += y; }
  friend ModuleVector operator-(ModuleVector x, const ModuleVector& y) { return x -= y; }
  friend ModuleVector operator*(const R& q, const ModuleVector& v) {
    ModuleVector r;
    for (const auto& [m, c] : v.terms_) {
      R t = q * c;
      if (!t.is_zero()) r.terms_[m] = std::move(t);
    }
    return r;
  }
  friend bool operator==(const ModuleVector& a, const ModuleVector& b) { return a.terms_ == b.terms_; }

  template <class Ctx>
  bool is_zero(const Ctx& ring) const {
    for (const auto& [m, q] : terms_)
      if (!ring.is_zero(q)) return false;
    return true;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, q] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << scalar_str(q) << ")*" << m.str();
    }
    return os.str();
  }

private:
  static std::string scalar_str(const Rat& q) { return q.str(); }
  static std::string scalar_str(const ParamPoly& q) { return q.str(); }
  Terms terms_;
};

/// Highest weight data: eigenvalues of the mode-0 diagonal, of c, and z = 1.
template <class R>
struct HighestWeight {
  std::vector<R> lambda;  // size m+n, 1-based via lambda[i-1]
  R level = R(0);
};

/// Verma-type smooth module of gl(m|n)-hat. Positive modes and mode-0 raising
/// operators annihilate v_hw; the diagonal acts by lambda, c by the level and
/// z by 1. act() rewrites words into PBW normal form through the superbracket,
/// so the two-cocycle and all Koszul signs enter in exactly one place.
template <class R>
class VermaModule {
public:
  using Vec = ModuleVector<R>;

  VermaModule(SuperSize sz, HighestWeight<R> hw) : sz_(sz), hw_(std::move(hw)) {
    if (int(hw_.lambda.size()) != sz_.mn())
      throw std::invalid_argument("VermaModule: weight length != m+n");
  }

  const SuperSize& size() const { return sz_; }
  const HighestWeight<R>& weight() const { return hw_; }

  Vec act(const LoopElement<R>& x, const Vec& v) const {
    Vec out;
    for (const auto& [t, q] : x.terms()) {
      for (const auto& [m, c] : v.terms()) {
        Vec piece = act_term(t, m);
        if (!piece.empty()) out += (q * c) * piece;
      }
    }
    return out;
  }

  Vec act_term_on(const LoopTerm& t, const Vec& v) const {
    Vec out;
    for (const auto& [m, c] : v.terms()) {
      Vec piece = act_term(t, m);
      if (!piece.empty()) out += c * piece;
    }
    return out;
  }

  /// All normal-form basis vectors with depth <= D and at most L mode-0
  /// factors, in deterministic (lexicographic DFS) order.
  std::vector<PbwMonomial> pbw_basis(int depth_cap, int zero_mode_cap) const {
    if (depth_cap < 0 || zero_mode_cap < 0) throw std::invalid_argument("pbw_basis: negative cap");
    std::vector<PbwGen> gens;
    int k = sz_.mn();
    for (int mode = -depth_cap; mode <= 0; ++mode) {
      for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k; ++b) {
          if (mode == 0 && a <= b) continue;
          gens.push_back(PbwGen{mode, a, b});
        }
    }
    std::sort(gens.begin(), gens.end());
    std::vector<PbwMonomial> out;
    PbwMonomial cur;
    dfs_basis(gens, 0, depth_cap, zero_mode_cap, cur, out);
    return out;
  }

private:
  void dfs_basis(const std::vector<PbwGen>& gens, std::size_t from, int depth_left, int zeros_left,
                 PbwMonomial& cur, std::vector<PbwMonomial>& out) const {
    out.push_back(cur);
    for (std::size_t i = from; i < gens.size(); ++i) {
      const PbwGen& g = gens[i];
      int d = -g.mode;
      if (d > depth_left) continue;
      if (g.mode == 0 && zeros_left == 0) continue;
      if (!cur.gens.empty() && cur.gens.back() == g && g.parity(sz_) == 1) continue;
      cur.gens.push_back(g);
      dfs_basis(gens, i, depth_left - d, zeros_left - (g.mode == 0), cur, out);
      cur.gens.pop_back();
    }
  }

  Vec act_term(const LoopTerm& t, const PbwMonomial& m) const {
    if (t.kind == LoopTerm::CentralC) {
      Vec v;
      v.add_term(m, hw_.level);
      return v;
    }
    if (t.kind == LoopTerm::CentralZ) return Vec::unit(m);
    if (m.gens.empty()) return act_on_hw(t);

    PbwGen front = m.gens.front();
    PbwMonomial rest;
    rest.gens.assign(m.gens.begin() + 1, m.gens.end());

    if (PbwGen::is_lowering(sz_, t)) {
      PbwGen gt{t.s, t.a, t.b};
      if (gt <= front) {
        if (gt == front && gt.parity(sz_) == 1) {
          // odd square: x x w = (1/2)[x,x] w
          LoopElement<R> sq = bracket_terms<R>(sz_, t, t);
          return scalar_from_rat<R>(Rat(1, 2)) * act(sq, Vec::unit(rest));
        }
        PbwMonomial ext;
        ext.gens.reserve(m.gens.size() + 1);
        ext.gens.push_back(gt);
        ext.gens.insert(ext.gens.end(), m.gens.begin(), m.gens.end());
        return Vec::unit(std::move(ext));
      }
    }

    // Commute t past the front factor.
    int sgn = (t.parity(sz_) == 1 && front.parity(sz_) == 1) ? -1 : 1;
    Vec inner = act_term(t, rest);
    Vec out;
    if (!inner.empty()) {
      Vec shifted = act_term_on(front.term(), inner);
      out += (sgn == 1) ? shifted : R(-1) * shifted;
    }
    LoopElement<R> br = bracket_terms<R>(sz_, t, front.term());
    if (!br.is_zero()) out += act(br, Vec::unit(rest));
    return out;
  }

  Vec act_on_hw(const LoopTerm& t) const {
    if (t.s > 0) return Vec();
    if (t.s < 0) return Vec::unit(PbwMonomial{{PbwGen{t.s, t.a, t.b}}});
    if (t.a < t.b) return Vec();
    if (t.a == t.b) {
      Vec v;
      v.add_term(PbwMonomial{}, hw_.lambda[t.a - 1]);
      return v;
    }
    return Vec::unit(PbwMonomial{{PbwGen{0, t.a, t.b}}});
  }

  SuperSize sz_;
  HighestWeight<R> hw_;
};

}  // namespace yangian
