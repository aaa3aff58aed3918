#pragma once

// Independent dense-matrix oracle for gl(m|n) structure: matrix units are
// explicit (m+n)x(m+n) integer matrices, products and supertraces are computed
// densely, never through the loop-algebra code under test.

#include <vector>

#include "yangian/loop.hpp"

namespace oracle {

using yangian::LoopElement;
using yangian::LoopTerm;
using yangian::Rat;
using yangian::SuperSize;

using Dense = std::vector<std::vector<long>>;

inline Dense unit(const SuperSize& sz, int a, int b) {
  Dense m(sz.mn(), std::vector<long>(sz.mn(), 0));
  m[a - 1][b - 1] = 1;
  return m;
}

inline Dense mul(const SuperSize& sz, const Dense& x, const Dense& y) {
  int k = sz.mn();
  Dense r(k, std::vector<long>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < k; ++l) {
      if (x[i][l] == 0) continue;
      for (int j = 0; j < k; ++j) r[i][j] += x[i][l] * y[l][j];
    }
  return r;
}

inline long supertrace(const SuperSize& sz, const Dense& x) {
  long t = 0;
  for (int i = 1; i <= sz.mn(); ++i) t += (sz.p(i) == 0 ? 1 : -1) * x[i - 1][i - 1];
  return t;
}

/// Bracket of two matrix-unit modes, computed from dense products. The z-term
/// is transcribed from the section-5 cocycle (it has no dense analogue).
inline LoopElement<Rat> bracket_oracle(const SuperSize& sz, const LoopTerm& x, const LoopTerm& y) {
  LoopElement<Rat> out;
  Dense dx = unit(sz, x.a, x.b), dy = unit(sz, y.a, y.b);
  Dense p1 = mul(sz, dx, dy), p2 = mul(sz, dy, dx);
  int koszul = (x.parity(sz) == 1 && y.parity(sz) == 1) ? -1 : 1;
  int k = sz.mn();
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      long v = p1[i - 1][j - 1] - koszul * p2[i - 1][j - 1];
      if (v != 0) out.add_term(LoopTerm::E(i, j, x.s + y.s), Rat(v));
    }
  if (x.s + y.s == 0) {
    long str = supertrace(sz, p1);
    if (str != 0 && x.s != 0) out.add_term(LoopTerm::c(), Rat(long(x.s) * str));
    if (x.a == x.b && y.a == y.b && x.s != 0) {
      long sgn = ((sz.p(x.a) + sz.p(y.a)) % 2 == 0) ? 1 : -1;
      out.add_term(LoopTerm::z(), Rat(long(x.s) * sgn));
    }
  }
  return out;
}

inline Rat kappa_oracle(const SuperSize& sz, const LoopTerm& x, const LoopTerm& y) {
  if (x.kind != LoopTerm::MatrixUnit || y.kind != LoopTerm::MatrixUnit) return Rat(0);
  if (x.s + y.s != 0) return Rat(0);
  return Rat(supertrace(sz, mul(sz, unit(sz, x.a, x.b), unit(sz, y.a, y.b))));
}

}  // namespace oracle
