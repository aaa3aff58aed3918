#pragma once

#include <optional>
#include <stdexcept>
#include <type_traits>

#include "yangian/parampoly.hpp"

namespace yangian {

template <class R>
R scalar_from_rat(const Rat& q) {
  if constexpr (std::is_same_v<R, Rat>) {
    return q;
  } else {
    return R(q);
  }
}

/// Scalar ring plugged into every algebraic container. Two instantiations:
///   Ring<Rat>       — sampled mode, parameters specialized at construction;
///   Ring<ParamPoly> — symbolic mode, parameters kept formal.
/// The zero test is the one place the two differ beyond evaluation: in
/// symbolic mode with the level constraint enforced, zero means zero modulo
/// the ideal (hbar*lvl - sign*(m-n)*e1).
template <class R>
struct Ring;

template <>
struct Ring<Rat> {
  using Scalar = Rat;
  ParamAssignment assignment;

  Rat from_rat(const Rat& q) const { return q; }
  Rat from_poly(const ParamPoly& p) const { return eval_poly(p, assignment); }
  Rat e1() const { return assignment.get(Param::E1); }
  Rat e2() const { return assignment.get(Param::E2); }
  Rat alpha() const { return assignment.get(Param::Alpha); }
  Rat level() const { return assignment.get(Param::Lvl); }
  Rat hbar() const { return assignment.hbar(); }
  bool is_zero(const Rat& x) const { return x.is_zero(); }
};

template <>
struct Ring<ParamPoly> {
  using Scalar = ParamPoly;

  /// When set, is_zero() reduces modulo hbar*lvl = sign*(m-n)*e1.
  struct LevelRule {
    int m = 0, n = 0;
    int sign = 1;
  };
  std::optional<LevelRule> level_rule;

  ParamPoly from_rat(const Rat& q) const { return ParamPoly(q); }
  ParamPoly from_poly(const ParamPoly& p) const { return p; }
  ParamPoly e1() const { return ParamPoly::e1(); }
  ParamPoly e2() const { return ParamPoly::e2(); }
  ParamPoly alpha() const { return ParamPoly::alpha(); }
  ParamPoly level() const { return ParamPoly::lvl(); }
  ParamPoly hbar() const { return ParamPoly::hbar(); }

  bool is_zero(const ParamPoly& x) const {
    if (x.is_zero()) return true;
    if (!level_rule) return false;
    // Substitute lvl -> N/D with N = sign*(m-n)*e1, D = hbar, clearing D^deg.
    int d = x.degree_in(Param::Lvl);
    ParamPoly num = ParamPoly(Rat(level_rule->sign * (level_rule->m - level_rule->n))) * ParamPoly::e1();
    ParamPoly den = ParamPoly::hbar();
    ParamPoly acc;
    for (int k = 0; k <= d; ++k) {
      ParamPoly coeff = x.lvl_coefficient(k);
      if (coeff.is_zero()) continue;
      ParamPoly t = coeff;
      for (int j = 0; j < k; ++j) t *= num;
      for (int j = k; j < d; ++j) t *= den;
      acc += t;
    }
    return acc.is_zero();
  }
};

}  // namespace yangian
