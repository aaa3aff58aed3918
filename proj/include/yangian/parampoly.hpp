#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "yangian/rational.hpp"

namespace yangian {

/// Formal parameters of the theory, in the fixed monomial order used for
/// canonical serialization: lexicographic in (e1, e2, alpha, lvl).
enum class Param : int { E1 = 0, E2 = 1, Alpha = 2, Lvl = 3 };

inline const char* param_name(Param p) {
  switch (p) {
    case Param::E1: return "e1";
    case Param::E2: return "e2";
    case Param::Alpha: return "alpha";
    case Param::Lvl: return "lvl";
  }
  return "?";
}

/// Exact multivariate polynomial over Rat in (e1, e2, alpha, lvl).
/// hbar is not a parameter: it abbreviates e1 + e2.
class ParamPoly {
public:
  using Expo = std::array<std::uint8_t, 4>;
  using Terms = std::map<Expo, Rat>;

  ParamPoly() = default;
  ParamPoly(const Rat& q) {
    if (!q.is_zero()) terms_[{0, 0, 0, 0}] = q;
  }
  ParamPoly(long n) : ParamPoly(Rat(n)) {}
  ParamPoly(int n) : ParamPoly(Rat(n)) {}

  static ParamPoly var(Param p) {
    ParamPoly r;
    Expo e{0, 0, 0, 0};
    e[static_cast<int>(p)] = 1;
    r.terms_[e] = Rat(1);
    return r;
  }
  static ParamPoly e1() { return var(Param::E1); }
  static ParamPoly e2() { return var(Param::E2); }
  static ParamPoly alpha() { return var(Param::Alpha); }
  static ParamPoly lvl() { return var(Param::Lvl); }
  static ParamPoly hbar() { return e1() + e2(); }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  ParamPoly operator-() const {
    ParamPoly r;
    for (const auto& [e, q] : terms_) r.terms_[e] = -q;
    return r;
  }

  ParamPoly& operator+=(const ParamPoly& o) {
    for (const auto& [e, q] : o.terms_) {
      auto it = terms_.find(e);
      if (it == terms_.end()) {
        terms_[e] = q;
      } else {
        it->second += q;
        if (it->second.is_zero()) terms_.erase(it);
      }
    }
    return *this;
  }
  ParamPoly& operator-=(const ParamPoly& o) { return *this += -o; }

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }

  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    for (const auto& [ea, qa] : a.terms_)
      for (const auto& [eb, qb] : b.terms_) {
        Expo e;
        for (int k = 0; k < 4; ++k) {
          int s = int(ea[k]) + int(eb[k]);
          if (s > 255) throw std::overflow_error("ParamPoly: exponent overflow");
          e[k] = static_cast<std::uint8_t>(s);
        }
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
          Rat q = qa * qb;
          if (!q.is_zero()) r.terms_[e] = q;
        } else {
          it->second += qa * qb;
          if (it->second.is_zero()) r.terms_.erase(it);
        }
      }
    return r;
  }
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
  }
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

  int degree_in(Param p) const {
    int d = 0;
    for (const auto& [e, q] : terms_) d = std::max(d, int(e[static_cast<int>(p)]));
    return d;
  }

  /// Coefficient of lvl^k, as a polynomial in the remaining parameters.
  ParamPoly lvl_coefficient(int k) const {
    ParamPoly r;
    for (const auto& [e, q] : terms_)
      if (int(e[3]) == k) {
        Expo e2 = e;
        e2[3] = 0;
        r.terms_[e2] = q;
      }
    return r;
  }

  /// Canonical textual form: terms in monomial order, "num/den * e1^a e2^b alpha^c lvl^d",
  /// unit exponents and the constant monomial elided. Zero prints as "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, q] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << q.str();
      for (int k = 0; k < 4; ++k) {
        if (e[k] == 0) continue;
        os << " * " << param_name(static_cast<Param>(k));
        if (e[k] > 1) os << "^" << int(e[k]);
      }
    }
    return os.str();
  }

  /// Inverse of str(): accepts exactly the canonical form.
  static ParamPoly parse(const std::string& text);

  std::size_t hash() const {
    std::size_t h = 0x51ed270b;
    for (const auto& [e, q] : terms_) {
      for (int k = 0; k < 4; ++k) h = h * 1000003u + e[k];
      h ^= q.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

private:
  Terms terms_;  // no zero coefficients stored
};

inline ParamPoly ParamPoly::parse(const std::string& text) {
  ParamPoly out;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
  skip_ws();
  if (text.compare(i, 1, "0") == 0 && i + 1 == text.size()) return out;
  while (i < text.size()) {
    std::size_t j = i;
    while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '-' || text[j] == '/'))
      ++j;
    if (j == i) throw std::invalid_argument("ParamPoly::parse: expected coefficient at offset " + std::to_string(i));
    Rat coeff = Rat::parse(text.substr(i, j - i));
    i = j;
    Expo e{0, 0, 0, 0};
    skip_ws();
    while (i + 1 < text.size() && text[i] == '*') {
      ++i;
      skip_ws();
      int which = -1;
      for (int k = 0; k < 4; ++k) {
        std::string nm = param_name(static_cast<Param>(k));
        if (text.compare(i, nm.size(), nm) == 0) {
          which = k;
          i += nm.size();
          break;
        }
      }
      if (which < 0) throw std::invalid_argument("ParamPoly::parse: unknown parameter at offset " + std::to_string(i));
      int expo = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
        expo = std::stoi(text.substr(i, k - i));
        i = k;
      }
      e[which] = static_cast<std::uint8_t>(int(e[which]) + expo);
      skip_ws();
    }
    ParamPoly term;
    if (!coeff.is_zero()) term.terms_[e] = coeff;
    out += term;
    skip_ws();
    if (i < text.size()) {
      if (text[i] != '+') throw std::invalid_argument("ParamPoly::parse: expected '+' at offset " + std::to_string(i));
      ++i;
      skip_ws();
    }
  }
  return out;
}

/// A full assignment of rational values to the four parameters.
/// Invariants: e1, e2, e1+e2, e1-e2 all nonzero.
struct ParamAssignment {
  std::optional<Rat> values[4];
  bool enforce_level = false;

  const Rat& get(Param p) const {
    const auto& v = values[static_cast<int>(p)];
    if (!v) throw std::runtime_error(std::string("unassigned parameter ") + param_name(p));
    return *v;
  }
  void set(Param p, Rat q) { values[static_cast<int>(p)] = std::move(q); }
  Rat hbar() const { return get(Param::E1) + get(Param::E2); }
};

inline Rat eval_poly(const ParamPoly& p, const ParamAssignment& a) {
  Rat acc(0);
  for (const auto& [e, q] : p.terms()) {
    Rat t = q;
    for (int k = 0; k < 4; ++k)
      if (e[k] != 0) t *= a.get(static_cast<Param>(k)).pow(e[k]);
    acc += t;
  }
  return acc;
}

struct SuperSizeDims {
  int m = 0, n = 0;
};

/// Level value determined by the constraint c*hbar = sign * (m-n) * e1.
/// sign = +1 is the proof-text reading, sign = -1 the theorem-statement reading.
inline Rat level_from_constraint(int m, int n, const Rat& e1, const Rat& e2, int sign) {
  Rat hb = e1 + e2;
  if (hb.is_zero()) throw std::domain_error("level constraint: e1+e2 = 0");
  return Rat(sign) * Rat(m - n) * e1 / hb;
}

/// Deterministic small-rational sampling. Numerators in [-64,64]\{0},
/// denominators in [1,64]; invariants of ParamAssignment are enforced by redraw.
inline Rat sample_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-64, 64);
  std::uniform_int_distribution<long> den(1, 64);
  long n = 0;
  while (n == 0) n = num(rng);
  return Rat(n, den(rng));
}

inline ParamAssignment sample_assignment(std::uint64_t seed, SuperSizeDims size, bool enforce_level,
                                         int level_sign = 1) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x7f4a7c15u);
  ParamAssignment a;
  a.enforce_level = enforce_level;
  Rat e1(0), e2(0);
  for (;;) {
    e1 = sample_rat(rng);
    e2 = sample_rat(rng);
    if (!e1.is_zero() && !e2.is_zero() && !(e1 + e2).is_zero() && !(e1 - e2).is_zero()) break;
  }
  a.set(Param::E1, e1);
  a.set(Param::E2, e2);
  a.set(Param::Alpha, sample_rat(rng));
  if (enforce_level) {
    a.set(Param::Lvl, level_from_constraint(size.m, size.n, e1, e2, level_sign));
  } else {
    a.set(Param::Lvl, sample_rat(rng));
  }
  return a;
}

}  // namespace yangian
