#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "yangian/rational.hpp"

namespace yangian::rel {

enum class GenKind { XPlus, XMinus, H, JXPlus, JXMinus, JH };
enum class ScalarKind { Lit, E1, E2, Hbar, Delta, CartanA, CoeffB };

inline bool is_j_kind(GenKind k) {
  return k == GenKind::JXPlus || k == GenKind::JXMinus || k == GenKind::JH;
}

/// Linear index expression: sum of variables plus an integer offset
/// (covers i, i+1, i-1, r+s, 0, 1, ...).
struct IdxExpr {
  std::vector<std::string> vars;
  int offset = 0;

  int eval(const std::map<std::string, int>& env) const {
    int v = offset;
    for (const auto& name : vars) {
      auto it = env.find(name);
      if (it == env.end()) throw std::runtime_error("unbound index variable " + name);
      v += it->second;
    }
    return v;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (i) s += "+";
      s += vars[i];
    }
    if (vars.empty()) return std::to_string(offset);
    if (offset > 0) s += "+" + std::to_string(offset);
    if (offset < 0) s += std::to_string(offset);
    return s;
  }
};

struct Node;
using NodeP = std::shared_ptr<const Node>;

struct Node {
  enum class Type { Sum, Prod, Neg, Bracket, Anti, Gen, Scalar, Sym };
  Type type{};
  std::vector<NodeP> kids;

  // Gen
  GenKind gkind{};
  IdxExpr gnode, gmode;

  // Scalar
  ScalarKind skind{};
  Rat lit;
  IdxExpr si, sj;

  // Sym
  std::vector<std::string> sym_vars;
};

struct RelationAst {
  NodeP root;
  std::vector<std::string> free_vars;  // first-appearance order
};

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

/// Parses the relation grammar: generators x+_{i,r}, x-_{i,r}, h_{i,r},
/// Jx+_{i}, Jx-_{i}, Jh_{i}; brackets [ , ], braces { , }; scalars
/// delta_{i,j}, a_{i,j}, b_{i,j}, e1, e2, hbar, rationals; sym{v1,..}(expr);
/// juxtaposition is multiplication; whitespace-insensitive.
RelationAst parse_relation(const std::string& text);

/// Canonical textual form; print(parse(t)) is a fixed point of parse-print.
std::string print_relation(const RelationAst& ast);

}  // namespace yangian::rel
