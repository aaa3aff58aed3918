#pragma once

#include "yangian/relations/ast.hpp"
#include "yangian/superdata.hpp"

namespace yangian::rel {

/// How an index variable ranges: over the node set I = Z/(m+n)Z or over
/// non-negative generator modes.
struct IndexVar {
  std::string name;
  enum class Range { Node, Mode } range = Range::Node;
  int lo = 0, hi = 0;  // modes only; nodes always run over I
};

/// Applicability filter evaluated per index instance.
enum class Guard {
  None,
  DistinctNonAdjacent,  // i != j and a_{i,j} == 0
  DistinctAdjacent,     // i != j and |a_{i,j}| == 1
  OddNode,              // i in {0, m}
};

struct RelationSpec {
  std::string id;       // unique: "eq2.6+", "eq2.7-a1", ...
  std::string family;   // "eq2.6"
  std::string text;     // DSL source of the zero-form
  std::vector<IndexVar> vars;
  Guard guard = Guard::None;
  int mode_sum_cap = -1;  // when >= 0, keep instances with sum of mode vars <= cap
  bool uses_j = false;
};

bool guard_holds(Guard g, const SuperSize& sz, const std::map<std::string, int>& env);

/// The full relation catalog: minimalistic families eq2.1-eq2.9, the
/// infinite-presentation families eq1.1-eq1.8 at bounded modes, the
/// J-identities, and the rel4-rel7 aliases checked by Theorem 5.1's lemma.
const std::vector<RelationSpec>& catalog();

/// Subset selection by id or family prefix ("eq2" picks the whole
/// minimalistic set). Unknown selectors throw.
std::vector<RelationSpec> catalog_subset(const std::vector<std::string>& selectors);

/// Number of distinct minimalistic families (spec pins this at 9).
int minimalistic_family_count();

/// Every relation text parsed (round-trip safe); call once at startup in
/// tests to exercise the parser against the whole catalog.
const RelationAst& parsed(const RelationSpec& spec);

}  // namespace yangian::rel
