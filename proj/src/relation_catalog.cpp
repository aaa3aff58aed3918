#include <mutex>
#include <set>
#include <unordered_map>

#include "yangian/relations/catalog.hpp"

namespace yangian::rel {

namespace {

IndexVar node_var(std::string name) { return {std::move(name), IndexVar::Range::Node, 0, 0}; }
IndexVar mode_var(std::string name, int lo, int hi) { return {std::move(name), IndexVar::Range::Mode, lo, hi}; }

std::vector<RelationSpec> build() {
  std::vector<RelationSpec> out;
  auto add = [&](RelationSpec s) { out.push_back(std::move(s)); };

  // --- minimalistic presentation, r,s in {0,1} ---
  add({"eq2.1", "eq2.1", "[h_{i,r}, h_{j,s}]",
       {node_var("i"), node_var("j"), mode_var("r", 0, 1), mode_var("s", 0, 1)}});
  add({"eq2.2", "eq2.2", "[x+_{i,0}, x-_{j,0}] - delta_{i,j} h_{i,0}", {node_var("i"), node_var("j")}});
  add({"eq2.3a", "eq2.3", "[x+_{i,1}, x-_{j,0}] - delta_{i,j} h_{i,1}", {node_var("i"), node_var("j")}});
  add({"eq2.3b", "eq2.3", "[x+_{i,0}, x-_{j,1}] - delta_{i,j} h_{i,1}", {node_var("i"), node_var("j")}});
  add({"eq2.4+", "eq2.4", "[h_{i,0}, x+_{j,r}] - a_{i,j} x+_{j,r}",
       {node_var("i"), node_var("j"), mode_var("r", 0, 1)}});
  add({"eq2.4-", "eq2.4", "[h_{i,0}, x-_{j,r}] + a_{i,j} x-_{j,r}",
       {node_var("i"), node_var("j"), mode_var("r", 0, 1)}});
  add({"eq2.5+", "eq2.5",
       "[h_{i,1} - 1/2 hbar h_{i,0} h_{i,0}, x+_{j,0}] - a_{i,j} (x+_{j,1} - 1/2 b_{i,j} (e1 - e2) x+_{j,0})",
       {node_var("i"), node_var("j")}});
  add({"eq2.5-", "eq2.5",
       "[h_{i,1} - 1/2 hbar h_{i,0} h_{i,0}, x-_{j,0}] + a_{i,j} (x-_{j,1} - 1/2 b_{i,j} (e1 - e2) x-_{j,0})",
       {node_var("i"), node_var("j")}});
  add({"eq2.6+", "eq2.6",
       "[x+_{i,1}, x+_{j,0}] - [x+_{i,0}, x+_{j,1}] - 1/2 a_{i,j} (e1 + e2) {x+_{i,0}, x+_{j,0}} + 1/2 "
       "b_{i,j} (e1 - e2) [x+_{i,0}, x+_{j,0}]",
       {node_var("i"), node_var("j")}});
  add({"eq2.6-", "eq2.6",
       "[x-_{i,1}, x-_{j,0}] - [x-_{i,0}, x-_{j,1}] + 1/2 a_{i,j} (e1 + e2) {x-_{i,0}, x-_{j,0}} + 1/2 "
       "b_{i,j} (e1 - e2) [x-_{i,0}, x-_{j,0}]",
       {node_var("i"), node_var("j")}});
  add({"eq2.7+a0", "eq2.7", "[x+_{i,0}, x+_{j,0}]", {node_var("i"), node_var("j")},
       Guard::DistinctNonAdjacent});
  add({"eq2.7-a0", "eq2.7", "[x-_{i,0}, x-_{j,0}]", {node_var("i"), node_var("j")},
       Guard::DistinctNonAdjacent});
  add({"eq2.7+a1", "eq2.7", "[x+_{i,0}, [x+_{i,0}, x+_{j,0}]]", {node_var("i"), node_var("j")},
       Guard::DistinctAdjacent});
  add({"eq2.7-a1", "eq2.7", "[x-_{i,0}, [x-_{i,0}, x-_{j,0}]]", {node_var("i"), node_var("j")},
       Guard::DistinctAdjacent});
  add({"eq2.8+", "eq2.8", "[x+_{i,0}, x+_{i,0}]", {node_var("i")}, Guard::OddNode});
  add({"eq2.8-", "eq2.8", "[x-_{i,0}, x-_{i,0}]", {node_var("i")}, Guard::OddNode});
  add({"eq2.9+", "eq2.9", "[[x+_{i-1,0}, x+_{i,0}], [x+_{i,0}, x+_{i+1,0}]]", {node_var("i")},
       Guard::OddNode});
  add({"eq2.9-", "eq2.9", "[[x-_{i-1,0}, x-_{i,0}], [x-_{i,0}, x-_{i+1,0}]]", {node_var("i")},
       Guard::OddNode});

  // --- infinite presentation at bounded modes ---
  add({"eq1.1", "eq1.1", "[h_{i,r}, h_{j,s}]",
       {node_var("i"), node_var("j"), mode_var("r", 0, 3), mode_var("s", 0, 3)}, Guard::None, 3});
  add({"eq1.2", "eq1.2", "[x+_{i,r}, x-_{j,s}] - delta_{i,j} h_{i,r+s}",
       {node_var("i"), node_var("j"), mode_var("r", 0, 3), mode_var("s", 0, 3)}, Guard::None, 3});
  add({"eq1.3+", "eq1.3", "[h_{i,0}, x+_{j,r}] - a_{i,j} x+_{j,r}",
       {node_var("i"), node_var("j"), mode_var("r", 0, 3)}, Guard::None, 3});
  add({"eq1.3-", "eq1.3", "[h_{i,0}, x-_{j,r}] + a_{i,j} x-_{j,r}",
       {node_var("i"), node_var("j"), mode_var("r", 0, 3)}, Guard::None, 3});
  add({"eq1.4+", "eq1.4",
       "[h_{i,r+1}, x+_{j,s}] - [h_{i,r}, x+_{j,s+1}] - 1/2 a_{i,j} (e1 + e2) {h_{i,r}, x+_{j,s}} + 1/2 "
       "b_{i,j} (e1 - e2) [h_{i,r}, x+_{j,s}]",
       {node_var("i"), node_var("j"), mode_var("r", 0, 3), mode_var("s", 0, 3)}, Guard::None, 3});
  add({"eq1.4-", "eq1.4",
       "[h_{i,r+1}, x-_{j,s}] - [h_{i,r}, x-_{j,s+1}] + 1/2 a_{i,j} (e1 + e2) {h_{i,r}, x-_{j,s}} + 1/2 "
       "b_{i,j} (e1 - e2) [h_{i,r}, x-_{j,s}]",
       {node_var("i"), node_var("j"), mode_var("r", 0, 3), mode_var("s", 0, 3)}, Guard::None, 3});
  add({"eq1.5+", "eq1.5",
       "[x+_{i,r+1}, x+_{j,s}] - [x+_{i,r}, x+_{j,s+1}] - 1/2 a_{i,j} (e1 + e2) {x+_{i,r}, x+_{j,s}} + 1/2 "
       "b_{i,j} (e1 - e2) [x+_{i,r}, x+_{j,s}]",
       {node_var("i"), node_var("j"), mode_var("r", 0, 3), mode_var("s", 0, 3)}, Guard::None, 3});
  add({"eq1.5-", "eq1.5",
       "[x-_{i,r+1}, x-_{j,s}] - [x-_{i,r}, x-_{j,s+1}] + 1/2 a_{i,j} (e1 + e2) {x-_{i,r}, x-_{j,s}} + 1/2 "
       "b_{i,j} (e1 - e2) [x-_{i,r}, x-_{j,s}]",
       {node_var("i"), node_var("j"), mode_var("r", 0, 3), mode_var("s", 0, 3)}, Guard::None, 3});
  add({"eq1.6+a0", "eq1.6", "[x+_{i,r}, x+_{j,s}]",
       {node_var("i"), node_var("j"), mode_var("r", 0, 1), mode_var("s", 0, 1)},
       Guard::DistinctNonAdjacent});
  add({"eq1.6-a0", "eq1.6", "[x-_{i,r}, x-_{j,s}]",
       {node_var("i"), node_var("j"), mode_var("r", 0, 1), mode_var("s", 0, 1)},
       Guard::DistinctNonAdjacent});
  add({"eq1.6+a1", "eq1.6", "sym{r1,r2}([x+_{i,r1}, [x+_{i,r2}, x+_{j,s}]])",
       {node_var("i"), node_var("j"), mode_var("r1", 0, 1), mode_var("r2", 0, 1), mode_var("s", 0, 1)},
       Guard::DistinctAdjacent});
  add({"eq1.6-a1", "eq1.6", "sym{r1,r2}([x-_{i,r1}, [x-_{i,r2}, x-_{j,s}]])",
       {node_var("i"), node_var("j"), mode_var("r1", 0, 1), mode_var("r2", 0, 1), mode_var("s", 0, 1)},
       Guard::DistinctAdjacent});
  add({"eq1.7+", "eq1.7", "[x+_{i,r}, x+_{i,s}]",
       {node_var("i"), mode_var("r", 0, 1), mode_var("s", 0, 1)}, Guard::OddNode});
  add({"eq1.7-", "eq1.7", "[x-_{i,r}, x-_{i,s}]",
       {node_var("i"), mode_var("r", 0, 1), mode_var("s", 0, 1)}, Guard::OddNode});
  add({"eq1.8+", "eq1.8", "[[x+_{i-1,r}, x+_{i,0}], [x+_{i,0}, x+_{i+1,s}]]",
       {node_var("i"), mode_var("r", 0, 1), mode_var("s", 0, 1)}, Guard::OddNode});
  add({"eq1.8-", "eq1.8", "[[x-_{i-1,r}, x-_{i,0}], [x-_{i,0}, x-_{i+1,s}]]",
       {node_var("i"), mode_var("r", 0, 1), mode_var("s", 0, 1)}, Guard::OddNode});

  // --- J-element identities ---
  auto add_j = [&](RelationSpec s) {
    s.uses_j = true;
    out.push_back(std::move(s));
  };
  add_j({"j3.3.1", "j3.3.1", "[Jh_{i}, h_{j,0}]", {node_var("i"), node_var("j")}});
  add_j({"j3.3.2+", "j3.3.2",
         "[Jh_{i}, x+_{j,0}] - a_{i,j} Jx+_{j} + 1/2 a_{i,j} b_{i,j} (e1 - e2) x+_{j,0}",
         {node_var("i"), node_var("j")}});
  add_j({"j3.3.2-", "j3.3.2",
         "[Jh_{i}, x-_{j,0}] + a_{i,j} Jx-_{j} - 1/2 a_{i,j} b_{i,j} (e1 - e2) x-_{j,0}",
         {node_var("i"), node_var("j")}});
  add_j({"j3.3.3+", "j3.3.3",
         "[Jx+_{i}, x+_{j,0}] - [x+_{i,0}, Jx+_{j}] + 1/2 b_{i,j} (e1 - e2) [x+_{i,0}, x+_{j,0}]",
         {node_var("i"), node_var("j")}});
  add_j({"j3.3.3-", "j3.3.3",
         "[Jx-_{i}, x-_{j,0}] - [x-_{i,0}, Jx-_{j}] + 1/2 b_{i,j} (e1 - e2) [x-_{i,0}, x-_{j,0}]",
         {node_var("i"), node_var("j")}});
  add_j({"j3.3.4a", "j3.3.4", "[Jx+_{i}, x-_{j,0}] - delta_{i,j} Jh_{i}", {node_var("i"), node_var("j")}});
  add_j({"j3.3.4b", "j3.3.4", "[x+_{i,0}, Jx-_{j}] - delta_{i,j} Jh_{j}", {node_var("i"), node_var("j")}});

  // --- Theorem 5.1 lemma instances (aliases of the minimalistic forms) ---
  add({"rel4", "rel4", "[x+_{i,1}, x-_{j,0}] - delta_{i,j} h_{i,1}", {node_var("i"), node_var("j")}});
  add({"rel5", "rel5",
       "[h_{i,1} - 1/2 hbar h_{i,0} h_{i,0}, x+_{j,0}] - a_{i,j} (x+_{j,1} - 1/2 b_{i,j} (e1 - e2) x+_{j,0})",
       {node_var("i"), node_var("j")}});
  add({"rel6", "rel6",
       "[x+_{i,1}, x+_{j,0}] - [x+_{i,0}, x+_{j,1}] - 1/2 a_{i,j} (e1 + e2) {x+_{i,0}, x+_{j,0}} + 1/2 "
       "b_{i,j} (e1 - e2) [x+_{i,0}, x+_{j,0}]",
       {node_var("i"), node_var("j")}});
  add({"rel7", "rel7", "[h_{i,1}, h_{j,1}]", {node_var("i"), node_var("j")}});

  return out;
}

}  // namespace

bool guard_holds(Guard g, const SuperSize& sz, const std::map<std::string, int>& env) {
  auto node = [&](const char* v) { return sz.mod_node(env.at(v)); };
  switch (g) {
    case Guard::None:
      return true;
    case Guard::DistinctNonAdjacent: {
      int i = node("i"), j = node("j");
      return i != j && cartan_affine(sz, i, j) == 0;
    }
    case Guard::DistinctAdjacent: {
      int i = node("i"), j = node("j");
      return i != j && std::abs(cartan_affine(sz, i, j)) == 1;
    }
    case Guard::OddNode: {
      int i = node("i");
      return i == 0 || i == sz.m;
    }
  }
  return false;
}

const std::vector<RelationSpec>& catalog() {
  static const std::vector<RelationSpec> all = build();
  return all;
}

std::vector<RelationSpec> catalog_subset(const std::vector<std::string>& selectors) {
  std::vector<RelationSpec> out;
  std::set<std::string> seen;
  for (const auto& sel : selectors) {
    bool matched = false;
    for (const auto& spec : catalog()) {
      bool hit = spec.id == sel || spec.family == sel ||
                 (sel.size() > 0 && spec.family.rfind(sel, 0) == 0 && (sel == "eq1" || sel == "eq2" || sel == "j" || sel == "rel"));
      if (hit && !seen.count(spec.id)) {
        out.push_back(spec);
        seen.insert(spec.id);
        matched = true;
      } else if (hit) {
        matched = true;
      }
    }
    if (!matched) throw std::invalid_argument("unknown relation selector: " + sel);
  }
  return out;
}

int minimalistic_family_count() {
  std::set<std::string> fams;
  for (const auto& s : catalog())
    if (s.family.rfind("eq2.", 0) == 0) fams.insert(s.family);
  return int(fams.size());
}

const RelationAst& parsed(const RelationSpec& spec) {
  static std::unordered_map<std::string, RelationAst> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(spec.id);
  if (it != cache.end()) return it->second;
  auto [pos, ok] = cache.emplace(spec.id, parse_relation(spec.text));
  return pos->second;
}

}  // namespace yangian::rel
