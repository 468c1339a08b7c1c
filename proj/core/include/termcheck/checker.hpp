#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "termcheck/extract.hpp"
#include "termcheck/relations.hpp"

namespace termcheck {

class ComposeMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Call `first` followed by call `second`: caller of first to callee of second,
// matrix second * first, paths joined at the shared vertex.
Call combine(const Call& second, const Call& first);

// Edge identity. Paths are not part of it.
using EdgeKey = std::tuple<FunctionId, FunctionId, CallMatrix>;
EdgeKey edge_key(const Call& c);

// Multigraph of calls, deduplicated by (caller, callee, matrix). The first
// inserted path for a key is the one kept.
class CallGraph {
 public:
  CallGraph() = default;
  explicit CallGraph(std::vector<FunctionInfo> vertices) : vertices_(std::move(vertices)) {}

  void add_vertex(FunctionInfo f);
  // Returns false when an edge with the same key already exists.
  bool add_edge(Call c);

  const std::vector<FunctionInfo>& vertices() const { return vertices_; }
  const FunctionInfo& vertex(FunctionId id) const { return vertices_.at(id); }
  const std::vector<Call>& edges() const { return edges_; }
  bool contains(const EdgeKey& key) const { return keys_.count(key) != 0; }
  std::set<EdgeKey> key_set() const { return keys_; }

 private:
  std::vector<FunctionInfo> vertices_;
  std::vector<Call> edges_;
  std::set<EdgeKey> keys_;
};

// Smallest superset of g's edges closed under combination, computed as the
// fixpoint of E(n+1) = E(n) + E(n) o E with the base edges applied first.
CallGraph complete_graph(const CallGraph& g);

struct BehaviourRow {
  RelVector diagonal;
  std::vector<FunctionId> path;
};

// Diagonals of every f -> f edge of a completed graph, in edge order.
std::vector<BehaviourRow> recursion_behaviour(const CallGraph& completed, FunctionId f);

using TerminationOrder = std::vector<std::size_t>;

// Lexicographic order search: repeatedly pick the smallest parameter that
// decreases in some row and is never Unknown, discard the rows where it
// decreases, and continue on the rest. Returns nullopt when stuck.
std::optional<TerminationOrder> find_termination_order(const std::vector<RelVector>& rows, std::size_t arity);

// Direct check of a full permutation: every row must have a Less at some
// position k of the permutation with Equal at all positions before k.
bool verify_order_def1(const std::vector<RelVector>& rows, const std::vector<std::size_t>& permutation);

struct Verdict {
  enum class Kind { PassesNoRecursion, PassesWithOrder, Fails };
  Kind kind = Kind::PassesNoRecursion;
  TerminationOrder order;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

Verdict check_function(const CallGraph& completed, FunctionId f);

}  // namespace termcheck
