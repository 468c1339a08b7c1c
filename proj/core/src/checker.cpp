#include "termcheck/checker.hpp"

namespace termcheck {

Call combine(const Call& second, const Call& first) {
  if (first.callee != second.caller)
    throw ComposeMismatch("cannot combine call ending in " + std::to_string(first.callee) +
                          " with call starting at " + std::to_string(second.caller));
  Call out;
  out.caller = first.caller;
  out.callee = second.callee;
  out.matrix = matrix_multiply(second.matrix, first.matrix);
  out.path = first.path;
  out.path.insert(out.path.end(), second.path.begin() + (second.path.empty() ? 0 : 1), second.path.end());
  return out;
}

EdgeKey edge_key(const Call& c) { return {c.caller, c.callee, c.matrix}; }

void CallGraph::add_vertex(FunctionInfo f) {
  if (f.id != vertices_.size()) throw std::invalid_argument("call graph vertices must be added in id order");
  vertices_.push_back(std::move(f));
}

bool CallGraph::add_edge(Call c) {
  if (c.caller >= vertices_.size() || c.callee >= vertices_.size())
    throw std::invalid_argument("call graph edge refers to unknown vertex");
  if (c.matrix.rows() != vertices_[c.callee].arity || c.matrix.cols() != vertices_[c.caller].arity)
    throw DimensionMismatch("call matrix dimensions do not match endpoint arities");
  if (!keys_.insert(edge_key(c)).second) return false;
  edges_.push_back(std::move(c));
  return true;
}

CallGraph complete_graph(const CallGraph& g) {
  CallGraph out(g.vertices());
  for (const auto& e : g.edges()) out.add_edge(e);
  const std::vector<Call> base = out.edges();

  // Only edges added in the previous round can yield new keys. Base edges are
  // scanned last-extracted first; this fixes which path is kept per key.
  std::size_t frontier = 0;
  while (frontier < out.edges().size()) {
    std::size_t end = out.edges().size();
    for (auto first = base.rbegin(); first != base.rend(); ++first) {
      for (std::size_t i = frontier; i < end; ++i) {
        if (first->callee != out.edges()[i].caller) continue;
        Call c = combine(out.edges()[i], *first);
        out.add_edge(std::move(c));
      }
    }
    frontier = end;
  }
  return out;
}

std::vector<BehaviourRow> recursion_behaviour(const CallGraph& completed, FunctionId f) {
  std::vector<BehaviourRow> rows;
  for (const auto& e : completed.edges())
    if (e.caller == f && e.callee == f) rows.push_back({diagonal(e.matrix), e.path});
  return rows;
}

namespace {

std::optional<TerminationOrder> search_order(std::vector<RelVector> rows, std::vector<std::size_t> columns) {
  TerminationOrder chosen;
  while (!rows.empty()) {
    std::optional<std::size_t> pick;
    for (std::size_t j = 0; j < columns.size() && !pick; ++j) {
      bool some_less = false;
      bool some_unknown = false;
      for (const auto& r : rows) {
        some_less |= r[j] == Relation::Less;
        some_unknown |= r[j] == Relation::Unknown;
      }
      if (some_less && !some_unknown) pick = j;
    }
    if (!pick) return std::nullopt;
    std::size_t j = *pick;
    chosen.push_back(columns[j]);
    std::vector<RelVector> rest;
    for (auto& r : rows) {
      if (r[j] == Relation::Less) continue;
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(j));
      rest.push_back(std::move(r));
    }
    rows = std::move(rest);
    columns.erase(columns.begin() + static_cast<std::ptrdiff_t>(j));
  }
  return chosen;
}

}  // namespace

std::optional<TerminationOrder> find_termination_order(const std::vector<RelVector>& rows, std::size_t arity) {
  for (const auto& r : rows)
    if (r.size() != arity) throw DimensionMismatch("behaviour row length differs from arity");
  std::vector<std::size_t> columns(arity);
  for (std::size_t i = 0; i < arity; ++i) columns[i] = i;
  return search_order(rows, std::move(columns));
}

// Positions before k must be Equal; "for all i <= k" would contradict the
// Less demanded at k itself, so the bound is read as strict.
bool verify_order_def1(const std::vector<RelVector>& rows, const std::vector<std::size_t>& permutation) {
  for (const auto& r : rows) {
    bool ok = false;
    for (std::size_t k = 0; k < permutation.size(); ++k) {
      Relation rel = r.at(permutation[k]);
      if (rel == Relation::Less) {
        ok = true;
        break;
      }
      if (rel != Relation::Equal) break;
    }
    if (!ok) return false;
  }
  return true;
}

Verdict check_function(const CallGraph& completed, FunctionId f) {
  auto behaviour = recursion_behaviour(completed, f);
  if (behaviour.empty()) return {Verdict::Kind::PassesNoRecursion, {}};
  std::vector<RelVector> rows;
  for (auto& b : behaviour) rows.push_back(std::move(b.diagonal));
  if (auto order = find_termination_order(rows, completed.vertex(f).arity))
    return {Verdict::Kind::PassesWithOrder, std::move(*order)};
  return {Verdict::Kind::Fails, {}};
}

}  // namespace termcheck
