#include "termcheck/driver.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "termcheck/eval.hpp"

namespace termcheck {

std::string render_call_line(const CallGraph& g, const BehaviourRow& row) {
  std::string out = render_relations(row.diagonal) + ":";
  for (std::size_t i = 0; i < row.path.size(); ++i) {
    out += i == 0 ? " " : " -> ";
    out += g.vertex(row.path[i]).display_name;
  }
  return out;
}

std::string render_verdict_line(const std::string& name, const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::PassesNoRecursion:
      return name + " passes termination check";
    case Verdict::Kind::PassesWithOrder: {
      std::string out = name + " passes termination check by lexical order";
      for (auto i : v.order) out += " " + std::to_string(i);
      return out;
    }
    case Verdict::Kind::Fails:
      return name + " FAILS termination check";
  }
  return name;
}

std::vector<BehaviourRow> ordered_behaviour(const CallGraph& completed, FunctionId f) {
  auto rows = recursion_behaviour(completed, f);
  auto names = [&](const BehaviourRow& r) {
    std::vector<std::string> out;
    for (auto id : r.path) out.push_back(completed.vertex(id).display_name);
    return out;
  };
  std::stable_sort(rows.begin(), rows.end(), [&](const BehaviourRow& a, const BehaviourRow& b) {
    if (a.path.size() != b.path.size()) return a.path.size() < b.path.size();
    auto na = names(a);
    auto nb = names(b);
    if (na != nb) return na < nb;
    return a.path < b.path;
  });
  return rows;
}

namespace {

CallGraph graph_of(const CallExtractor& ex) {
  CallGraph g(ex.functions());
  for (const auto& c : ex.calls()) g.add_edge(c);
  return g;
}

void print_matrix(std::ostream& out, const CallMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) out << "    " << render_relations(m.row(r)) << "\n";
}

}  // namespace

RunResult run(std::string_view source, const RunOptions& options) {
  RunResult res;
  Program program;
  try {
    program = parse_program(source);
  } catch (const LexError& e) {
    res.errors = std::string("lexical error at ") + e.what() + "\n";
    res.exit_code = kExitParseError;
    return res;
  } catch (const ParseError& e) {
    res.errors = std::string("parse error at ") + e.what() + "\n";
    res.exit_code = kExitParseError;
    return res;
  }

  std::ostringstream out;
  CallExtractor extractor;
  Env env;
  bool any_failed = false;

  for (const auto& stmt : program.statements) {
    if (const auto* def = std::get_if<Define>(&stmt.node)) {
      env = bind_recursive(env, def->bindings);
      auto introduced = extractor.add_definitions(*def);
      if (options.eval_only) continue;
      CallGraph completed = complete_graph(graph_of(extractor));
      for (FunctionId id : introduced) {
        for (const auto& row : ordered_behaviour(completed, id)) {
          out << render_call_line(completed, row) << "\n";
          if (options.verbose) {
            for (const auto& e : completed.edges()) {
              if (e.caller == id && e.callee == id && e.path == row.path) print_matrix(out, e.matrix);
            }
          }
        }
        Verdict v = check_function(completed, id);
        any_failed |= v.kind == Verdict::Kind::Fails;
        out << render_verdict_line(completed.vertex(id).display_name, v) << "\n";
      }
      continue;
    }
    if (options.check_only) continue;
    const auto& eval = std::get<Evaluate>(stmt.node);
    try {
      ValuePtr v = evaluate(eval.term, env, options.fuel);
      out << "result: " << render_value(*v) << "\n";
    } catch (const RuntimeError& e) {
      res.errors = std::string("runtime error at ") + e.what() + "\n";
      res.exit_code = kExitRuntimeError;
      break;
    } catch (const FuelExhausted& e) {
      res.errors = std::string("runtime error at ") + stmt.pos.to_string() + ": " + e.what() + "\n";
      res.exit_code = kExitRuntimeError;
      break;
    }
  }

  res.output = out.str();
  res.graph = graph_of(extractor);
  if (res.exit_code == kExitOk && options.strict && any_failed) res.exit_code = kExitStrictFailure;
  return res;
}

std::string export_dot(const CallGraph& g) {
  std::map<std::string, int> uses;
  for (const auto& v : g.vertices()) ++uses[v.display_name];
  auto node = [&](FunctionId id) {
    const auto& v = g.vertex(id);
    std::string name = uses[v.display_name] > 1 ? v.display_name + "#" + std::to_string(id) : v.display_name;
    return "\"" + name + "\"";
  };

  std::vector<const Call*> edges;
  for (const auto& e : g.edges()) edges.push_back(&e);
  std::sort(edges.begin(), edges.end(),
            [](const Call* a, const Call* b) { return edge_key(*a) < edge_key(*b); });

  std::ostringstream out;
  out << "digraph calls {\n";
  for (const auto& v : g.vertices()) out << "  " << node(v.id) << ";\n";
  for (const Call* e : edges)
    out << "  " << node(e->caller) << " -> " << node(e->callee) << " [label=\"" << e->matrix.compact() << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace termcheck
