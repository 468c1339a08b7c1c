#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "termcheck/relations.hpp"
#include "termcheck/syntax.hpp"

namespace termcheck {

using FunctionId = std::size_t;

struct FunctionInfo {
  FunctionId id = 0;
  std::string display_name;
  std::size_t arity = 0;
  std::vector<std::string> params;
  SourcePos definition_site;
  std::size_t declaration_order = 0;
  bool nested = false;  // introduced by a let inside another binding
};

struct Call {
  FunctionId caller = 0;
  FunctionId callee = 0;
  CallMatrix matrix;  // callee arity x caller arity
  std::vector<FunctionId> path;
};

// Variables in scope while analysing one function body. A name maps either to
// its relation vector w.r.t. the enclosing function's parameters or to a
// statically known function.
class RelationContext {
 public:
  using Entry = std::variant<RelVector, FunctionId>;

  explicit RelationContext(std::size_t arity = 0) : arity_(arity) {}

  std::size_t arity() const { return arity_; }

  void bind_vector(std::string name, RelVector v);
  void bind_function(std::string name, FunctionId id);
  // Binds name to the all-Unknown vector.
  void bind_unknown(std::string name);
  // Binds name to parameter i of the enclosing function (Equal at slot i).
  void bind_param(std::string name, std::size_t i);

  const Entry* lookup(const std::string& name) const;

  std::size_t mark() const { return scope_.size(); }
  void restore(std::size_t mark) { scope_.resize(mark); }

  // Same function bindings, all variables reset to Unknown, new basis arity.
  RelationContext rebased(std::size_t arity) const;

  RelVector unknown() const { return RelVector(arity_, Relation::Unknown); }

 private:
  std::size_t arity_;
  std::vector<std::pair<std::string, Entry>> scope_;
};

// How a term's value relates in size to each parameter of the function under
// analysis, by constructor elimination, projection, and application of a
// related variable. Anything else is Unknown.
RelVector relation_to_params(const Term& t, const RelationContext& ctx);

// Incremental call extraction over a sequence of definition statements.
// Names resolve to the most recent definition seen so far.
class CallExtractor {
 public:
  // Registers every binding of the statement and the functions defined by
  // lets inside them, and records their calls. Returns the new function ids,
  // outer bindings first, then let-nested functions, each in source order.
  std::vector<FunctionId> add_definitions(const Define& def);

  const std::vector<FunctionInfo>& functions() const { return functions_; }
  const std::vector<Call>& calls() const { return calls_; }

 private:
  FunctionId register_function(const Binding& b, bool nested);
  void analyse_function(FunctionId id, const TermPtr& term, const RelationContext& outer);
  void walk(const Term& t, RelationContext& ctx, FunctionId current);
  void emit_call(FunctionId caller, FunctionId callee, const std::vector<const Term*>& args,
                 const RelationContext& ctx);

  std::vector<FunctionInfo> functions_;
  std::vector<Call> calls_;
  std::map<std::string, FunctionId> globals_;
};

struct Extraction {
  std::vector<FunctionInfo> functions;
  std::vector<Call> calls;
};

// Runs CallExtractor over every Define statement of the program.
Extraction extract_calls(const Program& program);

}  // namespace termcheck
