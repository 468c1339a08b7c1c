#include "termcheck/extract.hpp"

#include <algorithm>

namespace termcheck {

void RelationContext::bind_vector(std::string name, RelVector v) {
  scope_.emplace_back(std::move(name), std::move(v));
}

void RelationContext::bind_function(std::string name, FunctionId id) { scope_.emplace_back(std::move(name), id); }

void RelationContext::bind_unknown(std::string name) { bind_vector(std::move(name), unknown()); }

void RelationContext::bind_param(std::string name, std::size_t i) {
  RelVector v = unknown();
  v.at(i) = Relation::Equal;
  bind_vector(std::move(name), std::move(v));
}

const RelationContext::Entry* RelationContext::lookup(const std::string& name) const {
  for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
    if (it->first == name) return &it->second;
  return nullptr;
}

RelationContext RelationContext::rebased(std::size_t arity) const {
  RelationContext out(arity);
  out.scope_.reserve(scope_.size());
  for (const auto& [name, entry] : scope_) {
    if (const auto* id = std::get_if<FunctionId>(&entry)) {
      out.bind_function(name, *id);
    } else {
      out.bind_unknown(name);
    }
  }
  return out;
}

namespace {

// Head of an application spine and its arguments in order.
const Term& spine(const Term& t, std::vector<const Term*>& args) {
  const Term* head = &t;
  while (const auto* app = std::get_if<App>(&head->node)) {
    args.push_back(app->arg.get());
    head = app->fun.get();
  }
  std::reverse(args.begin(), args.end());
  return *head;
}

}  // namespace

RelVector relation_to_params(const Term& t, const RelationContext& ctx) {
  if (const auto* var = std::get_if<Var>(&t.node)) {
    const auto* entry = ctx.lookup(var->name);
    if (entry) {
      if (const auto* v = std::get_if<RelVector>(entry)) return *v;
    }
    return ctx.unknown();
  }
  if (const auto* proj = std::get_if<Proj>(&t.node)) return relation_to_params(*proj->tuple, ctx);
  if (std::holds_alternative<App>(t.node)) {
    std::vector<const Term*> args;
    const Term& head = spine(t, args);
    if (std::holds_alternative<Var>(head.node)) return relation_to_params(head, ctx);
  }
  return ctx.unknown();
}

FunctionId CallExtractor::register_function(const Binding& b, bool nested) {
  FunctionInfo info;
  info.id = functions_.size();
  info.display_name = b.name;
  info.definition_site = b.pos;
  info.declaration_order = info.id;
  info.nested = nested;
  for (const Term* t = b.term.get(); const auto* lam = std::get_if<Lam>(&t->node); t = lam->body.get())
    info.params.push_back(lam->param);
  info.arity = info.params.size();
  functions_.push_back(std::move(info));
  return functions_.back().id;
}

void CallExtractor::analyse_function(FunctionId id, const TermPtr& term, const RelationContext& outer) {
  RelationContext ctx = outer.rebased(functions_[id].arity);
  const Term* body = term.get();
  for (std::size_t i = 0; i < functions_[id].arity; ++i) {
    const auto& lam = std::get<Lam>(body->node);
    ctx.bind_param(lam.param, i);
    body = lam.body.get();
  }
  walk(*body, ctx, id);
}

void CallExtractor::emit_call(FunctionId caller, FunctionId callee, const std::vector<const Term*>& args,
                              const RelationContext& ctx) {
  std::size_t rows = functions_[callee].arity;
  std::size_t cols = functions_[caller].arity;
  std::vector<RelVector> matrix(rows, RelVector(cols, Relation::Unknown));
  for (std::size_t j = 0; j < rows && j < args.size(); ++j) matrix[j] = relation_to_params(*args[j], ctx);
  calls_.push_back(Call{caller, callee, CallMatrix::from_rows(matrix, cols), {caller, callee}});
}

void CallExtractor::walk(const Term& t, RelationContext& ctx, FunctionId current) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Var>) {
          const auto* entry = ctx.lookup(node.name);
          if (entry && std::holds_alternative<FunctionId>(*entry))
            emit_call(current, std::get<FunctionId>(*entry), {}, ctx);
        } else if constexpr (std::is_same_v<T, App>) {
          std::vector<const Term*> args;
          const Term& head = spine(t, args);
          const RelationContext::Entry* entry = nullptr;
          if (const auto* var = std::get_if<Var>(&head.node)) entry = ctx.lookup(var->name);
          if (entry && std::holds_alternative<FunctionId>(*entry)) {
            emit_call(current, std::get<FunctionId>(*entry), args, ctx);
          } else {
            walk(head, ctx, current);
          }
          for (const Term* a : args) walk(*a, ctx, current);
        } else if constexpr (std::is_same_v<T, Lam>) {
          auto m = ctx.mark();
          ctx.bind_unknown(node.param);
          walk(*node.body, ctx, current);
          ctx.restore(m);
        } else if constexpr (std::is_same_v<T, Con>) {
          walk(*node.arg, ctx, current);
        } else if constexpr (std::is_same_v<T, Case>) {
          walk(*node.scrutinee, ctx, current);
          RelVector smaller = relation_to_params(*node.scrutinee, ctx);
          for (auto& r : smaller) r = rel_times(Relation::Less, r);
          for (const auto& b : node.branches) {
            auto m = ctx.mark();
            ctx.bind_vector(b.binder, smaller);
            walk(*b.body, ctx, current);
            ctx.restore(m);
          }
        } else if constexpr (std::is_same_v<T, Tuple>) {
          for (const auto& e : node.entries) walk(*e.value, ctx, current);
        } else if constexpr (std::is_same_v<T, Proj>) {
          walk(*node.tuple, ctx, current);
        } else {
          static_assert(std::is_same_v<T, Let>);
          auto m = ctx.mark();
          std::vector<FunctionId> ids;
          for (const auto& b : node.bindings) ids.push_back(register_function(b, true));
          for (std::size_t i = 0; i < ids.size(); ++i) ctx.bind_function(node.bindings[i].name, ids[i]);
          for (std::size_t i = 0; i < ids.size(); ++i) analyse_function(ids[i], node.bindings[i].term, ctx);
          walk(*node.body, ctx, current);
          ctx.restore(m);
        }
      },
      t.node);
}

std::vector<FunctionId> CallExtractor::add_definitions(const Define& def) {
  FunctionId first = functions_.size();
  std::vector<FunctionId> outer;
  for (const auto& b : def.bindings) outer.push_back(register_function(b, false));
  for (std::size_t i = 0; i < outer.size(); ++i) globals_[def.bindings[i].name] = outer[i];

  RelationContext top;
  for (const auto& [name, id] : globals_) top.bind_function(name, id);
  for (std::size_t i = 0; i < outer.size(); ++i) analyse_function(outer[i], def.bindings[i].term, top);

  std::vector<FunctionId> introduced;
  for (FunctionId id = first; id < functions_.size(); ++id) introduced.push_back(id);
  return introduced;
}

Extraction extract_calls(const Program& program) {
  CallExtractor ex;
  for (const auto& s : program.statements)
    if (const auto* def = std::get_if<Define>(&s.node)) ex.add_definitions(*def);
  return Extraction{ex.functions(), ex.calls()};
}

}  // namespace termcheck
