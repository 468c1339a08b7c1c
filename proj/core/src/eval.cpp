#include "termcheck/eval.hpp"

namespace termcheck {

ValuePtr make_con_value(std::string constant, ValuePtr arg) {
  return std::make_shared<const Value>(Value{ConV{std::move(constant), std::move(arg)}});
}
ValuePtr make_tuple_value(std::vector<std::pair<std::string, ValuePtr>> entries) {
  return std::make_shared<const Value>(Value{TupleV{std::move(entries)}});
}
ValuePtr make_closure(std::string param, TermPtr body, Env env) {
  return std::make_shared<const Value>(Value{ClosureV{std::move(param), std::move(body), std::move(env)}});
}

const EnvSlot* Frame::find_local(const std::string& name) const {
  for (const auto& [n, slot] : slots_)
    if (n == name) return &slot;
  return nullptr;
}

Env bind_recursive(Env env, const std::vector<Binding>& bindings) {
  std::vector<std::pair<std::string, EnvSlot>> slots;
  slots.reserve(bindings.size());
  for (const auto& b : bindings) slots.emplace_back(b.name, EnvSlot{b.term});
  return std::make_shared<const Frame>(std::move(env), std::move(slots));
}

Env bind_value(Env env, std::string name, ValuePtr value) {
  std::vector<std::pair<std::string, EnvSlot>> slots;
  slots.emplace_back(std::move(name), EnvSlot{std::move(value)});
  return std::make_shared<const Frame>(std::move(env), std::move(slots));
}

std::string_view runtime_error_kind_name(RuntimeErrorKind kind) {
  switch (kind) {
    case RuntimeErrorKind::UnboundVariable: return "unbound variable";
    case RuntimeErrorKind::NoMatchingBranch: return "no matching branch";
    case RuntimeErrorKind::MissingLabel: return "missing label";
    case RuntimeErrorKind::ApplyNonFunction: return "application of a non-function";
    case RuntimeErrorKind::CaseNonConstructor: return "case on a non-constructor";
    case RuntimeErrorKind::ProjectNonTuple: return "projection from a non-tuple";
  }
  return "runtime error";
}

RuntimeError::RuntimeError(RuntimeErrorKind kind, SourcePos pos, const std::string& detail)
    : std::runtime_error(pos.to_string() + ": " + std::string(runtime_error_kind_name(kind)) +
                         (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      pos_(pos) {}

namespace {

class Evaluator {
 public:
  explicit Evaluator(std::optional<std::uint64_t> fuel) : fuel_(fuel) {}

  ValuePtr eval(const TermPtr& term, const Env& env) {
    const Term& t = *term;
    return std::visit([&](const auto& node) { return step(node, t.pos, env); }, t.node);
  }

 private:
  void tick() {
    if (!fuel_) return;
    if (*fuel_ == 0) throw FuelExhausted();
    --*fuel_;
  }

  ValuePtr step(const Var& v, SourcePos pos, const Env& env) {
    tick();
    for (const Frame* f = env.get(); f; f = f->parent().get()) {
      const EnvSlot* slot = f->find_local(v.name);
      if (!slot) continue;
      if (const auto* value = std::get_if<ValuePtr>(&slot->content)) return *value;
      // Recursive bindings are re-evaluated on every lookup, inside their own frame.
      Env self(env, f);
      return eval(std::get<TermPtr>(slot->content), self);
    }
    throw RuntimeError(RuntimeErrorKind::UnboundVariable, pos, v.name);
  }

  ValuePtr step(const Lam& l, SourcePos, const Env& env) { return make_closure(l.param, l.body, env); }

  ValuePtr step(const App& a, SourcePos pos, const Env& env) {
    ValuePtr fun = eval(a.fun, env);
    ValuePtr arg = eval(a.arg, env);
    const auto* closure = std::get_if<ClosureV>(&fun->node);
    if (!closure) throw RuntimeError(RuntimeErrorKind::ApplyNonFunction, pos, render_value(*fun));
    tick();
    return eval(closure->body, bind_value(closure->env, closure->param, std::move(arg)));
  }

  ValuePtr step(const Con& c, SourcePos, const Env& env) { return make_con_value(c.constant, eval(c.arg, env)); }

  ValuePtr step(const Case& c, SourcePos pos, const Env& env) {
    ValuePtr scrutinee = eval(c.scrutinee, env);
    const auto* con = std::get_if<ConV>(&scrutinee->node);
    if (!con) throw RuntimeError(RuntimeErrorKind::CaseNonConstructor, pos, render_value(*scrutinee));
    tick();
    for (const auto& b : c.branches) {
      if (b.constant == con->constant) return eval(b.body, bind_value(env, b.binder, con->arg));
    }
    throw RuntimeError(RuntimeErrorKind::NoMatchingBranch, pos, con->constant);
  }

  ValuePtr step(const Tuple& t, SourcePos, const Env& env) {
    std::vector<std::pair<std::string, ValuePtr>> entries;
    entries.reserve(t.entries.size());
    for (const auto& e : t.entries) entries.emplace_back(e.label, eval(e.value, env));
    return make_tuple_value(std::move(entries));
  }

  ValuePtr step(const Proj& p, SourcePos pos, const Env& env) {
    ValuePtr tuple = eval(p.tuple, env);
    const auto* tv = std::get_if<TupleV>(&tuple->node);
    if (!tv) throw RuntimeError(RuntimeErrorKind::ProjectNonTuple, pos, render_value(*tuple));
    tick();
    for (const auto& [label, value] : tv->entries)
      if (label == p.label) return value;
    throw RuntimeError(RuntimeErrorKind::MissingLabel, pos, p.label);
  }

  ValuePtr step(const Let& l, SourcePos, const Env& env) { return eval(l.body, bind_recursive(env, l.bindings)); }

  std::optional<std::uint64_t> fuel_;
};

}  // namespace

ValuePtr evaluate(const TermPtr& term, const Env& env, std::optional<std::uint64_t> fuel) {
  return Evaluator(fuel).eval(term, env);
}

std::string render_value(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ConV>) {
          if (const auto* tuple = std::get_if<TupleV>(&x.arg->node)) {
            std::string out = x.constant + "(";
            for (std::size_t i = 0; i < tuple->entries.size(); ++i) {
              if (i) out += ", ";
              out += tuple->entries[i].first + "=" + render_value(*tuple->entries[i].second);
            }
            return out + ")";
          }
          return x.constant + "(" + render_value(*x.arg) + ")";
        } else if constexpr (std::is_same_v<T, TupleV>) {
          std::string out = "(";
          for (std::size_t i = 0; i < x.entries.size(); ++i) {
            if (i) out += ", ";
            out += x.entries[i].first + "=" + render_value(*x.entries[i].second);
          }
          return out + ")";
        } else {
          return "[" + x.param + "]<fn>";
        }
      },
      v.node);
}

}  // namespace termcheck
