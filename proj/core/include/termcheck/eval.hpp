#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "termcheck/syntax.hpp"

namespace termcheck {

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

class Frame;
using Env = std::shared_ptr<const Frame>;

struct ConV {
  std::string constant;
  ValuePtr arg;
};
struct TupleV {
  std::vector<std::pair<std::string, ValuePtr>> entries;
};
struct ClosureV {
  std::string param;
  TermPtr body;
  Env env;
};

struct Value {
  std::variant<ConV, TupleV, ClosureV> node;
};

ValuePtr make_con_value(std::string constant, ValuePtr arg);
ValuePtr make_tuple_value(std::vector<std::pair<std::string, ValuePtr>> entries);
ValuePtr make_closure(std::string param, TermPtr body, Env env);

// An environment slot: an unevaluated binding term (closing over the frame
// that holds it) or an already computed value.
struct EnvSlot {
  std::variant<TermPtr, ValuePtr> content;
};

class Frame {
 public:
  Frame(Env parent, std::vector<std::pair<std::string, EnvSlot>> slots)
      : parent_(std::move(parent)), slots_(std::move(slots)) {}

  const Env& parent() const { return parent_; }
  const EnvSlot* find_local(const std::string& name) const;

 private:
  Env parent_;
  std::vector<std::pair<std::string, EnvSlot>> slots_;
};

// Extends env with one frame of mutually recursive bindings.
Env bind_recursive(Env env, const std::vector<Binding>& bindings);
Env bind_value(Env env, std::string name, ValuePtr value);

enum class RuntimeErrorKind {
  UnboundVariable,
  NoMatchingBranch,
  MissingLabel,
  ApplyNonFunction,
  CaseNonConstructor,
  ProjectNonTuple,
};

std::string_view runtime_error_kind_name(RuntimeErrorKind kind);

class RuntimeError : public std::runtime_error {
 public:
  RuntimeError(RuntimeErrorKind kind, SourcePos pos, const std::string& detail);
  RuntimeErrorKind kind() const { return kind_; }
  SourcePos pos() const { return pos_; }

 private:
  RuntimeErrorKind kind_;
  SourcePos pos_;
};

class FuelExhausted : public std::runtime_error {
 public:
  FuelExhausted() : std::runtime_error("evaluation step budget exhausted") {}
};

// Call-by-value evaluation. With a budget, every beta, case, projection and
// variable lookup step costs one unit.
ValuePtr evaluate(const TermPtr& term, const Env& env, std::optional<std::uint64_t> fuel = std::nullopt);

std::string render_value(const Value& v);

}  // namespace termcheck
