#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace termcheck {

struct SourcePos {
  int line = 1;
  int column = 1;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
  std::string to_string() const;
};

enum class TokenKind {
  Ident,
  Const,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Bar,
  Dot,
  Comma,
  Semi,
  Equals,
  Arrow,
  KwCase,
  KwOf,
  KwLet,
  KwIn,
  Eof,
};

std::string_view token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::Eof;
  std::string text;  // identifier name; empty for punctuation
  SourcePos pos;

  friend bool operator==(const Token& a, const Token& b) {
    return a.kind == b.kind && a.text == b.text;
  }
};

class LexError : public std::runtime_error {
 public:
  LexError(SourcePos pos, const std::string& what);
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, std::set<std::string> expected, const std::string& what);
  SourcePos pos() const { return pos_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::set<std::string> expected_;
};

// Splits source text into tokens. The returned list always ends in Eof.
// "(* ... *)" comments nest.
std::vector<Token> tokenize(std::string_view source);

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Var {
  std::string name;
};
struct Lam {
  std::string param;
  TermPtr body;
};
struct App {
  TermPtr fun;
  TermPtr arg;
};
struct Con {
  std::string constant;
  TermPtr arg;
};
struct Branch {
  std::string constant;
  std::string binder;
  TermPtr body;
};
struct Case {
  TermPtr scrutinee;
  std::vector<Branch> branches;
};
struct TupleEntry {
  std::string label;
  TermPtr value;
};
struct Tuple {
  std::vector<TupleEntry> entries;
};
struct Proj {
  TermPtr tuple;
  std::string label;
};
struct Binding {
  std::string name;
  TermPtr term;
  SourcePos pos;
};
struct Let {
  std::vector<Binding> bindings;
  TermPtr body;
};

struct Term {
  using Node = std::variant<Var, Lam, App, Con, Case, Tuple, Proj, Let>;
  Node node;
  SourcePos pos;
};

TermPtr make_var(std::string name, SourcePos pos = {});
TermPtr make_lam(std::string param, TermPtr body, SourcePos pos = {});
TermPtr make_app(TermPtr fun, TermPtr arg, SourcePos pos = {});
TermPtr make_con(std::string constant, TermPtr arg, SourcePos pos = {});
TermPtr make_case(TermPtr scrutinee, std::vector<Branch> branches, SourcePos pos = {});
TermPtr make_tuple(std::vector<TupleEntry> entries, SourcePos pos = {});
TermPtr make_proj(TermPtr tuple, std::string label, SourcePos pos = {});
TermPtr make_let(std::vector<Binding> bindings, TermPtr body, SourcePos pos = {});

// Structural equality; source positions are ignored.
bool same_term(const Term& a, const Term& b);

// Fully parenthesized rendering that parses back to the same term.
std::string to_source(const Term& t);

// ---------------------------------------------------------------------------
// Programs
// ---------------------------------------------------------------------------

struct Evaluate {
  TermPtr term;
};
struct Define {
  std::vector<Binding> bindings;
};
struct Statement {
  std::variant<Evaluate, Define> node;
  SourcePos pos;
};
struct Program {
  std::vector<Statement> statements;
};

Program parse_program(const std::vector<Token>& tokens);
Program parse_program(std::string_view source);

// Parses a single term; the token list must contain nothing else before Eof.
TermPtr parse_term(std::string_view source);

}  // namespace termcheck
