#include "termcheck/syntax.hpp"

#include <sstream>
#include <unordered_set>

namespace termcheck {

std::string SourcePos::to_string() const {
  return std::to_string(line) + ":" + std::to_string(column);
}

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::Const: return "constant";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::Bar: return "'|'";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Comma: return "','";
    case TokenKind::Semi: return "';'";
    case TokenKind::Equals: return "'='";
    case TokenKind::Arrow: return "'=>'";
    case TokenKind::KwCase: return "'case'";
    case TokenKind::KwOf: return "'of'";
    case TokenKind::KwLet: return "'let'";
    case TokenKind::KwIn: return "'in'";
    case TokenKind::Eof: return "end of input";
  }
  return "?";
}

LexError::LexError(SourcePos pos, const std::string& what)
    : std::runtime_error(pos.to_string() + ": " + what), pos_(pos) {}

namespace {

std::string join_expected(const std::set<std::string>& expected) {
  std::string out;
  for (const auto& e : expected) {
    if (!out.empty()) out += ", ";
    out += e;
  }
  return out;
}

}  // namespace

ParseError::ParseError(SourcePos pos, std::set<std::string> expected, const std::string& what)
    : std::runtime_error(pos.to_string() + ": " + what +
                         (expected.empty() ? "" : " (expected " + join_expected(expected) + ")")),
      pos_(pos),
      expected_(std::move(expected)) {}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

namespace {

bool is_ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '\'' ||
         c == '_';
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blanks();
      if (at_end()) break;
      out.push_back(next_token());
    }
    out.push_back(Token{TokenKind::Eof, "", eof_pos()});
    return out;
  }

 private:
  bool at_end() const { return i_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const { return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0'; }

  void bump() {
    last_ = pos_;
    if (src_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  // Last character of the source, or 1:1 for empty input.
  SourcePos eof_pos() const { return src_.empty() ? SourcePos{} : last_; }

  void skip_blanks() {
    for (;;) {
      if (at_end()) return;
      if (is_space(peek())) {
        bump();
      } else if (peek() == '(' && peek(1) == '*') {
        skip_comment();
      } else {
        return;
      }
    }
  }

  void skip_comment() {
    SourcePos start = pos_;
    int depth = 0;
    do {
      if (at_end()) throw LexError(start, "unterminated comment");
      if (peek() == '(' && peek(1) == '*') {
        bump();
        bump();
        ++depth;
      } else if (peek() == '*' && peek(1) == ')') {
        bump();
        bump();
        --depth;
      } else {
        bump();
      }
    } while (depth > 0);
  }

  Token next_token() {
    SourcePos start = pos_;
    char c = peek();
    if (is_ident_char(c)) {
      std::string name;
      while (!at_end() && is_ident_char(peek())) {
        name += peek();
        bump();
      }
      if (name == "case") return {TokenKind::KwCase, "", start};
      if (name == "of") return {TokenKind::KwOf, "", start};
      if (name == "let") return {TokenKind::KwLet, "", start};
      if (name == "in") return {TokenKind::KwIn, "", start};
      bool var = name[0] >= 'a' && name[0] <= 'z';
      return {var ? TokenKind::Ident : TokenKind::Const, std::move(name), start};
    }
    TokenKind kind;
    switch (c) {
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case '[': kind = TokenKind::LBracket; break;
      case ']': kind = TokenKind::RBracket; break;
      case '{': kind = TokenKind::LBrace; break;
      case '}': kind = TokenKind::RBrace; break;
      case '|': kind = TokenKind::Bar; break;
      case '.': kind = TokenKind::Dot; break;
      case ',': kind = TokenKind::Comma; break;
      case ';': kind = TokenKind::Semi; break;
      case '=':
        if (peek(1) == '>') {
          bump();
          bump();
          return {TokenKind::Arrow, "", start};
        }
        kind = TokenKind::Equals;
        break;
      default: {
        std::ostringstream msg;
        unsigned code = static_cast<unsigned char>(c);
        if (code >= 0x20 && code < 0x7f) {
          msg << "illegal character '" << c << "'";
        } else {
          msg << "illegal character 0x" << std::hex << code;
        }
        throw LexError(start, msg.str());
      }
    }
    bump();
    return {kind, "", start};
  }

  std::string_view src_;
  std::size_t i_ = 0;
  SourcePos pos_;
  SourcePos last_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

// ---------------------------------------------------------------------------
// Term construction and comparison
// ---------------------------------------------------------------------------

namespace {
TermPtr wrap(Term::Node node, SourcePos pos) {
  return std::make_shared<const Term>(Term{std::move(node), pos});
}
}  // namespace

TermPtr make_var(std::string name, SourcePos pos) { return wrap(Var{std::move(name)}, pos); }
TermPtr make_lam(std::string param, TermPtr body, SourcePos pos) {
  return wrap(Lam{std::move(param), std::move(body)}, pos);
}
TermPtr make_app(TermPtr fun, TermPtr arg, SourcePos pos) {
  return wrap(App{std::move(fun), std::move(arg)}, pos);
}
TermPtr make_con(std::string constant, TermPtr arg, SourcePos pos) {
  return wrap(Con{std::move(constant), std::move(arg)}, pos);
}
TermPtr make_case(TermPtr scrutinee, std::vector<Branch> branches, SourcePos pos) {
  return wrap(Case{std::move(scrutinee), std::move(branches)}, pos);
}
TermPtr make_tuple(std::vector<TupleEntry> entries, SourcePos pos) {
  return wrap(Tuple{std::move(entries)}, pos);
}
TermPtr make_proj(TermPtr tuple, std::string label, SourcePos pos) {
  return wrap(Proj{std::move(tuple), std::move(label)}, pos);
}
TermPtr make_let(std::vector<Binding> bindings, TermPtr body, SourcePos pos) {
  return wrap(Let{std::move(bindings), std::move(body)}, pos);
}

bool same_term(const Term& a, const Term& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Var>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, Lam>) {
          return x.param == y.param && same_term(*x.body, *y.body);
        } else if constexpr (std::is_same_v<T, App>) {
          return same_term(*x.fun, *y.fun) && same_term(*x.arg, *y.arg);
        } else if constexpr (std::is_same_v<T, Con>) {
          return x.constant == y.constant && same_term(*x.arg, *y.arg);
        } else if constexpr (std::is_same_v<T, Case>) {
          if (!same_term(*x.scrutinee, *y.scrutinee) || x.branches.size() != y.branches.size())
            return false;
          for (std::size_t i = 0; i < x.branches.size(); ++i) {
            const auto& l = x.branches[i];
            const auto& r = y.branches[i];
            if (l.constant != r.constant || l.binder != r.binder || !same_term(*l.body, *r.body))
              return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, Tuple>) {
          if (x.entries.size() != y.entries.size()) return false;
          for (std::size_t i = 0; i < x.entries.size(); ++i) {
            if (x.entries[i].label != y.entries[i].label ||
                !same_term(*x.entries[i].value, *y.entries[i].value))
              return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, Proj>) {
          return x.label == y.label && same_term(*x.tuple, *y.tuple);
        } else {
          static_assert(std::is_same_v<T, Let>);
          if (x.bindings.size() != y.bindings.size()) return false;
          for (std::size_t i = 0; i < x.bindings.size(); ++i) {
            if (x.bindings[i].name != y.bindings[i].name ||
                !same_term(*x.bindings[i].term, *y.bindings[i].term))
              return false;
          }
          return same_term(*x.body, *y.body);
        }
      },
      a.node);
}

std::string to_source(const Term& t) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Var>) {
          return x.name;
        } else if constexpr (std::is_same_v<T, Lam>) {
          return "([" + x.param + "]" + to_source(*x.body) + ")";
        } else if constexpr (std::is_same_v<T, App>) {
          return "(" + to_source(*x.fun) + " " + to_source(*x.arg) + ")";
        } else if constexpr (std::is_same_v<T, Con>) {
          return x.constant + "(" + to_source(*x.arg) + ")";
        } else if constexpr (std::is_same_v<T, Case>) {
          std::string out = "(case " + to_source(*x.scrutinee) + " of {";
          for (std::size_t i = 0; i < x.branches.size(); ++i) {
            const auto& b = x.branches[i];
            out += (i == 0 ? " " : " | ") + b.constant + " " + b.binder + " => " + to_source(*b.body);
          }
          return out + " })";
        } else if constexpr (std::is_same_v<T, Tuple>) {
          std::string out = "(";
          for (std::size_t i = 0; i < x.entries.size(); ++i) {
            if (i) out += ", ";
            out += x.entries[i].label + "=" + to_source(*x.entries[i].value);
          }
          return out + ")";
        } else if constexpr (std::is_same_v<T, Proj>) {
          return "(" + to_source(*x.tuple) + "." + x.label + ")";
        } else {
          std::string out = "(let ";
          for (std::size_t i = 0; i < x.bindings.size(); ++i) {
            if (i) out += ", ";
            out += x.bindings[i].name + " = " + to_source(*x.bindings[i].term);
          }
          return out + " in " + to_source(*x.body) + ")";
        }
      },
      t.node);
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {
    if (toks_.empty() || toks_.back().kind != TokenKind::Eof)
      throw ParseError({}, {}, "token list does not end in end of input");
  }

  Program program() {
    Program prog;
    while (!at(TokenKind::Eof)) {
      prog.statements.push_back(statement());
      expect(TokenKind::Semi);
    }
    return prog;
  }

  TermPtr lone_term() {
    TermPtr t = term();
    expect(TokenKind::Eof);
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(i_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  bool at(TokenKind k, std::size_t ahead = 0) const { return peek(ahead).kind == k; }

  const Token& take() {
    const Token& t = toks_[i_];
    if (i_ + 1 < toks_.size()) ++i_;
    return t;
  }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.text.empty() ? std::string(token_kind_name(t.kind))
                                       : std::string(token_kind_name(t.kind)) + " '" + t.text + "'";
    throw ParseError(t.pos, std::move(expected), "unexpected " + found);
  }

  const Token& expect(TokenKind k) {
    if (!at(k)) fail({std::string(token_kind_name(k))});
    return take();
  }

  static bool starts_atom(TokenKind k) {
    return k == TokenKind::Ident || k == TokenKind::Const || k == TokenKind::LParen;
  }

  Statement statement() {
    SourcePos pos = peek().pos;
    if (at(TokenKind::Ident) && at(TokenKind::Equals, 1)) {
      return Statement{Define{bindings()}, pos};
    }
    return Statement{Evaluate{term()}, pos};
  }

  std::vector<Binding> bindings() {
    std::vector<Binding> out;
    std::unordered_set<std::string> seen;
    do {
      const Token& name = expect(TokenKind::Ident);
      if (!seen.insert(name.text).second)
        throw ParseError(name.pos, {}, "duplicate binding '" + name.text + "'");
      expect(TokenKind::Equals);
      out.push_back(Binding{name.text, term(), name.pos});
    } while (at(TokenKind::Comma) && (take(), true));
    return out;
  }

  TermPtr term() {
    SourcePos pos = peek().pos;
    switch (peek().kind) {
      case TokenKind::LBracket: {
        take();
        std::string param = expect(TokenKind::Ident).text;
        expect(TokenKind::RBracket);
        return make_lam(std::move(param), term(), pos);
      }
      case TokenKind::KwCase: {
        take();
        TermPtr scrutinee = term();
        expect(TokenKind::KwOf);
        expect(TokenKind::LBrace);
        std::vector<Branch> branches;
        std::unordered_set<std::string> seen;
        do {
          const Token& c = expect(TokenKind::Const);
          if (!seen.insert(c.text).second)
            throw ParseError(c.pos, {}, "duplicate branch constant '" + c.text + "'");
          std::string binder;
          if (at(TokenKind::LParen)) {
            take();
            binder = expect(TokenKind::Ident).text;
            expect(TokenKind::RParen);
          } else {
            binder = expect(TokenKind::Ident).text;
          }
          expect(TokenKind::Arrow);
          branches.push_back(Branch{c.text, std::move(binder), term()});
        } while (at(TokenKind::Bar) && (take(), true));
        expect(TokenKind::RBrace);
        return make_case(std::move(scrutinee), std::move(branches), pos);
      }
      case TokenKind::KwLet: {
        take();
        auto bs = bindings();
        expect(TokenKind::KwIn);
        return make_let(std::move(bs), term(), pos);
      }
      default:
        return application();
    }
  }

  TermPtr application() {
    SourcePos pos = peek().pos;
    TermPtr head = postfix();
    while (starts_atom(peek().kind)) head = make_app(head, postfix(), pos);
    return head;
  }

  TermPtr postfix() {
    SourcePos pos = peek().pos;
    TermPtr t = atom();
    while (at(TokenKind::Dot)) {
      take();
      t = make_proj(t, expect(TokenKind::Const).text, pos);
    }
    return t;
  }

  // Content between '(' and ')': empty tuple, labeled tuple, or a single term.
  TermPtr paren_body(SourcePos pos) {
    if (at(TokenKind::RParen)) {
      take();
      return make_tuple({}, pos);
    }
    if (at(TokenKind::Const) && at(TokenKind::Equals, 1)) {
      std::vector<TupleEntry> entries;
      std::unordered_set<std::string> seen;
      do {
        const Token& label = expect(TokenKind::Const);
        if (!seen.insert(label.text).second)
          throw ParseError(label.pos, {}, "duplicate tuple label '" + label.text + "'");
        expect(TokenKind::Equals);
        entries.push_back(TupleEntry{label.text, term()});
      } while (at(TokenKind::Comma) && (take(), true));
      expect(TokenKind::RParen);
      return make_tuple(std::move(entries), pos);
    }
    TermPtr inner = term();
    expect(TokenKind::RParen);
    return inner;
  }

  TermPtr atom() {
    SourcePos pos = peek().pos;
    switch (peek().kind) {
      case TokenKind::Ident:
        return make_var(take().text, pos);
      case TokenKind::Const: {
        std::string c = take().text;
        if (at(TokenKind::LParen)) {
          SourcePos inner = take().pos;
          return make_con(std::move(c), paren_body(inner), pos);
        }
        // "O z" style: constructor applied to a single atom without parentheses.
        if (at(TokenKind::Ident) || at(TokenKind::Const)) return make_con(std::move(c), postfix(), pos);
        fail({"'('", "identifier", "constant"});
      }
      case TokenKind::LParen:
        take();
        return paren_body(pos);
      default:
        fail({"term"});
    }
  }

  const std::vector<Token>& toks_;
  std::size_t i_ = 0;
};

}  // namespace

Program parse_program(const std::vector<Token>& tokens) { return Parser(tokens).program(); }

Program parse_program(std::string_view source) { return parse_program(tokenize(source)); }

TermPtr parse_term(std::string_view source) {
  auto toks = tokenize(source);
  return Parser(toks).lone_term();
}

}  // namespace termcheck
