#include <random>

#include "doctest.h"
#include "termcheck/syntax.hpp"

using namespace termcheck;

namespace {

std::vector<TokenKind> kinds(const std::vector<Token>& toks) {
  std::vector<TokenKind> out;
  for (const auto& t : toks) out.push_back(t.kind);
  return out;
}

Token tok(TokenKind k, std::string text = "") { return Token{k, std::move(text), {}}; }

// Does (line, column) name a character of the source? Empty input allows 1:1.
bool inside(std::string_view src, SourcePos pos) {
  if (src.empty()) return pos.line == 1 && pos.column == 1;
  int line = 1, col = 1;
  for (char c : src) {
    if (line == pos.line && col == pos.column) return true;
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("tokenize splits on whitespace and punctuation") {
  CHECK(tokenize("add one one;") == std::vector<Token>{tok(TokenKind::Ident, "add"), tok(TokenKind::Ident, "one"),
                                                      tok(TokenKind::Ident, "one"), tok(TokenKind::Semi),
                                                      tok(TokenKind::Eof)});

  CHECK(tokenize("S x' => S(add x' y)") ==
        std::vector<Token>{tok(TokenKind::Const, "S"), tok(TokenKind::Ident, "x'"), tok(TokenKind::Arrow),
                           tok(TokenKind::Const, "S"), tok(TokenKind::LParen), tok(TokenKind::Ident, "add"),
                           tok(TokenKind::Ident, "x'"), tok(TokenKind::Ident, "y"), tok(TokenKind::RParen),
                           tok(TokenKind::Eof)});
}

TEST_CASE("comments are skipped and nest") {
  CHECK(tokenize("(* f (S(S(O()))) (S(S(O()))); *)") == std::vector<Token>{tok(TokenKind::Eof)});
  CHECK(kinds(tokenize("a (* x (* y *) z *) b")) ==
        std::vector<TokenKind>{TokenKind::Ident, TokenKind::Ident, TokenKind::Eof});
  CHECK(kinds(tokenize("()")) == std::vector<TokenKind>{TokenKind::LParen, TokenKind::RParen, TokenKind::Eof});
}

TEST_CASE("reserved words, arrows and identifier classes") {
  CHECK(kinds(tokenize("case of let in = => | . , { } [ ]")) ==
        std::vector<TokenKind>{TokenKind::KwCase, TokenKind::KwOf, TokenKind::KwLet, TokenKind::KwIn,
                               TokenKind::Equals, TokenKind::Arrow, TokenKind::Bar, TokenKind::Dot,
                               TokenKind::Comma, TokenKind::LBrace, TokenKind::RBrace, TokenKind::LBracket,
                               TokenKind::RBracket, TokenKind::Eof});
  auto t = tokenize("cases le_nat Lim _x 'a x'' = =>");
  REQUIRE(t.size() == 9);
  CHECK(t[0] == tok(TokenKind::Ident, "cases"));
  CHECK(t[1] == tok(TokenKind::Ident, "le_nat"));
  CHECK(t[2] == tok(TokenKind::Const, "Lim"));
  CHECK(t[3] == tok(TokenKind::Const, "_x"));
  CHECK(t[4] == tok(TokenKind::Const, "'a"));
  CHECK(t[5] == tok(TokenKind::Ident, "x''"));
  CHECK(t[6].kind == TokenKind::Equals);
  CHECK(t[7].kind == TokenKind::Arrow);
}

TEST_CASE("token positions are 1-based line and column") {
  auto t = tokenize("f =\n  [x] x;");
  CHECK(t[0].pos == SourcePos{1, 1});
  CHECK(t[1].pos == SourcePos{1, 3});
  CHECK(t[2].pos == SourcePos{2, 3});
  CHECK(t[3].pos == SourcePos{2, 4});
}

TEST_CASE("lexical errors carry positions") {
  try {
    tokenize("a\n  b # c");
    FAIL("expected LexError");
  } catch (const LexError& e) {
    CHECK(e.pos() == SourcePos{2, 5});
  }
  try {
    tokenize("x (* never (* closed *)");
    FAIL("expected LexError");
  } catch (const LexError& e) {
    CHECK(e.pos() == SourcePos{1, 3});
  }
  CHECK_THROWS_AS(tokenize("a > b"), LexError);
}

TEST_CASE("parse_program on the addition example") {
  auto prog = parse_program(
      "add = [x][y]case x of\n"
      "        { O z => y\n"
      "        | S x' => S(add x' y) };\n"
      "one = S(O());\n"
      "add one one;\n");
  REQUIRE(prog.statements.size() == 3);
  CHECK(std::holds_alternative<Define>(prog.statements[0].node));
  CHECK(std::holds_alternative<Define>(prog.statements[1].node));
  CHECK(std::holds_alternative<Evaluate>(prog.statements[2].node));

  const auto& add = std::get<Define>(prog.statements[0].node).bindings.at(0);
  CHECK(add.name == "add");
  CHECK(same_term(*add.term, *parse_term("[x][y]case x of { O z => y | S x' => S(add x' y) }")));
}

TEST_CASE("grouping, precedence and constructor forms") {
  auto first_term = [](std::string_view src) {
    auto prog = parse_program(src);
    REQUIRE(prog.statements.size() == 1);
    return std::get<Evaluate>(prog.statements[0].node).term;
  };
  CHECK(same_term(*first_term("((x));"), *make_var("x")));
  CHECK(same_term(*first_term("f x y.L;"),
                  *make_app(make_app(make_var("f"), make_var("x")), make_proj(make_var("y"), "L"))));
  CHECK(same_term(*parse_term("O()"), *make_con("O", make_tuple({}))));
  CHECK(same_term(*parse_term("Cons(HD=h,TL=t)"),
                  *make_con("Cons", make_tuple({{"HD", make_var("h")}, {"TL", make_var("t")}}))));
  CHECK(same_term(*parse_term("S(y)"), *make_con("S", make_var("y"))));
  CHECK(same_term(*parse_term("O z"), *make_con("O", make_var("z"))));
  CHECK(same_term(*parse_term("(X=a, Y=b).Y"),
                  *make_proj(make_tuple({{"X", make_var("a")}, {"Y", make_var("b")}}), "Y")));
  CHECK(same_term(*parse_term("()"), *make_tuple({})));
  // Lambda bodies extend as far right as possible.
  CHECK(same_term(*parse_term("[x] f x y"),
                  *make_lam("x", make_app(make_app(make_var("f"), make_var("x")), make_var("y")))));
  CHECK(same_term(*parse_term("let a = b, c = d in a c"),
                  *make_let({{"a", make_var("b"), {}}, {"c", make_var("d"), {}}},
                            make_app(make_var("a"), make_var("c")))));
  // Parenthesized binder in a pattern.
  CHECK(same_term(*parse_term("case x of { S(y) => y }"), *parse_term("case x of { S y => y }")));
}

TEST_CASE("define statements bind several names at once") {
  auto prog = parse_program("f = [x] g x, g = [y] f y; zip'= [l]l;");
  REQUIRE(prog.statements.size() == 2);
  const auto& d = std::get<Define>(prog.statements[0].node);
  REQUIRE(d.bindings.size() == 2);
  CHECK(d.bindings[0].name == "f");
  CHECK(d.bindings[1].name == "g");
  CHECK(std::get<Define>(prog.statements[1].node).bindings[0].name == "zip'");
  CHECK(parse_program("").statements.empty());
  CHECK(parse_program("  (* nothing *) ").statements.empty());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_program("f x"), ParseError);
  CHECK_THROWS_AS(parse_program("f = ;"), ParseError);
  CHECK_THROWS_AS(parse_program("case x of { A a => a | A b => b };"), ParseError);
  CHECK_THROWS_AS(parse_program("(X=a, X=b);"), ParseError);
  CHECK_THROWS_AS(parse_program("f = a, f = b;"), ParseError);
  CHECK_THROWS_AS(parse_program("let x = a, x = b in x;"), ParseError);
  CHECK_THROWS_AS(parse_program("S;"), ParseError);
  CHECK_THROWS_AS(parse_program("x.y;"), ParseError);
  CHECK_THROWS_AS(parse_program("[X] x;"), ParseError);

  try {
    parse_program("add one one");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.expected().count("';'") == 1);
    CHECK(e.pos() == SourcePos{1, 11});
  }
  try {
    parse_program("f = [x] case x of { O z => z\n | S y };");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.pos() == SourcePos{2, 8});
    CHECK(e.expected().count("'=>'") == 1);
  }
}

TEST_CASE("parser does not resolve names") {
  CHECK_NOTHROW(parse_program("undefined_thing (Other());"));
}

// ---------------------------------------------------------------------------
// Properties
// ---------------------------------------------------------------------------

namespace {

class TermGen {
 public:
  explicit TermGen(unsigned seed) : rng_(seed) {}

  TermPtr term(int depth) {
    int pick = depth <= 0 ? 0 : uniform(0, 8);
    switch (pick) {
      case 0: return make_var(var());
      case 1: return make_lam(var(), term(depth - 1));
      case 2: return make_app(term(depth - 1), term(depth - 1));
      case 3: return make_con(con(), term(depth - 1));
      case 4: {
        std::vector<Branch> bs;
        auto labels = distinct(uniform(1, 3));
        for (auto& l : labels) bs.push_back({l, var(), term(depth - 1)});
        return make_case(term(depth - 1), std::move(bs));
      }
      case 5: {
        std::vector<TupleEntry> es;
        for (auto& l : distinct(uniform(0, 3))) es.push_back({l, term(depth - 1)});
        return make_tuple(std::move(es));
      }
      case 6: return make_proj(term(depth - 1), con());
      case 7: {
        std::vector<Binding> bs;
        std::vector<std::string> names = {"a", "b'", "c_1"};
        std::shuffle(names.begin(), names.end(), rng_);
        int n = uniform(1, 3);
        for (int i = 0; i < n; ++i) bs.push_back({names[static_cast<std::size_t>(i)], term(depth - 1), {}});
        return make_let(std::move(bs), term(depth - 1));
      }
      default: return make_var(var());
    }
  }

 private:
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::string var() {
    static const char* names[] = {"x", "y'", "f", "list", "z_2"};
    return names[uniform(0, 4)];
  }
  std::string con() {
    static const char* names[] = {"S", "O", "Cons", "HD", "L'1"};
    return names[uniform(0, 4)];
  }
  std::vector<std::string> distinct(int n) {
    std::vector<std::string> all = {"A", "B", "C", "D"};
    std::shuffle(all.begin(), all.end(), rng_);
    all.resize(static_cast<std::size_t>(n));
    return all;
  }

  std::mt19937 rng_;
};

}  // namespace

TEST_CASE("fully parenthesized printing round-trips") {
  TermGen gen(20261016);
  for (int i = 0; i < 500; ++i) {
    TermPtr t = gen.term(4);
    std::string src = to_source(*t);
    TermPtr back;
    REQUIRE_NOTHROW(back = parse_term(src));
    INFO(src);
    CHECK(same_term(*t, *back));
  }
}

TEST_CASE("tokenize is total on legal text and error positions stay inside the source") {
  std::mt19937 rng(7);
  const std::string legal = "abcXYZ019'_ \n\t()[]{}|.,;=";
  const std::string noisy = legal + "#$%*&";
  for (int i = 0; i < 2000; ++i) {
    std::string src;
    int len = std::uniform_int_distribution<int>(0, 40)(rng);
    const std::string& alphabet = i % 2 ? legal : noisy;
    for (int k = 0; k < len; ++k)
      src += alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
    if (i % 2) {
      // No "(*" can appear without '*', so this must always lex.
      CHECK_NOTHROW(tokenize(src));
    }
    try {
      parse_program(src);
    } catch (const LexError& e) {
      CHECK(inside(src, e.pos()));
    } catch (const ParseError& e) {
      INFO(src);
      CHECK(inside(src, e.pos()));
    }
  }
}
