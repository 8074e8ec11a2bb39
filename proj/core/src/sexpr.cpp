#include "binderkit/sexpr.hpp"

#include <cctype>

namespace binderkit {

namespace {

struct Token {
  enum class Kind { LParen, RParen, Atom, End };
  Kind kind;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& input) : input_(input) {}

  Token peek() {
    if (!ahead_) ahead_ = lex();
    return *ahead_;
  }

  Token next() {
    Token t = peek();
    ahead_.reset();
    return t;
  }

 private:
  Token lex() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_])))
      advance();
    if (pos_ >= input_.size()) return Token{Token::Kind::End, "", line_, col_};
    int line = line_, col = col_;
    char c = input_[pos_];
    if (c == '(') {
      advance();
      return Token{Token::Kind::LParen, "(", line, col};
    }
    if (c == ')') {
      advance();
      return Token{Token::Kind::RParen, ")", line, col};
    }
    std::string text;
    while (pos_ < input_.size() && !std::isspace(static_cast<unsigned char>(input_[pos_])) &&
           input_[pos_] != '(' && input_[pos_] != ')') {
      text += input_[pos_];
      advance();
    }
    return Token{Token::Kind::Atom, text, line, col};
  }

  void advance() {
    if (input_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& input_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  std::optional<Token> ahead_;
};

struct ParseFail {
  ParseError err;
};

[[noreturn]] void fail(const Token& at, std::string message) {
  throw ParseFail{ParseError{std::move(message), at.line, at.col}};
}

bool is_nat(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

bool is_ident(const std::string& s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

enum class Head { Lam, App, Let, Ann, Emb, Cons, Ptr };

std::optional<Head> head_of(const std::string& s) {
  if (s == "lam") return Head::Lam;
  if (s == "app") return Head::App;
  if (s == "let") return Head::Let;
  if (s == "ann") return Head::Ann;
  if (s == "emb") return Head::Emb;
  if (s == "cons") return Head::Cons;
  if (s == "ptr") return Head::Ptr;
  return std::nullopt;
}

bool head_allowed(const std::string& syntax, Head h) {
  if (syntax == "utlc") return h == Head::Lam || h == Head::App;
  if (syntax == "bidi")
    return h == Head::Lam || h == Head::App || h == Head::Ann || h == Head::Emb;
  if (syntax == "utlc+let") return h == Head::Lam || h == Head::App || h == Head::Let;
  if (syntax == "clist") return h == Head::Cons || h == Head::Ptr;
  return false;
}

class Parser {
 public:
  Parser(const Syntax& syntax, const std::string& input) : syntax_(syntax), lexer_(input) {}

  RawTerm run() {
    RawTerm t = term();
    Token rest = lexer_.peek();
    if (rest.kind != Token::Kind::End) fail(rest, "trailing input");
    return t;
  }

 private:
  SimpleType type() {
    Token t = lexer_.next();
    if (t.kind == Token::Kind::Atom && t.text == "alpha") return SimpleType::alpha();
    if (t.kind == Token::Kind::LParen) {
      Token arrow = lexer_.next();
      if (arrow.kind != Token::Kind::Atom || arrow.text != "->")
        fail(arrow, "expected -> in a type");
      SimpleType dom = type();
      SimpleType cod = type();
      expect_rparen();
      return SimpleType::arrow(dom, cod);
    }
    fail(t, "expected a type");
  }

  void expect_rparen() {
    Token t = lexer_.next();
    if (t.kind != Token::Kind::RParen) fail(t, "expected )");
  }

  std::string expect_ident() {
    Token t = lexer_.next();
    if (t.kind != Token::Kind::Atom || !is_ident(t.text)) fail(t, "expected an identifier");
    return t.text;
  }

  RawTerm term() {
    Token t = lexer_.next();
    SourcePos pos{t.line, t.col};
    if (t.kind == Token::Kind::Atom) {
      if (t.text == "nil") {
        if (syntax_.name != "clist") fail(t, "nil is only a clist form");
        return RawTerm::con({PayloadValue::boolean(true)}, pos);
      }
      if (!is_ident(t.text)) fail(t, "expected a term");
      if (syntax_.name == "clist") fail(t, "bare identifiers are not clist forms, use (ptr x)");
      return RawTerm::var(t.text, pos);
    }
    if (t.kind != Token::Kind::LParen) fail(t, "expected a term");
    Token head_tok = lexer_.next();
    if (head_tok.kind != Token::Kind::Atom) fail(head_tok, "expected a form head");
    auto head = head_of(head_tok.text);
    if (!head) fail(head_tok, "unknown form " + head_tok.text);
    if (!head_allowed(syntax_.name, *head))
      fail(head_tok, head_tok.text + " is not a " + syntax_.name + " form");

    std::vector<RawEvent> events;
    switch (*head) {
      case Head::Lam: {
        std::string name = expect_ident();
        RawTerm body = term();
        if (syntax_.name == "bidi") {
          events.emplace_back(PayloadValue::tag(1, "lam"));
        } else {
          if (syntax_.name == "utlc+let") events.emplace_back(PayloadValue::boolean(true));
          events.emplace_back(PayloadValue::boolean(false));
        }
        events.emplace_back(RawSub{{name}, body});
        break;
      }
      case Head::App: {
        RawTerm fn = term();
        RawTerm arg = term();
        if (syntax_.name == "bidi") {
          events.emplace_back(PayloadValue::tag(0, "app"));
        } else {
          if (syntax_.name == "utlc+let") events.emplace_back(PayloadValue::boolean(true));
          events.emplace_back(PayloadValue::boolean(true));
        }
        events.emplace_back(RawSub{{}, fn});
        events.emplace_back(RawSub{{}, arg});
        break;
      }
      case Head::Let: {
        Token open = lexer_.next();
        if (open.kind != Token::Kind::LParen) fail(open, "expected ( after let");
        std::string name = expect_ident();
        RawTerm bound = term();
        expect_rparen();
        RawTerm body = term();
        events.emplace_back(PayloadValue::boolean(false));
        events.emplace_back(
            PayloadValue::pair(PayloadValue::sort(Sort::unit()), PayloadValue::sort(Sort::unit())));
        events.emplace_back(RawSub{{}, bound});
        events.emplace_back(RawSub{{name}, body});
        break;
      }
      case Head::Ann: {
        RawTerm inner = term();
        SimpleType ty = type();
        events.emplace_back(PayloadValue::tag(3, "cut"));
        events.emplace_back(PayloadValue::sort(Sort::of_type(ty)));
        events.emplace_back(RawSub{{}, inner});
        break;
      }
      case Head::Emb: {
        RawTerm inner = term();
        events.emplace_back(PayloadValue::tag(2, "emb"));
        events.emplace_back(RawSub{{}, inner});
        break;
      }
      case Head::Cons: {
        Token nat = lexer_.next();
        if (nat.kind != Token::Kind::Atom || !is_nat(nat.text)) fail(nat, "expected a natural");
        std::string name = expect_ident();
        RawTerm tail = term();
        events.emplace_back(PayloadValue::boolean(false));
        events.emplace_back(PayloadValue::nat(std::stoull(nat.text)));
        events.emplace_back(RawSub{{name}, tail});
        break;
      }
      case Head::Ptr: {
        std::string name = expect_ident();
        expect_rparen();
        return RawTerm::var(name, pos);
      }
    }
    expect_rparen();
    return RawTerm::con(std::move(events), pos);
  }

  const Syntax& syntax_;
  Lexer lexer_;
};

}  // namespace

Result<RawTerm, ParseError> parse(const Syntax& syntax, const std::string& input) {
  if (syntax.name == "stlc")
    return Result<RawTerm, ParseError>::err(
        ParseError{"the annotated syntax has no input grammar", 1, 1});
  try {
    Parser p(syntax, input);
    return Result<RawTerm, ParseError>::ok(p.run());
  } catch (const ParseFail& f) {
    return Result<RawTerm, ParseError>::err(f.err);
  }
}

namespace {

std::string render_at(const Syntax& syntax, const std::vector<std::string>& names, const Term& t,
                      std::size_t& counter) {
  if (t.is_var()) {
    const Var& v = t.as_var();
    if (v.index >= names.size()) throw Error("render_sexpr: variable outside the name list");
    if (syntax.name == "clist") return "(ptr " + names[v.index] + ")";
    return names[v.index];
  }

  const auto& events = t.layer().events;
  auto sub = [&](std::size_t i) -> const SubEvent<Term>& {
    return std::get<SubEvent<Term>>(events[i]);
  };
  auto child = [&](std::size_t i, const std::vector<std::string>& extended) {
    return render_at(syntax, extended, sub(i).child, counter);
  };
  auto bind_names = [&](std::size_t n) {
    std::vector<std::string> fresh;
    for (std::size_t i = 0; i < n; ++i) fresh.push_back("x" + std::to_string(counter++));
    return fresh;
  };
  auto with = [&](const std::vector<std::string>& fresh) {
    std::vector<std::string> extended = fresh;
    extended.insert(extended.end(), names.begin(), names.end());
    return extended;
  };

  if (syntax.name == "utlc") {
    if (std::get<PayloadValue>(events[0]).as_bool())
      return "(app " + child(1, names) + " " + child(2, names) + ")";
    auto fresh = bind_names(1);
    return "(lam " + fresh[0] + " " + child(1, with(fresh)) + ")";
  }
  if (syntax.name == "bidi") {
    switch (std::get<PayloadValue>(events[0]).tag_index()) {
      case 0: return "(app " + child(1, names) + " " + child(2, names) + ")";
      case 1: {
        auto fresh = bind_names(1);
        return "(lam " + fresh[0] + " " + child(1, with(fresh)) + ")";
      }
      case 2: return "(emb " + child(1, names) + ")";
      default:
        return "(ann " + child(2, names) + " " +
               std::get<PayloadValue>(events[1]).as_sort().show() + ")";
    }
  }
  if (syntax.name == "utlc+let") {
    if (std::get<PayloadValue>(events[0]).as_bool()) {
      if (std::get<PayloadValue>(events[1]).as_bool())
        return "(app " + child(2, names) + " " + child(3, names) + ")";
      auto fresh = bind_names(1);
      return "(lam " + fresh[0] + " " + child(2, with(fresh)) + ")";
    }
    auto fresh = bind_names(1);
    return "(let (" + fresh[0] + " " + child(2, names) + ") " + child(3, with(fresh)) + ")";
  }
  if (syntax.name == "clist") {
    if (std::get<PayloadValue>(events[0]).as_bool()) return "nil";
    auto fresh = bind_names(1);
    return "(cons " + std::get<PayloadValue>(events[1]).show() + " " + fresh[0] + " " +
           child(2, with(fresh)) + ")";
  }
  throw Error("render_sexpr: no renderer for syntax " + syntax.name);
}

}  // namespace

std::string render_sexpr(const Syntax& syntax, const std::vector<std::string>& names,
                         const Term& t) {
  std::size_t counter = 0;
  return render_at(syntax, names, t, counter);
}

std::string render_stlc(const Term& t) {
  if (t.is_var()) return "#" + std::to_string(t.as_var().index);
  const auto& events = t.layer().events;
  bool is_app = std::get<PayloadValue>(events[0]).tag_index() == 0;
  if (is_app) {
    return "(app " + render_stlc(std::get<SubEvent<Term>>(events[2]).child) + " " +
           render_stlc(std::get<SubEvent<Term>>(events[3]).child) + ")";
  }
  const auto& types = std::get<PayloadValue>(events[1]);
  return "(lam " + types.first().as_sort().show() + " " +
         render_stlc(std::get<SubEvent<Term>>(events[2]).child) + ")";
}

}  // namespace binderkit
