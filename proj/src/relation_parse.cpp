#include <cctype>
#include <sstream>

#include "yangian/relations/ast.hpp"

namespace yangian::rel {

namespace {

struct Token {
  enum class Kind { Ident, Number, Sub, LBrack, RBrack, LBrace, RBrace, LParen, RParen, Comma, Plus, Minus, Star, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::size_t p = i_;
    if (i_ >= s_.size()) {
      tok_ = {Token::Kind::End, "", p};
      return;
    }
    char c = s_[i_];
    auto single = [&](Token::Kind k) {
      ++i_;
      tok_ = {k, std::string(1, c), p};
    };
    switch (c) {
      case '[': return single(Token::Kind::LBrack);
      case ']': return single(Token::Kind::RBrack);
      case '{': return single(Token::Kind::LBrace);
      case '}': return single(Token::Kind::RBrace);
      case '(': return single(Token::Kind::LParen);
      case ')': return single(Token::Kind::RParen);
      case ',': return single(Token::Kind::Comma);
      case '+': return single(Token::Kind::Plus);
      case '-': return single(Token::Kind::Minus);
      case '*': return single(Token::Kind::Star);
      default: break;
    }
    if (c == '_') {
      if (i_ + 1 < s_.size() && s_[i_ + 1] == '{') {
        i_ += 2;
        tok_ = {Token::Kind::Sub, "_{", p};
        return;
      }
      throw ParseError("expected '{' after '_'", p);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      if (j < s_.size() && s_[j] == '/' && j + 1 < s_.size() &&
          std::isdigit(static_cast<unsigned char>(s_[j + 1]))) {
        ++j;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      }
      tok_ = {Token::Kind::Number, s_.substr(i_, j - i_), p};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])))) ++j;
      std::string name = s_.substr(i_, j - i_);
      // generator names carry their sign: x+, x-, Jx+, Jx-
      if ((name == "x" || name == "Jx") && j < s_.size() && (s_[j] == '+' || s_[j] == '-')) {
        name += s_[j];
        ++j;
      }
      tok_ = {Token::Kind::Ident, name, p};
      i_ = j;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", p);
  }

  const std::string& s_;
  std::size_t i_ = 0;
  Token tok_{Token::Kind::End, "", 0};
};

class Parser {
public:
  explicit Parser(const std::string& text) : lex_(text) {}

  RelationAst parse() {
    RelationAst ast;
    ast.root = parse_expr();
    expect(Token::Kind::End, "trailing input");
    ast.free_vars = free_vars_;
    return ast;
  }

private:
  NodeP parse_expr() {
    std::vector<NodeP> terms;
    terms.push_back(parse_term());
    for (;;) {
      if (lex_.peek().kind == Token::Kind::Plus) {
        lex_.next();
        terms.push_back(parse_term());
      } else if (lex_.peek().kind == Token::Kind::Minus) {
        lex_.next();
        terms.push_back(neg(parse_term()));
      } else {
        break;
      }
    }
    if (terms.size() == 1) return terms[0];
    auto n = std::make_shared<Node>();
    n->type = Node::Type::Sum;
    n->kids = std::move(terms);
    return n;
  }

  bool starts_factor(const Token& t) const {
    switch (t.kind) {
      case Token::Kind::LBrack:
      case Token::Kind::LBrace:
      case Token::Kind::LParen:
      case Token::Kind::Ident:
      case Token::Kind::Number:
        return true;
      default:
        return false;
    }
  }

  NodeP parse_term() {
    std::vector<NodeP> factors;
    factors.push_back(parse_factor());
    for (;;) {
      if (lex_.peek().kind == Token::Kind::Star) {
        lex_.next();
        factors.push_back(parse_factor());
      } else if (starts_factor(lex_.peek())) {
        factors.push_back(parse_factor());
      } else {
        break;
      }
    }
    if (factors.size() == 1) return factors[0];
    auto n = std::make_shared<Node>();
    n->type = Node::Type::Prod;
    n->kids = std::move(factors);
    return n;
  }

  NodeP parse_factor() {
    if (lex_.peek().kind == Token::Kind::Minus) {
      lex_.next();
      return neg(parse_factor());
    }
    return parse_primary();
  }

  NodeP parse_primary() {
    Token t = lex_.next();
    switch (t.kind) {
      case Token::Kind::LBrack: {
        NodeP a = parse_expr();
        expect(Token::Kind::Comma, "expected ',' in bracket");
        NodeP b = parse_expr();
        expect(Token::Kind::RBrack, "expected ']'");
        auto n = std::make_shared<Node>();
        n->type = Node::Type::Bracket;
        n->kids = {a, b};
        return n;
      }
      case Token::Kind::LBrace: {
        NodeP a = parse_expr();
        expect(Token::Kind::Comma, "expected ',' in anticommutator");
        NodeP b = parse_expr();
        expect(Token::Kind::RBrace, "expected '}'");
        auto n = std::make_shared<Node>();
        n->type = Node::Type::Anti;
        n->kids = {a, b};
        return n;
      }
      case Token::Kind::LParen: {
        NodeP e = parse_expr();
        expect(Token::Kind::RParen, "expected ')'");
        return e;
      }
      case Token::Kind::Number: {
        auto n = std::make_shared<Node>();
        n->type = Node::Type::Scalar;
        n->skind = ScalarKind::Lit;
        n->lit = Rat::parse(t.text);
        return n;
      }
      case Token::Kind::Ident:
        return parse_ident(t);
      default:
        throw ParseError("expected expression", t.pos);
    }
  }

  NodeP parse_ident(const Token& t) {
    const std::string& name = t.text;
    auto n = std::make_shared<Node>();
    if (name == "e1" || name == "e2" || name == "hbar") {
      n->type = Node::Type::Scalar;
      n->skind = name == "e1" ? ScalarKind::E1 : (name == "e2" ? ScalarKind::E2 : ScalarKind::Hbar);
      return n;
    }
    if (name == "delta" || name == "a" || name == "b") {
      n->type = Node::Type::Scalar;
      n->skind = name == "delta" ? ScalarKind::Delta : (name == "a" ? ScalarKind::CartanA : ScalarKind::CoeffB);
      expect(Token::Kind::Sub, "expected '_{' after scalar name");
      n->si = parse_idx();
      expect(Token::Kind::Comma, "expected ',' in subscript");
      n->sj = parse_idx();
      expect(Token::Kind::RBrace, "expected '}'");
      return n;
    }
    if (name == "sym") {
      n->type = Node::Type::Sym;
      expect(Token::Kind::LBrace, "expected '{' after sym");
      for (;;) {
        Token v = lex_.next();
        if (v.kind != Token::Kind::Ident) throw ParseError("expected index variable in sym", v.pos);
        n->sym_vars.push_back(v.text);
        note_var(v.text);
        Token sep = lex_.next();
        if (sep.kind == Token::Kind::RBrace) break;
        if (sep.kind != Token::Kind::Comma) throw ParseError("expected ',' or '}' in sym", sep.pos);
      }
      expect(Token::Kind::LParen, "expected '(' after sym variables");
      n->kids.push_back(parse_expr());
      expect(Token::Kind::RParen, "expected ')'");
      return n;
    }
    GenKind gk;
    bool has_mode = true;
    if (name == "x+") {
      gk = GenKind::XPlus;
    } else if (name == "x-") {
      gk = GenKind::XMinus;
    } else if (name == "h") {
      gk = GenKind::H;
    } else if (name == "Jx+") {
      gk = GenKind::JXPlus;
      has_mode = false;
    } else if (name == "Jx-") {
      gk = GenKind::JXMinus;
      has_mode = false;
    } else if (name == "Jh") {
      gk = GenKind::JH;
      has_mode = false;
    } else {
      throw ParseError("unknown symbol '" + name + "'", t.pos);
    }
    n->type = Node::Type::Gen;
    n->gkind = gk;
    expect(Token::Kind::Sub, "expected '_{' after generator name");
    n->gnode = parse_idx();
    if (has_mode) {
      expect(Token::Kind::Comma, "expected ',' in generator subscript");
      n->gmode = parse_idx();
    }
    expect(Token::Kind::RBrace, "expected '}'");
    return n;
  }

  IdxExpr parse_idx() {
    IdxExpr e;
    bool neg_next = false;
    for (;;) {
      Token t = lex_.next();
      if (t.kind == Token::Kind::Ident) {
        if (neg_next) throw ParseError("negated index variables are not supported", t.pos);
        e.vars.push_back(t.text);
        note_var(t.text);
      } else if (t.kind == Token::Kind::Number) {
        if (t.text.find('/') != std::string::npos) throw ParseError("index must be an integer", t.pos);
        int v = std::stoi(t.text);
        e.offset += neg_next ? -v : v;
      } else {
        throw ParseError("expected index", t.pos);
      }
      if (lex_.peek().kind == Token::Kind::Plus) {
        lex_.next();
        neg_next = false;
      } else if (lex_.peek().kind == Token::Kind::Minus) {
        lex_.next();
        neg_next = true;
      } else {
        break;
      }
    }
    return e;
  }

  NodeP neg(NodeP kid) {
    if (kid->type == Node::Type::Neg) return kid->kids[0];
    auto n = std::make_shared<Node>();
    n->type = Node::Type::Neg;
    n->kids = {std::move(kid)};
    return n;
  }

  void note_var(const std::string& v) {
    for (const auto& f : free_vars_)
      if (f == v) return;
    free_vars_.push_back(v);
  }

  void expect(Token::Kind k, const char* msg) {
    Token t = lex_.next();
    if (t.kind != k) throw ParseError(msg, t.pos);
  }

  Lexer lex_;
  std::vector<std::string> free_vars_;
};

void print_node(std::ostringstream& os, const NodeP& n);

void print_list(std::ostringstream& os, const std::vector<NodeP>& kids, const char* sep) {
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i) os << sep;
    print_node(os, kids[i]);
  }
}

void print_node(std::ostringstream& os, const NodeP& n) {
  switch (n->type) {
    case Node::Type::Sum:
      os << "(";
      print_list(os, n->kids, " + ");
      os << ")";
      break;
    case Node::Type::Prod:
      print_list(os, n->kids, " * ");
      break;
    case Node::Type::Neg:
      os << "-";
      print_node(os, n->kids[0]);
      break;
    case Node::Type::Bracket:
      os << "[";
      print_node(os, n->kids[0]);
      os << ", ";
      print_node(os, n->kids[1]);
      os << "]";
      break;
    case Node::Type::Anti:
      os << "{";
      print_node(os, n->kids[0]);
      os << ", ";
      print_node(os, n->kids[1]);
      os << "}";
      break;
    case Node::Type::Sym:
      os << "sym{";
      for (std::size_t i = 0; i < n->sym_vars.size(); ++i) {
        if (i) os << ",";
        os << n->sym_vars[i];
      }
      os << "}(";
      print_node(os, n->kids[0]);
      os << ")";
      break;
    case Node::Type::Gen: {
      const char* nm = nullptr;
      switch (n->gkind) {
        case GenKind::XPlus: nm = "x+"; break;
        case GenKind::XMinus: nm = "x-"; break;
        case GenKind::H: nm = "h"; break;
        case GenKind::JXPlus: nm = "Jx+"; break;
        case GenKind::JXMinus: nm = "Jx-"; break;
        case GenKind::JH: nm = "Jh"; break;
      }
      os << nm << "_{" << n->gnode.str();
      if (!is_j_kind(n->gkind)) os << "," << n->gmode.str();
      os << "}";
      break;
    }
    case Node::Type::Scalar:
      switch (n->skind) {
        case ScalarKind::Lit: os << n->lit.str(); break;
        case ScalarKind::E1: os << "e1"; break;
        case ScalarKind::E2: os << "e2"; break;
        case ScalarKind::Hbar: os << "hbar"; break;
        case ScalarKind::Delta: os << "delta_{" << n->si.str() << "," << n->sj.str() << "}"; break;
        case ScalarKind::CartanA: os << "a_{" << n->si.str() << "," << n->sj.str() << "}"; break;
        case ScalarKind::CoeffB: os << "b_{" << n->si.str() << "," << n->sj.str() << "}"; break;
      }
      break;
  }
}

}  // namespace

RelationAst parse_relation(const std::string& text) { return Parser(text).parse(); }

std::string print_relation(const RelationAst& ast) {
  std::ostringstream os;
  print_node(os, ast.root);
  return os.str();
}

}  // namespace yangian::rel
