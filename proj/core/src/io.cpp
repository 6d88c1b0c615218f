// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

#include "drep/io.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace drep::io {

ParseError::ParseError(Position pos, const std::string& message)
    : Error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
      pos_(pos),
      detail_(message) {}

namespace {

enum class Tok { Ident, Int, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Position pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  bool accept(std::string_view symbol) {
    if (current_.kind == Tok::Symbol && current_.text == symbol) {
      advance();
      return true;
    }
    return false;
  }

  Token expect(std::string_view symbol) {
    if (current_.kind != Tok::Symbol || current_.text != symbol)
      throw ParseError(current_.pos, "expected '" + std::string(symbol) + "' but found " + describe(current_));
    return next();
  }

  Token expect_ident(const char* what) {
    if (current_.kind != Tok::Ident) throw ParseError(current_.pos, std::string("expected ") + what + " but found " + describe(current_));
    return next();
  }

  Token expect_int(const char* what) {
    if (current_.kind != Tok::Int) throw ParseError(current_.pos, std::string("expected ") + what + " but found " + describe(current_));
    return next();
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::End: return "end of input";
      case Tok::Int: return "number '" + t.text + "'";
      case Tok::Ident: return "name '" + t.text + "'";
      case Tok::Symbol: return "'" + t.text + "'";
    }
    return "token";
  }

 private:
  void advance() {
    skip_space();
    current_ = Token{};
    current_.pos = pos_;
    if (i_ >= text_.size()) return;
    char c = text_[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_')) bump();
      current_.kind = Tok::Ident;
      current_.text = std::string(text_.substr(start, i_ - start));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) bump();
      current_.kind = Tok::Int;
      current_.text = std::string(text_.substr(start, i_ - start));
    } else if (std::string_view(":;=+-*^()/,[]").find(c) != std::string_view::npos) {
      bump();
      current_.kind = Tok::Symbol;
      current_.text = std::string(1, c);
    } else {
      throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }
  }

  void skip_space() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == '#') {
        while (i_ < text_.size() && text_[i_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else if ((static_cast<unsigned char>(text_[i_]) & 0xC0) != 0x80) {
      ++pos_.column;
    }
    ++i_;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Position pos_;
  Token current_;
};

const std::set<std::string> kReserved = {"generator", "d", "algebra"};

class ExprParser {
 public:
  ExprParser(Lexer& lex, const nc::AlphabetPtr& alphabet) : lex_(lex), alphabet_(alphabet) {}

  nc::NCPoly expr() {
    nc::NCPoly out(alphabet_);
    bool negate = false;
    if (lex_.accept("-"))
      negate = true;
    else
      lex_.accept("+");
    auto t = term();
    out += negate ? -t : t;
    while (true) {
      if (lex_.accept("+")) {
        out += term();
      } else if (lex_.accept("-")) {
        out -= term();
      } else {
        break;
      }
    }
    return out;
  }

 private:
  nc::NCPoly term() {
    auto out = factor();
    while (lex_.accept("*")) out = nc::nc_mul(out, factor());
    return out;
  }

  nc::NCPoly factor() {
    auto base = atom();
    if (lex_.accept("^")) {
      auto e = lex_.expect_int("an exponent");
      unsigned long k = std::stoul(e.text);
      if (k > 64) throw ParseError(e.pos, "exponent too large");
      auto out = nc::NCPoly::unit(alphabet_);
      for (unsigned long i = 0; i < k; ++i) out = nc::nc_mul(out, base);
      return out;
    }
    return base;
  }

  nc::NCPoly atom() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Int) {
      auto num = lex_.next();
      Integer p(num.text);
      Integer q = 1;
      if (lex_.accept("/")) {
        auto den = lex_.expect_int("a denominator");
        q = Integer(den.text);
        if (q == 0) throw ParseError(den.pos, "zero denominator");
      }
      Rational c(p, q);
      c.canonicalize();
      return nc::NCPoly::monomial(alphabet_, {}, c);
    }
    if (t.kind == Tok::Ident) {
      auto name = lex_.next();
      auto g = alphabet_->find(name.text);
      if (!g) throw ParseError(name.pos, "undeclared generator '" + name.text + "'");
      return nc::NCPoly::generator(alphabet_, *g);
    }
    if (lex_.accept("(")) {
      auto inner = expr();
      lex_.expect(")");
      return inner;
    }
    throw ParseError(t.pos, "expected a number, a generator or '(' but found " + Lexer::describe(t));
  }

  Lexer& lex_;
  const nc::AlphabetPtr& alphabet_;
};

long parse_degree(Lexer& lex) {
  bool negative = lex.accept("-");
  if (!negative) lex.accept("+");
  auto t = lex.expect_int("an integer degree");
  if (t.text.size() > 6) throw ParseError(t.pos, "degree out of range");
  long v = std::stol(t.text);
  return negative ? -v : v;
}

}  // namespace

AlgebraFile parse_algebra_file(std::string_view text, const std::string& name) {
  std::string algebra_name = name;
  std::vector<nc::Generator> gens;
  std::vector<Position> declared;
  // Two passes: declarations fix the alphabet, then differentials are parsed
  // against it. The first pass skips over differential bodies.
  {
    Lexer lex(text);
    bool seen_algebra = false;
    while (lex.peek().kind != Tok::End) {
      const Token& t = lex.peek();
      if (t.kind != Tok::Ident) throw ParseError(t.pos, "expected a declaration but found " + Lexer::describe(t));
      if (t.text == "algebra") {
        auto kw = lex.next();
        if (seen_algebra) throw ParseError(kw.pos, "duplicate algebra name");
        seen_algebra = true;
        algebra_name = lex.expect_ident("an algebra name").text;
        lex.expect(";");
      } else if (t.text == "generator") {
        lex.next();
        std::vector<Token> names;
        do {
          names.push_back(lex.expect_ident("a generator name"));
        } while (lex.accept(","));
        lex.expect(":");
        long degree = parse_degree(lex);
        lex.expect(";");
        for (const auto& n : names) {
          if (kReserved.count(n.text)) throw ParseError(n.pos, "'" + n.text + "' is reserved");
          for (const auto& g : gens)
            if (g.name == n.text) throw ParseError(n.pos, "duplicate declaration of '" + n.text + "'");
          gens.push_back({n.text, static_cast<int>(degree)});
          declared.push_back(n.pos);
        }
      } else if (t.text == "d") {
        lex.next();
        lex.expect_ident("a generator name");
        lex.expect("=");
        while (lex.peek().kind != Tok::End && !(lex.peek().kind == Tok::Symbol && lex.peek().text == ";")) lex.next();
        lex.expect(";");
      } else {
        throw ParseError(t.pos, "expected 'generator', 'd' or 'algebra' but found " + Lexer::describe(t));
      }
    }
  }

  auto alphabet = nc::make_alphabet(gens);
  std::vector<nc::NCPoly> diffs(gens.size(), nc::NCPoly(alphabet));
  std::vector<std::optional<Position>> diff_at(gens.size());
  {
    Lexer lex(text);
    while (lex.peek().kind != Tok::End) {
      auto kw = lex.next();
      if (kw.text != "d") {
        while (!lex.accept(";")) lex.next();
        continue;
      }
      auto name = lex.expect_ident("a generator name");
      auto g = alphabet->find(name.text);
      if (!g) throw ParseError(name.pos, "undeclared generator '" + name.text + "'");
      if (diff_at[*g]) throw ParseError(name.pos, "duplicate differential for '" + name.text + "'");
      diff_at[*g] = kw.pos;
      lex.expect("=");
      ExprParser p(lex, alphabet);
      diffs[*g] = p.expr();
      lex.expect(";");
    }
  }
  return AlgebraFile{nc::Resolution(algebra_name, alphabet, std::move(diffs)), std::move(declared), std::move(diff_at)};
}

nc::Resolution parse_algebra(std::string_view text, const std::string& name) {
  return parse_algebra_file(text, name).resolution;
}

std::string print_algebra(const nc::Resolution& res) {
  std::ostringstream out;
  out << "algebra " << res.name() << ";\n";
  const auto& alphabet = *res.alphabet();
  for (std::uint32_t g = 0; g < alphabet.size(); ++g)
    out << "generator " << alphabet[g].name << " : " << alphabet[g].degree << ";\n";
  for (std::uint32_t g = 0; g < alphabet.size(); ++g)
    if (!res.diff(g).is_zero()) out << "d " << alphabet[g].name << " = " << nc::to_string(res.diff(g)) << ";\n";
  return out.str();
}

namespace {

Rational parse_entry(Lexer& lex) {
  bool negative = lex.accept("-");
  if (!negative) lex.accept("+");
  auto num = lex.expect_int("a matrix entry");
  Integer p(num.text);
  Integer q = 1;
  if (lex.accept("/")) {
    auto den = lex.expect_int("a denominator");
    q = Integer(den.text);
    if (q == 0) throw ParseError(den.pos, "zero denominator");
  }
  Rational c(negative ? Integer(-p) : p, q);
  c.canonicalize();
  return c;
}

}  // namespace

tangent::Representation parse_rep(std::string_view text) {
  Lexer lex(text);
  tangent::Representation rho;
  auto head = lex.expect_ident("'n'");
  if (head.text != "n") throw ParseError(head.pos, "representation files start with 'n = N'");
  lex.expect("=");
  auto nt = lex.expect_int("the matrix size");
  if (nt.text.size() > 4) throw ParseError(nt.pos, "matrix size out of range");
  rho.n = std::stoul(nt.text);
  if (rho.n == 0) throw ParseError(nt.pos, "matrix size must be positive");
  lex.accept(";");
  while (lex.peek().kind != Tok::End) {
    auto name = lex.expect_ident("a generator name");
    if (rho.values.count(name.text)) throw ParseError(name.pos, "duplicate value for '" + name.text + "'");
    lex.expect("=");
    auto open = lex.expect("[");
    std::vector<std::vector<Rational>> rows;
    do {
      lex.expect("[");
      std::vector<Rational> row;
      do {
        row.push_back(parse_entry(lex));
      } while (lex.accept(","));
      lex.expect("]");
      rows.push_back(std::move(row));
    } while (lex.accept(","));
    lex.expect("]");
    lex.accept(";");
    if (rows.size() != rho.n)
      throw ParseError(open.pos, "matrix for '" + name.text + "' has " + std::to_string(rows.size()) +
                                     " rows, expected " + std::to_string(rho.n));
    linalg::Matrix m(rho.n, rho.n);
    for (std::size_t i = 0; i < rho.n; ++i) {
      if (rows[i].size() != rho.n)
        throw ParseError(open.pos, "row " + std::to_string(i + 1) + " of '" + name.text + "' has " +
                                       std::to_string(rows[i].size()) + " entries, expected " + std::to_string(rho.n));
      for (std::size_t j = 0; j < rho.n; ++j) m(i, j) = rows[i][j];
    }
    rho.values.emplace(name.text, std::move(m));
  }
  return rho;
}

std::string print_rep(const tangent::Representation& rho) {
  std::ostringstream out;
  out << "n = " << rho.n << "\n";
  for (const auto& [name, m] : rho.values) {
    out << name << " = [";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      out << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << to_string(m(i, j));
      out << "]";
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace drep::io
