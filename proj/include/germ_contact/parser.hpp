#ifndef GERM_CONTACT_PARSER_HPP
#define GERM_CONTACT_PARSER_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hypersurface.hpp"
#include "polynomial.hpp"

// Input language:
//
//   ring z1..z3;
//   ideal = z1^3 - z2*z3, z2^2;
//
//   ring z1..z4;
//   hyper = Re(z4) + abs2(z1^3 - z3*z2) + abs2(z2^2);
//
// '#' starts a comment that runs to the end of the line.

namespace germ_contact {

class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line), column_(column), message_(message)
  {
  }

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

private:
  int line_, column_;
  std::string message_;
};

enum class DocumentKind { Ideal, Hypersurface };

struct SourceDocument {
  std::string text;
  DocumentKind kind = DocumentKind::Ideal;
};

struct ParsedHypersurface {
  int nvars = 0;
  Polynomial h;
  std::vector<Polynomial> fs;
  std::vector<std::string> names;

  RigidHypersurface to_rigid() const { return RigidHypersurface(nvars, h, fs); }
};

struct ParsedIdeal {
  IdealPresentation ideal;
  std::vector<std::string> names;
};

inline constexpr int max_exponent = 512;
inline constexpr int max_nesting = 200;

namespace detail {

enum class Tok { Ident, Number, Punct, DotDot, End };

struct Token {
  Tok kind;
  std::string text;
  int line, column;
};

inline std::vector<Token> tokenize(std::string_view s)
{
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n')
        advance(1);
      continue;
    }
    int l = line, co = col;
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), l, co});
      advance(j - i);
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), l, co});
      advance(j - i);
    } else if (c == '.' && i + 1 < s.size() && s[i + 1] == '.') {
      out.push_back({Tok::DotDot, "..", l, co});
      advance(2);
    } else if (std::string_view("+-*/^(),;=").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, static_cast<char>(c)), l, co});
      advance(1);
    } else {
      std::string shown = std::isprint(c) ? std::string(1, static_cast<char>(c)) : "byte " + std::to_string(c);
      throw ParseError(l, co, "unexpected character '" + shown + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  void parse_ring()
  {
    expect_word("ring");
    const Token& first = expect(Tok::Ident, "variable name");
    expect(Tok::DotDot, "'..'");
    const Token& last = expect(Tok::Ident, "variable name");
    auto [p1, i1] = split_name(first);
    auto [p2, i2] = split_name(last);
    if (p1 != p2)
      throw ParseError(last.line, last.column, "variable range must use one prefix");
    if (i1 != 1)
      throw ParseError(first.line, first.column, "variable range must start at index 1");
    if (i2 < 1)
      throw ParseError(last.line, last.column, "variable range is empty");
    if (i2 > 64)
      throw ParseError(last.line, last.column, "at most 64 variables are supported");
    n_ = i2;
    names_ = default_variable_names(n_, p1);
    expect_punct(";");
  }

  std::string peek_word() const { return peek().kind == Tok::Ident ? peek().text : ""; }

  ParsedIdeal parse_ideal_body()
  {
    const Token& head = expect_word("ideal");
    expect_punct("=");
    std::vector<Polynomial> gens;
    std::vector<Token> starts;
    starts.push_back(peek());
    gens.push_back(expression());
    while (accept_punct(",")) {
      starts.push_back(peek());
      gens.push_back(expression());
    }
    expect_punct(";");
    expect_end();
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (sgn(gens[i].constant_term()) != 0)
        throw ParseError(starts[i].line, starts[i].column, "generator has nonzero constant term");
    (void)head;
    return ParsedIdeal{IdealPresentation(n_, std::move(gens)), names_};
  }

  ParsedHypersurface parse_hyper_body()
  {
    expect_word("hyper");
    expect_punct("=");
    const Token& re = peek();
    if (re.kind != Tok::Ident || re.text != "Re")
      throw ParseError(re.line, re.column, "hypersurface must start with a Re(...) term");
    ++pos_;
    expect_punct("(");
    const Token& hstart = peek();
    Polynomial h = expression();
    expect_punct(")");
    std::vector<Polynomial> fs;
    while (accept_punct("+")) {
      const Token& t = peek();
      if (t.kind != Tok::Ident || t.text != "abs2")
        throw ParseError(t.line, t.column, "expected abs2(...)");
      ++pos_;
      expect_punct("(");
      const Token& fstart = peek();
      Polynomial f = expression();
      if (sgn(f.constant_term()) != 0)
        throw ParseError(fstart.line, fstart.column, "squared term has nonzero constant term");
      fs.push_back(std::move(f));
      expect_punct(")");
    }
    expect_punct(";");
    expect_end();
    if (sgn(h.constant_term()) != 0)
      throw ParseError(hstart.line, hstart.column, "Re term has nonzero constant term");
    if (h.linear_part().is_zero())
      throw ParseError(hstart.line, hstart.column, "Re term has zero linear part");
    return ParsedHypersurface{n_, std::move(h), std::move(fs), names_};
  }

private:
  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(const Token& t, const std::string& what) const
  {
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.column, "expected " + what + ", found " + found);
  }

  const Token& expect(Tok kind, const std::string& what)
  {
    const Token& t = peek();
    if (t.kind != kind)
      fail(t, what);
    ++pos_;
    return t;
  }

  const Token& expect_word(const std::string& w)
  {
    const Token& t = peek();
    if (t.kind != Tok::Ident || t.text != w)
      fail(t, "'" + w + "'");
    ++pos_;
    return t;
  }

  void expect_punct(const std::string& p)
  {
    if (!accept_punct(p))
      fail(peek(), "'" + p + "'");
  }

  bool accept_punct(const std::string& p)
  {
    if (peek().kind == Tok::Punct && peek().text == p) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_end()
  {
    if (peek().kind != Tok::End)
      fail(peek(), "end of input");
  }

  static std::pair<std::string, int> split_name(const Token& t)
  {
    std::size_t k = t.text.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(t.text[k - 1])))
      --k;
    if (k == 0 || k == t.text.size() || t.text.size() - k > 3)
      throw ParseError(t.line, t.column, "variable name must be a prefix followed by an index");
    return {t.text.substr(0, k), std::stoi(t.text.substr(k))};
  }

  struct DepthGuard {
    DepthGuard(int& d, const Token& t) : depth(d)
    {
      if (++depth > max_nesting)
        throw ParseError(t.line, t.column, "expression nested too deeply");
    }
    ~DepthGuard() { --depth; }
    int& depth;
  };

  Polynomial expression()
  {
    DepthGuard guard(depth_, peek());
    Polynomial acc = term();
    while (true) {
      if (accept_punct("+"))
        acc = acc + term();
      else if (accept_punct("-"))
        acc = acc - term();
      else
        return acc;
    }
  }

  Polynomial term()
  {
    Polynomial acc = unary();
    while (accept_punct("*"))
      acc = acc * unary();
    return acc;
  }

  Polynomial unary()
  {
    DepthGuard guard(depth_, peek());
    if (accept_punct("-"))
      return -unary();
    if (accept_punct("+"))
      return unary();
    return power();
  }

  Polynomial power()
  {
    Polynomial base = atom();
    if (!accept_punct("^"))
      return base;
    const Token& t = peek();
    if (t.kind != Tok::Number)
      fail(t, "a non-negative integer exponent");
    ++pos_;
    if (t.text.size() > 4 || std::stoi(t.text) > max_exponent)
      throw ParseError(t.line, t.column, "exponent exceeds " + std::to_string(max_exponent));
    if (peek().kind == Tok::Punct && peek().text == "^")
      throw ParseError(peek().line, peek().column, "chained exponents need parentheses");
    int k = std::stoi(t.text);
    if (base.total_degree() * k > max_exponent)
      throw ParseError(t.line, t.column, "degree exceeds " + std::to_string(max_exponent));
    return base.pow(static_cast<unsigned>(k));
  }

  Polynomial atom()
  {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      ++pos_;
      Rational value(Integer(t.text));
      if (accept_punct("/")) {
        const Token& d = peek();
        if (d.kind != Tok::Number)
          fail(d, "an integer denominator");
        ++pos_;
        Integer den(d.text);
        if (den == 0)
          throw ParseError(d.line, d.column, "zero denominator");
        value = Rational(Integer(t.text), den);
        value.canonicalize();
      }
      return Polynomial::constant(n_, value);
    }
    if (t.kind == Tok::Ident) {
      ++pos_;
      for (int i = 0; i < n_; ++i)
        if (names_[static_cast<std::size_t>(i)] == t.text)
          return Polynomial::variable(n_, i);
      throw ParseError(t.line, t.column, "undeclared variable '" + t.text + "'");
    }
    if (accept_punct("(")) {
      Polynomial inner = expression();
      expect_punct(")");
      return inner;
    }
    fail(t, "a number, variable or '('");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int n_ = 0;
  int depth_ = 0;
  std::vector<std::string> names_;
};

}  // namespace detail

inline ParsedIdeal parse_ideal_document(std::string_view text)
{
  detail::Parser p(text);
  p.parse_ring();
  return p.parse_ideal_body();
}

inline IdealPresentation parse_ideal(const SourceDocument& doc)
{
  if (doc.kind != DocumentKind::Ideal)
    throw std::invalid_argument("document is not an ideal");
  return parse_ideal_document(doc.text).ideal;
}

inline IdealPresentation parse_ideal(std::string_view text) { return parse_ideal_document(text).ideal; }

inline ParsedHypersurface parse_hypersurface(const SourceDocument& doc)
{
  if (doc.kind != DocumentKind::Hypersurface)
    throw std::invalid_argument("document is not a hypersurface");
  detail::Parser p(doc.text);
  p.parse_ring();
  return p.parse_hyper_body();
}

inline ParsedHypersurface parse_hypersurface(std::string_view text)
{
  return parse_hypersurface(SourceDocument{std::string(text), DocumentKind::Hypersurface});
}

/// Parses either kind, deciding from the keyword after the ring declaration.
inline std::variant<ParsedIdeal, ParsedHypersurface> parse_document(std::string_view text)
{
  detail::Parser p(text);
  p.parse_ring();
  if (p.peek_word() == "hyper")
    return p.parse_hyper_body();
  return p.parse_ideal_body();
}

inline std::string to_source(const IdealPresentation& ideal)
{
  std::string s = "ring z1..z" + std::to_string(ideal.nvars()) + "; ideal = ";
  for (std::size_t i = 0; i < ideal.size(); ++i)
    s += (i ? ", " : "") + ideal[i].to_string();
  return s + ";";
}

inline std::string to_source(const RigidHypersurface& m)
{
  return "ring z1..z" + std::to_string(m.nvars()) + "; hyper = " + m.to_string() + ";";
}

}  // namespace germ_contact

#endif
