#include "sgb/io.hpp"

#include <cctype>
#include <map>

namespace sgb {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_blanks() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) advance();
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, col, msg); }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string read_ident(Cursor& c) {
  if (c.eof() || !ident_start(c.peek())) c.fail("expected an identifier");
  std::string s;
  while (!c.eof() && ident_char(c.peek())) {
    s += c.peek();
    c.advance();
  }
  return s;
}

unsigned long long read_uint(Cursor& c) {
  if (c.eof() || !std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected an integer");
  unsigned long long v = 0;
  while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    v = v * 10 + static_cast<unsigned long long>(c.peek() - '0');
    if (v > 0xFFFFFFFFFFFFull) c.fail("integer literal too large");
    c.advance();
  }
  return v;
}

void expect(Cursor& c, char ch, const char* what) {
  if (c.eof() || c.peek() != ch) c.fail(std::string("expected '") + ch + "' " + what);
  c.advance();
}

void expect_word(Cursor& c, std::string_view word) {
  for (char ch : word) {
    if (c.eof() || c.peek() != ch) c.fail("expected '" + std::string(word) + "'");
    c.advance();
  }
}

// header: ring: p=<prime> vars=<v1,...,vn> order=<grevlex|lex>
void parse_header(Cursor& c, InputSystem& sys, std::map<std::string, std::size_t>& index) {
  c.skip_blanks();
  expect_word(c, "ring:");
  c.skip_blanks();
  expect_word(c, "p=");
  std::size_t pline = c.line, pcol = c.col;
  unsigned long long p = read_uint(c);
  c.skip_blanks();
  expect_word(c, "vars=");
  while (true) {
    std::string v = read_ident(c);
    if (index.count(v)) c.fail("duplicate variable '" + v + "'");
    index[v] = sys.varnames.size();
    sys.varnames.push_back(std::move(v));
    if (!c.eof() && c.peek() == ',') {
      c.advance();
      continue;
    }
    break;
  }
  if (sys.varnames.size() > Monomial::kMaxVars)
    c.fail("too many variables (max " + std::to_string(Monomial::kMaxVars) + ")");
  c.skip_blanks();
  expect_word(c, "order=");
  std::string ord = read_ident(c);
  OrderKind kind;
  if (ord == "grevlex")
    kind = OrderKind::grevlex;
  else if (ord == "lex")
    kind = OrderKind::lex;
  else
    c.fail("unknown ordering '" + ord + "'");
  c.skip_blanks();
  if (!c.eof() && c.peek() != '\n' && c.peek() != '#') c.fail("trailing input after header");

  try {
    sys.ring = Ring{sys.varnames.size(), PrimeField(static_cast<std::uint32_t>(p)), kind, false};
  } catch (const NotPrime&) {
    throw ParseError(pline, pcol, "p=" + std::to_string(p) + " is not prime");
  }
}

// term := int ['*' powers] | powers;  powers := var['^'int] ('*' var['^'int])*
Term parse_term(Cursor& c, const InputSystem& sys,
                const std::map<std::string, std::size_t>& index, bool negative) {
  const PrimeField& F = sys.ring.field;
  Fp coeff = F.one();
  MonomialBuilder mb(sys.ring.nvars);
  bool have_factor = false;

  if (c.eof() || c.peek() == '\n' || c.peek() == '#') c.fail("expected a term");
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    coeff = F.from_int(static_cast<long long>(read_uint(c) % F.modulus()));
    have_factor = true;
    c.skip_blanks();
    if (!c.eof() && c.peek() == '*') {
      c.advance();
      c.skip_blanks();
      have_factor = false;  // powers must follow
    } else {
      return {mb.build(), negative ? F.neg(coeff) : coeff};  // constant term
    }
  }

  while (true) {
    std::size_t vline = c.line, vcol = c.col;
    std::string v = read_ident(c);
    auto it = index.find(v);
    if (it == index.end()) throw ParseError(vline, vcol, "unknown variable '" + v + "'");
    std::uint32_t e = 1;
    c.skip_blanks();
    if (!c.eof() && c.peek() == '^') {
      c.advance();
      c.skip_blanks();
      e = static_cast<std::uint32_t>(read_uint(c));
      c.skip_blanks();
    }
    mb.raise(it->second, e);
    have_factor = true;
    if (!c.eof() && c.peek() == '*') {
      c.advance();
      c.skip_blanks();
      continue;
    }
    break;
  }
  if (!have_factor) c.fail("expected a variable power");
  return {mb.build(), negative ? F.neg(coeff) : coeff};
}

Polynomial parse_poly_line(Cursor& c, const InputSystem& sys,
                           const std::map<std::string, std::size_t>& index) {
  std::vector<Term> terms;
  c.skip_blanks();
  bool negative = false;
  if (c.peek() == '+' || c.peek() == '-') {
    negative = c.peek() == '-';
    c.advance();
    c.skip_blanks();
  }
  while (true) {
    terms.push_back(parse_term(c, sys, index, negative));
    c.skip_blanks();
    if (c.eof() || c.peek() == '\n' || c.peek() == '#') break;
    if (c.peek() == '+' || c.peek() == '-') {
      negative = c.peek() == '-';
      c.advance();
      c.skip_blanks();
      continue;
    }
    c.fail("expected '+', '-' or end of line");
  }
  return Polynomial::from_terms(sys.ring, std::move(terms));
}

void skip_rest_of_line(Cursor& c) {
  while (!c.eof() && c.peek() != '\n') c.advance();
  if (!c.eof()) c.advance();
}

}  // namespace

InputSystem parse_input(std::string_view text) {
  Cursor c{text};
  InputSystem sys;
  std::map<std::string, std::size_t> index;

  // Skip leading blank/comment lines before the header.
  while (!c.eof()) {
    c.skip_blanks();
    if (!c.eof() && (c.peek() == '\n' || c.peek() == '#')) {
      skip_rest_of_line(c);
      continue;
    }
    break;
  }
  if (c.eof()) c.fail("missing header line");
  parse_header(c, sys, index);
  skip_rest_of_line(c);

  while (!c.eof()) {
    c.skip_blanks();
    if (c.eof()) break;
    if (c.peek() == '\n' || c.peek() == '#') {
      skip_rest_of_line(c);
      continue;
    }
    sys.polys.push_back(parse_poly_line(c, sys, index));
    skip_rest_of_line(c);
  }
  return sys;
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& varnames) {
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m.exp(i) == 0) continue;
    if (!s.empty()) s += '*';
    s += varnames[i];
    if (m.exp(i) > 1) {
      s += '^';
      s += std::to_string(m.exp(i));
    }
  }
  return s;
}

std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& varnames,
                              const PrintOptions& opt) {
  if (p.is_zero()) return "0";
  const std::uint32_t modulus = p.ring().field.modulus();
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::uint32_t v = t.coeff.v;
    bool neg = false;
    if (opt.symmetric_coeffs && v > modulus / 2) {
      neg = true;
      v = modulus - v;
    }
    if (first) {
      if (neg) s += '-';
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    std::string mono = format_monomial(t.mono, varnames);
    if (mono.empty()) {
      s += std::to_string(v);
    } else {
      if (v != 1) {
        s += std::to_string(v);
        s += '*';
      }
      s += mono;
    }
  }
  return s;
}

std::string format_header(const Ring& ring, const std::vector<std::string>& varnames) {
  std::string s = "ring: p=" + std::to_string(ring.field.modulus()) + " vars=";
  for (std::size_t i = 0; i < varnames.size(); ++i) {
    if (i) s += ',';
    s += varnames[i];
  }
  s += " order=";
  s += ring.order == OrderKind::grevlex ? "grevlex" : "lex";
  return s;
}

}  // namespace sgb
