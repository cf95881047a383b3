#pragma once

#include <optional>
#include <string>
#include <vector>

#include "satpow/ideal_ops.hpp"
#include "satpow/module_ops.hpp"

namespace satpow {

enum class Command { Saturate, PowerSeq, Epsilon, TauCheck, OracleDiff };
enum class OutFormat { Csv, Json, Plotdata };

inline std::string command_name(Command c) {
  switch (c) {
    case Command::Saturate: return "saturate";
    case Command::PowerSeq: return "power-seq";
    case Command::Epsilon: return "epsilon";
    case Command::TauCheck: return "tau-check";
    case Command::OracleDiff: return "oracle-diff";
  }
  return "";
}

inline std::string format_name(OutFormat f) {
  switch (f) {
    case OutFormat::Csv: return "csv";
    case OutFormat::Json: return "json";
    case OutFormat::Plotdata: return "plotdata";
  }
  return "";
}

inline std::optional<OutFormat> format_from_name(const std::string& s) {
  if (s == "csv") return OutFormat::Csv;
  if (s == "json") return OutFormat::Json;
  if (s == "plotdata") return OutFormat::Plotdata;
  return std::nullopt;
}

inline std::optional<Command> command_from_name(const std::string& s) {
  if (s == "saturate") return Command::Saturate;
  if (s == "power-seq") return Command::PowerSeq;
  if (s == "epsilon") return Command::Epsilon;
  if (s == "tau-check") return Command::TauCheck;
  if (s == "oracle-diff") return Command::OracleDiff;
  return std::nullopt;
}

// Parsed job: a ring, one target (ideal or module), and settings. Settings
// left unset here can be filled in by command line flags later.
struct JobSpec {
  Ring ring{std::vector<std::string>{"x"}, Order::grevlex()};
  bool is_module = false;
  int gamma = 1;
  std::vector<Poly> ideal_gens;       // when !is_module
  std::vector<VecPoly> module_gens;   // when is_module
  std::optional<Command> cmd;
  std::optional<int> K;
  std::optional<OutFormat> format;
  std::optional<Rational> tol;
  std::optional<long> cap;
};

namespace jobdetail {

struct Token {
  enum Kind { Ident, Number, Punct, End } kind = End;
  std::string text;
  int line = 1;
  int col = 1;
};

inline bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
inline bool ident_char(char c) {
  return ident_start(c) || (c >= '0' && c <= '9');
}
inline bool digit(char c) { return c >= '0' && c <= '9'; }

inline std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (text[i + j] == '\n') { ++line; col = 1; } else { ++col; }
    }
    i += n;
  };
  static const std::string punct = "[](),;=+-*^/";
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { advance(1); continue; }
    if (c == '#') {
      std::size_t n = 0;
      while (i + n < text.size() && text[i + n] != '\n') ++n;
      advance(n);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.col = col;
    if (ident_start(c)) {
      std::size_t n = 1;
      while (i + n < text.size() && ident_char(text[i + n])) ++n;
      tok.kind = Token::Ident;
      tok.text = text.substr(i, n);
      advance(n);
    } else if (digit(c)) {
      std::size_t n = 1;
      while (i + n < text.size() && digit(text[i + n])) ++n;
      if (i + n < text.size() && text[i + n] == '.') {
        ++n;
        if (i + n >= text.size() || !digit(text[i + n]))
          throw ParseError("malformed number", line, col);
        while (i + n < text.size() && digit(text[i + n])) ++n;
      }
      tok.kind = Token::Number;
      tok.text = text.substr(i, n);
      advance(n);
    } else if (punct.find(c) != std::string::npos) {
      tok.kind = Token::Punct;
      tok.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line,
                       col);
    }
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = Token::End;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

// Recursive descent over the token stream. Polynomial expressions share the
// grammar with standalone parsing (parse_poly below).
class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  JobSpec parse_job() {
    JobSpec job;
    bool have_ring = false, have_target = false;
    while (peek().kind != Token::End) {
      if (is_punct(";")) { next(); continue; }
      const Token& t = peek();
      if (t.kind != Token::Ident)
        throw ParseError("expected a statement", t.line, t.col);
      if (t.text == "ring") {
        if (have_ring) throw ParseError("duplicate ring declaration", t.line, t.col);
        job.ring = parse_ring();
        have_ring = true;
      } else if (t.text == "ideal" || t.text == "module") {
        if (!have_ring)
          throw ParseError("target declared before the ring", t.line, t.col);
        if (have_target)
          throw ParseError("duplicate target declaration", t.line, t.col);
        if (t.text == "ideal") {
          parse_ideal(job);
        } else {
          parse_module(job);
        }
        have_target = true;
      } else if (t.text == "K" || t.text == "cmd" || t.text == "format" ||
                 t.text == "tol" || t.text == "cap") {
        parse_setting(job);
      } else {
        throw ParseError("unknown statement '" + t.text + "'", t.line, t.col);
      }
      if (peek().kind == Token::End) break;
      expect_punct(";");
    }
    const Token& fin = peek();
    if (!have_ring) throw ParseError("missing ring declaration", fin.line, fin.col);
    if (!have_target) throw ParseError("missing ideal or module declaration", fin.line, fin.col);
    if (!job.cmd) throw ParseError("missing cmd setting", fin.line, fin.col);
    return job;
  }

  // Standalone polynomial over a known ring; must consume all input.
  Poly parse_full_poly(const Ring& ring) {
    ring_ = &ring;
    Poly p = parse_expr();
    const Token& t = peek();
    if (t.kind != Token::End)
      throw ParseError("trailing input after polynomial", t.line, t.col);
    return p;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool is_punct(const char* s) const {
    return peek().kind == Token::Punct && peek().text == s;
  }
  const Token& expect_punct(const char* s) {
    if (!is_punct(s))
      throw ParseError(std::string("expected '") + s + "'", peek().line,
                       peek().col);
    return next();
  }
  const Token& expect_ident() {
    if (peek().kind != Token::Ident)
      throw ParseError("expected an identifier", peek().line, peek().col);
    return next();
  }
  const Token& expect_number() {
    if (peek().kind != Token::Number)
      throw ParseError("expected a number", peek().line, peek().col);
    return next();
  }

  Ring parse_ring() {
    next();  // 'ring'
    const Token& field = expect_ident();
    if (field.text != "Q")
      throw ParseError("only the rational field Q is supported", field.line,
                       field.col);
    expect_punct("[");
    std::vector<std::string> names;
    while (true) {
      const Token& v = expect_ident();
      for (const auto& seen : names)
        if (seen == v.text)
          throw ParseError("duplicate variable '" + v.text + "'", v.line, v.col);
      names.push_back(v.text);
      if (is_punct(",")) { next(); continue; }
      break;
    }
    expect_punct("]");
    return Ring(names, Order::grevlex());
  }

  void parse_ideal(JobSpec& job) {
    const Token& kw = next();  // 'ideal'
    ring_ = &job.ring;
    expect_punct("(");
    job.is_module = false;
    job.gamma = 1;
    while (true) {
      const Token& at = peek();
      Poly g = parse_expr();
      if (g.is_zero())
        throw ParseError("zero generator in ideal", at.line, at.col);
      job.ideal_gens.push_back(std::move(g));
      if (is_punct(",")) { next(); continue; }
      break;
    }
    expect_punct(")");
    if (job.ideal_gens.empty())
      throw ParseError("ideal needs at least one generator", kw.line, kw.col);
  }

  void parse_module(JobSpec& job) {
    next();  // 'module'
    ring_ = &job.ring;
    expect_punct("(");
    job.is_module = true;
    std::vector<std::vector<Poly>> rows;
    while (true) {
      const Token& at = expect_punct("[");
      std::vector<Poly> coords;
      while (true) {
        coords.push_back(parse_expr());
        if (is_punct(",")) { next(); continue; }
        break;
      }
      expect_punct("]");
      if (!rows.empty() && rows.front().size() != coords.size())
        throw ParseError("module generators must share one length", at.line,
                         at.col);
      bool all_zero = true;
      for (const auto& c : coords) all_zero = all_zero && c.is_zero();
      if (all_zero)
        throw ParseError("zero generator in module", at.line, at.col);
      rows.push_back(std::move(coords));
      if (is_punct(",")) { next(); continue; }
      break;
    }
    expect_punct(")");
    job.gamma = static_cast<int>(rows.front().size());
    for (auto& row : rows)
      job.module_gens.push_back(VecPoly::from_components(std::move(row)));
  }

  void parse_setting(JobSpec& job) {
    const Token& key = next();
    expect_punct("=");
    if (key.text == "K") {
      if (job.K) throw ParseError("duplicate setting K", key.line, key.col);
      job.K = parse_int(1, "K");
    } else if (key.text == "cap") {
      if (job.cap) throw ParseError("duplicate setting cap", key.line, key.col);
      job.cap = parse_int(1, "cap");
    } else if (key.text == "tol") {
      if (job.tol) throw ParseError("duplicate setting tol", key.line, key.col);
      const Token& v = expect_number();
      std::string text = v.text;
      if (is_punct("/")) {
        next();
        text += "/" + expect_number().text;
      }
      Rational r = Rational::parse(text);
      if (r.sign() <= 0)
        throw ParseError("tol must be positive", v.line, v.col);
      job.tol = r;
    } else if (key.text == "format") {
      if (job.format)
        throw ParseError("duplicate setting format", key.line, key.col);
      const Token& v = expect_ident();
      auto f = format_from_name(v.text);
      if (!f) throw ParseError("unknown format '" + v.text + "'", v.line, v.col);
      job.format = *f;
    } else {  // cmd
      if (job.cmd) throw ParseError("duplicate setting cmd", key.line, key.col);
      const Token& v = expect_ident();
      std::string name = v.text;
      while (is_punct("-") && peek(1).kind == Token::Ident) {
        next();
        name += "-" + next().text;
      }
      auto c = command_from_name(name);
      if (!c) throw ParseError("unknown command '" + name + "'", v.line, v.col);
      job.cmd = *c;
    }
  }

  long parse_int(long min_value, const std::string& what) {
    const Token& v = expect_number();
    if (v.text.find('.') != std::string::npos)
      throw ParseError(what + " must be an integer", v.line, v.col);
    if (v.text.size() > 9)
      throw ParseError(what + " is out of range", v.line, v.col);
    long value = std::stol(v.text);
    if (value < min_value)
      throw ParseError(what + " must be at least " + std::to_string(min_value),
                       v.line, v.col);
    return value;
  }

  // expr := '-'? term (('+'|'-') term)*
  Poly parse_expr() {
    bool negate = false;
    if (is_punct("-")) { next(); negate = true; }
    Poly acc = parse_term();
    if (negate) acc = acc.scaled(Rational(-1));
    while (is_punct("+") || is_punct("-")) {
      bool minus = peek().text == "-";
      next();
      Poly t = parse_term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  // term := factor ('*' factor)*
  Poly parse_term() {
    Poly acc = parse_factor();
    while (is_punct("*")) {
      next();
      acc = acc * parse_factor();
    }
    return acc;
  }

  // factor := atom ('^' nat)?
  Poly parse_factor() {
    Poly base = parse_atom();
    if (is_punct("^")) {
      const Token& caret = next();
      const Token& e = expect_number();
      if (e.text.find('.') != std::string::npos || e.text.size() > 4)
        throw ParseError("bad exponent", e.line, e.col);
      (void)caret;
      return base.pow(static_cast<unsigned>(std::stol(e.text)));
    }
    return base;
  }

  // atom := number ('/' number)? | ident | '(' expr ')'
  Poly parse_atom() {
    const Token& t = peek();
    if (t.kind == Token::Number) {
      next();
      std::string text = t.text;
      if (is_punct("/")) {
        next();
        const Token& den = expect_number();
        if (den.text.find('.') != std::string::npos)
          throw ParseError("malformed rational literal", den.line, den.col);
        text += "/" + den.text;
      }
      return Poly::constant(*ring_, Rational::parse(text));
    }
    if (t.kind == Token::Ident) {
      next();
      int idx = ring_->var_index(t.text);
      if (idx < 0)
        throw ParseError("unknown variable '" + t.text + "'", t.line, t.col);
      return Poly::variable(*ring_, static_cast<std::size_t>(idx));
    }
    if (is_punct("(")) {
      next();
      Poly inner = parse_expr();
      expect_punct(")");
      return inner;
    }
    throw ParseError("expected a polynomial atom", t.line, t.col);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Ring* ring_ = nullptr;
};

}  // namespace jobdetail

inline JobSpec parse_job(const std::string& text) {
  return jobdetail::Parser(text).parse_job();
}

inline Poly parse_poly(const std::string& text, const Ring& ring) {
  return jobdetail::Parser(text).parse_full_poly(ring);
}

}  // namespace satpow
