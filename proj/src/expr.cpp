#include "cqroots/expr.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <vector>

namespace cqroots {

namespace {

enum class Tok { Number, Unit, Plus, Minus, Star, Slash, LParen, RParen, End };

struct Token {
  Tok kind;
  double num = 0.0;
  std::string text;
  size_t pos = 0;
};

bool is_blade_name(const std::string& s) {
  for (const char* n : kBladeNames)
    if (s == n) return true;
  return s != "1";  // "1" is a blade name but never a token
}

// Tokens: numbers (exponents must be signed, so `2e1` lexes as 2 * e1),
// units i j k I e1 e2 e3 e12 e13 e23 e123, operators, parentheses.
std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  size_t at = 0;
  while (at < s.size()) {
    const char ch = s[at];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++at;
      continue;
    }
    const size_t start = at;
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      size_t end = at;
      bool any_digit = false;
      while (end < s.size() &&
             std::isdigit(static_cast<unsigned char>(s[end]))) {
        ++end;
        any_digit = true;
      }
      if (end < s.size() && s[end] == '.') {
        ++end;
        while (end < s.size() &&
               std::isdigit(static_cast<unsigned char>(s[end]))) {
          ++end;
          any_digit = true;
        }
      }
      if (!any_digit) throw ParseError("malformed number", start);
      if (end + 2 < s.size() && (s[end] == 'e' || s[end] == 'E') &&
          (s[end + 1] == '+' || s[end + 1] == '-') &&
          std::isdigit(static_cast<unsigned char>(s[end + 2]))) {
        end += 2;
        while (end < s.size() &&
               std::isdigit(static_cast<unsigned char>(s[end])))
          ++end;
      }
      const std::string text(s.substr(start, end - start));
      out.push_back({Tok::Number, std::strtod(text.c_str(), nullptr), text,
                     start});
      at = end;
      continue;
    }
    if (ch == 'i' || ch == 'j' || ch == 'k' || ch == 'I') {
      out.push_back({Tok::Unit, 0.0, std::string(1, ch), start});
      ++at;
      continue;
    }
    if (ch == 'e') {
      // Longest valid blade name: e123 > e12/e13/e23 > e1/e2/e3.
      std::string name = "e";
      size_t end = at + 1;
      std::string best;
      while (end < s.size() && name.size() < 4 &&
             std::isdigit(static_cast<unsigned char>(s[end]))) {
        name.push_back(s[end]);
        ++end;
        if (is_blade_name(name)) best = name;
      }
      if (best.empty())
        throw ParseError("unknown token starting with 'e'", start);
      out.push_back({Tok::Unit, 0.0, best, start});
      at += best.size();
      continue;
    }
    switch (ch) {
      case '+': out.push_back({Tok::Plus, 0.0, "+", start}); break;
      case '-': out.push_back({Tok::Minus, 0.0, "-", start}); break;
      case '*': out.push_back({Tok::Star, 0.0, "*", start}); break;
      case '/': out.push_back({Tok::Slash, 0.0, "/", start}); break;
      case '(': out.push_back({Tok::LParen, 0.0, "(", start}); break;
      case ')': out.push_back({Tok::RParen, 0.0, ")", start}); break;
      default:
        throw ParseError(std::string("unexpected character '") + ch + "'",
                         start);
    }
    ++at;
  }
  out.push_back({Tok::End, 0.0, "", s.size()});
  return out;
}

struct QuatCtx {
  Family family;
  using Value = ComplexQuaternion;
  Value number(double x) const {
    return ComplexQuaternion::scalar({x, 0.0}, family);
  }
  std::optional<Value> unit(const std::string& u) const {
    if (u == "i") return ComplexQuaternion::basis(1, family);
    if (u == "j") return ComplexQuaternion::basis(2, family);
    if (u == "k") return ComplexQuaternion::basis(3, family);
    if (u == "I") return ComplexQuaternion::basis(4, family);
    return std::nullopt;
  }
  const char* vocab() const { return "quaternion"; }
  Value mul(const Value& a, const Value& b) const { return cq_mul(a, b); }
  Value add(const Value& a, const Value& b) const { return cq_add(a, b); }
  Value sub(const Value& a, const Value& b) const { return cq_sub(a, b); }
  Value neg(const Value& a) const { return cq_neg(a); }
  Value scale(const Value& a, double x) const {
    return cq_scale(a, {x, 0.0});
  }
};

struct BladeCtx {
  Signature sig;
  using Value = Multivector3;
  Value number(double x) const { return Multivector3::scalar(x, sig); }
  std::optional<Value> unit(const std::string& u) const {
    for (int b = 1; b < 8; ++b)
      if (u == kBladeNames[static_cast<size_t>(b)])
        return Multivector3::blade(b, 1.0, sig);
    return std::nullopt;
  }
  const char* vocab() const { return "multivector"; }
  Value mul(const Value& a, const Value& b) const {
    return geometric_product(a, b);
  }
  Value add(const Value& a, const Value& b) const { return cqroots::add(a, b); }
  Value sub(const Value& a, const Value& b) const { return cqroots::sub(a, b); }
  Value neg(const Value& a) const { return cqroots::neg(a); }
  Value scale(const Value& a, double x) const { return cqroots::scale(a, x); }
};

template <class Ctx>
class Parser {
 public:
  Parser(const std::vector<Token>& toks, const Ctx& ctx)
      : toks_(toks), ctx_(ctx) {}

  typename Ctx::Value parse() {
    auto v = expr();
    if (peek().kind != Tok::End)
      throw ParseError("unexpected trailing token '" + peek().text + "'",
                       peek().pos);
    return v;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& take() { return toks_[at_++]; }

  typename Ctx::Value expr() {
    auto v = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool plus = take().kind == Tok::Plus;
      auto rhs = term();
      v = plus ? ctx_.add(v, rhs) : ctx_.sub(v, rhs);
    }
    return v;
  }

  typename Ctx::Value term() {
    auto v = factor();
    for (;;) {
      const Token& t = peek();
      if (t.kind == Tok::Star) {
        take();
        v = ctx_.mul(v, factor());
      } else if (t.kind == Tok::Slash) {
        take();
        if (peek().kind != Tok::Number)
          throw ParseError("divisor must be a numeric literal", peek().pos);
        const Token& n = take();
        if (n.num == 0.0) throw ParseError("division by zero", n.pos);
        v = ctx_.scale(v, 1.0 / n.num);
      } else if (t.kind == Tok::Number || t.kind == Tok::Unit ||
                 t.kind == Tok::LParen) {
        v = ctx_.mul(v, factor());  // juxtaposition
      } else {
        return v;
      }
    }
  }

  typename Ctx::Value factor() {
    if (peek().kind == Tok::Minus) {
      take();
      return ctx_.neg(factor());
    }
    if (peek().kind == Tok::Plus) {
      take();
      return factor();
    }
    return primary();
  }

  typename Ctx::Value primary() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::Number:
        return ctx_.number(t.num);
      case Tok::Unit: {
        auto v = ctx_.unit(t.text);
        if (!v)
          throw ParseError("unit '" + t.text + "' is not valid in a " +
                               ctx_.vocab() + " expression",
                           t.pos);
        return *v;
      }
      case Tok::LParen: {
        auto v = expr();
        if (peek().kind != Tok::RParen)
          throw ParseError("expected ')'", peek().pos);
        take();
        return v;
      }
      default:
        throw ParseError("expected a number, unit, or '('", t.pos);
    }
  }

  const std::vector<Token>& toks_;
  size_t at_ = 0;
  const Ctx& ctx_;
};

template <class Ctx>
typename Ctx::Value parse_with(std::string_view text, const Ctx& ctx) {
  const std::vector<Token> toks = tokenize(text);
  if (toks.size() == 1) throw ParseError("empty expression", 0);
  return Parser<Ctx>(toks, ctx).parse();
}

// One additive term of a printed expression; empty when the coefficient is
// zero. `unit` is "" for the scalar slot.
std::string complex_term(Complex c, const char* unit, int digits) {
  const double a = c.real(), b = c.imag();
  if (a == 0.0 && b == 0.0) return "";
  std::string out;
  if (a != 0.0 && b != 0.0) {
    out = "(" + format_real(a, digits) + (b < 0 ? "-" : "+") +
          (std::abs(b) == 1.0 ? "" : format_real(std::abs(b), digits)) + "I)";
  } else if (b == 0.0) {
    if (unit[0] == '\0') return format_real(a, digits);
    if (a == 1.0) return unit;
    if (a == -1.0) return std::string("-") + unit;
    out = format_real(a, digits);
  } else {
    out = (b == 1.0 ? "" : b == -1.0 ? "-" : format_real(b, digits)) + "I"s;
  }
  return out + unit;
}

std::string join_terms(const std::vector<std::string>& terms) {
  std::string out;
  for (const std::string& t : terms) {
    if (t.empty()) continue;
    if (!out.empty() && t[0] != '-') out += "+";
    out += t;
  }
  return out.empty() ? "0" : out;
}

using namespace std::string_literals;

}  // namespace

ComplexQuaternion parse_cq(std::string_view text, Family f) {
  return parse_with(text, QuatCtx{f});
}

Multivector3 parse_mv(std::string_view text, Signature sig) {
  return parse_with(text, BladeCtx{sig});
}

std::string format_real(double x, int digits) {
  if (x == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  if (std::strtod(buf, nullptr) != x)
    std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_cq(const ComplexQuaternion& q, int digits) {
  static constexpr std::array<const char*, 4> kUnits = {"", "i", "j", "k"};
  std::vector<std::string> terms;
  for (size_t l = 0; l < 4; ++l)
    terms.push_back(complex_term(q.q[l], kUnits[l], digits));
  return join_terms(terms);
}

std::string format_mv(const Multivector3& a, int digits) {
  std::vector<std::string> terms;
  for (size_t b = 0; b < 8; ++b) {
    const double x = a.c[b];
    if (x == 0.0) continue;
    if (b == kScalar) {
      terms.push_back(format_real(x, digits));
    } else if (x == 1.0) {
      terms.push_back(kBladeNames[b]);
    } else if (x == -1.0) {
      terms.push_back("-"s + kBladeNames[b]);
    } else {
      terms.push_back(format_real(x, digits) + std::string(kBladeNames[b]));
    }
  }
  return join_terms(terms);
}

}  // namespace cqroots
