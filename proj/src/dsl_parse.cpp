#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "blip/dsl.hpp"
#include "blip/error.hpp"

namespace blip::dsl {

namespace {

enum class Tok { ident, number, plus, minus, times, lparen, rparen, comma, suffix_pos, suffix_neg, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;  // 1-based
  double number = 0.0;
};

std::string describe(const Token& t) {
  return t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
      if (i_ >= src_.size()) {
        out.push_back({Tok::end, "", src_.size() + 1});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  bool starts_with(std::string_view s) const { return src_.substr(i_).starts_with(s); }

  Token next() {
    const std::size_t start = i_;
    const std::size_t pos = start + 1;
    const char c = src_[i_];

    if (starts_with("<+>")) return advance(Tok::plus, 3, pos);
    if (starts_with("<->")) return advance(Tok::minus, 3, pos);
    if (starts_with("<x>")) return advance(Tok::times, 3, pos);
    if (c == '(') return advance(Tok::lparen, 1, pos);
    if (c == ')') return advance(Tok::rparen, 1, pos);
    if (c == ',') return advance(Tok::comma, 1, pos);
    if (c == '_' && i_ + 1 < src_.size() && (src_[i_ + 1] == '+' || src_[i_ + 1] == '-')) {
      return advance(src_[i_ + 1] == '+' ? Tok::suffix_pos : Tok::suffix_neg, 2, pos);
    }
    if (is_ident_start(c)) {
      while (i_ < src_.size() && is_ident_char(src_[i_])) {
        // "_+" and "_-" end an identifier.
        if (src_[i_] == '_' && i_ + 1 < src_.size() &&
            (src_[i_ + 1] == '+' || src_[i_ + 1] == '-')) {
          break;
        }
        ++i_;
      }
      return {Tok::ident, std::string(src_.substr(start, i_ - start)), pos};
    }
    if (is_digit(c) || c == '.' || c == '+' || c == '-') return number(pos);

    throw SyntaxError(pos, {"an operator", "an identifier", "a number", "'('"},
                      std::string("unexpected character '") + c + "'");
  }

  Token advance(Tok kind, std::size_t n, std::size_t pos) {
    Token t{kind, std::string(src_.substr(i_, n)), pos};
    i_ += n;
    return t;
  }

  Token number(std::size_t pos) {
    const std::size_t start = i_;
    if (src_[i_] == '+' || src_[i_] == '-') ++i_;
    std::size_t digits = 0;
    while (i_ < src_.size() && is_digit(src_[i_])) ++i_, ++digits;
    if (i_ < src_.size() && src_[i_] == '.') {
      ++i_;
      while (i_ < src_.size() && is_digit(src_[i_])) ++i_, ++digits;
    }
    if (digits == 0) throw SyntaxError(pos, {"a number"}, "malformed number");
    if (i_ < src_.size() && (src_[i_] == 'e' || src_[i_] == 'E')) {
      std::size_t j = i_ + 1;
      if (j < src_.size() && (src_[j] == '+' || src_[j] == '-')) ++j;
      if (j < src_.size() && is_digit(src_[j])) {
        while (j < src_.size() && is_digit(src_[j])) ++j;
        i_ = j;
      } else {
        throw SyntaxError(pos, {"exponent digits"}, "malformed number");
      }
    }
    std::string text(src_.substr(start, i_ - start));
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (*first == '+') ++first;
    double value = 0.0;
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last || !std::isfinite(value)) {
      throw SyntaxError(pos, {"a finite number"}, "number out of range");
    }
    return {Tok::number, std::move(text), pos, value};
  }

  std::string_view src_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ExprPtr parse_all() {
    ExprPtr e = parse_expr();
    if (peek().kind != Tok::end) fail({"'<+>'", "'<->'", "end of input"});
    return e;
  }

 private:
  static constexpr int kMaxDepth = 600;

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t k = std::min(i_ + ahead, toks_.size() - 1);
    return toks_[k];
  }
  const Token& take() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw SyntaxError(t.pos, std::move(expected), "unexpected " + describe(t));
  }

  void expect(Tok kind, const char* spelling) {
    if (peek().kind != kind) fail({spelling});
    take();
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : p(p) {
      if (++p.depth_ > kMaxDepth) {
        throw SyntaxError(p.peek().pos, {}, "expression nested too deeply");
      }
    }
    ~DepthGuard() { --p.depth_; }
    Parser& p;
  };

  GrayLevel gray_literal(const Token& t, std::vector<std::string> expected) const {
    if (!(t.number > -1.0 && t.number < 1.0)) {
      throw SyntaxError(t.pos, std::move(expected),
                        "gray constant " + t.text + " outside (-1, 1)");
    }
    return GrayLevel(t.number);
  }

  ExprPtr parse_expr() {
    DepthGuard guard(*this);
    ExprPtr lhs = parse_term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool is_add = take().kind == Tok::plus;
      ExprPtr rhs = parse_term();
      lhs = is_add ? add(std::move(lhs), std::move(rhs)) : sub(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  ExprPtr parse_term() {
    DepthGuard guard(*this);
    if (peek().kind == Tok::number && peek(1).kind == Tok::times) {
      const double scalar = take().number;
      take();
      return scale(scalar, parse_term());
    }
    return parse_unary();
  }

  ExprPtr parse_unary() {
    DepthGuard guard(*this);
    if (peek().kind == Tok::minus) {
      take();
      return neg(parse_unary());
    }
    return parse_atom();
  }

  ExprPtr parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::ident: {
        ExprPtr v = var(take().text);
        if (peek().kind == Tok::suffix_pos) {
          take();
          return pos_part(std::move(v));
        }
        if (peek().kind == Tok::suffix_neg) {
          take();
          return neg_part(std::move(v));
        }
        return v;
      }
      case Tok::number:
        return gray(gray_literal(take(), {"'<x>'"}));
      case Tok::lparen:
        if (peek(1).kind == Tok::number && peek(2).kind == Tok::comma) return parse_color();
        take();
        {
          ExprPtr inner = parse_expr();
          expect(Tok::rparen, "')'");
          return inner;
        }
      default:
        fail({"an identifier", "a number", "'('", "'<->'"});
    }
  }

  ExprPtr parse_color() {
    expect(Tok::lparen, "'('");
    GrayLevel c[3];
    for (int k = 0; k < 3; ++k) {
      if (k > 0) expect(Tok::comma, "','");
      if (peek().kind != Tok::number) fail({"a number"});
      c[k] = gray_literal(take(), {"a color component in (-1, 1)"});
    }
    expect(Tok::rparen, "')'");
    return color({c[0], c[1], c[2]});
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  int depth_ = 0;
};

}  // namespace

ExprPtr parse(std::string_view text) {
  return Parser(Lexer(text).run()).parse_all();
}

}  // namespace blip::dsl
