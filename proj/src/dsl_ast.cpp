#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include "blip/dsl.hpp"

namespace blip::dsl {

namespace {

ExprPtr make(Node node) { return std::make_shared<const Expr>(Expr{std::move(node)}); }

void require_child(const ExprPtr& e) {
  if (!e) throw std::invalid_argument("expression child must not be null");
}

bool same(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return a == b;
  return *a == *b;
}

// Shortest decimal text that reads back as the same double.
std::string number_text(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// Binding strength, loosest first.
enum Level { kAdditive = 0, kTerm = 1, kUnary = 2, kAtom = 3 };

Level level_of(const Expr& e) {
  return std::visit(
      [](const auto& n) -> Level {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Add> || std::is_same_v<T, Sub>) return kAdditive;
        else if constexpr (std::is_same_v<T, Scale>) return kTerm;
        else if constexpr (std::is_same_v<T, Neg>) return kUnary;
        else return kAtom;
      },
      e.node);
}

void render(const Expr& e, Level context, std::string& out);

void render_child(const ExprPtr& e, Level context, std::string& out) {
  render(*e, context, out);
}

void render(const Expr& e, Level context, std::string& out) {
  const bool parens = level_of(e) < context;
  if (parens) out += '(';
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ImageVar>) {
          out += n.name;
        } else if constexpr (std::is_same_v<T, GrayConst>) {
          out += number_text(n.value.value());
        } else if constexpr (std::is_same_v<T, ColorConst>) {
          out += '(' + number_text(n.value.r.value()) + ", " + number_text(n.value.g.value()) +
                 ", " + number_text(n.value.b.value()) + ')';
        } else if constexpr (std::is_same_v<T, Add> || std::is_same_v<T, Sub>) {
          render_child(n.lhs, kAdditive, out);
          out += std::is_same_v<T, Add> ? " <+> " : " <-> ";
          render_child(n.rhs, kTerm, out);
        } else if constexpr (std::is_same_v<T, Neg>) {
          out += "<-> ";
          render_child(n.operand, kUnary, out);
        } else if constexpr (std::is_same_v<T, Scale>) {
          out += number_text(n.scalar) + " <x> ";
          render_child(n.operand, kTerm, out);
        } else if constexpr (std::is_same_v<T, PosPart>) {
          out += std::get<ImageVar>(n.operand->node).name + "_+";
        } else {
          out += std::get<ImageVar>(n.operand->node).name + "_-";
        }
      },
      e.node);
  if (parens) out += ')';
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, ImageVar>) return x.name == y.name;
        else if constexpr (std::is_same_v<T, GrayConst> || std::is_same_v<T, ColorConst>)
          return x.value == y.value;
        else if constexpr (std::is_same_v<T, Add> || std::is_same_v<T, Sub>)
          return same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
        else if constexpr (std::is_same_v<T, Scale>)
          return x.scalar == y.scalar && same(x.operand, y.operand);
        else return same(x.operand, y.operand);
      },
      a.node);
}

ExprPtr var(std::string name) {
  const auto ident_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0])) ||
      !std::all_of(name.begin(), name.end(), ident_char)) {
    throw std::invalid_argument("invalid variable name '" + name + "'");
  }
  return make(ImageVar{std::move(name)});
}

ExprPtr gray(GrayLevel value) { return make(GrayConst{value}); }

ExprPtr color(const ColorVec& value) { return make(ColorConst{value}); }

ExprPtr add(ExprPtr lhs, ExprPtr rhs) {
  require_child(lhs);
  require_child(rhs);
  return make(Add{std::move(lhs), std::move(rhs)});
}

ExprPtr sub(ExprPtr lhs, ExprPtr rhs) {
  require_child(lhs);
  require_child(rhs);
  return make(Sub{std::move(lhs), std::move(rhs)});
}

ExprPtr neg(ExprPtr operand) {
  require_child(operand);
  return make(Neg{std::move(operand)});
}

ExprPtr scale(double scalar, ExprPtr operand) {
  if (!std::isfinite(scalar)) throw std::invalid_argument("scalar must be finite");
  require_child(operand);
  return make(Scale{scalar, std::move(operand)});
}

ExprPtr pos_part(ExprPtr operand) {
  require_child(operand);
  if (!std::holds_alternative<ImageVar>(operand->node)) {
    throw std::invalid_argument("positive part applies to a variable only");
  }
  return make(PosPart{std::move(operand)});
}

ExprPtr neg_part(ExprPtr operand) {
  require_child(operand);
  if (!std::holds_alternative<ImageVar>(operand->node)) {
    throw std::invalid_argument("negative part applies to a variable only");
  }
  return make(NegPart{std::move(operand)});
}

std::string pretty(const Expr& e) {
  std::string out;
  render(e, kAdditive, out);
  return out;
}

}  // namespace blip::dsl
