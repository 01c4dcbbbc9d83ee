#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "blip/color.hpp"
#include "blip/gray.hpp"
#include "blip/image.hpp"

// Pixel-transform expressions written with ASCII spellings of the
// logarithmic operators:
//
//   f <+> 0.93                          brightness shift
//   7 <x> f                             contrast stretch
//   <-> f    f_+    f_-                 negative, positive/negative part
//   1.43 <x> f <-> 1.39 <x> v <-> I_G   color and illumination correction
//
// `<x>` binds tighter than `<+>`/`<->`; the additive operators associate
// left and `<x>` chains to the right. A number followed by `<x>` is a real
// scalar; a bare number is a gray constant and must lie in (-1, 1);
// `(r, g, b)` is a color constant.
namespace blip::dsl {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct ImageVar {
  std::string name;
};
struct GrayConst {
  GrayLevel value;
};
struct ColorConst {
  ColorVec value;
};
struct Add {
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Sub {
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Neg {
  ExprPtr operand;
};
// The scalar literal is stored inline: it is never an image.
struct Scale {
  double scalar;
  ExprPtr operand;
};
struct PosPart {
  ExprPtr operand;  // always an ImageVar
};
struct NegPart {
  ExprPtr operand;  // always an ImageVar
};

using Node = std::variant<ImageVar, GrayConst, ColorConst, Add, Sub, Neg, Scale, PosPart, NegPart>;

struct Expr {
  Node node;
};

// Structural equality; constants compare by value.
bool operator==(const Expr& a, const Expr& b);

// Node builders. They enforce the tree invariants and throw
// std::invalid_argument on violation (non-finite scalar, part of a
// non-variable, null child).
ExprPtr var(std::string name);
ExprPtr gray(GrayLevel value);
ExprPtr color(const ColorVec& value);
ExprPtr add(ExprPtr lhs, ExprPtr rhs);
ExprPtr sub(ExprPtr lhs, ExprPtr rhs);
ExprPtr neg(ExprPtr operand);
ExprPtr scale(double scalar, ExprPtr operand);
ExprPtr pos_part(ExprPtr operand);
ExprPtr neg_part(ExprPtr operand);

// Throws SyntaxError carrying a 1-based position and the expected tokens.
ExprPtr parse(std::string_view text);

// Canonical rendering with the fewest parentheses the grammar allows.
std::string pretty(const Expr& e);

using ImageRef = std::shared_ptr<const ImagePlane>;
using Binding = std::variant<ImageRef, GrayLevel, ColorVec>;

// Variable bindings. `f` is the input image and is bound at construction.
class Env {
 public:
  explicit Env(ImagePlane input);
  explicit Env(ImageRef input);

  // Throws ExprError when rebinding `f` or binding a null image.
  void bind(const std::string& name, Binding value);

  const ImagePlane& input() const noexcept { return *input_; }
  const Binding* find(const std::string& name) const;

 private:
  ImageRef input_;
  std::map<std::string, Binding, std::less<>> bindings_;
};

// A tree whose constants have been broadcast to the kind of the image they
// meet, together with the kind of image it evaluates to.
struct TypedExpr {
  ExprPtr tree;
  Kind kind;
};

// Throws UnboundVariable, ExprKindMismatch (with the node's path) or
// ShapeMismatch.
TypedExpr typecheck(const ExprPtr& e, const Env& env);

// Evaluates pointwise over the input's shape. Constants are never
// materialized as rasters except when the whole expression is constant.
ImagePlane evaluate(const TypedExpr& e, const Env& env);

// parse + typecheck + evaluate.
ImagePlane run(std::string_view text, const Env& env);

}  // namespace blip::dsl
