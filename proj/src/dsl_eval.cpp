#include <algorithm>
#include <string>

#include "blip/dsl.hpp"
#include "blip/error.hpp"

namespace blip::dsl {

namespace {

// Kind of a subexpression before broadcasting. `loose` marks gray
// constants, which adopt the kind of whatever image they meet.
enum class Inferred { loose, gray, color };

Inferred from_kind(Kind k) { return k == Kind::gray ? Inferred::gray : Inferred::color; }

Kind to_kind(Inferred k) { return k == Inferred::color ? Kind::color : Kind::gray; }

std::string shape_text(const ImagePlane& f) {
  return std::to_string(f.width()) + "x" + std::to_string(f.height());
}

class Checker {
 public:
  explicit Checker(const Env& env) : env_(env) {}

  Inferred infer(const Expr& e, const std::string& path) {
    return std::visit(
        [&](const auto& n) -> Inferred {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, ImageVar>) {
            return infer_var(n.name);
          } else if constexpr (std::is_same_v<T, GrayConst>) {
            return Inferred::loose;
          } else if constexpr (std::is_same_v<T, ColorConst>) {
            return Inferred::color;
          } else if constexpr (std::is_same_v<T, Add> || std::is_same_v<T, Sub>) {
            const Inferred l = infer(*n.lhs, path + ".lhs");
            const Inferred r = infer(*n.rhs, path + ".rhs");
            if (l == Inferred::loose) return r;
            if (r == Inferred::loose || l == r) return l;
            throw ExprKindMismatch(path, std::string("cannot combine ") +
                                             std::string(to_string(to_kind(l))) + " and " +
                                             std::string(to_string(to_kind(r))) + " operands");
          } else {
            return infer(*n.operand, path + ".operand");
          }
        },
        e.node);
  }

  // Rebuild the tree with loose constants widened to `target`.
  ExprPtr resolve(const ExprPtr& e, Kind target) {
    return std::visit(
        [&](const auto& n) -> ExprPtr {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, ImageVar>) {
            const Binding* b = env_.find(n.name);
            if (target == Kind::color) {
              if (const auto* c = std::get_if<GrayLevel>(b)) return color(broadcast_gray(*c));
            }
            return e;
          } else if constexpr (std::is_same_v<T, GrayConst>) {
            return target == Kind::color ? color(broadcast_gray(n.value)) : e;
          } else if constexpr (std::is_same_v<T, ColorConst>) {
            return e;
          } else if constexpr (std::is_same_v<T, Add>) {
            return add(resolve(n.lhs, target), resolve(n.rhs, target));
          } else if constexpr (std::is_same_v<T, Sub>) {
            return sub(resolve(n.lhs, target), resolve(n.rhs, target));
          } else if constexpr (std::is_same_v<T, Neg>) {
            return neg(resolve(n.operand, target));
          } else if constexpr (std::is_same_v<T, Scale>) {
            return scale(n.scalar, resolve(n.operand, target));
          } else if constexpr (std::is_same_v<T, PosPart>) {
            return resolve_part(e, n.operand, target, true);
          } else {
            return resolve_part(e, n.operand, target, false);
          }
        },
        e->node);
  }

 private:
  // A part of a gray-constant variable met by color folds to a constant,
  // since the grammar only lets parts apply to variables.
  ExprPtr resolve_part(const ExprPtr& e, const ExprPtr& operand, Kind target, bool positive) {
    const auto& name = std::get<ImageVar>(operand->node).name;
    if (target == Kind::color) {
      if (const auto* c = std::get_if<GrayLevel>(env_.find(name))) {
        const GrayLevel part =
            positive ? (c->value() > 0.0 ? *c : GrayLevel{}) : (c->value() < 0.0 ? *c : GrayLevel{});
        return color(broadcast_gray(part));
      }
    }
    return e;
  }

  Inferred infer_var(const std::string& name) {
    const Binding* b = env_.find(name);
    if (b == nullptr) throw UnboundVariable(name);
    if (const auto* img = std::get_if<ImageRef>(b)) {
      if (!(*img)->same_shape(env_.input())) {
        throw ShapeMismatch(name, "is " + shape_text(**img) + " but f is " +
                                      shape_text(env_.input()));
      }
      return from_kind((*img)->kind());
    }
    if (std::holds_alternative<ColorVec>(*b)) return Inferred::color;
    return Inferred::loose;
  }

  const Env& env_;
};

// An evaluated subexpression: an image, or a constant that is applied
// pointwise when it meets one.
using Value = std::variant<ImageRef, GrayLevel, ColorVec>;

GrayLevel pos0(GrayLevel v) { return v.value() > 0.0 ? v : GrayLevel{}; }
GrayLevel neg0(GrayLevel v) { return v.value() < 0.0 ? v : GrayLevel{}; }

template <class GrayFn, class ColorFn>
Value unary(const Value& v, GrayFn gray_fn, ColorFn color_fn) {
  if (const auto* img = std::get_if<ImageRef>(&v)) {
    return std::make_shared<const ImagePlane>(map_samples(**img, gray_fn, color_fn));
  }
  if (const auto* g = std::get_if<GrayLevel>(&v)) return gray_fn(*g);
  return color_fn(std::get<ColorVec>(v));
}

// Typechecking guarantees that gray constants never meet color operands
// here and vice versa.
template <class GrayFn, class ColorFn>
Value binary(const Value& a, const Value& b, GrayFn gray_fn, ColorFn color_fn) {
  const auto* ia = std::get_if<ImageRef>(&a);
  const auto* ib = std::get_if<ImageRef>(&b);
  if (ia && ib) {
    return std::make_shared<const ImagePlane>(zip_samples(**ia, **ib, gray_fn, color_fn));
  }
  if (ia) {
    if (const auto* g = std::get_if<GrayLevel>(&b)) {
      const GrayLevel c = *g;
      return unary(a, [&](GrayLevel x) { return gray_fn(x, c); },
                   [](const ColorVec& x) { return x; });
    }
    const ColorVec c = std::get<ColorVec>(b);
    return unary(a, [](GrayLevel x) { return x; },
                 [&](const ColorVec& x) { return color_fn(x, c); });
  }
  if (ib) {
    if (const auto* g = std::get_if<GrayLevel>(&a)) {
      const GrayLevel c = *g;
      return unary(b, [&](GrayLevel x) { return gray_fn(c, x); },
                   [](const ColorVec& x) { return x; });
    }
    const ColorVec c = std::get<ColorVec>(a);
    return unary(b, [](GrayLevel x) { return x; },
                 [&](const ColorVec& x) { return color_fn(c, x); });
  }
  if (const auto* g = std::get_if<GrayLevel>(&a)) return gray_fn(*g, std::get<GrayLevel>(b));
  return color_fn(std::get<ColorVec>(a), std::get<ColorVec>(b));
}

Value eval(const Expr& e, const Env& env) {
  return std::visit(
      [&](const auto& n) -> Value {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ImageVar>) {
          const Binding* b = env.find(n.name);
          if (b == nullptr) throw UnboundVariable(n.name);
          return std::visit([](const auto& x) -> Value { return x; }, *b);
        } else if constexpr (std::is_same_v<T, GrayConst>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, ColorConst>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, Add>) {
          return binary(eval(*n.lhs, env), eval(*n.rhs, env), gadd, cadd);
        } else if constexpr (std::is_same_v<T, Sub>) {
          return binary(eval(*n.lhs, env), eval(*n.rhs, env), gsub, csub);
        } else if constexpr (std::is_same_v<T, Neg>) {
          return unary(eval(*n.operand, env), gneg, cneg);
        } else if constexpr (std::is_same_v<T, Scale>) {
          const double s = n.scalar;
          return unary(
              eval(*n.operand, env), [s](GrayLevel v) { return gscale(s, v); },
              [s](const ColorVec& v) { return cscale(s, v); });
        } else if constexpr (std::is_same_v<T, PosPart>) {
          return unary(eval(*n.operand, env), pos0, [](const ColorVec& v) {
            return ColorVec{pos0(v.r), pos0(v.g), pos0(v.b)};
          });
        } else {
          return unary(eval(*n.operand, env), neg0, [](const ColorVec& v) {
            return ColorVec{neg0(v.r), neg0(v.g), neg0(v.b)};
          });
        }
      },
      e.node);
}

}  // namespace

Env::Env(ImagePlane input) : Env(std::make_shared<const ImagePlane>(std::move(input))) {}

Env::Env(ImageRef input) : input_(std::move(input)) {
  if (!input_) throw ExprError("input image must not be null");
  bindings_.emplace("f", input_);
}

void Env::bind(const std::string& name, Binding value) {
  if (name == "f") throw ExprError("'f' is reserved for the input image");
  if (const auto* img = std::get_if<ImageRef>(&value); img && !*img) {
    throw ExprError("binding '" + name + "' is a null image");
  }
  bindings_.insert_or_assign(name, std::move(value));
}

const Binding* Env::find(const std::string& name) const {
  const auto it = bindings_.find(name);
  return it == bindings_.end() ? nullptr : &it->second;
}

TypedExpr typecheck(const ExprPtr& e, const Env& env) {
  if (!e) throw ExprError("empty expression");
  Checker checker(env);
  const Inferred inferred = checker.infer(*e, "root");
  // A purely constant expression takes the kind of the input image.
  const Kind kind = inferred == Inferred::loose ? env.input().kind() : to_kind(inferred);
  return {checker.resolve(e, kind), kind};
}

ImagePlane evaluate(const TypedExpr& e, const Env& env) {
  const ImagePlane& f = env.input();
  const Value v = eval(*e.tree, env);
  if (const auto* img = std::get_if<ImageRef>(&v)) return **img;
  if (const auto* g = std::get_if<GrayLevel>(&v)) {
    if (e.kind == Kind::color) return constant_image(f.width(), f.height(), broadcast_gray(*g));
    return constant_image(f.width(), f.height(), *g);
  }
  return constant_image(f.width(), f.height(), std::get<ColorVec>(v));
}

ImagePlane run(std::string_view text, const Env& env) {
  return evaluate(typecheck(parse(text), env), env);
}

}  // namespace blip::dsl
