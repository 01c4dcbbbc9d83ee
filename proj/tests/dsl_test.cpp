#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "blip/dsl.hpp"
#include "blip/error.hpp"
#include "test_images.hpp"

using namespace blip;
using namespace blip::dsl;

namespace {

GrayLevel g(double v) { return GrayLevel(v); }
ColorVec c(double r, double gr, double b) { return {g(r), g(gr), g(b)}; }

// Random well-formed trees for the round-trip property.
class TreeGen {
 public:
  explicit TreeGen(std::uint64_t seed) : rng_(seed) {}

  ExprPtr tree(int depth) {
    const int kind = std::uniform_int_distribution<int>(0, depth <= 0 ? 3 : 9)(rng_);
    switch (kind) {
      case 0: return var(pick_name());
      case 1: return gray(g(level()));
      case 2: return color(c(level(), level(), level()));
      case 3: return std::uniform_int_distribution<int>(0, 1)(rng_) ? pos_part(var(pick_name()))
                                                                   : neg_part(var(pick_name()));
      case 4:
      case 5: return add(tree(depth - 1), tree(depth - 1));
      case 6: return sub(tree(depth - 1), tree(depth - 1));
      case 7: return neg(tree(depth - 1));
      default: return scale(scalar(), tree(depth - 1));
    }
  }

 private:
  std::string pick_name() {
    static const char* names[] = {"f", "v", "I_G", "h", "x1"};
    return names[std::uniform_int_distribution<int>(0, 4)(rng_)];
  }
  double level() {
    // Mix short decimals and full-precision doubles.
    const double raw = std::uniform_real_distribution<double>(-0.999, 0.999)(rng_);
    return std::uniform_int_distribution<int>(0, 1)(rng_) ? raw : std::clamp(std::round(raw * 100) / 100, -0.99, 0.99);
  }
  double scalar() {
    const double raw = std::uniform_real_distribution<double>(-20.0, 20.0)(rng_);
    return std::uniform_int_distribution<int>(0, 2)(rng_) ? std::round(raw * 10) / 10 : raw * 1e-7;
  }
  std::mt19937_64 rng_;
};

SyntaxError syntax_error_of(std::string_view text) {
  try {
    parse(text);
  } catch (const SyntaxError& e) {
    return e;
  }
  FAIL("expected a syntax error for: " << std::string(text));
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("parse caption expressions") {
  CHECK(*parse("f <+> 0.93") == *add(var("f"), gray(g(0.93))));
  CHECK(*parse("2 <x> (f <+> 0.5)") == *scale(2, add(var("f"), gray(g(0.5)))));
  CHECK(*parse("1.43 <x> f <-> 1.39 <x> v <-> I_G") ==
        *sub(sub(scale(1.43, var("f")), scale(1.39, var("v"))), var("I_G")));
  CHECK(*parse("<-> f") == *neg(var("f")));
  CHECK(*parse("f_+") == *pos_part(var("f")));
  CHECK(*parse("f_-") == *neg_part(var("f")));
  CHECK(*parse("1.7 <x> h <+> 0.2") == *add(scale(1.7, var("h")), gray(g(0.2))));
  CHECK(*parse("f <+> (0.1, -0.2, 0.3)") == *add(var("f"), color(c(0.1, -0.2, 0.3))));
}

TEST_CASE("precedence and associativity") {
  CHECK(*parse("3 <x> f <+> 0.5") == *add(scale(3, var("f")), gray(g(0.5))));
  CHECK(*parse("f <-> v <+> h") == *add(sub(var("f"), var("v")), var("h")));
  CHECK(*parse("2 <x> 3 <x> f") == *scale(2, scale(3, var("f"))));
  CHECK(*parse("2 <x> <-> f") == *scale(2, neg(var("f"))));
  CHECK(*parse("<-> <-> f") == *neg(neg(var("f"))));
  CHECK(*parse("f<->-0.3") == *sub(var("f"), gray(g(-0.3))));
  CHECK(*parse("1e-1 <x> f") == *scale(0.1, var("f")));
}

TEST_CASE("syntax errors carry positions and expectations") {
  SyntaxError e = syntax_error_of("f <+>");
  CHECK(e.position() == 6);
  e = syntax_error_of("f <+> 1.5");
  CHECK(e.position() == 7);
  CHECK(e.expected() == std::vector<std::string>{"'<x>'"});
  e = syntax_error_of("(f <+> 0.5");
  CHECK(e.position() == 11);
  CHECK(e.expected() == std::vector<std::string>{"')'"});
  e = syntax_error_of("f ^ 2");
  CHECK(e.position() == 3);
  e = syntax_error_of("f f");
  CHECK(e.position() == 3);
  CHECK(syntax_error_of("").position() == 1);
  CHECK(syntax_error_of("(0.1, 0.2)").position() == 10);
  CHECK(syntax_error_of("(0.1, 2, 0.3)").position() == 7);
  CHECK(syntax_error_of("<-> 2 <x> f").position() == 5);
  CHECK(syntax_error_of("(f)_+").position() == 4);
  CHECK(syntax_error_of("1e <x> f").position() == 1);
  CHECK(syntax_error_of("1e999 <x> f").position() == 1);
  CHECK(syntax_error_of(std::string(5000, '(') + "f").position() > 0);
}

TEST_CASE("pretty printing") {
  CHECK(pretty(*add(var("f"), gray(g(0.93)))) == "f <+> 0.93");
  CHECK(pretty(*sub(sub(scale(1.43, var("f")), scale(1.39, var("v"))), var("I_G"))) ==
        "1.43 <x> f <-> 1.39 <x> v <-> I_G");
  CHECK(pretty(*neg(neg(var("f")))) == "<-> <-> f");
  CHECK(pretty(*scale(2, add(var("f"), gray(g(0.5))))) == "2 <x> (f <+> 0.5)");
  CHECK(pretty(*sub(var("f"), sub(var("g"), var("h")))) == "f <-> (g <-> h)");
  CHECK(pretty(*neg(scale(2, var("f")))) == "<-> (2 <x> f)");
  CHECK(pretty(*color(c(0.5, -0.25, 0))) == "(0.5, -0.25, 0)");
  CHECK(pretty(*pos_part(var("f"))) == "f_+");
}

TEST_CASE("round trip on random trees") {
  TreeGen gen(42);
  for (int i = 0; i < 3000; ++i) {
    const ExprPtr e = gen.tree(8);
    const std::string text = pretty(*e);
    INFO(text);
    CHECK(*parse(text) == *e);
  }
}

TEST_CASE("malformed input never escapes as anything but SyntaxError") {
  std::mt19937_64 rng(77);
  const std::string alphabet = "f v I_G <+> <-> <x> ( ) , _+ _- 0.5 2 -1e3 .7 # @ ^ \t";
  std::uniform_int_distribution<std::size_t> len(0, 40);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  int parsed = 0;
  for (int i = 0; i < 20000; ++i) {
    std::string text;
    const std::size_t n = len(rng);
    for (std::size_t k = 0; k < n; ++k) text += alphabet[pick(rng)];
    try {
      const ExprPtr e = parse(text);
      REQUIRE(e != nullptr);
      CHECK(*parse(pretty(*e)) == *e);
      ++parsed;
    } catch (const SyntaxError& err) {
      CHECK(err.position() >= 1);
      CHECK(err.position() <= text.size() + 1);
    }
  }
  CHECK(parsed > 0);
}

TEST_CASE("builders enforce tree invariants") {
  CHECK_THROWS_AS(pos_part(gray(g(0.1))), std::invalid_argument);
  CHECK_THROWS_AS(neg_part(add(var("f"), var("g"))), std::invalid_argument);
  CHECK_THROWS_AS(scale(std::numeric_limits<double>::infinity(), var("f")), std::invalid_argument);
  CHECK_THROWS_AS(var("2x"), std::invalid_argument);
  CHECK_THROWS_AS(add(nullptr, var("f")), std::invalid_argument);
}

TEST_CASE("typecheck") {
  std::mt19937_64 rng(1);
  Env gray_env(testimg::random_gray(4, 3, rng));
  Env color_env(testimg::random_color(4, 3, rng));

  const TypedExpr t1 = typecheck(parse("f <+> 0.5"), gray_env);
  CHECK(t1.kind == Kind::gray);
  CHECK(*t1.tree == *parse("f <+> 0.5"));

  const TypedExpr t2 = typecheck(parse("f <+> 0.5"), color_env);
  CHECK(t2.kind == Kind::color);
  CHECK(*t2.tree == *add(var("f"), color(c(0.5, 0.5, 0.5))));

  CHECK_THROWS_AS(typecheck(parse("f <+> (0.1, 0.2, 0.3)"), gray_env), ExprKindMismatch);
  try {
    typecheck(parse("0.2 <+> 2 <x> (f <-> (0.1, 0.2, 0.3))"), gray_env);
    FAIL("expected kind mismatch");
  } catch (const ExprKindMismatch& e) {
    CHECK(e.path() == "root.rhs.operand");
  }

  CHECK_THROWS_AS(typecheck(parse("f <-> I_G"), gray_env), UnboundVariable);

  Env shaped(testimg::random_gray(4, 3, rng));
  shaped.bind("I_G", std::make_shared<const ImagePlane>(testimg::random_gray(3, 4, rng)));
  CHECK_THROWS_AS(typecheck(parse("f <-> I_G"), shaped), ShapeMismatch);
  shaped.bind("C", std::make_shared<const ImagePlane>(testimg::random_color(4, 3, rng)));
  CHECK_THROWS_AS(typecheck(parse("f <-> C"), shaped), ExprKindMismatch);
  CHECK_THROWS_AS(shaped.bind("f", g(0.1)), ExprError);
}

TEST_CASE("evaluation matches hand-composed image-space calls") {
  std::mt19937_64 rng(2);
  const ImagePlane f = testimg::random_color(6, 5, rng);
  const ImagePlane ig = testimg::random_color(6, 5, rng);
  const ColorVec v = c(0.449, -0.241, -0.164);
  Env env(f);
  env.bind("v", v);
  env.bind("I_G", std::make_shared<const ImagePlane>(ig));

  CHECK(run("f", env) == f);
  CHECK(run("<-> f", env) == img_neg(f));
  CHECK(run("2.5 <x> (f <-> 0.7 <x> v)", env) ==
        img_scale(2.5, img_sub(f, img_scale(0.7, constant_image(6, 5, v)))));
  CHECK(run("1.43 <x> f <-> 1.39 <x> v <-> I_G", env) ==
        img_sub(img_sub(img_scale(1.43, f), img_scale(1.39, constant_image(6, 5, v))), ig));
  CHECK(run("3 <x> (f <+> 0.5)", env) ==
        img_scale(3, img_add(f, constant_image(6, 5, broadcast_gray(g(0.5))))));
  CHECK(run("0.5 <-> f", env) == img_sub(constant_image(6, 5, broadcast_gray(g(0.5))), f));
  CHECK(run("f_+", env) == pos_part(f));
  CHECK(run("f_-", env) == neg_part(f));

  // Purely constant expressions fill the input's shape.
  CHECK(run("0.2 <+> 0.3", env) == constant_image(6, 5, broadcast_gray(gadd(g(0.2), g(0.3)))));
  CHECK(run("v", env) == constant_image(6, 5, v));
  CHECK(run("v_+", env) == constant_image(6, 5, c(0.449, 0, 0)));

  Env gray_env(testimg::random_gray(3, 3, rng));
  gray_env.bind("k", g(-0.4));
  CHECK(run("f <-> k", gray_env) == img_sub(gray_env.input(), constant_image(3, 3, g(-0.4))));
  CHECK(run("k_-", gray_env) == constant_image(3, 3, g(-0.4)));
  Env color_env2(f);
  color_env2.bind("k", g(-0.4));
  CHECK(run("f <+> k_-", color_env2) == img_add(f, constant_image(6, 5, broadcast_gray(g(-0.4)))));
}
