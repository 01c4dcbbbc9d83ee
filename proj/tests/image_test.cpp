#include <doctest.h>

#include <cmath>
#include <random>

#include "blip/error.hpp"
#include "blip/image.hpp"
#include "blip/parallel.hpp"
#include "test_images.hpp"

using namespace blip;

namespace {

ImagePlane gray_const(double v, std::size_t w = 3, std::size_t h = 2) {
  return constant_image(w, h, GrayLevel(v));
}

struct WorkerReset {
  ~WorkerReset() { parallel::set_worker_count(0); }
};

}  // namespace

TEST_CASE("construction validates shape") {
  CHECK_THROWS_AS(ImagePlane(0, 1, std::vector<GrayLevel>{}), DimensionMismatch);
  CHECK_THROWS_AS(ImagePlane(2, 2, std::vector<GrayLevel>(3)), DimensionMismatch);
  const ImagePlane f = gray_const(0.1);
  CHECK(f.kind() == Kind::gray);
  CHECK_THROWS_AS(f.color(), KindMismatch);
}

TEST_CASE("constant images") {
  CHECK(constant_image(2, 2, GrayLevel{}) == ImagePlane(2, 2, std::vector<GrayLevel>(4)));
  const ImagePlane one = constant_image(1, 1, GrayLevel(0.93));
  CHECK(one.gray_at(0, 0).value() == 0.93);
  const ColorVec half{GrayLevel(0.5), GrayLevel(0.5), GrayLevel(0.5)};
  const ImagePlane col = constant_image(2, 2, half);
  CHECK(col.kind() == Kind::color);
  CHECK(col.color_at(1, 1) == half);
}

TEST_CASE("pointwise arithmetic") {
  std::mt19937_64 rng(1);
  const ImagePlane f = testimg::random_gray(5, 4, rng);
  const ImagePlane null = constant_image(5, 4, GrayLevel{});

  CHECK(img_add(f, null) == f);
  CHECK(img_add(f, img_neg(f)) == null);
  CHECK(img_sub(f, f) == null);
  CHECK(img_sub(null, f) == img_neg(f));
  CHECK(img_neg(img_neg(f)) == f);
  CHECK(img_neg(null) == null);
  CHECK(img_neg(gray_const(0.3)) == gray_const(-0.3));
  CHECK(img_scale(1.0, f) == f);

  const ImagePlane sum = img_add(gray_const(0.5), gray_const(0.5));
  for (auto v : sum.gray()) CHECK(std::fabs(v.value() - 0.8) < 1e-15);
  const ImagePlane diff = img_sub(gray_const(0.8), gray_const(0.5));
  for (auto v : diff.gray()) CHECK(std::fabs(v.value() - 0.5) < 1e-15);
  const ImagePlane twice = img_scale(2.0, gray_const(0.5));
  for (auto v : twice.gray()) CHECK(std::fabs(v.value() - 0.8) < 1e-15);

  // Stretch by 7 is exactly gscale(7, .) at every pixel.
  const ImagePlane stretched = img_scale(7.0, f);
  for (std::size_t i = 0; i < f.pixel_count(); ++i) {
    CHECK(stretched.gray()[i] == gscale(7.0, f.gray()[i]));
  }
}

TEST_CASE("lifting is pointwise and bit-exact") {
  std::mt19937_64 rng(2);
  const ImagePlane a = testimg::random_color(7, 6, rng);
  const ImagePlane b = testimg::random_color(7, 6, rng);
  const ImagePlane s = img_add(a, b);
  const ImagePlane d = img_sub(a, b);
  const ImagePlane m = img_scale(-2.25, a);
  for (std::size_t i = 0; i < a.pixel_count(); ++i) {
    CHECK(s.color()[i] == cadd(a.color()[i], b.color()[i]));
    CHECK(d.color()[i] == csub(a.color()[i], b.color()[i]));
    CHECK(m.color()[i] == cscale(-2.25, a.color()[i]));
  }
}

TEST_CASE("mismatched operands are rejected") {
  std::mt19937_64 rng(3);
  const ImagePlane g34 = testimg::random_gray(3, 4, rng);
  const ImagePlane g43 = testimg::random_gray(4, 3, rng);
  const ImagePlane c34 = testimg::random_color(3, 4, rng);
  CHECK_THROWS_AS(img_add(g34, g43), DimensionMismatch);
  CHECK_THROWS_AS(img_add(g34, c34), KindMismatch);
  CHECK_THROWS_AS(img_sub(g34, c34), KindMismatch);
  CHECK_THROWS_AS(l2_dot(g34, g43), DimensionMismatch);
  CHECK_THROWS_AS(l2_dot(c34, g34), KindMismatch);
}

TEST_CASE("positive and negative parts") {
  CHECK(pos_part(gray_const(0.3)) == gray_const(0.3));
  CHECK(neg_part(gray_const(0.3)) == gray_const(0.0));
  CHECK(pos_part(gray_const(-0.3)) == gray_const(0.0));
  CHECK(neg_part(gray_const(-0.3)) == gray_const(-0.3));

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const ImagePlane f = testimg::random_gray(6, 5, rng);
    CHECK(img_add(pos_part(f), neg_part(f)) == f);
    CHECK(pos_part(img_neg(f)) == img_neg(neg_part(f)));
    const ImagePlane c = testimg::random_color(4, 4, rng);
    CHECK(img_add(pos_part(c), neg_part(c)) == c);
  }
}

TEST_CASE("discrete L2 structure") {
  std::mt19937_64 rng(5);
  const ImagePlane f = testimg::random_gray(4, 4, rng);
  CHECK(l2_dot(constant_image(4, 4, GrayLevel{}), f) == 0.0);
  CHECK(l2_norm(constant_image(4, 4, GrayLevel{})) == 0.0);
  CHECK(l2_dot(testimg::gray_row({0.5}), testimg::gray_row({0.5})) ==
        doctest::Approx(frozen::kAtanhHalfSq).epsilon(1e-15));
  CHECK(l2_dot(testimg::gray_row({0.5, -0.5}), testimg::gray_row({0.5, -0.5})) ==
        doctest::Approx(frozen::kTwoAtanhHalfSq).epsilon(1e-15));
  CHECK(l2_norm(testimg::gray_row({0.5})) == doctest::Approx(frozen::kAtanhHalf).epsilon(1e-15));
  CHECK(l2_norm(testimg::gray_row({0.5, 0.5})) ==
        doctest::Approx(frozen::kSqrt2AtanhHalf).epsilon(1e-15));

  for (int trial = 0; trial < 100; ++trial) {
    const ImagePlane a = testimg::random_color(5, 3, rng, 0.9);
    const ImagePlane b = testimg::random_color(5, 3, rng, 0.9);
    CHECK(std::fabs(l2_dot(a, b)) <= l2_norm(a) * l2_norm(b) * (1 + 1e-12));
    CHECK(l2_norm(img_add(a, b)) <= l2_norm(a) + l2_norm(b) + 1e-12);
    const double lambda = 1.7;  // |1.7 * atanh(0.9)| < 30
    CHECK(l2_norm(img_scale(lambda, a)) == doctest::Approx(lambda * l2_norm(a)).epsilon(1e-9));
  }
}

TEST_CASE("results do not depend on the worker count") {
  WorkerReset reset;
  std::mt19937_64 rng(6);
  const ImagePlane a = testimg::random_color(64, 300, rng);
  const ImagePlane b = testimg::random_color(64, 300, rng);

  parallel::set_worker_count(1);
  const ImagePlane sum1 = img_add(a, b);
  const ImagePlane scaled1 = img_scale(3.5, a);
  const double dot1 = l2_dot(a, b);

  for (std::size_t workers : {2u, 3u, 7u, 16u}) {
    parallel::set_worker_count(workers);
    CHECK(img_add(a, b) == sum1);
    CHECK(img_scale(3.5, a) == scaled1);
    CHECK(l2_dot(a, b) == doctest::Approx(dot1).epsilon(1e-9));
  }
}

TEST_CASE("chunk bounds cover the rows exactly") {
  for (std::size_t rows : {1u, 5u, 16u, 100u, 257u}) {
    for (std::size_t chunks = 1; chunks <= std::min<std::size_t>(rows, 9); ++chunks) {
      std::size_t expect = 0;
      for (std::size_t k = 0; k < chunks; ++k) {
        const auto r = parallel::chunk_bounds(rows, chunks, k);
        CHECK(r.begin == expect);
        CHECK(r.end > r.begin);
        expect = r.end;
      }
      CHECK(expect == rows);
    }
  }
}
