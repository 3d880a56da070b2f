#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>

#include "jordanlab/catalog.hpp"
#include "support.hpp"

using namespace jordanlab;

namespace {

const Field Q = Field::rationals();

using Mat4 = std::array<std::array<Scalar, 4>, 4>;

Mat4 zero4() {
  Mat4 m;
  for (auto& row : m) row.fill(Scalar::zero(Q));
  return m;
}

/// The embedding of the primer basis into 4x4 matrices.
Mat4 primer_embed_basis(std::size_t k) {
  Mat4 m = zero4();
  const Scalar one = Scalar::one(Q);
  switch (k) {
    case 0:
      for (int d = 0; d < 4; ++d) m[d][d] = one;
      break;
    case 1: m[0][1] = one; m[2][3] = one; break;
    case 2: m[0][2] = one; break;
    case 3: m[1][3] = one; break;
    case 4: m[0][3] = one; break;
    case 5: m[1][2] = one; break;
  }
  return m;
}

Mat4 primer_embed(const Vec& coords) {
  Mat4 m = zero4();
  for (std::size_t k = 0; k < 6; ++k) {
    Mat4 b = primer_embed_basis(k);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) m[r][c] += coords[k] * b[r][c];
    }
  }
  return m;
}

Mat4 mul4(const Mat4& a, const Mat4& b) {
  Mat4 m = zero4();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      for (int k = 0; k < 4; ++k) m[r][c] += a[r][k] * b[k][c];
    }
  }
  return m;
}

bool eq4(const Mat4& a, const Mat4& b) {
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (a[r][c] != b[r][c]) return false;
    }
  }
  return true;
}

/// Coordinates of a 4x4 matrix known to lie in the primer span.
Vec primer_coords(const Mat4& m) {
  Vec c = zero_vec(6, Q);
  c[0] = m[1][1];  // r
  c[1] = m[0][1];  // s
  c[2] = m[0][2];  // t1
  c[3] = m[1][3];  // t2
  c[4] = m[0][3];  // u
  c[5] = m[1][2];  // v
  return c;
}

}  // namespace

TEST_CASE("all builders pass validation") {
  for (const std::string& name : verification_catalog_names()) {
    for (const Field& f : {Q, Field::prime(7)}) {
      CatalogEntry e = catalog_by_name(name, f);
      CHECK(e.algebra.validate().ok);
    }
  }
  CHECK(matrix_algebra(1, Q).algebra.validate().ok);
  CHECK(block_upper_triangular({1, 2, 1}, Q).algebra.validate().ok);
  CHECK(direct_sum({upper_triangular(2, Q), matrix_algebra(2, Q)}, "T2xM2").algebra.validate().ok);
}

TEST_CASE("catalog dimensions and labels") {
  CHECK(matrix_algebra(2, Q).algebra.dim() == 4);
  CHECK(matrix_algebra(3, Q).algebra.dim() == 9);
  CHECK(upper_triangular(2, Q).algebra.dim() == 3);
  CHECK(upper_triangular(3, Q).algebra.dim() == 6);
  CHECK(block_upper_triangular({2, 1}, Q).algebra.dim() == 7);
  CHECK(grassmann3(Q).algebra.dim() == 4);
  CHECK(primer_algebra(Q).algebra.dim() == 6);
  CHECK(matrix_algebra(2, Q).algebra.labels() ==
        std::vector<std::string>{"e11", "e12", "e21", "e22"});
  CHECK(primer_algebra(Q).algebra.labels()[1] == "e12+e34");
}

TEST_CASE("primer products agree with the embedded 4x4 representation") {
  StructureConstantAlgebra a = primer_algebra(Q).algebra;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      Mat4 direct = mul4(primer_embed_basis(i), primer_embed_basis(j));
      Vec coords = primer_coords(direct);
      // the product stays inside the span
      CHECK(eq4(primer_embed(coords), direct));
      CHECK(vec_eq(a.basis_product(i, j), coords));
    }
  }
  // spot checks: e23*(e12+e34) = e24 and (e12+e34)*e23 = e13
  CHECK(vec_eq(a.multiply(a.basis_vector(5), a.basis_vector(1)), a.basis_vector(3)));
  CHECK(vec_eq(a.multiply(a.basis_vector(1), a.basis_vector(5)), a.basis_vector(2)));
  // e23*(e12+e34) through a sum: e23*(e12+e34) + e23*e14 = e24
  CHECK(vec_eq(a.multiply(a.basis_vector(5), add(a.basis_vector(1), a.basis_vector(4))),
               a.basis_vector(3)));
}

TEST_CASE("random primer products agree with the embedding") {
  std::mt19937 rng(23);
  StructureConstantAlgebra a = primer_algebra(Q).algebra;
  for (int trial = 0; trial < 50; ++trial) {
    Vec x = testsupport::random_element(rng, 6, Q);
    Vec y = testsupport::random_element(rng, 6, Q);
    Mat4 direct = mul4(primer_embed(x), primer_embed(y));
    CHECK(vec_eq(a.multiply(x, y), primer_coords(direct)));
  }
}

TEST_CASE("grassmann3 satisfies [[x,y],z] = 0 on all basis triples") {
  StructureConstantAlgebra a = grassmann3(Q).algebra;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t k = 0; k < 4; ++k) {
        CHECK(is_zero_vec(a.lie(a.lie(a.basis_vector(i), a.basis_vector(j)), a.basis_vector(k))));
      }
    }
  }
  // but it is not commutative
  CHECK(!is_zero_vec(a.lie(a.basis_vector(1), a.basis_vector(2))));
}

TEST_CASE("section4 example maps") {
  StructureConstantAlgebra a = primer_algebra(Q).algebra;
  auto [f, h] = section4_example_maps();
  // f(1) = 2*e23, h(1) = 4*e23, h(e12+e34) = e13+e24
  CHECK(vec_eq(mat_vec(f, a.unit()), scaled(a.basis_vector(5), Scalar::of_int(2, Q))));
  CHECK(vec_eq(mat_vec(h, a.unit()), scaled(a.basis_vector(5), Scalar::of_int(4, Q))));
  CHECK(vec_eq(mat_vec(h, a.basis_vector(1)), add(a.basis_vector(2), a.basis_vector(3))));

  // d = f - e23∘- sends x to -s*(e13+e24), s the e12+e34 coordinate.
  Matrix d = mat_sub(f, a.jordan_mult(a.basis_vector(5)));
  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    Vec x = testsupport::random_element(rng, 6, Q);
    Vec expected = scaled(add(a.basis_vector(2), a.basis_vector(3)), -x[1]);
    CHECK(vec_eq(mat_vec(d, x), expected));
  }
}

TEST_CASE("block builder rejects bad sizes and name parsing works") {
  CHECK_THROWS_AS(block_upper_triangular({}, Q), InputError);
  CHECK_THROWS_AS(block_upper_triangular({2, 0}, Q), InputError);
  CHECK_THROWS_AS(matrix_algebra(0, Q), InputError);
  CHECK(catalog_by_name("block:2,1", Q).algebra.dim() == 7);
  CHECK(catalog_by_name("M4", Q).algebra.dim() == 16);
  CHECK(catalog_by_name("T4", Q).algebra.dim() == 10);
  CHECK(catalog_by_name("F", Q).algebra.dim() == 1);
  CHECK_THROWS_AS(catalog_by_name("nosuch", Q), InputError);
  CHECK_THROWS_AS(catalog_by_name("Mx", Q), InputError);
  CHECK_THROWS_AS(catalog_by_name("block:2,", Q), InputError);
}

TEST_CASE("expected quantities are embedded") {
  CatalogEntry primer = primer_algebra(Q);
  CHECK(primer.expected_dims.at("Z") == 3);
  CHECK(primer.expected_dims.at("ZJ") == 4);
  CHECK(primer.expected_dims.at("ZQ") == 5);
  CHECK(primer.expected_bases.count("Z") == 1);
  CHECK(upper_triangular(2, Q).expected_dims.at("QJCent") == 2);
  CHECK(matrix_algebra(2, Q).expected_dims.at("Der") == 3);
  CHECK(*matrix_algebra(2, Q).semiprime);
  CHECK_FALSE(*upper_triangular(2, Q).semiprime);
}

TEST_CASE("idempotent witnesses are idempotent") {
  for (const char* name : {"M2", "M3", "T2", "T3", "block:2,1"}) {
    CatalogEntry e = catalog_by_name(name, Q);
    CHECK(!e.idempotent_generators.empty());
    for (const Vec& g : e.idempotent_generators) CHECK(e.algebra.is_idempotent(g));
    REQUIRE(e.condition3_idempotent.has_value());
    CHECK(e.algebra.is_idempotent(*e.condition3_idempotent));
  }
}
