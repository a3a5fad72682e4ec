#include <doctest.h>

#include <random>

#include "nullsatz/field.hpp"
#include "nullsatz/linalg.hpp"
#include "nullsatz/upoly.hpp"

using namespace nullsatz;

namespace {

// schoolbook product of digit vectors mod (p, modulus); independent of the log tables
std::vector<std::uint32_t> naive_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                     const std::vector<std::uint32_t>& mod, std::uint32_t p) {
  std::size_t m = mod.size() - 1;
  std::vector<std::uint64_t> r(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) r[i + j] = (r[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  for (std::size_t i = 2 * m - 1; i >= m; --i) {
    auto c = r[i] % p;
    for (std::size_t j = 0; j < m; ++j) r[i - m + j] = (r[i - m + j] + (p - c) * mod[j]) % p;
  }
  return {r.begin(), r.begin() + static_cast<long>(m)};
}

}  // namespace

TEST_SUITE("fieldcore") {

TEST_CASE("F4 defining relation") {
  auto F4 = FiniteField::extension(2, {1, 1, 1});
  auto t = F4.generator();
  CHECK(F4.mul(t, t) == F4.add(t, F4.one()));
  CHECK(F4.size() == 4);
}

TEST_CASE("Q(sqrt2) defining relation") {
  auto K = NumberField::extension({-2, 0, 1});
  auto t = K.generator();
  CHECK(K.eq(K.mul(t, t), K.from_int(2)));
  auto inv = K.inv(K.add(t, K.one()));  // 1/(1+t) = t - 1
  CHECK(K.eq(inv, K.sub(t, K.one())));
}

TEST_CASE("F25 via t^2 - 2 and the non-residue oracle") {
  bool residue = false;
  for (int a = 0; a < 5; ++a) residue |= (a * a) % 5 == 2;
  CHECK_FALSE(residue);
  auto F25 = FiniteField::extension(5, {-2, 0, 1});
  CHECK(F25.size() == 25);
  auto t = F25.generator();
  CHECK(F25.mul(t, t) == F25.from_int(2));
}

TEST_CASE("extension errors") {
  CHECK_THROWS_AS(FiniteField::extension(5, {-1, 0, 1}), Error);
  try {
    FiniteField::extension(5, {-1, 0, 1});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotIrreducible);
    CHECK(e.where() == "fieldcore::make_extension");
  }
  try {
    FiniteField::extension(5, {1, 0, 2});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMonic);
  }
  try {
    NumberField::extension({4, 0, 0, 0, 1});  // t^4 + 4 = (t^2+2t+2)(t^2-2t+2)
    FAIL("expected reducible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotIrreducible);
  }
  try {
    NumberField::extension({-6, 0, 0, 1, 0, 0, 1});  // (t^3 - 2)(t^3 + 3)
    FAIL("expected reducible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotIrreducible);
  }
  CHECK_NOTHROW(NumberField::extension({1, 0, 0, 0, 1}));
  CHECK_NOTHROW(NumberField::extension({-2, 0, 0, 1}));
}

TEST_CASE("field axioms against a schoolbook oracle") {
  struct Spec {
    std::uint32_t p;
    std::vector<std::int64_t> mod;
  };
  for (const auto& s : {Spec{2, {1, 1, 1}}, Spec{2, {1, 1, 0, 1}}, Spec{3, {1, 0, 1}}, Spec{5, {-2, 0, 1}},
                        Spec{2, {1, 1, 0, 0, 0, 0, 1}}}) {
    auto F = FiniteField::extension(s.p, s.mod);
    std::vector<std::uint32_t> mod;
    for (auto c : s.mod) mod.push_back(F.prime_field().from_int(c));
    std::uint64_t q = F.size();
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        auto da = F.to_prime(a), db = F.to_prime(b);
        auto prod = naive_mul(da, db, mod, s.p);
        REQUIRE(F.mul(a, b) == F.from_prime(prod));
        std::vector<std::uint32_t> sum(da.size());
        for (std::size_t i = 0; i < da.size(); ++i) sum[i] = (da[i] + db[i]) % s.p;
        REQUIRE(F.add(a, b) == F.from_prime(sum));
      }
      REQUIRE(F.add(a, F.neg(a)) == 0);
      if (a) REQUIRE(F.mul(a, F.inv(a)) == 1);
    }
    if (q <= 16) {
      for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
          for (std::uint32_t c = 0; c < q; ++c) {
            REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
          }
    }
  }
}

TEST_CASE("number field axioms sampled") {
  auto K = NumberField::extension({-2, 0, 0, 1});
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto a = K.random(rng), b = K.random(rng), c = K.random(rng);
    CHECK(K.eq(K.mul(a, K.add(b, c)), K.add(K.mul(a, b), K.mul(a, c))));
    CHECK(K.eq(K.mul(K.mul(a, b), c), K.mul(a, K.mul(b, c))));
    if (!K.is_zero(a)) CHECK(K.is_one(K.mul(a, K.inv(a))));
  }
}

TEST_CASE("flattened extension embeds the subfield") {
  auto F4 = FiniteField::extension(2, {1, 1, 1});
  auto [K, emb] = extend(F4, 3);
  CHECK(K.size() == 64);
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) {
      CHECK(emb(F4.mul(a, b)) == K.mul(emb(a), emb(b)));
      CHECK(emb(F4.add(a, b)) == K.add(emb(a), emb(b)));
    }
  CHECK(emb(1) == 1);
}

TEST_CASE("polynomial factorization over finite fields") {
  auto F5 = FiniteField::prime(5);
  // (x^2 - 2)(x - 1)^2 (x + 1)
  UPoly<FiniteField> f(F5, {F5.from_int(-2), 0, 1});
  UPoly<FiniteField> l1(F5, {F5.from_int(-1), 1}), l2(F5, {1, 1});
  auto g = upoly::mul(upoly::mul(f, upoly::mul(l1, l1)), l2);
  auto fac = upoly::factor(g);
  UPoly<FiniteField> prod = UPoly<FiniteField>::constant(F5, 1);
  for (auto& [h, m] : fac) {
    CHECK(upoly::is_irreducible(h));
    for (int i = 0; i < m; ++i) prod = upoly::mul(prod, h);
  }
  CHECK(prod == g);
  CHECK(fac.size() == 3);

  auto F25 = FiniteField::extension(5, {-2, 0, 1});
  auto rts = upoly::roots(UPoly<FiniteField>(F25, {F25.from_int(-2), 0, 1}));
  REQUIRE(rts.size() == 2);
  for (auto r : rts) CHECK(F25.mul(r, r) == F25.from_int(2));

  auto F2 = FiniteField::prime(2);
  auto sq = upoly::factor(UPoly<FiniteField>(F2, {1, 0, 1}));
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].second == 2);
  auto F8 = FiniteField::extension(2, {1, 1, 0, 1});
  auto big = upoly::factor(UPoly<FiniteField>(F8, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1}));  // x^9 + 1 over F8
  int total = 0;
  for (auto& [h, m] : big) total += h.degree() * m;
  CHECK(total == 9);
}

TEST_CASE("rational factorization") {
  auto Q = NumberField::rationals();
  auto c = [&](long v) { return Q.from_int(v); };
  UPoly<NumberField> f(Q, {c(-2), c(0), c(0), c(0), c(1)});  // x^4 - 2 irreducible
  CHECK(upoly::factor(f).size() == 1);
  UPoly<NumberField> g(Q, {c(-1), c(0), c(0), c(0), c(1)});  // (x-1)(x+1)(x^2+1)
  CHECK(upoly::factor(g).size() == 3);
}

TEST_CASE("rref examples") {
  auto F3 = FiniteField::prime(3);
  auto I = Matrix<FiniteField>::identity(F3, 2);
  auto r = rref(I);
  CHECK(r.matrix == I);
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});

  auto Q = NumberField::rationals();
  Matrix<NumberField> m(Q, 2, 2);
  m.at(0, 0) = Q.from_int(1);
  m.at(0, 1) = Q.from_int(2);
  m.at(1, 0) = Q.from_int(2);
  m.at(1, 1) = Q.from_int(4);
  auto rq = rref(m);
  CHECK(rq.rank == 1);
  CHECK(Q.eq(rq.matrix.at(0, 1), Q.from_int(2)));
  CHECK(Q.is_zero(rq.matrix.at(1, 0)));
  CHECK(Q.is_zero(rq.matrix.at(1, 1)));

  auto F4 = FiniteField::extension(2, {1, 1, 1});
  auto t = F4.generator();
  Matrix<FiniteField> tm(F4, 2, 2);
  tm.at(0, 0) = t;
  tm.at(0, 1) = 1;
  tm.at(1, 0) = 1;
  tm.at(1, 1) = t;
  // cofactor determinant oracle
  auto det = F4.sub(F4.mul(t, t), 1);
  CHECK(det == t);
  CHECK(rref(tm).rank == 2);
  CHECK(rref(rref(tm).matrix).matrix == rref(tm).matrix);
}

TEST_CASE("kernel examples") {
  auto F5 = FiniteField::prime(5);
  CHECK(kernel_basis(Matrix<FiniteField>(F5, 2, 2)).size() == 2);
  CHECK(kernel_basis(Matrix<FiniteField>::identity(F5, 2)).empty());
  Matrix<FiniteField> row(F5, 1, 2);
  row.at(0, 0) = 1;
  row.at(0, 1) = 1;
  auto k = kernel_basis(row);
  REQUIRE(k.size() == 1);
  CHECK(F5.add(k[0][0], k[0][1]) == 0);
  CHECK(matvec(row, k[0]) == Vec<FiniteField>{0});
}

TEST_CASE("row space intersections") {
  auto F2 = FiniteField::prime(2);
  auto e1 = Matrix<FiniteField>::from_rows(F2, 2, {{1, 0}});
  auto e2 = Matrix<FiniteField>::from_rows(F2, 2, {{0, 1}});
  CHECK(intersect_rowspaces<FiniteField>({e1, e1}).rows() == 1);
  CHECK(intersect_rowspaces<FiniteField>({e1, e2}).rows() == 0);
  auto Q = NumberField::rationals();
  auto full = Matrix<NumberField>::identity(Q, 2);
  auto diag = Matrix<NumberField>::from_rows(Q, 2, {{Q.one(), Q.one()}});
  auto r = intersect_rowspaces<NumberField>({full, diag});
  REQUIRE(r.rows() == 1);
  CHECK(Q.eq(r.at(0, 0), r.at(0, 1)));
  CHECK_THROWS_AS(intersect_rowspaces<NumberField>({full, Matrix<NumberField>(Q, 1, 3)}), Error);
}

TEST_CASE("random kernels and rref idempotence") {
  auto F7 = FiniteField::prime(7);
  std::mt19937_64 rng(11);
  for (int it = 0; it < 100; ++it) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    Matrix<FiniteField> m(F7, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = (rng() % 3 == 0) ? 0 : F7.random(rng);
    auto once = rref(m).matrix;
    CHECK(rref(once).matrix == once);
    for (auto& v : kernel_basis(m)) CHECK(vec::is_zero(F7, matvec(m, v)));
    CHECK(kernel_basis(m).size() + rref(m).rank == c);
  }
}

TEST_CASE("minimal polynomial of a matrix") {
  auto F5 = FiniteField::prime(5);
  auto m = Matrix<FiniteField>::from_rows(F5, 2, {{0, 2}, {1, 0}});  // companion of x^2 - 2
  auto mp = minimal_polynomial(m);
  CHECK(mp == UPoly<FiniteField>(F5, {F5.from_int(-2), 0, 1}));
  CHECK(minimal_polynomial(Matrix<FiniteField>::identity(F5, 3)) == UPoly<FiniteField>(F5, {F5.from_int(-1), 1}));
}

}  // TEST_SUITE
