#include <doctest.h>

#include <algorithm>
#include <set>

#include "nullsatz/findim.hpp"

using namespace nullsatz;

namespace {

using FF = FiniteField;
using FV = Vec<FiniteField>;

FV V(const FF& f, std::initializer_list<std::int64_t> xs) {
  FV v;
  for (auto x : xs) v.push_back(f.from_int(x));
  return v;
}

bool nilpotent_matrix(const Matrix<FF>& m) {
  std::size_t n = m.rows();
  Matrix<FF> p = m;
  for (std::size_t i = 1; i < n; ++i) p = matmul(p, m);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (p.at(r, c) != 0) return false;
  return true;
}

// rad A = {a : ax nilpotent for every x}, by brute force over the whole algebra
Subspace<FF> radical_oracle(const FinDimAlgebra<FF>& A) {
  auto f = A.field();
  std::uint64_t total = count_vectors(f, A.dim(), 1 << 14, "test");
  Subspace<FF> out(f, A.dim());
  for (std::uint64_t i = 0; i < total; ++i) {
    auto a = enumerate_vector(f, A.dim(), i);
    bool in = true;
    for (std::uint64_t j = 0; j < total && in; ++j)
      in = nilpotent_matrix(A.left_mult(A.mul(a, enumerate_vector(f, A.dim(), j))));
    if (in) out.add(a);
  }
  return out;
}

// A as its own regular module over matrices: dim-many brute checks of an explicit morphism
template <class F>
void check_factor_morphism(const FinDimAlgebra<F>& A, const SimpleFactor<F>& sf) {
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      REQUIRE(sf.theta_of(A.mul(A.basis(i), A.basis(j))) == matmul(sf.theta[i], sf.theta[j]));
  REQUIRE(sf.theta_of(A.unit()) == Matrix<F>::identity(sf.center, sf.k));
}

template <class F>
std::vector<Vec<F>> factor_idempotents(const FinDimAlgebra<F>& A, const WedderburnData<F>& w) {
  std::vector<Vec<F>> out;
  for (const auto& sf : w.factors) out.push_back(sf.section_of(Matrix<F>::identity(sf.center, sf.k)));
  (void)A;
  return out;
}

// the left ideal {a : a e1 = 0} of M2, i.e. first column zero
LeftIdealFD<FF> first_column_zero(const FinDimAlgebra<FF>& M2) {
  auto f = M2.field();
  return LeftIdealFD<FF>::from_basis(M2, {V(f, {0, 1, 0, 0}), V(f, {0, 0, 0, 1})});
}

std::vector<Matrix<FF>> regular_action(const FinDimAlgebra<FF>& A) {
  std::vector<Matrix<FF>> act;
  for (std::size_t i = 0; i < A.dim(); ++i) act.push_back(A.left_basis_mult(i));
  return act;
}

}  // namespace

TEST_SUITE("findim") {

TEST_CASE("construction rejects bad structure constants") {
  auto f = FF::prime(5);
  std::vector<FF::Elem> c(8, 0);
  c[(0 * 2 + 0) * 2 + 0] = 1;
  c[(0 * 2 + 1) * 2 + 1] = 1;
  c[(1 * 2 + 0) * 2 + 1] = 1;
  c[(1 * 2 + 1) * 2 + 0] = 2;
  CHECK_NOTHROW(FinDimAlgebra<FF>::create(f, 2, c, V(f, {1, 0})));
  CHECK_THROWS_AS(FinDimAlgebra<FF>::create(f, 2, c, V(f, {0, 1})), Error);
  // b1 b1 = b1 + b0 breaks associativity against the unit
  auto bad = c;
  bad[(1 * 2 + 1) * 2 + 1] = 1;
  bad[(0 * 2 + 1) * 2 + 0] = 1;
  CHECK_THROWS_AS(FinDimAlgebra<FF>::create(f, 2, bad, V(f, {1, 0})), Error);
  CHECK_THROWS_AS(FinDimAlgebra<FF>::create(f, 2, std::vector<FF::Elem>(7, 0), V(f, {1, 0})), Error);
}

TEST_CASE("presets are associative and unital") {
  auto f2 = FF::prime(2), f3 = FF::prime(3), f5 = FF::prime(5);
  CHECK_NOTHROW(matrix_algebra(f3, 3));
  CHECK_NOTHROW(upper_triangular(f2, 3));
  CHECK_NOTHROW(cyclic_group_algebra(f5, 4));
  CHECK_NOTHROW(quaternion_algebra(f5, f5.from_int(2), f5.from_int(3)));
  auto q = NumberField::rationals();
  CHECK_NOTHROW(quaternion_algebra(q, q.from_int(-1), q.from_int(-1)));
  auto F4 = FF::extension(2, {1, 1, 1});
  auto m4 = matrix_algebra(F4, 2);
  auto r = restrict_scalars(F4, 4, m4.structure(), m4.unit(), m4.names());
  CHECK(r.dim() == 8);
  CHECK(r.field().size() == 2);
  CHECK(r.names()[1] == "e11_t");
}

TEST_CASE("radical examples") {
  auto f7 = FF::prime(7), f5 = FF::prime(5);
  auto D = dual_numbers(f7);
  auto rd = radical(D);
  REQUIRE(rd.size() == 1);
  CHECK(rd[0] == V(f7, {0, 1}));
  CHECK(radical(matrix_algebra(f5, 2)).empty());

  auto q = NumberField::rationals();
  auto U = upper_triangular(q, 2);  // basis e11, e12, e22
  auto ru = radical(U);
  // oracle: among spans of basis subsets, the largest nilpotent two-sided ideal
  std::size_t best = 0;
  Subspace<NumberField> best_space(q, 3);
  for (int mask = 1; mask < 8; ++mask) {
    std::vector<Vec<NumberField>> gens;
    for (int i = 0; i < 3; ++i)
      if (mask >> i & 1) gens.push_back(U.basis(i));
    auto S = Subspace<NumberField>::span(q, 3, gens);
    bool ideal = true, nil = true;
    for (auto& g : gens)
      for (std::size_t i = 0; i < 3; ++i)
        ideal = ideal && S.contains(U.mul(U.basis(i), g)) && S.contains(U.mul(g, U.basis(i)));
    for (auto& g : gens) {
      auto L = U.left_mult(g);
      auto P = matmul(matmul(L, L), L);
      nil = nil && P == Matrix<NumberField>(q, 3, 3);
    }
    if (ideal && nil && S.dim() > best) {
      best = S.dim();
      best_space = S;
    }
  }
  CHECK(Subspace<NumberField>::span(q, 3, ru) == best_space);
  CHECK(best_space == Subspace<NumberField>::span(q, 3, {U.basis(1)}));
}

TEST_CASE("trace-form method rejects small characteristic") {
  auto f2 = FF::prime(2);
  try {
    radical(matrix_algebra(f2, 2), RadicalMethod::TraceForm);
    FAIL("expected SmallCharacteristic");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SmallCharacteristic);
  }
}

TEST_CASE("radical agrees with brute-force oracle, including small characteristic") {
  auto f2 = FF::prime(2), f3 = FF::prime(3), f5 = FF::prime(5);
  std::vector<FinDimAlgebra<FF>> algs{
      dual_numbers(f2),          matrix_algebra(f2, 2),        cyclic_group_algebra(f2, 2),
      cyclic_group_algebra(f2, 4), cyclic_group_algebra(f3, 3), cyclic_group_algebra(f2, 3),
      upper_triangular(f2, 2),   upper_triangular(f3, 2),      matrix_algebra(f3, 2),
      dual_numbers(f5),          polynomial_quotient_algebra(f2, {0, 0, 0, 1}),
      polynomial_quotient_algebra(f3, {1, 0, 1, 1}), quaternion_algebra(f3, f3.from_int(1), f3.from_int(2))};
  for (const auto& A : algs) {
    auto r = Subspace<FF>::span(A.field(), A.dim(), radical(A));
    CHECK(r == radical_oracle(A));
  }
  auto U3 = upper_triangular(f2, 3);
  auto r3 = Subspace<FF>::span(f2, 6, radical(U3));
  CHECK(r3.dim() == 3);
  for (auto n : {"e12", "e13", "e23"}) CHECK(r3.contains(U3.basis(*U3.name_index(n))));
}

TEST_CASE("quotient by the radical has zero radical") {
  auto f3 = FF::prime(3), f5 = FF::prime(5);
  for (const auto& A : {upper_triangular(f5, 3), cyclic_group_algebra(f3, 3), dual_numbers(f5)}) {
    auto W = wedderburn(A);
    // A/rad A is the product of the factors; each factor M_k(E) has zero radical,
    // so check the block trace form is nondegenerate by rank of theta images
    std::size_t dims = 0;
    for (const auto& sf : W.factors) {
      dims += sf.k * sf.k * sf.degree;
      check_factor_morphism(A, sf);
    }
    CHECK(dims + W.radical.size() == A.dim());
  }
}

TEST_CASE("wedderburn: F5[C2]") {
  auto f5 = FF::prime(5);
  auto A = cyclic_group_algebra(f5, 2);
  auto W = wedderburn(A);
  CHECK(W.radical.empty());
  REQUIRE(W.factors.size() == 2);
  for (const auto& sf : W.factors) {
    CHECK(sf.k == 1);
    CHECK(sf.degree == 1);
    check_factor_morphism(A, sf);
  }
  auto ids = factor_idempotents(A, W);
  std::set<FV> got(ids.begin(), ids.end());
  // (1 + g)/2 and (1 - g)/2 with 1/2 = 3
  CHECK(got == std::set<FV>{V(f5, {3, 3}), V(f5, {3, 2})});
  for (const auto& e : ids) CHECK(A.mul(e, e) == e);
  CHECK(A.mul(ids[0], ids[1]) == A.zero());
  CHECK(vec::add(f5, ids[0], ids[1]) == A.unit());
}

TEST_CASE("wedderburn: F5[u]/(u^2-2) is F25") {
  auto f5 = FF::prime(5);
  // 2 is not a square mod 5
  for (int x = 0; x < 5; ++x) CHECK((x * x) % 5 != 2);
  auto A = polynomial_quotient_algebra(f5, {3, 0, 1});
  auto W = wedderburn(A);
  REQUIRE(W.factors.size() == 1);
  CHECK(W.factors[0].k == 1);
  CHECK(W.factors[0].degree == 2);
  CHECK(W.factors[0].center.size() == 25);
  check_factor_morphism(A, W.factors[0]);
}

TEST_CASE("wedderburn: M2(F3)") {
  auto f3 = FF::prime(3);
  auto A = matrix_algebra(f3, 2);
  auto W = wedderburn(A);
  REQUIRE(W.factors.size() == 1);
  const auto& sf = W.factors[0];
  CHECK(sf.k == 2);
  CHECK(sf.degree == 1);
  check_factor_morphism(A, sf);
  // bijective: images of the basis are independent
  Subspace<FF> img(f3, 4);
  for (const auto& m : sf.theta) img.add(m.data());
  CHECK(img.dim() == 4);
  // section is inverse on all 81 elements
  for (std::uint64_t i = 0; i < 81; ++i) {
    auto a = enumerate_vector(f3, 4, i);
    CHECK(sf.section_of(sf.theta_of(a)) == a);
  }
}

TEST_CASE("wedderburn: mixed and extension cases") {
  auto f2 = FF::prime(2), f5 = FF::prime(5);
  {
    auto A = cyclic_group_algebra(f2, 3);  // F2 + F4
    auto W = wedderburn(A);
    REQUIRE(W.factors.size() == 2);
    CHECK(W.factors[0].degree == 1);
    CHECK(W.factors[1].degree == 2);
    for (auto& sf : W.factors) check_factor_morphism(A, sf);
  }
  {
    auto A = upper_triangular(f5, 2);
    auto W = wedderburn(A);
    CHECK(W.radical.size() == 1);
    REQUIRE(W.factors.size() == 2);
    for (auto& sf : W.factors) check_factor_morphism(A, sf);
  }
  {
    auto F4 = FF::extension(2, {1, 1, 1});
    auto m = matrix_algebra(F4, 2);
    auto A = restrict_scalars(F4, 4, m.structure(), m.unit(), m.names());
    auto W = wedderburn(A);
    REQUIRE(W.factors.size() == 1);
    CHECK(W.factors[0].k == 2);
    CHECK(W.factors[0].degree == 2);
    check_factor_morphism(A, W.factors[0]);
  }
  {
    auto q = NumberField::rationals();
    auto A = matrix_algebra(q, 2);
    auto W = wedderburn(A);
    REQUIRE(W.factors.size() == 1);
    CHECK(W.factors[0].k == 2);
    check_factor_morphism(A, W.factors[0]);
  }
}

TEST_CASE("wedderburn: rational quaternions do not split") {
  auto q = NumberField::rationals();
  auto H = quaternion_algebra(q, q.from_int(-1), q.from_int(-1));
  try {
    wedderburn(H, 0, 4);
    FAIL("expected NotSplit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSplit);
  }
  // (1,1) is split: M2(Q)
  auto H2 = quaternion_algebra(q, q.from_int(1), q.from_int(1));
  auto W = wedderburn(H2);
  REQUIRE(W.factors.size() == 1);
  CHECK(W.factors[0].k == 2);
}

TEST_CASE("wedderburn_data is cached and shared across threads") {
  auto A = matrix_algebra(FF::prime(3), 2);
  const WedderburnData<FF>* ptrs[4];
#pragma omp parallel for
  for (int i = 0; i < 4; ++i) ptrs[i] = &A.wedderburn_data();
  for (int i = 1; i < 4; ++i) CHECK(ptrs[i] == ptrs[0]);
}

TEST_CASE("xi: trivial field case") {
  auto f5 = FF::prime(5);
  auto A = polynomial_quotient_algebra(f5, {0, 1});  // F5 itself
  auto D = xi_preimage(A);
  REQUIRE(D.entries.size() == 1);
  CHECK(D.entries[0].omega[0] == A.unit());
  REQUIRE(D.entries[0].preimage.size() == 1);
  CHECK(A.mul(D.entries[0].preimage[0].e, D.entries[0].preimage[0].f) == A.unit());
}

TEST_CASE("xi: closed-form matrix-unit preimages") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto f = FF::prime(p);
    auto A = matrix_algebra(f, 2);
    auto E = [&](std::size_t r, std::size_t s) { return A.basis(r * 2 + s); };
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        std::vector<XiTerm<FF>> terms;
        for (std::size_t l = 0; l < 2; ++l) terms.push_back({E(l, i), E(j, l)});
        for (std::size_t m = 0; m < 4; ++m) {
          auto x = A.basis(m);
          CHECK(xi_apply(A, terms, x) == vec::scale(f, A.unit(), x[i * 2 + j]));
        }
      }
  }
}

TEST_CASE("xi identity for M_k(F_q) and F5[C2]") {
  std::vector<FinDimAlgebra<FF>> algs;
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::size_t k = 1; k <= 3; ++k) algs.push_back(matrix_algebra(FF::prime(p), k));
  algs.push_back(cyclic_group_algebra(FF::prime(5), 2));
  for (const auto& A : algs) {
    auto D = xi_preimage(A);
    const auto& f = A.field();
    // dual basis identity and Xi identity, checked here rather than trusted
    for (std::size_t m = 0; m < A.dim(); ++m) {
      auto x = A.basis(m);
      FV acc = A.zero();
      for (const auto& e : D.entries) {
        CHECK(xi_apply(A, e.preimage, x) == e.omega[m]);
        // omega values are central
        for (std::size_t i = 0; i < A.dim(); ++i)
          CHECK(A.mul(e.omega[m], A.basis(i)) == A.mul(A.basis(i), e.omega[m]));
        acc = vec::add(f, acc, A.mul(e.omega[m], e.v));
      }
      CHECK(acc == x);
    }
  }
  // F5 + F5: exhaustive over all 25 elements, omegas are the two projections
  auto f5 = FF::prime(5);
  auto G = cyclic_group_algebra(f5, 2);
  auto D = xi_preimage(G);
  REQUIRE(D.entries.size() == 2);
  for (std::uint64_t i = 0; i < 25; ++i) {
    auto x = enumerate_vector(f5, 2, i);
    for (const auto& e : D.entries) {
      auto idem = e.v;
      CHECK(xi_apply(G, e.preimage, x) == G.mul(idem, x));
    }
  }
}

TEST_CASE("xi rejects non-semisimple algebras") {
  try {
    xi_preimage(dual_numbers(FF::prime(5)));
    FAIL("expected NotAzumaya");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAzumaya);
  }
}

TEST_CASE("ideal quotient examples") {
  auto f2 = FF::prime(2), f7 = FF::prime(7);
  auto M = matrix_algebra(f2, 2);
  auto all = LeftIdealFD<FF>::from_basis(M, {M.basis(0), M.basis(1), M.basis(2), M.basis(3)});
  CHECK(ideal_quotient(all).dim() == 4);
  auto I = first_column_zero(M);
  // oracle: a with aA ⊆ I over all 16 matrices
  Subspace<FF> brute(f2, 4);
  for (std::uint64_t i = 0; i < 16; ++i) {
    auto a = enumerate_vector(f2, 4, i);
    bool ok = true;
    for (std::uint64_t j = 0; j < 16; ++j) ok = ok && I.contains(M.mul(a, enumerate_vector(f2, 4, j)));
    if (ok) brute.add(a);
  }
  auto Q = ideal_quotient(I);
  CHECK(Q.space() == brute);
  CHECK(Q.dim() == 0);
  auto D = dual_numbers(f7);
  auto J = LeftIdealFD<FF>::from_basis(D, {V(f7, {0, 1})});
  CHECK(ideal_quotient(J) == J);
}

TEST_CASE("perp examples") {
  auto f2 = FF::prime(2);
  auto M = matrix_algebra(f2, 2);
  auto I = first_column_zero(M);
  auto Q = ideal_quotient(I);
  Subspace<FF> brute(f2, 4);
  for (std::uint64_t i = 0; i < 16; ++i) {
    auto b = enumerate_vector(f2, 4, i);
    bool ok = true;
    for (const auto& u : I.space().basis()) ok = ok && Q.contains(M.mul(u, b));
    if (ok) brute.add(b);
  }
  auto P = perp(I);
  CHECK(P == brute);
  // second row zero: span{e11, e12}
  CHECK(P == Subspace<FF>::span(f2, 4, {M.basis(0), M.basis(1)}));
  auto zero = LeftIdealFD<FF>::generated(M, {});
  CHECK(perp(zero).dim() == 4);
  auto all = LeftIdealFD<FF>::generated(M, {M.unit()});
  CHECK(perp(all).dim() == 4);
}

TEST_CASE("double annihilator examples") {
  auto f2 = FF::prime(2), f7 = FF::prime(7);
  auto M = matrix_algebra(f2, 2);
  auto I = first_column_zero(M);
  auto r = double_annihilator_check(I);
  CHECK(r.holds);
  CHECK(r.recovered == I.space());
  auto F4 = polynomial_quotient_algebra(f2, {1, 1, 1});
  CHECK(double_annihilator_check(LeftIdealFD<FF>::generated(F4, {})).holds);
  auto D = dual_numbers(f7);
  auto maxes = maximal_elements(enumerate_left_ideals(D));
  REQUIRE(maxes.size() == 1);
  CHECK(maxes[0].space() == Subspace<FF>::span(f7, 2, {V(f7, {0, 1})}));
  CHECK(double_annihilator_check(maxes[0]).holds);
  // recovered set always contains I
  for (const auto& J : enumerate_left_ideals(upper_triangular(FF::prime(3), 2)))
    CHECK(double_annihilator_check(J).recovered.contains_space(J.space()));
}

TEST_CASE("prime and semiprime predicates") {
  auto f2 = FF::prime(2);
  auto M = matrix_algebra(f2, 2);
  auto I = first_column_zero(M);
  auto pr = is_prime_left(I);
  CHECK(pr.holds);
  CHECK(pr.exhaustive);
  auto D = dual_numbers(f2);
  auto s = is_semiprime_left(LeftIdealFD<FF>::generated(D, {}));
  CHECK_FALSE(s.holds);
  REQUIRE(s.witness_a);
  CHECK(*s.witness_a == V(f2, {0, 1}));
  auto zero = LeftIdealFD<FF>::generated(M, {});
  CHECK(is_prime_left(zero).holds);
  // oracle: aAb ⊆ 0 over all 16x16 pairs forces a = 0 or b = 0
  int bad = 0;
  for (std::uint64_t i = 1; i < 16; ++i)
    for (std::uint64_t j = 1; j < 16; ++j) {
      auto a = enumerate_vector(f2, 4, i), b = enumerate_vector(f2, 4, j);
      bool kills = true;
      for (std::size_t k = 0; k < 4; ++k) kills = kills && M.mul(M.mul(a, M.basis(k)), b) == M.zero();
      bad += kills;
    }
  CHECK(bad == 0);
}

TEST_CASE("predicate modes and limits") {
  auto f3 = FF::prime(3);
  auto M = matrix_algebra(f3, 3);  // 3^9 elements
  auto zero = LeftIdealFD<FF>::generated(M, {});
  PredicateOptions opt;
  opt.mode = PredicateMode::Exhaustive;
  opt.exhaustion_limit = 1000;
  CHECK_THROWS_AS(is_semiprime_left(zero, opt), Error);
  opt.mode = PredicateMode::Auto;
  opt.trials = 200;
  auto r = is_semiprime_left(zero, opt);
  CHECK(r.holds);
  CHECK_FALSE(r.exhaustive);
  CHECK(r.checked == 200);
  auto q = NumberField::rationals();
  auto D = dual_numbers(q);
  PredicateOptions ex;
  ex.mode = PredicateMode::Exhaustive;
  CHECK_THROWS_AS(is_semiprime_left(LeftIdealFD<NumberField>::generated(D, {}), ex), Error);
  PredicateOptions sampled;
  sampled.trials = 500;
  CHECK_FALSE(is_semiprime_left(LeftIdealFD<NumberField>::generated(D, {}), sampled).holds);
}

TEST_CASE("predicates agree serially and in parallel") {
  auto f2 = FF::prime(2), f3 = FF::prime(3);
  for (const auto& A : {upper_triangular(f2, 3), matrix_algebra(f3, 2), cyclic_group_algebra(f2, 4)}) {
    for (const auto& I : enumerate_left_ideals(A)) {
      PredicateOptions s, p;
      s.exec = Exec::Serial;
      p.exec = Exec::Parallel;
      auto a = is_semiprime_left(I, s), b = is_semiprime_left(I, p);
      CHECK(a.holds == b.holds);
      CHECK(a.witness_a == b.witness_a);
      auto c = is_prime_left(I, s), d = is_prime_left(I, p);
      CHECK(c.holds == d.holds);
      CHECK(c.witness_a == d.witness_a);
    }
  }
}

TEST_CASE("annihilators of simple modules") {
  auto f3 = FF::prime(3), f5 = FF::prime(5), f2 = FF::prime(2);
  {
    auto M = matrix_algebra(f3, 2);
    std::vector<Matrix<FF>> act;
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t s = 0; s < 2; ++s) {
        Matrix<FF> e(f3, 2, 2);
        e.at(r, s) = 1;
        act.push_back(e);
      }
    auto res = ann_maximal_check(M, act, V(f3, {1, 0}));
    CHECK(res.maximal);
    CHECK(res.codim == 2);
    CHECK_THROWS_AS(ann_maximal_check(M, act, V(f3, {0, 0})), Error);
  }
  {
    auto F4 = polynomial_quotient_algebra(f2, {1, 1, 1});
    auto res = ann_maximal_check(F4, regular_action(F4), F4.unit());
    CHECK(res.maximal);
    CHECK(res.annihilator.dim() == 0);
  }
  {
    auto G = cyclic_group_algebra(f5, 2);
    std::vector<Matrix<FF>> act{Matrix<FF>::identity(f5, 1), Matrix<FF>::identity(f5, 1)};
    act[1].at(0, 0) = f5.from_int(-1);
    auto res = ann_maximal_check(G, act, V(f5, {1}));
    CHECK(res.maximal);
    CHECK(res.codim == 1);
    CHECK(res.annihilator.space() == Subspace<FF>::span(f5, 2, {V(f5, {1, 1})}));
  }
  {
    // the regular module of the dual numbers is not simple
    auto D = dual_numbers(f5);
    try {
      ann_maximal_check(D, regular_action(D), D.unit());
      FAIL("expected NotSimpleModule");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotSimpleModule);
    }
  }
}

TEST_CASE("submodule predicates") {
  auto f2 = FF::prime(2), f3 = FF::prime(3);
  auto D = dual_numbers(f2);
  auto full = Subspace<FF>::full(f2, 2);
  CHECK(is_semiprime_submodule(D, 1, full).holds);
  CHECK(is_prime_submodule(D, 1, full).holds);
  // N = eps*M contains eps, so eps is no witness; the quotient is the field F2
  auto epsM = Subspace<FF>::span(f2, 2, {V(f2, {0, 1})});
  CHECK(is_semiprime_submodule(D, 1, epsM).holds);
  CHECK(is_prime_submodule(D, 1, epsM).holds);
  // N = 0: x = eps has (N:x) = eps*R and omega(eps) = eps lies in it
  auto zero = Subspace<FF>(f2, 2);
  auto z = is_semiprime_submodule(D, 1, zero);
  CHECK_FALSE(z.holds);
  CHECK(*z.witness_a == V(f2, {0, 1}));
  CHECK_FALSE(is_prime_submodule(D, 1, zero).holds);
  auto F3 = polynomial_quotient_algebra(f3, {0, 1});
  CHECK(is_prime_submodule(F3, 1, Subspace<FF>(f3, 1)).holds);
  // rank 2 over F3: any subspace is prime
  CHECK(is_prime_submodule(F3, 2, Subspace<FF>::span(f3, 2, {V(f3, {1, 2})})).holds);
  // not a submodule
  CHECK_THROWS_AS(is_prime_submodule(D, 1, Subspace<FF>::span(f2, 2, {V(f2, {1, 0})})), Error);
}

TEST_CASE("lattice invariants on small split algebras") {
  auto f2 = FF::prime(2), f3 = FF::prime(3), f5 = FF::prime(5);
  std::vector<FinDimAlgebra<FF>> algs{matrix_algebra(f2, 2),          matrix_algebra(f3, 2),
                                      polynomial_quotient_algebra(f2, {1, 1, 1}), cyclic_group_algebra(f5, 2),
                                      upper_triangular(f2, 2),        upper_triangular(f3, 2),
                                      cyclic_group_algebra(f2, 3)};
  for (const auto& A : algs) {
    auto lefts = enumerate_left_ideals(A);
    auto twos = enumerate_two_sided_ideals(A);
    auto max_two = maximal_elements(twos);
    auto Z = center(A);
    for (const auto& I : lefts) {
      auto Q = ideal_quotient(I);
      CHECK(Q.is_two_sided());
      CHECK(I.space().contains_space(Q.space()));
    }
    for (const auto& m : maximal_elements(lefts)) {
      auto Q = ideal_quotient(m);
      bool is_max_two = std::any_of(max_two.begin(), max_two.end(), [&](auto& t) { return t == Q; });
      CHECK(is_max_two);
      CHECK(double_annihilator_check(m).holds);
    }
    for (const auto& I : lefts) {
      if (I.dim() == A.dim() || !is_prime_left(I).holds) continue;
      auto Q = ideal_quotient(I);
      CHECK(Q.space().intersect(Z) == I.space().intersect(Z));
    }
  }
  // M2(F2) has exactly 3 maximal left ideals (points of P^1(F2)), M2(F3) has 4
  CHECK(maximal_elements(enumerate_left_ideals(matrix_algebra(f2, 2))).size() == 3);
  CHECK(maximal_elements(enumerate_left_ideals(matrix_algebra(f3, 2))).size() == 4);
}

TEST_CASE("element printing") {
  auto f5 = FF::prime(5);
  auto M = matrix_algebra(f5, 2);
  CHECK(M.element_to_string(V(f5, {1, 2, 0, 0})) == "e11 + 2*e12");
  CHECK(M.element_to_string(M.zero()) == "0");
  auto q = NumberField::rationals();
  auto D = dual_numbers(q);
  Vec<NumberField> v{q.from_int(1), q.from_rational(mpq_class(-1, 2))};
  CHECK(D.element_to_string(v) == "one - 1/2*eps");
}
}
