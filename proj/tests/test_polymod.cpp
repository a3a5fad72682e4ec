#include <doctest.h>

#include <random>
#include <set>

#include "nullsatz/polymod.hpp"
#include "nullsatz/upoly.hpp"

using namespace nullsatz;

namespace {

using FF = FiniteField;
using QF = NumberField;

template <class F>
MPoly<F> X(const F& f, std::size_t n, std::size_t l, unsigned e = 1) {
  return MPoly<F>::monomial(f, n, Monomial::var(l, e), f.one());
}
template <class F>
MPoly<F> C(const F& f, std::size_t n, std::int64_t c) {
  return MPoly<F>::constant(f, n, f.from_int(c));
}
template <class F>
ModVector<F> vec1(const MPoly<F>& p) {
  ModVector<F> v(p.field, p.nvars, 1);
  v.comps[0] = p;
  return v;
}
template <class F>
ModVector<F> vec2(const MPoly<F>& a, const MPoly<F>& b) {
  ModVector<F> v(a.field, a.nvars, 2);
  v.comps[0] = a;
  v.comps[1] = b;
  return v;
}

MPoly<FF> random_poly(const FF& f, std::size_t n, int maxdeg, std::mt19937_64& rng, int terms = 3) {
  MPoly<FF> p(f, n);
  std::uniform_int_distribution<int> d(0, maxdeg);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int budget = d(rng);
    for (int i = 0; i < budget; ++i) {
      std::size_t l = rng() % n;
      m = m * Monomial::var(l);
    }
    p = mpoly::add(p, MPoly<FF>::monomial(f, n, m, f.random(rng)));
  }
  return p;
}

ModVector<FF> random_vec(const FF& f, std::size_t n, std::size_t k, int maxdeg, std::mt19937_64& rng) {
  ModVector<FF> v(f, n, k);
  for (auto& c : v.comps) c = random_poly(f, n, maxdeg, rng);
  return v;
}

// zero-dimensional random submodule: random generators plus pure powers in every slot
Submodule<FF> random_zero_dim(const FF& f, std::size_t n, std::size_t k, std::mt19937_64& rng,
                              ModuleOrder order = {}) {
  std::vector<ModVector<FF>> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(random_vec(f, n, k, 2, rng));
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t l = 0; l < n; ++l) {
      ModVector<FF> v(f, n, k);
      v.comps[c] = mpoly::add(X(f, n, l, 3), random_poly(f, n, 1, rng, 2));
      gens.push_back(v);
    }
  return Submodule<FF>::generate(f, n, k, gens, order);
}

}  // namespace

TEST_SUITE("polymod") {

TEST_CASE("groebner examples") {
  auto f5 = FF::prime(5);
  auto x = X(f5, 1, 0);
  auto S = Submodule<FF>::generate(f5, 1, 1, {vec1(mpoly::sub(X(f5, 1, 0, 2), C(f5, 1, 1))), vec1(mpoly::sub(x, C(f5, 1, 1)))});
  REQUIRE(S.basis().size() == 1);
  CHECK(S.basis()[0] == vec1(mpoly::sub(x, C(f5, 1, 1))));

  auto full = Submodule<FF>::generate(f5, 1, 2, {ModVector<FF>::unit(f5, 1, 2, 0), ModVector<FF>::unit(f5, 1, 2, 1)});
  CHECK(full.is_full());
  REQUIRE(full.basis().size() == 2);
  CHECK(full.basis()[1] == ModVector<FF>::unit(f5, 1, 2, 0));
  CHECK(full.basis()[0] == ModVector<FF>::unit(f5, 1, 2, 1));

  auto q = QF::rationals();
  auto xq = X(q, 2, 0), yq = X(q, 2, 1);
  auto T = Submodule<QF>::generate(q, 2, 1, {vec1(xq), vec1(yq)});
  REQUIRE(T.basis().size() == 2);
  CHECK(T.contains(vec1(xq)));
  CHECK(T.contains(vec1(yq)));
  CHECK(T.normal_form(vec1(mpoly::mul(xq, yq))).is_zero());
  CHECK_FALSE(T.contains(vec1(C(q, 2, 1))));
}

TEST_CASE("normal form examples") {
  auto f5 = FF::prime(5);
  auto x = X(f5, 1, 0);
  auto xm1 = mpoly::sub(x, C(f5, 1, 1));
  auto S = Submodule<FF>::generate(f5, 1, 1, {vec1(xm1)});
  CHECK(S.normal_form(vec1(X(f5, 1, 0, 2))) == vec1(C(f5, 1, 1)));
  auto zero = MPoly<FF>(f5, 1);
  auto T = Submodule<FF>::generate(f5, 1, 2, {vec2(x, zero), vec2(zero, xm1)});
  CHECK(T.normal_form(vec2(x, C(f5, 1, 1))) == vec2(zero, C(f5, 1, 1)));
  for (auto& g : T.generators()) CHECK(T.normal_form(g).is_zero());
}

TEST_CASE("zero-dimensionality examples") {
  auto f3 = FF::prime(3), f5 = FF::prime(5);
  auto S = Submodule<FF>::generate(f3, 1, 1, {vec1(mpoly::sub(X(f3, 1, 0, 2), X(f3, 1, 0)))});
  auto i1 = zero_dim_info(S);
  CHECK(i1.zero_dimensional);
  CHECK(i1.degree_bound == 1);
  CHECK(i1.codim == 2);
  auto T = Submodule<FF>::generate(f3, 2, 1, {vec1(X(f3, 2, 0))});
  CHECK_FALSE(zero_dim_info(T).zero_dimensional);
  CHECK_THROWS_AS(enumerate_points(T, 4), Error);
  // x^2 - 2 over F5: 2 is a non-residue
  for (int a = 0; a < 5; ++a) CHECK(a * a % 5 != 2);
  auto U = Submodule<FF>::generate(f5, 1, 1, {vec1(mpoly::sub(X(f5, 1, 0, 2), C(f5, 1, 2)))});
  auto i3 = zero_dim_info(U);
  CHECK(i3.zero_dimensional);
  CHECK(i3.degree_bound == 2);
}

TEST_CASE("point enumeration examples") {
  auto f3 = FF::prime(3), f5 = FF::prime(5), f2 = FF::prime(2);
  auto S = Submodule<FF>::generate(f3, 1, 1, {vec1(mpoly::sub(X(f3, 1, 0, 2), X(f3, 1, 0)))});
  auto ps = enumerate_points(S, 3);
  std::set<std::uint32_t> got;
  for (auto& p : ps.points) got.insert(p[0]);
  CHECK(got == std::set<std::uint32_t>{0, 1});

  auto U = Submodule<FF>::generate(f5, 1, 1, {vec1(mpoly::sub(X(f5, 1, 0, 2), C(f5, 1, 2)))});
  CHECK_THROWS_AS(enumerate_points(U, 1), Error);
  auto pu = enumerate_points(U, 2);
  const auto& K = pu.ext;
  CHECK(K.size() == 25);
  // root-finding oracle: scan all of F25
  std::set<std::uint32_t> roots;
  for (std::uint64_t c = 0; c < 25; ++c)
    if (K.mul(K.from_code(c), K.from_code(c)) == K.from_int(2)) roots.insert(static_cast<std::uint32_t>(c));
  std::set<std::uint32_t> pts;
  for (auto& p : pu.points) pts.insert(p[0]);
  CHECK(pts == roots);
  CHECK(pts.size() == 2);
  for (auto d : pu.degrees) CHECK(d == 2);

  auto V = Submodule<FF>::generate(f2, 1, 1, {vec1(mpoly::add(X(f2, 1, 0, 2), C(f2, 1, 1)))});
  auto pv = enumerate_points(V, 2);
  REQUIRE(pv.points.size() == 1);
  CHECK(pv.points[0][0] == 1);
}

TEST_CASE("intersection examples") {
  auto f5 = FF::prime(5);
  auto x = X(f5, 1, 0);
  auto A = Submodule<FF>::generate(f5, 1, 1, {vec1(x)});
  auto B = Submodule<FF>::generate(f5, 1, 1, {vec1(mpoly::sub(x, C(f5, 1, 1)))});
  auto I = intersect_submodules(A, B);
  CHECK(I == Submodule<FF>::generate(f5, 1, 1, {vec1(mpoly::sub(X(f5, 1, 0, 2), x))}));
  CHECK(intersect_submodules(A, A) == A);
  auto e0 = Submodule<FF>::generate(f5, 1, 2, {ModVector<FF>::unit(f5, 1, 2, 0)});
  auto e1 = Submodule<FF>::generate(f5, 1, 2, {ModVector<FF>::unit(f5, 1, 2, 1)});
  CHECK(intersect_submodules(e0, e1).is_zero());
  CHECK_THROWS_AS(intersect_submodules(A, e0), Error);
}

TEST_CASE("buchberger criterion and generator membership on random modules") {
  std::mt19937_64 rng(11);
  auto f5 = FF::prime(5);
  for (ModuleOrder o : {ModuleOrder{PosOrder::POT, MonoOrder::DegRevLex}, ModuleOrder{PosOrder::TOP, MonoOrder::DegRevLex},
                        ModuleOrder{PosOrder::POT, MonoOrder::Lex}, ModuleOrder{PosOrder::TOP, MonoOrder::Lex}}) {
    for (int t = 0; t < 8; ++t) {
      std::size_t n = 1 + t % 2, k = 1 + t % 3;
      std::vector<ModVector<FF>> gens;
      for (int i = 0; i < 3; ++i) gens.push_back(random_vec(f5, n, k, 2, rng));
      auto S = Submodule<FF>::generate(f5, n, k, gens, o);
      CHECK(satisfies_buchberger_criterion(S));
      // monic, reduced
      auto lts = S.leading_terms();
      for (std::size_t i = 0; i < S.basis().size(); ++i)
        for (std::size_t j = 0; j < lts.size(); ++j)
          if (i != j) CHECK_FALSE((lts[j].comp == lts[i].comp && lts[j].m.divides(lts[i].m)));
    }
  }
}

TEST_CASE("orders agree on membership") {
  std::mt19937_64 rng(5);
  auto f3 = FF::prime(3);
  for (int t = 0; t < 6; ++t) {
    std::vector<ModVector<FF>> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_vec(f3, 2, 2, 2, rng));
    auto a = Submodule<FF>::generate(f3, 2, 2, gens, {PosOrder::POT, MonoOrder::DegRevLex});
    auto b = Submodule<FF>::generate(f3, 2, 2, gens, {PosOrder::TOP, MonoOrder::Lex});
    CHECK(a.contains_submodule(b));
    CHECK(b.contains_submodule(a));
  }
}

TEST_CASE("normal form is linear modulo the submodule") {
  std::mt19937_64 rng(3);
  auto f7 = FF::prime(7);
  for (int t = 0; t < 10; ++t) {
    std::vector<ModVector<FF>> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_vec(f7, 2, 2, 2, rng));
    auto S = Submodule<FF>::generate(f7, 2, 2, gens);
    auto u = random_vec(f7, 2, 2, 3, rng), v = random_vec(f7, 2, 2, 3, rng);
    CHECK(S.normal_form(modvec::add(u, v)) == S.normal_form(modvec::add(S.normal_form(u), v)));
    CHECK(S.contains(modvec::sub(u, S.normal_form(u))));
  }
}

TEST_CASE("degree budget is a hard error") {
  auto f5 = FF::prime(5);
  auto x = X(f5, 2, 0), y = X(f5, 2, 1);
  // S-pair lcm x^3 y^3 has degree 6
  std::vector<ModVector<FF>> gens{vec1(mpoly::sub(mpoly::mul(mpoly::pow(x, 3), y), C(f5, 2, 1))),
                                  vec1(mpoly::sub(mpoly::mul(x, mpoly::pow(y, 3)), x))};
  GbOptions small;
  small.degree_budget = 4;
  try {
    Submodule<FF>::generate(f5, 2, 1, gens, {}, small);
    FAIL("expected DegreeBudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeBudgetExceeded);
  }
  CHECK_NOTHROW(Submodule<FF>::generate(f5, 2, 1, gens));
}

TEST_CASE("points: no generator misses a reported point, exhaustive scan finds no others") {
  std::mt19937_64 rng(17);
  auto f3 = FF::prime(3);
  for (int t = 0; t < 6; ++t) {
    std::size_t n = 1 + t % 2;
    // rank 1 so every point kills every generator
    auto S = random_zero_dim(f3, n, 1, rng);
    auto info = zero_dim_info(S);
    REQUIRE(info.zero_dimensional);
    if (info.degree_bound > 4) continue;
    auto ps = enumerate_points(S, info.degree_bound);
    std::set<std::vector<std::uint32_t>> reported(ps.points.begin(), ps.points.end());
    for (auto& p : ps.points)
      for (auto& g : S.basis()) CHECK(mpoly::eval(g.comps[0], ps.embedding, p) == 0);
    const auto& K = ps.ext;
    std::uint64_t total = 1;
    for (std::size_t l = 0; l < n; ++l) total *= K.size();
    for (std::uint64_t i = 0; i < total; ++i) {
      std::vector<std::uint32_t> xi(n);
      std::uint64_t c = i;
      for (std::size_t l = 0; l < n; ++l) {
        xi[l] = static_cast<std::uint32_t>(c % K.size());
        c /= K.size();
      }
      bool vanish = true;
      for (auto& g : S.basis()) vanish = vanish && mpoly::eval(g.comps[0], ps.embedding, xi) == 0;
      CHECK(vanish == (reported.count(xi) > 0));
    }
  }
}

TEST_CASE("intersections lie in both sides and contain products") {
  std::mt19937_64 rng(23);
  auto f5 = FF::prime(5);
  for (int t = 0; t < 6; ++t) {
    std::size_t n = 1 + t % 2, k = 1 + t % 2;
    std::vector<ModVector<FF>> g1, g2;
    for (int i = 0; i < 2; ++i) g1.push_back(random_vec(f5, n, k, 2, rng));
    auto p = random_poly(f5, n, 2, rng);
    for (int i = 0; i < 2; ++i) g2.push_back(random_vec(f5, n, k, 2, rng));
    for (std::size_t c = 0; c < k; ++c) {
      ModVector<FF> v(f5, n, k);
      v.comps[c] = p;
      g2.push_back(v);
    }
    auto A = Submodule<FF>::generate(f5, n, k, g1);
    auto B = Submodule<FF>::generate(f5, n, k, g2);
    auto I = intersect_submodules(A, B);
    CHECK(A.contains_submodule(I));
    CHECK(B.contains_submodule(I));
    for (auto& g : g1) CHECK(I.contains(modvec::scale(g, p)));
  }
}

TEST_CASE("image and preimage under constant matrices") {
  std::mt19937_64 rng(29);
  auto f3 = FF::prime(3);
  // projection onto the first component and its section
  Matrix<FF> P(f3, 1, 2);
  P.at(0, 0) = 1;
  for (int t = 0; t < 5; ++t) {
    std::vector<ModVector<FF>> gens;
    for (int i = 0; i < 2; ++i) gens.push_back(random_vec(f3, 1, 1, 2, rng));
    auto J = Submodule<FF>::generate(f3, 1, 1, gens);
    auto pre = preimage_submodule(P, J);
    CHECK(pre.rank() == 2);
    CHECK(pre.contains(ModVector<FF>::unit(f3, 1, 2, 1)));
    CHECK(image_submodule(P, pre) == J);
    for (auto& g : gens) CHECK(pre.contains(modvec::concat(g, random_vec(f3, 1, 1, 2, rng))));
  }
  auto S = Submodule<FF>::generate(f3, 1, 2, {random_vec(f3, 1, 2, 2, rng)});
  CHECK(preimage_submodule(Matrix<FF>::identity(f3, 2), S) == S);
}

TEST_CASE("kernel walk reproduces zero-dimensional submodules") {
  std::mt19937_64 rng(31);
  auto f5 = FF::prime(5);
  for (ModuleOrder o : {ModuleOrder{}, ModuleOrder{PosOrder::TOP, MonoOrder::Lex}}) {
    for (int t = 0; t < 6; ++t) {
      std::size_t n = 1 + t % 2, k = 1 + (t / 2) % 2;
      auto S = random_zero_dim(f5, n, k, rng, o);
      auto info = zero_dim_info(S);
      REQUIRE(info.zero_dimensional);
      // quotient map F[x]^k -> F[x]^k / S on the standard basis
      LinearModuleMap<FF> map;
      map.rank = k;
      map.nvars = n;
      map.dim = info.codim;
      map.action = info.multiplication;
      for (std::size_t c = 0; c < k; ++c) {
        auto nf = S.normal_form(ModVector<FF>::unit(f5, n, k, c));
        Vec<FF> img(info.codim, 0);
        for (std::size_t cc = 0; cc < k; ++cc)
          for (auto& [m, x] : nf.comps[cc].terms)
            for (std::size_t i = 0; i < info.codim; ++i)
              if (info.standard_terms[i] == Term{m, static_cast<std::uint32_t>(cc)}) img[i] = x;
        map.images.push_back(img);
      }
      auto K = kernel_submodule(f5, map, o);
      CHECK(K == S);
      CHECK(satisfies_buchberger_criterion(K));
    }
  }
}

TEST_CASE("kernel walk: evaluation at points") {
  auto f3 = FF::prime(3);
  // a(2) = 0 in F3[x]
  LinearModuleMap<FF> m1{1, 1, 1, {Vec<FF>{1}}, {Matrix<FF>::identity(f3, 1)}};
  m1.action[0].at(0, 0) = 2;
  auto K1 = kernel_submodule(f3, m1);
  CHECK(K1 == Submodule<FF>::generate(f3, 1, 1, {vec1(mpoly::sub(X(f3, 1, 0), C(f3, 1, 2)))}));
  // a(0) = a(1) = 0
  Matrix<FF> act(f3, 2, 2);
  act.at(1, 1) = 1;
  LinearModuleMap<FF> m2{1, 1, 2, {Vec<FF>{1, 1}}, {act}};
  CHECK(kernel_submodule(f3, m2) ==
        Submodule<FF>::generate(f3, 1, 1, {vec1(mpoly::sub(X(f3, 1, 0, 2), X(f3, 1, 0)))}));
}

TEST_CASE("printing") {
  auto f5 = FF::prime(5);
  auto p = mpoly::add(mpoly::add(mpoly::scale(X(f5, 2, 0, 2), 3), X(f5, 2, 1)), C(f5, 2, 4));
  CHECK(p.to_string(default_var_names(2)) == "3*x1^2 + x2 + 4");
  auto q = QF::rationals();
  auto r = mpoly::sub(X(q, 1, 0), MPoly<QF>::constant(q, 1, q.from_rational(mpq_class(1, 2))));
  CHECK(r.to_string(default_var_names(1)) == "x - 1/2");
  CHECK(vec2(X(f5, 1, 0), MPoly<FF>(f5, 1)).to_string({"x"}) == "[x, 0]");
}
}
