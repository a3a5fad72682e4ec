// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nullsatz/cli.hpp"
#include "nullsatz/errors.hpp"
#include "nullsatz/findim.hpp"
#include "nullsatz/io.hpp"
#include "nullsatz/leftideal.hpp"
#include "nullsatz/nullsatz.hpp"
#include "nullsatz/parse.hpp"
#include "nullsatz/weyl.hpp"

using namespace nullsatz;

namespace {

using FF = FiniteField;
using AP = AlgPoly<FF>;
using LI = LeftIdeal<FF>;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// first failure wins the detail line
struct Tally {
  Outcome o;
  std::size_t checked = 0;
  void require(bool cond, const std::string& what) {
    ++checked;
    if (!cond && o.pass) {
      o.pass = false;
      o.detail = what;
    }
  }
  Outcome done(const std::string& summary) {
    if (o.pass) o.detail = summary;
    return o;
  }
};

struct Instance {
  const char* algebra;
  const char* gens;
};

// zero-dimensional generator sets, n in {1, 2}
const std::vector<Instance> kSuite{
    {"F_3", "x^2"},
    {"F_3", "x^3 - x"},
    {"F_3", "x1^2 + 1; x2^2"},
    {"F_3", "x1*x2 - 1; x1^2 - x2"},
    {"F_5", "x^2 - 2"},
    {"F_5", "(x-1)^2*(x+1)"},
    {"F_5", "x1^2 - 2; x2^2 - x1"},
    {"F_5", "x1*x2; x1^2 - x1; x2^2 - x2"},
    {"F_25", "x^2 - u"},
    {"F_25", "(x - u)^2"},
    {"F_25", "x1^2 - u; x2 - x1*u"},
    {"F_25", "x1^2 - x1; x2^2 + u"},
    {"M2(2)", "x^2 + x + 1"},
    {"M2(2)", "x^2*e11; e12 + x*e22"},
    {"M2(2)", "x1^2 + x1; x2^2*e11 + e21; x2^3 + x2 + 1"},
    {"M2(2)", "x1^3 + x1 + 1; x2^2 - x1"},
    {"M2(3)", "x^2 + 1"},
    {"M2(3)", "x^2*e11; e12"},
    {"M2(3)", "x1^2 + 1; x2^3 - x2 + 1"},
    {"M2(3)", "x1*e11 - e12; x1^3 - x1; x2^2"},
    {"dual_numbers(5)", "x^2"},
    {"dual_numbers(5)", "(x - 1)^2 + eps*x"},
    {"dual_numbers(5)", "x1^2 - eps; x2^2 - 1"},
    {"dual_numbers(5)", "x1*x2 - eps; x1^2; x2^2 - 2"},
    {"group:C2(5)", "x^2 - g"},
    {"group:C2(5)", "(x-g)^2"},
    {"group:C2(5)", "x1^2 - 1; x2 - g*x1"},
    {"group:C2(5)", "x1^2 - g; x2^2 - 2*x1"},
    {"upper_triangular:2(5)", "x^3 - x"},
    {"upper_triangular:2(5)", "x*e11 + e12; (x - 1)^2"},
    {"upper_triangular:2(5)", "x1^2 - 2; x2*e12 + x1*e22; x2^2"},
    {"upper_triangular:2(5)", "x1 - x2; x2^2 + x2 + 1"},
};

std::string label(const Instance& in) { return std::string(in.algebra) + " <" + in.gens + ">"; }

FinDimAlgebra<FF> preset(const std::string& name) {
  return std::get<FinDimAlgebra<FF>>(algebra_preset(name).algebra);
}

LI suite_ideal(const Instance& in) {
  auto A = preset(in.algebra);
  auto parsed = parse_generators(A, in.gens);
  return LI::generate(A, parsed.vars.size(), parsed.generators);
}

// pipeline results are reused by criteria 2 and 3
std::vector<RadicalResult>& suite_radicals() {
  static std::vector<RadicalResult> rs = [] {
    std::vector<RadicalResult> out;
    PipelineOptions opt;
    opt.verify = false;  // criterion 2 runs its own exhaustive check
    for (const auto& in : kSuite) out.push_back(rad_pipeline(suite_ideal(in), opt));
    return out;
  }();
  return rs;
}

Vec<FF> V(const FF& f, std::initializer_list<std::int64_t> xs) {
  Vec<FF> v;
  for (auto x : xs) v.push_back(f.from_int(x));
  return v;
}

Outcome oracle_equivalence() {
  Tally t;
  for (const auto& in : kSuite) {
    const char* argv[] = {"nullsatz", "check", "--algebra", in.algebra, "--gens", in.gens};
    std::ostringstream out, err;
    int rc = run_cli(6, argv, out, err);
    bool equal = false;
    if (rc == 0) equal = nlohmann::json::parse(out.str()).value("equal", false);
    t.require(rc == 0 && equal, label(in) + ": exit " + std::to_string(rc) + " " + err.str());
  }
  t.require(kSuite.size() >= 25, "suite has fewer than 25 instances");
  return t.done(std::to_string(kSuite.size()) + " instances, pipeline == oracle");
}

Outcome output_semiprime() {
  Tally t;
  std::size_t exhaustive = 0, skipped = 0;
  for (std::size_t i = 0; i < kSuite.size(); ++i) {
    const auto& rad = suite_radicals()[i].radical;
    if (rad.is_full()) {
      ++skipped;  // A[x] itself: nothing to check
      continue;
    }
    auto info = zero_dim_info(rad.backing());
    double size = 1;
    for (std::size_t c = 0; c < info.codim; ++c) size *= double(rad.algebra().field().size());
    if (size > double(1ULL << 20)) {
      ++skipped;
      continue;
    }
    PredicateOptions opt;
    opt.mode = PredicateMode::Exhaustive;
    auto r = is_semiprime_left(rad, opt);
    t.require(r.holds && r.exhaustive, label(kSuite[i]) + ": rad(I) is not semiprime");
    ++exhaustive;
  }
  t.require(exhaustive > 0, "no instance small enough to check");
  return t.done(std::to_string(exhaustive) + " radicals checked exhaustively, " + std::to_string(skipped) +
                " full or over the size cap");
}

Outcome finite_codimension() {
  Tally t;
  std::size_t points = 0;
  for (std::size_t i = 0; i < kSuite.size(); ++i) {
    const auto& r = suite_radicals()[i];
    const auto& A = r.input.algebra();
    for (const auto& p : r.certificate) {
      auto m = directional_ideal(A, r.input.nvars(), p);
      auto fc = finite_codim_check(m);
      t.require(fc.finite && fc.codim > 0, label(kSuite[i]) + ": directional ideal of infinite codimension");
      t.require(fc.center_maximal, label(kSuite[i]) + ": central part is not maximal");
      // the radical lies inside every certificate ideal
      t.require(m.contains_ideal(r.radical), label(kSuite[i]) + ": radical not inside a certificate ideal");
      ++points;
    }
  }
  t.require(points > 0, "no certificate points");
  return t.done(std::to_string(points) + " certificate ideals, all finite with maximal central part");
}

Outcome xi_identity() {
  Tally t;
  std::vector<FinDimAlgebra<FF>> algs;
  for (std::int64_t q : {2, 3, 5})
    for (std::size_t k = 1; k <= 3; ++k) algs.push_back(matrix_algebra(FF::prime(q), k));
  algs.push_back(cyclic_group_algebra(FF::prime(5), 2));
  std::mt19937_64 rng(4);
  std::size_t functionals = 0;
  for (const auto& A : algs) {
    const auto& f = A.field();
    auto D = xi_preimage(A);
    auto W = wedderburn(A);
    std::size_t expected = 0;
    for (const auto& sf : W.factors) expected += sf.k * sf.k;
    t.require(D.entries.size() == expected, "dual basis has the wrong size");
    std::vector<Vec<FF>> xs;
    for (std::size_t m = 0; m < A.dim(); ++m) xs.push_back(A.basis(m));
    for (int s = 0; s < 20; ++s) {
      Vec<FF> x(A.dim());
      for (auto& c : x) c = f.random(rng);
      xs.push_back(x);
    }
    for (const auto& e : D.entries) {
      ++functionals;
      for (const auto& x : xs) {
        auto omega = dual_functional(A, W.factors[e.factor], e.row, e.col, x);
        t.require(xi_apply(A, e.preimage, x) == omega, "Xi(x) differs from the dual functional");
      }
    }
    // the functionals reconstruct x
    for (const auto& x : xs) {
      Vec<FF> acc = A.zero();
      for (const auto& e : D.entries)
        acc = vec::add(f, acc, A.mul(dual_functional(A, W.factors[e.factor], e.row, e.col, x), e.v));
      t.require(acc == x, "dual basis does not reconstruct x");
    }
  }
  return t.done(std::to_string(functionals) + " functionals over " + std::to_string(algs.size()) + " algebras");
}

Outcome double_annihilator() {
  Tally t;
  auto f2 = FF::prime(2), f3 = FF::prime(3), f5 = FF::prime(5);
  struct Case {
    std::string name;
    FinDimAlgebra<FF> A;
    std::size_t maximal_count;
  };
  std::vector<Case> cases{{"M2(F2)", matrix_algebra(f2, 2), 3},
                          {"M2(F3)", matrix_algebra(f3, 2), 4},
                          {"F4/F2", polynomial_quotient_algebra(f2, {1, 1, 1}), 1},
                          {"F5[C2]", cyclic_group_algebra(f5, 2), 2}};
  std::size_t total = 0;
  for (const auto& c : cases) {
    auto maxes = maximal_elements(enumerate_left_ideals(c.A));
    t.require(maxes.size() == c.maximal_count, c.name + ": " + std::to_string(maxes.size()) + " maximal left ideals");
    for (const auto& m : maxes) {
      auto r = double_annihilator_check(m);
      t.require(r.holds && r.recovered == m.space(), c.name + ": double annihilator differs from the ideal");
      ++total;
    }
  }
  return t.done(std::to_string(total) + " maximal left ideals recovered exactly");
}

Outcome azumaya() {
  Tally t;
  auto f3 = FF::prime(3);
  auto M = matrix_algebra(f3, 2);
  std::mt19937_64 rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + trial % 2;
    std::vector<ModVector<FF>> gens;
    for (int i = 0; i < 2; ++i) {
      ModVector<FF> v(f3, n, 1);
      for (int k = 0; k < 3; ++k) {
        Monomial mono;
        for (int d = rng() % 3; d > 0; --d) mono = mono * Monomial::var(rng() % n);
        v.comps[0] = mpoly::add(v.comps[0], MPoly<FF>::monomial(f3, n, mono, f3.random(rng)));
      }
      gens.push_back(v);
    }
    auto J = Submodule<FF>::generate(f3, n, 1, gens);
    t.require(center_from_ideal(ideal_from_center(M, J)) == J, "round trip " + std::to_string(trial) + " failed");
  }
  // maximal central ideals give maximal two-sided ideals; the non-maximal controls must not
  struct MaxCase {
    std::vector<std::string> vars;
    std::string gens;
    bool maximal;
  };
  std::vector<MaxCase> mc{{{"x"}, "x", true},
                          {{"x"}, "x - 1", true},
                          {{"x"}, "x + 1", true},
                          {{"x"}, "x^2 + 1", true},
                          {{"x"}, "x^2 + x + 2", true},
                          {{"x"}, "x^2 + 2*x + 2", true},
                          {{"x1", "x2"}, "x1; x2 - 1", true},
                          {{"x1", "x2"}, "x1 - 2; x2^2 + 1", true},
                          {{"x1", "x2"}, "x1^2 + 1; x2 - x1", true},
                          {{"x1", "x2"}, "x1 - 1; x2 - 1", true},
                          {{"x"}, "x^2", false},
                          {{"x"}, "x^2 - 1", false}};
  std::size_t maximal = 0;
  auto scalars = matrix_algebra(f3, 1);
  for (const auto& c : mc) {
    std::size_t n = c.vars.size();
    std::vector<ModVector<FF>> gens;
    for (const auto& g : split_generators(c.gens)) {
      ModVector<FF> v(f3, n, 1);
      v.comps[0] = parse_polynomial(f3, c.vars, g);
      gens.push_back(v);
    }
    auto J = Submodule<FF>::generate(f3, n, 1, gens);
    auto I = ideal_from_center(M, J);
    // J maximal, decided on the commutative side
    bool j_max = finite_codim_check(LI::from_backing(scalars, J)).center_maximal;
    t.require(j_max == c.maximal, "<" + c.gens + ">: unexpected maximality of the central ideal");
    t.require(annihilator_maximal(I) == j_max, "<" + c.gens + ">: maximality not preserved");
    t.require(center_from_ideal(I) == J, "<" + c.gens + ">: round trip failed");
    if (c.maximal) ++maximal;
  }
  return t.done("100 round trips, " + std::to_string(maximal) + " maximal instances preserved, 2 controls");
}

Outcome weyl_certificate() {
  Tally t;
  WeylCheckOptions wo;
  wo.max_degree = 8;
  wo.random_r = 200;
  wo.seed = 0;
  auto rep = certificate_check(wo);
  for (const auto& l : rep.identities) t.require(l.passed, l.name + " failed: " + l.witness);
  t.require(rep.membership.refuted && rep.membership.system_rank < rep.membership.augmented_rank,
            "x in A*(yx) not refuted");
  t.require(rep.membership.degree_additive, "degree additivity failed");
  t.require(rep.ok(), "certificate report not ok");

  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    auto a = weyl::random(rng, 5, 5, 20), b = weyl::random(rng, 5, 5, 20), c = weyl::random(rng, 5, 5, 20);
    t.require(weyl::mul(weyl::mul(a, b), c) == weyl::mul(a, weyl::mul(b, c)), "associativity failed");
  }
  // representation: products act as compositions, yx - xy acts as the identity
  auto one = weyl::sub(weyl::mul(WeylElem::y(), WeylElem::x()), weyl::mul(WeylElem::x(), WeylElem::y()));
  for (int i = 0; i < 200; ++i) {
    auto a = weyl::random(rng, 4, 4), b = weyl::random(rng, 4, 4);
    QPoly p(1 + rng() % 7);
    for (auto& c : p) c = mpq_class(long(rng() % 11) - 5);
    while (!p.empty() && p.back() == 0) p.pop_back();
    t.require(poly_rep_apply(weyl::mul(a, b), p) == poly_rep_apply(a, poly_rep_apply(b, p)),
              "representation is not multiplicative");
    t.require(poly_rep_apply(one, p) == p, "[y, x] does not act as the identity");
  }
  std::size_t identities = 0;
  for (const auto& l : rep.identities) identities += l.checked;
  return t.done(std::to_string(identities) + " identity checks, non-membership rank " +
                std::to_string(rep.membership.system_rank) + " < " + std::to_string(rep.membership.augmented_rank) +
                ", 1000 associativity triples");
}

Outcome sqrt2() {
  Tally t;
  std::string witness;
  for (std::size_t n : {1u, 2u}) {
    auto r = nonmaximal_directional_demo(n);
    t.require(r.ok(), "n=" + std::to_string(n) + ": demo failed");
    t.require(!r.witness.empty(), "n=" + std::to_string(n) + ": no witness");
    t.require(r.codim_v > r.codim_u, "n=" + std::to_string(n) + ": inclusion is not strict by codimension");
    if (n == 1) witness = r.witness;
  }
  return t.done("strict inclusions for n = 1, 2; witness " + witness);
}

Outcome transport_check() {
  Tally t;
  auto f5 = FF::prime(5);
  auto D = dual_numbers(f5);
  auto pi = quotient_morphism(D, {D.basis(1)});
  t.require(pi.target.dim() == 1 && pi.is_surjective(), "quotient map is not onto F5");
  auto x = AP::variable(D, 1, 0);
  auto eps = AP::basis(D, 1, 1);
  std::mt19937_64 rng(20);
  PredicateOptions opt;
  opt.mode = PredicateMode::Exhaustive;
  std::size_t compared = 0;
  for (int i = 0; i < 20; ++i) {
    // monic modulo eps, so the ideal is proper
    unsigned deg = 1 + i % 3;
    AP lead = AP::one(D, 1);
    for (unsigned d = 0; d < deg; ++d) lead = algpoly::mul(lead, x);
    std::vector<AP> g{eps, algpoly::add(lead, algpoly::random(D, 1, int(deg) - 1, rng))};
    if (i % 4 == 3) g.push_back(algpoly::random(D, 1, 2, rng));
    auto I = LI::generate(D, 1, g);
    t.require(I.contains(eps), "ideal does not contain the kernel");
    auto img = transport(pi, I, TransportDirection::Image);
    t.require(transport(pi, img, TransportDirection::Preimage) == I, "preimage of image differs");
    t.require(transport(pi, transport(pi, img, TransportDirection::Preimage), TransportDirection::Image) == img,
              "image of preimage differs");
    if (I.is_full()) continue;
    auto s1 = is_semiprime_left(I, opt), s2 = is_semiprime_left(img, opt);
    auto p1 = is_prime_left(I, opt), p2 = is_prime_left(img, opt);
    auto m1 = is_maximal_left(I, opt), m2 = is_maximal_left(img, opt);
    t.require(s1.exhaustive && s2.exhaustive && p1.exhaustive && p2.exhaustive && m1.exhaustive && m2.exhaustive,
              "verdict was not exhaustive");
    t.require(s1.holds == s2.holds, "semiprime verdicts differ");
    t.require(p1.holds == p2.holds, "prime verdicts differ");
    t.require(m1.holds == m2.holds, "maximal verdicts differ");
    ++compared;
  }
  return t.done("20 round trips, verdicts compared on " + std::to_string(compared) + " proper ideals");
}

Outcome desk_examples() {
  Tally t;
  auto f2 = FF::prime(2), f3 = FF::prime(3), f5 = FF::prime(5), f7 = FF::prime(7);
  auto span = [](const FinDimAlgebra<FF>& A, const std::vector<Vec<FF>>& vs) {
    return Subspace<FF>::span(A.field(), A.dim(), vs);
  };
  using Factor = std::pair<std::size_t, std::size_t>;  // (k, [E:F])
  struct Case {
    std::string name;
    FinDimAlgebra<FF> A;
    std::vector<Vec<FF>> radical;
    std::multiset<Factor> factors;
  };
  auto U = upper_triangular(f5, 2);
  std::vector<Case> cases{
      {"F7[eps]", dual_numbers(f7), {V(f7, {0, 1})}, {{1, 1}}},
      {"F5[C2]", cyclic_group_algebra(f5, 2), {}, {{1, 1}, {1, 1}}},
      {"F2[C2]", cyclic_group_algebra(f2, 2), {V(f2, {1, 1})}, {{1, 1}}},
      {"M2(F3)", matrix_algebra(f3, 2), {}, {{2, 1}}},
      {"F5[u]/(u^2-2)", polynomial_quotient_algebra(f5, {3, 0, 1}), {}, {{1, 2}}},
      {"UT2(F5)", U, {U.basis(*U.name_index("e12"))}, {{1, 1}, {1, 1}}},
  };
  for (const auto& c : cases) {
    auto rad = radical(c.A);
    t.require(span(c.A, rad) == span(c.A, c.radical), c.name + ": radical differs");
    auto W = wedderburn(c.A);
    t.require(span(c.A, W.radical) == span(c.A, c.radical), c.name + ": wedderburn radical differs");
    std::multiset<Factor> got;
    std::size_t dim = 0;
    for (const auto& sf : W.factors) {
      got.insert({sf.k, sf.degree});
      dim += sf.k * sf.k * sf.degree;
      // theta is multiplicative on the basis
      for (std::size_t i = 0; i < c.A.dim(); ++i)
        for (std::size_t j = 0; j < c.A.dim(); ++j)
          t.require(sf.theta_of(c.A.mul(c.A.basis(i), c.A.basis(j))) == matmul(sf.theta[i], sf.theta[j]),
                    c.name + ": factor map is not multiplicative");
    }
    t.require(got == c.factors, c.name + ": factor shapes differ");
    // dim A = dim rad + sum k^2 [E:F]
    t.require(dim + c.radical.size() == c.A.dim(), c.name + ": dimensions do not add up");
  }
  return t.done(std::to_string(cases.size()) + " tabled algebras");
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0: no time limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> cs{
      {1, "nullstellensatz oracle equivalence", 120, oracle_equivalence},
      {2, "output semiprimeness", 0, output_semiprime},
      {3, "finite codimension of certificate ideals", 0, finite_codimension},
      {4, "Xi identity", 5, xi_identity},
      {5, "double annihilator", 10, double_annihilator},
      {6, "Azumaya correspondence", 10, azumaya},
      {7, "Weyl certificate", 30, weyl_certificate},
      {8, "sqrt 2 directional ideals", 0, sqrt2},
      {9, "transport along F5[eps] -> F5", 0, transport_check},
      {10, "radical and Wedderburn desk examples", 0, desk_examples},
  };
  int failed = 0;
  for (const auto& c : cs) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = c.limit_s <= 0 || secs <= c.limit_s;
    bool pass = o.pass && in_time;
    if (!pass) ++failed;
    char timing[64];
    if (c.limit_s > 0)
      std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, c.limit_s);
    else
      std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (pass ? "PASS" : "FAIL") << "  C" << c.id << " " << c.name << " [" << timing << "] "
              << (in_time ? o.detail : "over time limit; " + o.detail) << std::endl;
  }
  std::cout << (cs.size() - failed) << "/" << cs.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
