#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nullsatz/findim.hpp"
#include "nullsatz/polymod.hpp"

namespace nullsatz {

// element of A[x_1..x_n]; the variables are central
template <class F>
struct AlgPoly {
  using Elem = typename F::Elem;
  FinDimAlgebra<F> alg;
  std::size_t nvars = 0;
  std::vector<std::pair<Monomial, Vec<F>>> terms;  // sorted by Monomial::operator<, no zero coefficients

  AlgPoly() = default;
  AlgPoly(FinDimAlgebra<F> a, std::size_t n) : alg(std::move(a)), nvars(n) {}
  static AlgPoly constant(const FinDimAlgebra<F>& a, std::size_t n, const Vec<F>& c);
  static AlgPoly one(const FinDimAlgebra<F>& a, std::size_t n) { return constant(a, n, a.unit()); }
  static AlgPoly basis(const FinDimAlgebra<F>& a, std::size_t n, std::size_t i) { return constant(a, n, a.basis(i)); }
  // x_l * 1
  static AlgPoly variable(const FinDimAlgebra<F>& a, std::size_t n, std::size_t l);
  static AlgPoly term(const FinDimAlgebra<F>& a, std::size_t n, const Monomial& m, const Vec<F>& c);

  bool is_zero() const { return terms.empty(); }
  int total_degree() const;
  Vec<F> coeff(const Monomial& m) const;
  std::string to_string(const std::vector<std::string>& vars) const;
  friend bool operator==(const AlgPoly& a, const AlgPoly& b) { return a.nvars == b.nvars && a.terms == b.terms; }
  friend bool operator!=(const AlgPoly& a, const AlgPoly& b) { return !(a == b); }
};

namespace algpoly {
template <class F>
AlgPoly<F> add(const AlgPoly<F>& a, const AlgPoly<F>& b);
template <class F>
AlgPoly<F> sub(const AlgPoly<F>& a, const AlgPoly<F>& b);
template <class F>
AlgPoly<F> scale(const AlgPoly<F>& a, const typename F::Elem& s);
template <class F>
AlgPoly<F> mul(const AlgPoly<F>& a, const AlgPoly<F>& b);
template <class F>
AlgPoly<F> mul_poly(const AlgPoly<F>& a, const MPoly<F>& r);
// coordinates over the algebra basis: component i collects the b_i coefficients
template <class F>
ModVector<F> to_module(const AlgPoly<F>& a);
template <class F>
AlgPoly<F> from_module(const FinDimAlgebra<F>& alg, const ModVector<F>& v);
// x^m b_c
template <class F>
AlgPoly<F> from_term(const FinDimAlgebra<F>& alg, std::size_t nvars, const Term& t);
template <class F>
AlgPoly<F> random(const FinDimAlgebra<F>& alg, std::size_t nvars, int maxdeg, std::mt19937_64& rng, int terms = 3);
}  // namespace algpoly

// Left ideal of A[x], stored as the R-submodule of R^d (R = F[x], d = dim A) spanned by b_i g_j.
template <class F>
class LeftIdeal {
 public:
  LeftIdeal() = default;
  static LeftIdeal generate(const FinDimAlgebra<F>& alg, std::size_t nvars, const std::vector<AlgPoly<F>>& gens,
                            ModuleOrder order = {}, GbOptions opt = {});
  // backing must be closed under left multiplication; checked, InvalidArgument otherwise
  static LeftIdeal from_backing(const FinDimAlgebra<F>& alg, Submodule<F> backing);
  static LeftIdeal zero(const FinDimAlgebra<F>& alg, std::size_t nvars, ModuleOrder order = {});
  static LeftIdeal full(const FinDimAlgebra<F>& alg, std::size_t nvars, ModuleOrder order = {});

  const FinDimAlgebra<F>& algebra() const { return alg_; }
  std::size_t nvars() const { return backing_.nvars(); }
  const Submodule<F>& backing() const { return backing_; }
  const std::vector<AlgPoly<F>>& generators() const { return gens_; }
  // reduced basis of the backing module read back as algebra polynomials
  std::vector<AlgPoly<F>> basis() const;

  bool contains(const AlgPoly<F>& a) const { return backing_.contains(algpoly::to_module(a)); }
  bool contains_ideal(const LeftIdeal& o) const { return backing_.contains_submodule(o.backing_); }
  bool is_full() const { return backing_.is_full(); }
  bool is_zero() const { return backing_.is_zero(); }
  AlgPoly<F> normal_form(const AlgPoly<F>& a) const {
    return algpoly::from_module(alg_, backing_.normal_form(algpoly::to_module(a)));
  }
  friend bool operator==(const LeftIdeal& a, const LeftIdeal& b) { return a.backing_ == b.backing_; }
  friend bool operator!=(const LeftIdeal& a, const LeftIdeal& b) { return !(a == b); }

 private:
  FinDimAlgebra<F> alg_;
  Submodule<F> backing_;
  std::vector<AlgPoly<F>> gens_;
};

template <class F>
LeftIdeal<F> sum_ideals(const LeftIdeal<F>& a, const LeftIdeal<F>& b);
template <class F>
LeftIdeal<F> intersect_ideals(const LeftIdeal<F>& a, const LeftIdeal<F>& b);

// A point xi in K^n, an embedding E_j -> K of the factor centre and v in K^{k_j}.
template <class F>
struct DirectionalPoint {
  std::size_t factor = 0;
  F field;
  Embedding<F> embedding;
  std::vector<typename F::Elem> xi;
  Vec<F> v;
};

// theta_j(a)(xi) as a k_j x k_j matrix over K
template <class F>
Matrix<F> evaluate(const AlgPoly<F>& a, std::size_t factor, const Embedding<F>& emb,
                   const std::vector<typename F::Elem>& xi);

// a -> (theta_j(a)(xi) v) for each point, into the product of the K^k viewed over F
template <class F>
LinearModuleMap<F> directional_map(const FinDimAlgebra<F>& alg, std::size_t nvars,
                                   const std::vector<DirectionalPoint<F>>& points);

// {a : theta_j(a)(xi) v = 0}, the kernel of an R-linear map into K^k viewed over F
template <class F>
LeftIdeal<F> directional_ideal(const FinDimAlgebra<F>& alg, std::size_t nvars, const DirectionalPoint<F>& p,
                               ModuleOrder order = {});

// Algebra morphism given by its matrix on coefficients (target.dim x source.dim).
template <class F>
struct AlgebraMorphism {
  FinDimAlgebra<F> source, target;
  Matrix<F> map;
  // checks unit and multiplicativity on basis pairs
  static AlgebraMorphism create(FinDimAlgebra<F> source, FinDimAlgebra<F> target, Matrix<F> map);
  Vec<F> operator()(const Vec<F>& a) const { return matvec(map, a); }
  bool is_surjective() const { return rank(map) == target.dim(); }
};

// quotient A -> A / (two-sided ideal spanned by `ideal`), on a complement basis
template <class F>
AlgebraMorphism<F> quotient_morphism(const FinDimAlgebra<F>& a, const std::vector<Vec<F>>& ideal);

enum class TransportDirection { Image, Preimage };

template <class F>
LeftIdeal<F> transport(const AlgebraMorphism<F>& pi, const LeftIdeal<F>& i, TransportDirection dir);

// ---- predicates ---------------------------------------------------------------

template <class F>
struct IdealPredicateResult {
  bool holds = true;
  bool exhaustive = false;
  std::uint64_t checked = 0;
  std::optional<AlgPoly<F>> witness_a;
  std::optional<AlgPoly<F>> witness_b;
};

// first candidate a with a*b_i*a in I for every basis b_i but a not in I
template <class F>
IdealPredicateResult<F> is_semiprime_left_witnessed(const LeftIdeal<F>& i, const std::vector<AlgPoly<F>>& candidates,
                                                    Exec exec = Exec::Parallel);

// The quotient M = A[x]/I as a module: standard terms, action of b_i and x_l.
template <class F>
struct QuotientModule {
  std::size_t dim = 0;
  std::vector<Term> standard_terms;
  std::vector<Matrix<F>> basis_action;  // b_i
  std::vector<Matrix<F>> var_action;    // x_l
  Vec<F> one;                           // class of 1
};

// NotZeroDimensional when M is infinite-dimensional
template <class F>
QuotientModule<F> quotient_module(const LeftIdeal<F>& i);
template <class F>
Vec<F> quotient_coords(const LeftIdeal<F>& i, const QuotientModule<F>& m, const AlgPoly<F>& a);
template <class F>
AlgPoly<F> lift_from_quotient(const LeftIdeal<F>& i, const QuotientModule<F>& m, const Vec<F>& u);

// Exact over finite fields when |F|^codim <= exhaustion_limit (nonzero u in M up to scalars);
// otherwise random candidates of degree <= 2 and exhaustive = false.
template <class F>
IdealPredicateResult<F> is_semiprime_left(const LeftIdeal<F>& i, const PredicateOptions& opt = {});
template <class F>
IdealPredicateResult<F> is_prime_left(const LeftIdeal<F>& i, const PredicateOptions& opt = {});
// maximal iff M is simple; requires a finite-dimensional quotient
template <class F>
IdealPredicateResult<F> is_maximal_left(const LeftIdeal<F>& i, const PredicateOptions& opt = {});

// The image of A[x] in End(A[x]/I), i.e. A[x] modulo the largest two-sided ideal inside I.
template <class F>
FinDimAlgebra<F> annihilator_quotient(const LeftIdeal<F>& i);
// that two-sided ideal is maximal iff the image algebra is simple
template <class F>
bool annihilator_maximal(const LeftIdeal<F>& i);

}  // namespace nullsatz
