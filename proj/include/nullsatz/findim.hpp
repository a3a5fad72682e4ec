#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "nullsatz/field.hpp"
#include "nullsatz/linalg.hpp"
#include "nullsatz/parallel.hpp"
#include "nullsatz/upoly.hpp"

namespace nullsatz {

template <class F>
struct WedderburnData;

// Finite-dimensional algebra given by structure constants (a prime base field
// everywhere except internal factor algebras)
// b_i * b_j = sum_k c[i][j][k] b_k.
template <class F>
class FinDimAlgebra {
 public:
  using Elem = typename F::Elem;

  FinDimAlgebra() = default;
  // `structure` is flat: c[(i * d + j) * d + k]
  static FinDimAlgebra create(F field, std::size_t dim, std::vector<Elem> structure, Vec<F> unit,
                              std::vector<std::string> names = {}, bool validate = true);

  const F& field() const { return d_->field; }
  std::size_t dim() const { return d_->dim; }
  const Vec<F>& unit() const { return d_->unit; }
  const std::vector<std::string>& names() const { return d_->names; }
  const Elem& c(std::size_t i, std::size_t j, std::size_t k) const {
    return d_->structure[(i * d_->dim + j) * d_->dim + k];
  }
  const std::vector<Elem>& structure() const { return d_->structure; }

  Vec<F> basis(std::size_t i) const { return vec::unit(field(), dim(), i); }
  Vec<F> zero() const { return vec::zeros(field(), dim()); }
  Vec<F> mul(const Vec<F>& a, const Vec<F>& b) const;
  Vec<F> scalar(const Elem& s) const { return vec::scale(field(), unit(), s); }
  // matrix of x -> a x, resp. x -> x a
  Matrix<F> left_mult(const Vec<F>& a) const;
  Matrix<F> right_mult(const Vec<F>& a) const;
  const Matrix<F>& left_basis_mult(std::size_t i) const { return d_->left[i]; }
  bool is_commutative() const;
  std::optional<std::size_t> name_index(const std::string& name) const;
  std::string element_to_string(const Vec<F>& a) const;

  // Radical and Wedderburn data computed once with the default seed.
  const WedderburnData<F>& wedderburn_data() const;

  friend bool operator==(const FinDimAlgebra& a, const FinDimAlgebra& b) {
    return a.d_ == b.d_ || (a.field() == b.field() && a.dim() == b.dim() && a.d_->structure == b.d_->structure &&
                            a.unit() == b.unit());
  }
  friend bool operator!=(const FinDimAlgebra& a, const FinDimAlgebra& b) { return !(a == b); }

 private:
  struct Data {
    F field;
    std::size_t dim = 0;
    std::vector<Elem> structure;
    Vec<F> unit;
    std::vector<std::string> names;
    std::vector<Matrix<F>> left;  // left multiplication by b_i
    mutable std::once_flag wd_once;
    mutable std::shared_ptr<const WedderburnData<F>> wd;
  };
  std::shared_ptr<Data> d_;
};

// ---- presets ---------------------------------------------------------------

template <class F>
FinDimAlgebra<F> matrix_algebra(const F& f, std::size_t n);
template <class F>
FinDimAlgebra<F> dual_numbers(const F& f);
// F[u]/(poly), poly monic given low to high
template <class F>
FinDimAlgebra<F> polynomial_quotient_algebra(const F& f, const std::vector<typename F::Elem>& poly,
                                             const std::string& var = "u");
template <class F>
FinDimAlgebra<F> cyclic_group_algebra(const F& f, std::size_t n);
template <class F>
FinDimAlgebra<F> upper_triangular(const F& f, std::size_t n);
// quaternion algebra (a, b)_F with i^2 = a, j^2 = b, ij = -ji = k
template <class F>
FinDimAlgebra<F> quaternion_algebra(const F& f, const typename F::Elem& a, const typename F::Elem& b);
// An algebra over an extension E viewed over the prime field (basis b_i * t^l).
template <class F>
FinDimAlgebra<F> restrict_scalars(const F& ext, std::size_t dim, const std::vector<typename F::Elem>& structure,
                                  const std::vector<typename F::Elem>& unit, const std::vector<std::string>& names);

// ---- radical & Wedderburn --------------------------------------------------

enum class RadicalMethod {
  Auto,       // trace form when char 0 or p > dim, iterated trace functionals otherwise
  TraceForm,  // trace form only; small characteristic is rejected
};

template <class F>
std::vector<Vec<F>> radical(const FinDimAlgebra<F>& a, RadicalMethod method = RadicalMethod::Auto);

template <class F>
Subspace<F> center(const FinDimAlgebra<F>& a);

template <class F>
struct SimpleFactor {
  using Elem = typename F::Elem;
  F center;                    // E_j = F[t]/(center_minpoly)
  std::size_t degree = 1;      // [E_j : F]
  std::size_t k = 1;           // factor is M_k(E_j)
  UPoly<F> center_minpoly;     // over the prime field
  std::vector<Matrix<F>> theta;  // image of each basis element b_i, k x k over E_j
  std::vector<Vec<F>> section;   // (l * k + r) * k + s -> element of A mapping to t^l E_rs

  Matrix<F> theta_of(const Vec<F>& a) const;
  // F-linear lift of a k x k matrix over E_j
  Vec<F> section_of(const Matrix<F>& m) const;
  const Vec<F>& section_unit(std::size_t l, std::size_t r, std::size_t s) const {
    return section[(l * k + r) * k + s];
  }
};

template <class F>
struct WedderburnData {
  std::vector<Vec<F>> radical;
  Subspace<F> radical_space;
  std::vector<SimpleFactor<F>> factors;
};

template <class F>
WedderburnData<F> wedderburn(const FinDimAlgebra<F>& a, std::uint64_t seed = 0, int attempts = 32,
                             RadicalMethod method = RadicalMethod::Auto);

// ---- dual bases & Xi ---------------------------------------------------------

template <class F>
struct XiTerm {
  Vec<F> e;
  Vec<F> f;
};

template <class F>
struct DualBasisEntry {
  std::size_t factor = 0, row = 0, col = 0;
  Vec<F> v;                          // sigma_j(E_rs)
  std::vector<Vec<F>> omega;         // omega(b_m) for each basis element, central
  std::vector<XiTerm<F>> preimage;   // sum_alpha e x f = omega(x)
};

template <class F>
struct DualBasisData {
  std::vector<DualBasisEntry<F>> entries;
};

// Central value omega_{j,r,s}(x) = sigma_j(theta_j(x)_rs * 1).
template <class F>
Vec<F> dual_functional(const FinDimAlgebra<F>& a, const SimpleFactor<F>& factor, std::size_t r, std::size_t s,
                       const Vec<F>& x);

template <class F>
DualBasisData<F> xi_preimage(const FinDimAlgebra<F>& a, std::uint64_t seed = 0);

// sum_alpha e^alpha x f^alpha
template <class F>
Vec<F> xi_apply(const FinDimAlgebra<F>& a, const std::vector<XiTerm<F>>& terms, const Vec<F>& x);

// ---- left ideals of A --------------------------------------------------------

template <class F>
class LeftIdealFD {
 public:
  LeftIdealFD() = default;
  // span must already be closed under left multiplication
  static LeftIdealFD from_basis(const FinDimAlgebra<F>& a, const std::vector<Vec<F>>& vs);
  // smallest left ideal containing the vectors
  static LeftIdealFD generated(const FinDimAlgebra<F>& a, const std::vector<Vec<F>>& vs);

  const FinDimAlgebra<F>& algebra() const { return a_; }
  const Subspace<F>& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  bool contains(const Vec<F>& v) const { return space_.contains(v); }
  bool is_two_sided() const;
  friend bool operator==(const LeftIdealFD& x, const LeftIdealFD& y) { return x.space_ == y.space_; }

 private:
  FinDimAlgebra<F> a_;
  Subspace<F> space_;
};

template <class F>
LeftIdealFD<F> ideal_quotient(const LeftIdealFD<F>& i);

// I^perp = {b : I b ⊆ [I:A]}, a right ideal
template <class F>
Subspace<F> perp(const LeftIdealFD<F>& i);

template <class F>
struct DoubleAnnihilatorResult {
  bool holds = false;
  Subspace<F> recovered;  // {a : a I^perp ⊆ [I:A]}
  std::optional<Vec<F>> witness;
};

template <class F>
DoubleAnnihilatorResult<F> double_annihilator_check(const LeftIdealFD<F>& i);

enum class PredicateMode { Auto, Exhaustive, Sampled };

struct PredicateOptions {
  PredicateMode mode = PredicateMode::Auto;
  std::uint64_t exhaustion_limit = 1ULL << 20;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  Exec exec = Exec::Parallel;
};

template <class F>
struct PredicateResult {
  bool holds = true;
  bool exhaustive = false;
  std::uint64_t checked = 0;
  std::optional<Vec<F>> witness_a;
  std::optional<Vec<F>> witness_b;
};

template <class F>
PredicateResult<F> is_semiprime_left(const LeftIdealFD<F>& i, const PredicateOptions& opt = {});
template <class F>
PredicateResult<F> is_prime_left(const LeftIdealFD<F>& i, const PredicateOptions& opt = {});

template <class F>
struct AnnMaximalResult {
  bool maximal = false;
  LeftIdealFD<F> annihilator;
  std::size_t codim = 0;
};

// action[i] is the matrix of b_i on the module
template <class F>
AnnMaximalResult<F> ann_maximal_check(const FinDimAlgebra<F>& a, const std::vector<Matrix<F>>& action,
                                      const Vec<F>& m, Exec exec = Exec::Parallel);

// Free module R^rank over a commutative algebra R; coordinates (component c, basis i) -> c*d + i.
template <class F>
PredicateResult<F> is_semiprime_submodule(const FinDimAlgebra<F>& r, std::size_t rank, const Subspace<F>& n,
                                          const PredicateOptions& opt = {});
template <class F>
PredicateResult<F> is_prime_submodule(const FinDimAlgebra<F>& r, std::size_t rank, const Subspace<F>& n,
                                      const PredicateOptions& opt = {});

// Brute-force lattices (oracles for small algebras over finite fields).
template <class F>
std::vector<LeftIdealFD<F>> enumerate_left_ideals(const FinDimAlgebra<F>& a, std::uint64_t limit = 1ULL << 16);
template <class F>
std::vector<LeftIdealFD<F>> enumerate_two_sided_ideals(const FinDimAlgebra<F>& a, std::uint64_t limit = 1ULL << 16);
template <class F>
std::vector<LeftIdealFD<F>> maximal_elements(const std::vector<LeftIdealFD<F>>& ideals);

// i-th vector of F^n in digit order (finite prime fields)
Vec<FiniteField> enumerate_vector(const FiniteField& f, std::size_t n, std::uint64_t index);
std::uint64_t count_vectors(const FiniteField& f, std::size_t n, std::uint64_t limit, const char* where);

}  // namespace nullsatz
