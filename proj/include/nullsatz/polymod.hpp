#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nullsatz/field.hpp"
#include "nullsatz/linalg.hpp"

namespace nullsatz {

inline constexpr std::size_t kMaxVars = 8;

struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;

  static Monomial one() { return {}; }
  static Monomial var(std::size_t l, unsigned power = 1);
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const;
  // requires divides
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
  // storage order only (lexicographic on exponents)
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
  std::string to_string(const std::vector<std::string>& vars) const;
};

enum class PosOrder { POT, TOP };
enum class MonoOrder { DegRevLex, Lex };

struct ModuleOrder {
  PosOrder pos = PosOrder::POT;
  MonoOrder mono = MonoOrder::DegRevLex;
  friend bool operator==(const ModuleOrder& a, const ModuleOrder& b) { return a.pos == b.pos && a.mono == b.mono; }
};

int compare_monomials(MonoOrder o, const Monomial& a, const Monomial& b);

// basis term x^m e_comp of a free module
struct Term {
  Monomial m;
  std::uint32_t comp = 0;
  friend bool operator==(const Term& a, const Term& b) { return a.comp == b.comp && a.m == b.m; }
};

// >0 if a > b. POT ranks lower component indices higher.
int compare_terms(const ModuleOrder& o, const Term& a, const Term& b);

std::vector<std::string> default_var_names(std::size_t n);

template <class F>
struct MPoly {
  using Elem = typename F::Elem;
  F field;
  std::size_t nvars = 0;
  std::vector<std::pair<Monomial, Elem>> terms;  // sorted by Monomial::operator<, no zeros

  MPoly() = default;
  MPoly(F f, std::size_t n) : field(std::move(f)), nvars(n) {}
  static MPoly constant(const F& f, std::size_t n, const Elem& c);
  static MPoly variable(const F& f, std::size_t n, std::size_t l);
  static MPoly monomial(const F& f, std::size_t n, const Monomial& m, const Elem& c);

  bool is_zero() const { return terms.empty(); }
  int total_degree() const;
  Elem coeff(const Monomial& m) const;
  Elem constant_term() const { return coeff(Monomial::one()); }
  // leading term w.r.t. a monomial order
  std::pair<Monomial, Elem> lead(MonoOrder o = MonoOrder::DegRevLex) const;
  // terms printed in descending degrevlex
  std::string to_string(const std::vector<std::string>& vars) const;
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.nvars == b.nvars && a.terms == b.terms; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }
};

namespace mpoly {
template <class F>
MPoly<F> add(const MPoly<F>& a, const MPoly<F>& b);
template <class F>
MPoly<F> sub(const MPoly<F>& a, const MPoly<F>& b);
template <class F>
MPoly<F> neg(const MPoly<F>& a);
template <class F>
MPoly<F> scale(const MPoly<F>& a, const typename F::Elem& c);
template <class F>
MPoly<F> mul_term(const MPoly<F>& a, const Monomial& m, const typename F::Elem& c);
template <class F>
MPoly<F> mul(const MPoly<F>& a, const MPoly<F>& b);
template <class F>
MPoly<F> pow(const MPoly<F>& a, unsigned e);
// value at a point of an extension K, coefficients mapped through emb
template <class F>
typename F::Elem eval(const MPoly<F>& a, const Embedding<F>& emb, const std::vector<typename F::Elem>& xi);
// coefficients mapped through a field embedding
template <class F>
MPoly<F> map_coefficients(const MPoly<F>& a, const Embedding<F>& emb);
}  // namespace mpoly

// element of F[x]^k
template <class F>
struct ModVector {
  using Elem = typename F::Elem;
  F field;
  std::size_t nvars = 0;
  std::vector<MPoly<F>> comps;

  ModVector() = default;
  ModVector(F f, std::size_t n, std::size_t k) : field(f), nvars(n), comps(k, MPoly<F>(f, n)) {}
  static ModVector unit(const F& f, std::size_t n, std::size_t k, std::size_t c);
  static ModVector from_term(const F& f, std::size_t n, std::size_t k, const Term& t, const Elem& c);
  std::size_t rank() const { return comps.size(); }
  bool is_zero() const;
  std::string to_string(const std::vector<std::string>& vars) const;
  friend bool operator==(const ModVector& a, const ModVector& b) { return a.comps == b.comps; }
  friend bool operator!=(const ModVector& a, const ModVector& b) { return !(a == b); }
};

namespace modvec {
template <class F>
ModVector<F> add(const ModVector<F>& a, const ModVector<F>& b);
template <class F>
ModVector<F> sub(const ModVector<F>& a, const ModVector<F>& b);
template <class F>
ModVector<F> scale(const ModVector<F>& a, const MPoly<F>& r);
template <class F>
ModVector<F> scale(const ModVector<F>& a, const typename F::Elem& c);
template <class F>
ModVector<F> concat(const ModVector<F>& a, const ModVector<F>& b);
template <class F>
ModVector<F> slice(const ModVector<F>& a, std::size_t from, std::size_t count);
// constant matrix (rows x k) applied to a vector of rank k
template <class F>
ModVector<F> apply_matrix(const Matrix<F>& m, const ModVector<F>& a);
}  // namespace modvec

struct GbOptions {
  int degree_budget = 40;
};

template <class F>
class Submodule {
 public:
  using Elem = typename F::Elem;

  Submodule() = default;
  // Buchberger; the basis is reduced, monic and sorted by ascending leading term.
  static Submodule generate(const F& field, std::size_t nvars, std::size_t rank, std::vector<ModVector<F>> gens,
                            ModuleOrder order = {}, GbOptions opt = {});
  static Submodule zero(const F& field, std::size_t nvars, std::size_t rank, ModuleOrder order = {});
  static Submodule full(const F& field, std::size_t nvars, std::size_t rank, ModuleOrder order = {});
  // basis known to be a reduced Groebner basis already (Buchberger-Moeller output)
  static Submodule from_reduced_basis(const F& field, std::size_t nvars, std::size_t rank,
                                      std::vector<ModVector<F>> basis, ModuleOrder order);

  const F& field() const { return d_->field; }
  std::size_t nvars() const { return d_->nvars; }
  std::size_t rank() const { return d_->rank; }
  const ModuleOrder& order() const { return d_->order; }
  const std::vector<ModVector<F>>& generators() const { return d_->gens; }
  const std::vector<ModVector<F>>& basis() const { return d_->basis; }
  std::vector<Term> leading_terms() const;

  ModVector<F> normal_form(const ModVector<F>& v) const;
  bool contains(const ModVector<F>& v) const { return normal_form(v).is_zero(); }
  bool contains_submodule(const Submodule& o) const;
  bool is_zero() const { return d_->basis.empty(); }
  bool is_full() const;
  // same order: reduced bases coincide
  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.rank() == b.rank() && a.order() == b.order() && a.basis() == b.basis();
  }
  friend bool operator!=(const Submodule& a, const Submodule& b) { return !(a == b); }

  struct Impl;

 private:
  struct Data {
    F field;
    std::size_t nvars = 0, rank = 0;
    ModuleOrder order;
    std::vector<ModVector<F>> gens, basis;
    std::shared_ptr<const Impl> impl;
  };
  std::shared_ptr<const Data> d_;
  static Submodule build(const F& field, std::size_t nvars, std::size_t rank, std::vector<ModVector<F>> gens,
                         std::vector<ModVector<F>> basis, ModuleOrder order);
};

// all S-pair normal forms vanish (Buchberger criterion), checked from scratch
template <class F>
bool satisfies_buchberger_criterion(const Submodule<F>& s);

template <class F>
Submodule<F> sum_submodules(const Submodule<F>& a, const Submodule<F>& b);
template <class F>
Submodule<F> intersect_submodules(const Submodule<F>& a, const Submodule<F>& b);
// image under a constant matrix (rows x rank)
template <class F>
Submodule<F> image_submodule(const Matrix<F>& m, const Submodule<F>& s);
// {v : m v in s}, m constant (s.rank() x cols)
template <class F>
Submodule<F> preimage_submodule(const Matrix<F>& m, const Submodule<F>& s);

// An R-linear map R^rank -> F^dim where x_l acts on the target by action[l];
// images[c] is the image of the unit vector e_c.
template <class F>
struct LinearModuleMap {
  std::size_t rank = 0, nvars = 0, dim = 0;
  std::vector<Vec<F>> images;
  std::vector<Matrix<F>> action;
};

// Kernel of the map by the Buchberger-Moeller walk over terms; reduced basis.
template <class F>
Submodule<F> kernel_submodule(const F& field, const LinearModuleMap<F>& map, ModuleOrder order = {});

template <class F>
struct ZeroDimInfo {
  bool zero_dimensional = false;
  std::size_t codim = 0;                 // dim of F[x]^k / S when finite
  std::uint64_t degree_bound = 0;        // every point lies in the degree-D extension
  std::vector<Term> standard_terms;
  std::vector<Matrix<F>> multiplication;  // x_l on the standard basis
};

template <class F>
ZeroDimInfo<F> zero_dim_info(const Submodule<F>& s);

template <class F>
struct PointSet {
  F ext;                          // field containing all points
  Embedding<F> embedding;         // base -> ext
  std::uint64_t ext_degree = 1;
  std::vector<std::vector<typename F::Elem>> points;
  std::vector<std::uint64_t> degrees;  // degree of the field each point generates over the base
};

// Support of F[x]^k / S: the points where the annihilator of the quotient vanishes.
PointSet<FiniteField> enumerate_points(const Submodule<FiniteField>& s, std::uint64_t dmax);

}  // namespace nullsatz
