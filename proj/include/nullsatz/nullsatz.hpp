#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nullsatz/leftideal.hpp"

namespace nullsatz {

// Rows of theta_j(I): the E_j[x]-submodule N_j of E_j[x]^k with theta_j(I) = {matrices with rows in N_j}.
Submodule<FiniteField> morita_rows(const LeftIdeal<FiniteField>& i, std::size_t factor);

struct FactorIdeal {
  std::size_t factor = 0;
  Submodule<FiniteField> rows;          // N_j
  Submodule<FiniteField> radical_rows;  // rows of theta_j(rad I)
  std::uint64_t degree_bound = 0;       // points of N_j live in the degree-D extension of E_j; 0 if N_j is full
  std::size_t points = 0;
};

struct RadicalResult {
  LeftIdeal<FiniteField> input;
  LeftIdeal<FiniteField> radical;
  std::vector<DirectionalPoint<FiniteField>> certificate;
  std::vector<FactorIdeal> factors;
  std::uint64_t dmax = 0;
  bool semiprime_verified = false;  // exhaustive semiprime check ran and passed
};

struct PipelineOptions {
  std::optional<std::uint64_t> dmax;  // default: the largest degree bound over the factors
  bool verify = true;
  std::uint64_t exhaustion_limit = 1ULL << 20;
  Exec exec = Exec::Parallel;
};

// rad(I) over a finite base field. Errors: NotZeroDimensional, DegreeBoundTooSmall, InfiniteBaseField.
RadicalResult rad_pipeline(const LeftIdeal<FiniteField>& i, const PipelineOptions& opt = {});

// Brute force over all points xi of the degree-needed extensions of every factor centre, intersecting
// directional ideals through module intersections. dmax defaults to the needed degree.
LeftIdeal<FiniteField> geometric_oracle(const LeftIdeal<FiniteField>& i, std::optional<std::uint64_t> dmax = {},
                                        Exec exec = Exec::Parallel);
// largest extension degree (over a factor centre) the oracle will scan
std::uint64_t oracle_degree_bound(const LeftIdeal<FiniteField>& i);

struct FiniteCodimResult {
  bool finite = false;
  std::size_t codim = 0;        // dim_F A[x]/m when finite
  bool center_maximal = false;  // m ∩ F[x] is a maximal ideal of F[x]
  bool ok() const { return finite && center_maximal; }
};

template <class F>
FiniteCodimResult finite_codim_check(const LeftIdeal<F>& m);

// m ∩ F[x], as an ideal of F[x]
template <class F>
Submodule<F> central_part(const LeftIdeal<F>& m);

// A = M_k(E) (radical zero, one factor). J is an ideal of E[x] (rank 1 over the factor centre).
LeftIdeal<FiniteField> ideal_from_center(const FinDimAlgebra<FiniteField>& a, const Submodule<FiniteField>& j);
Submodule<FiniteField> center_from_ideal(const LeftIdeal<FiniteField>& i);

struct Sqrt2Report {
  bool theta_standard = false;      // the splitting map of M2(Q) is the identity
  bool contained = false;           // J_{0,v} ⊆ J_{0,u}
  bool strict = false;              // witness in J_{0,u} outside J_{0,v}
  bool proper = false;              // J_{0,u} is not the whole ring
  bool vanishing_in_both = false;   // a with a(0) = 0 lies in both
  bool u_maximal = false;           // A[x]/J_{0,u} is simple
  std::string witness;
  std::size_t codim_u = 0, codim_v = 0;
  bool ok() const { return theta_standard && contained && strict && proper && vanishing_in_both && u_maximal; }
};

// M2(Q), xi = 0, v = (1, sqrt 2) over Q(sqrt 2), u = (1, 0): J_{0,v} is strictly inside J_{0,u}.
Sqrt2Report nonmaximal_directional_demo(std::size_t nvars = 1);

}  // namespace nullsatz
