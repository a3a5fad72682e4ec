#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace nullsatz {

// Element of Q<x, y>/(yx - xy - 1), stored as sum c_ij x^i y^j (x left of y).
class WeylElem {
 public:
  using Key = std::pair<unsigned, unsigned>;  // (i, j) for x^i y^j

  WeylElem() = default;
  static WeylElem constant(const mpq_class& c);
  static WeylElem monomial(unsigned i, unsigned j, const mpq_class& c = 1);
  static WeylElem x() { return monomial(1, 0); }
  static WeylElem y() { return monomial(0, 1); }
  static WeylElem one() { return constant(1); }

  const std::map<Key, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpq_class coeff(unsigned i, unsigned j) const;
  // Bernstein degree max(i + j); -1 for zero
  int degree() const;
  unsigned x_degree() const;
  unsigned y_degree() const;
  std::string to_string() const;

  void add_term(unsigned i, unsigned j, const mpq_class& c);

  friend bool operator==(const WeylElem& a, const WeylElem& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const WeylElem& a, const WeylElem& b) { return !(a == b); }

 private:
  std::map<Key, mpq_class> terms_;
};

namespace weyl {
WeylElem add(const WeylElem& a, const WeylElem& b);
WeylElem sub(const WeylElem& a, const WeylElem& b);
WeylElem scale(const WeylElem& a, const mpq_class& c);
WeylElem mul(const WeylElem& a, const WeylElem& b);
WeylElem pow(const WeylElem& a, unsigned e);
// ab - ba
WeylElem commutator(const WeylElem& a, const WeylElem& b);
// random element with x-degree <= dx, y-degree <= dy, small integer coefficients
WeylElem random(std::mt19937_64& rng, unsigned dx, unsigned dy, int density_percent = 50);
// sum a_i(x) y^i with each a_i of degree <= d and i <= d
WeylElem random_r(std::mt19937_64& rng, unsigned d);
// x-derivative of each coefficient, n times
WeylElem x_derivative(const WeylElem& a, unsigned n = 1);
}  // namespace weyl

// Polynomials in t, low to high, trailing zeros stripped.
using QPoly = std::vector<mpq_class>;

// x acts as multiplication by t, y as d/dt.
QPoly poly_rep_apply(const WeylElem& a, const QPoly& p);

struct IdentityLine {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string witness;  // first failing instance
};

struct NonMembership {
  bool refuted = false;          // no s of Bernstein degree <= bound has s*(yx) = x
  std::size_t bound = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t system_rank = 0;
  std::size_t augmented_rank = 0;
  bool degree_additive = false;  // deg(s*(yx)) = deg(s) + 2 on sampled s
  std::size_t samples = 0;
};

struct WeylReport {
  std::vector<IdentityLine> identities;
  NonMembership membership;
  bool ok() const;
};

struct WeylCheckOptions {
  unsigned max_degree = 8;     // k, n range and bidegree of random r
  std::size_t random_r = 200;
  std::uint64_t seed = 0;
};

// Identities (i)-(iv) plus the refutation of x in A*(yx). Never throws; failures are reported per line.
WeylReport certificate_check(const WeylCheckOptions& opt = {});
// Throws IdentityFailed naming the first failing line.
void require_certificate(const WeylReport& r);

NonMembership refute_x_in_left_ideal_of_yx(std::size_t bound, std::mt19937_64& rng, std::size_t samples = 50);

struct SimplicityProbe {
  bool reached_one = false;  // false means inconclusive under the budget
  std::size_t steps = 0;
};

// Commutators with x and y stay in the two-sided ideal of a; drive a down to a nonzero constant.
SimplicityProbe simplicity_probe(const WeylElem& a, std::size_t step_budget);

}  // namespace nullsatz
