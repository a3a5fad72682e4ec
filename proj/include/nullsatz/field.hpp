#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "nullsatz/errors.hpp"

namespace nullsatz {

namespace detail {

struct FiniteFieldData {
  std::uint32_t p = 2;
  int m = 1;
  std::uint64_t q = 2;
  std::vector<std::uint32_t> modulus;  // monic, low to high, length m + 1
  std::string var = "t";
  std::vector<std::uint32_t> pow_p;    // p^i for the digit code
  // Zech-log tables, only when m > 1
  std::vector<std::uint32_t> exp;
  std::vector<std::uint32_t> log;
  std::vector<std::uint32_t> zech;
  std::uint32_t half = 0;  // log of -1
};

inline constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;

}  // namespace detail

// F_p or F_p[t]/(f); elements are digit codes sum c_i p^i.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  FiniteField();
  static FiniteField prime(std::int64_t p);
  static FiniteField extension(std::int64_t p, const std::vector<std::int64_t>& modulus,
                               std::string var = "t");
  // Extension of `base` by a polynomial with coefficients in `base`. Only a prime base is
  // accepted; towers above are flattened internally through `extend`.
  static FiniteField make_extension(const FiniteField& base, std::string var,
                                    const std::vector<Elem>& minpoly);

  std::uint32_t characteristic() const { return d_->p; }
  int degree() const { return d_->m; }
  std::uint64_t size() const { return d_->q; }
  bool is_prime_field() const { return d_->m == 1; }
  bool is_finite() const { return true; }
  const std::string& var() const { return d_->var; }
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }
  FiniteField prime_field() const { return is_prime_field() ? *this : prime(d_->p); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const {
    std::int64_t p = d_->p;
    std::int64_t r = v % p;
    return static_cast<Elem>(r < 0 ? r + p : r);
  }
  Elem from_rational(const mpq_class& v) const;
  Elem generator() const;

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    const auto& d = *d_;
    if (d.m == 1) {
      std::uint64_t s = std::uint64_t(a) + b;
      return static_cast<Elem>(s >= d.p ? s - d.p : s);
    }
    if (a == 0) return b;
    if (b == 0) return a;
    std::uint32_t q1 = static_cast<std::uint32_t>(d.q - 1);
    std::uint32_t la = d.log[a], lb = d.log[b];
    std::uint32_t diff = lb >= la ? lb - la : lb + q1 - la;
    std::uint32_t z = d.zech[diff];
    if (z == detail::kNoLog) return 0;
    std::uint32_t e = la + z;
    if (e >= q1) e -= q1;
    return d.exp[e];
  }
  Elem neg(Elem a) const {
    const auto& d = *d_;
    if (a == 0) return 0;
    if (d.m == 1) return d.p - a;
    if (d.p == 2) return a;
    std::uint32_t q1 = static_cast<std::uint32_t>(d.q - 1);
    std::uint32_t e = d.log[a] + d.half;
    if (e >= q1) e -= q1;
    return d.exp[e];
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    const auto& d = *d_;
    if (d.m == 1) return static_cast<Elem>(std::uint64_t(a) * b % d.p);
    if (a == 0 || b == 0) return 0;
    std::uint32_t q1 = static_cast<std::uint32_t>(d.q - 1);
    std::uint32_t e = d.log[a] + d.log[b];
    if (e >= q1) e -= q1;
    return d.exp[e];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frobenius(Elem a) const { return pow(a, d_->p); }

  std::vector<Elem> to_prime(Elem a) const;
  Elem from_prime(std::span<const Elem> coords) const;
  Elem embed_prime(Elem c) const { return c; }
  Elem random(std::mt19937_64& rng) const;
  Elem from_code(std::uint64_t code) const { return static_cast<Elem>(code); }
  std::uint64_t code(Elem a) const { return a; }
  std::string to_string(Elem a) const;

  bool operator==(const FiniteField& other) const;
  bool operator!=(const FiniteField& other) const { return !(*this == other); }

 private:
  explicit FiniteField(std::shared_ptr<const detail::FiniteFieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FiniteFieldData> d_;
};

// Element of Q[t]/(f) as a coordinate vector (length = degree).
struct QElem {
  std::vector<mpq_class> c;
  friend bool operator==(const QElem& a, const QElem& b) { return a.c == b.c; }
  friend bool operator!=(const QElem& a, const QElem& b) { return !(a == b); }
};

namespace detail {
struct NumberFieldData {
  int m = 1;
  std::vector<mpq_class> modulus;  // monic, length m + 1
  std::string var = "t";
};
}  // namespace detail

class NumberField {
 public:
  using Elem = QElem;

  NumberField();
  static NumberField rationals();
  static NumberField extension(const std::vector<mpq_class>& modulus, std::string var = "t");
  static NumberField make_extension(const NumberField& base, std::string var,
                                    const std::vector<Elem>& minpoly);

  std::uint32_t characteristic() const { return 0; }
  int degree() const { return d_->m; }
  std::uint64_t size() const { return 0; }
  bool is_prime_field() const { return d_->m == 1; }
  bool is_finite() const { return false; }
  const std::string& var() const { return d_->var; }
  const std::vector<mpq_class>& modulus() const { return d_->modulus; }
  NumberField prime_field() const { return is_prime_field() ? *this : rationals(); }

  Elem zero() const { return QElem{std::vector<mpq_class>(d_->m)}; }
  Elem one() const { return from_int(1); }
  Elem from_int(std::int64_t v) const;
  Elem from_rational(const mpq_class& v) const;
  Elem generator() const;

  bool is_zero(const Elem& a) const;
  bool is_one(const Elem& a) const;
  bool eq(const Elem& a, const Elem& b) const { return a.c == b.c; }

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(const Elem& a, std::uint64_t e) const;

  std::vector<Elem> to_prime(const Elem& a) const;
  Elem from_prime(std::span<const Elem> coords) const;
  Elem embed_prime(const Elem& c) const;
  Elem random(std::mt19937_64& rng) const;
  std::string to_string(const Elem& a) const;

  bool operator==(const NumberField& other) const;
  bool operator!=(const NumberField& other) const { return !(*this == other); }

 private:
  explicit NumberField(std::shared_ptr<const detail::NumberFieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::NumberFieldData> d_;
};

template <class F>
inline constexpr bool is_finite_field_v = std::is_same_v<F, FiniteField>;

// Field embedding source -> target fixed by the image of the source generator.
template <class F>
class Embedding {
 public:
  using Elem = typename F::Elem;

  Embedding() = default;
  Embedding(F source, F target, Elem generator_image);
  static Embedding identity(const F& field);
  static Embedding from_prime(const F& target);

  Elem operator()(const Elem& x) const;
  const F& source() const { return source_; }
  const F& target() const { return target_; }
  const Elem& generator_image() const { return gen_; }

 private:
  F source_;
  F target_;
  Elem gen_{};
  std::vector<Elem> powers_;
  std::shared_ptr<const std::vector<Elem>> table_;
};

extern template class Embedding<FiniteField>;
extern template class Embedding<NumberField>;

// Degree-e extension K of a finite field E together with the embedding E -> K.
// K is represented absolutely over F_p; the choice is deterministic.
std::pair<FiniteField, Embedding<FiniteField>> extend(const FiniteField& base, int e);

bool is_prime_number(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Monic irreducible polynomial of the given degree over F_p (first in code order).
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, int degree);

namespace detail {
// A nontrivial monic factor of an integer-content rational polynomial, or nullopt when
// irreducible. Degree <= 7 only (factors up to degree 3 are searched).
std::optional<std::vector<mpq_class>> rational_factor(const std::vector<mpq_class>& f);
}  // namespace detail

}  // namespace nullsatz
