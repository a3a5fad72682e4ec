#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nullsatz/errors.hpp"
#include "nullsatz/field.hpp"

namespace nullsatz {

// Dense univariate polynomial, coefficients low to high, no trailing zeros.
template <class F>
struct UPoly {
  using Elem = typename F::Elem;
  F field;
  std::vector<Elem> c;

  UPoly() = default;
  explicit UPoly(F f) : field(std::move(f)) {}
  UPoly(F f, std::vector<Elem> coeffs) : field(std::move(f)), c(std::move(coeffs)) { trim(); }

  static UPoly constant(const F& f, const Elem& a) { return UPoly(f, {a}); }
  static UPoly x(const F& f) { return UPoly(f, {f.zero(), f.one()}); }
  static UPoly monomial(const F& f, const Elem& a, std::size_t deg) {
    std::vector<Elem> v(deg + 1, f.zero());
    v[deg] = a;
    return UPoly(f, std::move(v));
  }

  void trim() {
    while (!c.empty() && field.is_zero(c.back())) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_one() const { return c.size() == 1 && field.is_one(c[0]); }
  const Elem& lead() const { return c.back(); }
  Elem coeff(std::size_t i) const { return i < c.size() ? c[i] : field.zero(); }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c == b.c; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  std::string to_string(const std::string& var = "x") const {
    if (c.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (field.is_zero(c[i])) continue;
      if (!out.empty()) out += " + ";
      std::string co = field.to_string(c[i]);
      bool paren = co.find_first_of("+ ") != std::string::npos;
      if (i == 0) {
        out += co;
        continue;
      }
      if (!field.is_one(c[i])) out += (paren ? "(" + co + ")" : co) + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }
};

namespace upoly {

template <class F>
UPoly<F> add(const UPoly<F>& a, const UPoly<F>& b) {
  std::vector<typename F::Elem> r(std::max(a.c.size(), b.c.size()), a.field.zero());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.field.add(a.coeff(i), b.coeff(i));
  return UPoly<F>(a.field, std::move(r));
}

template <class F>
UPoly<F> sub(const UPoly<F>& a, const UPoly<F>& b) {
  std::vector<typename F::Elem> r(std::max(a.c.size(), b.c.size()), a.field.zero());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.field.sub(a.coeff(i), b.coeff(i));
  return UPoly<F>(a.field, std::move(r));
}

template <class F>
UPoly<F> scale(const UPoly<F>& a, const typename F::Elem& s) {
  std::vector<typename F::Elem> r(a.c.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.field.mul(a.c[i], s);
  return UPoly<F>(a.field, std::move(r));
}

template <class F>
UPoly<F> mul(const UPoly<F>& a, const UPoly<F>& b) {
  if (a.is_zero() || b.is_zero()) return UPoly<F>(a.field);
  const F& f = a.field;
  std::vector<typename F::Elem> r(a.c.size() + b.c.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (f.is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a.c[i], b.c[j]));
  }
  return UPoly<F>(f, std::move(r));
}

template <class F>
std::pair<UPoly<F>, UPoly<F>> divmod(const UPoly<F>& a, const UPoly<F>& b) {
  const F& f = a.field;
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "fieldcore::poly_divmod", "division by zero polynomial");
  if (a.degree() < b.degree()) return {UPoly<F>(f), a};
  std::vector<typename F::Elem> r = a.c;
  std::vector<typename F::Elem> q(a.c.size() - b.c.size() + 1, f.zero());
  auto linv = f.inv(b.lead());
  for (int i = a.degree(); i >= b.degree(); --i) {
    if (f.is_zero(r[i])) continue;
    auto coef = f.mul(r[i], linv);
    int shift = i - b.degree();
    q[shift] = coef;
    for (int j = 0; j <= b.degree(); ++j) r[shift + j] = f.sub(r[shift + j], f.mul(coef, b.c[j]));
  }
  return {UPoly<F>(f, std::move(q)), UPoly<F>(f, std::move(r))};
}

template <class F>
UPoly<F> mod(const UPoly<F>& a, const UPoly<F>& b) {
  return divmod(a, b).second;
}

template <class F>
UPoly<F> quo(const UPoly<F>& a, const UPoly<F>& b) {
  return divmod(a, b).first;
}

template <class F>
UPoly<F> monic(const UPoly<F>& a) {
  if (a.is_zero()) return a;
  return scale(a, a.field.inv(a.lead()));
}

template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    auto r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Returns (g, s, t) with s a + t b = g monic.
template <class F>
std::tuple<UPoly<F>, UPoly<F>, UPoly<F>> xgcd(const UPoly<F>& a, const UPoly<F>& b) {
  const F& f = a.field;
  UPoly<F> r0 = a, r1 = b;
  UPoly<F> s0 = UPoly<F>::constant(f, f.one()), s1(f);
  UPoly<F> t0(f), t1 = UPoly<F>::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = sub(s0, mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = sub(t0, mul(q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  auto li = f.inv(r0.lead());
  return {scale(r0, li), scale(s0, li), scale(t0, li)};
}

template <class F>
UPoly<F> derivative(const UPoly<F>& a) {
  const F& f = a.field;
  if (a.c.size() <= 1) return UPoly<F>(f);
  std::vector<typename F::Elem> r(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) r[i - 1] = f.mul(a.c[i], f.from_int(static_cast<std::int64_t>(i)));
  return UPoly<F>(f, std::move(r));
}

template <class F>
typename F::Elem eval(const UPoly<F>& a, const typename F::Elem& x) {
  const F& f = a.field;
  auto r = f.zero();
  for (int i = a.degree(); i >= 0; --i) r = f.add(f.mul(r, x), a.c[i]);
  return r;
}

template <class F>
UPoly<F> mulmod(const UPoly<F>& a, const UPoly<F>& b, const UPoly<F>& m) {
  return mod(mul(a, b), m);
}

template <class F>
UPoly<F> powmod(UPoly<F> base, std::uint64_t e, const UPoly<F>& m) {
  const F& f = base.field;
  UPoly<F> r = mod(UPoly<F>::constant(f, f.one()), m);
  base = mod(base, m);
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, m);
    e >>= 1;
    if (e) base = mulmod(base, base, m);
  }
  return r;
}

// Evaluates polynomial p at a polynomial argument modulo m.
template <class F>
UPoly<F> compose_mod(const UPoly<F>& p, const UPoly<F>& arg, const UPoly<F>& m) {
  UPoly<F> r(p.field);
  for (int i = p.degree(); i >= 0; --i) r = add(mulmod(r, arg, m), UPoly<F>::constant(p.field, p.c[i]));
  return mod(r, m);
}

// ---- finite fields ------------------------------------------------------

// x^(q^i) mod f for i = 1.. computed by repeated q-th powers.
inline UPoly<FiniteField> frobenius_step(const UPoly<FiniteField>& h, const UPoly<FiniteField>& f) {
  return powmod(h, h.field.size(), f);
}

inline bool is_irreducible(const UPoly<FiniteField>& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const auto& F = f.field;
  auto x = UPoly<FiniteField>::x(F);
  auto h = mod(x, f);
  for (int i = 1; 2 * i <= f.degree(); ++i) {
    h = frobenius_step(h, f);
    auto g = gcd(sub(h, x), f);
    if (g.degree() > 0) return false;
  }
  return true;
}

inline UPoly<FiniteField> pth_root(const UPoly<FiniteField>& a) {
  const auto& F = a.field;
  std::uint32_t p = F.characteristic();
  std::uint64_t e = F.size() / p;  // a^(q/p) is the p-th root in F_q
  std::vector<FiniteField::Elem> r(a.c.size() / p + 1, 0);
  for (std::size_t i = 0; i < a.c.size(); i += p) r[i / p] = F.pow(a.c[i], e);
  return UPoly<FiniteField>(F, std::move(r));
}

// Square-free decomposition: list of (factor, multiplicity), factors pairwise coprime.
inline std::vector<std::pair<UPoly<FiniteField>, int>> squarefree_decomposition(const UPoly<FiniteField>& f0) {
  std::vector<std::pair<UPoly<FiniteField>, int>> out;
  auto f = monic(f0);
  if (f.degree() < 1) return out;
  const auto& F = f.field;
  int p = static_cast<int>(F.characteristic());
  auto c = gcd(f, derivative(f));
  auto w = quo(f, c);
  int i = 1;
  while (w.degree() > 0) {
    auto y = gcd(w, c);
    auto z = quo(w, y);
    if (z.degree() > 0) out.push_back({z, i});
    ++i;
    w = y;
    c = quo(c, y);
  }
  if (c.degree() > 0) {
    auto root = pth_root(c);
    for (auto& [g, m] : squarefree_decomposition(root)) out.push_back({g, m * p});
  }
  return out;
}

// Distinct-degree factorization of a monic squarefree polynomial: (product, degree).
inline std::vector<std::pair<UPoly<FiniteField>, int>> distinct_degree(UPoly<FiniteField> f) {
  std::vector<std::pair<UPoly<FiniteField>, int>> out;
  const auto& F = f.field;
  auto x = UPoly<FiniteField>::x(F);
  auto h = mod(x, f);
  int i = 1;
  while (f.degree() >= 2 * i) {
    h = frobenius_step(h, f);
    auto g = gcd(sub(h, x), f);
    if (g.degree() > 0) {
      out.push_back({g, i});
      f = quo(f, g);
      h = mod(h, f);
    }
    ++i;
  }
  if (f.degree() > 0) out.push_back({f, f.degree()});
  return out;
}

// Splits a product of distinct irreducibles of degree d (Cantor-Zassenhaus).
inline void equal_degree(const UPoly<FiniteField>& f, int d, std::mt19937_64& rng,
                         std::vector<UPoly<FiniteField>>& out) {
  if (f.degree() == d) {
    out.push_back(monic(f));
    return;
  }
  const auto& F = f.field;
  std::uint64_t q = F.size();
  for (;;) {
    std::vector<FiniteField::Elem> cs(f.degree());
    for (auto& e : cs) e = F.random(rng);
    UPoly<FiniteField> a(F, cs);
    if (a.degree() < 1) continue;
    UPoly<FiniteField> b(F);
    if (F.characteristic() == 2) {
      // trace to F_2 over F_(q^d)
      int steps = F.degree() * d;
      auto t = mod(a, f);
      auto acc = t;
      for (int s = 1; s < steps; ++s) {
        t = mulmod(t, t, f);
        acc = add(acc, t);
      }
      b = acc;
    } else {
      // a^((q^d - 1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
      auto ai = mod(a, f);
      auto prod = ai;
      for (int s = 1; s < d; ++s) {
        ai = powmod(ai, q, f);
        prod = mulmod(prod, ai, f);
      }
      b = sub(powmod(prod, (q - 1) / 2, f), UPoly<FiniteField>::constant(F, F.one()));
    }
    auto g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(quo(f, g), d, rng, out);
      return;
    }
  }
}

inline bool upoly_less(const UPoly<FiniteField>& a, const UPoly<FiniteField>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  return false;
}

// Full factorization into monic irreducibles with multiplicity, sorted.
inline std::vector<std::pair<UPoly<FiniteField>, int>> factor(const UPoly<FiniteField>& f) {
  std::vector<std::pair<UPoly<FiniteField>, int>> out;
  std::mt19937_64 rng(0x5eed5eedULL);
  for (auto& [sq, mult] : squarefree_decomposition(f)) {
    for (auto& [g, d] : distinct_degree(sq)) {
      std::vector<UPoly<FiniteField>> parts;
      equal_degree(g, d, rng, parts);
      for (auto& part : parts) out.push_back({part, mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (upoly_less(a.first, b.first)) return true;
    if (upoly_less(b.first, a.first)) return false;
    return a.second < b.second;
  });
  return out;
}

// Distinct roots in the coefficient field, sorted by code.
inline std::vector<FiniteField::Elem> roots(const UPoly<FiniteField>& f) {
  std::vector<FiniteField::Elem> out;
  if (f.degree() < 1) return out;
  const auto& F = f.field;
  auto fm = monic(f);
  auto x = UPoly<FiniteField>::x(F);
  auto g = gcd(sub(frobenius_step(mod(x, fm), fm), x), fm);
  if (g.degree() < 1) return out;
  std::vector<UPoly<FiniteField>> lin;
  std::mt19937_64 rng(0x900dULL);
  equal_degree(g, 1, rng, lin);
  for (auto& l : lin) out.push_back(F.neg(l.c[0]));
  std::sort(out.begin(), out.end());
  return out;
}

// ---- rationals ------------------------------------------------------------

// Factorization over Q (degree <= 7 per squarefree part), monic factors.
std::vector<std::pair<UPoly<NumberField>, int>> factor_rational(const UPoly<NumberField>& f);

inline std::vector<std::pair<UPoly<NumberField>, int>> factor(const UPoly<NumberField>& f) {
  if (!f.field.is_prime_field())
    fail(ErrorKind::NotSupported, "fieldcore::factor", "factorization over number fields other than Q");
  return factor_rational(f);
}

}  // namespace upoly
}  // namespace nullsatz
