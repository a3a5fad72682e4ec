#include "nullsatz/field.hpp"

#include <algorithm>
#include <sstream>

#include "nullsatz/upoly.hpp"

namespace nullsatz {

namespace {

constexpr std::uint64_t kMaxTableSize = 1ULL << 22;

using Digits = std::vector<std::uint32_t>;

// product of digit polynomials reduced modulo a monic modulus over F_p
Digits mulmod_digits(const Digits& a, const Digits& b, const Digits& mod, std::uint32_t p) {
  std::size_t m = mod.size() - 1;
  std::vector<std::uint64_t> r(2 * m - 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < m; ++j) r[i + j] = (r[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  }
  for (std::size_t i = 2 * m - 2; i >= m; --i) {
    std::uint64_t c = r[i];
    if (!c) continue;
    for (std::size_t j = 0; j < m; ++j) r[i - m + j] = (r[i - m + j] + (p - c) * mod[j]) % p;
    r[i] = 0;
  }
  Digits out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(r[i]);
  return out;
}

Digits pow_digits(Digits base, std::uint64_t e, const Digits& mod, std::uint32_t p) {
  Digits r(mod.size() - 1, 0);
  r[0] = 1;
  while (e) {
    if (e & 1) r = mulmod_digits(r, base, mod, p);
    e >>= 1;
    if (e) base = mulmod_digits(base, base, mod, p);
  }
  return r;
}

std::uint64_t digits_code(const Digits& d, std::uint32_t p) {
  std::uint64_t c = 0;
  for (std::size_t i = d.size(); i-- > 0;) c = c * p + d[i];
  return c;
}

Digits code_digits(std::uint64_t c, std::uint32_t p, std::size_t m) {
  Digits d(m);
  for (std::size_t i = 0; i < m; ++i) {
    d[i] = static_cast<std::uint32_t>(c % p);
    c /= p;
  }
  return d;
}

}  // namespace

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// ---------------------------------------------------------------------------
// FiniteField

FiniteField::FiniteField() : FiniteField(prime(2)) {}

FiniteField FiniteField::prime(std::int64_t p) {
  if (p < 2 || p >= (1LL << 31) || !is_prime_number(static_cast<std::uint64_t>(p)))
    fail(ErrorKind::InvalidArgument, "fieldcore::make_field", "characteristic " + std::to_string(p) + " is not a prime below 2^31");
  auto d = std::make_shared<detail::FiniteFieldData>();
  d->p = static_cast<std::uint32_t>(p);
  d->m = 1;
  d->q = d->p;
  d->modulus = {0, 1};
  d->pow_p = {1};
  return FiniteField(std::move(d));
}

FiniteField FiniteField::extension(std::int64_t p, const std::vector<std::int64_t>& modulus, std::string var) {
  FiniteField base = prime(p);
  std::vector<Elem> mod;
  for (auto c : modulus) mod.push_back(base.from_int(c));
  while (!mod.empty() && mod.back() == 0) mod.pop_back();
  if (mod.size() < 2) fail(ErrorKind::InvalidArgument, "fieldcore::make_extension", "minimal polynomial must have degree >= 1");
  if (mod.back() != 1) fail(ErrorKind::NotMonic, "fieldcore::make_extension", "minimal polynomial is not monic");
  if (!upoly::is_irreducible(UPoly<FiniteField>(base, mod)))
    fail(ErrorKind::NotIrreducible, "fieldcore::make_extension",
         UPoly<FiniteField>(base, mod).to_string(var) + " is reducible over F_" + std::to_string(p));
  if (mod.size() == 2) return base;
  auto d = std::make_shared<detail::FiniteFieldData>();
  d->p = base.characteristic();
  d->m = static_cast<int>(mod.size() - 1);
  std::uint64_t q = 1;
  for (int i = 0; i < d->m; ++i) {
    d->pow_p.push_back(static_cast<std::uint32_t>(q));
    q *= d->p;
    if (q > kMaxTableSize)
      fail(ErrorKind::NotSupported, "fieldcore::make_extension", "field size exceeds 2^22");
  }
  d->q = q;
  d->modulus = mod;
  d->var = std::move(var);
  std::uint32_t q1 = static_cast<std::uint32_t>(q - 1);
  auto qf = prime_factors(q1);
  std::size_t m = static_cast<std::size_t>(d->m);
  Digits gen;
  for (std::uint64_t c = 2; c < q; ++c) {
    Digits g = code_digits(c, d->p, m);
    bool primitive = true;
    for (auto r : qf) {
      auto t = pow_digits(g, q1 / r, mod, d->p);
      if (digits_code(t, d->p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = g;
      break;
    }
  }
  d->exp.assign(q1, 0);
  d->log.assign(q, detail::kNoLog);
  Digits cur(m, 0);
  cur[0] = 1;
  for (std::uint32_t i = 0; i < q1; ++i) {
    auto code = static_cast<std::uint32_t>(digits_code(cur, d->p));
    d->exp[i] = code;
    d->log[code] = i;
    cur = mulmod_digits(cur, gen, mod, d->p);
  }
  d->zech.assign(q1, detail::kNoLog);
  for (std::uint32_t i = 0; i < q1; ++i) {
    std::uint32_t c = d->exp[i];
    std::uint32_t d0 = c % d->p;
    std::uint32_t c1 = c - d0 + (d0 + 1) % d->p;
    d->zech[i] = c1 == 0 ? detail::kNoLog : d->log[c1];
  }
  d->half = d->p == 2 ? 0 : q1 / 2;
  return FiniteField(std::move(d));
}

FiniteField FiniteField::make_extension(const FiniteField& base, std::string var, const std::vector<Elem>& minpoly) {
  if (!base.is_prime_field())
    fail(ErrorKind::NotSupported, "fieldcore::make_extension", "towers of height > 2 are not supported");
  std::vector<std::int64_t> m(minpoly.begin(), minpoly.end());
  return extension(base.characteristic(), m, std::move(var));
}

FiniteField::Elem FiniteField::from_rational(const mpq_class& v) const {
  mpz_class p = d_->p;
  mpz_class num = v.get_num() % p, den = v.get_den() % p;
  if (num < 0) num += p;
  if (den < 0) den += p;
  if (den == 0) fail(ErrorKind::DivisionByZero, "fieldcore::from_rational", "denominator divisible by the characteristic");
  return mul(static_cast<Elem>(num.get_ui()), inv(static_cast<Elem>(den.get_ui())));
}

FiniteField::Elem FiniteField::generator() const { return d_->m == 1 ? 1 : d_->p; }

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) fail(ErrorKind::DivisionByZero, "fieldcore::inv", "inverse of zero");
  if (d_->m == 1) return pow(a, d_->p - 2);
  std::uint32_t q1 = static_cast<std::uint32_t>(d_->q - 1);
  std::uint32_t l = d_->log[a];
  return d_->exp[l == 0 ? 0 : q1 - l];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (d_->m > 1) {
    std::uint64_t q1 = d_->q - 1;
    return d_->exp[(std::uint64_t(d_->log[a]) * (e % q1)) % q1];
  }
  Elem r = 1, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

std::vector<FiniteField::Elem> FiniteField::to_prime(Elem a) const {
  return code_digits(a, d_->p, static_cast<std::size_t>(d_->m));
}

FiniteField::Elem FiniteField::from_prime(std::span<const Elem> coords) const {
  if (coords.size() != static_cast<std::size_t>(d_->m))
    fail(ErrorKind::DimensionMismatch, "fieldcore::from_prime", "coordinate count differs from field degree");
  std::uint64_t c = 0;
  for (std::size_t i = coords.size(); i-- > 0;) c = c * d_->p + coords[i] % d_->p;
  return static_cast<Elem>(c);
}

FiniteField::Elem FiniteField::random(std::mt19937_64& rng) const {
  return static_cast<Elem>(std::uniform_int_distribution<std::uint64_t>(0, d_->q - 1)(rng));
}

std::string FiniteField::to_string(Elem a) const {
  if (d_->m == 1) return std::to_string(a);
  auto dg = to_prime(a);
  std::string out;
  for (int i = d_->m - 1; i >= 0; --i) {
    if (!dg[i]) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(dg[i]);
      continue;
    }
    if (dg[i] != 1) out += std::to_string(dg[i]) + "*";
    out += d_->var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

bool FiniteField::operator==(const FiniteField& o) const {
  return d_ == o.d_ || (d_->p == o.d_->p && d_->modulus == o.d_->modulus);
}

// ---------------------------------------------------------------------------
// NumberField

NumberField::NumberField() : NumberField(rationals()) {}

NumberField NumberField::rationals() {
  auto d = std::make_shared<detail::NumberFieldData>();
  d->m = 1;
  d->modulus = {0, 1};
  return NumberField(std::move(d));
}

NumberField NumberField::extension(const std::vector<mpq_class>& modulus0, std::string var) {
  std::vector<mpq_class> modulus = modulus0;
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() < 2) fail(ErrorKind::InvalidArgument, "fieldcore::make_extension", "minimal polynomial must have degree >= 1");
  if (modulus.back() != 1) fail(ErrorKind::NotMonic, "fieldcore::make_extension", "minimal polynomial is not monic");
  if (modulus.size() == 2) return rationals();
  if (modulus.size() > 8)
    fail(ErrorKind::NotSupported, "fieldcore::make_extension", "irreducibility over Q is only decided up to degree 7");
  if (detail::rational_factor(modulus))
    fail(ErrorKind::NotIrreducible, "fieldcore::make_extension", "minimal polynomial is reducible over Q");
  auto d = std::make_shared<detail::NumberFieldData>();
  d->m = static_cast<int>(modulus.size() - 1);
  d->modulus = std::move(modulus);
  d->var = std::move(var);
  return NumberField(std::move(d));
}

NumberField NumberField::make_extension(const NumberField& base, std::string var, const std::vector<Elem>& minpoly) {
  if (!base.is_prime_field())
    fail(ErrorKind::NotSupported, "fieldcore::make_extension", "towers of height > 2 are not supported");
  std::vector<mpq_class> m;
  for (auto& c : minpoly) m.push_back(c.c.at(0));
  return extension(m, std::move(var));
}

QElem NumberField::from_int(std::int64_t v) const {
  QElem r = zero();
  r.c[0] = mpq_class(static_cast<long>(v));
  return r;
}

QElem NumberField::from_rational(const mpq_class& v) const {
  QElem r = zero();
  r.c[0] = v;
  return r;
}

QElem NumberField::generator() const {
  QElem r = zero();
  if (d_->m == 1) r.c[0] = 1;
  else r.c[1] = 1;
  return r;
}

bool NumberField::is_zero(const QElem& a) const {
  for (auto& x : a.c)
    if (x != 0) return false;
  return true;
}

bool NumberField::is_one(const QElem& a) const {
  if (a.c.empty() || a.c[0] != 1) return false;
  for (std::size_t i = 1; i < a.c.size(); ++i)
    if (a.c[i] != 0) return false;
  return true;
}

QElem NumberField::add(const QElem& a, const QElem& b) const {
  QElem r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

QElem NumberField::sub(const QElem& a, const QElem& b) const {
  QElem r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}

QElem NumberField::neg(const QElem& a) const {
  QElem r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

QElem NumberField::mul(const QElem& a, const QElem& b) const {
  int m = d_->m;
  if (m == 1) return QElem{{a.c[0] * b.c[0]}};
  std::vector<mpq_class> r(2 * m - 1);
  for (int i = 0; i < m; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < m; ++j) r[i + j] += a.c[i] * b.c[j];
  }
  for (int i = 2 * m - 2; i >= m; --i) {
    if (r[i] == 0) continue;
    mpq_class c = r[i];
    for (int j = 0; j < m; ++j) r[i - m + j] -= c * d_->modulus[j];
    r[i] = 0;
  }
  r.resize(m);
  return QElem{std::move(r)};
}

QElem NumberField::inv(const QElem& a) const {
  if (is_zero(a)) fail(ErrorKind::DivisionByZero, "fieldcore::inv", "inverse of zero");
  int m = d_->m;
  if (m == 1) return QElem{{1 / a.c[0]}};
  // solve (multiplication by a) * x = 1 by Gauss-Jordan
  std::vector<std::vector<mpq_class>> M(m, std::vector<mpq_class>(m + 1));
  QElem basis = zero();
  for (int j = 0; j < m; ++j) {
    basis = zero();
    basis.c[j] = 1;
    QElem col = mul(a, basis);
    for (int i = 0; i < m; ++i) M[i][j] = col.c[i];
  }
  M[0][m] = 1;
  for (int col = 0; col < m; ++col) {
    int piv = col;
    while (piv < m && M[piv][col] == 0) ++piv;
    if (piv == m) fail(ErrorKind::InternalInconsistency, "fieldcore::inv", "singular multiplication matrix");
    std::swap(M[piv], M[col]);
    mpq_class s = 1 / M[col][col];
    for (auto& x : M[col]) x *= s;
    for (int r = 0; r < m; ++r) {
      if (r == col || M[r][col] == 0) continue;
      mpq_class f = M[r][col];
      for (int k = 0; k <= m; ++k) M[r][k] -= f * M[col][k];
    }
  }
  QElem r = zero();
  for (int i = 0; i < m; ++i) r.c[i] = M[i][m];
  return r;
}

QElem NumberField::pow(const QElem& a, std::uint64_t e) const {
  QElem r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

std::vector<QElem> NumberField::to_prime(const QElem& a) const {
  std::vector<QElem> out;
  for (auto& x : a.c) out.push_back(QElem{{x}});
  return out;
}

QElem NumberField::from_prime(std::span<const QElem> coords) const {
  if (coords.size() != static_cast<std::size_t>(d_->m))
    fail(ErrorKind::DimensionMismatch, "fieldcore::from_prime", "coordinate count differs from field degree");
  QElem r = zero();
  for (std::size_t i = 0; i < coords.size(); ++i) r.c[i] = coords[i].c.at(0);
  return r;
}

QElem NumberField::embed_prime(const QElem& c) const {
  QElem r = zero();
  r.c[0] = c.c.at(0);
  return r;
}

QElem NumberField::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> dist(-3, 3);
  QElem r = zero();
  for (auto& x : r.c) x = dist(rng);
  return r;
}

std::string NumberField::to_string(const QElem& a) const {
  if (d_->m == 1) return a.c[0].get_str();
  std::string out;
  for (int i = d_->m - 1; i >= 0; --i) {
    if (a.c[i] == 0) continue;
    std::string co = a.c[i].get_str();
    if (!out.empty()) {
      if (co[0] == '-') {
        out += " - ";
        co = co.substr(1);
      } else {
        out += " + ";
      }
    }
    if (i == 0) {
      out += co;
      continue;
    }
    if (co == "-1") out += "-";
    else if (co != "1") out += co + "*";
    out += d_->var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

bool NumberField::operator==(const NumberField& o) const {
  return d_ == o.d_ || d_->modulus == o.d_->modulus;
}

// ---------------------------------------------------------------------------
// Embeddings

template <class F>
Embedding<F>::Embedding(F source, F target, Elem generator_image)
    : source_(std::move(source)), target_(std::move(target)), gen_(std::move(generator_image)) {
  Elem cur = target_.one();
  for (int i = 0; i < source_.degree(); ++i) {
    powers_.push_back(cur);
    cur = target_.mul(cur, gen_);
  }
  if constexpr (is_finite_field_v<F>) {
    if (source_.size() <= (1u << 16)) {
      auto table = std::make_shared<std::vector<Elem>>(source_.size());
      for (std::uint64_t c = 0; c < source_.size(); ++c) {
        Elem r = target_.zero();
        auto dg = source_.to_prime(static_cast<Elem>(c));
        for (std::size_t i = 0; i < dg.size(); ++i)
          if (dg[i]) r = target_.add(r, target_.mul(target_.embed_prime(dg[i]), powers_[i]));
        (*table)[c] = r;
      }
      table_ = std::move(table);
    }
  }
}

template <class F>
Embedding<F> Embedding<F>::identity(const F& field) {
  return Embedding(field, field, field.generator());
}

template <class F>
Embedding<F> Embedding<F>::from_prime(const F& target) {
  F p = target.prime_field();
  return Embedding(p, target, target.one());
}

template <class F>
typename Embedding<F>::Elem Embedding<F>::operator()(const Elem& x) const {
  if constexpr (is_finite_field_v<F>) {
    if (table_) return (*table_)[x];
  }
  auto dg = source_.to_prime(x);
  Elem r = target_.zero();
  for (std::size_t i = 0; i < dg.size(); ++i) {
    if (source_.prime_field().is_zero(dg[i])) continue;
    r = target_.add(r, target_.mul(target_.embed_prime(dg[i]), powers_[i]));
  }
  return r;
}

template class Embedding<FiniteField>;
template class Embedding<NumberField>;

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, int degree) {
  FiniteField base = FiniteField::prime(p);
  if (degree == 1) return {0, 1};
  std::uint64_t total = 1;
  for (int i = 0; i < degree; ++i) total *= p;
  for (std::uint64_t c = 1; c < total; ++c) {
    if (c % p == 0) continue;  // constant term must be nonzero
    std::vector<std::uint32_t> poly = code_digits(c, p, static_cast<std::size_t>(degree));
    poly.push_back(1);
    if (upoly::is_irreducible(UPoly<FiniteField>(base, poly))) return poly;
  }
  fail(ErrorKind::InternalInconsistency, "fieldcore::find_irreducible", "no irreducible polynomial found");
}

std::pair<FiniteField, Embedding<FiniteField>> extend(const FiniteField& base, int e) {
  if (e < 1) fail(ErrorKind::InvalidArgument, "fieldcore::extend", "extension degree must be positive");
  if (e == 1) return {base, Embedding<FiniteField>::identity(base)};
  std::uint32_t p = base.characteristic();
  auto h = find_irreducible(p, base.degree() * e);
  std::vector<std::int64_t> hi(h.begin(), h.end());
  FiniteField K = FiniteField::extension(p, hi, "s");
  if (base.is_prime_field()) return {K, Embedding<FiniteField>::from_prime(K)};
  std::vector<FiniteField::Elem> mod(base.modulus().begin(), base.modulus().end());
  auto rts = upoly::roots(UPoly<FiniteField>(K, mod));
  if (rts.empty()) fail(ErrorKind::InternalInconsistency, "fieldcore::extend", "subfield modulus has no root in the extension");
  return {K, Embedding<FiniteField>(base, K, rts.front())};
}

// ---------------------------------------------------------------------------
// Rational factor search

namespace detail {
namespace {

using ZPoly = std::vector<mpz_class>;

mpz_class zeval(const ZPoly& f, const mpz_class& x) {
  mpz_class r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
  return r;
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  if (n > mpz_class("1000000000000"))
    fail(ErrorKind::NotSupported, "fieldcore::rational_factor", "coefficients too large for factor search");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// exact division over Q; returns quotient when remainder vanishes
std::optional<std::vector<mpq_class>> exact_div(std::vector<mpq_class> a, const std::vector<mpq_class>& b) {
  int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
  if (da < db) return std::nullopt;
  std::vector<mpq_class> q(da - db + 1);
  for (int i = da; i >= db; --i) {
    if (a[i] == 0) continue;
    mpq_class c = a[i] / b[db];
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (auto& x : a)
    if (x != 0) return std::nullopt;
  return q;
}

std::vector<mpq_class> make_monic(std::vector<mpq_class> f) {
  mpq_class l = f.back();
  for (auto& x : f) x /= l;
  return f;
}

}  // namespace

std::optional<std::vector<mpq_class>> rational_factor(const std::vector<mpq_class>& f0) {
  std::vector<mpq_class> f = f0;
  while (!f.empty() && f.back() == 0) f.pop_back();
  int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return std::nullopt;
  if (n > 7) fail(ErrorKind::NotSupported, "fieldcore::rational_factor", "degree above 7");
  mpz_class lcm = 1;
  for (auto& c : f) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly F(f.size());
  mpz_class content = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpq_class v = f[i] * lcm;
    F[i] = v.get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), F[i].get_mpz_t());
  }
  for (auto& c : F) c /= content;
  if (F[0] == 0) return std::vector<mpq_class>{0, 1};
  // rational roots
  for (auto& a : divisors(F[0])) {
    for (auto& b : divisors(F[n])) {
      for (int s : {1, -1}) {
        mpq_class r(a * s, b);
        r.canonicalize();
        mpq_class v = 0;
        for (std::size_t i = f.size(); i-- > 0;) v = v * r + f[i];
        if (v == 0) return std::vector<mpq_class>{-r, 1};
      }
    }
  }
  // Kronecker search for factors of degree 2..3
  for (int s = 2; s <= std::min(3, n / 2); ++s) {
    std::vector<mpz_class> pts;
    std::vector<std::vector<mpz_class>> vals;
    for (long k = 0; static_cast<int>(pts.size()) < s + 1; ++k) {
      mpz_class x = (k % 2 == 0) ? mpz_class(k / 2) : mpz_class(-(k + 1) / 2);
      mpz_class v = zeval(F, x);
      pts.push_back(x);
      auto ds = divisors(v);
      std::vector<mpz_class> signed_ds;
      for (auto& d : ds) {
        signed_ds.push_back(d);
        if (!vals.empty()) signed_ds.push_back(-d);  // first value sign fixed
      }
      vals.push_back(std::move(signed_ds));
    }
    std::size_t combos = 1;
    for (auto& v : vals) {
      combos *= v.size();
      if (combos > 20000000) fail(ErrorKind::NotSupported, "fieldcore::rational_factor", "factor search too large");
    }
    std::vector<std::size_t> idx(vals.size(), 0);
    for (std::size_t it = 0; it < combos; ++it) {
      std::size_t t = it;
      for (std::size_t i = 0; i < vals.size(); ++i) {
        idx[i] = t % vals[i].size();
        t /= vals[i].size();
      }
      // Lagrange interpolation through (pts[i], vals[i][idx[i]])
      std::vector<mpq_class> g(s + 1);
      for (int i = 0; i <= s; ++i) {
        std::vector<mpq_class> basis{1};
        mpq_class denom = 1;
        for (int j = 0; j <= s; ++j) {
          if (j == i) continue;
          std::vector<mpq_class> nb(basis.size() + 1);
          for (std::size_t k = 0; k < basis.size(); ++k) {
            nb[k + 1] += basis[k];
            nb[k] -= basis[k] * mpq_class(pts[j]);
          }
          basis = std::move(nb);
          denom *= mpq_class(pts[i] - pts[j]);
        }
        mpq_class scale = mpq_class(vals[i][idx[i]]) / denom;
        for (int k = 0; k <= s; ++k) g[k] += basis[k] * scale;
      }
      if (g[s] == 0) continue;
      bool integral = true;
      for (auto& c : g)
        if (c.get_den() != 1) integral = false;
      if (!integral) continue;
      if (exact_div(f, g)) return make_monic(g);
    }
  }
  return std::nullopt;
}

}  // namespace detail

namespace upoly {

namespace {
std::vector<mpq_class> to_mpq(const UPoly<NumberField>& f) {
  std::vector<mpq_class> out;
  for (auto& c : f.c) out.push_back(c.c.at(0));
  return out;
}
UPoly<NumberField> from_mpq(const NumberField& Q, const std::vector<mpq_class>& v) {
  std::vector<QElem> c;
  for (auto& x : v) c.push_back(Q.from_rational(x));
  return UPoly<NumberField>(Q, std::move(c));
}
}  // namespace

std::vector<std::pair<UPoly<NumberField>, int>> factor_rational(const UPoly<NumberField>& f0) {
  std::vector<std::pair<UPoly<NumberField>, int>> out;
  auto f = monic(f0);
  if (f.degree() < 1) return out;
  const NumberField& Q = f.field;
  // Yun squarefree decomposition (characteristic 0)
  std::vector<std::pair<UPoly<NumberField>, int>> sqf;
  auto a = f;
  auto b = derivative(a);
  auto c = gcd(a, b);
  auto w = quo(a, c);
  int i = 1;
  while (w.degree() > 0) {
    auto y = gcd(w, c);
    auto z = quo(w, y);
    if (z.degree() > 0) sqf.push_back({z, i});
    ++i;
    w = y;
    c = quo(c, y);
  }
  for (auto& [g, mult] : sqf) {
    std::vector<UPoly<NumberField>> stack{g};
    while (!stack.empty()) {
      auto h = stack.back();
      stack.pop_back();
      auto fac = detail::rational_factor(to_mpq(h));
      if (!fac) {
        out.push_back({monic(h), mult});
        continue;
      }
      auto fp = from_mpq(Q, *fac);
      stack.push_back(fp);
      stack.push_back(quo(h, fp));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
    return x.first.to_string() < y.first.to_string();
  });
  return out;
}

}  // namespace upoly

}  // namespace nullsatz
