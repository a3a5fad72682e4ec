#include "nullsatz/findim.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace nullsatz {

namespace {

template <class F>
std::string vec_key(const F& f, const Vec<F>& v) {
  std::string s;
  for (const auto& x : v) s += f.to_string(x) + ",";
  return s;
}

template <class F>
std::string subspace_key(const Subspace<F>& s) {
  std::string k;
  for (const auto& r : s.basis()) k += vec_key(s.field(), r) + ";";
  return k;
}

// minimal polynomial of c inside an algebra whose identity (or local identity) is u
template <class F>
UPoly<F> local_minpoly(const FinDimAlgebra<F>& a, const Vec<F>& u, const Vec<F>& c) {
  const F& f = a.field();
  DependencyTracker<F> dep(f);
  Vec<F> p = u;
  for (;;) {
    auto dc = dep.add(p);
    if (dc) {
      Vec<F> coeffs(dc->size() + 1);
      for (std::size_t i = 0; i < dc->size(); ++i) coeffs[i] = f.neg((*dc)[i]);
      coeffs.back() = f.one();
      return UPoly<F>(f, coeffs);
    }
    p = a.mul(p, c);
  }
}

template <class F>
Vec<F> local_eval(const FinDimAlgebra<F>& a, const Vec<F>& u, const UPoly<F>& poly, const Vec<F>& c) {
  const F& f = a.field();
  Vec<F> r = vec::zeros(f, a.dim());
  for (int i = poly.degree(); i >= 0; --i) {
    r = a.mul(r, c);
    vec::axpy(f, r, poly.c[i], u);
  }
  return r;
}

template <class F>
F make_center_field(const F& f, const UPoly<F>& h) {
  if (h.degree() == 1) return f;
  if constexpr (is_finite_field_v<F>) {
    std::vector<std::int64_t> m(h.c.begin(), h.c.end());
    return FiniteField::extension(f.characteristic(), m, "t");
  } else {
    std::vector<mpq_class> m;
    for (auto& c : h.c) m.push_back(c.c.at(0));
    return NumberField::extension(m, "t");
  }
}

template <class F>
Vec<F> random_vector(const F& f, std::size_t n, std::mt19937_64& rng) {
  Vec<F> v(n);
  for (auto& x : v) x = f.random(rng);
  return v;
}

template <class F>
Vec<F> random_combination(const F& f, std::size_t n, const std::vector<Vec<F>>& basis, std::mt19937_64& rng) {
  Vec<F> v = vec::zeros(f, n);
  for (const auto& b : basis) vec::axpy(f, v, f.random(rng), b);
  return v;
}

template <class F>
Vec<F> flatten(const Matrix<F>& m) {
  return m.data();
}

template <class F>
bool exhaustive_mode(const F& f, std::size_t n, const PredicateOptions& opt, const char* where) {
  if (opt.mode == PredicateMode::Sampled) return false;
  if constexpr (!is_finite_field_v<F>) {
    if (opt.mode == PredicateMode::Exhaustive)
      fail(ErrorKind::InfiniteBaseField, where, "exhaustive mode needs a finite field");
    return false;
  } else {
    long double total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<long double>(f.size());
    if (total <= static_cast<long double>(opt.exhaustion_limit)) return true;
    if (opt.mode == PredicateMode::Exhaustive)
      fail(ErrorKind::TooLargeForExhaustion, where, "|F|^dim exceeds the exhaustion limit");
    return false;
  }
}

template <class F>
Vec<F> vector_at(const F& f, std::size_t n, std::uint64_t index) {
  if constexpr (is_finite_field_v<F>) {
    return enumerate_vector(f, n, index);
  } else {
    (void)f;
    (void)n;
    (void)index;
    fail(ErrorKind::InfiniteBaseField, "findim::enumerate", "cannot enumerate an infinite field");
  }
}

template <class F>
std::uint64_t space_size(const F& f, std::size_t n) {
  std::uint64_t t = 1;
  for (std::size_t i = 0; i < n; ++i) t *= f.size();
  return t;
}

// Runs pred over all of F^n (exhaustive) or over seeded random samples.
template <class F, class Pred>
std::pair<std::optional<Vec<F>>, std::pair<bool, std::uint64_t>> scan_vectors(const F& f, std::size_t n,
                                                                              const PredicateOptions& opt,
                                                                              const char* where, Pred pred) {
  if (exhaustive_mode(f, n, opt, where)) {
    std::uint64_t total = space_size(f, n);
    auto hit = find_first(total, [&](std::uint64_t i) { return pred(vector_at(f, n, i)); }, opt.exec);
    if (hit) return {vector_at(f, n, *hit), {true, *hit + 1}};
    return {std::nullopt, {true, total}};
  }
  std::mt19937_64 rng(opt.seed);
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    Vec<F> v = random_vector(f, n, rng);
    if (pred(v)) return {v, {false, t + 1}};
  }
  return {std::nullopt, {false, opt.trials}};
}

}  // namespace

Vec<FiniteField> enumerate_vector(const FiniteField& f, std::size_t n, std::uint64_t index) {
  Vec<FiniteField> v(n);
  std::uint64_t q = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = f.from_code(index % q);
    index /= q;
  }
  return v;
}

std::uint64_t count_vectors(const FiniteField& f, std::size_t n, std::uint64_t limit, const char* where) {
  long double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<long double>(f.size());
  if (total > static_cast<long double>(limit))
    fail(ErrorKind::TooLargeForExhaustion, where, "enumeration size exceeds the configured limit");
  return static_cast<std::uint64_t>(total);
}

// ---------------------------------------------------------------------------
// FinDimAlgebra

template <class F>
FinDimAlgebra<F> FinDimAlgebra<F>::create(F field, std::size_t dim, std::vector<Elem> structure, Vec<F> unit,
                                          std::vector<std::string> names, bool validate) {
  const char* where = "findim::create_algebra";
  if (dim == 0) fail(ErrorKind::InvalidArgument, where, "dimension must be positive");
  if (structure.size() != dim * dim * dim) fail(ErrorKind::DimensionMismatch, where, "structure constants must be d^3");
  if (unit.size() != dim) fail(ErrorKind::DimensionMismatch, where, "unit has wrong length");
  if (names.empty())
    for (std::size_t i = 0; i < dim; ++i) names.push_back("b" + std::to_string(i + 1));
  if (names.size() != dim) fail(ErrorKind::DimensionMismatch, where, "basis name count differs from dimension");
  FinDimAlgebra a;
  a.d_ = std::make_shared<Data>();
  auto& d = *a.d_;
  d.field = field;
  d.dim = dim;
  d.structure = std::move(structure);
  d.unit = std::move(unit);
  d.names = std::move(names);
  for (std::size_t i = 0; i < dim; ++i) {
    Matrix<F> L(field, dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) L.at(k, j) = d.structure[(i * dim + j) * dim + k];
    d.left.push_back(std::move(L));
  }
  if (validate) {
    for (std::size_t i = 0; i < dim; ++i) {
      auto bi = a.basis(i);
      if (a.mul(d.unit, bi) != bi || a.mul(bi, d.unit) != bi)
        fail(ErrorKind::InvalidArgument, where, "unit does not act as identity on " + d.names[i]);
    }
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        Matrix<F> lhs(field, dim, dim);
        for (std::size_t k = 0; k < dim; ++k)
          if (!field.is_zero(a.c(i, j, k))) lhs = matadd(lhs, matscale(d.left[k], a.c(i, j, k)));
        if (lhs != matmul(d.left[i], d.left[j]))
          fail(ErrorKind::InvalidArgument, where, "structure constants are not associative at (" + d.names[i] + ", " +
                                                      d.names[j] + ")");
      }
  }
  return a;
}

template <class F>
Vec<F> FinDimAlgebra<F>::mul(const Vec<F>& a, const Vec<F>& b) const {
  const F& f = field();
  std::size_t n = dim();
  Vec<F> r(n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (f.is_zero(b[j])) continue;
      auto s = f.mul(a[i], b[j]);
      const Elem* row = &d_->structure[(i * n + j) * n];
      for (std::size_t k = 0; k < n; ++k)
        if (!f.is_zero(row[k])) r[k] = f.add(r[k], f.mul(s, row[k]));
    }
  }
  return r;
}

template <class F>
Matrix<F> FinDimAlgebra<F>::left_mult(const Vec<F>& a) const {
  const F& f = field();
  Matrix<F> m(f, dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!f.is_zero(a[i])) m = matadd(m, matscale(d_->left[i], a[i]));
  return m;
}

template <class F>
Matrix<F> FinDimAlgebra<F>::right_mult(const Vec<F>& a) const {
  Matrix<F> m(field(), dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    auto col = mul(basis(j), a);
    for (std::size_t k = 0; k < dim(); ++k) m.at(k, j) = col[k];
  }
  return m;
}

template <class F>
bool FinDimAlgebra<F>::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      for (std::size_t k = 0; k < dim(); ++k)
        if (!field().eq(c(i, j, k), c(j, i, k))) return false;
  return true;
}

template <class F>
std::optional<std::size_t> FinDimAlgebra<F>::name_index(const std::string& name) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (d_->names[i] == name) return i;
  return std::nullopt;
}

template <class F>
std::string FinDimAlgebra<F>::element_to_string(const Vec<F>& a) const {
  const F& f = field();
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (f.is_zero(a[i])) continue;
    std::string co = f.to_string(a[i]);
    bool negative = !co.empty() && co[0] == '-';
    if (negative) co = co.substr(1);
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (co != "1") out += co + "*";
    out += d_->names[i];
  }
  return out.empty() ? "0" : out;
}

template <class F>
const WedderburnData<F>& FinDimAlgebra<F>::wedderburn_data() const {
  std::call_once(d_->wd_once, [this] { d_->wd = std::make_shared<const WedderburnData<F>>(wedderburn(*this)); });
  return *d_->wd;
}

// ---------------------------------------------------------------------------
// presets

template <class F>
FinDimAlgebra<F> matrix_algebra(const F& f, std::size_t n) {
  std::size_t d = n * n;
  std::vector<typename F::Elem> c(d * d * d, f.zero());
  std::vector<std::string> names;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) names.push_back("e" + std::to_string(r + 1) + std::to_string(s + 1));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t u = 0; u < n; ++u) c[((r * n + s) * d + (s * n + u)) * d + (r * n + u)] = f.one();
  Vec<F> unit(d, f.zero());
  for (std::size_t r = 0; r < n; ++r) unit[r * n + r] = f.one();
  return FinDimAlgebra<F>::create(f, d, std::move(c), std::move(unit), std::move(names));
}

template <class F>
FinDimAlgebra<F> polynomial_quotient_algebra(const F& f, const std::vector<typename F::Elem>& poly,
                                             const std::string& var) {
  UPoly<F> m(f, poly);
  if (m.degree() < 1) fail(ErrorKind::InvalidArgument, "findim::preset", "quotient polynomial must have degree >= 1");
  if (!f.is_one(m.lead())) fail(ErrorKind::NotMonic, "findim::preset", "quotient polynomial must be monic");
  std::size_t d = static_cast<std::size_t>(m.degree());
  std::vector<typename F::Elem> c(d * d * d, f.zero());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto r = upoly::mod(UPoly<F>::monomial(f, f.one(), i + j), m);
      for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = r.coeff(k);
    }
  std::vector<std::string> names{"one"};
  for (std::size_t i = 1; i < d; ++i) names.push_back(i == 1 ? var : var + std::to_string(i));
  return FinDimAlgebra<F>::create(f, d, std::move(c), vec::unit(f, d, 0), std::move(names));
}

template <class F>
FinDimAlgebra<F> dual_numbers(const F& f) {
  auto a = polynomial_quotient_algebra(f, {f.zero(), f.zero(), f.one()}, "eps");
  return a;
}

template <class F>
FinDimAlgebra<F> cyclic_group_algebra(const F& f, std::size_t n) {
  std::vector<typename F::Elem> c(n * n * n, f.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[(i * n + j) * n + (i + j) % n] = f.one();
  std::vector<std::string> names{"one"};
  for (std::size_t i = 1; i < n; ++i) names.push_back(i == 1 ? "g" : "g" + std::to_string(i));
  return FinDimAlgebra<F>::create(f, n, std::move(c), vec::unit(f, n, 0), std::move(names));
}

template <class F>
FinDimAlgebra<F> upper_triangular(const F& f, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  std::vector<std::string> names;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r; s < n; ++s) {
      idx.push_back({r, s});
      names.push_back("e" + std::to_string(r + 1) + std::to_string(s + 1));
    }
  std::size_t d = idx.size();
  auto find = [&](std::size_t r, std::size_t s) {
    return static_cast<std::size_t>(std::find(idx.begin(), idx.end(), std::make_pair(r, s)) - idx.begin());
  };
  std::vector<typename F::Elem> c(d * d * d, f.zero());
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (idx[a].second == idx[b].first) c[(a * d + b) * d + find(idx[a].first, idx[b].second)] = f.one();
  Vec<F> unit(d, f.zero());
  for (std::size_t r = 0; r < n; ++r) unit[find(r, r)] = f.one();
  return FinDimAlgebra<F>::create(f, d, std::move(c), std::move(unit), std::move(names));
}

template <class F>
FinDimAlgebra<F> quaternion_algebra(const F& f, const typename F::Elem& a, const typename F::Elem& b) {
  std::size_t d = 4;
  std::vector<typename F::Elem> c(64, f.zero());
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const typename F::Elem& v) { c[(i * d + j) * d + k] = v; };
  auto ab = f.mul(a, b);
  for (std::size_t i = 0; i < 4; ++i) {
    set(0, i, i, f.one());
    set(i, 0, i, f.one());
  }
  set(1, 1, 0, a);
  set(2, 2, 0, b);
  set(3, 3, 0, f.neg(ab));
  set(1, 2, 3, f.one());
  set(2, 1, 3, f.neg(f.one()));
  set(1, 3, 2, a);
  set(3, 1, 2, f.neg(a));
  set(2, 3, 1, f.neg(b));
  set(3, 2, 1, b);
  return FinDimAlgebra<F>::create(f, d, std::move(c), vec::unit(f, d, 0), {"one", "i", "j", "k"});
}

template <class F>
FinDimAlgebra<F> restrict_scalars(const F& ext, std::size_t dim, const std::vector<typename F::Elem>& structure,
                                  const std::vector<typename F::Elem>& unit, const std::vector<std::string>& names0) {
  const char* where = "findim::restrict_scalars";
  if (structure.size() != dim * dim * dim || unit.size() != dim)
    fail(ErrorKind::DimensionMismatch, where, "structure or unit has the wrong size");
  std::size_t m = static_cast<std::size_t>(ext.degree());
  F base = ext.prime_field();
  std::size_t D = dim * m;
  std::vector<std::string> names0b = names0;
  if (names0b.empty())
    for (std::size_t i = 0; i < dim; ++i) names0b.push_back("b" + std::to_string(i + 1));
  std::vector<typename F::Elem> c(D * D * D, base.zero());
  auto t = ext.generator();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t l = 0; l < m; ++l)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t l2 = 0; l2 < m; ++l2) {
          auto tp = ext.pow(t, l + l2);
          for (std::size_t k = 0; k < dim; ++k) {
            auto coef = ext.mul(structure[(i * dim + j) * dim + k], tp);
            auto pc = ext.to_prime(coef);
            for (std::size_t r = 0; r < m; ++r)
              c[((i * m + l) * D + (j * m + l2)) * D + (k * m + r)] = pc[r];
          }
        }
  Vec<F> u(D, base.zero());
  for (std::size_t i = 0; i < dim; ++i) {
    auto pc = ext.to_prime(unit[i]);
    for (std::size_t r = 0; r < m; ++r) u[i * m + r] = pc[r];
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t l = 0; l < m; ++l)
      names.push_back(l == 0 ? names0b[i] : names0b[i] + "_" + ext.var() + (l > 1 ? std::to_string(l) : ""));
  return FinDimAlgebra<F>::create(base, D, std::move(c), std::move(u), std::move(names));
}

// ---------------------------------------------------------------------------
// radical

namespace {

using I64Mat = std::vector<std::int64_t>;

I64Mat imat_mul(const I64Mat& a, const I64Mat& b, std::size_t n, std::int64_t mod) {
  I64Mat r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::int64_t x = a[i * n + k];
      if (!x) continue;
      for (std::size_t j = 0; j < n; ++j) r[i * n + j] = (r[i * n + j] + x * b[k * n + j]) % mod;
    }
  return r;
}

// Tr(L~^(p^i)) / p^i mod p for the integer lift of the left-regular matrix
std::uint32_t ciw_functional(const FinDimAlgebra<FiniteField>& a, const Vec<FiniteField>& x, std::uint32_t p, int i) {
  std::size_t n = a.dim();
  std::int64_t pi = 1;
  for (int s = 0; s < i; ++s) pi *= p;
  std::int64_t mod = pi * p;
  auto L = a.left_mult(x);
  I64Mat m(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r * n + c] = L.at(r, c);
  I64Mat acc(n * n, 0);
  for (std::size_t r = 0; r < n; ++r) acc[r * n + r] = 1 % mod;
  std::uint64_t e = static_cast<std::uint64_t>(pi);
  I64Mat base = m;
  while (e) {
    if (e & 1) acc = imat_mul(acc, base, n, mod);
    e >>= 1;
    if (e) base = imat_mul(base, base, n, mod);
  }
  std::int64_t tr = 0;
  for (std::size_t r = 0; r < n; ++r) tr = (tr + acc[r * n + r]) % mod;
  if (tr % pi != 0)
    fail(ErrorKind::InternalInconsistency, "findim::radical", "trace functional is not divisible by p^i");
  return static_cast<std::uint32_t>((tr / pi) % p);
}

template <class F>
bool certify_nilpotent_ideal(const FinDimAlgebra<F>& a, const Subspace<F>& r) {
  for (const auto& v : r.basis())
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (!r.contains(a.mul(a.basis(i), v))) return false;
      if (!r.contains(a.mul(v, a.basis(i)))) return false;
    }
  Subspace<F> power = r;
  for (std::size_t step = 0; step <= a.dim() + 1; ++step) {
    if (power.dim() == 0) return true;
    Subspace<F> next(a.field(), a.dim());
    for (const auto& x : power.basis())
      for (const auto& y : r.basis()) next.add(a.mul(x, y));
    if (next.dim() >= power.dim()) return false;
    power = std::move(next);
  }
  return power.dim() == 0;
}

}  // namespace

template <class F>
std::vector<Vec<F>> radical(const FinDimAlgebra<F>& a, RadicalMethod method) {
  const char* where = "findim::radical";
  const F& f = a.field();
  std::size_t d = a.dim();
  std::uint64_t p = f.characteristic();
  Subspace<F> result(f, d);
  if (p == 0 || p > d) {
    Vec<F> tr(d);
    for (std::size_t k = 0; k < d; ++k) {
      auto t = f.zero();
      for (std::size_t i = 0; i < d; ++i) t = f.add(t, a.left_basis_mult(k).at(i, i));
      tr[k] = t;
    }
    Matrix<F> T(f, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        auto s = f.zero();
        for (std::size_t k = 0; k < d; ++k) s = f.add(s, f.mul(a.c(i, j, k), tr[k]));
        T.at(i, j) = s;
      }
    result = Subspace<F>::span(f, d, kernel_basis(T));
  } else if (method == RadicalMethod::TraceForm) {
    fail(ErrorKind::SmallCharacteristic, where,
         "characteristic " + std::to_string(p) + " <= dim " + std::to_string(d) + " for the trace-form method");
  } else {
    if constexpr (is_finite_field_v<F>) {
      if (!f.is_prime_field()) fail(ErrorKind::NotSupported, where, "small characteristic needs a prime base field");
      int l = 0;
      for (std::uint64_t pw = p; pw <= d; pw *= p) ++l;
      std::vector<Vec<F>> cur;
      for (std::size_t i = 0; i < d; ++i) cur.push_back(a.basis(i));
      for (int i = 0; i <= l; ++i) {
        Matrix<F> G(f, d, cur.size());  // G[t][s] = g_i(a_s b_t)
        for (std::size_t s = 0; s < cur.size(); ++s)
          for (std::size_t t = 0; t < d; ++t)
            G.at(t, s) = ciw_functional(a, a.mul(cur[s], a.basis(t)), static_cast<std::uint32_t>(p), i);
        std::vector<Vec<F>> next;
        for (auto& y : kernel_basis(G)) {
          Vec<F> v = vec::zeros(f, d);
          for (std::size_t s = 0; s < cur.size(); ++s) vec::axpy(f, v, y[s], cur[s]);
          next.push_back(std::move(v));
        }
        cur = Subspace<F>::span(f, d, next).basis();
      }
      result = Subspace<F>::span(f, d, cur);
    }
  }
  if (!certify_nilpotent_ideal(a, result))
    fail(ErrorKind::SmallCharacteristic, where, "computed radical is not a nilpotent two-sided ideal");
  return result.basis();
}

template <class F>
Subspace<F> center(const FinDimAlgebra<F>& a) {
  const F& f = a.field();
  std::size_t d = a.dim();
  Matrix<F> m(f, d * d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i) m.at(j * d + k, i) = f.sub(a.c(i, j, k), a.c(j, i, k));
  return Subspace<F>::span(f, d, kernel_basis(m));
}

// ---------------------------------------------------------------------------
// Wedderburn

template <class F>
Matrix<F> SimpleFactor<F>::theta_of(const Vec<F>& a) const {
  Matrix<F> m(center, k, k);
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto e = center.embed_prime(a[i]);
    if (center.is_zero(e)) continue;
    m = matadd(m, matscale(theta[i], e));
  }
  return m;
}

template <class F>
Vec<F> SimpleFactor<F>::section_of(const Matrix<F>& m) const {
  F p = center.prime_field();
  Vec<F> out = vec::zeros(p, section.empty() ? 0 : section[0].size());
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = 0; s < k; ++s) {
      auto pc = center.to_prime(m.at(r, s));
      for (std::size_t l = 0; l < degree; ++l) vec::axpy(p, out, pc[l], section_unit(l, r, s));
    }
  return out;
}

template <class F>
WedderburnData<F> wedderburn(const FinDimAlgebra<F>& A, std::uint64_t seed, int attempts, RadicalMethod method) {
  const char* where = "findim::wedderburn";
  const F& f = A.field();
  std::size_t d = A.dim();
  WedderburnData<F> W;
  W.radical = radical(A, method);
  W.radical_space = Subspace<F>::span(f, d, W.radical);
  auto nonpiv = W.radical_space.non_pivots();
  std::size_t db = nonpiv.size();
  if (db == 0) return W;
  auto proj = [&](const Vec<F>& a) { return W.radical_space.quotient_coords(a); };
  auto lift = [&](const Vec<F>& b) {
    Vec<F> a = vec::zeros(f, d);
    for (std::size_t k = 0; k < db; ++k) a[nonpiv[k]] = b[k];
    return a;
  };
  std::vector<typename F::Elem> bs(db * db * db, f.zero());
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      auto pr = proj(A.mul(lift(vec::unit(f, db, i)), lift(vec::unit(f, db, j))));
      for (std::size_t k = 0; k < db; ++k) bs[(i * db + j) * db + k] = pr[k];
    }
  auto B = FinDimAlgebra<F>::create(f, db, std::move(bs), proj(A.unit()), {}, false);
  auto Z = center(B);
  std::mt19937_64 rng(seed);

  struct Component {
    Vec<F> e, z;
    UPoly<F> h;
  };
  std::vector<Component> comps;
  std::vector<std::pair<Vec<F>, std::vector<Vec<F>>>> pending{{B.unit(), Z.basis()}};
  while (!pending.empty()) {
    auto [e, zb] = pending.back();
    pending.pop_back();
    std::size_t dz = zb.size();
    bool done = false;
    std::size_t tries = dz + 4 * static_cast<std::size_t>(attempts);
    for (std::size_t t = 0; t < tries && !done; ++t) {
      Vec<F> z = t < dz ? zb[t] : random_combination(f, db, zb, rng);
      auto mp = local_minpoly(B, e, z);
      auto fac = upoly::factor(mp);
      for (auto& [g, m] : fac)
        if (m > 1) fail(ErrorKind::InternalInconsistency, where, "quotient by the radical has a non-reduced centre");
      if (fac.size() == 1) {
        if (static_cast<std::size_t>(mp.degree()) == dz) {
          comps.push_back({e, z, mp});
          done = true;
        }
        continue;
      }
      auto f1 = fac[0].first;
      auto g = upoly::quo(mp, f1);
      auto [gg, s, tt] = upoly::xgcd(g, f1);
      auto sel = upoly::mod(upoly::mul(s, g), mp);
      Vec<F> e1 = local_eval(B, e, sel, z);
      Vec<F> e2 = vec::sub(f, e, e1);
      for (const auto& ei : {e1, e2}) {
        Subspace<F> sp(f, db);
        for (const auto& zz : zb) sp.add(B.mul(ei, zz));
        pending.push_back({ei, sp.basis()});
      }
      done = true;
    }
    if (!done) fail(ErrorKind::InternalInconsistency, where, "could not decompose the centre");
  }
  std::sort(comps.begin(), comps.end(), [&](const Component& x, const Component& y) {
    if (x.h.degree() != y.h.degree()) return x.h.degree() < y.h.degree();
    return vec_key(f, x.e) < vec_key(f, y.e);
  });

  Vec<F> idem_sum = vec::zeros(f, d);
  for (const auto& comp : comps) {
    SimpleFactor<F> sf;
    std::size_t a = static_cast<std::size_t>(comp.h.degree());
    F E = make_center_field(f, comp.h);
    sf.center = E;
    sf.degree = a;
    sf.center_minpoly = comp.h;
    Subspace<F> Bj(f, db);
    for (std::size_t i = 0; i < db; ++i) Bj.add(B.mul(comp.e, vec::unit(f, db, i)));
    std::size_t k2 = Bj.dim() / a;
    std::size_t k = 1;
    while ((k + 1) * (k + 1) <= k2) ++k;
    if (k * k != k2 || k2 * a != Bj.dim())
      fail(ErrorKind::NotSplit, where, "simple factor has non-square dimension over its centre");
    sf.k = k;
    std::vector<Vec<F>> zpow{comp.e};
    for (std::size_t l = 1; l < a; ++l) zpow.push_back(B.mul(zpow.back(), comp.z));
    std::vector<Vec<F>> w;
    Subspace<F> SE(f, db);
    for (const auto& cand : Bj.basis()) {
      if (w.size() == k2) break;
      if (SE.contains(cand)) continue;
      w.push_back(cand);
      for (std::size_t l = 0; l < a; ++l) SE.add(B.mul(zpow[l], cand));
    }
    std::vector<Vec<F>> blist;
    for (std::size_t r = 0; r < k2; ++r)
      for (std::size_t l = 0; l < a; ++l) blist.push_back(B.mul(zpow[l], w[r]));
    SpanCoordinates<F> coordsB(f, blist);
    auto ecoords = [&](const Vec<F>& x) {
      auto c = coordsB.coords(x);
      if (!c) fail(ErrorKind::InternalInconsistency, where, "element outside its simple factor");
      Vec<F> out(k2);
      for (std::size_t r = 0; r < k2; ++r)
        out[r] = E.from_prime(std::span<const typename F::Elem>(c->data() + r * a, a));
      return out;
    };
    std::vector<typename F::Elem> sst(k2 * k2 * k2, E.zero());
    for (std::size_t r = 0; r < k2; ++r)
      for (std::size_t s = 0; s < k2; ++s) {
        auto pr = ecoords(B.mul(w[r], w[s]));
        for (std::size_t t = 0; t < k2; ++t) sst[(r * k2 + s) * k2 + t] = pr[t];
      }
    auto S = FinDimAlgebra<F>::create(E, k2, std::move(sst), ecoords(comp.e), {}, false);

    auto left_dim = [&](const Vec<F>& ep) {
      Subspace<F> sp(E, k2);
      for (std::size_t r = 0; r < k2; ++r) sp.add(S.mul(S.basis(r), ep));
      return sp.dim();
    };
    Vec<F> eps = S.unit();
    std::size_t cur = k2;
    while (cur > k) {
      bool progressed = false;
      std::deque<Vec<F>> extra;
      std::size_t budget = k2 + 4 * static_cast<std::size_t>(attempts);
      for (std::size_t t = 0; t < budget && !progressed; ++t) {
        Vec<F> cand;
        if (!extra.empty()) {
          cand = extra.front();
          extra.pop_front();
        } else if (t < k2) {
          cand = S.mul(S.mul(eps, S.basis(t)), eps);
        } else {
          cand = S.mul(S.mul(eps, random_vector(E, k2, rng)), eps);
        }
        auto mp = local_minpoly(S, eps, cand);
        auto fac = upoly::factor(mp);
        if (fac.size() >= 2) {
          UPoly<F> f1 = UPoly<F>::constant(E, E.one());
          for (int m = 0; m < fac[0].second; ++m) f1 = upoly::mul(f1, fac[0].first);
          auto g = upoly::quo(mp, f1);
          auto [gg, s, tt] = upoly::xgcd(g, f1);
          auto sel = upoly::mod(upoly::mul(s, g), mp);
          Vec<F> e1 = local_eval(S, eps, sel, cand);
          Vec<F> e2 = vec::sub(E, eps, e1);
          std::size_t d1 = left_dim(e1), d2 = left_dim(e2);
          if (d1 == 0 || d2 == 0) continue;
          if (d1 <= d2) {
            eps = e1;
            cur = d1;
          } else {
            eps = e2;
            cur = d2;
          }
          progressed = true;
        } else if (fac[0].second >= 2) {
          Vec<F> nil = local_eval(S, eps, fac[0].first, cand);
          for (std::size_t r = 0; r < k2; ++r) extra.push_back(S.mul(nil, S.mul(S.mul(eps, S.basis(r)), eps)));
          for (int r = 0; r < 4; ++r)
            extra.push_back(S.mul(nil, S.mul(S.mul(eps, random_vector(E, k2, rng)), eps)));
        }
      }
      if (!progressed)
        fail(ErrorKind::NotSplit, where, "no zero divisor found; factor looks like a non-commutative division algebra");
    }
    // minimal left ideal L = S eps and the regular action on it
    std::vector<Vec<F>> lb;
    Subspace<F> Lsp(E, k2);
    for (std::size_t r = 0; r < k2 && lb.size() < k; ++r) {
      auto v = S.mul(S.basis(r), eps);
      if (Lsp.add(v)) lb.push_back(v);
    }
    SpanCoordinates<F> Lc(E, lb);
    auto phi = [&](const Vec<F>& s) {
      Matrix<F> m(E, k, k);
      for (std::size_t c = 0; c < k; ++c) {
        auto co = Lc.coords(S.mul(s, lb[c]));
        if (!co) fail(ErrorKind::InternalInconsistency, where, "minimal left ideal not stable");
        for (std::size_t r = 0; r < k; ++r) m.at(r, c) = (*co)[r];
      }
      return m;
    };
    std::vector<Matrix<F>> phiw;
    for (std::size_t r = 0; r < k2; ++r) phiw.push_back(phi(S.basis(r)));
    for (std::size_t i = 0; i < d; ++i) {
      auto alpha = ecoords(B.mul(comp.e, proj(A.basis(i))));
      Matrix<F> th(E, k, k);
      for (std::size_t r = 0; r < k2; ++r)
        if (!E.is_zero(alpha[r])) th = matadd(th, matscale(phiw[r], alpha[r]));
      sf.theta.push_back(std::move(th));
    }
    Matrix<F> Phi(E, k2, k2);
    for (std::size_t r = 0; r < k2; ++r)
      for (std::size_t t = 0; t < k2; ++t) Phi.at(t, r) = phiw[r].data()[t];
    std::vector<Vec<F>> rhs;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t s = 0; s < k; ++s) {
        Matrix<F> u(E, k, k);
        u.at(r, s) = E.one();
        rhs.push_back(u.data());
      }
    auto sols = solve_many(Phi, rhs);
    sf.section.assign(a * k * k, Vec<F>());
    auto tgen = E.generator();
    for (std::size_t rs = 0; rs < k * k; ++rs) {
      if (!sols[rs]) fail(ErrorKind::InternalInconsistency, where, "regular action is not surjective");
      for (std::size_t l = 0; l < a; ++l) {
        Vec<F> bv = vec::zeros(f, db);
        auto tl = E.pow(tgen, l);
        for (std::size_t r = 0; r < k2; ++r) {
          auto coef = E.mul((*sols[rs])[r], tl);
          auto pc = E.to_prime(coef);
          for (std::size_t l2 = 0; l2 < a; ++l2) vec::axpy(f, bv, pc[l2], blist[r * a + l2]);
        }
        sf.section[l * k * k + rs] = lift(bv);
      }
    }
    // explicit checks of the isomorphism
    if (sf.theta_of(A.unit()) != Matrix<F>::identity(E, k))
      fail(ErrorKind::InternalInconsistency, where, "theta does not preserve the unit");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (sf.theta_of(A.mul(A.basis(i), A.basis(j))) != matmul(sf.theta[i], sf.theta[j]))
          fail(ErrorKind::InternalInconsistency, where, "theta is not multiplicative");
    for (std::size_t l = 0; l < a; ++l)
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t s = 0; s < k; ++s) {
          Matrix<F> u(E, k, k);
          u.at(r, s) = E.pow(tgen, l);
          if (sf.theta_of(sf.section_unit(l, r, s)) != u)
            fail(ErrorKind::InternalInconsistency, where, "section is not a right inverse of theta");
        }
    idem_sum = vec::add(f, idem_sum, sf.section_of(Matrix<F>::identity(E, k)));
    W.factors.push_back(std::move(sf));
  }
  if (!W.radical_space.contains(vec::sub(f, idem_sum, A.unit())))
    fail(ErrorKind::InternalInconsistency, where, "factor identities do not sum to 1 modulo the radical");
  return W;
}

// ---------------------------------------------------------------------------
// dual bases and Xi

template <class F>
Vec<F> dual_functional(const FinDimAlgebra<F>& a, const SimpleFactor<F>& factor, std::size_t r, std::size_t s,
                       const Vec<F>& x) {
  (void)a;
  auto th = factor.theta_of(x);
  Matrix<F> m(factor.center, factor.k, factor.k);
  for (std::size_t i = 0; i < factor.k; ++i) m.at(i, i) = th.at(r, s);
  return factor.section_of(m);
}

template <class F>
Vec<F> xi_apply(const FinDimAlgebra<F>& a, const std::vector<XiTerm<F>>& terms, const Vec<F>& x) {
  Vec<F> out = a.zero();
  for (const auto& t : terms) out = vec::add(a.field(), out, a.mul(a.mul(t.e, x), t.f));
  return out;
}

template <class F>
DualBasisData<F> xi_preimage(const FinDimAlgebra<F>& A, std::uint64_t seed) {
  const char* where = "findim::xi_preimage";
  const F& f = A.field();
  std::size_t d = A.dim();
  auto W = wedderburn(A, seed);
  if (!W.radical.empty()) fail(ErrorKind::NotAzumaya, where, "algebra is not semisimple");
  // column (p, q) holds b_p b_m b_q stacked over m
  Matrix<F> sys(f, d * d, d * d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t m = 0; m < d; ++m) {
      auto pm = A.mul(A.basis(p), A.basis(m));
      for (std::size_t q = 0; q < d; ++q) {
        auto v = A.mul(pm, A.basis(q));
        for (std::size_t k = 0; k < d; ++k) sys.at(m * d + k, p * d + q) = v[k];
      }
    }
  DualBasisData<F> out;
  std::vector<Vec<F>> rhs;
  for (std::size_t j = 0; j < W.factors.size(); ++j) {
    const auto& sf = W.factors[j];
    for (std::size_t r = 0; r < sf.k; ++r)
      for (std::size_t s = 0; s < sf.k; ++s) {
        DualBasisEntry<F> e;
        e.factor = j;
        e.row = r;
        e.col = s;
        e.v = sf.section_unit(0, r, s);
        Vec<F> big;
        for (std::size_t m = 0; m < d; ++m) {
          e.omega.push_back(dual_functional(A, sf, r, s, A.basis(m)));
          big.insert(big.end(), e.omega.back().begin(), e.omega.back().end());
        }
        rhs.push_back(std::move(big));
        out.entries.push_back(std::move(e));
      }
  }
  auto sols = solve_many(sys, rhs);
  for (std::size_t i = 0; i < out.entries.size(); ++i) {
    if (!sols[i]) fail(ErrorKind::NotAzumaya, where, "no preimage of a dual-basis functional under Xi");
    auto& e = out.entries[i];
    for (std::size_t p = 0; p < d; ++p) {
      Vec<F> fv(d, f.zero());
      for (std::size_t q = 0; q < d; ++q) fv[q] = (*sols[i])[p * d + q];
      if (vec::is_zero(f, fv)) continue;
      e.preimage.push_back({A.basis(p), std::move(fv)});
    }
    for (std::size_t m = 0; m < d; ++m)
      if (xi_apply(A, e.preimage, A.basis(m)) != e.omega[m])
        fail(ErrorKind::InternalInconsistency, where, "Xi preimage does not reproduce the functional");
  }
  // dual basis identity
  for (std::size_t m = 0; m < d; ++m) {
    Vec<F> acc = A.zero();
    for (const auto& e : out.entries) acc = vec::add(f, acc, A.mul(e.omega[m], e.v));
    if (acc != A.basis(m)) fail(ErrorKind::InternalInconsistency, where, "dual basis identity fails");
  }
  return out;
}

// ---------------------------------------------------------------------------
// left ideals of A

template <class F>
LeftIdealFD<F> LeftIdealFD<F>::from_basis(const FinDimAlgebra<F>& a, const std::vector<Vec<F>>& vs) {
  LeftIdealFD I;
  I.a_ = a;
  I.space_ = Subspace<F>::span(a.field(), a.dim(), vs);
  for (const auto& v : I.space_.basis())
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!I.space_.contains(a.mul(a.basis(i), v)))
        fail(ErrorKind::InvalidArgument, "findim::left_ideal", "span is not closed under left multiplication");
  return I;
}

template <class F>
LeftIdealFD<F> LeftIdealFD<F>::generated(const FinDimAlgebra<F>& a, const std::vector<Vec<F>>& vs) {
  LeftIdealFD I;
  I.a_ = a;
  I.space_ = Subspace<F>(a.field(), a.dim());
  std::deque<Vec<F>> queue;
  for (const auto& v : vs) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      auto w = a.mul(a.basis(i), v);
      if (I.space_.add(w)) queue.push_back(w);
    }
  }
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      auto w = a.mul(a.basis(i), v);
      if (I.space_.add(w)) queue.push_back(w);
    }
  }
  return I;
}

template <class F>
bool LeftIdealFD<F>::is_two_sided() const {
  for (const auto& v : space_.basis())
    for (std::size_t i = 0; i < a_.dim(); ++i)
      if (!space_.contains(a_.mul(v, a_.basis(i)))) return false;
  return true;
}

template <class F>
LeftIdealFD<F> ideal_quotient(const LeftIdealFD<F>& I) {
  const auto& A = I.algebra();
  const F& f = A.field();
  std::size_t d = A.dim();
  std::size_t qd = d - I.dim();
  Matrix<F> m(f, d * qd, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto qc = I.space().quotient_coords(A.mul(A.basis(i), A.basis(j)));
      for (std::size_t t = 0; t < qd; ++t) m.at(j * qd + t, i) = qc[t];
    }
  return LeftIdealFD<F>::from_basis(A, kernel_basis(m));
}

template <class F>
Subspace<F> perp(const LeftIdealFD<F>& I) {
  const auto& A = I.algebra();
  const F& f = A.field();
  std::size_t d = A.dim();
  auto Q = ideal_quotient(I);
  std::size_t qd = d - Q.dim();
  const auto& ib = I.space().basis();
  Matrix<F> m(f, ib.size() * qd, d);
  for (std::size_t u = 0; u < ib.size(); ++u)
    for (std::size_t i = 0; i < d; ++i) {
      auto qc = Q.space().quotient_coords(A.mul(ib[u], A.basis(i)));
      for (std::size_t t = 0; t < qd; ++t) m.at(u * qd + t, i) = qc[t];
    }
  auto P = Subspace<F>::span(f, d, kernel_basis(m));
  for (const auto& v : P.basis())
    for (std::size_t i = 0; i < d; ++i)
      if (!P.contains(A.mul(v, A.basis(i))))
        fail(ErrorKind::InternalInconsistency, "findim::perp", "I^perp is not a right ideal");
  return P;
}

template <class F>
DoubleAnnihilatorResult<F> double_annihilator_check(const LeftIdealFD<F>& I) {
  const auto& A = I.algebra();
  const F& f = A.field();
  std::size_t d = A.dim();
  auto Q = ideal_quotient(I);
  auto P = perp(I);
  std::size_t qd = d - Q.dim();
  const auto& pb = P.basis();
  Matrix<F> m(f, pb.size() * qd, d);
  for (std::size_t c = 0; c < pb.size(); ++c)
    for (std::size_t i = 0; i < d; ++i) {
      auto qc = Q.space().quotient_coords(A.mul(A.basis(i), pb[c]));
      for (std::size_t t = 0; t < qd; ++t) m.at(c * qd + t, i) = qc[t];
    }
  DoubleAnnihilatorResult<F> res;
  res.recovered = Subspace<F>::span(f, d, kernel_basis(m));
  res.holds = res.recovered == I.space();
  if (!res.holds) {
    for (const auto& v : res.recovered.basis())
      if (!I.contains(v)) res.witness = v;
    for (const auto& v : I.space().basis())
      if (!res.recovered.contains(v)) res.witness = v;
  }
  return res;
}

template <class F>
PredicateResult<F> is_semiprime_left(const LeftIdealFD<F>& I, const PredicateOptions& opt) {
  const auto& A = I.algebra();
  std::size_t d = A.dim();
  auto pred = [&](const Vec<F>& a) {
    if (I.contains(a)) return false;
    for (std::size_t j = 0; j < d; ++j)
      if (!I.contains(A.mul(A.mul(a, A.basis(j)), a))) return false;
    return true;
  };
  auto [hit, info] = scan_vectors(A.field(), d, opt, "findim::is_semiprime_left", pred);
  PredicateResult<F> res;
  res.exhaustive = info.first;
  res.checked = info.second;
  res.holds = !hit;
  res.witness_a = hit;
  return res;
}

template <class F>
PredicateResult<F> is_prime_left(const LeftIdealFD<F>& I, const PredicateOptions& opt) {
  const auto& A = I.algebra();
  const F& f = A.field();
  std::size_t d = A.dim();
  std::size_t qd = d - I.dim();
  auto outside = [&](const Vec<F>& a) -> std::optional<Vec<F>> {
    if (I.contains(a)) return std::nullopt;
    Matrix<F> m(f, d * qd, d);
    for (std::size_t j = 0; j < d; ++j) {
      auto ab = A.mul(a, A.basis(j));
      for (std::size_t i = 0; i < d; ++i) {
        auto qc = I.space().quotient_coords(A.mul(ab, A.basis(i)));
        for (std::size_t t = 0; t < qd; ++t) m.at(j * qd + t, i) = qc[t];
      }
    }
    for (auto& b : kernel_basis(m))
      if (!I.contains(b)) return b;
    return std::nullopt;
  };
  auto [hit, info] = scan_vectors(f, d, opt, "findim::is_prime_left",
                                  [&](const Vec<F>& a) { return outside(a).has_value(); });
  PredicateResult<F> res;
  res.exhaustive = info.first;
  res.checked = info.second;
  res.holds = !hit;
  if (hit) {
    res.witness_a = hit;
    res.witness_b = outside(*hit);
  }
  return res;
}

template <class F>
AnnMaximalResult<F> ann_maximal_check(const FinDimAlgebra<F>& A, const std::vector<Matrix<F>>& action,
                                      const Vec<F>& m, Exec exec) {
  const char* where = "findim::ann_maximal_check";
  const F& f = A.field();
  std::size_t d = A.dim();
  if (action.size() != d) fail(ErrorKind::DimensionMismatch, where, "one action matrix per basis element expected");
  std::size_t n = m.size();
  if (vec::is_zero(f, m)) fail(ErrorKind::ZeroVector, where, "m must be nonzero");
  for (const auto& mat : action)
    if (mat.rows() != n || mat.cols() != n) fail(ErrorKind::DimensionMismatch, where, "action matrix size");
  if constexpr (is_finite_field_v<F>) {
    std::uint64_t total = count_vectors(f, n, 1ULL << 20, where);
    auto bad = find_first(
        total,
        [&](std::uint64_t idx) {
          auto w = enumerate_vector(f, n, idx);
          auto p = vec::first_nonzero(f, w);
          if (!p || !f.is_one(w[*p])) return false;
          Subspace<F> sp(f, n);
          for (const auto& mat : action) sp.add(matvec(mat, w));
          return sp.dim() < n;
        },
        exec);
    if (bad) fail(ErrorKind::NotSimpleModule, where, "A*w is a proper submodule for some nonzero w");
  } else {
    (void)exec;
    fail(ErrorKind::InfiniteBaseField, where, "simplicity is checked by enumeration over finite fields");
  }
  Matrix<F> M(f, n, d);
  for (std::size_t i = 0; i < d; ++i) {
    auto col = matvec(action[i], m);
    for (std::size_t r = 0; r < n; ++r) M.at(r, i) = col[r];
  }
  AnnMaximalResult<F> res;
  res.annihilator = LeftIdealFD<F>::from_basis(A, kernel_basis(M));
  res.codim = d - res.annihilator.dim();
  res.maximal = res.codim == n;
  return res;
}

namespace {

template <class F>
Vec<F> module_scale(const FinDimAlgebra<F>& R, std::size_t rank, const Vec<F>& r, const Vec<F>& x) {
  std::size_t d = R.dim();
  Vec<F> out;
  out.reserve(rank * d);
  for (std::size_t c = 0; c < rank; ++c) {
    Vec<F> comp(x.begin() + static_cast<long>(c * d), x.begin() + static_cast<long>((c + 1) * d));
    auto p = R.mul(r, comp);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

template <class F>
void check_submodule(const FinDimAlgebra<F>& R, std::size_t rank, const Subspace<F>& N, const char* where) {
  if (!R.is_commutative()) fail(ErrorKind::InvalidArgument, where, "ring must be commutative");
  if (N.ambient() != rank * R.dim()) fail(ErrorKind::DimensionMismatch, where, "submodule ambient dimension");
  for (const auto& v : N.basis())
    for (std::size_t i = 0; i < R.dim(); ++i)
      if (!N.contains(module_scale(R, rank, R.basis(i), v)))
        fail(ErrorKind::InvalidArgument, where, "subspace is not a submodule");
}

}  // namespace

template <class F>
PredicateResult<F> is_semiprime_submodule(const FinDimAlgebra<F>& R, std::size_t rank, const Subspace<F>& N,
                                          const PredicateOptions& opt) {
  const char* where = "findim::is_semiprime_submodule";
  check_submodule(R, rank, N, where);
  std::size_t d = R.dim();
  auto pred = [&](const Vec<F>& x) {
    if (N.contains(x)) return false;
    for (std::size_t c = 0; c < rank; ++c) {
      Vec<F> w(x.begin() + static_cast<long>(c * d), x.begin() + static_cast<long>((c + 1) * d));
      if (!N.contains(module_scale(R, rank, w, x))) return false;
    }
    return true;
  };
  auto [hit, info] = scan_vectors(R.field(), rank * d, opt, where, pred);
  PredicateResult<F> res;
  res.exhaustive = info.first;
  res.checked = info.second;
  res.holds = !hit;
  res.witness_a = hit;
  return res;
}

template <class F>
PredicateResult<F> is_prime_submodule(const FinDimAlgebra<F>& R, std::size_t rank, const Subspace<F>& N,
                                      const PredicateOptions& opt) {
  const char* where = "findim::is_prime_submodule";
  check_submodule(R, rank, N, where);
  const F& f = R.field();
  std::size_t d = R.dim(), n = rank * d;
  std::size_t qd = n - N.dim();
  auto witness = [&](const Vec<F>& r) -> std::optional<Vec<F>> {
    bool kills = true;
    for (std::size_t i = 0; i < n && kills; ++i)
      if (!N.contains(module_scale(R, rank, r, vec::unit(f, n, i)))) kills = false;
    if (kills) return std::nullopt;
    Matrix<F> m(f, qd, n);
    for (std::size_t i = 0; i < n; ++i) {
      auto qc = N.quotient_coords(module_scale(R, rank, r, vec::unit(f, n, i)));
      for (std::size_t t = 0; t < qd; ++t) m.at(t, i) = qc[t];
    }
    for (auto& x : kernel_basis(m))
      if (!N.contains(x)) return x;
    return std::nullopt;
  };
  auto [hit, info] = scan_vectors(f, d, opt, where, [&](const Vec<F>& r) { return witness(r).has_value(); });
  PredicateResult<F> res;
  res.exhaustive = info.first;
  res.checked = info.second;
  res.holds = !hit;
  if (hit) {
    res.witness_a = hit;
    res.witness_b = witness(*hit);
  }
  return res;
}

// ---------------------------------------------------------------------------
// lattices

namespace {

template <class F>
Subspace<F> two_sided_closure(const FinDimAlgebra<F>& a, Subspace<F> s) {
  std::deque<Vec<F>> queue(s.basis().begin(), s.basis().end());
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (auto w : {a.mul(a.basis(i), v), a.mul(v, a.basis(i))})
        if (s.add(w)) queue.push_back(w);
    }
  }
  return s;
}

template <class F>
std::vector<LeftIdealFD<F>> enumerate_ideals(const FinDimAlgebra<F>& a, std::uint64_t limit, bool two_sided) {
  const char* where = "findim::enumerate_ideals";
  if constexpr (!is_finite_field_v<F>) {
    (void)a;
    (void)limit;
    (void)two_sided;
    fail(ErrorKind::InfiniteBaseField, where, "ideal enumeration needs a finite field");
  } else {
    const F& f = a.field();
    std::size_t d = a.dim();
    std::uint64_t total = count_vectors(f, d, limit, where);
    std::map<std::string, Subspace<F>> seen;
    std::deque<Subspace<F>> queue;
    Subspace<F> zero(f, d);
    seen.emplace(subspace_key(zero), zero);
    queue.push_back(zero);
    while (!queue.empty()) {
      auto J = queue.front();
      queue.pop_front();
      for (std::uint64_t idx = 1; idx < total; ++idx) {
        auto v = enumerate_vector(f, d, idx);
        auto p = vec::first_nonzero(f, v);
        if (!f.is_one(v[*p]) || J.contains(v)) continue;
        Subspace<F> next = J;
        if (two_sided) {
          next.add(v);
          next = two_sided_closure(a, next);
        } else {
          std::vector<Vec<F>> gens = J.basis();
          gens.push_back(v);
          next = LeftIdealFD<F>::generated(a, gens).space();
        }
        auto key = subspace_key(next);
        if (seen.count(key)) continue;
        seen.emplace(key, next);
        queue.push_back(next);
      }
    }
    std::vector<LeftIdealFD<F>> out;
    for (auto& [key, s] : seen) out.push_back(LeftIdealFD<F>::from_basis(a, s.basis()));
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.dim() < y.dim(); });
    return out;
  }
}

}  // namespace

template <class F>
std::vector<LeftIdealFD<F>> enumerate_left_ideals(const FinDimAlgebra<F>& a, std::uint64_t limit) {
  return enumerate_ideals(a, limit, false);
}

template <class F>
std::vector<LeftIdealFD<F>> enumerate_two_sided_ideals(const FinDimAlgebra<F>& a, std::uint64_t limit) {
  return enumerate_ideals(a, limit, true);
}

template <class F>
std::vector<LeftIdealFD<F>> maximal_elements(const std::vector<LeftIdealFD<F>>& ideals) {
  std::vector<LeftIdealFD<F>> out;
  for (const auto& I : ideals) {
    if (I.dim() == I.algebra().dim()) continue;
    bool maximal = true;
    for (const auto& J : ideals) {
      if (J.dim() <= I.dim() || J.dim() == J.algebra().dim()) continue;
      if (J.space().contains_space(I.space())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(I);
  }
  return out;
}

#define NULLSATZ_FINDIM_INSTANTIATE(F)                                                                             \
  template class FinDimAlgebra<F>;                                                                                 \
  template FinDimAlgebra<F> matrix_algebra(const F&, std::size_t);                                                 \
  template FinDimAlgebra<F> dual_numbers(const F&);                                                                \
  template FinDimAlgebra<F> polynomial_quotient_algebra(const F&, const std::vector<F::Elem>&, const std::string&); \
  template FinDimAlgebra<F> cyclic_group_algebra(const F&, std::size_t);                                           \
  template FinDimAlgebra<F> upper_triangular(const F&, std::size_t);                                               \
  template FinDimAlgebra<F> quaternion_algebra(const F&, const F::Elem&, const F::Elem&);                          \
  template FinDimAlgebra<F> restrict_scalars(const F&, std::size_t, const std::vector<F::Elem>&,                   \
                                             const std::vector<F::Elem>&, const std::vector<std::string>&);        \
  template std::vector<Vec<F>> radical(const FinDimAlgebra<F>&, RadicalMethod);                                    \
  template Subspace<F> center(const FinDimAlgebra<F>&);                                                            \
  template struct SimpleFactor<F>;                                                                                 \
  template WedderburnData<F> wedderburn(const FinDimAlgebra<F>&, std::uint64_t, int, RadicalMethod);               \
  template Vec<F> dual_functional(const FinDimAlgebra<F>&, const SimpleFactor<F>&, std::size_t, std::size_t,        \
                                  const Vec<F>&);                                                                  \
  template DualBasisData<F> xi_preimage(const FinDimAlgebra<F>&, std::uint64_t);                                   \
  template Vec<F> xi_apply(const FinDimAlgebra<F>&, const std::vector<XiTerm<F>>&, const Vec<F>&);                 \
  template class LeftIdealFD<F>;                                                                                   \
  template LeftIdealFD<F> ideal_quotient(const LeftIdealFD<F>&);                                                   \
  template Subspace<F> perp(const LeftIdealFD<F>&);                                                                \
  template DoubleAnnihilatorResult<F> double_annihilator_check(const LeftIdealFD<F>&);                             \
  template PredicateResult<F> is_semiprime_left(const LeftIdealFD<F>&, const PredicateOptions&);                   \
  template PredicateResult<F> is_prime_left(const LeftIdealFD<F>&, const PredicateOptions&);                       \
  template AnnMaximalResult<F> ann_maximal_check(const FinDimAlgebra<F>&, const std::vector<Matrix<F>>&,           \
                                                 const Vec<F>&, Exec);                                             \
  template PredicateResult<F> is_semiprime_submodule(const FinDimAlgebra<F>&, std::size_t, const Subspace<F>&,     \
                                                     const PredicateOptions&);                                     \
  template PredicateResult<F> is_prime_submodule(const FinDimAlgebra<F>&, std::size_t, const Subspace<F>&,         \
                                                 const PredicateOptions&);                                         \
  template std::vector<LeftIdealFD<F>> enumerate_left_ideals(const FinDimAlgebra<F>&, std::uint64_t);              \
  template std::vector<LeftIdealFD<F>> enumerate_two_sided_ideals(const FinDimAlgebra<F>&, std::uint64_t);         \
  template std::vector<LeftIdealFD<F>> maximal_elements(const std::vector<LeftIdealFD<F>>&);

NULLSATZ_FINDIM_INSTANTIATE(FiniteField)
NULLSATZ_FINDIM_INSTANTIATE(NumberField)

}  // namespace nullsatz
