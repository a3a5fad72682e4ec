#include "nullsatz/leftideal.hpp"

#include <algorithm>
#include <map>

namespace nullsatz {

namespace {

template <class F>
AlgPoly<F> from_map(const FinDimAlgebra<F>& alg, std::size_t n, std::map<Monomial, Vec<F>>& acc) {
  AlgPoly<F> p(alg, n);
  for (auto& [m, c] : acc)
    if (!vec::is_zero(alg.field(), c)) p.terms.emplace_back(m, std::move(c));
  return p;
}

template <class F>
void check_same(const AlgPoly<F>& a, const AlgPoly<F>& b, const char* where) {
  if (a.nvars != b.nvars || a.alg != b.alg) fail(ErrorKind::MixedParents, where, "operands live in different rings");
}

}  // namespace

// ---------------------------------------------------------------------------
// AlgPoly

template <class F>
AlgPoly<F> AlgPoly<F>::constant(const FinDimAlgebra<F>& a, std::size_t n, const Vec<F>& c) {
  return term(a, n, Monomial::one(), c);
}

template <class F>
AlgPoly<F> AlgPoly<F>::variable(const FinDimAlgebra<F>& a, std::size_t n, std::size_t l) {
  if (l >= n) fail(ErrorKind::InvalidArgument, "leftideal::variable", "variable index out of range");
  return term(a, n, Monomial::var(l), a.unit());
}

template <class F>
AlgPoly<F> AlgPoly<F>::term(const FinDimAlgebra<F>& a, std::size_t n, const Monomial& m, const Vec<F>& c) {
  if (n > kMaxVars) fail(ErrorKind::NotSupported, "leftideal::algpoly", "at most 8 variables");
  if (c.size() != a.dim()) fail(ErrorKind::DimensionMismatch, "leftideal::algpoly", "coefficient length differs from dim A");
  AlgPoly p(a, n);
  if (!vec::is_zero(a.field(), c)) p.terms.emplace_back(m, c);
  return p;
}

template <class F>
int AlgPoly<F>::total_degree() const {
  int d = -1;
  for (auto& [m, c] : terms) d = std::max(d, int(m.deg));
  return d;
}

template <class F>
Vec<F> AlgPoly<F>::coeff(const Monomial& m) const {
  for (auto& [t, c] : terms)
    if (t == m) return c;
  return alg.zero();
}

template <class F>
std::string AlgPoly<F>::to_string(const std::vector<std::string>& vars) const {
  if (terms.empty()) return "0";
  auto sorted = terms;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return compare_monomials(MonoOrder::DegRevLex, a.first, b.first) > 0;
  });
  std::string out;
  for (auto& [m, c] : sorted) {
    std::string co = alg.element_to_string(c);
    bool neg = false;
    if (co.find(' ') != std::string::npos) {
      co = "(" + co + ")";
    } else if (co[0] == '-') {
      neg = true;
      co = co.substr(1);
    }
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    out += co;
    if (m.deg > 0) out += "*" + m.to_string(vars);
  }
  return out;
}

namespace algpoly {

template <class F>
AlgPoly<F> add(const AlgPoly<F>& a, const AlgPoly<F>& b) {
  check_same(a, b, "leftideal::add");
  std::map<Monomial, Vec<F>> acc;
  for (auto& [m, c] : a.terms) acc[m] = c;
  for (auto& [m, c] : b.terms) {
    auto it = acc.find(m);
    if (it == acc.end()) acc[m] = c;
    else it->second = vec::add(a.alg.field(), it->second, c);
  }
  return from_map(a.alg, a.nvars, acc);
}

template <class F>
AlgPoly<F> scale(const AlgPoly<F>& a, const typename F::Elem& s) {
  AlgPoly<F> r(a.alg, a.nvars);
  if (a.alg.field().is_zero(s)) return r;
  for (auto& [m, c] : a.terms) r.terms.emplace_back(m, vec::scale(a.alg.field(), c, s));
  return r;
}

template <class F>
AlgPoly<F> sub(const AlgPoly<F>& a, const AlgPoly<F>& b) {
  return add(a, scale(b, a.alg.field().neg(a.alg.field().one())));
}

template <class F>
AlgPoly<F> mul(const AlgPoly<F>& a, const AlgPoly<F>& b) {
  check_same(a, b, "leftideal::mul");
  std::map<Monomial, Vec<F>> acc;
  for (auto& [m1, c1] : a.terms)
    for (auto& [m2, c2] : b.terms) {
      auto prod = a.alg.mul(c1, c2);
      auto m = m1 * m2;
      auto it = acc.find(m);
      if (it == acc.end()) acc[m] = std::move(prod);
      else it->second = vec::add(a.alg.field(), it->second, prod);
    }
  return from_map(a.alg, a.nvars, acc);
}

template <class F>
AlgPoly<F> mul_poly(const AlgPoly<F>& a, const MPoly<F>& r) {
  std::map<Monomial, Vec<F>> acc;
  const F& f = a.alg.field();
  for (auto& [m1, c1] : a.terms)
    for (auto& [m2, s] : r.terms) {
      auto prod = vec::scale(f, c1, s);
      auto m = m1 * m2;
      auto it = acc.find(m);
      if (it == acc.end()) acc[m] = std::move(prod);
      else it->second = vec::add(f, it->second, prod);
    }
  return from_map(a.alg, a.nvars, acc);
}

template <class F>
ModVector<F> to_module(const AlgPoly<F>& a) {
  const F& f = a.alg.field();
  ModVector<F> v(f, a.nvars, a.alg.dim());
  for (auto& [m, c] : a.terms)
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!f.is_zero(c[i])) v.comps[i].terms.emplace_back(m, c[i]);
  return v;
}

template <class F>
AlgPoly<F> from_module(const FinDimAlgebra<F>& alg, const ModVector<F>& v) {
  if (v.rank() != alg.dim()) fail(ErrorKind::RankMismatch, "leftideal::from_module", "rank differs from dim A");
  std::map<Monomial, Vec<F>> acc;
  for (std::size_t i = 0; i < v.rank(); ++i)
    for (auto& [m, x] : v.comps[i].terms) {
      auto it = acc.find(m);
      if (it == acc.end()) it = acc.emplace(m, alg.zero()).first;
      it->second[i] = x;
    }
  return from_map(alg, v.nvars, acc);
}

template <class F>
AlgPoly<F> from_term(const FinDimAlgebra<F>& alg, std::size_t nvars, const Term& t) {
  return AlgPoly<F>::term(alg, nvars, t.m, alg.basis(t.comp));
}

template <class F>
AlgPoly<F> random(const FinDimAlgebra<F>& alg, std::size_t nvars, int maxdeg, std::mt19937_64& rng, int terms) {
  AlgPoly<F> p(alg, nvars);
  std::uniform_int_distribution<int> deg(0, maxdeg);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int d = nvars ? deg(rng) : 0;
    for (int i = 0; i < d; ++i) m = m * Monomial::var(rng() % nvars);
    Vec<F> c(alg.dim());
    for (auto& x : c) x = alg.field().random(rng);
    p = add(p, AlgPoly<F>::term(alg, nvars, m, c));
  }
  return p;
}

}  // namespace algpoly

// ---------------------------------------------------------------------------
// LeftIdeal

template <class F>
LeftIdeal<F> LeftIdeal<F>::generate(const FinDimAlgebra<F>& alg, std::size_t nvars, const std::vector<AlgPoly<F>>& gens,
                                    ModuleOrder order, GbOptions opt) {
  std::vector<ModVector<F>> mods;
  for (auto& g : gens) {
    if (g.alg != alg || g.nvars != nvars)
      fail(ErrorKind::MixedParents, "leftideal::generate", "generator over a different ring");
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      auto v = algpoly::to_module(algpoly::mul(AlgPoly<F>::basis(alg, nvars, i), g));
      if (!v.is_zero()) mods.push_back(std::move(v));
    }
  }
  auto backing = Submodule<F>::generate(alg.field(), nvars, alg.dim(), std::move(mods), order, opt);
  LeftIdeal out = from_backing(alg, std::move(backing));
  out.gens_ = gens;
  return out;
}

template <class F>
LeftIdeal<F> LeftIdeal<F>::from_backing(const FinDimAlgebra<F>& alg, Submodule<F> backing) {
  if (backing.rank() != alg.dim() || backing.field() != alg.field())
    fail(ErrorKind::MixedParents, "leftideal::from_backing", "module does not match the algebra");
  for (auto& v : backing.basis())
    for (std::size_t i = 0; i < alg.dim(); ++i)
      if (!backing.contains(modvec::apply_matrix(alg.left_basis_mult(i), v)))
        fail(ErrorKind::InvalidArgument, "leftideal::from_backing", "module is not closed under left multiplication");
  LeftIdeal out;
  out.alg_ = alg;
  out.backing_ = std::move(backing);
  for (auto& v : out.backing_.basis()) out.gens_.push_back(algpoly::from_module(alg, v));
  return out;
}

template <class F>
LeftIdeal<F> LeftIdeal<F>::zero(const FinDimAlgebra<F>& alg, std::size_t nvars, ModuleOrder order) {
  return from_backing(alg, Submodule<F>::zero(alg.field(), nvars, alg.dim(), order));
}

template <class F>
LeftIdeal<F> LeftIdeal<F>::full(const FinDimAlgebra<F>& alg, std::size_t nvars, ModuleOrder order) {
  return from_backing(alg, Submodule<F>::full(alg.field(), nvars, alg.dim(), order));
}

template <class F>
std::vector<AlgPoly<F>> LeftIdeal<F>::basis() const {
  std::vector<AlgPoly<F>> out;
  for (auto& v : backing_.basis()) out.push_back(algpoly::from_module(alg_, v));
  return out;
}

template <class F>
LeftIdeal<F> sum_ideals(const LeftIdeal<F>& a, const LeftIdeal<F>& b) {
  if (a.algebra() != b.algebra()) fail(ErrorKind::MixedParents, "leftideal::sum", "different algebras");
  return LeftIdeal<F>::from_backing(a.algebra(), sum_submodules(a.backing(), b.backing()));
}

template <class F>
LeftIdeal<F> intersect_ideals(const LeftIdeal<F>& a, const LeftIdeal<F>& b) {
  if (a.algebra() != b.algebra()) fail(ErrorKind::MixedParents, "leftideal::intersect", "different algebras");
  return LeftIdeal<F>::from_backing(a.algebra(), intersect_submodules(a.backing(), b.backing()));
}

// ---------------------------------------------------------------------------
// evaluation and directional ideals

namespace {

template <class F>
const SimpleFactor<F>& factor_of(const FinDimAlgebra<F>& alg, std::size_t j, const char* where) {
  const auto& wd = alg.wedderburn_data();
  if (j >= wd.factors.size()) fail(ErrorKind::FactorIndexOutOfRange, where, "no factor " + std::to_string(j));
  return wd.factors[j];
}

template <class F>
Matrix<F> map_matrix(const Matrix<F>& m, const Embedding<F>& emb) {
  Matrix<F> r(emb.target(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) r.at(i, c) = emb(m.at(i, c));
  return r;
}

template <class F>
typename F::Elem monomial_value(const F& k, const Monomial& m, const std::vector<typename F::Elem>& xi) {
  auto v = k.one();
  for (std::size_t l = 0; l < xi.size(); ++l)
    if (m.e[l]) v = k.mul(v, k.pow(xi[l], m.e[l]));
  return v;
}

}  // namespace

template <class F>
Matrix<F> evaluate(const AlgPoly<F>& a, std::size_t j, const Embedding<F>& emb, const std::vector<typename F::Elem>& xi) {
  const auto& fac = factor_of(a.alg, j, "leftideal::evaluate");
  if (xi.size() != a.nvars) fail(ErrorKind::DimensionMismatch, "leftideal::evaluate", "point has the wrong length");
  if (emb.source() != fac.center)
    fail(ErrorKind::MixedParents, "leftideal::evaluate", "embedding does not start at the factor centre");
  const F& k = emb.target();
  Matrix<F> out(k, fac.k, fac.k);
  for (auto& [m, c] : a.terms) out = matadd(out, matscale(map_matrix(fac.theta_of(c), emb), monomial_value(k, m, xi)));
  return out;
}

template <class F>
LinearModuleMap<F> directional_map(const FinDimAlgebra<F>& alg, std::size_t nvars,
                                   const std::vector<DirectionalPoint<F>>& points) {
  const char* where = "leftideal::directional_map";
  const F& base = alg.field();
  LinearModuleMap<F> map;
  map.rank = alg.dim();
  map.nvars = nvars;
  // block offsets per point
  std::vector<std::size_t> offset;
  for (auto& p : points) {
    const auto& fac = factor_of(alg, p.factor, where);
    const F& k = p.field;
    if (p.xi.size() != nvars) fail(ErrorKind::DimensionMismatch, where, "point has the wrong length");
    if (p.v.size() != fac.k) fail(ErrorKind::DimensionMismatch, where, "direction has the wrong length");
    if (vec::is_zero(k, p.v)) fail(ErrorKind::ZeroVector, where, "direction v must be nonzero");
    if (p.embedding.source() != fac.center || p.embedding.target() != k)
      fail(ErrorKind::MixedParents, where, "embedding does not match the factor centre and point field");
    offset.push_back(map.dim);
    map.dim += fac.k * static_cast<std::size_t>(k.degree());
  }
  map.images.assign(alg.dim(), vec::zeros(base, map.dim));
  map.action.assign(nvars, Matrix<F>(base, map.dim, map.dim));
  for (std::size_t q = 0; q < points.size(); ++q) {
    const auto& p = points[q];
    const auto& fac = factor_of(alg, p.factor, where);
    const F& k = p.field;
    std::size_t e = static_cast<std::size_t>(k.degree()), off = offset[q];
    // K^k over the prime field: coordinate (r, t) -> off + r * e + t
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      auto w = matvec(map_matrix(fac.theta_of(alg.basis(i)), p.embedding), p.v);
      for (std::size_t r = 0; r < fac.k; ++r) {
        auto c = k.to_prime(w[r]);
        for (std::size_t t = 0; t < e; ++t) map.images[i][off + r * e + t] = c[t];
      }
    }
    for (std::size_t l = 0; l < nvars; ++l)
      for (std::size_t t = 0; t < e; ++t) {
        auto col = k.to_prime(k.mul(p.xi[l], k.from_prime(vec::unit(base, e, t))));
        for (std::size_t r = 0; r < fac.k; ++r)
          for (std::size_t s = 0; s < e; ++s) map.action[l].at(off + r * e + s, off + r * e + t) = col[s];
      }
  }
  return map;
}

template <class F>
LeftIdeal<F> directional_ideal(const FinDimAlgebra<F>& alg, std::size_t nvars, const DirectionalPoint<F>& p,
                               ModuleOrder order) {
  auto map = directional_map(alg, nvars, std::vector<DirectionalPoint<F>>{p});
  return LeftIdeal<F>::from_backing(alg, kernel_submodule(alg.field(), map, order));
}

// ---------------------------------------------------------------------------
// transport

template <class F>
AlgebraMorphism<F> AlgebraMorphism<F>::create(FinDimAlgebra<F> source, FinDimAlgebra<F> target, Matrix<F> map) {
  const char* where = "leftideal::morphism";
  if (map.rows() != target.dim() || map.cols() != source.dim())
    fail(ErrorKind::DimensionMismatch, where, "matrix shape must be dim B x dim A");
  AlgebraMorphism m{std::move(source), std::move(target), std::move(map)};
  if (m(m.source.unit()) != m.target.unit()) fail(ErrorKind::InvalidArgument, where, "unit is not preserved");
  for (std::size_t i = 0; i < m.source.dim(); ++i)
    for (std::size_t j = 0; j < m.source.dim(); ++j)
      if (m(m.source.mul(m.source.basis(i), m.source.basis(j))) != m.target.mul(m(m.source.basis(i)), m(m.source.basis(j))))
        fail(ErrorKind::InvalidArgument, where, "map is not multiplicative");
  return m;
}

template <class F>
AlgebraMorphism<F> quotient_morphism(const FinDimAlgebra<F>& a, const std::vector<Vec<F>>& ideal) {
  const char* where = "leftideal::quotient_morphism";
  const F& f = a.field();
  auto s = Subspace<F>::span(f, a.dim(), ideal);
  for (auto& v : s.basis())
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!s.contains(a.mul(a.basis(i), v)) || !s.contains(a.mul(v, a.basis(i))))
        fail(ErrorKind::InvalidArgument, where, "span is not a two-sided ideal");
  auto keep = s.non_pivots();
  std::size_t qd = keep.size();
  if (qd == 0) fail(ErrorKind::InvalidArgument, where, "quotient by the whole algebra");
  std::vector<typename F::Elem> c(qd * qd * qd, f.zero());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < qd; ++i) {
    names.push_back(a.names()[keep[i]]);
    for (std::size_t j = 0; j < qd; ++j) {
      auto q = s.quotient_coords(a.mul(a.basis(keep[i]), a.basis(keep[j])));
      for (std::size_t t = 0; t < qd; ++t) c[(i * qd + j) * qd + t] = q[t];
    }
  }
  auto b = FinDimAlgebra<F>::create(f, qd, std::move(c), s.quotient_coords(a.unit()), names);
  Matrix<F> m(f, qd, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto q = s.quotient_coords(a.basis(i));
    for (std::size_t t = 0; t < qd; ++t) m.at(t, i) = q[t];
  }
  return AlgebraMorphism<F>::create(a, b, std::move(m));
}

template <class F>
LeftIdeal<F> transport(const AlgebraMorphism<F>& pi, const LeftIdeal<F>& i, TransportDirection dir) {
  const char* where = "leftideal::transport";
  if (!pi.is_surjective()) fail(ErrorKind::NotSurjective, where, "morphism is not surjective");
  if (dir == TransportDirection::Image) {
    if (i.algebra() != pi.source) fail(ErrorKind::MixedParents, where, "ideal is not over the source algebra");
    return LeftIdeal<F>::from_backing(pi.target, image_submodule(pi.map, i.backing()));
  }
  if (i.algebra() != pi.target) fail(ErrorKind::MixedParents, where, "ideal is not over the target algebra");
  return LeftIdeal<F>::from_backing(pi.source, preimage_submodule(pi.map, i.backing()));
}

// ---------------------------------------------------------------------------
// predicates

template <class F>
IdealPredicateResult<F> is_semiprime_left_witnessed(const LeftIdeal<F>& I, const std::vector<AlgPoly<F>>& candidates,
                                                    Exec exec) {
  const auto& alg = I.algebra();
  auto violates = [&](std::uint64_t t) {
    const auto& a = candidates[t];
    if (I.contains(a)) return false;
    for (std::size_t i = 0; i < alg.dim(); ++i)
      if (!I.contains(algpoly::mul(algpoly::mul(a, AlgPoly<F>::basis(alg, a.nvars, i)), a))) return false;
    return true;
  };
  IdealPredicateResult<F> res;
  auto hit = find_first(candidates.size(), violates, exec);
  res.checked = hit ? *hit + 1 : candidates.size();
  if (hit) {
    res.holds = false;
    res.witness_a = candidates[*hit];
  }
  return res;
}

template <class F>
QuotientModule<F> quotient_module(const LeftIdeal<F>& I) {
  auto info = zero_dim_info(I.backing());
  if (!info.zero_dimensional)
    fail(ErrorKind::NotZeroDimensional, "leftideal::quotient_module", "A[x]/I is infinite-dimensional");
  QuotientModule<F> m;
  m.dim = info.codim;
  m.standard_terms = info.standard_terms;
  m.var_action = info.multiplication;
  const auto& alg = I.algebra();
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    Matrix<F> act(alg.field(), m.dim, m.dim);
    for (std::size_t j = 0; j < m.dim; ++j) {
      auto img = algpoly::mul(AlgPoly<F>::basis(alg, I.nvars(), i), algpoly::from_term(alg, I.nvars(), m.standard_terms[j]));
      auto col = quotient_coords(I, m, img);
      for (std::size_t r = 0; r < m.dim; ++r) act.at(r, j) = col[r];
    }
    m.basis_action.push_back(std::move(act));
  }
  m.one = quotient_coords(I, m, AlgPoly<F>::one(alg, I.nvars()));
  return m;
}

template <class F>
Vec<F> quotient_coords(const LeftIdeal<F>& I, const QuotientModule<F>& m, const AlgPoly<F>& a) {
  auto nf = I.backing().normal_form(algpoly::to_module(a));
  Vec<F> out = vec::zeros(I.algebra().field(), m.dim);
  for (std::size_t c = 0; c < nf.rank(); ++c)
    for (auto& [mono, x] : nf.comps[c].terms) {
      Term t{mono, static_cast<std::uint32_t>(c)};
      auto it = std::find(m.standard_terms.begin(), m.standard_terms.end(), t);
      if (it == m.standard_terms.end())
        fail(ErrorKind::InternalInconsistency, "leftideal::quotient_coords", "normal form left the staircase");
      out[it - m.standard_terms.begin()] = x;
    }
  return out;
}

template <class F>
AlgPoly<F> lift_from_quotient(const LeftIdeal<F>& I, const QuotientModule<F>& m, const Vec<F>& u) {
  const auto& alg = I.algebra();
  AlgPoly<F> a(alg, I.nvars());
  for (std::size_t t = 0; t < m.dim; ++t)
    if (!alg.field().is_zero(u[t]))
      a = algpoly::add(a, algpoly::scale(algpoly::from_term(alg, I.nvars(), m.standard_terms[t]), u[t]));
  return a;
}

namespace {

// image of A[x] in End(M): span of lambda(b_i) X^mu, with a representative for each basis matrix
template <class F>
struct ImageAlgebra {
  std::vector<Matrix<F>> mats;
  std::vector<AlgPoly<F>> reps;
  std::vector<Vec<F>> on_one;  // mats[t] * one
};

template <class F>
ImageAlgebra<F> image_algebra(const LeftIdeal<F>& I, const QuotientModule<F>& m) {
  const auto& alg = I.algebra();
  const F& f = alg.field();
  ImageAlgebra<F> out;
  Subspace<F> span(f, m.dim * m.dim);
  auto push = [&](Matrix<F> x, AlgPoly<F> rep) {
    if (!span.add(x.data())) return;
    out.on_one.push_back(matvec(x, m.one));
    out.mats.push_back(std::move(x));
    out.reps.push_back(std::move(rep));
  };
  for (std::size_t i = 0; i < alg.dim(); ++i) push(m.basis_action[i], AlgPoly<F>::basis(alg, I.nvars(), i));
  for (std::size_t t = 0; t < out.mats.size(); ++t)
    for (std::size_t l = 0; l < m.var_action.size(); ++l) {
      auto x = matmul(m.var_action[l], out.mats[t]);
      auto rep = algpoly::mul(AlgPoly<F>::variable(alg, I.nvars(), l), out.reps[t]);
      push(std::move(x), std::move(rep));
    }
  return out;
}

// basis of the cyclic submodule A[x] u
template <class F>
std::vector<Vec<F>> cyclic_span(const F& f, const ImageAlgebra<F>& lam, const Vec<F>& u) {
  Subspace<F> s(f, u.size());
  for (auto& x : lam.mats) s.add(matvec(x, u));
  return s.basis();
}

// coefficient rows of lambda -> lambda(w) for every w
template <class F>
Matrix<F> annihilator_system(const F& f, const ImageAlgebra<F>& lam, const std::vector<Vec<F>>& ws, std::size_t dim) {
  Matrix<F> sys(f, ws.size() * dim, lam.mats.size());
  for (std::size_t w = 0; w < ws.size(); ++w)
    for (std::size_t t = 0; t < lam.mats.size(); ++t) {
      auto img = matvec(lam.mats[t], ws[w]);
      for (std::size_t r = 0; r < dim; ++r) sys.at(w * dim + r, t) = img[r];
    }
  return sys;
}

template <class F>
AlgPoly<F> combine(const LeftIdeal<F>& I, const ImageAlgebra<F>& lam, const Vec<F>& c) {
  AlgPoly<F> a(I.algebra(), I.nvars());
  for (std::size_t t = 0; t < c.size(); ++t) a = algpoly::add(a, algpoly::scale(lam.reps[t], c[t]));
  return a;
}

enum class ScanKind { Exhaustive, RandomVectors, None };

template <class F>
ScanKind scan_kind(const F& f, std::size_t dim, const PredicateOptions& opt) {
  if constexpr (is_finite_field_v<F>) {
    long double total = 1;
    for (std::size_t i = 0; i < dim; ++i) total *= static_cast<long double>(f.size());
    bool small = total <= static_cast<long double>(opt.exhaustion_limit);
    if (opt.mode == PredicateMode::Exhaustive && !small)
      fail(ErrorKind::TooLargeForExhaustion, "leftideal::predicate", "|F|^codim exceeds the exhaustion limit");
    if (opt.mode != PredicateMode::Sampled && small) return ScanKind::Exhaustive;
  } else {
    if (opt.mode == PredicateMode::Exhaustive)
      fail(ErrorKind::InfiniteBaseField, "leftideal::predicate", "exhaustive scan needs a finite field");
  }
  return ScanKind::RandomVectors;
}

// Runs pred over nonzero u in M up to scalars (exhaustive) or over random u.
// Returns the hit and fills exhaustive/checked.
template <class F, class Pred>
std::optional<Vec<F>> scan_quotient(const F& f, std::size_t dim, const PredicateOptions& opt,
                                    IdealPredicateResult<F>& res, Pred pred) {
  if (dim == 0) {
    res.exhaustive = true;
    return std::nullopt;
  }
  auto kind = scan_kind(f, dim, opt);
  if constexpr (is_finite_field_v<F>) {
    if (kind == ScanKind::Exhaustive) {
      std::uint64_t total = count_vectors(f, dim, opt.exhaustion_limit, "leftideal::predicate");
      auto normalized = [&](const Vec<F>& u) {
        auto lead = vec::first_nonzero(f, u);
        return lead && f.is_one(u[*lead]);
      };
      auto hit = find_first(total, [&](std::uint64_t i) {
        auto u = enumerate_vector(f, dim, i);
        return normalized(u) && pred(u);
      }, opt.exec);
      res.exhaustive = true;
      res.checked = hit ? *hit + 1 : total;
      if (hit) return enumerate_vector(f, dim, *hit);
      return std::nullopt;
    }
  }
  std::mt19937_64 rng(opt.seed);
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    Vec<F> u(dim);
    for (auto& x : u) x = f.random(rng);
    if (vec::is_zero(f, u)) continue;
    if (pred(u)) {
      res.checked = t + 1;
      return u;
    }
  }
  res.checked = opt.trials;
  return std::nullopt;
}

template <class F>
bool finite_quotient(const LeftIdeal<F>& I) {
  return zero_dim_info(I.backing()).zero_dimensional;
}

}  // namespace

template <class F>
IdealPredicateResult<F> is_semiprime_left(const LeftIdeal<F>& I, const PredicateOptions& opt) {
  const F& f = I.algebra().field();
  IdealPredicateResult<F> res;
  if (!finite_quotient(I)) {
    // infinite quotient: random candidates only
    std::mt19937_64 rng(opt.seed);
    std::vector<AlgPoly<F>> cands;
    for (std::uint64_t t = 0; t < opt.trials; ++t) cands.push_back(algpoly::random(I.algebra(), I.nvars(), 2, rng));
    return is_semiprime_left_witnessed(I, cands, opt.exec);
  }
  auto m = quotient_module(I);
  auto lam = image_algebra(I, m);
  // witness: lambda with lambda(1) = u and lambda(A[x] u) = 0
  auto solve_for = [&](const Vec<F>& u) -> std::optional<Vec<F>> {
    auto sys = annihilator_system(f, lam, cyclic_span(f, lam, u), m.dim);
    Vec<F> rhs = vec::zeros(f, sys.rows());
    for (std::size_t r = 0; r < m.dim; ++r) {
      Vec<F> row(lam.mats.size());
      for (std::size_t t = 0; t < lam.mats.size(); ++t) row[t] = lam.on_one[t][r];
      sys.append_row(row);
      rhs.push_back(u[r]);
    }
    return solve(sys, rhs);
  };
  auto hit = scan_quotient(f, m.dim, opt, res, [&](const Vec<F>& u) { return solve_for(u).has_value(); });
  if (hit) {
    res.holds = false;
    res.witness_a = combine(I, lam, *solve_for(*hit));
  }
  return res;
}

template <class F>
IdealPredicateResult<F> is_prime_left(const LeftIdeal<F>& I, const PredicateOptions& opt) {
  const F& f = I.algebra().field();
  IdealPredicateResult<F> res;
  if (!finite_quotient(I)) {
    // a A b in I with a, b outside I, random pairs
    std::mt19937_64 rng(opt.seed);
    const auto& alg = I.algebra();
    for (std::uint64_t t = 0; t < opt.trials; ++t) {
      auto a = algpoly::random(alg, I.nvars(), 2, rng), b = algpoly::random(alg, I.nvars(), 2, rng);
      if (I.contains(a) || I.contains(b)) continue;
      bool inside = true;
      for (std::size_t i = 0; i < alg.dim() && inside; ++i)
        inside = I.contains(algpoly::mul(algpoly::mul(a, AlgPoly<F>::basis(alg, I.nvars(), i)), b));
      if (inside) {
        res.holds = false;
        res.witness_a = a;
        res.witness_b = b;
        res.checked = t + 1;
        return res;
      }
    }
    res.checked = opt.trials;
    return res;
  }
  auto m = quotient_module(I);
  auto lam = image_algebra(I, m);
  // witness: u != 0 and lambda with lambda(A[x] u) = 0, lambda(1) != 0
  auto find_lambda = [&](const Vec<F>& u) -> std::optional<Vec<F>> {
    auto sys = annihilator_system(f, lam, cyclic_span(f, lam, u), m.dim);
    for (auto& c : kernel_basis(sys)) {
      Vec<F> at_one = vec::zeros(f, m.dim);
      for (std::size_t t = 0; t < c.size(); ++t) vec::axpy(f, at_one, c[t], lam.on_one[t]);
      if (!vec::is_zero(f, at_one)) return c;
    }
    return std::nullopt;
  };
  auto hit = scan_quotient(f, m.dim, opt, res, [&](const Vec<F>& u) { return find_lambda(u).has_value(); });
  if (hit) {
    res.holds = false;
    res.witness_a = combine(I, lam, *find_lambda(*hit));
    res.witness_b = lift_from_quotient(I, m, *hit);
  }
  return res;
}

template <class F>
IdealPredicateResult<F> is_maximal_left(const LeftIdeal<F>& I, const PredicateOptions& opt) {
  const F& f = I.algebra().field();
  IdealPredicateResult<F> res;
  auto m = quotient_module(I);
  if (m.dim == 0) {
    res.holds = false;
    res.exhaustive = true;
    return res;
  }
  auto lam = image_algebra(I, m);
  auto hit = scan_quotient(f, m.dim, opt, res,
                           [&](const Vec<F>& u) { return cyclic_span(f, lam, u).size() < m.dim; });
  if (hit) {
    res.holds = false;
    res.witness_b = lift_from_quotient(I, m, *hit);
  }
  return res;
}

template <class F>
FinDimAlgebra<F> annihilator_quotient(const LeftIdeal<F>& I) {
  const F& f = I.algebra().field();
  auto m = quotient_module(I);
  if (m.dim == 0) fail(ErrorKind::InvalidArgument, "leftideal::annihilator_quotient", "ideal is the full ring");
  auto lam = image_algebra(I, m);
  std::size_t d = lam.mats.size();
  std::vector<Vec<F>> flat;
  for (auto& x : lam.mats) flat.push_back(x.data());
  SpanCoordinates<F> coords(f, flat);
  auto coords_of = [&](const Matrix<F>& x) {
    auto c = coords.coords(x.data());
    if (!c) fail(ErrorKind::InternalInconsistency, "leftideal::annihilator_quotient", "image is not closed");
    return *c;
  };
  std::vector<typename F::Elem> c(d * d * d, f.zero());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i) {
    names.push_back("l" + std::to_string(i));
    for (std::size_t j = 0; j < d; ++j) {
      auto prod = coords_of(matmul(lam.mats[i], lam.mats[j]));
      for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = prod[k];
    }
  }
  return FinDimAlgebra<F>::create(f, d, std::move(c), coords_of(Matrix<F>::identity(f, m.dim)), std::move(names));
}

template <class F>
bool annihilator_maximal(const LeftIdeal<F>& I) {
  auto q = annihilator_quotient(I);
  const auto& wd = q.wedderburn_data();
  return wd.radical.empty() && wd.factors.size() == 1;
}

#define NULLSATZ_LEFTIDEAL_INSTANTIATE(F)                                                                      \
  template struct AlgPoly<F>;                                                                                  \
  template AlgPoly<F> algpoly::add(const AlgPoly<F>&, const AlgPoly<F>&);                                      \
  template AlgPoly<F> algpoly::sub(const AlgPoly<F>&, const AlgPoly<F>&);                                      \
  template AlgPoly<F> algpoly::scale(const AlgPoly<F>&, const F::Elem&);                                       \
  template AlgPoly<F> algpoly::mul(const AlgPoly<F>&, const AlgPoly<F>&);                                      \
  template AlgPoly<F> algpoly::mul_poly(const AlgPoly<F>&, const MPoly<F>&);                                   \
  template ModVector<F> algpoly::to_module(const AlgPoly<F>&);                                                 \
  template AlgPoly<F> algpoly::from_module(const FinDimAlgebra<F>&, const ModVector<F>&);                      \
  template AlgPoly<F> algpoly::from_term(const FinDimAlgebra<F>&, std::size_t, const Term&);                   \
  template AlgPoly<F> algpoly::random(const FinDimAlgebra<F>&, std::size_t, int, std::mt19937_64&, int);       \
  template class LeftIdeal<F>;                                                                                 \
  template LeftIdeal<F> sum_ideals(const LeftIdeal<F>&, const LeftIdeal<F>&);                                  \
  template LeftIdeal<F> intersect_ideals(const LeftIdeal<F>&, const LeftIdeal<F>&);                            \
  template Matrix<F> evaluate(const AlgPoly<F>&, std::size_t, const Embedding<F>&, const std::vector<F::Elem>&); \
  template LinearModuleMap<F> directional_map(const FinDimAlgebra<F>&, std::size_t,                          \
                                             const std::vector<DirectionalPoint<F>>&);                         \
  template LeftIdeal<F> directional_ideal(const FinDimAlgebra<F>&, std::size_t, const DirectionalPoint<F>&,    \
                                          ModuleOrder);                                                        \
  template struct AlgebraMorphism<F>;                                                                          \
  template AlgebraMorphism<F> quotient_morphism(const FinDimAlgebra<F>&, const std::vector<Vec<F>>&);          \
  template LeftIdeal<F> transport(const AlgebraMorphism<F>&, const LeftIdeal<F>&, TransportDirection);         \
  template IdealPredicateResult<F> is_semiprime_left_witnessed(const LeftIdeal<F>&,                            \
                                                               const std::vector<AlgPoly<F>>&, Exec);          \
  template QuotientModule<F> quotient_module(const LeftIdeal<F>&);                                             \
  template Vec<F> quotient_coords(const LeftIdeal<F>&, const QuotientModule<F>&, const AlgPoly<F>&);           \
  template AlgPoly<F> lift_from_quotient(const LeftIdeal<F>&, const QuotientModule<F>&, const Vec<F>&);        \
  template IdealPredicateResult<F> is_semiprime_left(const LeftIdeal<F>&, const PredicateOptions&);            \
  template IdealPredicateResult<F> is_prime_left(const LeftIdeal<F>&, const PredicateOptions&);                \
  template IdealPredicateResult<F> is_maximal_left(const LeftIdeal<F>&, const PredicateOptions&);          \
  template FinDimAlgebra<F> annihilator_quotient(const LeftIdeal<F>&);                                         \
  template bool annihilator_maximal(const LeftIdeal<F>&);

NULLSATZ_LEFTIDEAL_INSTANTIATE(FiniteField)
NULLSATZ_LEFTIDEAL_INSTANTIATE(NumberField)

}  // namespace nullsatz
