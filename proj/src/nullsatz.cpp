#include "nullsatz/nullsatz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nullsatz {

using FF = FiniteField;

namespace {

// theta_j(g) as a k x k matrix of polynomials over E_j, returned row by row
std::vector<ModVector<FF>> theta_rows(const AlgPoly<FF>& g, const SimpleFactor<FF>& fac) {
  std::vector<ModVector<FF>> rows(fac.k, ModVector<FF>(fac.center, g.nvars, fac.k));
  for (auto& [m, c] : g.terms) {
    auto t = fac.theta_of(c);
    for (std::size_t r = 0; r < fac.k; ++r)
      for (std::size_t s = 0; s < fac.k; ++s)
        if (t.at(r, s) != 0)
          rows[r].comps[s] = mpoly::add(rows[r].comps[s], MPoly<FF>::monomial(fac.center, g.nvars, m, t.at(r, s)));
  }
  return rows;
}

LeftIdeal<FF> with_radical(const LeftIdeal<FF>& I) {
  const auto& alg = I.algebra();
  const auto& wd = alg.wedderburn_data();
  if (wd.radical.empty()) return I;
  auto gens = I.generators();
  for (auto& r : wd.radical) gens.push_back(AlgPoly<FF>::constant(alg, I.nvars(), r));
  return LeftIdeal<FF>::generate(alg, I.nvars(), gens, I.backing().order());
}

}  // namespace

Submodule<FF> morita_rows(const LeftIdeal<FF>& I, std::size_t j) {
  const auto& wd = I.algebra().wedderburn_data();
  if (j >= wd.factors.size())
    fail(ErrorKind::FactorIndexOutOfRange, "nullsatz::morita_rows", "no factor " + std::to_string(j));
  const auto& fac = wd.factors[j];
  std::vector<ModVector<FF>> rows;
  for (auto& g : I.generators())
    for (auto& r : theta_rows(g, fac))
      if (!r.is_zero()) rows.push_back(std::move(r));
  return Submodule<FF>::generate(fac.center, I.nvars(), fac.k, std::move(rows), I.backing().order());
}

// ---------------------------------------------------------------------------
// pipeline

RadicalResult rad_pipeline(const LeftIdeal<FF>& I, const PipelineOptions& opt) {
  const char* where = "nullsatz::rad_pipeline";
  const auto& alg = I.algebra();
  const auto& wd = alg.wedderburn_data();
  std::size_t n = I.nvars();
  RadicalResult res;
  res.input = I;
  auto with_rad = with_radical(I);

  // Morita rows and degree bounds per factor
  std::uint64_t dmax_needed = 1;
  for (std::size_t j = 0; j < wd.factors.size(); ++j) {
    FactorIdeal fi;
    fi.factor = j;
    fi.rows = morita_rows(I, j);
    if (!fi.rows.is_full()) {
      auto info = zero_dim_info(fi.rows);
      if (!info.zero_dimensional)
        fail(ErrorKind::NotZeroDimensional, where, "factor " + std::to_string(j) + " has a positive-dimensional variety");
      fi.degree_bound = info.degree_bound;
      dmax_needed = std::max(dmax_needed, info.degree_bound);
    }
    res.factors.push_back(std::move(fi));
  }
  res.dmax = opt.dmax.value_or(dmax_needed);

  // points and kernels K_xi
  for (auto& fi : res.factors) {
    if (fi.rows.is_full()) continue;
    auto ps = enumerate_points(fi.rows, res.dmax);
    const FF& K = ps.ext;
    const auto& basis = fi.rows.basis();
    std::vector<std::vector<Vec<FF>>> kernels(ps.points.size());
    auto kernel_at = [&](std::uint64_t q) {
      Matrix<FF> m(K, basis.size(), fi.rows.rank());
      for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t c = 0; c < fi.rows.rank(); ++c) m.at(r, c) = mpoly::eval(basis[r].comps[c], ps.embedding, ps.points[q]);
      kernels[q] = kernel_basis(m);
      return false;
    };
    collect_matches(ps.points.size(), kernel_at, opt.exec);
    for (std::size_t q = 0; q < ps.points.size(); ++q) {
      if (kernels[q].empty())
        fail(ErrorKind::InternalInconsistency, where, "a support point has no kernel direction");
      for (auto& v : kernels[q]) res.certificate.push_back({fi.factor, K, ps.embedding, ps.points[q], v});
    }
    fi.points = ps.points.size();
  }

  if (res.certificate.empty()) {
    if (!with_rad.is_full())
      fail(ErrorKind::InternalInconsistency, where, "proper ideal with no directional point above it");
    res.radical = LeftIdeal<FF>::full(alg, n, I.backing().order());
  } else {
    auto map = directional_map(alg, n, res.certificate);
    res.radical = LeftIdeal<FF>::from_backing(alg, kernel_submodule(alg.field(), map, I.backing().order()));
  }
  for (auto& fi : res.factors) fi.radical_rows = morita_rows(res.radical, fi.factor);

  if (opt.verify) {
    if (!res.radical.contains_ideal(with_rad))
      fail(ErrorKind::InternalInconsistency, where, "radical does not contain the input ideal");
    if (!res.radical.is_full()) {
      auto codim = zero_dim_info(res.radical.backing()).codim;
      long double size = std::pow(static_cast<long double>(alg.field().size()), static_cast<long double>(codim));
      if (size <= static_cast<long double>(opt.exhaustion_limit)) {
        PredicateOptions po;
        po.mode = PredicateMode::Exhaustive;
        po.exhaustion_limit = opt.exhaustion_limit;
        po.exec = opt.exec;
        if (!is_semiprime_left(res.radical, po).holds)
          fail(ErrorKind::InternalInconsistency, where, "computed radical is not semiprime");
        res.semiprime_verified = true;
      }
    } else {
      res.semiprime_verified = true;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// oracle

namespace {

struct OraclePlan {
  std::vector<std::uint64_t> needed;  // per factor, relative to E_j
};

OraclePlan oracle_plan(const LeftIdeal<FF>& I) {
  auto info = zero_dim_info(with_radical(I).backing());
  if (!info.zero_dimensional)
    fail(ErrorKind::NotZeroDimensional, "nullsatz::geometric_oracle", "A[x]/I is infinite-dimensional");
  OraclePlan plan;
  for (auto& fac : I.algebra().wedderburn_data().factors) {
    std::uint64_t a = fac.degree;
    plan.needed.push_back(info.degree_bound / std::gcd(info.degree_bound, a));
  }
  return plan;
}

}  // namespace

std::uint64_t oracle_degree_bound(const LeftIdeal<FF>& I) {
  auto plan = oracle_plan(I);
  std::uint64_t d = 1;
  for (auto x : plan.needed) d = std::max(d, x);
  return d;
}

LeftIdeal<FF> geometric_oracle(const LeftIdeal<FF>& I, std::optional<std::uint64_t> dmax, Exec exec) {
  const char* where = "nullsatz::geometric_oracle";
  const auto& alg = I.algebra();
  const auto& wd = alg.wedderburn_data();
  std::size_t n = I.nvars();
  auto plan = oracle_plan(I);
  auto result = LeftIdeal<FF>::full(alg, n, I.backing().order());
  for (std::size_t j = 0; j < wd.factors.size(); ++j) {
    const auto& fac = wd.factors[j];
    std::uint64_t e = plan.needed[j];
    if (dmax && e > *dmax)
      fail(ErrorKind::DegreeBoundTooSmall, where,
           "factor " + std::to_string(j) + " needs points of degree " + std::to_string(e));
    auto [K, emb] = extend(fac.center, static_cast<int>(e));
    // generator terms with theta already pushed into K
    struct TermK {
      Monomial m;
      Matrix<FF> t;
    };
    std::vector<std::vector<TermK>> gens;
    for (auto& g : I.generators()) {
      std::vector<TermK> ts;
      for (auto& [m, c] : g.terms) {
        auto t = fac.theta_of(c);
        Matrix<FF> tk(K, fac.k, fac.k);
        for (std::size_t r = 0; r < fac.k; ++r)
          for (std::size_t s = 0; s < fac.k; ++s) tk.at(r, s) = emb(t.at(r, s));
        ts.push_back({m, std::move(tk)});
      }
      gens.push_back(std::move(ts));
    }
    std::uint64_t total = count_vectors(K, n, 1ULL << 26, where);
    auto point_at = [&](std::uint64_t idx) {
      std::vector<FF::Elem> xi(n);
      for (std::size_t l = 0; l < n; ++l) {
        xi[l] = K.from_code(idx % K.size());
        idx /= K.size();
      }
      return xi;
    };
    auto stacked = [&](const std::vector<FF::Elem>& xi) {
      Matrix<FF> m(K, 0, fac.k);
      for (auto& ts : gens) {
        Matrix<FF> val(K, fac.k, fac.k);
        for (auto& [mono, t] : ts) {
          auto x = K.one();
          for (std::size_t l = 0; l < n; ++l)
            if (mono.e[l]) x = K.mul(x, K.pow(xi[l], mono.e[l]));
          val = matadd(val, matscale(t, x));
        }
        for (auto& row : val.row_list()) m.append_row(row);
      }
      return m;
    };
    auto hits = collect_matches(total, [&](std::uint64_t idx) { return rank(stacked(point_at(idx))) < fac.k; }, exec);
    for (auto idx : hits) {
      auto xi = point_at(idx);
      for (auto& v : kernel_basis(stacked(xi))) {
        auto J = directional_ideal(alg, n, DirectionalPoint<FF>{j, K, emb, xi, v}, I.backing().order());
        if (!J.contains_ideal(I)) fail(ErrorKind::InternalInconsistency, where, "directional ideal misses a generator");
        if (J.contains_ideal(result)) continue;
        result = intersect_ideals(result, J);
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// finite codimension, centre

template <class F>
Submodule<F> central_part(const LeftIdeal<F>& m) {
  const auto& alg = m.algebra();
  Matrix<F> unit(alg.field(), alg.dim(), 1);
  for (std::size_t i = 0; i < alg.dim(); ++i) unit.at(i, 0) = alg.unit()[i];
  return preimage_submodule(unit, m.backing());
}

template <class F>
FiniteCodimResult finite_codim_check(const LeftIdeal<F>& m) {
  FiniteCodimResult res;
  auto info = zero_dim_info(m.backing());
  if (!info.zero_dimensional) return res;
  res.finite = true;
  res.codim = info.codim;
  auto c = central_part(m);
  if (c.is_full()) return res;
  auto ci = zero_dim_info(c);
  if (!ci.zero_dimensional) return res;
  // F[x]/(m ∩ F[x]) as an algebra on its standard monomials
  const F& f = m.algebra().field();
  std::size_t d = ci.codim;
  std::vector<Matrix<F>> mono_mats;
  for (auto& t : ci.standard_terms) {
    Matrix<F> x = Matrix<F>::identity(f, d);
    for (std::size_t l = 0; l < ci.multiplication.size(); ++l)
      for (unsigned p = 0; p < t.m.e[l]; ++p) x = matmul(ci.multiplication[l], x);
    mono_mats.push_back(std::move(x));
  }
  std::size_t one = 0;
  while (ci.standard_terms[one].m.deg != 0) ++one;
  std::vector<typename F::Elem> st(d * d * d, f.zero());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i) {
    names.push_back("s" + std::to_string(i));
    for (std::size_t j = 0; j < d; ++j) {
      auto prod = matvec(mono_mats[i], vec::unit(f, d, j));
      for (std::size_t k = 0; k < d; ++k) st[(i * d + j) * d + k] = prod[k];
    }
  }
  auto q = FinDimAlgebra<F>::create(f, d, std::move(st), vec::unit(f, d, one), std::move(names));
  const auto& wd = q.wedderburn_data();
  res.center_maximal = wd.radical.empty() && wd.factors.size() == 1 && wd.factors[0].k == 1;
  return res;
}

template Submodule<FF> central_part(const LeftIdeal<FF>&);
template Submodule<NumberField> central_part(const LeftIdeal<NumberField>&);
template FiniteCodimResult finite_codim_check(const LeftIdeal<FF>&);
template FiniteCodimResult finite_codim_check(const LeftIdeal<NumberField>&);

// ---------------------------------------------------------------------------
// Azumaya correspondence for A = M_k(E)

namespace {

const SimpleFactor<FF>& central_simple_factor(const FinDimAlgebra<FF>& a, const char* where) {
  const auto& wd = a.wedderburn_data();
  if (!wd.radical.empty() || wd.factors.size() != 1)
    fail(ErrorKind::NotAzumaya, where, "algebra is not central simple over its centre");
  return wd.factors[0];
}

}  // namespace

LeftIdeal<FF> ideal_from_center(const FinDimAlgebra<FF>& a, const Submodule<FF>& J) {
  const char* where = "nullsatz::ideal_from_center";
  const auto& fac = central_simple_factor(a, where);
  if (J.rank() != 1 || J.field() != fac.center)
    fail(ErrorKind::MixedParents, where, "ideal must be rank 1 over the centre of A");
  std::vector<AlgPoly<FF>> gens;
  for (auto& b : J.basis()) {
    AlgPoly<FF> g(a, J.nvars());
    for (auto& [m, c] : b.comps[0].terms) {
      auto s = matscale(Matrix<FF>::identity(fac.center, fac.k), c);
      g = algpoly::add(g, AlgPoly<FF>::term(a, J.nvars(), m, fac.section_of(s)));
    }
    gens.push_back(std::move(g));
  }
  return LeftIdeal<FF>::generate(a, J.nvars(), gens, J.order());
}

Submodule<FF> center_from_ideal(const LeftIdeal<FF>& I) {
  const auto& fac = central_simple_factor(I.algebra(), "nullsatz::center_from_ideal");
  auto N = morita_rows(I, 0);
  // p with p e_r in N for every r
  std::optional<Submodule<FF>> out;
  for (std::size_t r = 0; r < fac.k; ++r) {
    Matrix<FF> e(fac.center, fac.k, 1);
    e.at(r, 0) = 1;
    auto p = preimage_submodule(e, N);
    out = out ? intersect_submodules(*out, p) : p;
  }
  return *out;
}

// ---------------------------------------------------------------------------
// the sqrt 2 example

Sqrt2Report nonmaximal_directional_demo(std::size_t nvars) {
  using QF = NumberField;
  auto q = QF::rationals();
  auto M = matrix_algebra(q, 2);
  const auto& fac = M.wedderburn_data().factors.at(0);
  Sqrt2Report rep;
  rep.theta_standard = true;
  for (std::size_t i = 0; i < 4; ++i) {
    Matrix<QF> e(fac.center, 2, 2);
    e.at(i / 2, i % 2) = fac.center.one();
    rep.theta_standard = rep.theta_standard && fac.theta_of(M.basis(i)) == e;
  }
  auto K = QF::extension({mpq_class(-2), mpq_class(0), mpq_class(1)}, "s");
  auto emb = Embedding<QF>::from_prime(K);
  DirectionalPoint<QF> pv{0, K, emb, std::vector<QElem>(nvars, K.zero()), {K.one(), K.generator()}};
  DirectionalPoint<QF> pu{0, fac.center, Embedding<QF>::identity(fac.center), std::vector<QElem>(nvars, q.zero()),
                          {q.one(), q.zero()}};
  auto Jv = directional_ideal(M, nvars, pv);
  auto Ju = directional_ideal(M, nvars, pu);
  rep.contained = Ju.contains_ideal(Jv);
  auto e12 = AlgPoly<QF>::basis(M, nvars, *M.name_index("e12"));
  rep.strict = Ju.contains(e12) && !Jv.contains(e12);
  rep.witness = e12.to_string(default_var_names(nvars));
  rep.proper = !Ju.is_full();
  // x_1 * (e11 + e12 + e21 + e22) vanishes at 0
  Vec<QF> all(4, q.one());
  auto vanishing = algpoly::mul(AlgPoly<QF>::variable(M, nvars, 0), AlgPoly<QF>::constant(M, nvars, all));
  rep.vanishing_in_both = Ju.contains(vanishing) && Jv.contains(vanishing);
  auto cu = finite_codim_check(Ju), cv = finite_codim_check(Jv);
  rep.codim_u = cu.codim;
  rep.codim_v = cv.codim;
  // A[x] acting on A[x]/J as the full endomorphism ring forces the quotient to be simple
  rep.u_maximal = cu.ok() && annihilator_quotient(Ju).dim() == cu.codim * cu.codim;
  return rep;
}

}  // namespace nullsatz
