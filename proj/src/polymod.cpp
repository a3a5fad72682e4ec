#include "nullsatz/polymod.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "nullsatz/upoly.hpp"

namespace nullsatz {

// ---------------------------------------------------------------------------
// monomials and orders

Monomial Monomial::var(std::size_t l, unsigned power) {
  Monomial m;
  m.e[l] = static_cast<std::uint8_t>(power);
  m.deg = static_cast<std::uint16_t>(power);
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(e[i]) + o.e[i];
    if (s > 255) fail(ErrorKind::DegreeBudgetExceeded, "polymod::monomial", "exponent exceeds 255");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  r.deg = static_cast<std::uint16_t>(deg + o.deg);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
  r.deg = static_cast<std::uint16_t>(deg - o.deg);
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::max(e[i], o.e[i]);
    r.deg = static_cast<std::uint16_t>(r.deg + r.e[i]);
  }
  return r;
}

std::string Monomial::to_string(const std::vector<std::string>& vars) const {
  std::string out;
  for (std::size_t i = 0; i < vars.size() && i < kMaxVars; ++i) {
    if (!e[i]) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

int compare_monomials(MonoOrder o, const Monomial& a, const Monomial& b) {
  if (o == MonoOrder::DegRevLex) {
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    for (std::size_t i = kMaxVars; i-- > 0;)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
  }
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
  return 0;
}

int compare_terms(const ModuleOrder& o, const Term& a, const Term& b) {
  if (o.pos == PosOrder::POT) {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return compare_monomials(o.mono, a.m, b.m);
  }
  int c = compare_monomials(o.mono, a.m, b.m);
  if (c) return c;
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return 0;
}

std::vector<std::string> default_var_names(std::size_t n) {
  std::vector<std::string> v;
  if (n == 1) return {"x"};
  for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i + 1));
  return v;
}

namespace {

template <class F>
std::string coeff_text(const F& f, const typename F::Elem& c, bool& negative) {
  std::string s = f.to_string(c);
  negative = false;
  if (s.find(' ') != std::string::npos) return "(" + s + ")";
  if (!s.empty() && s[0] == '-') {
    negative = true;
    s = s.substr(1);
  }
  return s;
}

// terms joined with signs; each item is (coefficient, body) where body "1" means constant
template <class F>
void append_term(std::string& out, const F& f, const typename F::Elem& c, const std::string& body) {
  bool neg = false;
  std::string co = coeff_text(f, c, neg);
  if (out.empty()) out += neg ? "-" : "";
  else out += neg ? " - " : " + ";
  if (body == "1") out += co;
  else if (co == "1") out += body;
  else out += co + "*" + body;
}

}  // namespace

// ---------------------------------------------------------------------------
// MPoly

template <class F>
MPoly<F> MPoly<F>::constant(const F& f, std::size_t n, const Elem& c) {
  return monomial(f, n, Monomial::one(), c);
}

template <class F>
MPoly<F> MPoly<F>::variable(const F& f, std::size_t n, std::size_t l) {
  if (l >= n) fail(ErrorKind::InvalidArgument, "polymod::variable", "variable index out of range");
  return monomial(f, n, Monomial::var(l), f.one());
}

template <class F>
MPoly<F> MPoly<F>::monomial(const F& f, std::size_t n, const Monomial& m, const Elem& c) {
  if (n > kMaxVars) fail(ErrorKind::NotSupported, "polymod::mpoly", "at most 8 variables");
  MPoly p(f, n);
  if (!f.is_zero(c)) p.terms.push_back({m, c});
  return p;
}

template <class F>
int MPoly<F>::total_degree() const {
  int d = -1;
  for (auto& [m, c] : terms) d = std::max(d, int(m.deg));
  return d;
}

template <class F>
typename F::Elem MPoly<F>::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), m, [](const auto& t, const Monomial& x) { return t.first < x; });
  if (it != terms.end() && it->first == m) return it->second;
  return field.zero();
}

template <class F>
std::pair<Monomial, typename F::Elem> MPoly<F>::lead(MonoOrder o) const {
  if (terms.empty()) fail(ErrorKind::InvalidArgument, "polymod::lead", "zero polynomial has no leading term");
  auto best = terms.begin();
  for (auto it = terms.begin(); it != terms.end(); ++it)
    if (compare_monomials(o, it->first, best->first) > 0) best = it;
  return *best;
}

template <class F>
std::string MPoly<F>::to_string(const std::vector<std::string>& vars) const {
  if (terms.empty()) return "0";
  auto sorted = terms;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return compare_monomials(MonoOrder::DegRevLex, a.first, b.first) > 0;
  });
  std::string out;
  for (auto& [m, c] : sorted) append_term(out, field, c, m.to_string(vars));
  return out;
}

namespace mpoly {

template <class F>
MPoly<F> add(const MPoly<F>& a, const MPoly<F>& b) {
  const F& f = a.field;
  MPoly<F> r(f, a.nvars);
  r.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].first < b.terms[j].first)) {
      r.terms.push_back(a.terms[i++]);
    } else if (i == a.terms.size() || b.terms[j].first < a.terms[i].first) {
      r.terms.push_back(b.terms[j++]);
    } else {
      auto s = f.add(a.terms[i].second, b.terms[j].second);
      if (!f.is_zero(s)) r.terms.push_back({a.terms[i].first, s});
      ++i;
      ++j;
    }
  }
  return r;
}

template <class F>
MPoly<F> neg(const MPoly<F>& a) {
  MPoly<F> r = a;
  for (auto& t : r.terms) t.second = a.field.neg(t.second);
  return r;
}

template <class F>
MPoly<F> sub(const MPoly<F>& a, const MPoly<F>& b) {
  return add(a, neg(b));
}

template <class F>
MPoly<F> scale(const MPoly<F>& a, const typename F::Elem& c) {
  MPoly<F> r(a.field, a.nvars);
  if (a.field.is_zero(c)) return r;
  for (auto& [m, x] : a.terms) r.terms.push_back({m, a.field.mul(x, c)});
  return r;
}

template <class F>
MPoly<F> mul_term(const MPoly<F>& a, const Monomial& m, const typename F::Elem& c) {
  MPoly<F> r(a.field, a.nvars);
  if (a.field.is_zero(c)) return r;
  for (auto& [mm, x] : a.terms) r.terms.push_back({mm * m, a.field.mul(x, c)});
  std::sort(r.terms.begin(), r.terms.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  return r;
}

template <class F>
MPoly<F> mul(const MPoly<F>& a, const MPoly<F>& b) {
  const F& f = a.field;
  std::map<Monomial, typename F::Elem> acc;
  for (auto& [ma, ca] : a.terms)
    for (auto& [mb, cb] : b.terms) {
      auto m = ma * mb;
      auto p = f.mul(ca, cb);
      auto it = acc.find(m);
      if (it == acc.end()) acc.emplace(m, p);
      else it->second = f.add(it->second, p);
    }
  MPoly<F> r(f, a.nvars);
  for (auto& [m, c] : acc)
    if (!f.is_zero(c)) r.terms.push_back({m, c});
  return r;
}

template <class F>
MPoly<F> pow(const MPoly<F>& a, unsigned e) {
  MPoly<F> r = MPoly<F>::constant(a.field, a.nvars, a.field.one());
  MPoly<F> b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

template <class F>
typename F::Elem eval(const MPoly<F>& a, const Embedding<F>& emb, const std::vector<typename F::Elem>& xi) {
  const F& K = emb.target();
  if (xi.size() < a.nvars) fail(ErrorKind::DimensionMismatch, "polymod::eval", "point has too few coordinates");
  auto s = K.zero();
  for (auto& [m, c] : a.terms) {
    auto v = emb(c);
    for (std::size_t l = 0; l < a.nvars; ++l)
      if (m.e[l]) v = K.mul(v, K.pow(xi[l], m.e[l]));
    s = K.add(s, v);
  }
  return s;
}

template <class F>
MPoly<F> map_coefficients(const MPoly<F>& a, const Embedding<F>& emb) {
  MPoly<F> r(emb.target(), a.nvars);
  for (auto& [m, c] : a.terms) r.terms.push_back({m, emb(c)});
  return r;
}

}  // namespace mpoly

// ---------------------------------------------------------------------------
// ModVector

template <class F>
ModVector<F> ModVector<F>::unit(const F& f, std::size_t n, std::size_t k, std::size_t c) {
  return from_term(f, n, k, Term{Monomial::one(), static_cast<std::uint32_t>(c)}, f.one());
}

template <class F>
ModVector<F> ModVector<F>::from_term(const F& f, std::size_t n, std::size_t k, const Term& t, const Elem& c) {
  ModVector v(f, n, k);
  v.comps.at(t.comp) = MPoly<F>::monomial(f, n, t.m, c);
  return v;
}

template <class F>
bool ModVector<F>::is_zero() const {
  for (auto& p : comps)
    if (!p.is_zero()) return false;
  return true;
}

template <class F>
std::string ModVector<F>::to_string(const std::vector<std::string>& vars) const {
  std::string out = "[";
  for (std::size_t c = 0; c < comps.size(); ++c) out += (c ? ", " : "") + comps[c].to_string(vars);
  return out + "]";
}

namespace modvec {

template <class F>
ModVector<F> add(const ModVector<F>& a, const ModVector<F>& b) {
  if (a.rank() != b.rank()) fail(ErrorKind::RankMismatch, "polymod::add", "ranks differ");
  ModVector<F> r = a;
  for (std::size_t c = 0; c < a.rank(); ++c) r.comps[c] = mpoly::add(a.comps[c], b.comps[c]);
  return r;
}

template <class F>
ModVector<F> sub(const ModVector<F>& a, const ModVector<F>& b) {
  if (a.rank() != b.rank()) fail(ErrorKind::RankMismatch, "polymod::sub", "ranks differ");
  ModVector<F> r = a;
  for (std::size_t c = 0; c < a.rank(); ++c) r.comps[c] = mpoly::sub(a.comps[c], b.comps[c]);
  return r;
}

template <class F>
ModVector<F> scale(const ModVector<F>& a, const MPoly<F>& p) {
  ModVector<F> r = a;
  for (auto& c : r.comps) c = mpoly::mul(c, p);
  return r;
}

template <class F>
ModVector<F> scale(const ModVector<F>& a, const typename F::Elem& x) {
  ModVector<F> r = a;
  for (auto& c : r.comps) c = mpoly::scale(c, x);
  return r;
}

template <class F>
ModVector<F> concat(const ModVector<F>& a, const ModVector<F>& b) {
  ModVector<F> r = a;
  r.comps.insert(r.comps.end(), b.comps.begin(), b.comps.end());
  return r;
}

template <class F>
ModVector<F> slice(const ModVector<F>& a, std::size_t from, std::size_t count) {
  ModVector<F> r(a.field, a.nvars, 0);
  r.comps.assign(a.comps.begin() + static_cast<long>(from), a.comps.begin() + static_cast<long>(from + count));
  return r;
}

template <class F>
ModVector<F> apply_matrix(const Matrix<F>& m, const ModVector<F>& a) {
  if (m.cols() != a.rank()) fail(ErrorKind::RankMismatch, "polymod::apply_matrix", "matrix columns differ from rank");
  ModVector<F> r(a.field, a.nvars, m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!a.field.is_zero(m.at(i, j))) r.comps[i] = mpoly::add(r.comps[i], mpoly::scale(a.comps[j], m.at(i, j)));
  return r;
}

}  // namespace modvec

// ---------------------------------------------------------------------------
// Groebner engine

namespace {

// terms in descending module order
template <class F>
struct GPoly {
  std::vector<Term> t;
  std::vector<typename F::Elem> c;
  bool empty() const { return t.empty(); }
};

template <class F>
GPoly<F> to_gpoly(const ModVector<F>& v, const ModuleOrder& o) {
  std::vector<std::pair<Term, typename F::Elem>> all;
  for (std::size_t c = 0; c < v.rank(); ++c)
    for (auto& [m, x] : v.comps[c].terms) all.push_back({Term{m, static_cast<std::uint32_t>(c)}, x});
  std::sort(all.begin(), all.end(), [&](const auto& a, const auto& b) { return compare_terms(o, a.first, b.first) > 0; });
  GPoly<F> g;
  for (auto& [t, x] : all) {
    g.t.push_back(t);
    g.c.push_back(x);
  }
  return g;
}

template <class F>
ModVector<F> from_gpoly(const F& f, std::size_t n, std::size_t k, const GPoly<F>& g) {
  ModVector<F> v(f, n, k);
  for (std::size_t i = 0; i < g.t.size(); ++i) v.comps[g.t[i].comp].terms.push_back({g.t[i].m, g.c[i]});
  for (auto& p : v.comps)
    std::sort(p.terms.begin(), p.terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

// p[start..] + s * m * g
template <class F>
GPoly<F> axpy_shift(const F& f, const ModuleOrder& o, const GPoly<F>& p, std::size_t start,
                    const typename F::Elem& s, const Monomial& m, const GPoly<F>& g) {
  GPoly<F> r;
  r.t.reserve(p.t.size() - start + g.t.size());
  r.c.reserve(r.t.capacity());
  std::size_t i = start, j = 0;
  while (i < p.t.size() || j < g.t.size()) {
    if (j == g.t.size()) {
      r.t.push_back(p.t[i]);
      r.c.push_back(p.c[i++]);
      continue;
    }
    Term gt{g.t[j].m * m, g.t[j].comp};
    int cmp = i == p.t.size() ? -1 : compare_terms(o, p.t[i], gt);
    if (cmp > 0) {
      r.t.push_back(p.t[i]);
      r.c.push_back(p.c[i++]);
    } else if (cmp < 0) {
      r.t.push_back(gt);
      r.c.push_back(f.mul(s, g.c[j++]));
    } else {
      auto v = f.add(p.c[i], f.mul(s, g.c[j]));
      if (!f.is_zero(v)) {
        r.t.push_back(gt);
        r.c.push_back(v);
      }
      ++i;
      ++j;
    }
  }
  return r;
}

template <class F>
const GPoly<F>* find_reducer(const std::vector<GPoly<F>>& basis, const Term& t) {
  for (const auto& g : basis)
    if (g.t[0].comp == t.comp && g.t[0].m.divides(t.m)) return &g;
  return nullptr;
}

// full reduction; basis elements are monic
template <class F>
GPoly<F> reduce(const F& f, const ModuleOrder& o, GPoly<F> p, const std::vector<GPoly<F>>& basis) {
  GPoly<F> r;
  std::size_t start = 0;
  while (start < p.t.size()) {
    const GPoly<F>* g = find_reducer(basis, p.t[start]);
    if (!g) {
      r.t.push_back(p.t[start]);
      r.c.push_back(p.c[start]);
      ++start;
      continue;
    }
    auto s = f.neg(p.c[start]);
    auto m = p.t[start].m / g->t[0].m;
    p = axpy_shift(f, o, p, start, s, m, *g);
    start = 0;
  }
  return r;
}

template <class F>
void make_monic(const F& f, GPoly<F>& g) {
  if (g.empty() || f.is_one(g.c[0])) return;
  auto inv = f.inv(g.c[0]);
  for (auto& x : g.c) x = f.mul(x, inv);
}

template <class F>
std::vector<GPoly<F>> buchberger(const F& f, const ModuleOrder& o, std::size_t rank, std::vector<GPoly<F>> gens,
                                 const GbOptions& opt) {
  const char* where = "polymod::module_groebner";
  std::vector<GPoly<F>> G;
  struct Pair {
    std::size_t i, j;
    Term lcm;
  };
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> open;
  auto add_element = [&](GPoly<F> h) {
    make_monic(f, h);
    std::size_t r = G.size();
    G.push_back(std::move(h));
    for (std::size_t i = 0; i < r; ++i) {
      if (G[i].t[0].comp != G[r].t[0].comp) continue;
      Term l{G[i].t[0].m.lcm(G[r].t[0].m), G[r].t[0].comp};
      if (rank == 1 && G[i].t[0].m.coprime(G[r].t[0].m)) continue;
      pending.push_back({i, r, l});
      open.insert({i, r});
    }
  };
  for (auto& g : gens) {
    auto h = reduce(f, o, std::move(g), G);
    if (!h.empty()) add_element(std::move(h));
  }
  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
      if (a.lcm.m.deg != b.lcm.m.deg) return a.lcm.m.deg < b.lcm.m.deg;
      return compare_terms(o, a.lcm, b.lcm) < 0;
    });
    Pair pr = *best;
    pending.erase(best);
    open.erase({pr.i, pr.j});
    if (pr.lcm.m.deg > opt.degree_budget)
      fail(ErrorKind::DegreeBudgetExceeded, where,
           "S-pair degree " + std::to_string(pr.lcm.m.deg) + " exceeds budget " + std::to_string(opt.degree_budget));
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (G[k].t[0].comp != pr.lcm.comp || !G[k].t[0].m.divides(pr.lcm.m)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!open.count(key(pr.i, k)) && !open.count(key(pr.j, k))) chain = true;
    }
    if (chain) continue;
    const auto& gi = G[pr.i];
    const auto& gj = G[pr.j];
    GPoly<F> s = axpy_shift(f, o, GPoly<F>{}, 0, f.one(), pr.lcm.m / gi.t[0].m, gi);
    s = axpy_shift(f, o, s, 0, f.neg(f.one()), pr.lcm.m / gj.t[0].m, gj);
    auto h = reduce(f, o, std::move(s), G);
    if (!h.empty()) add_element(std::move(h));
  }
  // minimal, then reduced
  std::vector<GPoly<F>> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || G[j].t[0].comp != G[i].t[0].comp || !G[j].t[0].m.divides(G[i].t[0].m)) continue;
      if (G[j].t[0].m != G[i].t[0].m || j < i) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  std::vector<GPoly<F>> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<GPoly<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    GPoly<F> tail;
    tail.t.assign(minimal[i].t.begin() + 1, minimal[i].t.end());
    tail.c.assign(minimal[i].c.begin() + 1, minimal[i].c.end());
    auto red = reduce(f, o, std::move(tail), others);
    GPoly<F> g;
    g.t.push_back(minimal[i].t[0]);
    g.c.push_back(minimal[i].c[0]);
    g.t.insert(g.t.end(), red.t.begin(), red.t.end());
    g.c.insert(g.c.end(), red.c.begin(), red.c.end());
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [&](const GPoly<F>& a, const GPoly<F>& b) {
    return compare_terms(o, a.t[0], b.t[0]) < 0;
  });
  return out;
}

}  // namespace

template <class F>
struct Submodule<F>::Impl {
  std::vector<GPoly<F>> basis;
};

template <class F>
Submodule<F> Submodule<F>::build(const F& field, std::size_t nvars, std::size_t rank, std::vector<ModVector<F>> gens,
                                 std::vector<ModVector<F>> basis, ModuleOrder order) {
  auto d = std::make_shared<Data>();
  d->field = field;
  d->nvars = nvars;
  d->rank = rank;
  d->order = order;
  d->gens = std::move(gens);
  auto impl = std::make_shared<Impl>();
  for (auto& b : basis) impl->basis.push_back(to_gpoly(b, order));
  d->basis = std::move(basis);
  d->impl = std::move(impl);
  Submodule s;
  s.d_ = std::move(d);
  return s;
}

template <class F>
Submodule<F> Submodule<F>::generate(const F& field, std::size_t nvars, std::size_t rank,
                                    std::vector<ModVector<F>> gens, ModuleOrder order, GbOptions opt) {
  const char* where = "polymod::module_groebner";
  if (rank == 0) fail(ErrorKind::InvalidArgument, where, "rank must be positive");
  if (nvars > kMaxVars) fail(ErrorKind::NotSupported, where, "at most 8 variables");
  std::vector<GPoly<F>> g;
  for (auto& v : gens) {
    if (v.rank() != rank) fail(ErrorKind::RankMismatch, where, "generator rank differs from module rank");
    if (v.nvars != nvars || !(v.field == field)) fail(ErrorKind::MixedParents, where, "generator ring differs");
    if (!v.is_zero()) g.push_back(to_gpoly(v, order));
  }
  auto gb = buchberger(field, order, rank, std::move(g), opt);
  std::vector<ModVector<F>> basis;
  for (auto& p : gb) basis.push_back(from_gpoly(field, nvars, rank, p));
  return build(field, nvars, rank, std::move(gens), std::move(basis), order);
}

template <class F>
Submodule<F> Submodule<F>::zero(const F& field, std::size_t nvars, std::size_t rank, ModuleOrder order) {
  return build(field, nvars, rank, {}, {}, order);
}

template <class F>
Submodule<F> Submodule<F>::full(const F& field, std::size_t nvars, std::size_t rank, ModuleOrder order) {
  std::vector<ModVector<F>> b;
  for (std::size_t c = 0; c < rank; ++c) b.push_back(ModVector<F>::unit(field, nvars, rank, c));
  return build(field, nvars, rank, b, b, order);
}

template <class F>
Submodule<F> Submodule<F>::from_reduced_basis(const F& field, std::size_t nvars, std::size_t rank,
                                              std::vector<ModVector<F>> basis, ModuleOrder order) {
  auto gens = basis;
  return build(field, nvars, rank, std::move(gens), std::move(basis), order);
}

template <class F>
std::vector<Term> Submodule<F>::leading_terms() const {
  std::vector<Term> out;
  for (auto& g : d_->impl->basis) out.push_back(g.t[0]);
  return out;
}

template <class F>
ModVector<F> Submodule<F>::normal_form(const ModVector<F>& v) const {
  if (v.rank() != rank()) fail(ErrorKind::RankMismatch, "polymod::normal_form", "vector rank differs");
  auto r = reduce(field(), order(), to_gpoly(v, order()), d_->impl->basis);
  return from_gpoly(field(), nvars(), rank(), r);
}

template <class F>
bool Submodule<F>::contains_submodule(const Submodule& o) const {
  for (auto& b : o.basis())
    if (!contains(b)) return false;
  return true;
}

template <class F>
bool Submodule<F>::is_full() const {
  std::vector<bool> has(rank(), false);
  for (auto& t : leading_terms())
    if (t.m.deg == 0) has[t.comp] = true;
  return std::all_of(has.begin(), has.end(), [](bool b) { return b; });
}

template <class F>
bool satisfies_buchberger_criterion(const Submodule<F>& s) {
  std::vector<GPoly<F>> B;
  for (auto& b : s.basis()) B.push_back(to_gpoly(b, s.order()));
  const F& f = s.field();
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = i + 1; j < B.size(); ++j) {
      if (B[i].t[0].comp != B[j].t[0].comp) continue;
      auto l = B[i].t[0].m.lcm(B[j].t[0].m);
      auto sp = axpy_shift(f, s.order(), GPoly<F>{}, 0, f.one(), l / B[i].t[0].m, B[i]);
      sp = axpy_shift(f, s.order(), sp, 0, f.neg(f.one()), l / B[j].t[0].m, B[j]);
      if (!reduce(f, s.order(), sp, B).empty()) return false;
    }
  for (auto& g : s.generators())
    if (!s.contains(g)) return false;
  return true;
}

namespace {

template <class F>
void check_compatible(const Submodule<F>& a, const Submodule<F>& b, const char* where) {
  if (a.rank() != b.rank()) fail(ErrorKind::RankMismatch, where, "ranks differ");
  if (a.nvars() != b.nvars() || !(a.field() == b.field())) fail(ErrorKind::MixedParents, where, "rings differ");
}

// generators of the part of a rank (head + tail) module lying in the tail block
template <class F>
std::vector<ModVector<F>> eliminate_head(const F& f, std::size_t n, std::size_t head, std::size_t tail,
                                         std::vector<ModVector<F>> gens, MonoOrder mono) {
  ModuleOrder pot{PosOrder::POT, mono};
  auto big = Submodule<F>::generate(f, n, head + tail, std::move(gens), pot);
  std::vector<ModVector<F>> out;
  for (auto& b : big.basis()) {
    bool head_zero = true;
    for (std::size_t c = 0; c < head; ++c) head_zero = head_zero && b.comps[c].is_zero();
    if (head_zero) out.push_back(modvec::slice(b, head, tail));
  }
  return out;
}

}  // namespace

template <class F>
Submodule<F> sum_submodules(const Submodule<F>& a, const Submodule<F>& b) {
  check_compatible(a, b, "polymod::sum_submodules");
  auto g = a.basis();
  g.insert(g.end(), b.basis().begin(), b.basis().end());
  return Submodule<F>::generate(a.field(), a.nvars(), a.rank(), std::move(g), a.order());
}

template <class F>
Submodule<F> intersect_submodules(const Submodule<F>& a, const Submodule<F>& b) {
  check_compatible(a, b, "polymod::intersect_submodules");
  const F& f = a.field();
  std::size_t k = a.rank(), n = a.nvars();
  if (a.is_zero() || b.is_zero()) return Submodule<F>::zero(f, n, k, a.order());
  // (u + w, u) with u in a, w in b; head zero <=> u = -w
  std::vector<ModVector<F>> gens;
  for (auto& u : a.basis()) gens.push_back(modvec::concat(u, u));
  for (auto& w : b.basis()) gens.push_back(modvec::concat(w, ModVector<F>(f, n, k)));
  auto out = eliminate_head(f, n, k, k, std::move(gens), a.order().mono);
  return Submodule<F>::generate(f, n, k, std::move(out), a.order());
}

template <class F>
Submodule<F> image_submodule(const Matrix<F>& m, const Submodule<F>& s) {
  std::vector<ModVector<F>> g;
  for (auto& b : s.basis()) g.push_back(modvec::apply_matrix(m, b));
  return Submodule<F>::generate(s.field(), s.nvars(), m.rows(), std::move(g), s.order());
}

template <class F>
Submodule<F> preimage_submodule(const Matrix<F>& m, const Submodule<F>& s) {
  if (m.rows() != s.rank()) fail(ErrorKind::RankMismatch, "polymod::preimage", "matrix rows differ from rank");
  const F& f = s.field();
  std::size_t n = s.nvars(), head = s.rank(), tail = m.cols();
  std::vector<ModVector<F>> gens;
  for (std::size_t i = 0; i < tail; ++i) {
    auto e = ModVector<F>::unit(f, n, tail, i);
    gens.push_back(modvec::concat(modvec::apply_matrix(m, e), e));
  }
  for (auto& b : s.basis()) gens.push_back(modvec::concat(b, ModVector<F>(f, n, tail)));
  auto out = eliminate_head(f, n, head, tail, std::move(gens), s.order().mono);
  return Submodule<F>::generate(f, n, tail, std::move(out), s.order());
}

template <class F>
Submodule<F> kernel_submodule(const F& f, const LinearModuleMap<F>& map, ModuleOrder order) {
  const char* where = "polymod::kernel_submodule";
  if (map.images.size() != map.rank || map.action.size() != map.nvars)
    fail(ErrorKind::DimensionMismatch, where, "map data has the wrong shape");
  auto less = [&](const Term& a, const Term& b) { return compare_terms(order, a, b) < 0; };
  std::set<Term, decltype(less)> frontier(less);
  std::map<Term, std::size_t, decltype(less)> index(less);
  std::vector<Term> standard;
  std::vector<Vec<F>> images;
  std::vector<Term> leads;
  std::vector<ModVector<F>> basis;
  DependencyTracker<F> dep(f);
  for (std::size_t c = 0; c < map.rank; ++c) frontier.insert(Term{Monomial::one(), static_cast<std::uint32_t>(c)});
  while (!frontier.empty()) {
    Term t = *frontier.begin();
    frontier.erase(frontier.begin());
    if (index.count(t)) continue;
    bool divisible = false;
    for (auto& l : leads)
      if (l.comp == t.comp && l.m.divides(t.m)) {
        divisible = true;
        break;
      }
    if (divisible) continue;
    Vec<F> img;
    if (t.m.deg == 0) {
      img = map.images[t.comp];
    } else {
      std::size_t l = 0;
      while (!t.m.e[l]) ++l;
      Term pred{t.m / Monomial::var(l), t.comp};
      auto it = index.find(pred);
      if (it == index.end()) fail(ErrorKind::InternalInconsistency, where, "predecessor term not standard");
      img = matvec(map.action[l], images[it->second]);
    }
    if (img.size() != map.dim) fail(ErrorKind::DimensionMismatch, where, "image has the wrong length");
    auto dc = dep.add(img);
    if (dc) {
      auto v = ModVector<F>::from_term(f, map.nvars, map.rank, t, f.one());
      for (std::size_t i = 0; i < dc->size(); ++i)
        if (!f.is_zero((*dc)[i]))
          v = modvec::sub(v, ModVector<F>::from_term(f, map.nvars, map.rank, standard[i], (*dc)[i]));
      leads.push_back(t);
      basis.push_back(std::move(v));
    } else {
      index.emplace(t, standard.size());
      standard.push_back(t);
      images.push_back(std::move(img));
      for (std::size_t l = 0; l < map.nvars; ++l) frontier.insert(Term{t.m * Monomial::var(l), t.comp});
    }
  }
  return Submodule<F>::from_reduced_basis(f, map.nvars, map.rank, std::move(basis), order);
}

template <class F>
ZeroDimInfo<F> zero_dim_info(const Submodule<F>& s) {
  ZeroDimInfo<F> info;
  const F& f = s.field();
  std::size_t n = s.nvars(), k = s.rank();
  auto leads = s.leading_terms();
  for (std::size_t c = 0; c < k; ++c) {
    bool unit = false;
    std::vector<bool> pure(n, false);
    for (auto& t : leads) {
      if (t.comp != c) continue;
      if (t.m.deg == 0) unit = true;
      for (std::size_t l = 0; l < n; ++l)
        if (t.m.e[l] == t.m.deg) pure[l] = true;
    }
    if (unit) continue;
    if (!std::all_of(pure.begin(), pure.end(), [](bool b) { return b; })) return info;
  }
  info.zero_dimensional = true;
  // standard terms per component by breadth-first search
  auto standard_term = [&](const Term& t) {
    for (auto& l : leads)
      if (l.comp == t.comp && l.m.divides(t.m)) return false;
    return true;
  };
  std::vector<Term> all;
  for (std::size_t c = 0; c < k; ++c) {
    std::set<Monomial> seen;
    std::vector<Monomial> queue;
    Term one{Monomial::one(), static_cast<std::uint32_t>(c)};
    if (!standard_term(one)) continue;
    queue.push_back(Monomial::one());
    seen.insert(Monomial::one());
    for (std::size_t q = 0; q < queue.size(); ++q) {
      all.push_back(Term{queue[q], static_cast<std::uint32_t>(c)});
      for (std::size_t l = 0; l < n; ++l) {
        auto m = queue[q] * Monomial::var(l);
        if (seen.count(m) || !standard_term(Term{m, static_cast<std::uint32_t>(c)})) continue;
        seen.insert(m);
        queue.push_back(m);
      }
    }
  }
  std::sort(all.begin(), all.end(), [&](const Term& a, const Term& b) { return compare_terms(s.order(), a, b) < 0; });
  info.standard_terms = all;
  info.codim = all.size();
  auto pos = [&](const Term& t) -> std::size_t {
    for (std::size_t i = 0; i < all.size(); ++i)
      if (all[i] == t) return i;
    fail(ErrorKind::InternalInconsistency, "polymod::zero_dim_info", "normal form left the staircase");
  };
  for (std::size_t l = 0; l < n; ++l) {
    Matrix<F> X(f, info.codim, info.codim);
    for (std::size_t j = 0; j < all.size(); ++j) {
      Term t{all[j].m * Monomial::var(l), all[j].comp};
      auto nf = s.normal_form(ModVector<F>::from_term(f, n, k, t, f.one()));
      for (std::size_t c = 0; c < k; ++c)
        for (auto& [m, x] : nf.comps[c].terms) X.at(pos(Term{m, static_cast<std::uint32_t>(c)}), j) = x;
    }
    info.multiplication.push_back(std::move(X));
  }
  info.degree_bound = 1;
  if constexpr (is_finite_field_v<F>) {
    for (auto& X : info.multiplication) {
      if (X.rows() == 0) continue;
      for (auto& [g, mult] : upoly::factor(minimal_polynomial(X)))
        info.degree_bound = std::lcm(info.degree_bound, static_cast<std::uint64_t>(g.degree()));
    }
  } else {
    info.degree_bound = 0;
  }
  return info;
}

PointSet<FiniteField> enumerate_points(const Submodule<FiniteField>& s, std::uint64_t dmax) {
  const char* where = "polymod::enumerate_points";
  using F = FiniteField;
  const F& f = s.field();
  auto info = zero_dim_info(s);
  if (!info.zero_dimensional) fail(ErrorKind::NotZeroDimensional, where, "quotient is infinite-dimensional");
  std::uint64_t D = info.degree_bound;
  if (D > dmax)
    fail(ErrorKind::DegreeBoundTooSmall, where,
         "points need extension degree " + std::to_string(D) + " > dmax " + std::to_string(dmax));
  PointSet<F> ps;
  ps.ext_degree = D;
  if (D == 1) {
    ps.ext = f;
    ps.embedding = Embedding<F>::identity(f);
  } else {
    auto [K, emb] = extend(f, static_cast<int>(D));
    ps.ext = K;
    ps.embedding = emb;
  }
  if (info.codim == 0) return ps;
  const F& K = ps.ext;
  std::size_t n = s.nvars(), dim = info.codim;
  std::vector<Matrix<F>> XK;
  std::vector<std::vector<F::Elem>> roots;
  for (auto& X : info.multiplication) {
    Matrix<F> m(K, dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = ps.embedding(X.at(r, c));
    auto mp = minimal_polynomial(X);
    std::vector<F::Elem> coeffs;
    for (auto& c : mp.c) coeffs.push_back(ps.embedding(c));
    roots.push_back(upoly::roots(UPoly<F>(K, coeffs)));
    XK.push_back(std::move(m));
  }
  std::uint64_t q = f.size();
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    std::vector<F::Elem> xi(n);
    for (std::size_t l = 0; l < n; ++l) xi[l] = roots[l][idx[l]];
    Matrix<F> stacked(K, 0, dim);
    for (std::size_t l = 0; l < n; ++l) {
      auto m = XK[l];
      for (std::size_t r = 0; r < dim; ++r) m.at(r, r) = K.sub(m.at(r, r), xi[l]);
      for (auto& row : m.row_list()) stacked.append_row(row);
    }
    if (n == 0 || rank(stacked) < dim) {
      std::uint64_t e = 1;
      for (; e < D; ++e) {
        if (D % e) continue;
        std::uint64_t qe = 1;
        for (std::uint64_t i = 0; i < e; ++i) qe *= q;
        bool fixed = true;
        for (auto& x : xi) fixed = fixed && K.pow(x, qe) == x;
        if (fixed) break;
      }
      ps.points.push_back(xi);
      ps.degrees.push_back(e);
    }
    std::size_t l = 0;
    while (l < n && ++idx[l] == roots[l].size()) idx[l++] = 0;
    if (l == n) break;
  }
  return ps;
}

#define NULLSATZ_POLYMOD_INSTANTIATE(F)                                                                       \
  template struct MPoly<F>;                                                                                   \
  template struct ModVector<F>;                                                                               \
  template class Submodule<F>;                                                                                \
  template MPoly<F> mpoly::add(const MPoly<F>&, const MPoly<F>&);                                             \
  template MPoly<F> mpoly::sub(const MPoly<F>&, const MPoly<F>&);                                             \
  template MPoly<F> mpoly::neg(const MPoly<F>&);                                                              \
  template MPoly<F> mpoly::scale(const MPoly<F>&, const F::Elem&);                                            \
  template MPoly<F> mpoly::mul_term(const MPoly<F>&, const Monomial&, const F::Elem&);                        \
  template MPoly<F> mpoly::mul(const MPoly<F>&, const MPoly<F>&);                                             \
  template MPoly<F> mpoly::pow(const MPoly<F>&, unsigned);                                                    \
  template F::Elem mpoly::eval(const MPoly<F>&, const Embedding<F>&, const std::vector<F::Elem>&);            \
  template MPoly<F> mpoly::map_coefficients(const MPoly<F>&, const Embedding<F>&);                            \
  template ModVector<F> modvec::add(const ModVector<F>&, const ModVector<F>&);                                \
  template ModVector<F> modvec::sub(const ModVector<F>&, const ModVector<F>&);                                \
  template ModVector<F> modvec::scale(const ModVector<F>&, const MPoly<F>&);                                  \
  template ModVector<F> modvec::scale(const ModVector<F>&, const F::Elem&);                                   \
  template ModVector<F> modvec::concat(const ModVector<F>&, const ModVector<F>&);                             \
  template ModVector<F> modvec::slice(const ModVector<F>&, std::size_t, std::size_t);                         \
  template ModVector<F> modvec::apply_matrix(const Matrix<F>&, const ModVector<F>&);                          \
  template bool satisfies_buchberger_criterion(const Submodule<F>&);                                          \
  template Submodule<F> sum_submodules(const Submodule<F>&, const Submodule<F>&);                             \
  template Submodule<F> intersect_submodules(const Submodule<F>&, const Submodule<F>&);                       \
  template Submodule<F> image_submodule(const Matrix<F>&, const Submodule<F>&);                               \
  template Submodule<F> preimage_submodule(const Matrix<F>&, const Submodule<F>&);                            \
  template Submodule<F> kernel_submodule(const F&, const LinearModuleMap<F>&, ModuleOrder);                   \
  template ZeroDimInfo<F> zero_dim_info(const Submodule<F>&);

NULLSATZ_POLYMOD_INSTANTIATE(FiniteField)
NULLSATZ_POLYMOD_INSTANTIATE(NumberField)

}  // namespace nullsatz
