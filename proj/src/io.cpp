#include "nullsatz/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "nullsatz/parse.hpp"

namespace nullsatz {

namespace {

const char* kPresetWhere = "cli::algebra_preset";

// "Q" or a prime power
std::variant<FiniteField, NumberField> field_of_order(const std::string& q) {
  if (q == "Q") return NumberField::rationals();
  std::uint64_t n = 0;
  try {
    n = std::stoull(q);
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidArgument, kPresetWhere, "field order '" + q + "' is not a number");
  }
  auto ps = n >= 2 ? prime_factors(n) : std::vector<std::uint64_t>{};
  if (ps.size() != 1) fail(ErrorKind::InvalidArgument, kPresetWhere, "field order " + q + " is not a prime power");
  std::int64_t p = static_cast<std::int64_t>(ps[0]);
  if (n > (1u << 16)) fail(ErrorKind::NotSupported, kPresetWhere, "field order " + q + " is too large");
  int e = 0;
  for (std::uint64_t r = n; r > 1; r /= ps[0]) ++e;
  if (e == 1) return FiniteField::prime(p);
  auto big = extend(FiniteField::prime(p), e).first;
  std::vector<std::int64_t> mod(big.modulus().begin(), big.modulus().end());
  return FiniteField::extension(p, mod, "t");
}

// algebras over a proper extension F_q are viewed over F_p
FinDimAlgebra<FiniteField> over_prime(const FinDimAlgebra<FiniteField>& a) {
  if (a.field().is_prime_field()) return a;
  return restrict_scalars(a.field(), a.dim(), a.structure(), a.unit(), a.names());
}

template <class Build>
AnyAlgebra build_over(const std::string& q, Build&& build) {
  auto f = field_of_order(q);
  if (auto* ff = std::get_if<FiniteField>(&f)) return over_prime(build(*ff));
  return build(std::get<NumberField>(f));
}

std::string rational_string(const mpq_class& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class rational_from_json(const json& j, const char* where) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (j.is_string()) {
    mpq_class q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0)
      fail(ErrorKind::InvalidArgument, where, "bad rational '" + j.get<std::string>() + "'");
    q.canonicalize();
    return q;
  }
  fail(ErrorKind::InvalidArgument, where, "expected an integer or a \"num/den\" string, got " + j.dump());
}

template <class F>
AnyAlgebra algebra_over(const F& field, const json& j) {
  const char* where = "cli::algebra_from_json";
  auto d = j.at("dim").get<std::size_t>();
  if (d == 0 || d > 64) fail(ErrorKind::NotSupported, where, "dimension must be between 1 and 64");
  Vec<F> unit;
  const auto& u = j.at("unit");
  if (!u.is_array() || u.size() != d) fail(ErrorKind::DimensionMismatch, where, "unit needs " + std::to_string(d) + " entries");
  for (auto& x : u) unit.push_back(elem_from_json(field, x));
  const auto& s = j.at("structure");
  if (!s.is_array() || s.size() != d) fail(ErrorKind::DimensionMismatch, where, "structure needs d x d x d entries");
  std::vector<typename F::Elem> c;
  for (auto& row : s) {
    if (!row.is_array() || row.size() != d) fail(ErrorKind::DimensionMismatch, where, "structure needs d x d x d entries");
    for (auto& prod : row) {
      if (!prod.is_array() || prod.size() != d)
        fail(ErrorKind::DimensionMismatch, where, "structure needs d x d x d entries");
      for (auto& x : prod) c.push_back(elem_from_json(field, x));
    }
  }
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  auto a = FinDimAlgebra<F>::create(field, d, std::move(c), std::move(unit), std::move(names));
  if constexpr (std::is_same_v<F, FiniteField>) return over_prime(a);
  return a;
}

}  // namespace

std::vector<std::string> preset_examples() {
  return {"M2(3)", "M2(Q)", "dual_numbers(5)", "F_5[eps]", "F_25", "F_5[u]/(u^2-2)", "group:C2(5)",
          "upper_triangular:2(5)", "H(Q)"};
}

bool is_preset(const std::string& name) {
  static const std::regex re(
      R"(^(M\d+\((\d+|Q)\)|dual_numbers\((\d+|Q)\)|F_\d+\[eps\]|F_\d+|F_\d+\[[A-Za-z_]\w*\]/.+|group:C\d+\((\d+|Q)\)|upper_triangular:\d+\((\d+|Q)\)|H\(Q\))$)");
  return std::regex_match(name, re);
}

AlgebraSource algebra_preset(const std::string& name) {
  std::smatch m;
  AlgebraSource src{name, {}};
  static const std::regex mat(R"(^M(\d+)\((\d+|Q)\)$)"), dual(R"(^dual_numbers\((\d+|Q)\)$)"),
      eps(R"(^F_(\d+)\[eps\]$)"), fq(R"(^F_(\d+)$)"), quo(R"(^F_(\d+)\[([A-Za-z_]\w*)\]/(.+)$)"),
      grp(R"(^group:C(\d+)\((\d+|Q)\)$)"), ut(R"(^upper_triangular:(\d+)\((\d+|Q)\)$)");
  auto small = [&](const std::string& s, std::size_t hi) {
    std::size_t n = std::stoul(s);
    if (n == 0 || n > hi) fail(ErrorKind::NotSupported, kPresetWhere, "size " + s + " out of range in " + name);
    return n;
  };
  if (std::regex_match(name, m, mat)) {
    std::size_t n = small(m[1], 6);
    src.algebra = build_over(m[2], [&](const auto& f) { return matrix_algebra(f, n); });
  } else if (std::regex_match(name, m, dual) || std::regex_match(name, m, eps)) {
    src.algebra = build_over(m[1], [&](const auto& f) { return dual_numbers(f); });
  } else if (std::regex_match(name, m, fq)) {
    auto f = field_of_order(m[1]);
    const auto& ff = std::get<FiniteField>(f);
    if (ff.is_prime_field()) {
      src.algebra = matrix_algebra(ff, 1);
    } else {
      std::vector<FiniteField::Elem> mod(ff.modulus().begin(), ff.modulus().end());
      src.algebra = polynomial_quotient_algebra(ff.prime_field(), mod, "u");
    }
  } else if (std::regex_match(name, m, quo)) {
    auto f = field_of_order(m[1]);
    const auto& ff = std::get<FiniteField>(f);
    std::string var = m[2];
    auto poly = parse_polynomial(ff, {var}, std::string(m[3]));
    int deg = poly.total_degree();
    if (deg < 1) fail(ErrorKind::InvalidArgument, kPresetWhere, "modulus must have positive degree");
    std::vector<FiniteField::Elem> coeffs(deg + 1, 0);
    for (auto& [mono, c] : poly.terms) coeffs[mono.e[0]] = c;
    auto lead = ff.inv(coeffs.back());
    for (auto& c : coeffs) c = ff.mul(c, lead);
    src.algebra = over_prime(polynomial_quotient_algebra(ff, coeffs, var));
  } else if (std::regex_match(name, m, grp)) {
    std::size_t n = small(m[1], 16);
    src.algebra = build_over(m[2], [&](const auto& f) { return cyclic_group_algebra(f, n); });
  } else if (std::regex_match(name, m, ut)) {
    std::size_t n = small(m[1], 5);
    src.algebra = build_over(m[2], [&](const auto& f) { return upper_triangular(f, n); });
  } else if (name == "H(Q)") {
    auto q = NumberField::rationals();
    src.algebra = quaternion_algebra(q, q.from_int(-1), q.from_int(-1));
  } else {
    std::string known;
    for (auto& p : preset_examples()) known += (known.empty() ? "" : ", ") + p;
    fail(ErrorKind::InvalidArgument, kPresetWhere, "unknown preset '" + name + "' (examples: " + known + ")");
  }
  return src;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidArgument, "cli::read_file", "cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

AlgebraSource load_algebra(const std::string& spec) {
  if (is_preset(spec)) return algebra_preset(spec);
  std::string text = read_file(spec);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("cli::load_algebra", e.byte > 0 ? e.byte - 1 : 0, std::string("invalid JSON: ") + e.what());
  }
  return {spec, algebra_from_json(j)};
}

FiniteField finite_field_from_json(const json& j) {
  const char* where = "cli::field_from_json";
  const auto& base = j.at("base");
  if (!base.is_object() || !base.contains("Fp")) fail(ErrorKind::InvalidArgument, where, "expected {\"Fp\": p}");
  auto p = base.at("Fp").get<std::int64_t>();
  if (p < 2 || p > 65521 || !is_prime_number(static_cast<std::uint64_t>(p)))
    fail(ErrorKind::InvalidArgument, where, "Fp must be a prime below 2^16");
  auto fp = FiniteField::prime(p);
  if (!j.contains("tower") || j.at("tower").empty()) return fp;
  const auto& tower = j.at("tower");
  if (tower.size() > 1) fail(ErrorKind::NotSupported, where, "towers of height above one");
  const auto& step = tower.at(0);
  std::vector<FiniteField::Elem> mp;
  for (auto& c : step.at("minpoly")) mp.push_back(fp.from_rational(rational_from_json(c, where)));
  return FiniteField::make_extension(fp, step.value("var", "t"), mp);
}

AnyAlgebra algebra_from_json(const json& j) {
  const char* where = "cli::algebra_from_json";
  try {
    const auto& fj = j.at("field");
    if (fj.is_string() && fj.get<std::string>() == "Q") return algebra_over(NumberField::rationals(), j);
    if (fj.is_object() && fj.at("base").is_string() && fj.at("base").get<std::string>() == "Q") {
      auto q = NumberField::rationals();
      if (!fj.contains("tower") || fj.at("tower").empty()) return algebra_over(q, j);
      const auto& tower = fj.at("tower");
      if (tower.size() > 1) fail(ErrorKind::NotSupported, where, "towers of height above one");
      std::vector<mpq_class> mp;
      for (auto& c : tower.at(0).at("minpoly")) mp.push_back(rational_from_json(c, where));
      return algebra_over(NumberField::extension(mp, tower.at(0).value("var", "t")), j);
    }
    return algebra_over(finite_field_from_json(fj), j);
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidArgument, where, std::string("malformed algebra JSON: ") + e.what());
  }
}

template <class F>
json field_to_json(const F& f) {
  json j;
  if constexpr (std::is_same_v<F, FiniteField>) {
    j["base"] = {{"Fp", f.characteristic()}};
  } else {
    j["base"] = "Q";
  }
  j["tower"] = json::array();
  if (!f.is_prime_field()) {
    json mp = json::array();
    for (auto& c : f.modulus()) {
      if constexpr (std::is_same_v<F, FiniteField>)
        mp.push_back(c);
      else
        mp.push_back(rational_string(c));
    }
    j["tower"].push_back({{"var", f.var()}, {"minpoly", mp}});
  }
  return j;
}

template <class F>
json elem_to_json(const F& f, const typename F::Elem& a) {
  auto one = [](const auto& c) -> json {
    if constexpr (std::is_same_v<F, FiniteField>)
      return c;
    else
      return json(rational_string(c.c[0]));
  };
  if (f.is_prime_field()) return one(a);
  json arr = json::array();
  for (auto& c : f.to_prime(a)) arr.push_back(one(c));
  return arr;
}

template <class F>
typename F::Elem elem_from_json(const F& f, const json& j) {
  const char* where = "cli::elem_from_json";
  auto scalar = [&](const json& x) { return f.prime_field().from_rational(rational_from_json(x, where)); };
  if (f.is_prime_field()) {
    if (j.is_array()) fail(ErrorKind::InvalidArgument, where, "prime-field element given as an array");
    return scalar(j);
  }
  if (!j.is_array()) return f.from_rational(rational_from_json(j, where));
  if (j.size() != static_cast<std::size_t>(f.degree()))
    fail(ErrorKind::DimensionMismatch, where, "element needs " + std::to_string(f.degree()) + " coordinates");
  std::vector<typename F::Elem> cs;
  for (auto& x : j) cs.push_back(scalar(x));
  return f.from_prime(cs);
}

template <class F>
json algebra_to_json(const FinDimAlgebra<F>& a) {
  json j;
  const auto& f = a.field();
  j["field"] = field_to_json(f);
  j["dim"] = a.dim();
  j["names"] = a.names();
  json u = json::array();
  for (auto& x : a.unit()) u.push_back(elem_to_json(f, x));
  j["unit"] = u;
  json s = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < a.dim(); ++k) {
      json prod = json::array();
      for (std::size_t l = 0; l < a.dim(); ++l) prod.push_back(elem_to_json(f, a.c(i, k, l)));
      row.push_back(prod);
    }
    s.push_back(row);
  }
  j["structure"] = s;
  return j;
}

template <class F>
json ideal_to_json(const LeftIdeal<F>& i, const std::vector<std::string>& vars) {
  json basis = json::array();
  for (auto& g : i.basis()) basis.push_back(g.to_string(vars));
  return {{"basis", basis}, {"full", i.is_full()}, {"zero", i.is_zero()}};
}

#define NULLSATZ_IO(F)                                                         \
  template json field_to_json(const F&);                                       \
  template json elem_to_json(const F&, const F::Elem&);                        \
  template F::Elem elem_from_json(const F&, const json&);                      \
  template json algebra_to_json(const FinDimAlgebra<F>&);                      \
  template json ideal_to_json(const LeftIdeal<F>&, const std::vector<std::string>&);
NULLSATZ_IO(FiniteField)
NULLSATZ_IO(NumberField)

}  // namespace nullsatz
