#include "nullsatz/parse.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <algorithm>

#include <gmpxx.h>

namespace nullsatz {

namespace {

[[noreturn]] void parse_fail(const char* where, std::size_t offset, const std::string& what) {
  throw ParseError(where, offset, what);
}

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Ring operations the parser needs; V is MPoly or AlgPoly.
template <class V>
struct RingOps {
  std::function<V(const mpq_class&)> number;
  std::function<std::optional<V>(const std::string&)> name;
  std::function<V(const V&, const V&)> add, sub, mul;
  std::function<V(const V&)> neg;
};

template <class V>
class Parser {
 public:
  Parser(std::string_view s, const RingOps<V>& ops, const char* where, std::size_t base = 0)
      : s_(s), ops_(ops), where_(where), base_(base) {}

  V parse_all() {
    V v = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

  // parse an expression and stop at the given delimiters
  V parse_until(std::size_t& pos) {
    pos_ = pos;
    V v = expr();
    skip();
    pos = pos_;
    return v;
  }

 private:
  std::string_view s_;
  const RingOps<V>& ops_;
  const char* where_;
  std::size_t base_;
  std::size_t pos_ = 0;

  [[noreturn]] void error(const std::string& what) { parse_fail(where_, base_ + pos_, what); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  V expr() {
    skip();
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    V v = term();
    if (negate) v = ops_.neg(v);
    while (true) {
      if (eat('+'))
        v = ops_.add(v, term());
      else if (eat('-'))
        v = ops_.sub(v, term());
      else
        return v;
    }
  }

  V term() {
    V v = factor();
    while (eat('*')) v = ops_.mul(v, factor());
    return v;
  }

  V factor() {
    if (eat('-')) return ops_.neg(factor());
    V v = atom();
    if (eat('^')) {
      skip();
      std::size_t at = pos_;
      mpz_class e = integer();
      if (e > 1000) parse_fail(where_, base_ + at, "exponent too large");
      V r = ops_.number(1);
      for (unsigned long i = 0; i < e.get_ui(); ++i) r = ops_.mul(r, v);
      return r;
    }
    return v;
  }

  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  V atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      mpq_class q(integer());
      if (eat('/')) {
        std::size_t at = pos_;
        mpz_class d = integer();
        if (d == 0) parse_fail(where_, base_ + at, "zero denominator");
        q /= d;
      }
      try {
        return ops_.number(q);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ParseError) throw;
        parse_fail(where_, base_ + start, e.message());
      }
    }
    if (name_start(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && name_char(s_[pos_])) ++pos_;
      std::string n(s_.substr(start, pos_ - start));
      auto v = ops_.name(n);
      if (!v) parse_fail(where_, base_ + start, "unknown name '" + n + "'");
      return *v;
    }
    if (c == '(') {
      std::size_t open = pos_++;
      V v = expr();
      if (!eat(')')) parse_fail(where_, base_ + open, "unbalanced '('");
      return v;
    }
    error("unexpected '" + std::string(1, c) + "'");
  }
};

template <class F>
std::optional<typename F::Elem> field_name(const F& field, const std::string& n) {
  if (!field.is_prime_field() && n == field.var()) return field.generator();
  return std::nullopt;
}

template <class F>
typename F::Elem field_number(const F& field, const mpq_class& q, const char* where) {
  if constexpr (std::is_same_v<F, FiniteField>) {
    if (mpz_class(q.get_den() % field.characteristic()) == 0)
      fail(ErrorKind::ParseError, where, "denominator " + q.get_den().get_str() + " vanishes in the field");
  }
  return field.from_rational(q);
}

template <class F>
RingOps<MPoly<F>> mpoly_ops(const F& field, const std::vector<std::string>& vars) {
  const std::size_t n = vars.size();
  RingOps<MPoly<F>> ops;
  ops.number = [field, n](const mpq_class& q) {
    return MPoly<F>::constant(field, n, field_number(field, q, "cli::parse_polynomial"));
  };
  ops.name = [field, vars](const std::string& s) -> std::optional<MPoly<F>> {
    for (std::size_t l = 0; l < vars.size(); ++l)
      if (vars[l] == s) return MPoly<F>::variable(field, vars.size(), l);
    if (auto g = field_name(field, s)) return MPoly<F>::constant(field, vars.size(), *g);
    return std::nullopt;
  };
  ops.add = [](const MPoly<F>& a, const MPoly<F>& b) { return mpoly::add(a, b); };
  ops.sub = [](const MPoly<F>& a, const MPoly<F>& b) { return mpoly::sub(a, b); };
  ops.mul = [](const MPoly<F>& a, const MPoly<F>& b) { return mpoly::mul(a, b); };
  ops.neg = [](const MPoly<F>& a) { return mpoly::neg(a); };
  return ops;
}

}  // namespace

template <class F>
MPoly<F> parse_polynomial(const F& field, const std::vector<std::string>& vars, std::string_view text) {
  auto ops = mpoly_ops(field, vars);
  return Parser<MPoly<F>>(text, ops, "cli::parse_polynomial").parse_all();
}

template <class F>
ModVector<F> parse_vector(const F& field, const std::vector<std::string>& vars, std::string_view text) {
  const char* where = "cli::parse_vector";
  auto ops = mpoly_ops(field, vars);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos >= text.size() || text[pos] != '[') parse_fail(where, pos, "expected '['");
  ++pos;
  std::vector<MPoly<F>> comps;
  Parser<MPoly<F>> p(text, ops, where);
  skip();
  if (pos < text.size() && text[pos] == ']') {
    parse_fail(where, pos, "empty vector");
  }
  while (true) {
    comps.push_back(p.parse_until(pos));
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
      break;
    }
    parse_fail(where, pos, "expected ',' or ']'");
  }
  skip();
  if (pos != text.size()) parse_fail(where, pos, "trailing input");
  ModVector<F> v(field, vars.size(), comps.size());
  v.comps = std::move(comps);
  return v;
}

template <class F>
AlgPoly<F> parse_algpoly(const FinDimAlgebra<F>& alg, const std::vector<std::string>& vars, std::string_view text) {
  const std::size_t n = vars.size();
  const F& field = alg.field();
  RingOps<AlgPoly<F>> ops;
  ops.number = [&](const mpq_class& q) {
    return AlgPoly<F>::constant(alg, n, alg.scalar(field_number(field, q, "cli::parse_algpoly")));
  };
  ops.name = [&](const std::string& s) -> std::optional<AlgPoly<F>> {
    for (std::size_t l = 0; l < n; ++l)
      if (vars[l] == s) return AlgPoly<F>::variable(alg, n, l);
    if (auto i = alg.name_index(s)) return AlgPoly<F>::basis(alg, n, *i);
    if (auto g = field_name(field, s)) return AlgPoly<F>::constant(alg, n, alg.scalar(*g));
    return std::nullopt;
  };
  ops.add = [](const AlgPoly<F>& a, const AlgPoly<F>& b) { return algpoly::add(a, b); };
  ops.sub = [](const AlgPoly<F>& a, const AlgPoly<F>& b) { return algpoly::sub(a, b); };
  ops.mul = [](const AlgPoly<F>& a, const AlgPoly<F>& b) { return algpoly::mul(a, b); };
  ops.neg = [&](const AlgPoly<F>& a) { return algpoly::scale(a, field.neg(field.one())); };
  return Parser<AlgPoly<F>>(text, ops, "cli::parse_algpoly").parse_all();
}

std::vector<std::string> infer_variables(std::string_view text, std::size_t min_vars) {
  bool bare = false;
  std::size_t indexed = 0;
  for (std::size_t i = 0; i < text.size();) {
    if (!name_start(text[i])) {
      // skip numbers so "2x" style junk is left to the parser
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && name_char(text[i])) ++i;
    if (start > 0 && name_char(text[start - 1])) continue;
    auto n = text.substr(start, i - start);
    if (n == "x") {
      bare = true;
    } else if (n.size() > 1 && n[0] == 'x' && std::all_of(n.begin() + 1, n.end(), [](char c) {
                 return std::isdigit(static_cast<unsigned char>(c));
               })) {
      std::size_t k = std::stoul(std::string(n.substr(1)));
      if (k == 0) throw ParseError("cli::infer_variables", start, "variables are numbered from x1");
      if (k > kMaxVars) fail(ErrorKind::NotSupported, "cli::infer_variables", "more than 8 variables");
      indexed = std::max(indexed, k);
    }
  }
  if (bare && indexed)
    throw ParseError("cli::infer_variables", 0, "cannot mix 'x' with indexed variables x1, x2, ...");
  std::size_t n = std::max<std::size_t>(indexed ? indexed : 1, min_vars);
  return default_var_names(n);
}

std::vector<std::string> split_generators(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    auto b = cur.find_first_not_of(" \t\r");
    if (b != std::string::npos) {
      auto e = cur.find_last_not_of(" \t\r");
      out.push_back(cur.substr(b, e - b + 1));
    }
    cur.clear();
  };
  bool comment = false;
  for (char c : text) {
    if (c == '\n') {
      comment = false;
      flush();
      continue;
    }
    if (comment) continue;
    if (c == '#') {
      comment = true;
      continue;
    }
    if (c == ';') {
      flush();
      continue;
    }
    cur += c;
  }
  flush();
  return out;
}

template <class F>
ParsedIdeal<F> parse_generators(const FinDimAlgebra<F>& alg, std::string_view text, std::size_t nvars) {
  ParsedIdeal<F> r;
  r.sources = split_generators(text);
  if (nvars == 0) {
    std::string all;
    for (auto& s : r.sources) all += s + "\n";
    r.vars = infer_variables(all);
  } else {
    if (nvars > kMaxVars) fail(ErrorKind::NotSupported, "cli::parse_generators", "more than 8 variables");
    r.vars = default_var_names(nvars);
  }
  for (std::size_t i = 0; i < r.sources.size(); ++i) {
    try {
      r.generators.push_back(parse_algpoly(alg, r.vars, r.sources[i]));
    } catch (const ParseError& e) {
      // drop the " at offset N" suffix; the rethrow adds it back
      std::string what = e.message();
      what = what.substr(0, what.rfind(" at offset "));
      throw ParseError(e.where(), e.offset(), "generator " + std::to_string(i + 1) + " '" + r.sources[i] + "': " + what);
    }
  }
  return r;
}

#define NULLSATZ_PARSE(F)                                                                                   \
  template MPoly<F> parse_polynomial(const F&, const std::vector<std::string>&, std::string_view);        \
  template ModVector<F> parse_vector(const F&, const std::vector<std::string>&, std::string_view);        \
  template AlgPoly<F> parse_algpoly(const FinDimAlgebra<F>&, const std::vector<std::string>&, std::string_view); \
  template ParsedIdeal<F> parse_generators(const FinDimAlgebra<F>&, std::string_view, std::size_t);
NULLSATZ_PARSE(FiniteField)
NULLSATZ_PARSE(NumberField)

}  // namespace nullsatz
