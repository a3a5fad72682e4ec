#include "nullsatz/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "nullsatz/io.hpp"
#include "nullsatz/nullsatz.hpp"
#include "nullsatz/parse.hpp"
#include "nullsatz/weyl.hpp"

namespace nullsatz {

namespace {

struct Options {
  std::string algebra;
  std::string ideal_file;
  std::string gens;
  std::size_t nvars = 0;
  std::optional<std::uint64_t> dmax;
  std::string certificate;
  std::uint64_t seed = 0;
  int degree_budget = 40;
  bool pretty = false;
  bool serial = false;
  // demos
  unsigned max_degree = 8;
  std::size_t random_r = 200;
  std::size_t demo_nvars = 1;
};

const FinDimAlgebra<FiniteField>& require_finite(const AlgebraSource& src, const char* where) {
  if (auto* a = std::get_if<FinDimAlgebra<FiniteField>>(&src.algebra)) return *a;
  fail(ErrorKind::InfiniteBaseField, where, "radicals are computed over finite base fields only");
}

std::string ideal_text(const Options& o) {
  if (!o.gens.empty() && !o.ideal_file.empty())
    fail(ErrorKind::InvalidArgument, "cli::run", "give either --ideal or --gens, not both");
  if (!o.gens.empty()) return o.gens;
  if (o.ideal_file.empty()) fail(ErrorKind::InvalidArgument, "cli::run", "missing --ideal FILE or --gens TEXT");
  return read_file(o.ideal_file);
}

struct Instance {
  AlgebraSource src;
  FinDimAlgebra<FiniteField> alg;
  ParsedIdeal<FiniteField> parsed;
  LeftIdeal<FiniteField> ideal;
};

Instance load_instance(const Options& o, const char* where) {
  auto src = load_algebra(o.algebra);
  auto alg = require_finite(src, where);
  auto parsed = parse_generators(alg, ideal_text(o), o.nvars);
  GbOptions gb;
  gb.degree_budget = o.degree_budget;
  auto ideal = LeftIdeal<FiniteField>::generate(alg, parsed.vars.size(), parsed.generators, {}, gb);
  return {std::move(src), std::move(alg), std::move(parsed), std::move(ideal)};
}

json instance_header(const Instance& in, const std::string& command, const Options& o) {
  json j;
  j["command"] = command;
  j["algebra"] = {{"source", in.src.label}, {"dim", in.alg.dim()}, {"names", in.alg.names()},
                  {"field", field_to_json(in.alg.field())}};
  j["vars"] = in.parsed.vars;
  j["seed"] = o.seed;
  json input = ideal_to_json(in.ideal, in.parsed.vars);
  input["generators"] = in.parsed.sources;
  j["input"] = input;
  return j;
}

void print_basis(std::ostream& out, const std::string& title, const json& ideal) {
  out << title << ":";
  if (ideal.value("full", false)) {
    out << " whole ring\n";
    return;
  }
  if (ideal.value("zero", false)) {
    out << " zero ideal\n";
    return;
  }
  out << "\n";
  for (auto& g : ideal.at("basis")) out << "    " << g.get<std::string>() << "\n";
}

json point_to_json(const DirectionalPoint<FiniteField>& p, const std::vector<std::string>& vars,
                   const FinDimAlgebra<FiniteField>& alg) {
  json xi = json::array(), v = json::array();
  for (auto& c : p.xi) xi.push_back(elem_to_json(p.field, c));
  for (auto& c : p.v) v.push_back(elem_to_json(p.field, c));
  auto J = directional_ideal(alg, vars.size(), p);
  return {{"factor", p.factor},
          {"field", field_to_json(p.field)},
          {"embedding_generator_image", elem_to_json(p.field, p.embedding.generator_image())},
          {"xi", xi},
          {"v", v},
          {"ideal", ideal_to_json(J, vars)}};
}

int cmd_radical(const Options& o, std::ostream& out) {
  auto in = load_instance(o, "nullsatz::rad_pipeline");
  PipelineOptions po;
  po.dmax = o.dmax;
  po.exec = o.serial ? Exec::Serial : Exec::Parallel;
  auto r = rad_pipeline(in.ideal, po);
  json j = instance_header(in, "radical", o);
  j["radical"] = ideal_to_json(r.radical, in.parsed.vars);
  j["dmax"] = r.dmax;
  j["semiprime_verified"] = r.semiprime_verified;
  j["certificate_points"] = r.certificate.size();
  json factors = json::array();
  const auto& wd = in.alg.wedderburn_data();
  for (auto& f : r.factors)
    factors.push_back({{"factor", f.factor},
                       {"k", wd.factors[f.factor].k},
                       {"center_degree", wd.factors[f.factor].degree},
                       {"degree_bound", f.degree_bound},
                       {"points", f.points},
                       {"rows_full", f.rows.is_full()}});
  j["factors"] = factors;

  if (!o.certificate.empty()) {
    json pts = json::array();
    for (auto& p : r.certificate) pts.push_back(point_to_json(p, in.parsed.vars, in.alg));
    json cert = {{"algebra", in.src.label}, {"vars", in.parsed.vars}, {"points", pts},
                 {"radical", j["radical"]}};
    std::ofstream f(o.certificate, std::ios::binary);
    if (!f) fail(ErrorKind::InvalidArgument, "cli::radical", "cannot write '" + o.certificate + "'");
    f << cert.dump() << "\n";
  }

  if (o.pretty) {
    out << "algebra " << in.src.label << " (dim " << in.alg.dim() << "), " << in.parsed.vars.size()
        << " variable(s)\n";
    print_basis(out, "  input", j["input"]);
    print_basis(out, "  radical", j["radical"]);
    out << "  dmax " << r.dmax << ", " << r.certificate.size() << " certificate point(s), semiprime "
        << (r.semiprime_verified ? "verified exhaustively" : "not exhaustively checked") << "\n";
  } else {
    out << j.dump() << "\n";
  }
  return 0;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  auto in = load_instance(o, "nullsatz::geometric_oracle");
  auto rad = geometric_oracle(in.ideal, o.dmax, o.serial ? Exec::Serial : Exec::Parallel);
  json j = instance_header(in, "oracle", o);
  j["radical"] = ideal_to_json(rad, in.parsed.vars);
  j["degree_bound"] = oracle_degree_bound(in.ideal);
  if (o.pretty) {
    out << "algebra " << in.src.label << ", oracle\n";
    print_basis(out, "  input", j["input"]);
    print_basis(out, "  radical", j["radical"]);
  } else {
    out << j.dump() << "\n";
  }
  return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
  auto in = load_instance(o, "nullsatz::check");
  PipelineOptions po;
  po.dmax = o.dmax;
  po.exec = o.serial ? Exec::Serial : Exec::Parallel;
  auto r = rad_pipeline(in.ideal, po);
  auto orc = geometric_oracle(in.ideal, o.dmax, po.exec);
  bool equal = r.radical == orc;
  json j = instance_header(in, "check", o);
  j["pipeline"] = ideal_to_json(r.radical, in.parsed.vars);
  j["oracle"] = ideal_to_json(orc, in.parsed.vars);
  j["equal"] = equal;
  j["semiprime_verified"] = r.semiprime_verified;
  if (o.pretty) {
    out << "algebra " << in.src.label << ": pipeline and oracle " << (equal ? "agree" : "DISAGREE") << "\n";
    print_basis(out, "  pipeline", j["pipeline"]);
    if (!equal) print_basis(out, "  oracle", j["oracle"]);
  } else {
    out << j.dump() << "\n";
  }
  return equal ? 0 : 1;
}

template <class F>
int algebra_info(const AlgebraSource& src, const FinDimAlgebra<F>& a, const Options& o, std::ostream& out) {
  json j;
  j["command"] = "algebra-info";
  j["algebra"] = {{"source", src.label}, {"dim", a.dim()}, {"names", a.names()}, {"field", field_to_json(a.field())}};
  j["commutative"] = a.is_commutative();
  int code = 0;
  try {
    const auto& wd = a.wedderburn_data();
    json rad = json::array();
    for (auto& r : wd.radical) rad.push_back(a.element_to_string(r));
    j["radical"] = rad;
    json factors = json::array();
    for (auto& f : wd.factors)
      factors.push_back({{"k", f.k},
                         {"center_degree", f.degree},
                         {"center_minpoly", f.center_minpoly.to_string("t")},
                         {"dim", f.k * f.k * f.degree}});
    j["factors"] = factors;
    if (wd.radical.empty()) {
      auto xi = xi_preimage(a, o.seed);
      bool holds = true;
      for (auto& e : xi.entries)
        for (std::size_t m = 0; m < a.dim(); ++m)
          if (xi_apply(a, e.preimage, a.basis(m)) != e.omega[m]) holds = false;
      j["xi"] = {{"applicable", true}, {"entries", xi.entries.size()}, {"identity_holds", holds}};
      if (!holds) code = 1;
    } else {
      // dual-basis data is only defined for semisimple algebras
      j["xi"] = {{"applicable", false}};
    }
  } catch (const Error& e) {
    if (!is_unsupported_regime(e.kind())) throw;
    j["unsupported"] = {{"error", kind_name(e.kind())}, {"where", e.where()}, {"message", e.message()}};
    code = 3;
  }
  if (o.pretty) {
    out << "algebra " << src.label << ": dim " << a.dim() << (a.is_commutative() ? ", commutative" : "") << "\n";
    if (j.contains("radical")) {
      out << "  radical dim " << j["radical"].size() << "\n";
      for (auto& r : j["radical"]) out << "    " << r.get<std::string>() << "\n";
      for (auto& f : j["factors"])
        out << "  factor M_" << f["k"] << " over a degree " << f["center_degree"] << " centre ("
            << f["center_minpoly"].get<std::string>() << ")\n";
      if (j["xi"]["applicable"].get<bool>())
        out << "  Xi identity " << (j["xi"]["identity_holds"].get<bool>() ? "holds" : "FAILS") << " on "
            << j["xi"]["entries"] << " dual functional(s)\n";
      else
        out << "  Xi data not defined (radical is nonzero)\n";
    }
    if (j.contains("unsupported")) out << "  unsupported: " << j["unsupported"]["message"].get<std::string>() << "\n";
  } else {
    out << j.dump() << "\n";
  }
  return code;
}

int cmd_algebra_info(const Options& o, std::ostream& out) {
  auto src = load_algebra(o.algebra);
  return std::visit([&](const auto& a) { return algebra_info(src, a, o, out); }, src.algebra);
}

int cmd_demo_sqrt2(const Options& o, std::ostream& out) {
  auto r = nonmaximal_directional_demo(o.demo_nvars);
  json j = {{"command", "demo sqrt2"},
            {"nvars", o.demo_nvars},
            {"theta_standard", r.theta_standard},
            {"contained", r.contained},
            {"strict", r.strict},
            {"proper", r.proper},
            {"vanishing_in_both", r.vanishing_in_both},
            {"u_maximal", r.u_maximal},
            {"witness", r.witness},
            {"codim_u", r.codim_u},
            {"codim_v", r.codim_v},
            {"ok", r.ok()}};
  if (o.pretty) {
    auto mark = [](bool b) { return b ? "PASS" : "FAIL"; };
    out << "M2(Q), xi = 0, v = (1, sqrt 2), u = (1, 0)\n"
        << "  " << mark(r.theta_standard) << " splitting map is the identity\n"
        << "  " << mark(r.contained) << " J_v inside J_u\n"
        << "  " << mark(r.strict) << " strict, witness " << r.witness << " in J_u but not J_v\n"
        << "  " << mark(r.proper) << " J_u is proper (codim " << r.codim_u << ", J_v codim " << r.codim_v << ")\n"
        << "  " << mark(r.vanishing_in_both) << " polynomials vanishing at 0 lie in both\n"
        << "  " << mark(r.u_maximal) << " J_u is maximal\n";
  } else {
    out << j.dump() << "\n";
  }
  return r.ok() ? 0 : 1;
}

int cmd_demo_weyl(const Options& o, std::ostream& out) {
  WeylCheckOptions wo;
  wo.max_degree = o.max_degree;
  wo.random_r = o.random_r;
  wo.seed = o.seed;
  auto r = certificate_check(wo);
  std::mt19937_64 rng(o.seed ^ 0x5eedULL);
  std::size_t reached = 0, probes = 50;
  for (std::size_t t = 0; t < probes; ++t) {
    WeylElem a;
    while (a.is_zero()) a = weyl::random(rng, 4, 4);
    if (simplicity_probe(a, 2 * o.max_degree + 2).reached_one) ++reached;
  }
  json ids = json::array();
  for (auto& l : r.identities)
    ids.push_back({{"name", l.name}, {"passed", l.passed}, {"checked", l.checked}, {"witness", l.witness}});
  const auto& m = r.membership;
  json j = {{"command", "demo weyl"},
            {"max_degree", o.max_degree},
            {"seed", o.seed},
            {"identities", ids},
            {"non_membership",
             {{"refuted", m.refuted},
              {"bound", m.bound},
              {"unknowns", m.unknowns},
              {"equations", m.equations},
              {"rank", m.system_rank},
              {"augmented_rank", m.augmented_rank},
              {"degree_additive", m.degree_additive},
              {"samples", m.samples}}},
            {"simplicity", {{"probes", probes}, {"reached_one", reached}, {"inconclusive", probes - reached}}},
            {"ok", r.ok()}};
  if (o.pretty) {
    for (auto& l : r.identities)
      out << (l.passed ? "PASS " : "FAIL ") << l.name << " (" << l.checked << " instances)"
          << (l.passed ? "" : ", fails at " + l.witness) << "\n";
    out << (m.refuted && m.degree_additive ? "PASS " : "FAIL ") << "x not in A*(yx): system of " << m.equations
        << " equations in " << m.unknowns << " unknowns, rank " << m.system_rank << " vs augmented "
        << m.augmented_rank << "\n";
    out << "simplicity probe: " << reached << "/" << probes << " reached 1, " << probes - reached
        << " inconclusive\n";
  } else {
    out << j.dump() << "\n";
  }
  return r.ok() ? 0 : 1;
}

void report_error(std::ostream& err, const std::string& kind, const std::string& where, const std::string& msg) {
  err << json{{"error", kind}, {"where", where}, {"message", msg}}.dump() << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Radicals of left ideals in algebra-valued polynomial rings", "nullsatz"};
  app.require_subcommand(1);

  auto instance_opts = [&](CLI::App* c, bool certificate) {
    c->add_option("--algebra", o.algebra, "preset name or algebra JSON file")->required();
    c->add_option("--ideal", o.ideal_file, "file with one generator per line");
    c->add_option("--gens", o.gens, "generators inline, separated by ';'");
    c->add_option("--nvars", o.nvars, "number of variables (default: inferred from x or x1..xn)");
    c->add_option("--dmax", o.dmax, "extension degree bound for points");
    c->add_option("--degree-budget", o.degree_budget, "total degree cap for Groebner bases");
    c->add_option("--seed", o.seed, "seed for randomized subroutines");
    c->add_flag("--pretty", o.pretty, "human-readable output");
    c->add_flag("--serial", o.serial, "run kernels single-threaded");
    if (certificate) c->add_option("--certificate", o.certificate, "write certificate points as JSON");
  };
  auto* radical = app.add_subcommand("radical", "rad(I) through the directional-point pipeline");
  instance_opts(radical, true);
  auto* oracle = app.add_subcommand("oracle", "rad(I) by brute force over all points");
  instance_opts(oracle, false);
  auto* check = app.add_subcommand("check", "compare pipeline and oracle; exit 0 iff equal");
  instance_opts(check, false);
  auto* info = app.add_subcommand("algebra-info", "radical, Wedderburn factors and Xi data");
  info->add_option("--algebra", o.algebra, "preset name or algebra JSON file")->required();
  info->add_option("--seed", o.seed, "seed for randomized subroutines");
  info->add_flag("--pretty", o.pretty, "human-readable output");
  auto* demo = app.add_subcommand("demo", "built-in demonstrations");
  demo->require_subcommand(1);
  auto* sqrt2 = demo->add_subcommand("sqrt2", "non-maximal directional ideal over M2(Q)");
  sqrt2->add_option("--nvars", o.demo_nvars, "number of variables")->check(CLI::Range(1, 8));
  sqrt2->add_flag("--pretty", o.pretty, "human-readable output");
  auto* wdemo = demo->add_subcommand("weyl", "identities behind the first Weyl algebra counterexample");
  wdemo->add_option("--max-degree", o.max_degree, "range of k, n and degree of random r")->check(CLI::Range(1, 24));
  wdemo->add_option("--random-r", o.random_r, "number of random r");
  wdemo->add_option("--seed", o.seed, "seed");
  wdemo->add_flag("--pretty", o.pretty, "human-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (radical->parsed()) return cmd_radical(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (info->parsed()) return cmd_algebra_info(o, out);
    if (sqrt2->parsed()) return cmd_demo_sqrt2(o, out);
    if (wdemo->parsed()) return cmd_demo_weyl(o, out);
  } catch (const ParseError& e) {
    report_error(err, "ParseError", e.where(), e.message());
    return 2;
  } catch (const Error& e) {
    report_error(err, std::string(kind_name(e.kind())), e.where(), e.message());
    return is_unsupported_regime(e.kind()) ? 3 : 2;
  } catch (const json::exception& e) {
    report_error(err, "InvalidArgument", "cli::run", e.what());
    return 2;
  } catch (const std::bad_alloc&) {
    report_error(err, "NotSupported", "cli::run", "out of memory");
    return 3;
  } catch (const std::exception& e) {
    report_error(err, "InternalError", "cli::run", e.what());
    return 2;
  }
  return 2;
}

}  // namespace nullsatz
