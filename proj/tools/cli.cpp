#include "cli.hpp"

#include <fstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "superleibniz/extension.hpp"
#include "superleibniz/random.hpp"
#include "superleibniz/report.hpp"

namespace superleibniz::cli {

namespace {

constexpr int kDefaultMaxArity = 4;
constexpr int kDefaultMaxDim = 12;
constexpr std::size_t kListLimit = 10;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  std::string format = "text";
  std::uint64_t seed = 0;
  int max_arity = kDefaultMaxArity;
  int max_dim = kDefaultMaxDim;
  int threads = 1;
  std::ostream* err = nullptr;

  ComplexOptions options() const { return {max_arity, threads}; }
};

struct Args {
  std::string algebra;
  std::string module = "self";
  int max_n = 2;
  bool bases = false;
  int verify_random = 0;
  std::string cocycle;
  std::string out;
  std::vector<std::string> deformations;
  bool mod_order = false;
  int order = 0;
};

// ---------------------------------------------------------------------------
// Input

std::string power_text(Index base, int exponent) {
  boost::multiprecision::mpz_int p = 1;
  for (int i = 0; i < exponent; ++i) p *= base;
  return p.str();
}

LeibnizSuperalgebra load_algebra(const Context& ctx, const std::string& path) {
  LeibnizSuperalgebra alg = algebra_from_json(load_document(path));
  if (alg.dim() > ctx.max_dim)
    throw UsageError("dim L = " + std::to_string(alg.dim()) + " exceeds --max-dim " + std::to_string(ctx.max_dim) +
                     "; C^n(L;L) has dim L*(dim L)^n = " + power_text(alg.dim(), ctx.max_arity + 1) +
                     " coefficients at n = " + std::to_string(ctx.max_arity));
  if (ctx.max_arity > kDefaultMaxArity || ctx.max_dim > kDefaultMaxDim)
    *ctx.err << "note: largest cochain space has dim M*(dim L)^" << ctx.max_arity << " = "
             << power_text(alg.dim(), ctx.max_arity + 1) << " coefficients for the adjoint module\n";
  return alg;
}

SuperBimodule load_module(const LeibnizSuperalgebra& alg, const std::string& choice) {
  if (choice == "self") return adjoint_module(alg);
  if (choice == "zero") return zero_module(alg);
  return module_from_json(alg, load_document(choice));
}

void write_document(const std::string& path, const Json& doc) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << dump_canonical(doc);
}

// ---------------------------------------------------------------------------
// Report fragments

Json label_list(const SuperSpace& space, std::initializer_list<Index> indices) {
  Json out = Json::array();
  for (Index i : indices) out.push_back(space.label(i));
  return out;
}

template <typename T, typename F>
Json limited(const std::vector<T>& items, F convert) {
  Json list = Json::array();
  for (std::size_t i = 0; i < items.size() && i < kListLimit; ++i) list.push_back(convert(items[i]));
  return list;
}

Json grading_json(const LeibnizSuperalgebra& alg, const CheckReport<GradingViolation>& r) {
  const auto& s = alg.space();
  return {{"passed", r.passed()},
          {"count", r.failures.size()},
          {"violations", limited(r.failures, [&](const GradingViolation& v) {
             return Json{{"left", s.label(v.i)}, {"right", s.label(v.j)}, {"component", s.label(v.k)}};
           })}};
}

Json leibniz_json(const LeibnizSuperalgebra& alg, const CheckReport<LeibnizDefect>& r) {
  const auto& s = alg.space();
  return {{"passed", r.passed()},
          {"count", r.failures.size()},
          {"defects", limited(r.failures, [&](const LeibnizDefect& d) {
             return Json{{"triple", label_list(s, {d.a, d.b, d.c})}, {"defect", vector_to_json(s, d.defect)}};
           })}};
}

Json module_check_json(const SuperBimodule& mod, const CheckReport<ModuleDefect>& r) {
  const auto& l = mod.algebra().space();
  const auto& m = mod.space();
  return {{"passed", r.passed()},
          {"count", r.failures.size()},
          {"defects", limited(r.failures, [&](const ModuleDefect& d) {
             const auto [p, q, s] = d.triple;
             Json triple;
             switch (d.axiom) {
               case 1: triple = {l.label(p), l.label(q), m.label(s)}; break;
               case 2: triple = {l.label(p), m.label(q), l.label(s)}; break;
               case 3: triple = {m.label(p), l.label(q), l.label(s)}; break;
               default: triple = {p, q, s}; break;
             }
             return Json{{"axiom", d.axiom}, {"triple", triple}, {"defect", vector_to_json(m, d.defect)}};
           })}};
}

// Runs the algebra and module checks every computation depends on.
bool check_inputs(const SuperBimodule& mod, Json& data) {
  const auto& alg = mod.algebra();
  const auto grading = check_grading(alg);
  const auto leibniz = check_leibniz(alg);
  const auto module = check_module(mod);
  if (grading.passed() && leibniz.passed() && module.passed()) return true;
  data["input_checks"] = {{"grading", grading_json(alg, grading)},
                          {"leibniz", leibniz_json(alg, leibniz)},
                          {"module", module_check_json(mod, module)}};
  return false;
}

Json cochain_list(const SuperBimodule& mod, const std::vector<Cochain>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back(cochain_to_json(mod, f));
  return out;
}

Json basis_json(const SuperBimodule& mod, int arity, Parity parity, const MatrixQ& columns) {
  const CochainBasisIndex idx(mod, arity, parity);
  Json out = Json::array();
  for (Index c = 0; c < columns.cols(); ++c) out.push_back(cochain_to_json(mod, idx.cochain(columns.col(c))));
  return out;
}

Json failure_json(const LeibnizSuperalgebra& alg, const DeformationFailure& f) {
  return {{"order", f.order}, {"triple", label_list(alg.space(), {f.a, f.b, f.c})},
          {"defect", vector_to_json(alg.space(), f.defect)}};
}

// ---------------------------------------------------------------------------
// Commands

Report cmd_validate(const Context& ctx, const Args& a) {
  const auto alg = load_algebra(ctx, a.algebra);
  const auto grading = check_grading(alg);
  const auto leibniz = check_leibniz(alg);
  Report r{"validate"};
  r.data = {{"algebra", {{"name", alg.space().name()},
                         {"dim", alg.dim()},
                         {"even_dim", alg.space().even_dim()},
                         {"odd_dim", alg.space().odd_dim()}}},
            {"grading", grading_json(alg, grading)},
            {"leibniz", leibniz_json(alg, leibniz)},
            {"is_lie", is_lie(alg)}};
  r.exit_code = grading.passed() && leibniz.passed() ? 0 : 1;
  return r;
}

Report cmd_cohomology(const Context& ctx, const Args& a) {
  const auto alg = load_algebra(ctx, a.algebra);
  const auto mod = load_module(alg, a.module);
  Report r{"cohomology"};
  r.data = {{"algebra", alg.space().name()}, {"module", mod.space().name()}, {"max_n", a.max_n}};
  if (a.max_n < 0) throw UsageError("--max-n must be nonnegative");
  if (!check_inputs(mod, r.data)) {
    r.exit_code = 1;
    return r;
  }
  const auto table = cohomology_table(mod, a.max_n, a.bases, ctx.options());
  Json rows = Json::array();
  Json bases = Json::array();
  for (const auto& e : table.entries()) {
    rows.push_back({{"arity", e.arity},
                    {"parity", std::string(to_string(e.parity))},
                    {"cochains", e.cochains},
                    {"cocycles", e.cocycles},
                    {"coboundaries", e.coboundaries},
                    {"cohomology", e.cohomology}});
    if (a.bases)
      bases.push_back({{"arity", e.arity},
                       {"parity", std::string(to_string(e.parity))},
                       {"cocycles", basis_json(mod, e.arity, e.parity, *e.cocycle_basis)},
                       {"coboundaries", basis_json(mod, e.arity, e.parity, *e.coboundary_basis)},
                       {"cohomology", basis_json(mod, e.arity, e.parity, *e.cohomology_basis)}});
  }
  r.data["table"] = rows;
  if (a.bases) r.data["bases"] = bases;

  if (a.verify_random > 0) {
    Rng rng(ctx.seed);
    long samples = 0;
    long square_failures = 0;
    long matrix_mismatches = 0;
    for (int n = 0; n <= a.max_n; ++n)
      for (Parity p : {Parity::Even, Parity::Odd}) {
        const MatrixQ dm = delta_matrix(mod, n, p, ctx.options());
        const CochainBasisIndex src(mod, n, p);
        const CochainBasisIndex dst(mod, n + 1, p);
        for (int k = 0; k < a.verify_random; ++k) {
          const Cochain f = random_cochain(mod, n, p, rng);
          const Cochain df = delta(mod, f);
          ++samples;
          if (dst.coordinates(df) != dm * src.coordinates(f)) ++matrix_mismatches;
          if (n + 2 <= ctx.max_arity && !delta(mod, df).is_zero()) ++square_failures;
        }
      }
    r.data["verify_random"] = {{"seed", ctx.seed},
                               {"samples", samples},
                               {"delta_squared_failures", square_failures},
                               {"matrix_mismatches", matrix_mismatches}};
    if (square_failures > 0 || matrix_mismatches > 0) r.exit_code = 1;
  }
  return r;
}

Report cmd_derivations(const Context& ctx, const Args& a) {
  const auto alg = load_algebra(ctx, a.algebra);
  const auto mod = load_module(alg, a.module);
  Report r{"derivations"};
  r.data = {{"algebra", alg.space().name()}, {"module", mod.space().name()}};
  if (!check_inputs(mod, r.data)) {
    r.exit_code = 1;
    return r;
  }
  const auto der = derivations(mod, Parity::Even);
  const auto odd = derivations(mod, Parity::Odd);
  const auto inner = inner_derivations(mod);
  const auto table = cohomology_table(mod, 1, false, ctx.options());
  const Index quotient = static_cast<Index>(der.size()) - static_cast<Index>(inner.size());
  const Index from_ranks = table.at(1, Parity::Even).cohomology;
  r.data["derivations"] = {{"dim", der.size()}, {"basis", cochain_list(mod, der)}};
  r.data["odd_derivations"] = {{"dim", odd.size()}};
  r.data["inner_derivations"] = {{"dim", inner.size()}, {"basis", cochain_list(mod, inner)}};
  r.data["h1_even"] = {{"from_quotient", quotient}, {"from_ranks", from_ranks}, {"agree", quotient == from_ranks}};
  r.exit_code = quotient == from_ranks ? 0 : 1;
  return r;
}

Report cmd_extend(const Context& ctx, const Args& a) {
  const auto alg = load_algebra(ctx, a.algebra);
  const auto mod = load_module(alg, a.module);
  const Cochain h = cochain_from_json(mod, load_document(a.cocycle));
  if (h.arity() != 2 || h.degree() != Parity::Even) throw UsageError("the cocycle must be an even 2-cochain");
  Report r{"extend"};
  r.data = {{"algebra", alg.space().name()}, {"module", mod.space().name()}};
  if (!check_inputs(mod, r.data)) {
    r.exit_code = 1;
    return r;
  }
  const Extension e = build_extension(mod, h);
  const ExtensionReport check = check_extension(e);
  const bool cocycle = delta(mod, h).is_zero();
  r.data["cocycle"] = {{"is_cocycle", cocycle}, {"is_coboundary", is_coboundary(mod, h, ctx.options()).has_value()}};
  r.data["total"] = {{"name", e.total.space().name()}, {"dim", e.total.dim()}};
  r.data["passed"] = check.passed();
  r.data["violations"] = limited(check.violations, [&](const ExtensionViolation& v) {
    return Json{{"kind", std::string(to_string(v.kind))},
                {"pair", label_list(e.total.space(), {v.u, v.v})},
                {"defect", vector_to_json(e.total.space(), v.defect)}};
  });
  r.data["grading"] = grading_json(e.total, check.grading);
  r.data["leibniz"] = leibniz_json(e.total, check.leibniz);
  if (check.passed() && !a.out.empty()) {
    write_document(a.out, algebra_to_json(e.total));
    r.data["written"] = a.out;
  }
  r.exit_code = check.passed() ? 0 : 1;
  return r;
}

Report cmd_deform_check(const Context& ctx, const Args& a) {
  const auto alg = load_algebra(ctx, a.algebra);
  const auto d = deformation_from_json(alg, load_document(a.deformations.front()));
  Report r{"deform check"};
  r.data = {{"algebra", alg.space().name()},
            {"order", d.order()},
            {"mode", a.mod_order ? "jet" : "strict"}};
  if (!check_inputs(adjoint_module(alg), r.data)) {
    r.exit_code = 1;
    return r;
  }
  const auto report = check_deformation(d, a.mod_order ? CheckMode::Jet : CheckMode::Strict);
  r.data["passed"] = report.passed();
  r.data["checked_through"] = report.checked_through;
  if (auto inf = infinitesimal(d))
    r.data["infinitesimal"] = {{"index", inf->index}, {"is_cocycle", delta(adjoint_module(alg), inf->term).is_zero()}};
  else
    r.data["infinitesimal"] = nullptr;
  if (report.failure) {
    r.data["failure"] = failure_json(alg, *report.failure);
    const Cochain res = deformation_residual(d, report.failure->order);
    const Index n = alg.dim();
    Json triples = Json::array();
    for (Index t = 0; t < res.coeffs().cols(); ++t)
      if (!is_exactly_zero(res.coeffs().col(t)))
        triples.push_back({{"triple", label_list(alg.space(), {t / (n * n), (t / n) % n, t % n})},
                           {"defect", vector_to_json(alg.space(), res.coeffs().col(t))}});
    r.data["failing_triples"] = triples;
  }
  r.exit_code = report.passed() ? 0 : 1;
  return r;
}

Report cmd_deform_extend(const Context& ctx, const Args& a) {
  const auto alg = load_algebra(ctx, a.algebra);
  const auto d = deformation_from_json(alg, load_document(a.deformations.front()));
  if (a.order < 1) throw UsageError("--order must be at least 1");
  Report r{"deform extend"};
  const int start = std::min(d.order(), a.order - 1);
  r.data = {{"algebra", alg.space().name()}, {"from_order", start}, {"target", a.order}};
  if (!check_inputs(adjoint_module(alg), r.data)) {
    r.exit_code = 1;
    return r;
  }
  TruncatedDeformation cur{alg, std::vector<Cochain>(d.terms.begin(), d.terms.begin() + start)};
  if (const auto pre = check_deformation(cur, CheckMode::Jet); !pre.passed()) {
    r.data["precondition"] = failure_json(alg, *pre.failure);
    r.exit_code = 1;
    return r;
  }
  const auto adj = adjoint_module(alg);
  Json added = Json::array();
  for (int k = start + 1; k <= a.order; ++k) {
    auto mu = extend_deformation(cur, k, ctx.options());
    if (!mu) {
      r.data["obstructed_at"] = k;
      r.data["obstruction"] = cochain_to_json(adj, obstruction(cur, k));
      r.exit_code = 1;
      break;
    }
    added.push_back({{"power", k}, {"cochain", cochain_to_json(adj, *mu)}});
    cur.terms.push_back(std::move(*mu));
  }
  r.data["added"] = added;
  r.data["deformation"] = deformation_to_json(cur);
  if (r.exit_code == 0 && !a.out.empty()) {
    write_document(a.out, deformation_to_json(cur));
    r.data["written"] = a.out;
  }
  return r;
}

Report cmd_deform_equiv(const Context& ctx, const Args& a) {
  const auto alg = load_algebra(ctx, a.algebra);
  const auto d1 = deformation_from_json(alg, load_document(a.deformations[0]));
  const auto d2 = deformation_from_json(alg, load_document(a.deformations[1]));
  if (d1.order() != d2.order()) throw UsageError("the two deformations have different orders");
  Report r{"deform equiv"};
  r.data = {{"algebra", alg.space().name()}, {"order", d1.order()}};
  if (!check_inputs(adjoint_module(alg), r.data)) {
    r.exit_code = 1;
    return r;
  }
  for (const auto* d : {&d1, &d2})
    if (const auto pre = check_deformation(*d, CheckMode::Jet); !pre.passed()) {
      r.data["precondition"] = failure_json(alg, *pre.failure);
      r.data["precondition"]["input"] = d == &d1 ? 1 : 2;
      r.exit_code = 1;
      return r;
    }
  const auto iso = equivalent_deformations(d1, d2, ctx.options());
  r.data["equivalent"] = iso.has_value();
  if (!iso) {
    for (int k = 1; k <= d1.order(); ++k) {
      const auto head = [k](const TruncatedDeformation& d) {
        return TruncatedDeformation{d.algebra, std::vector<Cochain>(d.terms.begin(), d.terms.begin() + k)};
      };
      if (!equivalent_deformations(head(d1), head(d2), ctx.options())) {
        r.data["obstructed_at"] = k;
        break;
      }
    }
    r.exit_code = 1;
    return r;
  }
  const auto adj = adjoint_module(alg);
  r.data["isomorphism"] = isomorphism_to_json(alg, *iso);
  r.data["round_trip"] = transform(d1, *iso).terms == d2.terms;
  if (iso->order() >= 1) {
    const auto rel = infinitesimal_relation(d1, d2, *iso);
    r.data["relation"] = {{"holds", rel.holds()},
                          {"difference", cochain_to_json(adj, rel.difference)},
                          {"coboundary", cochain_to_json(adj, rel.coboundary)}};
    if (!rel.holds()) r.exit_code = 1;
  }
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  ctx.err = &err;
  Args a;

  CLI::App app{"Exact cohomology, extensions and deformations of Leibniz superalgebras", "superleibniz"};
  app.add_option("--format", ctx.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", ctx.seed, "Seed for randomized checks");
  app.add_option("--max-arity", ctx.max_arity, "Largest cochain arity to materialise")->check(CLI::Range(1, 16));
  app.add_option("--max-dim", ctx.max_dim, "Largest accepted algebra dimension")->check(CLI::PositiveNumber);
  app.add_option("--threads", ctx.threads, "Worker threads for matrix assembly")->check(CLI::Range(1, 256));
  app.require_subcommand(1);

  auto algebra_arg = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("algebra", a.algebra, "Algebra file")->required();
  };
  auto module_opt = [&](CLI::App* sub) {
    sub->add_option("--module", a.module, "self, zero, or a module file")->capture_default_str();
  };

  auto* validate = app.add_subcommand("validate", "Check grading and the Leibniz identity");
  algebra_arg(validate);

  auto* cohomology = app.add_subcommand("cohomology", "Cocycles, coboundaries and cohomology by arity and parity");
  algebra_arg(cohomology);
  module_opt(cohomology);
  cohomology->add_option("--max-n", a.max_n, "Largest arity n of H^n")->capture_default_str();
  cohomology->add_flag("--bases", a.bases, "Emit echelon bases");
  cohomology->add_option("--verify-random", a.verify_random, "Random cochains per (n, parity) to cross-check");

  auto* derivs = app.add_subcommand("derivations", "Derivations, inner derivations and H^1_0");
  algebra_arg(derivs);
  module_opt(derivs);

  auto* extend = app.add_subcommand("extend", "Build the extension defined by a 2-cocycle");
  algebra_arg(extend);
  module_opt(extend);
  extend->add_option("--cocycle", a.cocycle, "Cochain file with an even 2-cochain")->required();
  extend->add_option("--out", a.out, "Write the total algebra here");

  auto* deform = app.add_subcommand("deform", "Truncated formal deformations");
  deform->fallthrough();
  deform->require_subcommand(1);
  auto* check = deform->add_subcommand("check", "Check the deformation equation order by order");
  algebra_arg(check);
  check->add_option("--deformation", a.deformations, "Deformation file")->required()->expected(1);
  check->add_flag("--mod-order", a.mod_order, "Only check orders up to the truncation order");
  auto* dextend = deform->add_subcommand("extend", "Solve for further terms order by order");
  algebra_arg(dextend);
  dextend->add_option("--deformation", a.deformations, "Deformation file")->required()->expected(1);
  dextend->add_option("--order", a.order, "Target order")->required();
  dextend->add_option("--out", a.out, "Write the extended deformation here");
  auto* equiv = deform->add_subcommand("equiv", "Search for a formal isomorphism between two deformations");
  algebra_arg(equiv);
  equiv->add_option("--deformation", a.deformations, "Source and target deformation files")->required()->expected(2);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Report report;
  try {
    if (validate->parsed()) report = cmd_validate(ctx, a);
    else if (cohomology->parsed()) report = cmd_cohomology(ctx, a);
    else if (derivs->parsed()) report = cmd_derivations(ctx, a);
    else if (extend->parsed()) report = cmd_extend(ctx, a);
    else if (check->parsed()) report = cmd_deform_check(ctx, a);
    else if (dextend->parsed()) report = cmd_deform_extend(ctx, a);
    else report = cmd_deform_equiv(ctx, a);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ArityCapError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  out << (ctx.format == "json" ? render_json(report) : render_text(report));
  return report.exit_code;
}

}  // namespace superleibniz::cli
