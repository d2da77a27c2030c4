// Command-line front end: algebra construction, enumeration of Gorenstein
// projectives, module-level tests, tilting verification and classification.
//
// Exit codes: 0 success or result, 1 input error, 2 verification failure.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "lambdak/ar.hpp"
#include "lambdak/classify.hpp"
#include "lambdak/decompose.hpp"
#include "lambdak/gorenstein.hpp"
#include "lambdak/io.hpp"
#include "lambdak/tilting.hpp"

using namespace lambdak;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kVerificationFailure = 2;

struct Common {
  std::optional<std::uint32_t> field;
  std::uint64_t seed = 0x5eed;
  bool json = false;
};

struct AlgebraArgs {
  std::string spec;
  std::size_t lambda_k = 1;
  std::size_t triangular = 1;
  std::string tensor;
};

void add_algebra_options(CLI::App* app, AlgebraArgs& a, bool spec_required) {
  auto* opt = app->add_option("spec", a.spec, "quiver spec file");
  if (spec_required) opt->required();
  app->add_option("--lambda-k", a.lambda_k, "tensor with K[X]/(X^k)")->check(CLI::PositiveNumber);
  app->add_option("--triangular", a.triangular, "upper triangular m x m matrices")->check(CLI::PositiveNumber);
  app->add_option("--tensor", a.tensor, "tensor with the algebra of another spec file");
}

AlgebraPresentation load_spec(const std::string& path, const Common& c) {
  auto p = load_quiver_spec(path);
  if (c.field) p.field.characteristic = *c.field;
  return p;
}

// Order of constructions: tensor, then triangular, then Lambda_k.
AlgebraPresentation presentation(const AlgebraArgs& a, const Common& c) {
  auto p = load_spec(a.spec, c);
  if (!a.tensor.empty()) p = tensor_presentation(p, load_spec(a.tensor, c));
  if (a.triangular > 1) p = build_triangular(p, a.triangular);
  if (a.lambda_k > 1) p = build_lambda_k(p, a.lambda_k);
  return p;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Representation load_module(const std::string& path, const Common& c) {
  auto j = read_json_file(path);
  if (c.field && j.contains("algebra") && j["algebra"].contains("presentation")) {
    auto p = parse_quiver_spec(j["algebra"]["presentation"].get<std::string>());
    p.field.characteristic = *c.field;
    j["algebra"]["presentation"] = format_quiver_spec(p);
  }
  return module_from_json(j);
}

int cmd_build(const AlgebraArgs& args, const Common& c) {
  auto a = BoundQuiverAlgebra::build(presentation(args, c));
  Json j = algebra_summary(a);
  j["gorenstein"] = to_json(gorenstein_dimension(a));
  if (c.json) {
    emit(j);
    return kOk;
  }
  std::cout << a->summary() << '\n';
  std::cout << "dimension " << a->dim() << "\n";
  std::cout << "max degree " << a->max_degree() << "\n";
  const auto gp = a->gorenstein_parameter();
  std::cout << "gorenstein parameter " << (gp ? std::to_string(*gp) : std::string("none")) << "\n";
  const auto gd = j["gorenstein"]["gorenstein_dimension"];
  std::cout << "gorenstein dimension " << (gd.is_null() ? std::string("unknown") : std::to_string(gd.get<std::size_t>()))
            << "\n";
  return kOk;
}

int cmd_knit(const AlgebraArgs& args, const Common& c, KnitOptions opts, const std::string& mode,
             const std::string& dot) {
  auto a = BoundQuiverAlgebra::build(presentation(args, c));
  opts.mode = parse_knit_mode(mode);
  opts.seed = c.seed;
  auto q = knit_gproj(a, opts);
  if (!dot.empty()) write_text_file(dot, to_dot(q));
  if (c.json) {
    emit(to_json(q));
    return kOk;
  }
  std::cout << "nodes " << q.nodes.size() << " (" << q.num_projective() << " projective)\n";
  std::cout << "status " << (q.closed ? "closed" : "budget-exceeded") << "\n";
  for (std::size_t i = 0; i < q.nodes.size(); ++i)
    std::cout << "  " << i << ' ' << format_dims(q.nodes[i].module.dims) << (q.nodes[i].projective ? " P" : "") << '\n';
  for (const auto& d : q.diagnostics) std::cout << "note: " << d << '\n';
  return kOk;
}

int cmd_gp_test(const std::string& path, const Common& c, const std::string& method, bool paranoid) {
  auto m = load_module(path, c);
  auto v = is_gorenstein_projective(m, parse_gp_method(method), paranoid);
  if (c.json) {
    emit(to_json(v));
  } else {
    std::cout << (v.gorenstein_projective ? "Gorenstein projective" : "not Gorenstein projective") << '\n';
    auto show = [](const char* name, const std::optional<bool>& b) {
      if (b) std::cout << "  " << name << ": " << (*b ? "yes" : "no") << '\n';
    };
    show("ext", v.ext);
    show("restriction", v.restriction);
    show("monic", v.monic);
  }
  return v.agree() ? kOk : kVerificationFailure;
}

int cmd_verify_tilting(const AlgebraArgs& args, const Common& c, std::size_t bound) {
  if (args.lambda_k < 1) throw std::invalid_argument("--lambda-k must be positive");
  auto base = load_spec(args.spec, c);
  if (!args.tensor.empty()) base = tensor_presentation(base, load_spec(args.tensor, c));
  if (args.triangular > 1) base = build_triangular(base, args.triangular);
  const auto k = args.lambda_k;
  auto t = build_T(base, k);
  Json j;
  j["k"] = k;
  j["candidate"] = to_json(t);
  bool ok = true;
  if (k < 2) {
    j["trivial"] = true;
    j["note"] = "empty candidate: the singularity category is trivial";
  } else {
    j["trivial"] = false;
    auto e = end_degree_zero(t);
    auto s = verify_syzygy_period(t);
    auto h = verify_hom_vanishing(t, bound);
    auto q = verify_exact_sequences(base, k);
    j["gorenstein_parameter"] = t.algebra->gorenstein_parameter() ? Json(*t.algebra->gorenstein_parameter()) : Json(nullptr);
    j["endomorphisms"] = to_json(e);
    j["syzygy_period"] = to_json(s);
    j["hom_vanishing"] = to_json(h);
    j["exact_sequences"] = to_json(q);
    j["generation"] = "not machine-checked; holds for truncated regular summands of this form";
    ok = t.gorenstein_projective && e.ok() && s.ok() && h.ok() && q.ok();
  }
  j["ok"] = ok;
  if (c.json) {
    emit(j);
  } else if (k < 2) {
    std::cout << "k = 1: empty tilting candidate, nothing to verify\n";
  } else {
    auto line = [](const std::string& name, bool pass) { std::cout << (pass ? "PASS " : "FAIL ") << name << '\n'; };
    line("T is Gorenstein projective", t.gorenstein_projective);
    line("degree-0 End(T) isomorphic to T_{k-1}(Lambda)", j["endomorphisms"]["ok"].get<bool>());
    line("Omega^2 T isomorphic to T(-k)", j["syzygy_period"]["ok"].get<bool>());
    line("stable Hom(T, Sigma^i T) = 0 for 0 < |i| <= " + std::to_string(bound), j["hom_vanishing"]["ok"].get<bool>());
    line("short exact sequences between T and M", j["exact_sequences"]["ok"].get<bool>());
  }
  return ok ? kOk : kVerificationFailure;
}

int cmd_classify(const AlgebraArgs& args, const Common& c, const std::string& type, std::size_t k) {
  CMReport r;
  if (!type.empty()) {
    r = classify(parse_dynkin(type), k);
  } else if (!args.spec.empty()) {
    r = classify(load_spec(args.spec, c), k);
  } else {
    throw std::invalid_argument("classify needs --type or a spec file");
  }
  if (c.json) {
    emit(to_json(r));
    return kOk;
  }
  std::cout << (r.type ? r.type->name() : std::string("unknown type")) << ", k = " << r.k << ": " << to_string(r.verdict)
            << '\n';
  if (r.count) std::cout << "indecomposable Gorenstein projectives: " << *r.count << " (" << r.count_method << ")\n";
  if (r.tubular)
    std::cout << "tubular boundary (" << (*r.tubular)[0] << "," << (*r.tubular)[1] << "," << (*r.tubular)[2] << ")\n";
  for (const auto& n : r.notes) std::cout << "note: " << n << '\n';
  return kOk;
}

int cmd_tau(const std::string& path, const Common& c, bool inverse, bool relative) {
  auto m = load_module(path, c);
  std::mt19937_64 rng(c.seed);
  Representation out;
  if (relative) out = inverse ? relative_tau_inverse(m, rng) : relative_tau(m, rng);
  else out = inverse ? tau_inverse(m) : tau(m);
  if (c.json) emit(to_json(out));
  else std::cout << format_dims(out.dims) << '\n';
  return kOk;
}

int cmd_ar_seq(const std::string& path, const Common& c, bool relative) {
  auto m = load_module(path, c);
  std::mt19937_64 rng(c.seed);
  auto s = relative ? almost_split_sequence(m, relative_tau(m, rng)) : almost_split_sequence(m);
  auto check = check_sequence(s);
  if (c.json) {
    emit(to_json(s));
  } else {
    std::cout << "0 -> " << format_dims(s.left.dims) << " -> " << format_dims(s.middle.dims) << " -> "
              << format_dims(s.right.dims) << " -> 0\n";
    std::cout << "exact " << (check.exact ? "yes" : "no") << ", non-split " << (check.non_split ? "yes" : "no") << '\n';
  }
  return check.ok() ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gorenstein projective modules over Lambda (x) K[X]/(X^k)"};
  app.require_subcommand(1);
  Common common;
  std::uint32_t field = 0;
  app.add_option("--field", field, "override the field characteristic (prime)");
  app.add_option("--seed", common.seed, "random seed");
  app.add_flag("--json", common.json, "print JSON");

  AlgebraArgs build_args;
  auto* build = app.add_subcommand("build", "build an algebra and summarize it");
  add_algebra_options(build, build_args, true);

  AlgebraArgs knit_args;
  KnitOptions knit_opts;
  std::string mode = "knit", dot;
  auto* knit = app.add_subcommand("knit", "enumerate indecomposable Gorenstein projectives");
  add_algebra_options(knit, knit_args, true);
  knit->add_option("--budget", knit_opts.budget, "maximum number of nodes");
  knit->add_option("--dim-cap", knit_opts.dim_cap, "maximum node dimension");
  knit->add_option("--mode", mode, "knit or sweep")->check(CLI::IsMember({"knit", "sweep"}));
  knit->add_option("--samples", knit_opts.sweep_samples, "random modules tried in sweep mode");
  knit->add_flag("--allow-higher-gorenstein", knit_opts.allow_higher_gorenstein, "knit when the Gorenstein dimension exceeds 1");
  knit->add_option("--dot", dot, "write the quiver in DOT format");

  std::string gp_module, gp_method = "ext";
  bool paranoid = false;
  auto* gp = app.add_subcommand("gp-test", "test a module for Gorenstein projectivity");
  gp->add_option("module", gp_module, "module JSON file")->required();
  gp->add_option("--method", gp_method, "ext, restriction, monic or all")
      ->check(CLI::IsMember({"ext", "restriction", "monic", "all"}));
  gp->add_flag("--paranoid", paranoid, "check Ext up to 2d+2");

  AlgebraArgs tilt_args;
  std::size_t bound = 4;
  auto* tilt = app.add_subcommand("verify-tilting", "verify the tilting object of Lambda_k");
  add_algebra_options(tilt, tilt_args, true);
  tilt->add_option("--bound", bound, "largest |i| for stable Hom(T, Sigma^i T)");

  AlgebraArgs cls_args;
  std::string type;
  std::size_t cls_k = 1;
  auto* cls = app.add_subcommand("classify", "CM-finiteness of Lambda_k by Dynkin type");
  cls->add_option("spec", cls_args.spec, "hereditary quiver spec file");
  cls->add_option("--type", type, "Dynkin type such as A2, D4, E6");
  cls->add_option("--k", cls_k, "k")->required()->check(CLI::PositiveNumber);

  std::string tau_module;
  bool tau_inverse_flag = false, tau_relative = false;
  auto* tau_cmd = app.add_subcommand("tau", "Auslander-Reiten translate of a module");
  tau_cmd->add_option("module", tau_module, "module JSON file")->required();
  tau_cmd->add_flag("--inverse", tau_inverse_flag, "inverse translate");
  tau_cmd->add_flag("--relative", tau_relative, "translate of the category of Gorenstein projectives");

  std::string seq_module;
  bool seq_relative = false;
  auto* seq = app.add_subcommand("ar-seq", "almost split sequence ending at a module");
  seq->add_option("module", seq_module, "module JSON file")->required();
  seq->add_flag("--relative", seq_relative, "sequence in the category of Gorenstein projectives");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  if (field != 0) common.field = field;

  try {
    if (*build) return cmd_build(build_args, common);
    if (*knit) return cmd_knit(knit_args, common, knit_opts, mode, dot);
    if (*gp) return cmd_gp_test(gp_module, common, gp_method, paranoid);
    if (*tilt) return cmd_verify_tilting(tilt_args, common, bound);
    if (*cls) return cmd_classify(cls_args, common, type, cls_k);
    if (*tau_cmd) return cmd_tau(tau_module, common, tau_inverse_flag, tau_relative);
    if (*seq) return cmd_ar_seq(seq_module, common, seq_relative);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
