// nearring: construct G(p^m, p^n, p^d), verify and analyze nearring
// multiplications on it, enumerate local nearrings and count automorphisms.
//
// Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nearring/analyzer.hpp"
#include "nearring/aut.hpp"
#include "nearring/cayley.hpp"
#include "nearring/enumerator.hpp"
#include "nearring/mapdsl.hpp"
#include "nearring/maps.hpp"
#include "nearring/pgroup.hpp"
#include "nearring/table_io.hpp"
#include "nearring/verifier.hpp"
#include "nearring/version.hpp"

namespace fs = std::filesystem;
using namespace nearring;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Flags {
  std::int64_t p = 0, m = 0, n = 0, d = 0;
  bool canonical = false;
  std::string maps_file;
  std::string table_file;
  std::string alpha, beta, gamma;
  std::string mode;
  std::uint64_t samples = kDefaultSamples;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "csv";
  unsigned parallel = 0;
  std::optional<std::size_t> max_order;
  // enumerate
  std::optional<std::uint64_t> max_solutions;
  bool subfamily = false;
  bool dedup = false;
  bool no_prune = false;
  bool any_zero = false;
  // aut
  bool audit = false;
  bool lemma6 = false;
};

using Clock = std::chrono::steady_clock;

bool have_params(const Flags& f) { return f.p != 0 || f.m != 0 || f.n != 0 || f.d != 0; }

GroupParams params_from(const Flags& f) {
  if (!have_params(f)) throw UsageError("--p, --m, --n and --d are required");
  return make_params(f.p, f.m, f.n, f.d);
}

/// --max-order, then NEARRING_MAX_ORDER, then the built-in default.
std::size_t size_guard(const Flags& f, std::size_t fallback) {
  if (f.max_order) return *f.max_order;
  if (const char* env = std::getenv("NEARRING_MAX_ORDER")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw UsageError(std::string("NEARRING_MAX_ORDER is not a number: ") + env);
    }
  }
  return fallback;
}

Json params_json(const GroupParams& g) {
  return Json{{"p", g.p()}, {"m", g.m()}, {"n", g.n()}, {"d", g.d()}};
}

bool have_exprs(const Flags& f) { return !f.alpha.empty() || !f.beta.empty() || !f.gamma.empty(); }

MapExpr parse_flag_expr(const std::string& text, const char* flag) {
  try {
    return parse_map_expr(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

struct Source {
  MapTriple maps;
  Json description;
};

Source resolve_source(const Flags& f) {
  const int sources = int(f.canonical) + int(!f.maps_file.empty()) + int(!f.table_file.empty()) +
                      int(have_exprs(f));
  if (sources != 1) {
    throw UsageError("give exactly one of --canonical, --maps, --table or --alpha/--beta/--gamma");
  }
  if (f.canonical) {
    return {canonical_maps(params_from(f)), Json{{"kind", "canonical"}}};
  }
  if (!f.maps_file.empty()) {
    auto maps = load_map_triple(f.maps_file);
    if (have_params(f) && !(params_from(f) == maps.params())) {
      throw UsageError("--p/--m/--n/--d disagree with the parameters in " + f.maps_file);
    }
    return {std::move(maps), Json{{"kind", "maps"}, {"path", f.maps_file}}};
  }
  if (!f.table_file.empty()) {
    const auto g = params_from(f);
    const auto text = read_file(f.table_file);
    const auto table = fs::path(f.table_file).extension() == ".json" ? table_from_json(text)
                                                                      : table_from_csv(text);
    return {maps_from_mul_table(g, table), Json{{"kind", "table"}, {"path", f.table_file}}};
  }
  if (f.alpha.empty() || f.beta.empty() || f.gamma.empty()) {
    throw UsageError("--alpha, --beta and --gamma must all be given");
  }
  const auto g = params_from(f);
  auto maps = triple_from_exprs(g, parse_flag_expr(f.alpha, "--alpha"),
                                parse_flag_expr(f.beta, "--beta"), parse_flag_expr(f.gamma, "--gamma"));
  return {std::move(maps), Json{{"kind", "expressions"},
                                {"alpha", f.alpha},
                                {"beta", f.beta},
                                {"gamma", f.gamma}}};
}

Json manifest(const std::string& subcommand, const GroupParams& g, const Json& inputs,
              const Flags& f, const std::vector<std::string>& outputs, Clock::time_point start) {
  Json j;
  j["tool"] = "nearring";
  j["version"] = kVersion;
  j["subcommand"] = subcommand;
  j["params"] = params_json(g);
  j["inputs"] = inputs;
  j["outputs"] = outputs;
  if (f.seed) j["seed"] = *f.seed;
  else j["seed"] = nullptr;
  j["parallel"] = f.parallel;
  j["wall_seconds"] = std::chrono::duration<double>(Clock::now() - start).count();
  return j;
}

void ensure_dir(const std::string& dir) {
  if (dir.empty()) return;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create " + dir + ": " + ec.message());
}

std::string join(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

VerifyMode resolve_mode(const Flags& f, const GroupParams& g) {
  if (f.mode == "exhaustive") return VerifyMode::exhaustive();
  if (f.mode == "sampled") {
    if (!f.seed) throw UsageError("--mode sampled requires --seed");
    return VerifyMode::sampled(f.samples, *f.seed);
  }
  if (!f.mode.empty()) throw UsageError("--mode must be exhaustive or sampled");
  if (g.order() <= kExhaustiveOrderLimit) return VerifyMode::exhaustive();
  if (!f.seed) {
    throw UsageError("order " + std::to_string(g.order()) +
                     " is verified by sampling by default; pass --seed S or --mode exhaustive");
  }
  return VerifyMode::sampled(f.samples, *f.seed);
}

void print_report(const Report& r) {
  for (const auto& c : r.checks) {
    std::cout << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(26) << c.name
              << "examined=" << c.examined;
    if (!c.passed) {
      std::cout << "  counterexample=";
      for (std::size_t i = 0; i < c.counterexample.size(); ++i)
        std::cout << (i ? " " : "") << "(" << to_string(c.counterexample[i]) << ")";
      if (!c.detail.empty()) std::cout << "  " << c.detail;
    }
    std::cout << "\n";
  }
}

/// Verification, then the structural analysis when the axioms hold.
struct Pipeline {
  Report verification;
  std::optional<StructureProfile> profile;
  std::vector<Report> analysis;
  bool passed = false;
};

Pipeline run_pipeline(const MapTriple& maps, const Flags& f) {
  Pipeline out;
  VerifyOptions vo;
  vo.mode = resolve_mode(f, maps.params());
  vo.threads = f.parallel;
  vo.table_bound = size_guard(f, kDefaultTableBound);
  out.verification = verify_all(maps, vo);
  out.passed = out.verification.passed();
  if (!out.verification.metrics["nearring_with_identity"].get<bool>()) return out;
  out.profile = analyze(maps, vo.table_bound);
  out.analysis.push_back(check_theorem1(maps, *out.profile));
  out.analysis.push_back(check_identity_order(maps, *out.profile));
  out.analysis.push_back(lambda_embedding(maps, *out.profile));
  if (out.profile->local()) {
    out.analysis.push_back(check_frattini_theorem(maps, *out.profile, vo.table_bound));
  }
  for (const auto& r : out.analysis) out.passed = out.passed && r.passed();
  return out;
}

Json pipeline_json(const Pipeline& p) {
  Json j;
  j["verification"] = to_json(p.verification);
  if (p.profile) {
    j["profile"] = to_json(*p.profile);
    Json a = Json::array();
    for (const auto& r : p.analysis) a.push_back(to_json(r));
    j["analysis"] = a;
  }
  return j;
}

int cmd_group(const Flags& f) {
  const auto start = Clock::now();
  const auto g = params_from(f);
  const auto elems = all_elements(g);
  std::uint64_t exponent = 0, center = 0;
  for (const auto& x : elems) {
    exponent = std::max(exponent, element_order(g, x));
    if (add(g, x, kGenA) == add(g, kGenA, x) && add(g, x, kGenB) == add(g, kGenB, x)) ++center;
  }
  Json j;
  j["group"] = g.to_string();
  j["order"] = g.order();
  j["exponent"] = exponent;
  j["center_order"] = center;
  const auto bound = size_guard(f, kDefaultTableBound);
  if (g.order() <= bound) {
    j["frattini_order"] = frattini_pgroup(CayleyGroup::from_params(g, bound)).size();
  } else {
    j["frattini_order"] = nullptr;
  }
  j["aut_order_formula"] = aut_order_formula(g);

  std::cout << std::left << std::setw(22) << "group" << g.to_string() << "\n"
            << std::setw(22) << "order" << g.order() << "\n"
            << std::setw(22) << "exponent" << exponent << "\n"
            << std::setw(22) << "|Phi(G)|"
            << (j["frattini_order"].is_null() ? std::string("skipped (size bound)")
                                              : j["frattini_order"].dump())
            << "\n"
            << std::setw(22) << "|Z(G)|" << center << "\n"
            << std::setw(22) << "|Aut(G)| (formula)" << j["aut_order_formula"].get<std::uint64_t>()
            << "\n";
  if (!f.out.empty()) {
    ensure_dir(f.out);
    const auto path = join(f.out, "group.json");
    j["manifest"] = manifest("group", g, Json::object(), f, {path}, start);
    write_file(path, j.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_verify(const Flags& f) {
  const auto start = Clock::now();
  const auto src = resolve_source(f);
  const auto pipeline = run_pipeline(src.maps, f);
  print_report(pipeline.verification);
  for (const auto& r : pipeline.analysis) print_report(r);
  std::cout << (pipeline.passed ? "all checks passed" : "some checks failed") << "\n";
  if (!f.out.empty()) {
    ensure_dir(f.out);
    const auto path = join(f.out, "report.json");
    Json j = pipeline_json(pipeline);
    j["manifest"] = manifest("verify", src.maps.params(), src.description, f, {path}, start);
    write_file(path, j.dump(2) + "\n");
  }
  return pipeline.passed ? kExitOk : kExitFailed;
}

int cmd_analyze(const Flags& f) {
  const auto start = Clock::now();
  const auto src = resolve_source(f);
  const auto pipeline = run_pipeline(src.maps, f);
  if (!pipeline.profile) {
    print_report(pipeline.verification);
    std::cout << "not a nearring with identity; nothing to analyze\n";
    return kExitFailed;
  }
  std::cout << format_profile(*pipeline.profile);
  for (const auto& r : pipeline.analysis) print_report(r);
  if (!f.out.empty()) {
    ensure_dir(f.out);
    const auto path = join(f.out, "profile.json");
    Json j = pipeline_json(pipeline);
    j["manifest"] = manifest("analyze", src.maps.params(), src.description, f, {path}, start);
    write_file(path, j.dump(2) + "\n");
  }
  return pipeline.passed ? kExitOk : kExitFailed;
}

int cmd_enumerate(const Flags& f) {
  const auto start = Clock::now();
  const auto g = params_from(f);
  EnumerateOptions opt;
  opt.max_order = size_guard(f, kDefaultEnumerationBound);
  opt.max_solutions = f.max_solutions;
  opt.threads = f.parallel;
  opt.pointwise_pruning = !f.no_prune;
  opt.zero_symmetric = !f.any_zero;
  Json inputs = Json::object();
  if (f.subfamily) {
    if (!have_exprs(f)) throw UsageError("--subfamily needs at least one of --alpha/--beta/--gamma");
    if (!f.alpha.empty()) opt.subfamily.alpha = parse_flag_expr(f.alpha, "--alpha");
    if (!f.beta.empty()) opt.subfamily.beta = parse_flag_expr(f.beta, "--beta");
    if (!f.gamma.empty()) opt.subfamily.gamma = parse_flag_expr(f.gamma, "--gamma");
    inputs["subfamily"] = {{"alpha", f.alpha}, {"beta", f.beta}, {"gamma", f.gamma}};
  } else if (have_exprs(f)) {
    throw UsageError("--alpha/--beta/--gamma constrain the search only together with --subfamily");
  }

  const auto result = enumerate_local(g, opt);
  Json summary = to_json(result.summary);
  std::cout << "solutions             " << result.summary.count << "\n"
            << "nodes                 " << result.summary.stats.nodes << "\n"
            << "prunes                "
            << result.summary.stats.conflicts + result.summary.stats.pointwise_prunes << "\n"
            << "rejected by verifier  " << result.summary.rejected_by_verifier << "\n"
            << "rejected non-local    " << result.summary.rejected_non_local << "\n"
            << "found in other branch " << result.summary.rejected_other_branch << "\n";

  if (f.dedup) {
    AutOptions ao;
    ao.max_order = size_guard(f, kDefaultAutBound);
    ao.threads = f.parallel;
    const auto autos = aut_brute(g, ao);
    const auto dd = dedup_up_to_aut(g, result.solutions, autos.automorphisms);
    Json dj;
    dj["orbits"] = dd.representatives.size();
    dj["representatives"] = dd.representatives;
    dj["orbit_sizes"] = dd.orbit_sizes;
    dj["excluded_automorphisms"] = dd.excluded_automorphisms;
    dj["foreign_images"] = dd.foreign_images;
    summary["dedup"] = dj;
    std::cout << "orbits under Aut(R+)  " << dd.representatives.size() << "\n";
  }

  if (!f.out.empty()) {
    ensure_dir(f.out);
    std::vector<std::string> outputs;
    for (std::size_t i = 0; i < result.solutions.size(); ++i) {
      std::ostringstream name;
      name << "solution_" << std::setw(6) << std::setfill('0') << i << ".json";
      const auto path = join(f.out, name.str());
      save_map_triple(result.solutions[i], path);
      outputs.push_back(path);
    }
    const auto path = join(f.out, "summary.json");
    outputs.push_back(path);
    summary["manifest"] = manifest("enumerate", g, inputs, f, outputs, start);
    write_file(path, summary.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_aut(const Flags& f) {
  const auto start = Clock::now();
  const auto g = params_from(f);
  AutOptions ao;
  ao.max_order = size_guard(f, kDefaultAutBound);
  ao.full_audit = f.audit;
  ao.threads = f.parallel;
  const auto rec = aut_brute(g, ao);
  const auto audit = audit_automorphisms(g, rec.automorphisms);
  std::cout << "brute-force |Aut|   " << rec.brute_order << "\n"
            << "formula |Aut|       " << rec.formula_order << "\n"
            << "match               " << (rec.match ? "yes" : "NO (mismatch flagged)") << "\n";
  print_report(audit);
  bool ok = audit.passed();
  Json j = to_json(rec);
  j["audit"] = to_json(audit);
  if (f.lemma6) {
    const auto l6 = check_lemma6(g, ao.max_order);
    print_report(l6);
    j["generator_replacement"] = to_json(l6);
    ok = ok && l6.passed();
  }
  if (!f.out.empty()) {
    ensure_dir(f.out);
    const auto path = join(f.out, "aut.json");
    j["manifest"] = manifest("aut", g, Json::object(), f, {path}, start);
    write_file(path, j.dump(2) + "\n");
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_export(const Flags& f) {
  const auto start = Clock::now();
  if (f.out.empty()) throw UsageError("export needs --out <dir>");
  if (f.format != "csv" && f.format != "json") throw UsageError("--format must be csv or json");
  const auto src = resolve_source(f);
  const auto& g = src.maps.params();
  const auto bound = size_guard(f, kDefaultTableBound);
  const auto add_t = addition_table(g, bound);
  const auto mul_t = mul_table(src.maps, bound);
  ensure_dir(f.out);
  const std::string ext = f.format == "csv" ? ".csv" : ".json";
  auto encode = [&](const OperationTable& t) {
    return f.format == "csv" ? table_to_csv(t) : table_to_json(t);
  };
  const auto maps_path = join(f.out, "maps.json");
  const auto add_path = join(f.out, "addition" + ext);
  const auto mul_path = join(f.out, "multiplication" + ext);
  save_map_triple(src.maps, maps_path);
  write_file(add_path, encode(add_t));
  write_file(mul_path, encode(mul_t));
  Json m;
  m["manifest"] = manifest("export", g, src.description, f, {maps_path, add_path, mul_path}, start);
  m["verified"] = false;
  write_file(join(f.out, "manifest.json"), m.dump(2) + "\n");
  std::cout << "wrote " << maps_path << ", " << add_path << ", " << mul_path << "\n";
  return kExitOk;
}

void add_param_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--p", f.p, "odd prime p");
  cmd->add_option("--m", f.m, "exponent m (|a| = p^m)");
  cmd->add_option("--n", f.n, "exponent n (|b| = p^n)");
  cmd->add_option("--d", f.d, "exponent d (|c| = p^d)");
  cmd->add_option("--max-order", f.max_order, "size guard (overrides NEARRING_MAX_ORDER)");
  cmd->add_option("--parallel", f.parallel, "worker threads (default: all cores)");
  cmd->add_option("--out", f.out, "output directory");
}

void add_source_flags(CLI::App* cmd, Flags& f) {
  cmd->add_flag("--canonical", f.canonical, "alpha = 0, beta = x1, gamma = 0");
  cmd->add_option("--maps", f.maps_file, "MapTriple JSON file");
  cmd->add_option("--table", f.table_file, "multiplication table (.csv or .json)");
  cmd->add_option("--alpha", f.alpha, "expression for alpha in x1, x2, x3");
  cmd->add_option("--beta", f.beta, "expression for beta in x1, x2, x3");
  cmd->add_option("--gamma", f.gamma, "expression for gamma in x1, x2, x3");
}

void add_mode_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--mode", f.mode, "exhaustive | sampled");
  cmd->add_option("--samples", f.samples, "number of sampled triples");
  cmd->add_option("--seed", f.seed, "seed for sampled mode");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local nearrings on the p-groups G(p^m, p^n, p^d)"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Flags f;

  auto* group = app.add_subcommand("group", "group order, exponent, |Phi|, |Z| and |Aut| formula");
  add_param_flags(group, f);

  auto* verify = app.add_subcommand("verify", "check nearring axioms and row conditions");
  add_param_flags(verify, f);
  add_source_flags(verify, f);
  add_mode_flags(verify, f);

  auto* analyze_cmd = app.add_subcommand("analyze", "units, L, automorphism embedding, Frattini");
  add_param_flags(analyze_cmd, f);
  add_source_flags(analyze_cmd, f);
  add_mode_flags(analyze_cmd, f);

  auto* enumerate = app.add_subcommand("enumerate", "all zero-symmetric local nearrings");
  add_param_flags(enumerate, f);
  enumerate->add_option("--max-solutions", f.max_solutions, "stop after this many solutions");
  enumerate->add_flag("--subfamily", f.subfamily, "restrict rows to the given expressions");
  enumerate->add_option("--alpha", f.alpha, "alpha constraint (with --subfamily)");
  enumerate->add_option("--beta", f.beta, "beta constraint (with --subfamily)");
  enumerate->add_option("--gamma", f.gamma, "gamma constraint (with --subfamily)");
  enumerate->add_flag("--dedup", f.dedup, "group solutions into Aut(R+) orbits");
  enumerate->add_flag("--no-prune", f.no_prune, "disable the pointwise row restrictions");
  enumerate->add_flag("--any-zero-row", f.any_zero, "do not force the row at 0 (slow)");

  auto* aut = app.add_subcommand("aut", "brute-force automorphism group order");
  add_param_flags(aut, f);
  aut->add_flag("--audit", f.audit, "test the homomorphism property on all pairs");
  aut->add_flag("--lemma6", f.lemma6, "check generator replacement for every element of order p^m");

  auto* exp = app.add_subcommand("export", "write addition and multiplication tables");
  add_param_flags(exp, f);
  add_source_flags(exp, f);
  exp->add_option("--format", f.format, "csv | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (group->parsed()) return cmd_group(f);
    if (verify->parsed()) return cmd_verify(f);
    if (analyze_cmd->parsed()) return cmd_analyze(f);
    if (enumerate->parsed()) return cmd_enumerate(f);
    if (aut->parsed()) return cmd_aut(f);
    if (exp->parsed()) return cmd_export(f);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParamError& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MapFormatError& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
