#include "cli.h"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "manifest.h"
#include "petruska/bounds/bounds.h"
#include "petruska/constructions/constructions.h"
#include "petruska/constructions/verify.h"
#include "petruska/enumeration/enumerate.h"
#include "petruska/enumeration/theorem_k4.h"
#include "petruska/error.h"
#include "petruska/geometry/hole_triangle.h"
#include "petruska/geometry/sampling.h"
#include "petruska/io/json.h"
#include "petruska/io/svg.h"

namespace petruska::cli {
namespace {

using nlohmann::json;

// Bad input files or arguments the parser could not catch: exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  RunManifest manifest;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << bytes)) throw UsageError("cannot write " + path);
}

// Writes a document to path, or to stdout when path is empty.
void emit(Context& ctx, const std::string& path, const std::string& doc) {
  if (path.empty()) {
    ctx.out << doc;
    ctx.manifest.outputs.push_back({"-", sha256_hex(doc)});
  } else {
    write_file(path, doc);
    ctx.manifest.outputs.push_back({path, sha256_hex(doc)});
  }
}

template <typename Parse>
auto load(Context& ctx, const std::string& path, Parse parse) {
  const std::string text = read_file(path);
  try {
    auto value = parse(text);
    ctx.manifest.inputs.push_back({path, sha256_hex(io::to_json(value))});
    return value;
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

constructions::ConvexFamily load_family(Context& ctx, const std::string& path) {
  return load(ctx, path, [](const std::string& t) { return io::family_from_json(t); });
}

rb::RedBlueClique load_clique(Context& ctx, const std::string& path) {
  return load(ctx, path, [](const std::string& t) { return io::clique_from_json(t); });
}

json parsed(const std::string& doc) { return json::parse(doc); }

int default_threads() {
  if (const char* env = std::getenv("PETRUSKA_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

// Name the default manifest after the command: "verify nine-sets" gives
// verify-nine-sets.manifest.json.
std::string default_manifest_path(const RunManifest& m) {
  for (const Artifact& a : m.outputs) {
    if (a.path != "-") return a.path + ".manifest.json";
  }
  std::string name = m.command;
  for (char& c : name) {
    if (c == ' ') c = '-';
  }
  return name + ".manifest.json";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of convex-set transversal constructions", "petruska"};
  app.require_subcommand(1);

  int threads = default_threads();
  std::uint64_t seed = 20240601;
  std::string manifest_path;
  app.add_option("--threads", threads, "worker threads (hint)")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for randomized checks");
  app.add_option("--manifest", manifest_path, "where to write the run manifest");

  Context ctx{out, err, {}};
  std::function<bool()> action;  // returns the verdict
  auto param = [&](const std::string& k, const auto& v) {
    std::ostringstream s;
    s << v;
    ctx.manifest.parameters[k] = s.str();
  };

  // enumerate
  int enum_n = 7;
  std::string out_path;
  auto* enumerate = app.add_subcommand("enumerate", "isomorphism classes of tau>=3, C3-free blue hypergraphs");
  enumerate->add_option("--n", enum_n, "vertex count")->check(CLI::Range(3, 10));
  enumerate->add_option("--out", out_path, "report file");
  enumerate->callback([&] {
    ctx.manifest.command = "enumerate";
    action = [&] {
      param("n", enum_n);
      const auto report = enumeration::enumerate_tau3_c3_free(enum_n, threads);
      emit(ctx, out_path, io::to_json(report));
      ctx.manifest.summary_json = json{{"classes", report.classes.size()},
                                       {"with_k4", report.with_k4},
                                       {"without_k4", report.without_k4},
                                       {"nodes_visited", report.nodes_visited}}
                                      .dump();
      return true;
    };
  });

  // verify
  int verify_k = 4;
  auto* verify = app.add_subcommand("verify", "run a verifier");
  verify->require_subcommand(1);
  auto* v_k4 = verify->add_subcommand("theorem-k4", "certify every class on 7 vertices");
  v_k4->add_option("--out", out_path, "report file");
  v_k4->callback([&] {
    ctx.manifest.command = "verify theorem-k4";
    action = [&] {
      const auto report = enumeration::verify_theorem_k4(threads);
      const std::string doc = io::to_json(report);
      emit(ctx, out_path, doc);
      json summary = json::object();
      for (const auto& c : report.classes) summary[c.name] = rb::certificate_tag(c.designated);
      ctx.manifest.summary_json = json{{"classes", summary},
                                       {"catalog_match", report.classification_matches_catalog}}
                                      .dump();
      return report.passed();
    };
  });
  auto* v_nine = verify->add_subcommand("nine-sets", "nine convex sets with no 2-transversal");
  v_nine->add_option("--out", out_path, "report file");
  v_nine->callback([&] {
    ctx.manifest.command = "verify nine-sets";
    action = [&] {
      const auto family = constructions::nine_sets();
      const auto report = constructions::verify_counterexample(family, 5);
      const auto region = constructions::region_coverage(family, 5);
      const auto nerve = constructions::compute_nerve(family);
      const rb::FVector fv = rb::f_vector(nerve);
      const auto pair = rb::find_pair_transversal(nerve, 5);
      const bool fv_ok = fv == rb::FVector{{9, 36, 61, 45, 12}};
      const bool passed = report.passed() && region.every_pair_escapes && fv_ok && !pair;
      json doc;
      doc["counterexample"] = parsed(io::to_json(report));
      doc["region"] = parsed(io::to_json(region));
      doc["nerve_fvector"] = fv.entries;
      doc["pair_transversal"] = pair ? json{pair->first, pair->second} : json(nullptr);
      doc["passed"] = passed;
      emit(ctx, out_path, doc.dump(2) + "\n");
      // Written through the first vanishing entry, f5 = 0.
      rb::FVector padded = fv;
      padded.entries.push_back(0);
      ctx.manifest.summary_json = json{{"fvector", padded.to_string()},
                                       {"max_cover_ok", report.max_cover_ok},
                                       {"every_pair_escapes", region.every_pair_escapes},
                                       {"pair_transversal_absent", !pair}}
                                      .dump();
      return passed;
    };
  });
  auto* v_twok = verify->add_subcommand("two-k", "2k-1 runs plus the midpoint hull");
  v_twok->add_option("--k", verify_k, "cover number")->required()->check(CLI::Range(2, 12));
  v_twok->add_option("--out", out_path, "report file");
  v_twok->callback([&] {
    ctx.manifest.command = "verify two-k";
    action = [&] {
      param("k", verify_k);
      const auto family = constructions::two_k(verify_k);
      const auto report = constructions::verify_counterexample(family, verify_k);
      const auto region = constructions::region_coverage(family, verify_k);
      const bool passed = report.passed() && region.every_pair_escapes;
      json doc;
      doc["bodies"] = family.size();
      doc["counterexample"] = parsed(io::to_json(report));
      doc["region"] = parsed(io::to_json(region));
      doc["passed"] = passed;
      emit(ctx, out_path, doc.dump(2) + "\n");
      ctx.manifest.summary_json = json{{"bodies", family.size()},
                                       {"fvector", report.fvector.to_string()},
                                       {"max_cover_ok", report.max_cover_ok},
                                       {"every_pair_escapes", region.every_pair_escapes}}
                                      .dump();
      return passed;
    };
  });

  // construct
  int c_k = 0, c_omega = 0;
  auto* construct = app.add_subcommand("construct", "write a family as JSON");
  construct->require_subcommand(1);
  auto add_construct = [&](const char* name, const char* help, bool takes_k, bool takes_omega,
                           std::function<constructions::ConvexFamily()> build) {
    auto* sub = construct->add_subcommand(name, help);
    if (takes_k) sub->add_option("--k", c_k, "size parameter")->required();
    if (takes_omega) sub->add_option("--omega", c_omega, "clique number")->required();
    sub->add_option("--out", out_path, "family file");
    sub->callback([&, name, takes_k, takes_omega, build] {
      ctx.manifest.command = std::string("construct ") + name;
      action = [&, takes_k, takes_omega, build] {
        if (takes_k) param("k", c_k);
        if (takes_omega) param("omega", c_omega);
        const auto family = build();
        emit(ctx, out_path, io::to_json(family));
        ctx.manifest.summary_json = json{{"bodies", family.size()},
                                         {"witnesses", family.witnesses().size()}}
                                        .dump();
        return true;
      };
    });
  };
  add_construct("polygon", "k-gon construction", true, false,
                [&] { return constructions::polygon_construction(c_k); });
  add_construct("extended", "polygon plus three bodies (k = 5 or 7)", true, false,
                [&] { return constructions::extended_polygon(c_k); });
  add_construct("triangle", "segments on a triangle", false, true,
                [&] { return constructions::triangle_construction(c_omega); });
  add_construct("two-k", "2k-1 runs plus the midpoint hull", true, false,
                [&] { return constructions::two_k(c_k); });
  add_construct("nine-sets", "the nine-set family", false, false,
                [] { return constructions::nine_sets(); });

  // nerve
  std::string family_path;
  bool want_fvector = false;
  auto* nerve = app.add_subcommand("nerve", "red/blue clique of a family");
  nerve->add_option("--family", family_path, "family file")->required();
  nerve->add_option("--out", out_path, "clique file");
  nerve->add_flag("--fvector", want_fvector, "report the f-vector");
  nerve->callback([&] {
    ctx.manifest.command = "nerve";
    action = [&] {
      const auto family = load_family(ctx, family_path);
      const auto rb = constructions::compute_nerve(family);
      emit(ctx, out_path, io::to_json(rb));
      json summary = {{"n", rb.n()}, {"blue_triples", rb.blue().edge_count()}};
      if (want_fvector) {
        const rb::FVector fv = rb::f_vector(rb);
        summary["fvector"] = fv.to_string();
        ctx.err << "f-vector " << fv.to_string() << "\n";
      }
      ctx.manifest.summary_json = summary.dump();
      return true;
    };
  });

  // certify
  std::string clique_path;
  int clique_size = 4;
  auto* certify = app.add_subcommand("certify", "convexity certificate for a red/blue clique");
  certify->add_option("--clique", clique_path, "clique file")->required();
  certify->add_option("--clique-size", clique_size, "red clique size")->check(CLI::Range(3, 64));
  certify->add_option("--out", out_path, "certificate file");
  certify->callback([&] {
    ctx.manifest.command = "certify";
    action = [&] {
      param("clique_size", clique_size);
      const auto rb = load_clique(ctx, clique_path);
      const rb::Certificate c = rb::convexity_certificate_battery(rb, clique_size);
      const bool rechecked = rb::recheck(rb, c, clique_size);
      emit(ctx, out_path, io::to_json(c));
      ctx.manifest.summary_json = json{{"certificate", rb::certificate_tag(c)},
                                       {"description", rb::describe(c)},
                                       {"rechecked", rechecked}}
                                      .dump();
      return rechecked && !std::holds_alternative<rb::Unresolved>(c);
    };
  });

  // hole-triangle
  auto* hole = app.add_subcommand("hole-triangle", "extreme points of the hole of three bodies");
  hole->add_option("--family", family_path, "family of exactly three bodies")->required();
  hole->add_option("--out", out_path, "result file");
  hole->callback([&] {
    ctx.manifest.command = "hole-triangle";
    action = [&] {
      const auto family = load_family(ctx, family_path);
      if (family.size() != 3) throw UsageError(family_path + ": field 'bodies' must have 3 entries");
      const auto& b = family.bodies();
      geom::HoleTriangle t;
      try {
        t = geom::hole_triangle(b[0], b[1], b[2]);
      } catch (const InvariantError&) {
        throw;
      } catch (const Error& e) {
        ctx.manifest.summary_json = json{{"error", e.what()}}.dump();
        ctx.err << e.what() << "\n";
        return false;
      }
      emit(ctx, out_path, io::to_json(t));
      ctx.manifest.summary_json = json{{"extreme_points", t.extreme_points}}.dump();
      return true;
    };
  });

  // bounds
  int bounds_k = 0, bounds_omega = 0, bounds_t = 2, bounds_d = 3;
  bool tables = false;
  auto* bounds = app.add_subcommand("bounds", "bound chains and table cross-checks");
  auto* opt_k = bounds->add_option("--k", bounds_k, "bound chain for k")->check(CLI::Range(2, 1000000));
  auto* opt_w = bounds->add_option("--omega", bounds_omega, "interconnection for omega")
                    ->check(CLI::Range(3, 1000000));
  bounds->add_option("--t", bounds_t, "transversal size (with --omega)")->needs(opt_w);
  bounds->add_option("--d", bounds_d, "dimension (with --omega)")->needs(opt_w);
  auto* opt_tables = bounds->add_flag("--tables", tables, "cross-check both tables");
  bounds->add_option("--out", out_path, "result file");
  opt_k->excludes(opt_tables);
  opt_w->excludes(opt_tables);
  bounds->callback([&] {
    ctx.manifest.command = "bounds";
    if (!tables && bounds_k == 0 && bounds_omega == 0) {
      throw CLI::ValidationError("bounds", "one of --k, --omega, --tables is required");
    }
    action = [&] {
      json doc = json::object();
      bool passed = true;
      if (bounds_k) {
        param("k", bounds_k);
        const auto [lo, hi] = bounds::petruska_bound_chain(bounds_k);
        doc["chain"] = {{"k", bounds_k}, {"lower", lo}, {"upper", hi}};
      }
      if (bounds_omega) {
        param("omega", bounds_omega);
        param("t", bounds_t);
        param("d", bounds_d);
        doc["interconnect"] = parsed(io::to_json(bounds::interconnect(bounds_omega, bounds_t, bounds_d)));
      }
      if (tables) {
        const auto report = bounds::cross_check_tables();
        doc["tables"] = parsed(io::to_json(report));
        passed = report.passed();
      }
      emit(ctx, out_path, doc.dump(2) + "\n");
      ctx.manifest.summary_json = doc.contains("tables")
                                      ? json{{"mismatches", doc["tables"]["mismatches"]}}.dump()
                                      : doc.dump();
      return passed;
    };
  });

  // render
  std::string svg_path;
  auto* render = app.add_subcommand("render", "SVG figure of a family");
  render->add_option("--family", family_path, "family file")->required();
  render->add_option("--svg", svg_path, "output SVG")->required();
  render->callback([&] {
    ctx.manifest.command = "render";
    action = [&] {
      const auto family = load_family(ctx, family_path);
      emit(ctx, svg_path, io::render_svg(family));
      ctx.manifest.summary_json = json{{"bodies", family.size()}}.dump();
      return true;
    };
  });

  // selfcheck
  int instances = 200, lids = 20;
  auto* selfcheck = app.add_subcommand("selfcheck", "randomized lid check of hole-triangle");
  selfcheck->add_option("--instances", instances, "random holes")->check(CLI::PositiveNumber);
  selfcheck->add_option("--lids", lids, "random lids per hole")->check(CLI::PositiveNumber);
  selfcheck->add_option("--out", out_path, "result file");
  selfcheck->callback([&] {
    ctx.manifest.command = "selfcheck";
    action = [&] {
      param("instances", instances);
      param("lids", lids);
      param("seed", seed);
      std::mt19937_64 rng(seed);
      long failures = 0, degenerate = 0;
      for (int i = 0; i < instances; ++i) {
        const geom::HoleInstance h = geom::random_hole(rng);
        const auto& [a, b, c] = h.bodies;
        const geom::HoleTriangle t = geom::hole_triangle(a, b, c);
        if (t.degenerate()) ++degenerate;
        if (!a.contains(t.p_star) || !b.contains(t.p_star) || !b.contains(t.q_star) ||
            !c.contains(t.q_star) || !c.contains(t.r_star) || !a.contains(t.r_star)) {
          ++failures;
        }
        for (int l = 0; l < lids; ++l) {
          const geom::ConvexBody lid = geom::random_lid(h, rng);
          if (!lid.contains(t.p_star) || !lid.contains(t.q_star) || !lid.contains(t.r_star)) {
            ++failures;
          }
        }
      }
      const json doc = {{"instances", instances}, {"lids", lids}, {"seed", seed},
                        {"failures", failures}, {"degenerate", degenerate}};
      emit(ctx, out_path, doc.dump(2) + "\n");
      ctx.manifest.summary_json = doc.dump();
      return failures == 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    // CLI11 reports a misspelt subcommand only as a missing one.
    for (const std::string& extra : app.remaining()) err << "unknown argument: " << extra << "\n";
    app.exit(e, out, err);
    err << app.help();
    return kExitUsage;
  }

  param("threads", threads);
  const auto start = std::chrono::steady_clock::now();
  bool passed = false;
  try {
    passed = action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "internal invariant failure: " << e.what() << "\n";
    passed = false;
    ctx.manifest.summary_json = json{{"invariant_failure", e.what()}}.dump();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  ctx.manifest.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ctx.manifest.passed = passed;
  try {
    write_file(manifest_path.empty() ? default_manifest_path(ctx.manifest) : manifest_path,
               ctx.manifest.to_json());
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << (passed ? "PASS " : "FAIL ") << ctx.manifest.command << "\n";
  return passed ? kExitPass : kExitFail;
}

}  // namespace petruska::cli
