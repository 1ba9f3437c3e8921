#include "endslab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "endslab/checks.hpp"
#include "endslab/dsl.hpp"
#include "endslab/errors.hpp"
#include "endslab/export.hpp"
#include "endslab/quotient.hpp"

namespace endslab {

  std::size_t vertex_budget_from_env() {
    char const* s = std::getenv("ENDSLAB_BUDGET");
    if (s == nullptr || *s == '\0') {
      return default_vertex_budget;
    }
    char*              end = nullptr;
    unsigned long long v   = std::strtoull(s, &end, 10);
    if (*end != '\0' || v == 0) {
      return default_vertex_budget;
    }
    return static_cast<std::size_t>(v);
  }

  namespace {
    // Thrown for bad option values that CLI11 cannot validate on its own.
    struct UsageError : Error {
      using Error::Error;
    };

    std::vector<std::size_t> parse_k_values(std::string const& text) {
      std::vector<std::size_t> out;
      auto number = [&](std::string const& s) -> std::size_t {
        if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) {
          throw UsageError("bad inner radius list '" + text + "'");
        }
        return std::stoul(s);
      };
      if (auto dots = text.find(".."); dots != std::string::npos) {
        std::size_t lo = number(text.substr(0, dots));
        std::size_t hi = number(text.substr(dots + 2));
        if (lo > hi) {
          throw UsageError("empty inner radius range '" + text + "'");
        }
        for (std::size_t k = lo; k <= hi; ++k) {
          out.push_back(k);
        }
        return out;
      }
      std::stringstream ss(text);
      std::string       item;
      while (std::getline(ss, item, ',')) {
        out.push_back(number(item));
      }
      if (out.empty()) {
        throw UsageError("empty inner radius list");
      }
      return out;
    }

    struct Context {
      std::ostream& out;
      std::ostream& err;
      std::size_t   budget;
    };

    // Spec errors are usage errors, whichever layer detects them.
    dsl::Elaborated load_spec(std::string const& spec) {
      try {
        return dsl::load(spec);
      } catch (dsl::ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw UsageError(e.what());
      }
    }

    void emit(Context& ctx, Json const& j) {
      ctx.out << j.dump(2) << '\n';
    }

    int cmd_ball(Context& ctx, std::string const& spec, std::size_t radius,
                 std::string const& format, bool simplified) {
      auto e    = load_spec(spec);
      auto ball = build_ball(*e.action, *e.gens, radius, ctx.budget);
      if (simplified) {
        ball = simplify(ball);
      }
      if (format == "dot") {
        write_dot(ctx.out, ball);
      } else {
        Json j;
        j["spec"] = spec;
        j.update(ball_to_json(ball));
        emit(ctx, j);
      }
      return exit_ok;
    }

    int cmd_ends(Context& ctx, std::string const& spec, std::string const& k_text,
                 std::size_t K) {
      auto ks = parse_k_values(k_text);
      auto kmax = *std::max_element(ks.begin(), ks.end());
      if (kmax >= K) {
        throw UsageError("every inner radius must be below K = " + std::to_string(K));
      }
      auto e = load_spec(spec);
      EndsProfile profile;
      try {
        profile = ends_profile(*e.action, *e.gens, ks, K, ctx.budget);
      } catch (BudgetExceeded const& ex) {
        if (ex.reached_radius() <= kmax) {
          throw;
        }
        profile = ends_profile(build_ball(*e.action, *e.gens, ex.reached_radius(), ctx.budget), ks);
        profile.budget    = ctx.budget;
        profile.truncated = true;
        profile.diagnostics.push_back("budget exhausted; outer radius lowered from "
                                      + std::to_string(K) + " to "
                                      + std::to_string(ex.reached_radius()));
      }
      Json j;
      j["spec"] = spec;
      j.update(profile_to_json(profile));
      emit(ctx, j);
      return exit_ok;
    }

    dsl::Elaborated load_imprimitive(std::string const& spec) {
      auto ast = dsl::parse_spec(spec);
      if (ast.group && ast.group->kind == dsl::GroupNode::Kind::Wreath && !ast.action) {
        ast.action = dsl::ActionNode{dsl::ActionNode::Kind::Imprimitive};
      }
      auto e = [&]() {
        try {
          return dsl::elaborate(ast);
        } catch (Error const& ex) {
          throw UsageError(ex.what());
        }
      }();
      if (!e.wreath || !ast.action || ast.action->kind != dsl::ActionNode::Kind::Imprimitive) {
        throw UsageError("leaf reports need a wreath product with its imprimitive action");
      }
      return e;
    }

    int cmd_leaves(Context& ctx, std::string const& spec, std::size_t radius) {
      auto e      = load_imprimitive(spec);
      auto ball   = build_ball(*e.action, *e.gens, radius, ctx.budget);
      auto leaves = leaf_decomposition(ball);
      auto const& x0 = e.wreath->orbit_reps().front();

      std::vector<std::size_t> leaf_of(ball.size());
      Json                     jl = Json::array();
      for (std::size_t i = 0; i < leaves.size(); ++i) {
        Json verts = Json::array();
        for (auto v : leaves[i].vertices) {
          leaf_of[v] = i;
          verts.push_back(ball.vertices[v].to_string());
        }
        jl.push_back({{"key", leaves[i].key.to_string()},
                      {"size", leaves[i].vertices.size()},
                      {"vertices", std::move(verts)}});
      }
      std::size_t within = 0, cross = 0;
      bool        cross_at_x0 = true;
      for (auto const& edge : ball.edges) {
        if (edge.is_loop()) {
          continue;
        }
        if (leaf_of[edge.u] == leaf_of[edge.v]) {
          ++within;
        } else {
          ++cross;
          cross_at_x0 = cross_at_x0 && ball.vertices[edge.u].second() == x0
                        && ball.vertices[edge.v].second() == x0;
        }
      }
      Json j;
      j["spec"]                  = spec;
      j["radius"]                = radius;
      j["vertices"]              = ball.size();
      j["leaves"]                = std::move(jl);
      j["within_leaf_edges"]     = within;
      j["cross_leaf_edges"]      = cross;
      j["cross_edges_at_x0"]     = cross_at_x0;
      emit(ctx, j);
      return exit_ok;
    }

    int verdict(Context& ctx, Json j, bool passed) {
      j["passed"] = passed;
      emit(ctx, j);
      return passed ? exit_ok : exit_check_failed;
    }

    int verify_quotient(Context& ctx, std::string const& spec, int64_t modulus,
                        std::string const& lifts, std::size_t radius) {
      auto e = load_spec(spec);
      auto const& g = e.group;
      if (g.family() != Family::Lattice) {
        throw UsageError("the quotient check takes Z or Z^k, not " + g.name());
      }
      std::vector<GroupElement> k_lifts;
      if (!lifts.empty()) {
        for (auto const& l : dsl::parse_literals(lifts)) {
          k_lifts.push_back(dsl::to_element(g, l));
        }
      }
      QuotientSpec q = quotient::ModN{modulus};
      if (g.parameter() > 1) {
        subgroup::Lattice n;
        for (int64_t i = 0; i < g.parameter(); ++i) {
          std::vector<int64_t> row(static_cast<std::size_t>(g.parameter()), 0);
          row[static_cast<std::size_t>(i)] = modulus;
          n.basis.push_back(std::move(row));
        }
        q = quotient::ByNormal{std::move(n)};
      }
      auto pair = quotient_schreier_pair(g, q, k_lifts, *e.gens, radius);
      Json j;
      j["check"]               = "quotient";
      j["spec"]                = spec;
      j["quotient"]            = pair.quotient_group.name();
      j["preimage"]            = to_string(pair.preimage);
      j["upstairs_vertices"]   = pair.upstairs.size();
      j["downstairs_vertices"] = pair.downstairs.size();
      j["isomorphic"]          = pair.isomorphic;
      return verdict(ctx, std::move(j), pair.isomorphic);
    }

    int verify_leaf_disconnect(Context& ctx, std::string const& spec, std::size_t radius) {
      auto e      = load_imprimitive(spec);
      auto ball   = build_ball(*e.action, *e.gens, radius, ctx.budget);
      auto report = leaf_disconnect(ball, *e.wreath);
      Json leaves = Json::array();
      for (auto const& c : report.leaves) {
        leaves.push_back({{"key", c.key.to_string()},
                          {"deleted", ball.vertices[c.deleted].to_string()},
                          {"remainder", c.remainder},
                          {"isolated", c.isolated},
                          {"touching", c.touching},
                          {"passed", c.passed}});
      }
      Json j;
      j["check"]        = "leaf-disconnect";
      j["spec"]         = spec;
      j["radius"]       = radius;
      j["finite_orbit"] = report.finite_orbit;
      j["orbit_size"]   = report.orbit_size;
      j["leaves"]       = std::move(leaves);
      if (!report.failure.empty()) {
        j["failure"] = report.failure;
      }
      return verdict(ctx, std::move(j), report.passed);
    }

    int verify_three_segment(Context& ctx, std::string const& spec, std::size_t radius,
                             std::size_t cut_radius, std::size_t pairs, uint64_t seed) {
      auto e    = load_spec(spec);
      auto ball = build_ball(*e.action, *e.gens, radius, ctx.budget);
      SemidirectSplit split = [&]() {
        if (e.wreath) {
          return wreath_split(*e.gens);
        }
        if (e.group.family() == Family::Lattice && e.group.parameter() >= 2) {
          return lattice_split(*e.gens, 1);
        }
        throw UsageError("the three-segment check takes Z^k (k >= 2) or a wreath product");
      }();
      auto report = three_segment_check(ball, split, cut_radius, pairs, seed);
      Json jp     = Json::array();
      for (auto const& p : report.pairs) {
        Json path = Json::array();
        for (auto v : p.result.path) {
          path.push_back(ball.vertices[v].to_string());
        }
        Json o{{"x", ball.vertices[p.x].to_string()},
               {"y", ball.vertices[p.y].to_string()},
               {"found", p.result.found},
               {"candidates", p.result.candidates},
               {"injective", p.result.injective},
               {"path", std::move(path)}};
        if (!p.result.found) {
          o["failure"] = p.result.failure;
        }
        jp.push_back(std::move(o));
      }
      Json j;
      j["check"]      = "three-segment-path";
      j["spec"]       = spec;
      j["radius"]     = radius;
      j["cut_radius"] = cut_radius;
      j["seed"]       = seed;
      j["eligible"]   = report.eligible;
      j["injective"]  = report.injective;
      j["pairs"]      = std::move(jp);
      if (!report.failure.empty()) {
        j["failure"] = report.failure;
      }
      return verdict(ctx, std::move(j), report.passed);
    }

    int verify_complete_graph(Context& ctx, std::string const& spec) {
      auto e    = load_spec(spec);
      auto gens = all_nonidentity_gens(e.group);
      auto ball = build_ball(translation_action(e.group), gens, 1, ctx.budget);
      auto order = *e.group.order();
      bool ok    = ball.size() == order && is_complete_graph(ball);
      Json j;
      j["check"]    = "complete-graph";
      j["spec"]     = spec;
      j["order"]    = order;
      j["vertices"] = ball.size();
      j["complete"] = is_complete_graph(ball);
      return verdict(ctx, std::move(j), ok);
    }

    int cmd_fixtures(Context& ctx) {
      Json rules = Json::array();
      for (auto const& f : fixtures()) {
        rules.push_back({{"name", f.name}, {"description", f.description}});
      }
      Json j;
      j["rules"]  = std::move(rules);
      j["checks"] = {"quotient", "leaf-disconnect", "three-segment-path", "complete-graph"};
      emit(ctx, j);
      return exit_ok;
    }
  }  // namespace

  int cli_main(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Orbital graphs, their balls and end counts"};
    app.name("endslab");
    app.require_subcommand(1);

    std::size_t budget = vertex_budget_from_env();
    app.add_option("--budget", budget, "vertex budget (default: ENDSLAB_BUDGET or 2000000)")
        ->check(CLI::PositiveNumber);

    std::string spec;
    std::size_t radius = 0;

    auto* ball = app.add_subcommand("ball", "materialize a ball and export it");
    std::string format = "json";
    bool        simplified = false;
    ball->add_option("--spec", spec, "group/action spec")->required();
    ball->add_option("--radius", radius, "ball radius")->required();
    ball->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    ball->add_flag("--simplify", simplified, "drop loops and parallel edges");

    auto*       ends = app.add_subcommand("ends", "ends profile and verdict");
    std::string k_text = "1..4";
    std::size_t K      = 12;
    ends->add_option("--spec", spec, "group/action spec")->required();
    ends->add_option("--k", k_text, "inner radii, 'a..b' or 'a,b,c'");
    ends->add_option("--K", K, "outer radius");

    auto* leaves = app.add_subcommand("leaves", "leaf decomposition of an imprimitive ball");
    leaves->add_option("--spec", spec, "wreath product spec")->required();
    leaves->add_option("--radius", radius, "ball radius")->required();

    auto* verify = app.add_subcommand("verify", "run a named check");
    verify->require_subcommand(1);

    auto*       vq      = verify->add_subcommand("quotient", "Sch(G, L) versus Sch(G/N, K)");
    std::string q_spec  = "Z";
    int64_t     modulus = 4;
    std::string lifts;
    std::size_t q_radius = 4;
    vq->add_option("--spec", q_spec, "Z or Z^k with its generators");
    vq->add_option("--modulus", modulus, "N = n Z^k")->check(CLI::PositiveNumber);
    vq->add_option("--lift", lifts, "elements whose images generate K, e.g. \"2\"");
    vq->add_option("--radius", q_radius, "ball radius");

    auto*       vl       = verify->add_subcommand("leaf-disconnect", "delete (g, x0) from each leaf");
    std::string l_spec   = "wreath(C(3), C(2), regular)";
    std::size_t l_radius = 8;
    vl->add_option("--spec", l_spec, "wreath product spec");
    vl->add_option("--radius", l_radius, "ball radius");

    auto* vt = verify->add_subcommand("three-segment-path", "three-segment paths around a cut");
    std::string t_spec     = "Z^2";
    std::size_t t_radius   = 12;
    std::size_t cut_radius = 2;
    std::size_t pairs      = 20;
    uint64_t    seed       = 1;
    vt->add_option("--spec", t_spec, "Z^k or a wreath product");
    vt->add_option("--radius", t_radius, "ball radius");
    vt->add_option("--cut-radius", cut_radius, "the cut is B(cut-radius)");
    vt->add_option("--pairs", pairs, "number of sampled pairs");
    vt->add_option("--seed", seed, "sampling seed");

    auto*       vc     = verify->add_subcommand("complete-graph", "Cayley(G; G \\ {1}) at radius 1");
    std::string c_spec = "C(5)";
    vc->add_option("--spec", c_spec, "finite cyclic or symmetric group");

    app.add_subcommand("fixtures", "list built-in rule actions and checks");

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_usage;
    }

    Context ctx{out, err, budget};
    try {
      if (ball->parsed()) {
        return cmd_ball(ctx, spec, radius, format, simplified);
      }
      if (ends->parsed()) {
        return cmd_ends(ctx, spec, k_text, K);
      }
      if (leaves->parsed()) {
        return cmd_leaves(ctx, spec, radius);
      }
      if (vq->parsed()) {
        return verify_quotient(ctx, q_spec, modulus, lifts, q_radius);
      }
      if (vl->parsed()) {
        return verify_leaf_disconnect(ctx, l_spec, l_radius);
      }
      if (vt->parsed()) {
        return verify_three_segment(ctx, t_spec, t_radius, cut_radius, pairs, seed);
      }
      if (vc->parsed()) {
        return verify_complete_graph(ctx, c_spec);
      }
      return cmd_fixtures(ctx);
    } catch (dsl::ParseError const& e) {
      err << "parse error: " << e.what() << '\n';
      return exit_usage;
    } catch (dsl::ElaborationError const& e) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    } catch (UsageError const& e) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_check_failed;
    }
  }

  int cli_main(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    std::vector<char const*> argv{"endslab"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    return cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  }

}  // namespace endslab
