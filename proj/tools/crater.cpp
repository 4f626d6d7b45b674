#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include <crater/cli.hpp>

using namespace crater;

int main(int argc, char** argv) {
  CLI::App app{"ordinary ell-isogeny craters with level structure"};
  app.require_subcommand(1);

  JobConfig cfg;
  std::string kind_s = "gamma0";
  std::string out_prefix;
  bool sweep = false;
  i64 cg_disc = 0;
  u64 cg_ell = 0, cg_N = 0;

  auto add_common = [&](CLI::App* c, bool required) {
    c->add_option("--p", cfg.p, "field characteristic")->required(required);
    c->add_option("--a", cfg.a, "curve coefficient a");
    c->add_option("--b", cfg.b, "curve coefficient b");
    c->add_option("--ell", cfg.ell, "isogeny degree")->required(required);
    c->add_option("--N", cfg.N, "level");
    c->add_option("--kind", kind_s, "level kind: gamma0, gamma1 or full");
    c->add_option("--disc", cfg.disc, "endomorphism order discriminant")->required(required);
    c->add_option("--max-ext-degree", cfg.max_ext_degree, "torsion extension degree bound");
    c->add_option("--seed", cfg.seed, "seed for randomized subroutines");
  };

  CLI::App* p_cmd = app.add_subcommand("predict", "ideal-theoretic component prediction");
  add_common(p_cmd, true);
  CLI::App* b_cmd = app.add_subcommand("build", "construct the crater and its level graph");
  add_common(b_cmd, true);
  b_cmd->add_option("--out", out_prefix, "artifact path prefix; writes <out>.json and <out>.dot");
  CLI::App* c_cmd = app.add_subcommand("compare", "run both engines and compare profiles");
  add_common(c_cmd, false);
  c_cmd->add_flag("--sweep", sweep, "compare every admissible tuple of the built-in sweep");
  CLI::App* g_cmd = app.add_subcommand("classgroup", "class-group tables for a discriminant");
  g_cmd->add_option("--disc", cg_disc, "discriminant")->required();
  g_cmd->add_option("--ell", cg_ell, "optional isogeny degree");
  g_cmd->add_option("--N", cg_N, "optional level");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.kind = kind_from_name(kind_s);
    if (p_cmd->parsed()) {
      std::cout << render_report(cmd_predict(cfg));
      return 0;
    }
    if (b_cmd->parsed()) {
      if (!out_prefix.empty()) {
        cfg.out_json = out_prefix + ".json";
        cfg.out_dot = out_prefix + ".dot";
      }
      auto [report, G] = cmd_build(cfg);
      std::cout << render_report(report);
      if (!cfg.out_json.empty()) {
        std::ofstream f(cfg.out_json);
        if (!f) throw std::runtime_error("cannot open " + cfg.out_json);
        f << graph_json_text(G);
      }
      if (!cfg.out_dot.empty()) {
        std::ofstream f(cfg.out_dot);
        if (!f) throw std::runtime_error("cannot open " + cfg.out_dot);
        f << graph_dot(G);
      }
      return 0;
    }
    if (c_cmd->parsed()) {
      if (sweep) {
        bool all_ok = true;
        for (const auto& r : cmd_sweep(cfg.max_ext_degree)) {
          std::cout << "p=" << r.seed.p << " disc=" << r.seed.disc << " ell=" << r.ell
                    << " N=" << r.N << " kind=" << kind_name(r.kind) << " -> " << r.status
                    << "\n";
          if (r.status.rfind("mismatch", 0) == 0) all_ok = false;
        }
        return all_ok ? 0 : 1;
      }
      CompareResult res = cmd_compare(cfg);
      std::cout << render_report(res.report);
      if (!res.ok) {
        std::cout << res.diff;
        return 1;
      }
      return 0;
    }
    std::cout << classgroup_table(cg_disc, cg_ell, cg_N);
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
