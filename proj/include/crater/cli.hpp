#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <crater/graph.hpp>

namespace crater {

// One job for the command surface.  The seed field is reserved for randomized
// subroutines; every code path in the library is deterministic, so it only
// participates in config echoing.
struct JobConfig {
  u64 p = 0;
  u64 a = 0;
  u64 b = 0;
  u64 ell = 0;
  u64 N = 1;
  LevelKind kind = LevelKind::gamma0;
  i64 disc = 0;
  std::string out_json;
  std::string out_dot;
  int max_ext_degree = 24;
  u64 seed = 0;
};

inline void validate_config(const JobConfig& cfg) {
  if (cfg.disc >= 0) throw std::invalid_argument("config: disc must be negative");
  QuadOrder O(cfg.disc);  // checks the discriminant residue
  if (cfg.p < 5 || !is_prime_u64(cfg.p))
    throw std::invalid_argument("config: p must be a prime of at least 5");
  if (!is_prime_u64(cfg.ell)) throw std::invalid_argument("config: ell must be prime");
  if (cfg.ell == cfg.p) throw std::invalid_argument("config: ell must differ from p");
  if (cfg.N == 0) throw std::invalid_argument("config: the level must be positive");
  if (std::gcd(cfg.N, cfg.p) != 1 || std::gcd(cfg.N, cfg.ell) != 1)
    throw std::invalid_argument("config: the level must be coprime to p and ell");
  if (std::gcd(static_cast<i64>(cfg.N), conductor_of(cfg.disc)) != 1)
    throw std::invalid_argument("config: the level must be coprime to the conductor");
  if (cfg.max_ext_degree < 1)
    throw std::invalid_argument("config: the extension-degree bound must be positive");
}

// "x+y*Phi" display, omitting zero parts and unit coefficients.
inline std::string elem_string(const QuadOrder::Elem& e) {
  i64 x = e.first, y = e.second;
  if (y == 0) return std::to_string(x);
  std::string phi = y == 1 ? "Phi" : y == -1 ? "-Phi" : std::to_string(y) + "*Phi";
  if (x == 0) return phi;
  if (y > 0) return std::to_string(x) + "+" + (y == 1 ? "Phi" : std::to_string(y) + "*Phi");
  return std::to_string(x) + "-" + (y == -1 ? "Phi" : std::to_string(-y) + "*Phi");
}

// "(a,Phi+b)" display of a Hermite-basis ideal; scalar multiples factor out
// in front and the unit ideal prints as "(1)".
inline std::string ideal_string(const QuadIdeal& I) {
  i64 a = I.a / I.c, b = I.b / I.c;
  std::string scale = I.c == 1 ? "" : "(" + std::to_string(I.c) + ")";
  if (a == 1) return scale.empty() ? "(1)" : scale;
  std::string inner = "(" + std::to_string(a) + ",Phi" + (b ? "+" + std::to_string(b) : "") + ")";
  return scale + inner;
}

// Factorization of M*O into prime ideals, conjugates sorted by residue,
// primes by size; "(5,Phi+1)(5,Phi+3)", "(2,Phi)^2", "(3)" and alike.
inline std::string ideal_factor_string(const QuadOrder& O, u64 M) {
  if (M == 0) throw std::invalid_argument("ideal_factor_string: M must be positive");
  if (M == 1) return "(1)";
  std::string out;
  for (const auto& [q, e] : factor_u64(M)) {
    PrimesOver po = primes_over(O, q);
    auto app = [&](const QuadIdeal& P, int exp) {
      out += ideal_string(P);
      if (exp > 1) out += "^" + std::to_string(exp);
    };
    if (po.type == Splitting::inert)
      app(po.primes[0], e);
    else if (po.type == Splitting::ramified)
      app(po.primes[0], 2 * e);
    else
      for (const auto& P : po.primes) app(P, e);
  }
  return out;
}

inline std::string profile_string(const std::map<u64, u64>& prof) {
  if (prof.empty()) return "-";
  std::string out;
  for (const auto& [size, count] : prof) {
    if (!out.empty()) out += " ";
    out += std::to_string(size) + ":" + std::to_string(count);
  }
  return out;
}

// Everything the predict/build/compare commands report.
struct ReportDocument {
  JobConfig config;
  Prediction pred;
  std::string ell_primes;
  std::string level_primes;
  std::string lambda_str;
  std::string lambda_bar_str;
  bool measured = false;
  std::map<u64, u64> measured_profile;
  std::string verdict;  // "predicted", "equal" or "unequal"
};

inline ReportDocument cmd_predict(const JobConfig& cfg) {
  validate_config(cfg);
  QuadOrder O(cfg.disc);
  ReportDocument R;
  R.config = cfg;
  R.pred = predict(O, cfg.ell, cfg.N, cfg.kind);
  R.ell_primes = ideal_factor_string(O, cfg.ell);
  R.level_primes = ideal_factor_string(O, cfg.N);
  R.lambda_str = elem_string(R.pred.lambda);
  QuadOrder::Elem bar{R.pred.lambda.first + R.pred.lambda.second * O.s, -R.pred.lambda.second};
  R.lambda_bar_str = elem_string(bar);
  R.verdict = "predicted";
  return R;
}

inline LSGraph build_graph(const JobConfig& cfg) {
  validate_config(cfg);
  Curve E(Fp{cfg.p}, cfg.a, cfg.b);
  CraterCycle C = build_crater(E, cfg.ell, QuadOrder(cfg.disc), cfg.max_ext_degree);
  return attach_level_structures(C, cfg.N, cfg.kind, cfg.max_ext_degree);
}

inline ReportDocument report_for(const JobConfig& cfg, const LSGraph& G) {
  ReportDocument R = cmd_predict(cfg);
  R.measured = true;
  R.measured_profile = component_profile(G);
  R.verdict = R.measured_profile == R.pred.profile ? "equal" : "unequal";
  return R;
}

inline std::pair<ReportDocument, LSGraph> cmd_build(const JobConfig& cfg) {
  LSGraph G = build_graph(cfg);
  return {report_for(cfg, G), G};
}

inline std::string render_report(const ReportDocument& R) {
  std::ostringstream os;
  const JobConfig& c = R.config;
  os << "input: p=" << c.p << " a=" << c.a << " b=" << c.b << " ell=" << c.ell << " N=" << c.N
     << " kind=" << kind_name(c.kind) << " disc=" << c.disc << " seed=" << c.seed << "\n";
  os << "crater: n=" << R.pred.n << " shape=" << shape_name(R.pred.shape)
     << " splitting=" << splitting_name(R.pred.splitting) << "\n";
  os << "ell ideal: " << R.ell_primes << "\n";
  os << "level ideal: " << R.level_primes << "\n";
  os << "lambda: " << R.lambda_str << "  conjugate: " << R.lambda_bar_str << "\n";
  if (!R.pred.strata.empty()) {
    os << "strata:\n";
    for (const auto& S : R.pred.strata)
      os << "  level=" << ideal_string(S.level_ideal) << " phi=" << S.phi
         << " structures=" << S.structures << " m=" << S.orbit_size
         << " components=" << S.components << "\n";
  }
  os << "predicted: " << profile_string(R.pred.profile) << "\n";
  if (R.measured) os << "measured: " << profile_string(R.measured_profile) << "\n";
  os << "verdict: " << R.verdict << "\n";
  return os.str();
}

// JSON document for a built graph (schema version 1).
inline nlohmann::ordered_json graph_json(const LSGraph& G) {
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  nlohmann::ordered_json params;
  params["p"] = G.crater.curves[0].F.p;
  params["a"] = G.crater.curves[0].a;
  params["b"] = G.crater.curves[0].b;
  params["ell"] = G.crater.ell;
  params["N"] = G.N;
  params["kind"] = kind_name(G.kind);
  params["disc"] = G.crater.O.D;
  doc["params"] = params;
  nlohmann::ordered_json crater;
  crater["n"] = G.crater.n;
  std::vector<u64> js;
  for (const auto& E : G.crater.curves) js.push_back(E.j);
  crater["j_cycle"] = js;
  doc["crater"] = crater;
  nlohmann::ordered_json verts = nlohmann::ordered_json::array();
  for (u64 v = 0; v < G.vertices.size(); ++v) {
    nlohmann::ordered_json jv;
    jv["id"] = v;
    jv["curve"] = G.vertices[v].curve;
    std::string level;
    for (const auto& P : G.vertices[v].pts) {
      if (!level.empty()) level += "|";
      level += detail::point_str(P);
    }
    jv["level"] = level;
    verts.push_back(jv);
  }
  doc["vertices"] = verts;
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& e : G.edges) {
    nlohmann::ordered_json je;
    je["from"] = e.from;
    je["to"] = e.to;
    je["label"] = e.conj ? "lbar" : "l";
    edges.push_back(je);
  }
  doc["edges"] = edges;
  nlohmann::ordered_json prof = nlohmann::ordered_json::array();
  for (const auto& [size, count] : component_profile(G))
    prof.push_back(nlohmann::ordered_json::array({size, count}));
  doc["profile"] = prof;
  return doc;
}

inline std::string graph_json_text(const LSGraph& G) { return graph_json(G).dump(2) + "\n"; }

// DOT rendering: an undirected multigraph for gamma0 (one edge per l-step),
// a digraph otherwise with solid l-edges and dashed conjugate edges.
inline std::string graph_dot(const LSGraph& G) {
  std::ostringstream os;
  os << (G.undirected ? "graph" : "digraph") << " crater {\n";
  for (u64 v = 0; v < G.vertices.size(); ++v)
    os << "  " << v << " [label=\"j" << G.crater.curves[G.vertices[v].curve].j << "\"];\n";
  for (const auto& e : G.edges) {
    if (G.undirected) {
      if (!e.conj) os << "  " << e.from << " -- " << e.to << ";\n";
    } else {
      os << "  " << e.from << " -> " << e.to << " [style=" << (e.conj ? "dashed" : "solid")
         << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

struct CompareResult {
  bool ok = false;
  std::string diff;
  ReportDocument report;
};

// Structured per-size diff of two profiles; empty when they agree.
inline std::string profile_diff_string(const std::map<u64, u64>& want,
                                       const std::map<u64, u64>& got) {
  if (want == got) return "";
  std::ostringstream os;
  os << "profile diff:\n";
  std::set<u64> sizes;
  for (const auto& [s, c] : want) sizes.insert(s);
  for (const auto& [s, c] : got) sizes.insert(s);
  for (u64 s : sizes) {
    u64 w = want.count(s) ? want.at(s) : 0;
    u64 g = got.count(s) ? got.at(s) : 0;
    if (w != g) os << "  size " << s << ": predicted " << w << ", measured " << g << "\n";
  }
  return os.str();
}

namespace detail {

// Principal-vertex regularity: in every component, every crater curve carries
// exactly size/n of the component's vertices.
inline std::string principal_diff(const LSGraph& G) {
  ComponentData cd = components(G);
  std::map<u64, u64> size;
  for (u64 v = 0; v < G.vertices.size(); ++v) ++size[cd.comp[v]];
  std::map<std::pair<u64, u64>, u64> per_curve;
  for (u64 v = 0; v < G.vertices.size(); ++v) ++per_curve[{cd.comp[v], G.vertices[v].curve}];
  std::ostringstream os;
  for (const auto& [key, cnt] : per_curve) {
    u64 want = size[key.first] / G.crater.n;
    if (size[key.first] % G.crater.n != 0)
      os << "component " << key.first << " size " << size[key.first]
         << " is not a multiple of n\n";
    else if (cnt != want)
      os << "component " << key.first << " curve " << key.second << ": " << cnt
         << " principal vertices, expected " << want << "\n";
  }
  return os.str();
}

}  // namespace detail

inline CompareResult cmd_compare(const JobConfig& cfg) {
  auto [report, G] = cmd_build(cfg);
  CompareResult res;
  res.report = report;
  std::string diff = profile_diff_string(report.pred.profile, report.measured_profile);
  diff += detail::principal_diff(G);
  res.diff = diff;
  res.ok = res.diff.empty();
  return res;
}

// The deterministic sweep inventory: small ordinary seeds with their
// endomorphism discriminants, all p < 200.
struct SweepSeed {
  u64 p, a, b;
  i64 disc;
};

inline std::vector<SweepSeed> sweep_seeds() {
  return {{47, 14, 5, -124}, {53, 46, 6, -44}, {107, 43, 86, -71}, {131, 1, 5, -299}};
}

struct SweepOutcome {
  SweepSeed seed;
  u64 ell = 0;
  u64 N = 0;
  LevelKind kind = LevelKind::gamma0;
  std::string status;  // "ok", "mismatch: ...", "skipped: ..."
};

// Compare both engines on every admissible (seed, ell, N, kind) tuple with
// ell in {2,3,5,7} and N in {2..12}.  Craters are built once per (seed, ell);
// tuples needing torsion beyond the degree bound are reported as skipped.
inline std::vector<SweepOutcome> cmd_sweep(int max_ext_degree = 24) {
  std::vector<SweepOutcome> out;
  for (const SweepSeed& sd : sweep_seeds()) {
    QuadOrder O(sd.disc);
    i64 f = conductor_of(sd.disc);
    for (u64 ell : {2ull, 3ull, 5ull, 7ull}) {
      if (ell == sd.p) continue;
      bool crater_ok = false;
      std::string crater_err;
      std::optional<CraterCycle> crater;
      try {
        Curve E(Fp{sd.p}, sd.a, sd.b);
        crater = build_crater(E, ell, O, max_ext_degree);
        crater_ok = true;
      } catch (const std::exception& e) {
        crater_err = e.what();
      }
      for (u64 N = 2; N <= 12; ++N) {
        if (std::gcd(N, sd.p) != 1 || std::gcd(N, ell) != 1) continue;
        if (std::gcd(static_cast<i64>(N), f) != 1) continue;
        std::optional<std::vector<TorsionBasis>> bases;  // shared by the three kinds
        for (LevelKind kind : {LevelKind::gamma0, LevelKind::gamma1, LevelKind::full}) {
          SweepOutcome oc;
          oc.seed = sd;
          oc.ell = ell;
          oc.N = N;
          oc.kind = kind;
          if (!crater_ok) {
            oc.status = "skipped: " + crater_err;
            out.push_back(oc);
            continue;
          }
          ResRing R(O, N);
          u64 k = R.unit_order(R.make(crater->u, crater->c));
          if (k > static_cast<u64>(max_ext_degree)) {
            oc.status = "skipped: torsion degree " + std::to_string(k) + " exceeds the bound";
            out.push_back(oc);
            continue;
          }
          try {
            if (!bases) bases = crater_torsion_bases(*crater, N, max_ext_degree);
            LSGraph G = attach_level_structures(*crater, N, kind, *bases);
            Prediction P = predict(O, ell, N, kind);
            std::map<u64, u64> measured = component_profile(G);
            std::string diff;
            if (measured != P.profile)
              diff = "profiles differ: predicted " + profile_string(P.profile) + ", measured " +
                     profile_string(measured);
            else
              diff = detail::principal_diff(G);
            oc.status = diff.empty() ? "ok" : "mismatch: " + diff;
          } catch (const std::exception& e) {
            oc.status = std::string("mismatch: ") + e.what();
          }
          out.push_back(oc);
        }
      }
    }
  }
  return out;
}

// Class-group utility: h, the reduced forms, and (given ell or N) splitting
// data and the generalized class-group orders.
inline std::string classgroup_table(i64 D, u64 ell = 0, u64 N = 0) {
  QuadOrder O(D);
  std::ostringstream os;
  os << "discriminant: " << D << "\n";
  os << "conductor: " << conductor_of(D) << "\n";
  auto forms = QuadForm::all_reduced(D);
  os << "h: " << forms.size() << "\n";
  os << "forms:";
  for (const auto& g : forms) os << " (" << g.A << "," << g.B << "," << g.C << ")";
  os << "\n";
  if (ell) {
    auto po = primes_over(O, ell);
    os << "ell: " << ell << " splitting=" << splitting_name(po.type) << "\n";
    os << "ell ideal: " << ideal_factor_string(O, ell) << "\n";
    if (po.type != Splitting::inert) {
      CraterClass cc = classify_crater(O, ell);
      os << "n: " << cc.n << "\n";
      os << "lambda: " << elem_string(cc.lambda) << "\n";
    }
  }
  if (N) {
    os << "level: " << N << "\n";
    os << "level ideal: " << ideal_factor_string(O, N) << "\n";
    auto [sub, ray] = generalized_class_group_orders(O, N);
    os << "suborder class number: " << sub << "\n";
    os << "ray class number: " << ray << "\n";
  }
  return os.str();
}

}  // namespace crater
