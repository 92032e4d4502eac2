#include "commands.hpp"

#include "output.hpp"
#include "roc/achievability.hpp"
#include "roc/analysis.hpp"
#include "roc/counts.hpp"
#include "roc/error.hpp"
#include "roc/fitting.hpp"
#include "roc/graph.hpp"
#include "roc/limits.hpp"
#include "roc/moments.hpp"
#include "roc/sampler.hpp"
#include "roc/transform.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

namespace roc::cli {

namespace {

double num(const std::string& text) { return toDouble(parseRational(text)); }

CommunitySpec parseSpec(const std::string& text, bool& hasWeight) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() < 3 || parts.size() > 4)
    fail(ErrorKind::Argument, "spec must be m:q:beta[:weight], got '" + text + "'");
  CommunitySpec s;
  s.m = num(parts[0]);
  s.q = num(parts[1]);
  const Rational beta = parseRational(parts[2]);
  if (beta != 0 && beta != 1) fail(ErrorKind::Argument, "beta must be 0 or 1 in '" + text + "'");
  s.beta = beta == 1 ? 1 : 0;
  hasWeight = parts.size() == 4;
  s.weight = hasWeight ? num(parts[3]) : 1.0;
  return s;
}

RocFamily parseFamily(const std::vector<std::string>& specs, const std::string& a) {
  RocFamily f;
  f.a = num(a);
  std::size_t weighted = 0;
  for (const auto& text : specs) {
    bool hasWeight = false;
    f.specs.push_back(parseSpec(text, hasWeight));
    weighted += hasWeight;
  }
  if (weighted != 0 && weighted != specs.size())
    fail(ErrorKind::Argument, "give a weight for every spec or for none");
  f.normalizeWeights();
  f.validate();
  return f;
}

std::uint64_t resolveSeed(const std::optional<std::uint64_t>& seed, Json& config) {
  std::uint64_t value;
  if (seed) {
    value = *seed;
  } else {
    std::random_device rd;
    value = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    config["seedGenerated"] = true;
    std::cerr << "seed: " << value << '\n';
  }
  config["seed"] = value;
  return value;
}

std::string rocHeader(const Json& meta) { return "roc " + meta["command"].get<std::string>() + " " + meta["config"].dump(); }

int writeGraph(const Graph& g, const SampleInfo& info, Json meta, const std::string& out, const Globals& gl) {
  writeEdgeListFile(out, g, rocHeader(meta));
  Json warnings = Json::array();
  for (const auto& w : info.warnings) {
    warnings.push_back(w);
    std::cerr << "warning: " << w << '\n';
  }
  meta["result"] = {{"vertices", g.numVertices()},
                    {"edges", g.numEdges()},
                    {"meanDegree", g.meanDegree()},
                    {"rounds", info.rounds},
                    {"attemptedEdges", info.attemptedEdges},
                    {"warnings", warnings}};
  std::ofstream side(out + ".json");
  if (!side) fail(ErrorKind::Io, "cannot write " + out + ".json");
  side << meta.dump(2) << '\n';
  emit(std::cout, meta, gl.json);
  return kOk;
}

std::vector<double> readTargets(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open " + path);
  std::vector<double> out;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    for (std::string tok; ls >> tok;) {
      try {
        out.push_back(num(tok));
      } catch (const Error&) {
        fail(ErrorKind::Io, path + ":" + std::to_string(no) + ": not a number: '" + tok + "'");
      }
    }
  }
  if (out.empty()) fail(ErrorKind::Io, path + ": no degree targets");
  return out;
}

Json fitJson(const FitResult& r) {
  return {{"family", toJson(r.family)}, {"targets", r.targets},     {"predicted", r.predicted},
          {"residual", r.residual},     {"approximate", r.approximate}, {"route", r.route},
          {"notes", r.notes}};
}

Json achievabilityJson(const AchievabilityResult& r) {
  Json j = {{"feasible", r.feasible()}, {"cycleTargets", toJson(r.targets)}};
  if (r.witness) {
    const auto& w = *r.witness;
    j["witness"] = {{"route", w.route},       {"gamma", w.gamma},       {"approximate", w.approximate},
                    {"residual", w.residual}, {"achieved", w.achieved}, {"family", toJson(w.family)}};
  }
  if (r.infeasible) {
    const auto& f = *r.infeasible;
    j["infeasible"] = {{"kind", f.kind == InfeasibleKind::NecessaryCondition ? "necessary-condition" : "search-exhausted"},
                       {"condition", f.condition},
                       {"detail", f.detail}};
  }
  return j;
}

Json limitJson(const LimitVector& l) { return {{"alpha", toJson(l.alpha)}, {"values", toJson(l.values)}}; }

}  // namespace

void addCommands(CLI::App& app, Globals& gl, std::function<int()>& action) {
  // generate
  auto* gen = app.add_subcommand("generate", "Sample a random graph to an edge list");
  gen->require_subcommand(1);
  {
    struct Opt {
      std::size_t n = 0;
      std::string d, a = "0", rounds = "degree", out, memberships;
      std::vector<std::string> specs;
      std::optional<std::uint64_t> seed;
    };
    auto o = std::make_shared<Opt>();
    auto* c = gen->add_subcommand("roc", "ROC family sample");
    c->add_option("--n", o->n, "Vertices")->required();
    c->add_option("--d", o->d, "Target average degree")->required();
    c->add_option("--spec", o->specs, "Community spec m:q:beta[:weight], repeatable")->required();
    c->add_option("--a", o->a, "Size exponent a in [0, 1]");
    c->add_option("--seed", o->seed, "64-bit seed; generated and echoed when absent");
    c->add_option("--rounds", o->rounds, "Round count: degree (x n d^{1-2a}) or pairs (n d / (s (s-1) q))")
        ->check(CLI::IsMember({"degree", "pairs"}));
    c->add_option("--out", o->out, "Edge list path; metadata goes to <out>.json")->required();
    c->add_option("--memberships", o->memberships, "Experimental: write per-round member lists here");
    c->callback([o, &gl, &action] {
      action = [o, &gl] {
        Json config = {{"n", o->n}, {"d", o->d}, {"a", o->a}, {"spec", o->specs}, {"rounds", o->rounds},
                       {"threads", gl.threads}, {"out", o->out}};
        const auto seed = resolveSeed(o->seed, config);
        RocFamily family = parseFamily(o->specs, o->a);
        SampleOptions so;
        so.threads = gl.threads;
        so.rounds = o->rounds == "pairs" ? RoundConvention::Pairs : RoundConvention::Degree;
        so.recordMemberships = !o->memberships.empty();
        SampleInfo info;
        Graph g = sampleRoc(o->n, num(o->d), family, seed, so, &info);
        if (so.recordMemberships) {
          std::ofstream mf(o->memberships);
          if (!mf) fail(ErrorKind::Io, "cannot write " + o->memberships);
          for (const auto& m : info.memberships) {
            for (std::size_t i = 0; i < m.size(); ++i) mf << (i ? " " : "") << m[i];
            mf << '\n';
          }
        }
        Json meta = envelope("generate roc", config);
        meta["family"] = toJson(family);
        return writeGraph(g, info, meta, o->out, gl);
      };
    });
  }
  {
    struct Opt {
      std::string degrees, s, q, out;
      std::optional<std::uint64_t> seed;
    };
    auto o = std::make_shared<Opt>();
    auto* c = gen->add_subcommand("droc", "DROC sample matching per-vertex degree targets");
    c->add_option("--degrees", o->degrees, "File of degree targets, one per vertex")->required();
    c->add_option("--s", o->s, "Expected community size")->required();
    c->add_option("--q", o->q, "Community density parameter")->required();
    c->add_option("--seed", o->seed, "64-bit seed; generated and echoed when absent");
    c->add_option("--out", o->out, "Edge list path; metadata goes to <out>.json")->required();
    c->callback([o, &gl, &action] {
      action = [o, &gl] {
        Json config = {{"degrees", o->degrees}, {"s", o->s}, {"q", o->q}, {"threads", gl.threads}, {"out", o->out}};
        const auto seed = resolveSeed(o->seed, config);
        DegreeTarget t{readTargets(o->degrees)};
        SampleOptions so;
        so.threads = gl.threads;
        SampleInfo info;
        Graph g = sampleDroc(t.targets.size(), t, num(o->s), num(o->q), seed, so, &info);
        return writeGraph(g, info, envelope("generate droc", config), o->out, gl);
      };
    });
  }
  {
    struct Opt {
      std::size_t n = 0;
      std::string p, out;
      std::optional<std::uint64_t> seed;
    };
    auto o = std::make_shared<Opt>();
    auto* c = gen->add_subcommand("er", "Erdos-Renyi G(n, p) sample");
    c->add_option("--n", o->n, "Vertices")->required();
    c->add_option("--p", o->p, "Edge probability")->required();
    c->add_option("--seed", o->seed, "64-bit seed; generated and echoed when absent");
    c->add_option("--out", o->out, "Edge list path; metadata goes to <out>.json")->required();
    c->callback([o, &gl, &action] {
      action = [o, &gl] {
        Json config = {{"n", o->n}, {"p", o->p}, {"out", o->out}};
        const auto seed = resolveSeed(o->seed, config);
        SampleInfo info;
        Graph g = sampleErdosRenyi(o->n, num(o->p), seed);
        info.rounds = 1;
        return writeGraph(g, info, envelope("generate er", config), o->out, gl);
      };
    });
  }
  {
    struct Opt {
      int d = 0;
      std::string out;
      std::optional<std::uint64_t> seed;
    };
    auto o = std::make_shared<Opt>();
    auto* c = gen->add_subcommand("layered", "Layered random graph with hypercube layer sizes");
    c->add_option("--d", o->d, "Dimension")->required();
    c->add_option("--seed", o->seed, "64-bit seed; generated and echoed when absent");
    c->add_option("--out", o->out, "Edge list path; metadata goes to <out>.json")->required();
    c->callback([o, &gl, &action] {
      action = [o, &gl] {
        Json config = {{"d", o->d}, {"out", o->out}};
        const auto seed = resolveSeed(o->seed, config);
        SampleInfo info;
        Graph g = sampleLayeredHypercube(o->d, seed);
        return writeGraph(g, info, envelope("generate layered", config), o->out, gl);
      };
    });
  }

  // stats
  {
    struct Opt {
      std::string input, alpha = "1";
      int kmax = 6;
      std::optional<int> cycleKmax;
      std::size_t binWidth = 0;
    };
    auto o = std::make_shared<Opt>();
    auto* c = app.add_subcommand("stats", "Walk, cycle and clustering statistics of an edge list");
    c->add_option("--input", o->input, "Edge list")->required();
    c->add_option("--kmax", o->kmax, "Longest closed walk");
    c->add_option("--cycle-kmax", o->cycleKmax, "Longest cycle (default min(kmax, 4))");
    c->add_option("--alpha", o->alpha, "Normalization exponent");
    c->add_option("--bin-width", o->binWidth, "Degree bin width for clustering (default max(1, d/10))");
    c->callback([o, &gl, &action] {
      action = [o, &gl] {
        Json config = {{"input", o->input}, {"kmax", o->kmax}, {"alpha", o->alpha}, {"threads", gl.threads}};
        const int cycleKmax = o->cycleKmax.value_or(std::min(o->kmax, 4));
        config["cycleKmax"] = cycleKmax;
        auto data = readEdgeListFile(o->input);
        const Graph& g = data.graph;
        if (g.numEdges() == 0) fail(ErrorKind::Degenerate, o->input + ": graph has no edges");
        const Rational alpha = parseRational(o->alpha);
        CountOptions co;
        co.threads = gl.threads;
        auto walks = walkCounts(g, o->kmax, co);
        std::map<int, BigInt> cycles;
        if (cycleKmax >= 3) cycles = cycleCounts(g, cycleKmax, co);
        auto report = normalize(g, walks, cycles, toDouble(alpha));

        Json normalized = Json::object(), exact = Json::object(), ratios = Json::object();
        for (const auto& [k, v] : report.normalizedWalks) {
          normalized[std::to_string(k)] = v;
          if (auto e = normalizedWalkExact(walks.at(k), g.numVertices(), report.avgDegree, alpha, k))
            exact[std::to_string(k)] = toJson(*e);
        }
        for (const auto& [k, v] : report.cycleEdgeRatios) ratios[std::to_string(k)] = v;
        auto cc = averageClustering(g);
        Json bins = Json::array();
        for (const auto& b : degreeBinnedClustering(g, o->binWidth))
          bins.push_back({{"lo", b.lo}, {"hi", b.hi}, {"count", b.count}, {"mean", b.meanClustering}});

        Json out = envelope("stats", config);
        out["result"] = {{"vertices", g.numVertices()},
                         {"edges", g.numEdges()},
                         {"averageDegree", toJson(report.avgDegree)},
                         {"duplicateEdges", data.duplicateEdges},
                         {"selfLoops", data.selfLoops},
                         {"walks", toJson(walks)},
                         {"cycles", toJson(cycles)},
                         {"normalizedWalks", normalized},
                         {"normalizedWalksExact", exact},
                         {"cycleEdgeRatios", ratios},
                         {"clustering",
                          {{"average", cc.average},
                           {"counted", cc.counted},
                           {"skippedFraction", cc.skippedFraction},
                           {"byDegree", bins}}}};
        emit(std::cout, out, gl.json);
        return kOk;
      };
    });
  }

  // transform
  {
    struct Opt {
      std::string vector;
      bool inverse = false;
      int polynomial = 0;
    };
    auto o = std::make_shared<Opt>();
    auto* c = app.add_subcommand("transform", "Cycle vector c_3..c_k to walk vector w_3..w_k, or back");
    c->add_option("--vector", o->vector, "Comma-separated entries starting at index 3");
    c->add_flag("--inverse", o->inverse, "Map walks to cycles");
    c->add_option("--polynomial", o->polynomial, "Print the walk polynomial w_k instead");
    c->callback([o, &gl, &action] {
      action = [o, &gl] {
        Json config = {{"vector", o->vector}, {"inverse", o->inverse}, {"polynomial", o->polynomial}};
        Json out = envelope("transform", config);
        if (o->polynomial) {
          out["result"] = {{"k", o->polynomial}, {"polynomial", formatWalkPolynomial(o->polynomial)}};
        } else {
          auto v = parseRationalList(o->vector);
          if (v.empty()) fail(ErrorKind::Argument, "--vector or --polynomial is required");
          const int k = static_cast<int>(v.size()) + 2;
          out["result"] = {{"k", k}, {"vector", toJson(o->inverse ? walkToCycle(v, k) : cycleToWalk(v, k))}};
        }
        emit(std::cout, out, gl.json);
        return kOk;
      };
    });
  }

  // stieltjes
  auto* st = app.add_subcommand("stieltjes", "Truncated Stieltjes moment tools");
  st->require_subcommand(1);
  {
    struct Opt {
      std::string moments;
      bool recover = false;
      std::size_t extend = 0;
    };
    auto o = std::make_shared<Opt>();
    auto* c = st->add_subcommand("check", "Hankel determinant test for mu_0, mu_1, ...");
    c->add_option("--moments", o->moments, "Comma-separated mu_0, mu_1, ...")->required();
    c->add_flag("--recover", o->recover, "Also recover representing atoms");
    c->add_option("--extend", o->extend, "Extend to this many entries");
    c->callback([o, &gl, &action] {
      action = [o, &gl] {
        Json config = {{"moments", o->moments}, {"recover", o->recover}, {"extend", o->extend}};
        auto mu = parseRationalList(o->moments);
        auto diag = satisfiesStieltjes(mu);
        auto dets = hankelDeterminants(mu);
        Json out = envelope("stieltjes check", config);
        Json result = {{"ok", diag.ok},
                       {"firstZero", diag.firstZero},
                       {"failedAt", diag.failedAt},
                       {"reason", diag.reason},
                       {"hankel0", toJson(dets.h0)},
                       {"hankel1", toJson(dets.h1)}};
        if (diag.ok && o->extend > mu.size()) {
          auto ext = extendTruncated(mu, o->extend);
          result["extension"] = {{"mu", toJson(ext.mu)}, {"degenerate", ext.degenerate}};
        }
        if (diag.ok && o->recover) {
          Json atoms = Json::array();
          for (const auto& at : recoverAtoms(mu)) atoms.push_back({{"weight", at.weight}, {"position", at.position}});
          result["atoms"] = atoms;
        }
        out["result"] = result;
        emit(std::cout, out, gl.json);
        return kOk;
      };
    });
  }
  {
    auto s = std::make_shared<std::string>();
    auto* c = st->add_subcommand("char", "Sufficient condition s_x s_y < s_a s_b for full extendability");
    c->add_option("--s", *s, "Comma-separated s_1, ..., s_k")->required();
    c->callback([s, &gl, &action] {
      action = [s, &gl] {
        auto r = charCriterion(parseRationalList(*s));
        Json out = envelope("stieltjes char", {{"s", *s}});
        out["result"] = {{"ok", r.ok}};
        if (r.s0) out["result"]["s0"] = toJson(*r.s0);
        if (!r.ok) out["result"]["violated"] = {{"a", r.a}, {"x", r.x}, {"y", r.y}, {"b", r.b}};
        emit(std::cout, out, gl.json);
        return kOk;
      };
    });
  }

  // achieve
  {
    struct Opt {
      std::string w, alpha = "1/2", ratios;
    };
    auto o = std::make_shared<Opt>();
    auto* c = app.add_subcommand("achieve", "Search for a ROC family achieving a limit or k-ratio vector");
    auto* wOpt = c->add_option("--w", o->w, "Limit w_3..w_k");
    c->add_option("--alpha", o->alpha, "Sparsity exponent in [1/2, 1]");
    auto* rOpt = c->add_option("--ratios", o->ratios, "Cycle-to-edge ratios 2 C_j / (n d), j = 3..k");
    wOpt->excludes(rOpt);
    c->callback([o, &gl, &action] {
      action = [o, &gl] {
        Json config = {{"w", o->w}, {"alpha", o->alpha}, {"ratios", o->ratios}};
        AchievabilityResult r;
        if (!o->ratios.empty()) {
          r = checkKRatioAchievable(parseRationalList(o->ratios));
        } else {
          auto w = parseRationalList(o->w);
          if (w.empty()) fail(ErrorKind::Argument, "--w or --ratios is required");
          r = checkAchievable(w, parseRational(o->alpha), static_cast<int>(w.size()) + 2);
        }
        Json out = envelope("achieve", config);
        out["result"] = achievabilityJson(r);
        emit(std::cout, out, gl.json);
        return r.feasible() ? kOk : kInfeasible;
      };
    });
  }

  // fit
  {
    struct Opt {
      std::string c3, c4, w3, w4, alpha = "1/2", input, degree;
      int kmax = 4;
    };
    auto o = std::make_shared<Opt>();
    auto* c = app.add_subcommand("fit", "Fit ROC parameters to ratios, a graph, or a 4-limit");
    c->add_option("--c3", o->c3, "Triangle-to-edge ratio 2 C_3 / (n d)");
    c->add_option("--c4", o->c4, "Four-cycle-to-edge ratio 2 C_4 / (n d)");
    c->add_option("--w3", o->w3, "Limit w_3");
    c->add_option("--w4", o->w4, "Limit w_4");
    c->add_option("--alpha", o->alpha, "Exponent for --w3/--w4");
    c->add_option("--input", o->input, "Edge list to fit");
    c->add_option("--kmax", o->kmax, "Longest cycle ratio for --input");
    c->add_option("--degree", o->degree, "Degree for the matched model (default: the graph's)");
    c->callback([o, &gl, &action] {
      action = [o, &gl] {
        Json config = {{"c3", o->c3}, {"c4", o->c4}, {"w3", o->w3}, {"w4", o->w4},
                       {"alpha", o->alpha}, {"input", o->input}, {"kmax", o->kmax}, {"degree", o->degree}};
        FitResult r;
        if (!o->input.empty()) {
          GraphFitOptions go;
          go.kmax = o->kmax;
          if (!o->degree.empty()) go.degree = num(o->degree);
          r = fitFromGraph(readEdgeListFile(o->input).graph, go);
        } else if (!o->c3.empty() && !o->c4.empty()) {
          r = fitTriangleFourCycle(num(o->c3), num(o->c4));
        } else if (!o->w3.empty() && !o->w4.empty()) {
          r = fitFourLimit(parseRational(o->w3), parseRational(o->w4), parseRational(o->alpha));
        } else {
          fail(ErrorKind::Argument, "give --c3 and --c4, --w3 and --w4, or --input");
        }
        Json out = envelope("fit", config);
        out["result"] = fitJson(r);
        emit(std::cout, out, gl.json);
        return kOk;
      };
    });
  }

  // limits
  auto* lim = app.add_subcommand("limits", "Reference limits of graph sequences");
  lim->require_subcommand(1);
  {
    auto kmax = std::make_shared<int>(10);
    auto* c = lim->add_subcommand("hypercube", "Hypercube limit, alpha = 1/2");
    c->add_option("--kmax", *kmax, "Largest k");
    c->callback([kmax, &gl, &action] {
      action = [kmax, &gl] {
        Json out = envelope("limits hypercube", {{"kmax", *kmax}});
        out["result"] = limitJson(hypercubeLimit(*kmax));
        emit(std::cout, out, gl.json);
        return kOk;
      };
    });
  }
  {
    auto kmax = std::make_shared<int>(10);
    auto* c = lim->add_subcommand("rook", "Rook's graph limit, alpha = 1");
    c->add_option("--kmax", *kmax, "Largest k");
    c->callback([kmax, &gl, &action] {
      action = [kmax, &gl] {
        Json out = envelope("limits rook", {{"kmax", *kmax}});
        out["result"] = limitJson(rookLimit(*kmax));
        emit(std::cout, out, gl.json);
        return kOk;
      };
    });
  }
  {
    struct Opt {
      std::string ell;
      int k = 6;
    };
    auto o = std::make_shared<Opt>();
    auto* c = lim->add_subcommand("er", "Limit of G(n^{2l}, n^{2-2l})");
    c->add_option("--ell", o->ell, "l > 1")->required();
    c->add_option("--k", o->k, "Largest k");
    c->callback([o, &gl, &action] {
      action = [o, &gl] {
        auto r = erLimit(num(o->ell), o->k);
        Json out = envelope("limits er", {{"ell", o->ell}, {"k", o->k}});
        out["result"] = {{"regime", r.regime}, {"alpha", r.alpha}, {"values", toJson(r.values)}, {"fullAlpha", r.fullAlpha}};
        emit(std::cout, out, gl.json);
        return kOk;
      };
    });
  }
  {
    auto n = std::make_shared<int>(8);
    auto* c = lim->add_subcommand("cycle-seq", "Hypercube cycle sequence s_1..s_n");
    c->add_option("--n", *n, "Terms");
    c->callback([n, &gl, &action] {
      action = [n, &gl] {
        Json seq = Json::array();
        for (const auto& v : hypercubeCycleSeq(*n)) seq.push_back(toJson(v));
        Json out = envelope("limits cycle-seq", {{"n", *n}});
        out["result"] = {{"values", seq}};
        emit(std::cout, out, gl.json);
        return kOk;
      };
    });
  }
  {
    auto d = std::make_shared<int>(10);
    auto* c = lim->add_subcommand("layered", "Spectrum of the reduced layered hypercube operator");
    c->add_option("--d", *d, "Dimension");
    c->callback([d, &gl, &action] {
      action = [d, &gl] {
        auto m = layeredHypercubeMatrix(*d);
        auto c4 = layeredHypercubeExpectedC4(std::min(*d, 20));
        Json out = envelope("limits layered", {{"d", *d}});
        out["result"] = {{"eigenvalues", m.eigenvalues},
                         {"maxDeviation", m.maxDeviation},
                         {"expectedC4", {{"threeLayer", c4.threeLayer}, {"twoLayer", c4.twoLayer}}}};
        emit(std::cout, out, gl.json);
        return kOk;
      };
    });
  }
}

}  // namespace roc::cli
