// Copyright 2026 The Hintforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hintforge/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hintforge/error.hpp"
#include "hintforge/rng.hpp"
#include "parallel.hpp"

namespace hintforge {

using nlohmann::json;

std::string_view toString(SolverRole r) {
  switch (r) {
    case SolverRole::kHeuristic: return "heuristic";
    case SolverRole::kMethod: return "method";
    case SolverRole::kExact: return "exact";
  }
  return "?";
}

void BenchConfig::validate() const {
  require(repeats >= 1, ErrorCode::kInvalidArgument, "repeats must be at least 1");
  require(clipMs > 0, ErrorCode::kInvalidArgument, "clipMs must be positive");
  require(failureRuntimeMs >= 0, ErrorCode::kInvalidArgument,
          "failureRuntimeMs must be nonnegative");
}

json BenchConfig::toJson() const {
  return {{"repeats", repeats},
          {"clipMs", clipMs},
          {"failureRuntimeMs", failureRuntimeMs},
          {"seed", seed},
          {"threads", threads},
          {"runtimeFloorMs", kRuntimeFloorMs},
          {"relativeOptimalityTolerance", kRelativeOptimalityTolerance},
          {"lpFeasibilityTolerance", kLpFeasibilityTolerance},
          {"runtimeScope", "solver call including its own verification and repair; harness "
                           "scoring excluded"}};
}

double arithmeticMean(std::span<const double> xs) {
  require(!xs.empty(), ErrorCode::kInvalidArgument, "mean of an empty list");
  double s = 0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double geometricMean(std::span<const double> xs) {
  require(!xs.empty(), ErrorCode::kInvalidArgument, "geometric mean of an empty list");
  double s = 0;
  for (double x : xs) {
    require(x > 0 && std::isfinite(x), ErrorCode::kNumericalFailure,
            "geometric mean needs positive finite values");
    s += std::log(x);
  }
  return std::exp(s / static_cast<double>(xs.size()));
}

namespace {

double floored(double ms) { return std::max(ms, kRuntimeFloorMs); }

DiagnosticRates rates(std::span<const DiagnosticTrace> traces) {
  DiagnosticRates r;
  r.n = static_cast<int>(traces.size());
  for (const auto& t : traces) {
    r.shortcutRate += t.shortcutUsed;
    r.fallbackRate += t.fallbackUsed;
    r.meanResidualSize += t.residualSize;
    r.meanRepairIterations += t.repairIterations;
  }
  const double n = static_cast<double>(traces.size());
  r.shortcutRate /= n;
  r.fallbackRate /= n;
  r.meanResidualSize /= n;
  r.meanRepairIterations /= n;
  return r;
}

DiagnosticRates averageRows(const std::vector<DiagnosticRates>& rows) {
  DiagnosticRates r;
  for (const auto& x : rows) {
    r.n += x.n;
    r.shortcutRate += x.shortcutRate;
    r.fallbackRate += x.fallbackRate;
    r.meanResidualSize += x.meanResidualSize;
    r.meanRepairIterations += x.meanRepairIterations;
  }
  const double n = static_cast<double>(rows.size());
  r.shortcutRate /= n;
  r.fallbackRate /= n;
  r.meanResidualSize /= n;
  r.meanRepairIterations /= n;
  return r;
}

SolverSummary summarizeSolver(std::span<const RunRecord* const> runs, double clipMs) {
  SolverSummary s;
  s.solverId = runs.front()->solverId;
  s.role = runs.front()->role;
  s.runs = static_cast<int>(runs.size());
  for (const RunRecord* r : runs) {
    s.meanQuality += r->crashed ? 0.0 : r->quality;
    s.optimalityRate += (!r->crashed && r->optimal) ? 1.0 : 0.0;
    s.feasibilityRate += (!r->crashed && r->feasible) ? 1.0 : 0.0;
    s.rawMeanRuntimeMs += r->runtimeMs;
    s.meanRuntimeMs +=
        s.role == SolverRole::kHeuristic ? std::min(r->runtimeMs, clipMs) : r->runtimeMs;
  }
  const double n = static_cast<double>(runs.size());
  s.meanQuality /= n;
  s.optimalityRate /= n;
  s.feasibilityRate /= n;
  s.rawMeanRuntimeMs /= n;
  s.meanRuntimeMs /= n;
  return s;
}

bool heuristicBetter(const SolverSummary& a, const SolverSummary& b) {
  if (a.meanQuality != b.meanQuality) return a.meanQuality > b.meanQuality;
  if (a.optimalityRate != b.optimalityRate) return a.optimalityRate > b.optimalityRate;
  if (a.meanRuntimeMs != b.meanRuntimeMs) return a.meanRuntimeMs < b.meanRuntimeMs;
  return a.solverId < b.solverId;
}

}  // namespace

DiagnosticsAggregate aggregateDiagnostics(std::span<const TraceGroup> groups) {
  require(!groups.empty(), ErrorCode::kInvalidArgument, "no diagnostic traces");
  DiagnosticsAggregate out;
  std::vector<std::string> familyOrder;
  std::map<std::string, std::vector<DiagnosticRates>> byFamily;
  std::vector<DiagnosticRates> all;
  for (const auto& g : groups) {
    require(!g.traces.empty(), ErrorCode::kInvalidArgument,
            "target " + g.target + " has no traces");
    require(!out.perTarget.count(g.target), ErrorCode::kInvalidArgument,
            "target " + g.target + " appears twice");
    DiagnosticRates r = rates(g.traces);
    out.perTarget[g.target] = r;
    byFamily[g.family].push_back(r);
    all.push_back(r);
  }
  for (const auto& [family, rows] : byFamily) out.perFamily[family] = averageRows(rows);
  out.overall = averageRows(all);
  return out;
}

EvalReport summarizeRecords(std::vector<RunRecord> records, const BenchConfig& cfg) {
  cfg.validate();
  require(!records.empty(), ErrorCode::kInvalidArgument, "no run records");
  EvalReport rep;
  rep.config = cfg.toJson();

  std::vector<std::string> targetOrder;
  std::map<std::string, std::vector<const RunRecord*>> byTarget;
  for (const auto& r : records) {
    auto& v = byTarget[r.target];
    if (v.empty()) targetOrder.push_back(r.target);
    v.push_back(&r);
  }

  std::vector<TraceGroup> traceGroups;
  for (const auto& name : targetOrder) {
    const auto& runs = byTarget[name];
    std::vector<std::string> solverOrder;
    std::map<std::string, std::vector<const RunRecord*>> bySolver;
    for (const RunRecord* r : runs) {
      auto& v = bySolver[r->solverId];
      if (v.empty()) solverOrder.push_back(r->solverId);
      require(v.empty() || v.front()->role == r->role, ErrorCode::kShapeMismatch,
              "solver " + r->solverId + " has two roles in " + name);
      v.push_back(r);
    }
    TargetSummary t;
    t.name = name;
    t.family = runs.front()->family;
    int methods = 0;
    TraceGroup tg{t.family, name, {}};
    for (const auto& id : solverOrder) {
      const auto& v = bySolver[id];
      SolverSummary s = summarizeSolver(v, cfg.clipMs);
      switch (s.role) {
        case SolverRole::kMethod:
          ++methods;
          t.method = s;
          for (const RunRecord* r : v) tg.traces.push_back(r->trace);
          break;
        case SolverRole::kHeuristic:
          t.heuristics.push_back(s);
          break;
        case SolverRole::kExact:
          require(!t.exact, ErrorCode::kShapeMismatch, "two exact baselines in " + name);
          t.exact = s;
          break;
      }
    }
    require(methods == 1, ErrorCode::kShapeMismatch,
            "target " + name + " needs exactly one method solver");
    require(!t.heuristics.empty(), ErrorCode::kShapeMismatch,
            "target " + name + " has no heuristic pool");

    std::vector<double> hq, ht;
    const SolverSummary* best = &t.heuristics.front();
    for (const auto& h : t.heuristics) {
      hq.push_back(h.meanQuality);
      ht.push_back(h.meanRuntimeMs);
      if (heuristicBetter(h, *best)) best = &h;
    }
    t.avgHeuristicQuality = arithmeticMean(hq);
    t.avgHeuristicRuntimeMs = arithmeticMean(ht);
    t.bestHeuristicId = best->solverId;
    t.deltaQAvg = t.method.meanQuality - t.avgHeuristicQuality;
    t.deltaQBest = t.method.meanQuality - best->meanQuality;
    const double tm = floored(t.method.meanRuntimeMs);
    t.speedupVsBest = floored(best->meanRuntimeMs) / tm;
    t.speedupVsAvg = floored(t.avgHeuristicRuntimeMs) / tm;
    if (t.exact) t.speedupVsExact = floored(t.exact->meanRuntimeMs) / tm;
    rep.targets.push_back(std::move(t));
    traceGroups.push_back(std::move(tg));
  }

  std::vector<double> q, o, f, dqa, dqb, tm, sb, sa, se;
  for (const auto& t : rep.targets) {
    q.push_back(t.method.meanQuality);
    o.push_back(t.method.optimalityRate);
    f.push_back(t.method.feasibilityRate);
    dqa.push_back(t.deltaQAvg);
    dqb.push_back(t.deltaQBest);
    tm.push_back(floored(t.method.meanRuntimeMs));
    sb.push_back(t.speedupVsBest);
    sa.push_back(t.speedupVsAvg);
    if (t.speedupVsExact) se.push_back(*t.speedupVsExact);
  }
  auto& a = rep.aggregate;
  a.meanQuality = arithmeticMean(q);
  a.meanOptimality = arithmeticMean(o);
  a.meanFeasibility = arithmeticMean(f);
  a.meanDeltaQAvg = arithmeticMean(dqa);
  a.meanDeltaQBest = arithmeticMean(dqb);
  a.geoMeanRuntimeMs = geometricMean(tm);
  a.geoSpeedupVsBest = geometricMean(sb);
  a.geoSpeedupVsAvg = geometricMean(sa);
  if (!se.empty()) a.geoSpeedupVsExact = geometricMean(se);
  rep.diagnostics = aggregateDiagnostics(traceGroups);
  rep.records = std::move(records);
  return rep;
}

EvalReport runBenchmark(std::span<const BenchTarget> targets, const BenchConfig& cfg) {
  cfg.validate();
  require(!targets.empty(), ErrorCode::kInvalidArgument, "no benchmark targets");

  struct Job {
    const BenchTarget* target;
    const MeasuredSolver* solver;
    SolverRole role;
    const Instance* inst;
    int repeat;
  };
  std::vector<Job> jobs;
  for (const auto& t : targets) {
    require(!t.test.empty(), ErrorCode::kNotFound, "missing test split for target " + t.name);
    std::vector<std::pair<const MeasuredSolver*, SolverRole>> solvers;
    solvers.emplace_back(&t.method, SolverRole::kMethod);
    for (const auto& h : t.heuristics) solvers.emplace_back(&h, SolverRole::kHeuristic);
    if (t.exact) solvers.emplace_back(&*t.exact, SolverRole::kExact);
    for (const auto& [s, role] : solvers) {
      require(s->problemClass == t.problemClass, ErrorCode::kUnsupportedClass,
              "solver " + s->id + " does not match target " + t.name);
      require(static_cast<bool>(s->solve), ErrorCode::kInvalidArgument,
              "solver " + s->id + " has no solve function");
    }
    for (const auto& inst : t.test)
      require(inst.problemClass() == t.problemClass, ErrorCode::kUnsupportedClass,
              "instance " + inst.id() + " does not match target " + t.name);
    for (const auto& [s, role] : solvers)
      for (const auto& inst : t.test)
        for (int r = 0; r < cfg.repeats; ++r) jobs.push_back({&t, s, role, &inst, r});
  }

  std::vector<RunRecord> records(jobs.size());
  detail::parallelFor(jobs.size(), cfg.threads, [&](std::size_t i) {
    const Job& j = jobs[i];
    RunOptions ro;
    ro.failureRuntimeMs = cfg.failureRuntimeMs;
    ro.seed = solverSeed(cfg.seed, j.solver->id, j.inst->id());
    ro.clock = cfg.clock;
    RunMeasurement m = runMeasured(*j.solver, *j.inst, ro);
    records[i] = {j.target->name,
                  std::string(toString(j.target->problemClass)),
                  j.solver->id,
                  j.role,
                  j.inst->id(),
                  j.repeat,
                  m.scored.quality,
                  m.scored.feasible,
                  m.scored.optimal,
                  m.wallClockMs,
                  m.crashed,
                  m.trace};
  });
  return summarizeRecords(std::move(records), cfg);
}

namespace {

json toJson(const SolverSummary& s) {
  return {{"solverId", s.solverId},
          {"role", toString(s.role)},
          {"runs", s.runs},
          {"meanQuality", s.meanQuality},
          {"optimalityRate", s.optimalityRate},
          {"feasibilityRate", s.feasibilityRate},
          {"meanRuntimeMs", s.meanRuntimeMs},
          {"rawMeanRuntimeMs", s.rawMeanRuntimeMs}};
}

json toJson(const DiagnosticRates& r) {
  return {{"n", r.n},
          {"shortcutRate", r.shortcutRate},
          {"fallbackRate", r.fallbackRate},
          {"meanResidualSize", r.meanResidualSize},
          {"meanRepairIterations", r.meanRepairIterations}};
}

json optional(const std::optional<double>& x) { return x ? json(*x) : json(); }

}  // namespace

json toJson(const EvalReport& r, bool withRecords) {
  json targets = json::array();
  for (const auto& t : r.targets) {
    json hs = json::array();
    for (const auto& h : t.heuristics) hs.push_back(toJson(h));
    targets.push_back({{"name", t.name},
                       {"family", t.family},
                       {"method", toJson(t.method)},
                       {"heuristics", hs},
                       {"exact", t.exact ? toJson(*t.exact) : json()},
                       {"avgHeuristicQuality", t.avgHeuristicQuality},
                       {"avgHeuristicRuntimeMs", t.avgHeuristicRuntimeMs},
                       {"bestHeuristicId", t.bestHeuristicId},
                       {"deltaQAvg", t.deltaQAvg},
                       {"deltaQBest", t.deltaQBest},
                       {"speedupVsBest", t.speedupVsBest},
                       {"speedupVsAvg", t.speedupVsAvg},
                       {"speedupVsExact", optional(t.speedupVsExact)}});
  }
  const auto& a = r.aggregate;
  json diag = {{"overall", toJson(r.diagnostics.overall)},
               {"perFamily", json::object()},
               {"perTarget", json::object()}};
  for (const auto& [k, v] : r.diagnostics.perFamily) diag["perFamily"][k] = toJson(v);
  for (const auto& [k, v] : r.diagnostics.perTarget) diag["perTarget"][k] = toJson(v);
  json out = {{"config", r.config},
              {"targets", targets},
              {"aggregate",
               {{"meanQuality", a.meanQuality},
                {"meanOptimality", a.meanOptimality},
                {"meanFeasibility", a.meanFeasibility},
                {"meanDeltaQAvg", a.meanDeltaQAvg},
                {"meanDeltaQBest", a.meanDeltaQBest},
                {"geoMeanRuntimeMs", a.geoMeanRuntimeMs},
                {"geoSpeedupVsBest", a.geoSpeedupVsBest},
                {"geoSpeedupVsAvg", a.geoSpeedupVsAvg},
                {"geoSpeedupVsExact", optional(a.geoSpeedupVsExact)}}},
              {"diagnostics", diag}};
  if (withRecords) {
    json recs = json::array();
    for (const auto& x : r.records)
      recs.push_back({{"target", x.target},
                      {"family", x.family},
                      {"solverId", x.solverId},
                      {"role", toString(x.role)},
                      {"instanceId", x.instanceId},
                      {"repeat", x.repeat},
                      {"quality", x.quality},
                      {"feasible", x.feasible},
                      {"optimal", x.optimal},
                      {"runtimeMs", x.runtimeMs},
                      {"crashed", x.crashed},
                      {"trace", hintforge::toJson(x.trace)}});
    out["records"] = recs;
  }
  return out;
}

std::string toCsv(const EvalReport& r) {
  std::ostringstream os;
  os << "target,method,Q,O,F,T_ms,Q_avg_heur,T_avg_heur_ms,best_heuristic,Q_best,O_best,"
        "T_best_ms,dQ_avg,dQ_best,speedup_best,speedup_exact\n";
  auto num = [](double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return std::string(buf);
  };
  for (const auto& t : r.targets) {
    const SolverSummary* best = nullptr;
    for (const auto& h : t.heuristics)
      if (h.solverId == t.bestHeuristicId) best = &h;
    os << t.name << ',' << t.method.solverId << ',' << num(t.method.meanQuality) << ','
       << num(t.method.optimalityRate) << ',' << num(t.method.feasibilityRate) << ','
       << num(t.method.meanRuntimeMs) << ',' << num(t.avgHeuristicQuality) << ','
       << num(t.avgHeuristicRuntimeMs) << ',' << t.bestHeuristicId << ','
       << num(best->meanQuality) << ',' << num(best->optimalityRate) << ','
       << num(best->meanRuntimeMs) << ',' << num(t.deltaQAvg) << ',' << num(t.deltaQBest) << ','
       << num(t.speedupVsBest) << ',' << (t.speedupVsExact ? num(*t.speedupVsExact) : "")
       << '\n';
  }
  return os.str();
}

PerturbationReport runPerturbationAblation(const std::string& target,
                                           std::span<const Instance> test,
                                           const MeasuredSolver& solver,
                                           const PerturbationConfig& cfg) {
  require(!test.empty(), ErrorCode::kNotFound, "missing test split for target " + target);
  require(isGraphClass(solver.problemClass), ErrorCode::kUnsupportedClass,
          "perturbation ablation needs a graph class");
  PerturbationReport rep;
  rep.target = target;
  rep.solverId = solver.id;
  rep.n = static_cast<int>(test.size());
  std::vector<double> ratios;
  double qo = 0, qp = 0, qc = 0, oc = 0, fc = 0;
  for (const auto& inst : test) {
    RunOptions ro;
    ro.failureRuntimeMs = cfg.failureRuntimeMs;
    ro.seed = solverSeed(cfg.seed, solver.id, inst.id());
    ro.clock = cfg.clock;
    RunMeasurement a = runMeasured(solver, inst, ro);
    Instance pert =
        relabelGraph(inst, CounterRng::derive(cfg.seed, "relabel", inst.id()).next()).instance;
    pert.pub.id = inst.id();
    RunMeasurement b = runMeasured(solver, pert, ro);
    const double q1 = a.crashed ? 0.0 : a.scored.quality;
    const double q2 = b.crashed ? 0.0 : b.scored.quality;
    qo += q1;
    qp += q2;
    qc += std::abs(q1 - q2) > cfg.qualityTolerance;
    oc += (!a.crashed && a.scored.optimal) != (!b.crashed && b.scored.optimal);
    fc += (!a.crashed && a.scored.feasible) != (!b.crashed && b.scored.feasible);
    ratios.push_back(floored(b.wallClockMs) / floored(a.wallClockMs));
  }
  const double n = static_cast<double>(test.size());
  rep.qOrig = qo / n;
  rep.qPert = qp / n;
  rep.deltaQ = rep.qPert - rep.qOrig;
  rep.qualityChanged = qc / n;
  rep.optimalityChanged = oc / n;
  rep.feasibilityChanged = fc / n;
  rep.runtimeRatio = geometricMean(ratios);
  return rep;
}

json toJson(const PerturbationReport& r) {
  return {{"target", r.target},
          {"solverId", r.solverId},
          {"n", r.n},
          {"qOrig", r.qOrig},
          {"qPert", r.qPert},
          {"deltaQ", r.deltaQ},
          {"qualityChanged", r.qualityChanged},
          {"optimalityChanged", r.optimalityChanged},
          {"feasibilityChanged", r.feasibilityChanged},
          {"runtimeRatio", r.runtimeRatio}};
}

}  // namespace hintforge
