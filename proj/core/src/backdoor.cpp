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

#include "hintforge/backdoor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hintforge/error.hpp"

namespace hintforge {

std::vector<double> salienceVector(const CnfFormula& f) {
  require(!f.clauses.empty(), ErrorCode::kInvalidArgument,
          "salience: formula has no clauses");
  std::vector<double> counts(f.numVars, 0.0);
  for (const auto& c : f.clauses) {
    if (isHornClause(c)) continue;
    for (int lit : c)
      if (lit > 0) counts[lit - 1] += 1.0;
  }
  const double m = static_cast<double>(f.clauses.size());
  for (double& x : counts) x /= m;
  return counts;
}

double salience(const CnfFormula& f, int var) {
  require(var >= 0 && var < f.numVars, ErrorCode::kInvalidArgument,
          "salience: variable index out of range");
  return salienceVector(f)[var];
}

SalienceProfile estimateSalience(std::span<const CnfFormula> sample) {
  require(!sample.empty(), ErrorCode::kInvalidArgument, "salience: empty sample");
  const int d = sample.front().numVars;
  SalienceProfile out;
  out.sigmaHat.assign(d, 0.0);
  for (const auto& f : sample) {
    require(f.numVars == d, ErrorCode::kShapeMismatch,
            "salience: formulas disagree on the variable count");
    auto s = salienceVector(f);
    for (int i = 0; i < d; ++i) out.sigmaHat[i] += s[i];
  }
  out.m = static_cast<int>(sample.size());
  for (double& x : out.sigmaHat) x /= out.m;
  return out;
}

std::vector<int> topK(std::span<const double> scores, int k) {
  require(k >= 0 && static_cast<std::size_t>(k) <= scores.size(),
          ErrorCode::kInvalidArgument, "topK: k out of range");
  std::vector<int> idx(scores.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return scores[a] > scores[b]; });
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

std::vector<int> recoverBackdoor(std::span<const CnfFormula> sample, int k) {
  require(!sample.empty(), ErrorCode::kInvalidArgument,
          "recoverBackdoor: empty sample");
  require(k >= 1 && k <= sample.front().numVars, ErrorCode::kInvalidArgument,
          "recoverBackdoor: k must lie in [1, d]");
  auto profile = estimateSalience(sample);
  return topK(profile.sigmaHat, k);
}

void CompiledBackdoorSolver::validate(int numVars) const {
  if (static_cast<int>(backdoor.size()) > kMaxEnumeratedBackdoor)
    throw Error(ErrorCode::kBudgetExceeded, "backdoor too large to enumerate");
  if (baseSolver != "dpll")
    throw Error(ErrorCode::kInvalidArgument, "unknown base solver '" + baseSolver + "'");
  for (std::size_t i = 0; i < backdoor.size(); ++i) {
    const int v = backdoor[i];
    if (v < 0 || v >= numVars)
      throw Error(ErrorCode::kInvalidArgument,
                  "backdoor variable " + std::to_string(v) + " out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (backdoor[j] == v)
        throw Error(ErrorCode::kInvalidArgument,
                    "backdoor variable " + std::to_string(v) + " repeated");
  }
}

namespace {

// Restricts and Horn-solves one branch at a time over flat buffers sized once
// per formula and reused across branches.
class BranchSolver {
 public:
  BranchSolver(const CnfFormula& f, const std::vector<int>& backdoor)
      : f_(f), backdoor_(backdoor), val_(f.numVars, -1) {
    const std::size_t m = f.clauses.size();
    lits_.resize(f.numLiterals());
    start_.resize(m + 1);
    head_.resize(m);
    remaining_.resize(m);
  }

  struct Outcome {
    bool conflict = false;
    bool horn = true;
    int residualClauses = 0;
  };

  Outcome restrict(const std::vector<bool>& alpha) {
    for (std::size_t i = 0; i < backdoor_.size(); ++i) val_[backdoor_[i]] = alpha[i] ? 1 : 0;
    facts_.clear();
    Outcome o;
    int* out = lits_.data();
    std::size_t kept = 0;
    for (const auto& c : f_.clauses) {
      int* mark = out;
      int positives = 0, negatives = 0, headVar = -1;
      bool sat = false;
      for (int lit : c) {
        const int v = (lit > 0 ? lit : -lit) - 1;
        const int x = val_[v];
        if (x < 0) {
          *out++ = lit;
          if (lit > 0) {
            ++positives;
            headVar = v;
          } else {
            ++negatives;
          }
        } else if ((x == 1) == (lit > 0)) {
          sat = true;
          break;
        }
      }
      if (sat) {
        out = mark;
        continue;
      }
      if (out == mark) o.conflict = true;
      if (positives > 1) o.horn = false;
      start_[kept] = static_cast<int>(mark - lits_.data());
      head_[kept] = positives == 1 ? headVar : -1;
      remaining_[kept] = negatives;
      if (negatives == 0) facts_.push_back(static_cast<int>(kept));
      ++kept;
    }
    start_[kept] = static_cast<int>(out - lits_.data());
    kept_ = kept;
    o.residualClauses = static_cast<int>(kept);
    return o;
  }

  CnfFormula residual() const {
    CnfFormula r;
    r.numVars = f_.numVars;
    for (std::size_t c = 0; c < kept_; ++c)
      r.clauses.emplace_back(lits_.begin() + start_[c], lits_.begin() + start_[c + 1]);
    return r;
  }

  /// Forward chaining from the facts to the minimal model of the current Horn
  /// residual. Without facts the minimal model is all-false.
  SatResult solveHorn() {
    const int n = f_.numVars;
    SatResult r;
    truth_.assign(n, 0);
    queue_.clear();
    auto fire = [&](int c) {
      const int h = head_[c];
      if (h < 0) return false;
      if (!truth_[h]) {
        truth_[h] = 1;
        queue_.push_back(h);
        ++r.propagations;
      }
      return true;
    };
    for (int c : facts_)
      if (!fire(c)) return r;
    if (!queue_.empty()) {
      occStart_.assign(n + 1, 0);
      for (std::size_t c = 0; c < kept_; ++c)
        for (int i = start_[c]; i < start_[c + 1]; ++i)
          if (lits_[i] < 0) ++occStart_[-lits_[i]];
      for (int v = 0; v < n; ++v) occStart_[v + 1] += occStart_[v];
      occ_.resize(occStart_[n]);
      fill_.assign(occStart_.begin(), occStart_.end() - 1);
      for (std::size_t c = 0; c < kept_; ++c)
        for (int i = start_[c]; i < start_[c + 1]; ++i)
          if (lits_[i] < 0) occ_[fill_[-lits_[i] - 1]++] = static_cast<int>(c);
      for (std::size_t q = 0; q < queue_.size(); ++q) {
        const int v = queue_[q];
        for (int i = occStart_[v]; i < occStart_[v + 1]; ++i) {
          const int c = occ_[i];
          if (--remaining_[c] == 0 && !fire(c)) return r;
        }
      }
    }
    r.satisfiable = true;
    r.assignment.assign(n, false);
    for (int v = 0; v < n; ++v) r.assignment[v] = truth_[v] != 0;
    return r;
  }

 private:
  const CnfFormula& f_;
  const std::vector<int>& backdoor_;
  std::vector<signed char> val_;
  std::vector<int> lits_, start_, head_, remaining_, facts_;
  std::size_t kept_ = 0;
  std::vector<int> occStart_, occ_, fill_, queue_;
  std::vector<char> truth_;
};

}  // namespace

BackdoorSolveResult solveWithBackdoor(const CompiledBackdoorSolver& solver,
                                      const CnfFormula& f) {
  solver.validate(f.numVars);
  const int k = static_cast<int>(solver.backdoor.size());
  BackdoorSolveResult out;
  BranchSolver branch(f, solver.backdoor);
  std::vector<bool> alpha(k);
  const std::uint64_t branches = std::uint64_t{1} << k;
  for (std::uint64_t t = 0; t < branches; ++t) {
    for (int i = 0; i < k; ++i) alpha[i] = (t >> (k - 1 - i)) & 1U;
    ++out.branchesTried;
    auto o = branch.restrict(alpha);
    out.trace.residualSize = o.residualClauses;
    if (o.conflict) continue;
    SatResult sub;
    if (o.horn) {
      out.trace.shortcutUsed = true;
      sub = branch.solveHorn();
    } else {
      out.trace.fallbackUsed = true;
      sub = dpll(branch.residual());
    }
    out.result.decisions += sub.decisions;
    out.result.propagations += sub.propagations;
    if (!sub.satisfiable) continue;
    for (int i = 0; i < k; ++i) sub.assignment[solver.backdoor[i]] = alpha[i];
    out.result.satisfiable = true;
    out.result.assignment = std::move(sub.assignment);
    break;
  }
  out.trace.repairIterations = out.branchesTried - 1;
  return out;
}

double backdoorMargin(int d, int k, double rho) {
  require(k >= 1 && 2 * k < d, ErrorCode::kInvalidArgument,
          "backdoor margin needs 1 <= k < d/2");
  require(rho > 0 && rho <= 1, ErrorCode::kInvalidArgument,
          "backdoor margin needs rho in (0, 1]");
  return rho * (1.0 / k - 1.0 / (d - k));
}

int backdoorSampleSize(int d, int k, double rho, double delta) {
  require(delta > 0 && delta < 1, ErrorCode::kInvalidArgument,
          "delta must lie in (0, 1)");
  const double g = backdoorMargin(d, k, rho);
  return static_cast<int>(std::ceil(8.0 / (g * g) * std::log(2.0 * d / delta)));
}

}  // namespace hintforge
