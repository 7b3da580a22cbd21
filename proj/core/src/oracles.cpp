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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hintforge/oracles.hpp"
#include "hintforge/verify.hpp"

namespace hintforge {

BudgetMeter::BudgetMeter(const OracleBudget& budget, const char* what)
    : budget_(budget), what_(what), start_(std::chrono::steady_clock::now()) {
  require(budget.maxSeconds > 0 && budget.maxStates > 0, ErrorCode::kInvalidArgument,
          "oracle budget must be positive");
}

bool BudgetMeter::expired() const {
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
  return elapsed.count() > budget_.maxSeconds;
}

void BudgetMeter::fail() const {
  throw Error(ErrorCode::kBudgetExceeded,
              std::string(what_) + " gave up after " + std::to_string(states_) + " states");
}

// ---- packing LP -------------------------------------------------------------

namespace {

class BoundedSimplex {
 public:
  BoundedSimplex(const PackingTable& lp, BudgetMeter& meter)
      : lp_(lp), n_(lp.numItems), m_(lp.numResources), meter_(meter) {
    const int total = n_ + m_;
    status_.assign(static_cast<std::size_t>(total), Status::kLower);
    basis_.resize(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) {
      basis_[i] = n_ + i;
      status_[n_ + i] = Status::kBasic;
    }
    binv_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
    for (int i = 0; i < m_; ++i) at(i, i) = 1.0;
    xb_ = lp.capacities;
  }

  LpOptimum solve() {
    int degenerate = 0;
    int sincePivotRefactor = 0;
    int iterations = 0;
    std::vector<double> y(static_cast<std::size_t>(m_));
    std::vector<double> alpha(static_cast<std::size_t>(m_));
    for (;;) {
      meter_.tick();
      const bool bland = degenerate > 50;
      // Duals y = c_B^T B^-1.
      std::fill(y.begin(), y.end(), 0.0);
      for (int i = 0; i < m_; ++i) {
        const double cb = cost(basis_[i]);
        if (cb == 0) continue;
        for (int k = 0; k < m_; ++k) y[k] += cb * at(i, k);
      }
      int entering = -1;
      double bestScore = 0;
      for (int j = 0; j < n_ + m_; ++j) {
        if (status_[j] == Status::kBasic) continue;
        const double d = reducedCost(j, y);
        const bool improving = (status_[j] == Status::kLower && d > kDualTol) ||
                               (status_[j] == Status::kUpper && d < -kDualTol);
        if (!improving) continue;
        if (bland) {
          entering = j;
          break;
        }
        if (std::abs(d) > bestScore) {
          bestScore = std::abs(d);
          entering = j;
        }
      }
      if (entering < 0) break;

      column(entering, alpha);
      const double dir = status_[entering] == Status::kLower ? 1.0 : -1.0;
      double step = upper(entering);
      int leave = -1;
      bool leaveToUpper = false;
      double leavePivot = 0;
      for (int i = 0; i < m_; ++i) {
        const double delta = dir * alpha[i];
        double limit = std::numeric_limits<double>::infinity();
        bool toUpper = false;
        if (delta > kPivotTol) {
          limit = std::max(0.0, xb_[i]) / delta;
        } else if (delta < -kPivotTol && std::isfinite(upper(basis_[i]))) {
          limit = std::max(0.0, upper(basis_[i]) - xb_[i]) / -delta;
          toUpper = true;
        } else {
          continue;
        }
        const bool better =
            limit < step - 1e-12 ||
            (limit <= step + 1e-12 && leave >= 0 &&
             (bland ? basis_[i] < basis_[leave] : std::abs(alpha[i]) > leavePivot));
        if (better || (leave < 0 && limit <= step)) {
          step = limit;
          leave = i;
          leaveToUpper = toUpper;
          leavePivot = std::abs(alpha[i]);
        }
      }
      require(std::isfinite(step), ErrorCode::kNumericalFailure,
              "packing LP reported unbounded");
      degenerate = step < 1e-12 ? degenerate + 1 : 0;
      for (int i = 0; i < m_; ++i) xb_[i] -= dir * step * alpha[i];
      ++iterations;
      if (leave < 0) {
        // Bound flip: the entering variable crosses to its other bound.
        status_[entering] =
            status_[entering] == Status::kLower ? Status::kUpper : Status::kLower;
        continue;
      }
      const double enteringValue =
          (status_[entering] == Status::kLower ? 0.0 : upper(entering)) + dir * step;
      const int leaving = basis_[leave];
      status_[leaving] = leaveToUpper ? Status::kUpper : Status::kLower;
      status_[entering] = Status::kBasic;
      basis_[leave] = entering;
      xb_[leave] = enteringValue;
      pivot(leave, alpha);
      if (++sincePivotRefactor >= 64) {
        refactor();
        sincePivotRefactor = 0;
      }
    }
    refactor();
    return extract(iterations);
  }

 private:
  enum class Status : unsigned char { kLower, kUpper, kBasic };
  static constexpr double kDualTol = 1e-10;
  static constexpr double kPivotTol = 1e-11;

  double& at(int r, int c) { return binv_[static_cast<std::size_t>(r) * m_ + c]; }
  double at(int r, int c) const { return binv_[static_cast<std::size_t>(r) * m_ + c]; }

  double cost(int j) const { return j < n_ ? lp_.values[j] : 0.0; }
  double upper(int j) const {
    return j < n_ ? 1.0 : std::numeric_limits<double>::infinity();
  }
  double entry(int row, int j) const {
    return j < n_ ? lp_.use(j, row) : (j - n_ == row ? 1.0 : 0.0);
  }

  double reducedCost(int j, const std::vector<double>& y) const {
    if (j >= n_) return -y[j - n_];
    double d = lp_.values[j];
    for (int i = 0; i < m_; ++i) d -= y[i] * lp_.use(j, i);
    return d;
  }

  void column(int j, std::vector<double>& alpha) const {
    for (int i = 0; i < m_; ++i) {
      double s = 0;
      if (j >= n_) {
        s = at(i, j - n_);
      } else {
        for (int k = 0; k < m_; ++k) s += at(i, k) * lp_.use(j, k);
      }
      alpha[i] = s;
    }
  }

  void pivot(int r, const std::vector<double>& alpha) {
    const double p = alpha[r];
    require(std::abs(p) > kPivotTol, ErrorCode::kNumericalFailure, "tiny simplex pivot");
    for (int k = 0; k < m_; ++k) at(r, k) /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == r || alpha[i] == 0) continue;
      const double f = alpha[i];
      for (int k = 0; k < m_; ++k) at(i, k) -= f * at(r, k);
    }
  }

  // Rebuilds B^-1 by Gauss-Jordan and recomputes basic values from scratch.
  void refactor() {
    std::vector<double> b(static_cast<std::size_t>(m_) * m_);
    for (int i = 0; i < m_; ++i) {
      for (int c = 0; c < m_; ++c) b[static_cast<std::size_t>(i) * m_ + c] = entry(i, basis_[c]);
    }
    std::vector<double> inv(static_cast<std::size_t>(m_) * m_, 0.0);
    for (int i = 0; i < m_; ++i) inv[static_cast<std::size_t>(i) * m_ + i] = 1.0;
    auto B = [&](int r, int c) -> double& { return b[static_cast<std::size_t>(r) * m_ + c]; };
    auto I = [&](int r, int c) -> double& { return inv[static_cast<std::size_t>(r) * m_ + c]; };
    for (int col = 0; col < m_; ++col) {
      int piv = col;
      for (int r = col + 1; r < m_; ++r) {
        if (std::abs(B(r, col)) > std::abs(B(piv, col))) piv = r;
      }
      require(std::abs(B(piv, col)) > 1e-12, ErrorCode::kNumericalFailure,
              "singular simplex basis");
      if (piv != col) {
        for (int k = 0; k < m_; ++k) {
          std::swap(B(piv, k), B(col, k));
          std::swap(I(piv, k), I(col, k));
        }
      }
      const double d = B(col, col);
      for (int k = 0; k < m_; ++k) {
        B(col, k) /= d;
        I(col, k) /= d;
      }
      for (int r = 0; r < m_; ++r) {
        if (r == col || B(r, col) == 0) continue;
        const double f = B(r, col);
        for (int k = 0; k < m_; ++k) {
          B(r, k) -= f * B(col, k);
          I(r, k) -= f * I(col, k);
        }
      }
    }
    binv_ = std::move(inv);
    std::vector<double> rhs = lp_.capacities;
    for (int j = 0; j < n_; ++j) {
      if (status_[j] != Status::kUpper) continue;
      for (int i = 0; i < m_; ++i) rhs[i] -= lp_.use(j, i);
    }
    for (int i = 0; i < m_; ++i) {
      double s = 0;
      for (int k = 0; k < m_; ++k) s += at(i, k) * rhs[k];
      xb_[i] = s;
    }
  }

  LpOptimum extract(int iterations) const {
    LpOptimum out;
    out.iterations = iterations;
    out.fractions.fractions.assign(static_cast<std::size_t>(n_), 0.0);
    for (int j = 0; j < n_; ++j) {
      if (status_[j] == Status::kUpper) out.fractions.fractions[j] = 1.0;
    }
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) {
        out.fractions.fractions[basis_[i]] = std::clamp(xb_[i], 0.0, 1.0);
      }
    }
    // Guard against round-off pushing a row above capacity.
    for (int r = 0; r < m_; ++r) {
      double load = 0;
      for (int j = 0; j < n_; ++j) load += lp_.use(j, r) * out.fractions.fractions[j];
      require(load <= lp_.capacities[r] * (1 + 1e-9) + 1e-9, ErrorCode::kNumericalFailure,
              "simplex solution violates a capacity row");
    }
    for (int j = 0; j < n_; ++j) out.value += lp_.values[j] * out.fractions.fractions[j];
    return out;
  }

  const PackingTable& lp_;
  int n_;
  int m_;
  BudgetMeter& meter_;
  std::vector<Status> status_;
  std::vector<int> basis_;
  std::vector<double> binv_;
  std::vector<double> xb_;
};

}  // namespace

LpOptimum exactLp(const PackingTable& lp, const OracleBudget& budget) {
  lp.validate();
  BudgetMeter meter(budget, "packing LP simplex");
  if (lp.numResources == 0) {
    LpOptimum out;
    out.fractions.fractions.assign(static_cast<std::size_t>(lp.numItems), 1.0);
    out.value = std::accumulate(lp.values.begin(), lp.values.end(), 0.0);
    return out;
  }
  BoundedSimplex simplex(lp, meter);
  return simplex.solve();
}

// ---- MDKP -------------------------------------------------------------------

namespace {

class MdkpSearch {
 public:
  MdkpSearch(const MdkpInstance& kp, BudgetMeter& meter) : kp_(kp), meter_(meter) {
    const int n = kp.numItems;
    order_.resize(static_cast<std::size_t>(n));
    std::iota(order_.begin(), order_.end(), 0);
    auto weight = [&](int i) {
      double w = 0;
      for (int r = 0; r < kp.numResources; ++r) w += kp.use(i, r) / kp.capacities[r];
      return w;
    };
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return kp.values[a] * weight(b) > kp.values[b] * weight(a);
    });
    // Per-resource ratio orders over DFS positions for the fractional bound.
    byResource_.resize(static_cast<std::size_t>(kp.numResources));
    for (int r = 0; r < kp.numResources; ++r) {
      auto& ord = byResource_[r];
      ord.resize(static_cast<std::size_t>(n));
      std::iota(ord.begin(), ord.end(), 0);
      std::stable_sort(ord.begin(), ord.end(), [&](int pa, int pb) {
        const int a = order_[pa], b = order_[pb];
        return kp.values[a] * kp.use(b, r) > kp.values[b] * kp.use(a, r);
      });
    }
  }

  MdkpOptimum run() {
    const int n = kp_.numItems;
    picked_.assign(static_cast<std::size_t>(n), false);
    bestPicks_.assign(static_cast<std::size_t>(n), false);
    remaining_ = kp_.capacities;
    // Greedy incumbent in DFS order.
    std::vector<double> rem = kp_.capacities;
    bestValue_ = 0;
    for (int pos = 0; pos < n; ++pos) {
      const int i = order_[pos];
      if (fits(i, rem)) {
        for (int r = 0; r < kp_.numResources; ++r) rem[r] -= kp_.use(i, r);
        bestPicks_[i] = true;
        bestValue_ += kp_.values[i];
      }
    }
    dfs(0, 0.0);
    return {bestValue_, ItemPicks{bestPicks_}};
  }

 private:
  bool fits(int i, const std::vector<double>& rem) const {
    for (int r = 0; r < kp_.numResources; ++r) {
      if (kp_.use(i, r) > rem[r]) return false;
    }
    return true;
  }

  double bound(int pos) const {
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < kp_.numResources; ++r) {
      double cap = remaining_[r];
      double total = 0;
      for (int p : byResource_[r]) {
        if (p < pos) continue;
        const int i = order_[p];
        const double w = kp_.use(i, r);
        if (w <= cap) {
          cap -= w;
          total += kp_.values[i];
        } else {
          total += kp_.values[i] * cap / w;
          break;
        }
      }
      best = std::min(best, total);
    }
    if (!std::isfinite(best)) {
      best = 0;
      for (int p = pos; p < kp_.numItems; ++p) best += kp_.values[order_[p]];
    }
    return best;
  }

  void dfs(int pos, double value) {
    meter_.tick();
    if (value > bestValue_) {
      bestValue_ = value;
      bestPicks_ = picked_;
    }
    if (pos == kp_.numItems) return;
    if (value + bound(pos) <= bestValue_) return;
    const int i = order_[pos];
    if (fits(i, remaining_)) {
      for (int r = 0; r < kp_.numResources; ++r) remaining_[r] -= kp_.use(i, r);
      picked_[i] = true;
      dfs(pos + 1, value + kp_.values[i]);
      picked_[i] = false;
      for (int r = 0; r < kp_.numResources; ++r) remaining_[r] += kp_.use(i, r);
    }
    dfs(pos + 1, value);
  }

  const MdkpInstance& kp_;
  BudgetMeter& meter_;
  std::vector<int> order_;
  std::vector<std::vector<int>> byResource_;
  std::vector<bool> picked_;
  std::vector<bool> bestPicks_;
  std::vector<double> remaining_;
  double bestValue_ = 0;
};

}  // namespace

MdkpOptimum exactMdkp(const MdkpInstance& kp, const OracleBudget& budget) {
  kp.validate();
  BudgetMeter meter(budget, "exact MDKP");
  MdkpSearch search(kp, meter);
  return search.run();
}

// ---- TSP --------------------------------------------------------------------

TspOptimum exactTsp(const TspInstance& tsp, const OracleBudget& budget) {
  tsp.validate();
  const int n = tsp.n();
  require(n <= 18, ErrorCode::kBudgetExceeded, "Held-Karp supports at most 18 cities");
  BudgetMeter meter(budget, "Held-Karp");
  if (n <= 3) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    return {tourLength(tsp, order), Tour{order}};
  }
  // Subsets over cities 1..n-1; city 0 is the fixed start.
  const int m = n - 1;
  const std::size_t subsets = std::size_t{1} << m;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dp(subsets * m, inf);
  std::vector<signed char> parent(subsets * m, -1);
  for (int j = 0; j < m; ++j) dp[(std::size_t{1} << j) * m + j] = tsp.dist(0, j + 1);
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    for (int j = 0; j < m; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const double base = dp[mask * m + j];
      if (base == inf) continue;
      meter.tick();
      for (int k = 0; k < m; ++k) {
        if (mask & (std::size_t{1} << k)) continue;
        const std::size_t next = mask | (std::size_t{1} << k);
        const double cand = base + tsp.dist(j + 1, k + 1);
        if (cand < dp[next * m + k]) {
          dp[next * m + k] = cand;
          parent[next * m + k] = static_cast<signed char>(j);
        }
      }
    }
  }
  const std::size_t full = subsets - 1;
  int last = 0;
  double best = inf;
  for (int j = 0; j < m; ++j) {
    const double cand = dp[full * m + j] + tsp.dist(j + 1, 0);
    if (cand < best) {
      best = cand;
      last = j;
    }
  }
  std::vector<int> order;
  std::size_t mask = full;
  int cur = last;
  while (cur >= 0) {
    order.push_back(cur + 1);
    const int prev = parent[mask * m + cur];
    mask &= ~(std::size_t{1} << cur);
    cur = prev;
  }
  order.push_back(0);
  std::reverse(order.begin(), order.end());
  return {tourLength(tsp, order), Tour{std::move(order)}};
}

// ---- MaxSAT -----------------------------------------------------------------

namespace {

class MaxSatSearch {
 public:
  MaxSatSearch(const CnfFormula& f, BudgetMeter& meter) : f_(f), meter_(meter) {
    const int d = f.numVars;
    occurrences_.resize(static_cast<std::size_t>(d) + 1);
    std::vector<int> positive(static_cast<std::size_t>(d) + 1, 0);
    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
      for (int lit : f.clauses[c]) {
        occurrences_[std::abs(lit)].push_back({static_cast<int>(c), lit > 0});
        if (lit > 0) ++positive[std::abs(lit)];
      }
    }
    order_.resize(static_cast<std::size_t>(d));
    std::iota(order_.begin(), order_.end(), 1);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return occurrences_[a].size() > occurrences_[b].size();
    });
    preferTrue_.resize(static_cast<std::size_t>(d) + 1);
    for (int v = 1; v <= d; ++v) {
      preferTrue_[v] = 2 * positive[v] >= static_cast<int>(occurrences_[v].size());
    }
  }

  MaxSatOptimum run() {
    const int d = f_.numVars;
    const auto m = f_.clauses.size();
    unassigned_.resize(m);
    satisfied_.assign(m, 0);
    for (std::size_t c = 0; c < m; ++c) {
      unassigned_[c] = static_cast<int>(f_.clauses[c].size());
    }
    falsified_ = 0;
    for (std::size_t c = 0; c < m; ++c) {
      if (unassigned_[c] == 0) ++falsified_;  // empty clauses
    }
    values_.assign(static_cast<std::size_t>(d), false);
    for (int v = 1; v <= d; ++v) values_[v - 1] = preferTrue_[v];
    best_ = values_;
    bestFalsified_ = static_cast<int>(m) - countSatisfied(f_, values_);
    dfs(0);
    return {static_cast<int>(m) - bestFalsified_, Assignment{best_}};
  }

 private:
  struct Occurrence {
    int clause;
    bool positive;
  };

  void set(int v, bool value) {
    values_[v - 1] = value;
    for (const auto& o : occurrences_[v]) {
      --unassigned_[o.clause];
      if (o.positive == value) ++satisfied_[o.clause];
      if (satisfied_[o.clause] == 0 && unassigned_[o.clause] == 0) ++falsified_;
    }
  }
  void unset(int v, bool value) {
    for (const auto& o : occurrences_[v]) {
      if (satisfied_[o.clause] == 0 && unassigned_[o.clause] == 0) --falsified_;
      ++unassigned_[o.clause];
      if (o.positive == value) --satisfied_[o.clause];
    }
  }

  void dfs(int depth) {
    meter_.tick();
    if (falsified_ >= bestFalsified_) return;
    if (depth == static_cast<int>(order_.size())) {
      bestFalsified_ = falsified_;
      best_ = values_;
      return;
    }
    const int v = order_[depth];
    const bool first = preferTrue_[v];
    for (bool value : {first, !first}) {
      set(v, value);
      dfs(depth + 1);
      unset(v, value);
      if (bestFalsified_ == 0) return;
    }
  }

  const CnfFormula& f_;
  BudgetMeter& meter_;
  std::vector<std::vector<Occurrence>> occurrences_;
  std::vector<int> order_;
  std::vector<bool> preferTrue_;
  std::vector<int> unassigned_;
  std::vector<int> satisfied_;
  int falsified_ = 0;
  std::vector<bool> values_;
  std::vector<bool> best_;
  int bestFalsified_ = 0;
};

}  // namespace

MaxSatOptimum exactMaxsat(const CnfFormula& f, const OracleBudget& budget) {
  f.validate();
  require(f.numVars <= 32, ErrorCode::kBudgetExceeded,
          "exact MaxSAT supports at most 32 variables");
  BudgetMeter meter(budget, "exact MaxSAT");
  MaxSatSearch search(f, meter);
  return search.run();
}

ExactAnswer solveExact(const PublicInstance& inst, const OracleBudget& budget) {
  switch (inst.problemClass) {
    case ProblemClass::kColoring: {
      auto r = exactColoring(inst.graph(), budget);
      return {static_cast<double>(r.chromaticNumber), std::move(r.coloring)};
    }
    case ProblemClass::kMaxSat: {
      auto r = exactMaxsat(inst.formula(), budget);
      return {static_cast<double>(r.satisfied), std::move(r.assignment)};
    }
    case ProblemClass::kMis: {
      auto r = exactMis(inst.graph(), budget);
      return {static_cast<double>(r.size), std::move(r.set)};
    }
    case ProblemClass::kMds: {
      auto r = exactMds(inst.graph(), budget);
      return {static_cast<double>(r.size), std::move(r.set)};
    }
    case ProblemClass::kPackingLp: {
      auto r = exactLp(inst.packingLp(), budget);
      return {r.value, std::move(r.fractions)};
    }
    case ProblemClass::kMdkp: {
      auto r = exactMdkp(inst.mdkp(), budget);
      return {r.value, std::move(r.picks)};
    }
    case ProblemClass::kTsp: {
      auto r = exactTsp(inst.tsp(), budget);
      return {r.length, std::move(r.tour)};
    }
  }
  throw Error(ErrorCode::kUnsupportedClass, "no oracle for class");
}

}  // namespace hintforge
