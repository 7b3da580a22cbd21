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

#include "hintforge/sat.hpp"

#include <cstdlib>
#include <string>

#include "hintforge/error.hpp"

namespace hintforge {

bool isHornClause(std::span<const int> clause) {
  int positives = 0;
  for (int lit : clause) positives += lit > 0;
  return positives <= 1;
}

bool isHorn(const CnfFormula& f) {
  for (const auto& c : f.clauses)
    if (!isHornClause(c)) return false;
  return true;
}

bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment) {
  if (assignment.size() != static_cast<std::size_t>(f.numVars)) return false;
  for (const auto& c : f.clauses) {
    bool sat = false;
    for (int lit : c) {
      if (assignment[std::abs(lit) - 1] == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

SatResult hornSat(const CnfFormula& f) {
  const auto m = f.clauses.size();
  std::vector<int> need(m, 0);
  std::vector<int> head(m, 0);
  std::vector<std::vector<int>> negOcc(f.numVars);
  std::vector<int> queue;
  queue.reserve(m);
  for (std::size_t c = 0; c < m; ++c) {
    for (int lit : f.clauses[c]) {
      if (lit > 0) {
        require(head[c] == 0, ErrorCode::kInvalidArgument,
                "hornSat: clause " + std::to_string(c) + " is not Horn");
        head[c] = lit;
      } else {
        ++need[c];
        negOcc[-lit - 1].push_back(static_cast<int>(c));
      }
    }
    if (need[c] == 0) queue.push_back(static_cast<int>(c));
  }

  SatResult out;
  out.assignment.assign(f.numVars, false);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int c = queue[qi];
    if (head[c] == 0) {
      out.assignment.clear();
      return out;
    }
    int v = head[c] - 1;
    if (out.assignment[v]) continue;
    out.assignment[v] = true;
    ++out.propagations;
    for (int d : negOcc[v])
      if (--need[d] == 0) queue.push_back(d);
  }
  out.satisfiable = true;
  return out;
}

namespace {

class Dpll {
 public:
  explicit Dpll(const CnfFormula& f)
      : f_(f),
        value_(f.numVars, -1),
        pos_(f.numVars),
        neg_(f.numVars),
        numTrue_(f.clauses.size(), 0),
        numFalse_(f.clauses.size(), 0) {
    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
      for (int lit : f.clauses[c]) {
        (lit > 0 ? pos_ : neg_)[std::abs(lit) - 1].push_back(static_cast<int>(c));
      }
    }
  }

  SatResult run() {
    SatResult out;
    bool ok = true;
    for (std::size_t c = 0; c < f_.clauses.size(); ++c) {
      if (f_.clauses[c].empty()) ok = false;
      if (f_.clauses[c].size() == 1) pending_.push_back(static_cast<int>(c));
    }
    if (ok) ok = search();
    out.decisions = decisions_;
    out.propagations = propagations_;
    if (ok) {
      out.satisfiable = true;
      out.assignment.resize(f_.numVars);
      for (int v = 0; v < f_.numVars; ++v) out.assignment[v] = value_[v] == 1;
    }
    return out;
  }

 private:
  bool search() {
    std::size_t mark = trail_.size();
    if (!propagate() || !eliminatePure()) {
      undo(mark);
      return false;
    }
    if (satisfied_ == f_.clauses.size()) return true;
    int v = 0;
    while (v < f_.numVars && value_[v] != -1) ++v;
    for (int val : {1, 0}) {
      ++decisions_;
      std::size_t inner = trail_.size();
      if (assign(v, val) && search()) return true;
      undo(inner);
    }
    undo(mark);
    return false;
  }

  // Returns false on conflict.
  bool assign(int v, int val) {
    value_[v] = val;
    trail_.push_back(v);
    bool ok = true;
    for (int c : (val == 1 ? pos_ : neg_)[v])
      if (numTrue_[c]++ == 0) ++satisfied_;
    for (int c : (val == 1 ? neg_ : pos_)[v]) {
      int fals = ++numFalse_[c];
      if (numTrue_[c] > 0) continue;
      int size = static_cast<int>(f_.clauses[c].size());
      if (fals == size) ok = false;
      else if (fals == size - 1) pending_.push_back(c);
    }
    return ok;
  }

  void undo(std::size_t mark) {
    pending_.clear();
    while (trail_.size() > mark) {
      int v = trail_.back();
      trail_.pop_back();
      int val = value_[v];
      for (int c : (val == 1 ? pos_ : neg_)[v])
        if (--numTrue_[c] == 0) --satisfied_;
      for (int c : (val == 1 ? neg_ : pos_)[v]) --numFalse_[c];
      value_[v] = -1;
    }
  }

  bool propagate() {
    while (!pending_.empty()) {
      int c = pending_.back();
      pending_.pop_back();
      if (numTrue_[c] > 0) continue;
      int unit = 0;
      for (int lit : f_.clauses[c]) {
        if (value_[std::abs(lit) - 1] == -1) {
          unit = lit;
          break;
        }
      }
      if (unit == 0) {
        pending_.clear();
        return false;
      }
      ++propagations_;
      if (!assign(std::abs(unit) - 1, unit > 0 ? 1 : 0)) {
        pending_.clear();
        return false;
      }
    }
    return true;
  }

  // Assigns pure literals, and variables absent from every open clause
  // (to false), until nothing changes. Never creates a conflict.
  bool eliminatePure() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < f_.numVars; ++v) {
        if (value_[v] != -1) continue;
        bool p = openIn(pos_[v]);
        bool n = openIn(neg_[v]);
        if (p && n) continue;
        assign(v, p ? 1 : 0);
        changed = true;
      }
    }
    return true;
  }

  bool openIn(const std::vector<int>& occ) const {
    for (int c : occ)
      if (numTrue_[c] == 0) return true;
    return false;
  }

  const CnfFormula& f_;
  std::vector<int> value_;
  std::vector<std::vector<int>> pos_;
  std::vector<std::vector<int>> neg_;
  std::vector<int> numTrue_;
  std::vector<int> numFalse_;
  std::vector<int> trail_;
  std::vector<int> pending_;
  std::size_t satisfied_ = 0;
  std::uint64_t decisions_ = 0;
  std::uint64_t propagations_ = 0;
};

}  // namespace

SatResult dpll(const CnfFormula& f) { return Dpll(f).run(); }

Restriction restrictFormula(const CnfFormula& f, std::span<const int> vars,
                            const std::vector<bool>& values) {
  require(vars.size() == values.size(), ErrorCode::kShapeMismatch,
          "restrictFormula: variable and value counts differ");
  std::vector<signed char> val(f.numVars, -1);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    require(vars[i] >= 0 && vars[i] < f.numVars, ErrorCode::kInvalidArgument,
            "restrictFormula: variable out of range");
    val[vars[i]] = values[i] ? 1 : 0;
  }
  Restriction out;
  out.residual.numVars = f.numVars;
  out.residual.clauses.reserve(f.clauses.size());
  std::vector<int> kept;
  for (const auto& c : f.clauses) {
    kept.clear();
    bool sat = false;
    for (int lit : c) {
      int x = val[std::abs(lit) - 1];
      if (x == -1) {
        kept.push_back(lit);
      } else if ((x == 1) == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (sat) continue;
    if (kept.empty()) out.conflict = true;
    out.residual.clauses.push_back(kept);
  }
  return out;
}

}  // namespace hintforge
