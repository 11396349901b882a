// Copyright 2026 The Authors.
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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "submax/errors.hpp"

namespace submax {

inline constexpr double kLpTolerance = 1e-9;

// ---------------------------------------------------------------------------
// Signed fractional knapsack
// ---------------------------------------------------------------------------

// Knapsack item whose value and size may both be negative. A negative size
// sells knapsack space instead of using it.
struct SignedKnapsackItem {
  double value = 0.0;
  double size = 0.0;
  int id = 0;
};

struct KnapsackSolution {
  std::vector<double> z;  // per-item fraction in [0, 1]
  double objective = 0.0;
};

// Maximizes sum(value_j * z_j) subject to sum(size_j * z_j) <= budget and
// 0 <= z_j <= 1, by a density rule extended to signed coefficients:
//
//   1. Take every item with size < 0 fully (space sellers and items that
//      are free value); take value > 0, size = 0 items; provisionally drop
//      everything else.
//   2. The remaining decisions are single-variable moves with nonnegative
//      gain and positive budget cost: taking a value > 0, size > 0 item,
//      or refusing (handing back) a space seller whose value is <= 0.
//   3. Apply moves greedily by gain/cost density (ties by item id) until
//      the budget runs out. Zero-gain refusals sort last, so items with
//      value 0 and size < 0 end up dropped whenever the budget allows and
//      kept only as far as feasibility requires.
//
// The result is an optimal extreme point: at most one z_j is fractional.
// Infeasible only when even taking every negative-size item fully leaves
// the budget exceeded.
inline KnapsackSolution solve_signed_knapsack(
    const std::vector<SignedKnapsackItem>& items, double budget) {
  if (!std::isfinite(budget)) {
    throw InvalidInputError("knapsack budget must be finite");
  }
  for (const auto& it : items) {
    if (!std::isfinite(it.value) || !std::isfinite(it.size)) {
      throw InvalidInputError("knapsack item coefficients must be finite");
    }
  }

  const int m = static_cast<int>(items.size());
  KnapsackSolution sol;
  sol.z.assign(m, 0.0);

  double used = 0.0;
  for (int j = 0; j < m; ++j) {
    if (items[j].size < 0.0) {
      sol.z[j] = 1.0;
      used += items[j].size;
    } else if (items[j].size == 0.0 && items[j].value > 0.0) {
      sol.z[j] = 1.0;
    }
  }

  double remaining = budget - used;
  if (remaining < -kLpTolerance) {
    throw InfeasibleError("knapsack infeasible: minimum possible size " +
                          std::to_string(used) + " exceeds budget " +
                          std::to_string(budget));
  }
  if (remaining < 0.0) remaining = 0.0;

  struct Move {
    double gain;  // >= 0
    double cost;  // > 0
    int item;
    bool refuse;  // true: z goes 1 -> 1-amount, false: z goes 0 -> amount
  };
  std::vector<Move> moves;
  for (int j = 0; j < m; ++j) {
    const auto& it = items[j];
    if (it.size > 0.0 && it.value > 0.0) {
      moves.push_back({it.value, it.size, j, false});
    } else if (it.size < 0.0 && it.value <= 0.0) {
      moves.push_back({-it.value, -it.size, j, true});
    }
  }
  std::sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
    double lhs = a.gain * b.cost;
    double rhs = b.gain * a.cost;
    if (lhs != rhs) return lhs > rhs;
    return a.item < b.item;
  });

  for (const Move& mv : moves) {
    double amount = remaining / mv.cost;
    if (amount > 1.0) amount = 1.0;
    if (amount > 0.0) {
      sol.z[mv.item] = mv.refuse ? 1.0 - amount : amount;
      remaining -= amount * mv.cost;
    }
    if (amount < 1.0) break;  // budget exhausted; at most this one fractional
  }

  for (int j = 0; j < m; ++j) sol.objective += items[j].value * sol.z[j];
  return sol;
}

// ---------------------------------------------------------------------------
// Small dense linear programs
// ---------------------------------------------------------------------------

// max objective . x
// s.t. ineq_coeffs[i] . x <= ineq_rhs[i]
//      eq_coeffs[i] . x == eq_rhs[i]
//      x >= 0
struct DenseLP {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<std::vector<double>> ineq_coeffs;
  std::vector<double> ineq_rhs;
  std::vector<std::vector<double>> eq_coeffs;
  std::vector<double> eq_rhs;

  int num_rows() const {
    return static_cast<int>(ineq_coeffs.size() + eq_coeffs.size());
  }

  void add_inequality(std::vector<double> coeffs, double rhs) {
    ineq_coeffs.push_back(std::move(coeffs));
    ineq_rhs.push_back(rhs);
  }
  void add_equality(std::vector<double> coeffs, double rhs) {
    eq_coeffs.push_back(std::move(coeffs));
    eq_rhs.push_back(rhs);
  }

  void check_shape() const {
    for (const auto& row : ineq_coeffs) {
      if (static_cast<int>(row.size()) != num_vars) {
        throw InvalidInputError("inequality row width mismatch");
      }
    }
    for (const auto& row : eq_coeffs) {
      if (static_cast<int>(row.size()) != num_vars) {
        throw InvalidInputError("equality row width mismatch");
      }
    }
    if (static_cast<int>(objective.size()) != num_vars) {
      throw InvalidInputError("objective width mismatch");
    }
  }
};

struct BasicSolution {
  std::vector<double> x;
  double objective = 0.0;
  int nonzero_count = 0;
};

namespace detail {

inline int count_nonzeros(const std::vector<double>& x) {
  int c = 0;
  for (double v : x) {
    if (std::fabs(v) > 1e-12) ++c;
  }
  return c;
}

inline void check_lp_feasibility(const DenseLP& lp, const std::vector<double>& x,
                                 double tol) {
  for (std::size_t i = 0; i < lp.ineq_coeffs.size(); ++i) {
    double lhs = 0.0;
    for (int j = 0; j < lp.num_vars; ++j) lhs += lp.ineq_coeffs[i][j] * x[j];
    if (lhs > lp.ineq_rhs[i] + tol) {
      throw InternalError("solver returned point violating inequality row " +
                          std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < lp.eq_coeffs.size(); ++i) {
    double lhs = 0.0;
    for (int j = 0; j < lp.num_vars; ++j) lhs += lp.eq_coeffs[i][j] * x[j];
    if (std::fabs(lhs - lp.eq_rhs[i]) > tol) {
      throw InternalError("solver returned point violating equality row " +
                          std::to_string(i));
    }
  }
  for (double v : x) {
    if (v < -tol) throw InternalError("solver returned negative variable");
  }
}

}  // namespace detail

// Optimal basic feasible solution by two-phase dense simplex with Bland's
// anti-cycling rule. No scaling or presolve: the programs this library
// builds have at most a few hundred variables. The returned point has at
// most num_rows() variables above 1e-12.
inline BasicSolution solve_basic_optimal(const DenseLP& lp) {
  lp.check_shape();
  const int n = lp.num_vars;
  const int m1 = static_cast<int>(lp.ineq_coeffs.size());
  const int m2 = static_cast<int>(lp.eq_coeffs.size());
  const int m = m1 + m2;
  const double tol = kLpTolerance;

  // Columns: [0, n) structural, [n, n + m1) slacks, then artificials.
  int cols = n + m1;
  std::vector<std::vector<double>> row(m);
  std::vector<double> rhs(m);
  std::vector<int> basis(m, -1);
  std::vector<bool> needs_artificial(m, false);

  for (int i = 0; i < m; ++i) {
    row[i].assign(cols, 0.0);
    if (i < m1) {
      for (int j = 0; j < n; ++j) row[i][j] = lp.ineq_coeffs[i][j];
      row[i][n + i] = 1.0;
      rhs[i] = lp.ineq_rhs[i];
    } else {
      for (int j = 0; j < n; ++j) row[i][j] = lp.eq_coeffs[i - m1][j];
      rhs[i] = lp.eq_rhs[i - m1];
    }
    if (rhs[i] < 0.0) {
      for (double& v : row[i]) v = -v;
      rhs[i] = -rhs[i];
      needs_artificial[i] = true;  // slack coefficient is now -1
    }
    if (i < m1 && !needs_artificial[i]) {
      basis[i] = n + i;
    } else {
      needs_artificial[i] = true;
    }
  }

  int first_artificial = cols;
  for (int i = 0; i < m; ++i) {
    if (needs_artificial[i]) {
      for (int r = 0; r < m; ++r) row[r].push_back(r == i ? 1.0 : 0.0);
      basis[i] = cols;
      ++cols;
    }
  }

  std::vector<double> obj_row(cols, 0.0);
  double neg_obj_value = 0.0;  // holds -(current objective)

  auto load_objective = [&](const std::vector<double>& costs) {
    obj_row.assign(costs.begin(), costs.end());
    obj_row.resize(cols, 0.0);
    neg_obj_value = 0.0;
    for (int i = 0; i < m; ++i) {
      double cb = obj_row[basis[i]];
      // basis columns must read exactly zero in the cost row
      if (cb != 0.0) {
        for (int j = 0; j < cols; ++j) obj_row[j] -= cb * row[i][j];
        neg_obj_value -= cb * rhs[i];
      }
    }
  };

  auto pivot = [&](int r, int c) {
    double p = row[r][c];
    for (int j = 0; j < cols; ++j) row[r][j] /= p;
    rhs[r] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      double factor = row[i][c];
      if (factor == 0.0) continue;
      for (int j = 0; j < cols; ++j) row[i][j] -= factor * row[r][j];
      row[i][c] = 0.0;
      rhs[i] -= factor * rhs[r];
      if (rhs[i] < 0.0 && rhs[i] > -tol) rhs[i] = 0.0;
    }
    double factor = obj_row[c];
    if (factor != 0.0) {
      for (int j = 0; j < cols; ++j) obj_row[j] -= factor * row[r][j];
      obj_row[c] = 0.0;
      neg_obj_value -= factor * rhs[r];
    }
    basis[r] = c;
  };

  // Maximizes; columns >= ban_from never enter the basis (phase 2 bans the
  // artificials). Returns false on unboundedness.
  auto run_simplex = [&](int ban_from) -> bool {
    while (true) {
      int entering = -1;
      for (int j = 0; j < cols && entering < 0; ++j) {
        if (j >= ban_from) continue;
        if (obj_row[j] > tol) entering = j;  // Bland: smallest index
      }
      if (entering < 0) return true;  // optimal
      int leaving = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < m; ++i) {
        if (row[i][entering] <= tol) continue;
        double ratio = rhs[i] / row[i][entering];
        // Bland again: exact ties resolved by smallest basis variable.
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return false;  // unbounded
      pivot(leaving, entering);
    }
  };

  if (first_artificial < cols) {
    std::vector<double> phase1(cols, 0.0);
    for (int j = first_artificial; j < cols; ++j) phase1[j] = -1.0;
    load_objective(phase1);
    if (!run_simplex(cols)) {
      throw InternalError("phase-1 simplex reported unbounded");
    }
    double value = -neg_obj_value;  // = -(sum of artificials)
    if (value < -1e-7) {
      throw InfeasibleError("linear program is infeasible (phase-1 residual " +
                            std::to_string(-value) + ")");
    }
  }

  std::vector<double> phase2(lp.objective);
  load_objective(phase2);
  if (!run_simplex(first_artificial)) {
    throw UnboundedError("linear program is unbounded");
  }

  BasicSolution sol;
  sol.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) sol.x[basis[i]] = rhs[i] < 0.0 ? 0.0 : rhs[i];
  }
  for (int j = 0; j < n; ++j) sol.objective += lp.objective[j] * sol.x[j];
  sol.nonzero_count = detail::count_nonzeros(sol.x);
  if (sol.nonzero_count > m) {
    throw InternalError("basic solution has more nonzeros than rows");
  }
  detail::check_lp_feasibility(lp, sol.x, 1e-7);
  return sol;
}

// ---------------------------------------------------------------------------
// Brute-force vertex enumeration (testing oracle)
// ---------------------------------------------------------------------------

inline constexpr int kEnumerateLimit = 24;  // num_vars + num_rows

// Enumerates every basis of the slack-extended system, keeps the feasible
// ones, and returns the best by objective (ties keep the lexicographically
// first basis). Exact reference for the solvers above on tiny programs;
// assumes the program is bounded.
inline BasicSolution enumerate_vertices(const DenseLP& lp) {
  lp.check_shape();
  const int n = lp.num_vars;
  const int m1 = static_cast<int>(lp.ineq_coeffs.size());
  const int m2 = static_cast<int>(lp.eq_coeffs.size());
  const int m = m1 + m2;
  if (n + m > kEnumerateLimit) {
    throw CapacityError("enumerate_vertices limited to vars + rows <= " +
                        std::to_string(kEnumerateLimit));
  }
  const int cols = n + m1;
  const double tol = kLpTolerance;

  // Augmented system [A I | b] over structural + slack columns, reduced to
  // row echelon form. Dependent rows drop out; an inconsistent dependent
  // row proves infeasibility outright.
  std::vector<std::vector<double>> aug(m, std::vector<double>(cols + 1, 0.0));
  for (int i = 0; i < m1; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = lp.ineq_coeffs[i][j];
    aug[i][n + i] = 1.0;
    aug[i][cols] = lp.ineq_rhs[i];
  }
  for (int i = 0; i < m2; ++i) {
    for (int j = 0; j < n; ++j) aug[m1 + i][j] = lp.eq_coeffs[i][j];
    aug[m1 + i][cols] = lp.eq_rhs[i];
  }

  int rank = 0;
  for (int col = 0; col < cols && rank < m; ++col) {
    int best = -1;
    for (int r = rank; r < m; ++r) {
      if (best < 0 || std::fabs(aug[r][col]) > std::fabs(aug[best][col]))
        best = r;
    }
    if (best < 0 || std::fabs(aug[best][col]) <= tol) continue;
    std::swap(aug[rank], aug[best]);
    double p = aug[rank][col];
    for (int j = 0; j <= cols; ++j) aug[rank][j] /= p;
    for (int r = 0; r < m; ++r) {
      if (r == rank) continue;
      double f = aug[r][col];
      if (f == 0.0) continue;
      for (int j = 0; j <= cols; ++j) aug[r][j] -= f * aug[rank][j];
    }
    ++rank;
  }
  for (int r = rank; r < m; ++r) {
    if (std::fabs(aug[r][cols]) > tol) {
      throw InfeasibleError("linear program is infeasible (inconsistent rows)");
    }
  }

  std::vector<int> pick(rank);
  for (int i = 0; i < rank; ++i) pick[i] = i;

  bool found = false;
  BasicSolution best;
  best.objective = -std::numeric_limits<double>::infinity();

  std::vector<std::vector<double>> mat(rank, std::vector<double>(rank + 1));
  while (true) {
    // Solve the square system over the picked columns.
    for (int i = 0; i < rank; ++i) {
      for (int j = 0; j < rank; ++j) mat[i][j] = aug[i][pick[j]];
      mat[i][rank] = aug[i][cols];
    }
    bool singular = false;
    for (int c = 0; c < rank && !singular; ++c) {
      int piv = c;
      for (int r = c + 1; r < rank; ++r) {
        if (std::fabs(mat[r][c]) > std::fabs(mat[piv][c])) piv = r;
      }
      if (std::fabs(mat[piv][c]) <= tol) {
        singular = true;
        break;
      }
      std::swap(mat[c], mat[piv]);
      for (int r = c + 1; r < rank; ++r) {
        double f = mat[r][c] / mat[c][c];
        if (f == 0.0) continue;
        for (int j = c; j <= rank; ++j) mat[r][j] -= f * mat[c][j];
      }
    }
    if (!singular) {
      std::vector<double> xb(rank);
      bool ok = true;
      for (int i = rank - 1; i >= 0; --i) {
        double v = mat[i][rank];
        for (int j = i + 1; j < rank; ++j) v -= mat[i][j] * xb[j];
        xb[i] = v / mat[i][i];
        if (xb[i] < -tol) ok = false;
      }
      if (ok) {
        double obj = 0.0;
        std::vector<double> x(n, 0.0);
        for (int i = 0; i < rank; ++i) {
          if (pick[i] < n) {
            x[pick[i]] = xb[i] < 0.0 ? 0.0 : xb[i];
            obj += lp.objective[pick[i]] * x[pick[i]];
          }
        }
        if (!found || obj > best.objective) {
          found = true;
          best.x = std::move(x);
          best.objective = obj;
        }
      }
    }
    // Next lexicographic combination of `rank` columns.
    int i = rank - 1;
    while (i >= 0 && pick[i] == cols - rank + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < rank; ++j) pick[j] = pick[j - 1] + 1;
  }

  if (!found) {
    if (rank == 0) {
      // No effective constraints: the origin is the only vertex.
      best.x.assign(n, 0.0);
      best.objective = 0.0;
    } else {
      throw InfeasibleError("linear program is infeasible (no feasible basis)");
    }
  }
  best.nonzero_count = detail::count_nonzeros(best.x);
  return best;
}

// The DenseLP a signed knapsack instance is equivalent to; used to check
// the specialized solver against the generic ones.
inline DenseLP knapsack_to_lp(const std::vector<SignedKnapsackItem>& items,
                              double budget) {
  DenseLP lp;
  lp.num_vars = static_cast<int>(items.size());
  lp.objective.resize(items.size());
  std::vector<double> size_row(items.size());
  for (std::size_t j = 0; j < items.size(); ++j) {
    lp.objective[j] = items[j].value;
    size_row[j] = items[j].size;
  }
  lp.add_inequality(std::move(size_row), budget);
  for (std::size_t j = 0; j < items.size(); ++j) {
    std::vector<double> bound(items.size(), 0.0);
    bound[j] = 1.0;
    lp.add_inequality(std::move(bound), 1.0);
  }
  return lp;
}

}  // namespace submax
