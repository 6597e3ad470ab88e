#pragma once

#include <vector>

namespace targetsim {

/// Small dense linear programs: minimize c.x subject to row constraints
/// and x >= 0. Sized for reconstruction workloads (hundreds of variables),
/// not for industrial LPs.
struct LpConstraint {
    enum class Relation { le, eq, ge };
    std::vector<double> coeffs;
    Relation relation = Relation::eq;
    double rhs = 0.0;
};

struct LpProblem {
    int num_vars = 0;
    std::vector<double> objective;
    std::vector<LpConstraint> constraints;
};

struct LpSolution {
    enum class Status { optimal, infeasible, unbounded, iteration_limit };
    Status status = Status::iteration_limit;
    std::vector<double> values;
    double objective = 0.0;
    /// Rows phase one could not satisfy, by constraint index: a witness
    /// subset for infeasibility reports.
    std::vector<int> unsatisfied_rows;
};

/// Two-phase tableau simplex with Bland's rule. Pivoting order is fixed,
/// so equal inputs give bitwise-equal outputs.
LpSolution solve_lp(const LpProblem& problem, double eps = 1e-9, long max_iterations = 500000);

} // namespace targetsim
