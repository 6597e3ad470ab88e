#include "targetsim/simplex.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

namespace targetsim {

namespace {

// Dense two-phase tableau. Columns: structural vars, then one slack or
// surplus per inequality row, then one artificial per row that needs a
// starting basis, then the rhs. Rows: constraints, then the phase-2
// objective, then the phase-1 objective while it is active.
class Tableau {
public:
    Tableau(const LpProblem& p, double eps) : eps_(eps), num_rows_(static_cast<int>(p.constraints.size())) {
        num_structural_ = p.num_vars;
        // Count slack and artificial columns first so the layout is fixed.
        std::vector<int> slack_col(num_rows_, -1), art_col(num_rows_, -1);
        int extra = 0;
        std::vector<double> rhs(num_rows_);
        std::vector<int> sign(num_rows_, 1);
        for (int r = 0; r < num_rows_; ++r) {
            const auto& c = p.constraints[r];
            if (static_cast<int>(c.coeffs.size()) != num_structural_)
                throw std::invalid_argument("lp constraint width mismatch");
            rhs[r] = c.rhs;
            auto rel = c.relation;
            if (rhs[r] < 0) { // normalize to nonnegative rhs
                sign[r] = -1;
                rhs[r] = -rhs[r];
                if (rel == LpConstraint::Relation::le) rel = LpConstraint::Relation::ge;
                else if (rel == LpConstraint::Relation::ge) rel = LpConstraint::Relation::le;
            }
            if (rhs[r] > rhs_scale_) rhs_scale_ = rhs[r];
            normalized_relation_.push_back(rel);
            if (rel != LpConstraint::Relation::eq) slack_col[r] = extra++;
        }
        int num_slack = extra;
        for (int r = 0; r < num_rows_; ++r) {
            // le rows start on their slack; ge and eq rows need an artificial.
            if (normalized_relation_[r] != LpConstraint::Relation::le) art_col[r] = extra++;
        }
        num_cols_ = num_structural_ + extra + 1;
        first_artificial_ = num_structural_ + num_slack;
        rows_.assign(static_cast<std::size_t>(num_rows_ + 2), std::vector<double>(num_cols_, 0.0));
        basis_.assign(num_rows_, -1);

        for (int r = 0; r < num_rows_; ++r) {
            const auto& c = p.constraints[r];
            auto& row = rows_[r];
            for (int j = 0; j < num_structural_; ++j) row[j] = sign[r] * c.coeffs[j];
            row[num_cols_ - 1] = rhs[r];
            if (slack_col[r] >= 0)
                row[num_structural_ + slack_col[r]] = normalized_relation_[r] == LpConstraint::Relation::le ? 1.0 : -1.0;
            if (art_col[r] >= 0) {
                row[num_structural_ + art_col[r]] = 1.0;
                basis_[r] = num_structural_ + art_col[r];
                artificial_row_.push_back(r);
            } else {
                basis_[r] = num_structural_ + slack_col[r];
            }
        }
        // Phase-2 objective row holds reduced costs of the real objective.
        auto& obj = rows_[num_rows_];
        for (int j = 0; j < num_structural_; ++j) obj[j] = p.objective.empty() ? 0.0 : p.objective[j];
        // Phase-1 objective: sum of artificials, expressed over the basis.
        auto& phase1 = rows_[num_rows_ + 1];
        for (int r : artificial_row_)
            for (int j = 0; j < num_cols_; ++j) phase1[j] -= rows_[r][j];
    }

    bool has_artificials() const { return !artificial_row_.empty(); }
    int num_rows() const { return num_rows_; }

    // Bland's rule: lowest-index eligible entering column, lowest basis
    // index on ratio ties. Returns false when no entering column remains.
    bool pivot_step(int objective_row, bool allow_artificial_entering, bool* unbounded) {
        const auto& obj = rows_[objective_row];
        int entering = -1;
        int limit = allow_artificial_entering ? num_cols_ - 1 : first_artificial_;
        for (int j = 0; j < limit; ++j) {
            if (obj[j] < -eps_) { entering = j; break; }
        }
        if (entering < 0) return false;
        int leaving = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int r = 0; r < num_rows_; ++r) {
            double a = rows_[r][entering];
            if (a > eps_) {
                double ratio = rows_[r][num_cols_ - 1] / a;
                if (ratio < best_ratio - eps_ ||
                    (ratio < best_ratio + eps_ && (leaving < 0 || basis_[r] < basis_[leaving]))) {
                    best_ratio = ratio;
                    leaving = r;
                }
            }
        }
        if (leaving < 0) {
            *unbounded = true;
            return false;
        }
        pivot(leaving, entering);
        return true;
    }

    void pivot(int row, int col) {
        auto& pr = rows_[row];
        double inv = 1.0 / pr[col];
        for (double& v : pr) v *= inv;
        pr[col] = 1.0;
        for (int r = 0; r < num_rows_ + 2; ++r) {
            if (r == row) continue;
            double f = rows_[r][col];
            if (f == 0.0) continue;
            auto& other = rows_[r];
            for (int j = 0; j < num_cols_; ++j) other[j] -= f * pr[j];
            other[col] = 0.0;
        }
        basis_[row] = col;
    }

    double phase1_value() const { return -rows_[num_rows_ + 1][num_cols_ - 1]; }
    double infeasibility_tolerance() const { return 1e-7 * (1.0 + rhs_scale_); }
    double phase2_value() const { return -rows_[num_rows_][num_cols_ - 1]; }

    // After phase 1, pivot zero-level artificials out where a structural
    // column is available; rows with no such column are redundant.
    void retire_artificials() {
        for (int r = 0; r < num_rows_; ++r) {
            if (basis_[r] < first_artificial_) continue;
            for (int j = 0; j < first_artificial_; ++j) {
                if (std::fabs(rows_[r][j]) > eps_) {
                    pivot(r, j);
                    break;
                }
            }
        }
    }

    std::vector<int> rows_with_basic_artificials() const {
        std::vector<int> out;
        for (int r = 0; r < num_rows_; ++r)
            if (basis_[r] >= first_artificial_ && rows_[r][num_cols_ - 1] > eps_ * (1.0 + rhs_scale_))
                out.push_back(r);
        return out;
    }

    std::vector<double> primal_values() const {
        std::vector<double> x(static_cast<std::size_t>(num_structural_), 0.0);
        for (int r = 0; r < num_rows_; ++r)
            if (basis_[r] < num_structural_) x[static_cast<std::size_t>(basis_[r])] = rows_[r][num_cols_ - 1];
        return x;
    }

    // Replace the phase-2 objective row with reduced costs w.r.t. the
    // current basis (needed once artificial pivoting moved the basis).
    void price_out_objective() {
        auto& obj = rows_[num_rows_];
        for (int r = 0; r < num_rows_; ++r) {
            double f = obj[basis_[r]];
            if (f == 0.0) continue;
            const auto& row = rows_[r];
            for (int j = 0; j < num_cols_; ++j) obj[j] -= f * row[j];
            obj[basis_[r]] = 0.0;
        }
    }

private:
    double eps_;
    int num_rows_;
    int num_structural_ = 0;
    int num_cols_ = 0;
    int first_artificial_ = 0;
    std::vector<std::vector<double>> rows_;
    std::vector<int> basis_;
    std::vector<int> artificial_row_;
    double rhs_scale_ = 0.0;
    std::vector<LpConstraint::Relation> normalized_relation_;
};

} // namespace

LpSolution solve_lp(const LpProblem& problem, double eps, long max_iterations) {
    if (!problem.objective.empty() && static_cast<int>(problem.objective.size()) != problem.num_vars)
        throw std::invalid_argument("lp objective width mismatch");
    Tableau t(problem, eps);
    LpSolution out;
    long iterations = 0;
    bool unbounded = false;

    if (t.has_artificials()) {
        while (t.pivot_step(t.num_rows() + 1, true, &unbounded)) {
            if (++iterations > max_iterations) return out; // iteration_limit
        }
        if (t.phase1_value() > t.infeasibility_tolerance()) {
            out.status = LpSolution::Status::infeasible;
            out.unsatisfied_rows = t.rows_with_basic_artificials();
            return out;
        }
        t.retire_artificials();
        t.price_out_objective();
    }

    unbounded = false;
    while (t.pivot_step(t.num_rows(), false, &unbounded)) {
        if (++iterations > max_iterations) return out; // iteration_limit
    }
    if (unbounded) {
        out.status = LpSolution::Status::unbounded;
        return out;
    }
    out.status = LpSolution::Status::optimal;
    out.values = t.primal_values();
    out.objective = 0.0;
    for (int j = 0; j < problem.num_vars; ++j)
        out.objective += (problem.objective.empty() ? 0.0 : problem.objective[j]) * out.values[j];
    return out;
}

} // namespace targetsim
