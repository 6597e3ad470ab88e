#include "targetsim/reconstruction.hpp"

#include "targetsim/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <utility>

namespace targetsim {

namespace {

void require_report_shape(const AggregateReport& report) {
    if (report.n < 2 || report.balances.size() != static_cast<std::size_t>(report.n))
        throw data_error("report-shape", "report needs n >= 2 and one balance per participant");
}

Money report_sum(const AggregateReport& report) {
    Money s;
    for (Money b : report.balances) s += b;
    return s;
}

} // namespace

RationalMatrix RationalMatrix::zero(int n) {
    if (n < 0) throw data_error("matrix-bad-size", "participant count must be >= 0");
    RationalMatrix m;
    m.n_ = n;
    m.cells_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), RationalMoney{});
    return m;
}

const RationalMoney& RationalMatrix::entry(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw data_error("matrix-index", "matrix index out of range");
    return cells_[static_cast<std::size_t>(i) * n_ + j];
}

void RationalMatrix::set_pair(int i, int j, const RationalMoney& v) {
    if (i == j) throw data_error("matrix-diagonal", "bilateral pair needs two distinct participants");
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw data_error("matrix-index", "matrix index out of range");
    cells_[static_cast<std::size_t>(i) * n_ + j] = v;
    cells_[static_cast<std::size_t>(j) * n_ + i] = -v;
}

RationalMoney RationalMatrix::row_sum(int i) const {
    RationalMoney s;
    for (int j = 0; j < n_; ++j) s = s + entry(i, j);
    return s;
}

bool feasible(const AggregateReport& report) {
    require_report_shape(report);
    return report_sum(report).is_zero();
}

std::int64_t solution_space_dim(int n) {
    if (n < 2) throw data_error("dof-bad-n", "solution space needs at least two participants");
    std::int64_t nn = n;
    return (nn - 1) * (nn - 2) / 2;
}

BalanceMatrix parametrize_n3(const AggregateReport& report, Money t12) {
    require_report_shape(report);
    if (report.n != 3) throw data_error("n3-only", "closed-form parametrization is the n=3 case");
    if (!feasible(report)) throw infeasible_error("report-nonzero-sum", "aggregates do not sum to zero");
    Money t2 = report.balances[1];
    Money t3 = report.balances[2];
    BalanceMatrix m = BalanceMatrix::zero(3);
    m.set_pair(0, 1, t12);
    m.set_pair(0, 2, -t12 - t2 - t3);
    m.set_pair(1, 2, t12 + t2);
    return m;
}

RationalMatrix min_norm_reconstruct(const AggregateReport& report) {
    require_report_shape(report);
    if (!feasible(report)) throw infeasible_error("report-nonzero-sum", "aggregates do not sum to zero");
    int n = report.n;
    RationalMatrix m = RationalMatrix::zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Money diff = report.balances[i] - report.balances[j];
            m.set_pair(i, j, RationalMoney::ratio(diff, n));
        }
    return m;
}

namespace {

// Moves whole cents between rows until every row sum matches its target.
// Only pairs accepted by `adjustable` are touched; with few pinned pairs a
// one- or two-hop route always exists.
template <typename AdjustablePair>
void repair_row_sums(BalanceMatrix& m, const std::vector<Money>& targets, AdjustablePair adjustable) {
    int n = m.n();
    std::vector<Money> residual(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) residual[i] = targets[i] - m.row_sum(i);

    auto bump = [&](int i, int j, Money delta) {
        m.set_pair(i, j, m.entry(i, j) + delta);
        residual[i] -= delta;
        residual[j] += delta;
    };

    for (;;) {
        int hi = -1, lo = -1;
        for (int i = 0; i < n; ++i) {
            if (residual[i].is_positive() && (hi < 0 || residual[i] > residual[hi])) hi = i;
            if (residual[i].is_negative() && (lo < 0 || residual[i] < residual[lo])) lo = i;
        }
        if (hi < 0 && lo < 0) return;
        if (hi < 0 || lo < 0)
            throw data_error("repair-unbalanced", "row residuals do not balance; target sums are inconsistent");
        Money delta = std::min(residual[hi], -residual[lo]);
        if (adjustable(hi, lo)) {
            bump(hi, lo, delta);
            continue;
        }
        bool routed = false;
        for (int k = 0; k < n && !routed; ++k) {
            if (k == hi || k == lo) continue;
            if (adjustable(hi, k) && adjustable(k, lo)) {
                bump(hi, k, delta);
                bump(k, lo, delta);
                routed = true;
            }
        }
        if (!routed)
            throw data_error("repair-blocked", "cannot restore row sums without touching pinned entries");
    }
}

} // namespace

BalanceMatrix round_with_row_repair(const RationalMatrix& solution, const AggregateReport& target) {
    if (solution.n() != target.n) throw data_error("matrix-size-mismatch", "solution and report sizes differ");
    int n = solution.n();
    BalanceMatrix m = BalanceMatrix::zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m.set_pair(i, j, solution.entry(i, j).rounded_cents());
    repair_row_sums(m, target.balances, [](int, int) { return true; });
    return m;
}

BalanceMatrix cycle_matrix(int n, int a, int b, int c, Money x) {
    if (a == b || b == c || a == c) throw data_error("cycle-distinct", "cycle needs three distinct participants");
    BalanceMatrix m = BalanceMatrix::zero(n);
    m.set_pair(a, b, x);
    m.set_pair(b, c, x);
    m.set_pair(c, a, x);
    return m;
}

std::vector<BalanceMatrix> null_space_basis(int n) {
    if (n < 2) throw data_error("dof-bad-n", "basis needs at least two participants");
    std::vector<BalanceMatrix> basis;
    basis.reserve(static_cast<std::size_t>(solution_space_dim(n)));
    for (int j = 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) basis.push_back(cycle_matrix(n, 0, j, k, Money::cents(1)));
    return basis;
}

SolutionSpace solution_space(const AggregateReport& report) {
    require_report_shape(report);
    if (!feasible(report)) throw infeasible_error("report-nonzero-sum", "aggregates do not sum to zero");
    int n = report.n;
    SolutionSpace s;
    s.n = n;
    s.null_dimension = solution_space_dim(n);
    s.basis = null_space_basis(n);
    // Star-shaped particular solution: every balance booked against row 0.
    s.particular = BalanceMatrix::zero(n);
    for (int j = 1; j < n; ++j) s.particular.set_pair(0, j, -report.balances[j]);
    return s;
}

// --- constraint normalization ------------------------------------------

void ReconstructionConstraints::fix(int i, int j, Money v) { fixed_.push_back({i, j, v}); }
void ReconstructionConstraints::set_lower(int i, int j, Money v) { lower_.push_back({i, j, v}); }
void ReconstructionConstraints::set_upper(int i, int j, Money v) { upper_.push_back({i, j, v}); }

namespace {

std::string pair_name(int i, int j) {
    // 1-based in human-facing text, matching constraint files.
    return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

} // namespace

std::map<ReconstructionConstraints::PairKey, ReconstructionConstraints::PairConstraint>
ReconstructionConstraints::normalized() const {
    std::map<PairKey, PairConstraint> out;
    auto upper_key = [](int i, int j) { return PairKey{std::min(i, j), std::max(i, j)}; };
    for (const auto& e : fixed_) {
        Money v = e.i < e.j ? e.value : -e.value;
        auto& slot = out[upper_key(e.i, e.j)].fixed;
        if (!slot) slot = v; // conflicts surface in validate()
    }
    for (const auto& e : lower_) {
        auto key = upper_key(e.i, e.j);
        auto& pc = out[key];
        if (e.i < e.j) {
            if (!pc.lower || *pc.lower < e.value) pc.lower = e.value; // tightest lower
        } else {
            Money u = -e.value; // lower on (j,i) is an upper on (i,j)
            if (!pc.upper || *pc.upper > u) pc.upper = u;
        }
    }
    for (const auto& e : upper_) {
        auto key = upper_key(e.i, e.j);
        auto& pc = out[key];
        if (e.i < e.j) {
            if (!pc.upper || *pc.upper > e.value) pc.upper = e.value;
        } else {
            Money l = -e.value;
            if (!pc.lower || *pc.lower < l) pc.lower = l;
        }
    }
    return out;
}

std::vector<std::string> ReconstructionConstraints::validate(int n) const {
    std::vector<std::string> conflicts;
    auto check_indices = [&](const RawEntry& e, const char* what) {
        if (e.i < 0 || e.i >= n || e.j < 0 || e.j >= n)
            conflicts.push_back(std::string(what) + " " + pair_name(e.i, e.j) + " is out of range");
        else if (e.i == e.j)
            conflicts.push_back(std::string(what) + " " + pair_name(e.i, e.j) + " sits on the zero diagonal");
    };
    for (const auto& e : fixed_) check_indices(e, "pin of");
    for (const auto& e : lower_) check_indices(e, "lower bound on");
    for (const auto& e : upper_) check_indices(e, "upper bound on");
    if (!conflicts.empty()) return conflicts;

    // Pins must agree with their mirror image.
    std::map<PairKey, Money> seen;
    for (const auto& e : fixed_) {
        PairKey key{std::min(e.i, e.j), std::max(e.i, e.j)};
        Money v = e.i < e.j ? e.value : -e.value;
        auto [it, fresh] = seen.emplace(key, v);
        if (!fresh && it->second != v)
            conflicts.push_back("conflicting pins for " + pair_name(key.first, key.second) + ": " +
                                it->second.to_string() + " vs " + v.to_string());
    }
    for (const auto& [key, pc] : normalized()) {
        if (pc.lower && pc.upper && *pc.lower > *pc.upper)
            conflicts.push_back("empty bound interval for " + pair_name(key.first, key.second) + ": [" +
                                pc.lower->to_string() + "," + pc.upper->to_string() + "]");
        if (pc.fixed && pc.lower && *pc.fixed < *pc.lower)
            conflicts.push_back("pin below lower bound for " + pair_name(key.first, key.second));
        if (pc.fixed && pc.upper && *pc.fixed > *pc.upper)
            conflicts.push_back("pin above upper bound for " + pair_name(key.first, key.second));
    }
    return conflicts;
}

std::string Infeasibility::describe() const {
    std::string out = reason;
    for (const auto& c : conflicts) out += "; " + c;
    return out;
}

// --- constrained reconstruction -----------------------------------------

namespace {

struct FreePairSystem {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;          // upper-triangle free pairs
    std::vector<Money> targets;                      // row sums net of pins
    std::vector<std::optional<Money>> lower, upper;  // per free pair
    BalanceMatrix pinned;                            // pins already placed
    double scale = 1.0;
};

FreePairSystem build_system(const AggregateReport& report,
                            const std::map<ReconstructionConstraints::PairKey,
                                           ReconstructionConstraints::PairConstraint>& pairs) {
    FreePairSystem sys;
    sys.n = report.n;
    sys.targets = report.balances;
    sys.pinned = BalanceMatrix::zero(report.n);
    Money widest;
    for (int i = 0; i < sys.n; ++i)
        for (int j = i + 1; j < sys.n; ++j) {
            auto it = pairs.find({i, j});
            if (it != pairs.end() && it->second.fixed) {
                Money v = *it->second.fixed;
                sys.pinned.set_pair(i, j, v);
                sys.targets[i] -= v;
                sys.targets[j] += v;
                continue;
            }
            sys.pairs.emplace_back(i, j);
            if (it != pairs.end()) {
                sys.lower.push_back(it->second.lower);
                sys.upper.push_back(it->second.upper);
                if (it->second.lower) widest = std::max(widest, it->second.lower->abs());
                if (it->second.upper) widest = std::max(widest, it->second.upper->abs());
            } else {
                sys.lower.push_back(std::nullopt);
                sys.upper.push_back(std::nullopt);
            }
        }
    for (Money t : sys.targets) widest = std::max(widest, t.abs());
    sys.scale = std::max(1.0, static_cast<double>(widest.count()));
    return sys;
}

double scaled(Money v, double scale) { return static_cast<double>(v.count()) / scale; }

Money money_from_double(double cents) {
    // nearbyint rounds half to even in the default FP environment.
    double r = std::nearbyint(cents);
    if (std::fabs(r) > 1e30) throw data_error("solution-overflow", "solution entry out of range");
    return Money::cents(static_cast<__int128>(r));
}

std::string row_name(int i) { return "row sum for participant " + std::to_string(i + 1); }

// Shared finishing path: round entries to cents, restore exact row sums
// through free pairs, and package the solution.
ConstrainedSolution finish(const FreePairSystem& sys, const std::vector<double>& x,
                           const AggregateReport& report, ReconstructionConstraints::Objective objective) {
    BalanceMatrix m = sys.pinned;
    std::vector<std::vector<bool>> is_free(static_cast<std::size_t>(sys.n),
                                           std::vector<bool>(static_cast<std::size_t>(sys.n), false));
    for (std::size_t k = 0; k < sys.pairs.size(); ++k) {
        auto [i, j] = sys.pairs[k];
        m.set_pair(i, j, money_from_double(x[k] * sys.scale));
        is_free[i][j] = is_free[j][i] = true;
    }
    repair_row_sums(m, report.balances, [&](int i, int j) { return is_free[i][j]; });

    ConstrainedSolution sol;
    sol.objective = objective;
    sol.null_dimension = solution_space_dim(sys.n);
    switch (objective) {
    case ReconstructionConstraints::Objective::min_l1: {
        double total = 0.0;
        for (int i = 0; i < sys.n; ++i)
            for (int j = i + 1; j < sys.n; ++j) total += std::fabs(static_cast<double>(m.entry(i, j).count()));
        sol.objective_value = total;
        break;
    }
    case ReconstructionConstraints::Objective::min_frobenius_norm: {
        double sq = 0.0;
        for (int i = 0; i < sys.n; ++i)
            for (int j = 0; j < sys.n; ++j) {
                double v = static_cast<double>(m.entry(i, j).count());
                sq += v * v;
            }
        sol.objective_value = std::sqrt(sq);
        break;
    }
    case ReconstructionConstraints::Objective::feasibility_only:
        sol.objective_value = 0.0;
        break;
    }
    sol.matrix = std::move(m);
    return sol;
}

ReconstructionOutcome lp_reconstruct(const FreePairSystem& sys, const AggregateReport& report,
                                     ReconstructionConstraints::Objective objective) {
    const int num_pairs = static_cast<int>(sys.pairs.size());
    LpProblem lp;
    lp.num_vars = 2 * num_pairs; // split x = p - q, p,q >= 0
    bool want_l1 = objective == ReconstructionConstraints::Objective::min_l1;
    lp.objective.assign(static_cast<std::size_t>(lp.num_vars), want_l1 ? 1.0 : 0.0);

    std::vector<std::string> row_names;
    for (int i = 0; i < sys.n; ++i) {
        LpConstraint row;
        row.coeffs.assign(static_cast<std::size_t>(lp.num_vars), 0.0);
        for (int k = 0; k < num_pairs; ++k) {
            auto [a, b] = sys.pairs[k];
            double c = a == i ? 1.0 : (b == i ? -1.0 : 0.0);
            if (c != 0.0) {
                row.coeffs[2 * k] = c;
                row.coeffs[2 * k + 1] = -c;
            }
        }
        row.relation = LpConstraint::Relation::eq;
        row.rhs = scaled(sys.targets[i], sys.scale);
        lp.constraints.push_back(std::move(row));
        row_names.push_back(row_name(i));
    }
    for (int k = 0; k < num_pairs; ++k) {
        auto [a, b] = sys.pairs[k];
        if (sys.upper[k]) {
            LpConstraint row;
            row.coeffs.assign(static_cast<std::size_t>(lp.num_vars), 0.0);
            row.coeffs[2 * k] = 1.0;
            row.coeffs[2 * k + 1] = -1.0;
            row.relation = LpConstraint::Relation::le;
            row.rhs = scaled(*sys.upper[k], sys.scale);
            lp.constraints.push_back(std::move(row));
            row_names.push_back("upper bound on " + pair_name(a, b));
        }
        if (sys.lower[k]) {
            LpConstraint row;
            row.coeffs.assign(static_cast<std::size_t>(lp.num_vars), 0.0);
            row.coeffs[2 * k] = 1.0;
            row.coeffs[2 * k + 1] = -1.0;
            row.relation = LpConstraint::Relation::ge;
            row.rhs = scaled(*sys.lower[k], sys.scale);
            lp.constraints.push_back(std::move(row));
            row_names.push_back("lower bound on " + pair_name(a, b));
        }
    }

    LpSolution lps = solve_lp(lp);
    if (lps.status == LpSolution::Status::infeasible) {
        Infeasibility inf;
        inf.reason = "constraints admit no bilateral matrix with the reported aggregates";
        for (int r : lps.unsatisfied_rows) inf.conflicts.push_back(row_names[static_cast<std::size_t>(r)]);
        return inf;
    }
    if (lps.status != LpSolution::Status::optimal)
        throw data_error("lp-failed", "linear program did not converge");

    std::vector<double> x(static_cast<std::size_t>(num_pairs));
    for (int k = 0; k < num_pairs; ++k) x[k] = lps.values[2 * k] - lps.values[2 * k + 1];
    return finish(sys, x, report, objective);
}

// Dense symmetric solve with partial pivoting and rank detection; used for
// the projection onto the row-sum subspace. Returns false when the system
// is inconsistent (targets unreachable through the free pairs).
bool solve_consistent(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double>& out) {
    const int n = static_cast<int>(b.size());
    const double tol = 1e-10;
    std::vector<int> cols(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cols[i] = i;
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        double best = tol;
        for (int r = rank; r < n; ++r)
            if (std::fabs(a[r][col]) > best) {
                best = std::fabs(a[r][col]);
                pivot = r;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        std::swap(b[rank], b[pivot]);
        double inv = 1.0 / a[rank][col];
        for (int j = 0; j < n; ++j) a[rank][j] *= inv;
        b[rank] *= inv;
        a[rank][col] = 1.0;
        for (int r = 0; r < n; ++r) {
            if (r == rank) continue;
            double f = a[r][col];
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) a[r][j] -= f * a[rank][j];
            a[r][col] = 0.0;
            b[r] -= f * b[rank];
        }
        cols[rank] = col;
        ++rank;
    }
    for (int r = rank; r < n; ++r)
        if (std::fabs(b[r]) > 1e-6) return false;
    out.assign(static_cast<std::size_t>(n), 0.0);
    for (int r = 0; r < rank; ++r) out[cols[r]] = b[r];
    return true;
}

ReconstructionOutcome frobenius_reconstruct(const FreePairSystem& sys, const AggregateReport& report) {
    const int n = sys.n;
    const int num_pairs = static_cast<int>(sys.pairs.size());

    // Laplacian of the free-pair graph; the normal matrix of the row-sum
    // operator over free pairs.
    std::vector<std::vector<double>> lap(static_cast<std::size_t>(n),
                                         std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (auto [a, b] : sys.pairs) {
        lap[a][a] += 1.0;
        lap[b][b] += 1.0;
        lap[a][b] -= 1.0;
        lap[b][a] -= 1.0;
    }
    std::vector<double> target(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) target[i] = scaled(sys.targets[i], sys.scale);

    auto project_rowsums = [&](const std::vector<double>& z, std::vector<double>& out) {
        std::vector<double> rhs = target;
        for (int k = 0; k < num_pairs; ++k) {
            auto [a, b] = sys.pairs[k];
            rhs[a] -= z[k];
            rhs[b] += z[k];
        }
        std::vector<double> lambda;
        if (!solve_consistent(lap, rhs, lambda)) return false;
        out = z;
        for (int k = 0; k < num_pairs; ++k) {
            auto [a, b] = sys.pairs[k];
            out[k] += lambda[a] - lambda[b];
        }
        return true;
    };

    std::vector<double> x(static_cast<std::size_t>(num_pairs), 0.0);
    if (!project_rowsums(x, x)) {
        Infeasibility inf;
        inf.reason = "pinned entries contradict the reported aggregates";
        inf.conflicts.push_back("row sums unreachable through the unpinned entries");
        return inf;
    }

    if (sys.lower.end() != std::find_if(sys.lower.begin(), sys.lower.end(), [](auto& o) { return o.has_value(); }) ||
        sys.upper.end() != std::find_if(sys.upper.begin(), sys.upper.end(), [](auto& o) { return o.has_value(); })) {
        // Dykstra's alternating projections between the affine row-sum set
        // and the box; converges to the least-norm point of the intersection.
        std::vector<double> p(x.size(), 0.0), q(x.size(), 0.0);
        std::vector<double> y(x.size());
        x.assign(x.size(), 0.0);
        for (int iter = 0; iter < 2000; ++iter) {
            std::vector<double> xp(x.size());
            for (std::size_t k = 0; k < x.size(); ++k) xp[k] = x[k] + p[k];
            if (!project_rowsums(xp, y)) break; // unreachable: checked above
            for (std::size_t k = 0; k < x.size(); ++k) p[k] = xp[k] - y[k];
            double drift = 0.0;
            for (std::size_t k = 0; k < x.size(); ++k) {
                double v = y[k] + q[k];
                double lo = sys.lower[k] ? scaled(*sys.lower[k], sys.scale) : -std::numeric_limits<double>::infinity();
                double hi = sys.upper[k] ? scaled(*sys.upper[k], sys.scale) : std::numeric_limits<double>::infinity();
                double clamped = std::min(std::max(v, lo), hi);
                q[k] = v - clamped;
                drift = std::max(drift, std::fabs(clamped - x[k]));
                x[k] = clamped;
            }
            if (drift < 1e-12) break;
        }
        // Land back on the affine set; bounds hold to rounding resolution.
        project_rowsums(x, x);
        for (std::size_t k = 0; k < x.size(); ++k) {
            double lo = sys.lower[k] ? scaled(*sys.lower[k], sys.scale) : -std::numeric_limits<double>::infinity();
            double hi = sys.upper[k] ? scaled(*sys.upper[k], sys.scale) : std::numeric_limits<double>::infinity();
            if (x[k] < lo - 1e-6 || x[k] > hi + 1e-6) {
                Infeasibility inf;
                inf.reason = "box bounds and aggregates have no common solution";
                auto [a, b] = sys.pairs[k];
                inf.conflicts.push_back("bounds on " + pair_name(a, b));
                return inf;
            }
        }
    }
    return finish(sys, x, report, ReconstructionConstraints::Objective::min_frobenius_norm);
}

} // namespace

ReconstructionOutcome constrained_reconstruct(const AggregateReport& report,
                                              const ReconstructionConstraints& constraints) {
    require_report_shape(report);
    if (!feasible(report)) {
        Infeasibility inf;
        inf.reason = "aggregates do not sum to zero";
        inf.conflicts.push_back("sum(balances) = " + report_sum(report).to_string());
        return inf;
    }
    auto conflicts = constraints.validate(report.n);
    if (!conflicts.empty()) {
        Infeasibility inf;
        inf.reason = "constraints are internally inconsistent";
        inf.conflicts = std::move(conflicts);
        return inf;
    }

    FreePairSystem sys = build_system(report, constraints.normalized());
    if (sys.pairs.empty()) {
        // Everything pinned: the matrix is determined; it works iff the
        // leftover row targets vanish.
        for (int i = 0; i < sys.n; ++i)
            if (!sys.targets[i].is_zero()) {
                Infeasibility inf;
                inf.reason = "pinned entries contradict the reported aggregates";
                inf.conflicts.push_back(row_name(i) + " off by " + sys.targets[i].to_string());
                return inf;
            }
        std::vector<double> empty;
        return finish(sys, empty, report, constraints.objective);
    }

    // Pre-check pins against bounds happened in validate; bounds against
    // aggregates is the solver's job.
    switch (constraints.objective) {
    case ReconstructionConstraints::Objective::min_l1:
    case ReconstructionConstraints::Objective::feasibility_only:
        return lp_reconstruct(sys, report, constraints.objective);
    case ReconstructionConstraints::Objective::min_frobenius_norm:
        return frobenius_reconstruct(sys, report);
    }
    throw data_error("objective-unknown", "unknown reconstruction objective");
}

std::vector<BalanceMatrix> enumerate_integer_solutions(const AggregateReport& report, Money bound,
                                                       const EnumerationOptions& options) {
    require_report_shape(report);
    const int n = report.n;
    if (n > 4)
        throw data_error("enumerate-too-wide",
                         "exhaustive enumeration is limited to 4 participants, got " + std::to_string(n));
    if (bound.is_negative()) throw data_error("enumerate-bad-bound", "bound must be >= 0");
    if (!options.quantum.is_positive()) throw data_error("enumerate-bad-quantum", "quantum must be positive");

    std::vector<BalanceMatrix> out;
    if (!feasible(report)) return out;

    const __int128 q = options.quantum.count();
    const __int128 steps = bound.count() / q; // lattice points per side
    const int free_dims = n == 2 ? 0 : (n == 3 ? 1 : 3);
    long double estimate = 1.0L;
    for (int d = 0; d < free_dims; ++d) estimate *= static_cast<long double>(2 * steps + 1);
    if (estimate > static_cast<long double>(options.budget))
        throw data_error("enumerate-budget",
                         "enumeration would visit about " + std::to_string(static_cast<double>(estimate)) +
                             " grid points, over the budget of " + std::to_string(options.budget));

    auto in_range = [&](Money v) { return v.abs() <= bound && v.multiple_of(options.quantum); };

    if (n == 2) {
        Money t12 = report.balances[0];
        if (in_range(t12)) {
            BalanceMatrix m = BalanceMatrix::zero(2);
            m.set_pair(0, 1, t12);
            out.push_back(std::move(m));
        }
        return out;
    }

    if (n == 3) {
        Money t2 = report.balances[1];
        Money t3 = report.balances[2];
        for (__int128 s = -steps; s <= steps; ++s) {
            Money t12 = Money::cents(s * q);
            Money t13 = -t12 - t2 - t3;
            Money t23 = t12 + t2;
            if (!in_range(t13) || !in_range(t23)) continue;
            BalanceMatrix m = BalanceMatrix::zero(3);
            m.set_pair(0, 1, t12);
            m.set_pair(0, 2, t13);
            m.set_pair(1, 2, t23);
            out.push_back(std::move(m));
        }
    } else {
        Money t2 = report.balances[1];
        Money t3 = report.balances[2];
        Money t4 = report.balances[3];
        for (__int128 a = -steps; a <= steps; ++a) {
            Money t23 = Money::cents(a * q);
            for (__int128 b = -steps; b <= steps; ++b) {
                Money t24 = Money::cents(b * q);
                Money t12 = t23 + t24 - t2;
                if (!in_range(t12)) continue;
                for (__int128 c = -steps; c <= steps; ++c) {
                    Money t34 = Money::cents(c * q);
                    Money t13 = t34 - t23 - t3;
                    Money t14 = -t24 - t34 - t4;
                    if (!in_range(t13) || !in_range(t14)) continue;
                    BalanceMatrix m = BalanceMatrix::zero(4);
                    m.set_pair(0, 1, t12);
                    m.set_pair(0, 2, t13);
                    m.set_pair(0, 3, t14);
                    m.set_pair(1, 2, t23);
                    m.set_pair(1, 3, t24);
                    m.set_pair(2, 3, t34);
                    out.push_back(std::move(m));
                }
            }
        }
    }

    auto upper_tuple_less = [n](const BalanceMatrix& x, const BalanceMatrix& y) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (x.entry(i, j) != y.entry(i, j)) return x.entry(i, j) < y.entry(i, j);
            }
        return false;
    };
    std::sort(out.begin(), out.end(), upper_tuple_less);
    return out;
}

} // namespace targetsim
