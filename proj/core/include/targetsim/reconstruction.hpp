#pragma once

#include "targetsim/ledger.hpp"
#include "targetsim/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace targetsim {

/// Skew-symmetric matrix with exact rational entries, for solutions whose
/// entries do not land on whole cents (the minimum-norm representative has
/// denominator n).
class RationalMatrix {
public:
    RationalMatrix() : n_(0) {}
    static RationalMatrix zero(int n);

    int n() const { return n_; }
    const RationalMoney& entry(int i, int j) const;
    void set_pair(int i, int j, const RationalMoney& v);
    RationalMoney row_sum(int i) const;
    bool operator==(const RationalMatrix&) const = default;

private:
    int n_;
    std::vector<RationalMoney> cells_;
};

/// A report is reachable from some bilateral matrix iff it sums to zero.
bool feasible(const AggregateReport& report);

/// Dimension of the set of bilateral matrices behind one report:
/// n(n-1)/2 unknowns minus n-1 independent sums.
std::int64_t solution_space_dim(int n);

/// The three-participant case in closed form: pick the one free balance
/// t12 and the other two follow. Every choice reproduces the report.
BalanceMatrix parametrize_n3(const AggregateReport& report, Money t12);

/// Canonical representative: entry (i, j) = (T_i - T_j) / n. Minimizes the
/// Frobenius norm among all skew-symmetric matrices with the given row
/// sums; row sums reproduce the report exactly in rational arithmetic.
RationalMatrix min_norm_reconstruct(const AggregateReport& report);

/// Rounds to whole cents (half to even), then restores the target row sums
/// exactly by shifting cents between the most off rows.
BalanceMatrix round_with_row_repair(const RationalMatrix& solution, const AggregateReport& target);

/// The 3-cycle a->b->c->a carrying x: row sums vanish, so adding it to any
/// solution gives another solution with the same aggregates.
BalanceMatrix cycle_matrix(int n, int a, int b, int c, Money x);

/// Elementary 3-cycles through participant 0: (n-1)(n-2)/2 independent
/// matrices spanning the zero-row-sum skew-symmetric space.
std::vector<BalanceMatrix> null_space_basis(int n);

struct SolutionSpace {
    int n = 0;
    BalanceMatrix particular;
    std::int64_t null_dimension = 0;
    std::vector<BalanceMatrix> basis;
};

/// One integer particular solution (all flows against participant 0) plus
/// the cycle basis; the full solution set is particular + span(basis).
SolutionSpace solution_space(const AggregateReport& report);

/// Constraint language for the inverse problem: pinned entries, box
/// bounds, and the objective picking one representative.
class ReconstructionConstraints {
public:
    enum class Objective { min_frobenius_norm, min_l1, feasibility_only };

    Objective objective = Objective::min_l1;

    /// Pins entry (i, j) to v (and (j, i) to -v).
    void fix(int i, int j, Money v);
    void set_lower(int i, int j, Money v);
    void set_upper(int i, int j, Money v);

    /// Bounds and pins normalized onto the upper triangle (first < second).
    struct PairConstraint {
        std::optional<Money> lower;
        std::optional<Money> upper;
        std::optional<Money> fixed;
    };
    using PairKey = std::pair<int, int>;

    /// Merged view; inconsistencies are reported by validate, not here.
    std::map<PairKey, PairConstraint> normalized() const;
    /// Names every internal inconsistency (empty means consistent).
    std::vector<std::string> validate(int n) const;
    bool empty() const { return fixed_.empty() && lower_.empty() && upper_.empty(); }
    bool has_bounds() const { return !lower_.empty() || !upper_.empty(); }

private:
    struct RawEntry {
        int i, j;
        Money value;
    };
    std::vector<RawEntry> fixed_, lower_, upper_;
};

struct ConstrainedSolution {
    BalanceMatrix matrix;
    ReconstructionConstraints::Objective objective;
    /// L1 objectives report the exact cent sum of the returned matrix;
    /// Frobenius objectives report the norm in cents.
    double objective_value = 0.0;
    std::int64_t null_dimension = 0;
};

/// Names an unsatisfiable constraint subset.
struct Infeasibility {
    std::string reason;
    std::vector<std::string> conflicts;
    std::string describe() const;
};

using ReconstructionOutcome = std::variant<ConstrainedSolution, Infeasibility>;

/// Solves for one bilateral matrix consistent with the report under the
/// constraints, or certifies that none exists. The returned matrix
/// aggregates back to the report exactly.
ReconstructionOutcome constrained_reconstruct(const AggregateReport& report,
                                              const ReconstructionConstraints& constraints);

struct EnumerationOptions {
    Money quantum = Money::cents(1);
    std::uint64_t budget = 20'000'000; // grid points before refusing
};

/// Exhaustive list of integer solutions with |entries| <= bound on the
/// quantum lattice, in lexicographic upper-triangle order. Small n only.
std::vector<BalanceMatrix> enumerate_integer_solutions(const AggregateReport& report, Money bound,
                                                       const EnumerationOptions& options = {});

} // namespace targetsim
