#pragma once

#include "targetsim/errors.hpp"
#include "targetsim/money.hpp"
#include "targetsim/participants.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace targetsim {

/// A directed cross-border transfer settled in central bank money.
/// The payee side books the claim: money flowing out of a country leaves
/// its NCB with the liability.
struct Payment {
    ParticipantId payer;
    ParticipantId payee;
    Money amount; // strictly positive
    int day = 0;
};

/// Bilateral net balances among n participants. entry(i, j) is the claim
/// of i on j; a valid matrix has zero diagonal and entry(i, j) == -entry(j, i)
/// exactly, in integer cents.
///
/// Snapshots are plain values: copy freely, mutate via the returning
/// operations (record_payment takes the matrix by value, so folds can move).
class BalanceMatrix {
public:
    BalanceMatrix() : n_(0) {}
    static BalanceMatrix zero(int n);
    /// Raw construction without validity checks; validate_matrix decides.
    static BalanceMatrix from_entries(int n, std::vector<Money> row_major);

    int n() const { return n_; }
    Money entry(int i, int j) const { return cells_[index(i, j)]; }
    /// Writes one cell as-is. Use set_pair to keep antisymmetry.
    void set_entry(int i, int j, Money v) { cells_[index(i, j)] = v; }
    /// Writes entry(i, j) = v and entry(j, i) = -v.
    void set_pair(int i, int j, Money v);
    Money row_sum(int i) const;

    BalanceMatrix operator+(const BalanceMatrix& o) const;
    BalanceMatrix operator-(const BalanceMatrix& o) const;
    BalanceMatrix scaled(std::int64_t k) const;
    bool operator==(const BalanceMatrix& o) const = default;

private:
    std::size_t index(int i, int j) const;
    int n_;
    std::vector<Money> cells_;
};

/// The published end-of-day figures: one net balance per participant,
/// summing to zero when they came out of a valid matrix.
struct AggregateReport {
    int n = 0;
    std::vector<Money> balances;
    int day = 0;
    bool operator==(const AggregateReport&) const = default;
};

struct MatrixViolation {
    enum class Kind { nonzero_diagonal, antisymmetry };
    Kind kind;
    int i = 0;
    int j = 0;
    std::string describe() const;
};

class InvalidMatrixError : public Error {
public:
    InvalidMatrixError(std::vector<MatrixViolation> violations, const std::string& message)
        : Error(ErrorKind::data, "matrix-invalid", message), violations_(std::move(violations)) {}
    const std::vector<MatrixViolation>& violations() const { return violations_; }

private:
    std::vector<MatrixViolation> violations_;
};

/// Books one payment: the payee's claim on the payer grows by the amount,
/// the mirror entry shrinks, nothing else moves.
BalanceMatrix record_payment(BalanceMatrix ledger, const Payment& p);

/// Violations are data, not errors: an empty list means valid.
std::vector<MatrixViolation> validate_matrix(const BalanceMatrix& m);

/// Nets the matrix into per-participant balances (row sums). Rejects
/// invalid matrices with the violation list attached.
AggregateReport aggregate(const BalanceMatrix& m, int day = 0);

struct NettingResult {
    BalanceMatrix matrix;
    AggregateReport report;
};

/// Folds a day's payments into a matrix of `n` participants (continuing
/// from `carry` when a running ledger is kept) and nets it. Every payment
/// must carry the given day; a failing payment is identified by position.
NettingResult end_of_day_netting(std::span<const Payment> payments, int day, int n,
                                 const BalanceMatrix* carry = nullptr);

struct DegreesOfFreedom {
    std::int64_t bilateral = 0;  // independent bilateral balances, n(n-1)/2
    std::int64_t aggregates = 0; // independent published sums, n-1
    bool operator==(const DegreesOfFreedom&) const = default;
};

/// Why the published aggregates cannot be inverted: n(n-1)/2 unknowns
/// against n-1 independent sums.
DegreesOfFreedom degrees_of_freedom(int n);

} // namespace targetsim
