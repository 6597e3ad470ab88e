#include "targetsim/ledger.hpp"

#include <utility>

namespace targetsim {

BalanceMatrix BalanceMatrix::zero(int n) {
    if (n < 0) throw data_error("matrix-bad-size", "participant count must be >= 0");
    BalanceMatrix m;
    m.n_ = n;
    m.cells_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Money{});
    return m;
}

BalanceMatrix BalanceMatrix::from_entries(int n, std::vector<Money> row_major) {
    if (n < 0 || row_major.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw data_error("matrix-bad-size", "entry count does not match participant count");
    BalanceMatrix m;
    m.n_ = n;
    m.cells_ = std::move(row_major);
    return m;
}

std::size_t BalanceMatrix::index(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw data_error("matrix-index", "matrix index out of range");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
}

void BalanceMatrix::set_pair(int i, int j, Money v) {
    if (i == j) throw data_error("matrix-diagonal", "bilateral pair needs two distinct participants");
    cells_[index(i, j)] = v;
    cells_[index(j, i)] = -v;
}

Money BalanceMatrix::row_sum(int i) const {
    Money s;
    for (int j = 0; j < n_; ++j) s += entry(i, j);
    return s;
}

BalanceMatrix BalanceMatrix::operator+(const BalanceMatrix& o) const {
    if (n_ != o.n_) throw data_error("matrix-size-mismatch", "matrix sizes differ");
    BalanceMatrix r = *this;
    for (std::size_t k = 0; k < cells_.size(); ++k) r.cells_[k] += o.cells_[k];
    return r;
}

BalanceMatrix BalanceMatrix::operator-(const BalanceMatrix& o) const {
    if (n_ != o.n_) throw data_error("matrix-size-mismatch", "matrix sizes differ");
    BalanceMatrix r = *this;
    for (std::size_t k = 0; k < cells_.size(); ++k) r.cells_[k] -= o.cells_[k];
    return r;
}

BalanceMatrix BalanceMatrix::scaled(std::int64_t k) const {
    BalanceMatrix r = *this;
    for (auto& c : r.cells_) c = c * k;
    return r;
}

std::string MatrixViolation::describe() const {
    switch (kind) {
    case Kind::nonzero_diagonal:
        return "nonzero diagonal at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::antisymmetry:
        return "antisymmetry broken at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    return "unknown violation";
}

BalanceMatrix record_payment(BalanceMatrix ledger, const Payment& p) {
    if (p.payer == p.payee)
        throw data_error("payment-self", "payer and payee must differ");
    if (!p.amount.is_positive())
        throw data_error("payment-nonpositive", "payment amount must be positive, got " + p.amount.to_string());
    if (p.payer.index < 0 || p.payer.index >= ledger.n() || p.payee.index < 0 || p.payee.index >= ledger.n())
        throw data_error("payment-bad-id", "participant index out of range");
    int payer = p.payer.index;
    int payee = p.payee.index;
    ledger.set_entry(payee, payer, ledger.entry(payee, payer) + p.amount);
    ledger.set_entry(payer, payee, ledger.entry(payer, payee) - p.amount);
    return ledger;
}

std::vector<MatrixViolation> validate_matrix(const BalanceMatrix& m) {
    std::vector<MatrixViolation> out;
    for (int i = 0; i < m.n(); ++i) {
        if (!m.entry(i, i).is_zero())
            out.push_back({MatrixViolation::Kind::nonzero_diagonal, i, i});
        for (int j = i + 1; j < m.n(); ++j) {
            if (m.entry(i, j) != -m.entry(j, i))
                out.push_back({MatrixViolation::Kind::antisymmetry, i, j});
        }
    }
    return out;
}

AggregateReport aggregate(const BalanceMatrix& m, int day) {
    auto violations = validate_matrix(m);
    if (!violations.empty()) {
        std::string msg = "matrix is not a valid balance matrix:";
        for (const auto& v : violations) msg += " " + v.describe() + ";";
        throw InvalidMatrixError(std::move(violations), msg);
    }
    AggregateReport report;
    report.n = m.n();
    report.day = day;
    report.balances.reserve(static_cast<std::size_t>(m.n()));
    for (int i = 0; i < m.n(); ++i) report.balances.push_back(m.row_sum(i));
    return report;
}

NettingResult end_of_day_netting(std::span<const Payment> payments, int day, int n, const BalanceMatrix* carry) {
    if (carry && carry->n() != n)
        throw data_error("netting-carry-size", "carried matrix size does not match participant count");
    BalanceMatrix m = carry ? *carry : BalanceMatrix::zero(n);
    for (std::size_t k = 0; k < payments.size(); ++k) {
        const Payment& p = payments[k];
        if (p.day != day)
            throw data_error("payment-wrong-day",
                             "payment " + std::to_string(k + 1) + " is dated day " + std::to_string(p.day) +
                                 ", expected day " + std::to_string(day));
        try {
            m = record_payment(std::move(m), p);
        } catch (const Error& e) {
            throw Error(e.kind(), e.code(), "payment " + std::to_string(k + 1) + ": " + e.what());
        }
    }
    AggregateReport report = aggregate(m, day);
    return NettingResult{std::move(m), std::move(report)};
}

DegreesOfFreedom degrees_of_freedom(int n) {
    if (n < 2) throw data_error("dof-bad-n", "degrees of freedom need at least two participants");
    std::int64_t nn = n;
    return DegreesOfFreedom{nn * (nn - 1) / 2, nn - 1};
}

} // namespace targetsim
