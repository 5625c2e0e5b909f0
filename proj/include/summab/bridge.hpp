#pragma once

// The triangular transform that writes a varying-order Cesaro mean as a
// matrix transform of Noerlund means:
//
//   b_{j,m}  = sum_{k=0}^{j} A_{j-k}^{alpha_m - 1} gamma_k
//   t_{k,n}  = b_{n-k,n} Q_k / A_n^{alpha_n}
//   sigma_n^{alpha_n}(s) = sum_{k=0}^{n} t_{k,n} N_k^{(q)}(s)
//
// The representation is a Cauchy-product identity, valid for every weight
// scheme with q_0 != 0 and every alpha row rule; verify_identity2 measures
// its residual (exactly 0 in rational mode). Row sums equal 1 for the same
// reason. Whether the rows are also nonnegative with absolute sum 1 depends
// on the ratio condition q_j/q_{j-1} <= 1 - (1-alpha_n)/j; cond_check
// reports that condition per index and rowsum_scan measures the outcome, so
// negativity is observed rather than assumed.

#include "summab/means.hpp"
#include "summab/reciprocal.hpp"
#include "summab/scalar.hpp"
#include "summab/seq_prefix.hpp"
#include "summab/weights.hpp"

#include <atomic>
#include <span>
#include <thread>
#include <vector>

namespace summab {

namespace detail {

// Runs fn(n) for n in [first, last] over a small thread pool. Callers make
// every shared input read-only beforehand; results go into per-index slots,
// so the output order does not depend on scheduling.
template <class Fn>
void parallel_rows(int first, int last, Fn&& fn)
{
    const int count = last - first + 1;
    unsigned hw = std::thread::hardware_concurrency();
    int threads = static_cast<int>(hw == 0 ? 1 : hw);
    threads = std::min({threads, count, 8});
    if (threads <= 1 || count < 32) {
        for (int n = first; n <= last; ++n)
            fn(n);
        return;
    }
    std::atomic<int> next{first};
    auto worker = [&]() {
        for (;;) {
            int n = next.fetch_add(1);
            if (n > last)
                return;
            fn(n);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
}

} // namespace detail

// b_{j,m} for row parameter alpha_m; needs gamma_0..gamma_j.
template <ScalarMode S>
S bridge_b(int j, int m, const VaryingCesaroParams<S>& params, const ReciprocalCoeffs<S>& coeffs)
{
    if (j < 0)
        throw precondition_error("bridge_b: j must be >= 0");
    if (coeffs.max_index() < j)
        throw precondition_error("bridge_b: gamma coefficients do not extend to index " +
                                 std::to_string(j));
    const S alpha = params.alpha(m);
    std::vector<S> a = cesaro_coeff_prefix<S>(j, S(alpha - ratio<S>(1)));
    typename scalar_traits<S>::accum acc{};
    for (int k = 0; k <= j; ++k)
        acc += a[static_cast<size_t>(j - k)] * coeffs.gamma[static_cast<size_t>(k)];
    return scalar_traits<S>::finish(acc);
}

// Row n of the transform, with diagnostics.
template <ScalarMode S>
struct BridgeRow {
    int n = 0;
    S alpha_n{};                       // frozen row parameter
    std::vector<S> b;                  // b_{0,n} .. b_{n,n}
    std::vector<S> t;                  // t_{0,n} .. t_{n,n}
    S row_sum{};                       // sum_k t_{k,n}
    S abs_row_sum{};                   // sum_k |t_{k,n}|
    std::vector<int> negative_indices; // k with t_{k,n} < 0
};

template <ScalarMode S>
BridgeRow<S> bridge_row(int n, const WeightScheme<S>& weights, const VaryingCesaroParams<S>& params,
                        const ReciprocalCoeffs<S>& coeffs)
{
    if (n < 0)
        throw precondition_error("bridge_row: n must be >= 0");
    if (coeffs.max_index() < n)
        throw precondition_error("bridge_row: gamma coefficients do not extend to row " +
                                 std::to_string(n));
    weights.ensure(n);

    BridgeRow<S> row;
    row.n = n;
    row.alpha_n = params.alpha(n);

    // one Cesaro table per row: the order is frozen at alpha_n
    std::vector<S> a = cesaro_coeff_prefix<S>(n, S(row.alpha_n - ratio<S>(1)));
    const S norm = cesaro_coeff<S>(n, row.alpha_n);

    row.b.reserve(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        typename scalar_traits<S>::accum acc{};
        for (int k = 0; k <= j; ++k)
            acc += a[static_cast<size_t>(j - k)] * coeffs.gamma[static_cast<size_t>(k)];
        row.b.push_back(scalar_traits<S>::finish(acc));
    }

    row.t.reserve(static_cast<size_t>(n) + 1);
    typename scalar_traits<S>::accum sum{};
    S abs_sum = ratio<S>(0);
    for (int k = 0; k <= n; ++k) {
        S t = S(row.b[static_cast<size_t>(n - k)] * weights.Q(k) / norm);
        sum += t;
        abs_sum = S(abs_sum + scalar_abs(t));
        if (scalar_sign(t) < 0)
            row.negative_indices.push_back(k);
        row.t.push_back(t);
    }
    row.row_sum = scalar_traits<S>::finish(sum);
    row.abs_row_sum = abs_sum;
    return row;
}

// sigma_n^{alpha_n}(s) - sum_k t_{k,n} N_k^{(q)}(s) for a precomputed row
// and precomputed Noerlund values N_0..N_n.
template <ScalarMode S>
S verify_identity2(const SeqPrefix<S>& prefix, const BridgeRow<S>& row,
                   std::span<const S> norlund_values)
{
    const int n = row.n;
    if (n >= prefix.size())
        throw precondition_error("verify_identity2: n out of range");
    if (static_cast<size_t>(n) >= norlund_values.size())
        throw precondition_error("verify_identity2: Noerlund values do not extend to n");
    S lhs = varying_cesaro_mean_at(prefix, n, row.alpha_n);
    typename scalar_traits<S>::accum acc{};
    for (int k = 0; k <= n; ++k)
        acc += row.t[static_cast<size_t>(k)] * norlund_values[static_cast<size_t>(k)];
    return S(lhs - scalar_traits<S>::finish(acc));
}

template <ScalarMode S>
S verify_identity2(const SeqPrefix<S>& prefix, const BridgeRow<S>& row,
                   const WeightScheme<S>& weights)
{
    const int n = row.n;
    if (n < 0 || n >= prefix.size())
        throw precondition_error("verify_identity2: n out of range");
    std::vector<S> values;
    values.reserve(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        values.push_back(norlund_mean(prefix, weights, k));
    return verify_identity2(prefix, row, std::span<const S>(values));
}

template <ScalarMode S>
S verify_identity2(const SeqPrefix<S>& prefix, int n, const WeightScheme<S>& weights,
                   const VaryingCesaroParams<S>& params)
{
    if (n < 0 || n >= prefix.size())
        throw precondition_error("verify_identity2: n out of range");
    ReciprocalCoeffs<S> coeffs = reciprocal_coeffs(weights, n);
    return verify_identity2(prefix, bridge_row(n, weights, params, coeffs), weights);
}

template <ScalarMode S>
struct CondIndexEntry {
    int j;
    S lhs;      // q_j / q_{j-1}
    S rhs;      // 1 - (1 - alpha_n)/j
    bool holds; // lhs <= rhs
};

// The ratio condition with the row parameter alpha_n frozen, evaluated at
// every index j in 1..n. holds_at_matching is the j = n reading; holds_all
// is the all-indices reading that the telescoping argument needs.
template <ScalarMode S>
struct CondReport {
    int n = 0;
    S alpha_n{};
    std::vector<CondIndexEntry<S>> entries;
    std::vector<int> failing;
    bool holds_at_matching = false;
    bool holds_all = false;
};

template <ScalarMode S>
CondReport<S> cond_check(const WeightScheme<S>& weights, const VaryingCesaroParams<S>& params,
                         int n)
{
    if (n < 1)
        throw precondition_error("cond_check: n must be >= 1");
    weights.ensure(n);
    CondReport<S> report;
    report.n = n;
    report.alpha_n = params.alpha(n);
    report.holds_all = true;
    const S one = ratio<S>(1);
    for (int j = 1; j <= n; ++j) {
        if (scalar_sign(weights.q(j - 1)) == 0)
            throw precondition_error("cond_check: q_{j-1} = 0 at j = " + std::to_string(j));
        CondIndexEntry<S> e;
        e.j = j;
        e.lhs = S(weights.q(j) / weights.q(j - 1));
        e.rhs = S(one - S(one - report.alpha_n) / ratio<S>(j));
        e.holds = e.lhs <= e.rhs;
        if (!e.holds) {
            report.failing.push_back(j);
            report.holds_all = false;
        }
        if (j == n)
            report.holds_at_matching = e.holds;
        report.entries.push_back(e);
    }
    return report;
}

// The bridge transform as a triangular matrix, usable by matrix_transform
// and check_regularity. Entries are recomputed per query (pure, no shared
// state); prefer bridge_row for bulk per-row work.
template <ScalarMode S>
TriangularMatrix<S> bridge_matrix(WeightScheme<S> weights, VaryingCesaroParams<S> params,
                                  ReciprocalCoeffs<S> coeffs)
{
    return {"bridge-derived",
            [w = std::move(weights), p = std::move(params), c = std::move(coeffs)](int k, int n) {
                w.ensure(n);
                return S(bridge_b(n - k, n, p, c) * w.Q(k) / cesaro_coeff<S>(n, p.alpha(n)));
            }};
}

template <ScalarMode S>
struct RowScanEntry {
    int n;
    S row_sum_minus_1;
    S abs_row_sum;
    int negative_count;
};

// Row diagnostics for n = first_row..nmax. The gamma and Q tables are
// built once up front and read-only afterwards; rows are evaluated
// concurrently and assembled by index.
template <ScalarMode S>
std::vector<RowScanEntry<S>> rowsum_scan(int nmax, const WeightScheme<S>& weights,
                                         const VaryingCesaroParams<S>& params)
{
    if (nmax < 1)
        throw precondition_error("rowsum_scan: nmax must be >= 1");
    ReciprocalCoeffs<S> coeffs = reciprocal_coeffs(weights, nmax);
    weights.ensure(nmax);
    const int first = params.first_row();
    std::vector<RowScanEntry<S>> table(static_cast<size_t>(nmax - first + 1));
    detail::parallel_rows(first, nmax, [&](int n) {
        BridgeRow<S> row = bridge_row(n, weights, params, coeffs);
        table[static_cast<size_t>(n - first)] = {n, S(row.row_sum - ratio<S>(1)),
                                                 row.abs_row_sum,
                                                 static_cast<int>(row.negative_indices.size())};
    });
    return table;
}

} // namespace summab
