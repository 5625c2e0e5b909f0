#pragma once

// Coefficients gamma_n of the reciprocal power series 1/q(x), where
// q(x) = sum q_n x^n, computed by the convolution recursion
//
//   gamma_0 = 1/q_0,
//   gamma_n = -(1/q_0) * sum_{k=0}^{n-1} q_{n-k} gamma_k      (n >= 1),
//
// together with finite-window checks of the hypotheses (q_0 = 1, q_n > 0,
// ratio q_{n+1}/q_n nondecreasing, q_n/Q_n -> 0) and of the conclusions
// (gamma_n < 0 for n >= 1, partial sums 1 + sum gamma_n staying >= 0).
// In rational mode the recursion is exact and serves as the oracle the
// bridge module builds on; no closed forms or shortcuts are used.

#include "summab/scalar.hpp"
#include "summab/weights.hpp"

#include <string>
#include <vector>

namespace summab {

template <ScalarMode S>
struct ReciprocalCoeffs {
    std::vector<S> gamma;    // gamma_0 .. gamma_N
    std::string source_name; // name of the weight scheme it inverts

    int max_index() const { return static_cast<int>(gamma.size()) - 1; }
};

template <ScalarMode S>
ReciprocalCoeffs<S> reciprocal_coeffs(const WeightScheme<S>& weights, int N)
{
    if (N < 0)
        throw precondition_error("reciprocal_coeffs: N must be >= 0");
    weights.ensure(N);
    if (scalar_sign(weights.q(0)) == 0)
        throw precondition_error("reciprocal_coeffs: q_0 = 0, series not invertible");

    ReciprocalCoeffs<S> out;
    out.source_name = weights.name();
    out.gamma.reserve(static_cast<size_t>(N) + 1);
    const S inv_q0 = S(ratio<S>(1) / weights.q(0));
    out.gamma.push_back(inv_q0);
    for (int n = 1; n <= N; ++n) {
        typename scalar_traits<S>::accum acc{};
        for (int k = 0; k < n; ++k)
            acc += weights.q(n - k) * out.gamma[static_cast<size_t>(k)];
        S conv = scalar_traits<S>::finish(acc);
        out.gamma.push_back(S(-(conv * inv_q0)));
    }
    return out;
}

template <ScalarMode S>
struct HardyReport {
    int N = 0;
    bool q0_is_one = false;
    bool all_positive = false;
    int first_nonpositive = -1; // -1 when none in 0..N
    // ratio q_{n+1}/q_n nondecreasing for 0 < n, n+1 <= N
    bool ratios_nondecreasing = false;
    // smallest j >= 2 whose ratio q_j/q_{j-1} drops below its predecessor
    int first_ratio_drop = -1;
    bool cond0_holds = false;  // q0_is_one && all_positive && ratios_nondecreasing
    // measured q_N/Q_N (finite probe of the regularity criterion; reported,
    // not asserted)
    bool tail_ratio_defined = false;
    S tail_ratio{};
};

// Never throws on degenerate weights; they produce a failing report.
template <ScalarMode S>
HardyReport<S> check_hardy_hypotheses(const WeightScheme<S>& weights, int N)
{
    if (N < 2)
        throw precondition_error("check_hardy_hypotheses: N must be >= 2");
    weights.ensure(N);
    HardyReport<S> r;
    r.N = N;
    r.q0_is_one = weights.q(0) == ratio<S>(1);

    r.all_positive = true;
    for (int n = 0; n <= N; ++n) {
        if (scalar_sign(weights.q(n)) <= 0) {
            r.all_positive = false;
            r.first_nonpositive = n;
            break;
        }
    }

    // Cross-multiplied form q_{n+1} q_{n-1} >= q_n^2 avoids divisions; it is
    // the ratio comparison only while the weights stay positive.
    r.ratios_nondecreasing = r.all_positive;
    if (r.all_positive) {
        for (int n = 1; n + 1 <= N; ++n) {
            S lhs = S(weights.q(n + 1) * weights.q(n - 1));
            S rhs = S(weights.q(n) * weights.q(n));
            if (lhs < rhs) {
                r.ratios_nondecreasing = false;
                r.first_ratio_drop = n + 1;
                break;
            }
        }
    }
    r.cond0_holds = r.q0_is_one && r.all_positive && r.ratios_nondecreasing;

    if (scalar_sign(weights.Q(N)) != 0) {
        r.tail_ratio_defined = true;
        r.tail_ratio = S(weights.q(N) / weights.Q(N));
    }
    return r;
}

template <ScalarMode S>
struct GammaReport {
    bool gamma0_is_one = false;
    // sign pattern of gamma_n, n >= 1; strict and non-strict counts are kept
    // apart so boundary schemes such as q = (1,1,1,...) read truthfully
    int negative_count = 0;
    int zero_count = 0;
    int positive_count = 0;
    std::vector<int> positive_indices;
    // running partial sums 1 + gamma_1 + ... + gamma_M, M = 0..N
    S min_partial_sum{};
    int min_partial_sum_index = 0;
    S final_partial_sum{};
    bool min_nonnegative = false;
};

template <ScalarMode S>
GammaReport<S> check_gamma_conclusions(const ReciprocalCoeffs<S>& coeffs)
{
    if (coeffs.gamma.empty())
        throw precondition_error("check_gamma_conclusions: empty coefficient list");
    GammaReport<S> r;
    r.gamma0_is_one = coeffs.gamma.front() == ratio<S>(1);

    S partial = coeffs.gamma.front();
    r.min_partial_sum = partial;
    r.min_partial_sum_index = 0;
    for (int n = 1; n <= coeffs.max_index(); ++n) {
        const S& g = coeffs.gamma[static_cast<size_t>(n)];
        int sg = scalar_sign(g);
        if (sg < 0)
            ++r.negative_count;
        else if (sg == 0)
            ++r.zero_count;
        else {
            ++r.positive_count;
            r.positive_indices.push_back(n);
        }
        partial = S(partial + g);
        if (partial < r.min_partial_sum) {
            r.min_partial_sum = partial;
            r.min_partial_sum_index = n;
        }
    }
    r.final_partial_sum = partial;
    r.min_nonnegative = scalar_sign(r.min_partial_sum) >= 0;
    return r;
}

} // namespace summab
