#pragma once

// Summability transforms acting on finite sequence prefixes: logarithmic
// means, Noerlund means, Cesaro means of varying order, and general
// triangular matrix transforms, plus the finite-window regularity checker.
//
// Index conventions, with l_n = 1 + 1/2 + ... + 1/n:
//
//   L_n(s)       = (1/l_n) * sum_{k=0}^{n-1} s_k / (n-k),        1 <= n
//   N_n^{(q)}(s) = (1/Q_n) * sum_{k=0}^{n}   q_{n-k} s_k,        0 <= n
//   sigma_n^{a}  = (1/A_n^a) * sum_{j=0}^{n} A_{n-j}^{a-1} s_j,  0 <= n
//   T_n(s)       = sum_{k=0}^{n} t_{k,n} s_k
//
// L_n stops before the diagonal; the Noerlund form includes it. For the
// logarithmic weights q_n = 1/(n+1) the two are tied by the exact index
// shift N_k^{(q)} = L_{k+1}, which the tests pin down.

#include "summab/scalar.hpp"
#include "summab/seq_prefix.hpp"
#include "summab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace summab {

// Harmonic number l_n = sum_{k=1}^{n} 1/k, n >= 1.
template <ScalarMode S>
S harmonic_number(int n)
{
    if (n < 1)
        throw precondition_error("harmonic_number: n must be >= 1");
    typename scalar_traits<S>::accum acc{};
    if constexpr (is_exact_v<S>) {
        for (int k = 1; k <= n; ++k)
            acc += ratio<S>(1, k);
    } else {
        // descending order: small terms first
        for (int k = n; k >= 1; --k)
            acc += 1.0L / k;
    }
    return scalar_traits<S>::finish(acc);
}

// L_n(s); uses entries s_0 .. s_{n-1} only.
template <ScalarMode S>
S log_mean(const SeqPrefix<S>& s, int n)
{
    if (n < 1 || n > s.size())
        throw precondition_error("log_mean: n out of range");
    typename scalar_traits<S>::accum acc{};
    for (int k = 0; k < n; ++k)
        acc += s[k] * ratio<S>(1, n - k);
    S num = scalar_traits<S>::finish(acc);
    return S(num / harmonic_number<S>(n));
}

// N_n^{(q)}(s); uses entries s_0 .. s_n.
template <ScalarMode S>
S norlund_mean(const SeqPrefix<S>& s, const WeightScheme<S>& weights, int n)
{
    if (n < 0 || n >= s.size())
        throw precondition_error("norlund_mean: n out of range");
    weights.ensure(n);
    if (scalar_sign(weights.Q(n)) == 0)
        throw precondition_error("norlund_mean: Q_n = 0");
    typename scalar_traits<S>::accum acc{};
    for (int k = 0; k <= n; ++k)
        acc += weights.q(n - k) * s[k];
    S num = scalar_traits<S>::finish(acc);
    return S(num / weights.Q(n));
}

// A_n^alpha = (1+alpha)(2+alpha)...(n+alpha)/n!, alpha > -1, computed by the
// multiplicative recurrence A_n = A_{n-1} (n+alpha)/n.
template <ScalarMode S>
S cesaro_coeff(int n, const S& alpha)
{
    if (n < 0)
        throw precondition_error("cesaro_coeff: n must be >= 0");
    if (alpha <= ratio<S>(-1))
        throw precondition_error("cesaro_coeff: alpha must be > -1");
    S a = ratio<S>(1);
    for (int i = 1; i <= n; ++i)
        a = S(a * (alpha + ratio<S>(i)) / ratio<S>(i));
    return a;
}

// A_0^alpha .. A_n^alpha in one pass.
template <ScalarMode S>
std::vector<S> cesaro_coeff_prefix(int n, const S& alpha)
{
    if (n < 0)
        throw precondition_error("cesaro_coeff_prefix: n must be >= 0");
    if (alpha <= ratio<S>(-1))
        throw precondition_error("cesaro_coeff_prefix: alpha must be > -1");
    std::vector<S> a;
    a.reserve(static_cast<size_t>(n) + 1);
    a.push_back(ratio<S>(1));
    for (int i = 1; i <= n; ++i)
        a.push_back(S(a.back() * (alpha + ratio<S>(i)) / ratio<S>(i)));
    return a;
}

// Rule producing the row order alpha_n of the (C, alpha_n) means.
// Rules: constant alpha in (0,1]; reciprocal alpha_n = 1/(n+1);
// tetunashvili alpha_n = c/ln n with 0 < c < ln 2, queried only for n > m
// (floating mode only -- c/ln n has no exact rational value).
template <ScalarMode S>
class VaryingCesaroParams {
public:
    static VaryingCesaroParams constant(const S& a)
    {
        check_range(a);
        VaryingCesaroParams p;
        p.kind_ = Kind::constant;
        p.const_alpha_ = a;
        p.name_ = "const:" + format_scalar(a);
        return p;
    }

    static VaryingCesaroParams reciprocal()
    {
        VaryingCesaroParams p;
        p.kind_ = Kind::reciprocal;
        p.name_ = "reciprocal";
        return p;
    }

    static VaryingCesaroParams tetunashvili(double c, int m = 1)
    {
        if constexpr (is_exact_v<S>)
            throw precondition_error("tetunashvili rule: floating mode only");
        if (!(c > 0.0) || !(c < std::log(2.0)))
            throw precondition_error("tetunashvili rule: need 0 < c < ln 2");
        if (m < 1)
            throw precondition_error("tetunashvili rule: start index m must be >= 1");
        VaryingCesaroParams p;
        p.kind_ = Kind::tetunashvili;
        p.tet_c_ = c;
        p.tet_m_ = m;
        p.name_ = "tetunashvili:" + format_scalar(c) + ":" + std::to_string(m);
        return p;
    }

    S alpha(int n) const
    {
        switch (kind_) {
        case Kind::constant:
            return const_alpha_;
        case Kind::reciprocal:
            if (n < 0)
                throw precondition_error("alpha rule: n must be >= 0");
            return ratio<S>(1, n + 1);
        case Kind::tetunashvili:
            if (n <= tet_m_)
                throw precondition_error("tetunashvili rule: defined only for n > m");
            if constexpr (!is_exact_v<S>) {
                S a = tet_c_ / std::log(static_cast<double>(n));
                check_range(a);
                return a;
            } else {
                throw precondition_error("tetunashvili rule: floating mode only");
            }
        }
        throw precondition_error("alpha rule: invalid kind");
    }

    // First row index the rule is defined for.
    int first_row() const { return kind_ == Kind::tetunashvili ? tet_m_ + 1 : 0; }

    const std::string& name() const { return name_; }

private:
    enum class Kind { constant, reciprocal, tetunashvili };

    static void check_range(const S& a)
    {
        if (scalar_sign(a) <= 0 || a > ratio<S>(1))
            throw precondition_error("alpha rule: alpha must lie in (0, 1]");
    }

    Kind kind_ = Kind::reciprocal;
    S const_alpha_{};
    double tet_c_ = 0.0;
    int tet_m_ = 1;
    std::string name_;
};

// sigma_n^{alpha}(s) with an explicitly supplied row value alpha.
template <ScalarMode S>
S varying_cesaro_mean_at(const SeqPrefix<S>& s, int n, const S& alpha)
{
    if (n < 0 || n >= s.size())
        throw precondition_error("varying_cesaro_mean: n out of range");
    std::vector<S> inner = cesaro_coeff_prefix<S>(n, S(alpha - ratio<S>(1)));
    typename scalar_traits<S>::accum acc{};
    for (int j = 0; j <= n; ++j)
        acc += inner[static_cast<size_t>(n - j)] * s[j];
    S num = scalar_traits<S>::finish(acc);
    return S(num / cesaro_coeff<S>(n, alpha));
}

// sigma_n^{alpha_n}(s); alpha_n is frozen at the row value for all inner
// coefficients.
template <ScalarMode S>
S varying_cesaro_mean(const SeqPrefix<S>& s, const VaryingCesaroParams<S>& params, int n)
{
    return varying_cesaro_mean_at(s, n, params.alpha(n));
}

// Triangular matrix t_{k,n}, defined for 0 <= k <= n.
template <ScalarMode S>
struct TriangularMatrix {
    std::string provenance; // "explicit-rule" | "bridge-derived"
    std::function<S(int k, int n)> entry;
};

template <ScalarMode S>
TriangularMatrix<S> identity_matrix()
{
    return {"explicit-rule", [](int k, int n) { return ratio<S>(k == n ? 1 : 0); }};
}

// t_{k,n} = 1/((n-k) l_n) for k < n, 0 on the diagonal; rows n >= 1.
// Reproduces L_n as a matrix transform.
template <ScalarMode S>
TriangularMatrix<S> logarithmic_matrix()
{
    return {"explicit-rule", [](int k, int n) {
                if (n < 1)
                    throw precondition_error("logarithmic_matrix: rows start at n = 1");
                if (k == n)
                    return ratio<S>(0);
                return S(ratio<S>(1, n - k) / harmonic_number<S>(n));
            }};
}

// t_{k,n} = q_{n-k}/Q_n; reproduces the Noerlund means.
template <ScalarMode S>
TriangularMatrix<S> norlund_matrix(WeightScheme<S> weights)
{
    return {"explicit-rule", [w = std::move(weights)](int k, int n) {
                w.ensure(n);
                return S(w.q(n - k) / w.Q(n));
            }};
}

// T_n(s) = sum_{k<=n} t_{k,n} s_k.
template <ScalarMode S>
S matrix_transform(const SeqPrefix<S>& s, const TriangularMatrix<S>& matrix, int n)
{
    if (n < 0 || n >= s.size())
        throw precondition_error("matrix_transform: n out of range");
    typename scalar_traits<S>::accum acc{};
    for (int k = 0; k <= n; ++k)
        acc += matrix.entry(k, n) * s[k];
    return scalar_traits<S>::finish(acc);
}

template <ScalarMode S>
struct RegularityRow {
    int n;
    S sum_residual;  // |sum_k t_{k,n} - 1|, condition (a)
    S abs_row_sum;   // sum_k |t_{k,n}|, condition (c) statistic
    bool a_violated; // sum_residual > tol
};

template <ScalarMode S>
struct RegularityColumnProbe {
    int k;
    S tail_max_abs; // max |t_{k,n}| over rows in the upper half of the window
};

// Finite-window regularity statistics. Conditions (b) and (c) are limits
// over all n, so the report carries measured window values only and never
// asserts the asymptotic property.
template <ScalarMode S>
struct RegularityReport {
    int lo = 0;
    int hi = 0;
    S tol{};
    std::vector<RegularityRow<S>> rows;
    S max_abs_row_sum{}; // window maximum of the condition-(c) statistic
    std::vector<RegularityColumnProbe<S>> probes;
    bool any_a_violated = false;
};

// Window is rows n in [lo, hi]; probes cover fixed columns k = 0..8 over
// the tail rows n >= lo + (hi - lo + 1)/2.
template <ScalarMode S>
RegularityReport<S> check_regularity(const TriangularMatrix<S>& matrix, int lo, int hi,
                                     const S& tol)
{
    if (lo < 0 || hi < lo)
        throw precondition_error("check_regularity: window must be nonempty");
    RegularityReport<S> report;
    report.lo = lo;
    report.hi = hi;
    report.tol = tol;
    report.max_abs_row_sum = ratio<S>(0);

    const int tail_start = lo + (hi - lo + 1) / 2;
    const int probe_max_k = std::min(hi, 8);
    std::vector<S> probe_max(static_cast<size_t>(probe_max_k) + 1, ratio<S>(0));

    for (int n = lo; n <= hi; ++n) {
        typename scalar_traits<S>::accum sum{};
        S abs_sum = ratio<S>(0);
        for (int k = 0; k <= n; ++k) {
            S t = matrix.entry(k, n);
            sum += t;
            abs_sum = S(abs_sum + scalar_abs(t));
            if (n >= tail_start && k <= probe_max_k) {
                S a = scalar_abs(t);
                if (a > probe_max[static_cast<size_t>(k)])
                    probe_max[static_cast<size_t>(k)] = a;
            }
        }
        S residual = scalar_abs(S(scalar_traits<S>::finish(sum) - ratio<S>(1)));
        bool violated = residual > tol;
        report.any_a_violated = report.any_a_violated || violated;
        if (abs_sum > report.max_abs_row_sum)
            report.max_abs_row_sum = abs_sum;
        report.rows.push_back({n, residual, abs_sum, violated});
    }
    for (int k = 0; k <= probe_max_k; ++k)
        report.probes.push_back({k, probe_max[static_cast<size_t>(k)]});
    return report;
}

} // namespace summab
