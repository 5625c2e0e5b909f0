#pragma once

// Partial sums of Fourier series on [0,1) in two systems, and their
// logarithmic means.
//
// Trigonometric: S_n(f,x) = sum_{|j| <= n} c_j e^{2 pi i j x}, so S_0 is
// the constant term. Real functions are enforced (c_{-j} = conj(c_j)) and
// the sums are evaluated in the folded real form. In rational mode the
// harmonics take exact values only at x in {0, 1/4, 1/2, 3/4}; other
// points require floating mode.
//
// Walsh-Paley: w_n = prod_{j in Sp(n)} r_j with r_j(x) = (-1)^{x_j} on the
// binary digits of x, S_n(f,x) = sum_{k < n} fhat(k) w_k(x), S_0 = 0.
// Step functions on 2^J dyadic intervals have fhat(k) = 0 for k >= 2^J and
// every coefficient is an exact dyadic average, so rational mode is exact
// at every rational x.

#include "summab/means.hpp"
#include "summab/scalar.hpp"
#include "summab/seq_prefix.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace summab {

enum class FourierSystem { trigonometric, walsh_paley };

inline const char* system_name(FourierSystem s)
{
    return s == FourierSystem::trigonometric ? "trigonometric" : "walsh-paley";
}

template <ScalarMode S>
struct TrigCoeff {
    S re{};
    S im{};
};

// First `count` binary digits x_0, x_1, ... of x in [0,1), where
// x = sum x_j 2^{-(j+1)}. Exact for rationals; for doubles these are the
// digits of the represented value.
template <ScalarMode S>
std::vector<int> binary_digits(const S& x, int count)
{
    if (scalar_sign(x) < 0 || x >= ratio<S>(1))
        throw precondition_error("binary_digits: x must lie in [0,1)");
    std::vector<int> digits;
    digits.reserve(static_cast<size_t>(count));
    if constexpr (is_exact_v<S>) {
        mpz_class p = x.get_num();
        const mpz_class q = x.get_den();
        for (int j = 0; j < count; ++j) {
            p *= 2;
            if (p >= q) {
                digits.push_back(1);
                p -= q;
            } else {
                digits.push_back(0);
            }
        }
    } else {
        double y = x;
        for (int j = 0; j < count; ++j) {
            y *= 2.0;
            if (y >= 1.0) {
                digits.push_back(1);
                y -= 1.0;
            } else {
                digits.push_back(0);
            }
        }
    }
    return digits;
}

// w_n(x) as a bare sign, Paley enumeration.
template <ScalarMode S>
int walsh_sign(std::uint64_t n, const S& x)
{
    std::vector<int> digits = binary_digits(x, std::bit_width(n));
    int parity = 0;
    for (int j = 0; n != 0; ++j, n >>= 1)
        if (n & 1u)
            parity ^= digits[static_cast<size_t>(j)];
    return parity ? -1 : 1;
}

template <ScalarMode S>
S walsh_function(std::uint64_t n, const S& x)
{
    return ratio<S>(walsh_sign(n, x));
}

namespace detail {

// In-place Walsh-Hadamard butterflies (unnormalized).
template <ScalarMode S>
void walsh_hadamard(std::vector<S>& v)
{
    const size_t n = v.size();
    for (size_t h = 1; h < n; h <<= 1) {
        for (size_t block = 0; block < n; block += 2 * h) {
            for (size_t i = block; i < block + h; ++i) {
                S a = v[i];
                S b = v[i + h];
                v[i] = S(a + b);
                v[i + h] = S(a - b);
            }
        }
    }
}

inline std::uint32_t reverse_bits(std::uint32_t i, int width)
{
    std::uint32_t r = 0;
    for (int b = 0; b < width; ++b)
        r |= ((i >> b) & 1u) << (width - 1 - b);
    return r;
}

} // namespace detail

template <ScalarMode S>
class FourierFunction {
public:
    // Full coefficient list c_{-d}, ..., c_d (odd length). The function must
    // be real: c_{-j} = conj(c_j), checked exactly in rational mode and to
    // 1e-12 in floating mode (then symmetrized).
    static FourierFunction trig_poly(const std::vector<TrigCoeff<S>>& full)
    {
        if (full.empty() || full.size() % 2 == 0)
            throw precondition_error("trig_poly: coefficient list must have odd length 2d+1");
        const int d = static_cast<int>(full.size() / 2);
        FourierFunction f;
        f.system_ = FourierSystem::trigonometric;
        f.coeff_.reserve(static_cast<size_t>(d) + 1);
        for (int j = 0; j <= d; ++j) {
            const TrigCoeff<S>& pos = full[static_cast<size_t>(d + j)];
            const TrigCoeff<S>& neg = full[static_cast<size_t>(d - j)];
            if (!scalar_finite(pos.re) || !scalar_finite(pos.im))
                throw precondition_error("trig_poly: coefficients must be finite");
            if constexpr (is_exact_v<S>) {
                if (neg.re != pos.re || neg.im != S(-pos.im))
                    throw precondition_error("trig_poly: real function requires c_{-j} = conj(c_j)");
                f.coeff_.push_back(pos);
            } else {
                double scale = std::max({1.0, std::fabs(pos.re), std::fabs(pos.im)});
                if (std::fabs(neg.re - pos.re) > 1e-12 * scale ||
                    std::fabs(neg.im + pos.im) > 1e-12 * scale)
                    throw precondition_error("trig_poly: real function requires c_{-j} = conj(c_j)");
                f.coeff_.push_back({(pos.re + neg.re) / 2.0, (pos.im - neg.im) / 2.0});
            }
        }
        if constexpr (is_exact_v<S>) {
            if (f.coeff_.front().im != ratio<S>(0))
                throw precondition_error("trig_poly: c_0 must be real");
        } else {
            f.coeff_.front().im = 0.0;
        }
        return f;
    }

    // M uniform samples f(i/M); floating mode only. Coefficients come from
    // the uniform-grid quadrature rule and are trusted up to degree M/4
    // (exact on polynomials of degree <= M/2 - 1, aliased beyond).
    static FourierFunction samples(const std::vector<S>& values)
    {
        if constexpr (is_exact_v<S>)
            throw precondition_error("samples representation: floating mode only");
        else {
            if (values.empty())
                throw precondition_error("samples: need at least one value");
            if (values.size() > 65536)
                throw ceiling_error("samples: grid limited to 65536 points");
            for (const S& v : values)
                if (!scalar_finite(v))
                    throw precondition_error("samples: values must be finite");
            const int m = static_cast<int>(values.size());
            const int d = m / 4;
            FourierFunction f;
            f.system_ = FourierSystem::trigonometric;
            // one period of e^{-2 pi i t / M}
            std::vector<double> cs(static_cast<size_t>(m)), sn(static_cast<size_t>(m));
            for (int t = 0; t < m; ++t) {
                double arg = 2.0 * std::numbers::pi * t / m;
                cs[static_cast<size_t>(t)] = std::cos(arg);
                sn[static_cast<size_t>(t)] = std::sin(arg);
            }
            f.coeff_.reserve(static_cast<size_t>(d) + 1);
            for (int j = 0; j <= d; ++j) {
                long double re = 0.0L, im = 0.0L;
                for (int i = 0; i < m; ++i) {
                    int t = static_cast<int>((static_cast<long long>(j) * i) % m);
                    re += values[static_cast<size_t>(i)] * cs[static_cast<size_t>(t)];
                    im -= values[static_cast<size_t>(i)] * sn[static_cast<size_t>(t)];
                }
                f.coeff_.push_back({static_cast<double>(re / m), static_cast<double>(im / m)});
            }
            f.coeff_.front().im = 0.0;
            f.sampled_ = true;
            return f;
        }
    }

    // 2^J values on the dyadic intervals [i 2^{-J}, (i+1) 2^{-J}). The Walsh
    // coefficient table is materialized at construction.
    static FourierFunction dyadic_step(std::vector<S> values)
    {
        if (values.empty() || !std::has_single_bit(values.size()))
            throw precondition_error("dyadic_step: length must be a power of two");
        const int levels = std::countr_zero(values.size());
        const int max_levels = is_exact_v<S> ? 16 : 20;
        if (levels > max_levels)
            throw ceiling_error("dyadic_step: J <= " + std::to_string(max_levels) +
                                " in this mode");
        for (const S& v : values)
            if (!scalar_finite(v))
                throw precondition_error("dyadic_step: values must be finite");

        FourierFunction f;
        f.system_ = FourierSystem::walsh_paley;
        f.levels_ = levels;
        f.step_ = std::move(values);

        // fhat(k) = 2^{-J} sum_i f(i 2^{-J}) w_k(i 2^{-J}); the grid digits
        // are the bits of i reversed, so transform the bit-reversed array.
        const size_t m = f.step_.size();
        f.wcoeff_.resize(m);
        for (size_t i = 0; i < m; ++i)
            f.wcoeff_[detail::reverse_bits(static_cast<std::uint32_t>(i), levels)] = f.step_[i];
        detail::walsh_hadamard(f.wcoeff_);
        const S scale = ratio<S>(1, static_cast<long>(m));
        for (S& c : f.wcoeff_)
            c = S(c * scale);
        f.zero_ = ratio<S>(0);
        return f;
    }

    FourierSystem system() const { return system_; }

    // --- trigonometric accessors ---

    int trig_degree() const
    {
        require(FourierSystem::trigonometric);
        return static_cast<int>(coeff_.size()) - 1;
    }

    // Sampled coefficients are trusted only up to degree M/4; a polynomial
    // given by its coefficients saturates exactly instead.
    int max_partial_sum_index() const
    {
        require(FourierSystem::trigonometric);
        return sampled_ ? trig_degree() : std::numeric_limits<int>::max();
    }

    TrigCoeff<S> trig_coeff(int j) const
    {
        require(FourierSystem::trigonometric);
        int a = j >= 0 ? j : -j;
        if (a >= static_cast<int>(coeff_.size()))
            return {ratio<S>(0), ratio<S>(0)};
        TrigCoeff<S> c = coeff_[static_cast<size_t>(a)];
        if (j < 0)
            c.im = S(-c.im);
        return c;
    }

    // --- walsh accessors ---

    int levels() const
    {
        require(FourierSystem::walsh_paley);
        return levels_;
    }

    const std::vector<S>& step_values() const
    {
        require(FourierSystem::walsh_paley);
        return step_;
    }

    const S& walsh_coeff(std::uint64_t k) const
    {
        require(FourierSystem::walsh_paley);
        return k < wcoeff_.size() ? wcoeff_[static_cast<size_t>(k)] : zero_;
    }

    // Value of the step function at x (dyadic-step representation only).
    S value_at(const S& x) const
    {
        require(FourierSystem::walsh_paley);
        std::vector<int> digits = binary_digits(x, levels_);
        size_t idx = 0;
        for (int j = 0; j < levels_; ++j)
            idx = (idx << 1) | static_cast<size_t>(digits[static_cast<size_t>(j)]);
        return step_[idx];
    }

    void require(FourierSystem expected) const
    {
        if (system_ != expected)
            throw precondition_error(std::string("system mismatch: function is ") +
                                     system_name(system_) + ", operation needs " +
                                     system_name(expected));
    }

private:
    FourierFunction() = default;

    FourierSystem system_ = FourierSystem::trigonometric;
    std::vector<TrigCoeff<S>> coeff_; // c_0 .. c_d of a real function
    bool sampled_ = false;
    int levels_ = 0;
    std::vector<S> step_;
    std::vector<S> wcoeff_;
    S zero_{};
};

namespace detail {

// Quarter-turn phases: for 4x integral, e^{2 pi i j x} cycles through
// {1, i, -1, -i} and the partial sums stay rational.
template <ScalarMode S>
int quarter_of(const S& x)
{
    if constexpr (is_exact_v<S>) {
        Rational m4 = S(x * 4);
        if (m4.get_den() != 1)
            throw precondition_error(
                "trig partial sums in exact mode need x in {0, 1/4, 1/2, 3/4}");
        return static_cast<int>(m4.get_num().get_si() & 3);
    } else {
        (void)x;
        return 0; // unused
    }
}

} // namespace detail

// S_n(f,x) for trigonometric f; real output by the enforced symmetry.
template <ScalarMode S>
S trig_partial_sum(const FourierFunction<S>& f, int n, const S& x)
{
    f.require(FourierSystem::trigonometric);
    if (n < 0)
        throw precondition_error("trig_partial_sum: n must be >= 0");
    if (n > f.max_partial_sum_index())
        throw precondition_error(
            "trig_partial_sum: sampled grid trusts coefficients only up to M/4 = " +
            std::to_string(f.trig_degree()) + "; supply at least 4n samples");
    if (scalar_sign(x) < 0 || x >= ratio<S>(1))
        throw precondition_error("trig_partial_sum: x must lie in [0,1)");
    const int d = f.trig_degree();
    const int top = std::min(n, d);
    if constexpr (is_exact_v<S>) {
        static const int cos_table[4] = {1, 0, -1, 0};
        static const int sin_table[4] = {0, 1, 0, -1};
        const int m = detail::quarter_of(x);
        S acc = f.trig_coeff(0).re;
        for (int j = 1; j <= top; ++j) {
            const int phase = (static_cast<long long>(j) * m) & 3;
            TrigCoeff<S> c = f.trig_coeff(j);
            S term = S(c.re * ratio<S>(2 * cos_table[phase]) -
                       c.im * ratio<S>(2 * sin_table[phase]));
            acc = S(acc + term);
        }
        return acc;
    } else {
        long double acc = f.trig_coeff(0).re;
        for (int j = 1; j <= top; ++j) {
            TrigCoeff<S> c = f.trig_coeff(j);
            double arg = 2.0 * std::numbers::pi * j * x;
            acc += 2.0 * (c.re * std::cos(arg) - c.im * std::sin(arg));
        }
        return static_cast<double>(acc);
    }
}

// S_n(f,x) = sum_{k<n} fhat(k) w_k(x) for a dyadic step function; S_0 = 0.
template <ScalarMode S>
S walsh_partial_sum(const FourierFunction<S>& f, int n, const S& x)
{
    f.require(FourierSystem::walsh_paley);
    if (n < 0)
        throw precondition_error("walsh_partial_sum: n must be >= 0");
    if (scalar_sign(x) < 0 || x >= ratio<S>(1))
        throw precondition_error("walsh_partial_sum: x must lie in [0,1)");
    const std::uint64_t cutoff =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(n), std::uint64_t{1} << f.levels());
    std::vector<int> digits = binary_digits(x, f.levels());
    typename scalar_traits<S>::accum acc{};
    for (std::uint64_t k = 0; k < cutoff; ++k) {
        int parity = 0;
        std::uint64_t bits = k;
        for (int j = 0; bits != 0; ++j, bits >>= 1)
            if (bits & 1u)
                parity ^= digits[static_cast<size_t>(j)];
        if (parity)
            acc += -f.walsh_coeff(k);
        else
            acc += f.walsh_coeff(k);
    }
    return scalar_traits<S>::finish(acc);
}

template <ScalarMode S>
S partial_sum(const FourierFunction<S>& f, int n, const S& x)
{
    return f.system() == FourierSystem::trigonometric ? trig_partial_sum(f, n, x)
                                                      : walsh_partial_sum(f, n, x);
}

// S_0(f,x) .. S_{N-1}(f,x) at a fixed point, directly reusable as a
// sequence prefix by the means module.
template <ScalarMode S>
struct PartialSumSequence {
    SeqPrefix<S> values;
    FourierSystem system;
    S point;
};

template <ScalarMode S>
PartialSumSequence<S> partial_sum_prefix(const FourierFunction<S>& f, int N, const S& x)
{
    if (N < 1)
        throw precondition_error("partial_sum_prefix: N must be >= 1");
    std::vector<S> sums;
    sums.reserve(static_cast<size_t>(N));
    if (f.system() == FourierSystem::trigonometric) {
        if (N - 1 > f.max_partial_sum_index())
            throw precondition_error(
                "partial_sum_prefix: sampled grid trusts coefficients only up to M/4 = " +
                std::to_string(f.trig_degree()) + "; supply at least 4n samples");
        for (int n = 0; n < N; ++n) {
            if (n > 0 && n > f.trig_degree())
                sums.push_back(sums.back()); // saturated: S_n = S_d
            else
                sums.push_back(trig_partial_sum(f, n, x));
        }
    } else {
        const std::uint64_t full = std::uint64_t{1} << f.levels();
        std::vector<int> digits = binary_digits(x, f.levels());
        S running = ratio<S>(0);
        for (int n = 0; n < N; ++n) {
            sums.push_back(running);
            const std::uint64_t k = static_cast<std::uint64_t>(n);
            if (k < full) {
                int parity = 0;
                std::uint64_t bits = k;
                for (int j = 0; bits != 0; ++j, bits >>= 1)
                    if (bits & 1u)
                        parity ^= digits[static_cast<size_t>(j)];
                const S& c = f.walsh_coeff(k);
                running = parity ? S(running - c) : S(running + c);
            }
        }
    }
    return {SeqPrefix<S>(std::move(sums)), f.system(), x};
}

// L_n(f,x) = (1/l_n) sum_{j<n} S_j(f,x)/(n-j), by materializing the
// partial-sum prefix and delegating to log_mean.
template <ScalarMode S>
S fourier_log_means(const FourierFunction<S>& f, int n, const S& x)
{
    if (n < 1)
        throw precondition_error("fourier_log_means: n must be >= 1");
    PartialSumSequence<S> seq = partial_sum_prefix(f, n, x);
    return log_mean(seq.values, n);
}

enum class SubseqNorm { harmonic, log_n };

// (1/Lambda_N) sum_{k<N} S_{n_k}(f,x)/(N-k) over an increasing index
// sequence, with Lambda_N = l_N (harmonic) or ln N (floating mode only).
template <ScalarMode S>
S subseq_log_means(const FourierFunction<S>& f, std::span<const int> subseq, int N, const S& x,
                   SubseqNorm norm)
{
    if (N < 1)
        throw precondition_error("subseq_log_means: N must be >= 1");
    if (static_cast<size_t>(N) > subseq.size())
        throw precondition_error("subseq_log_means: subsequence shorter than N");
    for (size_t k = 0; k < subseq.size(); ++k) {
        if (subseq[k] < 0 || (k > 0 && subseq[k] <= subseq[k - 1]))
            throw precondition_error("subseq_log_means: indices must be strictly increasing");
    }
    S lambda;
    if (norm == SubseqNorm::harmonic) {
        lambda = harmonic_number<S>(N);
    } else {
        if constexpr (is_exact_v<S>)
            throw precondition_error("subseq_log_means: ln-N normalization is floating-only");
        else {
            if (N < 2)
                throw precondition_error(
                    "subseq_log_means: ln-N normalization degenerates at N = 1");
            lambda = std::log(static_cast<double>(N));
        }
    }
    const int max_index = subseq[static_cast<size_t>(N - 1)];
    PartialSumSequence<S> seq = partial_sum_prefix(f, max_index + 1, x);
    typename scalar_traits<S>::accum acc{};
    for (int k = 0; k < N; ++k)
        acc += seq.values[subseq[static_cast<size_t>(k)]] * ratio<S>(1, N - k);
    S num = scalar_traits<S>::finish(acc);
    return S(num / lambda);
}

// ---------------------------------------------------------------------------
// Divergence probes: running suprema of |mean_n| over explicit sequences.

template <ScalarMode S>
struct ProbeSpec {
    bool log_means = true;
    std::optional<VaryingCesaroParams<S>> cesaro;
    int nmax = 0;
    std::vector<int> checkpoints; // defaults to powers of two plus nmax
};

template <ScalarMode S>
struct ProbeRow {
    int checkpoint;
    S sup_log{};
    bool cesaro_defined = false;
    S sup_cesaro{};
};

// Running sup_{n <= M} |mean_n| at each checkpoint M; nondecreasing in M by
// construction. The Cesaro column starts at the first row its alpha rule is
// defined for and reports 0 before any row has been evaluated.
template <ScalarMode S>
std::vector<ProbeRow<S>> divergence_probe(const SeqPrefix<S>& s, const ProbeSpec<S>& spec)
{
    if (spec.nmax < 2)
        throw precondition_error("divergence_probe: nmax must be >= 2");
    if (!spec.log_means && !spec.cesaro)
        throw precondition_error("divergence_probe: no mean family selected");
    if (spec.log_means && s.size() < spec.nmax)
        throw precondition_error("divergence_probe: prefix shorter than nmax");
    if (spec.cesaro && s.size() < spec.nmax + 1)
        throw precondition_error("divergence_probe: Cesaro column needs nmax+1 entries");

    std::vector<int> marks = spec.checkpoints;
    if (marks.empty()) {
        for (int m = 1; m <= spec.nmax; m *= 2) {
            marks.push_back(m);
            if (m > spec.nmax / 2)
                break;
        }
        if (marks.back() != spec.nmax)
            marks.push_back(spec.nmax);
    }
    for (size_t i = 0; i < marks.size(); ++i)
        if (marks[i] < 1 || marks[i] > spec.nmax || (i > 0 && marks[i] <= marks[i - 1]))
            throw precondition_error("divergence_probe: checkpoints must be increasing in [1,nmax]");

    std::vector<ProbeRow<S>> table;
    table.reserve(marks.size());

    typename scalar_traits<S>::accum harmonic{}; // l_n, built incrementally
    S sup_log = ratio<S>(0);
    S sup_ces = ratio<S>(0);
    bool ces_any = false;
    size_t next_mark = 0;

    for (int n = 1; n <= spec.nmax && next_mark < marks.size(); ++n) {
        if (spec.log_means) {
            harmonic += ratio<S>(1, n);
            typename scalar_traits<S>::accum acc{};
            for (int k = 0; k < n; ++k)
                acc += s[k] * ratio<S>(1, n - k);
            S ln = S(scalar_traits<S>::finish(acc) / scalar_traits<S>::finish(harmonic));
            S a = scalar_abs(ln);
            if (a > sup_log)
                sup_log = a;
        }
        if (spec.cesaro && n >= spec.cesaro->first_row()) {
            const S alpha = spec.cesaro->alpha(n);
            // fused sigma_n: A_i^{alpha-1} paired with s_{n-i}, plus the
            // normalizer A_n^alpha, all in one pass
            S inner = ratio<S>(1);
            S norm = ratio<S>(1);
            typename scalar_traits<S>::accum acc{};
            acc += s[n]; // i = 0 term, A_0 = 1
            for (int i = 1; i <= n; ++i) {
                inner = S(inner * S(alpha - ratio<S>(1) + ratio<S>(i)) / ratio<S>(i));
                norm = S(norm * S(alpha + ratio<S>(i)) / ratio<S>(i));
                acc += inner * s[n - i];
            }
            S sn = S(scalar_traits<S>::finish(acc) / norm);
            S a = scalar_abs(sn);
            ces_any = true;
            if (a > sup_ces)
                sup_ces = a;
        }
        if (n == marks[next_mark]) {
            table.push_back({n, sup_log, ces_any, sup_ces});
            ++next_mark;
        }
    }
    return table;
}

// Probe the partial-sum sequence of f at the point x.
template <ScalarMode S>
std::vector<ProbeRow<S>> divergence_probe(const FourierFunction<S>& f, const S& x,
                                          const ProbeSpec<S>& spec)
{
    const int need = spec.cesaro ? spec.nmax + 1 : spec.nmax;
    PartialSumSequence<S> seq = partial_sum_prefix(f, need, x);
    return divergence_probe(seq.values, spec);
}

} // namespace summab
