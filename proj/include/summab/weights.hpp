#pragma once

#include "summab/scalar.hpp"

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace summab {

// Noerlund weight sequence q_n with cached prefix sums Q_n = q_0 + ... + q_n.
//
// When the Hardy-hypothesis flag is set the scheme promises q_0 = 1 and
// q_n > 0 (so the Q_n are strictly increasing); violations throw as the
// values are produced. Schemes built for hypothesis *checking* leave the
// flag off and may carry arbitrary finite weights, including the q_0 = 0
// case that the reciprocal-series constructor must reject itself.
//
// The q/Q caches grow on first use. Either precompute via ensure() before
// sharing a scheme across threads or keep each scheme thread-local.
template <ScalarMode S>
class WeightScheme {
public:
    WeightScheme(std::string name, std::function<S(int)> rule, bool hardy_flag)
        : name_(std::move(name)), rule_(std::move(rule)), hardy_(hardy_flag)
    {
    }

    // q_n = 1/(n+1); Q_n is then the harmonic number l_{n+1}.
    static WeightScheme logarithmic()
    {
        return WeightScheme("logarithmic", [](int n) { return ratio<S>(1, n + 1); }, true);
    }

    static WeightScheme ones()
    {
        return WeightScheme("ones", [](int n) { (void)n; return ratio<S>(1); }, true);
    }

    // q_n = r^n, r > 0.
    static WeightScheme geometric(const S& r)
    {
        if (scalar_sign(r) <= 0)
            throw precondition_error("WeightScheme::geometric: ratio must be positive");
        return WeightScheme(
            "geometric:" + format_scalar(r),
            [r](int n) {
                S v = ratio<S>(1);
                for (int i = 0; i < n; ++i)
                    v = S(v * r);
                return v;
            },
            true);
    }

    // Arbitrary finite weight list; queries past the end throw.
    static WeightScheme from_values(std::vector<S> values, std::string name = "custom",
                                    bool hardy_flag = false)
    {
        auto data = std::make_shared<std::vector<S>>(std::move(values));
        return WeightScheme(
            std::move(name),
            [data](int n) {
                if (n < 0 || static_cast<size_t>(n) >= data->size())
                    throw precondition_error("WeightScheme: weight index out of range");
                return (*data)[static_cast<size_t>(n)];
            },
            hardy_flag);
    }

    const std::string& name() const { return name_; }
    bool hardy_flag() const { return hardy_; }

    const S& q(int n) const
    {
        ensure(n);
        return q_[static_cast<size_t>(n)];
    }

    const S& Q(int n) const
    {
        ensure(n);
        return Q_[static_cast<size_t>(n)];
    }

    // Precompute q_0..q_n, Q_0..Q_n (single-writer initialization).
    void ensure(int n) const
    {
        if (n < 0)
            throw precondition_error("WeightScheme: negative index");
        while (static_cast<int>(q_.size()) <= n) {
            int k = static_cast<int>(q_.size());
            S v = rule_(k);
            if (!scalar_finite(v))
                throw precondition_error("WeightScheme '" + name_ + "': weight q_" +
                                         std::to_string(k) + " is not finite");
            if (hardy_) {
                if (k == 0 && v != ratio<S>(1))
                    throw precondition_error("WeightScheme '" + name_ +
                                             "': Hardy flag requires q_0 = 1");
                if (scalar_sign(v) <= 0)
                    throw precondition_error("WeightScheme '" + name_ +
                                             "': Hardy flag requires q_n > 0");
            }
            q_.push_back(v);
            Q_.push_back(k == 0 ? v : S(Q_.back() + v));
        }
    }

private:
    std::string name_;
    std::function<S(int)> rule_;
    bool hardy_;
    mutable std::vector<S> q_;
    mutable std::vector<S> Q_;
};

} // namespace summab
