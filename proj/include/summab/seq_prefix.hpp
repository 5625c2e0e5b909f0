#pragma once

#include "summab/scalar.hpp"

#include <utility>
#include <vector>

namespace summab {

// Finite prefix (s_0, ..., s_{N-1}) of a real sequence. The scalar mode is
// carried by the template parameter, so one prefix cannot mix exact and
// floating entries. Immutable after construction.
template <ScalarMode S>
class SeqPrefix {
public:
    explicit SeqPrefix(std::vector<S> values)
        : values_(std::move(values))
    {
        if (values_.empty())
            throw precondition_error("SeqPrefix: length must be >= 1");
        for (const S& v : values_)
            if (!scalar_finite(v))
                throw precondition_error("SeqPrefix: entries must be finite");
    }

    static SeqPrefix constant(const S& value, int n)
    {
        if (n < 1)
            throw precondition_error("SeqPrefix::constant: length must be >= 1");
        return SeqPrefix(std::vector<S>(static_cast<size_t>(n), value));
    }

    int size() const { return static_cast<int>(values_.size()); }

    const S& operator[](int k) const { return values_[static_cast<size_t>(k)]; }

    const std::vector<S>& values() const { return values_; }

private:
    std::vector<S> values_;
};

} // namespace summab
