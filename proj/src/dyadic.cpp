#include "summab/dyadic.hpp"

#include "summab/scalar.hpp"

#include <bit>

namespace summab {

std::vector<int> binary_coefficients(std::uint64_t n)
{
    std::vector<int> eps;
    do {
        eps.push_back(static_cast<int>(n & 1u));
        n >>= 1;
    } while (n != 0);
    eps.push_back(0); // eps_j = 0 for j past the top bit
    return eps;
}

int variation(std::uint64_t n)
{
    if (n == 0)
        throw precondition_error("variation: defined for n >= 1");
    std::vector<int> eps = binary_coefficients(n);
    int v = eps[0];
    for (size_t j = 1; j < eps.size(); ++j)
        v += eps[j] >= eps[j - 1] ? eps[j] - eps[j - 1] : eps[j - 1] - eps[j];
    return v;
}

std::vector<int> spectrum(std::uint64_t n)
{
    std::vector<int> sp;
    for (int j = 0; n != 0; ++j, n >>= 1)
        if (n & 1u)
            sp.push_back(j);
    return sp;
}

bool nested_pair(std::uint64_t a, std::uint64_t b)
{
    if (a == 0)
        throw precondition_error("nested_pair: entries must be >= 1");
    // low bits of b up to and including the top bit of a must reproduce a
    int top = std::bit_width(a); // top bit index + 1
    std::uint64_t mask = top >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << top) - 1);
    return (b & mask) == a;
}

NestedCheck is_nested(std::span<const std::uint64_t> seq)
{
    if (seq.size() < 2)
        throw precondition_error("is_nested: need at least two elements");
    for (size_t k = 0; k < seq.size(); ++k) {
        if (seq[k] == 0)
            throw precondition_error("is_nested: entries must be >= 1");
        if (k > 0 && seq[k] <= seq[k - 1])
            throw precondition_error("is_nested: sequence must be strictly increasing");
    }
    for (size_t k = 1; k < seq.size(); ++k)
        if (!nested_pair(seq[k - 1], seq[k]))
            return {false, static_cast<int>(k)};
    return {true, -1};
}

std::vector<std::uint64_t> gen_nested_unbounded_variation(int K)
{
    if (K < 1)
        throw precondition_error("gen_nested_unbounded_variation: K must be >= 1");
    if (K > 32)
        throw ceiling_error("gen_nested_unbounded_variation: K <= 32 (64-bit range)");
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<size_t>(K));
    std::uint64_t v = 0;
    for (int k = 0; k < K; ++k) {
        v = 4 * v + 1; // appends the next bit at position 2k
        out.push_back(v);
    }
    return out;
}

} // namespace summab
