#pragma once

// Named sequence presets for experiments plus seeded random prefixes.
// Random values are derived from raw mt19937_64 output so the same seed
// yields the same prefix on every platform.

#include "summab/means.hpp"
#include "summab/scalar.hpp"
#include "summab/seq_prefix.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace summab {

inline const char* sequence_preset_catalog()
{
    return "linear (s_k = k), ones (s_k = 1), bounded (s_k = (-1)^k), "
           "dyadic-spikes (s_{2^j} = j, else 0), log-spikes (s_{2^j} = l_{2^j}, else 0), "
           "random-unit (seeded, entries p/1024 in [-1,1]), "
           "random-rational (seeded, entries p/q with |p| <= 1000, q <= 1000)";
}

// Entry in [-1, 1] with denominator 1024.
template <ScalarMode S>
S random_unit_entry(std::mt19937_64& eng)
{
    long p = static_cast<long>(eng() % 2049u) - 1024;
    return ratio<S>(p, 1024);
}

// Entry p/q with |p| <= 1000, 1 <= q <= 1000.
template <ScalarMode S>
S random_rational_entry(std::mt19937_64& eng)
{
    long p = static_cast<long>(eng() % 2001u) - 1000;
    long q = 1 + static_cast<long>(eng() % 1000u);
    return ratio<S>(p, q);
}

template <ScalarMode S>
SeqPrefix<S> random_unit_prefix(std::uint64_t seed, int length)
{
    std::mt19937_64 eng(seed);
    std::vector<S> v;
    v.reserve(static_cast<size_t>(length));
    for (int k = 0; k < length; ++k)
        v.push_back(random_unit_entry<S>(eng));
    return SeqPrefix<S>(std::move(v));
}

template <ScalarMode S>
SeqPrefix<S> random_rational_prefix(std::uint64_t seed, int length)
{
    std::mt19937_64 eng(seed);
    std::vector<S> v;
    v.reserve(static_cast<size_t>(length));
    for (int k = 0; k < length; ++k)
        v.push_back(random_rational_entry<S>(eng));
    return SeqPrefix<S>(std::move(v));
}

template <ScalarMode S>
SeqPrefix<S> make_sequence(const std::string& preset, int length, std::uint64_t seed)
{
    if (length < 1)
        throw precondition_error("make_sequence: length must be >= 1");
    if (preset == "random-unit")
        return random_unit_prefix<S>(seed, length);
    if (preset == "random-rational")
        return random_rational_prefix<S>(seed, length);

    std::vector<S> v;
    v.reserve(static_cast<size_t>(length));
    if (preset == "linear") {
        for (int k = 0; k < length; ++k)
            v.push_back(ratio<S>(k));
    } else if (preset == "ones") {
        for (int k = 0; k < length; ++k)
            v.push_back(ratio<S>(1));
    } else if (preset == "bounded") {
        for (int k = 0; k < length; ++k)
            v.push_back(ratio<S>(k % 2 == 0 ? 1 : -1));
    } else if (preset == "dyadic-spikes") {
        for (int k = 0; k < length; ++k)
            v.push_back(ratio<S>(0));
        for (int j = 0; (1 << j) < length; ++j)
            v[static_cast<size_t>(1 << j)] = ratio<S>(j);
    } else if (preset == "log-spikes") {
        for (int k = 0; k < length; ++k)
            v.push_back(ratio<S>(0));
        for (int j = 0; (1 << j) < length; ++j)
            v[static_cast<size_t>(1 << j)] = harmonic_number<S>(1 << j);
    } else {
        throw precondition_error("make_sequence: unknown preset '" + preset +
                                 "'; available: " + sequence_preset_catalog());
    }
    return SeqPrefix<S>(std::move(v));
}

} // namespace summab
