#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace grateid {

/// All randomized behaviour in the library runs off mt19937_64 streams that
/// are derived from one master seed plus a stream name. The helpers below
/// avoid std::uniform_*_distribution / std::shuffle, whose output is
/// implementation-defined; with these, equal seeds give equal results on any
/// conforming standard library.
using Rng = std::mt19937_64;

/// Derive a child seed from (master, stream-name). FNV-1a over the name,
/// mixed with SplitMix64.
std::uint64_t derive_seed(std::uint64_t master, std::string_view stream);

inline Rng make_rng(std::uint64_t master, std::string_view stream)
{
    return Rng(derive_seed(master, stream));
}

/// Uniform draw from [0, n), unbiased via rejection sampling.
std::size_t uniform_index(Rng& rng, std::size_t n);

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_real(Rng& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_real(Rng& rng, double lo, double hi)
{
    return lo + (hi - lo) * uniform_real(rng);
}

/// Standard normal via Box-Muller (two engine draws per variate).
double normal(Rng& rng);

/// n iid standard normal draws.
Eigen::ArrayXd normal_array(Rng& rng, Eigen::Index n);

/// Deterministic Fisher-Yates shuffle.
template <class T>
void shuffle(std::vector<T>& v, Rng& rng)
{
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = uniform_index(rng, i);
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace grateid
