#pragma once

#include "holotype/matrix.hpp"

#include <cstdint>
#include <random>
#include <utility>

namespace holotype {

/// SplitMix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of the stream that sample `index` of a run seeded with `seed` draws
/// from. Depends only on (seed, index), never on scheduling.
constexpr std::uint64_t sample_stream_seed(std::uint64_t seed, std::uint64_t index)
{
    return splitmix64(seed ^ splitmix64(index + 0x5eedULL));
}

/// Deterministic rational source on top of std::mt19937_64, whose output
/// sequence is fixed by the standard. Ranges are reduced with a modulus
/// rather than std::uniform_int_distribution, whose algorithm is
/// implementation-defined; the bias for ranges this small is below 2^-59.
///
/// Rationals: numerator uniform in [-9, 9], denominator uniform in [1, 9].
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t stream_seed) : engine_(stream_seed) {}

    /// Uniform in [lo, hi].
    long integer(long lo, long hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(engine_() % span);
    }

    Rat rational()
    {
        const long num = integer(-9, 9);
        const long den = integer(1, 9);
        return make_rat(num, den);
    }

    Rat sign() { return integer(0, 1) ? Rat(1) : Rat(-1); }

    Vec vector(std::size_t n)
    {
        Vec v(n);
        for (auto& x : v) x = rational();
        return v;
    }

    Mat matrix(std::size_t rows, std::size_t cols)
    {
        Mat m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational();
        return m;
    }

    Mat antisymmetric(std::size_t n)
    {
        Mat m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = r + 1; c < n; ++c) {
                m(r, c) = rational();
                m(c, r) = -m(r, c);
            }
        return m;
    }

    /// Fisher-Yates; std::shuffle is avoided for the same portability reason.
    template <typename Container>
    void shuffle(Container& items)
    {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(integer(0, static_cast<long>(i - 1)));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace holotype
