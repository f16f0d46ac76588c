#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace nazgsa {

/// Tags that separate independent random streams derived from one seed.
enum class StreamDomain : std::uint8_t {
    GaussianPoints = 1,
    FacetNormals = 2,
    FacetSurface = 3,
    SphereDirections = 4,
    PolytopeBatch = 5,
};

/// Stream identifier: domain in the top byte, a 56-bit index below it.
constexpr std::uint64_t stream_id(StreamDomain domain, std::uint64_t index) {
    return (static_cast<std::uint64_t>(domain) << 56) | (index & ((std::uint64_t{1} << 56) - 1));
}

/// Facet surface streams need both a facet and a chunk index.
constexpr std::uint64_t facet_chunk_index(std::uint64_t facet, std::uint64_t chunk) {
    return (facet << 28) | (chunk & ((std::uint64_t{1} << 28) - 1));
}

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// The key is the user seed and the upper half of the counter is a stream
/// id, so any (seed, stream) pair yields an independent, reproducible
/// sequence without shared state. Satisfies UniformRandomBitGenerator.
class Philox4x32 {
  public:
    using result_type = std::uint32_t;

    Philox4x32(std::uint64_t seed, std::uint64_t stream)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          stream_{static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)} {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        if (lane_ == 4) {
            refill();
        }
        return block_[lane_++];
    }

    /// Uniform double in the open interval (0, 1) with 53 random bits.
    double uniform() {
        const std::uint64_t hi = (*this)();
        const std::uint64_t lo = (*this)();
        const std::uint64_t bits = ((hi << 32) | lo) >> 11;
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal variate (Box-Muller, second value cached).
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

  private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    void refill() {
        std::array<std::uint32_t, 4> ctr{static_cast<std::uint32_t>(counter_),
                                         static_cast<std::uint32_t>(counter_ >> 32), stream_[0],
                                         stream_[1]};
        std::array<std::uint32_t, 2> key = key_;
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                   static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                   static_cast<std::uint32_t>(p0)};
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        block_ = ctr;
        ++counter_;
        lane_ = 0;
    }

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 2> stream_;
    std::uint64_t counter_ = 0;
    std::array<std::uint32_t, 4> block_{};
    int lane_ = 4;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace nazgsa
