#pragma once

// Philox4x32-10 counter-based random stream (Salmon et al., SC'11).  Output
// is a pure function of (seed, trial, role, position), so parallel Monte
// Carlo trials draw from independent streams whose values do not depend on
// scheduling or worker count.

#include <array>
#include <cmath>
#include <cstdint>

namespace gevd {

class Philox4x32 {
public:
    using Block = std::array<std::uint32_t, 4>;

    Philox4x32(std::uint64_t seed, std::uint64_t trial, std::uint32_t role)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          base_{0u, 0u, static_cast<std::uint32_t>(trial),
                (static_cast<std::uint32_t>(trial >> 32) & 0x00FFFFFFu) | (role << 24)} {}

    // Generates the block at the current position and advances.
    Block next_block() {
        Block ctr = base_;
        ctr[0] = static_cast<std::uint32_t>(block_);
        ctr[1] ^= static_cast<std::uint32_t>(block_ >> 32);
        ++block_;
        return encrypt(ctr, key_);
    }

    // Uniform double in (0,1], 53 random bits.
    double uniform() {
        if (have_ == 0) {
            buf_ = next_block();
            have_ = 2;
        }
        --have_;
        const std::uint64_t hi = buf_[2 * have_];
        const std::uint64_t lo = buf_[2 * have_ + 1];
        const std::uint64_t bits = (hi << 32) | lo;
        return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; pairs are cached.
    double gaussian() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        cached_ = r * std::sin(a);
        has_cached_ = true;
        return r * std::cos(a);
    }

    static Block encrypt(Block ctr, std::array<std::uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t m0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
            const std::uint64_t m1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
            ctr = {static_cast<std::uint32_t>(m1 >> 32) ^ ctr[1] ^ key[0],
                   static_cast<std::uint32_t>(m1),
                   static_cast<std::uint32_t>(m0 >> 32) ^ ctr[3] ^ key[1],
                   static_cast<std::uint32_t>(m0)};
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        return ctr;
    }

private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    std::array<std::uint32_t, 2> key_;
    Block base_;
    std::uint64_t block_ = 0;
    Block buf_{};
    int have_ = 0;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

// Stream roles keep draws for different purposes statistically independent
// even under a shared (seed, trial) pair.
namespace stream_role {
inline constexpr std::uint32_t signal_snapshots = 1;
inline constexpr std::uint32_t noise_snapshots = 2;
inline constexpr std::uint32_t calibration = 3;
}  // namespace stream_role

}  // namespace gevd
