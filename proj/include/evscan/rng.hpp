#pragma once

#include <array>
#include <cstdint>

namespace evscan {

/// Identifies one reproducible stream. Distinct (master_seed, replication)
/// pairs own disjoint counter spaces of the same keyed cipher, so their
/// streams are independent; the same pair replays the identical stream on
/// every run and thread schedule.
struct SeedSpec {
    std::uint64_t master_seed;
    std::uint64_t replication;
};

/// Philox 4x32-10 counter-based generator (Salmon et al., SC'11 constants).
class Philox4x32 {
public:
    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    explicit Philox4x32(Key key) : key_(key) {}

    Block operator()(Block counter) const;

private:
    Key key_;
};

/// Uniform and standard-normal draws for one SeedSpec. Uniforms are built
/// from 53 high bits of each 64-bit word, offset into the open interval
/// (0,1); normals are produced by inversion (PPND16 quantile), one normal
/// per uniform.
class NormalStream {
public:
    explicit NormalStream(SeedSpec seed);

    double uniform();
    double normal();

private:
    void refill();

    Philox4x32 cipher_;
    std::uint64_t rep_lo_, rep_hi_;
    std::uint64_t block_ = 0;
    std::array<std::uint64_t, 2> buffer_{};
    int available_ = 0;
};

}  // namespace evscan
