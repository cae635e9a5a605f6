#include "evscan/rng.hpp"

#include "evscan/normal.hpp"

namespace evscan {
namespace {

constexpr std::uint32_t kMult0 = 0xD2511F53u;
constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

}  // namespace

Philox4x32::Block Philox4x32::operator()(Block ctr) const {
    Key key = key_;
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMult0, ctr[0], hi0, lo0);
        mulhilo(kMult1, ctr[2], hi1, lo1);
        ctr = Block{hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

NormalStream::NormalStream(SeedSpec seed)
    : cipher_(Philox4x32::Key{static_cast<std::uint32_t>(seed.master_seed),
                              static_cast<std::uint32_t>(seed.master_seed >> 32)}),
      rep_lo_(static_cast<std::uint32_t>(seed.replication)),
      rep_hi_(static_cast<std::uint32_t>(seed.replication >> 32)) {}

void NormalStream::refill() {
    const Philox4x32::Block out = cipher_(Philox4x32::Block{
        static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
        static_cast<std::uint32_t>(rep_lo_), static_cast<std::uint32_t>(rep_hi_)});
    ++block_;
    buffer_[0] = (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
    buffer_[1] = (static_cast<std::uint64_t>(out[3]) << 32) | out[2];
    available_ = 2;
}

double NormalStream::uniform() {
    if (available_ == 0) refill();
    const std::uint64_t bits = buffer_[2 - available_];
    --available_;
    // 53 high bits, centered on the lattice: u in (0, 1) strictly.
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

double NormalStream::normal() {
    return inverse_std_normal_cdf(uniform());
}

}  // namespace evscan
