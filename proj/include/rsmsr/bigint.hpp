#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rsmsr {

/// Unsigned big integer, just enough for exact products of prime lists.
class BigUint {
public:
    BigUint() : limbs_{0} {}
    explicit BigUint(uint64_t v) : limbs_{v} {}

    BigUint& operator*=(uint64_t m) {
        unsigned __int128 carry = 0;
        for (auto& limb : limbs_) {
            unsigned __int128 cur = static_cast<unsigned __int128>(limb) * m + carry;
            limb = static_cast<uint64_t>(cur);
            carry = cur >> 64;
        }
        while (carry) {
            limbs_.push_back(static_cast<uint64_t>(carry));
            carry >>= 64;
        }
        return *this;
    }

    bool operator==(const BigUint& rhs) const { return limbs_ == rhs.limbs_; }

    std::string to_string() const {
        std::vector<uint64_t> work(limbs_);
        std::string out;
        auto all_zero = [&] {
            for (uint64_t w : work)
                if (w) return false;
            return true;
        };
        if (all_zero()) return "0";
        while (!all_zero()) {
            // divide by 1e9, collecting the remainder as nine digits
            uint64_t rem = 0;
            for (size_t i = work.size(); i-- > 0;) {
                unsigned __int128 cur = (static_cast<unsigned __int128>(rem) << 64) | work[i];
                work[i] = static_cast<uint64_t>(cur / 1000000000u);
                rem = static_cast<uint64_t>(cur % 1000000000u);
            }
            std::string chunk = std::to_string(rem);
            if (all_zero()) {
                out.insert(0, chunk);
            } else {
                out.insert(0, std::string(9 - chunk.size(), '0') + chunk);
            }
        }
        return out;
    }

private:
    std::vector<uint64_t> limbs_;  // little-endian base 2^64
};

}  // namespace rsmsr
