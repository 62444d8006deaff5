#pragma once

#include <cstdint>
#include <vector>

#include "rsmsr/errors.hpp"

namespace rsmsr {

/// The division chain
///   p       = a_0 s   + b_1
///   s       = a_1 b_1 + b_2
///   b_1     = a_2 b_2 + b_3
///   ...
///   b_{m-1} = a_m b_m
/// with b_m = gcd(p, s). quotients = a_0..a_m, remainders = b_1..b_m
/// (remainders is empty when s divides p, i.e. m = 0).
struct EuclidChain {
    uint32_t p = 0, s = 0;
    std::vector<uint32_t> quotients;
    std::vector<uint32_t> remainders;

    uint32_t m() const { return static_cast<uint32_t>(remainders.size()); }
    uint32_t a(uint32_t t) const { return quotients.at(t); }
    /// b_t with the convention b_0 = s.
    uint32_t b(uint32_t t) const { return t == 0 ? s : remainders.at(t - 1); }
    uint32_t gcd() const { return m() == 0 ? s : remainders.back(); }
};

EuclidChain euclid_chain(uint32_t p, uint32_t s);

struct Square {
    uint32_t row = 0, col = 0, side = 0;
    friend bool operator==(const Square&, const Square&) = default;
};

/// Recursive tiling of the h x w index rectangle by squares: place
/// floor(max/min) squares of side min(h,w) along the longer side, then
/// recurse on the residual rectangle. `squares` is in placement order.
struct SquarePartition {
    uint32_t h = 0, w = 0;
    std::vector<Square> squares;
};

SquarePartition square_partition(uint32_t h, uint32_t w);

/// Partition of the residual s x b_1 rectangle that the chain induces after
/// the a_0 leading s x s squares; empty when s divides p.
SquarePartition residual_partition(const EuclidChain& chain);

/// Local column coordinates j^(0), j^(2), j^(4), ... of global residual
/// column j as it descends the horizontal decomposition steps:
/// j^(2t) = j^(2t-2) mod b_{2t}. The list stops after the first entry whose
/// preceding quotient floor(j^(2t-2)/b_{2t}) differs from a_{2t} (the column
/// terminated in a placed square) or when the chain runs out.
std::vector<uint32_t> local_coords(uint32_t j, const EuclidChain& chain);

}  // namespace rsmsr
