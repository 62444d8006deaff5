#include "rsmsr/euclid_partition.hpp"

namespace rsmsr {

EuclidChain euclid_chain(uint32_t p, uint32_t s) {
    require(s >= 1 && p > s, Errc::InvalidArguments, "need p > s >= 1");
    EuclidChain c;
    c.p = p;
    c.s = s;
    uint32_t hi = p, lo = s;
    for (;;) {
        c.quotients.push_back(hi / lo);
        uint32_t rem = hi % lo;
        if (rem == 0) break;
        c.remainders.push_back(rem);
        hi = lo;
        lo = rem;
    }
    return c;
}

namespace {

void tile(uint32_t row0, uint32_t col0, uint32_t h, uint32_t w, std::vector<Square>& out) {
    if (h == 0 || w == 0) return;
    if (w >= h) {
        uint32_t count = w / h;
        for (uint32_t i = 0; i < count; ++i) out.push_back({row0, col0 + i * h, h});
        tile(row0, col0 + count * h, h, w % h, out);
    } else {
        uint32_t count = h / w;
        for (uint32_t i = 0; i < count; ++i) out.push_back({row0 + i * w, col0, w});
        tile(row0 + count * w, col0, h % w, w, out);
    }
}

}  // namespace

SquarePartition square_partition(uint32_t h, uint32_t w) {
    require(h >= 1 && w >= 1, Errc::InvalidArguments, "need h, w >= 1");
    SquarePartition part;
    part.h = h;
    part.w = w;
    tile(0, 0, h, w, part.squares);
    return part;
}

SquarePartition residual_partition(const EuclidChain& chain) {
    if (chain.m() == 0) return SquarePartition{chain.s, 0, {}};
    return square_partition(chain.s, chain.b(1));
}

std::vector<uint32_t> local_coords(uint32_t j, const EuclidChain& chain) {
    require(chain.m() >= 1 && j < chain.b(1), Errc::IndexOutOfRange,
            "column index must lie in [0, b_1)");
    std::vector<uint32_t> coords = {j};
    for (uint32_t t = 1; 2 * t <= chain.m(); ++t) {
        uint32_t prev = coords.back();
        uint32_t b2t = chain.b(2 * t);
        coords.push_back(prev % b2t);
        if (prev / b2t != chain.a(2 * t)) break;  // terminated in a placed square
    }
    return coords;
}

}  // namespace rsmsr
