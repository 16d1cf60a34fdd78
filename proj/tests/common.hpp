#pragma once

#include <random>
#include <string>

#include "lrc/gf2.hpp"

namespace testdata {

// (10,4,4) code with three declared repair sets; the workhorse fixture.
inline const char* kExample1 =
    "1 0 0 0 1 0 1 1 1 1\n"
    "0 1 0 0 1 1 0 1 1 1\n"
    "0 0 1 0 0 1 0 1 0 1\n"
    "0 0 0 1 0 0 1 0 1 1\n";

inline lrc::BitMatrix example1() { return lrc::BitMatrix::parse(kExample1); }

inline lrc::Mask Z1() { return lrc::gf2::parse_mask_1based("1,2,3,5,6,8", 10); }
inline lrc::Mask Z2() { return lrc::gf2::parse_mask_1based("2,3,6,7,9,10", 10); }
inline lrc::Mask Z3() { return lrc::gf2::parse_mask_1based("1,4,6,7,8,10", 10); }

inline std::vector<lrc::Mask> example1_sets() { return {Z1(), Z2(), Z3()}; }

// columns e1, e2, e1+e2: the [3,2] parity code, cyclic flats {0, E}
inline lrc::BitMatrix parity3() { return lrc::BitMatrix::parse("1 0 1\n0 1 1\n"); }

inline lrc::Mask random_subset(std::mt19937_64& rng, lrc::Mask ground) {
    return rng() & ground;
}

}  // namespace testdata
