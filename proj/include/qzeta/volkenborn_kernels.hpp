#pragma once

#include "qzeta/rational.hpp"

#include <cstdint>
#include <vector>

namespace qzeta {

/// Raw moment sums  sum_{x=0}^{count-1} weight(x) * base^x * x^k  (mod p^W)
/// for k = 0..max_moment, the inner loop of every Volkenborn approximant.
struct MomentJob {
    std::int64_t p = 2;
    long work_precision = 1;          // W
    Integer base = 1;                 // unit mod p^W
    std::int64_t count = 0;
    int max_moment = 0;
    std::vector<int> weights;         // periodic weight in {-1,0,1}; empty = all ones
};

// Straight-line reference loop.
std::vector<Integer> moment_sums_serial(const MomentJob& job);

// OpenMP version: the x-range is split into contiguous blocks, each block
// seeds base^x with a modular power and the per-thread partial sums are
// reduced modulo p^W. Results are identical to the serial loop.
std::vector<Integer> moment_sums_parallel(const MomentJob& job);

} // namespace qzeta
