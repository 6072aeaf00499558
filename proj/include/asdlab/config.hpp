#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include "asdlab/arith.hpp"

namespace asdlab {

struct RunConfig {
    int prec_w = 2400;              // default series precision in w for n = 6
    u64 pmin = 5, pmax = 53;
    double naive_q2_cap = 1e9;      // naive counting allowed when q^2 <= cap
    u64 bsgs_q_cap = 1000000;       // bsgs allowed when q <= cap
    std::string cache_dir;
    std::string format = "json";
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());

    static RunConfig defaults() {
        RunConfig c;
        if (const char* e = std::getenv("ASDLAB_CACHE")) c.cache_dir = e;
        return c;
    }
};

} // namespace asdlab
