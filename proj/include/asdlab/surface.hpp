#pragma once

#include <string>
#include <vector>
#include "asdlab/config.hpp"
#include "asdlab/finite_field.hpp"

namespace asdlab {

// Fiber of the pencil at parameter t (model depends on t_n only through t = t_n^n):
// Y^2 = X^3 + A(t) X + B(t),
//   A(t) = -(1 + 12 t + 14 t^2 - 12 t^3 + t^4)/48
//   B(t) =  (1 + 18 t + 75 t^2 + 75 t^4 - 18 t^5 + t^6)/864
// Discriminant (c4^3 - c6^2)/1728 = t^5 (t^2 - 11 t - 1).
struct FiberCurve {
    const FqCtx* F = nullptr;
    FqElem A, B;
    FqElem t;
    bool singular = false;
};

FiberCurve fiber_at(const FqCtx& F, const FqElem& t);

enum class CountMethod { Naive, BSGS, Auto };

// a = q + 1 - #E(F_q) for nonsingular fibers; for singular fibers the stored value
// is the quadratic character sum sum_x chi2(x^3+Ax+B) (in {-1,0,1}).
i64 trace_a(const FiberCurve& c, CountMethod method);

struct FiberTraceTable {
    u64 p = 0;
    int r = 1;
    u64 q = 0;
    u64 gen_code = 0;                 // encoding of the field generator
    std::string method;
    std::vector<i64> a;               // indexed by exponent e, t = gen^e
    std::vector<std::uint8_t> sing;
    u64 checksum() const;
};

FiberTraceTable count_all_fibers(const FqCtx& F, CountMethod method, const RunConfig& cfg);

// cache round trip; load returns false on miss or corruption (with a warning)
bool cache_load(const RunConfig& cfg, u64 q, FiberTraceTable& out);
void cache_store(const RunConfig& cfg, const FiberTraceTable& t);
std::vector<std::string> cache_list(const RunConfig& cfg);
void cache_clear(const RunConfig& cfg);

} // namespace asdlab
