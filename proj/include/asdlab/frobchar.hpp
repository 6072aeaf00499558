#pragma once

#include "asdlab/cyclotomic.hpp"
#include "asdlab/surface.hpp"

namespace asdlab {

// sum over t in F_q^* of chi_j(t) a_t with chi_j(g^e) = w_n^{j e};
// singular entries weighted by sing_weight (the stored singular value is the
// raw character sum; the semisimple trace is its negative)
CyclotomicInt twisted_sum(int n, int j, const FiberTraceTable& T, int sing_weight = 1);

struct CalibrationRecord {
    int eps = 0;      // global sign
    int sigma = 0;    // weight applied to stored singular values
    std::vector<std::string> anchors;
};

// determines (eps, sigma) against the known anchors and freezes the record
const CalibrationRecord& calibrate(const RunConfig& cfg);

// Tr(F_q | W_j) via the calibrated convention
CyclotomicInt frob_trace(int n, int j, const FiberTraceTable& T, const CalibrationRecord& cal);

struct WjCharpoly {
    int n = 0, j = 0, r = 1;
    u64 p = 0, q = 0;
    CyclotomicInt A{1};    // trace, in Z[w_n]
    i64 B = 0;             // determinant (validated rational integer)
    bool B_forced = false; // true when p^{2r} exceeded the counting budget
};

// Char(W_j, F_p^r)(S) = S^2 - A S + B; H_j(T) = T^{2r} - A T^r + B
WjCharpoly charpoly_Wj(int n, int j, u64 p, const RunConfig& cfg);

struct CharPolyReport {
    int n = 0;
    u64 p = 0;
    int r = 1;
    std::vector<i64> coeffs;   // ascending, degree 2*phi(n) for the new part
    std::vector<WjCharpoly> factors;
    bool any_forced = false;
};

CharPolyReport charpoly_Wnew(int n, u64 p, const RunConfig& cfg);

// product over all nonzero j mod 6 (the full 10-dimensional space for n = 6)
std::vector<i64> charpoly_full6(u64 p, const RunConfig& cfg);

struct QuarticSplit {
    i64 coef = 0;   // beta = coef * sqrt(d)
    int d = 0;      // -1 (Z i) or -3 (Z sqrt(-3))
};

// T^4 + c2 T^2 + p^4 = (T^2 - beta T - p^2)(T^2 + beta T - p^2), beta^2 = -c2 - 2p^2
QuarticSplit split_quartic(const CharPolyReport& rep);

} // namespace asdlab
