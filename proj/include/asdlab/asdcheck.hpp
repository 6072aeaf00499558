#pragma once

#include "asdlab/frobchar.hpp"
#include "asdlab/modforms.hpp"

namespace asdlab {

inline int s_of_p(u64 p) { return p % 12 == 1 ? 1 : -1; }

// f|T_p: m-th coefficient a(mp) + s p^2 a(m/p); precision drops to floor(M/p)
template <class Ring>
TruncSeries<Ring> hecke_Tp(const Ring& R, const TruncSeries<Ring>& f, u64 p, int s_p) {
    if (f.M < int(p)) throw std::invalid_argument("hecke_Tp: precision below p");
    TruncSeries<Ring> g;
    g.v = 0;
    g.M = f.M / int(p);
    g.c.assign(g.M, R.zero());
    auto coeff = [&](i64 m) {
        if (m < f.v || m >= f.M) return R.zero();
        return f.c[m - f.v];
    };
    auto p2 = R.mul(R.from_int(i64(p)), R.from_int(i64(p)));
    for (i64 m = 1; m < g.M; ++m) {
        auto x = coeff(m * i64(p));
        if (m % i64(p) == 0) {
            auto y = R.mul(p2, coeff(m / i64(p)));
            x = s_p > 0 ? R.add(x, y) : R.sub(x, y);
        }
        g.c[m] = x;
    }
    g.normalize(R);
    return g;
}

struct ExtractResult {
    u64 c = 0;            // mod p^k
    i64 c_balanced = 0;   // balanced lift mod p^k
    u64 c_refined = 0;    // mod p^{k+1} when an order-1 index was available
    bool refined = false;
    int checked = 0;      // indices used in the consistency check
};

// h_src|T_p = c * h_tgt (p-adically); c determined mod p^k, consistency across
// all available indices at the guaranteed valuations; throws when inconsistent.
ExtractResult extract_eigenvalue(int n, int src_j, int tgt_j, u64 p, int k, int prec_w);

// canonical modification of the raw eigenvalue (balanced lift mod p^2)
i64 modify_c(u64 c_mod_p2, u64 p);

enum class Combo { H1, H5, H1plusH5, H1minusH5, H1plusIH5, H1minusIH5, H3 };
std::string combo_name(Combo c);

struct ASDRelation {
    u64 p = 0;
    int r = 1;             // index step is p^r
    i64 A_coef = 0;        // A = A_coef * sqrt(d); d = 1 means rational A
    int d = 1;             // 1, -1, -3, 3
    i64 B = 0;
    Combo combo = Combo::H1;
    bool literal_reading = false;   // printed-theorem variant, reported not asserted
};

// residue-class-dependent relations for <h1, h5> in S_3(Gamma_6), plus the
// literal printed variants flagged
std::vector<ASDRelation> three_term_data(u64 p, const RunConfig& cfg);

struct VerificationReport {
    ASDRelation rel;
    int max_index = 0;
    int tested = 0;
    bool pass = false;
    int min_slack = 0;           // min(achieved - required) over tested indices
    std::string place;           // balanced representative of the successful root
    std::vector<std::string> failures;
};

VerificationReport verify_asd(const ASDRelation& rel, int max_index, const RunConfig& cfg);

// three-term congruence of step p^r for h_j^{[n]} with H_j from the counting side
VerificationReport verify_general_n(int n, int j, u64 p, int max_index, const RunConfig& cfg);

struct Table1Entry {
    u64 p = 0;
    i64 raw_c = 0;        // balanced mod p^2
    i64 modified = 0;
    bool cross = false;   // p = 5 mod 6: h1|T_p lands on h5
};
Table1Entry table1_entry(u64 p, int prec_w = 0);

} // namespace asdlab
