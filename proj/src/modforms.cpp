#include "asdlab/modforms.hpp"

namespace asdlab {

namespace {
const int PSI1[5] = {0, 1, -2, 2, -1};
const int PSI2[5] = {0, -2, -1, 1, 2};

std::vector<i64> sigma_psi(int prec, const int* psi, i64 c0) {
    std::vector<i64> out(prec, 0);
    if (prec > 0) out[0] = c0;
    for (i64 d = 1; d < prec; ++d) {
        int w = psi[d % 5];
        if (!w) continue;
        i64 dd = w * d * d;
        for (i64 m = d; m < prec; m += d) out[m] += dd;
    }
    return out;
}
} // namespace

std::vector<i64> eisenstein1_coeffs(int prec) { return sigma_psi(prec, PSI1, 0); }
std::vector<i64> eisenstein2_coeffs(int prec) { return sigma_psi(prec, PSI2, 1); }

TruncSeries<RingQQ> classical_j_times_q(int prec) {
    RingQQ R;
    std::vector<BigRational> e4(prec, BigRational(0));
    e4[0] = BigRational(1);
    for (i64 d = 1; d < prec; ++d) {
        BigInt dd = BigInt(240) * d * d * d;
        for (i64 m = d; m < prec; m += d)
            e4[m] = e4[m] + BigRational(dd);
    }
    auto E4 = series_from_coeffs(R, 0, std::move(e4));
    auto delta_over_q = eta_product(R, [](long) { return 24; }, 1, prec);
    auto J = series_mul(R, series_pow(R, E4, 3, prec), series_inverse(R, delta_over_q));
    return J;
}

TruncSeries<RingQQ> hauptmodul_eta(int prec) {
    RingQQ R;
    auto u = eta_product(R, [](long m) {
        static const int leg5[5] = {0, 1, -1, -1, 1};
        return 5 * leg5[m % 5];
    }, 1, prec - 1);
    TruncSeries<RingQQ> t;
    t.v = u.v + 1;
    t.M = u.M + 1;
    t.c = u.c;
    return t;
}

TruncSeries<RingQQ> j_oracle(const TruncSeries<RingQQ>& t, int prec) {
    RingQQ R;
    if (t.v != 1) throw std::invalid_argument("j_oracle: candidate must have valuation 1");
    auto J = classical_j_times_q(prec);
    series_truncate(R, J, prec);
    // quad = t^2 + 11 t - 1
    auto t2 = series_mul(R, t, t);
    auto quad = series_add(R, t2, series_add(R, series_scale(R, t, BigRational(11)),
        series_const(R, BigRational(-1), t2.M)));
    // deg-5 power needs the constant term: give quad full precision anchor at 0
    auto quad5 = series_pow(R, quad, 5, prec);
    auto dis = series_mul(R, t, quad5);           // t (t^2+11t-1)^5, valuation 1
    if (dis.v < 1) throw std::domain_error("j_oracle: degenerate candidate");
    auto rhs = series_mul(R, J, dis);             // valuation >= 1
    rhs.v -= 1; rhs.M -= 1;                        // divide by q
    // c4-like quartic: t^4 - 228 t^3 + 494 t^2 + 228 t + 1
    auto t3 = series_mul(R, t2, t);
    auto t4 = series_mul(R, t2, t2);
    auto quartic = series_add(R, t4,
        series_add(R, series_scale(R, t3, BigRational(-228)),
        series_add(R, series_scale(R, t2, BigRational(494)),
        series_add(R, series_scale(R, t, BigRational(228)),
                   series_const(R, BigRational(1), t4.M)))));
    auto lhs = series_neg(R, series_pow(R, quartic, 3, prec));
    return series_sub(R, lhs, rhs);
}

EisensteinPair build_eisenstein_pair(int prec) {
    if (prec < 20) throw std::invalid_argument("build_eisenstein_pair: precision too small");
    RingQQ R;
    auto e1 = eisenstein1_coeffs(prec);
    auto e2 = eisenstein2_coeffs(prec);
    EisensteinPair P;
    {
        std::vector<BigRational> c1, c2;
        c1.reserve(prec); c2.reserve(prec);
        for (int i = 0; i < prec; ++i) {
            c1.emplace_back(static_cast<long>(e1[i]));
            c2.emplace_back(static_cast<long>(e2[i]));
        }
        P.E1 = series_from_coeffs(R, 0, std::move(c1));
        P.E2 = series_from_coeffs(R, 0, std::move(c2));
    }
    if (P.E2.at(R, 0) != BigRational(1)) throw std::logic_error("eisenstein pair: E2 constant term");
    if (P.E1.v != 1 || P.E1.at(R, 1) != BigRational(1)) throw std::logic_error("eisenstein pair: E1 normalization");
    auto t = series_mul(R, P.E1, series_inverse(R, P.E2));
    // eta-quotient comparison (recorded, and in fact exact)
    auto teta = hauptmodul_eta(prec);
    P.eta_quotient_equal = true;
    for (int m = 1; m < std::min(t.M, teta.M); ++m)
        if (t.at(R, m) != teta.at(R, m)) { P.eta_quotient_equal = false; break; }
    // j identity is the pinning oracle
    int jprec = std::max(8, std::min(prec - 6, 200));
    auto res = j_oracle(t, jprec);
    for (int m = res.v; m < res.M; ++m)
        if (!res.at(R, m).is_zero())
            throw std::logic_error("eisenstein pair: j oracle residual nonzero at index " + std::to_string(m));
    P.j_oracle_terms_checked = res.M;
    return P;
}

TruncSeries<RingQQ> eta4z6(int prec) {
    RingQQ R;
    auto u = eta_product(R, [](long) { return 6; }, 4, prec - 1);
    TruncSeries<RingQQ> f;
    f.v = u.v + 1;
    f.M = u.M + 1;
    f.c = u.c;
    return f;
}

} // namespace asdlab
