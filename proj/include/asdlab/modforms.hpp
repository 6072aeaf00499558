#pragma once

#include "asdlab/series.hpp"

namespace asdlab {

// Weight-3 Eisenstein pair for the level-5 tower. Series variable is
// x = q^{1/5} = w^n in the Gamma_n picture (w = e^{2 pi i z / 5n}).
//   E1[m] = sum_{d|m} psi1(d) d^2,  psi1(1,2,3,4 mod 5) = (1,-2,2,-1)
//   E2[0] = 1, E2[m] = sum_{d|m} psi2(d) d^2,  psi2 = (-2,-1,1,2)
// The combination is pinned inside the 4-dim Eisenstein space by the
// j-identity below together with the Hecke/eigenvalue anchors; the
// hauptmodul t = E1/E2 equals the eta quotient q prod(1-q^m)^{5(m|5)}.
std::vector<i64> eisenstein1_coeffs(int prec);
std::vector<i64> eisenstein2_coeffs(int prec);

struct EisensteinPair {
    TruncSeries<RingQQ> E1, E2;
    int j_oracle_terms_checked = 0;
    bool eta_quotient_equal = false;
};

// classical j as J with j(q) = q^{-1} J(q); J = E4^3 / (Delta/q)
TruncSeries<RingQQ> classical_j_times_q(int prec);

// hauptmodul candidate t = q prod_{m>=1} (1-q^m)^{5 legendre(m,5)}
TruncSeries<RingQQ> hauptmodul_eta(int prec);

// residual of the j identity: j(q) t (t^2+11t-1)^5 + (t^4-228t^3+494t^2+228t+1)^3,
// evaluated as a power series (zero iff t is the pinned hauptmodul).
TruncSeries<RingQQ> j_oracle(const TruncSeries<RingQQ>& t_candidate, int prec);

EisensteinPair build_eisenstein_pair(int prec);

// eta(4z)^6 = q prod (1-q^{4m})^6 as an integer q-series
TruncSeries<RingQQ> eta4z6(int prec);

template <class Ring>
struct CuspformBasisElement {
    int n = 0, j = 0;
    // series in w = e^{2 pi i z/(5n)}; support is the single class n-j mod n
    TruncSeries<Ring> series;
};

// h_j^{[n]} = (E1^{n-j} E2^j)^{1/n}: valuation n-j, leading coefficient 1,
// coefficients in Z[1/n] (reduced into the ring).
template <class Ring>
CuspformBasisElement<Ring> basis_h(const Ring& R, int n, int j, int prec_w) {
    if (n < 2 || j < 1 || j > n - 1) throw std::invalid_argument("basis_h: bad (n, j)");
    int xprec = prec_w / n + 3;
    auto e1 = eisenstein1_coeffs(xprec);
    auto e2 = eisenstein2_coeffs(xprec);
    TruncSeries<Ring> E1, E2;
    E1.v = 0; E1.M = xprec;
    E2.v = 0; E2.M = xprec;
    E1.c.reserve(xprec); E2.c.reserve(xprec);
    for (int i = 0; i < xprec; ++i) {
        E1.c.push_back(R.from_int(e1[i]));
        E2.c.push_back(R.from_int(e2[i]));
    }
    E1.normalize(R);
    auto P = series_mul(R, series_pow(R, E1, n - j, xprec + n), series_pow(R, E2, j, xprec + n));
    series_truncate(R, P, xprec);
    if (P.v != n - j) throw std::logic_error("basis_h: unexpected valuation");
    // P = x^{n-j} U(x); h = w^{n-j} V(w^n) with V = U^{1/n}
    TruncSeries<Ring> U;
    U.v = 0; U.M = P.len(); U.c = P.c;
    auto V = series_nth_root(R, U, n);
    CuspformBasisElement<Ring> out;
    out.n = n; out.j = j;
    out.series.v = n - j;
    out.series.M = n * (V.M - 1) + (n - j) + 1;
    out.series.c.assign(out.series.M - out.series.v, R.zero());
    for (int k = 0; k < V.len(); ++k)
        out.series.c[static_cast<size_t>(n) * k] = V.c[k];
    return out;
}

} // namespace asdlab
