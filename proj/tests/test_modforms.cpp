#include <doctest.h>
#include "asdlab/modforms.hpp"

using namespace asdlab;

namespace { RingQQ QQ; }

TEST_CASE("classical j expansion") {
    auto J = classical_j_times_q(5);
    CHECK(J.at(QQ, 0) == BigRational(1));
    CHECK(J.at(QQ, 1) == BigRational(744));
    CHECK(J.at(QQ, 2) == BigRational(196884));
    CHECK(J.at(QQ, 3) == BigRational(21493760));
}

TEST_CASE("eisenstein pair pinning") {
    auto P = build_eisenstein_pair(120);
    CHECK(P.E2.at(QQ, 0) == BigRational(1));
    CHECK(P.E1.v == 1);
    CHECK(P.E1.at(QQ, 1) == BigRational(1));
    // frozen leading expansions
    std::vector<long> e1{0, 1, -7, 19, -23, 1, 47, -97, 105, -62, -7, 122};
    std::vector<long> e2{1, -2, -6, 7, 26, -2, -69, -51, 90, 169, -6, -244};
    for (int m = 0; m < 12; ++m) {
        CHECK(P.E1.at(QQ, m) == BigRational(e1[m]));
        CHECK(P.E2.at(QQ, m) == BigRational(e2[m]));
    }
    for (int m = 0; m < 120; ++m) CHECK(P.E1.at(QQ, m).is_integer());
    for (int m = 0; m < 120; ++m) CHECK(P.E2.at(QQ, m).is_integer());
    CHECK(P.eta_quotient_equal);
    CHECK(P.j_oracle_terms_checked >= 30);
}

TEST_CASE("j oracle accepts the hauptmodul and rejects perturbations") {
    int prec = 60;
    auto t = hauptmodul_eta(prec);
    auto res = j_oracle(t, 40);
    for (int m = res.v; m < res.M; ++m) CHECK(res.at(QQ, m).is_zero());

    // scaling breaks it
    auto t2 = series_scale(QQ, t, BigRational(2));
    auto res2 = j_oracle(t2, 30);
    bool nonzero = false;
    for (int m = res2.v; m < res2.M; ++m) nonzero |= !res2.at(QQ, m).is_zero();
    CHECK(nonzero);
}

TEST_CASE("basis_h structure") {
    for (int n : {2, 3, 4, 6}) {
        for (int j = 1; j < n; ++j) {
            auto h = basis_h(QQ, n, j, 40 * n);
            CHECK(h.series.v == n - j);
            CHECK(h.series.at(QQ, n - j) == BigRational(1));
            auto cls = support_classes(QQ, h.series, n);
            CHECK(cls == std::set<long>{(n - j) % n});
            // coefficients in Z[1/n]: denominators divide a power of n
            for (int m = 0; m < h.series.M; ++m) {
                BigInt d = h.series.at(QQ, m).denominator();
                for (u64 p = 2; p <= u64(n); ++p)
                    while (d % p == 0) d /= p;
                CHECK(d == 1);
            }
        }
    }
}

TEST_CASE("(h_j)^n = E1^{n-j} E2^j exactly to precision") {
    auto P = build_eisenstein_pair(40);
    for (int n : {2, 3, 4, 6}) {
        for (int j = 1; j < n; ++j) {
            auto h = basis_h(QQ, n, j, 30 * n);
            auto hn = series_pow(QQ, h.series, n);
            auto rhs_x = series_mul(QQ, series_pow(QQ, P.E1, n - j, 38), series_pow(QQ, P.E2, j, 38));
            // compare in the w variable: x-index m <-> w-index n*m
            int M = std::min(hn.M, rhs_x.M * n);
            for (int wm = 0; wm < M; ++wm) {
                BigRational lhs = (wm < hn.M) ? hn.at(QQ, wm) : BigRational(0);
                BigRational rv = (wm % n == 0 && wm / n < rhs_x.M) ? rhs_x.at(QQ, wm / n) : BigRational(0);
                CHECK(lhs == rv);
            }
        }
    }
}

TEST_CASE("both coefficient paths agree after reduction") {
    for (u64 p : {7ull, 13ull}) {
        RingZpk Z(p, 3);
        for (int j : {1, 5}) {
            auto hq = basis_h(QQ, 6, j, 400);
            auto hp = basis_h(Z, 6, j, 400);
            int M = std::min(hq.series.M, hp.series.M);
            for (int m = 0; m < M; ++m) {
                u64 want = hq.series.at(QQ, m).reduce_mod(Z.R.q, p);
                CHECK(hp.series.at(Z, m) == want);
            }
        }
    }
}

TEST_CASE("eta(4z)^6 expansion and CM vanishing") {
    auto f = eta4z6(210);
    CHECK(f.at(QQ, 1) == BigRational(1));
    for (int m = 2; m < f.M; ++m)
        if (m % 4 != 1) CHECK(f.at(QQ, m).is_zero());
    CHECK(f.at(QQ, 5) == BigRational(-6));
    CHECK(f.at(QQ, 9) == BigRational(9));
    CHECK(f.at(QQ, 13) == BigRational(10));
    CHECK(f.at(QQ, 17) == BigRational(-30));
    // CM vanishing at p = 3 mod 4 up to 200
    for (u64 p = 3; p < u64(f.M); p += 4)
        if (is_prime_u64(p)) CHECK(f.at(QQ, int(p)).is_zero());
}
