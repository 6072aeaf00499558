#include <doctest.h>
#include <random>
#include "asdlab/series.hpp"

using namespace asdlab;

namespace {
RingQQ QQ;

TruncSeries<RingQQ> qq_series(int start, std::vector<long> cs, int extra_prec = 0) {
    std::vector<BigRational> v;
    for (long x : cs) v.emplace_back(x);
    auto s = series_from_coeffs(QQ, start, std::move(v));
    s.M += extra_prec;
    s.c.resize(s.M - s.v, BigRational(0));
    return s;
}
}

TEST_CASE("mul basics") {
    auto f = qq_series(0, {1, 1}, 2);   // 1 + w + O(w^4)
    auto g = qq_series(0, {1, -1}, 2);  // 1 - w + O(w^4)
    auto h = series_mul(QQ, f, g);
    CHECK(h.at(QQ, 0) == BigRational(1));
    CHECK(h.at(QQ, 1) == BigRational(0));
    CHECK(h.at(QQ, 2) == BigRational(-1));
    CHECK(h.M >= 3);

    auto one = qq_series(0, {1}, 5);
    auto ff = series_mul(QQ, f, one);
    for (int m = 0; m < std::min(f.M, ff.M); ++m) CHECK(ff.at(QQ, m) == f.at(QQ, m));

    // valuation additivity: (w u)(w u^{-1}) = w^2
    auto u = qq_series(0, {1, 3, -2, 5}, 0);
    auto wu = u; wu.v += 1; wu.M += 1;
    auto wui = series_inverse(QQ, u); wui.v += 1; wui.M += 1;
    auto prod = series_mul(QQ, wu, wui);
    CHECK(prod.v == 2);
    for (int m = 3; m < prod.M; ++m) CHECK(prod.at(QQ, m).is_zero());
}

TEST_CASE("mul distributes over add (randomized)") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 40; ++it) {
        auto rnd = [&](int start) {
            std::vector<BigRational> v;
            for (int i = 0; i < 12; ++i) v.emplace_back(BigInt(i64(rng() % 21) - 10), BigInt(1 + rng() % 6));
            return series_from_coeffs(QQ, start, std::move(v));
        };
        auto f = rnd(int(rng() % 3)), g = rnd(int(rng() % 3)), h = rnd(int(rng() % 3));
        auto lhs = series_mul(QQ, f, series_add(QQ, g, h));
        auto rhs = series_add(QQ, series_mul(QQ, f, g), series_mul(QQ, f, h));
        int M = std::min(lhs.M, rhs.M);
        for (int m = 0; m < M; ++m) CHECK(lhs.at(QQ, m) == rhs.at(QQ, m));
    }
}

TEST_CASE("nth_root examples") {
    // nth_root(1, n) = 1
    auto one = qq_series(0, {1}, 7);
    auto r = series_nth_root(QQ, one, 4);
    CHECK(r.at(QQ, 0) == BigRational(1));
    for (int m = 1; m < r.M; ++m) CHECK(r.at(QQ, m).is_zero());

    // sqrt(1+w): binomial series 1 + 1/2 w - 1/8 w^2 + 1/16 w^3 - 5/128 w^4
    auto f = qq_series(0, {1, 1}, 4);
    auto s = series_nth_root(QQ, f, 2);
    CHECK(s.at(QQ, 1) == BigRational(BigInt(1), BigInt(2)));
    CHECK(s.at(QQ, 2) == BigRational(BigInt(-1), BigInt(8)));
    CHECK(s.at(QQ, 3) == BigRational(BigInt(1), BigInt(16)));
    CHECK(s.at(QQ, 4) == BigRational(BigInt(-5), BigInt(128)));

    // over Z/5^3: cube of cbrt(1+w) is 1+w  (verified by cubing)
    RingZpk Z(5, 3);
    TruncSeries<RingZpk> g;
    g.v = 0; g.M = 40;
    g.c.assign(40, 0); g.c[0] = 1; g.c[1] = 1;
    auto c = series_nth_root(Z, g, 3);
    auto back = series_pow(Z, c, 3, 40);
    CHECK(back.at(Z, 0) == 1);
    CHECK(back.at(Z, 1) == 1);
    for (int m = 2; m < 40; ++m) CHECK(back.at(Z, m) == 0);

    CHECK_THROWS(series_nth_root(QQ, qq_series(1, {1, 1}), 2));  // valuation not divisible
    CHECK_THROWS(series_nth_root(QQ, qq_series(0, {2, 1}), 2));  // constant term not 1
}

TEST_CASE("nth_root round trips (randomized, both coefficient paths)") {
    std::mt19937_64 rng(777);
    for (int it = 0; it < 50; ++it) {
        int n = 2 + int(rng() % 5);
        std::vector<BigRational> v{BigRational(1)};
        for (int i = 1; i < 25; ++i) v.emplace_back(BigInt(i64(rng() % 11) - 5), BigInt(1));
        int a = int(rng() % 2);
        auto f = series_from_coeffs(QQ, a * n, std::move(v));
        auto g = series_nth_root(QQ, f, n);
        CHECK(g.v == a);
        auto back = series_pow(QQ, g, n);
        int M = std::min(back.M, f.M);
        for (int m = 0; m < M; ++m) CHECK(back.at(QQ, m) == f.at(QQ, m));
    }
    for (int it = 0; it < 50; ++it) {
        u64 p = (it % 2) ? 7 : 13;
        RingZpk Z(p, 3);
        int n = 2 + int(rng() % 5);
        if (n % p == 0) continue;
        TruncSeries<RingZpk> f;
        f.v = 0; f.M = 30;
        f.c.assign(30, 0); f.c[0] = 1;
        for (int i = 1; i < 30; ++i) f.c[i] = rng() % Z.R.q;
        auto g = series_nth_root(Z, f, n);
        auto back = series_pow(Z, g, n);
        int M = std::min(back.M, f.M);
        for (int m = 0; m < M; ++m) CHECK(back.at(Z, m) == f.at(Z, m));
    }
}

TEST_CASE("eta_product examples and naive oracle") {
    // trivial exponents
    auto t = eta_product(QQ, [](long) { return 0; }, 1, 6);
    CHECK(t.at(QQ, 0) == BigRational(1));
    for (int m = 1; m < 6; ++m) CHECK(t.at(QQ, m).is_zero());

    // Euler: prod (1-w^m) = 1 - w - w^2 + w^5 + O(w^6)
    auto e = eta_product(QQ, [](long) { return 1; }, 1, 6);
    std::vector<long> expect{1, -1, -1, 0, 0, 1};
    for (int m = 0; m < 6; ++m) CHECK(e.at(QQ, m) == BigRational(expect[m]));

    // naive term-by-term multiplication oracle at small precision
    std::mt19937_64 rng(31);
    for (int it = 0; it < 10; ++it) {
        int scale = 1 + int(rng() % 3);
        int M = 24;
        std::vector<int> exps{0, int(rng() % 7) - 3, int(rng() % 7) - 3, int(rng() % 7) - 3};
        auto emap = [&](long m) { return exps[m % 4]; };
        auto fast = eta_product(QQ, emap, scale, M);
        auto naive = qq_series(0, {1}, M - 1);
        for (long m = 1; m * scale < M; ++m) {
            int ex = emap(m);
            std::vector<BigRational> bin(size_t(scale * m) + 1, BigRational(0));
            bin[0] = BigRational(1);
            bin[size_t(scale * m)] = BigRational(-1);
            auto base = series_from_coeffs(QQ, 0, bin);
            base.M = M; base.c.resize(M, BigRational(0));
            for (int r = 0; r < std::abs(ex); ++r)
                naive = ex > 0 ? series_mul(QQ, naive, base)
                               : series_mul(QQ, naive, series_inverse(QQ, base));
            series_truncate(QQ, naive, M);
        }
        for (int m = 0; m < M; ++m) CHECK(fast.at(QQ, m) == naive.at(QQ, m));
    }
}

TEST_CASE("support classes") {
    auto f = qq_series(5, {1, 0, 0, 0, 0, 0, 1});   // w^5 + w^11
    auto s = support_classes(QQ, f, 6);
    CHECK(s == std::set<long>{5});
    auto z = series_zero(QQ, 10);
    CHECK(support_classes(QQ, z, 6).empty());

    // support of product within sumset of supports
    std::mt19937_64 rng(11);
    for (int it = 0; it < 20; ++it) {
        auto rnd = [&](void) {
            std::vector<BigRational> v;
            for (int i = 0; i < 15; ++i) v.emplace_back(long(rng() % 3 == 0 ? rng() % 5 : 0));
            return series_from_coeffs(QQ, int(rng() % 4), std::move(v));
        };
        auto f1 = rnd(), f2 = rnd();
        long n = 2 + long(rng() % 5);
        auto sf = support_classes(QQ, f1, n), sg = support_classes(QQ, f2, n);
        auto sp = support_classes(QQ, series_mul(QQ, f1, f2), n);
        for (long cls : sp) {
            bool found = false;
            for (long x : sf) for (long y : sg) if ((x + y) % n == cls) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("series JSON shape") {
    auto f = qq_series(1, {1, -2, 3});
    CHECK(f.v == 1);
    CHECK(f.M == 4);
    CHECK(QQ.str(f.at(QQ, 2)) == "-2");
}
