#pragma once

#include <functional>
#include <set>
#include <vector>
#include "asdlab/residue.hpp"

namespace asdlab {

// Coefficient ring contexts. Elem values are immutable; every operation goes
// through the context so Z/p^k and QQ share one series engine.
struct RingQQ {
    using Elem = BigRational;
    std::string tag() const { return "QQ"; }
    Elem zero() const { return BigRational(0); }
    Elem one() const { return BigRational(1); }
    Elem from_int(i64 x) const { return BigRational(static_cast<long>(x)); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return BigRational(1) / a; }
    Elem div_int(const Elem& a, i64 n) const { return a / BigRational(static_cast<long>(n)); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string str(const Elem& a) const { return a.str(); }
};

struct RingZpk {
    PadicCtx R;
    using Elem = u64;
    explicit RingZpk(PadicCtx r) : R(r) {}
    RingZpk(u64 p, int k) : R(p, k) {}
    std::string tag() const { return "Zp:" + std::to_string(R.p) + "," + std::to_string(R.k); }
    Elem zero() const { return 0; }
    Elem one() const { return 1 % R.q; }
    Elem from_int(i64 x) const { return R.from_int(x); }
    Elem add(Elem a, Elem b) const { return R.add(a, b); }
    Elem sub(Elem a, Elem b) const { return R.sub(a, b); }
    Elem mul(Elem a, Elem b) const { return R.mul(a, b); }
    Elem neg(Elem a) const { return R.neg(a); }
    Elem inv(Elem a) const { return R.inv(a); }
    Elem div_int(Elem a, i64 n) const { return R.mul(a, R.inv(R.from_int(n))); }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::string str(Elem a) const { return std::to_string(a); }
};

// Truncated power series sum_{m=v}^{M-1} c[m-v] w^m, exact below M.
template <class Ring>
struct TruncSeries {
    using Elem = typename Ring::Elem;
    int v = 0;        // start exponent
    int M = 0;        // precision (exclusive)
    std::vector<Elem> c;

    int len() const { return M - v; }
    Elem at(const Ring& R, int m) const {
        if (m < v) return R.zero();
        if (m >= M) throw std::out_of_range("TruncSeries: coefficient beyond precision");
        return c[m - v];
    }
    bool known(int m) const { return m < M; }

    // drop leading zeros so c[0] != 0 (unless identically zero to precision)
    void normalize(const Ring& R) {
        size_t i = 0;
        while (i < c.size() && R.is_zero(c[i])) ++i;
        if (i == c.size()) { v = M; c.clear(); return; }
        if (i > 0) {
            c.erase(c.begin(), c.begin() + i);
            v += static_cast<int>(i);
        }
    }
};

template <class Ring>
TruncSeries<Ring> series_zero(const Ring&, int prec) {
    TruncSeries<Ring> s;
    s.v = prec; s.M = prec;
    return s;
}

template <class Ring>
TruncSeries<Ring> series_const(const Ring& R, const typename Ring::Elem& x, int prec) {
    TruncSeries<Ring> s;
    s.v = 0; s.M = prec;
    s.c.assign(prec, R.zero());
    if (prec > 0) s.c[0] = x;
    s.normalize(R);
    return s;
}

template <class Ring>
TruncSeries<Ring> series_from_coeffs(const Ring& R, int start, std::vector<typename Ring::Elem> cs) {
    TruncSeries<Ring> s;
    s.v = start;
    s.M = start + static_cast<int>(cs.size());
    s.c = std::move(cs);
    s.normalize(R);
    return s;
}

template <class Ring>
TruncSeries<Ring> series_add(const Ring& R, const TruncSeries<Ring>& f, const TruncSeries<Ring>& g) {
    TruncSeries<Ring> h;
    h.M = std::min(f.M, g.M);
    h.v = std::min(std::min(f.v, g.v), h.M);
    h.c.assign(h.len(), R.zero());
    for (int m = h.v; m < h.M; ++m) {
        typename Ring::Elem x = (m >= f.v && m < f.M) ? f.c[m - f.v] : R.zero();
        typename Ring::Elem y = (m >= g.v && m < g.M) ? g.c[m - g.v] : R.zero();
        h.c[m - h.v] = R.add(x, y);
    }
    h.normalize(R);
    return h;
}

template <class Ring>
TruncSeries<Ring> series_neg(const Ring& R, const TruncSeries<Ring>& f) {
    TruncSeries<Ring> h = f;
    for (auto& x : h.c) x = R.neg(x);
    return h;
}

template <class Ring>
TruncSeries<Ring> series_sub(const Ring& R, const TruncSeries<Ring>& f, const TruncSeries<Ring>& g) {
    return series_add(R, f, series_neg(R, g));
}

template <class Ring>
TruncSeries<Ring> series_scale(const Ring& R, const TruncSeries<Ring>& f, const typename Ring::Elem& s) {
    TruncSeries<Ring> h = f;
    for (auto& x : h.c) x = R.mul(x, s);
    h.normalize(R);
    return h;
}

// product; precision min(f.M + g.v, g.M + f.v)
template <class Ring>
TruncSeries<Ring> series_mul(const Ring& R, const TruncSeries<Ring>& f, const TruncSeries<Ring>& g) {
    TruncSeries<Ring> h;
    h.M = std::min(f.M + g.v, g.M + f.v);
    h.v = std::min(f.v + g.v, h.M);
    if (h.v >= h.M) { h.v = h.M; return h; }
    h.c.assign(h.len(), R.zero());
    for (int i = 0; i < f.len(); ++i) {
        if (R.is_zero(f.c[i])) continue;
        int base = f.v + i + g.v;
        if (base >= h.M) break;
        int jmax = std::min(g.len(), h.M - base);
        for (int j = 0; j < jmax; ++j) {
            if (R.is_zero(g.c[j])) continue;
            h.c[base + j - h.v] = R.add(h.c[base + j - h.v], R.mul(f.c[i], g.c[j]));
        }
    }
    h.normalize(R);
    return h;
}

template <class Ring>
void series_truncate(const Ring& R, TruncSeries<Ring>& f, int prec) {
    if (prec >= f.M) return;
    f.M = prec;
    if (f.v >= prec) { f.v = prec; f.c.clear(); return; }
    f.c.resize(f.M - f.v);
    (void)R;
}

template <class Ring>
TruncSeries<Ring> series_pow(const Ring& R, TruncSeries<Ring> f, u64 e, int cap_prec = -1) {
    if (cap_prec >= 0) series_truncate(R, f, cap_prec);
    TruncSeries<Ring> r;
    int prec = cap_prec >= 0 ? cap_prec : f.M;
    r.v = 0; r.M = prec;
    r.c.assign(prec, R.zero());
    if (prec > 0) r.c[0] = R.one();
    if (e == 0) return r;
    bool first = true;
    TruncSeries<Ring> acc;
    while (e) {
        if (e & 1) {
            acc = first ? f : series_mul(R, acc, f);
            first = false;
        }
        e >>= 1;
        if (e) f = series_mul(R, f, f);
    }
    return acc;
}

// inverse of a unit series (v = 0, c[0] a unit)
template <class Ring>
TruncSeries<Ring> series_inverse(const Ring& R, const TruncSeries<Ring>& f) {
    if (f.v != 0 || f.len() == 0 || R.is_zero(f.c[0]))
        throw std::domain_error("series_inverse: not a unit series");
    int n = f.len();
    TruncSeries<Ring> g;
    g.v = 0; g.M = f.M;
    g.c.assign(n, R.zero());
    auto i0 = R.inv(f.c[0]);
    g.c[0] = i0;
    for (int m = 1; m < n; ++m) {
        typename Ring::Elem s = R.zero();
        for (int k = 1; k <= m && k < n; ++k)
            if (!R.is_zero(f.c[k])) s = R.add(s, R.mul(f.c[k], g.c[m - k]));
        g.c[m] = R.neg(R.mul(s, i0));
    }
    return g;
}

// n-th root: f = w^{an} * u with u(0) = 1; returns g with g^n = f, g = w^a(1 + ...).
// result precision: M - a(n-1)
template <class Ring>
TruncSeries<Ring> series_nth_root(const Ring& R, const TruncSeries<Ring>& f, int n) {
    if (n <= 0) throw std::invalid_argument("series_nth_root: n must be positive");
    if (f.len() == 0) throw std::domain_error("series_nth_root: zero series");
    if (f.v % n != 0) throw std::domain_error("series_nth_root: valuation not divisible by n");
    if (!R.eq(f.c[0], R.one())) throw std::domain_error("series_nth_root: leading coefficient not 1");
    int a = f.v / n;
    int ulen = f.len();
    // Newton on the unit part u: g <- g - (g^n - u) / (n g^{n-1}); doubles w-accuracy
    TruncSeries<Ring> u;
    u.v = 0; u.M = ulen; u.c = f.c;
    TruncSeries<Ring> g;
    g.v = 0; g.M = 1;
    g.c = {R.one()};
    int have = 1;
    while (have < ulen) {
        int want = std::min(2 * have, ulen);
        g.M = want;
        g.c.resize(want, R.zero());
        TruncSeries<Ring> ucut;
        ucut.v = 0; ucut.M = want;
        ucut.c.assign(u.c.begin(), u.c.begin() + want);
        ucut.normalize(R);
        auto gn1 = series_pow(R, g, n - 1, want);
        auto gn = series_mul(R, gn1, g);
        auto num = series_sub(R, gn, ucut);
        auto den = series_scale(R, gn1, R.from_int(n));
        if (num.len() > 0) {
            auto quot = series_mul(R, num, series_inverse(R, den));
            g = series_sub(R, g, quot);
        }
        g.M = want;
        if (g.v > 0) {  // keep dense representation anchored at 0
            std::vector<typename Ring::Elem> cc(want, R.zero());
            for (int i = 0; i < g.len(); ++i) cc[g.v + i] = g.c[i];
            g.v = 0; g.c = std::move(cc);
        }
        g.c.resize(want, R.zero());
        have = want;
    }
    TruncSeries<Ring> out;
    out.v = a;
    out.M = f.M - a * (n - 1);
    out.c = g.c;
    out.c.resize(out.len(), R.zero());
    return out;
}

// prod_{m>=1} (1 - w^{scale*m})^{e(m)} to given precision; e by residue class.
template <class Ring>
TruncSeries<Ring> eta_product(const Ring& R, const std::function<int(long)>& exponent,
                              long scale, int prec) {
    if (prec <= 0) throw std::invalid_argument("eta_product: precision must be positive");
    TruncSeries<Ring> f;
    f.v = 0; f.M = prec;
    f.c.assign(prec, R.zero());
    f.c[0] = R.one();
    for (long m = 1; m * scale < prec; ++m) {
        int e = exponent(m);
        if (e == 0) continue;
        long step = scale * m;
        // binomial factors (1 - w^step)^{|e|}, multiplied or divided in
        for (int rep = 0; rep < std::abs(e); ++rep) {
            if (e > 0) {
                for (int i = prec - 1; i >= step; --i)
                    f.c[i] = R.sub(f.c[i], f.c[i - step]);
            } else {
                for (int i = static_cast<int>(step); i < prec; ++i)
                    f.c[i] = R.add(f.c[i], f.c[i - step]);
            }
        }
    }
    return f;
}

template <class Ring>
std::set<long> support_classes(const Ring& R, const TruncSeries<Ring>& f, long n) {
    std::set<long> s;
    for (int i = 0; i < f.len(); ++i)
        if (!R.is_zero(f.c[i])) s.insert(((f.v + i) % n + n) % n);
    return s;
}

} // namespace asdlab
