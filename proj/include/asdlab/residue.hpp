#pragma once

#include <numeric>
#include <optional>
#include <utility>
#include "asdlab/arith.hpp"

namespace asdlab {

// Z/p^k with u64 representatives
struct PadicCtx {
    u64 p = 0;
    int k = 1;
    u64 q = 0;   // p^k

    PadicCtx() = default;
    PadicCtx(u64 p_, int k_) : p(p_), k(k_), q(1) {
        if (!is_prime_u64(p_)) throw std::invalid_argument("PadicCtx: p not prime");
        if (k_ < 1) throw std::invalid_argument("PadicCtx: k < 1");
        for (int i = 0; i < k_; ++i) {
            if (q > UINT64_MAX / p_ / p_) throw std::overflow_error("PadicCtx: modulus too large");
            q *= p_;
        }
    }
    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= q ? s - q : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + q - b; }
    u64 mul(u64 a, u64 b) const { return mulmod(a, b, q); }
    u64 neg(u64 a) const { return a ? q - a : 0; }
    u64 pow(u64 a, u64 e) const { return powmod(a, e, q); }
    u64 inv(u64 a) const { return invmod(a, q); }
    u64 from_int(i64 x) const {
        i64 m = static_cast<i64>(q);
        i64 r = x % m;
        return static_cast<u64>(r < 0 ? r + m : r);
    }
    i64 lift_balanced(u64 a) const { return balanced(a, q); }
    int val(u64 a) const {       // p-adic valuation of the residue, capped at k
        if (a % q == 0) return k;
        int v = 0;
        while (a % p == 0) { a /= p; ++v; }
        return v;
    }
};

// square root of x mod p (p odd prime), Tonelli-Shanks
inline std::optional<u64> sqrt_mod_p(u64 x, u64 p) {
    x %= p;
    if (x == 0) return 0;
    if (legendre(static_cast<i64>(x), p) != 1) return std::nullopt;
    if (p % 4 == 3) return powmod(x, (p + 1) / 4, p);
    u64 s = p - 1;
    int e = 0;
    while ((s & 1) == 0) { s >>= 1; ++e; }
    u64 n = 2;
    while (legendre(static_cast<i64>(n), p) != -1) ++n;
    u64 t = powmod(x, (s + 1) / 2, p);
    u64 b = powmod(x, s, p);
    u64 g = powmod(n, s, p);
    int r = e;
    while (b != 1) {
        u64 bb = b;
        int m = 0;
        while (bb != 1) { bb = mulmod(bb, bb, p); ++m; }
        if (m == r) return std::nullopt;
        u64 gs = g;
        for (int i = 0; i < r - m - 1; ++i) gs = mulmod(gs, gs, p);
        t = mulmod(t, gs, p);
        g = mulmod(gs, gs, p);
        b = mulmod(b, g, p);
        r = m;
    }
    return t;
}

// sqrt_mod(d, p, k): s with s^2 = d mod p^k when (d|p)=1, canonicalized so the
// smaller least-nonnegative residue mod p is chosen; nullopt marks the inert case.
inline std::optional<u64> sqrt_mod(i64 d, u64 p, int k) {
    if (p == 2) throw std::invalid_argument("sqrt_mod: p must be odd");
    i64 dm = d % static_cast<i64>(p);
    if (dm < 0) dm += static_cast<i64>(p);
    if (dm == 0) throw std::invalid_argument("sqrt_mod: p divides d");
    auto r0 = sqrt_mod_p(static_cast<u64>(dm), p);
    if (!r0) return std::nullopt;
    PadicCtx R(p, k);
    u64 dq = R.from_int(d);
    u64 x = *r0 % p;
    if (p - x < x) x = p - x;      // canonical seed
    u64 r = x;
    // Hensel: r <- r - (r^2 - d)/(2r)
    for (int i = 1; i < k; ++i) {
        u64 num = R.sub(R.mul(r, r), dq);
        r = R.sub(r, R.mul(num, R.inv(R.mul(2 % R.q, r))));
    }
    if ((R.mul(r, r)) != dq) throw std::logic_error("sqrt_mod: lift failed");
    u64 other = R.neg(r);
    if (other % p < r % p) r = other;
    return r;
}

// least r >= 1 with p^r = 1 mod n
inline int order_mod(u64 p, u64 n) {
    if (n == 1) return 1;
    if (std::gcd(p, n) != 1) throw std::invalid_argument("order_mod: gcd(p,n) != 1");
    u64 x = p % n;
    int r = 1;
    while (x != 1) {
        x = (x * (p % n)) % n;
        ++r;
        if (r > static_cast<int>(n)) throw std::logic_error("order_mod: no order found");
    }
    return r;
}

// unramified quadratic extension of Z/p^k: elements a + b*sqrt(d), d a non-residue
struct QuadExtCtx {
    PadicCtx base;
    u64 d;    // reduced representative of the non-residue
    using Elem = std::pair<u64, u64>;

    QuadExtCtx(const PadicCtx& b, i64 dd) : base(b), d(b.from_int(dd)) {
        if (legendre(dd, b.p) != -1)
            throw std::invalid_argument("QuadExtCtx: d is a residue mod p");
    }
    Elem from_base(u64 a) const { return {a, 0}; }
    Elem add(const Elem& x, const Elem& y) const { return {base.add(x.first, y.first), base.add(x.second, y.second)}; }
    Elem sub(const Elem& x, const Elem& y) const { return {base.sub(x.first, y.first), base.sub(x.second, y.second)}; }
    Elem mul(const Elem& x, const Elem& y) const {
        u64 ac = base.mul(x.first, y.first);
        u64 bd = base.mul(x.second, y.second);
        u64 ad = base.mul(x.first, y.second);
        u64 bc = base.mul(x.second, y.first);
        return {base.add(ac, base.mul(bd, d)), base.add(ad, bc)};
    }
    Elem scalar_mul(u64 c, const Elem& x) const { return {base.mul(c, x.first), base.mul(c, x.second)}; }
    bool is_zero(const Elem& x) const { return x.first == 0 && x.second == 0; }
    // min of the two coordinate valuations: valid in the unramified extension
    int val(const Elem& x) const { return std::min(base.val(x.first), base.val(x.second)); }
};

} // namespace asdlab
