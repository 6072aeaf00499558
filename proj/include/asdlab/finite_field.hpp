#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>
#include "asdlab/arith.hpp"

namespace asdlab {

// F_{p^r}, r <= 4, as Z/p[x] mod the least monic irreducible (smallest integer
// encoding sum c_i p^i). Elements are coefficient arrays of length r.
struct FqElem {
    std::array<u64, 4> c{};
    bool operator==(const FqElem& o) const { return c == o.c; }
    bool operator!=(const FqElem& o) const { return !(*this == o); }
};

class FqCtx {
public:
    u64 p;
    int r;
    u64 q;                       // p^r
    std::array<u64, 4> mod{};    // modulus = x^r - sum mod[i] x^i (stored negated for reduction)
    FqElem gen;                  // verified generator of the unit group

    static const FqCtx& get(u64 p, int r) {
        static std::map<std::pair<u64, int>, std::unique_ptr<FqCtx>> cache;
        static std::mutex mu;
        std::lock_guard<std::mutex> lk(mu);
        auto key = std::make_pair(p, r);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, std::make_unique<FqCtx>(p, r)).first;
        return *it->second;
    }

    FqCtx(u64 p_, int r_, u64 count_budget = UINT64_MAX) : p(p_), r(r_) {
        if (!is_prime_u64(p)) throw std::invalid_argument("FqCtx: p not prime");
        if (r < 1 || r > 4) throw std::invalid_argument("FqCtx: r out of range");
        q = 1;
        for (int i = 0; i < r; ++i) {
            if (q > count_budget / p) throw std::invalid_argument("FqCtx: budget exceeded");
            q *= p;
        }
        if (r > 1) find_modulus();
        find_generator();
    }

    FqElem zero() const { return {}; }
    FqElem one() const { FqElem e; e.c[0] = 1; return e; }
    FqElem from_int(i64 x) const {
        FqElem e;
        i64 m = static_cast<i64>(p);
        i64 v = x % m; if (v < 0) v += m;
        e.c[0] = static_cast<u64>(v);
        return e;
    }
    u64 encode(const FqElem& a) const {
        u64 v = 0;
        for (int i = r - 1; i >= 0; --i) v = v * p + a.c[i];
        return v;
    }
    FqElem decode(u64 v) const {
        FqElem e;
        for (int i = 0; i < r; ++i) { e.c[i] = v % p; v /= p; }
        return e;
    }
    bool is_zero(const FqElem& a) const {
        for (int i = 0; i < r; ++i) if (a.c[i]) return false;
        return true;
    }
    FqElem add(const FqElem& a, const FqElem& b) const {
        FqElem e;
        for (int i = 0; i < r; ++i) { u64 s = a.c[i] + b.c[i]; e.c[i] = s >= p ? s - p : s; }
        return e;
    }
    FqElem sub(const FqElem& a, const FqElem& b) const {
        FqElem e;
        for (int i = 0; i < r; ++i) e.c[i] = a.c[i] >= b.c[i] ? a.c[i] - b.c[i] : a.c[i] + p - b.c[i];
        return e;
    }
    FqElem neg(const FqElem& a) const { return sub(zero(), a); }
    FqElem scalar_mul(u64 s, const FqElem& a) const {
        FqElem e;
        for (int i = 0; i < r; ++i) e.c[i] = mulmod(s % p, a.c[i], p);
        return e;
    }
    FqElem mul(const FqElem& a, const FqElem& b) const {
        if (r == 1) { FqElem e; e.c[0] = mulmod(a.c[0], b.c[0], p); return e; }
        std::array<u64, 7> t{};
        for (int i = 0; i < r; ++i) {
            if (!a.c[i]) continue;
            for (int j = 0; j < r; ++j)
                t[i + j] = (t[i + j] + mulmod(a.c[i], b.c[j], p)) % p;
        }
        // reduce: x^r = sum mod[i] x^i
        for (int d = 2 * r - 2; d >= r; --d) {
            u64 v = t[d];
            if (!v) continue;
            t[d] = 0;
            for (int i = 0; i < r; ++i)
                if (mod[i]) t[d - r + i] = (t[d - r + i] + mulmod(v, mod[i], p)) % p;
        }
        FqElem e;
        for (int i = 0; i < r; ++i) e.c[i] = t[i];
        return e;
    }
    FqElem pow(FqElem a, u64 e) const {
        FqElem x = one();
        while (e) {
            if (e & 1) x = mul(x, a);
            a = mul(a, a);
            e >>= 1;
        }
        return x;
    }
    FqElem inv(const FqElem& a) const {
        if (is_zero(a)) throw std::domain_error("FqCtx: inverse of zero");
        return pow(a, q - 2);
    }
    FqElem frobenius(const FqElem& a) const { return pow(a, p); }
    int chi2(const FqElem& a) const {   // quadratic character
        if (is_zero(a)) return 0;
        FqElem t = pow(a, (q - 1) / 2);
        return t == one() ? 1 : -1;
    }
    u64 elem_order(FqElem a) const {
        if (is_zero(a)) throw std::domain_error("order of zero");
        u64 o = q - 1;
        for (u64 f : prime_factors(q - 1))
            while (o % f == 0 && pow(a, o / f) == one()) o /= f;
        return o;
    }

private:
    // poly arithmetic over F_p on small vectors, for irreducibility testing
    static std::vector<u64> pmulmod(const std::vector<u64>& a, const std::vector<u64>& b,
                                    const std::vector<u64>& m, u64 p) {
        std::vector<u64> t(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j)
                t[i + j] = (t[i + j] + mulmod(a[i], b[j], p)) % p;
        // reduce mod m (monic)
        for (size_t d = t.size(); d-- > m.size() - 1;) {
            if (d < m.size() - 1) break;
            u64 v = t[d];
            if (!v) continue;
            t[d] = 0;
            for (size_t i = 0; i + 1 < m.size(); ++i)
                t[d - (m.size() - 1) + i] = (t[d - (m.size() - 1) + i] + mulmod(v, p - m[i] % p, p)) % p;
        }
        t.resize(m.size() - 1);
        return t;
    }
    static bool irreducible(const std::vector<u64>& m, u64 p) {
        // x^{p^d} mod m computed by repeated Frobenius; irreducible iff
        // x^{p^r} = x and x^{p^d} != x for proper divisors d of r
        int r = static_cast<int>(m.size()) - 1;
        std::vector<u64> x(r, 0);
        if (r == 1) return true;
        x[1] = 1;
        auto frob = [&](std::vector<u64> v) {
            std::vector<u64> acc(r, 0); acc[0] = 1;
            std::vector<u64> base = v;
            u64 e = p;
            while (e) {
                if (e & 1) acc = pmulmod(acc, base, m, p);
                base = pmulmod(base, base, m, p);
                e >>= 1;
            }
            return acc;
        };
        std::vector<u64> xi = x;
        for (int d = 1; d < r; ++d) {
            xi = frob(xi);
            if (r % d == 0 && xi == x) return false;
        }
        xi = frob(xi);
        return xi == x;
    }
    void find_modulus() {
        for (u64 code = 0;; ++code) {
            std::vector<u64> m(r + 1, 0);
            u64 v = code;
            for (int i = 0; i < r; ++i) { m[i] = v % p; v /= p; }
            if (v) throw std::logic_error("FqCtx: no irreducible modulus found");
            m[r] = 1;
            if (irreducible(m, p)) {
                for (int i = 0; i < r; ++i) mod[i] = m[i] ? p - m[i] : 0;  // x^r = -(lower part)
                return;
            }
        }
    }
    void find_generator() {
        auto fs = prime_factors(q - 1);
        for (u64 code = 1; code < q; ++code) {
            FqElem g = decode(code);
            bool ok = true;
            for (u64 f : fs)
                if (pow(g, (q - 1) / f) == one()) { ok = false; break; }
            if (ok) {
                if (elem_order(g) != q - 1) throw std::logic_error("FqCtx: generator check failed");
                gen = g;
                return;
            }
        }
        throw std::logic_error("FqCtx: no generator");
    }
};

} // namespace asdlab
