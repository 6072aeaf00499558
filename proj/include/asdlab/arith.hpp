#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>
#include <gmpxx.h>

namespace asdlab {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using BigInt = mpz_class;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

inline u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

inline u64 invmod(u64 a, u64 m) {
    // extended euclid; a must be a unit mod m
    i64 t = 0, nt = 1;
    i64 r = static_cast<i64>(m), nr = static_cast<i64>(a % m);
    while (nr != 0) {
        i64 q = r / nr;
        t -= q * nt; std::swap(t, nt);
        r -= q * nr; std::swap(r, nr);
    }
    if (r != 1) throw std::domain_error("invmod: not a unit");
    return static_cast<u64>(t < 0 ? t + static_cast<i64>(m) : t);
}

inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

inline std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> fs;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            fs.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// balanced representative in (-m/2, m/2]
inline i64 balanced(u64 x, u64 m) {
    x %= m;
    if (x > m / 2) return static_cast<i64>(x) - static_cast<i64>(m);
    return static_cast<i64>(x);
}

inline int legendre(i64 a, u64 p) {
    u64 aa = static_cast<u64>(((a % static_cast<i64>(p)) + static_cast<i64>(p))) % p;
    if (aa == 0) return 0;
    return powmod(aa, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// exact rational; always reduced, denominator > 0 (mpq canonical form)
class BigRational {
public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(n) {}
    BigRational(const BigInt& n) : v_(n) {}
    BigRational(const BigInt& num, const BigInt& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("BigRational: zero denominator");
        v_.canonicalize();
    }
    explicit BigRational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static BigRational parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("BigRational: bad literal " + s);
        q.canonicalize();
        return BigRational(q);
    }

    const BigInt numerator() const { return v_.get_num(); }
    const BigInt denominator() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    std::string str() const { return v_.get_str(); }

    BigRational operator+(const BigRational& o) const { return BigRational(mpq_class(v_ + o.v_)); }
    BigRational operator-(const BigRational& o) const { return BigRational(mpq_class(v_ - o.v_)); }
    BigRational operator*(const BigRational& o) const { return BigRational(mpq_class(v_ * o.v_)); }
    BigRational operator/(const BigRational& o) const {
        if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
        return BigRational(mpq_class(v_ / o.v_));
    }
    BigRational operator-() const { return BigRational(mpq_class(-v_)); }
    bool operator==(const BigRational& o) const { return v_ == o.v_; }
    bool operator!=(const BigRational& o) const { return v_ != o.v_; }

    // reduce mod p^k; denominator must be coprime to p
    u64 reduce_mod(u64 q, u64 p) const {
        BigInt den = v_.get_den();
        if (mpz_fdiv_ui(den.get_mpz_t(), p) == 0)
            throw std::domain_error("reduce_mod: denominator not invertible");
        BigInt num = v_.get_num();
        u64 n = mpz_fdiv_ui(num.get_mpz_t(), q);
        u64 d = mpz_fdiv_ui(den.get_mpz_t(), q);
        return mulmod(n, invmod(d, q), q);
    }

private:
    mpq_class v_;
};

} // namespace asdlab
