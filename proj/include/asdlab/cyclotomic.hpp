#pragma once

#include <array>
#include <sstream>
#include "asdlab/residue.hpp"

namespace asdlab {

// Z[w_m] for m in {1,2,3,4,6,12}, integer coordinates in the power basis of Z[x]/Phi_m.
// i64 coordinates; products are checked for overflow.
class CyclotomicInt {
public:
    explicit CyclotomicInt(int m = 1) : m_(m), deg_(phi(m)) { c_.fill(0); check_order(m); }
    CyclotomicInt(int m, i64 a) : CyclotomicInt(m) { c_[0] = a; }

    static int phi(int m) {
        switch (m) {
            case 1: case 2: return 1;
            case 3: case 4: case 6: return 2;
            case 12: return 4;
            default: throw std::invalid_argument("CyclotomicInt: unsupported order");
        }
    }
    static CyclotomicInt zeta(int m) {
        CyclotomicInt z(m);
        if (z.deg_ == 1) z.c_[0] = (m == 1 ? 1 : -1);
        else z.c_[1] = 1;
        return z;
    }
    static CyclotomicInt zeta_pow(int m, long e) {
        CyclotomicInt r(m, 1);
        CyclotomicInt z = zeta(m);
        e %= m; if (e < 0) e += m;
        for (long i = 0; i < e; ++i) r = r * z;
        return r;
    }
    // sqrt(-3) = 2*w6 - 1 in Z[w6]
    static CyclotomicInt sqrt_minus3() {
        CyclotomicInt r(6);
        r.c_[0] = -1; r.c_[1] = 2;
        return r;
    }

    int order() const { return m_; }
    int degree() const { return deg_; }
    i64 coord(int i) const { return c_.at(i); }
    i64& coord(int i) { return c_.at(i); }
    bool is_zero() const { for (int i = 0; i < deg_; ++i) if (c_[i]) return false; return true; }
    bool is_rational() const { for (int i = 1; i < deg_; ++i) if (c_[i]) return false; return true; }
    i64 rational_part() const {
        if (!is_rational()) throw std::domain_error("CyclotomicInt: not rational");
        return c_[0];
    }

    CyclotomicInt operator+(const CyclotomicInt& o) const {
        same(o); CyclotomicInt r(m_);
        for (int i = 0; i < deg_; ++i) r.c_[i] = addc(c_[i], o.c_[i]);
        return r;
    }
    CyclotomicInt operator-(const CyclotomicInt& o) const {
        same(o); CyclotomicInt r(m_);
        for (int i = 0; i < deg_; ++i) r.c_[i] = addc(c_[i], -o.c_[i]);
        return r;
    }
    CyclotomicInt operator-() const {
        CyclotomicInt r(m_);
        for (int i = 0; i < deg_; ++i) r.c_[i] = -c_[i];
        return r;
    }
    CyclotomicInt operator*(const CyclotomicInt& o) const {
        same(o);
        std::array<__int128, 8> acc{};
        for (int i = 0; i < deg_; ++i) {
            if (!c_[i]) continue;
            for (int j = 0; j < deg_; ++j)
                acc[i + j] += static_cast<__int128>(c_[i]) * o.c_[j];
        }
        // reduce mod Phi_m
        for (int t = 2 * deg_ - 2; t >= deg_; --t) {
            __int128 v = acc[t];
            if (!v) continue;
            acc[t] = 0;
            switch (m_) {
                case 3: acc[t - 1] -= v; acc[t - 2] -= v; break;          // x^2 = -x-1
                case 4: acc[t - 2] -= v; break;                            // x^2 = -1
                case 6: acc[t - 1] += v; acc[t - 2] -= v; break;           // x^2 = x-1
                case 12: acc[t - 2] += v; acc[t - 4] -= v; break;          // x^4 = x^2-1
                default: throw std::logic_error("unreachable");
            }
        }
        CyclotomicInt r(m_);
        for (int i = 0; i < deg_; ++i) r.c_[i] = narrow(acc[i]);
        return r;
    }
    CyclotomicInt operator*(i64 s) const {
        CyclotomicInt r(m_);
        for (int i = 0; i < deg_; ++i) r.c_[i] = narrow(static_cast<__int128>(c_[i]) * s);
        return r;
    }
    bool operator==(const CyclotomicInt& o) const { return m_ == o.m_ && c_ == o.c_; }
    bool operator!=(const CyclotomicInt& o) const { return !(*this == o); }

    CyclotomicInt conj() const {         // w -> w^{-1}
        CyclotomicInt s(m_, 0);
        for (int i = 0; i < deg_; ++i)
            if (c_[i]) s = s + zeta_pow(m_, m_ - i) * c_[i];
        return s;
    }

    // |x|^2 = x * conj(x); integer for m <= 6
    i64 norm2() const {
        CyclotomicInt n = (*this) * conj();
        if (!n.is_rational()) throw std::logic_error("norm2: not rational");
        return n.c_[0];
    }

    // embed via a chosen root z of Phi_m in Z/p^k
    u64 embed(const PadicCtx& R, u64 z) const {
        u64 acc = 0;
        for (int i = deg_ - 1; i >= 0; --i)
            acc = R.add(R.mul(acc, z), R.from_int(c_[i]));
        return acc;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        const char* sym = (m_ == 1) ? "" : (m_ == 2 ? "w2" : (m_ == 3 ? "w3" : (m_ == 4 ? "i" : (m_ == 6 ? "w6" : "w12"))));
        for (int i = 0; i < deg_; ++i) {
            if (!c_[i]) continue;
            if (!first && c_[i] > 0) os << "+";
            if (i == 0) os << c_[i];
            else {
                if (c_[i] == -1) os << "-";
                else if (c_[i] != 1) os << c_[i] << "*";
                os << sym;
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

private:
    int m_, deg_;
    std::array<i64, 4> c_;

    static void check_order(int m) { phi(m); }
    void same(const CyclotomicInt& o) const {
        if (m_ != o.m_) throw std::invalid_argument("CyclotomicInt: order mismatch");
    }
    static i64 addc(i64 a, i64 b) {
        i64 r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("CyclotomicInt: overflow");
        return r;
    }
    static i64 narrow(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("CyclotomicInt: overflow");
        return static_cast<i64>(v);
    }
};

inline CyclotomicInt operator*(i64 s, const CyclotomicInt& x) { return x * s; }

} // namespace asdlab
