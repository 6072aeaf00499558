#pragma once

#include <string>
#include <vector>
#include "asdlab/arith.hpp"

namespace asdlab {

struct GaussianInt {
    BigInt re, im;
    GaussianInt() : re(0), im(0) {}
    GaussianInt(long r, long i = 0) : re(r), im(i) {}
    GaussianInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}

    GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianInt operator-() const { return {-re, -im}; }
    bool operator==(const GaussianInt& o) const { return re == o.re && im == o.im; }
    bool is_zero() const { return re == 0 && im == 0; }
    BigInt norm() const { return re * re + im * im; }
    GaussianInt conj() const { return {re, -im}; }
    std::string str() const;

    // associate in the first quadrant (re > 0, im >= 0), 0 fixed
    GaussianInt normalized() const;
};

// discriminant of the monic quartic x^4 + c3 x^3 + c2 x^2 + c1 x + c0,
// computed as Res(f, f') by fraction-free elimination
GaussianInt quartic_disc(const GaussianInt& c3, const GaussianInt& c2,
                         const GaussianInt& c1, const GaussianInt& c0);

struct FactorizationType {
    std::vector<int> degrees;       // degree pattern, ascending
    bool squarefree = true;
    int frobenius_order = 0;        // lcm of degrees; 0 when indeterminate
};

// factorization pattern of a monic poly over Z[i] (ascending coefficients,
// degree <= 4) modulo the Gaussian prime v, by root counting over the residue
// field and its quadratic extension
FactorizationType factor_type(const std::vector<GaussianInt>& poly, const GaussianInt& v);

struct Section5Row {
    std::string equation;
    GaussianInt disc;
    std::string disc_shape;      // unit (1+i)^a 3^b presentation
    GaussianInt v;
    int frobenius_order = 0;
    bool pass = false;
};

struct Section5Report {
    std::vector<Section5Row> rows;
    bool cubic_checks = false;   // x^3 - 3x - 2i factorization pattern claims
    bool pass = false;
};

Section5Report verify_section5_table();

} // namespace asdlab
