#include "asdlab/galois.hpp"

#include <sstream>
#include "asdlab/finite_field.hpp"

namespace asdlab {

std::string GaussianInt::str() const {
    std::ostringstream os;
    if (im == 0) { os << re.get_str(); return os.str(); }
    if (re != 0) {
        os << re.get_str();
        if (im > 0) os << "+";
    }
    if (im == -1) os << "-";
    else if (im != 1) os << im.get_str() << "*";
    os << "i";
    return os.str();
}

GaussianInt GaussianInt::normalized() const {
    GaussianInt g = *this;
    for (int k = 0; k < 3; ++k) {
        if (g.re > 0 && g.im >= 0) return g;
        g = GaussianInt(-g.im, g.re);   // multiply by i
    }
    return g;
}

namespace {

// Gaussian-rational pair for fraction-free-ish elimination: keep exact with a
// common BigInt denominator
struct GQ {
    GaussianInt num;
    BigInt den;
    GQ() : den(1) {}
    GQ(GaussianInt n, BigInt d = BigInt(1)) : num(std::move(n)), den(std::move(d)) {}
};

GQ gq_sub(const GQ& a, const GQ& b) {
    return GQ{GaussianInt(a.num.re * b.den - b.num.re * a.den,
                          a.num.im * b.den - b.num.im * a.den),
              a.den * b.den};
}
GQ gq_mul(const GQ& a, const GQ& b) { return GQ{a.num * b.num, a.den * b.den}; }
GQ gq_div(const GQ& a, const GQ& b) {
    // a / b = a * conj(b.num) * b.den / (a.den ... ) with rational denominator N(b.num)
    GaussianInt n = a.num * b.num.conj();
    return GQ{GaussianInt(n.re * b.den, n.im * b.den), a.den * b.num.norm()};
}
bool gq_zero(const GQ& a) { return a.num.is_zero(); }

} // namespace

GaussianInt quartic_disc(const GaussianInt& c3, const GaussianInt& c2,
                         const GaussianInt& c1, const GaussianInt& c0) {
    // Sylvester matrix of f = x^4+c3x^3+c2x^2+c1x+c0 and f' (7x7); disc = Res(f, f')
    // for monic quartic (sign (-1)^{4*3/2} = 1)
    GaussianInt one(1), four(4), three(3), two(2);
    std::vector<std::vector<GQ>> M(7, std::vector<GQ>(7));
    GaussianInt f[5] = {c0, c1, c2, c3, one};
    GaussianInt df[4] = {c1, c2 * 2, c3 * 3, four};
    for (int r = 0; r < 3; ++r)
        for (int k = 0; k <= 4; ++k)
            M[r][r + (4 - k)] = GQ{f[k]};
    for (int r = 0; r < 4; ++r)
        for (int k = 0; k <= 3; ++k)
            M[3 + r][r + (3 - k)] = GQ{df[k]};
    // gaussian elimination over Q(i), determinant accumulation
    GQ det{GaussianInt(1)};
    for (int col = 0; col < 7; ++col) {
        int pr = -1;
        for (int r = col; r < 7; ++r)
            if (!gq_zero(M[r][col])) { pr = r; break; }
        if (pr < 0) return GaussianInt(0, 0);
        if (pr != col) {
            std::swap(M[pr], M[col]);
            det = gq_mul(det, GQ{GaussianInt(-1)});
        }
        det = gq_mul(det, M[col][col]);
        for (int r = col + 1; r < 7; ++r) {
            if (gq_zero(M[r][col])) continue;
            GQ factor = gq_div(M[r][col], M[col][col]);
            for (int c = col; c < 7; ++c)
                M[r][c] = gq_sub(M[r][c], gq_mul(factor, M[c == col ? col : col][c]));
        }
    }
    // det.num / det.den must be an exact Gaussian integer
    BigInt d = det.den;
    if (d < 0) { d = -d; det.num = -det.num; }
    if (det.num.re % d != 0 || det.num.im % d != 0)
        throw std::logic_error("quartic_disc: non-integral resultant");
    return GaussianInt(det.num.re / d, det.num.im / d);
}

namespace {

// reduce a Gaussian integer into the residue field of v (prime norm) or F_{q^2} (inert q)
struct ResidueField {
    const FqCtx* F;
    FqElem i_image;
    FqElem reduce(const GaussianInt& z) const {
        FqElem re = F->from_int(i64(mpz_fdiv_ui(z.re.get_mpz_t(), F->p)));
        FqElem im = F->from_int(i64(mpz_fdiv_ui(z.im.get_mpz_t(), F->p)));
        return F->add(re, F->mul(im, i_image));
    }
};

ResidueField residue_field(const GaussianInt& v) {
    BigInt N = v.norm();
    if (N <= 1) throw std::invalid_argument("factor_type: v is a unit or zero");
    if (v.im == 0 || v.re == 0) {
        // rational prime q (times a unit): inert iff q = 3 mod 4
        BigInt q = v.im == 0 ? abs(v.re) : abs(v.im);
        u64 qq = q.get_ui();
        if (!is_prime_u64(qq) || qq % 4 != 3)
            throw std::invalid_argument("factor_type: v not a Gaussian prime");
        const FqCtx& F = FqCtx::get(qq, 2);
        // i maps to an element of order 4
        FqElem img = F.pow(F.gen, (F.q - 1) / 4);
        FqElem sq = F.mul(img, img);
        if (!(sq == F.from_int(-1))) img = F.mul(img, F.mul(img, img));   // other root
        if (!(F.mul(img, img) == F.from_int(-1)))
            throw std::logic_error("factor_type: no sqrt(-1) in F_{q^2}");
        return {&F, img};
    }
    u64 p = N.get_ui();
    if (!is_prime_u64(p)) throw std::invalid_argument("factor_type: norm of v not prime");
    const FqCtx& F = FqCtx::get(p, 1);
    // a + b i = 0 mod v: i = -a b^{-1} mod p
    u64 a = mpz_fdiv_ui(v.re.get_mpz_t(), p);
    u64 b = mpz_fdiv_ui(v.im.get_mpz_t(), p);
    FqElem img = F.from_int(-i64(mulmod(a, invmod(b, p), p)));
    return {&F, img};
}

std::vector<FqElem> reduce_poly(const ResidueField& R, const std::vector<GaussianInt>& poly) {
    std::vector<FqElem> out;
    for (const auto& c : poly) out.push_back(R.reduce(c));
    while (out.size() > 1 && R.F->is_zero(out.back())) out.pop_back();
    return out;
}

FqElem eval_poly(const FqCtx& F, const std::vector<FqElem>& f, const FqElem& x) {
    FqElem acc = F.zero();
    for (auto it = f.rbegin(); it != f.rend(); ++it)
        acc = F.add(F.mul(acc, x), *it);
    return acc;
}

// number of roots in F (counted without multiplicity)
int count_roots(const FqCtx& F, const std::vector<FqElem>& f) {
    int n = 0;
    for (u64 code = 0; code < F.q; ++code)
        if (F.is_zero(eval_poly(F, f, F.decode(code)))) ++n;
    return n;
}

std::vector<FqElem> poly_derivative(const FqCtx& F, const std::vector<FqElem>& f) {
    std::vector<FqElem> d;
    for (size_t k = 1; k < f.size(); ++k)
        d.push_back(F.scalar_mul(k % F.p, f[k]));
    while (d.size() > 1 && F.is_zero(d.back())) d.pop_back();
    return d;
}

std::vector<FqElem> poly_mod(const FqCtx& F, std::vector<FqElem> a, const std::vector<FqElem>& b) {
    while (a.size() >= b.size() && !(a.size() == 1 && F.is_zero(a[0]))) {
        FqElem lead = F.mul(a.back(), F.inv(b.back()));
        size_t shift = a.size() - b.size();
        for (size_t k = 0; k < b.size(); ++k)
            a[shift + k] = F.sub(a[shift + k], F.mul(lead, b[k]));
        while (a.size() > 1 && F.is_zero(a.back())) a.pop_back();
        if (a.size() < b.size()) break;
    }
    return a;
}

bool is_squarefree(const FqCtx& F, const std::vector<FqElem>& f) {
    auto a = f;
    auto b = poly_derivative(F, f);
    if (b.size() == 1 && F.is_zero(b[0])) return false;
    while (!(b.size() == 1 && F.is_zero(b[0]))) {
        a = poly_mod(F, a, b);
        std::swap(a, b);
    }
    return a.size() == 1;   // gcd is a unit
}

} // namespace

FactorizationType factor_type(const std::vector<GaussianInt>& poly, const GaussianInt& v) {
    if (poly.size() < 2 || poly.size() > 5)
        throw std::invalid_argument("factor_type: degree must be 1..4");
    auto R = residue_field(v);
    const FqCtx& F = *R.F;
    auto f = reduce_poly(R, poly);
    if (f.size() != poly.size())
        throw std::invalid_argument("factor_type: v divides the leading coefficient");
    int deg = int(f.size()) - 1;
    FactorizationType out;
    out.squarefree = is_squarefree(F, f);
    int n1 = count_roots(F, f);
    // roots over the quadratic extension via a tower is awkward for F_{q^2} bases;
    // use the generic degree-2r context over the prime field instead
    const FqCtx& F2 = FqCtx::get(F.p, 2 * F.r);
    // re-embed: i maps to a root of x^2 + 1 in F2 congruent to R.i_image's image;
    // for root counting only the pattern matters, so any embedding of Z[i] works
    FqElem i2 = F2.pow(F2.gen, (F2.q - 1) / 4);
    if (!(F2.mul(i2, i2) == F2.from_int(-1)))
        throw std::logic_error("factor_type: no i in the quadratic extension");
    std::vector<FqElem> f2;
    for (const auto& c : poly) {
        FqElem re = F2.from_int(i64(mpz_fdiv_ui(c.re.get_mpz_t(), F2.p)));
        FqElem im = F2.from_int(i64(mpz_fdiv_ui(c.im.get_mpz_t(), F2.p)));
        f2.push_back(F2.add(re, F2.mul(im, i2)));
    }
    int n2 = count_roots(F2, f2);
    auto fail = [&]() {
        return std::logic_error("factor_type: unrecognized root-count signature");
    };
    if (deg == 1) out.degrees = {1};
    else if (deg == 2) {
        if (n1 == 2) out.degrees = {1, 1};
        else if (n1 == 1) out.degrees = {1, 1};   // double root (non-squarefree)
        else if (n2 >= 2) out.degrees = {2};
        else throw fail();
    } else if (deg == 3) {
        if (n1 == 3) out.degrees = {1, 1, 1};
        else if (n1 == 1 && n2 == 3) out.degrees = {1, 2};
        else if (n1 == 0 && n2 == 0) out.degrees = {3};
        else if (!out.squarefree) out.degrees = {};   // pattern ambiguous
        else throw fail();
    } else {
        if (n1 == 4) out.degrees = {1, 1, 1, 1};
        else if (n1 == 2 && n2 == 4) out.degrees = {1, 1, 2};
        else if (n1 == 1 && n2 == 1) out.degrees = {1, 3};
        else if (n1 == 0 && n2 == 4) out.degrees = {2, 2};
        else if (n1 == 0 && n2 == 0) out.degrees = {4};
        else if (!out.squarefree) out.degrees = {};
        else throw fail();
    }
    if (out.squarefree && !out.degrees.empty()) {
        int l = 1;
        for (int d : out.degrees) l = std::lcm(l, d);
        out.frobenius_order = l;
    }
    return out;
}

namespace {

// i-embedding dependence: for the quadratic-extension root counts above, any
// embedding gives the same degree pattern because Gal(F_{q^2}/F_q) permutes them.

bool disc_matches(const GaussianInt& disc, int unit_i_pow, int a, int b) {
    // unit * (1+i)^a * 3^b with unit = i^{unit_i_pow} * 3i-normalised shapes:
    // the table rows present (3i)(1+i)^a 3^2 possibly negated
    GaussianInt val(3 * (unit_i_pow >= 0 ? 1 : -1) == 3 ? 0 : 0, 0);
    GaussianInt acc(0, unit_i_pow >= 0 ? 3 : -3);   // (3i) or -(3i)
    GaussianInt onei(1, 1);
    for (int k = 0; k < a; ++k) acc = acc * onei;
    for (int k = 0; k < b; ++k) acc = acc * GaussianInt(3);
    return acc == disc;
}

} // namespace

Section5Report verify_section5_table() {
    Section5Report rep;
    struct Row {
        const char* eq;
        GaussianInt c3, c2, c1, c0;
        int sign;      // +1: (3i)(1+i)^a 3^2; -1: -(3i)(1+i)^a 3^2
        int a;
        GaussianInt v;
    };
    std::vector<Row> rows{
        {"x^4-4ix-3", {0, 0}, {0, 0}, {0, -4}, {-3, 0}, +1, 18, {3, 2}},
        {"x^4-8ix+6", {0, 0}, {0, 0}, {0, -8}, {6, 0}, -1, 22, {3, 2}},
        {"x^4+12x^2-16ix+12", {0, 0}, {12, 0}, {0, -16}, {12, 0}, +1, 34, {6, 1}},
    };
    rep.pass = true;
    for (const auto& r : rows) {
        Section5Row out;
        out.equation = r.eq;
        out.v = r.v;
        out.disc = quartic_disc(r.c3, r.c2, r.c1, r.c0);
        {
            std::ostringstream os;
            os << (r.sign > 0 ? "(3i)" : "-(3i)") << "(1+i)^" << r.a << " 3^2";
            out.disc_shape = os.str();
        }
        bool shape = disc_matches(out.disc, r.sign, r.a, 2);
        auto ft = factor_type({r.c0, r.c1, r.c2, r.c3, GaussianInt(1)}, r.v);
        out.frobenius_order = ft.frobenius_order;
        out.pass = shape && ft.frobenius_order == 4;
        rep.pass = rep.pass && out.pass;
        rep.rows.push_back(out);
    }
    // cubic x^3 - 3x - 2i: reducible mod 3+2i and 6+i, irreducible mod 7+2i
    std::vector<GaussianInt> cubic{{0, -2}, {-3, 0}, {0, 0}, {1, 0}};
    auto t1 = factor_type(cubic, GaussianInt(3, 2));
    auto t2 = factor_type(cubic, GaussianInt(6, 1));
    auto t3 = factor_type(cubic, GaussianInt(7, 2));
    rep.cubic_checks = (t1.degrees != std::vector<int>{3}) &&
                       (t2.degrees != std::vector<int>{3}) &&
                       (t3.degrees == std::vector<int>{3}) && t3.frobenius_order == 3;
    rep.pass = rep.pass && rep.cubic_checks;
    return rep;
}

} // namespace asdlab
