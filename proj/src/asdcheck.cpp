#include "asdlab/asdcheck.hpp"

#include <cmath>
#include <sstream>

namespace asdlab {

namespace {

// support-aware coefficient access for h_j over Z/p^K in the w variable
struct HSeries {
    TruncSeries<RingZpk> s;
    u64 at(i64 m) const {
        if (m <= 0 || m < s.v) return 0;
        if (m >= s.M) throw std::out_of_range("HSeries: index beyond precision");
        return s.c[m - s.v];
    }
    bool have(i64 m) const { return m < s.M; }
};

HSeries h_mod(const RingZpk& Z, int n, int j, int prec_w) {
    HSeries h;
    h.s = basis_h(Z, n, j, prec_w).series;
    return h;
}

int ord_p(i64 m, u64 p) {
    int v = 0;
    while (m % i64(p) == 0) { m /= i64(p); ++v; }
    return v;
}

} // namespace

ExtractResult extract_eigenvalue(int n, int src_j, int tgt_j, u64 p, int k, int prec_w) {
    if (k > 2) throw std::invalid_argument("extract_eigenvalue: k must be <= 2");
    if (prec_w <= 0) prec_w = std::max<int>(1500, int(p) * 80);
    RingZpk Z(p, k + 1);
    auto src = h_mod(Z, n, src_j, prec_w);
    auto tgt = h_mod(Z, n, tgt_j, prec_w);
    u64 pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    u64 pk1 = pk * p;
    int s = s_of_p(p);
    int tgt_cls = (n - tgt_j) % n;
    i64 p2 = i64(p) * i64(p);
    bool have_c = false, have_refined = false, lhs_all_zero = true;
    u64 c = 0, c_ref = 0;
    int checked = 0;
    for (i64 m = tgt_cls == 0 ? n : tgt_cls;; m += n) {
        if (!src.have(m * i64(p)) || !tgt.have(m)) break;
        u64 lhs = src.at(m * i64(p));
        if (m % i64(p) == 0) {
            u64 y = Z.R.mul(Z.R.from_int(p2), src.at(m / i64(p)));
            lhs = s > 0 ? Z.R.add(lhs, y) : Z.R.sub(lhs, y);
        }
        if (lhs % pk1 != 0) lhs_all_zero = false;
        u64 t = tgt.at(m);
        int ordm = 0;
        for (i64 mm = m; mm % i64(p) == 0; mm /= i64(p)) ++ordm;
        if (ordm == 0 && t % p != 0) {
            u64 cc = Z.R.mul(lhs, invmod(t % Z.R.q, Z.R.q)) % pk;
            if (!have_c) { c = cc; have_c = true; }
            else if (cc != c)
                throw std::runtime_error("extract_eigenvalue: not an eigenform at this precision");
            ++checked;
        } else if (ordm == 1 && t % p != 0 && 2 * (1 + ordm) >= k + 1) {
            // guaranteed valuation covers one extra digit: refine c mod p^{k+1}
            u64 cc = Z.R.mul(lhs, invmod(t % Z.R.q, Z.R.q)) % pk1;
            if (!have_refined) { c_ref = cc; have_refined = true; }
            else if (cc != c_ref)
                throw std::runtime_error("extract_eigenvalue: not an eigenform at this precision");
        } else if (have_c) {
            if (Z.R.sub(lhs, Z.R.mul(c, t)) % pk != 0)
                throw std::runtime_error("extract_eigenvalue: not an eigenform at this precision");
        }
    }
    if (!have_c || checked < 10)
        throw std::runtime_error("extract_eigenvalue: too few usable indices");
    if (lhs_all_zero)
        throw std::runtime_error("extract_eigenvalue: source maps into the orthogonal class");
    if (have_refined && c_ref % pk != c)
        throw std::runtime_error("extract_eigenvalue: refinement inconsistent");
    ExtractResult r;
    r.c = c;
    r.c_balanced = balanced(c, pk);
    r.checked = checked;
    r.c_refined = have_refined ? c_ref : c;
    r.refined = have_refined;
    return r;
}

i64 modify_c(u64 c_mod_p2, u64 p) {
    u64 p2 = p * p;
    u64 cls = p % 12;
    if (cls == 1) {
        u64 d = powmod((p - 3) % p, (p - 1) / 4, p);
        i64 sign = (d == 1) ? 1 : -1;   // (-3)^{(p-1)/4} mod p is +-1 here
        u64 v = sign > 0 ? c_mod_p2 % p2 : (p2 - c_mod_p2 % p2) % p2;
        return balanced(v, p2);
    }
    i64 D;
    u64 seed;
    if (cls == 5) {
        D = -1;
        seed = (p - powmod((p - 3) % p, (p - 1) / 4, p)) % p;
    } else if (cls == 7) {
        // canonical-root sign fixed operationally against the reference table
        D = -3;
        seed = (p - powmod((p - 3) % p, (p + 1) / 4, p)) % p;
    } else {
        D = 3;
        seed = powmod((p - 3) % p, (p + 1) / 4, p);
    }
    if (seed == 0) throw std::logic_error("modify_c: zero divisor seed");
    PadicCtx R(p, 2);
    u64 x = seed;
    u64 num = R.sub(R.mul(x, x), R.from_int(D));
    x = R.sub(x, R.mul(num, R.inv(R.mul(2, x))));
    if (R.mul(x, x) != R.from_int(D)) throw std::logic_error("modify_c: Hensel lift failed");
    return balanced(R.mul(c_mod_p2 % p2, R.inv(x)), p2);
}

std::string combo_name(Combo c) {
    switch (c) {
        case Combo::H1: return "h1";
        case Combo::H5: return "h5";
        case Combo::H1plusH5: return "h1+h5";
        case Combo::H1minusH5: return "h1-h5";
        case Combo::H1plusIH5: return "h1+i*h5";
        case Combo::H1minusIH5: return "h1-i*h5";
        case Combo::H3: return "h3";
    }
    return "?";
}

std::vector<ASDRelation> three_term_data(u64 p, const RunConfig& cfg) {
    if (p % 2 == 0 || p % 3 == 0) throw std::invalid_argument("three_term_data: p divides 6");
    auto rep = charpoly_Wnew(6, p, cfg);
    std::vector<ASDRelation> out;
    i64 p2 = i64(p) * i64(p);
    u64 cls = p % 12;
    if (cls == 1) {
        // (T^2 + aT + p^2)^2: both h1 and h5 satisfy T^2 - AT + p^2, A = -a
        i64 a = rep.coeffs[3] / 2;
        for (Combo c : {Combo::H1, Combo::H5})
            out.push_back({p, 1, -a, 1, p2, c, false});
        return out;
    }
    auto sp = split_quartic(rep);
    if (cls == 5) {
        // T_p swaps the support classes; the eigenbasis is h1 +- h5
        out.push_back({p, 1, sp.coef, sp.d, -p2, Combo::H1plusH5, false});
        out.push_back({p, 1, -sp.coef, sp.d, -p2, Combo::H1minusH5, false});
        out.push_back({p, 1, sp.coef, sp.d, -p2, Combo::H1, true});
        out.push_back({p, 1, -sp.coef, sp.d, -p2, Combo::H5, true});
    } else if (cls == 7) {
        // T_p preserves classes: h1 and h5 separately
        out.push_back({p, 1, sp.coef, sp.d, -p2, Combo::H1, false});
        out.push_back({p, 1, -sp.coef, sp.d, -p2, Combo::H5, false});
        out.push_back({p, 1, sp.coef, sp.d, -p2, Combo::H1plusH5, true});
        out.push_back({p, 1, -sp.coef, sp.d, -p2, Combo::H1minusH5, true});
    } else {
        out.push_back({p, 1, sp.coef, sp.d, -p2, Combo::H1plusIH5, false});
        out.push_back({p, 1, -sp.coef, sp.d, -p2, Combo::H1minusIH5, false});
    }
    return out;
}

namespace {

// combo coefficient sequences as pairs (re, im) over Z/p^K; im is used only
// when i stays formal (p = 3 mod 4 with an i-combo)
struct ComboSeries {
    const HSeries* h1 = nullptr;
    const HSeries* h5 = nullptr;
    int i_coef = 0;                    // 0 single; +-1 h1 +- i h5; +-2 h1 +- h5
    std::optional<u64> i_embedded;

    std::pair<u64, u64> at(const PadicCtx& R, i64 m) const {
        u64 re = h1->at(m), im = 0;
        if (i_coef == 2) re = R.add(re, h5->at(m));
        else if (i_coef == -2) re = R.sub(re, h5->at(m));
        else if (i_coef == 1 || i_coef == -1) {
            u64 v = h5->at(m);
            if (i_embedded) {
                u64 t = R.mul(*i_embedded, v);
                re = i_coef > 0 ? R.add(re, t) : R.sub(re, t);
            } else {
                im = i_coef > 0 ? v : R.neg(v);
            }
        }
        return {re, im};
    }
    bool have(i64 m) const { return h1->have(m) && (!h5 || h5->have(m)); }
};

} // namespace

VerificationReport verify_asd(const ASDRelation& rel, int max_index, const RunConfig& cfg) {
    (void)cfg;
    u64 p = rel.p;
    i64 step = 1;
    for (int i = 0; i < rel.r; ++i) step *= i64(p);
    int max_ord = 0;
    for (i64 t = i64(p); t <= max_index; t *= i64(p)) ++max_ord;
    int K = 2 + 2 * max_ord + 1;
    RingZpk Z(p, K);
    const PadicCtx& R = Z.R;
    int prec_w = max_index + 2;

    HSeries h1s, h5s;
    ComboSeries f;
    bool use_ext = false;
    switch (rel.combo) {
        case Combo::H3:
            h1s = h_mod(Z, 6, 3, prec_w);
            f.h1 = &h1s;
            break;
        case Combo::H1:
        case Combo::H5:
            h1s = h_mod(Z, 6, rel.combo == Combo::H1 ? 1 : 5, prec_w);
            f.h1 = &h1s;
            break;
        case Combo::H1plusH5:
        case Combo::H1minusH5:
            h1s = h_mod(Z, 6, 1, prec_w);
            h5s = h_mod(Z, 6, 5, prec_w);
            f.h1 = &h1s; f.h5 = &h5s;
            f.i_coef = rel.combo == Combo::H1plusH5 ? 2 : -2;
            break;
        case Combo::H1plusIH5:
        case Combo::H1minusIH5:
            h1s = h_mod(Z, 6, 1, prec_w);
            h5s = h_mod(Z, 6, 5, prec_w);
            f.h1 = &h1s; f.h5 = &h5s;
            f.i_coef = rel.combo == Combo::H1plusIH5 ? 1 : -1;
            if (p % 4 == 1) f.i_embedded = sqrt_mod(-1, p, K);
            else use_ext = true;
            break;
    }

    struct Alpha { u64 re, im; std::string label; };
    std::vector<Alpha> candidates;
    if (rel.d == 1) {
        candidates.push_back({R.from_int(rel.A_coef), 0, "rational"});
    } else if (!use_ext) {
        auto root = sqrt_mod(rel.d, p, K);
        if (!root) throw std::invalid_argument("verify_asd: sqrt(d) inert without formal i");
        for (u64 rt : {*root, R.neg(*root)}) {
            u64 a = R.mul(R.from_int(rel.A_coef), rt);
            candidates.push_back({a, 0, "sqrt(" + std::to_string(rel.d) + ")=" +
                                         std::to_string(R.lift_balanced(rt))});
        }
    } else {
        // p = 11 mod 12: A sqrt(-3) = A i (-sqrt(3)) with sqrt(3) in Z_p
        if (rel.d != -3) throw std::invalid_argument("verify_asd: unexpected irrationality");
        auto root3 = sqrt_mod(3, p, K);
        if (!root3) throw std::logic_error("verify_asd: sqrt(3) must split for p = 11 mod 12");
        for (u64 rt : {*root3, R.neg(*root3)}) {
            u64 a_im = R.mul(R.from_int(rel.A_coef), R.neg(rt));
            candidates.push_back({0, a_im, "sqrt(3)=" + std::to_string(R.lift_balanced(rt))});
        }
    }

    VerificationReport rep;
    rep.rel = rel;
    rep.max_index = max_index;
    u64 Bq = R.from_int(rel.B);

    for (const auto& cand : candidates) {
        bool ok = true;
        int min_slack = INT32_MAX;
        int tested = 0;
        std::vector<std::string> fails;
        for (i64 m = 1; m * step <= max_index; ++m) {
            if (!f.have(m * step)) break;
            auto t1 = f.at(R, m * step);
            auto t2 = f.at(R, m);
            auto t3 = (m % step == 0) ? f.at(R, m / step) : std::pair<u64, u64>{0, 0};
            // N = t1 - alpha t2 + B t3 with alpha = re + i im
            u64 re = R.sub(t1.first,
                           R.sub(R.mul(cand.re, t2.first), R.mul(cand.im, t2.second)));
            re = R.add(re, R.mul(Bq, t3.first));
            u64 im = R.sub(t1.second,
                           R.add(R.mul(cand.re, t2.second), R.mul(cand.im, t2.first)));
            im = R.add(im, R.mul(Bq, t3.second));
            int need = 2 * (1 + ord_p(m, p));
            int got = std::min(R.val(re), R.val(im));
            ++tested;
            if (got < need) {
                ok = false;
                if (fails.size() < 4)
                    fails.push_back("m=" + std::to_string(m) + " need " + std::to_string(need) +
                                    " got " + std::to_string(got));
            } else {
                min_slack = std::min(min_slack, got - need);
            }
        }
        rep.tested = tested;
        if (ok && tested > 0) {
            rep.pass = true;
            rep.min_slack = min_slack == INT32_MAX ? 0 : min_slack;
            rep.place = cand.label;
            rep.failures.clear();
            return rep;
        }
        if (rep.failures.empty()) rep.failures = fails;
    }
    rep.pass = false;
    return rep;
}

VerificationReport verify_general_n(int n, int j, u64 p, int max_index, const RunConfig& cfg) {
    auto W = charpoly_Wj(n, j, p, cfg);
    int max_ord = 0;
    for (i64 t = i64(p); t <= max_index; t *= i64(p)) ++max_ord;
    int K = 2 + 2 * max_ord + 1;
    RingZpk Z(p, K);
    const PadicCtx& R = Z.R;
    auto h = h_mod(Z, n, j, max_index + 2);
    i64 step = 1;
    for (int i = 0; i < W.r; ++i) step *= i64(p);

    std::vector<std::pair<u64, std::string>> As;
    if (W.A.is_rational()) {
        As.push_back({R.from_int(W.A.rational_part()), "rational"});
    } else {
        for (u64 x0 = 0; x0 < p; ++x0) {
            u64 fx0;
            if (n == 3) fx0 = (mulmod(x0, x0, p) + x0 + 1) % p;
            else if (n == 4) fx0 = (mulmod(x0, x0, p) + 1) % p;
            else fx0 = (mulmod(x0, x0, p) + 2 * p - x0 + 1) % p;
            if (fx0 != 0) continue;
            u64 x = x0;   // Hensel-lift the root of Phi_n
            for (int i = 1; i < K; ++i) {
                u64 fx, dfx;
                if (n == 3) { fx = R.add(R.add(R.mul(x, x), x), 1); dfx = R.add(R.mul(2, x), 1); }
                else if (n == 4) { fx = R.add(R.mul(x, x), 1); dfx = R.mul(2, x); }
                else { fx = R.add(R.sub(R.mul(x, x), x), 1); dfx = R.sub(R.mul(2, x), 1); }
                x = R.sub(x, R.mul(fx, R.inv(dfx)));
            }
            As.push_back({W.A.embed(R, x), "w" + std::to_string(n) + "=" + std::to_string(x0)});
        }
        if (As.empty()) throw std::logic_error("verify_general_n: no embedding of w_n");
    }

    VerificationReport rep;
    rep.rel = {p, W.r, 0, 1, W.B, Combo::H1, false};
    rep.max_index = max_index;
    u64 Bq = R.from_int(W.B);
    for (auto& [a, label] : As) {
        bool ok = true;
        int tested = 0, min_slack = INT32_MAX;
        std::vector<std::string> fails;
        for (i64 m = 1; m * step <= max_index; ++m) {
            if (!h.have(m * step)) break;
            u64 N = R.add(R.sub(h.at(m * step), R.mul(a, h.at(m))),
                          R.mul(Bq, (m % step == 0) ? h.at(m / step) : 0));
            int need = 2 * (1 + ord_p(m, p));
            int got = R.val(N);
            ++tested;
            if (got < need) {
                ok = false;
                if (fails.size() < 4)
                    fails.push_back("m=" + std::to_string(m) + " need " + std::to_string(need) +
                                    " got " + std::to_string(got));
            } else min_slack = std::min(min_slack, got - need);
        }
        rep.tested = tested;
        if (ok && tested > 0) {
            rep.pass = true;
            rep.min_slack = min_slack == INT32_MAX ? 0 : min_slack;
            rep.place = label;
            return rep;
        }
        if (rep.failures.empty()) rep.failures = fails;
    }
    rep.pass = false;
    return rep;
}

Table1Entry table1_entry(u64 p, int prec_w) {
    Table1Entry e;
    e.p = p;
    e.cross = (p % 6 == 5);
    auto r = e.cross ? extract_eigenvalue(6, 1, 5, p, 2, prec_w)
                     : extract_eigenvalue(6, 1, 1, p, 2, prec_w);
    e.raw_c = r.c_balanced;
    u64 p2 = p * p;
    u64 c = r.c;
    if (c % p == 0 && r.refined) {
        // eigenvalue with positive valuation: recover the trace c + D/c from the
        // refined lift, D the product of the local quadratic
        PadicCtx R3(p, 3);
        u64 c3 = r.c_refined;
        int a = R3.val(c3);
        if (a == 1) {
            i64 D;
            u64 cls = p % 12;
            if (cls == 1) D = i64(p2);
            else if (cls == 7 || cls == 5) D = -i64(p2);
            else {
                // p = 11 mod 12: symmetrize with the reverse eigenvalue
                auto r2 = extract_eigenvalue(6, 5, 1, p, 2, prec_w);
                u64 sum = (r.c + r2.c) % p2;
                e.modified = modify_c(sum, p);
                return e;
            }
            u64 u = c3 / p;                       // unit mod p^2
            u64 Dd = R3.from_int(D) / p;          // D/p as residue mod p^2 numerator
            u64 corr = mulmod(Dd % p2, invmod(u % p2, p2), p2);   // (D/p)/u = D/c * 1 (mod p^2)
            c = (c + corr) % p2;
        }
    }
    e.modified = modify_c(c, p);
    return e;
}

} // namespace asdlab
