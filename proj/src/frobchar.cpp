#include "asdlab/frobchar.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include "asdlab/modforms.hpp"

namespace asdlab {

CyclotomicInt twisted_sum(int n, int j, const FiberTraceTable& T, int sing_weight) {
    int g = std::gcd(j, n);
    if ((T.q - 1) % (u64(n) / g) != 0)
        throw std::invalid_argument("twisted_sum: no character of the required order");
    CyclotomicInt S(n, 0);
    // bucket a-values by e mod n, then one zeta_pow per class
    std::vector<i64> bucket(n, 0);
    for (u64 e = 0; e < T.q - 1; ++e) {
        i64 v = T.a[e];
        if (T.sing[e]) v *= sing_weight;
        bucket[(u64(j) * e) % n] += v;
    }
    for (int c = 0; c < n; ++c)
        if (bucket[c]) S = S + CyclotomicInt::zeta_pow(n, c) * bucket[c];
    return S;
}

CyclotomicInt frob_trace(int n, int j, const FiberTraceTable& T, const CalibrationRecord& cal) {
    return twisted_sum(n, j, T, cal.sigma) * cal.eps;
}

namespace {

const FiberTraceTable& table_for(u64 q_target, u64 p, const RunConfig& cfg,
                                 CountMethod m = CountMethod::Auto) {
    static std::map<u64, FiberTraceTable> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto it = memo.find(q_target);
    if (it != memo.end()) return it->second;
    int r = 0;
    u64 q = 1;
    while (q < q_target) { q *= p; ++r; }
    if (q != q_target) throw std::invalid_argument("table_for: q not a power of p");
    const FqCtx& F = FqCtx::get(p, r);
    return memo.emplace(q_target, count_all_fibers(F, m, cfg)).first->second;
}

// eta(4z)^6 prime coefficients, computed once
i64 eta_ap(u64 p) {
    static std::vector<i64> coeffs;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    if (coeffs.size() <= p) {
        RingQQ R;
        auto f = eta4z6(int(std::max<u64>(2 * p + 2, 256)));
        coeffs.assign(f.M, 0);
        for (int m = 1; m < f.M; ++m) {
            auto x = f.at(R, m);
            coeffs[m] = static_cast<i64>(x.numerator().get_si());
        }
    }
    return coeffs[p];
}

bool check_anchors(int eps, int sigma, const RunConfig& cfg, std::vector<std::string>* log) {
    CalibrationRecord cal{eps, sigma, {}};
    auto note = [&](const std::string& s) { if (log) log->push_back(s); };
    // (a) n = 2 traces match eta(4z)^6 coefficients for p <= 17
    for (u64 p : {5, 7, 11, 13, 17}) {
        auto T = table_for(p, p, cfg, CountMethod::Naive);
        auto tr = frob_trace(2, 1, T, cal);
        if (!tr.is_rational() || tr.rational_part() != eta_ap(p)) return false;
        note("n=2 p=" + std::to_string(p) + " trace matches eta(4z)^6");
    }
    // (b) n = 6 rows p = 5, 7, 13 and the singular-sensitive rows 11, 19
    struct Row { u64 p; int r; i64 A2_rational; };
    // r=1 rows store A itself when rational; otherwise A^2 (rational by structure)
    auto trace6 = [&](u64 p, int r) {
        auto T = table_for(r == 1 ? p : p * p, p, cfg, CountMethod::Naive);
        return frob_trace(6, 1, T, cal);
    };
    {   // p = 5: quartic T^4 - T^2 + 5^4 so Tr(F_25|W_1) = 1
        auto A = trace6(5, 2);
        if (!A.is_rational() || A.rational_part() != 1) return false;
        note("n=6 p=5 quartic trace matches");
    }
    {   // p = 7: (T^2 + 5 sqrt(-3) T - 49)-pair: A = +-5 sqrt(-3), A^2 = -75
        auto A = trace6(7, 1);
        auto A2 = A * A;
        if (A.is_rational() || !A2.is_rational() || A2.rational_part() != -75) return false;
        note("n=6 p=7 trace matches");
    }
    {   // p = 13: (T^2 + 20T + 169)^2: A = -20
        auto A = trace6(13, 1);
        if (!A.is_rational() || A.rational_part() != -20) return false;
        note("n=6 p=13 trace matches");
    }
    {   // p = 11 (singular fibers at t = +-1): quartic T^4 - 167 T^2 + 11^4
        auto A = trace6(11, 2);
        if (!A.is_rational() || A.rational_part() != 167) return false;
        note("n=6 p=11 quartic trace matches");
    }
    {   // p = 19 (split singular fibers): A^2 = -108
        auto A = trace6(19, 1);
        auto A2 = A * A;
        if (A.is_rational() || !A2.is_rational() || A2.rational_part() != -108) return false;
        note("n=6 p=19 trace matches");
    }
    return true;
}

} // namespace

const CalibrationRecord& calibrate(const RunConfig& cfg) {
    static CalibrationRecord record;
    static bool done = false;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    if (done) return record;
    for (int eps : {-1, 1}) {
        for (int sigma : {-1, 1, 0}) {
            std::vector<std::string> log;
            if (check_anchors(eps, sigma, cfg, &log)) {
                record.eps = eps;
                record.sigma = sigma;
                record.anchors = std::move(log);
                done = true;
                return record;
            }
        }
    }
    throw std::runtime_error("calibrate: no (eps, sigma) convention satisfies the anchors");
}

WjCharpoly charpoly_Wj(int n, int j, u64 p, const RunConfig& cfg) {
    if (p % 2 == 0 || p % 3 == 0 || u64(n) % p == 0)
        throw std::invalid_argument("charpoly_Wj: p must be prime to 6n");
    int g = std::gcd(j, n);
    int nprime = n / g;
    int r = order_mod(p, nprime);
    const auto& cal = calibrate(cfg);
    WjCharpoly W;
    W.n = n; W.j = j; W.r = r; W.p = p;
    W.q = 1;
    for (int i = 0; i < r; ++i) W.q *= p;
    auto T = table_for(W.q, p, cfg);
    W.A = frob_trace(n, j, T, cal);
    // determinant via second moment when p^{2r} is within budget
    u64 q2 = W.q * W.q;
    bool in_budget = double(q2) * double(q2) <= cfg.naive_q2_cap || q2 <= std::min<u64>(cfg.bsgs_q_cap, 300000);
    i64 q2i = static_cast<i64>(q2);
    if (in_budget) {
        auto T2 = table_for(q2, p, cfg);
        auto Tr2 = frob_trace(n, j, T2, cal);
        auto num = W.A * W.A - Tr2;
        CyclotomicInt B(n);
        for (int i = 0; i < num.degree(); ++i) {
            if (num.coord(i) % 2 != 0) throw std::logic_error("charpoly_Wj: odd second moment");
            B.coord(i) = num.coord(i) / 2;
        }
        if (!B.is_rational()) throw std::logic_error("charpoly_Wj: determinant not rational");
        W.B = B.rational_part();
        if (W.B != q2i && W.B != -q2i)
            throw std::logic_error("charpoly_Wj: |B| != p^{2r}");
        W.B_forced = false;
    } else {
        W.B = q2i;    // validated pattern at all in-budget primes
        W.B_forced = true;
    }
    return W;
}

namespace {

// multiply polynomial (ascending, cyclotomic coefficients) pieces and check integrality
std::vector<i64> poly_to_int(const std::vector<CyclotomicInt>& pc) {
    std::vector<i64> out(pc.size());
    for (size_t i = 0; i < pc.size(); ++i) {
        if (!pc[i].is_rational())
            throw std::logic_error("charpoly: non-integer coefficient");
        out[i] = pc[i].rational_part();
    }
    return out;
}

std::vector<CyclotomicInt> poly_mul(int n, const std::vector<CyclotomicInt>& a,
                                    const std::vector<CyclotomicInt>& b) {
    std::vector<CyclotomicInt> c(a.size() + b.size() - 1, CyclotomicInt(n, 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = c[i + j] + a[i] * b[j];
    return c;
}

std::vector<CyclotomicInt> factor_poly(int n, const WjCharpoly& W) {
    // H_j(T) = T^{2r} - A T^r + B
    std::vector<CyclotomicInt> f(2 * W.r + 1, CyclotomicInt(n, 0));
    f[0] = CyclotomicInt(n, W.B);
    f[W.r] = -W.A;
    f[2 * W.r] = CyclotomicInt(n, 1);
    return f;
}

std::vector<i64> orbit_product(int n, u64 p, const std::vector<int>& js, const RunConfig& cfg,
                               std::vector<WjCharpoly>* factors, bool* any_forced) {
    // orbits of j -> j*p mod n over the given index set
    std::vector<int> left = js;
    std::vector<CyclotomicInt> prod{CyclotomicInt(n, 1)};
    while (!left.empty()) {
        int j = *std::min_element(left.begin(), left.end());
        std::vector<int> orbit;
        int x = j;
        do {
            orbit.push_back(x);
            x = int((u64(x) * p) % n);
        } while (x != j);
        for (int o : orbit)
            left.erase(std::remove(left.begin(), left.end(), o), left.end());
        auto W = charpoly_Wj(n, j, p, cfg);
        if (int(orbit.size()) != W.r)
            throw std::logic_error("orbit_product: orbit size mismatch");
        if (factors) factors->push_back(W);
        if (any_forced && W.B_forced) *any_forced = true;
        prod = poly_mul(n, prod, factor_poly(n, W));
    }
    return poly_to_int(prod);
}

} // namespace

CharPolyReport charpoly_Wnew(int n, u64 p, const RunConfig& cfg) {
    CharPolyReport rep;
    rep.n = n; rep.p = p;
    rep.r = order_mod(p, n);
    std::vector<int> js;
    for (int j = 1; j < n; ++j)
        if (std::gcd(j, n) == 1) js.push_back(j);
    rep.coeffs = orbit_product(n, p, js, cfg, &rep.factors, &rep.any_forced);
    return rep;
}

std::vector<i64> charpoly_full6(u64 p, const RunConfig& cfg) {
    std::vector<int> js{1, 2, 3, 4, 5};
    return orbit_product(6, p, js, cfg, nullptr, nullptr);
}

QuarticSplit split_quartic(const CharPolyReport& rep) {
    if (rep.coeffs.size() != 5 || rep.p % 12 == 1)
        throw std::invalid_argument("split_quartic: expects a quartic with p != 1 mod 12");
    if (rep.coeffs[1] != 0 || rep.coeffs[3] != 0)
        throw std::logic_error("split_quartic: quartic not of shape T^4 + c2 T^2 + p^4");
    i64 p2 = i64(rep.p) * i64(rep.p);
    if (rep.coeffs[0] != p2 * p2)
        throw std::logic_error("split_quartic: constant term != p^4");
    i64 beta2 = -rep.coeffs[2] - 2 * p2;
    if (beta2 >= 0) throw std::logic_error("split_quartic: beta^2 not negative");
    QuarticSplit s;
    for (int d : {-1, -3}) {
        i64 m2 = beta2 / d;
        if (beta2 % d != 0) continue;
        i64 m = i64(std::llround(std::sqrt(double(m2))));
        for (i64 mm : {m - 1, m, m + 1}) {
            if (mm > 0 && mm * mm == m2) {
                // canonical: d = -1 when p = 1 mod 4, d = -3 when p = 3 mod 4
                if ((rep.p % 4 == 1 && d == -1) || (rep.p % 4 == 3 && d == -3)) {
                    s.coef = mm;
                    s.d = d;
                    return s;
                }
            }
        }
    }
    throw std::logic_error("split_quartic: -c2 - 2p^2 is not -m^2 or -3m^2 of the expected class");
}

} // namespace asdlab
