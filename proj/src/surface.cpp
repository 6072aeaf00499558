#include "asdlab/surface.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>
#include <unordered_map>
#include <json.hpp>

namespace fs = std::filesystem;

namespace asdlab {

FiberCurve fiber_at(const FqCtx& F, const FqElem& t) {
    if (F.p <= 3) throw std::invalid_argument("fiber_at: characteristic must exceed 3");
    if (F.is_zero(t)) throw std::invalid_argument("fiber_at: t = 0 is a cusp fiber");
    FiberCurve c;
    c.F = &F;
    c.t = t;
    auto horner = [&](std::initializer_list<i64> coeffs) {
        FqElem acc = F.zero();
        for (i64 k : coeffs) acc = F.add(F.mul(acc, t), F.from_int(k));
        return acc;
    };
    u64 i48 = invmod(48 % F.p, F.p);
    u64 i864 = invmod(864 % F.p, F.p);
    // A = -(1 + 12t + 14t^2 - 12t^3 + t^4)/48, B = (1 + 18t + 75t^2 + 75t^4 - 18t^5 + t^6)/864
    c.A = F.scalar_mul(i48, F.neg(horner({1, -12, 14, 12, 1})));
    c.B = F.scalar_mul(i864, horner({1, -18, 75, 0, 75, 18, 1}));
    auto d = horner({1, -11, -1});   // disc = t^5 (t^2 - 11t - 1), t != 0 here
    c.singular = F.is_zero(d);
    return c;
}

namespace {

// quadratic character sum over all x (naive point count core)
i64 char_sum(const FiberCurve& c) {
    const FqCtx& F = *c.F;
    static thread_local const FqCtx* cached = nullptr;
    static thread_local std::vector<std::int8_t> chi;
    if (cached != &F) {
        chi.assign(F.q, -1);
        chi[0] = 0;
        FqElem g2 = F.mul(F.gen, F.gen);
        FqElem x = F.one();
        for (u64 e = 0; e < (F.q - 1) / 2; ++e) {
            chi[F.encode(x)] = 1;
            x = F.mul(x, g2);
        }
        cached = &F;
    }
    i64 s = 0;
    if (F.r == 1) {
        u64 p = F.p, A = c.A.c[0], B = c.B.c[0];
        for (u64 x = 0; x < p; ++x) {
            u64 v = (mulmod(mulmod(x, x, p) + A, x, p) + B) % p;
            s += chi[v];
        }
    } else {
        for (u64 code = 0; code < F.q; ++code) {
            FqElem x = F.decode(code);
            FqElem v = F.add(F.mul(F.add(F.mul(x, x), c.A), x), c.B);
            s += chi[F.encode(v)];
        }
    }
    return s;
}

struct ECPoint {
    FqElem x, y;
    bool inf = true;
};

struct ECOps {
    const FqCtx& F;
    FqElem A;
    ECPoint add(const ECPoint& P, const ECPoint& Q) const {
        if (P.inf) return Q;
        if (Q.inf) return P;
        if (P.x == Q.x) {
            if (F.is_zero(F.add(P.y, Q.y))) return {};
            FqElem num = F.add(F.scalar_mul(3, F.mul(P.x, P.x)), A);
            FqElem lam = F.mul(num, F.inv(F.scalar_mul(2, P.y)));
            FqElem x3 = F.sub(F.mul(lam, lam), F.scalar_mul(2, P.x));
            FqElem y3 = F.sub(F.mul(lam, F.sub(P.x, x3)), P.y);
            return {x3, y3, false};
        }
        FqElem lam = F.mul(F.sub(Q.y, P.y), F.inv(F.sub(Q.x, P.x)));
        FqElem x3 = F.sub(F.sub(F.mul(lam, lam), P.x), Q.x);
        FqElem y3 = F.sub(F.mul(lam, F.sub(P.x, x3)), P.y);
        return {x3, y3, false};
    }
    ECPoint mul(ECPoint P, u64 k) const {
        ECPoint R;
        while (k) {
            if (k & 1) R = add(R, P);
            P = add(P, P);
            k >>= 1;
        }
        return R;
    }
};

u64 splitmix(u64 x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

u64 point_order(const ECOps& ec, const ECPoint& P, u64 k) {
    u64 o = k;
    for (u64 f : prime_factors(k))
        while (o % f == 0 && ec.mul(P, o / f).inf) o /= f;
    return o;
}

// one annihilator of P in [lo, hi] by baby-step giant-step on x-coordinates
u64 bsgs_annihilator(const FqCtx& F, const ECOps& ec, const ECPoint& P, u64 lo, u64 hi) {
    u64 W = hi - lo + 1;
    u64 s = static_cast<u64>(std::ceil(std::sqrt(double(W)))) + 1;
    std::unordered_map<u64, u64> baby;
    baby.reserve(2 * s);
    ECPoint bj;   // j*P
    for (u64 j = 0; j < s; ++j) {
        if (!bj.inf) baby.emplace(F.encode(bj.x), j);
        else if (j > 0) return j;   // order j < s
        bj = ec.add(bj, P);
    }
    ECPoint giant = ec.mul(P, lo);
    ECPoint stepP = ec.mul(P, s);
    for (u64 i = 0; lo + i * s <= hi + s; ++i) {
        u64 base = lo + i * s;
        if (giant.inf && base >= 1) return base;
        auto it = baby.find(F.encode(giant.x));
        if (it != baby.end()) {
            for (i64 sgn : {-1, 1}) {
                i64 k = i64(base) + sgn * i64(it->second);
                if (k >= 1 && ec.mul(P, u64(k)).inf) return u64(k);
            }
        }
        giant = ec.add(giant, stepP);
    }
    throw std::logic_error("bsgs: no annihilator in the Hasse interval");
}

FqElem fq_sqrt(const FqCtx& F, const FqElem& rhs) {
    u64 q = F.q;
    if (q % 4 == 3) return F.pow(rhs, (q + 1) / 4);
    u64 s = q - 1;
    int e = 0;
    while ((s & 1) == 0) { s >>= 1; ++e; }
    FqElem t = F.pow(rhs, (s + 1) / 2);
    FqElem b = F.pow(rhs, s);
    FqElem g = F.pow(F.gen, s);     // generator is a non-residue
    int r = e;
    while (!(b == F.one())) {
        FqElem bb = b;
        int m = 0;
        while (!(bb == F.one())) { bb = F.mul(bb, bb); ++m; }
        FqElem gs = g;
        for (int i = 0; i < r - m - 1; ++i) gs = F.mul(gs, gs);
        t = F.mul(t, gs);
        g = F.mul(gs, gs);
        b = F.mul(b, g);
        r = m;
    }
    return t;
}

i64 trace_bsgs(const FiberCurve& c) {
    const FqCtx& F = *c.F;
    u64 q = F.q;
    double sq = std::sqrt(double(q));
    u64 lo = u64(std::max<double>(1.0, std::ceil(double(q) + 1 - 2 * sq)));
    u64 hi = u64(std::floor(double(q) + 1 + 2 * sq));
    u64 seed = splitmix(q ^ splitmix(F.encode(c.A) ^ splitmix(F.encode(c.B))));
    u64 M = 1;
    for (int attempt = 0; attempt < 24; ++attempt) {
        seed = splitmix(seed);
        FqElem x = F.decode(seed % q);
        FqElem rhs = F.add(F.mul(F.add(F.mul(x, x), c.A), x), c.B);
        if (F.is_zero(rhs) || F.chi2(rhs) != 1) continue;
        ECPoint P{x, fq_sqrt(F, rhs), false};
        ECOps ec{F, c.A};
        u64 k = bsgs_annihilator(F, ec, P, lo, hi);
        u64 ord = point_order(ec, P, k);
        M = std::lcm(M, ord);
        u64 first = (lo + M - 1) / M * M;
        if (first > hi) throw std::logic_error("bsgs: order excludes Hasse interval");
        if (first + M > hi)
            return i64(q) + 1 - i64(first);
    }
    return -char_sum(c);   // ambiguity persisted (small group exponent)
}

} // namespace

i64 trace_a(const FiberCurve& c, CountMethod method) {
    if (c.singular) {
        if (method == CountMethod::BSGS)
            throw std::invalid_argument("trace_a: bsgs requires a nonsingular fiber");
        return char_sum(c);
    }
    if (method == CountMethod::BSGS) return trace_bsgs(c);
    return -char_sum(c);
}

u64 FiberTraceTable::checksum() const {
    u64 h = 1469598103934665603ull;
    auto mix = [&](u64 v) { h ^= v; h *= 1099511628211ull; };
    mix(q);
    mix(gen_code);
    for (i64 v : a) mix(static_cast<u64>(v + (1ll << 32)));
    for (auto s : sing) mix(s);
    return h;
}

FiberTraceTable count_all_fibers(const FqCtx& F, CountMethod method, const RunConfig& cfg) {
    u64 q = F.q;
    if (method == CountMethod::Auto) {
        bool naive_ok = double(q) * double(q) <= cfg.naive_q2_cap;
        bool bsgs_ok = q <= cfg.bsgs_q_cap;
        // bsgs wins well before the naive budget runs out
        method = (bsgs_ok && (q > 3000 || !naive_ok)) ? CountMethod::BSGS : CountMethod::Naive;
        if (!naive_ok && !bsgs_ok)
            throw std::invalid_argument("count_all_fibers: q exceeds all counting budgets");
    }
    if (method == CountMethod::Naive && double(q) * double(q) > cfg.naive_q2_cap)
        throw std::invalid_argument("count_all_fibers: naive budget exceeded");
    if (method == CountMethod::BSGS && q > cfg.bsgs_q_cap)
        throw std::invalid_argument("count_all_fibers: bsgs budget exceeded");

    FiberTraceTable T;
    T.p = F.p; T.r = F.r; T.q = q;
    T.gen_code = F.encode(F.gen);
    T.method = (method == CountMethod::Naive) ? "naive" : "bsgs";
    if (cache_load(cfg, q, T)) return T;
    T.a.assign(q - 1, 0);
    T.sing.assign(q - 1, 0);

    // galois symmetry a_{t^p} = a_t: one count per orbit of e -> p e mod q-1
    std::vector<std::int8_t> done(q - 1, 0);
    std::vector<u64> reps;
    for (u64 e = 0; e < q - 1; ++e) {
        if (done[e]) continue;
        u64 x = e;
        do {
            done[x] = 1;
            x = (x * (F.p % (q - 1))) % (q - 1);
        } while (x != e);
        reps.push_back(e);
    }

    std::vector<FqElem> powers(q - 1);
    FqElem acc = F.one();
    for (u64 e = 0; e < q - 1; ++e) { powers[e] = acc; acc = F.mul(acc, F.gen); }

    auto work = [&](size_t beg, size_t end) {
        for (size_t i = beg; i < end; ++i) {
            u64 e = reps[i];
            auto c = fiber_at(F, powers[e]);
            i64 val = trace_a(c, c.singular ? CountMethod::Naive : method);
            u64 x = e;
            do {
                T.a[x] = val;
                T.sing[x] = c.singular ? 1 : 0;
                x = (x * (F.p % (q - 1))) % (q - 1);
            } while (x != e);
        }
    };
    unsigned nthreads = std::min<unsigned>(cfg.threads, 8);
    if (nthreads <= 1 || reps.size() < 256) work(0, reps.size());
    else {
        std::vector<std::thread> ts;
        size_t chunk = (reps.size() + nthreads - 1) / nthreads;
        for (unsigned t = 0; t < nthreads; ++t) {
            size_t beg = t * chunk, end = std::min(reps.size(), beg + chunk);
            if (beg < end) ts.emplace_back(work, beg, end);
        }
        for (auto& th : ts) th.join();
    }
    cache_store(cfg, T);
    return T;
}

static fs::path cache_file(const RunConfig& cfg, u64 q) {
    return fs::path(cfg.cache_dir) / ("count_q" + std::to_string(q) + ".json");
}

bool cache_load(const RunConfig& cfg, u64 q, FiberTraceTable& out) {
    if (cfg.cache_dir.empty()) return false;
    auto path = cache_file(cfg, q);
    std::ifstream in(path);
    if (!in) return false;
    try {
        nlohmann::json j;
        in >> j;
        if (j.at("version") != 1 || j.at("q") != q) return false;
        FiberTraceTable T;
        T.p = j.at("p"); T.r = j.at("r"); T.q = q;
        T.gen_code = j.at("generator");
        T.method = j.at("method");
        T.a = j.at("a").get<std::vector<i64>>();
        T.sing = j.at("singular").get<std::vector<std::uint8_t>>();
        if (T.gen_code != out.gen_code) return false;
        u64 want = j.at("checksum");
        if (T.checksum() != want) {
            std::fprintf(stderr, "asdlab: cache %s corrupt (checksum mismatch), recomputing\n",
                         path.string().c_str());
            return false;
        }
        out = T;
        return true;
    } catch (...) {
        std::fprintf(stderr, "asdlab: cache %s unreadable, recomputing\n", path.string().c_str());
        return false;
    }
}

void cache_store(const RunConfig& cfg, const FiberTraceTable& T) {
    if (cfg.cache_dir.empty()) return;
    std::error_code ec;
    fs::create_directories(cfg.cache_dir, ec);
    nlohmann::json j;
    j["version"] = 1;
    j["q"] = T.q;
    j["p"] = T.p;
    j["r"] = T.r;
    j["generator"] = T.gen_code;
    j["method"] = T.method;
    j["a"] = T.a;
    j["singular"] = T.sing;
    j["checksum"] = T.checksum();
    std::ofstream out(cache_file(cfg, T.q));
    out << j.dump();
}

std::vector<std::string> cache_list(const RunConfig& cfg) {
    std::vector<std::string> names;
    if (cfg.cache_dir.empty() || !fs::exists(cfg.cache_dir)) return names;
    for (const auto& e : fs::directory_iterator(cfg.cache_dir))
        if (e.path().extension() == ".json") names.push_back(e.path().filename().string());
    std::sort(names.begin(), names.end());
    return names;
}

void cache_clear(const RunConfig& cfg) {
    for (const auto& name : cache_list(cfg))
        fs::remove(fs::path(cfg.cache_dir) / name);
}

} // namespace asdlab
