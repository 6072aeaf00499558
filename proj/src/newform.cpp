#include "asdlab/newform.hpp"

#include <fstream>
#include <json.hpp>
#include "asdlab/golden.hpp"

namespace asdlab {

GtildeTable GtildeTable::paper_table() {
    GtildeTable t;
    for (const auto& row : golden::GTILDE)
        t.t_[row.n] = {row.x, row.y};
    return t;
}

void GtildeTable::merge_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("GtildeTable: cannot open " + path);
    nlohmann::json j;
    in >> j;
    for (const auto& row : j) {
        u64 n = row.at("n").get<u64>();
        NewformCoefficient c;
        c.x = std::stoll(row.at("x").get<std::string>());
        c.y = std::stoll(row.at("y").get<std::string>());
        auto it = t_.find(n);
        if (it != t_.end() && !(it->second == c))
            throw std::runtime_error("GtildeTable: conflicting value at n=" + std::to_string(n));
        t_[n] = c;
    }
}

std::string ClassCharValue::str() const {
    if (im == 0) return re == 1 ? "1" : "-1";
    return im == 1 ? "i" : "-i";
}

std::vector<ChiAtPlace> chi_value(u64 p) {
    if (p % 2 == 0 || p % 3 == 0) throw std::invalid_argument("chi_value: p divides 6");
    std::vector<ChiAtPlace> out;
    if (p % 4 == 3) {
        out.push_back({0, {1, 0}});
        return out;
    }
    // split p: places labeled by the two roots of x^2 = -1 mod p
    u64 r = *sqrt_mod_p(p - 1, p);
    u64 v = powmod((p - 3) % p, (p - 1) / 4, p);   // (-3)^{(p-1)/4} mod p
    for (u64 root : {r, p - r}) {
        ChiAtPlace cp;
        cp.place_imag = balanced(root, p);
        if (p % 12 == 1) {
            cp.value = (v == 1) ? ClassCharValue{1, 0} : ClassCharValue{-1, 0};
        } else {
            // p = 5 mod 12: (-3)^{(p-1)/4} is a square root of -1; read it as
            // +-i at this place
            cp.value = (v == root) ? ClassCharValue{0, 1} : ClassCharValue{0, -1};
        }
        out.push_back(cp);
    }
    return out;
}

CompareReport compare_at_prime(u64 p, const GtildeTable& table, const RunConfig& cfg) {
    CompareReport rep;
    rep.p = p;
    auto repc = charpoly_Wnew(6, p, cfg);
    if (p % 12 == 1) {
        rep.abs_A = std::abs(repc.coeffs[3] / 2);
        rep.structural_ok = (repc.coeffs[3] % 2 == 0);
    } else {
        auto sp = split_quartic(repc);
        rep.abs_A = std::abs(sp.coef);
        rep.structural_ok = true;
    }
    auto a = table.at(p);
    if (!a) return rep;
    rep.coefficient_available = true;
    if (p % 4 == 1) {
        if (a->y != 0) throw std::logic_error("compare_at_prime: expected rational a(p)");
        rep.modified_ap = a->x;
    } else {
        if (a->x != 0) throw std::logic_error("compare_at_prime: expected a(p) in Z sqrt(-3)");
        rep.modified_ap = a->y;   // a(p)/(i sqrt 3), sqrt(-3) = i sqrt 3
    }
    rep.matched = std::abs(rep.modified_ap) == rep.abs_A;
    return rep;
}

} // namespace asdlab
