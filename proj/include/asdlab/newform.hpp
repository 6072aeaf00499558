#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>
#include "asdlab/config.hpp"
#include "asdlab/frobchar.hpp"

namespace asdlab {

// coefficient of the level-108 weight-3 congruence newform: x + y sqrt(-3)
struct NewformCoefficient {
    i64 x = 0, y = 0;
    bool operator==(const NewformCoefficient& o) const { return x == o.x && y == o.y; }
};

// table of the displayed indices (u = 7 - 10 sqrt(-3)); extended tables may be
// merged from a JSON file [{"n": .., "x": "..", "y": ".."}, ...]
class GtildeTable {
public:
    static GtildeTable paper_table();
    void merge_json(const std::string& path);

    std::optional<NewformCoefficient> at(u64 n) const {
        auto it = t_.find(n);
        if (it == t_.end()) return std::nullopt;
        return it->second;
    }
    const std::map<u64, NewformCoefficient>& all() const { return t_; }

private:
    std::map<u64, NewformCoefficient> t_;
};

// ideal class character values in {1, -1, i, -i}
struct ClassCharValue {
    int re = 0, im = 0;
    std::string str() const;
};

// per place v of Z[i] above p, labeled by the balanced residue of i mod p
struct ChiAtPlace {
    i64 place_imag = 0;   // i = place_imag mod v (0 for inert p)
    ClassCharValue value;
};
std::vector<ChiAtPlace> chi_value(u64 p);

struct CompareReport {
    u64 p = 0;
    bool coefficient_available = false;
    i64 modified_ap = 0;     // a(p) for p=1 mod 4; a(p)/(i sqrt 3) for p=3 mod 4
    i64 abs_A = 0;           // |A(p)| from the point-count side
    bool matched = false;
    bool structural_ok = false;  // split succeeded / integral linear coefficient
};

CompareReport compare_at_prime(u64 p, const GtildeTable& table, const RunConfig& cfg);

} // namespace asdlab
