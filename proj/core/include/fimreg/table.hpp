#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "fimreg/multiindex.hpp"

namespace fimreg {

/*
 * Graded homology dimensions on the window: entries (i, n) -> dim, stored
 * sparsely (only nonzero), with the per-index degrees t_i = max total of a
 * nonzero entry (-1 if none).  Values above the window cap are unknowable
 * from a truncation, so every t_i is censored unless proven otherwise.
 */
struct HomologyTable {
    int I = 0;
    int N = 0;
    std::map<std::pair<int, MultiIndex>, int> entries;
    std::vector<int> t;          // size I+1
    std::vector<bool> censored;  // size I+1

    void set(int i, const MultiIndex& n, int dim) {
        if (dim != 0) entries[{i, n}] = dim;
    }
    int at(int i, const MultiIndex& n) const {
        auto it = entries.find({i, n});
        return it == entries.end() ? 0 : it->second;
    }
    /* Recompute t from entries; censored defaults to true everywhere. */
    void finalize() {
        t.assign(static_cast<size_t>(I) + 1, -1);
        censored.assign(static_cast<size_t>(I) + 1, true);
        for (const auto& [key, dim] : entries) {
            if (dim != 0) {
                auto& ti = t[static_cast<size_t>(key.first)];
                ti = std::max(ti, key.second.total());
            }
        }
    }
    bool operator==(const HomologyTable& o) const {
        return I == o.I && N == o.N && entries == o.entries;
    }
};

struct RegularityReport {
    int I = 0;
    int N = 0;
    int reg = -1;  // max over i of t_i - i, within the window
    std::vector<int> t;
    std::vector<bool> censored;
    /* Bound comparison, when (d, r) were supplied: slack = rho - reg as a
     * decimal string (the bound can be astronomically large). */
    bool have_bound = false;
    std::string rho_value;
    std::string slack;
    /* True when every t_i entry vanishes on the top diagonal bands, so the
     * in-window per-index bound checks were conclusive. */
    std::vector<bool> conclusive;
};

}  // namespace fimreg
