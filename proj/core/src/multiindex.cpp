#include "fimreg/multiindex.hpp"

#include <algorithm>

#include "fimreg/errors.hpp"

namespace fimreg {

int MultiIndex::total() const {
    int t = 0;
    for (int x : c)
        t += x;
    return t;
}

MultiIndex MultiIndex::plus(int i, int delta) const {
    MultiIndex r = *this;
    r.c[static_cast<size_t>(i)] += delta;
    return r;
}

std::string MultiIndex::str() const {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(c[i]);
    }
    s += ")";
    return s;
}

bool leq(const MultiIndex& a, const MultiIndex& b) {
    if (a.arity() != b.arity())
        throw InputError("degree arity mismatch: " + a.str() + " vs " + b.str());
    for (int i = 0; i < a.arity(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

bool strictly_less(const MultiIndex& a, const MultiIndex& b) {
    return leq(a, b) && a != b;
}

std::vector<MultiIndex> degrees_up_to(int arity, int cap) {
    if (arity < 1)
        throw InputError("degree arity must be >= 1");
    if (cap < 0)
        return {};
    std::vector<MultiIndex> out;
    std::vector<int> cur(static_cast<size_t>(arity), 0);
    // enumerate compositions of t into `arity` parts for t = 0..cap
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == arity - 1) {
            cur[static_cast<size_t>(pos)] = remaining;
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    for (int t = 0; t <= cap; ++t)
        rec(rec, 0, t);
    // within each total the recursion yields lex order already
    return out;
}

}  // namespace fimreg
