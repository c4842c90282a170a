#include "fimreg/morphism.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "fimreg/errors.hpp"

namespace fimreg {

Injection::Injection(int a_, int b_, std::vector<int> img_)
    : a(a_), b(b_), img(std::move(img_)) {
    if (a < 0 || b < 0 || a > b) {
        throw InputError("injection [" + std::to_string(a) + "] -> [" + std::to_string(b) +
                         "] is impossible");
    }
    if (static_cast<int>(img.size()) != a) {
        throw InputError("injection image list has size " + std::to_string(img.size()) +
                         ", expected " + std::to_string(a));
    }
    std::vector<char> seen(static_cast<size_t>(b) + 1, 0);
    for (int v : img) {
        if (v < 1 || v > b) {
            throw InputError("injection image value " + std::to_string(v) + " outside [1," +
                             std::to_string(b) + "]");
        }
        if (seen[static_cast<size_t>(v)]) {
            throw InputError("injection image value " + std::to_string(v) + " repeated");
        }
        seen[static_cast<size_t>(v)] = 1;
    }
}

bool Injection::is_identity() const {
    if (a != b) return false;
    for (int t = 1; t <= a; ++t) {
        if (img[static_cast<size_t>(t - 1)] != t) return false;
    }
    return true;
}

std::string Injection::str() const {
    std::ostringstream os;
    os << "[" << a << "->" << b << ":";
    for (int t = 0; t < a; ++t) os << (t ? "," : "") << img[static_cast<size_t>(t)];
    os << "]";
    return os.str();
}

Injection standard_inclusion(int a, int b) {
    std::vector<int> img(static_cast<size_t>(a));
    for (int t = 1; t <= a; ++t) img[static_cast<size_t>(t - 1)] = t;
    return Injection(a, b, std::move(img));
}

Injection shift_injection(int a) {
    std::vector<int> img(static_cast<size_t>(a));
    for (int t = 1; t <= a; ++t) img[static_cast<size_t>(t - 1)] = t + 1;
    return Injection(a, a + 1, std::move(img));
}

Injection adjacent_transposition(int n, int j) {
    if (j < 1 || j >= n) {
        throw InputError("transposition index " + std::to_string(j) + " outside [1," +
                         std::to_string(n - 1) + "]");
    }
    std::vector<int> img(static_cast<size_t>(n));
    for (int t = 1; t <= n; ++t) img[static_cast<size_t>(t - 1)] = t;
    std::swap(img[static_cast<size_t>(j - 1)], img[static_cast<size_t>(j)]);
    return Injection(n, n, std::move(img));
}

MultiIndex MorphismTuple::source() const {
    MultiIndex a;
    a.c.reserve(comp.size());
    for (const auto& f : comp) a.c.push_back(f.a);
    return a;
}

MultiIndex MorphismTuple::target() const {
    MultiIndex b;
    b.c.reserve(comp.size());
    for (const auto& f : comp) b.c.push_back(f.b);
    return b;
}

bool MorphismTuple::operator<(const MorphismTuple& o) const {
    if (comp.size() != o.comp.size()) return comp.size() < o.comp.size();
    for (size_t i = 0; i < comp.size(); ++i) {
        if (comp[i].a != o.comp[i].a) return comp[i].a < o.comp[i].a;
        if (comp[i].b != o.comp[i].b) return comp[i].b < o.comp[i].b;
        if (comp[i].img != o.comp[i].img) return comp[i].img < o.comp[i].img;
    }
    return false;
}

std::string MorphismTuple::str() const {
    std::string s = "(";
    for (size_t i = 0; i < comp.size(); ++i) {
        if (i) s += " ";
        s += comp[i].str();
    }
    return s + ")";
}

MorphismTuple identity_morphism(const MultiIndex& n) {
    std::vector<Injection> comps;
    comps.reserve(n.c.size());
    for (int ni : n.c) comps.push_back(standard_inclusion(ni, ni));
    return MorphismTuple(std::move(comps));
}

std::int64_t hom_size(const MultiIndex& a, const MultiIndex& b) {
    if (a.arity() != b.arity()) {
        throw InputError("hom_size between degrees of different arity");
    }
    if (!leq(a, b)) return 0;
    std::int64_t total = 1;
    for (int i = 0; i < a.arity(); ++i) {
        for (int v = b.c[static_cast<size_t>(i)] - a.c[static_cast<size_t>(i)] + 1;
             v <= b.c[static_cast<size_t>(i)]; ++v) {
            if (total > std::numeric_limits<std::int64_t>::max() / v) {
                throw InputError("hom_size overflows 64 bits for " + a.str() + " -> " + b.str());
            }
            total *= v;
        }
    }
    return total;
}

namespace {

/* All injections [a] -> [b], lex on image tuples. */
void enumerate_coordinate(int a, int b, std::vector<std::vector<int>>& out) {
    std::vector<int> img;
    std::vector<char> used(static_cast<size_t>(b) + 1, 0);
    auto rec = [&](auto&& self, int t) -> void {
        if (t > a) {
            out.push_back(img);
            return;
        }
        for (int v = 1; v <= b; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            used[static_cast<size_t>(v)] = 1;
            img.push_back(v);
            self(self, t + 1);
            img.pop_back();
            used[static_cast<size_t>(v)] = 0;
        }
    };
    rec(rec, 1);
}

constexpr std::int64_t kEnumerateCap = 2'000'000;

}  // namespace

std::vector<MorphismTuple> enumerate_injections(const MultiIndex& a, const MultiIndex& b) {
    std::int64_t count = hom_size(a, b);
    if (count == 0) return {};
    if (count > kEnumerateCap) {
        throw BudgetError("refusing to enumerate " + std::to_string(count) + " morphisms " +
                          a.str() + " -> " + b.str() + " (cap " + std::to_string(kEnumerateCap) +
                          ")");
    }
    int m = a.arity();
    std::vector<std::vector<std::vector<int>>> per_coord(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        enumerate_coordinate(a.c[static_cast<size_t>(i)], b.c[static_cast<size_t>(i)],
                             per_coord[static_cast<size_t>(i)]);
    }
    std::vector<MorphismTuple> out;
    out.reserve(static_cast<size_t>(count));
    std::vector<size_t> idx(static_cast<size_t>(m), 0);
    for (;;) {
        std::vector<Injection> comps;
        comps.reserve(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) {
            comps.emplace_back(a.c[static_cast<size_t>(i)], b.c[static_cast<size_t>(i)],
                               per_coord[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]]);
        }
        out.emplace_back(std::move(comps));
        int i = m - 1;
        while (i >= 0 && ++idx[static_cast<size_t>(i)] == per_coord[static_cast<size_t>(i)].size()) {
            idx[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

Injection compose(const Injection& g, const Injection& f) {
    if (f.b != g.a) {
        throw InputError("composition mismatch: " + g.str() + " . " + f.str());
    }
    std::vector<int> img(static_cast<size_t>(f.a));
    for (int t = 1; t <= f.a; ++t) img[static_cast<size_t>(t - 1)] = g(f(t));
    return Injection(f.a, g.b, std::move(img));
}

MorphismTuple compose(const MorphismTuple& g, const MorphismTuple& f) {
    if (g.arity() != f.arity()) {
        throw InputError("composition between tuples of different arity");
    }
    std::vector<Injection> comps;
    comps.reserve(f.comp.size());
    for (size_t i = 0; i < f.comp.size(); ++i) comps.push_back(compose(g.comp[i], f.comp[i]));
    return MorphismTuple(std::move(comps));
}

std::vector<int> permutation_word(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : perm) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)]) {
            throw InputError("permutation_word: input is not a permutation of [" +
                             std::to_string(n) + "]");
        }
        seen[static_cast<size_t>(v)] = 1;
    }
    /* Right-multiplying by s_j swaps one-line positions j, j+1; resolving the
     * leftmost descent each time removes exactly one inversion, so the
     * collected word is reduced and its reverse composes back to perm. */
    std::vector<int> cur = perm;
    std::vector<int> swaps;
    for (;;) {
        int j = 0;
        for (int t = 1; t < n; ++t) {
            if (cur[static_cast<size_t>(t - 1)] > cur[static_cast<size_t>(t)]) {
                j = t;
                break;
            }
        }
        if (j == 0) break;
        std::swap(cur[static_cast<size_t>(j - 1)], cur[static_cast<size_t>(j)]);
        swaps.push_back(j);
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

FactorizationWord canonical_factorization(const MorphismTuple& f) {
    FactorizationWord w;
    w.coord.reserve(f.comp.size());
    for (const auto& fi : f.comp) {
        /* The residual permutation agrees with fi on [a] and sends a+1..b
         * order-preservingly onto the complement of the image. */
        std::vector<char> in_image(static_cast<size_t>(fi.b) + 1, 0);
        for (int v : fi.img) in_image[static_cast<size_t>(v)] = 1;
        std::vector<int> perm(static_cast<size_t>(fi.b));
        for (int t = 1; t <= fi.a; ++t) perm[static_cast<size_t>(t - 1)] = fi(t);
        int t = fi.a;
        for (int v = 1; v <= fi.b; ++v) {
            if (!in_image[static_cast<size_t>(v)]) perm[static_cast<size_t>(t++)] = v;
        }
        CoordinateWord cw;
        cw.incl_steps = fi.b - fi.a;
        cw.word = permutation_word(perm);
        w.coord.push_back(std::move(cw));
    }
    return w;
}

MorphismTuple replay_factorization(const MultiIndex& source, const FactorizationWord& w) {
    if (source.arity() != w.arity()) {
        throw InputError("replay_factorization: arity mismatch");
    }
    std::vector<Injection> comps;
    comps.reserve(w.coord.size());
    for (int i = 0; i < w.arity(); ++i) {
        const CoordinateWord& cw = w.coord[static_cast<size_t>(i)];
        int a = source.c[static_cast<size_t>(i)];
        int b = a + cw.incl_steps;
        Injection cur = standard_inclusion(a, b);
        for (auto it = cw.word.rbegin(); it != cw.word.rend(); ++it) {
            cur = compose(adjacent_transposition(b, *it), cur);
        }
        comps.push_back(std::move(cur));
    }
    return MorphismTuple(std::move(comps));
}

}  // namespace fimreg
