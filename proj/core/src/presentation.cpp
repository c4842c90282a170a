#include "fimreg/presentation.hpp"

#include <algorithm>

#include "fimreg/errors.hpp"

namespace fimreg {

int Presentation::gen_degree() const {
    int d = -1;
    for (const auto& w : generators) d = std::max(d, w.total());
    return d;
}

int Presentation::rel_degree() const {
    int r = -1;
    for (const auto& rel : relations) r = std::max(r, rel.degree.total());
    return r;
}

void Presentation::check() const {
    if (m < 1) throw InputError("presentation arity must be >= 1");
    if (N < 0) throw InputError("presentation window cap must be >= 0");
    for (const auto& w : generators) {
        if (w.arity() != m) throw InputError("generator degree " + w.str() + " has wrong arity");
        for (int x : w.c) {
            if (x < 0) throw InputError("generator degree " + w.str() + " has a negative entry");
        }
        if (w.total() > N) throw InputError("generator degree " + w.str() + " outside window");
    }
    for (size_t k = 0; k < relations.size(); ++k) {
        const auto& rel = relations[k];
        const std::string where = "relation " + std::to_string(k);
        if (rel.degree.arity() != m) throw InputError(where + ": degree has wrong arity");
        for (int x : rel.degree.c) {
            if (x < 0) throw InputError(where + ": degree has a negative entry");
        }
        if (rel.degree.total() > N) throw InputError(where + ": degree outside window");
        for (const auto& term : rel.terms) {
            if (term.gen < 0 || term.gen >= static_cast<int>(generators.size())) {
                throw InputError(where + ": generator index " + std::to_string(term.gen) +
                                 " out of range");
            }
            if (!(term.map.source() == generators[static_cast<size_t>(term.gen)])) {
                throw InputError(where + ": term map source " + term.map.source().str() +
                                 " != generator degree " +
                                 generators[static_cast<size_t>(term.gen)].str());
            }
            if (!(term.map.target() == rel.degree)) {
                throw InputError(where + ": term map target " + term.map.target().str() +
                                 " != relation degree " + rel.degree.str());
            }
        }
    }
}

MorphismTuple random_injection(DetRng& rng, const MultiIndex& a, const MultiIndex& b) {
    if (!leq(a, b)) {
        throw InputError("no injections " + a.str() + " -> " + b.str());
    }
    std::vector<Injection> comps;
    comps.reserve(static_cast<size_t>(a.arity()));
    for (int i = 0; i < a.arity(); ++i) {
        const int ai = a.c[static_cast<size_t>(i)];
        const int bi = b.c[static_cast<size_t>(i)];
        std::vector<int> pool(static_cast<size_t>(bi));
        for (int v = 1; v <= bi; ++v) pool[static_cast<size_t>(v - 1)] = v;
        std::vector<int> img;
        img.reserve(static_cast<size_t>(ai));
        for (int t = 0; t < ai; ++t) {
            const size_t pick = static_cast<size_t>(rng.below(pool.size()));
            img.push_back(pool[pick]);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
        }
        comps.emplace_back(ai, bi, std::move(img));
    }
    return MorphismTuple(std::move(comps));
}

namespace {

/* Random degree of the given arity and exact total. */
MultiIndex random_degree_with_total(DetRng& rng, int m, int total) {
    MultiIndex n;
    n.c.assign(static_cast<size_t>(m), 0);
    int left = total;
    for (int i = 0; i + 1 < m; ++i) {
        n.c[static_cast<size_t>(i)] = static_cast<int>(rng.below(static_cast<std::uint64_t>(left) + 1));
        left -= n.c[static_cast<size_t>(i)];
    }
    n.c[static_cast<size_t>(m - 1)] = left;
    return n;
}

Rational random_coeff(DetRng& rng) {
    const int mag = rng.int_in(1, 3);
    return Rational(rng.coin() ? mag : -mag);
}

}  // namespace

Presentation random_presentation(int m, int d, int r, int gen_count, int rel_count,
                                 std::uint64_t seed, int N, FieldConfig field) {
    if (m < 1) throw InputError("random_presentation: arity must be >= 1");
    if (d < -1 || r < -1) throw InputError("random_presentation: degrees must be >= -1");
    if (N < std::max(d, r)) throw InputError("random_presentation: window cap below max(d, r)");
    Presentation pres;
    pres.m = m;
    pres.N = N;
    pres.field = field;
    if (d < 0) return pres;  // zero module: no generators, no relations
    DetRng rng(seed);
    pres.generators.reserve(static_cast<size_t>(gen_count));
    for (int j = 0; j < gen_count; ++j) {
        const int total = (j == 0) ? d : rng.int_in(0, d);
        pres.generators.push_back(random_degree_with_total(rng, m, total));
    }
    if (r < 0 || rel_count == 0) return pres;
    for (int k = 0; k < rel_count; ++k) {
        // anchor generator must fit under the relation degree
        std::vector<int> feasible;
        for (int j = 0; j < gen_count; ++j) {
            if (pres.generators[static_cast<size_t>(j)].total() <= r) feasible.push_back(j);
        }
        if (feasible.empty()) {
            throw InputError("random_presentation: r below every generator degree");
        }
        const int anchor = feasible[static_cast<size_t>(rng.below(feasible.size()))];
        const MultiIndex& w = pres.generators[static_cast<size_t>(anchor)];
        const int total = (k == 0) ? r : rng.int_in(w.total(), r);
        MultiIndex u = w;
        const MultiIndex extra = random_degree_with_total(rng, m, total - w.total());
        for (int i = 0; i < m; ++i) u.c[static_cast<size_t>(i)] += extra.c[static_cast<size_t>(i)];
        Relation rel;
        rel.degree = u;
        rel.terms.push_back({anchor, random_injection(rng, w, u), random_coeff(rng)});
        const int more = rng.int_in(0, 2);
        for (int t = 0; t < more; ++t) {
            std::vector<int> fits;
            for (int j = 0; j < gen_count; ++j) {
                if (leq(pres.generators[static_cast<size_t>(j)], u)) fits.push_back(j);
            }
            const int j = fits[static_cast<size_t>(rng.below(fits.size()))];
            rel.terms.push_back(
                {j, random_injection(rng, pres.generators[static_cast<size_t>(j)], u),
                 random_coeff(rng)});
        }
        pres.relations.push_back(std::move(rel));
    }
    return pres;
}

}  // namespace fimreg
