#include "fimreg/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "fimreg/errors.hpp"
#include "fimreg/functors.hpp"
#include "fimreg/homology.hpp"
#include "fimreg/module.hpp"
#include "fimreg/oracle.hpp"
#include "fimreg/presentation.hpp"
#include "fimreg/rho.hpp"

namespace fimreg {

namespace {

const std::vector<std::string> kCampaigns = {
    "ce-m1",  "main-bound", "weak-bound", "four-term", "two-row",
    "church", "kv-bounds",  "degS-degD",  "split-h0",  "restrict-free"};

bool known_campaign(const std::string& name) {
    return name == "compare-oracle" ||
           std::find(kCampaigns.begin(), kCampaigns.end(), name) != kCampaigns.end();
}

/* Precomputed per-index vanishing bounds for the three t_i campaigns.
 * A bound b_i means: every nonzero H_i(V)_n must have |n| <= b_i.  The
 * in-window check is vacuous when b_i >= N (no degree in the window can
 * refute it); that is reported, never silently counted as a pass. */
struct BoundSet {
    int i_min = 0;
    std::vector<bool> covered;  // lemma applies to this index
    std::vector<bool> vacuous;
    std::vector<long long> bound;  // meaningful where covered && !vacuous
    std::string source;            // formula text for the report
    std::string refusal;           // nonempty when rho itself was refused
    bool all_vacuous = false;
};

BoundSet make_bounds(const CampaignConfig& cfg) {
    BoundSet bs;
    bs.covered.assign(static_cast<size_t>(cfg.I) + 1, false);
    bs.vacuous.assign(static_cast<size_t>(cfg.I) + 1, false);
    bs.bound.assign(static_cast<size_t>(cfg.I) + 1, 0);

    RhoBudget rb;
    rb.max_bits = cfg.rho_bits;
    RhoEngine eng(rb);

    BigInt base;
    long long slope = 0;
    bool have_base = true;
    if (cfg.name == "ce-m1") {
        bs.i_min = 1;
        slope = 1;
        base = BigInt(cfg.d) + cfg.r - 1;
        bs.source = "t_i <= i + d + r - 1";
    } else if (cfg.name == "main-bound") {
        bs.i_min = 0;
        slope = 1;
        bs.source = "t_i <= i + rho_m(d,r)";
        try {
            base = eng.rho(cfg.m, BigInt(cfg.d), BigInt(cfg.r));
        } catch (const BudgetError& e) {
            have_base = false;
            bs.refusal = e.what();
        }
    } else {  // weak-bound
        bs.i_min = 0;
        slope = 2;
        bs.source = "t_i <= 2i + rho_1(d,r) + rho_{m-1}(d,r)";
        try {
            base = eng.rho(1, BigInt(cfg.d), BigInt(cfg.r)) +
                   eng.rho(cfg.m - 1, BigInt(cfg.d), BigInt(cfg.r));
        } catch (const BudgetError& e) {
            have_base = false;
            bs.refusal = e.what();
        }
    }

    bs.all_vacuous = true;
    for (int i = bs.i_min; i <= cfg.I; ++i) {
        bs.covered[static_cast<size_t>(i)] = true;
        if (!have_base) {
            bs.vacuous[static_cast<size_t>(i)] = true;
            continue;
        }
        const BigInt b = base + slope * i;
        if (b >= cfg.N) {
            bs.vacuous[static_cast<size_t>(i)] = true;
        } else {
            bs.bound[static_cast<size_t>(i)] = b.convert_to<long long>();
            bs.all_vacuous = false;
        }
    }
    return bs;
}

std::string tdesc(int t, bool censored, int window) {
    std::ostringstream s;
    s << t;
    if (censored) s << " (censored at window " << window << ")";
    return s.str();
}

void push(InstanceResult& res, std::string check, std::string verdict, std::string detail) {
    res.checks.push_back({std::move(check), std::move(verdict), std::move(detail)});
}

void push_violations(InstanceResult& res, const std::string& check,
                     const std::vector<std::string>& viols, const std::string& pass_detail) {
    if (viols.empty()) {
        push(res, check, "pass", pass_detail);
        return;
    }
    std::string detail = viols.front();
    if (viols.size() > 1) detail += " (+" + std::to_string(viols.size() - 1) + " more)";
    push(res, check, "fail", detail);
}

void bound_checks(const CampaignConfig& cfg, const BoundSet& bs, const HomologyTable& tab,
                  std::uint64_t seed, InstanceResult& res) {
    for (int i = bs.i_min; i <= cfg.I; ++i) {
        const std::string name = "bound i=" + std::to_string(i);
        if (bs.vacuous[static_cast<size_t>(i)]) {
            push(res, name, "vacuous",
                 bs.refusal.empty()
                     ? "bound >= N: no in-window degree can refute the inequality"
                     : "rho refused: " + bs.refusal);
            continue;
        }
        const long long b = bs.bound[static_cast<size_t>(i)];
        int extra = 0;
        std::string first;
        for (const auto& [key, dim] : tab.entries) {
            if (key.first != i || dim == 0) continue;
            if (key.second.total() > b) {
                if (first.empty()) {
                    std::ostringstream s;
                    s << "seed=" << seed << " i=" << i << " n=" << key.second.str()
                      << ": dim H_i = " << dim << " nonzero, |n| = " << key.second.total()
                      << " > bound " << b;
                    first = s.str();
                } else {
                    ++extra;
                }
            }
        }
        if (!first.empty()) {
            if (extra) first += " (+" + std::to_string(extra) + " more)";
            push(res, name, "fail", first);
        } else {
            push(res, name, "pass",
                 "no nonzero entry with |n| > " + std::to_string(b) + " (window N=" +
                     std::to_string(tab.N) + ")");
        }
    }
}

/* ---- per-campaign instance bodies ------------------------------------- */

template <class F>
void check_four_term(const CampaignConfig& cfg, const TruncatedModule<F>& v,
                     InstanceResult& res) {
    for (int c = 0; c < cfg.m; ++c) {
        auto ft = kd_functors(v, c);
        auto viols = four_term_check(ft);
        for (const auto& e : ft.k.validate()) viols.push_back("K invalid: " + e);
        for (const auto& e : ft.d.mod.validate()) viols.push_back("D invalid: " + e);
        push_violations(res, "four-term c=" + std::to_string(c), viols,
                        "dim K + dim SV = dim V + dim DV at every degree");
    }
}

template <class F>
void check_two_row(const CampaignConfig& cfg, const TruncatedModule<F>& v,
                   const EngineOptions& opt, std::uint64_t seed, InstanceResult& res) {
    for (int c = 0; c < cfg.m; ++c) {
        auto ft = kd_functors(v, c);
        const auto ld = derived_D(v, c, 3, opt, cfg.cell_budget);
        std::vector<std::string> viols;
        const WindowPtr& win = ft.k.window();
        for (int id = 0; id < win->size(); ++id) {
            const MultiIndex& n = win->at(id);
            const int l0 = ld.at(0, n), l1 = ld.at(1, n), l2 = ld.at(2, n), l3 = ld.at(3, n);
            const int dd = ft.d.mod.dim_at(id), dk = ft.k.dim_at(id);
            std::ostringstream s;
            s << "seed=" << seed << " c=" << c << " n=" << n.str();
            if (l0 != dd) viols.push_back(s.str() + ": L0 D = " + std::to_string(l0) +
                                          " != dim DV = " + std::to_string(dd));
            if (l1 != dk) viols.push_back(s.str() + ": L1 D = " + std::to_string(l1) +
                                          " != dim KV = " + std::to_string(dk));
            if (l2 != 0) viols.push_back(s.str() + ": L2 D = " + std::to_string(l2) + " != 0");
            if (l3 != 0) viols.push_back(s.str() + ": L3 D = " + std::to_string(l3) + " != 0");
        }
        push_violations(res, "two-row c=" + std::to_string(c), viols,
                        "L0 = DV, L1 = KV, L2 = L3 = 0 at every degree");
    }
}

template <class F>
void check_church(const CampaignConfig& cfg, const TruncatedModule<F>& v, std::uint64_t seed,
                  InstanceResult& res) {
    for (int c = 0; c < cfg.m; ++c) {
        auto viols = church_lemma_check(v, c);
        for (auto& e : viols) e = "seed=" + std::to_string(seed) + " " + e;
        push_violations(res, "church c=" + std::to_string(c), viols,
                        "span equality and H0 shift hold at every degree");
    }
}

template <class F>
void check_kv_bounds(const CampaignConfig& cfg, const TruncatedModule<F>& v,
                     const EngineOptions& opt, std::uint64_t seed, InstanceResult& res) {
    RhoBudget rb;
    rb.max_bits = cfg.rho_bits;
    RhoEngine eng(rb);
    BigInt rp, rpp;
    try {
        rp = eng.rho_prime(cfg.m, BigInt(cfg.d), BigInt(cfg.r));
        rpp = eng.rho_dprime(cfg.m, BigInt(cfg.d), BigInt(cfg.r));
    } catch (const BudgetError& e) {
        push(res, "kv-bounds", "skip", std::string("rho'/rho'' refused: ") + e.what());
        return;
    }
    auto bold = bold_functors(v);
    std::vector<std::string> viols;
    for (const auto& e : bold.k.validate()) viols.push_back("KV invalid: " + e);
    auto ktab = homology_table(bold.k, 1, opt);
    const int t0 = ktab.t[0], t1 = ktab.t[1];
    std::ostringstream who;
    who << "seed=" << seed << " ";
    if (BigInt(t0) > rp)
        viols.push_back(who.str() + "t0(KV) = " + std::to_string(t0) + " > rho' = " + rp.str());
    if (BigInt(t1) > rpp)
        viols.push_back(who.str() + "t1(KV) = " + std::to_string(t1) +
                        " > rho'' = " + rpp.str());
    push_violations(res, "kv-bounds", viols,
                    "t0(KV) = " + tdesc(t0, ktab.censored[0], ktab.N) + " <= rho' = " +
                        rp.str() + "; t1(KV) = " + tdesc(t1, ktab.censored[1], ktab.N) +
                        " <= rho'' = " + rpp.str());
}

template <class F>
void check_degs_degd(const CampaignConfig&, const Presentation& pres,
                     const TruncatedModule<F>& v, const EngineOptions& opt,
                     std::uint64_t seed, InstanceResult& res) {
    auto bold = bold_functors(v);

    const auto [deg_v, cen_v] = module_degree(v);
    const auto [deg_s, cen_s] = module_degree(bold.sigma);
    if (cen_v) {
        push(res, "degS", "vacuous",
             "deg(V) censored at N=" + std::to_string(v.window()->cap()) +
                 ": inequality not window-decidable");
    } else if (deg_v <= 1 + deg_s) {
        push(res, "degS", "pass",
             "deg(V) = " + std::to_string(deg_v) + " <= 1 + deg(SV) = " +
                 std::to_string(1 + deg_s) + (cen_s ? " (SV censored, holds a fortiori)" : ""));
    } else if (cen_s) {
        push(res, "degS", "vacuous",
             "deg(SV) censored at N-1 and observed slice too small to conclude");
    } else {
        push(res, "degS", "fail",
             "seed=" + std::to_string(seed) + " deg(V) = " + std::to_string(deg_v) +
                 " > 1 + deg(SV) = " + std::to_string(1 + deg_s));
    }

    const int da = pres.gen_degree();
    const int ra = pres.rel_degree();
    auto dtab = homology_table(bold.d, 1, opt);
    std::vector<std::string> viols;
    for (const auto& e : bold.d.validate()) viols.push_back("DV invalid: " + e);
    if (dtab.t[0] > da - 1)
        viols.push_back("seed=" + std::to_string(seed) + " t0(DV) = " +
                        std::to_string(dtab.t[0]) + " > d-1 = " + std::to_string(da - 1));
    if (dtab.t[1] > ra)
        viols.push_back("seed=" + std::to_string(seed) + " t1(DV) = " +
                        std::to_string(dtab.t[1]) + " > r = " + std::to_string(ra));
    push_violations(res, "degD", viols,
                    "t0(DV) = " + tdesc(dtab.t[0], dtab.censored[0], dtab.N) + " <= " +
                        std::to_string(da - 1) + "; t1(DV) = " +
                        tdesc(dtab.t[1], dtab.censored[1], dtab.N) + " <= " +
                        std::to_string(ra));
}

template <class F>
void check_split_h0(const CampaignConfig& cfg, const TruncatedModule<F>& v,
                    const EngineOptions& opt, std::uint64_t seed, InstanceResult& res) {
    const SplitSpec s = coordinate_split(cfg.m, {0});
    auto span_viols = split_span_check(v, s);
    for (auto& e : span_viols) e = "seed=" + std::to_string(seed) + " " + e;
    push_violations(res, "split-span", span_viols,
                    "V~ = V^hor + V^ver as subspaces at every degree");

    auto comp_viols = split_h0_compose_check(v, s);
    for (auto& e : comp_viols) e = "seed=" + std::to_string(seed) + " " + e;
    push_violations(res, "h0-compose", comp_viols,
                    "H0^ver(H0^hor) = H0 = H0^hor(H0^ver) dimensionwise");

    std::vector<std::string> slice_viols;
    for (const Side side : {Side::Hor, Side::Ver}) {
        const auto direct = side_h0_dims(v, s, side);
        const auto sliced = hor_ver_homology(v, s, side, 0, opt);
        for (int id = 0; id < v.window()->size(); ++id) {
            if (direct[static_cast<size_t>(id)] != sliced.dims[0][static_cast<size_t>(id)]) {
                slice_viols.push_back(
                    "seed=" + std::to_string(seed) + " side=" +
                    (side == Side::Hor ? std::string("hor") : std::string("ver")) + " n=" +
                    v.window()->at(id).str() + ": quotient dim " +
                    std::to_string(direct[static_cast<size_t>(id)]) + " != sliced H0 dim " +
                    std::to_string(sliced.dims[0][static_cast<size_t>(id)]));
            }
        }
    }
    push_violations(res, "h0-slices", slice_viols,
                    "sliced H0 agrees with the quotient route on both sides");
}

template <class F>
void check_restrict_free(const CampaignConfig& cfg, const Presentation& pres,
                         const TruncatedModule<F>& v, const F& field, std::uint64_t seed,
                         InstanceResult& res) {
    auto mf = free_module(v.window(), field, pres.generators);
    const int x_max = std::min(cfg.N - 1, 2);
    std::vector<std::string> viols;
    for (int x = 0; x <= x_max; ++x) {
        auto rest = restrict_coord(mf.mod, 0, x);
        for (const auto& e : rest.validate())
            viols.push_back("seed=" + std::to_string(seed) + " x=" + std::to_string(x) +
                            " restricted free module invalid: " + e);
        const WindowPtr& rwin = rest.window();
        for (int id = 0; id < rwin->size(); ++id) {
            const MultiIndex& y = rwin->at(id);
            std::int64_t expect = 0;
            for (const auto& w : pres.generators) {
                std::vector<int> tail(w.c.begin() + 1, w.c.end());
                const std::int64_t head =
                    hom_size(MultiIndex(std::vector<int>{w.c[0]}), MultiIndex(std::vector<int>{x}));
                expect += head * hom_size(MultiIndex(tail), y);
            }
            if (rest.dim_at(id) != expect) {
                viols.push_back("seed=" + std::to_string(seed) + " x=" + std::to_string(x) +
                                " Y=" + y.str() + ": dim " + std::to_string(rest.dim_at(id)) +
                                " != hom_size product " + std::to_string(expect));
            }
        }
    }
    push_violations(res, "restrict-free", viols,
                    "restricted free dims equal hom_size(W,x) * dim M(Z) for x <= " +
                        std::to_string(x_max));

    std::vector<std::string> lk_viols;
    for (int x = 0; x <= x_max; ++x) {
        auto rest = restrict_coord(v, 0, x);
        const WindowPtr& rwin = rest.window();
        for (int id = 0; id < rwin->size(); ++id) {
            const MultiIndex& y = rwin->at(id);
            std::vector<int> full;
            full.push_back(x);
            full.insert(full.end(), y.c.begin(), y.c.end());
            const int direct = v.dim_at(v.window()->id(MultiIndex(full)));
            if (rest.dim_at(id) != direct) {
                lk_viols.push_back("seed=" + std::to_string(seed) + " x=" + std::to_string(x) +
                                   " Y=" + y.str() + ": restricted dim " +
                                   std::to_string(rest.dim_at(id)) + " != direct lookup " +
                                   std::to_string(direct));
            }
        }
    }
    push_violations(res, "restrict-lookup", lk_viols,
                    "restriction of V matches direct degree lookup");
}

/* ---- scaffolding ------------------------------------------------------- */

void finish_status(InstanceResult& res) {
    bool any_fail = false, any_skip = false;
    for (const auto& c : res.checks) {
        if (c.verdict == "fail") any_fail = true;
        if (c.verdict == "skip") any_skip = true;
    }
    res.status = any_fail ? "fail" : any_skip ? "skip" : "pass";
}

template <class F>
InstanceResult run_instance(const CampaignConfig& cfg, const BoundSet* bounds,
                            std::uint64_t seed, const F& field, bool oracle_mode) {
    InstanceResult res;
    res.seed = seed;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const Presentation pres = random_presentation(cfg.m, cfg.d, cfg.r, cfg.gen_count,
                                                      cfg.rel_count, seed, cfg.N, cfg.field);
        auto pm = build_module(pres, field);
        const TruncatedModule<F>& v = pm.quotient.mod;
        {
            auto errs = v.validate();
            if (!errs.empty()) {
                push(res, "validate", "fail",
                     "seed=" + std::to_string(seed) + " " + errs.front());
                finish_status(res);
                return res;
            }
        }
        EngineOptions opt;
        opt.max_level = cfg.I;
        opt.budget_cells = cfg.cell_budget;
        opt.seed = seed;

        if (oracle_mode) {
            const auto tab = homology_table(v, cfg.I, opt);
            const auto oracle = tor_oracle(v, cfg.I, cfg.oracle_budget);
            if (tab == oracle) {
                push(res, "oracle-equal", "pass",
                     std::to_string(tab.entries.size()) + " nonzero entries agree");
            } else {
                ordered_json dump;
                dump["presentation"] = presentation_to_json(pres);
                dump["engine_table"] = table_to_json(tab);
                dump["oracle_table"] = table_to_json(oracle);
                push(res, "oracle-equal", "fail",
                     "seed=" + std::to_string(seed) + " tables differ; forensic dump: " +
                         dump.dump());
            }
        } else if (cfg.name == "ce-m1" || cfg.name == "main-bound" ||
                   cfg.name == "weak-bound") {
            const auto tab = homology_table(v, cfg.I, opt);
            bound_checks(cfg, *bounds, tab, seed, res);
        } else if (cfg.name == "four-term") {
            check_four_term(cfg, v, res);
        } else if (cfg.name == "two-row") {
            check_two_row(cfg, v, opt, seed, res);
        } else if (cfg.name == "church") {
            check_church(cfg, v, seed, res);
        } else if (cfg.name == "kv-bounds") {
            check_kv_bounds(cfg, v, opt, seed, res);
        } else if (cfg.name == "degS-degD") {
            check_degs_degd(cfg, pres, v, opt, seed, res);
        } else if (cfg.name == "split-h0") {
            check_split_h0(cfg, v, opt, seed, res);
        } else if (cfg.name == "restrict-free") {
            check_restrict_free(cfg, pres, v, field, seed, res);
        } else {
            throw InputError("unknown campaign: " + cfg.name);
        }
    } catch (const BudgetError& e) {
        push(res, "budget", "skip", "seed=" + std::to_string(seed) + " refused: " + e.what());
    }
    finish_status(res);
    res.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return res;
}

template <class F>
CampaignReport run_all(const CampaignConfig& cfg, const F& field, bool oracle_mode) {
    CampaignReport rep;
    rep.config = cfg;

    BoundSet bounds;
    const bool uses_bounds = !oracle_mode && (cfg.name == "ce-m1" || cfg.name == "main-bound" ||
                                              cfg.name == "weak-bound");
    if (uses_bounds) {
        bounds = make_bounds(cfg);
        rep.notes.push_back("bound: " + bounds.source);
        if (!bounds.refusal.empty())
            rep.notes.push_back("rho refused, all checks vacuous: " + bounds.refusal);
        std::string vac;
        for (int i = bounds.i_min; i <= cfg.I; ++i)
            if (bounds.vacuous[static_cast<size_t>(i)])
                vac += (vac.empty() ? "" : ",") + std::to_string(i);
        if (bounds.all_vacuous)
            rep.notes.push_back(
                "VACUOUS: every in-window check is empty (bound >= N for all i); this run "
                "certifies nothing");
        else if (!vac.empty())
            rep.notes.push_back("vacuous for i in {" + vac + "}; non-vacuous checks remain");
        else
            rep.notes.push_back("non-vacuous: every checked index has bound < N");
    }

    for (int k = 0; k < cfg.count; ++k) {
        rep.instances.push_back(run_instance(cfg, uses_bounds ? &bounds : nullptr,
                                             cfg.seed + static_cast<std::uint64_t>(k), field,
                                             oracle_mode));
    }
    std::sort(rep.instances.begin(), rep.instances.end(),
              [](const InstanceResult& a, const InstanceResult& b) { return a.seed < b.seed; });

    for (const auto& inst : rep.instances) {
        if (inst.status == "pass") ++rep.passed;
        if (inst.status == "fail") ++rep.violations;
        if (inst.status == "skip") ++rep.skips;
        for (const auto& c : inst.checks)
            if (c.verdict == "vacuous") ++rep.vacuous_checks;
    }
    rep.aggregate_pass = rep.violations == 0;
    if (rep.skips > 0)
        rep.notes.push_back(std::to_string(rep.skips) +
                            " instance(s) skipped on budget refusal (recorded, not silent)");
    return rep;
}

template <class Fn>
auto with_field(const FieldConfig& cfg, Fn&& fn) {
    if (cfg.kind == FieldConfig::Kind::Rationals) {
        RationalField f;
        return fn(f);
    }
    PrimeField f(cfg.p);
    return fn(f);
}

}  // namespace

const std::vector<std::string>& campaign_names() { return kCampaigns; }

void CampaignConfig::check() const {
    if (!known_campaign(name)) throw InputError("unknown campaign: " + name);
    if (m < 1) throw InputError("campaign: m must be >= 1");
    if (d < 0) throw InputError("campaign: d must be >= 0");
    if (r < -1) throw InputError("campaign: r must be >= -1");
    if (r < 0 && rel_count > 0)
        throw InputError("campaign: r = -1 requires rel_count = 0");
    if (N < std::max({d, r, 1})) throw InputError("campaign: need N >= max(d, r) and N >= 1");
    if (I < 1) throw InputError("campaign: I must be >= 1");
    if (count < 1) throw InputError("campaign: count must be >= 1");
    if (gen_count < 1) throw InputError("campaign: gen_count must be >= 1");
    if (rel_count < 0) throw InputError("campaign: rel_count must be >= 0");
    if (cell_budget <= 0 || oracle_budget <= 0 || rho_bits <= 0)
        throw InputError("campaign: budgets must be positive");
    if (name == "ce-m1" && m != 1) throw InputError("ce-m1 requires m = 1");
    if ((name == "weak-bound" || name == "split-h0" || name == "restrict-free") && m < 2)
        throw InputError(name + " requires m >= 2");
}

CampaignReport run_campaign(const CampaignConfig& config) {
    config.check();
    if (config.name == "compare-oracle")
        throw InputError("compare-oracle runs through compare_oracle(), not run_campaign()");
    return with_field(config.field,
                      [&](const auto& f) { return run_all(config, f, false); });
}

CampaignReport compare_oracle(const CampaignConfig& config) {
    CampaignConfig cfg = config;
    cfg.name = "compare-oracle";
    cfg.check();
    return with_field(cfg.field, [&](const auto& f) { return run_all(cfg, f, true); });
}

int CampaignReport::exit_code() const {
    if (violations > 0) return 1;
    if (skips > 0) return 3;
    return 0;
}

ordered_json campaign_report_json(const CampaignReport& rep) {
    ordered_json j;
    j["format"] = "fimreg-campaign-report";
    j["format_version"] = 1;
    j["campaign"] = rep.config.name;
    {
        ordered_json c;
        c["m"] = rep.config.m;
        c["d"] = rep.config.d;
        c["r"] = rep.config.r;
        c["N"] = rep.config.N;
        c["I"] = rep.config.I;
        c["count"] = rep.config.count;
        c["seed"] = rep.config.seed;
        c["field"] = rep.config.field.str();
        c["gen_count"] = rep.config.gen_count;
        c["rel_count"] = rep.config.rel_count;
        c["cell_budget"] = rep.config.cell_budget;
        c["oracle_budget"] = rep.config.oracle_budget;
        c["rho_bits"] = rep.config.rho_bits;
        j["config"] = std::move(c);
    }
    {
        ordered_json e;
        e["field"] = rep.config.field.str();
        e["module_format_version"] = 1;
        j["environment"] = std::move(e);
    }
    j["instances"] = ordered_json::array();
    for (const auto& inst : rep.instances) {
        ordered_json ji;
        ji["seed"] = inst.seed;
        ji["status"] = inst.status;
        ji["checks"] = ordered_json::array();
        for (const auto& c : inst.checks) {
            ordered_json jc;
            jc["check"] = c.check;
            jc["verdict"] = c.verdict;
            jc["detail"] = c.detail;
            ji["checks"].push_back(std::move(jc));
        }
        if (rep.config.timings) ji["timing_ms"] = inst.timing_ms;
        j["instances"].push_back(std::move(ji));
    }
    {
        ordered_json s;
        s["instances"] = static_cast<int>(rep.instances.size());
        s["passed"] = rep.passed;
        s["violations"] = rep.violations;
        s["skips"] = rep.skips;
        s["vacuous_checks"] = rep.vacuous_checks;
        s["aggregate_pass"] = rep.aggregate_pass;
        s["notes"] = rep.notes;
        j["summary"] = std::move(s);
    }
    return j;
}

std::string campaign_report_text(const CampaignReport& rep) {
    std::ostringstream out;
    out << "campaign " << rep.config.name << ": " << rep.instances.size() << " instance(s), "
        << rep.passed << " passed, " << rep.violations << " violation(s), " << rep.skips
        << " skip(s), " << rep.vacuous_checks << " vacuous check(s)\n";
    out << "  config: m=" << rep.config.m << " d=" << rep.config.d << " r=" << rep.config.r
        << " N=" << rep.config.N << " I=" << rep.config.I << " seed=" << rep.config.seed
        << " field=" << rep.config.field.str() << " gens=" << rep.config.gen_count
        << " rels=" << rep.config.rel_count << "\n";
    for (const auto& note : rep.notes) out << "  note: " << note << "\n";
    for (const auto& inst : rep.instances) {
        if (inst.status == "pass") continue;
        out << "  seed " << inst.seed << ": " << inst.status << "\n";
        for (const auto& c : inst.checks) {
            if (c.verdict == "pass") continue;
            out << "    [" << c.verdict << "] " << c.check << ": " << c.detail << "\n";
        }
    }
    out << (rep.aggregate_pass ? "RESULT: pass" : "RESULT: FAIL") << "\n";
    return out.str();
}

}  // namespace fimreg
