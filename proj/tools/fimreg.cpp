#include <CLI11.hpp>

#include <fimreg/campaign.hpp>
#include <fimreg/functors.hpp>
#include <fimreg/homology.hpp>
#include <fimreg/json_io.hpp>
#include <fimreg/oracle.hpp>
#include <fimreg/presentation.hpp>
#include <fimreg/rho.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace fimreg;

/* Every loaded file carries its own field; computation is dispatched to the
 * matching exact-arithmetic backend. */
template <class Fn>
int with_field(const FieldConfig& fc, Fn&& fn) {
    if (fc.kind == FieldConfig::Kind::Rationals) {
        RationalField f;
        return fn(f);
    }
    PrimeField f(fc.p);
    return fn(f);
}

void write_or_print(const ordered_json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        save_json_file(j, out_path);
        std::cout << "wrote " << out_path << "\n";
    }
}

template <class F>
int total_dim(const TruncatedModule<F>& v) {
    int total = 0;
    for (int id = 0; id < v.window()->size(); ++id) total += v.dim_at(id);
    return total;
}

int cmd_rho(int m, long long d, long long r, std::int64_t max_bits, std::int64_t max_steps) {
    RhoEngine eng(RhoBudget{max_bits, max_steps});
    const std::string value = eng.rho(m, d, r).str();
    std::cout << "rho(m=" << m << ", d=" << d << ", r=" << r << ") = " << value << "\n";
    if (m >= 2 && d >= 0) {
        std::cout << "rho_prime  = " << eng.rho_prime(m, d, r).str() << "\n";
        std::cout << "rho_dprime = " << eng.rho_dprime(m, d, r).str() << "\n";
    }
    return 0;
}

int cmd_rho_table(int m_max, long long d_max, long long r_max, const std::string& format,
                  const std::string& out_path, std::int64_t max_bits, std::int64_t max_steps) {
    auto table = rho_table(m_max, d_max, r_max, RhoBudget{max_bits, max_steps});
    if (format == "json") {
        write_or_print(rho_table_json(table), out_path);
    } else if (out_path.empty()) {
        std::cout << rho_table_csv(table);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw InputError("cannot open for writing: " + out_path);
        out << rho_table_csv(table);
        std::cout << "wrote " << out_path << "\n";
    }
    if (!table.gap_violations.empty()) {
        for (const auto& v : table.gap_violations) std::cerr << "gap violation: " << v << "\n";
        return 1;
    }
    return 0;
}

int cmd_build(int m, int d, int r, int gens, int rels, std::uint64_t seed, int n,
              const FieldConfig& fc, const std::string& out_path) {
    auto pres = random_presentation(m, d, r, gens, rels, seed, n, fc);
    save_presentation(pres, out_path);
    std::cout << "wrote " << out_path << ": m=" << m << " N=" << n << " field=" << fc.str()
              << " gens=" << gens << " (top total " << pres.gen_degree() << ")"
              << " rels=" << rels << " (top total " << pres.rel_degree() << ")\n";
    return 0;
}

int cmd_validate(const std::string& path) {
    auto pres = load_presentation(path);
    return with_field(pres.field, [&](const auto& f) {
        auto built = build_module(pres, f);
        auto errs = built.quotient.mod.validate();
        if (!errs.empty()) {
            for (const auto& e : errs) std::cerr << "invalid: " << e << "\n";
            return 1;
        }
        std::cout << "ok: m=" << pres.m << " N=" << pres.N << " field=" << pres.field.str()
                  << " cover dim " << total_dim(built.cover.mod) << ", presented dim "
                  << total_dim(built.quotient.mod) << " across "
                  << built.quotient.mod.window()->size() << " degrees\n";
        return 0;
    });
}

int cmd_homology(const std::string& path, int max_i, bool oracle, const std::string& strategy,
                 std::uint64_t seed, std::uint64_t budget_cells, std::uint64_t oracle_budget,
                 const std::string& out_path) {
    auto pres = load_presentation(path);
    return with_field(pres.field, [&](const auto& f) {
        auto built = build_module(pres, f);
        EngineOptions opt;
        opt.strategy =
            strategy == "seeded-random" ? LiftStrategy::SeededRandom : LiftStrategy::PivotGreedy;
        opt.seed = seed;
        opt.budget_cells = budget_cells;
        auto table = homology_table(built.quotient.mod, max_i, opt);
        std::cout << table_to_text(table, pres.m);
        if (!out_path.empty()) {
            save_json_file(table_to_json(table), out_path);
            std::cout << "wrote " << out_path << "\n";
        }
        if (oracle) {
            auto direct = tor_oracle(built.quotient.mod, max_i, oracle_budget);
            if (direct == table) {
                std::cout << "oracle: tables agree\n";
                return 0;
            }
            std::cerr << "oracle: MISMATCH\n" << table_to_json(direct).dump(2) << "\n";
            return 1;
        }
        return 0;
    });
}

int cmd_regularity(const std::string& path, int max_i, std::uint64_t budget_cells,
                   std::int64_t rho_bits) {
    auto pres = load_presentation(path);
    return with_field(pres.field, [&](const auto& f) {
        auto built = build_module(pres, f);
        EngineOptions opt;
        opt.budget_cells = budget_cells;
        auto table = homology_table(built.quotient.mod, max_i, opt);
        auto rep = regularity_report(table);
        /* Compare against the recursive bound at the presentation's own
         * generator / relation degrees. */
        const long long d = pres.gen_degree();
        const long long r = pres.rel_degree();
        std::string bound_note;
        try {
            RhoEngine eng(RhoBudget{rho_bits, RhoBudget{}.max_steps});
            BigInt rho = eng.rho(pres.m, d, r);
            rep.have_bound = true;
            rep.rho_value = rho.str();
            rep.slack = BigInt(rho - rep.reg).str();
        } catch (const BudgetError& e) {
            bound_note = e.what();
        }
        ordered_json j;
        j["N"] = rep.N;
        j["max_i"] = rep.I;
        j["t"] = rep.t;
        j["censored"] = rep.censored;
        j["conclusive"] = rep.conclusive;
        j["reg"] = rep.reg;
        j["d"] = d;
        j["r"] = r;
        if (rep.have_bound) {
            j["rho"] = rep.rho_value;
            j["slack"] = rep.slack;
        } else {
            j["rho_refusal"] = bound_note;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    });
}

/* Structural identities on a single presentation file.  Each check prints one
 * line per coordinate (or per split) and any mismatch verbatim. */
int cmd_functors(const std::string& path, const std::string& check, std::uint64_t budget_cells) {
    auto pres = load_presentation(path);
    return with_field(pres.field, [&](const auto& f) {
        auto built = build_module(pres, f);
        const auto& v = built.quotient.mod;
        std::vector<std::string> bad;
        auto run_coord = [&](const std::string& label, auto&& fn) {
            for (int i = 0; i < pres.m; ++i) {
                auto errs = fn(i);
                for (auto& e : errs) bad.push_back(label + " i=" + std::to_string(i) + ": " + e);
                std::cout << label << " i=" << i << ": "
                          << (errs.empty() ? "ok" : std::to_string(errs.size()) + " mismatch(es)")
                          << "\n";
            }
        };
        if (check == "four-term") {
            run_coord("four-term", [&](int i) { return four_term_check(kd_functors(v, i)); });
        } else if (check == "church") {
            run_coord("church", [&](int i) { return church_lemma_check(v, i); });
        } else if (check == "two-row") {
            run_coord("two-row", [&](int i) {
                std::vector<std::string> errs;
                auto ft = kd_functors(v, i);
                EngineOptions opt;
                opt.budget_cells = budget_cells;
                auto ltab = derived_D(v, i, 3, opt, budget_cells);
                const auto& win = ft.k.window();
                for (int id = 0; id < win->size(); ++id) {
                    const MultiIndex& n = win->at(id);
                    const int l0 = ltab.at(0, n), l1 = ltab.at(1, n);
                    const int l2 = ltab.at(2, n), l3 = ltab.at(3, n);
                    if (l0 != ft.d.mod.dim_at(id))
                        errs.push_back("L0 != dim D at " + n.str());
                    if (l1 != ft.k.dim_at(id))
                        errs.push_back("L1 != dim K at " + n.str());
                    if (l2 != 0 || l3 != 0)
                        errs.push_back("L2/L3 nonzero at " + n.str());
                }
                return errs;
            });
        } else if (check == "split-h0") {
            if (pres.m < 2) throw InputError("split-h0 needs m >= 2");
            auto s = coordinate_split(pres.m, {0});
            auto errs = split_span_check(v, s);
            for (auto& e : errs) bad.push_back("split-span: " + e);
            std::cout << "split-span: " << (errs.empty() ? "ok" : "mismatch") << "\n";
            errs = split_h0_compose_check(v, s);
            for (auto& e : errs) bad.push_back("h0-compose: " + e);
            std::cout << "h0-compose: " << (errs.empty() ? "ok" : "mismatch") << "\n";
        } else if (check == "restrict") {
            /* Every coordinate-0 slice of the module must agree with direct
             * degree lookups. */
            const auto& win = v.window();
            for (int x = 0; x <= win->cap(); ++x) {
                auto rest = restrict_coord(v, 0, x);
                auto errs = rest.validate();
                for (auto& e : errs) bad.push_back("restrict x=" + std::to_string(x) + ": " + e);
                const auto& rwin = rest.window();
                for (int rid = 0; rid < rwin->size(); ++rid) {
                    std::vector<int> full{x};
                    const MultiIndex& y = rwin->at(rid);
                    full.insert(full.end(), y.c.begin(), y.c.end());
                    const int want = v.dim_at(win->id(MultiIndex(full)));
                    if (rest.dim_at(rid) != want) {
                        bad.push_back("restrict x=" + std::to_string(x) + " dim mismatch at " +
                                      y.str());
                    }
                }
                std::cout << "restrict x=" << x << ": done\n";
            }
        } else {
            throw InputError("unknown check: " + check);
        }
        if (!bad.empty()) {
            for (const auto& e : bad) std::cerr << "mismatch: " << e << "\n";
            return 1;
        }
        std::cout << "all checks passed\n";
        return 0;
    });
}

int cmd_verify(const CampaignConfig& cfg, bool oracle_mode, const std::string& json_path) {
    auto rep = oracle_mode ? compare_oracle(cfg) : run_campaign(cfg);
    std::cout << campaign_report_text(rep);
    if (!json_path.empty()) {
        save_json_file(campaign_report_json(rep), json_path);
        std::cout << "wrote " << json_path << "\n";
    }
    return rep.exit_code();
}

int run(int argc, char** argv) {
    CLI::App app{
        "fimreg: exact homological invariants of finitely presented modules over products of "
        "finite-injection categories, on a finite degree window"};
    app.require_subcommand(1);

    std::string field_text;
    app.add_option("--field", field_text,
                   "arithmetic backend: p=<prime> or rationals "
                   "(default: FIMREG_FIELD env var, else p=101)");

    auto field_config = [&]() {
        if (!field_text.empty()) return FieldConfig::parse(field_text);
        return FieldConfig::from_env_or(FieldConfig{});
    };

    /* rho */
    auto* rho_cmd = app.add_subcommand("rho", "evaluate the recursive regularity bound");
    int rho_m = 1;
    long long rho_d = 0, rho_r = 0;
    std::int64_t max_bits = RhoBudget{}.max_bits, max_steps = RhoBudget{}.max_steps;
    rho_cmd->add_option("--m", rho_m, "number of coordinates")->required();
    rho_cmd->add_option("--d", rho_d, "generator degree (>= -1)")->required();
    rho_cmd->add_option("--r", rho_r, "relation degree (>= -1)")->required();
    rho_cmd->add_option("--max-bits", max_bits, "refuse results larger than this many bits");
    rho_cmd->add_option("--max-steps", max_steps, "refuse evaluations needing more steps");

    /* rho-table */
    auto* rt_cmd = app.add_subcommand("rho-table", "tabulate the bound over a grid");
    int rt_m = 2;
    long long rt_d = 4, rt_r = 4;
    std::string rt_format = "csv", rt_out;
    rt_cmd->add_option("--m-max", rt_m, "largest m (from 1)");
    rt_cmd->add_option("--d-max", rt_d, "largest d (from -1)");
    rt_cmd->add_option("--r-max", rt_r, "largest r (from -1)");
    rt_cmd->add_option("--format", rt_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    rt_cmd->add_option("--out", rt_out, "output file (default: stdout)");
    rt_cmd->add_option("--max-bits", max_bits, "per-cell size budget in bits");
    rt_cmd->add_option("--max-steps", max_steps, "per-cell step budget");

    /* build */
    auto* build_cmd =
        app.add_subcommand("build", "generate a reproducible random presentation file");
    int b_m = 1, b_d = 1, b_r = 1, b_gens = 2, b_rels = 2, b_n = 4;
    std::uint64_t b_seed = 1;
    std::string b_out;
    build_cmd->add_option("--m", b_m, "number of coordinates");
    build_cmd->add_option("--d", b_d, "top generator total degree");
    build_cmd->add_option("--r", b_r, "top relation total degree");
    build_cmd->add_option("--gens", b_gens, "generator count");
    build_cmd->add_option("--rels", b_rels, "relation count");
    build_cmd->add_option("--seed", b_seed, "deterministic seed");
    build_cmd->add_option("--N", b_n, "window cap (degrees with total <= N)");
    build_cmd->add_option("--out", b_out, "output presentation file")->required();

    /* validate */
    auto* val_cmd = app.add_subcommand("validate", "load a presentation and check every axiom");
    std::string val_path;
    val_cmd->add_option("file", val_path, "presentation JSON")->required();

    /* homology */
    auto* hom_cmd = app.add_subcommand("homology", "homology table of a presentation file");
    std::string hom_path, hom_strategy = "pivot-greedy", hom_out;
    int hom_max_i = 2;
    bool hom_oracle = false;
    std::uint64_t hom_seed = 1, hom_budget = EngineOptions{}.budget_cells,
                  hom_oracle_budget = 100'000'000;
    hom_cmd->add_option("file", hom_path, "presentation JSON")->required();
    hom_cmd->add_option("--max-i", hom_max_i, "compute H_0..H_max_i");
    hom_cmd->add_flag("--oracle", hom_oracle,
                      "cross-check against the direct resolution (small windows only)");
    hom_cmd->add_option("--strategy", hom_strategy, "lift strategy")
        ->check(CLI::IsMember({"pivot-greedy", "seeded-random"}));
    hom_cmd->add_option("--seed", hom_seed, "seed for seeded-random lifts");
    hom_cmd->add_option("--budget-cells", hom_budget, "matrix cell budget");
    hom_cmd->add_option("--oracle-budget", hom_oracle_budget, "oracle matrix cell budget");
    hom_cmd->add_option("--out", hom_out, "also write the table as JSON");

    /* regularity */
    auto* reg_cmd = app.add_subcommand(
        "regularity", "regularity report, compared against the recursive bound");
    std::string reg_path;
    int reg_max_i = 2;
    std::uint64_t reg_budget = EngineOptions{}.budget_cells;
    std::int64_t reg_rho_bits = RhoBudget{}.max_bits;
    reg_cmd->add_option("file", reg_path, "presentation JSON")->required();
    reg_cmd->add_option("--max-i", reg_max_i, "compute H_0..H_max_i");
    reg_cmd->add_option("--budget-cells", reg_budget, "matrix cell budget");
    reg_cmd->add_option("--rho-bits", reg_rho_bits, "bound size budget in bits");

    /* functors */
    auto* fun_cmd = app.add_subcommand("functors", "structural identities on a presentation file");
    std::string fun_path, fun_check;
    std::uint64_t fun_budget = EngineOptions{}.budget_cells;
    fun_cmd->add_option("file", fun_path, "presentation JSON")->required();
    fun_cmd->add_option("--check", fun_check, "which identity to verify")
        ->required()
        ->check(CLI::IsMember({"four-term", "two-row", "church", "split-h0", "restrict"}));
    fun_cmd->add_option("--budget-cells", fun_budget, "matrix cell budget");

    /* verify / compare-oracle share an instance-grid option set */
    CampaignConfig cfg;
    std::string verify_json;
    auto add_grid = [&](CLI::App* c) {
        c->add_option("--m", cfg.m, "number of coordinates");
        c->add_option("--d", cfg.d, "top generator total degree");
        c->add_option("--r", cfg.r, "top relation total degree");
        c->add_option("--N", cfg.N, "window cap");
        c->add_option("--max-i", cfg.I, "compute H_0..H_max_i");
        c->add_option("--count", cfg.count, "number of random instances");
        c->add_option("--seed", cfg.seed, "base seed (instance k uses seed+k)");
        c->add_option("--gens", cfg.gen_count, "generator count");
        c->add_option("--rels", cfg.rel_count, "relation count");
        c->add_option("--cell-budget", cfg.cell_budget, "matrix cell budget");
        c->add_option("--oracle-budget", cfg.oracle_budget, "oracle matrix cell budget");
        c->add_option("--rho-bits", cfg.rho_bits, "bound size budget in bits");
        c->add_flag("--timings", cfg.timings,
                    "include wall-clock timings in reports (breaks byte determinism)");
        c->add_option("--json", verify_json, "write the full JSON report here");
    };
    auto* ver_cmd = app.add_subcommand("verify", "run a named verification campaign");
    std::vector<std::string> names = campaign_names();
    ver_cmd->add_option("--campaign", cfg.name, "campaign name")
        ->required()
        ->check(CLI::IsMember(names));
    add_grid(ver_cmd);
    auto* co_cmd = app.add_subcommand(
        "compare-oracle", "compare the ladder engine against the direct resolution");
    add_grid(co_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors are input errors; --help stays 0
    }

    if (rho_cmd->parsed()) return cmd_rho(rho_m, rho_d, rho_r, max_bits, max_steps);
    if (rt_cmd->parsed())
        return cmd_rho_table(rt_m, rt_d, rt_r, rt_format, rt_out, max_bits, max_steps);
    if (build_cmd->parsed())
        return cmd_build(b_m, b_d, b_r, b_gens, b_rels, b_seed, b_n, field_config(), b_out);
    if (val_cmd->parsed()) return cmd_validate(val_path);
    if (hom_cmd->parsed())
        return cmd_homology(hom_path, hom_max_i, hom_oracle, hom_strategy, hom_seed, hom_budget,
                            hom_oracle_budget, hom_out);
    if (reg_cmd->parsed()) return cmd_regularity(reg_path, reg_max_i, reg_budget, reg_rho_bits);
    if (fun_cmd->parsed()) return cmd_functors(fun_path, fun_check, fun_budget);
    if (ver_cmd->parsed() || co_cmd->parsed()) {
        cfg.field = field_config();
        return cmd_verify(cfg, co_cmd->parsed(), verify_json);
    }
    throw InputError("no subcommand selected");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const fimreg::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const fimreg::BudgetError& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return 3;
    } catch (const fimreg::InternalError& e) {
        std::cerr << "internal invariant failed (bug): " << e.what() << "\n";
        return 70;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
}
