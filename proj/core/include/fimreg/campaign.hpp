#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fimreg/field.hpp"
#include "fimreg/json_io.hpp"

namespace fimreg {

/* Seeded verification campaigns: each named campaign draws `count` random
 * presented modules (instance k uses seed + k), validates them, and runs one
 * lemma's check set degreewise.  Everything is exact; a check is never
 * weakened to pass.  When a bound exceeds the window the check is vacuous
 * in-window and the report says so explicitly instead of claiming success. */

struct CampaignConfig {
    std::string name;
    int m = 1;
    int d = 1;
    int r = 1;
    int N = 4;
    int I = 2;  // max homological index examined
    int count = 10;
    std::uint64_t seed = 1;
    FieldConfig field;
    int gen_count = 2;
    int rel_count = 2;
    /* Refusal thresholds: dense-matrix cells for the homology engine and the
     * Tor oracle, result bits for rho evaluations. */
    std::int64_t cell_budget = 400'000'000;
    std::int64_t oracle_budget = 100'000'000;
    std::int64_t rho_bits = 64'000'000;
    /* Opt-in wall-clock per instance; excluded by default so identical
     * configs give byte-identical reports. */
    bool timings = false;

    /* Structural validity plus the named campaign's arity requirements. */
    void check() const;
};

const std::vector<std::string>& campaign_names();

struct CheckResult {
    std::string check;
    std::string verdict;  // "pass" | "fail" | "skip" | "vacuous"
    std::string detail;
};

struct InstanceResult {
    std::uint64_t seed = 0;
    std::string status;  // "pass" | "fail" | "skip"
    std::vector<CheckResult> checks;
    double timing_ms = 0.0;
};

struct CampaignReport {
    CampaignConfig config;
    std::vector<InstanceResult> instances;  // ascending seed
    int passed = 0;
    int violations = 0;
    int skips = 0;
    int vacuous_checks = 0;
    bool aggregate_pass = false;  // no failed check anywhere
    std::vector<std::string> notes;

    /* 0 all pass, 1 violation found, 3 budget refusals (and no violation). */
    int exit_code() const;
};

CampaignReport run_campaign(const CampaignConfig& config);

/* Engine-vs-oracle equality on every table entry; a mismatch embeds both
 * tables and the serialized presentation in the failure detail. */
CampaignReport compare_oracle(const CampaignConfig& config);

ordered_json campaign_report_json(const CampaignReport& rep);
std::string campaign_report_text(const CampaignReport& rep);

}  // namespace fimreg
