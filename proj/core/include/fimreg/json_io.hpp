#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "fimreg/presentation.hpp"
#include "fimreg/table.hpp"

namespace fimreg {

using ordered_json = nlohmann::ordered_json;

/*
 * Presentation file format (UTF-8 JSON, keys in this exact order for
 * byte-stable fixtures):
 *   {"m", "N", "field": {"kind": "prime-field"|"rationals", "p"},
 *    "generators": [[n_1,...,n_m], ...],
 *    "relations": [{"degree": [...],
 *                   "terms": [{"gen", "injections": [[images]...], "coeff"}]}]}
 * Coefficients are decimal strings, rationals as "a/b".  Parsing is strict:
 * an unknown or missing key is an input error naming the key.
 */
ordered_json presentation_to_json(const Presentation& pres);
Presentation presentation_from_json(const ordered_json& j);

void save_presentation(const Presentation& pres, const std::string& path);
Presentation load_presentation(const std::string& path);

/* {"I","N","entries":[[i,[n...],dim],...],"t":[...],"censored":[...]};
 * entries sorted by (i, total, lex), nonzero only. */
ordered_json table_to_json(const HomologyTable& table);
HomologyTable table_from_json(const ordered_json& j);

/* Aligned text rendering: one row per homological index, one column per
 * window degree. */
std::string table_to_text(const HomologyTable& table, int arity);

/* Shared strict-parsing helpers. */
void require_keys(const ordered_json& j, const std::vector<std::string>& required,
                  const std::vector<std::string>& optional, const std::string& where);
int get_int(const ordered_json& j, const std::string& key, const std::string& where);
std::string get_string(const ordered_json& j, const std::string& key, const std::string& where);

ordered_json parse_json_text(const std::string& text, const std::string& where);
ordered_json load_json_file(const std::string& path);
void save_json_file(const ordered_json& j, const std::string& path);

}  // namespace fimreg
