#include "fimreg/json_io.hpp"

#include <fstream>
#include <sstream>

#include "fimreg/errors.hpp"

namespace fimreg {

void require_keys(const ordered_json& j, const std::vector<std::string>& required,
                  const std::vector<std::string>& optional, const std::string& where) {
    if (!j.is_object()) throw InputError(where + ": expected a JSON object");
    for (const auto& item : j.items()) {
        const std::string& k = item.key();
        const bool known =
            std::find(required.begin(), required.end(), k) != required.end() ||
            std::find(optional.begin(), optional.end(), k) != optional.end();
        if (!known) throw InputError(where + ": unknown key '" + k + "'");
    }
    for (const auto& k : required) {
        if (!j.contains(k)) throw InputError(where + ": missing key '" + k + "'");
    }
}

int get_int(const ordered_json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw InputError(where + ": key '" + key + "' must be an integer");
    }
    return j.at(key).get<int>();
}

std::string get_string(const ordered_json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_string()) {
        throw InputError(where + ": key '" + key + "' must be a string");
    }
    return j.at(key).get<std::string>();
}

namespace {

std::vector<int> int_list(const ordered_json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected an array of integers");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InputError(where + ": expected an array of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

ordered_json field_to_json(const FieldConfig& cfg) {
    ordered_json f;
    f["kind"] = cfg.kind_name();
    if (cfg.kind == FieldConfig::Kind::PrimeField) f["p"] = cfg.p;
    return f;
}

FieldConfig field_from_json(const ordered_json& j, const std::string& where) {
    require_keys(j, {"kind"}, {"p"}, where);
    const std::string kind = get_string(j, "kind", where);
    FieldConfig cfg;
    if (kind == "rationals") {
        if (j.contains("p")) throw InputError(where + ": 'p' is not allowed with rationals");
        cfg.kind = FieldConfig::Kind::Rationals;
        return cfg;
    }
    if (kind == "prime-field") {
        cfg.kind = FieldConfig::Kind::PrimeField;
        const int p = get_int(j, "p", where);
        if (p < 2) throw InputError(where + ": 'p' must be a prime >= 2");
        cfg.p = static_cast<std::uint32_t>(p);
        PrimeField check(cfg.p);  // validates primality
        return cfg;
    }
    throw InputError(where + ": unknown field kind '" + kind + "'");
}

}  // namespace

ordered_json presentation_to_json(const Presentation& pres) {
    ordered_json j;
    j["m"] = pres.m;
    j["N"] = pres.N;
    j["field"] = field_to_json(pres.field);
    ordered_json gens = ordered_json::array();
    for (const auto& w : pres.generators) gens.push_back(w.c);
    j["generators"] = std::move(gens);
    ordered_json rels = ordered_json::array();
    for (const auto& rel : pres.relations) {
        ordered_json rj;
        rj["degree"] = rel.degree.c;
        ordered_json terms = ordered_json::array();
        for (const auto& term : rel.terms) {
            ordered_json tj;
            tj["gen"] = term.gen;
            ordered_json inj = ordered_json::array();
            for (const auto& f : term.map.comp) inj.push_back(f.img);
            tj["injections"] = std::move(inj);
            tj["coeff"] = rational_str(term.coeff);
            terms.push_back(std::move(tj));
        }
        rj["terms"] = std::move(terms);
        rels.push_back(std::move(rj));
    }
    j["relations"] = std::move(rels);
    return j;
}

Presentation presentation_from_json(const ordered_json& j) {
    require_keys(j, {"m", "N", "field", "generators", "relations"}, {}, "presentation");
    Presentation pres;
    pres.m = get_int(j, "m", "presentation");
    pres.N = get_int(j, "N", "presentation");
    pres.field = field_from_json(j.at("field"), "presentation.field");
    if (!j.at("generators").is_array()) throw InputError("presentation: 'generators' must be an array");
    for (size_t g = 0; g < j.at("generators").size(); ++g) {
        MultiIndex w;
        w.c = int_list(j.at("generators").at(g), "generators[" + std::to_string(g) + "]");
        pres.generators.push_back(std::move(w));
    }
    if (!j.at("relations").is_array()) throw InputError("presentation: 'relations' must be an array");
    for (size_t k = 0; k < j.at("relations").size(); ++k) {
        const auto& rj = j.at("relations").at(k);
        const std::string where = "relations[" + std::to_string(k) + "]";
        require_keys(rj, {"degree", "terms"}, {}, where);
        Relation rel;
        rel.degree.c = int_list(rj.at("degree"), where + ".degree");
        if (!rj.at("terms").is_array()) throw InputError(where + ": 'terms' must be an array");
        for (size_t s = 0; s < rj.at("terms").size(); ++s) {
            const auto& tj = rj.at("terms").at(s);
            const std::string twhere = where + ".terms[" + std::to_string(s) + "]";
            require_keys(tj, {"gen", "injections", "coeff"}, {}, twhere);
            RelationTerm term;
            term.gen = get_int(tj, "gen", twhere);
            if (term.gen < 0 || term.gen >= static_cast<int>(pres.generators.size())) {
                throw InputError(twhere + ": generator index out of range");
            }
            if (!tj.at("injections").is_array() ||
                tj.at("injections").size() != static_cast<size_t>(pres.m)) {
                throw InputError(twhere + ": 'injections' must list one image tuple per coordinate");
            }
            std::vector<Injection> comps;
            const MultiIndex& w = pres.generators[static_cast<size_t>(term.gen)];
            for (int i = 0; i < pres.m; ++i) {
                std::vector<int> img = int_list(tj.at("injections").at(static_cast<size_t>(i)),
                                                twhere + ".injections");
                comps.emplace_back(w.c[static_cast<size_t>(i)],
                                   rel.degree.c[static_cast<size_t>(i)], std::move(img));
            }
            term.map = MorphismTuple(std::move(comps));
            term.coeff = parse_rational(get_string(tj, "coeff", twhere));
            rel.terms.push_back(std::move(term));
        }
        pres.relations.push_back(std::move(rel));
    }
    pres.check();
    return pres;
}

ordered_json table_to_json(const HomologyTable& table) {
    ordered_json j;
    j["I"] = table.I;
    j["N"] = table.N;
    std::vector<std::pair<std::pair<int, MultiIndex>, int>> sorted(table.entries.begin(),
                                                                   table.entries.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first.first != b.first.first) return a.first.first < b.first.first;
        const MultiIndex& x = a.first.second;
        const MultiIndex& y = b.first.second;
        if (x.total() != y.total()) return x.total() < y.total();
        return x < y;
    });
    ordered_json entries = ordered_json::array();
    for (const auto& [key, dim] : sorted) {
        entries.push_back(ordered_json::array({key.first, key.second.c, dim}));
    }
    j["entries"] = std::move(entries);
    j["t"] = table.t;
    j["censored"] = table.censored;
    return j;
}

HomologyTable table_from_json(const ordered_json& j) {
    require_keys(j, {"I", "N", "entries", "t", "censored"}, {}, "table");
    HomologyTable table;
    table.I = get_int(j, "I", "table");
    table.N = get_int(j, "N", "table");
    for (const auto& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 3) throw InputError("table: malformed entry");
        MultiIndex n;
        n.c = int_list(e.at(1), "table entry degree");
        table.entries[{e.at(0).get<int>(), n}] = e.at(2).get<int>();
    }
    table.t = j.at("t").get<std::vector<int>>();
    std::vector<bool> cens;
    for (const auto& c : j.at("censored")) cens.push_back(c.get<bool>());
    table.censored = cens;
    return table;
}

std::string table_to_text(const HomologyTable& table, int arity) {
    const auto degrees = degrees_up_to(arity, table.N);
    std::vector<std::string> header{"i\\n"};
    for (const auto& n : degrees) header.push_back(n.str());
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i <= table.I; ++i) {
        std::vector<std::string> row{"H_" + std::to_string(i)};
        for (const auto& n : degrees) {
            const int v = table.at(i, n);
            row.push_back(v == 0 ? "." : std::to_string(v));
        }
        rows.push_back(std::move(row));
    }
    std::vector<size_t> width(header.size(), 0);
    for (size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& row) {
        for (size_t c = 0; c < row.size(); ++c) {
            os << (c ? "  " : "") << std::string(width[c] - row[c].size(), ' ') << row[c];
        }
        os << "\n";
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return os.str();
}

ordered_json parse_json_text(const std::string& text, const std::string& where) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError(where + ": malformed JSON");
    return j;
}

ordered_json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

void save_json_file(const ordered_json& j, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file '" + path + "'");
    out << j.dump(2) << "\n";
}

void save_presentation(const Presentation& pres, const std::string& path) {
    save_json_file(presentation_to_json(pres), path);
}

Presentation load_presentation(const std::string& path) {
    return presentation_from_json(load_json_file(path));
}

}  // namespace fimreg
