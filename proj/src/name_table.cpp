#include "atlas/name_table.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "atlas/errors.hpp"

namespace atlas {

namespace detail {
const char* default_name_table_json();  // generated from data/atom_names.json
}

NameTable NameTable::from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("name table is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ValidationError("name table must be a JSON array");
    NameTable table;
    std::set<std::string> names;
    std::set<FGraph> forms;
    for (const auto& item : doc) {
        if (!item.is_object() || !item.contains("name") || !item.contains("sigma") ||
            !item.contains("tau"))
            throw ValidationError("name table entries need name, sigma and tau fields");
        const std::string name = item.at("name").get<std::string>();
        std::vector<int> sigma = item.at("sigma").get<std::vector<int>>();
        std::vector<int> tau = item.at("tau").get<std::vector<int>>();
        if (sigma.size() != tau.size() || sigma.empty() || sigma.size() % 2 != 0)
            throw ValidationError("name table entry '" + name + "' has malformed permutations");
        FGraph f{static_cast<int>(sigma.size() / 2), Perm(std::move(sigma)), Perm(std::move(tau))};
        FGraph canon = canonical_form(f);
        if (canon != f)
            throw ValidationError("name table entry '" + name + "' is not in canonical form");
        if (!names.insert(name).second)
            throw ValidationError("name table repeats the name '" + name + "'");
        if (!forms.insert(canon).second)
            throw ValidationError("name table maps one atom to two names ('" + name + "')");
        table.entries_.push_back({name, std::move(canon)});
    }
    return table;
}

NameTable NameTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open name table file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

std::optional<std::string> NameTable::name_of(const FGraph& canonical) const {
    for (const Entry& e : entries_)
        if (e.form == canonical) return e.name;
    return std::nullopt;
}

std::optional<FGraph> NameTable::atom_named(const std::string& name) const {
    for (const Entry& e : entries_)
        if (e.name == name) return e.form;
    return std::nullopt;
}

const NameTable& builtin_name_table() {
    static const NameTable table = NameTable::from_json_text(detail::default_name_table_json());
    return table;
}

namespace {

// "X4" / "Y7" style series names.
std::optional<std::pair<Series, int>> parse_series_name(const std::string& name) {
    if (name.size() < 2 || (name[0] != 'X' && name[0] != 'Y')) return std::nullopt;
    int m = 0;
    for (size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') return std::nullopt;
        m = m * 10 + (name[i] - '0');
    }
    if (m < 1 || m > 99) return std::nullopt;
    return std::make_pair(name[0] == 'X' ? Series::X : Series::Y, m);
}

}  // namespace

std::string identify(const FGraph& f, const NameTable& table) {
    const FGraph canon = canonical_form(f);
    if (auto name = table.name_of(canon)) return *name;
    if (2 * canon.m <= 16) {
        if (canon == canonical_form(standard_series(Series::X, canon.m)))
            return "X" + std::to_string(canon.m);
        if (canon == canonical_form(standard_series(Series::Y, canon.m)))
            return "Y" + std::to_string(canon.m);
    }
    return "unnamed-" + canonical_hash(canon);
}

std::optional<FGraph> resolve_atom_name(const std::string& name, const NameTable& table) {
    if (auto f = table.atom_named(name)) return f;
    if (auto series = parse_series_name(name)) {
        FGraph f = canonical_form(standard_series(series->first, series->second));
        // A table name wins for atoms the table covers (e.g. X2 is named C2).
        if (auto named = table.name_of(f); named && *named != name) return f;
        return f;
    }
    return std::nullopt;
}

}  // namespace atlas
