#pragma once

#include <optional>
#include <string>
#include <vector>

#include "atlas/fgraph.hpp"

namespace atlas {

// Maps canonical f-graphs to display names ("B", "C1", ..., "H2"). Entries
// are stored in canonical form; loading re-canonicalises and rejects
// duplicates. The default table ships in data/atom_names.json and is also
// embedded in the library.
class NameTable {
public:
    struct Entry {
        std::string name;
        FGraph form;  // canonical
    };

    NameTable() = default;
    static NameTable from_json_text(const std::string& text);
    static NameTable load_file(const std::string& path);

    std::optional<std::string> name_of(const FGraph& canonical) const;
    std::optional<FGraph> atom_named(const std::string& name) const;
    const std::vector<Entry>& entries() const { return entries_; }

private:
    std::vector<Entry> entries_;
};

const NameTable& builtin_name_table();

// Name of an atom: the table name when present, "X<m>"/"Y<m>" for members of
// the standard series beyond the table, otherwise "unnamed-<hash>".
std::string identify(const FGraph& f, const NameTable& table = builtin_name_table());

// Inverse of identify for table names plus the series names X<m> / Y<m>.
std::optional<FGraph> resolve_atom_name(const std::string& name,
                                        const NameTable& table = builtin_name_table());

}  // namespace atlas
