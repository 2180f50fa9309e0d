// atlas: saddle-focus singularity toolbox.
//
// Subcommands: atoms, sym, invariants, reduce, chains, classify.
// Exit codes: 0 success, 1 input or validation error, 2 classification
// finished with unresolved-equivalence warnings under --strict.

#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "atlas/classify.hpp"
#include "atlas/errors.hpp"
#include "atlas/json_io.hpp"

namespace {

using atlas::Catalog;
using atlas::FGraph;
using atlas::NameTable;
using atlas::RenderFormat;
using atlas::SimpleMinimalModel;
using nlohmann::json;

struct TableChoice {
    NameTable table;
    bool custom = false;
    const NameTable& get() const { return custom ? table : atlas::builtin_name_table(); }
};

TableChoice pick_table(const std::string& flag_path) {
    TableChoice choice;
    std::string path = flag_path;
    if (path.empty()) {
        if (const char* env = std::getenv("ATLAS_NAME_TABLE")) path = env;
    }
    if (!path.empty()) {
        choice.table = NameTable::load_file(path);
        choice.custom = true;
    }
    return choice;
}

std::string atom_row(const FGraph& f, const NameTable& table) {
    const auto [neg, pos] = boundary_circles(f);
    const atlas::GroupLabel label = iso_type(symmetry_group(f));
    std::ostringstream out;
    const std::string name = identify(f, table);
    out << "  " << name;
    for (size_t pad = name.size(); pad < 22; ++pad) out << ' ';
    out << f.sigma.str() << "  " << f.tau.str() << "  (" << neg << "," << pos << ")  "
        << genus(f) << "      " << label.name;
    return out.str();
}

int cmd_atoms(int m, const std::string& format, const NameTable& table) {
    std::vector<FGraph> atoms = atlas::enumerate_atoms(m);
    if (format == "json") {
        json out = json::array();
        for (const FGraph& f : atoms) out.push_back(atlas::fgraph_to_json(f, table));
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "atoms of complexity " << m << ": " << atoms.size() << "\n";
    std::cout << "  name                  sigma  tau  boundary  genus  sym\n";
    for (const FGraph& f : atoms) std::cout << atom_row(f, table) << "\n";
    return 0;
}

FGraph load_atom(const std::string& name, const std::string& file, const NameTable& table) {
    if (!name.empty()) {
        auto atom = atlas::resolve_atom_name(name, table);
        if (!atom) throw atlas::ValidationError("unknown atom name: '" + name + "'");
        return *atom;
    }
    return atlas::fgraph_from_json(atlas::load_json_file(file));
}

int cmd_sym(const FGraph& atom, const NameTable& table) {
    const atlas::PermutationGroup sym = symmetry_group(atom);
    const atlas::GroupLabel label = iso_type(sym);
    std::cout << "atom: " << identify(atom, table) << "\n";
    std::cout << "sigma: " << atom.sigma.str() << "  tau: " << atom.tau.str() << "\n";
    std::cout << "symmetry group: " << label.name << " (order " << sym.order() << ")\n";
    std::cout << "elements:\n";
    for (const atlas::Perm& p : sym.elements()) std::cout << "  " << p.str() << "\n";
    std::cout << "extended symmetries (with move tags):\n";
    for (const atlas::TaggedSymmetry& ts : extended_symmetries(atom))
        std::cout << "  " << ts.perm.str() << "  " << move_name(ts.move) << "\n";
    return 0;
}

SimpleMinimalModel load_reduced_model(const std::string& file, const NameTable& table,
                                      atlas::ReductionReport* report = nullptr) {
    const atlas::AlmostDirectProduct adp =
        atlas::product_from_json(atlas::load_json_file(file), table);
    auto [model, rep] = atlas::reduce(adp);
    if (report) *report = rep;
    return model;
}

int cmd_invariants(const std::string& file, const std::string& format, const NameTable& table) {
    atlas::ReductionReport rep;
    const SimpleMinimalModel model = load_reduced_model(file, table, &rep);
    const atlas::Fingerprint fp = fingerprint(model, table);
    if (format == "json") {
        std::cout << atlas::fingerprint_to_json(fp).dump(2) << "\n";
        return 0;
    }
    if (rep.normal_order > 1)
        std::cout << "input reduced by a normal subgroup of order " << rep.normal_order << "\n";
    std::cout << "model: ";
    if (model.k == 1)
        std::cout << fp.m1_name << " x F" << model.n << "\n";
    else
        std::cout << "(" << fp.m1_name << " x F" << model.n << ")/Z" << model.k << "\n";
    std::cout << "rank-0 points: " << fp.rank0 << "\n";
    std::cout << "half-turn fixed saddles s: " << fp.s << "\n";
    std::cout << "transverse surface: " << fp.m1_copies << " x " << fp.m1_name << "\n";
    std::cout << "focus pieces:";
    for (const auto& [c, copies] : fp.m2) std::cout << " " << copies << " x F" << c;
    std::cout << "\n";
    std::cout << "regular tori per side: {" << fp.torus.first << "," << fp.torus.second << "}\n";
    std::cout << "chains (1-dim, 3-dim):";
    for (const auto& [ones, threes] : fp.chains)
        std::cout << " (" << ones << "," << threes << ")";
    std::cout << "\n";
    return 0;
}

int cmd_reduce(const std::string& file, const NameTable& table) {
    atlas::ReductionReport rep;
    const SimpleMinimalModel model = load_reduced_model(file, table, &rep);
    std::cout << "group order: " << rep.group_order << "\n";
    std::cout << "normal subgroup factored out: order " << rep.normal_order << "\n";
    std::cout << "reduced complexity m': " << rep.m_reduced << ", focus n': " << rep.n_reduced
              << ", cyclic order k: " << rep.k << "\n";
    const std::string atom_name = identify(model.atom, table);
    std::cout << "simple minimal model: ";
    if (model.k == 1)
        std::cout << atom_name << " x F" << model.n << "\n";
    else
        std::cout << "(" << atom_name << " x F" << model.n << ")/Z" << model.k << "\n";
    return 0;
}

int cmd_chains(const std::string& file, bool dot, const NameTable& table) {
    const SimpleMinimalModel model = load_reduced_model(file, table);
    if (!dot) {
        const auto chains = chain_invariant(model);
        std::cout << chains.size() << " chains\n";
        for (const auto& [ones, threes] : chains)
            std::cout << "  1-dim orbits: " << ones << ", 3-dim orbits: " << threes << "\n";
        return 0;
    }
    // Quotient incidence graph in DOT form: node classes named by their
    // minimal representative (leaf edge v, focus point x_i / component c_j).
    const int d = model.atom.points();
    const int n = model.n;
    const int step = model.shift();
    const int total = 2 * d * n;
    std::vector<int> cls(total, -1);
    std::vector<std::string> cls_name;
    auto node_x = [&](int v, int i) { return v * n + i; };
    auto node_c = [&](int v, int j) { return d * n + v * n + j; };
    for (int start = 0; start < total; ++start) {
        if (cls[start] >= 0) continue;
        const bool is_c = start >= d * n;
        int v = (start % (d * n)) / n;
        int i = start % n;
        std::ostringstream name;
        name << "e" << v << (is_c ? "c" : "x") << i;
        const int id = static_cast<int>(cls_name.size());
        cls_name.push_back(name.str());
        for (int t = 0; t < model.k; ++t) {
            cls[is_c ? node_c(v, i) : node_x(v, i)] = id;
            v = model.generator[v];
            i = (i + step) % n;
        }
    }
    std::set<std::pair<int, int>> edges;
    for (int v = 0; v < d; ++v)
        for (int j = 0; j < n; ++j) {
            edges.insert({cls[node_x(v, j)], cls[node_c(v, j)]});
            edges.insert({cls[node_x(v, (j + 1) % n)], cls[node_c(v, j)]});
        }
    std::cout << "graph chains {\n";
    for (size_t i = 0; i < cls_name.size(); ++i) {
        const bool is_c = cls_name[i].find('c') != std::string::npos;
        std::cout << "  " << cls_name[i] << " [shape=" << (is_c ? "box" : "circle") << "];\n";
    }
    for (const auto& [a, b] : edges)
        std::cout << "  " << cls_name[a] << " -- " << cls_name[b] << ";\n";
    std::cout << "}\n";
    return 0;
}

int cmd_classify(int p, const std::string& format, bool strict, int max_complexity,
                 const NameTable& table) {
    atlas::ClassifyOptions opts;
    opts.max_complexity = max_complexity;
    opts.table = &table;
    const Catalog catalog = atlas::classify(p, opts);
    std::cout << render(catalog, format == "json" ? RenderFormat::Json : RenderFormat::Table);
    if (strict && !catalog.warnings.empty()) return 2;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"saddle-focus singularity atlas"};
    app.require_subcommand(1);

    std::string table_path;
    app.add_option("--name-table", table_path, "atom name table JSON (overrides ATLAS_NAME_TABLE)");

    auto* atoms_cmd = app.add_subcommand("atoms", "enumerate saddle atoms of a given complexity");
    int atoms_m = 1;
    std::string atoms_format = "table";
    atoms_cmd->add_option("--complexity", atoms_m, "atom complexity m")->required();
    atoms_cmd->add_option("--format", atoms_format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));

    auto* sym_cmd = app.add_subcommand("sym", "symmetry group of an atom");
    std::string sym_atom, sym_file;
    sym_cmd->add_option("--atom", sym_atom, "atom name (B, C1, ..., X4, Y5)");
    sym_cmd->add_option("--file", sym_file, "fgraph-v1 JSON file");

    auto* inv_cmd = app.add_subcommand("invariants", "invariant fingerprint of a model");
    std::string inv_file, inv_format = "table";
    inv_cmd->add_option("--model", inv_file, "adp-v1 JSON file")->required();
    inv_cmd->add_option("--format", inv_format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));

    auto* reduce_cmd = app.add_subcommand("reduce", "reduce a model to its simple minimal form");
    std::string reduce_file;
    reduce_cmd->add_option("--model", reduce_file, "adp-v1 JSON file")->required();

    auto* chains_cmd = app.add_subcommand("chains", "orbit chains on the singular leaf");
    std::string chains_file;
    bool chains_dot = false;
    chains_cmd->add_option("--model", chains_file, "adp-v1 JSON file")->required();
    chains_cmd->add_flag("--dot", chains_dot, "emit the quotient incidence graph as DOT");

    auto* classify_cmd = app.add_subcommand("classify", "catalog of a given complexity");
    int classify_p = 1;
    std::string classify_format = "table";
    bool classify_strict = false;
    int classify_max = 6;
    classify_cmd->add_option("--complexity", classify_p, "singularity complexity p")->required();
    classify_cmd->add_option("--format", classify_format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));
    classify_cmd->add_flag("--strict", classify_strict,
                           "exit 2 when unresolved-equivalence warnings remain");
    classify_cmd->add_option("--max-complexity", classify_max, "classification bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const TableChoice table = pick_table(table_path);
        if (atoms_cmd->parsed()) return cmd_atoms(atoms_m, atoms_format, table.get());
        if (sym_cmd->parsed()) {
            if (sym_atom.empty() == sym_file.empty())
                throw atlas::ValidationError("sym needs exactly one of --atom or --file");
            return cmd_sym(load_atom(sym_atom, sym_file, table.get()), table.get());
        }
        if (inv_cmd->parsed()) return cmd_invariants(inv_file, inv_format, table.get());
        if (reduce_cmd->parsed()) return cmd_reduce(reduce_file, table.get());
        if (chains_cmd->parsed()) return cmd_chains(chains_file, chains_dot, table.get());
        if (classify_cmd->parsed())
            return cmd_classify(classify_p, classify_format, classify_strict, classify_max,
                                table.get());
        std::cerr << "no subcommand\n";
        return 1;
    } catch (const atlas::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const atlas::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
