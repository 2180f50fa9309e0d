#include "atlas/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "atlas/errors.hpp"
#include "atlas/json_io.hpp"

namespace atlas {

namespace {

// True iff some conjugator maps a onto b or b^-1.
bool generator_conjugate(const Perm& a, const Perm& b, const std::vector<Perm>& conjugators) {
    const Perm b_inv = b.inverse();
    for (const Perm& c : conjugators) {
        const Perm image = conjugate(a, c);
        if (image == b || image == b_inv) return true;
    }
    return false;
}

std::string display_name(const std::string& atom_name, int n, int k) {
    std::ostringstream out;
    if (k == 1)
        out << atom_name << " x F" << n;
    else
        out << "(" << atom_name << " x F" << n << ")/Z" << k;
    return out.str();
}

}  // namespace

Equivalence decide_equivalence(const SimpleMinimalModel& a, const SimpleMinimalModel& b,
                               const NameTable& table) {
    if (a.n != b.n || a.k != b.k) return Equivalence::Distinct;
    const CanonicalWitness wa = canonical_form_with_witness(a.atom);
    const CanonicalWitness wb = canonical_form_with_witness(b.atom);
    if (wa.form != wb.form) return Equivalence::Distinct;
    const bool equal_fp = fingerprint(a, table) == fingerprint(b, table);

    // Transport both generators to the canonical labelling of the atom (the
    // witness conjugates the move image, and symmetries are move-invariant),
    // then search the extended symmetries for a conjugator.
    const Perm ga = conjugate(a.generator, wa.relabel);
    const Perm gb = conjugate(b.generator, wb.relabel);
    if (generator_conjugate(ga, gb, extended_conjugators(wa.form))) {
        if (!equal_fp) throw InternalError("equivalent models with different fingerprints");
        return Equivalence::Equivalent;
    }
    return equal_fp ? Equivalence::Unknown : Equivalence::Distinct;
}

Catalog classify(int p, const ClassifyOptions& opts) {
    if (p < 1) throw ValidationError("complexity must be at least 1, got " + std::to_string(p));
    if (p > opts.max_complexity)
        throw ResourceError("complexity " + std::to_string(p) +
                            " exceeds the classification bound " +
                            std::to_string(opts.max_complexity));
    const NameTable& table = opts.table ? *opts.table : builtin_name_table();

    Catalog catalog;
    catalog.complexity = p;

    for (int m = 1; m <= p; ++m) {
        if (p % m != 0) continue;
        const int d = p / m;
        EnumerateOptions eopts;
        eopts.max_complexity = std::max(opts.max_complexity, m);
        for (const FGraph& atom : enumerate_atoms(m, eopts)) {
            const PermutationGroup sym = symmetry_group(atom);
            const std::vector<Perm> ext = extended_conjugators(atom);

            // One model per symmetry, up to extended conjugacy with the
            // inverse pairing folded in.
            std::vector<Perm> reps;
            for (const Perm& g : sym.elements()) {
                bool redundant = false;
                for (const Perm& r : reps) {
                    if (r.order() == g.order() && generator_conjugate(g, r, ext)) {
                        redundant = true;
                        break;
                    }
                }
                if (!redundant) reps.push_back(g);
            }

            for (const Perm& g : reps) {
                const int k = g.order();
                const int n = k * d;
                SimpleMinimalModel model = make_simple_minimal_model(atom, n, k, g);
                CatalogEntry entry;
                entry.fp = fingerprint(model, table);
                entry.model = std::move(model);
                entry.status = "distinct";
                catalog.entries.push_back(std::move(entry));
            }
        }
    }

    // Representatives of different classes must be separated by fingerprints;
    // anything else is an unresolved pair that the caller has to see.
    for (size_t i = 0; i < catalog.entries.size(); ++i) {
        for (size_t j = i + 1; j < catalog.entries.size(); ++j) {
            auto& a = catalog.entries[i];
            auto& b = catalog.entries[j];
            const Equivalence verdict = decide_equivalence(a.model, b.model, table);
            if (verdict == Equivalence::Equivalent)
                throw InternalError("class representatives are equivalent");
            if (verdict == Equivalence::Unknown) {
                a.status = "unresolved";
                b.status = "unresolved";
                std::ostringstream warn;
                warn << "cannot certify " << display_name(a.fp.m1_name, a.model.n, a.model.k)
                     << " distinct from " << display_name(b.fp.m1_name, b.model.n, b.model.k)
                     << " (equal fingerprints, no conjugating symmetry)";
                catalog.warnings.push_back(warn.str());
            }
        }
    }

    std::sort(catalog.entries.begin(), catalog.entries.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) {
                  return std::tie(a.model.atom.m, a.fp.m1_name, a.model.k, a.fp.s, a.model) <
                         std::tie(b.model.atom.m, b.fp.m1_name, b.model.k, b.fp.s, b.model);
              });

    // Display names; disambiguate collisions by s, then by position.
    std::map<std::string, int> base_count;
    for (const CatalogEntry& e : catalog.entries)
        ++base_count[display_name(e.fp.m1_name, e.model.n, e.model.k)];
    std::map<std::string, int> running;
    for (CatalogEntry& e : catalog.entries) {
        std::string base = display_name(e.fp.m1_name, e.model.n, e.model.k);
        if (base_count[base] > 1) base += " [s=" + std::to_string(e.fp.s) + "]";
        const int idx = running[base]++;
        if (idx > 0) base += " [#" + std::to_string(idx + 1) + "]";
        e.display = std::move(base);
    }
    std::sort(catalog.warnings.begin(), catalog.warnings.end());
    return catalog;
}

std::string render(const Catalog& catalog, RenderFormat format) {
    if (format == RenderFormat::Json) {
        return catalog_to_json(catalog).dump(2) + "\n";
    }
    std::ostringstream out;
    out << "complexity " << catalog.complexity << ": " << catalog.entries.size()
        << " singularities\n";
    out << "-----------------------------------------------------------------------------\n";
    out << "  model                     atom  m  n  k  s  rank0  tori   chains\n";
    out << "-----------------------------------------------------------------------------\n";
    for (const CatalogEntry& e : catalog.entries) {
        std::ostringstream tori;
        tori << "{" << e.fp.torus.first << "," << e.fp.torus.second << "}";
        std::ostringstream chains;
        chains << "{";
        for (size_t i = 0; i < e.fp.chains.size(); ++i) {
            if (i) chains << ",";
            chains << "(" << e.fp.chains[i].first << "," << e.fp.chains[i].second << ")";
        }
        chains << "}";
        out << "  " << e.display;
        for (size_t pad = e.display.size(); pad < 26; ++pad) out << ' ';
        out << e.fp.m1_name;
        for (size_t pad = e.fp.m1_name.size(); pad < 6; ++pad) out << ' ';
        out << e.model.atom.m << "  " << e.model.n << "  " << e.model.k << "  " << e.fp.s << "  "
            << e.fp.rank0 << "      " << tori.str() << "  " << chains.str() << "\n";
    }
    if (!catalog.warnings.empty()) {
        out << "warnings:\n";
        for (const std::string& w : catalog.warnings) out << "  " << w << "\n";
    }
    return out.str();
}

}  // namespace atlas
