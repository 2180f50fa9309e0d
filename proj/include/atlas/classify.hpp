#pragma once

#include <string>
#include <vector>

#include "atlas/model.hpp"

namespace atlas {

enum class Equivalence { Equivalent, Distinct, Unknown };

// Decides Liouville equivalence of two simple minimal models.
//   Distinct:   canonical atoms, n, k or fingerprints differ.
//   Equivalent: same (atom, n, k) and some extended symmetry of the atom
//               conjugates one generator onto the other or its inverse (the
//               inverse pairing is legitimate because reversing the cyclic
//               order of the focus factor negates the shift).
//   Unknown:    anything else; callers must surface it, never merge.
Equivalence decide_equivalence(const SimpleMinimalModel& a, const SimpleMinimalModel& b,
                               const NameTable& table = builtin_name_table());

struct CatalogEntry {
    SimpleMinimalModel model;
    Fingerprint fp;
    std::string display;          // e.g. "(C2 x F2)/Z2 [s=0]"
    std::string status;           // "distinct" or "unresolved vs <display>"
};

struct Catalog {
    int complexity = 0;
    std::vector<CatalogEntry> entries;
    std::vector<std::string> warnings;  // one line per unresolved pair
};

struct ClassifyOptions {
    int max_complexity = 6;
    const NameTable* table = nullptr;  // null = builtin
};

// All simple minimal models of the given complexity, one entry per
// equivalence class: for each divisor m of p, each atom of complexity m and
// each order-k symmetry taken up to extended conjugacy (including the
// inverse pairing), the model (atom x F_{k p/m})/Z_k with the generator
// paired to the shift p/m. Pairs the certificates cannot separate are kept
// apart and reported in warnings.
Catalog classify(int p, const ClassifyOptions& opts = {});

enum class RenderFormat { Table, Json };

// Deterministic rendering; entries ordered by (m, atom name, k, s).
std::string render(const Catalog& catalog, RenderFormat format);

}  // namespace atlas
