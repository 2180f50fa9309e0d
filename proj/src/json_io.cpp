#include "atlas/json_io.hpp"

#include <fstream>
#include <sstream>

#include "atlas/errors.hpp"

namespace atlas {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw ValidationError(what); }

std::vector<int> int_array(const json& j, const std::string& what) {
    if (!j.is_array()) bad(what + " must be a JSON array of integers");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer()) bad(what + " must contain only integers");
        out.push_back(v.get<int>());
    }
    return out;
}

}  // namespace

json perm_to_json(const Perm& p) { return json(p.images()); }

Perm perm_from_json(const json& j) { return Perm(int_array(j, "permutation")); }

json group_to_json(const PermutationGroup& g) {
    json gens = json::array();
    for (const Perm& p : g.elements())
        if (!p.is_identity()) gens.push_back(perm_to_json(p));
    return json{{"degree", g.degree()}, {"generators", gens}};
}

PermutationGroup group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
        bad("group JSON needs degree and generators fields");
    const int degree = j.at("degree").get<int>();
    std::vector<Perm> gens;
    for (const auto& g : j.at("generators")) gens.push_back(perm_from_json(g));
    return PermutationGroup::generate(degree, gens);
}

json fgraph_to_json(const FGraph& f, const NameTable& table) {
    json out{{"format", "fgraph-v1"},
             {"complexity", f.m},
             {"sigma", perm_to_json(f.sigma)},
             {"tau", perm_to_json(f.tau)}};
    const std::string name = identify(f, table);
    if (name.rfind("unnamed-", 0) != 0) out["name"] = name;
    return out;
}

FGraph fgraph_from_json(const json& j) {
    if (!j.is_object()) bad("atom JSON must be an object");
    if (j.contains("format") && j.at("format").get<std::string>() != "fgraph-v1")
        bad("unsupported atom format: " + j.at("format").dump());
    if (!j.contains("sigma") || !j.contains("tau")) bad("atom JSON needs sigma and tau fields");
    std::vector<int> sigma = int_array(j.at("sigma"), "sigma");
    std::vector<int> tau = int_array(j.at("tau"), "tau");
    if (sigma.size() != tau.size() || sigma.empty() || sigma.size() % 2 != 0)
        bad("sigma and tau must have equal, even, positive length");
    const int m = static_cast<int>(sigma.size() / 2);
    if (j.contains("complexity") && j.at("complexity").get<int>() != m)
        bad("complexity field disagrees with the permutation length");
    return validated(FGraph{m, Perm(std::move(sigma)), Perm(std::move(tau))});
}

json focus_automorphism_to_json(const FocusAutomorphism& a) {
    return json{{"shift", a.shift}, {"angle", a.angle.str()}};
}

FocusAutomorphism focus_automorphism_from_json(const json& j, int n) {
    if (!j.is_object()) bad("focus automorphism JSON must be an object");
    // standalone form uses shift/angle, adp-v1 generators focus_shift/focus_angle
    const char* shift_key = j.contains("shift") ? "shift" : "focus_shift";
    const char* angle_key = j.contains("angle") ? "angle" : "focus_angle";
    const int shift = j.contains(shift_key) ? j.at(shift_key).get<int>() : 0;
    Fraction angle;
    if (j.contains(angle_key)) {
        const auto& a = j.at(angle_key);
        if (a.is_string())
            angle = Fraction::parse(a.get<std::string>());
        else if (a.is_number_integer())
            angle = Fraction(a.get<long long>(), 1);
        else
            bad("angle must be an exact fraction string like \"1/2\"");
    }
    return shift_automorphism(n, shift, angle);
}

json product_to_json(const AlmostDirectProduct& adp, const NameTable& table) {
    const std::string name = identify(adp.atom, table);
    json atom;
    if (name.rfind("unnamed-", 0) != 0)
        atom = name;
    else
        atom = fgraph_to_json(adp.atom, table);
    json gens = json::array();
    for (const ProductElement& g : adp.generators) {
        gens.push_back(json{{"atom_perm", perm_to_json(g.atom_perm)},
                            {"focus_shift", g.focus.shift},
                            {"focus_angle", g.focus.angle.str()}});
    }
    return json{{"format", "adp-v1"},
                {"atom", atom},
                {"focus_complexity", adp.n},
                {"generators", gens}};
}

AlmostDirectProduct product_from_json(const json& j, const NameTable& table) {
    if (!j.is_object()) bad("model JSON must be an object");
    if (j.contains("format") && j.at("format").get<std::string>() != "adp-v1")
        bad("unsupported model format: " + j.at("format").dump());
    if (!j.contains("atom") || !j.contains("focus_complexity"))
        bad("model JSON needs atom and focus_complexity fields");
    FGraph atom;
    const auto& atom_field = j.at("atom");
    if (atom_field.is_string()) {
        const std::string name = atom_field.get<std::string>();
        auto resolved = resolve_atom_name(name, table);
        if (!resolved) bad("unknown atom name: '" + name + "'");
        atom = *resolved;
    } else {
        atom = fgraph_from_json(atom_field);
    }
    const int n = j.at("focus_complexity").get<int>();
    std::vector<ProductElement> gens;
    if (j.contains("generators")) {
        for (const auto& g : j.at("generators")) {
            if (!g.is_object() || !g.contains("atom_perm"))
                bad("model generators need an atom_perm field");
            ProductElement e;
            e.atom_perm = perm_from_json(g.at("atom_perm"));
            e.focus = focus_automorphism_from_json(g, n);
            gens.push_back(std::move(e));
        }
    }
    return build_product(std::move(atom), n, std::move(gens));
}

json fingerprint_to_json(const Fingerprint& fp) {
    json m2 = json::array();
    for (const auto& [complexity, copies] : fp.m2) m2.push_back(json::array({complexity, copies}));
    json chains = json::array();
    for (const auto& [ones, threes] : fp.chains) chains.push_back(json::array({ones, threes}));
    return json{{"atom", json{{"sigma", perm_to_json(fp.atom_canonical.sigma)},
                              {"tau", perm_to_json(fp.atom_canonical.tau)}}},
                {"n", fp.n},
                {"k", fp.k},
                {"s", fp.s},
                {"rank0", fp.rank0},
                {"m1", json{{"atom", fp.m1_name}, {"copies", fp.m1_copies}}},
                {"m2", m2},
                {"torus", json::array({fp.torus.first, fp.torus.second})},
                {"chains", chains}};
}

json catalog_to_json(const Catalog& catalog) {
    json entries = json::array();
    for (const CatalogEntry& e : catalog.entries) {
        entries.push_back(json{{"name", e.display},
                               {"atom", e.fp.m1_name},
                               {"n", e.model.n},
                               {"k", e.model.k},
                               {"status", e.status},
                               {"fingerprint", fingerprint_to_json(e.fp)}});
    }
    return json{{"complexity", catalog.complexity},
                {"count", catalog.entries.size()},
                {"entries", entries},
                {"warnings", catalog.warnings}};
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("invalid JSON: ") + e.what());
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

}  // namespace atlas
