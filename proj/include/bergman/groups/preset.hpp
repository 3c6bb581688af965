#pragma once

// Group presets: a named generator set with its ring, target domain, and the
// cardinality of the kernel of the action (2 for +-I in SL2(Z), etc.). The
// loader augments generators with their inverses and validates the exact
// group relations. Presets round-trip through a small JSON document.

#include <bergman/domains/point.hpp>
#include <bergman/groups/element.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace bergman::grp {

struct group_preset {
    std::string name;
    group_kind kind = group_kind::special_linear;
    ring_desc ring;
    dom::domain_kind domain = dom::domain_kind::half_plane;
    int domain_n = 1;  // factors of H^n, or the n of H_n / B_n
    std::vector<group_element> generators;
    int kernel_cardinality = 1;
    // lattice presets only: tau as a (re, im) pair
    double tau_re = 0.0;
    double tau_im = 1.0;

    int matrix_dim() const
    {
        switch (kind) {
            case group_kind::special_linear: return 2;
            case group_kind::symplectic: return 2 * domain_n;
            case group_kind::unitary: return domain_n + 1;
            case group_kind::lattice: return 2;
        }
        return 2;
    }

    group_element element_from(const exact_matrix& m) const
    {
        return group_element{kind, ring, m};
    }

    group_element identity() const
    {
        return element_from(identity_matrix(matrix_dim()));
    }
};

namespace detail {

inline bool element_less(const group_element& x, const group_element& y)
{
    for (int k = 0; k < x.m.dim * x.m.dim; ++k) {
        const auto& a = x.m.e[static_cast<std::size_t>(k)];
        const auto& b = y.m.e[static_cast<std::size_t>(k)];
        if (a.a != b.a)
            return a.a < b.a;
        if (a.b != b.b)
            return a.b < b.b;
    }
    return false;
}

}  // namespace detail

inline void finalize_preset(group_preset& p)
{
    if (p.kind == group_kind::special_linear &&
        p.ring.embedding_count() != p.domain_n)
        throw std::invalid_argument("preset '" + p.name +
                                    "': SL2 factor count must match the ring's "
                                    "real embeddings");
    for (auto& g : p.generators) {
        std::string bad = invariant_violation(g);
        if (!bad.empty())
            throw std::invalid_argument("preset '" + p.name + "': generator " +
                                        to_string(g) + ": " + bad);
    }
    std::vector<group_element> gens = p.generators;
    for (const auto& g : p.generators) {
        group_element inv = g_inverse(g);
        if (std::find(gens.begin(), gens.end(), inv) == gens.end())
            gens.push_back(inv);
    }
    // drop identities and duplicates, fix the order
    std::sort(gens.begin(), gens.end(), detail::element_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const group_element& g) { return g.is_identity(); }),
               gens.end());
    p.generators = std::move(gens);
}

inline ring_kind ring_kind_from_string(const std::string& s)
{
    if (s == "int" || s == "Z")
        return ring_kind::integers;
    if (s == "sqrt")
        return ring_kind::real_quadratic;
    if (s == "gauss")
        return ring_kind::gauss;
    if (s == "lattice")
        return ring_kind::lattice;
    throw std::invalid_argument("unknown ring kind '" + s + "'");
}

inline dom::domain_kind domain_from_string(const std::string& s)
{
    if (s == "h")
        return dom::domain_kind::half_plane;
    if (s == "siegel")
        return dom::domain_kind::siegel;
    if (s == "ball")
        return dom::domain_kind::ball;
    if (s == "fock")
        return dom::domain_kind::fock;
    throw std::invalid_argument("unknown domain '" + s + "'");
}

inline group_kind group_kind_for(dom::domain_kind d)
{
    switch (d) {
        case dom::domain_kind::half_plane: return group_kind::special_linear;
        case dom::domain_kind::siegel: return group_kind::symplectic;
        case dom::domain_kind::ball: return group_kind::unitary;
        case dom::domain_kind::fock: return group_kind::lattice;
    }
    return group_kind::special_linear;
}

// Schema: { name, ring: {kind, d}, domain, n, generators: [[entry,...],...],
//           kernel_cardinality, tau: [re, im] }
// Entries are integers or [a, b] pairs in the ring's coefficient basis;
// matrices are row-major.
inline group_preset preset_from_json(const nlohmann::json& j)
{
    group_preset p;
    p.name = j.at("name").get<std::string>();
    p.ring.kind = ring_kind_from_string(j.at("ring").at("kind").get<std::string>());
    p.ring.d = j.at("ring").value("d", 0);
    if (p.ring.kind == ring_kind::real_quadratic && p.ring.d <= 1)
        throw std::invalid_argument("real quadratic ring needs d > 1");
    p.domain = domain_from_string(j.at("domain").get<std::string>());
    p.domain_n = j.value("n", 1);
    p.kind = group_kind_for(p.domain);
    p.kernel_cardinality = j.value("kernel_cardinality", 1);
    if (j.contains("tau")) {
        p.tau_re = j.at("tau").at(0).get<double>();
        p.tau_im = j.at("tau").at(1).get<double>();
        if (!(p.tau_im > 0))
            throw std::invalid_argument("tau must lie in the upper half plane");
    }
    int dim = p.matrix_dim();
    for (const auto& gj : j.at("generators")) {
        if (static_cast<int>(gj.size()) != dim * dim)
            throw std::invalid_argument("generator entry count must be dim^2");
        exact_matrix m;
        m.dim = dim;
        for (int k = 0; k < dim * dim; ++k) {
            const auto& ej = gj.at(static_cast<std::size_t>(k));
            exact_scalar s;
            if (ej.is_array()) {
                s.a = ej.at(0).get<std::int64_t>();
                s.b = ej.at(1).get<std::int64_t>();
            } else {
                s.a = ej.get<std::int64_t>();
            }
            m.e[static_cast<std::size_t>(k)] = s;
        }
        p.generators.push_back(p.element_from(m));
    }
    finalize_preset(p);
    return p;
}

inline group_preset preset_from_json_text(const std::string& text)
{
    return preset_from_json(nlohmann::json::parse(text));
}

inline nlohmann::json preset_to_json(const group_preset& p)
{
    nlohmann::json j;
    j["name"] = p.name;
    switch (p.ring.kind) {
        case ring_kind::integers: j["ring"] = {{"kind", "int"}}; break;
        case ring_kind::real_quadratic: j["ring"] = {{"kind", "sqrt"}, {"d", p.ring.d}}; break;
        case ring_kind::gauss: j["ring"] = {{"kind", "gauss"}}; break;
        case ring_kind::lattice: j["ring"] = {{"kind", "lattice"}}; break;
    }
    j["domain"] = dom::domain_name(p.domain);
    j["n"] = p.domain_n;
    j["kernel_cardinality"] = p.kernel_cardinality;
    if (p.kind == group_kind::lattice)
        j["tau"] = {p.tau_re, p.tau_im};
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : p.generators) {
        nlohmann::json gm = nlohmann::json::array();
        for (int k = 0; k < g.m.dim * g.m.dim; ++k) {
            const auto& s = g.m.e[static_cast<std::size_t>(k)];
            if (p.ring.kind == ring_kind::integers)
                gm.push_back(s.a);
            else
                gm.push_back(nlohmann::json::array({s.a, s.b}));
        }
        gens.push_back(gm);
    }
    j["generators"] = gens;
    return j;
}

// --- shipped presets ------------------------------------------------------

// SL2(Z) with the inversion S and translation T.
inline group_preset preset_sl2z()
{
    return preset_from_json_text(R"({
        "name": "sl2z",
        "ring": {"kind": "int"},
        "domain": "h",
        "n": 1,
        "kernel_cardinality": 2,
        "generators": [[0,-1,1,0],[1,1,0,1]]
    })");
}

// Hilbert modular group SL2(Z[sqrt 2]) acting on H^2 via both embeddings.
inline group_preset preset_sl2_zsqrt2()
{
    return preset_from_json_text(R"({
        "name": "sl2zsqrt2",
        "ring": {"kind": "sqrt", "d": 2},
        "domain": "h",
        "n": 2,
        "kernel_cardinality": 2,
        "generators": [
            [[0,0],[-1,0],[1,0],[0,0]],
            [[1,0],[1,0],[0,0],[1,0]],
            [[1,0],[0,1],[0,0],[1,0]],
            [[1,1],[0,0],[0,0],[-1,1]]
        ]
    })");
}

// Sp4(Z): the symplectic inversion plus the three elementary translations
// and one GL block.
inline group_preset preset_sp4z()
{
    return preset_from_json_text(R"({
        "name": "sp4z",
        "ring": {"kind": "int"},
        "domain": "siegel",
        "n": 2,
        "kernel_cardinality": 2,
        "generators": [
            [0,0,1,0, 0,0,0,1, -1,0,0,0, 0,-1,0,0],
            [1,0,1,0, 0,1,0,0, 0,0,1,0, 0,0,0,1],
            [1,0,0,0, 0,1,0,1, 0,0,1,0, 0,0,0,1],
            [1,0,0,1, 0,1,1,0, 0,0,1,0, 0,0,0,1],
            [1,1,0,0, 0,1,0,0, 0,0,1,0, 0,0,-1,1]
        ]
    })");
}

// A discrete subgroup of the Picard modular group SU(2,1; Z[i]) for the form
// diag(1,1,-1): two parabolic-type U(1,1) blocks, a coordinate swap and a
// rotation. Property tests only; no completeness claim for the full lattice.
inline group_preset preset_picard()
{
    return preset_from_json_text(R"({
        "name": "picard",
        "ring": {"kind": "gauss"},
        "domain": "ball",
        "n": 2,
        "kernel_cardinality": 1,
        "generators": [
            [[1,1],[0,0],[1,0], [0,0],[1,0],[0,0], [1,0],[0,0],[1,-1]],
            [[1,0],[0,0],[0,0], [0,0],[1,1],[1,0], [0,0],[1,0],[1,-1]],
            [[0,0],[1,0],[0,0], [1,0],[0,0],[0,0], [0,0],[0,0],[-1,0]],
            [[0,1],[0,0],[0,0], [0,0],[0,1],[0,0], [0,0],[0,0],[-1,0]]
        ]
    })");
}

// The Gaussian lattice Z + Z i acting on the Fock plane by translations.
inline group_preset preset_fock_gauss()
{
    return preset_from_json_text(R"({
        "name": "fock_gauss",
        "ring": {"kind": "lattice"},
        "domain": "fock",
        "n": 1,
        "kernel_cardinality": 1,
        "tau": [0.0, 1.0],
        "generators": [
            [[1,0],[1,0],[0,0],[1,0]],
            [[1,0],[0,1],[0,0],[1,0]]
        ]
    })");
}

// Trivial group on any domain; useful as the degenerate series case.
inline group_preset preset_trivial(dom::domain_kind d, int n)
{
    group_preset p;
    p.name = "trivial";
    p.domain = d;
    p.domain_n = n;
    p.kind = group_kind_for(d);
    if (p.kind == group_kind::unitary)
        p.ring.kind = ring_kind::gauss;
    else if (p.kind == group_kind::lattice)
        p.ring.kind = ring_kind::lattice;
    p.kernel_cardinality = 1;
    finalize_preset(p);
    return p;
}

inline group_preset builtin_preset(const std::string& name,
                                   dom::domain_kind trivial_domain = dom::domain_kind::half_plane,
                                   int trivial_n = 1)
{
    if (name == "sl2z")
        return preset_sl2z();
    if (name == "sl2zsqrt2")
        return preset_sl2_zsqrt2();
    if (name == "sp4z")
        return preset_sp4z();
    if (name == "picard")
        return preset_picard();
    if (name == "fock_gauss")
        return preset_fock_gauss();
    if (name == "trivial")
        return preset_trivial(trivial_domain, trivial_n);
    throw std::invalid_argument("unknown preset '" + name + "'");
}

}  // namespace bergman::grp
