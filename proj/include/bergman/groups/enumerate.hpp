#pragma once

// Word-ball enumeration. Breadth-first over the generator set with exact
// dedup; emission order (increasing word length, lexicographic matrix key
// within a shell) is part of the public contract so that chunked parallel
// reductions reproduce bit-identically.
//
// In projective mode elements are normalized so the first nonzero entry is
// positive, collapsing the +-I kernel; series code reinstates the kernel
// cardinality factor where the sign policy calls for it.

#include <bergman/groups/preset.hpp>

#include <cstdint>
#include <cstring>
#include <string>
#include <unordered_set>
#include <vector>

namespace bergman::grp {

inline void projective_normalize(exact_matrix& m)
{
    for (int k = 0; k < m.dim * m.dim; ++k) {
        int s = lex_sign(m.e[static_cast<std::size_t>(k)]);
        if (s > 0)
            return;
        if (s < 0) {
            for (int j = 0; j < m.dim * m.dim; ++j)
                m.e[static_cast<std::size_t>(j)] = neg(m.e[static_cast<std::size_t>(j)]);
            return;
        }
    }
}

inline std::string matrix_key(const exact_matrix& m)
{
    std::string key;
    key.resize(static_cast<std::size_t>(m.dim * m.dim) * 2 * sizeof(std::int64_t));
    char* out = key.data();
    for (int k = 0; k < m.dim * m.dim; ++k) {
        const auto& s = m.e[static_cast<std::size_t>(k)];
        std::memcpy(out, &s.a, sizeof(s.a));
        out += sizeof(s.a);
        std::memcpy(out, &s.b, sizeof(s.b));
        out += sizeof(s.b);
    }
    return key;
}

struct enumeration_options {
    int depth = 0;
    bool projective = false;
    std::int64_t max_elements = 30000000;
};

struct word_ball {
    // shells[k] holds the elements of word length exactly k, sorted by key
    std::vector<std::vector<group_element>> shells;
    bool truncated = false;
    std::int64_t count = 0;

    std::vector<group_element> flatten() const
    {
        std::vector<group_element> all;
        all.reserve(static_cast<std::size_t>(count));
        for (const auto& s : shells)
            all.insert(all.end(), s.begin(), s.end());
        return all;
    }
};

inline word_ball enumerate_ball(const group_preset& preset, enumeration_options opt)
{
    word_ball ball;
    group_element id = preset.identity();
    if (opt.projective)
        projective_normalize(id.m);
    std::unordered_set<std::string> seen;
    seen.insert(matrix_key(id.m));
    ball.shells.push_back({id});
    ball.count = 1;

    for (int depth = 1; depth <= opt.depth; ++depth) {
        std::vector<group_element> next;
        for (const auto& g : ball.shells[static_cast<std::size_t>(depth - 1)]) {
            for (const auto& s : preset.generators) {
                if (ball.count + static_cast<std::int64_t>(next.size()) >= opt.max_elements) {
                    ball.truncated = true;
                    break;
                }
                group_element h = g_mul(g, s);
                if (opt.projective)
                    projective_normalize(h.m);
                if (seen.insert(matrix_key(h.m)).second)
                    next.push_back(h);
            }
            if (ball.truncated)
                break;
        }
        std::sort(next.begin(), next.end(), detail::element_less);
        ball.count += static_cast<std::int64_t>(next.size());
        bool empty = next.empty();
        ball.shells.push_back(std::move(next));
        if (ball.truncated || empty)
            break;
    }
    // pad with empty shells so consumers see one entry per requested depth
    while (static_cast<int>(ball.shells.size()) <= opt.depth)
        ball.shells.push_back({});
    return ball;
}

// Whether the nontrivial kernel element (-I where present) twists the
// sigma-power q by -1; this is the term-by-term cancellation case.
inline bool kernel_cocycle_is_minus_one(const group_preset& p, long sigma_weight)
{
    if (p.kernel_cardinality < 2)
        return false;
    switch (p.kind) {
        case group_kind::special_linear: {
            // j(-I, z) = (-1)^m over m factors
            long m = p.domain_n;
            return ((m * sigma_weight) % 2) != 0;
        }
        case group_kind::symplectic:
            // J(-I, Z) = det(-Id_n) = (-1)^n
            return ((static_cast<long>(p.domain_n) * sigma_weight) % 2) != 0;
        default:
            return false;
    }
}

}  // namespace bergman::grp
