#include "coinv/chambers.hpp"

#include <algorithm>
#include <stdexcept>

#include "coinv/coxeter.hpp"
#include "coinv/snf.hpp"

namespace coinv::chambers {

std::vector<Triple> chamber_orbits(const TrianglePresentation& p) {
    return p.triples(); // already sorted; orbits <-> triples under the
                        // simply-transitive vertex action
}

std::size_t orbit_index(const TrianglePresentation& p, const Triple& t) {
    const auto& ts = p.triples();
    auto it = std::lower_bound(ts.begin(), ts.end(), t);
    if (it == ts.end() || *it != t)
        throw std::invalid_argument("orbit_index: triple not in T");
    return static_cast<std::size_t>(it - ts.begin());
}

std::vector<WalkState> neighbors(const WalkState& state, int crossing_type,
                                 const TrianglePresentation& p) {
    if (crossing_type < 0 || crossing_type > 2)
        throw std::invalid_argument("neighbors: crossing type must be in {0,1,2}");
    const auto [i, j, k] = state.t;
    const int rel = ((crossing_type - state.dtype) % 3 + 3) % 3;
    std::vector<WalkState> out;
    out.reserve(static_cast<std::size_t>(p.q()));
    if (rel == 0) {
        // panel omits the base vertex; rebase at the type-(dtype+1) vertex
        const Triple rotation{j, k, i};
        for (const auto& t2 : p.fiber(j))
            if (t2 != rotation) out.push_back({(state.dtype + 1) % 3, t2});
    } else if (rel == 1) {
        // panel omits the type-(dtype+1) vertex; third coordinate k fixed.
        // Triples ending in k are rotations of triples starting with k.
        for (const auto& rot : p.fiber(k)) {
            Triple t2{rot[1], rot[2], rot[0]}; // (k,a,b) -> (a,b,k)
            if (t2 != state.t) out.push_back({state.dtype, t2});
        }
    } else {
        // panel omits the type-(dtype+2) vertex; first coordinate i fixed
        for (const auto& t2 : p.fiber(i))
            if (t2 != state.t) out.push_back({state.dtype, t2});
    }
    return out;
}

Triple rebase(const WalkState& state) {
    const auto [i, j, k] = state.t;
    switch (state.dtype) {
    case 0: return {i, j, k};
    case 1: return {k, i, j};
    case 2: return {j, k, i};
    }
    throw std::logic_error("rebase: dtype out of range");
}

GalleryCountMatrix gallery_matrix(const TrianglePresentation& p, const Word& word) {
    for (int c : word)
        if (c < 0 || c > 2)
            throw std::invalid_argument("gallery_matrix: letters must be in {0,1,2}");
    if (!word.empty() && word.front() != 0)
        throw std::invalid_argument("gallery_matrix: word must start with type 0");

    const auto& orbits = p.triples();
    const std::size_t n = orbits.size();
    GalleryCountMatrix g{word, IntMatrix(n, n)};

    for (std::size_t x = 0; x < n; ++x) {
        // depth-first walk with the word as schedule; counts per end orbit
        std::vector<WalkState> frontier{{0, orbits[x]}};
        std::vector<WalkState> next;
        for (int letter : word) {
            next.clear();
            for (const auto& st : frontier) {
                auto ns = neighbors(st, letter, p);
                next.insert(next.end(), ns.begin(), ns.end());
            }
            frontier.swap(next);
        }
        for (const auto& st : frontier)
            g.m.at(x, orbit_index(p, rebase(st))) += 1;
    }
    return g;
}

std::vector<Word> default_gallery_words(long q) {
    using namespace coinv::coxeter;
    const CoxeterDiagram d = CoxeterDiagram::split(DiagramKind::A2affine, q);
    std::vector<Word> words;
    for (auto cfg : {StandardConfig::CtoCprime, StandardConfig::CtoCdoublePrime}) {
        GalleryType g = minimal_gallery_type(d, cfg);
        Word w;
        for (TypeLabel t : g.word) w.push_back(static_cast<int>(t));
        words.push_back(std::move(w));
    }
    return words;
}

CoinvariantModel coinvariant_model(const TrianglePresentation& p,
                                   const std::vector<Word>& galleries) {
    std::vector<Word> words = galleries;
    if (words.empty()) words = default_gallery_words(p.q());

    const std::size_t n = p.triples().size();
    IntMatrix relations(words.size() * n, n);
    std::size_t row = 0;
    for (const auto& w : words) {
        GalleryCountMatrix g = gallery_matrix(p, w);
        for (std::size_t x = 0; x < n; ++x, ++row) {
            relations.at(row, x) += 1;
            for (std::size_t y = 0; y < n; ++y)
                relations.at(row, y) -= g.m.at(x, y);
        }
    }

    CoinvariantModel model;
    model.relation_source = words;
    model.group = exact::cokernel(relations);
    model.ord_one =
        exact::order_in_cokernel(relations, std::vector<mpz_class>(n, 1));
    return model;
}

} // namespace coinv::chambers
