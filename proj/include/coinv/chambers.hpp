#ifndef COINV_CHAMBERS_HPP
#define COINV_CHAMBERS_HPP

#include <optional>
#include <vector>

#include "coinv/abelian.hpp"
#include "coinv/int_matrix.hpp"
#include "coinv/presentation.hpp"

namespace coinv::chambers {

using exact::AbelianGroup;
using exact::IntMatrix;
using tri::TrianglePresentation;
using tri::Triple;

/// Gallery word over absolute vertex types {0,1,2}; words must start with
/// type 0 (= the special type s of the base vertex).
using Word = std::vector<int>;

/// Position in a gallery walk: the current chamber orbit as a triple of T,
/// based at a vertex whose type differs from the start type by dtype (mod 3).
struct WalkState {
    int dtype = 0;
    Triple t{};

    bool operator==(const WalkState& o) const = default;
};

/// M_i over the chamber orbits D x D; every row and column sums to the
/// gallery count N_i = q^|word|.
struct GalleryCountMatrix {
    Word word;
    IntMatrix m;
};

/// Presented model of the boundary coinvariant group: the cokernel of the
/// stacked relation rows {e_x - sum_y M_i(x,y) e_y}, together with the order
/// of the all-ones class (the class of [1] when n_s = 1). The model surjects
/// onto the coinvariant group; it is reported as a model, not as the group
/// itself.
struct CoinvariantModel {
    AbelianGroup group;
    std::optional<mpz_class> ord_one; // nullopt = infinite
    std::vector<Word> relation_source;
};

/// All triples of T as chamber-orbit labels; count = (q+1)(q^2+q+1).
std::vector<Triple> chamber_orbits(const TrianglePresentation& p);

/// Index of a triple in chamber_orbits order.
std::size_t orbit_index(const TrianglePresentation& p, const Triple& t);

/// The q states reachable by crossing the panel of the given absolute type.
/// Throws std::invalid_argument for a crossing type outside {0,1,2}.
std::vector<WalkState> neighbors(const WalkState& state, int crossing_type,
                                 const TrianglePresentation& p);

/// Rotate the triple back to a base vertex of the start type.
Triple rebase(const WalkState& state);

GalleryCountMatrix gallery_matrix(const TrianglePresentation& p, const Word& word);

/// Default relation set: the two loop configurations C->C' and C->C'' of the
/// A2-tilde diagram, expressed as absolute-type words.
std::vector<Word> default_gallery_words(long q);

CoinvariantModel coinvariant_model(const TrianglePresentation& p,
                                   const std::vector<Word>& galleries);

} // namespace coinv::chambers

#endif
