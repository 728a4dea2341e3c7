#ifndef COINV_FP_GROUP_HPP
#define COINV_FP_GROUP_HPP

#include <vector>

#include "coinv/abelian.hpp"
#include "coinv/presentation.hpp"

namespace coinv::fp {

using exact::AbelianGroup;

/// Word over generators and inverses: letter +-(g+1) for generator g.
using Word = std::vector<int>;

struct FpGroup {
    long ngens = 0;
    std::vector<Word> relators; // freely reduced
};

/// The lattice presentation: one relator x_i x_j x_k per triple of T.
FpGroup presentation_group(const tri::TrianglePresentation& p);

/// Generating words x_j x_0^{-1}, 1 <= j < P, of the type-preserving
/// index-3 subgroup.
std::vector<Word> type_preserving_subgroup_gens(const tri::TrianglePresentation& p);

/// Complete closed coset table. Row c, column 2g holds c.x_g, column 2g+1
/// holds c.x_g^{-1}.
struct CosetTable {
    long ngens = 0;
    std::vector<std::vector<long>> table;

    long index() const { return static_cast<long>(table.size()); }
    long apply(long coset, int letter) const; // letter as in Word
};

/// HLT-style coset enumeration with coincidence handling. Throws
/// std::runtime_error if more than `coset_limit` cosets are defined.
CosetTable coset_enumeration(const FpGroup& g, const std::vector<Word>& subgroup_gens,
                             long coset_limit = 10000);

/// Subgroup presentation on Schreier generators, with the transversal fixed
/// by shortlex breadth-first search on generator 0 first (giving
/// {1, x0, x0^2} for the index-3 case).
FpGroup reidemeister_schreier(const FpGroup& g, const CosetTable& table);

/// Cokernel of the relator exponent-sum matrix.
AbelianGroup abelianization(const FpGroup& g);

Word free_reduce(const Word& w);

} // namespace coinv::fp

#endif
