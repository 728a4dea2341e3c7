#ifndef COINV_ABELIAN_HPP
#define COINV_ABELIAN_HPP

#include <cstddef>
#include <gmpxx.h>
#include <string>
#include <vector>

namespace coinv::exact {

/// Finitely generated abelian group in invariant-factor form:
/// Z^free_rank + Z/d1 + ... + Z/dk with d1 | d2 | ... | dk, each di >= 2.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;

    bool operator==(const AbelianGroup& o) const = default;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }

    /// Order of the torsion subgroup.
    mpz_class torsion_order() const {
        mpz_class n = 1;
        for (const auto& d : torsion) n *= d;
        return n;
    }

    /// Build from a diagonal list (any order, may contain 0, 1, negatives).
    /// Zeros contribute to the free rank relative to an ambient rank:
    /// callers pass free_rank explicitly instead, so this only normalizes
    /// the torsion part.
    static AbelianGroup from_invariant_factors(std::size_t free_rank,
                                               const std::vector<mpz_class>& diag);

    /// "Z^2 + Z/3 + Z/39", or "0" for the trivial group.
    std::string to_string() const;
};

} // namespace coinv::exact

#endif
