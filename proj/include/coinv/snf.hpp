#ifndef COINV_SNF_HPP
#define COINV_SNF_HPP

#include <optional>
#include <vector>

#include "coinv/abelian.hpp"
#include "coinv/int_matrix.hpp"

namespace coinv::exact {

/// left * A * right = diag(diagonal), with both transforms unimodular.
/// diagonal has length min(rows, cols) and forms a divisibility chain;
/// trailing entries beyond the rank are zero.
struct SnfDecomposition {
    std::vector<mpz_class> diagonal;
    IntMatrix left;
    IntMatrix right;

    std::size_t rank() const {
        std::size_t r = 0;
        for (const auto& d : diagonal)
            if (d != 0) ++r;
        return r;
    }
};

/// Smith normal form with a deterministic pivot rule: smallest nonzero
/// absolute value, ties broken topmost-then-leftmost.
SnfDecomposition smith_normal_form(const IntMatrix& a);

/// Cokernel of the row lattice: Z^cols / rowspace(a), rows read as
/// relations among the column generators.
AbelianGroup cokernel(const IntMatrix& a);

/// Exact order of v + rowspace(a) in the cokernel; nullopt means the class
/// has infinite order. Throws std::invalid_argument on length mismatch.
std::optional<mpz_class> order_in_cokernel(const IntMatrix& a,
                                           const std::vector<mpz_class>& v);

/// Row-style Hermite normal form: returns the nonzero rows of a canonical
/// upper-echelon basis of the row lattice (pivots positive, entries above
/// a pivot reduced into [0, pivot)).
IntMatrix hermite_normal_form(const IntMatrix& a);

} // namespace coinv::exact

#endif
