#ifndef COINV_QUOTIENT_COMPLEX_HPP
#define COINV_QUOTIENT_COMPLEX_HPP

#include <utility>

#include "coinv/abelian.hpp"
#include "coinv/int_matrix.hpp"
#include "coinv/presentation.hpp"

namespace coinv::cx {

using exact::AbelianGroup;
using exact::IntMatrix;

/// The finite quotient cell complex of the building by the lattice:
/// 3 vertex orbits (one per type), 3P edge orbits, |T| chamber orbits.
/// Edge orbit indexing: e01_i at i, e12_j at P+j, e20_k at 2P+k.
struct QuotientComplex {
    long q = 0;
    long gens = 0;          // P = q^2+q+1
    std::size_t vertices = 3;
    std::size_t edges = 0;  // 3P
    std::size_t faces = 0;  // |T|
    IntMatrix boundary_2;   // faces x edges, one row per chamber orbit
    IntMatrix boundary_1;   // edges x vertices

    long euler() const {
        return static_cast<long>(vertices) - static_cast<long>(edges) +
               static_cast<long>(faces);
    }
};

struct HomologyResult {
    AbelianGroup h0, h1, h2;
    long euler = 0;
};

/// Assemble boundary matrices from the triple set. Row of boundary_2 for a
/// chamber orbit (i,j,k): e01_i + e12_j + e20_k; boundary_1 sends
/// e01_i -> v1-v0, e12_j -> v2-v1, e20_k -> v0-v2. The chain-complex
/// identity d1 o d2 = 0 is checked.
QuotientComplex build_complex(const tri::TrianglePresentation& p);

HomologyResult homology(const QuotientComplex& c);

/// Closed form (q-1)(q^m-1) * n_s with m = 2, 3, 5 for the three rank-2
/// diagrams (m = 2 is the A2-tilde case used by the fixtures).
long euler_characteristic_formula(long q, long n_s, int m = 2);

/// K-groups of the reduced group C*-algebra: K0 free of rank euler,
/// K1 = H1. Throws std::invalid_argument if H1 is infinite.
std::pair<AbelianGroup, AbelianGroup> reduced_k_groups(const HomologyResult& h);

} // namespace coinv::cx

#endif
