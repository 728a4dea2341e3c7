#include "coinv/quotient_complex.hpp"

#include <stdexcept>

#include "coinv/snf.hpp"

namespace coinv::cx {

QuotientComplex build_complex(const tri::TrianglePresentation& p) {
    QuotientComplex c;
    c.q = p.q();
    c.gens = p.gens();
    const std::size_t P = static_cast<std::size_t>(c.gens);
    c.edges = 3 * P;
    c.faces = p.triples().size();

    c.boundary_2 = IntMatrix(c.faces, c.edges);
    for (std::size_t r = 0; r < c.faces; ++r) {
        const auto& t = p.triples()[r];
        c.boundary_2.at(r, static_cast<std::size_t>(t[0])) += 1;
        c.boundary_2.at(r, P + static_cast<std::size_t>(t[1])) += 1;
        c.boundary_2.at(r, 2 * P + static_cast<std::size_t>(t[2])) += 1;
    }

    c.boundary_1 = IntMatrix(c.edges, 3);
    for (std::size_t i = 0; i < P; ++i) {
        c.boundary_1.at(i, 0) = -1;          // e01: v1 - v0
        c.boundary_1.at(i, 1) = 1;
        c.boundary_1.at(P + i, 1) = -1;      // e12: v2 - v1
        c.boundary_1.at(P + i, 2) = 1;
        c.boundary_1.at(2 * P + i, 2) = -1;  // e20: v0 - v2
        c.boundary_1.at(2 * P + i, 0) = 1;
    }

    IntMatrix z = c.boundary_2 * c.boundary_1;
    for (std::size_t i = 0; i < z.rows(); ++i)
        for (std::size_t j = 0; j < z.cols(); ++j)
            if (z.at(i, j) != 0)
                throw std::logic_error("chain complex axiom d1 o d2 = 0 failed");
    return c;
}

HomologyResult homology(const QuotientComplex& c) {
    exact::SnfDecomposition s1 = exact::smith_normal_form(c.boundary_1);
    exact::SnfDecomposition s2 = exact::smith_normal_form(c.boundary_2);
    const std::size_t r1 = s1.rank();
    const std::size_t r2 = s2.rank();

    HomologyResult h;
    // H0 = Z^V / im(d1): torsion factors of d1 are all 1 for a connected
    // complex, leaving Z.
    h.h0 = AbelianGroup::from_invariant_factors(c.vertices - r1, s1.diagonal);
    // torsion(H1) = torsion(Z^E / im(d2)) since the quotient by ker(d1) is free
    h.h1 = AbelianGroup::from_invariant_factors(c.edges - r1 - r2, s2.diagonal);
    // H2 = ker(d2), free
    h.h2 = AbelianGroup{c.faces - r2, {}};
    h.euler = c.euler();
    return h;
}

long euler_characteristic_formula(long q, long n_s, int m) {
    if (q < 2 || n_s < 1 || (m != 2 && m != 3 && m != 5))
        throw std::invalid_argument("euler_characteristic_formula: bad arguments");
    long qm = 1;
    for (int i = 0; i < m; ++i) qm *= q;
    return (q - 1) * (qm - 1) * n_s;
}

std::pair<AbelianGroup, AbelianGroup> reduced_k_groups(const HomologyResult& h) {
    if (!h.h1.is_finite())
        throw std::invalid_argument(
            "reduced_k_groups: H1 must be finite (property (T))");
    AbelianGroup k0{static_cast<std::size_t>(h.euler), {}};
    return {k0, h.h1};
}

} // namespace coinv::cx
