#ifndef COINV_ORDERBOUNDS_HPP
#define COINV_ORDERBOUNDS_HPP

#include <gmpxx.h>
#include <optional>
#include <vector>

#include "coinv/coxeter.hpp"

namespace coinv::bounds {

using coxeter::CoxeterDiagram;
using coxeter::Monomial;
using coxeter::TypeLabel;

/// A relation (n_end * N - n_start) [1] = 0 in the coinvariant group, coming
/// from counting galleries of a fixed minimal type between special vertices.
/// For a loop (start == end) this reads n_start (N - 1) [1] = 0.
struct GalleryIdentity {
    TypeLabel start_type = TypeLabel::s;
    TypeLabel end_type = TypeLabel::s;
    Monomial count;
    mpz_class n_start = 1;
    mpz_class n_end = 1;
};

/// Everything known about ord([1]) for one diagram: a list of annihilating
/// integers, their lattice-refined gcd, and the two covolume bounds.
struct OrderCertificate {
    std::vector<mpz_class> annihilators;
    mpz_class gcd_annihilator;
    mpz_class bound_thm2;                 // q_s * covol
    std::optional<mpz_class> bound_thm3;  // covol - n_s; absent for exceptional
    bool exceptional = false;
};

/// n_start (N - 1) for a loop, |n_end N - n_start| otherwise. Throws
/// std::invalid_argument if the identity is degenerate (annihilator zero).
mpz_class annihilator_from_identity(const CoxeterDiagram& d, const GalleryIdentity& id);

/// Combine loop identities at s through the lattice of their exponent
/// vectors: Hermite-reduce the vectors, evaluate |value(u) - value(w)| on
/// the positive/negative split u - w of each basis vector, and return
/// n_s * gcd. Sound because every prime of the result is coprime to each
/// q_t. Throws std::invalid_argument on an empty list, a non-loop identity,
/// or mismatched n_s.
mpz_class refined_annihilator(const CoxeterDiagram& d,
                              const std::vector<GalleryIdentity>& identities);

/// The diagram's standard loop identities C->C' and C->C''; with
/// `equal_hyperspecial` set (caller-asserted n_t = n_s, valid for split
/// groups), the two-special-vertices identity is folded in as a loop.
std::vector<GalleryIdentity> standard_identities(const CoxeterDiagram& d,
                                                 const mpz_class& n_s,
                                                 bool equal_hyperspecial = false);

OrderCertificate bounds_report(const CoxeterDiagram& d, const mpz_class& n_s,
                               bool equal_hyperspecial = false);

} // namespace coinv::bounds

#endif
