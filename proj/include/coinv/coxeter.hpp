#ifndef COINV_COXETER_HPP
#define COINV_COXETER_HPP

#include <array>
#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <vector>

namespace coinv::coxeter {

/// Type labels of a rank-2 affine diagram. `s` is the distinguished special
/// type, `a` is adjacent to `s` in the diagram.
enum class TypeLabel : int { s = 0, a = 1, b = 2 };

enum class DiagramKind { A2affine, B2affine, G2affine };

/// Rank-2 affine Coxeter diagram with thickness parameters q_t.
///   A2affine:  s-3-a-3-b-3-s   special {s,a,b}
///   B2affine:  s-4-a-4-b       special {s,b}
///   G2affine:  s-3-a-6-b       special {s}
struct CoxeterDiagram {
    DiagramKind kind;
    std::array<long, 3> q; // indexed by TypeLabel
    std::array<int, 3> edge_order; // m(s,a), m(a,b), m(b,s)
    std::vector<TypeLabel> special_types;

    static CoxeterDiagram make(DiagramKind kind, long q_s, long q_a, long q_b);
    static CoxeterDiagram split(DiagramKind kind, long q) {
        return make(kind, q, q, q);
    }

    long param(TypeLabel t) const { return q[static_cast<int>(t)]; }
    bool is_special(TypeLabel t) const;
    bool is_exceptional() const { return kind == DiagramKind::G2affine; }
    /// Coxeter order m(u, v) for u != v.
    int order(TypeLabel u, TypeLabel v) const;
};

/// A gallery type: a word (i_1, ..., i_k) of type labels with i_1 = s.
struct GalleryType {
    std::vector<TypeLabel> word;

    std::size_t length() const { return word.size(); }
    GalleryType reversed() const {
        return GalleryType{{word.rbegin(), word.rend()}};
    }
};

/// Monomial in the parameters q_s, q_a, q_b.
struct Monomial {
    std::array<long, 3> exponents{0, 0, 0};

    long degree() const { return exponents[0] + exponents[1] + exponents[2]; }
    mpz_class value(const CoxeterDiagram& d) const;
    bool operator==(const Monomial& o) const = default;
};

/// The standard chamber configurations used to derive gallery identities:
/// C -> C' and C -> C'' are loops at the special vertex s; the two-special
/// variant runs from the type-s vertex of C to another special vertex of C
/// (only valid when the diagram has at least two special types).
enum class StandardConfig { CtoCprime, CtoCdoublePrime, CtoCprimeTwoSpecial };

/// Number of chambers containing a fixed vertex of type t: the
/// multi-parameter Poincare sum over the finite dihedral residue group,
/// enumerated breadth-first.
mpz_class alpha(const CoxeterDiagram& d, TypeLabel t);

/// covol = n_s * alpha_s for a torsion-free lattice with n_s vertex orbits
/// of type s.
mpz_class covolume(long n_s, const CoxeterDiagram& d);

/// Minimal gallery type for a standard configuration, derived from an exact
/// alcove tiling of the plane. The word starts with s and its length equals
/// the alcove-graph distance between the configured chambers.
/// Throws std::invalid_argument if the configuration is not valid for the
/// diagram.
GalleryType minimal_gallery_type(const CoxeterDiagram& d, StandardConfig config);

/// N_i as a monomial: the exponent of t is the number of occurrences of t
/// in the gallery word.
Monomial gallery_count(const CoxeterDiagram& d, const GalleryType& g);

std::string to_string(TypeLabel t);
std::string to_string(const GalleryType& g);

} // namespace coinv::coxeter

#endif
