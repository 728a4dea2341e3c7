#ifndef COINV_PRESENTATION_HPP
#define COINV_PRESENTATION_HPP

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace coinv::tri {

using Triple = std::array<long, 3>;

/// Thrown when a presentation violates a triangle-presentation axiom; the
/// message names the axiom and a witness.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Modular relator families: each pattern (c0,c1,c2) stands for the relators
/// x_{j+c0} x_{j+c1} x_{j+c2} = 1 for all j mod `modulus`.
struct RelatorSchema {
    long modulus = 0;
    std::vector<Triple> patterns;
};

/// The finite combinatorial datum of a torsion-free A2-tilde lattice:
/// q, generator count P = q^2+q+1, and the cyclically closed triple set T.
class TrianglePresentation {
public:
    TrianglePresentation(std::string name, long q, std::vector<Triple> triples);

    const std::string& name() const { return name_; }
    long q() const { return q_; }
    long gens() const { return gens_; }
    const std::vector<Triple>& triples() const { return triples_; }

    bool contains(const Triple& t) const;
    /// Triples whose first coordinate is i (the panel fiber; size q+1).
    const std::vector<Triple>& fiber(long i) const;

    std::string serialize() const;

private:
    void validate() const;

    std::string name_;
    long q_;
    long gens_;
    std::vector<Triple> triples_; // sorted
    std::vector<std::vector<Triple>> fibers_;
};

/// Expand a relator schema into the cyclic closure of its relators and
/// validate the result as a triangle presentation. q is inferred from the
/// modulus (q^2+q+1 = modulus must have an integer solution q >= 2).
TrianglePresentation expand_schema(const std::string& name, const RelatorSchema& schema);

/// Parse a presentation file: JSON with keys `name`, `q`, `modulus`,
/// `patterns`, and optionally `triples` (overriding the patterns).
TrianglePresentation parse_presentation(const std::string& text);
TrianglePresentation load_presentation_file(const std::string& path);

struct TypeCheck {
    bool relators_type_preserving; // every relator has length 3 (maps to 0 mod 3)
    long kernel_generators;        // |{x_j x_0^{-1} : j >= 1}|
};

/// The type homomorphism x_j -> 1 in Z/3: confirms every relator maps to 0
/// and reports the generator count of the index-3 kernel.
TypeCheck type_epimorphism_check(const TrianglePresentation& p);

} // namespace coinv::tri

#endif
