#include "coinv/coxeter.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <stdexcept>

namespace coinv::coxeter {

CoxeterDiagram CoxeterDiagram::make(DiagramKind kind, long q_s, long q_a, long q_b) {
    if (q_s < 2 || q_a < 2 || q_b < 2)
        throw std::invalid_argument("CoxeterDiagram: parameters q_t must be >= 2");
    CoxeterDiagram d;
    d.kind = kind;
    d.q = {q_s, q_a, q_b};
    switch (kind) {
    case DiagramKind::A2affine:
        d.edge_order = {3, 3, 3};
        d.special_types = {TypeLabel::s, TypeLabel::a, TypeLabel::b};
        break;
    case DiagramKind::B2affine:
        d.edge_order = {4, 4, 2};
        d.special_types = {TypeLabel::s, TypeLabel::b};
        break;
    case DiagramKind::G2affine:
        d.edge_order = {3, 6, 2};
        d.special_types = {TypeLabel::s};
        break;
    }
    return d;
}

bool CoxeterDiagram::is_special(TypeLabel t) const {
    return std::find(special_types.begin(), special_types.end(), t) !=
           special_types.end();
}

int CoxeterDiagram::order(TypeLabel u, TypeLabel v) const {
    if (u == v) return 1;
    int i = static_cast<int>(u), j = static_cast<int>(v);
    if (i > j) std::swap(i, j);
    if (i == 0 && j == 1) return edge_order[0];
    if (i == 1 && j == 2) return edge_order[1];
    return edge_order[2];
}

mpz_class Monomial::value(const CoxeterDiagram& d) const {
    mpz_class v = 1;
    for (int t = 0; t < 3; ++t)
        for (long e = 0; e < exponents[t]; ++e) v *= d.q[t];
    return v;
}

mpz_class alpha(const CoxeterDiagram& d, TypeLabel t) {
    // Residue of a type-t vertex: the finite dihedral group on the other two
    // types, realized as the cycle of 2m chambers around the vertex. BFS from
    // the base chamber; the weight of a chamber is the product of q over the
    // crossing types of a minimal gallery reaching it.
    TypeLabel u = t == TypeLabel::s ? TypeLabel::a : TypeLabel::s;
    TypeLabel v = t == TypeLabel::b ? TypeLabel::a : TypeLabel::b;
    const int m = d.order(u, v);
    const int n = 2 * m;
    std::vector<mpz_class> weight(n);
    std::vector<int> dist(n, -1);
    weight[0] = 1;
    dist[0] = 0;
    std::deque<int> queue{0};
    auto edge_label = [&](int i) { return i % 2 == 0 ? u : v; };
    while (!queue.empty()) {
        int c = queue.front();
        queue.pop_front();
        for (int e : {c, (c + n - 1) % n}) { // edges c--c+1 and c-1--c
            int other = e == c ? (c + 1) % n : (c + n - 1) % n;
            if (dist[other] != -1) continue;
            dist[other] = dist[c] + 1;
            weight[other] = weight[c] * d.param(edge_label(e));
            queue.push_back(other);
        }
    }
    mpz_class sum = 0;
    for (const auto& w : weight) sum += w;
    return sum;
}

mpz_class covolume(long n_s, const CoxeterDiagram& d) {
    if (n_s < 1)
        throw std::invalid_argument("covolume: n_s must be positive");
    return n_s * alpha(d, TypeLabel::s);
}

Monomial gallery_count(const CoxeterDiagram&, const GalleryType& g) {
    Monomial m;
    for (TypeLabel t : g.word) ++m.exponents[static_cast<int>(t)];
    return m;
}

// ---------------------------------------------------------------------------
// Alcove tilings.
//
// Each diagram is realized as a triangle tiling of the plane with exact
// integer vertex coordinates and an integer Gram matrix:
//   A2affine: triangular lattice, basis vectors at 60 degrees, Gram [2 1;1 2];
//             vertex type = (x + 2y) mod 3.
//   B2affine: unit square lattice, squares cut by the diagonal joining the
//             two special corners; type a = x+y even, s = x odd, b = x even.
//   G2affine: triangular lattice scaled by 6 and barycentrically subdivided
//             (30-60-90 alcoves); s at lattice points, a at edge midpoints,
//             b at triangle centers, classified by coordinates mod 6.
// Chambers are vertex triples; adjacency reflects one vertex across the line
// through the other two, and the crossing label is the replaced vertex type.
// ---------------------------------------------------------------------------

namespace {

using Vec = std::array<long, 2>;
using Chamber = std::array<Vec, 3>; // kept sorted

struct Tiling {
    DiagramKind kind;
    long g11, g12, g22;

    long dot(const Vec& u, const Vec& v) const {
        return g11 * u[0] * v[0] + g12 * (u[0] * v[1] + u[1] * v[0]) +
               g22 * u[1] * v[1];
    }

    int type_of(const Vec& p) const {
        switch (kind) {
        case DiagramKind::A2affine:
            return static_cast<int>((((p[0] + 2 * p[1]) % 3) + 3) % 3);
        case DiagramKind::B2affine: {
            if ((p[0] + p[1]) % 2 == 0) return 1; // a
            return (p[0] % 2 + 2) % 2 == 1 ? 0 : 2; // s : b
        }
        case DiagramKind::G2affine: {
            long x = ((p[0] % 6) + 6) % 6, y = ((p[1] % 6) + 6) % 6;
            if (x == 0 && y == 0) return 0; // s
            if ((x == 2 && y == 2) || (x == 4 && y == 4)) return 2; // b
            if (x % 3 == 0 && y % 3 == 0) return 1; // a (edge midpoints)
            throw std::logic_error("G2 tiling: not a vertex");
        }
        }
        throw std::logic_error("unreachable");
    }

    Vec reflect(const Vec& p, const Vec& q, const Vec& r) const {
        Vec d{r[0] - q[0], r[1] - q[1]};
        Vec e{p[0] - q[0], p[1] - q[1]};
        // p' = q + (2<e,d>/<d,d>) d - e; the coefficient can be half-integral
        // (d need not be primitive), but the product stays integral
        long num = 2 * dot(e, d);
        long den = dot(d, d);
        if (den == 0 || (num * d[0]) % den != 0 || (num * d[1]) % den != 0)
            throw std::logic_error("tiling: reflection left the lattice");
        return Vec{q[0] + num * d[0] / den - e[0], q[1] + num * d[1] / den - e[1]};
    }

    Chamber fundamental() const {
        switch (kind) {
        case DiagramKind::A2affine:
            return sorted({Vec{0, 0}, Vec{1, 0}, Vec{0, 1}});
        case DiagramKind::B2affine:
            return sorted({Vec{1, 0}, Vec{1, 1}, Vec{0, 1}});
        case DiagramKind::G2affine:
            return sorted({Vec{0, 0}, Vec{3, 0}, Vec{2, 2}});
        }
        throw std::logic_error("unreachable");
    }

    static Chamber sorted(Chamber c) {
        std::sort(c.begin(), c.end());
        return c;
    }

    static Chamber translated(const Chamber& c, const Vec& off) {
        Chamber t = c;
        for (auto& p : t) {
            p[0] += off[0];
            p[1] += off[1];
        }
        return sorted(t);
    }

    /// Neighbor across the panel opposite vertex index vi; also reports the
    /// crossing type (type of the replaced vertex).
    Chamber neighbor(const Chamber& c, int vi, int& crossing_type) const {
        Vec p = c[vi];
        Vec q = c[(vi + 1) % 3], r = c[(vi + 2) % 3];
        Vec p2 = reflect(p, q, r);
        crossing_type = type_of(p);
        if (type_of(p2) != crossing_type)
            throw std::logic_error("tiling: reflection changed the vertex type");
        Chamber n{p2, q, r};
        return sorted(n);
    }
};

Tiling tiling_for(DiagramKind kind) {
    switch (kind) {
    case DiagramKind::A2affine:
        return Tiling{kind, 2, 1, 2};
    case DiagramKind::B2affine:
        return Tiling{kind, 1, 0, 1};
    case DiagramKind::G2affine:
        return Tiling{kind, 2, 1, 2};
    }
    throw std::logic_error("unreachable");
}

/// Translation offset of the target chamber for each standard configuration,
/// anchored per the apartment pictures: v at the origin, C the fundamental
/// alcove, C'/C'' the base chambers of the subsectors at the next special
/// vertices of the sector.
Vec config_offset(DiagramKind kind, StandardConfig config) {
    switch (kind) {
    case DiagramKind::A2affine:
        switch (config) {
        case StandardConfig::CtoCprime: return {1, 1};
        case StandardConfig::CtoCdoublePrime: return {3, 0};
        case StandardConfig::CtoCprimeTwoSpecial: return {1, 0};
        }
        break;
    case DiagramKind::B2affine:
        switch (config) {
        case StandardConfig::CtoCprime: return {0, 2};
        case StandardConfig::CtoCdoublePrime: return {2, 2};
        case StandardConfig::CtoCprimeTwoSpecial: return {-1, 1};
        }
        break;
    case DiagramKind::G2affine:
        switch (config) {
        case StandardConfig::CtoCprime: return {6, 0};
        case StandardConfig::CtoCdoublePrime: return {6, 6};
        case StandardConfig::CtoCprimeTwoSpecial:
            throw std::invalid_argument(
                "two-special configuration requires at least two special types");
        }
        break;
    }
    throw std::logic_error("unreachable");
}

} // namespace

GalleryType minimal_gallery_type(const CoxeterDiagram& d, StandardConfig config) {
    if (config == StandardConfig::CtoCprimeTwoSpecial &&
        d.special_types.size() < 2)
        throw std::invalid_argument(
            "two-special configuration requires at least two special types");

    const Tiling tiling = tiling_for(d.kind);
    const Chamber source = tiling.fundamental();
    const Chamber target =
        Tiling::translated(source, config_offset(d.kind, config));

    // Distances from the target over the alcove adjacency graph.
    std::map<Chamber, int> dist;
    std::deque<Chamber> queue;
    dist[target] = 0;
    queue.push_back(target);
    int cutoff = -1;
    while (!queue.empty()) {
        Chamber c = queue.front();
        queue.pop_front();
        int dc = dist.at(c);
        if (cutoff >= 0 && dc >= cutoff) continue;
        for (int vi = 0; vi < 3; ++vi) {
            int ct;
            Chamber n = tiling.neighbor(c, vi, ct);
            if (dist.count(n)) continue;
            dist[n] = dc + 1;
            if (n == source && cutoff < 0) cutoff = dc + 1;
            queue.push_back(n);
        }
    }
    if (!dist.count(source))
        throw std::logic_error("minimal_gallery_type: source unreachable from target");

    // Greedy distance-decreasing walk from the source. The first crossing must
    // have type s; later steps break ties in label order s, a, b.
    GalleryType g;
    Chamber cur = source;
    while (cur != target) {
        int best_type = 4;
        Chamber best{};
        for (int vi = 0; vi < 3; ++vi) {
            int ct;
            Chamber n = tiling.neighbor(cur, vi, ct);
            auto it = dist.find(n);
            if (it == dist.end() || it->second != dist.at(cur) - 1) continue;
            if (g.word.empty() && ct != 0) continue;
            if (ct < best_type) {
                best_type = ct;
                best = n;
            }
        }
        if (best_type >= 4)
            throw std::logic_error(
                "minimal_gallery_type: no minimal continuation starting with s; "
                "configuration anchoring broken");
        g.word.push_back(static_cast<TypeLabel>(best_type));
        cur = best;
    }
    if (g.word.empty() || g.word.front() != TypeLabel::s)
        throw std::logic_error("minimal_gallery_type: word does not start with s");
    return g;
}

std::string to_string(TypeLabel t) {
    switch (t) {
    case TypeLabel::s: return "s";
    case TypeLabel::a: return "a";
    case TypeLabel::b: return "b";
    }
    return "?";
}

std::string to_string(const GalleryType& g) {
    std::string out;
    for (std::size_t i = 0; i < g.word.size(); ++i) {
        if (i) out += ",";
        out += to_string(g.word[i]);
    }
    return out;
}

} // namespace coinv::coxeter
