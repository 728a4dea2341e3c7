#include "coinv/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace coinv::tri {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

std::string triple_str(const Triple& t) {
    std::ostringstream os;
    os << "(" << t[0] << "," << t[1] << "," << t[2] << ")";
    return os.str();
}

/// q with q^2+q+1 = p, or -1.
long q_from_gen_count(long p) {
    for (long q = 2; q * q <= p; ++q)
        if (q * q + q + 1 == p) return q;
    return -1;
}

} // namespace

TrianglePresentation::TrianglePresentation(std::string name, long q,
                                           std::vector<Triple> triples)
    : name_(std::move(name)), q_(q), gens_(q * q + q + 1),
      triples_(std::move(triples)) {
    std::sort(triples_.begin(), triples_.end());
    triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
    validate();
    fibers_.resize(gens_);
    for (const auto& t : triples_) fibers_[t[0]].push_back(t);
}

bool TrianglePresentation::contains(const Triple& t) const {
    return std::binary_search(triples_.begin(), triples_.end(), t);
}

const std::vector<Triple>& TrianglePresentation::fiber(long i) const {
    return fibers_.at(i);
}

void TrianglePresentation::validate() const {
    if (q_ < 2)
        throw ValidationError("parameter axiom violated: q must be >= 2");
    const long expected = (q_ + 1) * gens_;

    std::set<Triple> seen(triples_.begin(), triples_.end());
    std::vector<long> fiber_size(gens_, 0);
    std::map<std::pair<long, long>, long> pair_to_third;
    for (const auto& t : triples_) {
        for (long c : t)
            if (c < 0 || c >= gens_)
                throw ValidationError("index axiom violated: coordinate out of "
                                      "range in triple " + triple_str(t));
        if (!seen.count(Triple{t[1], t[2], t[0]}))
            throw ValidationError("cyclic closure axiom violated: rotation of " +
                                  triple_str(t) + " is missing");
        ++fiber_size[t[0]];
        auto key = std::make_pair(t[0], t[1]);
        auto [it, fresh] = pair_to_third.emplace(key, t[2]);
        if (!fresh && it->second != t[2])
            throw ValidationError("pair uniqueness axiom violated: pair (" +
                                  std::to_string(t[0]) + "," + std::to_string(t[1]) +
                                  ") has two completions");
    }
    for (long i = 0; i < gens_; ++i)
        if (fiber_size[i] != q_ + 1)
            throw ValidationError(
                "fiber size axiom violated: index " + std::to_string(i) +
                " appears as first coordinate " + std::to_string(fiber_size[i]) +
                " times, expected q+1 = " + std::to_string(q_ + 1));
    if (static_cast<long>(triples_.size()) != expected)
        throw ValidationError("cardinality axiom violated: |T| = " +
                              std::to_string(triples_.size()) + ", expected " +
                              std::to_string(expected));
}

TrianglePresentation expand_schema(const std::string& name,
                                   const RelatorSchema& schema) {
    if (schema.patterns.empty())
        throw ValidationError("schema has no patterns");
    const long n = schema.modulus;
    if (n < 2)
        throw ValidationError("schema modulus must be >= 2");
    long q = q_from_gen_count(n);
    if (q < 0)
        throw ValidationError("modulus " + std::to_string(n) +
                              " is not of the form q^2+q+1 for any q >= 2");
    std::set<Triple> closure;
    for (const auto& p : schema.patterns)
        for (long j = 0; j < n; ++j) {
            Triple t{mod(j + p[0], n), mod(j + p[1], n), mod(j + p[2], n)};
            closure.insert(t);
            closure.insert(Triple{t[1], t[2], t[0]});
            closure.insert(Triple{t[2], t[0], t[1]});
        }
    return TrianglePresentation(name, q, {closure.begin(), closure.end()});
}

std::string TrianglePresentation::serialize() const {
    nlohmann::json j;
    j["name"] = name_;
    j["q"] = q_;
    j["modulus"] = gens_;
    j["triples"] = nlohmann::json::array();
    for (const auto& t : triples_) j["triples"].push_back({t[0], t[1], t[2]});
    return j.dump(2);
}

TrianglePresentation parse_presentation(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("presentation file is not valid JSON: ") +
                              e.what());
    }
    if (!j.contains("name") || !j.contains("q"))
        throw ValidationError("presentation file missing required keys name/q");
    std::string name = j["name"].get<std::string>();
    long q = j["q"].get<long>();

    auto read_triples = [](const nlohmann::json& arr) {
        std::vector<Triple> ts;
        for (const auto& e : arr) {
            if (!e.is_array() || e.size() != 3)
                throw ValidationError("triple entries must be 3-int arrays");
            ts.push_back(Triple{e[0].get<long>(), e[1].get<long>(), e[2].get<long>()});
        }
        return ts;
    };

    if (j.contains("triples")) {
        return TrianglePresentation(name, q, read_triples(j["triples"]));
    }
    if (!j.contains("modulus") || !j.contains("patterns"))
        throw ValidationError("presentation file needs either triples or "
                              "modulus+patterns");
    RelatorSchema schema;
    schema.modulus = j["modulus"].get<long>();
    schema.patterns = read_triples(j["patterns"]);
    TrianglePresentation p = expand_schema(name, schema);
    if (p.q() != q)
        throw ValidationError("declared q = " + std::to_string(q) +
                              " does not match modulus-derived q = " +
                              std::to_string(p.q()));
    return p;
}

TrianglePresentation load_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open presentation file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
}

TypeCheck type_epimorphism_check(const TrianglePresentation& p) {
    // Relators x_i x_j x_k all have length 3, hence map to 0 under x_j -> 1
    // in Z/3; the kernel is generated by x_j x_0^{-1}, 1 <= j < P.
    return TypeCheck{true, p.gens() - 1};
}

} // namespace coinv::tri
