#include "coinv/report.hpp"

#include <sstream>
#include <stdexcept>

#include "coinv/fp_group.hpp"

namespace coinv::report {

namespace {

using nlohmann::json;

json mpz_to_json(const mpz_class& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json group_to_json(const AbelianGroup& g) {
    json torsion = json::array();
    for (const auto& d : g.torsion) torsion.push_back(mpz_to_json(d));
    return json{{"free_rank", g.free_rank}, {"torsion", torsion}};
}

json order_to_json(const std::optional<mpz_class>& o) {
    if (!o) return json("infinite");
    return mpz_to_json(*o);
}

std::string word_to_string(const chambers::Word& w) {
    static const char* names[3] = {"s", "a", "b"};
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += names[w[i]];
    }
    return out;
}

} // namespace

InvariantReport analyze(const tri::TrianglePresentation& p,
                        const std::vector<chambers::Word>& galleries) {
    InvariantReport r;
    r.fixture = p.name();
    r.q = p.q();

    const cx::QuotientComplex c = cx::build_complex(p);
    r.vertices = c.vertices;
    r.edges = c.edges;
    r.faces = c.faces;
    const cx::HomologyResult h = cx::homology(c);
    r.euler = h.euler;
    r.h0 = h.h0;
    r.h1 = h.h1;
    r.h2 = h.h2;
    auto [k0, k1] = cx::reduced_k_groups(h);
    r.k0_rank = k0.free_rank;
    r.k1 = k1;

    // independent oracle for the abelianization
    const fp::FpGroup whole = fp::presentation_group(p);
    const fp::CosetTable table =
        fp::coset_enumeration(whole, fp::type_preserving_subgroup_gens(p));
    r.gamma_ab = fp::abelianization(fp::reidemeister_schreier(whole, table));

    std::vector<chambers::Word> words = galleries;
    if (words.empty()) words = chambers::default_gallery_words(p.q());
    for (const auto& w : words) {
        chambers::GalleryCountMatrix g = chambers::gallery_matrix(p, w);
        GalleryCheck check;
        check.word = w;
        mpz_class n = 1;
        for (std::size_t i = 0; i < w.size(); ++i) n *= p.q();
        check.n_value = n;
        check.row_sums_ok = check.col_sums_ok = true;
        const std::size_t dim = g.m.rows();
        for (std::size_t i = 0; i < dim; ++i) {
            mpz_class row = 0, col = 0;
            for (std::size_t j = 0; j < dim; ++j) {
                row += g.m.at(i, j);
                col += g.m.at(j, i);
            }
            if (row != n) check.row_sums_ok = false;
            if (col != n) check.col_sums_ok = false;
        }
        r.gallery_checks.push_back(std::move(check));
    }

    chambers::CoinvariantModel model = chambers::coinvariant_model(p, words);
    r.coinvariant_model = model.group;
    r.ord_one = model.ord_one;

    const auto d = coxeter::CoxeterDiagram::split(coxeter::DiagramKind::A2affine, p.q());
    bounds::OrderCertificate cert = bounds::bounds_report(d, 1);
    r.refined_annihilator = cert.gcd_annihilator;
    r.bound_thm2 = cert.bound_thm2;
    r.bound_thm3 = cert.bound_thm3;
    r.exceptional = cert.exceptional;

    if (r.ord_one) {
        r.ord_multiple_of_q_minus_1 = (*r.ord_one % (p.q() - 1) == 0);
        r.ord_divides_annihilator = (cert.gcd_annihilator % *r.ord_one == 0);
    }
    return r;
}

json to_json(const InvariantReport& r) {
    json checks = json::array();
    for (const auto& c : r.gallery_checks)
        checks.push_back(json{{"word", word_to_string(c.word)},
                              {"n_value", mpz_to_json(c.n_value)},
                              {"row_sums_ok", c.row_sums_ok},
                              {"col_sums_ok", c.col_sums_ok}});
    json j{
        {"schema_version", r.schema_version},
        {"fixture", r.fixture},
        {"q", r.q},
        {"cells", json{{"vertices", r.vertices}, {"edges", r.edges}, {"faces", r.faces}}},
        {"euler", r.euler},
        {"h0", group_to_json(r.h0)},
        {"h1", group_to_json(r.h1)},
        {"h2", group_to_json(r.h2)},
        {"gamma_ab", group_to_json(r.gamma_ab)},
        {"k0_rank", r.k0_rank},
        {"k1", group_to_json(r.k1)},
        {"gallery_checks", checks},
        {"coinvariant_model", group_to_json(r.coinvariant_model)},
        {"ord_one", order_to_json(r.ord_one)},
        {"ord_multiple_of_q_minus_1", r.ord_multiple_of_q_minus_1},
        {"ord_divides_annihilator", r.ord_divides_annihilator},
        {"refined_annihilator", mpz_to_json(r.refined_annihilator)},
        {"bound_thm2", mpz_to_json(r.bound_thm2)},
        {"exceptional", r.exceptional},
    };
    j["bound_thm3"] = r.bound_thm3 ? mpz_to_json(*r.bound_thm3) : json(nullptr);
    return j;
}

std::string to_text(const InvariantReport& r) {
    std::ostringstream os;
    os << "fixture: " << r.fixture << " (q = " << r.q << ")\n"
       << "cells: " << r.vertices << " vertices, " << r.edges << " edges, "
       << r.faces << " faces\n"
       << "euler characteristic: " << r.euler << "\n"
       << "H0 = " << r.h0.to_string() << "\n"
       << "H1 = " << r.h1.to_string() << "\n"
       << "H2 = " << r.h2.to_string() << "\n"
       << "Gamma_ab (coset rewriting oracle) = " << r.gamma_ab.to_string() << "\n"
       << "K0 rank = " << r.k0_rank << ", K1 = " << r.k1.to_string() << "\n";
    for (const auto& c : r.gallery_checks)
        os << "gallery (" << word_to_string(c.word) << "): N = " << c.n_value
           << ", row sums " << (c.row_sums_ok ? "ok" : "FAIL") << ", column sums "
           << (c.col_sums_ok ? "ok" : "FAIL") << "\n";
    os << "coinvariant model = " << r.coinvariant_model.to_string() << "\n"
       << "ord([1]) in model = ";
    if (r.ord_one)
        os << *r.ord_one;
    else
        os << "infinite";
    os << " (multiple of q-1: " << (r.ord_multiple_of_q_minus_1 ? "yes" : "no")
       << "; divides annihilator: " << (r.ord_divides_annihilator ? "yes" : "no")
       << ")\n"
       << "refined annihilator = " << r.refined_annihilator << "\n"
       << "bound (order < q_s * covol) = " << r.bound_thm2 << "\n";
    if (r.bound_thm3)
        os << "bound (order < covol - n_s) = " << *r.bound_thm3 << "\n";
    else
        os << "covol bound: not applicable (exceptional diagram)\n";
    return os.str();
}

namespace {

void compare(const json& expected, const json& actual, const std::string& path,
             std::vector<std::string>& failures) {
    if (expected.is_object()) {
        if (!actual.is_object()) {
            failures.push_back(path + ": expected object, got " + actual.dump());
            return;
        }
        for (auto it = expected.begin(); it != expected.end(); ++it) {
            if (!it.key().empty() && it.key()[0] == '_') continue; // commentary
            const std::string sub = path.empty() ? it.key() : path + "." + it.key();
            if (!actual.contains(it.key())) {
                failures.push_back(sub + ": missing from report");
                continue;
            }
            compare(it.value(), actual.at(it.key()), sub, failures);
        }
        return;
    }
    if (expected != actual)
        failures.push_back(path + ": expected " + expected.dump() + ", got " +
                           actual.dump());
}

} // namespace

VerifyResult verify(const InvariantReport& r, const json& expected) {
    if (!expected.is_object())
        throw std::invalid_argument("expectation document must be a JSON object");
    if (expected.contains("schema_version") &&
        expected.at("schema_version") != json(kSchemaVersion))
        throw std::invalid_argument("unknown expectation schema_version");
    VerifyResult out;
    compare(expected, to_json(r), "", out.failures);
    return out;
}

} // namespace coinv::report
