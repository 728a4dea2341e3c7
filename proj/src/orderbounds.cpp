#include "coinv/orderbounds.hpp"

#include <cstdlib>
#include <stdexcept>

#include "coinv/snf.hpp"

namespace coinv::bounds {

mpz_class annihilator_from_identity(const CoxeterDiagram& d, const GalleryIdentity& id) {
    if (!d.is_special(id.start_type) || !d.is_special(id.end_type))
        throw std::invalid_argument("gallery identity endpoints must be special types");
    const mpz_class n = id.count.value(d);
    mpz_class a;
    if (id.start_type == id.end_type)
        a = id.n_start * (n - 1);
    else
        a = abs(id.n_end * n - id.n_start);
    if (a == 0)
        throw std::invalid_argument("degenerate gallery identity (annihilator zero)");
    return a;
}

mpz_class refined_annihilator(const CoxeterDiagram& d,
                              const std::vector<GalleryIdentity>& identities) {
    if (identities.empty())
        throw std::invalid_argument("refined_annihilator: empty identity list");
    const mpz_class n_s = identities.front().n_start;
    exact::IntMatrix exps(identities.size(), 3);
    for (std::size_t r = 0; r < identities.size(); ++r) {
        const auto& id = identities[r];
        if (id.start_type != id.end_type)
            throw std::invalid_argument("refined_annihilator: identities must be loops");
        if (id.n_start != n_s)
            throw std::invalid_argument("refined_annihilator: mismatched n_s");
        for (int t = 0; t < 3; ++t) exps.at(r, t) = id.count.exponents[t];
    }

    exact::IntMatrix basis = exact::hermite_normal_form(exps);
    mpz_class g = 0;
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        // q^u = q^w modulo any common annihilator of the original loops,
        // so |value(u) - value(w)| annihilates as well.
        mpz_class pos = 1, neg = 1;
        for (int t = 0; t < 3; ++t) {
            const mpz_class& e = basis.at(r, t);
            mpz_class base = d.q[t];
            mpz_class ae = abs(e);
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), ae.get_ui());
            (e > 0 ? pos : neg) *= pw;
        }
        mpz_class v = abs(pos - neg);
        mpz_class ng;
        mpz_gcd(ng.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        g = ng;
    }
    if (g == 0)
        throw std::invalid_argument("refined_annihilator: no nontrivial relation");
    return n_s * g;
}

std::vector<GalleryIdentity> standard_identities(const CoxeterDiagram& d,
                                                 const mpz_class& n_s,
                                                 bool equal_hyperspecial) {
    using coxeter::StandardConfig;
    std::vector<GalleryIdentity> ids;
    for (auto cfg : {StandardConfig::CtoCprime, StandardConfig::CtoCdoublePrime}) {
        GalleryIdentity id;
        id.count = coxeter::gallery_count(d, coxeter::minimal_gallery_type(d, cfg));
        id.n_start = id.n_end = n_s;
        ids.push_back(std::move(id));
    }
    if (equal_hyperspecial && d.special_types.size() >= 2) {
        // with n_t = n_s the two-special identity collapses to loop form
        GalleryIdentity id;
        id.count = coxeter::gallery_count(
            d, coxeter::minimal_gallery_type(d, StandardConfig::CtoCprimeTwoSpecial));
        id.n_start = id.n_end = n_s;
        ids.push_back(std::move(id));
    }
    return ids;
}

OrderCertificate bounds_report(const CoxeterDiagram& d, const mpz_class& n_s,
                               bool equal_hyperspecial) {
    if (n_s < 1) throw std::invalid_argument("bounds_report: n_s must be positive");
    const auto ids = standard_identities(d, n_s, equal_hyperspecial);

    OrderCertificate cert;
    for (const auto& id : ids)
        cert.annihilators.push_back(annihilator_from_identity(d, id));
    cert.gcd_annihilator = refined_annihilator(d, ids);

    const mpz_class covol = coxeter::covolume(n_s.get_si(), d);
    cert.bound_thm2 = d.param(TypeLabel::s) * covol;
    cert.exceptional = d.is_exceptional();
    if (d.special_types.size() >= 2) cert.bound_thm3 = covol - n_s;
    return cert;
}

} // namespace coinv::bounds
