#ifndef COINV_REPORT_HPP
#define COINV_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coinv/abelian.hpp"
#include "coinv/chambers.hpp"
#include "coinv/orderbounds.hpp"
#include "coinv/presentation.hpp"
#include "coinv/quotient_complex.hpp"

namespace coinv::report {

using exact::AbelianGroup;

inline constexpr int kSchemaVersion = 1;

struct GalleryCheck {
    chambers::Word word;
    mpz_class n_value;   // q^|word|
    bool row_sums_ok = false;
    bool col_sums_ok = false;
};

/// One self-contained record of every invariant the pipeline computes for a
/// presentation, plus the internal consistency flags.
struct InvariantReport {
    int schema_version = kSchemaVersion;
    std::string fixture;
    long q = 0;

    std::size_t vertices = 0, edges = 0, faces = 0;
    long euler = 0;
    AbelianGroup h0, h1, h2;
    AbelianGroup gamma_ab; // independent oracle (coset rewriting)
    std::size_t k0_rank = 0;
    AbelianGroup k1;

    std::vector<GalleryCheck> gallery_checks;

    AbelianGroup coinvariant_model;
    std::optional<mpz_class> ord_one; // nullopt = infinite
    bool ord_multiple_of_q_minus_1 = false;
    bool ord_divides_annihilator = false;

    mpz_class refined_annihilator;
    mpz_class bound_thm2;
    std::optional<mpz_class> bound_thm3;
    bool exceptional = false;
};

/// Full pipeline: complex homology, subgroup-rewriting oracle, gallery
/// matrices, coinvariant model, order certificate. Empty gallery list means
/// the default word set.
InvariantReport analyze(const tri::TrianglePresentation& p,
                        const std::vector<chambers::Word>& galleries = {});

nlohmann::json to_json(const InvariantReport& r);
std::string to_text(const InvariantReport& r);

struct VerifyResult {
    std::vector<std::string> failures; // "path: expected X, got Y"
    bool ok() const { return failures.empty(); }
};

/// Field-by-field comparison of the report against an expectation document
/// (a subset of the report schema; nested keys are required to match
/// exactly). Throws std::invalid_argument on an unknown schema_version.
VerifyResult verify(const InvariantReport& r, const nlohmann::json& expected);

} // namespace coinv::report

#endif
