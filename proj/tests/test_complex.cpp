#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "coinv/quotient_complex.hpp"

using namespace coinv::cx;
using coinv::exact::AbelianGroup;

namespace {

coinv::tri::TrianglePresentation fixture(const char* name) {
    return coinv::tri::load_presentation_file(std::string(FIXTURE_DIR) + "/" + name);
}

} // namespace

TEST_CASE("cell counts and euler characteristic") {
    auto c4 = build_complex(fixture("regular-q4.json"));
    CHECK(c4.vertices == 3);
    CHECK(c4.edges == 63);
    CHECK(c4.faces == 105);
    CHECK(c4.euler() == 45);

    auto c3 = build_complex(fixture("group-1.1-q3.json"));
    CHECK(c3.vertices == 3);
    CHECK(c3.edges == 39);
    CHECK(c3.faces == 52);
    CHECK(c3.euler() == 16);
}

TEST_CASE("closed-form euler characteristic") {
    CHECK(euler_characteristic_formula(4, 1) == 45);  // (q-1)(q^2-1)
    CHECK(euler_characteristic_formula(3, 1) == 16);
    CHECK(euler_characteristic_formula(2, 3) == 9);
    CHECK(euler_characteristic_formula(2, 1, 3) == 7);  // (q-1)(q^3-1)
    CHECK_THROWS_AS(euler_characteristic_formula(2, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(euler_characteristic_formula(1, 1), std::invalid_argument);
}

TEST_CASE("boundary composition vanishes") {
    // build_complex throws if d1 o d2 != 0; also check explicitly
    auto c = build_complex(fixture("group-1.1-q3.json"));
    auto z = c.boundary_2 * c.boundary_1;
    for (std::size_t i = 0; i < z.rows(); ++i)
        for (std::size_t j = 0; j < z.cols(); ++j) CHECK(z.at(i, j) == 0);
}

TEST_CASE("homology of the q=4 fixture") {
    auto h = homology(build_complex(fixture("regular-q4.json")));
    CHECK(h.h0 == AbelianGroup{1, {}});
    CHECK(h.h1 == AbelianGroup{0, {2, 2, 2, 2, 2, 42}});
    CHECK(h.h2 == AbelianGroup{44, {}});
    CHECK(h.euler == 45);

    auto [k0, k1] = reduced_k_groups(h);
    CHECK(k0 == AbelianGroup{45, {}});
    CHECK(k1 == h.h1);
}

TEST_CASE("homology of the q=3 fixture") {
    auto h = homology(build_complex(fixture("group-1.1-q3.json")));
    CHECK(h.h0 == AbelianGroup{1, {}});
    CHECK(h.h1 == AbelianGroup{0, {3, 3, 39}});
    CHECK(h.h2 == AbelianGroup{15, {}});
    CHECK(h.euler == 16);

    auto [k0, k1] = reduced_k_groups(h);
    CHECK(k0 == AbelianGroup{16, {}});
    CHECK(k1 == AbelianGroup{0, {3, 3, 39}});
}

TEST_CASE("reduced K-groups reject infinite H1") {
    HomologyResult h;
    h.h1 = AbelianGroup{1, {}};
    CHECK_THROWS_AS(reduced_k_groups(h), std::invalid_argument);
}
