#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <vector>

#include "coinv/int_matrix.hpp"
#include "coinv/snf.hpp"

using coinv::exact::AbelianGroup;
using coinv::exact::IntMatrix;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

// Test-local lattice membership: naive integer row reduction, written
// independently of the library's HNF so it can serve as an oracle.
struct RowLattice {
    std::map<std::size_t, std::vector<mpz_class>> rows; // pivot column -> row

    static std::size_t pivot(const std::vector<mpz_class>& v) {
        std::size_t p = 0;
        while (p < v.size() && v[p] == 0) ++p;
        return p;
    }

    void insert(std::vector<mpz_class> v) {
        for (;;) {
            std::size_t p = pivot(v);
            if (p == v.size()) return;
            if (v[p] < 0)
                for (auto& x : v) x = -x;
            auto it = rows.find(p);
            if (it == rows.end()) {
                rows.emplace(p, std::move(v));
                return;
            }
            // gcd-combine v with the existing pivot row
            std::vector<mpz_class>& r = it->second;
            mpz_class g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                       r[p].get_mpz_t(), v[p].get_mpz_t());
            std::vector<mpz_class> comb(v.size()), rest(v.size());
            mpz_class a = r[p] / g, b = v[p] / g;
            for (std::size_t j = 0; j < v.size(); ++j) {
                comb[j] = s * r[j] + t * v[j]; // pivot g at p
                rest[j] = a * v[j] - b * r[j]; // zero at p
            }
            // [[s,t],[-b,a]] is unimodular, so {comb, rest} spans the same
            // lattice as {r, v}
            r = std::move(comb);
            v = std::move(rest);
        }
    }

    bool contains(std::vector<mpz_class> v) const {
        for (;;) {
            std::size_t p = pivot(v);
            if (p == v.size()) return true;
            auto it = rows.find(p);
            if (it == rows.end() || v[p] % it->second[p] != 0) return false;
            mpz_class f = v[p] / it->second[p];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * it->second[j];
        }
    }

    static RowLattice of(const IntMatrix& m) {
        RowLattice l;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            std::vector<mpz_class> v(m.cols());
            for (std::size_t j = 0; j < m.cols(); ++j) v[j] = m.at(i, j);
            l.insert(std::move(v));
        }
        return l;
    }
};

} // namespace

TEST_CASE("smith normal form of diag(2,3) is (1,6)") {
    auto s = coinv::exact::smith_normal_form(from_rows({{2, 0}, {0, 3}}));
    REQUIRE(s.diagonal.size() == 2);
    CHECK(s.diagonal[0] == 1);
    CHECK(s.diagonal[1] == 6);
}

TEST_CASE("hand-eliminated 3x3 example") {
    // [[2,4,4],[-6,6,12],[10,4,16]] has invariant factors 2, 2, 156
    // (worked by hand: det = -624, gcd of entries 2, gcd of 2x2 minors 4)
    auto s = coinv::exact::smith_normal_form(
        from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}));
    REQUIRE(s.diagonal.size() == 3);
    CHECK(s.diagonal[0] == 2);
    CHECK(s.diagonal[1] == 2);
    CHECK(s.diagonal[2] == 156);
}

TEST_CASE("SNF recomposition, unimodularity, divisibility: 500 random matrices") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t r = dim(rng), c = dim(rng);
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a.at(i, j) = entry(rng);

        auto s = coinv::exact::smith_normal_form(a);
        REQUIRE(s.diagonal.size() == std::min(r, c));

        mpz_class dl = s.left.det(), dr = s.right.det();
        CHECK((dl == 1 || dl == -1));
        CHECK((dr == 1 || dr == -1));

        IntMatrix d = s.left * a * s.right;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                if (i == j && i < s.diagonal.size())
                    CHECK(d.at(i, j) == s.diagonal[i]);
                else
                    CHECK(d.at(i, j) == 0);
            }

        for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
            CHECK(s.diagonal[i] >= 0);
            if (s.diagonal[i + 1] != 0) {
                REQUIRE(s.diagonal[i] != 0);
                CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
            }
        }
    }
}

TEST_CASE("SNF diagonal is invariant under row/column permutation and zero rows") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix a(4, 3);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 3; ++j) a.at(i, j) = entry(rng);
        auto base = coinv::exact::smith_normal_form(a).diagonal;

        IntMatrix b = a;
        b.swap_rows(0, 3);
        b.swap_cols(1, 2);
        CHECK(coinv::exact::smith_normal_form(b).diagonal == base);

        IntMatrix padded(6, 3); // two extra zero rows
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 3; ++j) padded.at(i, j) = a.at(i, j);
        auto pd = coinv::exact::smith_normal_form(padded).diagonal;
        for (std::size_t i = 0; i < base.size(); ++i) CHECK(pd[i] == base[i]);
    }
}

TEST_CASE("cokernel matches brute-force quotient enumeration") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> entry(-4, 4);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix a(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a.at(i, j) = entry(rng);
        mpz_class det = a.det();
        if (det == 0 || abs(det) > 30) continue;
        ++checked;

        AbelianGroup g = coinv::exact::cokernel(a);
        CHECK(g.free_rank == 0);
        CHECK(g.torsion_order() == abs(det));

        // count lattice points in the box [0,|det|)^3: the box tiles Z^3 by
        // |det|^2-translates iff the quotient has order |det|
        RowLattice lat = RowLattice::of(a);
        long count = 0;
        const mpz_class adet = abs(det);
        const long bound = adet.get_si();
        for (long x = 0; x < bound; ++x)
            for (long y = 0; y < bound; ++y)
                for (long z = 0; z < bound; ++z)
                    if (lat.contains({x, y, z})) ++count;
        CHECK(mpz_class(bound) * bound * bound == count * abs(det));
    }
    CHECK(checked >= 10); // the filter must leave a real sample
}

TEST_CASE("order_in_cokernel: brute force and divisibility") {
    auto a = from_rows({{4, 0}, {0, 6}});
    auto ord = coinv::exact::order_in_cokernel(a, {mpz_class(1), mpz_class(1)});
    REQUIRE(ord.has_value());
    CHECK(*ord == 12); // lcm(4, 6)

    auto ord2 = coinv::exact::order_in_cokernel(a, {mpz_class(2), mpz_class(3)});
    REQUIRE(ord2.has_value());
    CHECK(*ord2 == 2); // lcm(4/2, 6/3)

    // infinite order: free coordinate
    auto b = from_rows({{2, 0, 0}});
    CHECK(!coinv::exact::order_in_cokernel(b, {mpz_class(0), mpz_class(1), mpz_class(0)})
               .has_value());

    CHECK_THROWS_AS(coinv::exact::order_in_cokernel(a, {mpz_class(1)}),
                    std::invalid_argument);

    // randomized: order computed by the library equals the minimal k with
    // k*v in the row lattice (test-local membership oracle)
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = entry(rng);
        if (m.det() == 0) continue;
        std::vector<mpz_class> v{entry(rng), entry(rng), entry(rng)};
        auto o = coinv::exact::order_in_cokernel(m, v);
        REQUIRE(o.has_value());
        RowLattice lat = RowLattice::of(m);
        for (mpz_class k = 1; k < *o; ++k)
            CHECK(!lat.contains({k * v[0], k * v[1], k * v[2]}));
        CHECK(lat.contains({*o * v[0], *o * v[1], *o * v[2]}));
    }
}

TEST_CASE("order_in_cokernel is monotone under extra relations") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix m(2, 3), m2(3, 3);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 3; ++j) m2.at(i, j) = m.at(i, j) = entry(rng);
        for (std::size_t j = 0; j < 3; ++j) m2.at(2, j) = entry(rng);
        std::vector<mpz_class> v{entry(rng), entry(rng), entry(rng)};
        auto o1 = coinv::exact::order_in_cokernel(m, v);
        auto o2 = coinv::exact::order_in_cokernel(m2, v);
        if (!o2.has_value())
            CHECK(!o1.has_value());
        else if (o1.has_value())
            CHECK(*o1 % *o2 == 0);
    }
}

TEST_CASE("hermite normal form: canonical echelon basis of the row lattice") {
    auto h = coinv::exact::hermite_normal_form(from_rows({{1, 3, 2}, {2, 4, 4}}));
    REQUIRE(h.rows() == 2);
    CHECK(h.at(0, 0) == 1);
    CHECK(h.at(1, 0) == 0);
    CHECK(h.at(1, 1) == 2);
    CHECK(h.at(1, 2) == 0);
    // entries above a pivot reduced into [0, pivot)
    CHECK(h.at(0, 1) >= 0);
    CHECK(h.at(0, 1) < 2);

    std::mt19937 rng(321);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix a(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) a.at(i, j) = entry(rng);
        IntMatrix h2 = coinv::exact::hermite_normal_form(a);

        // same row lattice in both directions
        RowLattice la = RowLattice::of(a), lh = RowLattice::of(h2);
        for (std::size_t i = 0; i < h2.rows(); ++i) {
            std::vector<mpz_class> v(4);
            for (std::size_t j = 0; j < 4; ++j) v[j] = h2.at(i, j);
            CHECK(la.contains(v));
        }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            std::vector<mpz_class> v(4);
            for (std::size_t j = 0; j < 4; ++j) v[j] = a.at(i, j);
            CHECK(lh.contains(v));
        }
    }
}

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> entry(-8, 8);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix a(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a.at(i, j) = entry(rng);
        mpz_class cof = a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1)) -
                        a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0)) +
                        a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
        CHECK(a.det() == cof);
    }
}
