#include "coinv/snf.hpp"

#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coinv::exact {

mpz_class IntMatrix::det() const {
    if (rows_ != cols_)
        throw std::invalid_argument("det: matrix not square");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                a.at(i, j) = q;
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : mpz_class(-a.at(n - 1, n - 1));
}

AbelianGroup AbelianGroup::from_invariant_factors(std::size_t free_rank,
                                                  const std::vector<mpz_class>& diag) {
    AbelianGroup g;
    g.free_rank = free_rank;
    for (const auto& d : diag) {
        mpz_class v = abs(d);
        if (v >= 2) g.torsion.push_back(v);
    }
    // invariant factors arrive chained from the SNF; keep them sorted anyway
    std::sort(g.torsion.begin(), g.torsion.end());
    return g;
}

std::string AbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

namespace {

// Pivot search over the trailing submatrix starting at (t, t): smallest
// nonzero absolute value, topmost then leftmost on ties.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    mpz_class best;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            const mpz_class& e = a.at(i, j);
            if (e == 0) continue;
            mpz_class v = abs(e);
            if (!found || v < best) {
                found = true;
                best = v;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SnfDecomposition smith_normal_form(const IntMatrix& input) {
    if (input.empty())
        throw std::invalid_argument("smith_normal_form: empty matrix");
    const std::size_t r = input.rows(), c = input.cols();
    SnfDecomposition s;
    IntMatrix a = input;
    s.left = IntMatrix::identity(r);
    s.right = IntMatrix::identity(c);
    const std::size_t n = std::min(r, c);

    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pi, pj;
        if (!find_pivot(a, t, pi, pj)) break;
        for (;;) {
            a.swap_rows(t, pi);
            s.left.swap_rows(t, pi);
            a.swap_cols(t, pj);
            s.right.swap_cols(t, pj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (a.at(i, t) == 0) continue;
                mpz_class q = a.at(i, t) / a.at(t, t); // truncated division
                a.add_row_multiple(i, t, q);
                s.left.add_row_multiple(i, t, q);
                if (a.at(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (a.at(t, j) == 0) continue;
                mpz_class q = a.at(t, j) / a.at(t, t);
                a.add_col_multiple(j, t, q);
                s.right.add_col_multiple(j, t, q);
                if (a.at(t, j) != 0) dirty = true;
            }
            if (dirty) {
                [[maybe_unused]] bool ok = find_pivot(a, t, pi, pj);
                assert(ok);
                continue;
            }
            // row and column t are clear; enforce divisibility of the chain
            bool fixed = false;
            for (std::size_t i = t + 1; i < r && !fixed; ++i)
                for (std::size_t j = t + 1; j < c && !fixed; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        a.add_row_multiple(t, i, mpz_class(-1));
                        s.left.add_row_multiple(t, i, mpz_class(-1));
                        fixed = true;
                    }
            if (!fixed) break;
            [[maybe_unused]] bool ok = find_pivot(a, t, pi, pj);
            assert(ok);
        }
        if (a.at(t, t) < 0) {
            a.negate_row(t);
            s.left.negate_row(t);
        }
    }

    s.diagonal.resize(n);
    for (std::size_t t = 0; t < n; ++t) s.diagonal[t] = a.at(t, t);
    return s;
}

AbelianGroup cokernel(const IntMatrix& a) {
    if (a.empty())
        throw std::invalid_argument("cokernel: empty matrix");
    SnfDecomposition s = smith_normal_form(a);
    std::size_t rank = s.rank();
    return AbelianGroup::from_invariant_factors(a.cols() - rank, s.diagonal);
}

std::optional<mpz_class> order_in_cokernel(const IntMatrix& a,
                                           const std::vector<mpz_class>& v) {
    if (v.size() != a.cols())
        throw std::invalid_argument("order_in_cokernel: vector length != cols");
    SnfDecomposition s = smith_normal_form(a);
    // In coordinates y = v * right, the row lattice becomes diag(d_t).
    std::vector<mpz_class> y(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t k = 0; k < a.cols(); ++k)
            y[j] += v[k] * s.right.at(k, j);
    mpz_class order = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        const mpz_class d = j < s.diagonal.size() ? s.diagonal[j] : mpz_class(0);
        if (d == 0) {
            if (y[j] != 0) return std::nullopt; // free component
            continue;
        }
        mpz_class g = gcd(d, y[j]);
        mpz_class o = d / g;
        order = lcm(order, o);
    }
    return order;
}

IntMatrix hermite_normal_form(const IntMatrix& input) {
    if (input.empty())
        throw std::invalid_argument("hermite_normal_form: empty matrix");
    const std::size_t r = input.rows(), c = input.cols();
    IntMatrix a = input;
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < c && row < r; ++col) {
        // gcd out column `col` among rows >= row
        for (;;) {
            std::size_t best = r;
            for (std::size_t i = row; i < r; ++i) {
                if (a.at(i, col) == 0) continue;
                if (best == r || abs(a.at(i, col)) < abs(a.at(best, col))) best = i;
            }
            if (best == r) break;
            a.swap_rows(row, best);
            bool clear = true;
            for (std::size_t i = row + 1; i < r; ++i) {
                if (a.at(i, col) == 0) continue;
                mpz_class q = a.at(i, col) / a.at(row, col);
                a.add_row_multiple(i, row, q);
                if (a.at(i, col) != 0) clear = false;
            }
            if (clear) break;
        }
        if (a.at(row, col) == 0) continue;
        if (a.at(row, col) < 0) a.negate_row(row);
        pivot_col.push_back(col);
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < row; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), a.at(i, col).get_mpz_t(),
                       a.at(row, col).get_mpz_t());
            a.add_row_multiple(i, row, q);
        }
        ++row;
    }
    IntMatrix h(row == 0 ? 0 : row, c);
    for (std::size_t i = 0; i < row; ++i)
        for (std::size_t j = 0; j < c; ++j) h.at(i, j) = a.at(i, j);
    return h;
}

} // namespace coinv::exact
