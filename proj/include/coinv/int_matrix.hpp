#ifndef COINV_INT_MATRIX_HPP
#define COINV_INT_MATRIX_HPP

#include <cstddef>
#include <gmpxx.h>
#include <stdexcept>
#include <vector>

namespace coinv::exact {

/// Dense integer matrix over arbitrary-precision integers, row-major.
/// Convention used throughout the project: rows are relations, columns
/// are generators.
class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    mpz_class& at(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }
    const mpz_class& at(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    bool operator==(const IntMatrix& o) const = default;

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_)
            throw std::invalid_argument("IntMatrix: dimension mismatch in product");
        IntMatrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const mpz_class& a = at(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    p.at(i, j) += a * o.at(k, j);
            }
        return p;
    }

    void swap_rows(std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap(at(i, j), at(k, j));
    }
    void swap_cols(std::size_t j, std::size_t l) {
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap(at(i, j), at(i, l));
    }

    /// row i -= q * row k
    void add_row_multiple(std::size_t i, std::size_t k, const mpz_class& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) -= q * at(k, j);
    }
    /// col j -= q * col l
    void add_col_multiple(std::size_t j, std::size_t l, const mpz_class& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < rows_; ++i) at(i, j) -= q * at(i, l);
    }

    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
    }
    void negate_col(std::size_t j) {
        for (std::size_t i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
    }

    /// Exact determinant (Bareiss fraction-free elimination). Square only.
    mpz_class det() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> entries_;
};

} // namespace coinv::exact

#endif
