#pragma once

#include "qalg/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qalg {

using Vec = std::vector<Rational>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);
bool vec_is_zero(const Vec& v);
std::size_t vec_support(const Vec& v);  // number of nonzero coordinates

// Dense matrix over the rationals, row-major.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    void set_row(std::size_t i, const Vec& v);

    QMatrix transpose() const;

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend Vec operator*(const QMatrix& a, const Vec& x);
    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

struct RrefResult {
    QMatrix reduced;                  // same shape as the input
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of each of the first `rank` rows
};

// Reduced row echelon form by exact Gauss-Jordan elimination. The result is
// the canonical representative of the row space: pivots are 1, pivot columns
// are otherwise zero, zero rows sink to the bottom.
RrefResult rref(const QMatrix& m);

class Subspace;

// Null space of m, as a canonical subspace of dimension cols - rank.
Subspace kernel(const QMatrix& m);

// One exact solution of m x = rhs, or nullopt if the system is inconsistent.
// Deterministic: every free variable is set to 0.
std::optional<Vec> solve_linear(const QMatrix& m, const Vec& rhs);

QMatrix invert_matrix(const QMatrix& m);  // throws std::domain_error if singular

}  // namespace qalg
