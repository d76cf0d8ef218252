#include "qalg/matrix.hpp"

#include "qalg/subspace.hpp"

#include <sstream>
#include <stdexcept>

namespace qalg {

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Rational& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

std::size_t vec_support(const Vec& v) {
    std::size_t n = 0;
    for (const auto& x : v) {
        if (!x.is_zero()) ++n;
    }
    return n;
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

Vec QMatrix::row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

void QMatrix::set_row(std::size_t i, const Vec& v) {
    if (v.size() != cols_) throw std::invalid_argument("QMatrix::set_row: size mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix: product shape mismatch");
    QMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                c.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return c;
}

Vec operator*(const QMatrix& a, const Vec& x) {
    if (a.cols_ != x.size()) throw std::invalid_argument("QMatrix: apply shape mismatch");
    Vec y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) {
            if (a.at(i, j).is_zero() || x[j].is_zero()) continue;
            y[i] += a.at(i, j) * x[j];
        }
    }
    return y;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("QMatrix: sum shape mismatch");
    QMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("QMatrix: difference shape mismatch");
    QMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
}

std::string QMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j);
        }
        os << "]";
        os << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) os << "[]";
    return os.str();
}

RrefResult rref(const QMatrix& m) {
    RrefResult res;
    res.reduced = m;
    QMatrix& a = res.reduced;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!a.at(i, c).is_zero()) { piv = i; break; }
        }
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
        }
        Rational inv = a.at(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j) a.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            Rational f = a.at(i, c);
            for (std::size_t j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

Subspace kernel(const QMatrix& m) {
    RrefResult rr = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        Vec v(cols);
        v[j] = Rational(1);
        for (std::size_t i = 0; i < rr.rank; ++i) {
            v[rr.pivots[i]] = -rr.reduced.at(i, j);
        }
        basis.push_back(std::move(v));
    }
    return Subspace::span(cols, basis);
}

std::optional<Vec> solve_linear(const QMatrix& m, const Vec& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve_linear: rhs size mismatch");
    const std::size_t cols = m.cols();
    QMatrix aug(m.rows(), cols + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, cols) = rhs[i];
    }
    RrefResult rr = rref(aug);
    for (std::size_t i = 0; i < rr.rank; ++i) {
        if (rr.pivots[i] == cols) return std::nullopt;  // row [0 ... 0 | 1]
    }
    Vec x(cols);
    for (std::size_t i = 0; i < rr.rank; ++i) {
        x[rr.pivots[i]] = rr.reduced.at(i, cols);
    }
    return x;
}

QMatrix invert_matrix(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("invert_matrix: not square");
    const std::size_t n = m.rows();
    QMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rational(1);
    }
    RrefResult rr = rref(aug);
    if (rr.rank < n || rr.pivots[n - 1] != n - 1) {
        throw std::domain_error("invert_matrix: singular matrix");
    }
    QMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.reduced.at(i, n + j);
    return inv;
}

}  // namespace qalg
