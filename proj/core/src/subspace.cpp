#include "qalg/subspace.hpp"

#include <stdexcept>

namespace qalg {

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
    for (const Vec& v : vectors) {
        if (v.size() != ambient_dim) throw std::invalid_argument("Subspace::span: vector size mismatch");
    }
    RrefResult rr = rref(QMatrix::from_rows(vectors, ambient_dim));
    Subspace s(ambient_dim);
    QMatrix basis(rr.rank, ambient_dim);
    for (std::size_t i = 0; i < rr.rank; ++i) basis.set_row(i, rr.reduced.row(i));
    s.basis_ = std::move(basis);
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    s.basis_ = QMatrix::identity(ambient_dim);
    return s;
}

bool Subspace::contains(const Vec& v) const {
    return coordinates_of(v).has_value();
}

std::optional<Vec> Subspace::coordinates_of(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace: vector size mismatch");
    // Reduce v against the RREF basis; the eliminated multiples are the
    // coordinates because each basis row is the only one touching its pivot.
    Vec rem = v;
    Vec coords(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        std::size_t p = 0;
        while (p < ambient_ && basis_.at(i, p).is_zero()) ++p;
        // basis rows are nonzero with unit pivot
        Rational c = rem[p];
        if (c.is_zero()) continue;
        coords[i] = c;
        for (std::size_t j = p; j < ambient_; ++j) {
            if (basis_.at(i, j).is_zero()) continue;
            rem[j] -= c * basis_.at(i, j);
        }
    }
    if (!vec_is_zero(rem)) return std::nullopt;
    return coords;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i) {
        if (!contains(other.basis_vector(i))) return false;
    }
    return true;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    std::vector<Vec> rows;
    rows.reserve(a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis_vector(i));
    for (std::size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis_vector(i));
    return Subspace::span(a.ambient_, rows);
}

}  // namespace qalg
