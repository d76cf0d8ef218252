#pragma once

#include "qalg/matrix.hpp"

#include <vector>

namespace qalg {

// Subspace of Q^n represented by the unique RREF basis with zero rows
// stripped. Two Subspace values are equal as objects iff they are equal as
// subspaces, so byte-level comparison of the basis is a sound equality test.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim)
        : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    // Canonicalizes an arbitrary spanning set.
    static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const QMatrix& basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    // Coordinates of v in the RREF basis, or nullopt if v is outside.
    std::optional<Vec> coordinates_of(const Vec& v) const;

    friend Subspace operator+(const Subspace& a, const Subspace& b);
    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t ambient_;
    QMatrix basis_;  // dim x ambient, RREF, no zero rows
};

}  // namespace qalg
