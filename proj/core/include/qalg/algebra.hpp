#pragma once

#include "qalg/matrix.hpp"
#include "qalg/poly.hpp"
#include "qalg/rational.hpp"
#include "qalg/subspace.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qalg {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

inline constexpr std::size_t kMaxAlgebraDim = 64;

// Finite-dimensional unital associative algebra over the rationals, presented
// by structure constants: basis e_0..e_{n-1}, unit coordinates, and
// mult[i][j][k] = coefficient of e_k in e_i * e_j. Presentations are immutable
// after construction; every operation that consumes one is pure.
class Algebra {
public:
    // Throws std::invalid_argument on inconsistent sizes or dim = 0.
    // Associativity and the unit law are NOT checked here; run validate().
    static AlgebraPtr make(std::string name,
                           std::vector<std::string> basis_names,
                           Vec unit,
                           std::vector<Rational> mult);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return n_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }
    const Vec& unit_coords() const { return unit_; }

    const Rational& structure(std::size_t i, std::size_t j, std::size_t k) const {
        return mult_[(i * n_ + j) * n_ + k];
    }
    // Coordinates of e_i * e_j.
    Vec basis_product(std::size_t i, std::size_t j) const;

    // Raw n^3 structure-constant vector, [i][j][k] row-major.
    const std::vector<Rational>& structure_constants() const { return mult_; }

    // Same dimension, unit and structure constants (names ignored).
    bool same_structure(const Algebra& other) const;

private:
    Algebra() = default;
    std::string name_;
    std::size_t n_ = 0;
    std::vector<std::string> basis_names_;
    Vec unit_;
    std::vector<Rational> mult_;
};

struct ValidationReport {
    enum class Failure { None, Shape, Unit, Associativity };
    bool ok = true;
    Failure kind = Failure::None;
    // Witness data: the associativity triple (i, j, k) with both products, or
    // the basis index i at which the unit law breaks.
    std::size_t i = 0, j = 0, k = 0;
    Vec lhs, rhs;
    std::string message;
};

// Exhaustive check of the unit law (n pairs) and associativity (n^3 triples,
// each costing O(n^2) arithmetic). Reports the first failure instead of
// throwing.
ValidationReport validate(const Algebra& a);

// An element is a coordinate vector tied to its parent presentation. Mixing
// elements of different parents throws std::invalid_argument.
struct Element {
    AlgebraPtr algebra;
    Vec coords;

    bool is_zero() const { return vec_is_zero(coords); }
};

Element make_element(AlgebraPtr a, Vec coords);
Element zero_element(const AlgebraPtr& a);
Element unit_element(const AlgebraPtr& a);
Element basis_element(const AlgebraPtr& a, std::size_t i);
Element scalar_element(const AlgebraPtr& a, const Rational& c);

bool operator==(const Element& x, const Element& y);
bool operator!=(const Element& x, const Element& y);
Element operator+(const Element& x, const Element& y);
Element operator-(const Element& x, const Element& y);
Element operator-(const Element& x);
Element operator*(const Element& x, const Element& y);
Element operator*(const Rational& c, const Element& x);

// x*y + y*x.
Element anticommutator(const Element& x, const Element& y);

// Non-negative power by repeated squaring; x^0 = 1.
Element pow_element(const Element& x, std::size_t k);

// Matrices of left and right multiplication by a on the basis, i.e. the two
// regular representations. Column i of left_mult_matrix(a) is a * e_i.
QMatrix left_mult_matrix(const Element& a);
QMatrix right_mult_matrix(const Element& a);

// Two-sided inverse, or nullopt when a is not invertible. Found by solving
// the left-multiplication system; both a*x = 1 and x*a = 1 are verified.
std::optional<Element> invert(const Element& a);

// Monic generator of the ideal of polynomials vanishing at a: first linear
// dependence among 1, a, a^2, ... The result is verified by evaluation.
Poly minimal_poly_of_element(const Element& a);

// f(a) by Horner's rule inside the algebra.
Element eval_poly(const Poly& f, const Element& a);

// Smallest left ideal containing the generators: span of all x * g.
Subspace left_ideal_span(const AlgebraPtr& a, const std::vector<Element>& gens);
// Smallest two-sided ideal containing the generators: left/right closure
// iterated to a fixed point.
Subspace two_sided_ideal_span(const AlgebraPtr& a, const std::vector<Element>& gens);

bool is_left_ideal(const AlgebraPtr& a, const Subspace& s);
bool is_two_sided_ideal(const AlgebraPtr& a, const Subspace& s);

struct QuotientResult {
    AlgebraPtr algebra;
    // (dim A - dim I) x dim A matrix of the projection onto the coordinate
    // complement of I; applies to coordinate vectors of A.
    QMatrix projection;
};

// Quotient by a proper two-sided ideal. The projection is verified to be a
// unital homomorphism on all basis pairs; failures throw std::logic_error.
QuotientResult quotient(const AlgebraPtr& a, const Subspace& ideal);

Element project_element(const QuotientResult& q, const Element& x);

AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b);
AlgebraPtr tensor_product(const AlgebraPtr& a, const AlgebraPtr& b);
// n x n matrices with entries in `inner`.
AlgebraPtr matrix_algebra(const AlgebraPtr& inner, std::size_t n);
// Q[eps]/(eps^k), the rank-k truncated polynomial algebra.
AlgebraPtr truncated_polynomial_algebra(std::size_t k);

// Named constructions. catalog() accepts a spec string:
//   "Q" | "Cneg(q)" | "Quat(a,b)" | "Mat(<spec>,n)" | "Tri(n)" | "ExampleJ"
// with exact rational parameters, e.g. "Mat(Cneg(-1),2)".
AlgebraPtr catalog(const std::string& spec);
AlgebraPtr catalog_Q();
// Basis {1, u} with u^2 = q (q nonzero; q = -d gives the quadratic field
// Q[X]/(X^2 + d) presentation used by the classifiers).
AlgebraPtr catalog_Cneg(const Rational& q);
// Basis {1, i, j, k}: i^2 = alpha, j^2 = beta, ij = -ji = k (both nonzero).
AlgebraPtr catalog_Quat(const Rational& alpha, const Rational& beta);
// Upper triangular n x n matrices, basis e_pq for p <= q.
AlgebraPtr catalog_Tri(std::size_t n);
AlgebraPtr catalog_Mat(const AlgebraPtr& inner, std::size_t n);
// The 8-dimensional algebra with basis {1, x, y, z, t, tx, ty, tz},
// x^2 = y^2 = -1, z = xy, t = xy + yx central with t^2 = 0. Its radical is
// span{t, tx, ty, tz} and the quotient by it is Quat(-1,-1).
AlgebraPtr catalog_ExampleJ();

struct ScrambleResult {
    AlgebraPtr algebra;
    // Rows of `change` are the new basis vectors in old coordinates. The
    // unit's coordinate vector is preserved.
    QMatrix change;
};

// Deterministic seeded change of basis by a random invertible integer matrix
// fixing the unit coordinates; redraws until invertible.
ScrambleResult scramble_basis(const AlgebraPtr& a, std::uint64_t seed);

// Rewrites the presentation in the basis whose rows are `change` (must be
// invertible). scramble_basis(a, s) followed by apply_change_of_basis with
// the inverse matrix restores the original structure constants.
AlgebraPtr apply_change_of_basis(const AlgebraPtr& a, const QMatrix& change,
                                 const std::string& new_name);

}  // namespace qalg
