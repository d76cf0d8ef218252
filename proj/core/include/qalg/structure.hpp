#pragma once

#include "qalg/algebra.hpp"
#include "qalg/poly.hpp"
#include "qalg/subspace.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qalg {

// Thrown when iterated subspace powers stabilize at a nonzero subspace; the
// stabilized subspace is the evidence that no power ever vanishes.
class NotNilpotentError : public std::runtime_error {
public:
    NotNilpotentError(std::string message, Subspace stabilized)
        : std::runtime_error(std::move(message)), stabilized_(std::move(stabilized)) {}
    const Subspace& stabilized() const { return stabilized_; }

private:
    Subspace stabilized_;
};

// Least k >= 1 with S^k = 0, where S^1 = s and S^{m+1} = span{u*v : u in a
// basis of S^m, v in a basis of s}. The zero subspace has index 1. Intended
// for two-sided ideals (whose powers shrink); throws NotNilpotentError when
// the powers stop shrinking or fail to reach zero within dim(A) + 1 steps.
std::size_t nilpotency_index(const AlgebraPtr& a, const Subspace& s);

struct RadicalReport {
    Subspace radical;       // canonical basis
    std::size_t nilpotency; // least k with radical^k = 0
    QMatrix gram;           // gram[i][j] = trace of left multiplication by e_i * e_j
};

// Radical as the kernel of the trace form gram[i][j] = tr L_{e_i e_j}.
// Verified before returning: the kernel is a two-sided ideal, it is
// nilpotent, and the same trace form on the quotient has zero kernel.
// Verification failures throw std::logic_error (they indicate a presentation
// that is not an associative unital algebra).
RadicalReport radical(const AlgebraPtr& a);

struct JordanChevalley {
    Element semisimple;     // s, a polynomial in the input
    Element nilpotent;      // input - s
    Poly minimal;           // minimal polynomial of the input
    Poly separable_part;    // squarefree part of `minimal`; annihilates s
    std::size_t iterations; // Newton steps used to reach separable_part(s) = 0
};

// Splits b = s + n with separable_part(s) = 0, n nilpotent, sn = ns; s and n
// are polynomials in b, computed by the same Newton iteration that powers
// hensel_lift. All three postconditions are re-verified (std::logic_error on
// failure).
JordanChevalley jordan_chevalley(const Element& b);

}  // namespace qalg
