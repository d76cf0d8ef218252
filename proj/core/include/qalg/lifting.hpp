#pragma once

#include "qalg/algebra.hpp"
#include "qalg/poly.hpp"
#include "qalg/rational.hpp"
#include "qalg/subspace.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qalg {

// f has a repeated factor, so the Newton correction 1 = u f + v f' does not
// exist. Carries gcd(f, f').
class NotSeparableError : public std::runtime_error {
public:
    NotSeparableError(std::string message, Poly gcd)
        : std::runtime_error(std::move(message)), gcd_(std::move(gcd)) {}
    const Poly& common_factor() const { return gcd_; }

private:
    Poly gcd_;
};

// f(b) does not lie in the given ideal, so no lift congruent to b exists.
class ResidueNotInIdealError : public std::runtime_error {
public:
    ResidueNotInIdealError(std::string message, Element residue)
        : std::runtime_error(std::move(message)), residue_(std::move(residue)) {}
    const Element& residue() const { return residue_; }

private:
    Element residue_;
};

// Trace of one Newton run a <- a - v(a) f(a), where 1 = u f + v f'. Each step
// squares the residual's order, so f(a) hits zero exactly after at most
// ceil(log2 nu) steps when f(a_0) lies in an ideal with nu-th power zero.
struct NewtonTrace {
    std::vector<Element> iterates;             // a_0 = b, ..., last has f = 0
    std::vector<std::size_t> residual_support; // nonzero coordinates of f(a_k)
};

// The shared iteration behind hensel_lift, lift_idempotent and
// jordan_chevalley. Throws NotSeparableError if gcd(f, f') is nonconstant and
// std::logic_error if the residual is still nonzero after max_steps.
NewtonTrace newton_polynomial_root(const Element& b, const Poly& f, std::size_t max_steps);

struct LiftResult {
    Element lifted;                          // a with f(a) = 0, a = b mod ideal
    std::size_t iterations;                  // steps taken (0 when f(b) = 0)
    std::vector<std::size_t> residual_path;  // support sizes of f(a_k), ending in 0
    std::vector<Element> iterates;           // a_0 = b through a_iterations = lifted
    std::size_t nilpotency;                  // nu of the ideal
};

// Lifts b to an exact root of f along a nilpotent two-sided ideal containing
// f(b). Checks, in order: the subspace is a two-sided ideal
// (std::invalid_argument), it is nilpotent (NotNilpotentError), f is
// separable (NotSeparableError), f(b) lies in it (ResidueNotInIdealError).
// Postconditions f(a) = 0, a - b in the ideal, ab = ba are re-verified.
LiftResult hensel_lift(const AlgebraPtr& a, const Subspace& ideal, const Element& b,
                       const Poly& f);

// hensel_lift with f = X^2 - X; the Newton step is c <- 3c^2 - 2c^3.
LiftResult lift_idempotent(const AlgebraPtr& a, const Subspace& ideal, const Element& b);

// Given b with b^m = beta mod ideal (beta nonzero), returns a with a^m
// exactly beta and a = b mod ideal, via the binomial series of
// (1 + w)^{-1/m} truncated at the ideal's nilpotency degree. Errors mirror
// hensel_lift's precondition checks.
Element lift_mth_root(const AlgebraPtr& a, const Subspace& ideal, const Element& b,
                      std::size_t m, const Rational& beta);

// Certificate that a root with an inseparable minimal equation cannot be
// corrected along a square-zero ideal: a concrete algebra, ideal, element and
// polynomial with f(b) a fixed nonzero ideal element unchanged by every
// perturbation of b inside the ideal.
struct NoLiftWitness {
    AlgebraPtr algebra;
    Subspace ideal;
    Element element;   // b
    Poly polynomial;   // f
    Element residue;   // f(b): nonzero, in the ideal
    std::string note;

    // Recomputes f(b), its membership and nonvanishing, and f(b + y) = f(b)
    // for every basis vector y of the ideal.
    bool verify() const;
};

// Builds the witness for a rational root beta1 of f of multiplicity k >= 2,
// inside upper triangular (k+1) x (k+1) matrices with the ideal spanned by
// the top-right matrix unit. Throws std::invalid_argument when f is separable
// or the multiplicity of beta1 is below 2.
NoLiftWitness inseparable_witness(const Poly& f, const Rational& beta1);

// Decision for correcting a pair x, y (with x^2 + 1, y^2 + 1 and the
// anticommutator xy + yx all in a square-zero two-sided ideal) to an exact
// pair a^2 = b^2 = -1, ab + ba = 0 with a - x, b - y in the ideal. The
// corrections solve an affine linear system over the ideal; feasibility is
// decided exactly.
struct QuaternionLiftFeasibility {
    bool feasible = false;
    // Feasible: corrections and the corrected pair, re-verified exactly.
    std::optional<Element> correction_x, correction_y;
    std::optional<Element> a, b;
    // Infeasible: rank evidence for the affine system.
    std::size_t system_rank = 0;
    std::size_t augmented_rank = 0;
};

QuaternionLiftFeasibility quaternion_lift_feasibility(const AlgebraPtr& alg, const Subspace& ideal,
                                                      const Element& x, const Element& y);

}  // namespace qalg
