#pragma once

#include "qalg/algebra.hpp"
#include "qalg/poly.hpp"
#include "qalg/rational.hpp"
#include "qalg/subspace.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qalg {

// Shared knobs for the randomized searches. Candidate generation is fully
// deterministic given the seed: basis vectors first, then pairwise sums and
// differences, then seeded random small-integer combinations.
struct SearchParams {
    std::size_t budget = 500;  // max candidates examined across all stages
    std::uint64_t seed = 0;
};

// An element whose minimal polynomial has no real root, certified by a Sturm
// chain count.
struct ComplexWitness {
    Element element;
    Poly minimal;
    SturmEvidence sturm;

    bool verify() const;
};

// A pair a, b with a^2 = -lambda, b^2 = -mu (lambda, mu positive rationals)
// and ab + ba = 0: a scaled quaternion pair.
struct QuaternionWitness {
    Element a, b;
    Rational lambda, mu;

    bool verify() const;
};

// Invertible u, v with uv + vu = 0, inverses included as evidence.
struct AnticommutingPair {
    Element u, v;
    Element u_inverse, v_inverse;

    bool verify() const;
};

// A left (or two-sided) ideal whose dimension violates a divisibility
// constraint. `generators` regenerate the ideal when nonempty; the radical is
// offered without generators.
struct IdealCertificate {
    enum class Obstruction {
        OddDimension,       // dim is odd
        NotMultipleOfFour,  // dim % 4 != 0
    };
    enum class Sidedness { Left, TwoSided };

    Obstruction obstruction;
    Sidedness sidedness;
    std::vector<Element> generators;
    Subspace ideal;

    bool verify(const AlgebraPtr& a) const;
};

struct ClassifyOutcome {
    enum class Status { Witness, Certificate, Unknown };

    Status status = Status::Unknown;
    std::size_t budget_used = 0;
    std::uint64_t seed = 0;

    std::optional<ComplexWitness> complex_witness;
    std::optional<QuaternionWitness> quaternion_witness;
    std::optional<AnticommutingPair> pair;
    std::optional<IdealCertificate> certificate;
};

// Searches for an element whose minimal polynomial has no real root. Every
// returned witness is re-verified before the call returns; Unknown only
// reports budget exhaustion, never absence.
ClassifyOutcome find_complex_witness(const AlgebraPtr& a, const SearchParams& params = {});

// Searches principal left ideals, their pairwise sums, and the radical for
// one of odd dimension.
ClassifyOutcome find_odd_left_ideal_certificate(const AlgebraPtr& a,
                                                const SearchParams& params = {});

// Searches for a scaled quaternion pair: first an element a with a negative
// definite quadratic minimal polynomial (completable to a^2 = -lambda), then
// a second element with negative square in the kernel of w -> aw + wa.
ClassifyOutcome find_quaternion_witness(const AlgebraPtr& a, const SearchParams& params = {});

// Like the odd-dimension search, but the certificate is a left ideal whose
// dimension is not a multiple of four.
ClassifyOutcome find_left_ideal_mod4_certificate(const AlgebraPtr& a,
                                                 const SearchParams& params = {});

// Searches for invertible anticommuting u, v. On failure it also samples
// two-sided ideals (the whole algebra, the radical, principal ideals and
// their sums) for one of dimension not divisible by four, which certifies
// that no such pair exists. The first half of the budget goes to the pair
// search, the rest to the certificate search.
ClassifyOutcome find_anticommuting_pair(const AlgebraPtr& a, const SearchParams& params = {});

// Evidence that a presentation is not a real division algebra presentation:
// what failed and the element/polynomial exhibiting it, when one exists.
struct NotRealDivisionEvidence {
    std::string reason;
    std::optional<Element> element;
    std::optional<Poly> minimal;
    std::optional<SturmEvidence> sturm;
    std::optional<std::size_t> dimension;
};

struct FrobeniusResult {
    enum class Kind { Real, Complex, Quaternion, NotRealDivision };

    Kind kind = Kind::NotRealDivision;
    // Complex: i_element^2 = -lambda with lambda a positive squarefree
    // integer (the presentation's parameter up to a square scale).
    // Quaternion: a^2 = -lambda, v^2 = -mu, av + va = 0 and {1, a, v, av} is
    // a basis; lambda, mu positive but not normalized.
    std::optional<Rational> lambda, mu;
    std::optional<Element> a, v;
    std::optional<NotRealDivisionEvidence> evidence;
};

// Decides whether a presentation of dimension 1, 2 or 4 is (an isomorphic
// copy of) the reals, a quadratic field with negative squarefree discriminant
// or a scaled quaternion algebra, exhibiting verified structure elements, or
// returns NotRealDivision with concrete evidence. Deterministic: examines the
// first non-scalar basis element only.
FrobeniusResult frobenius_classify(const AlgebraPtr& d);

}  // namespace qalg
