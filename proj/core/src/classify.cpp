#include "qalg/classify.hpp"

#include "qalg/structure.hpp"

#include <random>
#include <stdexcept>
#include <utility>

namespace qalg {

namespace {

// Deterministic candidate source: the generators themselves, then pairwise
// sums and differences in index order, then seeded random small-integer
// combinations (coefficients in -2..2, zero draws skipped).
class CandidateStream {
public:
    CandidateStream(std::vector<Vec> gens, std::size_t ambient, std::uint64_t seed)
        : gens_(std::move(gens)), ambient_(ambient), rng_(seed) {}

    Vec next() {
        const std::size_t g = gens_.size();
        if (g == 0) return Vec(ambient_);
        if (single_ < g) return gens_[single_++];
        if (g >= 2 && pair_i_ + 1 < g) {
            Vec v = minus_ ? vec_sub(gens_[pair_i_], gens_[pair_j_])
                           : vec_add(gens_[pair_i_], gens_[pair_j_]);
            if (minus_) {
                minus_ = false;
                if (++pair_j_ == g) {
                    ++pair_i_;
                    pair_j_ = pair_i_ + 1;
                }
            } else {
                minus_ = true;
            }
            return v;
        }
        for (int tries = 0; tries < 64; ++tries) {
            Vec v(ambient_);
            for (const Vec& gen : gens_) {
                long c = static_cast<long>(rng_() % 5) - 2;
                if (c != 0) v = vec_add(v, vec_scale(Rational(c), gen));
            }
            if (!vec_is_zero(v)) return v;
        }
        return gens_[0];
    }

private:
    std::vector<Vec> gens_;
    std::size_t ambient_;
    std::mt19937_64 rng_;
    std::size_t single_ = 0;
    std::size_t pair_i_ = 0, pair_j_ = 1;
    bool minus_ = false;
};

std::vector<Vec> basis_vectors(const AlgebraPtr& a) {
    std::vector<Vec> out;
    out.reserve(a->dim());
    for (std::size_t i = 0; i < a->dim(); ++i) {
        Vec v(a->dim());
        v[i] = Rational(1);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Vec> subspace_rows(const Subspace& s) {
    std::vector<Vec> out;
    out.reserve(s.dim());
    for (std::size_t r = 0; r < s.dim(); ++r) out.push_back(s.basis_vector(r));
    return out;
}

// s with e = s * 1, when e is a scalar multiple of the unit.
std::optional<Rational> scalar_multiple_of_unit(const Element& e) {
    const Vec& u = e.algebra->unit_coords();
    std::size_t p = 0;
    while (u[p].is_zero()) ++p;
    Rational s = e.coords[p] / u[p];
    if (e.coords != vec_scale(s, u)) return std::nullopt;
    return s;
}

bool dimension_flagged(std::size_t dim, IdealCertificate::Obstruction obstruction) {
    if (obstruction == IdealCertificate::Obstruction::OddDimension) return dim % 2 == 1;
    return dim % 4 != 0;
}

// Shared search over principal left ideals, their pairwise sums, and the
// radical, for a dimension violating the given obstruction.
ClassifyOutcome left_ideal_search(const AlgebraPtr& a, const SearchParams& params,
                                  IdealCertificate::Obstruction obstruction) {
    ClassifyOutcome out;
    out.seed = params.seed;
    std::size_t used = 0;

    auto finish = [&](Subspace ideal, std::vector<Element> gens) {
        IdealCertificate cert{obstruction, IdealCertificate::Sidedness::Left, std::move(gens),
                              std::move(ideal)};
        if (!cert.verify(a)) {
            throw std::logic_error("left ideal search: certificate verification failed");
        }
        out.status = ClassifyOutcome::Status::Certificate;
        out.certificate = std::move(cert);
        out.budget_used = used;
        return out;
    };

    std::vector<Subspace> seen;
    std::vector<Element> seen_gen;
    CandidateStream stream(basis_vectors(a), a->dim(), params.seed);
    while (used < params.budget) {
        Vec v = stream.next();
        ++used;
        if (vec_is_zero(v)) continue;
        Element e = make_element(a, std::move(v));
        Subspace ideal = left_ideal_span(a, {e});
        if (dimension_flagged(ideal.dim(), obstruction)) return finish(std::move(ideal), {e});
        bool known = false;
        for (const Subspace& s : seen) {
            if (s == ideal) {
                known = true;
                break;
            }
        }
        if (known) continue;
        for (std::size_t i = 0; i < seen.size() && used < params.budget; ++i) {
            Subspace sum = ideal + seen[i];
            ++used;
            if (dimension_flagged(sum.dim(), obstruction)) {
                return finish(std::move(sum), {e, seen_gen[i]});
            }
        }
        seen.push_back(std::move(ideal));
        seen_gen.push_back(std::move(e));
    }
    if (used < params.budget) {
        Subspace rad = radical(a).radical;
        ++used;
        if (dimension_flagged(rad.dim(), obstruction)) return finish(std::move(rad), {});
    }
    out.status = ClassifyOutcome::Status::Unknown;
    out.budget_used = used;
    return out;
}

// Splits a positive rational as lam0 * scale^2 with lam0 a squarefree
// positive integer.
std::pair<Rational, Rational> squarefree_split(const Rational& r) {
    mpz_class m = r.numerator() * r.denominator();
    mpz_class kern = 1;
    mpz_class rem = m;
    for (mpz_class d = 2; d * d <= rem; d += (d == 2 ? 1 : 2)) {
        if (rem % d == 0) {
            unsigned e = 0;
            while (rem % d == 0) {
                rem /= d;
                ++e;
            }
            if (e % 2 == 1) kern *= d;
        }
    }
    if (rem > 1) kern *= rem;
    Rational lam0{mpz_class(kern), mpz_class(1)};
    Rational ratio = r / lam0;
    mpz_class sn = sqrt(mpz_class(ratio.numerator()));
    mpz_class sd = sqrt(mpz_class(ratio.denominator()));
    if (sn * sn != ratio.numerator() || sd * sd != ratio.denominator()) {
        throw std::logic_error("squarefree_split: ratio is not a perfect square");
    }
    return {lam0, Rational{std::move(sn), std::move(sd)}};
}

// The quadratic completion: when e has minimal polynomial X^2 + pX + q with
// negative discriminant, e + p/2 squares to -(q - p^2/4) with positive
// lambda. Returns the shifted element and lambda.
std::optional<std::pair<Element, Rational>> negative_square_completion(const Element& e) {
    Poly mu = minimal_poly_of_element(e);
    if (mu.degree() != 2) return std::nullopt;
    const Rational& p = mu.coeff(1);
    const Rational& q = mu.coeff(0);
    Rational disc = p * p - Rational(4) * q;
    if (disc.sign() >= 0) return std::nullopt;
    Element shifted = e + scalar_element(e.algebra, p / Rational(2));
    Rational lambda = q - p * p / Rational(4);
    return std::make_pair(std::move(shifted), std::move(lambda));
}

Subspace anticommutant(const Element& a) {
    return kernel(left_mult_matrix(a) + right_mult_matrix(a));
}

}  // namespace

bool ComplexWitness::verify() const {
    if (minimal != minimal_poly_of_element(element)) return false;
    if (!eval_poly(minimal, element).is_zero()) return false;
    SturmEvidence ev = sturm_evidence(minimal);
    return ev.distinct_real_roots == 0 && sturm.distinct_real_roots == 0;
}

bool QuaternionWitness::verify() const {
    if (lambda.sign() <= 0 || mu.sign() <= 0) return false;
    const AlgebraPtr& alg = a.algebra;
    if (a * a != scalar_element(alg, -lambda)) return false;
    if (b * b != scalar_element(alg, -mu)) return false;
    return anticommutator(a, b).is_zero();
}

bool AnticommutingPair::verify() const {
    Element one = unit_element(u.algebra);
    if (u * u_inverse != one || u_inverse * u != one) return false;
    if (v * v_inverse != one || v_inverse * v != one) return false;
    return anticommutator(u, v).is_zero();
}

bool IdealCertificate::verify(const AlgebraPtr& a) const {
    if (!dimension_flagged(ideal.dim(), obstruction)) return false;
    if (sidedness == Sidedness::Left) {
        if (!is_left_ideal(a, ideal)) return false;
        if (!generators.empty() && left_ideal_span(a, generators) != ideal) return false;
    } else {
        if (!is_two_sided_ideal(a, ideal)) return false;
        if (!generators.empty() && two_sided_ideal_span(a, generators) != ideal) return false;
    }
    return true;
}

ClassifyOutcome find_complex_witness(const AlgebraPtr& a, const SearchParams& params) {
    ClassifyOutcome out;
    out.seed = params.seed;
    std::size_t used = 0;
    CandidateStream stream(basis_vectors(a), a->dim(), params.seed);
    while (used < params.budget) {
        Vec v = stream.next();
        ++used;
        Element e = make_element(a, std::move(v));
        Poly mu = minimal_poly_of_element(e);
        SturmEvidence ev = sturm_evidence(mu);
        if (ev.distinct_real_roots == 0) {
            ComplexWitness w{std::move(e), std::move(mu), ev};
            if (!w.verify()) {
                throw std::logic_error("find_complex_witness: verification failed");
            }
            out.status = ClassifyOutcome::Status::Witness;
            out.complex_witness = std::move(w);
            out.budget_used = used;
            return out;
        }
    }
    out.status = ClassifyOutcome::Status::Unknown;
    out.budget_used = used;
    return out;
}

ClassifyOutcome find_odd_left_ideal_certificate(const AlgebraPtr& a, const SearchParams& params) {
    return left_ideal_search(a, params, IdealCertificate::Obstruction::OddDimension);
}

ClassifyOutcome find_left_ideal_mod4_certificate(const AlgebraPtr& a, const SearchParams& params) {
    return left_ideal_search(a, params, IdealCertificate::Obstruction::NotMultipleOfFour);
}

ClassifyOutcome find_quaternion_witness(const AlgebraPtr& a, const SearchParams& params) {
    ClassifyOutcome out;
    out.seed = params.seed;
    std::size_t used = 0;
    CandidateStream stream(basis_vectors(a), a->dim(), params.seed);
    while (used < params.budget) {
        Vec v = stream.next();
        ++used;
        auto completion = negative_square_completion(make_element(a, std::move(v)));
        if (!completion) continue;
        Element first = std::move(completion->first);
        Rational lambda = std::move(completion->second);
        Subspace k = anticommutant(first);
        if (k.dim() == 0) continue;
        // Bounded second-stage search inside the anticommutant.
        std::size_t cap = k.dim() + k.dim() * (k.dim() - 1) + 16;
        CandidateStream inner(subspace_rows(k), a->dim(), params.seed + used);
        for (std::size_t t = 0; t < cap && used < params.budget; ++t) {
            Vec w = inner.next();
            ++used;
            Element second = make_element(a, std::move(w));
            auto s = scalar_multiple_of_unit(second * second);
            if (!s || s->sign() >= 0) continue;
            QuaternionWitness qw{first, std::move(second), lambda, -*s};
            if (!qw.verify()) {
                throw std::logic_error("find_quaternion_witness: verification failed");
            }
            out.status = ClassifyOutcome::Status::Witness;
            out.quaternion_witness = std::move(qw);
            out.budget_used = used;
            return out;
        }
    }
    out.status = ClassifyOutcome::Status::Unknown;
    out.budget_used = used;
    return out;
}

ClassifyOutcome find_anticommuting_pair(const AlgebraPtr& a, const SearchParams& params) {
    ClassifyOutcome out;
    out.seed = params.seed;
    std::size_t used = 0;
    const std::size_t witness_budget = params.budget / 2;

    auto kernel_search = [&](const Element& first, std::size_t used_cap)
        -> std::optional<AnticommutingPair> {
        auto first_inv = invert(first);
        if (!first_inv) return std::nullopt;
        Subspace k = anticommutant(first);
        if (k.dim() == 0) return std::nullopt;
        std::size_t cap = k.dim() + k.dim() * (k.dim() - 1) + 16;
        CandidateStream inner(subspace_rows(k), a->dim(), params.seed + used);
        for (std::size_t t = 0; t < cap && used < used_cap; ++t) {
            Vec w = inner.next();
            ++used;
            Element second = make_element(a, std::move(w));
            auto second_inv = invert(second);
            if (!second_inv) continue;
            AnticommutingPair pair{first, std::move(second), std::move(*first_inv),
                                   std::move(*second_inv)};
            if (!pair.verify()) {
                throw std::logic_error("find_anticommuting_pair: verification failed");
            }
            return pair;
        }
        return std::nullopt;
    };

    // Stage one: elements with a negative definite quadratic minimal
    // polynomial (their shifts are automatically invertible).
    {
        CandidateStream stream(basis_vectors(a), a->dim(), params.seed);
        const std::size_t cap = witness_budget / 2;
        while (used < cap) {
            Vec v = stream.next();
            ++used;
            auto completion = negative_square_completion(make_element(a, std::move(v)));
            if (!completion) continue;
            if (auto pair = kernel_search(completion->first, cap)) {
                out.status = ClassifyOutcome::Status::Witness;
                out.pair = std::move(*pair);
                out.budget_used = used;
                return out;
            }
        }
    }
    // Stage two: arbitrary invertible elements.
    {
        CandidateStream stream(basis_vectors(a), a->dim(), params.seed);
        while (used < witness_budget) {
            Vec v = stream.next();
            ++used;
            Element e = make_element(a, std::move(v));
            if (auto pair = kernel_search(e, witness_budget)) {
                out.status = ClassifyOutcome::Status::Witness;
                out.pair = std::move(*pair);
                out.budget_used = used;
                return out;
            }
        }
    }

    // Certificate phase: a two-sided ideal of dimension not divisible by
    // four refutes the existence of such a pair.
    auto finish_cert = [&](Subspace ideal, std::vector<Element> gens) {
        IdealCertificate cert{IdealCertificate::Obstruction::NotMultipleOfFour,
                              IdealCertificate::Sidedness::TwoSided, std::move(gens),
                              std::move(ideal)};
        if (!cert.verify(a)) {
            throw std::logic_error("find_anticommuting_pair: certificate verification failed");
        }
        out.status = ClassifyOutcome::Status::Certificate;
        out.certificate = std::move(cert);
        out.budget_used = used;
        return out;
    };

    if (used < params.budget) {
        ++used;
        if (a->dim() % 4 != 0) {
            return finish_cert(Subspace::full(a->dim()), {unit_element(a)});
        }
    }
    if (used < params.budget) {
        Subspace rad = radical(a).radical;
        ++used;
        if (rad.dim() % 4 != 0 && rad.dim() != 0) return finish_cert(std::move(rad), {});
    }
    std::vector<Subspace> seen;
    std::vector<Element> seen_gen;
    CandidateStream stream(basis_vectors(a), a->dim(), params.seed + 1);
    while (used < params.budget) {
        Vec v = stream.next();
        ++used;
        if (vec_is_zero(v)) continue;
        Element e = make_element(a, std::move(v));
        Subspace ideal = two_sided_ideal_span(a, {e});
        if (ideal.dim() % 4 != 0) return finish_cert(std::move(ideal), {e});
        bool known = false;
        for (const Subspace& s : seen) {
            if (s == ideal) {
                known = true;
                break;
            }
        }
        if (known) continue;
        for (std::size_t i = 0; i < seen.size() && used < params.budget; ++i) {
            Subspace sum = ideal + seen[i];
            ++used;
            if (sum.dim() % 4 != 0) return finish_cert(std::move(sum), {e, seen_gen[i]});
        }
        seen.push_back(std::move(ideal));
        seen_gen.push_back(std::move(e));
    }
    out.status = ClassifyOutcome::Status::Unknown;
    out.budget_used = used;
    return out;
}

FrobeniusResult frobenius_classify(const AlgebraPtr& d) {
    const std::size_t n = d->dim();
    FrobeniusResult out;

    auto refuse = [&](std::string reason, std::optional<Element> element = std::nullopt,
                      std::optional<Poly> minimal = std::nullopt,
                      std::optional<SturmEvidence> sturm = std::nullopt,
                      std::optional<std::size_t> dimension = std::nullopt) {
        out.kind = FrobeniusResult::Kind::NotRealDivision;
        out.evidence = NotRealDivisionEvidence{std::move(reason), std::move(element),
                                               std::move(minimal), sturm, dimension};
        return out;
    };

    if (n == 1) {
        out.kind = FrobeniusResult::Kind::Real;
        return out;
    }
    if (n != 2 && n != 4) {
        return refuse("dimension " + std::to_string(n) + " is not 1, 2 or 4", std::nullopt,
                      std::nullopt, std::nullopt, n);
    }

    Subspace unit_span = Subspace::span(n, {d->unit_coords()});
    std::size_t bi = 0;
    while (bi < n) {
        Vec e(n);
        e[bi] = Rational(1);
        if (!unit_span.contains(e)) break;
        ++bi;
    }
    Element b = basis_element(d, bi);
    Poly mu = minimal_poly_of_element(b);
    if (mu.degree() != 2) {
        return refuse("a basis element has minimal polynomial of degree " +
                          std::to_string(mu.degree()) + ", not two",
                      b, mu);
    }
    SturmEvidence ev = sturm_evidence(mu);
    if (ev.distinct_real_roots > 0) {
        return refuse("a non-scalar element has a real eigenvalue, so the presentation has "
                      "zero divisors",
                      b, mu, ev);
    }
    const Rational& p = mu.coeff(1);
    const Rational& q = mu.coeff(0);
    Element shifted = b + scalar_element(d, p / Rational(2));
    Rational lambda_raw = q - p * p / Rational(4);

    if (n == 2) {
        auto [lam0, scale] = squarefree_split(lambda_raw);
        Element i_elem = scale.inverse() * shifted;
        if (i_elem * i_elem != scalar_element(d, -lam0)) {
            throw std::logic_error("frobenius_classify: normalization failed");
        }
        out.kind = FrobeniusResult::Kind::Complex;
        out.lambda = std::move(lam0);
        out.a = std::move(i_elem);
        return out;
    }

    Subspace k = anticommutant(shifted);
    if (k.dim() == 0) {
        return refuse("no nonzero element anticommutes with the quadratic generator", shifted,
                      mu);
    }
    Element v = make_element(d, k.basis_vector(0));
    auto s = scalar_multiple_of_unit(v * v);
    if (!s) {
        return refuse("the anticommuting element has a non-scalar square", v);
    }
    if (s->sign() >= 0) {
        return refuse("the anticommuting element has square " + s->str() +
                          " >= 0, so the presentation has zero divisors",
                      v);
    }
    Rational muq = -*s;
    Element av = shifted * v;
    QMatrix span_rows = QMatrix::from_rows(
        {d->unit_coords(), shifted.coords, v.coords, av.coords}, n);
    if (rref(span_rows).rank != 4) {
        return refuse("1, a, v and av are linearly dependent", av);
    }
    if (av * av != scalar_element(d, -(lambda_raw * muq))) {
        return refuse("(av)^2 is not -lambda*mu: the pair does not close into a quaternion "
                      "basis",
                      av);
    }
    if (!anticommutator(shifted, v).is_zero()) {
        throw std::logic_error("frobenius_classify: anticommutant member fails to anticommute");
    }
    out.kind = FrobeniusResult::Kind::Quaternion;
    out.lambda = std::move(lambda_raw);
    out.mu = std::move(muq);
    out.a = std::move(shifted);
    out.v = std::move(v);
    return out;
}

}  // namespace qalg
