#include "qalg/classify.hpp"

#include "qalg/algebra.hpp"
#include "qalg/structure.hpp"

#include <doctest.h>

#include <random>

using qalg::AlgebraPtr;
using qalg::ClassifyOutcome;
using qalg::Element;
using qalg::Rational;
using qalg::SearchParams;
using qalg::Subspace;
using qalg::Vec;

namespace {

Element named(const AlgebraPtr& a, const std::string& name) {
    for (std::size_t i = 0; i < a->dim(); ++i) {
        if (a->basis_names()[i] == name) return qalg::basis_element(a, i);
    }
    FAIL("no basis element named ", name);
    return qalg::unit_element(a);
}

}  // namespace

TEST_CASE("complex witnesses are found on algebras that contain them") {
    for (const AlgebraPtr& a : {qalg::matrix_algebra(qalg::catalog_Q(), 2),
                                qalg::catalog_Cneg(Rational(-1)),
                                qalg::matrix_algebra(qalg::catalog_Cneg(Rational(-1)), 2),
                                qalg::catalog_Quat(Rational(-1), Rational(-1))}) {
        INFO(a->name());
        ClassifyOutcome r = qalg::find_complex_witness(a);
        REQUIRE(r.status == ClassifyOutcome::Status::Witness);
        REQUIRE(r.complex_witness.has_value());
        CHECK(r.complex_witness->verify());
        CHECK(r.complex_witness->sturm.distinct_real_roots == 0);
    }
}

TEST_CASE("the square-zero rotation in 2x2 matrices appears early in the stream") {
    AlgebraPtr m = qalg::matrix_algebra(qalg::catalog_Q(), 2);
    ClassifyOutcome r = qalg::find_complex_witness(m);
    REQUIRE(r.complex_witness.has_value());
    CHECK(r.complex_witness->element == named(m, "E12") - named(m, "E21"));
    CHECK(r.complex_witness->minimal == qalg::Poly({Rational(1), Rational(0), Rational(1)}));
}

TEST_CASE("odd left ideals certify the absence of a complex witness") {
    for (const AlgebraPtr& a :
         {qalg::matrix_algebra(qalg::catalog_Q(), 3),
          qalg::direct_product(qalg::catalog_Q(), qalg::matrix_algebra(qalg::catalog_Q(), 2)),
          qalg::catalog_Tri(2)}) {
        INFO(a->name());
        ClassifyOutcome r = qalg::find_odd_left_ideal_certificate(a);
        REQUIRE(r.status == ClassifyOutcome::Status::Certificate);
        REQUIRE(r.certificate.has_value());
        CHECK(r.certificate->ideal.dim() % 2 == 1);
        CHECK(r.certificate->verify(a));
    }
    AlgebraPtr m3 = qalg::matrix_algebra(qalg::catalog_Q(), 3);
    ClassifyOutcome r = qalg::find_odd_left_ideal_certificate(m3);
    CHECK(r.certificate->ideal.dim() == 3);
}

TEST_CASE("quaternion witnesses are found and verified") {
    for (const AlgebraPtr& a : {qalg::catalog_Quat(Rational(-1), Rational(-1)),
                                qalg::matrix_algebra(qalg::catalog_Cneg(Rational(-1)), 2)}) {
        INFO(a->name());
        ClassifyOutcome r = qalg::find_quaternion_witness(a);
        REQUIRE(r.status == ClassifyOutcome::Status::Witness);
        REQUIRE(r.quaternion_witness.has_value());
        CHECK(r.quaternion_witness->verify());
        CHECK(r.quaternion_witness->lambda.sign() > 0);
        CHECK(r.quaternion_witness->mu.sign() > 0);
    }
}

TEST_CASE("ideals of dimension not divisible by four certify the other side") {
    AlgebraPtr m = qalg::matrix_algebra(qalg::catalog_Q(), 2);
    ClassifyOutcome r = qalg::find_left_ideal_mod4_certificate(m);
    REQUIRE(r.status == ClassifyOutcome::Status::Certificate);
    CHECK(r.certificate->ideal.dim() == 2);
    CHECK(r.certificate->verify(m));

    AlgebraPtr t = qalg::catalog_Tri(2);
    ClassifyOutcome rt = qalg::find_left_ideal_mod4_certificate(t);
    REQUIRE(rt.status == ClassifyOutcome::Status::Certificate);
    CHECK(rt.certificate->ideal.dim() % 4 != 0);
    CHECK(rt.certificate->verify(t));
}

TEST_CASE("anticommuting pairs on 2x2 matrices have the classic squares") {
    AlgebraPtr m = qalg::matrix_algebra(qalg::catalog_Q(), 2);
    ClassifyOutcome r = qalg::find_anticommuting_pair(m);
    REQUIRE(r.status == ClassifyOutcome::Status::Witness);
    REQUIRE(r.pair.has_value());
    CHECK(r.pair->verify());
    Element u = r.pair->u, v = r.pair->v;
    CHECK(u * u == Rational(-1) * qalg::unit_element(m));
    CHECK(v * v == qalg::unit_element(m));
    CHECK(qalg::anticommutator(u, v).is_zero());
    CHECK(u * r.pair->u_inverse == qalg::unit_element(m));
    CHECK(v * r.pair->v_inverse == qalg::unit_element(m));
}

TEST_CASE("anticommuting search on quaternions succeeds and on fields certifies") {
    AlgebraPtr h = qalg::catalog_Quat(Rational(-1), Rational(-1));
    ClassifyOutcome r = qalg::find_anticommuting_pair(h);
    REQUIRE(r.status == ClassifyOutcome::Status::Witness);
    CHECK(r.pair->verify());

    // A commutative algebra can never carry such a pair: uv = vu and uv = -vu
    // force uv = 0, impossible for invertible u, v. The search is expected to
    // come back with a certificate or exhaust its budget, never a witness.
    AlgebraPtr c = qalg::catalog_Cneg(Rational(-1));
    ClassifyOutcome rc = qalg::find_anticommuting_pair(c, SearchParams{200, 0});
    CHECK(rc.status != ClassifyOutcome::Status::Witness);
    if (rc.status == ClassifyOutcome::Status::Certificate) CHECK(rc.certificate->verify(c));
}

TEST_CASE("witness searches respect their budget and report usage") {
    AlgebraPtr m3 = qalg::matrix_algebra(qalg::catalog_Q(), 3);
    ClassifyOutcome r = qalg::find_complex_witness(m3, SearchParams{40, 5});
    CHECK(r.status == ClassifyOutcome::Status::Unknown);
    CHECK(r.budget_used == 40);
    CHECK(r.seed == 5);
}

TEST_CASE("searches are deterministic for a fixed seed") {
    AlgebraPtr m = qalg::scramble_basis(qalg::matrix_algebra(qalg::catalog_Q(), 2), 17).algebra;
    ClassifyOutcome a = qalg::find_complex_witness(m, SearchParams{300, 9});
    ClassifyOutcome b = qalg::find_complex_witness(m, SearchParams{300, 9});
    REQUIRE(a.status == ClassifyOutcome::Status::Witness);
    CHECK(a.complex_witness->element == b.complex_witness->element);
    CHECK(a.budget_used == b.budget_used);
}

TEST_CASE("division-type classification of one and two dimensional input") {
    qalg::FrobeniusResult r = qalg::frobenius_classify(qalg::catalog_Q());
    CHECK(r.kind == qalg::FrobeniusResult::Kind::Real);

    qalg::FrobeniusResult c = qalg::frobenius_classify(qalg::catalog_Cneg(Rational(-1)));
    REQUIRE(c.kind == qalg::FrobeniusResult::Kind::Complex);
    CHECK(*c.lambda == Rational(1));

    // u^2 = -4/9: the square scale folds into the element, lambda stays
    // squarefree.
    AlgebraPtr scaled = qalg::catalog_Cneg(Rational(-4, 9));
    qalg::FrobeniusResult s = qalg::frobenius_classify(scaled);
    REQUIRE(s.kind == qalg::FrobeniusResult::Kind::Complex);
    CHECK(*s.lambda == Rational(1));
    CHECK(*s.a * *s.a == qalg::scalar_element(scaled, Rational(-1)));

    qalg::FrobeniusResult e = qalg::frobenius_classify(qalg::catalog_Cneg(Rational(-8)));
    REQUIRE(e.kind == qalg::FrobeniusResult::Kind::Complex);
    CHECK(*e.lambda == Rational(2));
}

TEST_CASE("division-type classification of quaternion input") {
    for (long alpha : {-1L, -2L, -3L}) {
        for (long beta : {-1L, -2L, -3L}) {
            AlgebraPtr h =
                qalg::scramble_basis(qalg::catalog_Quat(Rational(alpha), Rational(beta)),
                                     static_cast<std::uint64_t>(10 * alpha - beta))
                    .algebra;
            qalg::FrobeniusResult r = qalg::frobenius_classify(h);
            INFO(h->name());
            REQUIRE(r.kind == qalg::FrobeniusResult::Kind::Quaternion);
            qalg::QuaternionWitness w{*r.a, *r.v, *r.lambda, *r.mu};
            CHECK(w.verify());
            Element av = *r.a * *r.v;
            CHECK(av * av == qalg::scalar_element(h, -(*r.lambda * *r.mu)));
        }
    }
}

TEST_CASE("division-type classification rejects with evidence") {
    qalg::FrobeniusResult split = qalg::frobenius_classify(qalg::catalog_Cneg(Rational(2)));
    REQUIRE(split.kind == qalg::FrobeniusResult::Kind::NotRealDivision);
    REQUIRE(split.evidence.has_value());
    CHECK(split.evidence->sturm->distinct_real_roots >= 1);

    qalg::FrobeniusResult m2 = qalg::frobenius_classify(qalg::matrix_algebra(qalg::catalog_Q(), 2));
    REQUIRE(m2.kind == qalg::FrobeniusResult::Kind::NotRealDivision);
    CHECK_FALSE(m2.evidence->reason.empty());

    qalg::FrobeniusResult odd = qalg::frobenius_classify(qalg::catalog_Tri(2));
    REQUIRE(odd.kind == qalg::FrobeniusResult::Kind::NotRealDivision);
    CHECK(odd.evidence->dimension.has_value());
}

TEST_CASE("left ideal dimensions in quaternion algebras are multiples of four") {
    AlgebraPtr h = qalg::catalog_Quat(Rational(-1), Rational(-1));
    std::mt19937_64 rng(321);
    std::uniform_int_distribution<long> c(-2, 2);
    for (int k = 0; k < 40; ++k) {
        Vec v(h->dim());
        for (auto& x : v) x = Rational(c(rng));
        Subspace ideal = qalg::left_ideal_span(h, {qalg::make_element(h, std::move(v))});
        CHECK(ideal.dim() % 4 == 0);
    }
}

TEST_CASE("two sided ideals of 2x2 matrices are trivial") {
    AlgebraPtr m = qalg::matrix_algebra(qalg::catalog_Q(), 2);
    std::mt19937_64 rng(654);
    std::uniform_int_distribution<long> c(-2, 2);
    for (int k = 0; k < 40; ++k) {
        Vec v(m->dim());
        for (auto& x : v) x = Rational(c(rng));
        Subspace ideal = qalg::two_sided_ideal_span(m, {qalg::make_element(m, std::move(v))});
        CHECK((ideal.dim() == 0 || ideal.dim() == 4));
    }
}
