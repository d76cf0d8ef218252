#include "qalg/poly.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using qalg::Poly;
using qalg::QMatrix;
using qalg::Rational;
using qalg::Vec;

namespace {

Poly linear_root(const Rational& r) {
    // X - r
    return Poly({-r, Rational(1)});
}

Poly random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 3);
    int d = deg(rng);
    Vec c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = Rational(num(rng), den(rng));
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("polynomial normal form strips trailing zeros") {
    Poly p({Rational(1), Rational(0), Rational(0)});
    CHECK(p.degree() == 0);
    CHECK(Poly({Rational(0)}).is_zero());
    CHECK(Poly().degree() == -1);
    CHECK(Poly::X().degree() == 1);
}

TEST_CASE("divmod produces exact quotient and remainder") {
    Poly f({Rational(-1), Rational(0), Rational(0), Rational(1)});  // X^3 - 1
    Poly g({Rational(-1), Rational(1)});                            // X - 1
    qalg::PolyDivMod d = qalg::divmod(f, g);
    CHECK(d.quotient == Poly({Rational(1), Rational(1), Rational(1)}));
    CHECK(d.remainder.is_zero());
    CHECK_THROWS(qalg::divmod(f, Poly::zero()));

    std::mt19937_64 rng(5150);
    for (int t = 0; t < 60; ++t) {
        Poly a = random_poly(rng, 6);
        Poly b = random_poly(rng, 3);
        if (b.is_zero()) continue;
        qalg::PolyDivMod qr = qalg::divmod(a, b);
        CHECK(qr.quotient * b + qr.remainder == a);
        CHECK(qr.remainder.degree() < b.degree());
    }
}

TEST_CASE("egcd returns a monic gcd with a verified combination") {
    Poly f({Rational(0), Rational(-1), Rational(1)});  // X^2 - X
    Poly g({Rational(-1), Rational(2)});               // 2X - 1
    qalg::PolyEgcd e = qalg::egcd(f, g);
    CHECK(e.d == Poly::constant(Rational(1)));
    CHECK(e.u == Poly::constant(Rational(-4)));
    CHECK(e.v == Poly({Rational(-1), Rational(2)}));
    CHECK(e.u * f + e.v * g == e.d);

    Poly h({Rational(1), Rational(0), Rational(1)});  // X^2 + 1
    Poly hp({Rational(0), Rational(2)});              // 2X
    qalg::PolyEgcd e2 = qalg::egcd(h, hp);
    CHECK(e2.d == Poly::constant(Rational(1)));
    CHECK(e2.u * h + e2.v * hp == e2.d);

    std::mt19937_64 rng(777);
    for (int t = 0; t < 60; ++t) {
        Poly a = random_poly(rng, 5);
        Poly b = random_poly(rng, 4);
        if (a.is_zero() && b.is_zero()) continue;
        qalg::PolyEgcd r = qalg::egcd(a, b);
        CHECK(r.u * a + r.v * b == r.d);
        CHECK(r.d.is_monic());
        if (!a.is_zero()) CHECK(qalg::divmod(a, r.d).remainder.is_zero());
        if (!b.is_zero()) CHECK(qalg::divmod(b, r.d).remainder.is_zero());
    }
}

TEST_CASE("gcd and squarefree part on factored input") {
    Poly f = linear_root(Rational(1)) * linear_root(Rational(1)) * linear_root(Rational(-2));
    CHECK(qalg::gcd_poly(f, f.derivative()) == linear_root(Rational(1)));
    CHECK(qalg::squarefree_part(f) == linear_root(Rational(1)) * linear_root(Rational(-2)));
    CHECK_FALSE(qalg::is_separable(f));
    CHECK(qalg::is_separable(Poly({Rational(0), Rational(-1), Rational(1)})));
    CHECK(qalg::root_multiplicity(f, Rational(1)) == 2);
    CHECK(qalg::root_multiplicity(f, Rational(-2)) == 1);
    CHECK(qalg::root_multiplicity(f, Rational(0)) == 0);
}

TEST_CASE("sturm counts distinct real roots exactly") {
    CHECK(qalg::sturm_count(Poly({Rational(1), Rational(0), Rational(1)})) == 0);   // X^2 + 1
    CHECK(qalg::sturm_count(Poly({Rational(-2), Rational(0), Rational(1)})) == 2);  // X^2 - 2
    CHECK(qalg::sturm_count(Poly({Rational(0), Rational(-1), Rational(0), Rational(1)})) ==
          3);  // X^3 - X
    CHECK(qalg::sturm_count(linear_root(Rational(1)) * linear_root(Rational(1))) == 1);
    CHECK(qalg::sturm_count(Poly({Rational(2), Rational(0), Rational(1)})) == 0);  // X^2 + 2

    qalg::SturmEvidence ev = qalg::sturm_evidence(Poly({Rational(-2), Rational(0), Rational(1)}));
    CHECK(ev.variations_at_minus_inf - ev.variations_at_plus_inf == 2);
    CHECK(ev.distinct_real_roots == 2);
}

TEST_CASE("sturm matches a sign-change grid on products of integer-root factors") {
    // Polynomials whose real roots are known integers in [-12, 12]: the count
    // of sign changes of the squarefree part across half-integer grid points
    // is an independent root counter.
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> nroots(1, 4);
    std::uniform_int_distribution<long> rootval(-12, 12);
    std::uniform_int_distribution<int> mult(1, 2);
    std::uniform_int_distribution<int> with_complex(0, 1);
    for (int t = 0; t < 50; ++t) {
        std::set<long> roots;
        Poly f = Poly::constant(Rational(1));
        int k = nroots(rng);
        for (int i = 0; i < k; ++i) {
            long r = rootval(rng);
            roots.insert(r);
            int m = mult(rng);
            for (int j = 0; j < m; ++j) f = f * linear_root(Rational(r));
        }
        if (with_complex(rng)) f = f * Poly({Rational(1), Rational(0), Rational(1)});

        Poly sf = qalg::squarefree_part(f);
        std::size_t grid_count = 0;
        Rational prev = sf.eval(Rational(-25, 2));
        for (long g = -11; g <= 12; ++g) {
            Rational here = sf.eval(Rational(2 * g + 1, 2));
            if (prev.sign() * here.sign() < 0) ++grid_count;
            prev = here;
        }
        CHECK(qalg::sturm_count(f) == roots.size());
        CHECK(grid_count == roots.size());
    }
}

TEST_CASE("polynomial text form parses back to itself") {
    Poly p = qalg::parse_poly("(X-1)^2*(X+2)");
    CHECK(p == Poly({Rational(2), Rational(-3), Rational(0), Rational(1)}));
    CHECK(qalg::parse_poly("X^2 - X") == Poly({Rational(0), Rational(-1), Rational(1)}));
    CHECK(qalg::parse_poly("-1/2*X + 3") == Poly({Rational(3), Rational(-1, 2)}));
    CHECK(qalg::parse_poly("0") == Poly::zero());

    std::mt19937_64 rng(31337);
    for (int t = 0; t < 100; ++t) {
        Poly p2 = random_poly(rng, 6);
        CHECK(qalg::parse_poly(p2.str()) == p2);
    }
}

TEST_CASE("polynomial parser rejects malformed text") {
    CHECK_THROWS(qalg::parse_poly(""));
    CHECK_THROWS(qalg::parse_poly("X^-1"));
    CHECK_THROWS(qalg::parse_poly("X +"));
    CHECK_THROWS(qalg::parse_poly("(X"));
    CHECK_THROWS(qalg::parse_poly("Y"));
    CHECK_THROWS(qalg::parse_poly("X^1/2"));
}

TEST_CASE("minimal polynomial of a matrix is the first dependence") {
    QMatrix rot = QMatrix::from_rows({{Rational(0), Rational(1)}, {Rational(-1), Rational(0)}}, 2);
    CHECK(qalg::minimal_polynomial(rot) == Poly({Rational(1), Rational(0), Rational(1)}));

    QMatrix id = QMatrix::identity(3);
    CHECK(qalg::minimal_polynomial(id) == Poly({Rational(-1), Rational(1)}));

    QMatrix nil = QMatrix::from_rows({{Rational(0), Rational(1)}, {Rational(0), Rational(0)}}, 2);
    CHECK(qalg::minimal_polynomial(nil) == Poly({Rational(0), Rational(0), Rational(1)}));

    // Distinct diagonal entries: the minimal polynomial is the full
    // characteristic polynomial; repeated entries collapse.
    QMatrix diag = QMatrix::from_rows({{Rational(2), Rational(0), Rational(0)},
                                       {Rational(0), Rational(2), Rational(0)},
                                       {Rational(0), Rational(0), Rational(5)}},
                                      3);
    CHECK(qalg::minimal_polynomial(diag) ==
          linear_root(Rational(2)) * linear_root(Rational(5)));
}

TEST_CASE("polynomial evaluation by Horner agrees with direct expansion") {
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<long> pt(-5, 5);
    for (int t = 0; t < 40; ++t) {
        Poly p = random_poly(rng, 5);
        Rational x(pt(rng), 2);
        Rational direct(0), power(1);
        for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
            direct += p.coeff(k) * power;
            power *= x;
        }
        CHECK(p.eval(x) == direct);
    }
}
