#include "qalg/algebra.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <string>
#include <vector>

using qalg::AlgebraPtr;
using qalg::Element;
using qalg::Rational;
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

Element random_element(const AlgebraPtr& a, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> c(-3, 3);
    Vec v(a->dim());
    for (auto& x : v) x = Rational(c(rng));
    return qalg::make_element(a, std::move(v));
}

}  // namespace

TEST_CASE("catalog presentations all pass the exhaustive check") {
    std::vector<AlgebraPtr> all = {
        qalg::catalog_Q(),
        qalg::catalog_Cneg(Rational(-1)),
        qalg::catalog_Cneg(Rational(5, 3)),
        qalg::catalog_Quat(Rational(-1), Rational(-1)),
        qalg::catalog_Quat(Rational(-2), Rational(-3)),
        qalg::catalog_Quat(Rational(1, 2), Rational(-7)),
        qalg::catalog_Tri(1),
        qalg::catalog_Tri(3),
        qalg::catalog_Tri(4),
        qalg::catalog_ExampleJ(),
        qalg::matrix_algebra(qalg::catalog_Q(), 2),
        qalg::matrix_algebra(qalg::catalog_Q(), 3),
        qalg::matrix_algebra(qalg::catalog_Cneg(Rational(-1)), 2),
        qalg::truncated_polynomial_algebra(4),
        qalg::direct_product(qalg::catalog_Q(), qalg::matrix_algebra(qalg::catalog_Q(), 2)),
        qalg::tensor_product(qalg::catalog_Tri(3), qalg::catalog_Cneg(Rational(-1))),
        qalg::tensor_product(qalg::catalog_Cneg(Rational(-1)),
                             qalg::truncated_polynomial_algebra(2)),
    };
    for (const AlgebraPtr& a : all) {
        qalg::ValidationReport r = qalg::validate(*a);
        INFO(a->name(), ": ", r.message);
        CHECK(r.ok);
    }
}

TEST_CASE("catalog spec strings parse and reject junk") {
    CHECK(qalg::catalog("Quat(-1,-1)")->dim() == 4);
    CHECK(qalg::catalog("Mat(Cneg(-1),2)")->dim() == 8);
    CHECK(qalg::catalog("Tri(3)")->dim() == 6);
    CHECK(qalg::catalog("ExampleJ")->dim() == 8);
    CHECK(qalg::catalog("Q")->dim() == 1);
    CHECK_THROWS_AS(qalg::catalog("Frob(2)"), std::invalid_argument);
    CHECK_THROWS_AS(qalg::catalog("Tri(0)"), std::invalid_argument);
    CHECK_THROWS_AS(qalg::catalog("Tri(99)"), std::invalid_argument);
    CHECK_THROWS_AS(qalg::catalog("Quat(-1)"), std::invalid_argument);
    CHECK_THROWS_AS(qalg::catalog("Mat(Q,2)x"), std::invalid_argument);
}

TEST_CASE("quaternion table facts") {
    AlgebraPtr h = qalg::catalog_Quat(Rational(-2), Rational(-3));
    Element i = named(h, "i"), j = named(h, "j"), k = named(h, "k");
    CHECK(i * j == k);
    CHECK(j * i == Rational(-1) * k);
    CHECK(i * i == qalg::scalar_element(h, Rational(-2)));
    CHECK(j * j == qalg::scalar_element(h, Rational(-3)));
    CHECK(k * k == qalg::scalar_element(h, Rational(-6)));
    CHECK(i * k == Rational(-2) * j);
    CHECK(k * i == Rational(2) * j);
    CHECK(j * k == Rational(3) * i);
    CHECK(k * j == Rational(-3) * i);
}

TEST_CASE("upper triangular units multiply by index matching") {
    AlgebraPtr t = qalg::catalog_Tri(3);
    CHECK(t->basis_names() ==
          std::vector<std::string>{"e11", "e12", "e13", "e22", "e23", "e33"});
    CHECK(named(t, "e12") * named(t, "e23") == named(t, "e13"));
    CHECK((named(t, "e23") * named(t, "e12")).is_zero());
    CHECK(named(t, "e11") * named(t, "e12") == named(t, "e12"));
    CHECK((named(t, "e12") * named(t, "e12")).is_zero());
    CHECK(qalg::unit_element(t) ==
          named(t, "e11") + named(t, "e22") + named(t, "e33"));
}

TEST_CASE("matrix algebra over a coefficient algebra keeps block order") {
    AlgebraPtr m = qalg::matrix_algebra(qalg::catalog_Cneg(Rational(-1)), 2);
    CHECK(m->basis_names() ==
          std::vector<std::string>{"E11", "E11*u", "E12", "E12*u", "E21", "E21*u", "E22",
                                   "E22*u"});
    Element u11 = named(m, "E11*u");
    CHECK(u11 * u11 == Rational(-1) * named(m, "E11"));
    CHECK(named(m, "E12") * named(m, "E21") == named(m, "E11"));
    CHECK(named(m, "E12*u") * named(m, "E21*u") == Rational(-1) * named(m, "E11"));
    CHECK((named(m, "E12") * named(m, "E12")).is_zero());
}

// Independent recomputation of the 8-dimensional example's table by term
// rewriting. An element is a linear combination of words in the letters x, y
// times a power of the central t; the rewrite rules are
//   xx -> -1,   yy -> -1,   yx -> t - xy,   t t -> 0,
// and every word normalizes to one of 1, x, y, xy with t-power 0 or 1.
namespace rewriting {

struct Term {
    Rational coeff;
    int tpow;
    std::string word;  // letters 'x', 'y'
};

// map from (tpow, normal word) to coefficient
using Normal = std::map<std::pair<int, std::string>, Rational>;

void reduce(Term t, Normal& out) {
    if (t.coeff.is_zero() || t.tpow >= 2) return;
    for (std::size_t i = 0; i + 1 < t.word.size(); ++i) {
        char a = t.word[i], b = t.word[i + 1];
        if (a == b) {  // xx or yy -> -1
            Term next = t;
            next.coeff = -t.coeff;
            next.word = t.word.substr(0, i) + t.word.substr(i + 2);
            reduce(std::move(next), out);
            return;
        }
        if (a == 'y' && b == 'x') {  // yx -> t - xy
            Term tt = t;
            tt.tpow += 1;
            tt.word = t.word.substr(0, i) + t.word.substr(i + 2);
            Term swap = t;
            swap.coeff = -t.coeff;
            swap.word = t.word;
            swap.word[i] = 'x';
            swap.word[i + 1] = 'y';
            reduce(std::move(tt), out);
            reduce(std::move(swap), out);
            return;
        }
    }
    out[{t.tpow, t.word}] += t.coeff;
}

Vec to_coords(const Normal& n) {
    // basis order: 1, x, y, xy, then the same four times t
    const std::vector<std::pair<int, std::string>> order = {
        {0, ""}, {0, "x"}, {0, "y"}, {0, "xy"}, {1, ""}, {1, "x"}, {1, "y"}, {1, "xy"}};
    Vec v(8);
    for (const auto& [key, c] : n) {
        bool placed = false;
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (order[i] == key) {
                v[i] = c;
                placed = true;
                break;
            }
        }
        if (!placed && !c.is_zero()) FAIL("word failed to normalize");
    }
    return v;
}

Vec basis_product(std::size_t i, std::size_t j) {
    auto word_of = [](std::size_t k) -> Term {
        static const std::string words[4] = {"", "x", "y", "xy"};
        return Term{Rational(1), k >= 4 ? 1 : 0, words[k % 4]};
    };
    Term a = word_of(i), b = word_of(j);
    Term prod{a.coeff * b.coeff, a.tpow + b.tpow, a.word + b.word};
    Normal n;
    reduce(std::move(prod), n);
    return to_coords(n);
}

}  // namespace rewriting

TEST_CASE("the eight dimensional example matches its rewriting system") {
    AlgebraPtr j = qalg::catalog_ExampleJ();
    REQUIRE(j->dim() == 8);
    CHECK(j->basis_names() ==
          std::vector<std::string>{"1", "x", "y", "z", "t", "tx", "ty", "tz"});
    for (std::size_t a = 0; a < 8; ++a) {
        for (std::size_t b = 0; b < 8; ++b) {
            Element lhs = qalg::basis_element(j, a) * qalg::basis_element(j, b);
            Vec rhs = rewriting::basis_product(a, b);
            INFO("product of basis ", a, " and ", b);
            CHECK(lhs.coords == rhs);
        }
    }
}

TEST_CASE("elements of different parents refuse to mix") {
    AlgebraPtr a = qalg::catalog_Tri(2);
    AlgebraPtr b = qalg::catalog_Tri(2);  // equal table, distinct object
    Element ea = qalg::unit_element(a), eb = qalg::unit_element(b);
    CHECK_THROWS_AS(ea * eb, std::invalid_argument);
    CHECK_THROWS_AS(ea + eb, std::invalid_argument);
}

TEST_CASE("element inverse is two sided or absent") {
    AlgebraPtr c = qalg::catalog_Cneg(Rational(-1));
    Element u = named(c, "u");
    auto ui = qalg::invert(u);
    REQUIRE(ui.has_value());
    CHECK(*ui == Rational(-1) * u);

    AlgebraPtr t = qalg::catalog_Tri(2);
    CHECK_FALSE(qalg::invert(named(t, "e12")).has_value());
    CHECK_FALSE(qalg::invert(qalg::make_element(t, Vec(t->dim()))).has_value());

    std::mt19937_64 rng(11);
    AlgebraPtr m = qalg::matrix_algebra(qalg::catalog_Q(), 2);
    for (int k = 0; k < 25; ++k) {
        Element x = random_element(m, rng);
        auto xi = qalg::invert(x);
        if (xi) {
            CHECK(x * *xi == qalg::unit_element(m));
            CHECK(*xi * x == qalg::unit_element(m));
        }
    }
}

TEST_CASE("regular representations respect multiplication") {
    std::mt19937_64 rng(21);
    AlgebraPtr a = qalg::catalog_ExampleJ();
    for (int k = 0; k < 10; ++k) {
        Element x = random_element(a, rng);
        Element y = random_element(a, rng);
        CHECK(qalg::left_mult_matrix(x) * y.coords == (x * y).coords);
        CHECK(qalg::right_mult_matrix(y) * x.coords == (x * y).coords);
        CHECK(qalg::left_mult_matrix(x) * qalg::left_mult_matrix(y) ==
              qalg::left_mult_matrix(x * y));
    }
}

TEST_CASE("minimal polynomials of concrete elements") {
    AlgebraPtr h = qalg::catalog_Quat(Rational(-1), Rational(-1));
    CHECK(qalg::minimal_poly_of_element(named(h, "i") + named(h, "j")) ==
          qalg::Poly({Rational(2), Rational(0), Rational(1)}));
    CHECK(qalg::minimal_poly_of_element(qalg::unit_element(h)) ==
          qalg::Poly({Rational(-1), Rational(1)}));

    AlgebraPtr m = qalg::matrix_algebra(qalg::catalog_Cneg(Rational(-1)), 2);
    CHECK(qalg::minimal_poly_of_element(named(m, "E11*u")) ==
          qalg::Poly({Rational(0), Rational(1), Rational(0), Rational(1)}));

    std::mt19937_64 rng(31);
    for (int k = 0; k < 15; ++k) {
        Element x = random_element(h, rng);
        qalg::Poly mu = qalg::minimal_poly_of_element(x);
        CHECK(qalg::eval_poly(mu, x).is_zero());
        CHECK(mu.is_monic());
    }
}

TEST_CASE("ideal spans close under the required multiplications") {
    AlgebraPtr m = qalg::matrix_algebra(qalg::catalog_Q(), 2);
    Subspace left = qalg::left_ideal_span(m, {named(m, "E11")});
    CHECK(left.dim() == 2);
    CHECK(left.contains(named(m, "E21").coords));
    CHECK_FALSE(left.contains(named(m, "E12").coords));

    Subspace two = qalg::two_sided_ideal_span(m, {named(m, "E11")});
    CHECK(two.dim() == 4);

    AlgebraPtr t = qalg::catalog_Tri(3);
    Subspace strict = qalg::two_sided_ideal_span(t, {named(t, "e12"), named(t, "e23")});
    CHECK(strict.dim() == 3);
    CHECK(strict.contains(named(t, "e13").coords));
}

TEST_CASE("quotient by a two sided ideal is a verified homomorphism") {
    AlgebraPtr t = qalg::catalog_Tri(2);
    Subspace rad = qalg::two_sided_ideal_span(t, {named(t, "e12")});
    qalg::QuotientResult q = qalg::quotient(t, rad);
    CHECK(q.algebra->dim() == 2);
    CHECK(qalg::validate(*q.algebra).ok);
    std::mt19937_64 rng(41);
    for (int k = 0; k < 20; ++k) {
        Element x = random_element(t, rng);
        Element y = random_element(t, rng);
        CHECK(qalg::project_element(q, x * y) ==
              qalg::project_element(q, x) * qalg::project_element(q, y));
    }
    CHECK(qalg::project_element(q, qalg::unit_element(t)) == qalg::unit_element(q.algebra));
}

TEST_CASE("scramble and change of basis round trip") {
    AlgebraPtr a = qalg::catalog_Quat(Rational(-1), Rational(-1));
    qalg::ScrambleResult s = qalg::scramble_basis(a, 97);
    CHECK(qalg::validate(*s.algebra).ok);
    CHECK(s.algebra->unit_coords() == a->unit_coords());

    qalg::QMatrix inverse = qalg::invert_matrix(s.change);
    AlgebraPtr back = qalg::apply_change_of_basis(s.algebra, inverse, a->name());
    for (std::size_t i = 0; i < a->dim(); ++i) {
        for (std::size_t j = 0; j < a->dim(); ++j) {
            Element p = qalg::basis_element(back, i) * qalg::basis_element(back, j);
            Element q = qalg::basis_element(a, i) * qalg::basis_element(a, j);
            CHECK(p.coords == q.coords);
        }
    }
}

TEST_CASE("direct product and tensor glue units correctly") {
    AlgebraPtr p =
        qalg::direct_product(qalg::catalog_Q(), qalg::matrix_algebra(qalg::catalog_Q(), 2));
    CHECK(p->dim() == 5);
    Element l = named(p, "l.1");
    Element r = named(p, "r.E11") + named(p, "r.E22");
    CHECK(l + r == qalg::unit_element(p));
    CHECK((l * r).is_zero());
    CHECK(l * l == l);

    AlgebraPtr t = qalg::tensor_product(qalg::catalog_Cneg(Rational(-1)),
                                        qalg::truncated_polynomial_algebra(2));
    CHECK(t->dim() == 4);
    CHECK(t->basis_names() == std::vector<std::string>{"1", "eps", "u", "u*eps"});
    CHECK(named(t, "u") * named(t, "u") == Rational(-1) * qalg::unit_element(t));
    CHECK((named(t, "u*eps") * named(t, "eps")).is_zero());
}

TEST_CASE("validate pinpoints a broken table") {
    // Corrupt one structure constant of Tri(2): e11 * e12 = e12 becomes 2*e12.
    AlgebraPtr t = qalg::catalog_Tri(2);
    std::vector<Rational> mult = t->structure_constants();
    const std::size_t n = t->dim();
    mult[(0 * n + 1) * n + 1] = Rational(2);
    AlgebraPtr broken =
        qalg::Algebra::make("broken", t->basis_names(), t->unit_coords(), mult);
    qalg::ValidationReport r = qalg::validate(*broken);
    CHECK_FALSE(r.ok);
    CHECK(r.kind == qalg::ValidationReport::Failure::Unit);
    CHECK_FALSE(r.message.empty());
}
