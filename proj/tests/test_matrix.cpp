#include "qalg/matrix.hpp"
#include "qalg/subspace.hpp"

#include <doctest.h>

#include <random>

using qalg::QMatrix;
using qalg::Rational;
using qalg::Subspace;
using qalg::Vec;

namespace {

QMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rref collapses a dependent row") {
    QMatrix m = QMatrix::from_rows({{Rational(2), Rational(4)}, {Rational(1), Rational(2)}}, 2);
    qalg::RrefResult r = qalg::rref(m);
    CHECK(r.rank == 1);
    REQUIRE(r.pivots.size() == 1);
    CHECK(r.pivots[0] == 0);
    CHECK(r.reduced.at(0, 0) == Rational(1));
    CHECK(r.reduced.at(0, 1) == Rational(2));
    CHECK(r.reduced.at(1, 0) == Rational(0));
    CHECK(r.reduced.at(1, 1) == Rational(0));
}

TEST_CASE("rref is idempotent on random matrices") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 40; ++t) {
        QMatrix m = random_matrix(rng, 4, 5);
        qalg::RrefResult r = qalg::rref(m);
        qalg::RrefResult again = qalg::rref(r.reduced);
        CHECK(again.reduced == r.reduced);
        CHECK(again.rank == r.rank);
    }
}

TEST_CASE("kernel vectors satisfy m v = 0 and are canonical") {
    QMatrix m = QMatrix::from_rows({{Rational(1), Rational(2)}}, 2);
    Subspace k = qalg::kernel(m);
    REQUIRE(k.dim() == 1);
    CHECK(k.basis_vector(0) == Vec{Rational(1), Rational(-1, 2)});

    std::mt19937_64 rng(99);
    for (int t = 0; t < 30; ++t) {
        QMatrix a = random_matrix(rng, 3, 6);
        Subspace ker = qalg::kernel(a);
        CHECK(ker.dim() + qalg::rref(a).rank == 6);
        for (std::size_t i = 0; i < ker.dim(); ++i) {
            Vec v = ker.basis_vector(i);
            Vec image = a * v;
            CHECK(qalg::vec_is_zero(image));
        }
    }
}

TEST_CASE("solve_linear returns the free-variables-at-zero solution") {
    QMatrix m = QMatrix::from_rows({{Rational(1), Rational(1)}}, 2);
    auto x = qalg::solve_linear(m, {Rational(3)});
    REQUIRE(x.has_value());
    CHECK(*x == Vec{Rational(3), Rational(0)});

    QMatrix bad = QMatrix::from_rows({{Rational(1), Rational(1)}, {Rational(1), Rational(1)}}, 2);
    CHECK_FALSE(qalg::solve_linear(bad, {Rational(1), Rational(2)}).has_value());
}

TEST_CASE("invert_matrix inverts and rejects singular input") {
    QMatrix u = QMatrix::from_rows({{Rational(1), Rational(1)}, {Rational(0), Rational(1)}}, 2);
    QMatrix ui = qalg::invert_matrix(u);
    CHECK(u * ui == QMatrix::identity(2));
    CHECK(ui * u == QMatrix::identity(2));

    QMatrix s = QMatrix::from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}, 2);
    CHECK_THROWS_AS(qalg::invert_matrix(s), std::domain_error);

    std::mt19937_64 rng(7);
    int inverted = 0;
    while (inverted < 20) {
        QMatrix m = random_matrix(rng, 4, 4);
        try {
            QMatrix mi = qalg::invert_matrix(m);
            CHECK(m * mi == QMatrix::identity(4));
            CHECK(mi * m == QMatrix::identity(4));
            ++inverted;
        } catch (const std::domain_error&) {
            // draw again
        }
    }
}

TEST_CASE("matrix transpose and multiplication agree with definitions") {
    std::mt19937_64 rng(31);
    QMatrix a = random_matrix(rng, 3, 4);
    QMatrix b = random_matrix(rng, 4, 2);
    QMatrix ab = a * b;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            Rational s(0);
            for (std::size_t k = 0; k < 4; ++k) s += a.at(i, k) * b.at(k, j);
            CHECK(ab.at(i, j) == s);
        }
    }
    QMatrix at = a.transpose();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(at.at(j, i) == a.at(i, j));
}

TEST_CASE("subspace equality is representation independent") {
    Subspace a = Subspace::span(2, {{Rational(1), Rational(1)}, {Rational(0), Rational(1)}});
    Subspace b = Subspace::span(2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    CHECK(a == b);
    CHECK(a == Subspace::full(2));

    Subspace line = Subspace::span(2, {{Rational(2), Rational(4)}, {Rational(-1), Rational(-2)}});
    CHECK(line.dim() == 1);
    CHECK(line.basis_vector(0) == Vec{Rational(1), Rational(2)});
}

TEST_CASE("subspace membership and coordinates") {
    Subspace s = Subspace::span(3, {{Rational(1), Rational(0), Rational(1)},
                                    {Rational(0), Rational(1), Rational(1)}});
    CHECK(s.contains({Rational(2), Rational(3), Rational(5)}));
    CHECK_FALSE(s.contains({Rational(1), Rational(0), Rational(0)}));

    auto c = s.coordinates_of({Rational(2), Rational(3), Rational(5)});
    REQUIRE(c.has_value());
    CHECK(*c == Vec{Rational(2), Rational(3)});
    CHECK_FALSE(s.coordinates_of({Rational(0), Rational(0), Rational(1)}).has_value());
}

TEST_CASE("subspace sum is the join") {
    Subspace x = Subspace::span(3, {{Rational(1), Rational(0), Rational(0)}});
    Subspace y = Subspace::span(3, {{Rational(0), Rational(1), Rational(0)}});
    Subspace both = x + y;
    CHECK(both.dim() == 2);
    CHECK(both.contains({Rational(3), Rational(-2), Rational(0)}));
    CHECK(x + x == x);
    CHECK((x + y) + y == both);
}
