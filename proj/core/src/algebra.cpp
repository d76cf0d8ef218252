#include "qalg/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace qalg {

namespace {

Vec mul_coords(const Algebra& a, const Vec& x, const Vec& y) {
    const std::size_t n = a.dim();
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Rational c = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& s = a.structure(i, j, k);
                if (!s.is_zero()) out[k] += c * s;
            }
        }
    }
    return out;
}

// e_i * x
Vec mul_basis_vec(const Algebra& a, std::size_t i, const Vec& x) {
    const std::size_t n = a.dim();
    Vec out(n);
    for (std::size_t l = 0; l < n; ++l) {
        if (x[l].is_zero()) continue;
        for (std::size_t m = 0; m < n; ++m) {
            const Rational& s = a.structure(i, l, m);
            if (!s.is_zero()) out[m] += x[l] * s;
        }
    }
    return out;
}

// x * e_k
Vec mul_vec_basis(const Algebra& a, const Vec& x, std::size_t k) {
    const std::size_t n = a.dim();
    Vec out(n);
    for (std::size_t l = 0; l < n; ++l) {
        if (x[l].is_zero()) continue;
        for (std::size_t m = 0; m < n; ++m) {
            const Rational& s = a.structure(l, k, m);
            if (!s.is_zero()) out[m] += x[l] * s;
        }
    }
    return out;
}

void require_same_algebra(const Element& x, const Element& y, const char* op) {
    if (x.algebra.get() != y.algebra.get()) {
        throw std::invalid_argument(std::string(op) + ": elements of different algebras");
    }
}

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ")";
    return os.str();
}

}  // namespace

AlgebraPtr Algebra::make(std::string name,
                         std::vector<std::string> basis_names,
                         Vec unit,
                         std::vector<Rational> mult) {
    const std::size_t n = basis_names.size();
    if (n == 0) throw std::invalid_argument("Algebra::make: dimension must be at least 1");
    if (unit.size() != n) throw std::invalid_argument("Algebra::make: unit size mismatch");
    if (mult.size() != n * n * n) {
        throw std::invalid_argument("Algebra::make: structure constant count mismatch");
    }
    auto a = std::shared_ptr<Algebra>(new Algebra());
    a->name_ = std::move(name);
    a->n_ = n;
    a->basis_names_ = std::move(basis_names);
    a->unit_ = std::move(unit);
    a->mult_ = std::move(mult);
    return a;
}

Vec Algebra::basis_product(std::size_t i, std::size_t j) const {
    Vec v(n_);
    for (std::size_t k = 0; k < n_; ++k) v[k] = structure(i, j, k);
    return v;
}

bool Algebra::same_structure(const Algebra& other) const {
    return n_ == other.n_ && unit_ == other.unit_ && mult_ == other.mult_;
}

ValidationReport validate(const Algebra& a) {
    ValidationReport rep;
    const std::size_t n = a.dim();
    if (n > kMaxAlgebraDim) {
        rep.ok = false;
        rep.kind = ValidationReport::Failure::Shape;
        rep.message = "dimension " + std::to_string(n) + " exceeds the supported maximum " +
                      std::to_string(kMaxAlgebraDim);
        return rep;
    }
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei(n);
        ei[i] = Rational(1);
        Vec left = mul_coords(a, a.unit_coords(), ei);
        Vec right = mul_coords(a, ei, a.unit_coords());
        if (left != ei || right != ei) {
            rep.ok = false;
            rep.kind = ValidationReport::Failure::Unit;
            rep.i = i;
            rep.lhs = left;
            rep.rhs = right;
            rep.message = "unit law fails at basis index " + std::to_string(i) +
                          ": 1*e = " + vec_str(left) + ", e*1 = " + vec_str(right);
            return rep;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Vec pij = a.basis_product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = mul_vec_basis(a, pij, k);
                Vec rhs = mul_basis_vec(a, i, a.basis_product(j, k));
                if (lhs != rhs) {
                    rep.ok = false;
                    rep.kind = ValidationReport::Failure::Associativity;
                    rep.i = i;
                    rep.j = j;
                    rep.k = k;
                    rep.lhs = lhs;
                    rep.rhs = rhs;
                    rep.message = "associativity fails at triple (" + std::to_string(i) + ", " +
                                  std::to_string(j) + ", " + std::to_string(k) +
                                  "): (ei*ej)*ek = " + vec_str(lhs) +
                                  ", ei*(ej*ek) = " + vec_str(rhs);
                    return rep;
                }
            }
        }
    }
    return rep;
}

Element make_element(AlgebraPtr a, Vec coords) {
    if (!a) throw std::invalid_argument("make_element: null algebra");
    if (coords.size() != a->dim()) {
        throw std::invalid_argument("make_element: coordinate size mismatch");
    }
    return Element{std::move(a), std::move(coords)};
}

Element zero_element(const AlgebraPtr& a) { return make_element(a, Vec(a->dim())); }

Element unit_element(const AlgebraPtr& a) { return make_element(a, a->unit_coords()); }

Element basis_element(const AlgebraPtr& a, std::size_t i) {
    if (i >= a->dim()) throw std::invalid_argument("basis_element: index out of range");
    Vec v(a->dim());
    v[i] = Rational(1);
    return make_element(a, std::move(v));
}

Element scalar_element(const AlgebraPtr& a, const Rational& c) {
    return make_element(a, vec_scale(c, a->unit_coords()));
}

bool operator==(const Element& x, const Element& y) {
    require_same_algebra(x, y, "Element::operator==");
    return x.coords == y.coords;
}

bool operator!=(const Element& x, const Element& y) { return !(x == y); }

Element operator+(const Element& x, const Element& y) {
    require_same_algebra(x, y, "Element::operator+");
    return Element{x.algebra, vec_add(x.coords, y.coords)};
}

Element operator-(const Element& x, const Element& y) {
    require_same_algebra(x, y, "Element::operator-");
    return Element{x.algebra, vec_sub(x.coords, y.coords)};
}

Element operator-(const Element& x) {
    return Element{x.algebra, vec_scale(Rational(-1), x.coords)};
}

Element operator*(const Element& x, const Element& y) {
    require_same_algebra(x, y, "Element::operator*");
    return Element{x.algebra, mul_coords(*x.algebra, x.coords, y.coords)};
}

Element operator*(const Rational& c, const Element& x) {
    return Element{x.algebra, vec_scale(c, x.coords)};
}

Element anticommutator(const Element& x, const Element& y) { return x * y + y * x; }

Element pow_element(const Element& x, std::size_t k) {
    Element acc = unit_element(x.algebra);
    Element sq = x;
    while (k > 0) {
        if (k & 1) acc = acc * sq;
        k >>= 1;
        if (k) sq = sq * sq;
    }
    return acc;
}

QMatrix left_mult_matrix(const Element& a) {
    const Algebra& alg = *a.algebra;
    const std::size_t n = alg.dim();
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec col = mul_vec_basis(alg, a.coords, i);
        for (std::size_t r = 0; r < n; ++r) m.at(r, i) = col[r];
    }
    return m;
}

QMatrix right_mult_matrix(const Element& a) {
    const Algebra& alg = *a.algebra;
    const std::size_t n = alg.dim();
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec col = mul_basis_vec(alg, i, a.coords);
        for (std::size_t r = 0; r < n; ++r) m.at(r, i) = col[r];
    }
    return m;
}

std::optional<Element> invert(const Element& a) {
    QMatrix la = left_mult_matrix(a);
    auto x = solve_linear(la, a.algebra->unit_coords());
    if (!x) return std::nullopt;
    Element inv = make_element(a.algebra, *x);
    Element one = unit_element(a.algebra);
    if (a * inv != one) return std::nullopt;
    if (inv * a != one) {
        // Impossible in an associative unital finite-dimensional algebra;
        // reaching this means the structure constants are defective.
        throw std::logic_error("invert: left inverse is not a right inverse");
    }
    return inv;
}

Poly minimal_poly_of_element(const Element& a) {
    const std::size_t n = a.algebra->dim();
    std::vector<Vec> powers;
    powers.push_back(a.algebra->unit_coords());
    Element cur = unit_element(a.algebra);
    for (std::size_t k = 1; k <= n + 1; ++k) {
        cur = cur * a;
        QMatrix sys(n, k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < n; ++i) sys.at(i, j) = powers[j][i];
        if (auto c = solve_linear(sys, cur.coords)) {
            Vec coeffs(k + 1);
            for (std::size_t j = 0; j < k; ++j) coeffs[j] = -(*c)[j];
            coeffs[k] = Rational(1);
            Poly mu(std::move(coeffs));
            if (!eval_poly(mu, a).is_zero()) {
                throw std::logic_error("minimal_poly_of_element: verification failed");
            }
            return mu;
        }
        powers.push_back(cur.coords);
    }
    throw std::logic_error("minimal_poly_of_element: no dependence up to the dimension bound");
}

Element eval_poly(const Poly& f, const Element& a) {
    Element acc = zero_element(a.algebra);
    for (std::size_t k = f.coeffs().size(); k-- > 0;) {
        acc = acc * a;
        const Rational& c = f.coeff(k);
        if (!c.is_zero()) acc = acc + scalar_element(a.algebra, c);
    }
    return acc;
}

Subspace left_ideal_span(const AlgebraPtr& a, const std::vector<Element>& gens) {
    const std::size_t n = a->dim();
    std::vector<Vec> rows;
    for (const Element& g : gens) {
        if (g.algebra.get() != a.get()) {
            throw std::invalid_argument("left_ideal_span: generator from a different algebra");
        }
        for (std::size_t i = 0; i < n; ++i) rows.push_back(mul_basis_vec(*a, i, g.coords));
    }
    return Subspace::span(n, rows);
}

Subspace two_sided_ideal_span(const AlgebraPtr& a, const std::vector<Element>& gens) {
    const std::size_t n = a->dim();
    std::vector<Vec> rows;
    for (const Element& g : gens) {
        if (g.algebra.get() != a.get()) {
            throw std::invalid_argument("two_sided_ideal_span: generator from a different algebra");
        }
        rows.push_back(g.coords);
    }
    Subspace s = Subspace::span(n, rows);
    for (;;) {
        std::vector<Vec> next;
        for (std::size_t r = 0; r < s.dim(); ++r) next.push_back(s.basis_vector(r));
        for (std::size_t r = 0; r < s.dim(); ++r) {
            Vec v = s.basis_vector(r);
            for (std::size_t i = 0; i < n; ++i) {
                next.push_back(mul_basis_vec(*a, i, v));
                next.push_back(mul_vec_basis(*a, v, i));
            }
        }
        Subspace grown = Subspace::span(n, next);
        if (grown == s) return s;
        s = std::move(grown);
    }
}

bool is_left_ideal(const AlgebraPtr& a, const Subspace& s) {
    if (s.ambient_dim() != a->dim()) throw std::invalid_argument("is_left_ideal: ambient mismatch");
    for (std::size_t r = 0; r < s.dim(); ++r) {
        Vec v = s.basis_vector(r);
        for (std::size_t i = 0; i < a->dim(); ++i) {
            if (!s.contains(mul_basis_vec(*a, i, v))) return false;
        }
    }
    return true;
}

bool is_two_sided_ideal(const AlgebraPtr& a, const Subspace& s) {
    if (s.ambient_dim() != a->dim()) {
        throw std::invalid_argument("is_two_sided_ideal: ambient mismatch");
    }
    for (std::size_t r = 0; r < s.dim(); ++r) {
        Vec v = s.basis_vector(r);
        for (std::size_t i = 0; i < a->dim(); ++i) {
            if (!s.contains(mul_basis_vec(*a, i, v))) return false;
            if (!s.contains(mul_vec_basis(*a, v, i))) return false;
        }
    }
    return true;
}

QuotientResult quotient(const AlgebraPtr& a, const Subspace& ideal) {
    const std::size_t n = a->dim();
    if (ideal.ambient_dim() != n) throw std::invalid_argument("quotient: ambient mismatch");
    if (!is_two_sided_ideal(a, ideal)) {
        throw std::invalid_argument("quotient: the subspace is not a two-sided ideal");
    }
    if (ideal.dim() == n) {
        throw std::invalid_argument("quotient: the ideal is the whole algebra");
    }
    const std::size_t m = n - ideal.dim();

    // Pivot columns of the ideal's RREF basis; the complementary coordinates
    // index the quotient basis.
    std::vector<bool> is_pivot(n, false);
    std::vector<std::size_t> pivot_of_row(ideal.dim());
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
        std::size_t p = 0;
        while (ideal.basis().at(r, p).is_zero()) ++p;
        pivot_of_row[r] = p;
        is_pivot[p] = true;
    }
    std::vector<std::size_t> survivors;
    for (std::size_t j = 0; j < n; ++j) {
        if (!is_pivot[j]) survivors.push_back(j);
    }

    // Linear projection: subtract the unique ideal combination matching the
    // pivot coordinates, then restrict to the surviving coordinates.
    auto project = [&](const Vec& v) {
        Vec rem = v;
        for (std::size_t r = 0; r < ideal.dim(); ++r) {
            Rational c = rem[pivot_of_row[r]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const Rational& e = ideal.basis().at(r, j);
                if (!e.is_zero()) rem[j] -= c * e;
            }
        }
        Vec out(m);
        for (std::size_t t = 0; t < m; ++t) out[t] = rem[survivors[t]];
        return out;
    };

    QMatrix proj(m, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec ej(n);
        ej[j] = Rational(1);
        Vec img = project(ej);
        for (std::size_t r = 0; r < m; ++r) proj.at(r, j) = img[r];
    }

    std::vector<std::string> names;
    names.reserve(m);
    for (std::size_t t : survivors) names.push_back(a->basis_names()[t]);
    Vec unit_q = project(a->unit_coords());
    std::vector<Rational> mult_q(m * m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            Vec prod = project(a->basis_product(survivors[i], survivors[j]));
            for (std::size_t k = 0; k < m; ++k) mult_q[(i * m + j) * m + k] = prod[k];
        }
    }
    AlgebraPtr q = Algebra::make(a->name() + "/I", std::move(names), std::move(unit_q),
                                 std::move(mult_q));

    // The projection must be a unital homomorphism onto the quotient table.
    if (q->unit_coords() != project(a->unit_coords())) {
        throw std::logic_error("quotient: projected unit mismatch");
    }
    for (std::size_t p = 0; p < n; ++p) {
        Vec ep(n);
        ep[p] = Rational(1);
        for (std::size_t r = 0; r < n; ++r) {
            Vec er(n);
            er[r] = Rational(1);
            Vec lhs = project(a->basis_product(p, r));
            Vec rhs = mul_coords(*q, project(ep), project(er));
            if (lhs != rhs) {
                throw std::logic_error("quotient: projection is not multiplicative");
            }
        }
    }
    return QuotientResult{q, proj};
}

Element project_element(const QuotientResult& q, const Element& x) {
    if (x.coords.size() != q.projection.cols()) {
        throw std::invalid_argument("project_element: coordinate size mismatch");
    }
    return make_element(q.algebra, q.projection * x.coords);
}

}  // namespace qalg
