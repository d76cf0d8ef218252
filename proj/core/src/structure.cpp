#include "qalg/structure.hpp"

#include "qalg/lifting.hpp"

#include <stdexcept>
#include <string>

namespace qalg {

namespace {

// gram[i][j] = tr L_{e_i e_j}, computed from the per-basis traces
// T_l = tr L_{e_l}, so gram[i][j] = sum_l mult[i][j][l] T_l.
QMatrix trace_form(const Algebra& a) {
    const std::size_t n = a.dim();
    Vec t(n);
    for (std::size_t l = 0; l < n; ++l) {
        Rational s;
        for (std::size_t r = 0; r < n; ++r) s += a.structure(l, r, r);
        t[l] = s;
    }
    QMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rational s;
            for (std::size_t l = 0; l < n; ++l) {
                const Rational& c = a.structure(i, j, l);
                if (!c.is_zero()) s += c * t[l];
            }
            g.at(i, j) = s;
        }
    }
    return g;
}

std::size_t ceil_log2(std::size_t v) {
    std::size_t t = 0;
    while ((std::size_t(1) << t) < v) ++t;
    return t;
}

}  // namespace

std::size_t nilpotency_index(const AlgebraPtr& a, const Subspace& s) {
    if (s.ambient_dim() != a->dim()) {
        throw std::invalid_argument("nilpotency_index: ambient mismatch");
    }
    const std::size_t bound = a->dim() + 1;
    Subspace cur = s;
    std::size_t k = 1;
    while (cur.dim() != 0) {
        if (k > bound) {
            throw NotNilpotentError(
                "nilpotency_index: powers did not vanish within the dimension bound", cur);
        }
        std::vector<Vec> rows;
        rows.reserve(cur.dim() * s.dim());
        for (std::size_t r = 0; r < cur.dim(); ++r) {
            Element u = make_element(a, cur.basis_vector(r));
            for (std::size_t c = 0; c < s.dim(); ++c) {
                rows.push_back((u * make_element(a, s.basis_vector(c))).coords);
            }
        }
        Subspace next = Subspace::span(a->dim(), rows);
        if (next == cur) {
            throw NotNilpotentError("nilpotency_index: powers stabilized at a nonzero subspace",
                                    cur);
        }
        cur = std::move(next);
        ++k;
    }
    return k;
}

RadicalReport radical(const AlgebraPtr& a) {
    QMatrix gram = trace_form(*a);
    Subspace rad = kernel(gram);

    if (!is_two_sided_ideal(a, rad)) {
        throw std::logic_error(
            "radical: the kernel of the trace form is not a two-sided ideal; "
            "the presentation is not an associative unital algebra");
    }
    std::size_t nu;
    try {
        nu = nilpotency_index(a, rad);
    } catch (const NotNilpotentError&) {
        throw std::logic_error(
            "radical: the kernel of the trace form is not nilpotent; "
            "the presentation is not an associative unital algebra");
    }
    if (rad.dim() > 0) {
        QuotientResult q = quotient(a, rad);
        if (kernel(trace_form(*q.algebra)).dim() != 0) {
            throw std::logic_error("radical: the quotient still has a degenerate trace form");
        }
    }
    return RadicalReport{std::move(rad), nu, std::move(gram)};
}

JordanChevalley jordan_chevalley(const Element& b) {
    const std::size_t n = b.algebra->dim();
    Poly mu = minimal_poly_of_element(b);
    Poly sep = squarefree_part(mu);

    // sep(b) is nilpotent of order at most deg(mu) <= n, so the quadratic
    // convergence needs at most ceil(log2 n) + 1 steps.
    NewtonTrace trace = newton_polynomial_root(b, sep, ceil_log2(n + 1) + 1);
    Element s = trace.iterates.back();
    Element nil = b - s;

    if (!eval_poly(sep, s).is_zero()) {
        throw std::logic_error("jordan_chevalley: separable part does not annihilate the result");
    }
    if (s * b != b * s) {
        throw std::logic_error("jordan_chevalley: result does not commute with the input");
    }
    Element p = nil;
    std::size_t k = 1;
    while (!p.is_zero() && k <= n) {
        p = p * nil;
        ++k;
    }
    if (!p.is_zero()) {
        throw std::logic_error("jordan_chevalley: complement is not nilpotent");
    }
    return JordanChevalley{std::move(s), std::move(nil), std::move(mu), std::move(sep),
                           trace.iterates.size() - 1};
}

}  // namespace qalg
