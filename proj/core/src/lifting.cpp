#include "qalg/lifting.hpp"

#include "qalg/structure.hpp"

#include <stdexcept>
#include <string>

namespace qalg {

namespace {

std::size_t ceil_log2(std::size_t v) {
    std::size_t t = 0;
    while ((std::size_t(1) << t) < v) ++t;
    return t;
}

void check_ideal_inputs(const AlgebraPtr& a, const Subspace& ideal, const Element& b,
                        const char* who) {
    if (b.algebra.get() != a.get()) {
        throw std::invalid_argument(std::string(who) + ": element from a different algebra");
    }
    if (ideal.ambient_dim() != a->dim()) {
        throw std::invalid_argument(std::string(who) + ": ideal ambient mismatch");
    }
    if (!is_two_sided_ideal(a, ideal)) {
        throw std::invalid_argument(std::string(who) + ": the subspace is not a two-sided ideal");
    }
}

// Index of e_{p,q} (0-based, p <= q) in the row-major upper triangular basis.
std::size_t tri_index(std::size_t n, std::size_t p, std::size_t q) {
    return p * n - p * (p - 1) / 2 + (q - p);
}

}  // namespace

NewtonTrace newton_polynomial_root(const Element& b, const Poly& f, std::size_t max_steps) {
    if (f.is_zero()) {
        throw std::invalid_argument("newton_polynomial_root: zero polynomial");
    }
    Poly fp = f.derivative();
    Poly g = gcd_poly(f, fp);
    if (g.degree() > 0) {
        throw NotSeparableError("newton_polynomial_root: repeated factor, gcd(f, f') = " + g.str(),
                                g);
    }
    PolyEgcd eg = egcd(f, fp);  // 1 = u f + v f'

    NewtonTrace tr;
    Element a = b;
    tr.iterates.push_back(a);
    Element res = eval_poly(f, a);
    tr.residual_support.push_back(vec_support(res.coords));
    std::size_t steps = 0;
    while (!res.is_zero()) {
        if (steps >= max_steps) {
            throw std::logic_error("newton_polynomial_root: residual still nonzero after " +
                                   std::to_string(max_steps) + " steps");
        }
        a = a - eval_poly(eg.v, a) * res;
        ++steps;
        tr.iterates.push_back(a);
        res = eval_poly(f, a);
        tr.residual_support.push_back(vec_support(res.coords));
    }
    return tr;
}

LiftResult hensel_lift(const AlgebraPtr& a, const Subspace& ideal, const Element& b,
                       const Poly& f) {
    check_ideal_inputs(a, ideal, b, "hensel_lift");
    std::size_t nu = nilpotency_index(a, ideal);
    if (f.is_zero()) throw std::invalid_argument("hensel_lift: zero polynomial");
    Poly g = gcd_poly(f, f.derivative());
    if (g.degree() > 0) {
        throw NotSeparableError("hensel_lift: f has a repeated factor, gcd(f, f') = " + g.str(),
                                g);
    }
    Element r0 = eval_poly(f, b);
    if (!ideal.contains(r0.coords)) {
        throw ResidueNotInIdealError("hensel_lift: f(b) does not lie in the ideal", r0);
    }

    NewtonTrace tr = newton_polynomial_root(b, f, ceil_log2(nu));
    LiftResult out{tr.iterates.back(), tr.iterates.size() - 1, std::move(tr.residual_support),
                   std::move(tr.iterates), nu};

    if (!eval_poly(f, out.lifted).is_zero()) {
        throw std::logic_error("hensel_lift: residual verification failed");
    }
    if (!ideal.contains((out.lifted - b).coords)) {
        throw std::logic_error("hensel_lift: the lift left the congruence class of b");
    }
    if (out.lifted * b != b * out.lifted) {
        throw std::logic_error("hensel_lift: the lift does not commute with b");
    }
    return out;
}

LiftResult lift_idempotent(const AlgebraPtr& a, const Subspace& ideal, const Element& b) {
    return hensel_lift(a, ideal, b, Poly({Rational(0), Rational(-1), Rational(1)}));
}

Element lift_mth_root(const AlgebraPtr& a, const Subspace& ideal, const Element& b,
                      std::size_t m, const Rational& beta) {
    if (m == 0) throw std::invalid_argument("lift_mth_root: m must be at least 1");
    if (beta.is_zero()) throw std::invalid_argument("lift_mth_root: beta must be nonzero");
    check_ideal_inputs(a, ideal, b, "lift_mth_root");
    std::size_t nu = nilpotency_index(a, ideal);

    Element residue = pow_element(b, m) - scalar_element(a, beta);
    if (!ideal.contains(residue.coords)) {
        throw ResidueNotInIdealError("lift_mth_root: b^m - beta does not lie in the ideal",
                                     residue);
    }
    Element w = beta.inverse() * residue;  // w = b^m / beta - 1, in the ideal

    // z = (1 + w)^{-1/m} as a binomial series; exact because w^nu = 0.
    Rational exponent(-1, static_cast<long>(m));
    Rational c(1);
    Element z = unit_element(a);
    Element wp = unit_element(a);
    for (std::size_t t = 1; t < nu; ++t) {
        c = c * (exponent - Rational(static_cast<long>(t) - 1)) / Rational(static_cast<long>(t));
        wp = wp * w;
        if (wp.is_zero()) break;
        z = z + c * wp;
    }
    Element result = z * b;

    if (pow_element(result, m) != scalar_element(a, beta)) {
        throw std::logic_error("lift_mth_root: the corrected element is not an exact root");
    }
    if (!ideal.contains((result - b).coords)) {
        throw std::logic_error("lift_mth_root: the correction left the congruence class of b");
    }
    return result;
}

bool NoLiftWitness::verify() const {
    Element res = eval_poly(polynomial, element);
    if (res != residue) return false;
    if (res.is_zero()) return false;
    if (!ideal.contains(res.coords)) return false;
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
        Element y = make_element(algebra, ideal.basis_vector(r));
        if (eval_poly(polynomial, element + y) != res) return false;
    }
    return true;
}

NoLiftWitness inseparable_witness(const Poly& f, const Rational& beta1) {
    if (f.degree() < 1) {
        throw std::invalid_argument("inseparable_witness: polynomial must be nonconstant");
    }
    std::size_t k1 = root_multiplicity(f, beta1);
    if (k1 < 2) {
        if (is_separable(f)) {
            throw std::invalid_argument(
                "inseparable_witness: f is separable, so every root lifts");
        }
        throw std::invalid_argument("inseparable_witness: the root has multiplicity " +
                                    std::to_string(k1) + ", need at least 2");
    }

    const std::size_t size = k1 + 1;
    AlgebraPtr a = catalog_Tri(size);
    Element top = basis_element(a, tri_index(size, 0, size - 1));
    Subspace ideal = Subspace::span(a->dim(), {top.coords});

    Vec coords = vec_scale(beta1, a->unit_coords());
    for (std::size_t p = 0; p + 1 < size; ++p) {
        coords[tri_index(size, p, p + 1)] += Rational(1);
    }
    Element b = make_element(a, std::move(coords));

    Element residue = eval_poly(f, b);
    if (residue.is_zero() || !ideal.contains(residue.coords)) {
        throw std::logic_error("inseparable_witness: construction failed");
    }
    NoLiftWitness w{a,
                    std::move(ideal),
                    std::move(b),
                    f,
                    std::move(residue),
                    "every y in the ideal has y^2 = 0 and y*b = b*y = beta1*y, so "
                    "f(b + y) = f(b) + f'(beta1)*y = f(b): the repeated root kills the "
                    "derivative term and the residue cannot be corrected"};
    if (!w.verify()) {
        throw std::logic_error("inseparable_witness: verification failed");
    }
    return w;
}

QuaternionLiftFeasibility quaternion_lift_feasibility(const AlgebraPtr& alg, const Subspace& ideal,
                                                      const Element& x, const Element& y) {
    check_ideal_inputs(alg, ideal, x, "quaternion_lift_feasibility");
    if (y.algebra.get() != alg.get()) {
        throw std::invalid_argument(
            "quaternion_lift_feasibility: element from a different algebra");
    }
    const std::size_t n = alg->dim();
    const std::size_t d = ideal.dim();
    for (std::size_t r = 0; r < d; ++r) {
        Element u = make_element(alg, ideal.basis_vector(r));
        for (std::size_t s = 0; s < d; ++s) {
            if (!(u * make_element(alg, ideal.basis_vector(s))).is_zero()) {
                throw std::invalid_argument(
                    "quaternion_lift_feasibility: the ideal does not square to zero");
            }
        }
    }
    Element one = unit_element(alg);
    Element rx = x * x + one;
    Element ry = y * y + one;
    Element rxy = anticommutator(x, y);
    if (!ideal.contains(rx.coords)) {
        throw std::invalid_argument("quaternion_lift_feasibility: x^2 + 1 is not in the ideal");
    }
    if (!ideal.contains(ry.coords)) {
        throw std::invalid_argument("quaternion_lift_feasibility: y^2 + 1 is not in the ideal");
    }

    // Unknowns: corrections u = sum s_i w_i, v = sum t_i w_i over the ideal
    // basis w. Since the ideal squares to zero,
    //   (x+u)^2 = -1      <=>  x o u = -(x^2 + 1)
    //   (y+v)^2 = -1      <=>  y o v = -(y^2 + 1)
    //   (x+u) o (y+v) = 0 <=>  x o v + u o y = -(x o y)
    // where o is the anticommutator: an affine system in (s, t).
    QMatrix m(3 * n, 2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        Element w = make_element(alg, ideal.basis_vector(i));
        Vec xw = anticommutator(x, w).coords;
        Vec yw = anticommutator(y, w).coords;
        for (std::size_t r = 0; r < n; ++r) {
            m.at(r, i) = xw[r];
            m.at(2 * n + r, i) = yw[r];
            m.at(n + r, d + i) = yw[r];
            m.at(2 * n + r, d + i) = xw[r];
        }
    }
    Vec rhs(3 * n);
    for (std::size_t r = 0; r < n; ++r) {
        rhs[r] = -rx.coords[r];
        rhs[n + r] = -ry.coords[r];
        rhs[2 * n + r] = -rxy.coords[r];
    }

    QuaternionLiftFeasibility out;
    out.system_rank = rref(m).rank;
    {
        QMatrix aug(3 * n, 2 * d + 1);
        for (std::size_t r = 0; r < 3 * n; ++r) {
            for (std::size_t c = 0; c < 2 * d; ++c) aug.at(r, c) = m.at(r, c);
            aug.at(r, 2 * d) = rhs[r];
        }
        out.augmented_rank = rref(aug).rank;
    }

    auto sol = solve_linear(m, rhs);
    if (!sol) {
        out.feasible = false;
        return out;
    }
    Vec ucoords(n), vcoords(n);
    for (std::size_t i = 0; i < d; ++i) {
        const Vec& w = ideal.basis_vector(i);
        ucoords = vec_add(ucoords, vec_scale((*sol)[i], w));
        vcoords = vec_add(vcoords, vec_scale((*sol)[d + i], w));
    }
    Element uc = make_element(alg, std::move(ucoords));
    Element vc = make_element(alg, std::move(vcoords));
    Element a = x + uc;
    Element b = y + vc;
    Element minus_one = -one;
    if (a * a != minus_one || b * b != minus_one || !anticommutator(a, b).is_zero()) {
        throw std::logic_error("quaternion_lift_feasibility: solver verification failed");
    }
    out.feasible = true;
    out.correction_x = std::move(uc);
    out.correction_y = std::move(vc);
    out.a = std::move(a);
    out.b = std::move(b);
    return out;
}

}  // namespace qalg
