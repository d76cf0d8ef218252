#include "qalg/algebra.hpp"

#include <cctype>
#include <random>
#include <stdexcept>
#include <utility>

namespace qalg {

namespace {

std::size_t flat(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
    return (i * n + j) * n + k;
}

void check_dim_cap(std::size_t n, const char* who) {
    if (n == 0 || n > kMaxAlgebraDim) {
        throw std::invalid_argument(std::string(who) + ": dimension " + std::to_string(n) +
                                    " is outside the supported range 1.." +
                                    std::to_string(kMaxAlgebraDim));
    }
}

AlgebraPtr tensor_with_names(const AlgebraPtr& a, const AlgebraPtr& b, std::string name) {
    const std::size_t na = a->dim(), nb = b->dim();
    check_dim_cap(na * nb, "tensor_product");
    const std::size_t n = na * nb;
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
            const std::string& l = a->basis_names()[i];
            const std::string& r = b->basis_names()[j];
            if (r == "1") {
                names.push_back(l);
            } else if (l == "1") {
                names.push_back(r);
            } else {
                names.push_back(l + "*" + r);
            }
        }
    }
    Vec unit(n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            unit[i * nb + j] = a->unit_coords()[i] * b->unit_coords()[j];
    std::vector<Rational> mult(n * n * n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < na; ++k)
                for (std::size_t l = 0; l < nb; ++l) {
                    for (std::size_t m = 0; m < na; ++m) {
                        const Rational& ca = a->structure(i, k, m);
                        if (ca.is_zero()) continue;
                        for (std::size_t w = 0; w < nb; ++w) {
                            const Rational& cb = b->structure(j, l, w);
                            if (cb.is_zero()) continue;
                            mult[flat(n, i * nb + j, k * nb + l, m * nb + w)] = ca * cb;
                        }
                    }
                }
    return Algebra::make(std::move(name), std::move(names), std::move(unit), std::move(mult));
}

// Rewrites a presentation in the basis whose rows (old coordinates) form P.
AlgebraPtr rebuild_in_basis(const AlgebraPtr& a, const QMatrix& p, const QMatrix& pinv,
                            std::string name, std::vector<std::string> basis_names) {
    const std::size_t n = a->dim();
    auto to_new = [&](const Vec& old_coords) {
        Vec out(n);
        for (std::size_t l = 0; l < n; ++l) {
            Rational s;
            for (std::size_t k = 0; k < n; ++k) s += old_coords[k] * pinv.at(k, l);
            out[l] = s;
        }
        return out;
    };
    std::vector<Rational> mult(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        Element ri = make_element(a, p.row(i));
        for (std::size_t j = 0; j < n; ++j) {
            Vec prod = (ri * make_element(a, p.row(j))).coords;
            Vec coords = to_new(prod);
            for (std::size_t k = 0; k < n; ++k) mult[flat(n, i, j, k)] = coords[k];
        }
    }
    Vec unit = to_new(a->unit_coords());
    return Algebra::make(std::move(name), std::move(basis_names), std::move(unit),
                         std::move(mult));
}

}  // namespace

AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b) {
    const std::size_t na = a->dim(), nb = b->dim();
    check_dim_cap(na + nb, "direct_product");
    const std::size_t n = na + nb;
    std::vector<std::string> names;
    names.reserve(n);
    for (const auto& s : a->basis_names()) names.push_back("l." + s);
    for (const auto& s : b->basis_names()) names.push_back("r." + s);
    Vec unit(n);
    for (std::size_t i = 0; i < na; ++i) unit[i] = a->unit_coords()[i];
    for (std::size_t j = 0; j < nb; ++j) unit[na + j] = b->unit_coords()[j];
    std::vector<Rational> mult(n * n * n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k) mult[flat(n, i, j, k)] = a->structure(i, j, k);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                mult[flat(n, na + i, na + j, na + k)] = b->structure(i, j, k);
    return Algebra::make("Prod(" + a->name() + "," + b->name() + ")", std::move(names),
                         std::move(unit), std::move(mult));
}

AlgebraPtr tensor_product(const AlgebraPtr& a, const AlgebraPtr& b) {
    return tensor_with_names(a, b, "Tensor(" + a->name() + "," + b->name() + ")");
}

AlgebraPtr matrix_algebra(const AlgebraPtr& inner, std::size_t n) {
    if (n == 0) throw std::invalid_argument("matrix_algebra: size must be at least 1");
    check_dim_cap(n * n * inner->dim(), "matrix_algebra");
    const std::size_t d = n * n;
    std::vector<std::string> names;
    names.reserve(d);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            names.push_back("E" + std::to_string(p + 1) + std::to_string(q + 1));
    Vec unit(d);
    for (std::size_t p = 0; p < n; ++p) unit[p * n + p] = Rational(1);
    std::vector<Rational> mult(d * d * d);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s)
                    if (q == r) mult[flat(d, p * n + q, r * n + s, p * n + s)] = Rational(1);
    AlgebraPtr units = Algebra::make("Mat(Q," + std::to_string(n) + ")", std::move(names),
                                     std::move(unit), std::move(mult));
    if (inner->dim() == 1 && inner->name() == "Q") return units;
    return tensor_with_names(units, inner,
                             "Mat(" + inner->name() + "," + std::to_string(n) + ")");
}

AlgebraPtr truncated_polynomial_algebra(std::size_t k) {
    check_dim_cap(k, "truncated_polynomial_algebra");
    std::vector<std::string> names;
    names.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (i == 0) {
            names.push_back("1");
        } else if (i == 1) {
            names.push_back("eps");
        } else {
            names.push_back("eps^" + std::to_string(i));
        }
    }
    Vec unit(k);
    unit[0] = Rational(1);
    std::vector<Rational> mult(k * k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i + j < k) mult[flat(k, i, j, i + j)] = Rational(1);
    return Algebra::make("Q[eps]/(eps^" + std::to_string(k) + ")", std::move(names),
                         std::move(unit), std::move(mult));
}

AlgebraPtr catalog_Q() {
    return Algebra::make("Q", {"1"}, {Rational(1)}, {Rational(1)});
}

AlgebraPtr catalog_Cneg(const Rational& q) {
    if (q.is_zero()) throw std::invalid_argument("Cneg: parameter must be nonzero");
    std::vector<Rational> mult(8);
    mult[flat(2, 0, 0, 0)] = Rational(1);
    mult[flat(2, 0, 1, 1)] = Rational(1);
    mult[flat(2, 1, 0, 1)] = Rational(1);
    mult[flat(2, 1, 1, 0)] = q;
    return Algebra::make("Cneg(" + q.str() + ")", {"1", "u"}, {Rational(1), Rational(0)},
                         std::move(mult));
}

AlgebraPtr catalog_Quat(const Rational& alpha, const Rational& beta) {
    if (alpha.is_zero() || beta.is_zero()) {
        throw std::invalid_argument("Quat: both parameters must be nonzero");
    }
    const std::size_t n = 4;
    std::vector<Rational> mult(n * n * n);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, Rational c) {
        mult[flat(n, i, j, k)] = std::move(c);
    };
    for (std::size_t j = 0; j < n; ++j) set(0, j, j, Rational(1));
    for (std::size_t i = 1; i < n; ++i) set(i, 0, i, Rational(1));
    set(1, 1, 0, alpha);
    set(1, 2, 3, Rational(1));
    set(1, 3, 2, alpha);
    set(2, 1, 3, Rational(-1));
    set(2, 2, 0, beta);
    set(2, 3, 1, -beta);
    set(3, 1, 2, -alpha);
    set(3, 2, 1, beta);
    set(3, 3, 0, -(alpha * beta));
    return Algebra::make("Quat(" + alpha.str() + "," + beta.str() + ")", {"1", "i", "j", "k"},
                         {Rational(1), Rational(0), Rational(0), Rational(0)}, std::move(mult));
}

AlgebraPtr catalog_Tri(std::size_t n) {
    if (n == 0 || n > 10) {
        throw std::invalid_argument("Tri: size must be between 1 and 10");
    }
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    std::vector<std::vector<std::size_t>> idx(n, std::vector<std::size_t>(n));
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p; q < n; ++q) {
            idx[p][q] = cells.size();
            cells.emplace_back(p, q);
        }
    }
    const std::size_t d = cells.size();
    std::vector<std::string> names;
    names.reserve(d);
    for (auto [p, q] : cells)
        names.push_back("e" + std::to_string(p + 1) + std::to_string(q + 1));
    Vec unit(d);
    for (std::size_t p = 0; p < n; ++p) unit[idx[p][p]] = Rational(1);
    std::vector<Rational> mult(d * d * d);
    for (std::size_t a = 0; a < d; ++a) {
        auto [p, q] = cells[a];
        for (std::size_t b = 0; b < d; ++b) {
            auto [r, s] = cells[b];
            if (q == r) mult[flat(d, a, b, idx[p][s])] = Rational(1);
        }
    }
    return Algebra::make("Tri(" + std::to_string(n) + ")", std::move(names), std::move(unit),
                         std::move(mult));
}

AlgebraPtr catalog_Mat(const AlgebraPtr& inner, std::size_t n) {
    return matrix_algebra(inner, n);
}

AlgebraPtr catalog_ExampleJ() {
    // Basis {1, x, y, z, t, tx, ty, tz} with x^2 = y^2 = -1, z = xy and
    // t = xy + yx; t is central and t^2 = 0. Products of the generating part
    // {1, x, y, z} first, then extended by t-degree (degree 2 vanishes).
    const std::size_t n = 8;
    auto vec = [](std::initializer_list<std::pair<std::size_t, long>> terms) {
        Vec v(8);
        for (auto [i, c] : terms) v[i] = Rational(c);
        return v;
    };
    std::vector<std::vector<Vec>> core(4, std::vector<Vec>(4));
    for (std::size_t j = 0; j < 4; ++j) core[0][j] = vec({{j, 1}});
    for (std::size_t i = 1; i < 4; ++i) core[i][0] = vec({{i, 1}});
    core[1][1] = vec({{0, -1}});
    core[1][2] = vec({{3, 1}});
    core[1][3] = vec({{2, -1}});
    core[2][1] = vec({{4, 1}, {3, -1}});
    core[2][2] = vec({{0, -1}});
    core[2][3] = vec({{1, 1}, {6, 1}});
    core[3][1] = vec({{2, 1}, {5, 1}});
    core[3][2] = vec({{1, -1}});
    core[3][3] = vec({{0, -1}, {7, 1}});

    std::vector<Rational> mult(n * n * n);
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t b = 0; b < 2; ++b) {
                for (std::size_t j = 0; j < 4; ++j) {
                    if (a + b >= 2) continue;
                    const Vec& v = core[i][j];
                    std::size_t row = i + 4 * a, col = j + 4 * b;
                    if (a + b == 0) {
                        for (std::size_t k = 0; k < n; ++k) mult[flat(n, row, col, k)] = v[k];
                    } else {
                        // One factor of t: low part shifts up, existing
                        // t-part dies against t^2 = 0.
                        for (std::size_t k = 0; k < 4; ++k)
                            mult[flat(n, row, col, 4 + k)] = v[k];
                    }
                }
            }
        }
    }
    return Algebra::make("ExampleJ", {"1", "x", "y", "z", "t", "tx", "ty", "tz"},
                         vec({{0, 1}}), std::move(mult));
}

namespace {

// Spec strings: ident, optionally followed by a parenthesized comma list of
// rationals or nested specs. Grammar documented at catalog()'s declaration.
class SpecParser {
public:
    explicit SpecParser(const std::string& text) : s_(text) {}

    AlgebraPtr parse_top() {
        AlgebraPtr a = parse_spec();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing characters");
        return a;
    }

private:
    struct Arg {
        std::optional<Rational> number;
        AlgebraPtr algebra;
    };

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("catalog: " + why + " at position " + std::to_string(pos_) +
                                    " in \"" + s_ + "\"");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a constructor name");
        return s_.substr(start, pos_ - start);
    }

    Rational number() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
        while (pos_ < s_.size() &&
               (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) {
            ++pos_;
        }
        if (pos_ == start) fail("expected a rational parameter");
        try {
            return Rational::parse(s_.substr(start, pos_ - start));
        } catch (const std::exception& e) {
            fail(std::string("bad rational parameter: ") + e.what());
        }
    }

    std::vector<Arg> args() {
        std::vector<Arg> out;
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != '(') return out;
        ++pos_;
        for (;;) {
            skip_ws();
            if (pos_ >= s_.size()) fail("unterminated argument list");
            Arg a;
            char c = s_[pos_];
            if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
                a.number = number();
            } else {
                a.algebra = parse_spec();
            }
            out.push_back(std::move(a));
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == ',') {
                ++pos_;
                continue;
            }
            if (pos_ < s_.size() && s_[pos_] == ')') {
                ++pos_;
                return out;
            }
            fail("expected ',' or ')'");
        }
    }

    std::size_t small_positive_integer(const Arg& a, const char* what) {
        if (!a.number || !a.number->is_integer() || a.number->sign() <= 0) {
            fail(std::string("expected a positive integer ") + what);
        }
        mpz_class num = a.number->numerator();
        if (!num.fits_ulong_p() || num.get_ui() > kMaxAlgebraDim) {
            fail(std::string(what) + " is too large");
        }
        return static_cast<std::size_t>(num.get_ui());
    }

    Rational required_number(const Arg& a, const char* what) {
        if (!a.number) fail(std::string("expected a rational ") + what);
        return *a.number;
    }

    AlgebraPtr parse_spec() {
        std::string name = ident();
        std::vector<Arg> as = args();
        if (name == "Q") {
            if (!as.empty()) fail("Q takes no parameters");
            return catalog_Q();
        }
        if (name == "Cneg") {
            if (as.size() != 1) fail("Cneg takes one rational parameter");
            return catalog_Cneg(required_number(as[0], "parameter of Cneg"));
        }
        if (name == "Quat") {
            if (as.size() != 2) fail("Quat takes two rational parameters");
            return catalog_Quat(required_number(as[0], "first parameter of Quat"),
                                required_number(as[1], "second parameter of Quat"));
        }
        if (name == "Tri") {
            if (as.size() != 1) fail("Tri takes one size parameter");
            return catalog_Tri(small_positive_integer(as[0], "size of Tri"));
        }
        if (name == "Mat") {
            if (as.size() != 2 || !as[0].algebra) {
                fail("Mat takes an inner algebra spec and a size");
            }
            return catalog_Mat(as[0].algebra, small_positive_integer(as[1], "size of Mat"));
        }
        if (name == "ExampleJ") {
            if (!as.empty()) fail("ExampleJ takes no parameters");
            return catalog_ExampleJ();
        }
        fail("unknown constructor \"" + name + "\"");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

AlgebraPtr catalog(const std::string& spec) { return SpecParser(spec).parse_top(); }

ScrambleResult scramble_basis(const AlgebraPtr& a, std::uint64_t seed) {
    const std::size_t n = a->dim();
    std::mt19937_64 rng(seed);
    const Vec& u = a->unit_coords();
    std::size_t i0 = 0;
    while (u[i0].is_zero()) ++i0;

    for (int attempt = 0; attempt < 1000; ++attempt) {
        QMatrix p = QMatrix::identity(n);
        // P = I + R with small integer R corrected so that unit * R = 0,
        // which keeps the unit's coordinate vector fixed.
        QMatrix r(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                r.at(i, j) = Rational(static_cast<long>(rng() % 5) - 2);
        for (std::size_t j = 0; j < n; ++j) {
            Rational sum;
            for (std::size_t i = 0; i < n; ++i) {
                if (i != i0) sum += u[i] * r.at(i, j);
            }
            r.at(i0, j) = -sum / u[i0];
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) p.at(i, j) += r.at(i, j);
        QMatrix pinv(n, n);
        try {
            pinv = invert_matrix(p);
        } catch (const std::domain_error&) {
            continue;
        }
        std::vector<std::string> names;
        names.reserve(n);
        for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
        AlgebraPtr out = rebuild_in_basis(a, p, pinv,
                                          a->name() + "#s" + std::to_string(seed),
                                          std::move(names));
        if (out->unit_coords() != u) {
            throw std::logic_error("scramble_basis: unit coordinates were not preserved");
        }
        return ScrambleResult{out, p};
    }
    throw std::logic_error("scramble_basis: no invertible draw in 1000 attempts");
}

AlgebraPtr apply_change_of_basis(const AlgebraPtr& a, const QMatrix& change,
                                 const std::string& new_name) {
    const std::size_t n = a->dim();
    if (change.rows() != n || change.cols() != n) {
        throw std::invalid_argument("apply_change_of_basis: matrix shape mismatch");
    }
    QMatrix pinv = invert_matrix(change);
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("b" + std::to_string(i));
    return rebuild_in_basis(a, change, pinv, new_name, std::move(names));
}

}  // namespace qalg
