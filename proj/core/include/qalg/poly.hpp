#pragma once

#include "qalg/matrix.hpp"
#include "qalg/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace qalg {

// Univariate polynomial over the rationals in the indeterminate X.
// Coefficients are stored lowest degree first with no trailing zeros, so the
// representation of every polynomial (including 0, the empty vector) is
// unique. degree() returns -1 for the zero polynomial as the distinguished
// "no degree" value.
class Poly {
public:
    Poly() = default;
    explicit Poly(Vec coeffs) : c_(std::move(coeffs)) { normalize(); }
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const Rational& r) { return Poly(Vec{r}); }
    static Poly X() { return Poly(Vec{Rational(0), Rational(1)}); }
    static Poly monomial(std::size_t deg, const Rational& coeff);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Vec& coeffs() const { return c_; }

    // Coefficient of X^k; zero beyond the degree.
    Rational coeff(std::size_t k) const {
        return k < c_.size() ? c_[k] : Rational(0);
    }
    Rational leading() const;  // throws on the zero polynomial

    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    Poly monic() const;  // divide by the leading coefficient; throws on zero

    Poly derivative() const;
    Rational eval(const Rational& x) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, const Poly& p);
    friend Poly operator-(const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Canonical display form; parse_poly(str()) reproduces the polynomial.
    std::string str() const;

private:
    void normalize();
    Vec c_;
};

struct PolyDivMod {
    Poly quotient;
    Poly remainder;  // deg(remainder) < deg(divisor)
};

PolyDivMod divmod(const Poly& f, const Poly& g);  // throws if g = 0

struct PolyEgcd {
    Poly d;  // monic gcd (1 if coprime); gcd(0,0) is rejected
    Poly u;
    Poly v;  // u*f + v*g = d, verified by expansion before returning
};

PolyEgcd egcd(const Poly& f, const Poly& g);
Poly gcd_poly(const Poly& f, const Poly& g);  // monic

// A polynomial is separable iff gcd(f, f') = 1, i.e. no repeated roots in any
// extension. Nonzero constants are separable; the zero polynomial is rejected.
bool is_separable(const Poly& f);

// Monic product of the distinct irreducible factors: f / gcd(f, f').
Poly squarefree_part(const Poly& f);

// Multiplicity of the rational root r in f (0 if not a root).
std::size_t root_multiplicity(const Poly& f, const Rational& r);

struct SturmEvidence {
    std::size_t variations_at_minus_inf = 0;
    std::size_t variations_at_plus_inf = 0;
    std::size_t distinct_real_roots = 0;
};

// Number of distinct real roots of f (multiplicity ignored: the count is
// taken on the squarefree part). Exact: sign variations of the Sturm chain
// at -inf and +inf, read off the leading coefficients. f must be nonzero.
std::size_t sturm_count(const Poly& f);
SturmEvidence sturm_evidence(const Poly& f);

// Minimal polynomial of a square rational matrix: the first monic dependence
// among I, m, m^2, ... (Krylov), verified by evaluating it at m.
Poly minimal_polynomial(const QMatrix& m);

// Parses the grammar
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := rational | 'X' | '(' expr ')'
// with arbitrary whitespace between tokens. Throws std::invalid_argument
// with the offending position on malformed input.
Poly parse_poly(const std::string& text);

}  // namespace qalg
