#include "qalg/poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qalg {

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(std::size_t deg, const Rational& coeff) {
    Vec c(deg + 1);
    c[deg] = coeff;
    return Poly(std::move(c));
}

Rational Poly::leading() const {
    if (is_zero()) throw std::domain_error("Poly::leading: zero polynomial");
    return c_.back();
}

Poly Poly::monic() const {
    if (is_zero()) throw std::domain_error("Poly::monic: zero polynomial");
    return leading().inverse() * *this;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    Vec d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
    return Poly(std::move(d));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    Vec c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    Vec c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Vec c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Poly(std::move(c));
}

Poly operator*(const Rational& c, const Poly& p) {
    Vec r(p.c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = c * p.c_[i];
    return Poly(std::move(r));
}

Poly operator-(const Poly& a) {
    return Rational(-1) * a;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        Rational mag;
        if (first) {
            // A leading negative coefficient is printed in full ("-1*X^2"),
            // because the grammar has no unary minus outside rationals.
            mag = c;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            mag = c.abs();
        }
        if (k == 0 || mag != Rational(1)) {
            os << mag.str();
            if (k > 0) os << "*";
        }
        if (k == 1) os << "X";
        else if (k > 1) os << "X^" << k;
        first = false;
    }
    return os.str();
}

PolyDivMod divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
    Poly r = f;
    Poly q;
    const Rational lg_inv = g.leading().inverse();
    while (!r.is_zero() && r.degree() >= g.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - g.degree());
        Rational c = r.leading() * lg_inv;
        Poly t = Poly::monomial(shift, c);
        q = q + t;
        r = r - t * g;
    }
    return {q, r};
}

PolyEgcd egcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("egcd: gcd(0, 0) is undefined");
    // Iterative extended Euclid: r0 = f, r1 = g, maintaining
    // ri = ui*f + vi*g throughout.
    Poly r0 = f, r1 = g;
    Poly u0 = Poly::constant(Rational(1)), u1;
    Poly v0, v1 = Poly::constant(Rational(1));
    while (!r1.is_zero()) {
        PolyDivMod dm = divmod(r0, r1);
        Poly r2 = dm.remainder;
        Poly u2 = u0 - dm.quotient * u1;
        Poly v2 = v0 - dm.quotient * v1;
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    Rational lead_inv = r0.leading().inverse();
    PolyEgcd out{lead_inv * r0, lead_inv * u0, lead_inv * v0};
    if (out.u * f + out.v * g != out.d) {
        throw std::logic_error("egcd: Bezout identity failed verification");
    }
    return out;
}

Poly gcd_poly(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd: gcd(0, 0) is undefined");
    Poly r0 = f, r1 = g;
    while (!r1.is_zero()) {
        Poly r2 = divmod(r0, r1).remainder;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.monic();
}

bool is_separable(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("is_separable: zero polynomial");
    if (f.degree() == 0) return true;
    return gcd_poly(f, f.derivative()).degree() == 0;
}

Poly squarefree_part(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    if (f.degree() == 0) return Poly::constant(Rational(1));
    Poly g = gcd_poly(f, f.derivative());
    PolyDivMod dm = divmod(f, g);
    if (!dm.remainder.is_zero()) {
        throw std::logic_error("squarefree_part: gcd does not divide f");
    }
    return dm.quotient.monic();
}

std::size_t root_multiplicity(const Poly& f, const Rational& r) {
    if (f.is_zero()) throw std::domain_error("root_multiplicity: zero polynomial");
    Poly lin{-r, Rational(1)};  // X - r
    std::size_t mult = 0;
    Poly g = f;
    while (!g.is_zero()) {
        PolyDivMod dm = divmod(g, lin);
        if (!dm.remainder.is_zero()) break;
        g = dm.quotient;
        ++mult;
    }
    return mult;
}

namespace {

// Sign of p at +inf (dir = +1) or -inf (dir = -1).
int sign_at_infinity(const Poly& p, int dir) {
    int s = p.leading().sign();
    if (dir < 0 && p.degree() % 2 == 1) s = -s;
    return s;
}

std::size_t count_variations(const std::vector<int>& signs) {
    std::size_t v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

SturmEvidence sturm_evidence(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("sturm_count: zero polynomial");
    Poly g = squarefree_part(f);
    SturmEvidence ev;
    if (g.degree() == 0) return ev;
    // Sturm chain of the squarefree part: p0, p1 = p0', then negated
    // remainders. Squarefreeness makes the last nonzero entry a constant.
    std::vector<Poly> chain{g, g.derivative()};
    while (!chain.back().is_zero()) {
        const Poly& a = chain[chain.size() - 2];
        const Poly& b = chain.back();
        chain.push_back(-divmod(a, b).remainder);
    }
    chain.pop_back();
    std::vector<int> neg, pos;
    neg.reserve(chain.size());
    pos.reserve(chain.size());
    for (const Poly& p : chain) {
        neg.push_back(sign_at_infinity(p, -1));
        pos.push_back(sign_at_infinity(p, +1));
    }
    ev.variations_at_minus_inf = count_variations(neg);
    ev.variations_at_plus_inf = count_variations(pos);
    ev.distinct_real_roots = ev.variations_at_minus_inf - ev.variations_at_plus_inf;
    return ev;
}

std::size_t sturm_count(const Poly& f) {
    return sturm_evidence(f).distinct_real_roots;
}

namespace {

QMatrix horner_matrix(const Poly& p, const QMatrix& m) {
    const std::size_t n = m.rows();
    QMatrix acc(n, n);
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        acc = acc * m;
        const Rational& c = p.coeff(k);
        if (!c.is_zero()) {
            for (std::size_t i = 0; i < n; ++i) acc.at(i, i) += c;
        }
    }
    return acc;
}

Vec flatten(const QMatrix& m) {
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

}  // namespace

Poly minimal_polynomial(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("minimal_polynomial: not square");
    const std::size_t n = m.rows();
    if (n == 0) throw std::invalid_argument("minimal_polynomial: empty matrix");
    std::vector<Vec> powers;  // flattened I, m, m^2, ...
    QMatrix cur = QMatrix::identity(n);
    powers.push_back(flatten(cur));
    for (std::size_t k = 1; k <= n + 1; ++k) {
        cur = cur * m;
        Vec target = flatten(cur);
        // Columns are the earlier powers; a solution gives the dependence.
        QMatrix sys(n * n, k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < n * n; ++i) sys.at(i, j) = powers[j][i];
        if (auto c = solve_linear(sys, target)) {
            Vec coeffs(k + 1);
            for (std::size_t j = 0; j < k; ++j) coeffs[j] = -(*c)[j];
            coeffs[k] = Rational(1);
            Poly mu(std::move(coeffs));
            QMatrix check = horner_matrix(mu, m);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!check.at(i, j).is_zero())
                        throw std::logic_error("minimal_polynomial: verification failed");
            return mu;
        }
        powers.push_back(std::move(target));
    }
    // Unreachable: the minimal polynomial of an n x n matrix has degree <= n.
    throw std::logic_error("minimal_polynomial: no dependence found");
}

namespace {

class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse_poly: " + what + " at position " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) { ++pos_; return true; }
        return false;
    }

    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (accept('+')) acc = acc + term();
            else if (accept('-')) acc = acc - term();
            else return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    Poly factor() {
        Poly b = base();
        if (accept('^')) {
            unsigned long e = uint_lit();
            Poly acc = Poly::constant(Rational(1));
            Poly sq = b;
            while (e > 0) {
                if (e & 1) acc = acc * sq;
                e >>= 1;
                if (e) sq = sq * sq;
            }
            return acc;
        }
        return b;
    }

    Poly base() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == 'X') { ++pos_; return Poly::X(); }
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            return Poly::constant(rational_lit());
        }
        fail("expected rational, 'X' or '('");
    }

    unsigned long uint_lit() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected unsigned integer exponent");
        return std::stoul(s_.substr(start, pos_ - start));
    }

    Rational rational_lit() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected digits");
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            std::size_t den = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == den) fail("expected denominator digits");
        }
        return Rational::parse(s_.substr(start, pos_ - start));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text) {
    return PolyParser(text).parse();
}

}  // namespace qalg
