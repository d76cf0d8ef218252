#include "qalg/rational.hpp"

#include <cctype>
#include <ostream>

namespace qalg {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    std::size_t start = 0;
    if (!text.empty() && text[0] == '-') start = 1;
    std::size_t slash = text.find('/');
    bool ok;
    if (slash == std::string::npos) {
        ok = all_digits(text, start, text.size());
    } else {
        ok = all_digits(text, start, slash) && all_digits(text, slash + 1, text.size());
    }
    if (!ok) throw std::invalid_argument("Rational::parse: malformed rational '" + text + "'");
    mpq_class q;
    if (q.set_str(text, 10) != 0) {
        throw std::invalid_argument("Rational::parse: malformed rational '" + text + "'");
    }
    if (q.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator in '" + text + "'");
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace qalg
