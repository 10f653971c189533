#include "greenfn/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace greenfn {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpq_class v{mpz_class(text)};
            return Rational(std::move(v));
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) throw std::domain_error("rational with zero denominator: " + text);
        mpq_class v(num, den);
        v.canonicalize();
        return Rational(std::move(v));
    } catch (const std::invalid_argument&) {
        throw std::domain_error("malformed rational: \"" + text + "\"");
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace greenfn
