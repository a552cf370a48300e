#include "homps/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace homps {

Rational::Rational(long num, long den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("not a rational: \"" + std::string(text) + "\"");
    };
    std::size_t pos = 0;
    auto digits = [&](bool allow_sign) {
        std::size_t start = pos;
        if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
            ++pos;
        std::size_t first_digit = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == first_digit)
            fail();
        return std::string(text.substr(start, pos - start));
    };

    std::string num = digits(true);
    std::string den = "1";
    if (pos < text.size()) {
        if (text[pos] != '/')
            fail();
        ++pos;
        den = digits(false);
    }
    if (pos != text.size())
        fail();

    mpq_class v{mpz_class(num), mpz_class(den)};
    if (v.get_den() == 0)
        throw std::domain_error("rational with zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const {
    if (v_.get_den() == 1)
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace homps
