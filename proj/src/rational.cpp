#include "wsuper/rational.hpp"

#include <cctype>

namespace wsuper {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::PoleAtSpecialization: return "PoleAtSpecialization";
        case Errc::ModeMismatch: return "ModeMismatch";
        case Errc::InvalidIndex: return "InvalidIndex";
        case Errc::ParityError: return "ParityError";
        case Errc::SubspaceNotContained: return "SubspaceNotContained";
        case Errc::InteriorTooLarge: return "InteriorTooLarge";
        case Errc::InvalidForS: return "InvalidForS";
        case Errc::ConstraintViolated: return "ConstraintViolated";
        case Errc::ZeroParameter: return "ZeroParameter";
        case Errc::NotInvertibleOnWindow: return "NotInvertibleOnWindow";
        case Errc::NotInJ: return "NotInJ";
        case Errc::ConfigMismatch: return "ConfigMismatch";
        case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

Rational::Rational(long num, long den) {
    if (den == 0)
        fail(Errc::DivisionByZero, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero())
        fail(Errc::DivisionByZero, "rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational Rational::inverse() const {
    if (is_zero())
        fail(Errc::DivisionByZero, "inverse of zero");
    return Rational(mpq_class(1 / v_));
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1)
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::parse(const std::string& text) {
    // Strict "p" or "p/q" with optional leading '-'.
    std::size_t i = 0;
    auto digits = [&](std::size_t start) {
        std::size_t j = start;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
            ++j;
        if (j == start)
            throw ParseFailure(start, "expected digits in rational");
        return j;
    };
    if (i < text.size() && text[i] == '-')
        ++i;
    i = digits(i);
    if (i < text.size() && text[i] == '/') {
        std::size_t j = digits(i + 1);
        if (j != text.size())
            throw ParseFailure(j, "trailing characters after rational");
        mpz_class den(text.substr(i + 1));
        if (den == 0)
            fail(Errc::DivisionByZero, "rational with zero denominator");
    } else if (i != text.size()) {
        throw ParseFailure(i, "trailing characters after rational");
    }
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw ParseFailure(0, "malformed rational '" + text + "'");
    v.canonicalize();
    return Rational(v);
}

} // namespace wsuper
