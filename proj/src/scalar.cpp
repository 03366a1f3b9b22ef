#include "rootgrade/scalar.hpp"

#include <cctype>

namespace rootgrade {

std::string Scalar::str() const {
    if (im == 0)
        return re.get_str();
    std::string imag = im.get_str() + " i";
    if (re == 0)
        return imag;
    if (im > 0)
        return re.get_str() + "+" + imag;
    return re.get_str() + imag; // im.get_str() carries the minus sign
}

Rational parse_rational(const std::string &s) {
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

namespace {

std::string strip(const std::string &s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

} // namespace

Scalar parse_scalar(const std::string &raw) {
    std::string s = strip(raw);
    if (s.empty())
        throw std::invalid_argument("empty scalar literal");
    // locate the split between real and imaginary part: a '+' or '-' that is
    // not leading and not part of an exponent-free rational
    bool has_i = s.back() == 'i';
    if (!has_i)
        return Scalar(parse_rational(s));
    std::string body = strip(s.substr(0, s.size() - 1));
    // find sign separating real part, scanning from the right past the
    // imaginary numeral
    for (size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/' &&
            !std::isspace(static_cast<unsigned char>(body[k - 1]))) {
            std::string re_s = strip(body.substr(0, k));
            std::string im_s = strip(body.substr(k));
            if (im_s == "+" || im_s == "-")
                im_s += "1";
            else if (im_s[0] == '+')
                im_s = im_s.substr(1);
            return Scalar(parse_rational(re_s), parse_rational(im_s));
        }
    }
    std::string im_s = body;
    if (im_s.empty())
        im_s = "1";
    else if (im_s == "-")
        im_s = "-1";
    else if (im_s == "+")
        im_s = "1";
    return Scalar(Rational(0), parse_rational(im_s));
}

} // namespace rootgrade
