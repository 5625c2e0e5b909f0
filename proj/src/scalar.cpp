#include "summab/scalar.hpp"

#include <cctype>
#include <cstdio>

namespace summab {

std::string format_scalar(const Rational& v)
{
    return v.get_str();
}

std::string format_scalar(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

bool all_digits(const std::string& s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text)
{
    std::string s = text;
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.pop_back();
    if (s.empty())
        throw precondition_error("parse_rational: empty string");

    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
        neg = s.front() == '-';
        s.erase(s.begin());
    }

    auto fail = [&]() -> Rational {
        throw precondition_error("parse_rational: cannot parse '" + text + "'");
    };

    Rational r;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den) || den.find_first_not_of('0') == std::string::npos)
            return fail();
        r = Rational(num + "/" + den);
        r.canonicalize();
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string ip = s.substr(0, dot);
        std::string fp = s.substr(dot + 1);
        if (ip.empty())
            ip = "0";
        if (fp.empty())
            fp = "0";
        if (!all_digits(ip) || !all_digits(fp))
            return fail();
        mpz_class scale = 1;
        for (size_t i = 0; i < fp.size(); ++i)
            scale *= 10;
        mpz_class n = mpz_class(ip) * scale + mpz_class(fp);
        r = Rational(n) / Rational(scale);
        r.canonicalize();
    } else {
        if (!all_digits(s))
            return fail();
        r = Rational(s);
    }
    return neg ? Rational(-r) : r;
}

} // namespace summab
