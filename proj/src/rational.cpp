#include "mdmat/rational.hpp"

#include <ostream>

namespace mdmat {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero())
        throw ValidationError("rational with zero denominator");
    if (den < 0)
        v_ = boost::multiprecision::cpp_rational(-num, -den);
    else
        v_ = boost::multiprecision::cpp_rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw ValidationError("division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

BigInt digits_to_int(std::string_view s) {
    BigInt v = 0;
    for (char c : s)
        v = v * 10 + (c - '0');
    return v;
}

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

} // namespace

Rational Rational::parse(std::string_view token) {
    std::string_view rest = token;
    bool neg = false;
    if (!rest.empty() && rest.front() == '-') {
        neg = true;
        rest.remove_prefix(1);
    }
    std::string_view num = rest, den;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        num = rest.substr(0, slash);
        den = rest.substr(slash + 1);
        if (!all_digits(den) || den.front() == '0')
            throw ParseError("bad rational literal '" + std::string(token) + "'");
    }
    if (!all_digits(num))
        throw ParseError("bad rational literal '" + std::string(token) + "'");
    BigInt n = digits_to_int(num);
    if (neg)
        n = -n;
    BigInt d = den.empty() ? BigInt(1) : digits_to_int(den);
    return Rational(n, d);
}

std::string Rational::str() const {
    std::string s = num().str();
    if (!is_integer())
        s += "/" + den().str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational pow(const Rational& r, int e) {
    if (e < 0) {
        if (r.is_zero())
            throw ValidationError("zero raised to a negative power");
        return pow(Rational(1) / r, -e);
    }
    Rational acc = 1, base = r;
    while (e > 0) {
        if (e & 1)
            acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

} // namespace mdmat
