#include "gsb/field.hpp"

namespace gsb {
namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Int mod_inverse(Int a, const Int& p) {
    // extended Euclid; a must be nonzero mod p
    Int t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
    while (new_r != 0) {
        Int q = r / new_r;
        Int tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("element has no inverse mod p");
    return ((t % p) + p) % p;
}

}  // namespace

Field Field::rationals() { return Field(0); }

Field Field::prime(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
    return Field(p);
}

Scalar Field::normalize(const Scalar& a) const {
    if (is_rational()) return a;
    Int p(p_);
    Int num = boost::multiprecision::numerator(a);
    Int den = boost::multiprecision::denominator(a);
    Int d = den % p;
    if (d == 0) throw std::domain_error("denominator vanishes mod p");
    Int n = ((num % p) + p) % p;
    if (d != 1) n = (n * mod_inverse(d, p)) % p;
    return Scalar(n);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
Scalar Field::sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
Scalar Field::mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
Scalar Field::neg(const Scalar& a) const { return normalize(-a); }

Scalar Field::inv(const Scalar& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    if (is_rational()) return 1 / a;
    Scalar c = normalize(a);
    if (c == 0) throw std::domain_error("division by zero in F_p");
    return Scalar(mod_inverse(boost::multiprecision::numerator(c), Int(p_)));
}

Scalar Field::from_int(long long v) const { return normalize(Scalar(v)); }

Scalar Field::parse(const std::string& text) const {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return normalize(Scalar(Int(text)));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return normalize(Scalar(num, den));
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid scalar literal: '" + text + "'");
    }
}

std::string Field::to_string(const Scalar& a) {
    Int num = boost::multiprecision::numerator(a);
    Int den = boost::multiprecision::denominator(a);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string Field::describe() const {
    return is_rational() ? std::string("rational") : "prime(" + std::to_string(p_) + ")";
}

}  // namespace gsb
