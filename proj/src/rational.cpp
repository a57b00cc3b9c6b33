#include "cosec/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cmath>

#include "cosec/errors.hpp"

namespace cosec {

ExactRational::ExactRational(const BigInt& numerator, const BigInt& denominator)
    : num_(numerator), den_(denominator) {
    if (den_.is_zero()) throw domain_error("ExactRational: zero denominator");
    normalize();
}

void ExactRational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

double ExactRational::to_double() const {
    if (num_.is_zero()) return 0.0;
    const bool negative = num_ < 0;
    BigInt n = negative ? BigInt(-num_) : num_;
    BigInt d = den_;

    // Keep ~96 significant bits of each side and track the removed scale, so
    // the quotient is formed from comfortably representable integers.
    const long bn = static_cast<long>(boost::multiprecision::msb(n));
    const long bd = static_cast<long>(boost::multiprecision::msb(d));
    const long keep = 96;
    const long sn = bn > keep ? bn - keep : 0;
    const long sd = bd > keep ? bd - keep : 0;
    if (sn > 0) n >>= sn;
    if (sd > 0) d >>= sd;
    const double q = n.convert_to<double>() / d.convert_to<double>();
    const double v = std::ldexp(q, static_cast<int>(sn - sd));
    return negative ? -v : v;
}

std::string ExactRational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

ExactRational ExactRational::operator-() const {
    ExactRational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

ExactRational& ExactRational::operator+=(const ExactRational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
    if (o.num_.is_zero()) throw domain_error("ExactRational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;  // exact: r is C(n-k+j, j) after each step
    }
    return r;
}

}  // namespace cosec
