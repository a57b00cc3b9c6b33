#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace cosec {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in lowest terms with denominator > 0.
// Holds Bernoulli numbers/polynomial coefficients and exact harmonic numbers;
// all arithmetic is exact, rounding happens once in to_double().
class ExactRational {
public:
    ExactRational() : num_(0), den_(1) {}
    ExactRational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    ExactRational(const BigInt& numerator, const BigInt& denominator);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    // Correctly scaled conversion: never overflows on large numerator and
    // denominator whose ratio is representable.
    double to_double() const;

    std::string str() const;

    ExactRational operator-() const;
    ExactRational& operator+=(const ExactRational& o);
    ExactRational& operator-=(const ExactRational& o);
    ExactRational& operator*=(const ExactRational& o);
    ExactRational& operator/=(const ExactRational& o);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ExactRational& a, const ExactRational& b) { return !(a == b); }
    friend bool operator<(const ExactRational& a, const ExactRational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

private:
    void normalize();

    BigInt num_;
    BigInt den_;  // > 0
};

// C(n, k) as an exact integer; 0 for k < 0 or k > n.
BigInt binomial(long long n, long long k);

}  // namespace cosec
