#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace oddhom {

// Exact rational arithmetic, GMP-backed. Potentials stay tiny, but ledger
// charges split across overlapping cells accumulate denominators whose lcm
// outgrows any fixed width, so the representation must be arbitrary
// precision.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long long n) : q_(static_cast<long>(n)) {}
    Rational(long long n, long long d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        q_ = mpq_class(static_cast<long>(n), 1);
        q_ /= mpq_class(static_cast<long>(d), 1);
    }

    bool is_integer() const { return mpz_cmp_ui(q_.get_den_mpz_t(), 1) == 0; }
    bool is_negative() const { return sgn(q_) < 0; }
    bool is_zero() const { return sgn(q_) == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("rational division by zero");
        return Rational(a.q_ / b.q_);
    }
    Rational operator-() const { return Rational(-q_); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "3", "-4/3": the exact canonical form.
    std::string str() const { return q_.get_str(); }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;
};

} // namespace oddhom
