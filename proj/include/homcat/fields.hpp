#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace homcat {

using bigint = boost::multiprecision::cpp_int;

struct FieldMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Exact rational in lowest terms, denominator > 0. */
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(bigint n, bigint d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const bigint& num() const { return num_; }
    const bigint& den() const { return den_; }

    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    bool is_zero() const { return num_ == 0; }

    Rational operator+(const Rational& o) const { return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    Rational operator-(const Rational& o) const { return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
    Rational operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(den_, num_);
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    static Rational from_rational(const Rational& r) { return r; }
    static const char* field_name() { return "q"; }

  private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        bigint g = boost::multiprecision::gcd(num_ < 0 ? bigint(-num_) : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    bigint num_, den_;
};

/* GF(p) with a process-wide modulus; one field per run. */
class Gfp {
  public:
    Gfp() : v_(0) {}
    Gfp(long long n) {
        long long m = n % (long long)modulus_;
        if (m < 0) m += (long long)modulus_;
        v_ = (std::uint64_t)m;
    }

    static void set_modulus(std::uint64_t p) {
        if (p < 2 || p >= (1ull << 31) || !is_prime(p))
            throw std::domain_error("Gfp: modulus must be a prime < 2^31");
        modulus_ = p;
    }
    static std::uint64_t modulus() { return modulus_; }

    static bool is_prime(std::uint64_t p) {
        if (p < 2) return false;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    static Gfp zero() { return Gfp(); }
    static Gfp one() { return Gfp(1); }
    bool is_zero() const { return v_ == 0; }
    std::uint64_t value() const { return v_; }

    Gfp operator+(Gfp o) const { return raw((v_ + o.v_) % modulus_); }
    Gfp operator-(Gfp o) const { return raw((v_ + modulus_ - o.v_) % modulus_); }
    Gfp operator*(Gfp o) const { return raw(v_ * o.v_ % modulus_); }
    Gfp operator/(Gfp o) const { return *this * o.inverse(); }
    Gfp operator-() const { return raw(v_ == 0 ? 0 : modulus_ - v_); }
    Gfp& operator+=(Gfp o) { return *this = *this + o; }
    Gfp& operator-=(Gfp o) { return *this = *this - o; }
    Gfp& operator*=(Gfp o) { return *this = *this * o; }

    Gfp inverse() const {
        if (v_ == 0) throw std::domain_error("Gfp: inverse of zero");
        return pow(modulus_ - 2);
    }

    bool operator==(Gfp o) const { return v_ == o.v_; }
    bool operator!=(Gfp o) const { return v_ != o.v_; }

    std::string str() const { return std::to_string(v_); }

    static Gfp from_rational(const Rational& r) {
        Gfp d = reduce_big(r.den());
        if (d.is_zero())
            throw FieldMismatch("denominator " + r.den().str() + " vanishes mod " + std::to_string(modulus_));
        return reduce_big(r.num()) * d.inverse();
    }
    static const char* field_name() { return "gf"; }

  private:
    static Gfp raw(std::uint64_t v) {
        Gfp g;
        g.v_ = v;
        return g;
    }
    static Gfp reduce_big(const bigint& n) {
        bigint m = n % (long long)modulus_;
        if (m < 0) m += (long long)modulus_;
        return raw(m.convert_to<std::uint64_t>());
    }
    Gfp pow(std::uint64_t e) const {
        Gfp r = one(), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    inline static std::uint64_t modulus_ = 32003;
    std::uint64_t v_;
};

}  // namespace homcat
