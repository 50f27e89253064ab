#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace abptk {

/// Exact rational number. Always canonical: gcd(num, den) = 1, den > 0.
class Rational {
   public:
    struct Context {
        bool operator==(const Context&) const = default;
        Rational zero() const { return Rational(); }
        Rational one() const { return Rational(1); }
        Rational from_int(long v) const { return Rational(v); }
        static std::string name() { return "Q"; }
    };

    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "num", "num/den" or "-num/den"; exact.
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                mpq_class q(mpz_class(s), 1);
                return Rational(q);
            }
            mpz_class num(s.substr(0, slash));
            mpz_class den(s.substr(slash + 1));
            if (den == 0) throw std::domain_error("rational with zero denominator");
            mpq_class q(num, den);
            q.canonicalize();
            return Rational(q);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("malformed rational: '" + s + "'");
        }
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Context context() const { return {}; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("rational division by zero");
        return Rational(mpq_class(1) / v_);
    }

    Rational pow(std::uint64_t e) const {
        Rational base = *this, acc(1);
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// "num/den", den omitted when 1.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }

    /// The positive scale s with { s*c : c in coeffs } coprime integers
    /// (content 1). Zero entries are ignored; all-zero input gives 1.
    static Rational primitive_scale(const std::vector<Rational>& coeffs) {
        mpz_class den_lcm = 1, num_gcd = 0;
        for (const auto& c : coeffs) {
            if (c.is_zero()) continue;
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.v_.get_den().get_mpz_t());
            den_lcm = l;
        }
        for (const auto& c : coeffs) {
            if (c.is_zero()) continue;
            mpz_class scaled = c.v_.get_num() * (den_lcm / c.v_.get_den());
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
            num_gcd = g;
        }
        if (num_gcd == 0) return Rational(1);
        return Rational(mpq_class(den_lcm, num_gcd));
    }

   private:
    mpq_class v_;
};

}  // namespace abptk
