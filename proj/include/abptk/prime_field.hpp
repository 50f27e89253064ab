#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace abptk {

/// Element of F_p for a prime 2 <= p < 2^31. Every element carries its
/// modulus; mixing moduli is an error.
class Fp {
   public:
    struct Context {
        std::uint32_t p = 0;
        bool operator==(const Context&) const = default;
        Fp zero() const { return Fp(0, p); }
        Fp one() const { return Fp(1, p); }
        Fp from_int(long v) const { return Fp(v, p); }
        std::string name() const { return "Fp:" + std::to_string(p); }
    };

    Fp() : v_(0), p_(2) {}
    Fp(long long v, std::uint32_t p) : p_(p) {
        if (p < 2 || p > (1u << 31)) throw std::invalid_argument("modulus out of range");
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        v_ = static_cast<std::uint32_t>(r);
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Context context() const { return {p_}; }

    static Fp parse(const std::string& s, std::uint32_t p) {
        // accepts "v" or "v mod p"
        auto at = s.find(" mod ");
        std::string head = at == std::string::npos ? s : s.substr(0, at);
        if (at != std::string::npos) {
            unsigned long q = std::stoul(s.substr(at + 5));
            if (q != p) throw std::invalid_argument("element modulus " + std::to_string(q) +
                                                    " does not match field Fp:" + std::to_string(p));
        }
        return Fp(std::stoll(head), p);
    }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp& operator+=(const Fp& o) {
        check(o);
        v_ = (v_ + static_cast<std::uint64_t>(o.v_)) % p_;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        check(o);
        v_ = (v_ + static_cast<std::uint64_t>(p_) - o.v_) % p_;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        check(o);
        v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_);
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
    friend bool operator<(const Fp& a, const Fp& b) { return a.v_ < b.v_; }

    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("division by zero in F_" + std::to_string(p_));
        // extended Euclid on (v, p)
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p_, new_r = v_;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        if (t < 0) t += p_;
        return Fp(t, p_);
    }

    Fp pow(std::uint64_t e) const {
        Fp base = *this, acc(1, p_);
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    std::string str() const { return std::to_string(v_) + " mod " + std::to_string(p_); }

   private:
    void check(const Fp& o) const {
        if (p_ != o.p_)
            throw std::invalid_argument("mixed prime fields F_" + std::to_string(p_) + " and F_" +
                                        std::to_string(o.p_));
    }

    std::uint32_t v_;
    std::uint32_t p_;
};

}  // namespace abptk
