/*
 * ring.hpp
 * --------
 * Coefficient rings for the free noncommutative algebra: Z/2 and the
 * integer Laurent polynomials Z[t,t^-1].
 *
 * Laurent coefficients use checked 64-bit integer arithmetic; any
 * overflow throws instead of wrapping.
 */
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace platdga {

struct overflow_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("integer overflow in Laurent coefficient addition");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("integer overflow in Laurent coefficient multiplication");
    return r;
}

// The field Z/2.
struct Z2 {
    std::uint8_t v = 0;

    Z2() = default;
    explicit Z2(long long n) : v(static_cast<std::uint8_t>(((n % 2) + 2) % 2)) {}

    static Z2 zero() { return Z2{}; }
    static Z2 one() { return Z2{1}; }
    static Z2 from_int(long long n) { return Z2{n}; }

    bool is_zero() const { return v == 0; }
    bool is_one() const { return v == 1; }

    Z2 operator+(Z2 o) const { return Z2{v ^ o.v}; }
    Z2 operator*(Z2 o) const { return Z2{static_cast<std::uint8_t>(v & o.v)}; }
    Z2 operator-() const { return *this; }
    Z2& operator+=(Z2 o) { v ^= o.v; return *this; }
    bool operator==(Z2 o) const { return v == o.v; }
    bool operator!=(Z2 o) const { return v != o.v; }

    // Z/2 has no t; exponents must be zero.
    static constexpr bool has_t = false;
    static Z2 t_power(int e) {
        if (e != 0) throw std::invalid_argument("t is not available over Z/2");
        return one();
    }

    std::string str() const { return v ? "1" : "0"; }
};

// Z[t,t^-1]: finitely supported map exponent -> nonzero integer coefficient.
class LaurentZ {
  public:
    LaurentZ() = default;
    explicit LaurentZ(long long n) {
        if (n != 0) c_[0] = n;
    }

    static LaurentZ zero() { return LaurentZ{}; }
    static LaurentZ one() { return LaurentZ{1}; }
    static LaurentZ from_int(long long n) { return LaurentZ{n}; }

    static constexpr bool has_t = true;
    static LaurentZ t_power(int e) {
        LaurentZ r;
        r.c_[e] = 1;
        return r;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const {
        return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
    }

    LaurentZ operator+(const LaurentZ& o) const {
        LaurentZ r = *this;
        for (auto& [e, a] : o.c_) {
            auto it = r.c_.find(e);
            if (it == r.c_.end()) {
                r.c_[e] = a;
            } else {
                it->second = checked_add(it->second, a);
                if (it->second == 0) r.c_.erase(it);
            }
        }
        return r;
    }

    LaurentZ& operator+=(const LaurentZ& o) { return *this = *this + o; }

    LaurentZ operator-() const {
        LaurentZ r = *this;
        for (auto& [e, a] : r.c_) a = checked_mul(a, -1);
        return r;
    }

    LaurentZ operator*(const LaurentZ& o) const {
        LaurentZ r;
        for (auto& [e1, a1] : c_)
            for (auto& [e2, a2] : o.c_) {
                int e = e1 + e2;
                long long p = checked_mul(a1, a2);
                auto it = r.c_.find(e);
                if (it == r.c_.end()) {
                    if (p != 0) r.c_[e] = p;
                } else {
                    it->second = checked_add(it->second, p);
                    if (it->second == 0) r.c_.erase(it);
                }
            }
        return r;
    }

    bool operator==(const LaurentZ& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentZ& o) const { return !(*this == o); }

    // Evaluation at t = 1 followed by reduction mod 2.
    Z2 at_t1_mod2() const {
        long long s = 0;
        for (auto& [e, a] : c_) s ^= (a & 1);
        return Z2{s};
    }

    const std::map<int, long long>& coeffs() const { return c_; }

    // "1", "-1", "t", "t^-1", "2 t^3 - 1", ...
    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            long long a = it->second;
            int e = it->first;
            if (first) {
                if (a < 0) out += "-";
            } else {
                out += (a < 0) ? " - " : " + ";
            }
            long long mag = a < 0 ? -a : a;
            bool need_num = (mag != 1) || (e == 0);
            if (need_num) out += std::to_string(mag);
            if (e != 0) {
                if (need_num) out += " ";
                out += "t";
                if (e != 1) out += "^" + std::to_string(e);
            }
            first = false;
        }
        return out;
    }

    // True when printing this coefficient in front of a word needs parentheses.
    bool needs_parens() const {
        if (c_.size() > 1) return true;
        if (c_.empty()) return false;
        return false;
    }

  private:
    std::map<int, long long> c_;
};

}  // namespace platdga
