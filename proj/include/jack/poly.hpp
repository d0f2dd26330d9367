#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jack/base.hpp"

namespace jack {

// Dense univariate polynomial over Q in the Jack parameter, coefficients
// stored in ascending degree with trailing zeros trimmed (zero = empty).
class Poly {
   public:
    Poly() = default;
    Poly(const Rat& c) {
        if (c != 0) c_.push_back(c);
    }
    Poly(long c) : Poly(Rat(c)) {}
    explicit Poly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }

    static Poly variable() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const Rat& s) {
        if (s == 0) return Poly();
        Poly r(a);
        for (auto& c : r.c_) c *= s;
        return r;
    }
    friend Poly operator*(const Rat& s, const Poly& a) { return a * s; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    // quotient and remainder; b must be nonzero
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<Rat> r = a.c_;
        int db = b.degree();
        if (a.degree() < db) return {Poly(), a};
        std::vector<Rat> q(a.degree() - db + 1, Rat(0));
        for (int i = a.degree(); i >= db; --i) {
            if (r[i] == 0) continue;
            Rat f = r[i] / b.c_.back();
            q[i - db] = f;
            for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c_[j];
        }
        return {Poly(std::move(q)), Poly(std::move(r))};
    }

    // exact division; throws if the remainder is nonzero
    friend Poly operator/(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
        return q;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (Rat(1) / leading());
    }

    Poly pow(unsigned long e) const {
        Poly r(1), b(*this);
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    Rat eval(const Rat& x) const {
        Rat r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    std::string str(const std::string& var = "a") const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            Rat c = c_[i];
            if (!s.empty()) {
                s += c < 0 ? " - " : " + ";
                if (c < 0) c = -c;
            } else if (c < 0) {
                s += "-";
                c = -c;
            }
            if (i == 0 || c != 1) {
                s += rat_str(c);
                if (i > 0) s += "*";
            }
            if (i > 0) {
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

namespace detail {

// primitive integer image of a rational polynomial
inline std::vector<Int> primitive_int(const Poly& p) {
    Int lcm = 1;
    for (const auto& c : p.coeffs()) {
        Int den(c.get_den());
        lcm = lcm / gcd(lcm, den) * den;
    }
    std::vector<Int> v;
    Int content = 0;
    for (const auto& c : p.coeffs()) {
        Rat scaled = c * Rat(lcm);
        v.push_back(Int(scaled.get_num()));
        content = gcd(content, v.back());
    }
    if (content > 1)
        for (auto& x : v) x /= content;
    return v;
}

inline void int_primitive_part(std::vector<Int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    Int content = 0;
    for (const auto& x : v) content = gcd(content, x);
    if (content > 1)
        for (auto& x : v) x /= content;
}

// pseudo-remainder of a by b over Z, taken primitive
inline std::vector<Int> int_pseudo_rem(std::vector<Int> a, const std::vector<Int>& b) {
    const Int& lead = b.back();
    while (a.size() >= b.size()) {
        Int f = a.back();
        size_t shift = a.size() - b.size();
        for (auto& x : a) x *= lead;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
        int_primitive_part(a);
        if (a.empty()) break;
    }
    return a;
}

}  // namespace detail

// monic gcd via a primitive polynomial remainder sequence over Z, which
// keeps intermediate coefficients small
inline Poly gcd(const Poly& pa, const Poly& pb) {
    if (pa.is_zero()) return pb.monic();
    if (pb.is_zero()) return pa.monic();
    std::vector<Int> a = detail::primitive_int(pa), b = detail::primitive_int(pb);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        auto r = detail::int_pseudo_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    std::vector<Rat> c;
    c.reserve(a.size());
    for (const auto& x : a) c.push_back(Rat(x));
    return Poly(std::move(c)).monic();
}

inline bool poly_is_nonneg_int(const Poly& p) {
    for (const auto& c : p.coeffs())
        if (c < 0 || c.get_den() != 1) return false;
    return true;
}

}  // namespace jack
