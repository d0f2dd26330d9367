#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "jack/poly.hpp"

namespace jack {

// Element of Q(a), a the Jack parameter.  Canonical form: gcd(num, den) = 1
// and den monic, so equality is representation equality.  Zero is 0/1.
class RatFunc {
   public:
    RatFunc() : den_(1) {}
    RatFunc(long n) : num_(n), den_(1) {}
    RatFunc(const Rat& n) : num_(n), den_(1) {}
    RatFunc(const Poly& n) : num_(n), den_(1) {}
    RatFunc(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static RatFunc alpha() { return RatFunc(Poly::variable()); }
    // a^e for e of either sign
    static RatFunc alpha_pow(long e) {
        if (e >= 0) return RatFunc(Poly::variable().pow(e));
        return RatFunc(Poly(1), Poly::variable().pow(-e));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == Poly(1); }
    bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }

    // the underlying polynomial; error if the denominator is nontrivial
    const Poly& as_poly() const {
        if (!is_polynomial()) throw std::domain_error("rational function is not a polynomial");
        return num_;
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc operator-() const {
        RatFunc r(*this);
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        Poly g = gcd(a.den_, b.den_);
        if (g.degree() <= 0) return reduced(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        Poly da = a.den_ / g, db = b.den_ / g;
        return RatFunc(a.num_ * db + b.num_ * da, a.den_ * db);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        Poly n = (g1.degree() > 0 ? a.num_ / g1 : a.num_) *
                 (g2.degree() > 0 ? b.num_ / g2 : b.num_);
        Poly d = (g2.degree() > 0 ? a.den_ / g2 : a.den_) *
                 (g1.degree() > 0 ? b.den_ / g1 : b.den_);
        return reduced(std::move(n), std::move(d));
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        if (a.is_zero()) return RatFunc();
        Poly g1 = gcd(a.num_, b.num_), g2 = gcd(b.den_, a.den_);
        Poly n = (g1.degree() > 0 ? a.num_ / g1 : a.num_) *
                 (g2.degree() > 0 ? b.den_ / g2 : b.den_);
        Poly d = (g2.degree() > 0 ? a.den_ / g2 : a.den_) *
                 (g1.degree() > 0 ? b.num_ / g1 : b.num_);
        return reduced(std::move(n), std::move(d));
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc pow(long e) const {
        if (e < 0) return RatFunc(1) / pow(-e);
        RatFunc r(1), b(*this);
        unsigned long k = e;
        while (k) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return r;
    }

    // exact evaluation at a rational point; error at a pole
    Rat eval(const Rat& x) const {
        Rat d = den_.eval(x);
        if (d == 0) throw std::domain_error("pole of rational function at " + rat_str(x));
        return num_.eval(x) / d;
    }

    std::string str(const std::string& var = "a") const {
        if (is_polynomial()) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

   private:
    // fast path for results already in lowest terms
    static RatFunc reduced(Poly n, Poly d) {
        RatFunc r;
        if (n.is_zero()) return r;
        Rat lead = d.leading();
        if (lead != 1) {
            Rat inv = Rat(1) / lead;
            n = n * inv;
            d = d * inv;
        }
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Rat lead = den_.leading();
        if (lead != 1) {
            Rat inv = Rat(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Poly num_, den_;
};

}  // namespace jack
