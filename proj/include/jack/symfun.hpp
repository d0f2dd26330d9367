#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "jack/partition.hpp"

namespace jack {

// Symmetric function over Q(a), stored as a sparse map from partitions to
// power-sum coefficients.  No zero coefficients are kept.
class SymFun {
   public:
    SymFun() = default;
    explicit SymFun(std::map<Partition, RatFunc> terms) : t_(std::move(terms)) { prune(); }

    static SymFun zero() { return SymFun(); }
    static SymFun one() { return power_sum(Partition()); }
    static SymFun power_sum(const Partition& la, RatFunc c = RatFunc(1)) {
        SymFun f;
        f.add_term(la, std::move(c));
        return f;
    }

    const std::map<Partition, RatFunc>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    RatFunc coeff(const Partition& la) const {
        auto it = t_.find(la);
        return it == t_.end() ? RatFunc() : it->second;
    }

    void add_term(const Partition& la, const RatFunc& c) {
        if (c.is_zero()) return;
        auto it = t_.find(la);
        if (it == t_.end()) {
            t_.emplace(la, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    // weight of every key if homogeneous, nullopt for mixed degrees
    std::optional<long> degree() const {
        std::optional<long> d;
        for (const auto& [la, c] : t_) {
            if (!d) d = la.weight();
            else if (*d != la.weight()) return std::nullopt;
        }
        return d;
    }

    friend bool operator==(const SymFun& a, const SymFun& b) { return a.t_ == b.t_; }
    friend bool operator!=(const SymFun& a, const SymFun& b) { return !(a == b); }

    SymFun& operator+=(const SymFun& o) {
        for (const auto& [la, c] : o.t_) {
            auto it = t_.find(la);
            if (it == t_.end())
                t_.emplace(la, c);
            else {
                it->second += c;
                if (it->second.is_zero()) t_.erase(it);
            }
        }
        return *this;
    }
    SymFun& operator-=(const SymFun& o) { return *this += o * RatFunc(-1); }

    friend SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
    friend SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }

    friend SymFun operator*(const SymFun& a, const RatFunc& s) {
        SymFun r;
        if (s.is_zero()) return r;
        for (const auto& [la, c] : a.t_) r.t_.emplace(la, c * s);
        return r;
    }
    friend SymFun operator*(const RatFunc& s, const SymFun& a) { return a * s; }

    // product in the power-sum basis: keys merge as part multisets
    friend SymFun operator*(const SymFun& a, const SymFun& b) {
        SymFun r;
        for (const auto& [la, ca] : a.t_)
            for (const auto& [mu, cb] : b.t_) {
                Partition key = exp_union(la, mu);
                auto it = r.t_.find(key);
                if (it == r.t_.end())
                    r.t_.emplace(key, ca * cb);
                else {
                    it->second += ca * cb;
                    if (it->second.is_zero()) r.t_.erase(it);
                }
            }
        return r;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        for (const auto& [la, c] : t_) {
            if (!s.empty()) s += "  +  ";
            s += "(" + c.str() + ") p[" + la.str() + "]";
        }
        return s;
    }

   private:
    void prune() {
        for (auto it = t_.begin(); it != t_.end();)
            it = it->second.is_zero() ? t_.erase(it) : std::next(it);
    }
    std::map<Partition, RatFunc> t_;
};

// <p_la, p_mu> = delta z_la a^{l(la)}
inline RatFunc inner(const SymFun& f, const SymFun& g) {
    RatFunc r;
    const auto& small = f.size() <= g.size() ? f : g;
    const auto& large = f.size() <= g.size() ? g : f;
    for (const auto& [la, c] : small.terms()) {
        RatFunc d = large.coeff(la);
        if (d.is_zero()) continue;
        r += c * d * RatFunc(z_lambda(la)) * RatFunc::alpha_pow(la.length());
    }
    return r;
}

// Adjoint of multiplication by f:  <f h, g> = <h, skew(f, g)>.  Built from
// p_mu^* . p_nu = z_mu a^{l(mu)} binom(m(nu), m(mu)) p_{nu minus mu}.
inline SymFun skew(const SymFun& f, const SymFun& g) {
    SymFun r;
    for (const auto& [mu, cf] : f.terms()) {
        RatFunc factor = RatFunc(z_lambda(mu)) * RatFunc::alpha_pow(mu.length()) * cf;
        for (const auto& [nu, cg] : g.terms()) {
            if (!exp_contains(nu, mu)) continue;
            r += SymFun::power_sum(exp_diff(nu, mu),
                                   factor * RatFunc(exp_binomial(nu, mu)) * cg);
        }
    }
    return r;
}

// one-row dual Jack function q_n = sum_{la |- n} z_la^{-1} a^{-l(la)} p_la
inline const SymFun& q_one_row(int n) {
    static std::map<int, SymFun> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    SymFun f;
    if (n == 0) f = SymFun::one();
    else if (n > 0)
        for (const auto& la : partitions_of(n))
            f += SymFun::power_sum(la, RatFunc(Rat(1) / z_lambda(la)) *
                                           RatFunc::alpha_pow(-la.length()));
    return cache.emplace(n, std::move(f)).first->second;
}

inline SymFun q_product(const Partition& la) {
    SymFun f = SymFun::one();
    for (int x : la.parts()) f = f * q_one_row(x);
    return f;
}

// Monomial symmetric function in the power-sum basis.  Peels the largest
// part: p_a m_nu = m_a(nu+a) m_{nu+a} + sum over distinct parts b of nu of
// m_{nu with one b replaced by a+b}, which inverts triangularly.
inline const std::map<Partition, Rat>& monomial_in_p(const Partition& mu) {
    static std::map<Partition, std::map<Partition, Rat>> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    std::function<const std::map<Partition, Rat>&(const Partition&)> rec =
        [&](const Partition& key) -> const std::map<Partition, Rat>& {
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        std::map<Partition, Rat> out;
        if (key.empty()) {
            out[Partition()] = 1;
        } else {
            int a = key.part(1);
            std::vector<int> rest(key.parts().begin() + 1, key.parts().end());
            Partition nu(rest);
            // p_a * m_nu
            for (const auto& [la, c] : rec(nu)) {
                Partition merged = exp_union(la, Partition({a}));
                out[merged] += c;
            }
            // subtract merge terms
            for (auto [b, mb] : value_multiplicities(nu)) {
                std::vector<int> v = nu.parts();
                v.erase(std::find(v.begin(), v.end(), b));
                v.push_back(a + b);
                std::sort(v.rbegin(), v.rend());
                Partition merged(v);
                for (const auto& [la, c] : rec(merged)) out[la] -= c;
            }
            Rat div(key.mult(a));
            for (auto& [la, c] : out) c /= div;
            for (auto jt = out.begin(); jt != out.end();)
                jt = jt->second == 0 ? out.erase(jt) : std::next(jt);
        }
        return cache.emplace(key, std::move(out)).first->second;
    };
    return rec(mu);
}

inline SymFun monomial_sym(const Partition& mu) {
    std::map<Partition, RatFunc> t;
    for (const auto& [la, c] : monomial_in_p(mu)) t.emplace(la, RatFunc(c));
    return SymFun(std::move(t));
}

// coefficient of m_nu in f, via <q_la, m_nu> = delta
inline RatFunc monomial_coeff(const SymFun& f, const Partition& nu) {
    return inner(f, q_product(nu));
}

// coefficient of q_nu in f, the dual extraction
inline RatFunc q_coeff(const SymFun& f, const Partition& nu) {
    return inner(f, monomial_sym(nu));
}

// numeric specialization of the parameter
using NumSymFun = std::map<Partition, Rat>;

inline NumSymFun sf_eval(const SymFun& f, const Rat& x) {
    NumSymFun out;
    for (const auto& [la, c] : f.terms()) {
        Rat v = c.eval(x);
        if (v != 0) out[la] = v;
    }
    return out;
}

inline void num_add_scaled(NumSymFun& f, const NumSymFun& g, const Rat& s) {
    if (s == 0) return;
    for (const auto& [la, c] : g) {
        Rat& slot = f[la];
        slot += c * s;
        if (slot == 0) f.erase(la);
    }
}

inline Rat num_inner(const NumSymFun& f, const NumSymFun& g, const Rat& a) {
    Rat r(0);
    const auto& small = f.size() <= g.size() ? f : g;
    const auto& large = f.size() <= g.size() ? g : f;
    for (const auto& [la, c] : small) {
        auto it = large.find(la);
        if (it == large.end()) continue;
        r += c * it->second * z_lambda(la) * rat_pow(a, la.length());
    }
    return r;
}

inline NumSymFun num_skew(const NumSymFun& f, const NumSymFun& g, const Rat& a) {
    NumSymFun r;
    for (const auto& [mu, cf] : f) {
        Rat factor = cf * z_lambda(mu) * rat_pow(a, mu.length());
        for (const auto& [nu, cg] : g) {
            if (!exp_contains(nu, mu)) continue;
            Partition key = exp_diff(nu, mu);
            Rat& slot = r[key];
            slot += factor * exp_binomial(nu, mu) * cg;
            if (slot == 0) r.erase(key);
        }
    }
    return r;
}

// f = c * g for some scalar c != 0; returns c, or nullopt
inline std::optional<RatFunc> proportional_scalar(const SymFun& f, const SymFun& g) {
    if (g.is_zero()) return std::nullopt;
    const auto& [la0, g0] = *g.terms().begin();
    RatFunc c = f.coeff(la0) / g0;
    if (c.is_zero()) return std::nullopt;
    if (f == g * c) return c;
    return std::nullopt;
}

inline std::optional<Rat> num_proportional_scalar(const NumSymFun& f, const NumSymFun& g) {
    if (g.empty()) return std::nullopt;
    const auto& [la0, g0] = *g.begin();
    auto it = f.find(la0);
    if (it == f.end()) return std::nullopt;
    Rat c = it->second / g0;
    NumSymFun scaled;
    for (const auto& [la, v] : g) scaled[la] = v * c;
    if (scaled == f && c != 0) return c;
    return std::nullopt;
}

}  // namespace jack
