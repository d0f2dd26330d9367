#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "jack/symfun.hpp"

namespace jack {

// The three standard normalizations of the Jack function of shape lambda.
// J = lower_norm * P,  J = upper_norm * Q,  <J, J> = lower_norm * upper_norm,
// where lower_norm / upper_norm are the full lower / upper hook products.
struct JackTriple {
    Partition lambda;
    SymFun P, Q, J;
    RatFunc norm_p;  // <P, P>
    RatFunc lower_norm, upper_norm;
};

enum class GramOrder { lex, conjugate_lex };

// linear extensions of dominance used by the Gram-Schmidt oracle
inline std::vector<Partition> partitions_in_order(int n, GramOrder order) {
    std::vector<Partition> ps = partitions_of(n);
    if (order == GramOrder::conjugate_lex)
        std::sort(ps.begin(), ps.end(), [](const Partition& a, const Partition& b) {
            return conjugate(b).parts() < conjugate(a).parts();
        });
    return ps;  // partitions_of is already sorted lexicographically
}

// Gram-Schmidt over a linear extension of dominance: P_la = m_la plus a
// combination of earlier monomials, orthogonal to everything before it.
// This is the ground-truth construction; every closed form is checked
// against it.
inline std::map<Partition, SymFun> gram_schmidt_level(int n, GramOrder order) {
    std::map<Partition, SymFun> out;
    std::vector<SymFun> basis;
    std::vector<RatFunc> norms;
    for (const auto& la : partitions_in_order(n, order)) {
        SymFun f = monomial_sym(la);
        for (size_t j = 0; j < basis.size(); ++j) {
            RatFunc c = inner(f, basis[j]) / norms[j];
            if (!c.is_zero()) f -= basis[j] * c;
        }
        norms.push_back(inner(f, f));
        basis.push_back(f);
        out.emplace(la, std::move(f));
    }
    return out;
}

namespace detail {

struct JackStore {
    std::mutex mutex;
    std::map<Partition, JackTriple> triples;
};

inline JackStore& jack_store() {
    static JackStore s;
    return s;
}

inline JackTriple make_triple(const Partition& la, SymFun p) {
    JackTriple t;
    t.lambda = la;
    t.norm_p = la.empty() ? RatFunc(1) : inner(p, p);
    t.lower_norm = hook_product_all(la, HookKind::lower);
    t.upper_norm = hook_product_all(la, HookKind::upper);
    t.Q = p * (RatFunc(1) / t.norm_p);
    t.J = p * t.lower_norm;
    t.P = std::move(p);
    return t;
}

}  // namespace detail

// memoized Jack triple; whole weight levels are orthogonalized at once
inline const JackTriple& jack_triple(const Partition& la) {
    auto& store = detail::jack_store();
    std::lock_guard<std::mutex> lock(store.mutex);
    auto it = store.triples.find(la);
    if (it != store.triples.end()) return it->second;
    int n = int(la.weight());
    auto level = gram_schmidt_level(n, GramOrder::lex);
    for (auto& [mu, p] : level)
        store.triples.emplace(mu, detail::make_triple(mu, std::move(p)));
    return store.triples.at(la);
}

inline const SymFun& jack_p(const Partition& la) { return jack_triple(la).P; }
inline const SymFun& jack_q(const Partition& la) { return jack_triple(la).Q; }
inline const SymFun& jack_j(const Partition& la) { return jack_triple(la).J; }

// Triangular recurrence for the monomial expansion of P_la, solved inside
// the dominance ideal below la.  Needed where full Gram-Schmidt is too
// expensive (the filtration rectangles reach weight ~20).  With
// rho(k) = sum_i k_i((k_i - 1)a - 2(i - 1)), the coefficient of m_mu is
//   c_mu = 2 / (rho(la) - rho(mu)) * sum over single box moves
//          (mu_i - mu_j + 2r) c_{nu(i,j,r)},
// where nu(i,j,r) moves r boxes from row j up to row i, sorted, nu <= la.
inline Poly dominance_eigenvalue(const Partition& ka) {
    Poly r;
    for (int i = 1; i <= ka.length(); ++i) {
        long k = ka.part(i);
        r += Poly(std::vector<Rat>{Rat(-2 * k * (i - 1)), Rat(k * (k - 1))});
    }
    return r;
}

inline std::map<Partition, RatFunc> jack_p_monomial_coeffs(const Partition& la) {
    std::map<Partition, RatFunc> c;
    c.emplace(la, RatFunc(1));
    std::vector<Partition> ideal;
    for (const auto& mu : partitions_of(int(la.weight())))
        if (mu != la && dominated_by(mu, la)) ideal.push_back(mu);
    // lexicographically descending: every move target precedes its source
    std::sort(ideal.rbegin(), ideal.rend());
    Poly rho_la = dominance_eigenvalue(la);
    for (const auto& mu : ideal) {
        RatFunc sum;
        const auto& mp = mu.parts();
        int l = mu.length();
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                for (int r = 1; r <= mp[j]; ++r) {
                    std::vector<int> v = mp;
                    v[i] += r;
                    v[j] -= r;
                    std::sort(v.rbegin(), v.rend());
                    Partition nu(v);
                    auto it = c.find(nu);
                    if (it == c.end()) continue;  // outside the ideal
                    sum += it->second * RatFunc(Rat(mp[i] - mp[j] + 2 * r));
                }
        if (sum.is_zero()) continue;
        c.emplace(mu, sum * RatFunc(2) / RatFunc(rho_la - dominance_eigenvalue(mu)));
    }
    return c;
}

inline const SymFun& jack_p_recurrence(const Partition& la) {
    static std::map<Partition, SymFun> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(la);
    if (it != cache.end()) return it->second;
    SymFun f;
    for (const auto& [mu, cm] : jack_p_monomial_coeffs(la)) f += monomial_sym(mu) * cm;
    return cache.emplace(la, std::move(f)).first->second;
}

// Q normalization via hook products, avoiding the inner product for the
// large rectangles used by the filtration
inline const SymFun& jack_q_recurrence(const Partition& la) {
    static std::map<Partition, SymFun> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(la);
    if (it != cache.end()) return it->second;
    SymFun q = jack_p_recurrence(la) *
               (hook_product_all(la, HookKind::lower) / hook_product_all(la, HookKind::upper));
    return cache.emplace(la, std::move(q)).first->second;
}

// Pieri coefficient <J_mu J_(n), J_la>.  Nonzero exactly when la - mu is a
// horizontal n-strip, and then equal to
//   n! a^n  upper(la_unbased) lower(la_based) upper(mu_based) lower(mu_unbased).
// The four-way hook assignment is the unique one matching the inner-product
// oracle on every strip up to weight 8 (see the tests).
inline RatFunc pieri_coefficient(const Partition& mu, int n, const Partition& la) {
    if (n < 0) throw std::invalid_argument("pieri coefficient needs n >= 0");
    if (!is_horizontal_strip(la, mu, n)) return RatFunc();
    if (n == 0) {
        RatFunc h = hook_product_all(la, HookKind::lower) * hook_product_all(la, HookKind::upper);
        return h;  // <J_la, J_la>
    }
    BasedSplit s = based_split(la, mu);
    RatFunc v = RatFunc(Rat(factorial(n))) * RatFunc::alpha_pow(n);
    v *= hook_product(la, s.lambda_unbased, HookKind::upper);
    v *= hook_product(la, s.lambda_based, HookKind::lower);
    v *= hook_product(mu, s.mu_based, HookKind::upper);
    v *= hook_product(mu, s.mu_unbased, HookKind::lower);
    return v;
}

// the sixteen candidate hook assignments, used by the resolution test
inline RatFunc pieri_candidate(const Partition& mu, int n, const Partition& la, int mask) {
    if (!is_horizontal_strip(la, mu, n) || n == 0) return RatFunc();
    BasedSplit s = based_split(la, mu);
    auto kind = [&](int bit) { return (mask >> bit) & 1 ? HookKind::upper : HookKind::lower; };
    RatFunc v = RatFunc(Rat(factorial(n))) * RatFunc::alpha_pow(n);
    v *= hook_product(la, s.lambda_unbased, kind(0));
    v *= hook_product(la, s.lambda_based, kind(1));
    v *= hook_product(mu, s.mu_based, kind(2));
    v *= hook_product(mu, s.mu_unbased, kind(3));
    return v;
}

// expansion of Q_la in the q-basis: Q_la = q_la + sum_{mu > la} a_mu q_mu,
// coefficients extracted by the dual pairing against monomial functions
inline std::map<Partition, RatFunc> jack_in_qbasis(const Partition& la) {
    std::map<Partition, RatFunc> out;
    const SymFun& q = jack_q(la);
    for (const auto& mu : partitions_of(int(la.weight()))) {
        RatFunc a = inner(q, monomial_sym(mu));
        if (!a.is_zero()) out.emplace(mu, std::move(a));
    }
    return out;
}

// Iterated skew construction of Q_la along the rectangular filtration:
//   raw = (...((f_s^* . f_{s-1})^* . f_{s-2})^* ... . f_2)^* . f_1,
// with f_i the Jack Q of the i-th filtration rectangle.  Returns raw and
// the scalar c with Q_la = c * raw, checked exactly against the oracle.
struct FiltrationResult {
    std::vector<Partition> rectangles;
    SymFun raw;
    RatFunc c_prime;
};

inline FiltrationResult jack_q_filtration(const Partition& la) {
    if (la.empty()) throw std::invalid_argument("zero partition has no filtration");
    FiltrationResult res;
    res.rectangles = rect_filtration(la);
    const auto& rects = res.rectangles;
    SymFun f = jack_q_recurrence(rects.back());
    for (size_t i = rects.size() - 1; i-- > 0;) f = skew(f, jack_q_recurrence(rects[i]));
    res.raw = std::move(f);
    if (res.raw.is_zero())
        throw std::runtime_error("filtration construction collapsed to zero");
    auto scale = proportional_scalar(jack_q(la), res.raw);
    if (!scale)
        throw std::runtime_error("filtration construction is not proportional to the Jack function");
    res.c_prime = *scale;
    return res;
}

}  // namespace jack
