#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "jack/jack.hpp"

namespace jack {

// Sparse Laurent polynomial in s commuting variables; every stored exponent
// vector sums to zero and coefficients are exact integers.
struct LaurentPoly {
    int arity = 0;
    std::map<std::vector<int>, Int> terms;

    Int coeff(const std::vector<int>& e) const {
        auto it = terms.find(e);
        return it == terms.end() ? Int(0) : it->second;
    }
};

inline long delta_guard_default() { return 15; }

// Expansion of prod_{i != j} (1 - D_i/D_j)^t by repeated sparse
// multiplication of the two-variable factors.
inline const LaurentPoly& delta_expansion(int s, int t, long guard = delta_guard_default()) {
    if (s < 1 || t < 1) throw std::invalid_argument("delta expansion needs s, t >= 1");
    if (long(s) * t > guard)
        throw resource_error("delta expansion bound exceeded: s*t = " +
                             std::to_string(long(s) * t) + " > " + std::to_string(guard));
    static std::map<std::pair<int, int>, LaurentPoly> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_pair(s, t);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    LaurentPoly f;
    f.arity = s;
    f.terms[std::vector<int>(s, 0)] = 1;
    std::vector<Int> binom(t + 1);
    for (int k = 0; k <= t; ++k) binom[k] = binomial(t, k) * (k % 2 ? -1 : 1);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            if (i == j) continue;
            std::map<std::vector<int>, Int> next;
            for (const auto& [e, c] : f.terms)
                for (int k = 0; k <= t; ++k) {
                    std::vector<int> e2 = e;
                    e2[i] += k;
                    e2[j] -= k;
                    Int& slot = next[e2];
                    slot += c * binom[k];
                    if (slot == 0) next.erase(e2);
                }
            f.terms = std::move(next);
        }
    return cache.emplace(key, std::move(f)).first->second;
}

inline Int delta_coefficient(const std::vector<int>& beta, int s, int t,
                             long guard = delta_guard_default()) {
    if (int(beta.size()) != s) throw std::invalid_argument("exponent vector has wrong arity");
    long sum = 0;
    for (int b : beta) sum += b;
    if (sum != 0) throw std::invalid_argument("exponent vector must sum to zero");
    return delta_expansion(s, t, guard).coeff(beta);
}

// (st)! / (t!)^s
inline Int dyson_constant(int s, int t) {
    Int d = factorial(long(s) * t);
    Int f = factorial(t);
    Int fp;
    mpz_pow_ui(fp.get_mpz_t(), f.get_mpz_t(), s);
    return d / fp;
}

// ---- closed forms for particular coefficients --------------------------

// coefficient of D_1^{-1}..D_i^{-1} D_{s-i+1}..D_s:
//   (st)!/(t!)^s * i! (-t)^i / prod_{j=1}^{i} (1 + (s-j)t)
inline Rat closed_pattern_i(int i, int s, int t) {
    if (i < 1 || 2 * i > s) throw std::invalid_argument("pattern needs 1 <= i and 2i <= s");
    Rat v(dyson_constant(s, t));
    v *= factorial(i);
    v *= rat_pow(Rat(-t), i);
    for (int j = 1; j <= i; ++j) v /= Rat(1 + long(s - j) * t);
    return v;
}

inline std::vector<int> pattern_i_exponents(int i, int s) {
    std::vector<int> e(s, 0);
    for (int k = 0; k < i; ++k) {
        e[k] = -1;
        e[s - 1 - k] = 1;
    }
    return e;
}

// coefficient of D_1^{-2} D_s^2, as displayed:
//   (st)!/(t!)^s * (2t^2 - (1+(s-1)t)(1+(s-2)t)t)
//                / ((1+(s-1)t)(1+(s-2)t)(2+(s-1)t))
inline Rat closed_minus2_plus2(int s, int t) {
    if (s < 2) throw std::invalid_argument("pattern needs s >= 2");
    Rat a1(1 + long(s - 1) * t), a2(1 + long(s - 2) * t), a3(2 + long(s - 1) * t);
    Rat num = Rat(2) * Rat(t) * Rat(t) - a1 * a2 * Rat(t);
    return Rat(dyson_constant(s, t)) * num / (a1 * a2 * a3);
}

inline std::vector<int> minus2_plus2_exponents(int s) {
    std::vector<int> e(s, 0);
    e[0] = -2;
    e[s - 1] = 2;
    return e;
}

// coefficient of D_1^{-1} D_2^{-1} D_s^2, as displayed:
//   (st)!/(t!)^s * 2(2+(s-1)t)t^2
//                / ((1+(s-1)t)(1+(s-2)t)(3+(2s-3)t))
inline Rat closed_minus1_minus1_plus2(int s, int t) {
    if (s < 3) throw std::invalid_argument("pattern needs s >= 3");
    Rat a1(1 + long(s - 1) * t), a2(1 + long(s - 2) * t), a3(3 + long(2 * s - 3) * t);
    Rat num = Rat(2) * Rat(2 + long(s - 1) * t) * Rat(t) * Rat(t);
    return Rat(dyson_constant(s, t)) * num / (a1 * a2 * a3);
}

inline std::vector<int> minus1_minus1_plus2_exponents(int s) {
    std::vector<int> e(s, 0);
    e[0] = -1;
    e[1] = -1;
    e[s - 1] = 2;
    return e;
}

// ---- action on q-products ----------------------------------------------

// q-indexed result of acting with the expanded operator on q_{e_1}..q_{e_s};
// negative indices annihilate a term, zero indices drop out.  The factors
// are multiplied with annihilation pruning: a state is dead once an index
// cannot climb back to zero with the remaining numerator capacity, which
// keeps long columns (large s) tractable without the full expansion.
inline long action_guard_default() { return 24; }  // pruned path tolerates more

inline std::map<Partition, Rat> delta_q_action_qbasis(const std::vector<int>& exps, int t,
                                                      long guard = action_guard_default()) {
    int s = int(exps.size());
    if (s < 1 || t < 1) throw std::invalid_argument("operator action needs s, t >= 1");
    if (long(s) * t > guard)
        throw resource_error("operator action bound exceeded: s*t = " +
                             std::to_string(long(s) * t) + " > " + std::to_string(guard));
    std::vector<Int> binom(t + 1);
    for (int k = 0; k <= t; ++k) binom[k] = binomial(t, k) * (k % 2 ? -1 : 1);
    std::vector<long> remaining(s, long(t) * (s - 1));  // future gain per index
    std::map<std::vector<int>, Int> states;
    states[exps] = 1;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            if (i == j) continue;
            remaining[i] -= t;
            std::map<std::vector<int>, Int> next;
            for (const auto& [v, c] : states)
                for (int k = 0; k <= t; ++k) {
                    std::vector<int> v2 = v;
                    v2[i] += k;
                    v2[j] -= k;
                    if (v2[j] + remaining[j] < 0) continue;
                    if (v2[i] + remaining[i] < 0) continue;
                    Int& slot = next[v2];
                    slot += c * binom[k];
                    if (slot == 0) next.erase(v2);
                }
            states = std::move(next);
        }
    std::map<Partition, Rat> out;
    for (const auto& [v, c] : states) {
        std::vector<int> idx = v;
        bool dead = false;
        for (int x : idx)
            if (x < 0) dead = true;
        if (dead) continue;
        std::sort(idx.rbegin(), idx.rend());
        while (!idx.empty() && idx.back() == 0) idx.pop_back();
        Partition key(idx);
        Rat& slot = out[key];
        slot += Rat(c);
        if (slot == 0) out.erase(key);
    }
    return out;
}

// numeric q_la at parameter 1/t, cached
inline const NumSymFun& q_product_at(const Partition& la, int t) {
    static std::map<std::pair<Partition, int>, NumSymFun> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_pair(la, t);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    NumSymFun f = sf_eval(q_product(la), Rat(1) / Rat(t));
    return cache.emplace(key, std::move(f)).first->second;
}

// power-sum expansion of the operator action, at parameter 1/t
inline NumSymFun delta_q_action(const std::vector<int>& exps, int t,
                                long guard = action_guard_default()) {
    NumSymFun out;
    for (const auto& [key, c] : delta_q_action_qbasis(exps, t, guard))
        num_add_scaled(out, q_product_at(key, t), c);
    return out;
}

// Normalized image of the product of vertex operators attached to la: the
// operator action on q_{la_1}..q_{la_s} divided by (st)!/(t!)^s, a symmetric
// function with rational coefficients at parameter 1/t.
inline NumSymFun vertex_image(const Partition& la, int t, long guard = action_guard_default()) {
    int s = la.length();
    std::vector<int> exps(la.parts().begin(), la.parts().end());
    NumSymFun f = delta_q_action(exps, t, guard);
    Rat scale = Rat(rat_pow(Rat(factorial(t)), s)) / Rat(factorial(long(s) * t));
    NumSymFun out;
    for (const auto& [key, c] : f) out[key] = c * scale;
    return out;
}

inline std::map<Partition, Rat> vertex_image_qbasis(const Partition& la, int t,
                                                    long guard = action_guard_default()) {
    int s = la.length();
    std::vector<int> exps(la.parts().begin(), la.parts().end());
    auto f = delta_q_action_qbasis(exps, t, guard);
    Rat scale = Rat(rat_pow(Rat(factorial(t)), s)) / Rat(factorial(long(s) * t));
    for (auto& [key, c] : f) c *= scale;
    return f;
}

// ---- the positivity kernel ----------------------------------------------
//
// H(Z_s, W_t) = prod_{i != j} (1 - z_i/z_j) prod_{i,j} (1 - z_i/w_j)^{-1},
// expanded so that every coefficient with w-weight <= cutoff is exact.
// Returned as coefficients indexed by pairs of partitions (la, mu).
inline std::map<std::pair<Partition, Partition>, Int> kernel_expansion(int s, int t, int cutoff) {
    if (s < 1 || t < 1 || cutoff < 0) throw std::invalid_argument("bad kernel arguments");
    if (long(s) * t * cutoff > 400)
        throw resource_error("kernel expansion bound exceeded");
    using Key = std::pair<std::vector<int>, std::vector<int>>;  // z exps, w weights
    std::map<Key, Int> f;
    f[{std::vector<int>(s, 0), std::vector<int>(t, 0)}] = 1;
    // finite z-part
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            if (i == j) continue;
            std::map<Key, Int> next;
            for (const auto& [k, c] : f) {
                next[k] += c;
                Key k2 = k;
                ++k2.first[i];
                --k2.first[j];
                Int& slot = next[k2];
                slot -= c;
                if (slot == 0) next.erase(k2);
            }
            f = std::move(next);
        }
    // geometric factors, truncated at total w-weight = cutoff
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) {
            std::map<Key, Int> next;
            for (const auto& [k, c] : f) {
                long wsum = 0;
                for (int x : k.second) wsum += x;
                for (int n = 0; wsum + n <= cutoff; ++n) {
                    Key k2 = k;
                    k2.first[i] += n;
                    k2.second[j] += n;
                    Int& slot = next[k2];
                    slot += c;
                    if (slot == 0) next.erase(k2);
                }
            }
            f = std::move(next);
        }
    std::map<std::pair<Partition, Partition>, Int> out;
    for (const auto& [k, c] : f) {
        if (c == 0) continue;
        bool zpart = true, wpart = true;
        for (size_t i = 0; i < k.first.size(); ++i) {
            if (k.first[i] < 0) zpart = false;
            if (i > 0 && k.first[i] > k.first[i - 1]) zpart = false;
        }
        for (size_t i = 0; i < k.second.size(); ++i)
            if (i > 0 && k.second[i] > k.second[i - 1]) wpart = false;
        if (!zpart || !wpart) continue;
        std::vector<int> zs = k.first, ws = k.second;
        out[{Partition(zs), Partition(ws)}] = c;
    }
    return out;
}

}  // namespace jack
