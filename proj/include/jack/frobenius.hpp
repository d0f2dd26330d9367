#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "jack/laurent.hpp"

namespace jack {

// Combinatorial power-sum coefficients of rectangular Jack functions at
// integer parameter t: Q_{(k^s)} at parameter 1/t equals
// sum_{mu |- ks} g(k, s, t; mu) p_mu, with g given by a sum over chains
// (mu^0 = (), mu^1, ..., mu^s = mu), |mu^i| = i(k + (s-i)t):
//   g = (-1)^{t s(s-1)/2} (t!)^s / ((st)! (-2)^{l(mu)})
//       * sum over chains prod_i (-2t)^{l(nu^i)} / z_{nu^i}
//                                 * binom(m(mu^{i-1}), m(mu^i minus nu^i)),
// where nu^i is the fresh block of mu^i and mu^i minus nu^i survives from
// mu^{i-1}.  Computed for all mu at once by a forward walk over the levels.
inline const std::map<Partition, Rat>& frobenius_table(int k, int s, int t) {
    if (k < 1 || s < 1 || t < 1) throw std::invalid_argument("frobenius table needs k,s,t >= 1");
    static std::map<std::tuple<int, int, int>, std::map<Partition, Rat>> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_tuple(k, s, t);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::map<Partition, Rat> cur;
    cur[Partition()] = 1;
    for (int i = 1; i <= s; ++i) {
        long wi = long(i) * (k + long(s - i) * t);
        std::map<Partition, Rat> next;
        for (const auto& [prev, acc] : cur) {
            // enumerate surviving sub-multisets sigma of prev with their
            // multiplicity binomials
            auto vm = value_multiplicities(prev);
            std::vector<int> take(vm.size(), 0);
            std::function<void(size_t, long, Rat)> walk = [&](size_t pos, long wt, Rat binom_acc) {
                if (pos == vm.size()) {
                    long need = wi - wt;
                    if (need < 0) return;
                    std::vector<int> sigma;
                    for (size_t q = 0; q < vm.size(); ++q)
                        for (int c = 0; c < take[q]; ++c) sigma.push_back(vm[q].first);
                    std::sort(sigma.rbegin(), sigma.rend());
                    for (const auto& fresh : partitions_of(int(need))) {
                        Partition mui = exp_union(Partition(sigma), fresh);
                        Rat w = acc * binom_acc * rat_pow(Rat(-2 * t), fresh.length()) /
                                z_lambda(fresh);
                        if (w == 0) continue;
                        Rat& slot = next[mui];
                        slot += w;
                        if (slot == 0) next.erase(mui);
                    }
                    return;
                }
                auto [v, mv] = vm[pos];
                for (int c = 0; c <= mv; ++c) {
                    take[pos] = c;
                    walk(pos + 1, wt + long(v) * c, binom_acc * Rat(binomial(mv, c)));
                }
                take[pos] = 0;
            };
            walk(0, 0, Rat(1));
        }
        cur = std::move(next);
    }

    std::map<Partition, Rat> g;
    Rat pref = rat_pow(Rat(factorial(t)), s) / Rat(factorial(long(s) * t));
    if ((long(t) * s * (s - 1) / 2) % 2) pref = -pref;
    for (const auto& [mu, v] : cur) {
        Rat value = pref * v / rat_pow(Rat(-2), mu.length());
        if (value != 0) g[mu] = value;
    }
    return cache.emplace(key, std::move(g)).first->second;
}

inline Rat frobenius_coefficient(int k, int s, int t, const Partition& mu) {
    if (mu.weight() != long(k) * s) throw std::invalid_argument("weight mismatch");
    const auto& tab = frobenius_table(k, s, t);
    auto it = tab.find(mu);
    return it == tab.end() ? Rat(0) : it->second;
}

// compare the combinatorial expansion against the Jack oracle at 1/t
struct FrobeniusRectCheck {
    bool match = false;
    NumSymFun lhs, rhs;
};

inline FrobeniusRectCheck frobenius_rect_check(int k, int s, int t) {
    FrobeniusRectCheck out;
    for (const auto& [mu, c] : frobenius_table(k, s, t)) out.lhs[mu] = c;
    out.rhs = sf_eval(jack_q(Partition(std::vector<int>(s, k))), Rat(1) / Rat(t));
    out.match = out.lhs == out.rhs;
    return out;
}

// Scalar identity obtained from the coefficient of p_1^2 in the s = 2, k = 1
// rectangle:
//   sum_{i=0}^{2} (-2t)^{2-i}/(2-i)! sum_{(1^i) cm nu |- 1+t}
//        (-2t)^{l(nu)}/z_nu binom(m(nu), m(1^i))
//   =  (2t)!/(t!)^2 * 4t^2/(t+1) * (-1)^t.
struct ScalarCheck {
    Rat lhs, rhs;
    bool match = false;
};

inline ScalarCheck frobenius_p11_check(int t) {
    if (t < 1) throw std::invalid_argument("needs t >= 1");
    ScalarCheck out;
    Rat lhs(0);
    for (int i = 0; i <= 2; ++i) {
        Rat outer = rat_pow(Rat(-2 * t), 2 - i) / Rat(factorial(2 - i));
        Partition ones(std::vector<int>(i, 1));
        Rat innersum(0);
        for (const auto& nu : partitions_of(1 + t)) {
            if (!exp_contains(nu, ones)) continue;
            innersum += rat_pow(Rat(-2 * t), nu.length()) / z_lambda(nu) * exp_binomial(nu, ones);
        }
        lhs += outer * innersum;
    }
    out.lhs = lhs;
    Rat rhs = Rat(factorial(2 * t)) / rat_pow(Rat(factorial(t)), 2) * Rat(4 * long(t) * t) /
              Rat(t + 1);
    if (t % 2) rhs = -rhs;
    out.rhs = rhs;
    out.match = out.lhs == out.rhs;
    return out;
}

// General-shape power-sum expansion, up to an overall scalar: the iterated
// skew of the combinatorial rectangle expansions along the filtration,
// evaluated at parameter 1/t.
inline NumSymFun general_frobenius(const Partition& la, int t) {
    if (la.empty()) throw std::invalid_argument("zero partition");
    if (t < 1) throw std::invalid_argument("needs t >= 1");
    auto rects = rect_filtration(la);
    Rat a = Rat(1) / Rat(t);
    auto table_of = [&](const Partition& rect) {
        NumSymFun f;
        for (const auto& [mu, c] : frobenius_table(rect.part(1), rect.length(), t)) f[mu] = c;
        return f;
    };
    NumSymFun f = table_of(rects.back());
    for (size_t i = rects.size() - 1; i-- > 0;) f = num_skew(f, table_of(rects[i]), a);
    return f;
}

}  // namespace jack
