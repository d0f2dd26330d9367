#pragma once

// Test-only Schur function oracle: characters by the Murnaghan-Nakayama rule
// on beta-numbers, then s_la = sum_mu chi^la_mu p_mu / z_mu.  Kept independent
// of the library's Jack machinery on purpose.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "jack/symfun.hpp"

namespace schur_oracle {

using jack::Int;
using jack::Partition;
using jack::Rat;
using jack::SymFun;

// all ways to remove a border strip of size k, with the strip height
inline std::vector<std::pair<Partition, int>> strip_removals(const Partition& la, int k) {
    std::vector<std::pair<Partition, int>> out;
    int L = la.length();
    std::vector<long> beta(L);
    for (int i = 1; i <= L; ++i) beta[i - 1] = la.part(i) + (L - i);
    for (int i = 0; i < L; ++i) {
        long nb = beta[i] - k;
        if (nb < 0) continue;
        bool clash = false;
        int height = 0;
        for (int j = 0; j < L; ++j) {
            if (j == i) continue;
            if (beta[j] == nb) {
                clash = true;
                break;
            }
            if (beta[j] < beta[i] && beta[j] > nb) ++height;
        }
        if (clash) continue;
        std::vector<long> nbeta = beta;
        nbeta[i] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        std::vector<int> parts;
        for (int j = 0; j < L; ++j) {
            long p = nbeta[j] - (L - 1 - j);
            if (p > 0) parts.push_back(int(p));
        }
        out.push_back({Partition(std::move(parts)), height});
    }
    return out;
}

inline Int character(const Partition& la, const Partition& mu) {
    static std::map<std::pair<Partition, Partition>, Int> cache;
    if (la.weight() != mu.weight()) return 0;
    if (la.empty()) return 1;
    auto key = std::make_pair(la, mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    int k = mu.part(1);
    std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
    Partition tail(std::move(rest));
    Int total = 0;
    for (const auto& [shape, height] : strip_removals(la, k)) {
        Int c = character(shape, tail);
        total += (height % 2 ? -c : c);
    }
    cache.emplace(key, total);
    return total;
}

inline SymFun schur(const Partition& la) {
    SymFun f;
    for (const auto& mu : jack::partitions_of(int(la.weight()))) {
        Int chi = character(la, mu);
        if (chi == 0) continue;
        f += SymFun::power_sum(mu, jack::RatFunc(Rat(chi) / jack::z_lambda(mu)));
    }
    return f;
}

}  // namespace schur_oracle
