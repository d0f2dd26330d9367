#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jack/jack.hpp"

namespace jack {

// One evaluated Littlewood-Richardson coefficient <J_mu J_nu, J_la> together
// with its polynomiality and positivity verdicts.
struct LRReport {
    Partition mu, nu, lambda;
    RatFunc value;
    bool is_polynomial = false;
    bool is_nonneg_int = false;
    std::string route;                             // oracle | rect_closed | marked_closed
    std::optional<Partition> corner_removal;       // la - mu is an upside-down shape of a corner
};

inline bool value_is_nonneg_int_poly(const RatFunc& v) {
    return v.is_polynomial() && poly_is_nonneg_int(v.num());
}

// inner-product oracle; zero when the weights do not balance
inline RatFunc lr_oracle(const Partition& mu, const Partition& nu, const Partition& la) {
    if (mu.weight() + nu.weight() != la.weight()) return RatFunc();
    return inner(jack_j(mu) * jack_j(nu), jack_j(la));
}

// Closed form for a rectangular outer shape la = (r^s): the product
// <J_mu J_nu, J_la> vanishes unless mu is the complement of nu in la, and
// then equals  lower(mu) upper(nu) h1(mu) h2(nu)  with
//   h1(mu) = prod_{(i,j) in mu} [(mu'_j - i) + a (r - j + 1)],
//   h2(nu) = prod_{(i,j) in nu} [(s - i + 1) + a (j - 1)].
struct RectLR {
    Partition mu_bar;
    RatFunc value;
};

inline RectLR rect_lr(const Partition& rect, const Partition& nu) {
    if (!is_rectangle(rect)) throw std::invalid_argument("rect_lr requires a rectangle");
    if (!contains(rect, nu)) throw std::invalid_argument("nu not inside the rectangle");
    int r = rect.part(1), s = rect.length();
    RectLR out;
    out.mu_bar = complement(rect, nu);
    RatFunc v = hook_product_all(out.mu_bar, HookKind::lower) *
                hook_product_all(nu, HookKind::upper);
    Partition muc = conjugate(out.mu_bar);
    for (const auto& b : boxes(out.mu_bar))
        v *= RatFunc(Poly(std::vector<Rat>{Rat(muc.part(b.col) - b.row), Rat(r - b.col + 1)}));
    for (const auto& b : boxes(nu))
        v *= RatFunc(Poly(std::vector<Rat>{Rat(s - b.row + 1), Rat(b.col - 1)}));
    out.value = v;
    return out;
}

// Closed form for a marked rectangle la = (r^{s-1}, r-n), 0 <= n <= r.
// Vanishes unless nu sits inside (r^s) and nubar - mu is a horizontal
// n-strip (nubar the complement of nu).  Otherwise
//   (r-n)! n! / r! * 1/prod_{i=0}^{n-1}(s + i a)
//   * lower(mu_unbased) upper(mu_based) / (lower(nubar_unbased) upper(nubar_based))
//   * rect_lr((r^s), nu),
// with the based/unbased split taken for the pair mu inside nubar.  The
// printed source formula carries the reciprocal hook ratio and a stray
// n! a^n; this is the variant that agrees with the inner-product oracle
// (route-agreement suite, weight <= 8).
inline RatFunc marked_rect_lr(int r, int s, int n, const Partition& mu, const Partition& nu) {
    if (r < 1 || s < 1 || n < 0 || n > r) throw std::invalid_argument("bad marked rectangle");
    std::vector<int> lam(s, r);
    lam[s - 1] = r - n;
    Partition la(lam);
    if (mu.weight() + nu.weight() != la.weight()) return RatFunc();
    Partition rect(std::vector<int>(s, r));
    if (!contains(rect, nu)) return RatFunc();
    Partition nubar = complement(rect, nu);
    if (!is_horizontal_strip(nubar, mu, n)) return RatFunc();
    RatFunc pref = RatFunc(Rat(factorial(r - n) * factorial(n)) / Rat(factorial(r)));
    for (int i = 0; i < n; ++i)
        pref = pref / RatFunc(Poly(std::vector<Rat>{Rat(s), Rat(i)}));
    BasedSplit sp = based_split(nubar, mu);
    RatFunc ratio = hook_product(mu, sp.mu_unbased, HookKind::lower) *
                    hook_product(mu, sp.mu_based, HookKind::upper) /
                    (hook_product(nubar, sp.lambda_unbased, HookKind::lower) *
                     hook_product(nubar, sp.lambda_based, HookKind::upper));
    return pref * ratio * rect_lr(rect, nu).value;
}

// q-basis form of the two-row hook J_{(n,1)}:
//   (n-1)! a^n [ (1 + n a) q_n q_1 - (n + 1) q_{n+1} ]
inline SymFun jack_j_n1_qexpansion(int n) {
    if (n < 1) throw std::invalid_argument("needs n >= 1");
    RatFunc an = RatFunc(Rat(factorial(n - 1))) * RatFunc::alpha_pow(n);
    RatFunc c1 = RatFunc(Poly(std::vector<Rat>{Rat(1), Rat(n)}));
    SymFun f = (q_one_row(n) * q_one_row(1)) * c1;
    f -= q_one_row(n + 1) * RatFunc(Rat(n + 1));
    return f * an;
}

inline LRReport make_lr_report(const Partition& mu, const Partition& nu, const Partition& la,
                               RatFunc value, std::string route) {
    LRReport rep;
    rep.mu = mu;
    rep.nu = nu;
    rep.lambda = la;
    rep.is_polynomial = value.is_polynomial();
    rep.is_nonneg_int = value_is_nonneg_int_poly(value);
    rep.value = std::move(value);
    rep.route = std::move(route);
    rep.corner_removal = corner_removal_shape(la, mu);
    return rep;
}

// Exhaustive oracle sweep over all (mu, la) for a fixed nu with
// |la| <= max_weight, in deterministic order.
inline std::vector<LRReport> positivity_sweep(const Partition& nu, int max_weight) {
    std::vector<LRReport> out;
    for (int w = int(nu.weight()); w <= max_weight; ++w)
        for (const auto& la : partitions_of(w))
            for (const auto& mu : partitions_of(w - int(nu.weight())))
                out.push_back(make_lr_report(mu, nu, la, lr_oracle(mu, nu, la), "oracle"));
    return out;
}

}  // namespace jack
