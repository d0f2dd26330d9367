#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "jack/ratfunc.hpp"

namespace jack {

// Weakly decreasing sequence of positive integers; the empty sequence is the
// zero partition.  Zero parts are stripped on construction.
class Partition {
   public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : p_(std::move(parts)) {
        while (!p_.empty() && p_.back() == 0) p_.pop_back();
        for (size_t i = 0; i < p_.size(); ++i) {
            if (p_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && p_[i] > p_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return p_; }
    bool empty() const { return p_.empty(); }
    int length() const { return int(p_.size()); }
    int part(int i) const { return i >= 1 && i <= length() ? p_[i - 1] : 0; }  // 1-based
    long weight() const {
        long w = 0;
        for (int x : p_) w += x;
        return w;
    }

    // multiplicity of the value v among the parts
    int mult(int v) const { return int(std::count(p_.begin(), p_.end(), v)); }

    // total order: weight first, then lexicographic on parts.  Within a fixed
    // weight this refines the dominance order (smaller partitions first).
    friend bool operator<(const Partition& a, const Partition& b) {
        long wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return a.p_ < b.p_;
    }
    friend bool operator==(const Partition& a, const Partition& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator>(const Partition& a, const Partition& b) { return b < a; }

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < p_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(p_[i]);
        }
        return s;
    }

   private:
    std::vector<int> p_;
};

struct Box {
    int row = 0, col = 0;  // 1-based
    friend bool operator==(const Box& a, const Box& b) { return a.row == b.row && a.col == b.col; }
    friend bool operator<(const Box& a, const Box& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    }
};

enum class Dominance { less, equal, greater, incomparable };
enum class HookKind { lower, upper };

inline Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

inline Partition conjugate(const Partition& l) {
    std::vector<int> c;
    if (l.empty()) return Partition();
    c.resize(l.part(1));
    for (int j = 1; j <= l.part(1); ++j) {
        int n = 0;
        for (int x : l.parts())
            if (x >= j) ++n;
        c[j - 1] = n;
    }
    return Partition(std::move(c));
}

// dominance comparison of two partitions of equal weight
inline Dominance dominance_compare(const Partition& mu, const Partition& la) {
    if (mu.weight() != la.weight())
        throw std::invalid_argument("dominance compare requires equal weights");
    bool le = true, ge = true;
    long sm = 0, sl = 0;
    int n = std::max(mu.length(), la.length());
    for (int i = 1; i <= n; ++i) {
        sm += mu.part(i);
        sl += la.part(i);
        if (sm > sl) le = false;
        if (sm < sl) ge = false;
    }
    if (le && ge) return Dominance::equal;
    if (le) return Dominance::less;
    if (ge) return Dominance::greater;
    return Dominance::incomparable;
}

inline bool dominated_by(const Partition& mu, const Partition& la) {
    auto d = dominance_compare(mu, la);
    return d == Dominance::less || d == Dominance::equal;
}

// diagram containment mu subset of la
inline bool contains(const Partition& la, const Partition& mu) {
    if (mu.length() > la.length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > la.part(i)) return false;
    return true;
}

inline std::vector<Box> boxes(const Partition& la) {
    std::vector<Box> b;
    for (int i = 1; i <= la.length(); ++i)
        for (int j = 1; j <= la.part(i); ++j) b.push_back({i, j});
    return b;
}

// Hooks in the convention with the arm weighted by the parameter:
//   lower(s) = a*(arm) + leg + 1,   upper(s) = a*(arm + 1) + leg.
inline RatFunc hook(const Partition& la, const Box& b, HookKind kind) {
    if (b.row < 1 || b.row > la.length() || b.col < 1 || b.col > la.part(b.row))
        throw std::invalid_argument("box outside the diagram");
    Partition conj = conjugate(la);
    int arm = la.part(b.row) - b.col;
    int leg = conj.part(b.col) - b.row;
    if (kind == HookKind::lower)
        return RatFunc(Poly(std::vector<Rat>{Rat(leg + 1), Rat(arm)}));
    return RatFunc(Poly(std::vector<Rat>{Rat(leg), Rat(arm + 1)}));
}

inline RatFunc hook_product(const Partition& la, const std::vector<Box>& s, HookKind kind) {
    RatFunc r(1);
    for (const auto& b : s) r *= hook(la, b, kind);
    return r;
}

inline RatFunc hook_product_all(const Partition& la, HookKind kind) {
    return hook_product(la, boxes(la), kind);
}

// A box is based iff its column meets la - mu (requires mu inside la).
struct BasedSplit {
    std::vector<Box> lambda_based, lambda_unbased, mu_based, mu_unbased;
};

inline BasedSplit based_split(const Partition& la, const Partition& mu) {
    if (!contains(la, mu)) throw std::invalid_argument("based split requires mu inside lambda");
    Partition lc = conjugate(la), mc = conjugate(mu);
    auto based_col = [&](int j) { return lc.part(j) > mc.part(j); };
    BasedSplit out;
    for (const auto& b : boxes(la))
        (based_col(b.col) ? out.lambda_based : out.lambda_unbased).push_back(b);
    for (const auto& b : boxes(mu))
        (based_col(b.col) ? out.mu_based : out.mu_unbased).push_back(b);
    return out;
}

// distinct part values a_1 > ... > a_s with multiplicities n_1, ..., n_s
inline std::vector<std::pair<int, int>> value_multiplicities(const Partition& la) {
    std::vector<std::pair<int, int>> vm;
    for (int x : la.parts()) {
        if (!vm.empty() && vm.back().first == x)
            ++vm.back().second;
        else
            vm.push_back({x, 1});
    }
    return vm;
}

inline int corner_count(const Partition& la) {
    if (la.empty()) throw std::invalid_argument("zero partition has no corners");
    return int(value_multiplicities(la).size());
}

struct Corner {
    Partition rect;          // shape (a_i - a_{i+1})^{n_i}
    std::vector<Box> boxes;  // the removed boxes inside the original diagram
    int row_first = 0, row_last = 0, col_first = 0, col_last = 0;
};

inline std::vector<Corner> corners(const Partition& la) {
    if (la.empty()) throw std::invalid_argument("zero partition has no corners");
    auto vm = value_multiplicities(la);
    std::vector<Corner> out;
    int row = 0;
    for (size_t i = 0; i < vm.size(); ++i) {
        int a = vm[i].first, n = vm[i].second;
        int next = i + 1 < vm.size() ? vm[i + 1].first : 0;
        Corner c;
        c.rect = Partition(std::vector<int>(n, a - next));
        c.row_first = row + 1;
        c.row_last = row + n;
        c.col_first = next + 1;
        c.col_last = a;
        for (int r = c.row_first; r <= c.row_last; ++r)
            for (int j = c.col_first; j <= c.col_last; ++j) c.boxes.push_back({r, j});
        out.push_back(std::move(c));
        row += n;
    }
    return out;
}

inline bool is_rectangle(const Partition& la) {
    return !la.empty() && value_multiplicities(la).size() == 1;
}

// complement of nu inside the rectangle (r^s): (r - nu_s, ..., r - nu_1)
inline Partition complement(const Partition& rect, const Partition& nu) {
    if (!is_rectangle(rect) && !rect.empty())
        throw std::invalid_argument("complement requires a rectangular partition");
    if (rect.empty()) {
        if (!nu.empty()) throw std::invalid_argument("nu not inside the rectangle");
        return Partition();
    }
    int r = rect.part(1), s = rect.length();
    if (nu.length() > s || nu.part(1) > r)
        throw std::invalid_argument("nu not inside the rectangle");
    std::vector<int> out;
    for (int i = s; i >= 1; --i) out.push_back(r - nu.part(i));
    return Partition(std::move(out));
}

inline bool is_horizontal_strip(const Partition& la, const Partition& mu, long n) {
    if (!contains(la, mu)) return false;
    if (la.weight() - mu.weight() != n) return false;
    Partition lc = conjugate(la), mc = conjugate(mu);
    for (int j = 1; j <= lc.length(); ++j)
        if (lc.part(j) - mc.part(j) > 1) return false;
    return true;
}

// containment of part multiplicities
inline bool exp_contains(const Partition& la, const Partition& mu) {
    for (auto [v, m] : value_multiplicities(mu))
        if (la.mult(v) < m) return false;
    return true;
}

inline Partition exp_diff(const Partition& la, const Partition& mu) {
    if (!exp_contains(la, mu))
        throw std::invalid_argument("mu not exponentially contained in lambda");
    std::vector<int> out;
    auto rest = mu.parts();
    for (int x : la.parts()) {
        auto it = std::find(rest.begin(), rest.end(), x);
        if (it != rest.end())
            rest.erase(it);
        else
            out.push_back(x);
    }
    return Partition(std::move(out));
}

// product over part values of binomial(m_v(la), m_v(mu))
inline Rat exp_binomial(const Partition& la, const Partition& mu) {
    if (!exp_contains(la, mu))
        throw std::invalid_argument("mu not exponentially contained in lambda");
    Int r = 1;
    for (auto [v, m] : value_multiplicities(mu)) r *= binomial(la.mult(v), m);
    return Rat(r);
}

// multiset union of parts
inline Partition exp_union(const Partition& a, const Partition& b) {
    std::vector<int> out = a.parts();
    out.insert(out.end(), b.parts().begin(), b.parts().end());
    std::sort(out.rbegin(), out.rend());
    return Partition(std::move(out));
}

// minimal enclosing rectangle (lambda_1 ^ length)
inline Partition enclosing_rectangle(const Partition& la) {
    if (la.empty()) throw std::invalid_argument("zero partition has no enclosing rectangle");
    return Partition(std::vector<int>(la.length(), la.part(1)));
}

// complement of lambda in its enclosing rectangle
inline Partition rectangle_complement(const Partition& la) {
    return complement(enclosing_rectangle(la), la);
}

// nested rectangles R_i, one per corner, obtained by iterating the
// enclosing-rectangle complement
inline std::vector<Partition> rect_filtration(const Partition& la) {
    if (la.empty()) throw std::invalid_argument("zero partition has no filtration");
    std::vector<Partition> out;
    Partition cur = la;
    while (!cur.empty()) {
        out.push_back(enclosing_rectangle(cur));
        cur = rectangle_complement(cur);
    }
    return out;
}

// Closed form of the filtration from the multiplicity types of lambda and its
// conjugate: R_i = (p*_i ^ n*_i) with n*_{2i+1} = sum_{i<j<s-i+1} n_j and
// n*_{2i} = sum_{i<j<=s-i+1} n_j.
inline std::vector<int> star_vector(const std::vector<int>& n) {
    int s = int(n.size());
    auto range_sum = [&](int lo, int hi) {  // sum of n_j for lo <= j <= hi, 1-based
        long r = 0;
        for (int j = std::max(lo, 1); j <= std::min(hi, s); ++j) r += n[j - 1];
        return int(r);
    };
    std::vector<int> out(s);
    for (int m = 1; m <= s; ++m) {
        if (m % 2 == 1) {
            int i = (m - 1) / 2;
            out[m - 1] = range_sum(i + 1, s - i);
        } else {
            int i = m / 2;
            out[m - 1] = range_sum(i + 1, s - i + 1);
        }
    }
    return out;
}

inline std::vector<Partition> filtration_closed_form(const Partition& la) {
    if (la.empty()) throw std::invalid_argument("zero partition has no filtration");
    auto vm = value_multiplicities(la);
    int s = int(vm.size());
    std::vector<int> n(s), p(s);
    for (int i = 0; i < s; ++i) n[i] = vm[i].second;
    for (int i = 1; i <= s; ++i) {
        int a1 = s + 1 - i <= s ? vm[s - i].first : 0;
        int a2 = s + 2 - i <= s ? vm[s + 1 - i].first : 0;
        p[i - 1] = a1 - a2;
    }
    auto ns = star_vector(n), ps = star_vector(p);
    std::vector<Partition> out;
    for (int i = 0; i < s; ++i) out.push_back(Partition(std::vector<int>(ns[i], ps[i])));
    return out;
}

// If la - mu is exactly an upside-down omega of one corner of la (right
// aligned boxes removed from the bottom rows of the corner), return omega.
inline std::optional<Partition> corner_removal_shape(const Partition& la, const Partition& mu) {
    if (!contains(la, mu) || la == mu) return std::nullopt;
    auto cs = corners(la);
    for (const auto& c : cs) {
        bool ok = true;
        std::vector<int> removed;  // per-row counts inside this corner, top to bottom
        for (int i = 1; i <= la.length() && ok; ++i) {
            int d = la.part(i) - mu.part(i);
            if (d < 0) ok = false;
            if (d > 0 && (i < c.row_first || i > c.row_last)) ok = false;
        }
        if (!ok) continue;
        for (int i = c.row_first; i <= c.row_last; ++i) removed.push_back(la.part(i) - mu.part(i));
        // removal must fill a suffix of the corner rows, weakly increasing downward
        int width = c.col_last - c.col_first + 1;
        std::vector<int> omega;
        for (size_t i = removed.size(); i-- > 0;) omega.push_back(removed[i]);
        // omega read bottom-up must be a partition bounded by the corner width
        bool shape = true;
        bool seen_zero = false;
        for (size_t i = 0; i < omega.size(); ++i) {
            if (omega[i] == 0) seen_zero = true;
            if (omega[i] > 0 && seen_zero) shape = false;
            if (i > 0 && omega[i] > omega[i - 1]) shape = false;
            if (omega[i] > width) shape = false;
        }
        if (!shape) continue;
        while (!omega.empty() && omega.back() == 0) omega.pop_back();
        if (omega.empty()) continue;
        return Partition(std::move(omega));
    }
    return std::nullopt;
}

inline const std::vector<Partition>& partitions_of(int n) {
    static std::map<int, std::vector<Partition>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, n == 0 ? 1 : n);
    std::sort(out.begin(), out.end());
    return cache.emplace(n, std::move(out)).first->second;
}

// z_lambda = prod_i i^{m_i} m_i!
inline Rat z_lambda(const Partition& la) {
    Int z = 1;
    for (auto [v, m] : value_multiplicities(la)) {
        Int vp;
        mpz_ui_pow_ui(vp.get_mpz_t(), v, m);
        z *= vp * factorial(m);
    }
    return Rat(z);
}

}  // namespace jack
