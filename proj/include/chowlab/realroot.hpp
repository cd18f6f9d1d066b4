// realroot.hpp
// Exact real-root machinery: Sturm sequences, squarefree (Yun)
// factorization, root counting and isolation over the rationals, and the
// interlacing checks used for the refined polynomial families. No
// floating point anywhere in a decision path.

#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace chowlab {

namespace detail {

// Dense polynomial over Q, used internally for remainder sequences.
using RatPoly = std::vector<Rat>;

inline void rp_normalize(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly rp_from(const IntPolynomial& p) {
    RatPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(Rat(c));
    return out;
}

inline int rp_deg(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

inline RatPoly rp_derivative(const RatPoly& p) {
    RatPoly out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rat(static_cast<long>(i)));
    rp_normalize(out);
    return out;
}

inline RatPoly rp_sub(const RatPoly& a, const RatPoly& b) {
    RatPoly out(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    rp_normalize(out);
    return out;
}

// Remainder of a by b, b nonzero.
inline RatPoly rp_rem(RatPoly a, const RatPoly& b) {
    rp_normalize(a);
    while (rp_deg(a) >= rp_deg(b)) {
        Rat f = a.back() / b.back();
        int shift = rp_deg(a) - rp_deg(b);
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + static_cast<std::size_t>(shift)] -= f * b[i];
        a.pop_back();
        rp_normalize(a);
        if (a.empty()) break;
    }
    return a;
}

inline RatPoly rp_divexact(RatPoly a, const RatPoly& b) {
    rp_normalize(a);
    RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (rp_deg(a) >= rp_deg(b)) {
        Rat f = a.back() / b.back();
        int shift = rp_deg(a) - rp_deg(b);
        q[static_cast<std::size_t>(shift)] = f;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + static_cast<std::size_t>(shift)] -= f * b[i];
        a.pop_back();
        rp_normalize(a);
    }
    if (!a.empty()) throw std::logic_error("rp_divexact: division not exact");
    rp_normalize(q);
    return q;
}

inline RatPoly rp_monic(RatPoly p) {
    rp_normalize(p);
    if (p.empty()) return p;
    Rat lc = p.back();
    for (auto& c : p) c /= lc;
    return p;
}

inline RatPoly rp_gcd(RatPoly a, RatPoly b) {
    rp_normalize(a);
    rp_normalize(b);
    while (!b.empty()) {
        RatPoly r = rp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return rp_monic(a);
}

inline Rat rp_eval(const RatPoly& p, const Rat& x) {
    Rat acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

inline int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Sturm chain of the squarefree part of p.
struct SturmChain {
    std::vector<RatPoly> seq;

    explicit SturmChain(const RatPoly& p) {
        RatPoly s = p;
        rp_normalize(s);
        if (!s.empty()) {
            RatPoly g = rp_gcd(s, rp_derivative(s));
            if (rp_deg(g) > 0) s = rp_divexact(s, g);  // squarefree part
        }
        seq.push_back(s);
        if (rp_deg(s) >= 1) {
            seq.push_back(rp_derivative(s));
            while (rp_deg(seq.back()) >= 0) {
                RatPoly r = rp_rem(seq[seq.size() - 2], seq.back());
                if (r.empty()) break;
                for (auto& c : r) c = -c;
                seq.push_back(std::move(r));
            }
        }
    }

    int variations_at(const Rat& x) const {
        int v = 0, prev = 0;
        for (const auto& q : seq) {
            int s = sign_of(rp_eval(q, x));
            if (s != 0) {
                if (prev != 0 && s != prev) ++v;
                prev = s;
            }
        }
        return v;
    }

    // Sign variations "at +inf" / "-inf" from leading terms.
    int variations_at_inf(bool positive) const {
        int v = 0, prev = 0;
        for (const auto& q : seq) {
            if (q.empty()) continue;
            int s = sign_of(q.back());
            if (!positive && (rp_deg(q) % 2 == 1)) s = -s;
            if (s != 0) {
                if (prev != 0 && s != prev) ++v;
                prev = s;
            }
        }
        return v;
    }

    // Number of distinct real roots in (a, b]. Zeros are skipped in the
    // variation count, which makes V right-continuous at roots, so the
    // difference counts the half-open interval even at root endpoints.
    int count_open_closed(const Rat& a, const Rat& b) const {
        if (seq.front().empty() || rp_deg(seq.front()) == 0) return 0;
        return variations_at(a) - variations_at(b);
    }

    int count_all() const {
        if (seq.front().empty() || rp_deg(seq.front()) == 0) return 0;
        return variations_at_inf(false) - variations_at_inf(true);
    }
};

}  // namespace detail

// Yun squarefree factorization: p ~ prod f_i^i with the f_i squarefree and
// pairwise coprime (monic, over Q). Index i starts at 1.
inline std::vector<detail::RatPoly> yun_factors(const IntPolynomial& p) {
    using namespace detail;
    RatPoly f = rp_from(p);
    rp_normalize(f);
    std::vector<RatPoly> out;
    if (rp_deg(f) < 1) return out;
    f = rp_monic(f);
    RatPoly fp = rp_derivative(f);
    RatPoly g = rp_gcd(f, fp);
    RatPoly w = rp_divexact(f, g);
    RatPoly y = rp_divexact(fp, g);
    RatPoly z = rp_sub(y, rp_derivative(w));
    while (rp_deg(w) >= 1) {
        RatPoly fi = rp_gcd(w, z);
        out.push_back(rp_monic(fi));
        w = rp_divexact(w, fi);
        y = rp_divexact(z, fi);
        z = rp_sub(y, rp_derivative(w));
    }
    while (!out.empty() && rp_deg(out.back()) == 0) out.pop_back();
    return out;
}

// Number of distinct real roots of p in the half-open interval (a, b].
inline int real_root_count(const IntPolynomial& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw std::invalid_argument("real_root_count: zero polynomial");
    if (a >= b) return 0;
    detail::SturmChain chain(detail::rp_from(p));
    return chain.count_open_closed(a, b);
}

inline int real_root_count(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("real_root_count: zero polynomial");
    detail::SturmChain chain(detail::rp_from(p));
    return chain.count_all();
}

// True iff the real roots, counted with multiplicity, exhaust the degree.
inline bool is_real_rooted(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("is_real_rooted: zero polynomial");
    if (p.degree() == 0) return true;
    auto factors = yun_factors(p);
    long total = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (detail::rp_deg(factors[i]) < 1) continue;
        detail::SturmChain chain(factors[i]);
        total += static_cast<long>(i + 1) * chain.count_all();
    }
    return total == p.degree();
}

// Disjoint rational intervals (lo, hi], one distinct real root each,
// with exact multiplicities. Sorted increasingly.
struct RootIsolation {
    struct Interval {
        Rat lo, hi;
        int multiplicity;
    };
    std::vector<Interval> intervals;

    int root_count_with_multiplicity() const {
        int c = 0;
        for (const auto& iv : intervals) c += iv.multiplicity;
        return c;
    }
};

inline RootIsolation isolate_roots(const IntPolynomial& p) {
    using namespace detail;
    if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    RootIsolation out;
    if (p.degree() == 0) return out;

    auto factors = yun_factors(p);
    RatPoly s = rp_from(p);
    {
        RatPoly g = rp_gcd(s, rp_derivative(s));
        if (rp_deg(g) > 0) s = rp_divexact(s, g);
        s = rp_monic(s);
    }
    SturmChain chain(s);
    int total = chain.count_all();
    if (total == 0) return out;

    // Cauchy bound: all roots lie strictly inside (-B, B).
    Rat maxabs = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        Rat a = s[i] < 0 ? -s[i] : s[i];
        if (a > maxabs) maxabs = a;
    }
    Rat bound = Rat(1) + maxabs;

    // Pick a split point in (a, b) that is not a root of s.
    auto split_point = [&](const Rat& a, const Rat& b) -> Rat {
        Rat m = (a + b) / 2;
        Rat step = (b - a) / 4;
        while (rp_eval(s, m) == 0) {
            m = m - step;
            step /= 2;
        }
        return m;
    };

    std::function<void(Rat, Rat, int)> bisect = [&](Rat lo, Rat hi, int count) {
        if (count == 0) return;
        if (count == 1) {
            out.intervals.push_back({lo, hi, 0});
            return;
        }
        Rat m = split_point(lo, hi);
        int left = chain.count_open_closed(lo, m);
        bisect(lo, m, left);
        bisect(m, hi, count - left);
    };
    bisect(-bound, bound, total);

    // Multiplicity: exactly one Yun factor has a root in each interval.
    for (auto& iv : out.intervals) {
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (rp_deg(factors[i]) < 1) continue;
            SturmChain fc(factors[i]);
            if (fc.count_open_closed(iv.lo, iv.hi) == 1) {
                iv.multiplicity += static_cast<int>(i + 1);
            }
        }
        if (iv.multiplicity == 0) throw std::logic_error("isolate_roots: lost multiplicity");
    }
    return out;
}

namespace detail {

// Descending list of root "ranks" with multiplicity. Two polynomials
// compared over a common isolation of their product get comparable ranks.
struct RankedRoots {
    std::vector<int> p_ranks;  // descending roots of p, one entry per multiplicity
    std::vector<int> q_ranks;
};

inline RankedRoots rank_roots(const IntPolynomial& p, const IntPolynomial& q) {
    IntPolynomial prod = p * q;
    RootIsolation iso = isolate_roots(prod);
    auto fp = yun_factors(p);
    auto fq = yun_factors(q);
    RankedRoots out;
    // iso.intervals are increasing; rank 0 = largest root.
    int m = static_cast<int>(iso.intervals.size());
    for (int idx = m - 1; idx >= 0; --idx) {
        const auto& iv = iso.intervals[static_cast<std::size_t>(idx)];
        int rank = m - 1 - idx;
        auto mult_in = [&](const std::vector<RatPoly>& fs) {
            int mult = 0;
            for (std::size_t i = 0; i < fs.size(); ++i) {
                if (rp_deg(fs[i]) < 1) continue;
                SturmChain fc(fs[i]);
                if (fc.count_open_closed(iv.lo, iv.hi) == 1) mult += static_cast<int>(i + 1);
            }
            return mult;
        };
        for (int r = 0; r < mult_in(fp); ++r) out.p_ranks.push_back(rank);
        for (int r = 0; r < mult_in(fq); ++r) out.q_ranks.push_back(rank);
    }
    return out;
}

}  // namespace detail

// interlaces(p, q): with roots listed decreasingly, q's roots weakly
// alternate around p's starting from q's largest:
//   q_1 >= p_1 >= q_2 >= p_2 >= ...
// requiring deg q in {deg p, deg p + 1}. The zero polynomial interlaces
// everything. Both inputs must be real-rooted.
inline bool interlaces(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return true;
    if (!is_real_rooted(p) || !is_real_rooted(q))
        throw std::invalid_argument("interlaces requires real-rooted polynomials");
    int dp = p.degree(), dq = q.degree();
    if (dq != dp && dq != dp + 1) return false;
    if (dp == 0) return true;  // vacuous once degrees fit

    detail::RankedRoots rr = detail::rank_roots(p, q);
    const auto& B = rr.p_ranks;  // descending ranks (smaller rank = larger root)
    const auto& A = rr.q_ranks;
    // Weak alternation: A[0] >= B[0] >= A[1] >= B[1] >= ... as root values,
    // i.e. rank(A[i]) <= rank(B[i]) and rank(B[i]) <= rank(A[i+1]).
    for (std::size_t i = 0; i < B.size(); ++i) {
        if (A[i] > B[i]) return false;
        if (i + 1 < A.size() && B[i] > A[i + 1]) return false;
    }
    return true;
}

// A sequence is interlacing when every earlier member interlaces every
// later one.
inline bool is_interlacing_sequence(const std::vector<IntPolynomial>& ps) {
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            if (!interlaces(ps[i], ps[j])) return false;
    return true;
}

}  // namespace chowlab
