// normal.hpp
// Normal monomials of the quadratic simplicial-presentation basis for
// boolean matroids, the strict order on their parts, the descent
// bijection psi and its inverse phi, and Hilbert series by normal-
// monomial enumeration.

#pragma once

#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"
#include "poly.hpp"

namespace chowlab {

// I is an initial segment of J: I subset of J and I = J restricted to
// positions <= max I.
inline bool is_initial_segment(Subset i, Subset j) {
    if (i.empty() || !i.subset_of(j)) return false;
    return (j & Subset::positions_le(i.max_pos())) == i;
}

namespace detail {

// One-sided test: with S = a | b, a must be the minimal initial segment
// I of S with I | b == S, and Card(S \ b) >= 2 unless b == S \ {max S}.
inline bool quad_normal_roles(Subset a, Subset b) {
    Subset s = a | b;
    if (!is_initial_segment(a, s)) return false;
    // minimal prefix of S whose union with b covers S: its top element is
    // the largest element of S missing from b.
    Subset missing = s.minus(b);
    if (missing.empty()) return false;  // the minimal prefix would be a single element short of a cover
    Subset minimal = s & Subset::positions_le(missing.max_pos());
    if (a != minimal) return false;
    if (s.minus(b).size() >= 2) return true;
    return b == s.without(s.max_pos());
}

}  // namespace detail

// Whether the quadratic monomial on the unordered pair {S1, S2} is
// normal. Both parts must have cardinality >= 2.
inline bool quad_normal(Subset s1, Subset s2) {
    if (s1.size() < 2 || s2.size() < 2)
        throw std::invalid_argument("quad_normal requires parts of cardinality >= 2");
    if (s1 == s2) throw std::invalid_argument("quad_normal requires distinct parts");
    return detail::quad_normal_roles(s1, s2) || detail::quad_normal_roles(s2, s1);
}

// S1 strictly precedes S2: S1 is an initial segment of S1 | S2 and
// removing max S1 shrinks the union. A strict total order on the part
// set of any normal monomial.
inline bool triangle_less(Subset s1, Subset s2) {
    Subset u = s1 | s2;
    if (!is_initial_segment(s1, u)) return false;
    return !s2.contains(s1.max_pos());
}

// A squarefree set of parts of cardinality >= 2, stored sorted by the
// strict order above. Degree = number of parts.
class NormalMonomial {
public:
    NormalMonomial() = default;

    explicit NormalMonomial(std::vector<Subset> parts) {
        // Insertion sort: triangle_less is only guaranteed to be a total
        // order on the parts of a normal monomial, so std::sort (which
        // requires a strict weak ordering on all inputs) is off limits.
        for (Subset s : parts) {
            if (s.size() < 2) throw std::invalid_argument("monomial part of cardinality < 2");
            auto it = parts_.begin();
            while (it != parts_.end() && !triangle_less(s, *it)) ++it;
            parts_.insert(it, s);
        }
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i - 1] == parts_[i]) throw std::invalid_argument("monomial is not squarefree");
    }

    int degree() const { return static_cast<int>(parts_.size()); }
    const std::vector<Subset>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    bool operator==(const NormalMonomial& o) const { return parts_ == o.parts_; }
    bool operator<(const NormalMonomial& o) const {
        std::vector<std::uint64_t> a, b;
        for (Subset s : parts_) a.push_back(s.bits());
        for (Subset s : o.parts_) b.push_back(s.bits());
        return a < b;
    }

private:
    std::vector<Subset> parts_;
};

inline bool is_normal(const NormalMonomial& m) {
    const auto& ps = m.parts();
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            if (!quad_normal(ps[i], ps[j])) return false;
    return true;
}

// Text form "h{1,2}*h{1,2,3}" with parts in the canonical order; the
// empty monomial prints as "1".
inline std::string to_string(const NormalMonomial& m, const GroundSet& g, char generator = 'h') {
    if (m.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (Subset s : m.parts()) {
        if (!first) os << '*';
        os << generator << to_string(s, g);
        first = false;
    }
    return os.str();
}

// Parses "h{1,2}*h{1,2,3}" (or with 'g'); "1" is the empty monomial.
inline NormalMonomial parse_monomial(const std::string& text, const GroundSet& g) {
    if (text == "1") return NormalMonomial();
    std::vector<Subset> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == '*') { ++pos; continue; }
        if (text[pos] != 'h' && text[pos] != 'g')
            throw std::invalid_argument("malformed monomial");
        ++pos;
        if (pos >= text.size() || text[pos] != '{') throw std::invalid_argument("malformed monomial");
        std::size_t close = text.find('}', pos);
        if (close == std::string::npos) throw std::invalid_argument("malformed monomial");
        std::vector<int> labs = parse_int_list(text.substr(pos + 1, close - pos - 1));
        parts.push_back(Subset::of_labels(g, labs));
        pos = close + 1;
    }
    return NormalMonomial(std::move(parts));
}

// Enumerates the part lists of normal monomials by backtracking over
// chains that grow in the part order; pairwise normality is hereditary
// so pruning is exact. Compatibility between candidate parts is
// precomputed as bitmasks, which keeps the walk proportional to the
// number of monomials. Deterministic order.
inline void for_each_normal_chain(const GroundSet& g,
                                  const std::function<void(const std::vector<Subset>&)>& fn) {
    int n = g.n();
    std::vector<Subset> candidates;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        Subset s(b);
        if (s.size() >= 2) candidates.push_back(s);
    }
    std::size_t m = candidates.size();
    std::size_t words = (m + 63) / 64;
    // compat[i] marks the candidates that may follow candidate i.
    std::vector<std::vector<std::uint64_t>> compat(m, std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && triangle_less(candidates[i], candidates[j]) &&
                quad_normal(candidates[i], candidates[j]))
                compat[i][j / 64] |= std::uint64_t{1} << (j % 64);

    std::vector<std::vector<std::uint64_t>> allowed(static_cast<std::size_t>(n) + 1,
                                                    std::vector<std::uint64_t>(words, 0));
    for (std::size_t w = 0; w < words; ++w) allowed[0][w] = ~std::uint64_t{0};
    if (words) allowed[0][words - 1] = m % 64 ? (std::uint64_t{1} << (m % 64)) - 1 : ~std::uint64_t{0};

    std::vector<Subset> chain;
    std::function<void(int)> rec = [&](int depth) {
        fn(chain);
        const auto& mask = allowed[static_cast<std::size_t>(depth)];
        for (std::size_t w = 0; w < words; ++w) {
            for (std::uint64_t bits = mask[w]; bits; bits &= bits - 1) {
                std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                auto& next = allowed[static_cast<std::size_t>(depth) + 1];
                for (std::size_t v = 0; v < words; ++v) next[v] = mask[v] & compat[j][v];
                chain.push_back(candidates[j]);
                rec(depth + 1);
                chain.pop_back();
            }
        }
    };
    rec(0);
}

inline void for_each_normal_monomial(const GroundSet& g,
                                     const std::function<void(const NormalMonomial&)>& fn) {
    for_each_normal_chain(g, [&](const std::vector<Subset>& chain) { fn(NormalMonomial(chain)); });
}

inline std::vector<NormalMonomial> enumerate_normal_monomials(const GroundSet& g) {
    std::vector<NormalMonomial> out;
    for_each_normal_monomial(g, [&](const NormalMonomial& m) { out.push_back(m); });
    return out;
}

// psi: sends a permutation to the product of h_{S(sigma,i)} over its
// descents, where S(sigma,i) = {sigma(j) | sigma(j) <= sigma(i), j >= i}.
inline NormalMonomial psi(const Permutation& p, const GroundSet& g) {
    std::vector<Subset> parts;
    int n = p.n();
    for (int i : descent_set(p)) {
        Subset s;
        int top = g.position(p(i));
        for (int j = i; j <= n; ++j) {
            int pos = g.position(p(j));
            if (pos <= top) s = s.with(pos);
        }
        parts.push_back(s);
    }
    return NormalMonomial(std::move(parts));
}

// phi: inverse of psi. With parts S_1 < ... < S_k in the canonical order
// and X_i = E_{<=max S_i} \ (S_i \ {max S_i}), the image is the
// concatenation X_1 (X_2\X_1) ... (E \ union), each block increasing.
inline Permutation phi(const NormalMonomial& m, const GroundSet& g) {
    if (!is_normal(m)) throw std::invalid_argument("phi requires a normal monomial");
    int n = g.n();
    std::vector<int> values;
    Subset used;
    for (Subset s : m.parts()) {
        Subset x = Subset::positions_le(s.max_pos()).minus(s.without(s.max_pos()));
        for (int pos : x.minus(used).positions()) values.push_back(g.label(pos));
        used = used | x;
    }
    for (int pos : Subset::full(n).minus(used).positions()) values.push_back(g.label(pos));
    return Permutation(std::move(values), g);
}

// Hilbert series of the boolean Chow ring on [n], as the degree histogram
// of the normal monomials.
inline HilbertSeries hilbert_boolean(int n) {
    if (n < 1) throw std::invalid_argument("hilbert_boolean requires n >= 1");
    HilbertSeries h;
    for_each_normal_chain(GroundSet::canonical(n), [&](const std::vector<Subset>& chain) {
        h.add_term(static_cast<int>(chain.size()), 1);
    });
    return h;
}

}  // namespace chowlab
