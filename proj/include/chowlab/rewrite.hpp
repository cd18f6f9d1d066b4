// rewrite.hpp
// The rewriting map g_n on inversion sequences (with an explicit ZERO
// result), its iterated images, the recursively defined families D^k_n,
// the Hilbert series of uniform matroids computed through them, the
// refined statistics polynomials, and the monomial-level map induced by
// multiplication with g_F.

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "core.hpp"
#include "normal.hpp"
#include "poly.hpp"

namespace chowlab {

// Result of one application of g_n: either an inversion sequence of the
// same length or the formal ZERO absorbing element.
struct RewriteResult {
    bool zero = true;
    InversionSequence seq;

    static RewriteResult make_zero() { return RewriteResult{}; }
    static RewriteResult of(InversionSequence e) { return RewriteResult{false, std::move(e)}; }
};

// One rewriting step. Length-1 sequences map to ZERO; otherwise the three
// cases below partition the inputs:
//  (b) e_n = 0:        prepend a zero and shift every other entry up.
//  (a) no zero after    strip the forced leading zero, recurse on the
//      position 1:      shifted-down tail, then undo the shift.
//  (c) last zero at     rewrite the prefix before the last zero and keep
//      position k < n:  the suffix from position k on unchanged.
inline RewriteResult g_map(const InversionSequence& e) {
    int n = e.n();
    if (n < 1) throw std::invalid_argument("g_map requires n >= 1");
    if (n == 1) return RewriteResult::make_zero();

    if (e[n] == 0) {  // case (b)
        std::vector<int> out(static_cast<std::size_t>(n));
        out[0] = 0;
        for (int k = 2; k <= n; ++k) out[static_cast<std::size_t>(k - 1)] = e[k - 1] + 1;
        return RewriteResult::of(InversionSequence(std::move(out)));
    }

    int fz = first_zero(e);
    if (fz == n + 1) {  // case (a)
        std::vector<int> tail(static_cast<std::size_t>(n - 1));
        for (int i = 1; i <= n - 1; ++i) tail[static_cast<std::size_t>(i - 1)] = e[i + 1] - 1;
        RewriteResult inner = g_map(InversionSequence(std::move(tail)));
        if (inner.zero) return RewriteResult::make_zero();
        std::vector<int> out(static_cast<std::size_t>(n));
        out[0] = 0;
        for (int k = 2; k <= n; ++k) out[static_cast<std::size_t>(k - 1)] = inner.seq[k - 1] + 1;
        return RewriteResult::of(InversionSequence(std::move(out)));
    }

    // case (c): k = maximal position < n with e_k = 0 (k >= 2 here).
    int k = 0;
    for (int i = n - 1; i >= 2; --i)
        if (e[i] == 0) { k = i; break; }
    if (k == 0) throw std::logic_error("g_map: case analysis is incomplete");
    std::vector<int> prefix(static_cast<std::size_t>(k - 1));
    for (int i = 1; i <= k - 1; ++i) prefix[static_cast<std::size_t>(i - 1)] = e[i];
    RewriteResult inner = g_map(InversionSequence(std::move(prefix)));
    if (inner.zero) return RewriteResult::make_zero();
    std::vector<int> out = inner.seq.entries();
    for (int i = k; i <= n; ++i) out.push_back(e[i]);
    return RewriteResult::of(InversionSequence(std::move(out)));
}

// Applies g_map k times; ZERO absorbs.
inline RewriteResult g_map_power(const InversionSequence& e, int k) {
    RewriteResult r = RewriteResult::of(e);
    for (int i = 0; i < k; ++i) {
        if (r.zero) return r;
        r = g_map(r.seq);
    }
    return r;
}

// The set of non-ZERO images of I_n under k applications of g_map,
// deduplicated and sorted. k = 0 returns all of I_n.
inline std::vector<InversionSequence> g_power_images(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("g_power_images requires n >= 1, k >= 0");
    std::set<InversionSequence> images;
    for_each_inversion_sequence(n, [&](const InversionSequence& e) {
        RewriteResult r = g_map_power(e, k);
        if (!r.zero) images.insert(r.seq);
    });
    return std::vector<InversionSequence>(images.begin(), images.end());
}

// D^k_n, defined recursively: D^1_n is the set of derangement sequences
// (empty for n = 1), and D^k_n keeps those e with fp(e) in
// D^{k-1}_{fz(e)-2}. Out-of-range parameters give the empty set.
class DSetTable {
public:
    const std::vector<InversionSequence>& get(int n, int k) {
        if (n < 1 || k < 1) return empty_;
        auto key = std::make_pair(n, k);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        std::vector<InversionSequence> out;
        if (k == 1) {
            out = enumerate_derangement_seqs(n);
        } else {
            for (const InversionSequence& e : get(n, 1)) {
                int fz = first_zero(e);
                if (fz - 2 < 1) continue;
                const auto& lower = get(fz - 2, k - 1);
                InversionSequence fp = first_peak(e);
                if (std::binary_search(lower.begin(), lower.end(), fp)) out.push_back(e);
            }
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    std::map<std::pair<int, int>, std::vector<InversionSequence>> memo_;
    std::vector<InversionSequence> empty_;
};

inline std::vector<InversionSequence> dset_recursive(int n, int k) {
    DSetTable table;
    return table.get(n, k);
}

// Refined D-set polynomial d^{k,i}_n: for i >= 1 the sum over D^k_n with
// e_n = i; for i = 0 (where D^k_n has no members ending in zero) the sum
// over D^k_{n-1} of t^asc. The table-taking overload lets callers share
// the memoized D-sets across a family of queries.
inline IntPolynomial dki_polynomial(DSetTable& table, int n, int k, int i) {
    if (n < 1 || k < 1 || i < 0)
        throw std::invalid_argument("dki_polynomial requires n >= 1, k >= 1, i >= 0");
    IntPolynomial out;
    if (i == 0) {
        for (const InversionSequence& e : table.get(n - 1, k)) out.add_term(ascent_count(e), 1);
        return out;
    }
    for (const InversionSequence& e : table.get(n, k))
        if (e[n] == i) out.add_term(ascent_count(e), 1);
    return out;
}

// Hilbert series of the Chow ring of U_{n-k,n} through the D-sets:
// sum over D^k_n of t^(asc(e)-k), with D^0_n read as all of I_n.
// Every ascent count must be >= k for the result to be a polynomial.
inline HilbertSeries chow_uniform_via_dsets(int n, int k) {
    if (n < 1 || k < 0 || k > n - 1)
        throw std::invalid_argument("chow_uniform_via_dsets requires n >= 1, 0 <= k <= n-1");
    HilbertSeries h;
    auto add = [&](const InversionSequence& e) {
        int a = ascent_count(e);
        if (a < k) throw std::logic_error("chow_uniform_via_dsets: ascent count below k");
        h.add_term(a - k, 1);
    };
    if (k == 0) {
        for_each_inversion_sequence(n, add);
    } else {
        for (const InversionSequence& e : dset_recursive(n, k)) add(e);
    }
    return h;
}

// Refined Eulerian polynomial A^i_n = sum over I_n with e_n = i.
inline IntPolynomial eulerian_refined(int n, int i) {
    if (n < 1 || i < 0 || i > n - 1)
        throw std::invalid_argument("eulerian_refined requires n >= 1, 0 <= i <= n-1");
    IntPolynomial out;
    for_each_inversion_sequence(n, [&](const InversionSequence& e) {
        if (e[n] == i) out.add_term(ascent_count(e), 1);
    });
    return out;
}

inline IntPolynomial dki_polynomial(int n, int k, int i) {
    DSetTable table;
    return dki_polynomial(table, n, k, i);
}

// Refined derangement polynomial d^i_n (the k = 1 case for i >= 1; for
// i = 0 the convention above gives d_{n-1}).
inline IntPolynomial derangement_refined(int n, int i) { return dki_polynomial(n, 1, i); }

// The monomial-level effect of multiplying by g_F, for F a subset
// containing max E: a normal monomial prod g_S on E \ F maps to
// g_F * prod g_{S cup F_{<= max S}} on E.
inline NormalMonomial psi_F_image(const NormalMonomial& m, Subset f,
                                  const GroundSet& sub, const GroundSet& parent) {
    if (f.empty() || !f.contains(parent.n() - 1))
        throw std::invalid_argument("psi_F_image requires max E in F");
    std::vector<Subset> parts;
    parts.push_back(f);
    for (Subset s : m.parts()) {
        Subset se = embed_subset(s, sub, parent);
        if (!(se & f).empty()) throw std::invalid_argument("psi_F_image: monomial part meets F");
        parts.push_back(se | (f & Subset::positions_le(se.max_pos())));
    }
    return NormalMonomial(std::move(parts));
}

// The normal monomial attached to an inversion sequence: psi of its
// Lehmer preimage. The bijections compose so that ascents of e match the
// degree.
inline NormalMonomial monomial_of_sequence(const InversionSequence& e, const GroundSet& g) {
    return psi(lehmer_inverse(e, g), g);
}

inline InversionSequence sequence_of_monomial(const NormalMonomial& m, const GroundSet& g) {
    return lehmer_code(phi(m, g));
}

}  // namespace chowlab
