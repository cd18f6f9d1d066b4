// oracle.hpp
// Ground-truth Chow ring engine for small loopless matroids given by
// their lattice of flats. Works in the x-presentation: the polynomial
// ring on x_F (F a nonempty flat) modulo the incomparability relations
// J (quotiented out for free by restricting to chain-supported
// monomials) and the linear relations I (sum over flats containing a
// fixed element), eliminated per degree by exact fraction-free row
// reduction. Exposes graded dimensions, canonical forms, the h / g
// element expansions, Hilbert series of principal ideals, and the
// independent chain-count route.

#pragma once

#include <bit>
#include <cstdint>
#include <fstream>
#include <optional>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "core.hpp"
#include "poly.hpp"

namespace chowlab {

// The lattice of flats of a loopless matroid: contains the empty set and
// the full ground set, is closed under intersection, and for every flat
// F the minimal flats strictly above F partition E \ F. Rank of a flat
// is the length of a longest chain of flats below it.
class FlatsLattice {
public:
    FlatsLattice(GroundSet ground, std::vector<Subset> flats)
        : ground_(std::move(ground)) {
        std::set<std::uint64_t> seen;
        for (Subset f : flats) seen.insert(f.bits());
        for (std::uint64_t b : seen) flats_.push_back(Subset(b));
        std::sort(flats_.begin(), flats_.end(), [](Subset a, Subset b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a.bits() < b.bits();
        });
        for (std::size_t i = 0; i < flats_.size(); ++i)
            index_[flats_[i].bits()] = static_cast<int>(i);
        validate();
        compute_ranks();
    }

    static FlatsLattice boolean_lattice(int n) {
        if (n < 1 || n > 20) throw std::invalid_argument("boolean_lattice requires 1 <= n <= 20");
        GroundSet g = GroundSet::canonical(n);
        std::vector<Subset> flats;
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) flats.push_back(Subset(b));
        return FlatsLattice(std::move(g), std::move(flats));
    }

    // U_{r,n}: flats are the subsets of cardinality at most r-1, plus E.
    static FlatsLattice uniform_lattice(int r, int n) {
        if (n < 1 || r < 1 || r > n)
            throw std::invalid_argument("uniform_lattice requires 1 <= r <= n");
        GroundSet g = GroundSet::canonical(n);
        std::vector<Subset> flats;
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
            Subset s(b);
            if (s.size() <= r - 1) flats.push_back(s);
        }
        flats.push_back(Subset::full(n));
        return FlatsLattice(std::move(g), std::move(flats));
    }

    // Line-oriented format: "n=<n>" on the first line, then one flat per
    // line as comma-separated labels; an empty line denotes the empty flat.
    static FlatsLattice from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open lattice file: " + path);
        std::string line;
        if (!std::getline(in, line) || line.rfind("n=", 0) != 0)
            throw std::runtime_error("lattice file must start with n=<n>");
        int n = std::stoi(line.substr(2));
        GroundSet g = GroundSet::canonical(n);
        std::vector<Subset> flats;
        while (std::getline(in, line)) {
            if (line.empty()) {
                flats.push_back(Subset());
                continue;
            }
            flats.push_back(Subset::of_labels(g, parse_int_list(line)));
        }
        return FlatsLattice(std::move(g), std::move(flats));
    }

    const GroundSet& ground() const { return ground_; }
    int n() const { return ground_.n(); }
    const std::vector<Subset>& flats() const { return flats_; }
    bool is_flat(Subset s) const { return index_.count(s.bits()) != 0; }
    int rank_of(Subset f) const {
        auto it = index_.find(f.bits());
        if (it == index_.end()) throw std::invalid_argument("rank_of: not a flat");
        return ranks_[static_cast<std::size_t>(it->second)];
    }
    int rank() const { return rank_of(Subset::full(n())); }

    // Nonempty flats: the variable set of the x-presentation.
    std::vector<Subset> variables() const {
        std::vector<Subset> out;
        for (Subset f : flats_)
            if (!f.empty()) out.push_back(f);
        return out;
    }

private:
    void validate() {
        if (flats_.empty() || !flats_.front().empty())
            throw std::invalid_argument("lattice must contain the empty flat (loopless)");
        if (flats_.back() != Subset::full(ground_.n()))
            throw std::invalid_argument("lattice must contain the full ground set");
        for (Subset a : flats_)
            for (Subset b : flats_)
                if (!is_flat(a & b))
                    throw std::invalid_argument("lattice not closed under intersection");
        // Cover partition: for each flat F, the sets G \ F over the
        // minimal flats G strictly above F partition E \ F.
        for (Subset f : flats_) {
            std::vector<Subset> covers;
            for (Subset g : flats_) {
                if (g == f || !f.subset_of(g)) continue;
                bool minimal = true;
                for (Subset h : flats_)
                    if (h != f && h != g && f.subset_of(h) && h.subset_of(g)) { minimal = false; break; }
                if (minimal) covers.push_back(g);
            }
            Subset seen;
            for (Subset g : covers) {
                Subset diff = g.minus(f);
                if (!(seen & diff).empty())
                    throw std::invalid_argument("cover sets above a flat must be disjoint");
                seen = seen | diff;
            }
            if (seen != Subset::full(ground_.n()).minus(f))
                throw std::invalid_argument("cover sets above a flat must cover E \\ F");
        }
    }

    void compute_ranks() {
        // Flats are sorted by cardinality, so scanning in order gives a
        // topological order of the containment relation.
        ranks_.assign(flats_.size(), 0);
        for (std::size_t i = 0; i < flats_.size(); ++i) {
            int best = 0;
            for (std::size_t j = 0; j < i; ++j)
                if (flats_[j] != flats_[i] && flats_[j].subset_of(flats_[i]))
                    best = std::max(best, ranks_[j] + 1);
            ranks_[static_cast<std::size_t>(i)] = best;
        }
    }

    GroundSet ground_;
    std::vector<Subset> flats_;
    std::vector<int> ranks_;
    std::map<std::uint64_t, int> index_;
};

// A monomial supported on a chain of nonempty flats, the basis of the
// quotient by J alone: sorted list of (flat bits, exponent >= 1) with
// strictly increasing flats along the chain.
using ChainKey = std::vector<std::pair<std::uint64_t, int>>;

inline int chain_degree(const ChainKey& k) {
    int d = 0;
    for (const auto& [bits, e] : k) d += e;
    return d;
}

// Merges two chain monomials; std::nullopt when the union of supports is
// not a chain (the product dies in the J-quotient).
inline std::optional<ChainKey> chain_mul(const ChainKey& a, const ChainKey& b) {
    std::map<std::uint64_t, int> acc;
    for (const auto& [bits, e] : a) acc[bits] += e;
    for (const auto& [bits, e] : b) acc[bits] += e;
    ChainKey out(acc.begin(), acc.end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        int px = std::popcount(x.first), py = std::popcount(y.first);
        if (px != py) return px < py;
        return x.first < y.first;
    });
    for (std::size_t i = 1; i < out.size(); ++i)
        if ((out[i - 1].first & ~out[i].first) != 0) return std::nullopt;
    return out;
}

// A homogeneous element of the J-quotient in chain-monomial coordinates.
struct Element {
    int degree = 0;
    std::map<ChainKey, Rat> terms;

    static Element zero(int degree) { return Element{degree, {}}; }

    static Element monomial(ChainKey k, Rat c = 1) {
        Element e{chain_degree(k), {}};
        if (c != 0) e.terms.emplace(std::move(k), std::move(c));
        return e;
    }

    bool is_zero() const { return terms.empty(); }

    void add(const ChainKey& k, const Rat& c) {
        auto it = terms.find(k);
        if (it == terms.end()) {
            if (c != 0) terms.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    Element operator+(const Element& o) const {
        if (degree != o.degree && !is_zero() && !o.is_zero())
            throw std::invalid_argument("adding elements of different degrees");
        Element out = *this;
        out.degree = is_zero() ? o.degree : degree;
        for (const auto& [k, c] : o.terms) out.add(k, c);
        return out;
    }

    Element operator-(const Element& o) const { return *this + (o * Rat(-1)); }

    Element operator*(const Rat& s) const {
        Element out{degree, {}};
        if (s == 0) return out;
        for (const auto& [k, c] : terms) out.terms.emplace(k, c * s);
        return out;
    }

    Element operator*(const Element& o) const {
        Element out{degree + o.degree, {}};
        for (const auto& [k1, c1] : terms)
            for (const auto& [k2, c2] : o.terms)
                if (auto k = chain_mul(k1, k2)) out.add(*k, c1 * c2);
        return out;
    }
};

// The Chow ring of a lattice of flats. Degree slices are built on
// demand; build each needed slice (or call prepare) before sharing a
// ring across threads — afterwards all queries are read-only.
class ChowRing {
public:
    explicit ChowRing(FlatsLattice lattice, std::size_t column_limit = 2000000)
        : l_(std::move(lattice)), column_limit_(column_limit) {}

    const FlatsLattice& lattice() const { return l_; }

    // --- element constructors -----------------------------------------

    Element x_element(Subset f) const {
        if (f.empty() || !l_.is_flat(f)) throw std::invalid_argument("x_element requires a nonempty flat");
        return Element::monomial(ChainKey{{f.bits(), 1}});
    }

    // h_F = sum of x_G over flats G containing F.
    Element h_element(Subset f) const {
        if (f.empty() || !l_.is_flat(f)) throw std::invalid_argument("h_element requires a nonempty flat");
        Element out = Element::zero(1);
        for (Subset g : l_.flats())
            if (!g.empty() && f.subset_of(g)) out.add(ChainKey{{g.bits(), 1}}, 1);
        return out;
    }

    // g_F = sum of x_{F u S} over S contained in the elements above
    // max F. Only meaningful on boolean lattices, where every subset is
    // a flat.
    Element g_element(Subset f) const {
        if (f.empty()) throw std::invalid_argument("g_element requires a nonempty flat");
        int n = l_.n();
        Subset above = Subset::positions_gt(f.max_pos(), n);
        Element out = Element::zero(1);
        // Iterate over subsets S of `above` via the standard submask walk.
        std::uint64_t a = above.bits();
        std::uint64_t s = a;
        while (true) {
            Subset fl = Subset(f.bits() | s);
            if (!l_.is_flat(fl))
                throw std::invalid_argument("g_element requires all F u S to be flats (boolean lattice)");
            out.add(ChainKey{{fl.bits(), 1}}, 1);
            if (s == 0) break;
            s = (s - 1) & a;
        }
        return out;
    }

    // --- slices and canonical forms -----------------------------------

    // Dimension of the degree-d slice of the quotient.
    int dimension(int d) const {
        if (d < 0) throw std::invalid_argument("dimension requires d >= 0");
        const Slice& s = slice(d);
        return static_cast<int>(s.columns.size() - s.rows.size());
    }

    // Canonical form: coordinates over the standard (non-pivot) chain
    // monomials of the element's degree. Two elements are equal in the
    // ring iff their canonical forms coincide.
    std::map<ChainKey, Rat> canonical_form(const Element& e) const {
        const Slice& s = slice(e.degree);
        std::map<int, Rat> v;
        for (const auto& [k, c] : e.terms) {
            auto it = s.col_index.find(k);
            if (it == s.col_index.end())
                throw std::invalid_argument("canonical_form: term is not a chain monomial of this degree");
            v[it->second] += c;
        }
        reduce_rational(s, v);
        std::map<ChainKey, Rat> out;
        for (const auto& [col, c] : v)
            if (c != 0) out.emplace(s.columns[static_cast<std::size_t>(col)], c);
        return out;
    }

    bool is_zero_in_ring(const Element& e) const {
        if (e.is_zero()) return true;
        if (e.degree > l_.rank()) return true;  // above the socle everything vanishes
        return canonical_form(e).empty();
    }

    bool equal_in_ring(const Element& a, const Element& b) const {
        if (a.degree != b.degree && !a.is_zero() && !b.is_zero()) return false;
        return is_zero_in_ring(a - b);
    }

    // Hilbert series: graded dimensions for degrees 0..rank-1, with the
    // degree-rank slice checked to vanish.
    HilbertSeries hilbert_series() const {
        int r = l_.rank();
        HilbertSeries h;
        for (int d = 0; d < r; ++d) h.add_term(d, dimension(d));
        if (dimension(r) != 0) throw std::logic_error("hilbert_series: nonzero slice at the rank degree");
        return h;
    }

    // The standard chain monomials of degree d (quotient basis).
    std::vector<ChainKey> quotient_basis(int d) const {
        const Slice& s = slice(d);
        std::vector<ChainKey> out;
        for (int col = 0; col < static_cast<int>(s.columns.size()); ++col)
            if (!s.rows.count(col)) out.push_back(s.columns[static_cast<std::size_t>(col)]);
        return out;
    }

    // Graded dimensions of the image of multiplication by h_E^m = x_E^m
    // (boolean socle generator), computed as the rank of each
    // multiplication slice CH^{d-m} -> CH^d.
    HilbertSeries principal_ideal_hilbert(int m) const {
        int r = l_.rank();
        if (m < 0 || m > r) throw std::invalid_argument("principal_ideal_hilbert requires 0 <= m <= rank");
        ChainKey xe{{Subset::full(l_.n()).bits(), m}};
        HilbertSeries h;
        for (int d = m; d < r; ++d) {
            std::vector<std::map<ChainKey, Rat>> vecs;
            for (const ChainKey& b : quotient_basis(d - m)) {
                Element prod = m == 0 ? Element::monomial(b)
                                      : Element::monomial(*chain_mul(b, xe));
                auto cf = canonical_form(prod);
                if (!cf.empty()) vecs.push_back(std::move(cf));
            }
            h.add_term(d, rational_rank(vecs));
        }
        return h;
    }

    void prepare(int max_degree) const {
        for (int d = 0; d <= max_degree; ++d) slice(d);
    }

private:
    // Reduced echelon data for one degree: columns are the chain
    // monomials of that degree in a fixed order; rows are integer
    // relation rows in fully reduced echelon form, keyed by their pivot
    // (largest) column. Full reduction keeps every row supported on its
    // pivot plus standard columns only, which is what keeps desk-scale
    // lattices cheap: the standard set is exactly as big as the quotient
    // dimension.
    struct Slice {
        std::vector<ChainKey> columns;
        std::map<ChainKey, int> col_index;
        // pivot column -> sparse row, entries sorted descending by column.
        std::map<int, std::map<int, Int, std::greater<int>>> rows;
    };

    const Slice& slice(int d) const {
        auto it = slices_.find(d);
        if (it != slices_.end()) return it->second;
        Slice s;
        build_slice(d, s);
        return slices_.emplace(d, std::move(s)).first->second;
    }

    void enumerate_chain_monomials(int d, const std::function<void(const ChainKey&)>& fn) const {
        std::vector<Subset> vars = l_.variables();
        ChainKey cur;
        std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
            if (remaining == 0) {
                fn(cur);
                return;
            }
            for (std::size_t i = start; i < vars.size(); ++i) {
                if (!cur.empty() && (cur.back().first & ~vars[i].bits()) != 0) continue;
                if (!cur.empty() && cur.back().first == vars[i].bits()) continue;
                for (int e = 1; e <= remaining; ++e) {
                    cur.emplace_back(vars[i].bits(), e);
                    rec(i + 1, remaining - e);
                    cur.pop_back();
                }
            }
        };
        rec(0, d);
    }

    void build_slice(int d, Slice& s) const {
        enumerate_chain_monomials(d, [&](const ChainKey& k) { s.columns.push_back(k); });
        std::sort(s.columns.begin(), s.columns.end());
        if (s.columns.size() > column_limit_)
            throw std::runtime_error("ChowRing: slice exceeds the configured column limit");
        for (int i = 0; i < static_cast<int>(s.columns.size()); ++i)
            s.col_index.emplace(s.columns[static_cast<std::size_t>(i)], i);
        if (d == 0) return;

        // Usage index: column -> pivots of rows currently containing it
        // (may hold stale entries; consumers re-check).
        std::unordered_map<int, std::vector<int>> uses;

        const Slice& below = slice(d - 1);
        int n = l_.n();
        for (const ChainKey& m : below.columns) {
            for (int i = 0; i < n; ++i) {
                // Row for l_i * m: sum over flats F containing element i
                // of the chain monomial m * x_F.
                std::map<int, Int, std::greater<int>> row;
                for (Subset f : l_.flats()) {
                    if (f.empty() || !f.contains(i)) continue;
                    auto k = chain_mul(m, ChainKey{{f.bits(), 1}});
                    if (!k) continue;
                    int col = s.col_index.at(*k);
                    auto [it2, fresh] = row.emplace(col, 1);
                    if (!fresh && ++it2->second == 0) row.erase(it2);
                }
                insert_row(s, uses, std::move(row));
            }
        }
    }

    // Inserts one relation row, maintaining the echelon fully reduced:
    // every stored row is supported on its own pivot plus standard
    // (non-pivot) columns only. That invariant bounds every row's size
    // by 1 + quotient dimension, which is what keeps elimination cheap.
    void insert_row(Slice& s, std::unordered_map<int, std::vector<int>>& uses,
                    std::map<int, Int, std::greater<int>> row) const {
        reduce_integer(s, row);
        if (row.empty()) return;
        int pivot = row.begin()->first;
        normalize_row(row);
        auto note_uses = [&](int p, const std::map<int, Int, std::greater<int>>& r) {
            for (const auto& [col, c] : r)
                if (col != p) uses[col].push_back(p);
        };
        // Back-reduce existing rows that use the new pivot column.
        auto it = uses.find(pivot);
        if (it != uses.end()) {
            std::vector<int> pending = std::move(it->second);
            uses.erase(it);
            for (int rp : pending) {
                auto rit = s.rows.find(rp);
                if (rit == s.rows.end()) continue;
                auto cit = rit->second.find(pivot);
                if (cit == rit->second.end()) continue;  // stale entry
                Int coef = cit->second;
                eliminate(rit->second, coef, row, pivot);
                normalize_row(rit->second);
                note_uses(rp, rit->second);  // re-record (duplicates are harmless)
            }
        }
        note_uses(pivot, row);
        s.rows.emplace(pivot, std::move(row));
    }

    // target -= (coef / row[pivot]) * row, done fraction-free:
    // target = row_pivot * target - coef * row, then content-normalized
    // by the caller.
    static void eliminate(std::map<int, Int, std::greater<int>>& target, const Int& coef,
                          const std::map<int, Int, std::greater<int>>& row, int pivot) {
        Int lead = row.at(pivot);
        for (auto& [col, c] : target) c *= lead;
        for (const auto& [col, c] : row) {
            auto [it, fresh] = target.emplace(col, 0);
            it->second -= coef * c;
            if (it->second == 0) target.erase(it);
        }
    }

    static void normalize_row(std::map<int, Int, std::greater<int>>& row) {
        if (row.empty()) return;
        Int g = 0;
        for (const auto& [col, c] : row) g = gcd(g, abs(c));
        bool flip = row.begin()->second < 0;
        for (auto& [col, c] : row) {
            c /= g;
            if (flip) c = -c;
        }
    }

    // Eliminates every pivot-column entry of the row (not only the
    // lead). Stored rows only ever contribute standard columns, so each
    // pivot column is cleared at most once and the loop terminates.
    void reduce_integer(const Slice& s, std::map<int, Int, std::greater<int>>& row) const {
        while (!row.empty()) {
            auto hit = row.end();
            for (auto it = row.begin(); it != row.end(); ++it) {
                if (s.rows.count(it->first)) { hit = it; break; }
            }
            if (hit == row.end()) return;
            int col = hit->first;
            Int coef = hit->second;
            eliminate(row, coef, s.rows.at(col), col);
        }
    }

    void reduce_rational(const Slice& s, std::map<int, Rat>& v) const {
        // Eliminate pivot columns from the top down.
        while (true) {
            int pivot = -1;
            Rat coef;
            for (auto it = v.rbegin(); it != v.rend(); ++it) {
                if (it->second != 0 && s.rows.count(it->first)) {
                    pivot = it->first;
                    coef = it->second;
                    break;
                }
            }
            if (pivot < 0) break;
            const auto& row = s.rows.at(pivot);
            Rat factor = coef / Rat(row.at(pivot));
            for (const auto& [col, c] : row) v[col] -= factor * Rat(c);
        }
        for (auto it = v.begin(); it != v.end();)
            it = it->second == 0 ? v.erase(it) : std::next(it);
    }

    // Rank of a small set of sparse rational vectors, by keeping an
    // echelon basis keyed by largest coordinate.
    static int rational_rank(std::vector<std::map<ChainKey, Rat>> vecs) {
        std::map<ChainKey, std::map<ChainKey, Rat>> basis;  // lead -> row
        for (auto& v : vecs) {
            while (!v.empty()) {
                auto bit = basis.find(v.rbegin()->first);
                if (bit == basis.end()) break;
                Rat f = v.rbegin()->second / bit->second.rbegin()->second;
                for (const auto& [k, c] : bit->second) {
                    auto [it, fresh] = v.emplace(k, 0);
                    it->second -= f * c;
                    if (it->second == 0) v.erase(it);
                }
            }
            if (!v.empty()) basis.emplace(v.rbegin()->first, std::move(v));
        }
        return static_cast<int>(basis.size());
    }

    FlatsLattice l_;
    std::size_t column_limit_;
    mutable std::map<int, Slice> slices_;
};

// Independent count of the classical monomial basis: chains of nonempty
// flats with exponents a_i between 1 and rank(F_i) - rank(F_{i-1}) - 1
// (rank jump measured from the previous flat in the chain, starting at
// the empty flat). Calibrated against hilbert_series before use.
inline HilbertSeries fy_chain_count(const FlatsLattice& l) {
    std::vector<Subset> vars = l.variables();
    HilbertSeries h;
    std::function<void(Subset, int, int)> rec = [&](Subset prev, int prev_rank, int degree) {
        h.add_term(degree, 1);
        for (Subset f : vars) {
            if (f == prev || !prev.subset_of(f)) continue;
            int jump = l.rank_of(f) - prev_rank;
            for (int a = 1; a <= jump - 1; ++a) rec(f, l.rank_of(f), degree + a);
        }
    };
    rec(Subset(), 0, 0);
    return h;
}

}  // namespace chowlab
