// core.hpp
// Ground sets, subsets, permutations, inversion sequences, Lehmer coding
// and the elementary statistics (descents, ascents, excedances,
// derangement predicates, first-zero / first-peak).

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace chowlab {

// A finite linearly ordered ground set. Labels are strictly increasing
// integers; the canonical instance is [n] = {1..n}. Arbitrary labels are
// kept so that deletions E \ F reuse the same type.
class GroundSet {
public:
    GroundSet() = default;

    explicit GroundSet(std::vector<int> labels) : labels_(std::move(labels)) {
        for (std::size_t i = 1; i < labels_.size(); ++i)
            if (labels_[i - 1] >= labels_[i])
                throw std::invalid_argument("GroundSet labels must be strictly increasing");
        if (labels_.size() > 64)
            throw std::invalid_argument("GroundSet supports at most 64 elements");
    }

    // The canonical ground set [n].
    static GroundSet canonical(int n) {
        if (n < 0) throw std::invalid_argument("GroundSet size must be nonnegative");
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
        return GroundSet(std::move(v));
    }

    int n() const { return static_cast<int>(labels_.size()); }
    const std::vector<int>& labels() const { return labels_; }
    int label(int pos) const { return labels_.at(static_cast<std::size_t>(pos)); }

    // Position of a label, or -1 if absent.
    int position(int lab) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), lab);
        if (it == labels_.end() || *it != lab) return -1;
        return static_cast<int>(it - labels_.begin());
    }

    bool operator==(const GroundSet& o) const { return labels_ == o.labels_; }

private:
    std::vector<int> labels_;
};

// A subset of a ground set, stored as one bit per label position.
// Position order agrees with label order, so min/max/membership are O(1)
// bit operations independent of the actual labels.
class Subset {
public:
    Subset() : bits_(0) {}
    explicit Subset(std::uint64_t bits) : bits_(bits) {}

    static Subset of_positions(std::initializer_list<int> ps) {
        std::uint64_t b = 0;
        for (int p : ps) b |= (std::uint64_t{1} << p);
        return Subset(b);
    }

    static Subset of_labels(const GroundSet& g, const std::vector<int>& labs) {
        std::uint64_t b = 0;
        for (int lab : labs) {
            int p = g.position(lab);
            if (p < 0) throw std::invalid_argument("label not in ground set");
            b |= (std::uint64_t{1} << p);
        }
        return Subset(b);
    }

    // All positions < n.
    static Subset full(int n) {
        return Subset(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }

    std::uint64_t bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }
    bool contains(int pos) const { return (bits_ >> pos) & 1; }

    int min_pos() const {
        if (empty()) throw std::logic_error("min of empty subset");
        return std::countr_zero(bits_);
    }
    int max_pos() const {
        if (empty()) throw std::logic_error("max of empty subset");
        return 63 - std::countl_zero(bits_);
    }

    int max_label(const GroundSet& g) const { return g.label(max_pos()); }
    int min_label(const GroundSet& g) const { return g.label(min_pos()); }

    Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
    Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
    Subset minus(Subset o) const { return Subset(bits_ & ~o.bits_); }
    bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
    bool comparable(Subset o) const { return subset_of(o) || o.subset_of(*this); }

    Subset with(int pos) const { return Subset(bits_ | (std::uint64_t{1} << pos)); }
    Subset without(int pos) const { return Subset(bits_ & ~(std::uint64_t{1} << pos)); }

    // Elements at positions <= p, resp. > p, within the full set [0, n).
    static Subset positions_le(int p) { return full(p + 1); }
    static Subset positions_gt(int p, int n) { return full(n).minus(full(p + 1)); }

    std::vector<int> positions() const {
        std::vector<int> out;
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    std::vector<int> labels(const GroundSet& g) const {
        std::vector<int> out;
        for (int p : positions()) out.push_back(g.label(p));
        return out;
    }

    bool operator==(Subset o) const { return bits_ == o.bits_; }
    bool operator!=(Subset o) const { return bits_ != o.bits_; }
    bool operator<(Subset o) const { return bits_ < o.bits_; }

private:
    std::uint64_t bits_;
};

// Ground set obtained by deleting a subset.
inline GroundSet remove_subset(const GroundSet& g, Subset s) {
    std::vector<int> labs;
    for (int p = 0; p < g.n(); ++p)
        if (!s.contains(p)) labs.push_back(g.label(p));
    return GroundSet(std::move(labs));
}

// Re-express a subset of a sub-ground-set in the positions of a parent
// ground set (matching by label).
inline Subset embed_subset(Subset s, const GroundSet& sub, const GroundSet& parent) {
    std::uint64_t b = 0;
    for (int lab : s.labels(sub)) {
        int p = parent.position(lab);
        if (p < 0) throw std::invalid_argument("embed_subset: label missing from parent");
        b |= (std::uint64_t{1} << p);
    }
    return Subset(b);
}

// A bijection [n] -> E, stored as its list of values (labels).
class Permutation {
public:
    Permutation() = default;
    Permutation(std::vector<int> values, const GroundSet& g) : values_(std::move(values)) {
        if (static_cast<int>(values_.size()) != g.n())
            throw std::invalid_argument("Permutation length mismatch");
        std::uint64_t seen = 0;
        for (int v : values_) {
            int p = g.position(v);
            if (p < 0 || (seen >> p) & 1)
                throw std::invalid_argument("Permutation is not a bijection onto the ground set");
            seen |= std::uint64_t{1} << p;
        }
    }

    int n() const { return static_cast<int>(values_.size()); }
    int operator()(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }  // 1-based
    const std::vector<int>& values() const { return values_; }

    bool operator==(const Permutation& o) const { return values_ == o.values_; }
    bool operator<(const Permutation& o) const { return values_ < o.values_; }

private:
    std::vector<int> values_;
};

// Integers e_1..e_n with 0 <= e_i <= i-1.
class InversionSequence {
public:
    InversionSequence() = default;
    explicit InversionSequence(std::vector<int> entries) : entries_(std::move(entries)) {
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i] < 0 || entries_[i] > static_cast<int>(i))
                throw std::invalid_argument("invalid inversion sequence entry");
    }

    int n() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }  // 1-based
    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const InversionSequence& o) const { return entries_ == o.entries_; }
    bool operator<(const InversionSequence& o) const { return entries_ < o.entries_; }

private:
    std::vector<int> entries_;
};

// Lehmer code: e_i = Card({j | j < i, sigma(j) > sigma(i)}).
inline InversionSequence lehmer_code(const Permutation& p) {
    int n = p.n();
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int c = 0;
        for (int j = 1; j < i; ++j)
            if (p(j) > p(i)) ++c;
        e[static_cast<std::size_t>(i - 1)] = c;
    }
    return InversionSequence(std::move(e));
}

// Inverse of the Lehmer code: processing positions n..1, sigma(i) is the
// (e_i+1)-th largest remaining label.
inline Permutation lehmer_inverse(const InversionSequence& e, const GroundSet& g) {
    int n = g.n();
    if (e.n() != n) throw std::invalid_argument("lehmer_inverse: length mismatch");
    std::vector<int> remaining = g.labels();  // increasing
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int i = n; i >= 1; --i) {
        int idx = static_cast<int>(remaining.size()) - 1 - e[i];
        values[static_cast<std::size_t>(i - 1)] = remaining[static_cast<std::size_t>(idx)];
        remaining.erase(remaining.begin() + idx);
    }
    return Permutation(std::move(values), g);
}

inline std::vector<int> descent_set(const Permutation& p) {
    std::vector<int> out;
    for (int i = 1; i < p.n(); ++i)
        if (p(i) > p(i + 1)) out.push_back(i);
    return out;
}

inline std::vector<int> ascent_set(const InversionSequence& e) {
    std::vector<int> out;
    for (int i = 1; i < e.n(); ++i)
        if (e[i] < e[i + 1]) out.push_back(i);
    return out;
}

inline int ascent_count(const InversionSequence& e) {
    int c = 0;
    for (int i = 1; i < e.n(); ++i)
        if (e[i] < e[i + 1]) ++c;
    return c;
}

// Excedances only make sense on the canonical ground set [n].
inline int excedance_count(const Permutation& p) {
    for (int i = 1; i <= p.n(); ++i)
        if (p.values()[static_cast<std::size_t>(i - 1)] < 1 || p.values()[static_cast<std::size_t>(i - 1)] > p.n())
            throw std::invalid_argument("excedance_count requires the canonical ground set [n]");
    int c = 0;
    for (int i = 1; i <= p.n(); ++i)
        if (p(i) > i) ++c;
    return c;
}

inline bool is_derangement_perm(const Permutation& p) {
    for (int i = 1; i <= p.n(); ++i)
        if (p(i) == i) return false;
    return true;
}

// e is a derangement sequence iff e_n != 0 and no two consecutive zeros.
inline bool is_derangement_seq(const InversionSequence& e) {
    int n = e.n();
    if (n == 0) return false;
    if (e[n] == 0) return false;
    for (int i = 1; i < n; ++i)
        if (e[i] == 0 && e[i + 1] == 0) return false;
    return true;
}

// First zero of e after position 1, or n+1 if there is none.
inline int first_zero(const InversionSequence& e) {
    for (int i = 2; i <= e.n(); ++i)
        if (e[i] == 0) return i;
    return e.n() + 1;
}

// fp(e)_i = e_{i+1} - 1 for 1 <= i <= fz(e)-2. Requires e_2 = 1, which
// holds on every derangement sequence with n >= 2.
inline InversionSequence first_peak(const InversionSequence& e) {
    if (e.n() < 2) throw std::invalid_argument("first_peak requires n >= 2");
    if (e[2] != 1) throw std::invalid_argument("first_peak requires e_2 = 1");
    int fz = first_zero(e);
    std::vector<int> out;
    for (int i = 1; i <= fz - 2; ++i) out.push_back(e[i + 1] - 1);
    return InversionSequence(std::move(out));
}

// --- enumeration ------------------------------------------------------
//
// All streams are in lexicographic order and restartable from a prefix,
// so work can be partitioned deterministically.

// Visits every n-inversion sequence whose first `prefix.size()` entries
// equal `prefix`. Passing an empty prefix visits all of I_n.
inline void for_each_inversion_sequence(int n, const std::vector<int>& prefix,
                                        const std::function<void(const InversionSequence&)>& fn) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<int> e(prefix);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] > static_cast<int>(i))
            throw std::invalid_argument("invalid prefix");
    e.resize(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            fn(InversionSequence(e));
            return;
        }
        for (int v = 0; v <= i; ++v) {
            e[static_cast<std::size_t>(i)] = v;
            rec(i + 1);
        }
    };
    int start = static_cast<int>(prefix.size());
    if (start == n) {
        fn(InversionSequence(e));
        return;
    }
    rec(start);
}

inline void for_each_inversion_sequence(int n, const std::function<void(const InversionSequence&)>& fn) {
    for_each_inversion_sequence(n, {}, fn);
}

inline std::vector<InversionSequence> enumerate_inversion_sequences(int n) {
    std::vector<InversionSequence> out;
    for_each_inversion_sequence(n, [&](const InversionSequence& e) { out.push_back(e); });
    return out;
}

inline void for_each_permutation(const GroundSet& g, const std::function<void(const Permutation&)>& fn) {
    std::vector<int> v = g.labels();
    do {
        fn(Permutation(v, g));
    } while (std::next_permutation(v.begin(), v.end()));
}

inline std::vector<Permutation> enumerate_permutations(const GroundSet& g) {
    std::vector<Permutation> out;
    for_each_permutation(g, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

inline std::vector<InversionSequence> enumerate_derangement_seqs(int n) {
    std::vector<InversionSequence> out;
    for_each_inversion_sequence(n, [&](const InversionSequence& e) {
        if (is_derangement_seq(e)) out.push_back(e);
    });
    return out;
}

// --- text formats ------------------------------------------------------
// Permutations and inversion sequences print as comma-separated values,
// subsets as sorted label lists "{2,3,4}".

inline std::string to_string(const Permutation& p) {
    std::ostringstream os;
    for (int i = 0; i < p.n(); ++i) {
        if (i) os << ',';
        os << p.values()[static_cast<std::size_t>(i)];
    }
    return os.str();
}

inline std::string to_string(const InversionSequence& e) {
    std::ostringstream os;
    for (int i = 0; i < e.n(); ++i) {
        if (i) os << ',';
        os << e.entries()[static_cast<std::size_t>(i)];
    }
    return os.str();
}

inline std::string to_string(Subset s, const GroundSet& g) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int lab : s.labels(g)) {
        if (!first) os << ',';
        os << lab;
        first = false;
    }
    os << '}';
    return os.str();
}

inline std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            if (cur.empty()) throw std::invalid_argument("malformed integer list");
            out.push_back(std::stoi(cur));
            cur.clear();
        } else if (ch == ' ') {
            continue;
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

inline Permutation parse_permutation(const std::string& text, const GroundSet& g) {
    return Permutation(parse_int_list(text), g);
}

inline InversionSequence parse_inversion_sequence(const std::string& text) {
    return InversionSequence(parse_int_list(text));
}

}  // namespace chowlab
