// verify.hpp
// Batched invariant suites over the other modules: bijection round
// trips, rewriting case analysis and D-set identities, oracle
// cross-checks, the uniform-matroid corollary, and the interlacing
// experiments. Each suite returns a deterministic Report; heavy loops
// are split into per-parameter tasks that can run on a worker pool,
// with results merged in task order so thread count never changes the
// report.

#pragma once

#include <atomic>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "core.hpp"
#include "normal.hpp"
#include "oracle.hpp"
#include "poly.hpp"
#include "realroot.hpp"
#include "rewrite.hpp"

namespace chowlab {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

// Runs the tasks on `threads` workers (>= 1) and returns the checks in
// task order regardless of scheduling.
inline std::vector<Check> run_tasks(std::vector<std::function<Check()>> tasks, int threads) {
    std::vector<Check> out(tasks.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            out[i] = tasks[i]();
        }
    };
    std::vector<std::thread> pool;
    int count = std::min<int>(threads, static_cast<int>(tasks.size()));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

inline Check make_check(const std::string& name, bool pass, const std::string& detail = "") {
    return Check{name, pass, detail};
}

// Smallest flat containing both F1 and F2 (the join in the lattice).
inline Subset lattice_join(const FlatsLattice& l, Subset f1, Subset f2) {
    Subset best = Subset::full(l.n());
    for (Subset f : l.flats())
        if (f1.subset_of(f) && f2.subset_of(f) && f.subset_of(best)) best = f;
    return best;
}

}  // namespace detail

// --- bijection suite ----------------------------------------------------

inline Report verify_bijection(int max_n, int threads = 1) {
    std::vector<std::function<Check()>> tasks;
    for (int n = 1; n <= max_n; ++n) {
        tasks.push_back([n]() -> Check {
            GroundSet g = GroundSet::canonical(n);
            std::set<NormalMonomial> monomials;
            HilbertSeries by_degree;
            bool all_normal = true;
            for_each_normal_monomial(g, [&](const NormalMonomial& m) {
                monomials.insert(m);
                by_degree.add_term(m.degree(), 1);
                if (!is_normal(m)) all_normal = false;
            });
            bool ok = all_normal;
            std::ostringstream why;
            if (!all_normal) why << "enumerated monomial fails pairwise normality; ";

            std::set<NormalMonomial> images;
            bool round_trip = true;
            for_each_permutation(g, [&](const Permutation& p) {
                NormalMonomial m = psi(p, g);
                images.insert(m);
                if (static_cast<std::size_t>(m.degree()) != descent_set(p).size()) round_trip = false;
                if (!(phi(m, g) == p)) round_trip = false;
            });
            if (!round_trip) { ok = false; why << "phi(psi(sigma)) != sigma or degree != des; "; }
            if (images != monomials) { ok = false; why << "psi image set differs from NM(E); "; }
            bool inverse = true;
            for (const NormalMonomial& m : monomials)
                if (!(psi(phi(m, g), g) == m)) inverse = false;
            if (!inverse) { ok = false; why << "psi(phi(m)) != m; "; }
            if (by_degree != eulerian(n)) { ok = false; why << "degree histogram != Eulerian polynomial; "; }
            std::ostringstream name;
            name << "bijection.n" << n;
            return detail::make_check(name.str(), ok, why.str());
        });
    }
    return Report{"bijection", detail::run_tasks(std::move(tasks), threads)};
}

// --- rewriting suite ----------------------------------------------------

inline Report verify_rewriting(int max_n, int threads = 1) {
    std::vector<std::function<Check()>> tasks;

    // Exhaustive case partition of g_map inputs.
    for (int n = 2; n <= max_n; ++n) {
        tasks.push_back([n]() -> Check {
            bool ok = true;
            for_each_inversion_sequence(n, [&](const InversionSequence& e) {
                int cases = 0;
                if (e[n] == 0) ++cases;
                if (first_zero(e) == n + 1) ++cases;
                bool middle_zero = false;
                for (int i = 2; i <= n - 1; ++i)
                    if (e[i] == 0) middle_zero = true;
                if (middle_zero && e[n] != 0) ++cases;
                if (cases != 1) ok = false;
            });
            std::ostringstream name;
            name << "rewriting.case_partition.n" << n;
            return detail::make_check(name.str(), ok, ok ? "" : "cases are not a partition");
        });
    }

    // D-set identities: image sets equal the recursive sets and ascents
    // are bounded below by k. Note that g_map is not injective on the
    // predecessor sets — e.g. (0,1,2,1) and (0,1,2,2) both rewrite to
    // (0,1,2,3) — so only the image *sets* are compared; the soundness
    // suite confirms every collision at the ring level.
    for (int n = 2; n <= max_n; ++n) {
        tasks.push_back([n]() -> Check {
            bool ok = true;
            std::ostringstream why;
            DSetTable table;
            std::vector<InversionSequence> prev;  // g_power_images(n, k-1)
            for_each_inversion_sequence(n, [&](const InversionSequence& e) { prev.push_back(e); });
            for (int k = 1; k <= n - 1; ++k) {
                std::set<InversionSequence> images;
                for (const InversionSequence& e : prev) {
                    RewriteResult r = g_map(e);
                    if (!r.zero) images.insert(r.seq);
                }
                const auto& recursive = table.get(n, k);
                if (std::vector<InversionSequence>(images.begin(), images.end()) != recursive) {
                    ok = false;
                    why << "image set != recursive D-set at k=" << k << "; ";
                }
                for (const InversionSequence& e : recursive) {
                    if (ascent_count(e) < k) {
                        ok = false;
                        why << "ascent below k=" << k << "; ";
                        break;
                    }
                }
                prev.assign(images.begin(), images.end());
            }
            std::ostringstream name;
            name << "rewriting.dsets.n" << n;
            return detail::make_check(name.str(), ok, why.str());
        });
    }

    // Ascent transport: asc(e) equals the degree of the associated
    // normal monomial.
    for (int n = 1; n <= std::min(max_n, 7); ++n) {
        tasks.push_back([n]() -> Check {
            GroundSet g = GroundSet::canonical(n);
            bool ok = true;
            for_each_inversion_sequence(n, [&](const InversionSequence& e) {
                NormalMonomial m = monomial_of_sequence(e, g);
                if (m.degree() != ascent_count(e)) ok = false;
                if (!(sequence_of_monomial(m, g) == e)) ok = false;
            });
            std::ostringstream name;
            name << "rewriting.ascent_transport.n" << n;
            return detail::make_check(name.str(), ok, ok ? "" : "asc != degree or transport not inverse");
        });
    }

    // Ring identity behind the rewriting: g_E g_F = g_F g_{E_{<= max(E\F)}}
    // for every F containing max E with F \ {max E} nonempty.
    for (int n = 2; n <= std::min(max_n, 5); ++n) {
        tasks.push_back([n]() -> Check {
            ChowRing ring(FlatsLattice::boolean_lattice(n));
            Subset full = Subset::full(n);
            bool ok = true;
            for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b) {
                Subset f(b);
                if (!f.contains(n - 1) || f.size() < 2 || f == full) continue;
                Subset comp = full.minus(f);
                Subset initial = Subset::positions_le(comp.max_pos());
                Element lhs = ring.g_element(full) * ring.g_element(f);
                Element rhs = ring.g_element(f) * ring.g_element(initial);
                if (!ring.equal_in_ring(lhs, rhs)) ok = false;
            }
            std::ostringstream name;
            name << "rewriting.ring_identity.n" << n;
            return detail::make_check(name.str(), ok, ok ? "" : "g_E g_F != g_F g_{E<=max(E\\F)}");
        });
    }

    // Monomial-level soundness of the rewriting against the oracle:
    // multiplying the g-monomial of e by g_E lands on the g-monomial of
    // g_map(e), and on zero exactly when g_map says ZERO.
    for (int n = 2; n <= std::min(max_n, 6); ++n) {
        tasks.push_back([n]() -> Check {
            GroundSet g = GroundSet::canonical(n);
            ChowRing ring(FlatsLattice::boolean_lattice(n));
            Element ge = ring.g_element(Subset::full(n));
            bool ok = true;
            std::ostringstream why;
            for_each_inversion_sequence(n, [&](const InversionSequence& e) {
                if (!ok) return;
                Element lhs = ge;
                NormalMonomial me = monomial_of_sequence(e, g);
                for (Subset s : me.parts()) lhs = lhs * ring.g_element(s);
                RewriteResult r = g_map(e);
                if (r.zero) {
                    if (!ring.is_zero_in_ring(lhs)) {
                        ok = false;
                        why << "ZERO case not zero in ring at e=" << to_string(e) << "; ";
                    }
                    return;
                }
                Element rhs = Element::monomial(ChainKey{});
                NormalMonomial mr = monomial_of_sequence(r.seq, g);
                for (Subset s : mr.parts()) rhs = rhs * ring.g_element(s);
                if (!ring.equal_in_ring(lhs, rhs)) {
                    ok = false;
                    why << "rewrite mismatch at e=" << to_string(e) << "; ";
                }
            });
            std::ostringstream name;
            name << "rewriting.soundness.n" << n;
            return detail::make_check(name.str(), ok, why.str());
        });
    }

    return Report{"rewriting", detail::run_tasks(std::move(tasks), threads)};
}

// --- oracle suite -------------------------------------------------------

inline Report verify_oracle(int max_n, int threads = 1) {
    std::vector<std::function<Check()>> tasks;

    // Three-way Hilbert agreement on boolean lattices.
    for (int n = 1; n <= std::min(max_n, 4); ++n) {
        tasks.push_back([n]() -> Check {
            ChowRing ring(FlatsLattice::boolean_lattice(n));
            HilbertSeries h = ring.hilbert_series();
            bool ok = h == fy_chain_count(ring.lattice()) && h == hilbert_boolean(n) &&
                      is_palindromic(h, n - 1);
            std::ostringstream name;
            name << "oracle.boolean.n" << n;
            return detail::make_check(name.str(), ok, ok ? "" : "hilbert routes disagree: " + h.str());
        });
    }

    // Row reduction vs chain count on uniform lattices, plus palindromy.
    for (int n = 1; n <= std::min(max_n, 6); ++n) {
        tasks.push_back([n]() -> Check {
            bool ok = true;
            std::ostringstream why;
            for (int r = 1; r <= n; ++r) {
                ChowRing ring(FlatsLattice::uniform_lattice(r, n));
                HilbertSeries h = ring.hilbert_series();
                if (h != fy_chain_count(ring.lattice())) {
                    ok = false;
                    why << "U(" << r << "," << n << ") routes disagree; ";
                }
                if (!is_palindromic(h, r - 1)) {
                    ok = false;
                    why << "U(" << r << "," << n << ") not palindromic; ";
                }
            }
            std::ostringstream name;
            name << "oracle.uniform.n" << n;
            return detail::make_check(name.str(), ok, why.str());
        });
    }

    // canonical_form kills the defining relations, is linear, and is a
    // projection; the simplicial relations expand to zero; the g and h
    // expansions match their closed forms.
    for (int n = 2; n <= std::min(max_n, 4); ++n) {
        tasks.push_back([n]() -> Check {
            ChowRing ring(FlatsLattice::boolean_lattice(n));
            const FlatsLattice& l = ring.lattice();
            bool ok = true;
            std::ostringstream why;
            // Linear relations.
            for (int i = 0; i < n; ++i) {
                Element li = Element::zero(1);
                for (Subset f : l.flats())
                    if (!f.empty() && f.contains(i)) li.add(ChainKey{{f.bits(), 1}}, 1);
                if (!ring.is_zero_in_ring(li)) { ok = false; why << "linear relation survives; "; }
            }
            // Simplicial relations over all flat pairs.
            for (Subset f1 : l.flats()) {
                if (f1.empty()) continue;
                for (Subset f2 : l.flats()) {
                    if (f2.empty()) continue;
                    Subset f = detail::lattice_join(l, f1, f2);
                    Element rel = (ring.h_element(f) - ring.h_element(f1)) *
                                  (ring.h_element(f) - ring.h_element(f2));
                    if (!ring.is_zero_in_ring(rel)) { ok = false; why << "simplicial relation survives; "; }
                }
            }
            // Atom h classes vanish; g with top element is x; g_E = h_E.
            for (int i = 0; i < n; ++i)
                if (!ring.is_zero_in_ring(ring.h_element(Subset().with(i)))) {
                    ok = false;
                    why << "h_atom nonzero; ";
                }
            for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b) {
                Subset f(b);
                if (f.contains(n - 1) && !ring.equal_in_ring(ring.g_element(f), ring.x_element(f))) {
                    ok = false;
                    why << "g_F != x_F with max E in F; ";
                }
            }
            if (!ring.equal_in_ring(ring.g_element(Subset::full(n)), ring.h_element(Subset::full(n)))) {
                ok = false;
                why << "g_E != h_E; ";
            }
            // Linearity and idempotence of the canonical form on a
            // representative pair.
            Element a = ring.h_element(Subset::full(n));
            Element b2 = ring.x_element(Subset().with(0).with(n - 1));
            auto cf = ring.canonical_form(a + b2);
            auto ca = ring.canonical_form(a);
            auto cb = ring.canonical_form(b2);
            for (const auto& [k, c] : cb) {
                auto [it, fresh] = ca.emplace(k, 0);
                it->second += c;
                if (it->second == 0) ca.erase(it);
            }
            if (cf != ca) { ok = false; why << "canonical form not linear; "; }
            Element back = Element::zero(1);
            for (const auto& [k, c] : cf) back.add(k, c);
            if (ring.canonical_form(back) != cf) { ok = false; why << "canonical form not idempotent; "; }
            std::ostringstream name;
            name << "oracle.relations.n" << n;
            return detail::make_check(name.str(), ok, why.str());
        });
    }

    // Principal ideal slices match shifted uniform Hilbert series.
    for (int n = 2; n <= std::min(max_n, 5); ++n) {
        tasks.push_back([n]() -> Check {
            ChowRing ring(FlatsLattice::boolean_lattice(n));
            bool ok = true;
            std::ostringstream why;
            for (int k = 1; k <= n; ++k) {
                int m = n - k;
                HilbertSeries lhs = ring.principal_ideal_hilbert(m);
                HilbertSeries rhs =
                    ChowRing(FlatsLattice::uniform_lattice(k, n)).hilbert_series() *
                    IntPolynomial::monomial(m, 1);
                if (lhs != rhs) {
                    ok = false;
                    why << "m=" << m << ": " << lhs.str() << " != " << rhs.str() << "; ";
                }
            }
            std::ostringstream name;
            name << "oracle.principal_ideal.n" << n;
            return detail::make_check(name.str(), ok, why.str());
        });
    }

    return Report{"oracle", detail::run_tasks(std::move(tasks), threads)};
}

// --- corollary suite ----------------------------------------------------

inline Report verify_corollary(int max_n, int threads = 1) {
    std::vector<std::function<Check()>> tasks;

    // D-set ascent sums against the oracle Hilbert series of uniform
    // matroids.
    for (int n = 2; n <= std::min(max_n, 6); ++n) {
        tasks.push_back([n]() -> Check {
            bool ok = true;
            std::ostringstream why;
            for (int k = 1; k <= n - 1; ++k) {
                IntPolynomial lhs;
                for (const InversionSequence& e : dset_recursive(n, k)) lhs.add_term(ascent_count(e), 1);
                HilbertSeries h = ChowRing(FlatsLattice::uniform_lattice(n - k, n)).hilbert_series();
                if (lhs != h * IntPolynomial::monomial(k, 1)) {
                    ok = false;
                    why << "k=" << k << ": " << lhs.str() << " != t^k * " << h.str() << "; ";
                }
            }
            std::ostringstream name;
            name << "corollary.dsets.n" << n;
            return detail::make_check(name.str(), ok, why.str());
        });
    }

    // Corank one: t * H(U_{n-1,n}) is the derangement polynomial. The
    // chain count carries the range to n = 8; the row-reduction oracle
    // confirms it up to n = 6.
    for (int n = 2; n <= std::min(max_n, 8); ++n) {
        tasks.push_back([n]() -> Check {
            bool ok = true;
            std::ostringstream why;
            IntPolynomial dn = derangement_poly(n);
            HilbertSeries chains = fy_chain_count(FlatsLattice::uniform_lattice(n - 1, n));
            if (chains * IntPolynomial::monomial(1, 1) != dn) {
                ok = false;
                why << "chain count: t*" << chains.str() << " != " << dn.str() << "; ";
            }
            if (n <= 6) {
                HilbertSeries h = ChowRing(FlatsLattice::uniform_lattice(n - 1, n)).hilbert_series();
                if (h * IntPolynomial::monomial(1, 1) != dn) {
                    ok = false;
                    why << "row reduction: t*" << h.str() << " != " << dn.str() << "; ";
                }
            }
            std::ostringstream name;
            name << "corollary.corank1.n" << n;
            return detail::make_check(name.str(), ok, why.str());
        });
    }

    return Report{"corollary", detail::run_tasks(std::move(tasks), threads)};
}

// --- interlacing suite --------------------------------------------------

// The refined D-set family for k = 2: (d^{2,0}_n, d^{2,1}_n, ...,
// d^{2,n-1}_n).
inline std::vector<IntPolynomial> dki_family(int n, int k) {
    DSetTable table;
    std::vector<IntPolynomial> out;
    for (int i = 0; i <= n - 1; ++i) out.push_back(dki_polynomial(table, n, k, i));
    return out;
}

inline std::vector<IntPolynomial> dki_family_drop22(int n) {
    DSetTable table;
    std::vector<IntPolynomial> out;
    for (int i = 0; i <= n - 1; ++i)
        if (i != 2) out.push_back(dki_polynomial(table, n, 2, i));
    return out;
}

inline std::vector<IntPolynomial> dki_family_merge12(int n) {
    DSetTable table;
    std::vector<IntPolynomial> out;
    out.push_back(dki_polynomial(table, n, 2, 0));
    out.push_back(dki_polynomial(table, n, 2, 1) + dki_polynomial(table, n, 2, 2));
    for (int i = 3; i <= n - 1; ++i) out.push_back(dki_polynomial(table, n, 2, i));
    return out;
}

inline Report verify_interlacing(int max_n, int threads = 1) {
    std::vector<std::function<Check()>> tasks;

    // Real-rootedness of the uniform Chow polynomials (via the D-set
    // route, which the corollary suite pins to the oracle).
    for (int n = 2; n <= std::min(max_n, 9); ++n) {
        tasks.push_back([n]() -> Check {
            bool ok = true;
            std::ostringstream why;
            for (int k = 1; k <= n - 1; ++k) {
                HilbertSeries h = chow_uniform_via_dsets(n, k);
                if (!is_real_rooted(h)) {
                    ok = false;
                    why << "U(" << n - k << "," << n << ") not real-rooted: " << h.str() << "; ";
                }
            }
            std::ostringstream name;
            name << "interlacing.real_rooted.n" << n;
            return detail::make_check(name.str(), ok, why.str());
        });
    }

    // The two repaired k=2 families must interlace on the whole range.
    for (int n = 4; n <= std::min(max_n, 10); ++n) {
        tasks.push_back([n]() -> Check {
            bool drop = is_interlacing_sequence(dki_family_drop22(n));
            bool merge = is_interlacing_sequence(dki_family_merge12(n));
            std::ostringstream name, why;
            name << "interlacing.variants.n" << n;
            if (!drop) why << "dropped family fails; ";
            if (!merge) why << "merged family fails; ";
            return detail::make_check(name.str(), drop && merge, why.str());
        });
    }

    // The plain k=2 family must exhibit a non-interlacing witness
    // somewhere in the range.
    tasks.push_back([max_n]() -> Check {
        int witness = -1;
        for (int n = 4; n <= std::min(max_n, 10); ++n) {
            if (!is_interlacing_sequence(dki_family(n, 2))) {
                witness = n;
                break;
            }
        }
        std::ostringstream why;
        if (witness > 0) why << "first failure at n=" << witness;
        return detail::make_check("interlacing.plain_witness", witness > 0,
                                  witness > 0 ? why.str() : "no witness in range");
    });

    return Report{"interlacing", detail::run_tasks(std::move(tasks), threads)};
}

inline Report verify_all(int max_n, int threads = 1) {
    Report out{"all", {}};
    for (const Report& r : {verify_bijection(std::min(max_n, 7), threads),
                            verify_rewriting(max_n, threads), verify_oracle(max_n, threads),
                            verify_corollary(max_n, threads), verify_interlacing(max_n, threads)}) {
        for (const Check& c : r.checks) out.checks.push_back(c);
    }
    return out;
}

}  // namespace chowlab
