#pragma once

// nil(R), N(R) and the prime radical P(R). P(R) has three independent
// routes that serve as oracles for one another:
//   - strong nilpotency via the successor graph a -> a r a,
//   - elements whose principal two-sided ideal is nilpotent,
//   - the intersection of all prime ideals (small rings only).

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Rings above this size are refused by the ideal-enumerating routes.
inline constexpr std::size_t kDefaultPrimeOracleCap = 16;

/// Every two-sided ideal, ordered by size then membership mask.
inline std::vector<Ideal> enumerate_ideals(const RingTable& r, std::size_t cap = kDefaultPrimeOracleCap) {
    if (r.size() > cap)
        throw CapExceeded("ideal enumeration is capped at " + std::to_string(cap) +
                          " elements; use the fixpoint or ideal-nilpotency route for P(R)");
    std::set<std::vector<bool>> seen;
    std::vector<Ideal> out;
    std::vector<Ideal> work{zero_ideal(r)};
    seen.insert(work.front().mask);
    while (!work.empty()) {
        Ideal cur = std::move(work.back());
        work.pop_back();
        for (Elem x = 0; x < r.size(); ++x) {
            if (cur.contains(x)) continue;
            std::vector<Elem> gens = cur.members;
            gens.push_back(x);
            Ideal next = ideal_closure(r, gens);
            if (seen.insert(next.mask).second) work.push_back(std::move(next));
        }
        out.push_back(std::move(cur));
    }
    std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members < b.members;
    });
    return out;
}

/// For all a, b outside I some a·r·b lies outside I.
inline bool is_prime_ideal(const RingTable& r, const Ideal& i) {
    if (i.is_whole_ring()) throw PreconditionError("prime ideals are proper; got the whole ring");
    for (Elem a = 0; a < r.size(); ++a) {
        if (i.contains(a)) continue;
        for (Elem b = 0; b < r.size(); ++b) {
            if (i.contains(b)) continue;
            bool escapes = false;
            for (Elem s = 0; s < r.size() && !escapes; ++s) escapes = !i.contains(r.mul(r.mul(a, s), b));
            if (!escapes) return false;
        }
    }
    return true;
}

/// Strongly nilpotent elements. A nonzero a survives iff some path
/// a -> a r a -> ... avoids zero forever, i.e. reaches a cycle of nonzero
/// elements; everything else is peeled off from the sinks.
inline Ideal prime_radical_fixpoint(const RingTable& r) {
    const std::size_t n = r.size();
    std::vector<std::vector<Elem>> preds(n);
    std::vector<std::size_t> outdeg(n, 0);
    std::vector<std::size_t> stamp(n, n);
    for (Elem a = 0; a < n; ++a) {
        if (a == r.zero()) continue;
        for (Elem s = 0; s < n; ++s) {
            const Elem next = r.mul(r.mul(a, s), a);
            if (next == r.zero() || stamp[next] == a) continue;
            stamp[next] = a;
            preds[next].push_back(a);
            ++outdeg[a];
        }
    }
    std::vector<bool> strongly_nilpotent(n, false);
    strongly_nilpotent[r.zero()] = true;
    std::vector<Elem> sinks;
    for (Elem a = 0; a < n; ++a)
        if (a != r.zero() && outdeg[a] == 0) sinks.push_back(a);
    while (!sinks.empty()) {
        const Elem a = sinks.back();
        sinks.pop_back();
        strongly_nilpotent[a] = true;
        for (Elem p : preds[a])
            if (--outdeg[p] == 0) sinks.push_back(p);
    }
    return Ideal::from_mask(std::move(strongly_nilpotent));
}

/// {x : RxR is nilpotent}.
inline Ideal prime_radical_ideal_nilpotency(const RingTable& r) {
    std::vector<bool> in(r.size(), false);
    for (Elem x = 0; x < r.size(); ++x) {
        if (in[x]) continue;
        const Ideal principal = ideal_closure(r, std::span<const Elem>(&x, 1));
        if (is_nilpotent_ideal(r, principal))
            // Every member of a nilpotent ideal generates a nilpotent ideal.
            for (Elem m : principal.members) in[m] = true;
    }
    return Ideal::from_mask(std::move(in));
}

/// Intersection of all prime ideals; the whole ring when there are none.
inline Ideal prime_radical_prime_intersection(const RingTable& r, std::size_t cap = kDefaultPrimeOracleCap) {
    std::vector<bool> meet(r.size(), true);
    for (const Ideal& i : enumerate_ideals(r, cap)) {
        if (i.is_whole_ring() || !is_prime_ideal(r, i)) continue;
        for (Elem a = 0; a < r.size(); ++a) meet[a] = meet[a] && i.contains(a);
    }
    return Ideal::from_mask(std::move(meet));
}

inline Ideal nil_elements(const RingTable& r) {
    std::vector<bool> in(r.size(), false);
    for (Elem a = 0; a < r.size(); ++a) in[a] = is_nilpotent_element(r, a);
    return Ideal::from_mask(std::move(in));
}

/// Largest nil ideal. Throws DefectError if the collected set is not an ideal.
inline Ideal nilradical(const RingTable& r) {
    std::vector<bool> in(r.size(), false);
    for (Elem x = 0; x < r.size(); ++x) {
        if (in[x]) continue;
        const Ideal principal = ideal_closure(r, std::span<const Elem>(&x, 1));
        if (is_nil_ideal(r, principal))
            for (Elem m : principal.members) in[m] = true;
    }
    Ideal n = Ideal::from_mask(std::move(in));
    if (!is_ideal(r, n)) throw DefectError("collected nil elements do not form an ideal");
    return n;
}

inline bool is_reduced(const RingTable& r) { return nil_elements(r).is_zero(); }

/// ab = 0 implies aRb = 0.
inline bool is_semicommutative(const RingTable& r) {
    for (Elem a = 0; a < r.size(); ++a)
        for (Elem b = 0; b < r.size(); ++b) {
            if (r.mul(a, b) != r.zero()) continue;
            for (Elem s = 0; s < r.size(); ++s)
                if (r.mul(r.mul(a, s), b) != r.zero()) return false;
        }
    return true;
}

/// P(R) coincides with the set of nilpotent elements.
inline bool is_2primal(const RingTable& r) { return prime_radical_fixpoint(r) == nil_elements(r); }

struct RadicalReport {
    Ideal nil;
    Ideal nilradical;
    Ideal prime_fixpoint;
    Ideal prime_nilpotency;
    std::optional<Ideal> prime_intersection;  // empty when the ring is over the cap

    bool fixpoint_matches_nilpotency = false;
    std::optional<bool> fixpoint_matches_intersection;
    std::optional<bool> nilpotency_matches_intersection;

    const Ideal& prime_radical() const { return prime_fixpoint; }
    bool oracles_agree() const {
        return fixpoint_matches_nilpotency && fixpoint_matches_intersection.value_or(true) &&
               nilpotency_matches_intersection.value_or(true);
    }
    /// P ⊆ N ⊆ nil.
    bool chain_holds() const { return prime_fixpoint.subset_of(nilradical) && nilradical.subset_of(nil); }
};

inline RadicalReport radical_report(const RingTable& r, std::size_t prime_oracle_cap = kDefaultPrimeOracleCap) {
    RadicalReport rep{nil_elements(r), nilradical(r), prime_radical_fixpoint(r), prime_radical_ideal_nilpotency(r),
                      std::nullopt, false, std::nullopt, std::nullopt};
    rep.fixpoint_matches_nilpotency = rep.prime_fixpoint == rep.prime_nilpotency;
    if (r.size() <= prime_oracle_cap) {
        rep.prime_intersection = prime_radical_prime_intersection(r, prime_oracle_cap);
        rep.fixpoint_matches_intersection = rep.prime_fixpoint == *rep.prime_intersection;
        rep.nilpotency_matches_intersection = rep.prime_nilpotency == *rep.prime_intersection;
    }
    return rep;
}

}  // namespace ringlab
