#pragma once

// Two-sided ideals as membership masks.

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// A subset of a ring's elements. When produced by ideal_closure() it is a
/// two-sided ideal; the struct itself does not enforce that.
struct Ideal {
    std::vector<bool> mask;
    std::vector<Elem> members;  // ascending

    static Ideal from_mask(std::vector<bool> m) {
        Ideal i;
        i.mask = std::move(m);
        for (Elem a = 0; a < i.mask.size(); ++a)
            if (i.mask[a]) i.members.push_back(a);
        return i;
    }
    static Ideal from_members(std::size_t ring_size, std::span<const Elem> elems) {
        std::vector<bool> m(ring_size, false);
        for (Elem e : elems) m.at(e) = true;
        return from_mask(std::move(m));
    }

    std::size_t size() const noexcept { return members.size(); }
    bool contains(Elem a) const { return mask[a]; }
    bool is_whole_ring() const noexcept { return members.size() == mask.size(); }
    bool is_zero() const noexcept { return members.size() == 1; }
    bool subset_of(const Ideal& other) const {
        for (Elem a : members)
            if (!other.mask[a]) return false;
        return true;
    }
    bool operator==(const Ideal& other) const { return mask == other.mask; }
};

/// Additive subgroup generated by `gens` (plus zero).
inline Ideal additive_span(const RingTable& r, std::span<const Elem> gens) {
    // In a finite group repeated addition of g reaches -g, so closing {0}
    // under x ↦ x + g for each generator g gives the subgroup.
    std::vector<bool> in(r.size(), false);
    std::vector<Elem> work{r.zero()};
    in[r.zero()] = true;
    while (!work.empty()) {
        const Elem x = work.back();
        work.pop_back();
        for (Elem g : gens) {
            const Elem s = r.add(x, g);
            if (!in[s]) {
                in[s] = true;
                work.push_back(s);
            }
        }
    }
    return Ideal::from_mask(std::move(in));
}

/// Least two-sided ideal containing `gens`.
inline Ideal ideal_closure(const RingTable& r, std::span<const Elem> gens) {
    std::vector<bool> in(r.size(), false);
    std::vector<Elem> members;
    std::vector<Elem> work;
    auto push = [&](Elem x) {
        if (!in[x]) {
            in[x] = true;
            members.push_back(x);
            work.push_back(x);
        }
    };
    push(r.zero());
    for (Elem g : gens) push(g);
    while (!work.empty()) {
        const Elem x = work.back();
        work.pop_back();
        push(r.neg(x));
        for (Elem s = 0; s < r.size(); ++s) {
            push(r.mul(s, x));
            push(r.mul(x, s));
        }
        // Sums with everything collected so far; later additions revisit x.
        for (std::size_t k = 0; k < members.size(); ++k) push(r.add(x, members[k]));
    }
    return Ideal::from_mask(std::move(in));
}

inline Ideal zero_ideal(const RingTable& r) {
    const Elem z = r.zero();
    return Ideal::from_members(r.size(), std::span<const Elem>(&z, 1));
}

inline Ideal whole_ring(const RingTable& r) { return Ideal::from_mask(std::vector<bool>(r.size(), true)); }

/// Membership check for the ideal axioms, by exhaustive scan.
inline bool is_ideal(const RingTable& r, const Ideal& i) {
    if (!i.contains(r.zero())) return false;
    for (Elem a : i.members) {
        if (!i.contains(r.neg(a))) return false;
        for (Elem b : i.members)
            if (!i.contains(r.add(a, b))) return false;
        for (Elem s = 0; s < r.size(); ++s)
            if (!i.contains(r.mul(s, a)) || !i.contains(r.mul(a, s))) return false;
    }
    return true;
}

/// Additive span of all products x·y with x ∈ a, y ∈ b.
inline Ideal product_span(const RingTable& r, const Ideal& a, const Ideal& b) {
    std::vector<bool> seen(r.size(), false);
    std::vector<Elem> prods;
    for (Elem x : a.members)
        for (Elem y : b.members) {
            const Elem p = r.mul(x, y);
            if (!seen[p]) {
                seen[p] = true;
                prods.push_back(p);
            }
        }
    return additive_span(r, prods);
}

/// Smallest k with I^k = 0, where I^k is the additive span of k-fold products.
inline std::optional<std::size_t> nilpotency_index(const RingTable& r, const Ideal& i) {
    Ideal power = i;
    for (std::size_t k = 1; k <= i.size() + 1; ++k) {
        if (power.is_zero()) return k;
        Ideal next = product_span(r, power, i);
        if (next == power) return std::nullopt;
        power = std::move(next);
    }
    return std::nullopt;
}

inline bool is_nilpotent_ideal(const RingTable& r, const Ideal& i) { return nilpotency_index(r, i).has_value(); }

inline bool is_nil_ideal(const RingTable& r, const Ideal& i) {
    return std::all_of(i.members.begin(), i.members.end(),
                       [&](Elem a) { return is_nilpotent_element(r, a); });
}

}  // namespace ringlab
