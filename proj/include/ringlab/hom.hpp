#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// A map between ring tables, element by element.
struct RingHom {
    RingRef source;
    RingRef target;
    std::vector<Elem> map;

    Elem operator()(Elem a) const { return map.at(a); }
};

struct HomCheck {
    bool ok = true;
    std::string failure;
    explicit operator bool() const noexcept { return ok; }
};

/// Exhaustive check that `h` preserves zero, addition and multiplication on
/// all pairs; `unital` additionally requires one ↦ one.
inline HomCheck check_homomorphism(const RingHom& h, bool unital = true) {
    const RingTable& s = *h.source;
    const RingTable& t = *h.target;
    if (h.map.size() != s.size()) return {false, "map length differs from source size"};
    for (Elem e : h.map)
        if (e >= t.size()) return {false, "map entry out of target range"};
    if (h.map[s.zero()] != t.zero()) return {false, "zero not preserved"};
    if (unital && h.map[s.one()] != t.one()) return {false, "one not preserved"};
    for (Elem a = 0; a < s.size(); ++a)
        for (Elem b = 0; b < s.size(); ++b) {
            if (h.map[s.add(a, b)] != t.add(h.map[a], h.map[b]))
                return {false, "addition not preserved at (" + std::to_string(a) + "," + std::to_string(b) + ")"};
            if (h.map[s.mul(a, b)] != t.mul(h.map[a], h.map[b]))
                return {false, "multiplication not preserved at (" + std::to_string(a) + "," + std::to_string(b) + ")"};
        }
    return {};
}

inline bool is_injective(const RingHom& h) {
    std::vector<bool> hit(h.target->size(), false);
    for (Elem e : h.map) {
        if (hit[e]) return false;
        hit[e] = true;
    }
    return true;
}

inline bool is_surjective(const RingHom& h) {
    std::vector<bool> hit(h.target->size(), false);
    std::size_t count = 0;
    for (Elem e : h.map)
        if (!hit[e]) {
            hit[e] = true;
            ++count;
        }
    return count == h.target->size();
}

inline bool is_isomorphism(const RingHom& h) {
    return h.source->size() == h.target->size() && is_injective(h) && check_homomorphism(h).ok;
}

inline RingHom identity_hom(const RingRef& r) {
    RingHom h{r, r, std::vector<Elem>(r->size())};
    for (Elem a = 0; a < r->size(); ++a) h.map[a] = a;
    return h;
}

inline RingHom compose(const RingHom& second, const RingHom& first) {
    RingHom h{first.source, second.target, std::vector<Elem>(first.map.size())};
    for (std::size_t a = 0; a < first.map.size(); ++a) h.map[a] = second.map[first.map[a]];
    return h;
}

namespace detail {

struct IsoSearch {
    const RingTable& s;
    const RingTable& t;
    static constexpr Elem kUnset = ~Elem{0};

    // Invariants an isomorphism must preserve, used to filter candidate images.
    std::vector<std::size_t> signature(const RingTable& r, Elem a) const {
        std::size_t add_order = 1;
        for (Elem x = a; x != r.zero(); x = r.add(x, a)) ++add_order;
        if (a == r.zero()) add_order = 1;
        const auto nil = nilpotency_index(r, a);
        return {add_order, nil ? *nil : 0, is_idempotent(r, a) ? 1u : 0u, is_central(r, a) ? 1u : 0u,
                is_unit(r, a) ? 1u : 0u};
    }

    bool propagate(std::vector<Elem>& fwd, std::vector<Elem>& back) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (Elem a = 0; a < s.size(); ++a) {
                if (fwd[a] == kUnset) continue;
                for (Elem b = 0; b < s.size(); ++b) {
                    if (fwd[b] == kUnset) continue;
                    const Elem pairs[2][2] = {{s.add(a, b), t.add(fwd[a], fwd[b])},
                                              {s.mul(a, b), t.mul(fwd[a], fwd[b])}};
                    for (const auto& p : pairs) {
                        const Elem src = p[0], dst = p[1];
                        if (fwd[src] == kUnset) {
                            if (back[dst] != kUnset) return false;
                            fwd[src] = dst;
                            back[dst] = src;
                            changed = true;
                        } else if (fwd[src] != dst) {
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    }

    bool search(std::vector<Elem>& fwd, std::vector<Elem>& back,
                const std::vector<std::vector<std::size_t>>& ssig,
                const std::vector<std::vector<std::size_t>>& tsig) const {
        Elem next = kUnset;
        for (Elem a = 0; a < s.size(); ++a)
            if (fwd[a] == kUnset) {
                next = a;
                break;
            }
        if (next == kUnset) return true;
        for (Elem c = 0; c < t.size(); ++c) {
            if (back[c] != kUnset || ssig[next] != tsig[c]) continue;
            auto f2 = fwd;
            auto b2 = back;
            f2[next] = c;
            b2[c] = next;
            if (propagate(f2, b2) && search(f2, b2, ssig, tsig)) {
                fwd = std::move(f2);
                back = std::move(b2);
                return true;
            }
        }
        return false;
    }
};

}  // namespace detail

/// Backtracking search for a ring isomorphism. Intended for small rings.
inline std::optional<RingHom> find_isomorphism(const RingRef& source, const RingRef& target) {
    if (source->size() != target->size()) return std::nullopt;
    detail::IsoSearch is{*source, *target};
    std::vector<std::vector<std::size_t>> ssig, tsig;
    for (Elem a = 0; a < source->size(); ++a) ssig.push_back(is.signature(*source, a));
    for (Elem a = 0; a < target->size(); ++a) tsig.push_back(is.signature(*target, a));
    std::vector<Elem> fwd(source->size(), detail::IsoSearch::kUnset);
    std::vector<Elem> back(target->size(), detail::IsoSearch::kUnset);
    fwd[source->zero()] = target->zero();
    back[target->zero()] = source->zero();
    if (fwd[source->one()] != detail::IsoSearch::kUnset || back[target->one()] != detail::IsoSearch::kUnset) {
        if (source->one() != source->zero() || target->one() != target->zero()) return std::nullopt;
    } else {
        fwd[source->one()] = target->one();
        back[target->one()] = source->one();
    }
    if (!is.propagate(fwd, back) || !is.search(fwd, back, ssig, tsig)) return std::nullopt;
    RingHom h{source, target, std::move(fwd)};
    if (!is_isomorphism(h)) return std::nullopt;
    return h;
}

}  // namespace ringlab
