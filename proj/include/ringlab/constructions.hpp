#pragma once

// Builders for every derived ring the workbench works with. Each returns a
// shared, immutable table; builders that come with a canonical map return it
// alongside.

#include <algorithm>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "ringlab/hom.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

namespace detail {

/// q^k, or CapExceeded when it passes kMaxRingSize.
inline std::size_t capped_power(std::size_t q, std::size_t k, const char* what) {
    std::size_t v = 1;
    for (std::size_t i = 0; i < k; ++i) {
        v *= q;
        if (v > kMaxRingSize)
            throw CapExceeded(std::string(what) + " would exceed " + std::to_string(kMaxRingSize) + " elements");
    }
    return v;
}

template <class Add, class Mul>
RingRef tabulate(std::size_t n, Add&& add, Mul&& mul, Elem zero, Elem one, std::vector<std::string> labels) {
    std::vector<Elem> at(n * n), mt(n * n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            at[a * n + b] = add(a, b);
            mt[a * n + b] = mul(a, b);
        }
    return std::make_shared<const RingTable>(n, std::move(at), std::move(mt), zero, one, std::move(labels));
}

inline std::string join_labels(const RingTable& base, std::span<const Elem> xs, const char* open,
                               const char* close) {
    std::string s = open;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k) s += ",";
        s += base.label(xs[k]);
    }
    return s + close;
}

inline std::string matrix_label(const RingTable& base, std::span<const Elem> grid, std::size_t n) {
    std::string s = "[";
    for (std::size_t i = 0; i < n; ++i) {
        if (i) s += ",";
        s += join_labels(base, grid.subspan(i * n, n), "[", "]");
    }
    return s + "]";
}

inline RingRef matrix_construction(std::size_t n, const RingRef& base, MatrixLayout::Shape shape) {
    if (n == 0) throw PreconditionError("matrix dimension must be positive");
    MatrixLayout layout;
    layout.shape = shape;
    layout.n = n;
    layout.base = base;
    if (shape == MatrixLayout::Shape::ConstantDiagonal) layout.positions.emplace_back(0, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const bool keep = shape == MatrixLayout::Shape::Full ||
                              (shape == MatrixLayout::Shape::UpperTriangular && i <= j) ||
                              (shape == MatrixLayout::Shape::ConstantDiagonal && i < j);
            if (keep) layout.positions.emplace_back(i, j);
        }
    const RingTable& r = *base;
    const std::size_t size = capped_power(r.size(), layout.positions.size(), "matrix construction");

    std::vector<std::vector<Elem>> grids(size);
    for (Elem x = 0; x < size; ++x) grids[x] = layout.entries(x);

    std::vector<Elem> scratch(n * n);
    auto add = [&](Elem a, Elem b) {
        for (std::size_t k = 0; k < n * n; ++k) scratch[k] = r.add(grids[a][k], grids[b][k]);
        return layout.encode(scratch);
    };
    auto mul = [&](Elem a, Elem b) {
        const auto& x = grids[a];
        const auto& y = grids[b];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Elem acc = r.zero();
                for (std::size_t k = 0; k < n; ++k) acc = r.add(acc, r.mul(x[i * n + k], y[k * n + j]));
                scratch[i * n + j] = acc;
            }
        return layout.encode(scratch);
    };
    std::vector<Elem> id(n * n, r.zero());
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = r.one();
    const Elem one = layout.encode(id);
    std::vector<Elem> zgrid(n * n, r.zero());
    const Elem zero = layout.encode(zgrid);

    std::vector<std::string> labels(size);
    for (Elem x = 0; x < size; ++x) labels[x] = matrix_label(r, grids[x], n);
    auto out = tabulate(size, add, mul, zero, one, std::move(labels));
    auto table = std::const_pointer_cast<RingTable>(out);
    table->set_matrix_layout(std::move(layout));
    return out;
}

/// Re-indexes the subset `members` (ascending, closed under the operations)
/// as a standalone ring with identity `one`.
inline RingRef restrict_to(const RingTable& r, const std::vector<Elem>& members, Elem one) {
    std::vector<Elem> pos(r.size(), ~Elem{0});
    for (Elem k = 0; k < members.size(); ++k) pos[members[k]] = k;
    auto idx = [&](Elem x) {
        if (pos[x] == ~Elem{0}) throw DefectError("subset is not closed under the ring operations");
        return pos[x];
    };
    std::vector<std::string> labels;
    for (Elem m : members) labels.push_back(r.label(m));
    return tabulate(
        members.size(), [&](Elem a, Elem b) { return idx(r.add(members[a], members[b])); },
        [&](Elem a, Elem b) { return idx(r.mul(members[a], members[b])); }, idx(r.zero()), idx(one),
        std::move(labels));
}

}  // namespace detail

/// Integers modulo n.
inline RingRef cyclic(std::size_t n) {
    if (n == 0) throw PreconditionError("modulus must be positive");
    if (n > kMaxRingSize) throw CapExceeded("Z/n would exceed " + std::to_string(kMaxRingSize) + " elements");
    return detail::tabulate(
        n, [n](Elem a, Elem b) { return static_cast<Elem>((a + b) % n); },
        [n](Elem a, Elem b) { return static_cast<Elem>((std::uint64_t{a} * b) % n); }, 0,
        static_cast<Elem>(1 % n), {});
}

/// Componentwise product; (r, s) is encoded as r·|S| + s.
inline RingRef direct_product(const RingRef& rp, const RingRef& sp) {
    const RingTable& r = *rp;
    const RingTable& s = *sp;
    if (r.size() * s.size() > kMaxRingSize) throw CapExceeded("direct product exceeds the size cap");
    const std::size_t q = s.size();
    const std::size_t n = r.size() * q;
    auto enc = [q](Elem a, Elem b) { return static_cast<Elem>(a * q + b); };
    std::vector<std::string> labels(n);
    for (Elem x = 0; x < n; ++x) labels[x] = "(" + r.label(x / q) + "," + s.label(x % q) + ")";
    return detail::tabulate(
        n, [&](Elem x, Elem y) { return enc(r.add(x / q, y / q), s.add(x % q, y % q)); },
        [&](Elem x, Elem y) { return enc(r.mul(x / q, y / q), s.mul(x % q, y % q)); }, enc(r.zero(), s.zero()),
        enc(r.one(), s.one()), std::move(labels));
}

inline RingRef matrix_ring(std::size_t n, const RingRef& base) {
    return detail::matrix_construction(n, base, MatrixLayout::Shape::Full);
}

inline RingRef upper_triangular(std::size_t n, const RingRef& base) {
    return detail::matrix_construction(n, base, MatrixLayout::Shape::UpperTriangular);
}

/// Upper triangular matrices whose diagonal entries all coincide.
inline RingRef constant_diagonal(std::size_t n, const RingRef& base) {
    return detail::matrix_construction(n, base, MatrixLayout::Shape::ConstantDiagonal);
}

/// Pairs (r, m) with (r1, m1)(r2, m2) = (r1 r2, r1 m2 + m1 r2); encoded r·|R| + m.
inline RingRef trivial_extension(const RingRef& base) {
    const RingTable& r = *base;
    const std::size_t q = r.size();
    if (q * q > kMaxRingSize) throw CapExceeded("trivial extension exceeds the size cap");
    auto enc = [q](Elem a, Elem b) { return static_cast<Elem>(a * q + b); };
    std::vector<std::string> labels(q * q);
    for (Elem x = 0; x < q * q; ++x) labels[x] = "(" + r.label(x / q) + "," + r.label(x % q) + ")";
    return detail::tabulate(
        q * q, [&](Elem x, Elem y) { return enc(r.add(x / q, y / q), r.add(x % q, y % q)); },
        [&](Elem x, Elem y) {
            const Elem r1 = x / q, m1 = x % q, r2 = y / q, m2 = y % q;
            return enc(r.mul(r1, r2), r.add(r.mul(r1, m2), r.mul(m1, r2)));
        },
        enc(r.zero(), r.zero()), enc(r.one(), r.zero()), std::move(labels));
}

namespace detail {

inline std::vector<Elem> digits(Elem x, std::size_t q, std::size_t len) {
    std::vector<Elem> d(len);
    for (std::size_t k = len; k-- > 0;) {
        d[k] = static_cast<Elem>(x % q);
        x /= static_cast<Elem>(q);
    }
    return d;
}

inline Elem undigits(std::span<const Elem> d, std::size_t q) {
    std::size_t x = 0;
    for (Elem v : d) x = x * q + v;
    return static_cast<Elem>(x);
}

}  // namespace detail

/// R[x]/(x^n): coefficient vectors (a0, ..., a_{n-1}), a0 the most significant digit.
inline RingRef truncated_poly_ring(const RingRef& base, std::size_t n) {
    if (n == 0) throw PreconditionError("truncation degree must be positive");
    const RingTable& r = *base;
    const std::size_t q = r.size();
    const std::size_t size = detail::capped_power(q, n, "truncated polynomial ring");
    std::vector<std::vector<Elem>> coeffs(size);
    std::vector<std::string> labels(size);
    for (Elem x = 0; x < size; ++x) {
        coeffs[x] = detail::digits(x, q, n);
        labels[x] = detail::join_labels(r, coeffs[x], "(", ")");
    }
    std::vector<Elem> scratch(n);
    auto add = [&](Elem a, Elem b) {
        for (std::size_t k = 0; k < n; ++k) scratch[k] = r.add(coeffs[a][k], coeffs[b][k]);
        return detail::undigits(scratch, q);
    };
    auto mul = [&](Elem a, Elem b) {
        std::fill(scratch.begin(), scratch.end(), r.zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; i + j < n; ++j)
                scratch[i + j] = r.add(scratch[i + j], r.mul(coeffs[a][i], coeffs[b][j]));
        return detail::undigits(scratch, q);
    };
    std::vector<Elem> unit(n, r.zero());
    unit[0] = r.one();
    std::vector<Elem> zero(n, r.zero());
    return detail::tabulate(size, add, mul, detail::undigits(zero, q), detail::undigits(unit, q),
                            std::move(labels));
}

/// The map (a0, ..., a_{n-1}) ↦ upper triangular Toeplitz matrix with a_k on the
/// k-th superdiagonal, from truncated_poly_ring(base, n) into upper_triangular(n, base).
inline RingHom toeplitz_iso(const RingRef& base, std::size_t n) {
    RingRef source = truncated_poly_ring(base, n);
    RingRef target = upper_triangular(n, base);
    const auto& layout = *target->matrix_layout();
    RingHom h{source, target, std::vector<Elem>(source->size())};
    std::vector<Elem> grid(n * n);
    for (Elem x = 0; x < source->size(); ++x) {
        const auto c = detail::digits(x, base->size(), n);
        std::fill(grid.begin(), grid.end(), base->zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) grid[i * n + j] = c[j - i];
        h.map[x] = layout.encode(grid);
    }
    return h;
}

/// Quotient ring together with the canonical surjection.
struct Quotient {
    RingRef ring;
    RingHom projection;
    Ideal ideal;
};

/// R/I for I the ideal generated by `gens`. Cosets are indexed in order of
/// their least member; I = R yields the one-element ring.
inline Quotient ideal_quotient(const RingRef& rp, std::span<const Elem> gens) {
    const RingTable& r = *rp;
    for (Elem g : gens)
        if (g >= r.size()) throw PreconditionError("generator index out of range");
    Ideal ideal = ideal_closure(r, gens);
    std::vector<Elem> rep(r.size());
    std::vector<Elem> reps;
    for (Elem x = 0; x < r.size(); ++x) {
        Elem least = x;
        for (Elem i : ideal.members) least = std::min(least, r.add(x, i));
        rep[x] = least;
        if (least == x) reps.push_back(x);
    }
    std::vector<Elem> coset(r.size());
    for (Elem x = 0; x < r.size(); ++x)
        coset[x] = static_cast<Elem>(std::lower_bound(reps.begin(), reps.end(), rep[x]) - reps.begin());
    std::vector<std::string> labels;
    for (Elem x : reps) labels.push_back(ideal.is_zero() ? r.label(x) : r.label(x) + "+I");
    const std::size_t n = reps.size();
    RingRef q = detail::tabulate(
        n, [&](Elem a, Elem b) { return coset[r.add(reps[a], reps[b])]; },
        [&](Elem a, Elem b) { return coset[r.mul(reps[a], reps[b])]; }, coset[r.zero()], coset[r.one()],
        std::move(labels));
    return {q, RingHom{rp, q, coset}, std::move(ideal)};
}

/// eR for a central idempotent e, re-indexed with identity e.
struct Corner {
    RingRef ring;
    RingHom inclusion;   // eR → R, preserves + and · but sends the identity e to e
    RingHom projection;  // R → eR, r ↦ er (a unital ring homomorphism)
};

inline Corner corner(const RingRef& rp, Elem e) {
    const RingTable& r = *rp;
    if (e >= r.size()) throw PreconditionError("corner element index out of range");
    if (!is_idempotent(r, e)) throw PreconditionError("corner requires an idempotent element: e*e != e");
    if (!is_central(r, e)) throw PreconditionError("corner requires a central element: e is not central");
    std::vector<Elem> members;
    for (Elem x = 0; x < r.size(); ++x) members.push_back(r.mul(e, x));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    RingRef c = detail::restrict_to(r, members, e);
    RingHom inc{c, rp, members};
    RingHom proj{rp, c, std::vector<Elem>(r.size())};
    for (Elem x = 0; x < r.size(); ++x)
        proj.map[x] = static_cast<Elem>(std::lower_bound(members.begin(), members.end(), r.mul(e, x)) -
                                        members.begin());
    return {c, std::move(inc), std::move(proj)};
}

/// Complement idempotent 1 - e.
inline Elem complement_idempotent(const RingTable& r, Elem e) { return r.sub(r.one(), e); }

/// S⁻¹R for a set S of central regular elements. In a finite ring such
/// elements are units, so the localization is R itself and the canonical
/// map is the identity; the hypotheses are still checked.
struct Localization {
    RingRef ring;
    RingHom canonical;
    std::vector<Elem> denominators;  // multiplicative closure of S ∪ {1}, ascending

    /// The fraction u⁻¹a.
    Elem fraction(Elem u, Elem a) const {
        if (!std::binary_search(denominators.begin(), denominators.end(), u))
            throw PreconditionError("denominator not in the multiplicative set");
        const auto inv = inverse(*ring, u);
        if (!inv) throw DefectError("central regular element without inverse in a finite ring");
        return ring->mul(*inv, a);
    }
};

inline Localization localization(const RingRef& rp, std::span<const Elem> s) {
    const RingTable& r = *rp;
    for (Elem u : s) {
        if (u >= r.size()) throw PreconditionError("denominator index out of range");
        if (!is_central(r, u)) throw PreconditionError("denominator " + r.label(u) + " is not central");
        if (!is_regular(r, u)) throw PreconditionError("denominator " + r.label(u) + " is not regular");
    }
    std::vector<bool> in(r.size(), false);
    std::vector<Elem> work{r.one()};
    in[r.one()] = true;
    for (Elem u : s)
        if (!in[u]) {
            in[u] = true;
            work.push_back(u);
        }
    std::vector<Elem> all = work;
    while (!work.empty()) {
        const Elem x = work.back();
        work.pop_back();
        for (std::size_t k = 0; k < all.size(); ++k) {
            const Elem p = r.mul(x, all[k]);
            if (!in[p]) {
                in[p] = true;
                all.push_back(p);
                work.push_back(p);
            }
        }
    }
    std::sort(all.begin(), all.end());
    return {rp, identity_hom(rp), std::move(all)};
}

struct Subring {
    RingRef ring;
    RingHom inclusion;
};

/// Closure of gens ∪ {0, 1} under addition, negation and multiplication.
inline Subring subring_generated(const RingRef& rp, std::span<const Elem> gens) {
    const RingTable& r = *rp;
    std::vector<bool> in(r.size(), false);
    std::vector<Elem> all, work;
    auto push = [&](Elem x) {
        if (!in[x]) {
            in[x] = true;
            all.push_back(x);
            work.push_back(x);
        }
    };
    push(r.zero());
    push(r.one());
    for (Elem g : gens) {
        if (g >= r.size()) throw PreconditionError("generator index out of range");
        push(g);
    }
    while (!work.empty()) {
        const Elem x = work.back();
        work.pop_back();
        push(r.neg(x));
        for (std::size_t k = 0; k < all.size(); ++k) {
            const Elem y = all[k];
            push(r.add(x, y));
            push(r.mul(x, y));
            push(r.mul(y, x));
        }
    }
    std::sort(all.begin(), all.end());
    RingRef sub = detail::restrict_to(r, all, r.one());
    return {sub, RingHom{sub, rp, all}};
}

/// Reads off the p-th diagonal entry (1-based) of an upper triangular matrix ring.
inline RingHom diagonal_projection(const RingRef& tp, std::size_t p) {
    const auto& layout = tp->matrix_layout();
    if (!layout || layout->shape != MatrixLayout::Shape::UpperTriangular)
        throw PreconditionError("diagonal projection needs an upper triangular matrix ring");
    if (p < 1 || p > layout->n) throw PreconditionError("diagonal position out of range");
    RingHom h{tp, layout->base, std::vector<Elem>(tp->size())};
    const std::size_t n = layout->n;
    for (Elem x = 0; x < tp->size(); ++x) h.map[x] = layout->entries(x)[(p - 1) * n + (p - 1)];
    return h;
}

/// r ↦ r placed at diagonal position p (1-based), zeros elsewhere. Additive
/// and multiplicative but not unital.
inline RingHom diagonal_entry_embedding(const RingRef& tp, std::size_t p) {
    const auto& layout = tp->matrix_layout();
    if (!layout || layout->shape != MatrixLayout::Shape::UpperTriangular)
        throw PreconditionError("diagonal embedding needs an upper triangular matrix ring");
    if (p < 1 || p > layout->n) throw PreconditionError("diagonal position out of range");
    const std::size_t n = layout->n;
    RingHom h{layout->base, tp, std::vector<Elem>(layout->base->size())};
    std::vector<Elem> grid(n * n, layout->base->zero());
    for (Elem r = 0; r < layout->base->size(); ++r) {
        grid[(p - 1) * n + (p - 1)] = r;
        h.map[r] = layout->encode(grid);
    }
    return h;
}

/// The map (a, b) ↦ [[a, b], [0, a]] from trivial_extension(R) to constant_diagonal(2, R).
inline RingHom trivial_extension_to_constant_diagonal(const RingRef& trivext, const RingRef& cd) {
    const auto& layout = cd->matrix_layout();
    if (!layout || layout->shape != MatrixLayout::Shape::ConstantDiagonal || layout->n != 2)
        throw PreconditionError("target must be constant_diagonal(2, R)");
    const std::size_t q = layout->base->size();
    if (trivext->size() != q * q) throw PreconditionError("size mismatch");
    RingHom h{trivext, cd, std::vector<Elem>(trivext->size())};
    for (Elem x = 0; x < trivext->size(); ++x) {
        const Elem a = static_cast<Elem>(x / q), b = static_cast<Elem>(x % q);
        const std::vector<Elem> grid{a, b, layout->base->zero(), a};
        h.map[x] = layout->encode(grid);
    }
    return h;
}

}  // namespace ringlab
