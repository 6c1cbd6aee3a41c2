#pragma once

// Degree-bounded deciders for the Armendariz family. Every property here
// has the shape "for all f, g with fg in H, every a_i b_j lies in T":
//
//   property    hypothesis H        target T
//   armendariz  fg = 0              {0}
//   almost      fg = 0              P(R)
//   weak        fg = 0              nil(R)
//   nil         fg ∈ nil(R)[x]      nil(R)
//
// A refutation is a concrete pair plus the first offending (i, j). Failing
// to find one at bound D is reported as HoldsUpTo(D), never as a proof.

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "ringlab/pair_search.hpp"
#include "ringlab/poly.hpp"
#include "ringlab/radicals.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

enum class Property { Armendariz, Almost, Weak, Nil, Semicommutative, Reduced, TwoPrimal };

inline std::string_view property_name(Property p) {
    switch (p) {
        case Property::Armendariz: return "armendariz";
        case Property::Almost: return "almost";
        case Property::Weak: return "weak";
        case Property::Nil: return "nil";
        case Property::Semicommutative: return "semicommutative";
        case Property::Reduced: return "reduced";
        case Property::TwoPrimal: return "2primal";
    }
    return "?";
}

inline std::optional<Property> parse_property(std::string_view s) {
    for (Property p : {Property::Armendariz, Property::Almost, Property::Weak, Property::Nil,
                       Property::Semicommutative, Property::Reduced, Property::TwoPrimal})
        if (property_name(p) == s) return p;
    return std::nullopt;
}

/// True for the properties decided by polynomial search.
inline bool is_polynomial_property(Property p) {
    return p == Property::Armendariz || p == Property::Almost || p == Property::Weak || p == Property::Nil;
}

enum class Condition { Nonzero, NotNilpotent, NotInPrimeRadical };

inline std::string_view condition_name(Condition c) {
    switch (c) {
        case Condition::Nonzero: return "nonzero";
        case Condition::NotNilpotent: return "not-nilpotent";
        case Condition::NotInPrimeRadical: return "not-in-prime-radical";
    }
    return "?";
}

inline Condition violated_condition(Property p) {
    switch (p) {
        case Property::Armendariz: return Condition::Nonzero;
        case Property::Almost: return Condition::NotInPrimeRadical;
        default: return Condition::NotNilpotent;
    }
}

/// P(R) and nil(R), computed once per ring and shared by every check on it.
struct RingAnalysis {
    RingRef ring;
    Ideal prime_radical;
    Ideal nil;
    Ideal zero;

    const Ideal& target(Property p) const {
        switch (p) {
            case Property::Armendariz: return zero;
            case Property::Almost: return prime_radical;
            default: return nil;
        }
    }
    const Ideal& hypothesis(Property p) const { return p == Property::Nil ? nil : zero; }
};

inline RingAnalysis analyze(const RingRef& r) {
    return {r, prime_radical_fixpoint(*r), nil_elements(*r), zero_ideal(*r)};
}

struct Witness {
    Property property = Property::Almost;
    BoundedPoly f;
    BoundedPoly g;
    std::size_t i = 0;
    std::size_t j = 0;
    Elem product = 0;
    Condition violated = Condition::Nonzero;
    /// Laurent witnesses store shifted polynomials; slot k is exponent k - offset.
    long exponent_offset = 0;

    bool operator==(const Witness&) const = default;
};

/// A pair in R[x][y] whose y-coefficient product f_i(x) g_j(x) has a
/// coefficient outside P(R).
struct BivariateWitness {
    BivariatePoly p;
    BivariatePoly q;
    std::size_t i = 0;
    std::size_t j = 0;
    BoundedPoly product;      // f_i(x) g_j(x)
    std::size_t coefficient = 0;
    Elem value = 0;

    bool operator==(const BivariateWitness&) const = default;
};

struct Bounds {
    enum class Shape { None, Univariate, Bivariate, Laurent };
    Shape shape = Shape::None;
    std::size_t degree = 0;  // univariate D, or Laurent window W
    std::size_t dx = 0;
    std::size_t dy = 0;
    bool operator==(const Bounds&) const = default;
};

struct PropertyVerdict {
    enum class Kind { Exact, Refuted, HoldsUpTo, Inconclusive };
    Property property = Property::Almost;
    Kind kind = Kind::Exact;
    bool exact_value = true;
    Bounds bounds;
    std::optional<Witness> witness;
    std::optional<BivariateWitness> bivariate_witness;
    SearchStats stats;
    double elapsed_ms = 0;

    bool refuted() const { return kind == Kind::Refuted || (kind == Kind::Exact && !exact_value); }
    bool holds() const { return kind == Kind::HoldsUpTo || (kind == Kind::Exact && exact_value); }
};

inline std::string_view kind_name(PropertyVerdict::Kind k) {
    switch (k) {
        case PropertyVerdict::Kind::Exact: return "Exact";
        case PropertyVerdict::Kind::Refuted: return "Refuted";
        case PropertyVerdict::Kind::HoldsUpTo: return "HoldsUpTo";
        case PropertyVerdict::Kind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

inline constexpr std::size_t kDefaultSearchRingCap = 256;

struct CheckOptions {
    SearchOptions search;
    std::size_t max_ring_size = kDefaultSearchRingCap;
};

namespace detail {

inline std::vector<bool> mask_of(const Ideal& i) { return i.mask; }

inline void require_searchable(const RingTable& r, const CheckOptions& opt) {
    if (r.size() > opt.max_ring_size)
        throw CapExceeded("polynomial search is capped at rings of " + std::to_string(opt.max_ring_size) +
                          " elements");
}

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Least (i, j) with f_i g_j outside `target`, over dense coefficient vectors.
inline std::optional<std::pair<std::size_t, std::size_t>> first_violation(const RingTable& r,
                                                                          std::span<const Elem> f,
                                                                          std::span<const Elem> g,
                                                                          const Ideal& target) {
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (!target.contains(r.mul(f[i], g[j]))) return std::pair{i, j};
    return std::nullopt;
}

inline PropertyVerdict trivial_verdict(Property p, Bounds b) {
    PropertyVerdict v;
    v.property = p;
    v.kind = PropertyVerdict::Kind::Exact;
    v.exact_value = true;
    v.bounds = b;
    return v;
}

}  // namespace detail

/// Whether (f, g) satisfies the hypothesis of `p` and has some a_i b_j outside
/// its target; returns the least such (i, j).
inline std::optional<std::pair<std::size_t, std::size_t>> refutes(const RingAnalysis& a, const BoundedPoly& f,
                                                                   const BoundedPoly& g, Property p) {
    const RingTable& r = *a.ring;
    const BoundedPoly h = poly_mul(r, f, g);
    const Ideal& hyp = a.hypothesis(p);
    for (Elem c : h.coeffs)
        if (!hyp.contains(c)) return std::nullopt;
    return detail::first_violation(r, f.coeffs, g.coeffs, a.target(p));
}

/// Decides a polynomial property at degree bound D.
inline PropertyVerdict check_property(const RingAnalysis& a, Property p, std::size_t degree,
                                      const CheckOptions& opt = {}) {
    if (!is_polynomial_property(p)) throw PreconditionError("check_property handles polynomial properties only");
    const Bounds bounds{Bounds::Shape::Univariate, degree, 0, 0};
    const RingTable& r = *a.ring;
    if (r.is_zero_ring()) return detail::trivial_verdict(p, bounds);
    detail::require_searchable(r, opt);
    detail::Stopwatch clock;

    const Ideal& target = a.target(p);
    PairSearch search(r, PairSpace::univariate(degree), detail::mask_of(a.hypothesis(p)));
    auto hit = [&](const std::vector<Elem>& f, const std::vector<Elem>& g) {
        return detail::first_violation(r, f, g, target).has_value();
    };
    SearchResult res = search.find_first(hit, opt.search);

    PropertyVerdict v;
    v.property = p;
    v.bounds = bounds;
    v.stats = res.stats;
    if (res.first_hit) {
        const auto [i, j] = *detail::first_violation(r, res.first_hit->f, res.first_hit->g, target);
        v.kind = PropertyVerdict::Kind::Refuted;
        v.exact_value = false;
        v.witness = Witness{p, BoundedPoly{res.first_hit->f}, BoundedPoly{res.first_hit->g}, i, j,
                            r.mul(res.first_hit->f[i], res.first_hit->g[j]), violated_condition(p), 0};
    } else {
        v.kind = res.stats.sampled ? PropertyVerdict::Kind::Inconclusive : PropertyVerdict::Kind::HoldsUpTo;
    }
    v.elapsed_ms = clock.ms();
    return v;
}

inline PropertyVerdict check_armendariz(const RingAnalysis& a, std::size_t d, const CheckOptions& o = {}) {
    return check_property(a, Property::Armendariz, d, o);
}
inline PropertyVerdict check_weak_armendariz(const RingAnalysis& a, std::size_t d, const CheckOptions& o = {}) {
    return check_property(a, Property::Weak, d, o);
}
inline PropertyVerdict check_almost_armendariz(const RingAnalysis& a, std::size_t d, const CheckOptions& o = {}) {
    return check_property(a, Property::Almost, d, o);
}
inline PropertyVerdict check_nil_armendariz(const RingAnalysis& a, std::size_t d, const CheckOptions& o = {}) {
    return check_property(a, Property::Nil, d, o);
}

/// Degree-free properties, decided exactly.
inline PropertyVerdict check_structural(const RingAnalysis& a, Property p) {
    PropertyVerdict v;
    v.property = p;
    v.kind = PropertyVerdict::Kind::Exact;
    detail::Stopwatch clock;
    const RingTable& r = *a.ring;
    switch (p) {
        case Property::Semicommutative: v.exact_value = r.is_zero_ring() || is_semicommutative(r); break;
        case Property::Reduced: v.exact_value = a.nil.is_zero(); break;
        case Property::TwoPrimal: v.exact_value = a.prime_radical == a.nil; break;
        default: throw PreconditionError("check_structural handles degree-free properties only");
    }
    v.elapsed_ms = clock.ms();
    return v;
}

/// Almost Armendariz for R[x]: pairs p(y), q(y) in R[x][y] with deg_x ≤ dx,
/// deg_y ≤ dy and pq = 0; refuted when some f_i(x) g_j(x) has a coefficient
/// outside P(R).
inline PropertyVerdict check_almost_bivariate(const RingAnalysis& a, std::size_t dx, std::size_t dy,
                                              const CheckOptions& opt = {}) {
    const Bounds bounds{Bounds::Shape::Bivariate, 0, dx, dy};
    const RingTable& r = *a.ring;
    if (r.is_zero_ring()) return detail::trivial_verdict(Property::Almost, bounds);
    detail::require_searchable(r, opt);
    detail::Stopwatch clock;

    const PairSpace space = PairSpace::bivariate(dx, dy);
    auto to_bivariate = [&](const std::vector<Elem>& vals) { return BivariatePoly{dx, dy, vals}; };
    auto violation = [&](const BivariatePoly& p, const BivariatePoly& q)
        -> std::optional<std::tuple<std::size_t, std::size_t, BoundedPoly, std::size_t>> {
        for (std::size_t i = 0; i <= dy; ++i)
            for (std::size_t j = 0; j <= dy; ++j) {
                BoundedPoly prod = poly_mul(r, p.y_coeff(i), q.y_coeff(j));
                for (std::size_t c = 0; c < prod.coeffs.size(); ++c)
                    if (!a.prime_radical.contains(prod.coeffs[c])) return std::tuple{i, j, prod, c};
            }
        return std::nullopt;
    };
    PairSearch search(r, space, detail::mask_of(a.zero));
    auto hit = [&](const std::vector<Elem>& f, const std::vector<Elem>& g) {
        return violation(to_bivariate(f), to_bivariate(g)).has_value();
    };
    SearchResult res = search.find_first(hit, opt.search);

    PropertyVerdict v;
    v.property = Property::Almost;
    v.bounds = bounds;
    v.stats = res.stats;
    if (res.first_hit) {
        BivariatePoly p = to_bivariate(res.first_hit->f), q = to_bivariate(res.first_hit->g);
        auto [i, j, prod, c] = *violation(p, q);
        const Elem value = prod.coeffs[c];
        v.kind = PropertyVerdict::Kind::Refuted;
        v.exact_value = false;
        v.bivariate_witness = BivariateWitness{std::move(p), std::move(q), i, j, std::move(prod), c, value};
    } else {
        v.kind = res.stats.sampled ? PropertyVerdict::Kind::Inconclusive : PropertyVerdict::Kind::HoldsUpTo;
    }
    v.elapsed_ms = clock.ms();
    return v;
}

/// Almost Armendariz for R[x, x⁻¹] with exponents in -W..W. Multiplying both
/// factors by the central unit x^W reduces to polynomials of degree ≤ 2W.
inline PropertyVerdict check_almost_laurent(const RingAnalysis& a, std::size_t window,
                                            const CheckOptions& opt = {}) {
    const Bounds bounds{Bounds::Shape::Laurent, window, 0, 0};
    PropertyVerdict v = check_property(a, Property::Almost, 2 * window, opt);
    v.bounds = bounds;
    if (v.witness) v.witness->exponent_offset = static_cast<long>(window);
    return v;
}

/// Transports a shifted Laurent witness back to R[x, x⁻¹].
inline std::pair<LaurentPoly, LaurentPoly> laurent_pair(const Witness& w) {
    const auto window = static_cast<std::size_t>(w.exponent_offset);
    return {LaurentPoly{window, w.f.coeffs}, LaurentPoly{window, w.g.coeffs}};
}

/// Re-derives a witness from the raw tables: the hypothesis on fg, the
/// stored product, and the violated condition. Prime radical membership is
/// re-decided through nilpotency of the principal ideal of the product.
inline bool validate_witness(const RingTable& r, const Witness& w) {
    if (w.i >= w.f.coeffs.size() || w.j >= w.g.coeffs.size()) return false;
    for (Elem c : w.f.coeffs)
        if (c >= r.size()) return false;
    for (Elem c : w.g.coeffs)
        if (c >= r.size()) return false;
    const BoundedPoly h = poly_mul(r, w.f, w.g);
    for (Elem c : h.coeffs) {
        const bool ok = w.property == Property::Nil ? is_nilpotent_element(r, c) : c == r.zero();
        if (!ok) return false;
    }
    if (r.mul(w.f.coeffs[w.i], w.g.coeffs[w.j]) != w.product) return false;
    switch (w.violated) {
        case Condition::Nonzero: return w.product != r.zero();
        case Condition::NotNilpotent: return !is_nilpotent_element(r, w.product);
        case Condition::NotInPrimeRadical:
            return !is_nilpotent_ideal(r, ideal_closure(r, std::span<const Elem>(&w.product, 1)));
    }
    return false;
}

inline bool validate_witness(const RingTable& r, const BivariateWitness& w) {
    if (w.p.dx != w.q.dx || w.p.dy != w.q.dy) return false;
    if (!is_zero(r, bivariate_mul(r, w.p, w.q))) return false;
    if (w.i > w.p.dy || w.j > w.q.dy) return false;
    const BoundedPoly prod = poly_mul(r, w.p.y_coeff(w.i), w.q.y_coeff(w.j));
    if (!(prod == w.product) || w.coefficient >= prod.coeffs.size() || prod.coeffs[w.coefficient] != w.value)
        return false;
    return !is_nilpotent_ideal(r, ideal_closure(r, std::span<const Elem>(&w.value, 1)));
}

/// Re-reads a witness's pair against another property: the same pair must
/// satisfy that property's hypothesis and violate its target at some (i, j).
inline std::optional<Witness> replay(const RingAnalysis& a, const Witness& w, Property as) {
    const auto ij = refutes(a, w.f, w.g, as);
    if (!ij) return std::nullopt;
    Witness out = w;
    out.property = as;
    out.i = ij->first;
    out.j = ij->second;
    out.product = a.ring->mul(w.f.coeffs[out.i], w.g.coeffs[out.j]);
    out.violated = violated_condition(as);
    return out;
}

/// Whether `weaker` is implied by `stronger` at the level of single pairs,
/// i.e. every pair refuting `weaker` also refutes `stronger`.
inline bool pair_level_weaker(Property weaker, Property stronger) {
    auto rank = [](Property p) {
        switch (p) {
            case Property::Armendariz: return 0;
            case Property::Almost: return 1;
            case Property::Weak: return 2;
            default: return -1;
        }
    };
    if (weaker == Property::Weak && stronger == Property::Nil) return true;
    const int a = rank(weaker), b = rank(stronger);
    return a >= 0 && b >= 0 && a > b;
}

/// A pair refuting `to` that does not refute the weaker property `from`.
inline std::optional<Witness> find_separating_witness(const RingAnalysis& a, std::size_t degree, Property from,
                                                      Property to, const CheckOptions& opt = {}) {
    if (!pair_level_weaker(from, to))
        throw PreconditionError(std::string(property_name(from)) + " is not strictly weaker than " +
                                std::string(property_name(to)));
    const RingTable& r = *a.ring;
    if (r.is_zero_ring()) return std::nullopt;
    detail::require_searchable(r, opt);
    PairSearch search(r, PairSpace::univariate(degree), detail::mask_of(a.hypothesis(to)));
    auto hit = [&](const std::vector<Elem>& f, const std::vector<Elem>& g) {
        const BoundedPoly fp{f}, gp{g};
        return refutes(a, fp, gp, to).has_value() && !refutes(a, fp, gp, from).has_value();
    };
    SearchResult res = search.find_first(hit, opt.search);
    if (!res.first_hit) return std::nullopt;
    const BoundedPoly fp{res.first_hit->f}, gp{res.first_hit->g};
    const auto [i, j] = *refutes(a, fp, gp, to);
    return Witness{to, fp, gp, i, j, r.mul(fp.coeffs[i], gp.coeffs[j]), violated_condition(to), 0};
}

/// Dispatches any property: polynomial ones at degree D, others exactly.
inline PropertyVerdict check(const RingAnalysis& a, Property p, std::size_t degree, const CheckOptions& opt = {}) {
    return is_polynomial_property(p) ? check_property(a, p, degree, opt) : check_structural(a, p);
}

}  // namespace ringlab
