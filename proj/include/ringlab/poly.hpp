#pragma once

// Bounded-degree polynomials over a ring table. Coefficient vectors are
// dense; the length fixes a degree bound, and trailing zeros are allowed.

#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// Σ coeffs[i] x^i with i ≤ coeffs.size() - 1.
struct BoundedPoly {
    std::vector<Elem> coeffs;

    std::size_t bound() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    bool operator==(const BoundedPoly&) const = default;
};

inline void check_coefficients(const RingTable& r, const std::vector<Elem>& c) {
    if (c.empty()) throw StructuralError("polynomial needs at least one coefficient slot");
    for (Elem e : c)
        if (e >= r.size()) throw StructuralError("polynomial coefficient is not an element of the ring");
}

inline bool is_zero(const RingTable& r, const BoundedPoly& f) {
    for (Elem c : f.coeffs)
        if (c != r.zero()) return false;
    return true;
}

/// Convolution; the result has len(f) + len(g) - 1 slots.
inline BoundedPoly poly_mul(const RingTable& r, const BoundedPoly& f, const BoundedPoly& g) {
    check_coefficients(r, f.coeffs);
    check_coefficients(r, g.coeffs);
    BoundedPoly h{std::vector<Elem>(f.coeffs.size() + g.coeffs.size() - 1, r.zero())};
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (f.coeffs[i] == r.zero()) continue;
        for (std::size_t j = 0; j < g.coeffs.size(); ++j)
            h.coeffs[i + j] = r.add(h.coeffs[i + j], r.mul(f.coeffs[i], g.coeffs[j]));
    }
    return h;
}

/// "a0 + a1*x + a2*x^2" with every slot printed, using element labels.
inline std::string to_string(const RingTable& r, const BoundedPoly& f, const char* var = "x") {
    std::string s;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (i) s += " + ";
        s += r.label(f.coeffs[i]);
        if (i == 1) s += std::string("*") + var;
        if (i > 1) s += std::string("*") + var + "^" + std::to_string(i);
    }
    return s;
}

/// Σ_i f_i(x) y^i with deg_x f_i ≤ dx and i ≤ dy. coeffs[i*(dx+1) + c] is
/// the coefficient of x^c y^i.
struct BivariatePoly {
    std::size_t dx = 0;
    std::size_t dy = 0;
    std::vector<Elem> coeffs;

    Elem at(std::size_t i, std::size_t c) const { return coeffs[i * (dx + 1) + c]; }
    Elem& at(std::size_t i, std::size_t c) { return coeffs[i * (dx + 1) + c]; }
    /// f_i(x).
    BoundedPoly y_coeff(std::size_t i) const {
        return BoundedPoly{std::vector<Elem>(coeffs.begin() + static_cast<std::ptrdiff_t>(i * (dx + 1)),
                                             coeffs.begin() + static_cast<std::ptrdiff_t>((i + 1) * (dx + 1)))};
    }
    bool operator==(const BivariatePoly&) const = default;

    static BivariatePoly zero(const RingTable& r, std::size_t dx, std::size_t dy) {
        return {dx, dy, std::vector<Elem>((dx + 1) * (dy + 1), r.zero())};
    }
};

inline BivariatePoly bivariate_mul(const RingTable& r, const BivariatePoly& p, const BivariatePoly& q) {
    check_coefficients(r, p.coeffs);
    check_coefficients(r, q.coeffs);
    BivariatePoly h = BivariatePoly::zero(r, p.dx + q.dx, p.dy + q.dy);
    for (std::size_t i = 0; i <= p.dy; ++i)
        for (std::size_t c = 0; c <= p.dx; ++c) {
            const Elem a = p.at(i, c);
            if (a == r.zero()) continue;
            for (std::size_t j = 0; j <= q.dy; ++j)
                for (std::size_t d = 0; d <= q.dx; ++d)
                    h.at(i + j, c + d) = r.add(h.at(i + j, c + d), r.mul(a, q.at(j, d)));
        }
    return h;
}

inline bool is_zero(const RingTable& r, const BivariatePoly& p) {
    for (Elem c : p.coeffs)
        if (c != r.zero()) return false;
    return true;
}

/// Σ f_i(x) y^i ↦ Σ f_i(x) x^{ik}. Requires k > dx so distinct y-slots stay
/// apart; products of two substituted polynomials additionally need
/// k > dx(p) + dx(q), see substitution_bound().
inline BoundedPoly substitute_xk(const RingTable& r, const BivariatePoly& p, std::size_t k) {
    if (k <= p.dx)
        throw PreconditionError("substitution exponent k=" + std::to_string(k) +
                                " must exceed the x-degree bound " + std::to_string(p.dx));
    BoundedPoly f{std::vector<Elem>(p.dy * k + p.dx + 1, r.zero())};
    for (std::size_t i = 0; i <= p.dy; ++i)
        for (std::size_t c = 0; c <= p.dx; ++c) f.coeffs[i * k + c] = p.at(i, c);
    return f;
}

/// Least k for which p(y)q(y) = 0 ⟺ p(x^k)q(x^k) = 0: one more than the degree sum.
inline std::size_t substitution_bound(const BivariatePoly& p, const BivariatePoly& q) { return p.dx + q.dx + 1; }

/// Substitutes both factors after checking k against the pair's degree sum.
inline std::pair<BoundedPoly, BoundedPoly> substitute_pair(const RingTable& r, const BivariatePoly& p,
                                                           const BivariatePoly& q, std::size_t k) {
    if (k < substitution_bound(p, q))
        throw PreconditionError("substitution exponent k=" + std::to_string(k) +
                                " must exceed the x-degree sum " + std::to_string(p.dx + q.dx));
    return {substitute_xk(r, p, k), substitute_xk(r, q, k)};
}

/// Σ coeffs[e + window] x^e for exponents -window..window.
struct LaurentPoly {
    std::size_t window = 0;
    std::vector<Elem> coeffs;

    Elem at(long exponent) const { return coeffs[static_cast<std::size_t>(exponent + static_cast<long>(window))]; }
    bool operator==(const LaurentPoly&) const = default;
};

/// Multiplication by x^window: an ordinary polynomial with bound 2·window.
inline BoundedPoly laurent_shift(const LaurentPoly& f) { return BoundedPoly{f.coeffs}; }

/// Direct product in R[x, x⁻¹]; the result has window wf + wg.
inline LaurentPoly laurent_mul(const RingTable& r, const LaurentPoly& f, const LaurentPoly& g) {
    check_coefficients(r, f.coeffs);
    check_coefficients(r, g.coeffs);
    LaurentPoly h{f.window + g.window, std::vector<Elem>(2 * (f.window + g.window) + 1, r.zero())};
    const long wf = static_cast<long>(f.window), wg = static_cast<long>(g.window), wh = wf + wg;
    for (long e = -wf; e <= wf; ++e)
        for (long d = -wg; d <= wg; ++d) {
            auto& slot = h.coeffs[static_cast<std::size_t>(e + d + wh)];
            slot = r.add(slot, r.mul(f.at(e), g.at(d)));
        }
    return h;
}

inline bool is_zero(const RingTable& r, const LaurentPoly& f) { return is_zero(r, BoundedPoly{f.coeffs}); }

}  // namespace ringlab
