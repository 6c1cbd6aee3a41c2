#pragma once

// Executable claim checks over a ring corpus.
//
// Each claim tests an implication or equivalence about almost Armendariz
// rings at bounded degree. A claim is a contradiction when two verdicts at
// the same bound disagree with the implication, or when a witness carried
// along one of the structural maps (diagonal projection, Toeplitz embedding,
// quotient map, corner inclusion, ...) fails to re-validate on the other
// side. Checks that run out of caps or budget are skipped, never passed.

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ringlab/constructions.hpp"
#include "ringlab/dsl.hpp"
#include "ringlab/hom.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/pair_search.hpp"
#include "ringlab/properties.hpp"
#include "ringlab/radicals.hpp"
#include "ringlab/report.hpp"

namespace ringlab {

inline std::vector<std::string> default_corpus() {
    return {"Z/2", "Z/3",       "Z/4",       "Z/6",          "Z/8", "prod(Z/2, Z/4)", "T(2, Z/2)",
            "M(2, Z/2)", "trivext(Z/2)", "truncpoly(Z/2, 3)"};
}

struct SuiteConfig {
    std::vector<std::string> corpus = default_corpus();
    std::size_t max_deg = 2;
    std::size_t bivariate_dx = 1;
    std::size_t bivariate_dy = 1;
    std::size_t laurent_window = 1;
    std::uint64_t budget = kDefaultSearchBudget;
    std::size_t prime_oracle_cap = kDefaultPrimeOracleCap;
    std::size_t max_search_size = kDefaultSearchRingCap;
    /// Constructed rings above this size are searched at degree 1 only.
    std::size_t deep_search_size = 32;
    /// Corpus rings above this size are left out of the R[x] and R[x, x⁻¹] claims.
    std::size_t max_extension_size = 8;
    unsigned jobs = 1;
    /// Adds the Armendariz refutation search for the 4x4 constant-diagonal example.
    bool stretch = false;

    void validate() const {
        if (corpus.empty()) throw PreconditionError("suite config: corpus is empty");
        if (max_deg == 0 || bivariate_dy == 0 || laurent_window == 0 || budget == 0 || jobs == 0 ||
            deep_search_size == 0)
            throw PreconditionError("suite config: bounds must be positive");
    }
};

enum class Outcome { Consistent, Contradiction, Skipped };

inline std::string_view outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Consistent: return "consistent";
        case Outcome::Contradiction: return "contradiction";
        case Outcome::Skipped: return "skipped";
    }
    return "?";
}

struct VerdictRecord {
    std::string ring;
    std::string summary;  // e.g. "almost HoldsUpTo(2)"
    Json detail;
};

struct CheckRecord {
    std::string instance;
    Outcome outcome = Outcome::Skipped;
    std::vector<std::string> notes;
    std::vector<VerdictRecord> verdicts;
    double elapsed_ms = 0;
};

struct ClaimResult {
    std::string id;
    std::string statement;
    std::vector<std::string> sub_claims;
    std::vector<CheckRecord> checks;
    Outcome outcome = Outcome::Skipped;
    double elapsed_ms = 0;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<ClaimResult> claims;

    std::size_t count(Outcome o) const {
        return static_cast<std::size_t>(
            std::count_if(claims.begin(), claims.end(), [&](const ClaimResult& c) { return c.outcome == o; }));
    }
    bool passed() const { return count(Outcome::Contradiction) == 0; }
    const ClaimResult* find(std::string_view id) const {
        for (const auto& c : claims)
            if (c.id == id) return &c;
        return nullptr;
    }
};

namespace detail {

struct NamedRing {
    std::string name;
    RingRef ring;
};

inline Witness map_witness(const RingHom& h, const Witness& w) {
    Witness m = w;
    for (auto& c : m.f.coeffs) c = h(c);
    for (auto& c : m.g.coeffs) c = h(c);
    m.product = h(w.product);
    return m;
}

inline RingHom inverse_hom(const RingHom& h) {
    RingHom inv{h.target, h.source, std::vector<Elem>(h.target->size(), 0)};
    for (Elem x = 0; x < h.source->size(); ++x) inv.map[h(x)] = x;
    return inv;
}

/// Unital inclusion of R as constants in R[x]/(x^n).
inline RingHom constant_embedding(const RingRef& base, const RingRef& trunc, std::size_t n) {
    Elem scale = 1;
    for (std::size_t k = 1; k < n; ++k) scale *= static_cast<Elem>(base->size());
    RingHom h{base, trunc, std::vector<Elem>(base->size())};
    for (Elem x = 0; x < base->size(); ++x) h.map[x] = x * scale;
    return h;
}

/// a0 + a1 x + ... ↦ a0.
inline RingHom constant_term(const RingRef& base, const RingRef& trunc, std::size_t n) {
    Elem scale = 1;
    for (std::size_t k = 1; k < n; ++k) scale *= static_cast<Elem>(base->size());
    RingHom h{trunc, base, std::vector<Elem>(trunc->size())};
    for (Elem x = 0; x < trunc->size(); ++x) h.map[x] = x / scale;
    return h;
}

/// One claim under construction: accumulates check records and verdicts.
class ClaimBuilder {
public:
    ClaimBuilder(const SuiteConfig& cfg, std::string id, std::string statement,
                 std::vector<std::string> sub_claims = {})
        : cfg_(cfg) {
        result_.id = std::move(id);
        result_.statement = std::move(statement);
        result_.sub_claims = std::move(sub_claims);
        opt_.search.budget = cfg.budget;
        opt_.search.jobs = 1;
        opt_.max_ring_size = cfg.max_search_size;
    }

    const SuiteConfig& config() const { return cfg_; }

    std::size_t degree_for(std::size_t size) const {
        return size <= cfg_.deep_search_size ? cfg_.max_deg : std::min<std::size_t>(cfg_.max_deg, 1);
    }

    /// Runs `body` as one check; errors become skipped records.
    void check(const std::string& instance, const std::function<void(CheckRecord&)>& body) {
        detail::Stopwatch clock;
        current_ = CheckRecord{instance, Outcome::Consistent, {}, {}, 0};
        try {
            body(current_);
        } catch (const CapExceeded& e) {
            skip(std::string("cap: ") + e.what());
        } catch (const BudgetExceeded& e) {
            skip(std::string("budget: ") + e.what());
        } catch (const PreconditionError& e) {
            skip(std::string("precondition: ") + e.what());
        }
        current_.elapsed_ms = clock.ms();
        result_.checks.push_back(std::move(current_));
    }

    void note(std::string s) { current_.notes.push_back(std::move(s)); }
    void contradiction(std::string why) {
        current_.outcome = Outcome::Contradiction;
        note("CONTRADICTION: " + std::move(why));
    }
    void skip(std::string why) {
        if (current_.outcome != Outcome::Contradiction) current_.outcome = Outcome::Skipped;
        note("skipped: " + std::move(why));
    }
    /// Requires `cond`, recording a contradiction otherwise.
    bool require(bool cond, const std::string& what) {
        if (!cond) contradiction(what);
        return cond;
    }

    /// Search or structural decision; nullopt (with a skip note) when a cap
    /// or the budget is hit. A skip note does not change the record's outcome
    /// by itself; see settle().
    std::optional<PropertyVerdict> verdict(const NamedRing& r, const RingAnalysis& a, Property p, std::size_t d) {
        return attempt(r, [&] { return ringlab::check(a, p, d, opt_); });
    }
    std::optional<PropertyVerdict> bivariate(const NamedRing& r, const RingAnalysis& a, std::size_t dx,
                                             std::size_t dy) {
        return attempt(r, [&] { return check_almost_bivariate(a, dx, dy, opt_); });
    }
    std::optional<PropertyVerdict> laurent(const NamedRing& r, const RingAnalysis& a, std::size_t w) {
        return attempt(r, [&] { return check_almost_laurent(a, w, opt_); });
    }

    /// Marks the current record skipped unless every required verdict is present.
    template <class... V>
    void settle(const V&... vs) {
        if (current_.outcome == Outcome::Contradiction) return;
        if (!(vs.has_value() && ...)) current_.outcome = Outcome::Skipped;
    }

    ClaimResult finish(double elapsed_ms) {
        bool any_consistent = false, any_contradiction = false;
        for (const auto& c : result_.checks) {
            any_consistent |= c.outcome == Outcome::Consistent;
            any_contradiction |= c.outcome == Outcome::Contradiction;
        }
        result_.outcome = any_contradiction ? Outcome::Contradiction
                          : any_consistent  ? Outcome::Consistent
                                            : Outcome::Skipped;
        result_.elapsed_ms = elapsed_ms;
        return std::move(result_);
    }

private:
    template <class F>
    std::optional<PropertyVerdict> attempt(const NamedRing& r, F run) {
        try {
            PropertyVerdict v = run();
            std::string summary = std::string(property_name(v.property)) + " " + std::string(kind_name(v.kind));
            summary += v.kind == PropertyVerdict::Kind::Exact ? (v.exact_value ? "(true)" : "(false)")
                                                              : bounds_text(v.bounds);
            current_.verdicts.push_back({r.name, summary, verdict_json(*r.ring, v)});
            if (v.kind == PropertyVerdict::Kind::Inconclusive) {
                note(r.name + ": inconclusive sampled search");
                return std::nullopt;
            }
            return v;
        } catch (const CapExceeded& e) {
            note(r.name + ": not searched (" + e.what() + ")");
        } catch (const BudgetExceeded& e) {
            note(r.name + ": not searched (" + e.what() + ")");
        }
        return std::nullopt;
    }

    const SuiteConfig& cfg_;
    CheckOptions opt_;
    ClaimResult result_;
    CheckRecord current_;
};

inline bool holds(const std::optional<PropertyVerdict>& v) { return v && v->holds(); }
inline bool refuted(const std::optional<PropertyVerdict>& v) { return v && v->refuted(); }

inline std::string deg_text(std::size_t d) { return "D=" + std::to_string(d); }

inline std::vector<NamedRing> build_corpus(const SuiteConfig& cfg) {
    std::vector<NamedRing> out;
    for (const auto& text : cfg.corpus) {
        const RingExpr e = parse_expr(text);
        out.push_back({print_expr(e), evaluate(e)});
    }
    return out;
}

/// Fails the check when a carried witness does not re-validate.
inline bool carry(ClaimBuilder& b, const RingHom& h, const Witness& w, const NamedRing& to, const std::string& map) {
    const Witness m = map_witness(h, w);
    const bool ok = validate_witness(*to.ring, m);
    if (ok) b.note("witness carried by " + map + " re-validates in " + to.name);
    else b.contradiction("witness carried by " + map + " does not re-validate in " + to.name);
    return ok;
}

/// Compares "both sides hold or both refute" verdicts for an equivalence.
inline void same_truth(ClaimBuilder& b, const std::optional<PropertyVerdict>& x, const std::string& xn,
                       const std::optional<PropertyVerdict>& y, const std::string& yn) {
    if (!x || !y) return;
    if (x->holds() != y->holds())
        b.contradiction(xn + (x->holds() ? " holds" : " refutes") + " but " + yn + (y->holds() ? " holds" : " refutes"));
}

inline std::vector<Elem> central_units(const RingTable& r) {
    std::vector<Elem> out;
    for (Elem x = 0; x < r.size(); ++x)
        if (is_unit(r, x) && is_central(r, x)) out.push_back(x);
    return out;
}

inline std::optional<Elem> nontrivial_central_idempotent(const RingTable& r) {
    for (Elem x = 0; x < r.size(); ++x)
        if (x != r.zero() && x != r.one() && is_idempotent(r, x) && is_central(r, x)) return x;
    return std::nullopt;
}

inline std::string elems_text(const std::vector<Elem>& xs) { return print_elems(xs); }

// ---------------------------------------------------------------------------
// Claims

inline NamedRing named(std::string text) {
    const RingExpr e = parse_expr(text);
    return {print_expr(e), evaluate(e)};
}

/// R almost ⇔ T_n(R) almost, with witnesses carried by diagonal maps.
inline void triangular_instance(ClaimBuilder& b, const NamedRing& r, std::size_t n, std::size_t d) {
    const NamedRing t{"T(" + std::to_string(n) + ", " + r.name + ")", upper_triangular(n, r.ring)};
    const RingAnalysis ar = analyze(r.ring), at = analyze(t.ring);
    const auto vr = b.verdict(r, ar, Property::Almost, d);
    const auto vt = b.verdict(t, at, Property::Almost, d);
    same_truth(b, vr, r.name, vt, t.name);
    bool t_side = vt.has_value();
    if (refuted(vr) && vr->witness)
        t_side = carry(b, diagonal_entry_embedding(t.ring, 1), *vr->witness, t, "the (1,1) diagonal embedding") ||
                 t_side;
    if (refuted(vt) && vt->witness) {
        bool any = false;
        for (std::size_t p = 1; p <= n && !any; ++p) {
            const Witness m = map_witness(diagonal_projection(t.ring, p), *vt->witness);
            if (validate_witness(*r.ring, m)) {
                any = true;
                b.note("witness projected to diagonal entry " + std::to_string(p) + " re-validates in " + r.name);
            }
        }
        if (!any) b.contradiction("no diagonal projection of the " + t.name + " witness refutes " + r.name);
    }
    if (!vr || !t_side) b.skip("one side undecided");
}

inline ClaimResult claim_triangular(const SuiteConfig& cfg, const std::vector<NamedRing>& corpus) {
    ClaimBuilder b(cfg, "triangular-closure",
                   "R is almost Armendariz exactly when the upper triangular ring T_n(R) is",
                   {"armendariz-base", "reduced-constant-diagonal", "reduced-trivial-extension",
                    "constant-diagonal-extension"});
    const NamedRing z2 = named("Z/2");
    const std::size_t d2 = std::min<std::size_t>(cfg.max_deg, 2);
    b.check("T(2, Z/2) at " + deg_text(d2), [&](CheckRecord&) { triangular_instance(b, z2, 2, d2); });
    b.check("T(3, Z/2) at D=1", [&](CheckRecord&) { triangular_instance(b, z2, 3, 1); });
    for (const auto& r : corpus) {
        const std::size_t size = r.ring->size() * r.ring->size() * r.ring->size();
        const std::size_t d = b.degree_for(size);
        b.check("T(2, " + r.name + ") at " + deg_text(d), [&](CheckRecord&) { triangular_instance(b, r, 2, d); });
    }

    // Armendariz base rings give almost Armendariz triangular rings.
    for (const char* base : {"Z/2", "Z/3", "Z/6"}) {
        const NamedRing r = named(base);
        const NamedRing t{"T(2, " + r.name + ")", upper_triangular(2, r.ring)};
        const std::size_t d = b.degree_for(t.ring->size());
        b.check("armendariz-base: T(2, " + r.name + ") at " + deg_text(d), [&](CheckRecord&) {
            const auto va = b.verdict(r, analyze(r.ring), Property::Armendariz, d);
            const auto vt = b.verdict(t, analyze(t.ring), Property::Almost, d);
            if (holds(va)) b.require(!refuted(vt), t.name + " refutes almost over an Armendariz base");
            b.settle(va, vt);
        });
    }
    // Reduced base rings: constant-diagonal rings and trivial extensions.
    const std::vector<std::pair<const char*, std::size_t>> cd_cases{{"Z/2", 2}, {"Z/2", 3}, {"Z/3", 2}, {"Z/3", 3},
                                                                    {"Z/6", 2}};
    for (const auto& [base, n] : cd_cases) {
        const NamedRing r = named(base);
        const NamedRing s{"CD(" + std::to_string(n) + ", " + r.name + ")", constant_diagonal(n, r.ring)};
        const std::size_t d = b.degree_for(s.ring->size());
        b.check("reduced-constant-diagonal: " + s.name + " at " + deg_text(d), [&](CheckRecord&) {
            const RingAnalysis ar = analyze(r.ring);
            const auto vr = b.verdict(r, ar, Property::Reduced, 0);
            const auto vs = b.verdict(s, analyze(s.ring), Property::Almost, d);
            if (holds(vr)) b.require(!refuted(vs), s.name + " refutes almost over a reduced base");
            b.settle(vr, vs);
        });
    }
    for (const char* base : {"Z/2", "Z/3", "Z/6"}) {
        const NamedRing r = named(base);
        const NamedRing te{"trivext(" + r.name + ")", trivial_extension(r.ring)};
        const std::size_t d = b.degree_for(te.ring->size());
        b.check("reduced-trivial-extension: " + te.name + " at " + deg_text(d), [&](CheckRecord&) {
            const RingRef cd = constant_diagonal(2, r.ring);
            b.require(is_isomorphism(trivial_extension_to_constant_diagonal(te.ring, cd)),
                      te.name + " is not isomorphic to CD(2, " + r.name + ") by the matrix map");
            const auto vr = b.verdict(r, analyze(r.ring), Property::Reduced, 0);
            const auto vt = b.verdict(te, analyze(te.ring), Property::Almost, d);
            if (holds(vr)) b.require(!refuted(vt), te.name + " refutes almost over a reduced base");
            b.settle(vr, vt);
        });
    }
    for (const char* base : {"Z/2", "Z/3"}) {
        const NamedRing r = named(base);
        const NamedRing s{"CD(2, " + r.name + ")", constant_diagonal(2, r.ring)};
        const NamedRing ts{"trivext(" + s.name + ")", trivial_extension(s.ring)};
        const std::size_t d = b.degree_for(ts.ring->size());
        b.check("constant-diagonal-extension: " + ts.name + " at " + deg_text(d), [&](CheckRecord&) {
            const auto vs = b.verdict(s, analyze(s.ring), Property::Almost, d);
            const auto vt = b.verdict(ts, analyze(ts.ring), Property::Almost, d);
            b.require(!refuted(vs), s.name + " refutes almost over a reduced base");
            b.require(!refuted(vt), ts.name + " refutes almost over a reduced base");
            b.settle(vs, vt);
        });
    }
    return b.finish(0);
}

inline void truncpoly_instance(ClaimBuilder& b, const NamedRing& r, std::size_t n, std::size_t d) {
    const NamedRing s{"truncpoly(" + r.name + ", " + std::to_string(n) + ")", truncated_poly_ring(r.ring, n)};
    try {
        const RingHom iso = toeplitz_iso(r.ring, n);
        const HomCheck hc = check_homomorphism(iso);
        if (b.require(hc.ok && is_injective(iso), "Toeplitz map is not an injective ring homomorphism: " + hc.failure))
            b.note("Toeplitz map into T(" + std::to_string(n) + ", " + r.name + ") validated");
    } catch (const CapExceeded&) {
        b.note("Toeplitz validation skipped: T(" + std::to_string(n) + ", " + r.name + ") above cap");
    }
    const RingHom embed = constant_embedding(r.ring, s.ring, n), head = constant_term(r.ring, s.ring, n);
    b.require(check_homomorphism(embed).ok && check_homomorphism(head).ok, "constant maps are not homomorphisms");

    const RingAnalysis ar = analyze(r.ring), as = analyze(s.ring);
    const auto vr = b.verdict(r, ar, Property::Almost, d);
    const auto vs = b.verdict(s, as, Property::Almost, d);
    same_truth(b, vr, r.name, vs, s.name);
    bool s_side = vs.has_value();
    if (refuted(vr) && vr->witness) s_side = carry(b, embed, *vr->witness, s, "the constant embedding") || s_side;
    if (refuted(vs) && vs->witness) carry(b, head, *vs->witness, r, "the constant-term map");
    if (!vr || !s_side) b.skip("one side undecided");
}

inline ClaimResult claim_truncpoly(const SuiteConfig& cfg, const std::vector<NamedRing>& corpus) {
    ClaimBuilder b(cfg, "truncated-polynomial-closure", "R is almost Armendariz exactly when R[x]/(x^n) is");
    const std::size_t d2 = std::min<std::size_t>(cfg.max_deg, 2);
    const NamedRing z2 = named("Z/2"), z4 = named("Z/4");
    b.check("truncpoly(Z/2, 2) at " + deg_text(d2), [&](CheckRecord&) { truncpoly_instance(b, z2, 2, d2); });
    b.check("truncpoly(Z/2, 3) at D=1", [&](CheckRecord&) { truncpoly_instance(b, z2, 3, 1); });
    b.check("truncpoly(Z/4, 2) at D=1", [&](CheckRecord&) { truncpoly_instance(b, z4, 2, 1); });
    for (const auto& r : corpus) {
        const std::size_t d = b.degree_for(r.ring->size() * r.ring->size());
        b.check("truncpoly(" + r.name + ", 2) at " + deg_text(d), [&](CheckRecord&) { truncpoly_instance(b, r, 2, d); });
    }
    return b.finish(0);
}

inline void lifting_instance(ClaimBuilder& b, const NamedRing& r, const std::vector<Elem>& gens) {
    const RingAnalysis ar = analyze(r.ring);
    const Quotient q = ideal_quotient(r.ring, gens);
    const NamedRing qn{"quot(" + r.name + ", " + elems_text(gens) + ")", q.ring};
    const bool in_p = q.ideal.subset_of(ar.prime_radical);
    const bool nilpotent = is_nilpotent_ideal(*r.ring, q.ideal);
    b.note("|I| = " + std::to_string(q.ideal.size()) + (in_p ? ", I inside P(R)" : ", I not inside P(R)") +
           (nilpotent ? ", I nilpotent" : ", I not nilpotent"));
    if (q.ideal.is_zero()) {
        b.note("zero ideal: R/I is R, nothing to lift");
        return;
    }
    if (!in_p && !nilpotent) {
        b.note("hypotheses not met");
        return;
    }
    const std::size_t d = b.degree_for(r.ring->size());
    const auto vq = b.verdict(qn, analyze(q.ring), Property::Almost, d);
    const auto vr = b.verdict(r, ar, Property::Almost, d);
    if (holds(vq)) b.require(!refuted(vr), qn.name + " holds but " + r.name + " refutes");
    if (refuted(vr) && vr->witness) carry(b, q.projection, *vr->witness, qn, "the quotient map");
    b.settle(vq, vr);
}

inline ClaimResult claim_lifting(const SuiteConfig& cfg, const std::vector<NamedRing>& corpus) {
    ClaimBuilder b(cfg, "ideal-lifting",
                   "if I lies in P(R) or is nilpotent and R/I is almost Armendariz, so is R",
                   {"nilpotent-ideal"});
    const NamedRing t2 = named("T(2, Z/2)"), z4 = named("Z/4");
    b.check("quot(T(2, Z/2), [2])", [&](CheckRecord&) { lifting_instance(b, t2, {2}); });
    b.check("quot(Z/4, [2])", [&](CheckRecord&) { lifting_instance(b, z4, {2}); });
    b.check("quot(Z/4, [])", [&](CheckRecord&) { lifting_instance(b, z4, {}); });
    for (const auto& r : corpus) {
        const Ideal p = prime_radical_fixpoint(*r.ring);
        if (p.is_zero()) continue;
        b.check("quot(" + r.name + ", P(R))", [&](CheckRecord&) { lifting_instance(b, r, p.members); });
    }
    return b.finish(0);
}

inline void split_instance(ClaimBuilder& b, const NamedRing& r, Elem e) {
    const Corner ce = corner(r.ring, e);
    const Elem f = complement_idempotent(*r.ring, e);
    const Corner cf = corner(r.ring, f);
    const NamedRing en{"corner(" + r.name + ", " + std::to_string(e) + ")", ce.ring};
    const NamedRing fn{"corner(" + r.name + ", " + std::to_string(f) + ")", cf.ring};
    const std::size_t d = b.degree_for(r.ring->size());
    const auto vr = b.verdict(r, analyze(r.ring), Property::Almost, d);
    const auto ve = b.verdict(en, analyze(ce.ring), Property::Almost, d);
    const auto vf = b.verdict(fn, analyze(cf.ring), Property::Almost, d);
    if (vr && ve && vf && vr->holds() != (ve->holds() && vf->holds()))
        b.contradiction(r.name + (vr->holds() ? " holds" : " refutes") + " while the corners " +
                        (ve->holds() && vf->holds() ? "both hold" : "do not both hold"));
    if (refuted(ve) && ve->witness) carry(b, ce.inclusion, *ve->witness, r, "the corner inclusion");
    if (refuted(vf) && vf->witness) carry(b, cf.inclusion, *vf->witness, r, "the corner inclusion");
    if (refuted(vr) && vr->witness) {
        const bool ok = validate_witness(*ce.ring, map_witness(ce.projection, *vr->witness)) ||
                        validate_witness(*cf.ring, map_witness(cf.projection, *vr->witness));
        if (b.require(ok, "neither corner projection of the " + r.name + " witness re-validates"))
            b.note("witness projected into a corner re-validates");
    }
    b.settle(vr, ve, vf);
}

inline ClaimResult claim_split(const SuiteConfig& cfg, const std::vector<NamedRing>& corpus) {
    ClaimBuilder b(cfg, "central-idempotent-split",
                   "for a central idempotent e, R is almost Armendariz exactly when eR and (1-e)R are");
    const NamedRing z6 = named("Z/6"), z2z4 = named("prod(Z/2, Z/4)");
    b.check("Z/6 with e = 3", [&](CheckRecord&) { split_instance(b, z6, 3); });
    b.check("prod(Z/2, Z/4) with e = 4 (the pair (1,0))", [&](CheckRecord&) { split_instance(b, z2z4, 4); });
    b.check("Z/6 with e = 1", [&](CheckRecord&) { split_instance(b, z6, 1); });
    for (const auto& r : corpus) {
        const auto e = nontrivial_central_idempotent(*r.ring);
        if (!e) continue;
        b.check(r.name + " with e = " + std::to_string(*e), [&](CheckRecord&) { split_instance(b, r, *e); });
    }
    return b.finish(0);
}

template <class Body>
inline void over_corpus(ClaimBuilder& b, const std::vector<NamedRing>& corpus, Body body) {
    for (const auto& r : corpus) {
        const RingAnalysis a = analyze(r.ring);
        for (std::size_t d = 1; d <= b.config().max_deg; ++d)
            b.check(r.name + " at " + deg_text(d), [&](CheckRecord&) { body(r, a, d); });
    }
}

/// Replays a refutation of `from` as one of `to`, which must then be refuted.
inline void replay_down(ClaimBuilder& b, const NamedRing& r, const RingAnalysis& a,
                        const std::optional<PropertyVerdict>& from, const std::optional<PropertyVerdict>& to,
                        Property to_p) {
    if (!refuted(from) || !from->witness) return;
    const auto w = replay(a, *from->witness, to_p);
    if (b.require(w && validate_witness(*r.ring, *w), std::string(property_name(from->property)) +
                                                          " witness does not replay as " +
                                                          std::string(property_name(to_p))))
        b.note(std::string(property_name(from->property)) + " witness replays as " + std::string(property_name(to_p)));
    if (to) b.require(to->refuted(), std::string(property_name(to_p)) + " holds although a replayed witness exists");
}

inline ClaimResult claim_almost_weak(const SuiteConfig& cfg, const std::vector<NamedRing>& corpus) {
    ClaimBuilder b(cfg, "almost-implies-weak",
                   "Armendariz implies almost Armendariz, which implies weak Armendariz; nil Armendariz implies weak");
    over_corpus(b, corpus, [&](const NamedRing& r, const RingAnalysis& a, std::size_t d) {
        const auto arm = b.verdict(r, a, Property::Armendariz, d);
        const auto alm = b.verdict(r, a, Property::Almost, d);
        const auto weak = b.verdict(r, a, Property::Weak, d);
        const auto nil = b.verdict(r, a, Property::Nil, d);
        replay_down(b, r, a, weak, alm, Property::Almost);
        replay_down(b, r, a, alm, arm, Property::Armendariz);
        replay_down(b, r, a, weak, nil, Property::Nil);
        b.settle(arm, alm, weak, nil);
    });
    return b.finish(0);
}

inline ClaimResult claim_two_primal(const SuiteConfig& cfg, const std::vector<NamedRing>& corpus) {
    ClaimBuilder b(cfg, "two-primal-equivalence", "in a 2-primal ring, almost and weak Armendariz coincide");
    over_corpus(b, corpus, [&](const NamedRing& r, const RingAnalysis& a, std::size_t d) {
        if (!is_2primal(*r.ring)) {
            b.note("not 2-primal; outside the hypothesis");
            return;
        }
        const auto alm = b.verdict(r, a, Property::Almost, d);
        const auto weak = b.verdict(r, a, Property::Weak, d);
        if (alm && weak) b.require(alm->kind == weak->kind, "almost and weak verdicts differ on a 2-primal ring");
        b.settle(alm, weak);
    });
    return b.finish(0);
}

inline ClaimResult claim_semicommutative(const SuiteConfig& cfg, const std::vector<NamedRing>& corpus) {
    ClaimBuilder b(cfg, "semicommutative-almost", "semicommutative rings are almost Armendariz");
    over_corpus(b, corpus, [&](const NamedRing& r, const RingAnalysis& a, std::size_t d) {
        if (!is_semicommutative(*r.ring)) {
            b.note("not semicommutative; outside the hypothesis");
            return;
        }
        const auto alm = b.verdict(r, a, Property::Almost, d);
        if (alm) b.require(alm->holds(), "a semicommutative ring refutes almost");
        b.settle(alm);
    });
    return b.finish(0);
}

inline ClaimResult claim_semicommutative_weak(const SuiteConfig& cfg, const std::vector<NamedRing>& corpus) {
    ClaimBuilder b(cfg, "semicommutative-weak-iff-almost",
                   "a semicommutative ring is weak Armendariz exactly when it is almost Armendariz");
    over_corpus(b, corpus, [&](const NamedRing& r, const RingAnalysis& a, std::size_t d) {
        if (!is_semicommutative(*r.ring)) {
            b.note("not semicommutative; outside the hypothesis");
            return;
        }
        const auto alm = b.verdict(r, a, Property::Almost, d);
        const auto weak = b.verdict(r, a, Property::Weak, d);
        if (alm && weak) b.require(alm->kind == weak->kind, "weak and almost verdicts differ");
        b.settle(alm, weak);
    });
    return b.finish(0);
}

inline void bivariate_instance(ClaimBuilder& b, const NamedRing& r, std::size_t dx, std::size_t dy) {
    const RingAnalysis a = analyze(r.ring);
    const auto vb = b.bivariate(r, a, dx, dy);
    const auto base = b.verdict(r, a, Property::Almost, dy);
    if (refuted(vb) && vb->bivariate_witness) {
        const BivariateWitness& w = *vb->bivariate_witness;
        b.require(validate_witness(*r.ring, w), "bivariate witness does not re-validate");
        const auto [f, g] = substitute_pair(*r.ring, w.p, w.q, substitution_bound(w.p, w.q));
        const auto ij = refutes(a, f, g, Property::Almost);
        if (b.require(ij.has_value(), "substituting y = x^k does not give a refutation in R[x]"))
            b.note("y = x^" + std::to_string(substitution_bound(w.p, w.q)) + " turns the witness into a degree-" +
                   std::to_string(f.coeffs.size() - 1) + " refutation in R[x]");
    }
    if (refuted(base) && base->witness && vb) {
        // The univariate pair read with constant x-coefficients.
        const Witness& w = *base->witness;
        BivariatePoly p = BivariatePoly::zero(*r.ring, dx, dy), q = p;
        for (std::size_t i = 0; i < w.f.coeffs.size(); ++i) p.at(i, 0) = w.f.coeffs[i];
        for (std::size_t j = 0; j < w.g.coeffs.size(); ++j) q.at(j, 0) = w.g.coeffs[j];
        const BivariateWitness lifted{p, q, w.i, w.j, poly_mul(*r.ring, p.y_coeff(w.i), q.y_coeff(w.j)), 0, w.product};
        b.require(validate_witness(*r.ring, lifted), "constant lift of the R[x] witness does not re-validate");
        b.require(vb->refuted(), "R refutes at degree " + std::to_string(dy) + " but the bivariate search holds");
    }
    b.settle(vb, base);
}

inline ClaimResult claim_bivariate(const SuiteConfig& cfg, const std::vector<NamedRing>& corpus) {
    ClaimBuilder b(cfg, "polynomial-extension", "R is almost Armendariz exactly when R[x] is");
    const std::size_t dx = cfg.bivariate_dx, dy = cfg.bivariate_dy;
    const std::string bounds = "(" + std::to_string(dx) + "," + std::to_string(dy) + ")";
    const NamedRing z4 = named("Z/4"), t2 = named("T(2, Z/2)"), m2 = named("M(2, Z/2)");
    b.check("Z/4 at " + bounds, [&](CheckRecord&) { bivariate_instance(b, z4, dx, dy); });
    b.check("T(2, Z/2) at " + bounds, [&](CheckRecord&) { bivariate_instance(b, t2, dx, dy); });
    b.check("M(2, Z/2) at (0,1)", [&](CheckRecord&) { bivariate_instance(b, m2, 0, 1); });
    for (const auto& r : corpus) {
        if (r.ring->size() > cfg.max_extension_size) continue;
        b.check(r.name + " at " + bounds, [&](CheckRecord&) { bivariate_instance(b, r, dx, dy); });
    }
    return b.finish(0);
}

inline void laurent_instance(ClaimBuilder& b, const NamedRing& r, std::size_t w) {
    const RingAnalysis a = analyze(r.ring);
    const auto vl = b.laurent(r, a, w);
    const auto vp = b.verdict(r, a, Property::Almost, 2 * w);
    if (vl && vp) b.require(vl->kind == vp->kind, "Laurent verdict differs from the degree-2W verdict");
    if (refuted(vl) && vl->witness) {
        const auto [lf, lg] = laurent_pair(*vl->witness);
        const bool ok = is_zero(*r.ring, laurent_mul(*r.ring, lf, lg)) && validate_witness(*r.ring, *vl->witness);
        if (b.require(ok, "Laurent witness does not re-validate"))
            b.note("Laurent pair multiplies to zero in R[x, x^-1]");
    }
    b.settle(vl, vp);
}

inline ClaimResult claim_laurent(const SuiteConfig& cfg, const std::vector<NamedRing>& corpus) {
    ClaimBuilder b(cfg, "laurent-extension", "R is almost Armendariz exactly when R[x, x^-1] is");
    const std::size_t w = cfg.laurent_window;
    const std::string tag = " at W=" + std::to_string(w);
    const NamedRing z4 = named("Z/4"), m2 = named("M(2, Z/2)");
    b.check("Z/4" + tag, [&](CheckRecord&) { laurent_instance(b, z4, w); });
    b.check("M(2, Z/2)" + tag, [&](CheckRecord&) { laurent_instance(b, m2, w); });
    for (const auto& r : corpus) {
        if (r.ring->size() > cfg.max_extension_size) continue;
        b.check(r.name + tag, [&](CheckRecord&) { laurent_instance(b, r, w); });
    }
    return b.finish(0);
}

inline void localization_instance(ClaimBuilder& b, const NamedRing& r, const std::vector<Elem>& s) {
    const Localization loc = localization(r.ring, s);
    const NamedRing ln{"loc(" + r.name + ", " + elems_text(s) + ")", loc.ring};
    b.require(is_isomorphism(loc.canonical), "canonical map into the localization is not an isomorphism");
    const RingHom back = inverse_hom(loc.canonical);
    const std::size_t d = b.degree_for(r.ring->size());
    const auto vr = b.verdict(r, analyze(r.ring), Property::Almost, d);
    const auto vl = b.verdict(ln, analyze(loc.ring), Property::Almost, d);
    if (vr && vl) b.require(vr->kind == vl->kind, "localization verdict differs from the ring's");
    if (refuted(vr) && vr->witness) carry(b, loc.canonical, *vr->witness, ln, "the canonical map");
    if (refuted(vl) && vl->witness) carry(b, back, *vl->witness, r, "the inverse of the canonical map");
    b.settle(vr, vl);
}

inline ClaimResult claim_localization(const SuiteConfig& cfg, const std::vector<NamedRing>& corpus) {
    ClaimBuilder b(cfg, "localization", "localizing an almost Armendariz ring at central regular elements keeps it so");
    const NamedRing z4 = named("Z/4");
    b.check("Z/4 with S = [1, 3]", [&](CheckRecord&) { localization_instance(b, z4, {1, 3}); });
    for (const auto& r : corpus) {
        const auto s = central_units(*r.ring);
        b.check(r.name + " with S = central units " + elems_text(s),
                [&](CheckRecord&) { localization_instance(b, r, s); });
    }
    return b.finish(0);
}

inline ClaimResult claim_example_triangular(const SuiteConfig& cfg) {
    ClaimBuilder b(cfg, "example-triangular-over-field",
                   "T_2 over a field is almost Armendariz but not Armendariz");
    const std::size_t d = std::min<std::size_t>(cfg.max_deg, 2);
    for (const char* field : {"Z/2", "Z/3"}) {
        const NamedRing t = named(std::string("T(2, ") + field + ")");
        b.check(t.name, [&](CheckRecord&) {
            const RingAnalysis a = analyze(t.ring);
            const auto arm = b.verdict(t, a, Property::Armendariz, 1);
            const auto alm = b.verdict(t, a, Property::Almost, d);
            if (arm) {
                b.require(arm->kind == PropertyVerdict::Kind::Refuted, "Armendariz not refuted at D=1");
                if (arm->witness) b.require(validate_witness(*t.ring, *arm->witness), "witness does not re-validate");
            }
            if (alm) b.require(alm->kind == PropertyVerdict::Kind::HoldsUpTo, "almost not HoldsUpTo at " + deg_text(d));
            b.settle(arm, alm);
        });
    }
    return b.finish(0);
}

inline ClaimResult claim_example_constant_diagonal(const SuiteConfig& cfg) {
    ClaimBuilder b(cfg, "example-constant-diagonal",
                   "the 4x4 constant-diagonal ring over an almost Armendariz ring is almost Armendariz");
    const NamedRing s = named("CD(4, Z/2)");
    b.check(s.name + " almost at D=1", [&](CheckRecord&) {
        const RingAnalysis a = analyze(s.ring);
        const auto alm = b.verdict(s, a, Property::Almost, 1);
        if (alm) b.require(alm->kind == PropertyVerdict::Kind::HoldsUpTo, "almost refuted at D=1");
        b.settle(alm);
    });
    if (cfg.stretch) {
        b.check(s.name + " Armendariz at D=1", [&](CheckRecord&) {
            const RingAnalysis a = analyze(s.ring);
            const auto arm = b.verdict(s, a, Property::Armendariz, 1);
            if (refuted(arm) && arm->witness)
                b.require(validate_witness(*s.ring, *arm->witness), "Armendariz witness does not re-validate");
            else if (arm)
                b.skip("no Armendariz refutation at D=1; the known failure may need a larger degree");
            b.settle(arm);
        });
    }
    return b.finish(0);
}

/// (E11 + E12' x, E21 + E11 x) with E12' = -E12, in M2(Z/p) indices.
inline std::pair<BoundedPoly, BoundedPoly> full_matrix_pair(const RingRef& m2) {
    const auto& layout = *m2->matrix_layout();
    const RingTable& f = *layout.base;
    auto enc = [&](Elem a, Elem b, Elem c, Elem d) {
        const std::vector<Elem> grid{a, b, c, d};
        return layout.encode(grid);
    };
    const Elem o = f.one(), z = f.zero(), m = f.neg(f.one());
    return {BoundedPoly{{enc(o, z, z, z), enc(z, m, z, z)}}, BoundedPoly{{enc(z, z, o, z), enc(o, z, z, z)}}};
}

inline ClaimResult claim_example_full_matrix(const SuiteConfig& cfg) {
    ClaimBuilder b(cfg, "example-full-matrix", "the 2x2 matrix ring over a field is not almost Armendariz");
    const NamedRing m2 = named("M(2, Z/2)");
    b.check(m2.name + " search at D=1", [&](CheckRecord&) {
        const RingAnalysis a = analyze(m2.ring);
        const auto alm = b.verdict(m2, a, Property::Almost, 1);
        if (alm) {
            b.require(alm->kind == PropertyVerdict::Kind::Refuted, "almost not refuted at D=1");
            if (alm->witness) b.require(validate_witness(*m2.ring, *alm->witness), "witness does not re-validate");
        }
        b.settle(alm);
    });
    for (const char* field : {"Z/2", "Z/3"}) {
        const NamedRing m = named(std::string("M(2, ") + field + ")");
        b.check(m.name + " stated pair", [&](CheckRecord&) {
            const auto [f, g] = full_matrix_pair(m.ring);
            const Witness w{Property::Almost, f, g, 0, 1, m.ring->mul(f.coeffs[0], g.coeffs[1]),
                            Condition::NotInPrimeRadical, 0};
            if (b.require(validate_witness(*m.ring, w), "stated pair is not an almost refutation"))
                b.note("fg = 0 and E11*E11 = E11 lies outside P(R) = {0}");
            if (m.ring->size() <= 16) {
                const auto pairs = annihilator_pairs(*m.ring, 1, zero_mask(*m.ring));
                const bool member = std::find(pairs.begin(), pairs.end(), PairValues{f.coeffs, g.coeffs}) != pairs.end();
                if (b.require(member, "stated pair missing from the annihilator-pair enumeration"))
                    b.note("stated pair found among " + std::to_string(pairs.size()) + " annihilator pairs");
            }
        });
    }
    return b.finish(0);
}

inline ClaimResult claim_radicals(const SuiteConfig& cfg, const std::vector<NamedRing>& corpus) {
    ClaimBuilder b(cfg, "radical-oracles",
                   "fixpoint, ideal-nilpotency and prime-intersection computations of P(R) agree; P <= N <= nil");
    for (const auto& r : corpus) {
        b.check(r.name, [&](CheckRecord& rec) {
            const RadicalReport rep = radical_report(*r.ring, cfg.prime_oracle_cap);
            b.require(rep.fixpoint_matches_nilpotency, "fixpoint and ideal-nilpotency disagree");
            if (rep.prime_intersection) b.require(rep.oracles_agree(), "prime-intersection oracle disagrees");
            else b.note("prime intersection not computed above cap " + std::to_string(cfg.prime_oracle_cap));
            b.require(rep.chain_holds(), "P <= N <= nil fails");
            b.require(rep.prime_radical() == rep.nilradical, "P differs from N on a finite ring");
            rec.verdicts.push_back({r.name, "radicals", radical_json(*r.ring, rep)});
        });
    }
    return b.finish(0);
}

}  // namespace detail

/// Runs every claim. Claims execute on `config.jobs` threads and are
/// reported in a fixed order; the result does not depend on the job count.
inline SuiteReport run_suite(const SuiteConfig& config) {
    config.validate();
    const std::vector<detail::NamedRing> corpus = detail::build_corpus(config);
    using Claim = std::function<ClaimResult()>;
    const std::vector<Claim> claims{
        [&] { return detail::claim_triangular(config, corpus); },
        [&] { return detail::claim_truncpoly(config, corpus); },
        [&] { return detail::claim_lifting(config, corpus); },
        [&] { return detail::claim_split(config, corpus); },
        [&] { return detail::claim_almost_weak(config, corpus); },
        [&] { return detail::claim_two_primal(config, corpus); },
        [&] { return detail::claim_semicommutative(config, corpus); },
        [&] { return detail::claim_semicommutative_weak(config, corpus); },
        [&] { return detail::claim_bivariate(config, corpus); },
        [&] { return detail::claim_laurent(config, corpus); },
        [&] { return detail::claim_localization(config, corpus); },
        [&] { return detail::claim_example_triangular(config); },
        [&] { return detail::claim_example_constant_diagonal(config); },
        [&] { return detail::claim_example_full_matrix(config); },
        [&] { return detail::claim_radicals(config, corpus); },
    };
    SuiteReport report{config, std::vector<ClaimResult>(claims.size())};
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < claims.size();) {
            detail::Stopwatch clock;
            try {
                report.claims[k] = claims[k]();
            } catch (const Error& e) {
                report.claims[k].id = "claim-" + std::to_string(k);
                report.claims[k].outcome = Outcome::Contradiction;
                report.claims[k].checks.push_back({"setup", Outcome::Contradiction, {e.what()}, {}, 0});
            }
            report.claims[k].elapsed_ms = clock.ms();
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(claims.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return report;
}

inline Json suite_json(const SuiteReport& rep) {
    Json cfg{{"corpus", rep.config.corpus},
             {"max_deg", rep.config.max_deg},
             {"bivariate", {rep.config.bivariate_dx, rep.config.bivariate_dy}},
             {"laurent_window", rep.config.laurent_window},
             {"budget", rep.config.budget},
             {"prime_oracle_cap", rep.config.prime_oracle_cap},
             {"max_search_size", rep.config.max_search_size},
             {"deep_search_size", rep.config.deep_search_size},
             {"max_extension_size", rep.config.max_extension_size},
             {"stretch", rep.config.stretch}};
    Json claims = Json::array();
    for (const auto& c : rep.claims) {
        Json checks = Json::array();
        for (const auto& k : c.checks) {
            Json verdicts = Json::array();
            for (const auto& v : k.verdicts) verdicts.push_back({{"ring", v.ring}, {"summary", v.summary}, {"detail", v.detail}});
            checks.push_back({{"instance", k.instance},
                              {"outcome", outcome_name(k.outcome)},
                              {"notes", k.notes},
                              {"verdicts", verdicts},
                              {"elapsed_ms", k.elapsed_ms}});
        }
        claims.push_back({{"id", c.id},
                          {"statement", c.statement},
                          {"sub_claims", c.sub_claims},
                          {"outcome", outcome_name(c.outcome)},
                          {"checks", checks},
                          {"elapsed_ms", c.elapsed_ms}});
    }
    return {{"schema", "ringlab.suite/1"},
            {"version", kToolVersion},
            {"config", cfg},
            {"claims", claims},
            {"summary",
             {{"consistent", rep.count(Outcome::Consistent)},
              {"contradiction", rep.count(Outcome::Contradiction)},
              {"skipped", rep.count(Outcome::Skipped)},
              {"passed", rep.passed()}}}};
}

inline std::string suite_text(const SuiteReport& rep, bool verbose = false) {
    std::size_t width = 5;
    for (const auto& c : rep.claims) width = std::max(width, c.id.size());
    std::string s;
    auto pad = [](std::string x, std::size_t w) {
        x.resize(std::max(w, x.size()), ' ');
        return x;
    };
    s += pad("claim", width) + "  " + pad("outcome", 13) + "  checks  time\n";
    for (const auto& c : rep.claims) {
        std::size_t ok = 0;
        for (const auto& k : c.checks) ok += k.outcome == Outcome::Consistent;
        s += pad(c.id, width) + "  " + pad(std::string(outcome_name(c.outcome)), 13) + "  " +
             pad(std::to_string(ok) + "/" + std::to_string(c.checks.size()), 6) + "  " + ms_text(c.elapsed_ms) + "\n";
        for (const auto& k : c.checks) {
            if (!verbose && k.outcome == Outcome::Consistent) continue;
            s += "    [" + std::string(outcome_name(k.outcome)) + "] " + k.instance + "\n";
            for (const auto& v : k.verdicts) s += "      " + v.ring + ": " + v.summary + "\n";
            for (const auto& n : k.notes) s += "      " + n + "\n";
        }
    }
    s += "summary: " + std::to_string(rep.count(Outcome::Consistent)) + " consistent, " +
         std::to_string(rep.count(Outcome::Contradiction)) + " contradiction, " +
         std::to_string(rep.count(Outcome::Skipped)) + " skipped\n";
    return s;
}

}  // namespace ringlab
