#pragma once

// Enumeration of polynomial pairs (f, g) whose product satisfies a
// coefficientwise hypothesis (every product coefficient zero, or every one
// nilpotent). f runs over all coefficient assignments in lexicographic
// order; for each f a depth-first search fills g slot by slot and drops a
// partial g as soon as a product coefficient that no later slot can touch
// violates the hypothesis. Slot candidates come from precomputed fibers of
// left multiplication, so whole subtrees are never generated.
//
// Work is split into contiguous chunks of the f range. The reported first
// hit is the lexicographically least one and the node count is the count a
// sequential scan would produce up to that hit, whatever the job count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <thread>
#include <vector>

#include "ringlab/error.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

/// Which coefficient slots of f and g are free; every other slot is zero.
/// Both slot lists are ascending and start at 0.
struct PairSpace {
    std::vector<std::size_t> f_slots;
    std::vector<std::size_t> g_slots;

    std::size_t product_len() const { return f_slots.back() + g_slots.back() + 1; }
    std::size_t f_len() const { return f_slots.back() + 1; }
    std::size_t g_len() const { return g_slots.back() + 1; }

    /// Polynomials of degree ≤ d.
    static PairSpace univariate(std::size_t d) {
        PairSpace s;
        for (std::size_t i = 0; i <= d; ++i) s.f_slots.push_back(i);
        s.g_slots = s.f_slots;
        return s;
    }
    /// Images of p(y) = Σ_{i≤dy} f_i(x) y^i, deg f_i ≤ dx, under y ↦ x^k with
    /// k = 2·dx + 1, the least exponent that keeps products apart.
    static PairSpace bivariate(std::size_t dx, std::size_t dy) {
        PairSpace s;
        const std::size_t k = 2 * dx + 1;
        for (std::size_t i = 0; i <= dy; ++i)
            for (std::size_t c = 0; c <= dx; ++c) s.f_slots.push_back(i * k + c);
        s.g_slots = s.f_slots;
        return s;
    }
};

struct SearchOptions {
    std::uint64_t budget = kDefaultSearchBudget;
    unsigned jobs = 1;
    /// Nonzero switches to sampling: that many uniformly random f, each with
    /// a full search over g.
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

struct SearchStats {
    std::uint64_t nodes = 0;  // f candidates plus accepted partial g assignments
    std::uint64_t pairs = 0;  // complete pairs satisfying the hypothesis
    bool sampled = false;
};

/// Slot values of a pair, aligned with PairSpace::f_slots / g_slots.
struct PairValues {
    std::vector<Elem> f;
    std::vector<Elem> g;
    bool operator==(const PairValues&) const = default;
};

struct SearchResult {
    std::optional<PairValues> first_hit;
    SearchStats stats;
};

class PairSearch {
public:
    /// `allowed[c]` says whether c may occur as a product coefficient.
    PairSearch(const RingTable& ring, PairSpace space, std::vector<bool> allowed)
        : r_(ring), space_(std::move(space)), allowed_(std::move(allowed)) {
        if (space_.f_slots.empty() || space_.g_slots.empty() || space_.f_slots.front() != 0 ||
            space_.g_slots.front() != 0)
            throw PreconditionError("pair space slots must start at 0");
        if (allowed_.size() != r_.size()) throw PreconditionError("hypothesis mask has the wrong size");
        const std::size_t n = r_.size();
        zero_only_ = true;
        for (Elem c = 0; c < n; ++c)
            if (allowed_[c] != (c == r_.zero())) zero_only_ = false;
        if (zero_only_) build_fibers();
    }

    const PairSpace& space() const noexcept { return space_; }

    /// Lexicographically least pair satisfying the hypothesis for which
    /// `hit(f, g)` returns true. `hit` must be safe to call concurrently.
    template <class Pred>
    SearchResult find_first(Pred&& hit, const SearchOptions& opt) const {
        if (opt.samples > 0) return sample(hit, opt);
        const std::uint64_t total = f_count();
        const unsigned jobs = std::max(1u, opt.jobs);
        const std::uint64_t chunks = jobs == 1 ? 1 : std::min<std::uint64_t>(total, std::uint64_t{jobs} * 64);
        std::vector<ChunkState> state(chunks);
        std::atomic<std::uint64_t> next_chunk{0};
        std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
        std::atomic<std::uint64_t> global_nodes{0};

        auto worker = [&] {
            for (;;) {
                const std::uint64_t c = next_chunk.fetch_add(1);
                if (c >= chunks) return;
                if (c > best.load()) continue;
                const std::uint64_t lo = total / chunks * c + std::min(c, total % chunks);
                const std::uint64_t hi = lo + total / chunks + (c < total % chunks ? 1 : 0);
                run_chunk(c, lo, hi, state[c], hit, opt.budget, best, global_nodes);
            }
        };
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }

        SearchResult out;
        for (std::uint64_t c = 0; c < chunks; ++c) {
            const ChunkState& s = state[c];
            if (s.status == ChunkStatus::Aborted || s.status == ChunkStatus::Pending)
                throw BudgetExceeded("pair search exceeded its node budget of " + std::to_string(opt.budget),
                                     out.stats.nodes + s.nodes);
            out.stats.nodes += s.nodes;
            out.stats.pairs += s.pairs;
            if (out.stats.nodes > opt.budget)
                throw BudgetExceeded("pair search exceeded its node budget of " + std::to_string(opt.budget),
                                     out.stats.nodes);
            if (s.status == ChunkStatus::Hit) {
                out.first_hit = s.hit;
                break;
            }
        }
        return out;
    }

    /// Sequential visit of every pair satisfying the hypothesis, in
    /// lexicographic order. `visit(f, g)` returns true to stop early.
    template <class Visit>
    SearchStats for_each(Visit&& visit, std::uint64_t budget = kDefaultSearchBudget) const {
        ChunkState s;
        std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
        std::atomic<std::uint64_t> global_nodes{0};
        run_chunk(0, 0, f_count(), s, visit, budget, best, global_nodes);
        if (s.status == ChunkStatus::Aborted)
            throw BudgetExceeded("pair enumeration exceeded its node budget of " + std::to_string(budget), s.nodes);
        return {s.nodes, s.pairs, false};
    }

    /// Number of f candidates, saturating at the uint64 maximum.
    std::uint64_t f_count() const {
        std::uint64_t v = 1;
        for (std::size_t k = 0; k < space_.f_slots.size(); ++k) {
            if (v > std::numeric_limits<std::uint64_t>::max() / r_.size())
                return std::numeric_limits<std::uint64_t>::max();
            v *= r_.size();
        }
        return v;
    }

private:
    enum class ChunkStatus { Pending, Done, Hit, Aborted };
    struct ChunkState {
        ChunkStatus status = ChunkStatus::Pending;
        std::uint64_t nodes = 0;
        std::uint64_t pairs = 0;
        PairValues hit;
    };

    struct Meter {
        std::uint64_t& nodes;
        std::uint64_t budget;
        std::atomic<std::uint64_t>& global;
        std::uint64_t unpublished = 0;

        bool tick() {
            ++nodes;
            if (nodes > budget) return false;
            if (++unpublished == 4096) {
                const std::uint64_t g = global.fetch_add(unpublished) + unpublished;
                unpublished = 0;
                if (g > budget) return false;
            }
            return true;
        }
        void flush() {
            global.fetch_add(unpublished);
            unpublished = 0;
        }
    };

    void build_fibers() {
        const std::size_t n = r_.size();
        fiber_offsets_.assign(n * n + 1, 0);
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) ++fiber_offsets_[a * n + r_.mul(a, b) + 1];
        for (std::size_t k = 1; k <= n * n; ++k) fiber_offsets_[k] += fiber_offsets_[k - 1];
        fiber_elems_.assign(n * n, 0);
        std::vector<std::uint32_t> fill(fiber_offsets_.begin(), fiber_offsets_.end() - 1);
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) fiber_elems_[fill[a * n + r_.mul(a, b)]++] = b;
    }

    /// Elements b with a·b = c, ascending.
    std::span<const Elem> fiber(Elem a, Elem c) const {
        const std::size_t k = a * r_.size() + c;
        return std::span<const Elem>(fiber_elems_).subspan(fiber_offsets_[k], fiber_offsets_[k + 1] - fiber_offsets_[k]);
    }

    void decode_f(std::uint64_t index, std::vector<Elem>& f) const {
        for (std::size_t k = f.size(); k-- > 0;) {
            f[k] = static_cast<Elem>(index % r_.size());
            index /= r_.size();
        }
    }

    enum class Outcome { Exhausted, Stopped, OutOfBudget };

    /// Search over g for a fixed f. `accs[m]` holds product coefficients
    /// contributed by g slots before m.
    template <class Visit>
    Outcome search_g(const std::vector<Elem>& f, std::vector<Elem>& g, std::vector<std::vector<Elem>>& accs,
                     std::size_t m, Visit& visit, Meter& meter, std::uint64_t& pairs) const {
        const auto& fs = space_.f_slots;
        const auto& gs = space_.g_slots;
        const std::size_t len = space_.product_len();
        const std::size_t j = gs[m];
        const std::size_t upto = m + 1 < gs.size() ? gs[m + 1] : len;
        const Elem known = accs[m][j];
        const Elem a0 = f[0];

        auto try_value = [&](Elem b) -> std::optional<Outcome> {
            if (!meter.tick()) return Outcome::OutOfBudget;
            auto& acc = accs[m + 1];
            acc = accs[m];
            for (std::size_t p = 0; p < fs.size(); ++p)
                if (f[p] != r_.zero()) acc[fs[p] + j] = r_.add(acc[fs[p] + j], r_.mul(f[p], b));
            for (std::size_t t = j + 1; t < upto; ++t)
                if (!allowed_[acc[t]]) return std::nullopt;
            g[m] = b;
            if (m + 1 == gs.size()) {
                ++pairs;
                if (visit(std::as_const(f), std::as_const(g))) return Outcome::Stopped;
                return std::nullopt;
            }
            const Outcome o = search_g(f, g, accs, m + 1, visit, meter, pairs);
            if (o != Outcome::Exhausted) return o;
            return std::nullopt;
        };

        if (zero_only_) {
            for (Elem b : fiber(a0, r_.neg(known)))
                if (auto o = try_value(b)) return *o;
        } else {
            for (Elem b = 0; b < r_.size(); ++b)
                if (allowed_[r_.add(known, r_.mul(a0, b))])
                    if (auto o = try_value(b)) return *o;
        }
        return Outcome::Exhausted;
    }

    template <class Visit>
    Outcome search_f(const std::vector<Elem>& f, Visit& visit, Meter& meter, std::uint64_t& pairs) const {
        if (!meter.tick()) return Outcome::OutOfBudget;
        std::vector<Elem> g(space_.g_slots.size(), r_.zero());
        std::vector<std::vector<Elem>> accs(space_.g_slots.size() + 1,
                                            std::vector<Elem>(space_.product_len(), r_.zero()));
        return search_g(f, g, accs, 0, visit, meter, pairs);
    }

    template <class Pred>
    void run_chunk(std::uint64_t chunk, std::uint64_t lo, std::uint64_t hi, ChunkState& s, Pred& hit,
                   std::uint64_t budget, std::atomic<std::uint64_t>& best,
                   std::atomic<std::uint64_t>& global_nodes) const {
        Meter meter{s.nodes, budget, global_nodes};
        std::vector<Elem> f(space_.f_slots.size());
        auto visit = [&](const std::vector<Elem>& fv, const std::vector<Elem>& gv) {
            if (!hit(fv, gv)) return false;
            s.hit = PairValues{fv, gv};
            return true;
        };
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            if (best.load(std::memory_order_relaxed) < chunk) {
                // An earlier chunk already holds the answer.
                s.status = ChunkStatus::Done;
                meter.flush();
                return;
            }
            decode_f(idx, f);
            const Outcome o = search_f(f, visit, meter, s.pairs);
            if (o == Outcome::OutOfBudget) {
                s.status = ChunkStatus::Aborted;
                meter.flush();
                return;
            }
            if (o == Outcome::Stopped) {
                s.status = ChunkStatus::Hit;
                std::uint64_t cur = best.load();
                while (chunk < cur && !best.compare_exchange_weak(cur, chunk)) {
                }
                meter.flush();
                return;
            }
        }
        s.status = ChunkStatus::Done;
        meter.flush();
    }

    template <class Pred>
    SearchResult sample(Pred& hit, const SearchOptions& opt) const {
        SearchResult out;
        out.stats.sampled = true;
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<Elem> digit(0, static_cast<Elem>(r_.size() - 1));
        std::atomic<std::uint64_t> global{0};
        Meter meter{out.stats.nodes, opt.budget, global};
        std::optional<PairValues> found;
        auto visit = [&](const std::vector<Elem>& fv, const std::vector<Elem>& gv) {
            if (!hit(fv, gv)) return false;
            found = PairValues{fv, gv};
            return true;
        };
        std::vector<Elem> f(space_.f_slots.size());
        for (std::uint64_t k = 0; k < opt.samples; ++k) {
            for (auto& v : f) v = digit(rng);
            const Outcome o = search_f(f, visit, meter, out.stats.pairs);
            if (o == Outcome::OutOfBudget)
                throw BudgetExceeded("sampled search exceeded its node budget of " + std::to_string(opt.budget),
                                     out.stats.nodes);
            if (o == Outcome::Stopped) break;
        }
        out.first_hit = found;
        return out;
    }

    const RingTable& r_;
    PairSpace space_;
    std::vector<bool> allowed_;
    bool zero_only_ = false;
    std::vector<std::uint32_t> fiber_offsets_;
    std::vector<Elem> fiber_elems_;
};

/// Every pair (f, g) of degree ≤ `degree` whose product coefficients all lie
/// in `allowed`, in lexicographic order.
inline std::vector<PairValues> annihilator_pairs(const RingTable& r, std::size_t degree, std::vector<bool> allowed,
                                                 std::uint64_t budget = kDefaultSearchBudget) {
    std::vector<PairValues> out;
    PairSearch search(r, PairSpace::univariate(degree), std::move(allowed));
    search.for_each(
        [&](const std::vector<Elem>& f, const std::vector<Elem>& g) {
            out.push_back({f, g});
            return false;
        },
        budget);
    return out;
}

/// Hypothesis mask accepting only zero coefficients.
inline std::vector<bool> zero_mask(const RingTable& r) {
    std::vector<bool> m(r.size(), false);
    m[r.zero()] = true;
    return m;
}

/// Spreads slot values into a dense coefficient vector of length `len`.
inline std::vector<Elem> spread(std::span<const Elem> values, std::span<const std::size_t> slots, std::size_t len,
                                Elem zero) {
    std::vector<Elem> out(len, zero);
    for (std::size_t k = 0; k < slots.size(); ++k) out[slots[k]] = values[k];
    return out;
}

}  // namespace ringlab
