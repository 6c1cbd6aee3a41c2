#pragma once

// Finite unital rings stored as dense addition/multiplication tables.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/error.hpp"

namespace ringlab {

/// Dense element index into a ring's tables.
using Elem = std::uint32_t;

/// Constructions refuse rings larger than this.
inline constexpr std::size_t kMaxRingSize = 4096;

class RingTable;
using RingRef = std::shared_ptr<const RingTable>;

/// How the elements of a matrix-shaped construction are encoded.
///
/// An element index is a mixed-radix number over the base ring whose digits
/// are the entries at `positions`, most significant digit first. For the
/// constant-diagonal shape the first digit is the shared diagonal value and
/// the remaining digits are the strictly upper entries.
struct MatrixLayout {
    enum class Shape { Full, UpperTriangular, ConstantDiagonal };
    Shape shape = Shape::Full;
    std::size_t n = 0;
    RingRef base;
    std::vector<std::pair<std::size_t, std::size_t>> positions;

    /// Full n×n entry grid (row-major) for the element `index`.
    std::vector<Elem> entries(Elem index) const;
    /// Inverse of entries(); entries outside the shape must be zero.
    Elem encode(std::span<const Elem> grid) const;
};

class RingTable {
public:
    /// Checks dimensions and index ranges; throws StructuralError on mismatch.
    /// Ring axioms are not checked here; see validate_axioms().
    RingTable(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul, Elem zero, Elem one,
              std::vector<std::string> labels = {})
        : size_(size), add_(std::move(add)), mul_(std::move(mul)), zero_(zero), one_(one),
          labels_(std::move(labels)) {
        if (size_ == 0) throw StructuralError("ring size must be positive");
        if (add_.size() != size_ * size_) throw StructuralError("add table must be size x size");
        if (mul_.size() != size_ * size_) throw StructuralError("mul table must be size x size");
        if (zero_ >= size_ || one_ >= size_) throw StructuralError("zero/one index out of range");
        if (!labels_.empty() && labels_.size() != size_)
            throw StructuralError("labels must have one entry per element");
        for (Elem e : add_)
            if (e >= size_) throw StructuralError("add table entry out of range");
        for (Elem e : mul_)
            if (e >= size_) throw StructuralError("mul table entry out of range");
        neg_.assign(size_, kNoInverse);
        for (std::size_t a = 0; a < size_; ++a)
            for (std::size_t b = 0; b < size_; ++b)
                if (add_[a * size_ + b] == zero_) {
                    neg_[a] = static_cast<Elem>(b);
                    break;
                }
    }

    std::size_t size() const noexcept { return size_; }
    Elem zero() const noexcept { return zero_; }
    Elem one() const noexcept { return one_; }
    bool is_zero_ring() const noexcept { return size_ == 1; }

    Elem add(Elem a, Elem b) const noexcept { return add_[a * size_ + b]; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[a * size_ + b]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    bool has_negation(Elem a) const noexcept { return neg_[a] != kNoInverse; }

    std::span<const Elem> add_table() const noexcept { return add_; }
    std::span<const Elem> mul_table() const noexcept { return mul_; }
    /// Row a of the multiplication table: b ↦ a·b.
    std::span<const Elem> mul_row(Elem a) const noexcept {
        return std::span<const Elem>(mul_).subspan(a * size_, size_);
    }

    std::string label(Elem a) const { return labels_.empty() ? std::to_string(a) : labels_[a]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    const std::optional<MatrixLayout>& matrix_layout() const noexcept { return layout_; }
    void set_matrix_layout(MatrixLayout layout) { layout_ = std::move(layout); }

private:
    static constexpr Elem kNoInverse = ~Elem{0};

    std::size_t size_;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    Elem zero_;
    Elem one_;
    std::vector<std::string> labels_;
    std::optional<MatrixLayout> layout_;
};

inline std::vector<Elem> MatrixLayout::entries(Elem index) const {
    const std::size_t q = base->size();
    std::vector<Elem> digits(positions.size());
    for (std::size_t k = positions.size(); k-- > 0;) {
        digits[k] = static_cast<Elem>(index % q);
        index /= static_cast<Elem>(q);
    }
    std::vector<Elem> grid(n * n, base->zero());
    if (shape == Shape::ConstantDiagonal) {
        for (std::size_t i = 0; i < n; ++i) grid[i * n + i] = digits[0];
        for (std::size_t k = 1; k < positions.size(); ++k)
            grid[positions[k].first * n + positions[k].second] = digits[k];
    } else {
        for (std::size_t k = 0; k < positions.size(); ++k)
            grid[positions[k].first * n + positions[k].second] = digits[k];
    }
    return grid;
}

inline Elem MatrixLayout::encode(std::span<const Elem> grid) const {
    const std::size_t q = base->size();
    std::size_t index = 0;
    for (const auto& [i, j] : positions) index = index * q + grid[i * n + j];
    return static_cast<Elem>(index);
}

// ---------------------------------------------------------------------------
// Axiom validation

struct AxiomViolation {
    std::string law;
    std::vector<Elem> witnesses;
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    /// Set for the one-element ring, which satisfies every law degenerately.
    bool trivial = false;

    bool ok() const noexcept { return violations.empty(); }
    bool violates(const std::string& law) const {
        for (const auto& v : violations)
            if (v.law == law) return true;
        return false;
    }
};

/// Exhaustive check of the unital ring laws; records the first counterexample per law.
inline AxiomReport validate_axioms(const RingTable& r) {
    AxiomReport report;
    report.trivial = r.is_zero_ring();
    const auto n = static_cast<Elem>(r.size());
    auto note = [&](const char* law, std::vector<Elem> w) {
        if (!report.violates(law)) report.violations.push_back({law, std::move(w)});
    };

    for (Elem a = 0; a < n; ++a) {
        if (r.add(r.zero(), a) != a || r.add(a, r.zero()) != a) note("additive-identity", {a});
        if (!r.has_negation(a)) note("additive-inverse", {a});
        if (r.mul(r.one(), a) != a || r.mul(a, r.one()) != a) note("multiplicative-identity", {a});
        for (Elem b = 0; b < n; ++b)
            if (r.add(a, b) != r.add(b, a)) note("additive-commutativity", {a, b});
    }
    if (r.zero() == r.one() && n > 1) note("zero-equals-one", {r.zero()});

    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
            const Elem ab_add = r.add(a, b);
            const Elem ab_mul = r.mul(a, b);
            for (Elem c = 0; c < n; ++c) {
                if (r.add(ab_add, c) != r.add(a, r.add(b, c))) note("additive-associativity", {a, b, c});
                if (r.mul(ab_mul, c) != r.mul(a, r.mul(b, c))) note("multiplicative-associativity", {a, b, c});
                if (r.mul(a, r.add(b, c)) != r.add(ab_mul, r.mul(a, c))) note("left-distributivity", {a, b, c});
                if (r.mul(ab_add, c) != r.add(r.mul(a, c), r.mul(b, c))) note("right-distributivity", {a, b, c});
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Element predicates

/// a^k for k ≥ 1.
inline Elem power(const RingTable& r, Elem a, std::size_t k) {
    Elem p = r.one();
    for (std::size_t i = 0; i < k; ++i) p = r.mul(p, a);
    return p;
}

/// Smallest k ≥ 1 with a^k = 0, if any exists with k ≤ size.
inline std::optional<std::size_t> nilpotency_index(const RingTable& r, Elem a) {
    Elem p = a;
    for (std::size_t k = 1; k <= r.size(); ++k) {
        if (p == r.zero()) return k;
        p = r.mul(p, a);
    }
    return std::nullopt;
}

inline bool is_nilpotent_element(const RingTable& r, Elem a) {
    return nilpotency_index(r, a).has_value();
}

inline bool is_idempotent(const RingTable& r, Elem a) { return r.mul(a, a) == a; }

inline bool is_central(const RingTable& r, Elem a) {
    for (Elem x = 0; x < r.size(); ++x)
        if (r.mul(a, x) != r.mul(x, a)) return false;
    return true;
}

/// Neither a left nor a right zero divisor.
inline bool is_regular(const RingTable& r, Elem a) {
    for (Elem b = 0; b < r.size(); ++b) {
        if (b == r.zero()) continue;
        if (r.mul(a, b) == r.zero() || r.mul(b, a) == r.zero()) return false;
    }
    return true;
}

inline std::optional<Elem> inverse(const RingTable& r, Elem a) {
    for (Elem b = 0; b < r.size(); ++b)
        if (r.mul(a, b) == r.one() && r.mul(b, a) == r.one()) return b;
    return std::nullopt;
}

inline bool is_unit(const RingTable& r, Elem a) { return inverse(r, a).has_value(); }

/// 64-bit FNV-1a digest of the tables and distinguished elements, as hex.
inline std::string table_digest(const RingTable& r) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 4; ++i) {
            h ^= (v >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    mix(r.size());
    mix(r.zero());
    mix(r.one());
    for (Elem e : r.add_table()) mix(e);
    for (Elem e : r.mul_table()) mix(e);
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kHex[h & 0xf];
    return out;
}

}  // namespace ringlab
