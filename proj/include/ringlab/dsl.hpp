#pragma once

// Ring-construction expressions: parser, canonical printer, evaluator.
//
//   expr  := "Z/" INT | "M(" INT "," expr ")" | "T(" INT "," expr ")"
//          | "CD(" INT "," expr ")" | "trivext(" expr ")"
//          | "truncpoly(" expr "," INT ")" | "prod(" expr "," expr ")"
//          | "quot(" expr "," elems ")" | "corner(" expr "," INT ")"
//          | "loc(" expr "," elems ")" | "sub(" expr "," elems ")"
//          | "file(" PATH ")"
//   elems := "[" INT ("," INT)* "]" | "[]"
//
// Whitespace is allowed between tokens. Element integers are indices into
// the inner ring.

#include <cctype>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/constructions.hpp"
#include "ringlab/error.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/table_io.hpp"

namespace ringlab {

struct RingExpr {
    enum class Kind { Cyclic, Matrix, Triangular, ConstDiag, TrivExt, TruncPoly, Product, Quotient, Corner,
                      Localize, Subring, File };
    Kind kind = Kind::Cyclic;
    std::size_t number = 0;        // Z/n, matrix n, truncpoly n, corner idempotent
    std::vector<Elem> elems;       // quot/loc/sub arguments
    std::string path;              // file(...)
    std::vector<RingExpr> args;    // sub-expressions

    bool operator==(const RingExpr&) const = default;
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : s_(text) {}

    RingExpr parse_all() {
        RingExpr e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::size_t integer() {
        skip();
        const std::size_t start = pos_;
        std::size_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (v > (1u << 30)) fail("integer too large");
            v = v * 10 + static_cast<std::size_t>(s_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) fail("expected integer");
        return v;
    }

    std::vector<Elem> elems() {
        std::vector<Elem> out;
        expect('[');
        skip();
        if (pos_ < s_.size() && s_[pos_] == ']') {
            ++pos_;
            return out;
        }
        for (;;) {
            out.push_back(static_cast<Elem>(integer()));
            skip();
            if (pos_ < s_.size() && s_[pos_] == ',') {
                ++pos_;
                continue;
            }
            expect(']');
            return out;
        }
    }

    std::string name() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected ring expression");
        return std::string(s_.substr(start, pos_ - start));
    }

    RingExpr expr() {
        skip();
        const std::size_t start = pos_;
        const std::string head = name();
        RingExpr e;
        using K = RingExpr::Kind;
        if (head == "Z") {
            expect('/');
            e.kind = K::Cyclic;
            e.number = integer();
            return e;
        }
        auto sized = [&](K k) {
            e.kind = k;
            expect('(');
            e.number = integer();
            expect(',');
            e.args.push_back(expr());
            expect(')');
        };
        auto with_elems = [&](K k) {
            e.kind = k;
            expect('(');
            e.args.push_back(expr());
            expect(',');
            e.elems = elems();
            expect(')');
        };
        if (head == "M") sized(K::Matrix);
        else if (head == "T") sized(K::Triangular);
        else if (head == "CD") sized(K::ConstDiag);
        else if (head == "trivext") {
            e.kind = K::TrivExt;
            expect('(');
            e.args.push_back(expr());
            expect(')');
        } else if (head == "truncpoly" || head == "corner") {
            e.kind = head == "corner" ? K::Corner : K::TruncPoly;
            expect('(');
            e.args.push_back(expr());
            expect(',');
            e.number = integer();
            expect(')');
        } else if (head == "prod") {
            e.kind = K::Product;
            expect('(');
            e.args.push_back(expr());
            expect(',');
            e.args.push_back(expr());
            expect(')');
        } else if (head == "quot") with_elems(K::Quotient);
        else if (head == "loc") with_elems(K::Localize);
        else if (head == "sub") with_elems(K::Subring);
        else if (head == "file") {
            e.kind = K::File;
            expect('(');
            skip();
            const std::size_t p0 = pos_;
            while (pos_ < s_.size() && s_[pos_] != ')') ++pos_;
            std::string_view path = s_.substr(p0, pos_ - p0);
            while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.remove_suffix(1);
            if (path.empty()) fail("expected path");
            e.path = std::string(path);
            expect(')');
        } else {
            pos_ = start;
            fail("unknown construction '" + head + "'");
        }
        return e;
    }
};

inline std::string print_elems(const std::vector<Elem>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
    return s + "]";
}

inline Elem checked_elem(const RingTable& r, Elem x) {
    if (x >= r.size())
        throw StructuralError("element index " + std::to_string(x) + " out of range for ring of size " +
                              std::to_string(r.size()));
    return x;
}

}  // namespace detail

inline RingExpr parse_expr(std::string_view text) { return detail::ExprParser(text).parse_all(); }

/// Canonical text form; parse_expr(print_expr(e)) == e.
inline std::string print_expr(const RingExpr& e) {
    using K = RingExpr::Kind;
    const auto n = std::to_string(e.number);
    switch (e.kind) {
        case K::Cyclic: return "Z/" + n;
        case K::Matrix: return "M(" + n + ", " + print_expr(e.args[0]) + ")";
        case K::Triangular: return "T(" + n + ", " + print_expr(e.args[0]) + ")";
        case K::ConstDiag: return "CD(" + n + ", " + print_expr(e.args[0]) + ")";
        case K::TrivExt: return "trivext(" + print_expr(e.args[0]) + ")";
        case K::TruncPoly: return "truncpoly(" + print_expr(e.args[0]) + ", " + n + ")";
        case K::Product: return "prod(" + print_expr(e.args[0]) + ", " + print_expr(e.args[1]) + ")";
        case K::Quotient: return "quot(" + print_expr(e.args[0]) + ", " + detail::print_elems(e.elems) + ")";
        case K::Corner: return "corner(" + print_expr(e.args[0]) + ", " + n + ")";
        case K::Localize: return "loc(" + print_expr(e.args[0]) + ", " + detail::print_elems(e.elems) + ")";
        case K::Subring: return "sub(" + print_expr(e.args[0]) + ", " + detail::print_elems(e.elems) + ")";
        case K::File: return "file(" + e.path + ")";
    }
    return {};
}

/// Builds the ring. Tables read through file(...) must satisfy the ring axioms.
inline RingRef evaluate(const RingExpr& e) {
    using K = RingExpr::Kind;
    auto elems_of = [&](const RingRef& r) {
        std::vector<Elem> xs;
        for (Elem x : e.elems) xs.push_back(detail::checked_elem(*r, x));
        return xs;
    };
    switch (e.kind) {
        case K::Cyclic:
            if (e.number == 0) throw StructuralError("Z/0 is not a finite ring");
            return cyclic(e.number);
        case K::Matrix: return matrix_ring(e.number, evaluate(e.args[0]));
        case K::Triangular: return upper_triangular(e.number, evaluate(e.args[0]));
        case K::ConstDiag: return constant_diagonal(e.number, evaluate(e.args[0]));
        case K::TrivExt: return trivial_extension(evaluate(e.args[0]));
        case K::TruncPoly: return truncated_poly_ring(evaluate(e.args[0]), e.number);
        case K::Product: return direct_product(evaluate(e.args[0]), evaluate(e.args[1]));
        case K::Quotient: {
            const RingRef r = evaluate(e.args[0]);
            return ideal_quotient(r, elems_of(r)).ring;
        }
        case K::Corner: {
            const RingRef r = evaluate(e.args[0]);
            return corner(r, detail::checked_elem(*r, static_cast<Elem>(e.number))).ring;
        }
        case K::Localize: {
            const RingRef r = evaluate(e.args[0]);
            return localization(r, elems_of(r)).ring;
        }
        case K::Subring: {
            const RingRef r = evaluate(e.args[0]);
            return subring_generated(r, elems_of(r)).ring;
        }
        case K::File: {
            auto r = std::make_shared<const RingTable>(read_ring_file(e.path));
            const AxiomReport rep = validate_axioms(*r);
            if (!rep.ok()) throw StructuralError(e.path + ": table violates " + rep.violations.front().law);
            return r;
        }
    }
    throw DefectError("unhandled expression kind");
}

inline RingRef evaluate(std::string_view text) { return evaluate(parse_expr(text)); }

}  // namespace ringlab
