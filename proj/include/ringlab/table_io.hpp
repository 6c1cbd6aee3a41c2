#pragma once

// Ring table documents:
//   {"size": n, "add": [[...]], "mul": [[...]], "zero": z, "one": o, "labels": [...]}
// Keys are written in that order with compact separators, so export -> import
// -> export reproduces the same bytes.

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "ringlab/ring.hpp"

namespace ringlab {

inline nlohmann::ordered_json ring_to_json(const RingTable& r) {
    const std::size_t n = r.size();
    nlohmann::ordered_json doc;
    doc["size"] = n;
    auto table = [n](std::span<const Elem> t) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (std::size_t a = 0; a < n; ++a)
            rows.push_back(std::vector<Elem>(t.begin() + static_cast<std::ptrdiff_t>(a * n),
                                             t.begin() + static_cast<std::ptrdiff_t>((a + 1) * n)));
        return rows;
    };
    doc["add"] = table(r.add_table());
    doc["mul"] = table(r.mul_table());
    doc["zero"] = r.zero();
    doc["one"] = r.one();
    if (!r.labels().empty()) doc["labels"] = r.labels();
    return doc;
}

inline std::string export_ring(const RingTable& r) { return ring_to_json(r).dump() + "\n"; }

/// Structural problems (missing keys, ragged rows, out-of-range entries) raise
/// StructuralError. Ring axioms are not checked.
inline RingTable ring_from_json(const nlohmann::json& doc) {
    auto require = [&](const char* key) -> const nlohmann::json& {
        if (!doc.is_object() || !doc.contains(key))
            throw StructuralError(std::string("ring document missing key '") + key + "'");
        return doc.at(key);
    };
    auto index = [](const nlohmann::json& v, const char* what) -> std::size_t {
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
            throw StructuralError(std::string(what) + " must be a non-negative integer");
        return v.get<std::size_t>();
    };
    const std::size_t n = index(require("size"), "size");
    if (n == 0) throw StructuralError("size must be positive");
    if (n > kMaxRingSize) throw CapExceeded("ring document exceeds the size cap");
    auto table = [&](const char* key) {
        const auto& rows = require(key);
        if (!rows.is_array() || rows.size() != n)
            throw StructuralError(std::string(key) + " must have size rows");
        std::vector<Elem> flat;
        flat.reserve(n * n);
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != n)
                throw StructuralError(std::string(key) + " rows must have size entries");
            for (const auto& v : row) {
                const std::size_t e = index(v, key);
                if (e >= n) throw StructuralError(std::string(key) + " entry out of range");
                flat.push_back(static_cast<Elem>(e));
            }
        }
        return flat;
    };
    auto add = table("add");
    auto mul = table("mul");
    const auto zero = index(require("zero"), "zero");
    const auto one = index(require("one"), "one");
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array()) throw StructuralError("labels must be an array");
        for (const auto& l : doc["labels"]) {
            if (!l.is_string()) throw StructuralError("labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }
    if (zero >= n || one >= n) throw StructuralError("zero/one index out of range");
    return RingTable(n, std::move(add), std::move(mul), static_cast<Elem>(zero), static_cast<Elem>(one),
                     std::move(labels));
}

inline RingTable import_ring(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw StructuralError(std::string("ring document is not valid JSON: ") + e.what());
    }
    return ring_from_json(doc);
}

inline RingTable read_ring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open ring file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return import_ring(buf.str());
}

}  // namespace ringlab
