#pragma once

/**
 * @file presentation.hpp
 * @brief Quadratic presentations: construction from chain covers, the
 *        8-generator 4-step fixture, and the presentation file format.
 *
 * File format (JSON, canonical form written by serialize()):
 *
 *     {
 *       "generators": ["a", "b", ...],
 *       "field": "rational" | {"mod": <prime>},
 *       "relations": [
 *         [ {"coeff": "1", "left": "x", "right": "c"}, ... ],
 *         ...
 *       ],
 *       "metadata": { ... }          // optional
 *     }
 *
 * Coefficients are decimal integer strings. Relations keep their order; terms
 * inside a relation are sorted by (left, right) in generator declaration
 * order. Two-space indentation, trailing newline.
 */

#include "qnil/chain_poset.hpp"
#include "qnil/dnk_optimizer.hpp"
#include "qnil/numeric.hpp"

#include <json.hpp>  // vendored nlohmann/json

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qnil {

inline constexpr std::string_view tool_version = "qnil 1.0.0";

using ordered_json = nlohmann::ordered_json;

struct field_spec {
    std::optional<std::uint64_t> modulus;  // empty means the rationals

    static field_spec rational() { return {}; }
    static field_spec mod(std::uint64_t p) { return {p}; }

    bool is_rational() const { return !modulus.has_value(); }
    std::string str() const { return modulus ? "GF(" + std::to_string(*modulus) + ")" : "rational"; }
    bool operator==(const field_spec&) const = default;
};

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

// Moduli are kept below 2^31 so residue products fit in 64 bits.
inline void validate_modulus(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31)) throw domain_error("modulus " + std::to_string(p) + " is too large (limit 2^31)");
    if (!is_prime(p)) throw domain_error("modulus " + std::to_string(p) + " is not a prime");
}

struct term {
    big_int coeff;
    std::size_t left = 0, right = 0;  // generator indices
    bool operator==(const term&) const = default;
};

struct quadratic_relation {
    std::vector<term> terms;

    std::set<std::pair<std::size_t, std::size_t>> support() const {
        std::set<std::pair<std::size_t, std::size_t>> s;
        for (const auto& t : terms) s.emplace(t.left, t.right);
        return s;
    }
    bool operator==(const quadratic_relation&) const = default;
};

struct presentation {
    std::vector<std::string> generators;
    std::vector<quadratic_relation> relations;
    field_spec field;
    ordered_json metadata;  // null when absent

    std::size_t n() const { return generators.size(); }
    std::size_t d() const { return relations.size(); }
    bool operator==(const presentation&) const = default;
};

// Thrown by parse() and validate(); the message carries location and cause.
class presentation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Checks the structural invariants every presentation must satisfy.
inline void validate(const presentation& p) {
    std::set<std::string> names;
    for (const auto& g : p.generators) {
        if (g.empty()) throw presentation_error("generators: empty generator name");
        if (!names.insert(g).second) throw presentation_error("generators: duplicate generator '" + g + "'");
    }
    if (p.field.modulus) validate_modulus(*p.field.modulus);
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
        const auto& rel = p.relations[r];
        const std::string where = "relations[" + std::to_string(r) + "]";
        if (rel.terms.empty()) throw presentation_error(where + ": relation has no terms");
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const auto& t : rel.terms) {
            if (t.left >= p.n() || t.right >= p.n()) throw presentation_error(where + ": generator index out of range");
            const bool zero = p.field.modulus ? (t.coeff % *p.field.modulus) == 0 : t.coeff == 0;
            if (zero) throw presentation_error(where + ": zero coefficient");
            if (!seen.emplace(t.left, t.right).second)
                throw presentation_error(where + ": duplicate support pair (" + p.generators[t.left] + ", " +
                                         p.generators[t.right] + ")");
        }
    }
}

inline quadratic_relation canonical(quadratic_relation r) {
    std::sort(r.terms.begin(), r.terms.end(),
              [](const term& a, const term& b) { return std::pair(a.left, a.right) < std::pair(b.left, b.right); });
    return r;
}

inline std::string serialize(const presentation& p) {
    ordered_json doc;
    doc["generators"] = p.generators;
    if (p.field.modulus)
        doc["field"] = ordered_json{{"mod", *p.field.modulus}};
    else
        doc["field"] = "rational";
    ordered_json rels = ordered_json::array();
    for (const auto& rel : p.relations) {
        ordered_json terms = ordered_json::array();
        for (const auto& t : canonical(rel).terms)
            terms.push_back({{"coeff", t.coeff.str()}, {"left", p.generators[t.left]}, {"right", p.generators[t.right]}});
        rels.push_back(std::move(terms));
    }
    doc["relations"] = std::move(rels);
    if (!p.metadata.is_null()) doc["metadata"] = p.metadata;
    return doc.dump(2) + "\n";
}

namespace detail {

inline std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace detail

inline presentation parse(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        // e.byte is one past the offending character
        const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
        throw presentation_error("parse error at " + detail::line_column(text, at) + ": " + e.what());
    }
    if (!doc.is_object()) throw presentation_error("top level must be an object");

    presentation p;
    if (!doc.contains("generators") || !doc["generators"].is_array())
        throw presentation_error("generators: missing or not a list");
    std::map<std::string, std::size_t> index;
    for (const auto& g : doc["generators"]) {
        if (!g.is_string()) throw presentation_error("generators: names must be strings");
        index.emplace(g.get<std::string>(), p.generators.size());
        p.generators.push_back(g.get<std::string>());
    }

    if (!doc.contains("field")) throw presentation_error("field: missing");
    const auto& field = doc["field"];
    if (field.is_string() && field.get<std::string>() == "rational") {
        p.field = field_spec::rational();
    } else if (field.is_object() && field.size() == 1 && field.contains("mod") && field["mod"].is_number_unsigned()) {
        p.field = field_spec::mod(field["mod"].get<std::uint64_t>());
        try {
            validate_modulus(*p.field.modulus);
        } catch (const domain_error& e) {
            throw presentation_error(std::string("field: ") + e.what());
        }
    } else {
        throw presentation_error("field: expected \"rational\" or {\"mod\": <prime>}");
    }

    if (!doc.contains("relations") || !doc["relations"].is_array())
        throw presentation_error("relations: missing or not a list");
    static const std::regex decimal("-?[0-9]+");
    std::size_t r = 0;
    for (const auto& rel : doc["relations"]) {
        const std::string where = "relations[" + std::to_string(r) + "]";
        if (!rel.is_array()) throw presentation_error(where + ": expected a list of terms");
        quadratic_relation out;
        std::size_t t = 0;
        for (const auto& tj : rel) {
            const std::string at = where + "[" + std::to_string(t) + "]";
            if (!tj.is_object() || !tj.contains("coeff") || !tj.contains("left") || !tj.contains("right"))
                throw presentation_error(at + ": term needs \"coeff\", \"left\" and \"right\"");
            if (!tj["coeff"].is_string() || !std::regex_match(tj["coeff"].get<std::string>(), decimal))
                throw presentation_error(at + ": coeff must be a decimal integer string");
            term tm;
            tm.coeff = big_int(tj["coeff"].get<std::string>());
            for (const char* side : {"left", "right"}) {
                if (!tj[side].is_string()) throw presentation_error(at + ": " + side + " must be a generator name");
                const auto name = tj[side].get<std::string>();
                auto it = index.find(name);
                if (it == index.end()) throw presentation_error(at + ": unknown generator '" + name + "'");
                (std::string_view(side) == "left" ? tm.left : tm.right) = it->second;
            }
            out.terms.push_back(std::move(tm));
            ++t;
        }
        p.relations.push_back(std::move(out));
        ++r;
    }
    if (doc.contains("metadata")) {
        if (!doc["metadata"].is_object()) throw presentation_error("metadata: must be a map");
        p.metadata = doc["metadata"];
    }
    validate(p);
    return p;
}

/// One relation f = sum of ab over each chain of a minimum chain cover, all coefficients 1.
inline presentation presentation_from_partition(const block_partition& bp, std::vector<std::string> names,
                                                std::size_t cover_cap = default_cover_cap) {
    if (names.size() != bp.n()) throw domain_error("presentation_from_partition: name count differs from n");
    const auto poset = build_poset(bp);
    const auto cover = min_chain_cover(poset, cover_cap);
    presentation p;
    p.generators = std::move(names);
    for (const auto& chain : cover.chains) {
        quadratic_relation rel;
        for (auto idx : chain) rel.terms.push_back({1, poset.elements[idx].left, poset.elements[idx].right});
        p.relations.push_back(canonical(std::move(rel)));
    }
    return p;
}

/**
 * n generators, d_{n,k} relations, R_k = 0. The optimal composition of n
 * into k - 1 parts fixes the blocks; a partition into p blocks yields
 * (p + 1)-step nilpotency.
 */
inline presentation construct_presentation(std::uint64_t n, unsigned k, std::size_t cover_cap = default_cover_cap) {
    const auto opt = dnk_exact(n, k);
    std::vector<std::size_t> sizes(opt.witness.parts().begin(), opt.witness.parts().end());
    block_partition bp(sizes);
    auto p = presentation_from_partition(bp, bp.default_names(), cover_cap);
    if (p.d() != opt.value) throw std::logic_error("construct_presentation: relation count differs from d_{n,k}");
    p.metadata = ordered_json{{"n", n}, {"k", k}, {"partition", sizes}, {"d", opt.value}, {"tool", tool_version}};
    return p;
}

/**
 * The 25 relations on {a,b,c,p,q,x,y,z} with blocks {a,b,c}, {p,q}, {x,y,z};
 * every support is a chain and the supports cover M, so R_4 = 0.
 */
inline presentation ex8_fixture() {
    presentation p;
    p.generators = {"a", "b", "c", "p", "q", "x", "y", "z"};
    auto g = [&](char c) {
        return static_cast<std::size_t>(std::find(p.generators.begin(), p.generators.end(), std::string(1, c)) -
                                        p.generators.begin());
    };
    // each string lists the monomials of one relation, f_1 .. f_25
    static const char* const rels[] = {
        "xc",       "xa",       "xp ab",    "yz qc",    "pq",       "yc",       "ya",       "yp bb",    "yy qb",
        "zc",       "za",       "zp cb",    "yx qa",    "xb",       "xq ac",    "xz pc",    "zz qq ca", "yb",
        "yq bc",    "xy pb",    "zy qp ba", "zb",       "zq cc",    "xx pa",    "zx pp aa",
    };
    for (const char* spec : rels) {
        quadratic_relation rel;
        for (std::string_view s(spec); !s.empty();) {
            rel.terms.push_back({1, g(s[0]), g(s[1])});
            s.remove_prefix(std::min<std::size_t>(3, s.size()));
        }
        p.relations.push_back(canonical(std::move(rel)));
    }
    p.metadata = ordered_json{{"n", 8}, {"k", 4}, {"partition", {3, 2, 3}}, {"d", 25}, {"tool", tool_version}};
    return p;
}

inline block_partition ex8_partition() { return block_partition({3, 2, 3}); }

}  // namespace qnil
