#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsync {

using Element = std::uint32_t;

// A finite group as an explicit Cayley table. Elements are dense indices
// 0..order-1 so multiplication is a table lookup; nothing beyond the group
// axioms is assumed anywhere downstream.
struct GroupTable {
    std::uint32_t order = 0;
    Element identity = 0;
    std::vector<Element> mul_table;     // order*order, row-major: mul_table[a*order+b] = a*b
    std::vector<Element> inv_table;     // inv_table[a] = a^-1
    std::vector<std::string> labels;    // optional element names, may be empty
    std::string name;

    Element mul(Element a, Element b) const {
        if (a >= order || b >= order)
            throw std::out_of_range("GroupTable::mul: element index out of range");
        return mul_table[static_cast<std::size_t>(a) * order + b];
    }

    Element inv(Element a) const {
        if (a >= order)
            throw std::out_of_range("GroupTable::inv: element index out of range");
        return inv_table[a];
    }
};

// Z/nZ under addition mod n; element i is the residue i, identity 0.
inline GroupTable make_cyclic(std::uint32_t n) {
    if (n == 0)
        throw std::invalid_argument("make_cyclic: order must be positive");
    GroupTable t;
    t.order = n;
    t.identity = 0;
    t.mul_table.resize(static_cast<std::size_t>(n) * n);
    t.inv_table.resize(n);
    t.labels.resize(n);
    for (std::uint32_t a = 0; a < n; ++a) {
        t.inv_table[a] = (n - a) % n;
        t.labels[a] = std::to_string(a);
        for (std::uint32_t b = 0; b < n; ++b)
            t.mul_table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    }
    t.name = "cyclic:" + std::to_string(n);
    return t;
}

// S_k with elements enumerated in lexicographic one-line order, so the
// identity permutation has index 0. Product a*b acts by (a*b)(i) = a(b(i)).
// Capped at k = 5: order 120 keeps exhaustive axiom checks cheap.
inline GroupTable make_symmetric(std::uint32_t k) {
    if (k == 0 || k > 5)
        throw std::invalid_argument("make_symmetric: k must be in 1..5");

    std::vector<std::vector<std::uint8_t>> perms;
    std::vector<std::uint8_t> p(k);
    std::iota(p.begin(), p.end(), std::uint8_t{0});
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::map<std::vector<std::uint8_t>, Element> index_of;
    for (std::size_t i = 0; i < perms.size(); ++i)
        index_of[perms[i]] = static_cast<Element>(i);

    const auto n = static_cast<std::uint32_t>(perms.size());
    GroupTable t;
    t.order = n;
    t.identity = 0;
    t.mul_table.resize(static_cast<std::size_t>(n) * n);
    t.inv_table.resize(n);
    t.labels.resize(n);
    std::vector<std::uint8_t> prod(k), inv(k);
    for (std::uint32_t a = 0; a < n; ++a) {
        std::string label;
        for (auto v : perms[a]) label += static_cast<char>('0' + v);
        t.labels[a] = label;
        for (std::uint32_t i = 0; i < k; ++i) inv[perms[a][i]] = static_cast<std::uint8_t>(i);
        t.inv_table[a] = index_of.at(inv);
        for (std::uint32_t b = 0; b < n; ++b) {
            for (std::uint32_t i = 0; i < k; ++i) prod[i] = perms[a][perms[b][i]];
            t.mul_table[static_cast<std::size_t>(a) * n + b] = index_of.at(prod);
        }
    }
    t.name = "sym:" + std::to_string(k);
    return t;
}

// Componentwise product group; element index = i_a * |b| + i_b.
inline GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
    const std::uint64_t order = static_cast<std::uint64_t>(a.order) * b.order;
    if (order > 10000)
        throw std::length_error("direct_product: resulting order exceeds 10^4");
    const auto n = static_cast<std::uint32_t>(order);
    GroupTable t;
    t.order = n;
    t.identity = a.identity * b.order + b.identity;
    t.mul_table.resize(static_cast<std::size_t>(n) * n);
    t.inv_table.resize(n);
    t.labels.resize(n);
    const bool named = !a.labels.empty() && !b.labels.empty();
    for (std::uint32_t ia = 0; ia < a.order; ++ia) {
        for (std::uint32_t ib = 0; ib < b.order; ++ib) {
            const Element x = ia * b.order + ib;
            t.inv_table[x] = a.inv(ia) * b.order + b.inv(ib);
            if (named) t.labels[x] = "(" + a.labels[ia] + "," + b.labels[ib] + ")";
            for (std::uint32_t ja = 0; ja < a.order; ++ja)
                for (std::uint32_t jb = 0; jb < b.order; ++jb)
                    t.mul_table[static_cast<std::size_t>(x) * n + ja * b.order + jb] =
                        a.mul(ia, ja) * b.order + b.mul(ib, jb);
        }
    }
    t.name = "prod:" + a.name + "," + b.name;
    return t;
}

// Exhaustive axiom check: closure, identity, inverses, associativity.
// O(order^3); intended for tables of order <= 120.
inline std::optional<std::string> axiom_violation(const GroupTable& t) {
    const std::uint32_t n = t.order;
    if (n == 0) return "order is zero";
    if (t.mul_table.size() != static_cast<std::size_t>(n) * n) return "mul table size mismatch";
    if (t.inv_table.size() != n) return "inv table size mismatch";
    if (t.identity >= n) return "identity index out of range";
    for (auto v : t.mul_table)
        if (v >= n) return "mul entry out of range (closure)";
    for (auto v : t.inv_table)
        if (v >= n) return "inv entry out of range";
    const Element e = t.identity;
    for (Element a = 0; a < n; ++a) {
        if (t.mul(e, a) != a || t.mul(a, e) != a)
            return "identity axiom fails at element " + std::to_string(a);
        if (t.mul(a, t.inv(a)) != e || t.mul(t.inv(a), a) != e)
            return "inverse axiom fails at element " + std::to_string(a);
    }
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c)))
                    return "associativity fails at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")";
    return std::nullopt;
}

// Debug dump: one row of space-separated indices per element.
inline std::string cayley_to_text(const GroupTable& t) {
    std::ostringstream out;
    for (std::uint32_t a = 0; a < t.order; ++a) {
        for (std::uint32_t b = 0; b < t.order; ++b) {
            if (b) out << ' ';
            out << t.mul_table[static_cast<std::size_t>(a) * t.order + b];
        }
        out << '\n';
    }
    return out.str();
}

} // namespace gsync
