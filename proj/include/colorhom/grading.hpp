#pragma once

#include <colorhom/report.hpp>
#include <colorhom/scalar.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace colorhom {

// Element of a finitely generated abelian group, written multiplicatively
// throughout the library but stored additively as one exponent per factor.
using GroupElement = std::vector<std::int64_t>;

// Z_{m_1} x ... x Z_{m_k}; order 0 marks an infinite cyclic factor.
// Exponents of finite factors are kept reduced to 0..m_i-1.
struct GroupSpec {
    std::vector<std::int64_t> orders;

    std::size_t rank() const { return orders.size(); }
    GroupElement identity() const { return GroupElement(orders.size(), 0); }
    GroupElement reduce(GroupElement g) const;
    GroupElement op(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& g) const;
    bool contains(const GroupElement& g) const;  // shape + reduced range
    bool is_finite() const;
    // All elements in lexicographic order; throws on an infinite factor.
    std::vector<GroupElement> elements() const;
};

// chi(g, h) = zeta_N ^ (sum_ij g_i E_ij h_j), biadditive in both slots by
// construction. For color-Lie use it must also satisfy chi(g,h)chi(h,g) = 1.
struct Bicharacter {
    std::int64_t root_order = 1;
    std::vector<std::vector<std::int64_t>> exponents;
};

Scalar chi_eval(const GroupSpec& G, const Bicharacter& chi, const GroupElement& g,
                const GroupElement& h);

// chi(g, g) for an antisymmetric chi is +1 or -1; returns the sign and throws
// if the value is any other root of unity.
int parity_sign(const GroupSpec& G, const Bicharacter& chi, const GroupElement& g);

// Checks, in order: exponent matrix shape, antisymmetry of the exponent
// matrix mod N (skipped when require_antisymmetric is false), well-definedness
// against the factor orders (m_i * E_ij = 0 mod N both ways), and biadditivity
// on deterministic pseudo-random triples.
ValidationReport validate_bicharacter(const GroupSpec& G, const Bicharacter& chi,
                                      bool require_antisymmetric = true);

std::string group_element_to_string(const GroupElement& g);  // "(1,0)"

}  // namespace colorhom
