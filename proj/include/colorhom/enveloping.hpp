#pragma once

#include <colorhom/color_lie.hpp>
#include <colorhom/report.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace colorhom {

// Word in the Lie basis indices. A word is PBW-normal when its indices are
// non-decreasing and strictly increase at every odd generator (chi(g,g) = -1);
// such words form the monomial basis of U(L). The empty word is the unit.
using Monomial = std::vector<std::int32_t>;

// Linear combination of PBW monomials, canonical: no zero coefficients.
using UElement = std::map<Monomial, Scalar>;

// Element of U(L) tensor U(L) (or of V tensor U(L), same carrier).
using TensorTerm = std::pair<Monomial, Monomial>;
using TensorUElement = std::map<TensorTerm, Scalar>;

using Tensor3Term = std::array<Monomial, 3>;
using Tensor3UElement = std::map<Tensor3Term, Scalar>;

void u_acc(UElement& acc, const Monomial& m, const Scalar& c);
UElement u_add(UElement a, const UElement& b);
UElement u_scale(const Scalar& c, UElement a);
bool u_is_zero(const UElement& a);
void t_acc(TensorUElement& acc, const TensorTerm& t, const Scalar& c);
TensorUElement t_add(TensorUElement a, const TensorUElement& b);
TensorUElement t_scale(const Scalar& c, TensorUElement a);

// The enveloping algebra of a color Lie algebra, presented on its PBW basis.
// Owns a copy of the algebra, so callers can hand in temporaries freely.
class Enveloping {
public:
    explicit Enveloping(ColorLieAlgebra L) : L_(std::move(L)) {}

    const ColorLieAlgebra& lie() const { return L_; }
    std::int64_t root_order() const { return L_.root_order(); }

    UElement one() const { return {{Monomial{}, Scalar::one(root_order())}}; }
    UElement gen(std::int32_t i) const { return {{Monomial{i}, Scalar::one(root_order())}}; }
    UElement from_lie(const LieElement& a) const;

    GroupElement degree(const Monomial& m) const;
    bool is_pbw(const Monomial& m) const;

    // Rewrites an arbitrary word to the PBW basis: an out-of-order adjacent
    // pair (j, i) with j > i becomes eps(|x_j|,|x_i|) (i, j) plus the bracket
    // [x_j, x_i]; a repeated odd generator collapses via x^2 = [x,x]/2. The
    // leftmost redex is reduced first; every step drops (length, inversions)
    // lexicographically, so this terminates.
    UElement normal_form(const Monomial& word, const Scalar& coeff) const;
    UElement u_multiply(const UElement& a, const UElement& b) const;

    // a *_chi b = chi(|a|,|b|) a b and the twisted opposite
    // a ._chi b = chi(|a|,|b|) b a, both extended over homogeneous terms.
    // chi defaults to the algebra's own bicharacter.
    UElement twisted_product(const UElement& a, const UElement& b,
                             const Bicharacter* chi = nullptr) const;
    UElement twisted_opposite_product(const UElement& a, const UElement& b,
                                      const Bicharacter* chi = nullptr) const;

    // Componentwise product on U tensor U with the sign rule
    // (a @ b)(a' @ b') = chi(|b|,|a'|) aa' @ bb'.
    TensorUElement lusztig_multiply(const TensorUElement& s, const TensorUElement& t) const;

    // Delta(generator) = 1 @ g + g @ 1 extended as an algebra map into the
    // Lusztig product; counit kills every generator; the antipode is the
    // algebra map into the twisted opposite with S(g) = -g.
    TensorUElement coproduct(const UElement& a) const;
    Scalar counit(const UElement& a) const;
    UElement antipode(const UElement& a) const;
    // Determined by S^{-1}(g) = -g and S^{-1}(uv) = chi(|v|,|u|)^{-1} S^{-1}(v) S^{-1}(u);
    // check_hopf_axioms verifies it really inverts S instead of assuming so.
    UElement antipode_inverse(const UElement& a) const;

    // Right U(L)-action a.(t) = t * Delta(a) on U @ U, and the free action on
    // the second slot of V @ U.
    TensorUElement tensor_right_action(const TensorUElement& t, const UElement& b) const;
    TensorUElement free_right_action(const TensorUElement& t, const UElement& b) const;

    // Psi(a @ a') = sum a S(a'_1) @ a'_2 and its declared inverse
    // sum a a'_1 @ a'_2; psi_map(t, inverse=false/true).
    TensorUElement psi_map(const TensorUElement& t, bool inverse) const;

    // Coassociativity, counit laws, both antipode convolution identities,
    // S(S(m)) = m and S^{-1} agreement on all PBW monomials up to max_len;
    // the antihomomorphism rule and the inverse-antipode product rule on all
    // monomial pairs up to max_len.
    ValidationReport check_hopf_axioms(int max_len) const;

    // Every maximal rewrite sequence from every word up to max_len must land
    // on one and the same normal form (diamond property, checked empirically).
    ValidationReport check_confluence(int max_len) const;

    std::vector<Monomial> pbw_monomials_of_length(int len) const;
    std::vector<Monomial> pbw_monomials(int max_len) const;  // length-then-lex order
    // All PBW monomials when U(L) is finite-dimensional; nullopt once more
    // than cap monomials are seen.
    std::optional<std::vector<Monomial>> pbw_monomials_finite(std::size_t cap) const;

    std::string monomial_to_string(const Monomial& m) const;  // "x.y.z", unit "1"
    std::string u_to_string(const UElement& a) const;
    std::string tensor_to_string(const TensorUElement& t) const;

private:
    ColorLieAlgebra L_;

    Scalar chi_deg(const Bicharacter* chi, const GroupElement& g, const GroupElement& h) const;
    UElement antipode_monomial(const Monomial& m) const;
    UElement antipode_inverse_monomial(const Monomial& m) const;
};

}  // namespace colorhom
