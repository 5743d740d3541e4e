#pragma once

#include <colorhom/enveloping.hpp>
#include <colorhom/gmodules.hpp>
#include <colorhom/report.hpp>

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace colorhom {

// Word in the color exterior algebra on the Lie basis. Basis words are
// non-decreasing and strict at indices of parity +1; mirror image of the PBW
// rule, which is strict at parity -1.
using WedgeMonomial = std::vector<std::int32_t>;

bool is_wedge_basis_word(const ColorLieAlgebra& L, const WedgeMonomial& w);
std::vector<WedgeMonomial> wedge_basis(const ColorLieAlgebra& L, int n);
GroupElement wedge_degree(const ColorLieAlgebra& L, const WedgeMonomial& w);

// Sorts a wedge word by adjacent swaps, each contributing -eps(|a|,|b|), and
// kills words with a repeated parity +1 index.
std::map<WedgeMonomial, Scalar> wedge_normalize(const ColorLieAlgebra& L,
                                                const WedgeMonomial& word,
                                                const Scalar& coeff);

// Element of the Koszul complex U(L) (x) wedge^n L; keys pair a PBW monomial
// with a wedge basis word.
using KoszulElement = std::map<std::pair<Monomial, WedgeMonomial>, Scalar>;

void k_acc(KoszulElement& a, const std::pair<Monomial, WedgeMonomial>& key, const Scalar& c);
KoszulElement k_add(KoszulElement a, const KoszulElement& b);
KoszulElement k_scale(const Scalar& c, KoszulElement a);
std::string koszul_to_string(const Enveloping& U, const KoszulElement& a);

// The Koszul differential: for a term u (x) <x_1..x_n>,
//   sum_i (-1)^{i+1} eps_i u x_i (x) <.. x_i dropped ..>
// + sum_{i<j} (-1)^{i+j} eps_i eps_j eps(|x_j|,|x_i|) u (x) <[x_i,x_j], rest>
// with eps_i the product of eps(|x_h|,|x_i|) over h < i.
KoszulElement koszul_d(const Enveloping& U, const KoszulElement& elt);

// theta(y): -eps(|y|,|u|) u y (x) w plus bracket substitution in each slot,
// the i-th with factor eps(|y|, |u||x_1|...|x_{i-1}|).
KoszulElement koszul_theta(const Enveloping& U, const LieElement& y, const KoszulElement& elt);
// sigma(y): eps(|y|,|u|) u (x) <y, x_1, ..., x_n>.
KoszulElement koszul_sigma(const Enveloping& U, const LieElement& y, const KoszulElement& elt);

// Operators on the filtration quotient W^p (terms of total length p; anything
// shorter is dropped). Both throw if a term is not of total length p.
KoszulElement koszul_d_principal(const Enveloping& U, int p, const KoszulElement& elt);
KoszulElement koszul_t(const Enveloping& U, int p, const KoszulElement& elt);

// Exhaustive operator identities on basis elements with PBW length <= len_cap
// and wedge length <= n_max: the theta bracket law, sigma of a bracket,
// sigma d + d sigma = -theta, theta d = d theta, and d d = 0. A replacement
// differential can be injected to demonstrate that a wrong sign is caught.
ValidationReport check_koszul_identities(
    const Enveloping& U, int n_max, int len_cap,
    const std::function<KoszulElement(const Enveloping&, const KoszulElement&)>& d_fn = {});

// d t + t d = p id on every basis element of W^p, p <= p_max.
ValidationReport homotopy_check(const Enveloping& U, int p_max);

// Matrix of the cochain differential from degree-preserving maps
// wedge^n L -> M[h] to wedge^{n+1} L -> M[h], in the elementary-map bases
// ordered wedge-major. Pass no h to take all internal degrees at once.
ExactMatrix ce_delta(const Enveloping& U, const GradedModule& M, int n,
                     const std::optional<GroupElement>& h);

// dims[h][n] = dim H^n of L with coefficients in M at internal degree h,
// computed as kernel(delta^n) - rank(delta^{n-1}) blockwise. The window
// defaults to every internal degree reachable from the module and wedge
// bases (all of G when G is finite).
std::map<GroupElement, std::vector<std::int64_t>> lie_cohomology_dims(
    const Enveloping& U, const GradedModule& M, int n_max,
    const std::optional<std::vector<GroupElement>>& window = std::nullopt);

// Same computation run once on the full cochain spaces with no degree split.
std::vector<std::int64_t> lie_cohomology_total_dims(const Enveloping& U,
                                                    const GradedModule& M, int n_max);

}  // namespace colorhom
