#pragma once

#include <colorhom/gmodules.hpp>

#include <map>
#include <optional>
#include <vector>

namespace colorhom {

// A finite-dimensional graded algebra in structure-constant form. basis[unit]
// is the identity element. lmul[i] holds left multiplication by e_i: its j-th
// column expands e_i e_j over the basis. When the algebra comes from an
// enveloping algebra, words[i] records the underlying basis monomial and the
// Hopf structure is carried along in the same coordinates: counit[i] = eps(e_i),
// column i of antipode expands S(e_i), and coproduct[i] has the coefficient of
// e_j (x) e_k in Delta(e_i) at entry (j, k).
struct FiniteGradedAlgebra {
    std::int64_t root_order = 2;
    GroupSpec group;
    std::vector<ModuleBasisElement> basis;
    std::vector<Monomial> words;
    std::vector<ExactMatrix> lmul;
    std::int64_t unit = 0;

    std::vector<Scalar> counit;
    ExactMatrix antipode{0, 0, 2};
    std::vector<ExactMatrix> coproduct;

    std::int64_t dim() const { return static_cast<std::int64_t>(basis.size()); }
    // Right multiplication by e_i, derived from the structure constants.
    ExactMatrix rmul(std::int64_t i) const;
};

// Expands U(L) into structure constants over its full basis. Throws
// std::runtime_error once more than cap basis monomials are seen; the message
// names an even generator when one exists, since its powers are the
// obstruction.
FiniteGradedAlgebra truncate_enveloping(const Enveloping& U, std::size_t cap = 4096);

// Unit laws, multiplicative grading, associativity in matrix form, and (when
// the Hopf fields are populated) counit laws, coassociativity and both
// antipode convolution identities, all in basis coordinates.
ValidationReport validate_finite_algebra(const FiniteGradedAlgebra& A);

// A bimodule with one action matrix per algebra basis element instead of per
// Lie generator. left[i] is m -> e_i . m and right[i] is m -> m . e_i, both
// as matrices on coordinate columns.
struct AlgebraBimodule {
    std::vector<ModuleBasisElement> basis;
    std::vector<ExactMatrix> left;
    std::vector<ExactMatrix> right;
};

// Extends the generator actions of a bimodule to every algebra basis element
// along the recorded basis words.
AlgebraBimodule lift_bimodule(const FiniteGradedAlgebra& A, const GradedBimodule& M);

// Unit acts as identity, degrees, left action multiplicative, right action
// antimultiplicative, and the two actions commute.
ValidationReport validate_algebra_bimodule(const FiniteGradedAlgebra& A,
                                           const AlgebraBimodule& M);

// The degree-h block of the bar cochain differential
//   (delta f)(a_1,..,a_{n+1}) = a_1 f(a_2,..) + sum_i (-1)^i f(.., a_i a_{i+1}, ..)
//                               + (-1)^{n+1} f(a_1,..,a_n) a_{n+1}.
// Cochains are multilinear maps A^n -> M sending the degree-g component into
// M_{hg}; in the normalized complex they vanish whenever an argument is the
// unit, so the domain tuples run over non-unit basis elements only.
ExactMatrix hochschild_delta(const FiniteGradedAlgebra& A, const AlgebraBimodule& M,
                             int n, const GroupElement& h, bool normalized = true);

// Table h -> (dim HH^0 .. dim HH^n_max) of the graded Hochschild cohomology
// with the twist h, i.e. the entry at (n, h) is the cohomology of the
// degree-preserving bar complex valued in M[h]. The window defaults to all of
// G when the group is finite and to the realizable twists otherwise.
std::map<GroupElement, std::vector<std::int64_t>> hochschild_dims(
    const FiniteGradedAlgebra& A, const GradedBimodule& M, int n_max,
    const std::optional<std::vector<GroupElement>>& window = std::nullopt,
    bool normalized = true);

std::map<GroupElement, std::vector<std::int64_t>> hochschild_dims(
    const FiniteGradedAlgebra& A, const AlgebraBimodule& M, int n_max,
    const std::optional<std::vector<GroupElement>>& window = std::nullopt,
    bool normalized = true);

// For each degree h, the dimension of {m in M_h : a.m = m.a for all a}.
// Solved directly as one stacked kernel, independently of the bar complex.
std::map<GroupElement, std::int64_t> centralizer_dims(const FiniteGradedAlgebra& A,
                                                      const AlgebraBimodule& M);

struct ComparisonCell {
    int n = 0;
    GroupElement h;
    std::int64_t lhs = 0;  // Hochschild side
    std::int64_t rhs = 0;  // Lie cohomology side
};

struct ComparisonReport {
    std::vector<ComparisonCell> cells;
    bool all_equal = true;
};

// Cross-check of the isomorphism HH^n(U(L), M)_h = H^n(L, ad(M[h])): the left
// side through the bar complex, the right side through the Lie cochain
// complex of the adjoint module of M shifted by h, with the shift applied
// before taking the adjoint. Requires U(L) finite-dimensional.
ComparisonReport compare_cohomology_tables(
    const Enveloping& U, const GradedBimodule& M, int n_max,
    const std::optional<std::vector<GroupElement>>& window = std::nullopt);

}  // namespace colorhom
