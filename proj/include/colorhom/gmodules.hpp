#pragma once

#include <colorhom/enveloping.hpp>
#include <colorhom/matrix.hpp>
#include <colorhom/report.hpp>

#include <map>
#include <string>
#include <vector>

namespace colorhom {

struct ModuleBasisElement {
    std::string name;
    GroupElement degree;
};

// Finite-dimensional graded left module over U(L). One action matrix per Lie
// generator, columns indexed by the module basis: the j-th column of act[i]
// expands x_i . m_j. Longer words act by composing generator matrices.
struct GradedModule {
    std::vector<ModuleBasisElement> basis;
    std::vector<ExactMatrix> act;
};

// Graded bimodule: ract[i] is the matrix of m -> m . x_i.
struct GradedBimodule {
    std::vector<ModuleBasisElement> basis;
    std::vector<ExactMatrix> act;   // left action
    std::vector<ExactMatrix> ract;  // right action
};

// Left module over the twisted double U(L) (x) U(L) with the Lusztig product.
// lefts[i] is the action of x_i (x) 1 and rights[i] the action of 1 (x) x_i.
struct LusztigModule {
    std::vector<ModuleBasisElement> basis;
    std::vector<ExactMatrix> lefts;
    std::vector<ExactMatrix> rights;
};

// One-dimensional module in degree e on which every generator acts by zero,
// i.e. the action through the counit.
GradedModule trivial_module(const Enveloping& U);
GradedBimodule trivial_bimodule(const Enveloping& U);

// U(L) acting on itself by left and right multiplication in the PBW basis.
// Throws if the PBW basis has more than cap elements.
GradedBimodule regular_bimodule(const Enveloping& U, std::size_t cap = 4096);

GradedModule left_module(const GradedBimodule& M);

// Matrix of a PBW word acting on the module. Left actions compose in word
// order, right actions in reverse.
ExactMatrix word_action(const std::vector<ExactMatrix>& gens, std::int64_t dim,
                        std::int64_t root_order, const Monomial& w, bool right_action);
ExactMatrix element_action(const std::vector<ExactMatrix>& gens, std::int64_t dim,
                           std::int64_t root_order, const UElement& a, bool right_action);

// Generator-pair axiom checks: matrix shapes, degree compatibility of every
// nonzero entry, and rho(x)rho(y) - eps(|x|,|y|)rho(y)rho(x) = rho([x,y]).
ValidationReport validate_module(const Enveloping& U, const GradedModule& M);
// Additionally the right-module bracket law and commutation of the actions.
ValidationReport validate_bimodule(const Enveloping& U, const GradedBimodule& M);
// Relations of the twisted double: both generator families satisfy the U(L)
// relations and cross-commute up to chi(|y|,|x|).
ValidationReport validate_lusztig_module(const Enveloping& U, const LusztigModule& M);

// Degree shift M[h]: same space and actions, basis degrees relabeled so that
// an element of old degree h*g gets new degree g.
GradedModule shift_module(const GroupSpec& G, GradedModule M, const GroupElement& h);
GradedBimodule shift_bimodule(const GroupSpec& G, GradedBimodule M, const GroupElement& h);

// For each h with a candidate pair of basis degrees, the dimension of the
// space of degree-h module maps M -> N, i.e. of graded module maps M -> N[h].
// Solved exactly as the kernel of the intertwining system T a(x) = a(x) T.
std::map<GroupElement, std::int64_t> hom_dims(const Enveloping& U, const GradedModule& M,
                                              const GradedModule& N);

// Adjoint left module of a bimodule: x.m - eps(|x|,|m|) m.x on generators.
GradedModule adjoint_module(const Enveloping& U, const GradedBimodule& M);

// The same action computed through the Hopf structure,
// a.m = sum chi(|a_2|,|m|) a_1 . m . S(a_2), for any algebra element. Used to
// cross-check adjoint_module and its multiplicativity on longer words.
ExactMatrix adjoint_hopf_action(const Enveloping& U, const GradedBimodule& M,
                                const UElement& a);

// Module structure on M (x) N via the coproduct with the color twist:
// x(m (x) n) = xm (x) n + chi(|x|,|m|) m (x) xn for generators.
GradedModule tensor_module(const Enveloping& U, const GradedModule& M,
                           const GradedModule& N);

// A bimodule viewed as a twisted-double module, (a (x) a').m = chi(|a'|,|m|) a.m.S(a'),
// and the inverse construction recovering the right action through S^{-1}.
LusztigModule to_lusztig_module(const Enveloping& U, const GradedBimodule& M);
GradedBimodule from_lusztig_module(const Enveloping& U, const LusztigModule& N);

}  // namespace colorhom
