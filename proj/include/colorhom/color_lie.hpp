#pragma once

#include <colorhom/grading.hpp>
#include <colorhom/matrix.hpp>
#include <colorhom/report.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace colorhom {

// Sparse vector in the Lie algebra basis; also used for bracket values.
using LieElement = std::map<std::int32_t, Scalar>;

struct LieBasisElement {
    std::string name;
    GroupElement degree;
};

struct BracketEntry {
    std::int32_t left = 0;
    std::int32_t right = 0;
    LieElement value;
};

// Finite-dimensional color Lie algebra over Q(zeta_N): G-graded basis, an
// antisymmetric bicharacter eps, and a full bracket table.
class ColorLieAlgebra {
public:
    // Entries may cover just one orientation of each pair; the missing
    // [x_j, x_i] is filled in as -eps(|x_j|, |x_i|) [x_i, x_j]. If both
    // orientations are supplied they are stored verbatim (the validator will
    // flag them when inconsistent). Duplicate entries for one ordered pair
    // are an error, as is a bicharacter with chi(g,g) outside {+1,-1}.
    ColorLieAlgebra(GroupSpec group, Bicharacter chi, std::vector<LieBasisElement> basis,
                    const std::vector<BracketEntry>& entries);

    const GroupSpec& group() const { return group_; }
    const Bicharacter& chi() const { return chi_; }
    std::int32_t dim() const { return static_cast<std::int32_t>(basis_.size()); }
    const std::vector<LieBasisElement>& basis() const { return basis_; }
    const std::string& name(std::int32_t i) const { return basis_[i].name; }
    const GroupElement& degree(std::int32_t i) const { return basis_[i].degree; }
    int parity(std::int32_t i) const { return parities_[i]; }
    std::int64_t root_order() const { return chi_.root_order; }

    // -1 when absent.
    std::int32_t index_of(const std::string& name) const;

    Scalar eps(const GroupElement& g, const GroupElement& h) const {
        return chi_eval(group_, chi_, g, h);
    }
    Scalar eps_basis(std::int32_t i, std::int32_t j) const {
        return eps(basis_[i].degree, basis_[j].degree);
    }

    const LieElement& bracket_basis(std::int32_t i, std::int32_t j) const {
        return table_[i][j];
    }

private:
    GroupSpec group_;
    Bicharacter chi_;
    std::vector<LieBasisElement> basis_;
    std::vector<std::vector<LieElement>> table_;
    std::vector<int> parities_;
};

LieElement lie_add(LieElement a, const LieElement& b);
LieElement lie_scale(const Scalar& c, LieElement a);
bool lie_is_zero(const LieElement& a);
std::string lie_to_string(const ColorLieAlgebra& L, const LieElement& a);

// Bilinear extension of the bracket table.
LieElement bracket(const ColorLieAlgebra& L, const LieElement& a, const LieElement& b);

// Degree compatibility of every table entry, eps-antisymmetry on all pairs
// (at i = j this forces [x,x] = 0 exactly when x is even), and the eps-Jacobi
// identity on all ordered triples. Witnesses name basis elements.
ValidationReport validate_color_lie(const ColorLieAlgebra& L);

// Canonical fixtures.
// k pairwise-commuting odd generators over G = Z_2 (super sign).
ColorLieAlgebra make_abelian_odd(int k);
// x, y odd, z even central, [x,y] = z, over G = Z_2 (super sign).
ColorLieAlgebra make_heis3();
// G = Z_2 x Z_2 with the non-super bicharacter chi(a,b) = (-1)^(a1 b1 + a2 b2);
// x (1,0) and y (0,1) odd, z (1,1) and w (0,0) even central, [x,y] = z and
// the odd square [x,x] = w.
ColorLieAlgebra make_glcolor();

}  // namespace colorhom
