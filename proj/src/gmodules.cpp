#include <colorhom/gmodules.hpp>

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace colorhom {

namespace {

// rho of a Lie element, for the right-hand side of bracket-compatibility.
ExactMatrix lie_action(const std::vector<ExactMatrix>& gens, std::int64_t dim,
                       std::int64_t root_order, const LieElement& a) {
    ExactMatrix out(dim, dim, root_order);
    for (const auto& [k, c] : a) out = out + gens[k].scaled(c);
    return out;
}

bool column_degrees_ok(const GroupSpec& G, const std::vector<ModuleBasisElement>& basis,
                       const ExactMatrix& m, const GroupElement& gen_degree, bool right,
                       std::string& witness, const std::string& which) {
    for (std::int64_t j = 0; j < m.cols(); ++j) {
        GroupElement target = right ? G.op(basis[j].degree, gen_degree)
                                    : G.op(gen_degree, basis[j].degree);
        for (std::int64_t k = 0; k < m.rows(); ++k) {
            if (m.at(k, j).is_zero()) continue;
            if (basis[k].degree != target) {
                witness = which + " sends " + basis[j].name + " to " + basis[k].name +
                          " outside degree " + group_element_to_string(target);
                return false;
            }
        }
    }
    return true;
}

}  // namespace

GradedModule trivial_module(const Enveloping& U) {
    GradedModule M;
    M.basis.push_back({"1", U.lie().group().identity()});
    for (std::int32_t i = 0; i < U.lie().dim(); ++i)
        M.act.emplace_back(1, 1, U.root_order());
    return M;
}

GradedBimodule trivial_bimodule(const Enveloping& U) {
    GradedModule M = trivial_module(U);
    return {M.basis, M.act, M.act};
}

GradedBimodule regular_bimodule(const Enveloping& U, std::size_t cap) {
    auto basis = U.pbw_monomials_finite(cap);
    if (!basis)
        throw std::runtime_error(
            "regular bimodule needs a finite-dimensional enveloping algebra; more than " +
            std::to_string(cap) + " basis monomials found");
    std::map<Monomial, std::int64_t> index;
    GradedBimodule M;
    for (const auto& w : *basis) {
        index.emplace(w, static_cast<std::int64_t>(M.basis.size()));
        M.basis.push_back({U.monomial_to_string(w), U.degree(w)});
    }
    const auto dim = static_cast<std::int64_t>(basis->size());
    for (std::int32_t i = 0; i < U.lie().dim(); ++i) {
        ExactMatrix left(dim, dim, U.root_order()), right(dim, dim, U.root_order());
        for (std::int64_t j = 0; j < dim; ++j) {
            for (const auto& [m, c] : U.u_multiply(U.gen(i), {{(*basis)[j], Scalar::one(U.root_order())}}))
                left.at(index.at(m), j) = c;
            for (const auto& [m, c] : U.u_multiply({{(*basis)[j], Scalar::one(U.root_order())}}, U.gen(i)))
                right.at(index.at(m), j) = c;
        }
        M.act.push_back(std::move(left));
        M.ract.push_back(std::move(right));
    }
    return M;
}

GradedModule left_module(const GradedBimodule& M) { return {M.basis, M.act}; }

ExactMatrix word_action(const std::vector<ExactMatrix>& gens, std::int64_t dim,
                        std::int64_t root_order, const Monomial& w, bool right_action) {
    ExactMatrix out = ExactMatrix::identity(dim, root_order);
    if (right_action) {
        for (auto it = w.rbegin(); it != w.rend(); ++it) out = out * gens[*it];
    } else {
        for (auto i : w) out = out * gens[i];
    }
    return out;
}

ExactMatrix element_action(const std::vector<ExactMatrix>& gens, std::int64_t dim,
                           std::int64_t root_order, const UElement& a, bool right_action) {
    ExactMatrix out(dim, dim, root_order);
    for (const auto& [w, c] : a)
        out = out + word_action(gens, dim, root_order, w, right_action).scaled(c);
    return out;
}

namespace {

bool action_shape_ok(const Enveloping& U, const std::vector<ModuleBasisElement>& basis,
                     const std::vector<ExactMatrix>& gens, std::string& witness) {
    if (static_cast<std::int64_t>(gens.size()) != U.lie().dim()) {
        witness = "expected " + std::to_string(U.lie().dim()) + " generator matrices, got " +
                  std::to_string(gens.size());
        return false;
    }
    const auto dim = static_cast<std::int64_t>(basis.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].rows() != dim || gens[i].cols() != dim ||
            gens[i].root_order() != U.root_order()) {
            witness = "matrix for " + U.lie().name(static_cast<std::int32_t>(i)) +
                      " has the wrong shape or root order";
            return false;
        }
    }
    return true;
}

// rho(x_i)rho(x_j) - eps(i,j)rho(x_j)rho(x_i) = rho([x_i,x_j]) over all pairs.
// For right actions the composition order flips: words act back to front.
bool bracket_law_ok(const Enveloping& U, const std::vector<ExactMatrix>& gens,
                    std::int64_t dim, bool right, std::string& witness) {
    const ColorLieAlgebra& L = U.lie();
    for (std::int32_t i = 0; i < L.dim(); ++i)
        for (std::int32_t j = 0; j < L.dim(); ++j) {
            ExactMatrix ij = right ? gens[j] * gens[i] : gens[i] * gens[j];
            ExactMatrix ji = right ? gens[i] * gens[j] : gens[j] * gens[i];
            ExactMatrix lhs = ij - ji.scaled(L.eps_basis(i, j));
            ExactMatrix rhs = lie_action(gens, dim, U.root_order(), L.bracket_basis(i, j));
            if (lhs != rhs) {
                witness = "bracket law fails on (" + L.name(i) + ", " + L.name(j) + ")";
                return false;
            }
        }
    return true;
}

}  // namespace

ValidationReport validate_module(const Enveloping& U, const GradedModule& M) {
    ValidationReport report;
    std::string witness;
    bool shapes = action_shape_ok(U, M.basis, M.act, witness);
    report.add("action matrix shapes", shapes, witness);
    if (!shapes) return report;

    witness.clear();
    bool graded = true;
    for (std::int32_t i = 0; i < U.lie().dim() && graded; ++i)
        graded = column_degrees_ok(U.lie().group(), M.basis, M.act[i], U.lie().degree(i),
                                   false, witness, U.lie().name(i));
    report.add("action degree compatibility", graded, witness);

    witness.clear();
    const auto dim = static_cast<std::int64_t>(M.basis.size());
    const bool bracket = bracket_law_ok(U, M.act, dim, false, witness);
    report.add("bracket compatibility", bracket, witness);
    return report;
}

ValidationReport validate_bimodule(const Enveloping& U, const GradedBimodule& M) {
    ValidationReport report = validate_module(U, {M.basis, M.act});
    if (!report.all_pass()) return report;

    std::string witness;
    bool shapes = action_shape_ok(U, M.basis, M.ract, witness);
    report.add("right action matrix shapes", shapes, witness);
    if (!shapes) return report;

    witness.clear();
    bool graded = true;
    for (std::int32_t i = 0; i < U.lie().dim() && graded; ++i)
        graded = column_degrees_ok(U.lie().group(), M.basis, M.ract[i], U.lie().degree(i),
                                   true, witness, U.lie().name(i));
    report.add("right action degree compatibility", graded, witness);

    witness.clear();
    const auto dim = static_cast<std::int64_t>(M.basis.size());
    const bool rbracket = bracket_law_ok(U, M.ract, dim, true, witness);
    report.add("right bracket compatibility", rbracket, witness);

    witness.clear();
    bool commute = true;
    for (std::int32_t i = 0; i < U.lie().dim() && commute; ++i)
        for (std::int32_t j = 0; j < U.lie().dim(); ++j) {
            if (M.ract[j] * M.act[i] != M.act[i] * M.ract[j]) {
                commute = false;
                witness = "(" + U.lie().name(i) + ".m)." + U.lie().name(j) +
                          " != " + U.lie().name(i) + ".(m." + U.lie().name(j) + ")";
                break;
            }
        }
    report.add("left and right actions commute", commute, witness);
    return report;
}

ValidationReport validate_lusztig_module(const Enveloping& U, const LusztigModule& M) {
    ValidationReport report;
    std::string witness;
    const auto dim = static_cast<std::int64_t>(M.basis.size());
    bool shapes = action_shape_ok(U, M.basis, M.lefts, witness) &&
                  action_shape_ok(U, M.basis, M.rights, witness);
    report.add("action matrix shapes", shapes, witness);
    if (!shapes) return report;

    witness.clear();
    const bool lefts_ok = bracket_law_ok(U, M.lefts, dim, false, witness);
    report.add("left family bracket law", lefts_ok, witness);
    witness.clear();
    const bool rights_ok = bracket_law_ok(U, M.rights, dim, false, witness);
    report.add("right family bracket law", rights_ok, witness);

    // (1 (x) x_j)(x_i (x) 1) = chi(|x_j|,|x_i|) (x_i (x) 1)(1 (x) x_j)
    witness.clear();
    bool cross = true;
    const ColorLieAlgebra& L = U.lie();
    for (std::int32_t i = 0; i < L.dim() && cross; ++i)
        for (std::int32_t j = 0; j < L.dim(); ++j) {
            if (M.rights[j] * M.lefts[i] != (M.lefts[i] * M.rights[j]).scaled(L.eps_basis(j, i))) {
                cross = false;
                witness = "cross relation fails on (" + L.name(i) + ", " + L.name(j) + ")";
                break;
            }
        }
    report.add("cross commutation", cross, witness);
    return report;
}

GradedModule shift_module(const GroupSpec& G, GradedModule M, const GroupElement& h) {
    const GroupElement hinv = G.inverse(h);
    for (auto& b : M.basis) b.degree = G.op(hinv, b.degree);
    return M;
}

GradedBimodule shift_bimodule(const GroupSpec& G, GradedBimodule M, const GroupElement& h) {
    const GroupElement hinv = G.inverse(h);
    for (auto& b : M.basis) b.degree = G.op(hinv, b.degree);
    return M;
}

std::map<GroupElement, std::int64_t> hom_dims(const Enveloping& U, const GradedModule& M,
                                              const GradedModule& N) {
    const GroupSpec& G = U.lie().group();
    std::set<GroupElement> candidates;
    for (const auto& n : N.basis)
        for (const auto& m : M.basis) candidates.insert(G.op(n.degree, G.inverse(m.degree)));

    const auto dm = static_cast<std::int64_t>(M.basis.size());
    const auto dn = static_cast<std::int64_t>(N.basis.size());
    std::map<GroupElement, std::int64_t> out;
    for (const auto& h : candidates) {
        // unknowns: entries T[k][j] allowed by the degree constraint
        std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> col;
        for (std::int64_t k = 0; k < dn; ++k)
            for (std::int64_t j = 0; j < dm; ++j)
                if (N.basis[k].degree == G.op(h, M.basis[j].degree))
                    col.emplace(std::make_pair(k, j), static_cast<std::int64_t>(col.size()));
        if (col.empty()) {
            out[h] = 0;
            continue;
        }
        const auto gens = static_cast<std::int64_t>(M.act.size());
        ExactMatrix sys(gens * dn * dm, static_cast<std::int64_t>(col.size()), U.root_order());
        for (std::int64_t i = 0; i < gens; ++i)
            for (std::int64_t k = 0; k < dn; ++k)
                for (std::int64_t j = 0; j < dm; ++j) {
                    const std::int64_t row = (i * dn + k) * dm + j;
                    // (T A - B T)[k][j] = 0
                    for (std::int64_t l = 0; l < dm; ++l) {
                        auto it = col.find({k, l});
                        if (it != col.end())
                            sys.at(row, it->second) = sys.at(row, it->second) + M.act[i].at(l, j);
                    }
                    for (std::int64_t l = 0; l < dn; ++l) {
                        auto it = col.find({l, j});
                        if (it != col.end())
                            sys.at(row, it->second) = sys.at(row, it->second) - N.act[i].at(k, l);
                    }
                }
        out[h] = rank_kernel(sys).kernel_dim;
    }
    return out;
}

GradedModule adjoint_module(const Enveloping& U, const GradedBimodule& M) {
    GradedModule A{M.basis, {}};
    const auto dim = static_cast<std::int64_t>(M.basis.size());
    for (std::int32_t i = 0; i < U.lie().dim(); ++i) {
        ExactMatrix m(dim, dim, U.root_order());
        for (std::int64_t j = 0; j < dim; ++j) {
            const Scalar e = U.lie().eps(U.lie().degree(i), M.basis[j].degree);
            for (std::int64_t k = 0; k < dim; ++k)
                m.at(k, j) = M.act[i].at(k, j) - e * M.ract[i].at(k, j);
        }
        A.act.push_back(std::move(m));
    }
    return A;
}

ExactMatrix adjoint_hopf_action(const Enveloping& U, const GradedBimodule& M,
                                const UElement& a) {
    const auto dim = static_cast<std::int64_t>(M.basis.size());
    ExactMatrix out(dim, dim, U.root_order());
    for (const auto& [p, c] : U.coproduct(a)) {
        UElement sv = U.antipode({{p.second, Scalar::one(U.root_order())}});
        ExactMatrix part = word_action(M.act, dim, U.root_order(), p.first, false) *
                           element_action(M.ract, dim, U.root_order(), sv, true);
        // column twist chi(|a_2|, |m_j|)
        const GroupElement dv = U.degree(p.second);
        ExactMatrix twisted(dim, dim, U.root_order());
        for (std::int64_t j = 0; j < dim; ++j) {
            const Scalar f = c * U.lie().eps(dv, M.basis[j].degree);
            for (std::int64_t k = 0; k < dim; ++k) twisted.at(k, j) = part.at(k, j) * f;
        }
        out = out + twisted;
    }
    return out;
}

GradedModule tensor_module(const Enveloping& U, const GradedModule& M,
                           const GradedModule& N) {
    const GroupSpec& G = U.lie().group();
    const auto dm = static_cast<std::int64_t>(M.basis.size());
    const auto dn = static_cast<std::int64_t>(N.basis.size());
    GradedModule T;
    for (std::int64_t j = 0; j < dm; ++j)
        for (std::int64_t l = 0; l < dn; ++l)
            T.basis.push_back({M.basis[j].name + "@" + N.basis[l].name,
                               G.op(M.basis[j].degree, N.basis[l].degree)});
    for (std::int32_t i = 0; i < U.lie().dim(); ++i) {
        ExactMatrix m(dm * dn, dm * dn, U.root_order());
        for (std::int64_t j = 0; j < dm; ++j)
            for (std::int64_t l = 0; l < dn; ++l) {
                const std::int64_t src = j * dn + l;
                for (std::int64_t k = 0; k < dm; ++k) {
                    const Scalar& c = M.act[i].at(k, j);
                    if (!c.is_zero()) m.at(k * dn + l, src) = m.at(k * dn + l, src) + c;
                }
                const Scalar twist = U.lie().eps(U.lie().degree(i), M.basis[j].degree);
                for (std::int64_t k = 0; k < dn; ++k) {
                    const Scalar& c = N.act[i].at(k, l);
                    if (!c.is_zero())
                        m.at(j * dn + k, src) = m.at(j * dn + k, src) + twist * c;
                }
            }
        T.act.push_back(std::move(m));
    }
    return T;
}

LusztigModule to_lusztig_module(const Enveloping& U, const GradedBimodule& M) {
    LusztigModule out{M.basis, M.act, {}};
    const auto dim = static_cast<std::int64_t>(M.basis.size());
    for (std::int32_t i = 0; i < U.lie().dim(); ++i) {
        ExactMatrix q(dim, dim, U.root_order());
        for (std::int64_t j = 0; j < dim; ++j) {
            const Scalar f = -U.lie().eps(U.lie().degree(i), M.basis[j].degree);
            for (std::int64_t k = 0; k < dim; ++k) q.at(k, j) = M.ract[i].at(k, j) * f;
        }
        out.rights.push_back(std::move(q));
    }
    return out;
}

GradedBimodule from_lusztig_module(const Enveloping& U, const LusztigModule& N) {
    GradedBimodule out{N.basis, N.lefts, {}};
    const auto dim = static_cast<std::int64_t>(N.basis.size());
    for (std::int32_t i = 0; i < U.lie().dim(); ++i) {
        ExactMatrix r(dim, dim, U.root_order());
        for (std::int64_t j = 0; j < dim; ++j) {
            const Scalar f = -U.lie().eps(U.lie().degree(i), N.basis[j].degree).inverse();
            for (std::int64_t k = 0; k < dim; ++k) r.at(k, j) = N.rights[i].at(k, j) * f;
        }
        out.ract.push_back(std::move(r));
    }
    return out;
}

}  // namespace colorhom
