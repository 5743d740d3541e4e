#include <colorhom/hochschild.hpp>

#include <colorhom/ce_cohomology.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace colorhom {

namespace {

std::string cell_name(const FiniteGradedAlgebra& A, std::int64_t i) {
    return A.basis[static_cast<std::size_t>(i)].name;
}

// Argument tuples for the n-th cochain space, each with the degree of the
// corresponding tensor factor. Normalized cochains skip the unit slot.
struct TupleList {
    std::vector<std::vector<std::int64_t>> tuples;
    std::vector<GroupElement> degrees;
};

TupleList argument_tuples(const FiniteGradedAlgebra& A, int n, bool normalized) {
    TupleList out;
    out.tuples.push_back({});
    out.degrees.push_back(A.group.identity());
    for (int step = 0; step < n; ++step) {
        TupleList next;
        for (std::size_t t = 0; t < out.tuples.size(); ++t) {
            for (std::int64_t i = 0; i < A.dim(); ++i) {
                if (normalized && i == A.unit) continue;
                auto tuple = out.tuples[t];
                tuple.push_back(i);
                next.tuples.push_back(std::move(tuple));
                next.degrees.push_back(
                    A.group.op(out.degrees[t], A.basis[static_cast<std::size_t>(i)].degree));
            }
        }
        out = std::move(next);
    }
    return out;
}

// Basis of the degree-h cochain block: (tuple index, module basis index)
// pairs with deg(m) = h * deg(tuple), flattened tuple-major.
struct CochainBlock {
    TupleList args;
    std::vector<std::pair<std::size_t, std::int64_t>> basis;
    std::map<std::pair<std::size_t, std::int64_t>, std::int64_t> row;
};

CochainBlock cochain_block(const FiniteGradedAlgebra& A, const AlgebraBimodule& M, int n,
                           const GroupElement& h, bool normalized) {
    CochainBlock b;
    b.args = argument_tuples(A, n, normalized);
    const auto dim = static_cast<std::int64_t>(M.basis.size());
    for (std::size_t t = 0; t < b.args.tuples.size(); ++t) {
        const GroupElement target = A.group.op(h, b.args.degrees[t]);
        for (std::int64_t m = 0; m < dim; ++m) {
            if (M.basis[static_cast<std::size_t>(m)].degree != target) continue;
            b.row.emplace(std::make_pair(t, m), static_cast<std::int64_t>(b.basis.size()));
            b.basis.emplace_back(t, m);
        }
    }
    return b;
}

}  // namespace

ExactMatrix FiniteGradedAlgebra::rmul(std::int64_t i) const {
    ExactMatrix out(dim(), dim(), root_order);
    for (std::int64_t j = 0; j < dim(); ++j)
        for (std::int64_t k = 0; k < dim(); ++k) out.at(k, j) = lmul[static_cast<std::size_t>(j)].at(k, i);
    return out;
}

FiniteGradedAlgebra truncate_enveloping(const Enveloping& U, std::size_t cap) {
    auto monomials = U.pbw_monomials_finite(cap);
    if (!monomials) {
        std::string msg = "enveloping algebra is not finite-dimensional at cap " +
                          std::to_string(cap);
        for (std::int32_t i = 0; i < U.lie().dim(); ++i) {
            if (U.lie().parity(i) == 1) {
                msg += "; powers of the even generator " + U.lie().name(i) +
                       " never terminate";
                break;
            }
        }
        throw std::runtime_error(msg);
    }

    FiniteGradedAlgebra A;
    A.root_order = U.root_order();
    A.group = U.lie().group();
    std::map<Monomial, std::int64_t> index;
    for (const auto& w : *monomials) {
        index.emplace(w, A.dim());
        A.basis.push_back({U.monomial_to_string(w), U.degree(w)});
        A.words.push_back(w);
        if (w.empty()) A.unit = A.dim() - 1;
    }
    const std::int64_t d = A.dim();
    const Scalar one = Scalar::one(A.root_order);

    for (std::int64_t i = 0; i < d; ++i) {
        ExactMatrix m(d, d, A.root_order);
        const UElement ei = {{A.words[static_cast<std::size_t>(i)], one}};
        for (std::int64_t j = 0; j < d; ++j)
            for (const auto& [w, c] : U.u_multiply(ei, {{A.words[static_cast<std::size_t>(j)], one}}))
                m.at(index.at(w), j) = c;
        A.lmul.push_back(std::move(m));
    }

    A.antipode = ExactMatrix(d, d, A.root_order);
    for (std::int64_t i = 0; i < d; ++i) {
        const UElement ei = {{A.words[static_cast<std::size_t>(i)], one}};
        A.counit.push_back(U.counit(ei));
        for (const auto& [w, c] : U.antipode(ei)) A.antipode.at(index.at(w), i) = c;
        ExactMatrix cp(d, d, A.root_order);
        for (const auto& [pair, c] : U.coproduct(ei))
            cp.at(index.at(pair.first), index.at(pair.second)) += c;
        A.coproduct.push_back(std::move(cp));
    }
    return A;
}

ValidationReport validate_finite_algebra(const FiniteGradedAlgebra& A) {
    ValidationReport r;
    const std::int64_t d = A.dim();
    const Scalar one = Scalar::one(A.root_order);

    bool unit_ok = A.unit >= 0 && A.unit < d &&
                   A.basis[static_cast<std::size_t>(A.unit)].degree == A.group.identity() &&
                   A.lmul[static_cast<std::size_t>(A.unit)] ==
                       ExactMatrix::identity(d, A.root_order);
    std::string unit_witness;
    if (unit_ok) {
        for (std::int64_t i = 0; i < d && unit_ok; ++i)
            for (std::int64_t k = 0; k < d && unit_ok; ++k) {
                const Scalar want = (k == i) ? one : Scalar::zero(A.root_order);
                if (A.lmul[static_cast<std::size_t>(i)].at(k, A.unit) != want) {
                    unit_ok = false;
                    unit_witness = cell_name(A, i) + " * 1 is not " + cell_name(A, i);
                }
            }
    } else {
        unit_witness = "left multiplication by the unit is not the identity";
    }
    r.add("unit laws", unit_ok, unit_witness);

    bool graded = true;
    std::string gw;
    for (std::int64_t i = 0; i < d && graded; ++i)
        for (std::int64_t j = 0; j < d && graded; ++j) {
            const GroupElement target =
                A.group.op(A.basis[static_cast<std::size_t>(i)].degree,
                           A.basis[static_cast<std::size_t>(j)].degree);
            for (std::int64_t k = 0; k < d; ++k) {
                if (A.lmul[static_cast<std::size_t>(i)].at(k, j).is_zero()) continue;
                if (A.basis[static_cast<std::size_t>(k)].degree != target) {
                    graded = false;
                    gw = cell_name(A, i) + " * " + cell_name(A, j) + " meets " +
                         cell_name(A, k) + " outside degree " + group_element_to_string(target);
                    break;
                }
            }
        }
    r.add("multiplicative grading", graded, gw);

    bool assoc = true;
    std::string aw;
    for (std::int64_t i = 0; i < d && assoc; ++i)
        for (std::int64_t j = 0; j < d && assoc; ++j) {
            ExactMatrix lhs = A.lmul[static_cast<std::size_t>(i)] * A.lmul[static_cast<std::size_t>(j)];
            ExactMatrix rhs(d, d, A.root_order);
            for (std::int64_t k = 0; k < d; ++k) {
                const Scalar c = A.lmul[static_cast<std::size_t>(i)].at(k, j);
                if (c.is_zero()) continue;
                rhs = rhs + A.lmul[static_cast<std::size_t>(k)].scaled(c);
            }
            if (!(lhs == rhs)) {
                assoc = false;
                aw = "associativity fails against " + cell_name(A, i) + " * " + cell_name(A, j);
            }
        }
    r.add("associativity", assoc, aw);

    if (A.counit.empty()) return r;

    bool counit_ok = A.counit[static_cast<std::size_t>(A.unit)] == one;
    std::string cw = counit_ok ? "" : "counit of the unit is not 1";
    for (std::int64_t i = 0; i < d && counit_ok; ++i)
        for (std::int64_t k = 0; k < d && counit_ok; ++k) {
            // (eps (x) id) Delta = id = (id (x) eps) Delta
            Scalar left = Scalar::zero(A.root_order), right = Scalar::zero(A.root_order);
            for (std::int64_t j = 0; j < d; ++j) {
                left += A.counit[static_cast<std::size_t>(j)] *
                        A.coproduct[static_cast<std::size_t>(i)].at(j, k);
                right += A.coproduct[static_cast<std::size_t>(i)].at(k, j) *
                         A.counit[static_cast<std::size_t>(j)];
            }
            const Scalar want = (k == i) ? one : Scalar::zero(A.root_order);
            if (left != want || right != want) {
                counit_ok = false;
                cw = "counit law fails on " + cell_name(A, i);
            }
        }
    r.add("counit laws", counit_ok, cw);

    bool coassoc = true;
    std::string ww;
    for (std::int64_t i = 0; i < d && coassoc; ++i)
        for (std::int64_t a = 0; a < d && coassoc; ++a)
            for (std::int64_t b = 0; b < d && coassoc; ++b)
                for (std::int64_t c = 0; c < d; ++c) {
                    Scalar lhs = Scalar::zero(A.root_order), rhs = Scalar::zero(A.root_order);
                    for (std::int64_t j = 0; j < d; ++j) {
                        lhs += A.coproduct[static_cast<std::size_t>(i)].at(j, c) *
                               A.coproduct[static_cast<std::size_t>(j)].at(a, b);
                        rhs += A.coproduct[static_cast<std::size_t>(i)].at(a, j) *
                               A.coproduct[static_cast<std::size_t>(j)].at(b, c);
                    }
                    if (lhs != rhs) {
                        coassoc = false;
                        ww = "coassociativity fails on " + cell_name(A, i);
                        break;
                    }
                }
    r.add("coassociativity", coassoc, ww);

    bool conv = true;
    std::string sw;
    for (std::int64_t i = 0; i < d && conv; ++i) {
        std::vector<Scalar> left(static_cast<std::size_t>(d), Scalar::zero(A.root_order));
        std::vector<Scalar> right(static_cast<std::size_t>(d), Scalar::zero(A.root_order));
        for (std::int64_t j = 0; j < d; ++j)
            for (std::int64_t k = 0; k < d; ++k) {
                const Scalar c = A.coproduct[static_cast<std::size_t>(i)].at(j, k);
                if (c.is_zero()) continue;
                // m(S (x) id): S(e_j) e_k, and m(id (x) S): e_j S(e_k)
                for (std::int64_t l = 0; l < d; ++l) {
                    const Scalar sj = A.antipode.at(l, j);
                    if (!sj.is_zero())
                        for (std::int64_t t = 0; t < d; ++t)
                            left[static_cast<std::size_t>(t)] +=
                                c * sj * A.lmul[static_cast<std::size_t>(l)].at(t, k);
                    const Scalar sk = A.antipode.at(l, k);
                    if (!sk.is_zero())
                        for (std::int64_t t = 0; t < d; ++t)
                            right[static_cast<std::size_t>(t)] +=
                                c * sk * A.lmul[static_cast<std::size_t>(j)].at(t, l);
                }
            }
        for (std::int64_t t = 0; t < d; ++t) {
            const Scalar want = (t == A.unit) ? A.counit[static_cast<std::size_t>(i)]
                                              : Scalar::zero(A.root_order);
            if (left[static_cast<std::size_t>(t)] != want ||
                right[static_cast<std::size_t>(t)] != want) {
                conv = false;
                sw = "antipode convolution fails on " + cell_name(A, i);
                break;
            }
        }
    }
    r.add("antipode convolution", conv, sw);
    return r;
}

AlgebraBimodule lift_bimodule(const FiniteGradedAlgebra& A, const GradedBimodule& M) {
    AlgebraBimodule out;
    out.basis = M.basis;
    const auto dim = static_cast<std::int64_t>(M.basis.size());
    for (std::int64_t i = 0; i < A.dim(); ++i) {
        const Monomial& w = A.words[static_cast<std::size_t>(i)];
        out.left.push_back(word_action(M.act, dim, A.root_order, w, false));
        out.right.push_back(word_action(M.ract, dim, A.root_order, w, true));
    }
    return out;
}

ValidationReport validate_algebra_bimodule(const FiniteGradedAlgebra& A,
                                           const AlgebraBimodule& M) {
    ValidationReport r;
    const std::int64_t d = A.dim();
    const auto dim = static_cast<std::int64_t>(M.basis.size());

    bool unit_ok = M.left[static_cast<std::size_t>(A.unit)] == ExactMatrix::identity(dim, A.root_order) &&
                   M.right[static_cast<std::size_t>(A.unit)] == ExactMatrix::identity(dim, A.root_order);
    r.add("unit acts as identity", unit_ok, unit_ok ? "" : "action of 1 is not the identity");

    bool degree_ok = true;
    std::string dw;
    for (std::int64_t i = 0; i < d && degree_ok; ++i)
        for (std::int64_t j = 0; j < dim && degree_ok; ++j)
            for (std::int64_t k = 0; k < dim; ++k) {
                const GroupElement gi = A.basis[static_cast<std::size_t>(i)].degree;
                const GroupElement gj = M.basis[static_cast<std::size_t>(j)].degree;
                if (!M.left[static_cast<std::size_t>(i)].at(k, j).is_zero() &&
                    M.basis[static_cast<std::size_t>(k)].degree != A.group.op(gi, gj)) {
                    degree_ok = false;
                    dw = "left action of " + cell_name(A, i) + " breaks the grading";
                    break;
                }
                if (!M.right[static_cast<std::size_t>(i)].at(k, j).is_zero() &&
                    M.basis[static_cast<std::size_t>(k)].degree != A.group.op(gj, gi)) {
                    degree_ok = false;
                    dw = "right action of " + cell_name(A, i) + " breaks the grading";
                    break;
                }
            }
    r.add("action degrees", degree_ok, dw);

    bool mult_ok = true;
    std::string mw;
    for (std::int64_t i = 0; i < d && mult_ok; ++i)
        for (std::int64_t j = 0; j < d && mult_ok; ++j) {
            ExactMatrix lexp(dim, dim, A.root_order), rexp(dim, dim, A.root_order);
            for (std::int64_t k = 0; k < d; ++k) {
                const Scalar c = A.lmul[static_cast<std::size_t>(i)].at(k, j);
                if (c.is_zero()) continue;
                lexp = lexp + M.left[static_cast<std::size_t>(k)].scaled(c);
                rexp = rexp + M.right[static_cast<std::size_t>(k)].scaled(c);
            }
            if (!(M.left[static_cast<std::size_t>(i)] * M.left[static_cast<std::size_t>(j)] == lexp)) {
                mult_ok = false;
                mw = "left action is not multiplicative on " + cell_name(A, i) + ", " + cell_name(A, j);
            } else if (!(M.right[static_cast<std::size_t>(j)] * M.right[static_cast<std::size_t>(i)] == rexp)) {
                mult_ok = false;
                mw = "right action does not reverse products on " + cell_name(A, i) + ", " + cell_name(A, j);
            }
        }
    r.add("action composition", mult_ok, mw);

    bool comm = true;
    std::string cw;
    for (std::int64_t i = 0; i < d && comm; ++i)
        for (std::int64_t j = 0; j < d; ++j)
            if (!(M.left[static_cast<std::size_t>(i)] * M.right[static_cast<std::size_t>(j)] ==
                  M.right[static_cast<std::size_t>(j)] * M.left[static_cast<std::size_t>(i)])) {
                comm = false;
                cw = "left " + cell_name(A, i) + " and right " + cell_name(A, j) + " do not commute";
                break;
            }
    r.add("left and right actions commute", comm, cw);
    return r;
}

ExactMatrix hochschild_delta(const FiniteGradedAlgebra& A, const AlgebraBimodule& M,
                             int n, const GroupElement& h, bool normalized) {
    if (n < 0) throw std::invalid_argument("cochain degree must be nonnegative");
    const CochainBlock dom = cochain_block(A, M, n, h, normalized);
    const CochainBlock cod = cochain_block(A, M, n + 1, h, normalized);
    const auto dim = static_cast<std::int64_t>(M.basis.size());

    ExactMatrix delta(static_cast<std::int64_t>(cod.basis.size()),
                      static_cast<std::int64_t>(dom.basis.size()), A.root_order);
    for (std::int64_t col = 0; col < delta.cols(); ++col) {
        const auto& [ti, b] = dom.basis[static_cast<std::size_t>(col)];
        const auto& t = dom.args.tuples[ti];
        for (std::size_t si = 0; si < cod.args.tuples.size(); ++si) {
            const auto& s = cod.args.tuples[si];
            std::vector<Scalar> value(static_cast<std::size_t>(dim), Scalar::zero(A.root_order));
            bool touched = false;

            if (std::equal(s.begin() + 1, s.end(), t.begin(), t.end())) {
                const ExactMatrix& L = M.left[static_cast<std::size_t>(s[0])];
                for (std::int64_t k = 0; k < dim; ++k) value[static_cast<std::size_t>(k)] += L.at(k, b);
                touched = true;
            }
            for (int i = 1; i <= n; ++i) {
                // merge slots i-1 and i of s; the rest must agree with t
                bool match = true;
                for (int p = 0; p < i - 1 && match; ++p) match = s[static_cast<std::size_t>(p)] == t[static_cast<std::size_t>(p)];
                for (int p = i; p < n && match; ++p) match = s[static_cast<std::size_t>(p) + 1] == t[static_cast<std::size_t>(p)];
                if (!match) continue;
                const Scalar c = A.lmul[static_cast<std::size_t>(s[static_cast<std::size_t>(i - 1)])].at(
                    t[static_cast<std::size_t>(i - 1)], s[static_cast<std::size_t>(i)]);
                if (c.is_zero()) continue;
                value[static_cast<std::size_t>(b)] += (i % 2 == 1) ? -c : c;
                touched = true;
            }
            if (std::equal(s.begin(), s.end() - 1, t.begin(), t.end())) {
                const ExactMatrix& R = M.right[static_cast<std::size_t>(s[static_cast<std::size_t>(n)])];
                for (std::int64_t k = 0; k < dim; ++k) {
                    const Scalar c = R.at(k, b);
                    value[static_cast<std::size_t>(k)] += (n % 2 == 0) ? -c : c;
                }
                touched = true;
            }
            if (!touched) continue;

            for (std::int64_t k = 0; k < dim; ++k) {
                const Scalar& v = value[static_cast<std::size_t>(k)];
                if (v.is_zero()) continue;
                auto it = cod.row.find({si, k});
                if (it == cod.row.end())
                    throw std::logic_error("bar differential left the degree block");
                delta.at(it->second, col) += v;
            }
        }
    }
    return delta;
}

namespace {

std::vector<GroupElement> hochschild_window(const FiniteGradedAlgebra& A,
                                            const AlgebraBimodule& M, int n_max,
                                            bool normalized) {
    if (A.group.is_finite()) return A.group.elements();
    std::set<GroupElement> hs;
    for (int n = 0; n <= n_max; ++n) {
        const TupleList args = argument_tuples(A, n, normalized);
        for (const auto& dg : args.degrees)
            for (const auto& mb : M.basis)
                hs.insert(A.group.op(mb.degree, A.group.inverse(dg)));
    }
    return {hs.begin(), hs.end()};
}

}  // namespace

std::map<GroupElement, std::vector<std::int64_t>> hochschild_dims(
    const FiniteGradedAlgebra& A, const AlgebraBimodule& M, int n_max,
    const std::optional<std::vector<GroupElement>>& window, bool normalized) {
    std::vector<GroupElement> degrees;
    if (window) {
        for (const auto& h : *window) degrees.push_back(A.group.reduce(h));
        std::sort(degrees.begin(), degrees.end());
        degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    } else {
        degrees = hochschild_window(A, M, n_max, normalized);
    }

    std::map<GroupElement, std::vector<std::int64_t>> out;
    for (const auto& h : degrees) {
        std::vector<std::int64_t> dims;
        std::int64_t prev_rank = 0;
        for (int n = 0; n <= n_max; ++n) {
            RankInfo info = rank_kernel(hochschild_delta(A, M, n, h, normalized));
            dims.push_back(info.kernel_dim - prev_rank);
            prev_rank = info.rank;
        }
        out[h] = std::move(dims);
    }
    return out;
}

std::map<GroupElement, std::vector<std::int64_t>> hochschild_dims(
    const FiniteGradedAlgebra& A, const GradedBimodule& M, int n_max,
    const std::optional<std::vector<GroupElement>>& window, bool normalized) {
    return hochschild_dims(A, lift_bimodule(A, M), n_max, window, normalized);
}

std::map<GroupElement, std::int64_t> centralizer_dims(const FiniteGradedAlgebra& A,
                                                      const AlgebraBimodule& M) {
    const auto dim = static_cast<std::int64_t>(M.basis.size());
    std::map<GroupElement, std::vector<std::int64_t>> slots;
    for (std::int64_t j = 0; j < dim; ++j)
        slots[M.basis[static_cast<std::size_t>(j)].degree].push_back(j);

    std::map<GroupElement, std::int64_t> out;
    for (const auto& [h, cols] : slots) {
        const auto width = static_cast<std::int64_t>(cols.size());
        ExactMatrix system(A.dim() * dim, width, A.root_order);
        for (std::int64_t i = 0; i < A.dim(); ++i)
            for (std::int64_t k = 0; k < dim; ++k)
                for (std::int64_t c = 0; c < width; ++c)
                    system.at(i * dim + k, c) =
                        M.left[static_cast<std::size_t>(i)].at(k, cols[static_cast<std::size_t>(c)]) -
                        M.right[static_cast<std::size_t>(i)].at(k, cols[static_cast<std::size_t>(c)]);
        out[h] = rank_kernel(system).kernel_dim;
    }
    return out;
}

ComparisonReport compare_cohomology_tables(const Enveloping& U, const GradedBimodule& M, int n_max,
                                  const std::optional<std::vector<GroupElement>>& window) {
    const FiniteGradedAlgebra A = truncate_enveloping(U);
    const AlgebraBimodule AM = lift_bimodule(A, M);
    const auto lhs_table = hochschild_dims(A, AM, n_max, window);

    const GroupSpec& G = U.lie().group();
    ComparisonReport report;
    for (const auto& [h, lhs] : lhs_table) {
        GradedModule ad = adjoint_module(U, shift_bimodule(G, M, h));
        const auto rhs_table =
            lie_cohomology_dims(U, ad, n_max, std::vector<GroupElement>{G.identity()});
        const auto& rhs = rhs_table.at(G.identity());
        for (int n = 0; n <= n_max; ++n) {
            ComparisonCell cell;
            cell.n = n;
            cell.h = h;
            cell.lhs = lhs[static_cast<std::size_t>(n)];
            cell.rhs = rhs[static_cast<std::size_t>(n)];
            report.all_equal = report.all_equal && cell.lhs == cell.rhs;
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

}  // namespace colorhom
