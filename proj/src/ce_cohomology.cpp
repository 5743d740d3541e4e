#include <colorhom/ce_cohomology.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace colorhom {

bool is_wedge_basis_word(const ColorLieAlgebra& L, const WedgeMonomial& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] > w[i + 1]) return false;
        if (w[i] == w[i + 1] && L.parity(w[i]) > 0) return false;
    }
    return true;
}

std::vector<WedgeMonomial> wedge_basis(const ColorLieAlgebra& L, int n) {
    std::vector<WedgeMonomial> out{{}};
    for (int step = 0; step < n; ++step) {
        std::vector<WedgeMonomial> next;
        for (const auto& w : out)
            for (std::int32_t i = w.empty() ? 0 : w.back(); i < L.dim(); ++i) {
                if (!w.empty() && i == w.back() && L.parity(i) > 0) continue;
                WedgeMonomial e = w;
                e.push_back(i);
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

GroupElement wedge_degree(const ColorLieAlgebra& L, const WedgeMonomial& w) {
    GroupElement d = L.group().identity();
    for (auto i : w) d = L.group().op(d, L.degree(i));
    return d;
}

std::map<WedgeMonomial, Scalar> wedge_normalize(const ColorLieAlgebra& L,
                                                const WedgeMonomial& word,
                                                const Scalar& coeff) {
    std::map<WedgeMonomial, Scalar> out;
    if (coeff.is_zero()) return out;
    WedgeMonomial w = word;
    Scalar c = coeff;
    // bubble sort; each adjacent swap of (a, b) multiplies by -eps(|a|,|b|)
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] > w[i + 1]) {
                c = c * (-L.eps_basis(w[i], w[i + 1]));
                std::swap(w[i], w[i + 1]);
                moved = true;
            } else if (w[i] == w[i + 1] && L.parity(w[i]) > 0) {
                return out;  // repeated even index: the word is zero
            }
        }
    }
    out.emplace(std::move(w), std::move(c));
    return out;
}

void k_acc(KoszulElement& a, const std::pair<Monomial, WedgeMonomial>& key, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = a.find(key);
    if (it == a.end()) {
        a.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) a.erase(it);
}

KoszulElement k_add(KoszulElement a, const KoszulElement& b) {
    for (const auto& [key, c] : b) k_acc(a, key, c);
    return a;
}

KoszulElement k_scale(const Scalar& c, KoszulElement a) {
    if (c.is_zero()) return {};
    for (auto& [key, v] : a) v = v * c;
    return a;
}

std::string koszul_to_string(const Enveloping& U, const KoszulElement& a) {
    if (a.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : a) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")*" + U.monomial_to_string(key.first) + "(x)<";
        for (std::size_t i = 0; i < key.second.size(); ++i) {
            if (i) out += ",";
            out += U.lie().name(key.second[i]);
        }
        out += ">";
    }
    return out;
}

namespace {

// eps_i = prod_{h<i} eps(|x_h|, |x_i|) over the wedge word, 0-indexed.
std::vector<Scalar> leading_signs(const ColorLieAlgebra& L, const WedgeMonomial& w) {
    std::vector<Scalar> eps(w.size(), Scalar::one(L.root_order()));
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t h = 0; h < i; ++h) eps[i] = eps[i] * L.eps_basis(w[h], w[i]);
    return eps;
}

WedgeMonomial erased(const WedgeMonomial& w, std::size_t i) {
    WedgeMonomial out = w;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
}

}  // namespace

KoszulElement koszul_d(const Enveloping& U, const KoszulElement& elt) {
    const ColorLieAlgebra& L = U.lie();
    KoszulElement out;
    for (const auto& [key, c] : elt) {
        const auto& [u, w] = key;
        const auto eps = leading_signs(L, w);
        for (std::size_t i = 0; i < w.size(); ++i) {
            Scalar coeff = c * eps[i];
            if (i % 2 == 1) coeff = -coeff;
            Monomial word = u;
            word.push_back(w[i]);
            const WedgeMonomial rest = erased(w, i);
            for (const auto& [m, cm] : U.normal_form(word, coeff)) k_acc(out, {m, rest}, cm);
        }
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                Scalar coeff = c * eps[i] * eps[j] * L.eps_basis(w[j], w[i]);
                if ((i + j) % 2 == 1) coeff = -coeff;
                const WedgeMonomial rest = erased(erased(w, j), i);
                for (const auto& [k, cb] : L.bracket_basis(w[i], w[j])) {
                    WedgeMonomial word{k};
                    word.insert(word.end(), rest.begin(), rest.end());
                    for (const auto& [wb, cw] : wedge_normalize(L, word, coeff * cb))
                        k_acc(out, {u, wb}, cw);
                }
            }
    }
    return out;
}

KoszulElement koszul_theta(const Enveloping& U, const LieElement& y, const KoszulElement& elt) {
    const ColorLieAlgebra& L = U.lie();
    KoszulElement out;
    for (const auto& [g, cy] : y) {
        const GroupElement gy = L.degree(g);
        for (const auto& [key, c] : elt) {
            const auto& [u, w] = key;
            Monomial word = u;
            word.push_back(g);
            for (const auto& [m, cm] :
                 U.normal_form(word, -cy * c * L.eps(gy, U.degree(u))))
                k_acc(out, {m, w}, cm);

            GroupElement left = U.degree(u);
            for (std::size_t i = 0; i < w.size(); ++i) {
                const Scalar factor = cy * c * L.eps(gy, left);
                for (const auto& [k, cb] : L.bracket_basis(g, w[i])) {
                    WedgeMonomial sub = w;
                    sub[i] = k;
                    for (const auto& [wb, cw] : wedge_normalize(L, sub, factor * cb))
                        k_acc(out, {u, wb}, cw);
                }
                left = L.group().op(left, L.degree(w[i]));
            }
        }
    }
    return out;
}

KoszulElement koszul_sigma(const Enveloping& U, const LieElement& y, const KoszulElement& elt) {
    const ColorLieAlgebra& L = U.lie();
    KoszulElement out;
    for (const auto& [g, cy] : y) {
        for (const auto& [key, c] : elt) {
            const auto& [u, w] = key;
            WedgeMonomial word{g};
            word.insert(word.end(), w.begin(), w.end());
            const Scalar factor = cy * c * L.eps(L.degree(g), U.degree(u));
            for (const auto& [wb, cw] : wedge_normalize(L, word, factor))
                k_acc(out, {u, wb}, cw);
        }
    }
    return out;
}

namespace {

void require_slice(int p, const KoszulElement& elt) {
    for (const auto& [key, c] : elt)
        if (static_cast<int>(key.first.size() + key.second.size()) != p)
            throw std::invalid_argument("element has a term of total length " +
                                        std::to_string(key.first.size() + key.second.size()) +
                                        ", not in the filtration slice " + std::to_string(p));
}

KoszulElement drop_below(int p, KoszulElement elt) {
    for (auto it = elt.begin(); it != elt.end();)
        if (static_cast<int>(it->first.first.size() + it->first.second.size()) != p)
            it = elt.erase(it);
        else
            ++it;
    return elt;
}

}  // namespace

KoszulElement koszul_d_principal(const Enveloping& U, int p, const KoszulElement& elt) {
    require_slice(p, elt);
    return drop_below(p, koszul_d(U, elt));
}

KoszulElement koszul_t(const Enveloping& U, int p, const KoszulElement& elt) {
    require_slice(p, elt);
    const ColorLieAlgebra& L = U.lie();
    KoszulElement out;
    for (const auto& [key, c] : elt) {
        const auto& [u, w] = key;
        for (std::size_t i = 0; i < u.size(); ++i) {
            Scalar factor = c;
            for (std::size_t h = i + 1; h < u.size(); ++h)
                factor = factor * L.eps_basis(u[i], u[h]);
            const Monomial rest = erased(u, i);
            WedgeMonomial word{u[i]};
            word.insert(word.end(), w.begin(), w.end());
            for (const auto& [wb, cw] : wedge_normalize(L, word, factor))
                k_acc(out, {rest, wb}, cw);
        }
    }
    return drop_below(p, std::move(out));
}

ValidationReport check_koszul_identities(
    const Enveloping& U, int n_max, int len_cap,
    const std::function<KoszulElement(const Enveloping&, const KoszulElement&)>& d_fn) {
    const ColorLieAlgebra& L = U.lie();
    auto d = [&](const KoszulElement& e) {
        return d_fn ? d_fn(U, e) : koszul_d(U, e);
    };
    const Scalar one = Scalar::one(U.root_order());

    std::vector<KoszulElement> elements;
    for (int n = 0; n <= n_max; ++n)
        for (const auto& w : wedge_basis(L, n))
            for (const auto& u : U.pbw_monomials(len_cap))
                elements.push_back({{{u, w}, one}});

    auto gen = [&](std::int32_t i) { return LieElement{{i, one}}; };
    ValidationReport report;

    {
        bool ok = true;
        std::string witness;
        for (const auto& b : elements) {
            for (std::int32_t i = 0; i < L.dim() && ok; ++i)
                for (std::int32_t j = 0; j < L.dim(); ++j) {
                    KoszulElement lhs =
                        k_add(koszul_theta(U, gen(i), koszul_theta(U, gen(j), b)),
                              k_scale(-L.eps_basis(i, j),
                                      koszul_theta(U, gen(j), koszul_theta(U, gen(i), b))));
                    if (lhs != koszul_theta(U, L.bracket_basis(i, j), b)) {
                        ok = false;
                        witness = "fails on " + koszul_to_string(U, b) + " with (" +
                                  L.name(i) + ", " + L.name(j) + ")";
                        break;
                    }
                }
            if (!ok) break;
        }
        report.add("theta bracket law", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (const auto& b : elements) {
            for (std::int32_t i = 0; i < L.dim() && ok; ++i)
                for (std::int32_t j = 0; j < L.dim(); ++j) {
                    KoszulElement rhs =
                        k_add(koszul_theta(U, gen(i), koszul_sigma(U, gen(j), b)),
                              k_scale(-L.eps_basis(i, j),
                                      koszul_sigma(U, gen(j), koszul_theta(U, gen(i), b))));
                    if (koszul_sigma(U, L.bracket_basis(i, j), b) != rhs) {
                        ok = false;
                        witness = "fails on " + koszul_to_string(U, b) + " with (" +
                                  L.name(i) + ", " + L.name(j) + ")";
                        break;
                    }
                }
            if (!ok) break;
        }
        report.add("sigma of a bracket", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (const auto& b : elements) {
            for (std::int32_t i = 0; i < L.dim(); ++i) {
                KoszulElement lhs =
                    k_add(koszul_sigma(U, gen(i), d(b)), d(koszul_sigma(U, gen(i), b)));
                if (lhs != k_scale(-one, koszul_theta(U, gen(i), b))) {
                    ok = false;
                    witness = "fails on " + koszul_to_string(U, b) + " with " + L.name(i);
                    break;
                }
            }
            if (!ok) break;
        }
        report.add("sigma d plus d sigma is minus theta", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (const auto& b : elements) {
            for (std::int32_t i = 0; i < L.dim(); ++i) {
                if (koszul_theta(U, gen(i), d(b)) != d(koszul_theta(U, gen(i), b))) {
                    ok = false;
                    witness = "fails on " + koszul_to_string(U, b) + " with " + L.name(i);
                    break;
                }
            }
            if (!ok) break;
        }
        report.add("theta commutes with d", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (const auto& b : elements) {
            if (!d(d(b)).empty()) {
                ok = false;
                witness = "d d != 0 on " + koszul_to_string(U, b);
                break;
            }
        }
        report.add("d squared is zero", ok, witness);
    }
    return report;
}

ValidationReport homotopy_check(const Enveloping& U, int p_max) {
    const ColorLieAlgebra& L = U.lie();
    const Scalar one = Scalar::one(U.root_order());
    ValidationReport report;
    for (int p = 1; p <= p_max; ++p) {
        bool ok = true;
        std::string witness;
        for (int n = 0; n <= p && ok; ++n) {
            for (const auto& w : wedge_basis(L, n)) {
                for (const auto& u : U.pbw_monomials_of_length(p - n)) {
                    KoszulElement b{{{u, w}, one}};
                    KoszulElement lhs = k_add(koszul_d_principal(U, p, koszul_t(U, p, b)),
                                              koszul_t(U, p, koszul_d_principal(U, p, b)));
                    if (lhs != k_scale(Scalar::of_int(p, U.root_order()), b)) {
                        ok = false;
                        witness = "d t + t d != " + std::to_string(p) + " id on " +
                                  koszul_to_string(U, b);
                        break;
                    }
                }
                if (!ok) break;
            }
        }
        report.add("homotopy identity at filtration " + std::to_string(p), ok, witness);
    }
    return report;
}

namespace {

// Elementary degree-preserving maps wedge^n -> M[h] as (wedge index, module
// index) pairs, wedge-major; no degree filter when h is absent.
std::vector<std::pair<std::size_t, std::int64_t>> block_basis(
    const Enveloping& U, const GradedModule& M, const std::vector<WedgeMonomial>& wedges,
    const std::optional<GroupElement>& h) {
    const GroupSpec& G = U.lie().group();
    std::vector<std::pair<std::size_t, std::int64_t>> out;
    for (std::size_t wi = 0; wi < wedges.size(); ++wi) {
        const GroupElement dw = wedge_degree(U.lie(), wedges[wi]);
        for (std::int64_t b = 0; b < static_cast<std::int64_t>(M.basis.size()); ++b)
            if (!h || M.basis[b].degree == G.op(*h, dw)) out.emplace_back(wi, b);
    }
    return out;
}

}  // namespace

ExactMatrix ce_delta(const Enveloping& U, const GradedModule& M, int n,
                     const std::optional<GroupElement>& h) {
    const ColorLieAlgebra& L = U.lie();
    const auto dom_wedges = wedge_basis(L, n);
    const auto cod_wedges = wedge_basis(L, n + 1);
    const auto dom = block_basis(U, M, dom_wedges, h);
    const auto cod = block_basis(U, M, cod_wedges, h);

    std::map<std::pair<std::size_t, std::int64_t>, std::int64_t> row_of;
    for (std::size_t r = 0; r < cod.size(); ++r) row_of.emplace(cod[r], r);

    ExactMatrix out(static_cast<std::int64_t>(cod.size()), static_cast<std::int64_t>(dom.size()),
                    U.root_order());
    for (std::size_t col = 0; col < dom.size(); ++col) {
        const WedgeMonomial& w = dom_wedges[dom[col].first];
        const std::int64_t b = dom[col].second;
        // f(word) = (coefficient of w in the normalized word) * e_b
        auto f_coeff = [&](const WedgeMonomial& word, const Scalar& c) {
            auto terms = wedge_normalize(L, word, c);
            auto it = terms.find(w);
            return it == terms.end() ? Scalar::zero(U.root_order()) : it->second;
        };
        for (std::size_t wi = 0; wi < cod_wedges.size(); ++wi) {
            const WedgeMonomial& wp = cod_wedges[wi];
            const auto eps = leading_signs(L, wp);
            std::map<std::int64_t, Scalar> value;
            auto add_value = [&](std::int64_t k, const Scalar& c) {
                if (c.is_zero()) return;
                auto [it, inserted] = value.emplace(k, c);
                if (!inserted) it->second += c;
            };
            for (std::size_t i = 0; i < wp.size(); ++i) {
                Scalar coeff = eps[i];
                if (i % 2 == 1) coeff = -coeff;
                const Scalar fc = f_coeff(erased(wp, i), coeff);
                if (fc.is_zero()) continue;
                for (std::int64_t k = 0; k < static_cast<std::int64_t>(M.basis.size()); ++k)
                    add_value(k, M.act[wp[i]].at(k, b) * fc);
            }
            for (std::size_t i = 0; i < wp.size(); ++i)
                for (std::size_t j = i + 1; j < wp.size(); ++j) {
                    Scalar coeff = eps[i] * eps[j] * L.eps_basis(wp[j], wp[i]);
                    if ((i + j) % 2 == 1) coeff = -coeff;
                    const WedgeMonomial rest = erased(erased(wp, j), i);
                    for (const auto& [k, cb] : L.bracket_basis(wp[i], wp[j])) {
                        WedgeMonomial word{k};
                        word.insert(word.end(), rest.begin(), rest.end());
                        add_value(b, f_coeff(word, coeff * cb));
                    }
                }
            for (const auto& [k, c] : value) {
                auto it = row_of.find({wi, k});
                if (it != row_of.end())
                    out.at(it->second, static_cast<std::int64_t>(col)) = c;
            }
        }
    }
    return out;
}

namespace {

std::vector<std::int64_t> complex_dims(const Enveloping& U, const GradedModule& M, int n_max,
                                       const std::optional<GroupElement>& h) {
    std::vector<std::int64_t> dims;
    std::int64_t prev_rank = 0;
    for (int n = 0; n <= n_max; ++n) {
        RankInfo info = rank_kernel(ce_delta(U, M, n, h));
        dims.push_back(info.kernel_dim - prev_rank);
        prev_rank = info.rank;
    }
    return dims;
}

}  // namespace

std::map<GroupElement, std::vector<std::int64_t>> lie_cohomology_dims(
    const Enveloping& U, const GradedModule& M, int n_max,
    const std::optional<std::vector<GroupElement>>& window) {
    const GroupSpec& G = U.lie().group();
    std::vector<GroupElement> degrees;
    if (window) {
        degrees = *window;
        for (auto& h : degrees) h = G.reduce(h);
    } else if (G.is_finite()) {
        degrees = G.elements();
    } else {
        std::set<GroupElement> seen;
        for (int n = 0; n <= n_max + 1; ++n)
            for (const auto& w : wedge_basis(U.lie(), n)) {
                const GroupElement dw = wedge_degree(U.lie(), w);
                for (const auto& b : M.basis) seen.insert(G.op(b.degree, G.inverse(dw)));
            }
        degrees.assign(seen.begin(), seen.end());
    }
    std::map<GroupElement, std::vector<std::int64_t>> out;
    for (const auto& h : degrees) out[h] = complex_dims(U, M, n_max, h);
    return out;
}

std::vector<std::int64_t> lie_cohomology_total_dims(const Enveloping& U,
                                                    const GradedModule& M, int n_max) {
    return complex_dims(U, M, n_max, std::nullopt);
}

}  // namespace colorhom
