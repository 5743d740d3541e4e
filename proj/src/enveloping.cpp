#include <colorhom/enveloping.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace colorhom {

void u_acc(UElement& acc, const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = acc.find(m);
    if (it == acc.end()) {
        acc.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

UElement u_add(UElement a, const UElement& b) {
    for (const auto& [m, c] : b) u_acc(a, m, c);
    return a;
}

UElement u_scale(const Scalar& c, UElement a) {
    if (c.is_zero()) return {};
    for (auto& [m, v] : a) v *= c;
    return a;
}

bool u_is_zero(const UElement& a) { return a.empty(); }

void t_acc(TensorUElement& acc, const TensorTerm& t, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = acc.find(t);
    if (it == acc.end()) {
        acc.emplace(t, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

TensorUElement t_add(TensorUElement a, const TensorUElement& b) {
    for (const auto& [t, c] : b) t_acc(a, t, c);
    return a;
}

TensorUElement t_scale(const Scalar& c, TensorUElement a) {
    if (c.is_zero()) return {};
    for (auto& [t, v] : a) v *= c;
    return a;
}

UElement Enveloping::from_lie(const LieElement& a) const {
    UElement out;
    for (const auto& [i, c] : a) u_acc(out, Monomial{i}, c);
    return out;
}

GroupElement Enveloping::degree(const Monomial& m) const {
    GroupElement d = L_.group().identity();
    for (auto i : m) d = L_.group().op(d, L_.degree(i));
    return d;
}

bool Enveloping::is_pbw(const Monomial& m) const {
    for (std::size_t k = 0; k + 1 < m.size(); ++k) {
        if (m[k] > m[k + 1]) return false;
        if (m[k] == m[k + 1] && L_.parity(m[k]) == -1) return false;
    }
    return true;
}

UElement Enveloping::normal_form(const Monomial& word, const Scalar& coeff) const {
    UElement out;
    std::vector<std::pair<Monomial, Scalar>> work{{word, coeff}};
    const Scalar half(Rational(1, 2), root_order());
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        if (c.is_zero()) continue;
        std::size_t k = w.size();
        bool square = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] > w[i + 1]) { k = i; break; }
            if (w[i] == w[i + 1] && L_.parity(w[i]) == -1) {
                k = i;
                square = true;
                break;
            }
        }
        if (k == w.size()) {
            u_acc(out, w, c);
            continue;
        }
        if (square) {
            // x x = [x,x]/2 for odd x (exact in characteristic zero)
            for (const auto& [t, s] : L_.bracket_basis(w[k], w[k])) {
                Monomial shorter(w.begin(), w.begin() + k);
                shorter.push_back(t);
                shorter.insert(shorter.end(), w.begin() + k + 2, w.end());
                work.emplace_back(std::move(shorter), c * s * half);
            }
        } else {
            const std::int32_t j = w[k], i = w[k + 1];
            Monomial swapped = w;
            std::swap(swapped[k], swapped[k + 1]);
            work.emplace_back(std::move(swapped), c * L_.eps_basis(j, i));
            for (const auto& [t, s] : L_.bracket_basis(j, i)) {
                Monomial shorter(w.begin(), w.begin() + k);
                shorter.push_back(t);
                shorter.insert(shorter.end(), w.begin() + k + 2, w.end());
                work.emplace_back(std::move(shorter), c * s);
            }
        }
    }
    return out;
}

UElement Enveloping::u_multiply(const UElement& a, const UElement& b) const {
    UElement out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial w = ma;
            w.insert(w.end(), mb.begin(), mb.end());
            out = u_add(std::move(out), normal_form(w, ca * cb));
        }
    return out;
}

Scalar Enveloping::chi_deg(const Bicharacter* chi, const GroupElement& g,
                           const GroupElement& h) const {
    return chi_eval(L_.group(), chi ? *chi : L_.chi(), g, h);
}

UElement Enveloping::twisted_product(const UElement& a, const UElement& b,
                                     const Bicharacter* chi) const {
    UElement out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Scalar f = chi_deg(chi, degree(ma), degree(mb)) * ca * cb;
            Monomial w = ma;
            w.insert(w.end(), mb.begin(), mb.end());
            out = u_add(std::move(out), normal_form(w, f));
        }
    return out;
}

UElement Enveloping::twisted_opposite_product(const UElement& a, const UElement& b,
                                              const Bicharacter* chi) const {
    UElement out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Scalar f = chi_deg(chi, degree(ma), degree(mb)) * ca * cb;
            Monomial w = mb;
            w.insert(w.end(), ma.begin(), ma.end());
            out = u_add(std::move(out), normal_form(w, f));
        }
    return out;
}

TensorUElement Enveloping::lusztig_multiply(const TensorUElement& s,
                                            const TensorUElement& t) const {
    TensorUElement out;
    for (const auto& [p, cp] : s)
        for (const auto& [q, cq] : t) {
            Scalar f = cp * cq * chi_deg(nullptr, degree(p.second), degree(q.first));
            if (f.is_zero()) continue;
            Monomial lw = p.first;
            lw.insert(lw.end(), q.first.begin(), q.first.end());
            Monomial rw = p.second;
            rw.insert(rw.end(), q.second.begin(), q.second.end());
            UElement left = normal_form(lw, Scalar::one(root_order()));
            UElement right = normal_form(rw, f);
            for (const auto& [ml, cl] : left)
                for (const auto& [mr, cr] : right) t_acc(out, {ml, mr}, cl * cr);
        }
    return out;
}

TensorUElement Enveloping::coproduct(const UElement& a) const {
    TensorUElement out;
    const Scalar one = Scalar::one(root_order());
    for (const auto& [m, c] : a) {
        TensorUElement acc{{{Monomial{}, Monomial{}}, one}};
        for (auto i : m) {
            TensorUElement dg;
            t_acc(dg, {Monomial{}, Monomial{i}}, one);
            t_acc(dg, {Monomial{i}, Monomial{}}, one);
            acc = lusztig_multiply(acc, dg);
        }
        out = t_add(std::move(out), t_scale(c, std::move(acc)));
    }
    return out;
}

Scalar Enveloping::counit(const UElement& a) const {
    auto it = a.find(Monomial{});
    return it == a.end() ? Scalar::zero(root_order()) : it->second;
}

UElement Enveloping::antipode_monomial(const Monomial& m) const {
    if (m.empty()) return one();
    // S(g rest) = chi(|g|,|rest|) S(rest) S(g) with S(g) = -g
    Monomial rest(m.begin() + 1, m.end());
    Scalar f = chi_deg(nullptr, L_.degree(m[0]), degree(rest));
    UElement tail = antipode_monomial(rest);
    UElement sg{{Monomial{m[0]}, -Scalar::one(root_order())}};
    return u_scale(f, u_multiply(tail, sg));
}

UElement Enveloping::antipode(const UElement& a) const {
    UElement out;
    for (const auto& [m, c] : a) out = u_add(std::move(out), u_scale(c, antipode_monomial(m)));
    return out;
}

UElement Enveloping::antipode_inverse_monomial(const Monomial& m) const {
    if (m.empty()) return one();
    Monomial rest(m.begin() + 1, m.end());
    Scalar f = chi_deg(nullptr, degree(rest), L_.degree(m[0])).inverse();
    UElement tail = antipode_inverse_monomial(rest);
    UElement sg{{Monomial{m[0]}, -Scalar::one(root_order())}};
    return u_scale(f, u_multiply(tail, sg));
}

UElement Enveloping::antipode_inverse(const UElement& a) const {
    UElement out;
    for (const auto& [m, c] : a)
        out = u_add(std::move(out), u_scale(c, antipode_inverse_monomial(m)));
    return out;
}

TensorUElement Enveloping::tensor_right_action(const TensorUElement& t,
                                               const UElement& b) const {
    return lusztig_multiply(t, coproduct(b));
}

TensorUElement Enveloping::free_right_action(const TensorUElement& t, const UElement& b) const {
    TensorUElement out;
    for (const auto& [p, c] : t) {
        UElement right = u_multiply({{p.second, c}}, b);
        for (const auto& [mr, cr] : right) t_acc(out, {p.first, mr}, cr);
    }
    return out;
}

TensorUElement Enveloping::psi_map(const TensorUElement& t, bool inverse) const {
    TensorUElement out;
    for (const auto& [p, c] : t) {
        TensorUElement split = coproduct({{p.second, c}});
        for (const auto& [q, cq] : split) {
            UElement first = inverse ? UElement{{q.first, Scalar::one(root_order())}}
                                     : antipode_monomial(q.first);
            UElement left = u_multiply({{p.first, cq}}, first);
            for (const auto& [ml, cl] : left) t_acc(out, {ml, q.second}, cl);
        }
    }
    return out;
}

std::vector<Monomial> Enveloping::pbw_monomials_of_length(int len) const {
    std::vector<Monomial> out;
    const std::int32_t n = L_.dim();
    Monomial cur;
    std::function<void(std::int32_t)> rec = [&](std::int32_t min_idx) {
        if (static_cast<int>(cur.size()) == len) {
            out.push_back(cur);
            return;
        }
        for (std::int32_t i = min_idx; i < n; ++i) {
            if (!cur.empty() && cur.back() == i && L_.parity(i) == -1) continue;
            cur.push_back(i);
            rec(i);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<Monomial> Enveloping::pbw_monomials(int max_len) const {
    std::vector<Monomial> out;
    for (int l = 0; l <= max_len; ++l) {
        auto part = pbw_monomials_of_length(l);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::optional<std::vector<Monomial>> Enveloping::pbw_monomials_finite(std::size_t cap) const {
    std::vector<Monomial> out;
    for (int l = 0;; ++l) {
        auto part = pbw_monomials_of_length(l);
        if (part.empty()) return out;
        out.insert(out.end(), part.begin(), part.end());
        if (out.size() > cap) return std::nullopt;
    }
}

ValidationReport Enveloping::check_hopf_axioms(int max_len) const {
    ValidationReport report;
    const Scalar one = Scalar::one(root_order());
    auto monomials = pbw_monomials(max_len);

    // apply Delta to one slot of each tensor term
    auto expand_left = [&](const TensorUElement& t) {
        Tensor3UElement out;
        for (const auto& [p, c] : t) {
            TensorUElement d = coproduct({{p.first, c}});
            for (const auto& [q, cq] : d) {
                Tensor3Term key{q.first, q.second, p.second};
                auto it = out.find(key);
                if (it == out.end()) out.emplace(key, cq);
                else {
                    it->second += cq;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
        return out;
    };
    auto expand_right = [&](const TensorUElement& t) {
        Tensor3UElement out;
        for (const auto& [p, c] : t) {
            TensorUElement d = coproduct({{p.second, c}});
            for (const auto& [q, cq] : d) {
                Tensor3Term key{p.first, q.first, q.second};
                auto it = out.find(key);
                if (it == out.end()) out.emplace(key, cq);
                else {
                    it->second += cq;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
        return out;
    };

    {
        bool ok = true;
        std::string witness;
        for (const auto& m : monomials) {
            TensorUElement d = coproduct({{m, one}});
            if (expand_left(d) != expand_right(d)) {
                ok = false;
                witness = "coassociativity fails on " + monomial_to_string(m);
                break;
            }
        }
        report.add("coassociativity", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (const auto& m : monomials) {
            TensorUElement d = coproduct({{m, one}});
            UElement left, right;
            for (const auto& [p, c] : d) {
                // (counit @ id) and (id @ counit)
                if (p.first.empty()) u_acc(left, p.second, c);
                if (p.second.empty()) u_acc(right, p.first, c);
            }
            UElement expect{{m, one}};
            if (left != expect || right != expect) {
                ok = false;
                witness = "counit law fails on " + monomial_to_string(m);
                break;
            }
        }
        report.add("counit laws", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (const auto& m : monomials) {
            TensorUElement d = coproduct({{m, one}});
            UElement lhs, rhs;
            for (const auto& [p, c] : d) {
                lhs = u_add(std::move(lhs),
                            u_scale(c, u_multiply({{p.first, one}}, antipode_monomial(p.second))));
                rhs = u_add(std::move(rhs),
                            u_scale(c, u_multiply(antipode_monomial(p.first), {{p.second, one}})));
            }
            UElement expect = u_scale(counit({{m, one}}), this->one());
            if (lhs != expect || rhs != expect) {
                ok = false;
                witness = "antipode convolution identity fails on " + monomial_to_string(m);
                break;
            }
        }
        report.add("antipode convolution identities", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (const auto& m : monomials) {
            UElement expect{{m, one}};
            if (antipode(antipode(expect)) != expect ||
                antipode_inverse(antipode(expect)) != expect ||
                antipode(antipode_inverse(expect)) != expect) {
                ok = false;
                witness = "antipode is not an involution on " + monomial_to_string(m);
                break;
            }
        }
        report.add("antipode involution and inverse", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (const auto& a : monomials) {
            for (const auto& b : monomials) {
                Scalar f = chi_deg(nullptr, degree(a), degree(b));
                UElement lhs = antipode(u_multiply({{a, one}}, {{b, one}}));
                UElement rhs =
                    u_scale(f, u_multiply(antipode_monomial(b), antipode_monomial(a)));
                if (lhs != rhs) {
                    ok = false;
                    witness = "S(ab) != chi(|a|,|b|) S(b)S(a) on a = " + monomial_to_string(a) +
                              ", b = " + monomial_to_string(b);
                    break;
                }
            }
            if (!ok) break;
        }
        report.add("antipode antihomomorphism", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (const auto& a : monomials) {
            for (const auto& b : monomials) {
                Scalar f = chi_deg(nullptr, degree(a), degree(b));
                UElement lhs = u_multiply(antipode_inverse_monomial(a), antipode_inverse_monomial(b));
                UElement rhs = u_scale(f, antipode_inverse(u_multiply({{b, one}}, {{a, one}})));
                if (lhs != rhs) {
                    ok = false;
                    witness = "inverse antipode product rule fails on a = " +
                              monomial_to_string(a) + ", b = " + monomial_to_string(b);
                    break;
                }
            }
            if (!ok) break;
        }
        report.add("inverse antipode product rule", ok, witness);
    }

    return report;
}

ValidationReport Enveloping::check_confluence(int max_len) const {
    ValidationReport report;
    const Scalar one = Scalar::one(root_order());
    const std::int32_t n = L_.dim();
    std::map<Monomial, UElement> memo;
    bool ok = true;
    std::string witness;

    // The unique result of rewriting under *every* redex choice; flags the
    // first word where two choices disagree.
    std::function<const UElement&(const Monomial&)> resolve =
        [&](const Monomial& w) -> const UElement& {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;

        std::vector<std::size_t> redexes;
        std::vector<bool> is_square;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] > w[i + 1]) {
                redexes.push_back(i);
                is_square.push_back(false);
            } else if (w[i] == w[i + 1] && L_.parity(w[i]) == -1) {
                redexes.push_back(i);
                is_square.push_back(true);
            }
        }
        if (redexes.empty()) {
            return memo.emplace(w, UElement{{w, one}}).first->second;
        }
        const Scalar half(Rational(1, 2), root_order());
        std::optional<UElement> agreed;
        for (std::size_t r = 0; r < redexes.size() && ok; ++r) {
            std::size_t k = redexes[r];
            UElement total;
            auto add_shorter = [&](std::int32_t t, const Scalar& c) {
                Monomial shorter(w.begin(), w.begin() + k);
                shorter.push_back(t);
                shorter.insert(shorter.end(), w.begin() + k + 2, w.end());
                total = u_add(std::move(total), u_scale(c, resolve(shorter)));
            };
            if (is_square[r]) {
                for (const auto& [t, s] : L_.bracket_basis(w[k], w[k])) add_shorter(t, s * half);
            } else {
                Monomial swapped = w;
                std::swap(swapped[k], swapped[k + 1]);
                total = u_scale(L_.eps_basis(w[k], w[k + 1]), resolve(swapped));
                for (const auto& [t, s] : L_.bracket_basis(w[k], w[k + 1])) add_shorter(t, s);
            }
            if (!agreed) {
                agreed = std::move(total);
            } else if (*agreed != total) {
                ok = false;
                witness = "rewrite choices diverge on word " + monomial_to_string(w);
            }
        }
        return memo.emplace(w, agreed ? std::move(*agreed) : UElement{}).first->second;
    };

    std::function<void(Monomial&, int)> walk = [&](Monomial& w, int remaining) {
        if (!ok) return;
        const UElement& nf = resolve(w);
        if (normal_form(w, one) != nf) {
            ok = false;
            witness = "leftmost strategy disagrees with exhaustive rewriting on " +
                      monomial_to_string(w);
            return;
        }
        if (remaining == 0) return;
        for (std::int32_t i = 0; i < n; ++i) {
            w.push_back(i);
            walk(w, remaining - 1);
            w.pop_back();
        }
    };
    Monomial start;
    walk(start, max_len);
    report.add("rewriting confluence", ok, witness);
    return report;
}

std::string Enveloping::monomial_to_string(const Monomial& m) const {
    if (m.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) os << ".";
        os << L_.name(m[i]);
    }
    return os.str();
}

std::string Enveloping::u_to_string(const UElement& a) const {
    if (a.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : a) {
        if (!first) os << " + ";
        os << "(" << c.to_string() << ")*" << monomial_to_string(m);
        first = false;
    }
    return os.str();
}

std::string Enveloping::tensor_to_string(const TensorUElement& t) const {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : t) {
        if (!first) os << " + ";
        os << "(" << c.to_string() << ")*" << monomial_to_string(p.first) << "@"
           << monomial_to_string(p.second);
        first = false;
    }
    return os.str();
}

}  // namespace colorhom
