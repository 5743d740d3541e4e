#include <colorhom/color_lie.hpp>

#include <set>
#include <sstream>
#include <stdexcept>

namespace colorhom {

ColorLieAlgebra::ColorLieAlgebra(GroupSpec group, Bicharacter chi,
                                 std::vector<LieBasisElement> basis,
                                 const std::vector<BracketEntry>& entries)
    : group_(std::move(group)), chi_(std::move(chi)), basis_(std::move(basis)) {
    const std::size_t n = basis_.size();
    std::set<std::string> seen;
    for (auto& b : basis_) {
        b.degree = group_.reduce(b.degree);
        if (!seen.insert(b.name).second)
            throw std::runtime_error("duplicate basis name '" + b.name + "'");
    }
    parities_.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        parities_.push_back(parity_sign(group_, chi_, basis_[i].degree));

    table_.assign(n, std::vector<LieElement>(n));
    std::set<std::pair<std::int32_t, std::int32_t>> given;
    for (const auto& e : entries) {
        if (e.left < 0 || e.right < 0 || static_cast<std::size_t>(e.left) >= n ||
            static_cast<std::size_t>(e.right) >= n)
            throw std::runtime_error("bracket entry index out of range");
        if (!given.insert({e.left, e.right}).second) {
            std::ostringstream os;
            os << "duplicate bracket entry for (" << basis_[e.left].name << ", "
               << basis_[e.right].name << ")";
            throw std::runtime_error(os.str());
        }
        table_[e.left][e.right] = e.value;
    }
    // Complete the table via antisymmetry where only one orientation was given.
    for (const auto& [i, j] : given) {
        if (i == j || given.count({j, i})) continue;
        Scalar c = -eps_basis(j, i);
        LieElement mirror;
        for (const auto& [k, v] : table_[i][j]) {
            Scalar w = c * v;
            if (!w.is_zero()) mirror[k] = w;
        }
        table_[j][i] = std::move(mirror);
    }
}

std::int32_t ColorLieAlgebra::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name == name) return static_cast<std::int32_t>(i);
    return -1;
}

LieElement lie_add(LieElement a, const LieElement& b) {
    for (const auto& [k, v] : b) {
        auto it = a.find(k);
        if (it == a.end()) {
            if (!v.is_zero()) a[k] = v;
        } else {
            it->second += v;
            if (it->second.is_zero()) a.erase(it);
        }
    }
    return a;
}

LieElement lie_scale(const Scalar& c, LieElement a) {
    if (c.is_zero()) return {};
    for (auto& [k, v] : a) v *= c;
    return a;
}

bool lie_is_zero(const LieElement& a) {
    for (const auto& [k, v] : a)
        if (!v.is_zero()) return false;
    return true;
}

std::string lie_to_string(const ColorLieAlgebra& L, const LieElement& a) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : a) {
        if (v.is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << v.to_string() << ")*" << L.name(k);
        first = false;
    }
    return first ? "0" : os.str();
}

LieElement bracket(const ColorLieAlgebra& L, const LieElement& a, const LieElement& b) {
    LieElement out;
    for (const auto& [i, ca] : a)
        for (const auto& [j, cb] : b) {
            Scalar c = ca * cb;
            if (c.is_zero()) continue;
            out = lie_add(std::move(out), lie_scale(c, L.bracket_basis(i, j)));
        }
    return out;
}

ValidationReport validate_color_lie(const ColorLieAlgebra& L) {
    ValidationReport report;
    const std::int32_t n = L.dim();

    {
        bool ok = true;
        std::string witness;
        for (std::int32_t i = 0; i < n && ok; ++i)
            for (std::int32_t j = 0; j < n && ok; ++j) {
                GroupElement want = L.group().op(L.degree(i), L.degree(j));
                for (const auto& [k, v] : L.bracket_basis(i, j)) {
                    if (v.is_zero() || L.degree(k) == want) continue;
                    ok = false;
                    std::ostringstream os;
                    os << "[" << L.name(i) << "," << L.name(j) << "] has component " << L.name(k)
                       << " of degree " << group_element_to_string(L.degree(k)) << ", expected "
                       << group_element_to_string(want);
                    witness = os.str();
                    break;
                }
            }
        report.add("bracket degree compatibility", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (std::int32_t i = 0; i < n && ok; ++i)
            for (std::int32_t j = i; j < n && ok; ++j) {
                LieElement residue = lie_add(
                    L.bracket_basis(i, j),
                    lie_scale(L.eps_basis(i, j), L.bracket_basis(j, i)));
                if (!lie_is_zero(residue)) {
                    ok = false;
                    std::ostringstream os;
                    os << "[" << L.name(i) << "," << L.name(j) << "] + eps*[" << L.name(j) << ","
                       << L.name(i) << "] = " << lie_to_string(L, residue);
                    witness = os.str();
                }
            }
        report.add("eps-antisymmetry", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (std::int32_t i = 0; i < n && ok; ++i)
            for (std::int32_t j = 0; j < n && ok; ++j)
                for (std::int32_t k = 0; k < n && ok; ++k) {
                    LieElement xi{{i, Scalar::one(L.root_order())}};
                    LieElement xj{{j, Scalar::one(L.root_order())}};
                    LieElement xk{{k, Scalar::one(L.root_order())}};
                    LieElement sum = lie_scale(L.eps_basis(k, i), bracket(L, xi, bracket(L, xj, xk)));
                    sum = lie_add(std::move(sum),
                                  lie_scale(L.eps_basis(i, j), bracket(L, xj, bracket(L, xk, xi))));
                    sum = lie_add(std::move(sum),
                                  lie_scale(L.eps_basis(j, k), bracket(L, xk, bracket(L, xi, xj))));
                    if (!lie_is_zero(sum)) {
                        ok = false;
                        std::ostringstream os;
                        os << "Jacobi residue on (" << L.name(i) << "," << L.name(j) << ","
                           << L.name(k) << ") = " << lie_to_string(L, sum);
                        witness = os.str();
                    }
                }
        report.add("eps-Jacobi", ok, witness);
    }

    return report;
}

namespace {

Scalar s_one() { return Scalar::one(2); }

}  // namespace

ColorLieAlgebra make_abelian_odd(int k) {
    GroupSpec G{{2}};
    Bicharacter chi{2, {{1}}};
    std::vector<LieBasisElement> basis;
    for (int i = 1; i <= k; ++i)
        basis.push_back({"x" + std::to_string(i), {1}});
    return ColorLieAlgebra(G, chi, basis, {});
}

ColorLieAlgebra make_heis3() {
    GroupSpec G{{2}};
    Bicharacter chi{2, {{1}}};
    std::vector<LieBasisElement> basis = {{"x", {1}}, {"y", {1}}, {"z", {0}}};
    std::vector<BracketEntry> entries = {{0, 1, {{2, s_one()}}}};
    return ColorLieAlgebra(G, chi, basis, entries);
}

ColorLieAlgebra make_glcolor() {
    GroupSpec G{{2, 2}};
    Bicharacter chi{2, {{1, 0}, {0, 1}}};
    std::vector<LieBasisElement> basis = {
        {"x", {1, 0}}, {"y", {0, 1}}, {"z", {1, 1}}, {"w", {0, 0}}};
    std::vector<BracketEntry> entries = {
        {0, 1, {{2, s_one()}}},   // [x,y] = z
        {0, 0, {{3, s_one()}}},   // [x,x] = w
    };
    return ColorLieAlgebra(G, chi, basis, entries);
}

}  // namespace colorhom
