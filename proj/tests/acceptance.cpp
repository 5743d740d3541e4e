// End-to-end acceptance checklist. Runs the full pipeline on the shipped
// fixture files and prints one verdict line per criterion; exits nonzero if
// any criterion fails.

#include <colorhom/ce_cohomology.hpp>
#include <colorhom/hochschild.hpp>
#include <colorhom/spec_io.hpp>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace colorhom;
using nlohmann::json;

namespace {

std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(COLORHOM_FIXTURE_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Enveloping load(const std::string& name) {
    return Enveloping(build_lie(parse_spec(read_fixture(name))));
}

int failures = 0;

void criterion(int idx, const std::string& label, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = e.what();
    }
    std::printf("[%2d/10] %-55s %s\n", idx, label.c_str(), ok ? "PASS" : "FAIL");
    if (!ok) {
        ++failures;
        if (!note.empty()) std::fprintf(stderr, "        unexpected error: %s\n", note.c_str());
    }
}

// Status 1 and at least one failed check carrying a witness string.
bool fails_with_witness(const std::string& fixture) {
    RunResult res = run_command("validate", parse_spec(read_fixture(fixture)), {});
    if (res.status != 1) return false;
    const json doc = json::parse(res.output);
    for (const auto& rep : doc["reports"])
        for (const auto& chk : rep["checks"])
            if (!chk["pass"].get<bool>() && chk.contains("witness") &&
                !chk["witness"].get<std::string>().empty())
                return true;
    return false;
}

}  // namespace

int main() {
    const std::vector<std::string> good = {"abelian_odd_1.json", "abelian_odd_2.json",
                                           "heis3.json", "glcolor.json"};
    const std::vector<std::string> mutants = {
        "mutant_bicharacter_antisymmetry.json", "mutant_bicharacter_welldefined.json",
        "mutant_bracket_degree.json",           "mutant_bracket_antisymmetry.json",
        "mutant_jacobi.json",                   "mutant_module_grading.json"};

    criterion(1, "validators accept good fixtures and pin each mutant", [&] {
        bool ok = true;
        for (const auto& f : good)
            ok = ok && run_command("validate", parse_spec(read_fixture(f)), {}).status == 0;
        for (const auto& f : mutants) ok = ok && fails_with_witness(f);
        return ok;
    });

    criterion(2, "rewriting to the ordered basis is confluent", [] {
        return load("heis3.json").check_confluence(4).all_pass() &&
               load("glcolor.json").check_confluence(4).all_pass();
    });

    criterion(3, "Hopf axioms hold on all short monomials", [] {
        return load("heis3.json").check_hopf_axioms(3).all_pass() &&
               load("abelian_odd_2.json").check_hopf_axioms(4).all_pass();
    });

    criterion(4, "psi is a bijection intertwining the right actions", [] {
        for (const char* f : {"heis3.json", "abelian_odd_2.json"}) {
            Enveloping U = load(f);
            const Scalar one = Scalar::one(U.root_order());
            auto monomials = U.pbw_monomials(3);
            for (const auto& a : monomials)
                for (const auto& b : monomials) {
                    if (a.size() + b.size() > 3) continue;
                    TensorUElement t{{{a, b}, one}};
                    if (U.psi_map(U.psi_map(t, false), true) != t) return false;
                    if (U.psi_map(U.psi_map(t, true), false) != t) return false;
                }
        }
        Enveloping U = load("heis3.json");
        const Scalar one = Scalar::one(U.root_order());
        auto monomials = U.pbw_monomials(2);
        std::mt19937_64 rng(2026);
        for (int trial = 0; trial < 100; ++trial) {
            TensorUElement t{{{monomials[rng() % monomials.size()],
                              monomials[rng() % monomials.size()]},
                             one}};
            UElement act{{monomials[rng() % monomials.size()], one}};
            if (U.psi_map(U.tensor_right_action(t, act), false) !=
                U.free_right_action(U.psi_map(t, false), act))
                return false;
        }
        return true;
    });

    criterion(5, "Koszul operator identities hold exhaustively", [] {
        return check_koszul_identities(load("heis3.json"), 3, 3).all_pass() &&
               check_koszul_identities(load("abelian_odd_2.json"), 3, 3).all_pass();
    });

    criterion(6, "filtration homotopy gives d t + t d = p id", [] {
        return homotopy_check(load("heis3.json"), 3).all_pass();
    });

    criterion(7, "cochain differentials square to zero blockwise", [&] {
        for (const auto& f : good) {
            ProblemSpec spec = parse_spec(read_fixture(f));
            Enveloping U(build_lie(spec));
            const GroupSpec& G = U.lie().group();

            std::vector<GradedModule> modules;
            for (const auto& ms : spec.modules) {
                GradedModule M;
                M.basis = ms.basis;
                M.act = ms.act;
                modules.push_back(std::move(M));
            }
            modules.push_back(trivial_module(U));
            const bool finite = U.pbw_monomials_finite(4096).has_value();
            if (finite) modules.push_back(left_module(regular_bimodule(U)));

            for (const auto& M : modules)
                for (int n = 0; n <= 2; ++n)
                    for (const auto& h : G.elements()) {
                        ExactMatrix low = ce_delta(U, M, n, h);
                        ExactMatrix high = ce_delta(U, M, n + 1, h);
                        if (!(high * low).is_zero()) return false;
                    }

            if (finite) {
                FiniteGradedAlgebra A = truncate_enveloping(U);
                for (const auto& M :
                     {lift_bimodule(A, regular_bimodule(U)), lift_bimodule(A, trivial_bimodule(U))})
                    for (int n = 0; n <= 2; ++n)
                        for (const auto& h : G.elements()) {
                            ExactMatrix low = hochschild_delta(A, M, n, h);
                            ExactMatrix high = hochschild_delta(A, M, n + 1, h);
                            if (!(high * low).is_zero()) return false;
                        }
            }
        }
        return true;
    });

    criterion(8, "Hochschild and Lie cohomology tables agree", [] {
        for (const char* f : {"abelian_odd_1.json", "abelian_odd_2.json"}) {
            Enveloping U = load(f);
            for (const auto& M : {regular_bimodule(U), trivial_bimodule(U)}) {
                ComparisonReport rep = compare_cohomology_tables(U, M, 3);
                if (!rep.all_equal) return false;
                if (rep.cells.size() != 2 * 4) return false;  // |G| times n = 0..3
            }
        }
        return true;
    });

    criterion(9, "per-degree dimensions sum to the unsplit total", [] {
        Enveloping U = load("abelian_odd_1.json");
        GradedBimodule R = regular_bimodule(U);
        for (const auto& M : {trivial_module(U), left_module(R), adjoint_module(U, R)}) {
            auto split = lie_cohomology_dims(U, M, 2);
            auto total = lie_cohomology_total_dims(U, M, 2);
            for (std::size_t n = 0; n < total.size(); ++n) {
                std::int64_t sum = 0;
                for (const auto& [h, dims] : split) sum += dims[n];
                if (sum != total[n]) return false;
            }
        }
        return true;
    });

    criterion(10, "repeated comparison runs are byte-identical", [] {
        for (const char* f : {"abelian_odd_1.json", "abelian_odd_2.json"}) {
            RunResult first = run_command("compare", parse_spec(read_fixture(f)), {});
            RunResult second = run_command("compare", parse_spec(read_fixture(f)), {});
            if (first.status != 0 || first.output != second.output) return false;
        }
        return true;
    });

    if (failures) std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
