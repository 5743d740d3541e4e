#include <colorhom/spec_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{
        "colorhom: exact verification of color Lie algebras, their enveloping "
        "Hopf algebras, Koszul resolutions and graded cohomology"};
    std::string command, path;
    app.add_option("command", command, "one of validate, hopf-check, koszul-check, "
                                       "lie-cohomology, hochschild, compare")
        ->required()
        ->check(CLI::IsMember({"validate", "hopf-check", "koszul-check", "lie-cohomology",
                               "hochschild", "compare"}));
    app.add_option("spec", path, "problem description file (JSON)")->required();

    colorhom::RunFlags flags;
    int n_max = 0, p_max = 0, word_len = 0;
    std::string window;
    auto* on = app.add_option("--n-max", n_max, "cohomological degree cap");
    auto* op = app.add_option("--p-max", p_max, "filtration level cap for koszul-check");
    auto* ow = app.add_option("--word-len", word_len, "basis word length cap for the check commands");
    auto* od = app.add_option("--degree-window", window,
                              "\"all\" or a JSON list of group elements, e.g. [[0],[1]]");
    app.add_flag("--pretty", flags.pretty, "aligned text tables instead of JSON");
    app.add_option("--dump-matrices", flags.dump_dir,
                   "directory for the differential block matrices");

    CLI11_PARSE(app, argc, argv);
    if (on->count()) flags.n_max = n_max;
    if (op->count()) flags.p_max = p_max;
    if (ow->count()) flags.word_len = word_len;
    if (od->count()) flags.degree_window = window;

    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    try {
        const colorhom::ProblemSpec spec = colorhom::parse_spec(text);
        const colorhom::RunResult res = colorhom::run_command(command, spec, flags);
        std::cout << res.output;
        return res.status;
    } catch (const colorhom::SpecError& e) {
        std::cerr << colorhom::format_spec_error(text, e, path) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
