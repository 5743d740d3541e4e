#include <colorhom/spec_io.hpp>

#include <colorhom/ce_cohomology.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace colorhom {

using nlohmann::json;

namespace {

std::string escape_segment(const std::string& seg) {
    std::string out;
    for (char c : seg) {
        if (c == '~')
            out += "~0";
        else if (c == '/')
            out += "~1";
        else
            out += c;
    }
    return out;
}

// Minimal JSON walk that only tracks positions; the real parsing is done by
// the library, this exists so diagnostics can say where a node started.
struct Scanner {
    const std::string& s;
    std::map<std::string, std::pair<int, int>>& keys;
    std::map<std::string, std::pair<int, int>>& values;
    std::size_t i = 0;
    int line = 1, col = 1;

    bool eof() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    void advance() {
        if (s[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    }
    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r'))
            advance();
    }

    std::string scan_string() {
        advance();  // opening quote
        std::string out;
        while (!eof() && peek() != '"') {
            if (peek() == '\\') {
                advance();
                if (eof()) break;
                const char c = peek();
                advance();
                if (c == 'u') {
                    for (int k = 0; k < 4 && !eof(); ++k) advance();
                    out += '?';
                } else {
                    out += c;
                }
            } else {
                out += peek();
                advance();
            }
        }
        if (!eof()) advance();  // closing quote
        return out;
    }

    void scan_value(const std::string& ptr) {
        skip_ws();
        if (eof()) return;
        values.emplace(ptr, std::make_pair(line, col));
        const char c = peek();
        if (c == '{') {
            advance();
            skip_ws();
            if (!eof() && peek() == '}') {
                advance();
                return;
            }
            while (!eof()) {
                skip_ws();
                if (eof() || peek() != '"') break;
                const int kl = line, kc = col;
                const std::string key = scan_string();
                const std::string child = ptr + "/" + escape_segment(key);
                keys.emplace(child, std::make_pair(kl, kc));
                skip_ws();
                if (!eof() && peek() == ':') advance();
                scan_value(child);
                skip_ws();
                if (!eof() && peek() == ',') {
                    advance();
                    continue;
                }
                break;
            }
            if (!eof() && peek() == '}') advance();
        } else if (c == '[') {
            advance();
            skip_ws();
            if (!eof() && peek() == ']') {
                advance();
                return;
            }
            std::size_t idx = 0;
            while (!eof()) {
                scan_value(ptr + "/" + std::to_string(idx++));
                skip_ws();
                if (!eof() && peek() == ',') {
                    advance();
                    continue;
                }
                break;
            }
            if (!eof() && peek() == ']') advance();
        } else if (c == '"') {
            scan_string();
        } else {
            while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-' ||
                              peek() == '+' || peek() == '.'))
                advance();
        }
    }
};

[[noreturn]] void fail(const std::string& ptr, const std::string& msg) {
    throw SpecError(ptr, msg);
}

const json& as_object(const json& j, const std::string& ptr) {
    if (!j.is_object()) fail(ptr, "expected an object");
    return j;
}

const json& as_array(const json& j, const std::string& ptr) {
    if (!j.is_array()) fail(ptr, "expected an array");
    return j;
}

std::string as_string(const json& j, const std::string& ptr) {
    if (!j.is_string()) fail(ptr, "expected a string");
    return j.get<std::string>();
}

std::int64_t as_int(const json& j, const std::string& ptr) {
    if (!j.is_number_integer()) fail(ptr, "expected an integer");
    return j.get<std::int64_t>();
}

void check_keys(const json& obj, const std::string& ptr,
                std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) {
                ok = true;
                break;
            }
        if (!ok) fail(ptr + "/" + escape_segment(it.key()), "unknown key \"" + it.key() + "\"");
    }
}

const json& require(const json& obj, const std::string& ptr, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(ptr.empty() ? "/" : ptr, std::string("missing key \"") + key + "\"");
    return *it;
}

GroupElement parse_group_element(const json& j, const std::string& ptr, const GroupSpec& G) {
    const json& arr = as_array(j, ptr);
    if (arr.size() != G.rank())
        fail(ptr, "group element needs " + std::to_string(G.rank()) + " entries, got " +
                      std::to_string(arr.size()));
    GroupElement g;
    for (std::size_t k = 0; k < arr.size(); ++k)
        g.push_back(as_int(arr[k], ptr + "/" + std::to_string(k)));
    return G.reduce(g);
}

Scalar parse_scalar(const json& j, const std::string& ptr, std::int64_t N) {
    const std::string text = as_string(j, ptr);
    try {
        return Scalar::parse(text, N);
    } catch (const std::exception& e) {
        fail(ptr, std::string("malformed scalar \"") + text + "\": " + e.what());
    }
}

ExactMatrix parse_matrix(const json& j, const std::string& ptr, std::int64_t dim,
                         std::int64_t N) {
    const json& rows = as_array(j, ptr);
    if (static_cast<std::int64_t>(rows.size()) != dim)
        fail(ptr, "matrix needs " + std::to_string(dim) + " rows, got " +
                      std::to_string(rows.size()));
    ExactMatrix m(dim, dim, N);
    for (std::int64_t r = 0; r < dim; ++r) {
        const std::string rptr = ptr + "/" + std::to_string(r);
        const json& row = as_array(rows[static_cast<std::size_t>(r)], rptr);
        if (static_cast<std::int64_t>(row.size()) != dim)
            fail(rptr, "matrix row needs " + std::to_string(dim) + " entries, got " +
                           std::to_string(row.size()));
        for (std::int64_t c = 0; c < dim; ++c)
            m.at(r, c) = parse_scalar(row[static_cast<std::size_t>(c)],
                                      rptr + "/" + std::to_string(c), N);
    }
    return m;
}

std::vector<ModuleBasisElement> parse_module_basis(const json& j, const std::string& ptr,
                                                   const GroupSpec& G) {
    std::vector<ModuleBasisElement> out;
    const json& arr = as_array(j, ptr);
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const std::string eptr = ptr + "/" + std::to_string(k);
        const json& entry = as_object(arr[k], eptr);
        check_keys(entry, eptr, {"name", "degree"});
        ModuleBasisElement b;
        b.name = as_string(require(entry, eptr, "name"), eptr + "/name");
        b.degree = parse_group_element(require(entry, eptr, "degree"), eptr + "/degree", G);
        for (const auto& seen : out)
            if (seen.name == b.name) fail(eptr + "/name", "duplicate basis name \"" + b.name + "\"");
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace

JsonLocator::JsonLocator(const std::string& text) {
    Scanner sc{text, keys_, values_};
    sc.scan_value("");
}

std::pair<int, int> JsonLocator::locate(const std::string& pointer) const {
    auto kit = keys_.find(pointer);
    if (kit != keys_.end()) return kit->second;
    std::string p = pointer;
    while (true) {
        auto vit = values_.find(p);
        if (vit != values_.end()) return vit->second;
        const auto slash = p.rfind('/');
        if (slash == std::string::npos) break;
        p.resize(slash);
    }
    return {1, 1};
}

ProblemSpec parse_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        int line = 1, col = 1;
        const std::size_t stop = e.byte > 0 ? e.byte - 1 : 0;
        for (std::size_t k = 0; k < stop && k < text.size(); ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        const auto cut = msg.find("] ");
        if (cut != std::string::npos) msg = msg.substr(cut + 2);
        // the location already goes into the error header, drop it from the text
        const auto colon = msg.find(": ");
        if (msg.rfind("parse error at", 0) == 0 && colon != std::string::npos)
            msg = msg.substr(colon + 2);
        throw SpecError("", msg, std::make_pair(line, col));
    }

    ProblemSpec spec;
    as_object(doc, "");
    check_keys(doc, "", {"group", "bicharacter", "lie", "modules", "options"});

    {
        const json& group = as_object(require(doc, "", "group"), "/group");
        check_keys(group, "/group", {"orders"});
        const json& orders = as_array(require(group, "/group", "orders"), "/group/orders");
        for (std::size_t k = 0; k < orders.size(); ++k) {
            const std::string optr = "/group/orders/" + std::to_string(k);
            const std::int64_t v = as_int(orders[k], optr);
            if (v < 0) fail(optr, "factor order must be 0 (infinite) or positive");
            spec.group.orders.push_back(v);
        }
    }
    {
        const json& chi = as_object(require(doc, "", "bicharacter"), "/bicharacter");
        check_keys(chi, "/bicharacter", {"root_order", "exponents"});
        spec.chi.root_order =
            as_int(require(chi, "/bicharacter", "root_order"), "/bicharacter/root_order");
        if (spec.chi.root_order < 1) fail("/bicharacter/root_order", "root order must be positive");
        const json& rows = as_array(require(chi, "/bicharacter", "exponents"),
                                    "/bicharacter/exponents");
        if (rows.size() != spec.group.rank())
            fail("/bicharacter/exponents", "exponent matrix needs " +
                                               std::to_string(spec.group.rank()) + " rows");
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::string rptr = "/bicharacter/exponents/" + std::to_string(r);
            const json& row = as_array(rows[r], rptr);
            if (row.size() != spec.group.rank())
                fail(rptr, "exponent row needs " + std::to_string(spec.group.rank()) + " entries");
            std::vector<std::int64_t> vals;
            for (std::size_t c = 0; c < row.size(); ++c)
                vals.push_back(as_int(row[c], rptr + "/" + std::to_string(c)));
            spec.chi.exponents.push_back(std::move(vals));
        }
    }

    const json& lie = as_object(require(doc, "", "lie"), "/lie");
    check_keys(lie, "/lie", {"basis", "brackets"});
    {
        const json& arr = as_array(require(lie, "/lie", "basis"), "/lie/basis");
        for (std::size_t k = 0; k < arr.size(); ++k) {
            const std::string eptr = "/lie/basis/" + std::to_string(k);
            const json& entry = as_object(arr[k], eptr);
            check_keys(entry, eptr, {"name", "degree"});
            LieBasisElement b;
            b.name = as_string(require(entry, eptr, "name"), eptr + "/name");
            if (b.name.empty()) fail(eptr + "/name", "basis name must be nonempty");
            b.degree = parse_group_element(require(entry, eptr, "degree"), eptr + "/degree",
                                           spec.group);
            for (const auto& seen : spec.basis)
                if (seen.name == b.name)
                    fail(eptr + "/name", "duplicate basis name \"" + b.name + "\"");
            spec.basis.push_back(std::move(b));
        }
    }
    auto index_of = [&spec](const std::string& name) {
        for (std::size_t k = 0; k < spec.basis.size(); ++k)
            if (spec.basis[k].name == name) return static_cast<std::int32_t>(k);
        return static_cast<std::int32_t>(-1);
    };
    if (lie.contains("brackets")) {
        const json& arr = as_array(lie["brackets"], "/lie/brackets");
        for (std::size_t k = 0; k < arr.size(); ++k) {
            const std::string eptr = "/lie/brackets/" + std::to_string(k);
            const json& entry = as_object(arr[k], eptr);
            check_keys(entry, eptr, {"left", "right", "value"});
            BracketEntry b;
            const std::string left = as_string(require(entry, eptr, "left"), eptr + "/left");
            const std::string right = as_string(require(entry, eptr, "right"), eptr + "/right");
            b.left = index_of(left);
            if (b.left < 0) fail(eptr + "/left", "undefined basis name \"" + left + "\"");
            b.right = index_of(right);
            if (b.right < 0) fail(eptr + "/right", "undefined basis name \"" + right + "\"");
            const json& value = as_object(require(entry, eptr, "value"), eptr + "/value");
            for (auto it = value.begin(); it != value.end(); ++it) {
                const std::string vptr = eptr + "/value/" + escape_segment(it.key());
                const std::int32_t idx = index_of(it.key());
                if (idx < 0) fail(vptr, "undefined basis name \"" + it.key() + "\"");
                b.value[idx] = parse_scalar(*it, vptr, spec.chi.root_order);
            }
            spec.brackets.push_back(std::move(b));
        }
    }

    if (doc.contains("modules")) {
        const json& mods = as_object(doc["modules"], "/modules");
        const auto gens = static_cast<std::int64_t>(spec.basis.size());
        for (auto it = mods.begin(); it != mods.end(); ++it) {
            const std::string mptr = "/modules/" + escape_segment(it.key());
            const json& entry = as_object(*it, mptr);
            check_keys(entry, mptr, {"basis", "act", "ract"});
            ModuleSpec m;
            m.name = it.key();
            m.basis = parse_module_basis(require(entry, mptr, "basis"), mptr + "/basis",
                                         spec.group);
            const auto dim = static_cast<std::int64_t>(m.basis.size());
            auto parse_actions = [&](const json& a, const std::string& aptr) {
                const json& arr = as_array(a, aptr);
                if (static_cast<std::int64_t>(arr.size()) != gens)
                    fail(aptr, "need one matrix per generator (" + std::to_string(gens) +
                                   "), got " + std::to_string(arr.size()));
                std::vector<ExactMatrix> out;
                for (std::size_t g = 0; g < arr.size(); ++g)
                    out.push_back(parse_matrix(arr[g], aptr + "/" + std::to_string(g), dim,
                                               spec.chi.root_order));
                return out;
            };
            m.act = parse_actions(require(entry, mptr, "act"), mptr + "/act");
            if (entry.contains("ract")) {
                m.bimodule = true;
                m.ract = parse_actions(entry["ract"], mptr + "/ract");
            }
            spec.modules.push_back(std::move(m));
        }
    }

    if (doc.contains("options")) {
        const json& opts = as_object(doc["options"], "/options");
        check_keys(opts, "/options", {"n_max", "p_max", "word_len", "degree_window"});
        auto small_int = [&](const char* key, int fallback) {
            if (!opts.contains(key)) return fallback;
            const std::string ptr = std::string("/options/") + key;
            const std::int64_t v = as_int(opts[key], ptr);
            if (v < 0 || v > 64) fail(ptr, "expected a small nonnegative integer");
            return static_cast<int>(v);
        };
        spec.options.n_max = small_int("n_max", spec.options.n_max);
        spec.options.p_max = small_int("p_max", spec.options.p_max);
        spec.options.word_len = small_int("word_len", spec.options.word_len);
        if (opts.contains("degree_window")) {
            const json& arr = as_array(opts["degree_window"], "/options/degree_window");
            std::vector<GroupElement> window;
            for (std::size_t k = 0; k < arr.size(); ++k)
                window.push_back(parse_group_element(
                    arr[k], "/options/degree_window/" + std::to_string(k), spec.group));
            spec.options.degree_window = std::move(window);
        }
    }
    return spec;
}

std::string serialize_spec(const ProblemSpec& spec) {
    json doc = json::object();
    doc["group"] = json::object();
    doc["group"]["orders"] = spec.group.orders;
    doc["bicharacter"] = json::object();
    doc["bicharacter"]["root_order"] = spec.chi.root_order;
    doc["bicharacter"]["exponents"] = spec.chi.exponents;

    json basis = json::array();
    for (const auto& b : spec.basis) basis.push_back({{"name", b.name}, {"degree", b.degree}});
    json brackets = json::array();
    for (const auto& e : spec.brackets) {
        json value = json::object();
        for (const auto& [idx, c] : e.value)
            value[spec.basis[static_cast<std::size_t>(idx)].name] = c.to_string();
        brackets.push_back({{"left", spec.basis[static_cast<std::size_t>(e.left)].name},
                            {"right", spec.basis[static_cast<std::size_t>(e.right)].name},
                            {"value", value}});
    }
    doc["lie"] = json::object();
    doc["lie"]["basis"] = basis;
    doc["lie"]["brackets"] = brackets;

    auto matrices = [](const std::vector<ExactMatrix>& ms) {
        json arr = json::array();
        for (const auto& m : ms) {
            json rows = json::array();
            for (std::int64_t r = 0; r < m.rows(); ++r) {
                json row = json::array();
                for (std::int64_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
                rows.push_back(row);
            }
            arr.push_back(rows);
        }
        return arr;
    };
    json mods = json::object();
    for (const auto& m : spec.modules) {
        json entry = json::object();
        json mb = json::array();
        for (const auto& b : m.basis) mb.push_back({{"name", b.name}, {"degree", b.degree}});
        entry["basis"] = mb;
        entry["act"] = matrices(m.act);
        if (m.bimodule) entry["ract"] = matrices(m.ract);
        mods[m.name] = entry;
    }
    doc["modules"] = mods;

    json opts = json::object();
    opts["n_max"] = spec.options.n_max;
    opts["p_max"] = spec.options.p_max;
    opts["word_len"] = spec.options.word_len;
    if (spec.options.degree_window) opts["degree_window"] = *spec.options.degree_window;
    doc["options"] = opts;
    return doc.dump(2) + "\n";
}

std::string format_spec_error(const std::string& text, const SpecError& err,
                              const std::string& name) {
    std::pair<int, int> pos;
    if (err.position) {
        pos = *err.position;
    } else {
        JsonLocator locator(text);
        pos = locator.locate(err.pointer);
    }
    std::ostringstream out;
    out << name << ":" << pos.first << ":" << pos.second << ": " << err.what();
    if (!err.pointer.empty()) out << " (at " << err.pointer << ")";
    return out.str();
}

ColorLieAlgebra build_lie(const ProblemSpec& spec) {
    return ColorLieAlgebra(spec.group, spec.chi, spec.basis, spec.brackets);
}

namespace {

SpecOptions effective_options(const ProblemSpec& spec, const RunFlags& flags) {
    SpecOptions o = spec.options;
    if (flags.n_max) o.n_max = *flags.n_max;
    if (flags.p_max) o.p_max = *flags.p_max;
    if (flags.word_len) o.word_len = *flags.word_len;
    if (flags.degree_window) {
        if (*flags.degree_window == "all") {
            o.degree_window.reset();
        } else {
            json arr;
            try {
                arr = json::parse(*flags.degree_window);
            } catch (const json::parse_error&) {
                throw std::invalid_argument(
                    "--degree-window expects \"all\" or a JSON list of group elements");
            }
            if (!arr.is_array()) throw std::invalid_argument("--degree-window must be a list");
            std::vector<GroupElement> window;
            for (const auto& e : arr) {
                if (!e.is_array()) throw std::invalid_argument("--degree-window entries must be lists");
                GroupElement g;
                for (const auto& v : e) {
                    if (!v.is_number_integer())
                        throw std::invalid_argument("--degree-window entries must hold integers");
                    g.push_back(v.get<std::int64_t>());
                }
                if (g.size() != spec.group.rank())
                    throw std::invalid_argument("--degree-window entry has the wrong rank");
                window.push_back(spec.group.reduce(g));
            }
            o.degree_window = std::move(window);
        }
    }
    return o;
}

json report_to_json(const ValidationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json e = json::object();
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.pass) e["witness"] = c.witness;
        checks.push_back(e);
    }
    return checks;
}

json table_to_json(const std::map<GroupElement, std::vector<std::int64_t>>& t) {
    json rows = json::array();
    for (const auto& [h, dims] : t) rows.push_back({{"h", h}, {"dims", dims}});
    return rows;
}

std::string degree_tag(const GroupElement& h) {
    if (h.empty()) return "e";
    std::string out;
    bool nonzero = false;
    for (std::size_t k = 0; k < h.size(); ++k) {
        if (k) out += "_";
        out += std::to_string(h[k]);
        nonzero = nonzero || h[k] != 0;
    }
    return nonzero ? out : "e";
}

void dump_matrix(const std::string& dir, const std::string& file, const ExactMatrix& m) {
    std::filesystem::create_directories(dir);
    std::ofstream out(dir + "/" + file);
    for (std::int64_t r = 0; r < m.rows(); ++r) {
        for (std::int64_t c = 0; c < m.cols(); ++c) {
            if (c) out << " ";
            out << m.at(r, c).to_string();
        }
        out << "\n";
    }
}

// Named modules for the cohomology commands: every entry from the file plus
// the implicit trivial one, plus the regular one when U(L) is small enough.
std::vector<std::pair<std::string, GradedBimodule>> gather_bimodules(const Enveloping& U,
                                                                     const ProblemSpec& spec,
                                                                     bool right_needed) {
    std::vector<std::pair<std::string, GradedBimodule>> out;
    std::vector<std::string> taken;
    for (const auto& m : spec.modules) {
        if (right_needed && !m.bimodule) continue;
        out.emplace_back(m.name, GradedBimodule{m.basis, m.act, m.ract});
        taken.push_back(m.name);
    }
    auto free_name = [&taken](const std::string& n) {
        return std::find(taken.begin(), taken.end(), n) == taken.end();
    };
    if (free_name("trivial")) out.emplace_back("trivial", trivial_bimodule(U));
    if (free_name("regular")) {
        try {
            out.emplace_back("regular", regular_bimodule(U));
        } catch (const std::runtime_error&) {
            // infinite-dimensional: no implicit regular module
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::string render_checks(const json& checks, std::string& worst) {
    std::ostringstream out;
    for (const auto& c : checks) {
        if (c["pass"].get<bool>()) {
            out << "  PASS " << c["name"].get<std::string>() << "\n";
        } else {
            out << "  FAIL " << c["name"].get<std::string>() << ": "
                << c["witness"].get<std::string>() << "\n";
            worst = "FAIL";
        }
    }
    return out.str();
}

std::string render_table_rows(const json& table) {
    std::ostringstream out;
    for (const auto& row : table) {
        GroupElement h = row["h"].get<GroupElement>();
        out << "  h=" << group_element_to_string(h) << ":";
        for (const auto& d : row["dims"]) out << " " << d.get<std::int64_t>();
        out << "\n";
    }
    return out.str();
}

std::string render_pretty(const json& doc, int status) {
    std::ostringstream out;
    const std::string cmd = doc["command"].get<std::string>();
    out << "command: " << cmd << "\n";
    if (doc.contains("error")) {
        out << "error: " << doc["error"].get<std::string>() << "\n";
        out << "RESULT: FAIL\n";
        return out.str();
    }
    std::string worst = "PASS";
    if (cmd == "validate") {
        for (const auto& rep : doc["reports"]) {
            out << rep["subject"].get<std::string>() << ":\n";
            out << render_checks(rep["checks"], worst);
        }
    } else if (cmd == "hopf-check" || cmd == "koszul-check") {
        out << render_checks(doc["checks"], worst);
    } else if (cmd == "lie-cohomology" || cmd == "hochschild") {
        for (const auto& res : doc["results"]) {
            out << "module " << res["module"].get<std::string>() << ":\n";
            out << render_table_rows(res["table"]);
            if (res.contains("total_dims")) {
                out << "  total:";
                for (const auto& d : res["total_dims"]) out << " " << d.get<std::int64_t>();
                out << "\n";
            }
        }
    } else if (cmd == "compare") {
        for (const auto& res : doc["results"]) {
            out << "module " << res["module"].get<std::string>() << ": "
                << (res["all_equal"].get<bool>() ? "tables agree" : "tables differ") << "\n";
            for (const auto& cell : res["cells"]) {
                GroupElement h = cell["h"].get<GroupElement>();
                out << "  n=" << cell["n"].get<int>() << " h=" << group_element_to_string(h)
                    << ": hochschild=" << cell["hochschild"].get<std::int64_t>()
                    << " lie=" << cell["lie"].get<std::int64_t>();
                if (!cell["equal"].get<bool>()) out << "  MISMATCH";
                out << "\n";
            }
        }
    }
    out << "RESULT: " << (status == 0 ? "PASS" : "FAIL") << "\n";
    return out.str();
}

json error_doc(const std::string& command, const std::string& message) {
    json doc = json::object();
    doc["command"] = command;
    doc["error"] = message;
    return doc;
}

}  // namespace

RunResult run_command(const std::string& command, const ProblemSpec& spec,
                      const RunFlags& flags) {
    const SpecOptions o = effective_options(spec, flags);
    json doc = json::object();
    doc["command"] = command;
    int status = 0;

    if (command == "validate") {
        json reports = json::array();
        bool all = true;
        auto add = [&](const std::string& subject, const ValidationReport& r) {
            reports.push_back(
                {{"subject", subject}, {"checks", report_to_json(r)}, {"pass", r.all_pass()}});
            all = all && r.all_pass();
        };
        ValidationReport rb = validate_bicharacter(spec.group, spec.chi);
        add("bicharacter", rb);
        if (rb.all_pass()) {
            try {
                ColorLieAlgebra L = build_lie(spec);
                add("lie", validate_color_lie(L));
                Enveloping U(L);
                for (const auto& m : spec.modules) {
                    if (m.bimodule)
                        add("module " + m.name,
                            validate_bimodule(U, GradedBimodule{m.basis, m.act, m.ract}));
                    else
                        add("module " + m.name, validate_module(U, GradedModule{m.basis, m.act}));
                }
            } catch (const std::exception& e) {
                ValidationReport broken;
                broken.add("construction", false, e.what());
                add("lie", broken);
            }
        }
        doc["reports"] = reports;
        doc["all_pass"] = all;
        status = all ? 0 : 1;
    } else if (command == "hopf-check" || command == "koszul-check") {
        try {
            Enveloping U(build_lie(spec));
            json checks;
            if (command == "hopf-check") {
                ValidationReport r = U.check_hopf_axioms(o.word_len);
                ValidationReport c = U.check_confluence(o.word_len);
                for (auto& e : c.checks) r.checks.push_back(std::move(e));
                checks = report_to_json(r);
                status = r.all_pass() ? 0 : 1;
            } else {
                ValidationReport r = check_koszul_identities(U, o.n_max, o.word_len);
                ValidationReport h = homotopy_check(U, o.p_max);
                for (auto& e : h.checks) r.checks.push_back(std::move(e));
                checks = report_to_json(r);
                status = r.all_pass() ? 0 : 1;
            }
            doc["checks"] = checks;
            doc["all_pass"] = status == 0;
        } catch (const std::exception& e) {
            doc = error_doc(command, e.what());
            status = 1;
        }
    } else if (command == "lie-cohomology") {
        try {
            Enveloping U(build_lie(spec));
            json results = json::array();
            for (const auto& [name, BM] : gather_bimodules(U, spec, false)) {
                GradedModule M{BM.basis, BM.act};
                auto table = lie_cohomology_dims(U, M, o.n_max, o.degree_window);
                json entry = json::object();
                entry["module"] = name;
                entry["table"] = table_to_json(table);
                entry["total_dims"] = lie_cohomology_total_dims(U, M, o.n_max);
                results.push_back(entry);
                if (!flags.dump_dir.empty())
                    for (const auto& [h, dims] : table)
                        for (int n = 0; n <= o.n_max; ++n)
                            dump_matrix(flags.dump_dir,
                                        "ce_" + name + "_d" + std::to_string(n) + "_h" +
                                            degree_tag(h) + ".txt",
                                        ce_delta(U, M, n, h));
            }
            doc["n_max"] = o.n_max;
            doc["results"] = results;
        } catch (const std::exception& e) {
            doc = error_doc(command, e.what());
            status = 1;
        }
    } else if (command == "hochschild") {
        try {
            Enveloping U(build_lie(spec));
            FiniteGradedAlgebra A = truncate_enveloping(U);
            json results = json::array();
            for (const auto& [name, BM] : gather_bimodules(U, spec, true)) {
                AlgebraBimodule AM = lift_bimodule(A, BM);
                auto table = hochschild_dims(A, AM, o.n_max, o.degree_window);
                json entry = json::object();
                entry["module"] = name;
                entry["table"] = table_to_json(table);
                results.push_back(entry);
                if (!flags.dump_dir.empty())
                    for (const auto& [h, dims] : table)
                        for (int n = 0; n <= o.n_max; ++n)
                            dump_matrix(flags.dump_dir,
                                        "bar_" + name + "_d" + std::to_string(n) + "_h" +
                                            degree_tag(h) + ".txt",
                                        hochschild_delta(A, AM, n, h));
            }
            doc["n_max"] = o.n_max;
            doc["results"] = results;
        } catch (const std::exception& e) {
            doc = error_doc(command, e.what());
            status = 1;
        }
    } else if (command == "compare") {
        try {
            Enveloping U(build_lie(spec));
            json results = json::array();
            bool all = true;
            for (const auto& [name, BM] : gather_bimodules(U, spec, true)) {
                ComparisonReport rep = compare_cohomology_tables(U, BM, o.n_max, o.degree_window);
                json cells = json::array();
                for (const auto& cell : rep.cells)
                    cells.push_back({{"n", cell.n},
                                     {"h", cell.h},
                                     {"hochschild", cell.lhs},
                                     {"lie", cell.rhs},
                                     {"equal", cell.lhs == cell.rhs}});
                results.push_back(
                    {{"module", name}, {"all_equal", rep.all_equal}, {"cells", cells}});
                all = all && rep.all_equal;
            }
            doc["results"] = results;
            doc["all_equal"] = all;
            status = all ? 0 : 1;
        } catch (const std::exception& e) {
            doc = error_doc(command, e.what());
            status = 1;
        }
    } else {
        throw std::invalid_argument("unknown command \"" + command + "\"");
    }

    RunResult res;
    res.status = status;
    res.output = flags.pretty ? render_pretty(doc, status) : doc.dump(2) + "\n";
    return res;
}

}  // namespace colorhom
