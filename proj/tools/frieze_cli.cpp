// frieze: command-line front end.  Exit codes: 0 pass, 1 mathematical failure, 2 usage or input error.

#include "frieze/cyclic.hpp"
#include "frieze/grassmann.hpp"
#include "frieze/mesh.hpp"
#include "frieze/pfrieze.hpp"
#include "frieze/slk.hpp"
#include "frieze/twofrieze.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

using namespace frieze;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int k = 3;
    int n = 0;
    int width = 3;
    int height = 3;
    std::string type = "E6";
    long long max_entry = 0;  // 0: double until stable
    int trials = 100;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string out;
    std::string format = "text";
    bool conjectural = false;
    int columns = 0;
    int vertex = -1;
    std::string engine;
    std::string what;
    std::string path;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string first_line(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos || line[p] == '#') continue;
        return line.substr(p);
    }
    return {};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
    return out;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const RunConfig& c) {
    if (c.n < c.k + 2) throw UsageError("--n must be at least k + 2");
    std::mt19937_64 rng(c.seed);
    auto P = sample_point(c.k, c.n, rng());
    auto subset = [&](int size) {
        std::vector<int> all(c.n);
        for (int i = 0; i < c.n; ++i) all[i] = i + 1;
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(size);
        return all;
    };
    int rel_ok = 0, det_ok = 0;
    for (int t = 0; t < c.trials; ++t) rel_ok += check_plucker_relation(P, subset(c.k - 1), subset(c.k + 1));
    for (int t = 0; t < c.trials;) {
        const int s = 1 + static_cast<int>(rng() % c.k);
        const int r = 1 + static_cast<int>(rng() % c.n);
        auto m = subset(s);
        std::sort(m.begin(), m.end());
        std::rotate(m.begin(), m.begin() + rng() % s, m.end());
        auto cond = column_conditions(c.k, c.n, r, m);
        if (!cond.c1_holds || !cond.c2_holds) continue;
        auto D = diamond(P, r, m);
        const auto rhs = det_formula_rhs(P, r, m);
        det_ok += det_bareiss(D.entries) == rhs && (s > 5 || det_laplace(D.entries) == rhs);
        ++t;
    }
    auto rep = verify_slk_structure(P);
    const bool pass = rel_ok == c.trials && det_ok == c.trials && rep.ok();
    if (c.format == "json") {
        ordered_json j;
        j["k"] = c.k;
        j["n"] = c.n;
        j["seed"] = c.seed;
        j["plucker_relations"] = {{"passed", rel_ok}, {"trials", c.trials}};
        j["determinant_formula"] = {{"passed", det_ok}, {"trials", c.trials}};
        j["diamonds"] = {{"k", rep.k_diamonds}, {"k_plus_1", rep.k1_diamonds}, {"failures", rep.failures}};
        j["pass"] = pass;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "plucker relations: " << rel_ok << "/" << c.trials << '\n'
                  << "determinant formula: " << det_ok << "/" << c.trials << '\n'
                  << "k-diamonds: " << rep.k_diamonds << ", (k+1)-diamonds: " << rep.k1_diamonds
                  << ", failures: " << rep.failures.size() << '\n';
        for (const auto& f : rep.failures) std::cout << "  " << f << '\n';
        std::cout << "verify: " << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------- catalogs

std::optional<std::string> mesh_type_for_width(int w) {
    if (w == 2) return "D4";
    if (w == 3) return "E6";
    if (w == 4) return "E8";
    return std::nullopt;
}

ordered_json grid_json(const FriezeGrid& F) {
    ordered_json j;
    j["k"] = F.k;
    j["w"] = F.w;
    j["boundary"] = F.k == 2 ? quiddity_of(F) : sl3_boundary(F);
    j["entries"] = F.rows;
    j["ones"] = F.ones();
    if (F.k == 2) {
        j["unitary"] = true;
    } else if (auto t = mesh_type_for_width(F.w)) {
        auto m = convert_sl3(F);
        j["unitary"] = classify(quiver(*t), m).unitary;
    } else {
        j["unitary"] = nullptr;
    }
    return j;
}

FriezeGrid grid_from_json(const json& j) {
    FriezeGrid F(j.at("k").get<int>(), j.at("w").get<int>());
    F.rows = j.at("entries").get<std::vector<std::vector<long long>>>();
    return F;
}

TwoFrieze twofrieze_from_json(const json& j) {
    TwoFrieze f;
    f.h = j.at("h").get<int>();
    f.period = j.at("period").get<int>();
    f.rows = j.at("entries").get<std::vector<std::vector<long long>>>();
    if (static_cast<int>(f.rows.size()) != f.period) throw UsageError("2-frieze entries must have period rows");
    return f;
}

struct Catalog {
    std::vector<std::string> json_lines;
    std::vector<std::string> text_blocks;
};

template <class Run>
std::pair<Catalog, long long> stabilise(long long fixed, long long start, Run run) {
    if (fixed > 0) return {run(fixed), fixed};
    long long B = start;
    Catalog cur = run(B);
    while (true) {
        Catalog next = run(2 * B);
        if (next.json_lines.size() == cur.json_lines.size()) return {cur, B};
        B *= 2;
        cur = std::move(next);
    }
}

int cmd_enumerate(const RunConfig& c) {
    std::pair<Catalog, long long> res;
    if (c.engine == "sl2") {
        if (c.width < 1) throw UsageError("--width must be positive");
        res = stabilise(c.max_entry, 2, [&](long long B) {
            Catalog cat;
            for (const auto& F : enumerate_sl2(c.width, B)) {
                cat.json_lines.push_back(grid_json(F).dump());
                cat.text_blocks.push_back(format_grid(F));
            }
            return cat;
        });
    } else if (c.engine == "sl3") {
        if (c.width < 1 || c.width > 4) throw UsageError("--width must be in 1..4");
        if (c.width == 4 && !c.conjectural) throw UsageError("width 4 is conjectural; pass --opt-in-conjectural");
        res = stabilise(c.max_entry, 4, [&](long long B) {
            Catalog cat;
            for (const auto& F : enumerate_sl3(c.width, B, c.workers)) {
                cat.json_lines.push_back(grid_json(F).dump());
                cat.text_blocks.push_back(format_grid(F));
            }
            return cat;
        });
    } else if (c.engine == "mesh") {
        const TranslationQuiver* q = nullptr;
        try {
            q = &quiver(c.type);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if ((c.type == "E7" || c.type == "E8") && !c.conjectural)
            throw UsageError(c.type + " counts are conjectural; pass --opt-in-conjectural");
        res = stabilise(c.max_entry, 5, [&](long long B) {
            Catalog cat;
            for (const auto& f : enumerate_orbits(*q, B, c.workers)) {
                cat.json_lines.push_back(format_mesh_json(*q, f));
                cat.text_blocks.push_back(render_staggered(*q, f));
            }
            return cat;
        });
    } else if (c.engine == "twofrieze") {
        if (c.height < 1 || c.height > 3) throw UsageError("--height must be in 1..3");
        res = stabilise(c.max_entry, 4, [&](long long B) {
            Catalog cat;
            for (const auto& f : enumerate(c.height, B, c.workers)) {
                cat.json_lines.push_back(format_json(f));
                cat.text_blocks.push_back(format_text(f));
            }
            return cat;
        });
    } else {
        throw UsageError("unknown engine " + c.engine);
    }
    const auto& [cat, bound] = res;
    if (!c.out.empty()) {
        std::ofstream out(c.out);
        if (!out) throw UsageError("cannot write " + c.out);
        if (c.format == "json")
            for (const auto& l : cat.json_lines) out << l << '\n';
        else
            for (const auto& b : cat.text_blocks) out << b << '\n';
    }
    std::cout << "count=" << cat.json_lines.size() << " stable_bound=" << bound << '\n';
    return 0;
}

// ---------------------------------------------------------------- classify / validate

int cmd_classify(const RunConfig& c) {
    int unitary = 0, non_unitary = 0;
    std::map<int, int, std::greater<>> hist;
    for (const auto& line : lines_of(read_file(c.path))) {
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw UsageError(std::string("bad catalog line: ") + e.what());
        }
        MeshFrieze f;
        if (j.contains("values")) {
            f = parse_mesh_json(line);
        } else if (j.contains("k") && j.at("k") == 3 && mesh_type_for_width(j.at("w").get<int>())) {
            f = convert_sl3(grid_from_json(j));
        } else {
            throw UsageError("classify expects mesh or width 2..4 SL_3 catalog lines");
        }
        const auto& q = quiver(f.type);
        if (!validate(q, f).ok()) {
            std::cerr << "invalid frieze in catalog\n";
            return 1;
        }
        auto cl = classify(q, f);
        (cl.unitary ? unitary : non_unitary)++;
        ++hist[cl.ones];
    }
    std::cout << "unitary=" << unitary << " non_unitary=" << non_unitary << " ones_histogram={";
    bool first = true;
    for (auto [o, n] : hist) {
        std::cout << (first ? "" : ", ") << o << ":" << n;
        first = false;
    }
    std::cout << "}\n";
    return 0;
}

struct Verdict {
    bool ok = true;
    std::vector<std::string> issues;
};

Verdict check_mesh(const MeshFrieze& f) {
    Verdict v;
    for (const auto& x : validate(quiver(f.type), f).violations) v.issues.push_back(x.detail);
    v.ok = v.issues.empty();
    return v;
}

Verdict check_grid(const FriezeGrid& F) {
    Verdict v;
    auto rep = validate(F, true);
    for (const auto& d : rep.flags)
        v.issues.push_back(std::to_string(d.size) + "-diamond at (" + std::to_string(d.c) + "," + std::to_string(d.R0) +
                           "): det " + d.det);
    for (auto [c, R] : rep.nonpositive)
        v.issues.push_back("non-positive entry at (" + std::to_string(c) + "," + std::to_string(R) + ")");
    v.ok = rep.ok();
    return v;
}

Verdict check_two(const TwoFrieze& f) {
    auto rep = validate(f);
    return {rep.ok(), rep.violations};
}

bool looks_like_grid_header(const std::string& line) {
    std::istringstream in(line);
    int k, w, n;
    std::string extra;
    return (in >> k >> w >> n) && !(in >> extra) && n == w + k + 1;
}

int cmd_validate(const RunConfig& c) {
    const std::string text = read_file(c.path);
    const std::string head = first_line(text);
    std::vector<std::pair<std::string, Verdict>> results;
    try {
        if (!head.empty() && head[0] == '{') {
            for (const auto& line : lines_of(text)) {
                auto j = json::parse(line);
                if (j.contains("values")) results.push_back({"mesh " + j.at("type").get<std::string>(), check_mesh(parse_mesh_json(line))});
                else if (j.contains("h")) results.push_back({"2-frieze", check_two(twofrieze_from_json(j))});
                else if (j.contains("k")) results.push_back({"grid", check_grid(grid_from_json(j))});
                else throw UsageError("unrecognised JSON object");
            }
        } else if (head.rfind("type", 0) == 0) {
            auto f = parse_staggered(text);
            results.push_back({"mesh " + f.type, check_mesh(f)});
        } else if (looks_like_grid_header(head)) {
            results.push_back({"grid", check_grid(parse_grid(text))});
        } else {
            results.push_back({"2-frieze", check_two(parse_text(text))});
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(std::string("cannot parse ") + c.path + ": " + e.what());
    }
    if (results.empty()) throw UsageError("no frieze in " + c.path);
    int bad = 0;
    for (size_t i = 0; i < results.size(); ++i) {
        const auto& [kind, v] = results[i];
        if (v.ok) continue;
        ++bad;
        std::cout << "#" << i + 1 << " " << kind << ": " << v.issues.size() << " violations\n";
        for (size_t t = 0; t < std::min<size_t>(v.issues.size(), 20); ++t) std::cout << "  " << v.issues[t] << '\n';
    }
    std::cout << "valid=" << results.size() - bad << " invalid=" << bad << '\n';
    return bad ? 1 : 0;
}

// ---------------------------------------------------------------- show / restrict

MeshFrieze read_mesh(const std::string& text) {
    const std::string head = first_line(text);
    if (!head.empty() && head[0] == '{') return parse_mesh_json(head);
    if (head.rfind("type", 0) == 0) return parse_staggered(text);
    auto F = parse_grid(text);
    if (F.k != 2) throw UsageError("expected a mesh frieze or an SL_2 grid");
    return from_sl2_grid(F);
}

int cmd_show(const RunConfig& c) {
    if (c.what == "pluecker") {
        if (c.n < c.k + 2 || c.k < 2) throw UsageError("show pluecker needs k >= 2 and n >= k + 2");
        std::cout << render_plucker(c.k, c.n, c.columns > 0 ? c.columns : c.n);
        return 0;
    }
    if (c.what == "quiver") {
        const auto& q = quiver(c.type);
        std::cout << q.type << ": rank " << q.rank << ", " << q.vertices << " vertices, " << q.slices()
                  << " slices, branch " << q.branch << '\n';
        for (int v = 1; v <= q.rank; ++v) {
            std::cout << "node " << v << ": span " << q.span[v] << ", wraps to node " << q.twist[v] << ", neighbours";
            for (int u : q.adj[v]) std::cout << ' ' << u;
            std::cout << '\n';
        }
        return 0;
    }
    if (c.what == "frieze") {
        if (c.path.empty()) throw UsageError("show frieze needs a file");
        const std::string text = read_file(c.path);
        const std::string head = first_line(text);
        try {
            if (looks_like_grid_header(head)) {
                std::cout << format_grid(parse_grid(text));
            } else if (head.rfind("type", 0) == 0 || (!head.empty() && head[0] == '{' && head.find("values") != std::string::npos)) {
                auto f = read_mesh(text);
                std::cout << render_staggered(quiver(f.type), f);
            } else {
                std::cout << format_text(!head.empty() && head[0] == '{' ? twofrieze_from_json(json::parse(head)) : parse_text(text));
            }
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        return 0;
    }
    throw UsageError("show expects pluecker, quiver or frieze");
}

int cmd_restrict(const RunConfig& c) {
    MeshFrieze f;
    try {
        f = read_mesh(read_file(c.path));
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    const auto& q = quiver(f.type);
    if (q.family != 'A') throw UsageError("restrict is implemented for type A");
    if (!validate(q, f).ok()) {
        std::cout << "input frieze is invalid\n";
        return 1;
    }
    std::vector<int> targets;
    if (c.vertex >= 0) {
        if (c.vertex >= q.vertices) throw UsageError("--vertex out of range");
        if (f.values[c.vertex] != 1) throw UsageError("--vertex must carry the value 1");
        targets.push_back(c.vertex);
    } else {
        for (int i = 0; i < q.vertices; ++i)
            if (f.values[i] == 1) targets.push_back(i);
    }
    bool all_ok = true;
    for (int i : targets) {
        auto [a, b] = diagonal_of(q, i);
        auto [left, right] = restrict_typeA(q, f, i);
        const bool ok = validate(quiver(left.type), left).ok() && validate(quiver(right.type), right).ok();
        all_ok = all_ok && ok;
        ordered_json j;
        j["vertex"] = i;
        j["diagonal"] = {a, b};
        j["left"] = ordered_json::parse(format_mesh_json(quiver(left.type), left));
        j["right"] = ordered_json::parse(format_mesh_json(quiver(right.type), right));
        j["valid"] = ok;
        std::cout << j.dump() << '\n';
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig c;
    if (const char* env = std::getenv("FRIEZE_WORKERS")) c.workers = std::max(1, std::atoi(env));

    CLI::App app{"Friezes from Grassmannians: verification, enumeration and classification"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "check Plücker relations, diamond determinants and frieze structure");
    verify->add_option("--k", c.k, "Grassmannian rank")->check(CLI::Range(2, 12));
    verify->add_option("--n", c.n, "number of columns")->required()->check(CLI::Range(4, 24));
    verify->add_option("--trials", c.trials)->check(CLI::Range(1, 1000000));
    verify->add_option("--seed", c.seed);
    verify->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));

    auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate friezes up to an entry bound");
    enumerate_cmd->add_option("engine", c.engine, "sl2, sl3, mesh or twofrieze")
        ->required()
        ->check(CLI::IsMember({"sl2", "sl3", "mesh", "twofrieze"}));
    enumerate_cmd->add_option("--width", c.width);
    enumerate_cmd->add_option("--height", c.height);
    enumerate_cmd->add_option("--type", c.type);
    enumerate_cmd->add_option("--max-entry", c.max_entry, "fixed bound; default doubles until the count is stable")
        ->check(CLI::Range(1LL, 1LL << 20));
    enumerate_cmd->add_option("--workers", c.workers)->check(CLI::Range(1, 1024));
    enumerate_cmd->add_option("--out", c.out, "catalog file");
    enumerate_cmd->add_option("--format", c.format, "catalog format")->check(CLI::IsMember({"text", "json"}));
    enumerate_cmd->add_flag("--opt-in-conjectural", c.conjectural);

    auto* classify_cmd = app.add_subcommand("classify", "unitary / non-unitary counts of a JSON-lines catalog");
    classify_cmd->add_option("catalog", c.path)->required();

    auto* validate_cmd = app.add_subcommand("validate", "validate a frieze file (grid, mesh, 2-frieze or catalog)");
    validate_cmd->add_option("file", c.path)->required();

    auto* show = app.add_subcommand("show", "print a Plücker frieze, a quiver or a frieze file");
    show->add_option("what", c.what, "pluecker, quiver or frieze")->required();
    show->add_option("file", c.path);
    show->add_option("--k", c.k);
    show->add_option("--n", c.n);
    show->add_option("--columns", c.columns);
    show->add_option("--type", c.type);

    auto* restrict_cmd = app.add_subcommand("restrict", "cut a type A frieze along diagonals with value 1");
    restrict_cmd->add_option("file", c.path)->required();
    restrict_cmd->add_option("--vertex", c.vertex, "quotient vertex index; default: every vertex with value 1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) return cmd_verify(c);
        if (*enumerate_cmd) return cmd_enumerate(c);
        if (*classify_cmd) return cmd_classify(c);
        if (*validate_cmd) return cmd_validate(c);
        if (*show) return cmd_show(c);
        if (*restrict_cmd) return cmd_restrict(c);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
