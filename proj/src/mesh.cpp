#include "frieze/mesh.hpp"

#include <gmpxx.h>
#include "json.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace frieze {

namespace {

using i128 = __int128;
constexpr long long kValueLimit = 1LL << 40;

void parse_type(const std::string& type, char& family, int& rank) {
    if (type.size() < 2) throw std::invalid_argument("unsupported Dynkin type: " + type);
    family = type[0];
    try {
        size_t used = 0;
        rank = std::stoi(type.substr(1), &used);
        if (used != type.size() - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("unsupported Dynkin type: " + type);
    }
    const bool ok = (family == 'A' && rank >= 0) || (family == 'D' && rank >= 4) ||
                    (family == 'E' && rank >= 6 && rank <= 8);
    if (!ok) throw std::invalid_argument("unsupported Dynkin type: " + type);
}

}  // namespace

int TranslationQuiver::index(long long t, int v) const {
    while (t < 0) {
        t += shift[v];
        v = twist[v];
    }
    while (t >= span[v]) {
        int u = 0;
        for (int x = 1; x <= rank; ++x)
            if (twist[x] == v) u = x;
        t -= shift[u];
        v = u;
    }
    return offset[v] + static_cast<int>(t);
}

std::pair<int, int> TranslationQuiver::vertex(int idx) const {
    int v = 1;
    while (v < rank && offset[v + 1] <= idx) ++v;
    return {idx - offset[v], v};
}

int TranslationQuiver::slices() const {
    int s = 0;
    for (int v = 1; v <= rank; ++v) s = std::max(s, span[v]);
    return s;
}

int TranslationQuiver::column(int t, int v) const {
    const int maxd = *std::max_element(dist.begin() + 1, dist.end());
    return 2 * t + maxd - dist[v];
}

std::vector<int> TranslationQuiver::neighbours_of_branch() const {
    return branch ? adj[branch] : std::vector<int>{};
}

TranslationQuiver build_quiver(const std::string& type) {
    TranslationQuiver q;
    q.type = type;
    parse_type(type, q.family, q.rank);
    const int n = q.rank;
    std::vector<std::pair<int, int>> edges;
    if (q.family == 'A') {
        for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
        q.branch = n ? (n + 1) / 2 : 0;
    } else if (q.family == 'D') {
        for (int i = 1; i <= n - 2; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(n - 2, n);
        q.branch = n - 2;
    } else {
        edges = {{1, 3}, {3, 4}, {4, 5}, {2, 4}};
        for (int i = 5; i < n; ++i) edges.emplace_back(i, i + 1);
        q.branch = 4;
    }
    q.adj.assign(n + 1, {});
    for (auto [a, b] : edges) {
        q.adj[a].push_back(b);
        q.adj[b].push_back(a);
    }
    for (auto& a : q.adj) std::sort(a.begin(), a.end());
    q.dist.assign(n + 1, -1);
    q.out.assign(n + 1, {});
    q.in.assign(n + 1, {});
    q.shift.assign(n + 1, 0);
    q.twist.assign(n + 1, 0);
    q.span.assign(n + 1, 0);
    q.offset.assign(n + 2, 0);
    if (n == 0) return q;
    q.dist[0] = 0;
    std::vector<int> frontier{q.branch};
    q.dist[q.branch] = 0;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int v : frontier)
            for (int u : q.adj[v])
                if (q.dist[u] < 0) {
                    q.dist[u] = q.dist[v] + 1;
                    next.push_back(u);
                }
        frontier = std::move(next);
    }
    for (int v = 1; v <= n; ++v)
        for (int u : q.adj[v]) (q.dist[u] < q.dist[v] ? q.out[v] : q.in[v]).push_back(u);
    for (int v = 1; v <= n; ++v) q.order.push_back(v);
    std::stable_sort(q.order.begin(), q.order.end(), [&](int a, int b) { return q.dist[a] > q.dist[b]; });

    // Knit generic rational values until every node of slice 0 reappears.
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<long> dist(1000, 1000000);
    const int L = 2 * n + 8;
    std::vector<std::vector<mpq_class>> val(L + 1, std::vector<mpq_class>(n + 1));
    for (int v = 1; v <= n; ++v) {
        val[0][v] = mpq_class(dist(rng), dist(rng));
        val[0][v].canonicalize();
    }
    for (int t = 0; t < L; ++t)
        for (int v : q.order) {
            mpq_class p = 1;
            for (int u : q.out[v]) p *= val[t][u];
            for (int u : q.in[v]) p *= val[t + 1][u];
            val[t + 1][v] = (p + 1) / val[t][v];
        }
    for (int v = 1; v <= n; ++v) {
        for (int t = 1; t <= L && !q.shift[v]; ++t)
            for (int u = 1; u <= n; ++u)
                if (val[t][u] == val[0][v]) {
                    q.shift[v] = t;
                    q.twist[v] = u;
                    break;
                }
        if (!q.shift[v]) throw std::logic_error("no wrap found for " + type);
    }
    for (int v = 1; v <= n; ++v) q.span[q.twist[v]] = q.shift[v];
    for (int v = 1; v <= n; ++v) q.offset[v + 1] = q.offset[v] + q.span[v];
    q.vertices = q.offset[n + 1];
    for (int idx = 0; idx < q.vertices; ++idx) {
        auto [t, v] = q.vertex(idx);
        TranslationQuiver::Mesh m;
        m.A = idx;
        m.C = q.index(t + 1, v);
        for (int u : q.out[v]) m.B.push_back(q.index(t, u));
        for (int u : q.in[v]) m.B.push_back(q.index(t + 1, u));
        q.meshes.push_back(std::move(m));
    }
    return q;
}

const TranslationQuiver& quiver(const std::string& type) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<TranslationQuiver>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[type];
    if (!slot) slot = std::make_unique<TranslationQuiver>(build_quiver(type));
    return *slot;
}

MeshReport validate(const TranslationQuiver& q, const MeshFrieze& f) {
    MeshReport rep;
    if (static_cast<int>(f.values.size()) != q.vertices) {
        rep.violations.push_back({-1, "expected " + std::to_string(q.vertices) + " values"});
        return rep;
    }
    for (int i = 0; i < q.vertices; ++i)
        if (f.values[i] <= 0) {
            auto [t, v] = q.vertex(i);
            rep.violations.push_back({i, "non-positive value at (" + std::to_string(t) + "," + std::to_string(v) + ")"});
        }
    if (!rep.ok()) return rep;
    for (int i = 0; i < q.vertices; ++i) {
        const auto& m = q.meshes[i];
        mpz_class lhs = mpz_class(static_cast<long>(f.values[m.A])) * static_cast<long>(f.values[m.C]);
        mpz_class rhs = 1;
        for (int b : m.B) rhs *= static_cast<long>(f.values[b]);
        rhs += 1;
        if (lhs != rhs) {
            auto [t, v] = q.vertex(i);
            rep.violations.push_back({i, "mesh at (" + std::to_string(t) + "," + std::to_string(v) + "): " +
                                             lhs.get_str() + " != " + rhs.get_str()});
        }
    }
    return rep;
}

std::optional<MeshFrieze> knit(const TranslationQuiver& q, const std::vector<long long>& s0, KnitFailure* why) {
    if (static_cast<int>(s0.size()) != q.rank) throw std::invalid_argument("slice must have one value per node");
    auto fail = [&](int t, int v, const std::string& r) -> std::optional<MeshFrieze> {
        if (why) *why = {t, v, r};
        return std::nullopt;
    };
    const int S = q.slices();
    std::vector<std::vector<long long>> val(S + 1, std::vector<long long>(q.rank + 1, 0));
    for (int v = 1; v <= q.rank; ++v) {
        if (s0[v - 1] <= 0) return fail(0, v, "non-positive value");
        val[0][v] = s0[v - 1];
    }
    for (int t = 0; t < S; ++t)
        for (int v : q.order) {
            i128 p = 1;
            for (int u : q.out[v]) p *= val[t][u];
            for (int u : q.in[v]) p *= val[t + 1][u];
            p += 1;
            if (p % val[t][v] != 0) return fail(t + 1, v, "non-integral value");
            const i128 c = p / val[t][v];
            if (c >= kValueLimit) return fail(t + 1, v, "value exceeds 2^40");
            val[t + 1][v] = static_cast<long long>(c);
        }
    MeshFrieze f{q.type, std::vector<long long>(q.vertices)};
    for (int i = 0; i < q.vertices; ++i) {
        auto [t, v] = q.vertex(i);
        f.values[i] = val[t][v];
    }
    auto rep = validate(q, f);
    if (!rep.ok()) {
        auto [t, v] = q.vertex(std::max(0, rep.violations.front().mesh));
        return fail(t, v, "does not close up: " + rep.violations.front().detail);
    }
    return f;
}

Classification classify(const TranslationQuiver& q, const MeshFrieze& f) {
    auto rep = validate(q, f);
    if (!rep.ok()) throw std::invalid_argument("invalid mesh frieze: " + rep.violations.front().detail);
    Classification c;
    for (int i = 0; i < q.vertices; ++i)
        if (f.values[i] == 1) {
            ++c.ones;
            c.one_positions.push_back(q.vertex(i));
        }
    c.unitary = c.ones == q.rank;
    return c;
}

std::vector<long long> slice0(const TranslationQuiver& q, const MeshFrieze& f) {
    std::vector<long long> s(q.rank);
    for (int v = 1; v <= q.rank; ++v) s[v - 1] = f.values[q.offset[v]];
    return s;
}

bool complete(const TranslationQuiver& q, std::vector<std::optional<long long>>& vals, std::string* why) {
    auto fail = [&](const std::string& r) {
        if (why) *why = r;
        return false;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& m : q.meshes) {
            std::vector<int> all{m.A, m.C};
            all.insert(all.end(), m.B.begin(), m.B.end());
            int unknown = -1, count = 0;
            for (int x : all)
                if (!vals[x]) {
                    ++count;
                    unknown = x;
                }
            if (count != 1) continue;
            i128 num, den;
            if (unknown == m.A || unknown == m.C) {
                num = 1;
                for (int b : m.B) num *= *vals[b];
                num += 1;
                den = *vals[unknown == m.A ? m.C : m.A];
            } else {
                num = static_cast<i128>(*vals[m.A]) * *vals[m.C] - 1;
                den = 1;
                for (int b : m.B)
                    if (b != unknown) den *= *vals[b];
            }
            if (den == 0 || num % den != 0) return fail("non-integral value at vertex " + std::to_string(unknown));
            const i128 v = num / den;
            if (v <= 0) return fail("non-positive value at vertex " + std::to_string(unknown));
            if (v >= kValueLimit) return fail("value exceeds 2^40 at vertex " + std::to_string(unknown));
            vals[unknown] = static_cast<long long>(v);
            changed = true;
        }
    }
    for (int i = 0; i < q.vertices; ++i)
        if (!vals[i]) return fail("vertex " + std::to_string(i) + " undetermined");
    MeshFrieze f{q.type, {}};
    for (auto& v : vals) f.values.push_back(*v);
    auto rep = validate(q, f);
    if (!rep.ok()) return fail(rep.violations.front().detail);
    return true;
}

// SL_3 grids on the designated orbits.  Position (c, R) of the grid moves to
// (c + R - 3, n + 3 - R) under one step of the translation.
namespace {

struct Placement {
    std::string type;
    std::vector<std::pair<int, std::pair<int, int>>> seeds;  // node, grid position at slice 0
};

const Placement& placement_for(int w) {
    static const Placement d4{"D4", {{1, {0, 4}}, {3, {2, 4}}, {4, {4, 4}}}};
    static const Placement e6{"E6", {{1, {0, 4}}, {2, {4, 5}}}};
    static const Placement e8{"E8", {{1, {0, 5}}, {8, {6, 4}}}};
    switch (w) {
        case 2: return d4;
        case 3: return e6;
        case 4: return e8;
    }
    throw std::invalid_argument("SL_3 conversion needs width 2, 3 or 4");
}

std::pair<int, int> tau_step(std::pair<int, int> p, int n) {
    auto [c, R] = p;
    return {((c + R - 3) % n + n) % n, n + 3 - R};
}

// Visits every (quiver vertex, grid position) pair of the designated orbits.
template <class F>
void for_each_placed(const TranslationQuiver& q, const Placement& pl, int n, F&& fn) {
    for (auto [v, pos] : pl.seeds) {
        auto p = pos;
        for (int t = 0; t < 2 * q.slices(); ++t) {
            fn(q.index(t, v), p);
            p = tau_step(p, n);
        }
    }
}

}  // namespace

MeshFrieze convert_sl3(const FriezeGrid& grid) {
    if (grid.k != 3) throw std::invalid_argument("SL_3 conversion needs a k = 3 grid");
    if (!validate(grid, true).ok()) throw std::invalid_argument("grid is not a valid tame SL_3 frieze");
    const auto& pl = placement_for(grid.w);
    const auto& q = quiver(pl.type);
    std::vector<std::optional<long long>> vals(q.vertices);
    for_each_placed(q, pl, grid.n, [&](int idx, std::pair<int, int> p) {
        const long long x = grid.at(p.first, p.second);
        if (vals[idx] && *vals[idx] != x) throw std::logic_error("placement is inconsistent on the quotient");
        vals[idx] = x;
    });
    std::string why;
    if (!complete(q, vals, &why)) throw std::logic_error("SL_3 grid does not complete to a mesh frieze: " + why);
    MeshFrieze f{q.type, {}};
    for (auto& v : vals) f.values.push_back(*v);
    return f;
}

FriezeGrid mesh_to_sl3(const MeshFrieze& f) {
    int w = f.type == "D4" ? 2 : f.type == "E6" ? 3 : f.type == "E8" ? 4 : 0;
    const auto& pl = placement_for(w);
    const auto& q = quiver(pl.type);
    FriezeGrid grid(3, w);
    std::vector<std::vector<char>> seen(w, std::vector<char>(grid.n, 0));
    for_each_placed(q, pl, grid.n, [&](int idx, std::pair<int, int> p) {
        grid.cell(p.first, p.second) = f.values[idx];
        seen[grid.n - 1 - p.second][p.first] = 1;
    });
    for (auto& row : seen)
        for (char s : row)
            if (!s) throw std::logic_error("designated orbits do not cover the grid");
    return grid;
}

// Type A: vertex (t, v) sits in row R = v + 2 of the Conway–Coxeter frieze of the
// (n+3)-gon, at horizontal position 2c + R = column(t, v) + parity.
namespace {

int a_parity(const TranslationQuiver& q) {
    const int maxd = *std::max_element(q.dist.begin() + 1, q.dist.end());
    return ((maxd + q.branch) % 2 + 2) % 2;
}

std::pair<int, int> a_position(const TranslationQuiver& q, int t, int v) {
    const int R = v + 2;
    const int h = q.column(t, v) + a_parity(q);
    return {(h - R) / 2, R};
}

}  // namespace

FriezeGrid to_sl2_grid(const TranslationQuiver& q, const MeshFrieze& f) {
    if (q.family != 'A') throw std::invalid_argument("type A quiver required");
    FriezeGrid grid(2, q.rank);
    const int N = grid.n;
    for (int R = 3; R <= N - 1; ++R)
        for (int c = 0; c < N; ++c) {
            const int v = R - 2;
            const int maxd = *std::max_element(q.dist.begin() + 1, q.dist.end());
            const int t2 = 2 * c + R - a_parity(q) - (maxd - q.dist[v]);
            grid.cell(c, R) = f.values[q.index(t2 / 2, v)];
        }
    return grid;
}

MeshFrieze from_sl2_grid(const FriezeGrid& grid) {
    if (grid.k != 2) throw std::invalid_argument("SL_2 grid required");
    const auto& q = quiver("A" + std::to_string(grid.w));
    MeshFrieze f{q.type, std::vector<long long>(q.vertices)};
    for (int i = 0; i < q.vertices; ++i) {
        auto [t, v] = q.vertex(i);
        auto [c, R] = a_position(q, t, v);
        f.values[i] = grid.at(c, R);
    }
    return f;
}

std::pair<int, int> diagonal_of(const TranslationQuiver& q, int idx) {
    auto [t, v] = q.vertex(idx);
    auto [c, R] = a_position(q, t, v);
    const int N = q.rank + 3;
    int a = ((c % N) + N) % N;
    int b = (a + R - 1) % N;
    if (a == 0) a = N;
    if (b == 0) b = N;
    return {std::min(a, b), std::max(a, b)};
}

std::pair<MeshFrieze, MeshFrieze> restrict_typeA(const TranslationQuiver& q, const MeshFrieze& f, int idx) {
    if (q.family != 'A') throw std::invalid_argument("restriction is implemented for type A");
    if (f.values.at(idx) != 1) throw std::domain_error("restriction needs a vertex with value 1");
    auto grid = to_sl2_grid(q, f);
    const int N = grid.n;
    auto [a, b] = diagonal_of(q, idx);
    auto length = [&](int x, int y) -> long long {
        // diagonal {x, y} is the entry at (x, (y - x mod N) + 1)
        const int R = ((y - x) % N + N) % N + 1;
        if (R == 1 || R == N + 1) return 0;
        return grid.at(x, R);
    };
    auto piece = [&](int start, int m) -> MeshFrieze {
        FriezeGrid sub(2, m - 3);
        for (int R = 3; R <= m - 1; ++R)
            for (int c = 0; c < m; ++c) {
                const int x = start + ((c % m) + m - 1) % m;  // sub-vertex c (mod m) as 1..m, then original
                const int y = start + ((c + R - 1) % m + m - 1) % m;
                sub.cell(c, R) = length(x, y);
            }
        return from_sl2_grid(sub);
    };
    return {piece(a, b - a + 1), piece(b, N - (b - a) + 1)};
}

MeshFrieze transform(const TranslationQuiver& q, const MeshFrieze& f, const std::vector<int>& perm, int slices) {
    MeshFrieze g{f.type, std::vector<long long>(q.vertices)};
    for (int i = 0; i < q.vertices; ++i) {
        auto [t, v] = q.vertex(i);
        g.values[i] = f.values[q.index(static_cast<long long>(t) + slices, perm[v])];
    }
    return g;
}

MeshFrieze translate(const TranslationQuiver& q, const MeshFrieze& f, int slices) {
    std::vector<int> id(q.rank + 1);
    std::iota(id.begin(), id.end(), 0);
    return transform(q, f, id, slices);
}

std::string format_mesh_json(const TranslationQuiver& q, const MeshFrieze& f) {
    nlohmann::ordered_json j;
    j["type"] = f.type;
    j["slices"] = q.slices();
    auto rows = nlohmann::json::array();
    for (int v = 1; v <= q.rank; ++v) {
        std::vector<long long> row(f.values.begin() + q.offset[v], f.values.begin() + q.offset[v + 1]);
        rows.push_back(row);
    }
    j["values"] = rows;
    int ones = static_cast<int>(std::count(f.values.begin(), f.values.end(), 1LL));
    j["ones"] = ones;
    j["unitary"] = ones == q.rank;
    return j.dump();
}

MeshFrieze parse_mesh_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    MeshFrieze f;
    f.type = j.at("type").get<std::string>();
    const auto& q = quiver(f.type);
    const auto& rows = j.at("values");
    if (static_cast<int>(rows.size()) != q.rank) throw std::invalid_argument("expected one row per node");
    for (int v = 1; v <= q.rank; ++v) {
        auto row = rows[v - 1].get<std::vector<long long>>();
        if (static_cast<int>(row.size()) != q.span[v])
            throw std::invalid_argument("row " + std::to_string(v) + " must have " + std::to_string(q.span[v]) + " values");
        f.values.insert(f.values.end(), row.begin(), row.end());
    }
    return f;
}

std::string render_staggered(const TranslationQuiver& q, const MeshFrieze& f) {
    size_t wd = 1;
    for (long long x : f.values) wd = std::max(wd, std::to_string(x).size());
    const size_t unit = (wd + 2) / 2;
    std::ostringstream out;
    out << f.type << '\n';
    for (int v = 1; v <= q.rank; ++v) {
        std::string line;
        for (int t = 0; t < q.span[v]; ++t) {
            const size_t at = static_cast<size_t>(q.column(t, v)) * unit;
            const std::string s = std::to_string(f.values[q.offset[v] + t]);
            if (line.size() < at + s.size()) line.resize(at + s.size(), ' ');
            line.replace(at, s.size(), s);
        }
        out << line << '\n';
    }
    return out.str();
}

MeshFrieze parse_staggered(const std::string& text) {
    std::istringstream in(text);
    std::string line, type;
    const TranslationQuiver* q = nullptr;
    std::vector<std::optional<long long>> vals;
    int parity = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        auto bad = [&](const std::string& why) {
            return std::invalid_argument("line " + std::to_string(lineno) + ": " + why);
        };
        if (word == "type") {
            if (!(ls >> type)) throw bad("missing type");
            q = &quiver(type);
            vals.assign(q->vertices, std::nullopt);
            continue;
        }
        if (word != "node" || !q) throw bad("expected 'type' then 'node <v> col <c>: values'");
        int v, col;
        std::string colword;
        char colon;
        if (!(ls >> v >> colword >> col >> colon) || colword != "col" || colon != ':') throw bad("malformed node line");
        if (v < 1 || v > q->rank) throw bad("node out of range");
        const int depth = q->column(0, v);
        if (parity < 0) parity = ((col - depth) % 2 + 2) % 2;
        if (((col - depth - parity) % 2 + 2) % 2) throw bad("column parity does not fit the quiver");
        long long x;
        for (int i = 0; ls >> x; ++i) {
            const int t = (col + 2 * i - depth - parity) / 2;
            const int idx = q->index(t, v);
            if (vals[idx] && *vals[idx] != x)
                throw bad("conflicting values for vertex (" + std::to_string(q->vertex(idx).first) + "," +
                          std::to_string(v) + ")");
            vals[idx] = x;
        }
    }
    if (!q) throw std::invalid_argument("missing type line");
    MeshFrieze f{type, {}};
    for (int i = 0; i < q->vertices; ++i) {
        if (!vals[i]) {
            auto [t, v] = q->vertex(i);
            throw std::invalid_argument("vertex (" + std::to_string(t) + "," + std::to_string(v) + ") not covered");
        }
        f.values.push_back(*vals[i]);
    }
    return f;
}

}  // namespace frieze
