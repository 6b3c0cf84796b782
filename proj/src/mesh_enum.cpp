#include "frieze/mesh.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <set>

namespace frieze {

namespace {

using i128 = __int128;
constexpr long long kValueLimit = 1LL << 40;

// One step of the per-depth plan.  All vertex ids are quotient indices.
struct Step {
    enum Kind : unsigned char { SolveA, SolveC, SolveB, Check } kind;
    int target;
    int a, c;
    std::array<int, 3> b;
    int nb;
};

struct Plan {
    std::vector<int> var;                 // vertex assigned at each depth
    std::vector<std::vector<Step>> steps; // run after assigning var[d]
};

// Simulates which meshes become decidable; returns the steps and updates state.
std::vector<Step> propagate(const TranslationQuiver& q, std::vector<char>& known, std::vector<char>& used) {
    std::vector<Step> steps;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < q.vertices; ++i) {
            if (used[i]) continue;
            const auto& m = q.meshes[i];
            std::vector<int> all{m.A, m.C};
            all.insert(all.end(), m.B.begin(), m.B.end());
            int count = 0, unknown = -1;
            for (int x : all)
                if (!known[x]) {
                    ++count;
                    unknown = x;
                }
            if (count > 1) continue;
            Step s{Step::Check, -1, m.A, m.C, {0, 0, 0}, 0};
            if (count == 1) {
                s.target = unknown;
                if (unknown == m.A) s.kind = Step::SolveA;
                else if (unknown == m.C) s.kind = Step::SolveC;
                else s.kind = Step::SolveB;
            }
            for (int b : m.B)
                if (!(s.kind == Step::SolveB && b == unknown)) s.b[s.nb++] = b;
            if (count == 1) known[unknown] = 1;
            used[i] = 1;
            steps.push_back(s);
            changed = true;
        }
    }
    return steps;
}

Plan make_plan(const TranslationQuiver& q) {
    Plan plan;
    std::vector<char> known(q.vertices, 0), used(q.vertices, 0);
    std::vector<char> taken(q.rank + 1, 0);
    for (int d = 0; d < q.rank; ++d) {
        // Pick the node whose assignment settles the most meshes.
        int best = -1, best_score = -1;
        for (int v = 1; v <= q.rank; ++v) {
            if (taken[v]) continue;
            auto k2 = known;
            auto u2 = used;
            k2[q.offset[v]] = 1;
            auto st = propagate(q, k2, u2);
            int score = 0;
            for (auto& s : st) score += s.kind == Step::Check ? 2 : 1;
            if (score > best_score) {
                best_score = score;
                best = v;
            }
        }
        taken[best] = 1;
        known[q.offset[best]] = 1;
        plan.var.push_back(q.offset[best]);
        plan.steps.push_back(propagate(q, known, used));
    }
    return plan;
}

bool run_steps(const std::vector<Step>& steps, long long* val) {
    for (const auto& s : steps) {
        i128 bp = 1;
        for (int i = 0; i < s.nb; ++i) bp *= val[s.b[i]];
        i128 num, den;
        switch (s.kind) {
            case Step::Check:
                if (static_cast<i128>(val[s.a]) * val[s.c] != bp + 1) return false;
                continue;
            case Step::SolveA:
                num = bp + 1;
                den = val[s.c];
                break;
            case Step::SolveC:
                num = bp + 1;
                den = val[s.a];
                break;
            default:
                num = static_cast<i128>(val[s.a]) * val[s.c] - 1;
                den = bp;
                break;
        }
        if (num <= 0 || num % den != 0) return false;
        const i128 x = num / den;
        if (x >= kValueLimit) return false;
        val[s.target] = static_cast<long long>(x);
    }
    return true;
}

struct Search {
    const TranslationQuiver& q;
    const Plan& plan;
    long long B;
    std::vector<long long> val;
    std::vector<MeshFrieze> found;
    std::uint64_t nodes = 0;

    void dfs(size_t d) {
        if (d == plan.var.size()) {
            MeshFrieze f{q.type, val};
            if (validate(q, f).ok()) found.push_back(std::move(f));
            return;
        }
        for (long long x = 1; x <= B; ++x) {
            ++nodes;
            val[plan.var[d]] = x;
            if (run_steps(plan.steps[d], val.data())) dfs(d + 1);
        }
    }
};

bool by_slice0(const TranslationQuiver& q, const MeshFrieze& a, const MeshFrieze& b) {
    return slice0(q, a) < slice0(q, b);
}

}  // namespace

std::vector<MeshFrieze> enumerate(const TranslationQuiver& q, long long B, int workers, MeshEnumStats* stats) {
    std::vector<MeshFrieze> out;
    if (q.rank == 0) {
        out.push_back({q.type, {}});
        return out;
    }
    const Plan plan = make_plan(q);
    std::vector<std::vector<MeshFrieze>> shard(B);
    std::vector<std::uint64_t> shard_nodes(B, 0);
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, workers))
    for (long long x = 1; x <= B; ++x) {
        Search s{q, plan, B, std::vector<long long>(q.vertices, 0), {}, 1};
        s.val[plan.var[0]] = x;
        if (run_steps(plan.steps[0], s.val.data())) s.dfs(1);
        shard[x - 1] = std::move(s.found);
        shard_nodes[x - 1] = s.nodes;
    }
    for (auto& s : shard)
        for (auto& f : s) out.push_back(std::move(f));
    std::sort(out.begin(), out.end(), [&](const MeshFrieze& a, const MeshFrieze& b) { return by_slice0(q, a, b); });
    if (stats) {
        stats->nodes = 0;
        for (auto n : shard_nodes) stats->nodes += n;
        stats->assignment_order.clear();
        for (int idx : plan.var) stats->assignment_order.push_back(q.vertex(idx).second);
    }
    return out;
}

std::vector<MeshFrieze> enumerate_orbits(const TranslationQuiver& q, long long B, int workers, MeshEnumStats* stats) {
    std::set<std::vector<long long>> seen;
    std::vector<MeshFrieze> out;
    for (const auto& f : enumerate(q, B, workers, stats)) {
        if (seen.count(f.values)) continue;
        MeshFrieze g = f;
        do {
            seen.insert(g.values);
            out.push_back(g);
            g = translate(q, g, 1);
        } while (g != f);
    }
    std::sort(out.begin(), out.end(), [&](const MeshFrieze& a, const MeshFrieze& b) { return by_slice0(q, a, b); });
    return out;
}

std::vector<MeshFrieze> enumerate_reference(const TranslationQuiver& q, long long B) {
    std::vector<MeshFrieze> out;
    std::vector<long long> s(q.rank, 1);
    while (true) {
        if (auto f = knit(q, s)) out.push_back(std::move(*f));
        int i = q.rank - 1;
        while (i >= 0 && s[i] == B) s[i--] = 1;
        if (i < 0) break;
        ++s[i];
    }
    std::sort(out.begin(), out.end(), [&](const MeshFrieze& a, const MeshFrieze& b) { return by_slice0(q, a, b); });
    return out;
}

}  // namespace frieze
