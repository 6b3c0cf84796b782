// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Criterion 10 is conjectural and runs only with --opt-in-conjectural.

#include "frieze/cyclic.hpp"
#include "frieze/grassmann.hpp"
#include "frieze/mesh.hpp"
#include "frieze/pfrieze.hpp"
#include "frieze/slk.hpp"
#include "frieze/twofrieze.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace frieze;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail.str("");
            detail << "failed: " << what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail.str("");
        o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_s) o.require(false, "runtime budget exceeded");
    if (!o.pass) ++failures;
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << name << "  [" << o.detail.str()
              << (o.detail.str().empty() ? "" : "; ") << secs << " s]" << std::endl;
}

std::string fixture(const std::string& name) { return oracle::slurp(std::string(FIXTURE_DIR) + "/" + name); }

std::vector<int> random_subset(std::mt19937_64& rng, int size, int n) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(size);
    return all;
}

std::set<std::vector<long long>> values(const std::vector<MeshFrieze>& v) {
    std::set<std::vector<long long>> s;
    for (const auto& f : v) s.insert(f.values);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    bool conjectural = false;
    for (int i = 1; i < argc; ++i)
        if (!std::strcmp(argv[i], "--opt-in-conjectural")) conjectural = true;

    criterion(1, "Plücker relations, 1000 random (I,J) per (k,n)", 10, [](Outcome& o) {
        std::mt19937_64 rng(1);
        int checked = 0;
        for (auto [k, n] : {std::pair{2, 5}, std::pair{3, 7}, std::pair{4, 9}}) {
            auto P = sample_point(k, n, rng());
            for (int t = 0; t < 1000; ++t) {
                auto I = random_subset(rng, k - 1, n);
                auto J = random_subset(rng, k + 1, n);
                o.require(check_plucker_relation(P, I, J), "relation at k=" + std::to_string(k));
                ++checked;
            }
        }
        o.detail << checked << " relations exact";
    });

    criterion(2, "diamond determinant formula, 500 random admissible tuples per (k,n)", 30, [](Outcome& o) {
        std::mt19937_64 rng(2);
        int checked = 0;
        for (int k = 2; k <= 4; ++k)
            for (int n = k + 2; n <= 9; ++n) {
                auto P = sample_point(k, n, rng());
                int done = 0;
                while (done < 500) {
                    const int s = 1 + static_cast<int>(rng() % k);
                    const int r = 1 + static_cast<int>(rng() % n);
                    auto m = random_subset(rng, s, n);
                    std::sort(m.begin(), m.end());
                    std::rotate(m.begin(), m.begin() + rng() % s, m.end());
                    auto c = column_conditions(k, n, r, m);
                    if (!c.c1_holds || !c.c2_holds) continue;
                    auto D = diamond(P, r, m);
                    const mpq_class rhs = det_formula_rhs(P, r, m);
                    o.require(det_bareiss(D.entries) == rhs, "Bareiss vs product formula");
                    o.require(det_laplace(D.entries) == rhs, "Laplace vs product formula");
                    o.require(verify_det_formula(P, r, m), "verify_det_formula");
                    ++done;
                }
                checked += done;
            }
        o.detail << checked << " tuples, Laplace cross-checked";
    });

    criterion(3, "SL_k structure of the Plücker frieze at 10 random points", 60, [](Outcome& o) {
        int k_total = 0, k1_total = 0;
        for (auto [k, n] : {std::pair{2, 5}, std::pair{3, 6}, std::pair{3, 7}, std::pair{3, 8}, std::pair{4, 9}})
            for (std::uint64_t seed = 1; seed <= 10; ++seed) {
                auto rep = verify_slk_structure(sample_point(k, n, seed * 7919 + k * 31 + n));
                o.require(rep.ok(), rep.ok() ? "" : rep.failures.front());
                k_total += rep.k_diamonds;
                k1_total += rep.k1_diamonds;
            }
        o.detail << k_total << " k-diamonds, " << k1_total << " (k+1)-diamonds";
    });

    criterion(4, "non-crossing cluster dichotomy", 60, [](Outcome& o) {
        std::vector<std::pair<int, int>> yes;
        for (int n = 4; n <= 8; ++n) yes.push_back({2, n});
        for (int n = 6; n <= 8; ++n) yes.push_back({3, n});
        yes.push_back({4, 6});
        for (auto [k, n] : yes) {
            auto c = find_noncrossing_cluster(k, n);
            o.require(c.has_value(), "no cluster for (" + std::to_string(k) + "," + std::to_string(n) + ")");
            if (!c) continue;
            o.require(static_cast<int>(c->size()) == (k - 1) * (n - k - 1), "certificate size");
            for (const auto& I : *c)
                for (const auto& J : *c) o.require(!oracle::crossing(I, J, n), "certificate crosses");
        }
        o.require(!find_noncrossing_cluster(4, 7).has_value(), "(4,7) should have none");
        o.detail << yes.size() << " certificates, (4,7) exhausted";
    });

    criterion(5, "SL_2 counts are Catalan numbers", 10, [](Outcome& o) {
        for (int w = 2; w <= 4; ++w) {
            auto all = enumerate_sl2(w, w + 1);
            o.require(static_cast<long long>(all.size()) == oracle::catalan(w + 1), "count at w=" + std::to_string(w));
            std::set<std::vector<long long>> q;
            for (const auto& T : all_triangulations(w + 3)) {
                auto a = quiddity(T);
                q.insert(std::vector<long long>(a.begin(), a.end()));
            }
            for (const auto& F : all) o.require(q.count(quiddity_of(F)) == 1, "frieze without triangulation");
            o.detail << all.size() << (w < 4 ? ", " : "");
        }
    });

    criterion(6, "SL_3 / mesh / 2-frieze counts agree (51 and 868, stable at B and 2B)", 300, [](Outcome& o) {
        auto stable = [&](const std::string& what, std::size_t a, std::size_t b, std::size_t want) {
            o.require(a == b && a == want, what + " gave " + std::to_string(a) + "/" + std::to_string(b));
        };
        stable("sl3 w=2", enumerate_sl3(2, 16).size(), enumerate_sl3(2, 32).size(), 51);
        stable("mesh D4", enumerate(quiver("D4"), 20).size(), enumerate(quiver("D4"), 40).size(), 51);
        stable("2-frieze h=2", enumerate(2, 8).size(), enumerate(2, 16).size(), 51);
        stable("sl3 w=3", enumerate_sl3(3, 32).size(), enumerate_sl3(3, 64).size(), 868);
        stable("mesh E6", enumerate(quiver("E6"), 320).size(), enumerate(quiver("E6"), 640).size(), 868);
        stable("2-frieze h=3", enumerate(3, 16).size(), enumerate(3, 32).size(), 868);
        o.detail << "51 x3, 868 x3";
    });

    criterion(7, "classification of the D4, D5 and E6 catalogs", 60, [](Outcome& o) {
        const auto& d4 = quiver("D4");
        int zero = 0;
        for (const auto& f : enumerate(d4, 20)) zero += classify(d4, f).ones == 0;
        o.require(zero == 1, "D4 frieze without 1s");

        const auto& d5 = quiver("D5");
        auto c5 = enumerate(d5, 40);
        int single = 0, nonu5 = 0;
        for (const auto& f : c5) {
            auto c = classify(d5, f);
            nonu5 += !c.unitary;
            single += !c.unitary && c.ones == 1;
        }
        o.require(c5.size() == 187 && nonu5 == 5 && single == 5, "D5 counts");

        const auto& e6 = quiver("E6");
        int nonu = 0, twos = 0;
        std::map<int, int> by_position;
        for (const auto& f : enumerate(e6, 320)) {
            auto c = classify(e6, f);
            if (c.unitary) continue;
            ++nonu;
            twos += c.ones == 2;
            for (auto [t, v] : c.one_positions) {
                o.require(v == 1 || v == 6, "1 outside the end-node orbit");
                if (v == 1) ++by_position[t];
            }
        }
        o.require(nonu == 35 && twos == 35, "E6 non-unitary count");
        o.require(by_position.size() == 7, "E6 node-1 positions");
        for (auto [t, n] : by_position) o.require(n == 5, "E6 class size");
        o.detail << "D4 1, D5 187/5, E6 35 = 7 x 5";
    });

    criterion(8, "golden friezes", 10, [](Outcome& o) {
        for (auto [file, type, ones] : {std::tuple{"d4_no_ones.txt", "D4", 0}, std::tuple{"d5_single_one.txt", "D5", 1},
                                        std::tuple{"d6_no_ones.txt", "D6", 0}, std::tuple{"e8_no_ones.txt", "E8", 0}}) {
            auto f = parse_staggered(fixture(file));
            const auto& q = quiver(type);
            o.require(f.type == type && validate(q, f).ok(), std::string(file) + " invalid");
            o.require(classify(q, f).ones == ones, std::string(file) + " ones");
        }
        auto t = parse_text(fixture("twofrieze_s2w2.txt"));
        o.require(validate(t).ok(), "2-frieze table invalid");
        o.require(solve_s_w_2() == std::vector<std::vector<long long>>{{2, 4, 5, 4, 2, 1}}, "s=w=2 solutions");
        o.detail << "5 fixtures, s=w=2 unique";
    });

    criterion(9, "invariants: ones <= rank, 1s near the branch, type A restriction", 60, [](Outcome& o) {
        int friezes = 0;
        for (auto [type, B] : {std::pair{"D4", 20LL}, std::pair{"D5", 40LL}, std::pair{"E6", 320LL}}) {
            const auto& q = quiver(type);
            auto near = q.neighbours_of_branch();
            near.push_back(q.branch);
            for (const auto& f : enumerate(q, B)) {
                auto c = classify(q, f);
                o.require(c.ones <= q.rank, "ones > rank");
                for (auto [t, v] : c.one_positions)
                    if (std::count(near.begin(), near.end(), v)) o.require(c.unitary, "1 near branch, not unitary");
                ++friezes;
            }
        }
        const auto& a3 = quiver("A3");
        int cuts = 0;
        for (const auto& T : all_triangulations(6)) {
            auto f = from_sl2_grid(from_triangulation(T));
            for (int i = 0; i < a3.vertices; ++i) {
                if (f.values[i] != 1) continue;
                auto [l, r] = restrict_typeA(a3, f, i);
                o.require(validate(quiver(l.type), l).ok() && validate(quiver(r.type), r).ok(), "restriction invalid");
                o.require(quiver(l.type).rank + quiver(r.type).rank == 2, "restriction ranks");
                ++cuts;
            }
        }
        o.detail << friezes << " catalog friezes, " << cuts << " hexagon cuts";
    });

    if (!conjectural) {
        std::cout << "criterion 10: SKIP  conjectural counts (pass --opt-in-conjectural)" << std::endl;
    } else {
        criterion(10, "conjectural: F4 = 112, E7 = 4400, E8 = 26952 (bounded runs, not proofs)", 600, [](Outcome& o) {
            const auto& e6 = quiver("E6");
            const std::vector<int> swap{0, 6, 2, 5, 4, 3, 1};
            int fixed = 0;
            for (const auto& f : enumerate(e6, 320)) fixed += transform(e6, f, swap, 0) == f;
            o.require(fixed == 112, "F4 count " + std::to_string(fixed));

            const auto& e7 = quiver("E7");
            auto a7 = enumerate_orbits(e7, 20), b7 = enumerate_orbits(e7, 40);
            o.require(a7.size() == 4400 && values(a7) == values(b7), "E7 count " + std::to_string(a7.size()));

            const auto& e8 = quiver("E8");
            auto a8 = enumerate_orbits(e8, 80), b8 = enumerate_orbits(e8, 160);
            o.require(a8.size() == 26952 && values(a8) == values(b8), "E8 count " + std::to_string(a8.size()));
            std::set<FriezeGrid> grids;
            for (const auto& f : a8) {
                auto g = mesh_to_sl3(f);
                o.require(validate(g, true).ok(), "width-4 grid invalid");
                grids.insert(g);
            }
            o.require(grids.size() == 26952, "width-4 grids " + std::to_string(grids.size()));
            o.detail << "F4 112; E7 4400 stable at B=20/40; E8 26952 stable at B=80/160; 26952 width-4 grids";
        });
    }

    std::cout << (failures ? "acceptance: FAIL" : "acceptance: PASS") << std::endl;
    return failures ? 1 : 0;
}
