#include "frieze/slk.hpp"

#include "frieze/grassmann.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace frieze {

FriezeGrid::FriezeGrid(int k_, int w_) : k(k_), w(w_), n(w_ + k_ + 1), rows(w_, std::vector<long long>(w_ + k_ + 1, 0)) {}

long long FriezeGrid::at(long long c, int R) const {
    if (R < k || R > n) return 0;
    if (R == k || R == n) return 1;
    const long long cc = ((c % n) + n) % n;
    return rows[n - 1 - R][cc];
}

long long& FriezeGrid::cell(long long c, int R) {
    const long long cc = ((c % n) + n) % n;
    return rows.at(n - 1 - R).at(cc);
}

int FriezeGrid::ones() const {
    int count = 0;
    for (const auto& row : rows) count += static_cast<int>(std::count(row.begin(), row.end(), 1LL));
    return count;
}

ValidationReport validate(const FriezeGrid& F, bool tame) {
    if (F.k < 1 || F.w < 0 || F.n != F.w + F.k + 1 || static_cast<int>(F.rows.size()) != F.w)
        throw std::invalid_argument("malformed frieze grid");
    for (const auto& row : F.rows)
        if (static_cast<int>(row.size()) != F.n) throw std::invalid_argument("malformed frieze grid");
    ValidationReport rep;
    for (int R = F.k + 1; R <= F.n - 1; ++R)
        for (int c = 0; c < F.n; ++c)
            if (F.at(c, R) <= 0) rep.nonpositive.emplace_back(c, R);
    auto check = [&](int s, int lo, int hi, long want) {
        for (int R0 = lo; R0 <= hi; ++R0)
            for (int c = 0; c < F.n; ++c) {
                ZMatrix D(s, std::vector<mpz_class>(s));
                for (int i = 0; i < s; ++i)
                    for (int j = 0; j < s; ++j) D[i][j] = static_cast<long>(F.at(c + i, R0 + j - i));
                mpz_class d = det_bareiss(std::move(D));
                if (d != want) rep.flags.push_back({s, c, R0, d.get_str()});
            }
    };
    check(F.k, F.k, F.n, 1);
    if (tame) check(F.k + 1, F.k + 1, F.n - 1, 0);
    return rep;
}

std::vector<Triangulation> all_triangulations(int n) {
    // Triangulations of the polygon on vertices lo..hi containing the edge (lo,hi).
    auto rec = [](auto&& self, int lo, int hi) -> std::vector<std::vector<std::pair<int, int>>> {
        if (hi - lo < 2) return {{}};
        std::vector<std::vector<std::pair<int, int>>> out;
        for (int apex = lo + 1; apex < hi; ++apex) {
            auto left = self(self, lo, apex);
            auto right = self(self, apex, hi);
            for (const auto& l : left)
                for (const auto& r : right) {
                    auto d = l;
                    d.insert(d.end(), r.begin(), r.end());
                    if (apex - lo >= 2) d.emplace_back(lo, apex);
                    if (hi - apex >= 2) d.emplace_back(apex, hi);
                    out.push_back(std::move(d));
                }
        }
        return out;
    };
    std::vector<Triangulation> out;
    for (auto& d : rec(rec, 1, n)) {
        std::sort(d.begin(), d.end());
        out.push_back({n, std::move(d)});
    }
    return out;
}

std::vector<int> quiddity(const Triangulation& T) {
    // Triangles at v = 1 + number of diagonals at v.
    std::vector<int> a(T.n, 1);
    for (auto [x, y] : T.diagonals) {
        ++a[x - 1];
        ++a[y - 1];
    }
    return a;
}

FriezeGrid sl2_from_quiddity(const std::vector<long long>& a) {
    const int n = static_cast<int>(a.size());
    FriezeGrid F(2, n - 3);
    // m(i, j) = a_{j-1} m(i, j-1) - m(i, j-2) along the diagonal from vertex i, m(i,i)=0, m(i,i+1)=1.
    for (int c = 0; c < n; ++c) {
        long long prev = 0, cur = 1;
        for (int R = 3; R <= n - 1; ++R) {
            long long next = a[(c + R - 2 + n - 1) % n] * cur - prev;
            prev = cur;
            cur = next;
            F.cell(c, R) = cur;
        }
    }
    return F;
}

FriezeGrid from_triangulation(const Triangulation& T) {
    auto q = quiddity(T);
    return sl2_from_quiddity(std::vector<long long>(q.begin(), q.end()));
}

std::vector<long long> quiddity_of(const FriezeGrid& F) {
    std::vector<long long> a(F.n);
    for (int c = 0; c < F.n; ++c) a[c] = F.at(c, 3);
    return a;
}

std::vector<FriezeGrid> enumerate_sl2(int w, long long B) {
    const int n = w + 3;
    std::vector<FriezeGrid> out;
    std::vector<long long> a(n, 1);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            // Closure: the diagonal from each vertex returns to 1 then 0 after n-1 and n steps.
            for (int c = 0; c < n; ++c) {
                long long prev = 0, cur = 1;
                for (int R = 3; R <= n + 1; ++R) {
                    long long next = a[(c + R - 2 + n - 1) % n] * cur - prev;
                    prev = cur;
                    cur = next;
                    if (R <= n - 1 && cur <= 0) return;
                    if (R == n && cur != 1) return;
                    if (R == n + 1 && cur != 0) return;
                }
            }
            out.push_back(sl2_from_quiddity(a));
            return;
        }
        for (long long v = 1; v <= B; ++v) {
            a[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> sl3_boundary(const FriezeGrid& F) {
    const int w = F.w, n = F.n;
    std::vector<long long> x(2 * w);
    for (int j = 0; j < w; ++j) x[j] = F.at(j, n - 1 - j);
    for (int j = 0; j < w; ++j) x[w + j] = F.at(n - 3, 4 + j);
    return x;
}

// Reconstruction of an SL_3 frieze from its boundary.  The frieze is realised as
// F(c, R) = det(v_c, v_{c+1}, v_{c+R-1}) for vectors v_0..v_{n-1} with all
// consecutive minors 1, in the gauge v_{n-3}, v_{n-2}, v_{n-1} = e1, e2, e3.
// Each coordinate of v_j is a frieze entry, so with boundary values fixed every
// unknown is obtained by one exact division whose divisor is an earlier entry.
namespace {

using i128 = __int128;
constexpr i128 kLimit = static_cast<i128>(1) << 61;

struct V3 {
    i128 a[3];
};

i128 det3(const V3& x, const V3& y, const V3& z) {
    return x.a[0] * (y.a[1] * z.a[2] - y.a[2] * z.a[1]) - y.a[0] * (x.a[1] * z.a[2] - x.a[2] * z.a[1]) +
           z.a[0] * (x.a[1] * y.a[2] - x.a[2] * y.a[1]);
}

bool small(i128 v) { return v < kLimit && v > -kLimit; }

const V3 E1{{1, 0, 0}}, E2{{0, 1, 0}}, E3{{0, 0, 1}};

enum class StepResult { ok, not_integral, nonpositive, degenerate, overflow };

const char* describe(StepResult r) {
    switch (r) {
        case StepResult::ok: return "ok";
        case StepResult::not_integral: return "non-integral entry";
        case StepResult::nonpositive: return "non-positive entry";
        case StepResult::degenerate: return "zero denominator";
        case StepResult::overflow: return "entry exceeds 2^61";
    }
    return "";
}

// u_j = (p, q, t) from u_{j-2}, u_{j-1}, the diagonal value xj and t.
StepResult solve_step(const V3& u2, const V3& u1, i128 xj, i128 t, V3& out) {
    const i128 num = xj + u1.a[0] * t;
    if (u1.a[2] == 0) return StepResult::degenerate;
    if (num % u1.a[2] != 0) return StepResult::not_integral;
    const i128 p = num / u1.a[2];
    if (p <= 0) return StepResult::nonpositive;
    if (!small(p)) return StepResult::overflow;
    const i128 d0 = det3(u2, u1, V3{{p, 0, t}});
    const i128 d1 = det3(u2, u1, E2);
    if (d1 == 0) return StepResult::degenerate;
    if ((1 - d0) % d1 != 0) return StepResult::not_integral;
    const i128 q = (1 - d0) / d1;
    if (q <= 0) return StepResult::nonpositive;
    if (!small(q)) return StepResult::overflow;
    out = V3{{p, q, t}};
    return StepResult::ok;
}

// Finishes the gauge fixing and evaluates the grid.
StepResult finish(int w, const std::vector<V3>& u, i128 xw, FriezeGrid& F) {
    const int n = w + 4;
    const i128 num = det3(u[w], u[w + 1], E1) - 1;  // u is offset by one: u[j+1] = u_j
    if (num % xw != 0) return StepResult::not_integral;
    const i128 a = num / xw;
    std::vector<V3> v(n);
    for (int j = 0; j <= w; ++j) {
        const V3& s = u[j + 1];
        v[j] = V3{{s.a[0], s.a[1] + a * s.a[0], s.a[2]}};
        if (!small(v[j].a[1])) return StepResult::overflow;
    }
    v[n - 3] = E1;
    v[n - 2] = E2;
    v[n - 1] = E3;
    for (int c = 0; c < n; ++c)
        if (det3(v[c], v[(c + 1) % n], v[(c + 2) % n]) != 1) return StepResult::degenerate;
    F = FriezeGrid(3, w);
    for (int R = 4; R <= n - 1; ++R)
        for (int c = 0; c < n; ++c) {
            const i128 e = det3(v[c], v[(c + 1) % n], v[(c + R - 1) % n]);
            if (e <= 0) return StepResult::nonpositive;
            if (!small(e)) return StepResult::overflow;
            F.cell(c, R) = static_cast<long long>(e);
        }
    return StepResult::ok;
}

// u[0] = u_{-1}; u_{-2} = e2 is handled by the caller through prev2().
struct Chain {
    int w;
    std::vector<V3> u;  // u[j+1] = u_j, j = -1..w
    explicit Chain(int w_) : w(w_), u(w_ + 2) { u[0] = E3; }
    const V3& at(int j) const { return j == -2 ? E2 : u[j + 1]; }
    V3& set(int j) { return u[j + 1]; }
};

}  // namespace

std::optional<FriezeGrid> sl3_from_boundary(int w, const std::vector<long long>& x, BoundaryFailure* why) {
    if (w < 1 || static_cast<int>(x.size()) != 2 * w) throw std::invalid_argument("boundary must have 2w entries, w >= 1");
    auto fail = [&](const std::string& where, StepResult r) -> std::optional<FriezeGrid> {
        if (why) why->reason = std::string(describe(r)) + " at " + where;
        return std::nullopt;
    };
    for (long long v : x)
        if (v <= 0) return fail("boundary", StepResult::nonpositive);
    Chain ch(w);
    ch.set(0) = V3{{1, 0, x[w]}};
    for (int j = 1; j <= w; ++j) {
        const i128 t = j < w ? x[w + j] : 1;
        auto r = solve_step(ch.at(j - 2), ch.at(j - 1), x[j - 1], t, ch.set(j));
        if (r != StepResult::ok) return fail("step " + std::to_string(j), r);
    }
    FriezeGrid F;
    auto r = finish(w, ch.u, x[w - 1], F);
    if (r != StepResult::ok) return fail("closure", r);
    return F;
}

namespace {

struct Sl3Search {
    int w;
    long long B;
    Chain ch;
    std::vector<long long> x;
    std::vector<FriezeGrid> found;
    std::uint64_t nodes = 0;

    Sl3Search(int w_, long long B_) : w(w_), B(B_), ch(w_), x(2 * w_, 0) {}

    void leaf() {
        FriezeGrid F;
        if (finish(w, ch.u, x[w - 1], F) == StepResult::ok) found.push_back(std::move(F));
    }

    // Chooses t = x_{w+1+j} (for j < w) and then x_j in its residue class.
    void step(int j) {
        if (j > w) {
            leaf();
            return;
        }
        if (j < w) {
            for (long long t = 1; t <= B; ++t) {
                x[w + j] = t;
                diag(j, t);
            }
        } else {
            diag(j, 1);
        }
    }

    void diag(int j, long long t) {
        const V3& prev = ch.at(j - 1);
        const i128 m = prev.a[2];
        i128 r0 = (-(prev.a[0] * t)) % m;
        if (r0 <= 0) r0 += m;
        for (i128 xj = r0; xj <= B; xj += m) {
            ++nodes;
            x[j - 1] = static_cast<long long>(xj);
            if (solve_step(ch.at(j - 2), prev, xj, t, ch.set(j)) != StepResult::ok) continue;
            step(j + 1);
        }
    }

    // Entry point with the first one or two boundary values fixed.
    void run_from(long long x0, long long t1) {
        x[w] = x0;
        ch.set(0) = V3{{1, 0, x0}};
        if (w == 1) {
            diag(1, 1);
            return;
        }
        x[w + 1] = t1;
        diag(1, t1);
    }
};

}  // namespace

std::vector<FriezeGrid> enumerate_sl3(int w, long long B, int workers, Sl3Stats* stats) {
    if (w < 1) throw std::invalid_argument("width must be at least 1");
    // Shards are (x_{w+1}, x_{w+2}) pairs; results are merged in shard order and sorted.
    const long long second = w == 1 ? 1 : B;
    const long long shards = B * second;
    std::vector<std::vector<FriezeGrid>> parts(static_cast<size_t>(shards));
    std::vector<std::uint64_t> counts(static_cast<size_t>(shards), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, workers))
#endif
    for (long long s = 0; s < shards; ++s) {
        Sl3Search search(w, B);
        search.run_from(s / second + 1, s % second + 1);
        parts[s] = std::move(search.found);
        counts[s] = search.nodes;
    }
    (void)workers;
    std::vector<FriezeGrid> out;
    for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    std::sort(out.begin(), out.end(),
              [](const FriezeGrid& a, const FriezeGrid& b) { return sl3_boundary(a) < sl3_boundary(b); });
    if (stats)
        for (auto c : counts) stats->nodes += c;
    return out;
}

std::vector<FriezeGrid> enumerate_sl3_reference(int w, long long B) {
    std::vector<FriezeGrid> out;
    std::vector<long long> x(2 * w, 1);
    while (true) {
        if (auto F = sl3_from_boundary(w, x)) out.push_back(*F);
        int i = 0;
        while (i < 2 * w && x[i] == B) x[i++] = 1;
        if (i == 2 * w) break;
        ++x[i];
    }
    std::sort(out.begin(), out.end(),
              [](const FriezeGrid& a, const FriezeGrid& b) { return sl3_boundary(a) < sl3_boundary(b); });
    return out;
}

std::string format_grid(const FriezeGrid& F) {
    std::ostringstream out;
    out << F.k << ' ' << F.w << ' ' << F.n << '\n';
    for (const auto& row : F.rows) {
        for (size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
        out << '\n';
    }
    return out.str();
}

FriezeGrid parse_grid(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next_line = [&](std::string& l) {
        while (std::getline(in, l)) {
            auto pos = l.find('#');
            if (pos != std::string::npos) l.resize(pos);
            if (l.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line(line)) throw std::invalid_argument("empty grid");
    int k, w, n;
    {
        std::istringstream h(line);
        if (!(h >> k >> w >> n)) throw std::invalid_argument("bad grid header, expected 'k w n'");
    }
    if (k < 1 || w < 0 || n != w + k + 1) throw std::invalid_argument("grid header violates n = w + k + 1");
    FriezeGrid F(k, w);
    for (int i = 0; i < w; ++i) {
        if (!next_line(line)) throw std::invalid_argument("grid has too few rows");
        std::istringstream r(line);
        for (int c = 0; c < n; ++c)
            if (!(r >> F.rows[i][c])) throw std::invalid_argument("grid row " + std::to_string(i + 1) + " too short");
        long long extra;
        if (r >> extra) throw std::invalid_argument("grid row " + std::to_string(i + 1) + " too long");
    }
    if (next_line(line)) throw std::invalid_argument("grid has too many rows");
    return F;
}

}  // namespace frieze
