#include "frieze/twofrieze.hpp"

#include "json.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>
#include <sstream>
#include <stdexcept>

namespace frieze {

namespace {

using i128 = __int128;
constexpr long long kLimit = 1LL << 60;

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

}  // namespace

long long TwoFrieze::at(long long i, int j) const {
    if (j == 0 || j == h + 1) return 1;
    return rows[mod(i, period)][j - 1];
}

std::vector<long long> TwoFrieze::column() const {
    std::vector<long long> c;
    for (int i = 0; i < 2 * h; ++i) c.push_back(at(i, 1));
    return c;
}

TwoFriezeReport validate(const TwoFrieze& f) {
    TwoFriezeReport rep;
    if (f.h < 1 || f.period < 1 || static_cast<int>(f.rows.size()) != f.period) {
        rep.violations.push_back("malformed: need period rows");
        return rep;
    }
    for (int i = 0; i < f.period; ++i) {
        if (static_cast<int>(f.rows[i].size()) != f.h) {
            rep.violations.push_back("row " + std::to_string(i) + " has the wrong length");
            return rep;
        }
        for (int j = 1; j <= f.h; ++j)
            if (f.at(i, j) <= 0)
                rep.violations.push_back("non-positive entry at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    for (int i = 0; i < f.period; ++i)
        for (int j = 1; j <= f.h; ++j) {
            const i128 rhs = static_cast<i128>(f.at(i - 1, j)) * f.at(i + 1, j) -
                             static_cast<i128>(f.at(i, j - 1)) * f.at(i, j + 1);
            if (rhs != f.at(i, j))
                rep.violations.push_back("recurrence fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    return rep;
}

std::optional<TwoFrieze> from_rows(int h, const std::vector<long long>& r0, const std::vector<long long>& r1,
                                   PropagationFailure* why) {
    auto fail = [&](const std::string& r) -> std::optional<TwoFrieze> {
        if (why) why->reason = r;
        return std::nullopt;
    };
    if (h < 1 || static_cast<int>(r0.size()) != h || static_cast<int>(r1.size()) != h)
        throw std::invalid_argument("rows must have h entries");
    for (int j = 0; j < h; ++j)
        if (r0[j] <= 0 || r1[j] <= 0) return fail("non-positive initial entry");
    const int L = 2 * (h + 4);
    std::vector<std::vector<long long>> rows(L + 2, std::vector<long long>(h + 2, 1));
    std::copy(r0.begin(), r0.end(), rows[0].begin() + 1);
    std::copy(r1.begin(), r1.end(), rows[1].begin() + 1);
    for (int i = 1; i <= L; ++i)
        for (int j = 1; j <= h; ++j) {
            const i128 num = rows[i][j] + static_cast<i128>(rows[i][j - 1]) * rows[i][j + 1];
            if (num % rows[i - 1][j] != 0)
                return fail("non-integral entry at (" + std::to_string(i + 1) + "," + std::to_string(j) + ")");
            const i128 x = num / rows[i - 1][j];
            if (x >= kLimit) return fail("entry exceeds 2^60");
            rows[i + 1][j] = static_cast<long long>(x);
        }
    if (rows[L] != rows[0] || rows[L + 1] != rows[1]) return fail("does not close up periodically");
    int p = 1;
    while (rows[p] != rows[0] || rows[p + 1] != rows[1]) ++p;
    TwoFrieze f{h, p, {}};
    for (int i = 0; i < p; ++i) f.rows.emplace_back(rows[i].begin() + 1, rows[i].end() - 1);
    return f;
}

std::optional<TwoFrieze> from_first_rows(long long s, long long t, long long u, long long v, long long w, long long x,
                                         PropagationFailure* why) {
    return from_rows(3, {s, t, u}, {v, w, x}, why);
}

namespace {

// Triangle of entries to the right of the first column: tri[i][j] = a(i, j) for
// i in [j-1, 2h-j].  Fills the entries that become known once col[m] is set.
bool extend_triangle(int h, std::vector<std::vector<long long>>& tri, int m) {
    for (int j = 2; j <= h && m - j + 1 >= j - 1; ++j) {
        const int i = m - j + 1;
        const long long below = j == 2 ? 1 : tri[i][j - 2];
        const i128 num = static_cast<i128>(tri[i - 1][j - 1]) * tri[i + 1][j - 1] - tri[i][j - 1];
        if (num <= 0 || num % below != 0) return false;
        const i128 x = num / below;
        if (x >= kLimit) return false;
        tri[i][j] = static_cast<long long>(x);
    }
    return true;
}

std::optional<TwoFrieze> close_from_triangle(int h, const std::vector<std::vector<long long>>& tri,
                                             PropagationFailure* why) {
    std::vector<long long> r0(tri[h - 1].begin() + 1, tri[h - 1].begin() + h + 1);
    std::vector<long long> r1(tri[h].begin() + 1, tri[h].begin() + h + 1);
    auto g = from_rows(h, r0, r1, why);
    if (!g) return g;
    // rows of g start at row h-1 of the original
    TwoFrieze f{h, g->period, std::vector<std::vector<long long>>(g->period)};
    for (int i = 0; i < g->period; ++i) f.rows[i] = g->rows[mod(i - (h - 1), g->period)];
    return f;
}

// Height 3: a(4,3) = (a(3,3) + a(3,2)) / a(2,3) with a(3,3) = x a(2,2) - a(1,1) a(4,1) + 1,
// so the last column entry x lies in one residue class modulo a(2,3) / g.
bool last_residue(const std::vector<std::vector<long long>>& tri, long long& first, long long& step) {
    const long long P = tri[2][3], a = tri[2][2];
    const long long K = mod(tri[3][2] - tri[1][1] * tri[4][1] + 1, P);
    const long long g = std::gcd(a, P);
    if (K % g != 0) return false;
    const long long m = P / g;
    // solve (a/g) x = -K/g (mod m)
    long long r0 = m, r1 = mod(a / g, m), s0 = 0, s1 = 1;
    while (r1 != 0) {
        const long long q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    const long long inv = mod(s0, m);
    first = static_cast<long long>(static_cast<i128>(inv) * mod(-(K / g), m) % m);
    if (first == 0) first = m;
    step = m;
    return true;
}

}  // namespace

std::optional<TwoFrieze> from_first_column(int h, const std::vector<long long>& col, PropagationFailure* why) {
    if (h < 1 || static_cast<int>(col.size()) != 2 * h) throw std::invalid_argument("column must have 2h entries");
    std::vector<std::vector<long long>> tri(2 * h, std::vector<long long>(h + 2, 0));
    for (int m = 0; m < 2 * h; ++m) {
        if (col[m] <= 0) {
            if (why) why->reason = "non-positive initial entry";
            return std::nullopt;
        }
        tri[m][1] = col[m];
        if (!extend_triangle(h, tri, m)) {
            if (why) why->reason = "entry next to the column is not a positive integer";
            return std::nullopt;
        }
    }
    auto f = close_from_triangle(h, tri, why);
    if (f && f->column() != col) throw std::logic_error("column propagation is inconsistent");
    return f;
}

namespace {

struct FormCheck {
    std::string name;
    i128 lhs, rhs;
};

std::vector<std::string> mismatches(const std::vector<FormCheck>& checks) {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (c.lhs != c.rhs) out.push_back(c.name);
    return out;
}

}  // namespace

std::vector<std::string> row_form_mismatches(const TwoFrieze& f) {
    if (f.h != 3) throw std::invalid_argument("closed forms are for height 3");
    const i128 s = f.at(0, 1), t = f.at(0, 2), u = f.at(0, 3);
    const i128 v = f.at(1, 1), w = f.at(1, 2), x = f.at(1, 3);
    auto a = [&](int i, int j) -> i128 { return f.at(i, j); };
    return mismatches({
        {"(v+w)/s", s * a(2, 1), v + w},
        {"(vx+w)/t", t * a(2, 2), v * x + w},
        {"(w+x)/u", u * a(2, 3), w + x},
        {"row3 left", s * t * v * a(3, 1), s * v * x + s * w + t * v + t * w},
        {"X", s * t * u * w * a(3, 2), s * u * v * x + s * u * w + t * v * w + t * v * x + t * w * w + t * w * x},
        {"row3 right", t * u * x * a(3, 3), t * w + t * x + u * v * x + u * w},
        {"row4 left", t * u * v * w * a(4, 1), s * u * v * x + s * u * w + t * u * w + t * v * w + t * v * x},
        {"Y", s * t * u * v * w * x * a(4, 2),
         s * t * u * v * x + s * t * w * w + s * t * w * x + s * u * v * w * x + s * u * w * w + t * t * v * w +
             t * t * v * x + t * t * w * w + t * t * w * x + t * u * v * w + t * u * w * w},
        {"row4 right", s * t * w * x * a(4, 3), s * t * w + s * u * v * x + s * u * w + t * v * x + t * w * x},
        {"row5 left", u * w * x * a(5, 1), s * u * x + t * w + t * x + u * w},
        {"Z", t * v * w * x * a(5, 2), s * t * w + s * u * v * x + s * u * w + t * t * w + t * u * w + t * v * x},
        {"row5 right", s * v * w * a(5, 3), s * u * v + s * w + t * v + t * w},
        {"(t+u)/x", x * a(6, 1), t + u},
        {"(su+t)/w", w * a(6, 2), s * u + t},
        {"(s+t)/v", v * a(6, 3), s + t},
        {"row7", a(7, 1) * 10000 + a(7, 2) * 100 + a(7, 3), u * 10000 + t * 100 + s},
        {"row8", a(8, 1) * 10000 + a(8, 2) * 100 + a(8, 3), x * 10000 + w * 100 + v},
    });
}

std::vector<std::string> column_form_mismatches(const TwoFrieze& f) {
    if (f.h != 3) throw std::invalid_argument("closed forms are for height 3");
    const i128 s = f.at(0, 1), t = f.at(1, 1), u = f.at(2, 1), v = f.at(3, 1), w = f.at(4, 1), x = f.at(5, 1);
    auto a = [&](int i, int j) -> i128 { return f.at(i, j); };
    const i128 P = s * u * w - s * v - t * w + 1;
    const i128 Q = t * v * x - t * w - u * x + 1;
    return mismatches({
        {"su-t", a(1, 2), s * u - t},
        {"tv-u", a(2, 2), t * v - u},
        {"uw-v", a(3, 2), u * w - v},
        {"vx-w", a(4, 2), v * x - w},
        {"suw-sv-tw+1", a(2, 3), P},
        {"tvx-tw-ux+1", a(3, 3), Q},
        {"a(0,2)", Q * a(0, 2), s * u * x - s - t * x + t},
        {"a(1,3)", Q * a(1, 3), s * u * w - s * v + t * v - t * w - u + 1},
        {"a(4,3)", P * a(4, 3), t * v * x - t * w + u * w - u * x - v + 1},
        {"a(5,2)", P * a(5, 2), s * v * x - s * w + w - x},
        {"a(6,1)", P * a(6, 1), s * u * x - s - t * x + 1},
        {"a(6,3)", Q * a(6, 3), s * v * x - s * w - x + 1},
        {"glide s", a(7, 3), s},
        {"glide t", a(8, 3), t},
        {"glide u", a(9, 3), u},
    });
}

std::vector<TwoFrieze> enumerate(int h, long long B, int workers, TwoEnumStats* stats) {
    if (h < 1) throw std::invalid_argument("height must be positive");
    const int n = 2 * h;
    std::vector<std::vector<TwoFrieze>> shard(B);
    std::vector<std::uint64_t> shard_nodes(B, 0);
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, workers))
    for (long long c0 = 1; c0 <= B; ++c0) {
        std::vector<std::vector<long long>> tri(n, std::vector<long long>(h + 2, 0));
        std::uint64_t nodes = 1;
        std::vector<TwoFrieze> found;
        tri[0][1] = c0;
        std::function<void(int)> dfs = [&](int m) {
            if (m == n) {
                if (auto f = close_from_triangle(h, tri, nullptr)) found.push_back(std::move(*f));
                return;
            }
            long long first = 1, step = 1;
            if (h == 3 && m == 5 && !last_residue(tri, first, step)) return;
            for (long long c = first; c <= B; c += step) {
                ++nodes;
                tri[m][1] = c;
                if (extend_triangle(h, tri, m)) dfs(m + 1);
            }
        };
        dfs(1);
        shard[c0 - 1] = std::move(found);
        shard_nodes[c0 - 1] = nodes;
    }
    std::vector<TwoFrieze> out;
    for (auto& s : shard)
        for (auto& f : s) out.push_back(std::move(f));
    if (stats) {
        stats->nodes = 0;
        for (auto k : shard_nodes) stats->nodes += k;
    }
    return out;
}

std::vector<TwoFrieze> enumerate_reference(int h, long long B) {
    std::vector<TwoFrieze> out;
    std::vector<long long> col(2 * h, 1);
    while (true) {
        if (auto f = from_first_column(h, col)) out.push_back(std::move(*f));
        int i = 2 * h - 1;
        while (i >= 0 && col[i] == B) col[i--] = 1;
        if (i < 0) break;
        ++col[i];
    }
    return out;
}

std::string trichotomy_class(const TwoFrieze& f) {
    if (f.h != 3) throw std::invalid_argument("trichotomy is stated for height 3");
    const int L = 2 * (f.h + 4);
    long long M = 0;
    for (int i = 0; i < L; ++i) M = std::max({M, f.at(i, 1), f.at(i, 3)});
    for (int i0 = 0; i0 < L; ++i0) {
        if (f.at(i0 + 2, 1) != M) continue;
        const long long s = f.at(i0, 1), w = f.at(i0 + 4, 1);
        if (s == 1) return "s=1";
        if (w == 1) return "w=1";
        if (s == 2 && w == 2) return "s=w=2";
        return "none";
    }
    return "none";
}

std::vector<std::vector<long long>> solve_s_w_2() {
    std::vector<std::vector<long long>> out;
    for (long long t = 1; t < 6; ++t)
        for (long long v = 1; v < 6; ++v)
            for (long long u = 1; u <= std::min(9LL, 2 * t - 1); ++u)
                for (long long x = 1; x <= u; ++x) {
                    std::vector<long long> col{2, t, u, v, 2, x};
                    auto f = from_first_column(3, col);
                    if (!f) continue;
                    long long M = 0;
                    for (int i = 0; i < f->period; ++i) M = std::max({M, f->at(i, 1), f->at(i, 3)});
                    if (M == u) out.push_back(col);
                }
    return out;
}

std::string format_text(const TwoFrieze& f) {
    std::ostringstream out;
    for (int j = 0; j <= f.h + 1; ++j) {
        for (int i = 0; i < f.period; ++i) out << (i ? " " : "") << f.at(i, j);
        out << '\n';
    }
    return out.str();
}

TwoFrieze parse_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<long long>> lines;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<long long> vals;
        std::string tok;
        while (ls >> tok) {
            if (tok == "&" || tok == "\\\\") continue;
            size_t used = 0;
            long long x = 0;
            try {
                x = std::stoll(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) throw std::invalid_argument("non-numeric token '" + tok + "'");
            vals.push_back(x);
        }
        if (!vals.empty()) lines.push_back(vals);
    }
    if (lines.size() < 3) throw std::invalid_argument("expected h+2 lines: border, h interior lines, border");
    const size_t m = lines[0].size();
    for (const auto& l : lines)
        if (l.size() != m) throw std::invalid_argument("all lines must have the same length");
    for (long long x : lines.front())
        if (x != 1) throw std::invalid_argument("first line must be the border of 1s");
    for (long long x : lines.back())
        if (x != 1) throw std::invalid_argument("last line must be the border of 1s");
    TwoFrieze f{static_cast<int>(lines.size()) - 2, static_cast<int>(m), {}};
    for (size_t i = 0; i < m; ++i) {
        std::vector<long long> row;
        for (int j = 1; j <= f.h; ++j) row.push_back(lines[j][i]);
        f.rows.push_back(row);
    }
    // shrink to the minimal period contained in the window
    for (int p = 1; p < f.period; ++p) {
        if (f.period % p != 0) continue;
        bool same = true;
        for (int i = 0; i + p < f.period && same; ++i) same = f.rows[i] == f.rows[i + p];
        if (same) {
            f.rows.resize(p);
            f.period = p;
            break;
        }
    }
    return f;
}

std::string format_json(const TwoFrieze& f) {
    nlohmann::ordered_json j;
    j["h"] = f.h;
    j["column"] = f.column();
    j["period"] = f.period;
    j["entries"] = f.rows;
    if (f.h == 3) j["trichotomy_class"] = trichotomy_class(f);
    else j["trichotomy_class"] = nullptr;
    return j.dump();
}

}  // namespace frieze
