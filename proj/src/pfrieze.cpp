#include "frieze/pfrieze.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace frieze {

SignedTuple phi(int k, int n, int r, int m) {
    const int rp = reduce(r, n);
    return window_plus(rp, k, reduce(static_cast<long long>(m) + rp - 1, n), n);
}

StructureReport verify_slk_structure(const GrassmannPoint& P) {
    const int k = P.k, n = P.n;
    StructureReport rep;
    for (int r = 1; r <= n; ++r)
        if (plucker_sorted(P, window(r, k, n)) == 0) throw GenericityError("consecutive minor vanishes; resample the point");
    for (int r = 1; r <= n; ++r) {
        // k-diamonds: m in [r+k-1, r-1]
        for (int off = k - 1; off <= n - 1; ++off) {
            const int m = reduce(r + off, n);
            auto cols = window(m, k, n);
            auto D = diamond(P, r, cols);
            mpq_class lhs = det_bareiss(D.entries);
            mpq_class rhs = consecutive_product(P, r, k - 1) * plucker_sorted(P, cols);
            ++rep.k_diamonds;
            if (lhs != rhs)
                rep.failures.push_back("k-diamond r=" + std::to_string(r) + " m=" + std::to_string(m) + ": " +
                                       lhs.get_str() + " != " + rhs.get_str());
        }
        // (k+1)-diamonds: m in [r+k, r-2]
        for (int off = k; off <= n - 2; ++off) {
            const int m = reduce(r + off, n);
            auto D = diamond(P, r, window(m, k + 1, n));
            ++rep.k1_diamonds;
            mpq_class d = det_bareiss(D.entries);
            if (d != 0)
                rep.failures.push_back("(k+1)-diamond r=" + std::to_string(r) + " m=" + std::to_string(m) + ": " +
                                       d.get_str());
        }
    }
    return rep;
}

std::optional<std::vector<Subset>> find_noncrossing_cluster(int k, int n) {
    // Candidates in column-major order of frieze positions.
    std::vector<Subset> cand;
    std::set<Subset> seen;
    for (int r = 1; r <= n; ++r)
        for (int m = k + 1; m <= n - 1; ++m) {
            auto st = phi(k, n, r, m);
            if (st.sign == 0 || is_consecutive(st.canonical, n)) continue;
            if (seen.insert(st.canonical).second) cand.push_back(st.canonical);
        }
    const size_t target = static_cast<size_t>((k - 1) * (n - k - 1));
    const size_t N = cand.size();
    std::vector<std::vector<char>> compat(N, std::vector<char>(N));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) compat[i][j] = !crossing(cand[i], cand[j], n);

    std::vector<size_t> chosen;
    auto rec = [&](auto&& self, size_t from) -> bool {
        if (chosen.size() == target) return true;
        for (size_t i = from; i < N; ++i) {
            if (chosen.size() + (N - i) < target) return false;
            bool ok = true;
            for (size_t c : chosen) ok = ok && compat[c][i];
            if (!ok) continue;
            chosen.push_back(i);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    std::vector<Subset> out;
    for (size_t c : chosen) out.push_back(cand[c]);
    return out;
}

std::string subset_label(const Subset& I) {
    std::string s;
    for (size_t i = 0; i < I.size(); ++i) {
        if (i && I.back() >= 10) s += ',';
        s += std::to_string(I[i]);
    }
    return s;
}

std::string render_plucker(int k, int n, int columns) {
    const int rows = n + k - 1;
    size_t wd = 1;
    for (int r = 0; r < columns; ++r)
        for (int m = 1; m <= rows; ++m) {
            auto st = phi(k, n, r, m);
            if (st.sign != 0) wd = std::max(wd, subset_label(st.canonical).size());
        }
    std::ostringstream out;
    out << "k=" << k << " n=" << n << '\n';
    for (int m = rows; m >= 1; --m) {
        // position (r,m) sits at horizontal slot 2r+m
        const size_t unit = (wd + 2) / 2;
        std::string line((2 * columns + rows + 1) * unit + wd, ' ');
        for (int r = 0; r < columns; ++r) {
            auto st = phi(k, n, r, m);
            std::string lab = st.sign == 0 ? "0" : subset_label(st.canonical);
            size_t at = static_cast<size_t>(2 * r + m) * unit;
            line.replace(at, lab.size(), lab);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

}  // namespace frieze
