#include "frieze/grassmann.hpp"

#include "frieze/cyclic.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace frieze {

mpz_class det_bareiss(ZMatrix a) {
    const size_t s = a.size();
    if (s == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (size_t p = 0; p + 1 < s; ++p) {
        if (a[p][p] == 0) {
            size_t q = p + 1;
            while (q < s && a[q][p] == 0) ++q;
            if (q == s) return 0;
            std::swap(a[p], a[q]);
            sign = -sign;
        }
        for (size_t i = p + 1; i < s; ++i) {
            for (size_t j = p + 1; j < s; ++j) {
                a[i][j] = a[i][j] * a[p][p] - a[i][p] * a[p][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[p][p];
    }
    return sign * a[s - 1][s - 1];
}

mpq_class det_bareiss(const QMatrix& a) {
    // Clear denominators row by row.
    ZMatrix z(a.size());
    mpq_class scale = 1;
    for (size_t i = 0; i < a.size(); ++i) {
        mpz_class l = 1;
        for (const auto& x : a[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        for (const auto& x : a[i]) z[i].push_back(mpz_class(x.get_num() * (l / x.get_den())));
        scale *= l;
    }
    mpq_class d(det_bareiss(std::move(z)));
    d /= scale;
    return d;
}

mpq_class det_laplace(const QMatrix& a) {
    const size_t s = a.size();
    if (s == 0) return 1;
    if (s == 1) return a[0][0];
    mpq_class total = 0;
    for (size_t j = 0; j < s; ++j) {
        if (a[0][j] == 0) continue;
        QMatrix minor;
        for (size_t i = 1; i < s; ++i) {
            std::vector<mpq_class> row;
            for (size_t c = 0; c < s; ++c)
                if (c != j) row.push_back(a[i][c]);
            minor.push_back(std::move(row));
        }
        mpq_class term = a[0][j] * det_laplace(minor);
        if (j % 2) total -= term;
        else total += term;
    }
    return total;
}

GrassmannPoint vandermonde_point(int k, const std::vector<long long>& t) {
    GrassmannPoint P;
    P.k = k;
    P.n = static_cast<int>(t.size());
    P.entries.assign(k, std::vector<mpq_class>(P.n));
    for (int j = 0; j < P.n; ++j) {
        mpz_class pw = 1;
        for (int i = 0; i < k; ++i) {
            P.entries[i][j] = pw;
            pw *= static_cast<long>(t[j]);
        }
    }
    return P;
}

GrassmannPoint sample_point(int k, int n, std::optional<std::uint64_t> seed) {
    std::vector<long long> t(n);
    if (!seed) {
        for (int j = 0; j < n; ++j) t[j] = j;
        return vandermonde_point(k, t);
    }
    std::mt19937_64 rng(*seed);
    std::uniform_int_distribution<long long> dist(1, 1000);
    std::set<long long> picked;
    while (static_cast<int>(picked.size()) < n) picked.insert(dist(rng));
    std::copy(picked.begin(), picked.end(), t.begin());
    return vandermonde_point(k, t);
}

namespace {

mpq_class minor_on(const GrassmannPoint& P, const std::vector<int>& cols) {
    QMatrix m(P.k, std::vector<mpq_class>(P.k));
    for (int i = 0; i < P.k; ++i)
        for (int j = 0; j < P.k; ++j) m[i][j] = P.entries[i][cols[j] - 1];
    return det_bareiss(m);
}

}  // namespace

mpq_class plucker(const GrassmannPoint& P, const std::vector<int>& t) {
    auto st = sort_signed(t, P.n);
    if (st.sign == 0) return 0;
    mpq_class v = minor_on(P, st.canonical);
    return st.sign < 0 ? mpq_class(-v) : v;
}

mpq_class plucker_sorted(const GrassmannPoint& P, const std::vector<int>& t) {
    auto st = sort_signed(t, P.n);
    if (st.sign == 0) return 0;
    return minor_on(P, st.canonical);
}

mpq_class plucker_relation_value(const GrassmannPoint& P, const std::vector<int>& I, const std::vector<int>& J) {
    mpq_class sum = 0;
    for (size_t l = 0; l < J.size(); ++l) {
        std::vector<int> left = I;
        left.push_back(J[l]);
        std::vector<int> right;
        for (size_t i = 0; i < J.size(); ++i)
            if (i != l) right.push_back(J[i]);
        mpq_class term = plucker(P, left) * plucker(P, right);
        if (l % 2) sum -= term;
        else sum += term;
    }
    return sum;
}

bool check_plucker_relation(const GrassmannPoint& P, const std::vector<int>& I, const std::vector<int>& J) {
    return plucker_relation_value(P, I, J) == 0;
}

DiamondMatrix diamond(const GrassmannPoint& P, int r, const std::vector<int>& m) {
    DiamondMatrix D;
    D.s = static_cast<int>(m.size());
    D.r = reduce(r, P.n);
    D.m = m;
    D.entries.assign(D.s, std::vector<mpq_class>(D.s));
    for (int i = 0; i < D.s; ++i) {
        auto rows = window(r + i, P.k - 1, P.n);
        for (int j = 0; j < D.s; ++j) {
            auto t = rows;
            t.push_back(m[j]);
            D.entries[i][j] = plucker_sorted(P, t);
        }
    }
    return D;
}

ColumnTupleConditions column_conditions(int k, int n, int r, const std::vector<int>& m) {
    ColumnTupleConditions c;
    const size_t s = m.size();
    std::vector<int> red;
    for (int x : m) red.push_back(reduce(x, n));
    for (size_t b = 0; b < s && !c.c1_holds; ++b) {
        bool inc = true;
        for (size_t i = 0; i + 1 < s && inc; ++i) inc = red[(b + i) % s] < red[(b + i + 1) % s];
        c.c1_holds = inc;
    }
    CyclicInterval iv{red.front(), red.back(), Openness::half_open_right, n};
    c.c2_holds = !iv.contains(reduce(r + k - 2, n));
    return c;
}

mpq_class consecutive_product(const GrassmannPoint& P, int r, int count) {
    mpq_class prod = 1;
    for (int l = 0; l < count; ++l) prod *= plucker_sorted(P, window(r + l, P.k, P.n));
    return prod;
}

mpq_class det_formula_rhs(const GrassmannPoint& P, int r, const std::vector<int>& m) {
    const int s = static_cast<int>(m.size());
    auto t = window(r + s - 1, P.k - s, P.n);
    t.insert(t.end(), m.begin(), m.end());
    return consecutive_product(P, r, s - 1) * plucker_sorted(P, t);
}

bool verify_det_formula(const GrassmannPoint& P, int r, const std::vector<int>& m) {
    const int s = static_cast<int>(m.size());
    if (s < 1 || s > P.k) throw std::invalid_argument("column tuple length must lie in [1,k]");
    std::set<int> distinct;
    for (int x : m) distinct.insert(reduce(x, P.n));
    if (static_cast<int>(distinct.size()) < s) return det_bareiss(diamond(P, r, m).entries) == 0;
    auto c = column_conditions(P.k, P.n, r, m);
    if (!c.c1_holds) throw PreconditionViolation("(c1) violated: columns not cyclically ordered");
    if (!c.c2_holds) throw PreconditionViolation("(c2) violated: r+k-2 lies in [m_1, m_s)");
    return det_bareiss(diamond(P, r, m).entries) == det_formula_rhs(P, r, m);
}

}  // namespace frieze
