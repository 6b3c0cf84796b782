#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace frieze {

using QMatrix = std::vector<std::vector<mpq_class>>;
using ZMatrix = std::vector<std::vector<mpz_class>>;

// Fraction-free Gaussian elimination.
mpz_class det_bareiss(ZMatrix a);
mpq_class det_bareiss(const QMatrix& a);
// Cofactor expansion along the first row; exponential, used as an oracle.
mpq_class det_laplace(const QMatrix& a);

struct GrassmannPoint {
    int k = 0;
    int n = 0;
    QMatrix entries;  // k x n
};

// Vandermonde point: column j is (1, t_j, ..., t_j^{k-1}).
GrassmannPoint vandermonde_point(int k, const std::vector<long long>& t);
// Without a seed t_j = j-1; with a seed, sorted distinct random t_j in [1,1000].
GrassmannPoint sample_point(int k, int n, std::optional<std::uint64_t> seed = std::nullopt);

// Signed Plücker coordinate of an index tuple (entries reduced mod n).
mpq_class plucker(const GrassmannPoint& P, const std::vector<int>& t);
// Coordinate of the sorted subset o(t); zero on a repeat.
mpq_class plucker_sorted(const GrassmannPoint& P, const std::vector<int>& t);

// Sum_l (-1)^l p_{I j_l} p_{J \ j_l}; I has k-1 entries, J has k+1.
mpq_class plucker_relation_value(const GrassmannPoint& P, const std::vector<int>& I, const std::vector<int>& J);
bool check_plucker_relation(const GrassmannPoint& P, const std::vector<int>& I, const std::vector<int>& J);

struct DiamondMatrix {
    int s = 0;
    int r = 0;
    std::vector<int> m;
    QMatrix entries;  // a_ij = p_{o([r+i]^{k-1}, m_j)}
};

DiamondMatrix diamond(const GrassmannPoint& P, int r, const std::vector<int>& m);

struct ColumnTupleConditions {
    bool c1_holds = false;  // some rotation of m is strictly increasing
    bool c2_holds = false;  // r+k-2 outside the half-open cyclic interval [m_1, m_s)
};

ColumnTupleConditions column_conditions(int k, int n, int r, const std::vector<int>& m);

struct PreconditionViolation : std::domain_error {
    using std::domain_error::domain_error;
};

// Right-hand side of the diamond determinant formula.
mpq_class det_formula_rhs(const GrassmannPoint& P, int r, const std::vector<int>& m);

// det A_{m;r} == prod_{l<s-1} p_{o([r+l]^k)} * p_{o([r+s-1]^{k-s}, m)}.
// Throws PreconditionViolation naming (c1) or (c2); std::invalid_argument if s > k.
bool verify_det_formula(const GrassmannPoint& P, int r, const std::vector<int>& m);

// Product of the consecutive coordinates p_{o([r+l]^k)} for l = 0..count-1.
mpq_class consecutive_product(const GrassmannPoint& P, int r, int count);

}  // namespace frieze
