#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace frieze {

// Periodic SL_k frieze.  Position (c, R) with c mod n and R in [1, n+k-1]:
// rows 1..k-1 and n+1..n+k-1 are 0, rows k and n are 1, rows k+1..n-1 carry
// the entries.  Row R is drawn at height R, position (c, R) at horizontal 2c+R.
struct FriezeGrid {
    int k = 0;
    int w = 0;
    int n = 0;
    // rows[i] is row R = n-1-i (top first); rows[i][c] for c in [0, n).
    std::vector<std::vector<long long>> rows;

    FriezeGrid() = default;
    FriezeGrid(int k_, int w_);

    long long at(long long c, int R) const;
    long long& cell(long long c, int R);
    int ones() const;
    bool operator==(const FriezeGrid&) const = default;
    bool operator<(const FriezeGrid& o) const { return rows < o.rows; }
};

struct DiamondFlag {
    int size;  // k or k+1
    int c;     // top-left corner column
    int R0;    // row of the horizontal diagonal through the diamond
    std::string det;
};

struct ValidationReport {
    std::vector<DiamondFlag> flags;
    std::vector<std::pair<int, int>> nonpositive;  // (c, R)
    bool ok() const { return flags.empty() && nonpositive.empty(); }
};

// Diamond D[i][j] = F(c+i, R0+j-i); k-diamonds for R0 in [k,n], (k+1)-diamonds for R0 in [k+1,n-1].
ValidationReport validate(const FriezeGrid& F, bool tame);

struct Triangulation {
    int n = 0;
    std::vector<std::pair<int, int>> diagonals;  // vertices 1..n, a < b
};

std::vector<Triangulation> all_triangulations(int n);
std::vector<int> quiddity(const Triangulation& T);  // a_1..a_n
// Conway–Coxeter frieze: F(c, R) is the value of the diagonal {c, c+R-1}.
FriezeGrid from_triangulation(const Triangulation& T);
FriezeGrid sl2_from_quiddity(const std::vector<long long>& a);
// Quiddity read off row 3: a_{c+1} = F(c, 3).
std::vector<long long> quiddity_of(const FriezeGrid& F);

std::vector<FriezeGrid> enumerate_sl2(int w, long long B);

// SL_3 boundary data: x_1..x_w on the diagonal (j, n-1-j), j = 0..w-1,
// and x_{w+1}..x_{2w} on the column (n-3, R), R = 4..n-1.
std::vector<long long> sl3_boundary(const FriezeGrid& F);

struct BoundaryFailure {
    std::string reason;
};

// The unique tame SL_3 frieze with the given boundary, if it is integral and positive.
std::optional<FriezeGrid> sl3_from_boundary(int w, const std::vector<long long>& x, BoundaryFailure* why = nullptr);

struct Sl3Stats {
    std::uint64_t nodes = 0;
};

std::vector<FriezeGrid> enumerate_sl3(int w, long long B, int workers = 1, Sl3Stats* stats = nullptr);
// Serial reference: plain loops over the boundary with a full reconstruction per leaf.
std::vector<FriezeGrid> enumerate_sl3_reference(int w, long long B);

std::string format_grid(const FriezeGrid& F);
FriezeGrid parse_grid(const std::string& text);

}  // namespace frieze
