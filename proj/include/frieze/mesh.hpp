#pragma once

#include "frieze/slk.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace frieze {

// Stable AR quiver of a cluster category of Dynkin type, as a quotient of ZΓ.
// Nodes are numbered as in Bourbaki: A_n is a path; D_n is the path 1..n-1 with
// n attached to n-2; E_n has edges 1-3, 3-4, 4-5, 2-4, 5-6, ...  Arrows of each
// slice point toward the branch node (the middle node for A_n).  The mesh ending
// at (t+1, v) starts at (t, v) and has middle terms (t, u) for v -> u and
// (t+1, u) for u -> v.
struct TranslationQuiver {
    std::string type;
    char family = 'A';
    int rank = 0;
    int branch = 0;
    std::vector<std::vector<int>> adj, out, in;  // 1-based
    std::vector<int> dist;                       // distance to branch
    std::vector<int> order;                      // knitting order within a slice
    // Wrap: (t, v) is identified with (t + shift[v], twist[v]).
    std::vector<int> shift, twist;
    // Fundamental domain: node v occupies slices 0..span[v]-1.
    std::vector<int> span, offset;
    int vertices = 0;

    struct Mesh {
        int A, C;
        std::vector<int> B;
    };
    std::vector<Mesh> meshes;  // meshes[i] starts at vertex i

    int index(long long t, int v) const;
    std::pair<int, int> vertex(int idx) const;  // (t, v)
    int slices() const;                          // max span
    int column(int t, int v) const;              // staggered horizontal position 2t + depth
    std::vector<int> neighbours_of_branch() const;
};

// Types A<n> (n >= 0), D<n> (n >= 4), E6, E7, E8.  Throws std::invalid_argument otherwise.
TranslationQuiver build_quiver(const std::string& type);
// Shared immutable instance.
const TranslationQuiver& quiver(const std::string& type);

struct MeshFrieze {
    std::string type;
    std::vector<long long> values;  // by domain index
    bool operator==(const MeshFrieze&) const = default;
};

struct MeshViolation {
    int mesh;  // index of the starting vertex
    std::string detail;
};

struct MeshReport {
    std::vector<MeshViolation> violations;
    bool ok() const { return violations.empty(); }
};

MeshReport validate(const TranslationQuiver& q, const MeshFrieze& f);

struct KnitFailure {
    int t = 0, v = 0;
    std::string reason;
};

// Propagates slice 0 forward by the mesh rule and checks closure on the quotient.
std::optional<MeshFrieze> knit(const TranslationQuiver& q, const std::vector<long long>& slice0,
                               KnitFailure* why = nullptr);

struct Classification {
    int ones = 0;
    bool unitary = false;
    std::vector<std::pair<int, int>> one_positions;  // (slice, node)
};

// Throws std::invalid_argument on an invalid frieze.
Classification classify(const TranslationQuiver& q, const MeshFrieze& f);

std::vector<long long> slice0(const TranslationQuiver& q, const MeshFrieze& f);

struct MeshEnumStats {
    std::uint64_t nodes = 0;
    std::vector<int> assignment_order;
};

// All mesh friezes with slice-0 values <= B, sorted by slice 0.
std::vector<MeshFrieze> enumerate(const TranslationQuiver& q, long long B, int workers = 1,
                                  MeshEnumStats* stats = nullptr);
// Every frieze with some translate whose slice-0 values are <= B: the translation
// closure of enumerate(q, B).  Converges at much smaller B than enumerate.
std::vector<MeshFrieze> enumerate_orbits(const TranslationQuiver& q, long long B, int workers = 1,
                                         MeshEnumStats* stats = nullptr);
// Serial reference: every slice 0 in [1,B]^rank is knitted.
std::vector<MeshFrieze> enumerate_reference(const TranslationQuiver& q, long long B);

// Fills unknown vertices from single-unknown meshes.  Returns false if a value is
// not a positive integer or some vertex stays undetermined.
bool complete(const TranslationQuiver& q, std::vector<std::optional<long long>>& vals, std::string* why = nullptr);

// SL_3 grid of width 2, 3, 4 to a mesh frieze of type D4, E6, E8.
MeshFrieze convert_sl3(const FriezeGrid& grid);
// Inverse: reads the grid off the designated orbits.
FriezeGrid mesh_to_sl3(const MeshFrieze& f);

// Type A mesh friezes and Conway–Coxeter friezes of the (n+3)-gon.
FriezeGrid to_sl2_grid(const TranslationQuiver& q, const MeshFrieze& f);
MeshFrieze from_sl2_grid(const FriezeGrid& grid);
// The polygon diagonal {a, b} carried by a vertex of an A_n quiver.
std::pair<int, int> diagonal_of(const TranslationQuiver& q, int idx);
// Cuts along the diagonal of a vertex with value 1; returns the two sub-polygon friezes.
std::pair<MeshFrieze, MeshFrieze> restrict_typeA(const TranslationQuiver& q, const MeshFrieze& f, int idx);

// Image of f under a node permutation composed with a shift by `slices`.
MeshFrieze transform(const TranslationQuiver& q, const MeshFrieze& f, const std::vector<int>& perm, int slices);
MeshFrieze translate(const TranslationQuiver& q, const MeshFrieze& f, int slices);

std::string format_mesh_json(const TranslationQuiver& q, const MeshFrieze& f);
MeshFrieze parse_mesh_json(const std::string& text);
// Staggered text layout: one row per node, value (t, v) at column 2t + depth(v).
std::string render_staggered(const TranslationQuiver& q, const MeshFrieze& f);

// Fixture format, one row per node in staggered picture coordinates:
//   type D5
//   node 1 col 0: 2 3 1 3 2
// Values sit at columns col, col+2, ...; every vertex of the quotient must be covered,
// repeated vertices must agree.  Throws std::invalid_argument otherwise.
MeshFrieze parse_staggered(const std::string& text);

}  // namespace frieze
