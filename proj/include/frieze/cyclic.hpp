#pragma once

#include <vector>

namespace frieze {

// Sorted k-subset of [1,n].
using Subset = std::vector<int>;

// Representative of x modulo n in [1,n].
int reduce(long long x, int n);

// (r, r+1, ..., r+len-1) reduced mod n.  Throws std::invalid_argument if len > n.
std::vector<int> window(int r, int len, int n);

struct SignedTuple {
    std::vector<int> raw;
    std::vector<int> canonical;
    int sign = 0;  // 0 iff raw has a repeat
};

SignedTuple sort_signed(const std::vector<int>& t, int n);

// o([r]^{k-1}, m) as a signed tuple.
SignedTuple window_plus(int r, int k, int m, int n);

bool is_consecutive(const Subset& I, int n);
bool is_almost_consecutive(const Subset& I, int n);

// For a non-consecutive almost-consecutive I, the pair (r, m) with I = o([r]^{k-1}, m).
struct WindowForm {
    int r = 0;
    int m = 0;
};
bool decompose(const Subset& I, int n, WindowForm& out);

bool crossing(const Subset& I, const Subset& J, int n);

enum class Openness { closed, open, half_open_left, half_open_right };

struct CyclicInterval {
    int lo;
    int hi;
    Openness openness;
    int n;
    bool contains(int x) const;
};

enum class RectMode { starting, ending };

// Membership of J in the maximal rectangle starting (ending) at anchor.
// Throws std::invalid_argument if anchor is consecutive or J is not almost consecutive.
bool in_rectangle(const Subset& J, const Subset& anchor, RectMode mode, int n);

// Ext-hammock of I = o([r]^{k-1}, m): J lies in the rectangle starting at
// o([r+1]^{k-1}, m+1) or ending at o([r-1]^{k-1}, m-1).
bool in_hammock(const Subset& J, const Subset& I, int n);
bool in_hammock(const Subset& J, WindowForm form, int k, int n);

// Every way of writing J as o([s]^{k-1}, p); for k = 2 or consecutive J there are two.
std::vector<WindowForm> window_forms(const Subset& J, int n);

// All k-subsets of [1,n] in lexicographic order.
std::vector<Subset> all_subsets(int k, int n);

}  // namespace frieze
