#include "frieze/cyclic.hpp"

#include <algorithm>
#include <stdexcept>

namespace frieze {

int reduce(long long x, int n) {
    long long r = x % n;
    if (r <= 0) r += n;
    return static_cast<int>(r);
}

std::vector<int> window(int r, int len, int n) {
    if (len > n) throw std::invalid_argument("window longer than modulus");
    std::vector<int> out(len);
    for (int i = 0; i < len; ++i) out[i] = reduce(static_cast<long long>(r) + i, n);
    return out;
}

SignedTuple sort_signed(const std::vector<int>& t, int n) {
    SignedTuple st;
    st.raw.reserve(t.size());
    for (int x : t) st.raw.push_back(reduce(x, n));
    int inversions = 0;
    bool repeat = false;
    for (size_t i = 0; i < st.raw.size(); ++i)
        for (size_t j = i + 1; j < st.raw.size(); ++j) {
            if (st.raw[i] == st.raw[j]) repeat = true;
            else if (st.raw[i] > st.raw[j]) ++inversions;
        }
    st.canonical = st.raw;
    std::sort(st.canonical.begin(), st.canonical.end());
    st.sign = repeat ? 0 : (inversions % 2 ? -1 : 1);
    return st;
}

SignedTuple window_plus(int r, int k, int m, int n) {
    auto t = window(r, k - 1, n);
    t.push_back(m);
    return sort_signed(t, n);
}

namespace {

bool contains(const Subset& I, int x) { return std::binary_search(I.begin(), I.end(), x); }

// offset of x from a going forward around the circle, in [0,n)
int fwd(int a, int x, int n) { return ((x - a) % n + n) % n; }

}  // namespace

bool is_consecutive(const Subset& I, int n) {
    const int k = static_cast<int>(I.size());
    for (int r : I) {
        bool ok = true;
        for (int i = 1; i < k && ok; ++i) ok = contains(I, reduce(r + i, n));
        if (ok) return true;
    }
    return false;
}

bool is_almost_consecutive(const Subset& I, int n) {
    const int k = static_cast<int>(I.size());
    if (k <= 2) return true;
    for (int r : I) {
        bool ok = true;
        for (int i = 1; i < k - 1 && ok; ++i) ok = contains(I, reduce(r + i, n));
        if (ok) return true;
    }
    return false;
}

bool decompose(const Subset& I, int n, WindowForm& out) {
    const int k = static_cast<int>(I.size());
    if (is_consecutive(I, n)) return false;
    for (int r : I) {
        bool ok = true;
        for (int i = 1; i < k - 1 && ok; ++i) ok = contains(I, reduce(r + i, n));
        if (!ok) continue;
        for (int m : I) {
            if (fwd(r, m, n) >= k - 1) {
                out = {r, m};
                return true;
            }
        }
    }
    return false;
}

bool crossing(const Subset& I, const Subset& J, int n) {
    // Walk the circle over the symmetric difference and count label changes.
    std::vector<int> labels;
    for (int x = 1; x <= n; ++x) {
        bool inI = contains(I, x), inJ = contains(J, x);
        if (inI != inJ) labels.push_back(inI ? 0 : 1);
    }
    int changes = 0;
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != labels[(i + 1) % labels.size()]) ++changes;
    return changes >= 4;
}

bool CyclicInterval::contains(int x) const {
    const int d = fwd(lo, reduce(x, n), n);
    const int len = fwd(lo, hi, n);
    switch (openness) {
        case Openness::closed: return d <= len;
        case Openness::open: return d > 0 && d < len;
        case Openness::half_open_left: return d > 0 && d <= len;
        case Openness::half_open_right: return d < len;
    }
    return false;
}

std::vector<WindowForm> window_forms(const Subset& J, int n) {
    const int k = static_cast<int>(J.size());
    std::vector<WindowForm> forms;
    for (int s : J) {
        bool ok = true;
        for (int i = 1; i < k - 1 && ok; ++i) ok = contains(J, reduce(s + i, n));
        if (!ok) continue;
        for (int p : J)
            if (fwd(s, p, n) >= k - 1) forms.push_back({s, p});
    }
    return forms;
}

namespace {

bool rect_member(const std::vector<WindowForm>& forms, WindowForm a, RectMode mode, int k, int n) {
    for (const auto& f : forms) {
        bool in_s, in_p;
        if (mode == RectMode::starting) {
            in_s = CyclicInterval{a.r, reduce(a.m - k, n), Openness::closed, n}.contains(f.r);
            in_p = CyclicInterval{a.m, reduce(a.r - 2, n), Openness::closed, n}.contains(f.m);
        } else {
            in_s = CyclicInterval{reduce(a.m + 2, n), a.r, Openness::closed, n}.contains(f.r);
            in_p = CyclicInterval{reduce(a.r + k, n), a.m, Openness::closed, n}.contains(f.m);
        }
        if (in_s && in_p) return true;
    }
    return false;
}

}  // namespace

bool in_rectangle(const Subset& J, const Subset& anchor, RectMode mode, int n) {
    WindowForm a;
    if (!decompose(anchor, n, a)) throw std::invalid_argument("anchor must be non-consecutive and almost consecutive");
    if (!is_almost_consecutive(J, n)) throw std::invalid_argument("subset is not almost consecutive");
    return rect_member(window_forms(J, n), a, mode, static_cast<int>(anchor.size()), n);
}

bool in_hammock(const Subset& J, const Subset& I, int n) {
    WindowForm a;
    if (!decompose(I, n, a)) throw std::invalid_argument("subset must be non-consecutive and almost consecutive");
    return in_hammock(J, a, static_cast<int>(I.size()), n);
}

bool in_hammock(const Subset& J, WindowForm a, int k, int n) {
    auto forms = window_forms(J, n);
    WindowForm start{reduce(a.r + 1, n), reduce(a.m + 1, n)};
    WindowForm end{reduce(a.r - 1, n), reduce(a.m - 1, n)};
    return rect_member(forms, start, RectMode::starting, k, n) || rect_member(forms, end, RectMode::ending, k, n);
}

std::vector<Subset> all_subsets(int k, int n) {
    std::vector<Subset> out;
    Subset cur;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int x = from; x <= n; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace frieze
