#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace frieze {

// 2-frieze of height h: a(i, 0) = a(i, h+1) = 1 and
// a(i, j) = a(i-1, j) a(i+1, j) - a(i, j-1) a(i, j+1) for 1 <= j <= h.
// rows[i][j-1] = a(i, j) for i in [0, period).
struct TwoFrieze {
    int h = 0;
    int period = 0;
    std::vector<std::vector<long long>> rows;

    long long at(long long i, int j) const;
    // a(0, 1), ..., a(2h-1, 1): determines the frieze.
    std::vector<long long> column() const;
    bool operator==(const TwoFrieze&) const = default;
};

struct TwoFriezeReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

TwoFriezeReport validate(const TwoFrieze& f);

struct PropagationFailure {
    std::string reason;
};

// Knits downward from two consecutive full rows (rows 0 and 1 of the result).
std::optional<TwoFrieze> from_rows(int h, const std::vector<long long>& row0, const std::vector<long long>& row1,
                                   PropagationFailure* why = nullptr);
// Height 3 with rows (s, t, u) and (v, w, x).
std::optional<TwoFrieze> from_first_rows(long long s, long long t, long long u, long long v, long long w, long long x,
                                         PropagationFailure* why = nullptr);
// First column a(0, 1) .. a(2h-1, 1); entries to the right are solved from the recurrence.
std::optional<TwoFrieze> from_first_column(int h, const std::vector<long long>& col, PropagationFailure* why = nullptr);

// Height 3 closed forms for rows 2..8 in terms of rows 0 and 1, and for the
// integral column-form entries.  Returns the names of forms that disagree with f.
std::vector<std::string> row_form_mismatches(const TwoFrieze& f);
std::vector<std::string> column_form_mismatches(const TwoFrieze& f);

struct TwoEnumStats {
    std::uint64_t nodes = 0;
};

// All 2-friezes of height h whose first-column entries a(0..2h-1, 1) are <= B,
// one per distinct column (translates are distinct), sorted by column.
std::vector<TwoFrieze> enumerate(int h, long long B, int workers = 1, TwoEnumStats* stats = nullptr);
std::vector<TwoFrieze> enumerate_reference(int h, long long B);

// Height 3: rotate so that u = a(2, 1) is the largest entry of columns 1 and 3
// and report "s=1", "w=1", "s=w=2" or "none".
std::string trichotomy_class(const TwoFrieze& f);
// Columns (2, t, u, v, 2, x) admissible under the s = w = 2 bounds with u maximal.
std::vector<std::vector<long long>> solve_s_w_2();

// Text, transposed: h+2 lines j = 0..h+1 each listing a(0, j) .. a(period-1, j).
// The parser accepts any window that is a multiple of the period and shrinks it.
std::string format_text(const TwoFrieze& f);
TwoFrieze parse_text(const std::string& text);
std::string format_json(const TwoFrieze& f);

}  // namespace frieze
