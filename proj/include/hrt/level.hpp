// Copyright 2026 The hrt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HRT_LEVEL_HPP
#define HRT_LEVEL_HPP

#include <istream>
#include <string>
#include <vector>

#include <hrt/integer.hpp>
#include <hrt/json.hpp>

namespace hrt
{

/// Hilbert function (h_0, ..., h_c) of an artinian algebra over
/// k[x_1..x_n].  Taken at face value: nothing checks that a level algebra
/// with this Hilbert function exists.
class LevelHilbert
{
public:
    /// Throws std::invalid_argument unless every entry is >= 1, c >= 1 and
    /// n >= 1.
    explicit LevelHilbert(std::vector<Integer> h, int n = 3);

    const std::vector<Integer> &values() const noexcept
    {
        return m_h;
    }
    int variables() const noexcept
    {
        return m_n;
    }
    int socle_degree() const noexcept
    {
        return static_cast<int>(m_h.size()) - 1;
    }
    const Integer &operator[](std::size_t i) const
    {
        return m_h[i];
    }

private:
    std::vector<Integer> m_h;
    int m_n;
};

/// h^G_i = h_{i+1} - kappa(h_{i+1}, i+1) for 0 <= i < c.
std::vector<Integer> compute_hG(const LevelHilbert &lh);

/// h^GM_i = h_i - braced_bound(h_i, c-i, n) for 0 <= i < c.
std::vector<Integer> compute_hGM(const LevelHilbert &lh);

/// The three sufficient conditions for h^GM_i >= h^G_i at index i.
struct PropositionConditions {
    int index = 0;
    bool position_ok = false;    // i - 1 <= c - i
    bool plateau = false;        // h_i == h_{i+1}
    bool below_capacity = false; // s_{c-i} > h_{i+1}
    bool all = false;
    /// False only when all three hold and h^GM_i < h^G_i, which would
    /// contradict the proposition.
    bool conclusion_holds = true;
};

/// Throws std::out_of_range unless 0 <= i <= c - 1.
PropositionConditions proposition_conditions(const LevelHilbert &lh, int i);

struct LevelComparison {
    std::vector<Integer> h;
    int n = 3;
    std::vector<Integer> hG;
    std::vector<Integer> hGM;
    /// 1-based: position p means h^GM_{p-1} > h^G_{p-1}.
    std::vector<int> win_positions;
    std::vector<PropositionConditions> conditions;
};

LevelComparison compare_bounds(const LevelHilbert &lh);

Json comparison_to_json(const LevelComparison &cmp);

/// One stored row: `position;h;hGM;hG`.
struct TableRow {
    int position = 0;
    std::vector<Integer> h;
    std::vector<Integer> hGM;
    std::vector<Integer> hG;
};

/// Parses semicolon-separated rows; blank lines and lines starting with
/// '#' are skipped.  Throws input_error naming the line and field.
std::vector<TableRow> parse_table(std::istream &in);
std::vector<TableRow> read_table_file(const std::string &path);

struct RowCheck {
    TableRow row;
    std::vector<Integer> hG;
    std::vector<Integer> hGM;
    std::vector<int> win_positions;
    bool hG_matches = false;
    bool hGM_matches = false;
    bool position_wins = false;

    bool passed() const noexcept
    {
        return hG_matches && hGM_matches && position_wins;
    }
};

struct TableReport {
    std::vector<RowCheck> rows;

    bool passed() const noexcept;
};

/// Recomputes both columns of every row (n variables) and checks the stored
/// position against the computed win set.
TableReport reproduce_table(const std::vector<TableRow> &rows, int n = 3);

Json table_report_to_json(const TableReport &report);

/// Location of the bundled table data.
std::string default_table_path();

} // namespace hrt

#endif
