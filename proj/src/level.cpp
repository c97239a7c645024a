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

#include <hrt/level.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <hrt/bounds.hpp>
#include <hrt/macaulay.hpp>

namespace hrt
{

namespace
{

std::size_t at(int i)
{
    return static_cast<std::size_t>(i);
}

Json integers_json(const std::vector<Integer> &v)
{
    Json out = Json::array();
    for (const auto &x : v) {
        out.push_back(integer_json(x));
    }
    return out;
}

std::vector<Integer> parse_list(const std::string &text, const std::string &field)
{
    std::vector<Integer> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t\r");
        const auto e = item.find_last_not_of(" \t\r");
        if (b == std::string::npos) {
            throw input_error(field, "empty entry");
        }
        const std::string token = item.substr(b, e - b + 1);
        if (!std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); })) {
            throw input_error(field, "'" + token + "' is not a non-negative integer");
        }
        out.emplace_back(token);
    }
    if (out.empty()) {
        throw input_error(field, "empty list");
    }
    return out;
}

} // namespace

LevelHilbert::LevelHilbert(std::vector<Integer> h, int n) : m_h(std::move(h)), m_n(n)
{
    if (n < 1) {
        throw std::invalid_argument("level Hilbert function needs n >= 1");
    }
    if (m_h.size() < 2) {
        throw std::invalid_argument("level Hilbert function needs socle degree c >= 1");
    }
    for (const auto &x : m_h) {
        if (x < 1) {
            throw std::invalid_argument("level Hilbert function entries must be >= 1");
        }
    }
}

std::vector<Integer> compute_hG(const LevelHilbert &lh)
{
    std::vector<Integer> out;
    for (int i = 0; i < lh.socle_degree(); ++i) {
        const auto &next = lh[at(i + 1)];
        out.push_back(next - kappa(next, i + 1));
    }
    return out;
}

std::vector<Integer> compute_hGM(const LevelHilbert &lh)
{
    const int c = lh.socle_degree();
    std::vector<Integer> out;
    for (int i = 0; i < c; ++i) {
        out.push_back(lh[at(i)] - braced_bound(lh[at(i)], c - i, lh.variables()));
    }
    return out;
}

PropositionConditions proposition_conditions(const LevelHilbert &lh, int i)
{
    const int c = lh.socle_degree();
    if (i < 0 || i > c - 1) {
        throw std::out_of_range("proposition index " + std::to_string(i) + " outside 0.." + std::to_string(c - 1));
    }
    PropositionConditions pc;
    pc.index = i;
    pc.position_ok = i - 1 <= c - i;
    pc.plateau = lh[at(i)] == lh[at(i + 1)];
    pc.below_capacity = monomial_count(lh.variables(), c - i) > lh[at(i + 1)];
    pc.all = pc.position_ok && pc.plateau && pc.below_capacity;
    if (pc.all) {
        const auto &h = lh[at(i)];
        const Integer gm = h - braced_bound(h, c - i, lh.variables());
        const auto &next = lh[at(i + 1)];
        const Integer g = next - kappa(next, i + 1);
        pc.conclusion_holds = gm >= g;
    }
    return pc;
}

LevelComparison compare_bounds(const LevelHilbert &lh)
{
    LevelComparison cmp;
    cmp.h = lh.values();
    cmp.n = lh.variables();
    cmp.hG = compute_hG(lh);
    cmp.hGM = compute_hGM(lh);
    for (int i = 0; i < lh.socle_degree(); ++i) {
        if (cmp.hGM[at(i)] > cmp.hG[at(i)]) {
            cmp.win_positions.push_back(i + 1);
        }
        cmp.conditions.push_back(proposition_conditions(lh, i));
    }
    return cmp;
}

Json comparison_to_json(const LevelComparison &cmp)
{
    Json conds = Json::array();
    for (const auto &pc : cmp.conditions) {
        conds.push_back(Json{{"i", pc.index},
                             {"position_ok", pc.position_ok},
                             {"plateau", pc.plateau},
                             {"below_capacity", pc.below_capacity},
                             {"all", pc.all},
                             {"conclusion_holds", pc.conclusion_holds}});
    }
    Json doc;
    doc["n"] = cmp.n;
    doc["h"] = integers_json(cmp.h);
    doc["hGM"] = integers_json(cmp.hGM);
    doc["hG"] = integers_json(cmp.hG);
    doc["positions"] = cmp.win_positions;
    doc["conditions"] = std::move(conds);
    return doc;
}

std::vector<TableRow> parse_table(std::istream &in)
{
    std::vector<TableRow> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        const std::string where = "line " + std::to_string(lineno);
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ';')) {
            fields.push_back(f);
        }
        if (fields.size() != 4) {
            throw input_error(where, "expected 4 ';'-separated fields, got " + std::to_string(fields.size()));
        }
        TableRow row;
        const auto pos = parse_list(fields[0], where + " position");
        if (pos.size() != 1 || pos[0] > 1000) {
            throw input_error(where + " position", "expected a single small integer");
        }
        row.position = static_cast<int>(pos[0]);
        row.h = parse_list(fields[1], where + " h");
        row.hGM = parse_list(fields[2], where + " hGM");
        row.hG = parse_list(fields[3], where + " hG");
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TableRow> read_table_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw input_error("--data", "cannot read file '" + path + "'");
    }
    return parse_table(in);
}

bool TableReport::passed() const noexcept
{
    return std::all_of(rows.begin(), rows.end(), [](const RowCheck &r) { return r.passed(); });
}

TableReport reproduce_table(const std::vector<TableRow> &rows, int n)
{
    TableReport report;
    for (const auto &row : rows) {
        const auto cmp = compare_bounds(LevelHilbert(row.h, n));
        RowCheck check;
        check.row = row;
        check.hG = cmp.hG;
        check.hGM = cmp.hGM;
        check.win_positions = cmp.win_positions;
        check.hG_matches = cmp.hG == row.hG;
        check.hGM_matches = cmp.hGM == row.hGM;
        check.position_wins = std::find(cmp.win_positions.begin(), cmp.win_positions.end(), row.position) !=
                              cmp.win_positions.end();
        report.rows.push_back(std::move(check));
    }
    return report;
}

Json table_report_to_json(const TableReport &report)
{
    Json rows = Json::array();
    std::size_t passed = 0;
    for (const auto &r : report.rows) {
        passed += r.passed() ? 1 : 0;
        rows.push_back(Json{{"position", r.row.position},
                            {"h", integers_json(r.row.h)},
                            {"hGM", integers_json(r.hGM)},
                            {"hG", integers_json(r.hG)},
                            {"positions", r.win_positions},
                            {"hGM_matches", r.hGM_matches},
                            {"hG_matches", r.hG_matches},
                            {"position_wins", r.position_wins},
                            {"passed", r.passed()}});
    }
    Json doc;
    doc["rows"] = report.rows.size();
    doc["passed"] = passed;
    doc["ok"] = report.passed();
    doc["details"] = std::move(rows);
    return doc;
}

std::string default_table_path()
{
#ifdef HRT_DEFAULT_TABLE_PATH
    return HRT_DEFAULT_TABLE_PATH;
#else
    return "data/table1.txt";
#endif
}

} // namespace hrt
