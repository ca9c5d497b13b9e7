// SPDX-License-Identifier: Apache-2.0
#include "codemeas/tables.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <sstream>

namespace codemeas {

namespace {

// published reference values: n_{2,t,M} for t = 1..3
const std::map<int, std::map<long, int>> kLengthReference = {
    {1, {{2, 3}, {4, 6}, {6, 7}, {8, 7}, {12, 8}, {16, 8}, {20, 9}, {38, 10}, {39, 10}, {40, 10}}},
    {2, {{2, 5}, {4, 9}, {6, 10}, {8, 11}, {12, 11}, {16, 12}, {20, 12}, {38, 14}, {39, 14}, {40, 14}}},
    {3, {{2, 7}, {4, 12}, {6, 14}, {8, 14}, {12, 15}, {16, 15}, {20, 16}, {38, 18}, {39, 18}, {40, 18}}},
};

// published reference values for the binomial table (t = 1): k -> n
const std::map<int, int> kBinomialReference = {{1, 7}, {2, 7}, {3, 8}, {4, 8}, {5, 9}, {6, 9}, {7, 10}, {8, 10}};

TableCell make_cell(int q, int t, long M, Convention conv, const SearchBudget& budget,
                    std::optional<int> reference) {
    TableCell cell;
    cell.q = q;
    cell.t = t;
    cell.M = M;
    cell.convention = conv;
    cell.result = min_length(q, M, convention_distance(conv, t), budget);
    cell.reference_n = reference;
    cell.status = cell.result.exact ? "exact" : "bracket";
    if (!reference) {
        cell.annotation = "";
    } else if (cell.result.exact) {
        cell.annotation = (cell.result.n_upper == *reference) ? "matches" : "differs";
    } else {
        const bool contains = cell.result.n_lower <= *reference && *reference <= cell.result.n_upper;
        cell.annotation = contains ? "bracket-contains" : "bracket-misses";
    }
    return cell;
}

}  // namespace

std::vector<TableCell> length_table(const SearchBudget& budget) {
    std::vector<TableCell> cells;
    for (const auto& [t, row] : kLengthReference) {
        for (const auto& [M, reference] : row) {
            for (Convention conv : {Convention::strict, Convention::even}) {
                cells.push_back(make_cell(2, t, M, conv, budget, reference));
            }
        }
    }
    return cells;
}

std::vector<TableCell> binomial_table(const SearchBudget& budget) {
    std::vector<TableCell> cells;
    const int t = 1;
    for (const auto& [k, reference] : kBinomialReference) {
        const long bound = 3L * k + 2;  // |K|+1 with |K| = g0+g1+k+1 = 3k+1
        for (Convention conv : {Convention::strict, Convention::even}) {
            TableCell cell = make_cell(2, t, bound, conv, budget, reference);
            cell.k = k;
            cell.povm_bound = bound;
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

std::string cells_to_csv(const std::vector<TableCell>& cells) {
    std::ostringstream out;
    out << "# schema_version=1\n";
    out << "q,t,k,povm_bound,M,convention,n_lower,n_upper,exact,witness_available,reference_n,annotation\n";
    for (const TableCell& c : cells) {
        out << c.q << ',' << c.t << ',';
        if (c.k) out << *c.k;
        out << ',';
        if (c.povm_bound) out << *c.povm_bound;
        out << ',' << c.M << ',' << convention_name(c.convention) << ',' << c.result.n_lower << ','
            << c.result.n_upper << ',' << (c.result.exact ? 1 : 0) << ',' << (c.result.witness_available ? 1 : 0)
            << ',';
        if (c.reference_n) out << *c.reference_n;
        out << ',' << c.annotation << '\n';
    }
    return out.str();
}

nlohmann::json cells_to_json(const std::vector<TableCell>& cells) {
    nlohmann::json rows = nlohmann::json::array();
    for (const TableCell& c : cells) {
        nlohmann::json row;
        row["q"] = c.q;
        row["t"] = c.t;
        if (c.k) row["k"] = *c.k;
        if (c.povm_bound) row["povm_bound"] = *c.povm_bound;
        row["M"] = c.M;
        row["convention"] = convention_name(c.convention);
        row["n_lower"] = c.result.n_lower;
        row["n_upper"] = c.result.n_upper;
        row["exact"] = c.result.exact;
        row["witness_available"] = c.result.witness_available;
        if (c.reference_n) row["reference_n"] = *c.reference_n;
        row["annotation"] = c.annotation;
        rows.push_back(std::move(row));
    }
    nlohmann::json j;
    j["schema_version"] = 1;
    j["rows"] = std::move(rows);
    return j;
}

}  // namespace codemeas
