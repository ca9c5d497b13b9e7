// SPDX-License-Identifier: Apache-2.0
#ifndef CODEMEAS_TABLES_HPP
#define CODEMEAS_TABLES_HPP

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>
#include <vector>

#include "codemeas/combinatorics.hpp"

namespace codemeas {

/// One cell of a minimum-observable-count table, under one distance
/// convention, annotated against the published reference value when one
/// exists. `status` is "exact" or "bracket"; `annotation` is "matches",
/// "differs" or "bracket-contains"/"bracket-misses" relative to the
/// reference.
struct TableCell {
    int q = 2;
    int t = 0;
    long M = 0;
    std::optional<int> k;             // binomial dephasing order (second table only)
    std::optional<long> povm_bound;   // |K|+1 (second table only)
    Convention convention = Convention::strict;
    LengthResult result;
    std::optional<int> reference_n;
    std::string status;
    std::string annotation;
};

/// Reference table of minimum binary observable counts for t = 1..3 and
/// M in {2,4,6,8,12,16,20,38,39,40}, both conventions per cell.
std::vector<TableCell> length_table(const SearchBudget& budget);

/// Reference table for binomial codes with g0 = g1 = k, k = 1..8, t = 1:
/// POVM bound 3k+2 and the observable count, both conventions per cell.
std::vector<TableCell> binomial_table(const SearchBudget& budget);

std::string cells_to_csv(const std::vector<TableCell>& cells);
nlohmann::json cells_to_json(const std::vector<TableCell>& cells);

}  // namespace codemeas

#endif
