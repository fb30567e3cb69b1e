#pragma once

#include <utility>
#include <vector>

// Published 4-decimal reference values for the BBM inequality table, embedded
// at build time from core/data/bbm_reference_table.csv.

namespace morsent::table_data {

struct ReferenceRow {
    int n = 0;
    double lambda = 0.0;
    double s_x = 0.0;
    double s_p = 0.0;
    double sum = 0.0;
    double bound = 0.0;
};

/// All 16 reference rows, in table order (n-major, lambda-minor).
const std::vector<ReferenceRow>& reference_table();

/// The 16 (n, lambda) pairs of the reference grid, in table order.
std::vector<std::pair<int, double>> reference_cells();

}  // namespace morsent::table_data
