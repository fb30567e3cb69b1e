#include "morsent/table_data.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include "reference_table_data.inc"

namespace morsent::table_data {

namespace {

std::vector<ReferenceRow> parse_reference_csv(const char* text) {
    std::vector<ReferenceRow> rows;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen) {
            if (line != "n,lambda,S_x,S_p,sum,bound")
                throw std::runtime_error("reference table: unexpected header: " + line);
            header_seen = true;
            continue;
        }
        std::istringstream fields(line);
        ReferenceRow row;
        char comma = 0;
        fields >> row.n >> comma >> row.lambda >> comma >> row.s_x >> comma >>
            row.s_p >> comma >> row.sum >> comma >> row.bound;
        if (!fields)
            throw std::runtime_error("reference table: malformed row: " + line);
        rows.push_back(row);
    }
    if (rows.empty()) throw std::runtime_error("reference table: no data rows");
    return rows;
}

}  // namespace

const std::vector<ReferenceRow>& reference_table() {
    static const std::vector<ReferenceRow> rows = parse_reference_csv(kReferenceTableCsv);
    return rows;
}

std::vector<std::pair<int, double>> reference_cells() {
    std::vector<std::pair<int, double>> cells;
    const auto& rows = reference_table();
    cells.reserve(rows.size());
    for (const auto& row : rows) cells.emplace_back(row.n, row.lambda);
    return cells;
}

}  // namespace morsent::table_data
