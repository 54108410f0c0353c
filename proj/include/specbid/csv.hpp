#pragma once

#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace specbid {

// Numeric cell format for all CSV output: shortest %.9g form, stable across
// platforms for the value range the simulator produces.
inline std::string format_g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

inline void csv_row(std::string& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
    }
    out += '\n';
}

inline std::vector<std::string> split_csv_row(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            out.emplace_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace specbid
