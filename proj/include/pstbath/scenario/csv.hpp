// Copyright 2026 The pstbath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// csv.hpp — sweep rows as CSV. 12 significant digits, fixed column order, LF line ends.

#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "pstbath/errors.hpp"
#include "pstbath/scenario/sweep.hpp"

namespace pstbath {

// F0110 and F1001 are conjugate partners, likewise F1010 / F0101; both members are written so
// the file is self-contained. Deviation columns only in compare mode.
inline std::vector<std::string> csv_columns(bool deviation_columns) {
    std::vector<std::string> cols = {"solver", "seed",  "N",     "M",      "t",      "T",      "mtf",
                                     "fidelity", "F0000", "F0011", "F1100", "F1111", "F0110r", "F0110i",
                                     "F1010r", "F1010i", "F0101r", "F0101i", "F1001r", "F1001i"};
    if (deviation_columns) {
        cols.emplace_back("dev_mtf");
        cols.emplace_back("dev_fidelity");
    }
    return cols;
}

inline std::string format_csv_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    if (std::string(buf) == "-0") return "0";
    return buf;
}

inline std::string to_csv(const std::vector<SweepRow>& rows, bool deviation_columns) {
    std::string out;
    const auto cols = csv_columns(deviation_columns);
    for (std::size_t k = 0; k < cols.size(); ++k) out += (k ? "," : "") + cols[k];
    out += '\n';
    for (const auto& r : rows) {
        const auto& f = r.components;
        out += to_string(r.solver);
        out += ',' + std::to_string(r.seed) + ',' + std::to_string(r.n) + ',' + std::to_string(r.m);
        auto num = [&](double v) { out += ',' + format_csv_number(v); };
        num(r.t);
        num(r.temperature);
        num(r.mtf);
        num(r.fidelity);
        num(f.at(0, 0, 0, 0).real());
        num(f.at(0, 0, 1, 1).real());
        num(f.at(1, 1, 0, 0).real());
        num(f.at(1, 1, 1, 1).real());
        for (const auto& z : {f.at(0, 1, 1, 0), f.at(1, 0, 1, 0), f.at(0, 1, 0, 1), f.at(1, 0, 0, 1)}) {
            num(z.real());
            num(z.imag());
        }
        if (deviation_columns) {
            num(r.dev_mtf.value_or(0.0));
            num(r.dev_fidelity.value_or(0.0));
        }
        out += '\n';
    }
    return out;
}

inline void write_csv(const std::vector<SweepRow>& rows, const std::string& path, bool deviation_columns = false) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    const std::string text = to_csv(rows, deviation_columns);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace pstbath
