/*
   Copyright 2026 The plethys authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PLETHYS_IO_HPP
#define PLETHYS_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "plethys/rational.hpp"

namespace plethys::io {

inline constexpr int kFormatVersion = 1;

/// Every emitted file starts with a kind tag so that alpha files and
/// coefficient files cannot be confused: "plethys:<kind>:<version>".
std::string header_tag(const std::string& kind);

/// Shortest decimal that round-trips the double.
std::string format_double(double value);

enum class Format { Csv, Json };

Format parse_format(const std::string& text);

/// A kind-tagged table; the one shape every command emits.
struct Table {
    std::string kind;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

/// CSV: "# plethys:<kind>:<version>" line, column header row, data rows.
void write_csv(std::ostream& os, const Table& table);

/// JSON mirror with the same tag string.
void write_json(std::ostream& os, const Table& table);

void write_table(std::ostream& os, const Table& table, Format format);

/// Alpha files carry the alphas tag followed by a JSON array of targets.
/// Files with any other kind tag (e.g. emitted coefficient tables) are
/// rejected: coefficients are not power-sum targets.
std::string read_alpha_file(const std::string& path);

struct BFileEntry {
    long long index;
    Integer value;
};

/// OEIS b-file: "index value" per line, '#' comments ignored.
std::vector<BFileEntry> read_b_file(const std::string& path);

}  // namespace plethys::io

#endif
