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

#include "plethys/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "plethys/errors.hpp"
#include "plethys/scalar.hpp"

namespace plethys::io {

std::string header_tag(const std::string& kind) {
    return "plethys:" + kind + ":" + std::to_string(kFormatVersion);
}

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

Format parse_format(const std::string& text) {
    if (text == "csv") {
        return Format::Csv;
    }
    if (text == "json") {
        return Format::Json;
    }
    throw InputError("unknown format '" + text + "' (expected csv or json)");
}

void write_csv(std::ostream& os, const Table& table) {
    os << "# " << header_tag(table.kind) << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        os << (i ? "," : "") << table.columns[i];
    }
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << row[i];
        }
        os << "\n";
    }
}

void write_json(std::ostream& os, const Table& table) {
    nlohmann::json doc;
    doc["header"] = header_tag(table.kind);
    doc["columns"] = table.columns;
    doc["rows"] = table.rows;
    os << doc.dump(2) << "\n";
}

void write_table(std::ostream& os, const Table& table, Format format) {
    if (format == Format::Csv) {
        write_csv(os, table);
    } else {
        write_json(os, table);
    }
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

std::string read_alpha_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open alpha file '" + path + "'");
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw InputError("alpha file '" + path + "' is empty");
    }
    const std::string expected = "# " + header_tag("alphas");
    if (trim(line) != trim(expected)) {
        throw InputError("'" + path + "' is not an alpha file: expected leading '" + expected +
                         "' line (coefficient tables are not power-sum targets)");
    }
    std::ostringstream rest;
    rest << in.rdbuf();
    return rest.str();
}

std::vector<BFileEntry> read_b_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open b-file '" + path + "'");
    }
    std::vector<BFileEntry> entries;
    std::string line;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') {
            continue;
        }
        std::istringstream ls(t);
        long long index = 0;
        std::string value_text;
        if (!(ls >> index >> value_text)) {
            throw InputError("malformed b-file line: '" + line + "'");
        }
        Integer value;
        if (mpz_set_str(value.get_mpz_t(), value_text.c_str(), 10) != 0) {
            throw InputError("malformed b-file value: '" + value_text + "'");
        }
        entries.push_back({index, std::move(value)});
    }
    return entries;
}

}  // namespace plethys::io

namespace plethys {

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Rational:
            return "rational";
        case Backend::Complex64:
            return "complex64";
        case Backend::BigComplex:
            return "bigcomplex";
    }
    return "unknown";
}

}  // namespace plethys
