#include "rb/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rb/errors.hpp"

namespace rb {

std::string fmt(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header_lines,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open for writing: " + path);
    for (const auto& h : header_lines) out << "# " << h << "\n";
    out << "# columns: ";
    for (std::size_t c = 0; c < columns.size(); ++c)
        out << columns[c] << (c + 1 == columns.size() ? "\n" : ",");
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << fmt(row[c]) << (c + 1 == row.size() ? "\n" : ",");
    }
}

std::map<std::string, std::string> read_key_values(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string();
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty()) throw ParseError(path + ":" + std::to_string(lineno) + ": empty key");
        kv[key] = value;
    }
    return kv;
}

}  // namespace rb
