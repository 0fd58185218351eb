#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "cospec/graph.hpp"
#include "cospec/graph6.hpp"

namespace cospec {

class fixture_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fixture file or directory absent (claims depending on it are skipped).
class fixture_missing_error : public fixture_error {
public:
    using fixture_error::fixture_error;
};

/// Fixture present but unreadable (claims depending on it fail).
class fixture_parse_error : public fixture_error {
public:
    using fixture_error::fixture_error;
};

/// One graph per file <name>.g6: comment lines start with '#', the first
/// remaining line is the graph6 encoding.
inline Graph load_fixture_file(const std::filesystem::path& file) {
    if (!std::filesystem::exists(file))
        throw fixture_missing_error("fixture not found: " + file.string());
    std::ifstream in(file);
    if (!in) throw fixture_parse_error("cannot open fixture " + file.string());
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        try {
            return graph6_decode(line);
        } catch (const graph6_error& e) {
            throw fixture_parse_error(file.string() + ":" + std::to_string(lineno) + ": " +
                                      e.what());
        }
    }
    throw fixture_parse_error("fixture " + file.string() + " has no graph6 line");
}

inline Graph load_fixture(const std::filesystem::path& dir, const std::string& name) {
    return load_fixture_file(dir / (name + ".g6"));
}

/// The named case catalog: series A (triangle attached to a guarded
/// triangle), B (two triangles), C/D (four-cycle and path bases with their
/// attachment cases), E (five-path closures and their pendant extensions).
inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (int i = 1; i <= 4; ++i) v.push_back("A" + std::to_string(i));
        for (int i = 1; i <= 2; ++i) v.push_back("B" + std::to_string(i));
        v.push_back("C");
        for (int i = 1; i <= 26; ++i) v.push_back("C" + std::to_string(i));
        v.push_back("D");
        for (int i = 1; i <= 20; ++i) v.push_back("D" + std::to_string(i));
        for (int i = 1; i <= 6; ++i) v.push_back("E" + std::to_string(i));
        for (int i = 1; i <= 4; ++i) v.push_back("E2_" + std::to_string(i));
        for (int i = 1; i <= 4; ++i) v.push_back("E3_" + std::to_string(i));
        for (int i = 2; i <= 4; ++i) v.push_back("F" + std::to_string(i));
        return v;
    }();
    return names;
}

/// Load every named fixture from the directory. Missing or malformed files
/// surface as fixture_error with the offending path.
inline std::map<std::string, Graph> load_fixtures(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir))
        throw fixture_missing_error("fixture directory not found: " + dir.string());
    std::map<std::string, Graph> out;
    for (const auto& name : fixture_names()) out.emplace(name, load_fixture(dir, name));
    return out;
}

/// Fixture directory resolution: explicit argument, else $COSPEC_FIXTURES,
/// else ./fixtures.
inline std::filesystem::path fixture_dir(const std::string& cli_value = "") {
    if (!cli_value.empty()) return cli_value;
    if (const char* env = std::getenv("COSPEC_FIXTURES")) return env;
    return "fixtures";
}

} // namespace cospec
