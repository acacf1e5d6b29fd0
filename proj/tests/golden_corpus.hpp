#pragma once

// Reader for tests/golden/corpus.txt: blank-line separated records of
// "key: value" lines; a value continues on following lines that have no key.

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace golden {

struct Case {
    std::string expr;
    int genus = 0;
    std::optional<int> gonality;
    std::string level;
    std::string tree;
    std::string value;
};

inline std::vector<Case> load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<Case> out;
    Case cur;
    std::string* last = nullptr;
    bool open = false;
    auto flush = [&] {
        if (open) out.push_back(cur);
        cur = Case{};
        last = nullptr;
        open = false;
    };
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            flush();
            continue;
        }
        const auto colon = line.find(": ");
        const std::string key = colon == std::string::npos ? "" : line.substr(0, colon);
        const std::string rest = colon == std::string::npos ? "" : line.substr(colon + 2);
        open = true;
        if (key == "expr") {
            cur.expr = rest;
            last = &cur.expr;
        } else if (key == "genus") {
            cur.genus = std::stoi(rest);
        } else if (key == "gonality") {
            if (rest != "-") cur.gonality = std::stoi(rest);
        } else if (key == "level") {
            cur.level = rest;
        } else if (key == "tree") {
            cur.tree = rest;
            last = &cur.tree;
        } else if (key == "value") {
            cur.value = rest;
            last = &cur.value;
        } else if (last != nullptr) {
            *last += "\n" + line;
        } else {
            throw std::runtime_error("bad corpus line: " + line);
        }
    }
    flush();
    return out;
}

}  // namespace golden
