#include "cyclecalc/report.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace cyclecalc {

using json = nlohmann::ordered_json;

std::size_t Report::passed() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.passed; }));
}

std::size_t Report::failed() const { return checks.size() - passed(); }

std::string to_json(const Report& r) {
    json j;
    j["version"] = 1;
    j["genus_range"] = {r.genus_range.first, r.genus_range.second};
    j["gonality_range"] = {r.gonality_range.first, r.gonality_range.second};
    json checks = json::array();
    for (const auto& c : r.checks) {
        json e;
        e["name"] = c.name;
        e["status"] = c.passed ? "pass" : "fail";
        e["lhs"] = c.lhs;
        e["rhs"] = c.rhs;
        e["context"] = c.context;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["passed"] = r.passed();
    j["failed"] = r.failed();
    return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
    const json j = json::parse(text);
    if (j.at("version").get<int>() != 1) throw std::invalid_argument("unsupported report version");
    Report r;
    r.genus_range = {j.at("genus_range").at(0).get<int>(), j.at("genus_range").at(1).get<int>()};
    r.gonality_range = {j.at("gonality_range").at(0).get<int>(), j.at("gonality_range").at(1).get<int>()};
    for (const auto& e : j.at("checks")) {
        Check c;
        c.name = e.at("name").get<std::string>();
        const std::string status = e.at("status").get<std::string>();
        if (status != "pass" && status != "fail") throw std::invalid_argument("bad check status '" + status + "'");
        c.passed = status == "pass";
        c.lhs = e.at("lhs").get<std::string>();
        c.rhs = e.at("rhs").get<std::string>();
        c.context = e.at("context").get<std::string>();
        r.checks.push_back(std::move(c));
    }
    if (j.at("passed").get<std::size_t>() != r.passed() || j.at("failed").get<std::size_t>() != r.failed())
        throw std::invalid_argument("report counts do not match its checks");
    return r;
}

std::string to_text(const Report& r) {
    std::string s;
    for (const auto& c : r.checks) {
        s += c.passed ? "PASS " : "FAIL ";
        s += c.name;
        if (!c.context.empty()) s += " [" + c.context + "]";
        s += ": " + c.lhs + " | " + c.rhs + "\n";
    }
    s += std::to_string(r.passed()) + " passed, " + std::to_string(r.failed()) + " failed, " +
         std::to_string(r.checks.size()) + " checks\n";
    return s;
}

}  // namespace cyclecalc
