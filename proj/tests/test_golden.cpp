#include "doctest.h"

#include "cyclecalc/dsl/eval.hpp"
#include "cyclecalc/dsl/parser.hpp"
#include "cyclecalc/verify.hpp"
#include "golden_corpus.hpp"

using namespace cyclecalc;

TEST_CASE("golden corpus") {
    const auto cases = golden::load(CYCLECALC_GOLDEN_DIR "/corpus.txt");
    REQUIRE(cases.size() >= 25);
    for (const auto& c : cases) {
        CAPTURE(c.expr);
        const dsl::ExprPtr e = dsl::parse(c.expr);
        CHECK(dsl::tree(*e) == c.tree);
        const dsl::ExprPtr again = dsl::parse(dsl::pretty(*e));
        CHECK(dsl::same_shape(*e, *again));
        CHECK(dsl::pretty(*again) == dsl::pretty(*e));
        const auto ctx = dsl::EvalContext::make(c.genus, c.gonality, c.level);
        CHECK(dsl::render(dsl::evaluate(*e, ctx)) == c.value);
    }
}

TEST_CASE("README identity table matches the verified table") {
    std::ifstream in(CYCLECALC_README);
    REQUIRE(in);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("| ", 0) != 0 || line.find('`') == std::string::npos) continue;
        std::vector<std::string> cells;
        std::size_t pos = 1;
        while (pos < line.size()) {
            const std::size_t next = line.find(" |", pos);
            if (next == std::string::npos) break;
            std::string cell = line.substr(pos + 1, next - pos - 1);
            if (cell.size() >= 2 && cell.front() == '`' && cell.back() == '`') cell = cell.substr(1, cell.size() - 2);
            cells.push_back(cell);
            pos = next + 2;
        }
        if (cells.size() == 6) rows.push_back(cells);
    }
    const auto& table = identity_table();
    REQUIRE(rows.size() == table.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& r = rows[k];
        const auto& t = table[k];
        CAPTURE(r[1]);
        CHECK(r[1] == t.expr);
        CHECK(std::stoi(r[2]) == t.genus);
        CHECK(r[3] == (t.gonality ? std::to_string(*t.gonality) : std::string("-")));
        CHECK(r[4] == t.level);
        CHECK(r[5] == t.expected);
        const auto ctx = dsl::EvalContext::make(t.genus, t.gonality, t.level);
        CHECK(dsl::render(dsl::evaluate(r[1], ctx)) == r[5]);
    }
}
