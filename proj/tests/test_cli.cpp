#include "doctest.h"
#include "rclean/cli.hpp"
#include "rclean/report.hpp"

#include <sstream>

using namespace rclean;
using report::Json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    const auto r = invoke(args);
    REQUIRE(r.code == 0);
    return Json::parse(r.out);
}

std::string text_value(const std::string& text, const std::string& key) {
    std::istringstream in(text);
    std::string line;
    const std::string prefix = key + ": ";
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
    return "<missing>";
}

}  // namespace

TEST_CASE("classify examples") {
    auto j = invoke_json({"classify", "--ring", "Zmod:4", "--matrix", "2,3;0,2"});
    CHECK(j["strongly_clean"] == true);
    CHECK(j["strongly_rad_clean"] == false);
    CHECK(j["case"] == "NotRadClean");

    j = invoke_json({"classify", "--ring", "Padic:2:32", "--matrix", "1,1;1,1"});
    CHECK(j["strongly_rad_clean"] == false);

    j = invoke_json({"classify", "--ring", "Zloc:3", "--matrix", "2,1;-1,1"});
    CHECK(j["case"] == "NotRadClean");
    CHECK(j["reason"] == "trace not a unit");
    CHECK(j["trace"] == "3");

    j = invoke_json({"classify", "--ring", "Zmod:4", "--matrix", "1,1;1,0", "--witness"});
    CHECK(j["case"] == "Invertible");
    CHECK(j["witness"]["verified"].size() == 5);

    j = invoke_json({"classify", "--ring", "Series(Zmod:4;4)", "--matrix", "[0,1],[2,1];[1,0,1],[3,3]", "--witness"});
    CHECK(j["case"] == "SplitSpectral");
    CHECK(j["strongly_rad_clean"] == true);
    CHECK(j["witness"]["verified"].size() == 5);
}

TEST_CASE("field order is stable") {
    const auto j = invoke_json({"classify", "--ring", "Zmod:9", "--matrix", "0,3;1,1", "--witness"});
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    const std::vector<std::string> want = {"ring", "matrix", "trace", "det", "case", "strongly_rad_clean", "strongly_clean", "method", "roots", "witness"};
    CHECK(keys == want);
}

TEST_CASE("classification JSON round trips byte for byte") {
    for (const char* spec : {"Zmod:4", "Zmod:9", "Zloc:3", "Padic:2:32", "Series(Zmod:4;6)"}) {
        for (const char* m : {"2,3;0,2", "1,1;1,0", "0,3;1,1", "1,1;1,1", "3,2;1,2"}) {
            for (bool witness : {false, true}) {
                std::vector<std::string> args = {"classify", "--ring", spec, "--matrix", m, "--format", "json"};
                if (witness) args.push_back("--witness");
                const auto r = invoke(args);
                REQUIRE(r.code == 0);
                CHECK(r.out.back() == '\n');
                const auto rec = report::classification_from_json(Json::parse(r.out));
                CHECK(report::dump(report::classification_json(rec.matrix, rec.classification, witness)) == r.out);
            }
        }
    }
}

TEST_CASE("text and json verdicts agree") {
    for (const char* spec : {"Zmod:4", "Zmod:8", "Zmod:9", "Zloc:5", "Padic:3:20"}) {
        for (const char* m : {"2,3;0,2", "1,1;1,0", "0,3;1,1", "1,1;1,1", "4,1;2,0", "3,3;3,3"}) {
            const auto text = invoke({"classify", "--ring", spec, "--matrix", m});
            REQUIRE(text.code == 0);
            const auto j = invoke_json({"classify", "--ring", spec, "--matrix", m});
            CHECK(text_value(text.out, "case") == j["case"].get<std::string>());
            CHECK(text_value(text.out, "strongly_rad_clean") == (j["strongly_rad_clean"].get<bool>() ? "true" : "false"));
            CHECK(text_value(text.out, "strongly_clean") == (j["strongly_clean"].get<bool>() ? "true" : "false"));
            CHECK(text_value(text.out, "method") == j["method"].get<std::string>());
        }
    }
    const auto text = invoke({"trace-property", "--ring", "Zloc:3"});
    const auto j = invoke_json({"trace-property", "--ring", "Zloc:3"});
    CHECK(text_value(text.out, "status") == j["status"].get<std::string>());
}

TEST_CASE("repeated invocations are byte identical") {
    const std::vector<std::vector<std::string>> runs = {
        {"classify", "--ring", "Zmod:9", "--matrix", "0,3;1,1", "--witness", "--format", "json"},
        {"trace-property", "--ring", "Series(Zmod:4;6)", "--format", "json"},
        {"trace-property", "--ring", "Zloc:3", "--format", "json"},
        {"oracle", "--ring", "Zmod:4", "--format", "json"},
        {"lift", "--ring", "Series(Zmod:9;5)", "--mu", "[1,2]", "--lambda", "[3,1]", "--b0", "6"},
    };
    for (const auto& args : runs) {
        const auto a = invoke(args);
        const auto b = invoke(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("roots and solve") {
    auto j = invoke_json({"roots", "--ring", "Zmod:9", "--mu", "2", "--lambda", "-3"});
    CHECK(j["solvable"] == true);
    CHECK(j["alpha"] == "6");
    CHECK(j["beta"] == "1");

    j = invoke_json({"roots", "--ring", "Zloc:3", "--mu", "1", "--lambda", "3"});
    CHECK(j["solvable"] == false);
    j = invoke_json({"roots", "--ring", "Zloc:3", "--mu", "-1", "--lambda", "-6"});
    CHECK(j["solvable"] == true);
    CHECK(j["alpha"] == "3");
    CHECK(j["beta"] == "-2");

    j = invoke_json({"solve", "--ring", "Padic:2:32", "--c", "2"});
    CHECK(j["solvable"] == true);
    CHECK(j["root"] == "4294967294");
    j = invoke_json({"solve", "--ring", "Series(Zmod:4;6)", "--c", "[2,1]"});
    CHECK(j["solvable"] == true);

    CHECK(invoke({"roots", "--ring", "Zmod:4", "--mu", "2", "--lambda", "0"}).code == cli::kPrecondition);
}

TEST_CASE("lift") {
    auto j = invoke_json({"lift", "--ring", "Series(Zmod:4;3)", "--mu", "1", "--lambda", "[0,2]", "--b0", "0"});
    CHECK(j["root"] == "[0,2,0]");
    CHECK(j["residual_zero"] == true);
    j = invoke_json({"lift", "--ring", "Series(Zmod:4;2)", "--mu", "-3", "--lambda", "[2,2]", "--b0", "2"});
    CHECK(j["root"] == "[2,2]");
    CHECK(invoke({"lift", "--ring", "Series(Zmod:4;3)", "--mu", "2", "--lambda", "0", "--b0", "0"}).code == cli::kPrecondition);
    CHECK(invoke({"lift", "--ring", "Zmod:4", "--mu", "1", "--lambda", "0", "--b0", "0"}).code == cli::kParseError);
}

TEST_CASE("normalize") {
    auto j = invoke_json({"normalize", "--ring", "Zmod:9", "--matrix", "1,0;1,3"});
    CHECK(j["case"] == "I");
    CHECK(j["normal_form"] == Json::parse(R"([["0","6"],["1","4"]])"));
    CHECK(invoke({"normalize", "--ring", "Zmod:9", "--matrix", "1,0;1,2"}).code == cli::kPrecondition);
}

TEST_CASE("trace-property") {
    auto j = invoke_json({"trace-property", "--ring", "Zmod:4"});
    CHECK(j["status"] == "Holds");
    CHECK(j["checked"] == 4);
    j = invoke_json({"trace-property", "--ring", "Padic:2:32"});
    CHECK(j["status"] == "Holds");
    j = invoke_json({"trace-property", "--ring", "Series(Zmod:4;6)", "--samples", "100"});
    CHECK(j["status"] == "HoldsOnSample");
    CHECK(j["checked"] == 100);
    j = invoke_json({"trace-property", "--ring", "Zloc:3"});
    CHECK(j["status"] == "Counterexample");
    CHECK(j["counterexample"]["lambda"] == "3");
    CHECK(j["counterexample"]["mu"] == "1");
    CHECK(invoke({"trace-property", "--ring", "Zmod:9", "--samples", "3"}).code == cli::kBudget);
}

TEST_CASE("exit codes") {
    CHECK(invoke({}).code == cli::kParseError);
    CHECK(invoke({"frobnicate"}).code == cli::kParseError);
    CHECK(invoke({"classify", "--ring", "Zmod:4"}).code == cli::kParseError);
    CHECK(invoke({"--help"}).code == cli::kOk);
    CHECK(invoke({"classify", "--ring", "Zmod:6", "--matrix", "1,0;0,1"}).code == cli::kParseError);
    CHECK(invoke({"classify", "--ring", "Zmod:4", "--matrix", "1,0;0"}).code == cli::kParseError);
    CHECK(invoke({"classify", "--ring", "Zloc:3", "--matrix", "1/3,0;0,1"}).code == cli::kParseError);
    CHECK(invoke({"oracle", "--ring", "Zmod:16"}).code == cli::kBudget);
    CHECK(invoke({"oracle", "--ring", "Zloc:3"}).code == cli::kPrecondition);
    CHECK(invoke({"oracle", "--ring", "Zmod:4", "--check", "quasipolar"}).code == cli::kOk);

    const auto bad = invoke({"classify", "--ring", "Zmod:6", "--matrix", "1,0;0,1", "--format", "json"});
    const auto j = Json::parse(bad.out);
    CHECK(j["error"] == "InvalidRingSpec");
    CHECK_FALSE(bad.err.empty());
}
