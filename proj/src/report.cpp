#include "rclean/report.hpp"

#include <algorithm>

namespace rclean::report {

namespace {

Mat2 matrix_from_json(const Json& j, const RingPtr& ring) {
    auto cell = [&](std::size_t r, std::size_t c) { return parse_elem(j.at(r).at(c).get<std::string>(), ring); };
    return {cell(0, 0), cell(0, 1), cell(1, 0), cell(1, 1)};
}

MatrixCase case_from_string(const std::string& s) {
    for (auto kind : {MatrixCase::Invertible, MatrixCase::Radical, MatrixCase::SplitSpectral, MatrixCase::NotRadClean})
        if (to_string(kind) == s) return kind;
    throw AlgebraError(ErrorKind::ParseError, "unknown case '" + s + "'");
}

Method method_from_string(const std::string& s) {
    for (auto m : {Method::CharRoots, Method::NormalizedQuadratic, Method::DiscriminantQuadratic, Method::SquareDiscriminant})
        if (to_string(m) == s) return m;
    throw AlgebraError(ErrorKind::ParseError, "unknown method '" + s + "'");
}

Json optional_count(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<std::size_t> count_from_json(const Json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<std::size_t>();
}

bool is_matrix(const Json& j) {
    return j.is_array() && j.size() == 2 && j[0].is_array() && j[0].size() == 2 && j[1].is_array() && j[1].size() == 2 && j[0][0].is_string();
}

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "n/a";
    return j.dump();
}

void flatten(const Json& j, const std::string& prefix, std::string& out) {
    if (is_matrix(j)) {
        out += prefix + ": " + j[0][0].get<std::string>() + "," + j[0][1].get<std::string>() + ";" + j[1][0].get<std::string>() + "," +
               j[1][1].get<std::string>() + "\n";
    } else if (j.is_object()) {
        for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (j.is_array()) {
        if (j.empty()) out += prefix + ": (none)\n";
        bool scalars = std::all_of(j.begin(), j.end(), [](const Json& v) { return !v.is_structured(); });
        if (scalars && !j.empty()) {
            std::string line;
            for (const auto& v : j) line += (line.empty() ? "" : ", ") + scalar_text(v);
            out += prefix + ": " + line + "\n";
        } else {
            for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
        }
    } else {
        out += prefix + ": " + scalar_text(j) + "\n";
    }
}

}  // namespace

Json matrix_json(const Mat2& a) {
    return Json::array({Json::array({to_string(a.a), to_string(a.b)}), Json::array({to_string(a.c), to_string(a.d)})});
}

Json classification_json(const Mat2& a, const Classification& cls, bool with_witness) {
    const CharData cd = char_data(a);
    Json j;
    j["ring"] = a.ring()->to_string();
    j["matrix"] = matrix_json(a);
    j["trace"] = to_string(cd.trace);
    j["det"] = to_string(cd.det);
    j["case"] = to_string(cls.kind);
    j["strongly_rad_clean"] = cls.strongly_rad_clean;
    j["strongly_clean"] = cls.strongly_clean;
    j["method"] = to_string(cls.method);
    if (!cls.reason.empty()) j["reason"] = cls.reason;
    if (cls.roots) j["roots"] = {{"alpha", to_string(cls.roots->alpha)}, {"beta", to_string(cls.roots->beta)}};
    if (with_witness && cls.witness)
        j["witness"] = {{"E", matrix_json(cls.witness->idempotent)}, {"U", matrix_json(cls.witness->unit)}, {"verified", cls.witness->verified}};
    return j;
}

ClassificationRecord classification_from_json(const Json& j) {
    const RingPtr ring = Ring::parse(j.at("ring").get<std::string>());
    Mat2 matrix = matrix_from_json(j.at("matrix"), ring);
    Classification cls;
    cls.kind = case_from_string(j.at("case").get<std::string>());
    cls.strongly_rad_clean = j.at("strongly_rad_clean").get<bool>();
    cls.strongly_clean = j.at("strongly_clean").get<bool>();
    cls.method = method_from_string(j.at("method").get<std::string>());
    if (j.contains("reason")) cls.reason = j["reason"].get<std::string>();
    if (j.contains("roots"))
        cls.roots = RootPair{parse_elem(j["roots"].at("alpha").get<std::string>(), ring), parse_elem(j["roots"].at("beta").get<std::string>(), ring)};
    if (j.contains("witness")) {
        const Json& w = j["witness"];
        cls.witness = Witness{matrix_from_json(w.at("E"), ring), matrix_from_json(w.at("U"), ring), w.at("verified").get<std::vector<std::string>>()};
    }
    return {std::move(matrix), std::move(cls)};
}

Json oracle_json(const oracle::OracleReport& r) {
    Json j;
    j["ring"] = r.ring;
    j["total_matrices"] = r.total_matrices;
    j["idempotents"] = r.idempotents;
    const auto& t = r.tallies;
    j["tallies"] = {{"clean", optional_count(t.clean)},
                    {"rad_clean", optional_count(t.rad_clean)},
                    {"j_clean", optional_count(t.j_clean)},
                    {"quasipolar", optional_count(t.quasipolar)},
                    {"closed_form_rad_clean", t.closed_form_rad_clean},
                    {"closed_form_clean", t.closed_form_clean},
                    {"unit_trace", t.unit_trace},
                    {"unit_trace_rad_clean", t.unit_trace_rad_clean}};
    j["witnesses_verified"] = r.witnesses_verified;
    j["square_discriminant_compared"] = r.square_discriminant_compared;
    j["mismatches"] = Json::array();
    for (const auto& m : r.mismatches)
        j["mismatches"].push_back({{"matrix", m.matrix}, {"check", m.check}, {"closed_form", m.closed_form}, {"brute", m.brute}});
    j["implication_violations"] = Json::array();
    for (const auto& v : r.implication_violations) j["implication_violations"].push_back({{"matrix", v.matrix}, {"implication", v.implication}});
    return j;
}

oracle::OracleReport oracle_from_json(const Json& j) {
    oracle::OracleReport r;
    r.ring = j.at("ring").get<std::string>();
    r.total_matrices = j.at("total_matrices").get<std::size_t>();
    r.idempotents = j.at("idempotents").get<std::size_t>();
    const Json& t = j.at("tallies");
    r.tallies.clean = count_from_json(t.at("clean"));
    r.tallies.rad_clean = count_from_json(t.at("rad_clean"));
    r.tallies.j_clean = count_from_json(t.at("j_clean"));
    r.tallies.quasipolar = count_from_json(t.at("quasipolar"));
    r.tallies.closed_form_rad_clean = t.at("closed_form_rad_clean").get<std::size_t>();
    r.tallies.closed_form_clean = t.at("closed_form_clean").get<std::size_t>();
    r.tallies.unit_trace = t.at("unit_trace").get<std::size_t>();
    r.tallies.unit_trace_rad_clean = t.at("unit_trace_rad_clean").get<std::size_t>();
    r.witnesses_verified = j.at("witnesses_verified").get<std::size_t>();
    r.square_discriminant_compared = j.at("square_discriminant_compared").get<bool>();
    for (const auto& m : j.at("mismatches"))
        r.mismatches.push_back({m.at("matrix").get<std::string>(), m.at("check").get<std::string>(), m.at("closed_form").get<bool>(), m.at("brute").get<bool>()});
    for (const auto& v : j.at("implication_violations"))
        r.implication_violations.push_back({v.at("matrix").get<std::string>(), v.at("implication").get<std::string>()});
    return r;
}

Json trace_json(const RingPtr& ring, const TraceVerdict& verdict) {
    const auto& s = verdict.solvability;
    Json j;
    j["ring"] = ring->to_string();
    j["status"] = to_string(s.status);
    j["checked"] = s.checked;
    j["justification"] = s.justification;
    if (s.status == SolvabilityStatus::Counterexample) {
        j["counterexample"] = {{"lambda", to_string(*s.lambda)}, {"mu", to_string(*s.mu)}, {"matrix", matrix_json(*verdict.counterexample_matrix)}};
    }
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string to_text(const Json& j) {
    std::string out;
    flatten(j, "", out);
    return out;
}

}  // namespace rclean::report
