#pragma once

#include <string>

#include "json.hpp"
#include "rclean/classify.hpp"
#include "rclean/oracle.hpp"

namespace rclean::report {

using Json = nlohmann::ordered_json;

/// {"ring", "matrix", "trace", "det", "case", "strongly_rad_clean",
///  "strongly_clean", "method", "reason"?, "roots"?, "witness"?}
Json classification_json(const Mat2& a, const Classification& cls, bool with_witness);

struct ClassificationRecord {
    Mat2 matrix;
    Classification classification;
};

/// Inverse of classification_json; the ring is read from the "ring" field.
ClassificationRecord classification_from_json(const Json& j);

Json oracle_json(const oracle::OracleReport& report);
oracle::OracleReport oracle_from_json(const Json& j);

Json trace_json(const RingPtr& ring, const TraceVerdict& verdict);

Json matrix_json(const Mat2& a);

/// Two-space indented, newline-terminated.
std::string dump(const Json& j);

/// "key: value" lines; nested objects use dotted keys and matrices print
/// as "a,b;c,d".
std::string to_text(const Json& j);

}  // namespace rclean::report
