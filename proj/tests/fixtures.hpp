#pragma once

#include <string_view>

#include "rreduct/decision_table.hpp"

namespace fixtures {

// five objects, four features, three decision classes; the table every
// algorithm walkthrough in the tests is pinned to
inline constexpr std::string_view kSampleCsv =
    "F1,F2,F3,F4,Decision\n"
    "0,0,1,3,0\n"
    "0,1,1,1,1\n"
    "1,2,2,0,1\n"
    "0,1,0,2,2\n"
    "0,0,0,1,2\n";

// job applicants, two decision classes, categorical strings
inline constexpr std::string_view kJobsCsv =
    "Diploma,Experience,French,Reference,Decision\n"
    "MBA,Medium,Yes,Excellent,Accept\n"
    "MBA,Low,Yes,Neutral,Reject\n"
    "MCE,Low,Yes,Good,Reject\n"
    "MSC,High,Yes,Neutral,Accept\n"
    "MSC,Medium,Yes,Neutral,Reject\n"
    "MSC,High,Yes,Excellent,Accept\n"
    "MBA,High,No,Good,Accept\n"
    "MCE,Low,No,Excellent,Reject\n";

// rows 1/3 and 4/5 duplicate each other; merging yields three rows
inline constexpr std::string_view kDuplicatedCsv =
    "F1,F2,F3,F4,Decision\n"
    "1,2,1,3,1\n"
    "1,1,1,1,0\n"
    "1,2,1,3,1\n"
    "3,3,1,1,1\n"
    "3,3,1,1,1\n";

// object 1's only minimal reduct is {F1,F4}; the full set is evaluated as a
// reduct before {F1,F4} is reached in pre-order, exercising the revocation
// path and the no-pruning-savings corner
inline constexpr std::string_view kLateMinimalCsv =
    "F1,F2,F3,F4,Decision\n"
    "0,0,0,0,0\n"
    "0,0,0,1,1\n"
    "1,0,0,0,1\n";

inline rreduct::DecisionTable sample() { return rreduct::parse_table(kSampleCsv); }
inline rreduct::DecisionTable jobs() { return rreduct::parse_table(kJobsCsv); }
inline rreduct::DecisionTable duplicated() {
  return rreduct::parse_table(kDuplicatedCsv);
}
inline rreduct::DecisionTable late_minimal() {
  return rreduct::parse_table(kLateMinimalCsv);
}

}  // namespace fixtures
