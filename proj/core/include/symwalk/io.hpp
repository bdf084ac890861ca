#pragma once

// JSON and CSV encodings of tables, polynomials, walks, distributions and
// reports. Exact fractions travel as {"num", "den"} objects; each component
// is a JSON integer when it fits in 64 bits and a decimal string otherwise.

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "symwalk/analysis.hpp"
#include "symwalk/characters.hpp"
#include "symwalk/charpoly.hpp"
#include "symwalk/walks.hpp"

namespace symwalk {

/// Bumped whenever a JSON layout changes incompatibly.
inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

Json integer_to_json(const BigInt& z);
BigInt integer_from_json(const Json& j);
Json rational_to_json(const BigRational& q);
/// Accepts {"num", "den"} (den defaults to 1), a JSON integer, or a string
/// "p/q". DomainError on anything else or a zero denominator.
BigRational rational_from_json(const Json& j);

Json to_json(const CharacterTable& table);
Json to_json(const CharPolynomial& q);
Json to_json(const WalkSpec& walk);
Json to_json(const ClassDistribution& d, bool approx = false);
Json to_json(const StabilizationReport& report);
Json to_json(const RankReport& report);
Json to_json(const StationarySplit& split);

/// Inverse of to_json(WalkSpec). The "p" field is the hold probability and
/// may be omitted. DomainError on malformed input.
WalkSpec walk_from_json(const Json& j);

/// "transposition", "lazy:<p>", "three-cycle", "n-cycle" or "custom:<path>"
/// (a file holding walk JSON whose "n" must equal n). DomainError otherwise.
WalkSpec parse_walk_descriptor(std::string_view descriptor, int n);

void write_csv(std::ostream& out, const CharacterTable& table);
/// class, per_element_num, per_element_den, class_size, sign[, approx]
void write_csv(std::ostream& out, const ClassDistribution& d, bool approx = false);

/// One row of a distance curve.
struct DistanceRow {
  long t = 0;
  BigRational tv;
  BigRational sep;
  BigRational linf;
};
void write_distance_header(std::ostream& out, bool approx = false);
void write_csv(std::ostream& out, const DistanceRow& row, bool approx = false);

}  // namespace symwalk
