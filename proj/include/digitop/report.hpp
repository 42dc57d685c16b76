#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "digitop/contracts.hpp"
#include "digitop/fixpoint.hpp"
#include "digitop/mapkit.hpp"
#include "digitop/search.hpp"

namespace digitop {

// JSON renderings keep keys in insertion order so output is byte-stable.
nlohmann::ordered_json to_json(const ConditionReport& r);
nlohmann::ordered_json to_json(const PointwiseVerdict& v);
nlohmann::ordered_json to_json(const OrbitReport& o);
nlohmann::ordered_json to_json(const TheoremReport& r);
nlohmann::ordered_json to_json(const SearchOutcome& s, AssertionId id);
nlohmann::ordered_json to_json(const SuiteReport& s);

std::string render_text(const ConditionReport& r);
std::string render_text(const OrbitReport& o);
std::string render_text(const TheoremReport& r);
std::string render_text(const SearchOutcome& s, AssertionId id);
std::string render_text(const SuiteReport& s);

/// Rows of "name  value" with the names padded to a common width.
std::string render_table(const std::vector<std::pair<std::string, std::string>>& rows);

}  // namespace digitop
