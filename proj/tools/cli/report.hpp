#pragma once

#include <string>

#include "json.hpp"

#include "cli/input.hpp"

namespace powfactor::cli {

using Json = nlohmann::ordered_json;

std::string to_string(Certification c);

/// One `p^e` line per factor.
std::string format_text(const Factorization& f);

/// Big integers are emitted as decimal strings.
Json to_json(const InputExpr& expr, const Factorization& f, double elapsed_ms);

Json to_json(const ScheduleEvent& ev);

std::string format_event(const ScheduleEvent& ev);

}  // namespace powfactor::cli
