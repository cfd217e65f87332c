#include "cli/report.hpp"

namespace powfactor::cli {

std::string to_string(Certification c) {
  return c == Certification::Deterministic ? "deterministic" : "heuristic";
}

std::string format_text(const Factorization& f) {
  std::string out;
  for (const auto& pf : f.factors) {
    out += pf.p.get_str() + "^" + std::to_string(pf.e) + "\n";
  }
  return out;
}

Json to_json(const ScheduleEvent& ev) {
  return Json{{"m", ev.m},
              {"e", ev.e},
              {"B", ev.bound.get_str()},
              {"outcome", to_string(ev.kind)},
              {"value", ev.value.get_str()}};
}

Json to_json(const InputExpr& expr, const Factorization& f, double elapsed_ms) {
  Json factors = Json::array();
  for (const auto& pf : f.factors) {
    factors.push_back(
        Json{{"p", pf.p.get_str()}, {"e", pf.e}, {"certification", to_string(pf.certification)}});
  }
  Json schedule = Json::array();
  for (const auto& ev : f.stats.schedule) schedule.push_back(to_json(ev));
  return Json{{"input", expr.raw},
              {"value", f.input.get_str()},
              {"factors", std::move(factors)},
              {"stats",
               {{"mulmods", f.stats.ops.mulmods},
                {"gcds", f.stats.ops.gcds},
                {"schedule", std::move(schedule)}}},
              {"elapsed_ms", elapsed_ms}};
}

std::string format_event(const ScheduleEvent& ev) {
  std::string line = "schedule m=" + std::to_string(ev.m) + " e=" + std::to_string(ev.e) +
                     " B=" + ev.bound.get_str() + " " + to_string(ev.kind);
  if (ev.value != 0) line += " " + ev.value.get_str();
  return line;
}

}  // namespace powfactor::cli
