#pragma once

#include <span>
#include <string>

#include "sedcore/optimizer.hpp"

namespace sedcore {

/// Renders a two-panel SVG 1.1 chart: the feasible objective space with the
/// Pareto front polyline on the left, the weight sweep F(w1) curve on the
/// right. Output is byte-deterministic for identical inputs (fixed canvas,
/// fixed decimal formatting, no timestamps).
std::string render_objective_chart(const ObjectiveTable& table,
                                   std::span<const ObjectiveRow> front,
                                   std::span<const SelectionResult> sweep,
                                   const std::string& title);

}  // namespace sedcore
