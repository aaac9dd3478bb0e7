#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hypwalk {

/// Standalone SVG 1.1 line chart: one series, axis ticks and labels,
/// optional symmetric error bars. Output bytes are a pure function of the
/// inputs. A single point renders as a marker with no line segment.
std::string render_line_chart(const std::vector<double>& x,
                              const std::vector<double>& y,
                              const std::optional<std::vector<double>>& y_err,
                              const std::string& x_label,
                              const std::string& y_label);

}  // namespace hypwalk
