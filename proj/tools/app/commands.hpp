#pragma once

#include <optional>
#include <string>

#include "report.hpp"

namespace nodalsplit::app {

struct RunOptions {
  int height = 50;  // rational point search bound
  int seed = 0;     // first shear index for singular-locus checks
};

Report verify_example(const std::string& id, const RunOptions& opts);

// Expressions may also be file names; nodes is node-file text or a file name.
Report analyze(const std::string& curve, const std::string& conic, const std::optional<std::string>& nodes,
               const RunOptions& opts);
Report split_type(const std::string& curve, const std::string& conic, const std::string& nodes,
                  const RunOptions& opts);
Report pullback(const std::string& curve, const RunOptions& opts);
Report project_quartic(const std::string& g2, const std::string& g3, const std::string& g4,
                       const RunOptions& opts);
Report syzygetic(const std::string& surface, const std::string& nodes, const RunOptions& opts);

}  // namespace nodalsplit::app
