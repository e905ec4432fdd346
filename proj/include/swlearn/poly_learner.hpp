#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "swlearn/oracle.hpp"
#include "swlearn/system.hpp"
#include "swlearn/vandermonde.hpp"

namespace swlearn {

/// Receives solver diagnostics the learner wants surfaced (conditioning
/// warnings); null means drop them.
using SolverWarningSink = std::function<void(const std::string&)>;

/// Recovers the full coefficient array of subsystem p from m+1 evaluator
/// queries: one at the all-zeros state for the constant terms, then one at
/// (k,...,k) per sample node k, followed by one linear solve per component.
/// Default sampling uses the canonical nodes 1..m; alternate_nodes (distinct,
/// nonzero, exactly m of them) replaces them for conditioning experiments.
PolynomialVectorField learn_subsystem(const SimulationOracle& oracle, int p,
                                      std::span<const double> alternate_nodes = {},
                                      const SolverWarningSink& warn = nullptr);

/// Applies learn_subsystem to every subsystem in index order; issues exactly
/// N*(m+1) evaluator queries.
std::vector<PolynomialVectorField> learn_all_subsystems(
    const SimulationOracle& oracle, std::span<const double> alternate_nodes = {},
    const SolverWarningSink& warn = nullptr);

} // namespace swlearn
