#include "swlearn/poly_learner.hpp"

namespace swlearn {

PolynomialVectorField learn_subsystem(const SimulationOracle& oracle, int p,
                                      std::span<const double> alternate_nodes,
                                      const SolverWarningSink& warn) {
    const int d = oracle.dimension();
    const int m = oracle.order();
    if (!alternate_nodes.empty() && static_cast<int>(alternate_nodes.size()) != m) {
        throw Error("alternate sampling must provide exactly one node per power 1..m");
    }

    PolynomialVectorField field;
    field.subsystem = p;
    field.dimension = d;
    field.order = m;
    field.coeffs.assign(static_cast<std::size_t>(d),
                        std::vector<double>(static_cast<std::size_t>(m) + 1, 0.0));

    // Constant terms come straight from the image of the all-zeros state.
    const std::vector<double> zeros(static_cast<std::size_t>(d), 0.0);
    const std::vector<double> at_zero = oracle.eval(p, zeros);
    for (int i = 0; i < d; ++i) field.coeffs[static_cast<std::size_t>(i)][0] = at_zero[static_cast<std::size_t>(i)];
    if (m == 0) return field;

    std::vector<double> nodes(alternate_nodes.begin(), alternate_nodes.end());
    if (nodes.empty()) {
        nodes.resize(static_cast<std::size_t>(m));
        for (int k = 1; k <= m; ++k) nodes[static_cast<std::size_t>(k - 1)] = k;
    }

    // One query per node; sample state puts the node in every coordinate.
    std::vector<std::vector<double>> images;
    images.reserve(nodes.size());
    for (double node : nodes) {
        images.push_back(oracle.eval(p, std::vector<double>(static_cast<std::size_t>(d), node)));
    }

    for (int i = 0; i < d; ++i) {
        VandermondeSystem sys;
        sys.nodes = nodes;
        sys.rhs.resize(nodes.size());
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            sys.rhs[k] = images[k][static_cast<std::size_t>(i)] - at_zero[static_cast<std::size_t>(i)];
        }
        const VandermondeSolution sol = solve_vandermonde(sys);
        if (sol.ill_conditioned && warn) {
            warn("subsystem " + std::to_string(p) + " component " + std::to_string(i + 1) +
                 ": sample matrix condition estimate " + std::to_string(sol.condition_estimate) +
                 " exceeds warning threshold");
        }
        for (int k = 1; k <= m; ++k) {
            field.coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                sol.coefficients[static_cast<std::size_t>(k - 1)];
        }
    }
    return field;
}

std::vector<PolynomialVectorField> learn_all_subsystems(const SimulationOracle& oracle,
                                                        std::span<const double> alternate_nodes,
                                                        const SolverWarningSink& warn) {
    std::vector<PolynomialVectorField> fields;
    fields.reserve(static_cast<std::size_t>(oracle.subsystem_count()));
    for (int p = 1; p <= oracle.subsystem_count(); ++p) {
        fields.push_back(learn_subsystem(oracle, p, alternate_nodes, warn));
    }
    return fields;
}

} // namespace swlearn
