#pragma once

#include <span>
#include <string>
#include <vector>

#include "thermdens/bioheat/system.hpp"

namespace thermdens::bioheat {

enum class SolverMethod { sor, cg };

std::string to_string(SolverMethod m);
SolverMethod solver_method_from_string(const std::string& s);

struct SolverConfig {
    double tolerance = 1e-8;  // relative residual target
    int max_iters = 50000;
    SolverMethod method = SolverMethod::sor;
    double relaxation = 1.8;  // SOR only

    void validate() const;
};

struct TemperatureField {
    GridDims dims;
    std::vector<double> values;  // C, NaN outside the mask

    double min() const;
    double max() const;
};

struct SolveStats {
    int iterations = 0;
    double residual = 0.0;
    SolverMethod method = SolverMethod::sor;
};

struct SolveResult {
    TemperatureField field;
    SolveStats stats;
};

// ||A x - b|| / ||b|| for an unpadded full-grid vector (NaN read as 0).
double residual_norm(const DiscreteSystem& system, std::span<const double> x);
double residual_norm(const DiscreteSystem& system, const TemperatureField& field);

// Iterates to the configured relative residual, then checks the discrete
// bound on every voxel. Throws ConvergenceError after max_iters.
SolveResult solve_steady(const DiscreteSystem& system, const SolverConfig& config);

// Mean temperature over voxels with at least one air-exposed face.
double mean_exposed_surface_temperature(const TemperatureField& field,
                                        std::span<const std::uint8_t> exposed);

}  // namespace thermdens::bioheat
