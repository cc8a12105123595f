#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "thermdens/core/grid.hpp"
#include "thermdens/phantom/phantom.hpp"
#include "thermdens/phantom/tissue.hpp"
#include "thermdens/simd/kernels.hpp"

namespace thermdens::bioheat {

struct BoundaryConditions {
    double t_core = 37.0;     // chest-wall Dirichlet temperature, C
    double t_blood = 37.0;    // arterial blood temperature, C
    double t_ambient = 22.0;  // air temperature, C
    double h_conv = 13.5;     // convection + linearised radiation, W/(m^2 K)

    void validate() const;
};

struct BloodConstants {
    double rho_b = 1050.0;  // kg/m^3
    double c_b = 3617.0;    // J/(kg K)

    void validate() const;
};

// Heterogeneous steady conduction with linear perfusion exchange:
//   div(k grad T) + perfusion*(t_blood - T) + source = 0
// on the voxels flagged in `mask`. Faces between mask voxels conduct with
// the harmonic mean of k; `robin_faces[i]` counts faces of voxel i exposed
// to air at t_ambient through h_conv; all other outer faces are adiabatic.
struct ConductionProblem {
    GridDims dims;
    double spacing = 0.0;
    std::vector<std::uint8_t> mask;
    std::vector<double> k;
    std::vector<double> perfusion;  // c_b * omega_t, W/(m^3 K)
    std::vector<double> source;     // metabolic heat, W/m^3
    double t_blood = 37.0;
    std::vector<std::uint8_t> dirichlet;
    std::vector<double> dirichlet_value;
    std::vector<std::uint8_t> robin_faces;
    double h_conv = 0.0;
    double t_ambient = 0.0;

    // Uniform-property helper: all voxels active, nothing fixed, no Robin faces.
    static ConductionProblem box(GridDims dims, double spacing, double k, double perfusion, double source,
                                 double t_blood);
};

// Assembled linear system A x = b over the whole grid, in per-unit-volume
// form (W/m^3). Voxels outside the mask and Dirichlet voxels are identity
// rows; couplings to Dirichlet voxels are moved to the right-hand side, so
// A is symmetric and diagonally dominant.
class DiscreteSystem {
public:
    const GridDims& dims() const noexcept { return dims_; }
    double spacing() const noexcept { return spacing_; }
    std::size_t size() const noexcept { return dims_.size(); }

    double diag(std::size_t i) const noexcept { return diag_[pad_ + i]; }
    // Off-diagonal magnitude between i and its +x / +y / +z neighbour.
    double coupling_x(std::size_t i) const noexcept { return cx_[pad_ + i]; }
    double coupling_y(std::size_t i) const noexcept { return cy_[pad_ + i]; }
    double coupling_z(std::size_t i) const noexcept { return cz_[pad_ + i]; }
    std::span<const double> rhs() const noexcept { return rhs_; }

    std::span<const std::uint8_t> mask() const noexcept { return mask_; }
    // True for unknowns (inside the mask and not fixed).
    std::span<const std::uint8_t> active() const noexcept { return active_; }

    simd::Stencil7 stencil() const noexcept;

    // Padding (elements) required in front of/behind vectors passed to the
    // stencil: x must be readable on [-padding(), size() + padding()).
    std::size_t padding() const noexcept { return pad_; }

    // Bounds implied by the discrete maximum principle.
    double lower_bound() const noexcept { return lower_; }
    double upper_bound() const noexcept { return upper_; }

    // Value to start iterations from: fixed values on identity rows, the
    // mid-bound elsewhere.
    std::vector<double> initial_guess() const;

    void apply(std::span<const double> x_padded, std::span<double> y) const;

private:
    friend DiscreteSystem assemble_system(const ConductionProblem& problem);

    GridDims dims_;
    double spacing_ = 0.0;
    std::size_t pad_ = 0;
    std::vector<double> diag_, cx_, cy_, cz_;
    std::vector<double> rhs_;
    std::vector<std::uint8_t> mask_, active_;
    double lower_ = 0.0, upper_ = 0.0;
};

// Throws AssemblyError when a connected group of unknowns has no Dirichlet
// neighbour and no convective face.
DiscreteSystem assemble_system(const ConductionProblem& problem);

// Per-voxel mixed properties (adipose properties outside the mask).
std::vector<phantom::TissueProperties> voxel_properties(const phantom::VoxelPhantom& phantom,
                                                        const phantom::TissuePair& tissues);

// Number of air-exposed faces per voxel: mask faces bordering a non-mask
// voxel inside the grid. Grid-edge faces of the slab continue into the
// body and are adiabatic; the z = 0 layer is held at t_core.
std::vector<std::uint8_t> exposed_faces(const phantom::VoxelPhantom& phantom);

ConductionProblem phantom_problem(const phantom::VoxelPhantom& phantom,
                                  std::span<const phantom::TissueProperties> properties,
                                  const BoundaryConditions& bc, const BloodConstants& blood);

DiscreteSystem assemble_system(const phantom::VoxelPhantom& phantom,
                               std::span<const phantom::TissueProperties> properties,
                               const BoundaryConditions& bc, const BloodConstants& blood);

}  // namespace thermdens::bioheat
