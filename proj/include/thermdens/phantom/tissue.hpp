#pragma once

namespace thermdens::phantom {

// Thermophysical properties of one tissue type (SI units).
struct TissueProperties {
    double k = 0.0;        // thermal conductivity, W/(m K)
    double q_met = 0.0;    // metabolic heat, W/m^3
    double c = 0.0;        // specific heat, J/(kg K)
    double omega_t = 0.0;  // blood perfusion rate, kg/(s m^3)
    double rho = 0.0;      // density, kg/m^3

    bool all_positive() const noexcept {
        return k > 0 && q_met > 0 && c > 0 && omega_t > 0 && rho > 0;
    }
};

struct TissuePair {
    TissueProperties adipose;
    TissueProperties glandular;
};

// Representative adipose / fibroglandular breast tissue constants.
TissuePair table1_properties() noexcept;

// Linear mixing f*glandular + (1-f)*adipose, field by field.
// Throws DomainError unless 0 <= f <= 1.
TissueProperties mix_properties(double f, const TissueProperties& adipose,
                                const TissueProperties& glandular);

}  // namespace thermdens::phantom
