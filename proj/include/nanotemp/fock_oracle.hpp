#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nanotemp/chain.hpp"

namespace nanotemp {

// Enumeration of the truncated product number-state basis: every group
// normal mode carries occupations 0..local_dim-1, so the total dimension
// is local_dim^(n*N_G). Construction fails beyond the cap.
class TruncatedBasis {
public:
    static constexpr std::size_t kDefaultCap = 20000;

    TruncatedBasis(const ChainParams& params, int local_dim,
                   std::size_t dimension_cap = kDefaultCap);

    const ChainParams& params() const { return params_; }
    int local_dim() const { return local_dim_; }
    std::size_t dimension() const { return dimension_; }
    int mode_count() const { return mode_count_; }

    // Mixed-radix decode: occupation of mode (group*n + mode) in state idx.
    std::vector<int> occupations_of(std::size_t idx) const;
    std::size_t index_of(const std::vector<std::vector<long long>>& occ) const;

private:
    ChainParams params_;
    int local_dim_;
    int mode_count_;
    std::size_t dimension_;
};

// Moment quantities of a product state under the full chain Hamiltonian,
// computed exactly by ladder-operator algebra on the boundary position
// operators (no truncation enters the values; the flag reports whether the
// state sits close enough to the basis cap that a truncated dense
// diagonalization would leak weight).
struct MomentSet {
    double eps_a = 0.0;
    double sigma2_a = 0.0;
    double y_a = 0.0;  // E_a + eps_a
    std::vector<double> eps_mu;
    std::vector<double> sigma2_mu;
    std::vector<double> sigma2_tilde_mu;
    bool truncation_leakage = false;
};

MomentSet moments(const TruncatedBasis& basis, const OccupationState& state);

// Exact sigma_mu^2 of one group against the Debye closed form
// 4*n^-2*E_mu*E_{mu+1}, reported under both energy conventions (E_mu with
// and without the zero-point offset).
struct SigmaDebyeComparison {
    double sigma2_exact;
    double debye_with_zero_point;
    double debye_thermal_only;
    double rel_dev_with_zero_point;
    double rel_dev_thermal_only;
};

SigmaDebyeComparison sigma_debye_check(const ChainParams& params,
                                       const OccupationState& state,
                                       int group_index = 0);

// Conditional energy distribution w_a(E): spectral weights |<a|phi>|^2 of a
// product state over the eigenstates of the truncated full Hamiltonian.
// Moments come from the unbinned weights; the histogram uses the
// Freedman-Diaconis rule on the weighted eigenvalue sample.
struct WDistribution {
    std::vector<double> bin_edges;
    std::vector<double> bin_weights;
    double mean = 0.0;
    double variance = 0.0;
    double skewness = 0.0;
    double weight_sum = 0.0;
    bool truncation_leakage = false;
};

WDistribution w_distribution(const TruncatedBasis& basis,
                             const OccupationState& state);

// Diagonal weight of the canonical density matrix in the product basis,
// exp(-beta*y + beta^2*sigma^2/2) * erfc((E0 - y + beta*sigma^2)/(sqrt(2)*sigma)) / 2,
// evaluated in log space; the erfc switches to its asymptotic series for
// |x| > 25 so the weight neither overflows nor underflows prematurely.
// Normalization Z is left to the caller.
struct RhoDiagonal {
    double log_weight;  // always finite for valid inputs
    double weight;      // exp(log_weight), may round to 0 or inf
};

RhoDiagonal rho_diagonal(double y_a, double sigma_a, double beta, double E0);

// Scans max |<a|rho|b>| over basis pairs with |E_a - E_b| > sigma_a + sigma_b
// and reports it relative to the smallest diagonal element.
struct OffdiagReport {
    double max_offdiag = 0.0;
    double min_diag = 0.0;
    double ratio = 0.0;
    std::size_t pairs_considered = 0;
};

OffdiagReport offdiag_scan(const TruncatedBasis& basis, double beta);

// Verification battery used by the CLI `verify` command.
struct VerificationResult {
    std::string name;
    bool passed;
    std::string detail;
};

std::vector<VerificationResult> run_verification(
    std::size_t dimension_cap = TruncatedBasis::kDefaultCap);

}  // namespace nanotemp
