#include "curvebasis/opcount.hpp"

namespace curvebasis {
namespace opcount {
namespace {

thread_local std::array<OpCounts, kPhaseCount> t_counts{};
thread_local Phase t_phase = Phase::Other;

} // namespace

void count_mul(std::uint64_t k) { t_counts[static_cast<int>(t_phase)].mul += k; }
void count_inv(std::uint64_t k) { t_counts[static_cast<int>(t_phase)].inv += k; }

std::array<OpCounts, kPhaseCount> snapshot() { return t_counts; }

void reset() { t_counts = {}; }

PhaseScope::PhaseScope(Phase p) : saved_(t_phase) { t_phase = p; }
PhaseScope::~PhaseScope() { t_phase = saved_; }

const char* phase_name(Phase p) {
    switch (p) {
        case Phase::Puiseux: return "puiseux";
        case Phase::LinearAlgebra: return "linear_algebra";
        case Phase::Factorization: return "factorization";
        case Phase::Other: return "other";
    }
    return "other";
}

} // namespace opcount
} // namespace curvebasis
