#ifndef CURVEBASIS_OPCOUNT_HPP
#define CURVEBASIS_OPCOUNT_HPP

#include <array>
#include <cstdint>
#include <string>

namespace curvebasis {

/// Cost attribution for the operation-count reports. Field multiplications
/// and inversions are tallied per phase; one extension-field operation counts
/// as one operation, matching the arithmetic cost model of the analysis.
enum class Phase : int { Puiseux = 0, LinearAlgebra = 1, Factorization = 2, Other = 3 };

constexpr int kPhaseCount = 4;

struct OpCounts {
    std::uint64_t mul = 0;
    std::uint64_t inv = 0;

    OpCounts& operator+=(const OpCounts& o) {
        mul += o.mul;
        inv += o.inv;
        return *this;
    }
    friend OpCounts operator-(OpCounts a, const OpCounts& b) {
        return OpCounts{a.mul - b.mul, a.inv - b.inv};
    }
};

struct OpCountReport {
    std::array<OpCounts, kPhaseCount> phases{};
    double wall_ms = 0.0;

    OpCounts total() const {
        OpCounts t;
        for (const auto& p : phases) t += p;
        return t;
    }
};

namespace opcount {

void count_mul(std::uint64_t k = 1);
void count_inv(std::uint64_t k = 1);

/// Snapshot of the thread-local counters; subtract two to get a report.
std::array<OpCounts, kPhaseCount> snapshot();
void reset();

/// RAII phase marker; nested scopes attribute cost to the innermost phase.
class PhaseScope {
public:
    explicit PhaseScope(Phase p);
    ~PhaseScope();
    PhaseScope(const PhaseScope&) = delete;
    PhaseScope& operator=(const PhaseScope&) = delete;

private:
    Phase saved_;
};

const char* phase_name(Phase p);

} // namespace opcount
} // namespace curvebasis

#endif
