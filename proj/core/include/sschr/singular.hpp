#pragma once

#include "sschr/verma.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sschr {

/// Lowering generators whose joint kernel defines singularity.
/// sch1 {H, P}, ssch1 {Q, P}, ssch2 {Q+, Q-, P, X-}.
std::vector<std::size_t> annihilatorSpec(const VermaModule& module);

struct SingularVectorReport {
    Weight weight;
    /// Total-parity sector searched (always 0 when χ is active).
    int sector = 0;
    std::size_t kernelDimension = 0;
    /// Kernel basis in reduced echelon form: each vector's leading coordinate is 1.
    std::vector<ModuleVector> vectors;
    /// Label of the closed form the kernel matches, or "none".
    std::string matchedClosedForm = "none";
    /// closed form = proportionality * vectors[0] when matched with a single vector.
    std::optional<GradedScalar> proportionality;
    /// The kernel equals the span of the predicted closed forms.
    bool matchesPrediction = false;
    std::size_t predictedDimension = 0;
    /// Every vector was re-checked against each annihilator through act.
    bool reverified = false;
    int cutoff = 0;
    friend bool operator==(const SingularVectorReport&, const SingularVectorReport&) = default;
};

/// Joint kernel of the annihilators on one weight space and sector, in
/// reduced echelon form over the module's coordinates.
std::vector<ModuleVector> jointKernel(const WeightModule& module, const Weight& w, int sector,
                                      const std::vector<std::size_t>& annihilators);

/// Reports for every weight of total degree <= maxDegree other than the v0
/// weight and every sector where the kernel or the closed-form prediction is
/// nonzero, compared against the closed forms applicable to the lowest weight.
std::vector<SingularVectorReport> findSingular(const VermaModule& module, int maxDegree);
std::vector<SingularVectorReport> findSingular(const LowestWeight& lw, int maxDegree);

/// Same search on an arbitrary weight module; no closed-form matching.
std::vector<SingularVectorReport> findSingularIn(const WeightModule& module, int maxDegree);

/// True when every annihilator kills v.
bool isSingular(const WeightModule& module, const ModuleVector& v);

/// (G^2 - 2mK)^p (G - 2χS) v0 for m ≠ 0 (requires d = p - 1/2), G^p v0 for
/// m = 0 (requires p >= 1). Throws std::invalid_argument otherwise.
ModuleVector closedFormN1(int p, const VermaModule& module);
/// G^p S v0, singular for m = 0 when d = p.
ModuleVector closedFormN1Odd(int p, const VermaModule& module);
/// (G^2 - 2mK)^p u0 with u0 = (G S- X+ + m S+ S- + 2mK) v0
/// + ((d+r+1)/(2d+1)) (G^2 - 2mK) v0, for m ≠ 0 and d = p + 1/2.
/// For m = 0 returns G^p X+ v0.
ModuleVector closedFormN2(int p, const VermaModule& module);
/// G^p S- X+ v0, singular for m = 0 when r = d - p - 1.
ModuleVector closedFormN2Extra(int p, const VermaModule& module);
/// G^p v0 + (p/(p - d + r)) G^{p-1} S- X+ v0, singular for m = 0, p >= 1 and r ≠ d - p.
ModuleVector closedFormN2Mixed(int p, const VermaModule& module);
/// (G X+ - m S+) v0, singular for m ≠ 0 when r = -d - 1.
ModuleVector closedFormN2Odd(const VermaModule& module);
/// (G^2 - 2mK)^p v0 for m ≠ 0 (requires d = p - 3/2), G^p v0 for m = 0; p >= 1.
ModuleVector closedFormSch1(int p, const VermaModule& module);

struct LabeledVector {
    std::string label;
    ModuleVector vector;
};

/// All closed-form singular vectors predicted at weight w and sector, with labels
/// prop2-massive, prop2-massless, prop2-massless-odd, prop4-massive,
/// prop4-massive-odd, prop4-massless, prop4-massless-extra,
/// prop4-massless-mixed, sminus (S- v0 at r = d), prop1-massive, prop1-massless.
std::vector<LabeledVector> expectedSingular(const VermaModule& module, const Weight& w, int sector);

struct RecurrenceCoefficients {
    Rational alpha{1};
    Rational beta{0};
    Rational gamma{0};
    Rational delta{0};
    /// a_0..a_p; empty means the binomial coefficients of (G^2 - 2mK)^p.
    std::vector<Rational> a;
};

/// α = 1, β = m, γ = (d+r+1)/(2d+1), δ = 2m(1 - γ) with d = p + 1/2.
RecurrenceCoefficients solvedCoefficients(int p, const LowestWeight& lw);

struct RecurrenceReport {
    /// pass[i] for rec(i+1), over ℓ = 0..p.
    bool pass[5] = {true, true, true, true, true};
    struct Failure {
        int recurrence;
        int ell;
        Rational residual;
    };
    std::vector<Failure> failures;
    bool dHolds = false;
    bool betaHolds = false;
    bool gammaHolds = false;
    bool deltaHolds = false;
    bool allRecurrences() const { return pass[0] && pass[1] && pass[2] && pass[3] && pass[4]; }
    bool all() const { return allRecurrences() && dHolds && betaHolds && gammaHolds && deltaHolds; }
};

/// Checks the five recurrences of the (2,0) ansatz and the solved constraints
/// for n = 2p. Requires lw.kind == ssch2 and m ≠ 0.
RecurrenceReport checkRecurrences(int p, const LowestWeight& lw, const RecurrenceCoefficients& c);

}  // namespace sschr
