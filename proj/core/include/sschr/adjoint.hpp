#pragma once

#include "sschr/superalgebra.hpp"

#include <string>
#include <vector>

namespace sschr {

enum class AdjointKind { omega1, omega2, sigma1, sigma2 };

std::string adjointName(AdjointKind kind);
AdjointKind parseAdjoint(const std::string& text);

/// A candidate (grade) adjoint operation given by its images on generators.
struct AdjointMap {
    std::string name;
    int epsilon = 0;
    int lambda = 0;
    bool antilinear = false;
    /// Expected square: +id on all generators, or the parity involution (-1)^{|g|}.
    bool squareIsParity = false;
    std::vector<LieElement> images;
};

/// Images of the paper's maps, completed on generators not listed explicitly
/// by the involution property. Throws std::invalid_argument when the map is
/// not defined for the algebra (σ maps on sch1/ssch1).
AdjointMap buildAdjoint(const StructureTable& table, AdjointKind kind, int epsilon = 0, int lambda = 0);
/// Same images with the linearity flag forced.
AdjointMap buildAdjoint(const StructureTable& table, AdjointKind kind, int epsilon, int lambda, bool antilinear);
/// The identity map, as a negative control.
AdjointMap identityMap(const StructureTable& table);

LieElement applyAdjoint(const AdjointMap& map, const LieElement& x);

enum class SignConvention {
    /// σ([x,y}) = [σ(y), σ(x)}
    plain,
    /// σ([x,y}) = (-1)^{|x||y|} [σ(y), σ(x)}
    graded,
};

struct AdjointReport {
    std::string name;
    bool involutionHolds = true;
    std::vector<std::size_t> involutionFailures;
    bool plainHolds = true;
    bool gradedHolds = true;
    std::vector<std::pair<std::size_t, std::size_t>> plainFailures;
    std::vector<std::pair<std::size_t, std::size_t>> gradedFailures;
    /// Part-wise image check: plus ↔ minus exchanged (ω1, σ1) or each part kept (ω2, σ2).
    bool exchangesTriangularParts = false;
    bool preservesTriangularParts = false;
    bool pass() const { return involutionHolds && (plainHolds || gradedHolds); }
    std::string convention() const;
};

AdjointReport verifyAdjoint(const StructureTable& table, const AdjointMap& map);

}  // namespace sschr
