#pragma once

#include "sschr/singular.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sschr {

/// Rewriting rule lead -> replacement, read off one reduced echelon row of
/// the submodule at a weight: lead equals replacement modulo the submodule.
struct RewritingRule {
    Coordinate lead;
    ModuleVector replacement;
};

/// V / I where I is the submodule generated by a list of vectors, each
/// singular modulo the submodule generated by the preceding ones. I is
/// built weight by weight as the span of the generators, their images under
/// the plus part and the zero part; its reduced echelon rows act as
/// rewriting rules and the remaining coordinates form the quotient basis.
class FactorModule : public WeightModule {
public:
    explicit FactorModule(std::shared_ptr<const VermaModule> verma);

    /// Adds a generator. Throws std::invalid_argument if v is zero in the
    /// quotient, not singular modulo the current submodule, or has a leading
    /// coefficient that is not invertible.
    FactorModule quotient(const ModuleVector& v) const;

    const VermaModule& base() const override { return *verma_; }
    std::shared_ptr<const VermaModule> verma() const { return verma_; }
    std::vector<Coordinate> weightCoordinates(const Weight& w, int sector) const override;
    ModuleVector apply(std::size_t g, const ModuleVector& v) const override;
    ModuleVector apply(const LieElement& x, const ModuleVector& v) const;

    const std::vector<ModuleVector>& generators() const { return generators_; }

    /// Normal form modulo the submodule.
    ModuleVector reduce(const ModuleVector& v) const;
    bool contains(const ModuleVector& v) const { return reduce(v).isZero(); }

    std::size_t submoduleDimension(const Weight& w, int sector) const;
    std::size_t dimension(const Weight& w, int sector) const { return weightCoordinates(w, sector).size(); }
    /// Dimension of the quotient summed over all weights of total degree n
    /// and all sectors (sector 0 only when χ is active).
    std::size_t levelDimension(int n) const;
    std::vector<RewritingRule> rewritingRules(const Weight& w, int sector) const;

private:
    struct Span {
        std::vector<Coordinate> coords;
        ReducedEchelon rref;
    };
    const Span& span(const Weight& w, int sector) const;
    Span computeSpan(const Weight& w, int sector) const;

    std::shared_ptr<const VermaModule> verma_;
    std::vector<ModuleVector> generators_;
    struct Cache {
        std::recursive_mutex mutex;
        std::map<std::pair<Weight, int>, Span> spans;
    };
    std::shared_ptr<Cache> cache_;
};

/// Splits a vector into its (weight, sector) components.
std::map<std::pair<Weight, int>, ModuleVector> homogeneousComponents(const VermaModule& module, const ModuleVector& v);

/// V / U(g) vs. Throws std::invalid_argument when vs is not singular.
FactorModule quotientBySingular(const LowestWeight& lw, const ModuleVector& vs);
FactorModule quotientBySingular(std::shared_ptr<const VermaModule> verma, const ModuleVector& vs);

/// Joint annihilator kernels computed in the reduced basis of the factor module.
std::vector<SingularVectorReport> findSingularInFactor(const FactorModule& fm, int maxDegree);

/// Bracket compatibility of the action on every basis coordinate of total
/// degree <= maxDegree.
ClosureReport verifyModuleClosure(const WeightModule& module, int maxDegree);

struct ChainStep {
    /// Submodule quotiented out, e.g. "I^1".
    std::string submodule;
    /// Resulting module, e.g. "V^d/I^1".
    std::string module;
    ModuleVector generator;
    Weight weight;
    friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

struct ClassificationRecord {
    AlgebraKind kind = AlgebraKind::ssch1;
    Rational d, m, r;
    /// Name of the terminal irreducible module.
    std::string verdict;
    /// Finite dimension, or nullopt for an infinite-dimensional module.
    std::optional<std::size_t> dimension;
    std::vector<ChainStep> chain;
    /// No singular vectors in the terminal module up to the cutoff.
    bool irreducibleUpToCutoff = false;
    /// Quotient dimension per total degree 0..cutoff.
    std::vector<std::size_t> levelDimensions;
    int cutoff = 0;
    friend bool operator==(const ClassificationRecord&, const ClassificationRecord&) = default;
};

/// Runs the quotient chain for the lowest weight, verifying each generator is
/// singular in the current factor module and that the terminal module has no
/// singular vectors up to the cutoff. Supports ssch1 and ssch2.
ClassificationRecord classify(const LowestWeight& lw, int cutoff);
/// The terminal factor module of the chain.
FactorModule terminalModule(const LowestWeight& lw);

/// The relabeling A± -> A∓, R -> -R of ssch2, as images of generators.
std::vector<LieElement> chargeConjugation(const StructureTable& table);

struct IntertwinerReport {
    bool automorphism = false;
    bool bijective = true;
    bool intertwines = true;
    std::size_t checks = 0;
    int maxDegree = 0;
    bool pass() const { return automorphism && bijective && intertwines; }
};

/// For ssch2 at m = 0: Φ(W |0⟩) = τ(W) |0⟩ from 𝓛₊^d to 𝓛₋^d, checked on
/// every basis vector and generator at total degree <= maxDegree.
IntertwinerReport verifyLPlusMinusIsomorphism(const Rational& d, int maxDegree);

struct TrivialActionReport {
    bool pass = true;
    std::size_t checks = 0;
    std::vector<std::string> failing;
};

/// Checks that the named generators act as zero on every basis vector of
/// total degree <= maxDegree.
TrivialActionReport verifyTrivialAction(const WeightModule& module, const std::vector<std::string>& generators,
                                        int maxDegree);

struct GramMatrix {
    Weight weight;
    /// Basis vectors: monomials with coefficient 1, or χ for odd monomials when χ is active.
    std::vector<ModuleVector> basis;
    Matrix entries;
    GaussianRational determinant;
    std::size_t rank = 0;
    bool real = true;
    friend bool operator==(const GramMatrix&, const GramMatrix&) = default;
};

/// (X v0, Y v0) = (v0, ω1(X) Y v0) with ω1(ε, λ), read as the v0 coefficient.
GradedScalar shapovalov(const VermaModule& module, const ModuleVector& a, const ModuleVector& b, int epsilon = 0,
                        int lambda = 0);
GramMatrix gram(const VermaModule& module, const Weight& w, int cutoff, int epsilon = 0, int lambda = 0);

}  // namespace sschr
