#pragma once

#include "sschr/linalg.hpp"
#include "sschr/superalgebra.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace sschr {

struct LowestWeight {
    AlgebraKind kind = AlgebraKind::ssch1;
    Rational d{0};
    Rational m{0};
    Rational r{0};
    /// Value of χ² for ssch1; m/2 when unset.
    std::optional<Rational> chiSquare;
};

/// Exponents of the plus generators in PBW order, applied to v0:
/// sch1 G^k K^l, ssch1 G^k K^l S^a, ssch2 G^k K^l S+^a S-^b X+^c.
using Monomial = std::vector<int>;
/// Weight relative to the lowest weight: n for N <= 1, (n1, n2) for N = 2.
using Weight = std::vector<int>;

/// Sparse combination of basis monomials with coefficients kept to the left.
class ModuleVector {
public:
    ModuleVector() = default;
    static ModuleVector basis(Monomial mono, GradedScalar c = 1);

    const std::map<Monomial, GradedScalar>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    GradedScalar coefficient(const Monomial& mono) const;
    /// Lexicographically greatest monomial; throws on the zero vector.
    const Monomial& leading() const;

    void add(const Monomial& mono, const GradedScalar& c);
    ModuleVector& operator+=(const ModuleVector& o);
    ModuleVector& operator-=(const ModuleVector& o);
    ModuleVector operator-() const;
    friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
    friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
    friend ModuleVector operator*(const GradedScalar& c, const ModuleVector& v);
    friend bool operator==(const ModuleVector& a, const ModuleVector& b) { return a.terms_ == b.terms_; }

private:
    std::map<Monomial, GradedScalar> terms_;
};

/// One rational coordinate of a weight space: the even part (comp 0) or the
/// χ part (comp 1) of the coefficient of a monomial.
struct Coordinate {
    Monomial mono;
    int comp = 0;
    friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

/// A weight module realized on (a subset of) the Verma basis: the Verma
/// module itself or one of its factor modules.
class WeightModule {
public:
    virtual ~WeightModule() = default;
    virtual const class VermaModule& base() const = 0;
    /// Coordinates spanning the weight space in a total-parity sector.
    virtual std::vector<Coordinate> weightCoordinates(const Weight& w, int sector) const = 0;
    virtual ModuleVector apply(std::size_t g, const ModuleVector& v) const = 0;
    /// Sectors that have to be searched: {0} when χ identifies the two, else {0, 1}.
    std::vector<int> sectors() const;
};

/// The Verma module V^d (N = 1) or V^{d,r} (N = 2), or the Sch(1) module.
/// Generators act through a normal-ordering engine driven solely by the
/// structure table; results are memoized per (generator, monomial).
class VermaModule : public WeightModule {
public:
    explicit VermaModule(LowestWeight lw);

    const VermaModule& base() const override { return *this; }
    std::vector<Coordinate> weightCoordinates(const Weight& w, int sector) const override {
        return coordinates(w, sector, w.at(0));
    }
    ModuleVector apply(std::size_t g, const ModuleVector& v) const override { return act(g, v); }

    const LowestWeight& lowestWeight() const { return lw_; }
    AlgebraKind kind() const { return lw_.kind; }
    const StructureTable& algebra() const { return table_; }
    const TriangularParts& parts() const { return parts_; }
    /// Plus generators in PBW order.
    const std::vector<std::size_t>& plusOrder() const { return plusOrder_; }
    std::size_t generatorIndex(const std::string& name) const { return table_.indexOf(name); }

    /// True when coefficients carry a nonzero odd scalar χ (ssch1 with m ≠ 0).
    bool chiActive() const { return chiActive_; }
    const ChiRing& chiRing() const { return *ring_; }
    GradedScalar chi() const;

    int parity(const Monomial& mono) const;
    Weight weight(const Monomial& mono) const;
    Weight generatorWeight(std::size_t g) const;
    /// k + 2l, the part of the degree carried by G and K.
    int bosonicDegree(const Monomial& mono) const;
    Monomial vacuum() const { return Monomial(plusOrder_.size(), 0); }
    Monomial monomial(const std::vector<int>& exps) const;

    ModuleVector act(std::size_t g, const Monomial& mono) const;
    ModuleVector act(std::size_t g, const ModuleVector& v) const;
    ModuleVector act(const LieElement& x, const ModuleVector& v) const;
    ModuleVector act(const std::string& g, const ModuleVector& v) const { return act(table_.indexOf(g), v); }

    /// g1 g2 ... gk v0, applied right to left.
    ModuleVector normalOrder(const std::vector<std::string>& word) const;
    ModuleVector normalOrder(const std::vector<std::size_t>& word) const;

    /// Monomials of the given weight with k + 2l <= cutoff, leading first
    /// (descending lexicographic order).
    std::vector<Monomial> subspaceBasis(const Weight& w, int cutoff) const;
    /// Weights of total degree 0..maxDegree that can carry monomials.
    std::vector<Weight> weightsUpTo(int maxDegree) const;

    /// Rational coordinates of the weight space in the given total-parity
    /// sector. Without χ every monomial contributes one coordinate; with χ a
    /// monomial of parity p contributes its (p + sector) mod 2 component.
    std::vector<Coordinate> coordinates(const Weight& w, int sector, int cutoff) const;
    std::vector<GaussianRational> toCoordinates(const ModuleVector& v, const std::vector<Coordinate>& basis) const;
    ModuleVector fromCoordinates(const std::vector<GaussianRational>& x, const std::vector<Coordinate>& basis) const;

    std::string renderMonomial(const Monomial& mono) const;
    std::string render(const ModuleVector& v) const;

private:
    ModuleVector actUncached(std::size_t g, const Monomial& mono) const;
    ModuleVector actOnVacuum(std::size_t g) const;

    LowestWeight lw_;
    StructureTable table_;
    TriangularParts parts_;
    std::vector<std::size_t> plusOrder_;
    std::vector<int> plusSlot_;  // generator -> PBW slot or -1
    bool chiActive_ = false;
    const ChiRing* ring_ = nullptr;

    struct Cache {
        std::mutex mutex;
        std::map<std::pair<std::size_t, Monomial>, ModuleVector> entries;
    };
    std::unique_ptr<Cache> cache_;
};

/// Closed-form action table of ssch1 on v_{k,l} and ν_{k,l}, used as an
/// independent oracle for the engine. Supports H, P, G, D, K, M, Q, S, X.
ModuleVector closedFormActionN1(const VermaModule& module, const std::string& g, const Monomial& mono);

struct ClosureReport {
    bool pass = true;
    std::size_t checks = 0;
    struct Failure {
        std::size_t x, y;
        Monomial mono;
    };
    std::vector<Failure> failures;
};

/// act(X, act(Y, v)) - (-1)^{|X||Y|} act(Y, act(X, v)) == act([X,Y}, v) for
/// all generator pairs and all monomials of total degree <= maxDegree.
ClosureReport verifyRepresentationClosure(const VermaModule& module, int maxDegree);

}  // namespace sschr
