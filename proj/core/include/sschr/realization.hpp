#pragma once

#include "sschr/odd_algebra.hpp"
#include "sschr/superalgebra.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sschr {

/// t^t x^x e_odd.
struct SuperMonomial {
    int t = 0;
    int x = 0;
    OddMask odd = 0;
    auto operator<=>(const SuperMonomial&) const = default;
};

/// Polynomial in the even variables t, x with coefficients in an odd
/// variable algebra.
class SuperPoly {
public:
    SuperPoly() = default;
    explicit SuperPoly(std::shared_ptr<const OddVariableAlgebra> vars) : vars_(std::move(vars)) {}

    static SuperPoly monomial(std::shared_ptr<const OddVariableAlgebra> vars, SuperMonomial mono,
                              GaussianRational c = 1);
    static SuperPoly constant(std::shared_ptr<const OddVariableAlgebra> vars, GaussianRational c);
    /// "t", "x" or the name of an odd variable.
    static SuperPoly variable(std::shared_ptr<const OddVariableAlgebra> vars, const std::string& name);

    const std::map<SuperMonomial, GaussianRational>& terms() const { return terms_; }
    const std::shared_ptr<const OddVariableAlgebra>& vars() const { return vars_; }
    bool isZero() const { return terms_.empty(); }
    void add(const SuperMonomial& mono, const GaussianRational& c);

    /// Parity of a homogeneous polynomial; nullopt for zero or mixed.
    std::optional<int> parity() const;
    /// Largest t + x + number of odd factors over the terms; -1 for zero.
    int degree() const;

    SuperPoly& operator+=(const SuperPoly& o);
    SuperPoly& operator-=(const SuperPoly& o);
    friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
    friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
    friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b);
    friend SuperPoly operator*(const GaussianRational& c, SuperPoly a);
    friend bool operator==(const SuperPoly& a, const SuperPoly& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    std::shared_ptr<const OddVariableAlgebra> vars_;
    std::map<SuperMonomial, GaussianRational> terms_;
};

/// ∂t^t ∂x^x ∂_{k1} ... ∂_{kr} with k1 < ... < kr; the odd derivatives act
/// rightmost first.
struct DerivativeWord {
    int t = 0;
    int x = 0;
    OddMask odd = 0;
    auto operator<=>(const DerivativeWord&) const = default;
};

/// Finite sum of coefficient * derivative word, the coefficient acting by
/// left multiplication. Odd derivatives are left derivatives with Koszul
/// signs and are defined only for Grassmann variables.
class SuperDiffOp {
public:
    SuperDiffOp() = default;
    explicit SuperDiffOp(std::shared_ptr<const OddVariableAlgebra> vars) : vars_(std::move(vars)) {}

    static SuperDiffOp multiplication(const SuperPoly& f);
    static SuperDiffOp scalar(std::shared_ptr<const OddVariableAlgebra> vars, GaussianRational c);
    /// "t", "x" or the name of a Grassmann variable. Throws std::invalid_argument for Clifford variables.
    static SuperDiffOp partial(std::shared_ptr<const OddVariableAlgebra> vars, const std::string& name);

    const std::map<DerivativeWord, SuperPoly>& terms() const { return terms_; }
    const std::shared_ptr<const OddVariableAlgebra>& vars() const { return vars_; }
    bool isZero() const { return terms_.empty(); }

    SuperPoly apply(const SuperPoly& f) const;
    /// Parity of a homogeneous operator; nullopt for zero or mixed.
    std::optional<int> parity() const;

    SuperDiffOp& operator+=(const SuperDiffOp& o);
    SuperDiffOp& operator-=(const SuperDiffOp& o);
    friend SuperDiffOp operator+(SuperDiffOp a, const SuperDiffOp& b) { return a += b; }
    friend SuperDiffOp operator-(SuperDiffOp a, const SuperDiffOp& b) { return a -= b; }
    /// Left multiplication of every coefficient.
    friend SuperDiffOp operator*(const SuperPoly& f, const SuperDiffOp& op);
    friend SuperDiffOp operator*(const GaussianRational& c, SuperDiffOp op);

    std::string str() const;

private:
    void add(const DerivativeWord& w, const SuperPoly& c);

    std::shared_ptr<const OddVariableAlgebra> vars_;
    std::map<DerivativeWord, SuperPoly> terms_;
};

struct Realization {
    AlgebraKind kind = AlgebraKind::ssch1;
    Rational d, m;
    std::shared_ptr<const OddVariableAlgebra> vars;
    StructureTable table;
    /// Indexed like the generators of table.
    std::vector<SuperDiffOp> ops;

    const SuperDiffOp& op(const std::string& name) const { return ops.at(table.indexOf(name)); }
    SuperDiffOp& op(const std::string& name) { return ops.at(table.indexOf(name)); }
};

/// Vector field realization on (t, x, θ, η) with {η,η} = −m for ssch1, and on
/// (t, x, θ, φ, ρ) for ssch2. Throws std::invalid_argument for sch1.
Realization buildRealization(AlgebraKind kind, const Rational& d, const Rational& m);

/// All monomials t^a x^b e_A with a + b + |A| <= maxDegree.
std::vector<SuperPoly> superMonomials(const std::shared_ptr<const OddVariableAlgebra>& vars, int maxDegree);

struct RelationFailure {
    std::string relation;
    std::string monomial;
    std::string residual;
    friend bool operator==(const RelationFailure&, const RelationFailure&) = default;
};

struct RealizationReport {
    bool pass = true;
    bool parityAdditive = true;
    std::size_t pairsChecked = 0;
    std::size_t monomialsChecked = 0;
    int testedDegree = 0;
    /// Each operator raises degree by at most 2, so the identities are
    /// certified on polynomials of degree <= testedDegree - 2.
    int certifiedDegree = 0;
    std::vector<RelationFailure> failures;
    friend bool operator==(const RealizationReport&, const RealizationReport&) = default;
};

/// Checks X(Y f) − (−1)^{|X||Y|} Y(X f) = [X,Y}(f) for every generator pair
/// and every monomial f of degree <= maxPolyDegree, together with parity
/// additivity of the compositions.
RealizationReport verifyRelations(const Realization& realization, const StructureTable& table, int maxPolyDegree);

/// χ = s(φ + ∂φ), η = s(φ − ∂φ) with a formal even scalar s, s² = m/2.
struct ChiEtaReport {
    Rational m;
    SuperDiffOp chiUnit;
    SuperDiffOp etaUnit;
    bool chiSquare = false;
    bool etaSquare = false;
    bool anticommute = false;
    bool pass() const { return chiSquare && etaSquare && anticommute; }
};

ChiEtaReport chiEtaFromPhi(const Rational& m);

}  // namespace sschr
