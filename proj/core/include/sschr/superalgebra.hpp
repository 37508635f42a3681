#pragma once

#include "sschr/scalars.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sschr {

enum class AlgebraKind { sch1, ssch1, ssch2 };

std::string kindName(AlgebraKind kind);
/// Accepts "sch1", "ssch1", "ssch2". Throws std::invalid_argument.
AlgebraKind parseKind(const std::string& text);
/// Number of supercharges: 0, 1 or 2. The weight lattice has rank 1 for N <= 1 and 2 for N = 2.
int superchargeCount(AlgebraKind kind);
int weightRank(AlgebraKind kind);

using Degree = std::vector<int>;

struct Generator {
    std::string name;
    int parity = 0;
    Degree degree;
};

/// Sparse linear combination of generators.
class LieElement {
public:
    LieElement() = default;
    static LieElement basis(std::size_t g, GaussianRational c = 1);

    const std::map<std::size_t, GaussianRational>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    GaussianRational coefficient(std::size_t g) const;

    void add(std::size_t g, const GaussianRational& c);
    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const GaussianRational& c);
    LieElement operator-() const;
    LieElement conj() const;

    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(const GaussianRational& c, LieElement a) { return a *= c; }
    friend bool operator==(const LieElement& a, const LieElement& b) { return a.terms_ == b.terms_; }

private:
    std::map<std::size_t, GaussianRational> terms_;
};

/// Structure constants of a finite-dimensional Z2-graded Lie superalgebra.
/// Brackets are stored once per unordered pair (i <= j); the other order is
/// recovered from super-antisymmetry [y,x} = -(-1)^{|x||y|} [x,y}.
class StructureTable {
public:
    StructureTable(std::string name, std::vector<Generator> generators);

    const std::string& name() const { return name_; }
    std::size_t size() const { return generators_.size(); }
    const Generator& generator(std::size_t g) const { return generators_.at(g); }
    const std::vector<Generator>& generators() const { return generators_; }
    int parity(std::size_t g) const { return generators_.at(g).parity; }
    const Degree& degree(std::size_t g) const { return generators_.at(g).degree; }

    std::size_t indexOf(const std::string& name) const;
    std::optional<std::size_t> find(const std::string& name) const;
    LieElement gen(const std::string& name, GaussianRational c = 1) const;

    /// Sets [x,y} (and implicitly [y,x}).
    void setBracket(std::size_t x, std::size_t y, const LieElement& value);
    void setBracket(const std::string& x, const std::string& y, const LieElement& value);

    LieElement bracket(std::size_t x, std::size_t y) const;
    LieElement bracket(const LieElement& x, const LieElement& y) const;

    /// Unordered pairs with a nonzero stored bracket, i <= j.
    std::vector<std::pair<std::size_t, std::size_t>> nonzeroPairs() const;

    /// Parity of a homogeneous element; nullopt for zero or mixed elements.
    std::optional<int> parityOf(const LieElement& x) const;

    std::string render(const LieElement& x) const;

private:
    std::string name_;
    std::vector<Generator> generators_;
    std::map<std::pair<std::size_t, std::size_t>, LieElement> brackets_;
};

/// Built-in tables. ssch2 is returned in the basis {Q±, S±, X±, R}, obtained
/// from the R12 presentation by the basis change R = i R12, A± = (A1 ± i A2)/sqrt 2.
StructureTable buildAlgebra(AlgebraKind kind);
/// The N = 2 table in its original presentation with Q_j, S_j, X_j and R12.
StructureTable buildSsch2Original();
/// Same algebra built directly from the ± relations, used to cross-check the basis change.
StructureTable buildSsch2PlusMinus();

struct JacobiReport {
    bool pass = true;
    std::size_t triplesChecked = 0;
    std::vector<std::array<std::size_t, 3>> failures;
    friend bool operator==(const JacobiReport&, const JacobiReport&) = default;
};

JacobiReport verifySuperJacobi(const StructureTable& table);

struct PairCheckReport {
    bool pass = true;
    std::size_t pairsChecked = 0;
    std::vector<std::pair<std::size_t, std::size_t>> failures;
    friend bool operator==(const PairCheckReport&, const PairCheckReport&) = default;
};

/// bracket(x,y) + (-1)^{|x||y|} bracket(y,x) == 0 on every generator pair.
PairCheckReport verifyAntisymmetry(const StructureTable& table);
/// deg [x,y} == deg x + deg y and parity additivity whenever the bracket is nonzero.
PairCheckReport verifyGrading(const StructureTable& table);

struct TriangularParts {
    std::vector<std::size_t> plus;
    std::vector<std::size_t> zero;
    std::vector<std::size_t> minus;
};

/// Splits generators by the sign of the first nonzero degree entry.
TriangularParts triangularDecompose(const StructureTable& table);

/// True when the span of the named generators is closed under the bracket.
bool closesUnderBracket(const StructureTable& table, const std::vector<std::string>& names);

}  // namespace sschr
