#pragma once

#include "sschr/scalars.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace sschr {

/// An odd generator; square == 0 makes it Grassmann, otherwise Clifford.
struct OddGenerator {
    std::string name;
    Rational square{0};
};

/// Sorted multi-index over the generators of an OddVariableAlgebra, one bit per generator.
using OddMask = std::uint32_t;

/// Exterior/Clifford algebra on pairwise anticommuting odd generators with
/// diagonal squares. Basis blades are indexed by OddMask in increasing
/// generator order.
class OddVariableAlgebra {
public:
    explicit OddVariableAlgebra(std::vector<OddGenerator> generators);

    std::size_t size() const { return generators_.size(); }
    const OddGenerator& generator(std::size_t k) const { return generators_.at(k); }
    std::size_t indexOf(const std::string& name) const;

    struct BladeProduct {
        OddMask mask = 0;
        GaussianRational factor;  // sign times product of squares; zero if a Grassmann square appears
    };
    /// e_A * e_B for sorted blades A, B.
    BladeProduct multiply(OddMask a, OddMask b) const;

    std::string renderBlade(OddMask mask) const;

private:
    std::vector<OddGenerator> generators_;
};

inline int bladeParity(OddMask m) { return __builtin_popcount(m) & 1; }

/// Number of set bits of `mask` strictly below bit `k`.
inline int bitsBelow(OddMask mask, int k) { return __builtin_popcount(mask & ((OddMask{1} << k) - 1)); }

/// Element of an OddVariableAlgebra.
class OddElement {
public:
    OddElement() = default;
    explicit OddElement(std::shared_ptr<const OddVariableAlgebra> algebra) : algebra_(std::move(algebra)) {}

    static OddElement scalar(std::shared_ptr<const OddVariableAlgebra> algebra, GaussianRational c);
    static OddElement generator(std::shared_ptr<const OddVariableAlgebra> algebra, std::size_t k);

    const std::map<OddMask, GaussianRational>& terms() const { return terms_; }
    const OddVariableAlgebra& algebra() const { return *algebra_; }
    bool isZero() const { return terms_.empty(); }

    void add(OddMask mask, const GaussianRational& c);

    OddElement& operator+=(const OddElement& o);
    OddElement& operator-=(const OddElement& o);
    friend OddElement operator+(OddElement a, const OddElement& b) { return a += b; }
    friend OddElement operator-(OddElement a, const OddElement& b) { return a -= b; }
    friend OddElement operator*(const OddElement& a, const OddElement& b);
    friend OddElement operator*(const GaussianRational& c, OddElement a);
    friend bool operator==(const OddElement& a, const OddElement& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    void checkSame(const OddElement& o) const;

    std::shared_ptr<const OddVariableAlgebra> algebra_;
    std::map<OddMask, GaussianRational> terms_;
};

/// Product with the Koszul rule and Clifford squares substituted.
OddElement oddProduct(const OddElement& x, const OddElement& y);

}  // namespace sschr
