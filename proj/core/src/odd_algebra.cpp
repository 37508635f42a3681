#include "sschr/odd_algebra.hpp"

#include <stdexcept>

namespace sschr {

OddVariableAlgebra::OddVariableAlgebra(std::vector<OddGenerator> generators)
    : generators_(std::move(generators)) {
    if (generators_.size() > 31) throw std::invalid_argument("too many odd generators");
}

std::size_t OddVariableAlgebra::indexOf(const std::string& name) const {
    for (std::size_t k = 0; k < generators_.size(); ++k)
        if (generators_[k].name == name) return k;
    throw std::invalid_argument("unknown odd generator '" + name + "'");
}

OddVariableAlgebra::BladeProduct OddVariableAlgebra::multiply(OddMask a, OddMask b) const {
    // Moving each generator of b leftward past the generators of a that sit above it.
    int swaps = 0;
    for (int k = 0; k < static_cast<int>(generators_.size()); ++k)
        if (b & (OddMask{1} << k)) swaps += __builtin_popcount(a >> (k + 1));
    GaussianRational factor = (swaps & 1) ? -1 : 1;
    OddMask common = a & b;
    for (int k = 0; common; ++k, common >>= 1) {
        if (!(common & 1)) continue;
        const Rational& sq = generators_[k].square;
        if (sgn(sq) == 0) return {0, GaussianRational(0)};
        factor *= GaussianRational(sq);
    }
    return {a ^ b, factor};
}

std::string OddVariableAlgebra::renderBlade(OddMask mask) const {
    std::string out;
    for (std::size_t k = 0; k < generators_.size(); ++k) {
        if (!(mask & (OddMask{1} << k))) continue;
        if (!out.empty()) out += " ";
        out += generators_[k].name;
    }
    return out.empty() ? "1" : out;
}

OddElement OddElement::scalar(std::shared_ptr<const OddVariableAlgebra> algebra, GaussianRational c) {
    OddElement e(std::move(algebra));
    e.add(0, c);
    return e;
}

OddElement OddElement::generator(std::shared_ptr<const OddVariableAlgebra> algebra, std::size_t k) {
    if (k >= algebra->size()) throw std::out_of_range("odd generator index");
    OddElement e(std::move(algebra));
    e.add(OddMask{1} << k, 1);
    return e;
}

void OddElement::add(OddMask mask, const GaussianRational& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.try_emplace(mask, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

void OddElement::checkSame(const OddElement& o) const {
    if (algebra_ && o.algebra_ && algebra_ != o.algebra_)
        throw std::invalid_argument("odd elements from different algebra instances");
}

OddElement& OddElement::operator+=(const OddElement& o) {
    checkSame(o);
    if (!algebra_) algebra_ = o.algebra_;
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

OddElement& OddElement::operator-=(const OddElement& o) {
    checkSame(o);
    if (!algebra_) algebra_ = o.algebra_;
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

OddElement operator*(const OddElement& a, const OddElement& b) {
    a.checkSame(b);
    OddElement out(a.algebra_ ? a.algebra_ : b.algebra_);
    if (a.isZero() || b.isZero()) return out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            auto p = out.algebra_->multiply(ma, mb);
            if (!p.factor.isZero()) out.add(p.mask, ca * cb * p.factor);
        }
    return out;
}

OddElement operator*(const GaussianRational& c, OddElement a) {
    if (c.isZero()) return OddElement(a.algebra_);
    for (auto& [m, v] : a.terms_) v *= c;
    return a;
}

OddElement oddProduct(const OddElement& x, const OddElement& y) { return x * y; }

std::string OddElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")";
        if (m) out += " " + algebra_->renderBlade(m);
    }
    return out;
}

}  // namespace sschr
