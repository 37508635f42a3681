#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace sschr {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q > 0) exactly. Throws std::invalid_argument.
Rational parseRational(std::string_view text);
/// Canonical text: "p" for integers, "p/q" otherwise.
std::string formatRational(const Rational& q);

/// An element re + im*i of Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(int n) : re_(n), im_(0) {}

    static GaussianRational i() { return {0, 1}; }
    /// Accepts "p/q", "p/q+r/s i", "r/s i", "i", "-i", "1-2i".
    static GaussianRational parse(std::string_view text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool isZero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool isReal() const { return sgn(im_) == 0; }
    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Coefficient ring Q(i)[chi] / (chi^2 - c) for one odd generator chi.
/// Instances are interned by the value of chi^2 and live for the whole process,
/// so scalars can refer to them by plain pointer.
class ChiRing {
public:
    static const ChiRing& withChiSquare(const Rational& chiSquare);
    /// The ring attached to mass m, with chi^2 = m/2.
    static const ChiRing& forMass(const Rational& m) { return withChiSquare(m / 2); }

    const Rational& chiSquare() const { return chiSquare_; }
    Rational mass() const { return 2 * chiSquare_; }

    explicit ChiRing(Rational chiSquare) : chiSquare_(std::move(chiSquare)) {}

private:
    Rational chiSquare_;
};

/// even + odd*chi. Pure-even values may carry no ring; anything with a chi part
/// is bound to a ChiRing. Mixing two different rings throws.
class GradedScalar {
public:
    GradedScalar() = default;
    GradedScalar(GaussianRational even) : even_(std::move(even)) {}
    GradedScalar(int n) : even_(n) {}
    GradedScalar(GaussianRational even, GaussianRational odd, const ChiRing& ring)
        : even_(std::move(even)), odd_(std::move(odd)), ring_(&ring) {}

    static GradedScalar chi(const ChiRing& ring) { return {0, 1, ring}; }

    const GaussianRational& even() const { return even_; }
    const GaussianRational& odd() const { return odd_; }
    const ChiRing* ring() const { return ring_; }

    bool isZero() const { return even_.isZero() && odd_.isZero(); }
    bool isPureEven() const { return odd_.isZero(); }
    bool isPureOdd() const { return even_.isZero(); }

    /// Image under the parity automorphism chi -> -chi. Moving an odd operator
    /// past a scalar applies this.
    GradedScalar parityFlipped() const { return {even_, -odd_, ring_}; }
    GradedScalar conj() const { return {even_.conj(), odd_.conj(), ring_}; }

    GradedScalar operator-() const { return {-even_, -odd_, ring_}; }
    GradedScalar& operator+=(const GradedScalar& o);
    GradedScalar& operator-=(const GradedScalar& o);
    GradedScalar& operator*=(const GradedScalar& o);

    friend GradedScalar operator+(GradedScalar a, const GradedScalar& b) { return a += b; }
    friend GradedScalar operator-(GradedScalar a, const GradedScalar& b) { return a -= b; }
    friend GradedScalar operator*(GradedScalar a, const GradedScalar& b) { return a *= b; }
    friend bool operator==(const GradedScalar& a, const GradedScalar& b) {
        return a.even_ == b.even_ && a.odd_ == b.odd_;
    }

    std::string str() const;

private:
    GradedScalar(GaussianRational even, GaussianRational odd, const ChiRing* ring)
        : even_(std::move(even)), odd_(std::move(odd)), ring_(ring) {}
    const ChiRing* joinRing(const GradedScalar& o) const;

    GaussianRational even_;
    GaussianRational odd_;
    const ChiRing* ring_ = nullptr;
};

/// Free function form of the ring product; same checks as operator*.
GradedScalar scalarMul(const GradedScalar& a, const GradedScalar& b);

std::ostream& operator<<(std::ostream& os, const GradedScalar& s);

}  // namespace sschr
