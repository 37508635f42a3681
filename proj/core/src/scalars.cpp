#include "sschr/scalars.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace sschr {

namespace {

std::string stripSpaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

bool isInteger(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parseRational(std::string_view text) {
    std::string s = stripSpaces(text);
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!isInteger(num) || !isInteger(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string formatRational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.isZero()) throw std::domain_error("division by zero in Q(i)");
    Rational n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string GaussianRational::str() const {
    if (sgn(im_) == 0) return formatRational(re_);
    std::string imPart;
    if (im_ == 1)
        imPart = "i";
    else if (im_ == -1)
        imPart = "-i";
    else
        imPart = formatRational(im_) + " i";
    if (sgn(re_) == 0) return imPart;
    if (imPart[0] == '-') return formatRational(re_) + imPart;
    return formatRational(re_) + "+" + imPart;
}

GaussianRational GaussianRational::parse(std::string_view text) {
    std::string s = stripSpaces(text);
    if (s.empty()) throw std::invalid_argument("empty Gaussian rational");
    if (s.back() != 'i') return {parseRational(s), 0};
    s.pop_back();
    // split at the last sign that is not the leading one
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    std::string realText = split == std::string::npos ? "" : s.substr(0, split);
    std::string imText = split == std::string::npos ? s : s.substr(split);
    Rational im;
    if (imText.empty() || imText == "+")
        im = 1;
    else if (imText == "-")
        im = -1;
    else
        im = parseRational(imText);
    Rational re = realText.empty() ? Rational(0) : parseRational(realText);
    return {re, im};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

const ChiRing& ChiRing::withChiSquare(const Rational& chiSquare) {
    static std::mutex mutex;
    static std::map<Rational, std::unique_ptr<ChiRing>> rings;
    std::lock_guard lock(mutex);
    auto& slot = rings[chiSquare];
    if (!slot) slot = std::make_unique<ChiRing>(chiSquare);
    return *slot;
}

const ChiRing* GradedScalar::joinRing(const GradedScalar& o) const {
    if (ring_ && o.ring_ && ring_ != o.ring_)
        throw std::invalid_argument("graded scalars from different ring instances");
    return ring_ ? ring_ : o.ring_;
}

GradedScalar& GradedScalar::operator+=(const GradedScalar& o) {
    ring_ = joinRing(o);
    even_ += o.even_;
    odd_ += o.odd_;
    return *this;
}

GradedScalar& GradedScalar::operator-=(const GradedScalar& o) {
    ring_ = joinRing(o);
    even_ -= o.even_;
    odd_ -= o.odd_;
    return *this;
}

GradedScalar& GradedScalar::operator*=(const GradedScalar& o) {
    const ChiRing* ring = joinRing(o);
    // (a + b chi)(c + e chi) = ac + be chi^2 + (ae + bc) chi
    GaussianRational even = even_ * o.even_;
    if (!odd_.isZero() && !o.odd_.isZero()) even += odd_ * o.odd_ * GaussianRational(ring->chiSquare());
    GaussianRational odd = even_ * o.odd_ + odd_ * o.even_;
    even_ = std::move(even);
    odd_ = std::move(odd);
    ring_ = ring;
    return *this;
}

GradedScalar scalarMul(const GradedScalar& a, const GradedScalar& b) { return a * b; }

std::string GradedScalar::str() const {
    if (odd_.isZero()) return even_.str();
    std::string oddPart = odd_ == GaussianRational(1)    ? "chi"
                          : odd_ == GaussianRational(-1) ? "-chi"
                                                         : "(" + odd_.str() + ") chi";
    if (even_.isZero()) return oddPart;
    return even_.str() + (oddPart[0] == '-' ? " " : " + ") + oddPart;
}

std::ostream& operator<<(std::ostream& os, const GradedScalar& s) { return os << s.str(); }

}  // namespace sschr
