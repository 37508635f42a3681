#include "sschr/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace sschr {

namespace {

struct GaussInt {
    mpz_class re{0};
    mpz_class im{0};

    bool isZero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt sub(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

// Exact quotient; the Bareiss identity guarantees divisibility.
GaussInt exactDiv(const GaussInt& a, const GaussInt& b) {
    mpz_class n = b.re * b.re + b.im * b.im;
    mpz_class re = a.re * b.re + a.im * b.im;
    mpz_class im = a.im * b.re - a.re * b.im;
    GaussInt q;
    mpz_divexact(q.re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
    return q;
}

// Scales a row of Q(i) entries by the lcm of its denominators.
std::vector<GaussInt> integerRow(const Matrix& m, std::size_t r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).re().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).im().get_den_mpz_t());
    }
    std::vector<GaussInt> out(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const auto& z = m(r, c);
        out[c].re = z.re().get_num() * (l / z.re().get_den());
        out[c].im = z.im().get_num() * (l / z.im().get_den());
    }
    return out;
}

struct FractionFreeEchelon {
    std::vector<std::vector<GaussInt>> rows;  // all rows, echelon on top
    std::vector<std::size_t> pivots;
    int swapSign = 1;
};

FractionFreeEchelon forwardEliminate(const Matrix& m) {
    FractionFreeEchelon e;
    e.rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) e.rows.push_back(integerRow(m, r));
    auto& a = e.rows;
    const std::size_t nr = m.rows(), nc = m.cols();
    GaussInt prev{1, 0};
    std::size_t k = 0;
    for (std::size_t c = 0; c < nc && k < nr; ++c) {
        std::size_t p = k;
        while (p < nr && a[p][c].isZero()) ++p;
        if (p == nr) continue;
        if (p != k) {
            std::swap(a[p], a[k]);
            e.swapSign = -e.swapSign;
        }
        for (std::size_t i = k + 1; i < nr; ++i) {
            for (std::size_t j = c + 1; j < nc; ++j)
                a[i][j] = exactDiv(sub(mul(a[k][c], a[i][j]), mul(a[i][c], a[k][j])), prev);
            a[i][c] = {};
        }
        prev = a[k][c];
        e.pivots.push_back(c);
        ++k;
    }
    return e;
}

}  // namespace

std::vector<GaussianRational> Matrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void Matrix::appendRow(const std::vector<GaussianRational>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<GaussianRational> Matrix::apply(const std::vector<GaussianRational>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<GaussianRational> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!x[c].isZero() && !(*this)(r, c).isZero()) y[r] += (*this)(r, c) * x[c];
    return y;
}

ReducedEchelon reducedEchelon(const Matrix& m) {
    FractionFreeEchelon e = forwardEliminate(m);
    ReducedEchelon out;
    out.pivots = e.pivots;
    const std::size_t nc = m.cols();
    out.rows.resize(e.pivots.size());
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
        const GaussInt& piv = e.rows[k][e.pivots[k]];
        GaussianRational inv = GaussianRational(1) / GaussianRational(Rational(piv.re), Rational(piv.im));
        auto& row = out.rows[k];
        row.resize(nc);
        for (std::size_t c = 0; c < nc; ++c) {
            const GaussInt& z = e.rows[k][c];
            if (!z.isZero()) row[c] = GaussianRational(Rational(z.re), Rational(z.im)) * inv;
        }
    }
    // back substitution
    for (std::size_t k = out.pivots.size(); k-- > 0;) {
        const std::size_t pc = out.pivots[k];
        for (std::size_t i = 0; i < k; ++i) {
            GaussianRational f = out.rows[i][pc];
            if (f.isZero()) continue;
            for (std::size_t c = pc; c < nc; ++c)
                if (!out.rows[k][c].isZero()) out.rows[i][c] -= f * out.rows[k][c];
        }
    }
    return out;
}

std::size_t rank(const Matrix& m) { return forwardEliminate(m).pivots.size(); }

std::vector<std::vector<GaussianRational>> kernel(const Matrix& m) {
    const std::size_t nc = m.cols();
    ReducedEchelon e = reducedEchelon(m);
    std::vector<bool> isPivot(nc, false);
    for (auto p : e.pivots) isPivot[p] = true;
    std::vector<std::vector<GaussianRational>> basis;
    for (std::size_t f = 0; f < nc; ++f) {
        if (isPivot[f]) continue;
        std::vector<GaussianRational> v(nc);
        v[f] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k)
            if (!e.rows[k][f].isZero()) v[e.pivots[k]] = -e.rows[k][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

GaussianRational determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    // Row scaling used to clear denominators has to be undone.
    Rational scale = 1;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).re().get_den_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).im().get_den_mpz_t());
        }
        scale *= Rational(l);
    }
    FractionFreeEchelon e = forwardEliminate(m);
    if (e.pivots.size() < m.rows()) return 0;
    const GaussInt& last = e.rows.back().back();
    GaussianRational det(Rational(last.re), Rational(last.im));
    det *= GaussianRational(Rational(e.swapSign) / scale);
    return det;
}

bool isZeroVector(const std::vector<GaussianRational>& v) {
    for (const auto& z : v)
        if (!z.isZero()) return false;
    return true;
}

}  // namespace sschr
