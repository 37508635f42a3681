#include "doctest.h"

#include "sschr/odd_algebra.hpp"
#include "sschr/scalars.hpp"

#include <memory>
#include <random>

using namespace sschr;

TEST_CASE("rational parsing is exact and strict") {
    CHECK(parseRational("-3/6") == Rational(-1, 2));
    CHECK(parseRational("7") == Rational(7));
    CHECK_THROWS_AS(parseRational("4/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parseRational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parseRational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parseRational("abc"), std::invalid_argument);
    CHECK(formatRational(Rational(-7, 3)) == "-7/3");
}

TEST_CASE("gaussian rationals") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK(GaussianRational::parse("1/2-3/4 i") == GaussianRational(Rational(1, 2), Rational(-3, 4)));
    CHECK(GaussianRational::parse("-i") == -i);
    CHECK(GaussianRational::parse("2/4") == GaussianRational(Rational(1, 2)));
    CHECK((GaussianRational(1, 1) / GaussianRational(1, -1)) == i);
    CHECK(GaussianRational(Rational(2, 4), Rational(0)).re().get_den() == 2);
    CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), std::domain_error);
    CHECK(GaussianRational(Rational(1, 3), Rational(-2)).str() == "1/3-2 i");
    GaussianRational z(Rational(3, 5), Rational(-7, 2));
    CHECK(z.conj().conj() == z);
    CHECK((z * i).conj() == z.conj() * i.conj());
}

TEST_CASE("chi squares to m/2") {
    const ChiRing& r2 = ChiRing::forMass(2);
    GradedScalar chi = GradedScalar::chi(r2);
    CHECK(scalarMul(chi, chi) == GradedScalar(1));
    GradedScalar s(GaussianRational(Rational(3, 7)), GaussianRational(-2), r2);
    CHECK(scalarMul(GradedScalar(1), s) == s);
    const ChiRing& r0 = ChiRing::forMass(0);
    GradedScalar chi0 = GradedScalar::chi(r0);
    CHECK(scalarMul(chi0, chi0).isZero());
    CHECK(&ChiRing::forMass(2) == &r2);
    CHECK_THROWS_AS(scalarMul(chi, chi0), std::invalid_argument);
    CHECK(chi.parityFlipped() == -chi);
}

TEST_CASE("graded scalar ring axioms on random inputs") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dist(-5, 5);
    const ChiRing& ring = ChiRing::forMass(Rational(3, 2));
    auto rnd = [&] {
        return GradedScalar(GaussianRational(Rational(dist(rng), 1 + (dist(rng) + 5)), Rational(dist(rng))),
                            GaussianRational(Rational(dist(rng)), Rational(dist(rng), 3)), ring);
    };
    for (int k = 0; k < 200; ++k) {
        GradedScalar a = rnd(), b = rnd(), c = rnd();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("odd variable algebra with one Clifford generator") {
    const Rational m = 3;
    auto alg = std::make_shared<const OddVariableAlgebra>(
        std::vector<OddGenerator>{{"theta", 0}, {"eta", -m / 2}});
    OddElement theta = OddElement::generator(alg, 0), eta = OddElement::generator(alg, 1);
    CHECK(oddProduct(theta, theta).isZero());
    OddElement te = oddProduct(theta, eta), et = oddProduct(eta, theta);
    CHECK(te.terms().size() == 1);
    CHECK(te.terms().at(0b11) == GaussianRational(1));
    CHECK(et == GaussianRational(-1) * te);
    CHECK(oddProduct(eta, eta) == OddElement::scalar(alg, GaussianRational(-m / 2)));
    CHECK(oddProduct(te, eta) == GaussianRational(-m / 2) * theta);
    CHECK(oddProduct(eta, te) == GaussianRational(m / 2) * theta);
    auto other = std::make_shared<const OddVariableAlgebra>(std::vector<OddGenerator>{{"theta", 0}});
    CHECK_THROWS_AS(oddProduct(theta, OddElement::generator(other, 0)), std::invalid_argument);
}

TEST_CASE("odd products are associative on three Grassmann variables") {
    auto alg = std::make_shared<const OddVariableAlgebra>(
        std::vector<OddGenerator>{{"a", 0}, {"b", Rational(2)}, {"c", Rational(-1, 3)}});
    std::vector<OddElement> basis;
    for (OddMask mask = 0; mask < 8; ++mask) {
        OddElement e(alg);
        e.add(mask, 1);
        basis.push_back(e);
    }
    for (const auto& x : basis)
        for (const auto& y : basis)
            for (const auto& z : basis) CHECK(oddProduct(oddProduct(x, y), z) == oddProduct(x, oddProduct(y, z)));
}
