#include "doctest.h"

#include "sschr/verma.hpp"

using namespace sschr;

namespace {

LowestWeight n1(Rational d, Rational m) { return {AlgebraKind::ssch1, d, m, 0, std::nullopt}; }
LowestWeight n2(Rational d, Rational m, Rational r) { return {AlgebraKind::ssch2, d, m, r, std::nullopt}; }

}  // namespace

TEST_CASE("basic actions") {
    VermaModule mod(n1(Rational(5, 3), 1));
    auto v = [&](int k, int l, int a) { return ModuleVector::basis(mod.monomial({k, l, a})); };
    CHECK(mod.act("P", v(0, 0, 0)).isZero());
    CHECK(mod.act("P", v(2, 1, 0)) == v(3, 0, 0) + GradedScalar(2) * v(1, 1, 0));
    CHECK(mod.act("D", v(2, 1, 0)) == GradedScalar(GaussianRational(Rational(4) - Rational(5, 3))) * v(2, 1, 0));
    CHECK(mod.normalOrder(std::vector<std::string>{"K"}) == v(0, 1, 0));
    CHECK(mod.normalOrder(std::vector<std::string>{"Q", "G"}) == mod.chi() * v(0, 0, 0));
    CHECK(mod.normalOrder(std::vector<std::string>{"H", "G", "G"}) == v(0, 0, 0));
    CHECK(mod.normalOrder(std::vector<std::string>{"X", "X"}) == GradedScalar(GaussianRational(Rational(-1, 2))) * v(0, 0, 0));

    VermaModule m2(n2(2, 1, Rational(1, 3)));
    auto mono = m2.monomial({1, 2, 1, 0, 1});
    CHECK(m2.act("R", ModuleVector::basis(mono)) == GradedScalar(GaussianRational(Rational(2) + Rational(1, 3))) * ModuleVector::basis(mono));
    CHECK(m2.act("D", ModuleVector::basis(mono)) == GradedScalar(GaussianRational(Rational(6 - 2))) * ModuleVector::basis(mono));
}

TEST_CASE("subspace bases") {
    VermaModule mod(n1(0, 1));
    CHECK(mod.subspaceBasis({1}, 12) == std::vector<Monomial>{{1, 0, 0}, {0, 0, 1}});
    CHECK(mod.subspaceBasis({0}, 12) == std::vector<Monomial>{{0, 0, 0}});
    CHECK(mod.subspaceBasis({3}, 12).size() == 4);
    VermaModule m2(n2(0, 1, 0));
    CHECK(m2.subspaceBasis({1, 1}, 12) == std::vector<Monomial>{{1, 0, 0, 0, 1}, {0, 0, 1, 0, 0}});
    for (const auto& w : m2.weightsUpTo(5))
        for (const auto& b : m2.subspaceBasis(w, 5)) CHECK(m2.weight(b) == w);
}

TEST_CASE("engine agrees with the closed-form table") {
    for (Rational m : {Rational(0), Rational(1), Rational(3, 2)})
        for (Rational d : {Rational(-1, 2), Rational(0), Rational(2)}) {
            VermaModule mod(n1(d, m));
            for (const auto& w : mod.weightsUpTo(7))
                for (const auto& mono : mod.subspaceBasis(w, 7))
                    for (const char* g : {"H", "P", "G", "D", "K", "M", "Q", "S", "X"})
                        CHECK(mod.act(g, ModuleVector::basis(mono)) == closedFormActionN1(mod, g, mono));
        }
}

TEST_CASE("representation closure") {
    for (Rational m : {Rational(0), Rational(1), Rational(3, 2)})
        for (Rational d : {Rational(-1, 2), Rational(2)}) {
            CHECK(verifyRepresentationClosure(VermaModule(n1(d, m)), 5).pass);
            CHECK(verifyRepresentationClosure(VermaModule(n2(d, m, Rational(-5, 2))), 4).pass);
        }
    CHECK(verifyRepresentationClosure(VermaModule({AlgebraKind::sch1, 1, 2, 0, std::nullopt}), 6).pass);
}

TEST_CASE("the opposite sign of chi squared breaks closure") {
    LowestWeight lw = n1(1, 2);
    lw.chiSquare = Rational(-1);
    auto r = verifyRepresentationClosure(VermaModule(lw), 2);
    CHECK_FALSE(r.pass);
}

TEST_CASE("weight additivity") {
    VermaModule m2(n2(Rational(1, 2), 1, 1));
    for (const auto& w : m2.weightsUpTo(4))
        for (const auto& mono : m2.subspaceBasis(w, 4))
            for (std::size_t g = 0; g < m2.algebra().size(); ++g) {
                ModuleVector img = m2.act(g, ModuleVector::basis(mono));
                Weight expect = w;
                for (std::size_t k = 0; k < expect.size(); ++k) expect[k] += m2.generatorWeight(g)[k];
                for (const auto& [b, c] : img.terms()) CHECK(m2.weight(b) == expect);
            }
}
