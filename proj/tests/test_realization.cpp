#include "doctest.h"

#include "sschr/realization.hpp"

#include <set>

using namespace sschr;

namespace {

GaussianRational q(Rational x) { return GaussianRational(std::move(x)); }

}  // namespace

TEST_CASE("super polynomials") {
    auto vars = std::make_shared<const OddVariableAlgebra>(std::vector<OddGenerator>{{"θ", 0}, {"η", Rational(-1, 2)}});
    const SuperPoly th = SuperPoly::variable(vars, "θ"), eta = SuperPoly::variable(vars, "η");
    const SuperPoly one = SuperPoly::constant(vars, 1);
    CHECK((th * th).isZero());
    CHECK(eta * eta == SuperPoly::constant(vars, q(Rational(-1, 2))));
    CHECK(eta * eta + eta * eta == SuperPoly::constant(vars, -1));
    CHECK(th * eta + eta * th == SuperPoly{});
    CHECK((th * eta).parity() == 0);
    CHECK(!(th + one).parity());
    CHECK((SuperPoly::variable(vars, "t") * th * eta).degree() == 3);
}

TEST_CASE("differential operators") {
    auto vars = std::make_shared<const OddVariableAlgebra>(std::vector<OddGenerator>{{"θ", 0}, {"η", Rational(-1, 2)}});
    const SuperPoly th = SuperPoly::variable(vars, "θ"), eta = SuperPoly::variable(vars, "η");
    const SuperPoly t = SuperPoly::variable(vars, "t");
    const SuperDiffOp dth = SuperDiffOp::partial(vars, "θ");
    CHECK(dth.apply(th) == SuperPoly::constant(vars, 1));
    CHECK(dth.apply(th * eta) == eta);
    CHECK(dth.apply(eta * th) == GaussianRational(-1) * eta);
    CHECK(dth.apply(eta).isZero());
    CHECK(SuperDiffOp::partial(vars, "t").apply(t * t * th) == GaussianRational(2) * t * th);
    CHECK_THROWS_AS(SuperDiffOp::partial(vars, "η"), std::invalid_argument);
    CHECK(dth.parity() == 1);
    CHECK((th * dth).parity() == 0);
    CHECK(!(dth + SuperDiffOp::partial(vars, "t")).parity());

    Realization rz = buildRealization(AlgebraKind::ssch1, 0, 1);
    const SuperPoly x = SuperPoly::variable(rz.vars, "x");
    const SuperPoly expected = x + SuperPoly::variable(rz.vars, "θ") * SuperPoly::variable(rz.vars, "η");
    CHECK(rz.op("G").apply(SuperPoly::constant(rz.vars, 1)) == expected);
}

TEST_CASE("realization operators") {
    Realization n1 = buildRealization(AlgebraKind::ssch1, Rational(3, 4), 1);
    auto v1 = n1.vars;
    const SuperPoly th = SuperPoly::variable(v1, "θ");
    CHECK(n1.op("H").str() == SuperDiffOp::partial(v1, "t").str());
    CHECK(n1.op("P").str() == SuperDiffOp::partial(v1, "x").str());
    CHECK(n1.op("M").str() == SuperDiffOp::scalar(v1, 1).str());
    CHECK(n1.op("Q").str() == (GaussianRational(-1) * (th * SuperDiffOp::partial(v1, "t")) + SuperDiffOp::partial(v1, "θ")).str());

    Realization n2 = buildRealization(AlgebraKind::ssch2, 1, 2);
    auto v2 = n2.vars;
    const SuperDiffOp xp = GaussianRational(-1) * (SuperPoly::variable(v2, "φ") * SuperDiffOp::partial(v2, "x")) -
                           SuperDiffOp::multiplication(GaussianRational(2) * SuperPoly::variable(v2, "ρ"));
    CHECK(n2.op("X+").str() == xp.str());
    CHECK_THROWS_AS(buildRealization(AlgebraKind::sch1, 0, 1), std::invalid_argument);
}

TEST_CASE("realizations satisfy the relations") {
    for (AlgebraKind kind : {AlgebraKind::ssch1, AlgebraKind::ssch2})
        for (const auto& [d, m] : std::vector<std::pair<Rational, Rational>>{
                 {Rational(3, 4), 1}, {1, 2}, {Rational(1, 2), 0}, {-2, Rational(-3, 5)}, {0, Rational(7, 3)}}) {
            Realization rz = buildRealization(kind, d, m);
            RealizationReport rep = verifyRelations(rz, rz.table, 5);
            CHECK(rep.pass);
            CHECK(rep.parityAdditive);
            CHECK(rep.failures.empty());
            CHECK(rep.pairsChecked == rz.table.size() * (rz.table.size() + 1) / 2);
            CHECK(rep.certifiedDegree == 3);
        }
}

TEST_CASE("corrupted realization is caught") {
    Realization rz = buildRealization(AlgebraKind::ssch1, Rational(3, 4), 1);
    const SuperPoly thEta = SuperPoly::variable(rz.vars, "θ") * SuperPoly::variable(rz.vars, "η");
    rz.op("G") -= SuperDiffOp::multiplication(thEta);
    RealizationReport rep = verifyRelations(rz, rz.table, 3);
    CHECK(!rep.pass);
    REQUIRE(!rep.failures.empty());
    std::set<std::string> relations;
    for (const auto& f : rep.failures) {
        relations.insert(f.relation);
        CHECK(f.residual != "0");
    }
    CHECK(relations.count("[G,Q}") == 1);
    CHECK(relations.count("[G,X}") == 1);
    const std::size_t g = rz.table.indexOf("G");
    for (std::size_t i = 0; i < rz.table.size(); ++i)
        for (std::size_t j = i; j < rz.table.size(); ++j) {
            const std::string name = "[" + rz.table.generator(i).name + "," + rz.table.generator(j).name + "}";
            const bool involvesG = i == g || j == g || !rz.table.bracket(i, j).coefficient(g).isZero();
            if (!involvesG) CHECK(relations.count(name) == 0);
        }
}

TEST_CASE("chi and eta from one Grassmann variable") {
    for (Rational m : {Rational(0), Rational(1), Rational(2), Rational(7, 3)}) {
        ChiEtaReport rep = chiEtaFromPhi(m);
        CHECK(rep.chiSquare);
        CHECK(rep.etaSquare);
        CHECK(rep.anticommute);
        CHECK(rep.pass());
        CHECK(rep.chiUnit.parity() == 1);
    }
}
