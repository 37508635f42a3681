#include "doctest.h"

#include "json_io.hpp"

using namespace sschr;
using namespace sschr::io;

namespace {

LowestWeight n1(Rational d, Rational m) { return {AlgebraKind::ssch1, d, m, 0, std::nullopt}; }
LowestWeight n2(Rational d, Rational m, Rational r) { return {AlgebraKind::ssch2, d, m, r, std::nullopt}; }

Json reparse(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST_CASE("scalars round-trip") {
    for (const char* text : {"0", "-3/4", "i", "1/2-3/5 i", "-2 i"}) {
        const GaussianRational z = GaussianRational::parse(text);
        CHECK(gaussianFromJson(reparse(toJson(z))) == z);
    }
    const ChiRing& ring = ChiRing::forMass(3);
    const GradedScalar s(GaussianRational(Rational(1, 3)), GaussianRational(Rational(-2)), ring);
    const GradedScalar back = gradedFromJson(reparse(toJson(s)));
    CHECK(back == s);
    REQUIRE(back.ring());
    CHECK(back.ring()->chiSquare() == Rational(3, 2));
    CHECK(!toJson(GradedScalar(5)).contains("chi"));
    CHECK_THROWS(gaussianFromJson(Json("0.5")));
}

TEST_CASE("lowest weights round-trip") {
    for (const LowestWeight& lw : {n1(Rational(-1, 2), 1), n2(Rational(7, 3), 0, Rational(-5, 2))}) {
        const LowestWeight back = lowestWeightFromJson(reparse(toJson(lw)));
        CHECK(back.kind == lw.kind);
        CHECK(back.d == lw.d);
        CHECK(back.m == lw.m);
        CHECK(back.r == lw.r);
    }
}

TEST_CASE("singular reports round-trip") {
    for (const LowestWeight& lw : {n1(Rational(1, 2), 1), n1(2, 0), n2(3, 0, 1), n2(Rational(3, 2), 1, 0)}) {
        VermaModule mod(lw);
        for (const auto& r : findSingular(mod, 5)) {
            const Json j = toJson(r, &mod);
            CHECK(singularReportFromJson(reparse(j)) == r);
            for (const auto& v : j.at("vectors")) CHECK(v.contains("text"));
        }
    }
}

TEST_CASE("classification records round-trip") {
    for (const LowestWeight& lw : {n1(3, 0), n1(Rational(3, 2), 1), n2(2, 0, -2), n2(2, 0, Rational(1, 3))}) {
        const ClassificationRecord rec = classify(lw, 8);
        const Json j = toJson(rec);
        CHECK(j.at("verdict") == (rec.dimension ? "finite" : "infinite"));
        CHECK(classificationFromJson(reparse(j)) == rec);
    }
    const Json j = toJson(classify(n1(2, 0), 8));
    CHECK(j.at("verdict") == "finite");
    CHECK(j.at("dimension") == 5);
}

TEST_CASE("gram matrices round-trip") {
    VermaModule a(n1(Rational(-1, 2), 1));
    VermaModule b(n2(Rational(3, 2), 1, Rational(1, 2)));
    for (const auto& [mod, w] : {std::pair<const VermaModule*, Weight>{&a, {3}}, {&b, {2, 0}}}) {
        const GramMatrix g = gram(*mod, w, 8);
        CHECK(gramFromJson(reparse(toJson(g, mod))) == g);
    }
}

TEST_CASE("realization reports round-trip") {
    Realization rz = buildRealization(AlgebraKind::ssch1, Rational(3, 4), 1);
    CHECK(realizationReportFromJson(reparse(toJson(verifyRelations(rz, rz.table, 3)))) ==
          verifyRelations(rz, rz.table, 3));
    rz.op("G") -= SuperDiffOp::multiplication(SuperPoly::variable(rz.vars, "θ") * SuperPoly::variable(rz.vars, "η"));
    const RealizationReport bad = verifyRelations(rz, rz.table, 2);
    CHECK(!bad.failures.empty());
    CHECK(realizationReportFromJson(reparse(toJson(bad))) == bad);
}

TEST_CASE("structure tables and algebra reports round-trip") {
    for (AlgebraKind kind : {AlgebraKind::sch1, AlgebraKind::ssch1, AlgebraKind::ssch2}) {
        const StructureTable t = buildAlgebra(kind);
        const StructureTable back = tableFromJson(reparse(toJson(t)));
        REQUIRE(back.size() == t.size());
        for (std::size_t x = 0; x < t.size(); ++x) {
            CHECK(back.generator(x).name == t.generator(x).name);
            CHECK(back.parity(x) == t.parity(x));
            CHECK(back.degree(x) == t.degree(x));
            for (std::size_t y = 0; y < t.size(); ++y) CHECK(back.bracket(x, y) == t.bracket(x, y));
        }
        const JacobiReport jac = verifySuperJacobi(t);
        CHECK(jacobiFromJson(reparse(toJson(jac, t)), t) == jac);
        const PairCheckReport anti = verifyAntisymmetry(t);
        CHECK(pairCheckFromJson(reparse(toJson(anti, t)), t) == anti);
    }
    StructureTable broken = buildAlgebra(AlgebraKind::sch1);
    broken.setBracket("H", "K", broken.gen("D", 2));
    const JacobiReport bad = verifySuperJacobi(broken);
    CHECK(!bad.pass);
    CHECK(jacobiFromJson(reparse(toJson(bad, broken)), broken) == bad);
}
