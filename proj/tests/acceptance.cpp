#include "sschr/adjoint.hpp"
#include "sschr/quotient.hpp"
#include "sschr/realization.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

using namespace sschr;

namespace {

struct Tally {
    std::ostringstream log;
    std::size_t checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        log << (ok ? "ok   " : "FAIL ") << what << "\n";
        if (!ok) failures.push_back(what);
    }
    void note(const std::string& what) { log << "     " << what << "\n"; }
};

struct Outcome {
    bool pass = false;
    std::string detail;
    std::string transcript;
};

std::string q(const Rational& x) { return x.get_str(); }

LowestWeight n1(Rational d, Rational m) { return {AlgebraKind::ssch1, d, m, 0, std::nullopt}; }
LowestWeight n2(Rational d, Rational m, Rational r) { return {AlgebraKind::ssch2, d, m, r, std::nullopt}; }

std::string label(const LowestWeight& lw) {
    std::string s = kindName(lw.kind) + " d=" + q(lw.d) + " m=" + q(lw.m);
    if (lw.kind == AlgebraKind::ssch2) s += " r=" + q(lw.r);
    return s;
}

std::string weightText(const Weight& w) {
    std::string out = "(";
    for (std::size_t k = 0; k < w.size(); ++k) out += (k ? "," : "") + std::to_string(w[k]);
    return out + ")";
}

GradedScalar scalar(const Rational& x) { return GradedScalar(GaussianRational(x)); }

ModuleVector onVacuum(const VermaModule& mod, const std::vector<std::string>& word) { return mod.normalOrder(word); }

std::vector<std::string> kTimes(int l, std::vector<std::string> tail) {
    std::vector<std::string> w(static_cast<std::size_t>(l), "K");
    w.insert(w.end(), tail.begin(), tail.end());
    return w;
}

bool proportional(const ModuleVector& a, const ModuleVector& b) {
    if (a.isZero() || b.isZero()) return false;
    if (a.leading() != b.leading()) return false;
    const GradedScalar ca = a.coefficient(a.leading());
    const GradedScalar cb = b.coefficient(a.leading());
    if (!ca.odd().isZero() || !cb.odd().isZero()) return false;
    return GradedScalar(cb.even() / ca.even()) * a == b;
}

std::vector<SingularVectorReport> nonzero(const std::vector<SingularVectorReport>& reps) {
    std::vector<SingularVectorReport> out;
    for (const auto& r : reps)
        if (r.kernelDimension > 0) out.push_back(r);
    return out;
}

Outcome finish(Tally& t) {
    Outcome o;
    o.pass = t.failures.empty();
    o.detail = std::to_string(t.checks) + " checks";
    if (!o.pass) {
        o.detail += ", " + std::to_string(t.failures.size()) + " failed; first: " + t.failures.front();
    }
    o.transcript = t.log.str();
    return o;
}

Outcome criterion1() {
    Tally t;
    const std::pair<AlgebraKind, std::size_t> algebras[] = {
        {AlgebraKind::sch1, 6}, {AlgebraKind::ssch1, 9}, {AlgebraKind::ssch2, 13}};
    for (const auto& [kind, count] : algebras) {
        const StructureTable table = buildAlgebra(kind);
        const std::string name = kindName(kind);
        t.expect(table.size() == count, name + " has " + std::to_string(count) + " generators");
        const JacobiReport jac = verifySuperJacobi(table);
        t.expect(jac.pass, name + " super-Jacobi on " + std::to_string(jac.triplesChecked) + " triples");
        t.expect(verifyAntisymmetry(table).pass, name + " graded antisymmetry");
        t.expect(verifyGrading(table).pass, name + " degree additivity");
    }
    return finish(t);
}

Outcome criterion2() {
    Tally t;
    bool omega2Linear = true;
    bool omega2Antilinear = true;
    for (AlgebraKind kind : {AlgebraKind::sch1, AlgebraKind::ssch1, AlgebraKind::ssch2}) {
        const StructureTable table = buildAlgebra(kind);
        const std::string name = kindName(kind);
        t.expect(!verifyAdjoint(table, identityMap(table)).pass(), name + " identity map rejected");
        for (int eps : {0, 1})
            for (int lam : {0, 1}) {
                const std::string tag = name + " eps=" + std::to_string(eps) + " lambda=" + std::to_string(lam);
                for (AdjointKind k : {AdjointKind::omega1, AdjointKind::omega2}) {
                    const AdjointMap map = buildAdjoint(table, k, eps, lam, false);
                    const AdjointReport rep = verifyAdjoint(table, map);
                    const std::string what = tag + " " + adjointName(k) + " linear";
                    t.expect(rep.plainHolds || rep.gradedHolds, what + " uniform convention (" + rep.convention() + ")");
                    t.expect(rep.involutionHolds && !map.squareIsParity, what + " squares to id");
                    if (k == AdjointKind::omega2) omega2Linear = omega2Linear && rep.pass();
                }
                const AdjointReport anti =
                    verifyAdjoint(table, buildAdjoint(table, AdjointKind::omega2, eps, lam, true));
                omega2Antilinear = omega2Antilinear && anti.pass();
                t.note(tag + " omega2 antilinear: " + (anti.pass() ? "pass" : "fail") + " (" + anti.convention() + ")");
                if (kind != AlgebraKind::ssch2) continue;
                for (AdjointKind k : {AdjointKind::sigma1, AdjointKind::sigma2}) {
                    const AdjointMap map = buildAdjoint(table, k, eps, lam, true);
                    const AdjointReport rep = verifyAdjoint(table, map);
                    const std::string what = tag + " " + adjointName(k) + " antilinear";
                    t.expect(rep.plainHolds || rep.gradedHolds, what + " uniform convention (" + rep.convention() + ")");
                    t.expect(rep.involutionHolds && map.squareIsParity, what + " squares to the parity involution");
                }
            }
    }
    Outcome o = finish(t);
    if (!omega2Linear)
        o.detail += std::string("; linear omega2 squares to -id on odd generators (omega2(Q) = iQ),") +
                    " antilinear omega2 " + (omega2Antilinear ? "passes" : "fails") + " every check";
    return o;
}

Outcome criterion3() {
    Tally t;
    const Rational ms[] = {0, 1, Rational(3, 2)};
    const Rational ds[] = {Rational(-1, 2), 0, Rational(1, 2), 2};
    const Rational rs[] = {0, 1, Rational(-5, 2)};
    std::vector<LowestWeight> modules;
    for (const auto& m : ms)
        for (const auto& d : ds) {
            modules.push_back(n1(d, m));
            for (const auto& r : rs) modules.push_back(n2(d, m, r));
        }
    for (const auto& lw : modules) {
        const ClosureReport rep = verifyRepresentationClosure(VermaModule(lw), 8);
        t.expect(rep.pass && rep.checks > 0,
                 label(lw) + " closure to degree 8 (" + std::to_string(rep.checks) + " checks)");
    }
    return finish(t);
}

Outcome criterion4() {
    Tally t;
    for (int p = 0; p <= 3; ++p) {
        const LowestWeight lw = n1(Rational(2 * p - 1, 2), 1);
        const VermaModule mod(lw);
        const auto reps = nonzero(findSingular(mod, 2 * p + 2));
        const std::string tag = label(lw) + " to degree " + std::to_string(2 * p + 2);
        t.expect(reps.size() == 1 && reps[0].kernelDimension == 1, tag + " exactly one singular vector");
        if (reps.size() != 1) continue;
        const auto& r = reps[0];
        t.note(weightText(r.weight) + " " + mod.render(r.vectors[0]));
        t.expect(r.weight == Weight{2 * p + 1} && r.matchedClosedForm == "prop2-massive" && r.reverified,
                 tag + " matched at weight " + std::to_string(2 * p + 1));
        t.expect(r.proportionality && *r.proportionality * r.vectors[0] == closedFormN1(p, mod),
                 tag + " proportional to the closed form");
    }
    for (const Rational& d : {Rational(0), Rational(1, 4), Rational(1), Rational(7, 3)}) {
        const LowestWeight lw = n1(d, 1);
        t.expect(nonzero(findSingular(lw, 8)).empty(), label(lw) + " no singular vectors to degree 8");
    }
    for (const Rational& d : {Rational(0), Rational(1, 2), Rational(3)}) {
        const LowestWeight lw = n1(d, 0);
        const VermaModule mod(lw);
        const auto reps = nonzero(findSingular(mod, 8));
        for (int n = 1; n <= 8; ++n) {
            const ModuleVector g = closedFormN1(n, mod);
            bool found = false;
            for (const auto& r : reps)
                if (r.weight == Weight{n} && r.sector == 0 && r.kernelDimension == 1 && proportional(r.vectors[0], g))
                    found = true;
            t.expect(found && isSingular(mod, g), label(lw) + " G^" + std::to_string(n) + " v0 found");
        }
    }
    return finish(t);
}

Outcome criterion5() {
    Tally t;
    for (int p = 1; p <= 2; ++p)
        for (const Rational& r : {Rational(0), Rational(1), Rational(-3, 2)}) {
            const Rational d(2 * p + 1, 2);
            const LowestWeight lw = n2(d, 1, r);
            const VermaModule mod(lw);
            const std::string tag = label(lw);
            const auto reps = nonzero(findSingular(mod, 2 * p + 2));
            t.expect(reps.size() == 1 && reps[0].kernelDimension == 1, tag + " exactly one singular vector");
            if (reps.size() != 1) continue;
            const auto& rep = reps[0];
            const ModuleVector closed = closedFormN2(p, mod);
            t.note(weightText(rep.weight) + " " + mod.render(rep.vectors[0]));
            t.expect(rep.weight == Weight{2 * p + 2, 0} && rep.matchedClosedForm == "prop4-massive" && rep.reverified,
                     tag + " matched at weight " + weightText(Weight{2 * p + 2, 0}));
            t.expect(rep.proportionality && *rep.proportionality * rep.vectors[0] == closed,
                     tag + " proportional to the closed form");
            const Rational gamma = (d + r + 1) / (2 * d + 1);
            const ModuleVector top = onVacuum(mod, std::vector<std::string>(2 * p + 2, "G"));
            t.expect(closed.coefficient(top.leading()) == scalar(gamma), tag + " G^top coefficient " + q(gamma));
            const RecurrenceCoefficients c = solvedCoefficients(p, lw);
            t.expect(c.gamma == gamma && checkRecurrences(p, lw, c).all(), tag + " recurrences and constraints");
            RecurrenceCoefficients bad = c;
            bad.delta += 1;
            t.expect(!checkRecurrences(p, lw, bad).all(), tag + " perturbed delta rejected");
        }
    for (const Rational& d : {Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(3)})
        for (const Rational& r : {Rational(-3), Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(2)}) {
            const LowestWeight lw = n2(d, 0, r);
            const VermaModule mod(lw);
            const auto reps = nonzero(findSingular(mod, 6));
            const std::string tag = label(lw);
            for (int p = 0; p <= 6; ++p) {
                const ModuleVector v = closedFormN2(p, mod);
                bool found = false;
                for (const auto& rep : reps)
                    if (rep.weight == Weight{p, 1})
                        for (const auto& k : rep.vectors) found = found || proportional(k, v);
                t.expect(found && isSingular(mod, v), tag + " G^" + std::to_string(p) + " X+ v0 found");
            }
            for (int p = 0; p <= 5; ++p) {
                const bool expected = r == d - p - 1;
                bool reported = false;
                for (const auto& rep : reps)
                    if (rep.weight == Weight{p + 1, 0} &&
                        rep.matchedClosedForm.find("prop4-massless-extra") != std::string::npos)
                        reported = true;
                const bool singular = isSingular(mod, closedFormN2Extra(p, mod));
                t.expect(reported == expected && singular == expected,
                         tag + " extra G^" + std::to_string(p) + " S- X+ v0 " + (expected ? "present" : "absent"));
            }
        }
    return finish(t);
}

Outcome criterion6() {
    Tally t;
    auto record = [&](const LowestWeight& lw, int cutoff) {
        ClassificationRecord rec = classify(lw, cutoff);
        t.note(label(lw) + " -> " + rec.verdict);
        return rec;
    };
    for (const Rational& d : {Rational(2), Rational(1, 4), Rational(7, 3)}) {
        const ClassificationRecord rec = record(n1(d, 1), 8);
        t.expect(rec.verdict == "V^d" && rec.chain.empty() && !rec.dimension && rec.irreducibleUpToCutoff,
                 label(n1(d, 1)) + " irreducible Verma module");
    }
    for (int p = 0; p <= 3; ++p) {
        const LowestWeight lw = n1(Rational(2 * p - 1, 2), 1);
        const ClassificationRecord rec = record(lw, 8);
        t.expect(rec.verdict == "V^d/I^d" && rec.chain.size() == 1 && !rec.dimension && rec.irreducibleUpToCutoff,
                 label(lw) + " V^d/I^d");
        t.expect(nonzero(findSingularInFactor(terminalModule(lw), 8)).empty(),
                 label(lw) + " factor module has no singular vectors to degree 8");
    }
    for (int p = 0; p <= 3; ++p) {
        const LowestWeight lw = n1(p, 0);
        const ClassificationRecord rec = record(lw, 2 * p + 4);
        const FactorModule term = terminalModule(lw);
        std::size_t count = 0;
        for (int n = 0; n <= 2 * p + 4; ++n) count += term.levelDimension(n);
        const std::size_t expected = static_cast<std::size_t>(2 * p + 1);
        t.expect(rec.verdict == "(V^p/I^1)/𝓘^p" && rec.dimension == expected && rec.irreducibleUpToCutoff,
                 label(lw) + " (V^p/I^1)/𝓘^p");
        t.expect(count == expected, label(lw) + " basis count " + std::to_string(count));
        t.expect(verifyTrivialAction(term, {"P", "G", "M", "X"}, 8).pass, label(lw) + " P, G, M, X act as zero");
    }
    for (const Rational& d : {Rational(1, 2), Rational(-1), Rational(7, 3)}) {
        const LowestWeight lw = n1(d, 0);
        const ClassificationRecord rec = record(lw, 8);
        t.expect(rec.verdict == "V^d/I^1" && !rec.dimension && rec.irreducibleUpToCutoff, label(lw) + " V^d/I^1");
        t.expect(verifyTrivialAction(terminalModule(lw), {"P", "G", "M", "X"}, 8).pass,
                 label(lw) + " P, G, M, X act as zero");
    }
    return finish(t);
}

FactorModule lModule(const LowestWeight& lw) {
    auto verma = std::make_shared<const VermaModule>(lw);
    return FactorModule(verma).quotient(onVacuum(*verma, {"X+"})).quotient(onVacuum(*verma, {"G"}));
}

Outcome criterion7() {
    Tally t;
    auto expectBranch = [&](const LowestWeight& lw, int cutoff, const std::string& verdict,
                            std::optional<std::size_t> dim) {
        const ClassificationRecord rec = classify(lw, cutoff);
        t.note(label(lw) + " -> " + rec.verdict);
        t.expect(rec.verdict == verdict && rec.dimension == dim && rec.irreducibleUpToCutoff,
                 label(lw) + " " + verdict + (dim ? " of dimension " + std::to_string(*dim) : ""));
    };
    expectBranch(n2(2, 1, 0), 6, "V^{d,r}", std::nullopt);
    expectBranch(n2(Rational(1, 3), 1, 1), 6, "V^{d,r}", std::nullopt);
    for (int p = 0; p <= 2; ++p) expectBranch(n2(Rational(2 * p + 1, 2), 1, 0), 6, "V^{d,r}/I^{d,r}", std::nullopt);
    expectBranch(n2(Rational(5, 2), 0, Rational(1, 3)), 8, "L^{d,r}", std::nullopt);
    expectBranch(n2(Rational(-1, 2), 0, 2), 8, "L^{d,r}", std::nullopt);
    expectBranch(n2(Rational(1, 3), 0, Rational(-1, 3)), 8, "𝓛₊^d", std::nullopt);
    expectBranch(n2(Rational(1, 3), 0, Rational(1, 3)), 8, "𝓛₋^d", std::nullopt);
    for (int l = 0; l <= 3; ++l) {
        const std::size_t dim = static_cast<std::size_t>(2 * l + 1);
        expectBranch(n2(l, 0, -l), 2 * l + 4, "𝓛₊^ℓ/𝓘^ℓ", dim);
        if (l > 0) expectBranch(n2(l, 0, l), 2 * l + 4, "𝓛₋^ℓ/𝓘^ℓ", dim);
    }
    for (int p = 1; p <= 2; ++p) expectBranch(n2(p, 0, Rational(1, 3)), 8, "𝓛^{p,r}", static_cast<std::size_t>(4 * p));

    for (const Rational& d : {Rational(1, 3), Rational(-2)}) {
        const IntertwinerReport rep = verifyLPlusMinusIsomorphism(d, 8);
        t.expect(rep.pass() && rep.checks > 0 && rep.maxDegree == 8,
                 "d=" + q(d) + " intertwiner to degree 8 (" + std::to_string(rep.checks) + " checks)");
    }

    const Rational r(1, 5);
    for (const Rational& d : {Rational(1, 3), Rational(1), Rational(2), Rational(5, 2), Rational(3)}) {
        const FactorModule L = lModule(n2(d, 0, r));
        const VermaModule& V = L.base();
        for (int l = 0; l <= 2; ++l) {
            const ModuleVector z =
                onVacuum(V, kTimes(l, {"S+", "S-"})) + scalar((d - r) / d) * onVacuum(V, kTimes(l + 1, {}));
            const ModuleVector reduced = L.reduce(z);
            bool found = false;
            for (const auto& rep : findSingularInFactor(L, 2 * l + 2))
                if (rep.weight == Weight{2 * l + 2, 0})
                    for (const auto& v : rep.vectors) found = found || proportional(v, reduced);
            const bool expected = d == l + 1;
            t.expect(found == expected && isSingular(L, z) == expected,
                     "L^{d,r} d=" + q(d) + " r=" + q(r) + " z_s^" + std::to_string(l) +
                         (expected ? " found" : " absent"));
        }
    }
    return finish(t);
}

struct SweepModule {
    LowestWeight lw;
    int maxDegree;
};

std::vector<SweepModule> singularSweep() {
    std::vector<SweepModule> out;
    for (int p = 0; p <= 3; ++p) out.push_back({n1(Rational(2 * p - 1, 2), 1), 2 * p + 2});
    for (const Rational& d : {Rational(0), Rational(1, 4), Rational(1), Rational(7, 3)}) out.push_back({n1(d, 1), 8});
    for (const Rational& d : {Rational(0), Rational(1, 2), Rational(3)}) out.push_back({n1(d, 0), 8});
    for (int p = 1; p <= 2; ++p)
        for (const Rational& r : {Rational(0), Rational(1), Rational(-3, 2)})
            out.push_back({n2(Rational(2 * p + 1, 2), 1, r), 2 * p + 2});
    for (const Rational& d : {Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(3)})
        for (const Rational& r : {Rational(-3), Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(2)})
            out.push_back({n2(d, 0, r), 6});
    return out;
}

ModuleVector unitVector(const VermaModule& mod, const Coordinate& c) {
    return c.comp ? ModuleVector::basis(c.mono, mod.chi()) : ModuleVector::basis(c.mono);
}

Outcome criterion8() {
    Tally t;
    for (const auto& lw : {n1(Rational(1, 3), 1), n1(2, 0), n2(Rational(1, 3), 1, 2), n2(2, 0, 1)}) {
        const VermaModule mod(lw);
        std::vector<std::pair<Weight, ModuleVector>> vecs;
        for (const auto& w : mod.weightsUpTo(8))
            for (int s : mod.sectors())
                for (const auto& c : mod.coordinates(w, s, 8)) vecs.emplace_back(w, unitVector(mod, c));
        std::size_t pairs = 0;
        bool orthogonal = true;
        for (const auto& [wa, a] : vecs)
            for (const auto& [wb, b] : vecs)
                if (wa != wb) {
                    ++pairs;
                    orthogonal = orthogonal && shapovalov(mod, a, b).isZero();
                }
        t.expect(orthogonal && pairs > 0,
                 label(lw) + " cross-weight orthogonality on " + std::to_string(pairs) + " pairs to degree 8");
    }
    for (const auto& [lw, maxDegree] : singularSweep()) {
        const VermaModule mod(lw);
        const ModuleVector vac = ModuleVector::basis(mod.vacuum());
        t.expect(shapovalov(mod, vac, vac) == GradedScalar(1), label(lw) + " (v0,v0) = 1");
        const auto reps = nonzero(findSingular(mod, maxDegree));
        std::size_t weights = 0;
        std::size_t degenerate = 0;
        bool agree = true;
        for (const auto& w : mod.weightsUpTo(maxDegree)) {
            bool below = false;
            for (const auto& r : reps) {
                Weight diff = w;
                for (std::size_t k = 0; k < w.size(); ++k) diff[k] -= r.weight[k];
                if (diff[0] >= 0 && !mod.subspaceBasis(diff, diff[0]).empty()) below = true;
            }
            const GramMatrix g = gram(mod, w, maxDegree);
            ++weights;
            if (g.determinant.isZero()) ++degenerate;
            agree = agree && g.determinant.isZero() == below;
        }
        t.expect(agree, label(lw) + " det vanishes iff a singular vector lies at or below, " +
                            std::to_string(degenerate) + " of " + std::to_string(weights) + " weights degenerate");
    }
    return finish(t);
}

Outcome criterion9() {
    Tally t;
    const std::pair<Rational, Rational> params[] = {{Rational(3, 4), 1}, {1, 2}, {Rational(1, 2), 0}};
    for (const auto& [d, m] : params) {
        for (AlgebraKind kind : {AlgebraKind::ssch1, AlgebraKind::ssch2}) {
            const Realization rz = buildRealization(kind, d, m);
            const RealizationReport rep = verifyRelations(rz, rz.table, 8);
            t.expect(rep.pass && rep.testedDegree == 8 && rep.monomialsChecked > 0,
                     kindName(kind) + " d=" + q(d) + " m=" + q(m) + " realization relations on " +
                         std::to_string(rep.pairsChecked) + " pairs and " + std::to_string(rep.monomialsChecked) +
                         " monomials");
        }
        const ChiEtaReport ce = chiEtaFromPhi(m);
        t.expect(ce.pass(), "m=" + q(m) + " chi^2 = m/2, eta^2 = -m/2, {chi,eta} = 0");
    }
    return finish(t);
}

const std::vector<std::function<Outcome()>>& criteria() {
    static const std::vector<std::function<Outcome()>> list = {criterion1, criterion2, criterion3,
                                                               criterion4, criterion5, criterion6,
                                                               criterion7, criterion8, criterion9};
    return list;
}

bool scanSources(Tally& t) {
    const std::regex forbidden(R"(\b(float|double)\b|<cmath>|<math\.h>|\bstd::(sqrt|pow|exp|log)\b)");
    bool clean = true;
    std::size_t files = 0;
    for (const char* dir : {"core", "tools", "tests"}) {
        for (const auto& entry : std::filesystem::recursive_directory_iterator(std::filesystem::path(SSCHR_SOURCE_DIR) / dir)) {
            const auto ext = entry.path().extension();
            if (ext != ".cpp" && ext != ".hpp") continue;
            if (entry.path().filename() == "acceptance.cpp") continue;
            ++files;
            std::ifstream in(entry.path());
            std::string line;
            int lineNo = 0;
            while (std::getline(in, line)) {
                ++lineNo;
                const std::string code = line.substr(0, line.find("//"));
                if (std::regex_search(code, forbidden)) {
                    clean = false;
                    t.note(entry.path().filename().string() + ":" + std::to_string(lineNo) + " " + line);
                }
            }
        }
    }
    t.expect(clean && files > 0, "no floating point in " + std::to_string(files) + " source files");
    return clean;
}

Outcome criterion10() {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t k = 0; k < criteria().size(); ++k) {
        const Outcome first = criteria()[k]();
        const Outcome second = criteria()[k]();
        t.expect(first.transcript == second.transcript && first.detail == second.detail && !first.transcript.empty(),
                 "criterion " + std::to_string(k + 1) + " transcript byte-identical across runs");
    }
    scanSources(t);
    const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start);
    t.expect(seconds.count() < 600, "two full runs of criteria 1-9 under 10 minutes");
    return finish(t);
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    bool verbose = false;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "-v" || arg == "--verbose") {
            verbose = true;
            continue;
        }
        std::size_t used = 0;
        int n = 0;
        try {
            n = std::stoi(arg, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != arg.size() || n < 1 || n > 10) {
            std::cerr << "usage: sschr_acceptance [-v] [criterion 1-10 ...]\n";
            return 2;
        }
        selected.push_back(n);
    }
    if (selected.empty())
        for (int n = 1; n <= 10; ++n) selected.push_back(n);

    bool all = true;
    for (int n : selected) {
        Outcome o;
        try {
            o = n == 10 ? criterion10() : criteria()[static_cast<std::size_t>(n - 1)]();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << o.detail << std::endl;
        if (verbose) std::cout << o.transcript;
    }
    return all ? 0 : 1;
}
