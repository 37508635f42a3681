#include "sschr/singular.hpp"

#include <stdexcept>

namespace sschr {

namespace {

std::optional<int> nonnegativeInteger(const Rational& q) {
    if (q.get_den() != 1 || sgn(q) < 0 || !q.get_num().fits_sint_p()) return std::nullopt;
    return static_cast<int>(q.get_num().get_si());
}

ModuleVector vacuumVector(const VermaModule& mod) { return ModuleVector::basis(mod.vacuum()); }

ModuleVector applyG2m2K(const VermaModule& mod, const ModuleVector& v) {
    const std::size_t G = mod.generatorIndex("G");
    const std::size_t K = mod.generatorIndex("K");
    GradedScalar twoM(GaussianRational(2 * mod.lowestWeight().m));
    return mod.act(G, mod.act(G, v)) - twoM * mod.act(K, v);
}

ModuleVector applyPower(const VermaModule& mod, const std::string& g, int p, ModuleVector v) {
    const std::size_t idx = mod.generatorIndex(g);
    for (int i = 0; i < p; ++i) v = mod.act(idx, v);
    return v;
}

ModuleVector unitVector(const VermaModule& mod, const Coordinate& c) {
    if (c.comp == 0) return ModuleVector::basis(c.mono);
    return ModuleVector::basis(c.mono, GradedScalar(0, 1, mod.chiRing()));
}

Weight shifted(const Weight& w, const Degree& d) {
    Weight out = w;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += d.at(k);
    return out;
}

bool isVacuumWeight(const Weight& w) {
    for (int x : w)
        if (x != 0) return false;
    return true;
}

std::vector<std::vector<GaussianRational>> canonicalRows(const std::vector<std::vector<GaussianRational>>& vs,
                                                         std::size_t cols) {
    if (vs.empty()) return {};
    Matrix m(0, cols);
    for (const auto& v : vs) m.appendRow(v);
    return reducedEchelon(m).rows;
}

}  // namespace

std::vector<std::size_t> annihilatorSpec(const VermaModule& mod) {
    std::vector<std::string> names;
    switch (mod.kind()) {
        case AlgebraKind::sch1: names = {"H", "P"}; break;
        case AlgebraKind::ssch1: names = {"Q", "P"}; break;
        case AlgebraKind::ssch2: names = {"Q+", "Q-", "P", "X-"}; break;
    }
    std::vector<std::size_t> out;
    for (const auto& n : names) out.push_back(mod.generatorIndex(n));
    return out;
}

bool isSingular(const WeightModule& module, const ModuleVector& v) {
    for (std::size_t g : annihilatorSpec(module.base()))
        if (!module.apply(g, v).isZero()) return false;
    return true;
}

std::vector<ModuleVector> jointKernel(const WeightModule& module, const Weight& w, int sector,
                                      const std::vector<std::size_t>& annihilators) {
    const VermaModule& base = module.base();
    const std::vector<Coordinate> cols = module.weightCoordinates(w, sector);
    if (cols.empty()) return {};
    Matrix m(0, cols.size());
    for (std::size_t g : annihilators) {
        const Weight tw = shifted(w, base.generatorWeight(g));
        if (tw.at(0) < 0) continue;
        const int ts = (sector + base.algebra().parity(g)) & 1;
        const std::vector<Coordinate> rows = base.coordinates(tw, ts, tw.at(0));
        if (rows.empty()) continue;
        std::vector<std::vector<GaussianRational>> images;
        images.reserve(cols.size());
        for (const auto& c : cols) images.push_back(base.toCoordinates(module.apply(g, unitVector(base, c)), rows));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::vector<GaussianRational> row(cols.size());
            for (std::size_t j = 0; j < cols.size(); ++j) row[j] = images[j][i];
            if (!isZeroVector(row)) m.appendRow(row);
        }
    }
    std::vector<std::vector<GaussianRational>> ker;
    if (m.rows() == 0) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            std::vector<GaussianRational> e(cols.size());
            e[j] = 1;
            ker.push_back(e);
        }
    } else {
        ker = kernel(m);
    }
    std::vector<ModuleVector> out;
    for (const auto& row : canonicalRows(ker, cols.size())) out.push_back(base.fromCoordinates(row, cols));
    return out;
}

namespace {

SingularVectorReport searchOne(const WeightModule& module, const Weight& w, int sector, int maxDegree) {
    SingularVectorReport rep;
    rep.weight = w;
    rep.sector = sector;
    rep.cutoff = maxDegree;
    rep.vectors = jointKernel(module, w, sector, annihilatorSpec(module.base()));
    rep.kernelDimension = rep.vectors.size();
    rep.reverified = true;
    for (const auto& v : rep.vectors) {
        for (const auto& [mono, c] : v.terms())
            if (module.base().weight(mono) != w) rep.reverified = false;
        if (!isSingular(module, v)) rep.reverified = false;
    }
    return rep;
}

void compareWithPrediction(const VermaModule& mod, SingularVectorReport& rep) {
    const std::vector<LabeledVector> predicted = expectedSingular(mod, rep.weight, rep.sector);
    rep.predictedDimension = predicted.size();
    const std::vector<Coordinate> cols = mod.weightCoordinates(rep.weight, rep.sector);
    std::vector<std::vector<GaussianRational>> pc, kc;
    for (const auto& p : predicted) pc.push_back(mod.toCoordinates(p.vector, cols));
    for (const auto& v : rep.vectors) kc.push_back(mod.toCoordinates(v, cols));
    const auto canonical = canonicalRows(pc, cols.size());
    rep.matchesPrediction = canonical.size() == predicted.size() && canonicalRows(kc, cols.size()) == canonical;
    if (!rep.matchesPrediction || predicted.empty()) return;
    rep.matchedClosedForm.clear();
    for (const auto& p : predicted) rep.matchedClosedForm += (rep.matchedClosedForm.empty() ? "" : "+") + p.label;
    if (predicted.size() == 1) {
        const ModuleVector& k = rep.vectors.front();
        const Monomial& lead = k.leading();
        const GradedScalar kcoef = k.coefficient(lead);
        const GradedScalar pcoef = predicted.front().vector.coefficient(lead);
        GradedScalar lambda(kcoef.isPureEven() ? pcoef.even() : pcoef.odd());
        if (lambda * k == predicted.front().vector) rep.proportionality = lambda;
    }
}

}  // namespace

std::vector<SingularVectorReport> findSingularIn(const WeightModule& module, int maxDegree) {
    std::vector<SingularVectorReport> out;
    for (const auto& w : module.base().weightsUpTo(maxDegree)) {
        if (isVacuumWeight(w)) continue;
        for (int s : module.sectors()) {
            SingularVectorReport rep = searchOne(module, w, s, maxDegree);
            if (rep.kernelDimension > 0) out.push_back(std::move(rep));
        }
    }
    return out;
}

std::vector<SingularVectorReport> findSingular(const VermaModule& mod, int maxDegree) {
    std::vector<SingularVectorReport> out;
    for (const auto& w : mod.weightsUpTo(maxDegree)) {
        if (isVacuumWeight(w)) continue;
        for (int s : mod.sectors()) {
            SingularVectorReport rep = searchOne(mod, w, s, maxDegree);
            compareWithPrediction(mod, rep);
            if (rep.kernelDimension > 0 || rep.predictedDimension > 0) out.push_back(std::move(rep));
        }
    }
    return out;
}

std::vector<SingularVectorReport> findSingular(const LowestWeight& lw, int maxDegree) {
    return findSingular(VermaModule(lw), maxDegree);
}

ModuleVector closedFormN1(int p, const VermaModule& mod) {
    if (mod.kind() != AlgebraKind::ssch1) throw std::invalid_argument("closedFormN1 requires ssch1");
    if (p < 0) throw std::invalid_argument("p must be non-negative");
    const LowestWeight& lw = mod.lowestWeight();
    const ModuleVector v0 = vacuumVector(mod);
    if (sgn(lw.m) == 0) {
        if (p < 1) throw std::invalid_argument("massless closed form requires p >= 1");
        return applyPower(mod, "G", p, v0);
    }
    if (lw.d != Rational(2 * p - 1, 2)) throw std::invalid_argument("closed form requires d = p - 1/2");
    ModuleVector v = mod.act("G", v0) + (GradedScalar(-2) * mod.chi()) * mod.act("S", v0);
    for (int i = 0; i < p; ++i) v = applyG2m2K(mod, v);
    return v;
}

ModuleVector closedFormN1Odd(int p, const VermaModule& mod) {
    if (mod.kind() != AlgebraKind::ssch1) throw std::invalid_argument("closedFormN1Odd requires ssch1");
    if (p < 0) throw std::invalid_argument("p must be non-negative");
    return applyPower(mod, "G", p, mod.act("S", vacuumVector(mod)));
}

ModuleVector closedFormN2Odd(const VermaModule& mod) {
    if (mod.kind() != AlgebraKind::ssch2) throw std::invalid_argument("closedFormN2Odd requires ssch2");
    const ModuleVector v0 = vacuumVector(mod);
    GradedScalar m(GaussianRational(mod.lowestWeight().m));
    return mod.act("G", mod.act("X+", v0)) - m * mod.act("S+", v0);
}

ModuleVector closedFormN2(int p, const VermaModule& mod) {
    if (mod.kind() != AlgebraKind::ssch2) throw std::invalid_argument("closedFormN2 requires ssch2");
    if (p < 0) throw std::invalid_argument("p must be non-negative");
    const LowestWeight& lw = mod.lowestWeight();
    const ModuleVector v0 = vacuumVector(mod);
    if (sgn(lw.m) == 0) return applyPower(mod, "G", p, mod.act("X+", v0));
    if (lw.d != Rational(2 * p + 1, 2)) throw std::invalid_argument("closed form requires d = p + 1/2");
    const GradedScalar m(GaussianRational(lw.m));
    const GradedScalar c(GaussianRational(Rational(lw.d + lw.r + 1) / Rational(2 * lw.d + 1)));
    ModuleVector u = mod.act("G", mod.act("S-", mod.act("X+", v0)));
    u += m * mod.act("S+", mod.act("S-", v0));
    u += GradedScalar(2) * m * mod.act("K", v0);
    u += c * applyG2m2K(mod, v0);
    for (int i = 0; i < p; ++i) u = applyG2m2K(mod, u);
    return u;
}

ModuleVector closedFormN2Extra(int p, const VermaModule& mod) {
    if (mod.kind() != AlgebraKind::ssch2) throw std::invalid_argument("closedFormN2Extra requires ssch2");
    if (p < 0) throw std::invalid_argument("p must be non-negative");
    const ModuleVector v0 = vacuumVector(mod);
    return applyPower(mod, "G", p, mod.act("S-", mod.act("X+", v0)));
}

ModuleVector closedFormN2Mixed(int p, const VermaModule& mod) {
    if (mod.kind() != AlgebraKind::ssch2) throw std::invalid_argument("closedFormN2Mixed requires ssch2");
    if (p < 1) throw std::invalid_argument("p must be positive");
    const LowestWeight& lw = mod.lowestWeight();
    const Rational den = p - lw.d + lw.r;
    if (sgn(den) == 0) throw std::invalid_argument("mixed closed form requires r != d - p");
    const ModuleVector v0 = vacuumVector(mod);
    GradedScalar c(GaussianRational(Rational(p) / den));
    return applyPower(mod, "G", p, v0) + c * closedFormN2Extra(p - 1, mod);
}

ModuleVector closedFormSch1(int p, const VermaModule& mod) {
    if (mod.kind() != AlgebraKind::sch1) throw std::invalid_argument("closedFormSch1 requires sch1");
    if (p < 1) throw std::invalid_argument("p must be positive");
    const LowestWeight& lw = mod.lowestWeight();
    ModuleVector v = vacuumVector(mod);
    if (sgn(lw.m) == 0) return applyPower(mod, "G", p, v);
    if (lw.d != Rational(2 * p - 3, 2)) throw std::invalid_argument("closed form requires d = p - 3/2");
    for (int i = 0; i < p; ++i) v = applyG2m2K(mod, v);
    return v;
}

std::vector<LabeledVector> expectedSingular(const VermaModule& mod, const Weight& w, int sector) {
    const LowestWeight& lw = mod.lowestWeight();
    const bool massless = sgn(lw.m) == 0;
    const int n = w.at(0);
    std::vector<LabeledVector> out;
    switch (mod.kind()) {
        case AlgebraKind::sch1: {
            if (sector != 0 || n < 1) break;
            if (massless) {
                out.push_back({"prop1-massless", closedFormSch1(n, mod)});
            } else if (auto p = nonnegativeInteger(lw.d + Rational(3, 2)); p && *p >= 1 && n == 2 * *p) {
                out.push_back({"prop1-massive", closedFormSch1(*p, mod)});
            }
            break;
        }
        case AlgebraKind::ssch1: {
            if (massless) {
                if (sector == 0 && n >= 1) out.push_back({"prop2-massless", closedFormN1(n, mod)});
                if (auto p = nonnegativeInteger(lw.d); p && sector == 1 && n == *p + 1)
                    out.push_back({"prop2-massless-odd", closedFormN1Odd(*p, mod)});
            } else if (auto p = nonnegativeInteger(lw.d + Rational(1, 2)); p && sector == 0 && n == 2 * *p + 1) {
                out.push_back({"prop2-massive", closedFormN1(*p, mod)});
            }
            break;
        }
        case AlgebraKind::ssch2: {
            const int n2 = w.at(1);
            if (sector == 1 && n == 1 && n2 == -1 && lw.r == lw.d)
                out.push_back({"sminus", mod.act("S-", vacuumVector(mod))});
            if (massless) {
                if (sector == 1 && n2 == 1) out.push_back({"prop4-massless", closedFormN2(n, mod)});
                if (sector == 0 && n2 == 0 && n >= 1) {
                    if (lw.r == lw.d - n)
                        out.push_back({"prop4-massless-extra", closedFormN2Extra(n - 1, mod)});
                    else
                        out.push_back({"prop4-massless-mixed", closedFormN2Mixed(n, mod)});
                }
            } else {
                if (auto p = nonnegativeInteger(lw.d - Rational(1, 2)); p && sector == 0 && n2 == 0 && n == 2 * *p + 2)
                    out.push_back({"prop4-massive", closedFormN2(*p, mod)});
                if (sector == 1 && n == 1 && n2 == 1 && lw.r == -lw.d - 1)
                    out.push_back({"prop4-massive-odd", closedFormN2Odd(mod)});
            }
            break;
        }
    }
    return out;
}

RecurrenceCoefficients solvedCoefficients(int p, const LowestWeight& lw) {
    RecurrenceCoefficients c;
    const Rational d(2 * p + 1, 2);
    c.alpha = 1;
    c.beta = lw.m;
    c.gamma = Rational(d + lw.r + 1) / Rational(2 * d + 1);
    c.delta = 2 * lw.m * (c.alpha - c.gamma);
    return c;
}

RecurrenceReport checkRecurrences(int p, const LowestWeight& lw, const RecurrenceCoefficients& c) {
    if (lw.kind != AlgebraKind::ssch2 || sgn(lw.m) == 0) throw std::invalid_argument("recurrences require ssch2 with m != 0");
    if (p < 0) throw std::invalid_argument("p must be non-negative");
    const Rational& d = lw.d;
    const Rational& r = lw.r;
    const Rational& m = lw.m;
    const int n = 2 * p;
    std::vector<Rational> a = c.a;
    if (a.empty()) {
        Rational binom = 1;
        Rational power = 1;
        for (int l = 0; l <= p; ++l) {
            a.push_back(binom * power);
            binom = binom * (p - l) / (l + 1);
            power *= -2 * m;
        }
    }
    auto at = [&](int l) { return l < 0 || l >= static_cast<int>(a.size()) ? Rational(0) : a[static_cast<std::size_t>(l)]; };
    const Rational &al = c.alpha, &ga = c.gamma, &de = c.delta;
    RecurrenceReport rep;
    for (int l = 0; l <= p; ++l) {
        const int k = n - 2 * l;
        Rational res[5];
        res[0] = ((d - r - n + 2 * l) * al + k * ga) * at(l + 1) + (n - 2 * l) * de * at(l);
        res[1] = (l + 1) * ga * at(l + 1) + ((-d + r + n - 2 * l) * m * al + (l + 1) * de) * at(l);
        res[2] = (l + 1) * at(l + 1) + (n - 2 * l) * m * at(l);
        res[3] = (l + 1) * ga * at(l + 1) + ((d + r - 2 * l - 1) * m * al + (l + 1) * de) * at(l);
        res[4] = (-2 * m * al + (n - 2 * l) * m * ga + (l + 2) * de) * at(l + 1) + (n - 2 * l) * m * de * at(l) +
                 (l + 2) * ga * at(l + 2);
        for (int i = 0; i < 5; ++i)
            if (sgn(res[i]) != 0) {
                rep.pass[i] = false;
                rep.failures.push_back({i + 1, l, res[i]});
            }
    }
    rep.dHolds = d == Rational(n + 1, 2);
    rep.betaHolds = c.beta == al * m;
    rep.gammaHolds = 2 * d + 1 != 0 && ga == (d + r + 1) / (2 * d + 1) * al;
    rep.deltaHolds = de == 2 * m * (al - ga);
    return rep;
}

}  // namespace sschr
