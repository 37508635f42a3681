#include "sschr/quotient.hpp"

#include "sschr/adjoint.hpp"

#include <array>
#include <stdexcept>

namespace sschr {

namespace {

std::optional<int> nonnegativeInteger(const Rational& q) {
    if (q.get_den() != 1 || sgn(q) < 0 || !q.get_num().fits_sint_p()) return std::nullopt;
    return static_cast<int>(q.get_num().get_si());
}

Weight shifted(const Weight& w, const Degree& d, int sign) {
    Weight out = w;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += sign * d.at(k);
    return out;
}

ModuleVector unitVector(const VermaModule& mod, const Coordinate& c) {
    if (c.comp == 0) return ModuleVector::basis(c.mono);
    return ModuleVector::basis(c.mono, GradedScalar(0, 1, mod.chiRing()));
}

ModuleVector applyLie(const WeightModule& module, const LieElement& x, const ModuleVector& v) {
    ModuleVector out;
    for (const auto& [g, c] : x.terms()) out += GradedScalar(c) * module.apply(g, v);
    return out;
}

bool invertible(const GradedScalar& c) {
    // (e + oχ)(e - oχ) = e² - o²χ²
    Rational chiSq = c.ring() ? c.ring()->chiSquare() : Rational(0);
    GaussianRational n = c.even() * c.even() - c.odd() * c.odd() * GaussianRational(chiSq);
    return !n.isZero();
}

/// Generators x1..xk with mono v0 = x1 (x2 (... xk v0)).
std::vector<std::size_t> pbwWord(const VermaModule& mod, const Monomial& mono) {
    std::vector<std::size_t> word;
    for (std::size_t i = 0; i < mono.size(); ++i)
        for (int e = 0; e < mono[i]; ++e) word.push_back(mod.plusOrder()[i]);
    return word;
}

}  // namespace

std::map<std::pair<Weight, int>, ModuleVector> homogeneousComponents(const VermaModule& mod, const ModuleVector& v) {
    std::map<std::pair<Weight, int>, ModuleVector> out;
    for (const auto& [mono, c] : v.terms()) {
        const Weight w = mod.weight(mono);
        const int p = mod.parity(mono);
        if (mod.chiActive()) {
            if (!c.even().isZero()) out[{w, p}].add(mono, GradedScalar(c.even()));
            if (!c.odd().isZero()) out[{w, p ^ 1}].add(mono, GradedScalar(0, c.odd(), mod.chiRing()));
        } else {
            if (!c.odd().isZero()) throw std::logic_error("odd scalar in a module without χ");
            out[{w, p}].add(mono, c);
        }
    }
    return out;
}

FactorModule::FactorModule(std::shared_ptr<const VermaModule> verma)
    : verma_(std::move(verma)), cache_(std::make_shared<Cache>()) {
    if (!verma_) throw std::invalid_argument("null Verma module");
}

FactorModule FactorModule::quotient(const ModuleVector& v) const {
    const ModuleVector r = reduce(v);
    if (r.isZero()) throw std::invalid_argument("vector lies in the submodule");
    if (homogeneousComponents(*verma_, r).size() != 1) throw std::invalid_argument("vector is not homogeneous");
    for (std::size_t a : annihilatorSpec(*verma_))
        if (!contains(verma_->act(a, r))) throw std::invalid_argument("vector is not singular in the factor module");
    if (!invertible(r.coefficient(r.leading()))) throw std::invalid_argument("leading coefficient is not invertible");
    FactorModule out(verma_);
    out.generators_ = generators_;
    out.generators_.push_back(r);
    return out;
}

FactorModule::Span FactorModule::computeSpan(const Weight& w, int sector) const {
    // Both sectors of the weight are built together so the zero part can mix them.
    std::array<Span, 2> spans;
    std::array<std::vector<std::vector<GaussianRational>>, 2> rows;
    for (int s = 0; s < 2; ++s) spans[s].coords = verma_->coordinates(w, s, w.at(0));
    auto addVector = [&](const ModuleVector& v) {
        for (const auto& [key, comp] : homogeneousComponents(*verma_, v)) {
            if (key.first != w) throw std::logic_error("submodule vector left its weight");
            rows[key.second].push_back(verma_->toCoordinates(comp, spans[key.second].coords));
        }
    };
    for (const auto& g : generators_) {
        auto comps = homogeneousComponents(*verma_, g);
        if (comps.begin()->first.first != w) continue;
        addVector(g);
        if (verma_->chiActive()) addVector(verma_->chi() * g);
    }
    const StructureTable& t = verma_->algebra();
    for (std::size_t x : verma_->plusOrder()) {
        const Weight lower = shifted(w, t.degree(x), -1);
        if (lower.at(0) < 0 || verma_->subspaceBasis(lower, lower.at(0)).empty()) continue;
        for (int s = 0; s < 2; ++s) {
            const Span& sp = span(lower, s);
            for (const auto& row : sp.rref.rows) addVector(verma_->act(x, verma_->fromCoordinates(row, sp.coords)));
        }
    }
    auto echelon = [&](int s) {
        Matrix m(0, spans[s].coords.size());
        for (const auto& r : rows[s]) m.appendRow(r);
        return reducedEchelon(m);
    };
    for (int s = 0; s < 2; ++s) spans[s].rref = echelon(s);
    for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t z : verma_->parts().zero)
            for (int s = 0; s < 2; ++s)
                for (const auto& row : spans[s].rref.rows)
                    addVector(verma_->act(z, verma_->fromCoordinates(row, spans[s].coords)));
        for (int s = 0; s < 2; ++s) {
            ReducedEchelon next = echelon(s);
            if (next.rank() != spans[s].rref.rank()) grew = true;
            spans[s].rref = std::move(next);
            rows[s] = spans[s].rref.rows;
        }
    }
    std::lock_guard<std::recursive_mutex> lock(cache_->mutex);
    cache_->spans.emplace(std::make_pair(w, 1 - sector), spans[1 - sector]);
    return spans[sector];
}

const FactorModule::Span& FactorModule::span(const Weight& w, int sector) const {
    std::lock_guard<std::recursive_mutex> lock(cache_->mutex);
    auto key = std::make_pair(w, sector);
    auto it = cache_->spans.find(key);
    if (it != cache_->spans.end()) return it->second;
    Span sp = computeSpan(w, sector);
    return cache_->spans.insert_or_assign(key, std::move(sp)).first->second;
}

std::vector<Coordinate> FactorModule::weightCoordinates(const Weight& w, int sector) const {
    if (w.at(0) < 0) return {};
    const Span& sp = span(w, sector);
    std::vector<bool> pivot(sp.coords.size(), false);
    for (std::size_t p : sp.rref.pivots) pivot[p] = true;
    std::vector<Coordinate> out;
    for (std::size_t j = 0; j < sp.coords.size(); ++j)
        if (!pivot[j]) out.push_back(sp.coords[j]);
    return out;
}

std::size_t FactorModule::submoduleDimension(const Weight& w, int sector) const {
    if (w.at(0) < 0) return 0;
    return span(w, sector).rref.rank();
}

std::size_t FactorModule::levelDimension(int n) const {
    std::size_t total = 0;
    for (const auto& w : verma_->weightsUpTo(n))
        if (w.at(0) == n)
            for (int s : sectors()) total += dimension(w, s);
    return total;
}

std::vector<RewritingRule> FactorModule::rewritingRules(const Weight& w, int sector) const {
    const Span& sp = span(w, sector);
    std::vector<RewritingRule> out;
    for (std::size_t i = 0; i < sp.rref.rows.size(); ++i) {
        std::vector<GaussianRational> rest = sp.rref.rows[i];
        rest[sp.rref.pivots[i]] = 0;
        for (auto& x : rest) x = -x;
        out.push_back({sp.coords[sp.rref.pivots[i]], verma_->fromCoordinates(rest, sp.coords)});
    }
    return out;
}

ModuleVector FactorModule::reduce(const ModuleVector& v) const {
    if (generators_.empty()) return v;
    ModuleVector out;
    for (const auto& [key, comp] : homogeneousComponents(*verma_, v)) {
        if (key.first.at(0) < 0) continue;
        const Span& sp = span(key.first, key.second);
        std::vector<GaussianRational> x = verma_->toCoordinates(comp, sp.coords);
        for (std::size_t i = 0; i < sp.rref.rows.size(); ++i) {
            const GaussianRational f = x[sp.rref.pivots[i]];
            if (f.isZero()) continue;
            const auto& row = sp.rref.rows[i];
            for (std::size_t j = 0; j < x.size(); ++j)
                if (!row[j].isZero()) x[j] -= f * row[j];
        }
        out += verma_->fromCoordinates(x, sp.coords);
    }
    return out;
}

ModuleVector FactorModule::apply(std::size_t g, const ModuleVector& v) const { return reduce(verma_->act(g, v)); }

ModuleVector FactorModule::apply(const LieElement& x, const ModuleVector& v) const { return applyLie(*this, x, v); }

FactorModule quotientBySingular(std::shared_ptr<const VermaModule> verma, const ModuleVector& vs) {
    if (!isSingular(*verma, vs)) throw std::invalid_argument("vector is not singular");
    return FactorModule(std::move(verma)).quotient(vs);
}

FactorModule quotientBySingular(const LowestWeight& lw, const ModuleVector& vs) {
    return quotientBySingular(std::make_shared<const VermaModule>(lw), vs);
}

std::vector<SingularVectorReport> findSingularInFactor(const FactorModule& fm, int maxDegree) {
    return findSingularIn(fm, maxDegree);
}

ClosureReport verifyModuleClosure(const WeightModule& module, int maxDegree) {
    ClosureReport r;
    const VermaModule& base = module.base();
    const StructureTable& t = base.algebra();
    for (const auto& w : base.weightsUpTo(maxDegree))
        for (int s : module.sectors())
            for (const auto& c : module.weightCoordinates(w, s)) {
                const ModuleVector b = unitVector(base, c);
                for (std::size_t x = 0; x < t.size(); ++x)
                    for (std::size_t y = 0; y < t.size(); ++y) {
                        ++r.checks;
                        ModuleVector lhs = module.apply(x, module.apply(y, b));
                        ModuleVector swapped = module.apply(y, module.apply(x, b));
                        if (t.parity(x) && t.parity(y))
                            lhs += swapped;
                        else
                            lhs -= swapped;
                        if (!(lhs == applyLie(module, t.bracket(x, y), b))) {
                            r.pass = false;
                            r.failures.push_back({x, y, c.mono});
                        }
                    }
            }
    return r;
}

namespace {

ModuleVector onVacuum(const VermaModule& mod, const std::vector<std::string>& word) { return mod.normalOrder(word); }

std::vector<std::string> kPower(int l, std::vector<std::string> tail) {
    std::vector<std::string> w(static_cast<std::size_t>(l), "K");
    w.insert(w.end(), tail.begin(), tail.end());
    return w;
}

struct Chain {
    FactorModule module;
    std::vector<ChainStep> steps;
    std::string name;

    void step(const std::string& submodule, const std::string& result, const ModuleVector& v) {
        module = module.quotient(v);
        ChainStep s;
        s.submodule = submodule;
        s.module = result;
        s.generator = module.generators().back();
        s.weight = module.base().weight(s.generator.leading());
        steps.push_back(std::move(s));
        name = result;
    }
};

Chain runChain(const LowestWeight& lw) {
    auto verma = std::make_shared<const VermaModule>(lw);
    const VermaModule& V = *verma;
    Chain c{FactorModule(verma), {}, ""};
    const bool massless = sgn(lw.m) == 0;
    if (lw.kind == AlgebraKind::ssch1) {
        c.name = "V^d";
        if (!massless) {
            if (auto p = nonnegativeInteger(lw.d + Rational(1, 2))) c.step("I^d", "V^d/I^d", closedFormN1(*p, V));
            return c;
        }
        c.step("I^1", "V^d/I^1", closedFormN1(1, V));
        if (auto p = nonnegativeInteger(lw.d)) c.step("𝓘^p", "(V^p/I^1)/𝓘^p", onVacuum(V, kPower(*p, {"S"})));
        return c;
    }
    if (lw.kind != AlgebraKind::ssch2) throw std::invalid_argument("classification supports ssch1 and ssch2");
    c.name = "V^{d,r}";
    if (!massless) {
        if (auto p = nonnegativeInteger(lw.d - Rational(1, 2))) c.step("I^{d,r}", "V^{d,r}/I^{d,r}", closedFormN2(*p, V));
        return c;
    }
    c.step("I^0", "V^{d,r}/I^0", onVacuum(V, {"X+"}));
    c.step("𝓘^1", "L^{d,r}", onVacuum(V, {"G"}));
    const auto ell = nonnegativeInteger(lw.d);
    if (lw.r == -lw.d) {
        c.step("U(s+)S+z0", "𝓛₊^d", onVacuum(V, {"S+"}));
        if (ell) c.step("𝓘^ℓ", "𝓛₊^ℓ/𝓘^ℓ", onVacuum(V, kPower(*ell, {"S-"})));
    } else if (lw.r == lw.d) {
        c.step("U(s+)S-z0", "𝓛₋^d", onVacuum(V, {"S-"}));
        if (ell) c.step("𝓘^ℓ", "𝓛₋^ℓ/𝓘^ℓ", onVacuum(V, kPower(*ell, {"S+"})));
    } else if (ell && *ell >= 1) {
        const int l = *ell - 1;
        ModuleVector z = onVacuum(V, kPower(l, {"S+", "S-"}));
        z += GradedScalar(GaussianRational((lw.d - lw.r) / lw.d)) * onVacuum(V, kPower(l + 1, {}));
        c.step("U(s+)z_s^{p-1}", "𝓛^{p,r}", z);
    }
    return c;
}

}  // namespace

FactorModule terminalModule(const LowestWeight& lw) { return runChain(lw).module; }

ClassificationRecord classify(const LowestWeight& lw, int cutoff) {
    if (cutoff <= 0) throw std::invalid_argument("cutoff must be positive");
    Chain c = runChain(lw);
    ClassificationRecord rec;
    rec.kind = lw.kind;
    rec.d = lw.d;
    rec.m = lw.m;
    rec.r = lw.r;
    rec.cutoff = cutoff;
    rec.verdict = c.name;
    rec.chain = c.steps;
    for (int n = 0; n <= cutoff; ++n) rec.levelDimensions.push_back(c.module.levelDimension(n));
    for (int n = 1; n + 1 <= cutoff; ++n)
        if (rec.levelDimensions[n] == 0 && rec.levelDimensions[n + 1] == 0) {
            std::size_t total = 0;
            for (int k = 0; k < n; ++k) total += rec.levelDimensions[k];
            rec.dimension = total;
            break;
        }
    rec.irreducibleUpToCutoff = findSingularInFactor(c.module, cutoff).empty();
    return rec;
}

std::vector<LieElement> chargeConjugation(const StructureTable& t) {
    std::vector<LieElement> images(t.size());
    for (std::size_t g = 0; g < t.size(); ++g) {
        std::string name = t.generator(g).name;
        GaussianRational c = 1;
        if (name == "R") c = -1;
        if (name.size() == 2 && name[1] == '+') name[1] = '-';
        else if (name.size() == 2 && name[1] == '-') name[1] = '+';
        images[g] = t.gen(name, c);
    }
    return images;
}

IntertwinerReport verifyLPlusMinusIsomorphism(const Rational& d, int maxDegree) {
    IntertwinerReport rep;
    rep.maxDegree = maxDegree;
    auto build = [&](const Rational& r, const char* sm) {
        auto verma = std::make_shared<const VermaModule>(LowestWeight{AlgebraKind::ssch2, d, 0, r, std::nullopt});
        FactorModule fm(verma);
        fm = fm.quotient(verma->normalOrder(std::vector<std::string>{"X+"}));
        fm = fm.quotient(verma->normalOrder(std::vector<std::string>{"G"}));
        return fm.quotient(verma->normalOrder(std::vector<std::string>{sm}));
    };
    const FactorModule plus = build(-d, "S+");
    const FactorModule minus = build(d, "S-");
    const StructureTable& t = plus.base().algebra();
    const std::vector<LieElement> tau = chargeConjugation(t);
    auto tauOf = [&](const LieElement& x) {
        LieElement out;
        for (const auto& [g, c] : x.terms()) out += c * tau[g];
        return out;
    };
    rep.automorphism = true;
    for (std::size_t x = 0; x < t.size(); ++x)
        for (std::size_t y = 0; y < t.size(); ++y)
            if (!(tauOf(t.bracket(x, y)) == t.bracket(tau[x], tau[y]))) rep.automorphism = false;

    const ModuleVector vacMinus = ModuleVector::basis(minus.base().vacuum());
    auto phi = [&](const ModuleVector& v) {
        ModuleVector out;
        const ModuleVector reduced = plus.reduce(v);
        for (const auto& [mono, c] : reduced.terms()) {
            const std::vector<std::size_t> word = pbwWord(plus.base(), mono);
            ModuleVector img = vacMinus;
            for (auto it = word.rbegin(); it != word.rend(); ++it) img = minus.apply(tau[*it], img);
            out += c * img;
        }
        return out;
    };
    for (const auto& w : plus.base().weightsUpTo(maxDegree))
        for (int s : plus.sectors()) {
            const auto cols = plus.weightCoordinates(w, s);
            const Weight mirrored{w.at(0), -w.at(1)};
            const auto target = minus.base().subspaceBasis(mirrored, mirrored.at(0)).empty()
                                    ? std::vector<Coordinate>{}
                                    : minus.weightCoordinates(mirrored, s);
            if (cols.size() != target.size()) rep.bijective = false;
            Matrix m(0, target.size());
            for (const auto& c : cols) {
                const ModuleVector b = ModuleVector::basis(c.mono);
                const ModuleVector img = phi(b);
                if (!target.empty()) m.appendRow(minus.base().toCoordinates(img, target));
                for (std::size_t g = 0; g < t.size(); ++g) {
                    ++rep.checks;
                    if (!(phi(plus.apply(g, b)) == minus.apply(tau[g], img))) rep.intertwines = false;
                }
            }
            if (!cols.empty() && (target.empty() || rank(m) != cols.size())) rep.bijective = false;
        }
    return rep;
}

TrivialActionReport verifyTrivialAction(const WeightModule& module, const std::vector<std::string>& generators,
                                        int maxDegree) {
    TrivialActionReport rep;
    const VermaModule& base = module.base();
    for (const auto& name : generators) {
        const std::size_t g = base.generatorIndex(name);
        bool ok = true;
        for (const auto& w : base.weightsUpTo(maxDegree))
            for (int s : module.sectors())
                for (const auto& c : module.weightCoordinates(w, s)) {
                    ++rep.checks;
                    if (!module.apply(g, unitVector(base, c)).isZero()) ok = false;
                }
        if (!ok) {
            rep.pass = false;
            rep.failing.push_back(name);
        }
    }
    return rep;
}

GradedScalar shapovalov(const VermaModule& mod, const ModuleVector& a, const ModuleVector& b, int epsilon, int lambda) {
    const AdjointMap omega = buildAdjoint(mod.algebra(), AdjointKind::omega1, epsilon, lambda);
    const Monomial vac = mod.vacuum();
    GradedScalar out;
    for (const auto& [mono, c] : a.terms()) {
        ModuleVector v = b;
        for (std::size_t x : pbwWord(mod, mono)) v = mod.act(omega.images[x], v);
        out += c * v.coefficient(vac);
    }
    return out;
}

GramMatrix gram(const VermaModule& mod, const Weight& w, int cutoff, int epsilon, int lambda) {
    GramMatrix gm;
    gm.weight = w;
    for (int s : mod.sectors())
        for (const auto& c : mod.coordinates(w, s, cutoff)) gm.basis.push_back(unitVector(mod, c));
    const std::size_t n = gm.basis.size();
    gm.entries = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const GradedScalar e = shapovalov(mod, gm.basis[i], gm.basis[j], epsilon, lambda);
            if (!e.odd().isZero() || !e.even().isReal()) gm.real = false;
            gm.entries(i, j) = e.even();
        }
    gm.determinant = n == 0 ? GaussianRational(1) : determinant(gm.entries);
    gm.rank = n == 0 ? 0 : rank(gm.entries);
    return gm;
}

}  // namespace sschr
