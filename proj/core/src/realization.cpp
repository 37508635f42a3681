#include "sschr/realization.hpp"

#include <sstream>
#include <stdexcept>

namespace sschr {

namespace {

GaussianRational fallingFactorial(int n, int k) {
    GaussianRational out = 1;
    for (int i = 0; i < k; ++i) out *= GaussianRational(Rational(n - i));
    return out;
}

std::string power(const char* var, int e) {
    if (e == 0) return "";
    return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
}

std::string joinFactors(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        if (!out.empty()) out += " ";
        out += p;
    }
    return out;
}

std::string renderMonomial(const OddVariableAlgebra& vars, const SuperMonomial& m) {
    const std::string out =
        joinFactors({power("t", m.t), power("x", m.x), m.odd ? vars.renderBlade(m.odd) : std::string()});
    return out.empty() ? "1" : out;
}

std::string renderCoefficient(const GaussianRational& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

int oddIndex(const OddVariableAlgebra& vars, const std::string& name) {
    return static_cast<int>(vars.indexOf(name));
}

}  // namespace

SuperPoly SuperPoly::monomial(std::shared_ptr<const OddVariableAlgebra> vars, SuperMonomial mono, GaussianRational c) {
    SuperPoly p(std::move(vars));
    p.add(mono, c);
    return p;
}

SuperPoly SuperPoly::constant(std::shared_ptr<const OddVariableAlgebra> vars, GaussianRational c) {
    return monomial(std::move(vars), {}, std::move(c));
}

SuperPoly SuperPoly::variable(std::shared_ptr<const OddVariableAlgebra> vars, const std::string& name) {
    if (name == "t") return monomial(std::move(vars), {1, 0, 0});
    if (name == "x") return monomial(std::move(vars), {0, 1, 0});
    const int k = oddIndex(*vars, name);
    return monomial(std::move(vars), {0, 0, OddMask{1} << k});
}

void SuperPoly::add(const SuperMonomial& mono, const GaussianRational& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

std::optional<int> SuperPoly::parity() const {
    std::optional<int> p;
    for (const auto& [mono, c] : terms_) {
        const int q = bladeParity(mono.odd);
        if (p && *p != q) return std::nullopt;
        p = q;
    }
    return p;
}

int SuperPoly::degree() const {
    int deg = -1;
    for (const auto& [mono, c] : terms_) deg = std::max(deg, mono.t + mono.x + __builtin_popcount(mono.odd));
    return deg;
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
    if (!vars_) vars_ = o.vars_;
    for (const auto& [mono, c] : o.terms_) add(mono, c);
    return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
    if (!vars_) vars_ = o.vars_;
    for (const auto& [mono, c] : o.terms_) add(mono, -c);
    return *this;
}

SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) {
    SuperPoly out(a.vars_ ? a.vars_ : b.vars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            const auto prod = out.vars_->multiply(ma.odd, mb.odd);
            if (prod.factor.isZero()) continue;
            out.add({ma.t + mb.t, ma.x + mb.x, prod.mask}, ca * cb * prod.factor);
        }
    return out;
}

SuperPoly operator*(const GaussianRational& c, SuperPoly a) {
    if (c.isZero()) {
        a.terms_.clear();
        return a;
    }
    for (auto& [mono, v] : a.terms_) v *= c;
    return a;
}

std::string SuperPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + renderCoefficient(c) + ") " + renderMonomial(*vars_, mono);
    }
    return out;
}

SuperDiffOp SuperDiffOp::multiplication(const SuperPoly& f) {
    SuperDiffOp op(f.vars());
    op.add({}, f);
    return op;
}

SuperDiffOp SuperDiffOp::scalar(std::shared_ptr<const OddVariableAlgebra> vars, GaussianRational c) {
    return multiplication(SuperPoly::constant(std::move(vars), std::move(c)));
}

SuperDiffOp SuperDiffOp::partial(std::shared_ptr<const OddVariableAlgebra> vars, const std::string& name) {
    SuperDiffOp op(vars);
    DerivativeWord w;
    if (name == "t") {
        w.t = 1;
    } else if (name == "x") {
        w.x = 1;
    } else {
        const int k = oddIndex(*vars, name);
        if (sgn(vars->generator(static_cast<std::size_t>(k)).square) != 0)
            throw std::invalid_argument("no derivative along the Clifford variable " + name);
        w.odd = OddMask{1} << k;
    }
    op.add(w, SuperPoly::constant(vars, 1));
    return op;
}

void SuperDiffOp::add(const DerivativeWord& w, const SuperPoly& c) {
    if (c.isZero()) return;
    if (!vars_) vars_ = c.vars();
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

SuperPoly SuperDiffOp::apply(const SuperPoly& f) const {
    SuperPoly out(vars_ ? vars_ : f.vars());
    for (const auto& [w, coef] : terms_) {
        SuperPoly g(out.vars());
        for (const auto& [mono, c] : f.terms()) {
            if (mono.t < w.t || mono.x < w.x || (mono.odd & w.odd) != w.odd) continue;
            GaussianRational factor = c * fallingFactorial(mono.t, w.t) * fallingFactorial(mono.x, w.x);
            OddMask odd = mono.odd;
            for (int k = 31; k >= 0; --k) {
                if (!(w.odd & (OddMask{1} << k))) continue;
                if (bitsBelow(odd, k) & 1) factor = -factor;
                odd &= ~(OddMask{1} << k);
            }
            g.add({mono.t - w.t, mono.x - w.x, odd}, factor);
        }
        out += coef * g;
    }
    return out;
}

std::optional<int> SuperDiffOp::parity() const {
    std::optional<int> p;
    for (const auto& [w, coef] : terms_) {
        const auto cp = coef.parity();
        if (!cp) return std::nullopt;
        const int q = (*cp + bladeParity(w.odd)) & 1;
        if (p && *p != q) return std::nullopt;
        p = q;
    }
    return p;
}

SuperDiffOp& SuperDiffOp::operator+=(const SuperDiffOp& o) {
    if (!vars_) vars_ = o.vars_;
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

SuperDiffOp& SuperDiffOp::operator-=(const SuperDiffOp& o) {
    if (!vars_) vars_ = o.vars_;
    for (const auto& [w, c] : o.terms_) add(w, GaussianRational(-1) * c);
    return *this;
}

SuperDiffOp operator*(const SuperPoly& f, const SuperDiffOp& op) {
    SuperDiffOp out(op.vars_ ? op.vars_ : f.vars());
    for (const auto& [w, c] : op.terms_) out.add(w, f * c);
    return out;
}

SuperDiffOp operator*(const GaussianRational& c, SuperDiffOp op) {
    SuperDiffOp out(op.vars_);
    for (const auto& [w, coef] : op.terms_) out.add(w, c * coef);
    return out;
}

std::string SuperDiffOp::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, coef] : terms_) {
        std::vector<std::string> parts{"(" + coef.str() + ")", power("∂t", w.t), power("∂x", w.x)};
        for (std::size_t k = 0; k < vars_->size(); ++k)
            if (w.odd & (OddMask{1} << k)) parts.push_back("∂" + vars_->generator(k).name);
        if (!out.empty()) out += " + ";
        out += joinFactors(parts);
    }
    return out;
}

Realization buildRealization(AlgebraKind kind, const Rational& d, const Rational& m) {
    if (kind == AlgebraKind::sch1) throw std::invalid_argument("no realization for sch1");
    std::shared_ptr<const OddVariableAlgebra> vars;
    if (kind == AlgebraKind::ssch1)
        vars = std::make_shared<const OddVariableAlgebra>(
            std::vector<OddGenerator>{{"θ", 0}, {"η", Rational(-m / 2)}});
    else
        vars = std::make_shared<const OddVariableAlgebra>(
            std::vector<OddGenerator>{{"θ", 0}, {"φ", 0}, {"ρ", 0}});

    Realization rz{kind, d, m, vars, buildAlgebra(kind), {}};
    auto v = [&](const std::string& name) { return SuperPoly::variable(vars, name); };
    auto c = [&](const Rational& q) { return SuperPoly::constant(vars, GaussianRational(q)); };
    auto del = [&](const std::string& name) { return SuperDiffOp::partial(vars, name); };
    auto mul = [&](const SuperPoly& f) { return SuperDiffOp::multiplication(f); };
    const SuperPoly t = v("t"), x = v("x"), th = v("θ");
    rz.ops.assign(rz.table.size(), SuperDiffOp(vars));
    auto set = [&](const std::string& name, SuperDiffOp op) { rz.op(name) = std::move(op); };

    set("H", del("t"));
    set("P", del("x"));
    set("M", mul(c(m)));
    if (kind == AlgebraKind::ssch1) {
        const SuperPoly eta = v("η");
        set("K", t * (t * del("t") + x * del("x") + th * del("θ")) + mul(c(m / 2) * x * x + x * th * eta) -
                     mul(c(d) * t));
        set("G", t * del("x") + mul(c(m) * x + th * eta));
        set("D", c(2) * t * del("t") + x * del("x") + th * del("θ") - mul(c(d)));
        set("Q", c(-1) * th * del("t") + del("θ"));
        set("S", c(-1) * th * (t * del("t") + x * del("x")) + t * del("θ") + mul(x * eta + c(d) * th));
        set("X", c(-1) * th * del("x") + mul(eta));
        return rz;
    }
    const SuperPoly ph = v("φ"), rh = v("ρ");
    set("K", t * (t * del("t") + x * del("x") + th * del("θ") + ph * del("φ")) + th * ph * rh * del("ρ") +
                 mul(c(-m) * x * th * rh + c(m / 2) * x * x) + x * ph * del("ρ") - mul(c(d) * t));
    set("G", t * del("x") + mul(c(m) * (x - th * rh)) + ph * del("ρ"));
    set("D", c(2) * t * del("t") + x * del("x") + th * del("θ") + ph * del("φ") - mul(c(d)));
    set("R", c(-1) * th * del("θ") + ph * del("φ") + rh * del("ρ"));
    set("Q+", c(-1) * ph * del("t") + del("θ"));
    set("Q-", c(-1) * th * del("t") + del("φ"));
    set("S+", ph * (c(-1) * t * del("t") - x * del("x") - th * del("θ") + rh * del("ρ")) + t * del("θ") -
                  mul(c(m) * x * rh) + mul(c(d) * ph));
    set("S-", th * (c(-1) * t * del("t") - x * del("x") - ph * del("φ") - rh * del("ρ")) + t * del("φ") +
                  x * del("ρ") + mul(c(d) * th));
    set("X+", c(-1) * ph * del("x") - mul(c(m) * rh));
    set("X-", c(-1) * th * del("x") + del("ρ"));
    return rz;
}

std::vector<SuperPoly> superMonomials(const std::shared_ptr<const OddVariableAlgebra>& vars, int maxDegree) {
    std::vector<SuperPoly> out;
    const OddMask full = (OddMask{1} << vars->size()) - 1;
    for (OddMask odd = 0; odd <= full; ++odd) {
        const int k = __builtin_popcount(odd);
        for (int a = 0; a + k <= maxDegree; ++a)
            for (int b = 0; a + b + k <= maxDegree; ++b) out.push_back(SuperPoly::monomial(vars, {a, b, odd}));
    }
    return out;
}

RealizationReport verifyRelations(const Realization& rz, const StructureTable& table, int maxPolyDegree) {
    if (table.size() != rz.ops.size()) throw std::invalid_argument("table does not match the realization");
    RealizationReport rep;
    rep.testedDegree = maxPolyDegree;
    rep.certifiedDegree = std::max(maxPolyDegree - 2, 0);
    const auto monos = superMonomials(rz.vars, maxPolyDegree);
    rep.monomialsChecked = monos.size();
    for (std::size_t g = 0; g < table.size(); ++g) {
        const auto p = rz.ops[g].parity();
        if (!rz.ops[g].isZero() && (!p || *p != table.parity(g))) rep.parityAdditive = false;
    }
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = i; j < table.size(); ++j) {
            ++rep.pairsChecked;
            const int pi = table.parity(i), pj = table.parity(j);
            const GaussianRational sign = (pi & pj) ? -1 : 1;
            const LieElement rhs = table.bracket(i, j);
            const std::string relation = "[" + table.generator(i).name + "," + table.generator(j).name + "}";
            for (const auto& f : monos) {
                const SuperPoly yf = rz.ops[j].apply(f), xf = rz.ops[i].apply(f);
                const SuperPoly xyf = rz.ops[i].apply(yf), yxf = rz.ops[j].apply(xf);
                const int pf = *f.parity();
                for (const auto& [h, expected] : {std::pair{&xyf, pi + pj + pf}, std::pair{&yxf, pi + pj + pf}}) {
                    const auto hp = h->parity();
                    if (hp && *hp != (expected & 1)) rep.parityAdditive = false;
                }
                SuperPoly residual = xyf - sign * yxf;
                for (const auto& [g, c] : rhs.terms()) residual -= c * rz.ops[g].apply(f);
                if (!residual.isZero()) {
                    rep.pass = false;
                    rep.failures.push_back({relation, f.str(), residual.str()});
                }
            }
        }
    if (!rep.parityAdditive) rep.pass = false;
    return rep;
}

ChiEtaReport chiEtaFromPhi(const Rational& m) {
    auto vars = std::make_shared<const OddVariableAlgebra>(std::vector<OddGenerator>{{"φ", 0}});
    const SuperDiffOp phi = SuperDiffOp::multiplication(SuperPoly::variable(vars, "φ"));
    const SuperDiffOp dphi = SuperDiffOp::partial(vars, "φ");
    ChiEtaReport rep{m, phi + dphi, phi - dphi};
    // Every product carries s², replaced by m/2.
    const GaussianRational s2(Rational(m / 2));
    rep.chiSquare = rep.etaSquare = rep.anticommute = true;
    for (const auto& f : superMonomials(vars, 1)) {
        const SuperPoly cc = s2 * rep.chiUnit.apply(rep.chiUnit.apply(f));
        const SuperPoly ee = s2 * rep.etaUnit.apply(rep.etaUnit.apply(f));
        const SuperPoly ce = s2 * (rep.chiUnit.apply(rep.etaUnit.apply(f)) + rep.etaUnit.apply(rep.chiUnit.apply(f)));
        if (!(cc == s2 * f)) rep.chiSquare = false;
        if (!(ee == GaussianRational(-1) * (s2 * f))) rep.etaSquare = false;
        if (!ce.isZero()) rep.anticommute = false;
    }
    return rep;
}

}  // namespace sschr
