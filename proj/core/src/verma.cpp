#include "sschr/verma.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sschr {

ModuleVector ModuleVector::basis(Monomial mono, GradedScalar c) {
    ModuleVector v;
    v.add(mono, c);
    return v;
}

GradedScalar ModuleVector::coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? GradedScalar(0) : it->second;
}

const Monomial& ModuleVector::leading() const {
    if (terms_.empty()) throw std::logic_error("zero vector has no leading monomial");
    return terms_.rbegin()->first;
}

void ModuleVector::add(const Monomial& mono, const GradedScalar& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

ModuleVector ModuleVector::operator-() const {
    ModuleVector out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

ModuleVector operator*(const GradedScalar& c, const ModuleVector& v) {
    ModuleVector out;
    if (c.isZero()) return out;
    for (const auto& [m, x] : v.terms_) out.add(m, c * x);
    return out;
}

std::vector<int> WeightModule::sectors() const {
    if (base().chiActive()) return {0};
    return {0, 1};
}

VermaModule::VermaModule(LowestWeight lw)
    : lw_(std::move(lw)), table_(buildAlgebra(lw_.kind)), cache_(std::make_unique<Cache>()) {
    parts_ = triangularDecompose(table_);
    std::vector<std::string> order;
    switch (lw_.kind) {
        case AlgebraKind::sch1: order = {"G", "K"}; break;
        case AlgebraKind::ssch1: order = {"G", "K", "S"}; break;
        case AlgebraKind::ssch2: order = {"G", "K", "S+", "S-", "X+"}; break;
    }
    plusSlot_.assign(table_.size(), -1);
    for (const auto& nm : order) {
        std::size_t g = table_.indexOf(nm);
        plusSlot_[g] = static_cast<int>(plusOrder_.size());
        plusOrder_.push_back(g);
    }
    if (plusOrder_.size() != parts_.plus.size()) throw std::logic_error("PBW order does not cover the plus part");
    chiActive_ = lw_.kind == AlgebraKind::ssch1 && sgn(lw_.m) != 0;
    ring_ = lw_.chiSquare ? &ChiRing::withChiSquare(*lw_.chiSquare) : &ChiRing::forMass(lw_.m);
}

GradedScalar VermaModule::chi() const {
    if (!chiActive_) return GradedScalar(0);
    return GradedScalar::chi(*ring_);
}

int VermaModule::parity(const Monomial& mono) const {
    int p = 0;
    for (std::size_t i = 0; i < mono.size(); ++i) p ^= (table_.parity(plusOrder_[i]) & mono[i]);
    return p & 1;
}

Weight VermaModule::generatorWeight(std::size_t g) const { return table_.degree(g); }

Weight VermaModule::weight(const Monomial& mono) const {
    Weight w(static_cast<std::size_t>(weightRank(lw_.kind)), 0);
    for (std::size_t i = 0; i < mono.size(); ++i) {
        const Degree& dg = table_.degree(plusOrder_[i]);
        for (std::size_t k = 0; k < w.size(); ++k) w[k] += mono[i] * dg[k];
    }
    return w;
}

int VermaModule::bosonicDegree(const Monomial& mono) const { return mono.at(0) + 2 * mono.at(1); }

Monomial VermaModule::monomial(const std::vector<int>& exps) const {
    if (exps.size() != plusOrder_.size()) throw std::invalid_argument("monomial exponent count mismatch");
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0) throw std::invalid_argument("negative exponent");
        if (table_.parity(plusOrder_[i]) && exps[i] > 1) throw std::invalid_argument("odd exponent above 1");
    }
    return exps;
}

ModuleVector VermaModule::actOnVacuum(std::size_t g) const {
    Monomial vac = vacuum();
    if (plusSlot_[g] >= 0) {
        vac[static_cast<std::size_t>(plusSlot_[g])] = 1;
        return ModuleVector::basis(vac);
    }
    const std::string& nm = table_.generator(g).name;
    if (nm == "D") return ModuleVector::basis(vac, GaussianRational(-lw_.d));
    if (nm == "M") return ModuleVector::basis(vac, GaussianRational(lw_.m));
    if (nm == "R") return ModuleVector::basis(vac, GaussianRational(lw_.r));
    if (nm == "X") return ModuleVector::basis(vac, chi());
    return {};
}

ModuleVector VermaModule::actUncached(std::size_t g, const Monomial& mono) const {
    std::size_t i = 0;
    while (i < mono.size() && mono[i] == 0) ++i;
    if (i == mono.size()) return actOnVacuum(g);
    const int slot = plusSlot_[g];
    const bool gOdd = table_.parity(g);
    if (slot >= 0 && static_cast<std::size_t>(slot) < i) {
        Monomial out = mono;
        out[static_cast<std::size_t>(slot)] = 1;
        return ModuleVector::basis(out);
    }
    Monomial rest = mono;
    --rest[i];
    if (slot >= 0 && static_cast<std::size_t>(slot) == i) {
        if (!gOdd) {
            Monomial out = mono;
            ++out[i];
            return ModuleVector::basis(out);
        }
        // g g = [g,g}/2 for odd g
        LieElement sq = table_.bracket(g, g);
        return GradedScalar(GaussianRational(Rational(1, 2))) * act(sq, ModuleVector::basis(rest));
    }
    // g x rest = (-1)^{|g||x|} x (g rest) + [g,x} rest
    const std::size_t x = plusOrder_[i];
    ModuleVector out = act(x, act(g, rest));
    if (gOdd && table_.parity(x)) out = -out;
    LieElement b = table_.bracket(g, x);
    if (!b.isZero()) out += act(b, ModuleVector::basis(rest));
    return out;
}

ModuleVector VermaModule::act(std::size_t g, const Monomial& mono) const {
    if (g >= table_.size()) throw std::out_of_range("generator index");
    auto key = std::make_pair(g, mono);
    {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->entries.find(key);
        if (it != cache_->entries.end()) return it->second;
    }
    ModuleVector v = actUncached(g, mono);
    std::lock_guard lock(cache_->mutex);
    cache_->entries.emplace(std::move(key), v);
    return v;
}

ModuleVector VermaModule::act(std::size_t g, const ModuleVector& v) const {
    ModuleVector out;
    const bool odd = table_.parity(g);
    for (const auto& [mono, c] : v.terms()) {
        ModuleVector image = act(g, mono);
        if (image.isZero()) continue;
        out += (odd ? c.parityFlipped() : c) * image;
    }
    return out;
}

ModuleVector VermaModule::act(const LieElement& x, const ModuleVector& v) const {
    ModuleVector out;
    for (const auto& [g, c] : x.terms()) out += GradedScalar(c) * act(g, v);
    return out;
}

ModuleVector VermaModule::normalOrder(const std::vector<std::size_t>& word) const {
    ModuleVector v = ModuleVector::basis(vacuum());
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = act(*it, v);
    return v;
}

ModuleVector VermaModule::normalOrder(const std::vector<std::string>& word) const {
    std::vector<std::size_t> idx;
    for (const auto& nm : word) idx.push_back(table_.indexOf(nm));
    return normalOrder(idx);
}

std::vector<Monomial> VermaModule::subspaceBasis(const Weight& w, int cutoff) const {
    if (w.size() != static_cast<std::size_t>(weightRank(lw_.kind))) throw std::invalid_argument("weight rank mismatch");
    std::vector<std::size_t> oddSlots;
    for (std::size_t i = 2; i < plusOrder_.size(); ++i) oddSlots.push_back(i);
    std::vector<Monomial> out;
    for (unsigned mask = 0; mask < (1u << oddSlots.size()); ++mask) {
        Monomial mono = vacuum();
        for (std::size_t j = 0; j < oddSlots.size(); ++j)
            if (mask & (1u << j)) mono[oddSlots[j]] = 1;
        Weight fw = weight(mono);
        int n = w[0] - fw[0];
        bool ok = n >= 0;
        for (std::size_t k = 1; k < w.size(); ++k) ok = ok && w[k] == fw[k];
        if (!ok || n > cutoff) continue;
        for (int l = 0; 2 * l <= n; ++l) {
            Monomial full = mono;
            full[0] = n - 2 * l;
            full[1] = l;
            out.push_back(full);
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<Weight> VermaModule::weightsUpTo(int maxDegree) const {
    std::vector<Weight> out;
    for (int n = 0; n <= maxDegree; ++n) {
        if (weightRank(lw_.kind) == 1) {
            out.push_back({n});
            continue;
        }
        for (int n2 = -1; n2 <= 2; ++n2)
            if (!subspaceBasis({n, n2}, maxDegree).empty()) out.push_back({n, n2});
    }
    return out;
}

std::vector<Coordinate> VermaModule::coordinates(const Weight& w, int sector, int cutoff) const {
    std::vector<Coordinate> out;
    for (const auto& mono : subspaceBasis(w, cutoff)) {
        int p = parity(mono);
        if (chiActive_)
            out.push_back({mono, (p + sector) & 1});
        else if (p == sector)
            out.push_back({mono, 0});
    }
    return out;
}

std::vector<GaussianRational> VermaModule::toCoordinates(const ModuleVector& v, const std::vector<Coordinate>& basis) const {
    std::vector<GaussianRational> x(basis.size());
    std::size_t captured = 0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        GradedScalar c = v.coefficient(basis[j].mono);
        x[j] = basis[j].comp ? c.odd() : c.even();
        if (!x[j].isZero()) ++captured;
    }
    std::size_t present = 0;
    for (const auto& [mono, c] : v.terms()) present += !c.even().isZero() + !c.odd().isZero();
    if (captured != present) throw std::logic_error("vector has components outside the coordinate basis");
    return x;
}

ModuleVector VermaModule::fromCoordinates(const std::vector<GaussianRational>& x, const std::vector<Coordinate>& basis) const {
    if (x.size() != basis.size()) throw std::invalid_argument("coordinate length mismatch");
    ModuleVector v;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (x[j].isZero()) continue;
        GradedScalar c = basis[j].comp ? GradedScalar(0, x[j], *ring_) : GradedScalar(x[j]);
        v.add(basis[j].mono, c);
    }
    return v;
}

std::string VermaModule::renderMonomial(const Monomial& mono) const {
    std::string out;
    for (std::size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] == 0) continue;
        out += table_.generator(plusOrder_[i]).name;
        if (mono[i] > 1) out += "^" + std::to_string(mono[i]);
        out += " ";
    }
    return out + "v0";
}

std::string VermaModule::render(const ModuleVector& v) const {
    if (v.isZero()) return "0";
    std::string out;
    for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
        if (!out.empty()) out += " + ";
        const GradedScalar& c = it->second;
        if (!(c == GradedScalar(1))) out += "(" + c.str() + ") ";
        out += renderMonomial(it->first);
    }
    return out;
}

ModuleVector closedFormActionN1(const VermaModule& mod, const std::string& g, const Monomial& mono) {
    if (mod.kind() != AlgebraKind::ssch1) throw std::invalid_argument("closed-form table is for ssch1");
    const int k = mono.at(0), l = mono.at(1), a = mono.at(2);
    const Rational& d = mod.lowestWeight().d;
    const Rational& m = mod.lowestWeight().m;
    const GradedScalar chi = mod.chi();
    ModuleVector out;
    auto v = [&](int kk, int ll, int aa, const GradedScalar& c) {
        if (kk < 0 || ll < 0 || c.isZero()) return;
        out.add(Monomial{kk, ll, aa}, c);
    };
    auto q = [](const Rational& x) { return GradedScalar(GaussianRational(x)); };
    if (g == "K") {
        v(k, l + 1, a, 1);
    } else if (g == "G") {
        v(k + 1, l, a, 1);
    } else if (g == "D") {
        v(k, l, a, q(Rational(k + 2 * l + a) - d));
    } else if (g == "M") {
        v(k, l, a, q(m));
    } else if (g == "S") {
        if (a == 0)
            v(k, l, 1, 1);
        else
            v(k, l + 1, 0, -1);
    } else if (g == "X") {
        v(k, l, a, chi);
        if (a == 1) v(k + 1, l, 0, -1);
    } else if (g == "P") {
        v(k + 1, l - 1, a, l);
        v(k - 1, l, a, q(m * k));
        if (a == 1) v(k, l, 0, chi);
    } else if (g == "Q") {
        v(k - 1, l, a, chi * GradedScalar(k));
        if (a == 0)
            v(k, l - 1, 1, l);
        else
            v(k, l, 0, q(d - l - k));
    } else if (g == "H") {
        const Rational half = m * k * (k - 1) / 2;
        if (a == 0) {
            v(k, l - 1, 0, q(Rational(l) * (k + l - 1 - d)));
            v(k - 2, l, 0, q(half));
        } else {
            v(k, l - 1, 1, q(Rational(l) * (k + l - d)));
            v(k - 1, l, 0, chi * GradedScalar(k));
            v(k - 2, l, 1, q(half));
        }
    } else {
        throw std::invalid_argument("no closed-form row for generator " + g);
    }
    return out;
}

ClosureReport verifyRepresentationClosure(const VermaModule& mod, int maxDegree) {
    ClosureReport r;
    const StructureTable& t = mod.algebra();
    for (const auto& w : mod.weightsUpTo(maxDegree))
        for (const auto& mono : mod.subspaceBasis(w, maxDegree)) {
            ModuleVector b = ModuleVector::basis(mono);
            for (std::size_t x = 0; x < t.size(); ++x)
                for (std::size_t y = 0; y < t.size(); ++y) {
                    ++r.checks;
                    ModuleVector lhs = mod.act(x, mod.act(y, b));
                    ModuleVector swapped = mod.act(y, mod.act(x, b));
                    if (t.parity(x) && t.parity(y))
                        lhs += swapped;
                    else
                        lhs -= swapped;
                    if (!(lhs == mod.act(t.bracket(x, y), b))) {
                        r.pass = false;
                        r.failures.push_back({x, y, mono});
                    }
                }
        }
    return r;
}

}  // namespace sschr
