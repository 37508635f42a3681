#include "sschr/superalgebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sschr {

std::string kindName(AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::sch1: return "sch1";
        case AlgebraKind::ssch1: return "ssch1";
        case AlgebraKind::ssch2: return "ssch2";
    }
    throw std::logic_error("unhandled algebra kind");
}

AlgebraKind parseKind(const std::string& text) {
    if (text == "sch1") return AlgebraKind::sch1;
    if (text == "ssch1") return AlgebraKind::ssch1;
    if (text == "ssch2") return AlgebraKind::ssch2;
    throw std::invalid_argument("unknown algebra '" + text + "' (expected sch1, ssch1 or ssch2)");
}

int superchargeCount(AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::sch1: return 0;
        case AlgebraKind::ssch1: return 1;
        case AlgebraKind::ssch2: return 2;
    }
    throw std::logic_error("unhandled algebra kind");
}

int weightRank(AlgebraKind kind) { return kind == AlgebraKind::ssch2 ? 2 : 1; }

LieElement LieElement::basis(std::size_t g, GaussianRational c) {
    LieElement e;
    e.add(g, c);
    return e;
}

GaussianRational LieElement::coefficient(std::size_t g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

void LieElement::add(std::size_t g, const GaussianRational& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

LieElement& LieElement::operator+=(const LieElement& o) {
    for (const auto& [g, c] : o.terms_) add(g, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    for (const auto& [g, c] : o.terms_) add(g, -c);
    return *this;
}

LieElement& LieElement::operator*=(const GaussianRational& c) {
    if (c.isZero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [g, v] : terms_) v *= c;
    return *this;
}

LieElement LieElement::operator-() const {
    LieElement out = *this;
    for (auto& [g, v] : out.terms_) v = -v;
    return out;
}

LieElement LieElement::conj() const {
    LieElement out = *this;
    for (auto& [g, v] : out.terms_) v = v.conj();
    return out;
}

StructureTable::StructureTable(std::string name, std::vector<Generator> generators)
    : name_(std::move(name)), generators_(std::move(generators)) {
    std::set<std::string> seen;
    for (const auto& g : generators_)
        if (!seen.insert(g.name).second) throw std::invalid_argument("duplicate generator " + g.name);
}

std::optional<std::size_t> StructureTable::find(const std::string& name) const {
    for (std::size_t g = 0; g < generators_.size(); ++g)
        if (generators_[g].name == name) return g;
    return std::nullopt;
}

std::size_t StructureTable::indexOf(const std::string& name) const {
    auto g = find(name);
    if (!g) throw std::invalid_argument("unknown generator '" + name + "' in " + name_);
    return *g;
}

LieElement StructureTable::gen(const std::string& name, GaussianRational c) const {
    return LieElement::basis(indexOf(name), std::move(c));
}

void StructureTable::setBracket(std::size_t x, std::size_t y, const LieElement& value) {
    if (x >= size() || y >= size()) throw std::out_of_range("generator index");
    if (x <= y) {
        brackets_[{x, y}] = value;
        return;
    }
    bool sym = parity(x) && parity(y);
    brackets_[{y, x}] = sym ? value : -value;
}

void StructureTable::setBracket(const std::string& x, const std::string& y, const LieElement& value) {
    setBracket(indexOf(x), indexOf(y), value);
}

LieElement StructureTable::bracket(std::size_t x, std::size_t y) const {
    if (x >= size() || y >= size()) throw std::out_of_range("generator index");
    auto it = brackets_.find({std::min(x, y), std::max(x, y)});
    if (it == brackets_.end()) return {};
    if (x <= y || (parity(x) && parity(y))) return it->second;
    return -it->second;
}

LieElement StructureTable::bracket(const LieElement& x, const LieElement& y) const {
    LieElement out;
    for (const auto& [gx, cx] : x.terms())
        for (const auto& [gy, cy] : y.terms()) {
            LieElement b = bracket(gx, gy);
            if (!b.isZero()) out += (cx * cy) * b;
        }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> StructureTable::nonzeroPairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& [k, v] : brackets_)
        if (!v.isZero()) out.push_back(k);
    return out;
}

std::optional<int> StructureTable::parityOf(const LieElement& x) const {
    std::optional<int> p;
    for (const auto& [g, c] : x.terms()) {
        if (p && *p != parity(g)) return std::nullopt;
        p = parity(g);
    }
    return p;
}

std::string StructureTable::render(const LieElement& x) const {
    if (x.isZero()) return "0";
    std::string out;
    for (const auto& [g, c] : x.terms()) {
        std::string coef;
        if (c == GaussianRational(1))
            coef = out.empty() ? "" : "+";
        else if (c == GaussianRational(-1))
            coef = "-";
        else if (c.isReal())
            coef = (out.empty() || sgn(c.re()) < 0 ? "" : "+") + c.str() + " ";
        else
            coef = (out.empty() ? "(" : "+(") + c.str() + ") ";
        out += coef + generators_[g].name;
    }
    return out;
}

namespace {

std::vector<Generator> schGenerators(int rank) {
    auto deg = [rank](int n) {
        Degree d(static_cast<std::size_t>(rank), 0);
        d[0] = n;
        return d;
    };
    return {{"H", 0, deg(-2)}, {"P", 0, deg(-1)}, {"G", 0, deg(1)},
            {"D", 0, deg(0)},  {"K", 0, deg(2)},  {"M", 0, deg(0)}};
}

void setBosonic(StructureTable& t) {
    t.setBracket("H", "D", t.gen("H", 2));
    t.setBracket("H", "K", t.gen("D"));
    t.setBracket("D", "K", t.gen("K", 2));
    t.setBracket("P", "G", t.gen("M"));
    t.setBracket("H", "G", t.gen("P"));
    t.setBracket("D", "G", t.gen("G"));
    t.setBracket("P", "D", t.gen("P"));
    t.setBracket("P", "K", t.gen("G"));
}

// Relations shared by each family of supercharges (Q, S, X) with Sch(1).
void setOddEven(StructureTable& t, const std::string& q, const std::string& s, const std::string& x) {
    t.setBracket(q, "D", t.gen(q));
    t.setBracket(q, "K", t.gen(s));
    t.setBracket("D", s, t.gen(s));
    t.setBracket("H", s, t.gen(q));
    t.setBracket(q, "G", t.gen(x));
    t.setBracket("P", s, t.gen(x));
}

StructureTable buildSch1() {
    StructureTable t("sch1", schGenerators(1));
    setBosonic(t);
    return t;
}

StructureTable buildSsch1() {
    auto gens = schGenerators(1);
    gens.push_back({"Q", 1, {-1}});
    gens.push_back({"S", 1, {1}});
    gens.push_back({"X", 1, {0}});
    StructureTable t("ssch1", gens);
    setBosonic(t);
    t.setBracket("Q", "Q", t.gen("H", -2));
    t.setBracket("S", "S", t.gen("K", -2));
    t.setBracket("X", "X", t.gen("M", -1));
    t.setBracket("Q", "X", t.gen("P", -1));
    t.setBracket("S", "X", t.gen("G", -1));
    t.setBracket("Q", "S", t.gen("D", -1));
    setOddEven(t, "Q", "S", "X");
    return t;
}

// Transports the brackets of `from` along a change of basis. `toOld[g]`
// expresses new generator g in the old basis, `toNew[h]` old generator h in
// the new basis; odd-odd brackets are multiplied by `oddOddScale`, which
// accounts for a common normalization of the odd generators.
StructureTable changeBasis(const StructureTable& from, const std::string& name, std::vector<Generator> generators,
                           const std::vector<LieElement>& toOld, const std::vector<LieElement>& toNew,
                           const GaussianRational& oddOddScale) {
    StructureTable t(name, std::move(generators));
    auto express = [&](const LieElement& old) {
        LieElement out;
        for (const auto& [h, c] : old.terms()) out += c * toNew.at(h);
        return out;
    };
    for (std::size_t x = 0; x < t.size(); ++x)
        for (std::size_t y = x; y < t.size(); ++y) {
            LieElement b = express(from.bracket(toOld[x], toOld[y]));
            if (t.parity(x) && t.parity(y)) b *= oddOddScale;
            if (!b.isZero()) t.setBracket(x, y, b);
        }
    return t;
}

std::vector<Generator> ssch2Generators() {
    auto gens = schGenerators(2);
    gens.push_back({"R", 0, {0, 0}});
    gens.push_back({"Q+", 1, {-1, 1}});
    gens.push_back({"Q-", 1, {-1, -1}});
    gens.push_back({"S+", 1, {1, 1}});
    gens.push_back({"S-", 1, {1, -1}});
    gens.push_back({"X+", 1, {0, 1}});
    gens.push_back({"X-", 1, {0, -1}});
    return gens;
}

}  // namespace

StructureTable buildSsch2Original() {
    auto gens = schGenerators(1);
    gens.push_back({"R12", 0, {0}});
    for (const char* f : {"Q", "S", "X"})
        for (int j = 1; j <= 2; ++j) gens.push_back({f + std::to_string(j), 1, {f[0] == 'Q' ? -1 : f[0] == 'S' ? 1 : 0}});
    StructureTable t("ssch2-r12", gens);
    setBosonic(t);
    auto R = [&](int j, int k) -> LieElement {
        if (j == k) return {};
        return t.gen("R12", j < k ? 1 : -1);
    };
    auto n = [](const char* f, int j) { return f + std::to_string(j); };
    for (int j = 1; j <= 2; ++j) {
        setOddEven(t, n("Q", j), n("S", j), n("X", j));
        t.setBracket(n("Q", j), n("Q", j), t.gen("H", -2));
        t.setBracket(n("S", j), n("S", j), t.gen("K", -2));
        t.setBracket(n("X", j), n("X", j), t.gen("M", -1));
        for (int k = 1; k <= 2; ++k) {
            if (j == k) {
                t.setBracket(n("Q", j), n("X", k), t.gen("P", -1));
                t.setBracket(n("S", j), n("X", k), t.gen("G", -1));
            }
            LieElement qs = R(j, k);
            if (j == k) qs -= t.gen("D");
            t.setBracket(n("Q", j), n("S", k), qs);
        }
        // [A_j, R12] = delta_{j2} A_1 - delta_{j1} A_2
        for (const char* f : {"Q", "S", "X"}) {
            LieElement v = j == 2 ? t.gen(n(f, 1)) : t.gen(n(f, 2), -1);
            t.setBracket(n(f, j), "R12", v);
        }
    }
    return t;
}

StructureTable buildSsch2PlusMinus() {
    StructureTable t("ssch2", ssch2Generators());
    setBosonic(t);
    for (const char* s : {"+", "-"}) {
        std::string q = std::string("Q") + s, sg = std::string("S") + s, x = std::string("X") + s;
        setOddEven(t, q, sg, x);
        int sign = s[0] == '+' ? 1 : -1;
        for (const auto& a : {q, sg, x}) t.setBracket("R", a, t.gen(a, sign));
    }
    for (const auto& [a, b] : {std::pair{"+", "-"}, std::pair{"-", "+"}}) {
        auto A = [](const char* f, const char* s) { return std::string(f) + s; };
        t.setBracket(A("Q", a), A("Q", b), t.gen("H", -2));
        t.setBracket(A("S", a), A("S", b), t.gen("K", -2));
        t.setBracket(A("X", a), A("X", b), t.gen("M", -1));
        t.setBracket(A("Q", a), A("X", b), t.gen("P", -1));
        t.setBracket(A("S", a), A("X", b), t.gen("G", -1));
        t.setBracket(A("Q", a), A("S", b), t.gen("D", -1) + t.gen("R", a[0] == '+' ? -1 : 1));
    }
    return t;
}

namespace {

StructureTable buildSsch2() {
    StructureTable old = buildSsch2Original();
    auto gens = ssch2Generators();
    const GaussianRational i = GaussianRational::i();
    std::vector<LieElement> toOld(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const std::string& nm = gens[g].name;
        if (nm == "R") {
            toOld[g] = old.gen("R12", i);
        } else if (nm.size() == 2 && (nm[1] == '+' || nm[1] == '-')) {
            // unnormalized A1 ± i A2; the 1/sqrt 2 enters only through oddOddScale
            std::string f(1, nm[0]);
            toOld[g] = old.gen(f + "1") + old.gen(f + "2", nm[1] == '+' ? i : -i);
        } else {
            toOld[g] = old.gen(nm);
        }
    }
    auto idx = [&](const std::string& nm) {
        for (std::size_t g = 0; g < gens.size(); ++g)
            if (gens[g].name == nm) return g;
        throw std::logic_error("missing generator " + nm);
    };
    std::vector<LieElement> toNew(old.size());
    for (std::size_t h = 0; h < old.size(); ++h) {
        const std::string& nm = old.generator(h).name;
        if (nm == "R12") {
            toNew[h] = LieElement::basis(idx("R"), -i);
        } else if (nm.size() == 2 && (nm[1] == '1' || nm[1] == '2')) {
            std::string f(1, nm[0]);
            if (nm[1] == '1')
                toNew[h] = LieElement::basis(idx(f + "+"), Rational(1, 2)) + LieElement::basis(idx(f + "-"), Rational(1, 2));
            else
                toNew[h] = LieElement::basis(idx(f + "+"), GaussianRational(0, Rational(-1, 2))) +
                           LieElement::basis(idx(f + "-"), GaussianRational(0, Rational(1, 2)));
        } else {
            toNew[h] = LieElement::basis(idx(nm));
        }
    }
    return changeBasis(old, "ssch2", gens, toOld, toNew, Rational(1, 2));
}

}  // namespace

StructureTable buildAlgebra(AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::sch1: return buildSch1();
        case AlgebraKind::ssch1: return buildSsch1();
        case AlgebraKind::ssch2: return buildSsch2();
    }
    throw std::logic_error("unhandled algebra kind");
}

JacobiReport verifySuperJacobi(const StructureTable& t) {
    JacobiReport r;
    const std::size_t n = t.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x; y < n; ++y)
            for (std::size_t z = y; z < n; ++z) {
                ++r.triplesChecked;
                const int px = t.parity(x), py = t.parity(y), pz = t.parity(z);
                auto X = LieElement::basis(x), Y = LieElement::basis(y), Z = LieElement::basis(z);
                // (-1)^{|x||z|}[x,[y,z}} + (-1)^{|y||x|}[y,[z,x}} + (-1)^{|z||y|}[z,[x,y}}
                LieElement s1 = t.bracket(X, t.bracket(y, z));
                LieElement s2 = t.bracket(Y, t.bracket(z, x));
                LieElement s3 = t.bracket(Z, t.bracket(x, y));
                if (px && pz) s1 = -s1;
                if (py && px) s2 = -s2;
                if (pz && py) s3 = -s3;
                if (!(s1 + s2 + s3).isZero()) {
                    r.pass = false;
                    r.failures.push_back({x, y, z});
                }
            }
    return r;
}

PairCheckReport verifyAntisymmetry(const StructureTable& t) {
    PairCheckReport r;
    for (std::size_t x = 0; x < t.size(); ++x)
        for (std::size_t y = 0; y < t.size(); ++y) {
            ++r.pairsChecked;
            LieElement a = t.bracket(x, y), b = t.bracket(y, x);
            LieElement s = (t.parity(x) && t.parity(y)) ? a - b : a + b;
            if (!s.isZero()) {
                r.pass = false;
                r.failures.emplace_back(x, y);
            }
        }
    return r;
}

PairCheckReport verifyGrading(const StructureTable& t) {
    PairCheckReport r;
    for (std::size_t x = 0; x < t.size(); ++x)
        for (std::size_t y = 0; y < t.size(); ++y) {
            ++r.pairsChecked;
            LieElement b = t.bracket(x, y);
            bool ok = true;
            for (const auto& [g, c] : b.terms()) {
                if (t.parity(g) != (t.parity(x) ^ t.parity(y))) ok = false;
                const Degree& dg = t.degree(g);
                for (std::size_t k = 0; k < dg.size(); ++k)
                    if (dg[k] != t.degree(x)[k] + t.degree(y)[k]) ok = false;
            }
            if (!ok) {
                r.pass = false;
                r.failures.emplace_back(x, y);
            }
        }
    return r;
}

TriangularParts triangularDecompose(const StructureTable& t) {
    TriangularParts parts;
    for (std::size_t g = 0; g < t.size(); ++g) {
        int sign = 0;
        for (int e : t.degree(g))
            if (e != 0) {
                sign = e > 0 ? 1 : -1;
                break;
            }
        (sign > 0 ? parts.plus : sign < 0 ? parts.minus : parts.zero).push_back(g);
    }
    return parts;
}

bool closesUnderBracket(const StructureTable& t, const std::vector<std::string>& names) {
    std::set<std::size_t> span;
    for (const auto& nm : names) span.insert(t.indexOf(nm));
    for (auto x : span)
        for (auto y : span) {
            LieElement b = t.bracket(x, y);
            for (const auto& [g, c] : b.terms())
                if (!span.count(g)) return false;
        }
    return true;
}

}  // namespace sschr
