#include "sschr/adjoint.hpp"

#include <set>
#include <stdexcept>

namespace sschr {

std::string adjointName(AdjointKind kind) {
    switch (kind) {
        case AdjointKind::omega1: return "omega1";
        case AdjointKind::omega2: return "omega2";
        case AdjointKind::sigma1: return "sigma1";
        case AdjointKind::sigma2: return "sigma2";
    }
    throw std::logic_error("unhandled adjoint kind");
}

AdjointKind parseAdjoint(const std::string& text) {
    if (text == "omega1") return AdjointKind::omega1;
    if (text == "omega2") return AdjointKind::omega2;
    if (text == "sigma1") return AdjointKind::sigma1;
    if (text == "sigma2") return AdjointKind::sigma2;
    throw std::invalid_argument("unknown adjoint map '" + text + "'");
}

namespace {

GaussianRational sgnPow(int e) { return (e & 1) ? -1 : 1; }

std::string flip(const std::string& name) {
    if (name.size() == 2 && name[1] == '+') return name.substr(0, 1) + "-";
    if (name.size() == 2 && name[1] == '-') return name.substr(0, 1) + "+";
    return name;
}

void setImage(AdjointMap& m, const StructureTable& t, const std::string& g, const LieElement& img) {
    if (auto i = t.find(g)) m.images[*i] = img;
}

}  // namespace

AdjointMap buildAdjoint(const StructureTable& t, AdjointKind kind, int eps, int lam) {
    bool antilinear = kind != AdjointKind::omega1;
    return buildAdjoint(t, kind, eps, lam, antilinear);
}

AdjointMap buildAdjoint(const StructureTable& t, AdjointKind kind, int eps, int lam, bool antilinear) {
    if ((eps != 0 && eps != 1) || (lam != 0 && lam != 1)) throw std::invalid_argument("epsilon and lambda must be 0 or 1");
    AdjointMap m;
    m.name = adjointName(kind);
    m.epsilon = eps;
    m.lambda = lam;
    m.antilinear = antilinear;
    m.images.resize(t.size());
    const bool n2 = t.find("R").has_value();
    const bool n1 = t.find("Q").has_value();
    const GaussianRational i = GaussianRational::i();
    auto set = [&](const std::string& g, const std::string& to, GaussianRational c) {
        if (t.find(g)) setImage(m, t, g, t.gen(to, std::move(c)));
    };
    switch (kind) {
        case AdjointKind::omega1: {
            set("P", "G", sgnPow(eps));
            set("G", "P", sgnPow(eps));
            set("H", "K", 1);
            set("K", "H", 1);
            for (const char* g : {"D", "M", "R"}) set(g, g, 1);
            if (n1) {
                set("Q", "S", sgnPow(lam));
                set("S", "Q", sgnPow(lam));
                set("X", "X", sgnPow(eps + lam));
            }
            if (n2)
                for (const char* a : {"+", "-"}) {
                    std::string s(a);
                    set("Q" + s, flip("S" + s), sgnPow(lam));
                    set("S" + s, flip("Q" + s), sgnPow(lam));
                    set("X" + s, flip("X" + s), sgnPow(eps + lam));
                }
            break;
        }
        case AdjointKind::omega2: {
            set("P", "P", sgnPow(eps));
            set("G", "G", sgnPow(eps));
            for (const char* g : {"H", "K", "D", "M"}) set(g, g, -1);
            set("R", "R", 1);
            if (n1) {
                set("Q", "Q", i * sgnPow(lam));
                set("S", "S", i * sgnPow(lam));
                set("X", "X", i * sgnPow(lam + eps + 1));
            }
            if (n2)
                for (const char* a : {"+", "-"}) {
                    std::string s(a);
                    set("Q" + s, flip("Q" + s), i * sgnPow(lam));
                    set("S" + s, flip("S" + s), i * sgnPow(lam));
                    set("X" + s, flip("X" + s), i * sgnPow(lam + eps + 1));
                }
            break;
        }
        case AdjointKind::sigma1: {
            if (!n2) throw std::invalid_argument("sigma1 is defined only for ssch2");
            m.squareIsParity = true;
            set("K", "H", 1);
            set("H", "K", 1);
            set("P", "G", 1);
            set("G", "P", 1);
            for (const char* g : {"D", "R", "M"}) set(g, g, 1);
            set("Q+", "S-", sgnPow(eps));
            set("Q-", "S+", -sgnPow(eps));
            set("X+", "X-", sgnPow(eps));
            set("X-", "X+", -sgnPow(eps));
            set("S-", "Q+", -sgnPow(eps));
            set("S+", "Q-", sgnPow(eps));
            break;
        }
        case AdjointKind::sigma2: {
            if (!n2) throw std::invalid_argument("sigma2 is defined only for ssch2");
            m.squareIsParity = true;
            set("R", "R", 1);
            for (const char* g : {"H", "K", "D", "M", "P", "G"}) set(g, g, -1);
            for (const char* f : {"Q", "S", "X"}) {
                std::string F(f);
                set(F + "+", F + "-", i * sgnPow(eps));
                set(F + "-", F + "+", -i * sgnPow(eps));
            }
            break;
        }
    }
    for (std::size_t g = 0; g < t.size(); ++g)
        if (m.images[g].isZero()) throw std::logic_error(m.name + " has no image for " + t.generator(g).name);
    return m;
}

AdjointMap identityMap(const StructureTable& t) {
    AdjointMap m;
    m.name = "identity";
    m.images.resize(t.size());
    for (std::size_t g = 0; g < t.size(); ++g) m.images[g] = LieElement::basis(g);
    return m;
}

LieElement applyAdjoint(const AdjointMap& m, const LieElement& x) {
    LieElement out;
    for (const auto& [g, c] : x.terms()) out += (m.antilinear ? c.conj() : c) * m.images.at(g);
    return out;
}

std::string AdjointReport::convention() const {
    if (plainHolds && gradedHolds) return "both";
    if (plainHolds) return "plain";
    if (gradedHolds) return "graded";
    return "none";
}

AdjointReport verifyAdjoint(const StructureTable& t, const AdjointMap& m) {
    AdjointReport r;
    r.name = m.name;
    for (std::size_t g = 0; g < t.size(); ++g) {
        LieElement sq = applyAdjoint(m, m.images[g]);
        GaussianRational expected = (m.squareIsParity && t.parity(g)) ? -1 : 1;
        if (!(sq == LieElement::basis(g, expected))) {
            r.involutionHolds = false;
            r.involutionFailures.push_back(g);
        }
    }
    for (std::size_t x = 0; x < t.size(); ++x)
        for (std::size_t y = 0; y < t.size(); ++y) {
            LieElement lhs = applyAdjoint(m, t.bracket(x, y));
            LieElement rhs = t.bracket(m.images[y], m.images[x]);
            if (!(lhs == rhs)) {
                r.plainHolds = false;
                r.plainFailures.emplace_back(x, y);
            }
            if (t.parity(x) && t.parity(y)) rhs = -rhs;
            if (!(lhs == rhs)) {
                r.gradedHolds = false;
                r.gradedFailures.emplace_back(x, y);
            }
        }
    TriangularParts parts = triangularDecompose(t);
    auto partOf = [&](std::size_t g) {
        for (auto p : parts.plus)
            if (p == g) return 1;
        for (auto p : parts.minus)
            if (p == g) return -1;
        return 0;
    };
    r.exchangesTriangularParts = true;
    r.preservesTriangularParts = true;
    for (std::size_t g = 0; g < t.size(); ++g)
        for (const auto& [h, c] : m.images[g].terms()) {
            if (partOf(h) != -partOf(g)) r.exchangesTriangularParts = false;
            if (partOf(h) != partOf(g)) r.preservesTriangularParts = false;
        }
    return r;
}

}  // namespace sschr
