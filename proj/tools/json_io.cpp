#include "json_io.hpp"

#include <stdexcept>

namespace sschr::io {

namespace {

std::string str(const Rational& q) { return formatRational(q); }

Rational rational(const Json& j) { return parseRational(j.get<std::string>()); }

std::string status(bool pass) { return pass ? "pass" : "fail"; }

Json pairNames(const StructureTable& t, std::size_t x, std::size_t y) {
    return Json::array({t.generator(x).name, t.generator(y).name});
}

}  // namespace

Json toJson(const GaussianRational& z) { return z.str(); }

GaussianRational gaussianFromJson(const Json& j) { return GaussianRational::parse(j.get<std::string>()); }

Json toJson(const GradedScalar& s) {
    Json j{{"even", toJson(s.even())}};
    if (!s.odd().isZero()) {
        j["chi"] = toJson(s.odd());
        j["chiSquare"] = str(s.ring()->chiSquare());
    }
    return j;
}

GradedScalar gradedFromJson(const Json& j) {
    const GaussianRational even = gaussianFromJson(j.at("even"));
    if (!j.contains("chi")) return GradedScalar(even);
    return GradedScalar(even, gaussianFromJson(j.at("chi")), ChiRing::withChiSquare(rational(j.at("chiSquare"))));
}

Json toJson(const LowestWeight& lw) {
    Json j{{"algebra", kindName(lw.kind)}, {"d", str(lw.d)}, {"m", str(lw.m)}};
    if (lw.kind == AlgebraKind::ssch2) j["r"] = str(lw.r);
    if (lw.chiSquare) j["chiSquare"] = str(*lw.chiSquare);
    return j;
}

LowestWeight lowestWeightFromJson(const Json& j) {
    LowestWeight lw{parseKind(j.at("algebra").get<std::string>()), rational(j.at("d")), rational(j.at("m")), 0,
                    std::nullopt};
    if (j.contains("r")) lw.r = rational(j.at("r"));
    if (j.contains("chiSquare")) lw.chiSquare = rational(j.at("chiSquare"));
    return lw;
}

Json toJson(const ModuleVector& v, const VermaModule* module) {
    Json terms = Json::array();
    for (const auto& [mono, c] : v.terms()) terms.push_back({{"monomial", mono}, {"coefficient", toJson(c)}});
    Json j{{"terms", terms}};
    if (module) j["text"] = module->render(v);
    return j;
}

ModuleVector moduleVectorFromJson(const Json& j) {
    ModuleVector v;
    for (const auto& t : j.at("terms")) v.add(t.at("monomial").get<Monomial>(), gradedFromJson(t.at("coefficient")));
    return v;
}

Json toJson(const SingularVectorReport& r, const VermaModule* module) {
    Json vectors = Json::array();
    for (const auto& v : r.vectors) vectors.push_back(toJson(v, module));
    return {{"weight", r.weight},
            {"sector", r.sector},
            {"kernelDimension", r.kernelDimension},
            {"vectors", vectors},
            {"matchedClosedForm", r.matchedClosedForm},
            {"proportionality", r.proportionality ? toJson(*r.proportionality) : Json(nullptr)},
            {"matchesPrediction", r.matchesPrediction},
            {"predictedDimension", r.predictedDimension},
            {"reverified", r.reverified},
            {"cutoff", r.cutoff}};
}

SingularVectorReport singularReportFromJson(const Json& j) {
    SingularVectorReport r;
    r.weight = j.at("weight").get<Weight>();
    r.sector = j.at("sector").get<int>();
    r.kernelDimension = j.at("kernelDimension").get<std::size_t>();
    for (const auto& v : j.at("vectors")) r.vectors.push_back(moduleVectorFromJson(v));
    r.matchedClosedForm = j.at("matchedClosedForm").get<std::string>();
    if (!j.at("proportionality").is_null()) r.proportionality = gradedFromJson(j.at("proportionality"));
    r.matchesPrediction = j.at("matchesPrediction").get<bool>();
    r.predictedDimension = j.at("predictedDimension").get<std::size_t>();
    r.reverified = j.at("reverified").get<bool>();
    r.cutoff = j.at("cutoff").get<int>();
    return r;
}

Json toJson(const ClassificationRecord& r, const VermaModule* module) {
    Json chain = Json::array();
    for (const auto& s : r.chain)
        chain.push_back({{"submodule", s.submodule},
                         {"module", s.module},
                         {"weight", s.weight},
                         {"generator", toJson(s.generator, module)}});
    Json j{{"algebra", kindName(r.kind)}, {"d", str(r.d)}, {"m", str(r.m)}};
    if (r.kind == AlgebraKind::ssch2) j["r"] = str(r.r);
    j["verdict"] = r.dimension ? "finite" : "infinite";
    j["module"] = r.verdict;
    j["dimension"] = r.dimension ? Json(*r.dimension) : Json(nullptr);
    j["chain"] = chain;
    j["irreducibleUpToCutoff"] = r.irreducibleUpToCutoff;
    j["levelDimensions"] = r.levelDimensions;
    j["cutoff"] = r.cutoff;
    return j;
}

ClassificationRecord classificationFromJson(const Json& j) {
    ClassificationRecord r;
    r.kind = parseKind(j.at("algebra").get<std::string>());
    r.d = rational(j.at("d"));
    r.m = rational(j.at("m"));
    if (j.contains("r")) r.r = rational(j.at("r"));
    r.verdict = j.at("module").get<std::string>();
    if (!j.at("dimension").is_null()) r.dimension = j.at("dimension").get<std::size_t>();
    for (const auto& s : j.at("chain"))
        r.chain.push_back({s.at("submodule").get<std::string>(), s.at("module").get<std::string>(),
                           moduleVectorFromJson(s.at("generator")), s.at("weight").get<Weight>()});
    r.irreducibleUpToCutoff = j.at("irreducibleUpToCutoff").get<bool>();
    r.levelDimensions = j.at("levelDimensions").get<std::vector<std::size_t>>();
    r.cutoff = j.at("cutoff").get<int>();
    return r;
}

Json toJson(const GramMatrix& g, const VermaModule* module) {
    Json basis = Json::array();
    for (const auto& b : g.basis) basis.push_back(toJson(b, module));
    Json entries = Json::array();
    for (std::size_t i = 0; i < g.entries.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < g.entries.cols(); ++k) row.push_back(toJson(g.entries(i, k)));
        entries.push_back(row);
    }
    return {{"weight", g.weight},
            {"basis", basis},
            {"entries", entries},
            {"determinant", toJson(g.determinant)},
            {"degenerate", g.determinant.isZero()},
            {"rank", g.rank},
            {"real", g.real}};
}

GramMatrix gramFromJson(const Json& j) {
    GramMatrix g;
    g.weight = j.at("weight").get<Weight>();
    for (const auto& b : j.at("basis")) g.basis.push_back(moduleVectorFromJson(b));
    const auto& rows = j.at("entries");
    g.entries = Matrix(rows.size(), rows.empty() ? 0 : rows.at(0).size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < rows.at(i).size(); ++k) g.entries(i, k) = gaussianFromJson(rows.at(i).at(k));
    g.determinant = gaussianFromJson(j.at("determinant"));
    g.rank = j.at("rank").get<std::size_t>();
    g.real = j.at("real").get<bool>();
    return g;
}

Json toJson(const RealizationReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"relation", f.relation}, {"monomial", f.monomial}, {"residual", f.residual}});
    return {{"status", status(r.pass)},
            {"pass", r.pass},
            {"parityAdditive", r.parityAdditive},
            {"pairsChecked", r.pairsChecked},
            {"monomialsChecked", r.monomialsChecked},
            {"testedDegree", r.testedDegree},
            {"certifiedDegree", r.certifiedDegree},
            {"failures", failures}};
}

RealizationReport realizationReportFromJson(const Json& j) {
    RealizationReport r;
    r.pass = j.at("pass").get<bool>();
    r.parityAdditive = j.at("parityAdditive").get<bool>();
    r.pairsChecked = j.at("pairsChecked").get<std::size_t>();
    r.monomialsChecked = j.at("monomialsChecked").get<std::size_t>();
    r.testedDegree = j.at("testedDegree").get<int>();
    r.certifiedDegree = j.at("certifiedDegree").get<int>();
    for (const auto& f : j.at("failures"))
        r.failures.push_back({f.at("relation").get<std::string>(), f.at("monomial").get<std::string>(),
                              f.at("residual").get<std::string>()});
    return r;
}

Json toJson(const ChiEtaReport& r) {
    return {{"m", str(r.m)},
            {"chi", "s(" + r.chiUnit.str() + ")"},
            {"eta", "s(" + r.etaUnit.str() + ")"},
            {"sSquare", str(r.m / 2)},
            {"chiSquare", status(r.chiSquare)},
            {"etaSquare", status(r.etaSquare)},
            {"anticommutator", status(r.anticommute)},
            {"pass", r.pass()}};
}

Json toJson(const StructureTable& table) {
    Json gens = Json::array();
    for (const auto& g : table.generators())
        gens.push_back({{"name", g.name}, {"parity", g.parity}, {"degree", g.degree}});
    Json brackets = Json::array();
    for (const auto& [x, y] : table.nonzeroPairs()) {
        const LieElement bracket = table.bracket(x, y);
        Json value = Json::object();
        for (const auto& [g, c] : bracket.terms()) value[table.generator(g).name] = toJson(c);
        brackets.push_back({{"pair", pairNames(table, x, y)}, {"value", value}, {"text", table.render(table.bracket(x, y))}});
    }
    return {{"name", table.name()}, {"generators", gens}, {"brackets", brackets}};
}

StructureTable tableFromJson(const Json& j) {
    std::vector<Generator> gens;
    for (const auto& g : j.at("generators"))
        gens.push_back({g.at("name").get<std::string>(), g.at("parity").get<int>(), g.at("degree").get<Degree>()});
    StructureTable table(j.at("name").get<std::string>(), gens);
    for (const auto& b : j.at("brackets")) {
        LieElement value;
        for (const auto& [name, c] : b.at("value").items()) value.add(table.indexOf(name), gaussianFromJson(c));
        table.setBracket(b.at("pair").at(0).get<std::string>(), b.at("pair").at(1).get<std::string>(), value);
    }
    return table;
}

Json toJson(const JacobiReport& r, const StructureTable& table) {
    Json failures = Json::array();
    for (const auto& f : r.failures)
        failures.push_back(Json::array({table.generator(f[0]).name, table.generator(f[1]).name, table.generator(f[2]).name}));
    return {{"status", status(r.pass)}, {"pass", r.pass}, {"triplesChecked", r.triplesChecked}, {"failures", failures}};
}

JacobiReport jacobiFromJson(const Json& j, const StructureTable& table) {
    JacobiReport r;
    r.pass = j.at("pass").get<bool>();
    r.triplesChecked = j.at("triplesChecked").get<std::size_t>();
    for (const auto& f : j.at("failures"))
        r.failures.push_back({table.indexOf(f.at(0).get<std::string>()), table.indexOf(f.at(1).get<std::string>()),
                              table.indexOf(f.at(2).get<std::string>())});
    return r;
}

Json toJson(const PairCheckReport& r, const StructureTable& table) {
    Json failures = Json::array();
    for (const auto& [x, y] : r.failures) failures.push_back(pairNames(table, x, y));
    return {{"status", status(r.pass)}, {"pass", r.pass}, {"pairsChecked", r.pairsChecked}, {"failures", failures}};
}

PairCheckReport pairCheckFromJson(const Json& j, const StructureTable& table) {
    PairCheckReport r;
    r.pass = j.at("pass").get<bool>();
    r.pairsChecked = j.at("pairsChecked").get<std::size_t>();
    for (const auto& f : j.at("failures"))
        r.failures.emplace_back(table.indexOf(f.at(0).get<std::string>()), table.indexOf(f.at(1).get<std::string>()));
    return r;
}

Json toJson(const AdjointReport& r, const AdjointMap& map) {
    return {{"name", r.name},
            {"epsilon", map.epsilon},
            {"lambda", map.lambda},
            {"antilinear", map.antilinear},
            {"status", status(r.pass())},
            {"involution", r.involutionHolds},
            {"convention", r.convention()},
            {"plainHolds", r.plainHolds},
            {"gradedHolds", r.gradedHolds},
            {"exchangesTriangularParts", r.exchangesTriangularParts},
            {"preservesTriangularParts", r.preservesTriangularParts}};
}

}  // namespace sschr::io
