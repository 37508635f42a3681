#include "commands.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace sschr::cli {

namespace {

std::string weightText(const Weight& w) {
    std::string out = "(";
    for (std::size_t k = 0; k < w.size(); ++k) out += (k ? "," : "") + std::to_string(w[k]);
    return out + ")";
}

std::string status(bool pass) { return pass ? "pass" : "fail"; }

io::Json header(const RunConfig& cfg) { return io::toJson(cfg.lowestWeight()); }

}  // namespace

int defaultCutoff() {
    const char* env = std::getenv("SSCHR_CUTOFF");
    if (!env || !*env) return 12;
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(env, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != std::string(env).size() || value <= 0)
        throw std::invalid_argument("SSCHR_CUTOFF must be a positive integer, got '" + std::string(env) + "'");
    return value;
}

void validate(const RunConfig& cfg) {
    if (cfg.cutoff <= 0) throw std::invalid_argument("cutoff must be positive");
    if (cfg.polyDegree <= 0) throw std::invalid_argument("polynomial degree must be positive");
    if (cfg.epsilon != 0 && cfg.epsilon != 1) throw std::invalid_argument("epsilon must be 0 or 1");
    if (cfg.lambda != 0 && cfg.lambda != 1) throw std::invalid_argument("lambda must be 0 or 1");
}

Weight parseWeight(const std::string& text) {
    Weight w;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (part.empty() || used != part.size()) throw std::invalid_argument("malformed weight '" + text + "'");
        w.push_back(value);
    }
    if (w.empty() || text.back() == ',') throw std::invalid_argument("malformed weight '" + text + "'");
    return w;
}

CommandResult algebraVerify(const RunConfig& cfg) {
    validate(cfg);
    const StructureTable table = buildAlgebra(cfg.kind);
    const JacobiReport jac = verifySuperJacobi(table);
    const PairCheckReport anti = verifyAntisymmetry(table);
    const PairCheckReport grading = verifyGrading(table);
    CommandResult res;
    res.json = {{"algebra", kindName(cfg.kind)},
                {"generators", table.size()},
                {"jacobi", io::toJson(jac, table)},
                {"antisymmetry", io::toJson(anti, table)},
                {"grading", io::toJson(grading, table)}};
    bool pass = jac.pass && anti.pass && grading.pass;
    std::ostringstream text;
    text << "algebra: " << kindName(cfg.kind) << "\n";
    text << "jacobi: " << status(jac.pass) << " (" << jac.triplesChecked << " triples)\n";
    text << "antisymmetry: " << status(anti.pass) << "\n";
    text << "grading: " << status(grading.pass) << "\n";
    io::Json adjoints = io::Json::array();
    for (AdjointKind kind : {AdjointKind::omega1, AdjointKind::omega2, AdjointKind::sigma1, AdjointKind::sigma2}) {
        AdjointMap map;
        try {
            map = buildAdjoint(table, kind, cfg.epsilon, cfg.lambda);
        } catch (const std::invalid_argument&) {
            continue;
        }
        const AdjointReport rep = verifyAdjoint(table, map);
        adjoints.push_back(io::toJson(rep, map));
        pass = pass && rep.pass();
        text << adjointName(kind) << ": " << status(rep.pass()) << " (" << rep.convention() << ")\n";
    }
    res.json["adjoints"] = adjoints;
    res.json["status"] = status(pass);
    res.text = text.str();
    res.exitCode = pass ? 0 : 1;
    return res;
}

CommandResult algebraDump(const RunConfig& cfg) {
    const StructureTable table = buildAlgebra(cfg.kind);
    CommandResult res;
    res.json = io::toJson(table);
    std::ostringstream text;
    for (const auto& [x, y] : table.nonzeroPairs())
        text << "[" << table.generator(x).name << "," << table.generator(y).name
             << "} = " << table.render(table.bracket(x, y)) << "\n";
    res.text = text.str();
    return res;
}

CommandResult singularFind(const RunConfig& cfg) {
    validate(cfg);
    const VermaModule mod(cfg.lowestWeight());
    const auto reps = findSingular(mod, cfg.cutoff);
    CommandResult res;
    res.json = header(cfg);
    res.json["maxDegree"] = cfg.cutoff;
    io::Json list = io::Json::array();
    std::ostringstream text;
    bool verified = true;
    for (const auto& r : reps) {
        list.push_back(io::toJson(r, &mod));
        verified = verified && (r.kernelDimension == 0 || r.reverified);
        text << weightText(r.weight) << " sector " << r.sector << ": dim " << r.kernelDimension << ", "
             << r.matchedClosedForm << (r.matchesPrediction ? "" : " (mismatch)") << "\n";
        for (const auto& v : r.vectors) text << "  " << mod.render(v) << "\n";
    }
    if (reps.empty()) text << "no singular vectors up to degree " << cfg.cutoff << "\n";
    res.json["reports"] = list;
    res.text = text.str();
    res.exitCode = verified ? 0 : 1;
    return res;
}

CommandResult singularCheck(const RunConfig& cfg) {
    validate(cfg);
    const VermaModule mod(cfg.lowestWeight());
    const auto reps = findSingular(mod, cfg.cutoff);
    CommandResult res;
    res.json = header(cfg);
    res.json["maxDegree"] = cfg.cutoff;
    io::Json checks = io::Json::array();
    std::ostringstream text;
    bool pass = true;
    for (const auto& r : reps) {
        io::Json forms = io::Json::array();
        for (const auto& lv : expectedSingular(mod, r.weight, r.sector)) {
            const bool singular = isSingular(mod, lv.vector);
            pass = pass && singular;
            forms.push_back({{"label", lv.label}, {"vector", io::toJson(lv.vector, &mod)}, {"singular", singular}});
        }
        const bool ok = r.matchesPrediction && (r.kernelDimension == 0 || r.reverified);
        pass = pass && ok;
        checks.push_back({{"weight", r.weight},
                          {"sector", r.sector},
                          {"kernelDimension", r.kernelDimension},
                          {"predictedDimension", r.predictedDimension},
                          {"closedForms", forms},
                          {"status", status(ok)}});
        text << weightText(r.weight) << " sector " << r.sector << ": kernel " << r.kernelDimension << ", predicted "
             << r.predictedDimension << ": " << status(ok) << "\n";
    }
    res.json["checks"] = checks;
    res.json["status"] = status(pass);
    text << "status: " << status(pass) << "\n";
    res.text = text.str();
    res.exitCode = pass ? 0 : 1;
    return res;
}

CommandResult classifyCommand(const RunConfig& cfg) {
    validate(cfg);
    const ClassificationRecord rec = classify(cfg.lowestWeight(), cfg.cutoff);
    const VermaModule mod(cfg.lowestWeight());
    CommandResult res;
    res.json = io::toJson(rec, &mod);
    std::ostringstream text;
    text << "module: " << rec.verdict << "\n";
    text << "verdict: " << (rec.dimension ? "finite, dimension " + std::to_string(*rec.dimension) : "infinite") << "\n";
    for (const auto& s : rec.chain)
        text << "  / " << s.submodule << " at " << weightText(s.weight) << ": " << mod.render(s.generator) << " -> "
             << s.module << "\n";
    text << "irreducible up to degree " << rec.cutoff << ": " << (rec.irreducibleUpToCutoff ? "yes" : "no") << "\n";
    res.text = text.str();
    res.exitCode = rec.irreducibleUpToCutoff ? 0 : 1;
    return res;
}

CommandResult gramCommand(const RunConfig& cfg) {
    validate(cfg);
    if (!cfg.weight) throw std::invalid_argument("gram requires --weight");
    if (static_cast<int>(cfg.weight->size()) != weightRank(cfg.kind))
        throw std::invalid_argument("weight rank does not match the algebra");
    const VermaModule mod(cfg.lowestWeight());
    const GramMatrix g = gram(mod, *cfg.weight, cfg.cutoff, cfg.epsilon, cfg.lambda);
    CommandResult res;
    res.json = header(cfg);
    res.json["epsilon"] = cfg.epsilon;
    res.json["lambda"] = cfg.lambda;
    res.json["gram"] = io::toJson(g, &mod);
    std::ostringstream text;
    text << "weight " << weightText(g.weight) << ", size " << g.basis.size() << ", rank " << g.rank
         << ", determinant " << g.determinant.str() << "\n";
    for (std::size_t i = 0; i < g.entries.rows(); ++i) {
        text << " ";
        for (std::size_t k = 0; k < g.entries.cols(); ++k) text << " " << g.entries(i, k).str();
        text << "\n";
    }
    res.text = text.str();
    return res;
}

CommandResult realizationVerify(const RunConfig& cfg) {
    validate(cfg);
    const Realization rz = buildRealization(cfg.kind, cfg.d, cfg.m);
    const RealizationReport rep = verifyRelations(rz, rz.table, cfg.polyDegree);
    CommandResult res;
    res.json = header(cfg);
    res.json["relations"] = io::toJson(rep);
    io::Json ops = io::Json::object();
    for (std::size_t g = 0; g < rz.ops.size(); ++g) ops[rz.table.generator(g).name] = rz.ops[g].str();
    res.json["operators"] = ops;
    bool pass = rep.pass;
    std::ostringstream text;
    text << "relations: " << status(rep.pass) << " (" << rep.pairsChecked << " pairs, " << rep.monomialsChecked
         << " monomials, degree <= " << rep.testedDegree << ", certified <= " << rep.certifiedDegree << ")\n";
    for (const auto& f : rep.failures) text << "  " << f.relation << " on " << f.monomial << ": " << f.residual << "\n";
    if (cfg.kind == AlgebraKind::ssch1) {
        const ChiEtaReport ce = chiEtaFromPhi(cfg.m);
        res.json["chiEta"] = io::toJson(ce);
        pass = pass && ce.pass();
        text << "chi-eta: " << status(ce.pass()) << "\n";
    }
    res.json["status"] = status(pass);
    res.text = text.str();
    res.exitCode = pass ? 0 : 1;
    return res;
}

}  // namespace sschr::cli
