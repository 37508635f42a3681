#pragma once

#include "json.hpp"
#include "sschr/adjoint.hpp"
#include "sschr/quotient.hpp"
#include "sschr/realization.hpp"

namespace sschr::io {

using Json = nlohmann::ordered_json;

Json toJson(const GaussianRational& z);
GaussianRational gaussianFromJson(const Json& j);

/// {"even": z} plus "chi" and "chiSquare" when the χ part is nonzero.
Json toJson(const GradedScalar& s);
GradedScalar gradedFromJson(const Json& j);

Json toJson(const LowestWeight& lw);
LowestWeight lowestWeightFromJson(const Json& j);

/// {"terms": [{"monomial": [...], "coefficient": ...}], "text": ...}; "text" is
/// present only when a module is given and is ignored on parsing.
Json toJson(const ModuleVector& v, const VermaModule* module = nullptr);
ModuleVector moduleVectorFromJson(const Json& j);

Json toJson(const SingularVectorReport& r, const VermaModule* module = nullptr);
SingularVectorReport singularReportFromJson(const Json& j);

Json toJson(const ClassificationRecord& r, const VermaModule* module = nullptr);
ClassificationRecord classificationFromJson(const Json& j);

Json toJson(const GramMatrix& g, const VermaModule* module = nullptr);
GramMatrix gramFromJson(const Json& j);

Json toJson(const RealizationReport& r);
RealizationReport realizationReportFromJson(const Json& j);

Json toJson(const ChiEtaReport& r);

Json toJson(const StructureTable& table);
StructureTable tableFromJson(const Json& j);

Json toJson(const JacobiReport& r, const StructureTable& table);
JacobiReport jacobiFromJson(const Json& j, const StructureTable& table);

Json toJson(const PairCheckReport& r, const StructureTable& table);
PairCheckReport pairCheckFromJson(const Json& j, const StructureTable& table);

Json toJson(const AdjointReport& r, const AdjointMap& map);

}  // namespace sschr::io
