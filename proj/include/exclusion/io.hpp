#pragma once

#include <string>

#include "json.hpp"

#include "exclusion/criteria.hpp"
#include "exclusion/multicopy.hpp"
#include "exclusion/povm.hpp"

namespace exclusion::io {

using json = nlohmann::json;

// Complex entries serialize as [re, im] pairs throughout.
json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);

json stateset_to_json(const StateSet& set);
StateSet stateset_from_json(const json& j);

json povm_to_json(const Povm& p);
Povm povm_from_json(const json& j);

json verdict_to_json(const Verdict& v, int copies);
json copy_report_to_json(const CopyReport& r);

StateSet load_stateset(const std::string& path);
Povm load_povm(const std::string& path);
void save_json(const json& j, const std::string& path);

std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace exclusion::io
