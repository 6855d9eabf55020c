#ifndef RACKHOM_IO_HPP
#define RACKHOM_IO_HPP

#include <json.hpp>
#include <string>

#include "rackhom/verify.hpp"

namespace rackhom {

/// Group ingestion. Two schemas, both with "format": 1:
///   {"format":1, "order":n, "table":[[...]], "labels":[...]? }
///   {"format":1, "degree":n, "generators":[[cycle,...],...]}
/// Cycles are integer arrays; a generator is the product of its cycles.
FiniteGroup group_from_json(const nlohmann::json& j);

/// Applies a list of cycles to the identity permutation of the degree.
std::vector<int> permutation_from_cycles(int degree,
                                         const std::vector<std::vector<int>>& cycles);

nlohmann::json report_to_json(const GroupReport& rep, bool include_timings = false);
GroupReport report_from_json(const nlohmann::json& j);
std::string report_to_text(const GroupReport& rep, bool include_timings = false);

nlohmann::json poset_to_json(const SubrackPoset& P, const Rack& R);
nlohmann::json complex_to_json(const OrderComplex& K);
nlohmann::json homology_to_json(const HomologyProfile& H);
HomologyProfile homology_from_json(const nlohmann::json& j);
nlohmann::json orbits_to_json(const OrbitDecomposition& dec, const Rack& R);

}  // namespace rackhom

#endif
