#pragma once

#include <json.hpp>

#include <memory>
#include <string>

#include "qlab/locale.hpp"
#include "qlab/maxspec.hpp"
#include "qlab/quantale.hpp"
#include "qlab/suplattice.hpp"

namespace qlab {

/// Parses the file as JSON; throws std::invalid_argument naming the file on
/// open or parse failure.
nlohmann::json load_json_file(const std::string& path);

/// {"elements": [names], "leq": [[a, b], ...]}. Pair entries are element
/// indices or names. The listed relation is completed reflexively and
/// transitively before validation, so only a generating set (e.g. the covers)
/// needs to be written down; antisymmetry and completeness are still checked.
SupLattice lattice_from_json(const nlohmann::json& j);

/// {"points": [names], "leq": [[a, b], ...]}; same closure convention.
Poset poset_from_json(const nlohmann::json& j);

/// {"lattice": <lattice object>, "product": [[indices]], "unit": index|null,
/// "star": [indices]|null, "name": string (optional)}. Shapes and index
/// ranges are validated here; the quantale axioms are not (verify_axioms).
FiniteQuantale quantale_from_json(const nlohmann::json& j);

/// {"target": <quantale object>, "map": [index-or-name, ...]} with map[i] the
/// image of source element i. The hom laws are not checked here (check_hom).
QuantaleHom hom_from_json(std::shared_ptr<const FiniteQuantale> source, const nlohmann::json& j);

/// A list of spanning elements; each element lists one matrix per block, as
/// rows of GaussRational strings ("1", "-1/2", "0+1i").
Subspace subspace_from_json(const Algebra& a, const nlohmann::json& j);

}  // namespace qlab
