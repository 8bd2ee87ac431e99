#pragma once

#include <nlohmann/json.hpp>

#include "fourcalc/lattice/lattice.hpp"
#include "fourcalc/lattice/smith.hpp"

namespace fourcalc::lattice {

// {name, labels, gram: [[..]], alternate?: {labels, vectors}}. On input
// `blocks: ["H", -1, ...]` may replace gram; labels default to b1..bn.
nlohmann::json to_json(const IntLattice& l);
IntLattice lattice_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SignatureParity& sp);
nlohmann::json to_json(const SurfaceClass& s);

}  // namespace fourcalc::lattice
