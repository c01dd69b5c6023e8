#pragma once

#include <beslab/constructions.hpp>
#include <beslab/hypergraph.hpp>
#include <beslab/merging.hpp>
#include <beslab/packing.hpp>
#include <beslab/structure.hpp>
#include <beslab/turan.hpp>
#include <beslab/weights.hpp>

#include <nlohmann/json.hpp>

namespace beslab
{
    // Rationals are written as reduced "p/q" strings, hypergraphs as the text format plus an edge list.
    auto to_json(const Hypergraph & g) -> nlohmann::json;
    auto to_json(const Violation & v) -> nlohmann::json;
    auto to_json(const Partition & p) -> nlohmann::json;
    auto to_json(const WeightReport & w) -> nlohmann::json;
    auto to_json(const ConstructionReport & c) -> nlohmann::json;
    auto to_json(const RandomConstruction & c) -> nlohmann::json;
    auto to_json(const TuranResult & t) -> nlohmann::json;
    auto to_json(const SweepReport & s) -> nlohmann::json;
}
