#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "blockseq/avoid.hpp"
#include "blockseq/biarc.hpp"
#include "blockseq/geometry.hpp"
#include "blockseq/partition.hpp"
#include "blockseq/ramsey.hpp"
#include "blockseq/sequence.hpp"

namespace blockseq::io {

using nlohmann::json;

// Malformed or unreadable JSON artifact.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_file(const std::string& path);
// Pretty-printed with a trailing newline.
void write_file(const std::string& path, const json& j);

// All index lists in JSON are 1-based.
json to_json(const Sequence& seq);
Sequence sequence_from_json(const json& j);

json to_json(const BlockWitness& w);
BlockWitness witness_from_json(const json& j);

json to_json(const PairColoring& c);
// Accepts the sparse "colors" list or a dense "triangle" of rows.
PairColoring coloring_from_json(const json& j);

json to_json(const BlockPathWitness& w);
BlockPathWitness block_path_from_json(const json& j);
json to_json(const MonochromaticPath& p);

json to_json(const PointSet& pts);
PointSet points_from_json(const json& j);

json to_json(const OrderedGraph& g);
OrderedGraph graph_from_json(const json& j);

json to_json(const SequencePartition& p);
SequencePartition partition_from_json(const json& j);

json to_json(const AvoidingWitness& w);
AvoidingWitness avoiding_from_json(const json& j);

json to_json(const PagePartition& p, std::size_t n);
// Returns the pages together with the vertex count stored in the artifact.
PagePartition pages_from_json(const json& j, std::size_t& n);

}  // namespace blockseq::io
