#include <gtest/gtest.h>

#include <filesystem>

#include "blockseq/avoid.hpp"
#include "blockseq/biarc.hpp"
#include "blockseq/errors.hpp"
#include "blockseq/io.hpp"
#include "blockseq/partition.hpp"
#include "blockseq/ramsey.hpp"
#include "blockseq/svg.hpp"

using namespace blockseq;
using io::json;

namespace {

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Io, SequenceAndWitnessRoundTrip) {
  const Sequence s = gen_random(40, 1);
  EXPECT_EQ(io::sequence_from_json(io::to_json(s)), s);
  const BlockWitness w = extract_block_monotone(s, 3);
  const json j = io::to_json(w);
  EXPECT_EQ(j["blocks"][0][0].get<std::size_t>(), w.blocks[0][0] + 1);
  EXPECT_EQ(io::witness_from_json(j), w);
}

TEST(Io, SchemaErrors) {
  EXPECT_THROW(io::sequence_from_json(json{{"vals", {1, 2}}}), io::SchemaError);
  EXPECT_THROW(io::sequence_from_json(json{{"values", "abc"}}), io::SchemaError);
  EXPECT_THROW(io::witness_from_json(json{{"direction", "up"}, {"blocks", json::array()}}), io::SchemaError);
  EXPECT_THROW(io::witness_from_json(json{{"direction", "inc"}, {"blocks", {{0}}}}), io::SchemaError);
  EXPECT_THROW(io::coloring_from_json(json{{"n", 3}, {"q", 2}, {"colors", {{1, 2, 1}}}}), io::SchemaError);
  EXPECT_THROW(io::coloring_from_json(json{{"n", 2}, {"q", 2}, {"colors", {{1, 2, 3}}}}), io::SchemaError);
  EXPECT_THROW(io::read_file("/nonexistent/x.json"), io::SchemaError);
  EXPECT_THROW(io::sequence_from_json(json{{"values", {1, 1}}}), InvalidInput);
}

TEST(Io, ColoringFormats) {
  const PairColoring c = gen_random_coloring(9, 3, 4);
  const PairColoring back = io::coloring_from_json(io::to_json(c));
  const json tri = json{{"n", 3}, {"q", 2}, {"triangle", {{1, 2}, {2}}}};
  const PairColoring t = io::coloring_from_json(tri);
  EXPECT_EQ(t.color(0, 1), 1);
  EXPECT_EQ(t.color(0, 2), 2);
  EXPECT_EQ(t.color(1, 2), 2);
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = i + 1; j < 9; ++j) EXPECT_EQ(back.color(i, j), c.color(i, j));
  }
}

TEST(Io, BlockPathPointsGraphRoundTrip) {
  const PairColoring c(9, 2, 1);
  const auto w = find_block_path(c, 2, 2);
  ASSERT_TRUE(w.has_value());
  const BlockPathWitness back = io::block_path_from_json(io::to_json(*w));
  EXPECT_EQ(back.endpoints, w->endpoints);
  EXPECT_EQ(back.blocks, w->blocks);
  EXPECT_EQ(back.color, w->color);

  const PointSet pts = gen_random_points(25, 2);
  EXPECT_EQ(io::points_from_json(io::to_json(pts)), pts);

  const OrderedGraph g = gen_random_graph(12, 20, 3);
  const OrderedGraph gb = io::graph_from_json(io::to_json(g));
  EXPECT_EQ(gb.n, g.n);
  EXPECT_EQ(gb.edges, g.edges);
  EXPECT_THROW(io::graph_from_json(json{{"n", 3}, {"edges", {{1, 5}}}}), InvalidInput);
}

TEST(Io, PartitionAvoidingPagesRoundTrip) {
  const Sequence s = gen_random(300, 6);
  const SequencePartition sp = partition_sequence(s, 3);
  const SequencePartition sb = io::partition_from_json(io::to_json(sp));
  ASSERT_EQ(sb.parts.size(), sp.parts.size());
  for (std::size_t i = 0; i < sp.parts.size(); ++i) EXPECT_EQ(sb.parts[i], sp.parts[i]);
  EXPECT_EQ(sb.remainder, sp.remainder);
  EXPECT_EQ(sb.metrics.termination, sp.metrics.termination);

  const AvoidingWitness aw = mutually_avoiding_sets(gen_random_points(300, 7), 2);
  const AvoidingWitness ab = io::avoiding_from_json(io::to_json(aw));
  EXPECT_EQ(ab.a_blocks, aw.a_blocks);
  EXPECT_EQ(ab.b_blocks, aw.b_blocks);
  EXPECT_EQ(ab.a_ids, aw.a_ids);

  const OrderedGraph g = gen_random_graph(30, 120, 8);
  const PagePartition pp = paginate(g, 0.5);
  std::size_t n = 0;
  const json pj = io::to_json(pp, g.n);
  EXPECT_EQ(pj["page_count"].get<std::size_t>(), pp.pages.size());
  const PagePartition back = io::pages_from_json(pj, n);
  EXPECT_EQ(n, g.n);
  ASSERT_EQ(back.pages.size(), pp.pages.size());
  for (std::size_t i = 0; i < pp.pages.size(); ++i) {
    ASSERT_EQ(back.pages[i].size(), pp.pages[i].size());
    EXPECT_EQ(count_page_crossings(back.pages[i], n), pp.crossings[i]);
  }
}

TEST(Io, FileRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "blockseq_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "seq.json").string();
  const Sequence s = gen_random(10, 9);
  io::write_file(path, io::to_json(s));
  EXPECT_EQ(io::sequence_from_json(io::read_file(path)), s);
  std::filesystem::remove_all(dir);
}

TEST(Svg, PagesHaveOnePathPerSemicircle) {
  const OrderedGraph g = gen_random_graph(20, 60, 1);
  const PagePartition pp = paginate(g, 0.5);
  std::size_t semis = 0;
  for (const auto& page : pp.pages) {
    for (const auto& d : layout_page(page, g.n)) semis += d.size();
  }
  const std::string svg = svg::render_pages(pp, g.n);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_EQ(count_of(svg, "<path"), semis);
}

TEST(Svg, PointsOnePerCircle) {
  const PointSet pts = gen_random_points(30, 2);
  const std::string svg = svg::render_points(pts, {{0, 1, 2}, {5, 6}});
  EXPECT_EQ(count_of(svg, "<circle"), 30u);
}
