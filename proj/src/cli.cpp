#include "blockseq/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "blockseq/avoid.hpp"
#include "blockseq/biarc.hpp"
#include "blockseq/errors.hpp"
#include "blockseq/extract.hpp"
#include "blockseq/io.hpp"
#include "blockseq/oracle.hpp"
#include "blockseq/partition.hpp"
#include "blockseq/ramsey.hpp"
#include "blockseq/sequence.hpp"
#include "blockseq/svg.hpp"

namespace blockseq::cli {

namespace {

using io::json;

// Ends a command with a specific exit code.
class Exit : public std::runtime_error {
 public:
  Exit(int code, const std::string& msg) : std::runtime_error(msg), code(code) {}
  int code;
};

[[noreturn]] void mismatch(const std::string& msg) { throw Exit(kExitMismatch, msg); }

struct Context {
  CommandResult result;

  void info(const std::string& msg) { result.log.push_back("info: " + msg); }
  void write(const std::string& path, const json& j) {
    io::write_file(path, j);
    result.artifacts.push_back(path);
  }
  void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io::SchemaError("cannot write " + path);
    out << text;
    if (!out) throw io::SchemaError("write failed for " + path);
    result.artifacts.push_back(path);
  }
};

double resolve_c(const std::optional<double>& flag) {
  if (flag) {
    if (!(*flag > 0)) throw InvalidInput("--c must be positive");
    return *flag;
  }
  if (const char* env = std::getenv("BLOCKSEQ_C")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0) || !std::isfinite(v)) {
      throw InvalidInput("BLOCKSEQ_C must be a positive number");
    }
    return v;
  }
  return kDefaultC;
}

std::string describe(const BlockWitness& w) {
  std::ostringstream s;
  s << (w.direction == Direction::increasing ? "inc" : "dec") << " depth=" << w.depth()
    << " block_size=" << w.block_size();
  return s.str();
}

// ---- self-checks shared by producing commands and verify ----

void check_witness(const Sequence& seq, const BlockWitness& w, std::size_t k) {
  if (!validate_block_witness(seq, w)) mismatch("witness is not block-monotone");
  if (w.depth() < k) mismatch("witness depth " + std::to_string(w.depth()) + " < k");
}

void check_partition(const Sequence& seq, const SequencePartition& p, std::size_t k) {
  std::vector<char> seen(seq.size(), 0);
  auto mark = [&](std::size_t i) {
    if (i >= seq.size()) throw InvalidInput("partition index out of range");
    if (seen[i]) mismatch("partition covers position " + std::to_string(i + 1) + " twice");
    seen[i] = 1;
  };
  for (const auto& w : p.parts) {
    check_witness(seq, w, k);
    for (std::size_t i : w.indices()) mark(i);
  }
  for (std::size_t i : p.remainder) mark(i);
  if (std::count(seen.begin(), seen.end(), 0) != 0) mismatch("partition misses positions");
  if (k >= 1 && p.remainder.size() > (k - 1) * (k - 1)) mismatch("remainder exceeds (k-1)^2");
}

void check_pages(const OrderedGraph& g, const PagePartition& pp) {
  std::vector<Edge> drawn;
  for (std::size_t i = 0; i < pp.pages.size(); ++i) {
    const Page& page = pp.pages[i];
    for (const auto& de : page.edges) drawn.push_back(de.edge);
    const std::size_t crossings = count_page_crossings(page, g.n);
    const double size = static_cast<double>(page.size());
    if (static_cast<double>(crossings) > pp.epsilon * size * size) {
      mismatch("page " + std::to_string(i + 1) + " exceeds the crossing budget");
    }
    if (i < pp.crossings.size() && pp.crossings[i] != crossings) {
      mismatch("page " + std::to_string(i + 1) + " reports a wrong crossing count");
    }
  }
  std::vector<Edge> expected = g.edges;
  std::sort(drawn.begin(), drawn.end());
  std::sort(expected.begin(), expected.end());
  if (drawn != expected) mismatch("pages do not partition the edge set");
}

void check_avoiding_witness(const AvoidingWitness& w) {
  if (w.a_blocks.size() != w.b_blocks.size() || w.a_blocks.empty()) mismatch("families must have k blocks each");
  for (const auto* family : {&w.a_blocks, &w.b_blocks}) {
    for (const auto& block : *family) {
      if (block.empty() || block.size() != family->front().size()) mismatch("block sizes differ within a family");
    }
  }
  PointSet all;
  for (const auto* family : {&w.a_blocks, &w.b_blocks}) {
    for (const auto& block : *family) all.insert(all.end(), block.begin(), block.end());
  }
  std::sort(all.begin(), all.end(), [](const Point& a, const Point& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) mismatch("blocks are not disjoint");
  if (!check_avoiding(w)) mismatch("sets are not mutually avoiding");
}

void check_block_path(const PairColoring& c, const BlockPathWitness& w, std::size_t k, std::size_t s) {
  if (!validate_block_path(c, w)) mismatch("block path fails validation");
  if (w.depth() < k || w.block_size() < s) mismatch("block path is smaller than requested");
}

// ---- commands ----

struct GenOpts {
  std::string type = "seq", kind = "random", order = "dec", out, in;
  std::size_t n = 100, k = 3, s = 2, m = 0, q = 2;
  double delta = 0.25, spread = 0.01;
  std::uint64_t seed = 0;
};

void cmd_gen(Context& ctx, const GenOpts& o) {
  json j;
  if (o.type == "seq") {
    if (o.kind == "random") {
      j = io::to_json(gen_random(o.n, o.seed));
    } else if (o.kind == "es") {
      j = io::to_json(gen_es_extremal(o.k));
    } else if (o.kind == "clustered") {
      ClusterOrder order = ClusterOrder::decreasing;
      if (o.order == "inc") order = ClusterOrder::increasing;
      else if (o.order == "random") order = ClusterOrder::seeded_random;
      else if (o.order != "dec") throw InvalidInput("--order must be inc, dec or random");
      j = io::to_json(gen_clustered(o.k, o.s, order, o.delta, o.seed));
    } else {
      throw InvalidInput("unknown sequence kind " + o.kind);
    }
  } else if (o.type == "points") {
    if (o.kind == "random") {
      j = io::to_json(gen_random_points(o.n, o.seed));
    } else if (o.kind == "grid") {
      j = io::to_json(gen_grid_clusters(o.k, o.s, o.spread, o.seed));
    } else {
      throw InvalidInput("unknown point set kind " + o.kind);
    }
  } else if (o.type == "graph") {
    j = io::to_json(gen_random_graph(o.n, o.m, o.seed));
  } else if (o.type == "coloring") {
    if (o.kind == "recursive") {
      j = io::to_json(gen_recursive_coloring(o.k, o.q));
    } else if (o.kind == "random") {
      j = io::to_json(gen_random_coloring(o.n, o.q, o.seed));
    } else if (o.kind == "sequence") {
      j = io::to_json(coloring_from_sequence(io::sequence_from_json(io::read_file(o.in))));
    } else {
      throw InvalidInput("unknown coloring kind " + o.kind);
    }
  } else {
    throw InvalidInput("unknown --type " + o.type);
  }
  ctx.write(o.out, j);
  ctx.info("generated " + o.type + " (" + o.kind + ")");
}

struct ExtractOpts {
  std::size_t k = 2;
  std::optional<double> c;
  std::string in, out;
};

void cmd_extract(Context& ctx, const ExtractOpts& o) {
  const Sequence seq = io::sequence_from_json(io::read_file(o.in));
  const BlockWitness w = extract_block_monotone(seq, o.k, resolve_c(o.c));
  check_witness(seq, w, o.k);
  if (!o.out.empty()) ctx.write(o.out, io::to_json(w));
  ctx.info("witness " + describe(w));
}

struct PartitionOpts {
  std::size_t k = 2;
  std::string mode = "full", in, out, svg;
  std::optional<double> c;
};

void cmd_partition(Context& ctx, const PartitionOpts& o) {
  const Sequence seq = io::sequence_from_json(io::read_file(o.in));
  SequencePartition p;
  if (o.mode == "full") {
    PartitionOptions opt;
    opt.c = resolve_c(o.c);
    p = partition_sequence(seq, o.k, opt);
  } else if (o.mode == "greedy") {
    p = greedy_partition(seq, o.k);
  } else {
    throw InvalidInput("--mode must be full or greedy");
  }
  check_partition(seq, p, o.k);
  if (!o.out.empty()) ctx.write(o.out, io::to_json(p));
  if (!o.svg.empty()) {
    std::vector<std::vector<std::size_t>> groups;
    for (const auto& w : p.parts) groups.push_back(w.indices());
    ctx.write_text(o.svg, svg::render_points(seq_to_points(seq), groups));
  }
  ctx.info("parts=" + std::to_string(p.parts.size()) + " remainder=" + std::to_string(p.remainder.size()) +
           " iterations=" + std::to_string(p.metrics.iterations));
}

struct RamseyOpts {
  std::string kind = "recursive", in, out;
  std::size_t k = 2, q = 2, n = 10, s = 1;
  std::uint64_t seed = 0;
};

void cmd_ramsey_generate(Context& ctx, const RamseyOpts& o) {
  const PairColoring c = o.kind == "random" ? gen_random_coloring(o.n, o.q, o.seed)
                         : o.kind == "recursive" ? gen_recursive_coloring(o.k, o.q)
                                                 : throw InvalidInput("--kind must be recursive or random");
  ctx.write(o.out, io::to_json(c));
  ctx.info("coloring n=" + std::to_string(c.n()) + " q=" + std::to_string(c.q()));
}

void cmd_ramsey_search(Context& ctx, const RamseyOpts& o) {
  const PairColoring c = io::coloring_from_json(io::read_file(o.in));
  const auto w = find_block_path(c, o.k, o.s);
  if (!w) throw Exit(kExitPrecondition, "no block path of the requested depth and block size");
  check_block_path(c, *w, o.k, o.s);
  if (!o.out.empty()) ctx.write(o.out, io::to_json(*w));
  ctx.info("block path color=" + std::to_string(w->color) + " depth=" + std::to_string(w->depth()) +
           " block_size=" + std::to_string(w->block_size()));
}

void cmd_ramsey_path(Context& ctx, const RamseyOpts& o) {
  const PairColoring c = io::coloring_from_json(io::read_file(o.in));
  const MonochromaticPath p = longest_monochromatic_path(c);
  for (std::size_t t = 0; t + 1 < p.vertices.size(); ++t) {
    if (c.color(p.vertices[t], p.vertices[t + 1]) != p.color) mismatch("path is not monochromatic");
  }
  if (!o.out.empty()) ctx.write(o.out, io::to_json(p));
  ctx.info("longest monochromatic path length=" + std::to_string(p.vertices.size()));
}

struct AvoidOpts {
  std::size_t k = 2;
  std::string in, out, svg;
};

void cmd_avoid(Context& ctx, const AvoidOpts& o) {
  const PointSet pts = io::points_from_json(io::read_file(o.in));
  const AvoidingWitness w = mutually_avoiding_sets(pts, o.k);
  check_avoiding_witness(w);
  if (!o.out.empty()) ctx.write(o.out, io::to_json(w));
  if (!o.svg.empty()) {
    std::vector<std::vector<std::size_t>> groups = w.a_ids;
    groups.insert(groups.end(), w.b_ids.begin(), w.b_ids.end());
    ctx.write_text(o.svg, svg::render_points(pts, groups));
  }
  std::ostringstream s;
  s << "a_block_size=" << w.a_blocks.front().size() << " b_block_size=" << w.b_blocks.front().size()
    << " guarantee=" << w.guarantee;
  ctx.info(s.str());
}

struct PaginateOpts {
  double epsilon = 0.5;
  std::string in, out, svg;
  std::optional<double> c;
};

void cmd_paginate(Context& ctx, const PaginateOpts& o) {
  const OrderedGraph g = io::graph_from_json(io::read_file(o.in));
  PartitionOptions opt;
  opt.c = resolve_c(o.c);
  const PagePartition pp = paginate(g, o.epsilon, opt);
  check_pages(g, pp);
  if (!o.out.empty()) ctx.write(o.out, io::to_json(pp, g.n));
  if (!o.svg.empty()) ctx.write_text(o.svg, svg::render_pages(pp, g.n));
  ctx.info("pages=" + std::to_string(pp.pages.size()) + " k=" + std::to_string(pp.k));
}

struct VerifyOpts {
  std::string artifact, in, oracle;
  std::size_t k = 1, s = 1;
};

enum class Kind { witness, partition, avoiding, pages, block_path, mono_path, sequence, points, graph, coloring };

Kind artifact_kind(const json& j) {
  if (!j.is_object()) throw io::SchemaError("artifact must be a JSON object");
  if (j.contains("pages")) return Kind::pages;
  if (j.contains("parts")) return Kind::partition;
  if (j.contains("a_blocks")) return Kind::avoiding;
  if (j.contains("endpoints")) return Kind::block_path;
  if (j.contains("direction")) return Kind::witness;
  if (j.contains("vertices")) return Kind::mono_path;
  if (j.contains("values")) return Kind::sequence;
  if (j.contains("points")) return Kind::points;
  if (j.contains("edges")) return Kind::graph;
  if (j.contains("colors") || j.contains("triangle")) return Kind::coloring;
  throw io::SchemaError("unrecognised artifact");
}

json need_input(const VerifyOpts& o, const char* what) {
  if (o.in.empty()) throw InvalidInput(std::string("--in ") + what + " is required for this artifact");
  return io::read_file(o.in);
}

void verify_artifact(Context& ctx, const VerifyOpts& o) {
  const json j = io::read_file(o.artifact);
  switch (artifact_kind(j)) {
    case Kind::witness: {
      const Sequence seq = io::sequence_from_json(need_input(o, "seq.json"));
      const BlockWitness w = io::witness_from_json(j);
      check_witness(seq, w, o.k);
      ctx.info("witness ok: " + describe(w));
      return;
    }
    case Kind::partition: {
      const Sequence seq = io::sequence_from_json(need_input(o, "seq.json"));
      const SequencePartition p = io::partition_from_json(j);
      std::size_t k = o.k;
      // depth bound defaults to the shallowest part
      if (k <= 1 && !p.parts.empty()) {
        k = p.parts.front().depth();
        for (const auto& w : p.parts) k = std::min(k, w.depth());
      }
      check_partition(seq, p, k);
      ctx.info("partition ok: parts=" + std::to_string(p.parts.size()));
      return;
    }
    case Kind::avoiding:
      check_avoiding_witness(io::avoiding_from_json(j));
      ctx.info("avoiding witness ok");
      return;
    case Kind::pages: {
      const OrderedGraph g = io::graph_from_json(need_input(o, "graph.json"));
      std::size_t n = 0;
      const PagePartition pp = io::pages_from_json(j, n);
      if (n != g.n) mismatch("pages were drawn for a different vertex count");
      check_pages(g, pp);
      ctx.info("pages ok: " + std::to_string(pp.pages.size()));
      return;
    }
    case Kind::block_path: {
      const PairColoring c = io::coloring_from_json(need_input(o, "coloring.json"));
      check_block_path(c, io::block_path_from_json(j), o.k, o.s);
      ctx.info("block path ok");
      return;
    }
    case Kind::mono_path: {
      const PairColoring c = io::coloring_from_json(need_input(o, "coloring.json"));
      const auto color = j.at("color").get<int>();
      std::vector<std::size_t> vs;
      for (const auto& v : j.at("vertices")) vs.push_back(v.get<std::size_t>());
      for (std::size_t t = 0; t + 1 < vs.size(); ++t) {
        if (vs[t] < 1 || vs[t] >= vs[t + 1] || vs[t + 1] > c.n()) mismatch("path vertices must increase");
        if (c.color(vs[t] - 1, vs[t + 1] - 1) != color) mismatch("path is not monochromatic");
      }
      ctx.info("monochromatic path ok");
      return;
    }
    case Kind::sequence:
      io::sequence_from_json(j);
      ctx.info("sequence ok");
      return;
    case Kind::points:
      io::points_from_json(j);
      ctx.info("point set ok");
      return;
    case Kind::graph:
      validate_graph(io::graph_from_json(j));
      ctx.info("graph ok");
      return;
    case Kind::coloring:
      io::coloring_from_json(j);
      ctx.info("coloring ok");
      return;
  }
}

void verify_oracle(Context& ctx, const VerifyOpts& o) {
  if (o.oracle == "longest-monotone") {
    const Sequence seq = io::sequence_from_json(need_input(o, "seq.json"));
    const std::size_t brute = oracle::brute_longest_monotone(seq);
    const std::size_t fast = longest_monotone(seq).indices.size();
    if (brute != fast) mismatch("longest monotone: oracle " + std::to_string(brute) + " vs " + std::to_string(fast));
    ctx.info("longest monotone = " + std::to_string(brute));
  } else if (o.oracle == "block-exists") {
    const Sequence seq = io::sequence_from_json(need_input(o, "seq.json"));
    const bool exists = oracle::exists_block_monotone(seq, o.k, o.s);
    ctx.info(std::string("block-monotone subsequence ") + (exists ? "exists" : "does not exist"));
  } else if (o.oracle == "max-blocksize") {
    const Sequence seq = io::sequence_from_json(need_input(o, "seq.json"));
    const std::size_t exact = oracle::max_blocksize_exact(seq, o.k);
    if (seq.size() > (o.k - 1) * (o.k - 1)) {
      const BlockWitness w = extract_largest(seq, o.k);
      if (w.depth() == o.k && w.block_size() > exact) mismatch("extraction beats the exact maximum");
    }
    ctx.info("max block size = " + std::to_string(exact));
  } else if (o.oracle == "avoiding") {
    const AvoidingWitness w = io::avoiding_from_json(io::read_file(o.artifact));
    if (oracle::brute_avoiding_transversals(w) != check_avoiding(w)) mismatch("avoidance oracle disagrees");
    ctx.info("avoidance oracle agrees");
  } else if (o.oracle == "crossings") {
    std::size_t n = 0;
    const PagePartition pp = io::pages_from_json(io::read_file(o.artifact), n);
    for (std::size_t i = 0; i < pp.pages.size(); ++i) {
      if (oracle::brute_crossings_geometric(pp.pages[i], n) != count_page_crossings(pp.pages[i], n)) {
        mismatch("crossing oracle disagrees on page " + std::to_string(i + 1));
      }
    }
    ctx.info("crossing oracle agrees on " + std::to_string(pp.pages.size()) + " pages");
  } else {
    throw InvalidInput("unknown oracle " + o.oracle);
  }
}

struct RenderOpts {
  std::string artifact, in, out;
};

void cmd_render(Context& ctx, const RenderOpts& o) {
  const json j = io::read_file(o.artifact);
  std::string text;
  switch (artifact_kind(j)) {
    case Kind::pages: {
      std::size_t n = 0;
      const PagePartition pp = io::pages_from_json(j, n);
      if (!o.in.empty()) check_pages(io::graph_from_json(io::read_file(o.in)), pp);
      text = svg::render_pages(pp, n);
      break;
    }
    case Kind::points:
      text = svg::render_points(io::points_from_json(j), {});
      break;
    case Kind::avoiding: {
      const AvoidingWitness w = io::avoiding_from_json(j);
      check_avoiding_witness(w);
      PointSet pts;
      std::vector<std::vector<std::size_t>> groups;
      for (const auto* family : {&w.a_blocks, &w.b_blocks}) {
        for (const auto& block : *family) {
          groups.emplace_back();
          for (const auto& p : block) {
            groups.back().push_back(pts.size());
            pts.push_back(p);
          }
        }
      }
      text = svg::render_points(pts, groups);
      break;
    }
    case Kind::witness:
    case Kind::partition: {
      if (o.in.empty()) throw InvalidInput("--in seq.json is required to render this artifact");
      const Sequence seq = io::sequence_from_json(io::read_file(o.in));
      std::vector<std::vector<std::size_t>> groups;
      if (j.contains("parts")) {
        const SequencePartition p = io::partition_from_json(j);
        std::size_t k = p.parts.empty() ? 1 : p.parts.front().depth();
        for (const auto& w : p.parts) k = std::min(k, w.depth());
        check_partition(seq, p, k);
        for (const auto& w : p.parts) groups.push_back(w.indices());
      } else {
        const BlockWitness w = io::witness_from_json(j);
        check_witness(seq, w, 1);
        groups = w.blocks;
      }
      text = svg::render_points(seq_to_points(seq), groups);
      break;
    }
    case Kind::sequence:
      text = svg::render_points(seq_to_points(io::sequence_from_json(j)), {});
      break;
    default:
      throw io::SchemaError("this artifact cannot be rendered");
  }
  ctx.write_text(o.out, text);
  ctx.info("rendered " + o.out);
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  Context ctx;
  CLI::App app{"Block-monotone subsequences, partitions, Ramsey paths, avoidance and biarc pagination", "blockseq"};
  app.require_subcommand(1);

  GenOpts gen;
  auto* g = app.add_subcommand("gen", "Generate a sequence, point set, graph or coloring");
  g->add_option("--type", gen.type, "seq | points | graph | coloring")->capture_default_str();
  g->add_option("--kind", gen.kind, "seq: random|es|clustered; points: random|grid; coloring: recursive|random|sequence")
      ->capture_default_str();
  g->add_option("--n", gen.n, "size")->capture_default_str();
  g->add_option("--k", gen.k, "depth / grid side")->capture_default_str();
  g->add_option("--s", gen.s, "cluster size")->capture_default_str();
  g->add_option("--m", gen.m, "edge count")->capture_default_str();
  g->add_option("--q", gen.q, "color count")->capture_default_str();
  g->add_option("--order", gen.order, "cluster order: inc | dec | random")->capture_default_str();
  g->add_option("--delta", gen.delta, "cluster width")->capture_default_str();
  g->add_option("--spread", gen.spread, "grid cluster radius")->capture_default_str();
  g->add_option("--seed", gen.seed, "random seed")->capture_default_str();
  g->add_option("--in", gen.in, "input sequence (coloring kind sequence)");
  g->add_option("--out", gen.out, "output file")->required();

  ExtractOpts ex;
  auto* e = app.add_subcommand("extract", "Extract a block-monotone subsequence");
  e->add_option("--k", ex.k, "depth")->required();
  e->add_option("--c", ex.c, "extraction constant (default 40, or BLOCKSEQ_C)");
  e->add_option("--in", ex.in, "sequence JSON")->required();
  e->add_option("--out", ex.out, "witness JSON");

  PartitionOpts pa;
  auto* p = app.add_subcommand("partition", "Partition a sequence into block-monotone parts");
  p->add_option("--k", pa.k, "minimum depth")->required();
  p->add_option("--mode", pa.mode, "full | greedy")->capture_default_str();
  p->add_option("--c", pa.c, "extraction constant");
  p->add_option("--in", pa.in, "sequence JSON")->required();
  p->add_option("--out", pa.out, "partition JSON");
  p->add_option("--svg", pa.svg, "SVG scatter of the parts");

  RamseyOpts ra;
  auto* r = app.add_subcommand("ramsey", "Colorings and monochromatic block paths");
  r->require_subcommand(1);
  auto* rg = r->add_subcommand("generate", "Write a coloring");
  rg->add_option("--kind", ra.kind, "recursive | random")->capture_default_str();
  rg->add_option("--k", ra.k, "path length bound (recursive)")->capture_default_str();
  rg->add_option("--q", ra.q, "color count")->capture_default_str();
  rg->add_option("--n", ra.n, "vertex count (random)")->capture_default_str();
  rg->add_option("--seed", ra.seed, "random seed")->capture_default_str();
  rg->add_option("--out", ra.out, "coloring JSON")->required();
  auto* rs = r->add_subcommand("search", "Find a monochromatic block path");
  rs->add_option("--in", ra.in, "coloring JSON")->required();
  rs->add_option("--k", ra.k, "depth")->required();
  rs->add_option("--s", ra.s, "block size")->capture_default_str();
  rs->add_option("--out", ra.out, "block path JSON");
  auto* rp = r->add_subcommand("path", "Longest monochromatic monotone path");
  rp->add_option("--in", ra.in, "coloring JSON")->required();
  rp->add_option("--out", ra.out, "path JSON");

  AvoidOpts av;
  auto* a = app.add_subcommand("avoid", "Find mutually avoiding block families");
  a->add_option("--k", av.k, "family size")->required();
  a->add_option("--in", av.in, "point set JSON")->required();
  a->add_option("--out", av.out, "witness JSON");
  a->add_option("--svg", av.svg, "SVG scatter of the families");

  PaginateOpts pg;
  auto* pgc = app.add_subcommand("paginate", "Split an ordered graph into low-crossing biarc pages");
  pgc->add_option("--epsilon", pg.epsilon, "crossing budget per page")->required();
  pgc->add_option("--c", pg.c, "extraction constant");
  pgc->add_option("--in", pg.in, "graph JSON")->required();
  pgc->add_option("--out", pg.out, "pages JSON");
  pgc->add_option("--svg", pg.svg, "SVG arc diagrams");

  VerifyOpts ve;
  auto* v = app.add_subcommand("verify", "Check an artifact, or run a brute-force oracle");
  v->add_option("--witness,--artifact", ve.artifact, "artifact JSON");
  v->add_option("--in", ve.in, "input the artifact refers to");
  v->add_option("--k", ve.k, "minimum depth")->capture_default_str();
  v->add_option("--s", ve.s, "block size (oracles, block paths)")->capture_default_str();
  v->add_option("--oracle", ve.oracle, "longest-monotone | block-exists | max-blocksize | avoiding | crossings");

  RenderOpts re;
  auto* rd = app.add_subcommand("render", "Render an artifact as SVG");
  rd->add_option("--artifact", re.artifact, "artifact JSON")->required();
  rd->add_option("--in", re.in, "input sequence or graph");
  rd->add_option("--out", re.out, "SVG file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    ctx.result.log.push_back(app.help());
    return ctx.result;
  } catch (const CLI::CallForAllHelp&) {
    ctx.result.log.push_back(app.help("", CLI::AppFormatMode::All));
    return ctx.result;
  } catch (const CLI::ParseError& err) {
    ctx.result.exit_code = kExitIo;
    ctx.result.log.push_back(std::string("error: ") + err.what());
    ctx.result.log.push_back(app.help());
    return ctx.result;
  }

  try {
    if (g->parsed()) cmd_gen(ctx, gen);
    else if (e->parsed()) cmd_extract(ctx, ex);
    else if (p->parsed()) cmd_partition(ctx, pa);
    else if (rg->parsed()) cmd_ramsey_generate(ctx, ra);
    else if (rs->parsed()) cmd_ramsey_search(ctx, ra);
    else if (rp->parsed()) cmd_ramsey_path(ctx, ra);
    else if (a->parsed()) cmd_avoid(ctx, av);
    else if (pgc->parsed()) cmd_paginate(ctx, pg);
    else if (v->parsed()) {
      if (!ve.oracle.empty()) verify_oracle(ctx, ve);
      else if (!ve.artifact.empty()) verify_artifact(ctx, ve);
      else throw InvalidInput("verify needs --witness/--artifact or --oracle");
    } else if (rd->parsed()) cmd_render(ctx, re);
  } catch (const Exit& x) {
    ctx.result.exit_code = x.code;
    ctx.result.log.push_back(std::string("error: ") + x.what());
  } catch (const PreconditionFailed& x) {
    ctx.result.exit_code = kExitPrecondition;
    ctx.result.log.push_back(std::string("error: ") + x.what());
  } catch (const BudgetExceeded& x) {
    ctx.result.exit_code = kExitPrecondition;
    ctx.result.log.push_back(std::string("error: ") + x.what());
  } catch (const Indeterminate& x) {
    ctx.result.exit_code = kExitMismatch;
    ctx.result.log.push_back(std::string("error: ") + x.what());
  } catch (const std::logic_error& x) {
    // InvalidInput derives from logic_error: bad input; anything else is an internal check
    const bool bad_input = dynamic_cast<const InvalidInput*>(&x) != nullptr;
    ctx.result.exit_code = bad_input ? kExitIo : kExitMismatch;
    ctx.result.log.push_back(std::string("error: ") + x.what());
  } catch (const std::exception& x) {
    ctx.result.exit_code = kExitIo;
    ctx.result.log.push_back(std::string("error: ") + x.what());
  }
  return ctx.result;
}

}  // namespace blockseq::cli
