#include "blockseq/io.hpp"

#include <fstream>
#include <sstream>

#include "blockseq/errors.hpp"

namespace blockseq::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  }
}

std::size_t from_one_based(const json& v) {
  const auto i = v.get<long long>();
  if (i < 1) throw SchemaError("indices are 1-based");
  return static_cast<std::size_t>(i - 1);
}

json one_based(const std::vector<std::size_t>& ids) {
  json out = json::array();
  for (std::size_t i : ids) out.push_back(i + 1);
  return out;
}

std::vector<std::size_t> ids_from(const json& arr) {
  std::vector<std::size_t> out;
  for (const auto& v : arr) out.push_back(from_one_based(v));
  return out;
}

Direction direction_from(const json& j) {
  const auto s = j.get<std::string>();
  if (s == "inc") return Direction::increasing;
  if (s == "dec") return Direction::decreasing;
  throw SchemaError("direction must be \"inc\" or \"dec\"");
}

json points_array(const PointSet& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back({p.x, p.y});
  return out;
}

PointSet points_array_from(const json& arr) {
  PointSet pts;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2) throw SchemaError("points are [x, y] pairs");
    pts.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return pts;
}

}  // namespace

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw SchemaError("write failed for " + path);
}

json to_json(const Sequence& seq) {
  return json{{"values", std::vector<double>(seq.values().begin(), seq.values().end())}};
}

Sequence sequence_from_json(const json& j) {
  return guarded("sequence", [&] { return Sequence(field(j, "values").get<std::vector<double>>()); });
}

json to_json(const BlockWitness& w) {
  json blocks = json::array();
  for (const auto& b : w.blocks) blocks.push_back(one_based(b));
  return json{{"direction", w.direction == Direction::increasing ? "inc" : "dec"}, {"blocks", blocks}};
}

BlockWitness witness_from_json(const json& j) {
  return guarded("witness", [&] {
    BlockWitness w;
    w.direction = direction_from(field(j, "direction"));
    for (const auto& b : field(j, "blocks")) w.blocks.push_back(ids_from(b));
    return w;
  });
}

json to_json(const PairColoring& c) {
  json colors = json::array();
  for (std::size_t i = 0; i < c.n(); ++i) {
    for (std::size_t j = i + 1; j < c.n(); ++j) colors.push_back({i + 1, j + 1, c.color(i, j)});
  }
  return json{{"n", c.n()}, {"q", c.q()}, {"colors", colors}};
}

PairColoring coloring_from_json(const json& j) {
  return guarded("coloring", [&] {
    const auto n = field(j, "n").get<std::size_t>();
    const auto q = field(j, "q").get<std::size_t>();
    PairColoring c(n, q);
    std::vector<char> seen(n * n, 0);
    std::size_t assigned = 0;
    auto assign = [&](std::size_t a, std::size_t b, long long col) {
      if (a >= b || b >= n) throw SchemaError("coloring: pairs need 1 <= i < j <= n");
      if (col < 1 || static_cast<std::size_t>(col) > q) throw SchemaError("coloring: color out of range");
      if (seen[a * n + b]) throw SchemaError("coloring: pair listed twice");
      seen[a * n + b] = 1;
      ++assigned;
      c.set_color(a, b, static_cast<Color>(col));
    };
    if (j.contains("colors")) {
      for (const auto& t : j.at("colors")) {
        if (!t.is_array() || t.size() != 3) throw SchemaError("coloring: entries are [i, j, c]");
        assign(from_one_based(t[0]), from_one_based(t[1]), t[2].get<long long>());
      }
    } else {
      // row i lists colors of (i, i+1), ..., (i, n)
      const json& rows = field(j, "triangle");
      if (rows.size() + 1 != n && !(n <= 1 && rows.empty())) throw SchemaError("coloring: triangle needs n-1 rows");
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != n - 1 - i) throw SchemaError("coloring: triangle row has the wrong length");
        for (std::size_t t = 0; t < rows[i].size(); ++t) assign(i, i + 1 + t, rows[i][t].get<long long>());
      }
    }
    if (assigned != n * (n - 1) / 2 && n > 1) throw SchemaError("coloring: every pair needs a color");
    return c;
  });
}

json to_json(const BlockPathWitness& w) {
  json blocks = json::array();
  for (const auto& b : w.blocks) blocks.push_back(one_based(b));
  return json{{"color", w.color}, {"endpoints", one_based(w.endpoints)}, {"blocks", blocks}};
}

BlockPathWitness block_path_from_json(const json& j) {
  return guarded("block path", [&] {
    BlockPathWitness w;
    w.color = static_cast<Color>(field(j, "color").get<int>());
    w.endpoints = ids_from(field(j, "endpoints"));
    for (const auto& b : field(j, "blocks")) w.blocks.push_back(ids_from(b));
    return w;
  });
}

json to_json(const MonochromaticPath& p) {
  return json{{"color", p.color}, {"vertices", one_based(p.vertices)}, {"length", p.vertices.size()}};
}

json to_json(const PointSet& pts) { return json{{"points", points_array(pts)}}; }

PointSet points_from_json(const json& j) {
  return guarded("point set", [&] { return points_array_from(field(j, "points")); });
}

json to_json(const OrderedGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({e.l, e.r});
  return json{{"n", g.n}, {"edges", edges}};
}

OrderedGraph graph_from_json(const json& j) {
  return guarded("graph", [&] {
    OrderedGraph g;
    g.n = field(j, "n").get<std::size_t>();
    for (const auto& e : field(j, "edges")) {
      if (!e.is_array() || e.size() != 2) throw SchemaError("graph: edges are [l, r] pairs");
      g.edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
    }
    validate_graph(g);
    return g;
  });
}

json to_json(const SequencePartition& p) {
  json parts = json::array();
  for (const auto& w : p.parts) parts.push_back(to_json(w));
  const PartitionMetrics& m = p.metrics;
  return json{{"parts", parts},
              {"remainder", one_based(p.remainder)},
              {"metrics",
               {{"iterations", m.iterations},
                {"lt_history", m.lt_history},
                {"outcomes", m.outcomes},
                {"termination", m.termination},
                {"part_count", p.parts.size()}}}};
}

SequencePartition partition_from_json(const json& j) {
  return guarded("partition", [&] {
    SequencePartition p;
    for (const auto& w : field(j, "parts")) p.parts.push_back(witness_from_json(w));
    p.remainder = ids_from(field(j, "remainder"));
    if (j.contains("metrics")) {
      const json& m = j.at("metrics");
      p.metrics.iterations = m.value("iterations", std::size_t{0});
      p.metrics.lt_history = m.value("lt_history", std::vector<std::size_t>{});
      p.metrics.outcomes = m.value("outcomes", std::vector<std::string>{});
      p.metrics.termination = m.value("termination", std::string{});
    }
    return p;
  });
}

json to_json(const AvoidingWitness& w) {
  json a = json::array(), b = json::array();
  for (const auto& block : w.a_blocks) a.push_back(points_array(block));
  for (const auto& block : w.b_blocks) b.push_back(points_array(block));
  json out{{"a_blocks", a}, {"b_blocks", b}, {"guarantee", w.guarantee}};
  if (!w.a_ids.empty()) {
    json ai = json::array(), bi = json::array();
    for (const auto& ids : w.a_ids) ai.push_back(one_based(ids));
    for (const auto& ids : w.b_ids) bi.push_back(one_based(ids));
    out["a_ids"] = ai;
    out["b_ids"] = bi;
  }
  return out;
}

AvoidingWitness avoiding_from_json(const json& j) {
  return guarded("avoiding witness", [&] {
    AvoidingWitness w;
    for (const auto& block : field(j, "a_blocks")) w.a_blocks.push_back(points_array_from(block));
    for (const auto& block : field(j, "b_blocks")) w.b_blocks.push_back(points_array_from(block));
    w.guarantee = j.value("guarantee", 0.0);
    if (j.contains("a_ids")) {
      for (const auto& ids : j.at("a_ids")) w.a_ids.push_back(ids_from(ids));
      for (const auto& ids : field(j, "b_ids")) w.b_ids.push_back(ids_from(ids));
    }
    return w;
  });
}

json to_json(const PagePartition& p, std::size_t n) {
  json pages = json::array();
  for (std::size_t i = 0; i < p.pages.size(); ++i) {
    const Page& page = p.pages[i];
    json groups = json::array();
    for (const auto& g : page.groups) {
      groups.push_back({{"style", to_string(g.style)},
                        {"split", g.split},
                        {"depth", g.depth},
                        {"block_size", g.block_size}});
    }
    json edges = json::array();
    for (const auto& de : page.edges) edges.push_back({de.edge.l, de.edge.r, de.group, de.block});
    json entry{{"groups", groups}, {"edges", edges}};
    if (i < p.crossings.size()) entry["crossings"] = p.crossings[i];
    pages.push_back(std::move(entry));
  }
  return json{{"n", n}, {"epsilon", p.epsilon}, {"k", p.k}, {"page_count", p.pages.size()}, {"pages", pages}};
}

PagePartition pages_from_json(const json& j, std::size_t& n) {
  return guarded("pages", [&] {
    PagePartition p;
    n = field(j, "n").get<std::size_t>();
    p.epsilon = field(j, "epsilon").get<double>();
    p.k = field(j, "k").get<std::size_t>();
    for (const auto& entry : field(j, "pages")) {
      Page page;
      for (const auto& g : field(entry, "groups")) {
        const auto style = field(g, "style").get<std::string>();
        if (style != "upper-arcs" && style != "biarcs") throw SchemaError("pages: unknown style " + style);
        page.groups.push_back({style == "biarcs" ? PageStyle::biarcs : PageStyle::upper_arcs,
                               field(g, "split").get<std::size_t>(), field(g, "depth").get<std::size_t>(),
                               field(g, "block_size").get<std::size_t>()});
      }
      for (const auto& e : field(entry, "edges")) {
        if (!e.is_array() || e.size() != 4) throw SchemaError("pages: edges are [l, r, group, block]");
        const DrawnEdge de{{e[0].get<std::size_t>(), e[1].get<std::size_t>()}, e[2].get<std::size_t>(),
                           e[3].get<std::size_t>()};
        if (de.group >= page.groups.size()) throw SchemaError("pages: edge refers to a missing group");
        page.edges.push_back(de);
      }
      if (entry.contains("crossings")) p.crossings.push_back(entry.at("crossings").get<std::size_t>());
      p.pages.push_back(std::move(page));
    }
    return p;
  });
}

}  // namespace blockseq::io
