#include "modvit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "modvit/error.hpp"

namespace modvit {

Graph Graph::from_edges(NodeId node_count, std::vector<WeightedEdge> edges,
                        std::vector<std::int64_t> labels) {
  if (node_count < 0) throw InputError("negative node count");
  for (auto& e : edges) {
    if (e.u < 0 || e.u >= node_count || e.v < 0 || e.v >= node_count)
      throw InputError("edge endpoint out of range");
    if (e.u == e.v) throw InputError("self-loop on node " + std::to_string(e.u));
    if (!(e.weight > 0.0)) throw InputError("non-positive edge weight");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  // merge duplicates by weight sum
  std::size_t out = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (out > 0 && edges[out - 1].u == edges[i].u && edges[out - 1].v == edges[i].v) {
      edges[out - 1].weight += edges[i].weight;
    } else {
      edges[out++] = edges[i];
    }
  }
  edges.resize(out);

  Graph g;
  g.node_count_ = node_count;
  if (labels.empty()) {
    labels.resize(node_count);
    for (NodeId i = 0; i < node_count; ++i) labels[i] = i;
  } else if (static_cast<NodeId>(labels.size()) != node_count) {
    throw InputError("label vector length does not match node count");
  }
  g.labels_ = std::move(labels);

  g.offset_.assign(static_cast<std::size_t>(node_count) + 1, 0);
  for (const auto& e : edges) {
    ++g.offset_[static_cast<std::size_t>(e.u) + 1];
    ++g.offset_[static_cast<std::size_t>(e.v) + 1];
  }
  for (std::size_t i = 0; i < static_cast<std::size_t>(node_count); ++i)
    g.offset_[i + 1] += g.offset_[i];

  g.neighbor_.resize(edges.size() * 2);
  g.weight_.resize(edges.size() * 2);
  std::vector<std::size_t> cursor(g.offset_.begin(), g.offset_.end() - 1);
  for (const auto& e : edges) {
    g.neighbor_[cursor[e.u]] = e.v;
    g.weight_[cursor[e.u]++] = e.weight;
    g.neighbor_[cursor[e.v]] = e.u;
    g.weight_[cursor[e.v]++] = e.weight;
  }
  // each CSR row ends up sorted by neighbor id because the edge list was
  // sorted lexicographically before the fill

  g.degree_.assign(node_count, 0.0);
  double total = 0.0, comp = 0.0;  // Kahan: M can accumulate over 1e8 terms
  for (const auto& e : edges) {
    g.degree_[e.u] += e.weight;
    g.degree_[e.v] += e.weight;
    const double y = e.weight - comp;
    const double t = total + y;
    comp = (t - total) - y;
    total = t;
  }
  g.total_weight_ = total;
  return g;
}

double Graph::degree(NodeId i) const {
  if (i < 0 || i >= node_count_) throw InputError("node id out of range: " + std::to_string(i));
  return degree_[i];
}

std::vector<WeightedEdge> Graph::edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(edge_count());
  for (NodeId i = 0; i < node_count_; ++i)
    for (std::size_t e = offset_[i]; e < offset_[i + 1]; ++e)
      if (i < neighbor_[e]) out.push_back({i, neighbor_[e], weight_[e]});
  return out;
}

Graph Graph::remove_node(NodeId i) const {
  if (i < 0 || i >= node_count_) throw InputError("node id out of range: " + std::to_string(i));
  std::vector<char> keep(node_count_, 1);
  keep[i] = 0;
  return induced_subgraph(keep);
}

Graph Graph::induced_subgraph(const std::vector<char>& keep,
                              std::vector<NodeId>* original_ids) const {
  if (static_cast<NodeId>(keep.size()) != node_count_)
    throw InputError("keep mask length does not match node count");
  std::vector<NodeId> remap(node_count_, -1);
  std::vector<NodeId> old_ids;
  NodeId next = 0;
  for (NodeId i = 0; i < node_count_; ++i)
    if (keep[i]) {
      remap[i] = next++;
      old_ids.push_back(i);
    }

  // build the CSR directly: invariants and per-row ordering are inherited
  // from this graph, so the from_edges validation pass is unnecessary
  Graph g;
  g.node_count_ = next;
  g.labels_.resize(next);
  g.offset_.assign(static_cast<std::size_t>(next) + 1, 0);
  g.degree_.assign(next, 0.0);
  for (NodeId n = 0; n < next; ++n) {
    const NodeId i = old_ids[n];
    g.labels_[n] = labels_[i];
    std::size_t count = 0;
    for (std::size_t e = offset_[i]; e < offset_[i + 1]; ++e)
      if (keep[neighbor_[e]]) ++count;
    g.offset_[n + 1] = g.offset_[n] + count;
  }
  g.neighbor_.resize(g.offset_[next]);
  g.weight_.resize(g.offset_[next]);
  double total = 0.0;
  for (NodeId n = 0; n < next; ++n) {
    const NodeId i = old_ids[n];
    std::size_t out = g.offset_[n];
    double k = 0.0;
    for (std::size_t e = offset_[i]; e < offset_[i + 1]; ++e) {
      const NodeId j = neighbor_[e];
      if (!keep[j]) continue;
      g.neighbor_[out] = remap[j];
      g.weight_[out++] = weight_[e];
      k += weight_[e];
    }
    g.degree_[n] = k;
    total += k;
  }
  g.total_weight_ = total / 2.0;
  if (original_ids) *original_ids = std::move(old_ids);
  return g;
}

ComponentResult largest_component(const Graph& g, const std::vector<char>& removed) {
  if (static_cast<NodeId>(removed.size()) != g.node_count())
    throw InputError("removed mask length does not match node count");
  const NodeId n = g.node_count();
  std::vector<char> visited(n, 0);
  std::vector<NodeId> queue, best, current;
  for (NodeId s = 0; s < n; ++s) {
    if (removed[s] || visited[s]) continue;
    current.clear();
    queue.assign(1, s);
    visited[s] = 1;
    while (!queue.empty()) {
      const NodeId u = queue.back();
      queue.pop_back();
      current.push_back(u);
      for (std::size_t e = g.adj_begin(u); e < g.adj_end(u); ++e) {
        const NodeId v = g.neighbor(e);
        if (!removed[v] && !visited[v]) {
          visited[v] = 1;
          queue.push_back(v);
        }
      }
    }
    // first strictly-larger component wins; scanning from node 0 upward makes
    // the smallest-contained-id rule hold on ties
    if (current.size() > best.size()) best = current;
  }
  std::sort(best.begin(), best.end());
  return {static_cast<std::int64_t>(best.size()), std::move(best)};
}

namespace {

bool parse_double(const std::string& tok, double& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

bool parse_int64(const std::string& tok, std::int64_t& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

Graph load_edge_list(const std::string& path, bool weighted) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open edge list: " + path);

  struct RawEdge {
    std::int64_t u, v;
    double w;
  };
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string a, b, c, extra;
    if (!(ls >> a)) continue;  // blank line
    if (a[0] == '#') continue;
    if (!(ls >> b))
      throw InputError(path + ":" + std::to_string(line_no) + ": expected 'u v [w]'");
    double w = 1.0;
    if (ls >> c) {
      if (weighted && !parse_double(c, w))
        throw InputError(path + ":" + std::to_string(line_no) + ": bad weight '" + c + "'");
      if (!weighted) w = 1.0;
      if (ls >> extra)
        throw InputError(path + ":" + std::to_string(line_no) + ": trailing tokens");
    }
    RawEdge e;
    if (!parse_int64(a, e.u) || !parse_int64(b, e.v))
      throw InputError(path + ":" + std::to_string(line_no) + ": bad node id");
    if (e.u == e.v)
      throw InputError(path + ":" + std::to_string(line_no) + ": self-loop on node " + a);
    if (!(w > 0.0))
      throw InputError(path + ":" + std::to_string(line_no) + ": weight must be > 0");
    e.w = w;
    raw.push_back(e);
  }

  // compact external ids in ascending order
  std::vector<std::int64_t> ids;
  ids.reserve(raw.size() * 2);
  for (const auto& e : raw) {
    ids.push_back(e.u);
    ids.push_back(e.v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::unordered_map<std::int64_t, NodeId> to_internal;
  to_internal.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    to_internal.emplace(ids[i], static_cast<NodeId>(i));

  std::vector<WeightedEdge> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw)
    edges.push_back({to_internal[e.u], to_internal[e.v], e.w});
  const auto node_count = static_cast<NodeId>(ids.size());
  return Graph::from_edges(node_count, std::move(edges), std::move(ids));
}

namespace {

void write_weight(std::ofstream& out, double w) {
  if (w == std::floor(w) && std::abs(w) < 1e15) {
    out << static_cast<std::int64_t>(w);
  } else {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", w);
    out << buf;
  }
}

}  // namespace

void save_edge_list(const Graph& g, const std::string& path, const std::string& header_comment) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write edge list: " + path);
  if (!header_comment.empty()) out << "# " << header_comment << "\n";
  for (const auto& e : g.edges()) {
    out << g.label(e.u) << ' ' << g.label(e.v) << ' ';
    write_weight(out, e.weight);
    out << '\n';
  }
}

void save_id_map(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write id map: " + path);
  out << "external_id,internal_id\n";
  for (NodeId i = 0; i < g.node_count(); ++i) out << g.label(i) << ',' << i << '\n';
}

}  // namespace modvit
