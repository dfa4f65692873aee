#include "dafos/dataset.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <deque>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "dafos/rng.hpp"

namespace dafos {

namespace {

[[noreturn]] void parse_fail(const std::filesystem::path& file,
                             std::size_t line_no, const std::string& what) {
  std::ostringstream msg;
  msg << file.string() << ":" << line_no << ": " << what;
  throw std::runtime_error(msg.str());
}

std::ifstream open_or_fail(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("missing or unreadable file: " + file.string());
  return in;
}

std::ofstream create_or_fail(const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write file: " + file.string());
  return out;
}

// Exact decimal round trip for doubles.
std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace

std::string split_name(Split s) {
  switch (s) {
    case Split::train: return "train";
    case Split::val: return "val";
    case Split::test: return "test";
  }
  throw std::logic_error("split_name: bad tag");
}

Split parse_split(const std::string& name) {
  if (name == "train") return Split::train;
  if (name == "val") return Split::val;
  if (name == "test") return Split::test;
  throw std::invalid_argument("unknown split tag \"" + name + "\"");
}

int DatasetBundle::num_classes() const {
  int max_label = -1;
  for (int label : labels) max_label = std::max(max_label, label);
  return max_label + 1;
}

std::vector<NodeId> DatasetBundle::split_ids(Split s) const {
  std::vector<NodeId> ids;
  for (std::size_t v = 0; v < splits.size(); ++v)
    if (splits[v] == s) ids.push_back(static_cast<NodeId>(v));
  return ids;
}

void DatasetBundle::validate() const {
  auto n = static_cast<std::size_t>(graph.num_nodes);
  if (static_cast<std::size_t>(features.rows()) != n)
    throw std::invalid_argument("dataset: feature row count != num_nodes");
  if (labels.size() != n)
    throw std::invalid_argument("dataset: label count != num_nodes");
  if (splits.size() != n)
    throw std::invalid_argument("dataset: split count != num_nodes");
  for (int label : labels)
    if (label < 0) throw std::invalid_argument("dataset: negative label");
}

SbmGraph gen_sbm(std::int64_t num_nodes, int num_blocks, double p_intra,
                 double p_inter, std::uint64_t seed) {
  if (p_intra < 0.0 || p_intra > 1.0 || p_inter < 0.0 || p_inter > 1.0 ||
      p_inter > p_intra)
    throw std::invalid_argument(
        "gen_sbm: probabilities must satisfy 0 <= p_inter <= p_intra <= 1");
  if (num_blocks < 1) throw std::invalid_argument("gen_sbm: num_blocks < 1");

  SbmGraph result;
  result.blocks.resize(static_cast<std::size_t>(num_nodes));
  for (std::int64_t v = 0; v < num_nodes; ++v)
    result.blocks[static_cast<std::size_t>(v)] =
        static_cast<int>(v * num_blocks / num_nodes);

  Rng rng(derive_stream(seed, {stream::kSbm}));
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::int64_t u = 0; u < num_nodes; ++u) {
    for (std::int64_t v = u + 1; v < num_nodes; ++v) {
      double p = result.blocks[static_cast<std::size_t>(u)] ==
                         result.blocks[static_cast<std::size_t>(v)]
                     ? p_intra
                     : p_inter;
      if (rng.next_double() < p) edges.emplace_back(u, v);
    }
  }
  result.graph = build_csr(edges, num_nodes, /*symmetrize=*/true);
  return result;
}

CsrGraph gen_preferential_attachment(std::int64_t num_nodes, std::int64_t m,
                                     std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("gen_preferential_attachment: m < 1");
  if (num_nodes <= m)
    throw std::invalid_argument(
        "gen_preferential_attachment: num_nodes must exceed m");

  Rng rng(derive_stream(seed, {stream::kPrefAttach}));
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<NodeId> endpoints;  // one entry per edge endpoint

  // seed clique on nodes 0..m
  for (NodeId u = 0; u <= m; ++u) {
    for (NodeId v = u + 1; v <= m; ++v) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }

  std::vector<NodeId> picked;
  for (NodeId t = m + 1; t < num_nodes; ++t) {
    picked.clear();
    while (static_cast<std::int64_t>(picked.size()) < m) {
      NodeId candidate = endpoints[rng.uniform_int(endpoints.size())];
      if (std::find(picked.begin(), picked.end(), candidate) == picked.end())
        picked.push_back(candidate);
    }
    for (NodeId target : picked) {
      edges.emplace_back(t, target);
      endpoints.push_back(t);
      endpoints.push_back(target);
    }
  }
  return build_csr(edges, num_nodes, /*symmetrize=*/true);
}

PlantedFeatures gen_planted_features(const CsrGraph& graph,
                                     const std::vector<int>& block_assignment,
                                     std::int64_t feat_dim, double noise_sigma,
                                     std::uint64_t seed) {
  if (block_assignment.size() != static_cast<std::size_t>(graph.num_nodes))
    throw std::invalid_argument(
        "gen_planted_features: block assignment length != num_nodes");
  int num_blocks = 0;
  for (int b : block_assignment) num_blocks = std::max(num_blocks, b + 1);
  if (feat_dim < num_blocks)
    throw std::invalid_argument(
        "gen_planted_features: feat_dim smaller than number of blocks");

  Rng rng(derive_stream(seed, {stream::kFeatures}));
  PlantedFeatures out;
  out.features = Matrix(graph.num_nodes, feat_dim);
  out.labels.resize(static_cast<std::size_t>(graph.num_nodes));
  for (std::int64_t v = 0; v < graph.num_nodes; ++v) {
    int block = block_assignment[static_cast<std::size_t>(v)];
    out.labels[static_cast<std::size_t>(v)] = block;
    for (std::int64_t d = 0; d < feat_dim; ++d)
      out.features(v, d) =
          (d == block ? 1.0 : 0.0) + noise_sigma * rng.normal();
  }
  return out;
}

std::vector<int> voronoi_blocks(const CsrGraph& graph, int k,
                                std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("voronoi_blocks: k < 1");
  auto n = static_cast<std::size_t>(graph.num_nodes);
  if (static_cast<std::int64_t>(k) > graph.num_nodes)
    throw std::invalid_argument("voronoi_blocks: more blocks than nodes");

  Rng rng(derive_stream(seed, {stream::kVoronoi}));
  std::vector<NodeId> ids(n);
  for (std::size_t v = 0; v < n; ++v) ids[v] = static_cast<NodeId>(v);
  for (int i = 0; i < k; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.uniform_int(n - i));
    std::swap(ids[i], ids[j]);
  }

  constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> best_dist(n, kUnreached);
  std::vector<int> block(n, -1);
  std::vector<std::int64_t> dist(n);
  for (int c = 0; c < k; ++c) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::deque<NodeId> queue;
    dist[static_cast<std::size_t>(ids[c])] = 0;
    queue.push_back(ids[c]);
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      for (NodeId w : graph.neighbors(u)) {
        if (dist[static_cast<std::size_t>(w)] == kUnreached) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(w);
        }
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] < best_dist[v]) {  // ties keep the lower center index
        best_dist[v] = dist[v];
        block[v] = c;
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (block[v] < 0) block[v] = static_cast<int>(v % static_cast<std::size_t>(k));
  return block;
}

std::vector<Split> assign_splits(std::int64_t num_nodes, double train_frac,
                                 double val_frac, std::uint64_t seed) {
  if (train_frac < 0.0 || val_frac < 0.0 || train_frac + val_frac > 1.0)
    throw std::invalid_argument("assign_splits: bad fractions");
  std::vector<NodeId> ids(static_cast<std::size_t>(num_nodes));
  for (std::int64_t v = 0; v < num_nodes; ++v)
    ids[static_cast<std::size_t>(v)] = v;
  Rng rng(derive_stream(seed, {stream::kSplits}));
  rng.shuffle(ids);

  auto n_train = static_cast<std::int64_t>(train_frac * static_cast<double>(num_nodes));
  auto n_val = static_cast<std::int64_t>(val_frac * static_cast<double>(num_nodes));
  std::vector<Split> splits(static_cast<std::size_t>(num_nodes), Split::test);
  for (std::int64_t i = 0; i < n_train; ++i)
    splits[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)])] = Split::train;
  for (std::int64_t i = n_train; i < n_train + n_val; ++i)
    splits[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)])] = Split::val;
  return splits;
}

void save_dataset(const DatasetBundle& bundle,
                  const std::filesystem::path& dir) {
  bundle.validate();
  std::filesystem::create_directories(dir);

  {
    auto out = create_or_fail(dir / "graph.edges");
    out << "# nodes=" << bundle.graph.num_nodes << " symmetrize=0\n";
    for (NodeId u = 0; u < bundle.graph.num_nodes; ++u)
      for (NodeId v : bundle.graph.neighbors(u)) out << u << "\t" << v << "\n";
  }
  {
    auto out = create_or_fail(dir / "features.csv");
    for (std::int64_t r = 0; r < bundle.features.rows(); ++r) {
      for (std::int64_t c = 0; c < bundle.features.cols(); ++c) {
        if (c) out << ",";
        out << format_double(bundle.features(r, c));
      }
      out << "\n";
    }
  }
  {
    auto out = create_or_fail(dir / "labels.csv");
    for (int label : bundle.labels) out << label << "\n";
  }
  {
    auto out = create_or_fail(dir / "splits.csv");
    for (Split s : bundle.splits) out << split_name(s) << "\n";
  }
}

namespace {

Matrix load_features(const std::filesystem::path& file) {
  auto in = open_or_fail(file);
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::size_t comma = line.find(',', pos);
      std::string cell = line.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        parse_fail(file, line_no, "malformed decimal \"" + cell + "\"");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size())
      parse_fail(file, line_no, "inconsistent column count");
    rows.push_back(std::move(row));
  }
  Matrix features(static_cast<std::int64_t>(rows.size()),
                  rows.empty() ? 0 : static_cast<std::int64_t>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      features(static_cast<std::int64_t>(r), static_cast<std::int64_t>(c)) =
          rows[r][c];
  return features;
}

}  // namespace

DatasetBundle load_dataset(const std::filesystem::path& dir) {
  DatasetBundle bundle;
  bundle.features = load_features(dir / "features.csv");
  std::int64_t num_nodes = bundle.features.rows();

  {
    auto file = dir / "labels.csv";
    auto in = open_or_fail(file);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      try {
        std::size_t used = 0;
        bundle.labels.push_back(std::stoi(line, &used));
        if (used != line.size()) throw std::invalid_argument(line);
      } catch (const std::exception&) {
        parse_fail(file, line_no, "malformed label \"" + line + "\"");
      }
    }
    if (static_cast<std::int64_t>(bundle.labels.size()) != num_nodes) {
      std::ostringstream msg;
      msg << file.string() << ": row count " << bundle.labels.size()
          << " does not match " << num_nodes << " feature rows";
      throw std::runtime_error(msg.str());
    }
  }
  {
    auto file = dir / "splits.csv";
    auto in = open_or_fail(file);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      try {
        bundle.splits.push_back(parse_split(line));
      } catch (const std::exception& e) {
        parse_fail(file, line_no, e.what());
      }
    }
    if (static_cast<std::int64_t>(bundle.splits.size()) != num_nodes) {
      std::ostringstream msg;
      msg << file.string() << ": row count " << bundle.splits.size()
          << " does not match " << num_nodes << " feature rows";
      throw std::runtime_error(msg.str());
    }
  }
  {
    auto file = dir / "graph.edges";
    auto in = open_or_fail(file);
    std::string line;
    std::size_t line_no = 0;
    bool symmetrize = true;  // undirected inputs symmetrized by default
    std::int64_t declared_nodes = -1;
    std::vector<std::pair<NodeId, NodeId>> edges;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      if (line[0] == '#') {
        std::istringstream header(line.substr(1));
        std::string token;
        while (header >> token) {
          if (token.rfind("nodes=", 0) == 0)
            declared_nodes = std::stoll(token.substr(6));
          else if (token.rfind("symmetrize=", 0) == 0)
            symmetrize = token.substr(11) != "0";
        }
        continue;
      }
      std::istringstream fields(line);
      NodeId u = 0, v = 0;
      if (!(fields >> u >> v))
        parse_fail(file, line_no, "malformed edge \"" + line + "\"");
      std::string trailing;
      if (fields >> trailing)
        parse_fail(file, line_no, "trailing content \"" + trailing + "\"");
      edges.emplace_back(u, v);
    }
    if (declared_nodes >= 0 && declared_nodes != num_nodes) {
      std::ostringstream msg;
      msg << file.string() << ": header nodes=" << declared_nodes
          << " does not match " << num_nodes << " feature rows";
      throw std::runtime_error(msg.str());
    }
    bundle.graph = build_csr(edges, num_nodes, symmetrize);
  }
  bundle.validate();
  return bundle;
}

RemappedEdges remap_ids(const std::vector<std::pair<NodeId, NodeId>>& edges) {
  RemappedEdges out;
  out.edges.reserve(edges.size());
  std::unordered_map<NodeId, NodeId> dense;
  auto lookup = [&](NodeId id) {
    auto [it, inserted] = dense.emplace(id, static_cast<NodeId>(out.original_ids.size()));
    if (inserted) out.original_ids.push_back(id);
    return it->second;
  };
  for (const auto& [u, v] : edges) out.edges.emplace_back(lookup(u), lookup(v));
  return out;
}

}  // namespace dafos
