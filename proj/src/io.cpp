#include "hylat/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace hylat {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_node_id(const std::string& tok, const std::string& path, int line) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw DataError(path + ":" + std::to_string(line) +
                    ": non-integer node id '" + tok + "'");
  }
  if (v < 0) {
    throw DataError(path + ":" + std::to_string(line) + ": negative node id");
  }
  return v;
}

double parse_double(const std::string& tok, const std::string& path, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw DataError(path + ":" + std::to_string(line) + ": bad number '" +
                    tok + "'");
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open '" + path + "' for writing");
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "' for reading");
  return in;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_edge_list(const std::string& path, const Network& net) {
  auto out = open_out(path);
  const int n = net.n();
  out << "# nodes: " << n << "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (net.adjacency(i, j) != 0.0) out << i << " " << j << "\n";
    }
  }
  if (!out) throw DataError("failed writing '" + path + "'");
}

Network read_edge_list(const std::string& path, std::optional<int> n_override) {
  auto in = open_in(path);
  std::set<std::pair<int, int>> edges;
  int max_id = -1;
  int header_n = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      const std::string comment = trim(line.substr(hash + 1));
      if (comment.rfind("nodes:", 0) == 0) {
        header_n = std::max(header_n,
                            parse_node_id(trim(comment.substr(6)), path, lineno));
      }
      line = line.substr(0, hash);
    }
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() != 2) {
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": expected two node ids, got " +
                      std::to_string(toks.size()) + " tokens");
    }
    int u = parse_node_id(toks[0], path, lineno);
    int v = parse_node_id(toks[1], path, lineno);
    if (u == v) {
      throw DataError(path + ":" + std::to_string(lineno) + ": self-loop at node " +
                      std::to_string(u));
    }
    if (u > v) std::swap(u, v);
    edges.emplace(u, v);
    max_id = std::max(max_id, v);
  }
  int n = std::max(max_id + 1, header_n);
  if (n_override) n = std::max(n, *n_override);
  if (n < 1) throw DataError(path + ": empty edge list and no node count");
  Network net;
  net.adjacency = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : edges) {
    net.adjacency(u, v) = 1.0;
    net.adjacency(v, u) = 1.0;
  }
  return net;
}

void write_embedding(const std::string& path, const LatentEmbedding& emb) {
  auto out = open_out(path);
  const int cols = static_cast<int>(emb.positions.cols());
  out << "node,k";
  for (int c = 1; c <= cols; ++c) out << ",coord_" << c;
  out << "\n";
  const double k = emb.geometry == Geometry::hyperbolic ? emb.curvature : 0.0;
  for (int i = 0; i < emb.n(); ++i) {
    out << i << "," << format_double(k);
    for (int c = 0; c < cols; ++c) {
      out << "," << format_double(emb.positions(i, c));
    }
    out << "\n";
  }
  if (!out) throw DataError("failed writing '" + path + "'");
}

LatentEmbedding read_embedding(const std::string& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) throw DataError(path + ": empty embedding file");
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) header.push_back(trim(tok));
  }
  if (header.size() < 3 || header[0] != "node" || header[1] != "k") {
    throw DataError(path + ":1: expected header 'node,k,coord_1,...'");
  }
  const int cols = static_cast<int>(header.size()) - 2;
  std::vector<std::vector<double>> rows;
  double k = 0.0;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<std::string> toks;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) toks.push_back(trim(tok));
    if (static_cast<int>(toks.size()) != cols + 2) {
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": expected " + std::to_string(cols + 2) + " fields");
    }
    const int node = parse_node_id(toks[0], path, lineno);
    if (node != static_cast<int>(rows.size())) {
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": node ids must be consecutive from 0");
    }
    const double row_k = parse_double(toks[1], path, lineno);
    if (rows.empty()) {
      k = row_k;
    } else if (row_k != k) {
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": inconsistent curvature column");
    }
    std::vector<double> coords(cols);
    for (int c = 0; c < cols; ++c) {
      coords[c] = parse_double(toks[2 + c], path, lineno);
    }
    rows.push_back(std::move(coords));
  }
  if (rows.empty()) throw DataError(path + ": no embedding rows");
  LatentEmbedding emb;
  emb.geometry = k > 0.0 ? Geometry::hyperbolic : Geometry::euclidean;
  emb.curvature = k;
  emb.positions.resize(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int c = 0; c < cols; ++c) emb.positions(i, c) = rows[i][c];
  }
  return emb;
}

void Report::set(const std::string& key, ReportValue value) {
  for (auto& [k, v] : entries) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries.emplace_back(key, std::move(value));
}

const ReportValue* Report::find(const std::string& key) const {
  for (const auto& [k, v] : entries) {
    if (k == key) return &v;
  }
  return nullptr;
}

double Report::number(const std::string& key) const {
  const ReportValue* v = find(key);
  if (!v || !std::holds_alternative<double>(*v)) {
    throw DataError("report: missing numeric key '" + key + "'");
  }
  return std::get<double>(*v);
}

const std::string& Report::text(const std::string& key) const {
  const ReportValue* v = find(key);
  if (!v || !std::holds_alternative<std::string>(*v)) {
    throw DataError("report: missing text key '" + key + "'");
  }
  return std::get<std::string>(*v);
}

const std::vector<double>& Report::list(const std::string& key) const {
  const ReportValue* v = find(key);
  if (!v || !std::holds_alternative<std::vector<double>>(*v)) {
    throw DataError("report: missing list key '" + key + "'");
  }
  return std::get<std::vector<double>>(*v);
}

void write_report(const std::string& path, const Report& report) {
  auto out = open_out(path);
  for (const auto& [key, value] : report.entries) {
    out << key << ": ";
    if (std::holds_alternative<double>(value)) {
      out << format_double(std::get<double>(value));
    } else if (std::holds_alternative<std::string>(value)) {
      out << std::get<std::string>(value);
    } else {
      const auto& list = std::get<std::vector<double>>(value);
      out << "[";
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) out << ", ";
        out << format_double(list[i]);
      }
      out << "]";
    }
    out << "\n";
  }
  if (!out) throw DataError("failed writing '" + path + "'");
}

Report read_report(const std::string& path) {
  auto in = open_in(path);
  Report rep;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw DataError(path + ":" + std::to_string(lineno) + ": expected 'key: value'");
    }
    const std::string key = trim(line.substr(0, colon));
    const std::string raw = trim(line.substr(colon + 1));
    if (!raw.empty() && raw.front() == '[') {
      if (raw.back() != ']') {
        throw DataError(path + ":" + std::to_string(lineno) + ": unterminated list");
      }
      std::vector<double> list;
      std::stringstream ss(raw.substr(1, raw.size() - 2));
      std::string item;
      while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) list.push_back(parse_double(item, path, lineno));
      }
      rep.set(key, std::move(list));
    } else {
      try {
        std::size_t used = 0;
        const double v = std::stod(raw, &used);
        if (used == raw.size()) {
          rep.set(key, v);
          continue;
        }
      } catch (const std::exception&) {
      }
      rep.set(key, raw);
    }
  }
  return rep;
}

}  // namespace hylat
