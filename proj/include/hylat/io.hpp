#ifndef HYLAT_IO_HPP
#define HYLAT_IO_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hylat/types.hpp"

// File formats.
//
// Edge list: one "u v" pair of 0-based node ids per line, whitespace
// separated; '#' starts a comment; either orientation accepted and
// deduplicated. The writer emits a "# nodes: n" header so isolated trailing
// nodes round-trip; readers may also override the node count.
//
// Embedding: CSV with header "node,k,coord_1,...,coord_m" where m = d+1
// (hyperbolic) or d (Euclidean, written with k = 0). Values carry 17
// significant digits so write-then-read is exact.
//
// Report: "key: value" lines, lists in brackets; '#' comments.

namespace hylat {

void write_edge_list(const std::string& path, const Network& net);

/// Reads an edge list; node count is max(max id + 1, header, n_override).
/// Malformed lines raise DataError with the line number.
Network read_edge_list(const std::string& path,
                       std::optional<int> n_override = std::nullopt);

void write_embedding(const std::string& path, const LatentEmbedding& emb);
LatentEmbedding read_embedding(const std::string& path);

using ReportValue = std::variant<double, std::string, std::vector<double>>;

/// Ordered key-value record serialized as the report format.
struct Report {
  std::vector<std::pair<std::string, ReportValue>> entries;

  void set(const std::string& key, ReportValue value);
  const ReportValue* find(const std::string& key) const;
  double number(const std::string& key) const;
  const std::string& text(const std::string& key) const;
  const std::vector<double>& list(const std::string& key) const;
};

void write_report(const std::string& path, const Report& report);
Report read_report(const std::string& path);

/// Shortest decimal form that round-trips a double (17 significant digits).
std::string format_double(double v);

}  // namespace hylat

#endif  // HYLAT_IO_HPP
