#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "netforecast/bounds.hpp"
#include "netforecast/evaluation.hpp"
#include "netforecast/graph.hpp"

namespace netforecast {

// One "u v t" observation. External ids are opaque strings; t is either
// integer epoch seconds or an ISO-8601 date (YYYY-MM-DD, optionally with
// Thh:mm:ss), interpreted in UTC.
struct EdgeEvent {
  std::string u;
  std::string v;
  std::int64_t t = 0;
};

struct WindowSpec {
  enum class Mode { day, month, fixed_count } mode = Mode::day;
  int count = 1;           // events per window in fixed_count mode
  bool keep_empty = false; // emit edgeless graphs for gap windows (day/month)
};

struct IngestResult {
  GraphSeries series;
  std::vector<std::string> ids;  // ids[i-1] is the external id of node i
};

// Whitespace-separated "u v t" lines; '#' starts a comment; blank lines are
// skipped. Malformed lines raise with their line number.
std::vector<EdgeEvent> parse_edge_list(std::istream& in,
                                       const std::string& source_name);
std::vector<EdgeEvent> load_edge_list(const std::string& path);

// Windows events chronologically, maps external ids to dense 1-based
// indices in first-appearance order, collapses duplicate pairs per window.
// A node exists from its first event onward, so node counts never shrink.
IngestResult ingest(const std::string& path, const WindowSpec& window);
IngestResult ingest_events(std::vector<EdgeEvent> events,
                           const WindowSpec& window);

// Epoch seconds from "<integer>" or ISO-8601; throws on anything else.
std::int64_t parse_timestamp(const std::string& token);

// Snapshot observations: every edge of every snapshot as "u v t" with one
// day per time step, so day-windowed ingestion reproduces the series.
void write_edge_list(const GraphSeries& series, const std::string& path);

// Graph JSON: {"format_version": 1, "n": ..., "edges": [[i, j], ...]} with
// sorted 1-based pairs, plus "ids" when an id map is supplied (new nodes
// beyond the map get synthesized "new_<k>" ids). load_graph is the inverse.
std::string graph_to_json(const Graph& g, const std::vector<std::string>* ids);
void emit_graph(const Graph& g, const std::vector<std::string>* ids,
                const std::string& path);
Graph load_graph(const std::string& path);

std::string bounds_report_to_json(const BoundsReport& rep);

// CSV schemas (stable, documented): per-run rows are
// scheme,T,h,seed,node_err,edge_err,dens_err,jaccard and aggregates are
// scheme,h,cells,<metric>_mean,<metric>_sd triples in the same order.
void write_metrics_csv(const std::vector<MetricRow>& rows,
                       const std::string& path);
void write_aggregates_csv(const std::vector<AggregateRow>& rows,
                          const std::string& path);

}  // namespace netforecast
