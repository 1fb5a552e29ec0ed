#include "netforecast/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include <json.hpp>

namespace netforecast {

namespace {

constexpr std::int64_t kSecondsPerDay = 86400;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Days since 1970-01-01 for a civil date (Howard Hinnant's algorithm).
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const auto yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

// Civil date from days since the epoch; returns {year, month, day}.
std::tuple<std::int64_t, unsigned, unsigned> civil_from_days(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const auto doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp + (mp < 10 ? 3 : -9);
  return {y + (m <= 2), m, d};
}

bool parse_int64(const std::string& s, std::int64_t& out) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoll(s, &pos);
  } catch (...) {
    return false;
  }
  return pos == s.size();
}

std::int64_t window_key(std::int64_t t, WindowSpec::Mode mode) {
  const std::int64_t day = floor_div(t, kSecondsPerDay);
  if (mode == WindowSpec::Mode::day) return day;
  const auto [y, m, d] = civil_from_days(day);
  (void)d;
  return y * 12 + static_cast<std::int64_t>(m) - 1;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

std::int64_t parse_timestamp(const std::string& token) {
  std::int64_t epoch = 0;
  if (parse_int64(token, epoch)) return epoch;

  // ISO-8601: YYYY-MM-DD, optionally Thh:mm:ss with a trailing Z.
  int y = 0, mo = 0, d = 0, hh = 0, mm = 0, ss = 0;
  char sep = 0, z = 0;
  int fields = std::sscanf(token.c_str(), "%d-%d-%d%c%d:%d:%d%c", &y, &mo, &d,
                           &sep, &hh, &mm, &ss, &z);
  const bool date_only = fields == 3;
  const bool with_time =
      (fields == 7 || (fields == 8 && z == 'Z')) && (sep == 'T' || sep == ' ');
  if (!date_only && !with_time) {
    throw std::invalid_argument("unparseable timestamp '" + token + "'");
  }
  if (mo < 1 || mo > 12 || d < 1 || d > 31 || hh < 0 || hh > 23 || mm < 0 ||
      mm > 59 || ss < 0 || ss > 60) {
    throw std::invalid_argument("timestamp '" + token + "' is out of range");
  }
  return days_from_civil(y, static_cast<unsigned>(mo),
                         static_cast<unsigned>(d)) *
             kSecondsPerDay +
         hh * 3600 + mm * 60 + ss;
}

std::vector<EdgeEvent> parse_edge_list(std::istream& in,
                                       const std::string& source_name) {
  std::vector<EdgeEvent> events;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string u, v, t_token, extra;
    if (!(ls >> u)) continue;  // blank or comment-only line
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument(source_name + ":" + std::to_string(line_no) +
                                  ": " + why);
    };
    if (!(ls >> v >> t_token)) fail("expected 'u v t'");
    if (ls >> extra) fail("trailing content after 'u v t'");
    if (u == v) fail("self-loop event '" + u + " " + v + "'");
    EdgeEvent ev;
    ev.u = std::move(u);
    ev.v = std::move(v);
    try {
      ev.t = parse_timestamp(t_token);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    events.push_back(std::move(ev));
  }
  if (events.empty()) {
    throw std::invalid_argument(source_name + ": no edge events found");
  }
  return events;
}

std::vector<EdgeEvent> load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_edge_list(in, path);
}

IngestResult ingest_events(std::vector<EdgeEvent> events,
                           const WindowSpec& window) {
  if (window.mode == WindowSpec::Mode::fixed_count && window.count < 1) {
    throw std::invalid_argument("fixed_count window needs count >= 1");
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const EdgeEvent& a, const EdgeEvent& b) {
                     return a.t < b.t;
                   });

  IngestResult result;
  std::unordered_map<std::string, int> index;
  auto intern = [&](const std::string& id) {
    auto [it, inserted] =
        index.emplace(id, static_cast<int>(result.ids.size()) + 1);
    if (inserted) result.ids.push_back(id);
    return it->second;
  };

  // Group events into windows.
  std::vector<std::pair<std::int64_t, std::vector<const EdgeEvent*>>> windows;
  if (window.mode == WindowSpec::Mode::fixed_count) {
    for (std::size_t i = 0; i < events.size(); ++i) {
      const auto key = static_cast<std::int64_t>(i) / window.count;
      if (windows.empty() || windows.back().first != key) {
        windows.emplace_back(key, std::vector<const EdgeEvent*>{});
      }
      windows.back().second.push_back(&events[i]);
    }
  } else {
    for (const EdgeEvent& ev : events) {
      const std::int64_t key = window_key(ev.t, window.mode);
      if (windows.empty() || windows.back().first != key) {
        windows.emplace_back(key, std::vector<const EdgeEvent*>{});
      }
      windows.back().second.push_back(&ev);
    }
    if (window.keep_empty) {
      std::vector<std::pair<std::int64_t, std::vector<const EdgeEvent*>>>
          filled;
      for (std::size_t i = 0; i < windows.size(); ++i) {
        filled.push_back(std::move(windows[i]));
        if (i + 1 < windows.size()) {
          for (std::int64_t key = filled.back().first + 1;
               key < windows[i + 1].first; ++key) {
            filled.emplace_back(key, std::vector<const EdgeEvent*>{});
          }
        }
      }
      windows = std::move(filled);
    }
  }

  for (const auto& [key, bucket] : windows) {
    std::set<Edge> edges;
    for (const EdgeEvent* ev : bucket) {
      const int u = intern(ev->u);  // sequenced: u interns before v
      const int v = intern(ev->v);
      edges.insert(make_edge(u, v));
    }
    result.series.push_back(
        Graph(static_cast<int>(result.ids.size()), std::move(edges)));
  }
  return result;
}

IngestResult ingest(const std::string& path, const WindowSpec& window) {
  return ingest_events(load_edge_list(path), window);
}

void write_edge_list(const GraphSeries& series, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  for (int t = 1; t <= series.length(); ++t) {
    const std::int64_t stamp = static_cast<std::int64_t>(t - 1) * kSecondsPerDay;
    for (const auto& [i, j] : series.at(t).edges()) {
      out << i << ' ' << j << ' ' << stamp << '\n';
    }
  }
}

std::string graph_to_json(const Graph& g, const std::vector<std::string>* ids) {
  nlohmann::json doc;
  doc["format_version"] = 1;
  doc["n"] = g.n_nodes();
  auto edges = nlohmann::json::array();
  for (const auto& [i, j] : g.edges()) {
    edges.push_back(nlohmann::json::array({i, j}));
  }
  doc["edges"] = std::move(edges);
  if (ids != nullptr) {
    auto names = nlohmann::json::array();
    for (int node = 1; node <= g.n_nodes(); ++node) {
      if (static_cast<std::size_t>(node) <= ids->size()) {
        names.push_back((*ids)[static_cast<std::size_t>(node) - 1]);
      } else {
        names.push_back("new_" +
                        std::to_string(node - static_cast<int>(ids->size())));
      }
    }
    doc["ids"] = std::move(names);
  }
  return doc.dump(2) + "\n";
}

void emit_graph(const Graph& g, const std::vector<std::string>* ids,
                const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << graph_to_json(g, ids);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  nlohmann::json doc = nlohmann::json::parse(in);
  Graph g(doc.at("n").get<int>());
  for (const auto& pair : doc.at("edges")) {
    g.add_edge(pair.at(0).get<int>(), pair.at(1).get<int>());
  }
  return g;
}

std::string bounds_report_to_json(const BoundsReport& rep) {
  nlohmann::json doc;
  doc["format_version"] = 1;
  doc["c3"] = rep.c3;
  doc["m"] = rep.m_ones;
  doc["upper"] = rep.upper.str();
  doc["k_star"] = rep.k_star;
  doc["eta"] = rep.eta;
  auto g = nlohmann::json::array();
  for (const BigInt& gi : rep.g) g.push_back(gi.str());
  doc["g"] = std::move(g);
  doc["lower"] = rep.lower.str();
  doc["special_case"] = to_string(rep.special_case);
  return doc.dump(2) + "\n";
}

void write_metrics_csv(const std::vector<MetricRow>& rows,
                       const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << "scheme,T,h,seed,node_err,edge_err,dens_err,jaccard\n";
  for (const MetricRow& r : rows) {
    out << r.scheme << ',' << r.T << ',' << r.h << ',' << r.seed << ','
        << format_double(r.node_err) << ',' << format_double(r.edge_err)
        << ',' << format_double(r.dens_err) << ',' << format_double(r.jaccard)
        << '\n';
  }
}

void write_aggregates_csv(const std::vector<AggregateRow>& rows,
                          const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << "scheme,h,cells,node_err_mean,node_err_sd,edge_err_mean,edge_err_sd,"
         "dens_err_mean,dens_err_sd,jaccard_mean,jaccard_sd\n";
  for (const AggregateRow& r : rows) {
    out << r.scheme << ',' << r.h << ',' << r.cells << ','
        << format_double(r.node_mean) << ',' << format_double(r.node_sd) << ','
        << format_double(r.edge_mean) << ',' << format_double(r.edge_sd) << ','
        << format_double(r.dens_mean) << ',' << format_double(r.dens_sd) << ','
        << format_double(r.jaccard_mean) << ',' << format_double(r.jaccard_sd)
        << '\n';
  }
}

}  // namespace netforecast
