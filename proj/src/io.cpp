#include "ctqw/io.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unistd.h>

#include "ctqw/error.hpp"

namespace ctqw {

namespace {

std::size_t as_index(const nlohmann::json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    fail(ErrorCode::ParseError, std::string(what) + " must be a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace

Graph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    fail(ErrorCode::ParseError, "graph JSON needs keys \"n\" and \"edges\"");
  const std::size_t n = as_index(doc["n"], "n");
  const std::size_t origin = doc.contains("origin") ? as_index(doc["origin"], "origin") : 0;
  if (!doc["edges"].is_array()) fail(ErrorCode::ParseError, "\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) fail(ErrorCode::ParseError, "each edge must be [i, j]");
    edges.emplace_back(as_index(e[0], "edge endpoint"), as_index(e[1], "edge endpoint"));
  }
  return build_graph(n, edges, origin);
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.vertex_count();
  doc["origin"] = g.origin();
  auto edges = nlohmann::json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  doc["edges"] = std::move(edges);
  return doc.dump();
}

Graph parse_adjacency_csv(std::string_view text, Vertex origin) {
  std::vector<Edge> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#' || line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    long long i = 0, j = 0;
    double w = 0.0;
    char extra = 0;
    if (std::sscanf(line.c_str(), " %lld , %lld , %lf %c", &i, &j, &w, &extra) != 3 || i < 0 || j < 0)
      fail(ErrorCode::ParseError, "adjacency CSV line " + std::to_string(line_no) + ": expected i,j,1");
    if (w != 1.0)
      fail(ErrorCode::ParseError, "adjacency CSV line " + std::to_string(line_no) + ": weights must be 1");
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return build_graph(edges, origin);
}

std::string adjacency_csv(const Graph& g) {
  std::string out;
  for (Vertex a = 0; a < g.vertex_count(); ++a)
    for (Vertex b : g.neighbors(a)) out += std::to_string(a) + "," + std::to_string(b) + ",1\n";
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph_file(const std::filesystem::path& path, Vertex csv_origin) {
  const auto text = read_text_file(path);
  if (path.extension() == ".csv") return parse_adjacency_csv(text, csv_origin);
  return parse_graph_json(text);
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::ParseError, "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) fail(ErrorCode::ParseError, "short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    fail(ErrorCode::ParseError, "cannot rename to " + path.string() + ": " + ec.message());
  }
}

std::string amplitudes_csv(const AmplitudeSeries& series) {
  std::string out = "t,k,re,im,prob\n";
  for (std::size_t ti = 0; ti < series.times.size(); ++ti)
    for (std::size_t k = 0; k <= series.kmax; ++k) {
      const auto q = series.at(ti, k);
      out += format_double(series.times[ti]) + "," + std::to_string(k) + "," +
             format_double(q.real()) + "," + format_double(q.imag()) + "," +
             format_double(std::norm(q)) + "\n";
    }
  return out;
}

std::string measure_csv(const SpectralMeasure& mu, std::span<const double> grid) {
  std::string out;
  auto atoms = [&](const DiscreteMeasure& d) {
    out += "node,weight\n";
    for (std::size_t l = 0; l < d.size(); ++l)
      out += format_double(d.nodes[l]) + "," + format_double(d.weights[l]) + "\n";
  };
  if (const auto* d = std::get_if<DiscreteMeasure>(&mu)) {
    atoms(*d);
    return out;
  }
  const auto& c = std::get<ContinuousMeasure>(mu);
  out += "x,density\n";
  for (double x : grid) out += format_double(x) + "," + format_double(c.density(x)) + "\n";
  if (c.atoms.size() > 0) {
    out += "\n";
    atoms(c.atoms);
  }
  return out;
}

}  // namespace ctqw
