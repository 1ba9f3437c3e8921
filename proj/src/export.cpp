#include "endslab/export.hpp"

#include <sstream>

namespace endslab {

  namespace {
    std::string dot_escape(std::string const& s) {
      std::string out;
      out.reserve(s.size());
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out;
    }
  }  // namespace

  void write_dot(std::ostream& os, GraphBall const& ball, std::string const& graph_name) {
    os << "graph \"" << dot_escape(graph_name) << "\" {\n";
    for (std::size_t v = 0; v < ball.size(); ++v) {
      os << "  " << v << " [label=\"" << dot_escape(ball.vertices[v].to_string()) << '"';
      if (v == ball.basepoint_index) {
        os << ", shape=doublecircle";
      }
      os << "];\n";
    }
    for (auto const& e : ball.edges) {
      os << "  " << e.u << " -- " << e.v << " [label=\""
         << dot_escape(ball.gens->name(e.gen)) << "\"];\n";
    }
    os << "}\n";
  }

  std::string to_dot(GraphBall const& ball, std::string const& graph_name) {
    std::ostringstream os;
    write_dot(os, ball, graph_name);
    return os.str();
  }

  Json ball_to_json(GraphBall const& ball) {
    Json j;
    Json vertices = Json::array();
    for (auto const& p : ball.vertices) {
      vertices.push_back(p.to_string());
    }
    Json edges = Json::array();
    for (auto const& e : ball.edges) {
      edges.push_back({e.u, e.v, e.gen});
    }
    j["vertices"]   = std::move(vertices);
    j["dist"]       = ball.dist;
    j["edges"]      = std::move(edges);
    j["basepoint"]  = ball.basepoint_index;
    j["radius"]     = ball.radius;
    j["generators"] = ball.gens->names();
    j["closed"]     = ball.closed;
    return j;
  }

  Json profile_to_json(EndsProfile const& p) {
    Json j;
    j["k_values"]      = p.k_values;
    j["K"]             = p.K;
    j["matrix"]        = p.matrix;
    j["verdict"]       = p.verdict.to_string();
    j["stabilized"]    = p.stabilized;
    j["budget"]        = p.budget;
    j["truncated"]     = p.truncated;
    j["ball_vertices"] = p.ball_vertices;
    j["diagnostics"]   = p.diagnostics;
    return j;
  }

}  // namespace endslab
