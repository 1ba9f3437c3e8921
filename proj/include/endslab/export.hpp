#ifndef ENDSLAB_EXPORT_HPP_
#define ENDSLAB_EXPORT_HPP_

#include <ostream>
#include <string>

#include "json.hpp"

#include "ball.hpp"
#include "ends.hpp"

namespace endslab {

  using Json = nlohmann::ordered_json;

  // Undirected graph; edges carry label=<generator name>, the basepoint is
  // drawn as a double circle.
  void write_dot(std::ostream& os, GraphBall const& ball, std::string const& graph_name = "ball");
  std::string to_dot(GraphBall const& ball, std::string const& graph_name = "ball");

  // {vertices, dist, edges: [[u, v, gen]], basepoint, radius, generators, closed}
  Json ball_to_json(GraphBall const& ball);

  // {k_values, K, matrix, verdict, stabilized, budget, truncated, ...}
  Json profile_to_json(EndsProfile const& profile);

}  // namespace endslab

#endif  // ENDSLAB_EXPORT_HPP_
