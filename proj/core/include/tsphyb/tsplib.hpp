#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tsphyb/errors.hpp"

namespace tsphyb {

/// Edge-weight functions understood by the reader. Integer distances follow
/// the TSPLIB95 reference arithmetic so published optima compare exactly.
enum class Metric { euc_2d, ceil_2d, geo, att };

std::string_view to_string(Metric m);

struct Coord {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Coord&, const Coord&) = default;
};

/// Raised for malformed TSPLIB documents. `line()` is 1-based, 0 when the
/// problem is not tied to a particular line (e.g. a missing section).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnsupportedMetricError : public std::runtime_error {
 public:
  explicit UnsupportedMetricError(const std::string& type);
};

/// Dense symmetric integer distance matrix, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), w_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const noexcept {
    return w_[i * n_ + j];
  }
  std::int64_t& at(std::size_t i, std::size_t j) noexcept { return w_[i * n_ + j]; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> w_;
};

using NeighborLists = std::vector<std::vector<int>>;

/// A parsed problem: coordinates, metric, the full distance matrix and, for
/// every city, all other cities ordered by increasing distance.
///
/// Immutable once constructed; share it freely between concurrent runs.
class Instance {
 public:
  Instance(std::string name, Metric metric, std::vector<Coord> coords);

  const std::string& name() const noexcept { return name_; }
  Metric metric() const noexcept { return metric_; }
  std::size_t size() const noexcept { return coords_.size(); }
  std::span<const Coord> coords() const noexcept { return coords_; }
  const Coord& coord(int city) const { return coords_[static_cast<std::size_t>(city)]; }

  std::int64_t dist(int a, int b) const noexcept {
    return dist_(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }
  const DistanceMatrix& distances() const noexcept { return dist_; }
  std::span<const int> neighbors(int city) const {
    return neighbors_[static_cast<std::size_t>(city)];
  }

  /// True when coordinates are planar, i.e. segment crossings are meaningful.
  bool planar() const noexcept { return metric_ != Metric::geo; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::string name_;
  Metric metric_;
  std::vector<Coord> coords_;
  DistanceMatrix dist_;
  NeighborLists neighbors_;
};

/// TSPLIB95 integer edge weight between two points.
std::int64_t edge_weight(const Coord& a, const Coord& b, Metric metric);

/// For each i, all j != i sorted by (dist(i,j), j).
NeighborLists build_neighbors(const DistanceMatrix& dist);

Instance parse_instance(std::string_view text);
Instance load_instance(const std::filesystem::path& path);

/// Canonical NODE_COORD_SECTION document; parse_instance(to_tsplib(x)) == x.
std::string to_tsplib(const Instance& inst);

/// Reads a TOUR_SECTION (.opt.tour) document; returns 0-based city indices.
std::vector<int> parse_tour(std::string_view text);
std::vector<int> load_tour(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace tsphyb
