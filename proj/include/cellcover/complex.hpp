#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cellcover/word.hpp"

namespace cellcover {

enum class CellKind : std::uint8_t { vertex = 0, edge = 1, face = 2 };

std::string_view to_string(CellKind kind);

struct CellId {
  CellKind kind = CellKind::vertex;
  std::size_t index = 0;

  friend constexpr auto operator<=>(const CellId&, const CellId&) = default;
};

constexpr CellId vertex_id(std::size_t i) noexcept { return {CellKind::vertex, i}; }
constexpr CellId edge_id(std::size_t i) noexcept { return {CellKind::edge, i}; }
constexpr CellId face_id(std::size_t i) noexcept { return {CellKind::face, i}; }

struct Vertex {
  std::string name;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A 2-cell; letters of `boundary` index edges of the owning complex.
struct Face {
  std::string name;
  Word boundary;
  friend bool operator==(const Face&, const Face&) = default;
};

struct Chart {
  std::string name;
  std::vector<CellId> cells;
  friend bool operator==(const Chart&, const Chart&) = default;
};

/// Caps on incidence counts; exceeding one is a local finiteness violation.
struct BuildLimits {
  std::size_t max_edges_per_vertex = std::size_t{1} << 20;
  std::size_t max_faces_per_edge = std::size_t{1} << 20;
};

/// Name-based description of a complex, as produced by the CXC parser.
///
/// Every declaration carries the source line it came from (0 when built in
/// code) so validation errors can point back at the input.
struct ComplexSpec {
  struct VertexDecl {
    std::string name;
    std::size_t line = 0;
  };
  struct EdgeDecl {
    std::string name, source, target;
    std::size_t line = 0;
  };
  struct FaceDecl {
    std::string name;
    std::vector<std::pair<std::string, Sign>> boundary;
    std::size_t line = 0;
  };
  struct ChartDecl {
    std::string name;
    std::vector<std::string> cells;
    std::size_t line = 0;
  };

  std::vector<VertexDecl> vertices;
  std::vector<EdgeDecl> edges;
  std::vector<FaceDecl> faces;
  std::vector<ChartDecl> charts;
  std::optional<std::string> basepoint;
  std::size_t basepoint_line = 0;

  ComplexSpec& vertex(std::string name);
  ComplexSpec& edge(std::string name, std::string source, std::string target);
  /// `boundary` is a word in edge names, e.g. "a b -a -b".
  ComplexSpec& face(std::string name, std::string_view boundary);
  ComplexSpec& chart(std::string name, std::vector<std::string> cells);
  ComplexSpec& base(std::string vertex);
};

/// An immutable, finite 2-dimensional cell complex.
///
/// Face boundaries are closed edge walks stored from their canonical corner:
/// the lowest-indexed vertex on the boundary, ties broken by the lowest
/// outgoing edge index, then `+` before `-`, then the least rotation.
class CellComplex {
 public:
  CellComplex() = default;

  /// Validates index-based cell data and canonicalizes face boundaries.
  static CellComplex from_cells(std::vector<Vertex> vertices, std::vector<Edge> edges,
                                std::vector<Face> faces, std::vector<Chart> charts = {},
                                std::optional<std::size_t> basepoint = std::nullopt,
                                const BuildLimits& limits = {});

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t face_count() const noexcept { return faces_.size(); }
  std::size_t cell_count(CellKind kind) const noexcept;

  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  const Face& face(std::size_t i) const { return faces_.at(i); }
  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Face> faces() const noexcept { return faces_; }
  std::span<const Chart> charts() const noexcept { return charts_; }

  std::optional<std::size_t> basepoint() const noexcept { return basepoint_; }
  CellComplex with_basepoint(std::size_t vertex) const;

  /// Edges with `vertex` as an endpoint, ascending, each listed once.
  std::span<const std::size_t> incident_edges(std::size_t vertex) const;
  /// Faces whose boundary uses `edge`, ascending, each listed once.
  std::span<const std::size_t> incident_faces(std::size_t edge) const;

  bool contains(CellId id) const noexcept;
  const std::string& name(CellId id) const;
  std::optional<CellId> find(CellKind kind, std::string_view name) const;
  std::vector<std::string> edge_names() const;

  /// Start vertex of a letter over this complex's edges.
  std::size_t tail(const Letter& l) const;
  /// End vertex of a letter over this complex's edges.
  std::size_t head(const Letter& l) const;

  friend bool operator==(const CellComplex& a, const CellComplex& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && a.faces_ == b.faces_ &&
           a.charts_ == b.charts_ && a.basepoint_ == b.basepoint_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::vector<Chart> charts_;
  std::optional<std::size_t> basepoint_;
  std::vector<std::vector<std::size_t>> vertex_edges_;
  std::vector<std::vector<std::size_t>> edge_faces_;
};

CellComplex build_complex(const ComplexSpec& spec, const BuildLimits& limits = {});

long long euler_characteristic(const CellComplex& c);

struct ComponentPartition {
  std::size_t count = 0;
  std::vector<std::size_t> vertex;
  std::vector<std::size_t> edge;
  std::vector<std::size_t> face;

  std::size_t of(CellId id) const;
  friend bool operator==(const ComponentPartition&, const ComponentPartition&) = default;
};

/// Components numbered in order of their lowest vertex.
ComponentPartition connected_components(const CellComplex& c);

/// `cell` together with every cell whose closure contains it, sorted.
std::vector<CellId> star(const CellComplex& c, CellId cell);

/// Disjoint union; names of `b` that clash with `a` get a `_2` suffix.
CellComplex disjoint_union(const CellComplex& a, const CellComplex& b);

}  // namespace cellcover
