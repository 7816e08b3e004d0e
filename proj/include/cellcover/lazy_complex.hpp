#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "cellcover/complex.hpp"

namespace cellcover {

/// Stable name of a cell in a generated complex. `base` and `coords` are
/// interpreted by the source only.
struct CellKey {
  CellKind kind = CellKind::vertex;
  std::size_t base = 0;
  std::vector<std::int64_t> coords;

  friend auto operator<=>(const CellKey&, const CellKey&) = default;
  friend bool operator==(const CellKey&, const CellKey&) = default;
};

struct KeyedLetter {
  CellKey edge;
  Sign sign = Sign::plus;
};

/// Pull-based generator of a locally finite complex. Every method must be
/// deterministic and return finite lists.
class CellSource {
 public:
  virtual ~CellSource() = default;

  virtual CellKey basepoint() const = 0;
  virtual std::pair<CellKey, CellKey> endpoints(const CellKey& edge) const = 0;
  virtual std::vector<KeyedLetter> boundary(const CellKey& face) const = 0;
  /// Edges with `vertex` as an endpoint, without repeats.
  virtual std::vector<CellKey> edges_at(const CellKey& vertex) const = 0;
  /// Faces whose boundary uses `edge`, without repeats.
  virtual std::vector<CellKey> faces_at(const CellKey& edge) const = 0;
  /// Unique per kind.
  virtual std::string label(const CellKey& cell) const = 0;
};

/// A memoizing view over a CellSource.
///
/// Cell ids are handed out in materialization order; materializing a cell
/// also materializes its closure (edge endpoints, boundary edges). All
/// methods are internally synchronized.
class LazyComplex {
 public:
  explicit LazyComplex(std::shared_ptr<const CellSource> source, BuildLimits limits = {});

  LazyComplex(const LazyComplex&) = delete;
  LazyComplex& operator=(const LazyComplex&) = delete;

  CellId basepoint();
  CellId materialize(const CellKey& key);

  /// Materializes and returns the star of `cell`, sorted.
  std::vector<CellId> star(CellId cell);
  std::vector<CellId> incident_edges(CellId vertex);
  std::pair<CellId, CellId> endpoints(CellId edge) const;
  /// Boundary as a word over materialized edge indices.
  Word boundary(CellId face) const;

  CellKey key(CellId cell) const;
  std::string label(CellId cell) const;
  std::size_t materialized(CellKind kind) const;
  std::size_t materialized_total() const;

  /// Materializes every cell reachable from the current ones. Returns false
  /// (leaving the partial materialization in place) once more than `budget`
  /// cells exist.
  bool exhaust(std::size_t budget);
  /// Like exhaust, restricted to the component of `vertex`.
  bool exhaust_component(CellId vertex, std::size_t budget);

  /// Finite complex of everything materialized so far; indices agree with
  /// the lazy ids and names with the source labels.
  CellComplex snapshot() const;

 private:
  struct Record {
    CellKey key;
    std::string label;
    std::pair<std::size_t, std::size_t> ends{};  // edges
    Word boundary;                                 // faces
    bool expanded = false;                         // star materialized
  };

  std::size_t materialize_locked(const CellKey& key);
  std::vector<CellId> star_locked(CellId cell);
  bool explore_locked(std::vector<CellId> frontier, std::size_t budget);
  const Record& record(CellId cell) const;
  std::size_t total_locked() const;

  std::shared_ptr<const CellSource> source_;
  BuildLimits limits_;
  mutable std::mutex mutex_;
  std::map<CellKey, std::size_t> index_;
  std::vector<Record> cells_[3];
};

/// Exposes a finite complex through the generator contract; keys are
/// {kind, index}.
std::shared_ptr<const CellSource> finite_source(CellComplex c);

/// Throws InfiniteComplex unless the complex is exhausted within `budget` cells.
long long euler_characteristic(LazyComplex& c, std::size_t budget);

/// Components of everything reachable from the materialized cells. Throws
/// MaterializationBudgetExceeded past `budget` cells.
ComponentPartition connected_components(LazyComplex& c, std::size_t budget);

/// Vertices within graph distance `radius` of `from`, in BFS order.
std::vector<CellId> vertex_ball(LazyComplex& c, CellId from, std::size_t radius);

}  // namespace cellcover
