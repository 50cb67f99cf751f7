#pragma once

// Puzzle pieces cut out by a forward invariant graph of internal rays, dynamic
// rays and an equipotential, truncated to a bounded box so every piece is a
// polygon. Depth-0 pieces are faces of a planar arrangement; deeper pieces are
// lifts of shallower ones along f.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cosdyn/basins.hpp"
#include "cosdyn/ellipse.hpp"
#include "cosdyn/rays.hpp"

namespace cosdyn {

enum class ArcTag { internal_ray = 0, dynamic_ray = 1, equipotential = 2, ellipse = 3 };
std::string to_string(ArcTag t);

struct Arc {
  ArcTag tag;
  int source;  // index of the generating curve within its tag
  Polyline points;
  bool closed = false;
};

struct GraphOptions {
  int ray_samples = 120;
  double max_segment = 1e-2;
  double ray_t_max = 0.0;  // 0: derived from the ellipse
};

struct PuzzleGraph {
  double theta;  // internal angle
  Address address;
  double level;  // equipotential |phi|
  int period;    // of the ray pair
  std::vector<Complex> landing_points;  // f^j(z0)
  std::vector<Arc> arcs;
};

// Joins the internal ray of angle theta with the dynamic ray g_s at their
// common landing point and adds the forward images, plus the basin's
// equipotential and its images. Throws CertificationError on a landing
// mismatch or a period mismatch between theta and s.
PuzzleGraph build_graph(const CosineMap& m, const BasinChart& chart, double theta, const Address& s, double level,
                        const Ellipse& ellipse, const GraphOptions& opts = {});

struct PuzzlePiece {
  int id = -1;
  int depth = 0;
  int parent = -1;  // piece of depth - 1 containing this one
  int image = -1;   // piece of depth - 1 that f maps this one onto
  int degree = 1;
  Polyline polygon;
  std::vector<ArcTag> tags;  // per vertex, tag of the boundary arc it lies on
  std::vector<int> sources;
  std::vector<long> critical;  // k with u_k inside
  Complex interior;
  double diameter = 0.0;
};

enum class LocateStatus { inside, graph_collision, outside };

struct Location {
  LocateStatus status = LocateStatus::outside;
  int id = -1;
};

struct PuzzleOptions {
  double max_segment = 1e-2;
  double min_segment = 1e-3;
  int julia_grid = 40;     // samples per side when testing a face for Julia points
  int julia_iter = 200;
  double collision_tol = 1e-9;
};

// Refinement error: a lift that fails to close.
class RefinementError : public CertificationError {
 public:
  RefinementError(const std::string& what, Complex where) : CertificationError(what), where_(where) {}
  Complex where() const { return where_; }

 private:
  Complex where_;
};

class Puzzle {
 public:
  // attractors: charts of every attracting cycle, used by the Julia proxy
  Puzzle(const CosineMap& m, const PuzzleGraph& graph, const Ellipse& ellipse, const TruncationBox& box,
         std::vector<BasinChart> attractors, const PuzzleOptions& opts = {});

  const CosineMap& map() const { return m_; }
  const Ellipse& ellipse() const { return ellipse_; }
  const TruncationBox& box() const { return box_; }

  int max_depth() const { return static_cast<int>(pieces_.size()) - 1; }
  const std::vector<PuzzlePiece>& pieces(int depth) const { return pieces_.at(static_cast<std::size_t>(depth)); }
  const PuzzlePiece& piece(int depth, int id) const { return pieces_.at(static_cast<std::size_t>(depth)).at(static_cast<std::size_t>(id)); }

  // Children of a piece at depth + 1 (lifts of it that stay in the box and
  // nest in a parent), computed once.
  const std::vector<int>& refine(int depth, int id);

  // All pieces down to the given depth.
  void build_to_depth(int depth);

  Location locate(int depth, Complex z);

  bool julia_adjacent(Complex z) const;

 private:
  std::vector<PuzzlePiece> lift(const PuzzlePiece& q) const;
  int add_piece(PuzzlePiece p);
  void fill_critical(PuzzlePiece& p) const;
  Location locate_among(int depth, const std::vector<int>& ids, Complex z) const;

  CosineMap m_;
  Ellipse ellipse_;
  TruncationBox box_;
  std::vector<BasinChart> attractors_;
  PuzzleOptions opts_;
  std::vector<std::vector<PuzzlePiece>> pieces_;
  std::vector<std::map<int, std::vector<int>>> children_;
};

inline constexpr int kUnlocated = -1;
inline constexpr int kCollision = -2;

struct Tableau {
  Complex z;
  int depth = 0;  // rows 0..depth
  int time = 0;   // columns 0..time
  std::vector<std::vector<int>> ids;         // [n][l]
  std::vector<std::vector<char>> critical;   // [n][l]
  std::vector<int> d;  // per column: max critical depth, -1 if none, depth if all (">= depth")
  bool collision = false;

  std::string to_csv() const;
};

Tableau tableau(Puzzle& puzzle, Complex z, int depth, int time);

enum class RenormStatus { found, inconclusive, none };

struct RenormCandidate {
  RenormStatus status = RenormStatus::none;
  int period = 0;
  int n0 = 0;
  long critical_k = 0;
  Polyline small_domain;  // P_{n0+p}(c)
  Polyline large_domain;  // P_{n0}(c)
  int degree_winding = 0;
  int degree_count = 0;
  double margin = 0.0;
  bool compact = false;
  int required_depth = 0;  // when inconclusive
};

// tab must be based at a critical point.
RenormCandidate detect_renormalization(Puzzle& puzzle, const Tableau& tab);

// Number of returns of the critical point under f^p that stay in the small
// domain, up to max_returns.
int returns_in_domain(const CosineMap& m, const RenormCandidate& cand, Complex c, int max_returns);

struct Impression {
  std::vector<double> diameters;  // per depth
  Polyline piece;                 // deepest piece containing z
  bool collision = false;
};

Impression approx_impression(Puzzle& puzzle, Complex z, int depth);

// R inside E with the given sampling: the smallest focal-sum deficit over the
// box boundary. Throws PreconditionError when the box is not inside.
double box_in_ellipse_margin(const TruncationBox& box, const Ellipse& ellipse, int per_side = 400);

}  // namespace cosdyn
