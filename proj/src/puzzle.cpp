#include "cosdyn/puzzle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "cosdyn/orbit.hpp"

namespace cosdyn {

std::string to_string(ArcTag t) {
  switch (t) {
    case ArcTag::internal_ray: return "internal-ray";
    case ArcTag::dynamic_ray: return "dynamic-ray";
    case ArcTag::equipotential: return "equipotential";
    case ArcTag::ellipse: return "ellipse-arc";
  }
  return "?";
}

namespace {

constexpr int kTagStride = 100000;

double max_gap(const Polyline& pts, bool closed) {
  double g = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) g = std::max(g, std::abs(pts[i] - pts[i - 1]));
  if (closed && pts.size() > 1) g = std::max(g, std::abs(pts.front() - pts.back()));
  return g;
}

// Samples of g_s on [t_lo, t_hi] with consecutive points at most max_seg apart.
Polyline dense_ray(const CosineMap& m, const Address& s, std::vector<double> ts, double max_seg) {
  std::sort(ts.begin(), ts.end(), std::greater<>());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (int round = 0; round < 12; ++round) {
    const Ray r = trace_ray_at(m, s, ts);
    if (r.samples.size() != ts.size()) throw CertificationError("dynamic ray of the graph crashed: " + s.to_string());
    std::vector<double> refined;
    bool changed = false;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      refined.push_back(ts[i]);
      if (i + 1 < ts.size() && std::abs(r.samples[i + 1].z - r.samples[i].z) > max_seg) {
        const int extra = std::min(64, static_cast<int>(std::ceil(std::abs(r.samples[i + 1].z - r.samples[i].z) / max_seg)));
        for (int e = 1; e < extra; ++e) refined.push_back(ts[i] + (ts[i + 1] - ts[i]) * e / extra);
        changed = true;
      }
    }
    if (!changed) {
      Polyline out;
      for (const auto& smp : r.samples) out.push_back(smp.z);
      return out;
    }
    ts = std::move(refined);
  }
  throw CertificationError("dynamic ray could not be sampled finely enough");
}

Polyline dense_internal_ray(const BasinChart& chart, double theta, double rho_max, double max_seg) {
  for (int n = 256; n <= 16384; n *= 2) {
    const BasinCurve c = internal_ray(chart, theta, n, rho_max);
    if (c.status != CurveStatus::complete) throw CertificationError("internal ray of the graph is truncated");
    // the first segment joins the center to the chart core; it is straight in the chart
    Polyline pts = c.points;
    if (max_gap(Polyline(pts.begin() + 1, pts.end()), false) <= max_seg) return resample(pts, max_seg, false);
  }
  throw CertificationError("internal ray could not be sampled finely enough");
}

Polyline dense_equipotential(const BasinChart& chart, double level, double max_seg) {
  for (int n = 256; n <= 65536; n *= 2) {
    const BasinCurve c = equipotential(chart, level, n);
    if (c.status != CurveStatus::complete) throw CertificationError("equipotential of the graph is truncated");
    if (max_gap(c.points, true) <= max_seg) return c.points;
  }
  throw CertificationError("equipotential could not be sampled finely enough");
}

}  // namespace

PuzzleGraph build_graph(const CosineMap& m, const BasinChart& chart, double theta, const Address& s, double level,
                        const Ellipse& ellipse, const GraphOptions& opts) {
  if (!s.is_periodic()) throw PreconditionError("graph ray address must be periodic");
  if (chart.mode() != ChartMode::boettcher) throw PreconditionError("graph construction needs a superattracting basin");
  if (!(level > 0 && level < 1)) throw PreconditionError("equipotential level must be in (0,1)");
  const int p = static_cast<int>(s.period().size());
  theta -= std::floor(theta);
  {
    double t = theta;
    for (int i = 0; i < p; ++i) t = std::fmod(2.0 * t, 1.0);
    if (std::abs(t - theta) > 1e-12 && std::abs(std::abs(t - theta) - 1.0) > 1e-12)
      throw PreconditionError("internal angle period does not divide the address period");
  }
  PuzzleGraph g{theta, s, level, p, {}, {}};
  const double t_max = opts.ray_t_max > 0 ? opts.ray_t_max : 0.5 * ellipse.major_axis() + std::abs(m.u()) + 8.0;

  double th = theta;
  Address sj = s;
  for (int j = 0; j < p; ++j) {
    const LandingResult lr = land_ray(m, sj);
    if (lr.status != LandingStatus::landed) throw CertificationError("graph ray does not land: " + sj.to_string());
    const Complex z0 = lr.landing->point;

    Polyline inner;
    if (chart.period() == 1) {
      inner = dense_internal_ray(chart, th, 1.0 - 1e-12, opts.max_segment);
    } else {
      // images of the base ray inside the other basin components
      const Polyline base = dense_internal_ray(chart, theta, 1.0 - 1e-12, opts.max_segment);
      for (const Complex z : base) inner.push_back(iterate_jet(m, z, j).value);
    }
    const PeriodicPoint pp = newton_periodic(m, inner.back(), p);
    if (!pp.converged || std::abs(pp.z - z0) > 1e-5 || std::abs(inner.back() - z0) > 1e-5) {
      std::ostringstream os;
      os.precision(12);
      os << "internal ray lands at " << pp.z << " but " << sj.to_string() << " lands at " << z0;
      throw CertificationError(os.str());
    }
    inner.push_back(z0);
    g.arcs.push_back({ArcTag::internal_ray, j, std::move(inner), false});

    std::vector<double> ts;
    for (auto it = lr.ray.samples.rbegin(); it != lr.ray.samples.rend(); ++it) ts.push_back(it->t);
    const int n_far = std::max(opts.ray_samples, static_cast<int>(t_max / opts.max_segment / 4));
    for (int i = 1; i <= n_far; ++i) ts.push_back(1.0 + (t_max - 1.0) * i / n_far);
    Polyline outer = dense_ray(m, sj, ts, opts.max_segment);
    std::reverse(outer.begin(), outer.end());
    outer.insert(outer.begin(), z0);
    g.arcs.push_back({ArcTag::dynamic_ray, j, std::move(outer), false});
    g.landing_points.push_back(z0);

    th = std::fmod(2.0 * th, 1.0);
    sj = sj.shift();
  }

  const Polyline eq = dense_equipotential(chart, level, opts.max_segment);
  for (int i = 0; i < chart.period(); ++i) {
    Polyline img;
    for (const Complex z : eq) img.push_back(iterate_jet(m, z, i).value);
    g.arcs.push_back({ArcTag::equipotential, i, std::move(img), true});
  }
  return g;
}

// ---------------------------------------------------------------------------

Puzzle::Puzzle(const CosineMap& m, const PuzzleGraph& graph, const Ellipse& ellipse, const TruncationBox& box,
               std::vector<BasinChart> attractors, const PuzzleOptions& opts)
    : m_(m), ellipse_(ellipse), box_(box), attractors_(std::move(attractors)), opts_(opts) {
  std::vector<Arrangement::Curve> curves;
  curves.push_back({resample(ellipse.boundary(2048), 5.0 * opts.max_segment, true), true,
                    static_cast<int>(ArcTag::ellipse) * kTagStride});
  for (const Arc& a : graph.arcs) {
    Polyline pts;
    for (const Complex z : a.points) {
      pts.push_back(z);
      if (!a.closed && !ellipse.contains(z)) break;  // one sample beyond the ellipse closes the cut
    }
    curves.push_back({std::move(pts), a.closed, static_cast<int>(a.tag) * kTagStride + a.source});
  }
  const Arrangement arr(std::move(curves), 1e-10);

  pieces_.resize(1);
  children_.resize(1);
  for (std::size_t f = 0; f < arr.faces().size(); ++f) {
    const Region& face = arr.faces()[f];
    // the Julia proxy: some sample of the face is not attracted within the budget
    const Box bb = bounding_box(face.outer);
    bool keep = false;
    const int n = opts.julia_grid;
    for (int i = 0; i < n && !keep; ++i)
      for (int j = 0; j < n && !keep; ++j) {
        const Complex z(bb.x0 + bb.width() * (i + 0.5) / n, bb.y0 + bb.height() * (j + 0.5) / n);
        if (face.contains(z) && julia_adjacent(z)) keep = true;
      }
    if (!keep) continue;
    if (!face.holes.empty()) throw CertificationError("depth-0 face with holes; refine the graph resolution");
    PuzzlePiece p;
    p.depth = 0;
    p.polygon = face.outer;
    for (const int t : arr.face_tags()[f]) {
      p.tags.push_back(static_cast<ArcTag>(t / kTagStride));
      p.sources.push_back(t % kTagStride);
    }
    const auto ip = interior_point(p.polygon);
    if (!ip) continue;
    p.interior = *ip;
    add_piece(std::move(p));
  }
  if (pieces_[0].empty()) throw CertificationError("no depth-0 piece meets the Julia set");
}

bool Puzzle::julia_adjacent(Complex z) const {
  for (int i = 0; i < opts_.julia_iter; ++i) {
    if (std::abs((z - m_.u()).real()) > kEscapeRe) return true;
    for (const BasinChart& c : attractors_)
      if (std::abs(z - c.center()) < c.radius()) return false;
    const MapValue fz = m_.eval(z);
    if (fz.escaped) return true;
    z = fz.value;
  }
  return true;
}

void Puzzle::fill_critical(PuzzlePiece& p) const {
  const Box bb = bounding_box(p.polygon);
  const double y0 = m_.u().imag();
  const long k_lo = static_cast<long>(std::floor((bb.y0 - y0) / kPi)) - 1;
  const long k_hi = static_cast<long>(std::ceil((bb.y1 - y0) / kPi)) + 1;
  p.critical.clear();
  for (long k = k_lo; k <= k_hi; ++k) {
    const Complex c = m_.critical_point(k);
    if (bb.contains(c) && winding_number(p.polygon, c) != 0) p.critical.push_back(k);
  }
}

int Puzzle::add_piece(PuzzlePiece p) {
  const auto d = static_cast<std::size_t>(p.depth);
  if (pieces_.size() <= d) {
    pieces_.resize(d + 1);
    children_.resize(d + 1);
  }
  fill_critical(p);
  p.diameter = diameter(p.polygon);
  p.id = static_cast<int>(pieces_[d].size());
  pieces_[d].push_back(std::move(p));
  return pieces_[d].back().id;
}

namespace {

struct LiftPath {
  Polyline pts;
  std::vector<std::size_t> src;  // index of the parent vertex each point follows
};

}  // namespace

std::vector<PuzzlePiece> Puzzle::lift(const PuzzlePiece& q) const {
  const Polyline& w = q.polygon;
  const std::size_t n = w.size();
  std::vector<PuzzlePiece> out;
  const double im0 = m_.u().imag();
  std::vector<Complex> starts = m_.preimages_in_band(w[0], im0 + box_.y_lo - kPi, im0 + box_.y_hi + kPi);
  std::erase_if(starts, [&](Complex z) { return std::abs((z - m_.u()).real()) > box_.M + 1.0; });
  std::vector<char> used(starts.size(), 0);

  // continuation of one parent segment, subdividing where the nearest
  // preimage is not clearly separated from the next one
  std::function<bool(Complex, Complex, Complex&, LiftPath&, std::size_t, int)> segment =
      [&](Complex wa, Complex wb, Complex& z, LiftPath& path, std::size_t src, int depth) -> bool {
    const NearestPreimage np = m_.nearest_preimage(wb, z);
    const double scale = std::abs(wb - wa) / std::max(std::abs(m_.derivative(z)), 1e-300);
    if (np.distance <= 0.3 * np.runner_up && np.distance <= 4.0 * scale + 1e-12) {
      z = np.z;
      return true;
    }
    if (depth > 40) return false;
    const Complex mid = 0.5 * (wa + wb);
    if (!segment(wa, mid, z, path, src, depth + 1)) return false;
    path.pts.push_back(z);
    path.src.push_back(src);
    return segment(mid, wb, z, path, src, depth + 1);
  };

  for (std::size_t si = 0; si < starts.size(); ++si) {
    if (used[si]) continue;
    used[si] = 1;
    const Complex z0 = starts[si];
    const double tol = 1e-8 * (1.0 + std::abs(z0));
    LiftPath path;
    Complex z = z0;
    int degree = 0;
    bool closed = false;
    for (int loop = 0; loop < 2 && !closed; ++loop) {
      ++degree;
      for (std::size_t i = 0; i < n; ++i) {
        path.pts.push_back(z);
        path.src.push_back(i);
        if (!segment(w[i], w[(i + 1) % n], z, path, i, 0)) throw RefinementError("lift lost continuation", z);
      }
      closed = std::abs(z - z0) < tol;
      for (std::size_t sj = 0; sj < starts.size(); ++sj)
        if (std::abs(starts[sj] - z) < tol) used[sj] = 1;
    }
    if (!closed) throw RefinementError("lifted boundary does not close", z);

    // the lifted ellipse lies on Re(z - u) = +-M exactly
    const TruncationBox slack{box_.u, box_.M + 1e-7, box_.y_lo - 1e-7, box_.y_hi + 1e-7};
    bool inside = true;
    for (const Complex p : path.pts)
      if (!slack.contains(p)) {
        inside = false;
        break;
      }
    if (!inside) continue;

    PuzzlePiece c;
    c.depth = q.depth + 1;
    c.image = q.id;
    c.degree = degree;
    Complex last = path.pts[0];
    for (std::size_t k = 0; k < path.pts.size(); ++k) {
      if (k > 0 && std::abs(path.pts[k] - last) < opts_.min_segment) continue;
      c.polygon.push_back(path.pts[k]);
      c.tags.push_back(q.tags[path.src[k]]);
      c.sources.push_back(q.sources[path.src[k]]);
      last = path.pts[k];
    }
    if (c.polygon.size() < 3) continue;
    const auto ip = interior_point(c.polygon);
    if (!ip) continue;
    c.interior = *ip;
    out.push_back(std::move(c));
  }
  return out;
}

Location Puzzle::locate_among(int depth, const std::vector<int>& ids, Complex z) const {
  for (const int id : ids) {
    const PuzzlePiece& p = piece(depth, id);
    const Box bb = bounding_box(p.polygon);
    if (z.real() < bb.x0 - opts_.collision_tol || z.real() > bb.x1 + opts_.collision_tol ||
        z.imag() < bb.y0 - opts_.collision_tol || z.imag() > bb.y1 + opts_.collision_tol)
      continue;
    if (distance_to_polyline(z, p.polygon, true) < opts_.collision_tol) return {LocateStatus::graph_collision, id};
    if (winding_number(p.polygon, z) != 0) return {LocateStatus::inside, id};
  }
  return {};
}

const std::vector<int>& Puzzle::refine(int depth, int id) {
  auto& cache = children_.at(static_cast<std::size_t>(depth));
  if (auto it = cache.find(id); it != cache.end()) return it->second;
  std::vector<PuzzlePiece> lifts = lift(piece(depth, id));
  std::vector<int> kept;
  for (PuzzlePiece& c : lifts) {
    Location par;
    if (depth == 0) {
      std::vector<int> all(pieces_[0].size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
      par = locate_among(0, all, c.interior);
    } else {
      const int grand = piece(depth, id).parent;
      const std::vector<int> cands = refine(depth - 1, grand);
      par = locate_among(depth, cands, c.interior);
    }
    if (par.status != LocateStatus::inside) continue;
    c.parent = par.id;
    kept.push_back(add_piece(std::move(c)));
  }
  auto& slot = children_.at(static_cast<std::size_t>(depth))[id];
  slot = std::move(kept);
  return slot;
}

void Puzzle::build_to_depth(int depth) {
  for (int n = 0; n < depth; ++n) {
    const int count = static_cast<int>(pieces_.at(static_cast<std::size_t>(n)).size());
    // lifts are independent; attach them to parents afterwards in order
    std::vector<std::vector<PuzzlePiece>> lifted(static_cast<std::size_t>(count));
    std::vector<char> todo(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) todo[i] = !children_[n].contains(i);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i)
      if (todo[i]) lifted[i] = lift(pieces_[n][i]);
    for (int i = 0; i < count; ++i) {
      if (!todo[i]) continue;
      std::vector<int> kept;
      for (PuzzlePiece& c : lifted[i]) {
        Location par;
        if (n == 0) {
          std::vector<int> all(pieces_[0].size());
          for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<int>(k);
          par = locate_among(0, all, c.interior);
        } else {
          par = locate_among(n, refine(n - 1, pieces_[n][i].parent), c.interior);
        }
        if (par.status != LocateStatus::inside) continue;
        c.parent = par.id;
        kept.push_back(add_piece(std::move(c)));
      }
      children_[n][i] = std::move(kept);
    }
  }
  if (static_cast<int>(pieces_.size()) <= depth) {
    pieces_.resize(static_cast<std::size_t>(depth) + 1);
    children_.resize(static_cast<std::size_t>(depth) + 1);
  }
}

Location Puzzle::locate(int depth, Complex z) {
  if (depth < 0) throw PreconditionError("depth must be non-negative");
  if (depth == 0) {
    std::vector<int> all(pieces_[0].size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return locate_among(0, all, z);
  }
  const MapValue fz = m_.eval(z);
  if (fz.escaped) return {};
  const Location up = locate(depth - 1, fz.value);
  if (up.status != LocateStatus::inside) return up;
  const std::vector<int> kids = refine(depth - 1, up.id);
  return locate_among(depth, kids, z);
}

// ---------------------------------------------------------------------------

std::string Tableau::to_csv() const {
  std::ostringstream os;
  os << "depth";
  for (int l = 0; l <= time; ++l) os << ",l" << l;
  os << '\n';
  for (int n = 0; n <= depth; ++n) {
    os << n;
    for (int l = 0; l <= time; ++l) {
      const int id = ids[n][l];
      os << ',';
      if (id == kUnlocated)
        os << 'x';
        else if (id == kCollision)
        os << '!';
      else
        os << id << (critical[n][l] ? "*" : "");
    }
    os << '\n';
  }
  os << "d";
  for (int l = 0; l <= time; ++l) {
    os << ',';
    if (d[l] >= depth)
      os << ">=" << depth;
    else
      os << d[l];
  }
  os << '\n';
  return os.str();
}

Tableau tableau(Puzzle& puzzle, Complex z, int depth, int time) {
  if (depth < 0 || time < 0) throw PreconditionError("tableau needs non-negative depth and time");
  Tableau t;
  t.z = z;
  t.depth = depth;
  t.time = time;
  t.ids.assign(static_cast<std::size_t>(depth) + 1, std::vector<int>(static_cast<std::size_t>(time) + 1, kUnlocated));
  t.critical.assign(static_cast<std::size_t>(depth) + 1, std::vector<char>(static_cast<std::size_t>(time) + 1, 0));
  t.d.assign(static_cast<std::size_t>(time) + 1, -1);
  const std::vector<Complex> orb = orbit(puzzle.map(), z, time);
  for (int l = 0; l <= time && l < static_cast<int>(orb.size()); ++l) {
    for (int n = 0; n <= depth; ++n) {
      const Location loc = puzzle.locate(n, orb[l]);
      if (loc.status == LocateStatus::graph_collision) {
        t.ids[n][l] = kCollision;
        t.collision = true;
        break;
      }
      if (loc.status != LocateStatus::inside) break;
      t.ids[n][l] = loc.id;
      t.critical[n][l] = !puzzle.piece(n, loc.id).critical.empty();
    }
    int dl = -1;
    for (int n = 0; n <= depth; ++n)
      if (t.critical[n][l]) dl = n;
    t.d[l] = dl;
  }
  return t;
}

namespace {

std::optional<long> critical_index(const CosineMap& m, Complex z) {
  const long k = std::lround((z - m.u()).imag() / kPi);
  if (std::abs(z - m.critical_point(k)) < 1e-9) return k;
  return std::nullopt;
}

}  // namespace

RenormCandidate detect_renormalization(Puzzle& puzzle, const Tableau& tab) {
  const CosineMap& m = puzzle.map();
  const auto kc = critical_index(m, tab.z);
  if (!kc) throw PreconditionError("renormalization detection needs a tableau based at a critical point");
  RenormCandidate out;
  out.critical_k = *kc;

  // minimal p whose column repeats column 0 at every located depth
  int p = 0;
  for (int q = 1; q <= tab.time && p == 0; ++q) {
    bool same = true;
    int located = 0;
    for (int n = 0; n <= tab.depth; ++n) {
      if (tab.ids[n][0] < 0 || tab.ids[n][q] < 0) break;
      ++located;
      if (tab.ids[n][q] != tab.ids[n][0]) same = false;
    }
    if (same && located == tab.depth + 1) p = q;
  }
  if (p == 0) return out;
  out.period = p;

  // smallest n0 with critical-free intermediate pieces, preferring one whose
  // small domain is compactly contained in the large one
  auto evaluate = [&](int n0) {
    RenormCandidate c = out;
    c.n0 = n0;
    const PuzzlePiece& U = puzzle.piece(n0 + p, tab.ids[n0 + p][0]);
    const PuzzlePiece& V = puzzle.piece(n0, tab.ids[n0][0]);
    c.small_domain = U.polygon;
    c.large_domain = V.polygon;

    // argument principle: winding of f^p(dU) around an interior target of V
    Polyline img;
    for (const Complex z : U.polygon) img.push_back(iterate_jet(m, z, p).value);
    c.degree_winding = winding_number(img, V.interior);

    // independent count: pull the target back along the pieces of the orbit
    std::vector<Complex> targets{V.interior};
    for (int l = p - 1; l >= 0; --l) {
      const PuzzlePiece& P = puzzle.piece(n0 + p - l, tab.ids[n0 + p - l][l]);
      const Box bb = bounding_box(P.polygon);
      std::vector<Complex> next;
      for (const Complex w : targets)
        for (const Complex z : m.preimages_in_band(w, bb.y0, bb.y1))
          if (winding_number(P.polygon, z) != 0) next.push_back(z);
      targets = std::move(next);
    }
    c.degree_count = static_cast<int>(targets.size());

    bool nested = true;
    for (const Complex z : U.polygon)
      if (winding_number(V.polygon, z) == 0) nested = false;
    c.margin = nested ? polyline_distance(U.polygon, true, V.polygon, true) : 0.0;
    c.compact = nested && c.margin > 1e-9;
    c.status = (c.degree_winding == 2 && c.degree_count == 2) ? RenormStatus::found : RenormStatus::none;
    return c;
  };

  std::optional<RenormCandidate> first;
  for (int n = 0; n + p <= tab.depth; ++n) {
    bool clean = true;
    for (int l = 1; l < p; ++l)
      if (tab.critical[n + p - l][l]) clean = false;
    if (!clean) continue;
    RenormCandidate c = evaluate(n);
    if (c.status == RenormStatus::found && c.compact) return c;
    if (!first) first = std::move(c);
  }
  if (first) return *first;
  out.status = RenormStatus::inconclusive;
  out.required_depth = tab.depth + p;
  return out;
}

int returns_in_domain(const CosineMap& m, const RenormCandidate& cand, Complex c, int max_returns) {
  if (cand.period < 1) throw PreconditionError("candidate has no period");
  Complex z = c;
  for (int r = 0; r < max_returns; ++r) {
    const Jet j = iterate_jet(m, z, cand.period);
    if (j.escaped || winding_number(cand.small_domain, j.value) == 0) return r;
    z = j.value;
  }
  return max_returns;
}

Impression approx_impression(Puzzle& puzzle, Complex z, int depth) {
  Impression out;
  for (int n = 0; n <= depth; ++n) {
    const Location loc = puzzle.locate(n, z);
    if (loc.status == LocateStatus::graph_collision) {
      out.collision = true;
      break;
    }
    if (loc.status != LocateStatus::inside) break;
    const PuzzlePiece& p = puzzle.piece(n, loc.id);
    out.diameters.push_back(p.diameter);
    out.piece = p.polygon;
  }
  return out;
}

double box_in_ellipse_margin(const TruncationBox& box, const Ellipse& ellipse, int per_side) {
  double margin = std::numeric_limits<double>::infinity();
  for (const Complex z : box.boundary(per_side)) margin = std::min(margin, ellipse.depth(z));
  if (!(margin > 0)) throw PreconditionError("truncation box is not inside the ellipse; increase M");
  return margin;
}

}  // namespace cosdyn
