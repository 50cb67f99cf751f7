#include "cosdyn/export.hpp"

namespace cosdyn {

std::string to_string(OrbitKind k) {
  switch (k) {
    case OrbitKind::escaping: return "escaping";
    case OrbitKind::attracted: return "attracted";
    case OrbitKind::bounded_unresolved: return "bounded-unresolved";
  }
  return "?";
}

namespace {

const char* status_name(RenormStatus s) {
  switch (s) {
    case RenormStatus::found: return "found";
    case RenormStatus::inconclusive: return "inconclusive";
    case RenormStatus::none: return "none";
  }
  return "?";
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(std::span<const Complex> line) {
  Json a = Json::array();
  for (const Complex& z : line) a.push_back(to_json(z));
  return a;
}

Json to_json(const CosineMap& m) {
  return {{"a", to_json(m.a())}, {"b", to_json(m.b())}, {"u", to_json(m.u())}, {"v", to_json(m.v())}};
}

Json to_json(const Ray& r) {
  Json j{{"type", "ray"}, {"address", r.address.to_string()}, {"crashed", r.crashed}};
  Json s = Json::array();
  for (const auto& smp : r.samples) s.push_back({{"t", smp.t}, {"z", to_json(smp.z)}, {"depth", smp.depth}});
  j["samples"] = std::move(s);
  if (r.landing) {
    j["landing"] = {{"point", to_json(r.landing->point)},
                    {"multiplier", to_json(r.landing->multiplier)},
                    {"class", r.landing->classification == LandingClass::repelling ? "repelling" : "parabolic"}};
  }
  return j;
}

Json to_json(const LandingResult& l) {
  Json j{{"type", "landing"}, {"address", l.ray.address.to_string()},
         {"status", l.status == LandingStatus::landed ? "landed" : "no-landing-detected"}};
  if (l.landing) {
    j["point"] = to_json(l.landing->point);
    j["multiplier"] = to_json(l.landing->multiplier);
    j["multiplier_modulus"] = std::abs(l.landing->multiplier);
    j["class"] = l.landing->classification == LandingClass::repelling ? "repelling" : "parabolic";
  }
  j["approach"] = Json::array();
  for (const auto& s : l.ray.samples) j["approach"].push_back({{"t", s.t}, {"z", to_json(s.z)}});
  return j;
}

Json to_json(const OrbitClass& c) {
  Json j{{"kind", to_string(c.kind)}, {"parabolic", c.parabolic}};
  if (!c.cycle.empty()) j["cycle"] = to_json(c.cycle);
  if (c.multiplier) j["multiplier"] = to_json(*c.multiplier);
  if (c.escape) j["escape"] = {{"index", c.escape->index}, {"re", c.escape->re}, {"saturated", c.escape->saturated}};
  return j;
}

Json to_json(const BasinCurve& c) {
  return {{"points", to_json(c.points)}, {"status", c.status == CurveStatus::complete ? "complete" : "truncated"}};
}

Json to_json(const PuzzleGraph& g) {
  Json j{{"type", "graph"}, {"theta", g.theta}, {"address", g.address.to_string()}, {"level", g.level},
         {"period", g.period}, {"landing_points", to_json(g.landing_points)}};
  j["arcs"] = Json::array();
  for (const auto& a : g.arcs)
    j["arcs"].push_back({{"tag", to_string(a.tag)}, {"source", a.source}, {"closed", a.closed}, {"points", to_json(a.points)}});
  return j;
}

Json to_json(const PuzzlePiece& p) {
  Json tags = Json::array();
  for (ArcTag t : p.tags) tags.push_back(to_string(t));
  return {{"type", "piece"},        {"id", p.id},           {"depth", p.depth},
          {"parent", p.parent},     {"image", p.image},     {"degree", p.degree},
          {"critical", p.critical}, {"interior", to_json(p.interior)}, {"diameter", p.diameter},
          {"polygon", to_json(p.polygon)}, {"tags", std::move(tags)}};
}

Json to_json(const RenormCandidate& c) {
  return {{"type", "renormalization"},
          {"status", status_name(c.status)},
          {"period", c.period},
          {"n0", c.n0},
          {"critical_k", c.critical_k},
          {"degree_winding", c.degree_winding},
          {"degree_count", c.degree_count},
          {"margin", c.margin},
          {"compact", c.compact},
          {"required_depth", c.required_depth},
          {"small_domain", to_json(c.small_domain)},
          {"large_domain", to_json(c.large_domain)}};
}

Json to_json(const EscapeCandidate& c) {
  Json slits_u = Json::array(), slits_v = Json::array();
  for (const auto& s : c.u_slits) slits_u.push_back({{"j", s.j}, {"points", to_json(s.points)}});
  for (const auto& s : c.v_slits) slits_v.push_back({{"j", s.j}, {"points", to_json(s.points)}});
  return {{"type", "escape-renormalization"},
          {"k0", c.k0},
          {"M", c.M},
          {"c", to_json(c.c)},
          {"period", c.period},
          {"address", c.s.to_string()},
          {"N", c.N},
          {"degree", c.degree},
          {"margin", c.margin},
          {"returns", c.returns},
          {"certified", c.certified()},
          {"ellipse", {{"foci", Json::array({to_json(c.E.v), to_json(-c.E.v)})},
                       {"major_axis", c.E.major_axis()},
                       {"minor_axis", c.E.minor_axis()}}},
          {"R", to_json(c.R)},
          {"U_slits", std::move(slits_u)},
          {"V_slits", std::move(slits_v)},
          {"preimage_counts", c.preimage_counts},
          {"winding_counts", c.winding_counts}};
}

Json to_json(const DiameterReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.components)
    comps.push_back({{"id", c.id}, {"cycle", c.cycle}, {"pixels", c.pixels}, {"diameter", c.diameter},
                     {"preperiod", c.preperiod}, {"touches_edge", c.touches_edge},
                     {"resolution_limited", c.resolution_limited}});
  Json eps = Json::array();
  for (std::size_t i = 0; i < r.eps.size(); ++i) eps.push_back({{"eps", r.eps[i]}, {"count", r.count_above[i]}});
  Json med = Json::array();
  for (const auto& [p, d] : r.median_by_preperiod) med.push_back({{"preperiod", p}, {"median", d}});
  return {{"type", "diameters"}, {"components", std::move(comps)}, {"counts", std::move(eps)}, {"medians", std::move(med)}};
}

Json to_json(const ScanRow& r) {
  return {{"c", r.c}, {"plus", to_string(r.plus)}, {"minus", to_string(r.minus)}};
}

}  // namespace cosdyn
