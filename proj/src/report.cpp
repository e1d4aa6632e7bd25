#include "beltrami/report.hpp"

#include <cstdio>
#include <json.hpp>

namespace beltrami {

using ordered_json = nlohmann::ordered_json;

double quantize15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

namespace {

ordered_json nodal_json(const NodalCurveSet& ns) {
  ordered_json j;
  j["grid"] = ns.grid;
  j["min_margin"] = quantize15(ns.min_margin);
  j["irregular_suspected"] = ns.irregular_suspected;
  j["components"] = ordered_json::array();
  for (const auto& c : ns.components) {
    ordered_json cj;
    cj["homology"] = {c.hom1, c.hom2};
    cj["margin"] = quantize15(c.margin);
    cj["nesting"] = c.nesting;
    cj["n_points"] = c.points.size();
    ordered_json pts = ordered_json::array();
    for (const auto& p : c.points)
      pts.push_back({quantize15(p[0]), quantize15(p[1])});
    cj["points"] = std::move(pts);
    j["components"].push_back(std::move(cj));
  }
  return j;
}

}  // namespace

std::string report_to_json(const ContactReport& rep, int indent) {
  ordered_json j;
  j["field"] = rep.field;
  j["manifold"] = rep.manifold;
  if (rep.lambda) j["lambda"] = quantize15(*rep.lambda);
  else j["lambda"] = nullptr;
  j["eig_residual"] = quantize15(rep.eig_residual);
  j["min_norm"] = quantize15(rep.min_norm);
  j["char_surface"] = ordered_json::array();
  for (double s : rep.char_surface) j["char_surface"].push_back(quantize15(s));
  j["verdict"] = to_string(rep.verdict);
  if (rep.hopf_invariant) j["hopf_invariant"] = *rep.hopf_invariant;
  else j["hopf_invariant"] = nullptr;
  ordered_json m;
  for (const auto& [k, v] : rep.margins) m[k] = quantize15(v);
  j["margins"] = std::move(m);
  j["grid_spacing"] = quantize15(rep.grid_spacing);
  j["caveat"] = rep.caveat;
  if (rep.nodal_certificate)
    j["nodal_certificate"] = nodal_json(*rep.nodal_certificate);
  return j.dump(indent);
}

std::string nodal_to_json(const NodalCurveSet& ns, int indent) {
  return nodal_json(ns).dump(indent);
}

std::string modes_to_json(const TorusTrigField& v, int indent) {
  ordered_json j;
  j["lambda_sq"] = quantize15(to_double(v.lambda_sq()));
  if (!v.name.empty()) j["name"] = v.name;
  j["components"] = ordered_json::array();
  double sq = v.sqrt_lambda();
  for (int c = 0; c < 3; ++c) {
    ordered_json comp = ordered_json::array();
    for (const auto& t : v.terms(c)) {
      ordered_json tj;
      tj["k"] = {t.k[0], t.k[1], t.k[2]};
      tj["cos"] = quantize15(t.c_cos.value(sq));
      tj["sin"] = quantize15(t.c_sin.value(sq));
      comp.push_back(std::move(tj));
    }
    j["components"].push_back(std::move(comp));
  }
  return j.dump(indent);
}

}  // namespace beltrami
