#include <json.hpp>

#include <sstream>

#include "wm/frobdual.hpp"

namespace wm {

using ordered_json = nlohmann::ordered_json;

std::string report_to_json(const DualityReport& r) {
  ordered_json j;
  j["family"] = r.family;
  j["rank"] = r.rank;
  j["seed"] = r.seed;
  j["D"] = rat_str(r.D);
  j["s_adm_size"] = r.s_adm_size;
  j["certificate"] = r.certificate;
  ordered_json pts = ordered_json::array();
  for (const auto& p : r.points) {
    ordered_json jp;
    ordered_json q = ordered_json::array();
    for (const auto& c : p.q) q.push_back(rat_str(c));
    jp["q"] = q;
    jp["u"] = rat_str(p.u);
    jp["root_order"] = p.root_order;
    pts.push_back(jp);
  }
  j["points"] = pts;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json jc;
    jc["alpha"] = c.alpha;
    jc["beta"] = c.beta;
    jc["eps"] = c.eps;
    jc["point_index"] = c.point_index;
    jc["lhs"] = c.lhs;
    jc["rhs"] = c.rhs;
    jc["equal"] = c.equal;
    checks.push_back(jc);
  }
  j["checks"] = checks;
  j["pass"] = r.pass;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(1);
}

DualityReport report_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  DualityReport r;
  r.family = j.at("family").get<std::string>();
  r.rank = j.at("rank").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.D = rat_parse(j.at("D").get<std::string>());
  r.s_adm_size = j.at("s_adm_size").get<std::size_t>();
  r.certificate = j.at("certificate").get<bool>();
  for (const auto& jp : j.at("points")) {
    EvalPoint p;
    for (const auto& c : jp.at("q")) p.q.push_back(rat_parse(c.get<std::string>()));
    p.u = rat_parse(jp.at("u").get<std::string>());
    p.root_order = jp.at("root_order").get<int>();
    r.points.push_back(std::move(p));
  }
  for (const auto& jc : j.at("checks")) {
    DualityCheck c;
    c.alpha = jc.at("alpha").get<int>();
    c.beta = jc.at("beta").get<int>();
    c.eps = jc.at("eps").get<int>();
    c.point_index = jc.at("point_index").get<int>();
    c.lhs = jc.at("lhs").get<std::string>();
    c.rhs = jc.at("rhs").get<std::string>();
    c.equal = jc.at("equal").get<bool>();
    r.checks.push_back(std::move(c));
  }
  r.pass = j.at("pass").get<bool>();
  r.elapsed_ms = j.at("elapsed_ms").get<long>();
  return r;
}

std::string report_render_text(const DualityReport& r) {
  std::ostringstream os;
  os << "duality report: " << r.family << "\n";
  os << "  seed          " << r.seed << "\n";
  os << "  degree bound  " << rat_str(r.D) << "\n";
  os << "  |S_adm|       " << r.s_adm_size << "\n";
  os << "  certificate   " << (r.certificate ? "nonsingular" : "FAILED") << "\n";
  os << "  points        " << r.points.size() << "\n";
  os << "  checks        " << r.checks.size() << "\n";
  size_t bad = 0;
  for (const auto& c : r.checks)
    if (!c.equal) ++bad;
  if (bad) {
    os << "  mismatches    " << bad << "\n";
    size_t shown = 0;
    for (const auto& c : r.checks) {
      if (c.equal) continue;
      os << "    point " << c.point_index << " (alpha,beta,eps)=(" << c.alpha << "," << c.beta
         << "," << c.eps << ") lhs=" << c.lhs << " rhs=" << c.rhs << "\n";
      if (++shown == 20) {
        os << "    ...\n";
        break;
      }
    }
  }
  os << "  result        " << (r.pass ? "PASS" : "FAIL") << "\n";
  os << "  elapsed_ms    " << r.elapsed_ms << "\n";
  return os.str();
}

}  // namespace wm
