#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "tropgeo/certify.hpp"
#include "tropgeo/curve.hpp"

namespace tropgeo {

using json = nlohmann::ordered_json;

namespace detail {

inline json rat_json(const Rat& r) { return format_rat(r); }

inline json vec_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat_json(x));
  return a;
}

inline json ivec_json(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) {
    require(x >= std::numeric_limits<long long>::min() &&
                x <= std::numeric_limits<long long>::max(),
            errc::parse_error, "integer too large for the document format");
    a.push_back(x.convert_to<long long>());
  }
  return a;
}

inline RatVec vec_from_json(const json& a, int n) {
  require(a.is_array() && int(a.size()) == n, errc::parse_error,
          "expected an array of " + std::to_string(n) + " rationals");
  RatVec v;
  for (const auto& x : a) {
    if (x.is_number_integer())
      v.push_back(Rat(Int(x.get<long long>())));
    else if (x.is_string())
      v.push_back(parse_rat(x.get<std::string>()));
    else
      fail(errc::parse_error, "rational must be a string or integer");
  }
  return v;
}

inline IntVec ivec_from_json(const json& a, int n) {
  require(a.is_array() && int(a.size()) == n, errc::parse_error,
          "expected an array of " + std::to_string(n) + " integers");
  IntVec v;
  for (const auto& x : a) {
    require(x.is_number_integer(), errc::parse_error, "expected an integer");
    v.push_back(Int(x.get<long long>()));
  }
  return v;
}

inline Int int_from_json(const json& x) {
  if (x.is_number_integer()) return Int(x.get<long long>());
  if (x.is_string()) {
    Rat r = parse_rat(x.get<std::string>());
    require(denominator(r) == 1, errc::parse_error, "expected an integer");
    return numerator(r);
  }
  fail(errc::parse_error, "expected an integer");
}

}  // namespace detail

/// Serializes a curve into the canonical document layout: fixed field
/// order, rationals as "p/q" strings, edge endpoints as vertex indices
/// whenever they coincide with a declared vertex.
inline json curve_to_json(const TropicalCurve& G) {
  json doc;
  doc["version"] = 1;
  doc["dimension"] = G.dim;
  json hs = json::array();
  for (const auto& h : G.region.halfspaces()) {
    json o;
    o["normal"] = detail::ivec_json(h.normal);
    o["offset"] = detail::rat_json(h.offset);
    hs.push_back(o);
  }
  doc["region"] = json{{"halfspaces", hs}};
  json vs = json::array();
  for (const auto& v : G.vertices) vs.push_back(detail::vec_json(v));
  doc["vertices"] = vs;
  json es = json::array();
  auto endpoint = [&](const RatVec& p) -> json {
    if (auto v = G.vertex_at(p)) return *v;
    return detail::vec_json(p);
  };
  for (const auto& e : G.edges) {
    json o;
    o["tail"] = endpoint(e.tail);
    if (e.kind == Edge::Kind::segment) {
      o["kind"] = "segment";
      o["head"] = endpoint(e.head);
    } else {
      o["kind"] = "ray";
      o["ray_sign"] = e.ray_sign;
    }
    o["direction"] = detail::ivec_json(e.weight.direction);
    require(e.weight.multiplicity <= Int(std::numeric_limits<long long>::max()),
            errc::parse_error, "multiplicity too large for the document format");
    o["multiplicity"] = e.weight.multiplicity.convert_to<long long>();
    es.push_back(o);
  }
  doc["edges"] = es;
  json meta = json::object();
  if (!G.unbalanced_ok.empty()) {
    json u = json::array();
    for (int v : G.unbalanced_ok) u.push_back(v);
    meta["unbalanced_vertices"] = u;
  }
  for (const auto& [k, v] : G.metadata) meta[k] = v;
  doc["metadata"] = meta;
  return doc;
}

inline std::string serialize_curve(const TropicalCurve& G) {
  return curve_to_json(G).dump(2) + "\n";
}

inline TropicalCurve curve_from_json(const json& doc) {
  require(doc.is_object(), errc::parse_error, "document must be an object");
  require(doc.contains("version") && doc["version"] == 1, errc::parse_error,
          "unsupported document version");
  require(doc.contains("dimension") && doc["dimension"].is_number_integer(),
          errc::parse_error, "missing dimension");
  int n = doc["dimension"].get<int>();
  require(n >= 2, errc::parse_error, "dimension must be >= 2");
  require(doc.contains("region") && doc["region"].contains("halfspaces"),
          errc::parse_error, "missing region halfspaces");
  std::vector<Halfspace> hs;
  for (const auto& h : doc["region"]["halfspaces"]) {
    require(h.contains("normal") && h.contains("offset"), errc::parse_error,
            "halfspace needs normal and offset");
    Rat off = h["offset"].is_string() ? parse_rat(h["offset"].get<std::string>())
                                      : Rat(detail::int_from_json(h["offset"]));
    hs.push_back({detail::ivec_from_json(h["normal"], n), off});
  }
  TropicalCurve G(n, Region(n, std::move(hs)));
  if (doc.contains("vertices"))
    for (const auto& v : doc["vertices"]) G.add_vertex(detail::vec_from_json(v, n));
  auto endpoint = [&](const json& x) -> RatVec {
    if (x.is_number_integer()) {
      int v = x.get<int>();
      require(v >= 0 && v < int(G.vertices.size()), errc::parse_error,
              "vertex index out of range");
      return G.vertices[v];
    }
    return detail::vec_from_json(x, n);
  };
  int id = 0;
  if (doc.contains("edges")) {
    for (const auto& o : doc["edges"]) {
      require(o.contains("tail") && o.contains("kind") && o.contains("direction") &&
                  o.contains("multiplicity"),
              errc::parse_error, "edge needs tail, kind, direction, multiplicity");
      IntVec dir = detail::ivec_from_json(o["direction"], n);
      require(!is_zero(dir), errc::parse_error, "edge direction must be nonzero");
      Weight canon = canonical_weight(dir);
      require(canon.direction == dir && canon.multiplicity == 1, errc::parse_error,
              "edge direction must be primitive with canonical sign");
      Weight w = canon;
      w.multiplicity = detail::int_from_json(o["multiplicity"]);
      require(w.multiplicity > 0, errc::parse_error, "multiplicity must be positive");
      std::string kind = o["kind"].get<std::string>();
      if (kind == "segment") {
        require(o.contains("head"), errc::parse_error, "segment needs a head");
        G.edges.push_back(Edge::segment(id++, endpoint(o["tail"]), endpoint(o["head"]), w));
      } else if (kind == "ray") {
        require(o.contains("ray_sign"), errc::parse_error, "ray needs ray_sign");
        int sign = o["ray_sign"].get<int>();
        require(sign == 1 || sign == -1, errc::parse_error, "ray_sign must be +-1");
        G.edges.push_back(Edge::ray(id++, endpoint(o["tail"]), sign, w));
      } else {
        fail(errc::parse_error, "edge kind must be 'segment' or 'ray'");
      }
    }
  }
  if (doc.contains("metadata") && doc["metadata"].is_object()) {
    for (const auto& [k, v] : doc["metadata"].items()) {
      if (k == "unbalanced_vertices") {
        for (const auto& x : v) G.unbalanced_ok.push_back(x.get<int>());
      } else if (v.is_string()) {
        G.metadata[k] = v.get<std::string>();
      } else {
        G.metadata[k] = v.dump();
      }
    }
  }
  return G;
}

inline TropicalCurve parse_curve(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, e.what());
  }
  return curve_from_json(doc);
}

/// Line-oriented report format: `CHECK name lhs OP rhs PASS|FAIL`.
inline std::string format_check_line(const Check& c) {
  return "CHECK " + c.name + " " + c.lhs + " " + c.op + " " + c.rhs + " " +
         (c.pass ? "PASS" : "FAIL");
}

inline json certificate_to_json(const Certificate& cert) {
  json doc;
  doc["n"] = cert.n;
  doc["delta"] = format_rat(cert.delta);
  doc["area_budget"] = format_rat(cert.area_budget);
  doc["area_total"] = format_rat(cert.area_total);
  doc["restricted_vertex_count"] = cert.restricted_vertex_count;
  doc["saturated_vertex_count"] = cert.saturated_vertex_count;
  doc["degree"] = cert.degree.str();
  doc["saturated_area"] = format_rat(cert.saturated_area);
  json dirs = json::array();
  for (const auto& d : cert.per_direction) {
    json o;
    o["direction"] = d.direction + 1;  // 1-based in reports
    json counts = json::array();
    for (const auto& c : d.v0_counts) counts.push_back(c.str());
    o["v0_counts"] = counts;
    o["v0_bound"] = d.v0_bound.str();
    dirs.push_back(o);
  }
  doc["per_direction"] = dirs;
  doc["cover_misses"] = cert.cover_misses;
  doc["degree_bound"] = cert.degree_bound.str();
  doc["apriori_bound"] = format_rat(cert.apriori_bound);
  doc["apriori_bound_label"] = "conjecture-free";
  json checks = json::array();
  for (const auto& c : cert.checks) {
    json o;
    o["name"] = c.name;
    o["lhs"] = c.lhs;
    o["op"] = c.op;
    o["rhs"] = c.rhs;
    o["pass"] = c.pass;
    checks.push_back(o);
  }
  doc["checks"] = checks;
  doc["pass"] = cert.pass;
  return doc;
}

}  // namespace tropgeo
