#include "slabgreen/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace slabgreen::cli {
namespace {

using nlohmann::json;

std::string child(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

void reject_unknown(const json& obj, const std::string& path,
                    std::initializer_list<const char*> allowed) {
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items()) {
    if (!keys.count(key)) throw ConfigError(child(path, key), "unknown key");
  }
}

const json& object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  return j;
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected an array");
  return j;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(path, "must be finite");
  return v;
}

double positive(const json& j, const std::string& path) {
  const double v = number(j, path);
  if (!(v > 0.0)) throw ConfigError(path, "must be > 0");
  return v;
}

double non_negative(const json& j, const std::string& path) {
  const double v = number(j, path);
  if (!(v >= 0.0)) throw ConfigError(path, "must be >= 0");
  return v;
}

// A complex number is either a real number or [re, im].
Complex complex_number(const json& j, const std::string& path) {
  if (j.is_number()) return {number(j, path), 0.0};
  if (!j.is_array() || j.size() != 2) throw ConfigError(path, "expected a number or [re, im]");
  return {number(j[0], index(path, 0)), number(j[1], index(path, 1))};
}

Vec3 vector3(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) throw ConfigError(path, "expected [x, y, z]");
  return {number(j[0], index(path, 0)), number(j[1], index(path, 1)),
          number(j[2], index(path, 2))};
}

Spacing spacing(const json& j, const std::string& path) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "linear") return Spacing::linear;
    if (s == "log") return Spacing::log;
  }
  throw ConfigError(path, "expected \"linear\" or \"log\"");
}

// A scalar or a sweep object; `positive_only` applies to every expanded value.
Axis axis(const json& j, const std::string& path, bool positive_only) {
  if (j.is_number()) {
    return Axis::single(positive_only ? positive(j, path) : number(j, path));
  }
  object(j, path);
  reject_unknown(j, path, {"start", "stop", "count", "spacing"});
  for (const char* key : {"start", "stop", "count"}) {
    if (!j.contains(key)) throw ConfigError(child(path, key), "required");
  }
  const double start = number(j["start"], child(path, "start"));
  const double stop = number(j["stop"], child(path, "stop"));
  if (!j["count"].is_number_integer()) throw ConfigError(child(path, "count"), "expected an integer");
  const long long count = j["count"].get<long long>();
  if (count < 1 || count > 1000000) throw ConfigError(child(path, "count"), "must be in [1, 1e6]");
  if (!(start < stop)) throw ConfigError(path, "start must be < stop");
  const Spacing sp = j.contains("spacing") ? spacing(j["spacing"], child(path, "spacing"))
                                           : Spacing::linear;
  if (sp == Spacing::log && !(start > 0.0)) {
    throw ConfigError(child(path, "start"), "log spacing needs start > 0");
  }
  if (positive_only && !(start > 0.0)) throw ConfigError(child(path, "start"), "must be > 0");
  return {sweep_values(start, stop, static_cast<int>(count), sp), true};
}

DielectricModel dielectric(const json& j, const std::string& path) {
  object(j, path);
  if (!j.contains("type") || !j["type"].is_string()) {
    throw ConfigError(child(path, "type"), "required string");
  }
  const auto type = j["type"].get<std::string>();
  try {
    if (type == "constant") {
      reject_unknown(j, path, {"type", "epsilon"});
      if (!j.contains("epsilon")) throw ConfigError(child(path, "epsilon"), "required");
      return ConstantPermittivity{complex_number(j["epsilon"], child(path, "epsilon"))};
    }
    if (type == "drude") {
      reject_unknown(j, path, {"type", "plasma_frequency", "damping"});
      if (!j.contains("plasma_frequency")) {
        throw ConfigError(child(path, "plasma_frequency"), "required");
      }
      DrudePermittivity m;
      m.plasma_frequency = non_negative(j["plasma_frequency"], child(path, "plasma_frequency"));
      if (j.contains("damping")) m.damping = non_negative(j["damping"], child(path, "damping"));
      return m;
    }
    if (type == "drude_lorentz") {
      reject_unknown(j, path, {"type", "terms"});
      if (!j.contains("terms")) throw ConfigError(child(path, "terms"), "required");
      const auto tp = child(path, "terms");
      DrudeLorentzPermittivity m;
      for (std::size_t i = 0; i < array(j["terms"], tp).size(); ++i) {
        const auto p = index(tp, i);
        const json& t = object(j["terms"][i], p);
        reject_unknown(t, p, {"strength", "resonance", "damping"});
        for (const char* key : {"strength", "resonance", "damping"}) {
          if (!t.contains(key)) throw ConfigError(child(p, key), "required");
        }
        m.terms.push_back({non_negative(t["strength"], child(p, "strength")),
                           non_negative(t["resonance"], child(p, "resonance")),
                           non_negative(t["damping"], child(p, "damping"))});
      }
      return m;
    }
    if (type == "tabulated") {
      reject_unknown(j, path, {"type", "samples"});
      if (!j.contains("samples")) throw ConfigError(child(path, "samples"), "required");
      const auto sp = child(path, "samples");
      TabulatedPermittivity m;
      for (std::size_t i = 0; i < array(j["samples"], sp).size(); ++i) {
        const auto p = index(sp, i);
        const json& s = j["samples"][i];
        if (!s.is_array() || s.size() != 3) throw ConfigError(p, "expected [omega, re, im]");
        m.samples.push_back({number(s[0], index(p, 0)),
                             {number(s[1], index(p, 1)), number(s[2], index(p, 2))}});
      }
      return m;
    }
  } catch (const DomainError& e) {
    throw ConfigError(path, e.what());
  }
  throw ConfigError(child(path, "type"),
                    "unknown dielectric type \"" + type +
                        "\" (expected constant, drude, drude_lorentz or tabulated)");
}

UnitSystem units(const json& j, const std::string& path) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "natural") return UnitSystem::natural;
    if (s == "si") return UnitSystem::si;
  }
  throw ConfigError(path, "expected \"natural\" or \"si\"");
}

}  // namespace

const char* to_string(UnitSystem u) noexcept { return u == UnitSystem::si ? "si" : "natural"; }

std::vector<double> sweep_values(double start, double stop, int count, Spacing spacing) {
  std::vector<double> v(static_cast<std::size_t>(count));
  if (count == 1) {
    v[0] = start;
    return v;
  }
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(count - 1);
    v[static_cast<std::size_t>(i)] =
        spacing == Spacing::linear
            ? start + t * (stop - start)
            : std::exp(std::log(start) + t * (std::log(stop) - std::log(start)));
  }
  // Pin the endpoints exactly.
  v.front() = start;
  v.back() = stop;
  return v;
}

PhysicalConstants PhysicalConstants::for_units(UnitSystem u) {
  if (u == UnitSystem::si) return {1.054571817e-34, 8.8541878128e-12, 299792458.0};
  return {};
}

EmissionParams RunConfig::emission(double omega0) const {
  EmissionParams p;
  p.omega0 = omega0;
  p.dipole = dipole;
  p.hbar = constants.hbar;
  p.epsilon0 = constants.epsilon0;
  p.c = constants.c;
  p.surface = surface;
  return p;
}

RunConfig parse_config(const json& doc, std::optional<UnitSystem> units_override) {
  object(doc, "<root>");
  reject_unknown(doc, "", {"units", "slab", "dielectric", "omega", "source", "emission",
                           "tolerances", "output", "identity", "limit_study", "tensor3d"});
  RunConfig cfg;
  cfg.units = doc.contains("units") ? units(doc["units"], "units") : UnitSystem::natural;
  if (units_override) cfg.units = *units_override;
  cfg.constants = PhysicalConstants::for_units(cfg.units);

  if (!doc.contains("slab")) throw ConfigError("slab", "required");
  object(doc["slab"], "slab");
  reject_unknown(doc["slab"], "slab", {"half_length"});
  if (!doc["slab"].contains("half_length")) throw ConfigError("slab.half_length", "required");
  cfg.half_length = axis(doc["slab"]["half_length"], "slab.half_length", true);

  if (!doc.contains("dielectric")) throw ConfigError("dielectric", "required");
  cfg.dielectric = dielectric(doc["dielectric"], "dielectric");

  if (!doc.contains("omega")) throw ConfigError("omega", "required");
  cfg.omega = axis(doc["omega"], "omega", true);

  if (doc.contains("source")) cfg.source = axis(doc["source"], "source", false);

  if (doc.contains("emission")) {
    const json& e = object(doc["emission"], "emission");
    reject_unknown(e, "emission", {"dipole", "hbar", "epsilon0", "c", "surface"});
    if (e.contains("dipole")) cfg.dipole = positive(e["dipole"], "emission.dipole");
    if (e.contains("surface")) cfg.surface = positive(e["surface"], "emission.surface");
    if (e.contains("hbar")) cfg.constants.hbar = positive(e["hbar"], "emission.hbar");
    if (e.contains("epsilon0")) {
      cfg.constants.epsilon0 = positive(e["epsilon0"], "emission.epsilon0");
    }
    if (e.contains("c")) cfg.constants.c = positive(e["c"], "emission.c");
  }

  if (doc.contains("tolerances")) {
    const json& t = object(doc["tolerances"], "tolerances");
    reject_unknown(t, "tolerances", {"quadrature"});
    if (t.contains("quadrature")) {
      cfg.quadrature_tol = positive(t["quadrature"], "tolerances.quadrature");
    }
  }

  if (doc.contains("output")) {
    const json& o = object(doc["output"], "output");
    reject_unknown(o, "output", {"path", "format"});
    if (o.contains("path")) {
      if (!o["path"].is_string()) throw ConfigError("output.path", "expected a string");
      cfg.output_path = o["path"].get<std::string>();
    }
    if (o.contains("format") && o["format"] != "csv") {
      throw ConfigError("output.format", "only \"csv\" is supported");
    }
  }

  if (doc.contains("identity")) {
    const json& id = object(doc["identity"], "identity");
    reject_unknown(id, "identity", {"pairs"});
    if (id.contains("pairs")) {
      const auto& pairs = array(id["pairs"], "identity.pairs");
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto p = index("identity.pairs", i);
        if (!pairs[i].is_array() || pairs[i].size() != 2) throw ConfigError(p, "expected [x_A, x_B]");
        cfg.identity_pairs.emplace_back(number(pairs[i][0], index(p, 0)),
                                        number(pairs[i][1], index(p, 1)));
      }
    }
  }

  if (doc.contains("limit_study")) {
    const json& ls = object(doc["limit_study"], "limit_study");
    reject_unknown(ls, "limit_study", {"path", "delta"});
    if (ls.contains("path") && ls.contains("delta")) {
      throw ConfigError("limit_study", "give either path or delta, not both");
    }
    if (ls.contains("path")) {
      const auto& path = array(ls["path"], "limit_study.path");
      for (std::size_t i = 0; i < path.size(); ++i) {
        const auto p = index("limit_study.path", i);
        const Complex eps = complex_number(path[i], p);
        if (eps.imag() < 0.0) throw ConfigError(p, "Im eps must be >= 0");
        cfg.limit_path.push_back(eps);
      }
    }
    if (ls.contains("delta")) {
      // ε = 1 + iδ, walked from the largest δ down.
      auto deltas = axis(ls["delta"], "limit_study.delta", true).values;
      for (auto it = deltas.rbegin(); it != deltas.rend(); ++it) {
        cfg.limit_path.emplace_back(1.0, *it);
      }
    }
  }

  if (doc.contains("tensor3d")) {
    const json& t = object(doc["tensor3d"], "tensor3d");
    reject_unknown(t, "tensor3d", {"separations", "dipole_direction"});
    if (t.contains("separations")) {
      const auto& seps = array(t["separations"], "tensor3d.separations");
      for (std::size_t i = 0; i < seps.size(); ++i) {
        const auto p = index("tensor3d.separations", i);
        const Vec3 r = vector3(seps[i], p);
        if (!(r.norm() > 0.0)) {
          throw ConfigError(p, "coincident points: the real part of the free-space tensor is "
                               "singular there (the im_G0_coincident rows cover this limit)");
        }
        cfg.separations.push_back(r);
      }
    }
    if (t.contains("dipole_direction")) {
      cfg.dipole_direction = vector3(t["dipole_direction"], "tensor3d.dipole_direction");
      if (!(cfg.dipole_direction.norm() > 0.0)) {
        throw ConfigError("tensor3d.dipole_direction", "must be nonzero");
      }
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path, std::optional<UnitSystem> units_override) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw ConfigError("<root>", std::string("malformed JSON: ") + e.what());
  }
  return parse_config(doc, units_override);
}

}  // namespace slabgreen::cli
