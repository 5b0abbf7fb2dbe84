#include "walkbound/config.hpp"

namespace walkbound {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw InputError(field + ": " + what);
}

const json& require(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing required field");
  return *it;
}

long get_long(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

Int get_int(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      fail(path, "not an integer literal");
    }
  }
  fail(path, "expected an integer or integer string");
}

Rat get_rational(const json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    fail(path, e.what());
  }
  fail(path, "expected a rational \"a/b\" string");
}

GroupSpec parse_group(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  int free_rank = 0;
  std::vector<Int> torsion;
  if (j.contains("free_rank"))
    free_rank = static_cast<int>(get_long(j["free_rank"], path + ".free_rank"));
  if (j.contains("torsion")) {
    const json& t = j["torsion"];
    if (!t.is_array()) fail(path + ".torsion", "expected an array");
    for (size_t i = 0; i < t.size(); ++i)
      torsion.push_back(
          get_int(t[i], path + ".torsion[" + std::to_string(i) + "]"));
  }
  try {
    return GroupSpec::make(free_rank, std::move(torsion));
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

GroupElement parse_element(const json& j, const GroupSpec& g,
                           const std::string& path) {
  if (!j.is_array()) fail(path, "expected a coordinate array");
  std::vector<Int> coords;
  for (size_t i = 0; i < j.size(); ++i)
    coords.push_back(get_int(j[i], path + "[" + std::to_string(i) + "]"));
  try {
    return g.reduce(std::move(coords));
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

JumpMeasure parse_measure(const json& j, const GroupSpec& g,
                          const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const json& sup = require(j, "support", path);
  const json& wts = require(j, "weights", path);
  if (!sup.is_array()) fail(path + ".support", "expected an array");
  if (!wts.is_array()) fail(path + ".weights", "expected an array");
  std::vector<GroupElement> support;
  std::vector<Rat> weights;
  for (size_t i = 0; i < sup.size(); ++i)
    support.push_back(
        parse_element(sup[i], g, path + ".support[" + std::to_string(i) + "]"));
  for (size_t i = 0; i < wts.size(); ++i)
    weights.push_back(
        get_rational(wts[i], path + ".weights[" + std::to_string(i) + "]"));
  try {
    return JumpMeasure::create(g, std::move(support), std::move(weights));
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

Angle parse_angle(const json& j, const std::string& path) {
  if (j.is_string() || j.is_number_integer())
    return Angle::of_rational(get_rational(j, path));
  if (!j.is_object()) fail(path, "expected an angle object or \"a/b\" string");
  Angle a;
  if (j.contains("rational"))
    a.rational_part = get_rational(j["rational"], path + ".rational");
  if (j.contains("symbols")) {
    const json& syms = j["symbols"];
    if (!syms.is_object()) fail(path + ".symbols", "expected an object");
    for (const auto& [name, coeff] : syms.items())
      a.symbols[name] = get_rational(coeff, path + ".symbols." + name);
  }
  return a.normalized();
}

TargetAction parse_action(const json& j, const GroupSpec& g,
                          const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  int torus_dim = 0;
  std::vector<std::vector<Angle>> torus(g.dim());
  if (j.contains("torus")) {
    const json& t = j["torus"];
    if (!t.is_array() || static_cast<int>(t.size()) != g.dim())
      fail(path + ".torus", "expected one angle list per group generator (" +
                                std::to_string(g.dim()) + ")");
    for (int i = 0; i < g.dim(); ++i) {
      const json& lst = t[i];
      std::string lpath = path + ".torus[" + std::to_string(i) + "]";
      if (!lst.is_array()) fail(lpath, "expected an array of angles");
      if (i == 0)
        torus_dim = static_cast<int>(lst.size());
      else if (static_cast<int>(lst.size()) != torus_dim)
        fail(lpath, "angle lists must all have the same length");
      for (size_t k = 0; k < lst.size(); ++k)
        torus[i].push_back(
            parse_angle(lst[k], lpath + "[" + std::to_string(k) + "]"));
    }
  }
  GroupSpec finite = GroupSpec::make(0, {});
  std::vector<GroupElement> fin_images(g.dim());
  if (j.contains("finite")) {
    const json& f = j["finite"];
    if (!f.is_object()) fail(path + ".finite", "expected an object");
    json fin_group;
    fin_group["free_rank"] = 0;
    if (f.contains("torsion")) fin_group["torsion"] = f["torsion"];
    finite = parse_group(fin_group, path + ".finite");
    const json& imgs = require(f, "images", path + ".finite");
    if (!imgs.is_array() || static_cast<int>(imgs.size()) != g.dim())
      fail(path + ".finite.images",
           "expected one image per group generator (" +
               std::to_string(g.dim()) + ")");
    for (int i = 0; i < g.dim(); ++i)
      fin_images[i] =
          parse_element(imgs[i], finite,
                        path + ".finite.images[" + std::to_string(i) + "]");
  } else {
    for (int i = 0; i < g.dim(); ++i) fin_images[i] = finite.zero();
  }
  std::vector<ActionImage> images(g.dim());
  for (int i = 0; i < g.dim(); ++i) {
    images[i].angles = std::move(torus[i]);
    images[i].finite = std::move(fin_images[i]);
  }
  try {
    return TargetAction::make(g, torus_dim, std::move(finite),
                              std::move(images));
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

TaskParams parse_task(const json& j, const std::string& path) {
  TaskParams t;
  if (!j.is_object()) fail(path, "expected an object");
  if (j.contains("aperiodicity_bound"))
    t.aperiodicity_bound =
        get_long(j["aperiodicity_bound"], path + ".aperiodicity_bound");
  if (j.contains("n_max")) t.n_max = get_long(j["n_max"], path + ".n_max");
  if (j.contains("seed")) {
    const json& s = j["seed"];
    if (!s.is_number_unsigned() && !s.is_number_integer())
      fail(path + ".seed", "expected an integer");
    t.seed = s.get<std::uint64_t>();
  }
  if (j.contains("n_paths"))
    t.n_paths = get_long(j["n_paths"], path + ".n_paths");
  if (j.contains("n_steps"))
    t.n_steps = get_long(j["n_steps"], path + ".n_steps");
  if (t.aperiodicity_bound < 1)
    fail(path + ".aperiodicity_bound", "must be >= 1");
  if (t.n_max < 1) fail(path + ".n_max", "must be >= 1");
  if (t.n_paths < 1) fail(path + ".n_paths", "must be >= 1");
  if (t.n_steps < 0) fail(path + ".n_steps", "must be nonnegative");
  return t;
}

}  // namespace

SystemConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw InputError("config root must be a JSON object");
  SystemConfig c;
  c.group = parse_group(require(doc, "group", "config"), "config.group");
  c.measure =
      parse_measure(require(doc, "measure", "config"), c.group, "config.measure");
  if (doc.contains("action") && !doc["action"].is_null())
    c.action = parse_action(doc["action"], c.group, "config.action");
  if (doc.contains("task")) c.task = parse_task(doc["task"], "config.task");
  return c;
}

namespace {

ordered_json int_to_json(const Int& v) {
  return to_int64(v);  // desk-scale values; larger ones fail loudly
}

ordered_json element_to_json(const GroupElement& e) {
  ordered_json arr = ordered_json::array();
  for (const Int& c : e.coords) arr.push_back(int_to_json(c));
  return arr;
}

ordered_json angle_to_json(const Angle& a) {
  ordered_json j;
  j["rational"] = rational_to_string(a.rational_part);
  if (!a.symbols.empty()) {
    ordered_json syms;
    for (const auto& [name, c] : a.symbols) syms[name] = rational_to_string(c);
    j["symbols"] = syms;
  }
  return j;
}

}  // namespace

ordered_json config_to_json(const SystemConfig& config) {
  ordered_json j;
  j["group"]["free_rank"] = config.group.free_rank;
  j["group"]["torsion"] = ordered_json::array();
  for (const Int& m : config.group.torsion)
    j["group"]["torsion"].push_back(int_to_json(m));
  j["measure"]["support"] = ordered_json::array();
  for (const GroupElement& s : config.measure.support)
    j["measure"]["support"].push_back(element_to_json(s));
  j["measure"]["weights"] = ordered_json::array();
  for (const Rat& w : config.measure.weights)
    j["measure"]["weights"].push_back(rational_to_string(w));
  if (config.action) {
    const TargetAction& a = *config.action;
    ordered_json act = ordered_json::object();
    if (a.torus_dim > 0) {
      ordered_json torus = ordered_json::array();
      for (const ActionImage& img : a.images) {
        ordered_json lst = ordered_json::array();
        for (const Angle& ang : img.angles) lst.push_back(angle_to_json(ang));
        torus.push_back(lst);
      }
      act["torus"] = torus;
    }
    if (a.finite_part.dim() > 0) {
      ordered_json fin;
      fin["torsion"] = ordered_json::array();
      for (const Int& m : a.finite_part.torsion)
        fin["torsion"].push_back(int_to_json(m));
      fin["images"] = ordered_json::array();
      for (const ActionImage& img : a.images)
        fin["images"].push_back(element_to_json(img.finite));
      act["finite"] = fin;
    }
    j["action"] = act;
  }
  j["task"]["aperiodicity_bound"] = config.task.aperiodicity_bound;
  j["task"]["n_max"] = config.task.n_max;
  j["task"]["seed"] = config.task.seed;
  j["task"]["n_paths"] = config.task.n_paths;
  j["task"]["n_steps"] = config.task.n_steps;
  return j;
}

}  // namespace walkbound
