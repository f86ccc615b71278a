#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mislin/genus.hpp"
#include "mislin/int_matrix.hpp"
#include "mislin/space_model.hpp"

namespace mislin {

// Parsed form of the JSON input document:
// {
//   "flavor": "H" | "coH",
//   "X": [ {"n": 3, "rank": 1, "ker_exp": 3, "coker_exp": 1, "torsion_exp": 5}, ... ],
//   "Y": [ ... ],
//   "f": [ {"n": 3, "C": {"rows": 1, "cols": 1, "entries": [1]}}, ... ],
//   "selfmap_images": [ [2], ... ]            (optional)
// }
// Unknown keys are rejected at every level. Degree records may omit rank and
// exponents (defaulting to rank 0 / exponent 1); "n" is required.
struct InputDocument {
  MapModel model;
  std::vector<std::vector<Int>> selfmap_images;
};

namespace io_detail {

using json = nlohmann::json;

inline void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                           const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key))
      throw std::invalid_argument("input: " + where + ": unknown key \"" + key + "\"");
  }
}

inline const json& require(const json& obj, const std::string& key,
                           const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw std::invalid_argument("input: " + where + ": missing key \"" + key + "\"");
  return *it;
}

inline long as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer())
    throw std::invalid_argument("input: " + where + ": expected an integer");
  return static_cast<long>(v.get<long long>());
}

inline DegreeData parse_degree(const json& rec, const std::string& where) {
  if (!rec.is_object())
    throw std::invalid_argument("input: " + where + ": expected an object");
  reject_unknown(rec, {"n", "rank", "ker_exp", "coker_exp", "torsion_exp"}, where);
  DegreeData d;
  d.degree = static_cast<int>(as_int(require(rec, "n", where), where + ".n"));
  if (rec.contains("rank")) d.rank = as_int(rec["rank"], where + ".rank");
  if (rec.contains("ker_exp")) d.ker_exp = as_int(rec["ker_exp"], where + ".ker_exp");
  if (rec.contains("coker_exp"))
    d.coker_exp = as_int(rec["coker_exp"], where + ".coker_exp");
  if (rec.contains("torsion_exp"))
    d.torsion_exp = as_int(rec["torsion_exp"], where + ".torsion_exp");
  return d;
}

inline IntMatrix parse_matrix(const json& m, const std::string& where) {
  if (!m.is_object())
    throw std::invalid_argument("input: " + where + ": expected an object");
  reject_unknown(m, {"rows", "cols", "entries"}, where);
  long rows = as_int(require(m, "rows", where), where + ".rows");
  long cols = as_int(require(m, "cols", where), where + ".cols");
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("input: " + where + ": negative dimension");
  const json& entries = require(m, "entries", where);
  if (!entries.is_array())
    throw std::invalid_argument("input: " + where + ".entries: expected an array");
  if (entries.size() != static_cast<std::size_t>(rows * cols))
    throw std::invalid_argument(
        "input: " + where + ".entries: length " + std::to_string(entries.size()) +
        " does not match " + std::to_string(rows) + "x" + std::to_string(cols));
  IntMatrix out(rows, cols);
  std::size_t idx = 0;
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) {
      out(i, j) = Int(as_int(entries[idx], where + ".entries[" +
                                               std::to_string(idx) + "]"));
      ++idx;
    }
  return out;
}

inline SpaceModel parse_space(const json& arr, Flavor flavor, const std::string& name) {
  if (!arr.is_array())
    throw std::invalid_argument("input: " + name + ": expected an array of degree records");
  std::vector<DegreeData> recs;
  for (std::size_t i = 0; i < arr.size(); ++i)
    recs.push_back(parse_degree(arr[i], name + "[" + std::to_string(i) + "]"));
  return make_space(flavor, recs);
}

}  // namespace io_detail

inline InputDocument parse_input(const std::string& text) {
  using io_detail::json;
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("input: not valid JSON: ") + e.what());
  }
  if (!root.is_object())
    throw std::invalid_argument("input: top level must be an object");
  io_detail::reject_unknown(root, {"flavor", "X", "Y", "f", "selfmap_images"}, "top level");

  const json& fl = io_detail::require(root, "flavor", "top level");
  if (!fl.is_string() || (fl.get<std::string>() != "H" && fl.get<std::string>() != "coH"))
    throw std::invalid_argument("input: flavor: expected \"H\" or \"coH\"");
  Flavor flavor = fl.get<std::string>() == "H" ? Flavor::h_space : Flavor::co_h_space;

  SpaceModel x =
      io_detail::parse_space(io_detail::require(root, "X", "top level"), flavor, "X");
  SpaceModel y =
      io_detail::parse_space(io_detail::require(root, "Y", "top level"), flavor, "Y");

  const json& f = io_detail::require(root, "f", "top level");
  if (!f.is_array())
    throw std::invalid_argument("input: f: expected an array of matrix records");
  std::map<int, IntMatrix> c;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::string where = "f[" + std::to_string(i) + "]";
    const json& rec = f[i];
    if (!rec.is_object())
      throw std::invalid_argument("input: " + where + ": expected an object");
    io_detail::reject_unknown(rec, {"n", "C"}, where);
    int n = static_cast<int>(
        io_detail::as_int(io_detail::require(rec, "n", where), where + ".n"));
    IntMatrix mat = io_detail::parse_matrix(io_detail::require(rec, "C", where),
                                            where + ".C (degree " + std::to_string(n) + ")");
    if (!c.emplace(n, std::move(mat)).second)
      throw std::invalid_argument("input: f: duplicate degree " + std::to_string(n));
  }

  InputDocument doc;
  doc.model = make_map_model(x, y, c);

  if (root.contains("selfmap_images")) {
    const json& imgs = root["selfmap_images"];
    if (!imgs.is_array())
      throw std::invalid_argument("input: selfmap_images: expected an array of tuples");
    for (std::size_t i = 0; i < imgs.size(); ++i) {
      const std::string where = "selfmap_images[" + std::to_string(i) + "]";
      if (!imgs[i].is_array())
        throw std::invalid_argument("input: " + where + ": expected an array");
      std::vector<Int> tuple;
      for (std::size_t j = 0; j < imgs[i].size(); ++j)
        tuple.emplace_back(io_detail::as_int(imgs[i][j],
                                             where + "[" + std::to_string(j) + "]"));
      doc.selfmap_images.push_back(std::move(tuple));
    }
  }
  return doc;
}

inline InputDocument load_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("input: cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

// Machine report with a fixed key order so equal reports serialize to equal
// bytes: {"t_hat":..., "k":..., "upper_bound":[...], "genus_group":[...]},
// groups as ascending invariant-factor lists.
inline std::string genus_report_json(const GenusReport& rep) {
  nlohmann::ordered_json out;
  if (rep.t_hat_value.fits_slong_p())
    out["t_hat"] = static_cast<long long>(rep.t_hat_value.get_si());
  else
    out["t_hat"] = rep.t_hat_value.get_str();
  out["k"] = rep.k;
  auto factors = [](const FinAbGroup& g) {
    std::vector<long long> v;
    for (const Int& d : g.invariant_factors)
      v.push_back(static_cast<long long>(d.get_si()));
    return v;
  };
  out["upper_bound"] = factors(rep.upper_bound);
  out["genus_group"] = factors(rep.genus);
  return out.dump();
}

}  // namespace mislin
