#include "pareto_smooth/io/json_io.hpp"

#include <fstream>
#include <sstream>

namespace pareto_smooth {

namespace {

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw InputError(path + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(path + ": missing field \"" + key + "\"");
  return *it;
}

std::int64_t as_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) throw InputError(path + ": expected an integer");
  return v.get<std::int64_t>();
}

std::size_t as_size(const Json& v, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw InputError(path + ": expected a nonnegative integer");
  return v.get<std::size_t>();
}

double as_double(const Json& v, const std::string& path) {
  if (!v.is_number()) throw InputError(path + ": expected a number");
  return v.get<double>();
}

const Json& as_array(const Json& v, const std::string& path, std::optional<std::size_t> size = std::nullopt) {
  if (!v.is_array()) throw InputError(path + ": expected an array");
  if (size && v.size() != *size)
    throw InputError(path + ": expected " + std::to_string(*size) + " entries, found " + std::to_string(v.size()));
  return v;
}

std::string at(const std::string& path, std::size_t k) { return path + "[" + std::to_string(k) + "]"; }

std::vector<Solution> solutions_from(const Json& arr, const std::string& path, std::size_t n) {
  std::vector<Solution> out;
  as_array(arr, path);
  for (std::size_t k = 0; k < arr.size(); ++k) {
    if (!arr[k].is_string()) throw InputError(at(path, k) + ": expected a bitstring");
    try {
      out.push_back(Solution::from_string(arr[k].get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw InputError(at(path, k) + ": " + e.what());
    }
    if (out.back().size() != n)
      throw InputError(at(path, k) + ": bitstring has length " + std::to_string(out.back().size()) + ", expected " +
                       std::to_string(n));
  }
  return out;
}

Json solutions_to(std::span<const Solution> sols) {
  Json arr = Json::array();
  for (const auto& s : sols) arr.push_back(s.to_string());
  return arr;
}

Json fixed_array(std::span<const Fixed> v) {
  Json arr = Json::array();
  for (Fixed f : v) arr.push_back(f.raw);
  return arr;
}

std::vector<Fixed> fixed_vector(const Json& arr, const std::string& path, std::optional<std::size_t> size = std::nullopt) {
  as_array(arr, path, size);
  std::vector<Fixed> out;
  for (std::size_t k = 0; k < arr.size(); ++k) out.push_back({as_int(arr[k], at(path, k))});
  return out;
}

Json trit_json(Trit t) {
  if (t == Trit::bottom) return nullptr;
  return t == Trit::one ? 1 : 0;
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t k = 0; k < limit; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (const auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) { return parse_json_text(read_text_file(path), path); }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot open file for writing");
  out << text;
  if (!out) throw InputError(path + ": write failed");
}

Json instance_to_json(const Instance& inst) {
  Json weights = Json::array();
  for (std::size_t i = 0; i < inst.d(); ++i) weights.push_back(fixed_array(inst.weights().row(i)));
  Json j;
  j["n"] = inst.n();
  j["d"] = inst.d();
  j["F"] = inst.format().frac_bits;
  j["epsilon_exponent"] = inst.epsilon().exponent;
  j["phi"] = inst.phi();
  j["weights"] = std::move(weights);
  j["solutions"] = solutions_to(inst.solutions());
  j["tail_objectives"] = fixed_array(inst.tail_objectives());
  return j;
}

Instance instance_from_json(const Json& j) {
  const std::string root = "instance";
  const std::size_t n = as_size(field(j, "n", root), root + ".n");
  const std::size_t d = as_size(field(j, "d", root), root + ".d");
  const int f = static_cast<int>(as_int(field(j, "F", root), root + ".F"));
  const int e = static_cast<int>(as_int(field(j, "epsilon_exponent", root), root + ".epsilon_exponent"));
  const double phi = as_double(field(j, "phi", root), root + ".phi");
  const auto& wj = as_array(field(j, "weights", root), root + ".weights", d);
  FixedMatrix w(d, n);
  for (std::size_t i = 0; i < d; ++i) {
    const auto row = fixed_vector(wj[i], at(root + ".weights", i), n);
    for (std::size_t c = 0; c < n; ++c) w(i, c) = row[c];
  }
  auto sols = solutions_from(field(j, "solutions", root), root + ".solutions", n);
  auto tails = fixed_vector(field(j, "tail_objectives", root), root + ".tail_objectives", sols.size());
  try {
    return Instance(n, d, FixedFormat{f}, Epsilon{e}, phi, std::move(sols), std::move(w), std::move(tails));
  } catch (const std::invalid_argument& ex) {
    throw InputError(std::string(ex.what()));
  }
}

Json transcript_to_json(const Transcript& tr) {
  Json jj = Json::array();
  for (const auto& e : tr.j.entries()) jj.push_back(e ? Json(*e) : Json(nullptr));
  Json a = Json::array();
  for (std::size_t c = 0; c < tr.a.n(); ++c) {
    Json row = Json::array();
    for (Trit t : tr.a.row(c)) row.push_back(trit_json(t));
    a.push_back(std::move(row));
  }
  Json boxes = Json::array();
  for (const auto& b : tr.boxes) {
    if (!b) {
      boxes.push_back(nullptr);
      continue;
    }
    boxes.push_back({{"t", b->dim()}, {"lattice", b->lattice}});
  }
  return {{"J", std::move(jj)}, {"A", std::move(a)}, {"boxes", std::move(boxes)}};
}

Transcript transcript_from_json(const Json& j) {
  const std::string root = "transcript";
  const auto& jj = as_array(field(j, "J", root), root + ".J");
  const std::size_t d = jj.size();
  Transcript tr;
  tr.j = IndexVector(d);
  for (std::size_t t = 0; t < d; ++t)
    if (!jj[t].is_null()) tr.j[t] = as_size(jj[t], at(root + ".J", t));
  const auto& a = as_array(field(j, "A", root), root + ".A");
  tr.a = DiagMatrix(a.size(), d);
  for (std::size_t c = 0; c < a.size(); ++c) {
    const auto& row = as_array(a[c], at(root + ".A", c), d);
    for (std::size_t t = 0; t < d; ++t) {
      const std::string p = at(at(root + ".A", c), t);
      if (row[t].is_null()) {
        tr.a(c, t) = Trit::bottom;
      } else {
        const auto v = as_int(row[t], p);
        if (v != 0 && v != 1) throw InputError(p + ": expected 0, 1 or null");
        tr.a(c, t) = trit_of(v == 1);
      }
    }
  }
  const auto& boxes = as_array(field(j, "boxes", root), root + ".boxes", d);
  tr.boxes.resize(d);
  for (std::size_t t = 0; t < d; ++t) {
    if (boxes[t].is_null()) continue;
    const std::string p = at(root + ".boxes", t);
    const std::size_t dim_t = as_size(field(boxes[t], "t", p), p + ".t");
    const auto& lat = as_array(field(boxes[t], "lattice", p), p + ".lattice", dim_t);
    Box b;
    for (std::size_t i = 0; i < dim_t; ++i) b.lattice.push_back(as_int(lat[i], at(p + ".lattice", i)));
    tr.boxes[t] = std::move(b);
  }
  return tr;
}

Json pareto_result_to_json(const ParetoResult& result, FixedFormat fmt) {
  Json points = Json::array();
  for (const auto& p : result.points) points.push_back(fixed_array(p));
  return {{"F", fmt.frac_bits}, {"optima", result.optima}, {"points", std::move(points)}};
}

Json split_to_json(const Instance& inst, const IndexVector& jv) {
  const MaskMatrix mask = mask_matrix(jv, inst.n(), inst.d());
  Json w_bar = Json::array();
  for (std::size_t i = 0; i < inst.d(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < inst.n(); ++c) row.push_back(mask(i, c) ? Json(nullptr) : Json(inst.weights()(i, c).raw));
    w_bar.push_back(std::move(row));
  }
  Json j;
  j["n"] = inst.n();
  j["d"] = inst.d();
  j["F"] = inst.format().frac_bits;
  j["epsilon_exponent"] = inst.epsilon().exponent;
  j["phi"] = inst.phi();
  j["w_bar"] = std::move(w_bar);
  j["solutions"] = solutions_to(inst.solutions());
  j["tail_objectives"] = fixed_array(inst.tail_objectives());
  return j;
}

SplitFile split_from_json(const Json& j) {
  const std::string root = "split";
  SplitFile s;
  s.n = as_size(field(j, "n", root), root + ".n");
  s.d = as_size(field(j, "d", root), root + ".d");
  s.format = FixedFormat{static_cast<int>(as_int(field(j, "F", root), root + ".F"))};
  s.epsilon = Epsilon{static_cast<int>(as_int(field(j, "epsilon_exponent", root), root + ".epsilon_exponent"))};
  s.phi = as_double(field(j, "phi", root), root + ".phi");
  if (s.format.frac_bits < 0 || s.format.frac_bits > kMaxFracBits || s.epsilon.exponent < 0 ||
      s.epsilon.exponent > s.format.frac_bits)
    throw InputError(root + ": need 0 <= epsilon_exponent <= F <= " + std::to_string(kMaxFracBits));
  const auto& wj = as_array(field(j, "w_bar", root), root + ".w_bar", s.d);
  s.w_bar = FixedMatrix(s.d, s.n);
  for (std::size_t i = 0; i < s.d; ++i) {
    const auto& row = as_array(wj[i], at(root + ".w_bar", i), s.n);
    for (std::size_t c = 0; c < s.n; ++c) {
      if (row[c].is_null()) {
        ++s.withheld;
        continue;
      }
      s.w_bar(i, c) = {as_int(row[c], at(at(root + ".w_bar", i), c))};
    }
  }
  s.solutions = solutions_from(field(j, "solutions", root), root + ".solutions", s.n);
  s.tail_objectives = fixed_vector(field(j, "tail_objectives", root), root + ".tail_objectives", s.solutions.size());
  return s;
}

Json generator_spec_to_json(const GeneratorSpec& spec) {
  return {{"family", std::string(to_string(spec.family))},
          {"n", spec.n},
          {"d", spec.d},
          {"m", spec.m},
          {"phi", spec.phi},
          {"distribution", std::string(to_string(spec.distribution))},
          {"seed", spec.seed},
          {"F", spec.frac_bits},
          {"epsilon_exponent", spec.epsilon_exponent},
          {"center", spec.center},
          {"random_centers", spec.random_centers}};
}

GeneratorSpec generator_spec_from_json(const Json& j) {
  const std::string root = "generator";
  if (!j.is_object()) throw InputError(root + ": expected an object");
  GeneratorSpec s;
  try {
    if (j.contains("family")) s.family = family_from_string(j.at("family").get<std::string>());
    if (j.contains("distribution"))
      s.distribution = distribution_kind_from_string(j.at("distribution").get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(root + ": " + e.what());
  } catch (const Json::exception& e) {
    throw InputError(root + ": family and distribution must be strings");
  }
  if (j.contains("n")) s.n = as_size(j["n"], root + ".n");
  if (j.contains("d")) s.d = as_size(j["d"], root + ".d");
  if (j.contains("m")) s.m = as_size(j["m"], root + ".m");
  if (j.contains("phi")) s.phi = as_double(j["phi"], root + ".phi");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer()) throw InputError(root + ".seed: expected an integer");
    s.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("F")) s.frac_bits = static_cast<int>(as_int(j["F"], root + ".F"));
  if (j.contains("epsilon_exponent"))
    s.epsilon_exponent = static_cast<int>(as_int(j["epsilon_exponent"], root + ".epsilon_exponent"));
  if (j.contains("center")) s.center = as_double(j["center"], root + ".center");
  if (j.contains("random_centers")) {
    if (!j["random_centers"].is_boolean()) throw InputError(root + ".random_centers: expected a boolean");
    s.random_centers = j["random_centers"].get<bool>();
  }
  return s;
}

KnapsackItems knapsack_items_from_json(const Json& j) {
  const std::string root = "items";
  KnapsackItems items;
  items.format = FixedFormat{static_cast<int>(as_int(field(j, "F", root), root + ".F"))};
  items.profits = fixed_vector(field(j, "profits", root), root + ".profits");
  items.weights = fixed_vector(field(j, "weights", root), root + ".weights", items.profits.size());
  return items;
}

Json knapsack_items_to_json(const KnapsackItems& items) {
  return {{"F", items.format.frac_bits}, {"profits", fixed_array(items.profits)}, {"weights", fixed_array(items.weights)}};
}

Json knapsack_lists_to_json(const std::vector<std::vector<FixedKnapsackPoint>>& lists, FixedFormat fmt) {
  Json prefixes = Json::array();
  for (const auto& list : lists) {
    Json l = Json::array();
    for (const auto& p : list) l.push_back({p.profit.raw, p.weight.raw});
    prefixes.push_back(std::move(l));
  }
  return {{"F", fmt.frac_bits}, {"prefixes", std::move(prefixes)}};
}

}  // namespace pareto_smooth
