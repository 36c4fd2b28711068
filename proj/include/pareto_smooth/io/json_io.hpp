#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pareto_smooth/core/instance.hpp"
#include "pareto_smooth/core/transcript_types.hpp"
#include "pareto_smooth/pareto/nemhauser_ullmann.hpp"
#include "pareto_smooth/pareto/pareto.hpp"
#include "pareto_smooth/sampling/generator.hpp"

namespace pareto_smooth {

/// Malformed input file: syntax errors carry "source:line:column", schema
/// errors carry the JSON path of the offending value.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// All numbers are fixed-point numerators; F is stored once per file.

/// {n, d, F, epsilon_exponent, phi, weights, solutions, tail_objectives}
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

/// {J: [index|null], A: n x d over {0,1,null}, boxes: [{t, lattice}|null]}
Json transcript_to_json(const Transcript& tr);
Transcript transcript_from_json(const Json& j);

/// {F, optima, points}
Json pareto_result_to_json(const ParetoResult& result, FixedFormat fmt);

/// The public data plus the unmasked half of W. Entries withheld by the mask
/// are written as null, so the masked weights never appear in the file.
struct SplitFile {
  std::size_t n = 0;
  std::size_t d = 0;
  FixedFormat format;
  Epsilon epsilon;
  double phi = 1.0;
  std::vector<Solution> solutions;
  std::vector<Fixed> tail_objectives;
  FixedMatrix w_bar;
  std::size_t withheld = 0;
};

Json split_to_json(const Instance& inst, const IndexVector& j);
SplitFile split_from_json(const Json& j);

Json generator_spec_to_json(const GeneratorSpec& spec);
GeneratorSpec generator_spec_from_json(const Json& j);

using FixedKnapsackPoint = KnapsackPoint<Fixed, Fixed>;

struct KnapsackItems {
  FixedFormat format;
  std::vector<Fixed> profits;
  std::vector<Fixed> weights;
};

/// {F, profits, weights}
KnapsackItems knapsack_items_from_json(const Json& j);
Json knapsack_items_to_json(const KnapsackItems& items);
/// {F, prefixes: [[[profit, weight], ...], ...]}
Json knapsack_lists_to_json(const std::vector<std::vector<FixedKnapsackPoint>>& lists, FixedFormat fmt);

}  // namespace pareto_smooth
