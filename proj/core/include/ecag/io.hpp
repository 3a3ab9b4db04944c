#pragma once

// Text file formats. Everything is JSON; field elements and other unbounded
// integers are decimal strings, counts are JSON integers.
//
// Instance file:
//   {"q": "5", "a": ["1", "2", "3"], "b": "4", "k": 2}
//   "q" may be omitted, in which case the values are read as a plain
//   subset-sum instance and lifted to a prime field.
//
// Code file:
//   {"format": "ecag-code/1", "p": "29", "n": 3, "k": 2,
//    "generator_matrix": [["1", "1", "1"], ...],
//    "received": [...],                                  (optional)
//    "claim": {"yes_distance": 1, "no_distance": 2},     (optional)
//    "provenance": {...}}

#include <optional>
#include <string>
#include <string_view>

#include "ecag/reduction.hpp"

namespace ecag {

struct InstanceFile {
  std::optional<BigInt> q;
  std::vector<BigInt> a;
  BigInt b;
  std::size_t k = 0;

  bool operator==(const InstanceFile&) const = default;
};

struct CodeFile {
  CodeInstance code;
  std::optional<Vector> received;
  std::optional<Claim> claim;
};

std::string write_instance_file(const InstanceFile& file);
/// Throws InvalidInput on malformed text.
InstanceFile read_instance_file(std::string_view text);

/// Prime-field instance, lifting when q is absent. With `admissible` the
/// reduction constraints are enforced (InvalidInstance otherwise); without,
/// only q and k are checked, which is all the subset-sum solver needs.
SubsetSumInstance to_instance(const InstanceFile& file, Rng& rng, bool admissible = true);
InstanceFile from_instance(const SubsetSumInstance& inst);

std::string write_code_file(const CodeFile& file);
/// Throws InvalidInput on malformed text, entries >= p, or mismatched dimensions.
CodeFile read_code_file(std::string_view text);

CodeFile to_code_file(const ReductionOutput& out);

std::string write_group_params(const GroupParams& params);
GroupParams read_group_params(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace ecag
