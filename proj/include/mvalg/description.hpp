#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mvalg/algebra.hpp"
#include "mvalg/signature.hpp"

namespace mvalg {

enum class DescriptionKind { Chain, Product, Table, Signature };

/// Parsed form of an input file: one of the four description kinds, plus a
/// normalized JSON echo used verbatim in reports.
struct AlgebraDescription {
  DescriptionKind kind = DescriptionKind::Chain;

  int chain_n = 0;
  std::vector<int> product_sizes;

  std::vector<std::string> table_names;
  std::vector<std::vector<std::string>> table_oplus;
  std::vector<std::string> table_neg;
  std::string table_zero;

  std::optional<SpectralSignature> signature;

  nlohmann::json echo;

  bool is_algebra() const { return kind != DescriptionKind::Signature; }
};

/// Parses and schema-checks a description; throws InvalidParameterError with
/// field context on any violation.
AlgebraDescription parse_description(const std::string& text);

/// Builds the described algebra (algebra kinds only).
AlgebraPtr build_algebra(const AlgebraDescription& d, const Limits& limits = default_limits());

nlohmann::json signature_to_json(const SpectralSignature& s);
SpectralSignature signature_from_json(const nlohmann::json& j);

}  // namespace mvalg
