#include "mvalg/description.hpp"

#include <algorithm>
#include <set>

namespace mvalg {

using nlohmann::json;

namespace {

json card_to_json(const Card& c) {
  if (c.is_countable()) return json("countable");
  return json(c.value());
}

Card card_from_json(const json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() == "countable") return Card::countable();
    throw InvalidParameterError(where + ": expected a count or \"countable\"");
  }
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0))
    return Card::finite(j.get<std::uint64_t>());
  throw InvalidParameterError(where + ": expected a nonnegative count or \"countable\"");
}

json family_to_json(const RankFamily& f) {
  if (f.step == 1) return json{{"all_ranks_from", f.first}};
  return json{{"arithmetic", {{"first", f.first}, {"step", f.step}}}};
}

RankFamily family_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw InvalidParameterError(where + ": family must be an object");
  if (j.contains("all_ranks_from")) {
    if (!j["all_ranks_from"].is_number_integer())
      throw InvalidParameterError(where + ".all_ranks_from must be an integer");
    return RankFamily::all_from(j["all_ranks_from"].get<int>());
  }
  if (j.contains("arithmetic")) {
    const json& a = j["arithmetic"];
    if (!a.is_object() || !a.contains("first") || !a.contains("step"))
      throw InvalidParameterError(where + ".arithmetic needs integer fields first and step");
    return RankFamily::arithmetic(a["first"].get<int>(), a["step"].get<int>());
  }
  throw InvalidParameterError(where + ": unknown family (use all_ranks_from or arithmetic)");
}

std::map<int, Card> counts_from_json(const json& j, const std::string& where, int min_key) {
  std::map<int, Card> out;
  if (!j.is_object()) throw InvalidParameterError(where + " must be an object of counts");
  for (auto it = j.begin(); it != j.end(); ++it) {
    int key = 0;
    try {
      key = std::stoi(it.key());
    } catch (...) {
      throw InvalidParameterError(where + ": key '" + it.key() + "' is not an integer");
    }
    if (key < min_key)
      throw InvalidParameterError(where + ": key " + it.key() + " below " +
                                  std::to_string(min_key));
    out.emplace(key, card_from_json(it.value(), where + "." + it.key()));
  }
  return out;
}

json counts_to_json(const std::map<int, Card>& m) {
  json out = json::object();
  for (const auto& [k, c] : m)
    if (!c.is_zero()) out[std::to_string(k)] = card_to_json(c);
  return out;
}

}  // namespace

json signature_to_json(const SpectralSignature& s) {
  json out;
  out["kind"] = "signature";
  out["finite_part"] = counts_to_json(s.ranks.explicit_part);
  if (s.ranks.family) out["family"] = family_to_json(*s.ranks.family);
  out["infinite_rank_count"] = card_to_json(s.infinite_rank_count);
  if (s.atom_orders) {
    json ao;
    ao["explicit"] = counts_to_json(s.atom_orders->explicit_part);
    if (s.atom_orders->family) ao["family"] = family_to_json(*s.atom_orders->family);
    out["atom_orders"] = ao;
  }
  out["is_atomic"] = s.is_atomic;
  return out;
}

SpectralSignature signature_from_json(const json& j) {
  SpectralSignature s;
  if (j.contains("builtin")) {
    const std::string which = j["builtin"].get<std::string>();
    if (which != "convergent")
      throw InvalidParameterError("unknown builtin signature '" + which + "'");
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it.key() != "builtin" && it.key() != "kind")
        throw InvalidParameterError("builtin signatures take no other fields (got '" + it.key() +
                                    "')");
    return builtin_example_convergent();
  }

  if (j.contains("finite_part"))
    s.ranks.explicit_part = counts_from_json(j["finite_part"], "finite_part", 2);
  if (j.contains("family")) s.ranks.family = family_from_json(j["family"], "family");
  if (j.contains("infinite_rank_count"))
    s.infinite_rank_count = card_from_json(j["infinite_rank_count"], "infinite_rank_count");
  if (j.contains("atom_orders")) {
    const json& ao = j["atom_orders"];
    SymbolicCounts counts;
    if (ao.is_object() && (ao.contains("explicit") || ao.contains("family"))) {
      if (ao.contains("explicit"))
        counts.explicit_part = counts_from_json(ao["explicit"], "atom_orders.explicit", 1);
      if (ao.contains("family"))
        counts.family = family_from_json(ao["family"], "atom_orders.family");
    } else {
      counts.explicit_part = counts_from_json(ao, "atom_orders", 1);
    }
    s.atom_orders = std::move(counts);
  }
  if (j.contains("is_atomic")) {
    if (!j["is_atomic"].is_boolean())
      throw InvalidParameterError("is_atomic must be a boolean");
    s.is_atomic = j["is_atomic"].get<bool>();
  }
  s.validate();
  return s;
}

AlgebraDescription parse_description(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidParameterError(std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw InvalidParameterError("description must be an object with a string field 'kind'");

  AlgebraDescription d;
  const std::string kind = j["kind"].get<std::string>();

  if (kind == "chain") {
    d.kind = DescriptionKind::Chain;
    if (!j.contains("n") || !j["n"].is_number_integer())
      throw InvalidParameterError("chain description needs an integer field 'n'");
    d.chain_n = j["n"].get<int>();
    if (d.chain_n < 2) throw InvalidParameterError("chain size must be at least 2");
    d.echo = json{{"kind", "chain"}, {"n", d.chain_n}};
  } else if (kind == "product") {
    d.kind = DescriptionKind::Product;
    if (!j.contains("chains") || !j["chains"].is_array() || j["chains"].empty())
      throw InvalidParameterError("product description needs a nonempty array 'chains'");
    for (const json& e : j["chains"]) {
      if (!e.is_number_integer() || e.get<int>() < 2)
        throw InvalidParameterError("every entry of 'chains' must be an integer ≥ 2");
      d.product_sizes.push_back(e.get<int>());
    }
    d.echo = json{{"kind", "product"}, {"chains", d.product_sizes}};
  } else if (kind == "table") {
    d.kind = DescriptionKind::Table;
    if (!j.contains("elements") || !j["elements"].is_array() || j["elements"].empty())
      throw InvalidParameterError("table description needs a nonempty array 'elements'");
    for (const json& e : j["elements"]) d.table_names.push_back(e.get<std::string>());
    {
      std::set<std::string> unique(d.table_names.begin(), d.table_names.end());
      if (unique.size() != d.table_names.size())
        throw InvalidParameterError("element names must be unique");
    }
    if (!j.contains("oplus") || !j["oplus"].is_array() ||
        j["oplus"].size() != d.table_names.size())
      throw InvalidParameterError("'oplus' must be a square table over the elements");
    for (const json& row : j["oplus"]) {
      if (!row.is_array() || row.size() != d.table_names.size())
        throw InvalidParameterError("'oplus' must be a square table over the elements");
      std::vector<std::string> r;
      for (const json& e : row) r.push_back(e.get<std::string>());
      d.table_oplus.push_back(std::move(r));
    }
    if (!j.contains("neg") || !j["neg"].is_array() || j["neg"].size() != d.table_names.size())
      throw InvalidParameterError("'neg' must list one element per carrier element");
    for (const json& e : j["neg"]) d.table_neg.push_back(e.get<std::string>());
    if (!j.contains("zero") || !j["zero"].is_string())
      throw InvalidParameterError("table description needs a string field 'zero'");
    d.table_zero = j["zero"].get<std::string>();
    d.echo = json{{"kind", "table"},
                  {"elements", d.table_names},
                  {"oplus", d.table_oplus},
                  {"neg", d.table_neg},
                  {"zero", d.table_zero}};
  } else if (kind == "signature") {
    d.kind = DescriptionKind::Signature;
    d.signature = signature_from_json(j);
    d.echo = signature_to_json(*d.signature);
  } else {
    throw InvalidParameterError("unknown kind '" + kind +
                                "' (expected chain, product, table or signature)");
  }
  return d;
}

AlgebraPtr build_algebra(const AlgebraDescription& d, const Limits& limits) {
  switch (d.kind) {
    case DescriptionKind::Chain:
      return make_chain(d.chain_n, limits);
    case DescriptionKind::Product:
      return make_product(d.product_sizes, limits);
    case DescriptionKind::Table:
      return make_table(d.table_names, d.table_oplus, d.table_neg, d.table_zero, limits);
    case DescriptionKind::Signature:
      throw InvalidParameterError("signature descriptions do not build an algebra");
  }
  throw InvalidParameterError("unknown description kind");
}

}  // namespace mvalg
