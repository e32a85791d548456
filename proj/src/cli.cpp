#include "mvalg/cli.hpp"

#include <algorithm>
#include <sstream>

#include "mvalg/completion.hpp"

namespace mvalg::cli {

using nlohmann::json;

namespace {

json ideal_to_json(const Ideal& i) {
  json members = json::array();
  for (std::size_t x : i.members().members())
    members.push_back(i.algebra()->name(static_cast<ElementId>(x)));
  return json{{"members", members}};
}

struct WitnessContext {
  std::string label;
  AlgebraPtr source;
  AlgebraPtr target;
};

json witness_to_json(const std::string& label, const IsoWitness& w) {
  json map = json::array();
  for (ElementId x = 0; x < w.forward.source->size(); ++x)
    map.push_back(json::array(
        {w.forward.source->name(x), w.forward.target->name(w.forward.map[x])}));
  json inv = json::array();
  for (ElementId y = 0; y < w.inverse.source->size(); ++y)
    inv.push_back(json::array(
        {w.inverse.source->name(y), w.inverse.target->name(w.inverse.map[y])}));
  return json{{"label", label},
              {"source", w.forward.source->provenance().str()},
              {"target", w.forward.target->provenance().str()},
              {"size", w.forward.source->size()},
              {"map", map},
              {"inverse", inv}};
}

json multiset_to_json(const ChainMultiset& m) {
  json out = json::array();
  for (int n : m.sorted_entries()) out.push_back(n);
  return out;
}

struct Builder {
  const Options& opts;
  AlgebraDescription desc;
  std::optional<AlgebraDescription> other;

  json result{json::object()};
  json witnesses{json::array()};
  json diagnostics{json::array()};
  std::vector<WitnessContext> contexts;
  int exit_code = kExitOk;

  void add_witness(const std::string& label, const IsoWitness& w) {
    witnesses.push_back(witness_to_json(label, w));
    contexts.push_back(WitnessContext{label, w.forward.source, w.forward.target});
  }

  AlgebraPtr algebra() const {
    if (!desc.is_algebra())
      throw InvalidParameterError("command '" + opts.command +
                                  "' expects an algebra description (chain, product or table)");
    return build_algebra(desc, opts.limits);
  }

  AlgebraPtr other_algebra() const {
    if (!other) throw InvalidParameterError("command requires a second description (--other)");
    if (!other->is_algebra())
      throw InvalidParameterError("the --other description must be an algebra");
    return build_algebra(*other, opts.limits);
  }

  SpectralSignature signature() const {
    if (desc.kind == DescriptionKind::Signature) return *desc.signature;
    return sig_of_finite_algebra(algebra());
  }

  SpectralSignature other_signature() const {
    if (!other) throw InvalidParameterError("command requires a second description (--other)");
    if (other->kind == DescriptionKind::Signature) return *other->signature;
    return sig_of_finite_algebra(build_algebra(*other, opts.limits));
  }
};

// ---------------------------------------------------------------------------
// Command handlers

void run_validate(Builder& b) {
  if (b.desc.kind == DescriptionKind::Signature) {
    b.result["valid"] = true;
    b.result["normalized"] = signature_to_json(*b.desc.signature);
    return;
  }

  AxiomReport report;
  std::size_t carrier = 0;
  if (b.desc.kind == DescriptionKind::Table) {
    // Assemble raw tables and run the full six-axiom scan, reporting every
    // axiom rather than failing on the first.
    const auto& names = b.desc.table_names;
    AlgebraTables t;
    t.names = names;
    const std::size_t n = names.size();
    t.oplus.resize(n * n);
    t.neg.resize(n);
    auto lookup = [&names](const std::string& nm) {
      auto it = std::find(names.begin(), names.end(), nm);
      if (it == names.end())
        throw InvalidParameterError("unknown element '" + nm + "' in the tables");
      return static_cast<ElementId>(it - names.begin());
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) t.oplus[i * n + j] = lookup(b.desc.table_oplus[i][j]);
      t.neg[i] = lookup(b.desc.table_neg[i]);
    }
    t.zero = lookup(b.desc.table_zero);
    report = validate_axioms(t);
    carrier = n;

    json axioms = json::array();
    for (const AxiomCheck& c : report.checks) {
      json entry{{"axiom", axiom_name(c.axiom)}, {"passed", c.passed}};
      json w = json::array();
      for (ElementId x : c.witness) w.push_back(names[x]);
      entry["witness"] = w;
      axioms.push_back(entry);
    }
    b.result["axioms"] = axioms;
  } else {
    // Chains and products cannot fail construction on axioms, but the command
    // still runs the full scan rather than echoing the constructor's report.
    AlgebraPtr a = b.algebra();
    carrier = a->size();
    report = validate_axioms(a->tables());
    json axioms = json::array();
    for (const AxiomCheck& c : report.checks) {
      json w = json::array();
      for (ElementId x : c.witness) w.push_back(a->name(x));
      axioms.push_back(json{{"axiom", axiom_name(c.axiom)}, {"passed", c.passed}, {"witness", w}});
    }
    b.result["axioms"] = axioms;
  }
  b.result["valid"] = report.all_passed();
  b.result["carrier_size"] = carrier;
  if (!report.all_passed()) {
    b.exit_code = kExitCheckFailed;
    const AxiomCheck* f = report.first_failure();
    b.diagnostics.push_back(std::string("first violated axiom: ") + axiom_name(f->axiom));
  }
}

void run_spectrum(Builder& b) {
  AlgebraPtr a = b.algebra();
  json maxs = json::array();
  for (const Ideal& m : max_ideals(a, b.opts.limits)) {
    json entry = ideal_to_json(m);
    entry["rank"] = rank(m);
    if (auto g = is_principal(m)) entry["principal_generator"] = a->name(*g);
    maxs.push_back(entry);
  }
  b.result["maximal_ideals"] = maxs;
  b.result["radical"] = ideal_to_json(radical(a));
  b.result["semisimple"] = is_semisimple(a);
  b.result["carrier_size"] = a->size();
}

void run_ideals(Builder& b) {
  AlgebraPtr a = b.algebra();
  json ideals = json::array();
  const auto all = all_ideals(a, b.opts.limits);
  for (const Ideal& i : all) {
    json entry = ideal_to_json(i);
    entry["proper"] = i.is_proper();
    if (i.is_proper()) {
      entry["prime"] = is_prime(i);
      const bool mx = is_maximal(i);
      entry["maximal"] = mx;
      if (mx) entry["rank"] = rank(i);
    }
    if (auto g = is_principal(i)) entry["principal_generator"] = a->name(*g);
    ideals.push_back(entry);
  }
  b.result["count"] = all.size();
  b.result["ideals"] = ideals;
}

void run_complete(Builder& b) {
  const std::string& method = b.opts.subcommand;
  AlgebraPtr a = b.algebra();
  json results = json::array();

  auto report_json = [](const CompletionReport& r, std::size_t carrier) {
    json out{{"method", completion_method_name(r.method)},
             {"chain_multiset", multiset_to_json(r.multiset)},
             {"carrier_size", carrier}};
    json diag = json::array();
    for (const std::string& d : r.diagnostics) diag.push_back(d);
    out["diagnostics"] = diag;
    return out;
  };

  if (method == "inverse-limit" || method == "both") {
    InverseLimitResult lim = inverse_limit_profinite(a, b.opts.limits);
    results.push_back(report_json(lim.report, lim.algebra->size()));
  }
  if (method == "maxf-product" || method == "both") {
    ProfiniteProductResult prod = profinite_product(a, b.opts.limits);
    results.push_back(report_json(prod.report, prod.algebra->size()));
  }
  if (method == "both") {
    IsoWitness w = verify_main_theorem(a, b.opts.limits);
    b.add_witness("inverse-limit=maxf-product", w);
  }
  if (method == "macneille") {
    MacneilleResult mac = macneille_mv(a, b.opts.limits);
    json r = report_json(mac.report, mac.algebra->size());
    results.push_back(r);
    if (mac.report.witness) b.add_witness("subject=macneille", *mac.report.witness);
  }
  if (results.empty())
    throw InvalidParameterError("unknown completion method '" + method +
                                "' (inverse-limit, maxf-product, macneille, both)");
  b.result["completions"] = results;
}

void run_check(Builder& b) {
  const std::string& what = b.opts.subcommand;

  if (what == "main-theorem") {
    AlgebraPtr a = b.algebra();
    IsoWitness w = verify_main_theorem(a, b.opts.limits);
    b.result["holds"] = true;
    b.add_witness("inverse-limit=maxf-product", w);
  } else if (what == "self-iso") {
    AlgebraPtr a = b.algebra();
    SelfIsoEvidence ev = check_self_iso(a);
    b.result["holds"] = ev.holds;
    json gens = json::array();
    for (const auto& [m, g] : ev.principal_generators) {
      json entry = ideal_to_json(m);
      entry["generator"] = a->name(g);
      gens.push_back(entry);
    }
    b.result["principal_generators"] = gens;
    b.add_witness("subject=profinite-completion", ev.witness);
  } else if (what == "mac-criterion") {
    if (b.desc.kind == DescriptionKind::Signature) {
      SigMacCriterion r = sig_mac_criterion(*b.desc.signature);
      b.result["holds"] = r.holds;
      b.result["note"] = r.note;
      if (!r.holds) b.exit_code = kExitCheckFailed;
    } else {
      AlgebraPtr a = b.algebra();
      MacCriterionResult r = check_mac_criterion(a);
      b.result["holds"] = r.holds;
      b.result["note"] = r.note;
      json tau = json::array();
      for (const auto& [atom, m] : r.tau) {
        json entry = ideal_to_json(m);
        entry["atom"] = a->name(atom);
        tau.push_back(entry);
      }
      b.result["tau"] = tau;
      if (r.completion_iso) b.add_witness("profinite=macneille", *r.completion_iso);
      if (!r.holds) b.exit_code = kExitCheckFailed;
    }
  } else if (what == "product-preservation") {
    AlgebraPtr a1 = b.algebra();
    AlgebraPtr a2 = b.other_algebra();
    ProductPreservation p = check_product_preservation(a1, a2, b.opts.limits);
    b.result["holds"] = true;
    b.result["chain_multiset"] = multiset_to_json(p.multiset);
    b.add_witness("completion-of-product=product-of-completions", p.witness);
  } else if (what == "regularity") {
    AlgebraPtr a = b.algebra();
    RegularityReport r = is_regular(a);
    b.result["holds"] = r.regular;
    json entries = json::array();
    for (const auto& e : r.entries) {
      json entry;
      entry["center_prime"] = ideal_to_json(e.center_prime);
      entry["generated"] = ideal_to_json(e.generated);
      entry["generated_prime"] = e.generated_prime;
      entries.push_back(entry);
    }
    b.result["center_primes"] = entries;
    if (!r.regular) b.exit_code = kExitCheckFailed;
  } else if (what == "center-preservation") {
    AlgebraPtr a = b.algebra();
    CenterPreservation c = check_boolean_center_preservation(a);
    b.result["holds"] = true;
    b.result["center_size"] = c.center_of_completion->size();
    b.add_witness("center-of-completion=completion-of-center", c.witness);
  } else {
    throw InvalidParameterError(
        "unknown check '" + what +
        "' (main-theorem, self-iso, mac-criterion, product-preservation, regularity, "
        "center-preservation)");
  }
}

void run_signature(Builder& b) {
  const std::string& what = b.opts.subcommand;
  const DivisibilityReading reading = b.opts.strict_divisibility
                                          ? DivisibilityReading::Literal
                                          : DivisibilityReading::ProofConsistent;

  if (what == "profinite") {
    b.result["signature"] = signature_to_json(sig_profinite(b.signature()));
  } else if (what == "macneille") {
    b.result["signature"] = signature_to_json(sig_macneille(b.signature()));
  } else if (what == "mac-criterion") {
    SigMacCriterion r = sig_mac_criterion(b.signature());
    b.result["holds"] = r.holds;
    b.result["note"] = r.note;
    if (!r.holds) b.exit_code = kExitCheckFailed;
  } else if (what == "divisibility") {
    CompletionDecision d = divisibility_decision(b.signature(), reading);
    b.result["verdict"] = completion_verdict_name(d.verdict);
    if (d.n0) b.result["n0"] = *d.n0;
    b.result["exceptional_ranks"] = d.exceptional_ranks;
    b.result["note"] = d.note;
    b.result["strict_reading"] = b.opts.strict_divisibility;
  } else if (what == "equal") {
    const bool eq = sig_equal(b.signature(), b.other_signature());
    b.result["equal"] = eq;
    if (!eq) b.exit_code = kExitCheckFailed;
  } else {
    throw InvalidParameterError("unknown signature operation '" + what +
                                "' (profinite, macneille, mac-criterion, divisibility, equal)");
  }
}

// ---------------------------------------------------------------------------
// Witness round-trip

void verify_witnesses_from_report(Builder& b) {
  for (const json& w : b.witnesses) {
    const std::string label = w["label"].get<std::string>();
    auto ctx = std::find_if(b.contexts.begin(), b.contexts.end(),
                            [&label](const WitnessContext& c) { return c.label == label; });
    if (ctx == b.contexts.end())
      throw InternalCheckError("witness '" + label + "' has no verification context");

    Homomorphism fwd;
    fwd.source = ctx->source;
    fwd.target = ctx->target;
    fwd.map.resize(ctx->source->size());
    for (const json& pair : w["map"]) {
      auto from = ctx->source->find_by_name(pair[0].get<std::string>());
      auto to = ctx->target->find_by_name(pair[1].get<std::string>());
      if (!from || !to)
        throw InternalCheckError("witness '" + label + "' names an unknown element");
      fwd.map[*from] = *to;
    }
    Homomorphism inv;
    inv.source = ctx->target;
    inv.target = ctx->source;
    inv.map.resize(ctx->target->size());
    for (const json& pair : w["inverse"]) {
      auto from = ctx->target->find_by_name(pair[0].get<std::string>());
      auto to = ctx->source->find_by_name(pair[1].get<std::string>());
      if (!from || !to)
        throw InternalCheckError("witness '" + label + "' names an unknown element");
      inv.map[*from] = *to;
    }
    IsoWitness parsed{std::move(fwd), std::move(inv)};
    if (auto err = parsed.check())
      throw InternalCheckError("witness '" + label + "' failed re-verification: " + *err);
    b.diagnostics.push_back("witness '" + label + "' re-verified from the report");
  }
}

// ---------------------------------------------------------------------------
// Rendering

void render_value(std::ostringstream& os, const json& v, int indent);

void render_object(std::ostringstream& os, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (auto it = v.begin(); it != v.end(); ++it) {
    os << pad << it.key() << ":";
    if (it.value().is_object() || (it.value().is_array() && !it.value().empty() &&
                                   (it.value()[0].is_object() || it.value()[0].is_array()))) {
      os << "\n";
      render_value(os, it.value(), indent + 1);
    } else {
      os << " ";
      render_value(os, it.value(), 0);
      os << "\n";
    }
  }
}

bool is_name_pair(const json& v) {
  return v.is_array() && v.size() == 2 && v[0].is_string() && v[1].is_string();
}

void render_value(std::ostringstream& os, const json& v, int indent) {
  if (v.is_object()) {
    render_object(os, v, indent);
  } else if (v.is_array()) {
    if (indent == 0) {
      os << "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        render_value(os, v[i], 0);
      }
      os << "]";
    } else {
      const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
      for (const json& e : v) {
        if (is_name_pair(e)) {
          os << pad << "- " << e[0].get<std::string>() << " -> " << e[1].get<std::string>()
             << "\n";
        } else if (e.is_object() || e.is_array()) {
          os << pad << "-\n";
          render_value(os, e, indent + 1);
        } else {
          os << pad << "- ";
          render_value(os, e, 0);
          os << "\n";
        }
      }
    }
  } else if (v.is_string()) {
    os << v.get<std::string>();
  } else {
    os << v.dump();
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  os << kToolName << " " << kToolVersion << "\n";
  os << "command: " << report["command"].get<std::string>() << "\n";
  os << "subject: " << report["subject"].dump() << "\n";
  if (report.contains("other_subject"))
    os << "other: " << report["other_subject"].dump() << "\n";
  os << "result:\n";
  render_value(os, report["result"], 1);
  if (!report["witnesses"].empty()) {
    os << "witnesses:\n";
    render_value(os, report["witnesses"], 1);
  }
  if (!report["diagnostics"].empty()) {
    os << "diagnostics:\n";
    render_value(os, report["diagnostics"], 1);
  }
  os << "exit: " << report["exit_hint"].get<int>() << "\n";
  return os.str();
}

Outcome run_on_text(const Options& opts, const std::string& input_text) {
  json report;
  report["tool"] = json{{"name", kToolName}, {"version", kToolVersion}};
  std::string command_line = opts.command;
  if (!opts.subcommand.empty()) command_line += " " + opts.subcommand;
  report["command"] = command_line;

  int exit_code = kExitOk;
  try {
    Builder b{opts, parse_description(input_text), std::nullopt, json::object(),
              json::array(), json::array(), {}, kExitOk};
    if (opts.other_text) b.other = parse_description(*opts.other_text);
    report["subject"] = b.desc.echo;
    if (b.other) report["other_subject"] = b.other->echo;

    if (opts.command == "validate") run_validate(b);
    else if (opts.command == "spectrum") run_spectrum(b);
    else if (opts.command == "ideals") run_ideals(b);
    else if (opts.command == "complete") run_complete(b);
    else if (opts.command == "check") run_check(b);
    else if (opts.command == "signature") run_signature(b);
    else throw InvalidParameterError("unknown command '" + opts.command + "'");

    if (opts.verify_witness) verify_witnesses_from_report(b);

    report["result"] = b.result;
    report["witnesses"] = b.witnesses;
    report["diagnostics"] = b.diagnostics;
    exit_code = b.exit_code;
  } catch (const ResourceLimitError& e) {
    report["result"] = json{{"error", e.what()}, {"error_kind", "resource-limit"}};
    report["witnesses"] = json::array();
    report["diagnostics"] = json::array({std::string(e.what())});
    exit_code = kExitResourceLimit;
  } catch (const ValidationError& e) {
    report["result"] = json{{"error", e.what()}, {"error_kind", "validation"}};
    report["witnesses"] = json::array();
    report["diagnostics"] = json::array({std::string(e.what())});
    exit_code = kExitCheckFailed;
  } catch (const PreconditionError& e) {
    report["result"] = json{{"error", e.what()}, {"error_kind", "precondition"}};
    report["witnesses"] = json::array();
    report["diagnostics"] = json::array({std::string(e.what())});
    exit_code = kExitCheckFailed;
  } catch (const InternalCheckError& e) {
    report["result"] = json{{"error", e.what()}, {"error_kind", "internal-check"}};
    report["witnesses"] = json::array();
    report["diagnostics"] = json::array({std::string(e.what())});
    exit_code = kExitCheckFailed;
  } catch (const InvalidParameterError& e) {
    report["result"] = json{{"error", e.what()}, {"error_kind", "input"}};
    report["witnesses"] = json::array();
    report["diagnostics"] = json::array({std::string(e.what())});
    exit_code = kExitInputError;
  } catch (const Error& e) {
    report["result"] = json{{"error", e.what()}, {"error_kind", "other"}};
    report["witnesses"] = json::array();
    report["diagnostics"] = json::array({std::string(e.what())});
    exit_code = kExitCheckFailed;
  }

  if (!report.contains("subject")) report["subject"] = nullptr;
  report["exit_hint"] = exit_code;

  Outcome out;
  out.report = report;
  out.exit_code = exit_code;
  out.rendered = opts.json_output ? report.dump(2) + "\n" : render_text(report);
  return out;
}

}  // namespace mvalg::cli
