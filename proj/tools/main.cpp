#include <cstdio>
#include <iostream>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperforms/claims/claims.hpp"
#include "hyperforms/symexpr/parse.hpp"

using nlohmann::ordered_json;
using namespace hyperforms;

namespace {

struct Options {
  int m = 1;
  std::string backend = "cayley-dickson";
  std::string potentials;
  std::string coeff_kind = "differential";
  std::string mul_order = "left";
  std::string b_variant = "plain";
  std::uint64_t seed = 42;
  int trials = 32;
  std::string format = "text";
  bool timing = false;
  std::string claim_id;
};

hyperalg::Backend backend_of(const std::string& s) {
  if (s == "cayley-dickson" || s == "cayley_dickson") return hyperalg::Backend::CayleyDickson;
  if (s == "clifford") return hyperalg::Backend::Clifford;
  throw CLI::ValidationError("--backend", "expected cayley-dickson or clifford");
}

claims::ConventionConfig convention_of(const Options& o) {
  claims::ConventionConfig cfg;
  cfg.coeff_kind = o.coeff_kind == "function" ? claims::CoeffKind::Function
                                              : claims::CoeffKind::Differential;
  cfg.mul_order = o.mul_order == "right" ? claims::MulOrder::Right : claims::MulOrder::Left;
  cfg.b_variant = o.b_variant == "conjugated" ? hyperform::BVariant::Conjugated
                                              : hyperform::BVariant::Plain;
  cfg.backend = backend_of(o.backend);
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  return cfg;
}

hyperform::PotentialSet potentials_of(const Options& o) {
  if (o.potentials.empty()) return hyperform::PotentialSet::generic(o.m);
  hyperform::PotentialSet P;
  P.m = o.m;
  std::string cur;
  std::vector<std::string> pieces;
  for (char ch : o.potentials) {
    if (ch == ',') {
      pieces.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  pieces.push_back(cur);
  if (static_cast<int>(pieces.size()) != 2 * o.m + 1)
    throw CLI::ValidationError("--potentials", "expected " + std::to_string(2 * o.m + 1) +
                                                   " comma-separated expressions, got " +
                                                   std::to_string(pieces.size()));
  for (const auto& s : pieces) P.fs.push_back(symexpr::parse_expr(s, o.m));
  return P;
}

std::string latex_coeff(const symexpr::ExprPtr& e) {
  std::string s = symexpr::to_string(e);
  s = std::regex_replace(s, std::regex("f([0-9]+)"), "f_{$1}");
  s = std::regex_replace(s, std::regex("\\*"), " ");
  return s;
}

std::string latex_form(const extcalc::Form& f) {
  if (f.empty()) return "0";
  std::string out;
  for (const auto& [idx, c] : f.terms()) {
    symexpr::ExprPtr body = c;
    bool negative = false;
    if (body->kind == symexpr::ExprKind::Neg) {
      negative = true;
      body = body->lhs;
    }
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    std::string basis;
    for (int i : idx) {
      if (!basis.empty()) basis += " \\wedge ";
      basis += "df_{" + std::to_string(i) + "}";
    }
    if (!symexpr::is_literal_one(body)) {
      bool bare = body->kind == symexpr::ExprKind::Coordinate ||
                  body->kind == symexpr::ExprKind::Constant;
      std::string cs = latex_coeff(body);
      out += bare ? cs : "\\left(" + cs + "\\right)";
      if (!basis.empty()) out += "\\, ";
    }
    out += basis.empty() ? (symexpr::is_literal_one(body) ? "1" : "") : basis;
  }
  return out;
}

ordered_json form_json(const extcalc::Form& f) {
  ordered_json terms = ordered_json::array();
  for (const auto& [idx, c] : f.terms()) {
    ordered_json t;
    t["indices"] = idx;
    t["coeff"] = symexpr::to_string(c);
    terms.push_back(t);
  }
  ordered_json out;
  out["rendered"] = extcalc::render_form(f);
  out["terms"] = terms;
  return out;
}

int cmd_duals(const Options& o) {
  auto P = potentials_of(o);
  hyperalg::Algebra alg = hyperalg::Algebra::make(backend_of(o.backend), o.m);
  auto cfg = convention_of(o);
  hyperform::DualBundle db =
      hyperform::extract_duals(hyperform::build_B(alg, P, cfg.b_variant));

  if (o.format == "json") {
    ordered_json out;
    out["m"] = o.m;
    out["backend"] = hyperalg::backend_name(alg.backend());
    out["b_variant"] = hyperform::b_variant_name(cfg.b_variant);
    out["A"] = form_json(db.A);
    out["duals"] = ordered_json::array();
    for (const auto& d : db.duals) out["duals"].push_back(form_json(d));
    out["residue"] = ordered_json::object();
    for (const auto& [blade, f] : db.residue)
      out["residue"][alg.basis_name(blade)] = form_json(f);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (o.format == "latex") {
    std::cout << "A = " << latex_form(db.A) << "\n";
    for (size_t k = 0; k < db.duals.size(); ++k)
      std::cout << "\\tilde{A}_{" << k + 1 << "} = " << latex_form(db.duals[k]) << "\n";
    for (const auto& [blade, f] : db.residue)
      std::cout << "R_{" << alg.basis_name(blade) << "} = " << latex_form(f) << "\n";
    return 0;
  }
  std::cout << "A = " << extcalc::render_form(db.A) << "\n";
  for (size_t k = 0; k < db.duals.size(); ++k)
    std::cout << "A~" << k + 1 << " = " << extcalc::render_form(db.duals[k]) << "\n";
  for (const auto& [blade, f] : db.residue)
    std::cout << "residue[" << alg.basis_name(blade) << "] = " << extcalc::render_form(f)
              << "\n";
  return 0;
}

ordered_json claim_entry_json(const claims::ClaimResult& r, const claims::ClaimInfo& info) {
  ordered_json e;
  e["id"] = r.id;
  e["anchor"] = info.anchor;
  e["convention"] = {{"coeff_kind", claims::coeff_kind_name(r.convention.coeff_kind)},
                     {"mul_order", claims::mul_order_name(r.convention.mul_order)},
                     {"b_variant", hyperform::b_variant_name(r.convention.b_variant)}};
  e["status"] = claims::claim_status_name(r.status);
  if (r.status == claims::ClaimStatus::HoldsNumeric ||
      r.status == claims::ClaimStatus::Fails || r.max_residual > 0)
    e["max_residual"] = r.max_residual;
  if (r.witness) {
    e["witness"] = {{"point", r.witness->point}, {"term", r.witness->term}};
  }
  if (!r.detail.empty()) e["detail"] = r.detail;
  e["ms"] = r.ms;
  return e;
}

int cmd_verify(const Options& o) {
  auto P = potentials_of(o);
  const claims::ClaimInfo* info = nullptr;
  try {
    info = &claims::claim_info(o.claim_id);
  } catch (const std::out_of_range&) {
    std::cerr << "unknown claim id '" << o.claim_id << "' (expected C1..C13)\n";
    return 1;
  }
  claims::ClaimResult r = claims::verify(o.claim_id, P, convention_of(o));
  if (o.format == "json") {
    ordered_json out;
    out["m"] = o.m;
    out["backend"] = o.backend == "clifford" ? "clifford" : "cayley_dickson";
    out["seed"] = o.seed;
    out["claim"] = claim_entry_json(r, *info);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << r.id << " [" << claims::coeff_kind_name(r.convention.coeff_kind) << "/"
              << claims::mul_order_name(r.convention.mul_order) << "/"
              << hyperform::b_variant_name(r.convention.b_variant)
              << "] " << claims::claim_status_name(r.status) << "\n";
    std::cout << "anchor: " << info->anchor << "\n";
    if (r.status == claims::ClaimStatus::HoldsNumeric ||
        r.status == claims::ClaimStatus::Fails)
      std::cout << "max_residual: " << ordered_json(r.max_residual).dump() << "\n";
    if (r.witness)
      std::cout << "witness: " << r.witness->term << " at "
                << ordered_json(r.witness->point).dump() << "\n";
    if (!r.detail.empty()) std::cout << "detail: " << r.detail << "\n";
  }
  return r.status == claims::ClaimStatus::Underspecified ? 2 : 0;
}

int cmd_suite(const Options& o) {
  claims::SuiteOptions so;
  so.P = potentials_of(o);
  so.base = convention_of(o);
  so.timing = o.timing;
  ordered_json rep = claims::run_suite(so);
  if (o.format == "json")
    std::cout << rep.dump(2) << "\n";
  else
    std::cout << claims::render_report_text(rep);
  bool all_under = true;
  for (const auto& e : rep.at("claims"))
    if (e.at("status").get<std::string>() != "Underspecified") all_under = false;
  return all_under ? 2 : 0;
}

int cmd_algebra_table(const Options& o) {
  hyperalg::Algebra alg = hyperalg::Algebra::make(backend_of(o.backend), o.m);
  int dim = alg.dim();
  if (o.format == "json") {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < dim; ++i) {
      ordered_json row = ordered_json::array();
      for (int j = 0; j < dim; ++j) {
        auto pr = alg.product(i, j);
        row.push_back((pr.second < 0 ? "-" : "") + alg.basis_name(pr.first));
      }
      rows.push_back(row);
    }
    ordered_json out;
    out["backend"] = hyperalg::backend_name(alg.backend());
    out["m"] = o.m;
    out["dim"] = dim;
    out["table"] = rows;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  size_t w = 1;
  for (int i = 0; i < dim; ++i) w = std::max(w, alg.basis_name(i).size() + 1);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      auto pr = alg.product(i, j);
      std::string cell = (pr.second < 0 ? "-" : "") + alg.basis_name(pr.first);
      std::printf("%*s", static_cast<int>(w + 1), cell.c_str());
    }
    std::printf("\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypercomplex one-form toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--m", o.m, "number of generators (1, 3, 7 for the doubling backend; 1..8 clifford)");
    cmd->add_option("--backend", o.backend, "cayley-dickson | clifford")
        ->check(CLI::IsMember({"cayley-dickson", "cayley_dickson", "clifford"}));
    cmd->add_option("--potentials", o.potentials,
                    "comma-separated expressions for f1..f_{2m+1} (default: coordinates)");
    cmd->add_option("--seed", o.seed, "RNG seed for sampling decisions");
    cmd->add_option("--trials", o.trials, "sample count per zero decision");
    cmd->add_option("--coeff-kind", o.coeff_kind, "differential | function")
        ->check(CLI::IsMember({"differential", "function"}));
    cmd->add_option("--mul-order", o.mul_order, "left | right")
        ->check(CLI::IsMember({"left", "right"}));
    cmd->add_option("--b-variant", o.b_variant, "plain | conjugated")
        ->check(CLI::IsMember({"plain", "conjugated"}));
    return cmd;
  };

  CLI::App* duals = add_common(app.add_subcommand("duals", "print A, its duals, and any residue"));
  duals->add_option("--format", o.format, "text | json | latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  CLI::App* verify = add_common(app.add_subcommand("verify", "verify one claim"));
  verify->add_option("claim", o.claim_id, "claim id C1..C13")->required();
  verify->add_option("--format", o.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* suite = add_common(app.add_subcommand("suite", "verify every applicable claim over its convention grid"));
  suite->add_option("--format", o.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  suite->add_flag("--timing", o.timing, "fill ms fields with wall-clock times (breaks byte determinism)");

  CLI::App* table = add_common(app.add_subcommand("algebra-table", "print the basis multiplication table"));
  table->add_option("--format", o.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);  // CLI11 prints the offending flag; nonzero on error
  }

  try {
    if (app.got_subcommand("duals")) return cmd_duals(o);
    if (app.got_subcommand("verify")) return cmd_verify(o);
    if (app.got_subcommand("suite")) return cmd_suite(o);
    if (app.got_subcommand("algebra-table")) return cmd_algebra_table(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const symexpr::SyntaxError& e) {
    std::cerr << "--potentials: syntax error at position " << e.position << ": " << e.what()
              << "\n";
    return 1;
  } catch (const symexpr::SymbolOutOfRange& e) {
    std::cerr << "--potentials: " << e.what() << " (symbol f" << e.index << ", limit f"
              << e.limit << ")\n";
    return 1;
  } catch (const hyperalg::UnsupportedDimension& e) {
    std::cerr << "--m/--backend: " << e.what() << "\n";
    return 1;
  } catch (const symexpr::DomainError& e) {
    std::cerr << "domain error while evaluating: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
