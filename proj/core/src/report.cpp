#include <chrono>
#include <iomanip>
#include <sstream>

#include "hyperforms/claims/claims.hpp"

namespace hyperforms::claims {

using nlohmann::ordered_json;

namespace {

ordered_json convention_json(const ConventionConfig& c) {
  return {{"coeff_kind", coeff_kind_name(c.coeff_kind)},
          {"mul_order", mul_order_name(c.mul_order)},
          {"b_variant", hyperform::b_variant_name(c.b_variant)}};
}

}  // namespace

ordered_json run_suite(const SuiteOptions& opt) {
  ordered_json rep;
  rep["m"] = opt.P.m;
  rep["backend"] = hyperalg::backend_name(opt.base.backend);
  rep["seed"] = opt.base.seed;
  rep["convention"] = convention_json(opt.base);
  rep["claims"] = ordered_json::array();

  for (const ClaimInfo& info : registry()) {
    if (!info.applicable_m.count(opt.P.m)) continue;

    std::vector<CoeffKind> cks = info.grid_coeff_kind
                                     ? std::vector<CoeffKind>{CoeffKind::Differential,
                                                              CoeffKind::Function}
                                     : std::vector<CoeffKind>{opt.base.coeff_kind};
    std::vector<MulOrder> mos = info.grid_mul_order
                                    ? std::vector<MulOrder>{MulOrder::Left, MulOrder::Right}
                                    : std::vector<MulOrder>{opt.base.mul_order};
    std::vector<hyperform::BVariant> bvs =
        info.grid_b_variant
            ? std::vector<hyperform::BVariant>{hyperform::BVariant::Plain,
                                               hyperform::BVariant::Conjugated}
            : std::vector<hyperform::BVariant>{opt.base.b_variant};

    for (CoeffKind ck : cks)
      for (MulOrder mo : mos)
        for (hyperform::BVariant bv : bvs) {
          ConventionConfig cfg = opt.base;
          cfg.coeff_kind = ck;
          cfg.mul_order = mo;
          cfg.b_variant = bv;

          auto t0 = std::chrono::steady_clock::now();
          ClaimResult r = verify(info.id, opt.P, cfg);
          auto t1 = std::chrono::steady_clock::now();
          long long ms =
              opt.timing
                  ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                  : 0;

          ordered_json e;
          e["id"] = r.id;
          e["anchor"] = info.anchor;
          e["convention"] = convention_json(cfg);
          e["status"] = claim_status_name(r.status);
          if (r.status == ClaimStatus::HoldsNumeric || r.status == ClaimStatus::Fails ||
              r.max_residual > 0)
            e["max_residual"] = r.max_residual;
          if (r.witness) {
            ordered_json w;
            w["point"] = r.witness->point;
            w["term"] = r.witness->term;
            e["witness"] = w;
          }
          if (!r.detail.empty()) e["detail"] = r.detail;
          e["ms"] = ms;
          rep["claims"].push_back(e);
        }
  }
  return rep;
}

std::string render_report_text(const ordered_json& report) {
  std::ostringstream out;
  out << "suite m=" << report.at("m").get<int>() << " backend=" << report.at("backend").get<std::string>()
      << " seed=" << report.at("seed").get<std::uint64_t>() << "\n";
  const auto& base = report.at("convention");
  out << "base convention: " << base.at("coeff_kind").get<std::string>() << "/"
      << base.at("mul_order").get<std::string>() << "/" << base.at("b_variant").get<std::string>()
      << "\n\n";

  for (const auto& e : report.at("claims")) {
    const auto& cv = e.at("convention");
    std::string cell = cv.at("coeff_kind").get<std::string>() + "/" +
                       cv.at("mul_order").get<std::string>() + "/" +
                       cv.at("b_variant").get<std::string>();
    out << std::left << std::setw(4) << e.at("id").get<std::string>() << " "
        << std::setw(34) << ("[" + cell + "]") << " " << std::setw(14)
        << e.at("status").get<std::string>();
    if (e.contains("max_residual")) {
      out << " max_residual=" << ordered_json(e.at("max_residual")).dump();
    }
    out << " ms=" << e.at("ms").get<long long>() << "\n";
    if (e.contains("witness")) {
      out << "     witness: " << e.at("witness").at("term").get<std::string>() << " at "
          << ordered_json(e.at("witness").at("point")).dump() << "\n";
    }
    if (e.contains("detail")) out << "     " << e.at("detail").get<std::string>() << "\n";
  }
  return out.str();
}

}  // namespace hyperforms::claims
