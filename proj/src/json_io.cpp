#include "banach_cover/json_io.hpp"

#include <cstdio>

namespace bcover {

json to_json(const LpVector& x) { return json{{"p", x.p()}, {"coords", x.coords()}}; }

json to_json(const DualVector& w) { return json{{"q", w.q()}, {"coords", w.coords()}}; }

json to_json(const IndexMask& mask) { return json(mask.members()); }

json to_json(const MeasureGrid& grid) { return json{{"weights", grid.weights()}}; }

json to_json(const StepFunction& f) { return json{{"p", f.p()}, {"values", f.values()}}; }

json to_json(const ConvexSet& set) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, BallSet>) {
          return json{{"kind", "ball"}, {"r", s.r}};
        } else if constexpr (std::is_same_v<T, CylinderSet>) {
          return json{{"kind", "cylinder"}, {"r", s.r}, {"mask", s.mask.members()}};
        } else {
          return json{{"kind", "cone"}};
        }
      },
      set);
}

json to_json(const CoderivativeValue& value) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SingletonValue>) {
          return json{{"kind", "singleton"}, {"value", to_json(v.value)}};
        } else if constexpr (std::is_same_v<T, EmptyValue>) {
          return json{{"kind", "empty"}};
        } else if constexpr (std::is_same_v<T, IntervalValue>) {
          return json{{"kind", "interval"},
                      {"lower", to_json(v.interval.lower())},
                      {"upper", to_json(v.interval.upper())}};
        } else {
          json tag;
          switch (v.zero_member) {
            case ZeroMembership::Yes:
              tag = true;
              break;
            case ZeroMembership::No:
              tag = false;
              break;
            case ZeroMembership::Unknown:
              tag = "unknown";
              break;
          }
          return json{{"kind", "predicate"}, {"zero_member", tag}};
        }
      },
      value);
}

json to_json(const QuotientReport& report) {
  return json{{"sup", report.sup_quotient},
              {"radii", report.radii},
              {"samples", report.samples_used}};
}

json to_json(const CoveringReport& report) {
  json witnesses = json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back(json{{"eta", w.eta}, {"point", w.point}, {"dual", w.dual}});
  }
  return json{{"eta_grid", report.eta_grid},
              {"per_eta_inf", report.per_eta_inf},
              {"alpha_hat", report.alpha_hat},
              {"witnesses", witnesses}};
}

json to_json(const FixpointRecord& record) {
  json j{{"s", record.s},
         {"sigma", record.sigma},
         {"iterations", record.iterations},
         {"residual", record.residual},
         {"status", to_string(record.status)}};
  if (record.bound_checked) {
    j["bound_rhs"] = record.bound_rhs;
    j["bound_ok"] = record.bound_ok;
  }
  return j;
}

LpVector lp_vector_from_json(const json& j) {
  return LpVector(j.at("p").get<double>(), j.at("coords").get<std::vector<double>>());
}

DualVector dual_vector_from_json(const json& j) {
  return DualVector(j.at("q").get<double>(), j.at("coords").get<std::vector<double>>());
}

IndexMask mask_from_json(const json& j) {
  return IndexMask(j.get<std::vector<std::size_t>>());
}

MeasureGrid grid_from_json(const json& j) {
  return MeasureGrid(j.at("weights").get<std::vector<double>>());
}

StepFunction step_function_from_json(const json& j) {
  return StepFunction(j.at("p").get<double>(), j.at("values").get<std::vector<double>>());
}

ConvexSet set_from_json(const json& j, const std::optional<MeasureGrid>& grid_for_cone) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "ball") return BallSet{j.at("r").get<double>()};
  if (kind == "cylinder") {
    return CylinderSet{j.at("r").get<double>(), mask_from_json(j.at("mask"))};
  }
  if (kind == "cone") {
    if (!grid_for_cone) {
      throw std::invalid_argument("cone descriptor needs a measure grid supplied out of band");
    }
    return ConeSet{*grid_for_cone};
  }
  throw std::invalid_argument("unknown set kind: " + kind);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string covering_report_csv(const CoveringReport& report) {
  std::string out = "eta,per_eta_inf\n";
  for (std::size_t i = 0; i < report.eta_grid.size(); ++i) {
    out += format_double(report.eta_grid[i]);
    out += ',';
    out += format_double(report.per_eta_inf[i]);
    out += '\n';
  }
  return out;
}

std::string fixpoint_records_csv(const std::vector<FixpointRecord>& records) {
  std::size_t dim = 1;
  for (const auto& r : records) dim = std::max(dim, r.sigma.size());
  std::string out = "s";
  for (std::size_t i = 0; i < dim; ++i) out += ",sigma" + std::to_string(i + 1);
  out += ",iterations,residual,bound_rhs,bound_ok,status\n";
  for (const auto& r : records) {
    out += format_double(r.s);
    for (std::size_t i = 0; i < dim; ++i) {
      out += ',';
      out += i < r.sigma.size() ? format_double(r.sigma[i]) : "";
    }
    out += ',' + std::to_string(r.iterations);
    out += ',' + format_double(r.residual);
    out += ',';
    out += r.bound_checked ? format_double(r.bound_rhs) : "";
    out += ',';
    out += r.bound_checked ? (r.bound_ok ? "true" : "false") : "";
    out += ',';
    out += to_string(r.status);
    out += '\n';
  }
  return out;
}

}  // namespace bcover
