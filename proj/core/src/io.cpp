#include "mpa/io.hpp"

#include <cmath>
#include <cstdio>

namespace mpa {

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

void indent(std::string& out, int depth) { out.append(2 * depth, ' '); }

void emit(const Json& v, std::string& out, int depth) {
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        indent(out, depth + 1);
        out += Json(key).dump();
        out += ": ";
        emit(item, out, depth + 1);
      }
      out += '\n';
      indent(out, depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += ", ";
        first = false;
        emit(item, out, depth + 1);
      }
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      out += std::isfinite(d) ? format_double(d) : "null";
      return;
    }
    default:
      out += v.dump();
  }
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

std::string dump_json(const Json& value) {
  std::string out;
  emit(value, out, 0);
  out += '\n';
  return out;
}

Json policy_json(const HarvestPolicy& policy) {
  Json j;
  j["breakpoints"] = policy.breakpoints();
  j["rates"] = policy.rates();
  return j;
}

Json solution_json(const OptimalSolution& s, std::optional<double> boundary) {
  Json j;
  j["policy"] = policy_json(s.policy);
  Json reserve;
  reserve["present"] = s.reserve_halfwidth > 0.0;
  reserve["halfwidth"] = s.reserve_halfwidth;
  if (boundary) reserve["boundary_B"] = *boundary;
  j["reserve"] = reserve;
  j["objective_j"] = s.objective;
  j["lambda_bar"] = optional_json(s.lambda_bar);
  j["Ts"] = optional_json(s.edge_distance);
  j["lmin"] = optional_json(s.min_length);
  Json d;
  d["boundary_residual"] = s.diagnostics.boundary_residual;
  d["transversality"] = s.diagnostics.transversality;
  d["hamiltonian_deviation"] = s.diagnostics.hamiltonian_deviation;
  d["switch_mismatch"] = s.diagnostics.switch_mismatch;
  d["switching_law_holds"] = s.diagnostics.switching_law_holds;
  j["diagnostics"] = d;
  return j;
}

Json sweep_summary_json(const SweepResult& r) {
  Json j;
  j["candidates"] = r.candidates.size();
  j["best_index"] = r.best;
  j["best_descriptor"] = r.winner().descriptor;
  j["best_objective"] = r.winner().objective;
  j["analytic_objective"] = r.analytic_objective;
  j["gap"] = r.gap;
  return j;
}

void write_state_csv(std::ostream& out, const std::vector<StateSample>& rows) {
  out << "x,u,v\n";
  for (const auto& r : rows) {
    out << format_double(r.x) << ',' << format_double(r.u) << ','
        << format_double(r.v) << '\n';
  }
}

void write_adjoint_csv(std::ostream& out,
                       const std::vector<AdjointSample>& rows) {
  out << "x,lambda1,lambda2\n";
  for (const auto& r : rows) {
    out << format_double(r.x) << ',' << format_double(r.lambda1) << ','
        << format_double(r.lambda2) << '\n';
  }
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << "index,descriptor,objective_j\n";
  for (std::size_t i = 0; i < result.candidates.size(); ++i) {
    const Candidate& c = result.candidates[i];
    out << i << ',' << c.descriptor << ',' << format_double(c.objective)
        << '\n';
  }
}

void write_pde_csv(std::ostream& out, const std::vector<PdeSample>& rows) {
  out << "x,u\n";
  for (const auto& r : rows) {
    out << format_double(r.x) << ',' << format_double(r.u) << '\n';
  }
}

}  // namespace mpa
