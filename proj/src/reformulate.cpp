// Model emission and ground-instantiation checking.
#include "slidets/reformulate.hpp"

#include <algorithm>
#include <stdexcept>

#include "slidets/patterns.hpp"

namespace slidets {

nlohmann::ordered_json ReformulationModel::to_json() const {
  nlohmann::ordered_json j;
  j["model"] = "slide-sum";
  j["pattern"] = pattern;
  j["reverse_pattern"] = reverse_pattern;
  j["feature"] = feature_name(feature);
  j["equation"] = equation_name(equation);
  j["m"] = m;
  j["n"] = n;
  j["variable_count"] = variable_count();
  j["constraint_count"] = constraint_count();

  auto var = [](const char* name, int count, const char* comment) {
    nlohmann::ordered_json v;
    v["name"] = name;
    v["kind"] = "int";
    v["count"] = count;
    v["comment"] = comment;
    return v;
  };
  j["variables"] = nlohmann::ordered_json::array();
  j["variables"].push_back(var("x", n, "series values"));
  j["variables"].push_back(var("fwd", n, "aggregate of each prefix x[1..k]"));
  j["variables"].push_back(var("bwd", n, "aggregate of each suffix x[k..n]"));
  j["variables"].push_back(var("r", 1, "whole-series aggregate"));
  j["variables"].push_back(var("win", window_count(), "per-window values"));
  j["variables"].push_back(var("low", 1, "minimum of win"));
  j["variables"].push_back(var("up", 1, "maximum of win"));

  j["constraints"] = nlohmann::ordered_json::array();
  {
    nlohmann::ordered_json c;
    c["kind"] = "register_automaton";
    c["direction"] = "forward";
    c["pattern"] = pattern;
    c["feature"] = feature_name(feature);
    c["input"] = "x[1..n]";
    c["output"] = "fwd[k] = aggregate over x[1..k]";
    c["total"] = "r = fwd[n]";
    j["constraints"].push_back(std::move(c));
  }
  {
    nlohmann::ordered_json c;
    c["kind"] = "register_automaton";
    c["direction"] = "backward";
    c["pattern"] = reverse_pattern;
    c["feature"] = feature_name(feature);
    c["input"] = "reverse of x[1..n]";
    c["output"] = "bwd[k] = aggregate over x[k..n]";
    j["constraints"].push_back(std::move(c));
  }
  for (int i = 1; i <= window_count(); ++i) {
    const int jj = i + m - 1;
    nlohmann::ordered_json c;
    c["kind"] = "link";
    c["window"] = i;
    c["i"] = i;
    c["j"] = jj;
    std::string base = "fwd[" + std::to_string(jj) + "] + bwd[" +
                       std::to_string(i) + "] - r";
    c["expr"] = "win[" + std::to_string(i) + "] = " +
                (equation == EquationKind::Clamp ? "max(0, " + base + ")"
                                                 : base);
    j["constraints"].push_back(std::move(c));
  }
  {
    nlohmann::ordered_json c;
    c["kind"] = "aggregate";
    c["op"] = "min";
    c["input"] = "win";
    c["output"] = "low";
    j["constraints"].push_back(c);
    c["op"] = "max";
    c["output"] = "up";
    j["constraints"].push_back(std::move(c));
  }
  return j;
}

ReformulationModel emit_reformulation(Feature f, const Pattern& p, int m,
                                      int n, EquationKind equation) {
  if (equation != EquationKind::Plain && equation != EquationKind::Clamp)
    throw std::invalid_argument(
        "reformulation: only the plain and clamped window terms have a "
        "linear-space model; the guarded and fallback forms do not");
  if (m <= 1)
    throw std::invalid_argument(
        "reformulation: window length must be at least 2");
  if (m > n)
    throw std::invalid_argument(
        "reformulation: window length exceeds the series length");
  const std::string reverse = analyze_pattern(p).reverse_name;
  if (reverse.empty())
    throw std::invalid_argument(
        "reformulation: no mirrored counterpart in the catalogue for " +
        p.name);
  ReformulationModel model;
  model.pattern = p.name;
  model.reverse_pattern = reverse;
  model.feature = f;
  model.equation = equation;
  model.m = m;
  model.n = n;
  return model;
}

GroundCheck ground_check(const ReformulationModel& model, const Series& x) {
  if (static_cast<int>(x.size()) != model.n)
    throw std::invalid_argument(
        "ground check: series length differs from the model's n");
  const Pattern* p = find_pattern(model.pattern);
  if (!p)
    throw std::invalid_argument("ground check: unknown pattern " +
                                model.pattern);

  const int n = model.n;
  const PrefixProfile prof = prefix_profile(model.feature, *p, x);
  CheckOptions opts;
  opts.equation = model.equation;
  const WindowReport rep = slide_check(model.feature, *p, model.m, x, opts);

  GroundCheck out;
  const DfaTable dfa = make_dfa_table(p->lang);
  out.automaton_forward = true;
  for (int k = 1; k <= n; ++k)
    out.automaton_forward =
        out.automaton_forward &&
        prof.fwd[k - 1] == window_oracle(model.feature, dfa, p->before,
                                         p->after, x, 1, k);
  out.automaton_forward =
      out.automaton_forward && prof.total == prof.fwd[n - 1];

  out.automaton_backward = true;
  for (int k = 1; k <= n; ++k)
    out.automaton_backward =
        out.automaton_backward &&
        prof.bwd[k - 1] == window_oracle(model.feature, dfa, p->before,
                                         p->after, x, k, n);

  out.links = true;
  for (int i = 1; i <= model.window_count(); ++i) {
    const int j = i + model.m - 1;
    std::int64_t term = checked_sub(
        checked_add(prof.fwd[j - 1], prof.bwd[i - 1]), prof.total);
    if (model.equation == EquationKind::Clamp)
      term = std::max<std::int64_t>(0, term);
    out.links = out.links && rep.values[i - 1] == term;
  }

  out.low = rep.low;
  out.up = rep.up;
  out.aggregations =
      rep.low == *std::min_element(rep.values.begin(), rep.values.end()) &&
      rep.up == *std::max_element(rep.values.begin(), rep.values.end());
  return out;
}

}  // namespace slidets
