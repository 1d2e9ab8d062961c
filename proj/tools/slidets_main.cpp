// Command-line interface: property inference, classification, sliding-window
// checking, oracle comparison, reference-data verification, reformulation
// emission, and DOT export.
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "slidets/checker.hpp"
#include "slidets/classify.hpp"
#include "slidets/corpus.hpp"
#include "slidets/patterns.hpp"
#include "slidets/reformulate.hpp"
#include "slidets/series.hpp"

namespace {

using namespace slidets;

// Command-line mistakes (unknown names, malformed input, out-of-range
// arguments) exit with status 2; failed checks and verifications with 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PatternArgs {
  std::string name;
  std::string regex;
  int before = 0;
  int after = 0;
};

void add_pattern_options(CLI::App* cmd, PatternArgs& args, bool allow_regex) {
  cmd->add_option("--pattern", args.name, "catalogue pattern name");
  if (allow_regex) {
    cmd->add_option("--regex", args.regex,
                    "inline signature regular expression");
    cmd->add_option("--b,--before", args.before,
                    "left trim for an inline pattern");
    cmd->add_option("--a,--after", args.after,
                    "right trim for an inline pattern");
  }
}

Pattern resolve_pattern(const PatternArgs& args) {
  if (!args.name.empty() && !args.regex.empty())
    throw UsageError("give either --pattern or --regex, not both");
  if (!args.name.empty()) {
    const Pattern* p = find_pattern(args.name);
    if (!p) throw UsageError("unknown pattern: " + args.name);
    return *p;
  }
  if (args.regex.empty())
    throw UsageError("one of --pattern or --regex is required");
  return make_pattern("inline", args.regex, args.before, args.after);
}

Feature resolve_feature(const std::string& name) {
  const auto f = parse_feature(name);
  if (!f) throw UsageError("unknown feature: " + name);
  return *f;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

const char* yesno(bool b) { return b ? "true" : "false"; }

// ---- properties ------------------------------------------------------

int run_properties(const PatternArgs& pargs, const std::string& format) {
  const Pattern p = resolve_pattern(pargs);
  const PatternProperties props = analyze_pattern(p);
  const std::string letter = props.letter ? std::string(1, *props.letter) : "-";
  const std::string suffix_unavoidable =
      props.suffix_unavoidable ? std::string(1, *props.suffix_unavoidable)
                               : "-";
  const std::string factor =
      props.factor ? (*props.factor ? "true" : "false") : "unknown";
  const std::string reverse =
      props.reverse_name.empty() ? "-" : props.reverse_name;

  if (format == "json") {
    nlohmann::ordered_json j;
    j["name"] = p.name;
    j["regex"] = p.regex_src;
    j["before"] = p.before;
    j["after"] = p.after;
    j["omega"] = p.omega;
    j["reverse"] = reverse;
    j["convex"] = props.convex;
    j["inflexion_free"] = props.inflexion_free;
    j["one_inflexion"] = props.one_inflexion;
    j["exclude_out_in"] = props.exclude_out_in;
    j["single_letter"] = props.single_letter;
    j["letter"] = letter;
    j["suffix_unavoidable"] = suffix_unavoidable;
    j["incompressible"] = props.incompressible;
    j["factor"] = factor;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::printf("name: %s\n", p.name.c_str());
  std::printf("regex: %s\n", p.regex_src.c_str());
  std::printf("before: %d\n", p.before);
  std::printf("after: %d\n", p.after);
  std::printf("omega: %d\n", p.omega);
  std::printf("reverse: %s\n", reverse.c_str());
  std::printf("convex: %s\n", yesno(props.convex));
  std::printf("inflexion_free: %s\n", yesno(props.inflexion_free));
  std::printf("one_inflexion: %s\n", yesno(props.one_inflexion));
  std::printf("exclude_out_in: %s\n", yesno(props.exclude_out_in));
  std::printf("single_letter: %s\n", yesno(props.single_letter));
  std::printf("letter: %s\n", letter.c_str());
  std::printf("suffix_unavoidable: %s\n", suffix_unavoidable.c_str());
  std::printf("incompressible: %s\n", yesno(props.incompressible));
  std::printf("factor: %s\n", factor.c_str());
  return 0;
}

// ---- classify --------------------------------------------------------

int run_classify(const PatternArgs& pargs, const std::string& format) {
  const Pattern p = resolve_pattern(pargs);
  const std::set<TypeTriple> feasible = feasible_triples(p.lang);
  const std::set<RepTriple> reps = representatives(feasible);

  std::vector<std::string> members;
  for (const auto& [key, names] : classify_catalog())
    if (key == reps &&
        std::find(names.begin(), names.end(), p.name) != names.end())
      members = names;

  if (format == "json") {
    nlohmann::ordered_json j;
    j["name"] = p.name;
    j["feasible_triples"] = nlohmann::ordered_json::array();
    for (const TypeTriple& t : feasible)
      j["feasible_triples"].push_back(triple_name(t));
    j["representatives"] = nlohmann::ordered_json::array();
    for (const RepTriple& r : reps)
      j["representatives"].push_back(rep_triple_name(r));
    j["class_members"] = members;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::printf("pattern: %s\n", p.name.c_str());
  std::printf("feasible triples (%zu of 125):\n", feasible.size());
  for (const TypeTriple& t : feasible)
    std::printf("  %s\n", triple_name(t).c_str());
  std::printf("representatives:\n");
  for (const RepTriple& r : reps)
    std::printf("  %s\n", rep_triple_name(r).c_str());
  if (!members.empty()) {
    std::printf("class members:");
    for (const std::string& name : members) std::printf(" %s", name.c_str());
    std::printf("\n");
  }
  return 0;
}

// ---- check / oracle --------------------------------------------------

void print_windows(const std::string& format, int m,
                   const std::vector<std::int64_t>& values, std::int64_t low,
                   std::int64_t up, const char* equation, bool fallback) {
  if (format == "csv") {
    std::printf("i,j,value\n");
    for (std::size_t k = 0; k < values.size(); ++k)
      std::printf("%zu,%zu,%lld\n", k + 1, k + m,
                  static_cast<long long>(values[k]));
    return;
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["m"] = m;
    if (equation) {
      j["equation"] = equation;
      j["fallback"] = fallback;
    }
    j["values"] = values;
    j["low"] = low;
    j["up"] = up;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::printf("%6s %6s %12s\n", "i", "j", "value");
  for (std::size_t k = 0; k < values.size(); ++k)
    std::printf("%6zu %6zu %12lld\n", k + 1, k + m,
                static_cast<long long>(values[k]));
  if (equation)
    std::printf("low=%lld up=%lld equation=%s%s\n",
                static_cast<long long>(low), static_cast<long long>(up),
                equation, fallback ? " (oracle fallback)" : "");
  else
    std::printf("low=%lld up=%lld\n", static_cast<long long>(low),
                static_cast<long long>(up));
}

int run_check(const std::string& pattern_name, const std::string& feature_name_,
              int m, const std::string& input,
              std::optional<std::int64_t> low, std::optional<std::int64_t> up,
              const std::string& equation, int threads,
              const std::string& format) {
  const Pattern* p = find_pattern(pattern_name);
  if (!p) throw UsageError("unknown pattern: " + pattern_name);
  const Feature f = resolve_feature(feature_name_);
  if (!in_catalog(f, *p))
    throw UsageError(std::string("constraint not in catalog: ") +
                     feature_name(f) + " over " + p->name);
  const Series x = read_series_file(input);

  CheckOptions opts;
  opts.threads = threads;
  if (equation != "auto") opts.equation = *parse_equation(equation);
  const WindowReport rep = slide_check(f, *p, m, x, opts);

  print_windows(format, m, rep.values, rep.low, rep.up,
                equation_name(rep.equation), rep.fallback);

  if (low || up) {
    for (std::size_t k = 0; k < rep.values.size(); ++k) {
      const std::int64_t v = rep.values[k];
      if ((low && v < *low) || (up && v > *up)) {
        std::fprintf(stderr,
                     "violation: window %zu value %lld outside [%s, %s]\n",
                     k + 1, static_cast<long long>(v),
                     low ? std::to_string(*low).c_str() : "-inf",
                     up ? std::to_string(*up).c_str() : "+inf");
        return 1;
      }
    }
  }
  return 0;
}

int run_oracle(const PatternArgs& pargs, const std::string& feature_name_,
               int m, const std::string& input, const std::string& format) {
  const Pattern p = resolve_pattern(pargs);
  const Feature f = resolve_feature(feature_name_);
  const Series x = read_series_file(input);
  const int n = static_cast<int>(x.size());
  if (m <= 1 || m > n) throw UsageError("window length out of range");

  const DfaTable dfa = make_dfa_table(p.lang);
  std::vector<std::int64_t> values;
  for (int i = 1; i + m - 1 <= n; ++i)
    values.push_back(window_oracle(f, dfa, p.before, p.after, x, i, i + m - 1));
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  print_windows(format, m, values, *lo_it, *hi_it, nullptr, false);
  return 0;
}

// ---- compare ---------------------------------------------------------

int compare_once(Feature f, const Pattern& p, int m, const Series& x,
                 long& windows_compared) {
  const WindowReport rep = slide_check(f, p, m, x);
  const DfaTable dfa = make_dfa_table(p.lang);
  const int n = static_cast<int>(x.size());
  for (int i = 1; i + m - 1 <= n; ++i) {
    const std::int64_t truth =
        window_oracle(f, dfa, p.before, p.after, x, i, i + m - 1);
    ++windows_compared;
    if (rep.values[i - 1] != truth) {
      std::printf("divergence: window %d checker=%lld oracle=%lld m=%d\n", i,
                  static_cast<long long>(rep.values[i - 1]),
                  static_cast<long long>(truth), m);
      std::printf("series:");
      for (const std::int64_t v : x)
        std::printf(" %lld", static_cast<long long>(v));
      std::printf("\n");
      return 1;
    }
  }
  return 0;
}

int run_compare(const std::string& pattern_name,
                const std::string& feature_name_, int m,
                const std::string& input, bool random_mode, int length,
                int count, unsigned seed) {
  const Pattern* p = find_pattern(pattern_name);
  if (!p) throw UsageError("unknown pattern: " + pattern_name);
  const Feature f = resolve_feature(feature_name_);
  if (!in_catalog(f, *p))
    throw UsageError(std::string("constraint not in catalog: ") +
                     feature_name(f) + " over " + p->name);

  long windows = 0;
  if (!random_mode) {
    if (input.empty()) throw UsageError("--input or --random is required");
    if (m < 2) throw UsageError("-m is required with --input");
    const Series x = read_series_file(input);
    if (compare_once(f, *p, m, x, windows)) return 1;
    std::printf("ok: 1 series, %ld windows, no divergence\n", windows);
    return 0;
  }

  if (length < 2) throw UsageError("--length must be at least 2");
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> val(-5, 5);
  for (int t = 0; t < count; ++t) {
    Series x(length);
    for (auto& v : x) v = val(rng);
    const int mm =
        m >= 2 ? m : std::uniform_int_distribution<int>(2, length)(rng);
    if (compare_once(f, *p, mm, x, windows)) return 1;
  }
  std::printf("ok: %d series, %ld windows, no divergence\n", count, windows);
  return 0;
}

// ---- witness-map / counterexamples ------------------------------------

int run_witness_map() {
  int failures = 0;
  for (const WitnessRow& row : witness_map()) {
    const Kernel lang = regex_compile(row.regex);
    const bool ok = triple_feasible(lang, row.triple);
    std::printf("%-4s %-11s %s\n", ok ? "ok" : "FAIL",
                triple_name(row.triple).c_str(), row.regex);
    failures += ok ? 0 : 1;
  }
  std::printf("%zu rows, %d failures\n", witness_map().size(), failures);
  return failures == 0 ? 0 : 1;
}

int run_counterexamples() {
  const ReplayReport report = reproduce_counterexamples();
  for (const ReplayRow& row : report.rows) {
    const bool ok = row.reported_reproduced && row.expected_reproduced;
    std::printf("%-4s %-28s equation=%d\n", ok ? "ok" : "FAIL",
                row.constraint.c_str(), row.equation);
  }
  std::printf("%zu rows, all reproduced: %s\n", report.rows.size(),
              yesno(report.all_pass));
  return report.all_pass ? 0 : 1;
}

// ---- reformulate / dot -------------------------------------------------

int run_reformulate(const std::string& pattern_name,
                    const std::string& feature_name_, int m, int n,
                    const std::string& equation, const std::string& output) {
  const Pattern* p = find_pattern(pattern_name);
  if (!p) throw UsageError("unknown pattern: " + pattern_name);
  const Feature f = resolve_feature(feature_name_);
  const auto eq = parse_equation(equation);
  if (!eq) throw UsageError("unknown equation: " + equation);
  const ReformulationModel model = emit_reformulation(f, *p, m, n, *eq);
  write_text(output, model.to_json().dump(2) + "\n");
  return 0;
}

int run_dot(const PatternArgs& pargs, const std::string& output) {
  const Pattern p = resolve_pattern(pargs);
  write_text(output, kernel_to_dot(p.lang, p.name));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sliding time-series constraint toolkit"};
  app.require_subcommand(1);

  PatternArgs prop_pattern;
  std::string prop_format = "table";
  CLI::App* properties =
      app.add_subcommand("properties", "infer pattern properties");
  add_pattern_options(properties, prop_pattern, true);
  properties->add_option("--format", prop_format)
      ->check(CLI::IsMember({"table", "json"}));

  PatternArgs cls_pattern;
  std::string cls_format = "table";
  CLI::App* classify =
      app.add_subcommand("classify", "feasible triples and representatives");
  add_pattern_options(classify, cls_pattern, true);
  classify->add_option("--format", cls_format)
      ->check(CLI::IsMember({"table", "json"}));

  std::string chk_pattern, chk_feature, chk_input = "-";
  std::string chk_equation = "auto", chk_format = "table";
  int chk_m = 0, chk_threads = 1;
  std::optional<std::int64_t> chk_low, chk_up;
  CLI::App* check = app.add_subcommand("check", "evaluate every window");
  check->add_option("--pattern", chk_pattern)->required();
  check->add_option("--feature", chk_feature)->required();
  check->add_option("-m,--m", chk_m, "window length")->required();
  check->add_option("--input", chk_input, "series file, - for stdin");
  check->add_option("--low", chk_low, "lower bound on window values");
  check->add_option("--up", chk_up, "upper bound on window values");
  check->add_option("--equation", chk_equation)
      ->check(CLI::IsMember({"plain", "clamp", "guard", "auto"}));
  check->add_option("--threads", chk_threads)->check(CLI::Range(1, 64));
  check->add_option("--format", chk_format)
      ->check(CLI::IsMember({"table", "json", "csv"}));

  PatternArgs orc_pattern;
  std::string orc_feature, orc_input = "-", orc_format = "table";
  int orc_m = 0;
  CLI::App* oracle =
      app.add_subcommand("oracle", "brute-force window values");
  add_pattern_options(oracle, orc_pattern, true);
  oracle->add_option("--feature", orc_feature)->required();
  oracle->add_option("-m,--m", orc_m, "window length")->required();
  oracle->add_option("--input", orc_input, "series file, - for stdin");
  oracle->add_option("--format", orc_format)
      ->check(CLI::IsMember({"table", "json", "csv"}));

  std::string cmp_pattern, cmp_feature, cmp_input;
  int cmp_m = 0, cmp_length = 30, cmp_count = 100;
  unsigned cmp_seed = 1;
  bool cmp_random = false;
  CLI::App* compare =
      app.add_subcommand("compare", "checker versus oracle");
  compare->add_option("--pattern", cmp_pattern)->required();
  compare->add_option("--feature", cmp_feature)->required();
  compare->add_option("-m,--m", cmp_m, "window length (random if omitted)");
  compare->add_option("--input", cmp_input, "series file, - for stdin");
  compare->add_flag("--random", cmp_random, "compare on generated series");
  compare->add_option("--length", cmp_length, "random series length");
  compare->add_option("--count", cmp_count, "number of random series");
  compare->add_option("--seed", cmp_seed, "random seed");

  CLI::App* witness =
      app.add_subcommand("witness-map", "verify the feasibility witnesses");
  (void)witness;

  CLI::App* counter = app.add_subcommand(
      "counterexamples", "replay the evaluation corpus");
  (void)counter;

  std::string ref_pattern, ref_feature, ref_equation, ref_output = "-";
  int ref_m = 0, ref_n = 0;
  CLI::App* reformulate =
      app.add_subcommand("reformulate", "emit the window-sum model");
  reformulate->add_option("--pattern", ref_pattern)->required();
  reformulate->add_option("--feature", ref_feature)->required();
  reformulate->add_option("-m,--m", ref_m, "window length")->required();
  reformulate->add_option("-n,--n", ref_n, "series length")->required();
  reformulate->add_option("--equation", ref_equation)
      ->check(CLI::IsMember({"plain", "clamp"}))
      ->required();
  reformulate->add_option("-o,--output", ref_output, "output path, - for stdout");

  PatternArgs dot_pattern;
  std::string dot_output = "-";
  CLI::App* dot = app.add_subcommand("dot", "export the language automaton");
  add_pattern_options(dot, dot_pattern, true);
  dot->add_option("-o,--output", dot_output, "output path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (properties->parsed()) return run_properties(prop_pattern, prop_format);
    if (classify->parsed()) return run_classify(cls_pattern, cls_format);
    if (check->parsed())
      return run_check(chk_pattern, chk_feature, chk_m, chk_input, chk_low,
                       chk_up, chk_equation, chk_threads, chk_format);
    if (oracle->parsed())
      return run_oracle(orc_pattern, orc_feature, orc_m, orc_input,
                        orc_format);
    if (compare->parsed())
      return run_compare(cmp_pattern, cmp_feature, cmp_m, cmp_input,
                         cmp_random, cmp_length, cmp_count, cmp_seed);
    if (witness->parsed()) return run_witness_map();
    if (counter->parsed()) return run_counterexamples();
    if (reformulate->parsed())
      return run_reformulate(ref_pattern, ref_feature, ref_m, ref_n,
                             ref_equation, ref_output);
    if (dot->parsed()) return run_dot(dot_pattern, dot_output);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
