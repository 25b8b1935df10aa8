#include "grm/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "grm/json_io.hpp"

namespace grm {

namespace {

struct RunConfig {
  std::string input;
  std::string input2;
  std::string format = "json";
  int n = 1;
  std::optional<int> max_len;
  std::optional<int> field;
  std::uint64_t seed = 0;
  int max_summands = 2;
  bool advisory = false;
};

std::string dims_string(const std::vector<int>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

void print_order(std::ostream& out, const Poset& p, const std::vector<ChainValue>& values) {
  auto vo = order_by_value(values);
  std::size_t width = 0;
  for (const auto& id : p.elements()) width = std::max(width, id.size());
  for (auto i : vo.order) out << p.id(i) << std::string(width - p.id(i).size() + 2, ' ') << values[i].to_string() << '\n';
  for (const auto& t : vo.ties) {
    out << "tie:";
    for (auto i : t) out << ' ' << p.id(i);
    out << '\n';
  }
}

// Renders a length function (a measure or an iterate) in the chosen format.
void emit_values(std::ostream& out, const RunConfig& cfg, const LengthFunction& f, const std::string& name) {
  if (cfg.format == "dot") {
    out << hasse_dot(f.poset(), name);
    return;
  }
  if (cfg.format == "table") {
    print_order(out, f.poset(), f.values());
    return;
  }
  Json j = to_json(f);
  auto vo = order_by_value(f.values());
  Json order = Json::array(), ties = Json::array();
  for (auto i : vo.order) order.push_back(f.poset().id(i));
  for (const auto& t : vo.ties) {
    Json group = Json::array();
    for (auto i : t) group.push_back(f.poset().id(i));
    ties.push_back(group);
  }
  j["order"] = order;
  j["ties"] = ties;
  out << j.dump(2) << '\n';
}

LengthFunction load_length_function(const std::string& path) {
  if (path.empty()) throw Error(ErrorCode::ParseError, "--input is required");
  return length_function_from_json(read_json_file(path));
}

int cmd_measure(const RunConfig& cfg, std::ostream& out) {
  LengthFunction base = load_length_function(cfg.input);
  if (cfg.n < 1) throw Error(ErrorCode::IterationBudgetExceeded, "-n must be at least 1");
  emit_values(out, cfg, iterate_measure(base, cfg.n), "measure");
  return kExitOk;
}

int cmd_equiv(const RunConfig& cfg, std::ostream& out) {
  LengthFunction f = load_length_function(cfg.input);
  if (cfg.input2.empty()) throw Error(ErrorCode::ParseError, "--input2 is required");
  LengthFunction g = load_length_function(cfg.input2);
  auto w = equivalence_witness(f, g);
  if (cfg.format == "json") {
    Json j = {{"equivalent", !w}};
    if (w) j["witness"] = {f.poset().id(w->first), f.poset().id(w->second)};
    out << j.dump(2) << '\n';
  } else if (w) {
    out << "not equivalent: (" << f.poset().id(w->first) << ", " << f.poset().id(w->second) << ")\n";
  } else {
    out << "equivalent\n";
  }
  return w ? kExitNotEquivalent : kExitOk;
}

void print_detection(std::ostream& out, const RunConfig& cfg, const DetectionResult& r, const Quiver& q) {
  if (cfg.format == "json") {
    out << to_json(r, q).dump(2) << '\n';
    return;
  }
  for (const auto& label : r.detected) out << label << '\n';
  if (r.advisory) out << "(advisory: computed on a truncation)\n";
}

int cmd_quiver(const std::string& sub, const RunConfig& cfg, std::ostream& out) {
  if (cfg.input.empty()) throw Error(ErrorCode::ParseError, "--input is required");
  QuiverInput input = quiver_input_from_json(read_json_file(cfg.input));
  if (cfg.field) input.field = PrimeField(*cfg.field);
  if (cfg.max_len) input.max_len = *cfg.max_len;
  IndPoset ip = enumerate_ind(input.quiver, input.field, input.max_len);

  if (sub == "ind") {
    if (cfg.format == "dot") {
      out << hasse_dot(ip.poset(), "ind");
    } else if (cfg.format == "table") {
      for (const auto& c : ip.classes())
        out << c.label << "  dims " << dims_string(c.rep.dims()) << "  length " << format_rational(module_length(c.rep, input.lengths))
            << '\n';
      out << (ip.complete() ? "complete\n" : "truncated\n");
    } else {
      out << to_json(ip, input.lengths).dump(2) << '\n';
    }
    return kExitOk;
  }
  if (sub == "measure" || sub == "iterate") {
    int n = sub == "measure" ? 1 : cfg.n;
    emit_values(out, cfg, iterate_measure(ip.lengths(input.lengths), n), "ind");
    return kExitOk;
  }
  if (sub == "verify-main") {
    auto report = check_main_property(ip, input.lengths, cfg.max_summands, cfg.seed);
    if (cfg.format == "json") {
      out << to_json(report).dump(2) << '\n';
    } else {
      out << "checked " << report.checked_triples << " instances, " << report.violations.size() << " violations\n";
      for (const auto& v : report.violations) {
        out << to_string(v.kind) << ": " << v.x << " ->";
        for (const auto& y : v.ys) out << ' ' << y;
        out << '\n';
      }
    }
    return report.ok() ? kExitOk : kExitValidation;
  }
  if (sub == "detect-injectives") {
    print_detection(out, cfg, detect_injectives(ip, cfg.advisory), input.quiver);
    return kExitOk;
  }
  if (sub == "detect-simples") {
    print_detection(out, cfg, detect_simples(ip, cfg.advisory), input.quiver);
    return kExitOk;
  }
  throw Error(ErrorCode::ParseError, "unknown quiver subcommand '" + sub + "'");
}

void add_common(CLI::App* app, RunConfig& cfg) {
  app->add_option("--input", cfg.input, "input JSON file");
  app->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table", "dot"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Gabriel-Roiter measures on finite posets and quiver representations", "grm"};
  app.require_subcommand(1);

  auto* measure = app.add_subcommand("measure", "chain length function of a poset length function");
  add_common(measure, cfg);
  measure->add_option("-n", cfg.n, "iteration count");

  auto* equiv = app.add_subcommand("equiv", "compare the orders induced by two length functions");
  add_common(equiv, cfg);
  equiv->add_option("--input2", cfg.input2, "second input JSON file");

  auto* quiver = app.add_subcommand("quiver", "indecomposables of a quiver over a prime field");
  quiver->require_subcommand(1);
  std::vector<CLI::App*> quiver_subs;
  const std::pair<const char*, const char*> quiver_commands[] = {
      {"ind", "list the indecomposables and their subobject order"},
      {"measure", "measure of the indecomposables"},
      {"iterate", "n-fold iterated measure of the indecomposables"},
      {"verify-main", "check the main property on sums of indecomposables"},
      {"detect-injectives", "indecomposables recognised as injective by their measures"},
      {"detect-simples", "indecomposables recognised as simple by their measures"},
  };
  for (auto [name, help] : quiver_commands) {
    auto* sub = quiver->add_subcommand(name, help);
    add_common(sub, cfg);
    sub->add_option("--max-len", cfg.max_len, "largest total dimension enumerated");
    sub->add_option("--field", cfg.field, "characteristic p");
    sub->add_option("--seed", cfg.seed, "seed for randomized search orders");
    if (std::string(name) == "iterate") sub->add_option("-n", cfg.n, "iteration count");
    if (std::string(name) == "verify-main") sub->add_option("--max-summands", cfg.max_summands, "summands per sum");
    if (std::string(name).rfind("detect", 0) == 0) sub->add_flag("--advisory", cfg.advisory, "allow truncated categories");
    quiver_subs.push_back(sub);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitIo;
  }

  try {
    if (*measure) return cmd_measure(cfg, out);
    if (*equiv) return cmd_equiv(cfg, out);
    for (auto* sub : quiver_subs)
      if (*sub) return cmd_quiver(sub->get_name(), cfg, out);
  } catch (const BudgetError& e) {
    err << e.what();
    if (!e.dims().empty()) err << " [dims " << dims_string(e.dims()) << "]";
    err << '\n';
    return kExitBudget;
  } catch (const ValidationError& e) {
    out << to_json(e.report()).dump(2) << '\n';
    err << e.what() << '\n';
    return kExitValidation;
  } catch (const Error& e) {
    err << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::ParseError: return kExitIo;
      case ErrorCode::BudgetExceeded:
      case ErrorCode::IterationBudgetExceeded:
      case ErrorCode::HomSpaceTooLarge: return kExitBudget;
      default: return kExitValidation;
    }
  }
  return kExitIo;
}

}  // namespace grm
