#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>

#include "ballot/clusters.hpp"
#include "ballot/decomp.hpp"
#include "ballot/enumerate.hpp"
#include "ballot/patterns.hpp"
#include "ballot/series.hpp"
#include "ballot/statistics.hpp"
#include "ballot/verify.hpp"
#include "ballot/walks.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Output {
  std::string format = "json";  // json | csv | oeis
  std::string path;             // empty = stdout
  std::ofstream file;
  std::vector<std::string> oeis_values;

  std::ostream& stream() {
    if (path.empty()) return std::cout;
    if (!file.is_open()) {
      file.open(path);
      if (!file) throw std::runtime_error("cannot open output file: " + path);
    }
    return file;
  }

  void emit(const json & j, const std::vector<std::string>& csv_fields) {
    if (format == "json") {
      stream() << j.dump() << "\n";
    } else if (format == "csv") {
      std::string line;
      for (size_t i = 0; i < csv_fields.size(); ++i) {
        if (i) line += ",";
        const auto& v = j.at(csv_fields[i]);
        line += v.is_string() ? v.get<std::string>() : v.dump();
      }
      stream() << line << "\n";
    } else if (format == "oeis") {
      const auto& v = j.at(csv_fields.back());
      oeis_values.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
  }

  void csv_header(const std::vector<std::string>& fields) {
    if (format != "csv") return;
    std::string line;
    for (size_t i = 0; i < fields.size(); ++i) {
      if (i) line += ",";
      line += fields[i];
    }
    stream() << line << "\n";
  }

  void finish() {
    if (format == "oeis" && !oeis_values.empty()) {
      std::string line;
      for (size_t i = 0; i < oeis_values.size(); ++i) {
        if (i) line += ",";
        line += oeis_values[i];
      }
      stream() << line << "\n";
    }
  }
};

ballot::Coord parse_coord(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("coordinate must be x,y");
  return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

// Reference sequences by id. OEIS: bn=A000246, ballot123=A208355,
// ballot321=A071724, ballot132/ballot231=A005817, ballot213/ballot312=A151396,
// gessel=A135404, gbaxis=A005817.
void run_seq(Output& out, const std::string& id, int max_n) {
  using namespace ballot;
  auto emit = [&](int n, const BigInt& v) {
    out.emit({{"id", id}, {"n", n}, {"value", v.str()}}, {"n", "value"});
  };
  if (id == "bn") {
    const auto s = series_coefficients(SeriesKind::BallotEgf, max_n);
    for (int n = 0; n <= max_n; ++n) emit(n, s.count(n, 0));
  } else if (id == "gessel") {
    for (int n = 0; n <= max_n; ++n) emit(n, gessel_closed_form(n));
  } else if (id == "gbaxis") {
    for (int n = 1; n <= max_n; ++n)
      emit(n, count_walks_axis_total(WalkKind::GB, n, {0, 0}, WalkMethod::StepDp));
  } else if (id == "dyck213") {
    const Pattern p = Pattern::parse("213");
    for (int n = 1; n <= max_n; n += 2)
      emit(n, avoid_count({PermClass::Dyck}, n, p));
  } else if (id.rfind("ballot", 0) == 0 && id.size() == 9) {
    const Pattern p = Pattern::parse(id.substr(6));
    for (int n = 1; n <= max_n; ++n)
      emit(n, avoid_count({PermClass::Ballot}, n, p));
  } else {
    throw std::invalid_argument("unknown sequence id: " + id);
  }
}

void run_count(Output& out, const std::string& cls, int n, const std::string& by,
               int h, int b, const std::string& pattern) {
  using namespace ballot;
  if (cls == "wlpp") {
    out.csv_header({"n", "k", "count"});
    if (by == "order") {
      std::map<int, BigInt> by_order;
      for_each_cluster_perm(n, [&](const ClusterPerm& cp) {
        if (is_wlpp(cp)) ++by_order[cp.order()];
        return true;
      });
      for (auto& [k, c] : by_order)
        out.emit({{"n", n}, {"k", k}, {"count", c.str()}}, {"n", "k", "count"});
    } else if (by == "horizontal") {
      for (int k = 0; k <= std::max(0, n - 1); ++k)
        out.emit({{"n", n}, {"k", k}, {"count", count_wlpp_horizontal(n, k).str()}},
                 {"n", "k", "count"});
    } else {
      throw std::invalid_argument("--by must be order or horizontal");
    }
    return;
  }
  const ClassSpec spec = class_spec_from_name(cls, h, b);
  BigInt c;
  if (!pattern.empty())
    c = avoid_count(spec, n, Pattern::parse(pattern));
  else
    c = n >= 9 ? count_class_parallel(spec, n) : count_class(spec, n);
  out.csv_header({"class", "n", "count"});
  out.emit({{"class", cls}, {"n", n}, {"count", c.str()}}, {"class", "n", "count"});
}

void run_map(Output& out, const std::string& bijection, const std::string& input,
             bool inverse) {
  using namespace ballot;
  std::string result;
  if (bijection == "Psi") {
    result = inverse ? Psi_inv(CycleSystem::parse(input)).str()
                     : Psi(Permutation::parse(input)).str();
  } else if (bijection == "Phi") {
    result = inverse ? Phi_inv(Ocp::parse(input)).str()
                     : Phi(ClusterPerm::parse(input)).str();
  } else if (bijection == "psi") {
    result = inverse ? psi_inv(CyclicBoxPerm::parse(input)).str()
                     : psi(BoxWord::parse(input)).str();
  } else if (bijection == "phi") {
    result = inverse ? phi_inv(BoxWord::parse(input)).str()
                     : phi(BoxWord::parse(input)).str();
  } else if (bijection == "varphi" || bijection == "eta") {
    const WilfMap which = bijection == "varphi" ? WilfMap::Varphi213To312
                                                : WilfMap::Eta132To231;
    if (inverse)
      throw std::invalid_argument(
          "wilf maps invert by swapping source and target; apply the sibling map");
    result = wilf_map(which, Permutation::parse(input)).str();
  } else {
    throw std::invalid_argument("unknown bijection: " + bijection);
  }
  if (out.format == "oeis") {
    out.stream() << result << "\n";
    return;
  }
  out.csv_header({"bijection", "input", "output"});
  out.emit({{"bijection", bijection + (inverse ? "^-1" : "")},
            {"input", input},
            {"output", result}},
           {"bijection", "input", "output"});
}

void run_walk(Output& out, const std::string& kind_name, int n,
              const std::string& start_s, const std::string& end_s,
              const std::string& method_name, bool sum_end_axis) {
  using namespace ballot;
  const WalkKind kind = kind_name == "gessel" ? WalkKind::Gessel : WalkKind::GB;
  WalkMethod method = WalkMethod::StepDp;
  if (method_name == "recurrence") method = WalkMethod::Recurrence;
  else if (method_name == "brute") method = WalkMethod::Brute;
  else if (method_name != "step_dp")
    throw std::invalid_argument("unknown method: " + method_name);
  const Coord start = parse_coord(start_s);
  BigInt c;
  json j = {{"kind", kind_name}, {"n", n}, {"start", start_s}};
  if (sum_end_axis) {
    c = count_walks_axis_total(kind, n, start, method);
    j["end"] = "axis";
  } else {
    const Coord end = parse_coord(end_s);
    c = count_walks(kind, n, start, end, method);
    j["end"] = end_s;
  }
  j["method"] = method_name;
  j["count"] = c.str();
  out.csv_header({"kind", "n", "start", "end", "method", "count"});
  out.emit(j, {"kind", "n", "start", "end", "method", "count"});
}

void run_avoid(Output& out, const std::string& cls, const std::string& pattern,
               int max_n, int h, int b) {
  using namespace ballot;
  const ClassSpec spec = class_spec_from_name(cls, h, b);
  const Pattern p = Pattern::parse(pattern);
  out.csv_header({"class", "pattern", "n", "count"});
  for (int n = 1; n <= max_n; ++n)
    out.emit({{"class", cls},
              {"pattern", pattern},
              {"n", n},
              {"count", avoid_count(spec, n, p).str()}},
             {"class", "pattern", "n", "count"});
}

int run_verify(Output& out, const std::string& suite, int max_n,
               std::uint64_t seed) {
  using namespace ballot;
  const Report rep = verify_suite(suite, max_n, seed);
  out.csv_header({"suite", "check", "expected", "actual", "pass"});
  for (const Check& c : rep.checks)
    out.emit({{"suite", c.suite},
              {"check", c.description},
              {"expected", c.expected},
              {"actual", c.actual},
              {"pass", c.pass}},
             {"suite", "check", "expected", "actual", "pass"});
  std::cerr << rep.checks.size() << " checks, "
            << (rep.all_pass() ? "all passed" : "FAILURES") << " ("
            << rep.elapsed_seconds << "s, seed " << rep.seed << ")\n";
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ballot permutations, odd-order bijections, and lattice walks"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Output out;
  std::string format_flag;
  std::uint64_t seed = 1;
  app.add_option("--format", format_flag, "json | csv | oeis");
  app.add_option("--out", out.path, "write output to a file");
  app.add_option("--seed", seed, "seed for randomized checks");

  auto* seq = app.add_subcommand("seq", "emit a reference sequence");
  std::string seq_id;
  int seq_max_n = 9;
  seq->add_option("--id", seq_id, "sequence id")->required();
  seq->add_option("--max-n", seq_max_n, "last index");

  auto* count = app.add_subcommand("count", "count class members");
  std::string count_class_name = "ballot", count_by = "order", count_pattern;
  int count_n = 5, count_h = 0, count_b = 0;
  count->add_option("--class", count_class_name,
                    "all|ballot|odd_order|dyck|hb_ballot|wlpp");
  count->add_option("--n", count_n, "size")->required();
  count->add_option("--by", count_by, "wlpp split: order|horizontal");
  count->add_option("--start-height", count_h, "hb_ballot start height");
  count->add_option("--end-height", count_b, "hb_ballot end height");
  count->add_option("--pattern", count_pattern, "restrict to avoiders");

  auto* map_cmd = app.add_subcommand("map", "apply a bijection");
  std::string map_bijection, map_input;
  bool map_inverse = false;
  map_cmd->add_option("--bijection", map_bijection, "Psi|Phi|psi|phi|varphi|eta")
      ->required();
  map_cmd->add_option("--input", map_input, "object in text form")->required();
  map_cmd->add_flag("--inverse", map_inverse, "apply the inverse map");

  auto* walk = app.add_subcommand("walk", "count quarter-plane walks");
  std::string walk_kind = "gessel", walk_start = "0,0", walk_end = "0,0",
              walk_method = "step_dp";
  int walk_n = 0;
  bool walk_sum = false;
  walk->add_option("--kind", walk_kind, "gessel|gb");
  walk->add_option("--n", walk_n, "steps")->required();
  walk->add_option("--start", walk_start, "x,y");
  walk->add_option("--end", walk_end, "x,y");
  walk->add_option("--method", walk_method, "step_dp|recurrence|brute");
  walk->add_flag("--sum-end-axis", walk_sum, "sum over the free axis endpoint");

  auto* avoid = app.add_subcommand("avoid", "count pattern avoiders");
  std::string avoid_class = "ballot", avoid_pattern;
  int avoid_n = 5, avoid_h = 0, avoid_b = 0;
  avoid->add_option("--class", avoid_class, "permutation class");
  avoid->add_option("--pattern", avoid_pattern, "pattern, e.g. 213")->required();
  avoid->add_option("--n", avoid_n, "last size")->required();
  avoid->add_option("--start-height", avoid_h, "hb_ballot start height");
  avoid->add_option("--end-height", avoid_b, "hb_ballot end height");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string verify_name = "all";
  int verify_max_n = 6;
  verify->add_option("--suite", verify_name,
                     "spiro|wz|main_thm|table1|gessel213|gb231|egf|clusters|"
                     "roundtrip|all");
  verify->add_option("--max-n", verify_max_n, "size bound (per-suite guards apply)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (!format_flag.empty()) {
      if (format_flag != "json" && format_flag != "csv" && format_flag != "oeis")
        throw std::invalid_argument("unknown format: " + format_flag);
      out.format = format_flag;
    } else if (seq->parsed()) {
      out.format = "oeis";
    } else if (count->parsed() && count_class_name == "wlpp") {
      out.format = "csv";
    }
    int status = 0;
    if (seq->parsed()) run_seq(out, seq_id, seq_max_n);
    if (count->parsed())
      run_count(out, count_class_name, count_n, count_by, count_h, count_b,
                count_pattern);
    if (map_cmd->parsed()) run_map(out, map_bijection, map_input, map_inverse);
    if (walk->parsed())
      run_walk(out, walk_kind, walk_n, walk_start, walk_end, walk_method, walk_sum);
    if (avoid->parsed()) run_avoid(out, avoid_class, avoid_pattern, avoid_n,
                                   avoid_h, avoid_b);
    if (verify->parsed()) status = run_verify(out, verify_name, verify_max_n, seed);
    out.finish();
    return status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
