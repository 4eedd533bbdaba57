// Copyright 2026 The amtop Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "amtop/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "amtop/enumerate.hpp"
#include "amtop/generalized.hpp"
#include "amtop/io.hpp"
#include "amtop/maps.hpp"
#include "amtop/operators.hpp"
#include "amtop/theorems.hpp"

#ifndef AMTOP_DEFAULT_GOLDEN_DIR
#define AMTOP_DEFAULT_GOLDEN_DIR "golden"
#endif

namespace amtop::cli {
namespace {

// "0,2" or "none".
SubsetMask parse_set(const std::string& text, int n) {
  if (text == "none") return SubsetMask::empty(n);
  std::vector<int> points;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit)) {
      throw InputError("--set expects comma-separated point indices or \"none\", got \"" + text + "\"");
    }
    points.push_back(std::stoi(item));
  }
  if (points.empty()) throw InputError("--set is empty; spell the empty set \"none\"");
  try {
    return SubsetMask::from_points(n, points);
  } catch (const std::out_of_range& e) {
    throw InputError(e.what());
  }
}

struct AuditFlags {
  int min_points = 0;
  std::optional<int> max_points;
  int jobs = 0;
  std::size_t cap = 10;
  std::string out_dir;
  std::string golden_dir = AMTOP_DEFAULT_GOLDEN_DIR;
};

void add_audit_flags(CLI::App* cmd, AuditFlags& flags) {
  cmd->add_option("--min-points", flags.min_points, "Smallest space size in the universe");
  cmd->add_option("--jobs", flags.jobs, "Worker threads (0 = all cores, 1 = serial)");
  cmd->add_option("--cap", flags.cap, "Counterexamples kept per report");
  cmd->add_option("--out", flags.out_dir, "Write reports into this directory");
  cmd->add_option("--golden", flags.golden_dir, "Directory of golden reports");
}

// Compares against a golden report if one exists. False on verdict mismatch.
bool matches_golden(const AuditReport& report, const std::string& golden_dir, std::ostream& err) {
  const auto path =
      std::filesystem::path(golden_dir) / report_file_name(report.audit, report.universe);
  if (!std::filesystem::exists(path)) {
    err << "note: no golden report " << path.string() << "\n";
    return true;
  }
  const AuditReport golden = report_from_json(read_json_file(path));
  if (golden.verdict != report.verdict) {
    err << audit_name(report.audit) << ": verdict " << verdict_name(report.verdict)
        << " but golden says " << verdict_name(golden.verdict) << "\n";
    return false;
  }
  if (golden.conclusion_failures != report.conclusion_failures ||
      golden.hypothesis_satisfied != report.hypothesis_satisfied) {
    err << "warning: " << audit_name(report.audit) << " counts differ from " << path.string() << "\n";
  }
  return true;
}

int emit_reports(const std::vector<AuditReport>& reports, const AuditFlags& flags, bool as_list,
                 std::ostream& out, std::ostream& err) {
  bool ok = true;
  for (const auto& r : reports) ok = matches_golden(r, flags.golden_dir, err) && ok;
  if (!flags.out_dir.empty()) {
    for (const auto& r : reports) {
      const auto path = std::filesystem::path(flags.out_dir) / report_file_name(r.audit, r.universe);
      write_text_file(path, dump_canonical(report_to_json(r)));
      err << "wrote " << path.string() << " (" << verdict_name(r.verdict) << ")\n";
    }
  } else if (as_list) {
    Json all = Json::array();
    for (const auto& r : reports) all.push_back(report_to_json(r));
    out << dump_canonical(all);
  } else {
    out << dump_canonical(report_to_json(reports.front()));
  }
  return ok ? kExitOk : kExitGoldenMismatch;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-space alpha^m set calculus and theorem audits", "amtop"};
  app.require_subcommand(1);

  std::string space_file, map_file, set_text, class_name, theorem;
  int points = 0;
  bool allow_five = false;
  AuditFlags check_flags, all_flags, measure_flags;
  int space_max = 3, pair_max = 3, triple_max = 2;

  auto* enumerate = app.add_subcommand("enumerate", "List every topology on N labeled points");
  enumerate->add_option("--points", points, "Point count")->required();
  enumerate->add_flag("--allow-five", allow_five, "Permit 5-point enumeration");

  auto* classify = app.add_subcommand("classify", "Membership of a subset in every set class");
  classify->add_option("--space", space_file)->required();
  classify->add_option("--set", set_text, "e.g. 0,1 or none")->required();

  auto* families = app.add_subcommand("families", "Every subset in one set class");
  families->add_option("--space", space_file)->required();
  families->add_option("--class", class_name, "e.g. alpha-m-closed")->required();

  auto* operators = app.add_subcommand("operators", "Interior/closure operators on a subset");
  operators->add_option("--space", space_file)->required();
  operators->add_option("--set", set_text)->required();

  auto* analyze = app.add_subcommand("analyze-map", "Every map-class predicate for one map");
  analyze->add_option("--map", map_file)->required();

  auto* check = app.add_subcommand("check", "Run one theorem audit");
  check->add_option("--theorem", theorem, "e.g. thm-3-7")->required();
  check->add_option("--max-points", check_flags.max_points, "Largest space size in the universe");
  add_audit_flags(check, check_flags);

  auto* run_all_cmd = app.add_subcommand("run-all", "Run every theorem audit");
  run_all_cmd->add_option("--max-points", pair_max, "Largest space size for map audits");
  run_all_cmd->add_option("--space-max-points", space_max, "Largest space size for space audits");
  run_all_cmd->add_option("--triple-max-points", triple_max,
                          "Largest space size for composition audits");
  add_audit_flags(run_all_cmd, all_flags);

  auto* measure = app.add_subcommand("measure", "Probe closure properties of the alpha^m families");
  measure_flags.max_points = 4;
  measure->add_option("--max-points", measure_flags.max_points);
  measure->add_option("--min-points", measure_flags.min_points);
  measure->add_option("--jobs", measure_flags.jobs);
  measure->add_option("--out", measure_flags.out_dir);
  bool measure_five = false;
  measure->add_flag("--allow-five", measure_five, "Permit 5-point spaces");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*enumerate) {
      const auto catalog = enumerate_topologies(
          points, allow_five ? EnumerationBound::kAllowFivePoints : EnumerationBound::kDefault);
      Json list = Json::array();
      for (const auto& s : catalog.spaces) list.push_back(space_to_json(s));
      out << dump_canonical(list);
      return kExitOk;
    }
    if (*classify) {
      const FiniteSpace space = read_space_file(space_file);
      const SubsetMask set = parse_set(set_text, space.n());
      Json j{{"set", subset_to_json(set)}};
      for (SetClass c : kAllSetClasses) j[std::string(json_key(c))] = amtop::classify(space, set, c);
      out << dump_canonical(j);
      return kExitOk;
    }
    if (*families) {
      const FiniteSpace space = read_space_file(space_file);
      const auto c = parse_set_class(class_name);
      if (!c) throw InputError("unknown class \"" + class_name + "\"");
      Json members = Json::array();
      for (const auto& s : family_of(space, *c).members()) members.push_back(subset_to_json(s));
      out << dump_canonical(Json{{"class", std::string(flag_name(*c))}, {"family", members}});
      return kExitOk;
    }
    if (*operators) {
      const FiniteSpace space = read_space_file(space_file);
      const SubsetMask set = parse_set(set_text, space.n());
      out << dump_canonical(Json{{"set", subset_to_json(set)},
                                 {"interior", subset_to_json(space.interior(set))},
                                 {"closure", subset_to_json(space.closure(set))},
                                 {"alpha_m_interior", subset_to_json(alpha_m_interior(space, set))},
                                 {"alpha_m_closure", subset_to_json(alpha_m_closure(space, set))},
                                 {"kernel", subset_to_json(alpha_kernel(space, set))}});
      return kExitOk;
    }
    if (*analyze) {
      const PointMap f = read_map_file(map_file);
      out << dump_canonical(Json{{"continuous", is_continuous(f)},
                                 {"alpha_m_continuous", is_alpha_m_continuous(f)},
                                 {"alpha_m_irresolute", is_alpha_m_irresolute(f)},
                                 {"alpha_irresolute", is_alpha_irresolute(f)},
                                 {"closed_map", is_closed_map(f)},
                                 {"open_map", is_open_map(f)},
                                 {"alpha_m_closed_map", is_alpha_m_closed_map(f)},
                                 {"alpha_m_open_map", is_alpha_m_open_map(f)},
                                 {"injective", f.is_injective()},
                                 {"surjective", f.is_surjective()}});
      return kExitOk;
    }
    if (*check) {
      const auto id = parse_audit_id(theorem);
      if (!id) throw InputError("unknown theorem \"" + theorem + "\"");
      Universe u = AuditConfig{}.universe_for(*id);
      u.min_points = check_flags.min_points;
      if (check_flags.max_points) u.max_points = *check_flags.max_points;
      const RunOptions options{check_flags.jobs, check_flags.cap};
      return emit_reports({run_audit(*id, u, options)}, check_flags, false, out, err);
    }
    if (*run_all_cmd) {
      const AuditConfig config{all_flags.min_points, space_max, pair_max, triple_max};
      const RunOptions options{all_flags.jobs, all_flags.cap};
      return emit_reports(run_all(config, options), all_flags, true, out, err);
    }
    if (*measure) {
      const auto report = measure_family_structure(measure_flags.min_points,
                                                   measure_flags.max_points.value_or(4),
                                                   RunOptions{measure_flags.jobs, 10},
                                                   measure_five ? EnumerationBound::kAllowFivePoints
                                                                : EnumerationBound::kDefault);
      const std::string text = dump_canonical(structure_to_json(report));
      if (!measure_flags.out_dir.empty()) {
        const auto path = std::filesystem::path(measure_flags.out_dir) /
                          ("structure.points-" + std::to_string(report.min_points) + "-" +
                           std::to_string(report.max_points) + ".json");
        write_text_file(path, text);
        err << "wrote " << path.string() << "\n";
      } else {
        out << text;
      }
      return kExitOk;
    }
  } catch (const TopologyError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace amtop::cli
