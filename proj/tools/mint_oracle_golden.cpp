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

// Writes the slow oracle's verdicts for every audit on its 2-point universe.
// Usage: mint_oracle_golden OUT_DIR

#include <filesystem>
#include <fstream>
#include <iostream>

#include "amtop/io.hpp"
#include "amtop/oracle.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: mint_oracle_golden OUT_DIR\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  const amtop::AuditConfig config{0, 2, 2, 2};
  for (amtop::AuditId id : amtop::kAllAudits) {
    const amtop::Universe u = config.universe_for(id);
    const auto tally = amtop::oracle::oracle_audit(id, u);
    const amtop::Json j{{"theorem", std::string(amtop::audit_name(id))},
                        {"universe", amtop::universe_to_json(u)},
                        {"instances_checked", tally.instances_checked},
                        {"hypothesis_satisfied", tally.hypothesis_satisfied},
                        {"conclusion_failures", tally.conclusion_failures},
                        {"verdict", std::string(amtop::verdict_name(tally.verdict))}};
    const auto path = dir / amtop::report_file_name(id, u);
    amtop::write_text_file(path, amtop::dump_canonical(j));
    std::cout << path.string() << " " << amtop::verdict_name(tally.verdict) << "\n";
  }
  return 0;
}
