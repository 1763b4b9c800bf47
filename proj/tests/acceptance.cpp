// Runs every acceptance check and prints one PASS/FAIL line per criterion.
// Optional argument: path for the full JSON report.
#include <iomanip>
#include <iostream>

#include "fbh/verify.hpp"

int main(int argc, char** argv) {
  fbh::verify::Options options;
  fbh::io::Json checks = fbh::io::Json::array();
  bool all = true;
  int index = 0;
  for (const auto& id : fbh::verify::check_ids()) {
    const auto r = fbh::verify::run_check(id, options);
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << ++index << ". " << id << ": " << r.claim << " ["
              << std::fixed << std::setprecision(2) << r.seconds << " s of " << std::setprecision(0)
              << r.limit_seconds << " s]\n";
    for (const auto& f : r.failures) std::cout << "      " << f << '\n';
    all = all && r.pass;
    checks.push_back(fbh::verify::to_json(r));
  }
  if (argc > 1) fbh::io::write_file(argv[1], {{"seed", options.seed}, {"pass", all}, {"checks", checks}});
  std::cout << (all ? "all criteria pass" : "some criteria FAIL") << '\n';
  return all ? 0 : 1;
}
