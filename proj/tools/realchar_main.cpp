// realchar: compute class data, real/rational character counts and exact
// character tables for permutation groups given by descriptors, and run the
// named verification checks.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "realchar/checks.hpp"

using namespace realchar;

namespace {

std::string toolchain_string() {
#if defined(__clang__)
  return std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
  return std::string("gcc ") + __VERSION__;
#else
  return "unknown";
#endif
}

int cmd_info(const std::string& desc_str) {
  DescPtr d = parse_descriptor(desc_str);
  PermGroup G = build_group(d);
  std::cout << "descriptor:       " << d->str() << "\n";
  std::cout << "degree:           " << G.degree() << "\n";
  std::cout << "order:            " << G.order() << "\n";
  auto cs = conjugacy_classes(G);
  std::cout << "classes:          " << cs.classes.size() << "\n";
  std::cout << "real classes:     " << cs.k_real() << "\n";
  std::cout << "rational classes: " << cs.k_rational() << "\n";
  std::cout << "real orders:      " << set_str(cs.real_element_orders()) << "\n";
  std::cout << "(C)-group:        " << (cs.is_c_group() ? "yes" : "no") << "\n";
  auto rep = structure_report(G);
  std::cout << "solvable radical: order " << rep.sol_radical.order() << "\n";
  std::cout << "quotient:         " << identify(rep.quotient_fingerprint) << " ("
            << rep.quotient_fingerprint.str() << ")\n";
  return 0;
}

int cmd_classes(const std::string& desc_str) {
  DescPtr d = parse_descriptor(desc_str);
  PermGroup G = build_group(d);
  auto cs = conjugacy_classes(G);
  std::cout << d->str() << ": order " << G.order() << ", " << cs.classes.size()
            << " classes, exponent " << cs.exponent << "\n";
  std::cout << "idx  order  size      real rational representative\n";
  for (size_t j = 0; j < cs.classes.size(); ++j) {
    const auto& c = cs.classes[j];
    std::ostringstream line;
    line << std::left << std::setw(5) << j << std::setw(7) << c.order << std::setw(10) << c.size
         << std::setw(5) << (c.real ? "yes" : "no") << std::setw(9)
         << (c.rational ? "yes" : "no") << c.rep.cycle_string();
    std::cout << line.str() << "\n";
  }
  return 0;
}

int cmd_chartab(const std::string& desc_str, const std::string& format, u64 seed) {
  DescPtr d = parse_descriptor(desc_str);
  PermGroup G = build_group(d);
  auto cs = conjugacy_classes(G);
  auto t = character_table(cs, seed);
  if (format == "json") {
    nlohmann::json j;
    j["group"] = d->str();
    j["order"] = t.group_order;
    j["exponent"] = t.exponent;
    j["prime"] = t.prime;
    j["classes"] = nlohmann::json::array();
    for (size_t i = 0; i < t.class_orders.size(); ++i)
      j["classes"].push_back({{"order", t.class_orders[i]}, {"size", t.class_sizes[i]}});
    j["rows"] = nlohmann::json::array();
    for (const auto& row : t.rows) {
      nlohmann::json jr;
      jr["degree"] = row.degree;
      jr["real"] = row.real;
      jr["rational"] = row.rational;
      jr["values"] = nlohmann::json::array();
      for (const auto& v : row.values) jr["values"].push_back(v.str());
      j["rows"].push_back(std::move(jr));
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (format == "csv") {
    std::cout << "degree,real,rational";
    for (size_t i = 0; i < t.class_orders.size(); ++i)
      std::cout << ",c" << i << "_o" << t.class_orders[i];
    std::cout << "\n";
    for (const auto& row : t.rows) {
      std::cout << row.degree << "," << (row.real ? 1 : 0) << "," << (row.rational ? 1 : 0);
      for (const auto& v : row.values) std::cout << "," << v.str();
      std::cout << "\n";
    }
    return 0;
  }
  std::cout << d->str() << ": " << t.rows.size() << " irreducible characters over Q(zeta_"
            << t.exponent << "), reduction prime " << t.prime << "\n";
  std::cout << "class:    ";
  for (size_t i = 0; i < t.class_orders.size(); ++i)
    std::cout << std::setw(10) << (std::to_string(t.class_orders[i]) + "^" +
                                   std::to_string(t.class_sizes[i]));
  std::cout << "  flags\n";
  for (const auto& row : t.rows) {
    std::cout << "deg " << std::setw(5) << row.degree << " ";
    for (const auto& v : row.values) {
      std::string s = v.str();
      if (s.size() > 9) s = s.substr(0, 7) + "..";
      std::cout << std::setw(10) << s;
    }
    std::cout << "  " << (row.real ? "R" : "-") << (row.rational ? "Q" : "-") << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& check, CheckOptions opts, const std::string& json_path) {
  std::vector<std::string> ids;
  if (check == "all") {
    ids = check_ids();
  } else {
    const auto& known = check_ids();
    if (std::find(known.begin(), known.end(), check) == known.end()) {
      std::cerr << "unknown check id: " << check << "\nknown checks:";
      for (const auto& id : known) std::cerr << " " << id;
      std::cerr << " all\n";
      return 2;
    }
    ids.push_back(check);
  }
  Session session(std::move(opts));
  nlohmann::json out = nlohmann::json::array();
  bool all_pass = true;
  for (const auto& id : ids) {
    VerificationReport rep = run_check(id, session);
    rep.toolchain = toolchain_string();
    std::cout << rep.human_table();
    all_pass = all_pass && rep.overall_pass();
    out.push_back(rep.to_json());
  }
  if (session.opts().regen_oracles) {
    if (session.save_oracles())
      std::cout << "oracle file written: " << session.oracles_path() << "\n";
    else
      std::cerr << "warning: could not write oracle file " << session.oracles_path() << "\n";
  }
  if (!json_path.empty()) {
    std::ofstream jf(json_path, std::ios::trunc);
    if (jf)
      jf << out.dump(2) << "\n";
    else
      std::cerr << "warning: could not write JSON report to " << json_path << "\n";
  }
  std::cout << (all_pass ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"realchar: conjugacy classes, real/rational characters and structure of finite permutation groups"};
  app.require_subcommand(1);

  std::string desc;
  auto* info = app.add_subcommand("info", "order, class counts, real data and structure");
  info->add_option("descriptor", desc, "group descriptor, e.g. \"PSL(2,8).3\"")->required();

  std::string cdesc;
  auto* classes = app.add_subcommand("classes", "conjugacy class table");
  classes->add_option("descriptor", cdesc)->required();

  std::string tdesc, format = "table";
  u64 tseed = 0;
  auto* chartab = app.add_subcommand("chartab", "exact character table");
  chartab->add_option("descriptor", tdesc)->required();
  chartab->add_option("--format", format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  chartab->add_option("--seed", tseed, "seed for the eigenspace splitting");

  std::string check;
  CheckOptions opts;
  std::string json_path;
  bool no_cache = false;
  auto* verify = app.add_subcommand("verify", "run a named verification check");
  verify->add_option("check", check, "check id or 'all'")->required();
  verify->add_flag("--strict", opts.strict, "missing or stale derived expectations fail");
  verify->add_option("--jobs", opts.jobs, "parallel workers across groups")->check(CLI::PositiveNumber);
  verify->add_option("--cache-dir", opts.cache_dir, "cache directory (default: REALCHAR_CACHE_DIR or the user cache)");
  verify->add_flag("--no-cache", no_cache, "disable the on-disk cache");
  verify->add_option("--seed", opts.seed, "seed for randomized internals");
  verify->add_flag("--regen-oracles", opts.regen_oracles, "recompute and rewrite derived expectations");
  verify->add_option("--oracles", opts.oracles_path, "oracle file path");
  verify->add_option("--json", json_path, "write the JSON report to this file");

  try {
    app.parse(argc, argv);
    if (*info) return cmd_info(desc);
    if (*classes) return cmd_classes(cdesc);
    if (*chartab) return cmd_chartab(tdesc, format, tseed);
    if (*verify) {
      opts.use_cache = !no_cache;
      return cmd_verify(check, std::move(opts), json_path);
    }
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
