// barystrat command-line front end. Talks to the engine exclusively through
// the C API in barystrat.h; every decision quantity stays an exact rational
// string on this side of the boundary.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "barystrat.h"

namespace {

constexpr const char* kUsage =
    "usage: barystrat <command> [options]\n"
    "\n"
    "commands:\n"
    "  analyze    classify the barycenter space for one parameter set\n"
    "  scan       phase diagram over rho/(4pi) in (0, rho-max)\n"
    "  graph      stratum graph (DOT) for one parameter set\n"
    "  singular   list the singular values up to a bound\n"
    "  threshold  contractibility threshold alpha* for one varying weight\n"
    "\n"
    "options:\n"
    "  --rho-over-4pi <p/q>  rho in 4*pi units (analyze, graph, threshold)\n"
    "  --rho-max <p/q>       upper bound for scan and singular\n"
    "  --alpha <csv>         comma-separated weights in (-1,0), user order\n"
    "                        (for threshold: the fixed weights)\n"
    "  --index <j>           1-based index of the varying weight (threshold)\n"
    "  --format text|json    output format (default text)\n"
    "  --out <path>          write the report to a file instead of stdout\n"
    "  --dot <path>          write the graph file here (graph)\n"
    "  --cap <n>             stratum cap (default 1048576)\n"
    "\n"
    "rationals are exact: \"p/q\" or a finite decimal, e.g. 9/8 or -0.5\n";

struct Options {
  std::string command;
  std::string rho;      // --rho-over-4pi
  std::string rho_max;  // --rho-max
  std::string alpha;
  std::string format = "text";
  std::string out_path;
  std::string dot_path;
  std::uint64_t cap = 0;
  std::size_t index = 0;
  bool has_rho = false, has_rho_max = false, has_index = false;
};

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::cerr << "run 'barystrat --help' for usage\n";
  return 3;
}

bool parse_count(const std::string& flag, const std::string& text, std::uint64_t& out,
                 std::string& error) {
  if (text.empty()) {
    error = "missing value for " + flag;
    return false;
  }
  std::uint64_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      error = "invalid value for " + flag + ": '" + text + "'";
      return false;
    }
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  out = value;
  return true;
}

// -1 = print help and exit 0; 0 = ok; 3 = usage error (already reported).
int parse_args(int argc, char** argv, Options& opt) {
  if (argc < 2) return usage_error("missing command (analyze, scan, graph, singular, threshold)");
  std::string first = argv[1];
  if (first == "-h" || first == "--help") {
    std::cout << kUsage;
    return -1;
  }
  opt.command = first;
  if (opt.command != "analyze" && opt.command != "scan" && opt.command != "graph" &&
      opt.command != "singular" && opt.command != "threshold") {
    return usage_error("unknown command '" + opt.command + "'");
  }

  for (int i = 2; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "-h" || arg == "--help") {
      std::cout << kUsage;
      return -1;
    }
    std::string flag = arg;
    std::string value;
    bool have_value = false;
    if (std::size_t eq = arg.find('='); eq != std::string::npos) {
      flag = arg.substr(0, eq);
      value = arg.substr(eq + 1);
      have_value = true;
    }
    auto next_value = [&]() -> bool {
      if (have_value) return true;
      if (i + 1 >= argc) return false;
      value = argv[++i];
      return true;
    };

    if (flag == "--rho") {
      return usage_error(
          "--rho takes absolute units; rho is accepted only in 4*pi units: "
          "pass --rho-over-4pi <p/q> meaning rho = 4*pi * (p/q)");
    } else if (flag == "--rho-over-4pi") {
      if (!next_value()) return usage_error("missing value for --rho-over-4pi");
      opt.rho = value;
      opt.has_rho = true;
    } else if (flag == "--rho-max") {
      if (!next_value()) return usage_error("missing value for --rho-max");
      opt.rho_max = value;
      opt.has_rho_max = true;
    } else if (flag == "--alpha") {
      if (!next_value()) return usage_error("missing value for --alpha");
      opt.alpha = value;
    } else if (flag == "--index") {
      if (!next_value()) return usage_error("missing value for --index");
      std::uint64_t j = 0;
      std::string error;
      if (!parse_count("--index", value, j, error) || j == 0) {
        return usage_error(error.empty() ? "--index must be a positive integer" : error);
      }
      opt.index = static_cast<std::size_t>(j);
      opt.has_index = true;
    } else if (flag == "--format") {
      if (!next_value()) return usage_error("missing value for --format");
      if (value != "text" && value != "json") {
        return usage_error("invalid value for --format: '" + value + "' (text or json)");
      }
      opt.format = value;
    } else if (flag == "--out") {
      if (!next_value()) return usage_error("missing value for --out");
      opt.out_path = value;
    } else if (flag == "--dot") {
      if (!next_value()) return usage_error("missing value for --dot");
      opt.dot_path = value;
    } else if (flag == "--cap") {
      if (!next_value()) return usage_error("missing value for --cap");
      std::string error;
      if (!parse_count("--cap", value, opt.cap, error)) return usage_error(error);
    } else {
      return usage_error("unknown option '" + flag + "'");
    }
  }

  if ((opt.command == "analyze" || opt.command == "graph" || opt.command == "threshold") &&
      !opt.has_rho) {
    return usage_error(opt.command + " requires --rho-over-4pi");
  }
  if ((opt.command == "scan" || opt.command == "singular") && !opt.has_rho_max) {
    return usage_error(opt.command + " requires --rho-max");
  }
  if (opt.command == "threshold" && !opt.has_index) {
    return usage_error("threshold requires --index");
  }
  return 0;
}

// Validates a rational-valued flag up front so the error names the flag.
int check_rational_flag(const std::string& flag, const std::string& text) {
  char* canon = nullptr;
  if (bary_rational_canonical(text.c_str(), &canon) != BARY_OK) {
    return usage_error("invalid value for " + flag + ": " + bary_last_error() +
                       " (rho is given in 4*pi units as an exact rational)");
  }
  bary_string_free(canon);
  return 0;
}

int check_alpha_flag(const std::string& csv) {
  if (csv.empty()) return 0;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = csv.find(',', start);
    std::string token = csv.substr(start, comma - start);
    while (!token.empty() && token.front() == ' ') token.erase(token.begin());
    while (!token.empty() && token.back() == ' ') token.pop_back();
    char* canon = nullptr;
    if (bary_rational_canonical(token.c_str(), &canon) != BARY_OK) {
      return usage_error("invalid value for --alpha: " + std::string(bary_last_error()));
    }
    bary_string_free(canon);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return 0;
}

int write_output(const std::string& doc, const std::string& path) {
  if (path.empty()) {
    std::cout << doc;
    return 0;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << doc) || !file.flush()) {
    return usage_error("cannot write output file '" + path + "'");
  }
  return 0;
}

int report_api_error(bary_status status) {
  std::cerr << "error: " << bary_last_error() << "\n";
  switch (status) {
    case BARY_ERR_SINGULAR:
      return 2;
    case BARY_ERR_INVALID:
      return 3;
    case BARY_ERR_LIMIT:
      return 4;
    default:
      return 1;
  }
}

struct ParamsHandle {
  bary_params* ptr = nullptr;
  ~ParamsHandle() { bary_params_free(ptr); }
};

struct StringHandle {
  char* ptr = nullptr;
  ~StringHandle() { bary_string_free(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  int rc = parse_args(argc, argv, opt);
  if (rc == -1) return 0;
  if (rc != 0) return rc;

  if (opt.has_rho && (rc = check_rational_flag("--rho-over-4pi", opt.rho)) != 0) return rc;
  if (opt.has_rho_max && (rc = check_rational_flag("--rho-max", opt.rho_max)) != 0) return rc;
  if ((rc = check_alpha_flag(opt.alpha)) != 0) return rc;

  const int as_json = opt.format == "json" ? 1 : 0;
  StringHandle doc;

  if (opt.command == "analyze") {
    ParamsHandle params;
    bary_status status = bary_params_create(opt.rho.c_str(), opt.alpha.c_str(), &params.ptr);
    if (status != BARY_OK) return report_api_error(status);
    status = bary_analyze(params.ptr, opt.cap, as_json, &doc.ptr);
    if (status != BARY_OK) return report_api_error(status);
    return write_output(doc.ptr, opt.out_path);
  }

  if (opt.command == "graph") {
    ParamsHandle params;
    bary_status status = bary_params_create(opt.rho.c_str(), opt.alpha.c_str(), &params.ptr);
    if (status != BARY_OK) return report_api_error(status);
    status = bary_graph_dot(params.ptr, opt.cap, &doc.ptr);
    if (status != BARY_OK) return report_api_error(status);
    const std::string& path = !opt.dot_path.empty() ? opt.dot_path : opt.out_path;
    return write_output(doc.ptr, path);
  }

  if (opt.command == "scan") {
    bary_status status =
        bary_scan(opt.alpha.c_str(), opt.rho_max.c_str(), opt.cap, as_json, &doc.ptr);
    if (status != BARY_OK) return report_api_error(status);
    return write_output(doc.ptr, opt.out_path);
  }

  if (opt.command == "singular") {
    ParamsHandle params;
    bary_status status =
        bary_params_create(opt.rho_max.c_str(), opt.alpha.c_str(), &params.ptr);
    if (status != BARY_OK) return report_api_error(status);
    status = bary_singular_report(params.ptr, opt.rho_max.c_str(), as_json, &doc.ptr);
    if (status != BARY_OK) return report_api_error(status);
    return write_output(doc.ptr, opt.out_path);
  }

  // threshold
  bary_status status =
      bary_threshold(opt.alpha.c_str(), opt.index, opt.rho.c_str(), as_json, &doc.ptr);
  if (status != BARY_OK) return report_api_error(status);
  return write_output(doc.ptr, opt.out_path);
}
