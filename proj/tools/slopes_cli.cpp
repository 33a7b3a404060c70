#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "slopes/cubic_drawer.hpp"
#include "slopes/errors.hpp"
#include "slopes/fmax.hpp"
#include "slopes/io.hpp"
#include "slopes/matching_drawer.hpp"
#include "slopes/pipeline.hpp"
#include "slopes/svg.hpp"
#include "slopes/verifier.hpp"

namespace fs = std::filesystem;

namespace {

// Exit codes: 0 all drawings verified, 1 a verification failed, 2 bad
// input or usage, 3 basic mode was forced and no basic strategy applies.
constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFallback = 3;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
  }
  fs::rename(tmp, path);
}

std::string slope_list(const slopes::Drawing& d) {
  std::string out;
  for (const auto& s : d.slopes) {
    if (!out.empty()) out += ",";
    out += s.vertical ? "vertical" : slopes::format_rational(s.tangent);
  }
  return out;
}

slopes::Drawing draw_with_mode(const slopes::Graph& g, const std::string& mode) {
  if (mode == "basic") return slopes::draw_cubic_basic(g);
  if (mode == "four") return slopes::draw_cubic_four(g);
  return slopes::draw_any(g);
}

int run_verify_only(const std::vector<std::string>& inputs,
                    const std::string& json_path) {
  int status = kExitOk;
  for (const auto& input : inputs) {
    const auto parsed = slopes::drawing_from_json(read_file(input));
    const auto report = slopes::verify_drawing(parsed.graph, parsed.drawing);
    std::cout << input << ": " << report.summary() << "\n";
    if (!json_path.empty()) {
      nlohmann::json j;
      j["ok"] = report.ok();
      j["issues"] = report.issues;
      write_file_atomic(json_path, j.dump(2) + "\n");
    }
    if (!report.ok()) status = kExitInvalid;
  }
  return status;
}

int run_corpus(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension().string();
    if (ext == ".g6" || ext == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    std::cerr << "no .g6 or .txt files in " << dir << "\n";
    return kExitUsage;
  }

  long total = 0;
  long failed = 0;
  for (const auto& file : files) {
    const std::string text = read_file(file);
    std::vector<std::string> entries;
    if (file.extension() == ".txt") {
      entries.push_back(text);
    } else {
      std::istringstream in(text);
      std::string line;
      while (std::getline(in, line))
        if (!line.empty()) entries.push_back(line);
    }
    long ok_here = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      ++total;
      try {
        const auto g = slopes::parse_graph(entries[i]);
        const auto d = slopes::draw_any(g);
        const auto report = slopes::verify_drawing(g, d);
        if (!report.ok()) throw slopes::InternalError(report.issues.front());
        ++ok_here;
      } catch (const std::exception& e) {
        ++failed;
        std::cout << file.filename().string() << " entry " << i << ": "
                  << e.what() << "\n";
      }
    }
    std::cout << file.filename().string() << ": " << ok_here << "/"
              << entries.size() << " drawings verified\n";
  }
  std::cout << "total: " << (total - failed) << "/" << total << "\n";
  return failed == 0 ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Straight-line drawings of graphs of maximum degree three "
               "using at most four slopes"};
  std::string mode = "auto";
  std::string svg_path;
  std::string json_path;
  std::string table;
  std::string corpus_dir;
  int max_n = 42;
  unsigned long seed = 0;
  std::vector<std::string> inputs;

  app.add_option("--mode", mode,
                 "auto (basic strategies, then the ratio pipeline), basic, "
                 "four, or verify-only for drawing json files")
      ->check(CLI::IsMember({"auto", "basic", "four", "verify-only"}));
  app.add_option("--svg", svg_path, "write an SVG rendering (single input)");
  app.add_option("--json", json_path,
                 "write the exact drawing, or the report in verify-only mode "
                 "(single input)");
  app.add_option("--table", table, "print a bundled table (value: fmax)")
      ->check(CLI::IsMember({"fmax"}));
  app.add_option("--max", max_n, "largest vertex count for --table fmax");
  app.add_option("--corpus", corpus_dir,
                 "draw every graph under a directory in auto mode");
  app.add_option("--seed", seed, "reserved for test tooling");
  app.add_option("inputs", inputs, "graph files: edge list or graph6");
  CLI11_PARSE(app, argc, argv);
  (void)seed;

  try {
    if (!table.empty()) {
      if (max_n < 6 || max_n % 2 != 0) {
        std::cerr << "--max must be an even number of at least 6\n";
        return kExitUsage;
      }
      std::cout << slopes::format_bound_table(slopes::bound_table(max_n));
      return kExitOk;
    }
    if (!corpus_dir.empty()) return run_corpus(corpus_dir);
    if (inputs.empty()) {
      std::cerr << "no input files; see --help\n";
      return kExitUsage;
    }
    if ((!svg_path.empty() || !json_path.empty()) && inputs.size() > 1) {
      std::cerr << "--svg and --json take a single input file\n";
      return kExitUsage;
    }
    if (mode == "verify-only") return run_verify_only(inputs, json_path);

    int status = kExitOk;
    for (const auto& input : inputs) {
      const auto g = slopes::parse_graph(read_file(input));
      slopes::Drawing d;
      try {
        d = draw_with_mode(g, mode);
      } catch (const slopes::Fallback& e) {
        std::cerr << input << ": " << e.what() << "\n";
        return kExitFallback;
      }
      const auto report = slopes::verify_drawing(g, d);
      std::cout << input << ": " << report.summary() << " n="
                << g.vertex_count() << " m=" << g.edge_count() << " mode="
                << (d.mode == slopes::Drawing::Mode::Basic ? "basic" : "four")
                << " slopes=" << slope_list(d) << "\n";
      if (!report.ok()) status = kExitInvalid;
      if (!json_path.empty())
        write_file_atomic(json_path, slopes::drawing_to_json(g, d));
      if (!svg_path.empty())
        write_file_atomic(svg_path, slopes::drawing_to_svg(g, d));
    }
    return status;
  } catch (const slopes::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
