#include "segre/cli.hpp"

#include "segre/characteristic.hpp"
#include "segre/errors.hpp"
#include "segre/jordan.hpp"
#include "segre/matrix_io.hpp"
#include "segre/rank_pattern.hpp"
#include "segre/render.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace segre::cli {

namespace {

enum class Format { Text, Json, Svg, Ascii };

struct CliConfig {
  int n = 0;
  std::string method = "gf";
  std::string format;
  std::string matrix_file;
  std::string pattern;
  std::string output_path;
  int columns = 4;
};

// Writes to --out when given, otherwise to `out`.
int emit(const CliConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
  if (cfg.output_path.empty()) {
    out << text;
    return kSuccess;
  }
  std::ofstream file(cfg.output_path, std::ios::binary);
  if (file) file << text;
  if (!file) {
    err << "error: cannot write " << cfg.output_path << "\n";
    return kIoError;
  }
  return kSuccess;
}

int cmd_count(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  std::string text;
  if (cfg.method == "gf") {
    text = count_segre_gf(cfg.n).str() + "\n";
  } else if (cfg.method == "sum") {
    text = count_segre_sum(cfg.n).str() + "\n";
  } else {
    const BigInt gf = count_segre_gf(cfg.n);
    const BigInt sum = count_segre_sum(cfg.n);
    text = gf.str() + "\n" + sum.str() + "\n";
    if (gf != sum) {
      const int rc = emit(cfg, text, out, err);
      err << "error: generating function and partition sum disagree for n = " << cfg.n << "\n";
      return rc == kSuccess ? kSelfCheckMismatch : rc;
    }
  }
  return emit(cfg, text, out, err);
}

int cmd_enumerate(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto all = enumerate_segre(cfg.n);
  std::string text;
  if (cfg.format == "json") {
    nlohmann::json array = nlohmann::json::array();
    for (const auto& s : all) array.push_back(format_segre(s));
    text = array.dump() + "\n";
  } else {
    for (const auto& s : all) text += format_segre(s) + "\n";
    text += "total: " + std::to_string(all.size()) + "\n";
  }
  return emit(cfg, text, out, err);
}

int cmd_analyze(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  ExactMatrix m;
  try {
    m = load_matrix_file(cfg.matrix_file);
  } catch (const MatrixFormatError& e) {
    err << "error: " << cfg.matrix_file << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  try {
    const AnalysisReport report = analyze(m);
    const std::string text =
        cfg.format == "json" ? format_report_json(report) + "\n" : format_report_text(report);
    return emit(cfg, text, out, err);
  } catch (const IrrationalEigenvalue& e) {
    err << "error: " << e.what() << "\n";
    return kIrrationalEigenvalue;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int cmd_render(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto all = enumerate_segre(cfg.n);
  std::vector<StructureGrid> grids;
  grids.reserve(all.size());
  for (const auto& s : all) grids.push_back(grid_of(JordanSpec::with_positional_eigenvalues(s)));
  std::string text;
  if (cfg.format == "ascii") {
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (k > 0) text += "\n";
      text += format_segre(all[k]) + "\n" + render_ascii(grids[k]) + "\n";
    }
  } else {
    text = render_svg(grids, cfg.columns);
  }
  return emit(cfg, text, out, err);
}

int cmd_rankpattern(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const RankPattern rp = parse_rank_pattern(cfg.pattern);
  try {
    const NullityGrowth q = nullity_growth(rp);
    const Partition blocks = conjugate(Partition(q.values()));
    return emit(cfg,
                "growth: " + format_partition(Partition(q.values())) + "\nblocks: " +
                    format_partition(blocks) + "\n",
                out, err);
  } catch (const NonMonotoneGrowth& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidRankPattern;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Segre characteristics: counting, enumeration, matrix analysis, figures",
               "segre"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto* count = app.add_subcommand("count", "Print P(n), the number of Segre classes of n x n matrices");
  count->add_option("n", cfg.n, "Matrix dimension")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--method", cfg.method, "gf, sum, or both (self-check)")
      ->check(CLI::IsMember({"gf", "sum", "both"}));
  count->add_option("--out", cfg.output_path, "Write to this file instead of stdout");

  auto* enumerate = app.add_subcommand("enumerate", "List every Segre characteristic of dimension n");
  enumerate->add_option("n", cfg.n, "Matrix dimension")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  enumerate->add_option("--out", cfg.output_path, "Write to this file instead of stdout");

  auto* analyze_cmd = app.add_subcommand("analyze", "Segre characteristic of a rational matrix");
  analyze_cmd->add_option("matrix_file", cfg.matrix_file, "JSON matrix file")->required();
  analyze_cmd->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_option("--out", cfg.output_path, "Write to this file instead of stdout");

  auto* render = app.add_subcommand("render", "Draw every Jordan structure of dimension n");
  render->add_option("n", cfg.n, "Matrix dimension")->required()->check(CLI::PositiveNumber);
  render->add_option("--out", cfg.output_path, "Write to this file instead of stdout");
  render->add_option("--columns", cfg.columns, "Grids per row (svg)")->check(CLI::PositiveNumber);
  render->add_option("--format", cfg.format, "svg or ascii")->check(CLI::IsMember({"svg", "ascii"}));

  auto* rankpattern = app.add_subcommand("rankpattern", "Jordan blocks from a rank pattern");
  rankpattern->add_option("pattern", cfg.pattern, "e.g. \"n=10: 10,7,5,3,2,1,0\"")->required();
  rankpattern->add_option("--out", cfg.output_path, "Write to this file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kSuccess : kUsage;
  }

  try {
    if (count->parsed()) return cmd_count(cfg, out, err);
    if (enumerate->parsed()) return cmd_enumerate(cfg, out, err);
    if (analyze_cmd->parsed()) return cmd_analyze(cfg, out, err);
    if (render->parsed()) return cmd_render(cfg, out, err);
    if (rankpattern->parsed()) return cmd_rankpattern(cfg, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidRankPattern& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace segre::cli
