#include "liegrowth/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "liegrowth/avoidance.hpp"
#include "liegrowth/counting.hpp"
#include "liegrowth/derivations.hpp"
#include "liegrowth/emit.hpp"
#include "liegrowth/lyndon.hpp"
#include "liegrowth/series.hpp"
#include "liegrowth/subalgebra.hpp"
#include "liegrowth/subideal.hpp"

namespace liegrowth {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr const char* kAlphabetHelp =
    "Comma-separated name:degree pairs, listed ascending: the LAST letter is the greatest "
    "(so y:1,x:1 means x > y)";

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

GeneratorSet load_generators(const std::string& file, const std::vector<std::string>& inline_exprs,
                             const Alphabet& alpha) {
  if (!file.empty() && !inline_exprs.empty())
    throw UsageError("--generators and --generators-inline are mutually exclusive");
  if (file.empty() && inline_exprs.empty())
    throw UsageError("generators required: pass --generators FILE or --generators-inline EXPR");
  if (!file.empty()) return GeneratorSet::parse_lines(read_lines(file), alpha);
  return GeneratorSet::parse_lines(inline_exprs, alpha);
}

std::vector<long> parse_degree_list(const std::string& csv) {
  std::vector<long> k{0};  // slot 0 unused
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long v = std::stol(item, &pos);
    if (pos != item.size() || v < 0) throw std::invalid_argument("bad degree list entry: " + item);
    k.push_back(v);
  }
  if (k.size() == 1) throw std::invalid_argument("empty degree list");
  return k;
}

Meta prime_meta(const EngineOptions& opts) {
  if (opts.mode != FieldMode::Prime) return {};
  return {{"prime", std::to_string(Fp61::P)}};
}

// true when the generators are exactly the single maximal letter of a rank-2
// degree-1 alphabet (the configuration the closed-form engines cover)
bool is_table1_config(const GradedAlphabet& alpha, const GeneratorSet& gens) {
  if (alpha.size() != 2 || alpha.max_letter_degree() != 1) return false;
  if (gens.elements.size() != 1) return false;
  return gens.elements[0].poly() ==
         NcPoly::letter(&alpha, static_cast<std::uint32_t>(alpha.size() - 1));
}

struct CommonFlags {
  std::string format = "table";
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "Output format: json, csv or table")
      ->default_str("table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->set_config("--config", "", "key=value file presetting these flags");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"growth and cogrowth tables of subalgebras and subideals of free Lie algebras"};
  app.require_subcommand(1);

  // witt
  auto* witt_cmd = app.add_subcommand("witt", "Witt dimensions of the free Lie algebra");
  long witt_rank = 2, witt_n = 10;
  CommonFlags witt_flags;
  witt_cmd->add_option("--rank", witt_rank, "Number of free generators")->required();
  witt_cmd->add_option("--max-degree", witt_n, "Largest degree to tabulate")->required();
  add_common(witt_cmd, witt_flags);

  // lyndon
  auto* lyndon_cmd = app.add_subcommand("lyndon", "Count or list Lyndon-Shirshov words");
  std::string lyndon_alpha;
  long lyndon_n = 10;
  bool lyndon_words = false;
  CommonFlags lyndon_flags;
  lyndon_cmd->add_option("--alphabet", lyndon_alpha, kAlphabetHelp)->required();
  lyndon_cmd->add_option("--max-degree", lyndon_n, "Largest degree")->required();
  lyndon_cmd->add_flag("--words", lyndon_words, "List the words of degree max-degree instead of counting");
  add_common(lyndon_cmd, lyndon_flags);

  // avoid
  auto* avoid_cmd = app.add_subcommand("avoid", "Count words avoiding a forbidden subword");
  std::string avoid_alpha, avoid_word;
  long avoid_n = 10;
  bool avoid_rate = false;
  CommonFlags avoid_flags;
  avoid_cmd->add_option("--alphabet", avoid_alpha, kAlphabetHelp)->required();
  avoid_cmd->add_option("--word", avoid_word, "Forbidden subword")->required();
  avoid_cmd->add_option("--max-degree", avoid_n, "Largest degree");
  avoid_cmd->add_flag("--rate", avoid_rate, "Print the exponential growth rate instead of the table");
  add_common(avoid_cmd, avoid_flags);

  // base
  auto* base_cmd = app.add_subcommand("base", "Exponential base of a graded generating set");
  std::string base_degrees, base_tol = "1e-12";
  CommonFlags base_flags;
  base_cmd->add_option("--degrees", base_degrees, "Histogram k_1,k_2,... of generator degrees")->required();
  base_cmd->add_option("--tolerance", base_tol, "Bracket width for the bisection");
  add_common(base_cmd, base_flags);

  // growth
  auto* growth_cmd = app.add_subcommand("growth", "Growth table of a finitely generated subalgebra");
  std::string growth_alpha, growth_file, growth_mode = "exact";
  std::vector<std::string> growth_inline;
  long growth_n = 8, growth_cap = 0;
  CommonFlags growth_flags;
  growth_cmd->add_option("--alphabet", growth_alpha, kAlphabetHelp)->required();
  growth_cmd->add_option("--generators", growth_file, "File with one expression per line, # comments");
  growth_cmd
      ->add_option("--generators-inline", growth_inline, "Generator expression (repeat the flag per element)")
      ->allow_extra_args(false);
  growth_cmd->add_option("--max-degree", growth_n, "Largest degree")->required();
  growth_cmd->add_option("--field-mode", growth_mode, "exact or prime")
      ->check(CLI::IsMember({"exact", "prime"}));
  growth_cmd->add_option("--degree-cap", growth_cap, "Override the per-mode degree cap");
  add_common(growth_cmd, growth_flags);

  // cogrowth
  auto* cog_cmd = app.add_subcommand("cogrowth", "Cogrowth table of a subideal closure");
  std::string cog_alpha, cog_file, cog_mode = "exact", cog_engine = "linear";
  std::vector<std::string> cog_inline;
  long cog_n = 8, cog_cap = 0;
  int cog_level = 1;
  CommonFlags cog_flags;
  cog_cmd->add_option("--alphabet", cog_alpha, kAlphabetHelp)->required();
  cog_cmd->add_option("--generators", cog_file, "File with one expression per line, # comments");
  cog_cmd
      ->add_option("--generators-inline", cog_inline, "Generator expression (repeat the flag per element)")
      ->allow_extra_args(false);
  cog_cmd->add_option("--level", cog_level, "Subideal level l in id^l S");
  cog_cmd->add_option("--max-degree", cog_n, "Largest degree")->required();
  cog_cmd->add_option("--engine", cog_engine, "formula, lswords or linear")
      ->check(CLI::IsMember({"formula", "lswords", "linear"}));
  cog_cmd->add_option("--field-mode", cog_mode, "exact or prime (linear engine only)")
      ->check(CLI::IsMember({"exact", "prime"}));
  cog_cmd->add_option("--degree-cap", cog_cap, "Override the per-mode degree cap");
  add_common(cog_cmd, cog_flags);

  // complement
  auto* comp_cmd = app.add_subcommand("complement", "Free complement of a homogeneous subalgebra");
  std::string comp_alpha, comp_file;
  std::vector<std::string> comp_inline;
  long comp_n = 8;
  CommonFlags comp_flags;
  comp_cmd->add_option("--alphabet", comp_alpha, kAlphabetHelp)->required();
  comp_cmd->add_option("--generators", comp_file, "File with one expression per line, # comments");
  comp_cmd
      ->add_option("--generators-inline", comp_inline, "Generator expression (repeat the flag per element)")
      ->allow_extra_args(false);
  comp_cmd->add_option("--max-degree", comp_n, "Largest degree")->required();
  add_common(comp_cmd, comp_flags);

  // derive
  auto* der_cmd = app.add_subcommand("derive", "Escape exponent under the shifting derivation");
  std::string der_elem;
  long der_k = 1, der_cap = 50;
  CommonFlags der_flags;
  der_cmd->add_option("--element", der_elem, "Expression over x1, x2, ... (families: x2_1, x2_2, ...)")
      ->required();
  der_cmd->add_option("--k", der_k, "Ideal cutoff: I_k is generated by x1..xk")->required();
  der_cmd->add_option("--max-steps", der_cap, "Give up after this many derivations");
  add_common(der_cmd, der_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*witt_cmd) {
      if (witt_n < 1) throw std::invalid_argument("max degree must be >= 1");
      out << emit_growth(witt_table(witt_rank, witt_n), parse_format(witt_flags.format));
      return 0;
    }

    if (*lyndon_cmd) {
      GradedAlphabet alpha = GradedAlphabet::parse(lyndon_alpha);
      Format f = parse_format(lyndon_flags.format);
      if (lyndon_words) {
        std::vector<std::pair<long, std::string>> rows;
        for (const Word& w : generate_ls_words(alpha, lyndon_n)) rows.emplace_back(lyndon_n, w.to_string());
        out << emit_words(rows, f);
        return 0;
      }
      std::vector<Int> d(static_cast<std::size_t>(lyndon_n) + 1, 0);
      for_each_ls_word(alpha, lyndon_n, [&](const Word& w) { ++d[static_cast<std::size_t>(w.degree())]; });
      out << emit_growth(GrowthTable::cumulative(1, std::vector<Int>(d.begin() + 1, d.end()), Int(0)), f);
      return 0;
    }

    if (*avoid_cmd) {
      GradedAlphabet alpha = GradedAlphabet::parse(avoid_alpha);
      Word u = Word::parse(alpha, avoid_word);
      Format f = parse_format(avoid_flags.format);
      if (avoid_rate) {
        double rate = avoidance_growth_rate(alpha, u);
        out << emit_record({{"rate", format_real(rate)}}, f);
        return 0;
      }
      out << emit_growth(count_avoiding(alpha, u, avoid_n), f);
      return 0;
    }

    if (*base_cmd) {
      auto hist = parse_degree_list(base_degrees);
      BaseResult res = exponential_base(hist, parse_decimal(base_tol));
      Format f = parse_format(base_flags.format);
      std::string poly = "[";
      for (std::size_t i = 0; i < res.poly.size(); ++i) {
        if (i) poly += ",";
        poly += res.poly[i].get_str();
      }
      poly += "]";
      std::vector<std::pair<std::string, std::string>> fields;
      if (f == Format::Json) {
        fields = {{"z0", format_real(res.z0)},
                  {"lo", "\"" + rat_to_string(res.lo) + "\""},
                  {"hi", "\"" + rat_to_string(res.hi) + "\""},
                  {"poly", poly},
                  {"exact", res.exact ? "true" : "false"}};
      } else {
        fields = {{"z0", format_real(res.z0)},
                  {"lo", rat_to_string(res.lo)},
                  {"hi", rat_to_string(res.hi)},
                  {"poly", poly},
                  {"exact", res.exact ? "true" : "false"}};
      }
      out << emit_record(fields, f);
      return 0;
    }

    if (*growth_cmd) {
      GradedAlphabet alpha = GradedAlphabet::parse(growth_alpha);
      GeneratorSet gens = load_generators(growth_file, growth_inline, alpha);
      EngineOptions opts;
      opts.mode = growth_mode == "prime" ? FieldMode::Prime : FieldMode::Exact;
      opts.degree_cap = growth_cap;
      GrowthTable t = subalgebra_growth(alpha, gens, growth_n, opts);
      out << emit_growth(t, parse_format(growth_flags.format), prime_meta(opts));
      return 0;
    }

    if (*cog_cmd) {
      GradedAlphabet alpha = GradedAlphabet::parse(cog_alpha);
      GeneratorSet gens = load_generators(cog_file, cog_inline, alpha);
      Format f = parse_format(cog_flags.format);
      if (cog_engine == "formula") {
        if (cog_level != 2 || !is_table1_config(alpha, gens))
          throw std::invalid_argument(
              "the formula engine covers exactly the 2-subideal of the maximal letter in rank 2");
        out << emit_growth(fibonacci_cogrowth(cog_n), f);
        return 0;
      }
      if (cog_engine == "lswords") {
        if (!is_table1_config(alpha, gens))
          throw std::invalid_argument(
              "the lswords engine covers subideals of the maximal letter in rank 2");
        out << emit_growth(ls_avoidance_cogrowth(cog_level, cog_n), f);
        return 0;
      }
      EngineOptions opts;
      opts.mode = cog_mode == "prime" ? FieldMode::Prime : FieldMode::Exact;
      opts.degree_cap = cog_cap;
      if (!gens.homogeneous())
        err << "warning: nonhomogeneous generators reduced to their leading parts\n";
      out << emit_growth(subideal_cogrowth(alpha, gens, cog_level, cog_n, opts), f, prime_meta(opts));
      return 0;
    }

    if (*comp_cmd) {
      GradedAlphabet alpha = GradedAlphabet::parse(comp_alpha);
      GeneratorSet gens = load_generators(comp_file, comp_inline, alpha);
      ComplementResult res = free_complement(alpha, gens, comp_n);
      Format f = parse_format(comp_flags.format);
      if (f == Format::Json) {
        out << "{\"added\":[";
        for (std::size_t i = 0; i < res.added.size(); ++i) {
          if (i) out << ",";
          out << "{\"degree\":" << res.added[i].first << ",\"element\":\""
              << json_escape(res.added[i].second.to_lie_text()) << "\"}";
        }
        out << "]}\n";
      } else {
        for (const auto& [deg, elem] : res.added)
          out << "# added degree=" << deg << " " << elem.to_lie_text() << "\n";
      }
      out << emit_growth(res.codim, f);
      return 0;
    }

    if (*der_cmd) {
      static const ShiftAlphabet shift_alpha;
      LieElement elem = parse_expression(der_elem, shift_alpha);
      EscapeResult res = escape_exponent(elem.poly(), der_k, der_cap);
      Format f = parse_format(der_flags.format);
      std::vector<std::pair<std::string, std::string>> fields;
      if (res.found) {
        std::string wit = f == Format::Json ? "\"" + json_escape(res.witness) + "\"" : res.witness;
        fields = {{"found", "true"}, {"n", std::to_string(res.n)}, {"witness", wit}};
      } else {
        fields = {{"found", "false"}, {"max_steps", std::to_string(der_cap)}};
      }
      out << emit_record(fields, f);
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace liegrowth
