#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "zigzag/andre.hpp"
#include "zigzag/cfrac.hpp"
#include "zigzag/claims.hpp"
#include "zigzag/entringer.hpp"
#include "zigzag/jacobi.hpp"
#include "zigzag/permutation.hpp"
#include "zigzag/report.hpp"

namespace zigzag::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::size_t kMaxEntringerRows = 500;
constexpr std::size_t kMaxJacobiTerms = 40;
constexpr std::size_t kMaxAndre = 500;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tabular output shared by the table-like subcommands.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool text_header = true;
  bool csv_header = true;
};

struct Output {
  Table table;
  ordered_json json;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& cells, const std::string& sep,
                 bool quote) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += sep;
    out += quote ? csv_cell(cells[i]) : cells[i];
  }
  return out;
}

std::string render(const Output& o, ReportFormat f) {
  std::ostringstream os;
  switch (f) {
    case ReportFormat::json:
      os << o.json.dump(2) << "\n";
      break;
    case ReportFormat::csv:
      if (o.table.csv_header) os << join(o.table.header, ",", true) << "\n";
      for (const auto& r : o.table.rows) os << join(r, ",", true) << "\n";
      break;
    case ReportFormat::text:
      if (o.table.text_header) os << join(o.table.header, "  ", false) << "\n";
      for (const auto& r : o.table.rows) {
        os << join(r, o.table.text_header ? "  " : " ", false) << "\n";
      }
      break;
  }
  return os.str();
}

ClassTag parse_cli_class(const std::string& name) {
  if (name == "sn") return ClassTag::S_odd;
  if (name == "cn") return ClassTag::C_even;
  if (name == "dn") return ClassTag::D_even;
  if (name == "ascending") return ClassTag::Ascending_any;
  throw UsageError("unknown class '" + name + "' (expected sn, cn, dn or ascending)");
}

StatVariant parse_cli_stat(const std::string& name) {
  if (auto v = parse_stat_variant(name)) return *v;
  std::string all;
  for (StatVariant v : kAllStatVariants) all += (all.empty() ? "" : ", ") + std::string(to_string(v));
  throw UsageError("unknown statistic '" + name + "' (expected one of " + all + ")");
}

std::optional<Rat> parse_at(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text.rfind("m=", 0) != 0) throw UsageError("--at expects m=RAT, got '" + text + "'");
  try {
    return parse_rat(text.substr(2));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--at: ") + e.what());
  }
}

std::size_t parse_size(const std::string& key, const std::string& text) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size() || text[0] == '-') {
    throw UsageError("cap '" + key + "' needs a non-negative integer, got '" + text + "'");
  }
  return v;
}

ClaimCaps parse_caps(const std::vector<std::string>& specs) {
  ClaimCaps caps;
  for (const auto& spec : specs) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("cap '" + item + "' is not key=value");
      const std::string key = item.substr(0, eq);
      const std::size_t v = parse_size(key, item.substr(eq + 1));
      if (key == "size") caps.perm_size = v;
      else if (key == "rows") caps.entringer_rows = v;
      else if (key == "andre") caps.andre_n = v;
      else if (key == "order") caps.series_order = v;
      else if (key == "depth") caps.cf_depth = v;
      else if (key == "evidence") caps.max_evidence = v;
      else throw UsageError("unknown cap '" + key + "' (size, rows, andre, order, depth, evidence)");
    }
  }
  try {
    validate_caps(caps);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return caps;
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& it : items) {
    std::stringstream ss(it);
    std::string s;
    while (std::getline(ss, s, ',')) {
      if (!s.empty()) out.push_back(s);
    }
  }
  return out;
}

void require_at_most(const char* flag, std::size_t v, std::size_t limit) {
  if (v > limit) {
    throw UsageError(std::string(flag) + " must be at most " + std::to_string(limit));
  }
}

// ------------------------------------------------------------ subcommands

Output cmd_entringer(std::size_t rows) {
  require_at_most("--rows", rows, kMaxEntringerRows);
  const Triangle t = build_triangle(rows);
  Output o;
  o.table.text_header = false;
  o.table.csv_header = false;
  ordered_json arr = ordered_json::array();
  for (std::size_t n = 0; n <= rows; ++n) {
    std::vector<std::string> r;
    ordered_json jr = ordered_json::array();
    for (std::size_t k = 0; k <= n; ++k) {
      r.push_back(to_string(t.at(n, k)));
      jr.push_back(r.back());
    }
    o.table.rows.push_back(std::move(r));
    arr.push_back(std::move(jr));
  }
  o.json = {{"rows", std::move(arr)}};
  return o;
}

Output cmd_enumerate(const std::string& cls, std::size_t size, const std::string& stat) {
  const ClassTag tag = parse_cli_class(cls);
  std::optional<StatVariant> v;
  if (!stat.empty()) v = parse_cli_stat(stat);
  Output o;
  o.table.text_header = false;
  o.table.header = {"permutation"};
  if (v) o.table.header.push_back(std::string(to_string(*v)));
  ordered_json arr = ordered_json::array();
  for_each_in_class(tag, size, [&](const Perm& p) {
    std::vector<std::string> r{p.to_string()};
    ordered_json j{{"permutation", p.values()}};
    if (v) {
      const unsigned s = zigzag::stat(p, *v);
      r.push_back(std::to_string(s));
      j["statistic"] = s;
    }
    o.table.rows.push_back(std::move(r));
    arr.push_back(std::move(j));
  });
  o.json = {{"class", cls}, {"size", size}, {"permutations", std::move(arr)}};
  if (v) o.json["statistic"] = std::string(to_string(*v));
  return o;
}

Output cmd_weights(const std::string& cls, std::size_t max_n, const std::string& stat) {
  const ClassTag tag = parse_cli_class(cls);
  const StatVariant v = parse_cli_stat(stat);
  Output o;
  o.table.header = {"n", "size", "weight"};
  ordered_json arr = ordered_json::array();
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::size_t size = n;
    if (tag == ClassTag::S_odd) size = 2 * n + 1;
    if (tag == ClassTag::C_even || tag == ClassTag::D_even) size = 2 * n;
    const WPoly p = class_weight_poly(tag, size, v);
    o.table.rows.push_back({std::to_string(n), std::to_string(size), p.to_string()});
    arr.push_back({{"n", n}, {"size", size}, {"weight", p.to_string()}});
  }
  o.json = {{"class", cls}, {"statistic", std::string(to_string(v))}, {"rows", std::move(arr)}};
  return o;
}

Output cmd_jacobi(std::size_t max_n, const std::string& at) {
  require_at_most("--max-n", max_n, kMaxJacobiTerms);
  const auto m = parse_at(at);
  const JacobiTaylor t = jacobi_taylor(max_n);
  Output o;
  o.table.header = {"n", "s_n", "c_n", "d_n"};
  ordered_json arr = ordered_json::array();
  auto show = [&](const WPoly& p) {
    return m ? to_string(p.eval(*m)) : p.to_string("m");
  };
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::vector<std::string> r{std::to_string(n), show(t.s[n]), show(t.c[n]), show(t.d[n])};
    arr.push_back({{"n", n}, {"s", r[1]}, {"c", r[2]}, {"d", r[3]}});
    o.table.rows.push_back(std::move(r));
  }
  o.json = {{"at", m ? "m=" + to_string(*m) : std::string("symbolic")},
            {"terms", std::move(arr)}};
  return o;
}

CfScheme pick_scheme(const std::string& name, const std::string& file) {
  if (file.empty()) {
    if (name.empty()) throw UsageError("cfrac needs --scheme NAME or --scheme-file PATH");
    if (auto s = find_builtin_scheme(name)) return *s;
    std::string all;
    for (const auto& s : builtin_schemes()) all += (all.empty() ? "" : ", ") + s.name;
    throw UsageError("unknown scheme '" + name + "' (built in: " + all + ")");
  }
  std::vector<CfScheme> loaded;
  try {
    loaded = load_scheme_file(file);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--scheme-file: ") + e.what());
  }
  if (name.empty()) {
    if (loaded.size() != 1) {
      throw UsageError("scheme file holds several schemes; select one with --scheme");
    }
    return loaded.front();
  }
  for (const auto& s : loaded) {
    if (s.name == name) return s;
  }
  throw UsageError("scheme '" + name + "' not found in " + file);
}

Output cmd_cfrac(const std::string& name, const std::string& file, std::size_t depth,
                 std::size_t order, const std::string& at) {
  require_at_most("--order", order, kCfMaxOrder);
  CfScheme scheme = pick_scheme(name, file);
  if (const auto m = parse_at(at)) scheme = specialize(scheme, *m);
  const PowerSeries s = cf_convergent_series(scheme, depth, order);
  Output o;
  o.table.header = {"power", "coefficient"};
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i <= order; ++i) {
    const std::string c = s[i].to_string("m");
    o.table.rows.push_back({std::to_string(i), c});
    arr.push_back(c);
  }
  o.json = {{"scheme", scheme.name},
            {"leading", std::string(to_string(scheme.leading))},
            {"alpha", scheme.alpha_text},
            {"beta", scheme.beta_text},
            {"depth", depth},
            {"order", order},
            {"coefficients", std::move(arr)}};
  if (!at.empty()) o.json["at"] = at;
  return o;
}

Output cmd_andre(std::size_t max_n) {
  require_at_most("--max-n", max_n, kMaxAndre);
  const auto a = a_recurrence(max_n);
  Output o;
  o.table.header = {"n", "A_n"};
  ordered_json arr = ordered_json::array();
  for (std::size_t n = 0; n <= max_n; ++n) {
    o.table.rows.push_back({std::to_string(n), to_string(a[n])});
    arr.push_back({{"n", n}, {"A", to_string(a[n])}});
  }
  o.json = {{"numbers", std::move(arr)}};
  return o;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

ReportFormat resolve_format(const std::string& flag) {
  std::string name = flag;
  if (name.empty()) {
    const char* env = std::getenv(kFormatEnv);
    name = env && *env ? env : "text";
  }
  if (auto f = parse_report_format(name)) return *f;
  throw UsageError("unknown format '" + name + "' (json, csv or text)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for alternating permutations, Jacobi series and continued fractions"};
  app.require_subcommand(1);
  app.footer(
      "Classes: sn = up-down of odd size, cn = up-down of even size, dn = down-up of "
      "even size, ascending = up-down of any size.\n"
      "Default output format comes from --format, else $" + std::string(kFormatEnv) +
      ", else text.");

  std::string format, out_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json, csv or text");
    sub->add_option("--out", out_path, "write to PATH instead of standard output");
  };

  std::size_t rows = 5;
  auto* ent = app.add_subcommand("entringer", "Entringer triangle rows 0..N");
  ent->add_option("--rows", rows, "last row")->required();
  add_common(ent);

  std::string cls, stat;
  std::size_t size = 0;
  auto* en = app.add_subcommand("enumerate", "list a class of alternating permutations");
  en->add_option("--class", cls, "sn, cn, dn or ascending")->required();
  en->add_option("--size", size, "permutation size")->required();
  en->add_option("--stat", stat, "also print a peak statistic");
  add_common(en);

  std::size_t max_n = 0;
  auto* we = app.add_subcommand("weights", "weight polynomial of a class per size");
  we->add_option("--class", cls, "sn, cn, dn or ascending")->required();
  we->add_option("--max-n", max_n, "largest index")->required();
  we->add_option("--stat", stat, "peak statistic")->required();
  add_common(we);

  std::string at;
  auto* ja = app.add_subcommand("jacobi", "Taylor coefficients of sn, cn, dn");
  ja->add_option("--max-n", max_n, "largest index")->required();
  ja->add_option("--at", at, "evaluate at m=RAT");
  add_common(ja);

  std::string scheme, scheme_file;
  std::size_t depth = 1, order = 0;
  auto* cf = app.add_subcommand("cfrac", "series of a continued fraction convergent");
  cf->add_option("--scheme", scheme, "built-in scheme name, or a name within --scheme-file");
  cf->add_option("--scheme-file", scheme_file, "JSON scheme definitions");
  cf->add_option("--depth", depth, "convergent depth")->required();
  cf->add_option("--order", order, "series truncation order")->required();
  cf->add_option("--at", at, "substitute m=RAT");
  add_common(cf);

  auto* an = app.add_subcommand("andre", "secant-tangent numbers A_0..A_N");
  an->add_option("--max-n", max_n, "largest index")->required();
  add_common(an);

  std::vector<std::string> claims, caps;
  bool strict = false;
  unsigned jobs = 1;
  auto* ve = app.add_subcommand("verify", "run claim checks and print the report");
  ve->add_option("--claims", claims, "comma-separated claim ids or groups");
  ve->add_option("--caps", caps, "size limits, e.g. size=9,order=20,rows=9,andre=10,depth=6");
  ve->add_flag("--strict", strict, "exit 2 when an anchor claim does not pass");
  ve->add_option("--jobs", jobs, "claim families run concurrently")->check(CLI::Range(1u, 64u));
  add_common(ve);

  auto* re = app.add_subcommand("report", "write the full claim report to a file");
  re->add_option("--claims", claims, "comma-separated claim ids or groups");
  re->add_option("--caps", caps, "size limits");
  re->add_option("--jobs", jobs, "claim families run concurrently")->check(CLI::Range(1u, 64u));
  re->add_option("--out", out_path, "output path")->required();
  re->add_option("--format", format, "json, csv or text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const ReportFormat fmt = resolve_format(format);
    if (ent->parsed()) {
      emit(render(cmd_entringer(rows), fmt), out_path, out);
    } else if (en->parsed()) {
      emit(render(cmd_enumerate(cls, size, stat), fmt), out_path, out);
    } else if (we->parsed()) {
      emit(render(cmd_weights(cls, max_n, stat), fmt), out_path, out);
    } else if (ja->parsed()) {
      emit(render(cmd_jacobi(max_n, at), fmt), out_path, out);
    } else if (cf->parsed()) {
      emit(render(cmd_cfrac(scheme, scheme_file, depth, order, at), fmt), out_path, out);
    } else if (an->parsed()) {
      emit(render(cmd_andre(max_n), fmt), out_path, out);
    } else if (ve->parsed() || re->parsed()) {
      const ClaimCaps c = parse_caps(caps);
      std::vector<ClaimVerdict> verdicts;
      try {
        verdicts = run_claims(split_list(claims), c, jobs);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      emit(render_report(verdicts, fmt), out_path, out);
      if (strict) {
        const auto failed = failed_anchors(verdicts);
        if (!failed.empty()) {
          err << "anchor claims not passing:";
          for (const auto& id : failed) err << " " << id;
          err << "\n";
          return kExitAnchorFailed;
        }
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"zigzag"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace zigzag::cli
