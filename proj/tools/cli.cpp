#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hgsq/closed_forms.hpp"
#include "hgsq/error.hpp"
#include "hgsq/formula.hpp"
#include "hgsq/groups.hpp"
#include "hgsq/oracles.hpp"
#include "hgsq/report.hpp"
#include "hgsq/verify.hpp"

namespace hgsq::cli {

namespace {

using ojson = nlohmann::ordered_json;

enum class Format { Json, Csv, Markdown };

struct RunConfig {
  u64 factor_bound = kDefaultFactorBound;
  u64 oracle_candidate_bound = OracleConfig{}.candidate_bound;
  u64 hol_order_bound = OracleConfig{}.hol_order_bound;
  u64 oracle_max_order = OracleConfig{}.max_group_order;
  unsigned threads = 0;  // 0 = one per hardware thread
  Format format = Format::Markdown;
  u64 max_rows = 5000;
  u64 max_matrix_classes = 512;

  OracleConfig oracle() const {
    OracleConfig c;
    c.candidate_bound = oracle_candidate_bound;
    c.hol_order_bound = hol_order_bound;
    c.max_group_order = oracle_max_order;
    c.threads = threads;
    return c;
  }
};

struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

void write_table(std::ostream& out, const TextTable& t, Format f) {
  auto line = [&](const std::vector<std::string>& cells) {
    if (f == Format::Csv) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
      out << '\n';
    } else {
      out << '|';
      for (const auto& c : cells) out << ' ' << c << " |";
      out << '\n';
    }
  };
  line(t.header);
  if (f == Format::Markdown) {
    out << '|';
    for (std::size_t i = 0; i < t.header.size(); ++i) out << "---|";
    out << '\n';
  }
  for (const auto& r : t.rows) line(r);
}

ojson triple_json(const GroupSpec& g) { return ojson{{"d", g.d}, {"e", g.e}, {"k", g.k}}; }

std::string local_orders_text(const DerivedParams& p) {
  std::string s;
  for (const auto& [q, r] : p.local_order) {
    if (!s.empty()) s += ' ';
    s += std::to_string(q) + ":" + std::to_string(r);
  }
  return s;
}

std::vector<u64> split_numbers(const std::string& text) {
  std::vector<u64> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(Errc::InvalidArgument, "expected d,e,k but got '" + text + "'");
    }
    try {
      out.push_back(std::stoull(part));
    } catch (const std::out_of_range&) {
      throw Error(Errc::InvalidArgument, part + " does not fit in 64 bits");
    }
  }
  return out;
}

GroupSpec parse_group(const std::string& text, u64 n, const RunConfig& cfg, std::ostream& err) {
  const std::vector<u64> v = split_numbers(text);
  if (v.size() != 3) throw Error(Errc::InvalidArgument, "expected d,e,k but got '" + text + "'");
  const u64 d = v[0], e = v[1], k = v[2];
  if (e == 0 || d == 0) throw Error(Errc::InvalidArgument, "d and e must be positive");
  const GroupSpec g = make_group(d, e, k % e, cfg.factor_bound);
  if (g.n != n) {
    throw Error(Errc::OrderMismatch, "group " + g.triple() + " has order " + std::to_string(g.n) +
                                         ", not " + std::to_string(n));
  }
  if (g.k != k % e) {
    err << "note: k=" << k << " replaced by canonical generator " << g.k << " for (" << d << ','
        << e << ")\n";
  }
  return g;
}

void emit_rows(std::ostream& out, const std::vector<ReportRow>& rows, Format f) {
  switch (f) {
    case Format::Json: out << (rows.size() == 1 ? to_json(rows[0]) : to_json(rows)) << '\n'; break;
    case Format::Csv: out << to_csv(rows); break;
    case Format::Markdown: out << to_markdown(rows); break;
  }
}

// ---- groups ---------------------------------------------------------------

int cmd_groups(u64 n, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const u64 count = count_groups(n, cfg.factor_bound);
  const bool suppressed = count > cfg.max_rows;
  std::vector<GroupSpec> classes;
  if (!suppressed) classes = enumerate_groups(n, cfg.factor_bound);
  if (suppressed) {
    err << "note: " << count << " classes exceed --max-rows " << cfg.max_rows
        << "; listing suppressed\n";
  }

  if (cfg.format == Format::Json) {
    ojson j{{"n", std::to_string(n)}, {"count", std::to_string(count)}, {"rows_suppressed", suppressed}};
    ojson list = ojson::array();
    for (const GroupSpec& g : classes) {
      const DerivedParams p = derived_params(g);
      ojson orders = ojson::object();
      for (const auto& [q, r] : p.local_order) orders[std::to_string(q)] = r;
      list.push_back({{"d", g.d}, {"e", g.e}, {"k", g.k}, {"z", p.z}, {"g", p.g}, {"local_orders", orders}});
    }
    j["groups"] = list;
    out << j.dump(2) << '\n';
    return kOk;
  }

  if (cfg.format == Format::Csv) {
    out << "# n=" << n << " count=" << count << '\n';
  } else {
    out << "groups of order " << n << ": " << count << "\n\n";
  }
  if (suppressed) return kOk;
  TextTable t{{"d", "e", "k", "z", "g", "local orders"}, {}};
  for (const GroupSpec& g : classes) {
    const DerivedParams p = derived_params(g);
    t.rows.push_back({std::to_string(g.d), std::to_string(g.e), std::to_string(g.k),
                      std::to_string(p.z), std::to_string(p.g), local_orders_text(p)});
  }
  write_table(out, t, cfg.format);
  return kOk;
}

// ---- hgs ------------------------------------------------------------------

bool census_agrees(const GroupSpec& galois, const GroupSpec& type, const RunConfig& cfg,
                   std::ostream& err) {
  const PairContext ctx = build_context(galois, type);
  const BigInt formula = count_regular_subgroups(ctx);
  const BigInt census = regular_subgroup_census(galois, type, cfg.oracle()).count;
  if (census == formula) return true;
  err << "mismatch: Gamma=(" << galois.triple() << ") G=(" << type.triple() << "): census finds "
      << census << " regular subgroups, formula " << formula << '\n';
  return false;
}

int cmd_hgs_pair(u64 n, const std::string& gamma_text, const std::string& g_text, bool oracle,
                 const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const GroupSpec galois = parse_group(gamma_text, n, cfg, err);
  const GroupSpec type = parse_group(g_text, n, cfg, err);
  ReportRow row = formula_row(galois, type);
  int status = kOk;
  if (oracle) {
    row.method = RowMethod::Both;
    if (!census_agrees(galois, type, cfg, err)) status = kMismatch;
  }
  emit_rows(out, {row}, cfg.format);
  return status;
}

void emit_matrix(std::ostream& out, u64 n, const std::vector<GroupSpec>& classes,
                 const std::vector<std::vector<BigInt>>& cells, Format f) {
  if (f == Format::Json) {
    ojson j{{"n", std::to_string(n)}};
    ojson cls = ojson::array();
    for (const GroupSpec& g : classes) cls.push_back(triple_json(g));
    ojson m = ojson::array();
    for (const auto& row : cells) {
      ojson r = ojson::array();
      for (const BigInt& c : row) r.push_back(to_decimal(c));
      m.push_back(r);
    }
    j["classes"] = cls;
    j["matrix"] = m;
    out << j.dump(2) << '\n';
    return;
  }
  TextTable t;
  t.header.push_back("Gamma \\ G");
  for (const GroupSpec& g : classes) t.header.push_back(g.triple());
  for (std::size_t r = 0; r < classes.size(); ++r) {
    std::vector<std::string> line{classes[r].triple()};
    for (const BigInt& c : cells[r]) line.push_back(to_decimal(c));
    t.rows.push_back(std::move(line));
  }
  write_table(out, t, f);
}

int cmd_hgs_matrix(u64 n, bool oracle, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const u64 count = count_groups(n, cfg.factor_bound);
  if (count > cfg.max_matrix_classes) {
    throw Error(Errc::BoundExceeded, std::to_string(count) + " classes exceed --max-classes " +
                                         std::to_string(cfg.max_matrix_classes));
  }
  const CountMatrix m = count_matrix(n, cfg.threads);
  int status = kOk;
  if (oracle) {
    for (const GroupSpec& a : m.classes) {
      for (const GroupSpec& b : m.classes) {
        if (!census_agrees(a, b, cfg, err)) status = kMismatch;
      }
    }
  }
  emit_matrix(out, n, m.classes, m.cells, cfg.format);
  return status;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(u64 n_max, u64 lambda_offset, bool semantic, bool census, const RunConfig& cfg,
               std::ostream& out) {
  VerifyOptions opts;
  opts.oracle = cfg.oracle();
  opts.run_semantic = semantic;
  opts.run_census = census;
  opts.lambda_offset = lambda_offset;
  const VerifySummary s = verify_up_to(n_max, opts);

  if (cfg.format == Format::Json) {
    ojson orders = ojson::array();
    for (const OrderSummary& o : s.orders) {
      orders.push_back({{"n", o.n}, {"classes", o.classes}, {"pairs", o.pairs}, {"failures", o.failures}});
    }
    ojson failures = ojson::array();
    for (const PairCheck& f : s.failures) {
      failures.push_back({{"gamma", triple_json(f.galois)}, {"g", triple_json(f.type)}, {"witness", f.failure}});
    }
    ojson j{{"n_max", n_max},
            {"ok", s.ok()},
            {"pairs", s.pairs},
            {"compatible_pairs", s.compatible_pairs},
            {"quintuples", s.quintuples},
            {"regular_subgroups", to_decimal(s.subgroups)},
            {"orders", orders},
            {"failures", failures}};
    out << j.dump(2) << '\n';
  } else {
    TextTable t{{"n", "classes", "pairs", "failures"}, {}};
    for (const OrderSummary& o : s.orders) {
      t.rows.push_back({std::to_string(o.n), std::to_string(o.classes), std::to_string(o.pairs),
                        std::to_string(o.failures)});
    }
    write_table(out, t, cfg.format);
    if (cfg.format == Format::Markdown) out << '\n';
    const char* lead = cfg.format == Format::Csv ? "# " : "";
    out << lead << "pairs checked: " << s.pairs << " (compatible " << s.compatible_pairs
        << "), quintuples examined: " << s.quintuples << ", regular subgroups found: " << s.subgroups
        << '\n';
    for (const PairCheck& f : s.failures) out << lead << "MISMATCH " << f.failure << '\n';
    out << lead << (s.ok() ? "all checks passed" : "verification FAILED") << '\n';
  }
  return s.ok() ? kOk : kMismatch;
}

// ---- paper ----------------------------------------------------------------

int cmd_example8(const RunConfig& cfg, std::ostream& out) {
  const SevenPrimeExample ex = seven_prime_example();
  std::vector<ReportRow> rows;
  for (const GroupSpec& g : ex.groups) rows.push_back(formula_row(ex.groups[0], g));
  emit_rows(out, rows, cfg.format);
  return kOk;
}

template <typename Closed>
void emit_table_with_closed(std::ostream& out, const std::string& title, const CountMatrix& m,
                            const std::vector<std::string>& labels, Closed&& closed, bool agrees,
                            Format f) {
  const std::size_t size = m.classes.size();
  if (f == Format::Json) {
    ojson cls = ojson::array();
    for (std::size_t i = 0; i < size; ++i) {
      ojson c = triple_json(m.classes[i]);
      c["label"] = labels[i];
      cls.push_back(c);
    }
    ojson general = ojson::array(), forms = ojson::array();
    for (std::size_t r = 0; r < size; ++r) {
      ojson gr = ojson::array(), cr = ojson::array();
      for (std::size_t c = 0; c < size; ++c) {
        gr.push_back(to_decimal(m.cells[r][c]));
        cr.push_back(to_decimal(closed(r, c)));
      }
      general.push_back(gr);
      forms.push_back(cr);
    }
    ojson j{{"table", title}, {"classes", cls}, {"matrix", general}, {"closed_form", forms}, {"agrees", agrees}};
    out << j.dump(2) << '\n';
    return;
  }
  if (f == Format::Markdown) out << title << "\n\n";
  TextTable t;
  t.header.push_back("Gamma \\ G");
  for (std::size_t i = 0; i < size; ++i) t.header.push_back(labels[i] + " (" + m.classes[i].triple() + ")");
  std::vector<std::string> flags;
  for (std::size_t r = 0; r < size; ++r) {
    std::vector<std::string> line{labels[r] + " (" + m.classes[r].triple() + ")"};
    for (std::size_t c = 0; c < size; ++c) {
      const BigInt expect = closed(r, c);
      std::string cell = to_decimal(m.cells[r][c]);
      if (expect != m.cells[r][c]) {
        cell += " [closed form " + to_decimal(expect) + "]";
        flags.push_back("(" + labels[r] + ", " + labels[c] + ")");
      }
      line.push_back(cell);
    }
    t.rows.push_back(std::move(line));
  }
  write_table(out, t, f);
  const char* lead = f == Format::Csv ? "# " : "\n";
  if (agrees) {
    out << lead << "closed forms agree with the general count in every cell\n";
  } else {
    out << lead << "closed forms DISAGREE at";
    for (const auto& s : flags) out << ' ' << s;
    out << '\n';
  }
}

int cmd_pq(u64 p, u64 q, const RunConfig& cfg, std::ostream& out) {
  const TwoPrimeTable t = two_prime_table(p, q);
  const std::vector<std::string> labels{"C_pq", "C_p : C_q"};
  emit_table_with_closed(
      out, "n = " + std::to_string(p) + " * " + std::to_string(q), t.general, labels,
      [&](std::size_t r, std::size_t c) { return t.closed[r][c]; }, t.agrees, cfg.format);
  return t.agrees ? kOk : kMismatch;
}

int cmd_threeprime(u64 p1, u64 p2, u64 p3, const RunConfig& cfg, std::ostream& out) {
  const ThreePrimeTable t = three_prime_table(p1, p2, p3);
  std::vector<std::string> labels;
  for (int ty : t.types) labels.push_back("type " + std::to_string(ty));
  emit_table_with_closed(
      out, "n = " + std::to_string(p1) + " * " + std::to_string(p2) + " * " + std::to_string(p3),
      t.general, labels, [&](std::size_t r, std::size_t c) { return t.closed[r][c]; }, t.agrees,
      cfg.format);
  return t.agrees ? kOk : kMismatch;
}

int exit_for(Errc code) {
  switch (code) {
    case Errc::FactorizationIncomplete:
    case Errc::BoundExceeded:
    case Errc::Overflow:
      return kResourceExceeded;
    case Errc::NonIntegralResult:
    case Errc::RouteMismatch:
      return kMismatch;
    default:
      return kInvalidInput;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts Hopf-Galois structures on extensions of squarefree degree", "hgsq"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "markdown";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "markdown"}))
      ->capture_default_str();
  app.add_option("--factor-bound", cfg.factor_bound, "Trial-division bound")
      ->check(CLI::Range(u64{2}, u64{1} << 32))
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads (0 = auto)")->capture_default_str();
  app.add_option("--oracle-candidate-bound", cfg.oracle_candidate_bound,
                 "Largest quintuple space an oracle may enumerate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--hol-order-bound", cfg.hol_order_bound, "Largest |Hol(G)| for the subgroup census")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--oracle-max-order", cfg.oracle_max_order, "Largest n for element-level oracles")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  u64 n = 0;
  auto* groups = app.add_subcommand("groups", "List the groups of order n");
  groups->add_option("n", n, "Squarefree order")->required()->check(CLI::PositiveNumber);
  groups->add_option("--max-rows", cfg.max_rows, "Suppress the listing above this many classes")
      ->capture_default_str();

  std::string gamma_text, g_text;
  bool matrix = false, oracle = false;
  auto* hgs = app.add_subcommand("hgs", "Count Hopf-Galois structures e(Gamma, G)");
  hgs->add_option("n", n, "Squarefree order")->required()->check(CLI::PositiveNumber);
  auto* matrix_flag = hgs->add_flag("--matrix", matrix, "Full matrix over all classes of order n");
  auto* gamma_opt = hgs->add_option("--gamma", gamma_text, "Galois group as d,e,k");
  auto* g_opt = hgs->add_option("--g", g_text, "Type as d,e,k");
  gamma_opt->needs(g_opt)->excludes(matrix_flag);
  g_opt->needs(gamma_opt)->excludes(matrix_flag);
  hgs->add_flag("--oracle", oracle, "Also run the regular-subgroup census and compare");
  hgs->add_option("--max-classes", cfg.max_matrix_classes, "Refuse matrices with more classes")
      ->capture_default_str();

  u64 n_max = 0, lambda_offset = 0;
  bool no_semantic = false, no_census = false;
  auto* verify = app.add_subcommand("verify", "Check the formula against the oracles for n <= n_max");
  verify->add_option("n_max", n_max, "Largest order")->required()->check(CLI::PositiveNumber);
  verify->add_option("--inject-fault-lambda", lambda_offset,
                     "Corrupt lambda by this offset in the table predicate (negative control)");
  verify->add_flag("--no-semantic", no_semantic, "Skip the element-level quintuple check");
  verify->add_flag("--no-census", no_census, "Skip the regular-subgroup census");

  auto* paper = app.add_subcommand("paper", "Regenerate the worked example and special-case tables");
  paper->require_subcommand(1);
  paper->add_subcommand("example8", "The four counts at n = 2*3*7*43*127*211*337");
  std::vector<u64> primes2, primes3;
  auto* pq = paper->add_subcommand("pq", "Two-prime table for n = p q, p == 1 mod q");
  pq->add_option("primes", primes2, "p q")->required()->expected(2);
  auto* three = paper->add_subcommand("threeprime", "Three-prime table for n = p1 p2 p3");
  three->add_option("primes", primes3, "p1 p2 p3")->required()->expected(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream sink_out, sink_err;
    const int code = app.exit(e, sink_out, sink_err);
    out << sink_out.str();
    err << sink_err.str();
    return code == 0 ? kOk : kInvalidInput;
  }
  cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Markdown;

  try {
    if (groups->parsed()) return cmd_groups(n, cfg, out, err);
    if (hgs->parsed()) {
      if (matrix) return cmd_hgs_matrix(n, oracle, cfg, out, err);
      if (gamma_text.empty()) {
        err << "hgs: give --matrix or both --gamma and --g\n";
        return kInvalidInput;
      }
      return cmd_hgs_pair(n, gamma_text, g_text, oracle, cfg, out, err);
    }
    if (verify->parsed()) return cmd_verify(n_max, lambda_offset, !no_semantic, !no_census, cfg, out);
    if (pq->parsed()) return cmd_pq(primes2[0], primes2[1], cfg, out);
    if (three->parsed()) return cmd_threeprime(primes3[0], primes3[1], primes3[2], cfg, out);
    return cmd_example8(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kResourceExceeded;
  }
}

}  // namespace hgsq::cli
