#include "distsl/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

#include "distsl/distance.hpp"
#include "distsl/errors.hpp"
#include "distsl/extremal.hpp"
#include "distsl/graph_io.hpp"
#include "distsl/matching.hpp"
#include "distsl/quotient.hpp"

namespace distsl {
namespace {

using json = nlohmann::ordered_json;
using Record = std::vector<std::pair<std::string, json>>;

enum class Format { text, csv, json };

struct GraphSource {
  std::string g6;
  std::string g6_file;
  std::string edgelist;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Printer {
 public:
  Printer(std::ostream& out, Format format, int precision)
      : out_(out), format_(format), precision_(precision) {}

  Format format() const { return format_; }

  void emit(const std::vector<Record>& records) const {
    switch (format_) {
      case Format::text:
        if (records.size() == 1) {
          for (const auto& [key, value] : records.front()) {
            out_ << key << " = " << text(value) << '\n';
          }
        } else {
          for (const auto& r : records) {
            std::string line;
            for (const auto& [key, value] : r) {
              if (!line.empty()) line += ' ';
              line += key + "=" + text(value);
            }
            out_ << line << '\n';
          }
        }
        break;
      case Format::csv:
        if (records.empty()) break;
        for (std::size_t i = 0; i < records.front().size(); ++i) {
          out_ << (i ? "," : "") << records.front()[i].first;
        }
        out_ << '\n';
        for (const auto& r : records) {
          for (std::size_t i = 0; i < r.size(); ++i) {
            out_ << (i ? "," : "") << csv_cell(text(r[i].second, ";"));
          }
          out_ << '\n';
        }
        break;
      case Format::json:
        for (const auto& r : records) out_ << to_json(r).dump() << '\n';
        break;
    }
  }

  void emit(const Record& record) const { emit(std::vector<Record>{record}); }

  std::string number(double x) const {
    if (x == 0.0 || std::abs(x) < 0.5 * std::pow(10.0, -precision_)) x = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision_, x);
    return buf;
  }

  static json to_json(const Record& r) {
    json obj = json::object();
    for (const auto& [key, value] : r) obj[key] = clean(value);
    return obj;
  }

 private:
  static json clean(const json& v) {
    if (v.is_number_float() && v.get<double>() == 0.0) return 0.0;
    if (v.is_array()) {
      json out = json::array();
      for (const auto& e : v) out.push_back(clean(e));
      return out;
    }
    return v;
  }

  std::string text(const json& v, const char* sep = ", ") const {
    if (v.is_null()) return "";
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_number_float()) return number(v.get<double>());
    if (v.is_number()) return v.dump();
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string out;
      const bool nested = !v.empty() && v.front().is_array();
      for (const auto& e : v) {
        if (!out.empty()) out += nested ? " | " : sep;
        out += text(e, " ");
      }
      return out;
    }
    return v.dump();
  }

  static std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  }

  std::ostream& out_;
  Format format_;
  int precision_;
};

void add_graph_options(CLI::App* sub, GraphSource& source) {
  auto* g6 = sub->add_option("--g6", source.g6, "graph6 string");
  auto* g6_file = sub->add_option("--g6-file", source.g6_file, "file holding one graph6 line");
  auto* edgelist = sub->add_option("--edgelist", source.edgelist,
                                   "edge-list file ('-' reads standard input)");
  g6->excludes(g6_file)->excludes(edgelist);
  g6_file->excludes(edgelist);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const GraphSource& source, std::istream& in) {
  if (!source.g6.empty()) return parse_graph6(source.g6);
  if (!source.g6_file.empty()) {
    const std::string content = read_file(source.g6_file);
    const auto end = content.find('\n');
    return parse_graph6(content.substr(0, end));
  }
  if (!source.edgelist.empty()) {
    if (source.edgelist == "-") return parse_edgelist(in);
    std::ifstream file(source.edgelist);
    if (!file) throw ParseError("cannot open '" + source.edgelist + "'");
    return parse_edgelist(file);
  }
  throw UsageError("a graph is required: pass --g6, --g6-file or --edgelist");
}

json vector_json(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(x);
  return out;
}

std::string components_string(const Factor& f) {
  std::string out;
  for (const auto& c : f.components) {
    if (!out.empty()) out += ' ';
    out += '[';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c[i]);
    }
    out += ']';
  }
  return out;
}

std::string powers_string(const std::vector<int>& powers) {
  std::string out;
  for (int p : powers) {
    if (!out.empty()) out += ' ';
    out += "x^" + std::to_string(p);
  }
  return out;
}

Record poly_record(const PolyCheck& c) {
  return {{"formula", std::string(to_string(c.which))},
          {"n", c.params.n},
          {"s", printed_poly_family(c.which, c.params).s},
          {"k", printed_poly_family(c.which, c.params).k},
          {"flagged", c.flagged()},
          {"mismatched", powers_string(c.mismatched_powers)},
          {"printed", format_polynomial(c.printed)},
          {"derived", format_polynomial(c.derived)},
          {"derived_root", c.derived_root},
          {"direct_eta", c.direct_eta},
          {"root_agrees", c.root_agrees()}};
}

int emit_report(const Printer& p, const TheoremReport& r, std::ostream& out) {
  if (p.format() == Format::json) {
    json obj = json::object();
    obj["n"] = r.n;
    obj["k"] = r.k;
    obj["hypothesis_met"] = r.hypothesis_met;
    obj["passed"] = r.passed();
    obj["ordering_holds"] = r.ordering_holds;
    if (r.extremal_mu_f) obj["extremal_mu_f"] = to_string(*r.extremal_mu_f);
    if (r.extremal_witness) obj["extremal_witness"] = r.extremal_witness->s.members();
    obj["verdicts"] = json::array();
    for (const auto& v : r.verdicts) {
      obj["verdicts"].push_back(
          {{"check", v.name}, {"verdict", std::string(to_string(v.verdict))}, {"note", v.note}});
    }
    obj["values"] = json::array();
    for (const auto& v : r.values) {
      obj["values"].push_back({{"graph", v.label},
                               {"eta_direct", v.eta_direct},
                               {"eta_quotient", v.eta_quotient}});
    }
    obj["formula_checks"] = json::array();
    for (const auto& c : r.formula_checks) obj["formula_checks"].push_back(Printer::to_json(poly_record(c)));
    out << obj.dump() << '\n';
  } else {
    std::vector<Record> rows;
    for (const auto& v : r.verdicts) {
      rows.push_back({{"n", r.n},
                      {"k", r.k},
                      {"check", v.name},
                      {"verdict", std::string(to_string(v.verdict))},
                      {"note", v.note}});
    }
    p.emit(rows);
    if (p.format() == Format::text) {
      for (const auto& v : r.values) {
        out << v.label << ": eta_direct=" << p.number(v.eta_direct)
            << " eta_quotient=" << p.number(v.eta_quotient) << '\n';
      }
      if (r.extremal_mu_f) out << "extremal mu_f = " << to_string(*r.extremal_mu_f) << '\n';
      if (r.extremal_witness) out << "extremal witness = " << r.extremal_witness->s.to_string() << '\n';
      int flagged = 0;
      for (const auto& c : r.formula_checks) {
        if (!c.flagged()) continue;
        ++flagged;
        out << "printed " << to_string(c.which) << " differs at " << powers_string(c.mismatched_powers)
            << " (n=" << c.params.n << ", s=" << c.params.s << ", k=" << c.params.k << ")\n";
      }
      out << "formula checks = " << r.formula_checks.size() << " (" << flagged << " flagged)\n";
      out << "result = " << (r.passed() ? "pass" : "fail") << '\n';
    }
  }
  return r.passed() ? kExitOk : kExitDomainError;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Distance signless Laplacian spectra, fractional matchings and graph factors",
               "distsl"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  int precision = 4;
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--precision", precision, "digits after the decimal point")
      ->check(CLI::Range(0, 12));

  GraphSource source;

  auto* eta_cmd = app.add_subcommand("eta", "spectral radius of Q(G)");
  add_graph_options(eta_cmd, source);
  std::string eig_method = "auto";
  eta_cmd->add_option("--method", eig_method, "eigensolver")
      ->check(CLI::IsMember({"auto", "jacobi", "power"}));

  auto* spectrum_cmd = app.add_subcommand("spectrum", "all eigenvalues of Q(G), descending");
  add_graph_options(spectrum_cmd, source);

  auto* distance_cmd = app.add_subcommand("distance", "distance matrix or Q(G) with transmissions");
  add_graph_options(distance_cmd, source);
  std::string matrix_kind = "distance";
  distance_cmd->add_option("--matrix", matrix_kind, "which matrix to print")
      ->check(CLI::IsMember({"distance", "dsl"}));

  auto* muf_cmd = app.add_subcommand("muf", "fractional matching number");
  add_graph_options(muf_cmd, source);
  std::string muf_method = "fast";
  int brute_cap = kDefaultBruteCap;
  muf_cmd->add_option("--method", muf_method, "brute (subset enumeration) or fast (double cover)")
      ->check(CLI::IsMember({"brute", "fast"}));
  muf_cmd->add_option("--cap", brute_cap, "largest order accepted by the brute method");

  auto* factor_cmd = app.add_subcommand("factor", "{K2, {Ck}}-factor existence");
  add_graph_options(factor_cmd, source);
  int search_cap = kDefaultFactorCap;
  factor_cmd->add_option("--search-cap", search_cap,
                         "largest order for which an explicit factor is searched");

  auto* quotient_cmd = app.add_subcommand("quotient", "quotient of Q(G) under a partition");
  add_graph_options(quotient_cmd, source);
  std::string partition_text;
  quotient_cmd->add_option("--partition", partition_text, "blocks like 0|1,2,3")->required();

  auto* family_cmd = app.add_subcommand("family", "build G_s = K_s v (K_{n-2s-k} + co-K_{s+k})");
  int fam_n = 0;
  int fam_s = 1;
  int fam_k = 1;
  std::string emit = "summary";
  family_cmd->add_option("--n", fam_n, "order")->required();
  family_cmd->add_option("--s", fam_s, "clique size s");
  family_cmd->add_option("--k", fam_k, "surplus k");
  family_cmd->add_option("--emit", emit, "summary, graph6 or edgelist")
      ->check(CLI::IsMember({"summary", "graph6", "edgelist"}));

  auto* ghat_cmd = app.add_subcommand("ghat", "build the G-hat graph of order n");
  int ghat_n = 0;
  ghat_cmd->add_option("--n", ghat_n, "order")->required();
  ghat_cmd->add_option("--emit", emit, "summary, graph6 or edgelist")
      ->check(CLI::IsMember({"summary", "graph6", "edgelist"}));

  auto* table_cmd = app.add_subcommand("table1", "recompute the published threshold table");
  int n_min = 4;
  int n_max = 36;
  table_cmd->add_option("--n-min", n_min, "first order");
  table_cmd->add_option("--n-max", n_max, "last order");

  auto* t1_cmd = app.add_subcommand("verify-theorem1", "checks for the surplus-k family");
  int t1_n = 0;
  int t1_k = 1;
  t1_cmd->add_option("--n", t1_n, "order")->required();
  t1_cmd->add_option("--k", t1_k, "surplus k");

  auto* t2_cmd = app.add_subcommand("verify-theorem2", "checks for the factor threshold");
  int t2_n = 0;
  t2_cmd->add_option("--n", t2_n, "order (3..40)")->required();

  auto* poly_cmd = app.add_subcommand("poly-report", "compare printed polynomials with quotients");
  int p_min = 4;
  int p_max = 36;
  int k_max = 2;
  bool flagged_only = false;
  poly_cmd->add_option("--n-min", p_min, "first order");
  poly_cmd->add_option("--n-max", p_max, "last order");
  poly_cmd->add_option("--k-max", k_max, "largest surplus k for the surplus-k formulas");
  poly_cmd->add_flag("--flagged-only", flagged_only, "print only mismatching instances");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsageError;
  }

  const Format format = format_name == "csv"    ? Format::csv
                        : format_name == "json" ? Format::json
                                                : Format::text;
  const Printer printer(out, format, precision);

  try {
    if (eta_cmd->parsed()) {
      const Graph g = load_graph(source, in);
      const EigenMethod method = eig_method == "jacobi"  ? EigenMethod::jacobi
                                 : eig_method == "power" ? EigenMethod::power
                                                         : EigenMethod::automatic;
      printer.emit(Record{{"eta", spectral_radius(dsl_matrix(g), kDefaultTolerance, method)}});
      return kExitOk;
    }
    if (spectrum_cmd->parsed()) {
      const Graph g = load_graph(source, in);
      printer.emit(Record{{"eigenvalues", vector_json(full_spectrum(dsl_matrix(g)).eigenvalues)}});
      return kExitOk;
    }
    if (distance_cmd->parsed()) {
      const Graph g = load_graph(source, in);
      const DistanceMatrix d = distance_matrix(g);
      const Transmissions tr = transmissions(d);
      const DslMatrix q = dsl_matrix(d);
      std::vector<Record> rows;
      for (Vertex v = 0; v < g.order(); ++v) {
        json row = json::array();
        for (Vertex u = 0; u < g.order(); ++u) {
          if (matrix_kind == "dsl") {
            row.push_back(q(v, u));
          } else {
            row.push_back(d(v, u));
          }
        }
        rows.push_back({{"vertex", v}, {"transmission", tr[v]}, {"row", row}});
      }
      printer.emit(rows);
      return kExitOk;
    }
    if (muf_cmd->parsed()) {
      const Graph g = load_graph(source, in);
      const DeficiencyWitness w =
          muf_method == "brute" ? max_deficiency_brute(g, brute_cap) : max_deficiency_fast(g);
      const Rational mu = muf_method == "brute" ? Rational(g.order() - w.deficiency, 2)
                                                : fractional_matching_number_fast(g);
      printer.emit(Record{{"mu_f", to_string(mu)},
                          {"max_deficiency", w.deficiency},
                          {"witness", w.s.to_string()}});
      return kExitOk;
    }
    if (factor_cmd->parsed()) {
      const Graph g = load_graph(source, in);
      const FactorCheck check = has_k2ck_factor(g);
      Record r{{"has_factor", check.has_factor}};
      if (check.has_factor) {
        if (g.order() <= search_cap) {
          const auto f = find_factor_backtracking(g, search_cap);
          if (!f || !is_k2ck_factor(g, *f)) throw Error("internal error: factor search disagrees");
          r.emplace_back("factor", components_string(*f));
        } else {
          r.emplace_back("factor", "not searched (n > search cap)");
        }
      } else {
        r.emplace_back("witness", check.witness->s.to_string());
        r.emplace_back("deficiency", check.witness->deficiency);
      }
      printer.emit(r);
      return kExitOk;
    }
    if (quotient_cmd->parsed()) {
      const Graph g = load_graph(source, in);
      const Partition p = Partition::parse(partition_text, g.order());
      const DslMatrix q = dsl_matrix(g);
      const QuotientMatrix b = quotient_matrix(q, p);
      json matrix = json::array();
      for (std::size_t i = 0; i < b.order(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < b.order(); ++j) row.push_back(b(i, j));
        matrix.push_back(row);
      }
      Record r{{"partition", p.to_string()}, {"equitable", b.equitable()}, {"matrix", matrix}};
      if (b.order() <= 3) r.emplace_back("char_poly", format_polynomial(char_poly_coeffs(b)));
      r.emplace_back("largest_eigenvalue", quotient_largest_eigenvalue(b));
      r.emplace_back("eigenvalues", vector_json(quotient_eigenvalues(b)));
      r.emplace_back("eta", spectral_radius(q));
      printer.emit(r);
      if (!b.equitable()) err << "warning: partition is not equitable\n";
      return kExitOk;
    }
    if (family_cmd->parsed() || ghat_cmd->parsed()) {
      const bool is_family = family_cmd->parsed();
      const FamilyParams params{fam_n, fam_s, fam_k};
      const Graph g = is_family ? build_family(params) : build_ghat(ghat_n);
      if (emit == "graph6") {
        out << to_graph6(g) << '\n';
        return kExitOk;
      }
      if (emit == "edgelist") {
        out << to_edgelist(g);
        return kExitOk;
      }
      const QuotientMatrix b =
          is_family ? checked_quotient(family_quotient(params), g, family_partition(params))
                    : checked_quotient(ghat_quotient(ghat_n), g, ghat_partition(ghat_n));
      const double direct = eta(g);
      const double root = quotient_largest_eigenvalue(b);
      Record r{{"n", g.order()}};
      if (is_family) {
        r.emplace_back("s", fam_s);
        r.emplace_back("k", fam_k);
      }
      r.emplace_back("edges", static_cast<std::int64_t>(g.size()));
      r.emplace_back("graph6", to_graph6(g));
      r.emplace_back("char_poly", format_polynomial(char_poly_coeffs(b)));
      r.emplace_back("eta_direct", direct);
      r.emplace_back("eta_quotient", root);
      printer.emit(r);
      return kExitOk;
    }
    if (table_cmd->parsed()) {
      std::vector<Record> rows;
      auto add = [&](int n, json s, const TableEntry& e) {
        Record r{{"n", n}, {"s", std::move(s)}, {"eta_direct", e.eta_direct},
                 {"eta_quotient", e.eta_quotient}};
        if (e.published) {
          r.emplace_back("paper_value", *e.published);
          r.emplace_back("abs_diff", std::abs(e.eta_direct - *e.published));
        } else {
          r.emplace_back("paper_value", nullptr);
          r.emplace_back("abs_diff", nullptr);
        }
        rows.push_back(std::move(r));
      };
      for (const auto& row : reproduce_table1(n_min, n_max)) {
        for (const auto& e : row.family) add(row.n, e.s, e);
        add(row.n, "ghat", row.ghat);
      }
      printer.emit(rows);
      return kExitOk;
    }
    if (t1_cmd->parsed()) return emit_report(printer, verify_theorem1(t1_n, t1_k), out);
    if (t2_cmd->parsed()) return emit_report(printer, verify_theorem2(t2_n), out);
    if (poly_cmd->parsed()) {
      std::vector<Record> rows;
      for (const auto& c : discrepancy_report(p_min, p_max, k_max)) {
        if (!flagged_only || c.flagged()) rows.push_back(poly_record(c));
      }
      printer.emit(rows);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  err << "usage error: no subcommand\n";
  return kExitUsageError;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run_command(args, std::cin, out, err);
}

}  // namespace distsl
