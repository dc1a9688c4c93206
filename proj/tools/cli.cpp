#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bianchi/bounds.hpp"
#include "bianchi/eisenstein.hpp"
#include "bianchi/error.hpp"
#include "bianchi/exactmath.hpp"
#include "bianchi/finitering.hpp"
#include "bianchi/lefschetz.hpp"
#include "bianchi/quadfield.hpp"
#include "bianchi/sczech.hpp"
#include "bianchi/verify.hpp"

namespace bianchi::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

enum class Format { json_lines, csv, tex };

const char* kCacheEnv = "BIANCHI_CACHE_DIR";

// ---------------------------------------------------------------- records

struct Record {
  json query = json::object();
  json field = json::object();
  json result = json::object();
  std::vector<std::string> warnings;
  json provenance = json::object();

  json to_json() const {
    json j;
    j["query"] = query;
    j["field"] = field;
    j["result"] = result;
    j["warnings"] = warnings;
    j["provenance"] = provenance;
    return j;
  }
};

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& cells) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, cells);
    }
    return;
  }
  if (j.is_array()) {
    std::string joined;
    const std::string sep = prefix == "warnings" ? "|" : ";";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) joined += sep;
      joined += j[i].is_structured() ? j[i].dump() : scalar_text(j[i]);
    }
    cells.emplace_back(prefix, joined);
    return;
  }
  cells.emplace_back(prefix, scalar_text(j));
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string tex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': case '%': case '$': case '#': case '_': case '{': case '}':
        out += '\\';
        out += c;
        break;
      case '^': out += "\\^{}"; break;
      case '~': out += "\\~{}"; break;
      case '\\': out += "\\textbackslash{}"; break;
      default: out += c;
    }
  }
  return out;
}

void emit(const std::vector<Record>& records, Format format, std::ostream& out) {
  if (format == Format::json_lines) {
    for (const auto& r : records) out << r.to_json().dump() << '\n';
    return;
  }
  std::vector<std::string> columns;
  std::vector<std::map<std::string, std::string>> rows;
  for (const auto& r : records) {
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(r.to_json(), "", cells);
    std::map<std::string, std::string> row;
    for (auto& [key, value] : cells) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
      row[key] = value;
    }
    rows.push_back(std::move(row));
  }
  if (format == Format::csv) {
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_escape(columns[i]);
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        const auto it = row.find(columns[i]);
        out << (i ? "," : "") << csv_escape(it == row.end() ? "" : it->second);
      }
      out << '\n';
    }
    return;
  }
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? " & " : "") << tex_escape(columns[i]);
  out << " \\\\\n\\hline\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const auto it = row.find(columns[i]);
      out << (i ? " & " : "") << tex_escape(it == row.end() ? "" : it->second);
    }
    out << " \\\\\n";
  }
}

// ------------------------------------------------------------------ cache

std::optional<fs::path> cache_dir() {
  const char* dir = std::getenv(kCacheEnv);
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return fs::path(dir);
}

template <class F>
BigInt memoized(const std::string& key, F&& compute) {
  const auto dir = cache_dir();
  if (!dir) return compute();
  const fs::path file = *dir / (key + ".json");
  if (std::ifstream in(file); in) {
    try {
      const json j = json::parse(in);
      if (j.at("key") == key) return BigInt(j.at("value").get<std::string>());
    } catch (const std::exception&) {
      // unreadable entries are recomputed and overwritten
    }
  }
  const BigInt value = compute();
  fs::create_directories(*dir);
  std::ofstream(file) << json{{"key", key}, {"value", to_string(value)}}.dump() << '\n';
  return value;
}

std::string key_suffix(std::int64_t v) { return v < 0 ? "m" + std::to_string(-v) : std::to_string(v); }

// --------------------------------------------------------------- helpers

json field_block(const QuadField& f) {
  const BigInt h = memoized("class_number_d" + key_suffix(f.d()),
                            [&] { return BigInt(f.class_number()); });
  json j;
  j["d"] = f.d();
  j["D"] = f.discriminant();
  j["h"] = to_string(h);
  j["t"] = f.t();
  j["D2"] = f.d2();
  j["ramified"] = f.ramified_primes();
  return j;
}

Involution parse_involution(const std::string& s) {
  if (s == "sigma") return Involution::sigma;
  if (s == "tau") return Involution::tau;
  throw PreconditionError("unknown involution '" + s + "' (sigma or tau)");
}

BracketVariant parse_bracket_or_throw(const std::string& s) {
  const auto v = parse_bracket(s);
  require(v.has_value(), "unknown bracket '" + s + "' (rational, kronecker, torsion-char)");
  return *v;
}

CharacterVariant parse_character_or_throw(const std::string& s) {
  const auto v = parse_character(s);
  require(v.has_value(),
          "unknown variant '" + s +
              "' (literal-D, inverse-different, symplectic-invdiff, symplectic-level)");
  return *v;
}

json trace_json(const TraceValue& t) {
  json j;
  if (t.is_exact()) {
    j["value"] = to_string(t.lo);
  } else {
    j["lo"] = to_string(t.lo);
    j["hi"] = to_string(t.hi);
  }
  j["exact"] = t.is_exact();
  return j;
}

Record bound_record(const QuadField& f, std::int64_t N, long k, Involution inv, BracketVariant bracket) {
  Record r;
  r.field = field_block(f);
  const BoundReport rep = cusp_lower_bound(f, N, k, inv, bracket);
  r.result["kind"] = "bound";
  r.result["value"] = to_string(rep.bound);
  r.result["mode"] = std::string(to_string(rep.mode));
  r.result["L"] = to_string(rep.L);
  r.result["tr0"] = trace_json(rep.tr0);
  r.result["tr1"] = trace_json(rep.tr1);
  r.result["tr2"] = trace_json(rep.tr2);
  r.result["eis_dim"] = to_string(rep.eis_dim);
  for (const auto& p : rep.provenance) r.provenance[p.ingredient] = p.source;
  if (N == 1) r.provenance["bracket"] = std::string(to_string(bracket));
  r.warnings = rep.warnings;
  return r;
}

// ------------------------------------------------------------ the runner

struct Options {
  std::string format = "json";
  std::int64_t d = 0, N = 0, p = 0;
  unsigned n = 1;
  long k = 0;
  std::string involution = "sigma";
  std::string bracket = std::string(to_string(kDefaultBracket));
  std::string variant = std::string(to_string(kDefaultCharacter));
  std::string s_rule = "odd";
  std::string emit_matrix;
  std::vector<std::int64_t> d_list, N_list;
  std::vector<long> k_list;
  std::string table_kind = "bound";
  std::string suite = "all";
  std::string input = "-";
  std::int64_t lo = -100, hi = -2;
  std::vector<unsigned> n_list;
  std::string floor = "0";
};

std::vector<std::string> echo_argv(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format") {
      ++i;
      continue;
    }
    if (args[i].rfind("--format=", 0) == 0) continue;
    out.push_back(args[i]);
  }
  return out;
}

int replay(const std::string& input, std::ostream& out, std::ostream& err);

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Lefschetz numbers, Eisenstein traces and cuspidal lower bounds for Bianchi groups"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "json (one record per line), csv or tex")
      ->check(CLI::IsMember({"json", "csv", "tex"}));

  auto* field = app.add_subcommand("field", "invariants of Q(sqrt d)");
  field->add_option("--d", o.d)->required();

  auto* lef = app.add_subcommand("lefschetz", "Lefschetz numbers");
  lef->require_subcommand(1);
  auto* principal = lef->add_subcommand("principal", "L(sigma, Gamma(N), E_{k,k})");
  principal->add_option("--d", o.d)->required();
  principal->add_option("--N", o.N)->required();
  principal->add_option("--k", o.k)->required();
  principal->add_option("--involution", o.involution);
  principal->add_option("--s-rule", o.s_rule, "odd | ramified-odd")
      ->check(CLI::IsMember({"odd", "ramified-odd"}));
  auto* level_one = lef->add_subcommand("level-one", "L(rho, SL2(O), E_{k,k})");
  level_one->add_option("--d", o.d)->required();
  level_one->add_option("--k", o.k)->required();
  level_one->add_option("--involution", o.involution)->required();
  level_one->add_option("--bracket", o.bracket);

  auto* eis = app.add_subcommand("eisenstein", "Eisenstein cohomology traces");
  eis->require_subcommand(1);
  auto* h2 = eis->add_subcommand("h2", "trace on H^2_Eis(Gamma(N), E_{k,k})");
  h2->add_option("--d", o.d)->required();
  h2->add_option("--N", o.N)->required();
  h2->add_option("--k", o.k)->required();
  h2->add_option("--involution", o.involution)->required();
  auto* h1 = eis->add_subcommand("h1", "trace of sigma on H^1_Eis(Gamma(p^n), C)");
  h1->add_option("--d", o.d)->required();
  h1->add_option("--p", o.p)->required();
  h1->add_option("--n", o.n)->required();

  auto* cusps = app.add_subcommand("cusps", "cusp count by formula and by SL2 enumeration");
  cusps->add_option("--d", o.d)->required();
  cusps->add_option("--N", o.N)->required();

  auto* sczech = app.add_subcommand("sczech", "sigma on the span of the Sczech cocycles");
  sczech->add_option("--d", o.d)->required();
  sczech->add_option("--N", o.N)->required();
  sczech->add_option("--variant", o.variant);
  sczech->add_option("--emit-matrix", o.emit_matrix, "write rows 'i j re im' to this path");

  auto* bound = app.add_subcommand("bound", "lower bound for dim H^1_cusp");
  bound->add_option("--d", o.d)->required();
  bound->add_option("--N", o.N)->required();
  bound->add_option("--k", o.k)->required();
  bound->add_option("--involution", o.involution);
  bound->add_option("--bracket", o.bracket, "level one only");

  auto* gl2 = app.add_subcommand("gl2", "trace of sigma on H^1(GL2(O), E_{k,k})");
  gl2->add_option("--d", o.d)->required();
  gl2->add_option("--k", o.k)->required();
  gl2->add_option("--bracket", o.bracket);

  auto* table = app.add_subcommand("table", "grid of records");
  table->add_option("--d-list", o.d_list)->required()->delimiter(',');
  table->add_option("--N-list", o.N_list)->required()->delimiter(',');
  table->add_option("--k-list", o.k_list)->required()->delimiter(',');
  table->add_option("--kind", o.table_kind, "bound | lefschetz | h2-sigma | h2-tau | cusps")
      ->check(CLI::IsMember({"bound", "lefschetz", "h2-sigma", "h2-tau", "cusps"}));
  table->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "tex"}));

  auto* scan = app.add_subcommand("scan", "growth scans");
  scan->require_subcommand(1);
  auto* scan_level = scan->add_subcommand("level", "sigma bound on Gamma(p^n) against p^(3n)");
  scan_level->add_option("--d", o.d)->required();
  scan_level->add_option("--p", o.p)->required();
  scan_level->add_option("--n-list", o.n_list)->required()->delimiter(',');
  scan_level->add_option("--k", o.k);
  scan_level->add_option("--floor", o.floor, "rational lower floor for the ratio");
  auto* scan_weight = scan->add_subcommand("weight", "L(sigma, Gamma(N)) against k+1");
  scan_weight->add_option("--d", o.d)->required();
  scan_weight->add_option("--N", o.N)->required();
  scan_weight->add_option("--k-list", o.k_list)->required()->delimiter(',');
  auto* scan_disc = scan->add_subcommand("discriminant", "level-one bound against phi(|D|)");
  scan_disc->add_option("--lo", o.lo);
  scan_disc->add_option("--hi", o.hi);
  scan_disc->add_option("--k", o.k);
  scan_disc->add_option("--bracket", o.bracket);

  auto* verify = app.add_subcommand("verify", "oracle suites");
  verify->add_option("suite", o.suite)
      ->check(CLI::IsMember({"symbols", "classgroup", "cusps", "fixedpoints", "sczech",
                             "integrality", "anchors", "all"}));

  auto* replay_cmd = app.add_subcommand("replay", "re-run json records and compare");
  replay_cmd->add_option("--input", o.input, "json-lines file, - for stdin");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  const Format format = o.format == "csv" ? Format::csv
                        : o.format == "tex" ? Format::tex
                                            : Format::json_lines;
  const std::vector<std::string> argv = echo_argv(args);
  std::vector<Record> records;
  auto base = [&](const std::string& command) {
    Record r;
    r.query["command"] = command;
    r.query["argv"] = argv;
    return r;
  };
  int status = kExitOk;

  if (*field) {
    Record r = base("field");
    r.query["d"] = o.d;
    const QuadField f = make_field(o.d);
    r.field = field_block(f);
    r.result["kind"] = "field";
    r.result["omega_trace"] = f.omega().trace;
    r.result["omega_norm"] = f.omega().norm;
    r.result["class_number"] = std::to_string(f.class_number());
    r.result["two_torsion"] = std::to_string(two_torsion_count(f));
    r.provenance["class_number"] = "reduced binary quadratic forms";
    r.provenance["two_torsion"] = "genus theory 2^(t-1)";
    records.push_back(std::move(r));
  } else if (*principal) {
    Record r = base("lefschetz principal");
    r.query["d"] = o.d;
    r.query["N"] = o.N;
    r.query["k"] = o.k;
    r.query["involution"] = o.involution;
    r.query["s_rule"] = o.s_rule;
    require(parse_involution(o.involution) == Involution::sigma,
            "lefschetz principal: only sigma has a principal-level formula");
    const QuadField f = make_field(o.d);
    r.field = field_block(f);
    const Level level = make_level(
        f, o.N, o.s_rule == "odd" ? SRule::odd_level_primes : SRule::ramified_odd_level_primes);
    r.result["kind"] = "lefschetz";
    r.result["value"] = to_string(lefschetz_sigma_principal(f, level, o.k));
    r.result["A"] = to_string(level.A);
    r.result["B"] = to_string(level.B);
    r.result["j2"] = level.j2;
    r.result["s"] = level.s;
    r.result["validated"] = level.validated;
    r.provenance["L"] = "principal-level Lefschetz number (A + 2B) table";
    if (level.non_integral_ab) r.warnings.push_back("A or B individually non-integral; only A + 2B is used");
    if (!level.validated) r.warnings.push_back("composite level: Lefschetz constant unvalidated");
    records.push_back(std::move(r));
  } else if (*level_one) {
    Record r = base("lefschetz level-one");
    r.query["d"] = o.d;
    r.query["k"] = o.k;
    r.query["involution"] = o.involution;
    r.query["bracket"] = o.bracket;
    const QuadField f = make_field(o.d);
    r.field = field_block(f);
    const auto L = lefschetz_level_one(f, parse_involution(o.involution), o.k,
                                       parse_bracket_or_throw(o.bracket));
    r.result["kind"] = "lefschetz";
    r.result["value"] = to_string(L.value);
    r.result["integral"] = L.integral();
    json terms = json::array();
    for (const auto& t : L.terms) terms.push_back(to_string(t));
    r.result["terms"] = terms;
    r.provenance["L"] = "level-one Lefschetz formula";
    r.provenance["bracket"] = std::string(to_string(L.variant));
    if (!L.integral()) r.warnings.push_back("non-integral Lefschetz number under this bracket");
    if (o.k % 2 == 1) r.warnings.push_back("odd k: bracket reading unadjudicated");
    records.push_back(std::move(r));
  } else if (*h2) {
    Record r = base("eisenstein h2");
    r.query["d"] = o.d;
    r.query["N"] = o.N;
    r.query["k"] = o.k;
    r.query["involution"] = o.involution;
    const QuadField f = make_field(o.d);
    r.field = field_block(f);
    const Involution inv = parse_involution(o.involution);
    r.result["kind"] = "trace_h2_eis";
    if (inv == Involution::sigma) {
      r.result["value"] = to_string(trace_sigma_h2_eis(f, o.N, o.k));
      r.provenance["trace"] = "sigma-fixed boundary cosets p^(2n) - p^(2n-2)";
    } else {
      r.result["value"] = to_string(trace_tau_h2_eis(f, o.N, o.k));
      r.provenance["trace"] = "tau-fixed boundary cosets p^(2n-1) - p^(2n-2)";
      if (o.N >= 3) {
        for (const auto& c : tau_census_crosscheck(f, o.N)) {
          if (!c.match()) {
            r.warnings.push_back("tau coset census at p=" + std::to_string(c.p) + ": " +
                                 to_string(c.census) + " vs closed form " + to_string(c.formula));
          }
        }
      }
    }
    records.push_back(std::move(r));
  } else if (*h1) {
    Record r = base("eisenstein h1");
    r.query["d"] = o.d;
    r.query["p"] = o.p;
    r.query["n"] = o.n;
    const QuadField f = make_field(o.d);
    r.field = field_block(f);
    r.result["kind"] = "trace_h1_eis";
    r.result["value"] = to_string(trace_sigma_h1_eis(f, o.p, o.n));
    r.provenance["trace"] = "Sczech cocycles, class number one and inert p";
    records.push_back(std::move(r));
  } else if (*cusps) {
    Record r = base("cusps");
    r.query["d"] = o.d;
    r.query["N"] = o.N;
    const QuadField f = make_field(o.d);
    r.field = field_block(f);
    const BigInt formula = cusp_count(f, o.N);
    const BigInt order = memoized("sl2_d" + key_suffix(o.d) + "_N" + std::to_string(o.N),
                                  [&] { return sl2_order(FiniteRing(f, o.N)); });
    const BigInt brute = BigInt(f.class_number()) * order / (BigInt(o.N) * o.N);
    r.result["kind"] = "cusps";
    r.result["value"] = to_string(formula);
    r.result["sl2_order"] = to_string(order);
    r.result["enumerated"] = to_string(brute);
    r.result["match"] = formula == brute;
    r.provenance["value"] = "h(K) N^4 prod (1 - Np^-2)";
    r.provenance["enumerated"] = o.N * o.N <= kExhaustiveRingSize
                                     ? "exhaustive SL2(O/N) count"
                                     : "closed SL2(O/N) order";
    if (formula != brute) r.warnings.push_back("cusp formula disagrees with the SL2 count");
    records.push_back(std::move(r));
  } else if (*sczech) {
    Record r = base("sczech");
    r.query["d"] = o.d;
    r.query["N"] = o.N;
    r.query["variant"] = o.variant;
    if (!o.emit_matrix.empty()) r.query["emit_matrix"] = o.emit_matrix;
    const QuadField f = make_field(o.d);
    r.field = field_block(f);
    const CharacterVariant variant = parse_character_or_throw(o.variant);
    const SczechOperator op = sczech_operator(f, o.N, variant);
    const auto tr = op.trace();
    const double defect = op.involution_defect();
    std::ostringstream re, im, def;
    re.precision(17);
    im.precision(17);
    def.precision(17);
    re << tr.real();
    im << tr.imag();
    def << defect;
    r.result["kind"] = "sczech_trace";
    r.result["value"] = re.str();
    r.result["imag"] = im.str();
    r.result["expected"] = std::to_string(-(o.N * o.N + 1));
    r.result["involution_defect"] = def.str();
    r.result["dimension"] = op.dimension();
    r.provenance["variant"] = std::string(to_string(variant));
    r.provenance["class_function"] = character_is_class_function(f, o.N, variant);
    if (std::abs(tr.imag()) >= 1e-9) r.warnings.push_back("trace has a nonzero imaginary part");
    if (defect >= kSczechInvolutionTolerance) r.warnings.push_back("matrix is not an involution");
    if (std::abs(tr.real() + static_cast<double>(o.N * o.N + 1)) >= kSczechTraceTolerance) {
      r.warnings.push_back("trace differs from -(N^2 + 1)");
    }
    if (!o.emit_matrix.empty()) {
      std::ofstream file(o.emit_matrix);
      require(static_cast<bool>(file), "sczech: cannot open " + o.emit_matrix);
      op.dump(file);
    }
    records.push_back(std::move(r));
  } else if (*bound) {
    const QuadField f = make_field(o.d);
    const BracketVariant bracket = parse_bracket_or_throw(o.bracket);
    Record r = bound_record(f, o.N, o.k, parse_involution(o.involution), bracket);
    Record q = base("bound");
    r.query = q.query;
    r.query["d"] = o.d;
    r.query["N"] = o.N;
    r.query["k"] = o.k;
    r.query["involution"] = o.involution;
    if (o.N == 1) r.query["bracket"] = o.bracket;
    records.push_back(std::move(r));
  } else if (*gl2) {
    Record r = base("gl2");
    r.query["d"] = o.d;
    r.query["k"] = o.k;
    r.query["bracket"] = o.bracket;
    const QuadField f = make_field(o.d);
    r.field = field_block(f);
    const auto tr = gl2_trace_sigma1(f, o.k, parse_bracket_or_throw(o.bracket));
    r.result["kind"] = "gl2_trace";
    r.result["value"] = to_string(tr.value);
    r.result["integral"] = tr.integral;
    if (tr.integral) r.result["lower_bound"] = to_string(gl2_lower_bound(f, o.k, tr.variant));
    r.provenance["trace"] = "-(L(tau) + L(sigma) + 2^t - 4 delta(k,0))/4";
    r.provenance["bracket"] = std::string(to_string(tr.variant));
    if (!tr.adjudicated) r.warnings.push_back("unadjudicated: odd k");
    if (!tr.integral) r.warnings.push_back("non-integral trace; no lower bound");
    records.push_back(std::move(r));
  } else if (*table) {
    for (std::int64_t d : o.d_list) {
      for (std::int64_t N : o.N_list) {
        for (long k : o.k_list) {
          Record r;
          try {
            const QuadField f = make_field(d);
            if (o.table_kind == "bound") {
              r = bound_record(f, N, k, Involution::sigma, kDefaultBracket);
            } else {
              r.field = field_block(f);
              r.result["kind"] = o.table_kind;
              if (o.table_kind == "lefschetz") {
                r.result["value"] = to_string(lefschetz_sigma_principal(f, make_level(f, N), k));
              } else if (o.table_kind == "h2-sigma") {
                r.result["value"] = to_string(trace_sigma_h2_eis(f, N, k));
              } else if (o.table_kind == "h2-tau") {
                r.result["value"] = to_string(trace_tau_h2_eis(f, N, k));
              } else {
                r.result["value"] = to_string(cusp_count(f, N));
              }
            }
          } catch (const std::exception& e) {
            r.result = json{{"kind", o.table_kind}, {"value", ""}};
            r.warnings.push_back(std::string("not computed: ") + e.what());
          }
          Record q = base("table");
          r.query = q.query;
          r.query["kind"] = o.table_kind;
          r.query["d"] = d;
          r.query["N"] = N;
          r.query["k"] = k;
          records.push_back(std::move(r));
        }
      }
    }
  } else if (*scan) {
    GrowthScan g;
    json query = base("scan").query;
    if (*scan_level) {
      const QuadField f = make_field(o.d);
      g = level_growth_scan(f, o.p, o.n_list, o.k, BigRat(o.floor));
      query["kind"] = "level";
      query["d"] = o.d;
      query["p"] = o.p;
      query["k"] = o.k;
      query["floor"] = o.floor;
    } else if (*scan_weight) {
      g = weight_growth_scan(make_field(o.d), o.N, o.k_list);
      query["kind"] = "weight";
      query["d"] = o.d;
      query["N"] = o.N;
    } else {
      g = discriminant_growth_scan(squarefree_discriminants(o.lo, o.hi), o.k,
                                   parse_bracket_or_throw(o.bracket));
      query["kind"] = "discriminant";
      query["lo"] = o.lo;
      query["hi"] = o.hi;
      query["k"] = o.k;
    }
    for (const auto& row : g.rows) {
      Record r;
      r.query = query;
      r.query[g.parameter_name] = row.parameter;
      r.result["kind"] = "growth_row";
      r.result[g.quantity_name] = to_string(row.quantity);
      r.result[g.reference_name] = to_string(row.reference);
      r.result["ratio"] = to_string(row.ratio);
      records.push_back(std::move(r));
    }
    Record summary;
    summary.query = query;
    summary.result["kind"] = "growth_summary";
    summary.result["min_ratio"] = to_string(g.min_ratio);
    summary.result["max_ratio"] = to_string(g.max_ratio);
    summary.result["constant"] = g.constant;
    summary.result["above_floor"] = g.above_floor;
    records.push_back(std::move(summary));
  } else if (*verify) {
    std::vector<std::string> names;
    if (o.suite == "all") {
      names = suite_names();
    } else {
      names.push_back(o.suite);
    }
    for (const auto& name : names) {
      const SuiteResult suite = run_suite(name);
      if (suite.hard_failure()) status = kExitConformance;
      for (const auto& c : suite.checks) {
        Record r = base("verify");
        r.query["suite"] = name;
        r.result["kind"] = "check";
        r.result["check"] = c.name;
        r.result["passed"] = c.passed;
        r.result["hard"] = c.hard;
        r.result["detail"] = c.detail;
        if (!c.passed) {
          r.warnings.push_back(c.hard ? "hard failure" : "conformance diagnostic (not fatal)");
        }
        records.push_back(std::move(r));
      }
    }
  } else if (*replay_cmd) {
    return replay(o.input, out, err);
  }

  emit(records, format, out);
  return status;
}

int replay(const std::string& input, std::ostream& out, std::ostream& err) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (input != "-") {
    file.open(input);
    require(static_cast<bool>(file), "replay: cannot open " + input);
    in = &file;
  }
  std::map<std::string, std::vector<std::string>> rerun;
  std::map<std::string, std::size_t> cursor;
  std::size_t total = 0, mismatched = 0;
  std::string line;
  while (std::getline(*in, line)) {
    if (line.empty()) continue;
    ++total;
    const json record = json::parse(line);
    const auto argv = record.at("query").at("argv").get<std::vector<std::string>>();
    const std::string key = json(argv).dump();
    if (!rerun.contains(key)) {
      std::ostringstream fresh, sink;
      run_impl(argv, fresh, sink);
      std::vector<std::string> lines;
      std::istringstream split(fresh.str());
      for (std::string l; std::getline(split, l);) lines.push_back(l);
      rerun[key] = std::move(lines);
    }
    const auto& lines = rerun[key];
    const std::size_t i = cursor[key]++;
    if (i >= lines.size() || lines[i] != line) {
      ++mismatched;
      err << "replay mismatch for " << key << "\n";
    }
  }
  json summary;
  summary["query"] = json{{"command", "replay"}, {"input", input}};
  summary["result"] = json{{"kind", "replay"}, {"records", total}, {"mismatched", mismatched}};
  out << summary.dump() << '\n';
  return mismatched == 0 ? kExitOk : kExitConformance;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_impl(args, out, err);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ConformanceError& e) {
    err << "conformance failure: " << e.what() << '\n';
    return kExitConformance;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed record: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace bianchi::cli
